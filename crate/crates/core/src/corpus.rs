//! The bundled diagram corpus.
//!
//! Every file is generated from [`crate::builders`] by
//! `cargo run -p shd-core --example write_corpus`, and a test checks that the
//! bundled text is still exactly what the builders produce.

use crate::builders;
use crate::diagram::{parse_diagram, SuturedDiagram};

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub description: &'static str,
}

impl CorpusEntry {
    pub fn file_name(&self) -> String {
        format!("{}.shd", self.name)
    }

    pub fn diagram(&self) -> SuturedDiagram {
        parse_diagram(self.text).expect("bundled corpus parses")
    }
}

macro_rules! entry {
    ($name:literal, $description:literal) => {
        CorpusEntry {
            name: $name,
            text: include_str!(concat!("../corpus/", $name, ".shd")),
            description: $description,
        }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!("ball", "disk without curves: the product sutured 3-ball"),
    entry!("s3", "S^3 minus a ball, genus one, one intersection point"),
    entry!("s3-finger", "S^3 minus a ball after a finger move; nonzero differential"),
    entry!("rp3", "RP^3 minus a ball (alpha = (1,0), beta = (2,1))"),
    entry!("lens2", "L(2,1) minus a ball"),
    entry!("lens3", "L(3,1) minus a ball"),
    entry!("lens4", "L(4,1) minus a ball"),
    entry!("lens5", "L(5,1) minus a ball"),
    entry!("lens5-knot", "(1,1) diagram of a simple knot in L(5,1), two sutures"),
    entry!("s1s2-inadmissible", "S^1 x S^2 minus a ball with disjoint alpha and beta"),
    entry!("s1s2-admissible", "S^1 x S^2 minus a ball after a finger move: two bigons"),
    entry!("unknot-grid", "3x3 grid diagram of the unknot, six sutures"),
    entry!("trefoil-grid", "5x5 grid diagram of the trefoil, ten sutures"),
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

/// Look up an entry by name, with or without a directory or `.shd` suffix.
pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    let base = name.rsplit(['/', '\\']).next().unwrap_or(name);
    let base = base.strip_suffix(".shd").unwrap_or(base);
    ENTRIES.iter().find(|e| e.name == base)
}

pub fn text(name: &str) -> Option<&'static str> {
    find(name).map(|e| e.text)
}

pub fn load(name: &str) -> Option<SuturedDiagram> {
    find(name).map(CorpusEntry::diagram)
}

/// The diagrams the corpus files are generated from, in corpus order.
pub fn reference_diagrams() -> Vec<SuturedDiagram> {
    let grid = |name, xs: &[usize], os: &[usize]| builders::grid(name, xs, os).expect("valid grid");
    vec![
        builders::ball(),
        builders::lens_space("s3", 1),
        builders::s3_finger(),
        builders::lens_space("rp3", 2),
        builders::lens_space("lens2", 2),
        builders::lens_space("lens3", 3),
        builders::lens_space("lens4", 4),
        builders::lens_space("lens5", 5),
        builders::lens_knot("lens5-knot", 5, 2),
        builders::s1s2_inadmissible(),
        builders::s1s2_admissible(),
        grid("unknot-grid", &[0, 1, 2], &[1, 2, 0]),
        grid("trefoil-grid", &[0, 1, 2, 3, 4], &[2, 3, 4, 0, 1]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::serialize;

    #[test]
    fn bundled_files_match_builders() {
        let built = reference_diagrams();
        assert_eq!(built.len(), ENTRIES.len());
        for (d, e) in built.iter().zip(ENTRIES) {
            assert_eq!(d.name(), e.name);
            assert_eq!(serialize(d), e.text, "{} is stale; regenerate the corpus", e.name);
        }
    }

    #[test]
    fn lookup_accepts_paths() {
        assert_eq!(find("corpus/rp3.shd").unwrap().name, "rp3");
        assert_eq!(find("rp3").unwrap().name, "rp3");
        assert!(find("nope").is_none());
    }
}
