use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{Side, SuturedDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// |α| ≠ |β|.
    Balance,
    /// A point is not on exactly one α and one β curve.
    PointIncidence,
    /// A side names an arc whose endpoints disagree with the curve's point order.
    CurveOrder,
    /// An arc does not border exactly one region on each side.
    ArcSides,
    OpenBoundaryCycle,
    QuadrantCoverage,
    SignConsistency,
    /// Interior/outer status disagrees with the suture sides.
    RegionKind,
    SutureIndex,
    DuplicateRegion,
    CornerParity,
    EulerCharacteristic,
    Connectivity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(kind: ViolationKind, detail: String) -> Self {
        Violation { kind, detail }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

/// Check every structural invariant of a balanced sutured Heegaard diagram.
/// The report is empty iff the diagram is legal.
pub fn validate(d: &SuturedDiagram) -> ValidationReport {
    let mut out: Vec<Violation> = d.link_issues().to_vec();
    let mut push = |kind, detail: String| out.push(Violation::new(kind, detail));

    if d.alpha_count() != d.beta_count() {
        push(
            ViolationKind::Balance,
            format!("{} alpha curves but {} beta curves", d.alpha_count(), d.beta_count()),
        );
    }

    let mut ids: BTreeMap<&str, usize> = BTreeMap::new();
    for r in d.regions() {
        *ids.entry(r.id.as_str()).or_default() += 1;
    }
    for (id, n) in ids {
        if n > 1 {
            push(ViolationKind::DuplicateRegion, format!("region id {id} used {n} times"));
        }
    }

    let mut suture_uses: BTreeMap<usize, usize> = BTreeMap::new();
    for r in d.regions() {
        let sutures = r.sutures().count();
        for c in r.sutures() {
            *suture_uses.entry(c).or_default() += 1;
        }
        if r.outer && sutures == 0 {
            push(ViolationKind::RegionKind, format!("outer region {} has no suture side", r.id));
        }
        if !r.outer {
            if sutures > 0 {
                push(ViolationKind::RegionKind, format!("interior region {} has a suture side", r.id));
            }
            // Interior regions are 2n-gons; n = 0 only for regions bounded
            // by whole pointless curves.
            let corners = r.corner_count();
            let has_arcs = r.sides.iter().any(|s| matches!(s, Side::Arc { .. }));
            if corners % 2 != 0 || (has_arcs && corners == 0) {
                push(ViolationKind::CornerParity, format!("interior region {} has {} corners", r.id, corners));
            }
        }
    }
    if suture_uses.is_empty() {
        push(ViolationKind::SutureIndex, "the surface has no boundary component".into());
    }
    for (i, (&c, &n)) in suture_uses.iter().enumerate() {
        if c != i {
            push(ViolationKind::SutureIndex, format!("boundary components are not numbered 0..{}", suture_uses.len()));
            break;
        }
        if n > 1 {
            push(ViolationKind::SutureIndex, format!("boundary component {c} appears {n} times"));
        }
    }

    // χ(Σ) = V − E + Σ χ(R), with each region planar.
    let v = d.points().len() as i64;
    let e: i64 = (0..d.alpha_count())
        .map(|i| d.alpha(i).len())
        .chain((0..d.beta_count()).map(|j| d.beta(j).len()))
        .sum::<usize>() as i64;
    let f: i64 = d.regions().iter().map(|r| r.euler_characteristic()).sum();
    let chi = v - e + f;
    let b = suture_uses.len() as i64;
    let twice_genus = 2 - b - chi;
    if b > 0 && (twice_genus < 0 || twice_genus % 2 != 0) {
        push(
            ViolationKind::EulerCharacteristic,
            format!("V - E + F = {chi} with {b} boundary components is not a compact oriented surface"),
        );
    }

    if !d.regions().is_empty() {
        let mut parent: Vec<usize> = (0..d.regions().len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for arc in d.arcs() {
            if let (Some(l), Some(r)) = (arc.left, arc.right) {
                let (a, b) = (find(&mut parent, l), find(&mut parent, r));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        if (0..d.regions().len()).any(|r| find(&mut parent, r) != root) {
            push(ViolationKind::Connectivity, "the regions do not glue to a connected surface".into());
        }
    }

    ValidationReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::diagram::parse_diagram;

    #[test]
    fn whole_corpus_is_valid() {
        for entry in corpus::entries() {
            let report = validate(&entry.diagram());
            assert!(report.is_valid(), "{}: {:?}", entry.name, report.violations);
        }
    }

    #[test]
    fn two_alphas_one_beta_is_unbalanced() {
        let text = r#"{"name": "x", "alpha": [[], []], "beta": [[]], "regions": [
            {"id": "O", "outer": true, "boundary": [{"suture": 0}]}]}"#;
        let report = validate(&parse_diagram(text).unwrap());
        assert!(report.has(ViolationKind::Balance));
    }

    #[test]
    fn corrupted_point_order_is_reported() {
        // The s1s2-admissible bigon B1 with its alpha arc reversed.
        let text = corpus::text("s1s2-admissible").unwrap();
        let corrupted = text.replacen(
            r#""curve": "a1",
          "from": "q1",
          "to": "q2""#,
            r#""curve": "a1",
          "from": "q2",
          "to": "q2""#,
            1,
        );
        assert_ne!(corrupted, text);
        let report = validate(&parse_diagram(&corrupted).unwrap());
        assert!(report.has(ViolationKind::CurveOrder), "{:?}", report.violations);
    }

    #[test]
    fn outer_region_needs_a_suture() {
        let text = r#"{"name": "x", "alpha": [], "beta": [], "regions": [
            {"id": "O", "outer": true, "boundary": []}]}"#;
        let report = validate(&parse_diagram(text).unwrap());
        assert!(report.has(ViolationKind::RegionKind));
        assert!(report.has(ViolationKind::SutureIndex));
    }

    #[test]
    fn interior_region_with_suture_is_reported() {
        let text = r#"{"name": "x", "alpha": [], "beta": [], "regions": [
            {"id": "O", "outer": false, "boundary": [{"suture": 0}]}]}"#;
        let report = validate(&parse_diagram(text).unwrap());
        assert!(report.has(ViolationKind::RegionKind));
    }

    #[test]
    fn one_sided_closed_curve_is_reported() {
        let text = r#"{"name": "x", "alpha": [[]], "beta": [[]], "regions": [
            {"id": "O", "outer": true, "boundary": [
              {"curve": "a1", "closed": true, "orient": 1},
              {"curve": "b1", "closed": true, "orient": 1},
              {"suture": 0}]}]}"#;
        let report = validate(&parse_diagram(text).unwrap());
        assert!(report.has(ViolationKind::ArcSides));
    }

    #[test]
    fn duplicated_suture_and_region_ids() {
        let text = r#"{"name": "x", "alpha": [], "beta": [], "regions": [
            {"id": "O", "outer": true, "boundary": [{"suture": 0}]},
            {"id": "O", "outer": true, "boundary": [{"suture": 0}]}]}"#;
        let report = validate(&parse_diagram(text).unwrap());
        assert!(report.has(ViolationKind::SutureIndex));
        assert!(report.has(ViolationKind::DuplicateRegion));
        assert!(report.has(ViolationKind::Connectivity));
    }

    #[test]
    fn flipped_corner_breaks_sign_consistency() {
        // Swapping the first two sides of the s3 square splits it into two
        // cycles whose corners disagree on the sign of the point.
        let d = corpus::load("s3").unwrap();
        let mut raw = d.to_raw();
        raw.regions[0].sides.swap(0, 1);
        let d = SuturedDiagram::link(raw).unwrap();
        let report = validate(&d);
        assert!(report.has(ViolationKind::SignConsistency), "{:?}", report.violations);
    }
}
