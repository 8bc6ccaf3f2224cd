//! JSON reports. Sections are built from the module results with fixed key
//! order, so the same input always serializes to the same bytes.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::admissibility::{farkas_certificate, is_admissible, AreaCertificate, Witness};
use crate::diagram::{intersection_matrix, validate, SuturedDiagram};
use crate::floer::{classify, differential, is_nice, FloerError, Tristate};
use crate::generators::{count_generators_permanent, enumerate_generators};
use crate::lattice::{h1_order, h1_rel_trivial, periodic_domain_basis, presents_closed_manifold, DomainVector, H1Order};
use crate::tangle::shi_upper_bound;

/// Ordered sections of a report; the names used by [`Report::section`].
pub const SECTION_ORDER: [&str; 8] =
    ["validation", "lattice", "admissibility", "generators", "tangle", "bound", "floer", "classification"];

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub tool_version: String,
    pub diagram_name: String,
    pub sections: Map<String, Value>,
}

impl Report {
    pub fn new(tool_version: &str, diagram_name: &str) -> Self {
        Report { tool_version: tool_version.into(), diagram_name: diagram_name.into(), sections: Map::new() }
    }

    /// Add a section by name; unknown names panic.
    pub fn section(mut self, d: &SuturedDiagram, name: &str) -> Self {
        let value = match name {
            "validation" => validation_section(d),
            "lattice" => lattice_section(d),
            "admissibility" => admissibility_section(d),
            "generators" => generators_section(d),
            "tangle" | "bound" => tangle_section(d),
            "floer" => floer_section(d),
            "classification" => classification_section(d),
            other => panic!("unknown report section {other}"),
        };
        self.sections.insert(name.into(), value);
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "tool_version": self.tool_version,
            "diagram_name": self.diagram_name,
            "sections": Value::Object(self.sections.clone()),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report serializes");
        s.push('\n');
        s
    }
}

fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn rational(r: Rational64) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn h1_value(h: &H1Order) -> Value {
    match h {
        H1Order::Finite(n) => big(n),
        H1Order::Infinite => json!("infinite"),
    }
}

/// `{region-id: multiplicity}` over all interior regions.
pub fn region_map(d: &SuturedDiagram, values: &[i64]) -> Value {
    let map: Map<String, Value> = d.interior_ids().into_iter().zip(values).map(|(id, &v)| (id.to_string(), json!(v))).collect();
    Value::Object(map)
}

fn domain(d: &SuturedDiagram, v: &DomainVector) -> Value {
    region_map(d, &v.0)
}

fn certificate(d: &SuturedDiagram, c: &AreaCertificate) -> Value {
    region_map(d, &c.areas)
}

pub fn validation_section(d: &SuturedDiagram) -> Value {
    let report = validate(d);
    json!({ "valid": report.is_valid(), "violations": report.violations })
}

pub fn lattice_section(d: &SuturedDiagram) -> Value {
    let lattice = periodic_domain_basis(d);
    let m = intersection_matrix(d);
    json!({
        "interior_regions": d.interior_ids(),
        "rank": lattice.rank,
        "basis": lattice.basis.iter().map(|p| domain(d, p)).collect::<Vec<_>>(),
        "h1_rel_trivial": h1_rel_trivial(d),
        "intersection_matrix": m.unsigned,
        "signed_intersection_matrix": m.signed,
        "h1_order": h1_value(&h1_order(d)),
        "h1_applicable": presents_closed_manifold(d),
    })
}

pub fn admissibility_section(d: &SuturedDiagram) -> Value {
    let verdict = is_admissible(d);
    let (cert, witness) = match &verdict.witness {
        Witness::Certificate(c) => (certificate(d, c), Value::Null),
        Witness::NonNegativeDomain(w) => (Value::Null, domain(d, w)),
    };
    json!({
        "admissible": verdict.admissible,
        "certificate": cert,
        "witness": witness,
        "farkas_agrees": farkas_certificate(d).is_some() == verdict.admissible,
    })
}

pub fn generators_section(d: &SuturedDiagram) -> Value {
    let gens = enumerate_generators(d);
    json!({
        "count": gens.len(),
        "permanent": big(&count_generators_permanent(d)),
        "generators": gens.iter().map(|g| g.ids(d)).collect::<Vec<_>>(),
    })
}

pub fn tangle_section(d: &SuturedDiagram) -> Value {
    let r = shi_upper_bound(d);
    json!({
        "admissible": r.admissible,
        "bound": r.bound,
        "generator_count": r.generator_count,
        "sign_assignment_count": r.sign_assignment_count,
        "bijection": r.bijection_holds(),
        "certificate": r.certificate.as_ref().map(|c| certificate(d, c)),
        "total_strands": r.tangle.as_ref().map(|t| t.total_strands),
        "null_homologous": r.null_homologous,
        "witness": r.witness.as_ref().map(|w| domain(d, w)),
    })
}

pub fn floer_error_value(e: &FloerError) -> Value {
    let kind = match e {
        FloerError::NotNice { .. } => "not-nice",
        FloerError::NotAdmissible { .. } => "not-admissible",
        FloerError::NotConnecting => "not-connecting",
        FloerError::NonzeroSquare => "nonzero-square",
    };
    json!({ "kind": kind, "message": e.to_string() })
}

pub fn floer_section(d: &SuturedDiagram) -> Value {
    match differential(d) {
        Ok(c) => {
            let label = |i: usize| c.generators[i].label(d);
            json!({
                "nice": true,
                "generators": c.generators.iter().map(|g| g.label(d)).collect::<Vec<_>>(),
                "differential": c.entries().into_iter().map(|(y, x)| format!("{} <- {}", label(y), label(x))).collect::<Vec<_>>(),
                "differential_rank": c.rank_of_differential(),
                "sfh_rank": c.homology_rank(),
                "domains": c.domains.iter().map(|r| json!({
                    "from": label(r.from),
                    "to": label(r.to),
                    "domain": domain(d, &r.domain),
                    "euler_measure": rational(r.euler),
                    "n_x": rational(r.n_x),
                    "n_y": rational(r.n_y),
                })).collect::<Vec<_>>(),
                "error": Value::Null,
            })
        }
        Err(e) => json!({ "nice": is_nice(d), "sfh_rank": Value::Null, "error": floer_error_value(&e) }),
    }
}

fn tristate(t: Tristate) -> Value {
    match t {
        Tristate::Yes => json!(true),
        Tristate::No => json!(false),
        Tristate::Unknown => json!("unknown"),
    }
}

pub fn classification_section(d: &SuturedDiagram) -> Value {
    let c = classify(d);
    json!({
        "admissible": c.admissible,
        "nice": c.nice,
        "generator_count": c.generator_count,
        "strong_diagram": tristate(c.strong_diagram),
        "sfh_rank": c.sfh_rank,
        "h1": h1_value(&c.h1),
        "h1_applicable": c.h1_applicable,
        "strong_lspace_witness": c.strong_lspace_witness,
        "implied_instanton_bound": c.implied_instanton_bound,
        "statements": c.statements,
    })
}

/// Report with every section.
pub fn full_report(tool_version: &str, d: &SuturedDiagram) -> Report {
    SECTION_ORDER.iter().filter(|&&s| s != "bound").fold(Report::new(tool_version, d.name()), |r, s| r.section(d, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn rp3_bound_section() {
        let d = corpus::load("rp3").unwrap();
        let r = Report::new("0", "rp3").section(&d, "bound");
        assert_eq!(r.sections["bound"]["bound"], json!(2));
    }

    #[test]
    fn full_reports_are_deterministic() {
        for e in corpus::entries() {
            let d = e.diagram();
            assert_eq!(full_report("0", &d).to_json(), full_report("0", &d).to_json());
        }
    }

    #[test]
    fn region_maps_keep_region_order() {
        let d = corpus::load("s1s2-admissible").unwrap();
        let v = lattice_section(&d);
        assert_eq!(serde_json::to_string(&v["basis"]).unwrap(), r#"[{"B1":1,"B2":-1}]"#);
    }
}
