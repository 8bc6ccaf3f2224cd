//! Periodic domains and the homological quantities read off the diagram.
//!
//! A domain assigns an integer multiplicity to each interior region. The
//! coefficient of its boundary on an arc is the multiplicity of the region
//! to the arc's left minus that of the region to its right (outer regions
//! count as zero). A domain is periodic when this coefficient is constant
//! along every α and β curve.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::diagram::{intersection_matrix, CurveRef, SuturedDiagram};
use crate::linalg::{self, IntMatrix};

/// Integer multiplicities on the interior regions of a diagram, indexed by
/// [`SuturedDiagram::interior_regions`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DomainVector(pub Vec<i64>);

impl DomainVector {
    pub fn zero(n: usize) -> Self {
        DomainVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Self {
        DomainVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        DomainVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Multiplicity of a region of the diagram (0 for outer regions).
    pub fn at_region(&self, d: &SuturedDiagram, region: usize) -> i64 {
        d.interior_ordinal(region).map_or(0, |o| self.0[o])
    }

    /// Nonzero entries as `(region id, multiplicity)` in region order.
    pub fn named<'a>(&self, d: &'a SuturedDiagram) -> Vec<(&'a str, i64)> {
        d.interior_regions()
            .iter()
            .zip(&self.0)
            .filter(|(_, &c)| c != 0)
            .map(|(&r, &c)| (d.regions()[r].id.as_str(), c))
            .collect()
    }

    pub(crate) fn from_big(v: &[BigInt]) -> Self {
        DomainVector(v.iter().map(|x| x.to_i64().expect("multiplicity fits in i64")).collect())
    }

    pub fn to_big(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicLattice {
    pub basis: Vec<DomainVector>,
    pub rank: usize,
}

impl PeriodicLattice {
    pub fn big_basis(&self) -> Vec<Vec<BigInt>> {
        self.basis.iter().map(DomainVector::to_big).collect()
    }
}

/// Boundary coefficient of `domain` on every arc of the diagram.
pub fn arc_coefficients(d: &SuturedDiagram, domain: &DomainVector) -> Vec<i64> {
    d.arcs()
        .iter()
        .map(|arc| {
            let l = arc.left.map_or(0, |r| domain.at_region(d, r));
            let r = arc.right.map_or(0, |r| domain.at_region(d, r));
            l - r
        })
        .collect()
}

fn all_curves(d: &SuturedDiagram) -> impl Iterator<Item = CurveRef> + '_ {
    (0..d.alpha_count())
        .map(CurveRef::alpha)
        .chain((0..d.beta_count()).map(CurveRef::beta))
}

/// Multiplicity of each whole curve in `∂domain`, or `None` if the boundary
/// is not constant along some curve (the domain is not periodic).
pub fn curve_multiplicities(d: &SuturedDiagram, domain: &DomainVector) -> Option<Vec<(CurveRef, i64)>> {
    let coeffs = arc_coefficients(d, domain);
    all_curves(d)
        .map(|c| {
            let arcs = d.curve_arcs(c);
            let first = coeffs[arcs[0]];
            arcs.iter().all(|&a| coeffs[a] == first).then_some((c, first))
        })
        .collect()
}

pub fn is_periodic(d: &SuturedDiagram, domain: &DomainVector) -> bool {
    curve_multiplicities(d, domain).is_some()
}

/// Homogeneous system whose integer solutions are the periodic domains: for
/// each curve with arcs `a_0..a_{m-1}`, the rows `coef(a_i) − coef(a_0)`.
pub fn constraint_matrix(d: &SuturedDiagram) -> IntMatrix {
    let n = d.interior_regions().len();
    let row_of = |a: usize| -> Vec<i64> {
        let arc = &d.arcs()[a];
        let mut row = vec![0i64; n];
        if let Some(o) = arc.left.and_then(|r| d.interior_ordinal(r)) {
            row[o] += 1;
        }
        if let Some(o) = arc.right.and_then(|r| d.interior_ordinal(r)) {
            row[o] -= 1;
        }
        row
    };
    let mut rows = Vec::new();
    for c in all_curves(d) {
        let arcs = d.curve_arcs(c);
        let base = row_of(arcs[0]);
        for &a in &arcs[1..] {
            let row = row_of(a);
            rows.push(row.iter().zip(&base).map(|(x, y)| BigInt::from(x - y)).collect());
        }
    }
    rows
}

/// Canonical lattice basis of the periodic domains.
pub fn periodic_domain_basis(d: &SuturedDiagram) -> PeriodicLattice {
    let n = d.interior_regions().len();
    let kernel = linalg::integer_kernel(&constraint_matrix(d), n);
    let basis: Vec<DomainVector> = kernel.iter().map(|v| DomainVector::from_big(v)).collect();
    PeriodicLattice { rank: basis.len(), basis }
}

/// True iff there are no nontrivial periodic domains, i.e. H₁(M, ∂M; ℚ) = 0.
pub fn h1_rel_trivial(d: &SuturedDiagram) -> bool {
    periodic_domain_basis(d).rank == 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigInt),
    Infinite,
}

impl std::fmt::Display for H1Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// |det| of the signed intersection matrix, the order of H₁(Y) when the
/// diagram presents Y(1) for a closed Y.
pub fn h1_order(d: &SuturedDiagram) -> H1Order {
    let signed = intersection_matrix(d).signed;
    let det = linalg::determinant(&linalg::to_big(&signed));
    if det.is_zero() {
        H1Order::Infinite
    } else {
        H1Order::Finite(det.abs())
    }
}

/// Whether `h1_order` is meaningful: a Y(1) diagram has one boundary component.
pub fn presents_closed_manifold(d: &SuturedDiagram) -> bool {
    d.boundary_components() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn s3_has_no_periodic_domains() {
        let d = corpus::load("s3").unwrap();
        let l = periodic_domain_basis(&d);
        assert_eq!(l.rank, 0);
        assert!(h1_rel_trivial(&d));
        assert_eq!(h1_order(&d), H1Order::Finite(BigInt::from(1)));
    }

    #[test]
    fn remark_annulus_is_periodic() {
        let d = corpus::load("s1s2-inadmissible").unwrap();
        let l = periodic_domain_basis(&d);
        assert_eq!(l.rank, 1);
        assert_eq!(l.basis[0].named(&d), vec![("R_int", 1)]);
        assert!(!h1_rel_trivial(&d));
        let mults = curve_multiplicities(&d, &l.basis[0]).unwrap();
        assert!(mults.iter().all(|&(_, m)| m.abs() == 1));
    }

    #[test]
    fn admissible_s1s2_lattice() {
        let d = corpus::load("s1s2-admissible").unwrap();
        let l = periodic_domain_basis(&d);
        assert_eq!(l.rank, 1);
        assert_eq!(l.basis[0].named(&d), vec![("B1", 1), ("B2", -1)]);
        assert_eq!(h1_order(&d), H1Order::Infinite);
    }

    #[test]
    fn rp3_is_a_rational_homology_sphere() {
        let d = corpus::load("rp3").unwrap();
        assert!(h1_rel_trivial(&d));
        assert_eq!(h1_order(&d), H1Order::Finite(BigInt::from(2)));
    }

    #[test]
    fn lens_orders() {
        for p in 2..=5 {
            let d = corpus::load(&format!("lens{p}")).unwrap();
            assert_eq!(h1_order(&d), H1Order::Finite(BigInt::from(p)));
            assert!(h1_rel_trivial(&d));
        }
    }

    #[test]
    fn non_periodic_domain_is_detected() {
        let d = corpus::load("s1s2-admissible").unwrap();
        assert!(!is_periodic(&d, &DomainVector(vec![1, 0])));
        assert!(is_periodic(&d, &DomainVector(vec![-2, 2])));
    }

    #[test]
    fn rank_matches_rational_elimination() {
        for entry in corpus::entries() {
            let d = entry.diagram();
            let c = constraint_matrix(&d);
            let n = d.interior_regions().len();
            let expected = n - linalg::rational_rank(&c);
            assert_eq!(periodic_domain_basis(&d).rank, expected, "{}", entry.name);
        }
    }
}
