//! Admissibility and positive integer area certificates.
//!
//! A diagram is admissible iff no nontrivial periodic domain is everywhere
//! ≥ 0. With the lattice basis as the columns of `B`, this is infeasibility
//! of `{λ : Bλ ≥ 0, 1ᵀBλ = 1}`; by Farkas duality that happens exactly when
//! some strictly positive area vector `a` has `Bᵀa = 0`, i.e. every periodic
//! domain has zero signed area. Both sides are decided by exact simplex.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::SuturedDiagram;
use crate::lattice::{periodic_domain_basis, DomainVector, PeriodicLattice};
use crate::linalg::{dot, primitive_integer_vector};
use crate::simplex::{solve, LpOutcome, StandardLp};

/// Positive integer areas on the interior regions, indexed like
/// [`DomainVector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaCertificate {
    pub areas: Vec<i64>,
}

impl AreaCertificate {
    fn from_big(v: &[BigInt]) -> Self {
        AreaCertificate { areas: v.iter().map(|x| x.to_i64().expect("area fits in i64")).collect() }
    }

    pub fn named<'a>(&self, d: &'a SuturedDiagram) -> Vec<(&'a str, i64)> {
        d.interior_regions()
            .iter()
            .zip(&self.areas)
            .map(|(&r, &a)| (d.regions()[r].id.as_str(), a))
            .collect()
    }

    pub fn total(&self) -> i64 {
        self.areas.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Certificate(AreaCertificate),
    /// A nontrivial periodic domain with all multiplicities ≥ 0.
    NonNegativeDomain(DomainVector),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdmissibilityError {
    #[error("diagram is not admissible: periodic domain {witness:?} is nonnegative")]
    NotAdmissible { witness: DomainVector },
}

/// Outcome of searching a lattice for a nontrivial nonnegative element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonNegativeSearch {
    /// An integer lattice element, ≥ 0 and nonzero.
    Found(Vec<BigInt>),
    /// Excluded by a Farkas ray: positive integer areas orthogonal to the
    /// lattice.
    Excluded { areas: Vec<BigInt> },
}

fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Decide whether the lattice spanned by `basis` (vectors of length `n`)
/// has a nontrivial element that is ≥ 0 everywhere.
pub fn nonnegative_element(basis: &[Vec<BigInt>], n: usize) -> NonNegativeSearch {
    let r = basis.len();
    // Variables: λ⁺ (r), λ⁻ (r), slack s (n) with Bλ⁺ − Bλ⁻ − s = 0 and
    // 1ᵀB(λ⁺ − λ⁻) = 1.
    let cols = 2 * r + n;
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![BigRational::zero(); cols];
        for (j, v) in basis.iter().enumerate() {
            row[j] = q(&v[i]);
            row[r + j] = -q(&v[i]);
        }
        row[2 * r + i] = -BigRational::one();
        a.push(row);
    }
    let mut total = vec![BigRational::zero(); cols];
    for (j, v) in basis.iter().enumerate() {
        let s: BigInt = v.iter().sum();
        total[j] = q(&s);
        total[r + j] = -q(&s);
    }
    a.push(total);
    let mut b = vec![BigRational::zero(); n];
    b.push(BigRational::one());
    let lp = StandardLp { a, b, c: vec![BigRational::zero(); cols] };

    match solve(&lp) {
        LpOutcome::Optimal { x, .. } => {
            let lambda: Vec<BigRational> = (0..r).map(|j| &x[j] - &x[r + j]).collect();
            let lambda = primitive_integer_vector(&lambda);
            let element = (0..n)
                .map(|i| basis.iter().zip(&lambda).map(|(v, l)| &v[i] * l).sum())
                .collect();
            NonNegativeSearch::Found(element)
        }
        LpOutcome::Infeasible { farkas } => {
            // Farkas ray z: Bᵀ(z_rows + z_total·1) = 0, z_rows ≤ 0, z_total < 0,
            // so a = −(z_rows + z_total·1) is strictly positive and orthogonal.
            let z_total = &farkas[n];
            let areas: Vec<BigRational> = (0..n).map(|i| -(&farkas[i] + z_total)).collect();
            NonNegativeSearch::Excluded { areas: primitive_integer_vector(&areas) }
        }
        LpOutcome::Unbounded => unreachable!("feasibility problem has zero objective"),
    }
}

/// Canonical positive integer areas orthogonal to the lattice, if any.
///
/// Solves `min Σ a_i` over `a ≥ 1, Bᵀa = 0` with Bland's rule, then clears
/// denominators and divides out the common factor.
pub fn positive_orthogonal_areas(basis: &[Vec<BigInt>], n: usize) -> Option<Vec<BigInt>> {
    if basis.is_empty() {
        return Some(vec![BigInt::one(); n]);
    }
    // Substitute a = 1 + u with u ≥ 0.
    let a: Vec<Vec<BigRational>> = basis.iter().map(|v| v.iter().map(q).collect()).collect();
    let b: Vec<BigRational> = basis.iter().map(|v| -q(&v.iter().sum::<BigInt>())).collect();
    let lp = StandardLp { a, b, c: vec![BigRational::one(); n] };
    match solve(&lp) {
        LpOutcome::Optimal { x, .. } => {
            let areas: Vec<BigRational> = x.iter().map(|u| u + BigRational::one()).collect();
            Some(primitive_integer_vector(&areas))
        }
        LpOutcome::Infeasible { .. } => None,
        LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
    }
}

pub fn certificate_is_valid(cert: &AreaCertificate, lattice: &PeriodicLattice) -> bool {
    cert.areas.iter().all(|&a| a >= 1) && lattice.basis.iter().all(|p| signed_area(cert, p) == 0)
}

/// `Σ a_i c_i`.
pub fn signed_area(cert: &AreaCertificate, domain: &DomainVector) -> i64 {
    cert.areas.iter().zip(&domain.0).map(|(a, c)| a * c).sum()
}

pub fn is_admissible(d: &SuturedDiagram) -> AdmissibilityVerdict {
    let lattice = periodic_domain_basis(d);
    verdict_for(&lattice, d.interior_regions().len())
}

pub(crate) fn verdict_for(lattice: &PeriodicLattice, n: usize) -> AdmissibilityVerdict {
    if lattice.rank == 0 {
        return AdmissibilityVerdict {
            admissible: true,
            witness: Witness::Certificate(AreaCertificate { areas: vec![1; n] }),
        };
    }
    let basis = lattice.big_basis();
    match nonnegative_element(&basis, n) {
        NonNegativeSearch::Found(v) => AdmissibilityVerdict {
            admissible: false,
            witness: Witness::NonNegativeDomain(DomainVector::from_big(&v)),
        },
        NonNegativeSearch::Excluded { areas } => {
            debug_assert!(basis.iter().all(|v| dot(v, &areas).is_zero()));
            debug_assert!(areas.iter().all(|a| a.is_positive()));
            let canonical = positive_orthogonal_areas(&basis, n).unwrap_or(areas);
            AdmissibilityVerdict {
                admissible: true,
                witness: Witness::Certificate(AreaCertificate::from_big(&canonical)),
            }
        }
    }
}

/// Canonical area certificate, or the nonnegative periodic domain that rules
/// one out.
pub fn area_certificate(d: &SuturedDiagram) -> Result<AreaCertificate, AdmissibilityError> {
    let lattice = periodic_domain_basis(d);
    let n = d.interior_regions().len();
    match positive_orthogonal_areas(&lattice.big_basis(), n) {
        Some(a) => Ok(AreaCertificate::from_big(&a)),
        None => match verdict_for(&lattice, n).witness {
            Witness::NonNegativeDomain(witness) => Err(AdmissibilityError::NotAdmissible { witness }),
            Witness::Certificate(_) => unreachable!("Farkas alternatives are exclusive"),
        },
    }
}

/// Area certificate read from the Farkas ray of the nonnegativity LP
/// (independent of [`area_certificate`]'s LP).
pub fn farkas_certificate(d: &SuturedDiagram) -> Option<AreaCertificate> {
    let lattice = periodic_domain_basis(d);
    let n = d.interior_regions().len();
    if lattice.rank == 0 {
        return Some(AreaCertificate { areas: vec![1; n] });
    }
    match nonnegative_element(&lattice.big_basis(), n) {
        NonNegativeSearch::Excluded { areas } => Some(AreaCertificate::from_big(&areas)),
        NonNegativeSearch::Found(_) => None,
    }
}
