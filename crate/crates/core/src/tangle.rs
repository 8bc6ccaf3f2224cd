//! Full tangles, sign assignments, and the generator-count bound on the
//! instanton homology of an admissible diagram.
//!
//! A full tangle runs `a_i` vertical strands through interior region `R_i`,
//! where `a` is an area certificate. It is nullhomologous because its
//! intersection number with the 2-cycle of a periodic domain `P` is minus
//! the signed area of `P`. Splitting the tangle complement along the points
//! of `α ∩ β` gives one summand per sign assignment with exactly one minus
//! on every α and β curve, and these are in bijection with the generators.

use crate::admissibility::{is_admissible, AreaCertificate, Witness};
use crate::diagram::{Sign, SuturedDiagram};
use crate::generators::enumerate_generators;
use crate::lattice::{periodic_domain_basis, DomainVector, PeriodicLattice};

/// Largest number of intersection points for which sign assignments are
/// enumerated.
pub const MAX_SIGN_POINTS: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullTangle {
    /// Strands through each interior region, indexed like [`DomainVector`].
    pub points_per_region: Vec<i64>,
    pub total_strands: i64,
    pub source_certificate: AreaCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error("certificate covers {found} regions but the diagram has {expected} interior regions")]
    EmptyCertificateOnInteriorRegions { expected: usize, found: usize },
    #[error("certificate assigns area {area} to interior region {region}")]
    NonPositiveArea { region: String, area: i64 },
    #[error("{points} intersection points exceeds the sign-assignment limit of {MAX_SIGN_POINTS}")]
    TooManyPoints { points: usize },
}

pub fn build_full_tangle(d: &SuturedDiagram, cert: &AreaCertificate) -> Result<FullTangle, TangleError> {
    let n = d.interior_regions().len();
    if cert.areas.len() != n {
        return Err(TangleError::EmptyCertificateOnInteriorRegions { expected: n, found: cert.areas.len() });
    }
    if let Some((id, &area)) = d.interior_ids().into_iter().zip(&cert.areas).find(|(_, &a)| a < 1) {
        return Err(TangleError::NonPositiveArea { region: id.to_string(), area });
    }
    Ok(FullTangle {
        points_per_region: cert.areas.clone(),
        total_strands: cert.areas.iter().sum(),
        source_certificate: cert.clone(),
    })
}

/// Whether the tangle meets every periodic 2-cycle zero times algebraically.
pub fn verify_null_homology(t: &FullTangle, lattice: &PeriodicLattice) -> bool {
    lattice
        .basis
        .iter()
        .all(|p| p.0.iter().zip(&t.points_per_region).map(|(c, a)| c * a).sum::<i64>() == 0)
}

/// A choice of sign per intersection point, indexed like
/// [`SuturedDiagram::points`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignAssignment {
    pub signs: Vec<Sign>,
}

impl SignAssignment {
    /// The points carrying a minus sign, in point order.
    pub fn q_of_i(&self) -> Vec<usize> {
        (0..self.signs.len()).filter(|&p| self.signs[p] == Sign::Minus).collect()
    }

    /// Exactly one minus on every α and every β curve.
    pub fn is_summand(&self, d: &SuturedDiagram) -> bool {
        let mut alpha = vec![0usize; d.alpha_count()];
        let mut beta = vec![0usize; d.beta_count()];
        for p in self.q_of_i() {
            let point = &d.points()[p];
            match (point.alpha, point.beta) {
                (Some(i), Some(j)) => {
                    alpha[i] += 1;
                    beta[j] += 1;
                }
                _ => return false,
            }
        }
        alpha.iter().chain(&beta).all(|&c| c == 1)
    }
}

/// All sign assignments that contribute a summand, ordered by their minus
/// sets. One minus point is chosen per α curve; a choice is abandoned as
/// soon as some β curve would carry two.
pub fn enumerate_sign_assignments(d: &SuturedDiagram) -> Result<Vec<SignAssignment>, TangleError> {
    let t = d.points().len();
    if t > MAX_SIGN_POINTS {
        return Err(TangleError::TooManyPoints { points: t });
    }
    let mut out = Vec::new();
    let mut minus: u64 = 0;
    let mut beta_used: u64 = 0;
    choose(d, 0, &mut minus, &mut beta_used, &mut out);
    let mut result: Vec<SignAssignment> = out
        .into_iter()
        .map(|mask| SignAssignment {
            signs: (0..t).map(|p| if mask >> p & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect(),
        })
        .filter(|s| s.is_summand(d))
        .collect();
    result.sort_by_key(SignAssignment::q_of_i);
    Ok(result)
}

fn choose(d: &SuturedDiagram, i: usize, minus: &mut u64, beta_used: &mut u64, out: &mut Vec<u64>) {
    if i == d.alpha_count() {
        out.push(*minus);
        return;
    }
    for &p in d.alpha(i) {
        let Some(j) = d.points()[p].beta else { continue };
        if j >= 64 || *beta_used >> j & 1 == 1 {
            continue;
        }
        *minus |= 1 << p;
        *beta_used |= 1 << j;
        choose(d, i + 1, minus, beta_used, out);
        *minus &= !(1 << p);
        *beta_used &= !(1 << j);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub admissible: bool,
    pub generator_count: usize,
    /// Upper bound on dim SHI; only asserted for admissible diagrams.
    pub bound: Option<usize>,
    pub certificate: Option<AreaCertificate>,
    pub tangle: Option<FullTangle>,
    pub null_homologous: Option<bool>,
    /// `None` when there are too many points to enumerate.
    pub sign_assignment_count: Option<usize>,
    /// Nonnegative periodic domain, for inadmissible diagrams.
    pub witness: Option<DomainVector>,
}

impl BoundReport {
    /// The generator count agrees with the sign-assignment count (when the
    /// latter was computed).
    pub fn bijection_holds(&self) -> bool {
        self.sign_assignment_count.is_none_or(|c| c == self.generator_count)
    }
}

/// Run admissibility, certificate, tangle and sign-count in sequence.
pub fn shi_upper_bound(d: &SuturedDiagram) -> BoundReport {
    let generator_count = enumerate_generators(d).len();
    let sign_assignment_count = enumerate_sign_assignments(d).ok().map(|v| v.len());
    let verdict = is_admissible(d);
    match verdict.witness {
        Witness::Certificate(cert) => {
            let tangle = build_full_tangle(d, &cert).expect("certificate from the solver is valid");
            let null_homologous = verify_null_homology(&tangle, &periodic_domain_basis(d));
            BoundReport {
                admissible: true,
                generator_count,
                bound: Some(generator_count),
                certificate: Some(cert),
                tangle: Some(tangle),
                null_homologous: Some(null_homologous),
                sign_assignment_count,
                witness: None,
            }
        }
        Witness::NonNegativeDomain(w) => BoundReport {
            admissible: false,
            generator_count,
            bound: None,
            certificate: None,
            tangle: None,
            null_homologous: None,
            sign_assignment_count,
            witness: Some(w),
        },
    }
}
