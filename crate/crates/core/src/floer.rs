//! Sutured Floer homology of nice diagrams over F2.
//!
//! # Boundary compatibility
//!
//! For a domain `D` with quadrant multiplicities `m0..m3` at a point `p` of
//! sign `s` (quadrants as in [`crate::diagram`]), the coefficient of `∂D` on
//! the α arc leaving `p` is `s·(m0 − m3)` and on the α arc arriving at `p`
//! is `s·(m1 − m2)`. The boundary of the α part of `∂D` therefore has
//! coefficient
//!
//! ```text
//! alpha_jump(p) = s · (m1 − m2 − m0 + m3)
//! ```
//!
//! at `p`, and the β part has the opposite coefficient. `D` connects `x` to
//! `y` when `alpha_jump(p) = [p ∈ y] − [p ∈ x]` at every point.
//!
//! # Index
//!
//! `μ(D) = e(D) + n_x(D) + n_y(D)`, where a region with `c` corners has
//! Euler measure `χ(R) − c/4` and `n_x` sums the average of the four
//! quadrant multiplicities over the points of `x`.
//!
//! In a nice diagram the positive index-one domains are exactly the empty
//! embedded bigons and rectangles, so they are found by searching 0/1
//! multiplicities.

use num_rational::Rational64;
use num_traits::Zero;

use crate::admissibility::{is_admissible, Witness};
use crate::diagram::{Quadrant, Side, SuturedDiagram};
use crate::generators::{enumerate_generators, Generator};
use crate::lattice::{h1_order, presents_closed_manifold, DomainVector, H1Order};
use crate::linalg::f2_rank;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloerError {
    #[error("diagram is not nice: interior region {region} is not a bigon or rectangle")]
    NotNice { region: String },
    #[error("diagram is not admissible: periodic domain {witness:?} is nonnegative")]
    NotAdmissible { witness: DomainVector },
    #[error("domain does not connect the given generators")]
    NotConnecting,
    #[error("the differential does not square to zero")]
    NonzeroSquare,
}

/// First interior region that is not a disk with 2 or 4 corners.
fn first_non_nice_region(d: &SuturedDiagram) -> Option<usize> {
    d.interior_regions().iter().copied().find(|&r| {
        let region = &d.regions()[r];
        let disk = region.cycles.len() == 1 && region.sides.iter().all(|s| matches!(s, Side::Arc { .. }));
        !(disk && matches!(region.corner_count(), 2 | 4))
    })
}

/// Every interior region is a bigon or a rectangle.
pub fn is_nice(d: &SuturedDiagram) -> bool {
    first_non_nice_region(d).is_none()
}

fn require_nice(d: &SuturedDiagram) -> Result<(), FloerError> {
    match first_non_nice_region(d) {
        Some(r) => Err(FloerError::NotNice { region: d.regions()[r].id.clone() }),
        None => Ok(()),
    }
}

fn quadrant_multiplicities(d: &SuturedDiagram, domain: &DomainVector, p: usize) -> [i64; 4] {
    Quadrant::ALL.map(|q| d.quadrant_region(p, q).map_or(0, |r| domain.at_region(d, r)))
}

/// Coefficient of the boundary of `∂D ∩ α` at point `p`.
pub fn alpha_jump(d: &SuturedDiagram, domain: &DomainVector, p: usize) -> i64 {
    let [m0, m1, m2, m3] = quadrant_multiplicities(d, domain, p);
    d.sign(p).value() * (m1 - m2 - m0 + m3)
}

pub fn connects(d: &SuturedDiagram, domain: &DomainVector, x: &Generator, y: &Generator) -> bool {
    (0..d.points().len()).all(|p| alpha_jump(d, domain, p) == y.contains(p) as i64 - x.contains(p) as i64)
}

/// Euler measure of each interior region, indexed like [`DomainVector`].
fn region_euler_measures(d: &SuturedDiagram) -> Vec<Rational64> {
    d.interior_regions()
        .iter()
        .map(|&r| {
            let region = &d.regions()[r];
            Rational64::from_integer(region.euler_characteristic()) - Rational64::new(region.corner_count() as i64, 4)
        })
        .collect()
}

pub fn euler_measure(d: &SuturedDiagram, domain: &DomainVector) -> Rational64 {
    region_euler_measures(d).iter().zip(&domain.0).map(|(e, &c)| e * c).sum()
}

pub fn point_measure(d: &SuturedDiagram, domain: &DomainVector, x: &Generator) -> Rational64 {
    x.points
        .iter()
        .map(|&p| Rational64::new(quadrant_multiplicities(d, domain, p).iter().sum(), 4))
        .sum()
}

pub fn maslov_index(d: &SuturedDiagram, domain: &DomainVector, x: &Generator, y: &Generator) -> Result<Rational64, FloerError> {
    if !connects(d, domain, x, y) {
        return Err(FloerError::NotConnecting);
    }
    Ok(euler_measure(d, domain) + point_measure(d, domain, x) + point_measure(d, domain, y))
}

/// An index-one positive domain with the terms of its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainRecord {
    pub from: usize,
    pub to: usize,
    pub domain: DomainVector,
    pub euler: Rational64,
    pub n_x: Rational64,
    pub n_y: Rational64,
}

/// Depth-first search over 0/1 multiplicities for one source generator.
struct Search<'a> {
    d: &'a SuturedDiagram,
    x: &'a Generator,
    euler: Vec<Rational64>,
    /// Interior regions (ordinals) touching each point, per quadrant.
    quadrants: Vec<[Option<usize>; 4]>,
    /// Points whose four quadrants are all decided once ordinal `i` is.
    ready: Vec<Vec<usize>>,
    /// Contribution of each region to `n_x`.
    x_weight: Vec<Rational64>,
    current: Vec<i64>,
    found: Vec<(Generator, DomainVector)>,
}

impl<'a> Search<'a> {
    fn new(d: &'a SuturedDiagram, x: &'a Generator) -> Self {
        let n = d.interior_regions().len();
        let quadrants: Vec<[Option<usize>; 4]> = (0..d.points().len())
            .map(|p| Quadrant::ALL.map(|q| d.quadrant_region(p, q).and_then(|r| d.interior_ordinal(r))))
            .collect();
        let mut ready = vec![Vec::new(); n];
        let mut unconstrained = Vec::new();
        for (p, qs) in quadrants.iter().enumerate() {
            match qs.iter().flatten().max() {
                Some(&last) => ready[last].push(p),
                None => unconstrained.push(p),
            }
        }
        let mut x_weight = vec![Rational64::zero(); n];
        for &p in &x.points {
            for o in quadrants[p].iter().flatten() {
                x_weight[*o] += Rational64::new(1, 4);
            }
        }
        Search { d, x, euler: region_euler_measures(d), quadrants, ready, x_weight, current: vec![0; n], found: Vec::new() }
    }

    fn jump(&self, p: usize) -> i64 {
        let m = self.quadrants[p].map(|o| o.map_or(0, |o| self.current[o]));
        self.d.sign(p).value() * (m[1] - m[2] - m[0] + m[3])
    }

    /// Target membership of `p` implied by its jump, if allowed.
    fn target_membership(&self, p: usize) -> Option<bool> {
        let in_x = self.x.contains(p) as i64;
        match self.jump(p) + in_x {
            0 => Some(false),
            1 => Some(true),
            _ => None,
        }
    }

    fn run(&mut self, i: usize, partial: Rational64) {
        let one = Rational64::from_integer(1);
        if partial > one {
            return;
        }
        if i == self.current.len() {
            self.finish();
            return;
        }
        for value in [0, 1] {
            self.current[i] = value;
            let ok = self.ready[i].iter().all(|&p| self.target_membership(p).is_some());
            if ok {
                let add = if value == 1 { self.euler[i] + self.x_weight[i] } else { Rational64::zero() };
                self.run(i + 1, partial + add);
            }
        }
        self.current[i] = 0;
    }

    fn finish(&mut self) {
        let domain = DomainVector(self.current.clone());
        if domain.is_zero() {
            return;
        }
        let mut points = Vec::with_capacity(self.x.points.len());
        for p in 0..self.d.points().len() {
            match self.target_membership(p) {
                Some(true) => points.push(p),
                Some(false) => {}
                None => return,
            }
        }
        let Some(y) = generator_from_points(self.d, points) else { return };
        let mu = euler_measure(self.d, &domain) + point_measure(self.d, &domain, self.x) + point_measure(self.d, &domain, &y);
        if mu == Rational64::from_integer(1) {
            self.found.push((y, domain));
        }
    }
}

fn generator_from_points(d: &SuturedDiagram, points: Vec<usize>) -> Option<Generator> {
    let k = d.alpha_count();
    if points.len() != k {
        return None;
    }
    let mut permutation = vec![usize::MAX; k];
    let mut beta_seen = vec![false; d.beta_count()];
    for &p in &points {
        let (i, j) = (d.points()[p].alpha?, d.points()[p].beta?);
        if permutation[i] != usize::MAX || std::mem::replace(&mut beta_seen[j], true) {
            return None;
        }
        permutation[i] = j;
    }
    Some(Generator { points, permutation })
}

/// Positive index-one domains out of `x`, with their targets, sorted by
/// target then domain.
pub fn positive_domains_from(d: &SuturedDiagram, x: &Generator) -> Result<Vec<(Generator, DomainVector)>, FloerError> {
    require_nice(d)?;
    let mut search = Search::new(d, x);
    search.run(0, Rational64::zero());
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// Positive domains of index one from `x` to `y` with 0/1 multiplicities.
pub fn positive_domains(d: &SuturedDiagram, x: &Generator, y: &Generator) -> Result<Vec<DomainVector>, FloerError> {
    Ok(positive_domains_from(d, x)?.into_iter().filter(|(t, _)| t == y).map(|(_, dom)| dom).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FloerComplex {
    pub generators: Vec<Generator>,
    /// `differential[y][x]` is the coefficient of `y` in `∂x`.
    pub differential: Vec<Vec<bool>>,
    pub domains: Vec<DomainRecord>,
}

impl FloerComplex {
    pub fn rank_of_differential(&self) -> usize {
        f2_rank(&self.differential)
    }

    pub fn homology_rank(&self) -> usize {
        self.generators.len() - 2 * self.rank_of_differential()
    }

    pub fn is_zero(&self) -> bool {
        self.differential.iter().all(|row| row.iter().all(|&b| !b))
    }

    /// Nonzero entries as `(y, x)` index pairs, row-major.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (y, row) in self.differential.iter().enumerate() {
            for (x, &b) in row.iter().enumerate() {
                if b {
                    out.push((y, x));
                }
            }
        }
        out
    }

    /// Sparse text form: one `y <- x` line per nonzero entry.
    pub fn to_sparse_text(&self, d: &SuturedDiagram) -> String {
        self.entries()
            .into_iter()
            .map(|(y, x)| format!("{} <- {}\n", self.generators[y].label(d), self.generators[x].label(d)))
            .collect()
    }

    fn squares_to_zero(&self) -> bool {
        let n = self.generators.len();
        (0..n).all(|z| {
            (0..n).all(|x| {
                let mut acc = false;
                for y in 0..n {
                    acc ^= self.differential[z][y] && self.differential[y][x];
                }
                !acc
            })
        })
    }
}

fn require_admissible(d: &SuturedDiagram) -> Result<(), FloerError> {
    match is_admissible(d).witness {
        Witness::Certificate(_) => Ok(()),
        Witness::NonNegativeDomain(witness) => Err(FloerError::NotAdmissible { witness }),
    }
}

pub fn differential(d: &SuturedDiagram) -> Result<FloerComplex, FloerError> {
    require_nice(d)?;
    require_admissible(d)?;
    let generators = enumerate_generators(d);
    let n = generators.len();
    let mut matrix = vec![vec![false; n]; n];
    let mut domains = Vec::new();
    for (xi, x) in generators.iter().enumerate() {
        for (y, domain) in positive_domains_from(d, x)? {
            let yi = generators.binary_search(&y).expect("targets are generators");
            matrix[yi][xi] ^= true;
            domains.push(DomainRecord {
                from: xi,
                to: yi,
                euler: euler_measure(d, &domain),
                n_x: point_measure(d, &domain, x),
                n_y: point_measure(d, &domain, &y),
                domain,
            });
        }
    }
    let complex = FloerComplex { generators, differential: matrix, domains };
    if !complex.squares_to_zero() {
        return Err(FloerError::NonzeroSquare);
    }
    Ok(complex)
}

pub fn sfh_rank(d: &SuturedDiagram) -> Result<usize, FloerError> {
    Ok(differential(d)?.homology_rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tristate {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub admissible: bool,
    pub nice: bool,
    pub generator_count: usize,
    /// Admissible with zero differential; undecided for non-nice diagrams.
    pub strong_diagram: Tristate,
    pub sfh_rank: Option<usize>,
    pub h1: H1Order,
    /// The diagram has one boundary component, so it presents Y(1) and
    /// `h1` is |H₁(Y)|.
    pub h1_applicable: bool,
    pub strong_lspace_witness: bool,
    pub implied_instanton_bound: Option<usize>,
    pub statements: Vec<String>,
}

pub fn classify(d: &SuturedDiagram) -> Classification {
    let admissible = is_admissible(d).admissible;
    let nice = is_nice(d);
    let generator_count = enumerate_generators(d).len();
    let h1 = h1_order(d);
    let h1_applicable = presents_closed_manifold(d);

    let complex = if admissible && nice { differential(d).ok() } else { None };
    let strong_diagram = match (&complex, admissible, nice) {
        (_, false, _) => Tristate::No,
        (Some(c), _, _) if c.is_zero() => Tristate::Yes,
        (Some(_), _, _) => Tristate::No,
        (None, _, _) => Tristate::Unknown,
    };
    let sfh_rank = complex.as_ref().map(FloerComplex::homology_rank);
    let strong_lspace_witness = strong_diagram == Tristate::Yes
        && h1_applicable
        && matches!(&h1, H1Order::Finite(n) if *n == generator_count.into());
    let implied_instanton_bound = admissible.then_some(generator_count);

    let mut statements = Vec::new();
    if admissible {
        statements.push(format!("dim SHI(M, gamma) <= {generator_count} = |S(H)|"));
    } else {
        statements.push("H is not admissible; no bound on dim SHI(M, gamma) follows from it".to_string());
    }
    if strong_diagram == Tristate::Yes {
        statements.push(format!("rk SFH(M, gamma) = |S(H)| = {generator_count}, so dim SHI(M, gamma) <= rk SFH(M, gamma)"));
    }
    if strong_lspace_witness {
        statements.push(format!(
            "T(Y(1), delta) = |H_1(Y)| = {generator_count}: Y is a strong L-space, hence an instanton L-space"
        ));
    }
    Classification {
        admissible,
        nice,
        generator_count,
        strong_diagram,
        sfh_rank,
        h1,
        h1_applicable,
        strong_lspace_witness,
        implied_instanton_bound,
        statements,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryEntry {
    pub name: String,
    pub admissible: bool,
    pub generator_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryReport {
    /// Minimum generator count over the admissible diagrams.
    pub min: Option<usize>,
    pub per_diagram: Vec<TrajectoryEntry>,
}

impl TrajectoryReport {
    pub fn skipped(&self) -> impl Iterator<Item = &TrajectoryEntry> {
        self.per_diagram.iter().filter(|e| !e.admissible)
    }
}

/// Minimum of the generator count over the admissible members of a set of
/// diagrams assumed to present the same sutured manifold.
pub fn trajectory_min(corpus: &[SuturedDiagram]) -> TrajectoryReport {
    let per_diagram: Vec<TrajectoryEntry> = corpus
        .iter()
        .map(|d| TrajectoryEntry {
            name: d.name().to_string(),
            admissible: is_admissible(d).admissible,
            generator_count: enumerate_generators(d).len(),
        })
        .collect();
    let min = per_diagram.iter().filter(|e| e.admissible).map(|e| e.generator_count).min();
    TrajectoryReport { min, per_diagram }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn gens(name: &str) -> (SuturedDiagram, Vec<Generator>) {
        let d = corpus::load(name).unwrap();
        let g = enumerate_generators(&d);
        (d, g)
    }

    #[test]
    fn niceness() {
        assert!(is_nice(&corpus::load("rp3").unwrap()));
        assert!(is_nice(&corpus::load("s1s2-admissible").unwrap()));
        assert!(!is_nice(&corpus::load("s1s2-inadmissible").unwrap()));
    }

    #[test]
    fn bigon_has_index_one() {
        let (d, g) = gens("s1s2-admissible");
        let b1 = DomainVector(vec![1, 0]);
        let (x, y) = if connects(&d, &b1, &g[0], &g[1]) { (&g[0], &g[1]) } else { (&g[1], &g[0]) };
        assert_eq!(euler_measure(&d, &b1), Rational64::new(1, 2));
        assert_eq!(point_measure(&d, &b1, x), Rational64::new(1, 4));
        assert_eq!(point_measure(&d, &b1, y), Rational64::new(1, 4));
        assert_eq!(maslov_index(&d, &b1, x, y), Ok(Rational64::from_integer(1)));
    }

    #[test]
    fn empty_domain_has_index_zero() {
        let (d, g) = gens("s1s2-admissible");
        assert_eq!(maslov_index(&d, &DomainVector::zero(2), &g[0], &g[0]), Ok(Rational64::zero()));
    }

    #[test]
    fn rp3_square_does_not_connect() {
        let (d, g) = gens("rp3");
        assert_eq!(maslov_index(&d, &DomainVector(vec![1]), &g[0], &g[1]), Err(FloerError::NotConnecting));
        assert!(positive_domains(&d, &g[0], &g[1]).unwrap().is_empty());
    }

    #[test]
    fn s1s2_bigons() {
        let (d, g) = gens("s1s2-admissible");
        let forward = positive_domains(&d, &g[0], &g[1]).unwrap().len();
        let backward = positive_domains(&d, &g[1], &g[0]).unwrap().len();
        assert_eq!(forward + backward, 2);
        assert!(forward == 0 || backward == 0);
        for x in &g {
            assert!(positive_domains(&d, x, x).unwrap().is_empty());
        }
    }

    #[test]
    fn non_nice_is_refused() {
        let (d, g) = gens("s1s2-inadmissible");
        assert!(g.is_empty());
        assert!(matches!(differential(&d), Err(FloerError::NotNice { .. })));
        assert!(matches!(sfh_rank(&d), Err(FloerError::NotNice { .. })));
    }

    #[test]
    fn ranks() {
        assert_eq!(sfh_rank(&corpus::load("s3").unwrap()), Ok(1));
        assert_eq!(sfh_rank(&corpus::load("rp3").unwrap()), Ok(2));
        assert_eq!(sfh_rank(&corpus::load("s1s2-admissible").unwrap()), Ok(2));
        for p in 2..=5 {
            assert_eq!(sfh_rank(&corpus::load(&format!("lens{p}")).unwrap()), Ok(p));
        }
    }

    #[test]
    fn finger_move_has_a_differential() {
        let d = corpus::load("s3-finger").unwrap();
        let c = differential(&d).unwrap();
        assert_eq!(c.generators.len(), 3);
        assert!(!c.is_zero());
        assert_eq!(c.homology_rank(), 1);
        assert_eq!(c.to_sparse_text(&d).lines().count(), 2);
    }

    #[test]
    fn grid_ranks() {
        assert_eq!(sfh_rank(&corpus::load("unknot-grid").unwrap()), Ok(4));
        assert_eq!(sfh_rank(&corpus::load("trefoil-grid").unwrap()), Ok(48));
    }

    #[test]
    fn classifications() {
        let c = classify(&corpus::load("rp3").unwrap());
        assert_eq!(c.strong_diagram, Tristate::Yes);
        assert_eq!(c.h1, H1Order::Finite(2.into()));
        assert!(c.strong_lspace_witness);
        assert_eq!(c.implied_instanton_bound, Some(2));

        let c = classify(&corpus::load("s3").unwrap());
        assert!(c.strong_lspace_witness);
        assert_eq!(c.implied_instanton_bound, Some(1));

        let c = classify(&corpus::load("s1s2-inadmissible").unwrap());
        assert!(!c.admissible);
        assert_eq!(c.sfh_rank, None);
        assert_eq!(c.implied_instanton_bound, None);
        assert!(!c.strong_lspace_witness);

        let c = classify(&corpus::load("s3-finger").unwrap());
        assert_eq!(c.strong_diagram, Tristate::No);
        assert!(!c.strong_lspace_witness);
    }

    #[test]
    fn trajectory() {
        let r = trajectory_min(&[corpus::load("s3").unwrap()]);
        assert_eq!(r.min, Some(1));
        let r = trajectory_min(&[corpus::load("s1s2-inadmissible").unwrap(), corpus::load("s1s2-admissible").unwrap()]);
        assert_eq!(r.min, Some(2));
        assert_eq!(r.skipped().map(|e| e.name.as_str()).collect::<Vec<_>>(), ["s1s2-inadmissible"]);
        assert_eq!(trajectory_min(&[]).min, None);
    }
}
