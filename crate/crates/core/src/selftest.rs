//! Invariant suites run by `shd selftest`: per-diagram cross-checks between
//! independent computations, plus seeded randomized checks of the LP and
//! permanent code.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::admissibility::{
    certificate_is_valid, farkas_certificate, is_admissible, nonnegative_element, positive_orthogonal_areas,
    NonNegativeSearch, Witness,
};
use crate::builders;
use crate::corpus;
use crate::diagram::{parse_diagram, serialize, validate, SuturedDiagram};
use crate::floer::{differential, is_nice, maslov_index, positive_domains_from};
use crate::generators::{count_generators_permanent, enumerate_generators, permanent, Generator};
use crate::lattice::{arc_coefficients, h1_rel_trivial, is_periodic, periodic_domain_basis, DomainVector};
use crate::linalg::{dot, hermite_rows};
use crate::tangle::{build_full_tangle, enumerate_sign_assignments, verify_null_homology};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, suite: impl Into<String>, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check { suite: suite.into(), passed, detail });
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Number of diagrams whose domain search is checked against exhaustive
/// subset enumeration is limited to this many interior regions.
pub const BRUTE_FORCE_REGION_LIMIT: usize = 12;

/// Run every suite. The randomized suites are driven by `seed`.
pub fn run(seed: u64) -> SelftestReport {
    let mut report = SelftestReport::default();
    for entry in corpus::entries() {
        let d = entry.diagram();
        report.record(format!("corpus/{}", entry.name), check_diagram(&d, Some(entry.text)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..4 {
        let d = random_grid(&mut rng, 3 + i % 2);
        report.record(format!("random-grid/{}", d.name()), check_diagram(&d, None));
    }
    report.record("farkas-random", farkas_suite(&mut rng, 100));
    report.record("ryser-random", ryser_suite(&mut rng, 200));
    report
}

/// Every invariant that applies to one diagram.
pub fn check_diagram(d: &SuturedDiagram, source: Option<&str>) -> Result<String, String> {
    let v = validate(d);
    ensure(v.is_valid(), || format!("validation: {:?}", v.violations))?;
    if let Some(text) = source {
        ensure(serialize(d) == text, || "serialization is not byte-identical to the source".into())?;
    }
    let reparsed = parse_diagram(&serialize(d)).map_err(|e| e.to_string())?;
    ensure(serialize(&reparsed) == serialize(d), || "round trip changed the diagram".into())?;

    let corners: usize = d.regions().iter().map(|r| r.corner_count()).sum();
    ensure(corners == 4 * d.points().len(), || format!("{corners} corners for {} points", d.points().len()))?;

    let gens = enumerate_generators(d);
    let perm = count_generators_permanent(d);
    ensure(BigInt::from(gens.len()) == perm, || format!("{} generators but permanent {perm}", gens.len()))?;
    let signs = enumerate_sign_assignments(d).map_err(|e| e.to_string())?;
    ensure(signs.len() == gens.len(), || format!("{} sign assignments for {} generators", signs.len(), gens.len()))?;
    let mut minus_sets: Vec<Vec<usize>> = signs.iter().map(|s| s.q_of_i()).collect();
    minus_sets.sort();
    let gen_sets: Vec<Vec<usize>> = gens.iter().map(|g| g.points.clone()).collect();
    ensure(minus_sets == gen_sets, || "sign assignments do not map onto the generators".into())?;

    let lattice = periodic_domain_basis(d);
    for p in &lattice.basis {
        ensure(is_periodic(d, p) && is_periodic(d, &p.neg()), || format!("basis element {:?} is not periodic", p.0))?;
    }
    let verdict = is_admissible(d);
    match &verdict.witness {
        Witness::Certificate(c) => {
            ensure(certificate_is_valid(c, &lattice), || format!("invalid certificate {:?}", c.areas))?;
            let f = farkas_certificate(d).ok_or("Farkas route found no certificate")?;
            ensure(certificate_is_valid(&f, &lattice), || "invalid Farkas certificate".into())?;
            let t = build_full_tangle(d, c).map_err(|e| e.to_string())?;
            ensure(verify_null_homology(&t, &lattice), || "full tangle is not nullhomologous".into())?;
        }
        Witness::NonNegativeDomain(w) => {
            ensure(w.is_nonnegative() && !w.is_zero() && is_periodic(d, w), || format!("bad witness {:?}", w.0))?;
            ensure(in_lattice(&lattice.big_basis(), &w.to_big()), || "witness is not in the lattice".into())?;
            ensure(!h1_rel_trivial(d), || "inadmissible with a trivial lattice".into())?;
        }
    }

    let mut detail = format!("{} generators, lattice rank {}", gens.len(), lattice.rank);
    if verdict.admissible && is_nice(d) {
        let c = differential(d).map_err(|e| e.to_string())?;
        let rank = c.homology_rank();
        ensure(rank <= gens.len() && (gens.len() - rank).is_multiple_of(2), || format!("rank {rank} for {} generators", gens.len()))?;
        ensure((rank == gens.len()) == c.is_zero(), || "rank equals generator count but differential is nonzero".into())?;
        for r in &c.domains {
            let mu = maslov_index(d, &r.domain, &c.generators[r.from], &c.generators[r.to]).map_err(|e| e.to_string())?;
            ensure(mu == 1.into(), || format!("domain {:?} has index {mu}", r.domain.0))?;
        }
        if d.interior_regions().len() <= BRUTE_FORCE_REGION_LIMIT {
            for x in &gens {
                let mut fast = positive_domains_from(d, x).map_err(|e| e.to_string())?;
                fast.sort();
                ensure(fast == brute_force_domains(d, x, &gens), || format!("domain search disagrees at {}", x.label(d)))?;
            }
        }
        detail.push_str(&format!(", SFH rank {rank}"));
    }

    let relabeled = d.relabel_points(|id| format!("z{id}")).map_err(|e| e.to_string())?;
    ensure(
        enumerate_generators(&relabeled).len() == gens.len()
            && is_admissible(&relabeled).admissible == verdict.admissible
            && periodic_domain_basis(&relabeled) == lattice,
        || "relabeling points changed an invariant".into(),
    )?;
    Ok(detail)
}

/// Whether `v` is an integer combination of `basis` (rows in Hermite form).
fn in_lattice(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let n = v.len();
    let before = hermite_rows(basis.to_vec(), n);
    let mut extended = basis.to_vec();
    extended.push(v.to_vec());
    hermite_rows(extended, n) == before
}

/// All 0/1 domains of index one from `x`, found by trying every subset of
/// interior regions and reading boundary compatibility off the arc
/// coefficients.
pub fn brute_force_domains(d: &SuturedDiagram, x: &Generator, gens: &[Generator]) -> Vec<(Generator, DomainVector)> {
    let n = d.interior_regions().len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let dom = DomainVector((0..n).map(|i| (mask >> i & 1) as i64).collect());
        let coeffs = arc_coefficients(d, &dom);
        // Boundary of the α part at each point: arriving minus departing.
        let mut jump = vec![0i64; d.points().len()];
        for i in 0..d.alpha_count() {
            for &a in d.curve_arcs(crate::diagram::CurveRef::alpha(i)) {
                if let Some((from, to)) = d.arcs()[a].ends {
                    jump[to] += coeffs[a];
                    jump[from] -= coeffs[a];
                }
            }
        }
        for y in gens {
            let ok = (0..d.points().len()).all(|p| jump[p] == y.contains(p) as i64 - x.contains(p) as i64);
            if ok && maslov_index(d, &dom, x, y) == Ok(1.into()) {
                out.push((y.clone(), dom.clone()));
            }
        }
    }
    out.sort();
    out
}

/// A random grid diagram of size `n`.
pub fn random_grid(rng: &mut impl Rng, n: usize) -> SuturedDiagram {
    let xs: Vec<usize> = (0..n).collect();
    loop {
        let mut os = xs.clone();
        os.shuffle(rng);
        if let Ok(d) = builders::grid(&format!("grid{n}-{}", os.iter().map(|o| o.to_string()).collect::<String>()), &xs, &os) {
            return d;
        }
    }
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
}

/// Exactly one Farkas alternative holds on random lattices, and its witness
/// checks out.
fn farkas_suite(rng: &mut impl Rng, count: usize) -> Result<String, String> {
    let (mut with_cert, mut with_domain) = (0, 0);
    for _ in 0..count {
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(1..=6);
        let basis: Vec<Vec<BigInt>> = random_matrix(rng, r, n, -3, 3)
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect();
        let certificate = positive_orthogonal_areas(&basis, n);
        match nonnegative_element(&basis, n) {
            NonNegativeSearch::Found(v) => {
                ensure(certificate.is_none(), || format!("both alternatives hold for {basis:?}"))?;
                ensure(v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| x.is_positive()), || {
                    format!("witness {v:?} is not nonnegative and nonzero")
                })?;
                ensure(in_lattice(&basis, &v), || format!("witness {v:?} not in lattice {basis:?}"))?;
                with_domain += 1;
            }
            NonNegativeSearch::Excluded { areas } => {
                let a = certificate.ok_or_else(|| format!("no certificate for {basis:?}"))?;
                for cert in [&a, &areas] {
                    ensure(cert.iter().all(|x| x.is_positive()), || format!("nonpositive areas {cert:?}"))?;
                    ensure(basis.iter().all(|b| dot(b, cert).is_zero()), || format!("areas {cert:?} not orthogonal"))?;
                }
                with_cert += 1;
            }
        }
    }
    Ok(format!("{count} lattices: {with_cert} certified, {with_domain} with a nonnegative element"))
}

fn naive_permanent(m: &[Vec<u64>]) -> BigInt {
    fn go(m: &[Vec<u64>], row: usize, used: &mut Vec<bool>) -> BigInt {
        if row == m.len() {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        for j in 0..m.len() {
            if !used[j] && m[row][j] != 0 {
                used[j] = true;
                total += go(m, row + 1, used) * m[row][j];
                used[j] = false;
            }
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()])
}

fn ryser_suite(rng: &mut impl Rng, count: usize) -> Result<String, String> {
    for _ in 0..count {
        let n = rng.gen_range(0..=5);
        let m: Vec<Vec<u64>> =
            random_matrix(rng, n, n, 0, 3).into_iter().map(|r| r.into_iter().map(|x| x as u64).collect()).collect();
        let (ryser, naive) = (permanent(&m), naive_permanent(&m));
        ensure(ryser == naive, || format!("permanent of {m:?}: Ryser {ryser}, permutation sum {naive}"))?;
    }
    Ok(format!("{count} random matrices up to 5x5"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        let r = run(7);
        for c in &r.checks {
            assert!(c.passed, "{}: {}", c.suite, c.detail);
        }
    }
}
