mod common;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shd_core::admissibility::is_admissible;
use shd_core::corpus;
use shd_core::floer::{differential, is_nice, maslov_index, positive_domains_from};
use shd_core::generators::{count_generators_permanent, enumerate_generators, permanent};
use shd_core::selftest::random_grid;
use shd_core::tangle::enumerate_sign_assignments;
use shd_core::SuturedDiagram;

fn corpus_and_grids() -> Vec<SuturedDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut all: Vec<SuturedDiagram> = corpus::entries().iter().map(|e| e.diagram()).collect();
    all.extend((0..6).map(|i| random_grid(&mut rng, 2 + i % 3)));
    all
}

#[test]
fn ryser_matches_permutation_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..250 {
        let n = trial % 6;
        let m: Vec<Vec<u64>> = common::random_matrix(&mut rng, n, n, 0, 4)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as u64).collect())
            .collect();
        assert_eq!(permanent(&m), common::permutation_sum(&m), "{m:?}");
    }
}

#[test]
fn permutation_sum_oracle_sanity() {
    assert_eq!(common::permutation_sum(&[]), BigInt::from(1));
    assert_eq!(common::permutation_sum(&[vec![1, 2], vec![2, 1]]), BigInt::from(5));
    assert_eq!(common::permutation_sum(&[vec![1; 4], vec![1; 4], vec![1; 4], vec![1; 4]]), BigInt::from(24));
}

#[test]
fn generator_count_is_the_permanent() {
    for d in corpus_and_grids() {
        let gens = enumerate_generators(&d);
        assert_eq!(BigInt::from(gens.len()), count_generators_permanent(&d), "{}", d.name());
        for g in &gens {
            let mut alphas: Vec<usize> = g.points.iter().map(|&p| d.points()[p].alpha.unwrap()).collect();
            let mut betas = g.permutation.clone();
            alphas.sort_unstable();
            betas.sort_unstable();
            assert_eq!(alphas, (0..d.k()).collect::<Vec<_>>());
            assert_eq!(betas, (0..d.k()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn sign_assignments_biject_with_generators() {
    for d in corpus_and_grids() {
        let gens = enumerate_generators(&d);
        let mut images: Vec<Vec<usize>> = enumerate_sign_assignments(&d).unwrap().iter().map(|s| s.q_of_i()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images, gens.iter().map(|g| g.points.clone()).collect::<Vec<_>>(), "{}", d.name());
    }
}

#[test]
fn domain_search_matches_exhaustive_subsets() {
    let mut checked = 0;
    for d in corpus_and_grids() {
        if !is_nice(&d) || !is_admissible(&d).admissible || d.interior_regions().len() > 12 {
            continue;
        }
        let gens = enumerate_generators(&d);
        for x in &gens {
            let mut fast = positive_domains_from(&d, x).unwrap();
            fast.sort();
            assert_eq!(fast, common::brute_force_domains(&d, x, &gens), "{} from {}", d.name(), x.label(&d));
        }
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn library_index_matches_corner_count() {
    for d in corpus_and_grids() {
        let Ok(c) = differential(&d) else { continue };
        for r in &c.domains {
            let (x, y) = (&c.generators[r.from], &c.generators[r.to]);
            assert_eq!(maslov_index(&d, &r.domain, x, y), Ok(common::index_by_corners(&d, &r.domain, &x.points, &y.points)));
        }
    }
}
