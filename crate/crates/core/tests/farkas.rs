mod common;

use common::combination;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use shd_core::admissibility::{
    area_certificate, certificate_is_valid, is_admissible, nonnegative_element, positive_orthogonal_areas,
    signed_area, NonNegativeSearch, Witness,
};
use shd_core::corpus;
use shd_core::lattice::periodic_domain_basis;

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[test]
fn corpus_has_exactly_one_alternative() {
    for e in corpus::entries() {
        let d = e.diagram();
        let lattice = periodic_domain_basis(&d);
        let verdict = is_admissible(&d);
        match (area_certificate(&d), &verdict.witness) {
            (Ok(cert), Witness::Certificate(c)) => {
                assert_eq!(&cert, c, "{}", e.name);
                assert!(certificate_is_valid(&cert, &lattice));
                for p in &lattice.basis {
                    assert_eq!(signed_area(&cert, p), 0);
                }
            }
            (Err(_), Witness::NonNegativeDomain(w)) => {
                assert!(w.is_nonnegative() && !w.is_zero());
                let lambda = combination(&lattice.big_basis(), &w.to_big()).expect("in span");
                assert!(lambda.iter().all(|l| l.is_integer()), "{}: witness not an integer combination", e.name);
            }
            (a, b) => panic!("{}: certificate {a:?} but verdict {b:?}", e.name),
        }
    }
}

fn lattice_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, n)| prop::collection::vec(prop::collection::vec(-3i64..=3, n), r))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn random_lattices_have_exactly_one_alternative(rows in lattice_strategy()) {
        let n = rows[0].len();
        let basis = to_big(&rows);
        let cert = positive_orthogonal_areas(&basis, n);
        match nonnegative_element(&basis, n) {
            NonNegativeSearch::Found(v) => {
                prop_assert!(cert.is_none());
                prop_assert!(v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| x.is_positive()));
                let lambda = combination(&basis, &v);
                prop_assert!(lambda.is_some(), "witness outside the span");
            }
            NonNegativeSearch::Excluded { areas } => {
                let cert = cert.expect("certificate exists when nonnegative elements are excluded");
                for a in [&cert, &areas] {
                    prop_assert!(a.iter().all(|x| x.is_positive()));
                    for b in &basis {
                        prop_assert!(b.iter().zip(a.iter()).map(|(x, y)| x * y).sum::<BigInt>().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_ignores_negation_and_coordinate_order(rows in lattice_strategy(), flip in 0usize..6, shift in 0usize..6) {
        let n = rows[0].len();
        let found = |b: &[Vec<i64>]| matches!(nonnegative_element(&to_big(b), n), NonNegativeSearch::Found(_));
        let base = found(&rows);

        let mut negated = rows.clone();
        let i = flip % negated.len();
        for x in negated[i].iter_mut() {
            *x = -*x;
        }
        prop_assert_eq!(found(&negated), base);

        let rotated: Vec<Vec<i64>> = rows.iter().map(|r| {
            let mut r = r.clone();
            r.rotate_left(shift % n);
            r
        }).collect();
        prop_assert_eq!(found(&rotated), base);
    }
}
