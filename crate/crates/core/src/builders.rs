//! Constructors for families of diagrams: genus-one lens space diagrams,
//! simple (1,1) knots in them, and grid diagrams on the torus.
//!
//! All of these live on a torus cut along α and β into unit squares, and
//! every intersection point is positive.

use crate::diagram::{Orient, ParseError, RawDiagram, RawRegion, RawSide, SuturedDiagram};

fn arc(curve: String, from: String, to: String, forward: bool) -> RawSide {
    let orient = if forward { Orient::Forward } else { Orient::Backward };
    RawSide::Arc { curve, from, to, orient }
}

fn link(raw: RawDiagram) -> SuturedDiagram {
    SuturedDiagram::link(raw).expect("builder emits only known ids")
}

/// Square `j` of the standard genus-one diagram of L(p, 1): α and β meet in
/// `q1..qp`, arc `j` of either curve runs from `q_{j+1}` to `q_{j+2}`.
fn lens_square(p: usize, j: usize) -> Vec<RawSide> {
    let q = |i: usize| format!("q{}", i % p + 1);
    vec![
        arc("a1".into(), q(j), q(j + 1), true),
        arc("b1".into(), q(j + 1), q(j + 2), true),
        arc("a1".into(), q(j + 1), q(j + 2), false),
        arc("b1".into(), q(j), q(j + 1), false),
    ]
}

/// Genus-one diagram of L(p, 1) with one boundary component, for `p ≥ 1`
/// (`p = 1` is S³). Its interior regions are `R1..R{p-1}`.
pub fn lens_space(name: &str, p: usize) -> SuturedDiagram {
    lens_with_basepoints(name, p, &[0])
}

/// The same diagram with a second boundary component in square `w`, which
/// presents the complement of a simple knot in L(p, 1) with two sutures.
pub fn lens_knot(name: &str, p: usize, w: usize) -> SuturedDiagram {
    assert!(w > 0 && w < p, "second boundary component must be in a different square");
    lens_with_basepoints(name, p, &[0, w])
}

fn lens_with_basepoints(name: &str, p: usize, punctured: &[usize]) -> SuturedDiagram {
    assert!(p >= 1);
    let points: Vec<String> = (1..=p).map(|i| format!("q{i}")).collect();
    let regions = (0..p)
        .map(|j| {
            let mut sides = lens_square(p, j);
            let component = punctured.iter().position(|&s| s == j);
            if let Some(c) = component {
                sides.push(RawSide::Suture(c));
            }
            let id = match component {
                Some(0) => "O".to_string(),
                Some(c) => format!("O{c}"),
                None => format!("R{j}"),
            };
            RawRegion { id, outer: component.is_some(), sides }
        })
        .collect();
    link(RawDiagram { name: name.into(), alpha: vec![points.clone()], beta: vec![points], regions })
}

/// Grid diagram of size `n` with an X in column `xs[i]` and an O in column
/// `os[i]` of row `i`. Each marked square becomes its own boundary
/// component (O markings first), so the sutured Floer homology is
/// `HFK^(K) ⊗ (F²)^{⊗(n-1)}`.
///
/// `α_i` is the horizontal circle below row `i` and `β_j` the vertical
/// circle left of column `j`; they meet in the point `q{n·i + j + 1}`.
pub fn grid(name: &str, xs: &[usize], os: &[usize]) -> Result<SuturedDiagram, GridError> {
    let n = xs.len();
    if n < 2 || os.len() != n {
        return Err(GridError::Size);
    }
    for perm in [xs, os] {
        let mut seen = vec![false; n];
        for &c in perm {
            if c >= n || std::mem::replace(&mut seen[c], true) {
                return Err(GridError::NotPermutation);
            }
        }
    }
    if xs.iter().zip(os).any(|(x, o)| x == o) {
        return Err(GridError::SharedSquare);
    }

    let q = |i: usize, j: usize| format!("q{}", n * (i % n) + (j % n) + 1);
    let a = |i: usize| format!("a{}", i % n + 1);
    let b = |j: usize| format!("b{}", j % n + 1);
    let alpha = (0..n).map(|i| (0..n).map(|j| q(i, j)).collect()).collect();
    let beta = (0..n).map(|j| (0..n).map(|i| q(i, j)).collect()).collect();

    let mut regions = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut sides = vec![
                arc(a(i), q(i, j), q(i, j + 1), true),
                arc(b(j + 1), q(i, j + 1), q(i + 1, j + 1), true),
                arc(a(i + 1), q(i + 1, j), q(i + 1, j + 1), false),
                arc(b(j), q(i, j), q(i + 1, j), false),
            ];
            let (id, outer) = if os[i] == j {
                sides.push(RawSide::Suture(i));
                (format!("O{}", i + 1), true)
            } else if xs[i] == j {
                sides.push(RawSide::Suture(n + i));
                (format!("X{}", i + 1), true)
            } else {
                (format!("S{}_{}", i + 1, j + 1), false)
            };
            regions.push(RawRegion { id, outer, sides });
        }
    }
    Ok(link(RawDiagram { name: name.into(), alpha, beta, regions }))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("a grid needs size at least 2 and as many O as X markings")]
    Size,
    #[error("markings must occupy every row and column exactly once")]
    NotPermutation,
    #[error("an X and an O share a square")]
    SharedSquare,
}

/// Helper for hand-built diagrams: `("a1", "q1", "q2", 1)`-style arc sides.
pub(crate) fn from_sides(
    name: &str,
    alpha: &[&[&str]],
    beta: &[&[&str]],
    regions: &[(&str, bool, Vec<RawSide>)],
) -> Result<SuturedDiagram, ParseError> {
    let ids = |c: &[&[&str]]| c.iter().map(|pts| pts.iter().map(|s| s.to_string()).collect()).collect();
    SuturedDiagram::link(RawDiagram {
        name: name.into(),
        alpha: ids(alpha),
        beta: ids(beta),
        regions: regions
            .iter()
            .map(|(id, outer, sides)| RawRegion { id: id.to_string(), outer: *outer, sides: sides.clone() })
            .collect(),
    })
}

pub(crate) fn side(curve: &str, from: &str, to: &str, orient: i64) -> RawSide {
    arc(curve.into(), from.into(), to.into(), orient > 0)
}

pub(crate) fn closed(curve: &str, orient: i64) -> RawSide {
    let orient = if orient > 0 { Orient::Forward } else { Orient::Backward };
    RawSide::Closed { curve: curve.into(), orient }
}

/// Disk with no curves: the product sutured 3-ball.
pub fn ball() -> SuturedDiagram {
    from_sides("ball", &[], &[], &[("O", true, vec![RawSide::Suture(0)])]).expect("static diagram")
}

/// Punctured torus with disjoint α and β: S¹×S² minus a ball, inadmissible
/// because the annulus between the curves is a nonnegative periodic domain.
pub fn s1s2_inadmissible() -> SuturedDiagram {
    from_sides(
        "s1s2-inadmissible",
        &[&[]],
        &[&[]],
        &[
            ("R_int", false, vec![closed("a1", 1), closed("b1", -1)]),
            ("O", true, vec![closed("a1", -1), closed("b1", 1), RawSide::Suture(0)]),
        ],
    )
    .expect("static diagram")
}

/// The same curves after a finger move creating two bigons `B1`, `B2`.
pub fn s1s2_admissible() -> SuturedDiagram {
    from_sides(
        "s1s2-admissible",
        &[&["q1", "q2"]],
        &[&["q1", "q2"]],
        &[
            ("B1", false, vec![side("a1", "q1", "q2", 1), side("b1", "q1", "q2", -1)]),
            ("B2", false, vec![side("b1", "q2", "q1", 1), side("a1", "q2", "q1", -1)]),
            (
                "O",
                true,
                vec![
                    side("b1", "q1", "q2", 1),
                    side("a1", "q2", "q1", 1),
                    RawSide::Suture(0),
                    side("b1", "q2", "q1", -1),
                    side("a1", "q1", "q2", -1),
                ],
            ),
        ],
    )
    .expect("static diagram")
}

/// S³ after a finger move of β across α: three generators and a nonzero
/// differential.
pub fn s3_finger() -> SuturedDiagram {
    let (a0, a1, a2) = (("a1", "q1", "q2"), ("a1", "q2", "q3"), ("a1", "q3", "q1"));
    let (b0, b1, b2) = (("b1", "q1", "q2"), ("b1", "q2", "q3"), ("b1", "q3", "q1"));
    let s = |(c, f, t): (&str, &str, &str), o: i64| side(c, f, t, o);
    from_sides(
        "s3-finger",
        &[&["q1", "q2", "q3"]],
        &[&["q1", "q2", "q3"]],
        &[
            ("U", false, vec![s(a0, 1), s(b0, -1)]),
            ("L", false, vec![s(b1, 1), s(a1, -1)]),
            (
                "O",
                true,
                vec![
                    s(a2, 1),
                    s(b0, 1),
                    s(a1, 1),
                    s(b2, 1),
                    s(a2, -1),
                    s(b1, -1),
                    s(a0, -1),
                    s(b2, -1),
                    RawSide::Suture(0),
                ],
            ),
        ],
    )
    .expect("static diagram")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{validate, Sign};

    #[test]
    fn lens_diagrams_are_valid() {
        for p in 1..=7 {
            let d = lens_space("l", p);
            assert!(validate(&d).is_valid(), "p = {p}: {:?}", validate(&d).violations);
            assert_eq!(d.points().len(), p);
            assert!((0..p).all(|i| d.sign(i) == Sign::Plus));
        }
    }

    #[test]
    fn lens_knots_are_valid() {
        let d = lens_knot("k", 5, 2);
        assert!(validate(&d).is_valid(), "{:?}", validate(&d).violations);
        assert_eq!(d.boundary_components(), 2);
    }

    #[test]
    fn grids_are_valid() {
        let d = grid("g", &[0, 1, 2, 3, 4], &[2, 3, 4, 0, 1]).unwrap();
        assert!(validate(&d).is_valid(), "{:?}", validate(&d).violations);
        assert_eq!(d.interior_regions().len(), 15);
        assert_eq!(d.boundary_components(), 10);
    }

    #[test]
    fn bad_grids_are_rejected() {
        assert_eq!(grid("g", &[0], &[0]).unwrap_err(), GridError::Size);
        assert_eq!(grid("g", &[0, 0], &[1, 1]).unwrap_err(), GridError::NotPermutation);
        assert_eq!(grid("g", &[0, 1], &[0, 1]).unwrap_err(), GridError::SharedSquare);
    }

    #[test]
    fn hand_built_diagrams_are_valid() {
        for d in [ball(), s1s2_inadmissible(), s1s2_admissible(), s3_finger()] {
            assert!(validate(&d).is_valid(), "{}: {:?}", d.name(), validate(&d).violations);
        }
    }
}
