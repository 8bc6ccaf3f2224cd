//! Combinatorial model of a balanced sutured Heegaard diagram (Σ, α, β).
//!
//! A diagram is stored as its cell structure: the α and β curves with the
//! cyclic order of intersection points along each, and the regions of
//! Σ − α − β with their oriented boundary. Everything else (arcs and the
//! regions on either side of them, corners, the four quadrants around each
//! intersection point, intersection signs) is derived while linking.
//!
//! # Conventions
//!
//! * A region's boundary is traversed with the region on the left.
//! * An arc side with orientation `+1` is traversed in the direction of its
//!   curve, so the region is the arc's *left* region; `-1` makes it the
//!   *right* region.
//! * Around an intersection point the four half-edges are `α-out`, `β-out`,
//!   `α-in`, `β-in`. The quadrants are labelled by the pair of half-edges
//!   bounding them: `Q0 = {α-out, β-out}`, `Q1 = {β-out, α-in}`,
//!   `Q2 = {α-in, β-in}`, `Q3 = {β-in, α-out}`.
//! * The sign of a point is `+1` when the counter-clockwise order of the
//!   half-edges is `(α-out, β-out, α-in, β-in)` and `-1` when it is
//!   `(α-out, β-in, α-in, β-out)`. A corner arriving along half-edge `h1`
//!   and leaving along `h2` occupies the sector swept counter-clockwise from
//!   `h2` to `h1`, which pins down the sign.

mod format;
mod validate;

use std::collections::HashMap;
use std::fmt;

use crate::ids::natural_cmp;

pub use format::{parse_diagram, serialize, ParseError};
pub use validate::{validate, ValidationReport, Violation, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveKind {
    Alpha,
    Beta,
}

/// Reference to the `index`-th α or β curve (0-based; labels are 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveRef {
    pub kind: CurveKind,
    pub index: usize,
}

impl CurveRef {
    pub fn alpha(index: usize) -> Self {
        CurveRef { kind: CurveKind::Alpha, index }
    }

    pub fn beta(index: usize) -> Self {
        CurveRef { kind: CurveKind::Beta, index }
    }

    /// Parse a label of the form `a3` / `b1`.
    pub fn from_label(label: &str) -> Option<Self> {
        let (kind, rest) = match label.as_bytes().first()? {
            b'a' => (CurveKind::Alpha, &label[1..]),
            b'b' => (CurveKind::Beta, &label[1..]),
            _ => return None,
        };
        if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let n: usize = rest.parse().ok()?;
        Some(CurveRef { kind, index: n - 1 })
    }
}

impl fmt::Display for CurveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            CurveKind::Alpha => 'a',
            CurveKind::Beta => 'b',
        };
        write!(f, "{}{}", c, self.index + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orient {
    Forward,
    Backward,
}

impl Orient {
    pub fn value(self) -> i64 {
        match self {
            Orient::Forward => 1,
            Orient::Backward => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfEdge {
    AlphaOut,
    BetaOut,
    AlphaIn,
    BetaIn,
}

impl HalfEdge {
    /// Counter-clockwise successor for a point of the given sign.
    fn ccw_next(self, sign: Sign) -> HalfEdge {
        use HalfEdge::*;
        match (sign, self) {
            (Sign::Plus, AlphaOut) => BetaOut,
            (Sign::Plus, BetaOut) => AlphaIn,
            (Sign::Plus, AlphaIn) => BetaIn,
            (Sign::Plus, BetaIn) => AlphaOut,
            (Sign::Minus, AlphaOut) => BetaIn,
            (Sign::Minus, BetaIn) => AlphaIn,
            (Sign::Minus, AlphaIn) => BetaOut,
            (Sign::Minus, BetaOut) => AlphaOut,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    Q0,
    Q1,
    Q2,
    Q3,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::Q0, Quadrant::Q1, Quadrant::Q2, Quadrant::Q3];

    pub fn index(self) -> usize {
        self as usize
    }

    fn between(a: HalfEdge, b: HalfEdge) -> Option<Quadrant> {
        use HalfEdge::*;
        let q = match (a, b) {
            (AlphaOut, BetaOut) | (BetaOut, AlphaOut) => Quadrant::Q0,
            (BetaOut, AlphaIn) | (AlphaIn, BetaOut) => Quadrant::Q1,
            (AlphaIn, BetaIn) | (BetaIn, AlphaIn) => Quadrant::Q2,
            (BetaIn, AlphaOut) | (AlphaOut, BetaIn) => Quadrant::Q3,
            _ => return None,
        };
        Some(q)
    }
}

#[derive(Debug, Clone)]
pub struct IntersectionPoint {
    pub id: String,
    pub alpha: Option<usize>,
    pub beta: Option<usize>,
    /// Derived from corner data; `None` when no corner touches the point.
    pub sign: Option<Sign>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    /// Arc of `curve` from point `from` to its successor `to`.
    Arc {
        curve: CurveRef,
        from: usize,
        to: usize,
        orient: Orient,
    },
    /// A curve without intersection points, taken whole.
    Closed { curve: CurveRef, orient: Orient },
    /// A boundary component of Σ.
    Suture { component: usize },
}

impl Side {
    fn start(&self) -> Option<usize> {
        match *self {
            Side::Arc { from, to, orient, .. } => Some(if orient == Orient::Forward { from } else { to }),
            _ => None,
        }
    }

    fn end(&self) -> Option<usize> {
        match *self {
            Side::Arc { from, to, orient, .. } => Some(if orient == Orient::Forward { to } else { from }),
            _ => None,
        }
    }

    fn arriving(&self) -> Option<HalfEdge> {
        match *self {
            Side::Arc { curve, orient, .. } => Some(match (curve.kind, orient) {
                (CurveKind::Alpha, Orient::Forward) => HalfEdge::AlphaIn,
                (CurveKind::Alpha, Orient::Backward) => HalfEdge::AlphaOut,
                (CurveKind::Beta, Orient::Forward) => HalfEdge::BetaIn,
                (CurveKind::Beta, Orient::Backward) => HalfEdge::BetaOut,
            }),
            _ => None,
        }
    }

    fn departing(&self) -> Option<HalfEdge> {
        match *self {
            Side::Arc { curve, orient, .. } => Some(match (curve.kind, orient) {
                (CurveKind::Alpha, Orient::Forward) => HalfEdge::AlphaOut,
                (CurveKind::Alpha, Orient::Backward) => HalfEdge::AlphaIn,
                (CurveKind::Beta, Orient::Forward) => HalfEdge::BetaOut,
                (CurveKind::Beta, Orient::Backward) => HalfEdge::BetaIn,
            }),
            _ => None,
        }
    }

    /// Whether `next` can follow `self` at a corner.
    fn chains_into(&self, next: &Side) -> bool {
        match (self, next) {
            (Side::Arc { curve: a, .. }, Side::Arc { curve: b, .. }) => {
                a.kind != b.kind && self.end() == next.start()
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub point: usize,
    pub quadrant: Quadrant,
    /// Sign of the point implied by this corner alone.
    pub sign: Sign,
}

#[derive(Debug, Clone)]
pub struct Region {
    pub id: String,
    pub outer: bool,
    pub sides: Vec<Side>,
    /// Boundary cycles as ranges into `sides`.
    pub cycles: Vec<std::ops::Range<usize>>,
    pub corners: Vec<Corner>,
}

impl Region {
    /// Euler characteristic of the region, assuming it is planar.
    pub fn euler_characteristic(&self) -> i64 {
        2 - self.cycles.len() as i64
    }

    pub fn corner_count(&self) -> usize {
        self.corners.len()
    }

    pub fn sutures(&self) -> impl Iterator<Item = usize> + '_ {
        self.sides.iter().filter_map(|s| match s {
            Side::Suture { component } => Some(*component),
            _ => None,
        })
    }
}

/// One arc of a curve, with the regions on either side.
#[derive(Debug, Clone)]
pub struct Arc {
    pub curve: CurveRef,
    /// Endpoints in curve direction; `None` for a pointless closed curve.
    pub ends: Option<(usize, usize)>,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SuturedDiagram {
    name: String,
    alphas: Vec<Vec<usize>>,
    betas: Vec<Vec<usize>>,
    points: Vec<IntersectionPoint>,
    regions: Vec<Region>,
    arcs: Vec<Arc>,
    alpha_arcs: Vec<Vec<usize>>,
    beta_arcs: Vec<Vec<usize>>,
    quadrants: Vec<[Option<usize>; 4]>,
    interior: Vec<usize>,
    interior_ordinal: Vec<Option<usize>>,
    issues: Vec<Violation>,
}

/// Region description with references still unresolved, as read from a file.
#[derive(Debug, Clone)]
pub(crate) struct RawRegion {
    pub id: String,
    pub outer: bool,
    pub sides: Vec<RawSide>,
}

#[derive(Debug, Clone)]
pub(crate) enum RawSide {
    Arc { curve: String, from: String, to: String, orient: Orient },
    Closed { curve: String, orient: Orient },
    Suture(usize),
}

#[derive(Debug, Clone)]
pub(crate) struct RawDiagram {
    pub name: String,
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<String>>,
    pub regions: Vec<RawRegion>,
}

impl SuturedDiagram {
    pub(crate) fn link(raw: RawDiagram) -> Result<Self, ParseError> {
        let mut issues = Vec::new();

        let mut ids: Vec<&String> = raw.alpha.iter().chain(raw.beta.iter()).flatten().collect();
        ids.sort_by(|a, b| natural_cmp(a, b).then_with(|| a.cmp(b)));
        ids.dedup();
        let index: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut points: Vec<IntersectionPoint> = ids
            .iter()
            .map(|id| IntersectionPoint { id: (*id).clone(), alpha: None, beta: None, sign: None })
            .collect();

        let mut resolve_curves = |lists: &[Vec<String>], kind: CurveKind, points: &mut Vec<IntersectionPoint>| {
            let mut curves = Vec::with_capacity(lists.len());
            for (ci, list) in lists.iter().enumerate() {
                let curve = CurveRef { kind, index: ci };
                let mut seq = Vec::with_capacity(list.len());
                for id in list {
                    let p = index[id.as_str()];
                    if seq.contains(&p) {
                        issues.push(Violation::new(
                            ViolationKind::PointIncidence,
                            format!("point {id} appears more than once on {curve}"),
                        ));
                        continue;
                    }
                    seq.push(p);
                    let slot = match kind {
                        CurveKind::Alpha => &mut points[p].alpha,
                        CurveKind::Beta => &mut points[p].beta,
                    };
                    match slot {
                        None => *slot = Some(ci),
                        Some(other) => issues.push(Violation::new(
                            ViolationKind::PointIncidence,
                            format!(
                                "point {id} lies on both {} and {curve}",
                                CurveRef { kind, index: *other }
                            ),
                        )),
                    }
                }
                curves.push(seq);
            }
            curves
        };
        let alphas = resolve_curves(&raw.alpha, CurveKind::Alpha, &mut points);
        let betas = resolve_curves(&raw.beta, CurveKind::Beta, &mut points);
        for p in &points {
            if p.alpha.is_none() {
                issues.push(Violation::new(ViolationKind::PointIncidence, format!("point {} lies on no alpha curve", p.id)));
            }
            if p.beta.is_none() {
                issues.push(Violation::new(ViolationKind::PointIncidence, format!("point {} lies on no beta curve", p.id)));
            }
        }

        // Arcs: a curve with m > 0 points has m arcs, arc i running from
        // points[i] to points[i + 1 mod m]; a pointless curve is one arc.
        let mut arcs = Vec::new();
        let mut build_arcs = |curves: &[Vec<usize>], kind: CurveKind| -> Vec<Vec<usize>> {
            curves
                .iter()
                .enumerate()
                .map(|(ci, seq)| {
                    let curve = CurveRef { kind, index: ci };
                    if seq.is_empty() {
                        arcs.push(Arc { curve, ends: None, left: None, right: None });
                        vec![arcs.len() - 1]
                    } else {
                        (0..seq.len())
                            .map(|i| {
                                let ends = (seq[i], seq[(i + 1) % seq.len()]);
                                arcs.push(Arc { curve, ends: Some(ends), left: None, right: None });
                                arcs.len() - 1
                            })
                            .collect()
                    }
                })
                .collect()
        };
        let alpha_arcs = build_arcs(&alphas, CurveKind::Alpha);
        let beta_arcs = build_arcs(&betas, CurveKind::Beta);

        let curve_of = |label: &str, region: &str| -> Result<CurveRef, ParseError> {
            let c = CurveRef::from_label(label).filter(|c| match c.kind {
                CurveKind::Alpha => c.index < alphas.len(),
                CurveKind::Beta => c.index < betas.len(),
            });
            c.ok_or_else(|| ParseError::Reference { region: region.to_string(), kind: "curve", id: label.to_string() })
        };
        let point_of = |id: &str, region: &str| -> Result<usize, ParseError> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| ParseError::Reference { region: region.to_string(), kind: "point", id: id.to_string() })
        };

        let mut regions = Vec::with_capacity(raw.regions.len());
        for r in &raw.regions {
            let mut sides = Vec::with_capacity(r.sides.len());
            for s in &r.sides {
                sides.push(match s {
                    RawSide::Arc { curve, from, to, orient } => Side::Arc {
                        curve: curve_of(curve, &r.id)?,
                        from: point_of(from, &r.id)?,
                        to: point_of(to, &r.id)?,
                        orient: *orient,
                    },
                    RawSide::Closed { curve, orient } => Side::Closed { curve: curve_of(curve, &r.id)?, orient: *orient },
                    RawSide::Suture(c) => Side::Suture { component: *c },
                });
            }
            regions.push(Region { id: r.id.clone(), outer: r.outer, sides, cycles: Vec::new(), corners: Vec::new() });
        }

        let mut diagram = SuturedDiagram {
            name: raw.name,
            alphas,
            betas,
            points,
            regions,
            arcs,
            alpha_arcs,
            beta_arcs,
            quadrants: Vec::new(),
            interior: Vec::new(),
            interior_ordinal: Vec::new(),
            issues,
        };
        diagram.derive_cells();
        Ok(diagram)
    }

    fn curve_points(&self, c: CurveRef) -> &[usize] {
        match c.kind {
            CurveKind::Alpha => &self.alphas[c.index],
            CurveKind::Beta => &self.betas[c.index],
        }
    }

    fn curve_arc_ids(&self, c: CurveRef) -> &[usize] {
        match c.kind {
            CurveKind::Alpha => &self.alpha_arcs[c.index],
            CurveKind::Beta => &self.beta_arcs[c.index],
        }
    }

    /// Arc index of a side, if the side names an arc that exists.
    fn arc_of_side(&self, side: &Side) -> Result<usize, String> {
        match *side {
            Side::Arc { curve, from, to, .. } => {
                let seq = self.curve_points(curve);
                let Some(i) = seq.iter().position(|&p| p == from) else {
                    return Err(format!("point {} is not on {curve}", self.points[from].id));
                };
                let succ = seq[(i + 1) % seq.len()];
                if succ != to {
                    return Err(format!(
                        "{curve}: the point after {} is {}, not {}",
                        self.points[from].id, self.points[succ].id, self.points[to].id
                    ));
                }
                Ok(self.curve_arc_ids(curve)[i])
            }
            Side::Closed { curve, .. } => {
                if self.curve_points(curve).is_empty() {
                    Ok(self.curve_arc_ids(curve)[0])
                } else {
                    Err(format!("{curve} has intersection points but is used as a closed side"))
                }
            }
            Side::Suture { .. } => Err("suture side has no arc".into()),
        }
    }

    fn derive_cells(&mut self) {
        let mut issues = Vec::new();
        let mut quadrants: Vec<[Option<usize>; 4]> = vec![[None; 4]; self.points.len()];
        let mut signs: Vec<Option<Sign>> = vec![None; self.points.len()];

        for ri in 0..self.regions.len() {
            // Boundary cycles: a maximal chain of arc sides forms one cycle,
            // every closed-curve or suture side is a cycle of its own.
            let sides = self.regions[ri].sides.clone();
            let mut cycles = Vec::new();
            let mut corners = Vec::new();
            let mut i = 0;
            while i < sides.len() {
                if !matches!(sides[i], Side::Arc { .. }) {
                    cycles.push(i..i + 1);
                    i += 1;
                    continue;
                }
                let mut j = i;
                while j + 1 < sides.len() && sides[j].chains_into(&sides[j + 1]) {
                    j += 1;
                }
                if !sides[j].chains_into(&sides[i]) {
                    issues.push(Violation::new(
                        ViolationKind::OpenBoundaryCycle,
                        format!("region {}: boundary cycle starting at side {} does not close", self.regions[ri].id, i),
                    ));
                }
                for s in i..=j {
                    let next = if s == j { i } else { s + 1 };
                    let (a, b) = (&sides[s], &sides[next]);
                    if !a.chains_into(b) {
                        continue;
                    }
                    let point = a.end().expect("arc side");
                    let h1 = a.arriving().expect("arc side");
                    let h2 = b.departing().expect("arc side");
                    let quadrant = Quadrant::between(h1, h2).expect("alternating corner");
                    let sign = if h2.ccw_next(Sign::Plus) == h1 { Sign::Plus } else { Sign::Minus };
                    corners.push(Corner { point, quadrant, sign });
                }
                cycles.push(i..j + 1);
                i = j + 1;
            }

            for c in &corners {
                let slot = &mut quadrants[c.point][c.quadrant.index()];
                if let Some(other) = slot {
                    issues.push(Violation::new(
                        ViolationKind::QuadrantCoverage,
                        format!(
                            "quadrant {:?} of point {} claimed by regions {} and {}",
                            c.quadrant, self.points[c.point].id, self.regions[*other].id, self.regions[ri].id
                        ),
                    ));
                } else {
                    *slot = Some(ri);
                }
                match signs[c.point] {
                    None => signs[c.point] = Some(c.sign),
                    Some(s) if s != c.sign => issues.push(Violation::new(
                        ViolationKind::SignConsistency,
                        format!(
                            "corners of region {} at point {} disagree on the intersection sign",
                            self.regions[ri].id, self.points[c.point].id
                        ),
                    )),
                    _ => {}
                }
            }

            for side in &sides {
                if matches!(side, Side::Suture { .. }) {
                    continue;
                }
                match self.arc_of_side(side) {
                    Ok(a) => {
                        let orient = match side {
                            Side::Arc { orient, .. } | Side::Closed { orient, .. } => *orient,
                            Side::Suture { .. } => unreachable!(),
                        };
                        let arc = &mut self.arcs[a];
                        let slot = if orient == Orient::Forward { &mut arc.left } else { &mut arc.right };
                        if slot.is_some() {
                            issues.push(Violation::new(
                                ViolationKind::ArcSides,
                                format!(
                                    "region {}: an arc of {} is used twice with orientation {}",
                                    self.regions[ri].id,
                                    arc.curve,
                                    orient.value()
                                ),
                            ));
                        } else {
                            *slot = Some(ri);
                        }
                    }
                    Err(msg) => issues.push(Violation::new(
                        ViolationKind::CurveOrder,
                        format!("region {}: {msg}", self.regions[ri].id),
                    )),
                }
            }

            self.regions[ri].cycles = cycles;
            self.regions[ri].corners = corners;
        }

        for arc in &self.arcs {
            if arc.left.is_none() || arc.right.is_none() {
                let what = match arc.ends {
                    Some((f, t)) => format!("arc {}..{} of {}", self.points[f].id, self.points[t].id, arc.curve),
                    None => format!("closed curve {}", arc.curve),
                };
                issues.push(Violation::new(
                    ViolationKind::ArcSides,
                    format!("{what} does not border exactly one region on each side"),
                ));
            }
        }
        for (p, quads) in quadrants.iter().enumerate() {
            for q in Quadrant::ALL {
                if quads[q.index()].is_none() {
                    issues.push(Violation::new(
                        ViolationKind::QuadrantCoverage,
                        format!("quadrant {:?} of point {} lies in no region", q, self.points[p].id),
                    ));
                }
            }
        }
        for (p, s) in signs.into_iter().enumerate() {
            self.points[p].sign = s;
        }

        let mut interior: Vec<usize> = (0..self.regions.len()).filter(|&r| !self.regions[r].outer).collect();
        interior.sort_by(|&a, &b| natural_cmp(&self.regions[a].id, &self.regions[b].id).then(a.cmp(&b)));
        let mut ordinal = vec![None; self.regions.len()];
        for (o, &r) in interior.iter().enumerate() {
            ordinal[r] = Some(o);
        }

        self.quadrants = quadrants;
        self.interior = interior;
        self.interior_ordinal = ordinal;
        self.issues.extend(issues);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of α curves (equal to the number of β curves when balanced).
    pub fn k(&self) -> usize {
        self.alphas.len()
    }

    pub fn alpha_count(&self) -> usize {
        self.alphas.len()
    }

    pub fn beta_count(&self) -> usize {
        self.betas.len()
    }

    /// Points of the `i`-th α curve in cyclic order.
    pub fn alpha(&self, i: usize) -> &[usize] {
        &self.alphas[i]
    }

    pub fn beta(&self, j: usize) -> &[usize] {
        &self.betas[j]
    }

    pub fn points(&self) -> &[IntersectionPoint] {
        &self.points
    }

    pub fn point_id(&self, p: usize) -> &str {
        &self.points[p].id
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arc indices of a curve, in curve order.
    pub fn curve_arcs(&self, c: CurveRef) -> &[usize] {
        self.curve_arc_ids(c)
    }

    /// Interior regions (disjoint from ∂Σ) in natural id order; positions in
    /// this list index the entries of a [`crate::DomainVector`].
    pub fn interior_regions(&self) -> &[usize] {
        &self.interior
    }

    pub fn interior_ordinal(&self, region: usize) -> Option<usize> {
        self.interior_ordinal.get(region).copied().flatten()
    }

    pub fn interior_ids(&self) -> Vec<&str> {
        self.interior.iter().map(|&r| self.regions[r].id.as_str()).collect()
    }

    /// Region holding the given quadrant of a point.
    pub fn quadrant_region(&self, point: usize, q: Quadrant) -> Option<usize> {
        self.quadrants[point][q.index()]
    }

    /// Sign of a point, `+1` when undetermined.
    pub fn sign(&self, point: usize) -> Sign {
        self.points[point].sign.unwrap_or(Sign::Plus)
    }

    /// Number of distinct boundary components of Σ named by suture sides.
    pub fn boundary_components(&self) -> usize {
        let mut seen: Vec<usize> = self.regions.iter().flat_map(|r| r.sutures()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub(crate) fn link_issues(&self) -> &[Violation] {
        &self.issues
    }

    /// Rename point ids, keeping everything else. Used to check that numeric
    /// outputs do not depend on labels.
    pub fn relabel_points(&self, rename: impl Fn(&str) -> String) -> Result<SuturedDiagram, ParseError> {
        let mut raw = self.to_raw();
        for list in raw.alpha.iter_mut().chain(raw.beta.iter_mut()) {
            for id in list.iter_mut() {
                *id = rename(id);
            }
        }
        for r in &mut raw.regions {
            for s in &mut r.sides {
                if let RawSide::Arc { from, to, .. } = s {
                    *from = rename(from);
                    *to = rename(to);
                }
            }
        }
        SuturedDiagram::link(raw)
    }

    pub(crate) fn to_raw(&self) -> RawDiagram {
        let ids = |seq: &Vec<usize>| seq.iter().map(|&p| self.points[p].id.clone()).collect::<Vec<_>>();
        RawDiagram {
            name: self.name.clone(),
            alpha: self.alphas.iter().map(ids).collect(),
            beta: self.betas.iter().map(ids).collect(),
            regions: self
                .regions
                .iter()
                .map(|r| RawRegion {
                    id: r.id.clone(),
                    outer: r.outer,
                    sides: r
                        .sides
                        .iter()
                        .map(|s| match *s {
                            Side::Arc { curve, from, to, orient } => RawSide::Arc {
                                curve: curve.to_string(),
                                from: self.points[from].id.clone(),
                                to: self.points[to].id.clone(),
                                orient,
                            },
                            Side::Closed { curve, orient } => RawSide::Closed { curve: curve.to_string(), orient },
                            Side::Suture { component } => RawSide::Suture(component),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Unsigned and signed α/β intersection matrices; entry `(i, j)` concerns
/// `α_i ∩ β_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrices {
    pub unsigned: Vec<Vec<u64>>,
    pub signed: Vec<Vec<i64>>,
}

pub fn intersection_matrix(d: &SuturedDiagram) -> IntersectionMatrices {
    let rows = d.alpha_count();
    let cols = d.beta_count();
    let mut unsigned = vec![vec![0u64; cols]; rows];
    let mut signed = vec![vec![0i64; cols]; rows];
    for (p, point) in d.points().iter().enumerate() {
        if let (Some(i), Some(j)) = (point.alpha, point.beta) {
            unsigned[i][j] += 1;
            signed[i][j] += d.sign(p).value();
        }
    }
    IntersectionMatrices { unsigned, signed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn curve_labels() {
        assert_eq!(CurveRef::from_label("a1"), Some(CurveRef::alpha(0)));
        assert_eq!(CurveRef::from_label("b12"), Some(CurveRef::beta(11)));
        assert_eq!(CurveRef::from_label("a0"), None);
        assert_eq!(CurveRef::from_label("a01"), None);
        assert_eq!(CurveRef::from_label("c1"), None);
        assert_eq!(CurveRef::from_label("a"), None);
        assert_eq!(CurveRef::beta(2).to_string(), "b3");
    }

    #[test]
    fn s3_has_one_point_and_one_outer_region() {
        let d = corpus::load("s3").unwrap();
        assert_eq!(d.k(), 1);
        assert_eq!(d.points().len(), 1);
        assert_eq!(d.regions().len(), 1);
        assert!(d.regions()[0].outer);
        assert_eq!(d.regions()[0].corner_count(), 4);
        assert_eq!(d.sign(0), Sign::Plus);
    }

    #[test]
    fn ball_is_empty() {
        let d = corpus::load("ball").unwrap();
        assert_eq!(d.k(), 0);
        assert!(d.points().is_empty());
        assert_eq!(d.regions().len(), 1);
        assert_eq!(intersection_matrix(&d).unsigned, Vec::<Vec<u64>>::new());
    }

    #[test]
    fn intersection_matrices_of_small_corpus() {
        let m = intersection_matrix(&corpus::load("s3").unwrap());
        assert_eq!(m.unsigned, vec![vec![1]]);
        assert_eq!(m.signed[0][0].abs(), 1);

        let m = intersection_matrix(&corpus::load("s1s2-inadmissible").unwrap());
        assert_eq!(m.unsigned, vec![vec![0]]);
        assert_eq!(m.signed, vec![vec![0]]);

        let m = intersection_matrix(&corpus::load("rp3").unwrap());
        assert_eq!(m.unsigned, vec![vec![2]]);
        assert_eq!(m.signed[0][0].abs(), 2);

        let m = intersection_matrix(&corpus::load("s1s2-admissible").unwrap());
        assert_eq!(m.unsigned, vec![vec![2]]);
        assert_eq!(m.signed, vec![vec![0]]);
    }

    #[test]
    fn corner_quarters_sum_to_point_count() {
        for entry in corpus::entries() {
            let d = entry.diagram();
            let corners: usize = d.regions().iter().map(|r| r.corner_count()).sum();
            assert_eq!(corners, 4 * d.points().len(), "{}", entry.name);
        }
    }

    #[test]
    fn arcs_know_their_sides() {
        let d = corpus::load("s1s2-admissible").unwrap();
        for arc in d.arcs() {
            assert!(arc.left.is_some() && arc.right.is_some());
            assert_ne!(arc.left, arc.right);
        }
    }
}
