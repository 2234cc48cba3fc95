//! Exact 2D cone and chamber arithmetic on the `(H, Δ)`-plane: primitive
//! rays, membership tests, the stable-base-locus chamber tables for both
//! spaces, the log-model lookup, and the wall-crossing walk.
//!
//! Wall membership follows the base-locus proofs rather than the bare
//! chamber statements: the nef walls are base point free on each space, the
//! `F` wall belongs to the multi-image chamber on the stable-map side, and
//! the `Ddeg` wall belongs to the degenerate chamber.

pub mod diagram;

use crate::exact::Rat;
use crate::picard::{to_alpha, DivisorClass, ExtendedAlpha, NamedDivisorTable, ZeroClassError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// A primitive integer direction `(p, q)` in the `(H, Δ)`-plane. The pair is
/// coprime and keeps the orientation of the class it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ray {
    pub p: BigInt,
    pub q: BigInt,
}

impl Ray {
    pub fn new(p: i64, q: i64) -> Self {
        assert!(p != 0 || q != 0, "zero ray");
        Ray::normalize(BigInt::from(p), BigInt::from(q))
    }

    fn normalize(p: BigInt, q: BigInt) -> Self {
        let g = p.gcd(&q);
        Ray {
            p: &p / &g,
            q: &q / &g,
        }
    }

    /// The determinant `self.p * other.q - self.q * other.p`.
    pub fn det(&self, other: &Ray) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    pub fn is_parallel(&self, other: &Ray) -> bool {
        self.det(other).is_zero()
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// The primitive integer direction of a nonzero divisor class.
pub fn ray_of(d: &DivisorClass) -> Result<Ray, ZeroClassError> {
    if d.is_zero() {
        return Err(ZeroClassError);
    }
    // Clear denominators with a positive factor, then divide by the gcd.
    let lcm = d.h.denom().lcm(d.d.denom());
    let p = d.h.numer() * (&lcm / d.h.denom());
    let q = d.d.numer() * (&lcm / d.d.denom());
    Ok(Ray::normalize(p, q))
}

/// Which compactification a chamber query refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    Kontsevich,
    Hilbert,
}

impl Space {
    pub fn json_name(self) -> &'static str {
        match self {
            Space::Kontsevich => "kontsevich",
            Space::Hilbert => "hilbert",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.json_name())
    }
}

impl std::str::FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "kontsevich" | "m" => Ok(Space::Kontsevich),
            "hilbert" | "h" => Ok(Space::Hilbert),
            other => Err(format!("unknown space `{other}` (kontsevich|hilbert)")),
        }
    }
}

/// Stable base locus of an effective class, by chamber.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseLocus {
    Empty,
    BoundaryDelta,
    MultiImage,
    Degenerate,
    Nonreduced,
    NotEffective,
}

impl BaseLocus {
    pub fn json_name(self) -> &'static str {
        match self {
            BaseLocus::Empty => "empty",
            BaseLocus::BoundaryDelta => "boundary_delta",
            BaseLocus::MultiImage => "multi_image",
            BaseLocus::Degenerate => "degenerate",
            BaseLocus::Nonreduced => "nonreduced",
            BaseLocus::NotEffective => "not_effective",
        }
    }

    /// Figure-style label.
    pub fn short_label(self) -> &'static str {
        match self {
            BaseLocus::Empty => "∅",
            BaseLocus::BoundaryDelta => "Δ",
            BaseLocus::MultiImage => "M",
            BaseLocus::Degenerate => "D_deg",
            BaseLocus::Nonreduced => "N",
            BaseLocus::NotEffective => "-",
        }
    }
}

impl fmt::Display for BaseLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.json_name())
    }
}

/// The log canonical model attached to a slope `α`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Model {
    Kontsevich,
    ChowVariety,
    HilbertComponent,
    NetsOfQuadrics,
    TwoStableMaps,
    OutsidePseudoeffective,
    UndeterminedWall,
}

impl Model {
    pub fn json_name(self) -> &'static str {
        match self {
            Model::Kontsevich => "kontsevich",
            Model::ChowVariety => "chow_variety",
            Model::HilbertComponent => "hilbert_component",
            Model::NetsOfQuadrics => "nets_of_quadrics_h2",
            Model::TwoStableMaps => "two_stable_maps",
            Model::OutsidePseudoeffective => "outside_pseudoeffective",
            Model::UndeterminedWall => "undetermined_wall",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.json_name())
    }
}

/// Position of a class relative to a closed two-ray cone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Position {
    Interior,
    OnBoundary,
    Outside,
}

/// The two bounding rays are parallel and span no cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegenerateCone;

impl fmt::Display for DegenerateCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degenerate cone: bounding rays are parallel")
    }
}

impl std::error::Error for DegenerateCone {}

/// Locates `d` in the closed convex cone spanned by `lo` and `hi`, by the
/// signs of exact 2×2 determinants. The zero class sits on the boundary
/// (the apex).
pub fn cone_position(d: &DivisorClass, lo: &Ray, hi: &Ray) -> Result<Position, DegenerateCone> {
    let den = lo.det(hi);
    if den.is_zero() {
        return Err(DegenerateCone);
    }
    // d = s·lo + t·hi  =>  s = det(d, hi)/det(lo, hi), t = det(lo, d)/det(lo, hi).
    let det_d_hi = &d.h * &Rat::from_bigint(hi.q.clone()) - &d.d * &Rat::from_bigint(hi.p.clone());
    let det_lo_d = &Rat::from_bigint(lo.p.clone()) * &d.d - &Rat::from_bigint(lo.q.clone()) * &d.h;
    let den_sign = if den.is_negative() { -1 } else { 1 };
    let s_sign = det_d_hi.signum() * den_sign;
    let t_sign = det_lo_d.signum() * den_sign;
    Ok(if s_sign > 0 && t_sign > 0 {
        Position::Interior
    } else if s_sign >= 0 && t_sign >= 0 {
        Position::OnBoundary
    } else {
        Position::Outside
    })
}

/// A wall of the chamber decomposition: a named primitive ray with its slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub name: &'static str,
    pub ray: Ray,
    pub alpha: ExtendedAlpha,
}

/// The five walls in strictly decreasing slope order:
/// `Delta (∞), T (1), H (0), F (-1/5), Ddeg (-1/2)`.
pub fn walls() -> Vec<Wall> {
    let table = NamedDivisorTable::standard();
    ["Delta", "T", "H", "F", "Ddeg"]
        .into_iter()
        .map(|name| {
            let class = table.get(name).unwrap();
            let (_, alpha) = to_alpha(class).unwrap();
            Wall {
                name,
                ray: ray_of(class).unwrap(),
                alpha,
            }
        })
        .collect()
}

/// Stable base locus by slope. The tables differ between the two spaces
/// exactly on the chambers flanking the shared nef wall `H` and on the nef
/// walls themselves.
pub fn base_locus_at(alpha: &ExtendedAlpha, space: Space) -> BaseLocus {
    let one = ExtendedAlpha::Finite(Rat::one());
    let zero = ExtendedAlpha::Finite(Rat::zero());
    let neg_fifth = ExtendedAlpha::finite(-1, 5);
    let neg_half = ExtendedAlpha::finite(-1, 2);
    if *alpha < neg_half {
        return BaseLocus::NotEffective;
    }
    match space {
        Space::Kontsevich => {
            if *alpha > one {
                BaseLocus::BoundaryDelta
            } else if *alpha >= zero {
                BaseLocus::Empty
            } else if *alpha >= neg_fifth {
                BaseLocus::MultiImage
            } else {
                BaseLocus::Degenerate
            }
        }
        Space::Hilbert => {
            if *alpha > one {
                BaseLocus::BoundaryDelta
            } else if *alpha > zero {
                BaseLocus::Nonreduced
            } else if *alpha >= neg_fifth {
                BaseLocus::Empty
            } else {
                BaseLocus::Degenerate
            }
        }
    }
}

/// Stable base locus of a divisor class. Classes outside the effective cone
/// report `NotEffective`; the zero class is trivially base point free.
pub fn base_locus(d: &DivisorClass, space: Space) -> BaseLocus {
    if d.is_zero() {
        return BaseLocus::Empty;
    }
    let (lo, hi) = effective_cone();
    match cone_position(d, &lo, &hi).expect("effective cone is nondegenerate") {
        Position::Outside => BaseLocus::NotEffective,
        _ => {
            let (_, alpha) = to_alpha(d).expect("nonzero class");
            base_locus_at(&alpha, space)
        }
    }
}

/// Log canonical model for a slope, per interval:
/// `(-1/2, -1/5]` nets of quadrics, `(-1/5, 0)` Hilbert component, `{0}`
/// Chow variety, `(0, 1)` stable maps, `[1, ∞)` 2-stable maps. The wall
/// `α = -1/2` and the pure-`Δ` ray have no stated model.
pub fn log_model(alpha: &ExtendedAlpha) -> Model {
    let a = match alpha {
        ExtendedAlpha::Infinity => return Model::UndeterminedWall,
        ExtendedAlpha::Finite(a) => a,
    };
    let neg_half = Rat::new(-1, 2);
    let neg_fifth = Rat::new(-1, 5);
    if *a < neg_half {
        Model::OutsidePseudoeffective
    } else if *a == neg_half {
        Model::UndeterminedWall
    } else if *a <= neg_fifth {
        Model::NetsOfQuadrics
    } else if a.is_negative() {
        Model::HilbertComponent
    } else if a.is_zero() {
        Model::ChowVariety
    } else if *a < Rat::one() {
        Model::Kontsevich
    } else {
        Model::TwoStableMaps
    }
}

/// Nef cone of the chosen space: `(H, T)` on the stable-map space and
/// `(F, H)` on the Hilbert component.
pub fn nef_cone(space: Space) -> (Ray, Ray) {
    match space {
        Space::Kontsevich => (Ray::new(1, 0), Ray::new(1, 1)),
        Space::Hilbert => (Ray::new(5, -1), Ray::new(1, 0)),
    }
}

/// Effective cone `(Δ, Ddeg)`, shared by both spaces.
pub fn effective_cone() -> (Ray, Ray) {
    (Ray::new(0, 1), Ray::new(2, -1))
}

/// Checks by ray arithmetic that the two nef cones glue along the shared
/// wall `H` with no gap and no two-dimensional overlap, so their union is
/// exactly `cone(F, T)` — the chamber-by-chamber witness that every movable
/// class becomes nef on one of the two birational models.
pub fn nef_cones_cover_moving_cone() -> bool {
    let (h_k, t) = nef_cone(Space::Kontsevich);
    let (f, h_h) = nef_cone(Space::Hilbert);
    if h_k != h_h {
        return false;
    }
    // Same rotational orientation from T through H to F means the two cones
    // tile cone(F, T), meeting exactly in the ray H.
    let d1 = t.det(&h_k);
    let d2 = h_k.det(&f);
    if d1.is_zero() || d2.is_zero() || (d1.is_negative() != d2.is_negative()) {
        return false;
    }
    // H must lie strictly inside cone(F, T).
    let h_class = DivisorClass::from_ints(1, 0);
    cone_position(&h_class, &f, &t) == Ok(Position::Interior)
}

/// One birational step attached to a wall crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transition {
    Isomorphism,
    SmallContraction { locus: &'static str },
    Flip { removed: &'static str, inserted: &'static str },
    DivisorialContraction { divisor: &'static str },
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transition::Isomorphism => write!(f, "isomorphism"),
            Transition::SmallContraction { locus } => {
                write!(f, "small contraction of {locus}")
            }
            Transition::Flip { removed, inserted } => {
                write!(f, "flip replacing {removed} by {inserted}")
            }
            Transition::DivisorialContraction { divisor } => {
                write!(f, "divisorial contraction of {divisor}")
            }
        }
    }
}

/// A transition step labelled by the map realizing it. `reverse` marks a
/// crossing against the contraction direction (the map goes from the model
/// below the wall to the model above it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionStep {
    pub transition: Transition,
    pub map_name: &'static str,
    pub reverse: bool,
}

impl fmt::Display for TransitionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}{}]", self.transition, self.map_name, if self.reverse { ", crossed in reverse" } else { "" })
    }
}

/// Closed/open interval of slopes, possibly a single point or unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaInterval {
    pub lo: ExtendedAlpha,
    pub hi: ExtendedAlpha,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl AlphaInterval {
    fn point(a: Rat) -> Self {
        let a = ExtendedAlpha::Finite(a);
        AlphaInterval {
            lo: a.clone(),
            hi: a,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn contains(&self, a: &ExtendedAlpha) -> bool {
        let above = *a > self.lo || (self.lo_closed && *a == self.lo);
        let below = *a < self.hi || (self.hi_closed && *a == self.hi);
        above && below
    }

    /// Nonempty intersection with the closed interval `[lo, hi]`.
    fn meets_closed(&self, lo: &ExtendedAlpha, hi: &ExtendedAlpha) -> bool {
        // max(lo, self.lo) <= min(hi, self.hi), with strictness at open ends.
        let low_end = if self.lo >= *lo { (&self.lo, self.lo_closed) } else { (lo, true) };
        let high_end = if self.hi <= *hi { (&self.hi, self.hi_closed) } else { (hi, true) };
        match low_end.0.cmp(high_end.0) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => low_end.1 && high_end.1,
            std::cmp::Ordering::Greater => false,
        }
    }
}

impl fmt::Display for AlphaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", self.lo);
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { "[" } else { "(" },
            self.lo,
            self.hi,
            if self.hi_closed { "]" } else { ")" },
        )
    }
}

/// A maximal run of slopes with a constant model, plus the wall crossing to
/// the next (lower) segment when the walk continues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkSegment {
    pub interval: AlphaInterval,
    pub model: Model,
    pub exit: Option<WallCrossing>,
}

/// The steps performed when the walk leaves a segment through a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallCrossing {
    pub at: Rat,
    pub wall: &'static str,
    pub steps: Vec<TransitionStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub from: Rat,
    pub to: Rat,
    pub segments: Vec<WalkSegment>,
}

/// Walk parameters outside the pseudoeffective range `(-1/2, ∞)` or not
/// strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkOutOfRange {
    pub from: Rat,
    pub to: Rat,
}

impl fmt::Display for WalkOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "walk from {} to {} must strictly decrease inside (-1/2, ∞)",
            self.from, self.to
        )
    }
}

impl std::error::Error for WalkOutOfRange {}

fn model_pieces() -> Vec<(AlphaInterval, Model)> {
    vec![
        (
            AlphaInterval {
                lo: ExtendedAlpha::Finite(Rat::one()),
                hi: ExtendedAlpha::Infinity,
                lo_closed: true,
                hi_closed: false,
            },
            Model::TwoStableMaps,
        ),
        (
            AlphaInterval {
                lo: ExtendedAlpha::Finite(Rat::zero()),
                hi: ExtendedAlpha::Finite(Rat::one()),
                lo_closed: false,
                hi_closed: false,
            },
            Model::Kontsevich,
        ),
        (AlphaInterval::point(Rat::zero()), Model::ChowVariety),
        (
            AlphaInterval {
                lo: ExtendedAlpha::finite(-1, 5),
                hi: ExtendedAlpha::Finite(Rat::zero()),
                lo_closed: false,
                hi_closed: false,
            },
            Model::HilbertComponent,
        ),
        (
            AlphaInterval {
                lo: ExtendedAlpha::finite(-1, 2),
                hi: ExtendedAlpha::finite(-1, 5),
                lo_closed: false,
                hi_closed: true,
            },
            Model::NetsOfQuadrics,
        ),
    ]
}

fn crossing_between(upper: Model, lower: Model) -> WallCrossing {
    match (upper, lower) {
        (Model::TwoStableMaps, Model::Kontsevich) => WallCrossing {
            at: Rat::one(),
            wall: "T",
            steps: vec![TransitionStep {
                transition: Transition::DivisorialContraction { divisor: "Delta" },
                map_name: "theta",
                reverse: true,
            }],
        },
        (Model::Kontsevich, Model::ChowVariety) => WallCrossing {
            at: Rat::zero(),
            wall: "H",
            steps: vec![TransitionStep {
                transition: Transition::SmallContraction { locus: "M" },
                map_name: "f",
                reverse: false,
            }],
        },
        (Model::ChowVariety, Model::HilbertComponent) => WallCrossing {
            at: Rat::zero(),
            wall: "H",
            steps: vec![TransitionStep {
                transition: Transition::Flip {
                    removed: "M",
                    inserted: "N",
                },
                map_name: "g",
                reverse: false,
            }],
        },
        (Model::HilbertComponent, Model::NetsOfQuadrics) => WallCrossing {
            at: Rat::new(-1, 5),
            wall: "F",
            steps: vec![TransitionStep {
                transition: Transition::DivisorialContraction { divisor: "Ddeg" },
                map_name: "h",
                reverse: false,
            }],
        },
        _ => unreachable!("model pieces are consecutive"),
    }
}

/// Walks the slope down from `alpha_from` to `alpha_to` and reports every
/// model crossed (with its full constancy interval) and the birational step
/// at each wall. Crossing `α = 0` passes through the Chow variety: the
/// small contraction followed by the flip.
pub fn mmp_walk(alpha_from: &Rat, alpha_to: &Rat) -> Result<Walk, WalkOutOfRange> {
    let neg_half = Rat::new(-1, 2);
    if alpha_from <= alpha_to || *alpha_to <= neg_half {
        return Err(WalkOutOfRange {
            from: alpha_from.clone(),
            to: alpha_to.clone(),
        });
    }
    let lo = ExtendedAlpha::Finite(alpha_to.clone());
    let hi = ExtendedAlpha::Finite(alpha_from.clone());
    let hit: Vec<(AlphaInterval, Model)> = model_pieces()
        .into_iter()
        .filter(|(iv, _)| iv.meets_closed(&lo, &hi))
        .collect();
    let mut segments = Vec::new();
    for (i, (interval, model)) in hit.iter().enumerate() {
        let exit = hit
            .get(i + 1)
            .map(|(_, next_model)| crossing_between(*model, *next_model));
        segments.push(WalkSegment {
            interval: interval.clone(),
            model: *model,
            exit,
        });
    }
    Ok(Walk {
        from: alpha_from.clone(),
        to: alpha_to.clone(),
        segments,
    })
}

impl Walk {
    /// Compact arrow form, e.g.
    /// `kontsevich (0, 1) -f-> chow_variety {0} -g-> ...`.
    pub fn arrow_line(&self) -> String {
        let mut out = String::new();
        for seg in &self.segments {
            out.push_str(&format!("{} {}", seg.model, seg.interval));
            if let Some(cross) = &seg.exit {
                let maps: Vec<&str> = cross.steps.iter().map(|s| s.map_name).collect();
                out.push_str(&format!(" -{}-> ", maps.join("/")));
            }
        }
        out
    }

    /// The models visited, in order.
    pub fn models(&self) -> Vec<Model> {
        self.segments.iter().map(|s| s.model).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: i64, d: i64) -> ExtendedAlpha {
        ExtendedAlpha::finite(n, d)
    }

    #[test]
    fn rays_are_primitive_and_oriented() {
        let f = DivisorClass::new(Rat::new(5, 3), Rat::new(-1, 3));
        assert_eq!(ray_of(&f).unwrap(), Ray::new(5, -1));
        let t = DivisorClass::new(Rat::new(2, 3), Rat::new(2, 3));
        assert_eq!(ray_of(&t).unwrap(), Ray::new(1, 1));
        assert_eq!(ray_of(&DivisorClass::from_ints(0, 7)).unwrap(), Ray::new(0, 1));
        assert_eq!(ray_of(&DivisorClass::from_ints(-2, 1)).unwrap(), Ray::new(-2, 1));
        assert!(ray_of(&DivisorClass::zero()).is_err());
    }

    #[test]
    fn cone_position_examples() {
        let h = Ray::new(1, 0);
        let t = Ray::new(1, 1);
        let inside = DivisorClass::new(Rat::one(), Rat::new(1, 2));
        assert_eq!(cone_position(&inside, &h, &t), Ok(Position::Interior));
        let on_t = DivisorClass::new(Rat::new(2, 3), Rat::new(2, 3));
        assert_eq!(cone_position(&on_t, &h, &t), Ok(Position::OnBoundary));
        let ddeg = DivisorClass::new(Rat::new(2, 3), Rat::new(-1, 3));
        assert_eq!(cone_position(&ddeg, &h, &t), Ok(Position::Outside));
        assert_eq!(
            cone_position(&inside, &h, &Ray::new(-1, 0)),
            Err(DegenerateCone)
        );
    }

    #[test]
    fn chamber_tables_match_the_stated_assignments() {
        use BaseLocus::*;
        let sweep = [
            (fin(-3, 5), NotEffective, NotEffective),
            (fin(-1, 2), Degenerate, Degenerate),
            (fin(-3, 10), Degenerate, Degenerate),
            (fin(-1, 5), MultiImage, Empty),
            (fin(-1, 10), MultiImage, Empty),
            (fin(0, 1), Empty, Empty),
            (fin(1, 2), Empty, Nonreduced),
            (fin(1, 1), Empty, Nonreduced),
            (fin(2, 1), BoundaryDelta, BoundaryDelta),
            (ExtendedAlpha::Infinity, BoundaryDelta, BoundaryDelta),
        ];
        for (alpha, on_m, on_h) in sweep {
            assert_eq!(base_locus_at(&alpha, Space::Kontsevich), on_m, "α = {alpha} on M");
            assert_eq!(base_locus_at(&alpha, Space::Hilbert), on_h, "α = {alpha} on H");
        }
    }

    #[test]
    fn base_locus_of_classes_handles_noneffective_rays() {
        assert_eq!(
            base_locus(&DivisorClass::from_ints(-1, 0), Space::Kontsevich),
            BaseLocus::NotEffective
        );
        assert_eq!(
            base_locus(&DivisorClass::from_ints(0, -3), Space::Hilbert),
            BaseLocus::NotEffective
        );
        assert_eq!(base_locus(&DivisorClass::zero(), Space::Kontsevich), BaseLocus::Empty);
        let k = DivisorClass::new(Rat::one(), Rat::new(-1, 10));
        assert_eq!(base_locus(&k, Space::Kontsevich), BaseLocus::MultiImage);
        assert_eq!(base_locus(&k, Space::Hilbert), BaseLocus::Empty);
    }

    #[test]
    fn log_model_lookup() {
        assert_eq!(log_model(&fin(0, 1)), Model::ChowVariety);
        assert_eq!(log_model(&fin(-1, 4)), Model::NetsOfQuadrics);
        assert_eq!(log_model(&fin(3, 1)), Model::TwoStableMaps);
        assert_eq!(log_model(&fin(-1, 2)), Model::UndeterminedWall);
        assert_eq!(log_model(&ExtendedAlpha::Infinity), Model::UndeterminedWall);
        assert_eq!(log_model(&fin(-3, 5)), Model::OutsidePseudoeffective);
        assert_eq!(log_model(&fin(1, 2)), Model::Kontsevich);
        assert_eq!(log_model(&fin(-1, 10)), Model::HilbertComponent);
        assert_eq!(log_model(&fin(1, 1)), Model::TwoStableMaps);
    }

    #[test]
    fn cones_are_the_stated_ray_pairs() {
        assert_eq!(nef_cone(Space::Kontsevich), (Ray::new(1, 0), Ray::new(1, 1)));
        assert_eq!(nef_cone(Space::Hilbert), (Ray::new(5, -1), Ray::new(1, 0)));
        assert_eq!(effective_cone(), (Ray::new(0, 1), Ray::new(2, -1)));
        assert!(nef_cones_cover_moving_cone());
    }

    #[test]
    fn walk_through_the_flip() {
        let walk = mmp_walk(&Rat::new(9, 10), &Rat::new(-3, 10)).unwrap();
        assert_eq!(
            walk.models(),
            vec![
                Model::Kontsevich,
                Model::ChowVariety,
                Model::HilbertComponent,
                Model::NetsOfQuadrics
            ]
        );
        let crossings: Vec<&WallCrossing> =
            walk.segments.iter().filter_map(|s| s.exit.as_ref()).collect();
        assert_eq!(crossings.len(), 3);
        assert_eq!(crossings[0].steps[0].map_name, "f");
        assert!(matches!(
            crossings[0].steps[0].transition,
            Transition::SmallContraction { locus: "M" }
        ));
        assert_eq!(crossings[1].steps[0].map_name, "g");
        assert!(matches!(
            crossings[1].steps[0].transition,
            Transition::Flip { removed: "M", inserted: "N" }
        ));
        assert_eq!(crossings[2].steps[0].map_name, "h");
        assert!(matches!(
            crossings[2].steps[0].transition,
            Transition::DivisorialContraction { divisor: "Ddeg" }
        ));
        assert_eq!(walk.segments[0].interval.to_string(), "(0, 1)");
        assert_eq!(walk.segments[3].interval.to_string(), "(-1/2, -1/5]");
    }

    #[test]
    fn walk_inside_one_chamber_has_no_transitions() {
        let walk = mmp_walk(&Rat::new(1, 2), &Rat::new(2, 5)).unwrap();
        assert_eq!(walk.models(), vec![Model::Kontsevich]);
        assert!(walk.segments[0].exit.is_none());
    }

    #[test]
    fn walk_across_the_boundary_wall_reports_the_reverse_contraction() {
        let walk = mmp_walk(&Rat::new(3, 2), &Rat::new(1, 2)).unwrap();
        assert_eq!(walk.models(), vec![Model::TwoStableMaps, Model::Kontsevich]);
        let cross = walk.segments[0].exit.as_ref().unwrap();
        assert_eq!(cross.wall, "T");
        assert_eq!(cross.steps.len(), 1);
        assert_eq!(cross.steps[0].map_name, "theta");
        assert!(cross.steps[0].reverse);
        assert!(matches!(
            cross.steps[0].transition,
            Transition::DivisorialContraction { divisor: "Delta" }
        ));
        assert_eq!(walk.segments[0].interval.to_string(), "[1, inf)");
    }

    #[test]
    fn walk_rejects_bad_ranges() {
        assert!(mmp_walk(&Rat::new(1, 2), &Rat::new(1, 2)).is_err());
        assert!(mmp_walk(&Rat::new(1, 4), &Rat::new(1, 2)).is_err());
        assert!(mmp_walk(&Rat::new(1, 2), &Rat::new(-3, 5)).is_err());
    }

    #[test]
    fn walls_are_ordered_by_slope() {
        let w = walls();
        let names: Vec<&str> = w.iter().map(|x| x.name).collect();
        assert_eq!(names, vec!["Delta", "T", "H", "F", "Ddeg"]);
        for pair in w.windows(2) {
            assert!(pair[0].alpha > pair[1].alpha);
        }
        assert_eq!(w[3].ray, Ray::new(5, -1));
        assert_eq!(w[4].ray, Ray::new(2, -1));
    }

    #[test]
    fn interval_membership() {
        let pieces = model_pieces();
        let kon = &pieces[1].0;
        assert!(kon.contains(&fin(1, 2)));
        assert!(!kon.contains(&fin(0, 1)));
        assert!(!kon.contains(&fin(1, 1)));
        let two = &pieces[0].0;
        assert!(two.contains(&fin(1, 1)));
        assert!(two.contains(&fin(100, 1)));
        assert!(!two.contains(&ExtendedAlpha::Infinity));
    }
}
