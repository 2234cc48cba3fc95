//! The rank-2 Picard lattice shared by the stable-map space and the Hilbert
//! component, written in the basis `(H, Δ)`: divisor classes, curve classes
//! given by their pairings against the basis, the intersection pairing, and
//! exact class-solving from test-curve data.

use crate::exact::{row_reduce_solve, Rat, RatMatrix, SolveOutcome};
use std::fmt;
use std::str::FromStr;

/// A divisor class `h·H + d·Δ` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    pub h: Rat,
    pub d: Rat,
}

impl DivisorClass {
    pub fn new(h: Rat, d: Rat) -> Self {
        DivisorClass { h, d }
    }

    pub fn from_ints(h: i64, d: i64) -> Self {
        DivisorClass::new(Rat::from_int(h), Rat::from_int(d))
    }

    pub fn zero() -> Self {
        DivisorClass::new(Rat::zero(), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, s: &Rat) -> DivisorClass {
        DivisorClass::new(s * &self.h, s * &self.d)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass::new(&self.h + &other.h, &self.d + &other.d)
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass::new(&self.h - &other.h, &self.d - &other.d)
    }

    /// The class `H + α·Δ` for finite `α`.
    pub fn h_plus_alpha_delta(alpha: &Rat) -> DivisorClass {
        DivisorClass::new(Rat::one(), alpha.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "h": self.h.to_string(), "d": self.d.to_string() })
    }
}

/// A curve class recorded by its pairings `deg_h = C·H` and `deg_d = C·Δ`.
/// The name is a display label only and does not take part in equality.
#[derive(Clone, Debug)]
pub struct CurveClass {
    pub name: String,
    pub deg_h: Rat,
    pub deg_d: Rat,
}

impl CurveClass {
    pub fn new(name: &str, deg_h: Rat, deg_d: Rat) -> Self {
        CurveClass {
            name: name.to_string(),
            deg_h,
            deg_d,
        }
    }

    pub fn from_ints(name: &str, deg_h: i64, deg_d: i64) -> Self {
        CurveClass::new(name, Rat::from_int(deg_h), Rat::from_int(deg_d))
    }
}

impl PartialEq for CurveClass {
    fn eq(&self, other: &Self) -> bool {
        self.deg_h == other.deg_h && self.deg_d == other.deg_d
    }
}

impl Eq for CurveClass {}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name.is_empty() {
            write!(f, "({}, {})", self.deg_h, self.deg_d)
        } else {
            write!(f, "{} = ({}, {})", self.name, self.deg_h, self.deg_d)
        }
    }
}

/// The intersection number `D · C`, bilinear in both arguments.
pub fn pair(dv: &DivisorClass, c: &CurveClass) -> Rat {
    &dv.h * &c.deg_h + &dv.d * &c.deg_d
}

/// The pencil of lines attached to a plane conic at the base point.
pub fn test_curve_b1() -> CurveClass {
    CurveClass::from_ints("B1", 1, -1)
}

/// The pencil of plane conics attached to a line at one of the base points.
pub fn test_curve_b2() -> CurveClass {
    CurveClass::from_ints("B2", 1, 2)
}

/// The named divisor classes on the lattice: `H`, `Delta`, the tangency
/// divisor `T`, the degenerate divisor `Ddeg`, the flag divisor `F`, and the
/// conic-flag divisor `G` (which coincides with `F`).
pub struct NamedDivisorTable {
    entries: Vec<(&'static str, DivisorClass)>,
}

impl NamedDivisorTable {
    pub fn standard() -> Self {
        let f = DivisorClass::new(Rat::new(5, 3), Rat::new(-1, 3));
        NamedDivisorTable {
            entries: vec![
                ("H", DivisorClass::from_ints(1, 0)),
                ("Delta", DivisorClass::from_ints(0, 1)),
                ("T", DivisorClass::new(Rat::new(2, 3), Rat::new(2, 3))),
                ("Ddeg", DivisorClass::new(Rat::new(2, 3), Rat::new(-1, 3))),
                ("F", f.clone()),
                ("G", f),
            ],
        }
    }

    pub fn get(&self, label: &str) -> Option<&DivisorClass> {
        self.entries
            .iter()
            .find(|(name, _)| *name == label)
            .map(|(_, c)| c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &DivisorClass)> {
        self.entries.iter().map(|(n, c)| (*n, c))
    }

    pub fn h(&self) -> &DivisorClass {
        self.get("H").unwrap()
    }

    pub fn delta(&self) -> &DivisorClass {
        self.get("Delta").unwrap()
    }

    pub fn t(&self) -> &DivisorClass {
        self.get("T").unwrap()
    }

    pub fn d_deg(&self) -> &DivisorClass {
        self.get("Ddeg").unwrap()
    }

    pub fn f(&self) -> &DivisorClass {
        self.get("F").unwrap()
    }

    pub fn g(&self) -> &DivisorClass {
        self.get("G").unwrap()
    }
}

/// A slope on the ray `H + α·Δ`, extended with the pure-`Δ` direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtendedAlpha {
    Finite(Rat),
    Infinity,
}

impl ExtendedAlpha {
    pub fn finite(n: i64, d: i64) -> Self {
        ExtendedAlpha::Finite(Rat::new(n, d))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtendedAlpha::Finite(a) => Some(a),
            ExtendedAlpha::Infinity => None,
        }
    }
}

impl PartialOrd for ExtendedAlpha {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedAlpha {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ExtendedAlpha::*;
        match (self, other) {
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedAlpha::Finite(a) => write!(f, "{a}"),
            ExtendedAlpha::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtendedAlpha {
    type Err = crate::exact::RatParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "oo" | "∞" => Ok(ExtendedAlpha::Infinity),
            other => Ok(ExtendedAlpha::Finite(other.parse()?)),
        }
    }
}

/// Errors from solving for a class out of pairing data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassSolveError {
    /// The rows do not span the lattice: every listed class is parallel.
    UnderdeterminedData,
    /// The rows span but the targets conflict.
    InconsistentData,
}

impl fmt::Display for ClassSolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSolveError::UnderdeterminedData => {
                write!(f, "pairing data does not determine the class")
            }
            ClassSolveError::InconsistentData => write!(f, "pairing data is inconsistent"),
        }
    }
}

impl std::error::Error for ClassSolveError {}

fn solve_two_unknowns(rows: Vec<(Rat, Rat)>, targets: Vec<Rat>) -> Result<(Rat, Rat), ClassSolveError> {
    if rows.is_empty() {
        return Err(ClassSolveError::UnderdeterminedData);
    }
    let a = RatMatrix::from_rows(rows.into_iter().map(|(x, y)| vec![x, y]).collect());
    match row_reduce_solve(&a, &targets) {
        SolveOutcome::Unique(x) => {
            let mut it = x.into_iter();
            Ok((it.next().unwrap(), it.next().unwrap()))
        }
        SolveOutcome::Underdetermined(_) => Err(ClassSolveError::UnderdeterminedData),
        SolveOutcome::Inconsistent => Err(ClassSolveError::InconsistentData),
    }
}

/// Recovers the unique divisor class with the prescribed intersection
/// numbers against the given curve classes. Extra rows beyond the first two
/// independent ones must be consistent.
pub fn solve_divisor_class(
    data: &[(CurveClass, Rat)],
) -> Result<DivisorClass, ClassSolveError> {
    let rows = data
        .iter()
        .map(|(c, _)| (c.deg_h.clone(), c.deg_d.clone()))
        .collect();
    let targets = data.iter().map(|(_, t)| t.clone()).collect();
    let (h, d) = solve_two_unknowns(rows, targets)?;
    Ok(DivisorClass::new(h, d))
}

/// Dual of [`solve_divisor_class`]: recovers the curve class with the
/// prescribed pairings against the given divisor classes.
pub fn solve_curve_class(data: &[(DivisorClass, Rat)]) -> Result<CurveClass, ClassSolveError> {
    let rows = data.iter().map(|(d, _)| (d.h.clone(), d.d.clone())).collect();
    let targets = data.iter().map(|(_, t)| t.clone()).collect();
    let (deg_h, deg_d) = solve_two_unknowns(rows, targets)?;
    Ok(CurveClass::new("", deg_h, deg_d))
}

/// The zero class has no slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroClassError;

impl fmt::Display for ZeroClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "the zero divisor class has no ray")
    }
}

impl std::error::Error for ZeroClassError {}

/// Writes `D = scale · (H + α·Δ)`; the pure-`Δ` ray gets `α = ∞` with the
/// `Δ`-coefficient as the scale.
pub fn to_alpha(d: &DivisorClass) -> Result<(Rat, ExtendedAlpha), ZeroClassError> {
    if d.is_zero() {
        return Err(ZeroClassError);
    }
    if d.h.is_zero() {
        Ok((d.d.clone(), ExtendedAlpha::Infinity))
    } else {
        let alpha = d.d.checked_div(&d.h).expect("h is nonzero");
        Ok((d.h.clone(), ExtendedAlpha::Finite(alpha)))
    }
}

impl fmt::Display for DivisorClass {
    /// Canonical text form `a*H + b*D`, omitting zero terms and unit
    /// coefficients: `5/3*H - 1/3*D`, `H`, `-D`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for (coeff, sym) in [(&self.h, "H"), (&self.d, "D")] {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            if wrote {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{mag}*{sym}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

/// Error from parsing the `a*H + b*D` text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassParseError(pub String);

impl fmt::Display for ClassParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid divisor class: {}", self.0)
    }
}

impl std::error::Error for ClassParseError {}

impl FromStr for DivisorClass {
    type Err = ClassParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text == "0" {
            return Ok(DivisorClass::zero());
        }
        let mut h = Rat::zero();
        let mut d = Rat::zero();
        let err = || ClassParseError(s.to_string());
        // Split into signed terms on top-level + and -.
        let mut terms: Vec<(i32, String)> = Vec::new();
        let mut sign = 1;
        let mut cur = String::new();
        let mut started = false;
        for ch in text.chars() {
            match ch {
                '+' | '-' if started && !cur.trim().is_empty() => {
                    terms.push((sign, cur.trim().to_string()));
                    sign = if ch == '-' { -1 } else { 1 };
                    cur = String::new();
                }
                '-' if !started || cur.trim().is_empty() => {
                    sign = -sign;
                    started = true;
                }
                '+' if cur.trim().is_empty() => {
                    started = true;
                }
                _ => {
                    if !ch.is_whitespace() {
                        started = true;
                    }
                    cur.push(ch);
                }
            }
        }
        if !cur.trim().is_empty() {
            terms.push((sign, cur.trim().to_string()));
        }
        if terms.is_empty() {
            return Err(err());
        }
        for (sg, term) in terms {
            let (coeff_s, sym) = match term.strip_suffix('H') {
                Some(rest) => (rest, 'H'),
                None => match term.strip_suffix('D') {
                    Some(rest) => (rest, 'D'),
                    None => return Err(err()),
                },
            };
            let coeff_s = coeff_s.trim().trim_end_matches('*').trim();
            let mut coeff: Rat = if coeff_s.is_empty() {
                Rat::one()
            } else {
                coeff_s.parse().map_err(|_| err())?
            };
            if sg < 0 {
                coeff = -coeff;
            }
            let slot = if sym == 'H' { &mut h } else { &mut d };
            *slot = &*slot + &coeff;
        }
        Ok(DivisorClass::new(h, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn pairing_reproduces_the_intersection_table() {
        let table = NamedDivisorTable::standard();
        let b1 = test_curve_b1();
        let b2 = test_curve_b2();
        let expect = [
            ("H", 1, 1),
            ("Delta", -1, 2),
            ("F", 2, 1),
            ("G", 2, 1),
        ];
        for (name, v1, v2) in expect {
            let d = table.get(name).unwrap();
            assert_eq!(pair(d, &b1), Rat::from_int(v1), "{name}·B1");
            assert_eq!(pair(d, &b2), Rat::from_int(v2), "{name}·B2");
        }
        assert_eq!(pair(table.t(), &b1), Rat::zero());
        assert_eq!(pair(&DivisorClass::zero(), &b1), Rat::zero());
    }

    #[test]
    fn solve_divisor_class_recovers_f() {
        let data = vec![
            (test_curve_b1(), Rat::from_int(2)),
            (test_curve_b2(), Rat::from_int(1)),
        ];
        let f = solve_divisor_class(&data).unwrap();
        assert_eq!(f, DivisorClass::new(r(5, 3), r(-1, 3)));
    }

    #[test]
    fn solve_divisor_class_recovers_h() {
        let data = vec![
            (test_curve_b1(), Rat::from_int(1)),
            (test_curve_b2(), Rat::from_int(1)),
        ];
        assert_eq!(
            solve_divisor_class(&data).unwrap(),
            DivisorClass::from_ints(1, 0)
        );
    }

    #[test]
    fn conflicting_rows_are_inconsistent() {
        let data = vec![
            (test_curve_b1(), Rat::from_int(0)),
            (test_curve_b1(), Rat::from_int(1)),
        ];
        assert_eq!(
            solve_divisor_class(&data),
            Err(ClassSolveError::InconsistentData)
        );
        let parallel = vec![
            (test_curve_b1(), Rat::from_int(1)),
            (test_curve_b1(), Rat::from_int(1)),
        ];
        assert_eq!(
            solve_divisor_class(&parallel),
            Err(ClassSolveError::UnderdeterminedData)
        );
    }

    #[test]
    fn solve_curve_class_examples() {
        let table = NamedDivisorTable::standard();
        let fiber_line = solve_curve_class(&[
            (table.h().clone(), Rat::zero()),
            (table.d_deg().clone(), Rat::one()),
        ])
        .unwrap();
        assert_eq!(fiber_line, CurveClass::from_ints("", 0, -3));

        let nodal = solve_curve_class(&[
            (table.h().clone(), Rat::one()),
            (table.delta().clone(), Rat::from_int(5)),
        ])
        .unwrap();
        assert_eq!(nodal, CurveClass::from_ints("R", 1, 5));

        let e3 = solve_curve_class(&[
            (table.h().clone(), Rat::zero()),
            (table.delta().clone(), Rat::from_int(8)),
        ])
        .unwrap();
        assert_eq!(e3, CurveClass::from_ints("E3", 0, 8));
    }

    #[test]
    fn to_alpha_matches_the_stated_normal_forms() {
        let table = NamedDivisorTable::standard();
        assert_eq!(
            to_alpha(table.f()).unwrap(),
            (r(5, 3), ExtendedAlpha::Finite(r(-1, 5)))
        );
        assert_eq!(
            to_alpha(table.t()).unwrap(),
            (r(2, 3), ExtendedAlpha::Finite(Rat::one()))
        );
        assert_eq!(
            to_alpha(&DivisorClass::from_ints(0, 1)).unwrap(),
            (Rat::one(), ExtendedAlpha::Infinity)
        );
        assert_eq!(to_alpha(&DivisorClass::zero()), Err(ZeroClassError));
    }

    #[test]
    fn class_text_form_round_trips() {
        for s in ["5/3*H - 1/3*D", "H", "-D", "0", "2/3*H + 2/3*D"] {
            let c: DivisorClass = s.parse().unwrap();
            assert_eq!(c.to_string(), s, "round trip of {s}");
        }
        let c: DivisorClass = "-1/3*D + 5/3*H".parse().unwrap();
        assert_eq!(c, DivisorClass::new(r(5, 3), r(-1, 3)));
        assert!("5/3*Q".parse::<DivisorClass>().is_err());
    }
}
