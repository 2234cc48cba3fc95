//! Exact rational arithmetic and small dense linear algebra.
//!
//! [`Rat`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; every other module computes with it. [`RatMatrix`]
//! and [`lin_solve`] cover the small dense systems that arise when solving
//! for divisor classes from intersection data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number. Always canonical: `gcd(|num|, den) = 1`,
/// `den > 0`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`. Panics when `den == 0`; use [`Rat::checked_div`]
    /// for fallible division.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, DivisionByZero> {
        if rhs.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rat, DivisionByZero> {
        Rat::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rat {
        Rat(self.0.pow(exp as i32))
    }

    /// Sign as -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }
}

/// Attempted exact division by zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "division by zero")
    }
}

impl std::error::Error for DivisionByZero {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rat> for &Rat {
    type Output = Rat;
    /// Panics on a zero divisor; see [`Rat::checked_div`].
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

// Debug mirrors Display; rationals read better unwrapped.
impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing the `p/q` text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatParseError(pub String);

impl fmt::Display for RatParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.0)
    }
}

impl std::error::Error for RatParseError {}

impl FromStr for Rat {
    type Err = RatParseError;

    /// Parses `"p"` or `"p/q"` with optional leading sign.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num_s).map_err(|_| RatParseError(s.to_string()))?;
        let den = match den_s {
            Some(d) => BigInt::from_str(d).map_err(|_| RatParseError(s.to_string()))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(RatParseError(format!("{s}: zero denominator")));
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

pub type RatVector = Vec<Rat>;

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix {
            rows: n,
            cols: n,
            data: vec![Rat::zero(); n * n],
        };
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Failure modes of [`lin_solve`], distinguished so callers can react to
/// genuinely conflicting data differently from merely insufficient data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinSolveError {
    /// The system has no solution.
    SingularInconsistent,
    /// The system has infinitely many solutions.
    SingularUnderdetermined,
}

impl fmt::Display for LinSolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinSolveError::SingularInconsistent => write!(f, "singular system: inconsistent"),
            LinSolveError::SingularUnderdetermined => {
                write!(f, "singular system: underdetermined")
            }
        }
    }
}

impl std::error::Error for LinSolveError {}

/// Outcome of row reduction on an augmented system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Exactly one solution.
    Unique(Vec<Rat>),
    /// Consistent with free variables; carries one particular solution
    /// (free variables set to zero).
    Underdetermined(Vec<Rat>),
    Inconsistent,
}

/// Row-reduces the augmented system `[a | b]` exactly and classifies it.
/// Works for any shape; rational Gaussian elimination with the first
/// nonzero pivot in each column.
pub fn row_reduce_solve(a: &RatMatrix, b: &[Rat]) -> SolveOutcome {
    assert_eq!(b.len(), a.rows(), "rhs length mismatch");
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = (0..cols).map(|j| a.at(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..=cols {
                    let sub = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    // A row 0 = nonzero means no solution.
    for row in m.iter().skip(r) {
        if !row[cols].is_zero() {
            return SolveOutcome::Inconsistent;
        }
    }

    let mut x = vec![Rat::zero(); cols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[k][cols].clone();
    }
    if pivot_cols.len() == cols {
        SolveOutcome::Unique(x)
    } else {
        SolveOutcome::Underdetermined(x)
    }
}

/// Solves `a · x = b` for square `a`, insisting on a unique solution.
///
/// Panics when `a` is not square or `b` has the wrong length; singularity
/// is reported through [`LinSolveError`] with the inconsistent and
/// underdetermined cases kept apart.
pub fn lin_solve(a: &RatMatrix, b: &[Rat]) -> Result<Vec<Rat>, LinSolveError> {
    assert_eq!(a.rows(), a.cols(), "lin_solve needs a square matrix");
    match row_reduce_solve(a, b) {
        SolveOutcome::Unique(x) => Ok(x),
        SolveOutcome::Underdetermined(_) => Err(LinSolveError::SingularUnderdetermined),
        SolveOutcome::Inconsistent => Err(LinSolveError::SingularInconsistent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn arithmetic_is_exact_and_canonical() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(5, 3) * Rat::from_int(3), Rat::from_int(5));
        assert_eq!(r(2, -4), r(-1, 2));
        assert_eq!(r(2, -4).to_string(), "-1/2");
        assert_eq!((r(1, 2) - r(1, 2)).to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(r(1, 2).checked_div(&Rat::zero()), Err(DivisionByZero));
        assert_eq!(r(5, 3).checked_div(&r(5, 3)), Ok(Rat::one()));
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["5/3", "-1/3", "0", "7", "-12"] {
            let v: Rat = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("2/-4".parse::<Rat>().unwrap(), r(-1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn solves_the_test_curve_system() {
        // a - b = 2, a + 2b = 1
        let a = RatMatrix::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(-1)],
            vec![Rat::from_int(1), Rat::from_int(2)],
        ]);
        let x = lin_solve(&a, &[Rat::from_int(2), Rat::from_int(1)]).unwrap();
        assert_eq!(x, vec![r(5, 3), r(-1, 3)]);
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let a = RatMatrix::identity(3);
        let b = vec![r(1, 2), r(-7, 3), Rat::zero()];
        assert_eq!(lin_solve(&a, &b).unwrap(), b);
    }

    #[test]
    fn singular_systems_are_distinguished() {
        let a = RatMatrix::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(1)],
            vec![Rat::from_int(2), Rat::from_int(2)],
        ]);
        assert_eq!(
            lin_solve(&a, &[Rat::from_int(1), Rat::from_int(3)]),
            Err(LinSolveError::SingularInconsistent)
        );
        assert_eq!(
            lin_solve(&a, &[Rat::from_int(1), Rat::from_int(2)]),
            Err(LinSolveError::SingularUnderdetermined)
        );
    }

    #[test]
    fn row_reduce_handles_rectangular_systems() {
        // Overdetermined but consistent.
        let a = RatMatrix::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(0)],
            vec![Rat::from_int(0), Rat::from_int(1)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]);
        let out = row_reduce_solve(&a, &[r(1, 2), r(1, 3), r(5, 6)]);
        assert_eq!(out, SolveOutcome::Unique(vec![r(1, 2), r(1, 3)]));
    }
}
