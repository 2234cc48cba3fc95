//! Constructors for the fiber curve ideals over a cycle of two incident
//! lines (`[L1] + 2[L2]`, cases I–IV) and over a triple line (`3[L3]`,
//! cases V–VII), in the fixed coordinates `L1 = {Y = Z = 0}`,
//! `L2 = {X = Y = 0}`, `p = [0,0,0,1]`.
//!
//! The double line `D` on `L2` carries the ideal `((X,Y)^2, X·G - Y·F)`
//! with `F = a·Z + b·W`, `G = c·Z`; the curve `D ∪ L1` is its intersection
//! with `(Y, Z)`. Which case holds is governed by the vanishing pattern of
//! `(b, c)`. Triple-line ideals come in two charts glued by
//! `(t; [a,b,c]) -> (1/t; [a,b,c/t^3])`.

use crate::exact::Rat;
use crate::ideal::{intersect, power, sum, Ideal};
use crate::poly::{parse::parse_poly, PolyRing, Polynomial, Ring};
use std::fmt;

/// The seven projective-equivalence classes of fibers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl FiberCase {
    pub const ALL: [FiberCase; 7] = [
        FiberCase::I,
        FiberCase::II,
        FiberCase::III,
        FiberCase::IV,
        FiberCase::V,
        FiberCase::VI,
        FiberCase::VII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FiberCase::I => "I",
            FiberCase::II => "II",
            FiberCase::III => "III",
            FiberCase::IV => "IV",
            FiberCase::V => "V",
            FiberCase::VI => "VI",
            FiberCase::VII => "VII",
        }
    }

    /// Double-line cases take `(a, b, c)`, triple-line cases `(t, a, b, c)`.
    pub fn param_count(self) -> usize {
        if self.is_double_line() {
            3
        } else {
            4
        }
    }

    pub fn is_double_line(self) -> bool {
        matches!(self, FiberCase::I | FiberCase::II | FiberCase::III | FiberCase::IV)
    }
}

impl fmt::Display for FiberCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FiberCase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(FiberCase::I),
            "II" | "2" => Ok(FiberCase::II),
            "III" | "3" => Ok(FiberCase::III),
            "IV" | "4" => Ok(FiberCase::IV),
            "V" | "5" => Ok(FiberCase::V),
            "VI" | "6" => Ok(FiberCase::VI),
            "VII" | "7" => Ok(FiberCase::VII),
            other => Err(format!("unknown fiber case `{other}` (I..VII)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberError {
    WrongParamCount {
        case: FiberCase,
        expected: usize,
        got: usize,
    },
    GenericityViolated {
        case: FiberCase,
        condition: &'static str,
    },
}

impl fmt::Display for FiberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberError::WrongParamCount {
                case,
                expected,
                got,
            } => write!(f, "case {case} takes {expected} parameters, got {got}"),
            FiberError::GenericityViolated { case, condition } => {
                write!(f, "case {case} requires {condition}")
            }
        }
    }
}

impl std::error::Error for FiberError {}

fn poly_in(ring: &Ring, text: &str) -> Polynomial {
    parse_poly(text, ring).expect("builder polynomial parses")
}

fn linear_combo(ring: &Ring, coeffs: &[(&Rat, &str)]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (c, var) in coeffs {
        let v = Polynomial::variable(ring, var).expect("ring variable");
        acc = acc.checked_add(&v.scale(c)).expect("same ring");
    }
    acc
}

/// The double-line ideal `I_D = ((X,Y)^2, X·G - Y·F)` with `F = aZ + bW`,
/// `G = cZ`, before adjoining the incident line.
pub fn double_line_ideal(ring: &Ring, a: &Rat, b: &Rat, c: &Rat) -> Ideal {
    let x = poly_in(ring, "X");
    let y = poly_in(ring, "Y");
    let f = linear_combo(ring, &[(a, "Z"), (b, "W")]);
    let g = linear_combo(ring, &[(c, "Z")]);
    let cross = x
        .checked_mul(&g)
        .unwrap()
        .checked_sub(&y.checked_mul(&f).unwrap())
        .unwrap();
    let sq = power(&Ideal::new(ring, vec![x, y]), 2);
    sum(&sq, &Ideal::new(ring, vec![cross])).expect("same ring")
}

/// The full curve ideal `I_{D ∪ L1} = I_D ∩ (Y, Z)` for cases I–IV.
pub fn double_line_curve_ideal(ring: &Ring, a: &Rat, b: &Rat, c: &Rat) -> Ideal {
    let d = double_line_ideal(ring, a, b, c);
    let l1 = Ideal::parse(ring, &["Y", "Z"]).expect("line ideal parses");
    intersect(&d, &l1).expect("same ring")
}

/// Chart-1 triple-line ideal
/// `((X-tY)^2, (X-tY)Y, Y^3, (aW+bZ)(X-tY) - cY^2)`.
pub fn triple_line_chart1(ring: &Ring, t: &Rat, a: &Rat, b: &Rat, c: &Rat) -> Ideal {
    let y = poly_in(ring, "Y");
    let ell = poly_in(ring, "X").checked_sub(&y.scale(t)).unwrap();
    let plane = linear_combo(ring, &[(a, "W"), (b, "Z")]);
    let last = plane
        .checked_mul(&ell)
        .unwrap()
        .checked_sub(&y.pow(2).scale(c))
        .unwrap();
    Ideal::new(
        ring,
        vec![
            ell.pow(2),
            ell.checked_mul(&y).unwrap(),
            y.pow(3),
            last,
        ],
    )
}

/// Chart-2 triple-line ideal
/// `((sX-Y)^2, (sX-Y)X, X^3, (aW+bZ)(sX-Y) - cX^2)`.
pub fn triple_line_chart2(ring: &Ring, s: &Rat, a: &Rat, b: &Rat, c: &Rat) -> Ideal {
    let x = poly_in(ring, "X");
    let ell = x.scale(s).checked_sub(&poly_in(ring, "Y")).unwrap();
    let plane = linear_combo(ring, &[(a, "W"), (b, "Z")]);
    let last = plane
        .checked_mul(&ell)
        .unwrap()
        .checked_sub(&x.pow(2).scale(c))
        .unwrap();
    Ideal::new(
        ring,
        vec![
            ell.pow(2),
            ell.checked_mul(&x).unwrap(),
            x.pow(3),
            last,
        ],
    )
}

fn check_genericity(case: FiberCase, params: &[Rat]) -> Result<(), FiberError> {
    let violated = |condition| Err(FiberError::GenericityViolated { case, condition });
    match case {
        FiberCase::I | FiberCase::II | FiberCase::III | FiberCase::IV => {
            let (a, b, c) = (&params[0], &params[1], &params[2]);
            if a.is_zero() && b.is_zero() && c.is_zero() {
                return violated("(a, b, c) != (0, 0, 0)");
            }
            match case {
                FiberCase::I if b.is_zero() || c.is_zero() => violated("b != 0 and c != 0"),
                FiberCase::II if !b.is_zero() || c.is_zero() => violated("b = 0 and c != 0"),
                FiberCase::III if b.is_zero() || !c.is_zero() => violated("b != 0 and c = 0"),
                FiberCase::IV if !b.is_zero() || !c.is_zero() || a.is_zero() => {
                    violated("b = c = 0 and a != 0")
                }
                _ => Ok(()),
            }
        }
        FiberCase::V | FiberCase::VI | FiberCase::VII => {
            let (a, b, c) = (&params[1], &params[2], &params[3]);
            match case {
                FiberCase::V if c.is_zero() || (a.is_zero() && b.is_zero()) => {
                    violated("c != 0 and (a, b) != (0, 0)")
                }
                FiberCase::VI if !c.is_zero() || (a.is_zero() && b.is_zero()) => {
                    violated("c = 0 and (a, b) != (0, 0)")
                }
                FiberCase::VII if !a.is_zero() || !b.is_zero() || c.is_zero() => {
                    violated("a = b = 0 and c != 0")
                }
                _ => Ok(()),
            }
        }
    }
}

/// The fiber curve ideal for a case at admissible parameter values:
/// `(a, b, c)` for the double-line cases I–IV (the curve `D ∪ L1`), and
/// `(t, a, b, c)` for the triple-line cases V–VII (chart 1).
pub fn fiber_ideal(case: FiberCase, params: &[Rat]) -> Result<Ideal, FiberError> {
    if params.len() != case.param_count() {
        return Err(FiberError::WrongParamCount {
            case,
            expected: case.param_count(),
            got: params.len(),
        });
    }
    check_genericity(case, params)?;
    let ring = PolyRing::xyzw();
    Ok(if case.is_double_line() {
        double_line_curve_ideal(&ring, &params[0], &params[1], &params[2])
    } else {
        triple_line_chart1(&ring, &params[0], &params[1], &params[2], &params[3])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_equal;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn one() -> Rat {
        Rat::one()
    }

    #[test]
    fn case_iv_is_the_stated_intersection() {
        let ring = PolyRing::xyzw();
        let built = fiber_ideal(FiberCase::IV, &[one(), Rat::zero(), Rat::zero()]).unwrap();
        let stated = intersect(
            &Ideal::parse(&ring, &["X^2", "X*Y", "Y^2", "Y*Z"]).unwrap(),
            &Ideal::parse(&ring, &["Y", "Z"]).unwrap(),
        )
        .unwrap();
        assert!(ideal_equal(&built, &stated).unwrap());
    }

    #[test]
    fn case_vii_collapses_to_the_square_of_the_line_ideal() {
        let ring = PolyRing::xyzw();
        let built = fiber_ideal(
            FiberCase::VII,
            &[Rat::zero(), Rat::zero(), Rat::zero(), one()],
        )
        .unwrap();
        let square = Ideal::parse(&ring, &["X^2", "X*Y", "Y^2"]).unwrap();
        assert!(ideal_equal(&built, &square).unwrap());
    }

    #[test]
    fn genericity_is_enforced() {
        // b = 0 is outside case I.
        assert!(matches!(
            fiber_ideal(FiberCase::I, &[one(), Rat::zero(), one()]),
            Err(FiberError::GenericityViolated { .. })
        ));
        assert!(matches!(
            fiber_ideal(FiberCase::IV, &[Rat::zero(), Rat::zero(), Rat::zero()]),
            Err(FiberError::GenericityViolated { .. })
        ));
        assert!(matches!(
            fiber_ideal(FiberCase::V, &[r(1, 2), one(), one(), Rat::zero()]),
            Err(FiberError::GenericityViolated { .. })
        ));
        assert!(matches!(
            fiber_ideal(FiberCase::I, &[one(), one()]),
            Err(FiberError::WrongParamCount { .. })
        ));
    }

    #[test]
    fn case_names_parse() {
        assert_eq!("iv".parse::<FiberCase>().unwrap(), FiberCase::IV);
        assert_eq!("VII".parse::<FiberCase>().unwrap(), FiberCase::VII);
        assert!("VIII".parse::<FiberCase>().is_err());
    }
}
