//! Graded dimensions of homogeneous quotients by standard-monomial
//! enumeration, and the linear Hilbert polynomial fitted from them.
//!
//! Enumeration up to a degree cap plus interpolation-with-verification keeps
//! the contract simple; the ideals here are desk-scale.

use super::{groebner, Ideal, IdealError};
use crate::exact::Rat;
use crate::poly::Monomial;
use std::fmt;

/// Degree cap used by [`hilbert_polynomial`]; overridable through the
/// `MCL_DEGREE_CAP` environment variable.
pub fn default_degree_cap() -> u32 {
    std::env::var("MCL_DEGREE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(12)
}

/// All exponent vectors of total degree `d` in `nvars` variables, in a
/// fixed deterministic order.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            let mut full = prefix.clone();
            full.push(d);
            out.push(full);
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// `C(d + n - 1, n - 1)`: the number of degree-`d` monomials in `n`
/// variables.
pub fn ambient_dim(nvars: usize, d: u32) -> usize {
    let n = nvars as u128;
    let d = d as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 1..n {
        num *= d + k;
        den *= k;
    }
    (num / den) as usize
}

fn require_homogeneous(ideal: &Ideal) -> Result<(), IdealError> {
    if ideal.is_homogeneous() {
        Ok(())
    } else {
        Err(IdealError::NotHomogeneous)
    }
}

/// `dim (R/I)_d`: the count of degree-`d` monomials outside the
/// leading-term ideal.
pub fn hilbert_function(ideal: &Ideal, d: u32) -> Result<usize, IdealError> {
    require_homogeneous(ideal)?;
    let gb = groebner(ideal, ideal.ring().order());
    Ok(hilbert_function_from_leading(
        &gb.leading_monomials(),
        ideal.ring().nvars(),
        d,
    ))
}

fn hilbert_function_from_leading(leading: &[&Monomial], nvars: usize, d: u32) -> usize {
    monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|exps| {
            !leading
                .iter()
                .any(|lm| lm.exps().iter().zip(exps).all(|(a, b)| a <= b))
        })
        .count()
}

/// `dim I_d`: the ambient dimension minus the quotient dimension.
pub fn graded_piece_dim(ideal: &Ideal, d: u32) -> Result<usize, IdealError> {
    let quotient = hilbert_function(ideal, d)?;
    Ok(ambient_dim(ideal.ring().nvars(), d) - quotient)
}

/// Graded quotient dimensions together with the fitted linear Hilbert
/// polynomial `HP(t) = c1·t + c0` and the degree from which the values
/// agree with it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertData {
    pub values: Vec<(u32, usize)>,
    pub c1: Rat,
    pub c0: Rat,
    pub stabilization: u32,
}

impl HilbertData {
    pub fn hp_at(&self, d: u32) -> Rat {
        &self.c1 * &Rat::from_int(d as i64) + self.c0.clone()
    }

    /// Canonical polynomial text, e.g. `3*t + 1` or `t + 1`.
    pub fn hp_string(&self) -> String {
        let mut parts = Vec::new();
        if !self.c1.is_zero() {
            if self.c1.is_one() {
                parts.push("t".to_string());
            } else {
                parts.push(format!("{}*t", self.c1));
            }
        }
        if !self.c0.is_zero() || parts.is_empty() {
            if parts.is_empty() {
                parts.push(self.c0.to_string());
            } else if self.c0.is_negative() {
                parts.push(format!("- {}", self.c0.abs()));
            } else {
                parts.push(format!("+ {}", self.c0));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hp_string())
    }
}

/// Fits `HP(t) = c1·t + c0` on two consecutive quotient dimensions and
/// verifies it on the next three, scanning windows from the bottom;
/// also reports the smallest degree from which every computed value
/// matches. Fails with [`IdealError::NotEventuallyLinear`] when no window
/// below the cap verifies.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertData, IdealError> {
    hilbert_polynomial_capped(ideal, default_degree_cap())
}

pub fn hilbert_polynomial_capped(ideal: &Ideal, cap: u32) -> Result<HilbertData, IdealError> {
    require_homogeneous(ideal)?;
    let gb = groebner(ideal, ideal.ring().order());
    let leading = gb.leading_monomials();
    let nvars = ideal.ring().nvars();
    let values: Vec<(u32, usize)> = (0..=cap)
        .map(|d| (d, hilbert_function_from_leading(&leading, nvars, d)))
        .collect();
    let dims: Vec<i64> = values.iter().map(|(_, v)| *v as i64).collect();

    let mut fitted: Option<(i64, i64)> = None;
    for w in 0..values.len().saturating_sub(4) {
        let c1 = dims[w + 1] - dims[w];
        let c0 = dims[w] - c1 * w as i64;
        let ok = (w + 2..=w + 4).all(|d| dims[d] == c1 * d as i64 + c0);
        if ok {
            fitted = Some((c1, c0));
            break;
        }
    }
    let Some((c1, c0)) = fitted else {
        return Err(IdealError::NotEventuallyLinear { cap });
    };
    // Smallest degree from which all computed values follow the line.
    let mut stab = values.len() - 1;
    while stab > 0 && dims[stab - 1] == c1 * (stab as i64 - 1) + c0 {
        stab -= 1;
    }
    Ok(HilbertData {
        values,
        c1: Rat::from_int(c1),
        c0: Rat::from_int(c0),
        stabilization: stab as u32,
    })
}

/// Reads `(degree, arithmetic genus) = (c1, 1 - c0)` off a linear Hilbert
/// polynomial.
pub fn degree_genus(hd: &HilbertData) -> Result<(u32, i64), IdealError> {
    if !hd.c1.is_integer() || !hd.c0.is_integer() || hd.c1.is_negative() {
        return Err(IdealError::NonLinearHilbertPolynomial);
    }
    let c1: i64 = hd.c1.numer().try_into().map_err(|_| IdealError::NonLinearHilbertPolynomial)?;
    let c0: i64 = hd.c0.numer().try_into().map_err(|_| IdealError::NonLinearHilbertPolynomial)?;
    Ok((c1 as u32, 1 - c0))
}

/// True when the ideal contains a linear form (`dim I_1 ≥ 1`).
pub fn contains_linear_form(ideal: &Ideal) -> Result<bool, IdealError> {
    require_homogeneous(ideal)?;
    let quotient = hilbert_function(ideal, 1)?;
    Ok(quotient < ideal.ring().nvars())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PolyRing, Ring};

    fn ring() -> Ring {
        PolyRing::xyzw()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    #[test]
    fn ambient_dimensions_are_binomials() {
        assert_eq!(ambient_dim(4, 0), 1);
        assert_eq!(ambient_dim(4, 1), 4);
        assert_eq!(ambient_dim(4, 2), 10);
        assert_eq!(ambient_dim(4, 3), 20);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
    }

    #[test]
    fn zero_ideal_counts_all_monomials() {
        let r = ring();
        assert_eq!(hilbert_function(&Ideal::zero(&r), 2).unwrap(), 10);
    }

    #[test]
    fn twisted_cubic_graded_dimensions() {
        let r = ring();
        let tc = ideal(&r, &["X*Z - Y^2", "Y*W - Z^2", "X*W - Y*Z"]);
        assert_eq!(hilbert_function(&tc, 2).unwrap(), 7);
        assert_eq!(graded_piece_dim(&tc, 2).unwrap(), 3);
        let hd = hilbert_polynomial(&tc).unwrap();
        assert_eq!(hd.hp_string(), "3*t + 1");
        assert_eq!(hd.stabilization, 0);
        assert_eq!(degree_genus(&hd).unwrap(), (3, 0));
    }

    #[test]
    fn line_and_conic_polynomials() {
        let r = ring();
        let line = ideal(&r, &["X", "Y"]);
        let hd = hilbert_polynomial(&line).unwrap();
        assert_eq!(hd.hp_string(), "t + 1");
        assert_eq!(degree_genus(&hd).unwrap(), (1, 0));

        let conic = ideal(&r, &["Y", "X^2 - Z*W"]);
        let hd2 = hilbert_polynomial(&conic).unwrap();
        assert_eq!(hd2.hp_string(), "2*t + 1");
        assert_eq!(degree_genus(&hd2).unwrap(), (2, 0));
    }

    #[test]
    fn case_iv_curve_ideal_dimensions() {
        let r = ring();
        let c = ideal(&r, &["X*Y", "Y^2", "Y*Z", "X^2*Z"]);
        assert_eq!(graded_piece_dim(&c, 2).unwrap(), 3);
        let hd = hilbert_polynomial(&c).unwrap();
        assert_eq!(hd.hp_string(), "3*t + 1");
    }

    #[test]
    fn non_homogeneous_input_is_rejected() {
        let r = ring();
        let bad = ideal(&r, &["X^2 + Y"]);
        assert_eq!(hilbert_function(&bad, 2), Err(IdealError::NotHomogeneous));
        assert_eq!(
            hilbert_polynomial(&bad).map(|h| h.hp_string()),
            Err(IdealError::NotHomogeneous)
        );
    }

    #[test]
    fn surfaces_are_not_eventually_linear() {
        let r = ring();
        // A hypersurface has quadratic quotient growth.
        let surf = ideal(&r, &["X^2 - Y*Z"]);
        assert!(matches!(
            hilbert_polynomial(&surf),
            Err(IdealError::NotEventuallyLinear { .. })
        ));
    }

    #[test]
    fn linear_form_detection() {
        let r = ring();
        assert!(!contains_linear_form(&ideal(&r, &["X^2", "X*Y", "Y^2"])).unwrap());
        assert!(contains_linear_form(&ideal(&r, &["Y", "X^2"])).unwrap());
    }

    #[test]
    fn constant_polynomial_for_points() {
        let r = ring();
        // A reduced point has HP = 1.
        let pt = ideal(&r, &["X", "Y", "Z"]);
        let hd = hilbert_polynomial(&pt).unwrap();
        assert_eq!(hd.hp_string(), "1");
        assert_eq!(degree_genus(&hd).unwrap(), (0, 0));
    }
}
