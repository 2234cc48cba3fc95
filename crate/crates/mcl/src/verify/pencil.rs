//! The reducible-member count of a pencil of plane curves with assigned
//! base points, and the Euler-characteristic ledger that recomputes the same
//! number from a fibered surface.
//!
//! For a pencil of nodal cubics through a common node `p` and five further
//! base points, a member is reducible exactly when the line through `p` and
//! one of the base points divides it; the divisibility condition is linear
//! in the pencil parameter `(λ : μ)`.

use crate::exact::Rat;
use crate::poly::{parse::parse_poly, MonomialOrder, PolyRing, Polynomial, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilError {
    Parse(String),
    Validation(String),
    Degenerate(String),
}

impl fmt::Display for PencilError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilError::Parse(msg) => write!(f, "pencil spec parse error: {msg}"),
            PencilError::Validation(msg) => write!(f, "pencil spec invalid: {msg}"),
            PencilError::Degenerate(msg) => write!(f, "degenerate pencil: {msg}"),
        }
    }
}

impl std::error::Error for PencilError {}

/// A pencil `λ·f + μ·g` of plane cubics, all singular at `node` and passing
/// through the `base_points`.
#[derive(Clone, Debug)]
pub struct PencilSpec {
    ring: Ring,
    pub f: Polynomial,
    pub g: Polynomial,
    pub node: Vec<Rat>,
    pub base_points: Vec<Vec<Rat>>,
}

impl PencilSpec {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Parses the plain-text spec format: `key = value` lines, `#` comments,
    /// keys `vars`, `f`, `g`, `node`, and one `base` line per base point.
    pub fn parse(text: &str) -> Result<Self, PencilError> {
        let mut vars: Option<Vec<String>> = None;
        let mut f_text: Option<String> = None;
        let mut g_text: Option<String> = None;
        let mut node: Option<Vec<Rat>> = None;
        let mut base_points: Vec<Vec<Rat>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| PencilError::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            let value = value.trim();
            match key.trim() {
                "vars" => {
                    vars = Some(value.split(',').map(|v| v.trim().to_string()).collect());
                }
                "f" => f_text = Some(value.to_string()),
                "g" => g_text = Some(value.to_string()),
                "node" => node = Some(parse_point(value, lineno + 1)?),
                "base" => base_points.push(parse_point(value, lineno + 1)?),
                other => {
                    return Err(PencilError::Parse(format!(
                        "line {}: unknown key `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        let vars = vars.ok_or_else(|| PencilError::Parse("missing `vars`".into()))?;
        let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::new(&var_refs, MonomialOrder::GrevLex)
            .map_err(|e| PencilError::Parse(e.to_string()))?;
        let parse_in = |label: &str, text: Option<String>| -> Result<Polynomial, PencilError> {
            let t = text.ok_or_else(|| PencilError::Parse(format!("missing `{label}`")))?;
            parse_poly(&t, &ring).map_err(|e| PencilError::Parse(format!("{label}: {e}")))
        };
        let spec = PencilSpec {
            f: parse_in("f", f_text)?,
            g: parse_in("g", g_text)?,
            node: node.ok_or_else(|| PencilError::Parse("missing `node`".into()))?,
            base_points,
            ring,
        };
        Ok(spec)
    }

    /// The pencil committed to the repository, revalidated on every run.
    pub fn shipped() -> PencilSpec {
        let spec = PencilSpec::parse(include_str!("../../fixtures/pencil.spec"))
            .expect("shipped pencil spec parses");
        spec.validate().expect("shipped pencil spec is valid");
        spec
    }

    /// Checks the structural invariants: both cubics have all first partials
    /// vanishing at the node (hence pass through it), both pass through
    /// every base point, and the two cubics are not proportional.
    pub fn validate(&self) -> Result<(), PencilError> {
        let n = self.ring.nvars();
        if n != 3 {
            return Err(PencilError::Validation(
                "plane pencils need exactly three coordinates".into(),
            ));
        }
        if self.node.len() != n {
            return Err(PencilError::Validation("node has wrong dimension".into()));
        }
        for (label, c) in [("f", &self.f), ("g", &self.g)] {
            for i in 0..n {
                if !c.partial(i).eval(&self.node).is_zero() {
                    return Err(PencilError::Validation(format!(
                        "{label} is not singular at the node"
                    )));
                }
            }
            if !c.eval(&self.node).is_zero() {
                return Err(PencilError::Validation(format!(
                    "{label} does not pass through the node"
                )));
            }
            for (k, b) in self.base_points.iter().enumerate() {
                if b.len() != n {
                    return Err(PencilError::Validation(format!(
                        "base point {} has wrong dimension",
                        k + 1
                    )));
                }
                if !c.eval(b).is_zero() {
                    return Err(PencilError::Validation(format!(
                        "{label} does not pass through base point {}",
                        k + 1
                    )));
                }
            }
        }
        if self.f.is_zero() || self.g.is_zero() || self.f.monic() == self.g.monic() {
            return Err(PencilError::Degenerate(
                "the two cubics do not span a pencil".into(),
            ));
        }
        Ok(())
    }
}

fn parse_point(value: &str, lineno: usize) -> Result<Vec<Rat>, PencilError> {
    value
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Rat>()
                .map_err(|e| PencilError::Parse(format!("line {lineno}: {e}")))
        })
        .collect()
}

/// A reducible pencil member: the parameter `(λ : μ)` in canonical form
/// (first nonzero entry 1) and the line dividing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibleMember {
    pub lambda: Rat,
    pub mu: Rat,
    pub line: Polynomial,
}

impl fmt::Display for ReducibleMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.lambda, self.mu)
    }
}

/// The line of the plane through two distinct points, as a primitive
/// integer linear form with positive first nonzero coefficient.
pub fn line_through(ring: &Ring, p: &[Rat], q: &[Rat]) -> Result<Polynomial, PencilError> {
    assert_eq!(ring.nvars(), 3, "lines live in the plane");
    let cross = [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ];
    if cross.iter().all(|c| c.is_zero()) {
        return Err(PencilError::Degenerate(
            "line through two proportional points".into(),
        ));
    }
    // Clear denominators and divide by the content; flip sign so the first
    // nonzero coefficient is positive.
    let lcm = cross
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = cross
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    for v in &mut ints {
        *v = &*v / &gcd;
    }
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in &mut ints {
            *v = -&*v;
        }
    }
    let terms = ints
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let mut exps = vec![0u32; 3];
            exps[i] = 1;
            (Rat::from_bigint(c), exps)
        })
        .collect();
    Ok(Polynomial::from_terms(ring, terms))
}

/// For each candidate line, solves the linear condition "the line divides
/// `λ·f + μ·g`" for `(λ : μ)` and returns the distinct solutions, sorted.
/// A line dividing every member makes the pencil degenerate.
pub fn reducible_members(
    f: &Polynomial,
    g: &Polynomial,
    lines: &[Polynomial],
) -> Result<Vec<ReducibleMember>, PencilError> {
    if f.is_zero() || g.is_zero() || f.monic() == g.monic() {
        return Err(PencilError::Degenerate(
            "the two curves do not span a pencil".into(),
        ));
    }
    let mut members: Vec<ReducibleMember> = Vec::new();
    for line in lines {
        let rf = f.reduce(&[line]);
        let rg = g.reduce(&[line]);
        // The remainder of λf + μg is λ·rf + μ·rg; divisibility of some
        // member by the line means the two remainders are proportional.
        let (lambda, mu) = if rf.is_zero() && rg.is_zero() {
            return Err(PencilError::Degenerate(
                "a candidate line divides every member".into(),
            ));
        } else if rf.is_zero() {
            (Rat::one(), Rat::zero())
        } else if rg.is_zero() {
            (Rat::zero(), Rat::one())
        } else {
            let lt = rf.leading().expect("nonzero");
            let Some(matching) = rg
                .terms()
                .iter()
                .find(|t| t.mono == lt.mono)
            else {
                continue;
            };
            // Candidate (λ : μ) kills the leading term; accept only when it
            // kills the whole remainder.
            let lambda = matching.coeff.clone();
            let mu = -&lt.coeff;
            let combo = rf
                .scale(&lambda)
                .checked_add(&rg.scale(&mu))
                .expect("same ring");
            if !combo.is_zero() {
                continue;
            }
            (lambda, mu)
        };
        let (lambda, mu) = normalize_pair(lambda, mu);
        let member = f
            .scale(&lambda)
            .checked_add(&g.scale(&mu))
            .expect("same ring");
        debug_assert!(member.reduce(&[line]).is_zero());
        if !members.iter().any(|m| m.lambda == lambda && m.mu == mu) {
            members.push(ReducibleMember {
                lambda,
                mu,
                line: line.clone(),
            });
        }
    }
    members.sort_by(|a, b| (&a.lambda, &a.mu).cmp(&(&b.lambda, &b.mu)));
    Ok(members)
}

fn normalize_pair(lambda: Rat, mu: Rat) -> (Rat, Rat) {
    if !lambda.is_zero() {
        let inv = lambda.recip().expect("nonzero");
        (Rat::one(), &mu * &inv)
    } else {
        (Rat::zero(), Rat::one())
    }
}

/// Counts the reducible members of the pencil: one candidate line through
/// the node and each base point.
pub fn count_reducible_members(
    spec: &PencilSpec,
) -> Result<(usize, Vec<ReducibleMember>), PencilError> {
    spec.validate()?;
    let lines = spec
        .base_points
        .iter()
        .map(|b| line_through(spec.ring(), &spec.node, b))
        .collect::<Result<Vec<_>, _>>()?;
    let members = reducible_members(&spec.f, &spec.g, &lines)?;
    Ok((members.len(), members))
}

/// Euler-characteristic ledger for the blown-up pencil surface fibered over
/// the line: blowing up `k` points gives `χ(S) = 3 + k`, and comparing with
/// `χ(P¹)·χ(P¹)` plus one per reducible fiber leaves `χ(S) - 4` of them.
pub fn euler_ledger(k: u32) -> (i64, i64) {
    let chi = 3 + k as i64;
    (chi, chi - 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> Ring {
        PolyRing::new(&["X", "Y", "Z"], MonomialOrder::GrevLex).unwrap()
    }

    fn pt(coords: [i64; 3]) -> Vec<Rat> {
        coords.iter().map(|&c| Rat::from_int(c)).collect()
    }

    #[test]
    fn shipped_pencil_has_five_reducible_members() {
        let spec = PencilSpec::shipped();
        let (count, members) = count_reducible_members(&spec).unwrap();
        assert_eq!(count, 5);
        let params: Vec<String> = members.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            params,
            vec!["(0:1)", "(1:-9/5)", "(1:-1)", "(1:-1/3)", "(1:9/5)"]
        );
        // Each member is genuinely divisible by its line.
        for m in &members {
            let member = spec.f.scale(&m.lambda).checked_add(&spec.g.scale(&m.mu)).unwrap();
            assert!(member.reduce(&[&m.line]).is_zero());
        }
    }

    #[test]
    fn conic_pencil_through_four_points_has_three() {
        let r = plane();
        // Conics through [0,0,1], [1,0,1], [0,1,1], [1,1,1].
        let f = parse_poly("X^2 - X*Z", &r).unwrap();
        let g = parse_poly("Y^2 - Y*Z", &r).unwrap();
        let pts = [pt([0, 0, 1]), pt([1, 0, 1]), pt([0, 1, 1]), pt([1, 1, 1])];
        let mut lines = Vec::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                lines.push(line_through(&r, &pts[i], &pts[j]).unwrap());
            }
        }
        assert_eq!(lines.len(), 6);
        let members = reducible_members(&f, &g, &lines).unwrap();
        assert_eq!(members.len(), 3);
    }

    #[test]
    fn identical_cubics_are_degenerate() {
        let r = plane();
        let f = parse_poly("X^2*Z - Y^3", &r).unwrap();
        assert!(matches!(
            reducible_members(&f, &f.scale(&Rat::from_int(2)), &[]),
            Err(PencilError::Degenerate(_))
        ));
    }

    #[test]
    fn euler_ledger_values() {
        assert_eq!(euler_ledger(6), (9, 5));
        assert_eq!(euler_ledger(1), (4, 0));
        assert_eq!(euler_ledger(4), (7, 3));
    }

    #[test]
    fn lines_are_normalized() {
        let r = plane();
        let l = line_through(&r, &pt([0, 0, 1]), &pt([2, -1, 1])).unwrap();
        assert_eq!(l.to_string(), "X + 2*Y");
        assert!(line_through(&r, &pt([1, 2, 3]), &pt([2, 4, 6])).is_err());
    }

    #[test]
    fn validation_catches_broken_specs() {
        let text = "vars = X, Y, Z\nnode = 0, 0, 1\nbase = 1, 1, 1\nf = X^3\ng = Y^3\n";
        let spec = PencilSpec::parse(text).unwrap();
        // X^3 is singular at [0,0,1] but does not pass through [1,1,1].
        assert!(matches!(spec.validate(), Err(PencilError::Validation(_))));
    }
}
