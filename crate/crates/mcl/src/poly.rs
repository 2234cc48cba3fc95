//! Multivariate polynomials over the rationals with selectable monomial
//! orders: canonical term-list representation, arithmetic, substitution, and
//! the multivariate division algorithm.
//!
//! Terms are stored sparsely with dense exponent vectors, sorted strictly
//! descending in the ring's order, with no zero coefficients and no
//! duplicate monomials, so equal polynomials have identical term lists.

pub mod parse;

use crate::exact::Rat;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Monomial comparison rule. `Elimination { block }` is a block order that
/// eliminates the first `block` variables: it compares the leading block by
/// graded reverse lexicographic order first, then the remaining variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination { block } => format!("eliminate({block})"),
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the rightmost differing exponent decides, smaller wins.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

fn cmp_grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => cmp_lex(a, b),
        other => other,
    }
}

impl MonomialOrder {
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::GrLex => cmp_grlex(a, b),
            MonomialOrder::GrevLex => cmp_grevlex(a, b),
            MonomialOrder::Elimination { block } => {
                let k = (*block).min(a.len());
                match cmp_grevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => cmp_grevlex(&a[k..], &b[k..]),
                    other => other,
                }
            }
        }
    }
}

/// Exponent vector; one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A polynomial ring: an ordered list of distinct variable names plus a
/// monomial order. Rings compare by value, so independently constructed
/// identical rings are interchangeable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

/// Errors shared by the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Parse failure with a byte offset into the input.
    Syntax { pos: usize, message: String },
    UnknownVariable { name: String },
    RingMismatch,
    DuplicateVariable { name: String },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::Syntax { pos, message } => write!(f, "syntax error at {pos}: {message}"),
            PolyError::UnknownVariable { name } => write!(f, "unknown variable `{name}`"),
            PolyError::RingMismatch => write!(f, "polynomials belong to different rings"),
            PolyError::DuplicateVariable { name } => write!(f, "duplicate variable `{name}`"),
        }
    }
}

impl std::error::Error for PolyError {}

impl PolyRing {
    pub fn new(vars: &[&str], order: MonomialOrder) -> Result<Ring, PolyError> {
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            if !seen.insert(*v) {
                return Err(PolyError::DuplicateVariable {
                    name: (*v).to_string(),
                });
            }
        }
        Ok(Arc::new(PolyRing {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            order,
        }))
    }

    /// The default coordinate ring of projective 3-space under grevlex.
    pub fn xyzw() -> Ring {
        PolyRing::new(&["X", "Y", "Z", "W"], MonomialOrder::GrevLex).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables and order; the compatibility test used everywhere.
    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self == other
    }

    /// This ring with another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(PolyRing {
            vars: self.vars.clone(),
            order,
        })
    }

    /// A ring with extra variables prepended (for elimination the new
    /// variables form the leading block).
    pub fn with_prepended(&self, extra: &[&str], order: MonomialOrder) -> Result<Ring, PolyError> {
        let mut vars: Vec<&str> = extra.to_vec();
        let owned: Vec<String> = self.vars.clone();
        vars.extend(owned.iter().map(|s| s.as_str()));
        PolyRing::new(&vars, order)
    }

    /// A fresh auxiliary variable name not colliding with the ring's.
    pub fn fresh_var(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        let mut i = 0;
        loop {
            let cand = format!("{stem}{i}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
            i += 1;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rat,
    pub mono: Monomial,
}

/// A multivariate polynomial in canonical form.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Ring, c: Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(ring.nvars()),
            }],
        }
    }

    pub fn variable(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable {
                name: name.to_string(),
            })?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: Rat::one(),
                mono: Monomial::var(ring.nvars(), idx),
            }],
        })
    }

    /// Builds a polynomial from raw `(coefficient, exponents)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<(Rat, Vec<u32>)>) -> Self {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (c, exps) in terms {
            assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
            let m = Monomial::from_exps(exps);
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry = &*entry + &c;
        }
        Polynomial::from_map(ring, map)
    }

    fn from_map(ring: &Ring, map: BTreeMap<Monomial, Rat>) -> Self {
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp_exps(b.mono.exps(), a.mono.exps()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff.is_one() && self.terms[0].mono.is_one()
    }

    /// Leading term under the ring's order.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// True when every term has the same total degree (zero counts as
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = t0.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// Re-sorts the term list into `target`'s order. The variables must
    /// match; only the order may differ.
    pub fn into_ring_order(&self, target: &Ring) -> Polynomial {
        assert_eq!(self.ring.vars(), target.vars(), "variable mismatch");
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.cmp_exps(b.mono.exps(), a.mono.exps()));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }

    /// Maps this polynomial into `target`, sending variable `i` to the
    /// target variable `var_map[i]`. Exponents move, coefficients stay.
    pub fn map_variables(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for t in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                exps[var_map[i]] += e;
            }
            let m = Monomial::from_exps(exps);
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry = &*entry + &t.coeff;
        }
        Polynomial::from_map(target, map)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(PolyError::RingMismatch);
        }
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for t in self.terms.iter().chain(&other.terms) {
            let entry = map.entry(t.mono.clone()).or_insert_with(Rat::zero);
            *entry = &*entry + &t.coeff;
        }
        Ok(Polynomial::from_map(&self.ring, map))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(PolyError::RingMismatch);
        }
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let c = &a.coeff * &b.coeff;
                let entry = map.entry(m).or_insert_with(Rat::zero);
                *entry = &*entry + &c;
            }
        }
        Ok(Polynomial::from_map(&self.ring, map))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: c * &t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, coeff: &Rat, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a monomial keeps the term order.
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: coeff * &t.coeff,
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    /// `self^k` with `poly_pow(f, 0) = 1`.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Monic normalization (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lt) => {
                let inv = lt.coeff.recip().expect("leading coefficient nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Simultaneous substitution of polynomials for variables. Variables not
    /// mentioned map to themselves; images must live in the same ring.
    pub fn substitute(&self, map: &[(&str, Polynomial)]) -> Result<Polynomial, PolyError> {
        let mut images: Vec<Option<&Polynomial>> = vec![None; self.ring.nvars()];
        for (name, image) in map {
            let idx = self
                .ring
                .var_index(name)
                .ok_or_else(|| PolyError::UnknownVariable {
                    name: (*name).to_string(),
                })?;
            if !image.ring().same_ring(&self.ring) {
                return Err(PolyError::RingMismatch);
            }
            images[idx] = Some(image);
        }
        // Cache powers of each substituted image.
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.ring.nvars()];
        let mut out = Polynomial::zero(&self.ring);
        for t in &self.terms {
            let mut term_poly = Polynomial::constant(&self.ring, t.coeff.clone());
            let mut passthrough = vec![0u32; self.ring.nvars()];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match images[i] {
                    None => passthrough[i] = e,
                    Some(img) => {
                        let cache = &mut powers[i];
                        while cache.len() < e as usize {
                            let next = match cache.last() {
                                None => img.clone(),
                                Some(prev) => prev.checked_mul(img)?,
                            };
                            cache.push(next);
                        }
                        term_poly = term_poly.checked_mul(&cache[e as usize - 1])?;
                    }
                }
            }
            let carried = term_poly.mul_term(&Rat::one(), &Monomial::from_exps(passthrough));
            out = out.checked_add(&carried)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to the variable at `index`.
    pub fn partial(&self, index: usize) -> Polynomial {
        assert!(index < self.ring.nvars(), "variable index out of range");
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.mono.exps()[index];
            if e == 0 {
                continue;
            }
            let mut exps = t.mono.exps().to_vec();
            exps[index] -= 1;
            terms.push((&t.coeff * &Rat::from_int(e as i64), exps));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension mismatch");
        let mut acc = Rat::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (c, &e) in point.iter().zip(t.mono.exps()) {
                if e > 0 {
                    v = &v * &c.pow(e);
                }
            }
            acc = &acc + &v;
        }
        acc
    }

    /// Multivariate division by an ordered list of divisors: returns
    /// `(quotients, remainder)` with `self = Σ qᵢ·gᵢ + r` and no term of `r`
    /// divisible by any divisor's leading term. Deterministic in the
    /// divisor sequence. Panics on ring mismatch or a zero divisor.
    pub fn divide(&self, divisors: &[&Polynomial]) -> (Vec<Polynomial>, Polynomial) {
        for g in divisors {
            assert!(!g.is_zero(), "division by the zero polynomial");
            assert!(g.ring().same_ring(&self.ring), "ring mismatch in division");
        }
        let mut quotients = vec![Polynomial::zero(&self.ring); divisors.len()];
        let mut remainder_terms: Vec<Term> = Vec::new();
        let mut work = self.clone();
        'outer: while let Some(lt) = work.leading().cloned() {
            for (k, g) in divisors.iter().enumerate() {
                let glt = g.leading().expect("nonzero divisor");
                if let Some(qm) = glt.mono.div_into(&lt.mono) {
                    let qc = lt.coeff.checked_div(&glt.coeff).expect("nonzero lead");
                    let qterm = Polynomial {
                        ring: self.ring.clone(),
                        terms: vec![Term {
                            coeff: qc.clone(),
                            mono: qm.clone(),
                        }],
                    };
                    quotients[k] = quotients[k].checked_add(&qterm).expect("same ring");
                    let sub = g.mul_term(&qc, &qm);
                    work = work.checked_sub(&sub).expect("same ring");
                    continue 'outer;
                }
            }
            // No divisor's leading term divides: move the term to r.
            remainder_terms.push(lt.clone());
            work = work
                .checked_sub(&Polynomial {
                    ring: self.ring.clone(),
                    terms: vec![lt],
                })
                .expect("same ring");
        }
        let remainder = Polynomial {
            ring: self.ring.clone(),
            terms: remainder_terms,
        };
        (quotients, remainder)
    }

    /// Remainder of [`Polynomial::divide`].
    pub fn reduce(&self, divisors: &[&Polynomial]) -> Polynomial {
        self.divide(divisors).1
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let mag = t.coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || t.mono.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.ring.vars().iter().zip(t.mono.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        PolyRing::xyzw()
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse::parse_poly(s, ring).unwrap()
    }

    #[test]
    fn grevlex_orders_like_the_textbook() {
        let o = MonomialOrder::GrevLex;
        // X^2 > XY > Y^2 > XZ in 3 variables.
        assert_eq!(o.cmp_exps(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp_exps(&[1, 1, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(o.cmp_exps(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp_exps(&[1, 0, 1], &[1, 0, 1]), Ordering::Equal);
        // Degree dominates.
        assert_eq!(o.cmp_exps(&[0, 0, 3], &[1, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn elimination_order_puts_the_block_first() {
        let o = MonomialOrder::Elimination { block: 1 };
        // Any power of the first variable beats anything without it.
        assert_eq!(o.cmp_exps(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert_eq!(o.cmp_exps(&[0, 2, 0], &[0, 1, 1]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_canonicalizes() {
        let r = ring();
        let f = p(&r, "X + Y");
        let g = p(&r, "X - Y");
        assert_eq!(f.checked_mul(&g).unwrap(), p(&r, "X^2 - Y^2"));
        assert_eq!(f.pow(0), Polynomial::one(&r));
        assert_eq!(f.pow(2), p(&r, "X^2 + 2*X*Y + Y^2"));
        let mismatch = Polynomial::one(&PolyRing::new(&["A"], MonomialOrder::Lex).unwrap());
        assert_eq!(f.checked_add(&mismatch), Err(PolyError::RingMismatch));
    }

    #[test]
    fn leading_term_under_grevlex() {
        let r = ring();
        let f = p(&r, "X*Z - Y^2");
        assert_eq!(f.leading().unwrap().mono.exps(), &[0, 2, 0, 0]);
        assert_eq!(f.to_string(), "-Y^2 + X*Z");
    }

    #[test]
    fn substitution_examples() {
        let r = ring();
        let f = p(&r, "X*Y");
        let swapped = f
            .substitute(&[("X", p(&r, "Y")), ("Y", p(&r, "X"))])
            .unwrap();
        assert_eq!(swapped, f);

        let sq = p(&r, "X^2");
        let shifted = sq.substitute(&[("X", p(&r, "X - 2*Y"))]).unwrap();
        assert_eq!(shifted, p(&r, "X^2 - 4*X*Y + 4*Y^2"));

        let identity = p(&r, "X^3 - Y*W")
            .substitute(&[
                ("X", p(&r, "X")),
                ("Y", p(&r, "Y")),
                ("Z", p(&r, "Z")),
                ("W", p(&r, "W")),
            ])
            .unwrap();
        assert_eq!(identity, p(&r, "X^3 - Y*W"));

        assert!(matches!(
            p(&r, "X").substitute(&[("Q", p(&r, "X"))]),
            Err(PolyError::UnknownVariable { .. })
        ));
    }

    #[test]
    fn division_examples() {
        let r = ring();
        let f = p(&r, "X^2*Y + X*Y^2");
        let d = p(&r, "X*Y");
        let (q, rem) = f.divide(&[&d]);
        assert_eq!(q[0], p(&r, "X + Y"));
        assert!(rem.is_zero());

        let (q, rem) = p(&r, "Y*Z").divide(&[&p(&r, "Y")]);
        assert_eq!(q[0], p(&r, "Z"));
        assert!(rem.is_zero());

        let (q, rem) = p(&r, "X^2 + 1").divide(&[&p(&r, "Y")]);
        assert!(q[0].is_zero());
        assert_eq!(rem, p(&r, "X^2 + 1"));
    }

    #[test]
    fn division_identity_holds() {
        let r = ring();
        let f = p(&r, "X^3*Y - Z^2 + 5*X*W - 7");
        let g1 = p(&r, "X*Y - 1");
        let g2 = p(&r, "Z - W^2");
        let (q, rem) = f.divide(&[&g1, &g2]);
        let recomposed = q[0]
            .checked_mul(&g1)
            .unwrap()
            .checked_add(&q[1].checked_mul(&g2).unwrap())
            .unwrap()
            .checked_add(&rem)
            .unwrap();
        assert_eq!(recomposed, f);
        // No remainder term is divisible by a divisor leading term.
        for t in rem.terms() {
            for g in [&g1, &g2] {
                assert!(!g.leading().unwrap().mono.divides(&t.mono));
            }
        }
    }

    #[test]
    fn derivative_and_evaluation() {
        let r = ring();
        let f = p(&r, "X^3 - 2*X*Y + W");
        assert_eq!(f.partial(0), p(&r, "3*X^2 - 2*Y"));
        assert_eq!(f.partial(1), p(&r, "-2*X"));
        assert_eq!(f.partial(2), Polynomial::zero(&r));
        let point = [Rat::from_int(2), Rat::new(1, 2), Rat::zero(), Rat::from_int(3)];
        // 8 - 2*2*(1/2) + 3 = 9
        assert_eq!(f.eval(&point), Rat::from_int(9));
    }

    #[test]
    fn homogeneity_is_tracked() {
        let r = ring();
        assert!(p(&r, "X*Z - Y^2").is_homogeneous());
        assert!(!p(&r, "X^2 + Y").is_homogeneous());
        assert!(Polynomial::zero(&r).is_homogeneous());
        let f = p(&r, "X*Z - Y^2");
        let sub = f.substitute(&[("X", p(&r, "X + Y"))]).unwrap();
        assert!(sub.is_homogeneous());
        assert_eq!(sub.total_degree(), Some(2));
    }
}
