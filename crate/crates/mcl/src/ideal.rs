//! Polynomial ideals over the rationals: reduced Gröbner bases by
//! Buchberger's algorithm, membership and equality, the lattice operations
//! (sum, product, intersection, quotient, saturation, elimination), and the
//! geometric predicates built on them.
//!
//! Pair selection uses the normal strategy — smallest lcm degree first, ties
//! broken by pair index — together with the coprime-leading-term and chain
//! criteria, so the whole computation is deterministic.

pub mod hilbert;

use crate::exact::Rat;
use crate::poly::{Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, Ring};
use std::collections::BTreeSet;
use std::fmt;

/// A finitely generated ideal. The empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Builds an ideal, dropping zero generators and exact duplicates.
    /// Panics when a generator lives in a different ring.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert!(
                g.ring().same_ring(ring),
                "generator from a different ring"
            );
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: kept,
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// Parses comma-separated generators.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self, PolyError> {
        let polys = gens
            .iter()
            .map(|s| crate::poly::parse::parse_poly(s, ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(ring, polys))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Errors from the ideal layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    RingMismatch,
    NotHomogeneous,
    /// The quotient dimensions never became linear below the degree cap.
    NotEventuallyLinear { cap: u32 },
    NonLinearHilbertPolynomial,
    InvalidPoint(String),
    /// Internal check: a generator of `I ∩ (f)` was not divisible by `f`.
    DivisionInconsistency,
    SaturationCapExceeded { cap: u32 },
    UnknownVariable { name: String },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::RingMismatch => write!(f, "ideals belong to different rings"),
            IdealError::NotHomogeneous => write!(f, "ideal is not homogeneous"),
            IdealError::NotEventuallyLinear { cap } => {
                write!(f, "quotient dimensions not eventually linear up to degree {cap}")
            }
            IdealError::NonLinearHilbertPolynomial => {
                write!(f, "Hilbert polynomial is not of the form c1*t + c0")
            }
            IdealError::InvalidPoint(msg) => write!(f, "invalid point: {msg}"),
            IdealError::DivisionInconsistency => {
                write!(f, "internal division inconsistency in ideal quotient")
            }
            IdealError::SaturationCapExceeded { cap } => {
                write!(f, "saturation did not stabilize within {cap} steps")
            }
            IdealError::UnknownVariable { name } => write!(f, "unknown variable `{name}`"),
        }
    }
}

impl std::error::Error for IdealError {}

/// A reduced Gröbner basis: monic elements, no term of any element divisible
/// by another's leading term, listed in increasing leading-monomial order.
/// Unique for a given ideal and order.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// Normal form: the remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.into_ring_order(&self.ring);
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        f.reduce(&refs)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.basis
            .iter()
            .map(|g| &g.leading().expect("basis elements are nonzero").mono)
            .collect()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ft = f.leading().expect("nonzero");
    let gt = g.leading().expect("nonzero");
    let lcm = ft.mono.lcm(&gt.mono);
    let fm = ft.mono.div_into(&lcm).expect("lcm divisible");
    let gm = gt.mono.div_into(&lcm).expect("lcm divisible");
    let fc = ft.coeff.recip().expect("nonzero lead");
    let gc = gt.coeff.recip().expect("nonzero lead");
    let lhs = f.mul_term(&fc, &fm);
    let rhs = g.mul_term(&gc, &gm);
    lhs.checked_sub(&rhs).expect("same ring")
}

/// Buchberger's algorithm returning the reduced Gröbner basis of `ideal`
/// under `order`. The zero ideal yields the empty basis.
pub fn groebner(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let ring = ideal.ring().with_order(order);
    let mut basis: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.into_ring_order(&ring))
        .collect();
    basis.retain(|g| !g.is_zero());

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // Normal strategy: smallest lcm total degree, then smallest indices.
        let (i, j) = *pending
            .iter()
            .min_by_key(|(i, j)| {
                let lcm = basis[*i]
                    .leading()
                    .unwrap()
                    .mono
                    .lcm(&basis[*j].leading().unwrap().mono);
                (lcm.degree(), *i, *j)
            })
            .expect("nonempty pending set");
        pending.remove(&(i, j));

        let lm_i = &basis[i].leading().unwrap().mono;
        let lm_j = &basis[j].leading().unwrap().mono;
        // Coprime leading terms: S-polynomial reduces to zero.
        if lm_i.gcd_is_one(lm_j) {
            continue;
        }
        // Chain criterion: drop the pair when some other basis element
        // divides the lcm and both companion pairs were already treated.
        let lcm = lm_i.lcm(lm_j);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().unwrap().mono.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let remainder = s.reduce(&refs);
        if !remainder.is_zero() {
            let new_index = basis.len();
            basis.push(remainder.monic());
            for k in 0..new_index {
                pending.insert((k, new_index));
            }
        }
    }

    reduce_basis(&ring, basis)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimizes and fully inter-reduces a Gröbner basis.
fn reduce_basis(ring: &Ring, mut basis: Vec<Polynomial>) -> GroebnerBasis {
    let order = ring.order();
    basis.sort_by(|a, b| {
        order.cmp_exps(
            a.leading().unwrap().mono.exps(),
            b.leading().unwrap().mono.exps(),
        )
    });
    // Minimal set: keep an element only when no kept leading monomial
    // divides its leading monomial. Divisibility implies order-smaller, so
    // one ascending pass is enough.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = &g.leading().unwrap().mono;
        if !minimal
            .iter()
            .any(|h| h.leading().unwrap().mono.divides(lm))
        {
            minimal.push(g);
        }
    }
    // Tail-reduce every element against the others until nothing moves.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<&Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g)
                .collect();
            let reduced = minimal[i].reduce(&others).monic();
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut minimal {
        *g = g.monic();
    }
    GroebnerBasis {
        ring: ring.clone(),
        basis: minimal,
    }
}

/// Membership through the normal form against the reduced basis.
pub fn contains(ideal: &Ideal, f: &Polynomial) -> Result<bool, IdealError> {
    if !f.ring().same_ring(ideal.ring()) {
        return Err(IdealError::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.is_zero_ideal() {
        return Ok(false);
    }
    let gb = groebner(ideal, ideal.ring().order());
    Ok(gb.normal_form(f).is_zero())
}

/// Equality via identical reduced bases under the common (first ideal's)
/// order.
pub fn ideal_equal(lhs: &Ideal, rhs: &Ideal) -> Result<bool, IdealError> {
    if !lhs.ring().same_ring(rhs.ring()) {
        return Err(IdealError::RingMismatch);
    }
    let order = lhs.ring().order();
    Ok(groebner(lhs, order).basis() == groebner(rhs, order).basis())
}

fn require_same_ring(lhs: &Ideal, rhs: &Ideal) -> Result<(), IdealError> {
    if lhs.ring().same_ring(rhs.ring()) {
        Ok(())
    } else {
        Err(IdealError::RingMismatch)
    }
}

pub fn sum(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal, IdealError> {
    require_same_ring(lhs, rhs)?;
    let mut gens = lhs.gens().to_vec();
    gens.extend(rhs.gens().iter().cloned());
    Ok(Ideal::new(lhs.ring(), gens))
}

pub fn product(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal, IdealError> {
    require_same_ring(lhs, rhs)?;
    let mut gens = Vec::new();
    for f in lhs.gens() {
        for g in rhs.gens() {
            gens.push(f.checked_mul(g).expect("same ring"));
        }
    }
    Ok(Ideal::new(lhs.ring(), gens))
}

/// `ideal^k`, with the empty product being the unit ideal.
pub fn power(ideal: &Ideal, k: u32) -> Ideal {
    let mut acc = Ideal::unit(ideal.ring());
    for _ in 0..k {
        acc = product(&acc, ideal).expect("same ring");
    }
    acc
}

/// Intersection by the auxiliary-variable construction: eliminate `t` from
/// `t·I + (1 - t)·J`. The result is returned as the reduced basis in the
/// original ring.
pub fn intersect(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal, IdealError> {
    require_same_ring(lhs, rhs)?;
    let ring = lhs.ring();
    if lhs.is_zero_ideal() || rhs.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let aux = ring.fresh_var("t");
    let ext = ring
        .with_prepended(&[aux.as_str()], MonomialOrder::Elimination { block: 1 })
        .expect("fresh variable cannot collide");
    let var_map: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Polynomial::variable(&ext, &aux).expect("aux variable exists");
    let one_minus_t = Polynomial::one(&ext).checked_sub(&t).expect("same ring");
    let mut gens = Vec::new();
    for f in lhs.gens() {
        let up = f.map_variables(&ext, &var_map);
        gens.push(t.checked_mul(&up).expect("same ring"));
    }
    for g in rhs.gens() {
        let up = g.map_variables(&ext, &var_map);
        gens.push(one_minus_t.checked_mul(&up).expect("same ring"));
    }
    let gb = groebner(&Ideal::new(&ext, gens), ext.order());
    let mut down = Vec::new();
    // Kept elements are the ones free of the auxiliary variable; they map
    // back by dropping its exponent slot.
    let back_map: Vec<usize> = std::iter::once(0)
        .chain(0..ring.nvars())
        .collect();
    for g in gb.basis() {
        if g.terms().iter().all(|t| t.mono.exps()[0] == 0) {
            down.push(g.map_variables(ring, &back_map).into_ring_order(ring));
        }
    }
    Ok(Ideal::new(ring, down))
}

/// `(ideal : f)` for a single nonzero polynomial, via `I ∩ (f)` divided
/// by `f`.
fn quotient_by_poly(ideal: &Ideal, f: &Polynomial) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    let inter = intersect(ideal, &Ideal::new(ring, vec![f.clone()]))?;
    let mut gens = Vec::new();
    for g in inter.gens() {
        let (q, r) = g.divide(&[f]);
        if !r.is_zero() {
            return Err(IdealError::DivisionInconsistency);
        }
        gens.push(q.into_iter().next().expect("one divisor"));
    }
    Ok(Ideal::new(ring, gens))
}

/// The ideal quotient `(lhs : rhs) = ∩ (lhs : f)` over the generators of
/// `rhs`. The quotient by the zero ideal is the unit ideal.
pub fn quotient(lhs: &Ideal, rhs: &Ideal) -> Result<Ideal, IdealError> {
    require_same_ring(lhs, rhs)?;
    if rhs.is_zero_ideal() {
        return Ok(Ideal::unit(lhs.ring()));
    }
    let mut acc: Option<Ideal> = None;
    for f in rhs.gens() {
        let q = quotient_by_poly(lhs, f)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    Ok(acc.expect("rhs has generators"))
}

/// Iteration cap for [`saturate`].
pub const SATURATION_CAP: u32 = 50;

/// The saturation `lhs : rhs^∞` with the stabilization exponent: the
/// smallest `k` with `lhs : rhs^k` stable under another quotient.
pub fn saturate(lhs: &Ideal, rhs: &Ideal) -> Result<(Ideal, u32), IdealError> {
    require_same_ring(lhs, rhs)?;
    let mut current = lhs.clone();
    for exponent in 0..SATURATION_CAP {
        let next = quotient(&current, rhs)?;
        if ideal_equal(&current, &next)? {
            return Ok((current, exponent));
        }
        current = next;
    }
    Err(IdealError::SaturationCapExceeded {
        cap: SATURATION_CAP,
    })
}

/// Eliminates the named variables: computes a Gröbner basis under a block
/// order with those variables leading and keeps the elements free of them.
/// The result lives in the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[&str]) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    for v in vars {
        if ring.var_index(v).is_none() {
            return Err(IdealError::UnknownVariable {
                name: (*v).to_string(),
            });
        }
    }
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let elim: Vec<&str> = ring
        .vars()
        .iter()
        .filter(|v| vars.contains(&v.as_str()))
        .map(|v| v.as_str())
        .collect();
    let keep: Vec<&str> = ring
        .vars()
        .iter()
        .filter(|v| !vars.contains(&v.as_str()))
        .map(|v| v.as_str())
        .collect();
    let k = elim.len();
    let mut new_vars = elim.clone();
    new_vars.extend(keep.iter());
    let block_ring = PolyRing::new(&new_vars, MonomialOrder::Elimination { block: k })
        .expect("ring variables are distinct");
    // var_map: source index -> index in the permuted ring.
    let var_map: Vec<usize> = ring
        .vars()
        .iter()
        .map(|v| {
            new_vars
                .iter()
                .position(|w| w == &v.as_str())
                .expect("permutation")
        })
        .collect();
    let lifted: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.map_variables(&block_ring, &var_map))
        .collect();
    let gb = groebner(&Ideal::new(&block_ring, lifted), block_ring.order());
    // Map back: permuted index -> source index.
    let mut back_map = vec![0usize; block_ring.nvars()];
    for (src, dst) in var_map.iter().enumerate() {
        back_map[*dst] = src;
    }
    let mut kept = Vec::new();
    for g in gb.basis() {
        let free = g
            .terms()
            .iter()
            .all(|t| t.mono.exps()[..k].iter().all(|&e| e == 0));
        if free {
            kept.push(g.map_variables(ring, &back_map).into_ring_order(ring));
        }
    }
    Ok(Ideal::new(ring, kept))
}

/// The ideal of a point of projective space: the `n - 1` independent linear
/// forms vanishing at `p`, chosen deterministically by row reduction against
/// the first nonzero coordinate.
pub fn point_ideal(ring: &Ring, p: &[Rat]) -> Result<Ideal, IdealError> {
    if p.len() != ring.nvars() {
        return Err(IdealError::InvalidPoint(format!(
            "expected {} coordinates, got {}",
            ring.nvars(),
            p.len()
        )));
    }
    let Some(pivot) = p.iter().position(|c| !c.is_zero()) else {
        return Err(IdealError::InvalidPoint("all coordinates are zero".into()));
    };
    let mut gens = Vec::new();
    for i in 0..p.len() {
        if i == pivot {
            continue;
        }
        // x_i - (p_i / p_pivot) * x_pivot
        let ratio = p[i].checked_div(&p[pivot]).expect("pivot nonzero");
        let mut terms = vec![(Rat::one(), unit_exp(ring.nvars(), i))];
        if !ratio.is_zero() {
            terms.push((-ratio, unit_exp(ring.nvars(), pivot)));
        }
        gens.push(Polynomial::from_terms(ring, terms));
    }
    Ok(Ideal::new(ring, gens))
}

fn unit_exp(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    e[i] = 1;
    e
}

/// True when the subscheme cut out by the homogeneous ideal has an isolated
/// or embedded component at the point `p`: saturating away `p` changes the
/// ideal.
pub fn point_component_at(ideal: &Ideal, p: &[Rat]) -> Result<bool, IdealError> {
    if !ideal.is_homogeneous() {
        return Err(IdealError::NotHomogeneous);
    }
    let m_p = point_ideal(ideal.ring(), p)?;
    let (saturated, _) = saturate(ideal, &m_p)?;
    Ok(!ideal_equal(&saturated, ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn ring() -> Ring {
        PolyRing::xyzw()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn twisted_cubic(r: &Ring) -> Ideal {
        ideal(r, &["X*Z - Y^2", "Y*W - Z^2", "X*W - Y*Z"])
    }

    #[test]
    fn monomial_ideal_is_already_reduced() {
        let r = ring();
        let i = ideal(&r, &["X^2", "X*Y", "Y^2", "Y*Z"]);
        let gb = groebner(&i, MonomialOrder::GrevLex);
        let strings: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(strings, vec!["Y*Z", "Y^2", "X*Y", "X^2"]);
    }

    #[test]
    fn twisted_cubic_basis_has_three_elements() {
        let r = ring();
        let gb = groebner(&twisted_cubic(&r), MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 3);
        // Each S-polynomial of the returned basis reduces to zero.
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_polynomial(&gb.basis()[i], &gb.basis()[j]);
                assert!(gb.normal_form(&s).is_zero());
            }
        }
    }

    #[test]
    fn linear_cleanup() {
        let r = ring();
        let gb = groebner(&ideal(&r, &["X + Y", "Y"]), MonomialOrder::GrevLex);
        let strings: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(strings, vec!["Y", "X"]);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring();
        let gb = groebner(&Ideal::zero(&r), MonomialOrder::GrevLex);
        assert!(gb.is_empty());
    }

    #[test]
    fn reduced_basis_is_permutation_invariant() {
        let r = ring();
        let a = groebner(
            &ideal(&r, &["X*Z - Y^2", "Y*W - Z^2", "X*W - Y*Z"]),
            MonomialOrder::GrevLex,
        );
        let b = groebner(
            &ideal(&r, &["X*W - Y*Z", "X*Z - Y^2", "Y*W - Z^2"]),
            MonomialOrder::GrevLex,
        );
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn membership_examples() {
        let r = ring();
        let tc = twisted_cubic(&r);
        assert!(contains(&tc, &parse_poly("X*W - Y*Z", &r).unwrap()).unwrap());
        // Z·(XZ - Y^2) + X·(YW - Z^2) - Y·(XW - YZ) expands to zero.
        let combo = parse_poly(
            "Z*(X*Z - Y^2) + X*(Y*W - Z^2) - Y*(X*W - Y*Z)",
            &r,
        )
        .unwrap();
        assert!(combo.is_zero());
        assert!(contains(&tc, &combo).unwrap());
        assert!(!contains(&ideal(&r, &["X^2"]), &parse_poly("X", &r).unwrap()).unwrap());
        let other = Ideal::unit(&PolyRing::new(&["A"], MonomialOrder::Lex).unwrap());
        assert_eq!(
            contains(&other, &parse_poly("X", &r).unwrap()),
            Err(IdealError::RingMismatch)
        );
    }

    #[test]
    fn equality_ignores_presentation() {
        let r = ring();
        assert!(ideal_equal(&ideal(&r, &["X", "Y"]), &ideal(&r, &["X + Y", "Y"])).unwrap());
        assert!(!ideal_equal(&ideal(&r, &["X"]), &ideal(&r, &["Y"])).unwrap());
    }

    #[test]
    fn generator_level_constructions() {
        let r = ring();
        let xy = ideal(&r, &["X", "Y"]);
        let sq = power(&xy, 2);
        assert!(ideal_equal(&sq, &ideal(&r, &["X^2", "X*Y", "Y^2"])).unwrap());
        assert_eq!(sq.gens().len(), 3);

        let with_zero = sum(&xy, &Ideal::zero(&r)).unwrap();
        assert_eq!(with_zero.gens(), xy.gens());

        let prod = product(&ideal(&r, &["X"]), &ideal(&r, &["Y"])).unwrap();
        assert!(ideal_equal(&prod, &ideal(&r, &["X*Y"])).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring();
        let a = intersect(&ideal(&r, &["X"]), &ideal(&r, &["Y"])).unwrap();
        assert!(ideal_equal(&a, &ideal(&r, &["X*Y"])).unwrap());

        let b = intersect(&ideal(&r, &["Y", "Z"]), &ideal(&r, &["Y", "X^2"])).unwrap();
        assert!(ideal_equal(&b, &ideal(&r, &["Y", "X^2*Z"])).unwrap());

        let c = intersect(
            &ideal(&r, &["X^2", "X*Y", "Y^2", "Y*Z"]),
            &ideal(&r, &["Y", "Z"]),
        )
        .unwrap();
        assert!(ideal_equal(&c, &ideal(&r, &["X*Y", "Y^2", "Y*Z", "X^2*Z"])).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let r = ring();
        let q = quotient(&ideal(&r, &["X*Y"]), &ideal(&r, &["X"])).unwrap();
        assert!(ideal_equal(&q, &ideal(&r, &["Y"])).unwrap());

        let q2 = quotient(&ideal(&r, &["X^2", "X*Y"]), &ideal(&r, &["X"])).unwrap();
        assert!(ideal_equal(&q2, &ideal(&r, &["X", "Y"])).unwrap());

        let unit = quotient(&ideal(&r, &["X"]), &Ideal::zero(&r)).unwrap();
        assert!(ideal_equal(&unit, &Ideal::unit(&r)).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = ring();
        let (sat, exp) = saturate(&ideal(&r, &["X^2*Y"]), &ideal(&r, &["Y"])).unwrap();
        assert!(ideal_equal(&sat, &ideal(&r, &["X^2"])).unwrap());
        assert_eq!(exp, 1);

        // Saturation is idempotent.
        let (sat2, exp2) = saturate(&sat, &ideal(&r, &["Y"])).unwrap();
        assert!(ideal_equal(&sat2, &sat).unwrap());
        assert_eq!(exp2, 0);
    }

    #[test]
    fn elimination_examples() {
        let r = ring();
        let tc = twisted_cubic(&r);
        // Projecting from the coordinate point on the curve gives a conic.
        let no_w = eliminate(&tc, &["W"]).unwrap();
        assert!(ideal_equal(&no_w, &ideal(&r, &["X*Z - Y^2"])).unwrap());
        // Projecting from a point off the curve gives a plane cubic.
        let no_y = eliminate(&tc, &["Y"]).unwrap();
        assert!(ideal_equal(&no_y, &ideal(&r, &["Z^3 - X*W^2"])).unwrap());

        let unchanged = eliminate(&tc, &[]).unwrap();
        assert_eq!(unchanged.gens(), tc.gens());

        assert_eq!(
            eliminate(&tc, &["Q"]),
            Err(IdealError::UnknownVariable { name: "Q".into() })
        );
    }

    #[test]
    fn point_ideals_are_deterministic() {
        let r = ring();
        let p = [
            Rat::zero(),
            Rat::zero(),
            Rat::from_int(-1),
            Rat::from_int(1),
        ];
        let m = point_ideal(&r, &p).unwrap();
        let strings: Vec<String> = m.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(strings, vec!["X", "Y", "Z + W"]);
        assert!(point_ideal(&r, &vec![Rat::zero(); 4]).is_err());
        assert!(point_ideal(&r, &[Rat::one()]).is_err());
    }

    #[test]
    fn twisted_cubic_has_no_component_at_a_curve_point() {
        let r = ring();
        let tc = twisted_cubic(&r);
        let p = [Rat::one(), Rat::one(), Rat::one(), Rat::one()];
        assert!(!point_component_at(&tc, &p).unwrap());
    }
}
