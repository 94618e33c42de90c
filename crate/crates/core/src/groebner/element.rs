use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};

/// Element of a free module `Oᵐ`, stored as its `m` components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "module elements need at least one component");
        let n = components[0].nvars();
        assert!(components.iter().all(|p| p.nvars() == n), "ring mismatch");
        ModuleElement { components }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        ModuleElement {
            components: vec![Polynomial::zero(nvars); rank],
        }
    }

    /// The basis vector `eᵢ`.
    pub fn unit(rank: usize, nvars: usize, i: usize) -> Self {
        let mut e = Self::zero(rank, nvars);
        e.components[i] = Polynomial::one(nvars);
        e
    }

    pub fn from_poly(p: Polynomial) -> Self {
        ModuleElement { components: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank());
        ModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank());
        ModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(|q| q * p).collect(),
        }
    }

    /// `Σ cᵢ·gᵢ`.
    pub fn contract(&self, gens: &[Polynomial]) -> Polynomial {
        assert_eq!(self.rank(), gens.len());
        let mut acc = Polynomial::zero(self.nvars());
        for (c, g) in self.components.iter().zip(gens) {
            if !c.is_zero() {
                acc = &acc + &(c * g);
            }
        }
        acc
    }

    /// `Σ cᵢ·vᵢ` for module elements `vᵢ`.
    pub fn combine(&self, gens: &[ModuleElement]) -> ModuleElement {
        assert_eq!(self.rank(), gens.len());
        let mut acc = ModuleElement::zero(gens[0].rank(), self.nvars());
        for (c, g) in self.components.iter().zip(gens) {
            if !c.is_zero() {
                acc = acc.add(&g.mul_poly(c));
            }
        }
        acc
    }

    /// Common weighted degree `wt(α) + shifts[i]` of all terms, if any.
    pub fn weighted_degree(&self, weights: &[i64], shifts: &[i64]) -> Option<Option<i64>> {
        let mut deg = None;
        for (i, p) in self.components.iter().enumerate() {
            for d in p.weighted_degrees(weights) {
                let d = d + shifts[i];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        Some(deg)
    }
}

/// One term `c·x^α·e_pos` with its cached shifted weighted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: u32,
    pub deg: i64,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Internal module polynomial: terms in descending order, variables already
/// permuted into the order's internal coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModPoly {
    pub terms: Vec<Term>,
}

#[inline]
pub(crate) fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

impl ModPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn from_element(v: &ModuleElement, order: &MonomialOrder) -> Self {
        let nvars = v.nvars();
        let map = order.to_internal_map(nvars);
        let w = order.internal_weights(nvars);
        let mut terms = Vec::new();
        for (pos, p) in v.components().iter().enumerate() {
            for (m, c) in p.terms() {
                let mono = m.remap(&map, nvars);
                let deg = mono.weighted_degree(&w) + order.shift(pos);
                terms.push(Term {
                    pos: pos as u32,
                    deg,
                    mono,
                    coeff: c.clone(),
                });
            }
        }
        terms.sort_by(|a, b| cmp(order, b, a));
        ModPoly { terms }
    }

    pub fn to_element(&self, rank: usize, nvars: usize, order: &MonomialOrder) -> ModuleElement {
        let map = order.to_external_map(nvars);
        let mut comps = vec![Polynomial::zero(nvars); rank];
        for t in &self.terms {
            comps[t.pos as usize].add_term(t.mono.remap(&map, nvars), t.coeff.clone());
        }
        ModuleElement::new(comps)
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let inv = self.terms[0].coeff.recip();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff *= &inv;
        }
    }

    /// `self − c·x^t·g`, skipping the first `skip_self` and `skip_g` terms,
    /// which the caller guarantees cancel.
    #[allow(clippy::too_many_arguments)]
    pub fn sub_mul(
        &self,
        skip_self: usize,
        c: &Rational,
        t: &Monomial,
        tdeg: i64,
        g: &ModPoly,
        skip_g: usize,
        order: &MonomialOrder,
    ) -> ModPoly {
        let a = &self.terms[skip_self..];
        let b = &g.terms[skip_g..];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Term> = None;
        while i < a.len() || j < b.len() {
            if pending.is_none() && j < b.len() {
                let bt = &b[j];
                pending = Some(Term {
                    pos: bt.pos,
                    deg: bt.deg + tdeg,
                    mono: bt.mono.mul(t),
                    coeff: -(c * &bt.coeff),
                });
            }
            match (a.get(i), pending.as_ref()) {
                (Some(at), Some(pt)) => match cmp(order, at, pt) {
                    Ordering::Greater => {
                        out.push(at.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let mut pt = pending.take().unwrap();
                        pt.coeff += &at.coeff;
                        if !pt.coeff.is_zero() {
                            out.push(pt);
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some(at), None) => {
                    out.push(at.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        ModPoly { terms: out }
    }

    /// `x^t·self` scaled by `c`.
    pub fn mul_term(&self, c: &Rational, t: &Monomial, tdeg: i64) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|s| Term {
                    pos: s.pos,
                    deg: s.deg + tdeg,
                    mono: s.mono.mul(t),
                    coeff: c * &s.coeff,
                })
                .collect(),
        }
    }
}

#[inline]
pub(crate) fn cmp(order: &MonomialOrder, a: &Term, b: &Term) -> Ordering {
    order.cmp_terms((a.pos, a.deg, &a.mono), (b.pos, b.deg, &b.mono))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn conversion_round_trip_with_permutation() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let v = ModuleElement::new(vec![
            r.parse("x^2 - y*z").unwrap(),
            r.parse("3*z + 1").unwrap(),
        ]);
        let o = MonomialOrder::lex().with_perm(vec![2, 0, 1]);
        let m = ModPoly::from_element(&v, &o);
        assert_eq!(m.to_element(2, 3, &o), v);
        // z is the largest variable, position 0 dominates.
        assert_eq!(m.lead().pos, 0);
        assert_eq!(m.lead().mono.exponents(), &[1, 0, 1]);
    }

    #[test]
    fn contraction() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let rel = ModuleElement::new(vec![r.parse("y").unwrap(), r.parse("-x").unwrap()]);
        let gens = [r.parse("x").unwrap(), r.parse("y").unwrap()];
        assert!(rel.contract(&gens).is_zero());
    }
}
