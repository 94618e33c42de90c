use num_traits::One;

use super::budget::Budget;
use super::element::{cmp, divmask, ModPoly, ModuleElement, Term};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};

/// Reduced Gröbner basis of a submodule of `Oᵐ` (an ideal when `m = 1`).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    rank: usize,
    nvars: usize,
    elems: Vec<ModPoly>,
    masks: Vec<u64>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    deg: i64,
    sugar: i64,
    coprime: bool,
}

struct Reducers<'a> {
    order: &'a MonomialOrder,
    weights: Vec<i64>,
    elems: Vec<ModPoly>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl Reducers<'_> {
    fn find(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        let mask = divmask(&t.mono);
        (0..self.elems.len()).find(|&k| {
            self.active[k]
                && Some(k) != skip
                && self.masks[k] & !mask == 0
                && self.elems[k].lead().pos == t.pos
                && self.elems[k].lead().mono.divides(&t.mono)
        })
    }

    /// Full reduction; every reducer is monic.
    fn reduce(&self, mut p: ModPoly, skip: Option<usize>, lead_only: bool, budget: &Budget) -> Result<ModPoly> {
        let mut rem: Vec<Term> = Vec::new();
        let mut start = 0;
        while start < p.terms.len() {
            let t = &p.terms[start];
            match self.find(t, skip) {
                Some(k) => {
                    budget.tick(1)?;
                    let g = &self.elems[k];
                    let q = g.lead().mono.quotient_of(&t.mono).unwrap();
                    let qdeg = q.weighted_degree(&self.weights);
                    let c = t.coeff.clone();
                    p = p.sub_mul(start + 1, &c, &q, qdeg, g, 1, self.order);
                    start = 0;
                }
                None => {
                    if lead_only {
                        rem.extend(p.terms.drain(start..));
                        return Ok(ModPoly { terms: rem });
                    }
                    rem.push(p.terms[start].clone());
                    start += 1;
                }
            }
        }
        Ok(ModPoly { terms: rem })
    }
}

fn sugar_of(p: &ModPoly) -> i64 {
    p.terms.iter().map(|t| t.deg).max().unwrap_or(0)
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// Pairs are selected by the sugar strategy with ties broken by the order of
/// the lcm and then by generator indices, so the run is deterministic.
pub fn buchberger(gens: &[ModuleElement], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("Gröbner basis of an empty generator list".into()))?;
    let (rank, nvars) = (first.rank(), first.nvars());
    if gens.iter().any(|g| g.rank() != rank || g.nvars() != nvars) {
        return Err(Error::Shape("generators live in different free modules".into()));
    }
    let weights = order.internal_weights(nvars);
    let mut red = Reducers {
        order,
        weights: weights.clone(),
        elems: Vec::new(),
        masks: Vec::new(),
        active: Vec::new(),
    };
    let mut sugars: Vec<i64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<ModPoly> = gens
        .iter()
        .map(|g| ModPoly::from_element(g, order))
        .filter(|p| !p.is_zero())
        .collect();
    // Small leads first keeps intermediate expressions small.
    input.sort_by(|a, b| cmp(order, a.lead(), b.lead()));

    for p in input {
        let s = sugar_of(&p);
        let mut h = red.reduce(p, None, false, budget)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert(&mut red, &mut sugars, &mut pairs, h, s, rank, budget)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.cmp_terms((p.pos, p.deg, &p.lcm), (q.pos, q.deg, &q.lcm)))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        budget.tick(1)?;
        let s = spoly(&red, &pair, &weights);
        let h = red.reduce(s, None, false, budget)?;
        if h.is_zero() {
            continue;
        }
        let mut h = h;
        h.make_monic();
        insert(&mut red, &mut sugars, &mut pairs, h, pair.sugar, rank, budget)?;
    }

    // Interreduce the minimal basis.
    let keep: Vec<usize> = (0..red.elems.len()).filter(|&k| red.active[k]).collect();
    for &k in &keep {
        let p = red.elems[k].clone();
        let lead = p.terms[0].clone();
        let tail = ModPoly {
            terms: p.terms[1..].to_vec(),
        };
        let mut r = red.reduce(tail, Some(k), false, budget)?;
        r.terms.insert(0, lead);
        red.elems[k] = r;
    }
    let mut elems: Vec<ModPoly> = keep.iter().map(|&k| red.elems[k].clone()).collect();
    elems.sort_by(|a, b| cmp(order, a.lead(), b.lead()));
    let masks = elems.iter().map(|e| divmask(&e.lead().mono)).collect();
    Ok(GroebnerBasis {
        order: order.clone(),
        rank,
        nvars,
        elems,
        masks,
    })
}

fn spoly(red: &Reducers<'_>, pair: &Pair, weights: &[i64]) -> ModPoly {
    let (gi, gj) = (&red.elems[pair.i], &red.elems[pair.j]);
    let ti = gi.lead().mono.quotient_of(&pair.lcm).unwrap();
    let tj = gj.lead().mono.quotient_of(&pair.lcm).unwrap();
    let one = Rational::one();
    let a = gi.mul_term(&one, &ti, ti.weighted_degree(weights));
    a.sub_mul(1, &one, &tj, tj.weighted_degree(weights), gj, 1, red.order)
}

/// Gebauer–Möller update for a new basis element.
fn insert(
    red: &mut Reducers<'_>,
    sugars: &mut Vec<i64>,
    pairs: &mut Vec<Pair>,
    h: ModPoly,
    sugar: i64,
    rank: usize,
    budget: &Budget,
) -> Result<()> {
    budget.check()?;
    let hk = red.elems.len();
    let (hpos, hmono) = (h.lead().pos, h.lead().mono.clone());
    let hdeg = h.lead().deg;
    let w = red.weights.clone();

    let mut cands: Vec<Pair> = Vec::new();
    for i in 0..hk {
        if !red.active[i] || red.elems[i].lead().pos != hpos {
            continue;
        }
        let li = &red.elems[i].lead();
        let lcm = li.mono.lcm(&hmono);
        let deg = hdeg + hmono.quotient_of(&lcm).unwrap().weighted_degree(&w);
        let si = sugars[i] + li.mono.quotient_of(&lcm).unwrap().weighted_degree(&w);
        let sh = sugar + hmono.quotient_of(&lcm).unwrap().weighted_degree(&w);
        cands.push(Pair {
            i,
            j: hk,
            pos: hpos,
            coprime: rank == 1 && li.mono.is_coprime(&hmono),
            lcm,
            deg,
            sugar: si.max(sh),
        });
    }

    // Criteria M and F, with the product criterion in the ideal case.
    let mut kept: Vec<Pair> = Vec::new();
    let mut rest = cands;
    rest.reverse();
    while let Some(p) = rest.pop() {
        let dominated = rest.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if p.coprime || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !p.coprime);

    // Criterion B on old pairs.
    pairs.retain(|p| {
        if p.pos != hpos || !hmono.divides(&p.lcm) {
            return true;
        }
        let lih = red.elems[p.i].lead().mono.lcm(&hmono);
        let ljh = red.elems[p.j].lead().mono.lcm(&hmono);
        lih == p.lcm || ljh == p.lcm
    });
    pairs.extend(kept);

    for i in 0..hk {
        if red.active[i] && red.elems[i].lead().pos == hpos && hmono.divides(&red.elems[i].lead().mono) {
            red.active[i] = false;
        }
    }
    red.masks.push(divmask(&hmono));
    red.elems.push(h);
    red.active.push(true);
    sugars.push(sugar);
    Ok(())
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    /// Basis elements in ascending order of their leading terms.
    pub fn generators(&self) -> Vec<ModuleElement> {
        self.elems
            .iter()
            .map(|e| e.to_element(self.rank, self.nvars, &self.order))
            .collect()
    }

    /// Generators of an ideal basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1);
        self.generators()
            .into_iter()
            .map(|g| g.into_components().pop().unwrap())
            .collect()
    }

    /// Leading `(position, monomial)` pairs in external variables.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        let map = self.order.to_external_map(self.nvars);
        self.elems
            .iter()
            .map(|e| (e.lead().pos as usize, e.lead().mono.remap(&map, self.nvars)))
            .collect()
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers {
            order: &self.order,
            weights: self.order.internal_weights(self.nvars),
            elems: self.elems.clone(),
            masks: self.masks.clone(),
            active: vec![true; self.elems.len()],
        }
    }

    /// Remainder of `v` on division by the basis.
    pub fn normal_form(&self, v: &ModuleElement) -> ModuleElement {
        self.normal_form_budgeted(v, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn normal_form_budgeted(&self, v: &ModuleElement, budget: &Budget) -> Result<ModuleElement> {
        assert_eq!(v.rank(), self.rank, "module rank mismatch");
        let p = ModPoly::from_element(v, &self.order);
        let r = self.reducers().reduce(p, None, false, budget)?;
        Ok(r.to_element(self.rank, self.nvars, &self.order))
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, 1);
        self.normal_form(&ModuleElement::from_poly(p.clone()))
            .into_components()
            .pop()
            .unwrap()
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.reduce_poly(p).is_zero()
    }

    /// `x^α·e_pos` is not divisible by any leading term.
    pub fn is_standard(&self, pos: usize, m: &Monomial) -> bool {
        let map = self.order.to_internal_map(self.nvars);
        let mi = m.remap(&map, self.nvars);
        let mask = divmask(&mi);
        !self.elems.iter().zip(&self.masks).any(|(e, &k)| {
            k & !mask == 0 && e.lead().pos as usize == pos && e.lead().mono.divides(&mi)
        })
    }

    /// The basis generates the whole free module.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|i| !self.is_standard(i, &Monomial::one(self.nvars)))
    }

    /// Every S-pair of basis elements with a common leading position reduces
    /// to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let red = self.reducers();
        let w = &red.weights;
        for j in 0..self.elems.len() {
            for i in 0..j {
                let (li, lj) = (self.elems[i].lead(), self.elems[j].lead());
                if li.pos != lj.pos {
                    continue;
                }
                let lcm = li.mono.lcm(&lj.mono);
                let pair = Pair {
                    i,
                    j,
                    pos: li.pos,
                    deg: 0,
                    sugar: 0,
                    coprime: false,
                    lcm,
                };
                let s = spoly(&red, &pair, w);
                match red.reduce(s, None, false, &Budget::unlimited()) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Remainder of `v` on division by `gb`.
pub fn normal_form(v: &ModuleElement, gb: &GroebnerBasis) -> ModuleElement {
    gb.normal_form(v)
}

/// Reduced Gröbner basis of an ideal.
pub fn ideal_basis(gens: &[Polynomial], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    let v: Vec<ModuleElement> = gens.iter().cloned().map(ModuleElement::from_poly).collect();
    buchberger(&v, order, budget)
}
