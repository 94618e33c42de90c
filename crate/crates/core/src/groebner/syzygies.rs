use super::budget::Budget;
use super::element::ModuleElement;
use super::engine::buchberger;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Generators of the first syzygy module of a list of module elements.
#[derive(Clone, Debug)]
pub struct SyzygyBasis {
    gens: Vec<ModuleElement>,
    relations: Vec<ModuleElement>,
}

impl SyzygyBasis {
    pub fn relations(&self) -> &[ModuleElement] {
        &self.relations
    }

    pub fn into_relations(self) -> Vec<ModuleElement> {
        self.relations
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    /// Every relation contracts to zero against the generators.
    pub fn is_sound(&self) -> bool {
        self.relations.iter().all(|r| r.combine(&self.gens).is_zero())
    }
}

/// Syzygies of `gens ⊂ Oʳ`.
///
/// Each `gᵢ` is extended to `(gᵢ | eᵢ) ∈ Oʳ⁺ᵐ` and a Gröbner basis is
/// computed for a position-over-term order in which the first `r` positions
/// dominate; the basis elements without a component in those positions
/// generate the syzygy module.
pub fn syzygies(gens: &[ModuleElement], budget: &Budget) -> Result<SyzygyBasis> {
    syzygies_graded(gens, None, budget)
}

/// As [`syzygies`], with a grading `(variable weights, component shifts)`
/// used for the weighted order and the sugar of the augmented elements.
pub fn syzygies_graded(
    gens: &[ModuleElement],
    grading: Option<(&[i64], &[i64])>,
    budget: &Budget,
) -> Result<SyzygyBasis> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("syzygies of an empty list".into()))?;
    let (r, n) = (first.rank(), first.nvars());
    let m = gens.len();
    let weights: Vec<i64> = match grading {
        Some((w, _)) => w.to_vec(),
        None => vec![1; n],
    };
    let base_shifts: Vec<i64> = match grading {
        Some((_, s)) => s.to_vec(),
        None => vec![0; r],
    };
    let mut shifts = base_shifts.clone();
    for g in gens {
        let d = g
            .components()
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                let s = base_shifts[i];
                p.weighted_degrees(&weights).into_iter().map(move |d| d + s)
            })
            .max()
            .unwrap_or(0);
        shifts.push(d);
    }
    let order = MonomialOrder::weighted(weights).with_shifts(shifts);
    let aug: Vec<ModuleElement> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut c = g.components().to_vec();
            c.extend(ModuleElement::unit(m, n, i).into_components());
            ModuleElement::new(c)
        })
        .collect();
    let gb = buchberger(&aug, &order, budget)?;
    let relations = gb
        .leading_terms()
        .into_iter()
        .zip(gb.generators())
        .filter(|((pos, _), _)| *pos >= r)
        .map(|(_, g)| ModuleElement::new(g.into_components().split_off(r)))
        .collect();
    Ok(SyzygyBasis {
        gens: gens.to_vec(),
        relations,
    })
}

/// Syzygies of polynomials viewed as elements of `O¹`.
pub fn of_polynomials(gens: &[Polynomial], budget: &Budget) -> Result<SyzygyBasis> {
    let v: Vec<ModuleElement> = gens.iter().cloned().map(ModuleElement::from_poly).collect();
    syzygies(&v, budget)
}

/// Graded syzygies of polynomials for positive variable weights.
pub fn of_polynomials_graded(gens: &[Polynomial], weights: &[i64], budget: &Budget) -> Result<SyzygyBasis> {
    let v: Vec<ModuleElement> = gens.iter().cloned().map(ModuleElement::from_poly).collect();
    syzygies_graded(&v, Some((weights, &[0])), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn koszul_relation_of_variables() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let s = of_polynomials(&[r.parse("x").unwrap(), r.parse("y").unwrap()], &Budget::unlimited()).unwrap();
        assert!(s.is_sound());
        assert_eq!(s.relations().len(), 1);
        let rel = &s.relations()[0];
        let expect = ModuleElement::new(vec![r.parse("y").unwrap(), r.parse("-x").unwrap()]);
        assert!(rel == &expect || rel == &expect.scale(&crate::poly::rat(-1)));
    }

    #[test]
    fn relations_for_xy() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let gens = [r.parse("x*y").unwrap(), r.parse("y").unwrap(), r.parse("x").unwrap()];
        let s = of_polynomials(&gens, &Budget::unlimited()).unwrap();
        assert!(s.is_sound());
        // The expected relations lie in the module spanned by the output.
        let gb = buchberger(s.relations(), &MonomialOrder::degrevlex(), &Budget::unlimited()).unwrap();
        for want in [["-1", "x", "0"], ["0", "x", "-y"]] {
            let v = ModuleElement::new(want.iter().map(|t| r.parse(t).unwrap()).collect());
            assert!(gb.contains(&v), "{want:?}");
        }
    }

    #[test]
    fn zero_generator_gives_unit_relation() {
        let r = Ring::new(&["x"]).unwrap();
        let s = of_polynomials(&[r.parse("x").unwrap(), Polynomial::zero(1)], &Budget::unlimited()).unwrap();
        assert!(s
            .relations()
            .iter()
            .any(|v| v == &ModuleElement::unit(2, 1, 1)));
    }
}
