use std::cmp::Ordering;

use crate::poly::{cmp_degrevlex, Monomial};

/// Term order on monomials of `ℚ[x₁,…,xₙ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Degrevlex,
    Lex,
    /// Weighted degree first, ties broken by degrevlex.
    WeightedDegrevlex(Vec<i64>),
}

/// How positions of a free module `Oᵐ` interact with the term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleConvention {
    /// Position over term; lower index is larger.
    Pot,
    /// Term (shifted degree, then term order) over position.
    Top,
}

/// Monomial order with an optional variable priority list and a module
/// convention with per-component degree shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: TermOrder,
    /// `perm[k]` is the variable that plays the role of the `k`-th largest.
    pub perm: Option<Vec<usize>>,
    pub module: ModuleConvention,
    pub shifts: Vec<i64>,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        Self::new(TermOrder::Degrevlex)
    }

    pub fn lex() -> Self {
        Self::new(TermOrder::Lex)
    }

    pub fn weighted(weights: Vec<i64>) -> Self {
        Self::new(TermOrder::WeightedDegrevlex(weights))
    }

    pub fn new(kind: TermOrder) -> Self {
        MonomialOrder {
            kind,
            perm: None,
            module: ModuleConvention::Pot,
            shifts: Vec::new(),
        }
    }

    pub fn with_perm(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    pub fn pot(mut self) -> Self {
        self.module = ModuleConvention::Pot;
        self
    }

    pub fn top(mut self, shifts: Vec<i64>) -> Self {
        self.module = ModuleConvention::Top;
        self.shifts = shifts;
        self
    }

    /// Component degree shifts, used by the sugar strategy under POT.
    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        self.shifts = shifts;
        self
    }

    pub(crate) fn shift(&self, pos: usize) -> i64 {
        self.shifts.get(pos).copied().unwrap_or(0)
    }

    /// Weights in internal (permuted) coordinates.
    pub(crate) fn internal_weights(&self, nvars: usize) -> Vec<i64> {
        let w = match &self.kind {
            TermOrder::WeightedDegrevlex(w) => w.clone(),
            _ => vec![1; nvars],
        };
        match &self.perm {
            Some(p) => p.iter().map(|&v| w[v]).collect(),
            None => w,
        }
    }

    /// Maps an external variable index to its internal slot.
    pub(crate) fn to_internal_map(&self, nvars: usize) -> Vec<usize> {
        let mut map: Vec<usize> = (0..nvars).collect();
        if let Some(p) = &self.perm {
            for (k, &v) in p.iter().enumerate() {
                map[v] = k;
            }
        }
        map
    }

    pub(crate) fn to_external_map(&self, nvars: usize) -> Vec<usize> {
        match &self.perm {
            Some(p) => p.clone(),
            None => (0..nvars).collect(),
        }
    }

    /// Compares two module terms given their cached shifted weighted degrees.
    #[inline]
    pub(crate) fn cmp_terms(&self, a: (u32, i64, &Monomial), b: (u32, i64, &Monomial)) -> Ordering {
        let pos = || b.0.cmp(&a.0);
        let term = || match self.kind {
            TermOrder::Lex => a.2.exponents().cmp(b.2.exponents()),
            TermOrder::Degrevlex => cmp_degrevlex(a.2.exponents(), b.2.exponents()),
            TermOrder::WeightedDegrevlex(_) => a
                .1
                .cmp(&b.1)
                .then_with(|| cmp_degrevlex(a.2.exponents(), b.2.exponents())),
        };
        match self.module {
            ModuleConvention::Pot => pos().then_with(term),
            ModuleConvention::Top => {
                let by_deg = match self.kind {
                    TermOrder::Lex => Ordering::Equal,
                    _ => a.1.cmp(&b.1),
                };
                by_deg.then_with(term).then_with(pos)
            }
        }
    }
}
