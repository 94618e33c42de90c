use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{Budget, GradedQuotient};
use crate::linalg::{Echelon, RatMatrix};
use crate::logder::{lie_bracket, SaitoBasis, StructureConstants, VectorField};
use crate::poly::{Monomial, Rational};

/// Largest absolute weight of a graded piece built by default.
pub const DEFAULT_MAX_WEIGHT: i64 = 64;

/// The graded piece `(Der/Der(-log D))_w` with its monomial basis.
#[derive(Clone, Debug)]
pub struct QuotientSlice {
    pub weight: i64,
    pub basis: Vec<(usize, Monomial)>,
}

impl QuotientSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Weight-zero slice `C⁰ → C¹ → C²` of the complex
/// `Hom(⋀ᵖ Der(-log D), Der/Der(-log D))`.
#[derive(Clone, Debug)]
pub struct CohomologySlice {
    saito: SaitoBasis,
    b: StructureConstants,
    weights: Vec<i64>,
    field_weights: Vec<i64>,
    quotient: GradedQuotient,
    c0: QuotientSlice,
    c1: Vec<QuotientSlice>,
    c2: Vec<((usize, usize), QuotientSlice)>,
    d0: RatMatrix,
    d1: RatMatrix,
}

impl CohomologySlice {
    /// Builds the slice. `d⁰σ(δᵢ) = [σ, δᵢ]` and
    /// `d¹ψ(δᵢ∧δⱼ) = Σₖ b^i_{jk} ψ(δₖ) − [δᵢ, ψ(δⱼ)] + [δⱼ, ψ(δᵢ)]`.
    pub fn build(
        saito: &SaitoBasis,
        b: &StructureConstants,
        weights: &[i64],
        max_weight: i64,
        budget: &Budget,
    ) -> Result<Self> {
        if weights.iter().any(|&a| a < 1) {
            return Err(Error::NonPositiveWeights);
        }
        if saito.divisor().weighted_degrees(weights).len() != 1 {
            return Err(Error::NotWeightedHomogeneous);
        }
        let field_weights = saito.weights(weights).ok_or(Error::NotWeightedHomogeneous)?;
        let n = saito.len();
        for i in 0..n {
            for j in i..n {
                let w = field_weights[i] + field_weights[j];
                if w.abs() > max_weight {
                    return Err(Error::SliceTooLarge(format!("weight {w} exceeds the bound {max_weight}")));
                }
            }
        }
        let shifts: Vec<i64> = weights.iter().map(|a| -a).collect();
        let sub: Vec<_> = saito.fields().iter().map(VectorField::to_element).collect();
        let quotient = GradedQuotient::new(&sub, weights, &shifts, None, budget)?;
        let piece = |w: i64| QuotientSlice {
            weight: w,
            basis: quotient.basis(w),
        };
        let c0 = piece(0);
        let c1: Vec<QuotientSlice> = field_weights.iter().map(|&w| piece(w)).collect();
        let mut c2 = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                c2.push(((i, j), piece(field_weights[i] + field_weights[j])));
            }
        }
        let mut slice = CohomologySlice {
            saito: saito.clone(),
            b: b.clone(),
            weights: weights.to_vec(),
            field_weights,
            quotient,
            c0,
            c1,
            c2,
            d0: RatMatrix::zeros(0, 0),
            d1: RatMatrix::zeros(0, 0),
        };
        slice.d0 = slice.assemble_d0(budget)?;
        slice.d1 = slice.assemble_d1(budget)?;
        if !slice.d1.mul(&slice.d0).is_zero() {
            return Err(Error::InternalInconsistency("d1 * d0 is not zero".into()));
        }
        Ok(slice)
    }

    fn n(&self) -> usize {
        self.saito.len()
    }

    fn nvars(&self) -> usize {
        self.saito.nvars()
    }

    pub fn saito(&self) -> &SaitoBasis {
        &self.saito
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn field_weights(&self) -> &[i64] {
        &self.field_weights
    }

    pub fn c0(&self) -> &QuotientSlice {
        &self.c0
    }

    pub fn c1(&self) -> &[QuotientSlice] {
        &self.c1
    }

    pub fn d0(&self) -> &RatMatrix {
        &self.d0
    }

    pub fn d1(&self) -> &RatMatrix {
        &self.d1
    }

    pub fn c1_dim(&self) -> usize {
        self.c1.iter().map(QuotientSlice::dim).sum()
    }

    pub fn c2_dim(&self) -> usize {
        self.c2.iter().map(|(_, s)| s.dim()).sum()
    }

    fn c1_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.n() + 1);
        let mut s = 0;
        for piece in &self.c1 {
            off.push(s);
            s += piece.dim();
        }
        off.push(s);
        off
    }

    fn coords(&self, v: &VectorField, piece: &QuotientSlice) -> Result<Vec<Rational>> {
        self.quotient.coordinates(&v.to_element(), &piece.basis)
    }

    fn assemble_d0(&self, budget: &Budget) -> Result<RatMatrix> {
        let off = self.c1_offsets();
        let mut d0 = RatMatrix::zeros(self.c1_dim(), self.c0.dim());
        for (col, (i, m)) in self.c0.basis.iter().enumerate() {
            budget.check()?;
            let sigma = VectorField::monomial(m.clone(), *i);
            for (k, piece) in self.c1.iter().enumerate() {
                let img = lie_bracket(&sigma, self.saito.field(k));
                for (r, c) in self.coords(&img, piece)?.into_iter().enumerate() {
                    d0.set(off[k] + r, col, c);
                }
            }
        }
        Ok(d0)
    }

    /// `d¹ψ` evaluated on `δᵢ∧δⱼ` for cochain values given as fields.
    fn d1_value(&self, psi: &[VectorField], i: usize, j: usize) -> VectorField {
        let mut v = VectorField::zero(self.nvars());
        for (k, p) in psi.iter().enumerate() {
            let c = self.b.get(i, j, k);
            if !c.is_zero() && !p.is_zero() {
                v = v.add(&p.mul_poly(c));
            }
        }
        v = v.sub(&lie_bracket(self.saito.field(i), &psi[j]));
        v.add(&lie_bracket(self.saito.field(j), &psi[i]))
    }

    fn assemble_d1(&self, budget: &Budget) -> Result<RatMatrix> {
        let n = self.n();
        let mut d1 = RatMatrix::zeros(self.c2_dim(), self.c1_dim());
        let mut col = 0;
        for (k, piece) in self.c1.iter().enumerate() {
            for (i, m) in &piece.basis {
                budget.check()?;
                let mut psi = vec![VectorField::zero(self.nvars()); n];
                psi[k] = VectorField::monomial(m.clone(), *i);
                let mut row = 0;
                for ((a, b), target) in &self.c2 {
                    if *a == k || *b == k || !self.b.get(*a, *b, k).is_zero() {
                        let img = self.d1_value(&psi, *a, *b);
                        for (r, c) in self.coords(&img, target)?.into_iter().enumerate() {
                            d1.set(row + r, col, c);
                        }
                    }
                    row += target.dim();
                }
                col += 1;
            }
        }
        Ok(d1)
    }

    pub fn rank_d0(&self) -> usize {
        self.d0.rank()
    }

    pub fn h0(&self) -> usize {
        self.c0.dim() - self.rank_d0()
    }

    pub fn h1(&self) -> usize {
        self.c1_dim() - self.d1.rank() - self.rank_d0()
    }

    /// Cocycle coordinate vectors completing the coboundaries to a basis of
    /// `ker d¹`.
    pub fn h1_basis(&self) -> Vec<Vec<Rational>> {
        let mut ech = Echelon::new();
        for c in 0..self.d0.cols() {
            ech.insert(&self.d0.column(c));
        }
        let mut out = Vec::new();
        for z in self.d1.nullspace() {
            if ech.insert(&z) {
                out.push(z);
            }
        }
        out
    }

    /// Lifts `ψ(δᵢ)` of a cochain given by coordinates.
    pub fn lifts(&self, coords: &[Rational]) -> Vec<VectorField> {
        let off = self.c1_offsets();
        self.c1
            .iter()
            .enumerate()
            .map(|(k, piece)| VectorField::from_coordinates(self.nvars(), &coords[off[k]..off[k + 1]], &piece.basis))
            .collect()
    }

    /// Coordinates of a cochain given by lifts of weights `wᵢ`.
    pub fn cochain(&self, lifts: &[VectorField]) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(self.c1_dim());
        for (l, piece) in lifts.iter().zip(&self.c1) {
            out.extend(self.coords(l, piece)?);
        }
        Ok(out)
    }

    pub fn is_cocycle(&self, coords: &[Rational]) -> bool {
        self.d1.mul_vec(coords).iter().all(Zero::is_zero)
    }

    /// Normal form of `v` modulo `Der(-log D)`.
    pub fn reduce(&self, v: &VectorField) -> Result<VectorField> {
        Ok(VectorField::from_element(&self.quotient.normal_form(&v.to_element())))
    }

    /// `σ` with `d⁰σ = ψ`, if any.
    pub fn is_coboundary(&self, coords: &[Rational]) -> Option<VectorField> {
        self.d0
            .solve(coords)
            .map(|x| VectorField::from_coordinates(self.nvars(), &x, &self.c0.basis))
    }

    /// `d⁰σ` for a weight-zero field `σ`, as lifts.
    pub fn coboundary_lifts(&self, sigma: &VectorField) -> Vec<VectorField> {
        self.saito.fields().iter().map(|d| lie_bracket(sigma, d)).collect()
    }
}
