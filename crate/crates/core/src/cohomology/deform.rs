use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, RatMatrix};
use crate::logder::{lie_bracket, monomial_fields, saito_matrix, SaitoBasis, VectorField};
use crate::poly::{monomials_of_weight, poly_det, Monomial, Polynomial, Rational};

/// `f′` with `det(δᵢ + ε·δ̃ᵢ) = u·(f + ε·f′)`: the sum of the determinants
/// with one column replaced by its lift, divided by the constant unit `u`.
pub fn deformation_equation(lifts: &[VectorField], saito: &SaitoBasis) -> Result<Polynomial> {
    let n = saito.len();
    if lifts.len() != n {
        return Err(Error::Shape(format!("{} lifts for a basis of size {n}", lifts.len())));
    }
    let u = saito.unit();
    if !u.is_constant() {
        return Err(Error::Precondition("the Saito unit is not constant".into()));
    }
    let mut total = Polynomial::zero(saito.nvars());
    for (i, l) in lifts.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let mut cols = saito.fields().to_vec();
        cols[i] = l.clone();
        total = total + poly_det(&saito_matrix(&cols));
    }
    Ok(total.scale(&(Rational::from_integer(1.into()) / u.constant_term())))
}

/// Lifts of `d⁰σ`: `δᵢ ↦ [σ, δᵢ]`.
pub fn coboundary_lifts(sigma: &VectorField, saito: &SaitoBasis) -> Vec<VectorField> {
    saito.fields().iter().map(|d| lie_bracket(sigma, d)).collect()
}

/// The degree-`k` piece of the Tjurina ideal `(f, ∂₁f, …, ∂ₙf)`, with the
/// generators `x^β∂ᵢ` (as fields) and `f` behind each spanning vector.
#[derive(Clone, Debug)]
pub struct TjurinaPiece {
    pub degree: i64,
    pub monomials: Vec<Monomial>,
    fields: Vec<(usize, Monomial)>,
    generators: Vec<Vec<Rational>>,
    span: Echelon,
}

impl TjurinaPiece {
    pub fn new(f: &Polynomial, weights: &[i64], k: i64) -> Self {
        let monomials = monomials_of_weight(weights, k);
        let fields = monomial_fields(weights, 0);
        let mut piece = TjurinaPiece {
            degree: k,
            monomials,
            fields,
            generators: Vec::new(),
            span: Echelon::new(),
        };
        let mut gens: Vec<Vec<Rational>> = Vec::new();
        for (i, m) in &piece.fields {
            let img = VectorField::monomial(m.clone(), *i).apply(f);
            gens.push(piece.vector(&img).expect("homogeneous image"));
        }
        gens.push(piece.vector(f).expect("f has degree k"));
        for g in &gens {
            piece.span.insert(g);
        }
        piece.generators = gens;
        piece
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Coefficients over the degree-`k` monomials, or `None` when `p` is not
    /// homogeneous of degree `k`.
    pub fn vector(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            let i = self.monomials.binary_search(m).ok()?;
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.vector(p).is_some_and(|v| self.span.contains(&v))
    }

    /// `(σ, s)` with `σ(f) + s·f = p`, `σ` of weight zero.
    pub fn witness(&self, p: &Polynomial) -> Option<(VectorField, Rational)> {
        let v = self.vector(p)?;
        let a = RatMatrix::from_columns(self.monomials.len(), &self.generators);
        let x = a.solve(&v)?;
        let n = self.monomials.first().map(Monomial::nvars).unwrap_or(0);
        let nf = self.fields.len();
        let sigma = VectorField::from_coordinates(n, &x[..nf], &self.fields);
        Some((sigma, x[nf].clone()))
    }
}

/// Order used when preferring monomial representatives: smallest largest
/// exponent first, then degrevlex ascending.
fn candidate_key(m: &Monomial) -> (u32, Monomial) {
    (m.exponents().iter().copied().max().unwrap_or(0), m.clone())
}

/// A representative of a deformation class.
#[derive(Clone, Debug, PartialEq)]
pub struct Deformation {
    pub lifts: Vec<VectorField>,
    pub equation: Polynomial,
}

/// Rewrites a basis of classes so that as many deformed equations as possible
/// are single monomials, modifying lifts by coboundaries and by constant
/// multiples of the basis. `reduce` maps a lift to a shorter representative of
/// the same class.
pub fn normalize_representatives(
    reps: &[Vec<VectorField>],
    saito: &SaitoBasis,
    weights: &[i64],
    k: i64,
    reduce: &dyn Fn(&VectorField) -> Result<VectorField>,
) -> Result<Vec<Deformation>> {
    let f = saito.divisor();
    let tj = TjurinaPiece::new(f, weights, k);
    let mut eqs = Vec::with_capacity(reps.len());
    for r in reps {
        let e = deformation_equation(r, saito)?;
        tj.vector(&e)
            .ok_or_else(|| Error::InternalInconsistency("deformed equation is not of degree k".into()))?;
        eqs.push(e);
    }
    let mut all = tj.span.clone();
    for e in &eqs {
        all.insert(&tj.vector(e).unwrap());
    }
    let mut chosen = tj.span.clone();
    let mut targets: Vec<Polynomial> = Vec::new();
    let mut candidates = tj.monomials.clone();
    candidates.sort_by_key(candidate_key);
    for m in candidates {
        if targets.len() == reps.len() {
            break;
        }
        let p = Polynomial::monomial(m);
        let v = tj.vector(&p).unwrap();
        if all.contains(&v) && chosen.insert(&v) {
            targets.push(p);
        }
    }
    for e in &eqs {
        if targets.len() == reps.len() {
            break;
        }
        if chosen.insert(&tj.vector(e).unwrap()) {
            targets.push(e.clone());
        }
    }
    if targets.len() != reps.len() {
        return Err(Error::InternalInconsistency("deformed equations are dependent modulo the Tjurina ideal".into()));
    }

    let mut cols: Vec<Vec<Rational>> = eqs.iter().map(|e| tj.vector(e).unwrap()).collect();
    cols.extend(tj.generators.iter().cloned());
    let system = RatMatrix::from_columns(tj.monomials.len(), &cols);
    let n = saito.nvars();
    let mut out = Vec::with_capacity(targets.len());
    for t in targets {
        let x = system
            .solve(&tj.vector(&t).unwrap())
            .ok_or_else(|| Error::InternalInconsistency("target outside the span".into()))?;
        let mut lifts = vec![VectorField::zero(n); saito.len()];
        for (c, r) in x.iter().zip(reps) {
            if !c.is_zero() {
                for (l, ri) in lifts.iter_mut().zip(r) {
                    *l = l.add(&ri.scale(c));
                }
            }
        }
        // Σ cᵣ f′ᵣ = t − σ(f) − s·f, and f′(d⁰σ) = σ(f) − div(σ)·f.
        let rest = t.clone() - deformation_equation(&lifts, saito)?;
        if !rest.is_zero() {
            let (sigma, _) = tj
                .witness(&rest)
                .ok_or_else(|| Error::InternalInconsistency("difference outside the Tjurina ideal".into()))?;
            for (l, c) in lifts.iter_mut().zip(coboundary_lifts(&sigma, saito)) {
                *l = l.add(&c);
            }
        }
        let mut lifts: Vec<VectorField> = lifts.iter().map(reduce).collect::<Result<_>>()?;
        let rest = deformation_equation(&lifts, saito)? - t.clone();
        if !rest.is_zero() {
            let c = rest
                .div_exact(f)
                .filter(Polynomial::is_constant)
                .ok_or_else(|| Error::InternalInconsistency("deformed equation off by a non-constant".into()))?;
            lifts[0] = lifts[0].sub(&saito.field(0).scale(&c.constant_term()));
        }
        let equation = deformation_equation(&lifts, saito)?;
        if equation != t {
            return Err(Error::InternalInconsistency("normalized equation mismatch".into()));
        }
        out.push(Deformation { lifts, equation });
    }
    Ok(out)
}
