use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{syzygies, Budget};

/// Monic greatest common divisor.
///
/// The syzygy module of `(a, b)` is generated by `(b/g, −a/g)`, so `g` is
/// recovered from the first component of its single reduced generator.
pub fn gcd(a: &Polynomial, b: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(a.nvars()));
    }
    let syz = syzygies::of_polynomials(&[a.clone(), b.clone()], budget)?;
    let s1 = syz
        .relations()
        .iter()
        .map(|r| r.component(0))
        .find(|p| !p.is_zero())
        .ok_or_else(|| Error::InternalInconsistency("empty syzygy module of two polynomials".into()))?;
    b.div_exact(s1)
        .map(|g| g.monic())
        .ok_or_else(|| Error::InternalInconsistency("gcd cofactor does not divide".into()))
}

/// `gcd(f, ∂₁f, …, ∂ₙf)` is constant.
pub fn is_squarefree(f: &Polynomial, budget: &Budget) -> Result<bool> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::ZeroOrConstantInput);
    }
    let mut h = f.clone();
    for d in f.gradient() {
        if d.is_zero() {
            continue;
        }
        h = gcd(&h, &d, budget)?;
        if h.is_constant() {
            return Ok(true);
        }
    }
    Ok(h.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn gcd_of_products() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let a = r.parse("(x+y)^2*(x-1)").unwrap();
        let b = r.parse("(x+y)*(y+2)").unwrap();
        let g = gcd(&a, &b, &Budget::unlimited()).unwrap();
        assert_eq!(g, r.parse("x+y").unwrap());
    }

    #[test]
    fn squarefree_examples() {
        let b = Budget::unlimited();
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        assert!(is_squarefree(&r.parse("x*y*z").unwrap(), &b).unwrap());
        assert!(!is_squarefree(&r.parse("x^2*y").unwrap(), &b).unwrap());
        let sextic = r
            .parse("4*x^3*y^2 - 16*x^4*z + 27*y^4 - 144*x*y^2*z + 128*x^2*z^2 - 256*z^3")
            .unwrap();
        assert!(is_squarefree(&sextic, &b).unwrap());
        assert_eq!(
            is_squarefree(&Polynomial::from_int(3, 5), &b),
            Err(Error::ZeroOrConstantInput)
        );
    }
}
