//! Cylinders `D = D′ × ℂᵐ`: variables absent from `f` are split off.

use crate::poly::Polynomial;

/// `f` written in the variables it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderSplit {
    /// `f` in the kept variables only.
    pub reduced: Polynomial,
    /// Original indices of the kept variables, ascending.
    pub kept: Vec<usize>,
    /// Original indices of the dropped variables, ascending.
    pub dropped: Vec<usize>,
    pub nvars: usize,
}

impl CylinderSplit {
    pub fn is_identity(&self) -> bool {
        self.dropped.is_empty()
    }

    /// `p` in the kept variables, re-embedded in the original ring.
    pub fn embed(&self, p: &Polynomial) -> Polynomial {
        p.remap(&self.kept, self.nvars)
    }
}

/// Drops every variable with zero partial derivative.
pub fn split_cylindrical(f: &Polynomial) -> CylinderSplit {
    let n = f.nvars();
    let used = f.used_variables();
    let kept: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
    let dropped: Vec<usize> = (0..n).filter(|&i| !used[i]).collect();
    let mut back = vec![usize::MAX; n];
    for (new, &old) in kept.iter().enumerate() {
        back[old] = new;
    }
    let reduced = if dropped.is_empty() {
        f.clone()
    } else if kept.is_empty() {
        Polynomial::constant(0, f.constant_term())
    } else {
        // Dropped variables do not occur, so their target index is irrelevant.
        let map: Vec<usize> = back.iter().map(|&b| if b == usize::MAX { 0 } else { b }).collect();
        f.remap(&map, kept.len())
    };
    CylinderSplit {
        reduced,
        kept,
        dropped,
        nvars: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn drops_absent_variables() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r.parse("x^3*y - x*y^3").unwrap();
        let s = split_cylindrical(&f);
        assert_eq!(s.dropped, vec![2]);
        assert_eq!(Ring::new(&["x", "y"]).unwrap().format(&s.reduced), "x^3*y - x*y^3");
        assert_eq!(s.embed(&s.reduced), f);

        let r4 = Ring::new(&["x", "y", "z", "w"]).unwrap();
        let s = split_cylindrical(&r4.parse("x*y").unwrap());
        assert_eq!(s.dropped, vec![2, 3]);
        assert_eq!(s.reduced.nvars(), 2);
    }

    #[test]
    fn identity_split() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r.parse("x*y*z").unwrap();
        let s = split_cylindrical(&f);
        assert!(s.is_identity());
        assert_eq!(s.reduced, f);
    }

    #[test]
    fn middle_variable() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let f = r.parse("x^2 + z^3").unwrap();
        let s = split_cylindrical(&f);
        assert_eq!(s.kept, vec![0, 2]);
        assert_eq!(Ring::new(&["x", "z"]).unwrap().format(&s.reduced), "z^3 + x^2");
        assert_eq!(s.embed(&s.reduced), f);
    }
}
