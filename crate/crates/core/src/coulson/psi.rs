//! The rotated product `psi(z) = e^{i(r/2-1)n pi} prod_k phi(z^{2/r} e^{-4 i k pi / r})`.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::spectral::CharPoly;

use super::CoulsonError;

/// `psi` built from a characteristic polynomial and an even `r >= 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiProduct {
    base: CharPoly,
    r: u32,
}

impl PsiProduct {
    pub fn new(base: CharPoly, r: u32) -> Result<Self, CoulsonError> {
        if r < 4 || !r.is_multiple_of(2) {
            return Err(CoulsonError::InvalidRadix { r });
        }
        Ok(PsiProduct { base, r })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Order `n` of the base polynomial.
    pub fn order(&self) -> usize {
        self.base.degree()
    }

    pub fn base(&self) -> &CharPoly {
        &self.base
    }

    /// Evaluates `psi(z)` with the principal branch of `z^(2/r)`
    /// (argument in `(-pi, pi]`). The factors are Horner evaluations of the
    /// base polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let half = self.r / 2;
        let root = if z == Complex64::new(0.0, 0.0) {
            z
        } else {
            z.powf(2.0 / f64::from(self.r))
        };
        let mut acc = Complex64::new(1.0, 0.0);
        for k in 0..half {
            let angle = -4.0 * f64::from(k) * PI / f64::from(self.r);
            acc *= self.base.eval(root * Complex64::from_polar(1.0, angle));
        }
        // e^{i (r/2 - 1) n pi} is +-1.
        if (u64::from(half - 1) * self.order() as u64) % 2 == 1 {
            -acc
        } else {
            acc
        }
    }
}

/// [`PsiProduct::eval`] as a free function.
pub fn psi_eval(pp: &PsiProduct, z: Complex64) -> Complex64 {
    pp.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family, Graph};
    use crate::spectral::{char_poly_exact, eigenvalues};

    fn psi(g: &Graph, r: u32) -> PsiProduct {
        PsiProduct::new(char_poly_exact(g), r).unwrap()
    }

    #[test]
    fn star3_r4_on_imaginary_axis() {
        let s3 = named_graph(Family::Star, 3).unwrap();
        let pp = psi(&s3, 4);
        for x in [0.1, 0.5, 1.0, 2.0, 7.5] {
            let v = pp.eval(Complex64::new(0.0, x)).norm_sqr();
            let expected = (x * x + 4.0).powi(2) * x * x;
            assert!((v - expected).abs() <= 1e-9 * (1.0 + expected), "x={x}");
        }
    }

    #[test]
    fn k2_at_one_vanishes() {
        let pp = psi(&named_graph(Family::Complete, 2).unwrap(), 4);
        assert!(pp.eval(Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn real_argument_beyond_largest_square() {
        for g in [
            named_graph(Family::Complete, 4).unwrap(),
            named_graph(Family::Path, 5).unwrap(),
            named_graph(Family::Cycle, 6).unwrap(),
        ] {
            let rho = eigenvalues(&g).spectral_radius();
            let v = psi(&g, 4).eval(Complex64::new(rho * rho + 0.5, 0.0));
            assert!(v.re > 0.0 && v.im.abs() <= 1e-9 * v.re.abs());
        }
    }

    #[test]
    fn value_at_zero() {
        // psi(0) = prod(-lambda^2) = (-1)^n det(A)^2 for r = 4.
        let k3 = named_graph(Family::Complete, 3).unwrap();
        let v = psi(&k3, 4).eval(Complex64::new(0.0, 0.0));
        assert!((v - Complex64::new(-4.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn radix_validation() {
        let f = char_poly_exact(&named_graph(Family::Path, 3).unwrap());
        assert!(PsiProduct::new(f.clone(), 2).is_err());
        assert!(PsiProduct::new(f.clone(), 5).is_err());
        assert!(PsiProduct::new(f, 6).is_ok());
    }
}
