//! Exact characteristic polynomials.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{BitIter, Family, Graph};

use super::SpectralError;

/// Monic integer polynomial `c[0] z^n + c[1] z^(n-1) + ... + c[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    /// Builds a polynomial from coefficients in descending degree order.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "polynomial needs a leading coefficient"
        );
        CharPoly { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficients in descending degree order, leading coefficient first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `z^power`.
    pub fn coefficient_of_power(&self, power: usize) -> &BigInt {
        &self.coefficients[self.degree() - power]
    }

    /// Multiplicity of 0 as a root: the number of trailing zero coefficients.
    /// Equals `n` only for the zero-constant monomial `z^n`.
    pub fn zero_multiplicity(&self) -> usize {
        self.coefficients
            .iter()
            .rev()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.degree())
    }

    /// Coefficients rounded to `f64`.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        self.coefficients
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Horner evaluation on the (rounded) coefficients.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients_f64()
            .into_iter()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Polynomial product.
    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = alloc::vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CharPoly::from_coefficients(out)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{power}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `det(zI - A)` by the Faddeev-LeVerrier recurrence
/// `M_k = A M_(k-1) + c_(k-1) I`, `c_k = -tr(A M_k) / k`.
///
/// For an integer matrix every `M_k` stays integral, so the recurrence is run
/// on big integers and each division by `k` is checked to be exact.
pub fn char_poly_exact(g: &Graph) -> CharPoly {
    let n = g.order();
    let mut coefficients = Vec::with_capacity(n + 1);
    coefficients.push(BigInt::one());
    // M_0 = 0, so M_1 = I.
    let mut m: Vec<BigInt> = alloc::vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        // am = A * M_k, using the 0/1 rows of A.
        let mut am = alloc::vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in BitIter(g.neighbors(i)) {
                for j in 0..n {
                    let v = &m[l * n + j];
                    if !v.is_zero() {
                        am[i * n + j] += v;
                    }
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(
            r.is_zero(),
            "Faddeev-LeVerrier produced a non-integral coefficient at step {k}"
        );
        let c = -q;
        if k < n {
            for i in 0..n {
                am[i * n + i] += &c;
            }
            m = am;
        }
        coefficients.push(c);
    }
    CharPoly::from_coefficients(coefficients)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed-form characteristic polynomial of a named family member.
///
/// * star: `z^n - (n-1) z^(n-2)`
/// * path: `sum_k (-1)^k C(n-k, k) z^(n-2k)`
/// * complete: `(z - (n-1)) (z + 1)^(n-1)`
/// * cycle: `sum_k (-1)^k n/(n-k) C(n-k, k) z^(n-2k) - 2`
pub fn named_charpoly(family: Family, n: usize) -> Result<CharPoly, SpectralError> {
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut c = alloc::vec![BigInt::zero(); n + 1];
    match family {
        Family::Star => {
            c[0] = BigInt::one();
            if n >= 2 {
                c[2] = -BigInt::from(n - 1);
            }
        }
        Family::Path => {
            for k in 0..=n / 2 {
                let b = binomial(n - k, k);
                c[2 * k] = if k % 2 == 0 { b } else { -b };
            }
        }
        Family::Complete => {
            let mut p = CharPoly::from_i64(&[1, -(n as i64 - 1)]);
            let linear = CharPoly::from_i64(&[1, 1]);
            for _ in 1..n {
                p = p.mul(&linear);
            }
            return Ok(p);
        }
        Family::Cycle => {
            if n < 3 {
                return Err(SpectralError::Graph(
                    crate::graph::GraphError::CycleTooSmall { order: n },
                ));
            }
            for k in 0..=n / 2 {
                let b = binomial(n - k, k) * BigInt::from(n) / BigInt::from(n - k);
                c[2 * k] = if k % 2 == 0 { b } else { -b };
            }
            c[n] -= 2;
        }
    }
    Ok(CharPoly::from_coefficients(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    #[test]
    fn star_polynomial() {
        for n in 2..=10 {
            let g = named_graph(Family::Star, n).unwrap();
            let mut expected = alloc::vec![0i64; n + 1];
            expected[0] = 1;
            expected[2] = -(n as i64 - 1);
            assert_eq!(char_poly_exact(&g), CharPoly::from_i64(&expected));
        }
        assert_eq!(
            named_charpoly(Family::Star, 3).unwrap(),
            CharPoly::from_i64(&[1, 0, -2, 0])
        );
    }

    #[test]
    fn small_by_hand() {
        let k3 = named_graph(Family::Complete, 3).unwrap();
        assert_eq!(char_poly_exact(&k3), CharPoly::from_i64(&[1, 0, -3, -2]));
        let p4 = named_graph(Family::Path, 4).unwrap();
        assert_eq!(char_poly_exact(&p4), CharPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(
            named_charpoly(Family::Path, 3).unwrap(),
            CharPoly::from_i64(&[1, 0, -2, 0])
        );
        assert_eq!(
            named_charpoly(Family::Path, 5).unwrap(),
            CharPoly::from_i64(&[1, 0, -4, 0, 3, 0])
        );
        // C4: z^4 - 4z^2.
        assert_eq!(
            named_charpoly(Family::Cycle, 4).unwrap(),
            CharPoly::from_i64(&[1, 0, -4, 0, 0])
        );
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(char_poly_exact(&k1), CharPoly::from_i64(&[1, 0]));
    }

    #[test]
    fn closed_forms_match_faddeev_leverrier() {
        for family in [Family::Star, Family::Path, Family::Complete, Family::Cycle] {
            let start = if family == Family::Cycle { 3 } else { 1 };
            for n in start..=12 {
                let g = named_graph(family, n).unwrap();
                assert_eq!(
                    char_poly_exact(&g),
                    named_charpoly(family, n).unwrap(),
                    "{family} {n}"
                );
            }
        }
    }

    #[test]
    fn zero_multiplicity() {
        assert_eq!(CharPoly::from_i64(&[1, 0, -3, 0, 0]).zero_multiplicity(), 2);
        assert_eq!(CharPoly::from_i64(&[1, 0, -3, -2]).zero_multiplicity(), 0);
        assert_eq!(CharPoly::from_i64(&[1, 0, 0]).zero_multiplicity(), 2);
    }

    #[test]
    fn display() {
        let p = CharPoly::from_i64(&[1, 0, -3, 0, 1]);
        assert_eq!(alloc::format!("{p}"), "z^4 - 3z^2 + 1");
        assert_eq!(alloc::format!("{}", CharPoly::from_i64(&[1, 0])), "z");
    }

    #[test]
    fn large_complete_graph_coefficients() {
        // Coefficients of K_40 exceed 64 bits; Faddeev-LeVerrier must stay exact.
        let g = named_graph(Family::Complete, 40).unwrap();
        assert_eq!(
            char_poly_exact(&g),
            named_charpoly(Family::Complete, 40).unwrap()
        );
    }
}
