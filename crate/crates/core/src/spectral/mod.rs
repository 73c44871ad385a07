//! Adjacency spectra, exact characteristic polynomials and the energy
//! functionals built on them.

mod charpoly;
mod jacobi;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::graph::{BitIter, Graph, GraphError};

pub use charpoly::{char_poly_exact, named_charpoly, CharPoly};

/// `|f(ix)|^2` switches from a direct product to log-space summation above
/// these limits.
pub const LOG_SPACE_MIN_ORDER: usize = 31;
pub const LOG_SPACE_MIN_X: f64 = 1e3;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// p-energy needs `p > 0`.
    NonPositiveExponent(f64),
    /// Schatten norms need `p >= 1`.
    NotANorm(f64),
    EmptyGraph,
    Graph(GraphError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NonPositiveExponent(p) => {
                write!(f, "energy exponent must be positive, got {p}")
            }
            SpectralError::NotANorm(p) => {
                write!(f, "Schatten norm requires p >= 1, got {p}")
            }
            SpectralError::EmptyGraph => write!(f, "polynomial of a graph with no vertices"),
            SpectralError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Real adjacency eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `sum |lambda|^p`, with `0^p = 0`.
    pub fn p_energy(&self, p: f64) -> Result<f64, SpectralError> {
        if !(p > 0.0) {
            return Err(SpectralError::NonPositiveExponent(p));
        }
        Ok(self
            .eigenvalues
            .iter()
            .filter(|l| **l != 0.0)
            .map(|l| l.abs().powf(p))
            .sum())
    }

    /// Schatten p-norm; singular values of a symmetric matrix are `|lambda|`.
    pub fn schatten_norm(&self, p: f64) -> Result<f64, SpectralError> {
        if !(p >= 1.0) {
            return Err(SpectralError::NotANorm(p));
        }
        Ok(self.p_energy(p)?.powf(1.0 / p))
    }

    /// `max |lambda|`.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, l| m.max(l.abs()))
    }

    /// Power sum `sum lambda^k`.
    pub fn power_sum(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k)).sum()
    }

    /// `sum_{i<j} lambda_i^2 lambda_j^2`, accumulated pairwise.
    pub fn pair_product_sum(&self) -> f64 {
        let sq: Vec<f64> = self.eigenvalues.iter().map(|l| l * l).collect();
        let mut total = 0.0;
        for i in 0..sq.len() {
            for j in i + 1..sq.len() {
                total += sq[i] * sq[j];
            }
        }
        total
    }

    /// Copy with the `zeros` smallest-magnitude eigenvalues set to exactly 0.
    pub fn with_exact_zeros(&self, zeros: usize) -> Spectrum {
        let mut idx: Vec<usize> = (0..self.order()).collect();
        idx.sort_by(|&a, &b| {
            self.eigenvalues[a]
                .abs()
                .total_cmp(&self.eigenvalues[b].abs())
        });
        let mut eigenvalues = self.eigenvalues.clone();
        for &i in idx.iter().take(zeros) {
            eigenvalues[i] = 0.0;
        }
        Spectrum::from_eigenvalues(eigenvalues)
    }

    /// `prod (z - lambda_k)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eigenvalues
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &l| acc * (z - l))
    }

    /// `ln |f(ix)|^2 = sum ln(x^2 + lambda^2)`.
    pub fn ln_abs_sq_imag(&self, x: f64) -> f64 {
        self.eigenvalues.iter().map(|&l| ln_hypot_sq(x, l)).sum()
    }

    /// `|f(ix)|^2 = prod (x^2 + lambda^2)`, summed in log-space for large
    /// orders or arguments.
    pub fn abs_sq_imag(&self, x: f64) -> f64 {
        if self.order() >= LOG_SPACE_MIN_ORDER || x.abs() > LOG_SPACE_MIN_X {
            self.ln_abs_sq_imag(x).exp()
        } else {
            self.eigenvalues.iter().map(|&l| x * x + l * l).product()
        }
    }
}

/// `ln(x^2 + y^2)` without overflow or underflow of the squares.
pub(crate) fn ln_hypot_sq(x: f64, y: f64) -> f64 {
    let (a, b) = (x.abs(), y.abs());
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if big == 0.0 {
        return f64::NEG_INFINITY;
    }
    let r = small / big;
    2.0 * big.ln() + (r * r).ln_1p()
}

/// `ln((x^2 + y^2) / x^2)` for `x > 0`, accurate when `y << x` and when
/// `y >> x`.
pub(crate) fn ln_relative_hypot_sq(x: f64, y: f64) -> f64 {
    let (a, b) = (x.abs(), y.abs());
    if b <= a {
        let r = b / a;
        (r * r).ln_1p()
    } else {
        let r = a / b;
        2.0 * (b.ln() - a.ln()) + (r * r).ln_1p()
    }
}

/// Adjacency eigenvalues of `g`, descending.
///
/// The Jacobi eigenvalues closest to zero are replaced by exact zeros, as many
/// as the exact nullity of the adjacency matrix, so that `0^p = 0` applies to
/// every zero eigenvalue.
pub fn eigenvalues(g: &Graph) -> Spectrum {
    raw_eigenvalues(g).with_exact_zeros(adjacency_nullity(g))
}

/// Jacobi eigenvalues of `g` without zero snapping.
pub fn raw_eigenvalues(g: &Graph) -> Spectrum {
    let n = g.order();
    let mut a = g.adjacency_matrix();
    Spectrum::from_eigenvalues(jacobi::symmetric_eigenvalues(&mut a, n))
}

/// `n - rank(A)` over the rationals, by fraction-free (Bareiss) elimination.
/// For a symmetric matrix this is the multiplicity of 0 as an eigenvalue.
pub fn adjacency_nullity(g: &Graph) -> usize {
    let n = g.order();
    let mut m: Vec<BigInt> = (0..n * n)
        .map(|k| BigInt::from(u8::from(g.has_edge(k / n, k % n))))
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !m[r * n + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..n {
                m.swap(pivot * n + j, rank * n + j);
            }
        }
        let p = m[rank * n + col].clone();
        for i in rank + 1..n {
            let factor = m[i * n + col].clone();
            for j in col + 1..n {
                let v = (&m[i * n + j] * &p - &factor * &m[rank * n + j]) / &prev;
                m[i * n + j] = v;
            }
            m[i * n + col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    n - rank
}

/// `trace(A^k)`: the number of closed walks of length `k`, by exact integer
/// matrix powering.
///
/// Panics on `u128` overflow, which needs `n^k > 2^128`.
pub fn closed_walk_count(g: &Graph, k: u32) -> u128 {
    assert!(k >= 1, "walk length must be positive");
    let n = g.order();
    // p = A^j, starting from j = 1.
    let mut p = alloc::vec![0u128; n * n];
    for (u, v) in g.edges() {
        p[u * n + v] = 1;
        p[v * n + u] = 1;
    }
    for _ in 1..k {
        let mut next = alloc::vec![0u128; n * n];
        for i in 0..n {
            for j in 0..n {
                // (P A)_{ij} = sum over neighbors l of j of P_{il}
                next[i * n + j] = BitIter(g.neighbors(j))
                    .map(|l| p[i * n + l])
                    .try_fold(0u128, |acc, x| acc.checked_add(x))
                    .expect("closed walk count overflows u128");
            }
        }
        p = next;
    }
    (0..n)
        .map(|i| p[i * n + i])
        .try_fold(0u128, |acc, x| acc.checked_add(x))
        .expect("closed walk count overflows u128")
}
