//! Integral representations of graph energies.
//!
//! Every formula reduces to `c * integral_0^inf z^(q-1) h(z) dz` with
//! `0 < q < 2` and is handed to [`quadrature::integrate_half_line`]. The
//! integrands are built from the spectrum in product form, never from the
//! expanded polynomial, so that logarithms are sums of well-conditioned terms.

pub mod psi;
pub mod quadrature;

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::graph::Graph;
use crate::spectral::{eigenvalues, ln_relative_hypot_sq, Spectrum};

pub use psi::{psi_eval, PsiProduct};
pub use quadrature::{
    integrate_half_line, integrate_unit, QuadratureError, QuadratureOptions, QuadratureResult,
};

#[derive(Debug, Clone, PartialEq)]
pub enum CoulsonError {
    OrderMismatch {
        left: usize,
        right: usize,
    },
    /// The exponent lies outside the range the formula covers.
    ExponentOutOfRange {
        p: f64,
        min: f64,
        max: f64,
    },
    /// `r` must be even and at least 4.
    InvalidRadix {
        r: u32,
    },
    /// `p < r < 2p` fails.
    InvalidExponentPair {
        p: f64,
        r: u32,
    },
    /// The formula needs at least one nonzero eigenvalue.
    EdgelessGraph,
    Quadrature(QuadratureError),
}

impl fmt::Display for CoulsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoulsonError::OrderMismatch { left, right } => {
                write!(f, "graphs must have equal order, got {left} and {right}")
            }
            CoulsonError::ExponentOutOfRange { p, min, max } => {
                write!(f, "exponent {p} outside the open interval ({min}, {max})")
            }
            CoulsonError::InvalidRadix { r } => {
                write!(f, "r must be an even integer >= 4, got {r}")
            }
            CoulsonError::InvalidExponentPair { p, r } => {
                write!(f, "need p < r < 2p, got p = {p}, r = {r}")
            }
            CoulsonError::EdgelessGraph => {
                write!(f, "integral formula needs a graph with at least one edge")
            }
            CoulsonError::Quadrature(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CoulsonError {}

impl From<QuadratureError> for CoulsonError {
    fn from(e: QuadratureError) -> Self {
        CoulsonError::Quadrature(e)
    }
}

fn check_open_range(p: f64, min: f64, max: f64) -> Result<(), CoulsonError> {
    if p > min && p < max {
        Ok(())
    } else {
        Err(CoulsonError::ExponentOutOfRange { p, min, max })
    }
}

fn nonzero_spectrum(g: &Graph) -> Result<Spectrum, CoulsonError> {
    if g.size() == 0 {
        return Err(CoulsonError::EdgelessGraph);
    }
    Ok(eigenvalues(g))
}

fn check_orders(g1: &Graph, g2: &Graph) -> Result<(), CoulsonError> {
    if g1.order() == g2.order() {
        Ok(())
    } else {
        Err(CoulsonError::OrderMismatch {
            left: g1.order(),
            right: g2.order(),
        })
    }
}

/// Integrates `prefactor * integral z^(q-1) h(z) dz` so that the scaled error
/// estimate stays within `opts.tol`.
fn scaled_integral<H: Fn(f64) -> f64>(
    h: H,
    q: f64,
    prefactor: f64,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, CoulsonError> {
    let inner = QuadratureOptions {
        tol: opts.tol / prefactor.abs(),
        ..opts
    };
    Ok(integrate_half_line(h, q, inner)?.scaled(prefactor))
}

/// `sum 2 lambda^2 / (z^2 + lambda^2)` over the nonzero eigenvalues.
fn resolvent_sum(squares: &[f64], z: f64) -> f64 {
    let z2 = z * z;
    squares.iter().map(|&s| 2.0 * s / (z2 + s)).sum()
}

/// `sum ln(1 + mu^2 / z^2)`, i.e. `ln(|f(iz)|^2 / z^(2n))` for roots `mu`.
fn relative_log_sum(roots: &[f64], z: f64) -> f64 {
    roots.iter().map(|&m| ln_relative_hypot_sq(z, m)).sum()
}

/// Ordinary energy `sum |lambda|` by the Coulson integral
/// `(1/pi) integral_R (n - ix phi'(ix)/phi(ix)) dx`.
///
/// Pairing `x` with `-x` turns the integrand into the real function
/// `sum 2 lambda^2 / (x^2 + lambda^2)` on `(0, inf)`. The edgeless graph gives 0.
pub fn coulson_energy(
    g: &Graph,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, CoulsonError> {
    if g.size() == 0 {
        return Ok(QuadratureResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }
    let squares: Vec<f64> = eigenvalues(g).eigenvalues().iter().map(|l| l * l).collect();
    scaled_integral(|x| resolvent_sum(&squares, x), 1.0, 1.0 / PI, opts)
}

/// p-energy for `0 < p < 2` by
/// `E_p = sin(p pi / 2) / (p pi) integral_0^inf sum 2 lambda^2 / (x^(2/p) + lambda^2) dx`.
///
/// The substitution `x = z^p` performed by the quadrature head is exactly this
/// `x` variable, so the integrand is bounded at the origin for every `p`.
pub fn du1_energy(
    g: &Graph,
    p: f64,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, CoulsonError> {
    check_open_range(p, 0.0, 2.0)?;
    let spectrum = nonzero_spectrum(g)?;
    let squares: Vec<f64> = spectrum.eigenvalues().iter().map(|l| l * l).collect();
    let prefactor = (p * PI / 2.0).sin() / PI;
    scaled_integral(|z| resolvent_sum(&squares, z), p, prefactor, opts)
}

/// `E_p(g1) - E_p(g2)` for `0 < p < 2` by
/// `(2p sin(p pi / 2) / pi) integral_0^inf z^(p-1) (1/2) ln(|f(iz)|^2 / |g(iz)|^2) dz`.
pub fn cj_difference(
    g1: &Graph,
    g2: &Graph,
    p: f64,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, CoulsonError> {
    check_orders(g1, g2)?;
    check_open_range(p, 0.0, 2.0)?;
    let f = nonzero_spectrum(g1)?;
    let g = nonzero_spectrum(g2)?;
    let prefactor = 2.0 * p * (p * PI / 2.0).sin() / PI;
    let (a, b) = (f.eigenvalues(), g.eigenvalues());
    scaled_integral(
        |z| 0.5 * (relative_log_sum(a, z) - relative_log_sum(b, z)),
        p,
        prefactor,
        opts,
    )
}

/// `E_p(g1) - E_p(g2)` for `p > 2` and an even `r` with `p < r < 2p`.
///
/// The rotated product `psi` of a graph has roots `lambda^(r/2)`, so its
/// `2p/r`-energy is the `p`-energy of the graph and `2p/r` lies in `(1, 2)`.
/// The difference is then
/// `(4p sin(p pi / r) / (r pi)) integral_0^inf z^(2p/r - 1) (1/2) ln(|psi_1(iz)|^2 / |psi_2(iz)|^2) dz`.
///
/// Results for `r >= 6` have only been checked against direct spectra on
/// small graphs.
pub fn du2_difference(
    g1: &Graph,
    g2: &Graph,
    p: f64,
    r: u32,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, CoulsonError> {
    check_orders(g1, g2)?;
    if !(p > 2.0) || !p.is_finite() {
        return Err(CoulsonError::ExponentOutOfRange {
            p,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    if r < 4 || r % 2 != 0 {
        return Err(CoulsonError::InvalidRadix { r });
    }
    let rf = f64::from(r);
    if !(p < rf && rf < 2.0 * p) {
        return Err(CoulsonError::InvalidExponentPair { p, r });
    }
    let half = (r / 2) as i32;
    let roots =
        |s: Spectrum| -> Vec<f64> { s.eigenvalues().iter().map(|l| l.powi(half)).collect() };
    let a = roots(nonzero_spectrum(g1)?);
    let b = roots(nonzero_spectrum(g2)?);
    let q = 2.0 * p / rf;
    let prefactor = 4.0 * p * (p * PI / rf).sin() / (rf * PI);
    scaled_integral(
        |z| 0.5 * (relative_log_sum(&a, z) - relative_log_sum(&b, z)),
        q,
        prefactor,
        opts,
    )
}

/// The weighted integrand `z^(p-1) (1/2) ln(|f(iz)|^2 / |g(iz)|^2)` of
/// [`cj_difference`], without the constant prefactor.
pub fn log_ratio_integrand(g1: &Graph, g2: &Graph, p: f64, z: f64) -> Result<f64, CoulsonError> {
    check_orders(g1, g2)?;
    let (f, g) = (eigenvalues(g1), eigenvalues(g2));
    Ok(log_ratio_from_spectra(&f, &g, p, z))
}

/// [`log_ratio_integrand`] on precomputed spectra, for dense sampling.
pub fn log_ratio_from_spectra(f: &Spectrum, g: &Spectrum, p: f64, z: f64) -> f64 {
    let z = z.max(quadrature::MIN_ABSCISSA);
    let ratio = 0.5 * (relative_log_sum(f.eigenvalues(), z) - relative_log_sum(g.eigenvalues(), z));
    if ratio == 0.0 {
        0.0
    } else {
        z.powf(p - 1.0) * ratio
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};

    fn g(family: Family, n: usize) -> Graph {
        named_graph(family, n).unwrap()
    }

    fn opts() -> QuadratureOptions {
        QuadratureOptions::default()
    }

    #[test]
    fn coulson_examples() {
        let r = coulson_energy(&g(Family::Complete, 2), opts()).unwrap();
        assert!(r.converged && (r.value - 2.0).abs() <= 1e-6, "{r:?}");
        let r = coulson_energy(&g(Family::Star, 4), opts()).unwrap();
        assert!((r.value - 2.0 * 3f64.sqrt()).abs() <= 1e-6, "{r:?}");
        let r = coulson_energy(&Graph::empty(1).unwrap(), opts()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn du1_examples() {
        let r = du1_energy(&g(Family::Complete, 2), 1.0, opts()).unwrap();
        assert!((r.value - 2.0).abs() <= 1e-6, "{r:?}");
        let r = du1_energy(&g(Family::Complete, 3), 1.5, opts()).unwrap();
        assert!((r.value - (2f64.powf(1.5) + 2.0)).abs() <= 1e-6, "{r:?}");
        let r = du1_energy(&g(Family::Star, 5), 0.5, opts()).unwrap();
        assert!((r.value - 2.0 * 4f64.powf(0.25)).abs() <= 1e-6, "{r:?}");
        assert!(r.converged && r.abs_error_estimate <= 1e-9);
    }

    #[test]
    fn du1_near_two() {
        let k4 = g(Family::Complete, 4);
        let r = du1_energy(&k4, 1.99, opts()).unwrap();
        let exact = eigenvalues(&k4).p_energy(1.99).unwrap();
        assert!(
            r.converged && (r.value - exact).abs() <= 1e-6,
            "{r:?} vs {exact}"
        );
    }

    #[test]
    fn cj_examples() {
        let k3 = g(Family::Complete, 3);
        let s3 = g(Family::Star, 3);
        let r = cj_difference(&k3, &s3, 1.0, opts()).unwrap();
        assert!((r.value - (4.0 - 2.0 * 2f64.sqrt())).abs() <= 1e-6, "{r:?}");
        let r = cj_difference(&g(Family::Path, 4), &g(Family::Star, 4), 1.0, opts()).unwrap();
        assert!(
            (r.value - (2.0 * 5f64.sqrt() - 2.0 * 3f64.sqrt())).abs() <= 1e-6,
            "{r:?}"
        );
        let r = cj_difference(&k3, &k3, 0.7, opts()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn du2_examples() {
        let r =
            du2_difference(&g(Family::Complete, 3), &g(Family::Star, 3), 2.5, 4, opts()).unwrap();
        let exact = 2f64.powf(2.5) + 2.0 - 2.0 * 2f64.powf(1.25);
        assert!((r.value - exact).abs() <= 1e-5, "{r:?} vs {exact}");
        let r = du2_difference(&g(Family::Path, 4), &g(Family::Star, 4), 3.0, 4, opts()).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let exact = 2.0 * phi.powi(3) + 2.0 * phi.powi(-3) - 2.0 * 3f64.powf(1.5);
        assert!((r.value - exact).abs() <= 1e-5, "{r:?} vs {exact}");
        assert!(r.value < 0.0);
    }

    #[test]
    fn argument_validation() {
        let k3 = g(Family::Complete, 3);
        let p4 = g(Family::Path, 4);
        assert!(matches!(
            cj_difference(&k3, &p4, 1.0, opts()),
            Err(CoulsonError::OrderMismatch { left: 3, right: 4 })
        ));
        assert!(du1_energy(&k3, 2.0, opts()).is_err());
        assert!(du1_energy(&Graph::empty(3).unwrap(), 1.0, opts()).is_err());
        assert_eq!(
            du2_difference(&k3, &k3, 3.0, 7, opts()),
            Err(CoulsonError::InvalidRadix { r: 7 })
        );
        assert_eq!(
            du2_difference(&k3, &k3, 2.5, 6, opts()),
            Err(CoulsonError::InvalidExponentPair { p: 2.5, r: 6 })
        );
        assert!(du2_difference(&k3, &k3, 1.5, 4, opts()).is_err());
    }

    #[test]
    fn log_ratio_samples() {
        let k3 = g(Family::Complete, 3);
        let s3 = g(Family::Star, 3);
        let v = log_ratio_integrand(&k3, &s3, 1.0, 1.0).unwrap();
        assert!((v - 0.5 * (20.0f64 / 9.0).ln()).abs() <= 1e-12);
        assert_eq!(log_ratio_integrand(&k3, &k3, 1.3, 0.2).unwrap(), 0.0);
        // Decays like z^(p-3).
        for z in [1e2, 1e3, 1e4] {
            let v = log_ratio_integrand(&k3, &s3, 1.5, z).unwrap();
            assert!(v.abs() <= 10.0 * z.powf(1.5 - 3.0));
        }
    }
}
