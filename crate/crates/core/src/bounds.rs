//! Checks of spectral bounds and pointwise inequalities on individual graphs,
//! with classification of the equality cases.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CANONICAL_MAX_ORDER};
use crate::coulson::PsiProduct;
use crate::graph::{named_graph, Family, Graph};
use crate::spectral::{
    char_poly_exact, closed_walk_count, eigenvalues, ln_relative_hypot_sq, Spectrum,
};

/// Margin tolerance for `holds` and `tight`. It is absolute for quantities
/// below 1 and relative to the larger side above.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum BoundsError {
    /// The bound is stated for connected graphs only.
    Disconnected,
    NotBipartite,
    ExponentOutOfRange {
        p: f64,
        min: f64,
        max: f64,
    },
    OrderMismatch {
        left: usize,
        right: usize,
    },
    InvalidRadix {
        r: u32,
    },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::Disconnected => write!(f, "bound requires a connected graph"),
            BoundsError::NotBipartite => write!(f, "bound requires a bipartite graph"),
            BoundsError::ExponentOutOfRange { p, min, max } => {
                write!(f, "exponent {p} outside the range [{min}, {max}]")
            }
            BoundsError::OrderMismatch { left, right } => {
                write!(f, "graphs must have equal order, got {left} and {right}")
            }
            BoundsError::InvalidRadix { r } => {
                write!(f, "r must be an even integer >= 4, got {r}")
            }
        }
    }
}

impl core::error::Error for BoundsError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// `rho <= sqrt(2m - n + 1)`.
    Hong,
    /// `E_p <= 2m (2m - n + 1)^((p-2)/2)` for `p > 2`.
    PUpperConnected,
    /// `E_p <= 2m (-1/2 + sqrt(2m + 1/4))^(p-2)` for `p > 2`.
    PUpperGeneral,
    /// The connected bound does not exceed the general one.
    PUpperSharpness,
    /// `E_4 <= 2m (2m - n + 1)`.
    FourthMoment,
    /// `E_p >= 2 m^(p/2)` for bipartite graphs and `1 <= p <= 2`.
    BipartiteLower,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundName::Hong => "hong",
            BoundName::PUpperConnected => "p_upper_connected",
            BoundName::PUpperGeneral => "p_upper_general",
            BoundName::PUpperSharpness => "p_upper_sharpness",
            BoundName::FourthMoment => "fourth_moment",
            BoundName::BipartiteLower => "bipartite_lower",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Equality {
    Strict,
    Tight,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EqualityClass {
    Star,
    Complete,
    Other,
}

/// Outcome of one inequality on one graph. `margin` is oriented so that a
/// nonnegative value means the inequality holds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub margin: f64,
    pub equality: Equality,
    pub equality_class: Option<EqualityClass>,
}

impl BoundReport {
    fn new(name: BoundName, lhs: f64, rhs: f64, margin: f64, class: Option<EqualityClass>) -> Self {
        let tol = EQUALITY_TOLERANCE * 1f64.max(lhs.abs()).max(rhs.abs());
        Self::with_tolerance(name, lhs, rhs, margin, tol, class)
    }

    fn with_tolerance(
        name: BoundName,
        lhs: f64,
        rhs: f64,
        margin: f64,
        tol: f64,
        class: Option<EqualityClass>,
    ) -> Self {
        let equality = if margin.abs() <= tol {
            Equality::Tight
        } else if margin > 0.0 {
            Equality::Strict
        } else {
            Equality::Violated
        };
        BoundReport {
            name,
            lhs,
            rhs,
            holds: equality != Equality::Violated,
            margin,
            equality,
            equality_class: class,
        }
    }

    /// Whether tightness agrees with the structural characterization of the
    /// equality case: Hong's bound is attained exactly by stars and complete
    /// graphs, the connected p-bound and the fourth-moment bound exactly by
    /// stars. Bounds without such a characterization always agree.
    pub fn equality_case_consistent(&self) -> bool {
        let tight = self.equality == Equality::Tight;
        match (self.name, self.equality_class) {
            (BoundName::Hong, Some(c)) => tight == (c != EqualityClass::Other),
            (BoundName::PUpperConnected | BoundName::FourthMoment, Some(c)) => {
                tight == (c == EqualityClass::Star)
            }
            _ => true,
        }
    }
}

/// Classifies `g` as a star, a complete graph or neither, by canonical-form
/// comparison with the named graphs. `K_1` and `K_2` count as stars.
/// Orders beyond the canonical-form limit use the direct structural tests.
pub fn equality_class(g: &Graph) -> EqualityClass {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return if g.is_star() {
            EqualityClass::Star
        } else if g.is_complete() {
            EqualityClass::Complete
        } else {
            EqualityClass::Other
        };
    }
    let form = canonical_form(g).expect("order checked against the canonical-form limit");
    let matches = |family| {
        let h = named_graph(family, n).expect("families exist for every order >= 1");
        g.size() == h.size() && canonical_form(&h).ok() == Some(form.clone())
    };
    if matches(Family::Star) {
        EqualityClass::Star
    } else if matches(Family::Complete) {
        EqualityClass::Complete
    } else {
        EqualityClass::Other
    }
}

fn require_connected(g: &Graph) -> Result<(), BoundsError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(BoundsError::Disconnected)
    }
}

/// `2m - n + 1`, nonnegative for connected graphs.
fn hong_radicand(g: &Graph) -> f64 {
    (2 * g.size() + 1) as f64 - g.order() as f64
}

/// `rho(A) <= sqrt(2m - n + 1)` for connected graphs.
pub fn hong_check(g: &Graph) -> Result<BoundReport, BoundsError> {
    require_connected(g)?;
    let rho = eigenvalues(g).spectral_radius();
    let rhs = hong_radicand(g).sqrt();
    Ok(BoundReport::new(
        BoundName::Hong,
        rho,
        rhs,
        rhs - rho,
        Some(equality_class(g)),
    ))
}

/// The two upper bounds on `E_p` for `p > 2` and the comparison of their
/// right-hand sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PUpperReports {
    pub connected: BoundReport,
    pub general: BoundReport,
    pub sharpness: BoundReport,
}

impl PUpperReports {
    pub fn all(&self) -> [&BoundReport; 3] {
        [&self.connected, &self.general, &self.sharpness]
    }
}

/// `E_p <= 2m (2m - n + 1)^((p-2)/2)` for connected graphs, the general bound
/// `E_p <= 2m (-1/2 + sqrt(2m + 1/4))^(p-2)`, and `connected rhs <= general rhs`.
///
/// The general bound is stated as strict, but `K_2` attains it
/// (`E_p = 2 = 2 * 1 * 1^(p-2)`), so it is checked as non-strict.
pub fn p_upper_check(g: &Graph, p: f64) -> Result<PUpperReports, BoundsError> {
    if !(p > 2.0) || !p.is_finite() {
        return Err(BoundsError::ExponentOutOfRange {
            p,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    require_connected(g)?;
    let spectrum = eigenvalues(g);
    Ok(p_upper_from_spectrum(g, &spectrum, p, equality_class(g)))
}

pub(crate) fn p_upper_from_spectrum(
    g: &Graph,
    spectrum: &Spectrum,
    p: f64,
    class: EqualityClass,
) -> PUpperReports {
    let e_p = spectrum.p_energy(p).expect("p > 2");
    let two_m = 2.0 * g.size() as f64;
    let connected_rhs = two_m * hong_radicand(g).powf((p - 2.0) / 2.0);
    let general_rhs = two_m * (-0.5 + (two_m + 0.25).sqrt()).powf(p - 2.0);
    PUpperReports {
        connected: BoundReport::new(
            BoundName::PUpperConnected,
            e_p,
            connected_rhs,
            connected_rhs - e_p,
            Some(class),
        ),
        general: BoundReport::new(
            BoundName::PUpperGeneral,
            e_p,
            general_rhs,
            general_rhs - e_p,
            Some(class),
        ),
        sharpness: BoundReport::new(
            BoundName::PUpperSharpness,
            connected_rhs,
            general_rhs,
            general_rhs - connected_rhs,
            Some(class),
        ),
    }
}

/// `E_4` as the exact closed-walk count `trace(A^4)` and as `sum lambda^4`.
pub fn fourth_moment(g: &Graph) -> (u128, f64) {
    (closed_walk_count(g, 4), eigenvalues(g).power_sum(4))
}

/// `E_4 <= 2m (2m - n + 1)` for connected graphs, decided in exact integer
/// arithmetic with `E_4 = trace(A^4)`.
pub fn e4_check(g: &Graph) -> Result<BoundReport, BoundsError> {
    require_connected(g)?;
    Ok(e4_report(g, equality_class(g)))
}

pub(crate) fn e4_report(g: &Graph, class: EqualityClass) -> BoundReport {
    let walks = closed_walk_count(g, 4) as i128;
    let m = g.size() as i128;
    let bound = 2 * m * (2 * m - g.order() as i128 + 1);
    let margin = bound - walks;
    // Integer margins are exact: tight means zero.
    BoundReport::with_tolerance(
        BoundName::FourthMoment,
        walks as f64,
        bound as f64,
        margin as f64,
        0.0,
        Some(class),
    )
}

/// `E_p >= 2 m^(p/2)` for bipartite graphs and `1 <= p <= 2`.
pub fn bipartite_lower_check(g: &Graph, p: f64) -> Result<BoundReport, BoundsError> {
    if !(1.0..=2.0).contains(&p) {
        return Err(BoundsError::ExponentOutOfRange {
            p,
            min: 1.0,
            max: 2.0,
        });
    }
    if !g.is_bipartite() {
        return Err(BoundsError::NotBipartite);
    }
    let e_p = eigenvalues(g).p_energy(p).expect("p >= 1");
    let rhs = 2.0 * (g.size() as f64).powf(p / 2.0);
    Ok(BoundReport::new(
        BoundName::BipartiteLower,
        e_p,
        rhs,
        e_p - rhs,
        Some(equality_class(g)),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

/// Sample points `min..=max`, either evenly or logarithmically spaced.
/// Parses from `"min,max,count,log"` or `"min,max,count,lin"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridParseError(pub String);

impl fmt::Display for GridParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid grid: {}", self.0)
    }
}

impl core::error::Error for GridParseError {}

impl Grid {
    pub fn log(min: f64, max: f64, count: usize) -> Self {
        Grid {
            min,
            max,
            count,
            spacing: Spacing::Log,
        }
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        Grid {
            min,
            max,
            count,
            spacing: Spacing::Linear,
        }
    }

    /// 200 logarithmic points on `[1e-3, 1e3]`.
    pub fn default_log() -> Self {
        Self::log(1e-3, 1e3, 200)
    }

    pub fn points(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => alloc::vec![self.min],
            k => {
                let steps = (k - 1) as f64;
                (0..k)
                    .map(|i| {
                        let t = i as f64 / steps;
                        if i == 0 {
                            self.min
                        } else if i == k - 1 {
                            self.max
                        } else {
                            match self.spacing {
                                Spacing::Linear => self.min + t * (self.max - self.min),
                                Spacing::Log => {
                                    (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp()
                                }
                            }
                        }
                    })
                    .collect()
            }
        }
    }
}

impl FromStr for Grid {
    type Err = GridParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| GridParseError(alloc::format!("{msg} in {s:?}"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(err("expected min,max,count,log|lin"));
        }
        let min: f64 = parts[0].parse().map_err(|_| err("bad minimum"))?;
        let max: f64 = parts[1].parse().map_err(|_| err("bad maximum"))?;
        let count: usize = parts[2].parse().map_err(|_| err("bad count"))?;
        let spacing = match parts[3] {
            "log" => Spacing::Log,
            "lin" | "linear" => Spacing::Linear,
            _ => return Err(err("spacing must be log or lin")),
        };
        if !(min.is_finite() && max.is_finite() && min <= max) {
            return Err(err("need finite min <= max"));
        }
        if spacing == Spacing::Log && !(min > 0.0) {
            return Err(err("log grid needs min > 0"));
        }
        if count == 0 {
            return Err(err("count must be positive"));
        }
        Ok(Grid {
            min,
            max,
            count,
            spacing,
        })
    }
}

/// Behaviour of `|f(ix)|^2` against `x^(2n-4) (x^2 + n - 1)^2` as `x -> 0`,
/// from the zero multiplicities: `|f(ix)| ~ |a_c| x^c` and the comparison
/// polynomial `~ (n - 1) x^(n-2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroComparison {
    pub lhs_multiplicity: usize,
    pub rhs_multiplicity: usize,
    /// `ln a_c^2 - ln (n-1)^2` when the multiplicities agree.
    pub limit_margin: Option<f64>,
    pub holds: bool,
}

/// Minimum of `ln |f(ix)|^2 - ln (x^(2n-4) (x^2 + n - 1)^2)` over a grid of
/// `x > 0`, together with the comparison at `x = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub min_margin: f64,
    pub argmin: f64,
    pub grid_points: usize,
    pub zero: ZeroComparison,
    pub holds: bool,
}

/// Pointwise margin of the key claim at `x > 0`, as
/// `sum ln(1 + lambda^2/x^2) - 2 ln(1 + (n-1)/x^2)` so that the common
/// factor `x^(2n)` cancels before any rounding.
pub fn key_claim_margin(spectrum: &Spectrum, x: f64) -> f64 {
    let n = spectrum.order();
    if n == 1 {
        // f(z) = z and the comparison is x^-1 (x^2) = x: identical.
        return 0.0;
    }
    let lhs: f64 = spectrum
        .eigenvalues()
        .iter()
        .map(|&l| ln_relative_hypot_sq(x, l))
        .sum();
    let rhs = 2.0 * ln_relative_hypot_sq(x, ((n - 1) as f64).sqrt());
    lhs - rhs
}

/// Checks `|f(ix)| >= x^(n-2) (x^2 + n - 1)` on the positive points of `grid`
/// and, symbolically, at `x = 0`. Points `x <= 0` in the grid are skipped.
pub fn key_claim_check(g: &Graph, grid: &[f64]) -> ClaimReport {
    let spectrum = eigenvalues(g);
    let mut min_margin = f64::INFINITY;
    let mut argmin = f64::NAN;
    let mut grid_points = 0;
    for &x in grid.iter().filter(|x| **x > 0.0) {
        let m = key_claim_margin(&spectrum, x);
        grid_points += 1;
        if m < min_margin || argmin.is_nan() {
            min_margin = m;
            argmin = x;
        }
    }
    let zero = zero_comparison(g);
    let holds = zero.holds && (grid_points == 0 || min_margin >= -EQUALITY_TOLERANCE);
    ClaimReport {
        min_margin,
        argmin,
        grid_points,
        zero,
        holds,
    }
}

fn zero_comparison(g: &Graph) -> ZeroComparison {
    let n = g.order();
    let f = char_poly_exact(g);
    let c = f.zero_multiplicity();
    let rhs_multiplicity = if n == 1 { 1 } else { n - 2 };
    let (limit_margin, holds) = if c == rhs_multiplicity {
        let a_c = f.coefficient_of_power(c).to_f64().unwrap_or(f64::INFINITY);
        let comparison = if n == 1 { 1.0 } else { (n - 1) as f64 };
        let margin = 2.0 * (a_c.abs().ln() - comparison.ln());
        (Some(margin), margin >= -EQUALITY_TOLERANCE)
    } else {
        (None, c < rhs_multiplicity)
    };
    ZeroComparison {
        lhs_multiplicity: c,
        rhs_multiplicity,
        limit_margin,
        holds,
    }
}

/// Minimum of a pointwise margin over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub min_margin: f64,
    pub argmin: f64,
    pub grid_points: usize,
    pub holds: bool,
}

/// Minimum over `grid` (`x >= 0`) of `|psi_1(ix)| - |psi_2(ix)|`, where
/// `psi_k` is the rotated product of the characteristic polynomial of `g_k`
/// for the even radix `r`.
pub fn inequality16_probe(
    g1: &Graph,
    g2: &Graph,
    r: u32,
    grid: &[f64],
) -> Result<ProbeReport, BoundsError> {
    if g1.order() != g2.order() {
        return Err(BoundsError::OrderMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    let psi =
        |g| PsiProduct::new(char_poly_exact(g), r).map_err(|_| BoundsError::InvalidRadix { r });
    let (f, h) = (psi(g1)?, psi(g2)?);
    let mut min_margin = f64::INFINITY;
    let mut argmin = f64::NAN;
    let mut grid_points = 0;
    for &x in grid.iter().filter(|x| **x >= 0.0) {
        let z = Complex64::new(0.0, x);
        let m = f.eval(z).norm() - h.eval(z).norm();
        grid_points += 1;
        if m < min_margin || argmin.is_nan() {
            min_margin = m;
            argmin = x;
        }
    }
    Ok(ProbeReport {
        min_margin,
        argmin,
        grid_points,
        holds: min_margin >= -EQUALITY_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};

    fn g(family: Family, n: usize) -> Graph {
        named_graph(family, n).unwrap()
    }

    #[test]
    fn hong_examples() {
        let r = hong_check(&g(Family::Star, 10)).unwrap();
        assert_eq!(r.equality, Equality::Tight);
        assert_eq!(r.equality_class, Some(EqualityClass::Star));
        assert!((r.lhs - 3.0).abs() < 1e-12 && (r.rhs - 3.0).abs() < 1e-12);
        let r = hong_check(&g(Family::Complete, 4)).unwrap();
        assert_eq!(r.equality, Equality::Tight);
        assert_eq!(r.equality_class, Some(EqualityClass::Complete));
        let r = hong_check(&g(Family::Cycle, 4)).unwrap();
        assert_eq!(r.equality, Equality::Strict);
        assert!((r.rhs - 5f64.sqrt()).abs() < 1e-12);
        assert!(r.equality_case_consistent());
        let split = g(Family::Complete, 2)
            .disjoint_union(&g(Family::Complete, 2))
            .unwrap();
        assert_eq!(hong_check(&split), Err(BoundsError::Disconnected));
    }

    #[test]
    fn p_upper_examples() {
        let r = p_upper_check(&g(Family::Star, 4), 4.0).unwrap();
        assert_eq!(r.connected.equality, Equality::Tight);
        assert!((r.connected.rhs - 18.0).abs() < 1e-12);
        let r = p_upper_check(&g(Family::Complete, 3), 4.0).unwrap();
        assert_eq!(r.connected.equality, Equality::Strict);
        assert!((r.connected.lhs - 18.0).abs() < 1e-9 && (r.connected.rhs - 24.0).abs() < 1e-12);
        // K_3 is complete, so the two right-hand sides coincide.
        assert_eq!(r.sharpness.equality, Equality::Tight);
        let r = p_upper_check(&g(Family::Path, 4), 4.0).unwrap();
        assert!((r.connected.lhs - 14.0).abs() < 1e-9);
        assert!(r.all().iter().all(|b| b.holds));
        assert!(p_upper_check(&g(Family::Path, 4), 2.0).is_err());
    }

    #[test]
    fn general_bound_attained_by_k2() {
        let r = p_upper_check(&g(Family::Complete, 2), 3.0).unwrap();
        assert_eq!(r.general.equality, Equality::Tight);
        assert!(r.general.holds);
    }

    #[test]
    fn e4_examples() {
        let r = e4_check(&g(Family::Star, 6)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equality), (50.0, 50.0, Equality::Tight));
        let r = e4_check(&g(Family::Complete, 4)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equality), (84.0, 108.0, Equality::Strict));
        let r = e4_check(&g(Family::Complete, 2)).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equality), (2.0, 2.0, Equality::Tight));
        assert!(r.equality_case_consistent());
        let (exact, float) = fourth_moment(&g(Family::Path, 4));
        assert_eq!(exact, 14);
        assert!((float - 14.0).abs() < 1e-9);
    }

    #[test]
    fn bipartite_examples() {
        for n in 2..=7 {
            for p in [1.0, 1.3, 2.0] {
                let r = bipartite_lower_check(&g(Family::Star, n), p).unwrap();
                assert_eq!(r.equality, Equality::Tight, "n={n} p={p}");
            }
        }
        let r = bipartite_lower_check(&g(Family::Path, 4), 1.0).unwrap();
        assert!((r.lhs - 2.0 * 5f64.sqrt()).abs() < 1e-9);
        assert!((r.rhs - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.equality, Equality::Strict);
        let r = bipartite_lower_check(&g(Family::Cycle, 6), 2.0).unwrap();
        assert_eq!(r.equality, Equality::Tight);
        assert_eq!(
            bipartite_lower_check(&g(Family::Complete, 3), 1.0),
            Err(BoundsError::NotBipartite)
        );
        assert!(bipartite_lower_check(&g(Family::Path, 3), 2.5).is_err());
    }

    #[test]
    fn key_claim_examples() {
        let k3 = eigenvalues(&g(Family::Complete, 3));
        assert!((key_claim_margin(&k3, 1.0) - (20f64.ln() - 9f64.ln())).abs() < 1e-12);
        let p4 = eigenvalues(&g(Family::Path, 4));
        assert!((key_claim_margin(&p4, 1.0) - (25f64.ln() - 16f64.ln())).abs() < 1e-12);
        let grid = Grid::default_log().points();
        for n in 1..=9 {
            let r = key_claim_check(&g(Family::Star, n), &grid);
            assert!(r.holds && r.min_margin.abs() < 1e-12, "n={n} {r:?}");
            assert_eq!(r.zero.limit_margin.map(|m| m.abs() < 1e-12), Some(true));
        }
        let r = key_claim_check(&g(Family::Cycle, 5), &grid);
        assert!(r.holds && r.min_margin > 0.0);
        assert_eq!((r.zero.lhs_multiplicity, r.zero.rhs_multiplicity), (0, 3));
    }

    #[test]
    fn probe_examples() {
        let near_zero = Grid::log(1e-6, 1e-2, 20).points();
        let r =
            inequality16_probe(&g(Family::Cycle, 4), &g(Family::Path, 4), 4, &near_zero).unwrap();
        assert!(!r.holds && r.min_margin < -0.9, "{r:?}");
        let grid = Grid::log(1e-3, 1e3, 50).points();
        let k4 = g(Family::Complete, 4);
        let r = inequality16_probe(&k4, &k4, 4, &grid).unwrap();
        assert_eq!(r.min_margin, 0.0);
        let r =
            inequality16_probe(&g(Family::Complete, 3), &g(Family::Path, 3), 4, &[0.0]).unwrap();
        assert!((r.min_margin - 4.0).abs() < 1e-12);
    }

    #[test]
    fn grids() {
        let grid: Grid = "1e-3,1e3,7,log".parse().unwrap();
        let pts = grid.points();
        assert_eq!(pts.len(), 7);
        assert_eq!((pts[0], pts[6]), (1e-3, 1e3));
        assert!((pts[3] - 1.0).abs() < 1e-12);
        let lin: Grid = "0,1,5,lin".parse().unwrap();
        assert_eq!(lin.points(), alloc::vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!("0,1,5,log".parse::<Grid>().is_err());
        assert!("1,0,5,lin".parse::<Grid>().is_err());
        assert!("1,2,3".parse::<Grid>().is_err());
    }
}
