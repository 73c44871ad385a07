//! Adaptive Gauss-Legendre quadrature on the unit interval and on the half
//! line `(0, inf)`.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Positive nodes and weights of the 10-point Gauss-Legendre rule on [-1, 1].
const GL_NODES: [f64; 5] = [
    0.148_874_338_981_631_210_88,
    0.433_395_394_129_247_190_80,
    0.679_409_568_299_024_406_23,
    0.865_063_366_688_984_510_73,
    0.973_906_528_517_171_720_08,
];
const GL_WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_870_17,
    0.269_266_719_309_996_355_09,
    0.219_086_362_515_982_044_00,
    0.149_451_349_150_580_593_15,
    0.066_671_344_308_688_137_594,
];
const RULE_POINTS: usize = 10;

/// Closest approach to `z = 0` on the head piece.
pub const MIN_ABSCISSA: f64 = 1e-300;
/// Largest `z` evaluated by the tail map; `z^2` stays finite.
pub const MAX_ABSCISSA: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    /// Absolute tolerance on the returned value.
    pub tol: f64,
    /// Evaluation budget across all pieces.
    pub max_evaluations: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            tol: 1e-9,
            max_evaluations: 1_000_000,
        }
    }
}

impl QuadratureOptions {
    pub fn with_tol(tol: f64) -> Self {
        QuadratureOptions {
            tol,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Multiplies value and error estimate by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        QuadratureResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            ..self
        }
    }

    /// Sum of two independently integrated pieces.
    pub fn combine(self, other: QuadratureResult) -> Self {
        QuadratureResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    /// Difference of two independently integrated results.
    pub fn difference(self, other: QuadratureResult) -> Self {
        self.combine(other.scaled(-1.0))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum QuadratureError {
    /// The weight exponent of `z^(p-1)` must lie in `(0, 2)`.
    WeightOutOfRange(f64),
    InvalidTolerance(f64),
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadratureError::WeightOutOfRange(p) => {
                write!(f, "half-line weight exponent must lie in (0, 2), got {p}")
            }
            QuadratureError::InvalidTolerance(t) => {
                write!(f, "tolerance must be positive and finite, got {t}")
            }
        }
    }
}

impl core::error::Error for QuadratureError {}

fn gauss_legendre<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> f64 {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS) {
        sum += w * (f(centre - half * x) + f(centre + half * x));
    }
    sum * half
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    error: f64,
}

impl Panel {
    fn new<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, whole: f64) -> Panel {
        let m = 0.5 * (a + b);
        let left = gauss_legendre(f, a, m);
        let right = gauss_legendre(f, m, b);
        let error = (whole - (left + right)).abs();
        Panel {
            a,
            b,
            left,
            right,
            error: if error.is_nan() { f64::INFINITY } else { error },
        }
    }

    fn value(&self) -> f64 {
        self.left + self.right
    }

    /// Further bisection cannot help: the panel is at the resolution of
    /// `f64` or its error is at rounding level.
    fn exhausted(&self) -> bool {
        let m = 0.5 * (self.a + self.b);
        m <= self.a
            || m >= self.b
            || self.error <= 4.0 * f64::EPSILON * (self.left.abs() + self.right.abs())
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Integrates `f` over the open interval `(0, 1)`.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate is at most `tol` or the budget is spent. The estimate of a panel
/// is the difference between the 10-point rule on the panel and the sum of
/// the rule on its two halves. Nodes never touch the endpoints.
pub fn integrate_unit<F: FnMut(f64) -> f64>(
    mut f: F,
    tol: f64,
    max_evaluations: usize,
) -> QuadratureResult {
    let whole = gauss_legendre(&mut f, 0.0, 1.0);
    let mut evaluations = 3 * RULE_POINTS;
    let mut heap = BinaryHeap::new();
    let mut settled: Vec<Panel> = Vec::new();
    let first = Panel::new(&mut f, 0.0, 1.0, whole);
    let mut total = first.error;
    heap.push(first);

    let mut splits = 0usize;
    while total > tol && evaluations + 4 * RULE_POINTS <= max_evaluations {
        let Some(worst) = heap.pop() else { break };
        if worst.exhausted() {
            settled.push(worst);
            continue;
        }
        let m = 0.5 * (worst.a + worst.b);
        let left = Panel::new(&mut f, worst.a, m, worst.left);
        let right = Panel::new(&mut f, m, worst.b, worst.right);
        total += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evaluations += 4 * RULE_POINTS;
        splits += 1;
        if splits % 64 == 0 {
            // Re-sum to shed drift from the running update.
            total = heap.iter().chain(&settled).map(|p| p.error).sum();
        }
    }

    let panels = heap.iter().chain(&settled);
    let (value, error) = panels.fold((0.0, 0.0), |(v, e), p| (v + p.value(), e + p.error));
    QuadratureResult {
        value,
        abs_error_estimate: error,
        evaluations,
        converged: error <= tol,
    }
}

/// `integral_0^inf z^(p-1) h(z) dz` for `0 < p < 2`, where `h` is continuous
/// on `(0, inf)`, `h(z) = O(z^-2)` at infinity and at worst logarithmically
/// singular at 0.
///
/// The range is split at `z = 1`. On `[0, 1]` the substitution `z = u^(1/p)`
/// absorbs the weight exactly:
/// `integral_0^1 z^(p-1) h(z) dz = (1/p) integral_0^1 h(u^(1/p)) du`.
/// On `[1, inf)` the substitution `z = s^(-1/(2-p))` absorbs the `z^(p-3)`
/// tail: `integral_1^inf z^(p-1) h(z) dz = 1/(2-p) integral_0^1 z^2 h(z) ds`,
/// which is the plain `z = 1/t` map when `p = 1`. Each piece gets half of
/// the tolerance and half of the budget.
pub fn integrate_half_line<H: Fn(f64) -> f64>(
    h: H,
    p: f64,
    opts: QuadratureOptions,
) -> Result<QuadratureResult, QuadratureError> {
    if !(p > 0.0 && p < 2.0) {
        return Err(QuadratureError::WeightOutOfRange(p));
    }
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(QuadratureError::InvalidTolerance(opts.tol));
    }
    let piece_tol = 0.5 * opts.tol;
    let piece_budget = opts.max_evaluations / 2;

    let inv_p = 1.0 / p;
    let head = integrate_unit(
        |u| h(u.powf(inv_p).max(MIN_ABSCISSA)) * inv_p,
        piece_tol,
        piece_budget,
    );

    let a = 1.0 / (2.0 - p);
    let tail = integrate_unit(
        |s| {
            let z = (-a * s.ln()).exp().min(MAX_ABSCISSA);
            a * z * z * h(z)
        },
        piece_tol,
        piece_budget,
    );
    Ok(head.combine(tail))
}
