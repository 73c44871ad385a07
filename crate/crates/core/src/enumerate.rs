//! Exhaustive generation of small connected graphs and extremal-energy
//! verification over a corpus.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{named_graph, Family, Graph};
use crate::graph6::emit_graph6;
use crate::spectral::{eigenvalues, Spectrum};

/// Largest order generated directly; larger corpora are read from graph6.
pub const MAX_GENERATED_ORDER: usize = 8;

/// A graph counts as a violation when its energy is below the target energy
/// by more than this, scaled by `max(1, target energy)`.
pub const VIOLATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum EnumerateError {
    UnsupportedOrder {
        order: usize,
    },
    /// Only stars and paths are extremal targets.
    UnsupportedTarget(Family),
    NonPositiveExponent(f64),
    OrderMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::UnsupportedOrder { order } => write!(
                f,
                "connected graphs are generated for orders 1..={MAX_GENERATED_ORDER}, got {order}; \
                 read larger corpora from a graph6 file"
            ),
            EnumerateError::UnsupportedTarget(family) => {
                write!(f, "extremal target must be star or path, got {family}")
            }
            EnumerateError::NonPositiveExponent(p) => {
                write!(f, "energy exponent must be positive, got {p}")
            }
            EnumerateError::OrderMismatch { expected, found } => {
                write!(f, "corpus graph has order {found}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

/// Connected graphs on `n` vertices obtained from `parents` (connected graphs
/// on `n - 1` vertices) by adding a vertex joined to every nonempty subset,
/// one canonical representative per isomorphism class, in canonical-form order.
///
/// Every connected graph on `n >= 2` vertices has a non-cut vertex, and
/// deleting it leaves a connected graph, so this is complete when `parents`
/// covers all classes of order `n - 1`.
pub fn augment(parents: &[Graph]) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for parent in parents {
        let k = parent.order();
        for mask in 1..(1u64 << k) {
            let child = parent
                .with_new_vertex(mask)
                .expect("order below the graph limit");
            let form = canonical_form(&child).expect("order below the canonical limit");
            seen.entry(form).or_insert(());
        }
    }
    seen.into_keys().map(|form| form.to_graph()).collect()
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, `1 <= n <= 8`. Each representative is in canonical labelling.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(EnumerateError::UnsupportedOrder { order: n });
    }
    let mut level = alloc::vec![Graph::empty(1).expect("K_1")];
    for _ in 2..=n {
        level = augment(&level);
    }
    Ok(level)
}

/// Which statement a verification run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Star target, `0 < p < 2`: the star is the unique minimizer.
    StarTheorem,
    /// Path target, `p = 2k` with `k >= 2`: the path minimizes `E_p`.
    EvenMomentTheorem,
    /// Any other combination; nothing is claimed.
    Exploration,
}

impl Regime {
    pub fn classify(target: Family, p: f64) -> Regime {
        let even_moment = p >= 4.0 && p % 2.0 == 0.0;
        match target {
            Family::Star if p > 0.0 && p < 2.0 => Regime::StarTheorem,
            Family::Path if even_moment => Regime::EvenMomentTheorem,
            _ => Regime::Exploration,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub p: f64,
    pub target: Family,
    pub regime: Regime,
    pub target_energy: f64,
    pub graph_count: usize,
    pub min_energy: f64,
    pub argmin: BTreeSet<CanonicalForm>,
    pub violations: Vec<Violation>,
    pub unique_minimizer: bool,
}

/// Streaming state of an extremal verification. Accumulators over disjoint
/// parts of a corpus combine with [`Accumulator::merge`], which is
/// associative and commutative up to the order of the violation list.
#[derive(Debug, Clone)]
pub struct Accumulator {
    n: usize,
    p: f64,
    target: Family,
    target_energy: f64,
    count: usize,
    min_energy: f64,
    /// Graphs within tolerance of `min_energy`, with their energies.
    candidates: Vec<(f64, Graph)>,
    violations: Vec<Violation>,
}

impl Accumulator {
    pub fn new(n: usize, p: f64, target: Family) -> Result<Self, EnumerateError> {
        if !(p > 0.0) {
            return Err(EnumerateError::NonPositiveExponent(p));
        }
        if !matches!(target, Family::Star | Family::Path) {
            return Err(EnumerateError::UnsupportedTarget(target));
        }
        let reference =
            named_graph(target, n).map_err(|_| EnumerateError::UnsupportedOrder { order: n })?;
        let target_energy = eigenvalues(&reference).p_energy(p).expect("p > 0");
        Ok(Accumulator {
            n,
            p,
            target,
            target_energy,
            count: 0,
            min_energy: f64::INFINITY,
            candidates: Vec::new(),
            violations: Vec::new(),
        })
    }

    fn tolerance(&self) -> f64 {
        VIOLATION_TOLERANCE * self.target_energy.abs().max(1.0)
    }

    pub fn target_energy(&self) -> f64 {
        self.target_energy
    }

    pub fn observe(&mut self, g: &Graph) -> Result<(), EnumerateError> {
        self.observe_spectrum(g, &eigenvalues(g))
    }

    /// Like [`Accumulator::observe`] with a precomputed spectrum of `g`, so
    /// that one spectrum serves several exponents.
    pub fn observe_spectrum(
        &mut self,
        g: &Graph,
        spectrum: &Spectrum,
    ) -> Result<(), EnumerateError> {
        if g.order() != self.n {
            return Err(EnumerateError::OrderMismatch {
                expected: self.n,
                found: g.order(),
            });
        }
        let energy = spectrum.p_energy(self.p).expect("p > 0");
        self.count += 1;
        if energy < self.target_energy - self.tolerance() {
            self.violations.push(Violation {
                graph6: emit_graph6(g),
                energy,
            });
        }
        self.offer(energy, g.clone());
        Ok(())
    }

    fn offer(&mut self, energy: f64, g: Graph) {
        let tol = self.tolerance();
        if energy < self.min_energy {
            self.min_energy = energy;
            self.candidates.retain(|(e, _)| *e <= energy + tol);
        }
        if energy <= self.min_energy + tol {
            self.candidates.push((energy, g));
        }
    }

    /// Combines two accumulators for the same `(n, p, target)`.
    pub fn merge(mut self, other: Accumulator) -> Accumulator {
        assert!(
            self.n == other.n && self.p == other.p && self.target == other.target,
            "merging accumulators of different runs"
        );
        self.count += other.count;
        self.violations.extend(other.violations);
        for (e, g) in other.candidates {
            self.offer(e, g);
        }
        self
    }

    pub fn finish(self) -> VerificationReport {
        let argmin: BTreeSet<CanonicalForm> = self
            .candidates
            .iter()
            .map(|(_, g)| canonical_form(g).expect("generated orders are canonicalizable"))
            .collect();
        let target_form = canonical_form(&named_graph(self.target, self.n).expect("order checked"))
            .expect("generated orders are canonicalizable");
        let unique_minimizer = argmin.len() == 1 && argmin.contains(&target_form);
        VerificationReport {
            n: self.n,
            p: self.p,
            target: self.target,
            regime: Regime::classify(self.target, self.p),
            target_energy: self.target_energy,
            graph_count: self.count,
            min_energy: self.min_energy,
            argmin,
            violations: self.violations,
            unique_minimizer,
        }
    }
}

/// Verifies that `target` minimizes `E_p` over `source`, a corpus of
/// connected graphs of order `n`.
pub fn verify_extremal<'a, I>(
    n: usize,
    p: f64,
    target: Family,
    source: I,
) -> Result<VerificationReport, EnumerateError>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut acc = Accumulator::new(n, p, target)?;
    for g in source {
        acc.observe(g)?;
    }
    Ok(acc.finish())
}
