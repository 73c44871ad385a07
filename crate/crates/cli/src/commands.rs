//! Subcommand implementations.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use penergy::bounds::{
    bipartite_lower_check, e4_check, hong_check, inequality16_probe, key_claim_check,
    p_upper_check, BoundReport, Grid,
};
use penergy::canon::{canonical_form, CanonicalForm};
use penergy::coulson::{
    cj_difference, coulson_energy, du1_energy, du2_difference, log_ratio_from_spectra,
    QuadratureOptions, QuadratureResult,
};
use penergy::enumerate::{Accumulator, VerificationReport, MAX_GENERATED_ORDER};
use penergy::graph::{Family, Graph};
use penergy::graph6::emit_graph6;
use penergy::spectral::eigenvalues;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::ingest::{ingest_graph6, IngestError, IngestOptions};
use crate::output::{num, Report};
use crate::{Cli, CliError, Command, Method};

/// Exponents checked by `verify` when `--p` is absent.
pub const DEFAULT_VERIFY_EXPONENTS: [f64; 5] = [0.25, 0.5, 1.0, 1.5, 1.9];
const DEFAULT_UPPER_EXPONENTS: [f64; 3] = [2.5, 3.0, 4.0];
const DEFAULT_BIPARTITE_EXPONENTS: [f64; 3] = [1.0, 1.5, 2.0];

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn positive(p: f64) -> Result<f64, CliError> {
    if p > 0.0 && p.is_finite() {
        Ok(p)
    } else {
        Err(usage(format!("--p must be positive and finite, got {p}")))
    }
}

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let opts = QuadratureOptions::with_tol(cli.tol);
    match &cli.command {
        Command::Energy { graph, p } => energy(&graph.resolve()?, *p),
        Command::EnergyIntegral { graph, p } => energy_integral(&graph.resolve()?, *p, opts),
        Command::Compare {
            g1,
            g2,
            p,
            r,
            method,
        } => compare(&g1.resolve()?, &g2.resolve()?, *p, *r, *method, opts),
        Command::Bounds { graph, p } => bounds(&graph.resolve()?, p),
        Command::Claim { graph, grid } => claim(&graph.resolve()?, grid),
        Command::Probe16 { g1, g2, r, grid } => probe16(&g1.resolve()?, &g2.resolve()?, *r, grid),
        Command::Verify {
            n,
            input,
            p,
            target,
            skip_bad_lines,
        } => verify(*n, input.as_deref(), p, *target, *skip_bad_lines, cli.jobs),
        Command::Integrand { g1, g2, p, grid } => {
            integrand(&g1.resolve()?, &g2.resolve()?, *p, grid)
        }
        Command::Gen { .. } => unreachable!("gen streams its output directly"),
    }
}

pub fn energy(g: &Graph, p: f64) -> Result<Report, CliError> {
    let p = positive(p)?;
    let e = eigenvalues(g).p_energy(p).expect("p checked positive");
    let g6 = emit_graph6(g);
    Ok(Report::new(
        json!({ "graph6": g6, "order": g.order(), "size": g.size(), "p": p, "energy": e }),
        vec!["graph6", "order", "size", "p", "energy"],
        vec![vec![
            g6,
            g.order().to_string(),
            g.size().to_string(),
            num(p),
            num(e),
        ]],
    ))
}

fn quadrature_json(r: &QuadratureResult) -> Value {
    serde_json::to_value(r).expect("plain struct")
}

fn warn_not_converged(what: &str, r: &QuadratureResult) {
    if !r.converged {
        eprintln!(
            "penergy: {what} did not converge (error estimate {:e} after {} evaluations)",
            r.abs_error_estimate, r.evaluations
        );
    }
}

pub fn energy_integral(g: &Graph, p: f64, opts: QuadratureOptions) -> Result<Report, CliError> {
    let p = positive(p)?;
    if p >= 2.0 {
        return Err(usage(
            "integral energy formulas cover 0 < p < 2; use `compare --p P --r R` for p > 2",
        ));
    }
    let (method, r) = if p == 1.0 {
        ("coulson", coulson_energy(g, opts))
    } else {
        ("du1", du1_energy(g, p, opts))
    };
    let r = r.map_err(|e| usage(e.to_string()))?;
    warn_not_converged("energy integral", &r);
    let g6 = emit_graph6(g);
    let mut report = Report::new(
        json!({
            "graph6": g6,
            "p": p,
            "method": method,
            "energy": r.value,
            "abs_error_estimate": r.abs_error_estimate,
            "evaluations": r.evaluations,
            "converged": r.converged,
        }),
        vec![
            "graph6",
            "p",
            "method",
            "energy",
            "abs_error_estimate",
            "evaluations",
            "converged",
        ],
        vec![vec![
            g6,
            num(p),
            method.into(),
            num(r.value),
            num(r.abs_error_estimate),
            r.evaluations.to_string(),
            r.converged.to_string(),
        ]],
    );
    report.not_converged = !r.converged;
    Ok(report)
}

/// Smallest even integer above `p` (and at least 4); it satisfies
/// `p < r < 2p` for every `p > 2`.
pub fn default_radix(p: f64) -> u32 {
    (((p / 2.0).floor() as u32) * 2 + 2).max(4)
}

pub fn compare(
    g1: &Graph,
    g2: &Graph,
    p: f64,
    r: Option<u32>,
    method: Method,
    opts: QuadratureOptions,
) -> Result<Report, CliError> {
    let p = positive(p)?;
    if g1.order() != g2.order() {
        return Err(usage(format!(
            "graphs must have equal order, got {} and {}",
            g1.order(),
            g2.order()
        )));
    }
    if p <= 2.0 && r.is_some() {
        return Err(usage("--r applies only to p > 2"));
    }
    let wants_integral = method != Method::Direct;
    if p == 2.0 && wants_integral {
        return Err(usage(
            "no difference integral at p = 2 (E_2 = 2m); use --method direct",
        ));
    }
    let direct = (method != Method::Integral).then(|| {
        eigenvalues(g1).p_energy(p).expect("p > 0") - eigenvalues(g2).p_energy(p).expect("p > 0")
    });
    let radix = (p > 2.0).then(|| r.unwrap_or_else(|| default_radix(p)));
    let integral = if wants_integral {
        let result = match radix {
            None => cj_difference(g1, g2, p, opts),
            Some(r) => du2_difference(g1, g2, p, r, opts),
        };
        Some(result.map_err(|e| usage(e.to_string()))?)
    } else {
        None
    };
    let formula = match (wants_integral, radix) {
        (false, _) => None,
        (true, None) => Some("cj"),
        (true, Some(_)) => Some("du2"),
    };
    let experimental = radix.is_some_and(|r| r >= 6) && wants_integral;
    let abs_difference = match (direct, &integral) {
        (Some(d), Some(i)) => Some((d - i.value).abs()),
        _ => None,
    };
    if let Some(i) = &integral {
        warn_not_converged("difference integral", i);
    }
    let mut report = Report::new(
        json!({
            "graph6": [emit_graph6(g1), emit_graph6(g2)],
            "p": p,
            "r": radix,
            "formula": formula,
            "direct": direct,
            "integral": integral.as_ref().map(quadrature_json),
            "abs_difference": abs_difference,
            "experimental": experimental,
        }),
        vec![
            "g1",
            "g2",
            "p",
            "r",
            "formula",
            "direct",
            "integral",
            "abs_error_estimate",
            "abs_difference",
            "experimental",
        ],
        vec![vec![
            emit_graph6(g1),
            emit_graph6(g2),
            num(p),
            radix.map(|r| r.to_string()).unwrap_or_default(),
            formula.unwrap_or("").into(),
            direct.map(num).unwrap_or_default(),
            integral.as_ref().map(|i| num(i.value)).unwrap_or_default(),
            integral
                .as_ref()
                .map(|i| num(i.abs_error_estimate))
                .unwrap_or_default(),
            abs_difference.map(num).unwrap_or_default(),
            experimental.to_string(),
        ]],
    );
    report.not_converged = integral.is_some_and(|i| !i.converged);
    Ok(report)
}

fn require_connected(g: &Graph) -> Result<(), CliError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(usage("the checks require a connected graph"))
    }
}

fn bound_row(p: Option<f64>, b: &BoundReport) -> Vec<String> {
    let class = b.equality_class.map(|c| {
        serde_json::to_value(c)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    });
    vec![
        b.name.to_string(),
        p.map(num).unwrap_or_default(),
        num(b.lhs),
        num(b.rhs),
        num(b.margin),
        b.holds.to_string(),
        format!("{:?}", b.equality).to_lowercase(),
        class.unwrap_or_default(),
        b.equality_case_consistent().to_string(),
    ]
}

pub fn bounds(g: &Graph, exponents: &[f64]) -> Result<Report, CliError> {
    require_connected(g)?;
    let (upper, lower): (Vec<f64>, Vec<f64>) = if exponents.is_empty() {
        (
            DEFAULT_UPPER_EXPONENTS.to_vec(),
            DEFAULT_BIPARTITE_EXPONENTS.to_vec(),
        )
    } else {
        for &p in exponents {
            if !(p >= 1.0 && p.is_finite()) {
                return Err(usage(format!(
                    "bound exponents must be in [1, 2] or above 2, got {p}"
                )));
            }
        }
        exponents.iter().partition(|&&p| p > 2.0)
    };
    let mut checks: Vec<(Option<f64>, BoundReport)> = Vec::new();
    let hypothesis = |e: penergy::bounds::BoundsError| usage(e.to_string());
    checks.push((None, hong_check(g).map_err(hypothesis)?));
    checks.push((None, e4_check(g).map_err(hypothesis)?));
    for p in upper {
        let reports = p_upper_check(g, p).map_err(hypothesis)?;
        checks.extend(reports.all().into_iter().map(|b| (Some(p), b.clone())));
    }
    let bipartite = g.is_bipartite();
    if bipartite {
        for p in lower {
            checks.push((Some(p), bipartite_lower_check(g, p).map_err(hypothesis)?));
        }
    }
    let violations: Vec<Value> = checks
        .iter()
        .filter(|(_, b)| !b.holds || !b.equality_case_consistent())
        .map(|(p, b)| {
            let reason = if b.holds { "equality case" } else { "bound" };
            json!({ "name": b.name, "p": p, "reason": reason })
        })
        .collect();
    let reports: Vec<Value> = checks
        .iter()
        .map(|(p, b)| {
            let mut v = serde_json::to_value(b).expect("plain struct");
            v["p"] = json!(p);
            v["equality_case_consistent"] = json!(b.equality_case_consistent());
            v
        })
        .collect();
    let rows = checks.iter().map(|(p, b)| bound_row(*p, b)).collect();
    let mut report = Report::new(
        json!({
            "graph6": emit_graph6(g),
            "bipartite": bipartite,
            "reports": reports,
            "violations": violations,
        }),
        vec![
            "name",
            "p",
            "lhs",
            "rhs",
            "margin",
            "holds",
            "equality",
            "equality_class",
            "equality_case_consistent",
        ],
        rows,
    );
    report.has_violations = !violations.is_empty();
    Ok(report)
}

pub fn claim(g: &Graph, grid: &Option<Grid>) -> Result<Report, CliError> {
    require_connected(g)?;
    let points = grid.unwrap_or_else(Grid::default_log).points();
    let r = key_claim_check(g, &points);
    let violations: Vec<&str> = if r.holds { vec![] } else { vec!["key_claim"] };
    let mut json = serde_json::to_value(&r).expect("plain struct");
    json["graph6"] = json!(emit_graph6(g));
    json["violations"] = json!(violations);
    let mut report = Report::new(
        json,
        vec![
            "graph6",
            "min_margin",
            "argmin",
            "grid_points",
            "zero_lhs_multiplicity",
            "zero_rhs_multiplicity",
            "zero_limit_margin",
            "holds",
        ],
        vec![vec![
            emit_graph6(g),
            num(r.min_margin),
            num(r.argmin),
            r.grid_points.to_string(),
            r.zero.lhs_multiplicity.to_string(),
            r.zero.rhs_multiplicity.to_string(),
            r.zero.limit_margin.map(num).unwrap_or_default(),
            r.holds.to_string(),
        ]],
    );
    report.has_violations = !r.holds;
    Ok(report)
}

pub fn probe16(g1: &Graph, g2: &Graph, r: u32, grid: &Option<Grid>) -> Result<Report, CliError> {
    let points = grid.unwrap_or_else(|| Grid::log(1e-4, 1e2, 61)).points();
    let probe = inequality16_probe(g1, g2, r, &points).map_err(|e| usage(e.to_string()))?;
    let mut json = serde_json::to_value(&probe).expect("plain struct");
    json["graph6"] = json!([emit_graph6(g1), emit_graph6(g2)]);
    json["r"] = json!(r);
    Ok(Report::new(
        json,
        vec![
            "g1",
            "g2",
            "r",
            "min_margin",
            "argmin",
            "grid_points",
            "holds",
        ],
        vec![vec![
            emit_graph6(g1),
            emit_graph6(g2),
            r.to_string(),
            num(probe.min_margin),
            num(probe.argmin),
            probe.grid_points.to_string(),
            probe.holds.to_string(),
        ]],
    ))
}

pub fn integrand(g1: &Graph, g2: &Graph, p: f64, grid: &Option<Grid>) -> Result<Report, CliError> {
    let p = positive(p)?;
    if g1.order() != g2.order() {
        return Err(usage("graphs must have equal order"));
    }
    let (f, g) = (eigenvalues(g1), eigenvalues(g2));
    let samples: Vec<(f64, f64)> = grid
        .unwrap_or_else(Grid::default_log)
        .points()
        .into_iter()
        .filter(|z| *z > 0.0)
        .map(|z| (z, log_ratio_from_spectra(&f, &g, p, z)))
        .collect();
    Ok(Report::new(
        json!(samples
            .iter()
            .map(|(z, v)| json!({ "z": z, "integrand": v }))
            .collect::<Vec<_>>()),
        vec!["z", "integrand"],
        samples
            .iter()
            .map(|(z, v)| vec![num(*z), num(*v)])
            .collect(),
    ))
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    builder
        .build()
        .map_err(|e| usage(format!("cannot start worker pool: {e}")))
}

/// Connected graphs on `n` vertices, augmenting each level in parallel.
pub fn connected_graphs_parallel(n: usize, jobs: Option<usize>) -> Result<Vec<Graph>, CliError> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(usage(format!(
            "--n must be in 1..={MAX_GENERATED_ORDER}; read larger corpora with --in"
        )));
    }
    pool(jobs)?.install(|| {
        let mut level = vec![Graph::empty(1).expect("K_1")];
        for _ in 2..=n {
            let forms: BTreeSet<CanonicalForm> = level
                .par_iter()
                .flat_map_iter(|parent| {
                    (1..1u64 << parent.order()).map(move |mask| {
                        let child = parent.with_new_vertex(mask).expect("small order");
                        canonical_form(&child).expect("small order")
                    })
                })
                .collect();
            level = forms.into_iter().map(|f| f.to_graph()).collect();
        }
        Ok(level)
    })
}

pub fn gen(n: usize, jobs: Option<usize>, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = connected_graphs_parallel(n, jobs)?;
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g))?;
    }
    eprintln!("penergy: {} connected graphs on {n} vertices", graphs.len());
    Ok(())
}

fn load_corpus(
    n: Option<usize>,
    input: Option<&Path>,
    skip_bad_lines: bool,
    jobs: Option<usize>,
) -> Result<(usize, Vec<Graph>), CliError> {
    let Some(path) = input else {
        let n = n.ok_or_else(|| usage("verify needs --n or --in"))?;
        return Ok((n, connected_graphs_parallel(n, jobs)?));
    };
    let opts = IngestOptions {
        skip_bad_lines,
        connected_only: true,
    };
    let ingested = ingest_graph6(path, opts).map_err(|e| match e {
        IngestError::Io(e) => usage(format!("{}: {e}", path.display())),
        IngestError::Line(e) => CliError::Parse(format!("{}: {e}", path.display())),
    })?;
    for bad in &ingested.bad_lines {
        eprintln!("penergy: {}: skipped {bad}", path.display());
    }
    if ingested.disconnected > 0 {
        eprintln!(
            "penergy: {}: skipped {} disconnected graphs",
            path.display(),
            ingested.disconnected
        );
    }
    let order = match (n, ingested.graphs.first()) {
        (Some(n), _) => n,
        (None, Some(g)) => g.order(),
        (None, None) => return Err(usage(format!("{}: no connected graphs", path.display()))),
    };
    if let Some(g) = ingested.graphs.iter().find(|g| g.order() != order) {
        return Err(usage(format!(
            "{}: mixed orders in corpus ({} and {order})",
            path.display(),
            g.order()
        )));
    }
    Ok((order, ingested.graphs))
}

/// Runs one accumulator per exponent over the corpus, one graph per task,
/// computing each spectrum once.
pub fn verify_corpus(
    n: usize,
    exponents: &[f64],
    target: Family,
    corpus: &[Graph],
    jobs: Option<usize>,
) -> Result<Vec<VerificationReport>, CliError> {
    let template: Vec<Accumulator> = exponents
        .iter()
        .map(|&p| Accumulator::new(n, p, target))
        .collect::<Result<_, _>>()
        .map_err(|e| usage(e.to_string()))?;
    let accs = pool(jobs)?.install(|| {
        corpus
            .par_iter()
            .try_fold(
                || template.clone(),
                |mut accs, g| {
                    let spectrum = eigenvalues(g);
                    for acc in &mut accs {
                        acc.observe_spectrum(g, &spectrum)?;
                    }
                    Ok(accs)
                },
            )
            .try_reduce(
                || template.clone(),
                |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()),
            )
    });
    let accs = accs.map_err(|e: penergy::enumerate::EnumerateError| usage(e.to_string()))?;
    Ok(accs.into_iter().map(Accumulator::finish).collect())
}

pub fn verify(
    n: Option<usize>,
    input: Option<&Path>,
    exponents: &[f64],
    target: Family,
    skip_bad_lines: bool,
    jobs: Option<usize>,
) -> Result<Report, CliError> {
    let exponents: Vec<f64> = if exponents.is_empty() {
        DEFAULT_VERIFY_EXPONENTS.to_vec()
    } else {
        exponents
            .iter()
            .map(|&p| positive(p))
            .collect::<Result<_, _>>()?
    };
    let (order, corpus) = load_corpus(n, input, skip_bad_lines, jobs)?;
    let reports = verify_corpus(order, &exponents, target, &corpus, jobs)?;
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                num(r.p),
                r.target.to_string(),
                r.graph_count.to_string(),
                num(r.min_energy),
                r.unique_minimizer.to_string(),
                r.violations.len().to_string(),
            ]
        })
        .collect();
    let mut report = Report::new(
        json!({ "reports": reports }),
        vec![
            "n",
            "p",
            "target",
            "count",
            "min_energy",
            "unique",
            "violations",
        ],
        rows,
    );
    report.has_violations = reports.iter().any(|r| !r.violations.is_empty());
    Ok(report)
}
