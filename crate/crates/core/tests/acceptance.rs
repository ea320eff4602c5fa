//! Acceptance suite. Runs every criterion, prints one pass/fail line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sgspec::enumerate::{run_sweep, sweep_instances, EnumConfig, EnumReport};
use sgspec::formulas::{cycle_double_eigenvalues, cycle_spectrum};
use sgspec::linalg::{
    adjacency, cluster, cluster_tolerance, eigen_symmetric, interlace_check, multiplicity_exact,
    numeric_multiplicity, spectrum, Rational, EIGEN_TOL,
};
use sgspec::theorems::{bound_report, check_cycle_theorems, ExtremalCase, Lambda};
use sgspec::{SignedGraph, SwitchingFunction};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let elapsed = start.elapsed();
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn complete_graphs() -> Outcome {
    let start = Instant::now();
    for n in 3..=10 {
        let g = SignedGraph::complete(n).map_err(|e| e.to_string())?;
        let m = multiplicity_exact(&g, Rational::integer(-1));
        ensure(m == n - 1, || format!("K_{n}: m(-1) = {m}"))?;
        let report = bound_report(&g).map_err(|e| e.to_string())?;
        let row = report
            .rows
            .iter()
            .find(|r| r.lambda == Lambda::Exact(Rational::integer(-1)))
            .ok_or_else(|| format!("K_{n}: no row for -1"))?;
        ensure(row.slack == 0, || {
            format!("K_{n}: slack {} at -1", row.slack)
        })?;
    }
    within(Duration::from_secs(1), start)?;
    Ok("m(K_n, -1) = n - 1 with slack 0 for n = 3..10".into())
}

fn complete_bipartite_graphs() -> Outcome {
    let start = Instant::now();
    for n1 in 2..=5 {
        for n2 in n1..=5 {
            let g = SignedGraph::complete_bipartite(n1, n2).map_err(|e| e.to_string())?;
            let m = multiplicity_exact(&g, Rational::integer(0));
            ensure(m == n1 + n2 - 2, || format!("K_{{{n1},{n2}}}: m(0) = {m}"))?;
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok("m(K_{n1,n2}, 0) = n - 2 for 2 <= n1 <= n2 <= 5".into())
}

fn nullity_regression() -> Outcome {
    let start = Instant::now();
    for (n, balanced, expected) in [(8, true, 2), (6, false, 2), (6, true, 0)] {
        let g = SignedGraph::cycle(n, balanced).map_err(|e| e.to_string())?;
        let m = multiplicity_exact(&g, Rational::integer(0));
        ensure(m == expected, || {
            format!("C_{n} balanced={balanced}: m(0) = {m}")
        })?;
        let girth = g.girth().map_err(|e| e.to_string())?.length;
        if expected == 2 {
            ensure(m + girth == n + 2, || format!("C_{n}: m(0) != n - g + 2"))?;
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok("positive C_8 and negative C_6 have m(0) = 2 = n - g + 2; positive C_6 has m(0) = 0".into())
}

fn closed_form_oracle() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 3..=64 {
        for balanced in [true, false] {
            let g = SignedGraph::cycle(n, balanced).map_err(|e| e.to_string())?;
            let numeric = eigen_symmetric(&adjacency(&g), EIGEN_TOL).map_err(|e| e.to_string())?;
            let closed = cycle_spectrum(n, balanced)
                .map_err(|e| e.to_string())?
                .eigenvalues();
            for (a, b) in numeric.eigenvalues.iter().zip(&closed) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:e}"))?;
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "cycle spectra n = 3..64, max deviation {worst:.2e}"
    ))
}

fn cycle_multiplicities() -> Outcome {
    let start = Instant::now();
    for n in 3..=20 {
        for balanced in [true, false] {
            let v = check_cycle_theorems(n, balanced).map_err(|e| e.to_string())?;
            ensure(v.consistent, || format!("C_{n} balanced={balanced}: {v:?}"))?;
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok("simple and double eigenvalue sets match for n = 3..20, both signs".into())
}

fn bound_soundness(report: &EnumReport, elapsed: Duration) -> Outcome {
    ensure(report.bound_violations == 0, || {
        format!("{} instances with negative slack", report.bound_violations)
    })?;
    ensure(elapsed < Duration::from_secs(300), || {
        format!("sweep took {elapsed:?}")
    })?;
    Ok(format!(
        "{} instances (n <= 6), zero negative slack, {:.2} s single-threaded",
        report.instances_checked,
        elapsed.as_secs_f64()
    ))
}

fn matching_cases(g: &SignedGraph) -> usize {
    let kind = g.balance_class().map(|b| b.kind);
    let Ok(kind) = kind else { return 0 };
    let bipartite = g
        .complete_bipartition()
        .is_some_and(|(a, b)| a.len() >= 2 && b.len() >= 2);
    [
        g.is_complete() && kind.is_balanced(),
        g.is_complete() && kind.is_antibalanced(),
        bipartite && kind.is_balanced(),
    ]
    .into_iter()
    .filter(|&b| b)
    .count()
}

fn equality_audit(first: &EnumReport, second: &EnumReport) -> Outcome {
    for eq in &first.equalities {
        let g = &eq.graph;
        if g.is_cycle() {
            let balanced = g.girth().map_err(|e| e.to_string())?.sign.is_positive();
            let expected = cycle_double_eigenvalues(g.n(), balanced).map_err(|e| e.to_string())?;
            let mut got: Vec<f64> = eq.lambdas.iter().map(Lambda::value).collect();
            got.sort_by(|a, b| b.total_cmp(a));
            let same = got.len() == expected.len()
                && got
                    .iter()
                    .zip(&expected)
                    .all(|(a, b)| (a - b).abs() < 1e-10);
            ensure(eq.case == ExtremalCase::CycleQ2 && same, || {
                format!("cycle {:?}: {:?} vs {expected:?}", g.edges(), eq.lambdas)
            })?;
        } else {
            let named = matches!(
                eq.case,
                ExtremalCase::BalancedComplete
                    | ExtremalCase::AntibalancedComplete
                    | ExtremalCase::BalancedCompleteBipartite
            );
            ensure(named && matching_cases(g) == 1, || {
                format!("non-cycle {:?} classified {:?}", g.edges(), eq.case)
            })?;
        }
    }
    let a = serde_json::to_string_pretty(&first.certificates).map_err(|e| e.to_string())?;
    let b = serde_json::to_string_pretty(&second.certificates).map_err(|e| e.to_string())?;
    ensure(a == b, || "certificate lists differ between runs".into())?;
    ensure(first.certificates.iter().all(|c| c.reproduces()), || {
        "a certificate does not reproduce".into()
    })?;
    let archive = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("certificates_n6.json");
    std::fs::write(&archive, &a).map_err(|e| e.to_string())?;
    if !first.certificates.is_empty() {
        println!("!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!");
        println!(
            "!!! {} COUNTEREXAMPLE CERTIFICATE(S) for n <= 6, see {}",
            first.certificates.len(),
            archive.display()
        );
        println!("!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!");
    }
    Ok(format!(
        "{} equality instances audited, {} certificates (reproducible, archived to {})",
        first.equalities.len(),
        first.certificates.len(),
        archive.display()
    ))
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst_interlace = f64::INFINITY;
    for i in 0..1000 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.1..0.9);
        let g = common::random_connected(&mut rng, n, density);
        let mut subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        if subset.is_empty() {
            subset.push(rng.gen_range(0..n));
        }
        let v = interlace_check(&g, &subset, 1e-9).map_err(|e| e.to_string())?;
        worst_interlace = worst_interlace.min(v.worst_margin);
        ensure(v.holds, || {
            format!("interlacing case {i} fails, margin {}", v.worst_margin)
        })?;
    }
    let mut worst_switch: f64 = 0.0;
    for i in 0..1000 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.1..0.9);
        let g = common::random_connected(&mut rng, n, density);
        let flips: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let z = SwitchingFunction::flipping(n, &flips).map_err(|e| e.to_string())?;
        let a = spectrum(&g).map_err(|e| e.to_string())?.eigenvalues;
        let b = spectrum(&g.switch(&z).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .eigenvalues;
        let dev = a
            .iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        worst_switch = worst_switch.max(dev);
        ensure(dev <= 2e-12, || {
            format!("switching case {i} deviates by {dev:e}")
        })?;
    }
    let instances = sweep_instances(3, 6).map_err(|e| e.to_string())?;
    let mut worst_frob: f64 = 0.0;
    for g in &instances {
        let s = spectrum(g).map_err(|e| e.to_string())?;
        let dev = (s.sum_of_squares() - 2.0 * g.edge_count() as f64).abs();
        worst_frob = worst_frob.max(dev);
        ensure(dev < 1e-8, || {
            format!("Frobenius deviation {dev:e} on {:?}", g.edges())
        })?;
        let tol = cluster_tolerance(g);
        let clusters = cluster(&s, tol);
        for k in -2i64..=2 {
            let exact = multiplicity_exact(g, Rational::integer(k));
            let numeric = numeric_multiplicity(&clusters, k as f64, tol);
            ensure(exact == numeric, || {
                format!(
                    "lambda {k}: exact {exact}, clustered {numeric} on {:?}",
                    g.edges()
                )
            })?;
        }
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!(
        "interlacing worst margin {worst_interlace:.2e}, switching max deviation {worst_switch:.1e}, \
         Frobenius max deviation {worst_frob:.1e} and exact/clustered agreement on {} instances",
        instances.len()
    ))
}

fn determinism() -> Outcome {
    let run = |jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_sgspec"))
            .args(["enumerate", "--max-n", "5", "--json", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("jobs {jobs}: exit {}", out.status)
        })?;
        Ok(out.stdout)
    };
    let one = run("1")?;
    let eight = run("8")?;
    ensure(one == eight, || {
        "reports differ between jobs 1 and 8".into()
    })?;
    Ok(format!(
        "jobs 1 and 8 produce identical {}-byte reports for max_n = 5",
        one.len()
    ))
}

fn main() {
    let mut results: Vec<(u32, Outcome)> = vec![
        (1, complete_graphs()),
        (2, complete_bipartite_graphs()),
        (3, nullity_regression()),
        (4, closed_form_oracle()),
        (5, cycle_multiplicities()),
    ];

    let start = Instant::now();
    let sweep = run_sweep(&EnumConfig::new(6).with_jobs(1));
    let elapsed = start.elapsed();
    match sweep {
        Ok(report) => {
            results.push((6, bound_soundness(&report, elapsed)));
            let again = run_sweep(&EnumConfig::new(6).with_jobs(1));
            results.push((
                7,
                again
                    .map_err(|e| e.to_string())
                    .and_then(|second| equality_audit(&report, &second)),
            ));
        }
        Err(e) => {
            results.push((6, Err(e.to_string())));
            results.push((7, Err(e.to_string())));
        }
    }
    results.push((8, property_suite()));
    results.push((9, determinism()));

    let mut failed = 0;
    for (id, outcome) in &results {
        match outcome {
            Ok(msg) => println!("[PASS] criterion {id}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
