//! Command-line front end. [`run`] does all the work and returns what to
//! print, so the binary is a thin wrapper and tests can drive it in-process.
//!
//! Exit codes: 0 ok, 1 internal error, 2 parse or usage error, 3 disconnected
//! graph, 4 acyclic graph, 5 bound violation.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{run_sweep, Check, EnumConfig, EnumReport};
use crate::error::Error;
use crate::format::{parse_graph, write_graph};
use crate::formulas::{cycle_double_eigenvalues, cycle_simple_eigenvalues, cycle_spectrum};
use crate::graph::{CycleWitness, Sign, SignedGraph, SwitchingFunction};
use crate::report::{spectrum_report, verify_report};
use crate::theorems::{format_real, multiplicities};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_ACYCLIC: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "sgspec",
    version,
    about = "Spectra, balance and girth bounds of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the clustered spectrum of a graph file.
    Spectrum {
        /// Graph file, or `-` for stdin.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the balance class, girth and witnesses.
    Classify { file: String },
    /// Check the girth bound and report the extremal verdict as JSON.
    Verify {
        file: String,
        /// Include exact-versus-numeric multiplicity checks in the report.
        #[arg(long)]
        exact: bool,
    },
    /// Sweep all small connected signed graphs.
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Comma-separated subset of bound, theorem1, theorem2, cycles, rank2.
        #[arg(long, default_value = "bound,theorem1,theorem2,cycles,rank2")]
        checks: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph file for one of the extremal families.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Size of the second part for complete bipartite graphs.
        #[arg(long)]
        n2: Option<usize>,
        #[command(flatten)]
        signing: Signing,
        /// Apply a random switching drawn from this seed.
        #[arg(long)]
        switch_seed: Option<u64>,
    },
    /// Tabulate the closed-form spectrum of a signed cycle.
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        signing: Signing,
    },
    /// Switch a graph at a vertex set.
    Switch {
        file: String,
        /// Comma-separated 1-based vertices; empty means the identity.
        #[arg(long, default_value = "")]
        vertices: String,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Signing {
    #[arg(long)]
    balanced: bool,
    #[arg(long)]
    unbalanced: bool,
}

impl Signing {
    fn is_balanced(&self) -> bool {
        !self.unbalanced
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    BalancedComplete,
    AntibalancedComplete,
    BalancedCompleteBipartite,
    Cycle,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Outcome {
        Outcome {
            code: exit_code(err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Disconnected => EXIT_DISCONNECTED,
        Error::AcyclicGraph => EXIT_ACYCLIC,
        Error::NoConvergence(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command. `stdin` is read
/// only when a file argument is `-`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    match command {
        Command::Spectrum { file, json } => cmd_spectrum(&read_graph(&file, stdin)?, json),
        Command::Classify { file } => cmd_classify(&read_graph(&file, stdin)?),
        Command::Verify { file, exact } => cmd_verify(&read_graph(&file, stdin)?, exact),
        Command::Enumerate {
            max_n,
            min_n,
            jobs,
            checks,
            json,
        } => {
            let checks = checks
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Check>, Error>>()?;
            let cfg = EnumConfig {
                min_n,
                max_n,
                jobs,
                checks: checks.into_iter().collect(),
            };
            cmd_enumerate(&cfg, json)
        }
        Command::Generate {
            family,
            n,
            n2,
            signing,
            switch_seed,
        } => cmd_generate(family, n, n2, signing.is_balanced(), switch_seed),
        Command::Cycle { n, signing } => cmd_cycle(n, signing.is_balanced()),
        Command::Switch { file, vertices } => cmd_switch(&read_graph(&file, stdin)?, &vertices),
    }
}

fn read_graph(file: &str, stdin: &mut dyn Read) -> Result<SignedGraph, Error> {
    let io_error = |e: std::io::Error| Error::Parse {
        line: 0,
        message: format!("cannot read {file}: {e}"),
    };
    let text = if file == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(io_error)?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(io_error)?
    };
    parse_graph(&text)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_spectrum(g: &SignedGraph, json: bool) -> Result<Outcome, Error> {
    g.ensure_connected()?;
    if json {
        return Ok(Outcome::ok(to_json(&spectrum_report(g)?)));
    }
    let m = multiplicities(g)?;
    let parts: Vec<String> = m
        .rows
        .iter()
        .map(|r| format!("{} (x{})", r.lambda, r.multiplicity))
        .collect();
    Ok(Outcome::ok(format!("{}\n", parts.join(", "))))
}

fn one_based(vertices: &[usize]) -> String {
    let v: Vec<String> = vertices.iter().map(|x| (x + 1).to_string()).collect();
    v.join(" ")
}

fn describe_cycle(w: &CycleWitness) -> String {
    format!("{} (sign {})", one_based(&w.vertices), w.sign)
}

fn cmd_classify(g: &SignedGraph) -> Result<Outcome, Error> {
    let class = g.balance_class()?;
    let mut out = String::new();
    writeln!(out, "balance_class: {}", class.kind).unwrap();
    if let Some(z) = &class.to_positive {
        writeln!(out, "switch_to_positive: [{}]", one_based(&z.flipped())).unwrap();
    }
    if let Some(z) = &class.to_negative {
        writeln!(out, "switch_to_negative: [{}]", one_based(&z.flipped())).unwrap();
    }
    if let Some(c) = &class.negative_cycle {
        writeln!(out, "negative_cycle: {}", describe_cycle(c)).unwrap();
    }
    if let Some(c) = &class.parity_violation {
        writeln!(out, "parity_violation: {}", describe_cycle(c)).unwrap();
    }
    match g.girth() {
        Ok(w) => {
            writeln!(out, "girth: {}", w.length).unwrap();
            writeln!(out, "girth_cycle: {}", describe_cycle(&w)).unwrap();
            Ok(Outcome::ok(out))
        }
        Err(e) => Ok(Outcome {
            code: exit_code(&e),
            stdout: out,
            stderr: format!("error: {e}\n"),
        }),
    }
}

fn cmd_verify(g: &SignedGraph, exact: bool) -> Result<Outcome, Error> {
    let report = verify_report(g, exact)?;
    let violated = report.bound.as_ref().is_some_and(|b| b.min_slack < 0);
    let mut outcome = Outcome::ok(to_json(&report));
    if violated {
        outcome.code = EXIT_VIOLATION;
        outcome.stderr = "bound violated: a multiplicity exceeds n - g + 2\n".into();
    }
    Ok(outcome)
}

fn describe_graph(g: &SignedGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}{}{}", e.u + 1, e.sign, e.v + 1))
        .collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn enumerate_text(r: &EnumReport) -> String {
    let mut out = String::new();
    let checks: Vec<&str> = r.checks.iter().map(|c| c.name()).collect();
    writeln!(
        out,
        "orders {}..={}, checks: {}",
        r.min_n,
        r.max_n,
        checks.join(",")
    )
    .unwrap();
    for o in &r.orders {
        writeln!(
            out,
            "n={}: graphs {}, switching classes {}, with cycles {}, instances {}",
            o.n, o.graphs, o.switching_classes, o.with_cycles, o.instances
        )
        .unwrap();
    }
    writeln!(out, "instances checked: {}", r.instances_checked).unwrap();
    writeln!(out, "bound violations: {}", r.bound_violations).unwrap();
    for (case, count) in &r.equality_tally {
        writeln!(out, "equality {case}: {count}").unwrap();
    }
    for eq in &r.equalities {
        let lambdas: Vec<String> = eq.lambdas.iter().map(|l| l.to_string()).collect();
        writeln!(
            out,
            "  {} {} lambda {{{}}}",
            eq.case,
            describe_graph(&eq.graph),
            lambdas.join(", ")
        )
        .unwrap();
    }
    writeln!(out, "nullity equalities: {}", r.nullity_equalities.len()).unwrap();
    for rec in &r.nullity_equalities {
        let case = rec.case.map_or("none".to_string(), |c| format!("{c:?}"));
        writeln!(out, "  {} {}", case, describe_graph(&rec.graph)).unwrap();
    }
    writeln!(
        out,
        "non-cycle instances with min slack 1: {}",
        r.noncycle_slack_one
    )
    .unwrap();
    writeln!(out, "certificates: {}", r.certificates.len()).unwrap();
    for c in &r.certificates {
        writeln!(
            out,
            "  {:?} {}: {}",
            c.claim,
            describe_graph(&c.graph),
            c.detail
        )
        .unwrap();
    }
    out
}

fn cmd_enumerate(cfg: &EnumConfig, json: bool) -> Result<Outcome, Error> {
    let report = run_sweep(cfg)?;
    let stdout = if json {
        to_json(&report)
    } else {
        enumerate_text(&report)
    };
    let mut outcome = Outcome::ok(stdout);
    outcome.stderr = format!(
        "swept {} instances in {:.3} s with {} job(s)\n",
        report.instances_checked,
        report.wall_time.as_secs_f64(),
        cfg.jobs
    );
    if report.bound_violations > 0 {
        outcome.code = EXIT_VIOLATION;
    }
    Ok(outcome)
}

fn cmd_generate(
    family: Family,
    n: usize,
    n2: Option<usize>,
    balanced: bool,
    switch_seed: Option<u64>,
) -> Result<Outcome, Error> {
    let (g, label) = match family {
        Family::BalancedComplete => (SignedGraph::complete(n)?, format!("balanced K_{n}")),
        Family::AntibalancedComplete => (
            SignedGraph::complete(n)?.negated(),
            format!("antibalanced K_{n}"),
        ),
        Family::BalancedCompleteBipartite => {
            let n2 = n2.ok_or_else(|| {
                Error::InvalidConfig("--n2 is required for complete bipartite graphs".into())
            })?;
            if n == 0 || n2 == 0 {
                return Err(Error::InvalidOrder {
                    n: n.min(n2),
                    reason: "both parts need at least 1 vertex",
                });
            }
            (
                SignedGraph::complete_bipartite(n, n2)?,
                format!("balanced K_{{{n},{n2}}}"),
            )
        }
        Family::Cycle => {
            let kind = if balanced { "balanced" } else { "unbalanced" };
            (SignedGraph::cycle(n, balanced)?, format!("{kind} C_{n}"))
        }
    };
    let mut comments = vec![label];
    let g = match switch_seed {
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let signs = (0..g.n())
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Sign::Negative
                    } else {
                        Sign::Positive
                    }
                })
                .collect();
            let z = SwitchingFunction::from_signs(signs);
            comments.push(format!("switched at [{}]", one_based(&z.flipped())));
            g.switch(&z)?
        }
        None => g,
    };
    Ok(Outcome::ok(write_graph(&g, &comments)))
}

fn format_set(values: &[f64]) -> String {
    let v: Vec<String> = values.iter().map(|&x| format_real(x)).collect();
    format!("{{{}}}", v.join(", "))
}

fn cmd_cycle(n: usize, balanced: bool) -> Result<Outcome, Error> {
    let spec = cycle_spectrum(n, balanced)?;
    let mut out = String::new();
    let kind = if balanced { "balanced" } else { "unbalanced" };
    writeln!(out, "{kind} C_{n}").unwrap();
    writeln!(out, "j\tvalue").unwrap();
    for &(j, x) in &spec.values {
        writeln!(out, "{j}\t{}", format_real(x)).unwrap();
    }
    writeln!(
        out,
        "simple: {}",
        format_set(&cycle_simple_eigenvalues(n, balanced)?)
    )
    .unwrap();
    writeln!(
        out,
        "double: {}",
        format_set(&cycle_double_eigenvalues(n, balanced)?)
    )
    .unwrap();
    Ok(Outcome::ok(out))
}

fn parse_vertex_list(list: &str, n: usize) -> Result<Vec<usize>, Error> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(Error::InvalidConfig(format!(
                "bad vertex {s:?} for order {n}"
            ))),
        })
        .collect()
}

fn cmd_switch(g: &SignedGraph, vertices: &str) -> Result<Outcome, Error> {
    let flipped = parse_vertex_list(vertices, g.n())?;
    let z = SwitchingFunction::flipping(g.n(), &flipped)?;
    Ok(Outcome::ok(write_graph(&g.switch(&z)?, &[])))
}
