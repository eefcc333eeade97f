use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cliquepeel::campaign::{emit_report, parse_config, run_campaign, Execution};
use cliquepeel::coloring::{
    caprara_rizzi_check, chromatic_number, fractional_chromatic_certified, molloy_reed_check, reed_bound,
    reed_bound_report, seven_sixths_bound, theorem_d_color, verify_line_graph_reed, ColoringCertificate,
    ExactColorer, DEFAULT_FRACTIONAL_CAP,
};
use cliquepeel::generate::{gen_er, gen_hypothesis};
use cliquepeel::io::{graph_to_json, multigraph_from_json, read_graph_file, write_dimacs};
use cliquepeel::main_lemma::{destroy_clique, destroy_clique_maximal, verify_destruction, Verification};
use cliquepeel::Error;

const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "cliquepeel", version, about = "Clique destruction, exact coloring and bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomized verification campaign.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Report path; overrides the config output. Printed to stdout when neither is set.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a CSV summary with one row per check.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Evaluate samples on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Find an independent set meeting every maximum clique.
    DestroyClique {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Extend the set to a maximal independent set, which also lowers the maximum degree.
        #[arg(long)]
        maximal: bool,
    },
    /// Color a graph and print the certificate.
    Color {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ColorMethod::Exact)]
        method: ColorMethod,
    },
    /// Exact fractional chromatic number with primal and dual certificates.
    ChiStar {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Edge-color a multigraph given as JSON and check the line-graph bounds.
    EdgeColor {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Without --in: sweep (omega, delta) pairs checking the seven-sixths arithmetic.
    /// With --in: report chi, chi*, omega, delta and the bounds for one graph.
    CheckBounds {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Largest omega and delta in the sweep.
        #[arg(long, default_value_t = 200)]
        max: usize,
    },
    /// Generate a graph.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Vertex count (er).
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Edge probability (er).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Clique size (hypothesis).
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Cluster count (hypothesis).
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Inter-cluster edge probability (hypothesis).
        #[arg(long, default_value_t = 0.3)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Dimacs)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMethod {
    Exact,
    TheoremD,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Er,
    Hypothesis,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Json,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = error.chain().find_map(|e| e.downcast_ref::<Error>()).map_or(EXIT_USAGE, exit_code_for);
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceCap { .. } => EXIT_RESOURCE,
        Error::Refuted { .. } | Error::OracleContract { .. } | Error::Internal(_) => EXIT_REFUTED,
        _ => EXIT_USAGE,
    }
}

fn refuted(msg: String) -> Failure {
    Failure { code: EXIT_REFUTED, error: anyhow::anyhow!(msg) }
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display())),
        None => write_stdout(&(text + "\n")),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn write_stdout(text: &str) -> anyhow::Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn load(path: &Path) -> anyhow::Result<cliquepeel::Graph> {
    read_graph_file(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { config, seed, out, csv, sequential } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let mut cfg = parse_config(&text)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if sequential {
                cfg.execution = Execution::Sequential;
            }
            let out = out.or_else(|| cfg.output.clone());
            let report = run_campaign(&cfg)?;
            match &out {
                Some(p) => emit_report(&report, p, csv.as_deref())?,
                None => {
                    emit(&report, None)?;
                    if let Some(c) = &csv {
                        std::fs::write(c, report.to_csv()).map_err(Error::from)?;
                    }
                }
            }
            for (check, c) in &report.counters {
                log::info!(
                    "{}: tested={} premise_not_met={} passed={} refuted={} capped={} errors={}",
                    check.name(),
                    c.tested,
                    c.premise_not_met,
                    c.passed,
                    c.refuted,
                    c.resource_capped,
                    c.errors
                );
            }
            match report.exit_code() {
                0 => Ok(()),
                _ => Err(refuted(format!(
                    "campaign found {} refutations and {} internal errors",
                    report.total_refuted(),
                    report.total_errors()
                ))),
            }
        }
        Command::DestroyClique { input, out, maximal } => {
            let g = load(&input)?;
            let cert = if maximal { destroy_clique_maximal(&g) } else { destroy_clique(&g) };
            let cert = cert.map_err(|e| {
                if let Error::Refuted { witness, .. } = &e {
                    eprintln!("witness: {}", graph_to_json(witness));
                }
                Failure::from(e)
            })?;
            if let Verification::Fail(why) = verify_destruction(&g, &cert) {
                return Err(refuted(format!("certificate failed verification: {why:?}")));
            }
            emit(&cert, out.as_deref())?;
            Ok(())
        }
        Command::Color { input, method } => {
            let g = load(&input)?;
            let cert: ColoringCertificate = match method {
                ColorMethod::Exact => chromatic_number(&g).1,
                ColorMethod::TheoremD => {
                    let r = theorem_d_color(&g, &ExactColorer)?;
                    log::info!("peeled {} independent sets before the base colorer", r.peels);
                    r.certificate
                }
            };
            if !cert.verify(&g) {
                return Err(refuted("coloring certificate failed verification".into()));
            }
            emit(&cert, None)?;
            Ok(())
        }
        Command::ChiStar { input } => {
            let g = load(&input)?;
            let cert = fractional_chromatic_certified(&g, DEFAULT_FRACTIONAL_CAP)?;
            emit(&cert, None)?;
            Ok(())
        }
        Command::EdgeColor { input } => {
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let h = multigraph_from_json(&text)?;
            let (l, edges) = h.line_graph();
            let (_, coloring) = chromatic_number(&l);
            let line_reed = verify_line_graph_reed(&h);
            let bounds = caprara_rizzi_check(&h)?;
            #[derive(Serialize)]
            struct EdgeColoring<'a> {
                edges: &'a [(usize, usize)],
                colors: &'a [usize],
                chromatic_index: usize,
                line_graph_reed: &'a cliquepeel::coloring::LineGraphReedReport,
                caprara_rizzi: &'a cliquepeel::coloring::CapraraRizziReport,
            }
            emit(
                &EdgeColoring {
                    edges: &edges,
                    colors: &coloring.colors,
                    chromatic_index: coloring.color_count,
                    line_graph_reed: &line_reed,
                    caprara_rizzi: &bounds,
                },
                None,
            )?;
            if !line_reed.holds || !bounds.all_hold() {
                return Err(refuted("edge-coloring bound violated".into()));
            }
            Ok(())
        }
        Command::CheckBounds { input: Some(input), .. } => {
            let g = load(&input)?;
            let reed = reed_bound_report(&g);
            let mr = molloy_reed_check(&g)?;
            #[derive(Serialize)]
            struct Bounds {
                reed: cliquepeel::coloring::BoundReport,
                molloy_reed: cliquepeel::coloring::MolloyReedReport,
            }
            let ok = reed.satisfied.reed && reed.satisfied.max_bound && mr.holds;
            emit(&Bounds { reed, molloy_reed: mr }, None)?;
            if !ok {
                return Err(refuted("bound violated".into()));
            }
            Ok(())
        }
        Command::CheckBounds { input: None, max } => {
            let mut pairs = 0u64;
            let mut violations = Vec::new();
            for w in 0..=max {
                for d in 0..=max {
                    if 4 * w < 3 * (d + 1) {
                        pairs += 1;
                        if seven_sixths_bound(w) > reed_bound(w, d) {
                            violations.push((w, d));
                        }
                    }
                }
            }
            #[derive(Serialize)]
            struct Sweep {
                max: usize,
                pairs_checked: u64,
                violations: Vec<(usize, usize)>,
            }
            let clean = violations.is_empty();
            emit(&Sweep { max, pairs_checked: pairs, violations }, None)?;
            if !clean {
                return Err(refuted("seven-sixths bound exceeds the Reed bound".into()));
            }
            Ok(())
        }
        Command::Gen { kind, n, p, k, t, q, seed, format, out } => {
            if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
                return Err(Failure { code: EXIT_USAGE, error: anyhow::anyhow!("probabilities must lie in [0, 1]") });
            }
            let g = match kind {
                GenKind::Er => {
                    if n > cliquepeel::graph::MAX_VERTICES {
                        return Err(Error::ResourceCap { what: "vertex count", cap: cliquepeel::graph::MAX_VERTICES }.into());
                    }
                    gen_er(n, p, seed)
                }
                GenKind::Hypothesis => gen_hypothesis(k, t, q, seed)?,
            };
            let text = match format {
                Format::Dimacs => write_dimacs(&g),
                Format::Json => graph_to_json(&g) + "\n",
            };
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => write_stdout(&text)?,
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("CLIQUEPEEL_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
