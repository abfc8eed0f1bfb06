//! The `pebble` command line.
//!
//! Exit codes: 0 success or solvable, 1 unsolvable or no cover, 2 undecided
//! within the node budget, 64 usage error, 65 unreadable or invalid input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pebbling_core::random::{be_odd_stack_pmf, sample_be_polya, sample_mb};
use pebbling_core::reduction::{build_reduction, exact_cover_bruteforce};
use pebbling_core::{
    cover_pebbling_number, solve_bruteforce, solve_with_budget, verify_certificate, Configuration,
    Family, Graph, Outcome, RandomModel, SeededStream, SolveError, DEFAULT_BUDGET,
};

use crate::io::{self, FormatError};
use crate::sweep::{crossing_line, parallel_sweep, write_csv, SweepParams};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INPUT: u8 = 65;

#[derive(Debug, Parser)]
#[command(name = "pebble", version, about = "Cover pebbling toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Mb,
    Be,
}

impl From<ModelArg> for RandomModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Mb => RandomModel::MaxwellBoltzmann,
            ModelArg::Be => RandomModel::BoseEinstein,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Kn,
    Pn,
    Cn,
    Qd,
    Kmulti,
    Tree,
    Gnp,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cover pebbling number of a graph.
    Lambda {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide cover solvability of a configuration.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        config: PathBuf,
        /// Write the move certificate here when solvable.
        #[arg(long, value_name = "OUT")]
        certificate: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Decide by exhaustive search without pruning; no certificate.
        #[arg(long, conflicts_with_all = ["certificate", "budget"])]
        oracle: bool,
    },
    /// Check a move certificate.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Draw random configurations, one JSON object per line.
    Sample {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Exact distribution of the odd-stack count under the uniform-composition model.
    Dist {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        x: Option<u64>,
    },
    /// Monte Carlo estimate of P(K_n solvable) over a range of pebble counts, as CSV.
    Threshold {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t_min: u64,
        #[arg(long)]
        t_max: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        crossing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the pebbling gadget of an exact-cover-by-4-sets instance.
    Reduce {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_config: PathBuf,
    },
    /// Find an exact cover by 4-sets, printing the chosen set indices or `none`.
    Xcover {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Write a graph from a named family.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex count for kn, pn, cn, tree and gnp.
        #[arg(long)]
        n: Option<usize>,
        /// Dimension for qd.
        #[arg(long)]
        d: Option<u32>,
        /// Part sizes for kmulti, e.g. `3,2,2`.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// Edge probability for gnp.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Input(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Parses `argv` (program name first) and runs the command.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "pebble: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<u8> {
    match cmd {
        Command::Lambda { graph } => {
            let g = io::read_graph(&graph)?;
            let r = cover_pebbling_number(&g).map_err(|e| CliError::Input(e.to_string()))?;
            writeln!(
                out,
                "{{\"lambda\": \"{}\", \"argmax\": {}}}",
                r.lambda, r.argmax
            )?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            graph,
            config,
            certificate,
            budget,
            oracle,
        } => {
            let g = io::read_graph(&graph)?;
            let c = io::read_config(&config)?;
            if oracle {
                let ok = solve_bruteforce(&g, &c)?;
                let verdict = if ok { "solvable" } else { "unsolvable" };
                writeln!(out, "{{\"outcome\": \"{verdict}\", \"path\": \"oracle\"}}")?;
                return Ok(if ok { EXIT_OK } else { EXIT_NO });
            }
            let r = solve_with_budget(&g, &c, budget)?;
            let (verdict, code) = match r.outcome {
                Outcome::Solvable(_) => ("solvable", EXIT_OK),
                Outcome::Unsolvable => ("unsolvable", EXIT_NO),
                Outcome::Undecided => ("undecided", EXIT_UNDECIDED),
            };
            writeln!(
                out,
                "{{\"outcome\": \"{verdict}\", \"path\": \"{}\", \"nodes\": {}}}",
                r.path.as_str(),
                r.nodes
            )?;
            if let (Some(path), Some(cert)) = (certificate, r.certificate()) {
                io::write_certificate(&path, cert)?;
            }
            Ok(code)
        }
        Command::Verify {
            graph,
            config,
            certificate,
        } => {
            let g = io::read_graph(&graph)?;
            let c = io::read_config(&config)?;
            let m = io::read_certificate(&certificate)?;
            if verify_certificate(&g, &c, &m)? {
                writeln!(out, "valid")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "invalid")?;
                Ok(EXIT_NO)
            }
        }
        Command::Sample {
            model,
            n,
            t,
            seed,
            count,
        } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let sampler = match RandomModel::from(model) {
                RandomModel::MaxwellBoltzmann => sample_mb,
                RandomModel::BoseEinstein => sample_be_polya,
            };
            for i in 0..count {
                let c = sampler(n, t, SeededStream::new(seed, i)).expect("n >= 1");
                writeln!(out, "{}", pebbles_json(&c))?;
            }
            Ok(EXIT_OK)
        }
        Command::Dist { n, t, x } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            match x {
                Some(x) => {
                    let p = be_odd_stack_pmf(n, t, x);
                    writeln!(out, "{p}")?;
                    writeln!(out, "{}", p.to_f64())?;
                }
                None => {
                    for x in 0..=n.min(t) {
                        let p = be_odd_stack_pmf(n, t, x);
                        if !p.is_zero() {
                            writeln!(out, "{x}\t{p}\t{}", p.to_f64())?;
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Threshold {
            model,
            n,
            t_min,
            t_max,
            step,
            trials,
            seed,
            workers,
            crossing,
            out: path,
        } => {
            if n == 0 || trials == 0 || step == 0 || workers == 0 || t_min > t_max {
                return Err(CliError::Usage(
                    "need n, trials, step, workers >= 1 and t-min <= t-max".into(),
                ));
            }
            if t_max >= 1 << 32 || trials > 1 << 32 {
                return Err(CliError::Usage("t and trials must fit in 32 bits".into()));
            }
            let params = SweepParams {
                model: model.into(),
                n,
                t_min,
                t_max,
                step,
                trials,
                seed,
            };
            let curve = parallel_sweep(&params, workers)
                .map_err(|e| CliError::Usage(format!("worker pool: {e}")))?;
            let emit = |w: &mut dyn Write| -> std::io::Result<()> {
                let mut w = w;
                write_csv(&mut w, &curve)?;
                if crossing {
                    writeln!(w, "{}", crossing_line(&curve, n))?;
                }
                w.flush()
            };
            match path {
                Some(p) => {
                    let f =
                        File::create(&p).map_err(|source| FormatError::Io { path: p, source })?;
                    emit(&mut BufWriter::new(f))?;
                }
                None => emit(out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Reduce {
            instance,
            out_graph,
            out_config,
        } => {
            let x = io::read_instance(&instance)?;
            let r = build_reduction(&x).map_err(|e| CliError::Input(e.to_string()))?;
            io::write_graph(&out_graph, &r.graph)?;
            io::write_config(&out_config, &r.config)?;
            writeln!(
                out,
                "{{\"vertices\": {}, \"edges\": {}, \"pebbles\": {}}}",
                r.graph.vertex_count(),
                r.graph.edge_count(),
                r.config.total()
            )?;
            Ok(EXIT_OK)
        }
        Command::Xcover { instance } => {
            let x = io::read_instance(&instance)?;
            if let Err(errs) = x.validate() {
                let msg: Vec<String> = errs.iter().map(ToString::to_string).collect();
                return Err(CliError::Input(format!(
                    "invalid instance: {}",
                    msg.join("; ")
                )));
            }
            match exact_cover_bruteforce(&x) {
                Some(cover) => {
                    writeln!(out, "{}", serde_json::to_string(&cover).expect("indices"))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "none")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Gen {
            family,
            n,
            d,
            parts,
            p,
            seed,
            out: path,
        } => {
            let g = generate(family, n, d, parts, p, seed)?;
            io::write_graph(&path, &g)?;
            Ok(EXIT_OK)
        }
    }
}

fn pebbles_json(c: &Configuration) -> String {
    format!(
        "{{\"pebbles\": {}}}",
        serde_json::to_string(c.pebbles()).expect("integers")
    )
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

fn generate(
    family: FamilyArg,
    n: Option<usize>,
    d: Option<u32>,
    parts: Option<Vec<usize>>,
    p: Option<f64>,
    seed: Option<u64>,
) -> Result<Graph> {
    let fam = match family {
        FamilyArg::Kn => Family::Complete(need(n, "n", "kn")?),
        FamilyArg::Pn => Family::Path(need(n, "n", "pn")?),
        FamilyArg::Cn => Family::Cycle(need(n, "n", "cn")?),
        FamilyArg::Qd => Family::Cube(need(d, "d", "qd")?),
        FamilyArg::Kmulti => Family::CompleteMultipartite(need(parts, "parts", "kmulti")?),
        FamilyArg::Tree => Family::RandomTree {
            n: need(n, "n", "tree")?,
            seed: need(seed, "seed", "tree")?,
        },
        FamilyArg::Gnp => Family::Gnp {
            n: need(n, "n", "gnp")?,
            p: need(p, "p", "gnp")?,
            seed: need(seed, "seed", "gnp")?,
        },
    };
    fam.generate().map_err(|e| CliError::Usage(e.to_string()))
}
