//! The `dmat` command line.
//!
//! Exit status is 0 on success or an affirmative verdict, 1 on a negative
//! verdict or a semantic error, and 2 on malformed input or usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::canon::{reduce_with, ReduceOptions};
use crate::census::verify_small;
use crate::error::Error;
use crate::format::{parse_graph, parse_set_system, parse_trace, write_matrix, write_set_system, write_trace};
use crate::gf2rep::recognize_binary;
use crate::matroid::{graphic_matroid, minor};
use crate::setsystem::{Parity, SetSystem, SubsetMask};
use crate::slides::apply_trace;

#[derive(Parser, Debug)]
#[command(name = "dmat", version, about = "Delta-matroid algebra on small ground sets")]
struct Cli {
    /// Print only the verdict line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the delta-matroid and matroid axioms.
    Check { file: PathBuf },
    /// Print the size window, parity, loops and elements in every member.
    Profile { file: PathBuf },
    /// Twist by a set of labels.
    Twist {
        file: PathBuf,
        #[arg(long, value_name = "LABELS")]
        set: String,
    },
    Dual { file: PathBuf },
    /// Delete and contract elements.
    Minor {
        file: PathBuf,
        #[arg(long, value_name = "LABELS", default_value = "")]
        delete: String,
        #[arg(long, value_name = "LABELS", default_value = "")]
        contract: String,
    },
    /// Apply a handle-slide trace.
    Slide {
        file: PathBuf,
        #[arg(long, value_name = "TRACEFILE")]
        trace: PathBuf,
    },
    /// Find a binary certificate.
    Binary { file: PathBuf },
    /// Reduce a binary delta-matroid to canonical form.
    Canon {
        file: PathBuf,
        #[arg(long, default_value_t = ReduceOptions::default().depth_budget)]
        depth: usize,
    },
    /// Check every delta-matroid on `n` elements.
    Census {
        #[arg(short = 'n', value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
        #[arg(long, default_value_t = ReduceOptions::default().depth_budget)]
        depth: usize,
        /// Also print `key: value` lines.
        #[arg(long)]
        dump: bool,
    },
    /// Print the graphic matroid of a graph file.
    FromGraph { file: PathBuf },
}

enum Failure {
    Usage(String),
    Semantic(String),
}

impl Failure {
    fn from_error(context: &Path, e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(format!("{}: {e}", context.display())),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

/// Run `dmat` with `args` (including the program name), writing to `out` and
/// `err`, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return status;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.status
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "dmat: {message}");
            2
        }
        Err(Failure::Semantic(message)) => {
            let _ = writeln!(err, "dmat: {message}");
            1
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<SetSystem, Failure> {
    parse_set_system(&read(path)?).map_err(|e| Failure::from_error(path, e))
}

fn labels(system: &SetSystem, text: &str) -> Result<SubsetMask, Failure> {
    system
        .ground()
        .mask_of(text.split_whitespace())
        .map_err(|e| Failure::Semantic(e.to_string()))
}

/// Labels of `mask`, each preceded by a space.
fn spaced(system: &SetSystem, mask: SubsetMask) -> String {
    system.ground().labels_of(mask).iter().map(|l| format!(" {l}")).collect()
}

fn semantic(e: Error) -> Failure {
    Failure::Semantic(e.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check { file } => {
            let s = load(file)?;
            let delta = s.check_sea().unwrap_or(false);
            let mut text = format!("delta-matroid: {}\n", yes_no(delta));
            if !cli.quiet {
                let _ = writeln!(text, "matroid: {}", yes_no(s.check_ea().unwrap_or(false)));
            }
            Ok(Output {
                text,
                status: if delta { 0 } else { 1 },
            })
        }
        Command::Profile { file } => {
            let s = load(file)?;
            let p = s.profile().map_err(semantic)?;
            let parity = match p.parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            };
            Ok(Output::ok(format!(
                "min: {}\nmax: {}\nparity: {parity}\nloops:{}\neverywhere:{}\n",
                p.min_size,
                p.max_size,
                spaced(&s, p.loops),
                spaced(&s, p.everywhere_elements),
            )))
        }
        Command::Twist { file, set } => {
            let s = load(file)?;
            let by = labels(&s, set)?;
            Ok(Output::ok(write_set_system(&s.twist(by).map_err(semantic)?)))
        }
        Command::Dual { file } => Ok(Output::ok(write_set_system(&load(file)?.dual()))),
        Command::Minor { file, delete, contract } => {
            let s = load(file)?;
            let (d, c) = (labels(&s, delete)?, labels(&s, contract)?);
            Ok(Output::ok(write_set_system(&minor(&s, d, c).map_err(semantic)?)))
        }
        Command::Slide { file, trace } => {
            let s = load(file)?;
            let t = parse_trace(&read(trace)?, s.ground()).map_err(|e| Failure::from_error(trace, e))?;
            Ok(Output::ok(write_set_system(&apply_trace(&s, &t).map_err(semantic)?)))
        }
        Command::Binary { file } => {
            let s = load(file)?;
            Ok(match recognize_binary(&s) {
                Some(cert) => {
                    let mut text = format!("base:{}\n", spaced(&s, cert.base_feasible()));
                    if !cli.quiet {
                        text.push_str(&write_matrix(cert.matrix()));
                    }
                    Output::ok(text)
                }
                None => Output {
                    text: "not binary\n".into(),
                    status: 1,
                },
            })
        }
        Command::Canon { file, depth } => {
            let s = load(file)?;
            let options = ReduceOptions {
                depth_budget: *depth,
                ..ReduceOptions::default()
            };
            let r = reduce_with(&s, &options).map_err(semantic)?;
            let mut text = format!("canonical: {}\n", r.params);
            if !cli.quiet {
                text.push_str(&write_trace(&r.trace, s.ground()));
                text.push_str(&write_set_system(&r.result));
            }
            Ok(Output::ok(text))
        }
        Command::Census { n, depth, dump } => {
            let report = verify_small(*n as usize, *depth).map_err(semantic)?;
            let status = if report.failures.is_empty() { 0 } else { 1 };
            let text = if cli.quiet {
                format!("failures: {}\n", report.failures.len())
            } else if *dump {
                format!("{report}{}", report.dump())
            } else {
                report.to_string()
            };
            Ok(Output { text, status })
        }
        Command::FromGraph { file } => {
            let g = parse_graph(&read(file)?).map_err(|e| Failure::from_error(file, e))?;
            let m = graphic_matroid(g.vertices, &g.edges).map_err(semantic)?;
            Ok(Output::ok(write_set_system(m.carrier())))
        }
    }
}
