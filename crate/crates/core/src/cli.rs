//! Command-line front end. Results go to stdout one line at a time; commentary goes
//! to stderr.
//!
//! Exit codes: 0 success, 1 a certificate or parameter check failed, 2 bad input
//! (unparsable arguments, malformed files, or an order outside the hypotheses).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ff::FieldSpec;
use crate::graph::{self, CayleyGraph, HostGraph, SrgParams};
use crate::paley_cert::{self, PaleyCertifier};
use crate::verify::{self, CycleCertificate, Presence, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "paley", version, about = "Cycle certificates for Paley graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct, verify and write k-cycle certificates for P(q).
    Certify {
        #[command(flatten)]
        field: FieldArgs,
        /// A single cycle length.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        k: Option<u64>,
        /// Every length 3..=q.
        #[arg(long)]
        all: bool,
        /// Directory for certificate files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check certificate files.
    Verify {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Paley index of the n-cycle, with a witness certificate.
    Index {
        n: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Strongly regular parameters of P(q) by exhaustive counting.
    Srg {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Cycle lengths of P(q) by exhaustive search.
    Oracle {
        #[command(flatten)]
        field: FieldArgs,
        /// Search-node limit per cycle length.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Write P(q) as an edge list or JSON.
    Export {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
}

/// The field order, either as `q` or as `p` and `n`.
#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(value_name = "Q", conflicts_with_all = ["q_flag", "p", "n"])]
    pub q: Option<u64>,
    #[arg(long = "q", id = "q_flag", value_name = "Q", conflicts_with_all = ["p", "n"])]
    pub q_flag: Option<u64>,
    #[arg(long, requires = "n")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Edgelist,
}

/// A failure that maps onto an exit code.
#[derive(Debug)]
struct Exit(i32, String);

impl Exit {
    fn input(msg: impl ToString) -> Self {
        Exit(EXIT_INPUT, msg.to_string())
    }
}

impl FieldArgs {
    fn spec(&self) -> Result<FieldSpec, Exit> {
        let spec = match (self.q.or(self.q_flag), self.p, self.n) {
            (Some(q), _, _) => FieldSpec::for_order(q),
            (None, Some(p), Some(n)) => FieldSpec::with_default_modulus(p, n),
            _ => return Err(Exit::input("give the field order as Q, --q Q, or --p P --n N")),
        };
        spec.map_err(Exit::input)
    }

    fn paley(&self) -> Result<CayleyGraph, Exit> {
        graph::paley(&self.spec()?).map_err(Exit::input)
    }
}

fn write_certificate(dir: &Path, name: &str, cert: &CycleCertificate) -> Result<PathBuf, Exit> {
    fs::create_dir_all(dir).map_err(|e| Exit::input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, cert.to_json() + "\n").map_err(|e| Exit::input(format!("{}: {e}", path.display())))?;
    Ok(path)
}

fn certify(field: &FieldArgs, k: Option<u64>, out: &Path, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Exit> {
    let spec = field.spec()?;
    let q = spec.order();
    paley_cert::check_order(q).map_err(Exit::input)?;
    let certifier = PaleyCertifier::new(&spec).map_err(Exit::input)?;
    let lengths: Vec<u64> = match k {
        Some(k) => vec![k],
        None => (3..=q).collect(),
    };
    let width = q.to_string().len();
    let mut failures = 0;
    for k in lengths {
        let cert = match certifier.certify(k) {
            Ok(cert) => cert,
            Err(e @ paley_cert::PaleyError::LengthOutOfRange { .. }) => return Err(Exit::input(e)),
            Err(e) => {
                failures += 1;
                let _ = writeln!(stdout, "{k} fail");
                let _ = writeln!(stderr, "k={k}: {e}");
                continue;
            }
        };
        let path = write_certificate(out, &format!("paley-{q}-k{k:0width$}.json"), &cert)?;
        // re-read from disk so the check sees exactly what was written
        let report = CycleCertificate::read(&path)
            .and_then(|c| verify::check_cycle(&c))
            .map_err(Exit::input)?;
        failures += usize::from(!report.is_ok());
        let _ = writeln!(stdout, "{k} {report} {}", path.display());
    }
    let _ = writeln!(stderr, "P({q}): {failures} certificate(s) failed");
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn verify_files(paths: &[PathBuf], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut code = EXIT_OK;
    for path in paths {
        match CycleCertificate::read(path).and_then(|c| verify::check_cycle(&c)) {
            Ok(report) => {
                if !report.is_ok() {
                    code = code.max(EXIT_FAIL);
                }
                let _ = writeln!(stdout, "{}: {report}", path.display());
            }
            Err(e) => {
                code = EXIT_INPUT;
                let _ = writeln!(stdout, "{}: malformed", path.display());
                let _ = writeln!(stderr, "{e}");
            }
        }
    }
    code
}

fn index(n: u64, out: &Path, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Exit> {
    let result = paley_cert::paley_index_of_cycle(n).map_err(Exit::input)?;
    let path = write_certificate(out, &format!("index-c{n}.json"), &result.witness)?;
    let _ = writeln!(stdout, "rho={}", result.rho);
    let _ = writeln!(stderr, "C{n} embeds in P({}); witness written to {}", result.rho, path.display());
    Ok(EXIT_OK)
}

fn srg(field: &FieldArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Exit> {
    let g = field.paley()?;
    match g.verify_srg() {
        Ok(SrgParams { v, k, lambda, mu }) => {
            let _ = writeln!(stdout, "{v} {k} {lambda} {mu}");
            let expected = SrgParams::paley(v);
            let agrees = SrgParams { v, k, lambda, mu } == expected;
            let _ = writeln!(stderr, "{} counted exhaustively; closed form {}", g.label(), if agrees { "agrees" } else { "disagrees" });
            Ok(if agrees { EXIT_OK } else { EXIT_FAIL })
        }
        Err(failure) => {
            let _ = writeln!(stdout, "not strongly regular");
            let _ = writeln!(stderr, "{failure:?}");
            Ok(EXIT_FAIL)
        }
    }
}

fn oracle(field: &FieldArgs, budget: u64, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Exit> {
    let g = field.paley()?;
    let spectrum = verify::cycle_spectrum_bruteforce(&g, g.order() as usize, budget);
    let pick = |want: fn(&Presence) -> bool| {
        spectrum.iter().filter(|(_, p)| want(p)).map(|(k, _)| k.to_string()).collect::<Vec<_>>().join(" ")
    };
    let present = pick(|p| matches!(p, Presence::Present(_)));
    let absent = pick(|p| *p == Presence::Absent);
    let unknown = pick(|p| *p == Presence::Unknown);
    let mut line = format!("present: {present}; absent: {absent}");
    if !unknown.is_empty() {
        line += &format!("; unknown: {unknown}");
    }
    let _ = writeln!(stdout, "{line}");
    let _ = writeln!(stderr, "exhaustive search on {} with a budget of {budget} nodes per length", g.label());
    Ok(EXIT_OK)
}

fn export(field: &FieldArgs, format: Format, stdout: &mut dyn Write) -> Result<i32, Exit> {
    let g = field.paley()?;
    let text = match format {
        Format::Edgelist => g.edge_list(),
        Format::Json => g.to_json() + "\n",
    };
    let _ = stdout.write_all(text.as_bytes());
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Certify { field, k, out, .. } => certify(field, *k, out, stdout, stderr),
        Command::Verify { paths } => Ok(verify_files(paths, stdout, stderr)),
        Command::Index { n, out } => index(*n, out, stdout, stderr),
        Command::Srg { field } => srg(field, stdout, stderr),
        Command::Oracle { field, budget } => oracle(field, *budget, stdout, stderr),
        Command::Export { field, format } => export(field, *format, stdout),
    };
    result.unwrap_or_else(|Exit(code, msg)| {
        let _ = writeln!(stderr, "error: {msg}");
        code
    })
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
