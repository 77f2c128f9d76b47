//! Command-line front end: invariant tables, verification suites and series dumps.
//!
//! Exit codes: 0 success, 1 a failed identity or internal check, 2 invalid arguments.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::gw::{genus1_series, invariants_table};
use crate::hypergeometric::{HyperSpec, Hypergeometric};
use crate::report::IdentityReport;
use crate::suites::Suite;

#[derive(Parser, Debug)]
#[command(
    name = "gwcy",
    version,
    about = "Exact genus-0 and genus-1 invariants of Calabi-Yau hypersurfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-degree invariant table (all columns for n = 5, reduced genus 1 otherwise).
    Invariants(Common),
    /// Run verification suites and print one line per identity.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suites: props31, props32, regularize, residues, appendixA,
        /// appendixB, theorem3, special. Defaults to all.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Print one intermediate series, one degree per line.
    Dump {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        what: Series,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    /// Degree of the hypersurface (it lives in P^{n-1}).
    #[arg(long, default_value_t = 5)]
    pub n: u32,
    /// q-truncation D (default 10 for tables, 8 otherwise).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Series {
    /// `I_{0,0}`.
    #[value(name = "I")]
    I,
    /// `T - t`.
    Mirror,
    Mu,
    /// The kernel `F(w, q)`.
    #[value(name = "F")]
    F,
    /// `e^{-μ/ℏ} F(1/ℏ, q)`.
    #[value(name = "Q")]
    Q,
    /// Right-hand side of the genus-1 formula.
    #[value(name = "theorem2_rhs")]
    Genus1Rhs,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let (common, result) = match &cli.command {
        Command::Invariants(c) => (c, invariants(c)),
        Command::Verify { common, suite } => (common, verify(common, suite)),
        Command::Dump { common, what } => (common, dump(common, *what)),
    };
    let (code, text) = match result {
        Ok(text) => (0, text),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Check(text)) => (1, text),
    };
    let written = match &common.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 1;
    }
    code
}

fn validated(c: &Common, default_order: usize) -> Result<(u32, usize), Failure> {
    let d = c.order.unwrap_or(default_order);
    if c.n < 1 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if d < 1 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    Ok((c.n, d))
}

fn invariants(c: &Common) -> Result<String, Failure> {
    let (n, d) = validated(c, 10)?;
    let table = invariants_table(n, d)?;
    Ok(match c.format {
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    })
}

fn verify(c: &Common, names: &[String]) -> Result<String, Failure> {
    let (n, d) = validated(c, 8)?;
    let suites: Vec<Suite> = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<_, Error>>()?
    };
    let mut lines: Vec<(Suite, IdentityReport)> = Vec::new();
    for s in suites {
        for r in s.run(n, d)? {
            lines.push((s, r));
        }
    }
    let all = lines.iter().all(|(_, r)| r.pass);
    let text = match c.format {
        Format::Text => {
            let mut t = String::new();
            for (s, r) in &lines {
                let _ = writeln!(t, "{s}: {r}");
            }
            let passed = lines.iter().filter(|(_, r)| r.pass).count();
            let _ = writeln!(t, "{passed} of {} identities passed", lines.len());
            t
        }
        Format::Json => {
            let v: Vec<_> = lines
                .iter()
                .map(|(s, r)| json!({"suite": s.name(), "report": r}))
                .collect();
            serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["suite", "identity", "pass", "max_order", "first_failure"]);
            for (s, r) in &lines {
                let failure = r
                    .first_failure
                    .as_ref()
                    .map(|f| format!("order {}: {} != {}", f.order, f.lhs, f.rhs));
                let _ = w.write_record([
                    s.name(),
                    &r.identity,
                    if r.pass { "true" } else { "false" },
                    &r.max_order_checked.to_string(),
                    &failure.unwrap_or_default(),
                ]);
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    };
    if all {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

/// `(label, value)` pairs in increasing degree.
fn dump_entries(h: &Hypergeometric, what: Series) -> Result<Vec<(String, String)>, Failure> {
    let series = |s: &crate::series::QSeries| -> Vec<(String, String)> {
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(d, c)| (format!("q^{d}"), c.to_string()))
            .collect()
    };
    Ok(match what {
        Series::I => series(h.diagonal(0)),
        Series::Mirror => series(h.mirror()),
        Series::Mu => series(h.mu()),
        Series::Genus1Rhs => series(&genus1_series(h)),
        Series::F => {
            let mut v = Vec::new();
            for (k, s) in h.kernel().coeffs().iter().enumerate() {
                for (d, c) in s.coeffs().iter().enumerate() {
                    v.push((format!("w^{k} q^{d}"), c.to_string()));
                }
            }
            v
        }
        Series::Q => {
            let q = h.q_hbar_series();
            (0..=h.spec().d)
                .map(|d| (format!("q^{d}"), q.ratfunc(d).to_string()))
                .collect()
        }
    })
}

fn dump(c: &Common, what: Series) -> Result<String, Failure> {
    let (n, d) = validated(c, 8)?;
    let h = Hypergeometric::new(HyperSpec::new(n, d)?)?;
    let entries = dump_entries(&h, what)?;
    let name = what
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    Ok(match c.format {
        Format::Text => entries.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        Format::Json => {
            let coeffs: Vec<_> = entries
                .iter()
                .map(|(k, v)| json!({"term": k, "value": v}))
                .collect();
            let v = json!({"series": name, "n": n, "truncation": d, "coefficients": coeffs});
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["term", "value"]);
            for (k, v) in &entries {
                let _ = w.write_record([k, v]);
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn failed_checks_and_bad_arguments_map_to_distinct_codes() {
        let t = Error::NotTFree {
            t_power: 1,
            q_degree: 2,
            value: int(3),
        };
        assert!(matches!(Failure::from(t), Failure::Check(_)));
        assert!(matches!(
            Failure::from(Error::IdentityFailed("x".into())),
            Failure::Check(_)
        ));
        assert!(matches!(
            Failure::from(Error::InvalidSpec("x".into())),
            Failure::Usage(_)
        ));
    }
}
