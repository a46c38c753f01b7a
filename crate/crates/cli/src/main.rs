//! Command-line front end. Writes JSON lines to stdout and diagnostics to
//! stderr.
//!
//! Exit codes: 0 success, 2 invalid input, 3 the case has no generator,
//! 4 a generated member failed its own verification.

mod records;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use sparsepow::{
    as_perfect_power, classify_case, generate_member, search, to_expansion, BigUint, Checkpoint,
    DegreeFilter, Error, Nat, SearchOptions, SearchSpec,
};

use records::{Classification, Hit, Member, Summary, TableCell, Verification};

#[derive(Debug, Parser)]
#[command(
    name = "sparsepow",
    version,
    about = "Perfect powers with few non-zero digits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the status of a (base, digit count) pair.
    Classify {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        digits: u32,
        /// Restrict to squares.
        #[arg(long)]
        square_only: bool,
    },
    /// Emit members of the family covering a pair.
    Generate {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        digits: u32,
        /// Number of members.
        #[arg(long, default_value_t = 1)]
        count: u32,
        /// First family parameter.
        #[arg(long, default_value_t = 0)]
        start: u32,
        #[arg(long)]
        square_only: bool,
    },
    /// Inspect a value: digits, coprimality and perfect-power witness.
    /// Reads member records from stdin when no value is given.
    Verify {
        #[arg(long)]
        base: Option<u32>,
        #[arg(long)]
        value: Option<String>,
    },
    /// Exhaustive bounded search for sparse perfect powers.
    Search {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        digits: u32,
        /// Largest allowed exponent M.
        #[arg(long)]
        max_exponent: u32,
        /// `any`, or a comma-separated list of degrees.
        #[arg(long, default_value = "any")]
        degree: String,
        /// Require gcd(value, base) = 1.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        coprime: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Continue from a token printed by an earlier run.
        #[arg(long)]
        resume: Option<String>,
        /// Stop after this many exponent tuples and print a resume token.
        #[arg(long)]
        stop_after: Option<u64>,
        /// Disable residue screening.
        #[arg(long)]
        no_prune: bool,
        /// Include elapsed time in the summary.
        #[arg(long)]
        timing: bool,
    },
    /// Classify every pair with 2 <= base <= max-base and 3 <= digits <= max-digits.
    Table {
        #[arg(long, default_value_t = 12)]
        max_base: u32,
        #[arg(long, default_value_t = 12)]
        max_digits: u32,
    },
}

/// A failed command: exit code plus an optional record for stdout.
struct Failure {
    code: u8,
    message: String,
    record: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Status(_) => 3,
            Error::VerificationFailed { .. } | Error::Overflow => 4,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
            record: None,
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
        record: None,
    }
}

struct Output {
    out: io::StdoutLock<'static>,
}

impl Output {
    fn emit<R: Serialize>(&mut self, record: &R) -> Result<(), Failure> {
        let line = serde_json::to_string(record).expect("records serialize");
        writeln!(self.out, "{line}").map_err(|e| Failure {
            code: 2,
            message: e.to_string(),
            record: None,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output {
        out: io::stdout().lock(),
    };
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(r) = f.record {
                let _ = writeln!(out.out, "{r}");
            }
            let _ = out.out.flush();
            eprintln!("sparsepow: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut Output) -> Result<(), Failure> {
    match command {
        Command::Classify {
            base,
            digits,
            square_only,
        } => {
            let status = classify_case(base, digits, square_only)?;
            out.emit(&Classification::new(base, digits, square_only, &status))
        }
        Command::Generate {
            base,
            digits,
            count,
            start,
            square_only,
        } => {
            let status = classify_case(base, digits, square_only)?;
            if !status.is_infinite() {
                let record = Classification::new(base, digits, square_only, &status);
                return Err(Failure {
                    code: 3,
                    message: format!("no generator for base {base}, {digits} digits: {status}"),
                    record: Some(serde_json::to_string(&record).expect("records serialize")),
                });
            }
            let end = start
                .checked_add(count)
                .ok_or_else(|| invalid("--start + --count overflows"))?;
            for t in start..end {
                let m = generate_member(base, digits, t, square_only)?;
                out.emit(&Member::from(&m))?;
            }
            Ok(())
        }
        Command::Verify { base, value } => match (base, value) {
            (Some(base), Some(value)) => out.emit(&verify(base, &value)?),
            (None, None) => verify_stdin(out),
            _ => Err(invalid(
                "give both --base and --value, or neither to read records from stdin",
            )),
        },
        Command::Search {
            base,
            digits,
            max_exponent,
            degree,
            coprime,
            threads,
            resume,
            stop_after,
            no_prune,
            timing,
        } => {
            let spec = SearchSpec::new(base, digits, max_exponent)
                .with_degrees(parse_degrees(&degree)?)
                .with_coprime(coprime);
            let resume = resume.map(|s| s.parse::<Checkpoint>()).transpose()?;
            let opts = SearchOptions {
                threads,
                prune: !no_prune,
                resume,
                stop_after,
            };
            let started = Instant::now();
            let report = search(&spec, &opts)?;
            let elapsed = started.elapsed();
            if !report.feasible {
                eprintln!("sparsepow: {digits} digits do not fit below exponent {max_exponent}; nothing to search");
            }
            for h in &report.hits {
                out.emit(&Hit::from(h))?;
            }
            out.emit(&Summary {
                kind: "summary",
                base: base.to_string(),
                digits: digits.to_string(),
                max_exponent: max_exponent.to_string(),
                candidates: report.candidates.to_string(),
                tuples: report.tuples.to_string(),
                hits: report.hits.len().to_string(),
                feasible: report.feasible,
                next: report.next.map(|c| c.to_string()),
                elapsed_ms: timing.then(|| elapsed.as_millis().to_string()),
            })
        }
        Command::Table {
            max_base,
            max_digits,
        } => {
            if max_base < 2 || max_digits < 3 {
                return Err(invalid(
                    "--max-base must be at least 2 and --max-digits at least 3",
                ));
            }
            for base in 2..=max_base {
                for digits in 3..=max_digits {
                    let any = classify_case(base, digits, false)?;
                    let square = classify_case(base, digits, true)?;
                    out.emit(&TableCell::new(base, digits, &any, &square))?;
                }
            }
            Ok(())
        }
    }
}

fn parse_degrees(s: &str) -> Result<DegreeFilter, Failure> {
    if s.eq_ignore_ascii_case("any") {
        return Ok(DegreeFilter::Any);
    }
    let ds = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| invalid(format!("bad degree list {s:?}")))?;
    if ds.iter().any(|&d| d < 2) {
        return Err(invalid("degrees must be at least 2"));
    }
    Ok(DegreeFilter::only(ds))
}

fn verify(base: u32, value: &str) -> Result<Verification, Failure> {
    let n: Nat = value.parse::<BigUint>().map_err(|_| {
        invalid(format!(
            "value {value:?} is not a non-negative decimal integer"
        ))
    })?;
    let expansion = to_expansion(&n, base)?;
    let gcd = num_integer::Integer::gcd(&n, &Nat::from(base));
    let witness = if n < Nat::from(2u32) {
        None
    } else {
        as_perfect_power(&n)?
    };
    Ok(Verification {
        kind: "verification",
        base: base.to_string(),
        value: n.to_string(),
        digits: expansion.digits().iter().map(u32::to_string).collect(),
        nonzero: expansion.nonzero_count().to_string(),
        coprime: gcd == Nat::from(1u32),
        gcd: gcd.to_string(),
        power: witness.as_ref().map(|w| w.to_string()),
        root: witness.as_ref().map(|w| w.root.to_string()),
        degree: witness.as_ref().map(|w| w.degree.to_string()),
    })
}

/// Re-checks member records piped from `generate`. Fails with exit code 4 when
/// a record's value disagrees with its claimed root, degree or digit count.
fn verify_stdin(out: &mut Output) -> Result<(), Failure> {
    #[derive(serde::Deserialize)]
    struct Claim {
        base: String,
        digits: String,
        y: String,
        d: String,
        value: String,
    }
    for (i, line) in io::stdin().lines().enumerate() {
        let line = line.map_err(|e| invalid(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let claim: Claim = serde_json::from_str(&line)
            .map_err(|e| invalid(format!("line {}: not a member record: {e}", i + 1)))?;
        let base: u32 = claim
            .base
            .parse()
            .map_err(|_| invalid(format!("line {}: bad base", i + 1)))?;
        let k: usize = claim
            .digits
            .parse()
            .map_err(|_| invalid(format!("line {}: bad digits", i + 1)))?;
        let y: Nat = claim
            .y
            .parse()
            .map_err(|_| invalid(format!("line {}: bad y", i + 1)))?;
        let d: u32 = claim
            .d
            .parse()
            .map_err(|_| invalid(format!("line {}: bad d", i + 1)))?;
        let record = verify(base, &claim.value)?;
        let value: Nat = record.value.parse().expect("verify echoes a decimal value");
        let ok = y.pow(d) == value && record.nonzero == k.to_string() && record.coprime;
        out.emit(&record)?;
        if !ok {
            return Err(Failure {
                code: 4,
                message: format!(
                    "line {}: value {} is not a {k}-digit power {}^{d} coprime with {base}",
                    i + 1,
                    record.value,
                    y
                ),
                record: None,
            });
        }
    }
    Ok(())
}
