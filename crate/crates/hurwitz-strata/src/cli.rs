//! Batch command-line front end. Every command prints one report (JSON by
//! default, CSV with --csv) and exits 0 on success, 1 on usage errors, 2 on
//! domain/resource errors, and 3 when a verification suite fails.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::format_rat;
use crate::hurwitz::{
    corollary_caustic, corollary_maxwell, degree_to_hurwitz, ConversionMode, CoveringSpec,
};
use crate::moduli::{delta00_closed, delta00_split_sum, psi_integral, segre_degree};
use crate::oracle::{ClassTuple, CountMethod, Oracle};
use crate::partition::Partition;
use crate::report::{compare_family, run_suite, sweep_family, Suite, REPORT_SCHEMA_VERSION};
use crate::strata::{
    caustic_degree, kl_codim2, maxwell_degree, specialization_report, stratum_profile,
    StratumKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz-strata",
    version,
    about = "Exact stratum degrees, double Hurwitz numbers, and a factorization oracle",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit CSV (key,value rows) instead of JSON
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral of a psi-class monomial over the genus-0 moduli space
    PsiIntegral {
        /// Comma-separated exponents, one per marked point, e.g. 1,1,0,0,0
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u64>,
    },
    /// Direct Segre-weighted integral for a pole profile
    SegreDeg {
        /// Pole profile, e.g. "3,1" or "1^2 3^1"
        #[arg(long)]
        kappa: String,
        /// Power of the extra psi class in the numerator
        #[arg(long, default_value_t = 0)]
        power: u64,
    },
    /// Degree of the node class delta_{0,0}
    Delta00 {
        #[arg(long)]
        kappa: String,
        /// closed | split
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Degree of a codimension-1 discriminant stratum
    StratumDeg {
        /// caustic | maxwell
        #[arg(long = "type")]
        stratum_type: String,
        #[arg(long)]
        kappa: String,
        /// Add a warning to the report when the value is negative
        #[arg(long)]
        warn_negative: bool,
    },
    /// One of the three codimension-2 stratum degree polynomials
    KlCodim2 {
        /// 1 (caustic,caustic) | 2 (caustic,maxwell) | 3 (maxwell,maxwell)
        #[arg(long)]
        which: u8,
        #[arg(long)]
        n: u64,
    },
    /// Closed-form Hurwitz number for a codimension-1 family
    HurwitzClosed {
        /// caustic | maxwell
        #[arg(long)]
        family: String,
        #[arg(long)]
        kappa: String,
        /// printed | calibrated
        #[arg(long, default_value = "printed")]
        mode: String,
    },
    /// Permutation-factorization counts for a class tuple
    Oracle {
        /// Semicolon-separated partitions, e.g. "3,1;2,1,1;2,1,1"
        #[arg(long)]
        classes: String,
        /// dfs | sieve
        #[arg(long, default_value = "sieve")]
        method: String,
    },
    /// Closed formula vs enumeration oracle, reported side by side
    Compare {
        /// caustic | maxwell
        #[arg(long)]
        family: String,
        #[arg(long)]
        kappa: String,
        /// printed | calibrated
        #[arg(long, default_value = "printed")]
        mode: String,
    },
    /// Run an identity verification suite
    Verify {
        /// kazarian | l42 | abel-set | abel-classical | coeff
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_m: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Substitute codimension-1 profiles into the codimension-2 polynomials
    Specialize {
        /// Inclusive range of covering degrees, e.g. 4..12
        #[arg(long)]
        range: String,
    },
    /// Evaluate a family over every partition of n
    Sweep {
        /// caustic | maxwell
        #[arg(long)]
        family: String,
        /// Covering degree whose partitions to sweep
        #[arg(long = "kappa-all-n")]
        kappa_all_n: u64,
    },
}

fn parse_kind(text: &str) -> Result<StratumKind> {
    match text {
        "caustic" => Ok(StratumKind::Caustic),
        "maxwell" => Ok(StratumKind::Maxwell),
        other => Err(Error::parse(format!(
            "unknown stratum family '{other}' (expected caustic|maxwell)"
        ))),
    }
}

fn parse_mode(text: &str) -> Result<ConversionMode> {
    match text {
        "printed" => Ok(ConversionMode::Printed),
        "calibrated" => Ok(ConversionMode::Calibrated),
        other => Err(Error::parse(format!(
            "unknown mode '{other}' (expected printed|calibrated)"
        ))),
    }
}

fn parse_method(text: &str) -> Result<CountMethod> {
    match text {
        "dfs" => Ok(CountMethod::Dfs),
        "sieve" => Ok(CountMethod::Sieve),
        other => Err(Error::parse(format!(
            "unknown method '{other}' (expected dfs|sieve)"
        ))),
    }
}

fn parse_range(text: &str) -> Result<(u64, u64)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::parse(format!("range '{text}' is not of the form a..b")))?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad range start '{a}'")))?;
    let b: u64 = b
        .trim()
        .parse()
        .map_err(|_| Error::parse(format!("bad range end '{b}'")))?;
    Ok((a, b))
}

fn envelope(command: &str, inputs: Value, body: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("schema_version".into(), json!(REPORT_SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    map.insert("inputs".into(), inputs);
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            map.insert(k, v);
        }
    }
    Value::Object(map)
}

fn execute(command: &Command) -> Result<(Value, i32)> {
    let report = match command {
        Command::PsiIntegral { exponents } => {
            let value = psi_integral(exponents)?;
            envelope(
                "psi-integral",
                json!({ "exponents": exponents }),
                json!({ "value": value.to_string() }),
            )
        }
        Command::SegreDeg { kappa, power } => {
            let kappa = Partition::parse(kappa)?;
            let value = segre_degree(&kappa, *power)?;
            envelope(
                "segre-deg",
                json!({ "kappa": kappa.parts(), "power": power }),
                json!({ "value": format_rat(&value) }),
            )
        }
        Command::Delta00 { kappa, method } => {
            let kappa = Partition::parse(kappa)?;
            let value = match method.as_str() {
                "closed" => delta00_closed(&kappa),
                "split" => delta00_split_sum(&kappa)?,
                other => {
                    return Err(Error::parse(format!(
                        "unknown method '{other}' (expected closed|split)"
                    )))
                }
            };
            envelope(
                "delta00",
                json!({ "kappa": kappa.parts(), "method": method }),
                json!({ "value": format_rat(&value) }),
            )
        }
        Command::StratumDeg {
            stratum_type,
            kappa,
            warn_negative,
        } => {
            let kind = parse_kind(stratum_type)?;
            let kappa = Partition::parse(kappa)?;
            let value = match kind {
                StratumKind::Caustic => caustic_degree(&kappa)?,
                StratumKind::Maxwell => maxwell_degree(&kappa)?,
            };
            let mut warnings: Vec<String> = Vec::new();
            if *warn_negative && crate::exact::is_negative(&value) {
                warnings.push("degree is negative (outside plausible validity)".into());
            }
            envelope(
                "stratum-deg",
                json!({ "type": stratum_type, "kappa": kappa.parts() }),
                json!({ "value": format_rat(&value), "warnings": warnings }),
            )
        }
        Command::KlCodim2 { which, n } => {
            let value = kl_codim2(*which, *n)?;
            envelope(
                "kl-codim2",
                json!({ "which": which, "n": n }),
                json!({ "value": format_rat(&value) }),
            )
        }
        Command::HurwitzClosed {
            family,
            kappa,
            mode,
        } => {
            let kind = parse_kind(family)?;
            let mode = parse_mode(mode)?;
            let kappa = Partition::parse(kappa)?;
            let value = match (kind, mode) {
                (StratumKind::Caustic, ConversionMode::Printed) => corollary_caustic(&kappa)?,
                (StratumKind::Maxwell, ConversionMode::Printed) => corollary_maxwell(&kappa)?,
                (_, ConversionMode::Calibrated) => {
                    let degree = match kind {
                        StratumKind::Caustic => caustic_degree(&kappa)?,
                        StratumKind::Maxwell => maxwell_degree(&kappa)?,
                    };
                    let spec = CoveringSpec::new(
                        kappa.clone(),
                        stratum_profile(kind, kappa.size())?,
                    )?;
                    degree_to_hurwitz(&degree, &spec, mode)
                }
            };
            let mut warnings: Vec<String> = Vec::new();
            if crate::exact::is_negative(&value) {
                warnings.push("closed-form Hurwitz number is negative".into());
            }
            envelope(
                "hurwitz-closed",
                json!({ "family": family, "kappa": kappa.parts(), "mode": mode.as_str() }),
                json!({ "value": format_rat(&value), "warnings": warnings }),
            )
        }
        Command::Oracle { classes, method } => {
            let tuple = ClassTuple::parse(classes)?;
            let method = parse_method(method)?;
            let mut oracle = Oracle::new();
            let result = oracle.query(&tuple, method)?;
            envelope(
                "oracle",
                json!({ "classes": tuple.classes.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(), "method": method }),
                serde_json::to_value(&result).expect("serializable"),
            )
        }
        Command::Compare {
            family,
            kappa,
            mode,
        } => {
            let kind = parse_kind(family)?;
            let mode = parse_mode(mode)?;
            let kappa = Partition::parse(kappa)?;
            let mut oracle = Oracle::new();
            let result = compare_family(&mut oracle, kind, &kappa, mode)?;
            envelope(
                "compare",
                json!({ "family": family, "kappa": kappa.parts(), "mode": mode.as_str() }),
                serde_json::to_value(&result).expect("serializable"),
            )
        }
        Command::Verify { suite, max_m, seed } => {
            let suite = Suite::parse(suite)?;
            let result = run_suite(suite, *max_m, *seed)?;
            let exit = if result.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            let value = envelope(
                "verify",
                json!({ "suite": result.suite, "max_m": max_m, "seed": seed }),
                serde_json::to_value(&result).expect("serializable"),
            );
            return Ok((value, exit));
        }
        Command::Specialize { range } => {
            let (from, to) = parse_range(range)?;
            let entries = specialization_report(from, to)?;
            envelope(
                "specialize",
                json!({ "range": format!("{from}..{to}") }),
                json!({ "entries": entries }),
            )
        }
        Command::Sweep { family, kappa_all_n } => {
            let kind = parse_kind(family)?;
            let entries = sweep_family(kind, *kappa_all_n)?;
            envelope(
                "sweep",
                json!({ "family": family, "n": kappa_all_n }),
                json!({ "entries": entries }),
            )
        }
    };
    Ok((report, EXIT_OK))
}

fn render(report: &Value, csv: bool) -> String {
    if csv {
        let mut out = String::from("key,value\n");
        if let Value::Object(map) = report {
            for (k, v) in map {
                let cell = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                let escaped = cell.replace('"', "\"\"");
                out.push_str(&format!("{k},\"{escaped}\"\n"));
            }
        }
        out
    } else {
        let mut out = serde_json::to_string_pretty(report).expect("serializable");
        out.push('\n');
        out
    }
}

fn error_report(command: &str, err: &Error) -> Value {
    json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": command,
        "error": err.to_string(),
    })
}

/// Runs the CLI on the full argv (program name included) and returns the
/// exit code with the rendered report.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, anything else is usage
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return (code, e.to_string());
        }
    };
    let command_name = argv.get(1).cloned().unwrap_or_default();
    match execute(&cli.command) {
        Ok((report, exit)) => (exit, render(&report, cli.csv)),
        Err(err) => {
            let exit = match err {
                Error::Parse(_) => EXIT_USAGE,
                Error::Domain(_) | Error::Resource(_) | Error::Internal(_) => EXIT_DOMAIN,
            };
            (exit, render(&error_report(&command_name, &err), cli.csv))
        }
    }
}
