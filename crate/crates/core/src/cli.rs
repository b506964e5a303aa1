//! The `rskrev` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a `check` is
//! negative, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::enumeration::{
    count_set, list_set, m_count_formula, r_count_formula, run_checks, CheckSelection, SetMembers,
    SetSelector, SweepConfig, DEFAULT_LIST_CAP, DEFAULT_MAX_N,
};
use crate::error::Error;
use crate::evacuation::{delta, evacuation_trace};
use crate::permutation::Permutation;
use crate::reverse_maps::{membership_report, phi, phi_parameters_of, theta, PhiParameters};
use crate::rsk::rsk;
use crate::tableau::{Grid, Tableau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rskrev",
    version,
    about = "RSK, evacuation, and exhaustive checks on permutations with Q(w) = Q(w^r)"
)]
pub struct Cli {
    /// Emit JSON instead of ASCII tableaux.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insertion and recording tableaux of a permutation.
    Rsk {
        /// Permutation, e.g. `52314` or `5 2 3 1 4`.
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Evacuation of a standard tableau, with the vacated cells.
    Evac {
        /// Inline JSON (`[[1,3,5],[2],[4]]`) or a path to a JSON/ASCII file.
        tableau: String,
    },
    /// One application of the delta operator.
    Delta {
        /// Inline JSON or a path; labels need not be 1..n.
        tableau: String,
    },
    /// The lifting map phi_{a,b} from S_n to S_{n+2}.
    Phi {
        /// Value placed first; 1 <= a <= n+2.
        #[arg(long)]
        a: usize,
        /// Value placed last; 1 <= b <= n+2, b != a.
        #[arg(long)]
        b: usize,
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// The left inverse theta from S_{n+2} to S_n.
    Theta {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// R and H membership, by definition and by the tableau characterization.
    Check {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Count (and optionally list) R_n, H_n or M_n.
    Enumerate {
        /// R, H or M.
        #[arg(long, value_parser = parse_set)]
        set: SetSelector,
        /// Size of the permutations or tableaux.
        #[arg(long)]
        n: usize,
        /// Also print the members.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run exhaustive checks and append reports to a JSON-lines file.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Worker threads for exhaustive sweeps.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Largest n accepted for sweeps (at most 13).
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Largest n whose members may be listed.
    #[arg(long, default_value_t = DEFAULT_LIST_CAP)]
    pub list_cap: usize,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            workers: self.workers.max(1),
            max_n: self.max_n,
            list_cap: self.list_cap,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// |R_n| against the closed form.
    #[arg(long)]
    pub count: bool,
    /// Definition of R_n against the tableau characterization.
    #[arg(long)]
    pub characterization: bool,
    /// The eight RSK symmetry relations (n <= 7).
    #[arg(long)]
    pub symmetry: bool,
    /// Left inverse, partition and equivariance laws of phi/theta (source n <= 6).
    #[arg(long)]
    pub phi_theta: bool,
    /// theta maps R_{n+2} into R_n and phi lifts back.
    #[arg(long)]
    pub transport: bool,
    /// |M_n|, its first-row description, and |R_n| = |M_n| f^lambda.
    #[arg(long)]
    pub m_set: bool,
    /// Every check above (the default when none is given).
    #[arg(long)]
    pub all: bool,
    /// Largest symmetric group swept.
    #[arg(long)]
    pub n_max: usize,
    /// JSON-lines results file; reports are appended.
    #[arg(long, default_value = "verification.jsonl")]
    pub out: PathBuf,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

impl VerifyArgs {
    fn selection(&self) -> CheckSelection {
        let picked = CheckSelection {
            count: self.count,
            characterization: self.characterization,
            symmetry: self.symmetry,
            phi_theta: self.phi_theta,
            transport: self.transport,
            m_set: self.m_set,
        };
        if self.all || picked.is_empty() {
            CheckSelection::all()
        } else {
            picked
        }
    }
}

fn parse_set(s: &str) -> Result<SetSelector, String> {
    s.parse()
}

/// Failure that aborts a command before any result is printed.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

struct Outcome {
    text: String,
    json: serde_json::Value,
    exit: i32,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            exit: EXIT_OK,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let message = line.strip_prefix("error: ").unwrap_or(line);
            return report_error(message, wants_json, stdout, stderr);
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = if cli.json {
                writeln!(stdout, "{}", outcome.json)
            } else {
                writeln!(stdout, "{}", outcome.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            outcome.exit
        }
        Err(e) => report_error(&e.to_string(), cli.json, stdout, stderr),
    }
}

fn report_error(message: &str, json: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {message}");
    if json {
        let _ = writeln!(stdout, "{}", json!({ "error": message }));
    }
    EXIT_USAGE
}

fn parse_perm(parts: &[String]) -> Result<Permutation, Error> {
    parts.join(" ").parse()
}

/// Inline JSON when the argument starts with `[` or `{`, otherwise a file.
fn read_tableau_text(arg: &str) -> Result<String, CliError> {
    match arg.trim_start().chars().next() {
        Some('[') | Some('{') => Ok(arg.to_string()),
        _ => std::fs::read_to_string(arg).map_err(|source| CliError::Io {
            path: arg.to_string(),
            source,
        }),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Rsk { perm } => {
            let w = parse_perm(perm)?;
            let pair = rsk(&w);
            let text = side_by_side(&[("P", pair.p.to_string()), ("Q", pair.q.to_string())]);
            Ok(Outcome::ok(
                text,
                json!({ "permutation": w, "P": pair.p, "Q": pair.q }),
            ))
        }
        Command::Evac { tableau } => {
            let t = Tableau::from_text(&read_tableau_text(tableau)?)?;
            let trace = evacuation_trace(&t);
            let cells: Vec<String> = trace
                .vacated_cells
                .iter()
                .map(ToString::to_string)
                .collect();
            let text = format!(
                "{}\nvacated: {}",
                side_by_side(&[
                    ("T", t.to_string()),
                    ("evacuation", trace.evacuation.to_string())
                ]),
                cells.join(" ")
            );
            Ok(Outcome::ok(
                text,
                json!({ "input": t, "evacuation": trace.evacuation, "vacated": trace.vacated_cells }),
            ))
        }
        Command::Delta { tableau } => {
            let g = Grid::from_text(&read_tableau_text(tableau)?)?;
            let (result, vacated) = delta(&g)?;
            let text = format!(
                "{}\nvacated: {vacated}",
                side_by_side(&[("T", g.to_string()), ("delta", result.to_string())])
            );
            Ok(Outcome::ok(
                text,
                json!({ "input": g, "result": result, "vacated": vacated }),
            ))
        }
        Command::Phi { a, b, perm } => {
            let w = parse_perm(perm)?;
            let params = PhiParameters::new(*a, *b, w.len())?;
            let image = phi(params, &w)?;
            Ok(Outcome::ok(
                image.to_string(),
                json!({ "a": a, "b": b, "input": w, "output": image }),
            ))
        }
        Command::Theta { perm } => {
            let w = parse_perm(perm)?;
            let image = theta(&w)?;
            let params = phi_parameters_of(&w)?;
            Ok(Outcome::ok(
                image.to_string(),
                json!({ "input": w, "output": image, "a": params.a, "b": params.b }),
            ))
        }
        Command::Check { perm } => {
            let w = parse_perm(perm)?;
            let report = membership_report(&w);
            let text = format!(
                "w = {}\n{}\nin R (Q(w) = Q(w^r)): {}\nin H (symmetric hook): {}\nfirst-row property: {}\ncharacterization: {}\ndefinition and characterization agree: {}",
                w,
                side_by_side(&[("Q(w)", report.q.to_string()), ("Q(w^r)", report.q_reverse.to_string())]),
                report.in_r,
                report.in_h,
                report.first_row_property,
                report.characterization,
                report.agrees,
            );
            let exit = if report.in_r && report.agrees {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Outcome { text, json, exit })
        }
        Command::Enumerate {
            set,
            n,
            list,
            sweep,
        } => enumerate(*set, *n, *list, &sweep.config()),
        Command::Verify(args) => verify(args),
    }
}

fn enumerate(
    set: SetSelector,
    n: usize,
    list: bool,
    cfg: &SweepConfig,
) -> Result<Outcome, CliError> {
    let count = count_set(set, n, cfg)?;
    let formula = match set {
        SetSelector::R => Some(r_count_formula(n)),
        SetSelector::M => Some(m_count_formula(n)),
        SetSelector::H => None,
    };
    let note = (set == SetSelector::M && n.is_multiple_of(2))
        .then_some("no symmetric hook shape has even size, so M_n is empty");
    let members = if list {
        Some(list_set(set, n, cfg)?)
    } else {
        None
    };

    let mut text = format!("|{set}_{n}| = {count}");
    if let Some(f) = formula {
        text.push_str(&format!(" (closed form {f})"));
    }
    if let Some(note) = note {
        text.push_str(&format!("\nnote: {note}"));
    }
    match &members {
        Some(SetMembers::Permutations(ws)) => {
            for w in ws {
                text.push_str(&format!("\n{w}"));
            }
        }
        Some(SetMembers::Tableaux(ts)) => {
            for t in ts {
                text.push_str(&format!("\n\n{t}"));
            }
        }
        None => {}
    }

    let mut json = json!({ "set": set, "n": n, "count": count, "formula": formula });
    if let Some(note) = note {
        json["note"] = json!(note);
    }
    if let Some(members) = members {
        json["members"] = serde_json::to_value(members).expect("members serialize");
    }
    Ok(Outcome::ok(text, json))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let cfg = args.sweep.config();
    let reports = run_checks(args.selection(), args.n_max, &cfg)?;
    append_reports(&args.out, reports.iter().map(|r| r.to_json_line()))?;
    let text = reports
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n");
    let exit = if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    let json = serde_json::to_value(&reports).expect("reports serialize");
    Ok(Outcome { text, json, exit })
}

fn append_reports(path: &Path, lines: impl Iterator<Item = String>) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io)?;
    for line in lines {
        writeln!(file, "{line}").map_err(io)?;
    }
    Ok(())
}

/// Lays out labelled multi-line blocks next to each other.
fn side_by_side(blocks: &[(&str, String)]) -> String {
    let columns: Vec<Vec<String>> = blocks
        .iter()
        .map(|(label, body)| {
            let mut lines = vec![format!("{label}:")];
            lines.extend(body.lines().map(str::to_string));
            lines
        })
        .collect();
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(|l| l.chars().count()).max().unwrap_or(0))
        .collect();
    (0..height)
        .map(|i| {
            let mut line = String::new();
            for (k, col) in columns.iter().enumerate() {
                let cell = col.get(i).map(String::as_str).unwrap_or("");
                if k + 1 < columns.len() {
                    line.push_str(&format!("{cell:<w$}    ", w = widths[k]));
                } else {
                    line.push_str(cell);
                }
            }
            line.trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("rskrev").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn side_by_side_layout() {
        let s = side_by_side(&[("P", "1 3 4\n2\n5".into()), ("Q", "1 3 5\n2\n4".into())]);
        assert_eq!(s, "P:       Q:\n1 3 4    1 3 5\n2        2\n5        4");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, out, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);

        let (code, out, _) = run_capture(&["--json", "rsk", "1 1 2"]);
        assert_eq!(code, EXIT_USAGE);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["error"], "duplicate value 1 at position 2");
    }

    #[test]
    fn json_error_for_clap_failures() {
        let (code, out, _) = run_capture(&["--json", "phi", "52314"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(
            serde_json::from_str::<serde_json::Value>(out.trim()).unwrap()["error"].is_string()
        );
    }

    #[test]
    fn help_is_success() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn verify_defaults_to_everything() {
        let args = VerifyArgs {
            count: false,
            characterization: false,
            symmetry: false,
            phi_theta: false,
            transport: false,
            m_set: false,
            all: false,
            n_max: 3,
            out: PathBuf::new(),
            sweep: SweepArgs {
                workers: 1,
                max_n: 11,
                list_cap: 8,
            },
        };
        assert_eq!(args.selection(), CheckSelection::all());
        let only = VerifyArgs {
            count: true,
            ..args
        };
        assert_eq!(
            only.selection(),
            CheckSelection {
                count: true,
                ..Default::default()
            }
        );
    }
}
