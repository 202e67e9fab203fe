use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use patience_lab::render;
use patience_lab::report::RunReport;
use patience_lab::shadow::{ne_iterates, sw_iterates, ShadowDiagram};
use patience_lab::verify::{parse_checks, verify};
use patience_lab::Permutation;

const USAGE_ERROR: u8 = 2;
const CHECK_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "patience-lab",
    version,
    about = "Extended Patience Sorting, RSK and shadow diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Piles, tableaux, reverse patience word and pattern avoidance of one permutation
    Run {
        /// One-line notation: `64518723`, `6 4 5 1 8 7 2 3` or `6,4,5,1,8,7,2,3`
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Draw shadow diagram iterates
    Geom {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        /// Southwest shadowlines (the default)
        #[arg(long, conflicts_with = "ne")]
        sw: bool,
        /// Northeast shadowlines
        #[arg(long)]
        ne: bool,
        /// Iterate to draw, counted from 0
        #[arg(long, conflicts_with = "all")]
        iterate: Option<usize>,
        /// Draw every iterate
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustively check properties over S_1 through S_n
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma separated check names; all checks when omitted
        #[arg(long, default_value = "")]
        checks: String,
        /// Worker threads; defaults to the available parallelism
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Ascii,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Svg => "svg",
            Format::Ascii => "ascii",
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE_ERROR,
        message: message.into(),
    }
}

fn parse_perm(tokens: &[String]) -> Result<Permutation, Failure> {
    tokens
        .join(" ")
        .parse()
        .map_err(|e| usage(format!("invalid permutation: {e}")))
}

fn only(format: Format, allowed: &[Format]) -> Result<Format, Failure> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        let names: Vec<_> = allowed.iter().map(|f| f.name()).collect();
        Err(usage(format!(
            "--format {} is not available here (expected one of: {})",
            format.name(),
            names.join(", ")
        )))
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn describe(d: &ShadowDiagram) -> String {
    let mut s = format!(
        "iterate {} ({}): {} line(s)\n",
        d.iterate(),
        d.orientation().label(),
        d.lines().len()
    );
    for (i, line) in d.lines().iter().enumerate() {
        let pts: Vec<String> = line.points().iter().map(ToString::to_string).collect();
        let sal: Vec<String> = line
            .salient_points()
            .iter()
            .map(ToString::to_string)
            .collect();
        let _ = write!(s, "  line {}", i + 1);
        if let Some(g) = line.group() {
            let _ = write!(s, " [from line {g}]");
        }
        let _ = writeln!(
            s,
            ": points {}; salient {}",
            pts.join(" "),
            if sal.is_empty() {
                "none".into()
            } else {
                sal.join(" ")
            }
        );
    }
    s
}

fn execute(command: Command) -> Result<(String, Option<PathBuf>, bool), Failure> {
    match command {
        Command::Run { perm, output } => {
            let p = parse_perm(&perm)?;
            let report = RunReport::of(&p);
            let text = match only(
                output.format.unwrap_or(Format::Text),
                &[Format::Text, Format::Json],
            )? {
                Format::Json => json(&report),
                _ => format!("{report}\n"),
            };
            Ok((text, output.out, true))
        }
        Command::Geom {
            perm,
            sw: _,
            ne,
            iterate,
            all,
            output,
        } => {
            let p = parse_perm(&perm)?;
            let seq = if ne { ne_iterates(&p) } else { sw_iterates(&p) };
            let chosen: Vec<&ShadowDiagram> = if all {
                seq.iterates().iter().collect()
            } else {
                let m = iterate.unwrap_or(0);
                match seq.get(m) {
                    Some(d) => vec![d],
                    None => {
                        let available = match seq.len() {
                            0 => "none".to_owned(),
                            k => format!("0..={}", k - 1),
                        };
                        return Err(usage(format!(
                            "iterate {m} out of range for [{p}]; available iterates: {available}"
                        )));
                    }
                }
            };
            let n = p.len();
            let format = output.format.unwrap_or(Format::Ascii);
            let text = match format {
                Format::Ascii => {
                    let mut s = String::new();
                    for d in &chosen {
                        if chosen.len() > 1 {
                            let _ = writeln!(s, "iterate {}", d.iterate());
                        }
                        s.push_str(&render::ascii(d, n));
                    }
                    s
                }
                Format::Svg => render::svg(&chosen, n),
                Format::Json if all => json(&chosen),
                Format::Json => json(chosen[0]),
                Format::Text => chosen.iter().map(|d| describe(d)).collect(),
            };
            Ok((text, output.out, true))
        }
        Command::Verify {
            n,
            checks,
            jobs,
            output,
        } => {
            let checks = parse_checks(&checks).map_err(|e| usage(e.to_string()))?;
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |j| j.get()));
            let report = verify(n, &checks, jobs).map_err(|e| usage(e.to_string()))?;
            let text = match only(
                output.format.unwrap_or(Format::Text),
                &[Format::Text, Format::Json],
            )? {
                Format::Json => json(&report),
                _ => format!("{report}\n"),
            };
            Ok((text, output.out, report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((text, out, passed)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(USAGE_ERROR);
                }
            } else {
                print!("{text}");
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(CHECK_FAILURE)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
