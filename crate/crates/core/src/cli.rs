//! The `gbf` command line, as a library function so it can be tested
//! without spawning a process.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::criteria::{decide, existence_rule, build_witness, construction_steps, Verdict, MAX_DECIDE_VARS};
use crate::error::Error;
use crate::gbf::{first_violation, GbfType};
use crate::oracle::{self, DEFAULT_BUDGET};
use crate::tables;
use crate::witness::WitnessFile;

/// Exit code for malformed invocations.
pub const USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gbf", version, about = "Existence of generalized bent functions Z_2^n -> Z_m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a GBF of type {M,N} exists (exit 0 yes, 1 no, 2 unknown).
    Decide {
        m: u64,
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify a witness for {M,N}.
    Construct {
        m: u64,
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a witness file exactly (exit 0 iff it is a GBF).
    Verify { file: PathBuf },
    /// Count all GBFs of a small type by exhaustive search.
    Oracle {
        m: u64,
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Decide every type in a grid of moduli and variable counts.
    Scan {
        /// Moduli, as A..B (inclusive).
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u64>,
        /// Variable counts, as C..D (inclusive).
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Recompute a reference table.
    Table {
        #[arg(value_enum)]
        which: Table,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Rp,
    P7,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Output {
        Output { code: USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { code: USAGE, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn execute(command: Command) -> Output {
    match command {
        Command::Decide { m, n, json } => cmd_decide(m, n, json),
        Command::Construct { m, n, out } => cmd_construct(m, n, out),
        Command::Verify { file } => cmd_verify(file),
        Command::Oracle { m, n, budget } => cmd_oracle(m, n, budget),
        Command::Scan { m, n, format } => cmd_scan(m, n, format),
        Command::Table { which } => cmd_table(which),
    }
}

fn checked_type(m: u64, n: u32) -> Result<GbfType, Output> {
    let t = GbfType::new(m, n).map_err(Output::usage)?;
    if n > MAX_DECIDE_VARS {
        return Err(Output::usage(Error::OutOfRange { what: "n", value: n as u64 }));
    }
    Ok(t)
}

/// Human-readable rendering of a verdict.
pub fn describe(v: &Verdict) -> String {
    let mut out = String::new();
    let t = v.gbf_type();
    match v {
        Verdict::Exists { rule, construction, witness, verified, .. } => {
            let _ = writeln!(out, "Exists {t}: {rule}");
            for step in construction {
                let _ = writeln!(out, "  {step}");
            }
            match witness {
                Some(w) if *verified => {
                    let _ = writeln!(out, "  witness verified exactly");
                    if w.values().len() <= 64 {
                        let _ = writeln!(out, "  {}", WitnessFile::to_json(w));
                    }
                }
                _ => {
                    let _ = writeln!(out, "  witness not materialized; run `gbf construct {} {}`", t.m, t.n);
                }
            }
        }
        Verdict::NotExists { report } => {
            let _ = writeln!(out, "NotExists {t}: {}, {}", report.cited(), report.summary().replace("; ", ", "));
            if let Some(p) = report.propagation {
                let _ = writeln!(out, "  {} applied to {{{},{}}} and carried to the divisor {}", report.criterion, p.from, t.n, p.to);
            }
            let _ = writeln!(out, "  excludes {} for m = {}", report.excluded, report.evaluated_modulus);
            if !report.also_applicable.is_empty() {
                let ids: Vec<&str> = report.also_applicable.iter().map(|c| c.as_str()).collect();
                let _ = writeln!(out, "  also applicable: {}", ids.join(" "));
            }
        }
        Verdict::Unknown { attempts, .. } => {
            let _ = writeln!(out, "Unknown {t}");
            for a in attempts {
                let status = serde_json::to_value(a.status).expect("status serializes");
                let _ = writeln!(out, "  {} {}: {}", a.criterion, status.as_str().unwrap_or(""), a.detail.replace("; ", ", "));
            }
        }
    }
    out
}

fn cmd_decide(m: u64, n: u32, json: bool) -> Output {
    let t = match checked_type(m, n) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let v = decide(t).expect("type within guards");
    let stdout = if json {
        serde_json::to_string_pretty(&v).expect("verdict serializes") + "\n"
    } else {
        describe(&v)
    };
    Output { code: v.exit_code(), stdout, stderr: String::new() }
}

fn cmd_construct(m: u64, n: u32, out: Option<PathBuf>) -> Output {
    let t = match checked_type(m, n) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let Some(rule) = existence_rule(t) else {
        let v = decide(t).expect("type within guards");
        return Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("no existence rule applies to {t}; decide says:\n{}", describe(&v)),
        };
    };
    let f = match build_witness(t, rule) {
        Ok(f) => f,
        Err(e) => return Output::usage(e),
    };
    if let Some((y, sq)) = first_violation(&f) {
        return Output { code: 4, stdout: String::new(), stderr: format!("internal error: witness fails at y={y}: {sq}\n") };
    }
    let mut chain = format!("{t} via {rule}, verified exactly\n");
    for step in construction_steps(t, rule) {
        let _ = writeln!(chain, "  {step}");
    }
    match out {
        Some(path) => match WitnessFile::write(&path, &f) {
            Ok(()) => Output::ok(format!("{chain}wrote {}\n", path.display())),
            Err(e) => Output::usage(e),
        },
        None => Output { code: 0, stdout: WitnessFile::to_json(&f) + "\n", stderr: chain },
    }
}

fn cmd_verify(file: PathBuf) -> Output {
    let f = match WitnessFile::read(&file) {
        Ok(f) => f,
        Err(e) => return Output::usage(e),
    };
    let t = f.gbf_type();
    match first_violation(&f) {
        None => Output::ok(format!("GBF {t}: |W_f(y)|^2 = {} for all y\n", 1u64 << t.n)),
        Some((y, sq)) => Output {
            code: 1,
            stdout: format!("not a GBF {t}: y = {y}, |W_f(y)|^2 = {sq}, expected {}\n", 1u64 << t.n),
            stderr: String::new(),
        },
    }
}

fn cmd_oracle(m: u64, n: u32, budget: u128) -> Output {
    let t = match GbfType::new(m, n) {
        Ok(t) => t,
        Err(e) => return Output::usage(e),
    };
    match oracle::enumerate(t, budget) {
        Ok(r) => {
            let mut s = format!("{} of {} tables of type {t} are GBFs\n", r.gbf_count, r.total_candidates);
            for w in &r.witnesses {
                let _ = writeln!(s, "  {}", WitnessFile::to_json(w));
            }
            Output::ok(s)
        }
        Err(e) => Output::usage(format!("{e}; pass --budget {} to run it", t.table_count())),
    }
}

fn scan_row(v: &Verdict) -> [String; 5] {
    let t = v.gbf_type();
    let detail = match v {
        Verdict::Exists { construction, verified, .. } => {
            format!("{} step construction{}", construction.len(), if *verified { " verified" } else { "" })
        }
        Verdict::NotExists { report } => report.summary(),
        Verdict::Unknown { .. } => "no criterion applies".to_string(),
    };
    [t.m.to_string(), t.n.to_string(), v.name().to_string(), v.citation(), detail.replace(',', ";")]
}

fn cmd_scan(ms: RangeInclusive<u64>, ns: RangeInclusive<u64>, format: Format) -> Output {
    if *ms.start() < 2 {
        return Output::usage("m must be at least 2");
    }
    if *ns.start() < 1 || *ns.end() > MAX_DECIDE_VARS as u64 {
        return Output::usage(format!("n must lie in 1..{MAX_DECIDE_VARS}"));
    }
    let cells: Vec<(u64, u32)> = ms.flat_map(|m| ns.clone().map(move |n| (m, n as u32))).collect();
    let rows: Vec<[String; 5]> = cells
        .par_iter()
        .map(|&(m, n)| scan_row(&decide(GbfType::new(m, n).expect("checked")).expect("checked")))
        .collect();
    let header = ["m", "n", "verdict", "criterion", "detail"];
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for r in &rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        Format::Md => {
            let _ = writeln!(out, "| {} |", header.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
            for r in &rows {
                let _ = writeln!(out, "| {} |", r.join(" | "));
            }
        }
    }
    Output::ok(out)
}

fn cmd_table(which: Table) -> Output {
    Output::ok(match which {
        Table::Rp => tables::render_rp(&tables::table_rp()),
        Table::P7 => tables::render_p7(&tables::table_p7()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gbf(args: &str) -> Output {
        run(std::iter::once("gbf").chain(args.split_whitespace()))
    }

    #[test]
    fn decide_exit_codes() {
        assert_eq!(gbf("decide 4 5").code, 0);
        let o = gbf("decide 9 3");
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("C1-LamLeung"), "{}", o.stdout);
        assert_eq!(gbf("decide 14 1").code, 2);
        assert_eq!(gbf("decide 1 1").code, USAGE);
        assert_eq!(gbf("decide 4 25").code, USAGE);
        assert_eq!(gbf("decide x 1").code, USAGE);
        assert_eq!(gbf("--help").code, 0);
    }

    #[test]
    fn decide_text() {
        let o = gbf("decide 398 7");
        assert!(o.stdout.starts_with("NotExists {398,7}: C3-P7, s=1, r=9"), "{}", o.stdout);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..10"), Ok(2..=10));
        assert!(parse_range("10..2").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn oracle_and_tables() {
        assert!(gbf("oracle 2 2").stdout.starts_with("8 of 16"));
        assert!(gbf("oracle 3 1").stdout.starts_with("0 of 9"));
        assert_eq!(gbf("oracle 5 3 --budget 100").code, USAGE);
        assert!(gbf("table p7").stdout.starts_with("p |"));
    }
}
