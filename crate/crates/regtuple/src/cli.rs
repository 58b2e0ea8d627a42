//! Argument parsing and the subcommands behind the `regtuple` binary.
//!
//! Every command builds a [`Outcome`]: a human-readable table, the same
//! content as records, and an exit status. [`run`] prints one of the two
//! renderings and optionally writes the records to `--out`.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use regtuple_core::congruence::{check_family, Strength};
use regtuple_core::etaq::{eta_quotient, EtaQuotient, Identity};
use regtuple_core::search::{self, ScanJob, DEFAULT_MIN_SUPPORT};
use regtuple_core::tuples::{t_oracle, t_series, ORACLE_LIMIT};
use regtuple_core::{CongruenceFamily, Ring, Status, Target, TruncatedSeries, TupleSpec, VerificationReport};

use crate::catalog::{self, Params, CATALOG};
use crate::parallel;
use crate::records::{self, format_target, CheckRecord, Record};

/// Exit status when every check passed.
pub const EXIT_PASS: i32 = 0;
/// Exit status when a counterexample was found.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for bad flags or parameters outside a result's hypotheses.
pub const EXIT_USAGE: i32 = 2;

/// Largest series order any command will allocate.
pub const MAX_ORDER: u64 = 20_000_000;
/// `verify` without `--nmax` tests `n <= 1000`, or fewer if that would push
/// the largest index past this bound.
pub const DEFAULT_VERIFY_INDEX: u64 = 200_000;

#[derive(Parser, Debug)]
#[command(name = "regtuple", version, about = "q-series expansions and congruence checks for k-tuple ℓ-regular partitions")]
pub struct Cli {
    /// How results are printed on stdout.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub output: OutputFormat,
    /// Also write the records rendering to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the coefficients of T_{ℓ,k} or of an eta quotient.
    Expand(ExpandArgs),
    /// Check a named congruence family; exit 1 on a counterexample.
    Verify(VerifyArgs),
    /// Search for progressions A n + B on which every coefficient vanishes mod M.
    Scan(ScanArgs),
    /// List every failure of one progression.
    Audit(AuditArgs),
    /// Check T_2(p^2 n + p s + (p^2 - 1)/8) for 1 <= s <= p - 1.
    Thm13Progressions(Thm13Args),
    /// Compare the series for T_{ℓ,k} with brute-force enumeration.
    OracleCheck(OracleArgs),
    /// Check the six theta-function identities coefficient by coefficient.
    Identities(IdentitiesArgs),
    /// Print the ids accepted by `verify`.
    ListTheorems,
}

#[derive(Args, Debug)]
#[group(id = "series", required = true, multiple = false)]
pub struct SeriesChoice {
    /// T_{ℓ,k} as "ℓ,k".
    #[arg(long = "t", value_parser = parse_tuple, group = "series")]
    pub tuple: Option<TupleSpec>,
    /// Eta quotient as "k:e" pairs, e.g. "1:-1" or "2:3,1:-3"; "" is 1.
    #[arg(long, group = "series", allow_hyphen_values = true)]
    pub eta: Option<String>,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub series: SeriesChoice,
    /// Largest exponent printed.
    #[arg(long = "n", default_value_t = 20)]
    pub n: u64,
    /// Reduce coefficients modulo this (any size); integers otherwise.
    #[arg(long = "mod", value_parser = parse_big_modulus)]
    pub modulus: Option<BigUint>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrengthArg {
    Mod8,
    Mod24,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem id; see list-theorems.
    pub id: String,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long)]
    pub j: Option<u64>,
    /// The class N in thm1.2 (33 or 57).
    #[arg(long = "N")]
    pub class: Option<u64>,
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long, value_enum)]
    pub strength: Option<StrengthArg>,
    /// Test every admitted n <= nmax.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Build the family even when its hypotheses fail (labelled forced).
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// T_{ℓ,k} as "ℓ,k".
    #[arg(long = "t", value_parser = parse_tuple, default_value = "2,3")]
    pub tuple: TupleSpec,
    /// Steps A to scan: "25", "20-30" or "20..30" (inclusive).
    #[arg(long, value_parser = parse_range)]
    pub steps: RangeInclusive<u64>,
    /// Candidate moduli, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub moduli: Vec<u64>,
    /// Largest coefficient index examined.
    #[arg(long, default_value_t = 2000)]
    pub max_index: u64,
    /// Minimum number of tested n for every (A, B).
    #[arg(long, default_value_t = DEFAULT_MIN_SUPPORT)]
    pub min_support: u64,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long = "t", value_parser = parse_tuple, default_value = "2,3")]
    pub tuple: TupleSpec,
    #[arg(long)]
    pub step: u64,
    #[arg(long)]
    pub offset: u64,
    #[arg(long = "mod")]
    pub modulus: u64,
    /// Largest coefficient index examined.
    #[arg(long, default_value_t = 5000)]
    pub max_index: u64,
}

#[derive(Args, Debug)]
pub struct Thm13Args {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "mod", default_value_t = 8)]
    pub modulus: u64,
    /// Largest coefficient index examined.
    #[arg(long, default_value_t = 20_000)]
    pub max_index: u64,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long = "t", value_parser = parse_tuple)]
    pub tuple: TupleSpec,
    #[arg(long, default_value_t = 15)]
    pub nmax: u64,
}

#[derive(Args, Debug)]
pub struct IdentitiesArgs {
    /// Truncation order.
    #[arg(long = "n", default_value_t = 5000)]
    pub n: u64,
    /// Check in ℤ/mℤ instead of ℤ.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
}

fn parse_tuple(s: &str) -> Result<TupleSpec, String> {
    let (ell, k) = s.split_once(',').ok_or("expected ℓ,k")?;
    let ell = ell.trim().parse().map_err(|_| format!("bad ℓ {ell:?}"))?;
    let k = k.trim().parse().map_err(|_| format!("bad k {k:?}"))?;
    TupleSpec::new(ell, k).map_err(|e| e.to_string())
}

fn parse_big_modulus(s: &str) -> Result<BigUint, String> {
    let m: BigUint = s.parse().map_err(|_| format!("bad modulus {s:?}"))?;
    if m < BigUint::from(2u32) {
        return Err("modulus must be at least 2".into());
    }
    Ok(m)
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let bad = || format!("bad range {s:?}; use A, A-B or A..B");
    match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let a = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

/// Parses "k:e" pairs separated by commas or whitespace.
pub fn parse_eta(s: &str) -> Result<EtaQuotient, String> {
    let mut factors = Vec::new();
    for item in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (k, e) = item.split_once(':').ok_or_else(|| format!("expected k:e, got {item:?}"))?;
        let k: u64 = k.parse().map_err(|_| format!("bad subscript {k:?}"))?;
        let e: i64 = e.parse().map_err(|_| format!("bad exponent {e:?}"))?;
        factors.push((k, e));
    }
    EtaQuotient::new(factors).map_err(|e| e.to_string())
}

/// A command failure that maps to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub table: String,
    pub records: Vec<Record>,
    pub exit: i32,
}

fn check_order(order: u64) -> Result<(), UsageError> {
    if order > MAX_ORDER {
        return Err(UsageError(format!(
            "this needs a series of order {order}, above the limit of {MAX_ORDER}; lower the range"
        )));
    }
    Ok(())
}

/// Left-aligned columns separated by two spaces.
fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

const SUMMARY_HEADER: [&str; 8] = ["A", "B", "M", "n_tested", "exceptions_count", "status", "claim", "label"];

fn summary_row(r: &VerificationReport) -> Vec<String> {
    let f = &r.family;
    vec![
        f.step().to_string(),
        f.offset().to_string(),
        f.modulus().to_string(),
        r.tested.to_string(),
        r.exceptions.len().to_string(),
        r.status.as_str().to_string(),
        f.claim().as_str().to_string(),
        f.label().to_string(),
    ]
}

fn describe_report(r: &VerificationReport) -> String {
    let mut out = format!("family: {}\n", r.family);
    out.push_str(&format!(
        "range:  0 <= n <= {} (largest index {})\n",
        r.n_max,
        r.family.index(r.n_max).unwrap_or(u64::MAX)
    ));
    out.push_str(&render_table(&SUMMARY_HEADER, &[summary_row(r)]));
    out
}

fn exception_table(r: &VerificationReport, limit: usize) -> String {
    let rows: Vec<Vec<String>> = r
        .exceptions
        .iter()
        .take(limit)
        .map(|e| vec![e.n.to_string(), e.index.to_string(), e.residue.to_string()])
        .collect();
    let mut out = render_table(&["n", "index", "residue"], &rows);
    if r.exceptions.len() > limit {
        out.push_str(&format!(
            "... {} more (use --output records for the full list)\n",
            r.exceptions.len() - limit
        ));
    }
    out
}

fn cmd_expand(args: &ExpandArgs) -> Result<Outcome, UsageError> {
    check_order(args.n)?;
    let ring = match &args.modulus {
        Some(m) => Ring::from_modulus(m.clone())?,
        None => Ring::Integers,
    };
    let series = match (&args.series.tuple, &args.series.eta) {
        (Some(spec), _) => t_series(*spec, &ring, args.n)?,
        (None, Some(eta)) => eta_quotient(&parse_eta(eta)?, &ring, args.n)?,
        (None, None) => unreachable!("clap requires one of --t and --eta"),
    };
    let mut table = String::new();
    let mut recs = Vec::with_capacity(series.len());
    for (n, value) in series.coeffs().into_iter().enumerate() {
        table.push_str(&format!("{n} {value}\n"));
        recs.push(Record::Coefficient { n: n as u64, value });
    }
    Ok(Outcome {
        table,
        records: recs,
        exit: EXIT_PASS,
    })
}

fn verify_params(args: &VerifyArgs) -> Params {
    Params {
        p: args.p,
        t: args.t,
        j: args.j,
        class: args.class,
        alpha: args.alpha,
        s: args.s,
        m: args.m,
        ell: args.ell,
        r: args.r,
        strength: args.strength.map(|s| match s {
            StrengthArg::Mod8 => Strength::Mod8,
            StrengthArg::Mod24 => Strength::Mod24,
        }),
    }
}

/// Default `n_max`: 1000, reduced so the largest index stays within
/// [`DEFAULT_VERIFY_INDEX`] when the offset allows it.
pub fn default_nmax(f: &CongruenceFamily) -> u64 {
    f.max_n_for_order(DEFAULT_VERIFY_INDEX).unwrap_or(0).min(1000)
}

fn family_series(f: &CongruenceFamily, order: u64) -> Result<TruncatedSeries, UsageError> {
    check_order(order)?;
    Ok(f.target().series(&Ring::modulo(f.modulus())?, order)?)
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, UsageError> {
    let family = catalog::build(&args.id, &verify_params(args), args.force)?;
    let n_max = args.nmax.unwrap_or_else(|| default_nmax(&family));
    let top = family
        .index(n_max)
        .ok_or_else(|| UsageError("largest index overflows; lower --nmax".into()))?;
    let series = family_series(&family, top)?;
    let report = check_family(&family, &series, n_max)?;
    let mut table = describe_report(&report);
    if !report.exceptions.is_empty() {
        table.push_str("counterexamples:\n");
        table.push_str(&exception_table(&report, 20));
    }
    let exit = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        table,
        records: vec![Record::Report(report)],
        exit,
    })
}

fn scan_series(target: Target, modulus: u64, order: u64) -> Result<TruncatedSeries, UsageError> {
    check_order(order)?;
    Ok(target.series(&Ring::modulo(modulus)?, order)?)
}

fn cmd_scan(args: &ScanArgs) -> Result<Outcome, UsageError> {
    let target = Target::Tuples(args.tuple);
    let job = ScanJob::new(target, args.steps.clone(), args.moduli.clone(), args.max_index, args.min_support)?;
    let series = scan_series(target, job.series_modulus(), args.max_index)?;
    let found = parallel::scan(&job, &series, parallel::threads_from_env()?)?;
    let rows: Vec<Vec<String>> = found
        .iter()
        .map(|f| {
            let support = (args.max_index - f.offset()) / f.step() + 1;
            vec![
                f.step().to_string(),
                f.offset().to_string(),
                f.modulus().to_string(),
                support.to_string(),
                "0".into(),
            ]
        })
        .collect();
    let mut table = format!(
        "scan of {} for A in {}..={}, M in {:?}, indices <= {}: {} families\n",
        format_target(&target),
        args.steps.start(),
        args.steps.end(),
        job.moduli(),
        args.max_index,
        found.len()
    );
    table.push_str(&render_table(&["A", "B", "M", "n_tested", "exceptions_count"], &rows));
    Ok(Outcome {
        table,
        records: found.into_iter().map(Record::Family).collect(),
        exit: EXIT_PASS,
    })
}

fn cmd_audit(args: &AuditArgs) -> Result<Outcome, UsageError> {
    let target = Target::Tuples(args.tuple);
    let series = scan_series(target, args.modulus, args.max_index)?;
    let report = search::audit_exceptions(target, args.step, args.offset, args.modulus, &series, args.max_index)?;
    let mut table = describe_report(&report);
    if !report.exceptions.is_empty() {
        table.push_str("exceptions:\n");
        table.push_str(&exception_table(&report, 50));
    }
    Ok(Outcome {
        table,
        records: vec![Record::Report(report)],
        exit: EXIT_PASS,
    })
}

fn cmd_thm13(args: &Thm13Args) -> Result<Outcome, UsageError> {
    let series = scan_series(Target::Tuples(TupleSpec::t2()), args.modulus, args.max_index)?;
    let reports = search::scan_thm13_alpha0(args.p, args.modulus, &series, args.max_index)?;
    let rows: Vec<Vec<String>> = reports.iter().map(summary_row).collect();
    let table = render_table(&SUMMARY_HEADER, &rows);
    let exit = if reports.iter().all(|r| r.status == Status::Pass) { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome {
        table,
        records: reports.into_iter().map(Record::Report).collect(),
        exit,
    })
}

fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, UsageError> {
    if args.nmax > ORACLE_LIMIT {
        return Err(UsageError(format!(
            "the enumeration oracle is limited to --nmax <= {ORACLE_LIMIT}"
        )));
    }
    let series = t_series(args.tuple, &Ring::Integers, args.nmax)?;
    let mut mismatch = None;
    for n in 0..=args.nmax {
        let expect = num_bigint::BigInt::from(t_oracle(args.tuple, n)?);
        if series.coeff(n as usize) != expect {
            mismatch = Some(n);
            break;
        }
    }
    let check = CheckRecord {
        name: format!("oracle {}", args.tuple),
        scope: format!("Z n<={}", args.nmax),
        passed: mismatch.is_none(),
        detail: mismatch.map(|n| format!("first mismatch at n={n}")).unwrap_or_default(),
    };
    let table = match mismatch {
        None => format!("PASS {} series = enumeration for n <= {}\n", args.tuple, args.nmax),
        Some(n) => format!("FAIL {} series differs from enumeration at n = {n}\n", args.tuple),
    };
    Ok(Outcome {
        table,
        exit: if check.passed { EXIT_PASS } else { EXIT_FAIL },
        records: vec![Record::Check(check)],
    })
}

fn cmd_identities(args: &IdentitiesArgs) -> Result<Outcome, UsageError> {
    check_order(args.n)?;
    let ring = match args.modulus {
        Some(m) => Ring::modulo(m)?,
        None => Ring::Integers,
    };
    let mut table = String::new();
    let mut recs = Vec::new();
    let mut all = true;
    for id in Identity::ALL {
        let mismatch = id.first_mismatch(&ring, args.n)?;
        all &= mismatch.is_none();
        match mismatch {
            None => table.push_str(&format!("PASS {}  [{ring}, order {}]\n", id.name(), args.n)),
            Some(k) => table.push_str(&format!("FAIL {}  [{ring}, first mismatch at q^{k}]\n", id.name())),
        }
        recs.push(Record::Check(CheckRecord {
            name: id.name().to_string(),
            scope: format!("{ring} order={}", args.n),
            passed: mismatch.is_none(),
            detail: mismatch.map(|k| format!("first mismatch at q^{k}")).unwrap_or_default(),
        }));
    }
    Ok(Outcome {
        table,
        records: recs,
        exit: if all { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn cmd_list() -> Outcome {
    let rows: Vec<Vec<String>> = CATALOG
        .iter()
        .map(|e| {
            let flags: Vec<String> = e.params.iter().map(|p| format!("--{p}")).collect();
            vec![e.id.to_string(), flags.join(" "), e.statement.to_string(), e.hypotheses.to_string(), e.status.to_string()]
        })
        .collect();
    Outcome {
        table: render_table(&["id", "flags", "statement", "hypotheses", "status"], &rows),
        records: Vec::new(),
        exit: EXIT_PASS,
    }
}

pub fn execute(command: &Command) -> Result<Outcome, UsageError> {
    match command {
        Command::Expand(a) => cmd_expand(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Thm13Progressions(a) => cmd_thm13(a),
        Command::OracleCheck(a) => cmd_oracle(a),
        Command::Identities(a) => cmd_identities(a),
        Command::ListTheorems => Ok(cmd_list()),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_PASS
            };
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let records_text = records::to_text(&outcome.records);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &records_text) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let shown = match cli.output {
        OutputFormat::Table => &outcome.table,
        OutputFormat::Records => &records_text,
    };
    if stdout.write_all(shown.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    outcome.exit
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("regtuple").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn argument_parsers() {
        assert_eq!(parse_tuple("2,3").unwrap(), TupleSpec::t2());
        assert!(parse_tuple("1,3").is_err());
        assert_eq!(parse_range("25").unwrap(), 25..=25);
        assert_eq!(parse_range("20..30").unwrap(), 20..=30);
        assert_eq!(parse_range("20..=30").unwrap(), 20..=30);
        assert_eq!(parse_range("20-30").unwrap(), 20..=30);
        assert!(parse_range("x").is_err());
        assert!(parse_eta("").unwrap().is_one());
        assert_eq!(parse_eta("1:-1, 2:3").unwrap().factors().collect::<Vec<_>>(), [(1, -1), (2, 3)]);
        assert!(parse_eta("1").is_err());
        assert!(parse_big_modulus("1").is_err());
    }

    #[test]
    fn expand_examples() {
        let (code, out, _) = run_str(&["expand", "--eta", "1:-1", "--n", "9"]);
        assert_eq!(code, 0);
        let values: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
        assert_eq!(values, ["1", "1", "2", "3", "5", "7", "11", "15", "22", "30"]);
        let (_, out, _) = run_str(&["expand", "--eta", "", "--n", "3"]);
        assert_eq!(out, "0 1\n1 0\n2 0\n3 0\n");
        let (code, _, err) = run_str(&["expand", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_str(&["verify", "thm1.2", "--N", "57", "--t", "5", "--nmax", "200"]).0, 0);
        let (code, _, err) = run_str(&["verify", "thm1.2", "--N", "57", "--t", "4"]);
        assert_eq!(code, 2);
        assert!(err.contains("not an integer") || err.contains("gcd"), "{err}");
        let (code, out, _) = run_str(&["verify", "thm1.3", "--p", "17", "--alpha", "0", "--force", "--nmax", "300"]);
        assert_eq!(code, 1);
        assert!(out.contains("forced"));
    }

    #[test]
    fn table_alignment() {
        let t = render_table(&["a", "bb"], &[vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a    bb\nccc  d\n");
    }
}
