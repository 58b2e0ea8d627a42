//! The line-oriented record format used for `--output records` and `--out`.
//!
//! One record per line, LF-terminated, UTF-8. A line is a space-separated
//! list of `key=value` fields whose keys and order are fixed per kind; the
//! first field is always `kind`. Values escape `%`, space, `=`, tab, CR and
//! LF as `%25`, `%20`, `%3D`, `%09`, `%0D`, `%0A`.
//!
//! | kind          | fields after `kind`                                                                 |
//! |---------------|--------------------------------------------------------------------------------------|
//! | `family`      | `target step offset modulus filter claim label`                                      |
//! | `report`      | `target step offset modulus filter claim label n_max tested status exceptions`       |
//! | `exception`   | `n index residue`                                                                    |
//! | `coefficient` | `n value`                                                                            |
//! | `check`       | `name scope status detail`                                                           |
//!
//! A `report` line is followed by exactly `exceptions` lines of kind
//! `exception`, in increasing `n`. `target` is `partitions` or
//! `tuples:ELL:K`; `filter` is `all`, `notdiv:D` or `notdiv:D1:D2`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use regtuple_core::congruence::{Claim, Exception};
use regtuple_core::{CongruenceFamily, IndexFilter, Status, Target, TupleSpec, VerificationReport};

/// Outcome of a yes/no check that is not a congruence family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    /// What was checked, e.g. the ring and order.
    pub scope: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Family(CongruenceFamily),
    Report(VerificationReport),
    Coefficient { n: u64, value: BigInt },
    Check(CheckRecord),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn escape(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '%' => out.push_str("%25"),
            ' ' => out.push_str("%20"),
            '=' => out.push_str("%3D"),
            '\t' => out.push_str("%09"),
            '\r' => out.push_str("%0D"),
            '\n' => out.push_str("%0A"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(value: &str) -> Result<String, String> {
    let mut out = String::with_capacity(value.len());
    let mut rest = value;
    while let Some(pos) = rest.find('%') {
        out.push_str(&rest[..pos]);
        let code = rest.get(pos + 1..pos + 3).ok_or_else(|| format!("truncated escape in {value:?}"))?;
        out.push(match code {
            "25" => '%',
            "20" => ' ',
            "3D" => '=',
            "09" => '\t',
            "0D" => '\r',
            "0A" => '\n',
            _ => return Err(format!("unknown escape %{code}")),
        });
        rest = &rest[pos + 3..];
    }
    out.push_str(rest);
    Ok(out)
}

pub fn format_target(t: &Target) -> String {
    match t {
        Target::Partitions => "partitions".into(),
        Target::Tuples(s) => format!("tuples:{}:{}", s.ell(), s.k()),
    }
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s == "partitions" {
        return Ok(Target::Partitions);
    }
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["tuples", ell, k] => {
            let spec = TupleSpec::new(num(ell)?, num(k)?).map_err(|e| e.to_string())?;
            Ok(Target::Tuples(spec))
        }
        _ => Err(format!("bad target {s:?}")),
    }
}

fn format_filter(f: &IndexFilter) -> String {
    match f {
        IndexFilter::All => "all".into(),
        IndexFilter::NotDivisibleBy(d) => format!("notdiv:{d}"),
        IndexFilter::NotDivisibleByEither(a, b) => format!("notdiv:{a}:{b}"),
    }
}

fn parse_filter(s: &str) -> Result<IndexFilter, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["all"] => Ok(IndexFilter::All),
        ["notdiv", d] => Ok(IndexFilter::NotDivisibleBy(num(d)?)),
        ["notdiv", a, b] => Ok(IndexFilter::NotDivisibleByEither(num(a)?, num(b)?)),
        _ => Err(format!("bad filter {s:?}")),
    }
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    [Claim::Proved, Claim::Conjectural, Claim::Forced]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| format!("bad claim {s:?}"))
}

fn parse_status(s: &str) -> Result<Status, String> {
    [Status::Pass, Status::Fail, Status::PassWithExceptions]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| format!("bad status {s:?}"))
}

fn num<T: std::str::FromStr>(s: &str) -> Result<T, String> {
    s.parse().map_err(|_| format!("bad number {s:?}"))
}

fn push_fields(out: &mut String, fields: &[(&str, String)]) {
    for (i, (k, v)) in fields.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{k}={}", escape(v));
    }
    out.push('\n');
}

fn family_fields(f: &CongruenceFamily) -> Vec<(&'static str, String)> {
    vec![
        ("target", format_target(&f.target())),
        ("step", f.step().to_string()),
        ("offset", f.offset().to_string()),
        ("modulus", f.modulus().to_string()),
        ("filter", format_filter(&f.filter())),
        ("claim", f.claim().as_str().into()),
        ("label", f.label().into()),
    ]
}

/// Appends the lines for one record.
pub fn write_record(out: &mut String, record: &Record) {
    match record {
        Record::Family(f) => {
            let mut fields = vec![("kind", "family".to_string())];
            fields.extend(family_fields(f));
            push_fields(out, &fields);
        }
        Record::Report(r) => {
            let mut fields = vec![("kind", "report".to_string())];
            fields.extend(family_fields(&r.family));
            fields.push(("n_max", r.n_max.to_string()));
            fields.push(("tested", r.tested.to_string()));
            fields.push(("status", r.status.as_str().into()));
            fields.push(("exceptions", r.exceptions.len().to_string()));
            push_fields(out, &fields);
            for e in &r.exceptions {
                push_fields(
                    out,
                    &[
                        ("kind", "exception".into()),
                        ("n", e.n.to_string()),
                        ("index", e.index.to_string()),
                        ("residue", e.residue.to_string()),
                    ],
                );
            }
        }
        Record::Coefficient { n, value } => {
            push_fields(out, &[("kind", "coefficient".into()), ("n", n.to_string()), ("value", value.to_string())]);
        }
        Record::Check(c) => push_fields(
            out,
            &[
                ("kind", "check".into()),
                ("name", c.name.clone()),
                ("scope", c.scope.clone()),
                ("status", if c.passed { "PASS" } else { "FAIL" }.into()),
                ("detail", c.detail.clone()),
            ],
        ),
    }
}

pub fn to_text(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        write_record(&mut out, r);
    }
    out
}

/// Splits a line into values, checking the keys against `keys` in order.
fn fields<'a>(line: &'a str, keys: &[&str]) -> Result<Vec<String>, String> {
    let tokens: Vec<&'a str> = line.split(' ').collect();
    if tokens.len() != keys.len() {
        return Err(format!("expected {} fields, found {}", keys.len(), tokens.len()));
    }
    tokens
        .iter()
        .zip(keys)
        .map(|(tok, key)| {
            let (k, v) = tok.split_once('=').ok_or_else(|| format!("missing '=' in {tok:?}"))?;
            if k != *key {
                return Err(format!("expected key {key:?}, found {k:?}"));
            }
            unescape(v)
        })
        .collect()
}

const FAMILY_KEYS: [&str; 7] = ["target", "step", "offset", "modulus", "filter", "claim", "label"];

fn family_from(values: &[String]) -> Result<CongruenceFamily, String> {
    CongruenceFamily::new(
        parse_target(&values[0])?,
        num(&values[1])?,
        num(&values[2])?,
        num(&values[3])?,
        parse_filter(&values[4])?,
        parse_claim(&values[5])?,
        values[6].clone(),
    )
    .map_err(|e| e.to_string())
}

fn kind_of(line: &str) -> Result<&str, String> {
    let first = line.split(' ').next().unwrap_or("");
    first.strip_prefix("kind=").ok_or_else(|| "line does not start with kind=".to_string())
}

/// Parses text produced by [`to_text`]. Blank lines are not allowed.
pub fn parse(text: &str) -> Result<Vec<Record>, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |line: usize, reason: String| ParseError { line: line + 1, reason };
    while i < lines.len() {
        let line = lines[i];
        let kind = kind_of(line).map_err(|r| err(i, r))?;
        let with_kind = |keys: &[&'static str]| {
            let mut all = vec!["kind"];
            all.extend_from_slice(keys);
            fields(line, &all).map(|mut v| {
                v.remove(0);
                v
            })
        };
        let record = match kind {
            "family" => {
                let v = with_kind(&FAMILY_KEYS).map_err(|r| err(i, r))?;
                Record::Family(family_from(&v).map_err(|r| err(i, r))?)
            }
            "report" => {
                let mut keys = FAMILY_KEYS.to_vec();
                keys.extend(["n_max", "tested", "status", "exceptions"]);
                let v = with_kind(&keys).map_err(|r| err(i, r))?;
                let report_line = i;
                let parse_head = || -> Result<_, String> {
                    Ok((
                        family_from(&v[..7])?,
                        num::<u64>(&v[7])?,
                        num::<u64>(&v[8])?,
                        parse_status(&v[9])?,
                        num::<usize>(&v[10])?,
                    ))
                };
                let (family, n_max, tested, status, count) = parse_head().map_err(|r| err(i, r))?;
                let mut exceptions = Vec::with_capacity(count);
                for _ in 0..count {
                    i += 1;
                    let line = lines
                        .get(i)
                        .ok_or_else(|| err(report_line, format!("expected {count} exception lines")))?;
                    let v = fields(line, &["kind", "n", "index", "residue"]).map_err(|r| err(i, r))?;
                    if v[0] != "exception" {
                        return Err(err(i, format!("expected kind=exception, found {}", v[0])));
                    }
                    let parse_exc = || -> Result<Exception, String> {
                        Ok(Exception {
                            n: num(&v[1])?,
                            index: num(&v[2])?,
                            residue: num(&v[3])?,
                        })
                    };
                    exceptions.push(parse_exc().map_err(|r| err(i, r))?);
                }
                Record::Report(VerificationReport {
                    family,
                    n_max,
                    tested,
                    exceptions,
                    status,
                })
            }
            "coefficient" => {
                let v = with_kind(&["n", "value"]).map_err(|r| err(i, r))?;
                let n = num(&v[0]).map_err(|r| err(i, r))?;
                let value = num(&v[1]).map_err(|r| err(i, r))?;
                Record::Coefficient { n, value }
            }
            "check" => {
                let v = with_kind(&["name", "scope", "status", "detail"]).map_err(|r| err(i, r))?;
                let passed = match v[2].as_str() {
                    "PASS" => true,
                    "FAIL" => false,
                    s => return Err(err(i, format!("bad status {s:?}"))),
                };
                Record::Check(CheckRecord {
                    name: v[0].clone(),
                    scope: v[1].clone(),
                    passed,
                    detail: v[3].clone(),
                })
            }
            "exception" => return Err(err(i, "exception line without a report".into())),
            other => return Err(err(i, format!("unknown kind {other:?}"))),
        };
        out.push(record);
        i += 1;
    }
    Ok(out)
}
