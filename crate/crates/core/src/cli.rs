//! Command-line front end: text parsers for monomials and coefficient sets,
//! the subcommand table, and plain/JSON formatting.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage or parse error, 3 failed
//! verification.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::duality::{
    coefficient_sets, ideal_coefficients, quotient_coefficients, rank, reconstruct_from_ideal_set,
    reconstruct_from_quotient_set, unrank,
};
use crate::error::{Error, Result};
use crate::macaulay::{
    check_length, ideal_growth_bound, macaulay_rep, quotient_growth_bound, BigCount, MacaulayRep,
};
use crate::monomial::Monomial;
use crate::oracle::{sweep, SweepConfig};
use crate::segments::{decompose, multiply_segment, segment_dimension, SegmentKind, SegmentSpec};

/// Parses `2,1,0,3,0,2` (n is the length) or `a^2*b*d^3*f^2` (n from
/// `n_hint`, at most 26). Errors carry the byte offset of the problem.
pub fn parse_monomial(text: &str, n_hint: Option<usize>) -> Result<Monomial> {
    match text.as_bytes().first() {
        None => Err(Error::parse(0, "empty monomial")),
        Some(b) if b.is_ascii_digit() || *b == b'-' => parse_vector(text, n_hint),
        Some(_) => parse_letters(text, n_hint),
    }
}

fn parse_vector(text: &str, n_hint: Option<usize>) -> Result<Monomial> {
    let mut exponents = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        exponents.push(parse_number::<u32>(piece, offset, "exponent")?);
        offset += piece.len() + 1;
    }
    if let Some(n) = n_hint {
        if n != exponents.len() {
            return Err(Error::parse(
                0,
                format!("{} exponents given but --n is {n}", exponents.len()),
            ));
        }
    }
    Monomial::new(exponents)
}

fn parse_letters(text: &str, n_hint: Option<usize>) -> Result<Monomial> {
    let n = n_hint.ok_or_else(|| Error::parse(0, "letter form needs --n"))?;
    if !(1..=26).contains(&n) {
        return Err(Error::parse(
            0,
            format!("letter form allows 1 to 26 variables, not {n}"),
        ));
    }
    let bytes = text.as_bytes();
    let mut exponents = vec![0u32; n];
    let mut pos = 0;
    loop {
        let var = match bytes.get(pos) {
            Some(b) if b.is_ascii_lowercase() => (b - b'a') as usize,
            _ => return Err(unexpected(text, pos, "a variable letter")),
        };
        if var >= n {
            return Err(Error::parse(
                pos,
                format!("variable {} is beyond n = {n}", bytes[pos] as char),
            ));
        }
        pos += 1;
        let mut e = 1;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let end = text[pos..].find('*').map_or(text.len(), |k| pos + k);
            e = parse_number::<u32>(&text[pos..end], pos, "exponent")?;
            pos = end;
        }
        exponents[var] = exponents[var]
            .checked_add(e)
            .ok_or_else(|| Error::parse(pos, "exponent overflows u32"))?;
        match bytes.get(pos) {
            None => break,
            Some(b'*') => pos += 1,
            Some(_) => return Err(unexpected(text, pos, "'*'")),
        }
    }
    Monomial::new(exponents)
}

fn unexpected(text: &str, pos: usize, wanted: &str) -> Error {
    match text[pos..].chars().next() {
        None => Error::parse(pos, format!("expected {wanted}, found end of input")),
        Some(c) => Error::parse(pos, format!("expected {wanted}, found {c:?}")),
    }
}

/// A run of decimal digits starting at byte `offset` of the whole input.
fn parse_number<T: std::str::FromStr>(piece: &str, offset: usize, what: &str) -> Result<T> {
    if piece.is_empty() {
        return Err(Error::parse(offset, format!("missing {what}")));
    }
    if let Some((i, c)) = piece.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        let msg = if c == '-' {
            format!("negative {what}")
        } else {
            format!("unexpected {c:?} in {what}")
        };
        return Err(Error::parse(offset + i, msg));
    }
    piece
        .parse()
        .map_err(|_| Error::parse(offset, format!("{what} {piece} is out of range")))
}

/// Parses `6,3,1` or `{6,3,1}`; blanks around elements are allowed. The
/// order is kept as given.
pub fn parse_set(text: &str) -> Result<Vec<u64>> {
    let (inner, offset) = match text.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(inner) => (inner, 1),
            None => return Err(Error::parse(text.len(), "missing closing '}'")),
        },
        None => (text, 0),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut start = offset;
    for piece in inner.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push(parse_number(piece.trim(), start + lead, "set element")?);
        start += piece.len() + 1;
    }
    Ok(out)
}

/// A nonnegative integer of any size.
pub fn parse_count(text: &str) -> Result<BigCount> {
    parse_number(text, 0, "integer")
}

#[derive(Debug, Parser)]
#[command(
    name = "lexdual",
    version,
    about = "Lex segments, Macaulay coefficients and their duality"
)]
pub struct Cli {
    /// Emit one JSON object with keys input, result, paper_ref.
    #[arg(long, global = true)]
    pub json: bool,

    /// Number of variables, for letter-form monomials, `growth --kind ideal` and `unrank`.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Ideal,
    Quotient,
}

impl From<KindArg> for SegmentKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Ideal => SegmentKind::Ideal,
            KindArg::Quotient => SegmentKind::Quotient,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The p-th Macaulay representation of s.
    Macrep { s: String, p: usize },
    /// Growth bound for the next degree: ideal needs --n, quotient needs --delta.
    Growth {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        delta: Option<usize>,
        s: String,
    },
    /// Dimension of a lex segment.
    Dim {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        inclusive: bool,
        #[arg(long)]
        m: String,
    },
    /// Direct sum decomposition of an exclusive segment.
    Decompose {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        m: String,
    },
    /// The segment obtained by multiplying with all variables.
    Multiply {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        inclusive: bool,
        #[arg(long)]
        m: String,
    },
    /// Ideal and quotient coefficient tuples.
    Coeffs {
        #[arg(long)]
        m: String,
    },
    /// Coefficient sets and whether they partition {0, ..., n + d - 2}.
    Partition {
        #[arg(long)]
        m: String,
    },
    /// Recover a monomial from one of its coefficient sets.
    Reconstruct {
        #[arg(long)]
        set: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "ideal")]
        from: KindArg,
    },
    /// Position of a monomial in lex order, starting at 1.
    Rank {
        #[arg(long)]
        m: String,
    },
    /// The monomial at a lex position; needs --n.
    Unrank {
        #[arg(long)]
        q: String,
        #[arg(long)]
        delta: u32,
    },
    /// Check every closed form against exhaustive enumeration.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_delta: u32,
        #[arg(long)]
        seed: Option<u64>,
        /// Random monomial ideals per cell for the growth bounds.
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Parses `args` (program name first) and dispatches.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

struct Reply {
    input: Value,
    text: String,
    result: Value,
    paper_ref: &'static str,
    verified: bool,
}

pub fn dispatch(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(reply) => {
            let stdout = if cli.json {
                let object = json!({
                    "input": reply.input,
                    "result": reply.result,
                    "paper_ref": reply.paper_ref,
                });
                format!("{object}\n")
            } else {
                format!("{}\n", reply.text)
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: if reply.verified { 0 } else { 3 },
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
        Err(Failure::Domain(e)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 1,
        },
    }
}

fn number(v: &BigCount) -> Value {
    Value::Number(
        v.to_string()
            .parse()
            .expect("decimal digits form a JSON number"),
    )
}

fn tuple(rep: &MacaulayRep) -> Value {
    json!(rep.coefficients())
}

fn paren(rep: &MacaulayRep) -> String {
    format!("({rep})")
}

fn monomial_json(m: &Monomial) -> Value {
    json!({ "exponents": m.exponents(), "monomial": m.to_product_string() })
}

fn segment_json(seg: &SegmentSpec) -> Value {
    json!({
        "kind": seg.kind().to_string(),
        "inclusive": seg.inclusive(),
        "m": seg.monomial().exponents(),
        "monomial": seg.monomial().to_product_string(),
        "window": [seg.window().lo(), seg.window().hi()],
        "degree": seg.delta(),
    })
}

fn ok(input: Value, text: String, result: Value, paper_ref: &'static str) -> Reply {
    Reply {
        input,
        text,
        result,
        paper_ref,
        verified: true,
    }
}

fn execute(cli: &Cli) -> std::result::Result<Reply, Failure> {
    let monomial = |text: &str| parse_monomial(text, cli.n);
    let reply = match &cli.command {
        Command::Macrep { s, p } => {
            let rep = macaulay_rep(&parse_count(s)?, *p)?;
            let input = json!({ "command": "macrep", "s": number(&parse_count(s)?), "p": p });
            ok(
                input,
                rep.to_string(),
                tuple(&rep),
                "macaulay_representation",
            )
        }
        Command::Growth { kind, delta, s } => {
            let value = parse_count(s)?;
            let (bound, input) = match kind {
                KindArg::Ideal => {
                    let n = cli
                        .n
                        .ok_or_else(|| Failure::Usage("growth --kind ideal needs --n".into()))?;
                    let input = json!({ "command": "growth", "kind": "ideal", "n": n, "s": number(&value) });
                    (ideal_growth_bound(&value, n)?, input)
                }
                KindArg::Quotient => {
                    let d = delta.ok_or_else(|| {
                        Failure::Usage("growth --kind quotient needs --delta".into())
                    })?;
                    let input = json!({ "command": "growth", "kind": "quotient", "delta": d, "s": number(&value) });
                    (quotient_growth_bound(&value, d)?, input)
                }
            };
            ok(input, bound.to_string(), number(&bound), "growth_bound")
        }
        Command::Dim { kind, inclusive, m } => {
            let seg = SegmentSpec::new((*kind).into(), *inclusive, monomial(m)?)?;
            if seg.kind() == SegmentKind::Quotient {
                check_length(seg.delta() as usize)?;
            }
            let dim = segment_dimension(&seg);
            let input = json!({ "command": "dim", "segment": segment_json(&seg) });
            ok(input, dim.to_string(), number(&dim), "segment_dimension")
        }
        Command::Decompose { kind, m } => {
            let seg = SegmentSpec::new((*kind).into(), false, monomial(m)?)?;
            let dec = decompose(&seg)?;
            let lines: Vec<String> = dec.summands.iter().map(ToString::to_string).collect();
            let summands: Vec<Value> = dec
                .summands
                .iter()
                .map(|s| {
                    json!({
                        "prefix": s.prefix.to_product_string(),
                        "prefix_exponents": s.prefix.exponents(),
                        "window": [s.window.lo(), s.window.hi()],
                        "degree": s.degree,
                        "dim": number(&s.dimension()),
                    })
                })
                .collect();
            let input = json!({ "command": "decompose", "segment": segment_json(&seg) });
            ok(
                input,
                lines.join("\n"),
                Value::Array(summands),
                "structure_decomposition",
            )
        }
        Command::Multiply { kind, inclusive, m } => {
            let seg = SegmentSpec::new((*kind).into(), *inclusive, monomial(m)?)?;
            let product = multiply_segment(&seg)?;
            let input = json!({ "command": "multiply", "segment": segment_json(&seg) });
            ok(
                input,
                product.to_string(),
                segment_json(&product),
                "segment_multiplication",
            )
        }
        Command::Coeffs { m } => {
            let m = monomial(m)?;
            let (s, t) = (ideal_coefficients(&m)?, quotient_coefficients(&m)?);
            let text = format!("S={}\nT={}", paren(&s), paren(&t));
            let input = json!({ "command": "coeffs", "m": monomial_json(&m) });
            ok(
                input,
                text,
                json!({ "S": tuple(&s), "T": tuple(&t) }),
                "ideal_and_quotient_coefficients",
            )
        }
        Command::Partition { m } => {
            let m = monomial(m)?;
            let input = json!({ "command": "partition", "m": monomial_json(&m) });
            match coefficient_sets(&m) {
                Ok(sets) => {
                    let result =
                        json!({ "S": sets.ideal(), "T": sets.quotient(), "partition": "ok" });
                    ok(
                        input,
                        format!("{sets} partition=ok"),
                        result,
                        "coefficient_partition",
                    )
                }
                Err(Error::Internal(detail)) => Reply {
                    input,
                    text: format!("partition=FAIL detail={detail}"),
                    result: json!({ "partition": "FAIL", "detail": detail }),
                    paper_ref: "coefficient_partition",
                    verified: false,
                },
                Err(e) => return Err(e.into()),
            }
        }
        Command::Reconstruct { set, p, from } => {
            let elements = parse_set(set)?;
            let m = match from {
                KindArg::Ideal => reconstruct_from_ideal_set(&elements, *p)?,
                KindArg::Quotient => reconstruct_from_quotient_set(&elements, *p)?,
            };
            let source = if *from == KindArg::Ideal {
                "ideal"
            } else {
                "quotient"
            };
            let input =
                json!({ "command": "reconstruct", "set": elements, "p": p, "from": source });
            ok(input, m.to_string(), monomial_json(&m), "reconstruction")
        }
        Command::Rank { m } => {
            let m = monomial(m)?;
            let r = rank(&m)?;
            let input = json!({ "command": "rank", "m": monomial_json(&m) });
            ok(input, r.to_string(), number(&r), "lex_rank")
        }
        Command::Unrank { q, delta } => {
            let n = cli
                .n
                .ok_or_else(|| Failure::Usage("unrank needs --n".into()))?;
            let q = parse_count(q)?;
            let m = unrank(&q, n, *delta)?;
            let input = json!({ "command": "unrank", "q": number(&q), "n": n, "delta": delta });
            ok(input, m.to_string(), monomial_json(&m), "lex_unrank")
        }
        Command::Verify {
            max_n,
            max_delta,
            seed,
            samples,
        } => {
            let defaults = SweepConfig::default();
            let config = SweepConfig {
                max_n: *max_n,
                max_delta: *max_delta,
                extra_cells: Vec::new(),
                seed: seed.unwrap_or(defaults.seed),
                samples_per_cell: *samples,
                ..defaults
            };
            let report = sweep(&config);
            let lines: Vec<String> = report.records.iter().map(ToString::to_string).collect();
            let records: Vec<Value> = report
                .records
                .iter()
                .map(|r| {
                    json!({
                        "cell": r.cell.map(|(n, d)| json!([n, d])),
                        "property": r.property,
                        "status": if r.ok { "ok" } else { "FAIL" },
                        "checked": r.checked,
                        "detail": r.detail,
                    })
                })
                .collect();
            let failures = report.failures().len();
            let input = json!({
                "command": "verify",
                "max_n": config.max_n,
                "max_delta": config.max_delta,
                "seed": config.seed,
                "samples": config.samples_per_cell,
            });
            Reply {
                input,
                text: lines.join("\n"),
                result: json!({ "records": records, "failures": failures }),
                paper_ref: "oracle_sweep",
                verified: failures == 0,
            }
        }
    };
    Ok(reply)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("lexdual").chain(args.iter().copied()))
    }

    #[test]
    fn vector_and_letter_forms_agree() {
        let v = parse_monomial("2,1,0,3,0,2", None).unwrap();
        let l = parse_monomial("a^2*b*d^3*f^2", Some(6)).unwrap();
        assert_eq!(v, l);
        assert_eq!(v.n(), 6);
        assert_eq!(
            parse_monomial("0,2,1,1", None).unwrap().to_product_string(),
            "b^2*c*d"
        );
        assert_eq!(
            parse_monomial("a*a*b^0", Some(2)).unwrap().exponents(),
            &[2, 0]
        );
    }

    #[test]
    fn parse_errors_have_positions() {
        let pos = |text: &str, n: Option<usize>| match parse_monomial(text, n) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{text}: {other:?}"),
        };
        assert_eq!(pos("", None), 0);
        assert_eq!(pos("2,1,,3", None), 4);
        assert_eq!(pos("2,-1", None), 2);
        assert_eq!(pos("2,1x", None), 3);
        assert_eq!(pos("1,2", Some(3)), 0);
        assert_eq!(pos("a^2*b", None), 0);
        assert_eq!(pos("a^2*g", Some(6)), 4);
        assert_eq!(pos("a^-2", Some(6)), 2);
        assert_eq!(pos("a^", Some(6)), 2);
        assert_eq!(pos("a*", Some(6)), 2);
        assert_eq!(pos("ab", Some(6)), 1);
        assert_eq!(pos("a", Some(27)), 0);
        assert_eq!(pos("99999999999", None), 0);
    }

    #[test]
    fn sets() {
        assert_eq!(parse_set("6,3,1").unwrap(), vec![6, 3, 1]);
        assert_eq!(parse_set("{5, 4, 2, 0}").unwrap(), vec![5, 4, 2, 0]);
        assert_eq!(parse_set("{}").unwrap(), Vec::<u64>::new());
        assert!(matches!(
            parse_set("{6,3"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_set("{6,x}"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn plain_outputs() {
        assert_eq!(out(&["macrep", "114", "6"]).stdout, "9,7,5,4,1,0\n");
        assert_eq!(
            out(&["dim", "--kind", "ideal", "--m", "2,1,0,3,0,2"]).stdout,
            "362\n"
        );
        assert_eq!(
            out(&["dim", "--kind", "quotient", "--m", "2,1,0,3,0,2"]).stdout,
            "924\n"
        );
        assert_eq!(
            out(&["partition", "--m", "0,2,1,1"]).stdout,
            "S={6,3,1} T={5,4,2,0} partition=ok\n"
        );
        assert_eq!(
            out(&["coeffs", "--m", "2,1,0,3,0,2"]).stdout,
            "S=(10,8,7,3,2)\nT=(12,11,9,6,5,4,1,0)\n"
        );
        assert_eq!(
            out(&["reconstruct", "--set", "6,3,1", "--p", "6"]).stdout,
            "0,2,1,1\n"
        );
        assert_eq!(
            out(&[
                "reconstruct",
                "--set",
                "{5,4,2,0}",
                "--p",
                "6",
                "--from",
                "quotient"
            ])
            .stdout,
            "0,2,1,1\n"
        );
        assert_eq!(out(&["rank", "--m", "2,1,0,3,0,2"]).stdout, "363\n");
        assert_eq!(
            out(&["unrank", "--q", "363", "--n", "6", "--delta", "8"]).stdout,
            "2,1,0,3,0,2\n"
        );
        assert_eq!(
            out(&["growth", "--kind", "ideal", "--n", "3", "1"]).stdout,
            "3\n"
        );
        assert_eq!(
            out(&["growth", "--kind", "quotient", "--delta", "2", "6"]).stdout,
            "10\n"
        );
        assert_eq!(
            out(&["--n", "6", "dim", "--kind", "ideal", "--m", "a^2*b*d^3*f^2"]).stdout,
            "362\n"
        );
    }

    #[test]
    fn decompose_lines() {
        let o = out(&["decompose", "--kind", "ideal", "--m", "2,1,0,3,0,2"]);
        let lines: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "a^3 | [1,6] | 5 | 252");
        assert_eq!(lines[4], "a^2*b*d^3*e | [5,6] | 1 | 2");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(out(&["macrep", "114", "6"]).code, 0);
        assert_eq!(out(&["dim", "--kind", "ideal", "--m", "0,0,0"]).code, 1);
        assert_eq!(out(&["dim", "--kind", "ideal", "--m", "2,x"]).code, 2);
        assert_eq!(out(&["dim", "--kind", "sideways", "--m", "1"]).code, 2);
        assert_eq!(out(&["growth", "--kind", "ideal", "5"]).code, 2);
        assert_eq!(out(&["unrank", "--q", "1", "--delta", "2"]).code, 2);
        assert_eq!(out(&["reconstruct", "--set", "6,6", "--p", "6"]).code, 1);
        assert_eq!(out(&["macrep", "5", "0"]).code, 1);
        assert_eq!(out(&["macrep", "5", "99999999999"]).code, 1);
        assert_eq!(
            out(&["dim", "--kind", "quotient", "--m", "4000000000,1"]).code,
            1
        );
        assert_eq!(
            out(&["dim", "--kind", "ideal", "--m", "4000000000,1"]).stdout,
            "1\n"
        );
        assert_eq!(out(&[]).code, 2);
        assert_eq!(out(&["--help"]).code, 0);
    }

    #[test]
    fn json_shape() {
        let o = out(&["--json", "dim", "--kind", "ideal", "--m", "2,1,0,3,0,2"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["input", "paper_ref", "result"]);
        assert_eq!(v["result"], json!(362));
        let o = out(&["--json", "macrep", "123456789012345678901234567890", "2"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(
            v["input"]["s"].to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn deterministic() {
        let args = ["decompose", "--kind", "quotient", "--m", "2,1,0,3,0,2"];
        assert_eq!(out(&args), out(&args));
    }

    #[test]
    fn small_verify() {
        let o = out(&[
            "verify",
            "--max-n",
            "2",
            "--max-delta",
            "2",
            "--samples",
            "2",
        ]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(o.stdout.lines().all(|l| l.contains("status=ok")));
        assert!(o
            .stdout
            .starts_with("cell=(1,1) property=space_enumeration status=ok"));
    }
}
