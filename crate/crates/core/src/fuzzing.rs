//! Entry points shared by the fuzz targets and the corpus replay test. Each
//! one accepts arbitrary bytes and panics only on a broken invariant.

use crate::cli::{parse_monomial, parse_set, run};
use crate::error::Error;

/// First byte: `--n` hint (0 for none); the rest: monomial text.
pub fn monomial_text(data: &[u8]) {
    let Some((&hint, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n_hint = (hint != 0).then_some(hint as usize);
    match parse_monomial(text, n_hint) {
        Ok(m) => {
            let vector = parse_monomial(&m.to_string(), None).expect("vector form re-parses");
            assert_eq!(vector, m);
            if m.n() <= 26 && !m.is_unit() {
                let letters = parse_monomial(&m.to_product_string(), Some(m.n()))
                    .expect("letter form re-parses");
                assert_eq!(letters, m);
            }
        }
        Err(Error::Parse { pos, .. }) => assert!(pos <= text.len()),
        Err(Error::InvalidInput(_)) => {}
        Err(e) => panic!("unexpected error kind: {e}"),
    }
}

pub fn set_text(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_set(text) {
        Ok(set) => {
            let parts: Vec<String> = set.iter().map(u64::to_string).collect();
            let printed = format!("{{{}}}", parts.join(","));
            assert_eq!(parse_set(&printed).expect("printed set re-parses"), set);
        }
        Err(Error::Parse { pos, .. }) => assert!(pos <= text.len()),
        Err(e) => panic!("unexpected error kind: {e}"),
    }
}

/// NUL-separated arguments. `verify` and numbers above four digits are
/// skipped: both are slow by design, not broken.
pub fn cli_args(data: &[u8]) {
    let text = String::from_utf8_lossy(data);
    let args: Vec<&str> = text.split('\0').collect();
    if args.len() > 16 || args.iter().any(|a| a.len() > 64 || a.contains("verify")) {
        return;
    }
    let long_number = text
        .split(|c: char| !c.is_ascii_digit())
        .any(|run| run.len() > 4);
    if long_number {
        return;
    }
    let out = run(std::iter::once("lexdual").chain(args.iter().copied()));
    assert!(out.code <= 2, "exit {} for {args:?}", out.code);
    if out.code == 0 {
        assert!(out.stdout.ends_with('\n'));
    } else if out.code == 1 {
        assert!(out.stdout.is_empty() && out.stderr.starts_with("error: "));
    }
}
