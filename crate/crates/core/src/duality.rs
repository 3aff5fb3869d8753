//! Ideal and quotient coefficients of a monomial and the set partition they
//! form.
//!
//! For `m` of degree `d` in `n` variables, the Macaulay coefficients of
//! `dim I(m)` (length `n - 1`) and of `dim Q(m)` (length `d`) can be read
//! straight off the exponent vector:
//!
//! ```text
//! s_i = i + deg ct_(n-i)(m) - 1        t_i = n - min ft_(d-i)(m) + i - 1
//! ```
//!
//! The two coefficient sets partition `{0, ..., n + d - 2}`, so `m` is
//! determined by either one, which gives a bijection between `M_n^d` and the
//! `(n-1)`-subsets of that range, and a closed form for the lex rank of `m`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::macaulay::{check_length, macaulay_rep, space_dimension, BigCount, MacaulayRep};
use crate::monomial::Monomial;

/// Refuse to materialize monomials in more variables than this.
pub const MAX_VARIABLES: usize = 1 << 20;

/// `(s_(n-1), ..., s_1)` with `dim I(m) = sum C(s_i, i)`. Empty for `n = 1`.
pub fn ideal_coefficients(m: &Monomial) -> Result<MacaulayRep> {
    if m.is_unit() {
        return Err(Error::UnitMonomial("ideal coefficients"));
    }
    let n = m.n();
    let coefficients = (1..n)
        .rev()
        .map(|i| {
            let tail = m.coarse_tail(n - i)?;
            Ok(i as u64 + tail.degree() as u64 - 1)
        })
        .collect::<Result<Vec<_>>>()?;
    MacaulayRep::new(coefficients).map_err(|e| Error::Internal(e.to_string()))
}

/// `(t_d, ..., t_1)` with `dim Q(m) = sum C(t_i, i)`.
pub fn quotient_coefficients(m: &Monomial) -> Result<MacaulayRep> {
    if m.is_unit() {
        return Err(Error::UnitMonomial("quotient coefficients"));
    }
    check_length(m.degree() as usize)?;
    let n = m.n() as u64;
    let d = m.degree() as usize;
    let coefficients = (1..=d)
        .rev()
        .map(|i| {
            let low = m.fine_tail(d - i)?.min_index()? as u64;
            Ok(n - low + i as u64 - 1)
        })
        .collect::<Result<Vec<_>>>()?;
    MacaulayRep::new(coefficients).map_err(|e| Error::Internal(e.to_string()))
}

/// The ideal set `S` and quotient set `T` of a monomial, both stored in
/// decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSets {
    n: usize,
    delta: u32,
    ideal: Vec<u64>,
    quotient: Vec<u64>,
}

impl CoefficientSets {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn ideal(&self) -> &[u64] {
        &self.ideal
    }

    pub fn quotient(&self) -> &[u64] {
        &self.quotient
    }

    /// `n + d - 2`, the top of the partitioned range.
    pub fn top(&self) -> u64 {
        (self.n + self.delta as usize - 2) as u64
    }

    /// Checks sizes, range, disjointness and coverage of `{0, ..., n + d - 2}`.
    pub fn check_partition(&self) -> std::result::Result<(), String> {
        if self.ideal.len() + 1 != self.n {
            return Err(format!(
                "|S| = {} but n - 1 = {}",
                self.ideal.len(),
                self.n - 1
            ));
        }
        if self.quotient.len() != self.delta as usize {
            return Err(format!(
                "|T| = {} but d = {}",
                self.quotient.len(),
                self.delta
            ));
        }
        let top = self.top();
        let mut seen = BTreeSet::new();
        for &x in self.ideal.iter().chain(&self.quotient) {
            if x > top {
                return Err(format!("{x} exceeds n + d - 2 = {top}"));
            }
            if !seen.insert(x) {
                return Err(format!("{x} appears twice"));
            }
        }
        // |S| + |T| = n + d - 1 distinct values in [0, top] cover it
        debug_assert_eq!(seen.len() as u64, top + 1);
        Ok(())
    }
}

fn format_set(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// `S={6,3,1} T={5,4,2,0}`
impl fmt::Display for CoefficientSets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S={} T={}",
            format_set(&self.ideal),
            format_set(&self.quotient)
        )
    }
}

/// Both coefficient sets of `m`; fails with [`Error::Internal`] if they do
/// not partition `{0, ..., n + d - 2}`.
pub fn coefficient_sets(m: &Monomial) -> Result<CoefficientSets> {
    let sets = CoefficientSets {
        n: m.n(),
        delta: m.degree(),
        ideal: ideal_coefficients(m)?.coefficients().to_vec(),
        quotient: quotient_coefficients(m)?.coefficients().to_vec(),
    };
    sets.check_partition().map_err(Error::Internal)?;
    Ok(sets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InheritanceCheck {
    pub identity: &'static str,
    pub holds: bool,
}

/// Outcome of checking how the coefficient sets move under `m -> x_1 m` and
/// under the shift `m -> sigma_1(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InheritanceReport {
    pub checks: Vec<InheritanceCheck>,
}

impl InheritanceReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.identity)
            .collect()
    }
}

/// `new == old + {extra}` as sets, with `extra` not already in `old`.
fn extends_by(new: &[u64], old: &[u64], extra: u64) -> bool {
    if old.contains(&extra) {
        return false;
    }
    let mut expected: Vec<u64> = old.iter().copied().chain([extra]).collect();
    expected.sort_unstable_by(|a, b| b.cmp(a));
    new == expected.as_slice()
}

/// Verifies, for `m` of degree `d` in `n` variables:
///
/// * `S(x_1 m) = S(m)` and `T(x_1 m) = T(m) + {n + d - 1}`;
/// * `T(sigma_1 m) = T(m)` and `S(sigma_1 m) = S(m) + {n + d - 1}`.
pub fn shift_inheritance_check(m: &Monomial) -> Result<InheritanceReport> {
    let base = coefficient_sets(m)?;
    let extra = (m.n() + m.degree() as usize - 1) as u64;
    let times_x1 = coefficient_sets(&m.mul_var(1))?;
    let shifted = coefficient_sets(&m.shift(1))?;
    Ok(InheritanceReport {
        checks: vec![
            InheritanceCheck {
                identity: "ideal_set_under_x1",
                holds: times_x1.ideal == base.ideal,
            },
            InheritanceCheck {
                identity: "quotient_set_under_x1",
                holds: extends_by(&times_x1.quotient, &base.quotient, extra),
            },
            InheritanceCheck {
                identity: "quotient_set_under_shift",
                holds: shifted.quotient == base.quotient,
            },
            InheritanceCheck {
                identity: "ideal_set_under_shift",
                holds: extends_by(&shifted.ideal, &base.ideal, extra),
            },
        ],
    })
}

/// Distinct values, each `<= p`, sorted increasingly.
fn validated_set(set: &[u64], p: u64) -> Result<Vec<u64>> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("coefficient set has repeated elements"));
    }
    if sorted.is_empty() || sorted.len() as u64 > p {
        return Err(Error::invalid(format!(
            "coefficient set must have between 1 and p = {p} elements"
        )));
    }
    if let Some(&x) = sorted.last().filter(|&&x| x > p) {
        return Err(Error::invalid(format!("{x} exceeds p = {p}")));
    }
    Ok(sorted)
}

/// The unique `m` in `n = |S| + 1` variables and degree `p - n + 2` whose
/// ideal coefficient set is `S`.
///
/// With `s_1 < ... < s_(n-1)`: `a_1 = p - s_(n-1)`, `a_n = s_1` and
/// `a_i = s_(n-i+1) - s_(n-i) - 1` for `2 <= i <= n - 1`.
pub fn reconstruct_from_ideal_set(set: &[u64], p: u64) -> Result<Monomial> {
    let s = validated_set(set, p)?;
    let n = s.len() + 1;
    let d = p - s.len() as u64 + 1;
    if d > u32::MAX as u64 {
        return Err(Error::invalid(format!(
            "degree {d} does not fit an exponent"
        )));
    }
    let mut exponents = vec![0u32; n];
    exponents[0] = (p - s[n - 2]) as u32;
    exponents[n - 1] = s[0] as u32;
    for i in 2..n {
        exponents[i - 1] = (s[n - i] - s[n - i - 1] - 1) as u32;
    }
    let m = Monomial::new(exponents)?;
    debug_assert_eq!(m.degree() as u64, d);
    Ok(m)
}

/// The unique `m` of degree `d = |T|` in `n = p - d + 2` variables whose
/// quotient coefficient set is `T`, from `j_i = n - t_(d-i+1) + d - i` with
/// `t_1 < ... < t_d`.
pub fn reconstruct_from_quotient_set(set: &[u64], p: u64) -> Result<Monomial> {
    let t = validated_set(set, p)?;
    let d = t.len();
    let n = (p - d as u64)
        .checked_add(2)
        .filter(|&n| n <= MAX_VARIABLES as u64)
        .ok_or_else(|| Error::invalid(format!("more than {MAX_VARIABLES} variables")))?
        as usize;
    let indices: Vec<usize> = (1..=d).map(|i| n + d - i - t[d - i] as usize).collect();
    Monomial::from_factorization(&indices, n)
}

/// 1-based position of `m` in the lex-descending listing of its graded
/// piece: `1 + dim I(m)`.
pub fn rank(m: &Monomial) -> Result<BigCount> {
    Ok(ideal_coefficients(m)?.eval() + 1u32)
}

/// The same rank from the quotient side: `C(n + d - 1, d) - dim Q(m)`.
pub fn rank_by_quotient(m: &Monomial) -> Result<BigCount> {
    let total = space_dimension(m.n(), m.degree() as u64);
    Ok(total - quotient_coefficients(m)?.eval())
}

/// The `q`-th monomial (1-based, lex-descending) of degree `delta` in `n`
/// variables.
pub fn unrank(q: &BigCount, n: usize, delta: u32) -> Result<Monomial> {
    if n == 0 || delta == 0 {
        return Err(Error::invalid("unrank needs n >= 1 and delta >= 1"));
    }
    if n > MAX_VARIABLES {
        return Err(Error::invalid(format!(
            "{n} variables exceeds the limit of {MAX_VARIABLES}"
        )));
    }
    let total = space_dimension(n, delta as u64);
    if *q == BigCount::default() || *q > total {
        return Err(Error::invalid(format!("rank {q} outside 1..={total}")));
    }
    if n == 1 {
        return Ok(Monomial::power(1, delta, 1));
    }
    let rep = macaulay_rep(&(q - 1u32), n - 1)?;
    reconstruct_from_ideal_set(rep.coefficients(), (n + delta as usize - 2) as u64)
}
