//! Exact binomials, Macaulay representations and the Hilbert function growth
//! bounds they induce.
//!
//! Every nonnegative integer `s` has, for each `p >= 1`, a unique expansion
//!
//! ```text
//! s = C(s_p, p) + C(s_{p-1}, p-1) + ... + C(s_1, 1),   s_p > ... > s_1 >= 0
//! ```
//!
//! with the convention `C(a, b) = 0` for `a < b`. Representations keep their
//! vanishing trailing terms, so `(9,7,5,4,1,0)` is the 6th representation of
//! 114 and not `(9,7,5,4)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dimensions, ranks and binomials. Never overflows.
pub type BigCount = BigUint;

/// Longest representation computed; also bounds the degree on the quotient
/// side, where one term is needed per unit of degree.
pub const MAX_LENGTH: usize = 1 << 20;

pub(crate) fn check_length(len: usize) -> Result<()> {
    if len > MAX_LENGTH {
        return Err(Error::ResourceLimit {
            size: len.to_string(),
            cap: MAX_LENGTH as u64,
        });
    }
    Ok(())
}

/// `C(a, b)`, zero whenever `a < b` (including every negative `a`).
pub fn binom(a: i64, b: u64) -> BigCount {
    if a < 0 || (a as u64) < b {
        return BigCount::zero();
    }
    let a = a as u64;
    let k = b.min(a - b);
    let mut acc = BigCount::one();
    for i in 0..k {
        // acc = C(a, i) * (a - i) / (i + 1) stays integral at every step
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Number of monomials of the given degree in `window_size` variables.
///
/// A zero-variable window holds only the unit monomial: 1 in degree 0 and
/// nothing above.
pub fn space_dimension(window_size: usize, degree: u64) -> BigCount {
    if window_size == 0 {
        return if degree == 0 {
            BigCount::one()
        } else {
            BigCount::zero()
        };
    }
    binom(window_size as i64 + degree as i64 - 1, degree)
}

/// A Macaulay representation `(s_p, ..., s_1)`, most significant first.
///
/// The length `p` may be 0 (the empty representation of 0), which is what an
/// ideal segment in a single variable produces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    coefficients: Vec<u64>,
}

impl MacaulayRep {
    /// Validates strict decrease of `(s_p, ..., s_1)`.
    pub fn new(coefficients: Vec<u64>) -> Result<Self> {
        if let Some(w) = coefficients.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::InvalidRep(format!(
                "coefficients must strictly decrease, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(MacaulayRep { coefficients })
    }

    pub(crate) fn from_checked(coefficients: Vec<u64>) -> Self {
        debug_assert!(coefficients.windows(2).all(|w| w[0] > w[1]));
        MacaulayRep { coefficients }
    }

    /// The length `p`.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `(s_p, ..., s_1)`.
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `s_i` for `1 <= i <= p`.
    pub fn get(&self, i: usize) -> Option<u64> {
        if i == 0 || i > self.len() {
            return None;
        }
        Some(self.coefficients[self.len() - i])
    }

    /// Pairs `(i, s_i)` for `i = p, ..., 1`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let p = self.len() as u64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(k, &s)| (p - k as u64, s))
    }

    /// `sum C(s_i, i)`.
    pub fn eval(&self) -> BigCount {
        self.terms().map(|(i, s)| binom(s as i64, i)).sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Evaluates a raw coefficient list `(s_p, ..., s_1)`, rejecting lists that
/// are not strictly decreasing.
pub fn eval_rep(coefficients: &[u64]) -> Result<BigCount> {
    Ok(MacaulayRep::new(coefficients.to_vec())?.eval())
}

/// The `p`-th Macaulay representation of `s`, by the greedy rule: take the
/// largest `s_p` with `C(s_p, p) <= s` and recurse on the remainder.
pub fn macaulay_rep(s: &BigCount, p: usize) -> Result<MacaulayRep> {
    if p == 0 {
        return Err(Error::invalid("Macaulay representations need p >= 1"));
    }
    check_length(p)?;
    let mut rest = s.clone();
    let mut coefficients = Vec::with_capacity(p);
    for i in (1..=p as u64).rev() {
        let c = largest_numerator(&rest, i)?;
        rest -= binom(c as i64, i);
        coefficients.push(c);
    }
    debug_assert!(rest.is_zero());
    Ok(MacaulayRep::from_checked(coefficients))
}

/// Largest `c >= i - 1` with `C(c, i) <= s`, by doubling then bisection.
fn largest_numerator(s: &BigCount, i: u64) -> Result<u64> {
    // leaves room for the `+ 1` in the growth bounds
    const LIMIT: u64 = (i64::MAX - 1) as u64;
    let too_large = || Error::invalid(format!("coefficient for C(_, {i}) exceeds {LIMIT}"));
    if i == 1 {
        return u64::try_from(s)
            .ok()
            .filter(|&c| c <= LIMIT)
            .ok_or_else(too_large);
    }
    let fits = |c: u64| binom(c as i64, i) <= *s;
    let mut lo = i - 1; // C(i-1, i) = 0 always fits
    let mut step = 1u64;
    // smallest value known not to fit
    let mut hi = loop {
        let probe = (lo + step).min(LIMIT);
        if !fits(probe) {
            break probe;
        }
        if probe == LIMIT {
            return Err(too_large());
        }
        lo = probe;
        step *= 2;
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Upper bound for `dim (S/I)_{d+1}` given `dim (S/I)_d = s`:
/// `sum C(t_i + 1, i + 1)` over the `d`-th representation `(t_d, ..., t_1)`.
/// Attained by lex ideals.
pub fn quotient_growth_bound(s: &BigCount, delta: usize) -> Result<BigCount> {
    if delta == 0 {
        return Err(Error::invalid("quotient growth bound needs delta >= 1"));
    }
    let rep = macaulay_rep(s, delta)?;
    Ok(rep.terms().map(|(i, t)| binom(t as i64 + 1, i + 1)).sum())
}

/// Lower bound for `dim I_{d+1}` given `dim I_d = s` in `n` variables:
/// `sum C(s_i + 1, i)` over the `(n-1)`-th representation, skipping the
/// vanishing terms `s_i < i`. Attained by lex ideals.
///
/// A vanishing term stands for an empty summand of the segment, and
/// multiplying an empty space by `S_1` leaves it empty, so it contributes 0
/// rather than `C(i, i) = 1`.
pub fn ideal_growth_bound(s: &BigCount, n: usize) -> Result<BigCount> {
    if n < 2 {
        return Err(Error::invalid("ideal growth bound needs n >= 2"));
    }
    let rep = macaulay_rep(s, n - 1)?;
    Ok(rep
        .terms()
        .filter(|&(i, s_i)| s_i >= i)
        .map(|(i, s_i)| binom(s_i as i64 + 1, i))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(10, 5), big(252));
        assert_eq!(binom(7, 0), big(1));
        assert_eq!(binom(0, 0), big(1));
        assert_eq!(binom(1, 2), big(0));
        assert_eq!(binom(-3, 0), big(0));
        assert_eq!(binom(13, 8), big(1287));
        assert_eq!(binom(100, 49).to_string(), "98913082887808032681188722800");
    }

    #[test]
    fn space_dimensions() {
        assert_eq!(space_dimension(6, 8), big(1287));
        assert_eq!(space_dimension(4, 0), big(1));
        assert_eq!(space_dimension(0, 2), big(0));
        assert_eq!(space_dimension(0, 0), big(1));
        assert_eq!(space_dimension(1, 9), big(1));
    }

    #[test]
    fn greedy_representations() {
        assert_eq!(
            macaulay_rep(&big(114), 6).unwrap().coefficients(),
            &[9, 7, 5, 4, 1, 0]
        );
        assert_eq!(
            macaulay_rep(&big(362), 5).unwrap().coefficients(),
            &[10, 8, 7, 3, 2]
        );
        assert_eq!(
            macaulay_rep(&big(0), 4).unwrap().coefficients(),
            &[3, 2, 1, 0]
        );
        assert_eq!(macaulay_rep(&big(5000), 1).unwrap().coefficients(), &[5000]);
        assert!(macaulay_rep(&big(3), 0).is_err());
        assert!(matches!(
            macaulay_rep(&big(3), MAX_LENGTH + 1),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_rep(&[9, 7, 5, 4, 1, 0]).unwrap(), big(114));
        assert_eq!(eval_rep(&[12, 11, 9, 6, 5, 4, 1, 0]).unwrap(), big(924));
        assert_eq!(eval_rep(&[3, 2, 1, 0]).unwrap(), big(0));
        assert_eq!(eval_rep(&[]).unwrap(), big(0));
        assert!(matches!(eval_rep(&[3, 3, 1]), Err(Error::InvalidRep(_))));
        assert!(matches!(eval_rep(&[1, 4]), Err(Error::InvalidRep(_))));
    }

    #[test]
    fn indexed_access() {
        let rep = macaulay_rep(&big(114), 6).unwrap();
        assert_eq!(rep.get(6), Some(9));
        assert_eq!(rep.get(1), Some(0));
        assert_eq!(rep.get(0), None);
        assert_eq!(rep.get(7), None);
        assert_eq!(rep.to_string(), "9,7,5,4,1,0");
    }

    #[test]
    fn huge_inputs_terminate() {
        let s: BigCount = "123456789012345678901234567890".parse().unwrap();
        for p in [2, 7] {
            assert_eq!(macaulay_rep(&s, p).unwrap().eval(), s);
        }
        // s_2 is close to the word limit, past the last doubling step
        let s: BigCount = "10633823966279326980924613473029062656".parse().unwrap();
        assert_eq!(macaulay_rep(&s, 2).unwrap().eval(), s);
        assert!(macaulay_rep(&(BigCount::from(1u8) << 140u32), 2).is_err());
        // s_1 = s does not fit a machine word
        assert!(matches!(macaulay_rep(&s, 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn growth_bounds_small() {
        assert_eq!(quotient_growth_bound(&big(0), 3).unwrap(), big(0));
        // full quotient in 3 variables, degree 2 -> all 10 cubics
        assert_eq!(quotient_growth_bound(&big(6), 2).unwrap(), big(10));
        assert_eq!(ideal_growth_bound(&big(0), 4).unwrap(), big(0));
        // (x1^2) in 3 variables spans x1^3, x1^2 x2, x1^2 x3
        assert_eq!(ideal_growth_bound(&big(1), 3).unwrap(), big(3));
        assert!(ideal_growth_bound(&big(1), 1).is_err());
        assert!(quotient_growth_bound(&big(1), 0).is_err());
    }
}
