//! Monomials over a fixed set of variables `x_1, ..., x_n` and the lex order.
//!
//! Variables are indexed from 1. The lex order is the usual one in which
//! `x_1 > x_2 > ... > x_n`, so `x_1^d` is the lex-largest monomial of degree
//! `d` and `x_n^d` the lex-smallest.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^a_1 * ... * x_n^a_n`, stored as its exponent vector.
///
/// The derived `Ord` compares exponent vectors lexicographically, which for
/// two monomials in the same number of variables is exactly the lex order
/// (`Greater` means lex-larger). Use [`Monomial::lex_cmp`] when the variable
/// counts may differ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

/// The contiguous range of variables `x_lo, ..., x_hi`.
///
/// `lo == hi + 1` is allowed and denotes the empty window, which carries
/// only the unit monomial in degree 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariableWindow {
    lo: usize,
    hi: usize,
}

impl VariableWindow {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 {
            return Err(Error::invalid("variable indices start at 1"));
        }
        if lo > hi + 1 {
            return Err(Error::invalid(format!("window [{lo},{hi}] is reversed")));
        }
        Ok(VariableWindow { lo, hi })
    }

    /// `[1, n]`.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1, "a polynomial ring needs at least one variable");
        VariableWindow { lo: 1, hi: n }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Number of variables in the window.
    pub fn size(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }
}

impl fmt::Display for VariableWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::invalid("a monomial needs at least one variable"));
        }
        let degree = exponents
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or_else(|| Error::invalid("total degree overflows u32"))?;
        Ok(Monomial { exponents, degree })
    }

    /// The unit monomial `1` in `n` variables.
    ///
    /// # Panics
    ///
    /// If `n == 0`.
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1, "a polynomial ring needs at least one variable");
        Monomial {
            exponents: vec![0; n],
            degree: 0,
        }
    }

    /// `x_i^e` in `n` variables.
    ///
    /// # Panics
    ///
    /// If `i` is not in `1..=n`.
    pub fn power(i: usize, e: u32, n: usize) -> Self {
        assert!((1..=n).contains(&i), "variable x_{i} outside 1..={n}");
        let mut exponents = vec![0; n];
        exponents[i - 1] = e;
        Monomial {
            exponents,
            degree: e,
        }
    }

    /// Rebuilds a monomial from a list of variable indices, one per factor.
    pub fn from_factorization(indices: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a monomial needs at least one variable"));
        }
        let mut exponents = vec![0u32; n];
        for &j in indices {
            if !(1..=n).contains(&j) {
                return Err(Error::invalid(format!("variable x_{j} outside 1..={n}")));
            }
            exponents[j - 1] += 1;
        }
        Monomial::new(exponents)
    }

    /// Number of variables of the ambient ring.
    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_i`.
    ///
    /// # Panics
    ///
    /// If `i` is not in `1..=n`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// Lex comparison. `Greater` means `self` is lex-larger than `other`.
    pub fn lex_cmp(&self, other: &Monomial) -> Result<Ordering> {
        if self.n() != other.n() {
            return Err(Error::VariableMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.exponents.cmp(&other.exponents))
    }

    /// The nondecreasing index sequence `j_1 <= ... <= j_d` with
    /// `m = x_{j_1} * ... * x_{j_d}`.
    pub fn standard_factorization(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exponents.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, e as usize));
        }
        out
    }

    /// Smallest `i` with `x_i | m`.
    pub fn min_index(&self) -> Result<usize> {
        self.exponents
            .iter()
            .position(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or(Error::UnitMonomial("min"))
    }

    /// Largest `i` with `x_i | m`.
    pub fn max_index(&self) -> Result<usize> {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or(Error::UnitMonomial("max"))
    }

    /// `x_{i+1}^a_{i+1} * ... * x_n^a_n`: the exponents of `x_1..x_i` zeroed.
    pub fn coarse_tail(&self, i: usize) -> Result<Monomial> {
        if i >= self.n() {
            return Err(Error::invalid(format!(
                "coarse tail index {i} outside 0..={}",
                self.n() - 1
            )));
        }
        let mut exponents = self.exponents.clone();
        exponents[..i].iter_mut().for_each(|e| *e = 0);
        Monomial::new(exponents)
    }

    /// Drops the `i` lex-earliest factors of the standard factorization.
    /// `i == degree` yields the unit monomial.
    pub fn fine_tail(&self, i: usize) -> Result<Monomial> {
        if i > self.degree as usize {
            return Err(Error::invalid(format!(
                "fine tail index {i} outside 0..={}",
                self.degree
            )));
        }
        let mut exponents = self.exponents.clone();
        let mut remaining = i as u32;
        for e in exponents.iter_mut() {
            if remaining == 0 {
                break;
            }
            let take = (*e).min(remaining);
            *e -= take;
            remaining -= take;
        }
        Monomial::new(exponents)
    }

    /// Raises every variable index by `i`; the result lives in `n + i`
    /// variables.
    pub fn shift(&self, i: usize) -> Monomial {
        let mut exponents = vec![0; i];
        exponents.extend_from_slice(&self.exponents);
        Monomial {
            exponents,
            degree: self.degree,
        }
    }

    /// The lex-smallest monomial that is lex-larger than `self` in the same
    /// degree.
    ///
    /// Writing `m = w * x_k^g` with `k = max(m)` and `g` maximal, this is
    /// `w * x_{k-1} * x_n^(g-1)`.
    pub fn predecessor(&self) -> Result<Monomial> {
        let k = self
            .max_index()
            .map_err(|_| Error::UnitMonomial("predecessor"))?;
        if k == 1 {
            return Err(Error::NoPredecessor(self.degree));
        }
        let n = self.n();
        let g = self.exponents[k - 1];
        let mut exponents = self.exponents.clone();
        exponents[k - 1] = 0;
        exponents[k - 2] += 1;
        exponents[n - 1] += g - 1;
        Monomial::new(exponents)
    }

    /// `m * x_i`.
    ///
    /// # Panics
    ///
    /// If `i` is not in `1..=n`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i - 1] += 1;
        Monomial {
            exponents,
            degree: self.degree + 1,
        }
    }

    /// `m / x_i`, or `None` if `x_i` does not divide `m`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        let e = *self.exponents.get(i.checked_sub(1)?)?;
        if e == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[i - 1] -= 1;
        Some(Monomial {
            exponents,
            degree: self.degree - 1,
        })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.n() != other.n() {
            return Err(Error::VariableMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.n() != other.n() {
            return None;
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Monomial::new(exponents).ok()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.checked_div(self).is_some()
    }

    /// Whether every variable dividing `m` lies in `window`.
    pub fn in_window(&self, window: &VariableWindow) -> bool {
        self.exponents
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || window.contains_index(i + 1))
    }

    /// Human-readable product form: `a^2*b*d^3*f^2` for up to 26 variables,
    /// `x1^2*x2*x4^3` otherwise, `1` for the unit.
    pub fn to_product_string(&self) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let letters = self.n() <= 26;
        let mut parts = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let var = if letters {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{}", i + 1)
            };
            parts.push(if e == 1 { var } else { format!("{var}^{e}") });
        }
        parts.join("*")
    }
}

/// The comma-separated exponent vector, e.g. `2,1,0,3,0,2`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self.to_product_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    // a^2 b d^3 f^2 in k[a..f]
    fn example() -> Monomial {
        m(&[2, 1, 0, 3, 0, 2])
    }

    #[test]
    fn lex_order_of_cubics_in_three_variables() {
        let mut all = Vec::new();
        for a in 0..=3u32 {
            for b in 0..=3 - a {
                all.push(m(&[a, b, 3 - a - b]));
            }
        }
        all.sort_by(|x, y| y.lex_cmp(x).unwrap());
        let printed: Vec<String> = all.iter().map(|x| x.to_product_string()).collect();
        assert_eq!(
            printed,
            ["a^3", "a^2*b", "a^2*c", "a*b^2", "a*b*c", "a*c^2", "b^3", "b^2*c", "b*c^2", "c^3"]
        );
        assert_eq!(m(&[3, 0, 0]).lex_cmp(&m(&[2, 1, 0])), Ok(Ordering::Greater));
        assert_eq!(example().lex_cmp(&example()), Ok(Ordering::Equal));
    }

    #[test]
    fn lex_cmp_rejects_mismatched_rings() {
        assert_eq!(
            m(&[1, 0]).lex_cmp(&m(&[1, 0, 0])),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn standard_factorizations() {
        assert_eq!(
            m(&[0, 3, 0, 1, 2]).standard_factorization(),
            vec![2, 2, 2, 4, 5, 5]
        );
        assert_eq!(
            Monomial::power(1, 4, 3).standard_factorization(),
            vec![1; 4]
        );
        assert_eq!(
            example().standard_factorization(),
            vec![1, 1, 2, 4, 4, 4, 6, 6]
        );
        assert!(Monomial::unit(3).standard_factorization().is_empty());
        let f = example().standard_factorization();
        assert_eq!(Monomial::from_factorization(&f, 6).unwrap(), example());
    }

    #[test]
    fn min_and_max() {
        assert_eq!(example().min_index(), Ok(1));
        assert_eq!(example().max_index(), Ok(6));
        assert_eq!(Monomial::power(3, 5, 4).min_index(), Ok(3));
        assert_eq!(Monomial::power(3, 5, 4).max_index(), Ok(3));
        assert_eq!(m(&[0, 1, 0, 4]).min_index(), Ok(2));
        assert_eq!(m(&[0, 1, 0, 4]).max_index(), Ok(4));
        assert_eq!(
            Monomial::unit(2).min_index(),
            Err(Error::UnitMonomial("min"))
        );
        assert_eq!(
            Monomial::unit(2).max_index(),
            Err(Error::UnitMonomial("max"))
        );
    }

    #[test]
    fn tails() {
        let x = m(&[2, 1, 0, 4]);
        assert_eq!(x.coarse_tail(0).unwrap(), x);
        assert_eq!(x.coarse_tail(1).unwrap(), m(&[0, 1, 0, 4]));
        assert_eq!(x.coarse_tail(2).unwrap(), m(&[0, 0, 0, 4]));
        assert_eq!(x.coarse_tail(3).unwrap(), m(&[0, 0, 0, 4]));
        assert!(x.coarse_tail(4).is_err());

        let fine: Vec<Monomial> = (0..=7).map(|i| x.fine_tail(i).unwrap()).collect();
        assert_eq!(
            fine,
            vec![
                x.clone(),
                m(&[1, 1, 0, 4]),
                m(&[0, 1, 0, 4]),
                m(&[0, 0, 0, 4]),
                m(&[0, 0, 0, 3]),
                m(&[0, 0, 0, 2]),
                m(&[0, 0, 0, 1]),
                Monomial::unit(4),
            ]
        );
        assert!(x.fine_tail(8).is_err());
    }

    #[test]
    fn shifts() {
        let b2cd = m(&[0, 2, 1, 1]);
        assert_eq!(b2cd.shift(3), m(&[0, 0, 0, 0, 2, 1, 1]));
        assert_eq!(b2cd.shift(0), b2cd);
        assert_eq!(m(&[2]).shift(1), m(&[0, 2]));
    }

    #[test]
    fn predecessors() {
        assert_eq!(m(&[1, 1]).predecessor().unwrap(), m(&[2, 0]));
        assert_eq!(example().predecessor().unwrap(), m(&[2, 1, 0, 3, 1, 1]));
        assert_eq!(m(&[0, 3, 0]).predecessor().unwrap(), m(&[1, 0, 2]));
        assert_eq!(m(&[4, 0]).predecessor(), Err(Error::NoPredecessor(4)));
        assert_eq!(
            Monomial::unit(3).predecessor(),
            Err(Error::UnitMonomial("predecessor"))
        );
    }

    #[test]
    fn windows() {
        assert!(VariableWindow::new(0, 3).is_err());
        assert!(VariableWindow::new(5, 3).is_err());
        let empty = VariableWindow::new(7, 6).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.size(), 0);
        assert!(m(&[0, 1, 0, 4]).in_window(&VariableWindow::new(2, 4).unwrap()));
        assert!(!m(&[0, 1, 0, 4]).in_window(&VariableWindow::new(3, 4).unwrap()));
    }

    #[test]
    fn printing() {
        assert_eq!(example().to_string(), "2,1,0,3,0,2");
        assert_eq!(example().to_product_string(), "a^2*b*d^3*f^2");
        assert_eq!(Monomial::unit(2).to_product_string(), "1");
        assert_eq!(Monomial::power(27, 2, 27).to_product_string(), "x27^2");
    }
}
