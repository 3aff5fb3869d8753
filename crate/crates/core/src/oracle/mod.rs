//! Brute-force ground truth by exhaustive enumeration.
//!
//! Everything here materializes monomials explicitly and never calls the
//! closed-form dimension, coefficient, decomposition or rank code it is used
//! to check. Only small graded pieces are enumerable; requests above the cap
//! fail with [`Error::ResourceLimit`].

mod sweep;

pub use sweep::{all_representations, sweep, CheckRecord, SweepConfig, SweepReport};

use std::collections::{BTreeSet, HashSet};

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::macaulay::{space_dimension, BigCount};
use crate::monomial::{Monomial, VariableWindow};
use crate::segments::{SegmentSpec, Summand};

/// Default bound on the number of monomials a single enumeration may list.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// All of `M_n^d`, lex-largest first, so `index + 1` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedSpace {
    pub n: usize,
    pub delta: u32,
    pub monomials: Vec<Monomial>,
}

impl EnumeratedSpace {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

fn check_cap(window_size: usize, degree: u32, cap: u64) -> Result<()> {
    let size = space_dimension(window_size, degree as u64);
    if size > BigCount::from(cap) {
        return Err(Error::ResourceLimit {
            size: size.to_string(),
            cap,
        });
    }
    Ok(())
}

pub fn enumerate_space(n: usize, delta: u32) -> Result<EnumeratedSpace> {
    enumerate_space_capped(n, delta, DEFAULT_CAP)
}

pub fn enumerate_space_capped(n: usize, delta: u32, cap: u64) -> Result<EnumeratedSpace> {
    if n == 0 {
        return Err(Error::invalid(
            "a polynomial ring needs at least one variable",
        ));
    }
    let monomials = enumerate_window(VariableWindow::full(n), n, delta, cap)?;
    Ok(EnumeratedSpace {
        n,
        delta,
        monomials,
    })
}

/// Degree-`degree` monomials in the variables of `window`, as elements of
/// the ring with `n` variables, lex-largest first.
pub fn enumerate_window(
    window: VariableWindow,
    n: usize,
    degree: u32,
    cap: u64,
) -> Result<Vec<Monomial>> {
    if window.hi() > n {
        return Err(Error::invalid(format!(
            "window {window} exceeds {n} variables"
        )));
    }
    check_cap(window.size(), degree, cap)?;
    let mut out = Vec::new();
    if window.is_empty() {
        if degree == 0 {
            out.push(Monomial::unit(n));
        }
        return Ok(out);
    }
    let mut exponents = vec![0u32; n];
    fill(
        &mut exponents,
        window.lo() - 1,
        window.hi() - 1,
        degree,
        &mut out,
    );
    Ok(out)
}

// Highest exponent of the current variable first gives lex-descending order.
fn fill(exponents: &mut [u32], at: usize, last: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if at == last {
        exponents[at] = remaining;
        out.push(Monomial::new(exponents.to_vec()).expect("n >= 1"));
        exponents[at] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exponents[at] = e;
        fill(exponents, at + 1, last, remaining - e, out);
    }
    exponents[at] = 0;
}

/// Generators of a segment, by filtering its graded piece through the lex
/// comparison with the defining monomial.
pub fn enumerate_segment(seg: &SegmentSpec) -> Result<Vec<Monomial>> {
    enumerate_segment_capped(seg, DEFAULT_CAP)
}

pub fn enumerate_segment_capped(seg: &SegmentSpec, cap: u64) -> Result<Vec<Monomial>> {
    let all = enumerate_window(seg.window(), seg.n(), seg.delta(), cap)?;
    let mut out = Vec::new();
    for mu in all {
        if seg.contains(&mu)? {
            out.push(mu);
        }
    }
    Ok(out)
}

/// `{ g * x_i }` over all generators and variables, deduplicated,
/// lex-largest first.
pub fn span_multiply(generators: &[Monomial]) -> Result<Vec<Monomial>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let (n, degree) = (first.n(), first.degree());
    let mut span = BTreeSet::new();
    for g in generators {
        if g.n() != n || g.degree() != degree {
            return Err(Error::invalid("generators must share ring and degree"));
        }
        for i in 1..=n {
            span.insert(g.mul_var(i));
        }
    }
    Ok(span.into_iter().rev().collect())
}

/// Lists the generators of `prefix * M_window^degree`.
pub fn materialize_summand(summand: &Summand) -> Result<Vec<Monomial>> {
    if summand.degree < 0 {
        return Ok(Vec::new());
    }
    let n = summand.prefix.n();
    enumerate_window(summand.window, n, summand.degree as u32, DEFAULT_CAP)?
        .iter()
        .map(|mu| summand.prefix.mul(mu))
        .collect()
}

/// A monomial ideal generated in a single degree; not necessarily lex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealSample {
    pub n: usize,
    pub delta: u32,
    pub generators: Vec<Monomial>,
}

impl MonomialIdealSample {
    pub fn new(n: usize, delta: u32, generators: Vec<Monomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if g.n() != n || g.degree() != delta {
                return Err(Error::invalid(format!(
                    "generator {} is not in M_{n}^{delta}",
                    g.to_product_string()
                )));
            }
            if !seen.insert(g) {
                return Err(Error::invalid(format!(
                    "generator {} repeated",
                    g.to_product_string()
                )));
            }
        }
        Ok(MonomialIdealSample {
            n,
            delta,
            generators,
        })
    }

    /// A uniformly sized random subset of `M_n^d` (size between 1 and all).
    pub fn random<R: Rng + ?Sized>(n: usize, delta: u32, rng: &mut R) -> Result<Self> {
        let space = enumerate_space(n, delta)?;
        let k = rng.gen_range(1..=space.len());
        let generators = index::sample(rng, space.len(), k)
            .into_iter()
            .map(|i| space.monomials[i].clone())
            .collect();
        Self::new(n, delta, generators)
    }
}

/// `(dim I_(d+1), dim (S/I)_(d+1))` for the ideal generated by the sample.
pub fn hilbert_next(sample: &MonomialIdealSample) -> Result<(BigCount, BigCount)> {
    check_cap(sample.n, sample.delta + 1, DEFAULT_CAP)?;
    let span = span_multiply(&sample.generators)?.len();
    let total = enumerate_space(sample.n, sample.delta + 1)?.len();
    Ok((BigCount::from(span), BigCount::from(total - span)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segments::SegmentKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn cubics_in_three_variables() {
        let space = enumerate_space(3, 3).unwrap();
        let printed: Vec<String> = space
            .monomials
            .iter()
            .map(|x| x.to_product_string())
            .collect();
        assert_eq!(
            printed,
            ["a^3", "a^2*b", "a^2*c", "a*b^2", "a*b*c", "a*c^2", "b^3", "b^2*c", "b*c^2", "c^3"]
        );
        assert_eq!(enumerate_space(1, 7).unwrap().monomials, vec![m(&[7])]);
        assert_eq!(enumerate_space(6, 8).unwrap().len(), 1287);
        assert_eq!(
            enumerate_space(4, 0).unwrap().monomials,
            vec![Monomial::unit(4)]
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_space_capped(6, 8, 1000),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(enumerate_space_capped(6, 8, 1287).is_ok());
    }

    #[test]
    fn segments_by_filtering() {
        let ideal = SegmentSpec::ideal(m(&[2, 1, 0, 3, 0, 2])).unwrap();
        assert_eq!(enumerate_segment(&ideal).unwrap().len(), 362);
        let top = SegmentSpec::ideal(m(&[3, 0])).unwrap();
        assert!(enumerate_segment(&top).unwrap().is_empty());
        // Q_4^4(b^2cd): 35 quartics, 24 above b^2cd, b^2cd itself, 10 below
        let q = SegmentSpec::quotient(m(&[0, 2, 1, 1])).unwrap();
        assert_eq!(enumerate_segment(&q).unwrap().len(), 10);
    }

    #[test]
    fn windows_and_summands() {
        let w = VariableWindow::new(2, 3).unwrap();
        assert_eq!(
            enumerate_window(w, 3, 2, DEFAULT_CAP).unwrap(),
            vec![m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]
        );
        let empty = VariableWindow::new(4, 3).unwrap();
        assert!(enumerate_window(empty, 3, 2, DEFAULT_CAP)
            .unwrap()
            .is_empty());
        let s = Summand {
            prefix: m(&[1, 0, 0]),
            window: w,
            degree: 1,
        };
        assert_eq!(
            materialize_summand(&s).unwrap(),
            vec![m(&[1, 1, 0]), m(&[1, 0, 1])]
        );
    }

    #[test]
    fn spans() {
        assert_eq!(
            span_multiply(&[m(&[2, 0])]).unwrap(),
            vec![m(&[3, 0]), m(&[2, 1])]
        );
        assert!(span_multiply(&[]).unwrap().is_empty());
        assert!(span_multiply(&[m(&[2, 0]), m(&[1, 0])]).is_err());
    }

    #[test]
    fn quotient_multiplication_small_case() {
        // (S/L)_2 = Q(b^2) means L_2 = Ibar(b^2) = {a^2, ab, ac, b^2}
        let q = SegmentSpec::quotient(m(&[0, 2, 0])).unwrap();
        let l = enumerate_segment(&q.complement().unwrap()).unwrap();
        assert_eq!(l.len(), 4);
        let span: HashSet<Monomial> = span_multiply(&l).unwrap().into_iter().collect();
        let rest: Vec<Monomial> = enumerate_space(3, 3)
            .unwrap()
            .monomials
            .into_iter()
            .filter(|x| !span.contains(x))
            .collect();
        assert_eq!(rest, vec![m(&[0, 1, 2]), m(&[0, 0, 3])]);
        let expected = SegmentSpec::new(SegmentKind::Quotient, false, m(&[0, 2, 1])).unwrap();
        assert_eq!(enumerate_segment(&expected).unwrap(), rest);
    }

    #[test]
    fn hilbert_of_full_piece() {
        let all = enumerate_space(3, 2).unwrap().monomials;
        let sample = MonomialIdealSample::new(3, 2, all).unwrap();
        assert_eq!(
            hilbert_next(&sample).unwrap(),
            (BigCount::from(10u32), BigCount::from(0u32))
        );
    }

    #[test]
    fn sample_validation_and_randomness() {
        assert!(MonomialIdealSample::new(2, 2, vec![m(&[2, 0]), m(&[2, 0])]).is_err());
        assert!(MonomialIdealSample::new(2, 2, vec![m(&[1, 0])]).is_err());
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let x = MonomialIdealSample::random(4, 3, &mut a).unwrap();
        let y = MonomialIdealSample::random(4, 3, &mut b).unwrap();
        assert_eq!(x, y);
        assert!(!x.generators.is_empty());
    }
}
