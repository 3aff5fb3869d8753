//! Lex ideal and quotient segments and their decomposition into monomial
//! spaces.
//!
//! For `m` of degree `d` in `n` variables the (exclusive) ideal segment
//! `I(m)` is spanned by the degree-`d` monomials lex-larger than `m`, the
//! quotient segment `Q(m)` by those lex-smaller. Inclusive variants also
//! contain `m`. A segment is always right-anchored at `x_n`; its window
//! `[lo, n]` restricts which variables its generators may use.
//!
//! Segments are kept intensional: only [`crate::oracle`] ever lists their
//! generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::macaulay::{binom, check_length, space_dimension, BigCount};
use crate::monomial::{Monomial, VariableWindow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Ideal,
    Quotient,
}

impl fmt::Display for SegmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SegmentKind::Ideal => "ideal",
            SegmentKind::Quotient => "quotient",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegmentSpec {
    kind: SegmentKind,
    inclusive: bool,
    m: Monomial,
    window: VariableWindow,
}

impl SegmentSpec {
    /// Segment over the full window `[1, n]`.
    pub fn new(kind: SegmentKind, inclusive: bool, m: Monomial) -> Result<Self> {
        let window = VariableWindow::full(m.n());
        Self::with_window(kind, inclusive, m, window)
    }

    pub fn with_window(
        kind: SegmentKind,
        inclusive: bool,
        m: Monomial,
        window: VariableWindow,
    ) -> Result<Self> {
        if m.is_unit() {
            return Err(Error::UnitMonomial("a lex segment"));
        }
        if window.hi() != m.n() || window.is_empty() {
            return Err(Error::invalid(format!(
                "segment window {window} must be nonempty and end at x_{}",
                m.n()
            )));
        }
        if !m.in_window(&window) {
            return Err(Error::invalid(format!(
                "{} uses variables outside {window}",
                m.to_product_string()
            )));
        }
        Ok(SegmentSpec {
            kind,
            inclusive,
            m,
            window,
        })
    }

    /// `I(m)` over `[1, n]`.
    pub fn ideal(m: Monomial) -> Result<Self> {
        Self::new(SegmentKind::Ideal, false, m)
    }

    /// `Q(m)` over `[1, n]`.
    pub fn quotient(m: Monomial) -> Result<Self> {
        Self::new(SegmentKind::Quotient, false, m)
    }

    pub fn kind(&self) -> SegmentKind {
        self.kind
    }

    pub fn inclusive(&self) -> bool {
        self.inclusive
    }

    pub fn monomial(&self) -> &Monomial {
        &self.m
    }

    pub fn window(&self) -> VariableWindow {
        self.window
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn delta(&self) -> u32 {
        self.m.degree()
    }

    pub fn is_full_window(&self) -> bool {
        self.window.lo() == 1
    }

    /// Membership test for a single monomial.
    pub fn contains(&self, mu: &Monomial) -> Result<bool> {
        let ord = mu.lex_cmp(&self.m)?;
        if mu.degree() != self.delta() || !mu.in_window(&self.window) {
            return Ok(false);
        }
        Ok(match (self.kind, self.inclusive) {
            (SegmentKind::Ideal, false) => ord.is_gt(),
            (SegmentKind::Ideal, true) => ord.is_ge(),
            (SegmentKind::Quotient, false) => ord.is_lt(),
            (SegmentKind::Quotient, true) => ord.is_le(),
        })
    }

    /// The segment's complement in the full graded piece: `I(m) <-> Qbar(m)`
    /// and `Ibar(m) <-> Q(m)`.
    pub fn complement(&self) -> Result<SegmentSpec> {
        if !self.is_full_window() {
            return Err(Error::invalid("complements are taken in the full window"));
        }
        let kind = match self.kind {
            SegmentKind::Ideal => SegmentKind::Quotient,
            SegmentKind::Quotient => SegmentKind::Ideal,
        };
        SegmentSpec::new(kind, !self.inclusive, self.m.clone())
    }

    fn require_exclusive(&self) -> Result<()> {
        if self.inclusive {
            return Err(Error::Unsupported(
                "inclusive segments must be rewritten as exclusive ones first".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for SegmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind={} inclusive={} m={} window={} degree={}",
            self.kind,
            self.inclusive,
            self.m,
            self.window,
            self.delta()
        )
    }
}

/// One piece `prefix * M_window^degree` of a decomposition.
///
/// `degree == -1` marks an empty summand; so does a nonzero degree over an
/// empty window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub prefix: Monomial,
    pub window: VariableWindow,
    pub degree: i64,
}

impl Summand {
    pub fn dimension(&self) -> BigCount {
        if self.degree < 0 {
            return BigCount::default();
        }
        space_dimension(self.window.size(), self.degree as u64)
    }

    pub fn is_trivial(&self) -> bool {
        self.degree < 0 || (self.window.is_empty() && self.degree > 0)
    }
}

/// `prefix | [lo,hi] | degree | dim`
impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {}",
            self.prefix.to_product_string(),
            self.window,
            self.degree,
            self.dimension()
        )
    }
}

/// A segment written as a direct sum of monomial spaces.
///
/// `decompose` always yields `n - lo` summands for ideals (one per window
/// start `i = lo..n-1`) and `d` for quotients, trivial ones included, so the
/// summand position lines up with the Macaulay coefficient index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: SegmentKind,
    pub n: usize,
    /// Degree of the generators of the decomposed space.
    pub degree: u32,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn dimension(&self) -> BigCount {
        self.summands.iter().map(Summand::dimension).sum()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.summands.iter().map(|s| s.degree).collect()
    }
}

/// One step of peeling a monomial space off a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `beta` for ideals (exponent of `x_lo` in the split-off space),
    /// `gamma` for quotients (first variable of the split-off space).
    pub pivot: usize,
    pub space: Summand,
    /// `(multiplier, segment)`; `None` when the remainder is empty.
    pub residual: Option<(Monomial, SegmentSpec)>,
}

/// Splits an exclusive segment over `[lo, n]` into a monomial space and a
/// smaller segment.
///
/// Ideal: `I(m) = x_lo^b M_[lo,n]^(d-b) + x_lo^(b-1) I_[lo+1,n](m / x_lo^(b-1))`
/// with `b = a_lo + 1` (so `b = d + 1` when `m = x_lo^d`).
///
/// Quotient: `Q(m) = x_(g-1) Q_[g-1,n](m / x_(g-1)) + M_[g,n]^d` with
/// `g = min(m) + 1` (so `g = n + 1` when `m = x_n^d`).
pub fn split_once(seg: &SegmentSpec) -> Result<Split> {
    seg.require_exclusive()?;
    let m = seg.monomial();
    let n = seg.n();
    let d = seg.delta() as i64;
    let lo = seg.window().lo();
    match seg.kind() {
        SegmentKind::Ideal => {
            let alpha = m.exponent(lo);
            let beta = alpha as usize + 1;
            let space = Summand {
                prefix: Monomial::power(lo, alpha + 1, n),
                window: seg.window(),
                degree: d - beta as i64,
            };
            let multiplier = Monomial::power(lo, alpha, n);
            let rest = m.checked_div(&multiplier).expect("x_lo^a_lo divides m");
            let residual = if rest.is_unit() {
                None
            } else {
                let window = VariableWindow::new(lo + 1, n)?;
                Some((
                    multiplier,
                    SegmentSpec::with_window(SegmentKind::Ideal, false, rest, window)?,
                ))
            };
            Ok(Split {
                pivot: beta,
                space,
                residual,
            })
        }
        SegmentKind::Quotient => {
            let g = m.min_index()?;
            let space = Summand {
                prefix: Monomial::unit(n),
                window: VariableWindow::new(g + 1, n)?,
                degree: d,
            };
            let residual = if d == 1 {
                None
            } else {
                let rest = m.div_var(g).expect("x_min divides m");
                let window = VariableWindow::new(g, n)?;
                Some((
                    Monomial::power(g, 1, n),
                    SegmentSpec::with_window(SegmentKind::Quotient, false, rest, window)?,
                ))
            };
            Ok(Split {
                pivot: g + 1,
                space,
                residual,
            })
        }
    }
}

/// Full decomposition in closed form.
///
/// Ideal, summand `i = lo..n-1`: `(m x_i / ct_i(m)) * M_[i,n]^(deg ct_i(m) - 1)`.
///
/// Quotient, summand `i = 1..d`:
/// `(m / ft_(i-1)(m)) * M_[min(ft_(i-1)(m)) + 1, n]^(d - i + 1)`.
pub fn decompose(seg: &SegmentSpec) -> Result<Decomposition> {
    seg.require_exclusive()?;
    let m = seg.monomial();
    let n = seg.n();
    let d = seg.delta();
    if seg.kind() == SegmentKind::Quotient {
        check_length(d as usize)?;
    }
    let summands = match seg.kind() {
        SegmentKind::Ideal => (seg.window().lo()..n)
            .map(|i| {
                let tail = m.coarse_tail(i)?;
                let mut head = m.checked_div(&tail).expect("a coarse tail divides m");
                head = head.mul_var(i);
                Ok(Summand {
                    prefix: head,
                    window: VariableWindow::new(i, n)?,
                    degree: tail.degree() as i64 - 1,
                })
            })
            .collect::<Result<Vec<_>>>()?,
        SegmentKind::Quotient => (1..=d as usize)
            .map(|i| {
                let tail = m.fine_tail(i - 1)?;
                let head = m.checked_div(&tail).expect("a fine tail divides m");
                Ok(Summand {
                    prefix: head,
                    window: VariableWindow::new(tail.min_index()? + 1, n)?,
                    degree: (d as usize - i + 1) as i64,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(Decomposition {
        kind: seg.kind(),
        n,
        degree: d,
        summands,
    })
}

/// Exact dimension from the tails of `m`, without decomposing:
///
/// `dim I(m) = sum_{i=1}^{w-1} C(i + deg ct_(n-i)(m) - 1, i)` over a window of
/// `w` variables, and `dim Q(m) = sum_{i=1}^{d} C(n - min ft_(d-i)(m) + i - 1, i)`.
/// Inclusive segments add one. The quotient sum has one term per unit of
/// degree.
pub fn segment_dimension(seg: &SegmentSpec) -> BigCount {
    let m = seg.monomial();
    let n = seg.n();
    let d = seg.delta() as usize;
    let exclusive: BigCount = match seg.kind() {
        SegmentKind::Ideal => (1..seg.window().size())
            .map(|i| {
                let tail = m.coarse_tail(n - i).expect("n - i in range");
                binom(i as i64 + tail.degree() as i64 - 1, i as u64)
            })
            .sum(),
        SegmentKind::Quotient => (1..=d)
            .map(|i| {
                let tail = m.fine_tail(d - i).expect("d - i in range");
                let low = tail.min_index().expect("nonempty fine tail");
                binom(n as i64 - low as i64 + i as i64 - 1, i as u64)
            })
            .sum(),
    };
    if seg.inclusive() {
        exclusive + 1u32
    } else {
        exclusive
    }
}

/// The segment spanned by `S_1 * segment` (ideals), or the quotient in the
/// next degree after killing `S_1 * L` (quotients):
///
/// * `S_1 I(m) = I(m x_max(m))`, `S_1 Ibar(m) = Ibar(m x_n)`;
/// * `(S/L)_d = Q(m)` gives `(S/S_1 L)_(d+1) = Q(m x_n)`;
/// * `(S/L)_d = Qbar(m)` gives `(S/S_1 L)_(d+1) = Qbar(m x_max(m))`.
pub fn multiply_segment(seg: &SegmentSpec) -> Result<SegmentSpec> {
    if !seg.is_full_window() {
        return Err(Error::invalid(
            "multiplication by S_1 is defined for full-window segments",
        ));
    }
    let m = seg.monomial();
    let by_max = matches!(
        (seg.kind(), seg.inclusive()),
        (SegmentKind::Ideal, false) | (SegmentKind::Quotient, true)
    );
    let var = if by_max { m.max_index()? } else { m.n() };
    SegmentSpec::new(seg.kind(), seg.inclusive(), m.mul_var(var))
}

/// Raises the degree of each summand by one, windows and prefixes unchanged.
///
/// Empty ideal summands (degree -1) stay empty: `S_1` times the zero space is
/// zero.
pub fn multiply_decomposition(d: &Decomposition) -> Decomposition {
    let summands = d
        .summands
        .iter()
        .map(|s| Summand {
            prefix: s.prefix.clone(),
            window: s.window,
            degree: if s.degree < 0 { s.degree } else { s.degree + 1 },
        })
        .collect();
    Decomposition {
        kind: d.kind,
        n: d.n,
        degree: d.degree + 1,
        summands,
    }
}

/// `Q_[i,n](m) = Q_[i+1,n](m)` whenever `x_i` does not divide `m`; applied
/// until the window starts at `min(m)`.
pub fn reduce_window(seg: &SegmentSpec) -> Result<SegmentSpec> {
    if seg.kind() != SegmentKind::Quotient {
        return Err(Error::invalid(
            "only quotient segments can drop leading variables",
        ));
    }
    let lo = seg.monomial().min_index()?;
    if lo == seg.window().lo() {
        return Ok(seg.clone());
    }
    SegmentSpec::with_window(
        seg.kind(),
        seg.inclusive(),
        seg.monomial().clone(),
        VariableWindow::new(lo, seg.n())?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn w(lo: usize, hi: usize) -> VariableWindow {
        VariableWindow::new(lo, hi).unwrap()
    }

    fn example() -> Monomial {
        m(&[2, 1, 0, 3, 0, 2])
    }

    #[test]
    fn rejects_unit_and_bad_windows() {
        assert!(matches!(
            SegmentSpec::ideal(Monomial::unit(3)),
            Err(Error::UnitMonomial(_))
        ));
        assert!(
            SegmentSpec::with_window(SegmentKind::Ideal, false, m(&[1, 1, 0]), w(2, 3)).is_err()
        );
        assert!(
            SegmentSpec::with_window(SegmentKind::Ideal, false, m(&[0, 1, 1]), w(2, 2)).is_err()
        );
    }

    #[test]
    fn first_split_of_the_ideal_example() {
        let split = split_once(&SegmentSpec::ideal(example()).unwrap()).unwrap();
        assert_eq!(split.pivot, 3);
        assert_eq!(
            split.space,
            Summand {
                prefix: m(&[3, 0, 0, 0, 0, 0]),
                window: w(1, 6),
                degree: 5
            }
        );
        let (mult, rest) = split.residual.unwrap();
        assert_eq!(mult, m(&[2, 0, 0, 0, 0, 0]));
        assert_eq!(rest.monomial(), &m(&[0, 1, 0, 3, 0, 2]));
        assert_eq!(rest.window(), w(2, 6));
        assert_eq!(rest.delta(), 6);
    }

    #[test]
    fn first_split_of_the_quotient_example() {
        let split = split_once(&SegmentSpec::quotient(example()).unwrap()).unwrap();
        assert_eq!(split.pivot, 2);
        assert_eq!(split.space.window, w(2, 6));
        assert_eq!(split.space.degree, 8);
        assert!(split.space.prefix.is_unit());
        let (mult, rest) = split.residual.unwrap();
        assert_eq!(mult, m(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(rest.monomial(), &m(&[1, 1, 0, 3, 0, 2]));
        assert_eq!(rest.window(), w(1, 6));
    }

    #[test]
    fn degenerate_splits() {
        let top = SegmentSpec::ideal(Monomial::power(1, 4, 3)).unwrap();
        let split = split_once(&top).unwrap();
        assert_eq!(split.pivot, 5);
        assert_eq!(split.space.degree, -1);
        assert!(split.residual.is_none());

        let bottom = SegmentSpec::quotient(Monomial::power(3, 4, 3)).unwrap();
        let split = split_once(&bottom).unwrap();
        assert_eq!(split.pivot, 4);
        assert!(split.space.window.is_empty());
        assert_eq!(split.space.dimension(), BigCount::from(0u32));

        let inclusive = SegmentSpec::new(SegmentKind::Ideal, true, example()).unwrap();
        assert!(matches!(split_once(&inclusive), Err(Error::Unsupported(_))));
        assert!(matches!(decompose(&inclusive), Err(Error::Unsupported(_))));
    }

    #[test]
    fn dimensions_of_the_examples() {
        let ideal = SegmentSpec::ideal(example()).unwrap();
        let quotient = SegmentSpec::quotient(example()).unwrap();
        assert_eq!(segment_dimension(&ideal), BigCount::from(362u32));
        assert_eq!(segment_dimension(&quotient), BigCount::from(924u32));
        let incl = SegmentSpec::new(SegmentKind::Quotient, true, example()).unwrap();
        assert_eq!(segment_dimension(&incl), BigCount::from(925u32));
        let top = SegmentSpec::ideal(Monomial::power(1, 5, 4)).unwrap();
        let bottom = SegmentSpec::quotient(Monomial::power(4, 5, 4)).unwrap();
        assert_eq!(segment_dimension(&top), BigCount::from(0u32));
        assert_eq!(segment_dimension(&bottom), BigCount::from(0u32));
    }

    #[test]
    fn multiplication_rules() {
        let s = multiply_segment(&SegmentSpec::ideal(example()).unwrap()).unwrap();
        assert_eq!(s.monomial(), &m(&[2, 1, 0, 3, 0, 3]));
        assert_eq!(s.delta(), 9);

        let incl = SegmentSpec::new(SegmentKind::Ideal, true, m(&[1, 1, 0])).unwrap();
        assert_eq!(multiply_segment(&incl).unwrap().monomial(), &m(&[1, 1, 1]));

        let q = SegmentSpec::quotient(m(&[0, 2, 0])).unwrap();
        assert_eq!(multiply_segment(&q).unwrap().monomial(), &m(&[0, 2, 1]));

        let qbar = SegmentSpec::new(SegmentKind::Quotient, true, m(&[0, 2, 0])).unwrap();
        assert_eq!(multiply_segment(&qbar).unwrap().monomial(), &m(&[0, 3, 0]));

        let windowed =
            SegmentSpec::with_window(SegmentKind::Quotient, false, m(&[0, 2, 0]), w(2, 3)).unwrap();
        assert!(multiply_segment(&windowed).is_err());
    }

    #[test]
    fn multiplied_decomposition_degrees() {
        let d = decompose(&SegmentSpec::ideal(example()).unwrap()).unwrap();
        assert_eq!(d.degrees(), vec![5, 4, 4, 1, 1]);
        assert_eq!(multiply_decomposition(&d).degrees(), vec![6, 5, 5, 2, 2]);

        let top = decompose(&SegmentSpec::ideal(Monomial::power(1, 3, 4)).unwrap()).unwrap();
        assert!(top.summands.iter().all(Summand::is_trivial));
        let lifted = multiply_decomposition(&top);
        assert!(lifted.summands.iter().all(Summand::is_trivial));
        assert_eq!(lifted.dimension(), BigCount::from(0u32));

        let q = decompose(&SegmentSpec::quotient(example()).unwrap()).unwrap();
        assert_eq!(q.degrees(), vec![8, 7, 6, 5, 4, 3, 2, 1]);
        assert_eq!(
            multiply_decomposition(&q).degrees(),
            vec![9, 8, 7, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn window_reduction() {
        let bd3f2 = m(&[0, 1, 0, 3, 0, 2]);
        let seg =
            SegmentSpec::with_window(SegmentKind::Quotient, false, bd3f2.clone(), w(1, 6)).unwrap();
        assert_eq!(reduce_window(&seg).unwrap().window(), w(2, 6));
        let already = reduce_window(&seg).unwrap();
        assert_eq!(reduce_window(&already).unwrap(), already);

        let d3 = SegmentSpec::quotient(m(&[0, 0, 0, 3])).unwrap();
        let reduced = reduce_window(&d3).unwrap();
        assert_eq!(reduced.window(), w(4, 4));
        assert_eq!(segment_dimension(&reduced), BigCount::from(0u32));

        assert!(reduce_window(&SegmentSpec::ideal(bd3f2).unwrap()).is_err());
    }

    #[test]
    fn membership() {
        let seg = SegmentSpec::ideal(m(&[0, 2, 0])).unwrap();
        assert!(seg.contains(&m(&[1, 0, 1])).unwrap());
        assert!(!seg.contains(&m(&[0, 2, 0])).unwrap());
        assert!(!seg.contains(&m(&[0, 1, 1])).unwrap());
        assert!(!seg.contains(&m(&[1, 0, 0])).unwrap());
        assert!(seg.contains(&m(&[1, 0])).is_err());
    }
}
