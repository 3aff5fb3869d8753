//! Exhaustive verification of every closed-form operation against
//! enumeration, cell by cell over a grid of `(n, d)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    enumerate_segment, enumerate_space, hilbert_next, materialize_summand, span_multiply,
    EnumeratedSpace, MonomialIdealSample,
};
use crate::duality::{
    coefficient_sets, ideal_coefficients, quotient_coefficients, rank, rank_by_quotient,
    reconstruct_from_ideal_set, reconstruct_from_quotient_set, shift_inheritance_check, unrank,
};
use crate::error::{Error, Result};
use crate::macaulay::{
    ideal_growth_bound, macaulay_rep, quotient_growth_bound, space_dimension, BigCount,
};
use crate::monomial::{Monomial, VariableWindow};
use crate::segments::{
    decompose, multiply_decomposition, multiply_segment, reduce_window, segment_dimension,
    split_once, Decomposition, SegmentKind, SegmentSpec, Summand,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_delta: u32,
    /// Cells checked in addition to the `max_n x max_delta` grid.
    pub extra_cells: Vec<(usize, u32)>,
    pub seed: u64,
    /// Random monomial ideals drawn per cell for the growth bounds.
    pub samples_per_cell: usize,
    /// Uniqueness of Macaulay representations is checked for all
    /// `s <= uniqueness_max_s` and `p <= uniqueness_max_p`.
    pub uniqueness_max_s: u64,
    pub uniqueness_max_p: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 5,
            max_delta: 6,
            extra_cells: vec![(6, 8)],
            seed: 0x6c65_7864_7561_6c00,
            samples_per_cell: 40,
            uniqueness_max_s: 5000,
            uniqueness_max_p: 8,
        }
    }
}

impl SweepConfig {
    /// Grid cells plus extras, deduplicated, in `(n, d)` order.
    pub fn cells(&self) -> Vec<(usize, u32)> {
        let grid = (1..=self.max_n).flat_map(|n| (1..=self.max_delta).map(move |d| (n, d)));
        let all: BTreeSet<(usize, u32)> = grid.chain(self.extra_cells.iter().copied()).collect();
        all.into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    /// `None` for checks that are not tied to a graded piece.
    pub cell: Option<(usize, u32)>,
    pub property: &'static str,
    pub ok: bool,
    /// Number of individual assertions made.
    pub checked: usize,
    pub detail: String,
}

/// `cell=(n,d) property=<name> status=ok|FAIL detail=...`
impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cell {
            Some((n, d)) => write!(f, "cell=({n},{d})")?,
            None => write!(f, "cell=global")?,
        }
        write!(
            f,
            " property={} status={} detail={}",
            self.property,
            if self.ok { "ok" } else { "FAIL" },
            self.detail
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub seed: u64,
    pub records: Vec<CheckRecord>,
}

impl SweepReport {
    pub fn all_ok(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.records.iter().filter(|r| !r.ok).collect()
    }

    pub fn records_for(&self, property: &str) -> Vec<&CheckRecord> {
        self.records
            .iter()
            .filter(|r| r.property == property)
            .collect()
    }
}

/// Runs every check over every cell. Cells are independent and processed in
/// parallel; the report is ordered by cell regardless of scheduling.
pub fn sweep(config: &SweepConfig) -> SweepReport {
    let cells = config.cells();
    let mut records: Vec<CheckRecord> = cells
        .par_iter()
        .map(|&(n, d)| check_cell(n, d, cell_seed(config.seed, n, d), config.samples_per_cell))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    records.push(check_uniqueness(
        config.uniqueness_max_s,
        config.uniqueness_max_p,
    ));
    SweepReport {
        seed: config.seed,
        records,
    }
}

fn cell_seed(seed: u64, n: usize, d: u32) -> u64 {
    (seed ^ ((n as u64) << 32 | d as u64)).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Accumulates one property's assertions, keeping the first failure.
struct Check {
    property: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Check {
    fn new(property: &'static str) -> Self {
        Check {
            property,
            checked: 0,
            failure: None,
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    /// Runs a fallible block; an error counts as a failure.
    fn run(&mut self, context: impl fmt::Display, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            let msg = format!("{context}: {e}");
            self.expect(false, || msg);
        }
    }

    fn finish(self, cell: Option<(usize, u32)>) -> CheckRecord {
        let ok = self.failure.is_none();
        CheckRecord {
            cell,
            property: self.property,
            ok,
            checked: self.checked,
            detail: self
                .failure
                .unwrap_or_else(|| format!("checked={}", self.checked)),
        }
    }
}

fn show(m: &Monomial) -> String {
    m.to_product_string()
}

fn as_set(v: &[Monomial]) -> HashSet<Monomial> {
    v.iter().cloned().collect()
}

fn big(v: usize) -> BigCount {
    BigCount::from(v)
}

fn check_cell(n: usize, d: u32, seed: u64, samples: usize) -> Vec<CheckRecord> {
    let cell = Some((n, d));
    let (space, next) = match (enumerate_space(n, d), enumerate_space(n, d + 1)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return vec![CheckRecord {
                cell,
                property: "enumeration",
                ok: false,
                checked: 0,
                detail: e.to_string(),
            }]
        }
    };
    let ctx = Cell {
        n,
        d,
        list: &space.monomials,
        next: &next,
        spans: PrefixSpans::new(&space.monomials),
        index: positions(&space.monomials),
        next_index: positions(&next.monomials),
    };
    let mut checks = vec![
        ctx.space_enumeration(&space),
        ctx.lex_total_order(),
        ctx.factorization_roundtrip(),
        ctx.tails(),
        ctx.shifts(),
        ctx.predecessor_adjacency(),
        ctx.segment_dimension(),
        ctx.graded_piece_partition(),
        ctx.decomposition_partition(),
        ctx.decomposition_monotonicity(),
        ctx.splitting_agreement(),
        ctx.windowed_segments(),
        ctx.multiplication_agreement(),
        ctx.multiply_decomposition(),
        ctx.growth_tightness(),
        ctx.coefficient_dimension(),
        ctx.partition_theorem(),
        ctx.bijection(),
        ctx.reconstruction_roundtrip(),
        ctx.rank_unrank(),
        ctx.shift_inheritance(),
        ctx.hilbert_full_space(),
    ];
    checks.push(ctx.growth_validity_random(seed, samples));
    checks.into_iter().map(|c| c.finish(cell)).collect()
}

/// The spans `S_1 * {list[0..k]}` for every `k` at once: the span of
/// `I(list[k])` and of `Ibar(list[k-1])`.
///
/// Each degree `d + 1` monomial records the first generator producing it, so
/// it lies in the `k`-th span exactly when that index is below `k`.
struct PrefixSpans {
    first: HashMap<Monomial, usize>,
    /// `sizes[k]` = size of the `k`-th span.
    sizes: Vec<usize>,
}

impl PrefixSpans {
    fn new(list: &[Monomial]) -> Self {
        let mut first = HashMap::new();
        let mut sizes = vec![0];
        for (k, g) in list.iter().enumerate() {
            for i in 1..=g.n() {
                first.entry(g.mul_var(i)).or_insert(k);
            }
            sizes.push(first.len());
        }
        PrefixSpans { first, sizes }
    }

    fn contains(&self, k: usize, x: &Monomial) -> bool {
        self.first.get(x).is_some_and(|&j| j < k)
    }
}

/// A set of degree `d + 1` monomials given by a prefix span or its
/// complement.
struct SpanSet<'a> {
    spans: &'a PrefixSpans,
    k: usize,
    complement: bool,
    size: usize,
}

impl SpanSet<'_> {
    fn contains(&self, x: &Monomial) -> bool {
        self.spans.contains(self.k, x) != self.complement
    }

    /// Whether the distinct-or-not `listed` monomials are exactly this set.
    fn equals(&self, listed: &[Monomial]) -> bool {
        listed.len() == self.size
            && listed.iter().all(|x| self.contains(x))
            && as_set(listed).len() == listed.len()
    }
}

struct Cell<'a> {
    n: usize,
    d: u32,
    list: &'a [Monomial],
    next: &'a EnumeratedSpace,
    spans: PrefixSpans,
    index: HashMap<Monomial, usize>,
    next_index: HashMap<Monomial, usize>,
}

fn positions(list: &[Monomial]) -> HashMap<Monomial, usize> {
    list.iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect()
}

impl Cell<'_> {
    fn total(&self) -> usize {
        self.list.len()
    }

    /// Generators of a full-window segment of degree `d` or `d + 1`, cut out
    /// of the lex-sorted listing by position.
    fn slice(&self, seg: &SegmentSpec) -> Result<&[Monomial]> {
        let (list, index) = if seg.delta() == self.d {
            (self.list, &self.index)
        } else {
            (&self.next.monomials[..], &self.next_index)
        };
        let pos = match index.get(seg.monomial()) {
            Some(&pos) if seg.is_full_window() => pos,
            _ => return Err(Error::Internal(format!("{seg} is not listed in this cell"))),
        };
        Ok(match (seg.kind(), seg.inclusive()) {
            (SegmentKind::Ideal, false) => &list[..pos],
            (SegmentKind::Ideal, true) => &list[..=pos],
            (SegmentKind::Quotient, false) => &list[pos + 1..],
            (SegmentKind::Quotient, true) => &list[pos..],
        })
    }

    fn space_enumeration(&self, space: &EnumeratedSpace) -> Check {
        let mut c = Check::new("space_enumeration");
        let expected = space_dimension(self.n, self.d as u64);
        c.expect(big(space.len()) == expected, || {
            format!("listed {} monomials, expected {expected}", space.len())
        });
        for w in self.list.windows(2) {
            c.expect(
                w[0].lex_cmp(&w[1]) == Ok(std::cmp::Ordering::Greater),
                || format!("{} not lex-larger than {}", show(&w[0]), show(&w[1])),
            );
        }
        let first = Monomial::power(1, self.d, self.n);
        c.expect(self.list.first() == Some(&first), || {
            "first entry is not x1^d".into()
        });
        c
    }

    fn lex_total_order(&self) -> Check {
        use std::cmp::Ordering::*;
        let mut c = Check::new("lex_total_order");
        for (i, a) in self.list.iter().enumerate() {
            c.expect(a.lex_cmp(a) == Ok(Equal), || {
                format!("{} != itself", show(a))
            });
            for b in &self.list[i + 1..] {
                let forward = a.lex_cmp(b);
                let backward = b.lex_cmp(a);
                c.expect(forward == Ok(Greater) && backward == Ok(Less), || {
                    format!("{} vs {}: {forward:?}/{backward:?}", show(a), show(b))
                });
            }
        }
        c
    }

    fn factorization_roundtrip(&self) -> Check {
        let mut c = Check::new("factorization_roundtrip");
        for m in self.list {
            let f = m.standard_factorization();
            let sorted = f.windows(2).all(|w| w[0] <= w[1]);
            let back = Monomial::from_factorization(&f, self.n);
            c.expect(
                sorted && f.len() == self.d as usize && back.as_ref() == Ok(m),
                || format!("{} -> {f:?}", show(m)),
            );
        }
        c
    }

    fn tails(&self) -> Check {
        let mut c = Check::new("tails");
        for m in self.list {
            c.run(show(m), |c| {
                for i in 0..self.n {
                    let t = m.coarse_tail(i)?;
                    let ok = (1..=self.n)
                        .all(|k| t.exponent(k) == if k <= i { 0 } else { m.exponent(k) });
                    c.expect(ok, || format!("ct_{i}({}) = {}", show(m), show(&t)));
                }
                let f = m.standard_factorization();
                for i in 0..=self.d as usize {
                    let t = m.fine_tail(i)?;
                    let direct = Monomial::from_factorization(&f[i..], self.n)?;
                    c.expect(
                        t == direct && t.degree() as usize == self.d as usize - i,
                        || format!("ft_{i}({}) = {}", show(m), show(&t)),
                    );
                }
                Ok(())
            });
        }
        c
    }

    fn shifts(&self) -> Check {
        let mut c = Check::new("shift");
        for m in self.list {
            c.run(show(m), |c| {
                for s in 0..=2 {
                    let t = m.shift(s);
                    let ok = t.n() == self.n + s
                        && t.degree() == m.degree()
                        && t.min_index()? == m.min_index()? + s
                        && t.max_index()? == m.max_index()? + s;
                    c.expect(ok, || format!("sigma_{s}({}) = {}", show(m), show(&t)));
                }
                Ok(())
            });
        }
        c
    }

    fn predecessor_adjacency(&self) -> Check {
        let mut c = Check::new("predecessor_adjacency");
        c.expect(
            matches!(self.list[0].predecessor(), Err(Error::NoPredecessor(_))),
            || "x1^d has a predecessor".into(),
        );
        for w in self.list.windows(2) {
            let p = w[1].predecessor();
            c.expect(p.as_ref() == Ok(&w[0]), || {
                format!("pred({}) = {p:?}, expected {}", show(&w[1]), show(&w[0]))
            });
        }
        c
    }

    fn segment_dimension(&self) -> Check {
        let mut c = Check::new("segment_dimension");
        for m in self.list {
            for kind in [SegmentKind::Ideal, SegmentKind::Quotient] {
                for inclusive in [false, true] {
                    c.run(show(m), |c| {
                        let seg = SegmentSpec::new(kind, inclusive, m.clone())?;
                        let counted = enumerate_segment(&seg)?.len();
                        let formula = segment_dimension(&seg);
                        c.expect(formula == big(counted), || {
                            format!("{seg}: formula {formula}, enumerated {counted}")
                        });
                        Ok(())
                    });
                }
            }
        }
        c
    }

    fn graded_piece_partition(&self) -> Check {
        let mut c = Check::new("graded_piece_partition");
        for m in self.list {
            c.run(show(m), |c| {
                let i = segment_dimension(&SegmentSpec::ideal(m.clone())?);
                let q = segment_dimension(&SegmentSpec::quotient(m.clone())?);
                c.expect(&i + &q + 1u32 == big(self.total()), || {
                    format!("{} : {i} + {q} + 1 != {}", show(m), self.total())
                });
                Ok(())
            });
        }
        c
    }

    fn decomposition_partition(&self) -> Check {
        let mut c = Check::new("decomposition_partition");
        for m in self.list {
            for kind in [SegmentKind::Ideal, SegmentKind::Quotient] {
                c.run(show(m), |c| {
                    let seg = SegmentSpec::new(kind, false, m.clone())?;
                    check_decomposition(c, &seg, self.slice(&seg)?)
                });
            }
        }
        c
    }

    fn decomposition_monotonicity(&self) -> Check {
        let mut c = Check::new("decomposition_monotonicity");
        for m in self.list {
            c.run(show(m), |c| {
                let ideal = decompose(&SegmentSpec::ideal(m.clone())?)?;
                let degrees = ideal.degrees();
                c.expect(degrees.windows(2).all(|w| w[0] >= w[1]), || {
                    format!("I({}) degrees {degrees:?}", show(m))
                });
                let quotient = decompose(&SegmentSpec::quotient(m.clone())?)?;
                let los: Vec<usize> = quotient.summands.iter().map(|s| s.window.lo()).collect();
                c.expect(los.windows(2).all(|w| w[0] <= w[1]), || {
                    format!("Q({}) window starts {los:?}", show(m))
                });
                Ok(())
            });
        }
        c
    }

    fn splitting_agreement(&self) -> Check {
        let mut c = Check::new("splitting_agreement");
        for m in self.list {
            for kind in [SegmentKind::Ideal, SegmentKind::Quotient] {
                c.run(show(m), |c| {
                    let seg = SegmentSpec::new(kind, false, m.clone())?;
                    let iterated = decompose_by_splitting(&seg)?;
                    let closed = decompose(&seg)?.summands;
                    c.expect(iterated == closed, || {
                        format!("{seg}: split {iterated:?} vs closed form {closed:?}")
                    });
                    Ok(())
                });
            }
        }
        c
    }

    fn windowed_segments(&self) -> Check {
        let mut c = Check::new("windowed_segments");
        for m in self.list {
            c.run(show(m), |c| {
                let low = m.min_index()?;
                // the full window is covered by the other checks
                for lo in 2..=low {
                    let window = VariableWindow::new(lo, self.n)?;
                    for kind in [SegmentKind::Ideal, SegmentKind::Quotient] {
                        let seg = SegmentSpec::with_window(kind, false, m.clone(), window)?;
                        let listed = enumerate_segment(&seg)?;
                        c.expect(segment_dimension(&seg) == big(listed.len()), || {
                            format!("{seg}: dimension disagrees with {}", listed.len())
                        });
                        check_decomposition(c, &seg, &listed)?;
                        if kind == SegmentKind::Quotient {
                            let reduced = reduce_window(&seg)?;
                            let same = enumerate_segment(&reduced)? == listed;
                            c.expect(same && reduced.window().lo() == low, || {
                                format!("{seg}: reduce_window gave {reduced}")
                            });
                        }
                    }
                }
                Ok(())
            });
        }
        c
    }

    fn span(&self, k: usize, complement: bool) -> SpanSet<'_> {
        let size = self.spans.sizes[k];
        SpanSet {
            spans: &self.spans,
            k,
            complement,
            size: if complement {
                self.next.len() - size
            } else {
                size
            },
        }
    }

    /// `(segment, oracle set of the multiplied segment)` for the four
    /// segment types at position `k`.
    fn multiplied_oracle(&self, k: usize) -> Result<Vec<(SegmentSpec, SpanSet<'_>)>> {
        let m = &self.list[k];
        Ok(vec![
            (
                SegmentSpec::new(SegmentKind::Ideal, false, m.clone())?,
                self.span(k, false),
            ),
            (
                SegmentSpec::new(SegmentKind::Ideal, true, m.clone())?,
                self.span(k + 1, false),
            ),
            // Q(m) is cut out by L = Ibar(m), Qbar(m) by L = I(m)
            (
                SegmentSpec::new(SegmentKind::Quotient, false, m.clone())?,
                self.span(k + 1, true),
            ),
            (
                SegmentSpec::new(SegmentKind::Quotient, true, m.clone())?,
                self.span(k, true),
            ),
        ])
    }

    fn multiplication_agreement(&self) -> Check {
        let mut c = Check::new("multiplication_agreement");
        // the prefix spans against the literal products, at about 40 places
        let stride = (self.total() / 40).max(1);
        for k in (0..=self.total()).step_by(stride) {
            c.run(format!("prefix {k}"), |c| {
                let literal = span_multiply(&self.list[..k])?;
                c.expect(self.span(k, false).equals(&literal), || {
                    format!("span of the first {k} monomials")
                });
                Ok(())
            });
        }
        for k in 0..self.total() {
            c.run(show(&self.list[k]), |c| {
                for (seg, oracle) in self.multiplied_oracle(k)? {
                    let product = multiply_segment(&seg)?;
                    let listed = self.slice(&product)?;
                    c.expect(oracle.equals(listed), || {
                        format!(
                            "{seg}: S_1 gives {} generators, rule gives {product}",
                            oracle.size
                        )
                    });
                }
                Ok(())
            });
        }
        c
    }

    fn multiply_decomposition(&self) -> Check {
        let mut c = Check::new("multiply_decomposition");
        for k in 0..self.total() {
            c.run(show(&self.list[k]), |c| {
                for (seg, oracle) in self.multiplied_oracle(k)? {
                    if seg.inclusive() {
                        continue;
                    }
                    let lifted = multiply_decomposition(&decompose(&seg)?);
                    let expected = segment_dimension(&multiply_segment(&seg)?);
                    c.expect(lifted.dimension() == expected, || {
                        format!("{seg}: lifted {} vs {expected}", lifted.dimension())
                    });
                    c.expect(oracle.equals(&materialize(&lifted)?), || {
                        format!("{seg}: lifted decomposition generators differ from S_1 span")
                    });
                }
                Ok(())
            });
        }
        c
    }

    fn growth_tightness(&self) -> Check {
        let mut c = Check::new("growth_tightness");
        for k in 0..self.total() {
            c.run(show(&self.list[k]), |c| {
                // I(m) has k generators, Ibar(m) has k + 1
                for size in [k, k + 1] {
                    let span = self.spans.sizes[size];
                    if self.n >= 2 {
                        let bound = ideal_growth_bound(&big(size), self.n)?;
                        c.expect(bound == big(span), || {
                            format!("ideal of size {size}: bound {bound}, span {span}")
                        });
                    }
                    let q = self.total() - size;
                    let bound = quotient_growth_bound(&big(q), self.d as usize)?;
                    let actual = self.next.len() - span;
                    c.expect(bound == big(actual), || {
                        format!("quotient of size {q}: bound {bound}, actual {actual}")
                    });
                }
                Ok(())
            });
        }
        c
    }

    fn coefficient_dimension(&self) -> Check {
        let mut c = Check::new("coefficient_dimension");
        for (k, m) in self.list.iter().enumerate() {
            c.run(show(m), |c| {
                let s = ideal_coefficients(m)?;
                let t = quotient_coefficients(m)?;
                c.expect(s.len() == self.n - 1 && s.eval() == big(k), || {
                    format!("{}: ideal coefficients {s} vs {k} predecessors", show(m))
                });
                let after = self.total() - k - 1;
                c.expect(t.len() == self.d as usize && t.eval() == big(after), || {
                    format!(
                        "{}: quotient coefficients {t} vs {after} successors",
                        show(m)
                    )
                });
                // greedy and tail-derived coefficients must coincide
                if self.n >= 2 {
                    c.expect(macaulay_rep(&big(k), self.n - 1)? == s, || {
                        format!("{}: greedy rep of {k} differs from {s}", show(m))
                    });
                }
                c.expect(macaulay_rep(&big(after), self.d as usize)? == t, || {
                    format!("{}: greedy rep of {after} differs from {t}", show(m))
                });
                Ok(())
            });
        }
        c
    }

    fn partition_theorem(&self) -> Check {
        let mut c = Check::new("partition_theorem");
        let top = (self.n + self.d as usize - 2) as u64;
        let universe: Vec<u64> = (0..=top).collect();
        for m in self.list {
            c.run(show(m), |c| {
                let sets = coefficient_sets(m)?;
                let mut union: Vec<u64> = sets
                    .ideal()
                    .iter()
                    .chain(sets.quotient())
                    .copied()
                    .collect();
                union.sort_unstable();
                c.expect(union == universe, || format!("{}: {sets}", show(m)));
                Ok(())
            });
        }
        c
    }

    fn bijection(&self) -> Check {
        let mut c = Check::new("bijection");
        let top = (self.n + self.d as usize - 2) as u64;
        let subsets: BTreeSet<Vec<u64>> = (0..=top).rev().combinations(self.n - 1).collect();
        c.expect(subsets.len() == self.total(), || {
            format!("{} subsets vs {} monomials", subsets.len(), self.total())
        });
        let mut images = BTreeSet::new();
        for m in self.list {
            c.run(show(m), |c| {
                let s = ideal_coefficients(m)?.coefficients().to_vec();
                c.expect(images.insert(s.clone()), || {
                    format!("{}: repeated set {s:?}", show(m))
                });
                Ok(())
            });
        }
        c.expect(images == subsets, || {
            "image is not all (n-1)-subsets".into()
        });
        c
    }

    fn reconstruction_roundtrip(&self) -> Check {
        let mut c = Check::new("reconstruction_roundtrip");
        let p = (self.n + self.d as usize - 2) as u64;
        for m in self.list {
            c.run(show(m), |c| {
                if self.n >= 2 {
                    let s = ideal_coefficients(m)?;
                    let back = reconstruct_from_ideal_set(s.coefficients(), p)?;
                    c.expect(&back == m, || {
                        format!("{} -> S -> {}", show(m), show(&back))
                    });
                    let t = quotient_coefficients(m)?;
                    let back = reconstruct_from_quotient_set(t.coefficients(), p)?;
                    c.expect(&back == m, || {
                        format!("{} -> T -> {}", show(m), show(&back))
                    });
                }
                Ok(())
            });
        }
        c
    }

    fn rank_unrank(&self) -> Check {
        let mut c = Check::new("rank_unrank");
        for (k, m) in self.list.iter().enumerate() {
            c.run(show(m), |c| {
                let q = big(k + 1);
                let (r, r2) = (rank(m)?, rank_by_quotient(m)?);
                c.expect(r == q && r2 == q, || {
                    format!("{}: ranks {r}/{r2}, position {q}", show(m))
                });
                let back = unrank(&q, self.n, self.d)?;
                c.expect(&back == m, || format!("unrank({q}) = {}", show(&back)));
                Ok(())
            });
        }
        c
    }

    fn shift_inheritance(&self) -> Check {
        let mut c = Check::new("shift_inheritance");
        for m in self.list {
            c.run(show(m), |c| {
                let report = shift_inheritance_check(m)?;
                c.expect(report.all_hold(), || {
                    format!("{}: {:?}", show(m), report.failures())
                });
                Ok(())
            });
        }
        c
    }

    fn hilbert_full_space(&self) -> Check {
        let mut c = Check::new("hilbert_full_space");
        c.run("full piece", |c| {
            let sample = MonomialIdealSample::new(self.n, self.d, self.list.to_vec())?;
            let (ideal, quotient) = hilbert_next(&sample)?;
            let expected = space_dimension(self.n, self.d as u64 + 1);
            c.expect(ideal == expected && quotient == BigCount::default(), || {
                format!("({ideal}, {quotient}) vs ({expected}, 0)")
            });
            Ok(())
        });
        c
    }

    fn growth_validity_random(&self, seed: u64, samples: usize) -> Check {
        let mut c = Check::new("growth_validity_random");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for round in 0..samples {
            c.run(format!("seed={seed} sample={round}"), |c| {
                let sample = MonomialIdealSample::random(self.n, self.d, &mut rng)?;
                let (ideal_next, quotient_next) = hilbert_next(&sample)?;
                let size = sample.generators.len();
                if self.n >= 2 {
                    let lower = ideal_growth_bound(&big(size), self.n)?;
                    c.expect(ideal_next >= lower, || {
                        format!("sample {round}: dim I_(d+1) = {ideal_next} < {lower}")
                    });
                }
                let upper = quotient_growth_bound(&big(self.total() - size), self.d as usize)?;
                c.expect(quotient_next <= upper, || {
                    format!("sample {round}: dim (S/I)_(d+1) = {quotient_next} > {upper}")
                });
                Ok(())
            });
        }
        c
    }
}

fn materialize(d: &Decomposition) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for s in &d.summands {
        out.extend(materialize_summand(s)?);
    }
    Ok(out)
}

/// Summand count, disjointness, coverage of the generators `segment`, and
/// per-summand dimensions.
fn check_decomposition(c: &mut Check, seg: &SegmentSpec, segment: &[Monomial]) -> Result<()> {
    let dec = decompose(seg)?;
    let expected_count = match seg.kind() {
        SegmentKind::Ideal => seg.n() - seg.window().lo(),
        SegmentKind::Quotient => seg.delta() as usize,
    };
    c.expect(dec.summands.len() == expected_count, || {
        format!(
            "{seg}: {} summands, expected {expected_count}",
            dec.summands.len()
        )
    });
    let mut parts = Vec::new();
    for s in &dec.summands {
        let listed = materialize_summand(s)?;
        c.expect(s.dimension() == big(listed.len()), || {
            format!("{seg}: summand {s} lists {}", listed.len())
        });
        parts.extend(listed);
    }
    let union = as_set(&parts);
    c.expect(union.len() == parts.len(), || {
        format!("{seg}: summands overlap")
    });
    c.expect(union == as_set(segment), || {
        format!("{seg}: summands do not cover the segment")
    });
    Ok(())
}

/// The decomposition obtained by repeatedly peeling off monomial spaces,
/// padded with the empty summands the closed form lists explicitly.
fn decompose_by_splitting(seg: &SegmentSpec) -> Result<Vec<Summand>> {
    let n = seg.n();
    let mut out = Vec::new();
    let mut prefix = Monomial::unit(n);
    let mut current = Some(seg.clone());
    while let Some(s) = current.take() {
        if s.kind() == SegmentKind::Ideal && s.window().lo() == n {
            // I_[n,n](x_n^e) is empty and has no summand of its own
            break;
        }
        let split = split_once(&s)?;
        out.push(Summand {
            prefix: prefix.mul(&split.space.prefix)?,
            ..split.space
        });
        if let Some((mult, rest)) = split.residual {
            prefix = prefix.mul(&mult)?;
            current = Some(rest);
        }
    }
    if seg.kind() == SegmentKind::Ideal {
        // every remaining coarse tail is 1: summand i is m x_i over [i, n] in degree -1
        let start = seg.window().lo() + out.len();
        for i in start..n {
            out.push(Summand {
                prefix: seg.monomial().mul_var(i),
                window: VariableWindow::new(i, n)?,
                degree: -1,
            });
        }
    }
    Ok(out)
}

/// Small exact binomial for the uniqueness search; saturates instead of
/// overflowing.
fn small_binom(a: u64, b: u64) -> u128 {
    if a < b {
        return 0;
    }
    let k = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((a - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Every strictly decreasing `(s_p, ..., s_1)` of nonnegative integers with
/// value at most `max_s`, found by exhaustive search. `found[s]` lists the
/// sequences evaluating to `s`.
pub fn all_representations(max_s: u64, p: usize) -> Vec<Vec<Vec<u64>>> {
    let mut found = vec![Vec::new(); max_s as usize + 1];
    let mut seq = Vec::with_capacity(p);
    search(p as u64, None, 0, max_s, &mut seq, &mut found);
    found
}

fn search(
    i: u64,
    above: Option<u64>,
    sum: u128,
    max_s: u64,
    seq: &mut Vec<u64>,
    found: &mut Vec<Vec<Vec<u64>>>,
) {
    if i == 0 {
        found[sum as usize].push(seq.clone());
        return;
    }
    // s_i >= i - 1 is forced by strict decrease down to s_1 >= 0
    let mut s = i - 1;
    loop {
        if above.is_some_and(|a| s >= a) {
            break;
        }
        let total = sum + small_binom(s, i);
        if total > max_s as u128 {
            break; // C(s, i) only grows with s
        }
        seq.push(s);
        search(i - 1, Some(s), total, max_s, seq, found);
        seq.pop();
        s += 1;
    }
}

fn check_uniqueness(max_s: u64, max_p: usize) -> CheckRecord {
    let mut c = Check::new("macaulay_uniqueness");
    for p in 1..=max_p {
        let found = all_representations(max_s, p);
        for (s, reps) in found.iter().enumerate() {
            c.run(format!("s={s} p={p}"), |c| {
                let greedy = macaulay_rep(&big(s), p)?;
                c.expect(reps.len() == 1 && reps[0] == greedy.coefficients(), || {
                    format!("s={s} p={p}: search found {reps:?}, greedy {greedy}")
                });
                Ok(())
            });
        }
    }
    c.finish(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cells() {
        let cells = SweepConfig::default().cells();
        assert_eq!(cells.len(), 31);
        assert_eq!(cells.first(), Some(&(1, 1)));
        assert_eq!(cells.last(), Some(&(6, 8)));
    }

    #[test]
    fn exhaustive_representation_search() {
        let found = all_representations(20, 3);
        assert!(found.iter().all(|reps| reps.len() == 1));
        assert_eq!(found[0], vec![vec![2, 1, 0]]);
        assert_eq!(found[11], vec![vec![5, 2, 0]]);
        assert_eq!(small_binom(10, 5), 252);
    }

    #[test]
    fn small_sweep_is_clean() {
        let config = SweepConfig {
            max_n: 3,
            max_delta: 3,
            extra_cells: vec![],
            samples_per_cell: 5,
            uniqueness_max_s: 50,
            uniqueness_max_p: 3,
            ..SweepConfig::default()
        };
        let report = sweep(&config);
        let failures: Vec<String> = report.failures().iter().map(|r| r.to_string()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        for r in &report.records {
            let total: usize = report
                .records_for(r.property)
                .iter()
                .map(|x| x.checked)
                .sum();
            assert!(total > 0, "{} never ran", r.property);
        }
    }

    #[test]
    fn record_format() {
        let r = CheckRecord {
            cell: Some((3, 2)),
            property: "bijection",
            ok: true,
            checked: 6,
            detail: "checked=6".into(),
        };
        assert_eq!(
            r.to_string(),
            "cell=(3,2) property=bijection status=ok detail=checked=6"
        );
    }
}
