//! Exhaustive enumeration of dissections by base-cell recursion.
//!
//! The cell on the base edge `(n+1, 0)` is chosen first; every gap between
//! consecutive cell vertices becomes a chord whose inner side is filled
//! recursively. Choices are made in increasing vertex order, so output order
//! is deterministic.

use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::geometry::{Chord, Dissection, MultiIndex, Quiddity};
use crate::{Error, Result};

/// Counts of dissections (or quiddities) by number of cells `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub by_m: BTreeMap<usize, BigInt>,
}

impl CountTable {
    /// Count at `m`, zero when absent.
    pub fn get(&self, m: usize) -> BigInt {
        self.by_m.get(&m).cloned().unwrap_or_default()
    }

    /// Sum over all `m`.
    pub fn total(&self) -> BigInt {
        self.by_m.values().sum()
    }

    fn from_counts(n: usize, counts: BTreeMap<usize, u64>) -> Self {
        let by_m = counts
            .into_iter()
            .map(|(m, c)| (m, BigInt::from(c)))
            .collect();
        CountTable { n, by_m }
    }
}

/// Hooks driven by the recursive walk.
trait Visitor {
    /// Called when a cell is placed; returning `false` prunes the branch.
    fn enter(&mut self, _cell: &[usize]) -> bool {
        true
    }

    /// Undoes [`Visitor::enter`] for an accepted cell.
    fn leave(&mut self, _cell: &[usize]) {}

    /// Called once per complete dissection.
    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()>;
}

struct Walk<'a, P, V> {
    keep: &'a P,
    visitor: V,
    chords: Vec<Chord>,
    pending: Vec<(usize, usize)>,
}

impl<P: Fn(usize) -> bool, V: Visitor> Walk<'_, P, V> {
    fn step(&mut self) -> ControlFlow<()> {
        match self.pending.pop() {
            None => self.visitor.finish(&self.chords),
            Some((a, b)) => {
                let mut cell = vec![a];
                let flow = self.choose(b, &mut cell);
                self.pending.push((a, b));
                flow
            }
        }
    }

    /// Extends the partial cell `cell` (starting at `a`) toward `b`.
    fn choose(&mut self, b: usize, cell: &mut Vec<usize>) -> ControlFlow<()> {
        let last = *cell.last().expect("cell starts with a vertex");
        if cell.len() >= 2 {
            cell.push(b);
            let flow = self.close(cell);
            cell.pop();
            flow?;
        }
        for next in last + 1..b {
            cell.push(next);
            let flow = self.choose(b, cell);
            cell.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn close(&mut self, cell: &[usize]) -> ControlFlow<()> {
        if !(self.keep)(cell.len()) || !self.visitor.enter(cell) {
            return ControlFlow::Continue(());
        }
        let gaps: Vec<(usize, usize)> = cell
            .windows(2)
            .filter(|w| w[1] - w[0] >= 2)
            .map(|w| (w[0], w[1]))
            .collect();
        for &(x, y) in &gaps {
            self.chords.push(Chord::new(x, y));
        }
        for &gap in gaps.iter().rev() {
            self.pending.push(gap);
        }
        let flow = self.step();
        for _ in &gaps {
            self.pending.pop();
            self.chords.pop();
        }
        self.visitor.leave(cell);
        flow
    }
}

fn walk<P: Fn(usize) -> bool, V: Visitor>(n: usize, keep: &P, visitor: V) -> Result<V> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut w = Walk {
        keep,
        visitor,
        chords: Vec::new(),
        pending: vec![(0, n + 1)],
    };
    let _ = w.step();
    Ok(w.visitor)
}

struct Collect<F>(F, usize);

impl<F: FnMut(&Dissection)> Visitor for Collect<F> {
    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()> {
        (self.0)(&Dissection::from_chords_unchecked(self.1, chords.to_vec()));
        ControlFlow::Continue(())
    }
}

/// Calls `f` once for every dissection whose cell sizes all pass `keep`.
pub fn for_each_dissection<P, F>(n: usize, keep: P, f: F) -> Result<()>
where
    P: Fn(usize) -> bool,
    F: FnMut(&Dissection),
{
    walk(n, &keep, Collect(f, n)).map(|_| ())
}

/// All dissections whose cell sizes pass `keep`, in deterministic order.
pub fn enumerate_dissections<P: Fn(usize) -> bool>(n: usize, keep: P) -> Result<Vec<Dissection>> {
    let mut out = Vec::new();
    for_each_dissection(n, keep, |d| out.push(d.clone()))?;
    Ok(out)
}

/// Cell-size filter for `l`-periodic dissections: sizes `3 + l·d`.
pub fn periodic_filter(l: usize) -> impl Fn(usize) -> bool + Copy + Sync {
    assert!(l >= 1, "period must be positive");
    move |size| size >= 3 && (size - 3) % l == 0
}

/// All `l`-periodic dissections of the `(n+2)`-gon.
pub fn periodic_dissections(n: usize, l: usize) -> Result<Vec<Dissection>> {
    enumerate_dissections(n, periodic_filter(l))
}

struct CountCells(BTreeMap<usize, u64>);

impl Visitor for CountCells {
    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()> {
        *self.0.entry(chords.len() + 1).or_default() += 1;
        ControlFlow::Continue(())
    }
}

/// Number of `l`-periodic dissections by cell count.
pub fn count_dissections(n: usize, l: usize) -> Result<CountTable> {
    let counts = walk(n, &periodic_filter(l), CountCells(BTreeMap::new()))?;
    Ok(CountTable::from_counts(n, counts.0))
}

struct QuiddityKeys {
    n: usize,
    seen: HashSet<Vec<u8>>,
}

impl Visitor for QuiddityKeys {
    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()> {
        let mut q = vec![1u8; self.n + 2];
        for c in chords {
            q[c.i] += 1;
            q[c.j] += 1;
        }
        self.seen.insert(q);
        ControlFlow::Continue(())
    }
}

/// Number of distinct quiddities of `l`-periodic dissections by cell count.
///
/// Quiddities are compared as labeled tuples. Subtrees under different base
/// cells are walked in parallel and merged afterwards.
pub fn count_quiddities(n: usize, l: usize) -> Result<CountTable> {
    let keys = quiddity_set(n, l)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for q in keys {
        let total: usize = q.iter().map(|&x| x as usize).sum();
        *counts.entry((total - n) / 2).or_default() += 1;
    }
    Ok(CountTable::from_counts(n, counts))
}

/// Distinct quiddities (as byte tuples) of `l`-periodic dissections.
fn quiddity_set(n: usize, l: usize) -> Result<HashSet<Vec<u8>>> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let keep = periodic_filter(l);
    let base_cells = base_cell_choices(n, keep);
    let parts: Vec<HashSet<Vec<u8>>> = base_cells
        .par_iter()
        .map(|base| {
            let forced = ForcedBase {
                base: base.clone(),
                inner: QuiddityKeys {
                    n,
                    seen: HashSet::new(),
                },
                depth: 0,
            };
            walk(n, &keep, forced).expect("n checked above").inner.seen
        })
        .collect();
    let mut all = HashSet::new();
    for part in parts {
        all.extend(part);
    }
    Ok(all)
}

/// Every admissible vertex set of the base cell.
fn base_cell_choices<P: Fn(usize) -> bool>(n: usize, keep: P) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let interior: Vec<usize> = (1..=n).collect();
    for mask in 0u64..(1u64 << n) {
        let mut cell = vec![0];
        cell.extend(interior.iter().filter(|&&v| mask >> (v - 1) & 1 == 1));
        cell.push(n + 1);
        if keep(cell.len()) {
            out.push(cell);
        }
    }
    out
}

/// Restricts a walk to one fixed base cell.
struct ForcedBase<V> {
    base: Vec<usize>,
    inner: V,
    depth: usize,
}

impl<V: Visitor> Visitor for ForcedBase<V> {
    fn enter(&mut self, cell: &[usize]) -> bool {
        if self.depth == 0 && cell != self.base.as_slice() {
            return false;
        }
        if !self.inner.enter(cell) {
            return false;
        }
        self.depth += 1;
        true
    }

    fn leave(&mut self, cell: &[usize]) {
        self.depth -= 1;
        self.inner.leave(cell);
    }

    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()> {
        self.inner.finish(chords)
    }
}

/// Number of dissections with multi-index `m̄`.
pub fn count_multi_dissections(m: &MultiIndex) -> BigInt {
    let n = m.norm();
    if n == 0 {
        return BigInt::from(1);
    }
    let keep = |size: usize| m.get(size - 2) > 0;
    let mut count = 0u64;
    for_each_dissection(n, keep, |d| {
        if d.multi_index() == *m {
            count += 1;
        }
    })
    .expect("norm is positive");
    BigInt::from(count)
}

struct MatchQuiddity<'a> {
    target: &'a [i64],
    used: Vec<i64>,
    found: Option<Vec<Chord>>,
}

impl Visitor for MatchQuiddity<'_> {
    fn enter(&mut self, cell: &[usize]) -> bool {
        for &v in cell {
            self.used[v] += 1;
        }
        if cell.iter().any(|&v| self.used[v] > self.target[v]) {
            self.leave(cell);
            return false;
        }
        true
    }

    fn leave(&mut self, cell: &[usize]) {
        for &v in cell {
            self.used[v] -= 1;
        }
    }

    fn finish(&mut self, chords: &[Chord]) -> ControlFlow<()> {
        if self.used == self.target {
            self.found = Some(chords.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// Some `l`-periodic dissection whose quiddity is `q`, if one exists.
pub fn find_dissection_with_quiddity(q: &[i64], l: usize) -> Option<Dissection> {
    if q.len() < 3 || q.iter().any(|&x| x < 1) {
        return None;
    }
    let n = q.len() - 2;
    let visitor = MatchQuiddity {
        target: q,
        used: vec![0; n + 2],
        found: None,
    };
    let done = walk(n, &periodic_filter(l), visitor).ok()?;
    done.found
        .map(|chords| Dissection::from_chords_unchecked(n, chords))
}

/// `l`-periodic dissections grouped by quiddity.
pub fn quiddity_classes(n: usize, l: usize) -> Result<BTreeMap<Quiddity, Vec<Dissection>>> {
    let mut classes: BTreeMap<Quiddity, Vec<Dissection>> = BTreeMap::new();
    for_each_dissection(n, periodic_filter(l), |d| {
        classes.entry(d.quiddity()).or_default().push(d.clone())
    })?;
    Ok(classes)
}

/// Distinct quiddities of `l`-periodic dissections, as labeled tuples.
pub fn quiddities(n: usize, l: usize) -> Result<HashSet<Vec<i64>>> {
    Ok(quiddity_set(n, l)?
        .into_iter()
        .map(|q| q.into_iter().map(i64::from).collect())
        .collect())
}
