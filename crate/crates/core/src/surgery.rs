//! Levels, ℤ₃-indices, surgery, blow-up, expansion and canonicalization.
//!
//! Sides of a cell are numbered counterclockwise: side `s` is
//! `(v_s, v_{s+1})` and the last side `(v_{r+1}, v_0)` is its base side.
//! The base edge has index 0 and indices grow by one per side going
//! counterclockwise from each cell's base side, so side `s` of a cell with
//! base index `b` has index `b + s + 1 (mod 3)`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::geometry::{Cell, Chord, Dissection, Quiddity};
use crate::{Error, Result};

/// A cell together with its position in the cell tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexedCell {
    pub cell: Cell,
    pub level: usize,
    pub parent: Option<usize>,
    /// ℤ₃-index of the base side, which is also the index of the cell.
    pub base_index: u8,
}

impl IndexedCell {
    /// Position of the base side, `r + 1`.
    pub fn base_position(&self) -> usize {
        self.cell.size() - 1
    }

    /// ℤ₃-index of side `s`.
    pub fn side_index(&self, s: usize) -> u8 {
        ((self.base_index as usize + s + 1) % 3) as u8
    }
}

/// A 3-periodic dissection with levels, parents and ℤ₃-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedDissection {
    d: Dissection,
    cells: Vec<IndexedCell>,
}

impl IndexedDissection {
    pub fn dissection(&self) -> &Dissection {
        &self.d
    }

    /// Cells in preorder; the base cell is first.
    pub fn cells(&self) -> &[IndexedCell] {
        &self.cells
    }

    /// ℤ₃-index of every edge and chord, keyed by `(min, max)` endpoints.
    pub fn side_indices(&self) -> BTreeMap<(usize, usize), u8> {
        let mut out = BTreeMap::new();
        for c in &self.cells {
            for s in 0..c.cell.size() {
                let (x, y) = c.cell.side(s);
                let key = (x.min(y), x.max(y));
                let idx = c.side_index(s);
                let prev = out.insert(key, idx);
                debug_assert!(
                    prev.is_none() || prev == Some(idx),
                    "a chord gets one index from both cells"
                );
            }
        }
        out
    }

    /// Sum of the levels of all cells.
    pub fn level_sum(&self) -> usize {
        self.cells.iter().map(|c| c.level).sum()
    }

    fn is_chord_side(&self, cell: &IndexedCell, s: usize) -> bool {
        let (x, y) = cell.cell.side(s);
        !self.d.is_edge(x, y)
    }
}

/// Opening moves touch the cell's base side; closing moves do not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MoveKind {
    Opening,
    Closing,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Opening => "opening",
            MoveKind::Closing => "closing",
        })
    }
}

/// Surgery on sides `s < s2` of cell number `cell`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SurgeryMove {
    pub cell: usize,
    pub vertices: Vec<usize>,
    pub s: usize,
    pub s2: usize,
    pub kind: MoveKind,
}

impl fmt::Display for SurgeryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = Cell {
            vertices: self.vertices.clone(),
        };
        write!(
            f,
            "cell={} s={} s'={} kind={}",
            cell, self.s, self.s2, self.kind
        )
    }
}

/// True when sides `s < s2` of a cell with `size` sides have vertices
/// properly between them on both arcs.
pub fn are_distant(s: usize, s2: usize, size: usize) -> bool {
    s2 >= s + 3 && s + size >= s2 + 3
}

/// Computes levels, parents and ℤ₃-indices of a 3-periodic dissection.
pub fn index(d: &Dissection) -> Result<IndexedDissection> {
    if !d.is_l_periodic(3) {
        return Err(Error::NotThreePeriodic);
    }
    let tree = d.cell_tree();
    let mut cells: Vec<IndexedCell> = Vec::with_capacity(tree.len());
    for node in tree {
        let base_index = match node.parent {
            None => 0,
            Some(p) => {
                let parent: &IndexedCell = &cells[p];
                let a = node.cell.vertices[0];
                let b = *node.cell.vertices.last().expect("nonempty cell");
                let s = parent
                    .cell
                    .vertices
                    .iter()
                    .position(|&v| v == a)
                    .expect("child shares its base side");
                debug_assert_eq!(parent.cell.side(s), (a, b));
                parent.side_index(s)
            }
        };
        cells.push(IndexedCell {
            cell: node.cell,
            level: node.level,
            parent: node.parent,
            base_index,
        });
    }
    Ok(IndexedDissection {
        d: d.clone(),
        cells,
    })
}

/// All 3-periodic surgery moves: pairs of chord sides of equal index.
pub fn legal_moves(x: &IndexedDissection) -> Vec<SurgeryMove> {
    let mut out = Vec::new();
    for (id, c) in x.cells.iter().enumerate() {
        let size = c.cell.size();
        for s in 0..size {
            if !x.is_chord_side(c, s) {
                continue;
            }
            for s2 in (s + 3..size).step_by(3) {
                if !x.is_chord_side(c, s2) || !are_distant(s, s2, size) {
                    continue;
                }
                let kind = if s2 == c.base_position() {
                    MoveKind::Opening
                } else {
                    MoveKind::Closing
                };
                out.push(SurgeryMove {
                    cell: id,
                    vertices: c.cell.vertices.clone(),
                    s,
                    s2,
                    kind,
                });
            }
        }
    }
    out
}

/// Chords after replacing sides `s`, `s2` of `cell` by the other two sides
/// of their quadrilateral.
fn swapped_chords(d: &Dissection, cell: &Cell, s: usize, s2: usize) -> Vec<(usize, usize)> {
    let k = cell.size();
    let v = |t: usize| cell.vertices[t % k];
    let gone = [Chord::new(v(s), v(s + 1)), Chord::new(v(s2), v(s2 + 1))];
    let mut chords: Vec<(usize, usize)> = d
        .chords()
        .iter()
        .filter(|c| !gone.contains(c))
        .map(|c| (c.i, c.j))
        .collect();
    chords.push((v(s + 1), v(s2)));
    chords.push((v(s2 + 1), v(s)));
    chords
}

/// Applies a legal 3-periodic surgery move.
pub fn apply(x: &IndexedDissection, mv: &SurgeryMove) -> Result<IndexedDissection> {
    if !legal_moves(x).contains(mv) {
        return Err(Error::IllegalMove(mv.to_string()));
    }
    let cell = &x.cells[mv.cell].cell;
    let d = Dissection::new(x.d.n(), swapped_chords(&x.d, cell, mv.s, mv.s2))?;
    index(&d)
}

/// Surgery on any dissection: `vertices` must be a cell of `d` and sides
/// `s < s2` must be distant chords. The result need not be periodic.
pub fn raw_surgery(d: &Dissection, vertices: &[usize], s: usize, s2: usize) -> Result<Dissection> {
    let cell = d
        .cells()
        .into_iter()
        .find(|c| c.vertices == vertices)
        .ok_or_else(|| Error::IllegalMove(format!("{vertices:?} is not a cell")))?;
    let size = cell.size();
    if s2 >= size || !are_distant(s, s2, size) {
        return Err(Error::IllegalMove(format!(
            "sides {s} and {s2} are not distant"
        )));
    }
    for t in [s, s2] {
        let (a, b) = cell.side(t);
        if d.is_edge(a, b) {
            return Err(Error::IllegalMove(format!("side {t} is a polygon edge")));
        }
    }
    Dissection::new(d.n(), swapped_chords(d, &cell, s, s2))
}

/// True when no opening move exists: in every non-base cell, every
/// non-base side with the cell's index is a polygon edge.
pub fn is_maximally_open(x: &IndexedDissection) -> bool {
    x.cells.iter().skip(1).all(|c| open_cell(x, c))
}

fn open_cell(x: &IndexedDissection, c: &IndexedCell) -> bool {
    (0..c.base_position()).all(|s| c.side_index(s) != c.base_index || !x.is_chord_side(c, s))
}

/// True when the open-cell condition also holds in the base cell.
pub fn is_base_open(x: &IndexedDissection) -> Result<bool> {
    if !is_maximally_open(x) {
        return Err(Error::InvalidArgument(
            "base-openness is defined for maximally open dissections".into(),
        ));
    }
    Ok(open_cell(x, &x.cells[0]))
}

/// The unique maximally open dissection with the quiddity of `d`.
pub fn canonicalize(d: &Dissection) -> Result<Dissection> {
    canonicalize_with_trace(d).map(|(c, _)| c)
}

/// As [`canonicalize`], also returning the applied opening moves.
///
/// Openings on the deepest cells go first; ties are broken by lowest cell
/// number, then lowest side position.
pub fn canonicalize_with_trace(d: &Dissection) -> Result<(Dissection, Vec<SurgeryMove>)> {
    canonicalize_by(d, |x, openings| {
        (0..openings.len())
            .min_by_key(|&t| {
                let mv = &openings[t];
                (std::cmp::Reverse(x.cells[mv.cell].level), mv.cell, mv.s)
            })
            .expect("nonempty")
    })
}

/// Canonicalizes with a caller-supplied choice among available openings.
pub fn canonicalize_by<F>(d: &Dissection, mut choose: F) -> Result<(Dissection, Vec<SurgeryMove>)>
where
    F: FnMut(&IndexedDissection, &[SurgeryMove]) -> usize,
{
    let mut x = index(d)?;
    let mut trace = Vec::new();
    loop {
        let openings: Vec<SurgeryMove> = legal_moves(&x)
            .into_iter()
            .filter(|m| m.kind == MoveKind::Opening)
            .collect();
        if openings.is_empty() {
            return Ok((x.d, trace));
        }
        let mv = openings[choose(&x, &openings)].clone();
        let before = x.level_sum();
        x = apply(&x, &mv)?;
        debug_assert!(x.level_sum() < before, "openings lower the level sum");
        trace.push(mv);
    }
}

/// Attaches a triangle to edge `(i, i+1)`; `i = n+1` uses the base edge.
pub fn blow_up(d: &Dissection, i: usize) -> Result<Dissection> {
    let n = d.n();
    if i > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "edge {i} is outside the {}-gon",
            n + 2
        )));
    }
    let shift = |v: usize| if v <= i { v } else { v + 1 };
    let mut chords: Vec<(usize, usize)> = d
        .chords()
        .iter()
        .map(|c| (shift(c.i), shift(c.j)))
        .collect();
    chords.push(if i == n + 1 { (0, n + 1) } else { (i, i + 2) });
    Dissection::new(n + 1, chords)
}

/// Replaces vertex `i` by three new edges, splitting its chords so that the
/// new quiddity reads `(..., a', 1, 1, a'', ...)` at positions `i..=i+3`.
///
/// The `a' - 1` chords nearest the edge `(i-1, i)` stay at the first new
/// vertex; the rest move to the last.
pub fn expand(d: &Dissection, i: usize, split: (i64, i64)) -> Result<Dissection> {
    let n = d.n();
    let big_n = n + 2;
    if i >= big_n {
        return Err(Error::InvalidArgument(format!(
            "vertex {i} is outside the {big_n}-gon"
        )));
    }
    let a_i = d.quiddity().0[i];
    let (first, second) = split;
    if first < 1 || second < 1 || first + second != a_i + 1 {
        return Err(Error::InvalidArgument(format!(
            "split ({first},{second}) of a_{i} = {a_i} needs positive parts summing to {}",
            a_i + 1
        )));
    }
    let shift = |v: usize| if v < i { v } else { v + 3 };
    let mut at_i: Vec<usize> = Vec::new();
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for c in d.chords() {
        if c.i == i || c.j == i {
            at_i.push(if c.i == i { c.j } else { c.i });
        } else {
            chords.push((shift(c.i), shift(c.j)));
        }
    }
    at_i.sort_by_key(|&j| std::cmp::Reverse((j + big_n - i) % big_n));
    for (t, &j) in at_i.iter().enumerate() {
        let end = if (t as i64) < first - 1 { i } else { i + 3 };
        chords.push((end, shift(j)));
    }
    Dissection::new(n + 3, chords)
}

/// Quiddity rule for a blow-up at edge `(i, i+1)`.
pub fn blow_up_quiddity(q: &[i64], i: usize) -> Vec<i64> {
    let len = q.len();
    let mut out = q.to_vec();
    out[i] += 1;
    out[(i + 1) % len] += 1;
    out.insert(i + 1, 1);
    out
}

/// Quiddity rule for an expansion at vertex `i` with split `(a', a'')`.
pub fn expand_quiddity(q: &[i64], i: usize, split: (i64, i64)) -> Vec<i64> {
    let mut out = q[..i].to_vec();
    out.extend([split.0, 1, 1, split.1]);
    out.extend_from_slice(&q[i + 1..]);
    out
}

/// Whether `a` can be turned into `b` by raw surgeries, exploring at most
/// `limit` dissections. `None` means the limit was reached.
pub fn surgery_connected(a: &Dissection, b: &Dissection, limit: usize) -> Option<bool> {
    if a.n() != b.n() || a.quiddity() != b.quiddity() {
        return Some(false);
    }
    let mut seen: HashSet<Dissection> = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(d) = queue.pop_front() {
        if &d == b {
            return Some(true);
        }
        for cell in d.cells() {
            let size = cell.size();
            for s in 0..size {
                for s2 in s + 3..size {
                    if let Ok(next) = raw_surgery(&d, &cell.vertices, s, s2) {
                        if seen.insert(next.clone()) {
                            if seen.len() > limit {
                                return None;
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    Some(false)
}

/// Quiddities reachable from the triangle by blow-ups and expansions,
/// grouped by polygon size `N`, for `N <= max_len`.
pub fn reachable_quiddities(max_len: usize) -> BTreeMap<usize, BTreeSet<Quiddity>> {
    let mut out: BTreeMap<usize, BTreeSet<Quiddity>> = BTreeMap::new();
    let start = Dissection::empty(1).expect("triangle");
    let mut seen: HashSet<Dissection> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        out.entry(d.num_vertices())
            .or_default()
            .insert(d.quiddity());
        let mut next = Vec::new();
        if d.num_vertices() < max_len {
            for i in 0..d.num_vertices() {
                next.push(blow_up(&d, i).expect("edge in range"));
            }
        }
        if d.num_vertices() + 3 <= max_len {
            let q = d.quiddity().0;
            for (i, &a) in q.iter().enumerate() {
                for first in 1..=a {
                    next.push(expand(&d, i, (first, a + 1 - first)).expect("split in range"));
                }
            }
        }
        for e in next {
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diss(n: usize, chords: &[(usize, usize)]) -> Dissection {
        Dissection::new(n, chords.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_indices() {
        let x = index(&Dissection::empty(1).unwrap()).unwrap();
        assert_eq!(x.cells().len(), 1);
        assert_eq!(x.cells()[0].level, 0);
        let idx = x.side_indices();
        assert_eq!(idx[&(0, 1)], 1);
        assert_eq!(idx[&(1, 2)], 2);
        assert_eq!(idx[&(0, 2)], 0);
        assert!(legal_moves(&x).is_empty());
        assert!(is_maximally_open(&x));
        assert!(is_base_open(&x).unwrap());
    }

    #[test]
    fn octagon_with_two_triangles() {
        let x = index(&diss(6, &[(1, 3), (4, 6)])).unwrap();
        let idx = x.side_indices();
        assert_eq!(idx[&(1, 3)], 2);
        assert_eq!(idx[&(4, 6)], 1);
        assert_eq!(x.cells()[1].base_index, 2);
        assert_eq!(x.cells()[2].base_index, 1);
    }

    #[test]
    fn non_periodic_rejected() {
        assert_eq!(
            index(&Dissection::empty(2).unwrap()),
            Err(Error::NotThreePeriodic)
        );
    }

    #[test]
    fn pentagon_fan_has_no_moves() {
        assert!(legal_moves(&index(&diss(3, &[(0, 2), (2, 4)])).unwrap()).is_empty());
    }

    #[test]
    fn blow_up_shapes() {
        for i in 0..3 {
            let d = blow_up(&Dissection::empty(1).unwrap(), i).unwrap();
            assert_eq!(d.num_cells(), 2);
            assert_eq!(d.quiddity().0, blow_up_quiddity(&[1, 1, 1], i));
        }
        assert_eq!(
            blow_up(&Dissection::empty(1).unwrap(), 0)
                .unwrap()
                .quiddity()
                .0,
            vec![2, 1, 2, 1]
        );
        assert!(blow_up(&Dissection::empty(1).unwrap(), 3).is_err());
    }

    #[test]
    fn expansion_of_triangle() {
        for i in 0..3 {
            let d = expand(&Dissection::empty(1).unwrap(), i, (1, 1)).unwrap();
            assert_eq!(d, Dissection::empty(4).unwrap());
        }
        assert!(expand(&Dissection::empty(1).unwrap(), 0, (2, 1)).is_err());
    }

    #[test]
    fn expansion_splits_chords() {
        let d = diss(3, &[(0, 2), (2, 4)]);
        for (first, second) in [(1, 3), (2, 2), (3, 1)] {
            let e = expand(&d, 2, (first, second)).unwrap();
            assert_eq!(
                e.quiddity().0,
                expand_quiddity(&d.quiddity().0, 2, (first, second))
            );
            assert!(e.is_l_periodic(3));
        }
    }

    #[test]
    fn raw_surgery_can_break_periodicity() {
        let d = diss(9, &[(2, 4), (7, 9)]);
        assert!(d.is_l_periodic(3));
        let e = raw_surgery(&d, &[0, 1, 2, 4, 5, 6, 7, 9, 10], 2, 6).unwrap();
        assert_eq!(e.quiddity(), d.quiddity());
        assert!(!e.is_l_periodic(3));
    }
}
