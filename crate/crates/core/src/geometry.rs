//! Labeled convex polygons, dissections, cells, quiddities and multi-indices.
//!
//! A [`Dissection`] of the `(n+2)`-gon is a set of pairwise non-crossing
//! chords. Cells are extracted by splitting along the chords of the cell
//! that contains the base edge `(n+1, 0)` and recursing into the attached
//! sub-polygons.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// A diagonal `(i, j)` with `i < j`, stored in normalized order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
}

impl Chord {
    /// Builds a chord from its endpoints in either order.
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Chord { i: a, j: b }
        } else {
            Chord { i: b, j: a }
        }
    }

    /// True when the two chords cross in the open disk.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b, c, d) = (self.i, self.j, other.i, other.j);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A sub-polygon of a dissection, given by its strictly increasing vertices.
///
/// Side `s` joins `v_s` and `v_{s+1}`; the last side `(v_{r+1}, v_0)` is the
/// side facing the base edge (the base edge itself for the base cell).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    pub vertices: Vec<usize>,
}

impl Cell {
    /// Number of vertices `r + 2`.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Side `s` as an ordered pair of endpoints, `0 <= s <= r+1`.
    pub fn side(&self, s: usize) -> (usize, usize) {
        let k = self.vertices.len();
        (self.vertices[s], self.vertices[(s + 1) % k])
    }

    /// All sides in counterclockwise order, ending with the base-facing side.
    pub fn sides(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertices.len()).map(move |s| self.side(s))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, v) in self.vertices.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Per-vertex cell counts `(a_0, ..., a_{n+1})`, compared as labeled tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Quiddity(pub Vec<i64>);

impl Quiddity {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// The total sum `T`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, v) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Finitely supported `(m_1, m_2, ...)` where `m_r` counts `(r+2)`-cells.
///
/// Stored without trailing zeros so that equal multi-indices compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Builds `m̄` from `(m_1, m_2, ...)`.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        MultiIndex(parts)
    }

    /// The multi-index with a single nonzero entry `m_r = count`.
    pub fn unit(r: usize, count: usize) -> Self {
        assert!(r >= 1, "multi-index positions start at 1");
        let mut parts = vec![0; r];
        parts[r - 1] = count;
        MultiIndex::new(parts)
    }

    /// `m_r`, zero outside the support.
    pub fn get(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// `(m_1, ..., m_R)` with no trailing zeros.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `‖m̄‖ = Σ r·m_r`.
    pub fn norm(&self) -> usize {
        self.0.iter().enumerate().map(|(t, &m)| (t + 1) * m).sum()
    }

    /// `|m̄| = Σ m_r`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `m_r = 0` for every `r ≢ 1 (mod l)`.
    pub fn is_periodic(&self, l: usize) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(t, &m)| m == 0 || t % l == 0)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        let len = self.0.len().max(other.0.len());
        let parts = (0..len)
            .map(|t| self.0.get(t).copied().unwrap_or(0) + other.0.get(t).copied().unwrap_or(0))
            .collect();
        MultiIndex::new(parts)
    }

    /// All multi-indices with `‖m̄‖ = norm`, in a fixed order.
    pub fn with_norm(norm: usize) -> Vec<MultiIndex> {
        fn rec(rest: usize, max_r: usize, acc: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if rest == 0 {
                out.push(MultiIndex::new(acc.clone()));
                return;
            }
            for r in (1..=max_r.min(rest)).rev() {
                if acc.len() < r {
                    acc.resize(r, 0);
                }
                acc[r - 1] += 1;
                rec(rest - r, r, acc, out);
                acc[r - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        rec(norm, norm, &mut vec![0; norm], &mut out);
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, m) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// A validated dissection of the `(n+2)`-gon with vertices `0..=n+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Dissection {
    n: usize,
    chords: Vec<Chord>,
}

/// One cell of a decomposition together with its place in the cell tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CellNode {
    pub cell: Cell,
    pub parent: Option<usize>,
    pub level: usize,
}

impl Dissection {
    /// Validates and normalizes a chord list.
    pub fn new<I>(n: usize, chords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidDissection("n must be at least 1".into()));
        }
        let mut cs: Vec<Chord> = Vec::new();
        for (a, b) in chords {
            let c = Chord::new(a, b);
            check_chord(n, &c)?;
            cs.push(c);
        }
        cs.sort_unstable();
        if cs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDissection("repeated chord".into()));
        }
        for (t, c) in cs.iter().enumerate() {
            if let Some(e) = cs[t + 1..].iter().find(|e| c.crosses(e)) {
                return Err(Error::InvalidDissection(format!(
                    "chords {c} and {e} cross"
                )));
            }
        }
        Ok(Dissection { n, chords: cs })
    }

    /// The dissection with no chords.
    pub fn empty(n: usize) -> Result<Self> {
        Dissection::new(n, std::iter::empty())
    }

    /// Builds a dissection from chords already known to be valid.
    pub(crate) fn from_chords_unchecked(n: usize, mut chords: Vec<Chord>) -> Self {
        chords.sort_unstable();
        debug_assert!(validate(
            n,
            &chords.iter().map(|c| (c.i, c.j)).collect::<Vec<_>>()
        ));
        Dissection { n, chords }
    }

    /// Polygon size parameter; the polygon has `n + 2` vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polygon vertices `N = n + 2`.
    pub fn num_vertices(&self) -> usize {
        self.n + 2
    }

    /// Chords in lexicographic order.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Number of cells `m`.
    pub fn num_cells(&self) -> usize {
        self.chords.len() + 1
    }

    pub fn has_chord(&self, a: usize, b: usize) -> bool {
        self.chords.binary_search(&Chord::new(a, b)).is_ok()
    }

    /// True when `(a, b)` is a polygon edge (including the base edge).
    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        hi == lo + 1 || (lo == 0 && hi == self.n + 1)
    }

    /// Sorted chord partners of every vertex.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 2];
        for c in &self.chords {
            adj[c.i].push(c.j);
            adj[c.j].push(c.i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Cell tree in preorder: base cell first, children in side order.
    pub(crate) fn cell_tree(&self) -> Vec<CellNode> {
        let adj = self.adjacency();
        let mut out = Vec::with_capacity(self.num_cells());
        self.grow(&adj, 0, self.n + 1, None, 0, &mut out);
        out
    }

    fn grow(
        &self,
        adj: &[Vec<usize>],
        a: usize,
        b: usize,
        parent: Option<usize>,
        level: usize,
        out: &mut Vec<CellNode>,
    ) {
        let vertices = cell_on_side(adj, a, b);
        let id = out.len();
        let gaps: Vec<(usize, usize)> = vertices
            .windows(2)
            .filter(|w| w[1] - w[0] >= 2)
            .map(|w| (w[0], w[1]))
            .collect();
        out.push(CellNode {
            cell: Cell { vertices },
            parent,
            level,
        });
        for (x, y) in gaps {
            self.grow(adj, x, y, Some(id), level + 1, out);
        }
    }

    /// The `m` cells, base cell first.
    pub fn cells(&self) -> Vec<Cell> {
        self.cell_tree().into_iter().map(|node| node.cell).collect()
    }

    /// `a_i = 1 +` number of chords at vertex `i`.
    pub fn quiddity(&self) -> Quiddity {
        let mut q = vec![1i64; self.n + 2];
        for c in &self.chords {
            q[c.i] += 1;
            q[c.j] += 1;
        }
        Quiddity(q)
    }

    /// True when every cell has `3 + l·d` vertices.
    pub fn is_l_periodic(&self, l: usize) -> bool {
        assert!(l >= 1, "period must be positive");
        self.cells()
            .iter()
            .all(|c| c.size() >= 3 && (c.size() - 3) % l == 0)
    }

    /// Counts of cells by size: `m_r` is the number of `(r+2)`-cells.
    pub fn multi_index(&self) -> MultiIndex {
        let mut parts = vec![0usize; self.n];
        for c in self.cells() {
            parts[c.size() - 3] += 1;
        }
        MultiIndex::new(parts)
    }

    /// Canonical text form `n=<n>;chords=(i1,j1),(i2,j2),...`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

/// Vertices of the cell lying on the inner side of `(a, b)`, `a < b`.
fn cell_on_side(adj: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
    let mut vertices = vec![a];
    let mut cur = a;
    while cur != b {
        let mut next = cur + 1;
        for &x in adj[cur].iter().rev() {
            let allowed = if cur == a { x < b } else { x <= b };
            if x > cur && allowed {
                next = next.max(x);
                break;
            }
        }
        vertices.push(next);
        cur = next;
    }
    vertices
}

fn check_chord(n: usize, c: &Chord) -> Result<()> {
    if c.j > n + 1 {
        return Err(Error::InvalidDissection(format!(
            "chord {c} leaves the {}-gon",
            n + 2
        )));
    }
    if c.j < c.i + 2 || (c.i == 0 && c.j == n + 1) {
        return Err(Error::InvalidDissection(format!(
            "{c} is a polygon edge or a point"
        )));
    }
    Ok(())
}

/// True when the chord list forms a valid dissection of the `(n+2)`-gon.
pub fn validate(n: usize, chords: &[(usize, usize)]) -> bool {
    Dissection::new(n, chords.iter().copied()).is_ok()
}

/// Free-function form of [`Dissection::cells`].
pub fn cells_of(d: &Dissection) -> Vec<Cell> {
    d.cells()
}

/// Free-function form of [`Dissection::quiddity`].
pub fn quiddity_of(d: &Dissection) -> Quiddity {
    d.quiddity()
}

/// Free-function form of [`Dissection::is_l_periodic`].
pub fn is_l_periodic(d: &Dissection, l: usize) -> bool {
    d.is_l_periodic(l)
}

/// Free-function form of [`Dissection::multi_index`].
pub fn multi_index_of(d: &Dissection) -> MultiIndex {
    d.multi_index()
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};chords=", self.n)?;
        for (t, c) in self.chords.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Dissection {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser {
            bytes: text.trim().as_bytes(),
            pos: 0,
        };
        p.expect("n=")?;
        let n = p.number()?;
        p.expect(";chords=")?;
        let mut chords = Vec::new();
        if !p.done() {
            loop {
                p.expect("(")?;
                let a = p.number()?;
                p.expect(",")?;
                let b = p.number()?;
                p.expect(")")?;
                chords.push((a, b));
                if p.done() {
                    break;
                }
                p.expect(",")?;
            }
        }
        Dissection::new(n, chords)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn done(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                column: start + 1,
                message: "integer too large".into(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(n: usize, chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let d = Dissection::new(n, chords.iter().copied()).unwrap();
        let mut out: Vec<Vec<usize>> = d.cells().into_iter().map(|c| c.vertices).collect();
        out.sort();
        out
    }

    #[test]
    fn validate_examples() {
        assert!(validate(3, &[]));
        assert!(validate(3, &[(0, 2), (2, 4)]));
        assert!(!validate(3, &[(0, 2), (1, 3)]));
        assert!(!validate(0, &[]));
        assert!(!validate(3, &[(0, 4)]));
        assert!(!validate(3, &[(1, 2)]));
        assert!(!validate(3, &[(0, 2), (2, 0)]));
    }

    #[test]
    fn cells_examples() {
        assert_eq!(cells(3, &[]), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(
            cells(3, &[(0, 2), (2, 4)]),
            vec![vec![0, 1, 2], vec![0, 2, 4], vec![2, 3, 4]]
        );
        assert_eq!(
            cells(6, &[(0, 2)]),
            vec![vec![0, 1, 2], vec![0, 2, 3, 4, 5, 6, 7]]
        );
    }

    #[test]
    fn base_cell_comes_first() {
        let d = Dissection::new(6, [(1, 3), (4, 6)]).unwrap();
        let tree = d.cell_tree();
        assert_eq!(tree[0].cell.vertices, vec![0, 1, 3, 4, 6, 7]);
        assert_eq!(tree[1].parent, Some(0));
        assert_eq!(tree[1].level, 1);
    }

    #[test]
    fn quiddity_examples() {
        assert_eq!(Dissection::empty(1).unwrap().quiddity().0, vec![1, 1, 1]);
        assert_eq!(
            Dissection::new(3, [(0, 2), (2, 4)]).unwrap().quiddity().0,
            vec![2, 1, 3, 1, 2]
        );
        assert_eq!(Dissection::empty(4).unwrap().quiddity().0, vec![1; 6]);
    }

    #[test]
    fn periodicity_examples() {
        assert!(Dissection::empty(4).unwrap().is_l_periodic(3));
        assert!(Dissection::new(3, [(0, 2), (2, 4)])
            .unwrap()
            .is_l_periodic(3));
        assert!(Dissection::new(2, [(0, 2)]).unwrap().is_l_periodic(3));
        assert!(!Dissection::empty(2).unwrap().is_l_periodic(3));
    }

    #[test]
    fn multi_index_examples() {
        let m = Dissection::new(3, [(0, 2), (2, 4)]).unwrap().multi_index();
        assert_eq!((m.parts(), m.norm(), m.size()), (&[3][..], 3, 3));
        let m = Dissection::empty(4).unwrap().multi_index();
        assert_eq!((m.parts(), m.norm(), m.size()), (&[0, 0, 0, 1][..], 4, 1));
        let m = Dissection::new(5, [(0, 2)]).unwrap().multi_index();
        assert_eq!((m.get(1), m.get(4), m.norm(), m.size()), (1, 1, 5, 2));
    }

    #[test]
    fn multi_indices_by_norm() {
        let counts: Vec<usize> = (0..9).map(|k| MultiIndex::with_norm(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(MultiIndex::with_norm(6).iter().all(|m| m.norm() == 6));
    }

    #[test]
    fn serialization_round_trip() {
        let d = Dissection::new(6, [(4, 6), (1, 3)]).unwrap();
        assert_eq!(d.serialize(), "n=6;chords=(1,3),(4,6)");
        assert_eq!(d.serialize().parse::<Dissection>().unwrap(), d);
        let e = Dissection::empty(2).unwrap();
        assert_eq!(e.serialize(), "n=2;chords=");
        assert_eq!("n=2;chords=".parse::<Dissection>().unwrap(), e);
    }

    #[test]
    fn parse_errors_report_columns() {
        match "n=3;chords=(0,2)x".parse::<Dissection>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 17),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "n=3;chords=(0,2),(1,3)".parse::<Dissection>(),
            Err(Error::InvalidDissection(_))
        ));
        assert!(matches!(
            "m=3".parse::<Dissection>(),
            Err(Error::Parse { column: 1, .. })
        ));
    }
}
