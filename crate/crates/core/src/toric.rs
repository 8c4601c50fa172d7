//! Complete regular fans in `ℤ²`, their blow-ups, and the blow-up census
//! starting from the fan of the projective plane.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::formulas::{catalan, q_nk};
use crate::matrixeq::is_cc_solution;
use crate::{Error, Result};

/// Largest number of blow-ups accepted by [`enumerate_blowups`].
pub const DEFAULT_BLOWUP_BOUND: usize = 6;

/// A cyclic integer sequence with a fixed basepoint, product `+Id` and
/// total `3N − 12`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FanSequence(Vec<i64>);

impl FanSequence {
    /// Validates the matrix product and total sum.
    pub fn new(a: Vec<i64>) -> Result<Self> {
        let n = a.len() as i64;
        match is_cc_solution(&a) {
            Some(c) if c.sign == 1 && c.total == 3 * n - 12 => Ok(FanSequence(a)),
            _ => Err(Error::InvalidArgument(format!(
                "{a:?} is not a fan sequence"
            ))),
        }
    }

    /// The fan of the projective plane, `(−1, −1, −1)`.
    pub fn projective_plane() -> Self {
        FanSequence(vec![-1, -1, -1])
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All cyclic rotations, starting with `self`.
    pub fn rotations(&self) -> impl Iterator<Item = FanSequence> + '_ {
        (0..self.0.len()).map(move |r| {
            let mut v = self.0.clone();
            v.rotate_left(r);
            FanSequence(v)
        })
    }
}

impl fmt::Display for FanSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lattice vector.
pub type Vector = (i64, i64);

fn det(u: Vector, v: Vector) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// 0 for angles in `[0, π)`, 1 for `[π, 2π)`.
fn half_plane(v: Vector) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// The rays `v_1, ..., v_N` of a fan with `v_1 = e_1`, `v_2 = e_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    vectors: Vec<Vector>,
}

impl Fan {
    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Number of full counterclockwise turns, assuming every consecutive
    /// pair turns by less than `π`.
    pub fn winding_number(&self) -> usize {
        let n = self.vectors.len();
        (0..n)
            .filter(|&i| {
                half_plane(self.vectors[i]) == 1 && half_plane(self.vectors[(i + 1) % n]) == 0
            })
            .count()
    }

    /// `a_i = det(v_{i−1}, v_{i+1})`.
    pub fn sequence(&self) -> Vec<i64> {
        let n = self.vectors.len();
        (0..n)
            .map(|i| det(self.vectors[(i + n - 1) % n], self.vectors[(i + 1) % n]))
            .collect()
    }

    /// Inserts `v_k + v_{k+1}` after `v_k`, with `k` 1-based and cyclic.
    pub fn blow_up(&self, k: usize) -> Fan {
        let n = self.vectors.len();
        assert!((1..=n).contains(&k), "position out of range");
        let (u, v) = (self.vectors[k - 1], self.vectors[k % n]);
        let mut vectors = self.vectors.clone();
        vectors.insert(k, (u.0 + v.0, u.1 + v.1));
        Fan { vectors }
    }
}

/// Builds the fan by `v_{i+1} = a_i v_i − v_{i−1}` from `e_1, e_2`, checking
/// closure, unimodularity and a single turn.
pub fn fan_from_sequence(a: &FanSequence) -> Result<Fan> {
    let a = a.values();
    let n = a.len();
    if n < 3 {
        return Err(Error::InvalidArgument(
            "a fan needs at least three rays".into(),
        ));
    }
    let mut v: Vec<Vector> = vec![(1, 0), (0, 1)];
    for i in 1..=n {
        let (p, q) = (v[i], v[i - 1]);
        let c = a[i % n];
        v.push((c * p.0 - q.0, c * p.1 - q.1));
    }
    if v[n] != v[0] || v[n + 1] != v[1] {
        return Err(Error::InvalidArgument(format!("{a:?} does not close up")));
    }
    v.truncate(n);
    let fan = Fan { vectors: v };
    if (0..n).any(|i| det(fan.vectors[i], fan.vectors[(i + 1) % n]) != 1) {
        return Err(Error::InvalidArgument(format!(
            "{a:?} has a non-unimodular cone"
        )));
    }
    if fan.winding_number() != 1 {
        return Err(Error::InvalidArgument(format!(
            "{a:?} winds {} times",
            fan.winding_number()
        )));
    }
    Ok(fan)
}

/// `(…, a_k, a_{k+1}, …) ↦ (…, a_k+1, 1, a_{k+1}+1, …)` for 1-based cyclic `k`.
pub fn fan_blow_up(a: &FanSequence, k: usize) -> FanSequence {
    let mut v = a.0.clone();
    let n = v.len();
    assert!((1..=n).contains(&k), "position out of range");
    v[k - 1] += 1;
    v[k % n] += 1;
    v.insert(k, 1);
    FanSequence(v)
}

/// Inserts `−1` before index `gap` (0-based, `0..=N`), lowering both
/// cyclic neighbors by one.
pub fn negative_blow_up(a: &[i64], gap: usize) -> Vec<i64> {
    let n = a.len();
    assert!(gap <= n && n > 0, "gap out of range");
    let mut v = a.to_vec();
    v[(gap + n - 1) % n] -= 1;
    v[gap % n] -= 1;
    v.insert(gap, -1);
    v
}

/// Removes the `−1` at index `k`, raising both cyclic neighbors by one.
pub fn dual_contract(a: &[i64], k: usize) -> Result<Vec<i64>> {
    let n = a.len();
    if k >= n || a[k] != -1 || n < 3 {
        return Err(Error::InvalidArgument(format!(
            "no -1 at position {k} of {a:?}"
        )));
    }
    let mut v = a.to_vec();
    v[(k + n - 1) % n] += 1;
    v[(k + 1) % n] += 1;
    v.remove(k);
    Ok(v)
}

/// Every sequence reachable from `(−1, −1, −1)` by `n` blow-ups, with
/// rotations counted separately.
pub fn enumerate_blowups(n: usize) -> Result<BTreeSet<FanSequence>> {
    enumerate_blowups_bounded(n, DEFAULT_BLOWUP_BOUND)
}

/// [`enumerate_blowups`] with an explicit bound on `n`.
pub fn enumerate_blowups_bounded(n: usize, bound: usize) -> Result<BTreeSet<FanSequence>> {
    if n > bound {
        return Err(Error::InvalidArgument(format!(
            "{n} blow-ups exceed the bound {bound}"
        )));
    }
    let mut frontier: Vec<FanSequence> = vec![FanSequence::projective_plane()];
    for _ in 0..n {
        let next: HashSet<FanSequence> = frontier
            .par_iter()
            .flat_map_iter(|a| {
                (1..=a.len()).flat_map(move |k| {
                    let b = fan_blow_up(a, k);
                    b.rotations().collect::<Vec<_>>()
                })
            })
            .collect();
        frontier = next.into_iter().collect();
    }
    Ok(frontier.into_iter().collect())
}

/// The four shapes of an iterated blow-up of the projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FanType {
    /// All entries positive.
    A,
    /// One `−1` with non-negative neighbors, all else positive.
    B,
    /// Two adjacent zeros, all else positive.
    C,
    /// A single zero, all else positive.
    D,
}

impl fmt::Display for FanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FanType::A => "a",
            FanType::B => "b",
            FanType::C => "c",
            FanType::D => "d",
        };
        f.write_str(s)
    }
}

/// Classifies a sequence, rejecting anything outside the four shapes.
pub fn classify_type(a: &FanSequence) -> Result<FanType> {
    let v = a.values();
    let n = v.len();
    let reject = || {
        Error::InvalidArgument(format!(
            "{a} is not an iterated blow-up of the projective plane"
        ))
    };
    if n < 4 {
        return Err(reject());
    }
    if v.iter().all(|&x| x > 0) {
        return Ok(FanType::A);
    }
    let minus: Vec<usize> = (0..n).filter(|&i| v[i] == -1).collect();
    if let [k] = minus[..] {
        let (prev, next) = ((k + n - 1) % n, (k + 1) % n);
        let ok = (0..n).all(|i| match i {
            _ if i == k => true,
            _ if i == prev || i == next => v[i] >= 0,
            _ => v[i] > 0,
        });
        return if ok { Ok(FanType::B) } else { Err(reject()) };
    }
    if v.iter().any(|&x| x < 0) {
        return Err(reject());
    }
    let zeros: Vec<usize> = (0..n).filter(|&i| v[i] == 0).collect();
    match zeros[..] {
        [_] => Ok(FanType::D),
        [i, j] if j == i + 1 || (i == 0 && j == n - 1) => Ok(FanType::C),
        _ => Err(reject()),
    }
}

/// Per-type counts predicted for `n` blow-ups, in the order a, b, c, d.
pub fn expected_type_counts(n: usize) -> [BigInt; 4] {
    let big_n = BigInt::from(n + 3);
    let zero = BigInt::from(0);
    let a = if n >= 1 { q_nk(n + 1, 1) } else { zero.clone() };
    let b = if n >= 1 {
        &big_n * catalan(n)
    } else {
        zero.clone()
    };
    let c = if n >= 2 {
        &big_n * catalan(n - 1)
    } else {
        zero.clone()
    };
    let d = if n >= 3 {
        &big_n * (catalan(n) - 2 * catalan(n - 1))
    } else {
        zero
    };
    [a, b, c, d]
}

/// Observed per-type counts of a set of sequences, in the order a, b, c, d.
pub fn type_census<'a>(seqs: impl IntoIterator<Item = &'a FanSequence>) -> Result<[usize; 4]> {
    let mut counts = [0usize; 4];
    for a in seqs {
        counts[classify_type(a)? as usize] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> FanSequence {
        FanSequence::new(v.to_vec()).expect("valid fan sequence")
    }

    #[test]
    fn example_fans() {
        assert_eq!(
            fan_from_sequence(&seq(&[-1, -1, -1]))
                .expect("fan")
                .vectors(),
            &[(1, 0), (0, 1), (-1, -1)]
        );
        assert_eq!(
            fan_from_sequence(&seq(&[2, 0, -2, 0]))
                .expect("fan")
                .vectors(),
            &[(1, 0), (0, 1), (-1, 0), (2, -1)]
        );
        let hex = fan_from_sequence(&seq(&[1; 6])).expect("fan");
        assert_eq!(
            hex.vectors(),
            &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
        );
    }

    #[test]
    fn rejects_non_fans() {
        assert!(FanSequence::new(vec![1, 1, 1]).is_err());
        assert!(FanSequence::new(vec![2, 2, 2, 2]).is_err());
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(
            fan_blow_up(&FanSequence::projective_plane(), 1).values(),
            &[0, 1, 0, -1]
        );
        for k in 1..=6 {
            let b = fan_blow_up(&seq(&[1; 6]), k);
            let v = b.values();
            assert!((0..v.len())
                .any(|i| v[i] == 2 && v[(i + 1) % v.len()] == 1 && v[(i + 2) % v.len()] == 2));
            assert!(FanSequence::new(v.to_vec()).is_ok());
        }
    }

    #[test]
    fn small_censuses() {
        let one: Vec<_> = enumerate_blowups(1).expect("n = 1").into_iter().collect();
        assert_eq!(
            one,
            vec![
                seq(&[-1, 0, 1, 0]),
                seq(&[0, -1, 0, 1]),
                seq(&[0, 1, 0, -1]),
                seq(&[1, 0, -1, 0])
            ]
        );
        assert_eq!(enumerate_blowups(2).expect("n = 2").len(), 15);
        assert!(enumerate_blowups(7).is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_type(&seq(&[1; 6])).ok(), Some(FanType::A));
        assert_eq!(classify_type(&seq(&[0, 0, 1, 1, 1])).ok(), Some(FanType::C));
        assert_eq!(
            classify_type(&seq(&[0, 1, 1, 2, 1, 1])).ok(),
            Some(FanType::D)
        );
        assert_eq!(classify_type(&seq(&[-1, 0, 1, 0])).ok(), Some(FanType::B));
        assert!(classify_type(&FanSequence::projective_plane()).is_err());
    }

    #[test]
    fn negative_blow_up_round_trip() {
        let a = [5, 1, 2, 2, 2, 2, 1];
        for gap in 0..=a.len() {
            let b = negative_blow_up(&a, gap);
            assert!(FanSequence::new(b.clone()).is_ok());
            assert_eq!(dual_contract(&b, gap).expect("contract"), a);
        }
    }
}
