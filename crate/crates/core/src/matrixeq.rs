//! The Conway–Coxeter matrix equation `Π [[a_i, -1], [1, 0]] = ±Id`.
//!
//! Products, continuants, Hirzebruch–Jung values, solution classes and a
//! pruned exhaustive search for positive solutions.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Error, Result};

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// The generator `[[x, -1], [1, 0]]`.
    pub fn factor(x: i64) -> Self {
        Mat2::new(x, -1, 1, 0)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `Some(+1)` for `Id`, `Some(-1)` for `-Id`, otherwise `None`.
    pub fn scalar_sign(&self) -> Option<i8> {
        if !self.b.is_zero() || !self.c.is_zero() || self.a != self.d {
            return None;
        }
        if self.a.is_one() {
            Some(1)
        } else if self.a == -BigInt::one() {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Product of the generators for `a_1, ..., a_N`, left to right.
pub fn cc_product(a: &[i64]) -> Result<Mat2> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty sequence".into()));
    }
    Ok(a.iter()
        .fold(Mat2::identity(), |acc, &x| acc.mul(&Mat2::factor(x))))
}

/// Length, total sum, `k` with `T = 3(N-2) - 6k`, and the sign of `±Id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionClass {
    pub len: usize,
    pub total: i64,
    pub k: i64,
    pub sign: i8,
}

/// Classifies `a` when its product is `±Id`.
pub fn is_cc_solution(a: &[i64]) -> Option<SolutionClass> {
    let sign = cc_product(a).ok()?.scalar_sign()?;
    let len = a.len();
    let total: i64 = a.iter().sum();
    let gap = 3 * (len as i64 - 2) - total;
    debug_assert_eq!(
        gap.rem_euclid(6),
        0,
        "total sum of a solution is 3(N-2) mod 6"
    );
    let k = gap.div_euclid(6);
    if a.iter().all(|&x| x > 0) {
        let expected = if k % 2 == 0 { -1 } else { 1 };
        assert_eq!(sign, expected, "positive solutions have sign (-1)^(k+1)");
    }
    Some(SolutionClass {
        len,
        total,
        k,
        sign,
    })
}

/// Euler's continuant `K_N(a_1, ..., a_N)`.
pub fn continuant(a: &[i64]) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for &x in a {
        let next = &cur * x - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Value of the continued fraction `a_1 - 1/(a_2 - 1/(... - 1/a_N))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HjValue {
    Finite(BigRational),
    Infinite,
}

impl fmt::Display for HjValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HjValue::Finite(q) => write!(f, "{q}"),
            HjValue::Infinite => write!(f, "inf"),
        }
    }
}

/// `K_N(a_1..a_N) / K_{N-1}(a_2..a_N)`, or the infinity marker.
pub fn hj_value(a: &[i64]) -> Result<HjValue> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty sequence".into()));
    }
    let num = continuant(a);
    let den = continuant(&a[1..]);
    if den.is_zero() {
        Ok(HjValue::Infinite)
    } else {
        Ok(HjValue::Finite(BigRational::new(num, den)))
    }
}

/// Default largest `N` accepted by [`enumerate_positive_solutions`].
pub const DEFAULT_SOLUTION_BOUND: usize = 11;

/// Largest `N` the search supports at all.
pub const MAX_SOLUTION_BOUND: usize = 14;

/// All positive solutions of length `N` for `3 <= N <= 11`.
pub fn enumerate_positive_solutions(len: usize) -> Result<BTreeSet<Vec<i64>>> {
    enumerate_positive_solutions_bounded(len, DEFAULT_SOLUTION_BOUND)
}

/// As [`enumerate_positive_solutions`] with an explicit bound on `N`.
///
/// Entries range over `1..=N-2`. A prefix is abandoned once the suffix
/// needed to reach `±Id` has an entry larger than any product of the
/// remaining factors can carry, or, for short suffixes, once that suffix
/// is missing from a precomputed table of all short products.
pub fn enumerate_positive_solutions_bounded(
    len: usize,
    bound: usize,
) -> Result<BTreeSet<Vec<i64>>> {
    if len < 3 {
        return Err(Error::InvalidArgument(format!("N = {len} is below 3")));
    }
    if bound > MAX_SOLUTION_BOUND {
        return Err(Error::InvalidArgument(format!(
            "bound {bound} exceeds the supported {MAX_SOLUTION_BOUND}"
        )));
    }
    if len > bound {
        return Err(Error::InvalidArgument(format!(
            "N = {len} exceeds the configured bound {bound}; the search grows like (N-2)^(N/2)"
        )));
    }
    let search = Search::new(len);
    let found: Vec<Vec<Vec<i64>>> = (1..=search.max_entry)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut prefix = vec![first];
            search.dfs(&mut prefix, M::factor(first), &mut out);
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Fixed-width 2×2 matrix used inside the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct M([i128; 4]);

impl M {
    fn factor(x: i64) -> M {
        M([x as i128, -1, 1, 0])
    }

    fn mul(self, o: M) -> M {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        M([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    /// Inverse of a determinant-one matrix.
    fn inverse(self) -> M {
        let [a, b, c, d] = self.0;
        M([d, -b, -c, a])
    }

    fn neg(self) -> M {
        M(self.0.map(|x| -x))
    }
}

struct Search {
    len: usize,
    max_entry: i64,
    /// `limits[j]` bounds the first-column entries of any product of `j` factors.
    limits: Vec<i128>,
    /// `tables[j]` holds every product of `j` factors, for `j <= table_depth`.
    tables: Vec<HashSet<M>>,
    table_depth: usize,
}

impl Search {
    fn new(len: usize) -> Self {
        let max_entry = len as i64 - 2;
        let b = max_entry as i128;
        let mut limits = vec![1i128, b];
        while limits.len() <= len {
            let j = limits.len();
            limits.push(b * limits[j - 1] + limits[j - 2]);
        }
        let mut table_depth = 0;
        let mut size: u64 = 1;
        while table_depth < len / 2 && size * (max_entry as u64) <= 2_000_000 {
            size *= max_entry as u64;
            table_depth += 1;
        }
        let mut tables = vec![HashSet::from([M([1, 0, 0, 1])])];
        for j in 1..=table_depth {
            let next: HashSet<M> = tables[j - 1]
                .iter()
                .flat_map(|&p| (1..=max_entry).map(move |x| p.mul(M::factor(x))))
                .collect();
            tables.push(next);
        }
        Search {
            len,
            max_entry,
            limits,
            tables,
            table_depth,
        }
    }

    /// Whether some product of `j` factors equals `±target`.
    fn reachable(&self, target: M, j: usize) -> bool {
        if j <= self.table_depth {
            return self.tables[j].contains(&target) || self.tables[j].contains(&target.neg());
        }
        let [a, b, c, d] = target.0;
        let first = self.limits[j];
        let second = self.limits[j - 1];
        a.abs() <= first && c.abs() <= first && b.abs() <= second && d.abs() <= second
    }

    fn dfs(&self, prefix: &mut Vec<i64>, product: M, out: &mut Vec<Vec<i64>>) {
        let rest = self.len - prefix.len();
        if !self.reachable(product.inverse(), rest) {
            return;
        }
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in 1..=self.max_entry {
            prefix.push(x);
            self.dfs(prefix, product.mul(M::factor(x)), out);
            prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let neg = Mat2::new(-1, 0, 0, -1);
        assert_eq!(cc_product(&[1, 1, 1]).unwrap(), neg);
        assert_eq!(cc_product(&[1, 3, 1, 2, 2]).unwrap(), neg);
        assert_eq!(cc_product(&[2]).unwrap(), Mat2::new(2, -1, 1, 0));
        assert!(cc_product(&[]).is_err());
    }

    #[test]
    fn solution_classes() {
        let c = is_cc_solution(&[1, 3, 1, 2, 2]).unwrap();
        assert_eq!((c.len, c.total, c.k, c.sign), (5, 9, 0, -1));
        let c = is_cc_solution(&[1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!((c.len, c.total, c.k, c.sign), (6, 6, 1, 1));
        assert_eq!(is_cc_solution(&[2, 2]), None);
        assert_eq!(cc_product(&[2, 2]).unwrap(), Mat2::new(3, -2, 2, -1));
    }

    #[test]
    fn continuants() {
        assert_eq!(continuant(&[]), BigInt::one());
        assert_eq!(continuant(&[7]), BigInt::from(7));
        assert_eq!(continuant(&[1, 1]), BigInt::zero());
        assert_eq!(continuant(&[2, 2, 2]), BigInt::from(4));
    }

    #[test]
    fn continued_fractions() {
        let q = |a: i64, b: i64| HjValue::Finite(BigRational::new(a.into(), b.into()));
        assert_eq!(hj_value(&[3]).unwrap(), q(3, 1));
        assert_eq!(hj_value(&[2, 2]).unwrap(), q(3, 2));
        assert_eq!(hj_value(&[1, 1]).unwrap(), q(0, 1));
        assert_eq!(hj_value(&[2, 0]).unwrap(), HjValue::Infinite);
    }

    #[test]
    fn small_solution_sets() {
        let s3 = enumerate_positive_solutions(3).unwrap();
        assert_eq!(s3.into_iter().collect::<Vec<_>>(), vec![vec![1, 1, 1]]);
        let s5 = enumerate_positive_solutions(5).unwrap();
        let mut rotations: Vec<Vec<i64>> = (0..5)
            .map(|r| {
                let base = [1, 3, 1, 2, 2];
                (0..5).map(|t| base[(t + r) % 5]).collect()
            })
            .collect();
        rotations.sort();
        assert_eq!(s5.into_iter().collect::<Vec<_>>(), rotations);
        assert_eq!(enumerate_positive_solutions(7).unwrap().len(), 49);
    }

    #[test]
    fn solution_search_rejects_out_of_range() {
        assert!(enumerate_positive_solutions(2).is_err());
        assert!(enumerate_positive_solutions(12).is_err());
        assert!(enumerate_positive_solutions_bounded(12, 20).is_err());
    }
}
