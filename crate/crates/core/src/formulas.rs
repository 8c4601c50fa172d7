//! Closed-form coefficient formulas in exact arithmetic.
//!
//! Every division is checked for exactness; a remainder is a bug, never
//! something to round away. Out-of-domain arguments return zero.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::geometry::MultiIndex;

/// Rows of Pascal's triangle held by the shared table.
pub const DEFAULT_BINOMIAL_ROWS: usize = 512;

/// Memoized Pascal triangle up to a fixed row, immutable once built.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    /// Builds rows `0..=max_row`.
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        for n in 0..=max_row {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(BigInt::one());
                } else {
                    let prev = &rows[n - 1];
                    row.push(&prev[k - 1] + &prev[k]);
                }
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)` for integer `n` (negative allowed) and `k`.
    ///
    /// Zero for `k < 0` and for `0 <= n < k`; for `n < 0` the value is
    /// `(-1)^k C(k - n - 1, k)`.
    pub fn get(&self, n: i64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        if n < 0 {
            let v = self.get(k - n - 1, k);
            return if k % 2 == 0 { v } else { -v };
        }
        if k > n {
            return BigInt::zero();
        }
        match self.rows.get(n as usize) {
            Some(row) => row[k as usize].clone(),
            None => direct_binomial(n as u64, k as u64),
        }
    }
}

fn direct_binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

fn table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(|| BinomialTable::new(DEFAULT_BINOMIAL_ROWS))
}

/// Generalized binomial coefficient via the shared table.
pub fn binomial(n: i64, k: i64) -> BigInt {
    table().get(n, k)
}

fn exact_div(num: BigInt, den: impl Into<BigInt>) -> BigInt {
    let den = den.into();
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "inexact division {num}/{den}");
    q
}

fn to_integer(x: BigRational) -> BigInt {
    assert!(x.is_integer(), "non-integral closed-form value {x}");
    x.to_integer()
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `multinomial(top; parts)` with `Σ parts = top`.
fn multinomial(top: usize, parts: &[usize]) -> BigInt {
    assert_eq!(
        parts.iter().sum::<usize>(),
        top,
        "multinomial parts must sum to the top entry"
    );
    let mut acc = BigInt::one();
    let mut rest = top;
    for &p in parts {
        acc *= binomial(rest as i64, p as i64);
        rest -= p;
    }
    acc
}

/// The Catalan number `C_n = C(2n, n)/(n+1)`.
pub fn catalan(n: usize) -> BigInt {
    exact_div(binomial(2 * n as i64, n as i64), n as u64 + 1)
}

/// `P_{n, n-3k}`, the number of maximally open base-open 3-periodic
/// dissections of the `(n+2)`-gon with `n - 3k` cells.
pub fn p_nk(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if 3 * k >= n {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    exact_div(
        binomial(n - 2 * k - 1, k) * binomial(2 * n - 4 * k, n - 3 * k),
        n - k + 1,
    )
}

/// `Q_{n, n-3k}`, the number of quiddities of 3-periodic dissections of the
/// `(n+2)`-gon with `n - 3k` cells.
pub fn q_nk(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if 3 * k >= n {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = BigRational::zero();
    for s in 0..=k {
        let c = binomial(n - 3 * k + s - 2, s) * binomial(2 * n - 3 * k - s - 1, n - 3 * k - 1);
        acc += ratio(3 * (k - s) + 2, n - s + 1) * BigRational::from_integer(c);
    }
    to_integer(acc)
}

/// `Q_n`, the number of positive solutions with `N = n + 2`.
pub fn q_total(n: usize) -> BigInt {
    (0..=n / 3).map(|k| q_nk(n, k)).sum()
}

/// `P_n = Σ_k P_{n, n-3k}`.
pub fn p_total(n: usize) -> BigInt {
    (0..=n / 3).map(|k| p_nk(n, k)).sum()
}

/// `D[l]_{n,m}`, the number of `l`-periodic dissections of the `(n+2)`-gon
/// with `m` cells.
pub fn d_l_nm(l: usize, n: usize, m: usize) -> BigInt {
    assert!(l >= 1, "period must be positive");
    if n == 0 {
        return if m == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if m == 0 || m > n || !(n - m).is_multiple_of(l) {
        return BigInt::zero();
    }
    let q = ((n - m) / l) as i64;
    let (n, m) = (n as i64, m as i64);
    exact_div(binomial(m - 1 + q, m - 1) * binomial(n + m, m), n + 1)
}

/// `D[l]_{n, n-lk}` in the second printed form.
pub fn d_l_nk(l: usize, n: usize, k: usize) -> BigInt {
    assert!(l >= 1, "period must be positive");
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if l * k >= n {
        return BigInt::zero();
    }
    let (l, n, k) = (l as i64, n as i64, k as i64);
    exact_div(
        binomial(n - (l - 1) * k - 1, k) * binomial(2 * n - l * k, n - l * k),
        n + 1,
    )
}

/// `D[l]_n = Σ_m D[l]_{n,m}`.
pub fn d_l_total(l: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (1..=n).map(|m| d_l_nm(l, n, m)).sum()
}

/// Number of dissections with multi-index `m̄`.
pub fn d_multi(m: &MultiIndex) -> BigInt {
    let norm = m.norm();
    let mut parts = vec![norm];
    parts.extend_from_slice(m.parts());
    exact_div(multinomial(norm + m.size(), &parts), norm as u64 + 1)
}

/// Number of maximally open base-open 3-periodic dissections with
/// multi-index `m̄`; zero unless `m̄` is 3-periodic.
pub fn p_multi(m: &MultiIndex) -> BigInt {
    if !m.is_periodic(3) {
        return BigInt::zero();
    }
    let twice_plus = 2 * m.norm() + m.size();
    assert_eq!(
        twice_plus % 3,
        0,
        "3-periodic multi-index has integral parameters"
    );
    let a = twice_plus / 3;
    let mut parts = vec![a];
    parts.extend_from_slice(m.parts());
    exact_div(multinomial(a + m.size(), &parts), a as u64 + 1)
}

/// Coefficient of `z^n w^{n-lk}` in `D[l]^e`.
pub fn power_coeff(l: usize, e: usize, n: usize, k: usize) -> BigInt {
    assert!(l >= 1 && e >= 1, "period and exponent must be positive");
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if l * k >= n {
        return BigInt::zero();
    }
    let (l, e, n, k) = (l as i64, e as i64, n as i64, k as i64);
    let c = binomial(n - (l - 1) * k - 1, k) * binomial(2 * n - l * k + e - 1, n - l * k);
    exact_div(c * e, n + e)
}

/// Coefficient of `z^n w^{n-3k}` in `P^e`.
pub fn p_power_coeff(e: usize, n: usize, k: usize) -> BigInt {
    assert!(e >= 1, "exponent must be positive");
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if 3 * k >= n {
        return BigInt::zero();
    }
    let (e, n, k) = (e as i64, n as i64, k as i64);
    let c = binomial(n - 2 * k - 1, k) * binomial(2 * n - 4 * k + e - 1, n - 3 * k);
    exact_div(c * e, n - k + e)
}

/// `Q_{n,n-3k}` assembled from coefficients of powers of `P`.
pub fn q_nk_from_powers(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if 3 * k >= n {
        return BigInt::zero();
    }
    (0..=k)
        .map(|j| p_power_coeff(3 * j + 2, n - 3 * j - 1, k - j))
        .sum()
}

/// `Q_{n,n-3}` by `C(2n-4, n-4) + 6/(n+1)·C(2n-5, n-5)`.
pub fn q_n3(n: usize) -> BigInt {
    if n < 4 {
        return BigInt::zero();
    }
    let n = n as i64;
    let second = ratio(6, n + 1) * BigRational::from_integer(binomial(2 * n - 5, n - 5));
    to_integer(BigRational::from_integer(binomial(2 * n - 4, n - 4)) + second)
}

/// `Q_{n,n-3}` by `C(2n-3, n-4) - 2·C(2n-5, n-6)`.
pub fn q_n3_alt(n: usize) -> BigInt {
    if n < 4 {
        return BigInt::zero();
    }
    let n = n as i64;
    binomial(2 * n - 3, n - 4) - 2 * binomial(2 * n - 5, n - 6)
}

/// `Q_{n,n-6}` by its closed form.
pub fn q_n6(n: usize) -> BigInt {
    if n < 7 {
        return BigInt::zero();
    }
    let n = n as i64;
    let first = ratio(n - 5, 2) * BigRational::from_integer(binomial(2 * n - 6, n - 7));
    let rest = BigInt::from(n + 2) * binomial(2 * n - 8, n - 9)
        + BigInt::from(n - 2) * binomial(2 * n - 9, n - 10);
    to_integer(first - BigRational::from_integer(rest))
}

/// Number of fans obtained from the projective plane by `n` blow-ups.
pub fn blowup_count(n: usize) -> BigInt {
    assert!(n >= 1, "at least one blow-up");
    let n_big = BigInt::from(n as u64 + 3);
    q_nk(n + 1, 1) + n_big * (2 * catalan(n) - catalan(n - 1))
}

/// `((n+4)/n)·C(2n+1, n-1)`, valid for `n >= 2`.
pub fn blowup_count_closed(n: usize) -> BigInt {
    assert!(n >= 2, "closed form holds from n = 2");
    let n = n as i64;
    exact_div(binomial(2 * n + 1, n - 1) * (n + 4), n)
}

/// Lower and upper rational bounds for `Q_{n,n-3k}`, `1 <= k < n/3`.
pub fn q_nk_bounds(n: usize, k: usize) -> (BigRational, BigRational) {
    assert!(k >= 1 && 3 * k < n, "bounds need 1 <= k < n/3");
    let (n, k) = (n as i64, k as i64);
    let shared = binomial(n - 2 * k - 1, k - 1);
    let lower = binomial(2 * n - 4 * k, n - 3 * k - 1) * &shared;
    let upper = binomial(2 * n - 3 * k, n - 3 * k - 1) * &shared;
    (ratio(lower, k), ratio(upper, k))
}

/// Second pentagonal number `(k+1)(3(k+1)+1)/2`.
pub fn pentagonal(k: usize) -> BigInt {
    let j = k as u64 + 1;
    BigInt::from(j * (3 * j + 1) / 2)
}

/// Printed tabulated values known to disagree with the closed form:
/// `(n, k, printed value)`.
pub const KNOWN_MISPRINTS: &[(usize, usize, u64)] = &[(17, 3, 200720)];

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_table_basics() {
        let t = BinomialTable::new(10);
        assert_eq!(t.get(10, 3), b(120));
        assert_eq!(t.get(10, 11), b(0));
        assert_eq!(t.get(10, -1), b(0));
        assert_eq!(t.get(-1, 0), b(1));
        assert_eq!(t.get(-1, 3), BigInt::from(-1));
        assert_eq!(t.get(40, 20), b(137846528820));
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(t.get(n, k), t.get(n, n - k));
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), b(1));
        assert_eq!(catalan(3), b(5));
        assert_eq!(catalan(14), b(2674440));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(q_nk(6, 1), b(34));
        assert_eq!(p_nk(7, 1), b(120));
        assert_eq!(q_nk(21, 6), b(2254));
        for n in 0..20 {
            assert_eq!(q_nk(n, 0), catalan(n));
            assert_eq!(p_nk(n, 0), catalan(n));
        }
    }

    #[test]
    fn totals() {
        assert_eq!(q_total(10), b(27201));
        assert_eq!(p_total(9), b(6954));
        assert_eq!(q_total(0), b(1));
    }

    #[test]
    fn kirkman_cayley_examples() {
        assert_eq!(d_l_nm(1, 4, 2), b(9));
        assert_eq!(d_l_nm(3, 6, 3), b(36));
        assert_eq!(d_l_nm(2, 5, 3), b(28));
        assert_eq!(d_l_nm(3, 6, 4), b(0));
        for l in 1..=5 {
            for n in 1..=15 {
                for k in 0..=n {
                    if l * k < n {
                        assert_eq!(d_l_nk(l, n, k), d_l_nm(l, n, n - l * k));
                    }
                }
            }
        }
    }

    #[test]
    fn multivariate_examples() {
        assert_eq!(d_multi(&MultiIndex::new(vec![3])), b(5));
        assert_eq!(d_multi(&MultiIndex::new(vec![1, 0, 0, 1])), b(7));
        assert_eq!(d_multi(&MultiIndex::default()), b(1));
        assert_eq!(p_multi(&MultiIndex::default()), b(1));
        assert_eq!(p_multi(&MultiIndex::new(vec![1])), b(1));
        assert_eq!(p_multi(&MultiIndex::new(vec![0, 1])), b(0));
    }

    #[test]
    fn power_coefficients() {
        for n in 1..=20 {
            for k in 0..=n / 3 {
                assert_eq!(p_power_coeff(1, n, k), p_nk(n, k));
                assert_eq!(q_nk_from_powers(n, k), q_nk(n, k));
            }
        }
    }

    #[test]
    fn short_diagonals() {
        assert_eq!(q_n3(5), b(7));
        assert_eq!(q_n3(14), b(2288132));
        assert_eq!(q_n6(8), b(15));
        for n in 0..=40 {
            assert_eq!(q_n3(n), q_n3_alt(n));
            assert_eq!(q_n3(n), q_nk(n, 1));
            assert_eq!(q_n6(n), q_nk(n, 2));
        }
    }

    #[test]
    fn blowup_counts() {
        let got: Vec<BigInt> = (1..=6).map(blowup_count).collect();
        assert_eq!(got, [4, 15, 49, 168, 594, 2145].map(b));
        for n in 2..=30 {
            assert_eq!(blowup_count(n), blowup_count_closed(n));
        }
    }

    #[test]
    fn p_first_diagonal_is_binomial() {
        for n in 4..=40 {
            assert_eq!(p_nk(n, 1), binomial(2 * n as i64 - 4, n as i64 - 4));
        }
    }

    #[test]
    fn pentagonal_diagonal() {
        for k in 0..=10 {
            assert_eq!(q_nk(3 * k + 2, k), pentagonal(k));
        }
    }
}
