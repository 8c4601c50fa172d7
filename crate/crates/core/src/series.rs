//! Truncated formal power series and fixed-point solvers.
//!
//! [`USeries`] is univariate in `z`, [`BSeries`] is bivariate in `z` and `w`
//! (truncated in `z` only), and [`MSeries`] is multivariate in
//! `w_1, w_2, ...` (truncated by `‖m̄‖`). Coefficients are exact.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::geometry::MultiIndex;

/// Coefficient ring for the dense series types.
pub trait Coeff: Clone + Debug + Num + Neg<Output = Self> {}

impl<T: Clone + Debug + Num + Neg<Output = T>> Coeff for T {}

/// A power series in `z` truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries<T = BigInt> {
    coeffs: Vec<T>,
}

impl<T: Coeff> USeries<T> {
    /// The zero series.
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Builds a series from leading coefficients, padding or truncating.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        USeries { coeffs }
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the order.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        USeries { coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        USeries { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Product truncated at the smaller order.
    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        USeries { coeffs }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![T::zero(); order + 1];
        if k <= order {
            coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        USeries { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `1/(1 - g)` for `g` with zero constant term.
    pub fn geometric(g: &Self) -> Self {
        assert!(
            g.coeffs[0].is_zero(),
            "geometric inverse needs a zero constant term"
        );
        let order = g.order();
        let mut h = vec![T::zero(); order + 1];
        h[0] = T::one();
        for n in 1..=order {
            let mut acc = T::zero();
            for j in 1..=n {
                acc = acc + g.coeffs[j].clone() * h[n - j].clone();
            }
            h[n] = acc;
        }
        USeries { coeffs: h }
    }
}

/// A power series in `z` with polynomial coefficients in `w`, truncated
/// after `z^order`. Row `n` lists the coefficients of `z^n w^m` by `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeries<T = BigInt> {
    rows: Vec<Vec<T>>,
}

fn trim<T: Coeff>(row: &mut Vec<T>) {
    while row.last().is_some_and(|c| c.is_zero()) {
        row.pop();
    }
}

fn poly_mul<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_add_into<T: Coeff>(acc: &mut Vec<T>, b: &[T]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), T::zero());
    }
    for (t, y) in b.iter().enumerate() {
        acc[t] = acc[t].clone() + y.clone();
    }
}

impl<T: Coeff> BSeries<T> {
    pub fn zero(order: usize) -> Self {
        BSeries {
            rows: vec![Vec::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0] = vec![T::one()];
        s
    }

    /// The monomial `c·z^n w^m`.
    pub fn monomial(c: T, n: usize, m: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            let mut row = vec![T::zero(); m + 1];
            row[m] = c;
            s.rows[n] = row;
            trim(&mut s.rows[n]);
        }
        s
    }

    /// Sets the coefficient of `z^n w^m`.
    pub fn set(&mut self, n: usize, m: usize, c: T) {
        let row = &mut self.rows[n];
        if row.len() <= m {
            row.resize(m + 1, T::zero());
        }
        row[m] = c;
        trim(row);
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `z^n w^m`.
    pub fn get(&self, n: usize, m: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(m))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Polynomial in `w` multiplying `z^n`, without trailing zeros.
    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Nonzero coefficients as `((n, m), c)`.
    pub fn terms(&self) -> Vec<((usize, usize), T)> {
        let mut out = Vec::new();
        for (n, row) in self.rows.iter().enumerate() {
            for (m, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push(((n, m), c.clone()));
                }
            }
        }
        out
    }

    /// Same series viewed at a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        BSeries {
            rows: self.rows[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let rows = (0..=order)
            .map(|n| {
                let mut r = self.rows[n].clone();
                poly_add_into(&mut r, &o.rows[n]);
                trim(&mut r);
                r
            })
            .collect();
        BSeries { rows }
    }

    pub fn neg(&self) -> Self {
        BSeries {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| -c.clone()).collect())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); order + 1];
        for i in 0..=order {
            if self.rows[i].is_empty() {
                continue;
            }
            for j in 0..=order - i {
                if o.rows[j].is_empty() {
                    continue;
                }
                let p = poly_mul(&self.rows[i], &o.rows[j]);
                poly_add_into(&mut rows[i + j], &p);
            }
        }
        for r in &mut rows {
            trim(r);
        }
        BSeries { rows }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplication by `z^k w^j`.
    pub fn shift(&self, k: usize, j: usize) -> Self {
        let order = self.order();
        let mut rows = vec![Vec::new(); order + 1];
        for (row, src) in rows.iter_mut().skip(k).zip(&self.rows) {
            if !src.is_empty() {
                let mut r = vec![T::zero(); j];
                r.extend(src.iter().cloned());
                *row = r;
            }
        }
        BSeries { rows }
    }

    /// `1/(1 - g)` for `g` with no `z^0` terms.
    pub fn geometric(g: &Self) -> Self {
        assert!(g.rows[0].is_empty(), "geometric inverse needs g(0, w) = 0");
        let order = g.order();
        let mut h: Vec<Vec<T>> = vec![Vec::new(); order + 1];
        h[0] = vec![T::one()];
        for n in 1..=order {
            let mut acc = Vec::new();
            for j in 1..=n {
                if !g.rows[j].is_empty() && !h[n - j].is_empty() {
                    poly_add_into(&mut acc, &poly_mul(&g.rows[j], &h[n - j]));
                }
            }
            trim(&mut acc);
            h[n] = acc;
        }
        BSeries { rows: h }
    }

    /// Inverse of a series whose `z^0` row is a unit constant.
    pub fn inverse(&self) -> Self {
        assert!(self.rows[0].len() == 1, "inverse needs a constant z^0 row");
        let c = self.rows[0][0].clone();
        let normalized = BSeries {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.clone() / c.clone()).collect())
                .collect(),
        };
        let g = BSeries::one(self.order()).sub(&normalized);
        let h = BSeries::geometric(&g);
        BSeries {
            rows: h
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| x / c.clone()).collect())
                .collect(),
        }
    }

    /// Evaluation at `w = 1`.
    pub fn eval_w1(&self) -> USeries<T> {
        let coeffs = self
            .rows
            .iter()
            .map(|r| r.iter().fold(T::zero(), |a, c| a + c.clone()))
            .collect();
        USeries { coeffs }
    }
}

/// Free-function form of [`BSeries::eval_w1`].
pub fn eval_w1(b: &BSeries) -> USeries {
    b.eval_w1()
}

/// A series in `w_1, w_2, ...` keeping monomials with `‖m̄‖ <= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSeries {
    order: usize,
    coeffs: BTreeMap<MultiIndex, BigInt>,
}

impl MSeries {
    pub fn zero(order: usize) -> Self {
        MSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs.insert(MultiIndex::default(), BigInt::one());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `w̄^m̄`.
    pub fn get(&self, m: &MultiIndex) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in multi-index order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, m: MultiIndex, c: BigInt) {
        if m.norm() > self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &MSeries) -> MSeries {
        let mut out = MSeries::zero(self.order.min(o.order));
        for (m, c) in self.coeffs.iter().chain(&o.coeffs) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, o: &MSeries) -> MSeries {
        let mut out = MSeries::zero(self.order.min(o.order));
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                if a.norm() + b.norm() <= out.order {
                    out.add_term(a.add(b), x * y);
                }
            }
        }
        out
    }

    /// Multiplication by `w_r`.
    pub fn times_w(&self, r: usize) -> MSeries {
        let mut out = MSeries::zero(self.order);
        for (m, c) in &self.coeffs {
            out.add_term(m.add(&MultiIndex::unit(r, 1)), c.clone());
        }
        out
    }
}

/// Sends `w_r` to `w·z^r` when `r ≡ 1 (mod l)` and to 0 otherwise.
pub fn substitute_periodic(ms: &MSeries, l: usize) -> BSeries {
    let mut out = BSeries::zero(ms.order());
    for (m, c) in ms.terms() {
        if m.is_periodic(l) {
            let (n, k) = (m.norm(), m.size());
            let cur = out.get(n, k);
            out.set(n, k, cur + c);
        }
    }
    out
}

/// The functional equations handled by [`solve_fixed_point`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equation {
    PUniv,
    QUniv,
    PBiv,
    QBiv,
    DEllBiv(usize),
    DMulti,
    PMulti,
    QMulti,
}

/// A solved series of the matching kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Univariate(USeries),
    Bivariate(BSeries),
    Multivariate(MSeries),
}

/// Solves `eq` up to `order`.
pub fn solve_fixed_point(eq: Equation, order: usize) -> Solution {
    match eq {
        Equation::PUniv => Solution::Univariate(p_univ(order)),
        Equation::QUniv => Solution::Univariate(q_univ(order)),
        Equation::PBiv => Solution::Bivariate(p_biv(order)),
        Equation::QBiv => Solution::Bivariate(q_biv(order)),
        Equation::DEllBiv(l) => Solution::Bivariate(d_ell_biv(l, order)),
        Equation::DMulti => Solution::Multivariate(d_multi(order)),
        Equation::PMulti => Solution::Multivariate(p_multi(order)),
        Equation::QMulti => Solution::Multivariate(q_multi(order)),
    }
}

/// Iterates `f <- rhs(f)` from 1, `order + 1` times, then checks stability.
fn iterate<S: Clone + PartialEq + Debug>(start: S, order: usize, rhs: impl Fn(&S) -> S) -> S {
    let mut f = start;
    for _ in 0..=order {
        f = rhs(&f);
    }
    assert_eq!(rhs(&f), f, "fixed-point iteration did not stabilize");
    f
}

/// `P = 1 + zP²/(1 - z³P²)`.
pub fn p_univ(order: usize) -> USeries {
    iterate(USeries::one(order), order, |f| {
        let f2 = f.mul(f);
        USeries::one(order).add(&f2.shift(1).mul(&USeries::geometric(&f2.shift(3))))
    })
}

/// `P = 1 + wzP²/(1 - z³P²)`.
pub fn p_biv(order: usize) -> BSeries {
    iterate(BSeries::one(order), order, |f| {
        let f2 = f.mul(f);
        BSeries::one(order).add(&f2.shift(1, 1).mul(&BSeries::geometric(&f2.shift(3, 0))))
    })
}

/// `D[l] = 1 + wzD²/(1 - z^l D^l)`.
pub fn d_ell_biv(l: usize, order: usize) -> BSeries {
    assert!(l >= 1, "period must be positive");
    iterate(BSeries::one(order), order, |f| {
        let denom = f.pow(l).shift(l, 0);
        BSeries::one(order).add(&f.mul(f).shift(1, 1).mul(&BSeries::geometric(&denom)))
    })
}

/// `Q = 1 + Σ_d w z^{3d-2} P^{3d-1}` with `P` from [`p_biv`].
pub fn q_biv(order: usize) -> BSeries {
    let p = p_biv(order);
    let mut q = BSeries::one(order);
    let mut d = 1;
    while 3 * d - 2 <= order {
        q = q.add(&p.pow(3 * d - 1).shift(3 * d - 2, 1));
        d += 1;
    }
    q
}

/// `Q(z)`, the evaluation of [`q_biv`] at `w = 1`.
pub fn q_univ(order: usize) -> USeries {
    q_biv(order).eval_w1()
}

/// `Q` through the rational form `1 + wzP²/(1 - z³P³)`.
pub fn q_biv_rational(order: usize) -> BSeries {
    let p = p_biv(order);
    let num = p.mul(&p).shift(1, 1);
    BSeries::one(order).add(&num.mul(&BSeries::geometric(&p.pow(3).shift(3, 0))))
}

/// `Q(z)` through the rational form `1 + zP²/(1 - z³P³)`.
pub fn q_univ_rational(order: usize) -> USeries {
    let p = p_univ(order);
    let num = p.mul(&p).shift(1);
    USeries::one(order).add(&num.mul(&USeries::geometric(&p.pow(3).shift(3))))
}

/// `D = 1 + Σ_r w_r D^{r+1}`.
pub fn d_multi(order: usize) -> MSeries {
    iterate(MSeries::one(order), order, |f| {
        let mut out = MSeries::one(order);
        let mut power = f.mul(f);
        for r in 1..=order {
            out = out.add(&power.times_w(r));
            power = power.mul(f);
        }
        out
    })
}

/// `P = 1 + Σ_d w_{3d-2} P^{2d}`.
pub fn p_multi(order: usize) -> MSeries {
    iterate(MSeries::one(order), order, |f| {
        let mut out = MSeries::one(order);
        let f2 = f.mul(f);
        let mut power = f2.clone();
        let mut d = 1;
        while 3 * d - 2 <= order {
            out = out.add(&power.times_w(3 * d - 2));
            power = power.mul(&f2);
            d += 1;
        }
        out
    })
}

/// `Q = 1 + Σ_d w_{3d-2} P^{3d-1}` with `P` from [`p_multi`].
pub fn q_multi(order: usize) -> MSeries {
    let p = p_multi(order);
    let mut out = MSeries::one(order);
    let mut d = 1;
    while 3 * d - 2 <= order {
        let power = (0..3 * d - 1).fold(MSeries::one(order), |acc, _| acc.mul(&p));
        out = out.add(&power.times_w(3 * d - 2));
        d += 1;
    }
    out
}

/// Reads `P` off `D[2]` through `n = ñ + k̃`, `m = ñ - 2k̃`.
pub fn tilde_d2_substitution(d2: &BSeries, order: usize) -> BSeries {
    let mut out = BSeries::zero(order);
    for ((nt, mt), c) in d2.terms() {
        if nt == 0 {
            if mt == 0 {
                out.set(0, 0, c);
            }
            continue;
        }
        if mt > nt || (nt - mt) % 2 != 0 {
            continue;
        }
        let k = (nt - mt) / 2;
        if nt + k <= order {
            out.set(nt + k, mt, c);
        }
    }
    out
}

/// `e·[u^n] φ^{n+e}` with `φ = (1 - wu/(1 - u^l))^{-1}`, as a polynomial in
/// `w` indexed by degree. Equals `(n+e)·[z^n] D[l]^e`.
pub fn lb_extract(l: usize, e: usize, n: usize) -> Vec<BigInt> {
    assert!(l >= 1 && e >= 1, "period and exponent must be positive");
    let ones = BSeries::<BigInt>::geometric(&BSeries::monomial(BigInt::one(), l, 0, n).truncate(n));
    let g = ones.shift(1, 1);
    let phi = BSeries::geometric(&g);
    let power = phi.pow(n + e);
    power.row(n).iter().map(|c| c * BigInt::from(e)).collect()
}

/// Expansion of `(z + 1 - √(z² - 2(2w+1)z + 1)) / (2(w+1)z)` in exact
/// rationals, up to `z^order`.
pub fn d1_closed_form(order: usize) -> BSeries<BigRational> {
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let big = order + 1;
    let mut s = BSeries::<BigRational>::one(big);
    s.set(1, 0, q(-2));
    s.set(1, 1, q(-4));
    if big >= 2 {
        s.set(2, 0, q(1));
    }
    let root = sqrt_newton(&s);
    let mut numer = BSeries::<BigRational>::one(big).sub(&root);
    let linear = numer.get(1, 0) + q(1);
    numer.set(1, 0, linear);
    assert!(numer.row(0).is_empty(), "numerator vanishes at z = 0");
    let mut out = BSeries::<BigRational>::zero(order);
    for n in 0..=order {
        let quotient = divide_by_w_plus_one(numer.row(n + 1));
        for (m, c) in quotient.into_iter().enumerate() {
            out.set(n, m, c / q(2));
        }
    }
    out
}

/// Square root with constant term 1, by Newton iteration `y <- (y + s/y)/2`.
fn sqrt_newton(s: &BSeries<BigRational>) -> BSeries<BigRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut y = BSeries::<BigRational>::one(s.order());
    loop {
        let next = y.add(&s.mul(&y.inverse()));
        let next = BSeries {
            rows: next
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|c| c * half.clone()).collect())
                .collect(),
        };
        if next == y {
            return y;
        }
        y = next;
    }
}

/// Exact quotient of a polynomial in `w` by `w + 1`.
fn divide_by_w_plus_one(p: &[BigRational]) -> Vec<BigRational> {
    if p.is_empty() {
        return Vec::new();
    }
    let deg = p.len() - 1;
    let mut quotient = vec![BigRational::zero(); deg];
    let mut carry = BigRational::zero();
    for t in (1..=deg).rev() {
        let c = p[t].clone() - carry.clone();
        quotient[t - 1] = c.clone();
        carry = c;
    }
    assert_eq!(
        p[0].clone() - carry,
        BigRational::zero(),
        "numerator divisible by w + 1"
    );
    quotient
}

/// Converts an integer series to rationals.
pub fn to_rational(b: &BSeries) -> BSeries<BigRational> {
    BSeries {
        rows: b
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect()
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn univariate_solutions() {
        assert_eq!(
            p_univ(10).coeffs(),
            ints(&[1, 1, 2, 5, 15, 48, 160, 550, 1937, 6954, 25355]).as_slice()
        );
        let q = ints(&[
            1, 1, 2, 5, 15, 49, 166, 577, 2050, 7414, 27201, 100984, 378651, 1431901, 5454718,
        ]);
        assert_eq!(q_univ(14).coeffs(), q.as_slice());
    }

    #[test]
    fn dissection_totals_at_w_one() {
        assert_eq!(
            d_ell_biv(1, 5).eval_w1().coeffs(),
            ints(&[1, 1, 3, 11, 45, 197]).as_slice()
        );
    }

    #[test]
    fn bivariate_coefficient() {
        assert_eq!(q_biv(8).get(8, 2), BigInt::from(15));
    }

    #[test]
    fn eval_of_zero_is_zero() {
        assert_eq!(eval_w1(&BSeries::zero(4)), USeries::zero(4));
    }

    #[test]
    fn substitution_of_one() {
        assert_eq!(substitute_periodic(&MSeries::one(5), 3), BSeries::one(5));
    }

    #[test]
    fn extraction_examples() {
        assert_eq!(lb_extract(3, 1, 5), ints(&[0, 0, 42, 0, 0, 252]));
        assert_eq!(lb_extract(1, 1, 2), ints(&[0, 3, 6]));
    }

    #[test]
    fn geometric_inverse() {
        let z = USeries::<BigInt>::monomial(BigInt::one(), 1, 6);
        assert_eq!(USeries::geometric(&z).coeffs(), ints(&[1; 7]).as_slice());
    }

    #[test]
    fn inverse_round_trip() {
        let mut s = BSeries::<BigRational>::one(6);
        s.set(1, 1, BigRational::from_integer(3.into()));
        s.set(2, 0, BigRational::from_integer((-2).into()));
        assert_eq!(s.mul(&s.inverse()), BSeries::one(6));
    }
}
