//! Algebraic asymptotic constants and empirical ratio checks.
//!
//! Roots are isolated by a sign scan followed by bisection. Exact inputs
//! arrive as integers; only this module uses floating point.

use std::f64::consts::{LN_2, PI};

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Default grid step of the sign scan.
pub const SCAN_STEP: f64 = 1e-3;
/// Right end of the scanned interval `(0, SCAN_LIMIT]`.
pub const SCAN_LIMIT: f64 = 4.0;
/// Bisection tolerance used for the constants.
pub const ROOT_TOLERANCE: f64 = 1e-15;
/// Largest admissible residual in the consistency checks.
pub const RESIDUAL_LIMIT: f64 = 1e-10;

/// Polynomial with integer coefficients, indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Drops trailing zero coefficients.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Horner evaluation in `f64`.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `4z⁷ − 12z⁵ − 8z⁴ + 12z³ − 20z² + 1`, whose least positive root is ρ.
    pub fn rho_polynomial() -> Self {
        Self::from_i64(&[1, 0, -20, 12, -8, -12, 0, 4])
    }

    /// `y⁷ − 2y⁶ − 4y⁴ + 4y³ + 4y − 2`, whose least positive root is ν.
    pub fn nu_polynomial() -> Self {
        Self::from_i64(&[-2, 4, 0, 4, -4, 0, -2, 1])
    }

    /// `R_l(y) = y^{2l} − (l−2)y^{l+1} − 2y^l − 2y + 1`.
    pub fn r_ell(l: usize) -> Self {
        assert!(l >= 1, "period must be positive");
        let mut c = vec![BigInt::zero(); 2 * l + 1];
        c[0] += 1;
        c[1] -= 2;
        c[l] -= 2;
        c[l + 1] -= BigInt::from(l as i64 - 2);
        c[2 * l] += 1;
        Self::new(c)
    }
}

/// Least positive root with the default scan grid.
pub fn least_positive_root(p: &IntPolynomial, tol: f64) -> Result<f64> {
    least_positive_root_with(p, tol, SCAN_STEP, SCAN_LIMIT)
}

/// Scans `step, 2·step, ..., limit` for the first sign change (or exact
/// zero) and bisects it down to `tol`.
pub fn least_positive_root_with(p: &IntPolynomial, tol: f64, step: f64, limit: f64) -> Result<f64> {
    if p.degree().is_none() {
        return Err(Error::Numerical(
            "zero polynomial has no isolated root".into(),
        ));
    }
    let steps = (limit / step).round() as usize;
    let mut lo = step;
    let mut f_lo = p.eval(lo);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    for i in 2..=steps {
        let hi = step * i as f64;
        let f_hi = p.eval(hi);
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if (f_lo < 0.0) != (f_hi < 0.0) {
            return Ok(bisect(p, lo, hi, f_lo, tol));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::Numerical(format!(
        "no sign change on (0, {limit}] with step {step}"
    )))
}

fn bisect(p: &IntPolynomial, mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = p.eval(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `F_P(z, y) = zy³ + (1 − z²)y² − y + z`.
pub fn f_p(z: f64, y: f64) -> f64 {
    z * y.powi(3) + (1.0 - z * z) * y * y - y + z
}

/// `∂_y F_P`.
pub fn f_p_dy(z: f64, y: f64) -> f64 {
    3.0 * z * y * y + 2.0 * (1.0 - z * z) * y - 1.0
}

/// `F_l(z, y) = y^{l+1} − zy^l + y² − y + z`.
pub fn f_ell(l: usize, z: f64, y: f64) -> f64 {
    let l = l as i32;
    y.powi(l + 1) - z * y.powi(l) + y * y - y + z
}

/// The constants governing the growth of `P_n` and `Q_n`.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticConstants {
    pub rho: f64,
    pub nu: f64,
    pub gamma_p: f64,
    pub gamma_q: f64,
    /// Bound on the error of every field above.
    pub error_bound: f64,
    /// `|F_P(ρ, ν)|`.
    pub residual_f: f64,
    /// `|∂_y F_P(ρ, ν)|`.
    pub residual_dy: f64,
    /// `P(ρ) = ν/ρ`.
    pub p_at_rho: f64,
    /// `Q(ρ) = 1 + ν²/(ρ(1 − ν³))`.
    pub q_at_rho: f64,
}

fn check(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value.abs() < RESIDUAL_LIMIT {
        Ok(())
    } else {
        Err(Error::Numerical(format!(
            "{name} = {value:e} exceeds {RESIDUAL_LIMIT:e}"
        )))
    }
}

/// Computes ρ, ν, γ_P and γ_Q, cross-checking each along two routes.
pub fn constants() -> Result<AsymptoticConstants> {
    let rho = least_positive_root(&IntPolynomial::rho_polynomial(), ROOT_TOLERANCE)?;
    let nu = least_positive_root(&IntPolynomial::nu_polynomial(), ROOT_TOLERANCE)?;
    let residual_f = f_p(rho, nu).abs();
    let residual_dy = f_p_dy(rho, nu).abs();
    check("F_P(rho, nu)", residual_f)?;
    check("dF_P/dy(rho, nu)", residual_dy)?;

    let dz = nu.powi(3) - 2.0 * rho * nu * nu + 1.0;
    let dyy = 2.0 * (3.0 * rho * nu - rho * rho + 1.0);
    let gamma_p = 0.5 * (dz / (rho * (3.0 * rho * nu - rho * rho + 1.0))).sqrt();
    let darboux = (rho * dz / (2.0 * dyy)).sqrt() / rho;
    check("gamma_P route difference", gamma_p - darboux)?;

    let g_prime = nu * (2.0 + nu.powi(3)) / (1.0 - nu.powi(3)).powi(2);
    let gamma_q = nu * (nu.powi(3) + 2.0) / (nu.powi(3) - 1.0).powi(2) * gamma_p;
    check("gamma_Q route difference", gamma_q - g_prime * gamma_p)?;

    let p_at_rho = nu / rho;
    let q_at_rho = 1.0 + nu * nu / (rho * (1.0 - nu.powi(3)));
    let q_from_p = 1.0 + rho * p_at_rho.powi(2) / (1.0 - (rho * p_at_rho).powi(3));
    check("Q(rho) route difference", q_at_rho - q_from_p)?;

    let error_bound = [
        ROOT_TOLERANCE,
        residual_f,
        residual_dy,
        (gamma_p - darboux).abs(),
        (gamma_q - g_prime * gamma_p).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
    .max(1e-12);
    let out = AsymptoticConstants {
        rho,
        nu,
        gamma_p,
        gamma_q,
        error_bound,
        residual_f,
        residual_dy,
        p_at_rho,
        q_at_rho,
    };
    if !(out.rho > 0.0
        && out.rho <= 0.25
        && out.nu > 0.0
        && out.nu < 1.0
        && out.gamma_p > 0.0
        && out.gamma_q > 0.0)
    {
        return Err(Error::Numerical(format!("constants out of range: {out:?}")));
    }
    Ok(out)
}

/// Constants of the `l`-periodic family.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicConstants {
    pub l: usize,
    pub nu: f64,
    pub rho: f64,
    pub gamma: f64,
    /// Always true: `gamma` assumes `ρ_l` is the only dominant singularity.
    pub gamma_conditional: bool,
    /// `|F_l(ρ_l, ν_l)|`.
    pub residual_f: f64,
    /// `|R_l(ν_l)|`.
    pub residual_r: f64,
}

/// `z_l(y) = y(y^l + y − 1)/(y^l − 1)`.
pub fn z_ell(l: usize, y: f64) -> f64 {
    let yl = y.powi(l as i32);
    y * (yl + y - 1.0) / (yl - 1.0)
}

/// Computes `ν_l`, `ρ_l = z_l(ν_l)` and the conditional `γ_l`.
pub fn periodic_constants(l: usize) -> Result<PeriodicConstants> {
    if l == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    let r = IntPolynomial::r_ell(l);
    let nu = least_positive_root(&r, ROOT_TOLERANCE)?;
    let rho = z_ell(l, nu);
    let li = l as i32;
    let lf = l as f64;
    let inner = 2.0 + 2.0 * lf * nu.powi(li - 1) + (lf - 2.0) * (lf + 1.0) * nu.powi(li)
        - 2.0 * lf * nu.powi(2 * li - 1);
    let gamma = (1.0 - nu.powi(li)) / (2.0 * rho).sqrt() / inner.sqrt();
    let residual_f = f_ell(l, rho, nu).abs();
    let residual_r = r.eval(nu).abs();
    check("F_l(rho_l, nu_l)", residual_f)?;
    check("R_l(nu_l)", residual_r)?;
    Ok(PeriodicConstants {
        l,
        nu,
        rho,
        gamma,
        gamma_conditional: true,
        residual_f,
        residual_r,
    })
}

/// Natural logarithm of a positive integer of any size.
pub fn ln_bigint(x: &BigInt) -> f64 {
    if x.sign() != Sign::Plus {
        return f64::NAN;
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * LN_2
}

/// `seq(n)·√π·n^{3/2}·ρ^n`, evaluated in log space.
pub fn empirical_ratio(seq: impl Fn(usize) -> BigInt, rho: f64, n: usize) -> f64 {
    let nf = n as f64;
    (ln_bigint(&seq(n)) + 0.5 * PI.ln() + 1.5 * nf.ln() + nf * rho.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{catalan, d_l_total};

    #[test]
    fn trivial_roots() {
        assert_eq!(
            least_positive_root(&IntPolynomial::from_i64(&[-1, 0, 4]), 1e-12)
                .map(|r| (r - 0.5).abs() < 1e-12)
                .ok(),
            Some(true)
        );
        let r = least_positive_root(&IntPolynomial::from_i64(&[0, -1, 1]), 1e-12).expect("root");
        assert!((r - 1.0).abs() < 1e-12);
        assert!(least_positive_root(&IntPolynomial::from_i64(&[1, 0, 1]), 1e-12).is_err());
    }

    #[test]
    fn published_constants() {
        let c = constants().expect("constants");
        assert!((c.rho - 0.237287).abs() < 1e-5);
        assert!((c.nu - 0.452578).abs() < 1e-5);
        assert!((c.gamma_p - 0.910244).abs() < 1e-5);
        assert!((c.gamma_q - 1.047266).abs() < 1e-5);
    }

    #[test]
    fn first_periodic_member() {
        let c = periodic_constants(1).expect("l = 1");
        assert!((c.rho - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-10);
        assert!((c.nu - (1.0 - 1.0 / 2f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn catalan_ratio() {
        assert!((empirical_ratio(catalan, 0.25, 10_000) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn periodic_gamma_tracks_coefficients() {
        for l in 1..=4 {
            let c = periodic_constants(l).expect("constants");
            let ratio = empirical_ratio(|n| d_l_total(l, n), c.rho, 200);
            assert!(
                (ratio / c.gamma - 1.0).abs() < 0.05,
                "l = {l}: {ratio} vs {}",
                c.gamma
            );
        }
    }
}
