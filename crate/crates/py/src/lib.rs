use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use quiddity_core::{asymptotics, enumerate, formulas, matrixeq, series, surgery, toric, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A dissection of the (n+2)-gon by non-crossing chords.
#[pyclass(
    name = "Dissection",
    module = "quiddity",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDissection(quiddity_core::Dissection);

#[pymethods]
impl PyDissection {
    #[new]
    #[pyo3(signature = (n, chords=Vec::new()))]
    fn new(n: usize, chords: Vec<(usize, usize)>) -> PyResult<Self> {
        quiddity_core::Dissection::new(n, chords)
            .map(Self)
            .map_err(err)
    }

    /// Parses `n=<n>;chords=(i,j),...`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn chords(&self) -> Vec<(usize, usize)> {
        self.0.chords().iter().map(|c| (c.i, c.j)).collect()
    }

    #[getter]
    fn num_cells(&self) -> usize {
        self.0.num_cells()
    }

    fn cells(&self) -> Vec<Vec<usize>> {
        self.0.cells().into_iter().map(|c| c.vertices).collect()
    }

    fn quiddity(&self) -> Vec<i64> {
        self.0.quiddity().0
    }

    fn multi_index(&self) -> Vec<usize> {
        self.0.multi_index().parts().to_vec()
    }

    fn is_l_periodic(&self, l: usize) -> bool {
        self.0.is_l_periodic(l)
    }

    /// Z3-index of every side, keyed by its endpoints.
    fn side_indices(&self) -> PyResult<BTreeMap<(usize, usize), u8>> {
        Ok(surgery::index(&self.0).map_err(err)?.side_indices())
    }

    fn is_maximally_open(&self) -> PyResult<bool> {
        Ok(surgery::is_maximally_open(
            &surgery::index(&self.0).map_err(err)?,
        ))
    }

    fn is_base_open(&self) -> PyResult<bool> {
        surgery::is_base_open(&surgery::index(&self.0).map_err(err)?).map_err(err)
    }

    fn canonicalize(&self) -> PyResult<Self> {
        surgery::canonicalize(&self.0).map(Self).map_err(err)
    }

    /// Canonical form and the opening moves applied, as text.
    fn canonicalize_with_trace(&self) -> PyResult<(Self, Vec<String>)> {
        let (d, moves) = surgery::canonicalize_with_trace(&self.0).map_err(err)?;
        Ok((Self(d), moves.iter().map(|m| m.to_string()).collect()))
    }

    fn blow_up(&self, i: usize) -> PyResult<Self> {
        surgery::blow_up(&self.0, i).map(Self).map_err(err)
    }

    fn expand(&self, i: usize, split: (i64, i64)) -> PyResult<Self> {
        surgery::expand(&self.0, i, split).map(Self).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Dissection.parse('{}')", self.0)
    }
}

#[pyfunction]
fn periodic_dissections(n: usize, l: usize) -> PyResult<Vec<PyDissection>> {
    Ok(enumerate::periodic_dissections(n, l)
        .map_err(err)?
        .into_iter()
        .map(PyDissection)
        .collect())
}

#[pyfunction]
fn count_dissections(n: usize, l: usize) -> PyResult<BTreeMap<usize, BigInt>> {
    Ok(enumerate::count_dissections(n, l).map_err(err)?.by_m)
}

#[pyfunction]
fn count_quiddities(n: usize, l: usize) -> PyResult<BTreeMap<usize, BigInt>> {
    Ok(enumerate::count_quiddities(n, l).map_err(err)?.by_m)
}

#[pyfunction]
fn find_dissection_with_quiddity(q: Vec<i64>, l: usize) -> Option<PyDissection> {
    enumerate::find_dissection_with_quiddity(&q, l).map(PyDissection)
}

#[pyfunction]
fn cc_product(a: Vec<i64>) -> PyResult<[[BigInt; 2]; 2]> {
    let m = matrixeq::cc_product(&a).map_err(err)?;
    Ok([[m.a, m.b], [m.c, m.d]])
}

/// `(N, T, k, sign)` when the product is `±Id`, else `None`.
#[pyfunction]
fn is_cc_solution(a: Vec<i64>) -> Option<(usize, i64, i64, i8)> {
    matrixeq::is_cc_solution(&a).map(|c| (c.len, c.total, c.k, c.sign))
}

#[pyfunction]
fn continuant(a: Vec<i64>) -> BigInt {
    matrixeq::continuant(&a)
}

#[pyfunction]
fn hj_value(a: Vec<i64>) -> PyResult<String> {
    Ok(matrixeq::hj_value(&a).map_err(err)?.to_string())
}

#[pyfunction]
fn enumerate_positive_solutions(len: usize) -> PyResult<Vec<Vec<i64>>> {
    Ok(matrixeq::enumerate_positive_solutions(len)
        .map_err(err)?
        .into_iter()
        .collect())
}

#[pyfunction]
fn q_nk(n: usize, k: usize) -> BigInt {
    formulas::q_nk(n, k)
}

#[pyfunction]
fn p_nk(n: usize, k: usize) -> BigInt {
    formulas::p_nk(n, k)
}

#[pyfunction]
fn q_total(n: usize) -> BigInt {
    formulas::q_total(n)
}

#[pyfunction]
fn p_total(n: usize) -> BigInt {
    formulas::p_total(n)
}

#[pyfunction]
fn d_l_nm(l: usize, n: usize, m: usize) -> PyResult<BigInt> {
    if l == 0 {
        return Err(PyValueError::new_err("period must be positive"));
    }
    Ok(formulas::d_l_nm(l, n, m))
}

#[pyfunction]
fn catalan(n: usize) -> BigInt {
    formulas::catalan(n)
}

#[pyfunction]
fn blowup_count(n: usize) -> PyResult<BigInt> {
    if n == 0 {
        return Err(PyValueError::new_err("at least one blow-up"));
    }
    Ok(formulas::blowup_count(n))
}

#[pyfunction]
fn q_univ(order: usize) -> Vec<BigInt> {
    series::q_univ(order).coeffs().to_vec()
}

#[pyfunction]
fn p_univ(order: usize) -> Vec<BigInt> {
    series::p_univ(order).coeffs().to_vec()
}

fn rows(s: &series::BSeries, order: usize) -> Vec<Vec<BigInt>> {
    (0..=order).map(|n| s.row(n).to_vec()).collect()
}

/// Rows of w-coefficients, one per power of z.
#[pyfunction]
fn q_biv(order: usize) -> Vec<Vec<BigInt>> {
    rows(&series::q_biv(order), order)
}

#[pyfunction]
fn p_biv(order: usize) -> Vec<Vec<BigInt>> {
    rows(&series::p_biv(order), order)
}

#[pyfunction]
fn d_ell_biv(l: usize, order: usize) -> PyResult<Vec<Vec<BigInt>>> {
    if l == 0 {
        return Err(PyValueError::new_err("period must be positive"));
    }
    Ok(rows(&series::d_ell_biv(l, order), order))
}

#[pyfunction]
fn lb_extract(l: usize, e: usize, n: usize) -> Vec<BigInt> {
    series::lb_extract(l, e, n)
}

#[pyfunction]
fn constants() -> PyResult<BTreeMap<&'static str, f64>> {
    let c = asymptotics::constants().map_err(err)?;
    Ok(BTreeMap::from([
        ("rho", c.rho),
        ("nu", c.nu),
        ("gamma_p", c.gamma_p),
        ("gamma_q", c.gamma_q),
        ("error_bound", c.error_bound),
        ("residual_f", c.residual_f),
        ("residual_dy", c.residual_dy),
    ]))
}

#[pyfunction]
fn periodic_constants(l: usize) -> PyResult<BTreeMap<&'static str, f64>> {
    let c = asymptotics::periodic_constants(l).map_err(err)?;
    Ok(BTreeMap::from([
        ("rho", c.rho),
        ("nu", c.nu),
        ("gamma", c.gamma),
    ]))
}

#[pyfunction]
fn enumerate_blowups(n: usize) -> PyResult<Vec<Vec<i64>>> {
    Ok(toric::enumerate_blowups(n)
        .map_err(err)?
        .into_iter()
        .map(|a| a.values().to_vec())
        .collect())
}

#[pyfunction]
fn classify_type(a: Vec<i64>) -> PyResult<String> {
    let seq = toric::FanSequence::new(a).map_err(err)?;
    Ok(toric::classify_type(&seq).map_err(err)?.to_string())
}

/// Blow-up between positions `k` and `k+1`, 1-based and cyclic.
#[pyfunction]
fn fan_blow_up(a: Vec<i64>, k: usize) -> PyResult<Vec<i64>> {
    let seq = toric::FanSequence::new(a).map_err(err)?;
    if k == 0 || k > seq.len() {
        return Err(PyValueError::new_err(format!(
            "position {k} outside 1..={}",
            seq.len()
        )));
    }
    Ok(toric::fan_blow_up(&seq, k).values().to_vec())
}

#[pymodule]
fn quiddity(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDissection>()?;
    m.add_function(wrap_pyfunction!(periodic_dissections, m)?)?;
    m.add_function(wrap_pyfunction!(count_dissections, m)?)?;
    m.add_function(wrap_pyfunction!(count_quiddities, m)?)?;
    m.add_function(wrap_pyfunction!(find_dissection_with_quiddity, m)?)?;
    m.add_function(wrap_pyfunction!(cc_product, m)?)?;
    m.add_function(wrap_pyfunction!(is_cc_solution, m)?)?;
    m.add_function(wrap_pyfunction!(continuant, m)?)?;
    m.add_function(wrap_pyfunction!(hj_value, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_positive_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(q_nk, m)?)?;
    m.add_function(wrap_pyfunction!(p_nk, m)?)?;
    m.add_function(wrap_pyfunction!(q_total, m)?)?;
    m.add_function(wrap_pyfunction!(p_total, m)?)?;
    m.add_function(wrap_pyfunction!(d_l_nm, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(blowup_count, m)?)?;
    m.add_function(wrap_pyfunction!(q_univ, m)?)?;
    m.add_function(wrap_pyfunction!(p_univ, m)?)?;
    m.add_function(wrap_pyfunction!(q_biv, m)?)?;
    m.add_function(wrap_pyfunction!(p_biv, m)?)?;
    m.add_function(wrap_pyfunction!(d_ell_biv, m)?)?;
    m.add_function(wrap_pyfunction!(lb_extract, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(periodic_constants, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_blowups, m)?)?;
    m.add_function(wrap_pyfunction!(classify_type, m)?)?;
    m.add_function(wrap_pyfunction!(fan_blow_up, m)?)?;
    Ok(())
}
