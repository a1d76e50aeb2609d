//! Python bindings: the named continued fractions, certified digits,
//! beta tables and generating polynomials, and the verification suites.
//!
//! Exact rationals cross the boundary as strings ("num" or "num/den"),
//! which `fractions.Fraction` parses losslessly.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use zeta3::apery;
use zeta3::beta;
use zeta3::cf::CfSpec;
use zeta3::exact::Rational;
use zeta3::oracle;
use zeta3::suites::{self, SuiteConfig};
use zeta3::theorem_a::{self, Expansion};

fn py_err(e: zeta3::Error) -> PyErr {
    match e {
        zeta3::Error::DividedByZeroConvergent { .. } => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational_str(v: &Rational) -> String {
    if v.denom() == &1.into() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn spec_by_name(name: &str) -> PyResult<CfSpec> {
    Ok(match name {
        "apery" => apery::apery_cf_spec(),
        "zeta3" => apery::zeta3_cf_spec(),
        "nesterenko" => apery::nesterenko_cf_spec(),
        "nesterenko2" => apery::nesterenko_2zeta3_cf_spec(),
        "theoremA1" => theorem_a::theorem_a_spec(Expansion::One),
        "theoremA2" => theorem_a::theorem_a_spec(Expansion::Two),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown spec '{other}'; expected apery, zeta3, nesterenko, nesterenko2, theoremA1 or theoremA2"
            )))
        }
    })
}

/// One of the named continued fractions.
#[pyclass(name = "ContinuedFraction")]
struct PyContinuedFraction {
    spec: CfSpec,
}

#[pymethods]
impl PyContinuedFraction {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyContinuedFraction { spec: spec_by_name(name)? })
    }

    /// (a_nu, b_nu) as exact strings, nu >= 1.
    fn coefficients(&self, nu: i64) -> PyResult<(String, String)> {
        if nu < 1 {
            return Err(PyValueError::new_err("coefficients start at index 1"));
        }
        let (a, b) = self.spec.coeffs(nu).map_err(py_err)?;
        Ok((rational_str(&a), rational_str(&b)))
    }

    /// Pairs (P_nu, Q_nu) for nu = 0..=n, as exact strings.
    fn convergents(&self, n: i64) -> PyResult<Vec<(String, String)>> {
        if n < 0 {
            return Err(PyValueError::new_err("depth must be nonnegative"));
        }
        let conv = self.spec.convergents(n).map_err(py_err)?;
        Ok(conv
            .iter()
            .map(|(p, q)| (rational_str(p), rational_str(q)))
            .collect())
    }

    /// P_n/Q_n as an exact string.
    fn ratio(&self, n: i64) -> PyResult<String> {
        Ok(rational_str(&self.spec.ratio(n).map_err(py_err)?))
    }

    fn name(&self) -> String {
        self.spec.name().to_string()
    }

    fn __repr__(&self) -> String {
        format!("ContinuedFraction({})", self.spec.name())
    }
}

/// zeta(3) (or 2 zeta(3) with double=True) rounded to `count` digits,
/// certified to one unit in the last place.
#[pyfunction]
#[pyo3(signature = (count, double = false))]
fn digits(count: u32, double: bool) -> PyResult<String> {
    if count == 0 || count > 1000 {
        return Err(PyValueError::new_err("digit count must be in 1..=1000"));
    }
    let tol = oracle::pow10_inv(count + 2);
    let enc = if double {
        oracle::two_zeta3_interval(&tol)
    } else {
        oracle::zeta3_interval(&tol)
    };
    Ok(oracle::certified_digits(&enc, count).expect("enclosure width within target"))
}

/// The Apery pair (u_nu, v_nu) as exact strings.
#[pyfunction]
fn apery_pair(nu: i64) -> PyResult<(String, String)> {
    if nu < 0 {
        return Err(PyValueError::new_err("index must be nonnegative"));
    }
    let p = apery::apery_pair(nu);
    Ok((rational_str(&p.u), rational_str(&p.v)))
}

/// The partial-fraction coefficient table at (alpha, nu, r):
/// dict with "beta1" and "beta2" lists of exact strings.
#[pyfunction]
fn beta_table(py: Python<'_>, alpha: i64, nu: i64, r: u32) -> PyResult<PyObject> {
    if alpha < 0 || nu < 0 || r > 3 {
        return Err(PyValueError::new_err("need alpha >= 0, nu >= 0, r <= 3"));
    }
    let t = beta::beta_table(alpha, nu, r);
    let d = pyo3::types::PyDict::new_bound(py);
    d.set_item("alpha", alpha)?;
    d.set_item("nu", nu)?;
    d.set_item("r", r)?;
    d.set_item("beta1", t.beta1.iter().map(rational_str).collect::<Vec<_>>())?;
    d.set_item("beta2", t.beta2.iter().map(rational_str).collect::<Vec<_>>())?;
    Ok(d.into())
}

/// Ascending z-coefficients of the four generating polynomials at
/// (alpha, nu, r), as lists of exact strings.
#[pyfunction]
fn beta_star(py: Python<'_>, alpha: i64, nu: i64, r: u32) -> PyResult<PyObject> {
    if alpha < 0 || nu < 0 || r > 3 {
        return Err(PyValueError::new_err("need alpha >= 0, nu >= 0, r <= 3"));
    }
    let s = beta::beta_star(alpha, nu, r).map_err(py_err)?;
    let coeffs = |p: &zeta3::UniPoly| -> Vec<String> {
        p.coeffs().iter().map(rational_str).collect()
    };
    let d = pyo3::types::PyDict::new_bound(py);
    d.set_item("p1", coeffs(&s.p1))?;
    d.set_item("p2", coeffs(&s.p2))?;
    d.set_item("p3", coeffs(&s.p3))?;
    d.set_item("p4", coeffs(&s.p4))?;
    Ok(d.into())
}

/// The pair (coeff, constant) of the z -> 1 linear form
/// coeff * zeta(2+j) - constant, as exact strings.
#[pyfunction]
fn linear_form(alpha: i64, nu: i64, r: u32, j: u32) -> PyResult<(String, String)> {
    if r > 2 || j > 1 {
        return Err(PyValueError::new_err("need r <= 2 and j <= 1"));
    }
    let (c, d) = beta::linear_form_at_1(alpha, nu, r, j).map_err(py_err)?;
    Ok((rational_str(&c), rational_str(&d)))
}

/// Run a verification suite; returns the JSON report as a string.
#[pyfunction]
#[pyo3(signature = (suite, kmax = 40, numax = 20, alpha = 3))]
fn verify(suite: &str, kmax: i64, numax: i64, alpha: i64) -> PyResult<String> {
    let cfg = SuiteConfig {
        k_max: kmax,
        nu_max_beta: numax,
        nu_max_forms: kmax.max(14),
        alpha_max: alpha.clamp(1, 3),
    };
    let report = match suite {
        "all" => suites::all_suites(&cfg),
        "nesterenko" => suites::nesterenko_suite(&cfg),
        "matrix" => suites::matrix_suite(&cfg),
        "beta" => suites::beta_suite(&cfg),
        "theoremA" => suites::theorem_a_suite(&cfg),
        other => return Err(PyValueError::new_err(format!("unknown suite '{other}'"))),
    };
    Ok(report.to_json())
}

#[pymodule]
fn zeta3_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyContinuedFraction>()?;
    m.add_function(wrap_pyfunction!(digits, m)?)?;
    m.add_function(wrap_pyfunction!(apery_pair, m)?)?;
    m.add_function(wrap_pyfunction!(beta_table, m)?)?;
    m.add_function(wrap_pyfunction!(beta_star, m)?)?;
    m.add_function(wrap_pyfunction!(linear_form, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
