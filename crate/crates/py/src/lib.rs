//! Python bindings. Compositions use the CLI syntax (`"2,1@0"`), partitions
//! are comma lists, polynomials and reports travel as JSON strings.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tanisaki::glaction::{apply_operator_family, parse_op_word, AlgebraKind, WeightFamily};
use tanisaki::json::poly_from_json;
use tanisaki::quotient::{basis as quotient_basis, tanisaki_generators_e, tanisaki_generators_h, GeneratorForm};
use tanisaki::suites::{run_suite, Suite};
use tanisaki::{tableaux, Composition, Error, IndexWindow, Partition, Poly};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::NonTerminating { .. } | Error::NoSolution | Error::NotDivisible => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn composition(s: &str) -> PyResult<Composition> {
    s.parse().map_err(py_err)
}

fn partition(s: &str) -> PyResult<Partition> {
    s.parse().map_err(py_err)
}

fn kind(mu: Option<&str>, nu: &Composition, form: &str) -> PyResult<AlgebraKind> {
    let form: GeneratorForm = form.parse().map_err(py_err)?;
    match mu {
        None => Ok(AlgebraKind::Coinvariant),
        Some(mu) => {
            let mu = composition(mu)?;
            if mu.size() != nu.size() {
                return Err(PyValueError::new_err(format!("mu has size {} but nu has size {}", mu.size(), nu.size())));
            }
            Ok(AlgebraKind::Tanisaki(mu, form))
        }
    }
}

/// Dimension of `C_nu`, or of `C^mu_nu` when `mu` is given.
#[pyfunction]
#[pyo3(signature = (nu, mu=None))]
fn dim(nu: &str, mu: Option<&str>) -> PyResult<usize> {
    let nu = composition(nu)?;
    Ok(kind(mu, &nu, "h")?.quotient(&nu).map_err(py_err)?.dim())
}

/// Graded dimensions indexed by the doubled degree.
#[pyfunction]
#[pyo3(signature = (nu, mu=None))]
fn hilbert(nu: &str, mu: Option<&str>) -> PyResult<Vec<i64>> {
    let nu = composition(nu)?;
    Ok(kind(mu, &nu, "h")?.quotient(&nu).map_err(py_err)?.hilbert().coeffs().to_vec())
}

/// Normal-form basis representatives as strings.
#[pyfunction]
#[pyo3(signature = (nu, mu=None))]
fn basis(nu: &str, mu: Option<&str>) -> PyResult<Vec<String>> {
    let nu = composition(nu)?;
    let q = kind(mu, &nu, "h")?.quotient(&nu).map_err(py_err)?;
    Ok(quotient_basis(&q).iter().map(|z| z.rep().to_string()).collect())
}

/// Generators of `I^mu_nu` in the `h` or `e` form.
#[pyfunction]
#[pyo3(signature = (mu, nu, form="h"))]
fn generators(mu: &str, nu: &str, form: &str) -> PyResult<Vec<String>> {
    let (mu, nu) = (composition(mu)?, composition(nu)?);
    let gens = match form.parse().map_err(py_err)? {
        GeneratorForm::H => tanisaki_generators_h(&mu, &nu),
        GeneratorForm::E => tanisaki_generators_e(&mu, &nu),
    }
    .map_err(py_err)?;
    Ok(gens.iter().map(Poly::to_string).collect())
}

#[pyfunction]
fn kostka(lam: &str, nu: &str) -> PyResult<u64> {
    Ok(tableaux::kostka(&partition(lam)?, &composition(nu)?))
}

#[pyfunction]
fn column_strict_count(lam: &str, nu: &str) -> PyResult<u64> {
    Ok(tableaux::count_column_strict(&partition(lam)?, &composition(nu)?))
}

/// Coefficients of `K_{lam,mu}(t)`.
#[pyfunction]
fn kostka_foulkes(lam: &str, mu: &str) -> PyResult<Vec<i64>> {
    let (lam, mu) = (partition(lam)?, composition(mu)?);
    if lam.size() != mu.size() {
        return Err(PyValueError::new_err("sizes differ"));
    }
    Ok(tableaux::kostka_foulkes(&lam, &mu).coeffs().to_vec())
}

/// Applies an operator word to an element at weight `nu`; returns the weight family as JSON.
#[pyfunction]
#[pyo3(signature = (op, nu, mu=None, elem=None, window=None, form="h"))]
fn act(op: &str, nu: &str, mu: Option<&str>, elem: Option<&str>, window: Option<(i64, i64)>, form: &str) -> PyResult<String> {
    let nu = composition(nu)?;
    let n = nu.size();
    let word = parse_op_word(op).map_err(py_err)?;
    let window = match window {
        Some((lo, hi)) => IndexWindow::new(lo, hi),
        None => IndexWindow::new(nu.lo().min(1), nu.hi().max(n as i64) + 1),
    }
    .map_err(py_err)?;
    let f = match elem {
        Some(s) => {
            let value: serde_json::Value = serde_json::from_str(s).map_err(|e| PyValueError::new_err(e.to_string()))?;
            poly_from_json(&value, n).map_err(py_err)?
        }
        None => Poly::one(n),
    };
    let mut family = WeightFamily::new(n, window, kind(mu, &nu, form)?);
    family.insert_poly(&nu, &f).map_err(py_err)?;
    let image = apply_operator_family(&word, &family).map_err(py_err)?;
    Ok(serde_json::to_string(&image).expect("serializable"))
}

/// Runs a verification suite; returns `(passed, report as JSON)`.
#[pyfunction]
#[pyo3(signature = (suite, n, window=None))]
fn verify(py: Python<'_>, suite: &str, n: usize, window: Option<(i64, i64)>) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(py_err)?;
    let window = window.map(|(lo, hi)| IndexWindow::new(lo, hi)).transpose().map_err(py_err)?;
    let report = py.detach(|| run_suite(suite, n, window));
    Ok((report.passed, serde_json::to_string(&report).expect("serializable")))
}

#[pymodule]
fn tanisaki_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dim, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(column_strict_count, m)?)?;
    m.add_function(wrap_pyfunction!(kostka_foulkes, m)?)?;
    m.add_function(wrap_pyfunction!(act, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_example_through_the_bindings() {
        assert_eq!(dim("1,2,1", Some("1,2,1")).unwrap(), 5);
        assert_eq!(hilbert("1,2,1", Some("1,2,1")).unwrap(), [1, 0, 2, 0, 2]);
        assert_eq!(basis("2,1", None).unwrap().len(), 3);
        assert!(generators("1,2,1", "1,2,1", "e").unwrap().contains(&"x1*x4".to_string()));
        assert_eq!(kostka_foulkes("2,1", "1,1,1").unwrap(), [0, 1, 1]);
        let out: serde_json::Value = serde_json::from_str(&act("F_1", "2@1", None, None, None, "h").unwrap()).unwrap();
        assert_eq!(out["components"][0]["element"][0]["num"], "2");
    }
}
