//! Python bindings for the frobcount library: rings, ideals, splittings,
//! and the counting verifier.

use frobcount::frobenius::{
    bracket_power as rs_bracket_power, fedder_is_f_pure, frobenius_root as rs_frobenius_root,
    is_uniformly_compatible, SplittingMap,
};
use frobcount::systems::{
    check_bounds, system_from_splitting, verify_main_theorem, IdealSystem, Verdict,
};
use frobcount::{parse_polynomial, Ideal, MonomialOrder, Polynomial, PrimeField};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::sync::Arc;

fn err(e: frobcount::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Ring", frozen)]
struct PyRing {
    inner: Arc<frobcount::Ring>,
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(p: u32, vars: Vec<String>) -> PyResult<Self> {
        let inner = frobcount::Ring::new(PrimeField::new(p).map_err(err)?, vars, MonomialOrder::GrevLex)
            .map_err(err)?;
        Ok(PyRing { inner })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.vars().to_vec()
    }

    fn poly(&self, src: &str) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: parse_polynomial(src, &self.inner).map_err(err)? })
    }

    fn ideal(&self, gens: Vec<String>) -> PyResult<PyIdeal> {
        let gens = gens
            .iter()
            .map(|g| parse_polynomial(g, &self.inner))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        Ok(PyIdeal { inner: Ideal::new(&self.inner, gens).map_err(err)? })
    }

    fn splitting(&self, e: u32, u: &str) -> PyResult<PySplitting> {
        let u = parse_polynomial(u, &self.inner).map_err(err)?;
        Ok(PySplitting { inner: SplittingMap::new(&self.inner, e, u).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Ring(p={}, vars={:?})", self.inner.p(), self.inner.vars())
    }
}

#[pyclass(name = "Polynomial", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: Polynomial,
}

#[pymethods]
impl PyPolynomial {
    fn __add__(&self, other: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: self.inner.add(&other.inner).map_err(err)? })
    }

    fn __mul__(&self, other: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: self.inner.mul(&other.inner).map_err(err)? })
    }

    fn __pow__(&self, e: u64, _mod: Option<u64>) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: self.inner.pow(e).map_err(err)? })
    }

    fn __eq__(&self, other: &PyPolynomial) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner.render())
    }
}

#[pyclass(name = "Ideal", frozen, from_py_object)]
#[derive(Clone)]
struct PyIdeal {
    inner: Ideal,
}

#[pymethods]
impl PyIdeal {
    fn sum(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.sum(&other.inner).map_err(err)? })
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.intersect(&other.inner).map_err(err)? })
    }

    fn colon(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.colon(&other.inner).map_err(err)? })
    }

    fn contains(&self, f: &PyPolynomial) -> PyResult<bool> {
        self.inner.contains(&f.inner).map_err(err)
    }

    fn contains_ideal(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.contains_ideal(&other.inner).map_err(err)
    }

    fn equal(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.equal(&other.inner).map_err(err)
    }

    fn dimension(&self) -> PyResult<usize> {
        self.inner.dimension().map_err(err)
    }

    fn embedding_dimension(&self) -> PyResult<usize> {
        self.inner.embedding_dimension().map_err(err)
    }

    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        Ok(self.inner.basis().elements().iter().map(|g| g.render()).collect())
    }

    fn bracket_power(&self, e: u32) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: rs_bracket_power(&self.inner, e).map_err(err)? })
    }

    fn frobenius_root(&self, e: u32) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: rs_frobenius_root(&self.inner, e).map_err(err)? })
    }

    fn is_f_pure(&self) -> PyResult<bool> {
        fedder_is_f_pure(&self.inner).map_err(err)
    }

    fn is_uniformly_compatible(&self, e: u32) -> PyResult<bool> {
        is_uniformly_compatible(&self.inner, e).map_err(err)
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.inner.render())
    }
}

#[pyclass(name = "Splitting", frozen)]
struct PySplitting {
    inner: SplittingMap,
}

#[pymethods]
impl PySplitting {
    fn is_splitting(&self) -> PyResult<bool> {
        self.inner.is_splitting().map_err(err)
    }

    fn apply(&self, f: &PyPolynomial) -> PyResult<PyPolynomial> {
        Ok(PyPolynomial { inner: self.inner.apply(&f.inner).map_err(err)? })
    }

    fn is_compatible(&self, ideal: &PyIdeal) -> PyResult<bool> {
        self.inner.is_compatible(&ideal.inner).map_err(err)
    }

    /// All compatibly split squarefree monomial ideals, in canonical order.
    fn enumerate_compatible(&self) -> PyResult<Vec<String>> {
        Ok(self
            .inner
            .enumerate_compatible_squarefree()
            .map_err(err)?
            .iter()
            .map(|m| m.render(self.inner.ring()))
            .collect())
    }

    /// Dimension-indexed counts of the compatible prime members and the
    /// C(n, d) bound table.
    fn count_primes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let ss = system_from_splitting(&self.inner).map_err(err)?;
        let counts = ss.system.count_by_dimension().map_err(err)?;
        let bounds = check_bounds(&counts, self.inner.ring().num_vars(), true);
        let out = PyDict::new(py);
        let c = PyDict::new(py);
        for (d, v) in &counts {
            c.set_item(d, v)?;
        }
        out.set_item("counts", c)?;
        out.set_item("total", bounds.total)?;
        out.set_item("total_bound", bounds.total_bound)?;
        out.set_item("all_within", bounds.rows.iter().all(|r| r.within) && bounds.total_within)?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Splitting(e={}, u={})", self.inner.e(), self.inner.u().render())
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Undecidable => "undecidable",
    }
}

/// Check a family of ideals as a system: pseudo-primality and
/// intersection compatibility.
#[pyfunction]
#[pyo3(signature = (ring, ideals, max_members = 12))]
fn check_system<'py>(
    py: Python<'py>,
    ring: &PyRing,
    ideals: Vec<PyIdeal>,
    max_members: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let members = ideals.into_iter().map(|i| i.inner).collect();
    let system = IdealSystem::new(&ring.inner, members).map_err(err)?;
    let pseudo = system.is_pseudo_prime().map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("pseudo_prime", verdict_str(pseudo.verdict))?;
    if let Some(w) = &pseudo.witness {
        out.set_item("pseudo_prime_witness", w)?;
    }
    if pseudo.verdict != Verdict::Undecidable {
        let compat = system.is_intersection_compatible(max_members).map_err(err)?;
        out.set_item("intersection_compatible", verdict_str(compat.verdict))?;
        if let Some(v) = &compat.violation {
            out.set_item("offending_sum", &v.sum)?;
        }
        let counts = system.count_by_dimension().map_err(err)?;
        let c = PyDict::new(py);
        for (d, v) in &counts {
            c.set_item(d, v)?;
        }
        out.set_item("counts", c)?;
    }
    Ok(out)
}

/// Exhaustive sharpness verification over coordinate-prime arrangements.
#[pyfunction]
#[pyo3(signature = (n, p = 2))]
fn verify_bound<'py>(py: Python<'py>, n: usize, p: u32) -> PyResult<Bound<'py, PyDict>> {
    let rep = verify_main_theorem(n, p).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("n", rep.n)?;
    out.set_item("subsets_checked", rep.subsets_checked)?;
    out.set_item("compatible_subsets", rep.compatible_subsets)?;
    out.set_item("max_e", rep.max_e.clone())?;
    out.set_item("binomials", rep.binomials.clone())?;
    out.set_item("sharp", rep.sharp_everywhere())?;
    out.set_item("upper_bound_violations", rep.upper_bound_violations)?;
    out.set_item(
        "equality_only_at_full_arrangement",
        rep.simultaneous_equality_is_full_arrangement,
    )?;
    Ok(out)
}

#[pymodule]
fn frobcount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PySplitting>()?;
    m.add_function(wrap_pyfunction!(check_system, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bound, m)?)?;
    Ok(())
}
