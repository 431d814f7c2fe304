//! Python bindings. Graphons, graphs and spectra are wrapped as classes;
//! structured results (reports, certificates) come back as plain dicts.

use graphon_spectra as gs;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: gs::Error) -> PyErr {
    if e.is_refusal() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "StepGraphon", module = "pygraphon", frozen)]
struct PyStepGraphon {
    inner: gs::StepGraphon,
}

#[pymethods]
impl PyStepGraphon {
    #[new]
    fn new(weights: Vec<f64>, values: Vec<Vec<f64>>) -> PyResult<Self> {
        gs::StepGraphon::new(weights, values).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn constant(c: f64) -> PyResult<Self> {
        gs::StepGraphon::constant(c).map(Self::from).map_err(err)
    }

    /// Indicator of `[0,a]²`.
    #[staticmethod]
    fn indicator_square(a: f64) -> PyResult<Self> {
        gs::StepGraphon::indicator_square(a).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn from_graph(g: &PySimpleGraph) -> PyResult<Self> {
        gs::graph_to_graphon(&g.inner).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str::<gs::StepGraphon>(text)
            .map(Self::from)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[getter]
    fn weights(&self) -> Vec<f64> {
        self.inner.weights().to_vec()
    }

    #[getter]
    fn values(&self) -> Vec<Vec<f64>> {
        self.inner.rows()
    }

    #[getter]
    fn num_blocks(&self) -> usize {
        self.inner.num_blocks()
    }

    fn l1_norm(&self) -> f64 {
        self.inner.l1_norm()
    }

    fn l2_norm_sq(&self) -> f64 {
        self.inner.l2_norm_sq()
    }

    fn is_zero_one(&self) -> bool {
        self.inner.is_zero_one()
    }

    fn permuted(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.permuted(&perm).map(Self::from).map_err(err)
    }

    #[pyo3(signature = (zero_tol = gs::spectral::DEFAULT_ZERO_TOL, group_tol = gs::spectral::DEFAULT_GROUP_TOL))]
    fn spectrum(&self, zero_tol: f64, group_tol: f64) -> PyResult<PySpectrum> {
        let d = gs::decompose(&self.inner, zero_tol, group_tol).map_err(err)?;
        Ok(PySpectrum { inner: d.spectrum })
    }

    /// `[t(C_3, W), ..., t(C_kmax, W)]`.
    #[pyo3(signature = (k_max = gs::densities::DEFAULT_K_MAX))]
    fn cycle_profile(&self, k_max: usize) -> PyResult<Vec<f64>> {
        gs::cycle_profile(&self.inner, k_max)
            .map(|p| p.values)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "StepGraphon(weights={:?}, values={:?})",
            self.inner.weights(),
            self.inner.rows()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl From<gs::StepGraphon> for PyStepGraphon {
    fn from(inner: gs::StepGraphon) -> Self {
        Self { inner }
    }
}

#[pyclass(name = "SimpleGraph", module = "pygraphon", frozen)]
struct PySimpleGraph {
    inner: gs::SimpleGraph,
}

#[pymethods]
impl PySimpleGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        gs::SimpleGraph::new(n, edges).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        gs::SimpleGraph::complete(n).into()
    }

    #[staticmethod]
    fn cycle(k: usize) -> PyResult<Self> {
        gs::SimpleGraph::cycle(k).map(Self::from).map_err(err)
    }

    /// Path on `n` vertices.
    #[staticmethod]
    fn path(n: usize) -> Self {
        gs::SimpleGraph::path(n).into()
    }

    /// Edge list (`n <k>` header, one `a b` pair per line) or JSON.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        gs::SimpleGraph::parse(text).map(Self::from).map_err(err)
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "SimpleGraph(n={}, edges={})",
            self.inner.num_vertices(),
            self.inner.num_edges()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl From<gs::SimpleGraph> for PySimpleGraph {
    fn from(inner: gs::SimpleGraph) -> Self {
        Self { inner }
    }
}

#[pyclass(name = "Spectrum", module = "pygraphon", frozen)]
struct PySpectrum {
    inner: gs::Spectrum,
}

#[pymethods]
impl PySpectrum {
    /// Nonzero eigenvalues, descending.
    #[getter]
    fn eigenvalues(&self) -> Vec<f64> {
        self.inner.eigenvalues.clone()
    }

    /// `(value, multiplicity)` per group of numerically equal eigenvalues.
    #[getter]
    fn groups(&self) -> Vec<(f64, usize)> {
        self.inner.groups.clone()
    }

    fn power_sum(&self, k: u32) -> f64 {
        self.inner.power_sum(k)
    }

    #[pyo3(signature = (other, tol = gs::spectral::DEFAULT_MATCH_TOL))]
    fn equals(&self, other: &Self, tol: f64) -> bool {
        gs::spectra_equal(&self.inner, &other.inner, tol)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Spectrum({:?})", self.inner.eigenvalues)
    }
}

/// Spectrum, eigenfunctions and weights of the kernel operator.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, w: &PyStepGraphon) -> PyResult<Bound<'py, PyAny>> {
    let d = gs::spectral::decompose_default(&w.inner).map_err(err)?;
    to_py(py, &serde_json::json!({
        "spectrum": d.spectrum,
        "eigenfunctions": d.eigenvectors,
        "weights": d.weights,
        "parseval_residual": gs::parseval_residual(&w.inner, &d),
    }))
}

#[pyfunction]
#[pyo3(signature = (u, w, tol = gs::spectral::DEFAULT_MATCH_TOL))]
fn is_cospectral(u: &PyStepGraphon, w: &PyStepGraphon, tol: f64) -> PyResult<bool> {
    gs::is_cospectral(&u.inner, &w.inner, tol).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (u, w, k_max = gs::densities::DEFAULT_K_MAX, tol = 1e-8))]
fn profiles_match(u: &PyStepGraphon, w: &PyStepGraphon, k_max: usize, tol: f64) -> PyResult<bool> {
    gs::profiles_match(&u.inner, &w.inner, k_max, tol).map_err(err)
}

/// `t(F, W)` by exact block enumeration.
#[pyfunction]
fn density(f: &PySimpleGraph, w: &PyStepGraphon) -> PyResult<f64> {
    gs::density_direct(&f.inner, &w.inner).map_err(err)
}

#[pyfunction]
fn hom_count(f: &PySimpleGraph, g: &PySimpleGraph) -> PyResult<u128> {
    gs::hom_count(&f.inner, &g.inner).map_err(err)
}

#[pyfunction]
fn cut_norm<'py>(py: Python<'py>, u: &PyStepGraphon, w: &PyStepGraphon) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &gs::cut_norm_exact(&u.inner, &w.inner).map_err(err)?)
}

/// `(lower, upper)` bounds on the cut distance.
#[pyfunction]
#[pyo3(signature = (u, w, strategy = "greedy"))]
fn cut_distance_bounds(u: &PyStepGraphon, w: &PyStepGraphon, strategy: &str) -> PyResult<(f64, f64)> {
    let strategy = match strategy {
        "greedy" => gs::SearchStrategy::Greedy,
        "exhaustive" => gs::SearchStrategy::Exhaustive,
        other => {
            return Err(PyValueError::new_err(format!(
                "strategy must be 'greedy' or 'exhaustive', got {other:?}"
            )))
        }
    };
    let upper = gs::cut_distance_upper(&u.inner, &w.inner, strategy).map_err(err)?;
    Ok((gs::mean_gap_lower_bound(&u.inner, &w.inner), upper))
}

#[pyfunction]
fn discriminate<'py>(py: Python<'py>, u: &PyStepGraphon, w: &PyStepGraphon) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &gs::discriminate(&u.inner, &w.inner).map_err(err)?)
}

/// Intertwiner between cospectral graphons with its residuals.
#[pyfunction]
#[pyo3(signature = (u, w, tol = gs::spectral::DEFAULT_MATCH_TOL))]
fn build_intertwiner<'py>(
    py: Python<'py>,
    u: &PyStepGraphon,
    w: &PyStepGraphon,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let t = gs::build_intertwiner(&u.inner, &w.inner, tol).map_err(err)?;
    let residual = t.intertwining_residual(&u.inner, &w.inner).map_err(err)?;
    to_py(py, &serde_json::json!({
        "weights": t.weights,
        "matrix": t.matrix,
        "unitarity_residual": t.unitarity_residual(),
        "intertwining_residual": residual,
    }))
}

#[pyfunction]
fn inapprox_check<'py>(
    py: Python<'py>,
    u: &PyStepGraphon,
    w: &PyStepGraphon,
    u_prime: &PyStepGraphon,
    w_prime: &PyStepGraphon,
) -> PyResult<Bound<'py, PyAny>> {
    let c = gs::inapprox_check(&u.inner, &w.inner, &u_prime.inner, &w_prime.inner).map_err(err)?;
    to_py(py, &c)
}

#[pyfunction]
#[pyo3(signature = (w, n, seed = 0))]
fn sample_graph(w: &PyStepGraphon, n: usize, seed: u64) -> PyResult<PySimpleGraph> {
    let spec = gs::SampleSpec::new(w.inner.clone(), n, seed).map_err(err)?;
    Ok(gs::sample_graph(&spec).into())
}

/// Nonzero spectrum of `W_G`, i.e. of `A_G / n`.
#[pyfunction]
fn graph_spectrum(g: &PySimpleGraph) -> PyResult<PySpectrum> {
    let inner = gs::sampling::graph_spectrum(&g.inner).map_err(err)?;
    Ok(PySpectrum { inner })
}

#[pyfunction]
#[pyo3(signature = (w, sizes, seed = 0))]
fn convergence_report<'py>(
    py: Python<'py>,
    w: &PyStepGraphon,
    sizes: Vec<usize>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &gs::convergence_report(&w.inner, &sizes, seed).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (sizes = gs::cospectral::DEMO_SIZES.to_vec(), seeds = (0..20).collect()))]
fn theorem42_demo<'py>(py: Python<'py>, sizes: Vec<usize>, seeds: Vec<u64>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &gs::theorem42_demo(&sizes, &seeds).map_err(err)?)
}

#[pymodule]
fn pygraphon(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStepGraphon>()?;
    m.add_class::<PySimpleGraph>()?;
    m.add_class::<PySpectrum>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(is_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(profiles_match, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(cut_norm, m)?)?;
    m.add_function(wrap_pyfunction!(cut_distance_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(discriminate, m)?)?;
    m.add_function(wrap_pyfunction!(build_intertwiner, m)?)?;
    m.add_function(wrap_pyfunction!(inapprox_check, m)?)?;
    m.add_function(wrap_pyfunction!(sample_graph, m)?)?;
    m.add_function(wrap_pyfunction!(graph_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_report, m)?)?;
    m.add_function(wrap_pyfunction!(theorem42_demo, m)?)?;
    m.add("GENERATOR", gs::sampling::GENERATOR)?;
    Ok(())
}
