//! Python bindings. Labels are 1-based on the Python side, as in the CLI.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

use fsgraph_core::coxeter::{attempt_reduction, reduce_anchored, AnchoredWalk, LabeledWalk, DEFAULT_MOVE_CAP};
use fsgraph_core::cyclespace::{cycle_rank, cycle_space_dimension, enumerate_hexagons, enumerate_squares};
use fsgraph_core::fs::{all_components, fs_components_with_budget, fs_is_connected_with_budget, star_components_predicted, DEFAULT_BUDGET};
use fsgraph_core::theorems::{spider_vs_complement_cycle, spider_vs_complement_fruit};
use fsgraph_core::verify::{self, SweepOptions, DEFAULT_SEED};
use fsgraph_core::{make_family, EdgeLabel, Error, FamilySpec, Permutation};

create_exception!(fsgraph, BudgetExceeded, PyRuntimeError);
create_exception!(fsgraph, TheoremViolation, PyRuntimeError);

fn err(e: Error) -> PyErr {
    match e {
        Error::Capability(_) => BudgetExceeded::new_err(e.to_string()),
        Error::TheoremViolation(_) | Error::Internal(_) => TheoremViolation::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Converts any serializable value into plain Python objects.
fn to_py<T: Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let value = serde_json::to_value(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    value_to_py(py, &value)
}

fn value_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_pyobject(py)?.into_any().unbind(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(value_to_py(py, x)?)?;
            }
            list.into_any().unbind()
        }
        Value::Object(m) => {
            let dict = PyDict::new(py);
            for (k, x) in m {
                dict.set_item(k, value_to_py(py, x)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

/// A simple graph on vertices `1..=n`.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: fsgraph_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == 0 || v == 0 {
                return Err(PyValueError::new_err("vertices are numbered from 1"));
            }
            zero.push((u - 1, v - 1));
        }
        let inner = fsgraph_core::Graph::from_edges(n, &zero).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Builds a named family member, e.g. `"spider:3,2,1"` or `"co(cycle:7)"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let spec: FamilySpec = spec.parse().map_err(err)?;
        Ok(PyGraph { inner: make_family(&spec).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_biconnected(&self) -> bool {
        self.inner.is_biconnected().0
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    fn domination_number(&self) -> usize {
        self.inner.domination_number()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Component census of FS(X, Y): `{"count", "sizes", "reps"}`.
#[pyfunction]
#[pyo3(signature = (x, y, budget = DEFAULT_BUDGET))]
fn fs_components(py: Python<'_>, x: &PyGraph, y: &PyGraph, budget: u64) -> PyResult<Py<PyAny>> {
    let census = py.detach(|| fs_components_with_budget(&x.inner, &y.inner, budget)).map_err(err)?;
    to_py(py, &census)
}

#[pyfunction]
#[pyo3(signature = (x, y, budget = DEFAULT_BUDGET))]
fn fs_is_connected(py: Python<'_>, x: &PyGraph, y: &PyGraph, budget: u64) -> PyResult<bool> {
    py.detach(|| fs_is_connected_with_budget(&x.inner, &y.inner, budget)).map_err(err)
}

/// Wilson's prediction for FS(Star_n, Y), e.g. `{"kind": "ThetaSix"}`.
#[pyfunction]
fn star_prediction(py: Python<'_>, y: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &star_components_predicted(&y.inner).map_err(err)?)
}

/// Closed-form connectivity of FS(Spider(legs), complement(Cycle_n)).
#[pyfunction]
fn spider_complement_cycle(legs: Vec<usize>) -> PyResult<bool> {
    spider_vs_complement_cycle(&legs).map_err(err)
}

/// Closed-form connectivity of FS(Spider(legs), complement(FruitCycle_n)).
#[pyfunction]
fn spider_complement_fruit(legs: Vec<usize>) -> PyResult<bool> {
    spider_vs_complement_fruit(&legs).map_err(err)
}

#[derive(Serialize)]
struct CycleRow {
    representative: Permutation,
    vertices: usize,
    edges: usize,
    dimension: usize,
    rank_squares: usize,
    rank_squares_hexagons: usize,
}

/// Per component: cycle-space dimension and the ranks spanned by squares and hexagons.
#[pyfunction]
#[pyo3(signature = (x, y, budget = DEFAULT_BUDGET))]
fn cycle_space(py: Python<'_>, x: &PyGraph, y: &PyGraph, budget: u64) -> PyResult<Py<PyAny>> {
    let rows = py
        .detach(|| {
            all_components(&x.inner, &y.inner, budget)?
                .iter()
                .map(|c| {
                    let squares = enumerate_squares(c);
                    let mut both = squares.clone();
                    both.extend(enumerate_hexagons(c));
                    Ok(CycleRow {
                        representative: c.vertices[0].clone(),
                        vertices: c.vertex_count(),
                        edges: c.edge_count(),
                        dimension: cycle_space_dimension(c)?,
                        rank_squares: cycle_rank(&squares, c)?,
                        rank_squares_hexagons: cycle_rank(&both, c)?,
                    })
                })
                .collect::<fsgraph_core::Result<Vec<_>>>()
        })
        .map_err(err)?;
    to_py(py, &rows)
}

/// Reduces an anchored walk in FS(Cycle_n, Y). `start` is 1-based one-line
/// notation; labels are strings such as `"12"` or `"3-11"`.
#[pyfunction]
fn reduce(py: Python<'_>, y: &PyGraph, start: Vec<usize>, labels: Vec<String>) -> PyResult<Py<PyAny>> {
    let start = Permutation::try_from(start).map_err(err)?;
    let labels = labels.iter().map(|s| s.parse::<EdgeLabel>()).collect::<fsgraph_core::Result<Vec<_>>>().map_err(err)?;
    let walk = AnchoredWalk::new(LabeledWalk { start, labels }).map_err(err)?;
    let r = if y.inner.domination_number() >= 2 {
        reduce_anchored(&walk, &y.inner)
    } else {
        attempt_reduction(&walk, &y.inner, DEFAULT_MOVE_CAP)
    }
    .map_err(err)?;
    to_py(py, &r)
}

/// Runs a named theorem sweep and returns its report without per-instance records.
#[pyfunction]
#[pyo3(signature = (theorem, n_max = None, seed = DEFAULT_SEED, records = false))]
fn verify_theorem(py: Python<'_>, theorem: &str, n_max: Option<usize>, seed: u64, records: bool) -> PyResult<Py<PyAny>> {
    let opts = SweepOptions { n_max, seed, ..SweepOptions::default() };
    let mut rep = py.detach(|| verify::run(theorem, &opts)).map_err(err)?;
    if !records {
        rep.records.clear();
    }
    to_py(py, &rep)
}

#[pymodule]
fn fsgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(fs_components, m)?)?;
    m.add_function(wrap_pyfunction!(fs_is_connected, m)?)?;
    m.add_function(wrap_pyfunction!(star_prediction, m)?)?;
    m.add_function(wrap_pyfunction!(spider_complement_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(spider_complement_fruit, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_space, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("TheoremViolation", m.py().get_type::<TheoremViolation>())?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    Ok(())
}
