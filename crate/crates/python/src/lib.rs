//! Python bindings for `delta_matroid`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use delta_matroid as dm;
use dm::format::{parse_set_system, write_set_system};
use dm::{MinorMode, SubsetMask};

fn value_error(e: dm::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A ground set of labels and a family of subsets.
#[pyclass(name = "SetSystem", module = "delta_matroid", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PySetSystem {
    inner: dm::SetSystem,
}

impl From<dm::SetSystem> for PySetSystem {
    fn from(inner: dm::SetSystem) -> Self {
        PySetSystem { inner }
    }
}

impl PySetSystem {
    fn mask(&self, labels: Vec<String>) -> PyResult<SubsetMask> {
        self.inner.ground().mask_of(labels).map_err(value_error)
    }

    fn element(&self, label: &str) -> PyResult<usize> {
        self.inner.ground().element(label).map_err(value_error)
    }

    fn trace(&self, steps: Vec<(String, String)>) -> PyResult<dm::SlideTrace> {
        let steps = steps
            .iter()
            .map(|(a, b)| Ok((self.element(a)?, self.element(b)?)))
            .collect::<PyResult<Vec<_>>>()?;
        dm::SlideTrace::from_steps(steps).map_err(value_error)
    }
}

#[pymethods]
impl PySetSystem {
    #[new]
    fn new(ground: Vec<String>, members: Vec<Vec<String>>) -> PyResult<Self> {
        let members: Vec<Vec<&str>> = members.iter().map(|m| m.iter().map(String::as_str).collect()).collect();
        let slices: Vec<&[&str]> = members.iter().map(Vec::as_slice).collect();
        let labels: Vec<&str> = ground.iter().map(String::as_str).collect();
        dm::SetSystem::from_labels(&labels, &slices).map(Self::from).map_err(value_error)
    }

    /// Parse the `ground:` / `feasible:` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_set_system(text).map(Self::from).map_err(value_error)
    }

    fn to_text(&self) -> String {
        write_set_system(&self.inner)
    }

    #[getter]
    fn ground(&self) -> Vec<String> {
        self.inner.ground().labels().to_vec()
    }

    #[getter]
    fn members(&self) -> Vec<Vec<String>> {
        self.inner
            .members()
            .into_iter()
            .map(|m| m.into_iter().map(str::to_string).collect())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, member: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.contains(self.mask(member)?))
    }

    fn __repr__(&self) -> String {
        let members: Vec<String> = self.members().iter().map(|m| format!("{{{}}}", m.join(","))).collect();
        format!("SetSystem([{}], [{}])", self.ground().join(","), members.join(" "))
    }

    fn is_delta_matroid(&self) -> PyResult<bool> {
        self.inner.check_sea().map_err(value_error)
    }

    fn is_matroid(&self) -> PyResult<bool> {
        self.inner.check_ea().map_err(value_error)
    }

    fn twist(&self, labels: Vec<String>) -> PyResult<Self> {
        self.inner.twist(self.mask(labels)?).map(Self::from).map_err(value_error)
    }

    fn dual(&self) -> Self {
        self.inner.dual().into()
    }

    /// `{"min", "max", "parity", "loops", "everywhere"}`.
    fn profile(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let p = self.inner.profile().map_err(value_error)?;
        let g = self.inner.ground();
        let labels = |m: SubsetMask| g.labels_of(m).into_iter().map(str::to_string).collect::<Vec<_>>();
        let d = pyo3::types::PyDict::new(py);
        d.set_item("min", p.min_size)?;
        d.set_item("max", p.max_size)?;
        d.set_item("parity", if p.parity == dm::Parity::Even { "even" } else { "odd" })?;
        d.set_item("loops", labels(p.loops))?;
        d.set_item("everywhere", labels(p.everywhere_elements))?;
        Ok(d.into_any().unbind())
    }

    #[pyo3(signature = (delete = Vec::new(), contract = Vec::new()))]
    fn minor(&self, delete: Vec<String>, contract: Vec<String>) -> PyResult<Self> {
        dm::minor(&self.inner, self.mask(delete)?, self.mask(contract)?)
            .map(Self::from)
            .map_err(value_error)
    }

    fn delete(&self, label: &str) -> PyResult<Self> {
        dm::matroid::minor_step(&self.inner, self.element(label)?, MinorMode::Delete)
            .map(Self::from)
            .map_err(value_error)
    }

    fn contract(&self, label: &str) -> PyResult<Self> {
        dm::matroid::minor_step(&self.inner, self.element(label)?, MinorMode::Contract)
            .map(Self::from)
            .map_err(value_error)
    }

    /// Slide `a` over `b`.
    fn slide(&self, a: &str, b: &str) -> PyResult<Self> {
        dm::handle_slide(&self.inner, self.element(a)?, self.element(b)?)
            .map(Self::from)
            .map_err(value_error)
    }

    fn apply_trace(&self, steps: Vec<(String, String)>) -> PyResult<Self> {
        dm::apply_trace(&self.inner, &self.trace(steps)?).map(Self::from).map_err(value_error)
    }

    fn is_binary(&self) -> bool {
        dm::is_binary(&self.inner)
    }

    /// `(F, A)` with `self ⋆ F = D(A)`, or `None`.
    fn binary_certificate(&self) -> Option<(Vec<String>, Vec<Vec<usize>>)> {
        let cert = dm::recognize_binary(&self.inner)?;
        let g = self.inner.ground();
        let base = g.labels_of(cert.base_feasible()).into_iter().map(str::to_string).collect();
        Some((base, matrix_rows(cert.matrix())))
    }

    fn canonical_params(&self) -> PyResult<(usize, usize, usize, usize)> {
        let p = dm::canonical_params(&self.inner).map_err(value_error)?;
        Ok((p.i, p.j, p.k, p.l))
    }

    fn is_canonical(&self) -> Option<(usize, usize, usize, usize)> {
        dm::match_canonical(&self.inner).map(|p| (p.i, p.j, p.k, p.l))
    }

    #[pyo3(signature = (depth_budget = 12))]
    fn reduce(&self, depth_budget: usize) -> PyResult<PyReduction> {
        let options = dm::ReduceOptions {
            depth_budget,
            ..dm::ReduceOptions::default()
        };
        let r = dm::reduce_with(&self.inner, &options).map_err(value_error)?;
        let canonical = dm::build_canonical(r.params);
        Ok(PyReduction {
            trace: r.trace.label_steps(&self.inner).into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
            params: (r.params.i, r.params.j, r.params.k, r.params.l),
            witness: r
                .witness
                .label_pairs(&r.result, &canonical)
                .into_iter()
                .map(|(a, b)| (a.into(), b.into()))
                .collect(),
            result: r.result.into(),
            fallback_searches: r.fallback_searches,
        })
    }

    /// A label map onto `other`, or `None`.
    fn find_isomorphism(&self, other: &PySetSystem) -> Option<BTreeMap<String, String>> {
        let iso = self.inner.find_isomorphism(&other.inner)?;
        Some(
            iso.label_pairs(&self.inner, &other.inner)
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        )
    }
}

/// The outcome of `SetSystem.reduce`.
#[pyclass(name = "Reduction", module = "delta_matroid", frozen, get_all)]
pub struct PyReduction {
    trace: Vec<(String, String)>,
    params: (usize, usize, usize, usize),
    result: PySetSystem,
    /// Labels of `result` mapped onto labels of `build_canonical(*params)`.
    witness: BTreeMap<String, String>,
    fallback_searches: usize,
}

#[pymethods]
impl PyReduction {
    fn __repr__(&self) -> String {
        let (i, j, k, l) = self.params;
        format!("Reduction(i={i} j={j} k={k} l={l}, {} slides)", self.trace.len())
    }
}

fn matrix_rows(a: &dm::SymmetricBitMatrix) -> Vec<Vec<usize>> {
    (0..a.dim()).map(|v| (0..a.dim()).map(|w| a.get(v, w) as usize).collect()).collect()
}

#[pyfunction]
fn build_canonical(i: usize, j: usize, k: usize, l: usize) -> PySetSystem {
    dm::build_canonical(dm::CanonicalParams::new(i, j, k, l)).into()
}

/// `D(A)` on ground `1..n` for a symmetric 0/1 matrix.
#[pyfunction]
fn delta_from_matrix(rows: Vec<Vec<u8>>) -> PyResult<PySetSystem> {
    let a = dm::SymmetricBitMatrix::from_entries(&rows).map_err(value_error)?;
    Ok(dm::delta_from_matrix(&a).into())
}

/// Spanning-tree matroid; vertices are `0..vertices`.
#[pyfunction]
fn graphic_matroid(vertices: usize, edges: Vec<(String, usize, usize)>) -> PyResult<PySetSystem> {
    let m = dm::graphic_matroid(vertices, &edges).map_err(value_error)?;
    Ok(m.into_carrier().into())
}

#[pyfunction]
fn has_u24_minor(system: &PySetSystem) -> PyResult<bool> {
    let m = dm::Matroid::new(system.inner.clone()).map_err(value_error)?;
    Ok(dm::has_u24_pattern(&m))
}

/// Census report as a dict; `params` maps `(i, j, k, l)` to a count.
#[pyfunction]
#[pyo3(signature = (n, depth_budget = 12))]
fn census(py: Python<'_>, n: usize, depth_budget: usize) -> PyResult<Py<PyAny>> {
    let r = py.detach(|| dm::verify_small(n, depth_budget)).map_err(value_error)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("total_families", r.total_families)?;
    d.set_item("delta_matroids", r.delta_matroids)?;
    d.set_item("binaries", r.binaries)?;
    d.set_item("matroids", r.matroids)?;
    d.set_item("even_count", r.even_count)?;
    d.set_item("odd_count", r.odd_count)?;
    d.set_item("fallback_searches", r.fallback_searches)?;
    let params: BTreeMap<(usize, usize, usize, usize), usize> =
        r.params_histogram.iter().map(|(p, &c)| ((p.i, p.j, p.k, p.l), c)).collect();
    d.set_item("params", params)?;
    let failures: Vec<(String, Vec<Vec<String>>)> = r
        .failures
        .iter()
        .map(|f| {
            let members = f.family.members().into_iter().map(|m| m.into_iter().map(str::to_string).collect());
            (f.reason.clone(), members.collect())
        })
        .collect();
    d.set_item("failures", failures)?;
    Ok(d.into_any().unbind())
}

#[pymodule]
#[pyo3(name = "delta_matroid")]
fn delta_matroid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySetSystem>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(build_canonical, m)?)?;
    m.add_function(wrap_pyfunction!(delta_from_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(graphic_matroid, m)?)?;
    m.add_function(wrap_pyfunction!(has_u24_minor, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn with_module(code: &str) {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "delta_matroid").unwrap();
            delta_matroid_py(&m).unwrap();
            let globals = pyo3::types::PyDict::new(py);
            globals.set_item("dm", m).unwrap();
            let code = CString::new(code).unwrap();
            if let Err(e) = py.run(&code, Some(&globals), None) {
                e.display(py);
                panic!("python code failed");
            }
        });
    }

    #[test]
    fn worked_example() {
        with_module(
            r#"
d = dm.SetSystem(["1", "2", "3", "4"], [["1"], ["2"], ["1", "2", "3"], ["1", "2", "4"], ["1", "3", "4"], ["2", "3", "4"]])
assert d.apply_trace([("1", "2"), ("3", "4"), ("1", "3")]).members == [["2"], ["2", "3", "4"]]
assert d.binary_certificate() == (["1"], [[0, 1, 0, 0], [1, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 0]])
r = d.reduce()
assert r.params == (1, 1, 0, 1)
assert d.apply_trace(r.trace) == r.result
assert sorted(r.witness) == sorted(r.result.ground)
assert d.profile()["parity"] == "even"
assert ["1", "2", "3"] in d
"#,
        );
    }

    #[test]
    fn errors_become_value_errors() {
        with_module(
            r#"
d = dm.SetSystem(["a", "b"], [["a"]])
for bad in (lambda: d.twist(["z"]), lambda: d.slide("a", "a"), lambda: dm.SetSystem(["a", "a"], []),
            lambda: dm.SetSystem.from_text("ground: a\nfeasible: b\n"), lambda: dm.census(5),
            lambda: dm.delta_from_matrix([[0, 1], [0, 0]])):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("no error")
"#,
        );
    }

    #[test]
    fn census_and_graphs() {
        with_module(
            r#"
r = dm.census(2)
assert r["delta_matroids"] == 15 and r["failures"] == []
k4 = dm.graphic_matroid(4, [("a", 0, 1), ("b", 0, 3), ("c", 3, 1), ("A", 2, 3), ("B", 2, 1), ("C", 0, 2)])
assert len(k4) == 16 and not dm.has_u24_minor(k4)
c = dm.build_canonical(1, 1, 0, 1)
assert c.is_canonical() == (1, 1, 0, 1)
"#,
        );
    }
}
