//! Python bindings: `Loop`, `NearRing` and `Ring` classes plus the report
//! functions of the command line. Reports are returned as dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use loopnr::decomp;
use loopnr::format::{canonical_json, StructureFile};
use loopnr::generators::{catalog as corpus_catalog, resolve, Structure};
use loopnr::homs::validate_lnr_hom;
use loopnr::report::{self, AnalyzeOptions};
use loopnr::{rings as ring_ops, Bounds, CayleyLoop, ElementSubset, FiniteRing, LoopNearRing, Table};

create_exception!(loopnr, LoopnrError, PyException, "Base class for loopnr errors.");
create_exception!(loopnr, ValidationError, LoopnrError, "A structure or map fails an axiom.");
create_exception!(loopnr, ParseError, LoopnrError, "Malformed input or spec.");
create_exception!(loopnr, BoundExceeded, LoopnrError, "A size limit was exceeded.");
create_exception!(loopnr, HypothesisFailed, LoopnrError, "A precondition of the computation does not hold.");

fn py_err(e: loopnr::Error) -> PyErr {
    use loopnr::Error as E;
    let msg = e.to_string();
    match e {
        E::Validation(_) | E::NotASubloop | E::NotIdempotent(_) | E::ZeroIdempotent | E::NotAnIdeal => {
            ValidationError::new_err(msg)
        }
        E::Parse(_) => ParseError::new_err(msg),
        E::BoundExceeded { .. } | E::LimitReached(_) => BoundExceeded::new_err(msg),
        _ => HypothesisFailed::new_err(msg),
    }
}

fn invalid(e: loopnr::ValidationError) -> PyErr {
    ValidationError::new_err(e.to_string())
}

fn to_py_json(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (canonical_json(v),))?.unbind())
}

fn subset(n: usize, members: &[usize]) -> PyResult<ElementSubset> {
    if let Some(&x) = members.iter().find(|&&x| x >= n) {
        return Err(ValidationError::new_err(format!("element {x} out of range for n = {n}")));
    }
    Ok(ElementSubset::from_members(n, members.iter().copied()))
}

fn lists(sets: &[ElementSubset]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.members()).collect()
}

/// A finite loop given by its Cayley table with zero at index 0.
#[pyclass(name = "Loop", module = "loopnr", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyLoop(CayleyLoop);

#[pymethods]
impl PyLoop {
    #[new]
    fn new(table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyLoop(loopnr::loops::validate_loop(&table).map_err(invalid)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn add(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.add(a, b))
    }

    /// The `x` with `a + x = b`.
    fn ldiff(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.ldiff(a, b))
    }

    /// The `y` with `y + a = b`.
    fn rdiff(&self, b: usize, a: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.rdiff(b, a))
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.0.add_table().to_rows()
    }

    fn is_associative(&self) -> bool {
        self.0.is_associative()
    }

    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        self.0.associativity_witness()
    }

    fn subloop_closure(&self, seed: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.0.subloop_closure(&subset(self.0.n(), &seed)?).members())
    }

    fn subloops(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(lists(&self.0.enumerate_subloops(&Bounds::default()).map_err(py_err)?))
    }

    fn is_normal_subloop(&self, members: Vec<usize>) -> PyResult<bool> {
        self.0.is_normal_subloop(&subset(self.0.n(), &members)?).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Loop(n={})", self.0.n())
    }
}

fn check(n: usize, xs: &[usize]) -> PyResult<()> {
    match xs.iter().find(|&&x| x >= n) {
        Some(x) => Err(ValidationError::new_err(format!("element {x} out of range for n = {n}"))),
        None => Ok(()),
    }
}

/// A finite right loop near-ring.
#[pyclass(name = "NearRing", module = "loopnr", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyNearRing(LoopNearRing);

#[pymethods]
impl PyNearRing {
    #[new]
    fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, one: usize) -> PyResult<Self> {
        Ok(PyNearRing(loopnr::nearrings::validate_lnr(&add, &mul, one).map_err(invalid)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn one(&self) -> usize {
        self.0.one()
    }

    fn add(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.add(a, b))
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.mul(a, b))
    }

    fn additive(&self) -> PyLoop {
        PyLoop(self.0.additive().clone())
    }

    fn is_zero_symmetric(&self) -> bool {
        self.0.is_zero_symmetric()
    }

    fn units(&self) -> Vec<usize> {
        self.0.units().set.members()
    }

    fn idempotents(&self) -> Vec<usize> {
        self.0.idempotents().members()
    }

    fn is_n_subloop(&self, members: Vec<usize>) -> PyResult<bool> {
        Ok(self.0.is_n_subloop(&subset(self.0.n(), &members)?))
    }

    fn n_subloops(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(lists(&self.0.enumerate_n_subloops(&Bounds::default()).map_err(py_err)?))
    }

    fn maximal_n_subloops(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(lists(&self.0.maximal_n_subloops(&Bounds::default()).map_err(py_err)?))
    }

    fn annihilator(&self, e: usize) -> PyResult<Vec<usize>> {
        check(self.0.n(), &[e])?;
        Ok(self.0.annihilator(e).map_err(py_err)?.members())
    }

    /// Locality decided by both procedures, as a dict.
    fn locality(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let r = self.0.is_local_lnr(&Bounds::default()).map_err(py_err)?;
        let v = serde_json::json!({
            "local": r.local,
            "via_maximal": r.via_maximal,
            "via_units": r.via_units,
            "n_subloop_count": r.n_subloop_count,
            "maximal_n_subloops": lists(&r.maximal),
        });
        to_py_json(py, &v)
    }

    fn is_local(&self) -> PyResult<bool> {
        Ok(self.0.is_local_lnr(&Bounds::default()).map_err(py_err)?.local)
    }

    /// The ring with the same tables, if the ring axioms hold.
    fn as_ring(&self) -> Option<PyRing> {
        ring_ops::validate_ring(self.0.clone()).ok().map(PyRing)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("NearRing(n={}, zero_symmetric={})", self.0.n(), self.0.is_zero_symmetric())
    }
}

/// A finite associative unital ring.
#[pyclass(name = "Ring", module = "loopnr", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRing(FiniteRing);

#[pymethods]
impl PyRing {
    #[new]
    fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, one: usize) -> PyResult<Self> {
        let add = Table::from_rows(&add).map_err(invalid)?;
        let mul = Table::from_rows(&mul).map_err(invalid)?;
        Ok(PyRing(FiniteRing::from_tables(add, mul, one).map_err(invalid)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn one(&self) -> usize {
        self.0.one()
    }

    fn add(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.add(a, b))
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        check(self.0.n(), &[a, b])?;
        Ok(self.0.mul(a, b))
    }

    fn near_ring(&self) -> PyNearRing {
        PyNearRing(self.0.lnr().clone())
    }

    fn units(&self) -> Vec<usize> {
        self.0.units().set.members()
    }

    fn idempotents(&self) -> Vec<usize> {
        self.0.idempotents().members()
    }

    fn radical(&self) -> PyResult<Vec<usize>> {
        Ok(ring_ops::jacobson_radical(&self.0, &Bounds::default()).map_err(py_err)?.members().members())
    }

    fn is_local(&self) -> bool {
        ring_ops::is_local_ring(&self.0)
    }

    fn is_semisimple(&self) -> bool {
        ring_ops::is_semisimple(&self.0)
    }

    fn is_semiperfect(&self) -> bool {
        ring_ops::is_semiperfect(&self.0)
    }

    /// An idempotent congruent to `x` modulo the radical.
    fn lift_idempotent(&self, x: usize) -> PyResult<usize> {
        check(self.0.n(), &[x])?;
        let j = ring_ops::jacobson_radical(&self.0, &Bounds::default()).map_err(py_err)?;
        ring_ops::lift_idempotent(&self.0, &j, x).map_err(py_err)
    }

    fn idempotents_isomorphic(&self, e: usize, f: usize) -> PyResult<bool> {
        check(self.0.n(), &[e, f])?;
        ring_ops::idempotents_isomorphic(&self.0, e, f).map_err(py_err)
    }

    fn idempotents_conjugate(&self, e: usize, f: usize) -> PyResult<bool> {
        check(self.0.n(), &[e, f])?;
        ring_ops::idempotents_conjugate(&self.0, e, f).map_err(py_err)
    }

    /// Canonical complete family of primitive orthogonal idempotents.
    fn primitive_family(&self) -> PyResult<Vec<usize>> {
        Ok(decomp::decompose_regular(&self.0, &Bounds::default()).map_err(py_err)?.members().to_vec())
    }

    /// Carrier of the corner ring `eAe`.
    fn corner(&self, e: usize) -> PyResult<Vec<usize>> {
        check(self.0.n(), &[e])?;
        Ok(decomp::corner_ring(&self.0, e).map_err(py_err)?.carrier)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Ring(n={})", self.0.n())
    }
}

fn structure_to_py(py: Python<'_>, s: Structure) -> PyResult<Py<PyAny>> {
    Ok(match s {
        Structure::Loop(l) => Py::new(py, PyLoop(l))?.into_any(),
        Structure::NearRing(n) => Py::new(py, PyNearRing(n))?.into_any(),
        Structure::Ring(r) => Py::new(py, PyRing(r))?.into_any(),
    })
}

fn build(spec: &str) -> PyResult<Structure> {
    let parsed = resolve(spec).map_err(py_err)?;
    parsed.build(&Bounds::default()).map_err(py_err)
}

/// A structure from a catalog name or a spec such as `cyclic:6`, `matrix:cyclic:2,2` or `m0:nonassoc5`.
#[pyfunction]
fn generate(py: Python<'_>, spec: &str) -> PyResult<Py<PyAny>> {
    structure_to_py(py, build(spec)?)
}

/// The structure file for a spec, as canonical JSON.
#[pyfunction]
fn structure_json(spec: &str) -> PyResult<String> {
    Ok(StructureFile::from_structure(&build(spec)?, Default::default()).to_canonical_json())
}

/// Parses a structure file (JSON or text) and validates it.
#[pyfunction]
fn load(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let file = StructureFile::parse(text).map_err(py_err)?;
    structure_to_py(py, file.to_structure().map_err(invalid)?)
}

/// `(name, spec)` pairs of the bundled corpus.
#[pyfunction]
fn catalog() -> Vec<(String, String)> {
    corpus_catalog().into_iter().map(|e| (e.name, e.spec.to_string())).collect()
}

#[pyfunction]
#[pyo3(signature = (spec, subloops=false, local=false, radical=false, idempotents=false))]
fn analyze(
    py: Python<'_>,
    spec: &str,
    subloops: bool,
    local: bool,
    radical: bool,
    idempotents: bool,
) -> PyResult<Py<PyAny>> {
    let opts = AnalyzeOptions { subloops, local, radical, idempotents };
    let v = report::analyze(&build(spec)?, &opts, &Bounds::default()).map_err(py_err)?;
    to_py_json(py, &v)
}

#[pyfunction]
#[pyo3(signature = (spec, verify_uniqueness=false))]
fn decompose(py: Python<'_>, spec: &str, verify_uniqueness: bool) -> PyResult<Py<PyAny>> {
    let s = build(spec)?;
    let ring = s.as_ring().ok_or_else(|| HypothesisFailed::new_err(format!("{spec} is not a ring")))?;
    let v = report::decompose(ring, verify_uniqueness, &Bounds::default()).map_err(py_err)?;
    to_py_json(py, &v)
}

/// Validates the element map `src → dst` as a near-ring homomorphism.
#[pyfunction]
#[pyo3(signature = (src, dst, map, transfer=false))]
fn hom(py: Python<'_>, src: &str, dst: &str, map: Vec<usize>, transfer: bool) -> PyResult<Py<PyAny>> {
    let (s, t) = (build(src)?, build(dst)?);
    let not_lnr = |x: &str| HypothesisFailed::new_err(format!("{x} is a loop, not a near-ring"));
    let a = s.as_lnr().ok_or_else(|| not_lnr(src))?;
    let b = t.as_lnr().ok_or_else(|| not_lnr(dst))?;
    let f = validate_lnr_hom(&map, a, b).map_err(invalid)?;
    let v = report::hom(&f, transfer, &Bounds::default()).map_err(py_err)?;
    to_py_json(py, &v)
}

#[pymodule]
#[pyo3(name = "loopnr")]
fn loopnr_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyLoop>()?;
    m.add_class::<PyNearRing>()?;
    m.add_class::<PyRing>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(structure_json, m)?)?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(hom, m)?)?;
    m.add("LoopnrError", py.get_type::<LoopnrError>())?;
    m.add("ValidationError", py.get_type::<ValidationError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("BoundExceeded", py.get_type::<BoundExceeded>())?;
    m.add("HypothesisFailed", py.get_type::<HypothesisFailed>())?;
    Ok(())
}
