//! Python module `pycloops`: permutations, loops, autotopisms, parastrophes and
//! the CS-autotopism triple family.
//!
//! Library errors are raised as `pycloops.CloopsError` (a `ValueError`) with
//! the message `"<kind>: <detail>"`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cloops::autotopism as atp;
use cloops::identities::IdentityName;
use cloops::magma::{read_table_file, write_table_file};
use cloops::sts::TripleSystem;
use cloops::{fixtures, parastrophe as para, sts};

create_exception!(pycloops, CloopsError, PyValueError);

fn err(e: cloops::Error) -> PyErr {
    CloopsError::new_err(format!("{}: {e}", e.kind()))
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    s.parse::<T>().map_err(|e| CloopsError::new_err(format!("unknown-name: {e}")))
}

#[pyclass(name = "Perm", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPerm(cloops::Perm);

#[pymethods]
impl PyPerm {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        cloops::Perm::from_images(images).map(Self).map_err(err)
    }

    /// Parses cycle notation on `0..degree`.
    #[staticmethod]
    fn from_cycles(text: &str, degree: usize) -> PyResult<Self> {
        cloops::Perm::parse_cycles(text, degree).map(Self).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.0.images().to_vec()
    }

    fn apply(&self, i: usize) -> PyResult<usize> {
        if i >= self.0.degree() {
            return Err(err(cloops::Error::ElementOutOfRange { element: i, order: self.0.degree() }));
        }
        Ok(self.0.apply(i))
    }

    /// `self` first, then `other`.
    fn compose(&self, other: &PyPerm) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn pow(&self, k: i64) -> Self {
        Self(self.0.pow(k))
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0.cycles()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Perm.from_cycles('{}', {})", self.0, self.0.degree())
    }
}

#[pyclass(name = "Loop", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLoop(cloops::LoopStructure);

#[pymethods]
impl PyLoop {
    /// A loop from its Cayley table; the identity element is detected.
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        cloops::LoopStructure::from_rows(&rows).map(Self).map_err(err)
    }

    /// Parses `.tbl` text: the order on the first line, then one row per line.
    #[staticmethod]
    fn from_tbl(text: &str) -> PyResult<Self> {
        read_table_file(text).and_then(cloops::magma::as_loop).map(Self).map_err(err)
    }

    #[staticmethod]
    fn read(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err(cloops::Error::Io { path: path.to_string(), message: e.to_string() }))?;
        Self::from_tbl(&text)
    }

    fn to_tbl(&self) -> String {
        write_table_file(self.0.table())
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn identity(&self) -> usize {
        self.0.identity()
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.table().rows()
    }

    fn mul(&self, x: usize, y: usize) -> PyResult<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.0.mul(x, y))
    }

    fn power(&self, x: usize, m: i64) -> PyResult<usize> {
        self.0.element_power(x, m).map_err(err)
    }

    fn left_translation(&self, x: usize) -> PyResult<PyPerm> {
        self.0.left_translation(x).map(PyPerm).map_err(err)
    }

    fn right_translation(&self, x: usize) -> PyResult<PyPerm> {
        self.0.right_translation(x).map(PyPerm).map_err(err)
    }

    /// Checks one identity by name (`lc`, `rc`, `c`, `steiner`, ...). Returns
    /// `(holds, witness)` where the witness is `None` or `(elements, clause)`.
    fn check_identity(&self, name: &str) -> PyResult<(bool, Option<(Vec<usize>, String)>)> {
        let r = parse::<IdentityName>(name)?.check(&self.0);
        Ok((r.holds, r.witness.map(|w| (w.elements, w.clause.to_string()))))
    }

    fn is_c(&self) -> bool {
        cloops::identities::is_c(&self.0).holds
    }

    fn is_steiner(&self) -> bool {
        cloops::identities::is_steiner(&self.0).holds
    }

    fn is_associative(&self) -> bool {
        cloops::identities::is_associative(&self.0).holds
    }

    fn __repr__(&self) -> String {
        format!("<Loop order={} identity={}>", self.0.order(), self.0.identity())
    }
}

impl PyLoop {
    fn check(&self, x: usize) -> PyResult<()> {
        if x < self.0.order() {
            Ok(())
        } else {
            Err(err(cloops::Error::ElementOutOfRange { element: x, order: self.0.order() }))
        }
    }
}

#[pyclass(name = "Autotopism", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyAutotopism(atp::Autotopism);

#[pymethods]
impl PyAutotopism {
    /// Verifies `xU·yV = (xy)W` for all `x, y`.
    #[new]
    fn new(l: &PyLoop, u: &PyPerm, v: &PyPerm, w: &PyPerm) -> PyResult<Self> {
        atp::verify(&l.0, u.0.clone(), v.0.clone(), w.0.clone()).map(Self).map_err(err)
    }

    #[getter]
    fn u(&self) -> PyPerm {
        PyPerm(self.0.u().clone())
    }

    #[getter]
    fn v(&self) -> PyPerm {
        PyPerm(self.0.v().clone())
    }

    #[getter]
    fn w(&self) -> PyPerm {
        PyPerm(self.0.w().clone())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Autotopism{}", self.0)
    }
}

#[pyclass(name = "Constructed", frozen, get_all)]
struct PyConstructed {
    x: usize,
    square: usize,
    trivial: bool,
    forward: PyAutotopism,
    inverse: PyAutotopism,
}

#[pymethods]
impl PyConstructed {
    #[getter]
    fn alpha1_s2(&self) -> PyPerm {
        self.forward.u()
    }

    #[getter]
    fn beta1_t2(&self) -> PyPerm {
        self.forward.v()
    }

    #[getter]
    fn gamma1_r2(&self) -> PyPerm {
        self.forward.w()
    }

    #[getter]
    fn beta2_t1(&self) -> PyPerm {
        self.inverse.v()
    }
}

/// The built-in non-associative C-loop of order 12.
#[pyfunction]
fn table1() -> PyLoop {
    PyLoop(fixtures::table1_loop())
}

#[pyfunction]
fn parse_cycles(text: &str, degree: usize) -> PyResult<PyPerm> {
    PyPerm::from_cycles(text, degree)
}

#[pyfunction]
fn read_table(path: &str) -> PyResult<PyLoop> {
    PyLoop::read(path)
}

#[pyfunction]
fn constructed_autotopism(l: &PyLoop, x: usize) -> PyResult<PyConstructed> {
    let c = atp::constructed_autotopism(&l.0, x).map_err(err)?;
    Ok(PyConstructed {
        x: c.x,
        square: c.square,
        trivial: c.trivial,
        forward: PyAutotopism(c.forward),
        inverse: PyAutotopism(c.inverse),
    })
}

#[pyfunction]
fn lc_autotopism(l: &PyLoop, x: usize) -> PyResult<PyAutotopism> {
    atp::lc_autotopism(&l.0, x).map(PyAutotopism).map_err(err)
}

#[pyfunction]
fn rc_autotopism(l: &PyLoop, x: usize) -> PyResult<PyAutotopism> {
    atp::rc_autotopism(&l.0, x).map(PyAutotopism).map_err(err)
}

/// Every autotopism of a loop of order at most 8, sorted.
#[pyfunction]
fn enumerate_autotopisms(l: &PyLoop) -> PyResult<Vec<PyAutotopism>> {
    Ok(atp::enumerate_autotopisms(&l.0).map_err(err)?.into_iter().map(PyAutotopism).collect())
}

/// Rows of a parastrophe: `star`, `rdiv`, `ldiv`, `rdiv-star` or `ldiv-star`.
#[pyfunction]
fn parastrophe(rows: Vec<Vec<usize>>, kind: &str) -> PyResult<Vec<Vec<usize>>> {
    let q = cloops::CayleyTable::from_rows(&rows).map_err(err)?;
    Ok(para::parastrophe(&q, parse(kind)?).rows())
}

/// Text report relating the constructed components to parastrophe equalities.
#[pyfunction]
fn equivalence_report(l: &PyLoop) -> PyResult<String> {
    para::equivalence_report(&l.0).map(|r| r.to_text()).map_err(err)
}

#[pyfunction]
fn steiner_criterion(l: &PyLoop) -> PyResult<bool> {
    para::steiner_criterion(&l.0).map_err(err)
}

/// Builds the CS-autotopism family. Returns `(ground, triples, text)`.
#[pyfunction]
#[pyo3(signature = (l, bases = Vec::new()))]
fn build_cs_family(
    l: &PyLoop,
    bases: Vec<PyAutotopism>,
) -> PyResult<(Vec<PyAutotopism>, Vec<[usize; 3]>, String)> {
    let bases: Vec<_> = bases.into_iter().map(|b| b.0).collect();
    let fam = sts::build_cs_family(&l.0, &bases).map_err(err)?;
    let ground = fam.system.ground().iter().cloned().map(PyAutotopism).collect();
    Ok((ground, fam.system.triples().to_vec(), fam.to_text()))
}

/// Checks the Steiner triple system axioms on points `0..points`. Returns
/// `(passes, report)`.
#[pyfunction]
fn verify_sts(points: usize, triples: Vec<[usize; 3]>) -> PyResult<(bool, String)> {
    let t = TripleSystem::on_points(points, triples).map_err(err)?;
    let r = sts::verify_sts(&t);
    Ok((r.passes(), r.to_string()))
}

#[pyfunction]
fn demo() -> PyResult<String> {
    cloops::cli::demo().map_err(err)
}

#[pymodule]
fn pycloops(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CloopsError", m.py().get_type::<CloopsError>())?;
    m.add_class::<PyPerm>()?;
    m.add_class::<PyLoop>()?;
    m.add_class::<PyAutotopism>()?;
    m.add_class::<PyConstructed>()?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(parse_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(read_table, m)?)?;
    m.add_function(wrap_pyfunction!(constructed_autotopism, m)?)?;
    m.add_function(wrap_pyfunction!(lc_autotopism, m)?)?;
    m.add_function(wrap_pyfunction!(rc_autotopism, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_autotopisms, m)?)?;
    m.add_function(wrap_pyfunction!(parastrophe, m)?)?;
    m.add_function(wrap_pyfunction!(equivalence_report, m)?)?;
    m.add_function(wrap_pyfunction!(steiner_criterion, m)?)?;
    m.add_function(wrap_pyfunction!(build_cs_family, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sts, m)?)?;
    m.add_function(wrap_pyfunction!(demo, m)?)?;
    Ok(())
}
