//! Python bindings for the determinantal-singularity engine.
//!
//! Compiled as an extension module named `eids_py`.  The `Eids` class wraps
//! a matrix presentation; module-level functions cover the hypersurface
//! invariants and the generic link characteristic.  `python/smoke_test.py`
//! at the repository root exercises the whole surface.

use eids_core::eids::{check_determinantal, corank_at_origin, EidsDescriptor};
use eids_core::groebner::PolyMatrix;
use eids_core::invariants::{
    milnor_hypersurface, multiplicity_m0, nu_with_md, tjurina_hypersurface, InvariantName,
    InvariantReport,
};
use eids_core::limits::DEFAULT_MAX_WORK;
use eids_core::obstruction::{chi_bar_generic_link, eu_dispatch, DispatchOptions};
use eids_core::poly::{parse_poly, quasihomogeneous_weights, VarContext};
use eids_core::{Error, ResourceLimits};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn limits(max_degree: u32, max_basis: usize, max_work: u64) -> ResourceLimits {
    ResourceLimits::new(max_degree, max_basis, max_work)
}

fn context(vars: &[String]) -> PyResult<VarContext> {
    VarContext::new(vars.iter().map(String::as_str)).map_err(to_py_err)
}

fn report_dict<'py>(py: Python<'py>, rep: &InvariantReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("name", rep.name.as_str())?;
    d.set_item("value", rep.value)?;
    d.set_item("provenance", rep.provenance.to_string())?;
    Ok(d)
}

/// A germ of determinantal singularity, presented by a polynomial matrix
/// and a rank bound.
#[pyclass(frozen)]
struct Eids {
    x: EidsDescriptor,
}

#[pymethods]
impl Eids {
    #[new]
    fn new(vars: Vec<String>, matrix: Vec<Vec<String>>, t: usize) -> PyResult<Eids> {
        let ctx = context(&vars)?;
        let rows = matrix
            .iter()
            .map(|row| row.iter().map(|e| parse_poly(&ctx, e)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()
            .map_err(to_py_err)?;
        let matrix = PolyMatrix::new(&ctx, rows).map_err(to_py_err)?;
        let x = EidsDescriptor::new(&ctx, matrix, t).map_err(to_py_err)?;
        Ok(Eids { x })
    }

    fn __repr__(&self) -> String {
        format!(
            "Eids({}x{}, t={}, vars=[{}])",
            self.x.nrows(),
            self.x.ncols(),
            self.x.t(),
            self.x.ctx().names().join(", ")
        )
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.x.nrows(), self.x.ncols())
    }

    #[getter]
    fn t(&self) -> usize {
        self.x.t()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.x.ambient_dim()
    }

    /// Expected dimension of the germ.
    #[getter]
    fn dim(&self) -> usize {
        self.x.expected_dim()
    }

    /// Corank of the presentation at the origin.
    fn corank(&self) -> usize {
        corank_at_origin(&self.x)
    }

    /// Verify the determinantal type: actual vs expected codimension plus
    /// the arithmetic regime predicates.
    #[pyo3(signature = (max_degree=60, max_basis=5000, max_work=DEFAULT_MAX_WORK))]
    fn check<'py>(
        &self,
        py: Python<'py>,
        max_degree: u32,
        max_basis: usize,
        max_work: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let report =
            check_determinantal(&self.x, &limits(max_degree, max_basis, max_work))
                .map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("determinantal", report.is_determinantal)?;
        d.set_item("codim_expected", report.codim_expected)?;
        d.set_item("codim_actual", report.codim_actual)?;
        d.set_item("dim", self.x.ambient_dim() - report.codim_actual)?;
        d.set_item("ids", report.is_ids)?;
        d.set_item("smoothable", report.is_smoothable)?;
        d.set_item("corank", report.corank)?;
        d.set_item("three_strata", report.three_strata_ok)?;
        d.set_item("sigma_is_icis", report.sigma_is_icis)?;
        Ok(d)
    }

    /// The multiplicity, and whichever of mu, tau, the polar multiplicity
    /// and the vanishing characteristic apply to this germ.  Keys are only
    /// present when the invariant is defined and computable in this regime.
    #[pyo3(signature = (seed=0, max_degree=60, max_basis=5000, max_work=DEFAULT_MAX_WORK))]
    fn invariants<'py>(
        &self,
        py: Python<'py>,
        seed: u64,
        max_degree: u32,
        max_basis: usize,
        max_work: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let fresh = || limits(max_degree, max_basis, max_work);
        let x = &self.x;
        let d = x.expected_dim();
        let n = x.ambient_dim();
        let hypersurface = x.nrows() == 1 && x.ncols() == 1 && x.t() == 1;
        let smooth_bound = (x.nrows() - x.t() + 2) * (x.ncols() - x.t() + 2);

        let out = PyDict::new(py);
        let m0 = multiplicity_m0(&x.defining_ideal(), d, seed, &fresh()).map_err(to_py_err)?;
        out.set_item("m0", m0)?;
        if hypersurface {
            let g = x.matrix().entry(0, 0);
            out.set_item("mu", milnor_hypersurface(g, &fresh()).map_err(to_py_err)?)?;
            out.set_item("tau", tjurina_hypersurface(g, &fresh()).map_err(to_py_err)?)?;
        }
        if d > 0 && n < smooth_bound {
            match nu_with_md(x, seed, &fresh()) {
                Ok((nu, md)) => {
                    if !hypersurface && d == 2 {
                        out.set_item("mu", nu)?;
                    }
                    out.set_item("md", md)?;
                    out.set_item("nu", nu)?;
                }
                Err(Error::NotSmoothable(_)) => {}
                Err(e) => return Err(to_py_err(e)),
            }
        }
        Ok(out)
    }

    /// Local Euler obstruction at the origin.  Returns a dict with the
    /// value, the regime that produced it, and every invariant consumed on
    /// the way (with its provenance).  Invariants the engine cannot derive
    /// in the given regime may be supplied by keyword.
    #[pyo3(signature = (seed=0, mu=None, nu=None, md=None, chi_tilde=None,
                        skip_fast_path=false,
                        max_degree=60, max_basis=5000, max_work=DEFAULT_MAX_WORK))]
    #[allow(clippy::too_many_arguments)]
    fn eu<'py>(
        &self,
        py: Python<'py>,
        seed: u64,
        mu: Option<i64>,
        nu: Option<i64>,
        md: Option<i64>,
        chi_tilde: Option<i64>,
        skip_fast_path: bool,
        max_degree: u32,
        max_basis: usize,
        max_work: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let mut supplied = Vec::new();
        for (name, value) in [
            (InvariantName::Mu, mu),
            (InvariantName::Nu, nu),
            (InvariantName::Md, md),
            (InvariantName::ChiTilde, chi_tilde),
        ] {
            if let Some(v) = value {
                supplied.push(InvariantReport::supplied(name, v));
            }
        }
        let result = eu_dispatch(
            &self.x,
            seed,
            &supplied,
            &DispatchOptions { skip_fast_path },
            &limits(max_degree, max_basis, max_work),
        )
        .map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("eu", result.value)?;
        d.set_item("regime", result.regime.as_str())?;
        let inputs = PyList::empty(py);
        for rep in &result.inputs {
            inputs.append(report_dict(py, rep)?)?;
        }
        d.set_item("inputs", inputs)?;
        Ok(d)
    }
}

/// Milnor number of an isolated hypersurface germ.
#[pyfunction]
#[pyo3(signature = (vars, f, max_degree=60, max_basis=5000, max_work=DEFAULT_MAX_WORK))]
fn milnor(vars: Vec<String>, f: &str, max_degree: u32, max_basis: usize, max_work: u64) -> PyResult<u64> {
    let ctx = context(&vars)?;
    let g = parse_poly(&ctx, f).map_err(to_py_err)?;
    milnor_hypersurface(&g, &limits(max_degree, max_basis, max_work)).map_err(to_py_err)
}

/// Tjurina number of an isolated hypersurface germ.
#[pyfunction]
#[pyo3(signature = (vars, f, max_degree=60, max_basis=5000, max_work=DEFAULT_MAX_WORK))]
fn tjurina(vars: Vec<String>, f: &str, max_degree: u32, max_basis: usize, max_work: u64) -> PyResult<u64> {
    let ctx = context(&vars)?;
    let g = parse_poly(&ctx, f).map_err(to_py_err)?;
    tjurina_hypersurface(&g, &limits(max_degree, max_basis, max_work)).map_err(to_py_err)
}

/// Normalized quasi-homogeneous weights of a germ, or None when it has no
/// positive weight system.  Weights are (numerator, denominator) pairs for
/// the variables actually appearing in `f`, in variable order.
#[pyfunction]
fn weights(vars: Vec<String>, f: &str) -> PyResult<Option<Vec<(i64, i64)>>> {
    let ctx = context(&vars)?;
    let g = parse_poly(&ctx, f).map_err(to_py_err)?;
    let (g, _) = g.restrict_to_support();
    let Some((ws, _)) = quasihomogeneous_weights(&g) else {
        return Ok(None);
    };
    let pairs = ws
        .iter()
        .map(|w| {
            let n = i64::try_from(w.numer()).map_err(|_| ())?;
            let d = i64::try_from(w.denom()).map_err(|_| ())?;
            Ok((n, d))
        })
        .collect::<Result<Vec<_>, ()>>()
        .map_err(|()| PyValueError::new_err("weight does not fit in 64 bits"))?;
    Ok(Some(pairs))
}

/// Reduced Euler characteristic of the generic determinantal link of the
/// given matrix size and rank bound.
#[pyfunction]
fn chi_bar(m: usize, n: usize, t: usize) -> PyResult<i64> {
    chi_bar_generic_link(m, n, t).map_err(to_py_err)
}

#[pymodule]
fn eids_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Eids>()?;
    m.add_function(wrap_pyfunction!(milnor, m)?)?;
    m.add_function(wrap_pyfunction!(tjurina, m)?)?;
    m.add_function(wrap_pyfunction!(weights, m)?)?;
    m.add_function(wrap_pyfunction!(chi_bar, m)?)?;
    Ok(())
}
