//! Python bindings. Weights are passed as plain integers, points as Python complex numbers.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cuspzeros::delta::{self, WeightPair};
use cuspzeros::eisenstein::{self as eis, ThetaArgs, UpperHalfPoint};
use cuspzeros::zeros::{self, AuditConfig, Boundary, ScanConfig};

fn err(e: cuspzeros::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pair(k: u32, l: u32) -> PyResult<WeightPair> {
    WeightPair::new(k, l).map_err(err)
}

fn point(z: Complex64) -> PyResult<UpperHalfPoint> {
    UpperHalfPoint::new(z.re, z.im).map_err(err)
}

/// E_k(z). `method` is "lattice" or "fourier".
#[pyfunction]
#[pyo3(signature = (k, z, method = "lattice", eps = 1e-14))]
pub fn eval_ek(k: u32, z: Complex64, method: &str, eps: f64) -> PyResult<Complex64> {
    let p = point(z)?;
    match method {
        "lattice" => eis::eval_ek_lattice(k, p, eps).map(|(v, _)| v).map_err(err),
        "fourier" => {
            let mut c = 4.0;
            loop {
                let (s, ln_tail) = eis::fourier_e_minus_one(k, p, c).map_err(err)?;
                if ln_tail < eps.ln() || c >= 256.0 {
                    return Ok(Complex64::new(1.0, 0.0) + s.to_complex());
                }
                c *= 2.0;
            }
        }
        m => Err(PyValueError::new_err(format!("unknown method {m:?}"))),
    }
}

/// z^k (E_k(z) - 1)
#[pyfunction]
pub fn gk(k: u32, z: Complex64) -> PyResult<Complex64> {
    eis::gk(k, point(z)?).map_err(err)
}

/// Delta_{k,l}(z) = E_k E_l - E_{k+l} with its error bound.
#[pyfunction]
#[pyo3(signature = (k, l, z, eps = 1e-14))]
pub fn delta_value(k: u32, l: u32, z: Complex64, eps: f64) -> PyResult<(Complex64, f64)> {
    let c = delta::eval_delta(pair(k, l)?, point(z)?, eps).map_err(err)?;
    Ok((c.value, c.err))
}

/// Real function on the arc whose zeros are those of Delta at e^{i theta}.
#[pyfunction]
pub fn arc_real(k: u32, l: u32, theta: f64) -> PyResult<f64> {
    delta::arc_real(pair(k, l)?, theta).map_err(err)
}

/// Real function on the side x = 1/2.
#[pyfunction]
pub fn side_real(k: u32, l: u32, y: f64) -> PyResult<f64> {
    delta::side_real(pair(k, l)?, y).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (w, tau, eps = 1e-16))]
pub fn jacobi_theta(w: Complex64, tau: Complex64, eps: f64) -> PyResult<Complex64> {
    eis::jacobi_theta(ThetaArgs::new(w, tau).map_err(err)?, eps).map_err(err)
}

#[pyfunction]
pub fn phi0(r: f64) -> PyResult<f64> {
    eis::phi0(r).map_err(err)
}

#[pyfunction]
pub fn phi1(r: f64) -> PyResult<f64> {
    eis::phi1(r).map_err(err)
}

#[pyfunction]
pub fn y_max_certificate(k: u32, l: u32) -> PyResult<f64> {
    zeros::y_max_certificate(pair(k, l)?).map_err(err)
}

#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct PredictedCounts {
    pub n_arc: i64,
    pub n_prime: i64,
    pub t_side: i64,
    pub t_prime: i64,
    pub sp: f64,
    pub total_nontrivial: i64,
    pub a: i64,
    pub b: i64,
}

#[pymethods]
impl PredictedCounts {
    fn __repr__(&self) -> String {
        format!("PredictedCounts(a={}, b={}, n_prime={}, t_prime={}, sp={:.3})", self.a, self.b, self.n_prime, self.t_prime, self.sp)
    }
}

#[pyfunction]
pub fn predicted_counts(k: u32, l: u32) -> PyResult<PredictedCounts> {
    let p = zeros::predicted_counts(pair(k, l)?);
    Ok(PredictedCounts {
        n_arc: p.n_arc,
        n_prime: p.n_prime,
        t_side: p.t_side,
        t_prime: p.t_prime,
        sp: p.sp,
        total_nontrivial: p.total_nontrivial,
        a: p.a,
        b: p.b,
    })
}

/// Boundary zeros: arc angles and side heights of every bracketed sign change.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct BoundaryZeros {
    pub a: usize,
    pub b: usize,
    pub arc: Vec<f64>,
    pub side: Vec<f64>,
}

#[pymethods]
impl BoundaryZeros {
    fn __repr__(&self) -> String {
        format!("BoundaryZeros(a={}, b={})", self.a, self.b)
    }
}

#[pyfunction]
#[pyo3(signature = (k, l, oversample = 16))]
pub fn boundary_zeros(k: u32, l: u32, oversample: u32) -> PyResult<BoundaryZeros> {
    let wp = pair(k, l)?;
    let sc = ScanConfig { oversample, ..Default::default() };
    let arc = zeros::count_arc_zeros(wp, &sc).map_err(err)?;
    let side = zeros::count_side_zeros(wp, &sc).map_err(err)?;
    let at = |s: &zeros::BoundaryScan, b| s.locations.iter().filter(|z| z.boundary == b).map(|z| z.at).collect();
    Ok(BoundaryZeros { a: arc.count, b: side.count, arc: at(&arc, Boundary::Arc), side: at(&side, Boundary::Side) })
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct ZeroReport {
    inner: zeros::ZeroCountReport,
}

#[pymethods]
impl ZeroReport {
    #[getter]
    fn k(&self) -> u32 {
        self.inner.wp.k
    }
    #[getter]
    fn l(&self) -> u32 {
        self.inner.wp.l
    }
    #[getter]
    fn a(&self) -> usize {
        self.inner.a
    }
    #[getter]
    fn b(&self) -> usize {
        self.inner.b
    }
    #[getter]
    fn v_i(&self) -> u32 {
        self.inner.v_i
    }
    #[getter]
    fn v_rho(&self) -> u32 {
        self.inner.v_rho
    }
    #[getter]
    fn valence_ok(&self) -> bool {
        self.inner.valence_ok
    }
    #[getter]
    fn y_max(&self) -> f64 {
        self.inner.y_max
    }
    /// interior winding number, if the interior hunt ran and resolved
    #[getter]
    fn winding(&self) -> Option<i64> {
        self.inner.interior.as_ref().and_then(|i| i.winding)
    }
    #[getter]
    fn findings(&self) -> Vec<String> {
        self.inner.findings.iter().map(|f| format!("{:?}: {}", f.kind, f.message)).collect()
    }
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }
    fn __repr__(&self) -> String {
        let ok = if self.valence_ok() { "True" } else { "False" };
        format!("ZeroReport(k={}, l={}, a={}, b={}, valence_ok={ok})", self.k(), self.l(), self.a(), self.b())
    }
}

impl ZeroReport {
    pub fn report(&self) -> &zeros::ZeroCountReport {
        &self.inner
    }
}

/// Full audit of one pair. The interior hunt is the slow part.
#[pyfunction]
#[pyo3(signature = (k, l, interior = true))]
pub fn audit(py: Python<'_>, k: u32, l: u32, interior: bool) -> PyResult<ZeroReport> {
    let wp = pair(k, l)?;
    let ac = AuditConfig { interior, ..Default::default() };
    let inner = py.detach(|| zeros::audit_with(wp, &ac)).map_err(err)?;
    Ok(ZeroReport { inner })
}

#[pymodule]
fn cuspzeros_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PredictedCounts>()?;
    m.add_class::<BoundaryZeros>()?;
    m.add_class::<ZeroReport>()?;
    m.add_function(wrap_pyfunction!(eval_ek, m)?)?;
    m.add_function(wrap_pyfunction!(gk, m)?)?;
    m.add_function(wrap_pyfunction!(delta_value, m)?)?;
    m.add_function(wrap_pyfunction!(arc_real, m)?)?;
    m.add_function(wrap_pyfunction!(side_real, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_theta, m)?)?;
    m.add_function(wrap_pyfunction!(phi0, m)?)?;
    m.add_function(wrap_pyfunction!(phi1, m)?)?;
    m.add_function(wrap_pyfunction!(y_max_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_counts, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    Ok(())
}
