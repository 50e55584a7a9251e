//! Python bindings: the main types and operations, exposed as plain
//! functions plus a small poset class.
//!
//! Build with `cargo build -p antichain-py --release`; the resulting
//! `libantichain_py.so` imports as the module `antichain_py` (see
//! `python/smoke_test.py` for the rename-and-import dance without maturin).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use antichain_core as core;
use antichain_core::Partition;

fn to_py(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn partition(parts: Vec<i64>) -> PyResult<Partition> {
    Partition::new(parts).map_err(to_py)
}

/// The fundamental parallelepiped points of Δ_λ as (b, height, coords).
#[pyfunction]
fn fpp_points(parts: Vec<i64>) -> PyResult<Vec<(i64, i64, Vec<i64>)>> {
    let lambda = partition(parts)?;
    let points = core::enumerate_fpp(&lambda).map_err(to_py)?;
    Ok(points
        .into_iter()
        .map(|p| (p.b, p.height, p.coords))
        .collect())
}

/// Whether Δ_λ is an antichain simplex.
#[pyfunction]
fn is_antichain(parts: Vec<i64>) -> PyResult<bool> {
    core::is_antichain(&partition(parts)?).map_err(to_py)
}

/// Whether every part is coprime to n−1.
#[pyfunction]
fn is_relprime(parts: Vec<i64>) -> PyResult<bool> {
    Ok(core::is_relprime(&partition(parts)?))
}

/// The poset P(λ) on the elements 1..n−2.
#[pyclass(name = "Poset")]
struct PyPoset {
    #[pyo3(get)]
    n: i64,
    #[pyo3(get)]
    relations: Vec<(i64, i64)>,
    #[pyo3(get)]
    covers: Vec<(i64, i64)>,
    #[pyo3(get)]
    is_antichain: bool,
    #[pyo3(get)]
    minimal: Vec<i64>,
    #[pyo3(get)]
    maximal: Vec<i64>,
    #[pyo3(get)]
    self_dual_check: bool,
}

#[pymethods]
impl PyPoset {
    fn __repr__(&self) -> String {
        format!(
            "Poset(n={}, relations={}, covers={}, antichain={})",
            self.n,
            self.relations.len(),
            self.covers.len(),
            self.is_antichain
        )
    }
}

/// Build P(λ) with its full relation set and Hasse diagram.
#[pyfunction]
fn poset(parts: Vec<i64>) -> PyResult<PyPoset> {
    let lambda = partition(parts)?;
    let poset = core::build_poset(&lambda).map_err(to_py)?;
    Ok(PyPoset {
        n: lambda.total(),
        relations: poset.relations().iter().copied().collect(),
        covers: poset.covers().iter().copied().collect(),
        is_antichain: poset.is_antichain(),
        minimal: poset.minimal_elements(),
        maximal: poset.maximal_elements(),
        self_dual_check: core::check_self_dual(&poset),
    })
}

/// Census counts (part, relprime, rpac) for the partitions of n.
#[pyfunction]
#[pyo3(signature = (n, jobs = 0))]
fn scan(n: i64, jobs: usize) -> PyResult<(u64, u64, u64)> {
    let row = core::scan(n, jobs).map_err(to_py)?;
    Ok((row.part, row.relprime, row.rpac))
}

/// The one-column Hermite normal form of Δ_λ: (determinant, column).
#[pyfunction]
fn convert_lambda(parts: Vec<i64>) -> PyResult<(i64, Vec<i64>)> {
    let h = core::convert_lambda(&partition(parts)?).map_err(to_py)?;
    Ok((h.determinant(), h.column().to_vec()))
}

/// Antichain test for the one-column (n, d) simplex with column `a`.
#[pyfunction]
fn hnf_is_antichain(n: i64, a: Vec<i64>) -> PyResult<bool> {
    let h = core::OneColumnHnf::new(n, a).map_err(to_py)?;
    Ok(core::hnf_is_antichain(&h))
}

/// Sample OCH⁺(n, d): returns (antichain_count, fraction).
#[pyfunction]
#[pyo3(signature = (n, d, samples, seed = 0))]
fn sample_och(n: i64, d: i64, samples: u64, seed: u64) -> PyResult<(u64, f64)> {
    let outcome = core::sample_och(n, d, samples, seed).map_err(to_py)?;
    Ok((outcome.antichain_count, outcome.fraction()))
}

/// Exhaustive census of OCH⁺(n, d): returns (total, antichain).
#[pyfunction]
fn exhaust_och(n: i64, d: i64) -> PyResult<(u64, u64)> {
    let outcome = core::exhaust_och(n, d).map_err(to_py)?;
    Ok((outcome.total, outcome.antichain))
}

/// Coefficients c[i][h] of the parallelepiped-algebra Poincaré series of an
/// antichain Δ_λ, truncated to the given z-order and t-degree.
#[pyfunction]
#[pyo3(signature = (parts, z_order = 6, t_degree = 24))]
fn antichain_series(parts: Vec<i64>, z_order: usize, t_degree: usize) -> PyResult<Vec<Vec<u64>>> {
    let lambda = partition(parts)?;
    let points = core::lambda_points(&lambda).map_err(to_py)?;
    let series = core::antichain_series(&points, z_order, t_degree).map_err(to_py)?;
    Ok(series.rows().to_vec())
}

/// Coefficients of the semigroup-algebra series (1+zt)^{d+1} · FPA series.
#[pyfunction]
#[pyo3(signature = (parts, z_order = 6, t_degree = 24))]
fn full_poincare(parts: Vec<i64>, z_order: usize, t_degree: usize) -> PyResult<Vec<Vec<u64>>> {
    let lambda = partition(parts)?;
    let series = core::full_poincare(&lambda, z_order, t_degree).map_err(to_py)?;
    Ok(series.rows().to_vec())
}

/// Relations of λ = (x,…,x, ax,…,ax) computed by the cone test.
#[pyfunction]
fn twopart_relations(x: i64, a: i64, u: i64, v: i64) -> PyResult<Vec<(i64, i64)>> {
    let cfg = core::TwoPartConfig::new(x, a, u, v).map_err(to_py)?;
    Ok(cfg.relations().map_err(to_py)?.into_iter().collect())
}

/// Whether the cone test agrees with the residue predicate everywhere.
#[pyfunction]
fn twopart_check(x: i64, a: i64, u: i64, v: i64) -> PyResult<bool> {
    let cfg = core::TwoPartConfig::new(x, a, u, v).map_err(to_py)?;
    let lambda = cfg.lambda();
    let res = core::ResidueTable::new(&lambda).map_err(to_py)?;
    let top = cfg.total() - 2;
    for j in 1..=top {
        for i in 1..=top {
            let cone = cfg.relates(i, j).map_err(to_py)?;
            let residue = core::relates_theorem(&res, i, j).map_err(to_py)?;
            if cone != residue {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[pymodule]
fn antichain_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyPoset>()?;
    m.add_function(wrap_pyfunction!(fpp_points, m)?)?;
    m.add_function(wrap_pyfunction!(is_antichain, m)?)?;
    m.add_function(wrap_pyfunction!(is_relprime, m)?)?;
    m.add_function(wrap_pyfunction!(poset, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    m.add_function(wrap_pyfunction!(convert_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(hnf_is_antichain, m)?)?;
    m.add_function(wrap_pyfunction!(sample_och, m)?)?;
    m.add_function(wrap_pyfunction!(exhaust_och, m)?)?;
    m.add_function(wrap_pyfunction!(antichain_series, m)?)?;
    m.add_function(wrap_pyfunction!(full_poincare, m)?)?;
    m.add_function(wrap_pyfunction!(twopart_relations, m)?)?;
    m.add_function(wrap_pyfunction!(twopart_check, m)?)?;
    Ok(())
}
