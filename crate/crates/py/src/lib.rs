//! Python bindings for the jacklab core library.
//!
//! Partitions travel as lists of parts, tableaux as lists of rows (bottom
//! row first), and exact rational values as strings ("p/q", or "p" when the
//! denominator is 1) so nothing is ever rounded. Verification reports come
//! back as JSON strings.

use std::str::FromStr;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use jacklab_core::error::Error;
use jacklab_core::exact::{AlphaPoly, Rat};
use jacklab_core::partition::Partition;
use jacklab_core::perm::{Perm, SetPartition};
use jacklab_core::tableau::Tableau;
use jacklab_core::{jack, perm, rook, tableau, verify};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

fn tableau_from_rows(rows: Vec<Vec<u32>>) -> PyResult<Tableau> {
    Tableau::new(rows).map_err(py_err)
}

fn poly_strings(p: &AlphaPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_from_strings(coeffs: Vec<String>) -> PyResult<AlphaPoly> {
    let mut v = Vec::with_capacity(coeffs.len());
    for s in &coeffs {
        v.push(
            Rat::from_str(s)
                .map_err(|e| PyValueError::new_err(format!("bad rational {s:?}: {e}")))?,
        );
    }
    Ok(AlphaPoly::new(v))
}

/// All partitions of n in reverse-lexicographic order.
#[pyfunction]
fn partitions(n: usize) -> Vec<Vec<u32>> {
    jacklab_core::partitions_of(n)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Conjugate partition.
#[pyfunction]
fn conjugate(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

/// Dominance order: does mu dominate lam?
#[pyfunction]
fn dominates(mu: Vec<u32>, lam: Vec<u32>) -> PyResult<bool> {
    partition(mu)?.dominates(&partition(lam)?).map_err(py_err)
}

/// Kostka number K_{nu, lam}.
#[pyfunction]
fn kostka(nu: Vec<u32>, lam: Vec<u32>) -> PyResult<u64> {
    tableau::kostka(&partition(nu)?, &partition(lam)?).map_err(py_err)
}

/// Number of standard Young tableaux of the shape.
#[pyfunction]
fn syt_count(shape: Vec<u32>) -> PyResult<u64> {
    Ok(tableau::syt_count(&partition(shape)?))
}

/// Number of quasi-Yamanouchi tableaux with maximum entry exactly m.
#[pyfunction]
fn qyt_count(shape: Vec<u32>, m: u32) -> PyResult<u64> {
    Ok(tableau::qyt_count(&partition(shape)?, m))
}

/// Eulerian number A(n, k).
#[pyfunction]
fn eulerian(n: usize, k: usize) -> u64 {
    perm::eulerian(n, k)
}

/// Stirling number of the second kind S(n, k).
#[pyfunction]
fn stirling2(n: usize, k: usize) -> u64 {
    perm::stirling2(n, k)
}

/// λ-restricted Eulerian number A(lam, k).
#[pyfunction]
fn restricted_eulerian(lam: Vec<u32>, k: usize) -> PyResult<u64> {
    Ok(perm::restricted_eulerian(&partition(lam)?, k))
}

/// Tableau rows, bottom row first.
type Rows = Vec<Vec<u32>>;

/// RSK row insertion: word → (P rows, Q rows), bottom row first.
#[pyfunction]
fn rsk(word: Vec<u8>) -> PyResult<(Rows, Rows)> {
    let pi = Perm::new(word).map_err(py_err)?;
    let (p, q) = tableau::rsk(&pi);
    Ok((p.rows().to_vec(), q.rows().to_vec()))
}

/// Sort each block's values in place: f_beta(word, blocks).
#[pyfunction]
fn f_beta(word: Vec<u8>, blocks: Vec<Vec<u8>>) -> PyResult<Vec<u32>> {
    let pi = Perm::new(word).map_err(py_err)?;
    let beta = SetPartition::new(blocks).map_err(py_err)?;
    Ok(perm::f_beta(&pi, &beta)
        .word()
        .iter()
        .map(|&v| v as u32)
        .collect())
}

/// Descent set of a standard tableau given as rows, bottom row first.
#[pyfunction]
fn descent_set(rows: Vec<Vec<u32>>) -> PyResult<Vec<u32>> {
    let t = tableau_from_rows(rows)?;
    Ok(tableau::descent_set(&t)
        .map_err(py_err)?
        .elements()
        .iter()
        .map(|&d| d as u32)
        .collect())
}

/// Assaf–Searles destandardization of a semistandard tableau.
#[pyfunction]
fn destandardize(rows: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    Ok(tableau::destandardize(&tableau_from_rows(rows)?)
        .rows()
        .to_vec())
}

/// Monomial expansion of J_mu (or the tilde form): list of
/// (partition, coefficient-as-strings) pairs, constant term first.
#[pyfunction]
#[pyo3(signature = (mu, tilde = false))]
fn jack_expansion(mu: Vec<u32>, tilde: bool) -> PyResult<Vec<(Vec<u32>, Vec<String>)>> {
    let mu = partition(mu)?;
    let exp = if tilde {
        jack::jack_tilde(&mu).map_err(py_err)?
    } else {
        jack::jack_j(&mu).map_err(py_err)?
    };
    Ok(exp
        .terms()
        .map(|(la, c)| (la.parts().to_vec(), poly_strings(c)))
        .collect())
}

/// ⟨J̃_mu, s_lam⟩ as polynomial coefficients in α, constant term first.
#[pyfunction]
fn schur_coeff(mu: Vec<u32>, lam: Vec<u32>) -> PyResult<Vec<String>> {
    let p = jack::schur_coeff(&partition(mu)?, &partition(lam)?).map_err(py_err)?;
    Ok(poly_strings(&p))
}

/// The table a_k(mu, lam) for k = 0..n.
#[pyfunction]
fn a_coeffs(mu: Vec<u32>, lam: Vec<u32>) -> PyResult<Vec<String>> {
    let a = jack::a_coeffs(&partition(mu)?, &partition(lam)?).map_err(py_err)?;
    Ok(a.iter().map(|c| c.to_string()).collect())
}

/// The table b_{n-k}(mu, lam) for k = 1..n.
#[pyfunction]
fn b_coeffs(mu: Vec<u32>, lam: Vec<u32>) -> PyResult<Vec<String>> {
    let b = jack::b_coeffs(&partition(mu)?, &partition(lam)?).map_err(py_err)?;
    Ok(b.iter().map(|c| c.to_string()).collect())
}

/// Does a polynomial (coefficients as strings, constant first) have only
/// real zeros?
#[pyfunction]
fn real_roots_only(coeffs: Vec<String>) -> PyResult<bool> {
    jacklab_core::exact::real_roots_only(&poly_from_strings(coeffs)?).map_err(py_err)
}

/// Rook numbers r_0..r_n of the Ferrers board with the given column heights.
#[pyfunction]
fn rook_numbers(heights: Vec<u32>) -> PyResult<Vec<u64>> {
    let n = heights.len();
    Ok(rook::FerrersBoard::new(n, heights)
        .map_err(py_err)?
        .rook_numbers())
}

/// Hit numbers h_0..h_n (enumeration cross-checked against the GJW
/// expansion).
#[pyfunction]
fn hit_numbers(heights: Vec<u32>) -> PyResult<Vec<u64>> {
    let n = heights.len();
    rook::FerrersBoard::new(n, heights)
        .map_err(py_err)?
        .hit_numbers()
        .map_err(py_err)
}

/// Column heights of the content board of lam.
#[pyfunction]
fn content_board(lam: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(rook::content_board(&partition(lam)?)
        .map_err(py_err)?
        .heights()
        .to_vec())
}

/// The two hook boards (C, D) for mu = (n-l, 1^l).
#[pyfunction]
fn hook_boards(n: usize, l: usize) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let hb = rook::hook_boards(n, l).map_err(py_err)?;
    Ok((hb.c.heights().to_vec(), hb.d.heights().to_vec()))
}

/// The verification registry: (id, default_n, max_n, summary) tuples.
#[pyfunction]
fn registry() -> Vec<(String, usize, usize, String)> {
    verify::REGISTRY
        .iter()
        .map(|s| (s.id.to_string(), s.default_n, s.max_n, s.summary.to_string()))
        .collect()
}

/// Run a named check at degree n; returns the JSON report.
#[pyfunction]
fn run_check(id: &str, n: usize) -> PyResult<String> {
    let report = verify::run_check(id, n).map_err(py_err)?;
    serde_json::to_string(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Persist Jack expansions under the given directory (None disables).
#[pyfunction]
#[pyo3(signature = (dir = None))]
fn set_cache_dir(dir: Option<String>) {
    jack::set_cache_dir(dir.map(Into::into));
}

#[pymodule]
fn jacklab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(dominates, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(qyt_count, m)?)?;
    m.add_function(wrap_pyfunction!(eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(restricted_eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(f_beta, m)?)?;
    m.add_function(wrap_pyfunction!(descent_set, m)?)?;
    m.add_function(wrap_pyfunction!(destandardize, m)?)?;
    m.add_function(wrap_pyfunction!(jack_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(schur_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(a_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(b_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(real_roots_only, m)?)?;
    m.add_function(wrap_pyfunction!(rook_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(hit_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(content_board, m)?)?;
    m.add_function(wrap_pyfunction!(hook_boards, m)?)?;
    m.add_function(wrap_pyfunction!(registry, m)?)?;
    m.add_function(wrap_pyfunction!(run_check, m)?)?;
    m.add_function(wrap_pyfunction!(set_cache_dir, m)?)?;
    Ok(())
}
