//! Integral-form Jack polynomials J_μ^(α), their tilde transform
//! J̃_μ^(α) = α^n J_μ^(1/α), and Schur-coefficient extraction in the two
//! binomial bases.
//!
//! Construction is Gram–Schmidt over Q(α): partitions of n are processed
//! along the reverse-lexicographic order (a linear extension of dominance,
//! dominance-minimal first), each P_μ = m_μ + lower terms is made orthogonal
//! to its predecessors under the α-deformed inner product, and J_μ is the
//! scalar multiple with [m_{1^n}] J_μ = n!. Every coefficient must then
//! reduce to a polynomial — a residual denominator would contradict
//! Lapointe–Vinet integrality and is reported as an internal inconsistency.
//!
//! Whole degrees are computed at once (orthogonalization is cumulative
//! anyway), memoized in process, and optionally persisted as one JSON file
//! per (n, μ) under a configurable cache directory.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, AlphaPoly, Rat, RatFun};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{monomial_gram, Basis, SymFun};

/// Environment variable consulted by the CLI and bindings for the location
/// of the on-disk expansion cache.
pub const CACHE_ENV_VAR: &str = "JACKLAB_CACHE";

static DEGREE_BOUND: AtomicUsize = AtomicUsize::new(9);
static CACHE_DIR: RwLock<Option<PathBuf>> = RwLock::new(None);

type DegreeTable = Arc<BTreeMap<Partition, Arc<JackExpansion>>>;
static MEMO: Mutex<Option<HashMap<(usize, bool), DegreeTable>>> = Mutex::new(None);

/// Raise or lower the largest |μ| accepted by the constructor (default 9).
pub fn set_degree_bound(n: usize) {
    DEGREE_BOUND.store(n, Ordering::Relaxed);
}

pub fn degree_bound() -> usize {
    DEGREE_BOUND.load(Ordering::Relaxed)
}

/// Point the on-disk cache at a directory (`None` disables persistence).
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap() = dir;
}

/// Cache directory from the `JACKLAB_CACHE` environment variable, if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from)
}

/// A Jack polynomial (or its tilde form) written in the monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct JackExpansion {
    mu: Partition,
    terms: BTreeMap<Partition, AlphaPoly>,
}

#[derive(Serialize, Deserialize)]
struct JackTermRepr {
    part: Partition,
    coeff: AlphaPoly,
}

#[derive(Serialize, Deserialize)]
struct JackRepr {
    mu: Partition,
    n: usize,
    terms: Vec<JackTermRepr>,
}

impl JackExpansion {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn degree(&self) -> usize {
        self.mu.size()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &AlphaPoly)> {
        self.terms.iter()
    }

    /// Coefficient of m_λ.
    pub fn coeff(&self, la: &Partition) -> AlphaPoly {
        self.terms.get(la).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn to_symfun(&self) -> SymFun {
        let mut f = SymFun::zero(self.degree(), Basis::M);
        for (la, c) in &self.terms {
            f.add_term(la.clone(), c.clone());
        }
        f
    }
}

impl Serialize for JackExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JackRepr {
            mu: self.mu.clone(),
            n: self.mu.size(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| JackTermRepr {
                    part: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for JackExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = JackRepr::deserialize(d)?;
        if repr.mu.size() != repr.n {
            return Err(serde::de::Error::custom("inconsistent degree"));
        }
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            if t.part.size() != repr.n {
                return Err(serde::de::Error::custom("term with wrong degree"));
            }
            if !t.coeff.is_zero() {
                terms.insert(t.part, t.coeff);
            }
        }
        Ok(JackExpansion { mu: repr.mu, terms })
    }
}

impl std::fmt::Display for JackExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_symfun())
    }
}

impl std::fmt::Debug for JackExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "JackExpansion[{self}]")
    }
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

fn gram_schmidt_degree(n: usize) -> Result<BTreeMap<Partition, Arc<JackExpansion>>> {
    // ascending linear extension of dominance: (1^n) first, (n) last
    let parts: Vec<Partition> = partitions_of(n).into_iter().rev().collect();
    let p = parts.len();
    // reindex the gram matrix (monomial_gram uses the descending order)
    let gram_desc = monomial_gram(n);
    let g = |i: usize, j: usize| -> &AlphaPoly { &gram_desc[p - 1 - i][p - 1 - j] };

    let mut vecs: Vec<Vec<RatFun>> = Vec::with_capacity(p);
    let mut norms: Vec<RatFun> = Vec::with_capacity(p);
    for i in 0..p {
        let mut v = vec![RatFun::zero(); p];
        v[i] = RatFun::one();
        for j in 0..i {
            let mut t = RatFun::zero();
            for (b, vb) in vecs[j].iter().enumerate().take(j + 1) {
                if !vb.is_zero() && !g(i, b).is_zero() {
                    t = t.add(&vb.mul_poly(g(i, b)));
                }
            }
            if t.is_zero() {
                continue;
            }
            let c = t.div(&norms[j])?;
            for (b, vb) in vecs[j].iter().enumerate().take(j + 1) {
                if !vb.is_zero() {
                    v[b] = v[b].sub(&c.mul(vb));
                }
            }
        }
        // ⟨v, v⟩ = ⟨e_i, v⟩ since v differs from e_i by earlier vectors
        let mut norm = RatFun::zero();
        for (b, vb) in v.iter().enumerate().take(i + 1) {
            if !vb.is_zero() && !g(i, b).is_zero() {
                norm = norm.add(&vb.mul_poly(g(i, b)));
            }
        }
        if norm.is_zero() {
            return Err(Error::Internal(format!(
                "zero norm while orthogonalizing {}",
                parts[i]
            )));
        }
        vecs.push(v);
        norms.push(norm);
    }

    // Normalize so that the coefficient of m_{1^n} (index 0) is n!.
    let nfact = RatFun::constant(Rat::from_integer(factorial(n)));
    let mut out = BTreeMap::new();
    for (i, v) in vecs.into_iter().enumerate() {
        let bottom = &v[0];
        if bottom.is_zero() {
            return Err(Error::Internal(format!(
                "vanishing m_(1^n) coefficient for {}",
                parts[i]
            )));
        }
        let scale = nfact.div(bottom)?;
        let mut terms = BTreeMap::new();
        for (b, vb) in v.iter().enumerate().take(i + 1) {
            if vb.is_zero() {
                continue;
            }
            let coeff = scale.mul(vb).into_poly()?;
            if !coeff.is_zero() {
                terms.insert(parts[b].clone(), coeff);
            }
        }
        let mu = parts[i].clone();
        out.insert(mu.clone(), Arc::new(JackExpansion { mu, terms }));
    }
    Ok(out)
}

fn cache_file(dir: &Path, n: usize, mu: &Partition) -> PathBuf {
    let tag: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
    dir.join(format!("jack_n{n}_mu{}.json", tag.join("-")))
}

fn load_degree_from_disk(dir: &Path, n: usize) -> Option<BTreeMap<Partition, Arc<JackExpansion>>> {
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        let path = cache_file(dir, n, &mu);
        let text = std::fs::read_to_string(&path).ok()?;
        let exp: JackExpansion = serde_json::from_str(&text).ok()?;
        if exp.mu != mu {
            return None;
        }
        out.insert(mu, Arc::new(exp));
    }
    Some(out)
}

fn store_degree_to_disk(dir: &Path, n: usize, table: &BTreeMap<Partition, Arc<JackExpansion>>) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (mu, exp) in table {
        let path = cache_file(dir, n, mu);
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_string_pretty(exp.as_ref())?)?;
        std::fs::rename(&tmp, &path)?;
    }
    Ok(())
}

fn degree_table(n: usize, tilde: bool) -> Result<DegreeTable> {
    let bound = degree_bound();
    if n > bound {
        return Err(Error::Resource(format!(
            "Jack construction capped at |μ| ≤ {bound}, got {n}"
        )));
    }
    if let Some(map) = MEMO.lock().unwrap().as_ref() {
        if let Some(t) = map.get(&(n, tilde)) {
            return Ok(Arc::clone(t));
        }
    }
    let table: DegreeTable = if tilde {
        let plain = degree_table(n, false)?;
        let mut out = BTreeMap::new();
        for (mu, exp) in plain.iter() {
            let mut terms = BTreeMap::new();
            for (la, c) in &exp.terms {
                let r = c.reciprocal(n)?;
                if !r.is_zero() {
                    terms.insert(la.clone(), r);
                }
            }
            out.insert(
                mu.clone(),
                Arc::new(JackExpansion {
                    mu: mu.clone(),
                    terms,
                }),
            );
        }
        Arc::new(out)
    } else {
        let dir = CACHE_DIR.read().unwrap().clone();
        let loaded = dir.as_deref().and_then(|d| load_degree_from_disk(d, n));
        match loaded {
            Some(t) => Arc::new(t),
            None => {
                let t = gram_schmidt_degree(n)?;
                if let Some(d) = dir.as_deref() {
                    store_degree_to_disk(d, n, &t)?;
                }
                Arc::new(t)
            }
        }
    };
    let mut guard = MEMO.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Ok(Arc::clone(map.entry((n, tilde)).or_insert(table)))
}

/// J_μ^(α) in the monomial basis, normalized by [m_{1^n}] J_μ = n!.
pub fn jack_j(mu: &Partition) -> Result<JackExpansion> {
    let table = degree_table(mu.size(), false)?;
    Ok(table
        .get(mu)
        .expect("every partition of n is constructed")
        .as_ref()
        .clone())
}

/// J̃_μ^(α) = α^n J_μ^(1/α): the reciprocal transform applied to every
/// monomial coefficient.
pub fn jack_tilde(mu: &Partition) -> Result<JackExpansion> {
    let table = degree_table(mu.size(), true)?;
    Ok(table
        .get(mu)
        .expect("every partition of n is constructed")
        .as_ref()
        .clone())
}

// ---------------------------------------------------------------------------
// Schur coefficients and the two binomial tables
// ---------------------------------------------------------------------------

type SchurTable = Arc<BTreeMap<Partition, AlphaPoly>>;
static SCHUR_MEMO: Mutex<Option<HashMap<Partition, SchurTable>>> = Mutex::new(None);

/// The full Schur expansion of J̃_μ as a map λ → ⟨J̃_μ, s_λ⟩.
pub fn tilde_schur_expansion(mu: &Partition) -> Result<SchurTable> {
    if let Some(map) = SCHUR_MEMO.lock().unwrap().as_ref() {
        if let Some(t) = map.get(mu) {
            return Ok(Arc::clone(t));
        }
    }
    let tilde = jack_tilde(mu)?;
    let in_s = tilde.to_symfun().convert(Basis::S);
    let mut out = BTreeMap::new();
    for (la, c) in in_s.terms() {
        out.insert(la.clone(), c.clone());
    }
    let table = Arc::new(out);
    let mut guard = SCHUR_MEMO.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Ok(Arc::clone(map.entry(mu.clone()).or_insert(table)))
}

/// ⟨J̃_μ, s_λ⟩, the coefficient of s_λ in the tilde Jack.
pub fn schur_coeff(mu: &Partition, la: &Partition) -> Result<AlphaPoly> {
    if mu.size() != la.size() {
        return Err(Error::Domain(format!(
            "schur_coeff needs |μ| = |λ|, got {mu} and {la}"
        )));
    }
    Ok(tilde_schur_expansion(mu)?
        .get(la)
        .cloned()
        .unwrap_or_else(AlphaPoly::zero))
}

/// a_k(μ, λ) for k = 0..n: ⟨J̃_μ, s_λ⟩ = Σ_k a_k C(α+k, n). The trailing
/// a_n is reported and expected to vanish.
pub fn a_coeffs(mu: &Partition, la: &Partition) -> Result<Vec<Rat>> {
    let n = mu.size();
    crate::exact::binomial_shift_expand(&schur_coeff(mu, la)?, n)
}

/// b_{n-k}(μ, λ) for k = 1..n (returned in that order):
/// ⟨J̃_μ, s_λ⟩ = Σ_k b_{n-k} C(α,k) k!.
pub fn b_coeffs(mu: &Partition, la: &Partition) -> Result<Vec<Rat>> {
    let n = mu.size();
    crate::exact::falling_factorial_expand(&schur_coeff(mu, la)?, n)
}

/// Closed form for the row case: [m_λ] J_(n) = (n!/λ!) Π_{s∈λ} (arm(s)·α + 1).
/// Used as an independent oracle against the Gram–Schmidt construction.
pub fn jack_row_closed_form(n: usize) -> BTreeMap<Partition, AlphaPoly> {
    let nfact = Rat::from_integer(factorial(n));
    let mut out = BTreeMap::new();
    for la in partitions_of(n) {
        let mut poly = AlphaPoly::one();
        for s in la.cells() {
            let arm = la.arm(s).unwrap();
            poly = poly.mul(&AlphaPoly::new(vec![rat(1), rat(arm as i64)]));
        }
        let scale = &nfact / Rat::from_integer(la.part_factorial());
        out.insert(la, poly.scale(&scale));
    }
    out
}

/// The diagonal product formula: ⟨J̃_μ, s_μ⟩ = Π_{s∈μ} (arm(s) + α(leg(s)+1)).
pub fn diagonal_product(mu: &Partition) -> AlphaPoly {
    let mut poly = AlphaPoly::one();
    for s in mu.cells() {
        let arm = mu.arm(s).unwrap() as i64;
        let leg = mu.leg(s).unwrap() as i64;
        poly = poly.mul(&AlphaPoly::new(vec![rat(arm), rat(leg + 1)]));
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::symfunc::deformed_inner;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree_two_pinned_values() {
        // hand Gram–Schmidt: J_(2) = (1+α) m_(2) + 2 m_(1,1)
        let j2 = jack_j(&pt(&[2])).unwrap();
        assert_eq!(j2.coeff(&pt(&[2])), AlphaPoly::from_i64(&[1, 1]));
        assert_eq!(j2.coeff(&pt(&[1, 1])), AlphaPoly::from_i64(&[2]));

        // J_(1,1) = 2 m_(1,1): the dominance-minimal case has no lower terms
        let j11 = jack_j(&pt(&[1, 1])).unwrap();
        assert_eq!(j11.terms().count(), 1);
        assert_eq!(j11.coeff(&pt(&[1, 1])), AlphaPoly::from_i64(&[2]));

        // J̃_(2) = α(α+1) m_(2) + 2α² m_(1,1)
        let t2 = jack_tilde(&pt(&[2])).unwrap();
        assert_eq!(t2.coeff(&pt(&[2])), AlphaPoly::from_i64(&[0, 1, 1]));
        assert_eq!(t2.coeff(&pt(&[1, 1])), AlphaPoly::from_i64(&[0, 0, 2]));

        // Schur coefficients
        assert_eq!(
            schur_coeff(&pt(&[2]), &pt(&[2])).unwrap(),
            AlphaPoly::from_i64(&[0, 1, 1])
        );
        assert_eq!(
            schur_coeff(&pt(&[2]), &pt(&[1, 1])).unwrap(),
            AlphaPoly::from_i64(&[0, -1, 1])
        );
        assert!(schur_coeff(&pt(&[2]), &pt(&[1])).is_err());

        // binomial tables
        let a = a_coeffs(&pt(&[2]), &pt(&[2])).unwrap();
        assert_eq!(a, vec![rat(0), rat(2), rat(0)]);
        let a = a_coeffs(&pt(&[2]), &pt(&[1, 1])).unwrap();
        assert_eq!(a, vec![rat(2), rat(0), rat(0)]);
        let a = a_coeffs(&pt(&[1, 1]), &pt(&[1, 1])).unwrap();
        assert_eq!(a, vec![rat(2), rat(2), rat(0)]);
        let b = b_coeffs(&pt(&[2]), &pt(&[2])).unwrap();
        assert_eq!(b, vec![rat(2), rat(1)]);
    }

    #[test]
    fn column_case_is_single_term() {
        for n in 1..=6u32 {
            let mu = Partition::column(n);
            let j = jack_j(&mu).unwrap();
            assert_eq!(j.terms().count(), 1);
            assert_eq!(
                j.coeff(&mu),
                AlphaPoly::constant(Rat::from_integer(factorial(n as usize)))
            );
        }
    }

    #[test]
    fn row_case_matches_closed_form() {
        for n in 1..=5 {
            let j = jack_j(&Partition::row(n as u32)).unwrap();
            let closed = jack_row_closed_form(n);
            for (la, expected) in &closed {
                assert_eq!(&j.coeff(la), expected, "[m_{la}] J_({n})");
            }
            assert_eq!(j.terms().count(), closed.values().filter(|c| !c.is_zero()).count());
        }
    }

    #[test]
    fn tilde_is_involutive_through_reciprocal() {
        // applying the reciprocal transform twice returns J
        for mu in partitions_of(4) {
            let j = jack_j(&mu).unwrap();
            let t = jack_tilde(&mu).unwrap();
            for (la, c) in t.terms() {
                assert_eq!(c.reciprocal(4).unwrap(), j.coeff(la));
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        for n in 1..=4 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let ip = deformed_inner(
                        &jack_j(a).unwrap().to_symfun(),
                        &jack_j(b).unwrap().to_symfun(),
                    )
                    .unwrap();
                    if a == b {
                        assert!(!ip.is_zero());
                    } else {
                        assert!(ip.is_zero(), "⟨J_{a}, J_{b}⟩ ≠ 0");
                    }
                }
            }
        }
    }

    #[test]
    fn positivity_and_triangularity_small() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let j = jack_j(&mu).unwrap();
                for (la, c) in j.terms() {
                    assert!(c.is_nonneg_integral(), "[m_{la}] J_{mu} = {c}");
                    assert!(mu.dominates(la).unwrap(), "J_{mu} has term at {la}");
                }
                assert!(!j.coeff(&mu).is_zero());
                // coefficient of m_{1^n} is n!, constant in α
                assert_eq!(
                    j.coeff(&Partition::column(n as u32)),
                    AlphaPoly::constant(Rat::from_integer(factorial(n)))
                );
            }
        }
    }

    #[test]
    fn prop_four_normalization_small() {
        // [m_{1^n}] J̃_μ = n! α^n
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let t = jack_tilde(&mu).unwrap();
                assert_eq!(
                    t.coeff(&Partition::column(n as u32)),
                    AlphaPoly::monomial(Rat::from_integer(factorial(n)), n)
                );
            }
        }
    }

    #[test]
    fn diagonal_formula_small() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                assert_eq!(
                    schur_coeff(&mu, &mu).unwrap(),
                    diagonal_product(&mu),
                    "⟨J̃_{mu}, s_{mu}⟩"
                );
            }
        }
    }

    #[test]
    fn degree_bound_enforced() {
        assert!(matches!(
            jack_j(&Partition::row(10)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn expansion_serde_round_trip() {
        let j = jack_j(&pt(&[2, 1])).unwrap();
        let js = serde_json::to_string(&j).unwrap();
        let back: JackExpansion = serde_json::from_str(&js).unwrap();
        assert_eq!(back, j);
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("jacklab-test-{}", std::process::id()));
        let table = gram_schmidt_degree(3).unwrap();
        store_degree_to_disk(&dir, 3, &table).unwrap();
        let loaded = load_degree_from_disk(&dir, 3).unwrap();
        assert_eq!(loaded.len(), table.len());
        for (mu, exp) in &table {
            assert_eq!(loaded[mu].as_ref(), exp.as_ref());
        }
        std::fs::remove_dir_all(&dir).ok();
    }
}
