//! Symmetric functions of homogeneous degree n over AlphaPoly coefficients,
//! in the monomial / elementary / complete homogeneous / power-sum / Schur
//! bases, with exact conversions, the Hall and α-deformed inner products,
//! and fundamental quasisymmetric expansions.
//!
//! All conversions route through the monomial basis as the hub. The
//! transition matrix of each basis into m has integer entries: Kostka
//! numbers for Schur, and iterated m-basis products of the generators
//! p_r = m_(r), e_r = m_(1^r), h_r = Σ_{σ⊢r} m_σ for the multiplicative
//! bases. Inverses are computed once per (degree, basis) by exact Gaussian
//! elimination and cached; the caches are read-mostly with single-writer
//! initialization.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat, AlphaPoly, Rat, RatFun};
use crate::partition::{partitions_of, Partition};
use crate::tableau::{kostka, syt_descent_census, DescentSet};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::Domain(format!("unknown basis {s:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A homogeneous symmetric function: a sparse map from partitions of the
/// degree to polynomial coefficients, tagged with its basis. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFun {
    degree: usize,
    basis: Basis,
    terms: std::collections::BTreeMap<Partition, AlphaPoly>,
}

impl SymFun {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFun {
            degree,
            basis,
            terms: Default::default(),
        }
    }

    /// The basis element b_λ itself.
    pub fn generator(basis: Basis, la: &Partition) -> Self {
        let mut f = SymFun::zero(la.size(), basis);
        f.add_term(la.clone(), AlphaPoly::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &AlphaPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, la: &Partition) -> AlphaPoly {
        self.terms.get(la).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn add_term(&mut self, la: Partition, c: AlphaPoly) {
        debug_assert_eq!(la.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(la);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &SymFun) -> Result<SymFun> {
        if self.basis != other.basis || self.degree != other.degree {
            return Err(Error::Domain(
                "cannot add symmetric functions of different basis or degree".into(),
            ));
        }
        let mut out = self.clone();
        for (la, c) in &other.terms {
            out.add_term(la.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &AlphaPoly) -> SymFun {
        let mut out = SymFun::zero(self.degree, self.basis);
        if c.is_zero() {
            return out;
        }
        for (la, t) in &self.terms {
            out.add_term(la.clone(), t.mul(c));
        }
        out
    }

    /// Re-express in another basis (routing through m).
    pub fn convert(&self, to: Basis) -> SymFun {
        if self.basis == to {
            return self.clone();
        }
        let parts = cached_parts(self.degree);
        let mut coords = vec![AlphaPoly::zero(); parts.list.len()];
        for (la, c) in &self.terms {
            coords[parts.pos[la]] = c.clone();
        }
        let m_coords = if self.basis == Basis::M {
            coords
        } else {
            apply_matrix(&to_m_matrix(self.degree, self.basis), &coords)
        };
        let out_coords = if to == Basis::M {
            m_coords
        } else {
            apply_matrix(&from_m_matrix(self.degree, to), &m_coords)
        };
        let mut out = SymFun::zero(self.degree, to);
        for (i, c) in out_coords.into_iter().enumerate() {
            out.add_term(parts.list[i].clone(), c);
        }
        out
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (la, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{}_{la}", self.basis)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFun[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct SymFunTermRepr {
    part: Partition,
    coeff: AlphaPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFunRepr {
    degree: usize,
    basis: String,
    terms: Vec<SymFunTermRepr>,
}

impl Serialize for SymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFunRepr {
            degree: self.degree,
            basis: self.basis.label().to_string(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| SymFunTermRepr {
                    part: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SymFunRepr::deserialize(d)?;
        let basis = Basis::parse(&repr.basis).map_err(serde::de::Error::custom)?;
        let mut f = SymFun::zero(repr.degree, basis);
        for t in repr.terms {
            if t.part.size() != repr.degree {
                return Err(serde::de::Error::custom(format!(
                    "term {} has wrong degree",
                    t.part
                )));
            }
            f.add_term(t.part, t.coeff);
        }
        Ok(f)
    }
}

/// A quasisymmetric function of degree n in the fundamental basis, keyed by
/// descent subsets of {1..n-1}; coefficients are polynomials in one formal
/// parameter (α, or t for the descent generating identities).
#[derive(Clone, PartialEq, Eq)]
pub struct QSymFun {
    degree: usize,
    terms: std::collections::BTreeMap<DescentSet, AlphaPoly>,
}

impl QSymFun {
    pub fn zero(degree: usize) -> Self {
        QSymFun {
            degree,
            terms: Default::default(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, des: &DescentSet) -> AlphaPoly {
        self.terms.get(des).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &AlphaPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, des: DescentSet, c: AlphaPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(des);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &QSymFun) -> QSymFun {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    /// Total of all fundamental coefficients (the image of the sum-over-Q
    /// linear functional).
    pub fn coefficient_total(&self) -> AlphaPoly {
        let mut s = AlphaPoly::zero();
        for c in self.terms.values() {
            s = s.add(c);
        }
        s
    }
}

impl fmt::Display for QSymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·Q_{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSymFun[{self}]")
    }
}

// Fundamental terms are keyed by descent subsets σ ⊆ {1..n-1}. The usual
// composition indexing is recovered as (σ_1, σ_2 - σ_1, ..., n - σ_k): a
// "des" of [3,6,8,11] at degree 12 is the composition (3,3,2,3,1).
#[derive(Serialize, Deserialize)]
struct QSymTermRepr {
    des: DescentSet,
    coeff: AlphaPoly,
}

#[derive(Serialize, Deserialize)]
struct QSymRepr {
    degree: usize,
    terms: Vec<QSymTermRepr>,
}

impl Serialize for QSymFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QSymRepr {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| QSymTermRepr {
                    des: d.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QSymRepr::deserialize(d)?;
        let mut f = QSymFun::zero(repr.degree);
        for t in repr.terms {
            f.add_term(t.des, t.coeff);
        }
        Ok(f)
    }
}

// ---------------------------------------------------------------------------
// Monomial-basis multiplication
// ---------------------------------------------------------------------------

/// Coefficient of m_ν in m_λ · m_μ: the number of ways to write the sorted
/// exponent vector of ν as a + b where a runs over arrangements of λ (with
/// zeros) and b over arrangements of μ. Using ℓ(ν) slots is exact at this
/// degree.
fn m_structure(la: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let deg = la.size() + mu.size();
    let mut out = Vec::new();
    for nu in partitions_of(deg) {
        if nu.len() > la.len() + mu.len() {
            continue;
        }
        let c = count_split_arrangements(&nu, la, mu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    out
}

fn count_split_arrangements(nu: &Partition, la: &Partition, mu: &Partition) -> u64 {
    // multiplicity tables indexed by part value
    let tally = |p: &Partition| -> HashMap<u32, u32> {
        let mut t = HashMap::new();
        for &v in p.parts() {
            *t.entry(v).or_insert(0) += 1;
        }
        t
    };
    let mut rem_a = tally(la);
    let mut rem_b = tally(mu);
    fn rec(
        slots: &[u32],
        i: usize,
        rem_a: &mut HashMap<u32, u32>,
        rem_b: &mut HashMap<u32, u32>,
    ) -> u64 {
        if i == slots.len() {
            return u64::from(rem_a.values().all(|&c| c == 0) && rem_b.values().all(|&c| c == 0));
        }
        let v = slots[i];
        let mut total = 0;
        // a = 0 or a part of λ with a ≤ v; b = v - a must be 0 or a part of μ
        let mut choices: Vec<u32> = vec![0];
        choices.extend(rem_a.iter().filter(|&(&a, &c)| c > 0 && a <= v).map(|(&a, _)| a));
        choices.sort_unstable();
        choices.dedup();
        for a in choices {
            let b = v - a;
            let a_ok = a == 0 || rem_a.get(&a).copied().unwrap_or(0) > 0;
            let b_ok = b == 0 || rem_b.get(&b).copied().unwrap_or(0) > 0;
            if !a_ok || !b_ok {
                continue;
            }
            if a > 0 {
                *rem_a.get_mut(&a).unwrap() -= 1;
            }
            if b > 0 {
                *rem_b.get_mut(&b).unwrap() -= 1;
            }
            total += rec(slots, i + 1, rem_a, rem_b);
            if a > 0 {
                *rem_a.get_mut(&a).unwrap() += 1;
            }
            if b > 0 {
                *rem_b.get_mut(&b).unwrap() += 1;
            }
        }
        total
    }
    rec(nu.parts(), 0, &mut rem_a, &mut rem_b)
}

/// Product of two symmetric functions in the monomial basis, collected back
/// into the monomial basis.
pub fn multiply_m(f: &SymFun, g: &SymFun) -> Result<SymFun> {
    if f.basis != Basis::M || g.basis != Basis::M {
        return Err(Error::Domain("multiply_m requires both factors in the m basis".into()));
    }
    let mut out = SymFun::zero(f.degree + g.degree, Basis::M);
    for (la, a) in &f.terms {
        for (mu, b) in &g.terms {
            let ab = a.mul(b);
            for (nu, c) in m_structure(la, mu) {
                out.add_term(nu, ab.scale(&rat(c as i64)));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Transition matrices (cached per degree)
// ---------------------------------------------------------------------------

type Matrix = Vec<Vec<Rat>>;
type MatrixCache = RwLock<Option<HashMap<(usize, Basis), Arc<Matrix>>>>;

struct DegreeParts {
    list: Vec<Partition>,
    pos: HashMap<Partition, usize>,
}

fn cached_parts(n: usize) -> Arc<DegreeParts> {
    static CACHE: RwLock<Option<HashMap<usize, Arc<DegreeParts>>>> = RwLock::new(None);
    if let Some(map) = CACHE.read().unwrap().as_ref() {
        if let Some(p) = map.get(&n) {
            return Arc::clone(p);
        }
    }
    let mut guard = CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(n).or_insert_with(|| {
        let list = partitions_of(n);
        let pos = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Arc::new(DegreeParts { list, pos })
    }))
}

/// Column of basis element b_λ in m-coordinates, as exact rationals
/// (in fact integers for every basis handled here).
fn column_in_m(basis: Basis, la: &Partition) -> std::collections::BTreeMap<Partition, Rat> {
    use std::collections::BTreeMap;
    let single = |p: Partition| -> BTreeMap<Partition, Rat> {
        let mut m = BTreeMap::new();
        m.insert(p, rat(1));
        m
    };
    match basis {
        Basis::M => single(la.clone()),
        Basis::S => {
            let mut col = BTreeMap::new();
            for mu in partitions_of(la.size()) {
                let k = kostka(la, &mu).expect("equal sizes");
                if k > 0 {
                    col.insert(mu, rat(k as i64));
                }
            }
            col
        }
        Basis::P | Basis::E | Basis::H => {
            let gen = |r: u32| -> BTreeMap<Partition, Rat> {
                match basis {
                    Basis::P => single(Partition::row(r)),
                    Basis::E => single(Partition::column(r)),
                    Basis::H => partitions_of(r as usize)
                        .into_iter()
                        .map(|s| (s, rat(1)))
                        .collect(),
                    _ => unreachable!(),
                }
            };
            let mut acc = single(Partition::empty());
            for &r in la.parts() {
                let factor = gen(r);
                let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &factor {
                        let cab = ca * cb;
                        for (nu, c) in m_structure(a, b) {
                            let e = next.entry(nu).or_insert_with(|| rat(0));
                            *e += &cab * rat(c as i64);
                        }
                    }
                }
                next.retain(|_, c| !c.is_zero());
                acc = next;
            }
            acc
        }
    }
}

fn to_m_matrix(n: usize, basis: Basis) -> Arc<Matrix> {
    static CACHE: MatrixCache = RwLock::new(None);
    if let Some(map) = CACHE.read().unwrap().as_ref() {
        if let Some(m) = map.get(&(n, basis)) {
            return Arc::clone(m);
        }
    }
    let mut guard = CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry((n, basis)).or_insert_with(|| {
        let parts = cached_parts(n);
        let p = parts.list.len();
        let mut mat = vec![vec![rat(0); p]; p];
        for (j, la) in parts.list.iter().enumerate() {
            for (mu, c) in column_in_m(basis, la) {
                mat[parts.pos[&mu]][j] = c;
            }
        }
        Arc::new(mat)
    }))
}

fn from_m_matrix(n: usize, basis: Basis) -> Arc<Matrix> {
    static CACHE: MatrixCache = RwLock::new(None);
    if let Some(map) = CACHE.read().unwrap().as_ref() {
        if let Some(m) = map.get(&(n, basis)) {
            return Arc::clone(m);
        }
    }
    let mut guard = CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(
        map.entry((n, basis))
            .or_insert_with(|| Arc::new(invert_matrix(&to_m_matrix(n, basis)))),
    )
}

fn invert_matrix(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix must be invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t1 = &a[col][j] * &f;
                a[r][j] -= t1;
                let t2 = &inv[col][j] * &f;
                inv[r][j] -= t2;
            }
        }
    }
    inv
}

fn apply_matrix(m: &Matrix, v: &[AlphaPoly]) -> Vec<AlphaPoly> {
    let n = m.len();
    let mut out = vec![AlphaPoly::zero(); n];
    for (j, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (i, row) in m.iter().enumerate() {
            if !row[j].is_zero() {
                out[i] = out[i].add(&x.scale(&row[j]));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Inner products and quasisymmetric expansions
// ---------------------------------------------------------------------------

/// Hall scalar product: Schur functions are orthonormal.
pub fn hall_inner(f: &SymFun, g: &SymFun) -> Result<AlphaPoly> {
    if f.degree != g.degree {
        return Err(Error::Domain("hall_inner needs equal degrees".into()));
    }
    let fs = f.convert(Basis::S);
    let gs = g.convert(Basis::S);
    let mut acc = AlphaPoly::zero();
    for (la, c) in &fs.terms {
        let d = gs.coeff(la);
        if !d.is_zero() {
            acc = acc.add(&c.mul(&d));
        }
    }
    Ok(acc)
}

/// α-deformed scalar product: ⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{ℓ(λ)}. This is the
/// inner product whose orthogonal family is the Jack basis.
pub fn deformed_inner(f: &SymFun, g: &SymFun) -> Result<RatFun> {
    if f.degree != g.degree {
        return Err(Error::Domain("deformed_inner needs equal degrees".into()));
    }
    let fp = f.convert(Basis::P);
    let gp = g.convert(Basis::P);
    let mut acc = AlphaPoly::zero();
    for (la, c) in &fp.terms {
        let d = gp.coeff(la);
        if d.is_zero() {
            continue;
        }
        let z = Rat::from_integer(la.z());
        acc = acc.add(&c.mul(&d).scale(&z).mul(&AlphaPoly::monomial(rat(1), la.len())));
    }
    Ok(RatFun::from_poly(acc))
}

/// Gessel expansion of a Schur function: the coefficient of Q_σ is the
/// number of standard tableaux of the shape with descent set σ.
pub fn schur_to_fundamental(la: &Partition) -> QSymFun {
    let mut q = QSymFun::zero(la.size());
    for (des, count) in syt_descent_census(la) {
        q.add_term(des, AlphaPoly::constant(rat(count as i64)));
    }
    q
}

/// Linear extension of the Gessel expansion to any symmetric function.
pub fn symfun_to_qsym(f: &SymFun) -> QSymFun {
    let fs = f.convert(Basis::S);
    let mut q = QSymFun::zero(f.degree());
    for (la, c) in &fs.terms {
        for (des, count) in syt_descent_census(la) {
            q.add_term(des, c.scale(&rat(count as i64)));
        }
    }
    q
}

/// Deformed Gram matrix of the monomial basis, indexed like
/// `partitions_of(n)`; entry (i, j) is ⟨m_i, m_j⟩ as a polynomial in α.
pub fn monomial_gram(n: usize) -> Vec<Vec<AlphaPoly>> {
    let parts = cached_parts(n);
    let p = parts.list.len();
    let from_p = from_m_matrix(n, Basis::P); // m-coords → p-coords
    let z: Vec<Rat> = parts
        .list
        .iter()
        .map(|la| Rat::from_integer(la.z()))
        .collect();
    let lens: Vec<usize> = parts.list.iter().map(Partition::len).collect();
    let mut gram = vec![vec![AlphaPoly::zero(); p]; p];
    for i in 0..p {
        for j in i..p {
            let mut acc: HashMap<usize, Rat> = HashMap::new();
            for rho in 0..p {
                let ci = &from_p[rho][i];
                let cj = &from_p[rho][j];
                if ci.is_zero() || cj.is_zero() {
                    continue;
                }
                let term = ci * cj * &z[rho];
                *acc.entry(lens[rho]).or_insert_with(|| rat(0)) += term;
            }
            let deg = acc.keys().copied().max().unwrap_or(0);
            let mut coeffs = vec![rat(0); deg + 1];
            for (l, c) in acc {
                coeffs[l] = c;
            }
            let poly = AlphaPoly::new(coeffs);
            gram[i][j] = poly.clone();
            gram[j][i] = poly;
        }
    }
    gram
}

/// Converts a big integer to a coefficient.
pub fn bigint_rat(b: BigInt) -> Rat {
    Rat::from_integer(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gen(b: Basis, parts: &[u32]) -> SymFun {
        SymFun::generator(b, &pt(parts))
    }

    #[test]
    fn schur_to_monomial() {
        let s2 = gen(Basis::S, &[2]).convert(Basis::M);
        assert_eq!(s2.coeff(&pt(&[2])), AlphaPoly::one());
        assert_eq!(s2.coeff(&pt(&[1, 1])), AlphaPoly::one());
        // m_(1,1) = s_(1,1); and s_(2) - m_(2) - m_(1,1) = 0 round trip
        let m11 = gen(Basis::M, &[1, 1]).convert(Basis::S);
        assert_eq!(m11.coeff(&pt(&[1, 1])), AlphaPoly::one());
        assert_eq!(m11.coeff(&pt(&[2])), AlphaPoly::zero());
        let round = s2.convert(Basis::S);
        assert_eq!(round, gen(Basis::S, &[2]));
    }

    #[test]
    fn power_to_monomial() {
        // p_2 = m_(2); p_(1,1) = m_(2) + 2m_(1,1) by expanding (x1+x2)²
        let p2 = gen(Basis::P, &[2]).convert(Basis::M);
        assert_eq!(p2, gen(Basis::M, &[2]));
        let p11 = gen(Basis::P, &[1, 1]).convert(Basis::M);
        assert_eq!(p11.coeff(&pt(&[2])), AlphaPoly::one());
        assert_eq!(p11.coeff(&pt(&[1, 1])), AlphaPoly::constant(rat(2)));
    }

    #[test]
    fn monomial_products() {
        let m1 = gen(Basis::M, &[1]);
        let sq = multiply_m(&m1, &m1).unwrap();
        assert_eq!(sq.coeff(&pt(&[2])), AlphaPoly::one());
        assert_eq!(sq.coeff(&pt(&[1, 1])), AlphaPoly::constant(rat(2)));

        let m2m1 = multiply_m(&gen(Basis::M, &[2]), &m1).unwrap();
        assert_eq!(m2m1.coeff(&pt(&[3])), AlphaPoly::one());
        assert_eq!(m2m1.coeff(&pt(&[2, 1])), AlphaPoly::one());
        assert_eq!(m2m1.coeff(&pt(&[1, 1, 1])), AlphaPoly::zero());

        let zero = SymFun::zero(1, Basis::M);
        assert!(multiply_m(&m1, &zero).unwrap().is_zero());
        assert!(multiply_m(&m1, &gen(Basis::S, &[1])).is_err());
    }

    #[test]
    fn basis_round_trips() {
        // every basis element of every degree ≤ 6 survives b → b₀ → b
        for n in 0..=6 {
            for la in partitions_of(n) {
                for b in [Basis::M, Basis::S, Basis::P, Basis::E, Basis::H] {
                    let f = SymFun::generator(b, &la);
                    for b0 in [Basis::M, Basis::S, Basis::P] {
                        assert_eq!(f.convert(b0).convert(b), f, "{b:?}→{b0:?}→{b:?} at {la}");
                    }
                }
            }
        }
        // one non-trivial polynomial-coefficient round trip
        let mut f = SymFun::zero(4, Basis::S);
        f.add_term(pt(&[2, 2]), AlphaPoly::from_i64(&[1, -3, 2]));
        f.add_term(pt(&[4]), AlphaPoly::constant(rat_frac(7, 3)));
        assert_eq!(f.convert(Basis::P).convert(Basis::M).convert(Basis::S), f);
    }

    #[test]
    fn hall_inner_products() {
        for la in partitions_of(4) {
            for mu in partitions_of(4) {
                let v = hall_inner(
                    &SymFun::generator(Basis::S, &la),
                    &SymFun::generator(Basis::S, &mu),
                )
                .unwrap();
                let expected = if la == mu { AlphaPoly::one() } else { AlphaPoly::zero() };
                assert_eq!(v, expected);
            }
        }
        // ⟨h_(1,1), h_(1,1)⟩ = 2 since h_(1,1) = s_(2) + s_(1,1)
        let h11 = gen(Basis::H, &[1, 1]);
        assert_eq!(hall_inner(&h11, &h11).unwrap(), AlphaPoly::constant(rat(2)));
        assert!(hall_inner(&gen(Basis::S, &[1]), &gen(Basis::S, &[2])).is_err());
    }

    #[test]
    fn monomial_h_duality() {
        // ⟨m_λ, h_μ⟩ = δ_{λμ}, a conversion sanity oracle
        for n in 1..=6 {
            for la in partitions_of(n) {
                for mu in partitions_of(n) {
                    let v = hall_inner(
                        &SymFun::generator(Basis::M, &la),
                        &SymFun::generator(Basis::H, &mu),
                    )
                    .unwrap();
                    let expected = if la == mu { AlphaPoly::one() } else { AlphaPoly::zero() };
                    assert_eq!(v, expected, "⟨m_{la}, h_{mu}⟩");
                }
            }
        }
    }

    #[test]
    fn deformed_inner_products() {
        let p1 = gen(Basis::P, &[1]);
        assert_eq!(
            deformed_inner(&p1, &p1).unwrap().as_poly().unwrap(),
            &AlphaPoly::monomial(rat(1), 1)
        );
        let p2 = gen(Basis::P, &[2]);
        let p11 = gen(Basis::P, &[1, 1]);
        assert!(deformed_inner(&p2, &p11).unwrap().is_zero());
        assert_eq!(
            deformed_inner(&p11, &p11).unwrap().as_poly().unwrap(),
            &AlphaPoly::monomial(rat(2), 2)
        );
    }

    #[test]
    fn fundamental_expansions() {
        let q = schur_to_fundamental(&pt(&[3]));
        assert_eq!(q.coeff(&DescentSet::empty()), AlphaPoly::one());
        assert_eq!(q.terms().count(), 1);

        let q = schur_to_fundamental(&pt(&[1, 1, 1]));
        assert_eq!(q.coeff(&DescentSet::full(3)), AlphaPoly::one());
        assert_eq!(q.terms().count(), 1);

        // s_(2,1) = Q_{1} + Q_{2}
        let q = schur_to_fundamental(&pt(&[2, 1]));
        assert_eq!(q.coeff(&DescentSet::new(vec![1])), AlphaPoly::one());
        assert_eq!(q.coeff(&DescentSet::new(vec![2])), AlphaPoly::one());
        assert_eq!(q.terms().count(), 2);

        // linearity: s_(2) + s_(1,1) → Q_∅ + Q_{1}
        let f = gen(Basis::S, &[2]).add(&gen(Basis::S, &[1, 1])).unwrap();
        let q = symfun_to_qsym(&f);
        assert_eq!(q.coeff(&DescentSet::empty()), AlphaPoly::one());
        assert_eq!(q.coeff(&DescentSet::new(vec![1])), AlphaPoly::one());
        assert!(symfun_to_qsym(&SymFun::zero(3, Basis::S)).is_zero());
    }

    #[test]
    fn qsym_expansion_is_injective() {
        // the census vectors of the Schur functions are linearly
        // independent for n ≤ 7, so symfun_to_qsym is injective
        for n in 1..=7 {
            let parts = partitions_of(n);
            let mut keys: Vec<DescentSet> = Vec::new();
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for la in &parts {
                let census = crate::tableau::syt_descent_census(la);
                for d in census.keys() {
                    if !keys.contains(d) {
                        keys.push(d.clone());
                    }
                }
                rows.push(Vec::new());
                let row = rows.last_mut().unwrap();
                for k in &keys {
                    row.push(rat(census.get(k).copied().unwrap_or(0) as i64));
                }
            }
            let width = keys.len();
            for row in &mut rows {
                row.resize(width, rat(0));
            }
            // Gaussian elimination rank
            let mut rank = 0;
            let mut mat = rows.clone();
            for col in 0..width {
                if rank == mat.len() {
                    break;
                }
                if let Some(p) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) {
                    mat.swap(rank, p);
                    let d = mat[rank][col].clone();
                    for entry in mat[rank].iter_mut() {
                        *entry = &*entry / &d;
                    }
                    for r in 0..mat.len() {
                        if r != rank && !mat[r][col].is_zero() {
                            let f = mat[r][col].clone();
                            let pivot_row = mat[rank].clone();
                            for (entry, pivot) in mat[r].iter_mut().zip(&pivot_row) {
                                *entry -= pivot * &f;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            assert_eq!(rank, parts.len(), "census rank deficient at n = {n}");
        }
    }

    #[test]
    fn symfun_serde() {
        let mut f = SymFun::zero(3, Basis::M);
        f.add_term(pt(&[2, 1]), AlphaPoly::from_i64(&[0, 2]));
        let js = serde_json::to_value(&f).unwrap();
        assert_eq!(
            js,
            serde_json::json!({
                "degree": 3, "basis": "m",
                "terms": [{"part": [2, 1], "coeff": ["0", "2"]}]
            })
        );
        let back: SymFun = serde_json::from_value(js).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn qsym_serde() {
        let mut q = QSymFun::zero(3);
        q.add_term(DescentSet::new(vec![2]), AlphaPoly::from_i64(&[1, 1]));
        let js = serde_json::to_value(&q).unwrap();
        assert_eq!(
            js,
            serde_json::json!({
                "degree": 3,
                "terms": [{"des": [2], "coeff": ["1", "1"]}]
            })
        );
        let back: QSymFun = serde_json::from_value(js).unwrap();
        assert_eq!(back, q);
    }
}
