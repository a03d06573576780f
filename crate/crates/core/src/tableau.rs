//! Young tableaux: SSYT/SYT enumeration, descents and runs, Kostka numbers,
//! quasi-Yamanouchi tableaux, the Assaf–Searles destandardization map, RSK
//! row insertion, and elementary dual equivalence involutions.
//!
//! Rows are stored bottom-up (French). Entry a is *weakly left* of entry b
//! when a sits in a strictly higher row with column ≤ that of b; entry a is
//! *strictly right* of b when a is in a weakly lower row with column > that
//! of b. The descent-set golden test on the 12-cell example pins these
//! readings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::perm::Perm;

/// A semistandard filling: rows weakly increase left to right, columns
/// strictly increase bottom to top.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

/// A subset of {1, ..., n-1}, sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DescentSet(Vec<u8>);

impl DescentSet {
    pub fn new(mut elements: Vec<u8>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        DescentSet(elements)
    }

    pub fn empty() -> Self {
        DescentSet(Vec::new())
    }

    /// The full set {1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        DescentSet((1..n as u8).collect())
    }

    pub fn elements(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u8) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for DescentSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DescentSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(DescentSet::new(Vec::<u8>::deserialize(d)?))
    }
}

impl Tableau {
    /// Build from bottom-up rows, validating semistandardness.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::Domain("row lengths do not form a partition".into()))?;
        for row in &rows {
            for w in row.windows(2) {
                if w[0] > w[1] {
                    return Err(Error::Domain(format!("row not weakly increasing: {row:?}")));
                }
            }
            if row.contains(&0) {
                return Err(Error::Domain("tableau entries must be positive".into()));
            }
        }
        for r in 1..rows.len() {
            for (c, (above, below)) in rows[r].iter().zip(&rows[r - 1]).enumerate() {
                if above <= below {
                    return Err(Error::Domain(format!(
                        "column {} not strictly increasing upward",
                        c + 1
                    )));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Bottom row first.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, s: Cell) -> u32 {
        self.rows[s.row - 1][s.col - 1]
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each value 1..=max.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.max_entry() as usize];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        self.max_entry() == n && self.weight().iter().all(|&m| m == 1)
    }

    /// Cells holding `v`, ordered by column (a horizontal strip, so this is
    /// total and runs bottom-right to top-left).
    pub fn cells_of(&self, v: u32) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .shape
            .cells()
            .filter(|&s| self.entry(s) == v)
            .collect();
        cells.sort_by_key(|s| s.col);
        cells
    }

    /// Reading word: rows from the top row downward, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // top row first, as diagrams are drawn
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Tableau::new(Vec::<Vec<u32>>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// a weakly left of b: strictly higher row, column ≤.
fn weakly_left(a: Cell, b: Cell) -> bool {
    a.row > b.row && a.col <= b.col
}

/// a strictly right of b: weakly lower row, column >.
fn strictly_right(a: Cell, b: Cell) -> bool {
    a.row <= b.row && a.col > b.col
}

/// Des(T) = {i : i+1 weakly left of i}, for standard T.
pub fn descent_set(t: &Tableau) -> Result<DescentSet> {
    if !t.is_standard() {
        return Err(Error::Domain("descent set requires a standard tableau".into()));
    }
    let n = t.size() as u32;
    let mut cell_of = vec![Cell { row: 0, col: 0 }; n as usize + 1];
    for s in t.shape.cells() {
        cell_of[t.entry(s) as usize] = s;
    }
    let mut des = Vec::new();
    for i in 1..n {
        if weakly_left(cell_of[i as usize + 1], cell_of[i as usize]) {
            des.push(i as u8);
        }
    }
    Ok(DescentSet(des))
}

/// The runs of a standard tableau: {1..n} cut at the descents.
pub fn runs(t: &Tableau) -> Result<Vec<Vec<u32>>> {
    let des = descent_set(t)?;
    let n = t.size() as u32;
    let mut out = Vec::new();
    let mut start = 1u32;
    for &d in des.elements() {
        out.push((start..=d as u32).collect());
        start = d as u32 + 1;
    }
    out.push((start..=n).collect());
    Ok(out)
}

/// All SSYT of the given shape with entries ≤ max, in lexicographic order of
/// the bottom-up row reading.
pub fn enumerate_ssyt(shape: &Partition, max: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    fn rec(
        shape: &Partition,
        rows: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        max: u32,
        out: &mut Vec<Tableau>,
    ) {
        if r == rows.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let (nr, nc) = if c + 1 < rows[r].len() { (r, c + 1) } else { (r + 1, 0) };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=max {
            rows[r][c] = v;
            rec(shape, rows, nr, nc, max, out);
        }
        rows[r][c] = 0;
    }
    if shape.is_empty() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: Vec::new(),
        });
    } else {
        rec(shape, &mut rows, 0, 0, max, &mut out);
    }
    out
}

/// All standard Young tableaux of the given shape, by growing the diagram
/// one cell at a time.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut fill: Vec<usize> = vec![0; shape.len()]; // cells used per row
    let mut out = Vec::new();
    fn rec(
        shape: &Partition,
        rows: &mut Vec<Vec<u32>>,
        fill: &mut Vec<usize>,
        v: usize,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if v > n {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..fill.len() {
            let c = fill[r];
            let addable =
                c < shape.part(r + 1) as usize && (r == 0 || fill[r - 1] > c);
            if addable {
                rows[r][c] = v as u32;
                fill[r] += 1;
                rec(shape, rows, fill, v + 1, n, out);
                fill[r] -= 1;
                rows[r][c] = 0;
            }
        }
    }
    if n == 0 {
        out.push(Tableau {
            shape: shape.clone(),
            rows: Vec::new(),
        });
    } else {
        rec(shape, &mut rows, &mut fill, 1, n, &mut out);
    }
    out
}

/// Kostka number K_{νλ}: SSYT of shape ν and weight λ.
pub fn kostka(nu: &Partition, lambda: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() {
        return Err(Error::Domain(format!(
            "Kostka number needs |ν| = |λ|, got {nu} and {lambda}"
        )));
    }
    let mut remaining: Vec<u32> = lambda.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = nu.parts().iter().map(|&p| vec![0; p as usize]).collect();
    fn rec(rows: &mut Vec<Vec<u32>>, remaining: &mut Vec<u32>, r: usize, c: usize) -> u64 {
        if r == rows.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < rows[r].len() { (r, c + 1) } else { (r + 1, 0) };
        let mut lo = 1u32;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        let mut count = 0;
        for v in lo..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            rows[r][c] = v;
            count += rec(rows, remaining, nr, nc);
            remaining[v as usize - 1] += 1;
        }
        rows[r][c] = 0;
        count
    }
    if nu.is_empty() {
        return Ok(1);
    }
    Ok(rec(&mut rows, &mut remaining, 0, 0))
}

/// Quasi-Yamanouchi: whenever i appears, the leftmost i is weakly left of
/// some i-1.
pub fn is_quasi_yamanouchi(t: &Tableau) -> bool {
    let max = t.max_entry();
    for v in 2..=max {
        let cells_v = t.cells_of(v);
        if cells_v.is_empty() {
            continue;
        }
        let leftmost = cells_v[0];
        let prev = t.cells_of(v - 1);
        if !prev.iter().any(|&p| weakly_left(leftmost, p)) {
            return false;
        }
    }
    // every value class below the max must be inhabited
    (1..=max).all(|v| !t.cells_of(v).is_empty())
}

/// QYT of the shape with maximum entry exactly m.
pub fn qyt_list(shape: &Partition, m: u32) -> Vec<Tableau> {
    if m as usize > shape.size() {
        return Vec::new();
    }
    enumerate_ssyt(shape, m)
        .into_iter()
        .filter(|t| t.max_entry() == m && is_quasi_yamanouchi(t))
        .collect()
}

/// |QYT_{=m}(shape)|. Memoized; the verification checks query the same
/// counts across many identities.
pub fn qyt_count(shape: &Partition, m: u32) -> u64 {
    use std::sync::Mutex;
    static MEMO: Mutex<Option<std::collections::HashMap<(Partition, u32), u64>>> =
        Mutex::new(None);
    if let Some(map) = MEMO.lock().unwrap().as_ref() {
        if let Some(&c) = map.get(&(shape.clone(), m)) {
            return c;
        }
    }
    let c = qyt_list(shape, m).len() as u64;
    MEMO.lock()
        .unwrap()
        .get_or_insert_with(Default::default)
        .insert((shape.clone(), m), c);
    c
}

/// Assaf–Searles destandardization: repeatedly pick a value i whose leftmost
/// occurrence is strictly right of the rightmost i-1 (or with no i-1 at
/// all) and decrement the whole value class, until no value qualifies. Total
/// on SSYT; the result is quasi-Yamanouchi.
pub fn destandardize(t: &Tableau) -> Tableau {
    let mut rows = t.rows.clone();
    loop {
        let cur = Tableau {
            shape: t.shape.clone(),
            rows: rows.clone(),
        };
        let max = cur.max_entry();
        let mut decremented = false;
        for v in 2..=max {
            let cells_v = cur.cells_of(v);
            if cells_v.is_empty() {
                continue;
            }
            let prev = cur.cells_of(v - 1);
            let apply = if prev.is_empty() {
                true
            } else {
                let rightmost_prev = *prev.last().unwrap();
                strictly_right(cells_v[0], rightmost_prev)
            };
            if apply {
                for s in cells_v {
                    rows[s.row - 1][s.col - 1] = v - 1;
                }
                decremented = true;
                break;
            }
        }
        if !decremented {
            debug_assert!(Tableau::new(rows.clone()).is_ok());
            return Tableau {
                shape: t.shape.clone(),
                rows,
            };
        }
    }
}

/// Classical standardization, the inverse of destandardization on QYT:
/// value classes are renumbered 1..n, each class left to right.
pub fn standardize(t: &Tableau) -> Tableau {
    let mut rows = t.rows.clone();
    let mut next = 1u32;
    for v in 1..=t.max_entry() {
        for s in t.cells_of(v) {
            rows[s.row - 1][s.col - 1] = next;
            next += 1;
        }
    }
    Tableau {
        shape: t.shape.clone(),
        rows,
    }
}

/// RSK row insertion: π ↦ (P, Q), both standard of the same shape.
pub fn rsk(pi: &Perm) -> (Tableau, Tableau) {
    let mut p_rows: Vec<Vec<u32>> = Vec::new();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (step, &value) in pi.word().iter().enumerate() {
        let mut x = value as u32;
        let mut r = 0;
        loop {
            if r == p_rows.len() {
                p_rows.push(vec![x]);
                q_rows.push(vec![step as u32 + 1]);
                break;
            }
            match p_rows[r].iter().position(|&e| e > x) {
                None => {
                    p_rows[r].push(x);
                    q_rows[r].push(step as u32 + 1);
                    break;
                }
                Some(j) => {
                    std::mem::swap(&mut p_rows[r][j], &mut x);
                    r += 1;
                }
            }
        }
    }
    let p = Tableau::new(p_rows).expect("insertion tableau is semistandard");
    let q = Tableau::new(q_rows).expect("recording tableau is semistandard");
    (p, q)
}

/// Elementary dual equivalence involution d_i: fixes π when i sits between
/// i-1 and i+1; otherwise swaps i with whichever of i±1 is farther away.
pub fn dual_equiv(pi: &Perm, i: usize) -> Result<Perm> {
    let n = pi.n();
    if i <= 1 || i >= n {
        return Err(Error::Domain(format!("d_{i} undefined on S_{n}")));
    }
    let pos = pi.positions();
    let (pm, pi_, pp) = (pos[i - 1], pos[i], pos[i + 1]);
    if (pm < pi_ && pi_ < pp) || (pp < pi_ && pi_ < pm) {
        return Ok(pi.clone());
    }
    let other = if pm.abs_diff(pi_) > pp.abs_diff(pi_) { i - 1 } else { i + 1 };
    let mut word = pi.word().to_vec();
    word.swap(pos[i] - 1, pos[other] - 1);
    Perm::new(word)
}

/// Dual-equivalence class of a permutation under all d_i.
pub fn dual_equiv_class(pi: &Perm) -> Vec<Perm> {
    let n = pi.n();
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![pi.clone()];
    seen.insert(pi.clone());
    while let Some(p) = stack.pop() {
        for i in 2..n {
            let q = dual_equiv(&p, i).unwrap();
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// Descent-set census of SYT(shape): map Des(T) → multiplicity. This is the
/// fundamental quasisymmetric profile of the Schur function. Memoized.
pub fn syt_descent_census(shape: &Partition) -> BTreeMap<DescentSet, u64> {
    use std::sync::Mutex;
    static MEMO: Mutex<Option<std::collections::HashMap<Partition, BTreeMap<DescentSet, u64>>>> =
        Mutex::new(None);
    if let Some(map) = MEMO.lock().unwrap().as_ref() {
        if let Some(c) = map.get(shape) {
            return c.clone();
        }
    }
    let mut census = BTreeMap::new();
    for t in enumerate_syt(shape) {
        *census.entry(descent_set(&t).unwrap()).or_insert(0) += 1;
    }
    MEMO.lock()
        .unwrap()
        .get_or_insert_with(Default::default)
        .insert(shape.clone(), census.clone());
    census
}

/// |SYT(shape)| (the Kostka number K_{shape, 1^n}).
pub fn syt_count(shape: &Partition) -> u64 {
    syt_descent_census(shape).values().sum()
}
