//! Permutation statistics, Eulerian and λ-restricted Eulerian numbers,
//! Stirling numbers, set partitions, and the block-sorting map f_β.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of {1..n}, stored as its one-line word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Domain(format!("not a permutation: {word:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Perm(word))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of descents: positions i with π_i > π_{i+1}.
    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// 1-based position of each value; index 0 unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i + 1;
        }
        pos
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.0 {
            if self.0.len() > 9 {
                write!(f, "{v},")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

/// All of S_n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut word: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Perm(word.clone()));
        // next_permutation
        let Some(i) = (0..word.len().saturating_sub(1)).rfind(|&i| word[i] < word[i + 1]) else {
            break;
        };
        let j = (i + 1..word.len()).rfind(|&j| word[j] > word[i]).unwrap();
        word.swap(i, j);
        word[i + 1..].reverse();
    }
    out
}

/// Eulerian number A(n, k): permutations of S_n with k descents. Direct
/// enumeration for n ≤ 9, memoized recurrence beyond.
pub fn eulerian(n: usize, k: usize) -> u64 {
    static ROWS: Mutex<Option<HashMap<usize, Vec<u64>>>> = Mutex::new(None);
    let mut guard = ROWS.lock().unwrap();
    let rows = guard.get_or_insert_with(HashMap::new);
    fn row(rows: &mut HashMap<usize, Vec<u64>>, n: usize) -> Vec<u64> {
        if let Some(r) = rows.get(&n) {
            return r.clone();
        }
        let r = if n <= 9 {
            let mut counts = vec![0u64; n.max(1)];
            for p in permutations(n) {
                counts[p.des()] += 1;
            }
            counts
        } else {
            // A(n,k) = (k+1)·A(n-1,k) + (n-k)·A(n-1,k-1)
            let prev = row(rows, n - 1);
            let mut counts = vec![0u64; n];
            for k in 0..n {
                let a = if k < prev.len() { prev[k] } else { 0 };
                let b = if k >= 1 && k - 1 < prev.len() { prev[k - 1] } else { 0 };
                counts[k] = (k as u64 + 1) * a + (n as u64 - k as u64) * b;
            }
            counts
        };
        rows.insert(n, r.clone());
        r
    }
    let r = row(rows, n);
    r.get(k).copied().unwrap_or(0)
}

/// Stirling number of the second kind S(n, k).
pub fn stirling2(n: usize, k: usize) -> u64 {
    if k == 0 || k > n {
        return u64::from(n == 0 && k == 0);
    }
    let mut row = vec![0u64; n + 1];
    row[0] = 1; // S(0,0)
    for m in 1..=n {
        for j in (1..=m.min(k)).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// All λ-restricted permutations: the values of each block
/// λ_1+...+λ_{b-1}+1 ..= λ_1+...+λ_b appear in increasing order. Generated
/// as multiset shuffles (n!/λ! words), not by filtering S_n.
pub fn restricted_permutations(shape: &Partition) -> Vec<Perm> {
    let n = shape.size();
    let offsets: Vec<u8> = shape
        .parts()
        .iter()
        .scan(0u8, |acc, &p| {
            let o = *acc;
            *acc += p as u8;
            Some(o)
        })
        .collect();
    let mut used: Vec<u32> = vec![0; shape.len()];
    let mut word: Vec<u8> = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(
        shape: &[u32],
        offsets: &[u8],
        used: &mut Vec<u32>,
        word: &mut Vec<u8>,
        n: usize,
        out: &mut Vec<Perm>,
    ) {
        if word.len() == n {
            out.push(Perm(word.clone()));
            return;
        }
        for b in 0..shape.len() {
            if used[b] < shape[b] {
                used[b] += 1;
                word.push(offsets[b] + used[b] as u8);
                rec(shape, offsets, used, word, n, out);
                word.pop();
                used[b] -= 1;
            }
        }
    }
    rec(shape.parts(), &offsets, &mut used, &mut word, n, &mut out);
    out
}

/// λ-restricted Eulerian number A(λ, k).
pub fn restricted_eulerian(shape: &Partition, k: usize) -> u64 {
    restricted_permutations(shape)
        .iter()
        .filter(|p| p.des() == k)
        .count() as u64
}

/// A set partition of {1..n}: disjoint nonempty blocks covering everything.
/// Canonical form: elements sorted within blocks, blocks sorted by minimum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SetPartition {
    blocks: Vec<Vec<u8>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<u8>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Domain("empty block in set partition".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(Error::Domain(format!(
                        "blocks do not partition 1..{n}: {blocks:?}"
                    )));
                }
                seen[v as usize] = true;
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// |β|, the number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

/// All set partitions of {1..n} via restricted growth strings, which yields
/// the canonical block-minimum order.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n > 12 {
        return Err(Error::Resource(format!(
            "set partition enumeration capped at n = 12, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut rgs = vec![0u8; n];
    fn rec(rgs: &mut Vec<u8>, i: usize, max: u8, n: usize, out: &mut Vec<SetPartition>) {
        if i == n {
            let k = max as usize + 1;
            let mut blocks = vec![Vec::new(); k];
            for (v, &b) in rgs.iter().enumerate() {
                blocks[b as usize].push(v as u8 + 1);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(rgs, i + 1, max.max(b), n, out);
        }
    }
    if n == 0 {
        out.push(SetPartition { blocks: Vec::new() });
    } else {
        // first element always opens block 0
        rec(&mut rgs, 1, 0, n, &mut out);
    }
    Ok(out)
}

/// Bell number B_n (used as an enumeration cross-check).
pub fn bell(n: usize) -> u64 {
    (1..=n.max(1)).map(|k| stirling2(n, k)).sum::<u64>().max(1)
}

/// f_β(π): within the positions occupied by each block's values, rewrite
/// those values in increasing order; the position sets themselves do not
/// move.
pub fn f_beta(pi: &Perm, beta: &SetPartition) -> Perm {
    let pos = pi.positions();
    let mut word = pi.word().to_vec();
    for block in beta.blocks() {
        let mut places: Vec<usize> = block.iter().map(|&v| pos[v as usize]).collect();
        places.sort_unstable();
        for (&value, &place) in block.iter().zip(places.iter()) {
            word[place - 1] = value;
        }
    }
    Perm(word)
}
