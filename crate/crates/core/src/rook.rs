//! Ferrers boards, rook and hit numbers, the Goldman–Joichi–White
//! factorization Π(α + c_i - i + 1), and the board families attached to hook
//! diagonal coefficients and to ⟨J̃_(n), s_λ⟩ via cell contents.
//!
//! Hit numbers are computed by two independent routes — full permutation
//! enumeration, and expansion of the GJW product in the {C(α+k, n)} basis —
//! and the routes must agree exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_shift_expand, rat, AlphaPoly};
use crate::partition::Partition;

/// A Ferrers board inside an n×n grid: weakly increasing column heights
/// c_1 ≤ ... ≤ c_n with 0 ≤ c_i ≤ n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FerrersBoard {
    n: usize,
    heights: Vec<u32>,
}

/// The pair of boards carrying a hook diagonal coefficient, plus a record of
/// whether any height had to be clamped to zero.
#[derive(Clone, Debug)]
pub struct HookBoards {
    pub c: FerrersBoard,
    pub d: FerrersBoard,
    pub clamped: bool,
}

impl FerrersBoard {
    pub fn new(n: usize, heights: Vec<u32>) -> Result<Self> {
        if heights.len() != n {
            return Err(Error::Domain(format!(
                "board needs {n} columns, got {}",
                heights.len()
            )));
        }
        for w in heights.windows(2) {
            if w[0] > w[1] {
                return Err(Error::Domain(format!(
                    "column heights not weakly increasing: {heights:?}"
                )));
            }
        }
        if heights.iter().any(|&c| c as usize > n) {
            return Err(Error::Domain(format!(
                "column height exceeds grid size {n}: {heights:?}"
            )));
        }
        Ok(FerrersBoard { n, heights })
    }

    pub fn empty(n: usize) -> Self {
        FerrersBoard {
            n,
            heights: vec![0; n],
        }
    }

    pub fn full(n: usize) -> Self {
        FerrersBoard {
            n,
            heights: vec![n as u32; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    /// r_k for k = 0..n: placements of k nonattacking rooks on the board,
    /// by the column recurrence R[k] += R[k-1]·(c_i - (k-1)).
    pub fn rook_numbers(&self) -> Vec<u64> {
        let mut r = vec![0u64; self.n + 1];
        r[0] = 1;
        for &c in &self.heights {
            for k in (1..=self.n).rev() {
                let free = (c as i64) - (k as i64 - 1);
                if free > 0 {
                    r[k] += r[k - 1] * free as u64;
                }
            }
        }
        r
    }

    /// Π_{i=1}^{n} (α + c_i - i + 1), the GJW factorization carrier.
    pub fn gjw_product(&self) -> AlphaPoly {
        let mut p = AlphaPoly::one();
        for (i, &c) in self.heights.iter().enumerate() {
            let shift = c as i64 - (i as i64 + 1) + 1;
            p = p.mul(&AlphaPoly::new(vec![rat(shift), rat(1)]));
        }
        p
    }

    /// h_k for k = 0..n: full n-rook placements on the n×n grid with exactly
    /// k rooks on the board. Computed by permutation enumeration and checked
    /// against the GJW expansion; any disagreement is an internal error.
    pub fn hit_numbers(&self) -> Result<Vec<u64>> {
        if self.n > 9 {
            return Err(Error::Resource(format!(
                "hit number enumeration capped at n = 9, got {}",
                self.n
            )));
        }
        let mut h = vec![0u64; self.n + 1];
        // rook in column i at row π_i; on the board iff π_i ≤ c_i
        let mut rows: Vec<u32> = (1..=self.n as u32).collect();
        loop {
            let k = rows
                .iter()
                .zip(&self.heights)
                .filter(|&(&row, &c)| row <= c)
                .count();
            h[k] += 1;
            // next permutation
            let Some(i) = (0..rows.len().saturating_sub(1)).rfind(|&i| rows[i] < rows[i + 1])
            else {
                break;
            };
            let j = (i + 1..rows.len()).rfind(|&j| rows[j] > rows[i]).unwrap();
            rows.swap(i, j);
            rows[i + 1..].reverse();
        }
        // independent route: GJW product expanded in the {C(α+k, n)} basis
        let a = binomial_shift_expand(&self.gjw_product(), self.n)?;
        for (k, ak) in a.iter().enumerate() {
            if ak != &rat(h[k] as i64) {
                return Err(Error::Internal(format!(
                    "hit number mismatch on {:?} at k = {k}: enumeration {} vs GJW {ak}",
                    self.heights, h[k]
                )));
            }
        }
        Ok(h)
    }
}

impl std::fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B{:?}", self.heights)
    }
}

impl std::fmt::Debug for FerrersBoard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FerrersBoard(n={}, {:?})", self.n, self.heights)
    }
}

/// The boards B(c) and B(d) of the hook diagonal coefficient for
/// μ = (n-ℓ, 1^ℓ): c_1 = ... = c_{n-ℓ-1} = n-ℓ-2 with c_{n-ℓ+i} = n-ℓ-1+i
/// for 0 ≤ i ≤ ℓ, and d_1 = ... = d_{n-ℓ} = n-ℓ-1 with d_{n-ℓ+i} = n-ℓ-1+i
/// for 1 ≤ i ≤ ℓ. The published index bounds read backwards; ascending
/// ranges uniquely reproduce the (3,1) example boards.
pub fn hook_boards(n: usize, l: usize) -> Result<HookBoards> {
    if l + 1 > n {
        return Err(Error::Domain(format!(
            "hook leg ℓ = {l} out of range for n = {n}"
        )));
    }
    let mut clamped = false;
    let mut clamp = |v: i64| -> u32 {
        if v < 0 {
            clamped = true;
            0
        } else {
            v as u32
        }
    };
    let m = (n - l) as i64; // n - ℓ
    let mut c = Vec::with_capacity(n);
    for _ in 0..n - l - 1 {
        c.push(clamp(m - 2));
    }
    for i in 0..=l as i64 {
        c.push(clamp(m - 1 + i));
    }
    let mut d = Vec::with_capacity(n);
    for _ in 0..n - l {
        d.push(clamp(m - 1));
    }
    for i in 1..=l as i64 {
        d.push(clamp(m - 1 + i));
    }
    Ok(HookBoards {
        c: FerrersBoard::new(n, c)?,
        d: FerrersBoard::new(n, d)?,
        clamped,
    })
}

/// The content board of λ: sort the cell contents i - j in non-increasing
/// order as v_1 ≥ ... ≥ v_n and set c_i = v_i + i - 1. The result is always
/// a valid Ferrers board; a monotonicity failure would be a bug.
pub fn content_board(la: &Partition) -> Result<FerrersBoard> {
    let n = la.size();
    let mut contents: Vec<i64> = la.cells().map(|s| la.content(s).unwrap()).collect();
    contents.sort_unstable_by(|a, b| b.cmp(a));
    let mut heights = Vec::with_capacity(n);
    for (i, v) in contents.iter().enumerate() {
        let c = v + i as i64;
        if c < 0 || c as usize > n {
            return Err(Error::Internal(format!(
                "content board height {c} out of range for {la}"
            )));
        }
        heights.push(c as u32);
    }
    for w in heights.windows(2) {
        if w[0] > w[1] {
            return Err(Error::Internal(format!(
                "content board heights not monotone for {la}: {heights:?}"
            )));
        }
    }
    FerrersBoard::new(n, heights).map_err(|e| Error::Internal(e.to_string()))
}

/// All Ferrers boards in the n×n grid (weakly increasing height vectors).
pub fn all_boards(n: usize) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    let mut heights = vec![0u32; n];
    fn rec(n: usize, i: usize, min: u32, heights: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
        if i == n {
            out.push(FerrersBoard {
                n,
                heights: heights.clone(),
            });
            return;
        }
        for c in min..=n as u32 {
            heights[i] = c;
            rec(n, i + 1, c, heights, out);
        }
    }
    rec(n, 0, 0, &mut heights, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binom, newton_expand};

    fn board(n: usize, heights: &[u32]) -> FerrersBoard {
        FerrersBoard::new(n, heights.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FerrersBoard::new(2, vec![2, 1]).is_err());
        assert!(FerrersBoard::new(2, vec![1, 3]).is_err());
        assert!(FerrersBoard::new(2, vec![1]).is_err());
    }

    #[test]
    fn rook_numbers_examples() {
        let e = FerrersBoard::empty(3);
        assert_eq!(e.rook_numbers(), vec![1, 0, 0, 0]);
        // two cells in one row
        assert_eq!(board(2, &[1, 1]).rook_numbers(), vec![1, 2, 0]);
        // full n×n: r_k = C(n,k)² k!
        for n in 1..=4usize {
            let full = FerrersBoard::full(n);
            let r = full.rook_numbers();
            for (k, &rk) in r.iter().enumerate() {
                let c = binom(n as u64, k as u64);
                let fact: u64 = (1..=k as u64).product();
                assert_eq!(rk, c * c * fact);
            }
        }
    }

    #[test]
    fn hit_numbers_examples() {
        let e = FerrersBoard::empty(3);
        assert_eq!(e.hit_numbers().unwrap(), vec![6, 0, 0, 0]);
        let f = FerrersBoard::full(3);
        assert_eq!(f.hit_numbers().unwrap(), vec![0, 0, 0, 6]);
        // B(1,1) in S_2: both permutations hit exactly once
        assert_eq!(board(2, &[1, 1]).hit_numbers().unwrap(), vec![0, 2, 0]);
    }

    #[test]
    fn gjw_products() {
        assert_eq!(
            board(2, &[1, 1]).gjw_product(),
            AlphaPoly::from_i64(&[0, 1, 1])
        );
        assert_eq!(
            FerrersBoard::empty(2).gjw_product(),
            AlphaPoly::from_i64(&[0, -1, 1])
        );
        assert_eq!(
            FerrersBoard::full(2).gjw_product(),
            AlphaPoly::from_i64(&[2, 3, 1])
        );
    }

    #[test]
    fn gjw_identity_exhaustive_small() {
        // both GJW expansions against both counting routes, every board n ≤ 4
        for n in 1..=4 {
            for b in all_boards(n) {
                let h = b.hit_numbers().unwrap(); // internally checks the a-side
                let r = b.rook_numbers();
                let beta = newton_expand(&b.gjw_product(), n).unwrap();
                for k in 0..=n {
                    assert_eq!(beta[k], rat(r[n - k] as i64), "{b} k={k}");
                }
                assert_eq!(h.iter().sum::<u64>(), (1..=n as u64).product::<u64>());
            }
        }
    }

    #[test]
    fn hook_boards_example7() {
        // μ = λ = (3,1): C = (1,1,2,3), D = (2,2,2,3)
        let hb = hook_boards(4, 1).unwrap();
        assert_eq!(hb.c.heights(), &[1, 1, 2, 3]);
        assert_eq!(hb.d.heights(), &[2, 2, 2, 3]);
        assert!(!hb.clamped);

        // ℓ = 0: D is the constant board (n-1, ..., n-1) with no appended column
        let hb = hook_boards(4, 0).unwrap();
        assert_eq!(hb.d.heights(), &[3, 3, 3, 3]);
        assert_eq!(hb.c.heights(), &[2, 2, 2, 3]);

        // ℓ = n-1 degenerates to the staircase
        let hb = hook_boards(4, 3).unwrap();
        assert_eq!(hb.c.heights(), &[0, 1, 2, 3]);
        assert_eq!(hb.d.heights(), &[0, 1, 2, 3]);

        assert!(hook_boards(4, 4).is_err());
    }

    #[test]
    fn content_boards() {
        let la = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(content_board(&la).unwrap().heights(), &[2, 2, 2, 3, 3]);

        // single row: contents 0..n-1 give the constant board of height n-1,
        // whose GJW product is the rising factorial α(α+1)(α+2)(α+3)
        let row = Partition::row(4);
        assert_eq!(content_board(&row).unwrap().heights(), &[3, 3, 3, 3]);
        let rising = AlphaPoly::from_i64(&[0, 1])
            .mul(&AlphaPoly::from_i64(&[1, 1]))
            .mul(&AlphaPoly::from_i64(&[2, 1]))
            .mul(&AlphaPoly::from_i64(&[3, 1]));
        assert_eq!(content_board(&row).unwrap().gjw_product(), rising);

        // single column: contents 0, -1, ..., -(n-1) give the empty board,
        // whose GJW product is the falling factorial α(α-1)...(α-n+1)
        let col = Partition::column(4);
        assert_eq!(content_board(&col).unwrap().heights(), &[0, 0, 0, 0]);
        assert_eq!(
            content_board(&col).unwrap().gjw_product(),
            crate::exact::falling_factorial_exact(4)
        );
    }

    #[test]
    fn board_counts() {
        // weakly increasing vectors in {0..n}^n
        assert_eq!(all_boards(2).len(), 6);
        assert_eq!(all_boards(3).len(), binom(6, 3) as usize);
        assert_eq!(all_boards(4).len(), binom(8, 4) as usize);
    }

    #[test]
    fn hit_enumeration_bound() {
        let big = FerrersBoard::empty(10);
        assert!(matches!(big.hit_numbers(), Err(crate::error::Error::Resource(_))));
    }

    #[test]
    fn board_serde() {
        let b = board(3, &[1, 2, 2]);
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"{"n":3,"heights":[1,2,2]}"#);
        let back: FerrersBoard = serde_json::from_str(&js).unwrap();
        assert_eq!(back, b);
    }
}
