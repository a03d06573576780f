//! Partitions, conjugation, dominance order, diagram cells with
//! arm/leg/content statistics, and enumeration.
//!
//! Diagrams use the French convention fixed globally for the crate: row 1 is
//! the bottom row, rows are numbered upward, and a cell's content is
//! col - row (the i - j statistic of cells identified with their Cartesian
//! coordinates; for (3,2) the content multiset is {-1, 0, 0, 1, 2}).

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::factorial;

/// A partition: weakly decreasing positive parts. The empty partition (of 0)
/// is allowed.
///
/// `Ord` is lexicographic on the parts, so within a fixed size the maximum
/// is (n) and the minimum is (1^n); sorting descending reproduces the
/// reverse-lexicographic enumeration order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

/// A diagram cell, 1-based: `row` counts from the bottom (French), `col`
/// from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Domain(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("zero part in {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row (n).
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Single column (1^n).
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// Hook (n-l, 1^l); requires 0 ≤ l ≤ n-1.
    pub fn hook(n: u32, l: u32) -> Result<Self> {
        if l >= n {
            return Err(Error::Domain(format!("hook leg {l} too long for n = {n}")));
        }
        let mut parts = vec![n - l];
        parts.extend(std::iter::repeat_n(1, l as usize));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part at 1-based index, 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    /// λ′, reflecting the diagram across the diagonal.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(parts)
    }

    /// Dominance: μ ≥ λ iff every prefix sum of μ is ≥ the matching prefix
    /// sum of λ. Only defined for equal sizes.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::Domain(format!(
                "dominance undefined for |{self}| = {} vs |{other}| = {}",
                self.size(),
                other.size()
            )));
        }
        let k = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=k {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cells in reading order: bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| {
            (1..=len as usize).map(move |col| Cell { row: r + 1, col })
        })
    }

    pub fn contains(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row) as usize
    }

    fn check_cell(&self, s: Cell) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "cell ({}, {}) outside the diagram of {self}",
                s.row, s.col
            )))
        }
    }

    /// Cells strictly to the right of `s` in its row.
    pub fn arm(&self, s: Cell) -> Result<u32> {
        self.check_cell(s)?;
        Ok(self.part(s.row) - s.col as u32)
    }

    /// Cells strictly above `s` in its column.
    pub fn leg(&self, s: Cell) -> Result<u32> {
        self.check_cell(s)?;
        Ok(self
            .0
            .iter()
            .skip(s.row)
            .filter(|&&p| p as usize >= s.col)
            .count() as u32)
    }

    /// Content col - row of a cell identified with its Cartesian coordinates.
    pub fn content(&self, s: Cell) -> Result<i64> {
        self.check_cell(s)?;
        Ok(s.col as i64 - s.row as i64)
    }

    /// z_λ = Π_i i^{m_i} · m_i! over part multiplicities.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1u32);
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut m = 0usize;
            while i < self.0.len() && self.0[i] == part {
                m += 1;
                i += 1;
            }
            z *= BigInt::from(part).pow(m as u32) * factorial(m);
        }
        z
    }

    /// λ! = λ_1! λ_2! ···
    pub fn part_factorial(&self) -> BigInt {
        let mut f = BigInt::from(1u32);
        for &p in &self.0 {
            f *= factorial(p as usize);
        }
        f
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order: (n) first, (1^n)
/// last. `partitions_of(0)` is the singleton list holding the empty
/// partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(pt(&[3, 2]).conjugate(), pt(&[2, 2, 1]));
        assert_eq!(pt(&[4]).conjugate(), pt(&[1, 1, 1, 1]));
        assert_eq!(pt(&[2, 2, 1]).conjugate(), pt(&[3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance() {
        assert!(pt(&[2, 1]).dominates(&pt(&[1, 1, 1])).unwrap());
        assert!(!pt(&[1, 1, 1]).dominates(&pt(&[2, 1])).unwrap());
        assert!(!pt(&[3, 3]).dominates(&pt(&[4, 1, 1])).unwrap());
        assert!(pt(&[2, 1]).dominates(&pt(&[2, 1])).unwrap());
        assert!(pt(&[2, 1]).dominates(&pt(&[4])).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            partitions_of(3),
            vec![pt(&[3]), pt(&[2, 1]), pt(&[1, 1, 1])]
        );
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(7).len(), brute_force_count(7));
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        // reverse-lexicographic: descending in the natural Ord
        let ps = partitions_of(6);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    fn brute_force_count(n: u32) -> usize {
        // independent recursive count: p(n | parts ≤ m)
        fn count(n: u32, m: u32) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=n.min(m)).map(|f| count(n - f, f)).sum()
        }
        count(n, n)
    }

    #[test]
    fn arm_leg_content() {
        let l = pt(&[3, 2]);
        let mut contents: Vec<i64> = l.cells().map(|s| l.content(s).unwrap()).collect();
        contents.sort();
        assert_eq!(contents, vec![-1, 0, 0, 1, 2]);

        let row = pt(&[5]);
        let s = Cell { row: 1, col: 1 };
        assert_eq!(row.arm(s).unwrap(), 4);
        assert_eq!(row.leg(s).unwrap(), 0);

        let l = pt(&[2, 2, 1]);
        assert_eq!(l.leg(Cell { row: 1, col: 1 }).unwrap(), 2);
        assert_eq!(l.arm(Cell { row: 1, col: 1 }).unwrap(), 1);
        assert!(l.arm(Cell { row: 2, col: 3 }).is_err());
    }

    #[test]
    fn constants() {
        assert_eq!(pt(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(pt(&[1, 1, 1]).part_factorial(), BigInt::from(1));
        assert_eq!(pt(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(pt(&[2, 1]).part_factorial(), BigInt::from(2));
        assert_eq!(pt(&[3, 2]).z(), BigInt::from(6));
        assert_eq!(pt(&[3, 2]).part_factorial(), BigInt::from(12));
    }

    #[test]
    fn involution_and_dominance_reversal() {
        for n in 1..=8 {
            let ps = partitions_of(n);
            for a in &ps {
                assert_eq!(&a.conjugate().conjugate(), a);
                assert_eq!(a.cells().count(), n);
                for b in &ps {
                    let d = a.dominates(b).unwrap();
                    let dc = b.conjugate().dominates(&a.conjugate()).unwrap();
                    assert_eq!(d, dc, "dominance must reverse under conjugation");
                }
            }
        }
    }

    #[test]
    fn arm_leg_reflect() {
        for n in 1..=8 {
            for l in partitions_of(n) {
                let lc = l.conjugate();
                for s in l.cells() {
                    let t = Cell { row: s.col, col: s.row };
                    assert_eq!(l.arm(s).unwrap(), lc.leg(t).unwrap());
                    assert_eq!(l.leg(s).unwrap(), lc.arm(t).unwrap());
                }
            }
        }
    }
}
