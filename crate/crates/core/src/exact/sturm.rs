//! Real-rootedness by Sturm's theorem, exact rational arithmetic throughout.
//!
//! The chain is built on the squarefree part, with each remainder stripped
//! of its content (a positive scalar, so signs survive) to limit coefficient
//! blowup. Counting sign changes at -∞ and +∞ gives the number of distinct
//! real roots; a polynomial has only real zeros iff that count equals the
//! degree of its squarefree part.

use num_traits::Signed;

use super::poly::{squarefree_part, AlphaPoly};
use crate::error::Result;

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut prev: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(p) = prev {
            if p != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

fn sturm_chain(q: &AlphaPoly) -> Vec<AlphaPoly> {
    let mut chain = vec![q.clone(), q.derivative().primitive()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[k - 2].divrem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

/// Number of distinct real roots, by Sturm's theorem over (-∞, ∞).
pub fn real_root_count(p: &AlphaPoly) -> Result<usize> {
    let q = squarefree_part(p)?;
    if q.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let sign_of = |r: &num_rational::BigRational| -> i8 {
        if r.is_positive() {
            1
        } else if r.is_negative() {
            -1
        } else {
            0
        }
    };
    let at_pos_inf = sign_changes(chain.iter().map(|f| sign_of(f.leading().unwrap())));
    let at_neg_inf = sign_changes(chain.iter().map(|f| {
        let s = sign_of(f.leading().unwrap());
        if f.degree().unwrap() % 2 == 0 {
            s
        } else {
            -s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

/// True iff every complex root of `p` is real (vacuously true for nonzero
/// constants). Errors on the zero polynomial.
pub fn real_roots_only(p: &AlphaPoly) -> Result<bool> {
    let q = squarefree_part(p)?;
    let d = q.degree().unwrap();
    if d == 0 {
        return Ok(true);
    }
    Ok(real_root_count(p)? == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::rat;

    fn p(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64(coeffs)
    }

    /// Deterministic generator for the randomized agreement suite.
    struct SplitMix(u64);
    impl SplitMix {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }
        fn range(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }

    #[test]
    fn fixed_examples() {
        assert!(real_roots_only(&p(&[-1, 0, 1])).unwrap()); // α² - 1
        assert!(!real_roots_only(&p(&[1, 0, 1])).unwrap()); // α² + 1
        assert!(real_roots_only(&p(&[7])).unwrap()); // constant, vacuous
        assert!(real_roots_only(&p(&[0, 1])).unwrap()); // linear
        assert!(matches!(
            real_roots_only(&AlphaPoly::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn depressed_cubic_with_negative_discriminant() {
        // α³ - 3α + 3: discriminant -135 < 0 → exactly one real root.
        let q = p(&[3, -3, 0, 1]);
        assert_eq!(real_root_count(&q).unwrap(), 1);
        assert!(!real_roots_only(&q).unwrap());
        // Bisection confirmation: sign change in (-3, -2) and nowhere else
        // on a unit grid over [-10, 10].
        let mut grid_changes = 0;
        for x in -10..10 {
            let a = q.eval(&rat(x));
            let b = q.eval(&rat(x + 1));
            if (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive()) {
                grid_changes += 1;
            }
        }
        assert_eq!(grid_changes, 1);
    }

    #[test]
    fn repeated_roots_are_fine() {
        // (α-1)²(α+2)³ is real-rooted
        let q = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]).pow(3));
        assert!(real_roots_only(&q).unwrap());
        assert_eq!(real_root_count(&q).unwrap(), 2);
    }

    #[test]
    fn agrees_with_linear_factor_oracle() {
        // 200 random products of linear factors: all real, and the Sturm
        // count must equal the number of distinct roots.
        let mut rng = SplitMix(0x5eed_0001);
        for _ in 0..200 {
            let k = rng.range(1, 6) as usize;
            let mut q = AlphaPoly::one();
            let mut roots = std::collections::BTreeSet::new();
            for _ in 0..k {
                let r = rng.range(-9, 9);
                roots.insert(r);
                q = q.mul(&p(&[-r, 1]));
            }
            let scale = rng.range(1, 5);
            q = q.scale(&rat(scale));
            assert!(real_roots_only(&q).unwrap());
            assert_eq!(real_root_count(&q).unwrap(), roots.len());
        }
    }

    #[test]
    fn detects_irreducible_quadratic_factor() {
        // 200 random polynomials with an irreducible quadratic factor of
        // negative discriminant: never real-rooted.
        let mut rng = SplitMix(0x5eed_0002);
        for _ in 0..200 {
            let b = rng.range(-6, 6);
            let c = rng.range(b * b / 4 + 1, b * b / 4 + 20); // b² - 4c < 0
            let mut q = p(&[c, b, 1]);
            let extra = rng.range(0, 4) as usize;
            for _ in 0..extra {
                q = q.mul(&p(&[-rng.range(-9, 9), 1]));
            }
            assert!(!real_roots_only(&q).unwrap());
            let d = squarefree_part(&q).unwrap().degree().unwrap();
            assert!(real_root_count(&q).unwrap() < d);
        }
    }
}
