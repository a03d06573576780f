//! Dense univariate polynomials over the rationals.
//!
//! The variable is the Jack parameter α throughout the Jack machinery, but
//! the type is variable-agnostic: the conjecture checks reuse it for the
//! companion polynomials in `z` whose real-rootedness is tested.
//!
//! Degrees in this crate stay around n ≤ 12, so a dense `Vec` of reduced
//! rationals is the right representation; no sparse or modular tricks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat, Rat};
use crate::error::{Error, Result};

/// Polynomial in α with rational coefficients, constant term first.
///
/// Invariant: the highest stored coefficient is nonzero; the zero polynomial
/// stores no coefficients at all.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rat>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        AlphaPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn alpha() -> Self {
        AlphaPoly::new(vec![rat(0), rat(1)])
    }

    /// `c · α^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        let mut v = vec![rat(0); k + 1];
        v[k] = c;
        AlphaPoly { coeffs: v }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        AlphaPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of α^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        AlphaPoly::new(v)
    }

    pub fn sub(&self, other: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - other.coeff(i));
        }
        AlphaPoly::new(v)
    }

    pub fn neg(&self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || other.is_zero() {
            return AlphaPoly::zero();
        }
        let mut v = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        AlphaPoly::new(v)
    }

    pub fn scale(&self, c: &Rat) -> AlphaPoly {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> AlphaPoly {
        let mut acc = AlphaPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> AlphaPoly {
        if self.coeffs.len() <= 1 {
            return AlphaPoly::zero();
        }
        AlphaPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    ///
    /// Panics on division by the zero polynomial.
    pub fn divrem(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (AlphaPoly::zero(), self.clone());
        }
        let mut quot = vec![rat(0); rem.len() - dd];
        while rem.len() > dd {
            let last = rem.last().unwrap().clone();
            if last.is_zero() {
                rem.pop();
                continue;
            }
            let k = rem.len() - 1 - dd;
            let q = last / lead;
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + j] -= t;
            }
            quot[k] = q;
            // leading term cancels exactly
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (AlphaPoly::new(quot), AlphaPoly::new(rem))
    }

    /// Division that must be exact; `Internal` error on a nonzero remainder.
    pub fn exact_div(&self, d: &AlphaPoly) -> Result<AlphaPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact polynomial division".into()))
        }
    }

    /// Positive rational content: the scale factor that makes the
    /// coefficients coprime integers. Zero polynomial has content 1.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return rat(1);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Divide out the content: integer coprime coefficients, sign preserved.
    pub fn primitive(&self) -> AlphaPoly {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Scale to leading coefficient 1.
    pub fn monic(&self) -> AlphaPoly {
        match self.leading() {
            None => AlphaPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// `α^n · p(1/α)`: reverses the coefficients within a window of size
    /// `n + 1`. Errors when `deg p > n`.
    pub fn reciprocal(&self, n: usize) -> Result<AlphaPoly> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeOverflow { degree: d, order: n });
            }
        }
        let mut v = vec![rat(0); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Ok(AlphaPoly::new(v))
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.denom().is_one() && !c.numer().is_negative())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Render with an explicit variable name (used for the `z`-companion
    /// polynomials in failure witnesses).
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = if mag.is_one() && i > 0 {
                String::new()
            } else if mag.denom().is_one() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            out.push_str(&coeff_str);
            if i >= 1 {
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }
}

/// Monic gcd of two polynomials, with content stripping along the way to
/// keep intermediate integers small. gcd(0, 0) = 0.
pub fn poly_gcd(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
    let mut a = a.primitive();
    let mut b = b.primitive();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = r.primitive();
    }
    a.monic()
}

/// Squarefree part `p / gcd(p, p′)`, primitive-normalized with the sign of
/// the leading coefficient preserved.
pub fn squarefree_part(p: &AlphaPoly) -> Result<AlphaPoly> {
    if p.is_zero() {
        return Err(Error::Domain("squarefree part of zero polynomial".into()));
    }
    let g = poly_gcd(p, &p.derivative());
    Ok(p.exact_div(&g)?.primitive())
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("α"))
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        AlphaPoly::add(self, rhs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        AlphaPoly::sub(self, rhs)
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        AlphaPoly::mul(self, rhs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::neg(self)
    }
}

// External interface: a JSON array of "p/q" strings, constant term first.
impl Serialize for AlphaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(
                s.parse::<Rat>()
                    .map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}")))?,
            );
        }
        Ok(AlphaPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64(coeffs)
    }

    #[test]
    fn eval_examples() {
        // α² + α at 2 → 6
        assert_eq!(p(&[0, 1, 1]).eval(&rat(2)), rat(6));
        // zero polynomial at 5 → 0
        assert_eq!(AlphaPoly::zero().eval(&rat(5)), rat(0));
        // α(α+1) at -1 → 0
        assert_eq!(p(&[0, 1, 1]).eval(&rat(-1)), rat(0));
    }

    #[test]
    fn reciprocal_examples() {
        // 2 + 3α, n=1 → 3 + 2α
        assert_eq!(p(&[2, 3]).reciprocal(1).unwrap(), p(&[3, 2]));
        // α², n=2 → 1
        assert_eq!(p(&[0, 0, 1]).reciprocal(2).unwrap(), p(&[1]));
        // 1 + α², n=3 → α + α³
        assert_eq!(p(&[1, 0, 1]).reciprocal(3).unwrap(), p(&[0, 1, 0, 1]));
        assert!(matches!(
            p(&[0, 0, 1]).reciprocal(1),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn divrem_and_gcd() {
        let a = p(&[-1, 0, 1]); // α² - 1
        let b = p(&[1, 1]); // α + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(poly_gcd(&a, &b), b.monic());
        // gcd of coprime is 1
        assert_eq!(poly_gcd(&p(&[1, 1]), &p(&[2, 1])), AlphaPoly::one());
    }

    #[test]
    fn squarefree() {
        // (α+1)²(α-2) → (α+1)(α-2) up to scale
        let sq = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[-2, 1]));
        let sf = squarefree_part(&sq).unwrap();
        assert_eq!(sf.monic(), p(&[1, 1]).mul(&p(&[-2, 1])).monic());
    }

    #[test]
    fn content_primitive() {
        let q = AlphaPoly::new(vec![rat_frac(2, 3), rat_frac(4, 3)]);
        assert_eq!(q.content(), rat_frac(2, 3));
        assert_eq!(q.primitive(), p(&[1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, 2]).to_string(), "2α^2");
        assert_eq!(p(&[1, -1, 1]).to_string(), "α^2 - α + 1");
        assert_eq!(AlphaPoly::zero().to_string(), "0");
        assert_eq!(
            AlphaPoly::new(vec![rat_frac(1, 2)]).to_string(),
            "(1/2)"
        );
    }

    #[test]
    fn serde_round_trip() {
        let q = AlphaPoly::new(vec![rat_frac(1, 2), rat(0), rat(-3)]);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"["1/2","0","-3"]"#);
        let back: AlphaPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution(coeffs in proptest::collection::vec(-20i64..=20, 0..6)) {
            let q = AlphaPoly::from_i64(&coeffs);
            let n = 6;
            let twice = q.reciprocal(n).unwrap().reciprocal(n).unwrap();
            prop_assert_eq!(twice, q);
        }

        #[test]
        fn divrem_reconstructs(a in proptest::collection::vec(-9i64..=9, 0..7),
                               b in proptest::collection::vec(-9i64..=9, 1..5)) {
            let a = AlphaPoly::from_i64(&a);
            let b = AlphaPoly::from_i64(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(&q.mul(&b) + &r, a);
            if !r.is_zero() {
                prop_assert!(r.degree().unwrap() < b.degree().unwrap());
            }
        }
    }
}
