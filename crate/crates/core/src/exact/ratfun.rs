//! Rational functions in α, needed transiently while orthogonalizing the
//! monomial basis: the Gram–Schmidt coefficients live in Q(α) even though
//! every finished Jack coefficient is a polynomial.
//!
//! Canonical form: gcd(num, den) = 1 and the denominator is monic (leading
//! coefficient 1, hence positive).

use std::fmt;

use num_traits::One;

use super::poly::{poly_gcd, AlphaPoly};
use super::{rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl RatFun {
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                num: AlphaPoly::zero(),
                den: AlphaPoly::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading().unwrap().recip();
        RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(AlphaPoly::one())
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        RatFun {
            num: p,
            den: AlphaPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from_poly(AlphaPoly::constant(c))
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&AlphaPoly> {
        if self.den.degree() == Some(0) && self.den.leading().map(One::is_one) == Some(true) {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Extract a polynomial, failing with an internal-inconsistency error
    /// when a denominator survives (Jack normalization must clear them all).
    pub fn into_poly(self) -> Result<AlphaPoly> {
        if self.as_poly().is_some() {
            Ok(self.num)
        } else {
            Err(Error::Internal(format!(
                "residual denominator after normalization: {}",
                self.den
            )))
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            &self.num.mul(&other.den) + &other.num.mul(&self.den),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            &self.num.mul(&other.den) - &other.num.mul(&self.den),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &AlphaPoly) -> RatFun {
        RatFun::new(self.num.mul(p), self.den.clone())
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        Ok(RatFun::new(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        if c == &rat(0) {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_poly() {
            write!(f, "{p}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_i64(coeffs)
    }

    #[test]
    fn reduction_makes_den_monic() {
        // (2α+2)/(4α) → (α+1)/(2α) with monic denominator: ((1/2)α + 1/2)/α
        let f = RatFun::new(p(&[2, 2]), p(&[0, 4]));
        assert_eq!(f.den(), &p(&[0, 1]));
        assert_eq!(f.num().coeff(1), crate::exact::rat_frac(1, 2));
    }

    #[test]
    fn arithmetic_cancels() {
        // α/(α+1) + 1/(α+1) = 1
        let a = RatFun::new(p(&[0, 1]), p(&[1, 1]));
        let b = RatFun::new(p(&[1]), p(&[1, 1]));
        assert_eq!(a.add(&b), RatFun::one());
        // (α²-1)/(α+1) reduces to α-1
        let c = RatFun::new(p(&[-1, 0, 1]), p(&[1, 1]));
        assert_eq!(c.as_poly(), Some(&p(&[-1, 1])));
        assert!(c.into_poly().is_ok());
    }

    #[test]
    fn into_poly_rejects_denominator() {
        let f = RatFun::new(p(&[1]), p(&[1, 1]));
        assert!(matches!(f.into_poly(), Err(Error::Internal(_))));
    }
}
