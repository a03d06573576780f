//! Exact arithmetic: arbitrary-precision rationals, dense polynomials in the
//! Jack parameter α, rational functions, the two binomial-basis transforms,
//! and the Sturm real-rootedness test.
//!
//! Everything here is exact; there is no floating-point fallback anywhere in
//! the crate.

pub mod poly;
pub mod ratfun;
pub mod sturm;
pub mod transforms;

pub use poly::AlphaPoly;
pub use ratfun::RatFun;
pub use sturm::real_roots_only;
pub use transforms::{
    binomial_shift_expand, falling_factorial_exact, falling_factorial_expand, newton_expand,
    rising_binomial,
};

use num_bigint::BigInt;

/// The coefficient field: arbitrary-precision rationals, always reduced with
/// positive denominator (guaranteed by `num_rational`).
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::from(1u32);
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Integer binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(x, k) = x(x-1)...(x-k+1)/k!` for a
/// rational `x`.
pub fn binom_rat(x: &Rat, k: usize) -> Rat {
    let mut num = rat(1);
    for t in 0..k {
        num *= x - rat(t as i64);
    }
    num / Rat::from_integer(factorial(k))
}
