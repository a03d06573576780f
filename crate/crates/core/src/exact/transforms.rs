//! The two binomial-basis expansions of a polynomial in α:
//!
//!   p(α) = Σ_{k=0}^{n} a_k · C(α+k, n)            (shifted binomial basis)
//!   p(α) = Σ_{k=1}^{n} b_{n-k} · C(α,k) · k!      (falling factorial basis)
//!
//! The a-expansion is solved at the evaluation points α = 0, -1, ..., -n,
//! where the system is triangular: at α = -j the basis element C(α+k, n)
//! vanishes for 0 ≤ k-j < n and equals a signed binomial otherwise. The
//! b-expansion is a Newton forward-difference table. Both are self-verified
//! by re-evaluation; a verification failure is an internal-inconsistency
//! error and must never fire.
//!
//! The a-sequence is returned with index k = 0..n even though the target
//! span stops at n-1: a_n = p(0), and surfacing it makes span membership
//! directly testable.

use super::poly::AlphaPoly;
use super::{binom, factorial, rat, Rat};
use crate::error::{Error, Result};

/// `C(α+j, n)` as a polynomial in α.
pub fn rising_binomial(j: i64, n: usize) -> AlphaPoly {
    let mut p = AlphaPoly::one();
    for t in 0..n as i64 {
        p = p.mul(&AlphaPoly::new(vec![rat(j - t), rat(1)]));
    }
    p.scale(&Rat::from_integer(factorial(n)).recip())
}

/// `C(α,k) · k! = α(α-1)...(α-k+1)` as a polynomial in α.
pub fn falling_factorial_exact(k: usize) -> AlphaPoly {
    let mut p = AlphaPoly::one();
    for t in 0..k as i64 {
        p = p.mul(&AlphaPoly::new(vec![rat(-t), rat(1)]));
    }
    p
}

fn check_degree(p: &AlphaPoly, n: usize) -> Result<()> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::DegreeOverflow { degree: d, order: n });
        }
    }
    Ok(())
}

/// Expand `p` in the basis `{C(α+k, n)}`, returning `a_0, ..., a_n`.
pub fn binomial_shift_expand(p: &AlphaPoly, n: usize) -> Result<Vec<Rat>> {
    check_degree(p, n)?;
    let mut a = vec![rat(0); n + 1];
    // α = 0: only C(n, n) survives.
    a[n] = p.eval(&rat(0));
    // α = -j: C(k-j, n) = 0 for j ≤ k ≤ n except k = n = j impossible here;
    // for k < j it equals (-1)^n C(j-k+n-1, n).
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    for j in 1..=n {
        let mut rhs = p.eval(&rat(-(j as i64))) * &sign;
        for (k, ak) in a.iter().enumerate().take(j - 1) {
            rhs -= ak * rat(binom((j - k + n - 1) as u64, n as u64) as i64);
        }
        a[j - 1] = rhs;
    }
    // Re-evaluate at α = 1 (and α = n, where every basis element is nonzero).
    for probe in [rat(1), rat(n as i64)] {
        let mut s = rat(0);
        for (k, ak) in a.iter().enumerate() {
            s += ak * super::binom_rat(&(&probe + rat(k as i64)), n);
        }
        if s != p.eval(&probe) {
            return Err(Error::Internal(format!(
                "binomial shift expansion failed re-evaluation at α = {probe}"
            )));
        }
    }
    Ok(a)
}

/// Full Newton expansion `p(α) = Σ_{k=0}^{n} β_k · C(α,k) · k!`, returning
/// `β_0, ..., β_n` with `β_k = Δ^k p(0) / k!`. No vanishing condition.
pub fn newton_expand(p: &AlphaPoly, n: usize) -> Result<Vec<Rat>> {
    check_degree(p, n)?;
    let mut row: Vec<Rat> = (0..=n as i64).map(|x| p.eval(&rat(x))).collect();
    let mut beta = Vec::with_capacity(n + 1);
    for k in 0..=n {
        beta.push(&row[0] / Rat::from_integer(factorial(k)));
        for i in 0..n - k {
            row[i] = &row[i + 1] - &row[i];
        }
        row.truncate(n - k);
    }
    // Re-evaluate at α = n+1, outside the interpolation points.
    let probe = rat(n as i64 + 1);
    let mut s = rat(0);
    for (k, bk) in beta.iter().enumerate() {
        s += bk * falling_factorial_exact(k).eval(&probe);
    }
    if s != p.eval(&probe) {
        return Err(Error::Internal(
            "newton expansion failed re-evaluation".into(),
        ));
    }
    Ok(beta)
}

/// Expand `p` in the basis `{C(α,k)·k!, k ≥ 1}`, returning the sequence
/// `b_{n-1}, ..., b_0` (entry j corresponds to k = j+1). Requires
/// `p(0) = 0`: the span consists of the polynomials vanishing at 0.
pub fn falling_factorial_expand(p: &AlphaPoly, n: usize) -> Result<Vec<Rat>> {
    if !p.eval(&rat(0)).eq(&rat(0)) {
        return Err(Error::NotInSpan(format!(
            "p(0) = {} ≠ 0, not in the span of {{C(α,k)k!, k ≥ 1}}",
            p.eval(&rat(0))
        )));
    }
    let beta = newton_expand(p, n)?;
    Ok(beta[1..].to_vec())
}
