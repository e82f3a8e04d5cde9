//! Numeric kernel: binomial coefficients, cascade representations, the
//! shadow function F_k, real-argument binomials with inversion, and the
//! ratio-bound primitives for bounded-size families.

use std::fmt;

use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// C(a, b) with the zero convention C(a, b) = 0 for b > a and C(a, 0) = 1.
/// Exact product formula; each intermediate product of j consecutive
/// integers is divisible by j!, so the running division never truncates.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for j in 0..b {
        acc = acc
            .checked_mul((a - j) as u128)
            .expect("binomial overflow")
            / (j + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Smallest integer a with C(a, k) >= m.
fn binomial_inverse_ceil(m: u64, k: u64) -> u64 {
    let mut a = k;
    while binomial(a, k) < m {
        a += 1;
    }
    a
}

/// The cascade form of a positive integer m at order k:
/// m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_l, l) with
/// a_k > a_{k-1} > ... > a_l >= l >= 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinomialRepresentation {
    order: u32,
    /// (a_i, i) pairs, i strictly descending from k down to l >= 1.
    terms: Vec<(u64, u32)>,
}

impl BinomialRepresentation {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Sum of the represented binomials.
    pub fn value(&self) -> u64 {
        self.terms.iter().map(|&(a, i)| binomial(a, i as u64)).sum()
    }
}

impl fmt::Display for BinomialRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (a, i)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, "+")?;
            }
            write!(f, "C({a},{i})")?;
        }
        Ok(())
    }
}

/// Greedy cascade: a_k is the largest a with C(a, k) <= m, recurse on the
/// remainder at order k-1.
pub fn k_binomial_representation(m: u64, k: u32) -> Result<BinomialRepresentation> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "k-binomial representation requires m >= 1 and k >= 1, got m = {m}, k = {k}"
        )));
    }
    let mut terms = Vec::new();
    let mut rem = m;
    let mut i = k as u64;
    while rem > 0 {
        debug_assert!(i >= 1, "cascade must terminate by order 1");
        let mut a = binomial_inverse_ceil(rem, i);
        if binomial(a, i) > rem {
            a -= 1;
        }
        terms.push((a, i as u32));
        rem -= binomial(a, i);
        i -= 1;
    }
    let rep = BinomialRepresentation { order: k, terms };
    debug_assert!(rep.value() == m);
    Ok(rep)
}

/// The k-order shadow function F_k(m): drop each lower index of the cascade
/// by one. F_k(0) = 0 by convention.
pub fn shadow_function(m: u64, k: u32) -> u64 {
    if m == 0 {
        return 0;
    }
    let rep = k_binomial_representation(m, k).expect("m >= 1, k >= 1");
    rep.terms
        .iter()
        .map(|&(a, i)| binomial(a, i as u64 - 1))
        .sum()
}

/// F_k(m)/m as an exact ratio; m >= 1.
pub fn shadow_function_ratio(m: u64, k: u32) -> Result<Ratio> {
    if m == 0 {
        return Err(Error::InvalidArgument("shadow ratio needs m >= 1".into()));
    }
    Ok(Ratio::new(shadow_function(m, k), m))
}

/// C(x, k) = x(x-1)...(x-k+1)/k! for rational x; the empty product gives 1
/// at k = 0. Monotone increasing only for x >= k-1.
pub fn real_binomial(x: &Ratio, k: u32) -> Ratio {
    let mut num = Ratio::one();
    for i in 0..k {
        num = num * (x - &Ratio::from_integer(i as i64));
    }
    let mut fact = 1u64;
    for i in 1..=k as u64 {
        fact *= i;
    }
    num / Ratio::from_integer(fact)
}

/// An approximate inverse of C(., k) at an integer value: a rational lower
/// endpoint x with C(x, k) <= m <= C(x + eps, k) and x >= k-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealBinomialQuery {
    pub k: u32,
    pub x: Ratio,
    pub eps: Ratio,
}

impl RealBinomialQuery {
    /// Value of C(x, k) at the stored lower endpoint.
    pub fn value(&self) -> Ratio {
        real_binomial(&self.x, self.k)
    }
}

/// Bisection on the monotone restriction of C(., k) to x >= k-1, stopping at
/// interval width eps. Returns the lower endpoint.
pub fn invert_binomial(m: u64, k: u32, eps: &Ratio) -> Result<RealBinomialQuery> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "invert_binomial requires m >= 1 and k >= 1, got m = {m}, k = {k}"
        )));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    let target = Ratio::from(m);
    // C(k-1, k) = 0 < m, and any integer hi with C(hi, k) >= m brackets it.
    let mut lo = Ratio::from_integer(k as i64 - 1);
    let mut hi = Ratio::from(binomial_inverse_ceil(m, k as u64));
    debug_assert!(real_binomial(&hi, k) >= target);
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) * Ratio::new(1, 2);
        if real_binomial(&mid, k) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RealBinomialQuery { k, x: lo, eps: eps.clone() })
}

/// Default bisection tolerance, 2^-20.
pub fn default_eps() -> Ratio {
    Ratio::new(1, 1u64 << 20)
}

/// The basic ratio bound for families inside a clique: if m <= C(a, k) then
/// F_k(m)/m >= k/(a-k+1).
pub fn sperner_bound(m: u64, k: u32, a: u64) -> Result<Ratio> {
    if k == 0 || a < k as u64 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "sperner_bound requires 1 <= k <= a and m >= 1, got m = {m}, k = {k}, a = {a}"
        )));
    }
    let max = binomial(a, k as u64);
    if m > max {
        return Err(Error::SpernerHypothesis { m, a, k, max });
    }
    Ok(Ratio::new(k as u64, a - k as u64 + 1))
}

/// Ceiling of p/q for nonnegative integers, q > 0.
fn ceil_div(p: u64, q: u64) -> u64 {
    p.div_ceil(q)
}

/// The largest m for which the clique-level ratio bound k/(a-k+1) is still
/// guaranteed: the sum over u = 0..k-1 of C(a - ceil(u(a+1)/k), k-u), with
/// zero terms where the ceiling overshoots.
pub fn long_interval_threshold(a: u64, k: u32) -> Result<u64> {
    if k == 0 || a < k as u64 {
        return Err(Error::InvalidArgument(format!(
            "long_interval_threshold requires a >= k >= 1, got a = {a}, k = {k}"
        )));
    }
    let k64 = k as u64;
    let mut total = 0u64;
    for u in 0..k64 {
        let shift = ceil_div(u * (a + 1), k64);
        if shift > a {
            continue;
        }
        total += binomial(a - shift, k64 - u);
    }
    Ok(total)
}

/// Whether m lies inside the long-interval window for (a, k), together with
/// the audit pair (F_k(m)/m, k/(a-k+1)).
pub fn check_long_interval(m: u64, a: u64, k: u32) -> Result<(bool, (Ratio, Ratio))> {
    if m == 0 {
        return Err(Error::InvalidArgument("check_long_interval requires m >= 1".into()));
    }
    let threshold = long_interval_threshold(a, k)?;
    let fk_ratio = shadow_function_ratio(m, k)?;
    let bound = Ratio::new(k as u64, a - k as u64 + 1);
    Ok((m <= threshold, (fk_ratio, bound)))
}

/// The ratio bound for sizes just below a full clique: if
/// C(a+1, k) - ((k-1)/k)(a-k+2) <= d <= C(a+1, k), then every m <= d has
/// F_k(m)/m >= C(a+1, k-1)/d.
pub fn short_interval_bound(d: u64, a: u64, k: u32) -> Result<Ratio> {
    if k == 0 || a < k as u64 {
        return Err(Error::InvalidArgument(format!(
            "short_interval_bound requires a >= k >= 1, got a = {a}, k = {k}"
        )));
    }
    let k64 = k as u64;
    let upper = binomial(a + 1, k64);
    let lower = Ratio::from(upper)
        - Ratio::new(k64 - 1, k64) * Ratio::from(a - k64 + 2);
    let d_ratio = Ratio::from(d);
    if d_ratio < lower || d > upper {
        return Err(Error::ShortIntervalHypothesis(format!(
            "need {lower} <= d <= {upper}, got d = {d} (a = {a}, k = {k})"
        )));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    Ok(Ratio::new(binomial(a + 1, k64 - 1), d))
}
