//! p-adic valuations, norms and digit expansions of rationals.
//!
//! Norms are reported through their exponent: `|q|_p = p^(-v)` where
//! `v = v_p(q)`, so "small" p-adic numbers have large valuations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A prime number, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic primality by trial division with a 6k ± 1 wheel.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `≤ bound`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<Prime> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(Prime(i as u64));
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Valuation exponent `v` with `|q|_p = p^(-v)`. `Infinite` is the valuation of zero.
///
/// The derived ordering puts every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValExponent {
    Finite(i64),
    Infinite,
}

impl ValExponent {
    pub fn is_infinite(self) -> bool {
        matches!(self, ValExponent::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ValExponent::Finite(v) => Some(v),
            ValExponent::Infinite => None,
        }
    }

    /// `true` iff the exponent is at least `bound` (always true for `Infinite`).
    pub fn at_least(self, bound: i64) -> bool {
        self >= ValExponent::Finite(bound)
    }
}

impl fmt::Display for ValExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValExponent::Finite(v) => write!(f, "{}", v),
            ValExponent::Infinite => f.write_str("inf"),
        }
    }
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut n = n;
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// `v_p(n!)` by Legendre's floor sum `⌊n/p⌋ + ⌊n/p²⌋ + …`.
pub fn legendre_valuation(n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Exponent `e` with `|n!|_p = p^(-e)`, computed as `(n - s_n) / (p - 1)`.
///
/// # Panics
///
/// If the division is inexact, which can only come from a broken digit sum.
pub fn factorial_norm_exponent(n: u64, p: Prime) -> u64 {
    let num = n - digit_sum(n, p);
    let den = p.get() - 1;
    assert!(
        num % den == 0,
        "(n - s_n) = {} not divisible by p - 1 = {}",
        num,
        den
    );
    num / den
}

/// `v_p` of a nonzero integer together with the `p`-free cofactor.
fn split_int(a: &BigInt, p: &BigInt) -> (u64, BigInt) {
    debug_assert!(!a.is_zero());
    let mut v = 0;
    let mut rest = a.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return (v, rest);
        }
        rest = q;
        v += 1;
    }
}

pub fn vp_int(a: &BigInt, p: Prime) -> ValExponent {
    if a.is_zero() {
        return ValExponent::Infinite;
    }
    ValExponent::Finite(split_int(a, &p.to_bigint()).0 as i64)
}

/// `v_p(a/b) = v_p(a) - v_p(b)`; `Infinite` for zero.
pub fn vp(q: &BigRational, p: Prime) -> ValExponent {
    if q.is_zero() {
        return ValExponent::Infinite;
    }
    let pb = p.to_bigint();
    // BigRational is kept reduced, so at most one of these is nonzero.
    let (vn, _) = split_int(q.numer(), &pb);
    let (vd, _) = split_int(q.denom(), &pb);
    ValExponent::Finite(vn as i64 - vd as i64)
}

/// `true` iff `|x|_p ≤ 1`, i.e. `x ∈ Z_p`.
pub fn in_convergence_domain(x: &BigRational, p: Prime) -> bool {
    vp(x, p).at_least(0)
}

/// `v_p(a - b)`; `Infinite` iff `a == b`.
pub fn padic_distance_exponent(a: &BigRational, b: &BigRational, p: Prime) -> ValExponent {
    vp(&(a - b), p)
}

/// Truncated canonical p-adic expansion `p^valuation · Σ digits[i] p^i`.
///
/// The zero value is stored with valuation 0 and all digits zero; every other
/// value has a nonzero first digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    pub p: Prime,
    pub valuation: i64,
    pub digits: Vec<u64>,
}

impl PadicExpansion {
    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// `Σ digits[i] p^i` as an integer in `[0, p^precision)`.
    pub fn significand(&self) -> BigInt {
        let p = self.p.to_bigint();
        self.digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * &p + BigInt::from(d))
    }

    /// The truncated value `p^valuation · significand` as a rational.
    pub fn to_rational(&self) -> BigRational {
        let s = BigRational::from_integer(self.significand());
        let p = BigRational::from_integer(self.p.to_bigint());
        s * pow_i64(&p, self.valuation)
    }
}

/// Integer power with possibly negative exponent.
pub(crate) fn pow_i64(base: &BigRational, e: i64) -> BigRational {
    let mag = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// Canonical p-adic expansion of `q` with `precision` significand digits.
///
/// Negative values get their infinite (eventually periodic) expansion,
/// truncated; e.g. `-1 = Σ (p-1) p^i`.
pub fn padic_expand(q: &BigRational, p: Prime, precision: usize) -> Result<PadicExpansion> {
    if precision == 0 {
        return Err(Error::ZeroPrecision);
    }
    if q.is_zero() {
        return Ok(PadicExpansion {
            p,
            valuation: 0,
            digits: vec![0; precision],
        });
    }
    let pb = p.to_bigint();
    let (vn, num) = split_int(q.numer(), &pb);
    let (vd, den) = split_int(q.denom(), &pb);
    let modulus = num_traits::pow(pb.clone(), precision);
    let inv = den
        .modinv(&modulus)
        .expect("denominator is a p-adic unit");
    let mut t = (num * inv).mod_floor(&modulus);
    let mut digits = Vec::with_capacity(precision);
    for _ in 0..precision {
        let (qt, r) = t.div_rem(&pb);
        let d = match r.to_u64_digits() {
            (Sign::NoSign, _) => 0,
            (_, ds) => ds[0],
        };
        digits.push(d);
        t = qt;
    }
    debug_assert!(digits[0] != 0);
    Ok(PadicExpansion {
        p,
        valuation: vn as i64 - vd as i64,
        digits,
    })
}

/// `true` iff `a ≡ b (mod p^e)` for integers, used by expansion checks.
pub fn congruent_mod_power(a: &BigInt, b: &BigInt, p: Prime, e: usize) -> bool {
    let m = num_traits::pow(p.to_bigint(), e);
    (a - b).mod_floor(&m).is_zero()
}
