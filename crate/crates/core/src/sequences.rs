//! Left factorials, desk-scale Kurepa checks, and the integer sequences
//! `V_k(±1)`, `U_k(±1)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::padic::{primes_up_to, Prime};
use crate::recurrence::Family;

/// `!n = Σ_{j<n} j!`.
pub fn left_factorial(n: u64) -> BigInt {
    LeftFactorials::new().nth(n as usize).map(|s| s.left).unwrap_or_default()
}

/// One step of [`LeftFactorials`]: `(n, !n, n!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftFactorialStep {
    pub n: u64,
    pub left: BigInt,
    pub factorial: BigInt,
}

/// Yields `(n, !n, n!)` for `n = 0, 1, 2, …`, one multiplication and one addition per step.
#[derive(Debug, Clone)]
pub struct LeftFactorials {
    n: u64,
    left: BigInt,
    factorial: BigInt,
}

impl LeftFactorials {
    pub fn new() -> Self {
        LeftFactorials {
            n: 0,
            left: BigInt::zero(),
            factorial: BigInt::one(),
        }
    }
}

impl Default for LeftFactorials {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for LeftFactorials {
    type Item = LeftFactorialStep;

    fn next(&mut self) -> Option<Self::Item> {
        let step = LeftFactorialStep {
            n: self.n,
            left: self.left.clone(),
            factorial: self.factorial.clone(),
        };
        // !(n+1) = !n + n!, (n+1)! = (n+1) n!
        self.left += &self.factorial;
        self.n += 1;
        self.factorial *= self.n;
        Some(step)
    }
}

/// Outcome of checking `gcd(!n, n!) = 2` for `2 ≤ n ≤ nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdScanReport {
    pub nmax: u64,
    /// Largest `n` such that every `2 ≤ m ≤ n` passed (1 if `n = 2` already failed).
    pub ok_up_to: u64,
    /// First `n` with `gcd(!n, n!) ≠ 2`, and that gcd.
    pub first_failure: Option<(u64, BigInt)>,
}

impl GcdScanReport {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Scans `gcd(!n, n!)` directly. A counterexample is reported, not raised.
pub fn kurepa_gcd_scan(nmax: u64) -> GcdScanReport {
    let two = BigInt::from(2);
    let mut ok_up_to = 1;
    for step in LeftFactorials::new().skip(2).take_while(|s| s.n <= nmax) {
        let g = step.left.gcd(&step.factorial);
        if g != two {
            return GcdScanReport {
                nmax,
                ok_up_to,
                first_failure: Some((step.n, g)),
            };
        }
        ok_up_to = step.n;
    }
    GcdScanReport {
        nmax,
        ok_up_to,
        first_failure: None,
    }
}

/// Zeroth p-adic digit of `Σ_{j≥0} j!`, i.e. `Σ_{j<p} j! mod p`.
///
/// # Panics
///
/// If `p! ≢ 0 (mod p)`, which would invalidate the truncation.
pub fn kurepa_digit(p: Prime) -> u64 {
    let p = p.get() as u128;
    let mut fact = 1u128;
    let mut sum = 0u128;
    for j in 0..p {
        if j > 0 {
            fact = fact * j % p;
        }
        sum = (sum + fact) % p;
    }
    // Terms j! with j ≥ p carry the factor p and leave the residue alone.
    let mut tail_sum = sum;
    for j in p..p + 10 {
        fact = fact * j % p;
        tail_sum = (tail_sum + fact) % p;
    }
    assert_eq!(tail_sum, sum, "terms beyond p - 1 changed the residue mod p");
    sum as u64
}

/// Outcome of checking `kurepa_digit(p) ≠ 0` for odd primes `p ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitScanReport {
    pub bound: u64,
    pub checked_primes: usize,
    pub first_failure: Option<Prime>,
}

impl DigitScanReport {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn kurepa_digit_scan(bound: u64) -> DigitScanReport {
    let mut checked_primes = 0;
    for p in primes_up_to(bound).into_iter().filter(|p| p.get() != 2) {
        checked_primes += 1;
        if kurepa_digit(p) == 0 {
            return DigitScanReport {
                bound,
                checked_primes,
                first_failure: Some(p),
            };
        }
    }
    DigitScanReport {
        bound,
        checked_primes,
        first_failure: None,
    }
}

/// The four sequences `-V_k(1)`, `-V_k(-1)`, `U_k(1)`, `-U_k(-1)` for `k = 1..kmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySequences {
    pub minus_v_at_one: Vec<BigInt>,
    pub minus_v_at_minus_one: Vec<BigInt>,
    pub u_at_one: Vec<BigInt>,
    pub minus_u_at_minus_one: Vec<BigInt>,
}

/// # Panics
///
/// If `kmax` exceeds the family's range.
pub fn family_sequences(family: &Family, kmax: usize) -> FamilySequences {
    assert!(kmax <= family.kmax(), "family covers k <= {}", family.kmax());
    let one = BigInt::one();
    let minus_one = -BigInt::one();
    let mut s = FamilySequences {
        minus_v_at_one: Vec::with_capacity(kmax),
        minus_v_at_minus_one: Vec::with_capacity(kmax),
        u_at_one: Vec::with_capacity(kmax),
        minus_u_at_minus_one: Vec::with_capacity(kmax),
    };
    for k in 1..=kmax {
        s.minus_v_at_one.push(-family.v(k).eval_int(&one));
        s.minus_v_at_minus_one.push(-family.v(k).eval_int(&minus_one));
        s.u_at_one.push(family.u(k).eval_int(&one));
        s.minus_u_at_minus_one.push(-family.u(k).eval_int(&minus_one));
    }
    s
}
