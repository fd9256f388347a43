//! Finite factorial-series sums, the master identity, and p-adic certificates.
//!
//! A [`SumCertificate`] pins down how close a truncated series is to its
//! claimed rational sum in `Q_p`: it stores the exact partial sum, the target,
//! the exact remainder `tail = target - partial`, the achieved valuation of that
//! remainder and the lower bound the theory promises for it.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{factorial_norm_exponent, in_convergence_domain, vp, Prime, ValExponent};
use crate::poly::{BivarPoly, IntPoly};
use crate::recurrence::Family;

/// `Σ_{n<N} n! · c(n) · x^n` for integer weights, with `x^0 = 1`.
///
/// Runs over a common denominator so the loop stays in integer arithmetic.
fn factorial_weighted_sum(
    n_terms: u64,
    x: &BigRational,
    mut weight: impl FnMut(u64) -> BigInt,
) -> BigRational {
    if n_terms == 0 {
        return BigRational::zero();
    }
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut fact = BigInt::one();
    let mut a_pow = BigInt::one();
    for n in 0..n_terms {
        if n > 0 {
            fact *= n;
            a_pow *= a;
        }
        acc = acc * b + &fact * weight(n) * &a_pow;
    }
    BigRational::new(acc, num_traits::pow(b.clone(), (n_terms - 1) as usize))
}

/// `S_k(N; x) = Σ_{n=0}^{N-1} n! n^k x^n` with `0^0 = 1`.
pub fn partial_sum_sk(k: u32, n_terms: u64, x: &BigRational) -> BigRational {
    factorial_weighted_sum(n_terms, x, |n| num_traits::pow(BigInt::from(n), k as usize))
}

/// `N! x^N A_{k-1}(N; x)`, the remainder of the finite identity.
pub fn tail_term(family: &Family, k: usize, n_terms: u64, x: &BigRational) -> BigRational {
    let n = BigInt::from(n_terms);
    let fact: BigInt = (1..=n_terms).map(BigInt::from).product();
    let a = family.a(k - 1).eval(&n, x);
    BigRational::from_integer(fact) * num_traits::pow(x.clone(), n_terms as usize) * a
}

/// Both sides of the finite identity for one `(k, N, x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub k: usize,
    pub n_terms: u64,
    pub x: BigRational,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check_degree(family: &Family, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    assert!(k <= family.kmax(), "family covers k <= {}, asked for {}", family.kmax(), k);
    Ok(())
}

/// Evaluates `Σ_{n<N} n! [n^k x^k + U_k(x)] x^n` and `V_k(x) + N! x^N A_{k-1}(N; x)`.
///
/// # Panics
///
/// If `k` exceeds the family's range.
pub fn verify_identity(
    family: &Family,
    k: usize,
    n_terms: u64,
    x: &BigRational,
) -> Result<IdentityCheck> {
    check_degree(family, k)?;
    if n_terms == 0 {
        return Err(Error::ZeroTerms);
    }
    let x_k = num_traits::pow(x.clone(), k);
    let lhs = x_k * partial_sum_sk(k as u32, n_terms, x)
        + family.u(k).eval(x) * partial_sum_sk(0, n_terms, x);
    let rhs = family.v(k).eval(x) + tail_term(family, k, n_terms, x);
    Ok(IdentityCheck {
        k,
        n_terms,
        x: x.clone(),
        lhs,
        rhs,
    })
}

/// The p-adic sum `V_k(x)` of `Σ n! [n^k x^k + U_k(x)] x^n`, the same for every prime.
pub fn invariant_sum(family: &Family, k: usize, x: &BigInt) -> Result<BigInt> {
    check_degree(family, k)?;
    Ok(family.v(k).eval_int(x))
}

/// Exact record of a truncated series against its p-adic sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumCertificate {
    pub k: usize,
    pub n_terms: u64,
    /// `None` for series without a free variable (the Bernoulli series).
    pub x: Option<BigRational>,
    pub p: Prime,
    pub partial: BigRational,
    pub target: BigRational,
    /// `target - partial`.
    pub tail: BigRational,
    pub distance_exponent: ValExponent,
    pub bound_exponent: i64,
}

impl SumCertificate {
    pub(crate) fn new(
        k: usize,
        n_terms: u64,
        x: Option<BigRational>,
        p: Prime,
        partial: BigRational,
        target: BigRational,
        bound_exponent: i64,
    ) -> Self {
        let tail = &target - &partial;
        let distance_exponent = vp(&tail, p);
        SumCertificate {
            k,
            n_terms,
            x,
            p,
            partial,
            target,
            tail,
            distance_exponent,
            bound_exponent,
        }
    }

    /// `partial + tail == target` and the achieved exponent meets the bound.
    pub fn ok(&self) -> bool {
        &self.partial + &self.tail == self.target && self.distance_exponent.at_least(self.bound_exponent)
    }
}

/// `v_p(N!) + N v_p(x)`, the guaranteed valuation of `N! x^N A(N; x)` for integral `x`.
fn tail_bound(n_terms: u64, x: &BigRational, p: Prime) -> i64 {
    let base = factorial_norm_exponent(n_terms, p) as i64;
    match vp(x, p) {
        ValExponent::Finite(v) => base + n_terms as i64 * v,
        // x = 0: the remainder vanishes and any bound holds.
        ValExponent::Infinite => base,
    }
}

fn require_integer(x: &BigRational, p: Prime) -> Result<()> {
    if !in_convergence_domain(x, p) {
        return Err(Error::OutsideDomain {
            x: x.to_string(),
            p: p.get(),
        });
    }
    if !x.is_integer() {
        return Err(Error::NonIntegerX(x.to_string()));
    }
    Ok(())
}

/// Certifies `Σ_{n<N} n! [n^k x^k + U_k(x)] x^n → V_k(x)` in `Q_p`.
pub fn truncated_padic_sum(
    family: &Family,
    k: usize,
    x: &BigRational,
    p: Prime,
    n_terms: u64,
) -> Result<SumCertificate> {
    check_degree(family, k)?;
    if n_terms == 0 {
        return Err(Error::ZeroTerms);
    }
    require_integer(x, p)?;
    let u = family.u(k).eval(x);
    let x_k = num_traits::pow(x.clone(), k);
    let partial =
        x_k * partial_sum_sk(k as u32, n_terms, x) + u * partial_sum_sk(0, n_terms, x);
    let target = family.v(k).eval(x);
    Ok(SumCertificate::new(
        k,
        n_terms,
        Some(x.clone()),
        p,
        partial,
        target,
        tail_bound(n_terms, x, p),
    ))
}

/// Constant-coefficient combination `Σ_j C_j [n^j x^j + U_j(x)]` at a point `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    coeffs: Vec<BigInt>,
    pub x: BigRational,
}

impl SeriesSpec {
    /// `coeffs[j-1]` is `C_j`; `k` is the number of coefficients.
    pub fn new(k: usize, coeffs: Vec<BigInt>, x: BigRational) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        if coeffs.len() != k {
            return Err(Error::CoefficientCount {
                k,
                len: coeffs.len(),
            });
        }
        Ok(SeriesSpec { coeffs, x })
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// `P(n; x) = Σ_j C_j [n^j x^j + U_j(x)]` and `Q(x) = Σ_j C_j V_j(x)`.
pub fn build_p_q(family: &Family, spec: &SeriesSpec) -> (BivarPoly, IntPoly) {
    let mut p = BivarPoly::zero();
    let mut q = IntPoly::zero();
    for (j, c) in (1..).zip(spec.coeffs.iter()) {
        if c.is_zero() {
            continue;
        }
        let term = &BivarPoly::monomial(BigInt::one(), j, j) + &BivarPoly::from_x_poly(family.u(j));
        p = &p + &term.scale(c);
        q = &q + &family.v(j).scale(c);
    }
    (p, q)
}

/// Certifies `Σ_{n<N} n! P(n; x) x^n → Q(x)` in `Q_p` for integer `x`.
///
/// The partial sum is evaluated from `P` directly, term by term.
pub fn truncated_combo_sum(
    family: &Family,
    spec: &SeriesSpec,
    p: Prime,
    n_terms: u64,
) -> Result<SumCertificate> {
    check_degree(family, spec.k())?;
    if n_terms == 0 {
        return Err(Error::ZeroTerms);
    }
    let x = &spec.x;
    require_integer(x, p)?;
    let (poly_p, poly_q) = build_p_q(family, spec);
    let xi = x.numer();
    let partial = factorial_weighted_sum(n_terms, x, |n| {
        poly_p.eval_n(&BigInt::from(n)).eval_int(xi)
    });
    let target = BigRational::from_integer(poly_q.eval_int(xi));
    Ok(SumCertificate::new(
        spec.k(),
        n_terms,
        Some(x.clone()),
        p,
        partial,
        target,
        tail_bound(n_terms, x, p),
    ))
}
