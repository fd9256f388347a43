//! Bernoulli numbers and the Volkenborn integral of integer polynomials.
//!
//! With `B_1 = -1/2`, the Volkenborn integral sends `x^n` to `B_n`, so applying
//! it termwise to the finite summation identity yields exact identities among
//! Bernoulli numbers weighted by factorials.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{factorial_norm_exponent, Prime};
use crate::poly::{binomial_row, IntPoly};
use crate::recurrence::Family;
use crate::summation::SumCertificate;

/// `B_0..B_nmax` as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    /// Highest index stored.
    pub fn nmax(&self) -> usize {
        self.values.len() - 1
    }

    fn covers(&self, need: usize) -> Result<()> {
        if need > self.nmax() {
            return Err(Error::TableTooShort {
                need,
                have: self.nmax(),
            });
        }
        Ok(())
    }
}

/// Solves `Σ_{j=0}^{m} C(m+1, j) B_j = 0` for `B_m`, starting from `B_0 = 1`.
pub fn bernoulli_numbers(nmax: usize) -> BernoulliTable {
    let mut values: Vec<BigRational> = Vec::with_capacity(nmax + 1);
    values.push(BigRational::one());
    for m in 1..=nmax {
        let row = binomial_row(m + 1);
        let s: BigRational = values
            .iter()
            .zip(row.iter())
            .map(|(b, c)| b * c)
            .fold(BigRational::zero(), |acc, t| acc + t);
        values.push(-s / BigRational::from_integer(row[m].clone()));
    }
    BernoulliTable { values }
}

/// `∫_{Z_p} P(x) dx = Σ_ℓ P_ℓ B_ℓ`.
pub fn volkenborn_poly(poly: &IntPoly, table: &BernoulliTable) -> Result<BigRational> {
    if let Some(d) = poly.degree() {
        table.covers(d)?;
    }
    Ok(poly
        .coeffs()
        .iter()
        .zip(table.values.iter())
        .filter(|(c, _)| !c.is_zero())
        .fold(BigRational::zero(), |acc, (c, b)| acc + b * c))
}

/// Finite Volkenborn level `p^(-m) Σ_{j=0}^{p^m - 1} P(j)`, summed directly.
///
/// Fails when `p^m` exceeds `max_terms`.
pub fn volkenborn_level(poly: &IntPoly, p: Prime, m: u32, max_terms: u64) -> Result<BigRational> {
    let terms = (p.get() as u128)
        .checked_pow(m)
        .filter(|&t| t <= max_terms as u128)
        .ok_or(Error::WorkLimit {
            terms: (p.get() as u128).saturating_pow(m),
            limit: max_terms,
        })?;
    let mut sum = BigInt::zero();
    let mut j = BigInt::zero();
    for _ in 0..terms {
        sum += poly.eval_int(&j);
        j += 1u32;
    }
    Ok(BigRational::new(sum, BigInt::from(terms)))
}

fn coeff_dot(poly: &IntPoly, table: &BernoulliTable, offset: usize) -> BigRational {
    poly.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(BigRational::zero(), |acc, (l, c)| acc + &table.values[offset + l] * c)
}

/// Volkenborn image of the finite identity for `(k, N)`.
///
/// ```text
/// lhs = Σ_{n<N} n! [n^k B_{n+k} + Σ_ℓ U_kℓ B_{n+ℓ}]
/// rhs = Σ_ℓ V_kℓ B_ℓ + N! Σ_ℓ A_{k-1,ℓ}(N) B_{N+ℓ}
/// ```
///
/// The table must reach `B_{N+k-1}`.
pub fn bernoulli_identity_partial(
    family: &Family,
    k: usize,
    n_terms: u64,
    table: &BernoulliTable,
) -> Result<(BigRational, BigRational)> {
    let lhs = bernoulli_lhs(family, k, n_terms, table)?;
    let n = n_terms as usize;
    let a_at_n = family.a(k - 1).eval_n(&BigInt::from(n_terms));
    let fact: BigInt = (1..=n_terms).map(BigInt::from).product();
    let rhs = coeff_dot(family.v(k), table, 0)
        + coeff_dot(&a_at_n, table, n) * BigRational::from_integer(fact);
    Ok((lhs, rhs))
}

fn bernoulli_lhs(
    family: &Family,
    k: usize,
    n_terms: u64,
    table: &BernoulliTable,
) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    if n_terms == 0 {
        return Err(Error::ZeroTerms);
    }
    table.covers(n_terms as usize + k - 1)?;
    let u = family.u(k);
    let mut lhs = BigRational::zero();
    let mut fact = BigInt::one();
    for n in 0..n_terms as usize {
        if n > 0 {
            fact *= n;
        }
        let nk = num_traits::pow(BigInt::from(n), k);
        let bracket = &table.values[n + k] * nk + coeff_dot(u, table, n);
        lhs += bracket * &fact;
    }
    Ok(lhs)
}

/// Certifies `Σ_{n<N} n! [n^k B_{n+k} + Σ_ℓ U_kℓ B_{n+ℓ}] → ∫ V_k` in `Q_p`.
///
/// The bound is `v_p(N!) - 1`, the slack coming from `v_p(B_n) ≥ -1`.
pub fn bernoulli_series_certificate(
    family: &Family,
    k: usize,
    p: Prime,
    n_terms: u64,
    table: &BernoulliTable,
) -> Result<SumCertificate> {
    let partial = bernoulli_lhs(family, k, n_terms, table)?;
    let target = volkenborn_poly(family.v(k), table)?;
    Ok(SumCertificate::new(
        k,
        n_terms,
        None,
        p,
        partial,
        target,
        factorial_norm_exponent(n_terms, p) as i64 - 1,
    ))
}
