//! Construction of the tail polynomials `A_k(n; x)` and the pairs `U_k`, `V_k`.
//!
//! The defining relations are implicit: for every `k ≥ 1`
//!
//! ```text
//! Σ_{ℓ=1}^{k+1} C(k+1, ℓ) x^(k-ℓ+1) A_{ℓ-1}(n; x) - A_{k-1}(n; x) - n^k x^k = 0
//! ```
//!
//! with `A_0 = 1`. The `ℓ = k+1` term is `A_k` itself with coefficient one, so
//! each new member is obtained without division:
//!
//! ```text
//! A_k = n^k x^k + A_{k-1} - Σ_{ℓ=1}^{k} C(k+1, ℓ) x^(k-ℓ+1) A_{ℓ-1}
//! ```
//!
//! `U_k` and `V_k` follow from `A_{k-1}` at `n = 0, 1`. The same rearrangement
//! applied to the `U`/`V` recurrences gives a second, independent route.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial_row, BivarPoly, IntPoly};

/// Returns `[A_0, …, A_kmax]`.
pub fn compute_a_family(kmax: usize) -> Vec<BivarPoly> {
    let mut family = Vec::with_capacity(kmax + 1);
    family.push(BivarPoly::one());
    for k in 1..=kmax {
        let next = next_a(&family, k);
        family.push(next);
    }
    family
}

/// `A_k` from `A_0..A_{k-1}`.
fn next_a(prev: &[BivarPoly], k: usize) -> BivarPoly {
    debug_assert_eq!(prev.len(), k);
    let row = binomial_row(k + 1);
    let mut acc = &BivarPoly::monomial(BigInt::one(), k, k) + &prev[k - 1];
    for l in 1..=k {
        let term = prev[l - 1].shift_x(k - l + 1).scale(&row[l]);
        acc = &acc - &term;
    }
    assert_eq!(acc.degree_x(), Some(k), "A_{} has wrong x-degree", k);
    for (l, layer) in acc.layers().iter().enumerate() {
        assert_eq!(layer.degree(), Some(l), "A_{} layer {} has wrong n-degree", k, l);
        assert!(
            layer.leading_coeff().is_some_and(One::is_one),
            "A_{} layer {} is not monic",
            k,
            l
        );
    }
    acc
}

/// `U_k(x) = x A_{k-1}(1; x) - A_{k-1}(0; x)`.
///
/// # Panics
///
/// If `k == 0` or `a` does not contain `A_{k-1}`.
pub fn compute_u(k: usize, a: &[BivarPoly]) -> IntPoly {
    assert!(k >= 1 && a.len() >= k, "need A_{} to build U_{}", k.wrapping_sub(1), k);
    let prev = &a[k - 1];
    &prev.eval_n(&BigInt::one()).shift(1) - &prev.eval_n(&BigInt::zero())
}

/// `V_k(x) = -A_{k-1}(0; x)`.
///
/// # Panics
///
/// If `k == 0` or `a` does not contain `A_{k-1}`.
pub fn compute_v(k: usize, a: &[BivarPoly]) -> IntPoly {
    assert!(k >= 1 && a.len() >= k, "need A_{} to build V_{}", k.wrapping_sub(1), k);
    -a[k - 1].eval_n(&BigInt::zero())
}

/// Solves `Σ_{ℓ=1}^{k+1} C(k+1,ℓ) x^(k-ℓ+1) P_ℓ - P_k - forcing_k = 0` for `P_{k+1}`.
///
/// `P_k` must come out with degree `k - lag`.
fn solve_top(
    prev: &[IntPoly],
    forcing: impl Fn(usize) -> IntPoly,
    lag: usize,
    kmax: usize,
) -> Vec<IntPoly> {
    let mut out = prev.to_vec();
    while out.len() < kmax {
        let k = out.len();
        let row = binomial_row(k + 1);
        let mut acc = &forcing(k) + &out[k - 1];
        for l in 1..=k {
            acc = &acc - &out[l - 1].shift(k - l + 1).scale(&row[l]);
        }
        assert_eq!(
            acc.degree(),
            Some(k + 1 - lag),
            "recurrence produced wrong degree at {}",
            k + 1
        );
        out.push(acc);
    }
    out
}

/// `[U_1, …, U_kmax]` from the `U` recurrence with `U_1 = x - 1`.
pub fn compute_u_by_recurrence(kmax: usize) -> Vec<IntPoly> {
    if kmax == 0 {
        return Vec::new();
    }
    solve_top(
        &[IntPoly::from_i64s(&[-1, 1])],
        |k| IntPoly::monomial(BigInt::one(), k + 1),
        0,
        kmax,
    )
}

/// `[V_1, …, V_kmax]` from the `V` recurrence with `V_1 = -1`.
pub fn compute_v_by_recurrence(kmax: usize) -> Vec<IntPoly> {
    if kmax == 0 {
        return Vec::new();
    }
    solve_top(&[IntPoly::from_i64s(&[-1])], |_| IntPoly::zero(), 1, kmax)
}

/// `(U_k, V_k, A_{k-1})` for one degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummationTriple {
    pub k: usize,
    pub u: IntPoly,
    pub v: IntPoly,
    pub a: BivarPoly,
}

impl SummationTriple {
    /// Checks degrees, constant terms, leading coefficients and the shape of `A`.
    ///
    /// `V_k` has degree `k - 1`; its top coefficient is `(-1)^k k`.
    pub fn check(&self) -> Result<()> {
        let k = self.k;
        let fail = |what| Err(Error::Invariant { k, what });
        if k == 0 {
            return fail("k must be positive");
        }
        if self.u.degree() != Some(k) {
            return fail("deg U != k");
        }
        if self.v.degree() != Some(k - 1) {
            return fail("deg V != k - 1");
        }
        if self.a.degree_x() != Some(k - 1) {
            return fail("deg_x A != k - 1");
        }
        let minus_one = -BigInt::one();
        if self.u.coeff(0) != minus_one {
            return fail("U constant term != -1");
        }
        if self.v.coeff(0) != minus_one {
            return fail("V constant term != -1");
        }
        // (-1)^k
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        if self.u.coeff(k) != -&sign {
            return fail("U leading coefficient != (-1)^(k+1)");
        }
        if self.v.coeff(k - 1) != &sign * BigInt::from(k) {
            return fail("V leading coefficient != (-1)^k k");
        }
        for (l, layer) in self.a.layers().iter().enumerate() {
            if layer.degree() != Some(l) || !layer.leading_coeff().is_some_and(One::is_one) {
                return fail("A layer l is not monic of degree l");
            }
        }
        if self.a.layer(0) != IntPoly::one() {
            return fail("A layer 0 != 1");
        }
        if self.a.layer(k - 1).eval_int(&BigInt::one()) != -sign {
            return fail("top layer of A_(k-1) at n = 1 != (-1)^(k-1)");
        }
        Ok(())
    }
}

/// The `A`, `U`, `V` families up to a fixed degree, built once and read-only afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    a: Vec<BivarPoly>,
    u: Vec<IntPoly>,
    v: Vec<IntPoly>,
}

impl Family {
    /// Builds `A_0..A_{kmax-1}` and `U_k`, `V_k` for `1 ≤ k ≤ kmax`.
    pub fn new(kmax: usize) -> Self {
        let mut f = Family {
            a: alloc::vec![BivarPoly::one()],
            u: Vec::new(),
            v: Vec::new(),
        };
        f.extend_to(kmax);
        f
    }

    /// Grows the family so that it covers `kmax`; reuses everything already built.
    pub fn extend_to(&mut self, kmax: usize) {
        while self.a.len() < kmax {
            let k = self.a.len();
            let next = next_a(&self.a, k);
            self.a.push(next);
        }
        while self.u.len() < kmax {
            let k = self.u.len() + 1;
            self.u.push(compute_u(k, &self.a));
            self.v.push(compute_v(k, &self.a));
        }
    }

    /// Largest `k` with a triple available.
    pub fn kmax(&self) -> usize {
        self.u.len()
    }

    /// `A_j` for `j < kmax`.
    pub fn a(&self, j: usize) -> &BivarPoly {
        &self.a[j]
    }

    pub fn a_family(&self) -> &[BivarPoly] {
        &self.a
    }

    /// `U_k`, `1 ≤ k ≤ kmax`.
    pub fn u(&self, k: usize) -> &IntPoly {
        &self.u[k - 1]
    }

    /// `V_k`, `1 ≤ k ≤ kmax`.
    pub fn v(&self, k: usize) -> &IntPoly {
        &self.v[k - 1]
    }

    pub fn triple(&self, k: usize) -> SummationTriple {
        SummationTriple {
            k,
            u: self.u(k).clone(),
            v: self.v(k).clone(),
            a: self.a(k - 1).clone(),
        }
    }
}

/// Assembles and validates `(U_k, V_k, A_{k-1})`.
///
/// # Panics
///
/// If `k == 0` or an invariant fails; the latter means the construction is broken.
pub fn build_triple(k: usize) -> SummationTriple {
    assert!(k >= 1, "k must be positive");
    let t = Family::new(k).triple(k);
    if let Err(e) = t.check() {
        panic!("{}", e);
    }
    t
}
