//! Exact p-adic invariant summation of factorial series.
//!
//! The central objects are three polynomial families indexed by `k ≥ 1`:
//! the tail polynomial `A_{k-1}(n; x)`, the correction polynomial `U_k(x)`
//! and the sum polynomial `V_k(x)`. They satisfy the finite identity
//!
//! ```text
//! Σ_{n=0}^{N-1} n! [n^k x^k + U_k(x)] x^n = V_k(x) + N! x^N A_{k-1}(N; x)
//! ```
//!
//! for every `N ≥ 1` and every rational `x`. For integer `x` the tail term
//! tends to zero in every `Q_p`, so the infinite series has the same rational
//! sum `V_k(x)` for all primes.
//!
//! Everything in this crate is exact: integers are [`BigInt`], rationals are
//! [`BigRational`]. The crate is `no_std` and only needs `alloc`.
//!
//! # Modules
//!
//! - [`padic`]: valuations, Legendre's formula, digit expansions.
//! - [`poly`]: dense integer polynomials and the bivariate `A_k` container.
//! - [`recurrence`]: construction of the `A`, `U`, `V` families.
//! - [`summation`]: partial sums, identity checks and p-adic certificates.
//! - [`bernoulli`]: Bernoulli numbers and the Volkenborn integral.
//! - [`sequences`]: left factorials, Kurepa scans, integer sequences at `x = ±1`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bernoulli;
pub mod error;
pub mod padic;
pub mod poly;
pub mod recurrence;
pub mod sequences;
pub mod summation;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use bernoulli::BernoulliTable;
pub use error::{Error, Result};
pub use padic::{PadicExpansion, Prime, ValExponent};
pub use poly::{BivarPoly, IntPoly, NPoly};
pub use recurrence::{Family, SummationTriple};
pub use summation::{IdentityCheck, SeriesSpec, SumCertificate};
