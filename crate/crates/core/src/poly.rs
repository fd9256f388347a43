//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! [`IntPoly`] is univariate; the same type serves as a polynomial in `x` or
//! in `n` (see [`NPoly`]). [`BivarPoly`] stores `Σ_ℓ L_ℓ(n) x^ℓ` as a vector of
//! `n`-polynomials indexed by the power of `x`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of the `i`-th power.
///
/// Always trimmed: the last stored coefficient is nonzero, and the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// A polynomial in `n`; same representation as [`IntPoly`].
pub type NPoly = IntPoly;

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · var^power`.
    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from little-endian coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Little-endian coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        if at.is_integer() {
            return BigRational::from_integer(self.eval_int(at.numer()));
        }
        // Homogenise to stay in integers: Σ c_i a^i b^(d-i) / b^d.
        let (a, b) = (at.numer(), at.denom());
        let Some(d) = self.degree() else {
            return BigRational::zero();
        };
        let mut num = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            num = num * a + c * &bpow;
            bpow *= b;
        }
        let den = num_traits::pow(b.clone(), d);
        BigRational::new(num, den)
    }

    /// Canonical text form in descending powers of `var`, e.g. `x^3 - 7*x^2 + 6*x - 1`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_sign(&mut out, c.is_negative());
            out.push_str(&monomial_text(&c.abs(), var, i));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_sign(out: &mut String, negative: bool) {
    match (out.is_empty(), negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

fn power_text(var: &str, power: usize) -> String {
    match power {
        0 => String::new(),
        1 => String::from(var),
        _ => {
            let mut s = String::from(var);
            let _ = write!(s, "^{}", power);
            s
        }
    }
}

/// `|c|·var^power` with unit coefficients elided.
fn monomial_text(mag: &BigInt, var: &str, power: usize) -> String {
    let mut s = String::new();
    if power == 0 {
        let _ = write!(s, "{}", mag);
    } else if mag.is_one() {
        s.push_str(&power_text(var, power));
    } else {
        let _ = write!(s, "{}*{}", mag, power_text(var, power));
    }
    s
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

fn zip_with(a: &IntPoly, b: &IntPoly, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = BigInt::zero();
    let coeffs = (0..len)
        .map(|i| {
            op(
                a.coeffs.get(i).unwrap_or(&zero),
                b.coeffs.get(i).unwrap_or(&zero),
            )
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// `Σ_ℓ layers[ℓ](n) · x^ℓ`, trimmed of trailing zero layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    layers: Vec<NPoly>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { layers: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_layers(vec![NPoly::one()])
    }

    pub fn from_layers(layers: Vec<NPoly>) -> Self {
        let mut p = BivarPoly { layers };
        while p.layers.last().is_some_and(IntPoly::is_zero) {
            p.layers.pop();
        }
        p
    }

    /// `c · n^n_power · x^x_power`.
    pub fn monomial(c: BigInt, n_power: usize, x_power: usize) -> Self {
        let mut layers = vec![NPoly::zero(); x_power + 1];
        layers[x_power] = NPoly::monomial(c, n_power);
        Self::from_layers(layers)
    }

    /// Embeds a polynomial in `x` with constant (in `n`) coefficients.
    pub fn from_x_poly(p: &IntPoly) -> Self {
        Self::from_layers(p.coeffs().iter().cloned().map(NPoly::constant).collect())
    }

    pub fn layers(&self) -> &[NPoly] {
        &self.layers
    }

    /// Coefficient of `x^l` as a polynomial in `n`.
    pub fn layer(&self, l: usize) -> NPoly {
        self.layers.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.layers.is_empty()
    }

    /// Degree in `x`; `None` for zero.
    pub fn degree_x(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_layers(self.layers.iter().map(|l| l.scale(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut layers = vec![NPoly::zero(); k];
        layers.extend(self.layers.iter().cloned());
        BivarPoly { layers }
    }

    /// Substitutes `n = n0`, leaving a polynomial in `x`.
    pub fn eval_n(&self, n0: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.layers.iter().map(|l| l.eval_int(n0)).collect())
    }

    pub fn eval(&self, n0: &BigInt, x0: &BigRational) -> BigRational {
        self.eval_n(n0).eval(x0)
    }

    /// Text form grouped by powers of `x`, e.g. `(n^2 - 3*n + 3)*x^2 + (n - 5)*x + 1`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (l, layer) in self.layers.iter().enumerate().rev() {
            if layer.is_zero() {
                continue;
            }
            if l == 0 {
                // Constant-in-x layer: inline its terms.
                for (j, c) in layer.coeffs().iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    push_sign(&mut out, c.is_negative());
                    out.push_str(&monomial_text(&c.abs(), "n", j));
                }
            } else if layer.term_count() > 1 {
                push_sign(&mut out, false);
                let _ = write!(out, "({})*{}", layer.render("n"), power_text("x", l));
            } else {
                let j = layer.degree().unwrap_or(0);
                let c = layer.coeff(j);
                push_sign(&mut out, c.is_negative());
                let mag = c.abs();
                if j == 0 {
                    out.push_str(&monomial_text(&mag, "x", l));
                } else {
                    let _ = write!(out, "{}*{}", monomial_text(&mag, "n", j), power_text("x", l));
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn zip_layers(a: &BivarPoly, b: &BivarPoly, op: impl Fn(&NPoly, &NPoly) -> NPoly) -> BivarPoly {
    let len = a.layers.len().max(b.layers.len());
    let zero = NPoly::zero();
    BivarPoly::from_layers(
        (0..len)
            .map(|i| {
                op(
                    a.layers.get(i).unwrap_or(&zero),
                    b.layers.get(i).unwrap_or(&zero),
                )
            })
            .collect(),
    )
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        zip_layers(self, rhs, |a, b| a + b)
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        zip_layers(self, rhs, |a, b| a - b)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `[C(n,0), …, C(n,n)]` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_trim() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn ring_examples() {
        let u1 = p(&[-1, 1]);
        assert_eq!(&u1 + &IntPoly::zero(), u1);
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&u1 * &u1, p(&[1, -2, 1]));
        assert_eq!(&u1 - &u1, IntPoly::zero());
        assert_eq!(u1.scale(&BigInt::from(-3)), p(&[3, -3]));
        assert_eq!(u1.shift(2), p(&[0, 0, -1, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 1]).eval(&q(1, 1)), q(0, 1));
        assert_eq!(p(&[-1, 2]).eval(&q(1, 1)), q(1, 1));
        assert_eq!(IntPoly::zero().eval(&q(7, 3)), q(0, 1));
        // 3x^2 - 5x + 1 at 1/2 = 3/4 - 5/2 + 1
        assert_eq!(p(&[1, -5, 3]).eval(&q(1, 2)), q(-3, 4));
        assert_eq!(p(&[4]).eval(&q(-2, 9)), q(4, 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[-1, 6, -7, 1]).to_string(), "x^3 - 7*x^2 + 6*x - 1");
        assert_eq!(p(&[-1, 3, -1]).to_string(), "-x^2 + 3*x - 1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[3, -3, 1]).render("n"), "n^2 - 3*n + 3");

        let a2 = BivarPoly::from_layers(vec![p(&[1]), p(&[-5, 1]), p(&[3, -3, 1])]);
        assert_eq!(a2.render(), "(n^2 - 3*n + 3)*x^2 + (n - 5)*x + 1");
        assert_eq!(BivarPoly::one().render(), "1");
        assert_eq!(BivarPoly::monomial(BigInt::from(-2), 3, 2).render(), "-2*n^3*x^2");
        assert_eq!(BivarPoly::monomial(BigInt::from(1), 0, 1).render(), "x");
        assert_eq!(BivarPoly::zero().render(), "0");
    }

    #[test]
    fn bivariate_evaluation() {
        let a1 = BivarPoly::from_layers(vec![p(&[1]), p(&[-2, 1])]);
        let a2 = BivarPoly::from_layers(vec![p(&[1]), p(&[-5, 1]), p(&[3, -3, 1])]);
        assert_eq!(BivarPoly::one().eval_n(&BigInt::from(17)), IntPoly::one());
        assert_eq!(a1.eval_n(&BigInt::from(2)), IntPoly::one());
        assert_eq!(a2.eval_n(&BigInt::zero()), p(&[1, -5, 3]));
        assert_eq!(BivarPoly::one().eval(&BigInt::from(4), &q(2, 7)), q(1, 1));
        assert_eq!(a1.eval(&BigInt::zero(), &q(1, 1)), q(-1, 1));
        assert_eq!(a1.eval(&BigInt::from(9), &q(0, 1)), q(1, 1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 0), BigInt::one());
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(4, 5), BigInt::zero());
        for n in 0..30 {
            let row = binomial_row(n);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, binomial(n as u64, k as u64));
            }
        }
    }
}
