//! Exact scalars and the combinatorial primitives the class formulas use.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Integer = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn factorial(n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            what: "factorial argument",
            value: n,
        });
    }
    Ok(falling_factorial(n, n as u64))
}

/// `1/m!`, with the convention that it vanishes for negative `m`.
///
/// This is what lets `θ^j = 0` for `j > g` fall out of the Poincaré formula
/// without a special case.
pub fn inv_factorial(m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::one(), falling_factorial(m, m as u64))
}

/// `n (n-1) ... (n-k+1)`.
fn falling_factorial(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::from(n);
    for _ in 0..k {
        acc *= &f;
        f -= 1;
    }
    acc
}

/// `binom(n, k)` for any integer `n` and `k ≥ 0`.
pub fn binom(n: i64, k: u32) -> Integer {
    let k = u64::from(k);
    // k! always divides the falling product exactly.
    falling_factorial(n, k) / falling_factorial(k as i64, k)
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!`.
///
/// Negative `n` is allowed and gives `(-1)^k binom(k-n-1, k)`; negative `k`
/// is an error.
pub fn gen_binomial(n: i64, k: i64) -> Result<Integer> {
    let k = u32::try_from(k).map_err(|_| Error::NegativeArgument {
        what: "binomial lower index",
        value: k,
    })?;
    Ok(binom(n, k))
}

/// `binom(n, k)` as a rational.
pub fn binom_q(n: i64, k: u32) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// `acc += a * b`, skipping rational normalization when everything is an
/// integer. Normalizing against a unit denominator still costs a gcd that is
/// linear in the bit length, which dominates the long binomial sweeps.
pub fn add_mul(acc: &mut Rational, a: &Rational, b: &Rational) {
    if acc.denom().is_one() && a.denom().is_one() && b.denom().is_one() {
        let n = acc.numer() + a.numer() * b.numer();
        *acc = Rational::from_integer(n);
    } else {
        *acc += a * b;
    }
}

/// 2-adic valuation of a nonzero integer.
pub fn two_adic_valuation(n: &Integer) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    n.trailing_zeros()
}

/// Power series in `t1, t2` truncated at total degree 2.
///
/// Only the six coefficients of `1, t1, t2, t1^2, t1 t2, t2^2` are stored;
/// every product drops anything of higher degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: [Rational; 6],
}

const EXPONENTS: [(usize, usize); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

fn slot(i: usize, j: usize) -> Option<usize> {
    EXPONENTS.iter().position(|&e| e == (i, j))
}

impl BivariateSeries {
    pub const MAX_DEGREE: usize = 2;

    pub fn zero() -> Self {
        Self {
            coeffs: Default::default(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = c;
        s
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c0 + c1 t1 + c2 t2`.
    pub fn linear(c0: Rational, c1: Rational, c2: Rational) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = c0;
        s.coeffs[1] = c1;
        s.coeffs[2] = c2;
        s
    }

    /// Builds a series from `(i, j, c)` triples. Terms with `i + j > 2`
    /// are dropped; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut s = Self::zero();
        for (i, j, c) in terms {
            if let Some(k) = slot(i, j) {
                s.coeffs[k] += c;
            }
        }
        s
    }

    /// Coefficient of `t1^i t2^j`; zero beyond the truncation degree.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        slot(i, j).map_or_else(Rational::zero, |k| self.coeffs[k].clone())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        EXPONENTS
            .iter()
            .zip(self.coeffs.iter())
            .map(|(&(i, j), c)| (i, j, c))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i1, j1, a) in self.terms() {
            if a.is_zero() {
                continue;
            }
            for (i2, j2, b) in other.terms() {
                if let Some(k) = slot(i1 + i2, j1 + j2) {
                    add_mul(&mut out.coeffs[k], a, b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.clone().map(|x| x * c),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::precondition(
                "series with zero constant term is not invertible",
            ));
        }
        // 1/(c0 + L) = (1/c0) (1 - u + u^2) with u = L/c0, exact to degree 2.
        let inv_c0 = c0.recip();
        let mut u = self.scale(&inv_c0);
        u.coeffs[0] = Rational::zero();
        let u2 = u.multiply(&u);
        let mut s = Self::one();
        for k in 0..6 {
            s.coeffs[k] = &s.coeffs[k] - &u.coeffs[k] + &u2.coeffs[k];
        }
        Ok(s.scale(&inv_c0))
    }

    /// Integer power by repeated squaring. Negative exponents go through
    /// [`inverse`](Self::inverse).
    pub fn pow(&self, n: i64) -> Result<Self> {
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        Ok(acc)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: Self) -> BivariateSeries {
        self.multiply(rhs)
    }
}

/// Free function form of [`BivariateSeries::multiply`].
pub fn series_multiply(a: &BivariateSeries, b: &BivariateSeries) -> BivariateSeries {
    a.multiply(b)
}

/// Dense univariate polynomial with rational coefficients.
///
/// Used for exact identities in a formal variable `t` (volume polynomials,
/// generating-function residuals). Trailing zeros are trimmed, so equality
/// is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The formal variable `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product with everything above degree `max_deg` discarded.
    pub fn mul_truncated(&self, other: &Self, max_deg: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_deg + 1);
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                add_mul(&mut out[i + j], a, b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e` with everything above degree `max_deg` discarded.
    ///
    /// Plain repeated multiplication, which is the cheap route for the
    /// low-degree bases this is used with.
    pub fn pow_truncated(&self, e: u32, max_deg: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul_truncated(self, max_deg))
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: Self) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Self) -> Poly {
        &self + &rhs
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        self.scale(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: Self) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Degree cap that never truncates.
const NO_TRUNCATION: usize = usize::MAX - 1;

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: Self) -> Poly {
        self.mul_truncated(rhs, NO_TRUNCATION)
    }
}
