//! Formal classes in the `(x, θ)` subring of the cohomology of `C_d`.
//!
//! Products are purely formal: no relations are imposed below top degree.
//! Only [`CycleClass::evaluate_top`] uses geometry, through
//! `x^k θ^(d-k) = g!/(g-d+k)!`. That formula is extended to `d > g` by
//! reading `1/m!` as zero for `m < 0`, which encodes `θ^j = 0` for `j > g`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact_arith::{add_mul, factorial, int, inv_factorial, Poly, Rational};
use crate::{Error, Result};

/// The symmetric power `C_d` of a genus-`g` curve, as an ambient space for
/// classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymPower {
    genus: i64,
    dim: i64,
}

impl SymPower {
    pub fn new(genus: i64, d: i64) -> Result<Self> {
        if genus < 2 {
            return Err(Error::precondition("genus g must be at least 2"));
        }
        if d < 2 {
            return Err(Error::precondition("d must be at least 2"));
        }
        Ok(Self { genus, dim: d })
    }

    pub fn genus(self) -> i64 {
        self.genus
    }

    /// `d`, the dimension of `C_d`.
    pub fn dim(self) -> i64 {
        self.dim
    }

    /// The fundamental class `1`.
    pub fn one(self) -> CycleClass {
        self.scalar(Rational::one())
    }

    pub fn scalar(self, c: Rational) -> CycleClass {
        CycleClass {
            space: self,
            coeffs: vec![c],
        }
    }

    pub fn theta(self) -> CycleClass {
        self.divisor(Rational::one(), Rational::zero()).into_class()
    }

    pub fn x(self) -> CycleClass {
        self.divisor(Rational::zero(), Rational::one()).into_class()
    }

    /// `theta_coeff·θ + x_coeff·x`.
    pub fn divisor(self, theta_coeff: Rational, x_coeff: Rational) -> DivisorClass {
        DivisorClass(CycleClass {
            space: self,
            coeffs: vec![theta_coeff, x_coeff],
        })
    }

    /// `(p·θ + q·x)^d` evaluated in top degree, where `p` and `q` are
    /// polynomials in a formal parameter `t`. The result is a polynomial
    /// in `t`.
    pub fn top_power_polynomial(self, p: &Poly, q: &Poly) -> Result<Poly> {
        // coefficient k of x^k θ^(j-k) in the j-th power
        let mut acc = vec![Poly::one()];
        for _ in 0..self.dim {
            let mut next = vec![Poly::zero(); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k] = &next[k] + &(c * p);
                next[k + 1] = &next[k + 1] + &(c * q);
            }
            acc = next;
        }
        let mut total = Poly::zero();
        for (k, c) in acc.iter().enumerate() {
            total = &total + &c.scale(&monomial_value(self.genus, self.dim, k as i64)?);
        }
        Ok(total)
    }

    /// `c · x^k θ^(codim-k)`.
    pub fn monomial(self, codim: usize, k: usize, c: Rational) -> Result<CycleClass> {
        if k > codim {
            return Err(Error::precondition("x-exponent exceeds codimension"));
        }
        let mut coeffs = vec![Rational::zero(); codim + 1];
        coeffs[k] = c;
        self.class(coeffs)
    }

    /// Class of codimension `coeffs.len() - 1` with `coeffs[k]` the
    /// coefficient of `x^k θ^(codim-k)`.
    pub fn class(self, coeffs: Vec<Rational>) -> Result<CycleClass> {
        let codim = coeffs
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::precondition("a class needs at least one coefficient"))?;
        if codim as i64 > self.dim {
            return Err(Error::CodimOverflow {
                codim,
                dim: self.dim,
            });
        }
        Ok(CycleClass {
            space: self,
            coeffs,
        })
    }
}

/// `x^k θ^(d-k)` on `C_d` for a genus-`g` curve: `g!/(g-d+k)!`.
pub fn monomial_value(g: i64, d: i64, k: i64) -> Result<Rational> {
    if g < 2 || d < 2 {
        return Err(Error::precondition("need g ≥ 2 and d ≥ 2"));
    }
    if !(0..=d).contains(&k) {
        return Err(Error::precondition(
            "monomial x-exponent k must satisfy 0 ≤ k ≤ d",
        ));
    }
    Ok(Rational::from_integer(factorial(g)?) * inv_factorial(g - d + k))
}

/// Homogeneous class `Σ_k coeffs[k] x^k θ^(c-k)` of codimension `c` on `C_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleClass {
    space: SymPower,
    coeffs: Vec<Rational>,
}

impl CycleClass {
    pub fn space(&self) -> SymPower {
        self.space
    }

    pub fn genus(&self) -> i64 {
        self.space.genus
    }

    pub fn dim(&self) -> i64 {
        self.space.dim
    }

    pub fn codim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k θ^(codim-k)`; zero when `k > codim`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: (self.genus(), self.dim()),
                right: (other.genus(), other.dim()),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        self.check_space(other)?;
        if self.codim() != other.codim() {
            return Err(Error::CodimMismatch {
                expected: self.codim(),
                found: other.codim(),
            });
        }
        Ok(Self {
            space: self.space,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            space: self.space,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Formal product: convolution of coefficient vectors.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let codim = self.codim() + other.codim();
        if codim as i64 > self.dim() {
            return Err(Error::CodimOverflow {
                codim,
                dim: self.dim(),
            });
        }
        let mut coeffs = vec![Rational::zero(); codim + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                add_mul(&mut coeffs[i + j], a, b);
            }
        }
        Ok(Self {
            space: self.space,
            coeffs,
        })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        (0..e).try_fold(self.space.one(), |acc, _| acc.multiply(self))
    }

    /// Degree of a top-codimension class.
    pub fn evaluate_top(&self) -> Result<Rational> {
        let d = self.dim();
        if self.codim() as i64 != d {
            return Err(Error::CodimMismatch {
                expected: d as usize,
                found: self.codim(),
            });
        }
        let g = self.genus();
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_mul(&mut acc, c, &monomial_value(g, d, k as i64)?);
            }
        }
        Ok(acc)
    }

    /// `self · other`, evaluated in top degree.
    pub fn intersect(&self, other: &Self) -> Result<Rational> {
        self.multiply(other)?.evaluate_top()
    }
}

fn write_rational_coeff(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    first: bool,
    bare: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.abs();
    if bare && a.is_one() {
        return Ok(());
    }
    write!(f, "{a}")?;
    if bare {
        f.write_str("*")?;
    }
    Ok(())
}

/// Renders as e.g. `-2*theta^2 + 12*x*theta - 10*x^2`, which the CLI's
/// expression parser reads back.
impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.codim();
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut mono = String::new();
            push_power(&mut mono, "x", k);
            push_power(&mut mono, "theta", c - k);
            write_rational_coeff(f, a, first, !mono.is_empty())?;
            f.write_str(&mono)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn push_power(out: &mut String, name: &str, e: usize) {
    use core::fmt::Write;
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push_str(name);
    if e > 1 {
        let _ = write!(out, "^{e}");
    }
}

/// A codimension-one class, read as `aθ - bx`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass(CycleClass);

impl DivisorClass {
    pub fn space(&self) -> SymPower {
        self.0.space
    }

    pub fn theta_coeff(&self) -> Rational {
        self.0.coeff(0)
    }

    pub fn x_coeff(&self) -> Rational {
        self.0.coeff(1)
    }

    /// `a` in `aθ - bx`.
    pub fn a(&self) -> Rational {
        self.theta_coeff()
    }

    /// `b` in `aθ - bx`.
    pub fn b(&self) -> Rational {
        -self.x_coeff()
    }

    /// `s` such that the class is a multiple of `θ - s·x`, if `a ≠ 0`.
    pub fn slope(&self) -> Option<Rational> {
        let a = self.a();
        (!a.is_zero()).then(|| self.b() / a)
    }

    /// True if `self = λ·other` for some `λ > 0`.
    pub fn is_positive_multiple_of(&self, other: &Self) -> bool {
        let (p, q) = (
            (self.theta_coeff(), self.x_coeff()),
            (other.theta_coeff(), other.x_coeff()),
        );
        let cross = &p.0 * &q.1 - &p.1 * &q.0;
        let dot = &p.0 * &q.0 + &p.1 * &q.1;
        cross.is_zero() && dot.is_positive()
    }

    pub fn as_class(&self) -> &CycleClass {
        &self.0
    }

    pub fn into_class(self) -> CycleClass {
        self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.scale(c))
    }

    pub fn intersect(&self, curve: &CycleClass) -> Result<Rational> {
        self.0.intersect(curve)
    }

    /// Top self-intersection `D^d`.
    pub fn top_power(&self) -> Result<Rational> {
        self.0.pow(self.0.dim() as u32)?.evaluate_top()
    }
}

impl TryFrom<CycleClass> for DivisorClass {
    type Error = Error;

    fn try_from(c: CycleClass) -> Result<Self> {
        if c.codim() != 1 {
            return Err(Error::CodimMismatch {
                expected: 1,
                found: c.codim(),
            });
        }
        Ok(Self(c))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `θ - s·x` on `space`.
pub fn theta_minus(space: SymPower, s: Rational) -> DivisorClass {
    space.divisor(int(1), -s)
}
