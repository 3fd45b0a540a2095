//! Residuation on Néron–Severi spaces.
//!
//! For `2 ≤ d ≤ g-1`, sending a complete series `|L|` of degree `2g-2-d` to
//! the unique divisor of `|K - L|` gives a map from `G^{g-d-1}_{2g-2-d}(C)`
//! to `C_d` that is an isomorphism in codimension one on a general curve.
//! On `N^1` it acts by `θ ↦ θ̂`, `θ - x ↦ X̂`. Only this linear map is
//! modeled here.

use core::ops::Mul;

use num_traits::{One, Zero};

use crate::exact_arith::{int, Rational};
use crate::{Error, Result};

/// Which rank-2 Néron–Severi space a coordinate pair refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// `(θ, x)` on `C_d`.
    SymmetricPower,
    /// `(θ̂, X̂)` on `G^{g-d-1}_{2g-2-d}(C)`.
    ResidualSeries,
}

impl BasisLabel {
    pub fn names(self) -> [&'static str; 2] {
        match self {
            BasisLabel::SymmetricPower => ["theta", "x"],
            BasisLabel::ResidualSeries => ["theta_hat", "x_hat"],
        }
    }
}

/// `θ·theta + x·x` on `C_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceClass {
    pub theta: Rational,
    pub x: Rational,
}

/// `θ̂·theta_hat + X̂·x_hat` on the space of residual series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetClass {
    pub theta_hat: Rational,
    pub x_hat: Rational,
}

impl SourceClass {
    pub const BASIS: BasisLabel = BasisLabel::SymmetricPower;

    pub fn new(theta: Rational, x: Rational) -> Self {
        Self { theta, x }
    }
}

impl TargetClass {
    pub const BASIS: BasisLabel = BasisLabel::ResidualSeries;

    pub fn new(theta_hat: Rational, x_hat: Rational) -> Self {
        Self { theta_hat, x_hat }
    }
}

/// Pullback of `aθ + bx`: `(a+b)θ̂ - bX̂`, returned as `(θ̂, X̂)` coefficients.
pub fn tau_pullback(a: &Rational, b: &Rational) -> (Rational, Rational) {
    (a + b, -b)
}

/// Inverse pullback of `aX̂ + bθ̂`: `(a+b)θ - ax`, returned as `(θ, x)`
/// coefficients.
pub fn tau_inverse_pullback(a: &Rational, b: &Rational) -> (Rational, Rational) {
    (a + b, -a)
}

pub fn pullback(c: &SourceClass) -> TargetClass {
    let (theta_hat, x_hat) = tau_pullback(&c.theta, &c.x);
    TargetClass { theta_hat, x_hat }
}

pub fn inverse_pullback(c: &TargetClass) -> SourceClass {
    let (theta, x) = tau_inverse_pullback(&c.x_hat, &c.theta_hat);
    SourceClass { theta, x }
}

/// 2x2 rational matrix acting on `(θ, x)` coefficient columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub rows: [[Rational; 2]; 2],
}

impl Mat2 {
    pub fn identity() -> Self {
        Self {
            rows: [
                [Rational::one(), Rational::zero()],
                [Rational::zero(), Rational::one()],
            ],
        }
    }

    pub fn det(&self) -> Rational {
        let [[a, b], [c, d]] = &self.rows;
        a * d - b * c
    }

    /// Applies the matrix to the column `(u, v)`. Generic so it can act on
    /// coefficients that are themselves polynomials.
    pub fn apply<T>(&self, u: &T, v: &T) -> (T, T)
    where
        T: Clone + core::ops::Add<Output = T>,
        for<'a> &'a T: Mul<&'a Rational, Output = T>,
    {
        let [[a, b], [c, d]] = &self.rows;
        (u * a + v * b, u * c + v * d)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let entry = |i: usize, j: usize| {
            &self.rows[i][0] * &rhs.rows[0][j] + &self.rows[i][1] * &rhs.rows[1][j]
        };
        Mat2 {
            rows: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }
}

/// On `C_{g-1}` residuation is a self-map with `θ̂ = θ` and `X̂ = x`, so it
/// acts by `θ ↦ θ`, `x ↦ θ - x`. Columns of the returned matrix are the
/// images of `θ` and `x`.
pub fn involution_matrix(g: i64) -> Result<Mat2> {
    if g < 3 {
        return Err(Error::precondition("residuation on C_{g-1} needs g ≥ 3"));
    }
    Ok(Mat2 {
        rows: [[int(1), int(1)], [int(0), int(-1)]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, Poly};
    use proptest::prelude::*;

    #[test]
    fn pullback_examples() {
        assert_eq!(tau_pullback(&int(1), &int(0)), (int(1), int(0)));
        assert_eq!(tau_pullback(&int(1), &int(-1)), (int(0), int(1)));
        assert_eq!(tau_pullback(&int(0), &int(1)), (int(1), int(-1)));
    }

    #[test]
    fn inverse_pullback_examples() {
        assert_eq!(tau_inverse_pullback(&int(1), &int(0)), (int(1), int(-1)));
        assert_eq!(tau_inverse_pullback(&int(0), &int(1)), (int(1), int(0)));
    }

    #[test]
    fn involution_examples() {
        let m = involution_matrix(4).unwrap();
        let t = Poly::t();
        // θ - t x ↦ (1-t)θ + t x
        let (th, x) = m.apply(&Poly::one(), &-&t);
        assert_eq!(th, Poly::linear(int(1), int(-1)));
        assert_eq!(x, t);
        assert_eq!(&m * &m, Mat2::identity());
        assert_eq!(m.det(), int(-1));
        // θ - x ↦ x
        assert_eq!(m.apply(&int(1), &int(-1)), (int(0), int(1)));
        assert!(involution_matrix(2).is_err());
    }

    #[test]
    fn basis_labels() {
        assert_eq!(SourceClass::BASIS.names(), ["theta", "x"]);
        assert_eq!(TargetClass::BASIS.names(), ["theta_hat", "x_hat"]);
    }

    fn q() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pullbacks_are_inverse(a in q(), b in q()) {
            let src = SourceClass::new(a, b);
            prop_assert_eq!(inverse_pullback(&pullback(&src)), src.clone());
            let tgt = TargetClass::new(src.theta.clone(), src.x.clone());
            prop_assert_eq!(pullback(&inverse_pullback(&tgt)), tgt);
        }

        #[test]
        fn stable_class_pullback(a in q(), b in q()) {
            // aX̂ + bθ̂ ↦ (a+b)θ - ax
            let (th, x) = tau_inverse_pullback(&a, &b);
            prop_assert_eq!(th, &a + &b);
            prop_assert_eq!(x, -a);
        }

        #[test]
        fn involution_is_pullback_on_c_g_minus_1(g in 3i64..40, a in q(), b in q()) {
            // with θ̂ = θ and X̂ = x the matrix is the pullback itself
            let m = involution_matrix(g).unwrap();
            let (th, x) = m.apply(&a, &b);
            prop_assert_eq!((th, x), tau_pullback(&a, &b));
        }
    }
}
