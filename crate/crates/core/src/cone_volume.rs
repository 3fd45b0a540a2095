//! Effective and nef cone data for `C_d`, and the two volume formulas.
//!
//! Every cone returned here is a two-dimensional cone in `N^1(C_d)` with
//! basis `(θ, x)`. The upper ray is always the class of the half-diagonal.
//! The lower ray is either known exactly or bracketed between an inner ray
//! (known effective) and an outer ray (known to bound effective classes).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::exact_arith::{
    binom, factorial, int, is_integer, rat, two_adic_valuation, Poly, Rational,
};
use crate::ns_ring::{DivisorClass, SymPower};
use crate::residuation::involution_matrix;
use crate::{Error, Result};

/// A ray `uθ + vx` with coprime integer coordinates.
///
/// Normalization only divides by the positive gcd, so the orientation of
/// the input is preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    u: BigInt,
    v: BigInt,
}

impl Ray {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if u.is_zero() && v.is_zero() {
            return Err(Error::precondition("a ray needs a nonzero direction"));
        }
        let g = u.gcd(&v);
        Ok(Self {
            u: u / &g,
            v: v / &g,
        })
    }

    /// The ray through `θ·theta + x·x`.
    pub fn from_rationals(theta: &Rational, x: &Rational) -> Result<Self> {
        let l = theta.denom().lcm(x.denom());
        let u = theta.numer() * (&l / theta.denom());
        let v = x.numer() * (&l / x.denom());
        Self::new(u, v)
    }

    pub fn from_divisor(c: &DivisorClass) -> Result<Self> {
        Self::from_rationals(&c.theta_coeff(), &c.x_coeff())
    }

    /// The ray through `θ - s·x`.
    pub fn theta_minus(s: &Rational) -> Self {
        Self::from_rationals(&int(1), &-s).expect("θ coefficient is nonzero")
    }

    pub fn theta(&self) -> &BigInt {
        &self.u
    }

    pub fn x(&self) -> &BigInt {
        &self.v
    }

    /// `s` such that the ray is spanned by `±(θ - s x)`; `None` if the ray is `±x`.
    pub fn slope(&self) -> Option<Rational> {
        if self.u.is_zero() {
            None
        } else {
            Some(-Rational::new(self.v.clone(), self.u.clone()))
        }
    }

    /// A representative divisor on `space`.
    pub fn to_divisor(&self, space: SymPower) -> DivisorClass {
        space.divisor(
            Rational::from_integer(self.u.clone()),
            Rational::from_integer(self.v.clone()),
        )
    }

    fn cross(&self, theta: &Rational, x: &Rational) -> Rational {
        Rational::from_integer(self.u.clone()) * x - Rational::from_integer(self.v.clone()) * theta
    }

    /// `det(self, other)`; positive when `other` is counterclockwise from `self`.
    pub fn cross_ray(&self, other: &Ray) -> BigInt {
        &self.u * &other.v - &self.v * &other.u
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = SymPower::new(2, 2).expect("valid space");
        fmt::Display::fmt(&self.to_divisor(space), f)
    }
}

/// Lower boundary of an effective cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBoundary {
    Exact(Ray),
    /// The boundary lies between `inner` (effective) and `outer`.
    Bracket {
        inner: Ray,
        outer: Ray,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    Exact,
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone2D {
    pub upper: Ray,
    pub lower: LowerBoundary,
    pub provenance: Vec<String>,
}

impl Cone2D {
    pub fn status(&self) -> ConeStatus {
        match self.lower {
            LowerBoundary::Exact(_) => ConeStatus::Exact,
            LowerBoundary::Bracket { .. } => ConeStatus::Bracket,
        }
    }

    /// The exact lower ray, or the inner ray of a bracket.
    pub fn lower_ray(&self) -> &Ray {
        match &self.lower {
            LowerBoundary::Exact(r) => r,
            LowerBoundary::Bracket { inner, .. } => inner,
        }
    }

    pub fn outer_ray(&self) -> Option<&Ray> {
        match &self.lower {
            LowerBoundary::Exact(_) => None,
            LowerBoundary::Bracket { outer, .. } => Some(outer),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveType {
    General,
    Hyperelliptic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveContext {
    pub g: i64,
    pub d: i64,
    pub curve: CurveType,
}

impl CurveContext {
    pub fn new(g: i64, d: i64, curve: CurveType) -> Result<Self> {
        let ok = match curve {
            CurveType::General => g >= 4 && (2..g).contains(&d),
            CurveType::Hyperelliptic => g >= 2 && (2..=g).contains(&d),
        };
        if !ok {
            return Err(Error::precondition(match curve {
                CurveType::General => "a general curve needs g ≥ 4 and 2 ≤ d ≤ g-1",
                CurveType::Hyperelliptic => "a hyperelliptic curve needs 2 ≤ d ≤ g",
            }));
        }
        Ok(Self { g, d, curve })
    }

    pub fn space(&self) -> SymPower {
        SymPower::new(self.g, self.d).expect("validated on construction")
    }
}

/// `r_{g,d} = 1 + (g-d)/(g² - dg + d - 2)`.
pub fn r_bound(g: i64, d: i64) -> Result<Rational> {
    if g < 3 || !(2..g).contains(&d) {
        return Err(Error::precondition("r_{g,d} needs 2 ≤ d ≤ g-1"));
    }
    Ok(int(1) + rat(g - d, g * g - d * g + d - 2))
}

fn half_diagonal_ray(g: i64, d: i64) -> Ray {
    Ray::new(-1, g + d - 1).expect("nonzero")
}

/// The effective cone of `C_d`, exact where known and bracketed otherwise.
pub fn effective_cone(ctx: &CurveContext) -> Result<Cone2D> {
    let CurveContext { g, d, curve } = *ctx;
    let ctx = CurveContext::new(g, d, curve)?;
    let upper = half_diagonal_ray(g, d);
    let mut provenance = vec![String::from(
        "half-diagonal -θ+(g+d-1)x spans a boundary ray of the effective cone for all d ≥ 2",
    )];
    let lower = match ctx.curve {
        CurveType::Hyperelliptic => {
            provenance.push(String::from(
                "hyperelliptic curves: C^1_d has class θ-(g-d+1)x and spans the other boundary ray",
            ));
            LowerBoundary::Exact(Ray::theta_minus(&int(g - d + 1)))
        }
        CurveType::General if d == g - 1 => {
            provenance.push(String::from(
                "C_{g-1}: the ramification divisor θ-(1+1/(2g-3))x spans the other boundary ray",
            ));
            LowerBoundary::Exact(Ray::theta_minus(&r_bound(g, d)?))
        }
        CurveType::General if g == 5 && d == 3 => {
            provenance.push(String::from(
                "genus 5, C_3: the divisor E_(3) of class 3θ-5x spans the other boundary ray",
            ));
            LowerBoundary::Exact(Ray::theta_minus(&rat(5, 3)))
        }
        CurveType::General => {
            let (s, source) = best_inner_slope(g, d)?;
            provenance.push(source);
            provenance.push(format!(
                "outer bound θ-{}x: effective classes specialize to a hyperelliptic curve, where C^1_d bounds the cone",
                g - d + 1
            ));
            LowerBoundary::Bracket {
                inner: Ray::theta_minus(&s),
                outer: Ray::theta_minus(&int(g - d + 1)),
            }
        }
    };
    Ok(Cone2D {
        upper,
        lower,
        provenance,
    })
}

fn best_inner_slope(g: i64, d: i64) -> Result<(Rational, String)> {
    let mut best = (
        r_bound(g, d)?,
        String::from(
            "inner bound θ-r_{g,d}x: the ramification divisor D_d is effective for d ≤ g-1",
        ),
    );
    if 3 <= d && 2 * d <= g && int(2) > best.0 {
        best = (
            int(2),
            String::from("inner bound θ-2x: effective for 3 ≤ d ≤ g/2"),
        );
    }
    if g % 2 == 1 && d == (g + 1) / 2 {
        let s = int(2) - rat(1, d);
        if s > best.0 {
            best = (
                s,
                String::from("inner bound θ-(2-1/k)x: E_(k) on C_k for g = 2k-1"),
            );
        }
    }
    Ok(best)
}

/// Where a divisor class sits relative to a cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
    /// Strictly between the inner and outer rays of a bracket, or on the
    /// inner ray itself.
    Undetermined,
}

/// Membership of `class` in `cone` by cross-product sign tests.
pub fn contains(cone: &Cone2D, class: &DivisorClass) -> Membership {
    let (theta, x) = (class.theta_coeff(), class.x_coeff());
    if theta.is_zero() && x.is_zero() {
        return Membership::Boundary;
    }
    let below_upper = -cone.upper.cross(&theta, &x);
    let above = |r: &Ray| r.cross(&theta, &x);
    match &cone.lower {
        LowerBoundary::Exact(lower) => {
            let (a, b) = (above(lower), below_upper);
            if a.is_negative() || b.is_negative() {
                Membership::Outside
            } else if a.is_zero() || b.is_zero() {
                Membership::Boundary
            } else {
                Membership::Inside
            }
        }
        LowerBoundary::Bracket { inner, outer } => {
            let (a, b) = (above(inner), below_upper);
            if b.is_negative() {
                Membership::Outside
            } else if a.is_positive() {
                if b.is_zero() {
                    Membership::Boundary
                } else {
                    Membership::Inside
                }
            } else if above(outer).is_negative() {
                Membership::Outside
            } else {
                Membership::Undetermined
            }
        }
    }
}

/// Nef-side facts about `C_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefFacts {
    /// `-θ + dg·x`, nef with augmented base locus the small diagonal (`d ≥ 3`).
    pub diagonal_nef_ray: Option<Ray>,
    /// `θ`, a common boundary of the nef and movable cones (hyperelliptic).
    pub theta_boundary: Option<Ray>,
    pub gonality: i64,
    /// `θ - x` is ample iff `C^1_d` is empty, i.e. `d` is below the gonality.
    pub theta_minus_x_ample: bool,
    pub provenance: Vec<String>,
}

pub fn nef_facts(ctx: &CurveContext) -> Result<NefFacts> {
    let CurveContext { g, d, curve } = *ctx;
    CurveContext::new(g, d, curve)?;
    let mut provenance = Vec::new();
    let diagonal_nef_ray = if d >= 3 {
        provenance.push(String::from(
            "-θ+dg·x is nef and big with augmented base locus the small diagonal (d ≥ 3)",
        ));
        Some(Ray::new(-1, d * g)?)
    } else {
        None
    };
    let (theta_boundary, gonality) = match curve {
        CurveType::Hyperelliptic => {
            provenance.push(String::from(
                "hyperelliptic curves: θ spans a common boundary ray of the nef and movable cones",
            ));
            (Some(Ray::new(1, 0)?), 2)
        }
        CurveType::General => {
            provenance.push(String::from("a general curve of genus g is ⌈g/2+1⌉-gonal"));
            (None, (g + 3) / 2)
        }
    };
    provenance.push(String::from("θ-x is ample on C_d when C^1_d is empty"));
    Ok(NefFacts {
        diagonal_nef_ray,
        theta_boundary,
        gonality,
        theta_minus_x_ample: d < gonality,
        provenance,
    })
}

/// Upper end `1 + 1/(g² - g - 1)` of the interval where the general-curve
/// volume formula on `C_{g-1}` is proven.
pub fn vol_general_upper(g: i64) -> Rational {
    int(1) + rat(1, g * g - g - 1)
}

/// `Σ_k binom(g-1,k)·g!/(k+1)!·t^k(1-t)^(g-1-k)` as a polynomial in `t`.
pub fn vol_general_polynomial(g: i64) -> Result<Poly> {
    if g < 4 {
        return Err(Error::precondition("the general-curve volume needs g ≥ 4"));
    }
    let gf = Rational::from_integer(factorial(g)?);
    let t = Poly::t();
    let one_minus_t = Poly::linear(int(1), int(-1));
    let mut total = Poly::zero();
    for k in 0..g {
        let c = Rational::from_integer(binom(g - 1, k as u32)) * &gf
            / Rational::from_integer(factorial(k + 1)?);
        let term = &t.pow(k as u32) * &one_minus_t.pow((g - 1 - k) as u32);
        total = &total + &term.scale(&c);
    }
    Ok(total)
}

/// The same polynomial obtained by expanding `((1-t)θ + t x)^(g-1)` on
/// `C_{g-1}`, where `(1-t)θ + tx` is the residuation image of `θ - tx`.
pub fn vol_general_by_expansion(g: i64) -> Result<Poly> {
    if g < 4 {
        return Err(Error::precondition("the general-curve volume needs g ≥ 4"));
    }
    let (p, q) = involution_matrix(g)?.apply(&Poly::one(), &-&Poly::t());
    SymPower::new(g, g - 1)?.top_power_polynomial(&p, &q)
}

/// `vol(θ - t x)` on `C_{g-1}` for a general curve, `0 ≤ t ≤ 1 + 1/(g²-g-1)`.
pub fn vol_general(g: i64, t: &Rational) -> Result<Rational> {
    let poly = vol_general_polynomial(g)?;
    let upper = vol_general_upper(g);
    if t.is_negative() || *t > upper {
        return Err(Error::out_of_domain(t.clone(), int(0), upper));
    }
    Ok(poly.eval(t))
}

/// `vol(θ - t x)` on `C_d` for a hyperelliptic curve:
/// `g!/(g-d)! · (1 - t/(g-d+1))^d` for `0 ≤ t ≤ g-d+1`.
pub fn vol_hyperelliptic(g: i64, d: i64, t: &Rational) -> Result<Rational> {
    CurveContext::new(g, d, CurveType::Hyperelliptic)?;
    let upper = int(g - d + 1);
    if t.is_negative() || *t > upper {
        return Err(Error::out_of_domain(t.clone(), int(0), upper));
    }
    let lead = Rational::new(factorial(g)?, factorial(g - d)?);
    let base = int(1) - t / &upper;
    Ok(lead * num_traits::pow(base, d as usize))
}

/// `g!/2^(g-1)` together with the data deciding its integrality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pow2Volume {
    pub value: Rational,
    pub is_integer: bool,
    /// `v_2(g!)`.
    pub factorial_valuation: u64,
    /// Number of ones in the binary expansion of `g`.
    pub digit_sum: u32,
}

impl Pow2Volume {
    /// `v_2(g!) = g - s_2(g)`, so `g!/2^(g-1)` is an integer iff `s_2(g) = 1`.
    pub fn predicted_integer(&self) -> bool {
        self.digit_sum == 1
    }
}

pub fn volume_integral_iff_pow2(g: i64) -> Result<Pow2Volume> {
    if g < 2 {
        return Err(Error::precondition("g!/2^(g-1) needs g ≥ 2"));
    }
    let f = factorial(g)?;
    let value = Rational::new(f.clone(), BigInt::one() << (g - 1) as usize);
    Ok(Pow2Volume {
        is_integer: is_integer(&value),
        factorial_valuation: two_adic_valuation(&f).expect("g! is nonzero"),
        digit_sum: (g as u64).count_ones(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_catalog::{e_k_class, hyperelliptic_c1d_class, ramification_divisor_class};

    fn ray(u: i64, v: i64) -> Ray {
        Ray::new(u, v).unwrap()
    }

    fn general(g: i64, d: i64) -> CurveContext {
        CurveContext::new(g, d, CurveType::General).unwrap()
    }

    fn hyper(g: i64, d: i64) -> CurveContext {
        CurveContext::new(g, d, CurveType::Hyperelliptic).unwrap()
    }

    #[test]
    fn ray_normalization() {
        assert_eq!(ray(4, -6), ray(2, -3));
        assert_eq!(ray(-2, 14), ray(-1, 7));
        assert_ne!(ray(-1, 7), ray(1, -7));
        assert!(Ray::new(0, 0).is_err());
        assert_eq!(
            Ray::from_rationals(&int(1), &rat(-5, 3)).unwrap(),
            ray(3, -5)
        );
        assert_eq!(Ray::theta_minus(&rat(6, 5)).slope(), Some(rat(6, 5)));
        assert_eq!(ray(0, 3).slope(), None);
        assert_eq!(ray(3, -5).to_string(), "3*theta - 5*x");
    }

    #[test]
    fn r_bound_examples() {
        assert_eq!(r_bound(4, 3).unwrap(), rat(6, 5));
        assert_eq!(r_bound(5, 4).unwrap(), rat(8, 7));
        for g in 4..=30 {
            assert_eq!(r_bound(g, g - 1).unwrap(), int(1) + rat(1, 2 * g - 3));
        }
        assert!(r_bound(5, 5).is_err());
        assert!(r_bound(5, 1).is_err());
    }

    #[test]
    fn context_ranges() {
        assert!(CurveContext::new(3, 2, CurveType::General).is_err());
        assert!(CurveContext::new(5, 5, CurveType::General).is_err());
        assert!(CurveContext::new(5, 5, CurveType::Hyperelliptic).is_ok());
        assert!(CurveContext::new(5, 6, CurveType::Hyperelliptic).is_err());
        assert!(CurveContext::new(5, 1, CurveType::Hyperelliptic).is_err());
    }

    #[test]
    fn exact_cone_examples() {
        let c = effective_cone(&hyper(5, 3)).unwrap();
        assert_eq!(c.status(), ConeStatus::Exact);
        assert_eq!(
            (c.upper.clone(), c.lower_ray().clone()),
            (ray(-1, 7), ray(1, -3))
        );

        let c = effective_cone(&general(4, 3)).unwrap();
        assert_eq!(
            (c.upper.clone(), c.lower_ray().clone()),
            (ray(-1, 6), ray(5, -6))
        );
        assert_eq!(c.status(), ConeStatus::Exact);

        let c = effective_cone(&general(5, 3)).unwrap();
        assert_eq!(
            (c.upper.clone(), c.lower_ray().clone()),
            (ray(-1, 7), ray(3, -5))
        );
        assert_eq!(c.status(), ConeStatus::Exact);
        assert!(!c.provenance.is_empty());
    }

    #[test]
    fn bracket_inner_choice() {
        // r_{6,2} only
        let c = effective_cone(&general(6, 2)).unwrap();
        assert_eq!(c.status(), ConeStatus::Bracket);
        assert_eq!(c.lower_ray().slope(), Some(r_bound(6, 2).unwrap()));
        assert_eq!(c.outer_ray(), Some(&ray(1, -5)));
        // θ - 2x beats r_{g,d}
        let c = effective_cone(&general(8, 3)).unwrap();
        assert_eq!(c.lower_ray(), &ray(1, -2));
        // E_(k) at g = 2k-1
        let c = effective_cone(&general(7, 4)).unwrap();
        assert_eq!(c.lower_ray().slope(), Some(rat(7, 4)));
        assert_eq!(c.outer_ray(), Some(&ray(1, -4)));
    }

    #[test]
    fn cone_rays_match_catalog_classes() {
        for g in 2..=20 {
            for d in 2..=g {
                let c = effective_cone(&hyper(g, d)).unwrap();
                let lower = hyperelliptic_c1d_class(g, d).unwrap();
                assert_eq!(c.lower_ray(), &Ray::from_divisor(&lower).unwrap());
                assert_eq!(c.upper, ray(-1, g + d - 1));
            }
        }
        for g in 4..=20 {
            let c = effective_cone(&general(g, g - 1)).unwrap();
            let lower = ramification_divisor_class(g, g - 1).unwrap();
            assert_eq!(c.lower_ray(), &Ray::from_divisor(&lower).unwrap());
            assert_eq!(c.upper, ray(-1, 2 * g - 2));
        }
        let e3 = e_k_class(3).unwrap();
        assert_eq!(
            effective_cone(&general(5, 3)).unwrap().lower_ray(),
            &Ray::from_divisor(&e3).unwrap()
        );
    }

    #[test]
    fn bracket_rays_are_ordered() {
        for g in 4..=30 {
            for d in 2..g {
                let c = effective_cone(&general(g, d)).unwrap();
                assert!(c.lower_ray().cross_ray(&c.upper).is_positive());
                if let Some(outer) = c.outer_ray() {
                    assert!(outer.cross_ray(c.lower_ray()).is_positive(), "g={g} d={d}");
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        for g in 4..=12 {
            let c = effective_cone(&general(g, g - 1)).unwrap();
            let s = SymPower::new(g, g - 1).unwrap();
            assert_eq!(
                contains(&c, &s.divisor(int(1), int(-1))),
                Membership::Inside
            );
            let edge = s.divisor(int(1), -(int(1) + rat(1, 2 * g - 3)));
            assert_eq!(contains(&c, &edge), Membership::Boundary);
            assert_eq!(
                contains(&c, &s.divisor(int(-1), int(2 * g - 2))),
                Membership::Boundary
            );
            assert_eq!(
                contains(&c, &s.divisor(int(1), int(-2))),
                Membership::Outside
            );
            assert_eq!(
                contains(&c, &s.divisor(int(-1), int(1))),
                Membership::Outside
            );
            assert_eq!(
                contains(&c, &s.divisor(int(-1), int(0))),
                Membership::Outside
            );
        }
        let c = effective_cone(&hyper(5, 3)).unwrap();
        let s = SymPower::new(5, 3).unwrap();
        assert_eq!(
            contains(&c, &s.divisor(int(1), int(-4))),
            Membership::Outside
        );
        assert_eq!(
            contains(&c, &s.divisor(int(2), int(-6))),
            Membership::Boundary
        );
        assert_eq!(contains(&c, &s.divisor(int(0), int(1))), Membership::Inside);
    }

    #[test]
    fn membership_in_bracket() {
        let c = effective_cone(&general(8, 3)).unwrap();
        let s = SymPower::new(8, 3).unwrap();
        let t = |q: Rational| s.divisor(int(1), -q);
        assert_eq!(contains(&c, &t(rat(3, 2))), Membership::Inside);
        assert_eq!(contains(&c, &t(int(2))), Membership::Undetermined);
        assert_eq!(contains(&c, &t(rat(5, 2))), Membership::Undetermined);
        assert_eq!(contains(&c, &t(int(6))), Membership::Undetermined);
        assert_eq!(contains(&c, &t(int(7))), Membership::Outside);
        assert_eq!(
            contains(&c, &s.divisor(int(-1), int(10))),
            Membership::Boundary
        );
        assert_eq!(
            contains(&c, &s.divisor(int(-1), int(9))),
            Membership::Outside
        );
    }

    #[test]
    fn nef_examples() {
        let n = nef_facts(&general(4, 3)).unwrap();
        assert_eq!(n.diagonal_nef_ray, Some(ray(-1, 12)));
        assert_eq!(n.theta_boundary, None);
        assert!(nef_facts(&general(5, 2))
            .unwrap()
            .diagonal_nef_ray
            .is_none());
        let n = nef_facts(&general(7, 3)).unwrap();
        assert_eq!(n.gonality, 5);
        assert!(n.theta_minus_x_ample);
        assert!(!nef_facts(&general(7, 5)).unwrap().theta_minus_x_ample);
        assert_eq!(nef_facts(&general(6, 4)).unwrap().gonality, 4);
        for g in 2..=10 {
            for d in 2..=g {
                let n = nef_facts(&hyper(g, d)).unwrap();
                assert_eq!(n.theta_boundary, Some(ray(1, 0)));
                assert!(!n.theta_minus_x_ample);
            }
        }
    }

    #[test]
    fn general_volume_examples() {
        assert_eq!(vol_general(4, &int(1)).unwrap(), int(1));
        assert_eq!(vol_general(4, &rat(1, 2)).unwrap(), rat(73, 8));
        for g in 4..=20 {
            let gf = Rational::from_integer(factorial(g).unwrap());
            assert_eq!(vol_general(g, &int(0)).unwrap(), gf);
            assert_eq!(vol_general(g, &int(1)).unwrap(), int(1));
        }
        assert!(vol_general(4, &vol_general_upper(4)).is_ok());
        let past = vol_general_upper(4) + rat(1, 1000);
        match vol_general(4, &past) {
            Err(Error::OutOfProvenDomain { upper, .. }) => assert_eq!(*upper, rat(12, 11)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            vol_general(4, &rat(-1, 2)),
            Err(Error::OutOfProvenDomain { .. })
        ));
        assert!(vol_general(3, &int(0)).is_err());
    }

    #[test]
    fn general_volume_polynomial_identity() {
        for g in 4..=20 {
            let formula = vol_general_polynomial(g).unwrap();
            assert!(formula.degree().unwrap() <= (g - 1) as usize);
            assert_eq!(formula, vol_general_by_expansion(g).unwrap(), "g={g}");
        }
    }

    #[test]
    fn general_volume_positive_and_decreasing() {
        for g in 4..=14 {
            let upper = vol_general_upper(g);
            let mut prev: Option<Rational> = None;
            for i in 0..=40 {
                let t = &upper * rat(i, 40);
                let v = vol_general(g, &t).unwrap();
                if i < 40 {
                    assert!(v.is_positive(), "g={g} t={t}");
                }
                if let Some(p) = prev {
                    assert!(v < p, "g={g} t={t}");
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn non_nef_volume_differs_from_top_power() {
        let s = SymPower::new(4, 3).unwrap();
        assert_eq!(s.divisor(int(1), int(-1)).top_power().unwrap(), int(-1));
        assert_eq!(vol_general(4, &int(1)).unwrap(), int(1));
    }

    #[test]
    fn hyperelliptic_volume_examples() {
        assert_eq!(vol_hyperelliptic(4, 3, &int(1)).unwrap(), int(3));
        assert_eq!(vol_hyperelliptic(5, 4, &int(1)).unwrap(), rat(15, 2));
        for g in 2..=20 {
            for d in 2..=g {
                let space = SymPower::new(g, d).unwrap();
                assert_eq!(vol_hyperelliptic(g, d, &int(g - d + 1)).unwrap(), int(0));
                assert_eq!(
                    vol_hyperelliptic(g, d, &int(0)).unwrap(),
                    space.theta().pow(d as u32).unwrap().evaluate_top().unwrap()
                );
            }
        }
        for g in 4..=20 {
            let expect = Rational::new(factorial(g).unwrap(), BigInt::one() << (g - 1) as usize);
            assert_eq!(vol_hyperelliptic(g, g - 1, &int(1)).unwrap(), expect);
        }
        assert!(matches!(
            vol_hyperelliptic(5, 3, &rat(7, 2)),
            Err(Error::OutOfProvenDomain { .. })
        ));
        assert!(vol_hyperelliptic(5, 6, &int(0)).is_err());
    }

    #[test]
    fn pow2_integrality() {
        let v = volume_integral_iff_pow2(4).unwrap();
        assert_eq!((v.value.clone(), v.is_integer), (int(3), true));
        assert!(v.value.numer().is_odd());
        let v = volume_integral_iff_pow2(5).unwrap();
        assert_eq!((v.value, v.is_integer), (rat(15, 2), false));
        assert_eq!(volume_integral_iff_pow2(8).unwrap().value, int(315));
        let mut integral = Vec::new();
        for g in 2..=64 {
            let v = volume_integral_iff_pow2(g).unwrap();
            assert_eq!(v.factorial_valuation, (g as u64) - u64::from(v.digit_sum));
            assert_eq!(v.is_integer, v.predicted_integer());
            if v.is_integer {
                assert!(v.value.numer().is_odd());
                integral.push(g);
            }
        }
        assert_eq!(integral, [2, 4, 8, 16, 32, 64]);
    }
}
