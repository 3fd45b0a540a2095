//! Exact re-derivation of every checkable identity, with pass/fail reports.
//!
//! Each check sweeps a parameter range, compares two independently computed
//! values and stops at the first mismatch. Checks are deterministic and
//! independent of each other, so callers may run them in any order or in
//! parallel.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Display};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::class_catalog::{
    bipartition_diagonal_by_extraction, bipartition_diagonal_class, combsum_check, e_k_class,
    e_k_sums, hyperelliptic_c1d_class, orth_intersections, orth_intersections_by_evaluation,
    pencil_locus_class, ramification_divisor_class, small_diagonal_by_sum, small_diagonal_class,
    solve_dd_system, subordinate_class, BipartitionVariant, LinearSeries,
};
use crate::cone_volume::{
    contains, effective_cone, r_bound, vol_general, vol_general_by_expansion,
    vol_general_polynomial, vol_hyperelliptic, volume_integral_iff_pow2, ConeStatus, CurveContext,
    CurveType, Membership, Ray,
};
use crate::exact_arith::{factorial, int, rat, Rational};
use crate::ns_ring::{theta_minus, SymPower};
use crate::residuation::{
    inverse_pullback, involution_matrix, pullback, tau_inverse_pullback, Mat2, SourceClass,
    TargetClass,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// The first parameter tuple at which two computed values disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub left: String,
    pub right: String,
}

/// A known mismatch between a printed formula and the value its own
/// derivation produces. Reported alongside a passing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub params: String,
    pub description: String,
    pub stated: String,
    pub derived: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub discrepancy: Option<Discrepancy>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn from_outcome(name: &'static str, range: String, outcome: Outcome) -> Self {
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(c) => (Status::Fail, Some(c)),
        };
        Self {
            name,
            range,
            status,
            counterexample,
            discrepancy: None,
        }
    }
}

impl Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} [{}]", self.name, self.range)?;
        if let Some(c) = &self.counterexample {
            write!(f, " at {}: {} != {}", c.params, c.left, c.right)?;
        }
        if let Some(d) = &self.discrepancy {
            write!(
                f,
                " (documented discrepancy at {}: {} stated {}, derived {})",
                d.params, d.description, d.stated, d.derived
            )?;
        }
        Ok(())
    }
}

type Outcome = core::result::Result<(), Counterexample>;

fn expect_eq<T: PartialEq + Display>(
    params: impl FnOnce() -> String,
    left: &T,
    right: &T,
) -> Outcome {
    if left == right {
        Ok(())
    } else {
        Err(Counterexample {
            params: params(),
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}

fn expect(params: impl FnOnce() -> String, cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Counterexample {
            params: params(),
            left: String::from(what),
            right: String::from("does not hold"),
        })
    }
}

fn lift<T>(
    params: impl FnOnce() -> String,
    r: Result<T>,
) -> core::result::Result<T, Counterexample> {
    r.map_err(|e| Counterexample {
        params: params(),
        left: format!("error: {e}"),
        right: String::from("a value"),
    })
}

fn gd(g: i64, d: i64) -> impl Fn() -> String {
    move || format!("g={g}, d={d}")
}

fn need(cond: bool, msg: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(String::from(msg)))
    }
}

/// Deliberate corruptions used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Negate the right-hand side of the binomial identity.
    FlipCombsumRhs,
    /// Add one to the `θ` coefficient of the solved `D_d` class.
    ShiftDdSolution,
    /// Replace the closed-form volume polynomial by its value plus one.
    OffsetVolume,
}

/// Sweep bounds. Unset fields fall back to [`SuiteLimits::DEFAULT`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteLimits {
    pub g_max: Option<i64>,
    pub diagonal_g_max: Option<i64>,
    pub k_max: Option<i64>,
    pub m_max: Option<i64>,
    pub e_k_max: Option<i64>,
    pub pow2_max: Option<i64>,
}

/// Fully resolved sweep bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub g_max: i64,
    pub diagonal_g_max: i64,
    pub k_max: i64,
    pub m_max: i64,
    pub e_k_max: i64,
    pub pow2_max: i64,
}

impl SuiteLimits {
    pub const DEFAULT: Limits = Limits {
        g_max: 20,
        diagonal_g_max: 12,
        k_max: 100,
        m_max: 200,
        e_k_max: 50,
        pow2_max: 64,
    };

    pub fn resolve(&self) -> Limits {
        let d = Self::DEFAULT;
        Limits {
            g_max: self.g_max.unwrap_or(d.g_max),
            diagonal_g_max: self.diagonal_g_max.unwrap_or(d.diagonal_g_max),
            k_max: self.k_max.unwrap_or(d.k_max),
            m_max: self.m_max.unwrap_or(d.m_max),
            e_k_max: self.e_k_max.unwrap_or(d.e_k_max),
            pow2_max: self.pow2_max.unwrap_or(d.pow2_max),
        }
    }
}

/// `subordinate_class(g, g-1, 2g-3, g-2) = θ - x` for `4 ≤ g ≤ g_max`.
pub fn check_subordinate(g_max: i64) -> Result<CheckReport> {
    need(g_max >= 4, "the subordinate check needs g_max ≥ 4")?;
    let outcome = (|| {
        for g in 4..=g_max {
            let p = || format!("g={g}");
            let got = lift(
                p,
                subordinate_class(LinearSeries::new(g, g - 1, 2 * g - 3, g - 2)),
            )?;
            let want = lift(p, SymPower::new(g, g - 1))?
                .divisor(int(1), int(-1))
                .into_class();
            expect_eq(p, &got, &want)?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "subordinate",
        format!("4 ≤ g ≤ {g_max}"),
        outcome,
    ))
}

/// Small diagonal closed form against its double sum, `2 ≤ d ≤ g ≤ g_max`.
pub fn check_small_diagonal(g_max: i64) -> Result<CheckReport> {
    need(g_max >= 2, "the small diagonal check needs g_max ≥ 2")?;
    let outcome = (|| {
        for g in 2..=g_max {
            for d in 2..=g {
                let p = gd(g, d);
                let closed = lift(&p, small_diagonal_class(g, d))?;
                let by_sum = lift(&p, small_diagonal_by_sum(g, d))?;
                expect_eq(&p, &closed, &by_sum)?;
            }
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "small-diagonal",
        format!("2 ≤ d ≤ g ≤ {g_max}"),
        outcome,
    ))
}

/// Solved `D_d` class against the closed form and `b/a = r_{g,d}`.
pub fn check_dd_system(g_max: i64) -> Result<CheckReport> {
    check_dd_system_with(g_max, None)
}

fn check_dd_system_with(g_max: i64, mutation: Option<Mutation>) -> Result<CheckReport> {
    need(g_max >= 4, "the D_d check needs g_max ≥ 4")?;
    let outcome = (|| {
        let p = gd(4, 3);
        let s = lift(&p, solve_dd_system(4, 3))?;
        expect_eq(&p, &s.chi_rhs, &int(28))?;
        expect_eq(&p, &s.delta_rhs, &int(324))?;
        expect_eq(&p, &Pair(s.class.a(), s.class.b()), &Pair(int(10), int(12)))?;
        for g in 4..=g_max {
            for d in 2..g {
                let p = gd(g, d);
                let mut solved = lift(&p, solve_dd_system(g, d))?.class;
                if mutation == Some(Mutation::ShiftDdSolution) {
                    solved = solved
                        .space()
                        .divisor(solved.theta_coeff() + int(1), solved.x_coeff());
                }
                let closed = lift(&p, ramification_divisor_class(g, d))?;
                expect_eq(&p, &solved, &closed)?;
                let slope = solved.slope().unwrap_or_else(Rational::zero);
                expect_eq(&p, &slope, &lift(&p, r_bound(g, d))?)?;
                if d == g - 1 {
                    expect_eq(&p, &slope, &(int(1) + rat(1, 2 * g - 3)))?;
                }
            }
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "dd-system",
        format!("4 ≤ g ≤ {g_max}, 2 ≤ d ≤ g-1"),
        outcome,
    ))
}

/// Displayable `(a, b)`.
#[derive(PartialEq)]
struct Pair(Rational, Rational);

impl Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl From<(Rational, Rational)> for Pair {
    fn from((a, b): (Rational, Rational)) -> Self {
        Pair(a, b)
    }
}

/// Closed form of `Δ_{g-d+1,d}` against coefficient extraction, with the
/// stated `xθ` coefficient recorded as a discrepancy when it differs.
pub fn check_diagonal_agreement(g_max: i64) -> Result<CheckReport> {
    need(g_max >= 4, "the bipartition diagonal check needs g_max ≥ 4")?;
    let outcome = (|| {
        let p = gd(4, 3);
        let closed = lift(
            &p,
            bipartition_diagonal_class(4, 3, BipartitionVariant::Proof),
        )?;
        // 6x(38x² - 15xθ + 2θ²)
        let six_x = [int(0), int(12), int(-90), int(228)];
        let expected = lift(&p, closed.space().class(six_x.to_vec()))?;
        expect_eq(&p, &closed, &expected)?;
        expect_eq(&p, &closed.coeff(0), &int(0))?;
        for g in 3..=g_max {
            for d in 2..g {
                let p = gd(g, d);
                let closed = lift(
                    &p,
                    bipartition_diagonal_class(g, d, BipartitionVariant::Proof),
                )?;
                let extracted = lift(&p, bipartition_diagonal_by_extraction(g, d))?;
                expect_eq(&p, &closed, &extracted)?;
            }
        }
        Ok(())
    })();
    let mut report = CheckReport::from_outcome(
        "bipartition-diagonal",
        format!("3 ≤ g ≤ {g_max}, 2 ≤ d ≤ g-1"),
        outcome,
    );
    report.discrepancy = statement_discrepancy(4, 3)?;
    Ok(report)
}

fn statement_discrepancy(g: i64, d: i64) -> Result<Option<Discrepancy>> {
    let stated = bipartition_diagonal_class(g, d, BipartitionVariant::Statement)?;
    let derived = bipartition_diagonal_by_extraction(g, d)?;
    let first = (0..stated.coeffs().len()).find(|&k| stated.coeff(k) != derived.coeff(k));
    Ok(first.map(|k| Discrepancy {
        params: format!("g={g}, d={d}"),
        description: format!(
            "coefficient of {} in the printed closed form",
            monomial(stated.codim(), k)
        ),
        stated: stated.coeff(k).to_string(),
        derived: derived.coeff(k).to_string(),
    }))
}

fn monomial(codim: usize, k: usize) -> String {
    let part = |name: &str, e: usize| match e {
        0 => String::new(),
        1 => String::from(name),
        _ => format!("{name}^{e}"),
    };
    format!("{}{}", part("x", k), part("θ", codim - k))
}

/// The binomial identity for `1 ≤ m ≤ m_max`, and a vanishing
/// generating-function residual.
pub fn check_combsum(m_max: i64) -> Result<CheckReport> {
    check_combsum_with(m_max, None)
}

fn check_combsum_with(m_max: i64, mutation: Option<Mutation>) -> Result<CheckReport> {
    need(m_max >= 1, "the binomial identity check needs m_max ≥ 1")?;
    let outcome = (|| {
        for m in 1..=m_max {
            let p = || format!("m={m}");
            let v = lift(p, combsum_check(m))?;
            let rhs = if mutation == Some(Mutation::FlipCombsumRhs) {
                -v.rhs
            } else {
                v.rhs
            };
            expect_eq(p, &v.lhs, &rhs)?;
            expect_eq(p, &v.residual, &int(0))?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "combsum",
        format!("1 ≤ m ≤ {m_max}"),
        outcome,
    ))
}

/// `(2k-1)A = -kB` for the two `E_(k)` sums, `E_(k) ∝ θ - (2-1/k)x`, and
/// `E_(3) = 3θ - 5x`.
pub fn check_e_k(k_max: i64) -> Result<CheckReport> {
    need(k_max >= 3, "the E_(k) check needs k_max ≥ 3")?;
    let outcome = (|| {
        let p = || String::from("k=3");
        let e3 = lift(p, e_k_class(3))?;
        let want = e3.space().divisor(int(3), int(-5));
        expect_eq(p, &e3, &want)?;
        for k in 3..=k_max {
            let p = || format!("k={k}");
            let (a, b) = e_k_sums(k);
            expect_eq(p, &(int(2 * k - 1) * a), &(-int(k) * b))?;
            let e = lift(p, e_k_class(k))?;
            let ray = theta_minus(e.space(), int(2) - rat(1, k));
            expect(
                p,
                e.is_positive_multiple_of(&ray),
                "E_(k) is a positive multiple of θ-(2-1/k)x",
            )?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "e-k",
        format!("3 ≤ k ≤ {k_max}"),
        outcome,
    ))
}

/// `Γ_k(L)·θ = 2k-1`, `Γ_k(L)·x = k` by both routes, and orthogonality to
/// `θ - (2-1/k)x`.
pub fn check_orth(k_max: i64) -> Result<CheckReport> {
    need(k_max >= 2, "the pencil intersection check needs k_max ≥ 2")?;
    let outcome = (|| {
        for k in 2..=k_max {
            let p = || format!("k={k}");
            let want = Pair(int(2 * k - 1), int(k));
            expect_eq(p, &lift(p, orth_intersections(k))?.into(), &want)?;
            expect_eq(
                p,
                &lift(p, orth_intersections_by_evaluation(k))?.into(),
                &want,
            )?;
            let gamma = lift(p, pencil_locus_class(k))?;
            let ray = theta_minus(gamma.space(), int(2) - rat(1, k));
            expect_eq(p, &lift(p, gamma.intersect(ray.as_class()))?, &int(0))?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "orth",
        format!("2 ≤ k ≤ {k_max}"),
        outcome,
    ))
}

/// Closed-form volume polynomial on `C_{g-1}` against the expansion of
/// `((1-t)θ + tx)^(g-1)`, with `vol(θ - x) = 1` and `vol(θ - x/2) = 73/8`
/// at `g = 4`.
pub fn check_volume_identity(g_max: i64) -> Result<CheckReport> {
    check_volume_identity_with(g_max, None)
}

fn check_volume_identity_with(g_max: i64, mutation: Option<Mutation>) -> Result<CheckReport> {
    need(g_max >= 4, "the volume identity check needs g_max ≥ 4")?;
    let outcome = (|| {
        let p = || String::from("g=4, t=1/2");
        expect_eq(p, &lift(p, vol_general(4, &rat(1, 2)))?, &rat(73, 8))?;
        for g in 4..=g_max {
            let p = || format!("g={g}");
            let mut formula = lift(p, vol_general_polynomial(g))?;
            if mutation == Some(Mutation::OffsetVolume) {
                formula = &formula + &crate::exact_arith::Poly::one();
            }
            let expansion = lift(p, vol_general_by_expansion(g))?;
            expect_eq(p, &formula.eval(&int(1)), &expansion.eval(&int(1)))?;
            expect(
                p,
                formula == expansion,
                "closed form equals expansion as polynomials",
            )?;
            expect_eq(p, &lift(p, vol_general(g, &int(1)))?, &int(1))?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "volume-identity",
        format!("4 ≤ g ≤ {g_max}"),
        outcome,
    ))
}

/// Hyperelliptic volume `g!/2^(g-1)` on `C_{g-1}` at `t = 1`, and its
/// integrality exactly at powers of two.
pub fn check_hyperelliptic_volume(g_max: i64, pow2_max: i64) -> Result<CheckReport> {
    need(
        g_max >= 4 && pow2_max >= 2,
        "the hyperelliptic volume check needs g_max ≥ 4, pow2_max ≥ 2",
    )?;
    let outcome = (|| {
        for (g, want) in [(4, int(3)), (5, rat(15, 2))] {
            let p = || format!("g={g}");
            expect_eq(p, &lift(p, vol_hyperelliptic(g, g - 1, &int(1)))?, &want)?;
        }
        for g in 4..=g_max {
            let p = || format!("g={g}");
            let got = lift(p, vol_hyperelliptic(g, g - 1, &int(1)))?;
            let want = Rational::new(
                lift(p, factorial(g))?,
                num_bigint::BigInt::one() << (g - 1) as usize,
            );
            expect_eq(p, &got, &want)?;
        }
        for g in 2..=pow2_max {
            let p = || format!("g={g}");
            let v = lift(p, volume_integral_iff_pow2(g))?;
            expect_eq(
                p,
                &v.factorial_valuation,
                &((g as u64) - u64::from(v.digit_sum)),
            )?;
            expect_eq(p, &v.is_integer, &v.predicted_integer())?;
            expect_eq(p, &v.is_integer, &(g as u64).is_power_of_two())?;
            if v.is_integer {
                expect(p, v.value.numer().is_odd(), "the integral value is odd")?;
            }
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "hyperelliptic-volume",
        format!("4 ≤ g ≤ {g_max}; integrality for 2 ≤ g ≤ {pow2_max}"),
        outcome,
    ))
}

/// Exact cone rays in every settled case, and membership of classes built
/// from those rays.
pub fn check_cone_catalog(g_max: i64) -> Result<CheckReport> {
    need(g_max >= 5, "the cone catalog check needs g_max ≥ 5")?;
    let outcome = (|| {
        let exact = |g: i64, d: i64, curve, upper: Ray, lower: Ray| -> Outcome {
            let p = gd(g, d);
            let ctx = lift(&p, CurveContext::new(g, d, curve))?;
            let cone = lift(&p, effective_cone(&ctx))?;
            expect(&p, cone.status() == ConeStatus::Exact, "the cone is exact")?;
            expect_eq(&p, &cone.upper, &upper)?;
            expect_eq(&p, cone.lower_ray(), &lower)?;
            let space = ctx.space();
            let (u, l) = (upper.to_divisor(space), lower.to_divisor(space));
            let inside =
                space.divisor(u.theta_coeff() + l.theta_coeff(), u.x_coeff() + l.x_coeff());
            let beyond = space.divisor(l.theta_coeff(), l.x_coeff() - int(1));
            let above = space.divisor(u.theta_coeff(), u.x_coeff() - int(1));
            expect_eq(
                &p,
                &membership(contains(&cone, &inside)),
                &membership(Membership::Inside),
            )?;
            expect_eq(
                &p,
                &membership(contains(&cone, &l)),
                &membership(Membership::Boundary),
            )?;
            expect_eq(
                &p,
                &membership(contains(&cone, &u)),
                &membership(Membership::Boundary),
            )?;
            expect_eq(
                &p,
                &membership(contains(&cone, &beyond)),
                &membership(Membership::Outside),
            )?;
            expect_eq(
                &p,
                &membership(contains(&cone, &above)),
                &membership(Membership::Outside),
            )?;
            Ok(())
        };
        let ray = |u: i64, v: i64| Ray::new(u, v).expect("nonzero");
        for g in 2..=g_max {
            for d in 2..=g {
                let lower = Ray::from_divisor(&lift(gd(g, d), hyperelliptic_c1d_class(g, d))?)
                    .expect("nonzero");
                expect_eq(gd(g, d), &lower, &ray(1, -(g - d + 1)))?;
                exact(g, d, CurveType::Hyperelliptic, ray(-1, g + d - 1), lower)?;
            }
        }
        for g in 4..=g_max {
            let lower = Ray::theta_minus(&(int(1) + rat(1, 2 * g - 3)));
            exact(g, g - 1, CurveType::General, ray(-1, 2 * g - 2), lower)?;
        }
        exact(5, 3, CurveType::General, ray(-1, 7), ray(3, -5))?;
        for g in 6..=g_max {
            for d in 2..g - 1 {
                let p = gd(g, d);
                let ctx = lift(&p, CurveContext::new(g, d, CurveType::General))?;
                let cone = lift(&p, effective_cone(&ctx))?;
                expect(
                    &p,
                    cone.status() == ConeStatus::Bracket,
                    "the cone is bracketed",
                )?;
                let inner = cone.lower_ray().slope().unwrap_or_else(Rational::zero);
                expect(
                    &p,
                    inner >= lift(&p, r_bound(g, d))?,
                    "inner ray is at least r_{g,d}",
                )?;
                let gap = ctx.space().divisor(int(2), -(inner + int(g - d + 1)));
                expect_eq(
                    &p,
                    &membership(contains(&cone, &gap)),
                    &membership(Membership::Undetermined),
                )?;
            }
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "cone-catalog",
        format!("2 ≤ d ≤ g ≤ {g_max}"),
        outcome,
    ))
}

fn membership(m: Membership) -> &'static str {
    match m {
        Membership::Inside => "inside",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
        Membership::Undetermined => "undetermined",
    }
}

/// Residuation pullbacks are mutually inverse, the `C_{g-1}` involution
/// squares to the identity, and `aX̂ + bθ̂ ↦ (a+b)θ - ax`.
pub fn check_residuation(g_max: i64) -> Result<CheckReport> {
    need(g_max >= 3, "the residuation check needs g_max ≥ 3")?;
    let outcome = (|| {
        let samples: Vec<Rational> = (-6..=6).flat_map(|n| [int(n), rat(n, 7)]).collect();
        for a in &samples {
            for b in &samples {
                let p = || format!("a={a}, b={b}");
                let src = SourceClass::new(a.clone(), b.clone());
                expect(
                    p,
                    inverse_pullback(&pullback(&src)) == src,
                    "inverse∘pullback = id",
                )?;
                let tgt = TargetClass::new(a.clone(), b.clone());
                expect(
                    p,
                    pullback(&inverse_pullback(&tgt)) == tgt,
                    "pullback∘inverse = id",
                )?;
                let (th, x) = tau_inverse_pullback(a, b);
                expect_eq(p, &Pair(th, x), &Pair(a + b, -a))?;
            }
        }
        for g in 3..=g_max {
            let p = || format!("g={g}");
            let m = lift(p, involution_matrix(g))?;
            expect(p, &m * &m == Mat2::identity(), "M² = identity")?;
        }
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "residuation",
        format!("3 ≤ g ≤ {g_max}"),
        outcome,
    ))
}

/// Top self-intersection and volume disagree off the nef cone.
pub fn check_non_nef_witness() -> Result<CheckReport> {
    let outcome = (|| {
        let p = || String::from("g=4, d=3");
        let s = lift(p, SymPower::new(4, 3))?;
        expect_eq(
            p,
            &lift(p, s.divisor(int(1), int(-1)).top_power())?,
            &int(-1),
        )?;
        expect_eq(p, &lift(p, vol_general(4, &int(1)))?, &int(1))?;
        let p = || String::from("g=5, d=3");
        let s = lift(p, SymPower::new(5, 3))?;
        let top = lift(p, s.divisor(int(1), rat(-5, 3)).top_power())?;
        expect_eq(p, &top, &rat(-80, 27))?;
        Ok(())
    })();
    Ok(CheckReport::from_outcome(
        "non-nef-witness",
        String::from("g=4, g=5"),
        outcome,
    ))
}

/// A named check of the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    Subordinate,
    DdSystem,
    BipartitionDiagonal,
    Combsum,
    EK,
    Orth,
    VolumeIdentity,
    HyperellipticVolume,
    ConeCatalog,
    Residuation,
    NonNefWitness,
    SmallDiagonal,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Subordinate,
        CheckId::DdSystem,
        CheckId::BipartitionDiagonal,
        CheckId::Combsum,
        CheckId::EK,
        CheckId::Orth,
        CheckId::VolumeIdentity,
        CheckId::HyperellipticVolume,
        CheckId::ConeCatalog,
        CheckId::Residuation,
        CheckId::NonNefWitness,
        CheckId::SmallDiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Subordinate => "subordinate",
            CheckId::DdSystem => "dd-system",
            CheckId::BipartitionDiagonal => "bipartition-diagonal",
            CheckId::Combsum => "combsum",
            CheckId::EK => "e-k",
            CheckId::Orth => "orth",
            CheckId::VolumeIdentity => "volume-identity",
            CheckId::HyperellipticVolume => "hyperelliptic-volume",
            CheckId::ConeCatalog => "cone-catalog",
            CheckId::Residuation => "residuation",
            CheckId::NonNefWitness => "non-nef-witness",
            CheckId::SmallDiagonal => "small-diagonal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn run(self, limits: &SuiteLimits) -> Result<CheckReport> {
        self.run_with(limits, None)
    }

    pub fn run_with(self, limits: &SuiteLimits, mutation: Option<Mutation>) -> Result<CheckReport> {
        let l = limits.resolve();
        match self {
            CheckId::Subordinate => check_subordinate(l.g_max),
            CheckId::DdSystem => check_dd_system_with(l.g_max, mutation),
            CheckId::BipartitionDiagonal => check_diagonal_agreement(l.diagonal_g_max),
            CheckId::Combsum => check_combsum_with(l.m_max, mutation),
            CheckId::EK => check_e_k(l.e_k_max),
            CheckId::Orth => check_orth(l.k_max),
            CheckId::VolumeIdentity => check_volume_identity_with(l.g_max, mutation),
            CheckId::HyperellipticVolume => check_hyperelliptic_volume(l.g_max, l.pow2_max),
            CheckId::ConeCatalog => check_cone_catalog(l.g_max),
            CheckId::Residuation => check_residuation(l.g_max),
            CheckId::NonNefWitness => check_non_nef_witness(),
            CheckId::SmallDiagonal => check_small_diagonal(l.g_max),
        }
    }
}

impl Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs every check in [`CheckId::ALL`] order.
pub fn run_all(limits: &SuiteLimits) -> Result<Vec<CheckReport>> {
    run_all_with(limits, None)
}

pub fn run_all_with(limits: &SuiteLimits, mutation: Option<Mutation>) -> Result<Vec<CheckReport>> {
    CheckId::ALL
        .iter()
        .map(|c| c.run_with(limits, mutation))
        .collect()
}

pub fn failure_count(reports: &[CheckReport]) -> usize {
    reports.iter().filter(|r| !r.passed()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteLimits {
        SuiteLimits {
            g_max: Some(8),
            diagonal_g_max: Some(6),
            k_max: Some(10),
            m_max: Some(12),
            e_k_max: Some(8),
            pow2_max: Some(20),
        }
    }

    #[test]
    fn combsum_reports() {
        let r = check_combsum(1).unwrap();
        assert!(r.passed());
        assert_eq!(combsum_check(1).unwrap().lhs, int(30));
        let r = check_combsum_with(5, Some(Mutation::FlipCombsumRhs)).unwrap();
        assert_eq!(r.status, Status::Fail);
        let c = r.counterexample.unwrap();
        assert_eq!(
            (c.params.as_str(), c.left.as_str(), c.right.as_str()),
            ("m=1", "30", "-30")
        );
        assert!(check_combsum(0).is_err());
    }

    #[test]
    fn diagonal_discrepancy_is_reported_not_failed() {
        let r = check_diagonal_agreement(6).unwrap();
        assert!(r.passed());
        let d = r.discrepancy.unwrap();
        assert_eq!((d.stated.as_str(), d.derived.as_str()), ("-102", "-90"));
        assert_eq!(d.params, "g=4, d=3");
        assert_eq!(
            d.description,
            "coefficient of x^2θ in the printed closed form"
        );
    }

    #[test]
    fn each_mutation_fails() {
        for m in [
            Mutation::FlipCombsumRhs,
            Mutation::ShiftDdSolution,
            Mutation::OffsetVolume,
        ] {
            let reports = run_all_with(&small(), Some(m)).unwrap();
            assert_eq!(failure_count(&reports), 1, "{m:?}");
            assert!(reports
                .iter()
                .all(|r| r.passed() || r.counterexample.is_some()));
        }
    }

    #[test]
    fn small_limits_pass() {
        let reports = run_all(&small()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
        assert_eq!(reports.len(), CheckId::ALL.len());
    }

    #[test]
    fn empty_limits_resolve_to_defaults() {
        assert_eq!(SuiteLimits::default().resolve(), SuiteLimits::DEFAULT);
    }

    #[test]
    fn names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(CheckId::from_name(c.name()), Some(c));
        }
        assert_eq!(CheckId::from_name("nope"), None);
    }

    #[test]
    fn report_display() {
        let r = check_combsum_with(2, Some(Mutation::FlipCombsumRhs)).unwrap();
        assert_eq!(r.to_string(), "FAIL combsum [1 ≤ m ≤ 2] at m=1: 30 != -30");
    }
}
