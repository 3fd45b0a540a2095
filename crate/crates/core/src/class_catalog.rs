//! Named cycle classes on `C_d`.
//!
//! Each constructor returns the closed form. Where the closed form comes
//! out of a longer computation (a double sum, a coefficient extraction, a
//! linear system), that computation is also implemented here so the two
//! routes can be compared.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_arith::{
    add_mul, binom, gen_binomial, int, inv_factorial, BivariateSeries, Poly, Rational,
};
use crate::ns_ring::{CycleClass, DivisorClass, SymPower};
use crate::{Error, Result};

/// Data of a linear series `(L, V)` of degree `n` and dimension `r`, and
/// the symmetric power `C_d` the subordinate locus lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearSeries {
    pub g: i64,
    pub d: i64,
    pub n: i64,
    pub r: i64,
}

impl LinearSeries {
    pub fn new(g: i64, d: i64, n: i64, r: i64) -> Self {
        Self { g, d, n, r }
    }
}

/// Class of the locus `Γ_d(L, V)` of divisors subordinate to a `g^r_n`:
/// `Σ_{k=0}^{d-r} binom(n-g-r, k) x^k θ^(d-r-k) / (d-r-k)!`.
pub fn subordinate_class(series: LinearSeries) -> Result<CycleClass> {
    let LinearSeries { g, d, n, r } = series;
    if !(n >= d && d >= r && r >= 0) {
        return Err(Error::precondition("subordinate locus needs n ≥ d ≥ r ≥ 0"));
    }
    let space = SymPower::new(g, d)?;
    let codim = d - r;
    let coeffs = (0..=codim)
        .map(|k| {
            let c = gen_binomial(n - g - r, k)?;
            Ok(Rational::from_integer(c) * inv_factorial(codim - k))
        })
        .collect::<Result<Vec<_>>>()?;
    space.class(coeffs)
}

fn check_d_at_least_2(d: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::precondition("diagonal needs d ≥ 2"));
    }
    Ok(())
}

/// Class of the small diagonal `Δ_d = {d·p}`:
/// `d x^(d-2) (((d-1)g + 1) x - (d-1) θ)`.
pub fn small_diagonal_class(g: i64, d: i64) -> Result<CycleClass> {
    check_d_at_least_2(d)?;
    let space = SymPower::new(g, d)?;
    let codim = (d - 1) as usize;
    let mut coeffs = vec![Rational::zero(); codim + 1];
    coeffs[codim] = int(d * ((d - 1) * g + 1));
    coeffs[codim - 1] = int(-d * (d - 1));
    space.class(coeffs)
}

/// The small diagonal from the general diagonal formula, before the
/// alternating sums over `β` are collapsed:
/// `Σ_{0≤β≤α≤d-1} (-1)^(α+β)/(β!(α-β)!) (d(β+1-g) + d²(g-β)) x^(d-1-α) θ^α`.
pub fn small_diagonal_by_sum(g: i64, d: i64) -> Result<CycleClass> {
    check_d_at_least_2(d)?;
    let space = SymPower::new(g, d)?;
    let codim = (d - 1) as usize;
    let mut coeffs = vec![Rational::zero(); codim + 1];
    for alpha in 0..d {
        let mut sum = Rational::zero();
        for beta in 0..=alpha {
            let sign = if (alpha + beta) % 2 == 0 { 1 } else { -1 };
            let weight = inv_factorial(beta) * inv_factorial(alpha - beta);
            let term = d * (beta + 1 - g) + d * d * (g - beta);
            sum += weight * int(sign * term);
        }
        coeffs[(d - 1 - alpha) as usize] = sum;
    }
    space.class(coeffs)
}

/// Which printed form of the `xθ` coefficient of `Δ_{g-d+1,d}` to use.
///
/// The two printed forms differ: `Proof` carries `-(2d²-2d-1)` and agrees
/// with the coefficient extraction, `Statement` carries `-(2d²-d-2)` and
/// does not. `Statement` exists so the mismatch can be shown, not used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BipartitionVariant {
    #[default]
    Proof,
    Statement,
}

fn check_bipartition_range(g: i64, d: i64) -> Result<()> {
    if g < 3 || !(2..=g - 1).contains(&d) {
        return Err(Error::precondition(
            "Δ_{g-d+1,d} needs g ≥ 3 and 2 ≤ d ≤ g-1",
        ));
    }
    Ok(())
}

/// `1 - δ/2` where `δ` is 1 exactly when `d = (g+1)/2`.
fn half_if_balanced(g: i64, d: i64) -> Rational {
    if 2 * d == g + 1 {
        Rational::new(BigInt::one(), BigInt::from(2))
    } else {
        Rational::one()
    }
}

/// Numerical class of `Δ_{g-d+1,d} = {(g-d+1)p + dq}` on `C_{g+1}`:
/// `(1 - δ/2) d(g-d+1) x^(g-3) (A x² + B xθ + C θ²)`.
pub fn bipartition_diagonal_class(
    g: i64,
    d: i64,
    variant: BipartitionVariant,
) -> Result<CycleClass> {
    check_bipartition_range(g, d)?;
    let space = SymPower::new(g, g + 1)?;
    let a = (d - 1) * g * g * g - (d * d - 2) * g * g + (d * d - d - 1) * g + 2;
    let b_const = match variant {
        BipartitionVariant::Proof => 2 * d * d - 2 * d - 1,
        BipartitionVariant::Statement => 2 * d * d - d - 2,
    };
    let b = (2 - 2 * d) * g * g + (2 * d * d - 3) * g - b_const;
    let c = (d - 1) * (g - d);
    let scale = half_if_balanced(g, d) * int(d * (g - d + 1));
    let codim = (g - 1) as usize;
    let mut coeffs = vec![Rational::zero(); codim + 1];
    // x^(g-3) · {x², xθ, θ²} → x-exponents g-1, g-2, g-3
    coeffs[codim] = &scale * int(a);
    coeffs[codim - 1] = &scale * int(b);
    coeffs[codim - 2] = &scale * int(c);
    space.class(coeffs)
}

/// `Δ_{g-d+1,d}` by extracting `t1 t2` coefficients:
/// `Σ_{0≤β≤α≤g-1} (-1)^(α+β)/(β!(α-β)!) [t1 t2] (1+(g-d+1)t1+d t2)^(2-g+β)
/// (1+(g-d+1)² t1+d² t2)^(g-β) · x^(g-1-α) θ^α`, times `(1 - δ/2)`.
pub fn bipartition_diagonal_by_extraction(g: i64, d: i64) -> Result<CycleClass> {
    check_bipartition_range(g, d)?;
    let space = SymPower::new(g, g + 1)?;
    let e = g - d + 1;
    let first = BivariateSeries::linear(int(1), int(e), int(d));
    let second = BivariateSeries::linear(int(1), int(e * e), int(d * d));
    let extracted = (0..g)
        .map(|beta| {
            let s = first.pow(2 - g + beta)?.multiply(&second.pow(g - beta)?);
            Ok(s.coeff(1, 1))
        })
        .collect::<Result<Vec<_>>>()?;

    let codim = (g - 1) as usize;
    let mut coeffs = vec![Rational::zero(); codim + 1];
    for alpha in 0..g {
        let mut sum = Rational::zero();
        for beta in 0..=alpha {
            let sign = if (alpha + beta) % 2 == 0 {
                int(1)
            } else {
                int(-1)
            };
            let weight = sign * inv_factorial(beta) * inv_factorial(alpha - beta);
            add_mul(&mut sum, &weight, &extracted[beta as usize]);
        }
        coeffs[(g - 1 - alpha) as usize] = sum;
    }
    let half = half_if_balanced(g, d);
    Ok(space.class(coeffs)?.scale(&half))
}

fn check_ramification_range(g: i64, d: i64) -> Result<()> {
    if g < 4 || !(2..=g - 1).contains(&d) {
        return Err(Error::precondition("D_d needs g ≥ 4 and 2 ≤ d ≤ g-1"));
    }
    Ok(())
}

/// Class `aθ - bx` of the divisor `D_d` swept out by `Γ_d(K(-(g-d+1)p))`:
/// `a = (g-d+1)(g² - dg + d - 2)`, `b = (g-d+1)(g² - (d-1)g - 2)`.
pub fn ramification_divisor_class(g: i64, d: i64) -> Result<DivisorClass> {
    check_ramification_range(g, d)?;
    let e = g - d + 1;
    let a = e * (g * g - d * g + d - 2);
    let b = e * (g * g - (d - 1) * g - 2);
    Ok(SymPower::new(g, d)?.divisor(int(a), int(-b)))
}

/// Output of [`solve_dd_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdSystem {
    /// The solved class `aθ - bx`.
    pub class: DivisorClass,
    /// `χ_d · D_d = (g-2) Δ_{g-d+1} · Γ_{g-d+1}(K(-q_1-...-q_{d-1}))`.
    pub chi_rhs: Rational,
    /// `Δ_d · D_d = (1+δ) Δ_{g-d+1,d} · Γ_{g+1}(K)`, as computed.
    pub delta_rhs: Rational,
    /// `delta_rhs / d`, the right-hand side of `a·dg - b`.
    pub delta_rhs_over_d: Rational,
}

/// Recovers the class of `D_d` from its intersections with the two test
/// curves `χ_d = x^(d-1)` and `Δ_d`.
///
/// Both right-hand sides are themselves computed from subordinate and
/// diagonal classes on auxiliary symmetric powers; nothing in here uses the
/// closed form of [`ramification_divisor_class`].
pub fn solve_dd_system(g: i64, d: i64) -> Result<DdSystem> {
    check_ramification_range(g, d)?;
    let space = SymPower::new(g, d)?;
    let residual = g - d + 1;

    let chi_rhs = {
        let diag = small_diagonal_class(g, residual)?;
        let gamma = subordinate_class(LinearSeries::new(g, residual, 2 * g - d - 1, g - d))?;
        int(g - 2) * diag.intersect(&gamma)?
    };
    let delta_rhs = {
        let diag = bipartition_diagonal_class(g, d, BipartitionVariant::Proof)?;
        let gamma = subordinate_class(LinearSeries::new(g, g + 1, 2 * g - 2, g - 1))?;
        let multiplicity = if 2 * d == g + 1 { 2 } else { 1 };
        int(multiplicity) * diag.intersect(&gamma)?
    };

    let chi = space.x().pow((d - 1) as u32)?;
    let delta = small_diagonal_class(g, d)?;
    let (chi_t, chi_x) = (chi.intersect(&space.theta())?, chi.intersect(&space.x())?);
    let (del_t, del_x) = (
        delta.intersect(&space.theta())?,
        delta.intersect(&space.x())?,
    );

    // a·(C·θ) - b·(C·x) = rhs for C = χ_d, Δ_d
    let det = -&chi_t * &del_x + &chi_x * &del_t;
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let a = (-&chi_rhs * &del_x + &chi_x * &delta_rhs) / &det;
    let b = (&chi_t * &delta_rhs - &del_t * &chi_rhs) / &det;

    Ok(DdSystem {
        class: space.divisor(a, -b),
        delta_rhs_over_d: &delta_rhs / int(d),
        chi_rhs,
        delta_rhs,
    })
}

/// The two alternating sums defining the class of `E_(k)` (before the
/// `1/(k-1)` factor): the `θ` sum and the `x` sum, signs kept as printed.
pub fn e_k_sums(k: i64) -> (Rational, Rational) {
    let mut theta = BigInt::zero();
    let mut x = BigInt::zero();
    for l in 0..=k - 2 {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let common = BigInt::from(sign) * binom(2 * k - 4 - l, (k - 2) as u32);
        theta += &common * (l + 1) * binom(2 * k - 2, (l + 3) as u32);
        x += &common * (l * (l + 1)) * binom(2 * k - 1, (l + 3) as u32);
    }
    (Rational::from_integer(theta), Rational::from_integer(x))
}

/// Class of the divisor `E_(k)` on `C_k` for a genus `2k-1` curve.
pub fn e_k_class(k: i64) -> Result<DivisorClass> {
    if k < 3 {
        return Err(Error::precondition("E_(k) needs k ≥ 3"));
    }
    let (theta, x) = e_k_sums(k);
    let factor = Rational::new(BigInt::one(), BigInt::from(k - 1));
    Ok(SymPower::new(2 * k - 1, k)?.divisor(theta * &factor, x * factor))
}

/// Class of `C^1_d` on a hyperelliptic curve: `θ - (g-d+1)x`.
pub fn hyperelliptic_c1d_class(g: i64, d: i64) -> Result<DivisorClass> {
    if !(2..=g).contains(&d) {
        return Err(Error::precondition(
            "C^1_d on a hyperelliptic curve needs 2 ≤ d ≤ g",
        ));
    }
    Ok(SymPower::new(g, d)?.divisor(int(1), int(-(g - d + 1))))
}

/// `Γ_k(L)` for a pencil `L` of degree `k+1` on a genus `2k-1` curve, as a
/// subordinate class on `C_k`.
pub fn pencil_locus_class(k: i64) -> Result<CycleClass> {
    subordinate_class(LinearSeries::new(2 * k - 1, k, k + 1, 1))
}

/// `(Γ_k(L)·θ, Γ_k(L)·x)` from the two alternating binomial sums.
pub fn orth_intersections(k: i64) -> Result<(Rational, Rational)> {
    if k < 2 {
        return Err(Error::precondition("pencil intersections need k ≥ 2"));
    }
    let mut theta = BigInt::zero();
    let mut x = BigInt::zero();
    for j in 0..k {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let lead = BigInt::from(sign) * binom(k - 2 + j, j as u32);
        theta += &lead * binom(2 * k - 2, (k - 1 - j) as u32);
        x += &lead * binom(2 * k - 1, (k - 1 - j) as u32);
    }
    Ok((
        Rational::from_integer(theta * (2 * k - 1)),
        Rational::from_integer(x),
    ))
}

/// Same pair as [`orth_intersections`], by top-degree evaluation of the
/// subordinate class against `θ` and `x`.
pub fn orth_intersections_by_evaluation(k: i64) -> Result<(Rational, Rational)> {
    if k < 2 {
        return Err(Error::precondition("pencil intersections need k ≥ 2"));
    }
    let gamma = pencil_locus_class(k)?;
    let space = gamma.space();
    Ok((
        gamma.intersect(&space.theta())?,
        gamma.intersect(&space.x())?,
    ))
}

/// Both sides of the binomial identity
/// `(2m+3) Σ (-1)^l (l+1) binom(2m-l,m) binom(2m+2,l+3)
///   = -(m+2) Σ (-1)^l l(l+1) binom(2m-l,m) binom(2m+3,l+3)`
/// together with the generating-function residual `[t^m] (2m-2t)(1+t)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombsumValues {
    pub lhs: Rational,
    pub rhs: Rational,
    pub residual: Rational,
}

impl CombsumValues {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.residual.is_zero()
    }
}

pub fn combsum_check(m: i64) -> Result<CombsumValues> {
    if m < 1 {
        return Err(Error::precondition("the identity is stated for m ≥ 1"));
    }
    let mut left = BigInt::zero();
    let mut right = BigInt::zero();
    for l in 0..=m {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let common = BigInt::from(sign) * binom(2 * m - l, m as u32);
        left += &common * (l + 1) * binom(2 * m + 2, (l + 3) as u32);
        right += &common * (l * (l + 1)) * binom(2 * m + 3, (l + 3) as u32);
    }
    let lhs = Rational::from_integer(left * (2 * m + 3));
    let rhs = Rational::from_integer(right * -(m + 2));
    let deg = m as usize;
    let gf = Poly::linear(int(2 * m), int(-2)).mul_truncated(
        &Poly::linear(int(1), int(1)).pow_truncated(m as u32, deg),
        deg,
    );
    Ok(CombsumValues {
        lhs,
        rhs,
        residual: gf.coeff(deg),
    })
}
