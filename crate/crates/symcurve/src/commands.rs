use std::fmt;
use std::thread;

use serde_json::{json, Value};
use symcurve_core::class_catalog::{
    bipartition_diagonal_class, e_k_class, hyperelliptic_c1d_class, ramification_divisor_class,
    small_diagonal_class, subordinate_class, BipartitionVariant, LinearSeries,
};
use symcurve_core::cone_volume::{
    contains, effective_cone, nef_facts, vol_general, vol_general_upper, vol_hyperelliptic,
    volume_integral_iff_pow2, ConeStatus, CurveContext, CurveType, LowerBoundary, Membership,
};
use symcurve_core::exact_arith::int;
use symcurve_core::identity_suite::{CheckId, CheckReport, Mutation, Status, SuiteLimits};
use symcurve_core::ns_ring::{CycleClass, DivisorClass, SymPower};
use symcurve_core::Error;

use crate::expr::{self, Env, EvalError, Expr};
use crate::output::{class_value, divisor_value, q, ray_value, OutputDocument};
use crate::{
    exit, ClassArgs, ClassName, Command, ConeArgs, Curve, Injection, IntersectArgs, Variant,
    VerifyArgs, VolumeArgs,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Core(Error::OutOfProvenDomain { .. }) => exit::OUT_OF_DOMAIN,
            CliError::Core(_) => exit::PRECONDITION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Class(e) => CliError::Core(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(OutputDocument, u8), CliError>;

pub fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Class(a) => cmd_class(a),
        Command::Intersect(a) => cmd_intersect(a),
        Command::Cone(a) => cmd_cone(a),
        Command::Volume(a) => cmd_volume(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

const POINCARE: &str = "top-degree evaluation x^k θ^(d-k) = g!/(g-d+k)! on C_d";

fn class_provenance(name: &str) -> Option<&'static str> {
    Some(match name {
        "subordinate" => {
            "subordinate locus Γ_d(L,V) of a g^r_n: Σ_k binom(n-g-r,k) x^k θ^(d-r-k)/(d-r-k)!"
        }
        "smalldiag" | "small-diagonal" => "small diagonal Δ_d: d x^(d-2) (((d-1)g+1)x - (d-1)θ)",
        "bipartition-diagonal" => {
            "diagonal Δ_{g-d+1,d} on C_{g+1}: (1-δ/2) d(g-d+1) x^(g-3) (A x² + B xθ + C θ²), \
             coefficients from the t1·t2 coefficient of a bivariate generating function"
        }
        "ramification" => {
            "divisor D_d swept by Γ_d(K(-(g-d+1)p)): aθ - bx with a = (g-d+1)(g²-dg+d-2), \
             b = (g-d+1)(g²-(d-1)g-2), matching its intersections with the test curves x^(d-1) and Δ_d"
        }
        "ek" | "e-k" => "divisor E_(k) on C_k for genus 2k-1, proportional to θ - (2-1/k)x",
        "c1d" | "hyperelliptic-c1d" => "C^1_d on a hyperelliptic curve: θ - (g-d+1)x",
        _ => return None,
    })
}

fn need(v: Option<i64>, flag: &str, what: &str) -> Result<i64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("`class {what}` needs --{flag}")))
}

fn cmd_class(a: &ClassArgs) -> Outcome {
    let name = match a.name {
        ClassName::Subordinate => "subordinate",
        ClassName::SmallDiagonal => "small-diagonal",
        ClassName::BipartitionDiagonal => "bipartition-diagonal",
        ClassName::Ramification => "ramification",
        ClassName::EK => "e-k",
        ClassName::HyperellipticC1d => "hyperelliptic-c1d",
    };
    let mut doc = OutputDocument::new("class").input("name", name);
    for (flag, v) in [("g", a.g), ("d", a.d), ("n", a.n), ("r", a.r), ("k", a.k)] {
        if let Some(v) = v {
            doc = doc.input(flag, v.to_string());
        }
    }
    let gd = || Ok::<_, CliError>((need(a.g, "g", name)?, need(a.d, "d", name)?));
    let class: CycleClass = match a.name {
        ClassName::Subordinate => {
            let (g, d) = gd()?;
            let (n, r) = (need(a.n, "n", name)?, need(a.r, "r", name)?);
            subordinate_class(LinearSeries::new(g, d, n, r))?
        }
        ClassName::SmallDiagonal => {
            let (g, d) = gd()?;
            small_diagonal_class(g, d)?
        }
        ClassName::BipartitionDiagonal => {
            let (g, d) = gd()?;
            doc = doc.input("variant", format!("{:?}", a.variant).to_lowercase());
            let variant = match a.variant {
                Variant::Proof => BipartitionVariant::Proof,
                Variant::Statement => {
                    doc.provenance.push(
                        "printed closed form; its xθ coefficient disagrees with the coefficient extraction"
                            .into(),
                    );
                    BipartitionVariant::Statement
                }
            };
            bipartition_diagonal_class(g, d, variant)?
        }
        ClassName::Ramification => {
            let (g, d) = gd()?;
            ramification_divisor_class(g, d)?.into_class()
        }
        ClassName::EK => e_k_class(need(a.k, "k", name)?)?.into_class(),
        ClassName::HyperellipticC1d => {
            let (g, d) = gd()?;
            hyperelliptic_c1d_class(g, d)?.into_class()
        }
    };
    doc.provenance
        .insert(0, class_provenance(name).expect("known name").into());
    doc.result = class_value(&class);
    Ok((doc, exit::OK))
}

fn parse_expr(src: &str) -> Result<Expr, CliError> {
    expr::parse(src).map_err(|e| CliError::Usage(format!("cannot parse {src:?}: {e}")))
}

fn names_in(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Scalar(_) => {}
        Expr::Name(n) => {
            if !out.contains(n) {
                out.push(n.clone());
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => names_in(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            names_in(a, out);
            names_in(b, out);
        }
    }
}

fn cmd_intersect(a: &IntersectArgs) -> Outcome {
    let mut doc = OutputDocument::new("intersect")
        .input("expression", a.expression.clone())
        .input("g", a.g.to_string())
        .input("d", a.d.to_string());
    for (flag, v) in [("n", a.n), ("r", a.r)] {
        if let Some(v) = v {
            doc = doc.input(flag, v.to_string());
        }
    }
    let e = parse_expr(&a.expression)?;
    let env = Env {
        space: SymPower::new(a.g, a.d)?,
        n: a.n,
        r: a.r,
    };
    let class = env.eval(&e)?;
    let value = class.evaluate_top()?;
    let mut names = Vec::new();
    names_in(&e, &mut names);
    doc.provenance.push(POINCARE.into());
    doc.provenance.extend(
        names
            .iter()
            .filter_map(|n| class_provenance(n))
            .map(String::from),
    );
    doc.result = json!({ "value": q(&value), "product": class.to_string() });
    Ok((doc, exit::OK))
}

fn context(g: i64, d: i64, curve: Curve) -> Result<CurveContext, CliError> {
    let curve = match curve {
        Curve::General => CurveType::General,
        Curve::Hyperelliptic => CurveType::Hyperelliptic,
    };
    Ok(CurveContext::new(g, d, curve)?)
}

fn curve_name(c: Curve) -> &'static str {
    match c {
        Curve::General => "general",
        Curve::Hyperelliptic => "hyperelliptic",
    }
}

fn membership_name(m: Membership) -> &'static str {
    match m {
        Membership::Inside => "inside",
        Membership::Boundary => "boundary",
        Membership::Outside => "outside",
        Membership::Undetermined => "undetermined",
    }
}

fn cmd_cone(a: &ConeArgs) -> Outcome {
    let mut doc = OutputDocument::new("cone")
        .input("g", a.g.to_string())
        .input("d", a.d.to_string())
        .input("curve", curve_name(a.curve));
    let ctx = context(a.g, a.d, a.curve)?;
    let cone = effective_cone(&ctx)?;
    let nef = nef_facts(&ctx)?;
    let mut result = json!({
        "status": match cone.status() {
            ConeStatus::Exact => "exact",
            ConeStatus::Bracket => "bracket",
        },
        "upper": ray_value(&cone.upper),
    });
    match &cone.lower {
        LowerBoundary::Exact(r) => result["lower"] = ray_value(r),
        LowerBoundary::Bracket { inner, outer } => {
            result["lower_inner"] = ray_value(inner);
            result["lower_outer"] = ray_value(outer);
        }
    }
    let mut nef_json = json!({
        "gonality": nef.gonality.to_string(),
        "theta_minus_x_ample": nef.theta_minus_x_ample,
    });
    if let Some(r) = &nef.diagonal_nef_ray {
        nef_json["diagonal_nef_ray"] = ray_value(r);
    }
    if let Some(r) = &nef.theta_boundary {
        nef_json["theta_boundary"] = ray_value(r);
    }
    result["nef"] = nef_json;
    if let Some(src) = &a.member {
        doc = doc.input("member", src.clone());
        let env = Env {
            space: ctx.space(),
            n: None,
            r: None,
        };
        let class = DivisorClass::try_from(env.eval(&parse_expr(src)?)?)?;
        result["membership"] = json!({
            "class": class.to_string(),
            "position": membership_name(contains(&cone, &class)),
        });
    }
    doc.result = result;
    doc.provenance = cone.provenance;
    doc.provenance.extend(nef.provenance);
    Ok((doc, exit::OK))
}

fn cmd_volume(a: &VolumeArgs) -> Outcome {
    let mut doc = OutputDocument::new("volume")
        .input("g", a.g.to_string())
        .input("d", a.d.to_string())
        .input("t", a.t.to_string())
        .input("curve", curve_name(a.curve));
    let ctx = context(a.g, a.d, a.curve)?;
    let (value, upper) = match a.curve {
        Curve::General => {
            if a.d != a.g - 1 {
                return Err(Error::Precondition(format!(
                    "the general-curve volume is known on C_{{g-1}} only; use --d {}",
                    a.g - 1
                ))
                .into());
            }
            doc.provenance.push(
                "general curve, C_{g-1}: vol(θ-tx) = Σ_k binom(g-1,k) g!/(k+1)! t^k (1-t)^(g-1-k) \
                 for 0 ≤ t ≤ 1 + 1/(g²-g-1)"
                    .into(),
            );
            (vol_general(a.g, &a.t)?, vol_general_upper(a.g))
        }
        Curve::Hyperelliptic => {
            doc.provenance.push(
                "hyperelliptic curve: vol(θ-tx) = g!/(g-d)! (1 - t/(g-d+1))^d for 0 ≤ t ≤ g-d+1"
                    .into(),
            );
            (vol_hyperelliptic(a.g, a.d, &a.t)?, int(a.g - a.d + 1))
        }
    };
    let divisor = ctx.space().divisor(int(1), -a.t.clone());
    let mut result = json!({
        "value": q(&value),
        "domain": [q(&int(0)), q(&upper)],
        "divisor": divisor_value(&divisor),
        "top_self_intersection": q(&divisor.top_power()?),
    });
    if a.curve == Curve::Hyperelliptic && a.d == a.g - 1 && a.t == int(1) {
        let p = volume_integral_iff_pow2(a.g)?;
        result["integrality"] = json!({
            "is_integer": p.is_integer,
            "binary_digit_sum": p.digit_sum.to_string(),
            "factorial_two_adic_valuation": p.factorial_valuation.to_string(),
        });
        doc.provenance.push(
            "g!/2^(g-1) is an integer iff g is a power of 2, since v_2(g!) = g - s_2(g)".into(),
        );
    }
    doc.result = result;
    Ok((doc, exit::OK))
}

fn limits_for(suite: &str, max: Option<i64>) -> SuiteLimits {
    let Some(m) = max else {
        return SuiteLimits::default();
    };
    if suite == "all" {
        let d = SuiteLimits::DEFAULT;
        return SuiteLimits {
            g_max: Some(d.g_max.min(m)),
            diagonal_g_max: Some(d.diagonal_g_max.min(m)),
            k_max: Some(d.k_max.min(m)),
            m_max: Some(d.m_max.min(m)),
            e_k_max: Some(d.e_k_max.min(m)),
            pow2_max: Some(d.pow2_max.min(m)),
        };
    }
    let mut l = SuiteLimits::default();
    match CheckId::from_name(suite) {
        Some(CheckId::BipartitionDiagonal) => l.diagonal_g_max = Some(m),
        Some(CheckId::Combsum) => l.m_max = Some(m),
        Some(CheckId::EK) => l.e_k_max = Some(m),
        Some(CheckId::Orth) => l.k_max = Some(m),
        Some(CheckId::HyperellipticVolume) => {
            l.g_max = Some(m);
            l.pow2_max = Some(m);
        }
        Some(CheckId::NonNefWitness) | None => {}
        Some(_) => l.g_max = Some(m),
    }
    l
}

fn report_value(r: &CheckReport) -> Value {
    let mut v = json!({
        "name": r.name,
        "range": r.range,
        "status": match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        },
    });
    if let Some(c) = &r.counterexample {
        v["counterexample"] = json!({ "params": c.params, "left": c.left, "right": c.right });
    }
    if let Some(d) = &r.discrepancy {
        v["documented_discrepancy"] = json!({
            "params": d.params,
            "description": d.description,
            "stated": d.stated,
            "derived": d.derived,
        });
    }
    v
}

/// Runs the selected checks on scoped threads; reports keep suite order.
pub fn run_checks(
    ids: &[CheckId],
    limits: &SuiteLimits,
    mutation: Option<Mutation>,
) -> Result<Vec<CheckReport>, Error> {
    thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| s.spawn(move || id.run_with(limits, mutation)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    })
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let mut doc = OutputDocument::new("verify").input("suite", a.suite.clone());
    if let Some(m) = a.max {
        doc = doc.input("max", m.to_string());
    }
    let ids: Vec<CheckId> = if a.suite == "all" {
        CheckId::ALL.to_vec()
    } else {
        vec![CheckId::from_name(&a.suite)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {:?}", a.suite)))?]
    };
    let mutation = a.inject.map(|m| match m {
        Injection::FlipCombsumRhs => Mutation::FlipCombsumRhs,
        Injection::ShiftDdSolution => Mutation::ShiftDdSolution,
        Injection::OffsetVolume => Mutation::OffsetVolume,
    });
    if let Some(m) = a.inject {
        doc = doc.input("inject", format!("{m:?}"));
    }
    let reports = run_checks(&ids, &limits_for(&a.suite, a.max), mutation)?;
    let failures = reports.iter().filter(|r| !r.passed()).count();
    doc.result = json!({
        "checks": reports.len().to_string(),
        "failures": failures.to_string(),
        "passed": failures == 0,
        "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
    });
    doc.provenance
        .push("every check compares two independent exact computations".into());
    let code = if failures == 0 {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    };
    Ok((doc, code))
}
