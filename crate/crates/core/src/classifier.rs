//! Classification criteria for ambitoric and Calabi-type structures. Each
//! criterion is decided from the coefficient conditions and cross-checked
//! against the tensor computation on the chart.

use std::fmt;
use std::time::Instant;

use num_traits::Zero;

use crate::algebra::{ratio, scalar, ExactScalar, RationalFunction};
use crate::binary_forms::{curvature_bracket_in, BinaryForm, QuadraticForm};
use crate::builder::{build, build_calabi, pfaffian, AmbitoricModel, AmbitoricSpec, CalabiModel, FormType, X, Y};
use crate::error::{Error, Result};
use crate::tensor::{
    bach, check_hermitian, compose, curvature, d2, invariance_residual, lower_endomorphism, nabla_j,
    killing_tensor_residual, killing_vector_residual, square_residual, tracefree_ricci, ChartTensor, Metric,
    Symmetry,
};

/// Ratio between the closed-form scalar curvatures and the tensor computation,
/// fixed on the hyperbolic `A = B = z` structure.
pub const SCALAR_CALIBRATION: i64 = 1;

/// A coefficient expression that vanishes when the condition holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: &'static str,
    pub value: ExactScalar,
}

impl Condition {
    fn new(label: &'static str, value: ExactScalar) -> Self {
        Condition { label, value }
    }

    pub fn holds(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label, self.value)
    }
}

fn failed(conds: &[Condition]) -> Option<String> {
    let bad: Vec<String> = conds.iter().filter(|c| !c.holds()).map(|c| c.to_string()).collect();
    (!bad.is_empty()).then(|| bad.join(", "))
}

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: String,
    pub holds: bool,
    /// `zero`, or the exact residual (condition or tensor component) that failed.
    pub witness: String,
    pub millis: u128,
}

impl Verdict {
    fn new(criterion: impl Into<String>, holds: bool, witness: impl Into<String>, start: Instant) -> Self {
        Verdict { criterion: criterion.into(), holds, witness: witness.into(), millis: start.elapsed().as_millis() }
    }
}

fn coeffs(spec: &AmbitoricSpec) -> (Vec<ExactScalar>, Vec<ExactScalar>) {
    (spec.a_coeffs(), spec.b_coeffs())
}

fn named_only(spec: &AmbitoricSpec) -> Result<()> {
    if spec.form_type == FormType::General {
        return Err(Error::Precondition("coefficient tables exist for the named types only".into()));
    }
    Ok(())
}

/// The extremality conditions of the normal form.
pub fn extremal_table_conditions(spec: &AmbitoricSpec) -> Result<Vec<Condition>> {
    named_only(spec)?;
    let (a, b) = coeffs(spec);
    let s = |i: usize| &a[i] + &b[i];
    Ok(match spec.form_type {
        FormType::Parabolic => vec![
            Condition::new("a0+b0", s(0)),
            Condition::new("a1+b1", s(1)),
            Condition::new("a2+b2", s(2)),
        ],
        FormType::Hyperbolic => vec![
            Condition::new("a0+b0", s(0)),
            Condition::new("a2+b2", s(2)),
            Condition::new("a4+b4", s(4)),
        ],
        FormType::Elliptic => vec![
            Condition::new("a0+b0+a4+b4", s(0) + s(4)),
            Condition::new("a2+b2", s(2)),
            Condition::new("a1+b1-a3-b3", s(1) - s(3)),
        ],
        FormType::General => unreachable!(),
    })
}

/// The Bach-flat relation of the normal form (meaningful for extremal specs).
pub fn bach_table_relation(spec: &AmbitoricSpec) -> Result<Condition> {
    named_only(spec)?;
    let (a, b) = coeffs(spec);
    Ok(match spec.form_type {
        FormType::Parabolic => Condition::new(
            "a1(a3+b3)+4a0(a4+b4)",
            &a[1] * (&a[3] + &b[3]) + scalar(4) * &a[0] * (&a[4] + &b[4]),
        ),
        FormType::Hyperbolic => Condition::new(
            "(a3-b3)(a1+b1)+(a3+b3)(a1-b1)",
            (&a[3] - &b[3]) * (&a[1] + &b[1]) + (&a[3] + &b[3]) * (&a[1] - &b[1]),
        ),
        FormType::Elliptic => Condition::new(
            "(a3-b1)(a3+b3)+4(a4+b4)(a4+b0)",
            (&a[3] - &b[1]) * (&a[3] + &b[3]) + scalar(4) * (&a[4] + &b[4]) * (&a[4] + &b[0]),
        ),
        FormType::General => unreachable!(),
    })
}

/// The constant scalar curvature conditions listed for the spec's `p`.
pub fn csc_table_conditions(spec: &AmbitoricSpec) -> Result<Vec<Condition>> {
    named_only(spec)?;
    let p = spec.p.as_ref().ok_or_else(|| Error::Precondition("no p given".into()))?;
    let (a, b) = coeffs(spec);
    let s = |i: usize| &a[i] + &b[i];
    let d = |i: usize| &a[i] - &b[i];
    let z_like = QuadraticForm::new(ExactScalar::zero(), ratio(1, 2), ExactScalar::zero());
    let no_entry = || Error::Precondition(format!("no coefficient conditions listed for p = {p}"));
    match spec.form_type {
        FormType::Parabolic => {
            if !p.is_parallel(&z_like) {
                return Err(no_entry());
            }
            Ok(vec![
                Condition::new("a0+b0", s(0)),
                Condition::new("a2+b2", s(2)),
                Condition::new("a4+b4", s(4)),
                Condition::new("a1-b1", d(1)),
            ])
        }
        FormType::Hyperbolic => {
            // p = 1 + eps z^2 up to scale
            if p.q2.is_zero() {
                return Err(no_entry());
            }
            let eps = &p.q0 / &p.q2;
            Ok(vec![
                Condition::new("a0+b0+eps^2(a4+b4)", s(0) + &eps * &eps * s(4)),
                Condition::new("a1+b1-eps(a3+b3)", s(1) - &eps * s(3)),
                Condition::new("a2+b2", s(2)),
                Condition::new("a1-b1+eps(a3-b3)", d(1) + &eps * d(3)),
            ])
        }
        FormType::Elliptic => {
            if p.is_parallel(&QuadraticForm::from_ints(-1, 0, 1)) {
                // the z^4 and constant coefficients pair crosswise here
                Ok(vec![
                    Condition::new("a0+b4", &a[0] + &b[4]),
                    Condition::new("a4+b0", &a[4] + &b[0]),
                    Condition::new("a2+b2", s(2)),
                    Condition::new("a1+b1+a3+b3", s(1) + s(3)),
                ])
            } else if p.is_parallel(&z_like) {
                Ok(vec![
                    Condition::new("a0+b0", s(0)),
                    Condition::new("a2+b2", s(2)),
                    Condition::new("a4+b4", s(4)),
                    Condition::new("a1-b1+a3-b3", d(1) + d(3)),
                ])
            } else {
                Err(no_entry())
            }
        }
        FormType::General => unreachable!(),
    }
}

/// Result of the extremality test.
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub holds: bool,
    /// Coefficient conditions of the normal form; empty for the general type.
    pub conditions: Vec<Condition>,
    /// `pi = (A+B)/(2q)` and `P = (A-B)/2` when the structure is extremal.
    pub pi: Option<QuadraticForm>,
    pub p_part: Option<BinaryForm>,
    /// Oracle verdicts for `g+` and `g-`.
    pub oracle_plus: bool,
    pub oracle_minus: bool,
    pub witness: String,
}

/// `A = q pi + P`, `B = q pi - P` with `<pi, q> = 0`, if such a decomposition exists.
pub fn extremal_decomposition(spec: &AmbitoricSpec) -> Option<(QuadraticForm, BinaryForm)> {
    let sum = spec.a.add(&spec.b);
    let two_q = spec.q.to_binary_form().scale(&scalar(2));
    let pi = sum.div_exact(&two_q)?;
    let pi = QuadraticForm::from_binary_form(&pi).ok()?;
    if !pi.inner_product(&spec.q).is_zero() {
        return None;
    }
    let p = spec.a.sub(&spec.b).scale(&ratio(1, 2)).with_bound(4).ok()?;
    Some((pi, p))
}

/// Scalar curvature of `g`, and whether `J grad s` is a Killing field.
pub fn extremal_oracle(g: &Metric, j: &ChartTensor) -> Result<(RationalFunction, ChartTensor)> {
    let s = curvature(g)?.scalar;
    let grad = g.gradient(&s);
    let n = g.dim();
    let k = ChartTensor::from_fn(g.chart(), 1, 0, Symmetry::None, |i| {
        (0..n)
            .filter(|&b| !j.get(&[i[0], b]).is_zero() && !grad.get(&[b]).is_zero())
            .map(|b| j.get(&[i[0], b]) * grad.get(&[b]))
            .sum()
    });
    Ok((s, killing_vector_residual(g, &k)?))
}

pub fn extremal_check(model: &AmbitoricModel) -> Result<ExtremalReport> {
    let spec = &model.spec;
    let conditions = match spec.form_type {
        FormType::General => Vec::new(),
        _ => extremal_table_conditions(spec)?,
    };
    let decomposition = extremal_decomposition(spec);
    let table = conditions.iter().all(Condition::holds);
    if spec.form_type != FormType::General && table != decomposition.is_some() {
        return Err(Error::Inconsistency(format!(
            "coefficient table says {table}, the decomposition A = q pi + P says {}",
            decomposition.is_some()
        )));
    }
    let holds = decomposition.is_some();
    let (rp, rm) = rayon::join(
        || extremal_oracle(&model.gplus, &model.j_plus),
        || extremal_oracle(&model.gminus, &model.j_minus),
    );
    let (rp, rm) = (rp?.1, rm?.1);
    let (oracle_plus, oracle_minus) = (rp.is_zero(), rm.is_zero());
    let witness = if holds {
        "zero".to_string()
    } else {
        failed(&conditions).unwrap_or_else(|| format!("J grad s+ not Killing: {}", rp.digest()))
    };
    let (pi, p_part) = match decomposition {
        Some((pi, p)) => (Some(pi), Some(p)),
        None => (None, None),
    };
    Ok(ExtremalReport { holds, conditions, pi, p_part, oracle_plus, oracle_minus, witness })
}

/// `s+ = -[T(q(x,y)^2, A(x)) + T(q(x,y)^2, B(y))] / ((x-y) q(x,y))`, and `s-`
/// with `(x-y)^2` in place of `q(x,y)^2`; each bracket differentiates in the
/// variable of its second argument.
pub fn scalar_curvature_closed(spec: &AmbitoricSpec) -> Result<(RationalFunction, RationalFunction)> {
    let q = spec.q_xy();
    let xmy = AmbitoricSpec::x_minus_y();
    let den = (&xmy * &q).inv()?.scale_i64(-SCALAR_CALIBRATION);
    Ok((bracket_scalar(&q.pow(2), spec, &den), bracket_scalar(&xmy.pow(2), spec, &den)))
}

fn bracket_scalar(w: &RationalFunction, spec: &AmbitoricSpec, den: &RationalFunction) -> RationalFunction {
    let ta = curvature_bracket_in(w, &spec.a.eval_in(X), X);
    let tb = curvature_bracket_in(w, &spec.b.eval_in(Y), Y);
    &(&ta + &tb) * den
}

/// Tensor scalar curvatures of `g+` and `g-`.
pub fn scalar_curvature_oracle(model: &AmbitoricModel) -> Result<(RationalFunction, RationalFunction)> {
    let (p, m) = rayon::join(|| curvature(&model.gplus), || curvature(&model.gminus));
    Ok((p?.scalar, m?.scalar))
}

/// Result of the Bach-flat test.
#[derive(Clone, Debug)]
pub struct BachReport {
    pub holds: bool,
    pub relation: Option<Condition>,
    /// `pi` parallel to `{q, (q, P)^(2)}`.
    pub theorem: bool,
    pub oracle: bool,
    pub witness: String,
}

pub fn bach_flat_check(model: &AmbitoricModel, extremal: &ExtremalReport) -> Result<BachReport> {
    let (pi, p) = match (&extremal.pi, &extremal.p_part) {
        (Some(pi), Some(p)) if extremal.holds => (pi, p),
        _ => return Err(Error::Precondition("the Bach-flat criterion applies to extremal structures".into())),
    };
    let spec = &model.spec;
    let qp = BinaryForm::transvectant(&spec.q.to_binary_form().with_bound(2)?, p, 2)?;
    let qp = QuadraticForm::from_binary_form(&qp)?;
    let theorem = pi.is_parallel(&spec.q.poisson_bracket(&qp));
    let relation = match spec.form_type {
        FormType::General => None,
        _ => Some(bach_table_relation(spec)?),
    };
    if let Some(r) = &relation {
        if r.holds() != theorem {
            return Err(Error::Inconsistency(format!(
                "Bach-flat relation ({r}) disagrees with the transvectant criterion"
            )));
        }
    }
    let b = bach(&model.gplus)?;
    let oracle = b.is_zero();
    let witness = if theorem {
        "zero".to_string()
    } else {
        relation.as_ref().map(|r| r.to_string()).unwrap_or_else(|| format!("Bach tensor {}", b.digest()))
    };
    Ok(BachReport { holds: theorem, relation, theorem, oracle, witness })
}

/// Outcome of the conformally Einstein test.
#[derive(Clone, Debug)]
pub enum EinsteinReport {
    /// `g = s^-2 g+-` with its tracefree Ricci tensor.
    Metric { plus: bool, metric: Metric, ric0: ChartTensor },
    /// Both scalar curvatures vanish: the structure is conformally flat.
    ConformallyFlat,
}

impl EinsteinReport {
    pub fn holds(&self) -> bool {
        match self {
            EinsteinReport::Metric { ric0, .. } => ric0.is_zero(),
            EinsteinReport::ConformallyFlat => true,
        }
    }
}

/// Tracefree Ricci tensor of `s^-2 g`.
pub fn einstein_metric(g: &Metric, s: &RationalFunction) -> Result<(Metric, ChartTensor)> {
    let metric = g.conformal(&s.pow(2).inv()?)?;
    let curv = curvature(&metric)?;
    let ric0 = tracefree_ricci(&metric, &curv);
    Ok((metric, ric0))
}

pub fn einstein_conformal(model: &AmbitoricModel, bach_report: &BachReport) -> Result<EinsteinReport> {
    if !bach_report.holds {
        return Err(Error::Precondition("the structure is not Bach-flat".into()));
    }
    let (sp, sm) = scalar_curvature_closed(&model.spec)?;
    let (plus, s) = if !sp.is_zero() {
        (true, sp)
    } else if !sm.is_zero() {
        (false, sm)
    } else {
        return Ok(EinsteinReport::ConformallyFlat);
    };
    let (metric, ric0) = einstein_metric(model.metric(plus), &s)?;
    Ok(EinsteinReport::Metric { plus, metric, ric0 })
}

/// Check `C+^4 s-^4 v+ = -C-^4 s+^4 v-` for some constants: the ratio
/// `s-^4 v+ / (-s+^4 v-)` must be a constant, returned when it is.
pub fn bach_flat_volume_ratio(model: &AmbitoricModel) -> Result<Option<ExactScalar>> {
    let (sp, sm) = scalar_curvature_closed(&model.spec)?;
    if sp.is_zero() || sm.is_zero() {
        return Err(Error::Precondition("both scalar curvatures must be nonzero".into()));
    }
    let (vp, vm) = (pfaffian(&model.omega_plus), pfaffian(&model.omega_minus));
    let r = &(&sm.pow(4) * &vp) / &(-&(&sp.pow(4) * &vm));
    Ok(r.constant_value())
}

/// `g = (q(x,y)/p(x,y))^2 g+` and its Ricci, scalar curvature, and Ricci invariance residuals.
#[derive(Clone, Debug)]
pub struct DiagonalRicci {
    pub metric: Metric,
    pub ricci: ChartTensor,
    pub scalar: RationalFunction,
    pub scalar_closed: RationalFunction,
    pub residual_plus: ChartTensor,
    pub residual_minus: ChartTensor,
}

impl DiagonalRicci {
    pub fn diagonal(&self) -> bool {
        self.residual_plus.is_zero() && self.residual_minus.is_zero()
    }
}

fn orthogonal_p(spec: &AmbitoricSpec, p: &QuadraticForm) -> Result<()> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("p is zero".into()));
    }
    if !p.inner_product(&spec.q).is_zero() {
        return Err(Error::NotOrthogonal(format!("<p, q> = {}", p.inner_product(&spec.q))));
    }
    Ok(())
}

/// `s^g = -[T(p(x,y)^2, A) + T(p(x,y)^2, B)] / ((x-y) q(x,y))`.
pub fn diagonal_scalar_closed(spec: &AmbitoricSpec, p: &QuadraticForm) -> Result<RationalFunction> {
    let den = (&AmbitoricSpec::x_minus_y() * &spec.q_xy()).inv()?.scale_i64(-SCALAR_CALIBRATION);
    Ok(bracket_scalar(&p.polarize_in(X, Y).pow(2), spec, &den))
}

pub fn diagonal_ricci_metric(model: &AmbitoricModel, p: &QuadraticForm) -> Result<DiagonalRicci> {
    orthogonal_p(&model.spec, p)?;
    let factor = (&model.spec.q_xy() / &p.polarize_in(X, Y)).pow(2);
    let metric = model.gplus.conformal(&factor)?;
    let curv = curvature(&metric)?;
    let residual_plus = invariance_residual(&curv.ricci, &model.j_plus);
    let residual_minus = invariance_residual(&curv.ricci, &model.j_minus);
    Ok(DiagonalRicci {
        scalar_closed: diagonal_scalar_closed(&model.spec, p)?,
        metric,
        ricci: curv.ricci,
        scalar: curv.scalar,
        residual_plus,
        residual_minus,
    })
}

/// Result of the constant scalar curvature / Einstein–Maxwell test.
#[derive(Clone, Debug)]
pub struct CscReport {
    /// `d s^g = 0`.
    pub holds: bool,
    /// Listed coefficient conditions, when the normal form has an entry for `p`.
    pub conditions: Option<Vec<Condition>>,
    /// The constant `c` with `Ric0(X,Y) = c g(omega+(X), omega-(Y))`, when CSC.
    pub c: Option<ExactScalar>,
    /// The Einstein–Maxwell residual `Ric0 - c T` vanishes.
    pub em_residual_zero: bool,
    /// `rho = (A+B)/(2p)` is a multiple of `q`.
    pub einstein_flag: bool,
    /// `Ric0 = 0` exactly.
    pub einstein_oracle: bool,
    pub scalar: RationalFunction,
    pub witness: String,
}

/// `T_ab = omega+_ac g^cd omega-_bd`, that is `g(omega+(X), omega-(Y))`.
pub fn em_tensor(g: &Metric, wp: &ChartTensor, wm: &ChartTensor) -> ChartTensor {
    let n = g.dim();
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::None, |i| {
        let mut acc = RationalFunction::zero();
        for c in 0..n {
            let x = wp.get(&[i[0], c]);
            if x.is_zero() {
                continue;
            }
            for d in 0..n {
                let (gi, y) = (g.inv(c, d), wm.get(&[i[1], d]));
                if !gi.is_zero() && !y.is_zero() {
                    acc = &acc + &(&(x * gi) * y);
                }
            }
        }
        acc
    })
}

pub fn csc_em_check(model: &AmbitoricModel, p: &QuadraticForm) -> Result<CscReport> {
    let spec = &model.spec;
    orthogonal_p(spec, p)?;
    let conditions = match spec.form_type {
        FormType::General => None,
        _ => csc_table_conditions(&spec.clone().with_p(p.clone())?).ok(),
    };
    let diag = diagonal_ricci_metric(model, p)?;
    let holds = diag.scalar.is_constant();
    if let Some(c) = &conditions {
        if c.iter().all(Condition::holds) != holds {
            let w = failed(c).unwrap_or_else(|| "all coefficient conditions hold".into());
            return Err(Error::Inconsistency(format!(
                "coefficient conditions ({w}) disagree with d s = 0 ({holds})"
            )));
        }
    }
    let quarter = diag.scalar.scale(&ratio(1, 4));
    let ric0 = ChartTensor::from_fn(diag.metric.chart(), 0, 2, Symmetry::Symmetric, |i| {
        diag.ricci.get(i) - &(&quarter * diag.metric.g(i[0], i[1]))
    });
    let einstein_oracle = ric0.is_zero();
    let rho = spec
        .a
        .add(&spec.b)
        .div_exact(&p.to_binary_form().scale(&scalar(2)))
        .and_then(|r| QuadraticForm::from_binary_form(&r).ok());
    let einstein_flag = rho.as_ref().is_some_and(|r| r.is_parallel(&spec.q));
    let (mut c, mut em_residual_zero) = (None, false);
    let witness;
    if holds {
        let t = em_tensor(&diag.metric, &model.omega_plus, &model.omega_minus);
        c = match t.first_nonzero() {
            None => ric0.is_zero().then(ExactScalar::zero),
            Some((idx, tv)) => (ric0.get(&idx) / tv).constant_value(),
        };
        if let Some(cv) = &c {
            let res = ric0.sub(&t.map(|x| x.scale(cv)))?;
            em_residual_zero = res.is_zero();
        }
        witness = if em_residual_zero { "zero".into() } else { "Ric0 is not a constant multiple of g(omega+, omega-)".into() };
    } else {
        witness = conditions
            .as_ref()
            .and_then(|c| failed(c))
            .unwrap_or_else(|| format!("d s = {}", d_digest(&diag)));
    }
    Ok(CscReport {
        holds,
        conditions,
        c,
        em_residual_zero,
        einstein_flag,
        einstein_oracle,
        scalar: diag.scalar,
        witness,
    })
}

fn d_digest(diag: &DiagonalRicci) -> String {
    let chart = diag.metric.chart();
    let ds = crate::tensor::d0(chart, &diag.scalar);
    ds.digest()
}

/// `I = J+ J-`.
pub fn product_structure(model: &AmbitoricModel) -> ChartTensor {
    compose(&model.j_plus, &model.j_minus)
}

/// Killing tensor `S = g0(I., .)` of the barycentric metric, with its residual.
pub fn killing_tensor_barycentric(model: &AmbitoricModel) -> Result<(ChartTensor, ChartTensor)> {
    let s = symmetric(lower_endomorphism(&model.g0, &product_structure(model)))?;
    let r = killing_tensor_residual(&model.g0, &s)?;
    Ok((s, r))
}

fn symmetric(t: ChartTensor) -> Result<ChartTensor> {
    ChartTensor::from_components(t.chart(), 0, 2, Symmetry::Symmetric, t.components().to_vec())
}

/// Killing tensor `S = (F+G) g + h g(I., .)` of `g = h g0`, `h = F(x) - G(y)`.
/// Returns `(g, S, residual)`.
pub fn killing_tensor_from_fg(
    model: &AmbitoricModel,
    f: &BinaryForm,
    g: &BinaryForm,
) -> Result<(Metric, ChartTensor, ChartTensor)> {
    let (fx, gy) = (f.eval_in(X), g.eval_in(Y));
    let h = &fx - &gy;
    if h.is_zero() {
        return Err(Error::DegenerateInput("h = F(x) - G(y) vanishes; use the barycentric tensor".into()));
    }
    let metric = model.g0.conformal(&h)?;
    let i = lower_endomorphism(&metric, &product_structure(model));
    let sum = &fx + &gy;
    let s = symmetric(metric.tensor().scale(&sum).add(&i.scale(&h))?)?;
    let r = killing_tensor_residual(&metric, &s)?;
    Ok((metric, s, r))
}

/// The 2-form `phi = psi - (tr_omega psi) omega` with `psi = S(J., .)`, for a
/// `J`-invariant Killing tensor `S` of a Kähler metric `g`. Returns `phi` with
/// its hamiltonian residual.
pub fn hamiltonian_form(g: &Metric, j: &ChartTensor, s: &ChartTensor) -> Result<(ChartTensor, ChartTensor)> {
    let n = g.dim();
    let psi = ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::None, |i| {
        (0..n)
            .filter(|&c| !j.get(&[c, i[0]]).is_zero())
            .map(|c| j.get(&[c, i[0]]) * s.get(&[c, i[1]]))
            .sum()
    });
    let omega = crate::tensor::kahler_form(g, j)?;
    let tr = crate::tensor::omega_trace(g, &omega, &psi);
    let phi = psi.sub(&omega.scale(&tr))?;
    let phi = ChartTensor::from_components(g.chart(), 0, 2, Symmetry::Antisymmetric, phi.components().to_vec())
        .map_err(|_| Error::Precondition("S(J., .) is not a 2-form".into()))?;
    let r = crate::tensor::hamiltonian_form_residual(g, j, &phi)?;
    Ok((phi, r))
}

/// Whether the metric `(q/p)^2 g+` admits the Killing tensor of the family above:
/// decided by `Q(p) = 0` and cross-checked against `h_xy = 0` for
/// `h = (x-y) q(x,y) / p(x,y)^2`.
pub fn diagonal_ricci_killing_existence(spec: &AmbitoricSpec, p: &QuadraticForm) -> Result<bool> {
    orthogonal_p(spec, p)?;
    let verdict = p.discriminant().is_zero();
    let h = &(&AmbitoricSpec::x_minus_y() * &spec.q_xy()) / &p.polarize_in(X, Y).pow(2);
    let hxy = h.derivative(X).derivative(Y);
    if hxy.is_zero() != verdict {
        return Err(Error::Inconsistency(format!("Q(p) = {} but h_xy zero is {}", p.discriminant(), hxy.is_zero())));
    }
    Ok(verdict)
}

/// Kähler checks for one structure: `J^2 = -1`, `J` orthogonal, `d omega = 0`, `nabla J = 0`.
pub fn kahler_suite(g: &Metric, j: &ChartTensor, omega: &ChartTensor) -> Vec<(&'static str, ChartTensor)> {
    let sq = square_residual(j);
    let inv = invariance_residual(g.tensor(), j);
    let dw = d2(omega);
    let nj = nabla_j(g, j);
    vec![("J^2 + 1", sq), ("g(J., J.) - g", inv), ("d omega", dw), ("nabla J", nj)]
}

/// Coefficient flags for a Calabi-type metric with profile `V` over curvature `k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CalabiFlags {
    pub extremal: bool,
    pub bach_flat: bool,
    pub csc: bool,
    pub kahler_einstein: bool,
}

pub fn calabi_flags(v: &BinaryForm, k: &ExactScalar) -> CalabiFlags {
    let c = v.with_bound(4).map(|v| v.descending()).unwrap_or_default();
    if c.len() != 5 {
        return CalabiFlags::default();
    }
    let extremal = &c[2] == k;
    let bach_flat = extremal && (scalar(4) * &c[0] * &c[4] - &c[1] * &c[3]).is_zero();
    let csc = extremal && c[0].is_zero();
    let kahler_einstein = csc && c[3].is_zero();
    CalabiFlags { extremal, bach_flat, csc, kahler_einstein }
}

/// Scalar curvature of the Kähler metric `g+` of the Calabi family,
/// `2 (k - a2) / z - 6 a1 - 12 a0 z`.
pub fn calabi_scalar_closed(v: &BinaryForm, k: &ExactScalar) -> Result<RationalFunction> {
    let c = v.with_bound(4)?.descending();
    let z = RationalFunction::var(crate::builder::CZ);
    let first = z.inv()?.scale(&(scalar(2) * (k - &c[2])));
    let rest = &RationalFunction::from_scalar(&(scalar(-6) * &c[1])) - &z.scale(&(scalar(12) * &c[0]));
    Ok(&first + &rest)
}

/// The same flags computed from curvature on the Calabi chart.
pub fn calabi_oracle(model: &CalabiModel) -> Result<CalabiFlags> {
    let (s, kres) = extremal_oracle(&model.gplus, &model.j_plus)?;
    let extremal = kres.is_zero();
    let csc = s.is_constant();
    let curv = curvature(&model.gplus)?;
    let kahler_einstein = tracefree_ricci(&model.gplus, &curv).is_zero();
    let bach_flat = bach(&model.gplus)?.is_zero();
    Ok(CalabiFlags { extremal, bach_flat, csc, kahler_einstein })
}

#[derive(Clone, Debug)]
pub struct CalabiReport {
    pub flags: CalabiFlags,
    pub oracle: CalabiFlags,
    pub scalar: RationalFunction,
    /// Tracefree Ricci of `s^-2 g+` when Bach-flat with `s ≢ 0`.
    pub einstein_residual: Option<ChartTensor>,
}

pub fn calabi_classify(v: &BinaryForm, k: &ExactScalar) -> Result<CalabiReport> {
    let model = build_calabi(v, k)?;
    let flags = calabi_flags(v, k);
    let oracle = calabi_oracle(&model)?;
    let scalar = curvature(&model.gplus)?.scalar;
    if scalar != calabi_scalar_closed(v, k)? {
        return Err(Error::Inconsistency(format!("Calabi scalar curvature {scalar} differs from its closed form")));
    }
    let einstein_residual = if flags.bach_flat && !scalar.is_zero() {
        Some(einstein_metric(&model.gplus, &scalar)?.1)
    } else {
        None
    };
    Ok(CalabiReport { flags, oracle, scalar, einstein_residual })
}

/// Every applicable criterion for a spec.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub spec: AmbitoricSpec,
    pub verdicts: Vec<Verdict>,
    pub pi: Option<QuadraticForm>,
    pub p_part: Option<BinaryForm>,
    pub s_plus: RationalFunction,
    pub s_minus: RationalFunction,
    pub em_constant: Option<ExactScalar>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn verdict(&self, criterion: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.criterion == criterion)
    }
}

pub fn classify(spec: &AmbitoricSpec) -> Result<ClassificationReport> {
    let t = Instant::now();
    let model = build(spec)?;
    let mut verdicts = vec![Verdict::new("build", true, "zero", t)];
    let mut notes = Vec::new();

    for plus in [true, false] {
        let t = Instant::now();
        let (g, j, w) = (model.metric(plus), model.complex_structure(plus), model.kahler_form(plus));
        check_hermitian(g, j)?;
        let bad = kahler_suite(g, j, w).into_iter().find(|(_, r)| !r.is_zero());
        let name = if plus { "kahler+" } else { "kahler-" };
        verdicts.push(match bad {
            None => Verdict::new(name, true, "zero", t),
            Some((what, r)) => Verdict::new(name, false, format!("{what}: {}", r.digest()), t),
        });
    }

    let t = Instant::now();
    let (s_plus, s_minus) = scalar_curvature_closed(spec)?;
    let (op, om) = scalar_curvature_oracle(&model)?;
    let agree = op == s_plus && om == s_minus;
    verdicts.push(Verdict::new(
        "scalar-curvature",
        agree,
        if agree { "zero".to_string() } else { format!("oracle s+ = {op}, s- = {om}") },
        t,
    ));
    if spec.form_type == FormType::Hyperbolic {
        notes.push("hyperbolic s+ and s- come from direct expansion; the usual closed display places the signs differently".into());
    }

    let t = Instant::now();
    let ext = extremal_check(&model)?;
    let consistent = ext.holds == ext.oracle_plus && ext.holds == ext.oracle_minus;
    if !consistent {
        return Err(Error::Inconsistency(format!(
            "extremality: criterion {} but oracle g+ {} / g- {}",
            ext.holds, ext.oracle_plus, ext.oracle_minus
        )));
    }
    verdicts.push(Verdict::new("extremal", ext.holds, ext.witness.clone(), t));

    if ext.holds {
        let t = Instant::now();
        let b = bach_flat_check(&model, &ext)?;
        if b.oracle != b.holds {
            return Err(Error::Inconsistency(format!("Bach-flat criterion {} but oracle {}", b.holds, b.oracle)));
        }
        verdicts.push(Verdict::new("bachflat", b.holds, b.witness.clone(), t));
        if b.holds {
            let t = Instant::now();
            match einstein_conformal(&model, &b)? {
                EinsteinReport::ConformallyFlat => {
                    notes.push("s+ and s- both vanish: conformally flat".into());
                    verdicts.push(Verdict::new("einstein", true, "zero", t));
                }
                EinsteinReport::Metric { plus, ric0, .. } => {
                    notes.push(format!("Einstein metric s{}^-2 g{}", pm(plus), pm(plus)));
                    verdicts.push(Verdict::new("einstein", ric0.is_zero(), ric0.digest(), t));
                }
            }
            if !s_plus.is_zero() && !s_minus.is_zero() {
                let t = Instant::now();
                let r = bach_flat_volume_ratio(&model)?;
                verdicts.push(Verdict::new(
                    "bachflat-volume",
                    r.is_some(),
                    r.map(|c| format!("ratio {c}")).unwrap_or_else(|| "ratio not constant".into()),
                    t,
                ));
            }
        }
    }

    let mut em_constant = None;
    if let Some(p) = &spec.p {
        let t = Instant::now();
        let csc = csc_em_check(&model, p)?;
        verdicts.push(Verdict::new("csc", csc.holds, csc.witness.clone(), t));
        if csc.holds {
            em_constant = csc.c.clone();
            let c = csc.c.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "none".into());
            verdicts.push(Verdict::new(
                "einstein-maxwell",
                csc.em_residual_zero,
                if csc.em_residual_zero { "zero".to_string() } else { format!("c = {c}") },
                t,
            ));
        }
        let t = Instant::now();
        let exists = diagonal_ricci_killing_existence(spec, p)?;
        verdicts.push(Verdict::new(
            "killing-tensor-diagonal",
            exists,
            if exists { "zero".to_string() } else { format!("Q(p) = {}", p.discriminant()) },
            t,
        ));
    }

    let t = Instant::now();
    let (_, r) = killing_tensor_barycentric(&model)?;
    verdicts.push(Verdict::new("killing-tensor-barycentric", r.is_zero(), r.digest(), t));

    let (pi, p_part) = (ext.pi.clone(), ext.p_part.clone());
    Ok(ClassificationReport { spec: spec.clone(), verdicts, pi, p_part, s_plus, s_minus, em_constant, notes })
}

fn pm(plus: bool) -> &'static str {
    if plus { "+" } else { "-" }
}
