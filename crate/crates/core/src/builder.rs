//! Explicit ambitoric Kähler structures in the `(x, y, t1, t2)` chart, the
//! Calabi-type metrics in the `(z, t, u, v)` chart and the
//! Plebański–Demiański coefficient family.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{ratio, scalar, ExactScalar, Polynomial, RationalFunction, Var};
use crate::binary_forms::{BinaryForm, QuadraticForm};
use crate::error::{Error, Result};
use crate::tensor::{
    complex_structure_from, d1, d2, j_on_one_form, Chart, ChartTensor, Metric, Symmetry,
};

pub const X: Var = Var(0);
pub const Y: Var = Var(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormType {
    Parabolic,
    Hyperbolic,
    Elliptic,
    General,
}

impl FormType {
    pub const NAMED: [FormType; 3] = [FormType::Parabolic, FormType::Hyperbolic, FormType::Elliptic];

    /// Canonical quadratic of a named type.
    pub fn canonical_q(self) -> Option<QuadraticForm> {
        match self {
            FormType::Parabolic => Some(QuadraticForm::parabolic()),
            FormType::Hyperbolic => Some(QuadraticForm::hyperbolic()),
            FormType::Elliptic => Some(QuadraticForm::elliptic()),
            FormType::General => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormType::Parabolic => "parabolic",
            FormType::Hyperbolic => "hyperbolic",
            FormType::Elliptic => "elliptic",
            FormType::General => "general",
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parabolic" => Ok(FormType::Parabolic),
            "hyperbolic" => Ok(FormType::Hyperbolic),
            "elliptic" => Ok(FormType::Elliptic),
            "general" => Ok(FormType::General),
            other => Err(Error::Malformed(format!("unknown type `{other}`"))),
        }
    }
}

/// Input data `(q, A, B)` with an optional quadratic `p` orthogonal to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbitoricSpec {
    pub form_type: FormType,
    pub q: QuadraticForm,
    pub a: BinaryForm,
    pub b: BinaryForm,
    pub p: Option<QuadraticForm>,
}

impl AmbitoricSpec {
    /// A spec of a named type, carrying its canonical `q`.
    pub fn named(form_type: FormType, a: BinaryForm, b: BinaryForm) -> Result<Self> {
        let q = form_type
            .canonical_q()
            .ok_or_else(|| Error::Precondition("the general type needs an explicit q".into()))?;
        Ok(AmbitoricSpec { form_type, q, a: a.with_bound(4)?, b: b.with_bound(4)?, p: None })
    }

    /// Shorthand for integer quartics given by descending coefficients.
    pub fn from_ints(form_type: FormType, a: [i64; 5], b: [i64; 5]) -> Self {
        Self::named(form_type, BinaryForm::quartic_ints(a), BinaryForm::quartic_ints(b))
            .expect("named type")
    }

    pub fn general(q: QuadraticForm, a: BinaryForm, b: BinaryForm) -> Result<Self> {
        Ok(AmbitoricSpec { form_type: FormType::General, q, a: a.with_bound(4)?, b: b.with_bound(4)?, p: None })
    }

    pub fn with_p(mut self, p: QuadraticForm) -> Result<Self> {
        if !p.inner_product(&self.q).is_zero() {
            return Err(Error::NotOrthogonal(format!("<p, q> = {}", p.inner_product(&self.q))));
        }
        self.p = Some(p);
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() && self.b.is_zero() {
            return Err(Error::DegenerateInput("A and B are both zero".into()));
        }
        if self.a.is_zero() || self.b.is_zero() {
            return Err(Error::DegenerateInput(
                format!("{} is identically zero, so g0 is degenerate", if self.a.is_zero() { "A" } else { "B" }),
            ));
        }
        if self.q.is_zero() {
            return Err(Error::DegenerateInput("q is zero".into()));
        }
        if let Some(cq) = self.form_type.canonical_q() {
            if cq != self.q {
                return Err(Error::Malformed(format!("a {} spec must use its canonical q", self.form_type)));
            }
        }
        if self.a.degree_bound() > 4 || self.b.degree_bound() > 4 {
            return Err(Error::OutOfRange("A and B have degree at most 4".into()));
        }
        if let Some(p) = &self.p {
            if !p.inner_product(&self.q).is_zero() {
                return Err(Error::NotOrthogonal(format!("<p, q> = {}", p.inner_product(&self.q))));
            }
        }
        Ok(())
    }

    /// `A` as descending coefficients `a0 .. a4`.
    pub fn a_coeffs(&self) -> Vec<ExactScalar> {
        self.a.with_bound(4).expect("quartic").descending()
    }

    pub fn b_coeffs(&self) -> Vec<ExactScalar> {
        self.b.with_bound(4).expect("quartic").descending()
    }

    /// `q(x, y)`.
    pub fn q_xy(&self) -> RationalFunction {
        self.q.polarize_in(X, Y)
    }

    /// `x - y`.
    pub fn x_minus_y() -> RationalFunction {
        &RationalFunction::var(X) - &RationalFunction::var(Y)
    }

    /// Basis `e1, e2` of the solutions of `2 q1 tau1 = q0 tau2 + q2 tau0`,
    /// as quadratics `tau0 z^2 + 2 tau1 z + tau2`.
    pub fn torus_basis(&self) -> [QuadraticForm; 2] {
        torus_basis(&self.q)
    }

    /// The `t`-components of the vector field `K^(p)`, solving
    /// `K1 e1 + K2 e2 = p`.
    pub fn killing_components(&self, p: &QuadraticForm) -> Result<[ExactScalar; 2]> {
        if !p.inner_product(&self.q).is_zero() {
            return Err(Error::NotOrthogonal(format!("<p, q> = {}", p.inner_product(&self.q))));
        }
        let [e1, e2] = self.torus_basis();
        let (e1c, e2c, pc) = (e1.coeffs(), e2.coeffs(), p.coeffs());
        // choose a pair of rows with a nonzero 2x2 determinant
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = e1c[i] * e2c[j] - e1c[j] * e2c[i];
            if det.is_zero() {
                continue;
            }
            let k1 = (pc[i] * e2c[j] - pc[j] * e2c[i]) / &det;
            let k2 = (e1c[i] * pc[j] - e1c[j] * pc[i]) / &det;
            let check = e1.scale(&k1).add(&e2.scale(&k2));
            if &check != p {
                return Err(Error::Inconsistency("K^(p) does not reproduce p".into()));
            }
            return Ok([k1, k2]);
        }
        Err(Error::Inconsistency("torus basis is degenerate".into()))
    }

    /// The vector field `K^(p)` on the ambitoric chart.
    pub fn killing_field(&self, chart: &Arc<Chart>, p: &QuadraticForm) -> Result<ChartTensor> {
        let [k1, k2] = self.killing_components(p)?;
        ChartTensor::vector(
            chart,
            vec![
                RationalFunction::zero(),
                RationalFunction::zero(),
                RationalFunction::from_scalar(&k1),
                RationalFunction::from_scalar(&k2),
            ],
        )
    }

    /// The vector field `K^[w]`, that is `K^(p)` with `p = 1/2 {q, w}`.
    pub fn killing_field_w(&self, chart: &Arc<Chart>, w: &QuadraticForm) -> Result<ChartTensor> {
        self.killing_field(chart, &self.q.poisson_bracket(w).scale(&ratio(1, 2)))
    }
}

pub fn torus_basis(q: &QuadraticForm) -> [QuadraticForm; 2] {
    let zero = ExactScalar::zero();
    let one = scalar(1);
    if !q.q1.is_zero() {
        let two_q1 = &q.q1 * scalar(2);
        [
            QuadraticForm::new(zero.clone(), &q.q0 / &two_q1, one.clone()),
            QuadraticForm::new(one, &q.q2 / &two_q1, zero),
        ]
    } else if !q.q0.is_zero() {
        [
            QuadraticForm::new(zero.clone(), one.clone(), zero.clone()),
            QuadraticForm::new(one, zero, -(&q.q2 / &q.q0)),
        ]
    } else {
        [
            QuadraticForm::new(zero.clone(), zero.clone(), one),
            QuadraticForm::new(zero.clone(), ratio(1, 2), zero),
        ]
    }
}

/// The assembled Kähler pair, barycentric metric and conformal factor.
#[derive(Clone, Debug)]
pub struct AmbitoricModel {
    pub spec: AmbitoricSpec,
    pub chart: Arc<Chart>,
    pub g0: Metric,
    pub gplus: Metric,
    pub gminus: Metric,
    pub omega_plus: ChartTensor,
    pub omega_minus: ChartTensor,
    pub j_plus: ChartTensor,
    pub j_minus: ChartTensor,
    /// `f = q(x,y) / (x - y)`, with `g0 = f g+` and `g- = f^2 g+`.
    pub f: RationalFunction,
    /// `A(x)` and `B(y)`.
    pub a_x: RationalFunction,
    pub b_y: RationalFunction,
    /// `Theta_x = sum e_i(y) dt_i` and `Theta_y = sum e_i(x) dt_i`.
    pub theta_x: Vec<RationalFunction>,
    pub theta_y: Vec<RationalFunction>,
}

pub fn pfaffian(w: &ChartTensor) -> RationalFunction {
    let c = |a: usize, b: usize| w.get(&[a, b]);
    &(&(c(0, 1) * c(2, 3)) - &(c(0, 2) * c(1, 3))) + &(c(0, 3) * c(1, 2))
}

fn unit(i: usize) -> Vec<RationalFunction> {
    (0..4).map(|k| if k == i { RationalFunction::one() } else { RationalFunction::zero() }).collect()
}

/// Build `g0`, `g+-`, `omega+-` and `J+-` for a spec.
pub fn build(spec: &AmbitoricSpec) -> Result<AmbitoricModel> {
    spec.validate()?;
    let chart = Chart::ambitoric();
    let a_x = spec.a.eval_in(X);
    let b_y = spec.b.eval_in(Y);
    let q_xy = spec.q_xy();
    let xmy = AmbitoricSpec::x_minus_y();
    let dd = &xmy * &q_xy;
    let [e1, e2] = spec.torus_basis();
    let zero = RationalFunction::zero;
    let theta_x = vec![zero(), zero(), e1.eval_in(Y), e2.eval_in(Y)];
    let theta_y = vec![zero(), zero(), e1.eval_in(X), e2.eval_in(X)];
    let (dx, dy) = (unit(0), unit(1));
    let dd2_inv = dd.pow(2).inv()?;
    let g0 = ChartTensor::sum_of_squares(
        &chart,
        &[
            (a_x.inv()?, dx.clone()),
            (b_y.inv()?, dy.clone()),
            (&a_x * &dd2_inv, theta_x.clone()),
            (&b_y * &dd2_inv, theta_y.clone()),
        ],
    );
    let neg_theta_y: Vec<RationalFunction> = theta_y.iter().map(|c| -c).collect();
    let omega_plus = ChartTensor::wedge_sum(&chart, &[(&dx, &theta_x), (&dy, &theta_y)])
        .scale(&q_xy.pow(2).inv()?);
    let omega_minus = ChartTensor::wedge_sum(&chart, &[(&dx, &theta_x), (&dy, &neg_theta_y)])
        .scale(&xmy.pow(2).inv()?);
    let f = &q_xy * &xmy.inv()?;
    let g0_plain = Metric::new(g0).map_err(|e| match e {
        Error::DegenerateMetric => Error::DegenerateInput("g0 is degenerate".into()),
        other => other,
    })?;
    let gplus = g0_plain.conformal(&f.inv()?)?.with_density(pfaffian(&omega_plus))?;
    let g0 = gplus.conformal(&f)?;
    let gminus = gplus.conformal(&f.pow(2))?;
    let j_plus = complex_structure_from(&gplus, &omega_plus)?;
    let j_minus = complex_structure_from(&gminus, &omega_minus)?;
    let model = AmbitoricModel {
        spec: spec.clone(),
        chart,
        g0,
        gplus,
        gminus,
        omega_plus,
        omega_minus,
        j_plus,
        j_minus,
        f,
        a_x,
        b_y,
        theta_x,
        theta_y,
    };
    model.verify_structure()?;
    Ok(model)
}

impl AmbitoricModel {
    /// Assert `J^2 = -1` and `d omega = 0` for both structures.
    fn verify_structure(&self) -> Result<()> {
        for (name, j, w) in [("J+", &self.j_plus, &self.omega_plus), ("J-", &self.j_minus, &self.omega_minus)] {
            if !crate::tensor::square_residual(j).is_zero() {
                return Err(Error::Inconsistency(format!("{name} does not square to -1")));
            }
            if !d2(w).is_zero() {
                return Err(Error::Inconsistency(format!("the form of {name} is not closed")));
            }
        }
        Ok(())
    }

    /// The 1-forms `d^c x`, `d^c y` of one structure as displayed for the
    /// construction: `d^c+- x = A/D Theta_x`, `d^c+- y = +-B/D Theta_y`.
    pub fn dc_display(&self, plus: bool) -> Result<(ChartTensor, ChartTensor)> {
        let dd = &AmbitoricSpec::x_minus_y() * &self.spec.q_xy();
        let ax = &self.a_x * &dd.inv()?;
        let mut by = &self.b_y * &dd.inv()?;
        if !plus {
            by = -by;
        }
        let dcx = self.theta_x.iter().map(|c| c * &ax).collect();
        let dcy = self.theta_y.iter().map(|c| c * &by).collect();
        Ok((ChartTensor::one_form(&self.chart, dcx)?, ChartTensor::one_form(&self.chart, dcy)?))
    }

    /// `J dx` and `J dy` with `(J alpha)(X) = -alpha(JX)`.
    pub fn j_dxdy(&self, plus: bool) -> (ChartTensor, ChartTensor) {
        let j = if plus { &self.j_plus } else { &self.j_minus };
        let dx = ChartTensor::one_form(&self.chart, unit(0)).expect("shape");
        let dy = ChartTensor::one_form(&self.chart, unit(1)).expect("shape");
        (j_on_one_form(j, &dx), j_on_one_form(j, &dy))
    }

    pub fn metric(&self, plus: bool) -> &Metric {
        if plus { &self.gplus } else { &self.gminus }
    }

    pub fn complex_structure(&self, plus: bool) -> &ChartTensor {
        if plus { &self.j_plus } else { &self.j_minus }
    }

    pub fn kahler_form(&self, plus: bool) -> &ChartTensor {
        if plus { &self.omega_plus } else { &self.omega_minus }
    }

    /// Interior product `iota_K omega` for a vector field `K`.
    pub fn interior(&self, k: &ChartTensor, plus: bool) -> ChartTensor {
        let w = self.kahler_form(plus);
        ChartTensor::from_fn(&self.chart, 0, 1, Symmetry::None, |i| {
            (0..4)
                .filter(|&a| !k.get(&[a]).is_zero())
                .map(|a| k.get(&[a]) * w.get(&[a, i[0]]))
                .sum()
        })
    }
}

/// Which momentum map to compute.
#[derive(Clone, Debug)]
pub enum Momentum {
    /// `mu+_w = -w(x,y)/q(x,y)`, a Killing potential for `K^[w]`.
    Plus(QuadraticForm),
    /// `mu-_{p,c} = -(p(x,y) + c(x-y))/(x-y)`, a Killing potential for `K^(p)`.
    Minus(QuadraticForm, ExactScalar),
}

pub fn momentum(spec: &AmbitoricSpec, which: &Momentum) -> Result<RationalFunction> {
    match which {
        Momentum::Plus(w) => Ok(-(&w.polarize_in(X, Y) * &spec.q_xy().inv()?)),
        Momentum::Minus(p, c) => {
            if !p.inner_product(&spec.q).is_zero() {
                return Err(Error::NotOrthogonal(format!("<p, q> = {}", p.inner_product(&spec.q))));
            }
            let xmy = AmbitoricSpec::x_minus_y();
            let num = &p.polarize_in(X, Y) + &xmy.scale(c);
            Ok(-(&num * &xmy.inv()?))
        }
    }
}

/// `chi = sum e_j(x,y)/(x-y) dt_j`, a potential with `omega- = -d chi`.
pub fn symplectic_potential(spec: &AmbitoricSpec) -> Result<ChartTensor> {
    let chart = Chart::ambitoric();
    let xmy_inv = AmbitoricSpec::x_minus_y().inv()?;
    let [e1, e2] = spec.torus_basis();
    let chi = ChartTensor::one_form(
        &chart,
        vec![
            RationalFunction::zero(),
            RationalFunction::zero(),
            &e1.polarize_in(X, Y) * &xmy_inv,
            &e2.polarize_in(X, Y) * &xmy_inv,
        ],
    )?;
    let model_omega = {
        let [e1, e2] = spec.torus_basis();
        let zero = RationalFunction::zero;
        let tx = vec![zero(), zero(), e1.eval_in(Y), e2.eval_in(Y)];
        let ty: Vec<_> = vec![zero(), zero(), -e1.eval_in(X), -e2.eval_in(X)];
        ChartTensor::wedge_sum(&chart, &[(&unit(0), &tx), (&unit(1), &ty)])
            .scale(&AmbitoricSpec::x_minus_y().pow(2).inv()?)
    };
    if !d1(&chi).add(&model_omega)?.is_zero() {
        return Err(Error::Inconsistency("d chi differs from -omega-".into()));
    }
    Ok(chi)
}

/// Calabi-type Kähler pair over a surface of constant curvature `k`.
#[derive(Clone, Debug)]
pub struct CalabiModel {
    pub v: BinaryForm,
    pub k: ExactScalar,
    pub chart: Arc<Chart>,
    pub gplus: Metric,
    pub gminus: Metric,
    pub omega_plus: ChartTensor,
    pub omega_minus: ChartTensor,
    pub j_plus: ChartTensor,
    pub j_minus: ChartTensor,
    pub omega_sigma: ChartTensor,
    /// `alpha = 2 (u dv - v du) / (4 + k (u^2 + v^2))`, with `d alpha = omega_Sigma`.
    pub alpha: ChartTensor,
    /// Momentum `1/z` of `g-` and its profile `V(z)/z^4`.
    pub z_bar: RationalFunction,
    pub v_bar: RationalFunction,
}

pub const CZ: Var = Var(0);
pub const CU: Var = Var(1);
pub const CV: Var = Var(2);

pub fn build_calabi(v: &BinaryForm, k: &ExactScalar) -> Result<CalabiModel> {
    if v.is_zero() {
        return Err(Error::DegenerateInput("V is identically zero".into()));
    }
    let chart = Chart::calabi();
    let (z, u, w) = (RationalFunction::var(CZ), RationalFunction::var(CU), RationalFunction::var(CV));
    let r2 = &u.pow(2) + &w.pow(2);
    let conf = &RationalFunction::one() + &r2.scale(&(k / scalar(4)));
    let conf2_inv = conf.pow(2).inv()?;
    let zero = RationalFunction::zero;
    let (dz, dt, du, dv) = (unit(0), unit(1), unit(2), unit(3));
    let phi = RationalFunction::from_i64(2) * (&RationalFunction::from_i64(4) + &r2.scale(k)).inv()?;
    let alpha_c = vec![zero(), zero(), -(&w * &phi), &u * &phi];
    let alpha = ChartTensor::one_form(&chart, alpha_c.clone())?;
    let omega_sigma = ChartTensor::wedge_sum(&chart, &[(&du, &dv)]).scale(&conf2_inv);
    if d1(&alpha) != omega_sigma {
        return Err(Error::Inconsistency("d alpha differs from the area form".into()));
    }
    let vz = v.eval_in(CZ);
    let theta: Vec<RationalFunction> = dt.iter().zip(&alpha_c).map(|(a, b)| a + b).collect();
    let zv = &z * &vz.inv()?;
    let vz_z = &vz * &z.inv()?;
    let gplus = ChartTensor::sum_of_squares(
        &chart,
        &[
            (&z * &conf2_inv, du.clone()),
            (&z * &conf2_inv, dv.clone()),
            (zv, dz.clone()),
            (vz_z, theta.clone()),
        ],
    );
    let omega_plus = omega_sigma.scale(&z).add(&ChartTensor::wedge_sum(&chart, &[(&dz, &theta)]))?;
    let omega_minus = omega_sigma
        .scale(&z.inv()?)
        .sub(&ChartTensor::wedge_sum(&chart, &[(&dz, &theta)]).scale(&z.pow(2).inv()?))?;
    let gplus = Metric::new(gplus)
        .map_err(|_| Error::DegenerateInput("Calabi metric is degenerate".into()))?
        .with_density(pfaffian(&omega_plus))?;
    let gminus = gplus.conformal(&z.pow(2).inv()?)?;
    let j_plus = complex_structure_from(&gplus, &omega_plus)?;
    let j_minus = complex_structure_from(&gminus, &omega_minus)?;
    for (j, w) in [(&j_plus, &omega_plus), (&j_minus, &omega_minus)] {
        if !crate::tensor::square_residual(j).is_zero() || !d2(w).is_zero() {
            return Err(Error::Inconsistency("Calabi structure fails J^2 = -1 or d omega = 0".into()));
        }
    }
    let z_bar = z.inv()?;
    let v_bar = &vz * &z.pow(4).inv()?;
    Ok(CalabiModel {
        v: v.clone(),
        k: k.clone(),
        chart,
        gplus,
        gminus,
        omega_plus,
        omega_minus,
        j_plus,
        j_minus,
        omega_sigma,
        alpha,
        z_bar,
        v_bar,
    })
}

/// Parameters `(h, kappa, sigma, delta, gamma, epsilon, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdParams {
    pub h: ExactScalar,
    pub kappa: ExactScalar,
    pub sigma: ExactScalar,
    pub delta: ExactScalar,
    pub gamma: ExactScalar,
    pub epsilon: ExactScalar,
    pub lambda: ExactScalar,
}

impl PdParams {
    pub fn from_slice(v: &[ExactScalar]) -> Result<Self> {
        if v.len() != 7 {
            return Err(Error::Dimension { expected: 7, found: v.len() });
        }
        Ok(PdParams {
            h: v[0].clone(),
            kappa: v[1].clone(),
            sigma: v[2].clone(),
            delta: v[3].clone(),
            gamma: v[4].clone(),
            epsilon: v[5].clone(),
            lambda: v[6].clone(),
        })
    }

    pub fn from_ints(v: [i64; 7]) -> Self {
        Self::from_slice(&v.map(scalar)).expect("seven values")
    }
}

/// The hyperbolic spec with `p(z) = 1 + epsilon z^2` whose `A`, `B` are the
/// Plebański–Demiański quartics. Not validated: all-zero parameters give
/// `A = B = 0`, which `build` rejects.
pub fn build_pd(params: &PdParams) -> AmbitoricSpec {
    let PdParams { h, kappa, sigma, delta, gamma, epsilon, lambda } = params;
    let e2 = epsilon * epsilon;
    let a = BinaryForm::quartic([
        lambda - &e2 * h,
        epsilon * (sigma - delta),
        gamma.clone(),
        sigma + delta,
        h + kappa,
    ]);
    let b = BinaryForm::quartic([
        -(lambda + &e2 * h),
        epsilon * (sigma + delta),
        -gamma.clone(),
        sigma - delta,
        h - kappa,
    ]);
    AmbitoricSpec {
        form_type: FormType::Hyperbolic,
        q: QuadraticForm::hyperbolic(),
        a,
        b,
        p: Some(QuadraticForm::new(epsilon.clone(), ExactScalar::zero(), scalar(1))),
    }
}

/// The Plebański–Demiański coefficients as integer polynomials in the seven
/// parameters (variables 0..7 in the order of [`PdParams`]), descending.
pub fn pd_symbolic() -> ([Polynomial; 5], [Polynomial; 5]) {
    let v = |i: u8| Polynomial::var(Var(i));
    let (h, kappa, sigma, delta, gamma, eps, lambda) = (v(0), v(1), v(2), v(3), v(4), v(5), v(6));
    let e2h = &(&eps * &eps) * &h;
    let a = [
        &lambda - &e2h,
        &eps * &(&sigma - &delta),
        gamma.clone(),
        &sigma + &delta,
        &h + &kappa,
    ];
    let b = [
        -&(&lambda + &e2h),
        &eps * &(&sigma + &delta),
        -&gamma,
        &sigma - &delta,
        &h - &kappa,
    ];
    (a, b)
}
