use super::chart::Chart;
use super::curvature::{christoffel, covariant_derivative};
use super::metric::{d2, wedge12, Metric};
use super::tensor::{ChartTensor, Symmetry};
use crate::algebra::{ratio, RationalFunction};
use crate::error::{Error, Result};

use std::sync::Arc;

fn sum_products<I>(it: I) -> RationalFunction
where
    I: Iterator<Item = (RationalFunction, RationalFunction)>,
{
    let mut acc = RationalFunction::zero();
    for (x, y) in it {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(&x * &y);
        }
    }
    acc
}

/// The endomorphism `J^c_a = omega_ab g^bc` with `omega = g(J., .)`.
pub fn complex_structure_from(g: &Metric, omega: &ChartTensor) -> Result<ChartTensor> {
    if omega.valence() != (0, 2) {
        return Err(Error::Precondition("expected a 2-form".into()));
    }
    let n = g.dim();
    Ok(ChartTensor::from_fn(g.chart(), 1, 1, Symmetry::None, |i| {
        let (c, a) = (i[0], i[1]);
        sum_products((0..n).map(|b| (omega.get(&[a, b]).clone(), g.inv(b, c).clone())))
    }))
}

/// Composition of endomorphisms `(A B)^a_b = A^a_c B^c_b`.
pub fn compose(a: &ChartTensor, b: &ChartTensor) -> ChartTensor {
    let n = a.dim();
    ChartTensor::from_fn(a.chart(), 1, 1, Symmetry::None, |i| {
        sum_products((0..n).map(|c| (a.get(&[i[0], c]).clone(), b.get(&[c, i[1]]).clone())))
    })
}

pub fn identity(chart: &Arc<Chart>) -> ChartTensor {
    ChartTensor::from_fn(chart, 1, 1, Symmetry::None, |i| {
        if i[0] == i[1] {
            RationalFunction::one()
        } else {
            RationalFunction::zero()
        }
    })
}

/// `J^2 + Id`, zero for an almost complex structure.
pub fn square_residual(j: &ChartTensor) -> ChartTensor {
    compose(j, j).add(&identity(j.chart())).expect("same shape")
}

/// `T(J., J.) - T` for a (0,2)-tensor `T`.
pub fn invariance_residual(t: &ChartTensor, j: &ChartTensor) -> ChartTensor {
    let n = t.dim();
    ChartTensor::from_fn(t.chart(), 0, 2, Symmetry::None, |i| {
        let (a, b) = (i[0], i[1]);
        let mut acc = RationalFunction::zero();
        for c in 0..n {
            let jc = j.get(&[c, a]);
            if jc.is_zero() {
                continue;
            }
            for d in 0..n {
                let (jd, tv) = (j.get(&[d, b]), t.get(&[c, d]));
                if jd.is_zero() || tv.is_zero() {
                    continue;
                }
                acc = &acc + &(&(jc * jd) * tv);
            }
        }
        &acc - t.get(&[a, b])
    })
}

/// `g(E., .)` for an endomorphism `E`: components `g_cb E^c_a`.
pub fn lower_endomorphism(g: &Metric, e: &ChartTensor) -> ChartTensor {
    let n = g.dim();
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::None, |i| {
        sum_products((0..n).map(|c| (g.g(c, i[1]).clone(), e.get(&[c, i[0]]).clone())))
    })
}

/// The fundamental form `omega = g(J., .)`.
pub fn kahler_form(g: &Metric, j: &ChartTensor) -> Result<ChartTensor> {
    let w = lower_endomorphism(g, j);
    ChartTensor::from_components(g.chart(), 0, 2, Symmetry::Antisymmetric, w.components().to_vec())
        .map_err(|_| Error::NonHermitian("J is not compatible with g".into()))
}

/// Verify that `J` is an almost complex structure compatible with `g`.
pub fn check_hermitian(g: &Metric, j: &ChartTensor) -> Result<()> {
    if j.valence() != (1, 1) {
        return Err(Error::Precondition("J must be a (1,1)-tensor".into()));
    }
    if !square_residual(j).is_zero() || !invariance_residual(g.tensor(), j).is_zero() {
        return Err(Error::NonHermitian("J is not compatible with g".into()));
    }
    Ok(())
}

/// `J` acting on 1-forms: `(J alpha)(X) = -alpha(JX)`.
pub fn j_on_one_form(j: &ChartTensor, alpha: &ChartTensor) -> ChartTensor {
    let n = j.dim();
    ChartTensor::from_fn(j.chart(), 0, 1, Symmetry::None, |i| {
        -sum_products((0..n).map(|a| (alpha.get(&[a]).clone(), j.get(&[a, i[0]]).clone())))
    })
}

/// Codifferential of a 2-form: `(delta beta)_b = -nabla^a beta_ab`.
pub fn codifferential2(g: &Metric, beta: &ChartTensor) -> ChartTensor {
    let conn = christoffel(g);
    let nb = covariant_derivative(&conn, beta);
    let n = g.dim();
    ChartTensor::from_fn(g.chart(), 0, 1, Symmetry::None, |i| {
        let b = i[0];
        let mut acc = RationalFunction::zero();
        for a in 0..n {
            for e in 0..n {
                let (gi, v) = (g.inv(a, e), nb.get(&[e, a, b]));
                if !gi.is_zero() && !v.is_zero() {
                    acc = &acc + &(gi * v);
                }
            }
        }
        -acc
    })
}

/// Lee form `theta = -1/2 J delta omega` of a hermitian pair; satisfies
/// `d omega = -2 theta ^ omega`.
pub fn lee_form(g: &Metric, j: &ChartTensor) -> Result<ChartTensor> {
    check_hermitian(g, j)?;
    let omega = kahler_form(g, j)?;
    let dw = codifferential2(g, &omega);
    let theta = j_on_one_form(j, &dw).map(|c| c.scale(&ratio(-1, 2)));
    if g.dim() == 4 {
        let lhs = d2(&omega);
        let rhs = wedge12(&theta, &omega).map(|c| c.scale_i64(-2));
        if lhs != rhs {
            return Err(Error::Inconsistency("d omega differs from -2 theta ^ omega".into()));
        }
    }
    Ok(theta)
}

/// Nijenhuis tensor
/// `N^a_bc = J^d_b d_d J^a_c - J^d_c d_d J^a_b - J^a_d (d_b J^d_c - d_c J^d_b)`,
/// stored with index order `[a, b, c]`.
pub fn nijenhuis(j: &ChartTensor) -> ChartTensor {
    let chart = j.chart().clone();
    let n = chart.dim();
    // dj[d][a][c] = d_d J^a_c
    let dj: Vec<RationalFunction> = (0..n * n * n)
        .map(|k| chart.d(j.get(&[(k / n) % n, k % n]), k / (n * n)))
        .collect();
    let dj = |d: usize, a: usize, c: usize| dj[(d * n + a) * n + c].clone();
    ChartTensor::from_fn(&chart, 1, 2, Symmetry::None, |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        if b == c {
            return RationalFunction::zero();
        }
        let t1 = sum_products((0..n).map(|d| (j.get(&[d, b]).clone(), dj(d, a, c))));
        let t2 = sum_products((0..n).map(|d| (j.get(&[d, c]).clone(), dj(d, a, b))));
        let t3 = sum_products((0..n).map(|d| (j.get(&[a, d]).clone(), &dj(b, d, c) - &dj(c, d, b))));
        &(&t1 - &t2) - &t3
    })
}

/// `nabla J`, with `[a, e, b]` holding `nabla_e J^a_b`.
pub fn nabla_j(g: &Metric, j: &ChartTensor) -> ChartTensor {
    covariant_derivative(&christoffel(g), j)
}

/// Lie derivative `L_K g`; zero iff `K` is a Killing field.
pub fn killing_vector_residual(g: &Metric, k: &ChartTensor) -> Result<ChartTensor> {
    if k.valence() != (1, 0) {
        return Err(Error::Precondition("expected a vector field".into()));
    }
    let chart = g.chart().clone();
    let n = chart.dim();
    // dk[a][c] = d_a K^c
    let dk: Vec<RationalFunction> = (0..n * n).map(|m| chart.d(k.get(&[m % n]), m / n)).collect();
    Ok(ChartTensor::from_fn(&chart, 0, 2, Symmetry::Symmetric, |i| {
        let (a, b) = (i[0], i[1]);
        let t1 = sum_products((0..n).map(|c| (k.get(&[c]).clone(), chart.d(g.g(a, b), c))));
        let t2 = sum_products((0..n).map(|c| (g.g(c, b).clone(), dk[a * n + c].clone())));
        let t3 = sum_products((0..n).map(|c| (g.g(a, c).clone(), dk[b * n + c].clone())));
        &(&t1 + &t2) + &t3
    }))
}

/// Cyclic sum `nabla_a S_bc + nabla_b S_ca + nabla_c S_ab`; zero iff `S` is a
/// Killing tensor.
pub fn killing_tensor_residual(g: &Metric, s: &ChartTensor) -> Result<ChartTensor> {
    if s.valence() != (0, 2) {
        return Err(Error::Precondition("expected a symmetric (0,2)-tensor".into()));
    }
    let n = g.dim();
    for a in 0..n {
        for b in a + 1..n {
            if s.get(&[a, b]) != s.get(&[b, a]) {
                return Err(Error::Precondition("tensor is not symmetric".into()));
            }
        }
    }
    let ns = covariant_derivative(&christoffel(g), s);
    Ok(ChartTensor::from_fn(g.chart(), 0, 3, Symmetry::None, |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        &(ns.get(&[a, b, c]) + ns.get(&[b, c, a])) + ns.get(&[c, a, b])
    }))
}

/// Half the full contraction `1/2 phi_ab omega^ab`, the trace of a 2-form
/// against `omega` (so that `omega` itself has trace 2).
pub fn omega_trace(g: &Metric, omega: &ChartTensor, phi: &ChartTensor) -> RationalFunction {
    g.contract2(phi, omega).scale(&ratio(1, 2))
}

/// Residual of `nabla_X phi = 1/2 (d sigma ^ (JX)^flat - J d sigma ^ X^flat)`,
/// `sigma = tr_omega phi`, stored as `[e, b, c]` for `X = d_e`.
pub fn hamiltonian_form_residual(g: &Metric, j: &ChartTensor, phi: &ChartTensor) -> Result<ChartTensor> {
    check_hermitian(g, j)?;
    if phi.valence() != (0, 2) || !invariance_residual(phi, j).is_zero() {
        return Err(Error::Precondition("phi is not a J-invariant 2-form".into()));
    }
    let chart = g.chart().clone();
    let n = chart.dim();
    let omega = kahler_form(g, j)?;
    let sigma = omega_trace(g, &omega, phi);
    let dsigma: Vec<RationalFunction> = (0..n).map(|a| chart.d(&sigma, a)).collect();
    let dsigma_t = ChartTensor::one_form(&chart, dsigma.clone())?;
    let jdsigma = j_on_one_form(j, &dsigma_t);
    let nphi = covariant_derivative(&christoffel(g), phi);
    // (JX)^flat_c = g_ac J^a_e
    let jx_flat = |e: usize, c: usize| sum_products((0..n).map(|a| (g.g(a, c).clone(), j.get(&[a, e]).clone())));
    Ok(ChartTensor::from_fn(&chart, 0, 3, Symmetry::None, |i| {
        let (e, b, c) = (i[0], i[1], i[2]);
        if b == c {
            return nphi.get(&[e, b, c]).clone();
        }
        let w1 = &(&dsigma[b] * &jx_flat(e, c)) - &(&dsigma[c] * &jx_flat(e, b));
        let w2 = &(jdsigma.get(&[b]) * g.g(e, c)) - &(jdsigma.get(&[c]) * g.g(e, b));
        nphi.get(&[e, b, c]) - &(&w1 - &w2).scale(&ratio(1, 2))
    }))
}
