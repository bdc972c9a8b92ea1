use rayon::prelude::*;

use super::curvature::{curvature, Connection, CurvatureBundle};
use super::metric::Metric;
use super::tensor::{ChartTensor, Symmetry};
use super::weyl::{weyl_split_from, weyl_tensor};
use crate::algebra::{ratio, RationalFunction};
use crate::error::{Error, Result};

/// Tracefree Ricci tensor `Ric - s/n g`.
pub fn tracefree_ricci(g: &Metric, curv: &CurvatureBundle) -> ChartTensor {
    let sn = curv.scalar.scale(&ratio(1, g.dim() as i64));
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::Symmetric, |i| {
        curv.ricci.get(i) - &(&sn * g.g(i[0], i[1]))
    })
}

/// `Gt[d][m][a] = g^de Gamma^m_ea` and its trace `Gc[m] = g^de Gamma^m_ed`.
struct RaisedConnection {
    n: usize,
    gt: Vec<RationalFunction>,
    gc: Vec<RationalFunction>,
}

impl RaisedConnection {
    fn new(g: &Metric, conn: &Connection) -> Self {
        let n = g.dim();
        let gt: Vec<RationalFunction> = (0..n * n * n)
            .into_par_iter()
            .map(|k| {
                let (d, m, a) = (k / (n * n), (k / n) % n, k % n);
                (0..n)
                    .filter(|&e| !g.inv(d, e).is_zero() && !conn.get(m, e, a).is_zero())
                    .map(|e| g.inv(d, e) * conn.get(m, e, a))
                    .sum()
            })
            .collect();
        let gc = (0..n).map(|m| (0..n).map(|d| gt[(d * n + m) * n + d].clone()).sum()).collect();
        RaisedConnection { n, gt, gc }
    }

    #[inline]
    fn t(&self, d: usize, m: usize, a: usize) -> &RationalFunction {
        &self.gt[(d * self.n + m) * self.n + a]
    }
}

fn acc_mul(acc: &mut RationalFunction, x: &RationalFunction, y: &RationalFunction) {
    if !x.is_zero() && !y.is_zero() {
        *acc = &*acc + &(x * y);
    }
}

/// `delta delta W` as `(nabla^c nabla^d W_acbd)`, computed without forming the
/// full covariant derivative.
fn double_divergence(g: &Metric, rc: &RaisedConnection, w: &ChartTensor) -> ChartTensor {
    let n = g.dim();
    let chart = g.chart();
    // D_acb = nabla^d W_acbd
    let dw: Vec<RationalFunction> = (0..n * n * n)
        .into_par_iter()
        .map(|k| {
            let (a, c, b) = (k / (n * n), (k / n) % n, k % n);
            if a == c {
                return RationalFunction::zero();
            }
            let mut acc = RationalFunction::zero();
            for d in 0..n {
                for e in 0..n {
                    let gi = g.inv(d, e);
                    if gi.is_zero() || !chart.is_active(e) {
                        continue;
                    }
                    let wv = w.get(&[a, c, b, d]);
                    if wv.is_zero() {
                        continue;
                    }
                    acc_mul(&mut acc, gi, &chart.d(wv, e));
                }
            }
            let mut corr = RationalFunction::zero();
            for d in 0..n {
                for m in 0..n {
                    acc_mul(&mut corr, rc.t(d, m, a), w.get(&[m, c, b, d]));
                    acc_mul(&mut corr, rc.t(d, m, c), w.get(&[a, m, b, d]));
                    acc_mul(&mut corr, rc.t(d, m, b), w.get(&[a, c, m, d]));
                }
            }
            for m in 0..n {
                acc_mul(&mut corr, &rc.gc[m], w.get(&[a, c, b, m]));
            }
            &acc - &corr
        })
        .collect();
    let dw_at = |a: usize, c: usize, b: usize| &dw[(a * n + c) * n + b];
    // (delta delta W)_ab = nabla^c D_acb
    let ddw: Vec<RationalFunction> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / n, k % n);
            if a > b {
                return RationalFunction::zero();
            }
            let mut acc = RationalFunction::zero();
            for c in 0..n {
                for e in 0..n {
                    let gi = g.inv(c, e);
                    if gi.is_zero() || !chart.is_active(e) || dw_at(a, c, b).is_zero() {
                        continue;
                    }
                    acc_mul(&mut acc, gi, &chart.d(dw_at(a, c, b), e));
                }
            }
            let mut corr = RationalFunction::zero();
            for c in 0..n {
                for m in 0..n {
                    acc_mul(&mut corr, rc.t(c, m, a), dw_at(m, c, b));
                    acc_mul(&mut corr, rc.t(c, m, b), dw_at(a, c, m));
                }
            }
            for m in 0..n {
                acc_mul(&mut corr, &rc.gc[m], dw_at(a, m, b));
            }
            &acc - &corr
        })
        .collect();
    ChartTensor::from_fn(chart, 0, 2, Symmetry::None, |i| {
        let (a, b) = if i[0] <= i[1] { (i[0], i[1]) } else { (i[1], i[0]) };
        ddw[a * n + b].clone()
    })
}

/// `(W * b)_ac = W_abce b^eb`, the action of a Weyl-type tensor on a symmetric form.
pub fn weyl_action(g: &Metric, w: &ChartTensor, b: &ChartTensor) -> ChartTensor {
    let n = g.dim();
    let raised: Vec<RationalFunction> = (0..n * n)
        .map(|k| {
            let (e, f) = (k / n, k % n);
            let mut acc = RationalFunction::zero();
            for x in 0..n {
                for y in 0..n {
                    if g.inv(e, x).is_zero() || g.inv(f, y).is_zero() {
                        continue;
                    }
                    acc_mul(&mut acc, &(g.inv(e, x) * g.inv(f, y)), b.get(&[x, y]));
                }
            }
            acc
        })
        .collect();
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::None, |i| {
        let (a, c) = (i[0], i[1]);
        let mut acc = RationalFunction::zero();
        for bb in 0..n {
            for e in 0..n {
                acc_mul(&mut acc, w.get(&[a, bb, c, e]), &raised[e * n + bb]);
            }
        }
        acc
    })
}

fn symmetric(t: ChartTensor) -> Result<ChartTensor> {
    ChartTensor::from_components(t.chart(), 0, 2, Symmetry::Symmetric, t.components().to_vec())
}

/// Bach tensor from `delta delta W + 1/2 W * Ric_0` only.
pub fn bach_single(g: &Metric) -> Result<ChartTensor> {
    if g.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: g.dim() });
    }
    let curv = curvature(g)?;
    let w = weyl_tensor(g, &curv)?;
    let rc = RaisedConnection::new(g, &curv.christoffel);
    let ric0 = tracefree_ricci(g, &curv);
    let ddw = double_divergence(g, &rc, &w);
    ddw.check_degree()?;
    let act = weyl_action(g, &w, &ric0);
    symmetric(ddw.add(&act.map(|c| c.scale(&ratio(1, 2))))?)
}

/// Bach tensor, evaluated as `delta delta W + 1/2 W * Ric_0` and as
/// `2 delta delta W^+- + W^+- * Ric_0`; all three expressions must agree.
pub fn bach(g: &Metric) -> Result<ChartTensor> {
    if g.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: g.dim() });
    }
    let curv = curvature(g)?;
    let split = weyl_split_from(g, &curv)?;
    let rc = RaisedConnection::new(g, &curv.christoffel);
    let ric0 = tracefree_ricci(g, &curv);
    let (ddp, ddm) = rayon::join(
        || double_divergence(g, &rc, &split.wplus),
        || double_divergence(g, &rc, &split.wminus),
    );
    ddp.check_degree()?;
    ddm.check_degree()?;
    let (actp, actm) = rayon::join(
        || weyl_action(g, &split.wplus, &ric0),
        || weyl_action(g, &split.wminus, &ric0),
    );
    let half = ratio(1, 2);
    let full = ddp
        .add(&ddm)?
        .add(&actp.add(&actm)?.map(|c| c.scale(&half)))?;
    let from_plus = ddp.map(|c| c.scale_i64(2)).add(&actp)?;
    let from_minus = ddm.map(|c| c.scale_i64(2)).add(&actm)?;
    if full != from_plus || full != from_minus {
        return Err(Error::Inconsistency(
            "the two expressions for the Bach tensor disagree".into(),
        ));
    }
    symmetric(full)
}
