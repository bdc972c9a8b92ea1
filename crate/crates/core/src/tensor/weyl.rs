use rayon::prelude::*;

use super::curvature::{lower_riemann, CurvatureBundle};
use super::metric::Metric;
use super::tensor::{ChartTensor, Symmetry};
use crate::algebra::{ratio, RationalFunction};
use crate::error::{Error, Result};

/// Sign of the permutation `(a b c d)` of `(0 1 2 3)`, zero on repeats.
pub fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Schouten tensor `P = (Ric - s/6 g) / 2` in dimension four.
pub fn schouten(g: &Metric, curv: &CurvatureBundle) -> ChartTensor {
    let s6 = curv.scalar.scale(&ratio(1, 6));
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::Symmetric, |i| {
        (curv.ricci.get(i) - &(&s6 * g.g(i[0], i[1]))).scale(&ratio(1, 2))
    })
}

/// Weyl tensor `W_abcd = R_abcd - (P ~ g)_abcd` with all indices down.
pub fn weyl_tensor(g: &Metric, curv: &CurvatureBundle) -> Result<ChartTensor> {
    if g.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: g.dim() });
    }
    let r = lower_riemann(g, &curv.riemann);
    let p = schouten(g, curv);
    let n = 4;
    let w = ChartTensor::from_fn(g.chart(), 0, 4, Symmetry::None, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        if a == b || c == d {
            return RationalFunction::zero();
        }
        let pg = |x: usize, y: usize, u: usize, v: usize| -> RationalFunction {
            let (pp, gg) = (p.get(&[x, y]), g.g(u, v));
            if pp.is_zero() || gg.is_zero() {
                RationalFunction::zero()
            } else {
                pp * gg
            }
        };
        let kn = &(&(&pg(b, c, a, d) + &pg(a, d, b, c)) - &pg(a, c, b, d)) - &pg(b, d, a, c);
        &r[((a * n + b) * n + c) * n + d] - &kn
    });
    w.check_degree()?;
    Ok(w)
}

/// Raise the first two indices of a (0,4)-tensor: `T^{ef}_{cd}`.
fn raise_first_pair(g: &Metric, t: &ChartTensor) -> ChartTensor {
    let n = g.dim();
    ChartTensor::from_fn(g.chart(), 2, 2, Symmetry::None, |i| {
        let (e, f, c, d) = (i[0], i[1], i[2], i[3]);
        if e == f || c == d {
            return RationalFunction::zero();
        }
        let mut acc = RationalFunction::zero();
        for x in 0..n {
            let gx = g.inv(e, x);
            if gx.is_zero() {
                continue;
            }
            for y in 0..n {
                let gy = g.inv(f, y);
                let tv = t.get(&[x, y, c, d]);
                if gy.is_zero() || tv.is_zero() {
                    continue;
                }
                acc = &acc + &(&(gx * gy) * tv);
            }
        }
        acc
    })
}

/// Hodge star on 2-forms: `(*beta)_ab = 1/2 eps_abef beta^ef`.
pub fn hodge_star(g: &Metric, beta: &ChartTensor) -> Result<ChartTensor> {
    if g.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: g.dim() });
    }
    let vol = g.volume_density()?;
    let n = 4;
    let raised: Vec<RationalFunction> = (0..16)
        .map(|k| {
            let (e, f) = (k / n, k % n);
            let mut acc = RationalFunction::zero();
            for x in 0..n {
                for y in 0..n {
                    let b = beta.get(&[x, y]);
                    if b.is_zero() || g.inv(e, x).is_zero() || g.inv(f, y).is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(g.inv(e, x) * g.inv(f, y)) * b);
                }
            }
            acc
        })
        .collect();
    Ok(ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::Antisymmetric, |i| {
        let mut acc = RationalFunction::zero();
        for e in 0..n {
            for f in e + 1..n {
                let s = levi_civita([i[0], i[1], e, f]);
                if s != 0 {
                    acc = &acc + &raised[e * n + f].scale_i64(s);
                }
            }
        }
        &acc * &vol
    }))
}

/// Star on the first pair of a (0,4)-tensor.
pub fn star_first_pair(g: &Metric, t: &ChartTensor) -> Result<ChartTensor> {
    let vol = g.volume_density()?;
    let raised = raise_first_pair(g, t);
    Ok(ChartTensor::from_fn(g.chart(), 0, 4, Symmetry::None, |i| {
        let (a, b, c, d) = (i[0], i[1], i[2], i[3]);
        let mut acc = RationalFunction::zero();
        for e in 0..4 {
            for f in e + 1..4 {
                let s = levi_civita([a, b, e, f]);
                if s != 0 {
                    acc = &acc + &raised.get(&[e, f, c, d]).scale_i64(s);
                }
            }
        }
        &acc * &vol
    }))
}

/// The endomorphism of 2-forms `beta -> 1/2 W_ab^cd beta_cd` as a 6 x 6 matrix
/// over the basis `dx^a ^ dx^b`, `a < b`.
pub fn two_form_operator(g: &Metric, w: &ChartTensor) -> Vec<Vec<RationalFunction>> {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    // W_ab^cd = W_abij g^ic g^jd; the coefficient of beta_cd (c<d) is W_ab^cd.
    let n = 4;
    pairs
        .par_iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(c, d)| {
                    let mut acc = RationalFunction::zero();
                    for i in 0..n {
                        for j in 0..n {
                            let wv = w.get(&[a, b, i, j]);
                            if wv.is_zero() || g.inv(i, c).is_zero() || g.inv(j, d).is_zero() {
                                continue;
                            }
                            acc = &acc + &(&(g.inv(i, c) * g.inv(j, d)) * wv);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<RationalFunction>], b: &[Vec<RationalFunction>]) -> Vec<Vec<RationalFunction>> {
    let n = a.len();
    (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &a[i][k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn mat_trace(a: &[Vec<RationalFunction>]) -> RationalFunction {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Discriminant of the characteristic polynomial of a tracefree half-Weyl
/// operator, from the traces of its powers.
pub fn spectral_discriminant(op: &[Vec<RationalFunction>]) -> RationalFunction {
    let m2 = mat_mul(op, op);
    let t2 = mat_trace(&m2);
    let t3 = mat_trace(&mat_mul(&m2, op));
    // lambda^3 + p lambda + q, p = -tr(M^2)/2, q = -tr(M^3)/3
    let p = t2.scale(&ratio(-1, 2));
    let q = t3.scale(&ratio(-1, 3));
    &p.pow(3).scale_i64(-4) - &q.pow(2).scale_i64(27)
}

/// Weyl tensor and its selfdual and antiselfdual parts.
#[derive(Clone, Debug)]
pub struct WeylSplit {
    pub weyl: ChartTensor,
    pub wplus: ChartTensor,
    pub wminus: ChartTensor,
    pub degenerate_plus: bool,
    pub degenerate_minus: bool,
    pub discriminant_plus: RationalFunction,
    pub discriminant_minus: RationalFunction,
}

pub fn weyl_split_from(g: &Metric, curv: &CurvatureBundle) -> Result<WeylSplit> {
    let weyl = weyl_tensor(g, curv)?;
    let star_w = star_first_pair(g, &weyl)?;
    let half = ratio(1, 2);
    let wplus = weyl.add(&star_w)?.map(|c| c.scale(&half));
    let wminus = weyl.sub(&star_w)?.map(|c| c.scale(&half));
    let op_plus = two_form_operator(g, &wplus);
    let op_minus = two_form_operator(g, &wminus);
    let (discriminant_plus, discriminant_minus) =
        rayon::join(|| spectral_discriminant(&op_plus), || spectral_discriminant(&op_minus));
    Ok(WeylSplit {
        degenerate_plus: discriminant_plus.is_zero(),
        degenerate_minus: discriminant_minus.is_zero(),
        weyl,
        wplus,
        wminus,
        discriminant_plus,
        discriminant_minus,
    })
}

/// Weyl decomposition of a metric on a four-dimensional chart.
pub fn weyl_split(g: &Metric) -> Result<WeylSplit> {
    if g.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: g.dim() });
    }
    let curv = super::curvature::curvature(g)?;
    weyl_split_from(g, &curv)
}
