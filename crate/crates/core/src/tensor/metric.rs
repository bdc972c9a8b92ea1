use std::sync::Arc;

use rayon::prelude::*;

use super::chart::Chart;
use super::tensor::{ChartTensor, Symmetry};
use crate::algebra::RationalFunction;
use crate::error::{Error, Result};

type Matrix = Vec<Vec<RationalFunction>>;

/// Determinant by cofactor expansion (the matrices here are at most 4 x 4).
pub fn determinant(m: &Matrix) -> RationalFunction {
    let n = m.len();
    match n {
        0 => RationalFunction::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => (0..n)
            .filter(|&j| !m[0][j].is_zero())
            .map(|j| {
                let c = &m[0][j] * &determinant(&minor(m, 0, j));
                if j % 2 == 0 { c } else { -c }
            })
            .sum(),
    }
}

fn minor(m: &Matrix, row: usize, col: usize) -> Matrix {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, c)| c.clone()).collect())
        .collect()
}

/// Inverse through the adjugate; `None` for a singular matrix.
pub fn inverse(m: &Matrix) -> Option<(Matrix, RationalFunction)> {
    let n = m.len();
    let det = determinant(m);
    if det.is_zero() {
        return None;
    }
    let inv_det = det.inv().ok()?;
    let cof: Vec<RationalFunction> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / n, k % n);
            // inverse[i][j] = cofactor(j, i) / det
            let c = determinant(&minor(m, j, i));
            let c = if (i + j) % 2 == 0 { c } else { -c };
            &c * &inv_det
        })
        .collect();
    let inv = (0..n).map(|i| cof[i * n..(i + 1) * n].to_vec()).collect();
    Some((inv, det))
}

/// A riemannian metric on a chart together with its inverse and determinant.
#[derive(Clone, Debug)]
pub struct Metric {
    g: ChartTensor,
    inv: Matrix,
    det: RationalFunction,
    density: Option<RationalFunction>,
}

impl Metric {
    pub fn new(g: ChartTensor) -> Result<Metric> {
        if g.valence() != (0, 2) {
            return Err(Error::Precondition("a metric is a (0,2)-tensor".into()));
        }
        let n = g.dim();
        for a in 0..n {
            for b in a + 1..n {
                if g.get(&[a, b]) != g.get(&[b, a]) {
                    return Err(Error::Precondition("metric is not symmetric".into()));
                }
            }
        }
        let (inv, det) = inverse(&g.matrix()).ok_or(Error::DegenerateMetric)?;
        let g = ChartTensor::from_components(g.chart(), 0, 2, Symmetry::Symmetric, g.components().to_vec())?;
        Ok(Metric { g, inv, det, density: None })
    }

    /// Attach an explicit volume density (a square root of the determinant
    /// carrying the orientation), e.g. the Pfaffian of a hermitian form.
    pub fn with_density(mut self, density: RationalFunction) -> Result<Metric> {
        if &density * &density != self.det {
            return Err(Error::Inconsistency("density squared differs from det g".into()));
        }
        self.density = Some(density);
        Ok(self)
    }

    pub fn chart(&self) -> &Arc<Chart> {
        self.g.chart()
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn tensor(&self) -> &ChartTensor {
        &self.g
    }

    #[inline]
    pub fn g(&self, a: usize, b: usize) -> &RationalFunction {
        self.g.get(&[a, b])
    }

    #[inline]
    pub fn inv(&self, a: usize, b: usize) -> &RationalFunction {
        &self.inv[a][b]
    }

    pub fn det(&self) -> &RationalFunction {
        &self.det
    }

    /// Oriented volume density `eps_{0..n-1}`.
    pub fn volume_density(&self) -> Result<RationalFunction> {
        if let Some(d) = &self.density {
            return Ok(d.clone());
        }
        let root = self.det.sqrt().ok_or_else(|| {
            Error::Precondition("det g is not the square of a rational function".into())
        })?;
        Ok(if self.chart().orientation() < 0 { -root } else { root })
    }

    /// The metric `factor * g`.
    pub fn conformal(&self, factor: &RationalFunction) -> Result<Metric> {
        if factor.is_zero() {
            return Err(Error::DegenerateMetric);
        }
        let inv_factor = factor.inv()?;
        let n = self.dim();
        let g = self.g.scale(factor);
        let inv = self.inv.iter().map(|r| r.iter().map(|c| c * &inv_factor).collect()).collect();
        let det = &self.det * &factor.pow(n as u32);
        let density = self.density.as_ref().map(|d| d * &factor.pow(n as u32 / 2));
        let density = if n.is_multiple_of(2) { density } else { None };
        Ok(Metric { g, inv, det, density })
    }

    /// Lower the index of a vector field.
    pub fn flat(&self, v: &ChartTensor) -> ChartTensor {
        assert_eq!(v.valence(), (1, 0));
        let n = self.dim();
        ChartTensor::from_fn(self.chart(), 0, 1, Symmetry::None, |i| {
            (0..n).map(|a| self.g(i[0], a) * v.get(&[a])).sum()
        })
    }

    /// Raise the index of a 1-form.
    pub fn sharp(&self, alpha: &ChartTensor) -> ChartTensor {
        assert_eq!(alpha.valence(), (0, 1));
        let n = self.dim();
        ChartTensor::from_fn(self.chart(), 1, 0, Symmetry::None, |i| {
            (0..n).map(|a| self.inv(i[0], a) * alpha.get(&[a])).sum()
        })
    }

    /// Gradient of a function.
    pub fn gradient(&self, f: &RationalFunction) -> ChartTensor {
        let n = self.dim();
        let df: Vec<RationalFunction> = (0..n).map(|i| self.chart().d(f, i)).collect();
        ChartTensor::from_fn(self.chart(), 1, 0, Symmetry::None, |i| {
            (0..n).map(|a| self.inv(i[0], a) * &df[a]).sum()
        })
    }

    /// `g^{ac} g^{bd} T_ab U_cd`, the full contraction of two (0,2)-tensors.
    pub fn contract2(&self, t: &ChartTensor, u: &ChartTensor) -> RationalFunction {
        let n = self.dim();
        let mut acc = RationalFunction::zero();
        for a in 0..n {
            for b in 0..n {
                let tab = t.get(&[a, b]);
                if tab.is_zero() {
                    continue;
                }
                let raised: RationalFunction = (0..n)
                    .flat_map(|c| (0..n).map(move |d| (c, d)))
                    .filter(|&(c, d)| !self.inv(a, c).is_zero() && !self.inv(b, d).is_zero())
                    .map(|(c, d)| &(self.inv(a, c) * self.inv(b, d)) * u.get(&[c, d]))
                    .sum();
                acc = &acc + &(tab * &raised);
            }
        }
        acc
    }

    /// `g^{ab} T_ab`.
    pub fn trace(&self, t: &ChartTensor) -> RationalFunction {
        let n = self.dim();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.inv(a, b).is_zero())
            .map(|(a, b)| self.inv(a, b) * t.get(&[a, b]))
            .sum()
    }
}

/// Exterior derivative of a function.
pub fn d0(chart: &Arc<Chart>, f: &RationalFunction) -> ChartTensor {
    ChartTensor::from_fn(chart, 0, 1, Symmetry::None, |i| chart.d(f, i[0]))
}

/// Exterior derivative of a 1-form: `(d alpha)_ab = d_a alpha_b - d_b alpha_a`.
pub fn d1(alpha: &ChartTensor) -> ChartTensor {
    let chart = alpha.chart().clone();
    ChartTensor::from_fn(&chart, 0, 2, Symmetry::Antisymmetric, |i| {
        &chart.d(alpha.get(&[i[1]]), i[0]) - &chart.d(alpha.get(&[i[0]]), i[1])
    })
}

/// Exterior derivative of a 2-form: the cyclic sum `d_a b_bc + d_b b_ca + d_c b_ab`.
pub fn d2(beta: &ChartTensor) -> ChartTensor {
    let chart = beta.chart().clone();
    ChartTensor::from_fn(&chart, 0, 3, Symmetry::None, |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        if a == b || b == c || a == c {
            return RationalFunction::zero();
        }
        &(&chart.d(beta.get(&[b, c]), a) + &chart.d(beta.get(&[c, a]), b)) + &chart.d(beta.get(&[a, b]), c)
    })
}

/// `(alpha ^ beta)_abc` for a 1-form and a 2-form, as a cyclic sum.
pub fn wedge12(alpha: &ChartTensor, beta: &ChartTensor) -> ChartTensor {
    ChartTensor::from_fn(alpha.chart(), 0, 3, Symmetry::None, |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        &(&(alpha.get(&[a]) * beta.get(&[b, c])) + &(alpha.get(&[b]) * beta.get(&[c, a])))
            + &(alpha.get(&[c]) * beta.get(&[a, b]))
    })
}
