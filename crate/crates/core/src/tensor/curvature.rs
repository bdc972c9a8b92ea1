use rayon::prelude::*;

use super::metric::Metric;
use super::tensor::{ChartTensor, Symmetry};
use crate::algebra::RationalFunction;
use crate::error::Result;

/// Christoffel symbols `Gamma^a_bc` of the Levi-Civita connection.
#[derive(Clone, Debug)]
pub struct Connection {
    n: usize,
    gamma: Vec<RationalFunction>,
}

impl Connection {
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> &RationalFunction {
        &self.gamma[(a * self.n + b) * self.n + c]
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|g| g.is_zero())
    }
}

/// Christoffel symbols from the Koszul formula.
pub fn christoffel(g: &Metric) -> Connection {
    let n = g.dim();
    let chart = g.chart();
    // dg[e][a][b] = d_e g_ab
    let dg: Vec<RationalFunction> = (0..n * n * n)
        .into_par_iter()
        .map(|k| {
            let (e, a, b) = (k / (n * n), (k / n) % n, k % n);
            if a > b {
                return RationalFunction::zero();
            }
            chart.d(g.g(a, b), e)
        })
        .collect();
    let dg = |e: usize, a: usize, b: usize| -> &RationalFunction {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        &dg[(e * n + a) * n + b]
    };
    // first kind: Gamma_dbc = 1/2 (d_b g_dc + d_c g_db - d_d g_bc)
    let first: Vec<RationalFunction> = (0..n * n * n)
        .into_par_iter()
        .map(|k| {
            let (d, b, c) = (k / (n * n), (k / n) % n, k % n);
            if b > c {
                return RationalFunction::zero();
            }
            (&(dg(b, d, c) + dg(c, d, b)) - dg(d, b, c)).scale(&crate::algebra::ratio(1, 2))
        })
        .collect();
    let first = |d: usize, b: usize, c: usize| -> &RationalFunction {
        let (b, c) = if b <= c { (b, c) } else { (c, b) };
        &first[(d * n + b) * n + c]
    };
    let mut gamma: Vec<RationalFunction> = (0..n * n * n)
        .into_par_iter()
        .map(|k| {
            let (a, b, c) = (k / (n * n), (k / n) % n, k % n);
            if b > c {
                return RationalFunction::zero();
            }
            (0..n)
                .filter(|&d| !g.inv(a, d).is_zero() && !first(d, b, c).is_zero())
                .map(|d| g.inv(a, d) * first(d, b, c))
                .sum()
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..b {
                gamma[(a * n + b) * n + c] = gamma[(a * n + c) * n + b].clone();
            }
        }
    }
    Connection { n, gamma }
}

/// Christoffel symbols, Riemann tensor `R^d_abc` (stored with index order
/// `[d, a, b, c]`), Ricci tensor and scalar curvature.
///
/// Conventions: `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`,
/// `R(d_a, d_b) d_c = R^d_abc d_d`, `Ric_bc = R^a_abc`.
#[derive(Clone, Debug)]
pub struct CurvatureBundle {
    pub christoffel: Connection,
    pub riemann: ChartTensor,
    pub ricci: ChartTensor,
    pub scalar: RationalFunction,
}

fn riemann_component(g: &Metric, conn: &Connection, d: usize, a: usize, b: usize, c: usize) -> RationalFunction {
    let n = g.dim();
    let chart = g.chart();
    let mut acc = &chart.d(conn.get(d, b, c), a) - &chart.d(conn.get(d, a, c), b);
    for e in 0..n {
        let (x, y) = (conn.get(d, a, e), conn.get(e, b, c));
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
        let (x, y) = (conn.get(d, b, e), conn.get(e, a, c));
        if !x.is_zero() && !y.is_zero() {
            acc = &acc - &(x * y);
        }
    }
    acc
}

pub fn curvature(g: &Metric) -> Result<CurvatureBundle> {
    let n = g.dim();
    let conn = christoffel(g);
    let mut riemann = ChartTensor::from_fn(g.chart(), 1, 3, Symmetry::None, |i| {
        let (d, a, b, c) = (i[0], i[1], i[2], i[3]);
        if a >= b {
            return RationalFunction::zero();
        }
        riemann_component(g, &conn, d, a, b, c)
    });
    for d in 0..n {
        for a in 0..n {
            for b in 0..a {
                for c in 0..n {
                    let v = -riemann.get(&[d, b, a, c]);
                    riemann.set(&[d, a, b, c], v);
                }
            }
        }
    }
    riemann.check_degree()?;
    let ricci = ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::Symmetric, |i| {
        let (b, c) = if i[0] <= i[1] { (i[0], i[1]) } else { (i[1], i[0]) };
        (0..n).map(|a| riemann.get(&[a, a, b, c]).clone()).sum()
    });
    let scalar = g.trace(&ricci);
    Ok(CurvatureBundle { christoffel: conn, riemann, ricci, scalar })
}

/// Ricci tensor directly from the connection, without the full Riemann tensor.
pub fn ricci(g: &Metric, conn: &Connection) -> ChartTensor {
    let n = g.dim();
    let ric: Vec<RationalFunction> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (b, c) = (k / n, k % n);
            if b > c {
                return RationalFunction::zero();
            }
            (0..n).map(|a| riemann_component(g, conn, a, a, b, c)).sum()
        })
        .collect();
    ChartTensor::from_fn(g.chart(), 0, 2, Symmetry::Symmetric, |i| {
        let (b, c) = if i[0] <= i[1] { (i[0], i[1]) } else { (i[1], i[0]) };
        ric[b * n + c].clone()
    })
}

/// Scalar curvature via the direct Ricci formula.
pub fn scalar_curvature(g: &Metric) -> Result<RationalFunction> {
    let conn = christoffel(g);
    let ric = ricci(g, &conn);
    ric.check_degree()?;
    Ok(g.trace(&ric))
}

/// Fully covariant Riemann tensor `R_abcd = g_de R^e_abc`, flat index `[a,b,c,d]`.
pub fn lower_riemann(g: &Metric, riemann: &ChartTensor) -> Vec<RationalFunction> {
    let n = g.dim();
    (0..n.pow(4))
        .into_par_iter()
        .map(|k| {
            let (a, b, c, d) = (k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n);
            if a == b {
                return RationalFunction::zero();
            }
            (0..n)
                .filter(|&e| !g.g(d, e).is_zero())
                .map(|e| g.g(d, e) * riemann.get(&[e, a, b, c]))
                .sum()
        })
        .collect()
}

/// Levi-Civita covariant derivative of a tensor. The derivative index becomes
/// the first covariant index: `(nabla T)^{a..}_{e b..} = nabla_e T^{a..}_{b..}`.
pub fn covariant_derivative(conn: &Connection, t: &ChartTensor) -> ChartTensor {
    let (p, q) = t.valence();
    let n = t.dim();
    let chart = t.chart().clone();
    ChartTensor::from_fn(&chart, p, q + 1, Symmetry::None, |idx| {
        let e = idx[p];
        let mut base: Vec<usize> = idx[..p].to_vec();
        base.extend_from_slice(&idx[p + 1..]);
        let mut acc = chart.d(t.get(&base), e);
        for slot in 0..p + q {
            for m in 0..n {
                let mut j = base.clone();
                let orig = j[slot];
                j[slot] = m;
                let comp = t.get(&j);
                if comp.is_zero() {
                    continue;
                }
                if slot < p {
                    let gm = conn.get(orig, e, m);
                    if !gm.is_zero() {
                        acc = &acc + &(gm * comp);
                    }
                } else {
                    let gm = conn.get(m, e, orig);
                    if !gm.is_zero() {
                        acc = &acc - &(gm * comp);
                    }
                }
            }
        }
        acc
    })
}
