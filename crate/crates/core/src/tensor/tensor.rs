use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::chart::Chart;
use crate::algebra::RationalFunction;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    /// Symmetric in the covariant slots (only used for rank-2 covariant tensors).
    Symmetric,
    /// Antisymmetric in the covariant slots.
    Antisymmetric,
}

/// A tensor field on a chart. Components are stored densely, contravariant
/// indices first, each index running over the chart coordinates.
#[derive(Clone, PartialEq)]
pub struct ChartTensor {
    chart: Arc<Chart>,
    contra: usize,
    co: usize,
    symmetry: Symmetry,
    comps: Vec<RationalFunction>,
}

/// Decompose a flat offset into `rank` indices in base `n`.
pub(crate) fn unflatten(mut k: usize, n: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for slot in idx.iter_mut().rev() {
        *slot = k % n;
        k /= n;
    }
    idx
}

impl ChartTensor {
    pub fn zeros(chart: &Arc<Chart>, contra: usize, co: usize, symmetry: Symmetry) -> Self {
        let len = chart.dim().pow((contra + co) as u32);
        ChartTensor {
            chart: chart.clone(),
            contra,
            co,
            symmetry,
            comps: vec![RationalFunction::zero(); len],
        }
    }

    /// Build from a component function, evaluated in parallel.
    pub fn from_fn<F>(chart: &Arc<Chart>, contra: usize, co: usize, symmetry: Symmetry, f: F) -> Self
    where
        F: Fn(&[usize]) -> RationalFunction + Sync,
    {
        let n = chart.dim();
        let rank = contra + co;
        let comps = (0..n.pow(rank as u32))
            .into_par_iter()
            .map(|k| f(&unflatten(k, n, rank)))
            .collect();
        ChartTensor { chart: chart.clone(), contra, co, symmetry, comps }
    }

    /// Build from a flat component vector, checking the declared symmetry.
    pub fn from_components(
        chart: &Arc<Chart>,
        contra: usize,
        co: usize,
        symmetry: Symmetry,
        comps: Vec<RationalFunction>,
    ) -> Result<Self> {
        let len = chart.dim().pow((contra + co) as u32);
        if comps.len() != len {
            return Err(Error::Dimension { expected: len, found: comps.len() });
        }
        let t = ChartTensor { chart: chart.clone(), contra, co, symmetry, comps };
        t.check_symmetry()?;
        Ok(t)
    }

    /// A 1-form from its components.
    pub fn one_form(chart: &Arc<Chart>, comps: Vec<RationalFunction>) -> Result<Self> {
        Self::from_components(chart, 0, 1, Symmetry::None, comps)
    }

    /// A vector field from its components.
    pub fn vector(chart: &Arc<Chart>, comps: Vec<RationalFunction>) -> Result<Self> {
        Self::from_components(chart, 1, 0, Symmetry::None, comps)
    }

    /// The 2-form `sum alpha_i ^ beta_i` from pairs of 1-form component lists.
    pub fn wedge_sum(chart: &Arc<Chart>, pairs: &[(&[RationalFunction], &[RationalFunction])]) -> Self {
        Self::from_fn(chart, 0, 2, Symmetry::Antisymmetric, |i| {
            pairs
                .iter()
                .map(|(a, b)| &(&a[i[0]] * &b[i[1]]) - &(&a[i[1]] * &b[i[0]]))
                .sum()
        })
    }

    /// Symmetric 2-tensor `sum c_i alpha_i (x) alpha_i`.
    pub fn sum_of_squares(chart: &Arc<Chart>, terms: &[(RationalFunction, Vec<RationalFunction>)]) -> Self {
        Self::from_fn(chart, 0, 2, Symmetry::Symmetric, |i| {
            terms
                .iter()
                .map(|(c, a)| {
                    if a[i[0]].is_zero() || a[i[1]].is_zero() {
                        RationalFunction::zero()
                    } else {
                        &(c * &a[i[0]]) * &a[i[1]]
                    }
                })
                .sum()
        })
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn valence(&self) -> (usize, usize) {
        (self.contra, self.co)
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.comps
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.contra + self.co);
        idx.iter().fold(0, |acc, &i| acc * self.dim() + i)
    }

    pub fn get(&self, idx: &[usize]) -> &RationalFunction {
        &self.comps[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: RationalFunction) {
        let k = self.offset(idx);
        self.comps[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// First nonzero component, with its index.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &RationalFunction)> {
        let n = self.dim();
        let rank = self.contra + self.co;
        self.comps
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (unflatten(k, n, rank), c))
    }

    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&RationalFunction) -> RationalFunction + Sync + Send,
    {
        ChartTensor { comps: self.comps.par_iter().map(f).collect(), ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Self {
        ChartTensor {
            chart: self.chart.clone(),
            contra: self.contra,
            co: self.co,
            symmetry: self.symmetry,
            comps: Vec::new(),
        }
    }

    pub fn scale(&self, f: &RationalFunction) -> Self {
        self.map(|c| c * f)
    }

    fn zip_with<F>(&self, other: &Self, f: F) -> Result<Self>
    where
        F: Fn(&RationalFunction, &RationalFunction) -> RationalFunction + Sync,
    {
        if self.valence() != other.valence() || self.dim() != other.dim() {
            return Err(Error::Dimension { expected: self.comps.len(), found: other.comps.len() });
        }
        let symmetry = if self.symmetry == other.symmetry { self.symmetry } else { Symmetry::None };
        let comps = self.comps.par_iter().zip(&other.comps).map(|(a, b)| f(a, b)).collect();
        Ok(ChartTensor { symmetry, comps, ..self.clone_shape() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Verify the declared symmetry of a covariant rank-2 tensor.
    pub fn check_symmetry(&self) -> Result<()> {
        if self.symmetry == Symmetry::None {
            return Ok(());
        }
        if self.contra != 0 || self.co != 2 {
            return Err(Error::Precondition("symmetry tags apply to (0,2) tensors".into()));
        }
        let n = self.dim();
        for a in 0..n {
            for b in a..n {
                let (x, y) = (self.get(&[a, b]), self.get(&[b, a]));
                let ok = match self.symmetry {
                    Symmetry::Symmetric => x == y,
                    Symmetry::Antisymmetric => x == &-y,
                    Symmetry::None => true,
                };
                if !ok {
                    return Err(Error::Precondition(format!(
                        "component ({a},{b}) violates the declared symmetry"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fail with a resource error if any component exceeds the degree cap.
    pub fn check_degree(&self) -> Result<()> {
        self.comps.iter().try_for_each(|c| c.check_degree())
    }

    /// A (1,1)-tensor as an `n x n` matrix `m[a][b] = T^a_b`, or a (0,2)-tensor
    /// as `m[a][b] = T_ab`.
    pub fn matrix(&self) -> Vec<Vec<RationalFunction>> {
        assert_eq!(self.contra + self.co, 2);
        let n = self.dim();
        (0..n).map(|a| (0..n).map(|b| self.get(&[a, b]).clone()).collect()).collect()
    }

    /// Short description of the tensor: `zero` or its first nonzero component.
    pub fn digest(&self) -> String {
        match self.first_nonzero() {
            None => "zero".to_string(),
            Some((idx, c)) => {
                let names = self.chart.var_names();
                let lt = c.numerator().leading_term_string(&names);
                format!("nonzero at {idx:?}: leading numerator term {lt}")
            }
        }
    }
}

impl fmt::Debug for ChartTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChartTensor({},{})", self.contra, self.co)?;
        let names = self.chart.var_names();
        let n = self.dim();
        let rank = self.contra + self.co;
        for (k, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "\n  {:?} = {}", unflatten(k, n, rank), c.display_with(&names))?;
            }
        }
        Ok(())
    }
}
