use std::sync::Arc;

use crate::algebra::{RationalFunction, Var, MAX_VARS};
use crate::error::{Error, Result};

/// An ordered list of coordinates. Each coordinate is either *active* (bound to
/// a polynomial variable, so components may depend on it) or inert (every
/// component is independent of it and derivatives along it vanish).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    names: Vec<String>,
    vars: Vec<Option<Var>>,
    orientation: i8,
}

impl Chart {
    pub fn new(names: &[&str], vars: &[Option<Var>]) -> Result<Arc<Chart>> {
        if names.len() != vars.len() {
            return Err(Error::Dimension { expected: names.len(), found: vars.len() });
        }
        if !(names.len() == 2 || names.len() == 4) {
            return Err(Error::Dimension { expected: 4, found: names.len() });
        }
        let mut seen = [false; MAX_VARS];
        for v in vars.iter().flatten() {
            if v.index() >= MAX_VARS || std::mem::replace(&mut seen[v.index()], true) {
                return Err(Error::Malformed(format!("variable {v:?} bound twice")));
            }
        }
        Ok(Arc::new(Chart {
            names: names.iter().map(|s| s.to_string()).collect(),
            vars: vars.to_vec(),
            orientation: 1,
        }))
    }

    /// The chart `(x, y, t1, t2)` with `x`, `y` active.
    pub fn ambitoric() -> Arc<Chart> {
        Chart::new(&["x", "y", "t1", "t2"], &[Some(Var(0)), Some(Var(1)), None, None]).unwrap()
    }

    /// The chart `(z, t, u, v)` with `z`, `u`, `v` active.
    pub fn calabi() -> Arc<Chart> {
        Chart::new(&["z", "t", "u", "v"], &[Some(Var(0)), None, Some(Var(1)), Some(Var(2))])
            .unwrap()
    }

    /// Same chart with the opposite (`-1`) or standard (`1`) orientation.
    pub fn with_orientation(&self, orientation: i8) -> Arc<Chart> {
        Arc::new(Chart { orientation: orientation.signum(), ..self.clone() })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var(&self, i: usize) -> Option<Var> {
        self.vars[i]
    }

    pub fn is_active(&self, i: usize) -> bool {
        self.vars[i].is_some()
    }

    pub fn coordinate(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Variable names for printing components.
    pub fn var_names(&self) -> Vec<&str> {
        let mut out = vec!["?"; MAX_VARS];
        for (n, v) in self.names.iter().zip(&self.vars) {
            if let Some(v) = v {
                out[v.index()] = n;
            }
        }
        out
    }

    /// Partial derivative along coordinate `i`.
    pub fn d(&self, f: &RationalFunction, i: usize) -> RationalFunction {
        match self.vars[i] {
            Some(v) => f.derivative(v),
            None => RationalFunction::zero(),
        }
    }

    /// Partial derivative along the coordinate called `name`.
    pub fn differentiate(&self, f: &RationalFunction, name: &str) -> Result<RationalFunction> {
        Ok(self.d(f, self.coordinate(name)?))
    }

    /// Rational function of the coordinate called `name`.
    pub fn coordinate_function(&self, name: &str) -> Result<RationalFunction> {
        let i = self.coordinate(name)?;
        self.vars[i]
            .map(RationalFunction::var)
            .ok_or_else(|| Error::Precondition(format!("coordinate {name} is inert")))
    }
}
