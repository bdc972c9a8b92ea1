//! Seeded generation of coefficient sets that satisfy or violate the
//! coefficient conditions of the normal forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builder::{AmbitoricSpec, FormType};
use crate::binary_forms::QuadraticForm;

pub const COEFF_MIN: i64 = -5;
pub const COEFF_MAX: i64 = 5;

/// Deterministic sampler of integer quartic pairs `(A, B)`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

fn nonzero(c: &[i64; 5]) -> bool {
    c.iter().any(|&v| v != 0)
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn coeff(&mut self) -> i64 {
        self.rng.gen_range(COEFF_MIN..=COEFF_MAX)
    }

    pub fn small(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn quartic(&mut self) -> [i64; 5] {
        [self.coeff(), self.coeff(), self.coeff(), self.coeff(), self.coeff()]
    }

    fn accept(t: FormType, a: [i64; 5], b: [i64; 5]) -> Option<AmbitoricSpec> {
        (nonzero(&a) && nonzero(&b)).then(|| AmbitoricSpec::from_ints(t, a, b))
    }

    fn retry<F>(&mut self, mut f: F) -> AmbitoricSpec
    where
        F: FnMut(&mut Self) -> Option<AmbitoricSpec>,
    {
        loop {
            if let Some(s) = f(self) {
                return s;
            }
        }
    }

    /// `A`, `B` with independent coefficients in `[-5, 5]`, both nonzero.
    pub fn random_spec(&mut self, t: FormType) -> AmbitoricSpec {
        self.retry(|s| {
            let (a, b) = (s.quartic(), s.quartic());
            Self::accept(t, a, b)
        })
    }

    /// Solve the extremality conditions of the normal form for some of the
    /// coefficients of `B`.
    fn impose_extremal(t: FormType, a: &[i64; 5], b: &mut [i64; 5]) {
        match t {
            FormType::Parabolic => {
                b[0] = -a[0];
                b[1] = -a[1];
                b[2] = -a[2];
            }
            FormType::Hyperbolic => {
                b[0] = -a[0];
                b[2] = -a[2];
                b[4] = -a[4];
            }
            FormType::Elliptic => {
                b[2] = -a[2];
                b[0] = -a[0] - a[4] - b[4];
                b[1] = a[3] + b[3] - a[1];
            }
            FormType::General => unreachable!("named types only"),
        }
    }

    /// A spec satisfying the extremality conditions of its normal form.
    pub fn extremal_spec(&mut self, t: FormType) -> AmbitoricSpec {
        self.retry(|s| {
            let a = s.quartic();
            let mut b = s.quartic();
            Self::impose_extremal(t, &a, &mut b);
            Self::accept(t, a, b)
        })
    }

    /// A spec violating exactly one extremality condition, obtained from a
    /// satisfying one by adding 1 to a single coefficient of `B`.
    pub fn non_extremal_spec(&mut self, t: FormType) -> AmbitoricSpec {
        let slots: &[usize] = match t {
            FormType::Parabolic => &[0, 1, 2],
            FormType::Hyperbolic => &[0, 2, 4],
            FormType::Elliptic => &[0, 1, 2],
            FormType::General => unreachable!("named types only"),
        };
        self.retry(|s| {
            let a = s.quartic();
            let mut b = s.quartic();
            Self::impose_extremal(t, &a, &mut b);
            b[slots[s.index(slots.len())]] += 1;
            Self::accept(t, a, b)
        })
    }

    /// An extremal spec satisfying the Bach-flat relation of its normal form.
    pub fn bach_flat_spec(&mut self, t: FormType) -> AmbitoricSpec {
        self.retry(|s| {
            let a = s.quartic();
            let mut a = a;
            let mut b = s.quartic();
            match t {
                FormType::Parabolic => {
                    // a1 (a3 + b3) + 4 a0 (a4 + b4) = 0
                    a[0] = s.small(1);
                    let u = s.small(1);
                    b[3] = -4 * a[0] * u - a[3];
                    b[4] = a[1] * u - a[4];
                }
                FormType::Hyperbolic => {
                    // a1 a3 = b1 b3
                    let (u, v, w, z) = (s.small(2), s.small(2), s.small(2), s.small(2));
                    a[1] = u * v;
                    a[3] = w * z;
                    b[1] = u * w;
                    b[3] = v * z;
                }
                FormType::Elliptic => {
                    // (a3 - b1)(a3 + b3) + 4 (a4 + b4)(a4 + b0) = 0
                    let (tt, uu) = (s.small(2), s.small(2));
                    let r = if s.index(2) == 0 { 1 } else { -1 };
                    let (p, s3) = (-2 * uu * r, 2 * tt * r);
                    b[1] = a[3] - p;
                    b[3] = s3 - a[3];
                    b[4] = tt - a[4];
                    b[0] = uu - a[4];
                    a[0] = a[4] - uu - tt;
                    a[1] = s3 - b[1];
                    b[2] = -a[2];
                    return Self::accept(t, a, b);
                }
                FormType::General => unreachable!("named types only"),
            }
            Self::impose_extremal(t, &a, &mut b);
            Self::accept(t, a, b)
        })
    }

    /// An extremal spec violating the Bach-flat relation.
    pub fn non_bach_flat_spec(&mut self, t: FormType) -> AmbitoricSpec {
        loop {
            let s = self.extremal_spec(t);
            if bach_relation(&s) != 0 {
                return s;
            }
        }
    }

    /// A spec satisfying the constant scalar curvature conditions for `p`
    /// (one of [`csc_choices`]), or violating one of them by 1.
    pub fn csc_spec(&mut self, t: FormType, p_index: usize, satisfy: bool) -> AmbitoricSpec {
        let p = csc_choices(t)[p_index].clone();
        self.retry(|s| {
            let mut a = s.quartic();
            let mut b = s.quartic();
            match (t, p_index) {
                (FormType::Parabolic, _) => {
                    b[0] = -a[0];
                    b[2] = -a[2];
                    b[4] = -a[4];
                    b[1] = a[1];
                }
                (FormType::Hyperbolic, _) => {
                    // p = 1 + eps z^2 with eps = p0
                    let eps = p.q0.to_integer().try_into().unwrap_or(0i64);
                    b[0] = -a[0] - eps * eps * (a[4] + b[4]);
                    b[2] = -a[2];
                    a[1] = eps * b[3];
                    b[1] = eps * a[3];
                }
                (FormType::Elliptic, 0) => {
                    b[4] = -a[0];
                    b[2] = -a[2];
                    b[0] = -a[4];
                    b[3] = -a[1] - b[1] - a[3];
                }
                (FormType::Elliptic, _) => {
                    b[0] = -a[0];
                    b[2] = -a[2];
                    b[4] = -a[4];
                    b[3] = a[1] - b[1] + a[3];
                }
                (FormType::General, _) => unreachable!("named types only"),
            }
            if !satisfy {
                let slot = s.index(5);
                b[slot] += 1;
                let spec = Self::accept(t, a, b)?.with_p(p.clone()).ok()?;
                return (!csc_conditions_hold(&spec)).then_some(spec);
            }
            Self::accept(t, a, b)?.with_p(p.clone()).ok()
        })
    }

    /// A quadratic orthogonal to `q` with small integer coordinates, nonzero.
    pub fn orthogonal_quadratic(&mut self, q: &QuadraticForm) -> QuadraticForm {
        loop {
            let (u, v) = (self.small(3), self.small(3));
            if u == 0 && v == 0 {
                continue;
            }
            let [e1, e2] = crate::builder::torus_basis(q);
            let p = e1.scale(&crate::algebra::scalar(u)).add(&e2.scale(&crate::algebra::scalar(v)));
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A random integer polynomial of degree at most 2 in one variable
    /// (ascending coefficients).
    pub fn small_poly(&mut self) -> [i64; 3] {
        loop {
            let c = [self.small(3), self.small(3), self.small(3)];
            if c[1] != 0 || c[2] != 0 {
                return c;
            }
        }
    }
}

/// The quadratics `p` for which the normal forms list constant scalar
/// curvature conditions.
pub fn csc_choices(t: FormType) -> Vec<QuadraticForm> {
    use crate::algebra::ratio;
    use num_traits::Zero;
    let z = || crate::algebra::ExactScalar::zero();
    match t {
        // p(z) = z
        FormType::Parabolic => vec![QuadraticForm::new(z(), ratio(1, 2), z())],
        // p(z) = 1 + eps z^2 for eps in {0, 1, -1, 2}
        FormType::Hyperbolic => [0, 1, -1, 2]
            .iter()
            .map(|&e| QuadraticForm::from_ints(e, 0, 1))
            .collect(),
        // p(z) = 1 - z^2, p(z) = z
        FormType::Elliptic => vec![QuadraticForm::from_ints(-1, 0, 1), QuadraticForm::new(z(), ratio(1, 2), z())],
        FormType::General => Vec::new(),
    }
}

fn ints(spec: &AmbitoricSpec) -> ([i64; 5], [i64; 5]) {
    let conv = |v: Vec<crate::algebra::ExactScalar>| -> [i64; 5] {
        let mut out = [0; 5];
        for (o, c) in out.iter_mut().zip(v) {
            *o = c.to_integer().try_into().expect("small integer coefficient");
        }
        out
    };
    (conv(spec.a_coeffs()), conv(spec.b_coeffs()))
}

/// Left-hand side of the Bach-flat relation of the normal form (integer specs).
pub fn bach_relation(spec: &AmbitoricSpec) -> i64 {
    let (a, b) = ints(spec);
    match spec.form_type {
        FormType::Parabolic => a[1] * (a[3] + b[3]) + 4 * a[0] * (a[4] + b[4]),
        FormType::Hyperbolic => (a[3] - b[3]) * (a[1] + b[1]) + (a[3] + b[3]) * (a[1] - b[1]),
        FormType::Elliptic => (a[3] - b[1]) * (a[3] + b[3]) + 4 * (a[4] + b[4]) * (a[4] + b[0]),
        FormType::General => panic!("named types only"),
    }
}

fn csc_conditions_hold(spec: &AmbitoricSpec) -> bool {
    crate::classifier::csc_table_conditions(spec)
        .map(|c| c.iter().all(|c| c.holds()))
        .unwrap_or(false)
}
