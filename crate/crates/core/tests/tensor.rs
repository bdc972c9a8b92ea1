use std::sync::Arc;

use ambitoric::algebra::{scalar, RationalFunction, Var};
use ambitoric::binary_forms::QuadraticForm;
use ambitoric::builder::{build, momentum, AmbitoricSpec, FormType, Momentum};
use ambitoric::sampler::Sampler;
use num_traits::Zero;
use ambitoric::tensor::*;

fn v(i: u8) -> RationalFunction {
    RationalFunction::var(Var(i))
}

fn c(n: i64) -> RationalFunction {
    RationalFunction::from(n)
}

fn diagonal(chart: &Arc<Chart>, d: Vec<RationalFunction>) -> Metric {
    let n = d.len();
    let g = ChartTensor::from_fn(chart, 0, 2, Symmetry::Symmetric, |i| {
        if i[0] == i[1] {
            d[i[0]].clone()
        } else {
            RationalFunction::zero()
        }
    });
    assert_eq!(g.dim(), n);
    Metric::new(g).unwrap()
}

fn plane() -> Arc<Chart> {
    Chart::new(&["x", "y"], &[Some(Var(0)), Some(Var(1))]).unwrap()
}

fn four() -> Arc<Chart> {
    Chart::new(&["a", "b", "c", "d"], &[Some(Var(0)), Some(Var(1)), Some(Var(2)), Some(Var(3))]).unwrap()
}

/// `4 / (1 + u^2 + w^2)^2`, the round sphere of radius one.
fn sphere_factor(u: &RationalFunction, w: &RationalFunction) -> RationalFunction {
    let r = &(&c(1) + &(u * u)) + &(w * w);
    &c(4) / &(&r * &r)
}

#[test]
fn hyperbolic_plane_has_scalar_minus_two() {
    let y = v(1);
    let f = &c(1) / &(&y * &y);
    let g = diagonal(&plane(), vec![f.clone(), f]);
    assert_eq!(curvature(&g).unwrap().scalar, c(-2));
}

#[test]
fn round_sphere_has_scalar_two() {
    let f = sphere_factor(&v(0), &v(1));
    let g = diagonal(&plane(), vec![f.clone(), f]);
    assert_eq!(scalar_curvature(&g).unwrap(), c(2));
}

#[test]
fn euclidean_space_is_flat() {
    let g = diagonal(&four(), vec![c(1), c(1), c(1), c(1)]);
    let k = curvature(&g).unwrap();
    assert!(k.riemann.is_zero() && k.ricci.is_zero() && k.scalar.is_zero());
    assert!(bach(&g).unwrap().is_zero());
}

#[test]
fn product_of_hyperbolic_planes_is_einstein() {
    let (b, d) = (v(1), v(3));
    let hb = &c(1) / &(&b * &b);
    let hd = &c(1) / &(&d * &d);
    let g = diagonal(&four(), vec![hb.clone(), hb, hd.clone(), hd]);
    let k = curvature(&g).unwrap();
    assert_eq!(k.scalar, c(-4));
    assert!(tracefree_ricci(&g, &k).is_zero());
    assert!(bach(&g).unwrap().is_zero());
    let w = weyl_split(&g).unwrap();
    assert!(!w.weyl.is_zero());
}

#[test]
fn sphere_times_hyperbolic_plane_is_conformally_flat() {
    let s = sphere_factor(&v(0), &v(1));
    let d = v(3);
    let h = &c(1) / &(&d * &d);
    let g = diagonal(&four(), vec![s.clone(), s, h.clone(), h]);
    assert!(curvature(&g).unwrap().scalar.is_zero());
    let w = weyl_split(&g).unwrap();
    assert!(w.weyl.is_zero() && w.wplus.is_zero() && w.wminus.is_zero());
}

fn sample_spec() -> AmbitoricSpec {
    AmbitoricSpec::from_ints(FormType::Parabolic, [1, 2, 0, 1, 3], [0, -1, 2, 1, 1])
}

#[test]
fn bianchi_identities() {
    let m = build(&sample_spec()).unwrap();
    let g = &m.gplus;
    let k = curvature(g).unwrap();
    let n = 4;
    for d in 0..n {
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let cyc = &(k.riemann.get(&[d, a, b, cc]) + k.riemann.get(&[d, b, cc, a])) + k.riemann.get(&[d, cc, a, b]);
                    assert!(cyc.is_zero(), "first Bianchi fails at {d}{a}{b}{cc}");
                }
            }
        }
    }
    // contracted: nabla^a Ric_ab = 1/2 d_b s
    let dric = covariant_derivative(&k.christoffel, &k.ricci);
    let ds = d0(g.chart(), &k.scalar);
    for b in 0..n {
        let div: RationalFunction = (0..n)
            .flat_map(|e| (0..n).map(move |a| (e, a)))
            .map(|(e, a)| g.inv(e, a) * dric.get(&[e, a, b]))
            .sum();
        assert_eq!(div, ds.get(&[b]).scale(&ambitoric::algebra::ratio(1, 2)));
    }
}

#[test]
fn bach_is_conformally_covariant() {
    let m = build(&sample_spec()).unwrap();
    let g = &m.gplus;
    let phi = &c(1) + &(&v(0) * &v(0));
    let b = bach(g).unwrap();
    assert!(!b.is_zero());
    let b2 = bach(&g.conformal(&(&phi * &phi)).unwrap()).unwrap();
    let expected = b.scale(&(&phi * &phi).inv().unwrap());
    assert_eq!(b2, expected);
    assert_eq!(bach_single(g).unwrap(), b);
}

#[test]
fn lee_forms_of_the_kahler_pair() {
    for t in FormType::NAMED {
        let spec = AmbitoricSpec::from_ints(t, [1, 0, 2, -1, 3], [2, 1, 0, 1, -1]);
        let m = build(&spec).unwrap();
        let tp = lee_form(&m.g0, &m.j_plus).unwrap();
        let tm = lee_form(&m.g0, &m.j_minus).unwrap();
        assert!(!tp.is_zero());
        assert!(tp.add(&tm).unwrap().is_zero(), "{t}: Lee forms of g0 do not cancel");
        assert!(lee_form(&m.gplus, &m.j_plus).unwrap().is_zero());
        assert!(lee_form(&m.gminus, &m.j_minus).unwrap().is_zero());
        assert!(square_residual(&m.j_plus).is_zero() && square_residual(&m.j_minus).is_zero());
        assert!(nijenhuis(&m.j_plus).is_zero() && nijenhuis(&m.j_minus).is_zero());
        // J+ and J- commute
        assert_eq!(compose(&m.j_plus, &m.j_minus), compose(&m.j_minus, &m.j_plus));
    }
}

#[test]
fn momentum_maps_are_hamiltonians() {
    for t in FormType::NAMED {
        let spec = AmbitoricSpec::from_ints(t, [0, 1, 2, 0, 3], [1, -1, 0, 2, 1]);
        let m = build(&spec).unwrap();
        let w = QuadraticForm::from_ints(1, 2, 0);
        let mu = momentum(&spec, &Momentum::Plus(w.clone())).unwrap();
        let k = spec.killing_field_w(&m.chart, &w).unwrap();
        assert!(d0(&m.chart, &mu).add(&m.interior(&k, true)).unwrap().is_zero(), "{t}: mu+");
        assert!(killing_vector_residual(&m.gplus, &k).unwrap().is_zero());

        let p = Sampler::new(3).orthogonal_quadratic(&spec.q);
        assert!(p.inner_product(&spec.q).is_zero() && !p.is_zero());
        let mu = momentum(&spec, &Momentum::Minus(p.clone(), scalar(2))).unwrap();
        let k = spec.killing_field(&m.chart, &p).unwrap();
        assert!(d0(&m.chart, &mu).add(&m.interior(&k, false)).unwrap().is_zero(), "{t}: mu-");
        assert!(killing_vector_residual(&m.gminus, &k).unwrap().is_zero());
        assert!(killing_vector_residual(&m.g0, &k).unwrap().is_zero());
    }
}

#[test]
fn weyl_split_adds_up_and_kahler_half_is_degenerate() {
    let m = build(&sample_spec()).unwrap();
    let w = weyl_split(&m.gplus).unwrap();
    assert_eq!(w.wplus.add(&w.wminus).unwrap(), w.weyl);
    assert!(w.degenerate_plus);
    let star = |b: &ChartTensor| hodge_star(&m.gplus, b).unwrap();
    let dx = d0(&m.chart, &v(0));
    let dt = [c(0), c(0), c(1), c(0)];
    let beta = ChartTensor::wedge_sum(&m.chart, &[(dx.components(), &dt)]);
    assert_eq!(star(&star(&beta)), beta);
}
