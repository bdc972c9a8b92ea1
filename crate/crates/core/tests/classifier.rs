use ambitoric::algebra::{ratio, scalar, Polynomial, RationalFunction, Var};
use ambitoric::binary_forms::{BinaryForm, QuadraticForm};
use ambitoric::builder::*;
use ambitoric::classifier::*;
use ambitoric::experiment::table_experiment;
use ambitoric::sampler::{csc_choices, Sampler};
use ambitoric::tensor::{d1, weyl_split};
use ambitoric::Error;

fn x() -> RationalFunction {
    RationalFunction::var(Var(0))
}

fn y() -> RationalFunction {
    RationalFunction::var(Var(1))
}

fn hyperbolic_fixture() -> AmbitoricSpec {
    AmbitoricSpec::from_ints(FormType::Hyperbolic, [0, 0, 0, 1, 0], [0, 0, 0, 1, 0])
}

#[test]
fn hyperbolic_display() {
    let m = build(&AmbitoricSpec::from_ints(FormType::Hyperbolic, [1, 0, 2, 0, 1], [0, 1, 0, 0, 3])).unwrap();
    assert_eq!(m.f, &(&x() + &y()) / &(&x() - &y()));
    let a = &(&x().pow(4) + &x().pow(2).scale_i64(2)) + &RationalFunction::one();
    assert_eq!(m.g0.g(0, 0), &a.inv().unwrap());
    // g- = f^2 g+ componentwise
    assert_eq!(m.gminus.tensor(), &m.gplus.tensor().scale(&(&m.f * &m.f)));
}

#[test]
fn killing_potentials_of_the_normal_forms() {
    let hyp = hyperbolic_fixture();
    let one = QuadraticForm::from_ints(0, 0, 1);
    assert_eq!(momentum(&hyp, &Momentum::Plus(one.clone())).unwrap(), -(&RationalFunction::one() / &(&x() + &y())));
    assert_eq!(
        momentum(&hyp, &Momentum::Minus(one.clone(), scalar(0))).unwrap(),
        -(&RationalFunction::one() / &(&x() - &y()))
    );
    let ell = AmbitoricSpec::from_ints(FormType::Elliptic, [0, 0, 0, 1, 0], [0, 0, 0, 1, 0]);
    let xy = &x() * &y();
    let expected = -(&(&RationalFunction::one() - &xy) / &(&RationalFunction::one() + &xy));
    assert_eq!(momentum(&ell, &Momentum::Plus(QuadraticForm::from_ints(-1, 0, 1))).unwrap(), expected);
    assert!(matches!(
        momentum(&hyp, &Momentum::Minus(QuadraticForm::hyperbolic(), scalar(0))),
        Err(Error::NotOrthogonal(_))
    ));
}

#[test]
fn symplectic_potential_and_isotropic_torus() {
    for t in FormType::NAMED {
        let spec = AmbitoricSpec::from_ints(t, [1, 1, 0, 2, 1], [0, 2, -1, 1, 1]);
        let m = build(&spec).unwrap();
        let chi = symplectic_potential(&spec).unwrap();
        assert!(d1(&chi).add(&m.omega_minus).unwrap().is_zero());
        assert!(m.omega_plus.get(&[2, 3]).is_zero() && m.omega_minus.get(&[2, 3]).is_zero());
    }
}

#[test]
fn general_type_reproduces_named_models() {
    for t in FormType::NAMED {
        let named = AmbitoricSpec::from_ints(t, [1, 0, 2, 1, 1], [2, -1, 0, 1, 1]);
        let general = AmbitoricSpec::general(named.q.clone(), named.a.clone(), named.b.clone()).unwrap();
        let (a, b) = (build(&named).unwrap(), build(&general).unwrap());
        assert_eq!(a.gplus.tensor(), b.gplus.tensor(), "{t}");
        assert_eq!(a.omega_minus, b.omega_minus, "{t}");
    }
}

#[test]
fn degenerate_specs_are_rejected() {
    let zero = AmbitoricSpec::from_ints(FormType::Parabolic, [0; 5], [1, 0, 0, 0, 0]);
    assert!(matches!(build(&zero), Err(Error::DegenerateInput(_))));
    let pd = build_pd(&PdParams::from_ints([0; 7]));
    assert!(matches!(build(&pd), Err(Error::DegenerateInput(_))));
}

#[test]
fn extremal_examples() {
    let r = extremal_check(&build(&hyperbolic_fixture()).unwrap()).unwrap();
    assert!(r.holds && r.oracle_plus && r.oracle_minus);

    let z4 = AmbitoricSpec::from_ints(FormType::Parabolic, [1, 0, 0, 0, 0], [1, 0, 0, 0, 0]);
    let r = extremal_check(&build(&z4).unwrap()).unwrap();
    assert!(!r.holds && !r.oracle_plus && !r.oracle_minus);
    assert_eq!(r.witness, "a0+b0 = 2");

    let ell = AmbitoricSpec::from_ints(FormType::Elliptic, [0, 1, 0, 0, 0], [0, 0, 0, 1, 0]);
    let m = build(&ell).unwrap();
    let r = extremal_check(&m).unwrap();
    assert!(r.holds && r.oracle_plus);
    let b = bach_flat_check(&m, &r).unwrap();
    assert!(b.holds && b.oracle && b.theorem);
}

#[test]
fn scalar_curvature_of_the_fixture() {
    let spec = hyperbolic_fixture();
    let (sp, sm) = scalar_curvature_closed(&spec).unwrap();
    assert!(sp.is_zero());
    assert_eq!(sm, &RationalFunction::from(-12) / &(&x() - &y()));
    let m = build(&spec).unwrap();
    assert_eq!(scalar_curvature_oracle(&m).unwrap(), (sp, sm));
}

#[test]
fn bach_flat_requires_extremal() {
    let z4 = AmbitoricSpec::from_ints(FormType::Parabolic, [1, 0, 0, 0, 0], [1, 0, 0, 0, 0]);
    let m = build(&z4).unwrap();
    let r = extremal_check(&m).unwrap();
    assert!(matches!(bach_flat_check(&m, &r), Err(Error::Precondition(_))));
}

#[test]
fn parabolic_extremal_not_bach_flat() {
    // a0 = 0, a1 = 1, a3 + b3 = 1, a4 + b4 = 0, extremal
    let spec = AmbitoricSpec::from_ints(FormType::Parabolic, [0, 1, 2, 1, 1], [0, -1, -2, 0, -1]);
    let m = build(&spec).unwrap();
    let r = extremal_check(&m).unwrap();
    assert!(r.holds);
    let b = bach_flat_check(&m, &r).unwrap();
    assert_eq!(b.relation.as_ref().unwrap().value, scalar(1));
    assert!(!b.holds && !b.oracle && !b.theorem);
}

#[test]
fn fixture_is_conformally_einstein() {
    let m = build(&hyperbolic_fixture()).unwrap();
    let r = extremal_check(&m).unwrap();
    let b = bach_flat_check(&m, &r).unwrap();
    match einstein_conformal(&m, &b).unwrap() {
        EinsteinReport::Metric { plus, ric0, .. } => assert!(!plus && ric0.is_zero()),
        EinsteinReport::ConformallyFlat => panic!("s- is not zero"),
    }
    assert!(weyl_split(&m.gplus).unwrap().wplus.is_zero());
}

#[test]
fn diagonal_ricci_examples() {
    let hyp = build(&hyperbolic_fixture()).unwrap();
    let d = diagonal_ricci_metric(&hyp, &QuadraticForm::from_ints(0, 0, 1)).unwrap();
    assert!(d.diagonal());
    assert_eq!(d.scalar, d.scalar_closed);
    assert!(matches!(diagonal_ricci_metric(&hyp, &QuadraticForm::hyperbolic()), Err(Error::NotOrthogonal(_))));

    let ell = build(&AmbitoricSpec::from_ints(FormType::Elliptic, [1, 0, 2, 1, 0], [0, 1, 1, 0, 2])).unwrap();
    assert!(diagonal_ricci_metric(&ell, &QuadraticForm::from_ints(-1, 0, 1)).unwrap().diagonal());
}

#[test]
fn csc_examples() {
    let spec = AmbitoricSpec::from_ints(FormType::Parabolic, [0, 1, 0, 1, 0], [0, 1, 0, -1, 0])
        .with_p(QuadraticForm::from_ints(0, 1, 0))
        .unwrap();
    let conds = csc_table_conditions(&spec).unwrap();
    assert!(conds.iter().all(Condition::holds));
    let r = csc_em_check(&build(&spec).unwrap(), spec.p.as_ref().unwrap()).unwrap();
    assert!(r.holds && r.em_residual_zero && r.c.is_some());
}

#[test]
fn fixture_einstein_maxwell_constant_is_zero() {
    // p = 1 gives g = (x+y)^2 g+ proportional to s-^-2 g-
    let m = build(&hyperbolic_fixture()).unwrap();
    let r = csc_em_check(&m, &QuadraticForm::from_ints(0, 0, 1)).unwrap();
    assert!(r.holds && r.einstein_oracle && r.em_residual_zero);
    assert_eq!(r.c, Some(scalar(0)));
}

/// The listed elliptic conditions for `p = 1 - z^2` (`a0+b0 = a4+b4 = 0`)
/// disagree with the scalar curvature computation; `a0+b4 = a4+b0 = 0` is
/// what the computation and the CSC closed form require.
#[test]
fn elliptic_csc_conditions_for_one_minus_z_squared() {
    let p = QuadraticForm::from_ints(-1, 0, 1);
    // a0 + b0 = a4 + b4 = 0 but a0 + b4 != 0: not CSC
    let listed = AmbitoricSpec::from_ints(FormType::Elliptic, [1, 0, 0, 0, 0], [-1, 0, 0, 0, 0]).with_p(p.clone()).unwrap();
    let d = diagonal_ricci_metric(&build(&listed).unwrap(), &p).unwrap();
    assert!(!d.scalar.is_constant());
    assert!(!csc_table_conditions(&listed).unwrap().iter().all(Condition::holds));
    // a0 + b4 = 0: CSC
    let fixed = AmbitoricSpec::from_ints(FormType::Elliptic, [1, 0, 0, 0, 0], [0, 0, 0, 0, -1]).with_p(p.clone()).unwrap();
    let d = diagonal_ricci_metric(&build(&fixed).unwrap(), &p).unwrap();
    assert!(d.scalar.is_constant());
    assert!(csc_table_conditions(&fixed).unwrap().iter().all(Condition::holds));
}

#[test]
fn plebanski_demianski_example_and_identity() {
    let spec = build_pd(&PdParams::from_ints([1, 0, 0, 0, 0, 0, 1]));
    assert_eq!(spec.a, BinaryForm::quartic_ints([1, 0, 0, 0, 1]));
    assert_eq!(spec.b, BinaryForm::quartic_ints([-1, 0, 0, 0, 1]));
    assert!(csc_table_conditions(&spec).unwrap().iter().all(Condition::holds));

    let (a, b) = pd_symbolic();
    let eps = Polynomial::var(Var(5));
    let e2 = &eps * &eps;
    let s = |i: usize| &a[i] + &b[i];
    let d = |i: usize| &a[i] - &b[i];
    assert!((&s(0) + &(&e2 * &s(4))).is_zero());
    assert!((&s(1) - &(&eps * &s(3))).is_zero());
    assert!(s(2).is_zero());
    assert!((&d(1) + &(&eps * &d(3))).is_zero());
}

#[test]
fn killing_tensors() {
    let m = build(&hyperbolic_fixture()).unwrap();
    let (_, r) = killing_tensor_barycentric(&m).unwrap();
    assert!(r.is_zero());
    let lin = BinaryForm::from_ints(1, &[0, 1]).unwrap();
    let (_, _, r) = killing_tensor_from_fg(&m, &lin, &lin).unwrap();
    assert!(r.is_zero());
    let (_, _, r) = killing_tensor_from_fg(&m, &BinaryForm::from_ints(0, &[3]).unwrap(), &BinaryForm::from_ints(0, &[1]).unwrap()).unwrap();
    assert!(r.is_zero());
    let c = BinaryForm::from_ints(0, &[2]).unwrap();
    assert!(matches!(killing_tensor_from_fg(&m, &c, &c), Err(Error::DegenerateInput(_))));
}

#[test]
fn hamiltonian_two_form_of_a_killing_tensor() {
    let spec = AmbitoricSpec::from_ints(FormType::Parabolic, [1, 2, 0, 1, 3], [0, -1, 2, 1, 1]);
    let m = build(&spec).unwrap();
    let z = BinaryForm::from_ints(1, &[0, 1]).unwrap();
    let (g, s, r) = killing_tensor_from_fg(&m, &z, &z).unwrap();
    assert!(r.is_zero());
    let (_, res) = hamiltonian_form(&g, &m.j_plus, &s).unwrap();
    assert!(res.is_zero());
}

#[test]
fn killing_existence_examples() {
    let ell = AmbitoricSpec::from_ints(FormType::Elliptic, [0, 1, 0, 0, 0], [0, 0, 0, 1, 0]);
    assert!(!diagonal_ricci_killing_existence(&ell, &QuadraticForm::from_ints(-1, 0, 1)).unwrap());
    let par = AmbitoricSpec::from_ints(FormType::Parabolic, [0, 1, 0, 0, 0], [0, 0, 0, 1, 0]);
    let p = QuadraticForm::new(scalar(0), ratio(1, 2), scalar(0));
    assert_eq!(p.discriminant(), ratio(1, 4));
    assert!(!diagonal_ricci_killing_existence(&par, &p).unwrap());
    // hyperbolic: p orthogonal to 2z means p1 = 0; null when p0 p2 = 0
    let hyp = hyperbolic_fixture();
    assert!(diagonal_ricci_killing_existence(&hyp, &QuadraticForm::from_ints(1, 0, 0)).unwrap());
    assert!(!diagonal_ricci_killing_existence(&hyp, &QuadraticForm::from_ints(1, 0, 1)).unwrap());
}

#[test]
fn calabi_examples() {
    let k = scalar(2);
    let r = calabi_classify(&BinaryForm::quartic_ints([1, 0, 2, 0, 0]), &k).unwrap();
    assert_eq!(r.flags, r.oracle);
    assert!(r.flags.extremal && r.flags.bach_flat && !r.flags.csc);
    assert!(r.einstein_residual.unwrap().is_zero());

    let r = calabi_classify(&BinaryForm::quartic_ints([0, 0, 2, 1, 0]), &k).unwrap();
    assert_eq!(r.flags, r.oracle);
    assert!(r.flags.extremal && r.flags.csc && !r.flags.kahler_einstein);

    let r = calabi_classify(&BinaryForm::quartic_ints([0, 1, 2, 0, 0]), &k).unwrap();
    assert_eq!(r.flags, r.oracle);
    assert!(r.flags.bach_flat);

    let r = calabi_classify(&BinaryForm::quartic_ints([0, 0, 1, 0, 0]), &scalar(1)).unwrap();
    assert!(r.flags.extremal && r.oracle.extremal);

    let m = build_calabi(&BinaryForm::quartic_ints([0, 0, 1, 0, 0]), &scalar(0)).unwrap();
    assert!(d1(&m.alpha).sub(&m.omega_sigma).unwrap().is_zero());
    assert!(matches!(build_calabi(&BinaryForm::zero(4), &k), Err(Error::DegenerateInput(_))));
}

#[test]
fn sampler_is_deterministic() {
    let (mut a, mut b) = (Sampler::new(5), Sampler::new(5));
    for t in FormType::NAMED {
        assert_eq!(a.extremal_spec(t), b.extremal_spec(t));
        assert_eq!(a.csc_spec(t, 0, true), b.csc_spec(t, 0, true));
    }
    assert_eq!(csc_choices(FormType::Hyperbolic).len(), 4);
}

#[test]
fn table_experiment_small_runs() {
    let out = table_experiment(FormType::Elliptic, 1, 7).unwrap();
    assert!(out.passed());
    assert_eq!(out.records.len(), 2);
    assert!(matches!(table_experiment(FormType::Hyperbolic, 0, 1), Err(Error::OutOfRange(_))));
    assert!(matches!(table_experiment(FormType::General, 1, 1), Err(Error::Precondition(_))));
}
