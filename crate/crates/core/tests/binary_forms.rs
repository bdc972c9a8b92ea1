use ambitoric::algebra::{ratio, scalar, RationalFunction, Var};
use ambitoric::binary_forms::{BinaryForm, QuadraticForm};
use proptest::prelude::*;

fn quad() -> impl Strategy<Value = QuadraticForm> {
    (-9i64..=9, -9i64..=9, -9i64..=9).prop_map(|(a, b, c)| QuadraticForm::from_ints(a, b, c))
}

fn quartic() -> impl Strategy<Value = BinaryForm> {
    prop::array::uniform5(-5i64..=5).prop_map(BinaryForm::quartic_ints)
}

fn binom(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn nth(p: &BinaryForm, j: u32) -> BinaryForm {
    (0..j).fold(p.clone(), |acc, _| acc.derivative())
}

/// The sum with the binomials paired the other way round,
/// `sum_j (-1)^j C(n-j, r-j) C(m-r+j, j) p^(j) q^(r-j)`.
fn transvectant_swapped(p: &BinaryForm, q: &BinaryForm, r: u32) -> BinaryForm {
    let (m, n) = (p.degree_bound(), q.degree_bound());
    let mut acc = BinaryForm::zero(m + n - 2 * r);
    for j in 0..=r {
        let c = binom(n - j, r - j) * binom(m - r + j, j) * if j % 2 == 1 { -1 } else { 1 };
        acc = acc.add(&nth(p, j).mul(&nth(q, r - j)).scale(&scalar(c)));
    }
    acc
}

fn as_poly(q: &QuadraticForm) -> BinaryForm {
    q.to_binary_form().with_bound(2).unwrap()
}

fn same_values(a: &BinaryForm, b: &BinaryForm) -> bool {
    // nine points determine forms of degree up to eight
    (-4..=4).all(|z| a.eval(&scalar(z)) == b.eval(&scalar(z)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn discriminant_of_bracket(p in quad(), w in quad()) {
        let ip = p.inner_product(&w);
        let lhs = p.poisson_bracket(&w).discriminant();
        prop_assert_eq!(lhs, &ip * &ip - scalar(4) * p.discriminant() * w.discriminant());
    }

    #[test]
    fn bracket_is_wronskian(p in quad(), w in quad()) {
        let (pp, wp) = (as_poly(&p), as_poly(&w));
        let wr = pp.derivative().mul(&wp).sub(&wp.derivative().mul(&pp));
        prop_assert!(same_values(&as_poly(&p.poisson_bracket(&w)), &wr));
    }

    #[test]
    fn order_one_and_two_constants(p in quad(), w in quad()) {
        let (pp, wp) = (as_poly(&p), as_poly(&w));
        let t1 = BinaryForm::transvectant(&pp, &wp, 1).unwrap();
        prop_assert!(same_values(&t1, &as_poly(&p.poisson_bracket(&w)).scale(&scalar(-2))));
        let t2 = BinaryForm::transvectant(&pp, &wp, 2).unwrap();
        prop_assert_eq!(t2.eval(&scalar(0)), scalar(-2) * p.inner_product(&w));
        prop_assert_eq!(t2.eval(&scalar(1)), t2.eval(&scalar(0)));
    }

    #[test]
    fn order_two_against_quartic_is_curvature_bracket(p in quad(), c in quartic()) {
        let pp = as_poly(&p);
        let t = BinaryForm::curvature_bracket(&pp, &c);
        prop_assert!(same_values(&BinaryForm::transvectant(&pp, &c, 2).unwrap(), &t));
        prop_assert!(same_values(&BinaryForm::transvectant(&c, &pp, 2).unwrap(), &t));
    }

    #[test]
    fn pairings_agree_in_equal_degree(a in quartic(), b in quartic(), r in 0u32..=4) {
        let t = BinaryForm::transvectant(&a, &b, r).unwrap();
        prop_assert!(same_values(&t, &transvectant_swapped(&a, &b, r)));
    }

    #[test]
    fn transvectant_is_equivariant_under_translation(p in quad(), c in quartic(), h in -3i64..=3) {
        // (p, C)^(r) of translates is the translate of (p, C)^(r)
        let shift = |f: &BinaryForm| {
            let m = f.degree_bound();
            let line = BinaryForm::from_ints(1, &[h, 1]).unwrap();
            let mut acc = BinaryForm::zero(m);
            let mut pow = BinaryForm::from_ints(0, &[1]).unwrap();
            for i in 0..=m {
                acc = acc.add(&pow.scale(&f.coeff(i as usize)).with_bound(m).unwrap());
                pow = pow.mul(&line);
            }
            acc.with_bound(m).unwrap()
        };
        let pp = as_poly(&p);
        let lhs = BinaryForm::transvectant(&shift(&pp), &shift(&c), 2).unwrap();
        let rhs = shift(&BinaryForm::transvectant(&pp, &c, 2).unwrap());
        prop_assert!(same_values(&lhs, &rhs));
    }
}

#[test]
fn swapped_pairing_is_not_equivariant_for_unequal_degrees() {
    let p = BinaryForm::from_ints(2, &[1, 0, 0]).unwrap();
    let c = BinaryForm::quartic_ints([1, 0, 0, 0, 0]);
    let t = BinaryForm::curvature_bracket(&p, &c);
    assert!(!same_values(&transvectant_swapped(&p, &c, 2), &t));
}

#[test]
fn curvature_bracket_of_square() {
    let z = RationalFunction::var(Var(0));
    let mut rng = 17u64;
    let mut next = || {
        rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((rng >> 33) % 11) as i64 - 5
    };
    for _ in 0..20 {
        let (s0, s1) = (next(), next());
        let s1 = if s0 == 0 && s1 == 0 { 1 } else { s1 };
        let c: Vec<i64> = (0..5).map(|_| next()).collect();
        let s = &RationalFunction::from(s0) + &(&RationalFunction::from(s1) * &z);
        let p = &s * &s;
        let cz: RationalFunction = (0..5).map(|i| &RationalFunction::from(c[i]) * &z.pow(i as u32)).sum();
        let v = Var(0);
        let rhs = &(&p * &p) * &(&p * &(&cz / &(&p * &p)).derivative(v)).derivative(v);
        let pf = BinaryForm::from_ints(2, &[s0 * s0, 2 * s0 * s1, s1 * s1]).unwrap();
        let cf = BinaryForm::from_ints(4, &c).unwrap();
        let lhs = BinaryForm::curvature_bracket(&pf, &cf).eval_in(v);
        assert_eq!(lhs, rhs, "s = {s0} + {s1} z, C = {c:?}");
    }
}

#[test]
fn inner_product_examples() {
    let q = QuadraticForm::hyperbolic();
    assert_eq!(q.inner_product(&q), scalar(2));
    assert_eq!(QuadraticForm::elliptic().inner_product(&QuadraticForm::elliptic()), scalar(-2));
    assert_eq!(QuadraticForm::from_ints(1, 0, 0).inner_product(&QuadraticForm::from_ints(0, 0, 1)), ratio(-1, 1));
}
