use ambitoric::algebra::{gcd, gcd_subresultant, parse_scalar, ratio, Monomial, Polynomial, RationalFunction, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -6i64..=6), 1..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(
            terms.into_iter().map(|(a, b, c, k)| (Monomial::from_exponents(&[a, b, c]), BigInt::from(k))),
        )
    })
}

fn nonzero_poly(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly_strategy(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun_strategy() -> impl Strategy<Value = RationalFunction> {
    (poly_strategy(4), nonzero_poly(3)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn divides(d: &Polynomial, p: &Polynomial) -> bool {
    p.is_zero() || p.div_exact(d).is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_routes_agree(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let ac = &a * &c;
        let bc = &b * &c;
        let g1 = gcd(&ac, &bc);
        let g2 = gcd_subresultant(&ac, &bc);
        prop_assert!(divides(&g1, &ac) && divides(&g1, &bc));
        prop_assert!(divides(&c, &g1), "common factor {} lost in {}", c, g1);
        prop_assert!(divides(&g1, &g2) && divides(&g2, &g1));
    }

    #[test]
    fn field_axioms(f in ratfun_strategy(), g in ratfun_strategy(), h in ratfun_strategy()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            prop_assert_eq!(&(&f / &g) * &g, f.clone());
        }
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn canonical_form_is_unique(f in ratfun_strategy(), k in nonzero_poly(2)) {
        // multiplying numerator and denominator by a common factor changes nothing
        let g = RationalFunction::new(f.numerator() * &k, f.denominator() * &k).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert!(f.denominator().leading_coeff() > BigInt::from(0));
        prop_assert!(gcd(f.numerator(), f.denominator()).is_constant() || f.numerator().is_zero());
    }

    #[test]
    fn leibniz_rule(f in ratfun_strategy(), g in ratfun_strategy()) {
        let v = Var(0);
        let lhs = (&f * &g).derivative(v);
        let rhs = &(&f.derivative(v) * &g) + &(&f * &g.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfun_strategy(), g in ratfun_strategy(), a in -4i64..=4, b in -4i64..=4) {
        let pt = [Some(ratio(a, 1)), Some(ratio(b, 3)), Some(ratio(1, 2))];
        if let (Ok(fv), Ok(gv), Ok(pv)) = (f.evaluate(&pt), g.evaluate(&pt), (&f * &g).evaluate(&pt)) {
            prop_assert_eq!(pv, fv * gv);
        }
    }
}

#[test]
fn rational_literals() {
    assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
    assert!(parse_scalar("1//2").is_err());
    assert!(parse_scalar("1/0").is_err());
}
