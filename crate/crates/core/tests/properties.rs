use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qloc_core::scalars::Poly;
use qloc_core::{QField, QScalar, RootDatum, Uq, Weight};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..4).prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (poly(), poly(), -3i64..=3).prop_filter_map("zero denominator", |(n, d, k)| {
        let x = QScalar::from_polys(n, d).ok()?;
        Some(&x * &QScalar::v_pow(k))
    })
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    (-6i64..=6, -6i64..=6).prop_map(move |(a, b)| Weight::new(a, if rank == 1 { 0 } else { b }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn canonical_strings_round_trip(a in scalar()) {
        let s = a.to_string();
        let back: QScalar = s.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in scalar(), b in scalar(), n in 1i64..=7, d in 1i64..=5) {
        let f = QField::new(1);
        let p = BigRational::new(BigInt::from(n), BigInt::from(d));
        if let (Ok(x), Ok(y)) = (f.evaluate(&a, &p, 4), f.evaluate(&b, &p, 4)) {
            prop_assert_eq!(f.evaluate(&(&a * &b), &p, 4).unwrap().value, &x.value * &y.value);
            prop_assert_eq!(f.evaluate(&(&a + &b), &p, 4).unwrap().value, &x.value + &y.value);
        }
    }

    #[test]
    fn q_integers_are_odd(n in -50i64..=50, l in 1u32..=6) {
        let f = QField::new(l);
        prop_assert_eq!(f.q_int(-n), &QScalar::zero() - &f.q_int(n));
    }

    #[test]
    fn q_integer_addition(m in -20i64..=20, n in -20i64..=20) {
        let f = QField::new(4);
        let rhs = &(&f.q_pow(n) * &f.q_int(m)) + &(&f.q_pow(-m) * &f.q_int(n));
        prop_assert_eq!(f.q_int(m + n), rhs);
    }

    #[test]
    fn pairing_is_weyl_invariant(mu in weight(2), nu in weight(2), a1 in any::<bool>()) {
        let d = if a1 { RootDatum::a1() } else { RootDatum::a2() };
        let (mu, nu) = if a1 { (Weight::new(mu.0[0], 0), Weight::new(nu.0[0], 0)) } else { (mu, nu) };
        for w in d.weyl_group() {
            prop_assert_eq!(d.pairing(&d.weyl_act_weight(w, &mu), &d.weyl_act_weight(w, &nu)), d.pairing(&mu, &nu));
        }
    }

    #[test]
    fn a2_kostant_partition_closed_form(a in 0i64..=4, b in 0i64..=4) {
        // aα1 + bα2 = k(α1+α2) + (a−k)α1 + (b−k)α2 for 0 ≤ k ≤ min(a, b)
        let d = RootDatum::a2();
        let beta = a * d.alpha(0) + b * d.alpha(1);
        let p = d.kostant_partition(&beta);
        if a > 0 {
            prop_assert!(p >= d.kostant_partition(&(beta - d.alpha(0))));
        }
        prop_assert_eq!(p as i64, a.min(b) + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn uq_multiplication_is_associative(seed in any::<u64>(), a2 in any::<bool>()) {
        use rand::SeedableRng;
        let uq = Uq::new(if a2 { RootDatum::a2() } else { RootDatum::a1() });
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let x = uq.random_element(&mut rng, 2, 2);
        let y = uq.random_element(&mut rng, 2, 2);
        let z = uq.random_element(&mut rng, 1, 2);
        prop_assert_eq!(uq.multiply(&uq.multiply(&x, &y), &z), uq.multiply(&x, &uq.multiply(&y, &z)));
        prop_assert_eq!(uq.counit(&uq.multiply(&x, &y)), &uq.counit(&x) * &uq.counit(&y));
    }
}
