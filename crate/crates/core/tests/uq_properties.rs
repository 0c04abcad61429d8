use qloc_core::{Gen, QScalar, RootDatum, Strategy, Uq, UqElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn both() -> Vec<Uq> {
    vec![Uq::new(RootDatum::a1()), Uq::new(RootDatum::a2())]
}

#[test]
fn defining_relations_vanish_under_both_engines() {
    for uq in both() {
        for (name, rel) in uq.defining_relations() {
            assert!(uq.normal_form_sum(&rel).is_zero(), "structured: {name}");
            for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(7)] {
                assert!(uq.rewrite_normal_form(&rel, s).is_zero(), "rewrite {s:?}: {name}");
            }
        }
    }
}

#[test]
fn rewriting_orders_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for uq in both() {
        for trial in 0..100 {
            let len = rng.random_range(0..=6);
            let w = uq.random_word(&mut rng, len);
            let words = vec![(w.clone(), QScalar::one())];
            let base = uq.normal_form(&w);
            for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(trial)] {
                assert_eq!(uq.rewrite_normal_form(&words, s), base, "{w:?} under {s:?}");
            }
        }
    }
}

#[test]
fn e_times_f_squared_matches_word() {
    let uq = Uq::new(RootDatum::a1());
    let f2 = uq.pow(&uq.f(0), 2);
    let x = uq.multiply(&uq.e(0), &f2);
    let w = vec![(vec![Gen::E(0), Gen::F(0), Gen::F(0)], QScalar::one())];
    assert_eq!(x, uq.rewrite_normal_form(&w, Strategy::Leftmost));
    assert_eq!(uq.multiply(&UqElement::one(), &x), x);
    let w2 = uq.k(uq.datum().omega(0));
    assert_eq!(uq.multiply(&w2, &w2), uq.k(uq.datum().alpha(0)));
}

#[test]
fn associativity_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for uq in both() {
        for _ in 0..15 {
            let x = uq.random_element(&mut rng, 2, 3);
            let y = uq.random_element(&mut rng, 2, 3);
            let z = uq.random_element(&mut rng, 2, 3);
            let l = uq.multiply(&uq.multiply(&x, &y), &z);
            let r = uq.multiply(&x, &uq.multiply(&y, &z));
            assert_eq!(l, r);
        }
    }
}

#[test]
fn hopf_axioms_on_generators_and_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for uq in both() {
        let mut samples = uq.generators();
        for r in 0..uq.n_roots() {
            samples.push(uq.e_root(r));
            samples.push(uq.f_root(r));
        }
        for _ in 0..8 {
            samples.push(uq.random_element(&mut rng, 2, 3));
        }
        for x in &samples {
            assert!(uq.counit_axiom(x), "counit {}", uq.render(x));
            assert!(uq.antipode_axiom(x), "antipode {}", uq.render(x));
            assert!(uq.coassociative_on(x), "coassociativity {}", uq.render(x));
        }
        for _ in 0..6 {
            let x = uq.random_element(&mut rng, 2, 2);
            let y = uq.random_element(&mut rng, 2, 2);
            let lhs = uq.coproduct(&uq.multiply(&x, &y));
            let rhs = uq.tensor_mul(&uq.coproduct(&x), &uq.coproduct(&y));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn coproduct_and_counit_values() {
    let uq = Uq::new(RootDatum::a1());
    let k = uq.k(uq.datum().omega(0));
    assert_eq!(uq.coproduct(&k), qloc_core::UqTensor::pure(&k, &k));
    assert!(uq.counit(&uq.e(0)).is_zero());
    assert!(uq.counit(&k).is_one());
}

#[test]
fn adjoint_action_examples() {
    let uq = Uq::new(RootDatum::a2());
    let v = uq.multiply(&uq.f(0), &uq.e(1));
    assert_eq!(uq.adjoint_act(&UqElement::one(), &v), v);
    let mu = uq.datum().omega(0);
    let a = uq.datum().alpha(0);
    let got = uq.adjoint_act(&uq.k(mu), &uq.f(0));
    let expect = uq.f(0).scale(&uq.qp(-uq.datum().pairing(&mu, &a)));
    assert_eq!(got, expect);

    let a1 = Uq::new(RootDatum::a1());
    let km = a1.k(-a1.datum().alpha(0));
    let e = a1.e(0);
    // oracle: u1 v S(u2) with Δ(E) = E⊗1 + K_α⊗E and S(1) = 1, S(E) = −K_{−α}E
    let ka = a1.k(a1.datum().alpha(0));
    let s_e = a1.multiply(&a1.k(-a1.datum().alpha(0)), &e).neg();
    let oracle = a1.multiply(&e, &km).add(&a1.product(&[ka, km.clone(), s_e]));
    let got = a1.adjoint_act(&e, &km);
    assert_eq!(got, oracle);
    assert!(!got.is_zero());
}

#[test]
fn adjoint_action_is_an_algebra_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for uq in both() {
        for _ in 0..5 {
            let u = uq.random_element(&mut rng, 1, 2);
            let u2 = uq.random_element(&mut rng, 1, 2);
            let v = uq.random_element(&mut rng, 1, 2);
            let lhs = uq.adjoint_act(&uq.multiply(&u, &u2), &v);
            let rhs = uq.adjoint_act(&u, &uq.adjoint_act(&u2, &v));
            assert_eq!(lhs, rhs);
        }
        // module-algebra property on generators
        let (v, w) = (uq.f(0), uq.e(uq.datum().rank - 1));
        for u in uq.generators() {
            let lhs = uq.adjoint_act(&u, &uq.multiply(&v, &w));
            let d = uq.coproduct(&u);
            let mut rhs = UqElement::zero();
            for ((a, b), c) in &d.terms {
                let x = uq.adjoint_act(&UqElement::monomial(*a, QScalar::one()), &v);
                let y = uq.adjoint_act(&UqElement::monomial(*b, QScalar::one()), &w);
                rhs.add_scaled(&uq.multiply(&x, &y), c);
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn filtration_is_compatible_with_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for uq in both() {
        for _ in 0..20 {
            let x = uq.random_element(&mut rng, 1, 3);
            let y = uq.random_element(&mut rng, 1, 3);
            let xy = uq.multiply(&x, &y);
            if x.is_zero() || y.is_zero() || xy.is_zero() {
                continue;
            }
            let (dx, dy) = (uq.filtration_degree(&x).unwrap(), uq.filtration_degree(&y).unwrap());
            let dxy = uq.filtration_degree(&xy).unwrap();
            assert!(dxy <= dx + dy);
            if x.len() == 1 && y.len() == 1 {
                assert_eq!(dxy, dx + dy);
            }
        }
    }
}

#[test]
fn ad_orbit_probe_examples() {
    let uq = Uq::new(RootDatum::a1());
    assert_eq!(uq.ad_orbit_probe(&UqElement::one(), 3), (1, true));
    let a = uq.datum().alpha(0);
    let (d, stable) = uq.ad_orbit_probe(&uq.k(-a), 4);
    assert_eq!((d, stable), (4, true));
    let (_, stable) = uq.ad_orbit_probe(&uq.k(a), 6);
    assert!(!stable);
}
