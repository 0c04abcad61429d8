use qloc_core::oq_dq::{
    check_conjugation_factor, check_pullback_trivialization, check_tensor_trivialization, gamma_dlambda_graded_dim,
    induction, mono_letters, monomials_up_to, sections, BComodule, Dq, DqElement, EquivariantModule, GComodule, Oq,
    OqElement, A, B, C, D,
};
use qloc_core::{Monomial, QScalar, UqElement, Weight, WeightCharacter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spanning_uq(oq: &Oq, max: u32) -> Vec<UqElement> {
    let a = oq.uq().datum().alpha(0);
    let om = oq.uq().datum().omega(0);
    let mut out = Vec::new();
    for fa in 0..=max {
        for eb in 0..=max {
            for k in [Weight::ZERO, om, -om, a] {
                out.push(UqElement::monomial(Monomial { f: [fa, 0, 0], k, e: [eb, 0, 0] }, QScalar::one()));
            }
        }
    }
    out
}

#[test]
fn relations_hold_in_normal_form() {
    let oq = Oq::new();
    for (name, rel) in oq.defining_relations() {
        let mut x = OqElement::zero();
        for (w, c) in &rel {
            x.add_scaled(&oq.word(w), c);
        }
        assert!(x.is_zero(), "{name}");
    }
    assert_eq!(oq.quantum_det(), OqElement::one());
    let f = oq.field();
    assert_eq!(oq.multiply(&oq.a(), &oq.b()), oq.word(&[B, A]).scale(&f.q()));
    let x = oq.word(&[D, B, A, C]);
    assert_eq!(oq.multiply(&OqElement::one(), &x), x);
}

#[test]
fn defining_relations_pair_to_zero() {
    let oq = Oq::new();
    let us = spanning_uq(&oq, 2);
    for (name, rel) in oq.defining_relations() {
        for u in &us {
            let s: QScalar = rel.iter().map(|(w, c)| c * &oq.pair_word(u, w)).sum();
            assert!(s.is_zero(), "{name} against {}", oq.uq().render(u));
        }
    }
}

#[test]
fn multiplication_agrees_with_pairing() {
    let oq = Oq::new();
    let us = spanning_uq(&oq, 3);
    let monos = monomials_up_to(2);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..12 {
        let x = monos[rng.random_range(0..monos.len())];
        let y = monos[rng.random_range(0..monos.len())];
        let mut word = mono_letters(&x);
        word.extend(mono_letters(&y));
        let prod = oq.multiply(&OqElement::monomial(x, QScalar::one()), &OqElement::monomial(y, QScalar::one()));
        for u in &us {
            assert_eq!(oq.pair_word(u, &word), oq.pair(u, &prod), "{x:?}·{y:?}");
        }
    }
}

#[test]
fn pairing_and_actions_match_the_defining_module() {
    let oq = Oq::new();
    let uq = oq.uq();
    let f = oq.field();
    let a = uq.datum().alpha(0);
    assert_eq!(oq.pair(&uq.k(a), &oq.a()), f.q());
    assert_eq!(oq.pair(&uq.e(0), &oq.b()), QScalar::one());
    assert_eq!(oq.left_act(&UqElement::one(), &oq.b()), oq.b());
    // E▷x_12 = x_11, F▷x_11 = x_12
    assert_eq!(oq.left_act(&uq.e(0), &oq.b()), oq.a());
    assert_eq!(oq.left_act(&uq.f(0), &oq.c()), oq.d());
    assert_eq!(oq.right_act(&oq.c(), &uq.f(0)), oq.a());
    assert!(oq.right_act(&oq.c(), &uq.e(0)).is_zero());
    // ε(u▷x) = (u, x)
    let us = spanning_uq(&oq, 2);
    for m in monomials_up_to(3) {
        let x = OqElement::monomial(m, QScalar::one());
        for u in &us {
            assert_eq!(oq.counit(&oq.left_act(u, &x)), oq.pair(u, &x));
            assert_eq!(oq.counit(&oq.right_act(&x, u)), oq.pair(u, &x));
        }
    }
}

#[test]
fn actions_are_module_algebra_actions_and_commute() {
    let oq = Oq::new();
    let uq = oq.uq();
    let gens = uq.generators();
    let xs = [oq.a(), oq.b(), oq.c(), oq.d()];
    for u in &gens {
        for v in &gens {
            for x in &xs {
                let l = oq.right_act(&oq.left_act(u, x), v);
                let r = oq.left_act(u, &oq.right_act(x, v));
                assert_eq!(l, r);
                let uv = uq.multiply(u, v);
                assert_eq!(oq.left_act(&uv, x), oq.left_act(u, &oq.left_act(v, x)));
                assert_eq!(oq.right_act(x, &uv), oq.right_act(&oq.right_act(x, u), v));
            }
        }
        for x in &xs {
            for y in &xs {
                let lhs = oq.left_act(u, &oq.multiply(x, y));
                let mut rhs = OqElement::zero();
                for ((m1, m2), c) in &uq.coproduct(u).terms {
                    let x1 = oq.left_act(&UqElement::monomial(*m1, QScalar::one()), x);
                    let y1 = oq.left_act(&UqElement::monomial(*m2, QScalar::one()), y);
                    rhs.add_scaled(&oq.multiply(&x1, &y1), c);
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn hopf_structure_on_oq() {
    let oq = Oq::new();
    for m in monomials_up_to(3) {
        let x = OqElement::monomial(m, QScalar::one());
        assert!(oq.antipode_axiom(&x), "{m:?}");
        assert_eq!(oq.antipode_inv(&oq.antipode(&x)), x);
    }
}

#[test]
fn coaction_examples() {
    let oq = Oq::new();
    let t = oq.coact_b(&OqElement::one());
    assert_eq!(t.len(), 1);
    let t = oq.coact_b(&oq.a());
    // a ↦ a ⊗ a + b ⊗ π(c) = a ⊗ a
    assert_eq!(t.len(), 1);
    assert!(t[&([1, 0, 0, 0], (1, 0))].is_one());
    let lb = EquivariantModule::line_bundle(2, 2);
    assert!(lb.action_is_comodule_map(&oq).unwrap());
}

#[test]
fn section_dimensions() {
    let oq = Oq::new();
    for n in 0..=4i64 {
        let s = sections(&oq, n, n as u32 + 2).unwrap();
        assert_eq!(s.dim(), n as usize + 1, "n = {n}");
        assert!(s.certified);
    }
    for n in -3..=-1 {
        let s = sections(&oq, n, 3).unwrap();
        assert_eq!(s.dim(), 0, "n = {n}");
    }
    // Γ(O(1)) = span{a, c}
    let s = sections(&oq, 1, 2).unwrap();
    let keys: Vec<_> = s.basis.iter().flat_map(|v| v.keys().map(|k| k.0)).collect();
    assert!(keys.iter().all(|m| *m == [1, 0, 0, 0] || *m == [0, 0, 1, 0]));
}

#[test]
fn induction_examples() {
    let oq = Oq::new();
    assert_eq!(induction(&oq, &BComodule::trivial(), 2).unwrap().dim(), 1);
    assert_eq!(induction(&oq, &BComodule::character(1), 3).unwrap().dim(), 0);
    assert_eq!(induction(&oq, &BComodule::character(-3), 5).unwrap().dim(), 4);
    let v = GComodule::simple(&oq, 1).restrict(&oq);
    assert!(v.is_comodule(&oq));
    // Ind(V|B) = V for V = V_1
    assert_eq!(induction(&oq, &v, 3).unwrap().dim(), 2);
}

#[test]
fn trivializations_are_isomorphisms() {
    let oq = Oq::new();
    for n in [1, 2] {
        let v = GComodule::simple(&oq, n);
        for twist in [0, 1] {
            let c = check_pullback_trivialization(&oq, &v, twist, 2);
            assert!(c.passed(), "{c:?}");
            let c = check_tensor_trivialization(&oq, &v, twist, 2);
            assert!(c.passed(), "{c:?}");
        }
    }
    let c = check_tensor_trivialization(&oq, &GComodule::trivial(), 0, 2);
    assert!(c.passed());
}

#[test]
fn conjugation_factor_sign() {
    let oq = Oq::new();
    let neg = check_conjugation_factor(&oq, 1, 1, -1, 3);
    let pos = check_conjugation_factor(&oq, 1, 1, 1, 3);
    // with weights read off the diagonal O_q(B) coefficient the factor that
    // intertwines is q^{+<μ,φ>}
    assert!(pos.failing_weights.is_empty(), "{pos:?}");
    assert!(!neg.failing_weights.is_empty());
}

#[test]
fn smash_product_examples() {
    let dq = Dq::new();
    let oq = dq.oq();
    let uq = oq.uq();
    let f = oq.field();
    let a = DqElement::from_oq(&oq.a());
    let b = DqElement::from_oq(&oq.b());
    assert_eq!(dq.multiply(&a, &b), DqElement::from_oq(&oq.multiply(&oq.a(), &oq.b())));
    let ka = uq.k(uq.datum().alpha(0));
    let lhs = dq.multiply(&DqElement::from_uq(&ka), &a);
    assert_eq!(lhs, DqElement::pure(&oq.a(), &ka).scale(&f.q()));
    // (1⊗E)(b⊗1) = E▷b ⊗ 1 + K_α▷b ⊗ E
    let lhs = dq.multiply(&DqElement::from_uq(&uq.e(0)), &b);
    let rhs = DqElement::from_oq(&oq.a()).add(&DqElement::pure(&oq.b(), &uq.e(0)).scale(&f.q_pow(-1)));
    assert_eq!(lhs, rhs);
}

#[test]
fn smash_product_is_associative() {
    let dq = Dq::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10 {
        let x = dq.random_element(&mut rng, 2);
        let y = dq.random_element(&mut rng, 2);
        let z = dq.random_element(&mut rng, 2);
        assert_eq!(dq.multiply(&dq.multiply(&x, &y), &z), dq.multiply(&x, &dq.multiply(&y, &z)));
    }
}

#[test]
fn equivariant_action() {
    let dq = Dq::new();
    let oq = dq.oq();
    let uq = oq.uq();
    let x = DqElement::from_oq(&oq.a());
    assert_eq!(dq.equivariant_act(&UqElement::one(), &x).unwrap(), x);
    let om = uq.datum().omega(0);
    let fa = DqElement::from_uq(&uq.f(0));
    let got = dq.equivariant_act(&uq.k(om), &fa).unwrap();
    assert_eq!(got, fa.scale(&uq.qp(-uq.datum().pairing(&om, &uq.datum().alpha(0)))));
    assert!(dq.equivariant_act(&uq.f(0), &x).is_err());
    // module-algebra identity
    let y = fa.clone();
    for u in [uq.e(0), uq.k(om), uq.multiply(&uq.e(0), &uq.e(0))] {
        let lhs = dq.equivariant_act(&u, &dq.multiply(&x, &y)).unwrap();
        let mut rhs = DqElement::zero();
        for ((m1, m2), c) in &uq.coproduct(&u).terms {
            let l = dq.equivariant_act(&UqElement::monomial(*m1, QScalar::one()), &x).unwrap();
            let r = dq.equivariant_act(&UqElement::monomial(*m2, QScalar::one()), &y).unwrap();
            rhs.add_scaled(&dq.multiply(&l, &r), c);
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn dlambda_reduction() {
    let dq = Dq::new();
    let uq = dq.oq().uq();
    let f = uq.field();
    let d = uq.datum();
    for lam in [Weight::ZERO, Weight::new(2, 0), Weight::new(-3, 0)] {
        let lam = WeightCharacter::Integral(lam);
        assert!(dq.dlambda_reduce(&DqElement::from_uq(&uq.e(0)), &lam).is_empty());
        let r = dq.dlambda_reduce(&DqElement::from_uq(&uq.k_alpha(0)), &lam);
        assert_eq!(r[&([0; 4], [0; 3])], d.char_value(&lam, &d.alpha(0)));
        // X·(1⊗E) reduces to zero
        let x = DqElement::from_oq(&dq.oq().b()).add(&DqElement::from_uq(&uq.f(0)));
        assert!(dq.dlambda_reduce(&dq.multiply(&x, &DqElement::from_uq(&uq.e(0))), &lam).is_empty());
        // 1⊗EF ↦ (λ(α) − λ(α)⁻¹)/(q − q⁻¹)
        let ef = uq.multiply(&uq.e(0), &uq.f(0));
        let r = dq.dlambda_reduce(&DqElement::from_uq(&ef), &lam);
        let la = d.char_value(&lam, &d.alpha(0));
        let got = r.get(&([0; 4], [0; 3])).cloned().unwrap_or_default();
        assert_eq!(got, &(&la - &la.inv().unwrap()) / &f.q_diff());
        // FE lies in U_q I
        let fe = uq.multiply(&uq.f(0), &uq.e(0));
        assert!(dq.dlambda_reduce(&DqElement::from_uq(&fe), &lam).is_empty());
    }
}

#[test]
fn graded_section_dimensions() {
    let oq = Oq::new();
    for lam in [0, 2, 4] {
        let l = WeightCharacter::Integral(Weight::new(lam, 0));
        let dims: Vec<usize> = (0..4).map(|j| gamma_dlambda_graded_dim(&oq, &l, j).unwrap()).collect();
        assert_eq!(dims, vec![1, 3, 5, 7], "λ = {lam}");
    }
    let _ = (A, C, D);
}
