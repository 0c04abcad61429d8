use qloc_core::weight_modules::{
    central_character, search_central, simple_quotient, CentralElementSet, ChiContext, ModVec, Tri, VermaModule,
};
use qloc_core::{CoreError, QScalar, RootDatum, Uq, UqElement, Weight, WeightCharacter};

fn a1() -> Uq {
    Uq::new(RootDatum::a1())
}

fn a2() -> Uq {
    Uq::new(RootDatum::a2())
}

#[test]
fn verma_highest_weight_relations() {
    for uq in [a1(), a2()] {
        let lam = WeightCharacter::Integral(uq.datum().rho());
        let m = VermaModule::new(&uq, lam.clone(), 3);
        let hw = m.highest();
        for i in 0..uq.datum().rank {
            assert!(m.act(&uq.e(i), &hw).unwrap().is_empty());
            let a = uq.datum().alpha(i);
            let got = m.act(&uq.k(a), &hw).unwrap();
            assert_eq!(got[&[0; 3]], uq.datum().char_value(&lam, &a));
        }
    }
}

#[test]
fn a1_e_on_f_highest() {
    let uq = a1();
    let f = uq.field();
    let x = f.q_pow(2) + QScalar::from_int(3);
    let lam = WeightCharacter::Formal(vec![x.clone()]);
    let m = VermaModule::new(&uq, lam.clone(), 4);
    let v = m.act(&uq.f(0), &m.highest()).unwrap();
    let w = m.act(&uq.e(0), &v).unwrap();
    let la = uq.datum().char_value(&lam, &uq.datum().alpha(0));
    let expect = &(&la - &la.inv().unwrap()) / &f.q_diff();
    assert_eq!(w[&[0; 3]], expect);
}

#[test]
fn verma_action_is_associative_and_overflows() {
    let uq = a2();
    let m = VermaModule::new(&uq, WeightCharacter::Integral(Weight::new(1, 2)), 4);
    let x = uq.multiply(&uq.e(0), &uq.f_root(1));
    let y = uq.multiply(&uq.f(1), &uq.f(0));
    let v: ModVec = m.act(&uq.f(0), &m.highest()).unwrap();
    let lhs = m.act(&uq.multiply(&x, &y), &v).unwrap();
    let rhs = m.act(&x, &m.act(&y, &v).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    let deep = uq.pow(&uq.f(0), 5);
    assert!(matches!(m.act(&deep, &m.highest()), Err(CoreError::DepthOverflow { .. })));
}

#[test]
fn verma_multiplicities_match_kostant() {
    for (uq, depth) in [(a1(), 8), (a2(), 5)] {
        let d = uq.datum().clone();
        let m = VermaModule::new(&uq, WeightCharacter::Integral(Weight::new(2, 0)), depth);
        let dims = m.weight_space_dims().unwrap();
        for (beta, n) in &dims {
            assert_eq!(*n as u64, d.kostant_partition(beta), "β = {beta}");
        }
        // every β of height ≤ depth in Q_+ appears
        let expected = uq.exps_up_to_height(depth).iter().map(|a| uq.exps_weight(a)).collect::<std::collections::BTreeSet<_>>();
        assert_eq!(dims.keys().copied().collect::<std::collections::BTreeSet<_>>(), expected);
    }
}

#[test]
fn shipped_central_elements_are_central() {
    for uq in [a1(), a2()] {
        let z = CentralElementSet::standard(&uq);
        assert!(z.all_central(&uq));
        assert_eq!(z.elements.len(), uq.datum().rank);
    }
}

#[test]
fn search_reproduces_the_shipped_span() {
    let uq = a2();
    let found = search_central(&uq, 2, 2);
    assert_eq!(found.len(), 2);
    let shipped = CentralElementSet::standard(&uq);
    let mut ech: qloc_core::linalg::Echelon<qloc_core::Monomial> = qloc_core::linalg::Echelon::new();
    for z in &found {
        ech.insert(z.terms().map(|(m, c)| (*m, c.clone())).collect());
    }
    for z in &shipped.elements {
        assert!(ech.contains(&z.terms().map(|(m, c)| (*m, c.clone())).collect()));
    }
    let a1 = a1();
    assert_eq!(search_central(&a1, 2, 2).len(), 1);
}

#[test]
fn central_character_matches_verma_action() {
    for uq in [a1(), a2()] {
        let z = CentralElementSet::standard(&uq);
        let d = uq.datum().clone();
        for lam in [d.rho(), Weight::ZERO, Weight::new(2, 0), Weight::new(-1, 0)] {
            let lam = WeightCharacter::Integral(lam);
            let chi = central_character(&uq, &lam, &z);
            let shifted = d.char_shift(&lam, &-d.rho());
            let m = VermaModule::new(&uq, shifted, 4);
            for (x, c) in z.elements.iter().zip(&chi) {
                let v = m.act(x, &m.highest()).unwrap();
                assert_eq!(v.len(), 1);
                assert_eq!(&v[&[0; 3]], c);
                // also on a lower vector: central elements act by the same scalar
                let low = m.act(&uq.f(0), &m.highest()).unwrap();
                let zl = m.act(x, &low).unwrap();
                assert_eq!(zl, low.iter().map(|(k, y)| (*k, y * c)).collect());
            }
        }
    }
}

#[test]
fn chi_examples() {
    let uq = a1();
    let ctx = ChiContext::new(&uq);
    let w = |n| WeightCharacter::Integral(Weight::new(n, 0));
    let s = &uq.datum().weyl_group()[1];
    assert!(ctx.chi_equal(&w(3), &uq.datum().weyl_act(s, &w(3))));
    for n in 0..5 {
        assert!(ctx.chi_equal(&w(n), &w(-n)));
    }
    assert!(!ctx.chi_equal(&w(1), &w(3)));
    assert!(!ctx.chi_equal(&w(2), &w(4)));
}

#[test]
fn chi_is_w_invariant_and_separates_orbits() {
    for uq in [a1(), a2()] {
        let ctx = ChiContext::new(&uq);
        let d = uq.datum().clone();
        let r = if d.rank == 1 { 0 } else { 3 };
        let mut pts = Vec::new();
        for a in -3..=3 {
            for b in -r..=r {
                pts.push(Weight::new(a, b));
            }
        }
        for p in &pts {
            for w in d.weyl_group() {
                let l = WeightCharacter::Integral(*p);
                assert!(ctx.chi_equal(&l, &d.weyl_act(w, &l)));
            }
            for p2 in &pts {
                let eq = ctx.chi_equal(&WeightCharacter::Integral(*p), &WeightCharacter::Integral(*p2));
                assert_eq!(eq, ctx.same_orbit(p, p2), "{p} vs {p2}");
            }
        }
    }
}

#[test]
fn dominance_examples() {
    let uq = a1();
    let ctx = ChiContext::new(&uq);
    let rho = WeightCharacter::Integral(uq.datum().rho());
    let zero = WeightCharacter::Integral(Weight::ZERO);
    let mrho = WeightCharacter::Integral(-uq.datum().rho());
    assert!(ctx.is_dominant(&rho, 6).holds());
    assert!(ctx.is_regular_dominant(&rho, 6).holds());
    assert!(ctx.is_dominant(&zero, 6).holds());
    assert!(!ctx.is_regular_dominant(&zero, 6).holds());
    assert_eq!(ctx.regularity_search(&zero, 4).status, Tri::False);
    assert!(!ctx.is_dominant(&mrho, 6).holds());
    assert_eq!(ctx.dominance_search(&mrho, 6).status, Tri::False);
    // a formal character far from the integral lattice: no coincidence found
    let f = uq.field();
    let formal = WeightCharacter::Formal(vec![&f.q_pow(3) + &QScalar::from_int(2)]);
    let dec = ctx.is_dominant(&formal, 4);
    assert_eq!(dec.status, Tri::UnknownAtBound);
    assert!(dec.holds());
}

#[test]
fn simple_quotients() {
    let uq = a1();
    for n in 0..5 {
        let s = simple_quotient(&uq, &Weight::new(n, 0), n as u32 + 1).unwrap();
        assert_eq!(s.dim(), n as usize + 1);
    }
    assert!(matches!(simple_quotient(&uq, &Weight::new(3, 0), 3), Err(CoreError::DepthTooSmall { .. })));
    assert!(simple_quotient(&uq, &Weight::new(-1, 0), 3).is_err());
    let uq = a2();
    let d = uq.datum().clone();
    let s = simple_quotient(&uq, &d.omega(0), 3).unwrap();
    assert_eq!(s.dim(), 3);
    let ws: Vec<Weight> = s.weights.iter().map(|x| x.0).collect();
    for w in [d.omega(0), d.omega(0) - d.alpha(0), d.omega(0) - d.alpha(0) - d.alpha(1)] {
        assert!(ws.contains(&w));
    }
    let s = simple_quotient(&uq, &d.rho(), 5).unwrap();
    assert_eq!(s.dim() as u64, d.weyl_dim(&d.rho()).unwrap());
}

#[test]
fn casimir_value_on_highest_vector() {
    let uq = a1();
    let z = CentralElementSet::standard(&uq);
    let f = uq.field();
    let lam = WeightCharacter::Integral(Weight::new(3, 0));
    let chi = central_character(&uq, &lam, &z);
    // on M_{λ−ρ} = M_{2ω}: (q·q^2 + q⁻¹·q^{-2})/(q − q⁻¹)^2
    let expect = &(f.q_pow(3) + f.q_pow(-3)) * &f.q_diff().pow(-2);
    assert_eq!(chi, vec![expect]);
    let _ = UqElement::one();
}
