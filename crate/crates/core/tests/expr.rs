use qloc_core::expr::{parse_dq, parse_oq, parse_uq};
use qloc_core::oq_dq::{Dq, DqElement, Oq};
use qloc_core::{CoreError, QScalar, RootDatum, Uq, Weight};

#[test]
fn uq_expressions() {
    let uq = Uq::new(RootDatum::a2());
    let f = uq.field();
    let x = parse_uq(&uq, "E1*E2 - q^(-1)*E2*E1").unwrap();
    let expected = uq
        .multiply(&uq.e(0), &uq.e(1))
        .sub(&uq.multiply(&uq.e(1), &uq.e(0)).scale(&f.q_pow(-1)));
    assert_eq!(x, expected);
    assert_eq!(parse_uq(&uq, "E12").unwrap(), uq.e_root(1));
    assert_eq!(parse_uq(&uq, "K(1,-1)").unwrap(), uq.k(Weight::new(1, -1)));
    assert_eq!(parse_uq(&uq, "2*F1^2/2 - F1*F1").unwrap(), parse_uq(&uq, "0").unwrap());
    assert_eq!(parse_uq(&uq, "v^6").unwrap(), parse_uq(&uq, "q").unwrap());
    assert_eq!(parse_uq(&uq, "(q - q^-1)^0").unwrap(), qloc_core::UqElement::one());
}

#[test]
fn oq_and_dq_expressions() {
    let oq = Oq::new();
    let f = oq.uq().field();
    // the quantum determinant
    let det = parse_oq(&oq, "a*d - q*b*c").unwrap();
    assert_eq!(det, oq.quantum_det());
    assert_eq!(parse_oq(&oq, "d*a - q^-1*b*c").unwrap(), oq.quantum_det());
    let dq = Dq::new();
    let ea = parse_dq(&dq, "E1*a").unwrap();
    let expected = DqElement::pure(&oq.a(), &dq.oq().uq().e(0)).scale(&f.q());
    assert_eq!(ea, expected);
    assert_eq!(parse_dq(&dq, "a*E1").unwrap(), DqElement::pure(&oq.a(), &dq.oq().uq().e(0)));
    assert_eq!(
        parse_dq(&dq, "3").unwrap(),
        DqElement::one().scale(&QScalar::from_int(3))
    );
}

#[test]
fn parse_errors() {
    let uq = Uq::new(RootDatum::a1());
    for bad in ["", "E1 *", "E3", "K(1,0)", "E1^-1", "E1/F1", "(E1", "E1 $ F1", "1/0"] {
        assert!(parse_uq(&uq, bad).is_err(), "{bad}");
    }
    assert_eq!(parse_uq(&uq, "1/0").unwrap_err(), CoreError::DivisionByZero);
    assert!(parse_oq(&Oq::new(), "E1").is_err());
}
