//! Exact coefficient arithmetic in the rational function field Q(v).
//!
//! Every coefficient in the engine is a [`QScalar`]: a reduced fraction of two
//! integer polynomials in a formal variable `v`. The quantum parameter is
//! `q = v^L` where `L` is fixed by the root datum (see [`QField`]), so that
//! all fractional powers `q^{<mu,nu>/2}` needed by the braiding bicharacter
//! are integral powers of `v`.
//!
//! Canonical form: `gcd(num, den) = 1` in `Z[v]` and the leading coefficient
//! of `den` is positive. Two scalars are equal iff their representations are.

use std::cmp::{max, Ordering};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CoreError;

/// Dense integer polynomial in `v`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly { coeffs: vec![c] }.trim()
    }

    /// `c * v^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Poly { coeffs }.trim()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Index of the lowest nonzero coefficient.
    fn low_degree(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn div_scalar(&self, c: &BigInt) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn add_ref(&self, other: &Poly) -> Poly {
        let n = max(self.coeffs.len(), other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly { coeffs }.trim()
    }

    fn neg_ref(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn sub_ref(&self, other: &Poly) -> Poly {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }.trim()
    }

    /// Pseudo-remainder of `self` by `b`.
    fn prem(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().clone();
            r = r.scale(&lb).sub_ref(&b.shift_up(dr - db).scale(&lr));
        }
        r
    }

    /// Exact quotient in `Z[v]`; panics if `b` does not divide `self`.
    fn div_exact(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lc();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            assert!(dr >= db, "inexact polynomial division");
            let (c, rem) = r.lc().div_rem(lb);
            assert!(rem.is_zero(), "inexact polynomial division");
            q[dr - db] = c.clone();
            r = r.sub_ref(&b.shift_up(dr - db).scale(&c));
        }
        Poly { coeffs: q }.trim()
    }

    /// Primitive gcd with positive leading coefficient.
    fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one();
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "v^{k}")?,
                (_, false) => write!(f, "{abs}*v^{k}")?,
            }
        }
        Ok(())
    }
}

/// An element of Q(v) in reduced canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: Poly,
    den: Poly,
}

impl QScalar {
    fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QScalar::zero();
        }
        let (mut num, mut den) = (num, den);
        // common powers of v
        let k = num.low_degree().min(den.low_degree());
        if k > 0 {
            num = num.shift_down(k);
            den = den.shift_down(k);
        }
        if den.degree() != Some(0) && !den.is_monomial() && !num.is_monomial() {
            let g = num.gcd(&den);
            if g.degree().unwrap_or(0) > 0 {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.lc().is_negative() {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        QScalar { num, den }
    }

    pub fn zero() -> Self {
        QScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: Poly::constant(BigInt::from(n)),
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QScalar::from_parts(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
    }

    /// Build `num/den` from polynomials, reducing to canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self, CoreError> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(QScalar::from_parts(num, den))
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> Self {
        let m = Poly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            QScalar {
                num: m,
                den: Poly::one(),
            }
        } else {
            QScalar {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(QScalar::from_parts(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = QScalar::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `v = point`; fails on a pole.
    pub fn eval_at(&self, point: &BigRational) -> Result<BigRational, CoreError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(CoreError::SpecializationPole(point.to_string()));
        }
        Ok(self.num.eval(point) / d)
    }

    /// Returns the value when the scalar is a constant (no `v` dependence).
    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(BigRational::zero()),
            (Some(0), Some(0)) => Some(BigRational::new(
                self.num.coeffs[0].clone(),
                self.den.coeffs[0].clone(),
            )),
            _ => None,
        }
    }
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}

impl<'a> Add<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QScalar::from_parts(self.num.add_ref(&rhs.num), self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            // Laurent-type denominators: align on a common power of v
            let (a, b) = (self.den.low_degree(), rhs.den.low_degree());
            let (ca, cb) = (self.den.lc(), rhs.den.lc());
            let k = max(a, b);
            let l = ca.lcm(cb);
            let na = self.num.shift_up(k - a).scale(&(&l / ca));
            let nb = rhs.num.shift_up(k - b).scale(&(&l / cb));
            return QScalar::from_parts(na.add_ref(&nb), Poly::monomial(l, k));
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.div_exact(&g);
        let d2 = rhs.den.div_exact(&g);
        let num = self.num.mul_ref(&d2).add_ref(&rhs.num.mul_ref(&d1));
        QScalar::from_parts(num, self.den.mul_ref(&d2))
    }
}

impl<'a> Sub<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar {
                num: self.num.mul_ref(&rhs.num),
                den: Poly::one(),
            };
        }
        QScalar::from_parts(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
}

impl<'a> Div<&'a QScalar> for &'a QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |a, b| a + b)
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt_terms(f);
        }
        write!(f, "(")?;
        self.num.fmt_terms(f)?;
        write!(f, ")/(")?;
        self.den.fmt_terms(f)?;
        write!(f, ")")
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_poly(s: &str) -> Result<Poly, CoreError> {
    let bad = || CoreError::Parse(format!("malformed polynomial `{s}`"));
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(bad());
    }
    let mut acc = Poly::zero();
    let mut term = String::new();
    let mut terms = Vec::new();
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut term));
        }
        term.push(ch);
    }
    terms.push(term);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        let (coef, k) = if let Some(idx) = body.find('v') {
            let c = body[..idx].trim_end_matches('*');
            let c = if c.is_empty() {
                BigInt::one()
            } else {
                c.parse::<BigInt>().map_err(|_| bad())?
            };
            let rest = &body[idx + 1..];
            let k = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            };
            (c, k)
        } else {
            (body.parse::<BigInt>().map_err(|_| bad())?, 0)
        };
        acc = acc.add_ref(&Poly::monomial(coef * sign, k));
    }
    Ok(acc)
}

impl FromStr for QScalar {
    type Err = CoreError;

    /// Parses the canonical `num` or `(num)/(den)` form.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        match s.find(")/(") {
            Some(idx) => {
                let num = parse_poly(&s[..idx + 1])?;
                let den = parse_poly(&s[idx + 2..])?;
                QScalar::from_polys(num, den)
            }
            None => Ok(QScalar::from_parts(parse_poly(s)?, Poly::one())),
        }
    }
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Result of specializing a scalar at a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigRational,
    /// `Some(n)` when `q = point^L` is a root of unity of order `n <= bound`.
    pub root_of_unity_order: Option<u32>,
}

/// The coefficient field together with the cover exponent `L` (`q = v^L`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QField {
    pub l: u32,
}

impl QField {
    pub fn new(l: u32) -> Self {
        assert!(l > 0, "cover exponent must be positive");
        QField { l }
    }

    /// `q^n`.
    pub fn q_pow(&self, n: i64) -> QScalar {
        QScalar::v_pow(n * self.l as i64)
    }

    pub fn q(&self) -> QScalar {
        self.q_pow(1)
    }

    /// `q^r` for rational `r`, if `r * L` is an integer.
    pub fn q_rat_pow(&self, r: num_rational::Rational64) -> Option<QScalar> {
        let scaled = r * num_rational::Rational64::from_integer(self.l as i64);
        scaled.is_integer().then(|| QScalar::v_pow(scaled.to_integer()))
    }

    /// `q - q^{-1}`.
    pub fn q_diff(&self) -> QScalar {
        &self.q() - &self.q_pow(-1)
    }

    /// The quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
    pub fn q_int(&self, n: i64) -> QScalar {
        if n == 0 {
            return QScalar::zero();
        }
        let top = &self.q_pow(n) - &self.q_pow(-n);
        &top / &self.q_diff()
    }

    /// Specialize `s` at `v = point`, flagging roots of unity of order `<= bound`.
    pub fn evaluate(
        &self,
        s: &QScalar,
        point: &BigRational,
        bound: u32,
    ) -> Result<Evaluation, CoreError> {
        if point.is_zero() {
            return Err(CoreError::ZeroSpecialization);
        }
        let value = s.eval_at(point)?;
        let q = point.pow(self.l as i32);
        let mut root_of_unity_order = None;
        let mut acc = BigRational::one();
        for n in 1..=bound {
            acc = &acc * &q;
            if acc.is_one() {
                root_of_unity_order = Some(n);
                break;
            }
        }
        Ok(Evaluation {
            value,
            root_of_unity_order,
        })
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn q_int_small_values() {
        let f = QField::new(1);
        assert!(f.q_int(0).is_zero());
        assert!(f.q_int(1).is_one());
        assert_eq!(f.q_int(2), &f.q() + &f.q_pow(-1));
        assert_eq!(f.q_int(2).to_string(), "(v^2 + 1)/(v^1)");
    }

    #[test]
    fn evaluate_examples() {
        let f = QField::new(1);
        let s = &f.q() + &f.q_pow(-1);
        let e = f.evaluate(&s, &rat(1, 1), 12).unwrap();
        assert_eq!(e.value, rat(2, 1));
        assert_eq!(e.root_of_unity_order, Some(1));

        let pole = f.q_diff().inv().unwrap();
        assert!(matches!(
            f.evaluate(&pole, &rat(1, 1), 12),
            Err(CoreError::SpecializationPole(_))
        ));

        // (8 - 1/8) / (2 - 1/2)
        let e = f.evaluate(&f.q_int(3), &rat(2, 1), 12).unwrap();
        assert_eq!(e.value, rat(21, 4));
        assert_eq!(e.root_of_unity_order, None);

        assert!(matches!(
            f.evaluate(&s, &rat(0, 1), 12),
            Err(CoreError::ZeroSpecialization)
        ));
    }

    #[test]
    fn root_of_unity_flag_uses_cover() {
        let f = QField::new(4);
        let e = f.evaluate(&QScalar::one(), &rat(-1, 1), 6).unwrap();
        assert_eq!(e.root_of_unity_order, Some(1));
        let f = QField::new(1);
        let e = f.evaluate(&QScalar::one(), &rat(-1, 1), 6).unwrap();
        assert_eq!(e.root_of_unity_order, Some(2));
    }

    #[test]
    fn canonical_strings_round_trip() {
        let f = QField::new(4);
        for s in [f.q_int(3), f.q_diff().inv().unwrap(), QScalar::from_int(-7), QScalar::zero()] {
            let parsed: QScalar = s.to_string().parse().unwrap();
            assert_eq!(parsed, s);
        }
        let x: QScalar = "(2*v^3 - v)/(v^3 + v)".parse().unwrap();
        assert_eq!(x.to_string(), "(2*v^2 - 1)/(v^2 + 1)");
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let f = QField::new(1);
        // (v^2 - 1) / (v - 1) = v + 1
        let num = &f.q_pow(2) - &QScalar::one();
        let den = &f.q() - &QScalar::one();
        assert_eq!(&num / &den, &f.q() + &QScalar::one());
        assert_eq!((&den / &num).to_string(), "(1)/(v^1 + 1)");
    }

    #[test]
    fn pow_and_inverse() {
        let f = QField::new(2);
        let x = &f.q() + &QScalar::from_int(3);
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert!((&x.pow(-2) * &x.pow(2)).is_one());
        assert!(QScalar::zero().inv().is_none());
    }
}
