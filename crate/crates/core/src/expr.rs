//! A small infix parser for elements of U_q, O_q and D_q.
//!
//! Grammar: sums and differences of products of factors; a factor is an
//! integer, `q`, `v`, a generator or a parenthesized expression, optionally
//! raised to an integer power (negative powers only for scalars). `/` divides
//! by a scalar. Generators: `E1`, `F2`, `E12` (root vectors by simple-root
//! indices), `K(1,0)` (K_μ in ω-coordinates), and `a`, `b`, `c`, `d` for the
//! matrix coefficients of O_q(SL2).

use crate::error::CoreError;
use crate::oq_dq::{Dq, DqElement, Oq, OqElement};
use crate::scalars::{QField, QScalar};
use crate::uq_algebra::{Uq, UqElement};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, CoreError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[start..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| perr(&format!("number `{t}` too large")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(perr(&format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn perr(msg: &str) -> CoreError {
    CoreError::Parse(msg.to_string())
}

trait Target {
    type El: Clone;
    fn field(&self) -> QField;
    fn from_scalar(&self, c: QScalar) -> Self::El;
    fn atom(&self, name: &str, args: &[i64]) -> Result<Self::El, CoreError>;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn scale(&self, a: &Self::El, c: &QScalar) -> Self::El;
}

#[derive(Clone)]
enum Val<E> {
    S(QScalar),
    E(E),
}

struct Parser<'t, T: Target> {
    toks: Vec<Tok>,
    pos: usize,
    target: &'t T,
}

impl<'t, T: Target> Parser<'t, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CoreError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(&format!("expected `{c}` at token {}", self.pos)))
        }
    }

    fn add(&self, a: Val<T::El>, b: Val<T::El>) -> Val<T::El> {
        match (a, b) {
            (Val::S(x), Val::S(y)) => Val::S(&x + &y),
            (a, b) => Val::E(self.target.add(&self.lift(a), &self.lift(b))),
        }
    }

    fn mul(&self, a: Val<T::El>, b: Val<T::El>) -> Val<T::El> {
        match (a, b) {
            (Val::S(x), Val::S(y)) => Val::S(&x * &y),
            (Val::S(x), Val::E(e)) | (Val::E(e), Val::S(x)) => Val::E(self.target.scale(&e, &x)),
            (Val::E(x), Val::E(y)) => Val::E(self.target.mul(&x, &y)),
        }
    }

    fn lift(&self, v: Val<T::El>) -> T::El {
        match v {
            Val::S(c) => self.target.from_scalar(c),
            Val::E(e) => e,
        }
    }

    fn expr(&mut self) -> Result<Val<T::El>, CoreError> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            self.mul(Val::S(QScalar::from_int(-1)), t)
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.add(acc, t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.add(acc, self.mul(Val::S(QScalar::from_int(-1)), t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Val<T::El>, CoreError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let f = self.power()?;
                acc = self.mul(acc, f);
            } else if self.eat('/') {
                match self.power()? {
                    Val::S(c) => {
                        let inv = c.inv().ok_or(CoreError::DivisionByZero)?;
                        acc = self.mul(acc, Val::S(inv));
                    }
                    Val::E(_) => return Err(perr("can only divide by scalars")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn int(&mut self) -> Result<i64, CoreError> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            _ => Err(perr(&format!("expected an integer at token {}", self.pos))),
        }
    }

    fn power(&mut self) -> Result<Val<T::El>, CoreError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let e = self.int()?;
        if paren {
            self.expect(')')?;
        }
        match base {
            Val::S(c) => {
                if e < 0 && c.is_zero() {
                    return Err(CoreError::DivisionByZero);
                }
                Ok(Val::S(c.pow(e)))
            }
            Val::E(x) => {
                if e < 0 {
                    return Err(perr("negative powers are only defined for scalars"));
                }
                let mut acc = self.target.from_scalar(QScalar::one());
                for _ in 0..e {
                    acc = self.target.mul(&acc, &x);
                }
                Ok(Val::E(acc))
            }
        }
    }

    fn atom(&mut self) -> Result<Val<T::El>, CoreError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Val::S(QScalar::from_int(n)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "q" => return Ok(Val::S(self.target.field().q())),
                    "v" => return Ok(Val::S(QScalar::v_pow(1))),
                    _ => {}
                }
                let mut args = Vec::new();
                if self.eat('(') {
                    loop {
                        args.push(self.int()?);
                        if !self.eat(',') {
                            break;
                        }
                    }
                    self.expect(')')?;
                }
                Ok(Val::E(self.target.atom(&name, &args)?))
            }
            other => Err(perr(&format!("unexpected {other:?} at token {}", self.pos))),
        }
    }
}

fn run<T: Target>(target: &T, s: &str) -> Result<T::El, CoreError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, target };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(perr(&format!("trailing input at token {}", p.pos)));
    }
    Ok(p.lift(v))
}

fn uq_atom(uq: &Uq, name: &str, args: &[i64]) -> Result<UqElement, CoreError> {
    let d = uq.datum();
    if name == "K" {
        let w = d.weight(args)?;
        return Ok(uq.k(w));
    }
    let (kind, idx) = name.split_at(1);
    let r = (0..uq.n_roots()).find(|&r| uq.root_name(r) == idx);
    match (kind, r) {
        ("E", Some(r)) if args.is_empty() => Ok(uq.e_root(r)),
        ("F", Some(r)) if args.is_empty() => Ok(uq.f_root(r)),
        _ => Err(perr(&format!("unknown generator `{name}`"))),
    }
}

fn oq_atom(oq: &Oq, name: &str) -> Option<OqElement> {
    match name {
        "a" => Some(oq.a()),
        "b" => Some(oq.b()),
        "c" => Some(oq.c()),
        "d" => Some(oq.d()),
        _ => None,
    }
}

impl Target for Uq {
    type El = UqElement;
    fn field(&self) -> QField {
        Uq::field(self)
    }
    fn from_scalar(&self, c: QScalar) -> UqElement {
        UqElement::scalar(c)
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<UqElement, CoreError> {
        uq_atom(self, name, args)
    }
    fn add(&self, a: &UqElement, b: &UqElement) -> UqElement {
        a.add(b)
    }
    fn mul(&self, a: &UqElement, b: &UqElement) -> UqElement {
        self.multiply(a, b)
    }
    fn scale(&self, a: &UqElement, c: &QScalar) -> UqElement {
        a.scale(c)
    }
}

impl Target for Oq {
    type El = OqElement;
    fn field(&self) -> QField {
        self.uq().field()
    }
    fn from_scalar(&self, c: QScalar) -> OqElement {
        OqElement::scalar(c)
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<OqElement, CoreError> {
        match oq_atom(self, name) {
            Some(x) if args.is_empty() => Ok(x),
            _ => Err(perr(&format!("unknown generator `{name}`"))),
        }
    }
    fn add(&self, a: &OqElement, b: &OqElement) -> OqElement {
        a.add(b)
    }
    fn mul(&self, a: &OqElement, b: &OqElement) -> OqElement {
        self.multiply(a, b)
    }
    fn scale(&self, a: &OqElement, c: &QScalar) -> OqElement {
        a.scale(c)
    }
}

impl Target for Dq {
    type El = DqElement;
    fn field(&self) -> QField {
        self.oq().uq().field()
    }
    fn from_scalar(&self, c: QScalar) -> DqElement {
        DqElement::one().scale(&c)
    }
    fn atom(&self, name: &str, args: &[i64]) -> Result<DqElement, CoreError> {
        if let Some(x) = oq_atom(self.oq(), name).filter(|_| args.is_empty()) {
            return Ok(DqElement::from_oq(&x));
        }
        Ok(DqElement::from_uq(&uq_atom(self.oq().uq(), name, args)?))
    }
    fn add(&self, a: &DqElement, b: &DqElement) -> DqElement {
        a.add(b)
    }
    fn mul(&self, a: &DqElement, b: &DqElement) -> DqElement {
        self.multiply(a, b)
    }
    fn scale(&self, a: &DqElement, c: &QScalar) -> DqElement {
        a.scale(c)
    }
}

pub fn parse_uq(uq: &Uq, s: &str) -> Result<UqElement, CoreError> {
    run(uq, s)
}

pub fn parse_oq(oq: &Oq, s: &str) -> Result<OqElement, CoreError> {
    run(oq, s)
}

/// Products in D_q are taken in the smash product, so `E1*a` and `a*E1`
/// differ.
pub fn parse_dq(dq: &Dq, s: &str) -> Result<DqElement, CoreError> {
    run(dq, s)
}
