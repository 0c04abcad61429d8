//! O_q(SL2) as the algebra of matrix coefficients of the two-dimensional
//! module, with generators a = x11, b = x12, c = x21, d = x22.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::fd_module::{FdModule, Mat};
use crate::root_datum::{CartanType, RootDatum, Weight};
use crate::scalars::{QField, QScalar};
use crate::uq_algebra::{push, Gen, Uq, UqElement};

/// Exponents (i, j, k, l) of a^i b^j c^k d^l, with min(i, l) = 0.
pub type OqMono = [u32; 4];

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;

/// Letter index of x_{ij} (0-based row and column).
pub fn letter(i: usize, j: usize) -> usize {
    2 * i + j
}

fn row_col(g: usize) -> (usize, usize) {
    (g / 2, g % 2)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OqElement {
    terms: BTreeMap<OqMono, QScalar>,
}

impl OqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0; 4], QScalar::one())
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(m: OqMono, c: QScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn gen(g: usize) -> Self {
        let mut m = [0; 4];
        m[g] = 1;
        Self::monomial(m, QScalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OqMono, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &OqMono) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: OqMono, c: QScalar) {
        debug_assert!(m[A] == 0 || m[D] == 0, "not a normal monomial");
        push(&mut self.terms, m, c);
    }

    pub fn add_scaled(&mut self, o: &OqElement, c: &QScalar) {
        for (m, x) in &o.terms {
            self.add_term(*m, c * x);
        }
    }

    pub fn scale(&self, c: &QScalar) -> OqElement {
        let mut out = OqElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, o: &OqElement) -> OqElement {
        let mut out = self.clone();
        out.add_scaled(o, &QScalar::one());
        out
    }

    pub fn sub(&self, o: &OqElement) -> OqElement {
        let mut out = self.clone();
        out.add_scaled(o, &-QScalar::one());
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }
}

/// Letters of a normal monomial, left to right.
pub fn mono_letters(m: &OqMono) -> Vec<usize> {
    let mut w = Vec::new();
    for (g, &e) in m.iter().enumerate() {
        w.extend(std::iter::repeat_n(g, e as usize));
    }
    w
}

/// Weight (in units of ω) seen by K acting through the column index:
/// a and c carry +1, b and d carry −1.
pub fn column_weight(m: &OqMono) -> i64 {
    (m[A] + m[C]) as i64 - (m[B] + m[D]) as i64
}

/// Weight through the row index: a and b carry +1, c and d carry −1.
pub fn row_weight(m: &OqMono) -> i64 {
    (m[A] + m[B]) as i64 - (m[C] + m[D]) as i64
}

/// Normal monomials with column weight `w` and total degree ≤ `max_deg`.
pub fn monomials_of_weight(w: i64, max_deg: u32) -> Vec<OqMono> {
    let mut out = Vec::new();
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            for k in 0..=max_deg - i - j {
                for l in 0..=max_deg - i - j - k {
                    let m = [i, j, k, l];
                    if (i == 0 || l == 0) && column_weight(&m) == w {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// All normal monomials of degree ≤ `max_deg`.
pub fn monomials_up_to(max_deg: u32) -> Vec<OqMono> {
    let w = max_deg as i64;
    (-w..=w).flat_map(|x| monomials_of_weight(x, max_deg)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Tensor square O_q ⊗ O_q.
pub type OqTensor = BTreeMap<(OqMono, OqMono), QScalar>;

/// O_q(SL2) together with the U_q(sl2) data it is dual to.
#[derive(Clone, Debug)]
pub struct Oq {
    uq: Uq,
    v: FdModule,
}

impl Oq {
    pub fn new() -> Self {
        let uq = Uq::new(RootDatum::a1());
        let v = FdModule::a1_simple(&uq, 1);
        Oq { uq, v }
    }

    pub fn for_datum(d: &RootDatum) -> Result<Self, CoreError> {
        if d.ty != CartanType::A1 {
            return Err(CoreError::UnsupportedType { expected: "A1".into() });
        }
        Ok(Self::new())
    }

    pub fn uq(&self) -> &Uq {
        &self.uq
    }

    pub fn field(&self) -> QField {
        self.uq.field()
    }

    fn q(&self, n: i64) -> QScalar {
        self.uq.field().q_pow(n)
    }

    /// The defining module whose matrix coefficients generate O_q.
    pub fn defining_module(&self) -> &FdModule {
        &self.v
    }

    pub fn a(&self) -> OqElement {
        OqElement::gen(A)
    }
    pub fn b(&self) -> OqElement {
        OqElement::gen(B)
    }
    pub fn c(&self) -> OqElement {
        OqElement::gen(C)
    }
    pub fn d(&self) -> OqElement {
        OqElement::gen(D)
    }

    /// g · m for a generator g and a normal monomial m.
    fn gen_times(&self, g: usize, m: &OqMono) -> OqElement {
        let [i, j, k, l] = *m;
        let mut out = OqElement::zero();
        match g {
            A if l == 0 => out.add_term([i + 1, j, k, 0], QScalar::one()),
            A => {
                // a b^j c^k d^l = q^{j+k} b^j c^k (1 + q bc) d^{l−1}
                let s = self.q((j + k) as i64);
                out.add_term([0, j, k, l - 1], s.clone());
                out.add_term([0, j + 1, k + 1, l - 1], &s * &self.q(1));
            }
            B => out.add_term([i, j + 1, k, l], self.q(-(i as i64))),
            C => out.add_term([i, j, k + 1, l], self.q(-(i as i64))),
            D if i > 0 => {
                // d a^i = a^{i−1} + q^{−1−2(i−1)} a^{i−1} bc
                out.add_term([i - 1, j, k, 0], QScalar::one());
                out.add_term([i - 1, j + 1, k + 1, 0], self.q(-1 - 2 * (i as i64 - 1)));
            }
            D => out.add_term([0, j, k, l + 1], self.q(-((j + k) as i64))),
            _ => unreachable!("generator index"),
        }
        out
    }

    fn left_gen(&self, g: usize, y: &OqElement) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in y.terms() {
            out.add_scaled(&self.gen_times(g, m), c);
        }
        out
    }

    pub fn multiply(&self, x: &OqElement, y: &OqElement) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in x.terms() {
            let mut cur = y.clone();
            for g in mono_letters(m).into_iter().rev() {
                cur = self.left_gen(g, &cur);
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    pub fn product(&self, factors: &[OqElement]) -> OqElement {
        factors.iter().fold(OqElement::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn pow(&self, x: &OqElement, n: u32) -> OqElement {
        (0..n).fold(OqElement::one(), |acc, _| self.multiply(&acc, x))
    }

    /// Normal form of a word in the letters a, b, c, d.
    pub fn word(&self, w: &[usize]) -> OqElement {
        let mut cur = OqElement::one();
        for &g in w.iter().rev() {
            cur = self.left_gen(g, &cur);
        }
        cur
    }

    /// ad − q·bc.
    pub fn quantum_det(&self) -> OqElement {
        let ad = self.multiply(&self.a(), &self.d());
        let bc = self.multiply(&self.b(), &self.c());
        ad.sub(&bc.scale(&self.q(1)))
    }

    /// Defining relations as (name, lhs − rhs).
    pub fn defining_relations(&self) -> Vec<(&'static str, Vec<(Vec<usize>, QScalar)>)> {
        let one = QScalar::one;
        let q = self.q(1);
        let qd = &q - &self.q(-1);
        vec![
            ("ab = q ba", vec![(vec![A, B], one()), (vec![B, A], -&q)]),
            ("ac = q ca", vec![(vec![A, C], one()), (vec![C, A], -&q)]),
            ("bc = cb", vec![(vec![B, C], one()), (vec![C, B], -one())]),
            ("bd = q db", vec![(vec![B, D], one()), (vec![D, B], -&q)]),
            ("cd = q dc", vec![(vec![C, D], one()), (vec![D, C], -&q)]),
            (
                "ad − da = (q − q⁻¹) bc",
                vec![(vec![A, D], one()), (vec![D, A], -one()), (vec![B, C], -&qd)],
            ),
            ("ad − q bc = 1", vec![(vec![A, D], one()), (vec![B, C], -&q), (vec![], -one())]),
        ]
    }

    /// (u, word): the entry of u on V^{⊗n} at rows (i_1..i_n), columns
    /// (j_1..j_n). Independent of the multiplication rules above.
    pub fn pair_word(&self, u: &UqElement, w: &[usize]) -> QScalar {
        let mut module = FdModule::trivial(1);
        for _ in w {
            module = module.tensor(&self.uq, &self.v);
        }
        let m = module.matrix_of(&self.uq, u);
        let (mut r, mut c) = (0, 0);
        for &g in w {
            let (i, j) = row_col(g);
            r = 2 * r + i;
            c = 2 * c + j;
        }
        m.get(r, c).clone()
    }

    pub fn pair(&self, u: &UqElement, x: &OqElement) -> QScalar {
        x.terms().map(|(m, c)| c * &self.pair_word(u, &mono_letters(m))).sum()
    }

    pub fn counit(&self, x: &OqElement) -> QScalar {
        // ε(a) = ε(d) = 1, ε(b) = ε(c) = 0
        x.terms()
            .filter(|(m, _)| m[B] == 0 && m[C] == 0)
            .map(|(_, c)| c.clone())
            .sum()
    }

    fn gen_matrix(&self, g: &Gen) -> Mat {
        self.v.gen_matrix(&self.uq, g)
    }

    /// x_ij acted on by a single U_q letter: Σ_k x_ik ρ(g)_kj on the left,
    /// Σ_k ρ(g)_ik x_kj on the right.
    fn letter_act(&self, g: &Gen, l: usize, side: Side) -> OqElement {
        let m = self.gen_matrix(g);
        let (i, j) = row_col(l);
        let mut out = OqElement::zero();
        for k in 0..2 {
            let (c, g2) = match side {
                Side::Left => (m.get(k, j), letter(i, k)),
                Side::Right => (m.get(i, k), letter(k, j)),
            };
            if !c.is_zero() {
                out.add_scaled(&OqElement::gen(g2), c);
            }
        }
        out
    }

    /// A single letter of U_q acting on a word, expanded with the coproduct
    /// Δ(E) = E⊗1 + K_α⊗E, Δ(F) = F⊗K_{−α} + 1⊗F, Δ(K) = K⊗K.
    fn gen_act_word(&self, g: &Gen, w: &[usize], side: Side) -> OqElement {
        let alpha = self.uq.datum().alpha(0);
        let kact = |mu: Weight, l: usize| self.letter_act(&Gen::K(mu), l, side);
        let plain = |l: usize| OqElement::gen(l);
        match g {
            Gen::K(_) => self.product(&w.iter().map(|&l| self.letter_act(g, l, side)).collect::<Vec<_>>()),
            Gen::E(_) | Gen::F(_) => {
                let mut out = OqElement::zero();
                for t in 0..w.len() {
                    let factors: Vec<OqElement> = w
                        .iter()
                        .enumerate()
                        .map(|(s, &l)| match (g, s.cmp(&t)) {
                            (_, std::cmp::Ordering::Equal) => self.letter_act(g, l, side),
                            (Gen::E(_), std::cmp::Ordering::Less) => kact(alpha, l),
                            (Gen::F(_), std::cmp::Ordering::Greater) => kact(-alpha, l),
                            _ => plain(l),
                        })
                        .collect();
                    out = out.add(&self.product(&factors));
                }
                out
            }
        }
    }

    fn gen_act(&self, g: &Gen, x: &OqElement, side: Side) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.gen_act_word(g, &mono_letters(m), side), c);
        }
        out
    }

    /// u ▷ x = x_1 (u, x_2).
    pub fn left_act(&self, u: &UqElement, x: &OqElement) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in u.terms() {
            let mut cur = x.clone();
            for g in self.uq.letters(m).iter().rev() {
                cur = self.gen_act(g, &cur, Side::Left);
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// x ◁ u = (u, x_1) x_2.
    pub fn right_act(&self, x: &OqElement, u: &UqElement) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in u.terms() {
            let mut cur = x.clone();
            for g in self.uq.letters(m).iter() {
                cur = self.gen_act(g, &cur, Side::Right);
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    pub fn tensor_mul(&self, x: &OqTensor, y: &OqTensor) -> OqTensor {
        let mut out = OqTensor::new();
        for ((a1, a2), c) in x {
            for ((b1, b2), d) in y {
                let l = self.multiply(&OqElement::monomial(*a1, QScalar::one()), &OqElement::monomial(*b1, QScalar::one()));
                let r = self.multiply(&OqElement::monomial(*a2, QScalar::one()), &OqElement::monomial(*b2, QScalar::one()));
                let cd = c * d;
                for (m1, e1) in l.terms() {
                    for (m2, e2) in r.terms() {
                        push(&mut out, (*m1, *m2), &(&cd * e1) * e2);
                    }
                }
            }
        }
        out
    }

    /// Δ(x_ij) = Σ_k x_ik ⊗ x_kj, extended multiplicatively.
    pub fn coproduct(&self, x: &OqElement) -> OqTensor {
        let mut out = OqTensor::new();
        for (m, c) in x.terms() {
            let mut cur = OqTensor::from([(([0; 4], [0; 4]), QScalar::one())]);
            for g in mono_letters(m) {
                let (i, j) = row_col(g);
                let mut dg = OqTensor::new();
                for k in 0..2 {
                    let mut l = [0; 4];
                    let mut r = [0; 4];
                    l[letter(i, k)] = 1;
                    r[letter(k, j)] = 1;
                    dg.insert((l, r), QScalar::one());
                }
                cur = self.tensor_mul(&cur, &dg);
            }
            for (k, d) in cur {
                push(&mut out, k, c * &d);
            }
        }
        out
    }

    fn anti_hom(&self, x: &OqElement, images: &[OqElement; 4]) -> OqElement {
        let mut out = OqElement::zero();
        for (m, c) in x.terms() {
            let factors: Vec<OqElement> = mono_letters(m).into_iter().rev().map(|g| images[g].clone()).collect();
            out.add_scaled(&self.product(&factors), c);
        }
        out
    }

    /// S(a) = d, S(d) = a, S(b) = −q⁻¹b, S(c) = −qc; anti-multiplicative.
    pub fn antipode(&self, x: &OqElement) -> OqElement {
        let imgs = [self.d(), self.b().scale(&-self.q(-1)), self.c().scale(&-self.q(1)), self.a()];
        self.anti_hom(x, &imgs)
    }

    pub fn antipode_inv(&self, x: &OqElement) -> OqElement {
        let imgs = [self.d(), self.b().scale(&-self.q(1)), self.c().scale(&-self.q(-1)), self.a()];
        self.anti_hom(x, &imgs)
    }

    /// m(S⊗id)Δ(x) = ε(x) = m(id⊗S)Δ(x).
    pub fn antipode_axiom(&self, x: &OqElement) -> bool {
        let eps = OqElement::scalar(self.counit(x));
        let delta = self.coproduct(x);
        let mut l = OqElement::zero();
        let mut r = OqElement::zero();
        for ((m1, m2), c) in &delta {
            let (x1, x2) = (OqElement::monomial(*m1, c.clone()), OqElement::monomial(*m2, QScalar::one()));
            l = l.add(&self.multiply(&self.antipode(&x1), &x2));
            r = r.add(&self.multiply(&x1, &self.antipode(&x2)));
        }
        l == eps && r == eps
    }

    pub fn render(&self, x: &OqElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let names = ["a", "b", "c", "d"];
        x.terms()
            .map(|(m, c)| {
                let mut parts = Vec::new();
                for (g, &e) in m.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(names[g].to_string()),
                        _ => parts.push(format!("{}^{e}", names[g])),
                    }
                }
                let mono = parts.join("*");
                match (c.is_one(), mono.is_empty()) {
                    (_, true) => format!("{c}"),
                    (true, false) => mono,
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Default for Oq {
    fn default() -> Self {
        Self::new()
    }
}
