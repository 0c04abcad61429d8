//! The quantized enveloping algebra U_q in PBW normal form.
//!
//! Monomials are `F^a K_μ E^b` where `a`, `b` are exponent vectors over the
//! positive roots in PBW order (α1 < α1+α2 < α2 for A2). The non-simple root
//! vectors are `E_{12} = E1 E2 − q⁻¹ E2 E1` and likewise for F.

mod hopf;
mod rewrite;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Rational64;

use crate::error::CoreError;
use crate::root_datum::{CartanType, RootDatum, Weight};
use crate::scalars::{QField, QScalar};

pub use hopf::{UqTensor, UqTensor3, COPRODUCT_CONVENTION};
pub use rewrite::Strategy;

/// Exponents over the positive roots in PBW order (rank one uses slot 0).
pub type Exps = [u32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub f: Exps,
    pub k: Weight,
    pub e: Exps,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        f: [0; 3],
        k: Weight::ZERO,
        e: [0; 3],
    };

    pub fn k(mu: Weight) -> Self {
        Monomial {
            k: mu,
            ..Monomial::ONE
        }
    }

    pub fn is_cartan(&self) -> bool {
        self.f == [0; 3] && self.e == [0; 3]
    }
}

/// A generator letter. Root indices refer to PBW positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    F(usize),
    K(Weight),
    E(usize),
}

/// A finite combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UqElement {
    terms: BTreeMap<Monomial, QScalar>,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, QScalar::one())
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: QScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UqElement, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(*m, c * x);
        }
    }

    pub fn scale(&self, c: &QScalar) -> UqElement {
        let mut out = UqElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(other, &QScalar::one());
        out
    }

    pub fn sub(&self, other: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(other, &-QScalar::one());
        out
    }

    pub fn neg(&self) -> UqElement {
        self.scale(&-QScalar::one())
    }

    /// Whether all monomials have E-part and F-part zero or lie in U_q(b)
    /// (no F-part).
    pub fn is_borel(&self) -> bool {
        self.terms.keys().all(|m| m.f == [0; 3])
    }
}

/// Context for computations in U_q of a fixed root datum.
#[derive(Clone, Debug)]
pub struct Uq {
    datum: RootDatum,
    field: QField,
    n_roots: usize,
    roots: Vec<Weight>,
    heights: Vec<u32>,
    simple: Vec<usize>,
    /// comm[i][r] = [E_{simple i}, F_r] as an element without E-part.
    comm: Vec<Vec<UqElement>>,
    hopf: hopf::HopfTables,
}

impl Uq {
    pub fn new(datum: RootDatum) -> Self {
        let field = datum.field();
        let roots = datum.positive_roots().to_vec();
        let heights = roots
            .iter()
            .map(|r| datum.height(r).to_integer() as u32)
            .collect();
        let simple: Vec<usize> = (0..datum.rank).map(|i| datum.simple_root_index(i)).collect();
        let mut uq = Uq {
            n_roots: roots.len(),
            datum,
            field,
            roots,
            heights,
            simple,
            comm: Vec::new(),
            hopf: hopf::HopfTables::default(),
        };
        uq.comm = uq.build_comm_table();
        uq.hopf = hopf::HopfTables::build(&uq);
        uq
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn field(&self) -> QField {
        self.field
    }

    pub fn n_roots(&self) -> usize {
        self.n_roots
    }

    pub fn root(&self, r: usize) -> Weight {
        self.roots[r]
    }

    pub fn root_height(&self, r: usize) -> u32 {
        self.heights[r]
    }

    /// PBW index of the simple root α_i.
    pub fn simple_index(&self, i: usize) -> usize {
        self.simple[i]
    }

    fn composite(&self) -> Option<usize> {
        match self.datum.ty {
            CartanType::A1 => None,
            CartanType::A2 => Some(1),
        }
    }

    fn is_simple_root(&self, r: usize) -> bool {
        self.simple.contains(&r)
    }

    /// q^{x} for a rational pairing value.
    pub fn qp(&self, x: Rational64) -> QScalar {
        self.field
            .q_rat_pow(x)
            .expect("pairing values are integral powers of v")
    }

    fn pair(&self, a: &Weight, b: &Weight) -> Rational64 {
        self.datum.pairing(a, b)
    }

    /// Sum of the roots counted by an exponent vector.
    pub fn exps_weight(&self, x: &Exps) -> Weight {
        let mut w = Weight::ZERO;
        for r in 0..self.n_roots {
            w += (x[r] as i64) * self.roots[r];
        }
        w
    }

    pub fn weight_of(&self, m: &Monomial) -> Weight {
        self.exps_weight(&m.e) - self.exps_weight(&m.f)
    }

    /// Weight if every monomial has the same one.
    pub fn homogeneous_weight(&self, x: &UqElement) -> Option<Weight> {
        let mut it = x.terms.keys().map(|m| self.weight_of(m));
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }

    // ----- generators -----

    pub fn e(&self, i: usize) -> UqElement {
        self.e_root(self.simple[i])
    }

    pub fn f(&self, i: usize) -> UqElement {
        self.f_root(self.simple[i])
    }

    pub fn e_root(&self, r: usize) -> UqElement {
        let mut m = Monomial::ONE;
        m.e[r] = 1;
        UqElement::monomial(m, QScalar::one())
    }

    pub fn f_root(&self, r: usize) -> UqElement {
        let mut m = Monomial::ONE;
        m.f[r] = 1;
        UqElement::monomial(m, QScalar::one())
    }

    pub fn k(&self, mu: Weight) -> UqElement {
        UqElement::monomial(Monomial::k(mu), QScalar::one())
    }

    /// K_{α_i}.
    pub fn k_alpha(&self, i: usize) -> UqElement {
        self.k(self.datum.alpha(i))
    }

    pub fn gen(&self, g: &Gen) -> UqElement {
        match g {
            Gen::E(r) => self.e_root(*r),
            Gen::F(r) => self.f_root(*r),
            Gen::K(mu) => self.k(*mu),
        }
    }

    /// All simple generators E_i, F_i, K_{ω_i}^{±1}.
    pub fn generators(&self) -> Vec<UqElement> {
        let mut out = Vec::new();
        for i in 0..self.datum.rank {
            out.push(self.e(i));
            out.push(self.f(i));
            out.push(self.k(self.datum.omega(i)));
            out.push(self.k(-self.datum.omega(i)));
        }
        out
    }

    // ----- U^+ / U^- products on ordered exponent vectors -----

    /// X_r · X^x for root vectors of one sign; same table for E and F.
    fn plus_letter(&self, r: usize, x: &Exps) -> Vec<(Exps, QScalar)> {
        if self.n_roots == 1 {
            let mut y = *x;
            y[0] += 1;
            return vec![(y, QScalar::one())];
        }
        match r {
            0 => {
                let mut y = *x;
                y[0] += 1;
                vec![(y, QScalar::one())]
            }
            1 => {
                // X1 X0 = q⁻¹ X0 X1
                let mut y = *x;
                y[1] += 1;
                vec![(y, self.field.q_pow(-(x[0] as i64)))]
            }
            _ => {
                if x[0] == 0 {
                    // X2 X1 = q⁻¹ X1 X2
                    let mut y = *x;
                    y[2] += 1;
                    return vec![(y, self.field.q_pow(-(x[1] as i64)))];
                }
                // X2 X0 = q X0 X2 − q X1
                let mut rest = *x;
                rest[0] -= 1;
                let mut acc: BTreeMap<Exps, QScalar> = BTreeMap::new();
                let q = self.field.q();
                for (y, c) in self.plus_letter(2, &rest) {
                    let mut z = y;
                    z[0] += 1;
                    push(&mut acc, z, &q * &c);
                }
                for (y, c) in self.plus_letter(1, &rest) {
                    push(&mut acc, y, -(&q * &c));
                }
                acc.into_iter().collect()
            }
        }
    }

    /// X^x · X^y in the same half.
    fn plus_mul(&self, x: &Exps, y: &Exps) -> Vec<(Exps, QScalar)> {
        let mut cur: BTreeMap<Exps, QScalar> = BTreeMap::from([(*y, QScalar::one())]);
        for r in (0..self.n_roots).rev() {
            for _ in 0..x[r] {
                let mut next = BTreeMap::new();
                for (z, c) in &cur {
                    for (w, d) in self.plus_letter(r, z) {
                        push(&mut next, w, c * &d);
                    }
                }
                cur = next;
            }
        }
        cur.into_iter().collect()
    }

    // ----- multiplication -----

    /// Product of elements without E-part.
    fn mul_no_e(&self, x: &UqElement, y: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (m, c) in &x.terms {
            debug_assert!(m.e == [0; 3]);
            for (n, d) in &y.terms {
                debug_assert!(n.e == [0; 3]);
                let wt = self.exps_weight(&n.f);
                let twist = self.qp(-self.pair(&m.k, &wt));
                let cd = &(c * d) * &twist;
                for (f, s) in self.plus_mul(&m.f, &n.f) {
                    out.add_term(
                        Monomial {
                            f,
                            k: m.k + n.k,
                            e: [0; 3],
                        },
                        &cd * &s,
                    );
                }
            }
        }
        out
    }

    fn build_comm_table(&self) -> Vec<Vec<UqElement>> {
        let qd_inv = self.field.q_diff().inv().expect("q − q⁻¹ ≠ 0");
        let mut table = Vec::new();
        for &p in &self.simple {
            let mut row = vec![UqElement::zero(); self.n_roots];
            let alpha = self.roots[p];
            for &s in &self.simple {
                if s == p {
                    let mut c = self.k(alpha);
                    c.add_scaled(&self.k(-alpha), &-QScalar::one());
                    row[s] = c.scale(&qd_inv);
                }
            }
            if let Some(c) = self.composite() {
                let (a, b) = (self.simple[0], self.simple[1]);
                let (fa, fb) = (self.f_root(a), self.f_root(b));
                let (ca, cb) = (row[a].clone(), row[b].clone());
                // [E, F_a F_b] = [E,F_a] F_b + F_a [E,F_b]
                let ab = self.mul_no_e(&ca, &fb).add(&self.mul_no_e(&fa, &cb));
                let ba = self.mul_no_e(&cb, &fa).add(&self.mul_no_e(&fb, &ca));
                let mut v = ab;
                v.add_scaled(&ba, &-self.field.q_pow(-1));
                row[c] = v;
            }
            table.push(row);
        }
        table
    }

    fn simple_slot(&self, p: usize) -> usize {
        self.simple.iter().position(|&s| s == p).expect("simple root")
    }

    /// E_p · (F^c K_ν E^d) for a simple PBW index p.
    fn e_simple_times(&self, p: usize, m: &Monomial) -> UqElement {
        let mut out = UqElement::zero();
        let coef = self.qp(-self.pair(&m.k, &self.roots[p]));
        for (e, c) in self.plus_letter(p, &m.e) {
            out.add_term(Monomial { f: m.f, k: m.k, e }, &coef * &c);
        }
        let row = &self.comm[self.simple_slot(p)];
        for r in 0..self.n_roots {
            if row[r].is_zero() {
                continue;
            }
            for kk in 0..m.f[r] {
                let mut prefix = [0u32; 3];
                prefix[..r].copy_from_slice(&m.f[..r]);
                prefix[r] = kk;
                let mut suffix = [0u32; 3];
                suffix[r] = m.f[r] - kk - 1;
                suffix[r + 1..self.n_roots].copy_from_slice(&m.f[r + 1..self.n_roots]);
                let wt_suffix = self.exps_weight(&suffix);
                for (cm, cc) in &row[r].terms {
                    let factor = cc * &self.qp(-self.pair(&cm.k, &wt_suffix));
                    for (f1, c1) in self.plus_mul(&prefix, &cm.f) {
                        for (f2, c2) in self.plus_mul(&f1, &suffix) {
                            out.add_term(
                                Monomial {
                                    f: f2,
                                    k: cm.k + m.k,
                                    e: m.e,
                                },
                                &(&factor * &c1) * &c2,
                            );
                        }
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by a single generator letter.
    pub fn left_gen(&self, g: &Gen, y: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        match g {
            Gen::K(mu) => {
                for (m, c) in &y.terms {
                    let wt = self.exps_weight(&m.f);
                    let t = self.qp(-self.pair(mu, &wt));
                    out.add_term(
                        Monomial {
                            f: m.f,
                            k: *mu + m.k,
                            e: m.e,
                        },
                        c * &t,
                    );
                }
            }
            Gen::F(r) => {
                for (m, c) in &y.terms {
                    for (f, s) in self.plus_letter(*r, &m.f) {
                        out.add_term(Monomial { f, k: m.k, e: m.e }, c * &s);
                    }
                }
            }
            Gen::E(r) if self.is_simple_root(*r) => {
                for (m, c) in &y.terms {
                    out.add_scaled(&self.e_simple_times(*r, m), c);
                }
            }
            Gen::E(_) => {
                // E_{12} = E1 E2 − q⁻¹ E2 E1
                let (a, b) = (Gen::E(self.simple[0]), Gen::E(self.simple[1]));
                let ab = self.left_gen(&a, &self.left_gen(&b, y));
                let ba = self.left_gen(&b, &self.left_gen(&a, y));
                out = ab;
                out.add_scaled(&ba, &-self.field.q_pow(-1));
            }
        }
        out
    }

    /// The letters of a monomial in order (F-part, K, E-part).
    pub fn letters(&self, m: &Monomial) -> Vec<Gen> {
        let mut out = Vec::new();
        for r in 0..self.n_roots {
            for _ in 0..m.f[r] {
                out.push(Gen::F(r));
            }
        }
        if !m.k.is_zero() {
            out.push(Gen::K(m.k));
        }
        for r in 0..self.n_roots {
            for _ in 0..m.e[r] {
                out.push(Gen::E(r));
            }
        }
        out
    }

    fn left_monomial(&self, m: &Monomial, y: &UqElement) -> UqElement {
        let mut cur = y.clone();
        for g in self.letters(m).iter().rev() {
            cur = self.left_gen(g, &cur);
        }
        cur
    }

    pub fn multiply(&self, x: &UqElement, y: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (m, c) in &x.terms {
            out.add_scaled(&self.left_monomial(m, y), c);
        }
        out
    }

    pub fn product(&self, factors: &[UqElement]) -> UqElement {
        let mut cur = UqElement::one();
        for x in factors.iter().rev() {
            cur = self.multiply(x, &cur);
        }
        cur
    }

    pub fn pow(&self, x: &UqElement, n: u32) -> UqElement {
        let mut cur = UqElement::one();
        for _ in 0..n {
            cur = self.multiply(x, &cur);
        }
        cur
    }

    pub fn commutator(&self, x: &UqElement, y: &UqElement) -> UqElement {
        self.multiply(x, y).sub(&self.multiply(y, x))
    }

    /// Normal form of a word of generators.
    pub fn normal_form(&self, word: &[Gen]) -> UqElement {
        let mut cur = UqElement::one();
        for g in word.iter().rev() {
            cur = self.left_gen(g, &cur);
        }
        cur
    }

    /// Normal form of a linear combination of words.
    pub fn normal_form_sum(&self, words: &[(Vec<Gen>, QScalar)]) -> UqElement {
        let mut out = UqElement::zero();
        for (w, c) in words {
            out.add_scaled(&self.normal_form(w), c);
        }
        out
    }

    // ----- filtration -----

    /// deg E_β = deg F_β = ht(β), deg K_μ = −2·ht(μ).
    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        let mut d: i64 = 0;
        for r in 0..self.n_roots {
            d += (self.heights[r] * (m.f[r] + m.e[r])) as i64;
        }
        let h = self.datum.height(&m.k) * 2;
        debug_assert!(h.is_integer());
        d - h.to_integer()
    }

    pub fn filtration_degree(&self, x: &UqElement) -> Result<i64, CoreError> {
        x.terms
            .keys()
            .map(|m| self.monomial_degree(m))
            .max()
            .ok_or(CoreError::ZeroDegree)
    }

    /// Exponent vectors of total height at most `h`.
    pub fn exps_up_to_height(&self, h: u32) -> Vec<Exps> {
        let mut out = Vec::new();
        let mut x = [0u32; 3];
        self.enum_exps(0, h, &mut x, &mut out);
        out
    }

    fn enum_exps(&self, r: usize, budget: u32, x: &mut Exps, out: &mut Vec<Exps>) {
        if r == self.n_roots {
            out.push(*x);
            return;
        }
        let mut k = 0;
        while k * self.heights[r] <= budget {
            x[r] = k;
            self.enum_exps(r + 1, budget - k * self.heights[r], x, out);
            k += 1;
        }
        x[r] = 0;
    }

    pub fn exps_height(&self, x: &Exps) -> u32 {
        (0..self.n_roots).map(|r| x[r] * self.heights[r]).sum()
    }

    /// Number of PBW monomials of degree exactly `j` with F- and E-heights at
    /// most `h_max` and K-part in the box |coordinates| ≤ `k_max`.
    pub fn graded_piece_dim(&self, j: i64, h_max: u32, k_max: i64) -> usize {
        let exps = self.exps_up_to_height(h_max);
        let ks = self.weight_box(k_max);
        let mut n = 0;
        for f in &exps {
            for e in &exps {
                for k in &ks {
                    if self.monomial_degree(&Monomial { f: *f, k: *k, e: *e }) == j {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    pub fn weight_box(&self, k_max: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        for a in -k_max..=k_max {
            if self.datum.rank == 1 {
                out.push(Weight::new(a, 0));
            } else {
                for b in -k_max..=k_max {
                    out.push(Weight::new(a, b));
                }
            }
        }
        out
    }

    // ----- relations and the finite part -----

    /// The defining relations of the presentation as named word combinations
    /// that must vanish.
    pub fn defining_relations(&self) -> Vec<(String, Vec<(Vec<Gen>, QScalar)>)> {
        let one = QScalar::one;
        let q = self.field.q();
        let qi = self.field.q_pow(-1);
        let rank = self.datum.rank;
        let mut out = Vec::new();
        out.push(("K_0 = 1".to_string(), vec![(vec![Gen::K(Weight::ZERO)], one()), (vec![], -one())]));
        let mut ks = Vec::new();
        for i in 0..rank {
            ks.push(self.datum.omega(i));
            ks.push(-self.datum.omega(i));
        }
        for a in &ks {
            for b in &ks {
                out.push((
                    format!("K{a} K{b} = K{}", *a + *b),
                    vec![(vec![Gen::K(*a), Gen::K(*b)], one()), (vec![Gen::K(*a + *b)], -one())],
                ));
            }
        }
        for j in 0..rank {
            let mu = self.datum.omega(j);
            for i in 0..rank {
                let r = self.simple[i];
                let c = self.qp(self.pair(&mu, &self.roots[r]));
                let ci = c.inv().expect("unit");
                out.push((
                    format!("K E{} K^-1 (mu = w{})", i + 1, j + 1),
                    vec![(vec![Gen::K(mu), Gen::E(r), Gen::K(-mu)], one()), (vec![Gen::E(r)], -c)],
                ));
                out.push((
                    format!("K F{} K^-1 (mu = w{})", i + 1, j + 1),
                    vec![(vec![Gen::K(mu), Gen::F(r), Gen::K(-mu)], one()), (vec![Gen::F(r)], -ci)],
                ));
            }
        }
        let d = self.field.q_diff().inv().expect("q − q⁻¹ ≠ 0");
        for i in 0..rank {
            for j in 0..rank {
                let (r, s) = (self.simple[i], self.simple[j]);
                let mut w = vec![
                    (vec![Gen::E(r), Gen::F(s)], one()),
                    (vec![Gen::F(s), Gen::E(r)], -one()),
                ];
                if i == j {
                    let a = self.roots[r];
                    w.push((vec![Gen::K(a)], -d.clone()));
                    w.push((vec![Gen::K(-a)], d.clone()));
                }
                out.push((format!("[E{}, F{}]", i + 1, j + 1), w));
            }
        }
        if rank == 2 {
            let qq = &q + &qi;
            for (i, j) in [(0usize, 1usize), (1, 0)] {
                let (r, s) = (self.simple[i], self.simple[j]);
                for (name, g) in [("E", Gen::E as fn(usize) -> Gen), ("F", Gen::F as fn(usize) -> Gen)] {
                    out.push((
                        format!("Serre {name}{}^2 {name}{}", i + 1, j + 1),
                        vec![
                            (vec![g(r), g(r), g(s)], one()),
                            (vec![g(r), g(s), g(r)], -qq.clone()),
                            (vec![g(s), g(r), g(r)], one()),
                        ],
                    ));
                }
            }
            // definition of the non-simple root vectors
            let (a, b) = (self.simple[0], self.simple[1]);
            for (name, g) in [("E", Gen::E as fn(usize) -> Gen), ("F", Gen::F as fn(usize) -> Gen)] {
                out.push((
                    format!("{name}12 = {name}1 {name}2 - q^-1 {name}2 {name}1"),
                    vec![
                        (vec![g(1)], one()),
                        (vec![g(a), g(b)], -one()),
                        (vec![g(b), g(a)], qi.clone()),
                    ],
                ));
            }
        }
        out
    }

    /// Dimension of span{ad(F^a E^b)(v) : ht(a) + ht(b) ≤ cutoff} and whether
    /// it already equals the dimension at cutoff − 1.
    pub fn ad_orbit_probe(&self, v: &UqElement, cutoff: u32) -> (usize, bool) {
        let dim_at = |c: u32| -> usize {
            let exps = self.exps_up_to_height(c);
            let mut ech: crate::linalg::Echelon<Monomial> = crate::linalg::Echelon::new();
            for e in &exps {
                let eh = self.exps_height(e);
                let ee = UqElement::monomial(Monomial { e: *e, ..Monomial::ONE }, QScalar::one());
                let x = self.adjoint_act(&ee, v);
                for f in &exps {
                    if self.exps_height(f) + eh > c {
                        continue;
                    }
                    let ff = UqElement::monomial(Monomial { f: *f, ..Monomial::ONE }, QScalar::one());
                    let y = self.adjoint_act(&ff, &x);
                    ech.insert(y.terms.clone());
                }
            }
            ech.rank()
        };
        let d = dim_at(cutoff);
        let prev = if cutoff == 0 { 0 } else { dim_at(cutoff - 1) };
        (d, cutoff > 0 && d == prev)
    }

    // ----- printing -----

    pub fn root_name(&self, r: usize) -> &'static str {
        match (self.datum.ty, r) {
            (CartanType::A1, _) => "1",
            (CartanType::A2, 0) => "1",
            (CartanType::A2, 1) => "12",
            (CartanType::A2, _) => "2",
        }
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for r in 0..self.n_roots {
            match m.f[r] {
                0 => {}
                1 => parts.push(format!("F{}", self.root_name(r))),
                n => parts.push(format!("F{}^{}", self.root_name(r), n)),
            }
        }
        if !m.k.is_zero() {
            let c: Vec<String> = self.datum.coords(&m.k).iter().map(|x| x.to_string()).collect();
            parts.push(format!("K({})", c.join(",")));
        }
        for r in 0..self.n_roots {
            match m.e[r] {
                0 => {}
                1 => parts.push(format!("E{}", self.root_name(r))),
                n => parts.push(format!("E{}^{}", self.root_name(r), n)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn render(&self, x: &UqElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in x.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let mono = self.fmt_monomial(m);
            if c.is_one() {
                s.push_str(&mono);
            } else if mono == "1" {
                let _ = write!(s, "{}", scalar_factor(c));
            } else {
                let _ = write!(s, "{}*{}", scalar_factor(c), mono);
            }
        }
        s
    }
}

fn scalar_factor(c: &QScalar) -> String {
    let s = c.to_string();
    if s.starts_with('(') {
        s
    } else {
        format!("({s})")
    }
}

pub(crate) fn push<K: Ord>(acc: &mut BTreeMap<K, QScalar>, k: K, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_commutator() {
        let uq = Uq::new(RootDatum::a1());
        let f = uq.field();
        let ef = uq.multiply(&uq.e(0), &uq.f(0));
        let mut expect = uq.multiply(&uq.f(0), &uq.e(0));
        let cartan = uq.k_alpha(0).sub(&uq.k(-uq.datum().alpha(0)));
        expect.add_scaled(&cartan, &f.q_diff().inv().unwrap());
        assert_eq!(ef, expect);
    }

    #[test]
    fn k_conjugation() {
        let uq = Uq::new(RootDatum::a1());
        let w = uq.datum().omega(0);
        let x = uq.product(&[uq.k(w), uq.e(0), uq.k(-w)]);
        assert_eq!(x, uq.e(0).scale(&uq.field().q()));
        assert_eq!(uq.normal_form(&[Gen::K(Weight::ZERO)]), UqElement::one());
    }

    #[test]
    fn a2_composite_commutators() {
        let uq = Uq::new(RootDatum::a2());
        let f = uq.field();
        // [E1, F12] = F2 K_{α1}, [E2, F12] = −q⁻¹ F1 K_{−α2}
        let c1 = uq.commutator(&uq.e(0), &uq.f_root(1));
        assert_eq!(c1, uq.multiply(&uq.f(1), &uq.k_alpha(0)));
        let c2 = uq.commutator(&uq.e(1), &uq.f_root(1));
        let expect = uq
            .multiply(&uq.f(0), &uq.k(-uq.datum().alpha(1)))
            .scale(&-f.q_pow(-1));
        assert_eq!(c2, expect);
    }

    #[test]
    fn degrees() {
        let uq = Uq::new(RootDatum::a1());
        let a = uq.datum().alpha(0);
        let x = uq.product(&[uq.f(0), uq.k(-a), uq.e(0)]);
        assert_eq!(uq.filtration_degree(&x).unwrap(), 4);
        assert_eq!(uq.filtration_degree(&uq.k(a)).unwrap(), -2);
        let w = uq.datum().omega(0);
        let y = uq.product(&[uq.f(0), uq.k(-w), uq.e(0)]);
        assert_eq!(uq.filtration_degree(&y).unwrap(), 3);
        assert_eq!(uq.filtration_degree(&UqElement::one()).unwrap(), 0);
        assert!(uq.filtration_degree(&UqElement::zero()).is_err());
    }
}
