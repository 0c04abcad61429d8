//! Word-level rewriting to PBW normal form.
//!
//! Independent of the structured multiplication in the parent module: words
//! are rewritten one adjacent pair at a time, with rule classes applied in
//! priority order (Cartan moves, then E–F commutators, then reorderings within
//! U^+ and U^-). Within the active class the occurrence is chosen by a
//! [`Strategy`], so different strategies exercise different rewrite orders.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{push, Gen, Monomial, Uq, UqElement};
use crate::root_datum::Weight;
use crate::scalars::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

type Word = Vec<Gen>;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Class {
    Cartan,
    Commutator,
    Reorder,
}

impl Uq {
    fn redex_class(&self, w: &Word, i: usize) -> Option<Class> {
        if let Gen::K(mu) = &w[i] {
            if mu.is_zero() {
                return Some(Class::Cartan);
            }
        }
        let (x, y) = (w.get(i)?, w.get(i + 1)?);
        match (x, y) {
            (Gen::K(_), Gen::K(_)) | (Gen::K(_), Gen::F(_)) | (Gen::E(_), Gen::K(_)) => Some(Class::Cartan),
            (Gen::E(_), Gen::F(_)) => Some(Class::Commutator),
            (Gen::F(r), Gen::F(s)) | (Gen::E(r), Gen::E(s)) if r > s => Some(Class::Reorder),
            _ => None,
        }
    }

    /// Rewrites position `i` (and possibly `i+1`) of `w`, returning the
    /// replacement words with coefficients.
    fn rewrite_at(&self, w: &Word, i: usize) -> Vec<(Word, QScalar)> {
        let splice = |repl: Vec<Gen>, len: usize| -> Word {
            let mut out = w[..i].to_vec();
            out.extend(repl);
            out.extend_from_slice(&w[i + len..]);
            out
        };
        let one = QScalar::one();
        if let Gen::K(mu) = &w[i] {
            if mu.is_zero() {
                return vec![(splice(vec![], 1), one)];
            }
        }
        let (x, y) = (w[i].clone(), w[i + 1].clone());
        let qi = self.field.q_pow(-1);
        match (x, y) {
            (Gen::K(a), Gen::K(b)) => vec![(splice(vec![Gen::K(a + b)], 2), one)],
            (Gen::K(mu), Gen::F(s)) => {
                let c = self.qp(-self.pair(&mu, &self.roots[s]));
                vec![(splice(vec![Gen::F(s), Gen::K(mu)], 2), c)]
            }
            (Gen::E(s), Gen::K(mu)) => {
                let c = self.qp(-self.pair(&mu, &self.roots[s]));
                vec![(splice(vec![Gen::K(mu), Gen::E(s)], 2), c)]
            }
            (Gen::E(r), Gen::F(s)) => {
                if !self.is_simple_root(r) {
                    let (a, b) = (self.simple[0], self.simple[1]);
                    return vec![
                        (splice(vec![Gen::E(a), Gen::E(b)], 1), one),
                        (splice(vec![Gen::E(b), Gen::E(a)], 1), -qi),
                    ];
                }
                if !self.is_simple_root(s) {
                    let (a, b) = (self.simple[0], self.simple[1]);
                    let mut w1 = w[..i + 1].to_vec();
                    w1.extend([Gen::F(a), Gen::F(b)]);
                    w1.extend_from_slice(&w[i + 2..]);
                    let mut w2 = w[..i + 1].to_vec();
                    w2.extend([Gen::F(b), Gen::F(a)]);
                    w2.extend_from_slice(&w[i + 2..]);
                    return vec![(w1, one), (w2, -qi)];
                }
                let mut out = vec![(splice(vec![Gen::F(s), Gen::E(r)], 2), one.clone())];
                if r == s {
                    let d = self.field.q_diff().inv().expect("q − q⁻¹ ≠ 0");
                    let a = self.roots[r];
                    out.push((splice(vec![Gen::K(a)], 2), d.clone()));
                    out.push((splice(vec![Gen::K(-a)], 2), -d));
                }
                out
            }
            (Gen::F(r), Gen::F(s)) => self
                .reorder(r, s)
                .into_iter()
                .map(|(p, c)| (splice(p.into_iter().map(Gen::F).collect(), 2), c))
                .collect(),
            (Gen::E(r), Gen::E(s)) => self
                .reorder(r, s)
                .into_iter()
                .map(|(p, c)| (splice(p.into_iter().map(Gen::E).collect(), 2), c))
                .collect(),
            _ => unreachable!("not a redex"),
        }
    }

    /// X_r X_s for r > s as a combination of ordered words.
    fn reorder(&self, r: usize, s: usize) -> Vec<(Vec<usize>, QScalar)> {
        let q = self.field.q();
        let qi = self.field.q_pow(-1);
        match (r, s) {
            (1, 0) => vec![(vec![0, 1], qi)],
            (2, 1) => vec![(vec![1, 2], qi)],
            (2, 0) => vec![(vec![0, 2], q.clone()), (vec![1], -q)],
            _ => unreachable!("ordered pair"),
        }
    }

    fn word_to_monomial(&self, w: &Word) -> Monomial {
        let mut m = Monomial::ONE;
        for g in w {
            match g {
                Gen::F(r) => m.f[*r] += 1,
                Gen::E(r) => m.e[*r] += 1,
                Gen::K(mu) => m.k += *mu,
            }
        }
        m
    }

    /// Normal form by word rewriting under the given strategy.
    pub fn rewrite_normal_form(&self, words: &[(Vec<Gen>, QScalar)], strategy: Strategy) -> UqElement {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut pending: BTreeMap<Word, QScalar> = BTreeMap::new();
        for (w, c) in words {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut out = UqElement::zero();
        while let Some((w, c)) = pending.pop_first() {
            let mut best: Option<Class> = None;
            let mut sites = Vec::new();
            for i in 0..w.len() {
                if let Some(cl) = self.redex_class(&w, i) {
                    match best {
                        Some(b) if cl > b => {}
                        Some(b) if cl == b => sites.push(i),
                        _ => {
                            best = Some(cl);
                            sites = vec![i];
                        }
                    }
                }
            }
            if sites.is_empty() {
                out.add_term(self.word_to_monomial(&w), c);
                continue;
            }
            let i = match (strategy, rng.as_mut()) {
                (Strategy::Leftmost, _) => sites[0],
                (Strategy::Rightmost, _) => *sites.last().expect("nonempty"),
                (Strategy::Random(_), Some(g)) => sites[g.random_range(0..sites.len())],
                (Strategy::Random(_), None) => unreachable!(),
            };
            for (nw, d) in self.rewrite_at(&w, i) {
                push(&mut pending, nw, &c * &d);
            }
        }
        out
    }

    /// A random word of the given length over the generators of this datum,
    /// including non-simple root vectors and K_{±ω_i}.
    pub fn random_word<R: Rng>(&self, rng: &mut R, len: usize) -> Vec<Gen> {
        (0..len)
            .map(|_| match rng.random_range(0..3) {
                0 => Gen::E(rng.random_range(0..self.n_roots)),
                1 => Gen::F(rng.random_range(0..self.n_roots)),
                _ => {
                    let i = rng.random_range(0..self.datum.rank);
                    let s = if rng.random_bool(0.5) { 1 } else { -1 };
                    let mut mu = Weight::ZERO;
                    mu.0[i] = s;
                    Gen::K(mu)
                }
            })
            .collect()
    }

    /// A random element: a combination of up to `terms` random words of length
    /// at most `max_len`, with small integer-times-q-power coefficients.
    pub fn random_element<R: Rng>(&self, rng: &mut R, terms: usize, max_len: usize) -> UqElement {
        let mut out = UqElement::zero();
        for _ in 0..terms.max(1) {
            let len = rng.random_range(0..=max_len);
            let w = self.random_word(rng, len);
            let c = &QScalar::from_int(rng.random_range(1..=3)) * &self.field.q_pow(rng.random_range(-2..=2));
            out.add_scaled(&self.normal_form(&w), &c);
        }
        out
    }
}
