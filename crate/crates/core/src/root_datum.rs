//! Root data of types A1 and A2: weights, pairing, Weyl group, dimension and
//! partition counts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::scalars::{QField, QScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A1,
    A2,
}

impl FromStr for CartanType {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self, CoreError> {
        match s.trim() {
            "A1" | "a1" => Ok(CartanType::A1),
            "A2" | "a2" => Ok(CartanType::A2),
            other => Err(CoreError::UnknownRootDatum(other.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A1 => write!(f, "A1"),
            CartanType::A2 => write!(f, "A2"),
        }
    }
}

/// An element of P in ω-coordinates. Rank one uses only the first slot.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub [i64; 2]);

impl Weight {
    pub const ZERO: Weight = Weight([0, 0]);

    pub fn new(a: i64, b: i64) -> Self {
        Weight([a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight([-self.0[0], -self.0[1]])
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight([self * w.0[0], self * w.0[1]])
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        *self = *self + o;
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, o: Weight) {
        *self = *self - o;
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// A Weyl group element as a reduced word in simple reflections (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement(pub Vec<usize>);

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement(Vec::new())
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn inverse(&self) -> Self {
        WeylElement(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A character of P: either q^μ or a list of values on the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightCharacter {
    Integral(Weight),
    Formal(Vec<QScalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub ty: CartanType,
    pub rank: usize,
    cartan: [[i64; 2]; 2],
    cartan_inv: [[Rational64; 2]; 2],
    pos_roots: Vec<Weight>,
    weyl: Vec<WeylElement>,
    field: QField,
}

impl RootDatum {
    pub fn new(ty: CartanType) -> Self {
        let r = Rational64::new;
        match ty {
            CartanType::A1 => RootDatum {
                ty,
                rank: 1,
                cartan: [[2, 0], [0, 0]],
                cartan_inv: [[r(1, 2), r(0, 1)], [r(0, 1), r(0, 1)]],
                pos_roots: vec![Weight::new(2, 0)],
                weyl: vec![WeylElement(vec![]), WeylElement(vec![0])],
                field: QField::new(4),
            },
            CartanType::A2 => RootDatum {
                ty,
                rank: 2,
                cartan: [[2, -1], [-1, 2]],
                cartan_inv: [[r(2, 3), r(1, 3)], [r(1, 3), r(2, 3)]],
                // PBW order: α1 < α1+α2 < α2
                pos_roots: vec![Weight::new(2, -1), Weight::new(1, 1), Weight::new(-1, 2)],
                weyl: vec![
                    WeylElement(vec![]),
                    WeylElement(vec![0]),
                    WeylElement(vec![1]),
                    WeylElement(vec![0, 1]),
                    WeylElement(vec![1, 0]),
                    WeylElement(vec![0, 1, 0]),
                ],
                field: QField::new(6),
            },
        }
    }

    pub fn a1() -> Self {
        Self::new(CartanType::A1)
    }

    pub fn a2() -> Self {
        Self::new(CartanType::A2)
    }

    pub fn from_label(label: &str) -> Result<Self, CoreError> {
        Ok(Self::new(label.parse()?))
    }

    pub fn field(&self) -> QField {
        self.field
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Builds a weight from rank-many coordinates.
    pub fn weight(&self, coords: &[i64]) -> Result<Weight, CoreError> {
        if coords.len() != self.rank {
            return Err(CoreError::RankMismatch {
                got: coords.len(),
                rank: self.rank,
            });
        }
        let mut w = Weight::ZERO;
        for (i, c) in coords.iter().enumerate() {
            w.0[i] = *c;
        }
        Ok(w)
    }

    pub fn coords(&self, w: &Weight) -> Vec<i64> {
        w.0[..self.rank].to_vec()
    }

    pub fn fmt_weight(&self, w: &Weight) -> String {
        let c: Vec<String> = self.coords(w).iter().map(|x| x.to_string()).collect();
        format!("({})", c.join(","))
    }

    pub fn omega(&self, i: usize) -> Weight {
        let mut w = Weight::ZERO;
        w.0[i] = 1;
        w
    }

    pub fn alpha(&self, i: usize) -> Weight {
        Weight([self.cartan[i][0], self.cartan[i][1]])
    }

    pub fn rho(&self) -> Weight {
        (0..self.rank).fold(Weight::ZERO, |acc, i| acc + self.omega(i))
    }

    /// Positive roots in PBW order.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.pos_roots
    }

    /// The positive root index of the simple root α_i.
    pub fn simple_root_index(&self, i: usize) -> usize {
        match (self.ty, i) {
            (CartanType::A1, _) => 0,
            (CartanType::A2, 0) => 0,
            (CartanType::A2, _) => 2,
        }
    }

    pub fn pairing(&self, mu: &Weight, nu: &Weight) -> Rational64 {
        let mut s = Rational64::from_integer(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += self.cartan_inv[i][j] * mu.0[i] * nu.0[j];
            }
        }
        s
    }

    /// Coordinates in the basis of simple roots.
    pub fn alpha_coords(&self, mu: &Weight) -> [Rational64; 2] {
        let mut c = [Rational64::from_integer(0); 2];
        for (i, ci) in c.iter_mut().enumerate().take(self.rank) {
            for j in 0..self.rank {
                *ci += self.cartan_inv[i][j] * mu.0[j];
            }
        }
        c
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.alpha_coords(mu).iter().all(|c| c.is_integer())
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self, mu: &Weight) -> Rational64 {
        self.alpha_coords(mu).iter().sum()
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn longest_element(&self) -> &WeylElement {
        self.weyl.last().expect("nonempty Weyl group")
    }

    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        *mu - mu.0[i] * self.alpha(i)
    }

    pub fn weyl_act_weight(&self, w: &WeylElement, mu: &Weight) -> Weight {
        w.0.iter().rev().fold(*mu, |acc, &i| self.reflect(i, &acc))
    }

    pub fn weyl_act(&self, w: &WeylElement, lambda: &WeightCharacter) -> WeightCharacter {
        match lambda {
            WeightCharacter::Integral(mu) => WeightCharacter::Integral(self.weyl_act_weight(w, mu)),
            WeightCharacter::Formal(_) => {
                let winv = w.inverse();
                let vals = (0..self.rank)
                    .map(|i| self.char_value(lambda, &self.weyl_act_weight(&winv, &self.omega(i))))
                    .collect();
                WeightCharacter::Formal(vals)
            }
        }
    }

    /// λ(μ) for a character λ and μ ∈ P.
    pub fn char_value(&self, lambda: &WeightCharacter, mu: &Weight) -> QScalar {
        match lambda {
            WeightCharacter::Integral(nu) => self
                .field
                .q_rat_pow(self.pairing(nu, mu))
                .expect("pairing exponent is integral in v"),
            WeightCharacter::Formal(vals) => {
                let mut out = QScalar::one();
                for (i, v) in vals.iter().enumerate().take(self.rank) {
                    if mu.0[i] != 0 {
                        out *= &v.pow(mu.0[i]);
                    }
                }
                out
            }
        }
    }

    /// Values on the fundamental weights.
    pub fn to_formal(&self, lambda: &WeightCharacter) -> Vec<QScalar> {
        (0..self.rank)
            .map(|i| self.char_value(lambda, &self.omega(i)))
            .collect()
    }

    pub fn char_eq(&self, a: &WeightCharacter, b: &WeightCharacter) -> bool {
        self.to_formal(a) == self.to_formal(b)
    }

    /// Pointwise product of characters, λ·q^μ.
    pub fn char_shift(&self, lambda: &WeightCharacter, mu: &Weight) -> WeightCharacter {
        match lambda {
            WeightCharacter::Integral(nu) => WeightCharacter::Integral(*nu + *mu),
            WeightCharacter::Formal(_) => {
                let a = self.to_formal(lambda);
                let b = self.to_formal(&WeightCharacter::Integral(*mu));
                WeightCharacter::Formal(a.iter().zip(&b).map(|(x, y)| x * y).collect())
            }
        }
    }

    pub fn char_inverse(&self, lambda: &WeightCharacter) -> WeightCharacter {
        match lambda {
            WeightCharacter::Integral(nu) => WeightCharacter::Integral(-*nu),
            WeightCharacter::Formal(v) => {
                WeightCharacter::Formal(v.iter().map(|x| x.inv().expect("character values are units")).collect())
            }
        }
    }

    pub fn is_dominant_classical(&self, mu: &Weight) -> bool {
        (0..self.rank).all(|i| mu.0[i] >= 0)
    }

    pub fn is_regular_dominant_classical(&self, mu: &Weight) -> bool {
        (0..self.rank).all(|i| mu.0[i] > 0)
    }

    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64, CoreError> {
        if !self.is_dominant_classical(lambda) {
            return Err(CoreError::NotDominant(self.fmt_weight(lambda)));
        }
        let rho = self.rho();
        let shifted = *lambda + rho;
        let mut d = Rational64::from_integer(1);
        for beta in &self.pos_roots {
            d *= self.pairing(&shifted, beta) / self.pairing(&rho, beta);
        }
        debug_assert!(d.is_integer());
        Ok(d.to_integer() as u64)
    }

    /// Number of ways to write β as a nonnegative combination of positive roots.
    pub fn kostant_partition(&self, beta: &Weight) -> u64 {
        let c = self.alpha_coords(beta);
        if c.iter().any(|x| !x.is_integer() || *x < Rational64::from_integer(0)) {
            return 0;
        }
        let target = [c[0].to_integer(), c[1].to_integer()];
        let roots: Vec<[i64; 2]> = self
            .pos_roots
            .iter()
            .map(|r| {
                let rc = self.alpha_coords(r);
                [rc[0].to_integer(), rc[1].to_integer()]
            })
            .collect();
        count_partitions(&roots, target)
    }

    /// Weights of the simple module with highest weight λ, with multiplicities,
    /// from Freudenthal-free counting: the multiset of weights of V_λ obtained
    /// by the Weyl character as an alternating sum of Kostant counts.
    pub fn simple_weights(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>, CoreError> {
        if !self.is_dominant_classical(lambda) {
            return Err(CoreError::NotDominant(self.fmt_weight(lambda)));
        }
        let rho = self.rho();
        let mut out = Vec::new();
        // weights lie in λ − Q_+ with height at most that of 2λ
        let ht = self.height(&(2 * *lambda)).to_integer().max(0);
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..=ht {
            for b in 0..=ht {
                let mu = *lambda - (a * self.alpha(0) + if self.rank > 1 { b * self.alpha(1) } else { Weight::ZERO });
                if self.rank == 1 && b > 0 {
                    continue;
                }
                if !seen.insert(mu) {
                    continue;
                }
                let mut m: i64 = 0;
                for w in &self.weyl {
                    let sign = if w.length() % 2 == 0 { 1 } else { -1 };
                    let beta = self.weyl_act_weight(w, &(*lambda + rho)) - (mu + rho);
                    m += sign * self.kostant_partition(&beta) as i64;
                }
                if m > 0 {
                    out.push((mu, m as u64));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn count_partitions(roots: &[[i64; 2]], target: [i64; 2]) -> u64 {
    if target == [0, 0] {
        return 1;
    }
    let Some((first, rest)) = roots.split_first() else {
        return 0;
    };
    let mut total = 0;
    let mut t = target;
    while t[0] >= 0 && t[1] >= 0 {
        total += count_partitions(rest, t);
        if *first == [0, 0] {
            break;
        }
        t = [t[0] - first[0], t[1] - first[1]];
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn pairing_values() {
        let a1 = RootDatum::a1();
        let a2 = RootDatum::a2();
        assert_eq!(a1.pairing(&a1.alpha(0), &a1.alpha(0)), r(2, 1));
        assert_eq!(a1.pairing(&a1.omega(0), &a1.omega(0)), r(1, 2));
        assert_eq!(a2.pairing(&a2.alpha(0), &a2.alpha(1)), r(-1, 1));
        for beta in a2.positive_roots() {
            assert_eq!(a2.pairing(beta, beta), r(2, 1));
        }
        for i in 0..2 {
            for j in 0..2 {
                let cj = a2.alpha(j);
                // <ω_i, α_j^∨> = δ_ij for simply laced data
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(a2.pairing(&a2.omega(i), &cj), r(expect, 1));
            }
        }
    }

    #[test]
    fn weyl_action() {
        let a1 = RootDatum::a1();
        let s = &a1.weyl_group()[1];
        assert_eq!(a1.weyl_act_weight(s, &a1.omega(0)), -a1.omega(0));
        let a2 = RootDatum::a2();
        let s1 = WeylElement(vec![0]);
        assert_eq!(a2.weyl_act_weight(&s1, &a2.omega(1)), a2.omega(1));
        let w0 = a2.longest_element();
        assert_eq!(a2.weyl_act_weight(w0, &a2.rho()), -a2.rho());
    }

    #[test]
    fn dimensions_and_partitions() {
        let a1 = RootDatum::a1();
        let a2 = RootDatum::a2();
        for n in 0..6 {
            assert_eq!(a1.weyl_dim(&Weight::new(n, 0)).unwrap(), n as u64 + 1);
        }
        assert_eq!(a2.weyl_dim(&a2.rho()).unwrap(), 8);
        assert_eq!(a2.weyl_dim(&a2.omega(0)).unwrap(), 3);
        assert!(a2.weyl_dim(&Weight::new(1, -1)).is_err());
        assert_eq!(a2.kostant_partition(&Weight::ZERO), 1);
        assert_eq!(a2.kostant_partition(&Weight::new(1, 1)), 2);
        assert_eq!(a1.kostant_partition(&Weight::new(6, 0)), 1);
        assert_eq!(a1.kostant_partition(&Weight::new(3, 0)), 0);
    }

    #[test]
    fn simple_weights_of_small_modules() {
        let a2 = RootDatum::a2();
        let w = a2.simple_weights(&a2.omega(0)).unwrap();
        let ws: Vec<Weight> = w.iter().map(|(m, _)| *m).collect();
        assert_eq!(w.len(), 3);
        assert!(ws.contains(&a2.omega(0)));
        assert!(ws.contains(&(a2.omega(0) - a2.alpha(0))));
        assert!(ws.contains(&(a2.omega(0) - a2.alpha(0) - a2.alpha(1))));
        let total: u64 = a2.simple_weights(&a2.rho()).unwrap().iter().map(|x| x.1).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn characters() {
        let a1 = RootDatum::a1();
        let f = a1.field();
        let lam = WeightCharacter::Integral(a1.omega(0));
        assert_eq!(a1.char_value(&lam, &a1.alpha(0)), f.q());
        let formal = WeightCharacter::Formal(a1.to_formal(&lam));
        assert!(a1.char_eq(&formal, &lam));
        let s = &a1.weyl_group()[1];
        let moved = a1.weyl_act(s, &formal);
        assert!(a1.char_eq(&moved, &WeightCharacter::Integral(-a1.omega(0))));
    }
}
