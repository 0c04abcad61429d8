//! Finite-dimensional weight modules given by matrices, their tensor
//! products, and braidings obtained by solving the intertwining equations.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::linalg::{solve_affine, SparseVec};
use crate::root_datum::{CartanType, Weight};
use crate::scalars::QScalar;
use crate::uq_algebra::{Gen, Uq, UqElement};

/// Dense matrix over Q(v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<QScalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![QScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QScalar::one());
        }
        m
    }

    pub fn diag(d: Vec<QScalar>) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &QScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&o.data) {
            *x += y;
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> Mat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = &*x * c;
        }
        out
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.add(&o.scale(&-QScalar::one()))
    }

    /// Kronecker product; basis order (i, j) ↦ i * dim(o) + j.
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[QScalar]) -> Vec<QScalar> {
        let mut out = vec![QScalar::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Permutation V⊗W → W⊗V.
    pub fn flip(n: usize, m: usize) -> Mat {
        let mut p = Mat::zeros(n * m, n * m);
        for i in 0..n {
            for j in 0..m {
                p.set(j * n + i, i * m + j, QScalar::one());
            }
        }
        p
    }
}

/// A finite-dimensional weight module: weights of the basis vectors and the
/// matrices of the simple E_i, F_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdModule {
    pub weights: Vec<Weight>,
    pub e: Vec<Mat>,
    pub f: Vec<Mat>,
}

impl FdModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn trivial(rank: usize) -> Self {
        FdModule {
            weights: vec![Weight::ZERO],
            e: vec![Mat::zeros(1, 1); rank],
            f: vec![Mat::zeros(1, 1); rank],
        }
    }

    /// The (n+1)-dimensional A1 module, basis v_0..v_n of weights (n−2k)ω,
    /// F v_k = [k+1] v_{k+1}, E v_k = [n−k+1] v_{k−1}.
    pub fn a1_simple(uq: &Uq, n: u32) -> Self {
        let f = uq.field();
        let d = n as usize + 1;
        let mut e_m = Mat::zeros(d, d);
        let mut f_m = Mat::zeros(d, d);
        for k in 0..d {
            if k + 1 < d {
                f_m.set(k + 1, k, f.q_int(k as i64 + 1));
            }
            if k > 0 {
                e_m.set(k - 1, k, f.q_int(n as i64 - k as i64 + 1));
            }
        }
        FdModule {
            weights: (0..d).map(|k| Weight::new(n as i64 - 2 * k as i64, 0)).collect(),
            e: vec![e_m],
            f: vec![f_m],
        }
    }

    /// The two three-dimensional A2 modules V_{ω_i}.
    pub fn a2_fundamental(uq: &Uq, i: usize) -> Self {
        let d = uq.datum();
        let one = QScalar::one;
        let mut e = vec![Mat::zeros(3, 3), Mat::zeros(3, 3)];
        let mut f = vec![Mat::zeros(3, 3), Mat::zeros(3, 3)];
        let (a, b) = if i == 0 { (0, 1) } else { (1, 0) };
        // v1 -F_a-> v2 -F_b-> v3
        f[a].set(1, 0, one());
        e[a].set(0, 1, one());
        f[b].set(2, 1, one());
        e[b].set(1, 2, one());
        let top = d.omega(i);
        let w1 = top - d.alpha(a);
        let w2 = w1 - d.alpha(b);
        FdModule {
            weights: vec![top, w1, w2],
            e,
            f,
        }
    }

    pub fn k_matrix(&self, uq: &Uq, mu: &Weight) -> Mat {
        Mat::diag(
            self.weights
                .iter()
                .map(|w| uq.qp(uq.datum().pairing(mu, w)))
                .collect(),
        )
    }

    fn root_matrix(&self, uq: &Uq, r: usize, raising: bool) -> Mat {
        let simple: Vec<usize> = (0..uq.datum().rank).map(|i| uq.simple_index(i)).collect();
        let pick = |i: usize| if raising { &self.e[i] } else { &self.f[i] };
        if let Some(i) = simple.iter().position(|&s| s == r) {
            return pick(i).clone();
        }
        let (x, y) = (pick(0), pick(1));
        let qi = uq.field().q_pow(-1);
        x.mul(y).sub(&y.mul(x).scale(&qi))
    }

    pub fn gen_matrix(&self, uq: &Uq, g: &Gen) -> Mat {
        match g {
            Gen::E(r) => self.root_matrix(uq, *r, true),
            Gen::F(r) => self.root_matrix(uq, *r, false),
            Gen::K(mu) => self.k_matrix(uq, mu),
        }
    }

    pub fn matrix_of(&self, uq: &Uq, x: &UqElement) -> Mat {
        let n = self.dim();
        let mut out = Mat::zeros(n, n);
        let mut cache: BTreeMap<Gen, Mat> = BTreeMap::new();
        for (m, c) in x.terms() {
            let mut cur = Mat::identity(n);
            for g in uq.letters(m) {
                let gm = cache.entry(g.clone()).or_insert_with(|| self.gen_matrix(uq, &g));
                cur = cur.mul(gm);
            }
            out = out.add(&cur.scale(c));
        }
        out
    }

    /// Checks that every defining relation acts by zero.
    pub fn satisfies_relations(&self, uq: &Uq) -> bool {
        uq.defining_relations().iter().all(|(_, rel)| {
            let x = uq.normal_form_sum(rel);
            // the relation is zero in U_q already; evaluate the words directly
            let n = self.dim();
            let mut acc = Mat::zeros(n, n);
            for (w, c) in rel {
                let mut cur = Mat::identity(n);
                for g in w {
                    cur = cur.mul(&self.gen_matrix(uq, g));
                }
                acc = acc.add(&cur.scale(c));
            }
            x.is_zero() && acc.is_zero()
        })
    }

    /// V⊗W with the coproduct action.
    pub fn tensor(&self, uq: &Uq, o: &FdModule) -> FdModule {
        let d = uq.datum();
        let mut weights = Vec::new();
        for a in &self.weights {
            for b in &o.weights {
                weights.push(*a + *b);
            }
        }
        let (i1, i2) = (Mat::identity(self.dim()), Mat::identity(o.dim()));
        let mut e = Vec::new();
        let mut f = Vec::new();
        for i in 0..d.rank {
            let a = d.alpha(i);
            e.push(self.e[i].kron(&i2).add(&self.k_matrix(uq, &a).kron(&o.e[i])));
            f.push(self.f[i].kron(&o.k_matrix(uq, &-a)).add(&i1.kron(&o.f[i])));
        }
        FdModule { weights, e, f }
    }

    /// Whether `m: self → other` intertwines all simple generators.
    pub fn is_intertwiner(&self, uq: &Uq, other: &FdModule, m: &Mat) -> bool {
        let rank = uq.datum().rank;
        (0..rank).all(|i| m.mul(&self.e[i]) == other.e[i].mul(m) && m.mul(&self.f[i]) == other.f[i].mul(m))
            && (0..self.dim()).all(|c| (0..other.dim()).all(|r| m.get(r, c).is_zero() || self.weights[c] == other.weights[r]))
    }
}

/// Normalization of the diagonal part of the universal R-matrix ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalNormalization {
    /// q^{<wt v, wt w>} on v⊗w.
    Positive,
    /// q^{−<wt v, wt w>} on v⊗w.
    Negative,
}

/// Solves for R: V⊗W → V⊗W of the form D + (terms lowering the first factor
/// and raising the second) such that flip∘R: V⊗W → W⊗V intertwines U_q.
/// Returns R, or an error if the ansatz has no solution.
pub fn solve_r_matrix(uq: &Uq, v: &FdModule, w: &FdModule, norm: DiagonalNormalization) -> Result<Mat, CoreError> {
    let d = uq.datum();
    let (n, m) = (v.dim(), w.dim());
    let nm = n * m;
    let positive = |beta: &Weight| -> bool {
        if beta.is_zero() {
            return false;
        }
        let c = d.alpha_coords(beta);
        c.iter().all(|x| x.is_integer() && *x >= num_rational::Rational64::from_integer(0))
    };
    // unknowns: entries (row, col) of R with row = (k,l), col = (i,j),
    // wt_k = wt_i − β, wt_l = wt_j + β, β > 0
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..m {
            for k in 0..n {
                for l in 0..m {
                    let beta = v.weights[i] - v.weights[k];
                    if positive(&beta) && w.weights[l] - w.weights[j] == beta {
                        unknowns.push((k * m + l, i * m + j));
                    }
                }
            }
        }
    }
    let mut base = Mat::zeros(nm, nm);
    for i in 0..n {
        for j in 0..m {
            let p = d.pairing(&v.weights[i], &w.weights[j]);
            let p = match norm {
                DiagonalNormalization::Positive => p,
                DiagonalNormalization::Negative => -p,
            };
            base.set(i * m + j, i * m + j, uq.qp(p));
        }
    }
    let vw = v.tensor(uq, w);
    let wv = w.tensor(uq, v);
    let flip = Mat::flip(n, m);
    // c = flip·R must satisfy c·X_{VW} = X_{WV}·c for simple E_i, F_i.
    // Each equation is linear in the unknown entries of R.
    let mut eqs: Vec<(SparseVec<usize>, QScalar)> = Vec::new();
    let mut gens = Vec::new();
    for i in 0..d.rank {
        gens.push((vw.e[i].clone(), wv.e[i].clone()));
        gens.push((vw.f[i].clone(), wv.f[i].clone()));
    }
    let c0 = flip.mul(&base);
    for (x_vw, x_wv) in &gens {
        let lhs0 = c0.mul(x_vw).sub(&x_wv.mul(&c0));
        for r in 0..nm {
            for c in 0..nm {
                let mut row: SparseVec<usize> = SparseVec::new();
                for (u, (ur, uc)) in unknowns.iter().enumerate() {
                    // contribution of R[ur][uc] to (flip R X − Y flip R)[r][c]
                    let fr = flip_row(*ur, n, m);
                    let mut coef = QScalar::zero();
                    if fr == r {
                        coef += x_vw.get(*uc, c);
                    }
                    let y = x_wv.get(r, fr);
                    if *uc == c && !y.is_zero() {
                        coef -= y;
                    }
                    if !coef.is_zero() {
                        row.insert(u, coef);
                    }
                }
                let rhs = -lhs0.get(r, c);
                if !row.is_empty() || !rhs.is_zero() {
                    eqs.push((row, rhs));
                }
            }
        }
    }
    let (sol, _free) = solve_affine(unknowns.len(), &eqs)
        .ok_or_else(|| CoreError::Invalid("no braiding of the triangular form exists".into()))?;
    let mut r = base;
    for ((ur, uc), x) in unknowns.iter().zip(sol) {
        r.set(*ur, *uc, x);
    }
    Ok(r)
}

fn flip_row(idx: usize, n: usize, m: usize) -> usize {
    let (k, l) = (idx / m, idx % m);
    let _ = n;
    l * n + k
}

/// Standard small modules for a root datum, used by tests and the CLI.
pub fn defining_module(uq: &Uq) -> FdModule {
    match uq.datum().ty {
        CartanType::A1 => FdModule::a1_simple(uq, 1),
        CartanType::A2 => FdModule::a2_fundamental(uq, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::RootDatum;

    #[test]
    fn modules_satisfy_relations() {
        let a1 = Uq::new(RootDatum::a1());
        for n in 0..4 {
            assert!(FdModule::a1_simple(&a1, n).satisfies_relations(&a1));
        }
        let a2 = Uq::new(RootDatum::a2());
        for i in 0..2 {
            let v = FdModule::a2_fundamental(&a2, i);
            assert!(v.satisfies_relations(&a2));
        }
        let v = FdModule::a2_fundamental(&a2, 0);
        let w = FdModule::a2_fundamental(&a2, 1);
        assert!(v.tensor(&a2, &w).satisfies_relations(&a2));
    }

    #[test]
    fn a1_r_matrix_on_the_defining_module() {
        let uq = Uq::new(RootDatum::a1());
        let f = uq.field();
        let v = FdModule::a1_simple(&uq, 1);
        let r = solve_r_matrix(&uq, &v, &v, DiagonalNormalization::Positive).unwrap();
        let h = f.q_rat_pow(num_rational::Rational64::new(1, 2)).unwrap();
        let hi = h.inv().unwrap();
        assert_eq!(r.get(0, 0), &h);
        assert_eq!(r.get(3, 3), &h);
        assert_eq!(r.get(1, 1), &hi);
        assert_eq!(r.get(2, 2), &hi);
        // R(e1⊗e2) has e2⊗e1 coefficient q^{-1/2}(q − q⁻¹)
        assert_eq!(r.get(2, 1), &(&hi * &f.q_diff()));
    }
}
