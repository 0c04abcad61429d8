//! Sparse exact linear algebra over Q(v).
//!
//! [`Echelon`] keeps an incrementally built echelon basis of a subspace of a
//! free module with ordered basis keys. It answers rank, membership, canonical
//! representatives modulo the subspace, and (through tags) kernels of linear
//! maps given by the images of basis vectors.

use std::collections::BTreeMap;
use std::ops::Bound;

use crate::scalars::QScalar;

pub type SparseVec<K> = BTreeMap<K, QScalar>;

/// `target += c * src`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, c: &QScalar, src: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in src {
        let add = c * x;
        match target.get_mut(k) {
            Some(y) => {
                *y += &add;
                if y.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), add);
            }
        }
    }
}

pub fn scale<K: Ord + Clone>(v: &SparseVec<K>, c: &QScalar) -> SparseVec<K> {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, x)| (k.clone(), c * x)).collect()
}

#[derive(Clone, Debug)]
struct Row<K, T> {
    vec: SparseVec<K>,
    tag: SparseVec<T>,
}

/// Echelon basis with optional tags tracking how each row was produced.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, T: Ord + Clone = usize> {
    rows: BTreeMap<K, Row<K, T>>,
}

impl<K: Ord + Clone, T: Ord + Clone> Default for Echelon<K, T> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, T: Ord + Clone> Echelon<K, T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    fn reduce_tagged(&self, vec: &mut SparseVec<K>, tag: &mut SparseVec<T>) {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => vec.keys().next().cloned(),
                Some(c) => vec
                    .range((Bound::Excluded(c.clone()), Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let c = -&vec[&key];
                axpy(vec, &c, &row.vec);
                axpy(tag, &c, &row.tag);
            }
            cursor = Some(key);
        }
    }

    /// The echelon rows, a basis of the span.
    pub fn basis_vectors(&self) -> Vec<SparseVec<K>> {
        self.rows.values().map(|r| r.vec.clone()).collect()
    }

    /// Canonical representative of `vec` modulo the span.
    pub fn reduce(&self, vec: &SparseVec<K>) -> SparseVec<K> {
        let mut v = vec.clone();
        let mut t = SparseVec::new();
        self.reduce_tagged(&mut v, &mut t);
        v
    }

    pub fn contains(&self, vec: &SparseVec<K>) -> bool {
        self.reduce(vec).is_empty()
    }

    /// Inserts `vec` with `tag`; returns the reduced tag when `vec` already
    /// lies in the span (a kernel relation), otherwise `None`.
    pub fn insert_tagged(&mut self, vec: SparseVec<K>, tag: SparseVec<T>) -> Option<SparseVec<T>> {
        let (mut v, mut t) = (vec, tag);
        self.reduce_tagged(&mut v, &mut t);
        let Some((pivot, lead)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return Some(t);
        };
        let inv = lead.inv().expect("nonzero pivot");
        let v = scale(&v, &inv);
        let t = scale(&t, &inv);
        self.rows.insert(pivot, Row { vec: v, tag: t });
        None
    }

    /// Inserts `vec`; returns true if the rank grew.
    pub fn insert(&mut self, vec: SparseVec<K>) -> bool {
        self.insert_tagged(vec, SparseVec::new()).is_none()
    }
}

/// Solves the affine system `Σ_j a_j x_j = b` over `n` unknowns, given as
/// (coefficients, right-hand side) pairs. Returns a solution with free
/// variables set to zero and the dimension of the solution space, or `None`
/// if the system is inconsistent.
pub fn solve_affine(n: usize, eqs: &[(SparseVec<usize>, QScalar)]) -> Option<(Vec<QScalar>, usize)> {
    let mut ech: Echelon<usize> = Echelon::new();
    for (a, b) in eqs {
        let mut row = a.clone();
        if !b.is_zero() {
            row.insert(n, -b);
        }
        ech.insert(row);
    }
    if ech.rows.contains_key(&n) {
        return None;
    }
    let mut x = vec![QScalar::zero(); n];
    for (p, row) in ech.rows.iter().rev() {
        let mut acc = QScalar::zero();
        for (j, c) in row.vec.range(p + 1..) {
            if *j == n {
                acc += c;
            } else {
                acc += &(c * &x[*j]);
            }
        }
        x[*p] = -acc;
    }
    Some((x, n - ech.rank()))
}

/// Kernel basis of the linear map sending unknown `j` to `images[j]`.
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut ech: Echelon<K, usize> = Echelon::new();
    let mut out = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let tag = SparseVec::from([(j, QScalar::one())]);
        if let Some(rel) = ech.insert_tagged(img.clone(), tag) {
            out.push(rel);
        }
    }
    out
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut ech: Echelon<K> = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Dense helper: rank of a matrix given as rows.
pub fn dense_rank(rows: &[Vec<QScalar>]) -> usize {
    rank(rows.iter().map(|r| {
        r.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect::<SparseVec<usize>>()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QField;

    fn sv(entries: &[(usize, QScalar)]) -> SparseVec<usize> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn kernel_of_dependent_family() {
        let f = QField::new(1);
        let a = sv(&[(0, QScalar::one()), (1, f.q())]);
        let b = sv(&[(1, QScalar::one())]);
        let c = sv(&[(0, f.q_pow(2)), (1, f.q_pow(3) + f.q_pow(2))]);
        // c = q^2 a + q^2 b
        let ker = kernel(&[a, b, c]);
        assert_eq!(ker.len(), 1);
        let rel = &ker[0];
        let ratio = &rel[&0] / &rel[&2];
        assert_eq!(ratio, -f.q_pow(2));
    }

    #[test]
    fn reduce_gives_canonical_representatives() {
        let f = QField::new(1);
        let mut e: Echelon<usize> = Echelon::new();
        e.insert(sv(&[(0, QScalar::one()), (2, f.q())]));
        let x = sv(&[(0, f.q_pow(2)), (1, QScalar::one())]);
        let y = sv(&[(1, QScalar::one()), (2, -f.q_pow(3))]);
        assert_eq!(e.reduce(&x), e.reduce(&y));
        assert!(!e.contains(&x));
        assert_eq!(dense_rank(&[vec![QScalar::one(), f.q()], vec![f.q(), f.q_pow(2)]]), 1);
    }

    #[test]
    fn affine_solve() {
        let f = QField::new(1);
        // x0 + q x1 = 1, x1 = q
        let eqs = vec![
            (sv(&[(0, QScalar::one()), (1, f.q())]), QScalar::one()),
            (sv(&[(1, QScalar::one())]), f.q()),
        ];
        let (x, free) = solve_affine(2, &eqs).unwrap();
        assert_eq!(free, 0);
        assert_eq!(x[1], f.q());
        assert_eq!(x[0], &QScalar::one() - &f.q_pow(2));
        let bad = vec![(sv(&[(0, QScalar::one())]), QScalar::one()), (sv(&[(0, QScalar::one())]), f.q())];
        assert!(solve_affine(1, &bad).is_none());
    }
}
