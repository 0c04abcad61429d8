//! The representation ring A = ⊕_{λ ∈ P_+} V_λ as a braided-commutative
//! quadratic algebra, graded modules over it, and twists.
//!
//! A is realized as T(⊕_i V_{ω_i}) modulo the image of σ − id on the
//! quadratic part, where σ = (bicharacter) · flip∘R. The relations are not
//! postulated: they come out of the braiding.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::error::CoreError;
use crate::fd_module::{solve_r_matrix, DiagonalNormalization, FdModule, Mat};
use crate::linalg::{axpy, Echelon, SparseVec};
use crate::root_datum::{CartanType, RootDatum, Weight};
use crate::scalars::QScalar;
use crate::uq_algebra::{push, Uq};

/// A letter (generator index i, basis index of V_{ω_i}).
pub type Letter = (usize, usize);
pub type Word = Vec<Letter>;
/// Multidegree: number of letters from each V_{ω_i}.
pub type Grade = Vec<u32>;
pub type AVec = SparseVec<Word>;

/// The scalar factor composed with flip∘R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bicharacter {
    /// q^{(1/2)<μ,ν>}.
    HalfPairing,
    /// q^{−<μ,ν>}.
    NegPairing,
}

impl Bicharacter {
    pub fn value(&self, uq: &Uq, mu: &Weight, nu: &Weight) -> QScalar {
        let p = uq.datum().pairing(mu, nu);
        match self {
            Bicharacter::HalfPairing => uq.qp(p / 2),
            Bicharacter::NegPairing => uq.qp(-p),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RepRing {
    uq: Uq,
    pub gens: Vec<FdModule>,
    pub bichar: Bicharacter,
    /// σ_{g,h}: V_g ⊗ V_h → V_h ⊗ V_g.
    braid: BTreeMap<(usize, usize), Mat>,
    pub relations: Vec<AVec>,
    ideals: BTreeMap<Grade, Echelon<Word>>,
    pub bound: u32,
}

fn grade_of(w: &[Letter], n: usize) -> Grade {
    let mut g = vec![0; n];
    for (i, _) in w {
        g[*i] += 1;
    }
    g
}

fn grades_up_to(n: usize, bound: u32) -> Vec<Grade> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|g: Grade| {
                let used: u32 = g.iter().sum();
                (0..=bound - used).map(move |k| {
                    let mut h = g.clone();
                    h.push(k);
                    h
                })
            })
            .collect();
    }
    out
}

impl RepRing {
    pub fn new(datum: RootDatum, bichar: Bicharacter, bound: u32) -> Result<Self, CoreError> {
        let uq = Uq::new(datum);
        let gens: Vec<FdModule> = match uq.datum().ty {
            CartanType::A1 => vec![FdModule::a1_simple(&uq, 1)],
            CartanType::A2 => vec![FdModule::a2_fundamental(&uq, 0), FdModule::a2_fundamental(&uq, 1)],
        };
        let mut braid = BTreeMap::new();
        let d = uq.datum().clone();
        for g in 0..gens.len() {
            for h in 0..gens.len() {
                let r = solve_r_matrix(&uq, &gens[g], &gens[h], DiagonalNormalization::Positive)?;
                let s = Mat::flip(gens[g].dim(), gens[h].dim())
                    .mul(&r)
                    .scale(&bichar.value(&uq, &d.omega(g), &d.omega(h)));
                braid.insert((g, h), s);
            }
        }
        let mut ring = RepRing {
            uq,
            gens,
            bichar,
            braid,
            relations: Vec::new(),
            ideals: BTreeMap::new(),
            bound,
        };
        // quadratic relations: im(σ − id) on V_g ⊗ V_h
        let mut rel = Echelon::<Word>::new();
        for g in 0..ring.gens.len() {
            for h in 0..ring.gens.len() {
                for i in 0..ring.gens[g].dim() {
                    for j in 0..ring.gens[h].dim() {
                        let w: Word = vec![(g, i), (h, j)];
                        let mut v = ring.braid_at(&AVec::from([(w.clone(), QScalar::one())]), 0);
                        push(&mut v, w, -QScalar::one());
                        rel.insert(v);
                    }
                }
            }
        }
        ring.relations = rel.basis_vectors();
        for grade in grades_up_to(ring.gens.len(), bound) {
            let ech = ring.build_ideal(&grade);
            ring.ideals.insert(grade, ech);
        }
        Ok(ring)
    }

    /// The ring used throughout: bicharacter q^{−<,>}.
    pub fn standard(datum: RootDatum, bound: u32) -> Result<Self, CoreError> {
        Self::new(datum, Bicharacter::NegPairing, bound)
    }

    pub fn uq(&self) -> &Uq {
        &self.uq
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn grade_weight(&self, g: &[u32]) -> Weight {
        let d = self.uq.datum();
        g.iter().enumerate().fold(Weight::ZERO, |acc, (i, k)| acc + (*k as i64) * d.omega(i))
    }

    pub fn grade_of(&self, w: &[Letter]) -> Grade {
        grade_of(w, self.n_gens())
    }

    pub fn words(&self, grade: &[u32]) -> Vec<Word> {
        let mut out = vec![(Vec::new(), grade.to_vec())];
        let total: u32 = grade.iter().sum();
        for _ in 0..total {
            out = out
                .into_iter()
                .flat_map(|(w, left): (Word, Grade)| {
                    let mut next = Vec::new();
                    for g in 0..left.len() {
                        if left[g] == 0 {
                            continue;
                        }
                        for i in 0..self.gens[g].dim() {
                            let mut w2 = w.clone();
                            w2.push((g, i));
                            let mut l2 = left.clone();
                            l2[g] -= 1;
                            next.push((w2, l2));
                        }
                    }
                    next
                })
                .collect();
        }
        out.into_iter().map(|(w, _)| w).collect()
    }

    fn build_ideal(&self, grade: &[u32]) -> Echelon<Word> {
        let mut ech = Echelon::new();
        let total: u32 = grade.iter().sum();
        if total < 2 {
            return ech;
        }
        for r in &self.relations {
            let rg = self.grade_of(&r.keys().next().expect("nonzero relation")[..]);
            if rg.iter().zip(grade).any(|(a, b)| a > b) {
                continue;
            }
            let rest: Grade = grade.iter().zip(&rg).map(|(a, b)| a - b).collect();
            for w in self.words(&rest) {
                for p in 0..=w.len() {
                    let v: AVec = r
                        .iter()
                        .map(|(rw, c)| {
                            let mut full = w[..p].to_vec();
                            full.extend(rw.iter().copied());
                            full.extend(w[p..].iter().copied());
                            (full, c.clone())
                        })
                        .collect();
                    ech.insert(v);
                }
            }
        }
        ech
    }

    fn ideal(&self, grade: &[u32]) -> Result<&Echelon<Word>, CoreError> {
        self.ideals
            .get(grade)
            .ok_or_else(|| CoreError::Invalid(format!("grade {grade:?} beyond the table bound {}", self.bound)))
    }

    /// dim A_grade.
    pub fn dim(&self, grade: &[u32]) -> Result<usize, CoreError> {
        Ok(self.words(grade).len() - self.ideal(grade)?.rank())
    }

    /// Basis of A_grade: words that are not pivots of the ideal.
    pub fn basis(&self, grade: &[u32]) -> Result<Vec<Word>, CoreError> {
        let ideal = self.ideal(grade)?;
        let piv: std::collections::BTreeSet<&Word> = ideal.pivots().collect();
        Ok(self.words(grade).into_iter().filter(|w| !piv.contains(w)).collect())
    }

    /// Normal form of a homogeneous tensor.
    pub fn reduce(&self, v: &AVec) -> Result<AVec, CoreError> {
        let mut by_grade: BTreeMap<Grade, AVec> = BTreeMap::new();
        for (w, c) in v {
            by_grade.entry(self.grade_of(w)).or_default().insert(w.clone(), c.clone());
        }
        let mut out = AVec::new();
        for (g, part) in by_grade {
            let r = self.ideal(&g)?.reduce(&part);
            axpy(&mut out, &QScalar::one(), &r);
        }
        Ok(out)
    }

    pub fn multiply(&self, x: &AVec, y: &AVec) -> Result<AVec, CoreError> {
        self.reduce(&concat(x, y))
    }

    /// σ applied at positions (p, p+1) of every word.
    fn braid_at(&self, v: &AVec, p: usize) -> AVec {
        let mut out = AVec::new();
        for (w, c) in v {
            let ((g, i), (h, j)) = (w[p], w[p + 1]);
            let (n, m) = (self.gens[g].dim(), self.gens[h].dim());
            let s = &self.braid[&(g, h)];
            let col = i * m + j;
            for r in 0..n * m {
                let e = s.get(r, col);
                if e.is_zero() {
                    continue;
                }
                let mut w2 = w.clone();
                w2[p] = (h, r / n);
                w2[p + 1] = (g, r % n);
                push(&mut out, w2, c * e);
            }
        }
        out
    }

    /// σ(x ⊗ y) as a tensor of words: the letters of y are moved, one at a
    /// time from the left, across all letters of x. The first |y| letters
    /// of each output word form the left tensor factor.
    pub fn braid_words(&self, x: &AVec, y: &AVec) -> Result<(AVec, usize), CoreError> {
        let lx = homogeneous_len(x)?;
        let ly = homogeneous_len(y)?;
        let mut cur = concat(x, y);
        for t in 0..ly {
            for p in (t..lx + t).rev() {
                cur = self.braid_at(&cur, p);
            }
        }
        Ok((cur, ly))
    }

    /// σ(x ⊗ y) ∈ A ⊗ A, each factor in normal form.
    pub fn braiding_sigma(&self, x: &AVec, y: &AVec) -> Result<SparseVec<(Word, Word)>, CoreError> {
        let (v, split) = self.braid_words(x, y)?;
        let mut by_right: BTreeMap<Word, AVec> = BTreeMap::new();
        for (w, c) in &v {
            by_right.entry(w[split..].to_vec()).or_default().insert(w[..split].to_vec(), c.clone());
        }
        let mut stage: SparseVec<(Word, Word)> = SparseVec::new();
        for (r, left) in by_right {
            for (l, c) in self.reduce(&left)? {
                push(&mut stage, (l, r.clone()), c);
            }
        }
        let mut by_left: BTreeMap<Word, AVec> = BTreeMap::new();
        for ((l, r), c) in stage {
            by_left.entry(l).or_default().insert(r, c);
        }
        let mut out = SparseVec::new();
        for (l, right) in by_left {
            for (r, c) in self.reduce(&right)? {
                push(&mut out, (l.clone(), r), c);
            }
        }
        Ok(out)
    }

    /// m∘σ(x⊗y) − x·y in normal form.
    pub fn commutativity_defect(&self, x: &AVec, y: &AVec) -> Result<AVec, CoreError> {
        let (v, _) = self.braid_words(x, y)?;
        let mut d = self.reduce(&v)?;
        axpy(&mut d, &-QScalar::one(), &self.multiply(x, y)?);
        Ok(d)
    }

    /// For A1: the coefficient c in x·y = c·y·x, where x, y are the highest
    /// and lowest weight vectors of V_ω.
    pub fn quantum_plane_coefficient(&self) -> Option<QScalar> {
        if self.n_gens() != 1 || self.relations.len() != 1 {
            return None;
        }
        let r = &self.relations[0];
        let (xy, yx) = (vec![(0, 0), (0, 1)], vec![(0, 1), (0, 0)]);
        let (a, b) = (r.get(&xy)?, r.get(&yx)?);
        Some(-(b / a))
    }

    pub fn random_homogeneous<R: Rng>(&self, rng: &mut R, grade: &[u32]) -> Result<AVec, CoreError> {
        let basis = self.basis(grade)?;
        let mut v = AVec::new();
        for w in basis {
            if rng.random_bool(0.5) {
                push(&mut v, w, QScalar::from_int(rng.random_range(-3..=3)));
            }
        }
        Ok(v)
    }

    /// All grades of total degree ≤ `total`.
    pub fn grades(&self, total: u32) -> Vec<Grade> {
        grades_up_to(self.n_gens(), total)
    }
}

fn homogeneous_len(x: &AVec) -> Result<usize, CoreError> {
    let mut lens = x.keys().map(|w| w.len());
    let first = lens.next().unwrap_or(0);
    if lens.all(|l| l == first) {
        Ok(first)
    } else {
        Err(CoreError::NotHomogeneous)
    }
}

pub fn concat(x: &AVec, y: &AVec) -> AVec {
    let mut out = AVec::new();
    for (a, c) in x {
        for (b, d) in y {
            let mut w = a.clone();
            w.extend(b.iter().copied());
            push(&mut out, w, c * d);
        }
    }
    out
}

pub fn word_vec(w: Word) -> AVec {
    AVec::from([(w, QScalar::one())])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidedReport {
    pub datum: String,
    pub pairs_checked: usize,
    pub counterexamples: Vec<(String, String)>,
    /// For A1 the derived relation x·y = c·y·x.
    pub relation: Option<String>,
}

impl BraidedReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn render_avec(v: &AVec) -> String {
    v.iter()
        .map(|(w, c)| format!("({c}){}", w.iter().map(|(g, i)| format!("v{g}_{i}")).collect::<Vec<_>>().join("·")))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// m∘σ = m on every pair of basis monomials with degrees ≤ `max_deg`.
pub fn check_braided_commutativity_exhaustive(ring: &RepRing, max_deg: u32) -> Result<BraidedReport, CoreError> {
    let mut pairs = 0;
    let mut bad = Vec::new();
    let grades = ring.grades(max_deg);
    for g1 in &grades {
        for g2 in &grades {
            for x in ring.basis(g1)? {
                for y in ring.basis(g2)? {
                    let (xv, yv) = (word_vec(x.clone()), word_vec(y));
                    pairs += 1;
                    if !ring.commutativity_defect(&xv, &yv)?.is_empty() {
                        bad.push((render_avec(&xv), render_avec(&yv)));
                    }
                }
            }
        }
    }
    Ok(report(ring, pairs, bad))
}

/// m∘σ = m on `n` random homogeneous pairs of total degree ≤ the table bound.
pub fn check_braided_commutativity<R: Rng>(ring: &RepRing, n: usize, rng: &mut R) -> Result<BraidedReport, CoreError> {
    let grades: Vec<Grade> = ring.grades(ring.bound).into_iter().filter(|g| g.iter().sum::<u32>() >= 1).collect();
    let mut bad = Vec::new();
    let mut pairs = 0;
    while pairs < n {
        let g1 = &grades[rng.random_range(0..grades.len())];
        let g2 = &grades[rng.random_range(0..grades.len())];
        if g1.iter().chain(g2.iter()).sum::<u32>() > ring.bound {
            continue;
        }
        let x = ring.random_homogeneous(rng, g1)?;
        let y = ring.random_homogeneous(rng, g2)?;
        pairs += 1;
        if !ring.commutativity_defect(&x, &y)?.is_empty() {
            bad.push((render_avec(&x), render_avec(&y)));
        }
    }
    Ok(report(ring, pairs, bad))
}

fn report(ring: &RepRing, pairs: usize, bad: Vec<(String, String)>) -> BraidedReport {
    BraidedReport {
        datum: ring.uq().datum().ty.to_string(),
        pairs_checked: pairs,
        counterexamples: bad,
        relation: ring.quantum_plane_coefficient().map(|c| format!("x*y = ({c})*y*x")),
    }
}

/// Module structure of a graded A-module in a finite window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// A / A_{>bound}, the regular module truncated above total degree `bound`.
    Truncated { bound: u32 },
    /// Finitely many components with the zero action.
    Trivial { components: BTreeMap<Vec<i64>, usize> },
}

/// A P_+-graded A-module: the component in degree λ is the component of
/// the underlying module in degree λ + shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAModule {
    pub kind: ModuleKind,
    pub shift: Vec<i64>,
    pub equivariant: bool,
}

impl GradedAModule {
    pub fn regular(ring: &RepRing, bound: u32) -> Self {
        GradedAModule {
            kind: ModuleKind::Truncated { bound },
            shift: vec![0; ring.n_gens()],
            equivariant: true,
        }
    }

    pub fn trivial(components: BTreeMap<Vec<i64>, usize>, rank: usize) -> Self {
        GradedAModule {
            kind: ModuleKind::Trivial { components },
            shift: vec![0; rank],
            equivariant: true,
        }
    }

    /// A/(generators) = A/A_{≥1}: the degree-zero line.
    pub fn augmentation(ring: &RepRing) -> Self {
        Self::regular(ring, 0)
    }

    /// Components (in this module's grading) with their dimensions.
    pub fn components(&self, ring: &RepRing) -> Result<BTreeMap<Vec<i64>, usize>, CoreError> {
        let mut out = BTreeMap::new();
        match &self.kind {
            ModuleKind::Truncated { bound } => {
                for g in ring.grades(*bound) {
                    let key = g.iter().zip(&self.shift).map(|(a, s)| *a as i64 - s).collect();
                    out.insert(key, ring.dim(&g)?);
                }
            }
            ModuleKind::Trivial { components } => {
                for (g, d) in components {
                    out.insert(g.iter().zip(&self.shift).map(|(a, s)| a - s).collect(), *d);
                }
            }
        }
        Ok(out)
    }

    /// x · m for x ∈ A and m a vector of the underlying component.
    pub fn act(&self, ring: &RepRing, x: &AVec, m: &AVec) -> Result<AVec, CoreError> {
        match &self.kind {
            ModuleKind::Trivial { .. } => Ok(AVec::new()),
            ModuleKind::Truncated { bound } => truncate(ring, &concat(x, m), *bound),
        }
    }

    /// Basis of the underlying component in this module's degree λ.
    pub fn component_basis(&self, ring: &RepRing, lambda: &[i64]) -> Result<Vec<AVec>, CoreError> {
        let under: Vec<i64> = lambda.iter().zip(&self.shift).map(|(a, s)| a + s).collect();
        if under.iter().any(|x| *x < 0) {
            return Ok(Vec::new());
        }
        let g: Grade = under.iter().map(|x| *x as u32).collect();
        match &self.kind {
            ModuleKind::Truncated { bound } if g.iter().sum::<u32>() <= *bound => {
                Ok(ring.basis(&g)?.into_iter().map(word_vec).collect())
            }
            ModuleKind::Truncated { .. } => Ok(Vec::new()),
            ModuleKind::Trivial { components } => {
                let d = components.get(&under).copied().unwrap_or(0);
                Ok((0..d).map(|k| word_vec(vec![(usize::MAX, k)])).collect())
            }
        }
    }
}

fn truncate(ring: &RepRing, v: &AVec, bound: u32) -> Result<AVec, CoreError> {
    let kept: AVec = v.iter().filter(|(w, _)| w.len() as u32 <= bound).map(|(w, c)| (w.clone(), c.clone())).collect();
    ring.reduce(&kept)
}

/// M(ω_i): the component in degree λ is M_{λ+ω_i}.
pub fn twist(m: &GradedAModule, i: usize) -> GradedAModule {
    let mut out = m.clone();
    out.shift[i] += 1;
    out
}

pub fn untwist(m: &GradedAModule, i: usize) -> GradedAModule {
    let mut out = m.clone();
    out.shift[i] -= 1;
    out
}

/// Whether A_{≥k} annihilates M in the window. A is generated in degree
/// one, so it suffices that every word of k generators acts by zero.
pub fn is_torsion(ring: &RepRing, m: &GradedAModule, k: u32) -> Result<bool, CoreError> {
    let comps = m.components(ring)?;
    let mut letters_words: Vec<Word> = vec![vec![]];
    for _ in 0..k {
        letters_words = letters_words
            .into_iter()
            .flat_map(|w| {
                (0..ring.n_gens())
                    .flat_map(|g| (0..ring.gens[g].dim()).map(move |i| (g, i)))
                    .map(move |l| {
                        let mut w2 = w.clone();
                        w2.push(l);
                        w2
                    })
            })
            .collect();
    }
    for lambda in comps.keys() {
        for b in m.component_basis(ring, lambda)? {
            for w in &letters_words {
                if !m.act(ring, &word_vec(w.clone()), &b)?.is_empty() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The right action m·x = (left action)∘σ(m ⊗ x) of an equivariant module.
pub fn right_action_from_left(ring: &RepRing, m: &GradedAModule, v: &AVec, x: &AVec) -> Result<AVec, CoreError> {
    if !m.equivariant {
        return Err(CoreError::NotEquivariant);
    }
    match &m.kind {
        ModuleKind::Trivial { .. } => Ok(AVec::new()),
        ModuleKind::Truncated { bound } => {
            let (braided, _) = ring.braid_words(v, x)?;
            truncate(ring, &braided, *bound)
        }
    }
}
