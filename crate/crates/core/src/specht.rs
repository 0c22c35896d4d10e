//! Specht modules in the standard polytabloid basis.
//!
//! A [`SpechtBasis`] works on the positions `0..n`; a [`SpechtModule`]
//! attaches an ordered label set to it, with the `r`-th smallest label sitting
//! at position `r`. All diagram coordinates elsewhere in the crate are with
//! respect to this basis: standard tableaux listed in increasing order of
//! their row-reading words, so the row-filled tableau is basis vector 0.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::combinat::{specht_dim, Partition};
use crate::error::{Error, Result};
use crate::exactla::{rat, RatMat, Rational};

/// Tableau as rows of positions.
pub type Tableau = Vec<Vec<usize>>;

/// A permutation of `0..n`, stored by images.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// Adjacent transpositions `[i1, i2, ..., ik]` with `self = s_ik ∘ ... ∘ s_i1`,
    /// i.e. listed in the order they act.
    pub fn generator_word(&self) -> Vec<usize> {
        let mut img = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..img.len().saturating_sub(1)).find(|&i| img[i] > img[i + 1]) else { break };
            img.swap(i, i + 1);
            word.push(i);
        }
        word
    }

    pub fn sign(&self) -> i64 {
        if self.generator_word().len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn sort_columns(t: &Tableau) -> (Tableau, i64) {
    let mut t = t.clone();
    let mut sign = 1i64;
    let width = t.first().map_or(0, Vec::len);
    for c in 0..width {
        let h = t.iter().take_while(|row| row.len() > c).count();
        // insertion sort tracking parity
        for i in 1..h {
            let mut k = i;
            while k > 0 && t[k - 1][c] > t[k][c] {
                let (a, b) = (t[k - 1][c], t[k][c]);
                t[k - 1][c] = b;
                t[k][c] = a;
                sign = -sign;
                k -= 1;
            }
        }
    }
    (t, sign)
}

fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &[usize], k: usize, n: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
        if k == n {
            out.push(t.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = t[i].len();
            if len < shape[i] && (i == 0 || t[i - 1].len() > len) {
                t[i].push(k);
                rec(shape, k + 1, n, t, out);
                t[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut t: Tableau = vec![Vec::new(); shape.len()];
    rec(shape.parts(), 0, shape.size(), &mut t, &mut out);
    out.sort_by_key(|a| a.concat());
    out
}

/// Standard polytabloid basis of S^λ on positions `0..n`, with the action of
/// the adjacent transpositions precomputed by Garnir straightening.
#[derive(Debug)]
pub struct SpechtBasis {
    shape: Partition,
    tableaux: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    generators: Vec<RatMat>,
}

impl SpechtBasis {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = standard_tableaux(shape);
        let index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut basis = SpechtBasis { shape: shape.clone(), tableaux, index, generators: Vec::new() };
        let n = shape.size();
        let mut memo = HashMap::new();
        let gens = (0..n.saturating_sub(1))
            .map(|i| {
                let s = Perm::transposition(n, i, i + 1);
                let cols: Vec<Vec<Rational>> = basis
                    .tableaux
                    .iter()
                    .map(|t| {
                        let moved = apply_to_tableau(&s, t);
                        basis.straighten_with(&moved, &mut memo).into_iter().map(rat).collect()
                    })
                    .collect();
                RatMat::from_columns(&cols, basis.dim())
            })
            .collect();
        basis.generators = gens;
        basis
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Matrices of the adjacent transpositions `(i, i+1)`, `i = 0..n-1`.
    pub fn generators(&self) -> &[RatMat] {
        &self.generators
    }

    /// Coordinates of the polytabloid `e_T` for an arbitrary (row-shaped) tableau.
    pub fn polytabloid_coords(&self, t: &Tableau) -> Vec<i64> {
        self.straighten_with(t, &mut HashMap::new())
    }

    fn straighten_with(&self, t: &Tableau, memo: &mut HashMap<Tableau, Vec<i64>>) -> Vec<i64> {
        let (t, sign) = sort_columns(t);
        let mut out = vec![0i64; self.dim()];
        if let Some(&i) = self.index.get(&t) {
            out[i] = sign;
            return out;
        }
        if let Some(v) = memo.get(&t) {
            return v.iter().map(|x| x * sign).collect();
        }
        // first row descent t[r][c] > t[r][c+1]
        let (r, c) = (0..t.len())
            .flat_map(|r| (0..t[r].len().saturating_sub(1)).map(move |c| (r, c)))
            .filter(|&(r, c)| t[r][c] > t[r][c + 1])
            .min_by_key(|&(r, c)| (c, r))
            .expect("column-strict tableau that is not standard has a row descent");
        let col_height = |col: usize| t.iter().take_while(|row| row.len() > col).count();
        let a_pos: Vec<(usize, usize)> = (r..col_height(c)).map(|i| (i, c)).collect();
        let b_pos: Vec<(usize, usize)> = (0..=r).map(|i| (i, c + 1)).collect();
        let positions: Vec<(usize, usize)> = a_pos.iter().chain(&b_pos).copied().collect();
        let old: Vec<usize> = positions.iter().map(|&(i, j)| t[i][j]).collect();
        let mut pool = old.clone();
        pool.sort_unstable();
        let a_set: Vec<usize> = {
            let mut v = old[..a_pos.len()].to_vec();
            v.sort_unstable();
            v
        };
        let mut acc = vec![0i64; self.dim()];
        for chosen in crate::combinat::subsets(&pool, a_pos.len()) {
            if chosen == a_set {
                continue;
            }
            let rest: Vec<usize> = pool.iter().copied().filter(|x| !chosen.contains(x)).collect();
            let new: Vec<usize> = chosen.iter().chain(&rest).copied().collect();
            let mut moved = t.clone();
            for (&(i, j), &v) in positions.iter().zip(&new) {
                moved[i][j] = v;
            }
            // π sends old[q] to new[q]; its sign is the parity of new relative to old
            let rank_of = |v: usize| old.iter().position(|&x| x == v).expect("value present");
            let sgn = permutation_sign(&new.iter().map(|&v| rank_of(v)).collect::<Vec<_>>());
            let sub = self.straighten_with(&moved, memo);
            for (x, y) in acc.iter_mut().zip(sub) {
                *x -= sgn * y;
            }
        }
        memo.insert(t, acc.clone());
        acc.into_iter().map(|x| x * sign).collect()
    }

    /// Matrix of a permutation of positions, built from its generator word.
    pub fn matrix_of(&self, w: &Perm) -> Result<RatMat> {
        if w.len() != self.degree() {
            return Err(Error::Precondition(format!(
                "permutation of {} points acting on S^{} (degree {})",
                w.len(),
                self.shape,
                self.degree()
            )));
        }
        let mut m = RatMat::identity(self.dim());
        for i in w.generator_word() {
            m = self.generators[i].mul(&m)?;
        }
        Ok(m)
    }

    pub fn act_coords(&self, w: &Perm, coords: &[Rational]) -> Result<Vec<Rational>> {
        if coords.len() != self.dim() {
            return Err(Error::Precondition(format!("vector of length {} in S^{}", coords.len(), self.shape)));
        }
        if w.len() != self.degree() {
            return Err(Error::Precondition(format!("permutation of {} points on degree {}", w.len(), self.degree())));
        }
        let mut v = coords.to_vec();
        for i in w.generator_word() {
            v = self.generators[i].mul_vec(&v)?;
        }
        Ok(v)
    }
}

/// Applies `w` to the entries of `t`.
pub fn apply_to_tableau(w: &Perm, t: &Tableau) -> Tableau {
    t.iter().map(|row| row.iter().map(|&x| w.apply(x)).collect()).collect()
}

/// Shared, immutable basis for a shape. Construction is memoized.
pub fn basis_for(shape: &Partition) -> Arc<SpechtBasis> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SpechtBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("specht cache poisoned").get(shape) {
        return b.clone();
    }
    let b = Arc::new(SpechtBasis::new(shape));
    cache.lock().expect("specht cache poisoned").entry(shape.clone()).or_insert(b).clone()
}

/// S^λ_A on an ordered finite label set `A`.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    basis: Arc<SpechtBasis>,
    labels: Vec<u32>,
}

impl PartialEq for SpechtModule {
    fn eq(&self, other: &Self) -> bool {
        self.basis.shape == other.basis.shape && self.labels == other.labels
    }
}

impl Eq for SpechtModule {}

impl SpechtModule {
    pub fn new(shape: &Partition, labels: &[u32]) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() || sorted.len() != shape.size() {
            return Err(Error::Precondition(format!(
                "S^{shape} needs {} distinct labels, got {labels:?}",
                shape.size()
            )));
        }
        Ok(SpechtModule { basis: basis_for(shape), labels: sorted })
    }

    pub fn shape(&self) -> &Partition {
        self.basis.shape()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &SpechtBasis {
        &self.basis
    }

    pub fn vector(&self, coords: Vec<Rational>) -> Result<SpechtVector> {
        if coords.len() != self.dim() {
            return Err(Error::Precondition(format!("{} coordinates for S^{} of dim {}", coords.len(), self.shape(), self.dim())));
        }
        Ok(SpechtVector { module: self.clone(), coords })
    }

    pub fn basis_vector(&self, i: usize) -> SpechtVector {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[i] = Rational::one();
        SpechtVector { module: self.clone(), coords }
    }

    fn rank(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpechtVector {
    module: SpechtModule,
    coords: Vec<Rational>,
}

impl SpechtVector {
    pub fn module(&self) -> &SpechtModule {
        &self.module
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// Turns a label map into a rank permutation between the sorted label lists.
fn rank_permutation(from: &SpechtModule, to_labels: &[u32], f: &BTreeMap<u32, u32>) -> Result<Perm> {
    if f.len() != from.labels.len() {
        return Err(Error::Precondition(format!("map {f:?} is not defined exactly on {:?}", from.labels)));
    }
    let mut images = vec![usize::MAX; from.labels.len()];
    for (&a, &b) in f {
        let r = from.rank(a).ok_or_else(|| Error::Precondition(format!("label {a} not in {:?}", from.labels)))?;
        let s = to_labels
            .binary_search(&b)
            .map_err(|_| Error::Precondition(format!("label {b} not in target {to_labels:?}")))?;
        images[r] = s;
    }
    Perm::new(images)
}

/// Acts by a permutation `w` of the module's labels.
pub fn act(w: &BTreeMap<u32, u32>, v: &SpechtVector) -> Result<SpechtVector> {
    let p = rank_permutation(&v.module, &v.module.labels, w)?;
    let coords = v.module.basis.act_coords(&p, &v.coords)?;
    Ok(SpechtVector { module: v.module.clone(), coords })
}

/// Transports `v` along a bijection `f` from its labels to a new label set.
///
/// `f` factors as (order-preserving map) ∘ (permutation of the old labels);
/// the permutation acts through `act`, the order-preserving part re-indexes.
pub fn relabel(v: &SpechtVector, f: &BTreeMap<u32, u32>) -> Result<SpechtVector> {
    let mut targets: Vec<u32> = f.values().copied().collect();
    targets.sort_unstable();
    targets.dedup();
    if targets.len() != f.len() {
        return Err(Error::Precondition(format!("relabeling {f:?} is not injective")));
    }
    let p = rank_permutation(&v.module, &targets, f)?;
    let coords = v.module.basis.act_coords(&p, &v.coords)?;
    let module = SpechtModule { basis: v.module.basis.clone(), labels: targets };
    Ok(SpechtVector { module, coords })
}

/// χ^λ on the class of cycle type `class` (Murnaghan–Nakayama).
pub fn sn_character(shape: &Partition, class: &Partition) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::Precondition(format!("χ^{shape} evaluated on a class of size {}", class.size())));
    }
    Ok(character_column(class).get(shape).copied().unwrap_or(0))
}

/// All nonzero χ^λ(class), i.e. the Schur expansion of the power sum p_class.
///
/// Built by adding rim hooks for one part at a time, smallest part last.
pub fn character_column(class: &Partition) -> Arc<BTreeMap<Partition, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<BTreeMap<Partition, i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("character cache poisoned").get(class) {
        return v.clone();
    }
    let col = match class.parts().split_last() {
        None => [(Partition::empty(), 1)].into(),
        Some((&k, rest)) => {
            let prev = character_column(&Partition::of(rest));
            let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
            for (shape, &c) in prev.iter() {
                for (bigger, sign) in add_rim_hooks(shape, k) {
                    *out.entry(bigger).or_insert(0) += sign * c;
                }
            }
            out.retain(|_, v| *v != 0);
            out
        }
    };
    let col = Arc::new(col);
    cache.lock().expect("character cache poisoned").entry(class.clone()).or_insert(col).clone()
}

/// Shapes obtained from `shape` by adding a rim hook of size `k`, with sign (-1)^height.
fn add_rim_hooks(shape: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = shape.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if beta.contains(&(b + k)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b && x < b + k).count();
        let mut next = beta.clone();
        next[i] = b + k;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts).expect("beta set yields a partition"), sign));
    }
    out
}

/// A representation of S_n given by the matrices of the adjacent transpositions.
#[derive(Clone, Debug)]
pub struct SnRep {
    pub n: usize,
    pub dim: usize,
    pub generators: Vec<RatMat>,
}

impl SnRep {
    pub fn new(n: usize, dim: usize, generators: Vec<RatMat>) -> Result<Self> {
        if generators.len() != n.saturating_sub(1) {
            return Err(Error::Precondition(format!("S_{n} needs {} generators, got {}", n.saturating_sub(1), generators.len())));
        }
        if generators.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::Precondition(format!("generator matrices must be {dim}x{dim}")));
        }
        Ok(SnRep { n, dim, generators })
    }

    pub fn trivial(n: usize, dim: usize) -> Self {
        SnRep { n, dim, generators: vec![RatMat::identity(dim); n.saturating_sub(1)] }
    }

    pub fn specht(shape: &Partition) -> Self {
        let b = basis_for(shape);
        SnRep { n: shape.size(), dim: b.dim(), generators: b.generators().to_vec() }
    }

    /// Left regular representation on the group algebra, basis = permutations in lex order.
    pub fn regular(n: usize) -> Self {
        let elems: Vec<Perm> = crate::combinat::permutations(n).into_iter().map(Perm).collect();
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let s = Perm::transposition(n, i, i + 1);
                RatMat::permutation(&elems.iter().map(|p| index[&s.compose(p)]).collect::<Vec<_>>())
            })
            .collect();
        SnRep { n, dim: elems.len(), generators }
    }

    /// S_n permuting the tensor slots of `(k^rank)^{⊗n}`.
    pub fn tensor_slots(rank: usize, n: usize) -> Self {
        let dim = rank.pow(n as u32);
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let images: Vec<usize> = (0..dim)
                    .map(|idx| {
                        let mut w = crate::combinat::word_of(idx, rank, n);
                        w.swap(i, i + 1);
                        crate::combinat::index_of(&w, rank)
                    })
                    .collect();
                RatMat::permutation(&images)
            })
            .collect();
        SnRep { n, dim, generators }
    }

    /// Direct sum.
    pub fn sum(&self, other: &SnRep) -> Result<SnRep> {
        if self.n != other.n {
            return Err(Error::Precondition("direct sum of representations of different groups".into()));
        }
        let dim = self.dim + other.dim;
        let generators = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(a, b)| {
                let mut m = RatMat::zeros(dim, dim);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(SnRep { n: self.n, dim, generators })
    }

    /// Checks involution, braid and commutation relations exactly.
    pub fn check_coxeter(&self) -> Result<()> {
        let id = RatMat::identity(self.dim);
        let g = &self.generators;
        for i in 0..g.len() {
            if g[i].mul(&g[i])? != id {
                return Err(Error::Precondition(format!("generator s_{} is not an involution", i + 1)));
            }
            for j in i + 1..g.len() {
                let ok = if j == i + 1 {
                    let a = g[i].mul(&g[j])?.mul(&g[i])?;
                    let b = g[j].mul(&g[i])?.mul(&g[j])?;
                    a == b
                } else {
                    g[i].mul(&g[j])? == g[j].mul(&g[i])?
                };
                if !ok {
                    return Err(Error::Precondition(format!("Coxeter relation fails for s_{}, s_{}", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Calls `visit(w, ρ(w))` once for every element of S_n.
    pub fn for_each_element(&self, mut visit: impl FnMut(&Perm, &RatMat)) -> Result<()> {
        let n = self.n;
        let mut seen: std::collections::HashSet<Perm> = Default::default();
        let id = Perm::identity(n);
        let mut layer: Vec<(Perm, RatMat)> = vec![(id.clone(), RatMat::identity(self.dim))];
        seen.insert(id);
        while !layer.is_empty() {
            let mut next = Vec::new();
            for (w, m) in &layer {
                visit(w, m);
                for (i, g) in self.generators.iter().enumerate() {
                    let sw = Perm::transposition(n, i, i + 1).compose(w);
                    if seen.insert(sw.clone()) {
                        next.push((sw, g.mul(m)?));
                    }
                }
            }
            layer = next;
        }
        Ok(())
    }
}

/// Projector onto the S^λ-isotypic component: `(dim S^λ / n!) Σ_w χ^λ(w) ρ(w)`.
pub fn isotypic_projector(n: usize, shape: &Partition, rep: &SnRep) -> Result<RatMat> {
    if shape.size() != n || rep.n != n {
        return Err(Error::Precondition(format!("isotypic projector for S^{shape} on a representation of S_{}", rep.n)));
    }
    rep.check_coxeter()?;
    let mut chars: HashMap<Partition, i64> = HashMap::new();
    let mut acc = RatMat::zeros(rep.dim, rep.dim);
    let mut err = None;
    rep.for_each_element(|w, m| {
        let ct = crate::combinat::cycle_type(w.images());
        let chi = *chars.entry(ct.clone()).or_insert_with(|| sn_character(shape, &ct).expect("sizes agree"));
        if chi != 0 {
            match acc.add(&m.scale(&rat(chi))) {
                Ok(a) => acc = a,
                Err(e) => err = Some(e),
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e.into());
    }
    let order: u64 = (1..=n as u64).product();
    let c = Rational::new((specht_dim(shape) as i64).into(), (order as i64).into());
    Ok(acc.scale(&c))
}
