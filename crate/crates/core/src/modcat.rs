//! Invariants of Mod_K through its combinatorial model: multiplicities, Ext
//! dimensions, the specialization functor θ at a concrete σ-form, and Weyl's
//! traceless construction at finite rank.
//!
//! A σ-form at rank N is stored, for each p, as an S_k-equivariant map
//! `Ω_p : S^{σ_p} -> ((k^N)^{⊗k})^*`. Such a map is determined by its values on
//! sorted words α, and `x ↦ Ω_p(x)(e_α)` must be invariant under the stabilizer
//! of α; the coefficients of a form are coordinates in a fixed basis of those
//! invariant functionals, contents in lexicographic order. Their number is
//! `schur_dim(σ_p, N)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brauer::{hom_basis, BasisBlock, BasisDiagram, Morphism};
use crate::combinat::{index_of, schur_dim, specht_dim, subsets, word_of, Partition, PartitionTuple};
use crate::error::{Error, Result};
use crate::exactla::{rat, RatMat, Rational, Subspace};
use crate::specht::{basis_for, isotypic_projector, Perm, SnRep};
use crate::symfun::{exterior_power, inner_product, lr_product, sym_algebra_degree, SchurExpr};

/// [K^⊕λ : L_μ] = ⟨s_λ, s_μ · R_{|λ|-|μ|}⟩.
pub fn multiplicity(sigma: &PartitionTuple, lambda: &Partition, mu: &Partition) -> Result<u64> {
    sigma.require_pure()?;
    if mu.size() > lambda.size() {
        return Ok(0);
    }
    let r = sym_algebra_degree(sigma, lambda.size() - mu.size())?;
    let v = inner_product(&SchurExpr::schur(lambda.clone()), &lr_product(&SchurExpr::schur(mu.clone()), &r));
    count(&v)
}

/// dim Ext^i(L_λ, L_μ) = ⟨s_μ, e_i[Σ_p s_{σ_p}] · s_λ⟩.
pub fn ext_dim(sigma: &PartitionTuple, i: usize, lambda: &Partition, mu: &Partition) -> Result<u64> {
    sigma.require_pure()?;
    let ext = exterior_power(sigma, i)?;
    let v = inner_product(&SchurExpr::schur(mu.clone()), &lr_product(&ext, &SchurExpr::schur(lambda.clone())));
    count(&v)
}

fn count(v: &Rational) -> Result<u64> {
    if !v.is_integer() || *v < Rational::zero() {
        return Err(Error::Inconsistent(format!("a dimension came out as {v}")));
    }
    v.to_integer().try_into().map_err(|_| Error::Inconsistent("dimension overflow".into()))
}

/// Values `Ω_p(x_b)(e_j)` for every basis polytabloid `b` and word `j ∈ [N]^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTable {
    arity: usize,
    rank: usize,
    values: Vec<Vec<Rational>>,
}

impl FormTable {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self, b: usize, word: &[usize]) -> &Rational {
        &self.values[b][index_of(word, self.rank)]
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    /// Table of `v ↦ Ω(g v_1, ..., g v_k)`, contracting one slot at a time.
    pub fn pulled_back(&self, g: &RatMat) -> FormTable {
        let (k, n) = (self.arity, self.rank);
        let values = self
            .values
            .iter()
            .map(|row| {
                let mut cur = row.clone();
                for slot in 0..k {
                    let mut next = vec![Rational::zero(); cur.len()];
                    for (idx, v) in cur.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        // e_r in this slot receives g[r][c] from g e_c
                        let mut w = word_of(idx, n, k);
                        let r = w[slot];
                        for c in 0..n {
                            let x = g.get(r, c);
                            if !x.is_zero() {
                                w[slot] = c;
                                next[index_of(&w, n)] += v * x;
                            }
                        }
                    }
                    cur = next;
                }
                cur
            })
            .collect();
        FormTable { arity: k, rank: n, values }
    }

    /// Agreement on all words with letters below `n`.
    pub fn agrees_below(&self, other: &FormTable, n: usize) -> bool {
        let words = n.pow(self.arity as u32);
        (0..words).all(|i| {
            let idx = index_of(&word_of(i, n, self.arity), self.rank);
            self.values.iter().zip(&other.values).all(|(a, b)| a[idx] == b[idx])
        })
    }
}

/// Weakly increasing words of length `k` over `0..n`, lexicographic.
fn contents(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Basis of the functionals on S^shape invariant under the stabilizer of `alpha`.
fn invariant_functionals(shape: &Partition, alpha: &[usize]) -> Vec<Vec<Rational>> {
    let basis = basis_for(shape);
    let d = basis.dim();
    let id = RatMat::identity(d);
    let rows: Vec<RatMat> = (0..alpha.len().saturating_sub(1))
        .filter(|&t| alpha[t] == alpha[t + 1])
        .map(|t| basis.generators()[t].transpose().sub(&id).expect("square"))
        .collect();
    crate::exactla::intersect_kernels(&rows, d).expect("consistent widths")
}

/// Position of each coefficient of a form: `(p, content, basis functional)`.
pub fn coefficient_layout(sigma: &PartitionTuple, rank: usize) -> Vec<Vec<(Vec<usize>, usize)>> {
    sigma
        .entries()
        .iter()
        .map(|shape| {
            contents(rank, shape.size())
                .into_iter()
                .flat_map(|alpha| {
                    let k = invariant_functionals(shape, &alpha).len();
                    (0..k).map(move |i| (alpha.clone(), i))
                })
                .collect()
        })
        .collect()
}

/// A point of A^σ{k^N}: one form `S_{σ_p}(k^N) -> k` per entry of σ.
#[derive(Clone, Debug)]
pub struct FormPoint {
    rank: usize,
    sigma: PartitionTuple,
    comps: Vec<Vec<Rational>>,
    tables: Vec<FormTable>,
}

impl PartialEq for FormPoint {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.sigma == other.sigma && self.comps == other.comps
    }
}

impl Eq for FormPoint {}

impl FormPoint {
    pub fn new(sigma: &PartitionTuple, rank: usize, comps: Vec<Vec<Rational>>) -> Result<Self> {
        sigma.require_pure()?;
        if comps.len() != sigma.len() {
            return Err(Error::Precondition(format!("{} components for σ = {sigma}", comps.len())));
        }
        let mut tables = Vec::with_capacity(comps.len());
        for (shape, coeffs) in sigma.entries().iter().zip(&comps) {
            let expected = schur_dim(shape, rank) as usize;
            if coeffs.len() != expected {
                return Err(Error::Precondition(format!(
                    "form on S_{shape}(k^{rank}) needs {expected} coefficients, got {}",
                    coeffs.len()
                )));
            }
            tables.push(build_table(shape, rank, coeffs)?);
        }
        Ok(FormPoint { rank, sigma: sigma.clone(), comps, tables })
    }

    /// Integer coefficients uniform in [-5, 5].
    pub fn random(sigma: &PartitionTuple, rank: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let comps = sigma
            .entries()
            .iter()
            .map(|s| (0..schur_dim(s, rank)).map(|_| rat(rng.gen_range(-5..=5))).collect())
            .collect();
        Self::new(sigma, rank, comps)
    }

    /// Builds a form from a coefficient function on `(p, content, functional index)`.
    pub fn from_layout(
        sigma: &PartitionTuple,
        rank: usize,
        coeff: impl Fn(usize, &[usize], usize) -> Rational,
    ) -> Result<Self> {
        sigma.require_pure()?;
        let comps = coefficient_layout(sigma, rank)
            .iter()
            .enumerate()
            .map(|(p, layout)| layout.iter().map(|(alpha, i)| coeff(p, alpha, *i)).collect())
            .collect();
        Self::new(sigma, rank, comps)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sigma(&self) -> &PartitionTuple {
        &self.sigma
    }

    pub fn comps(&self) -> &[Vec<Rational>] {
        &self.comps
    }

    pub fn tables(&self) -> &[FormTable] {
        &self.tables
    }

    /// `Ω_p(x_b)` on a word of letters (0-based).
    pub fn evaluate(&self, p: usize, b: usize, word: &[usize]) -> &Rational {
        self.tables[p].value(b, word)
    }

    /// ω restricted to `k^n`: coefficient truncation.
    pub fn restrict(&self, n: usize) -> Result<FormPoint> {
        if n > self.rank {
            return Err(Error::Level { required: n, have: self.rank });
        }
        let layout = coefficient_layout(&self.sigma, self.rank);
        let comps = layout
            .iter()
            .zip(&self.comps)
            .map(|(lay, c)| {
                lay.iter().zip(c).filter(|((alpha, _), _)| alpha.iter().all(|&a| a < n)).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        FormPoint::new(&self.sigma, n, comps)
    }
}

fn build_table(shape: &Partition, rank: usize, coeffs: &[Rational]) -> Result<FormTable> {
    let k = shape.size();
    let basis = basis_for(shape);
    let d = basis.dim();
    // f_α as row vectors on S^shape
    let mut f_alpha: BTreeMap<Vec<usize>, Vec<Rational>> = BTreeMap::new();
    let mut pos = 0;
    for alpha in contents(rank, k) {
        let inv = invariant_functionals(shape, &alpha);
        let mut f = vec![Rational::zero(); d];
        for v in &inv {
            for (x, y) in f.iter_mut().zip(v) {
                *x += &coeffs[pos] * y;
            }
            pos += 1;
        }
        f_alpha.insert(alpha, f);
    }
    if pos != coeffs.len() {
        return Err(Error::Inconsistent(format!("invariant functionals count {pos}, expected {}", coeffs.len())));
    }
    let words = rank.pow(k as u32);
    let mut values = vec![vec![Rational::zero(); words]; d];
    for idx in 0..words {
        let j = word_of(idx, rank, k);
        // stable sort: alpha[t] = j[pi[t]]
        let mut pi: Vec<usize> = (0..k).collect();
        pi.sort_by_key(|&t| (j[t], t));
        let alpha: Vec<usize> = pi.iter().map(|&t| j[t]).collect();
        let f = &f_alpha[&alpha];
        if f.iter().all(Zero::is_zero) {
            continue;
        }
        let m = basis.matrix_of(&Perm::new(pi)?.inverse())?;
        for (b, row) in values.iter_mut().enumerate() {
            let mut s = Rational::zero();
            for (a, fa) in f.iter().enumerate() {
                if !fa.is_zero() {
                    s += fa * m.get(a, b);
                }
            }
            row[idx] = s;
        }
    }
    Ok(FormTable { arity: k, rank, values })
}

/// θ(d) for a single basis diagram: one nonzero per column at most.
fn theta_basis(omega: &FormPoint, d: &BasisDiagram) -> RatMat {
    let n = omega.rank;
    let (s, t) = (d.source(), d.target());
    let mut m = RatMat::zeros(n.pow(t as u32), n.pow(s as u32));
    let pairs: Vec<(u32, u32)> = d.pairs().collect();
    for col in 0..n.pow(s as u32) {
        let j = word_of(col, n, s);
        let mut val = Rational::one();
        for b in d.blocks() {
            let sub: Vec<usize> = b.support.iter().map(|&x| j[x as usize - 1]).collect();
            val *= omega.evaluate(b.kind, b.index, &sub);
            if val.is_zero() {
                break;
            }
        }
        if val.is_zero() {
            continue;
        }
        let mut out = vec![0usize; t];
        for &(a, b) in &pairs {
            out[b as usize - 1] = j[a as usize - 1];
        }
        m.set(index_of(&out, n), col, val);
    }
    m
}

/// Matrix of θ(f) : (k^N)^{⊗source} -> (k^N)^{⊗target}; slot `s` is label `s + 1`.
pub fn theta_apply(omega: &FormPoint, f: &Morphism) -> Result<RatMat> {
    if f.sigma() != &omega.sigma {
        return Err(Error::Precondition(format!("form for σ = {} applied to a morphism over σ = {}", omega.sigma, f.sigma())));
    }
    let n = omega.rank;
    let mut acc = RatMat::zeros(n.pow(f.target() as u32), n.pow(f.source() as u32));
    for (d, c) in f.terms() {
        acc = acc.add(&theta_basis(omega, d).scale(c))?;
    }
    Ok(acc)
}

/// An S_n-stable subspace of `(k^N)^{⊗n}` with the restricted slot action.
#[derive(Clone, Debug)]
pub struct TracelessSpace {
    pub space: Subspace,
    pub rep: SnRep,
}

impl TracelessSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Restricts the slot-permutation action to an S_n-stable subspace.
    pub fn from_stable(space: Subspace, rank: usize, n: usize) -> Result<Self> {
        let basis = space.basis();
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let cols = basis
                    .iter()
                    .map(|v| {
                        let mut w = vec![Rational::zero(); v.len()];
                        for (idx, x) in v.iter().enumerate() {
                            if !x.is_zero() {
                                let mut word = word_of(idx, rank, n);
                                word.swap(i, i + 1);
                                w[index_of(&word, rank)] = x.clone();
                            }
                        }
                        space.coords(&w).ok_or_else(|| Error::Inconsistent("subspace is not S_n-stable".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(RatMat::from_columns(&cols, basis.len()))
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = SnRep::new(n, basis.len(), generators)?;
        Ok(TracelessSpace { space, rep })
    }

    /// Ambient vectors spanning the S^λ-isotypic piece.
    pub fn isotypic_piece(&self, lambda: &Partition) -> Result<Subspace> {
        let p = isotypic_projector(self.rep.n, lambda, &self.rep)?;
        let basis = self.space.basis();
        let ambient = self.space.ambient();
        let vecs: Vec<Vec<Rational>> = (0..p.cols())
            .map(|c| {
                let mut v = vec![Rational::zero(); ambient];
                for (r, b) in basis.iter().enumerate() {
                    let x = p.get(r, c);
                    if !x.is_zero() {
                        for (y, z) in v.iter_mut().zip(b) {
                            *y += x * z;
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_spanning(&vecs, ambient)?)
    }
}

/// Every single-block diagram `[n] -> [n - |σ_p|]` with order-preserving matching:
/// the maps φ_{p,x,S}.
pub fn contraction_diagrams(sigma: &PartitionTuple, n: usize) -> Result<Vec<BasisDiagram>> {
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    for (p, shape) in sigma.entries().iter().enumerate() {
        let k = shape.size();
        if k > n {
            continue;
        }
        for support in subsets(&labels, k) {
            let mut matching = vec![0u32; n];
            let mut next = 1;
            for s in 1..=n as u32 {
                if !support.contains(&s) {
                    matching[s as usize - 1] = next;
                    next += 1;
                }
            }
            for index in 0..basis_for(shape).dim() {
                let b = BasisBlock { support: support.clone(), kind: p, index };
                out.push(BasisDiagram::new(sigma, n, n - k, vec![b], matching.clone())?);
            }
        }
    }
    Ok(out)
}

fn kernel_of_diagrams(omega: &FormPoint, n: usize, diagrams: &[BasisDiagram]) -> Result<Subspace> {
    let dim = omega.rank.pow(n as u32);
    let mats: Vec<RatMat> = diagrams.iter().map(|d| theta_basis(omega, d)).collect();
    let ker = crate::exactla::intersect_kernels(&mats, dim)?;
    Ok(Subspace::from_spanning(&ker, dim)?)
}

/// T^[n] = ∩ ker φ_{p,x,S} inside `(k^N)^{⊗n}`.
pub fn traceless_space(sigma: &PartitionTuple, omega: &FormPoint, n: usize) -> Result<TracelessSpace> {
    if sigma != &omega.sigma {
        return Err(Error::Precondition("form and σ disagree".into()));
    }
    if omega.rank == 0 {
        return Err(Error::Precondition("traceless space needs rank N >= 1".into()));
    }
    let space = kernel_of_diagrams(omega, n, &contraction_diagrams(sigma, n)?)?;
    TracelessSpace::from_stable(space, omega.rank, n)
}

/// Rank-N dimension of L_λ: rank of the S^λ-isotypic projector on T^[n], divided by dim S^λ.
pub fn simple_realization_dim(sigma: &PartitionTuple, omega: &FormPoint, lambda: &Partition) -> Result<u64> {
    let t = traceless_space(sigma, omega, lambda.size())?;
    let p = isotypic_projector(lambda.size(), lambda, &t.rep)?;
    let rank = count(&p.trace())?;
    let f = specht_dim(lambda);
    if rank % f != 0 {
        return Err(Error::Inconsistent(format!("isotypic rank {rank} is not a multiple of dim S^{lambda} = {f}")));
    }
    Ok(rank / f)
}

/// Compares the S^λ-isotypic pieces of the kernel of the generating contractions
/// and of the kernel of θ of every basis diagram `[n] -> [m]`, `m < n`.
pub fn socle_check(sigma: &PartitionTuple, omega: &FormPoint, lambda: &Partition) -> Result<bool> {
    let n = lambda.size();
    let generating = traceless_space(sigma, omega, n)?;
    let mut all = Vec::new();
    for m in 0..n {
        all.extend(hom_basis(sigma, n, m)?);
    }
    let full = TracelessSpace::from_stable(kernel_of_diagrams(omega, n, &all)?, omega.rank, n)?;
    Ok(generating.isotypic_piece(lambda)? == full.isotypic_piece(lambda)?)
}

/// The structure maps of the injective K^⊕λ: for each μ with |μ| <= |λ|, a basis
/// of `e_μ · Hom_𝔇([n], [m]) · e_λ` (isotypic projections on both sides).
#[derive(Clone, Debug)]
pub struct InjectivePresentation {
    pub lambda: Partition,
    pub maps: BTreeMap<Partition, Vec<Morphism>>,
}

impl InjectivePresentation {
    pub fn new(sigma: &PartitionTuple, lambda: &Partition) -> Result<Self> {
        sigma.require_pure()?;
        let n = lambda.size();
        let mut maps = BTreeMap::new();
        for m in 0..=n {
            let basis = hom_basis(sigma, n, m)?;
            if basis.is_empty() {
                continue;
            }
            let index: BTreeMap<&BasisDiagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
            let coords_of = |f: &Morphism| -> Vec<Rational> {
                let mut v = vec![Rational::zero(); basis.len()];
                for (d, c) in f.terms() {
                    v[index[d]] = c.clone();
                }
                v
            };
            let swap = |k: usize, i: usize| -> Result<Morphism> {
                let mut matching: Vec<u32> = (1..=k as u32).collect();
                matching.swap(i, i + 1);
                Morphism::basis(sigma, BasisDiagram::new(sigma, k, k, Vec::new(), matching)?)
            };
            let act = |pre: bool, i: usize| -> Result<RatMat> {
                let cols = basis
                    .iter()
                    .map(|d| {
                        let f = Morphism::basis(sigma, d.clone())?;
                        let g = if pre {
                            crate::brauer::compose(&f, &swap(n, i)?)?
                        } else {
                            crate::brauer::compose(&swap(m, i)?, &f)?
                        };
                        Ok(coords_of(&g))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(RatMat::from_columns(&cols, basis.len()))
            };
            let right = SnRep::new(n, basis.len(), (0..n.saturating_sub(1)).map(|i| act(true, i)).collect::<Result<_>>()?)?;
            let left = SnRep::new(m, basis.len(), (0..m.saturating_sub(1)).map(|i| act(false, i)).collect::<Result<_>>()?)?;
            let p_lambda = isotypic_projector(n, lambda, &right)?;
            for mu in Partition::all_of(m) {
                let p = isotypic_projector(m, &mu, &left)?.mul(&p_lambda)?;
                let image = Subspace::from_spanning(&p.transpose().row_vecs(), basis.len())?;
                let block = image
                    .basis()
                    .iter()
                    .map(|v| {
                        let mut f = Morphism::zero(sigma, n, m)?;
                        for (c, d) in v.iter().zip(&basis) {
                            if !c.is_zero() {
                                f = f.add(&Morphism::basis(sigma, d.clone())?.scale(c))?;
                            }
                        }
                        Ok(f)
                    })
                    .collect::<Result<Vec<_>>>()?;
                maps.insert(mu, block);
            }
        }
        Ok(InjectivePresentation { lambda: lambda.clone(), maps })
    }

    /// dim Hom(K^⊕λ, K^⊕μ) read off the diagram side.
    pub fn hom_dim(&self, mu: &Partition) -> Result<u64> {
        let total = self.maps.get(mu).map_or(0, Vec::len) as u64;
        let f = specht_dim(&self.lambda) * specht_dim(mu);
        if !total.is_multiple_of(f) {
            return Err(Error::Inconsistent(format!("isotypic Hom dimension {total} not divisible by {f}")));
        }
        Ok(total / f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{compose, tensor};

    fn sig(s: &str) -> PartitionTuple {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn multiplicity_examples() {
        let s = sig("2");
        assert_eq!(multiplicity(&s, &p(&[3, 1]), &p(&[3, 1])).unwrap(), 1);
        assert_eq!(multiplicity(&s, &p(&[2]), &Partition::empty()).unwrap(), 1);
        assert_eq!(multiplicity(&s, &p(&[2, 2]), &p(&[2])).unwrap(), 1);
        assert_eq!(multiplicity(&s, &p(&[2]), &p(&[3])).unwrap(), 0);
        assert!(multiplicity(&sig("0"), &p(&[2]), &p(&[2])).is_err());
    }

    #[test]
    fn ext_examples() {
        let s = sig("2");
        let e = Partition::empty();
        assert_eq!(ext_dim(&s, 0, &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(ext_dim(&s, 0, &p(&[2, 1]), &p(&[3])).unwrap(), 0);
        assert_eq!(ext_dim(&s, 1, &e, &p(&[2])).unwrap(), 1);
        assert_eq!(ext_dim(&s, 2, &e, &p(&[3, 1])).unwrap(), 1);
        assert_eq!(ext_dim(&s, 2, &e, &p(&[2, 2])).unwrap(), 0);
    }

    #[test]
    fn form_layout_and_fixtures() {
        let dot = FormPoint::new(&sig("2"), 2, vec![vec![rat(1), rat(0), rat(1)]]).unwrap();
        assert_eq!(*dot.evaluate(0, 0, &[0, 0]), rat(1));
        assert_eq!(*dot.evaluate(0, 0, &[0, 1]), rat(0));
        assert_eq!(*dot.evaluate(0, 0, &[1, 1]), rat(1));
        let cubic = FormPoint::from_layout(&sig("3"), 3, |_, alpha, _| if alpha == [0, 1, 2] { rat(1) } else { rat(0) }).unwrap();
        for w in [[0, 1, 2], [2, 1, 0], [1, 0, 2]] {
            assert_eq!(*cubic.evaluate(0, 0, &w), rat(1));
        }
        assert_eq!(*cubic.evaluate(0, 0, &[0, 0, 2]), rat(0));
        // ∧² has no coefficient on repeated letters
        let alt = coefficient_layout(&sig("1,1"), 3);
        assert_eq!(alt[0].len(), 3);
        assert!(alt[0].iter().all(|(a, _)| a[0] != a[1]));
        assert!(FormPoint::new(&sig("2"), 2, vec![vec![rat(1)]]).is_err());
    }

    #[test]
    fn form_tables_are_equivariant() {
        // Ω(w·x)(e_j) = Ω(x)(e_{j∘w}) for the mixed shape (2,1)
        let omega = FormPoint::random(&sig("2,1"), 3, 4).unwrap();
        let basis = basis_for(&p(&[2, 1]));
        for wp in crate::combinat::permutations(3) {
            let w = Perm::new(wp.clone()).unwrap();
            let m = basis.matrix_of(&w).unwrap();
            for idx in 0..27 {
                let j = word_of(idx, 3, 3);
                for b in 0..basis.dim() {
                    // Ω(w x_b)(e_j)
                    let lhs: Rational = (0..basis.dim()).map(|a| m.get(a, b) * omega.evaluate(0, a, &j)).sum();
                    // e_j moved by w: slot t goes to w(t)
                    let mut moved = vec![0; 3];
                    for t in 0..3 {
                        moved[t] = j[wp[t]];
                    }
                    assert_eq!(&lhs, omega.evaluate(0, b, &moved));
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        let s = sig("2");
        let dot = FormPoint::new(&s, 2, vec![vec![rat(1), rat(0), rat(1)]]).unwrap();
        let id = Morphism::identity(&s, 2).unwrap();
        assert_eq!(theta_apply(&dot, &id).unwrap(), RatMat::identity(4));
        let cap = Morphism::basis(&s, hom_basis(&s, 2, 0).unwrap()[0].clone()).unwrap();
        let m = theta_apply(&dot, &cap).unwrap();
        assert_eq!(m, RatMat::from_i64(&[&[1, 0, 0, 1]]));
    }

    #[test]
    fn theta_is_a_monoidal_functor_on_samples() {
        let s = sig("2,1|1");
        let omega = FormPoint::random(&s, 2, 7).unwrap();
        let f = Morphism::basis(&s, hom_basis(&s, 4, 1).unwrap()[5].clone()).unwrap();
        let g = Morphism::basis(&s, hom_basis(&s, 1, 0).unwrap()[0].clone()).unwrap();
        let gf = compose(&g, &f).unwrap();
        assert_eq!(theta_apply(&omega, &gf).unwrap(), theta_apply(&omega, &g).unwrap().mul(&theta_apply(&omega, &f).unwrap()).unwrap());
        let t = tensor(&f, &g).unwrap();
        assert_eq!(theta_apply(&omega, &t).unwrap(), theta_apply(&omega, &f).unwrap().kron(&theta_apply(&omega, &g).unwrap()));
    }

    #[test]
    fn traceless_examples() {
        let s = sig("2");
        let omega = FormPoint::random(&s, 5, 1).unwrap();
        assert_eq!(traceless_space(&s, &omega, 1).unwrap().dim(), 5);
        assert_eq!(traceless_space(&s, &omega, 2).unwrap().dim(), 24);
        let t3 = traceless_space(&s, &omega, 3).unwrap();
        let alt = t3.isotypic_piece(&p(&[1, 1, 1])).unwrap();
        assert_eq!(alt.dim(), 10);
    }

    #[test]
    fn simple_realization_fixtures() {
        let s = sig("2");
        let omega = FormPoint::random(&s, 5, 2).unwrap();
        assert_eq!(simple_realization_dim(&s, &omega, &p(&[2])).unwrap(), 14);
        assert_eq!(simple_realization_dim(&s, &omega, &p(&[1, 1])).unwrap(), 10);
        assert_eq!(simple_realization_dim(&s, &omega, &p(&[1, 1, 1])).unwrap(), 10);
        assert_eq!(simple_realization_dim(&s, &omega, &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn socle_examples() {
        let s = sig("2");
        let omega = FormPoint::random(&s, 5, 3).unwrap();
        assert!(socle_check(&s, &omega, &p(&[2])).unwrap());
        assert!(socle_check(&s, &omega, &Partition::empty()).unwrap());
        let one = sig("1");
        let w = FormPoint::random(&one, 4, 3).unwrap();
        assert!(socle_check(&one, &w, &p(&[1])).unwrap());
        assert_eq!(simple_realization_dim(&one, &w, &p(&[1])).unwrap(), 3);
    }

    #[test]
    fn restriction_truncates_coefficients() {
        let s = sig("2|1,1");
        let omega = FormPoint::random(&s, 4, 9).unwrap();
        let r = omega.restrict(2).unwrap();
        assert_eq!(r.comps()[0].len(), 3);
        assert_eq!(r.comps()[1].len(), 1);
        for (t, u) in omega.tables().iter().zip(r.tables()) {
            for b in 0..t.values().len() {
                for idx in 0..4 {
                    let w = word_of(idx, 2, 2);
                    assert_eq!(t.value(b, &w), u.value(b, &w));
                }
            }
        }
        assert!(omega.restrict(5).is_err());
    }

    #[test]
    fn injective_presentation_matches_character_multiplicities() {
        for s in ["2", "1,1", "1", "2|1"] {
            let s = sig(s);
            for lambda in Partition::all_up_to(4) {
                let pres = InjectivePresentation::new(&s, &lambda).unwrap();
                for mu in Partition::all_up_to(lambda.size()) {
                    assert_eq!(
                        pres.hom_dim(&mu).unwrap(),
                        multiplicity(&s, &lambda, &mu).unwrap(),
                        "σ={s:?} λ={lambda:?} μ={mu:?}"
                    );
                }
            }
        }
    }
}
