//! The Schur–Weyl side of Hom spaces: the 1^n weight space of `R ⊗ V^{⊗m}`
//! for `R = Sym(k^⊕σ)`, and polynomial representations evaluated at `k^N`.

use std::collections::BTreeSet;

use crate::brauer::{hom_basis, BasisBlock, BasisDiagram};
use crate::combinat::{permutations, schur_dim, word_of, Partition, PartitionTuple};
use crate::error::{Error, Result};
use crate::exactla::{RatMat, Rational, Subspace};
use crate::specht::basis_for;

use num_traits::Zero;

/// The generator `t_{A,p,x}` of R, with `x` the `index`-th standard polytabloid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub support: Vec<u32>,
    pub kind: usize,
    pub index: usize,
}

/// `T ⊗ e_{s_1} ⊗ ... ⊗ e_{s_m}` with `T` a monomial in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightBasisElement {
    /// Sorted by support; supports are disjoint.
    pub monomial: Vec<Generator>,
    pub tensor: Vec<u32>,
}

/// Set partitions of `items` via restricted growth strings.
fn set_partitions(items: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn rec(items: &[u32], k: usize, rgs: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<Vec<u32>>>) {
        if k == items.len() {
            let mut parts = vec![Vec::new(); blocks];
            for (i, &b) in rgs.iter().enumerate() {
                parts[b].push(items[i]);
            }
            out.push(parts);
            return;
        }
        for b in 0..=blocks {
            rgs.push(b);
            rec(items, k + 1, rgs, blocks.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, &mut Vec::new(), 0, &mut out);
    out
}

/// Basis of `(R ⊗ V^{⊗m})_{1^n}`, sorted.
pub fn weight_space_basis(sigma: &PartitionTuple, n: usize, m: usize) -> Result<Vec<WeightBasisElement>> {
    sigma.require_pure()?;
    if m > n {
        return Ok(Vec::new());
    }
    let labels: Vec<u32> = (1..=n as u32).collect();
    let dims: Vec<usize> = sigma.entries().iter().map(|s| basis_for(s).dim()).collect();
    let mut out = Vec::new();
    for chosen in crate::combinat::subsets(&labels, m) {
        let rest: Vec<u32> = labels.iter().copied().filter(|x| !chosen.contains(x)).collect();
        // monomials on `rest`: a set partition, a type per part, a basis index per part
        let mut monomials: Vec<Vec<Generator>> = Vec::new();
        for parts in set_partitions(&rest) {
            let mut acc: Vec<Vec<Generator>> = vec![Vec::new()];
            for part in &parts {
                let mut next = Vec::new();
                for (p, shape) in sigma.entries().iter().enumerate() {
                    if shape.size() != part.len() {
                        continue;
                    }
                    for index in 0..dims[p] {
                        for partial in &acc {
                            let mut g = partial.clone();
                            g.push(Generator { support: part.clone(), kind: p, index });
                            next.push(g);
                        }
                    }
                }
                acc = next;
            }
            monomials.extend(acc);
        }
        for mut mono in monomials {
            mono.sort();
            for perm in permutations(m) {
                let tensor: Vec<u32> = perm.iter().map(|&i| chosen[i]).collect();
                out.push(WeightBasisElement { monomial: mono.clone(), tensor });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The diagram attached to a weight vector: blocks from generators, `s_j ↦ j`.
pub fn diagram_of(sigma: &PartitionTuple, n: usize, w: &WeightBasisElement) -> Result<BasisDiagram> {
    let mut matching = vec![0u32; n];
    for (j, &s) in w.tensor.iter().enumerate() {
        matching[s as usize - 1] = j as u32 + 1;
    }
    let blocks =
        w.monomial.iter().map(|g| BasisBlock { support: g.support.clone(), kind: g.kind, index: g.index }).collect();
    BasisDiagram::new(sigma, n, w.tensor.len(), blocks, matching)
}

/// The pairing between `hom_basis` and `weight_space_basis`, checked to be a bijection.
pub fn diagram_weight_iso(sigma: &PartitionTuple, n: usize, m: usize) -> Result<Vec<(BasisDiagram, WeightBasisElement)>> {
    let weights = weight_space_basis(sigma, n, m)?;
    let diagrams = hom_basis(sigma, n, m)?;
    let mut pairs = weights
        .into_iter()
        .map(|w| Ok((diagram_of(sigma, n, &w)?, w)))
        .collect::<Result<Vec<_>>>()?;
    pairs.sort();
    let images: BTreeSet<&BasisDiagram> = pairs.iter().map(|(d, _)| d).collect();
    if images.len() != pairs.len() {
        return Err(Error::Inconsistent("two weight vectors map to the same diagram".into()));
    }
    if pairs.len() != diagrams.len() || pairs.iter().zip(&diagrams).any(|((d, _), e)| d != e) {
        return Err(Error::Inconsistent(format!(
            "{} weight vectors but {} diagrams for σ = {sigma}, [{n}] -> [{m}]",
            pairs.len(),
            diagrams.len()
        )));
    }
    Ok(pairs)
}

/// `S_λ(k^N)`, realized as the image of a Young symmetrizer inside `(k^N)^{⊗|λ|}`.
#[derive(Clone, Debug)]
pub struct PolyRep {
    shape: Partition,
    rank: usize,
    space: Subspace,
}

impl PolyRep {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis vectors inside the tensor power.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.space.basis()
    }

    /// Matrix of `g ∈ GL_N` acting on this representation.
    pub fn act(&self, g: &RatMat) -> Result<RatMat> {
        if g.rows() != self.rank || g.cols() != self.rank {
            return Err(Error::Precondition(format!("{}x{} matrix acting on rank {}", g.rows(), g.cols(), self.rank)));
        }
        let mut big = RatMat::identity(1);
        for _ in 0..self.shape.size() {
            big = big.kron(g);
        }
        let cols = self
            .space
            .basis()
            .iter()
            .map(|v| {
                let w = big.mul_vec(v)?;
                self.space
                    .coords(&w)
                    .ok_or_else(|| Error::Inconsistent("Young symmetrizer image is not GL-stable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RatMat::from_columns(&cols, self.dim()))
    }

    /// Action of the elementary matrix `1 + c·E_{ij}`.
    pub fn elementary(&self, i: usize, j: usize, c: &Rational) -> Result<RatMat> {
        let mut g = RatMat::identity(self.rank);
        g.add_at(i, j, c);
        self.act(&g)
    }
}

/// Evaluates the Schur functor `S_λ` on `k^N`.
pub fn evaluate_rep(shape: &Partition, rank: usize) -> Result<PolyRep> {
    let n = shape.size();
    let dim = rank.pow(n as u32);
    if dim > 1 << 16 {
        return Err(Error::DegreeBound(format!("tensor space of dimension {dim} is too large")));
    }
    // row-filled tableau: rows and columns as position lists
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in shape.parts() {
        rows.push((next..next + len).collect());
        next += len;
    }
    let cols: Vec<Vec<usize>> =
        (0..shape.part(0)).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect();
    let row_group = product_group(&rows, n);
    let col_group = product_group(&cols, n);
    let mut spanning = Vec::new();
    for idx in 0..dim {
        let word = word_of(idx, rank, n);
        let mut v = vec![Rational::zero(); dim];
        for (p, _) in &row_group {
            for (q, sign) in &col_group {
                // slot t of q·p·word holds word[p⁻¹(q⁻¹(t))]
                let mut moved = vec![0; n];
                for (t, &x) in word.iter().enumerate() {
                    moved[q[p[t]]] = x;
                }
                let k = crate::combinat::index_of(&moved, rank);
                v[k] += Rational::from_integer((*sign).into());
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            spanning.push(v);
        }
    }
    let space = Subspace::from_spanning(&spanning, dim)?;
    let expected = schur_dim(shape, rank) as usize;
    if space.dim() != expected {
        return Err(Error::Inconsistent(format!("S_{shape}(k^{rank}) came out of dimension {}, expected {expected}", space.dim())));
    }
    Ok(PolyRep { shape: shape.clone(), rank, space })
}

/// `k^⊕σ` at rank `N`: one Schur functor per entry.
pub fn evaluate_tuple(sigma: &PartitionTuple, rank: usize) -> Result<Vec<PolyRep>> {
    sigma.entries().iter().map(|s| evaluate_rep(s, rank)).collect()
}

/// All elements of the product of symmetric groups on the given disjoint position sets, with signs.
fn product_group(sets: &[Vec<usize>], n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut acc: Vec<(Vec<usize>, i64)> = vec![((0..n).collect(), 1)];
    for set in sets {
        let mut next = Vec::new();
        for (base, sign) in &acc {
            for p in permutations(set.len()) {
                let mut w = base.clone();
                for (a, &b) in p.iter().enumerate() {
                    w[set[a]] = set[b];
                }
                next.push((w, sign * crate::specht::Perm::new(p).expect("permutation").sign()));
            }
        }
        acc = next;
    }
    acc
}
