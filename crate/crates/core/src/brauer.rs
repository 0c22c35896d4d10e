//! The downwards σ-Brauer category 𝔇(σ) and its opposite 𝔘(σ).
//!
//! Objects are the sets `[n] = {1, ..., n}`. A morphism is a ℚ-combination of
//! basis diagrams: every block carries a single standard polytabloid of
//! `S^{σ_p}` over its (sorted) support, so the Specht relation on block
//! coefficients holds by construction.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{permutations, PartitionTuple};
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Rational};
use crate::specht::{basis_for, Perm};

/// A block `(A, p, x)` with `x` the `index`-th standard polytabloid of `S^{σ_p}_A`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisBlock {
    pub support: Vec<u32>,
    pub kind: usize,
    pub index: usize,
}

/// A diagram `[n] -> [m]` with basis blocks. `matching[s - 1]` is the target of
/// the free label `s`, or 0 when `s` lies in a block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisDiagram {
    source: usize,
    target: usize,
    blocks: Vec<BasisBlock>,
    matching: Vec<u32>,
}

impl BasisDiagram {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Sorted by smallest support label.
    pub fn blocks(&self) -> &[BasisBlock] {
        &self.blocks
    }

    pub fn matching(&self) -> &[u32] {
        &self.matching
    }

    /// `(s, t)` pairs of the bijection on free labels.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.matching.iter().enumerate().filter(|(_, &t)| t != 0).map(|(s, &t)| (s as u32 + 1, t))
    }

    /// Validating constructor: supports sorted and disjoint, matching a bijection
    /// from the remaining labels onto `[target]`.
    pub fn new(sigma: &PartitionTuple, source: usize, target: usize, blocks: Vec<BasisBlock>, matching: Vec<u32>) -> Result<Self> {
        if matching.len() != source {
            return Err(Error::Precondition(format!("matching of length {} for source [{source}]", matching.len())));
        }
        let mut covered = vec![false; source];
        for b in &blocks {
            let shape = sigma.entries().get(b.kind).ok_or_else(|| Error::Precondition(format!("block type {}", b.kind)))?;
            if b.support.len() != shape.size() || b.support.windows(2).any(|w| w[0] >= w[1]) || b.index >= basis_for(shape).dim() {
                return Err(Error::Precondition(format!("malformed block {b:?}")));
            }
            for &x in &b.support {
                if x == 0 || x as usize > source || std::mem::replace(&mut covered[x as usize - 1], true) {
                    return Err(Error::Precondition(format!("block label {x} out of range or reused")));
                }
            }
        }
        let mut hit = vec![false; target];
        for (s, &t) in matching.iter().enumerate() {
            let ok = if covered[s] {
                t == 0
            } else {
                t != 0 && t as usize <= target && !std::mem::replace(&mut hit[t as usize - 1], true)
            };
            if !ok {
                return Err(Error::Precondition(format!("matching {matching:?} is not a bijection onto [{target}]")));
            }
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::Precondition(format!("matching {matching:?} misses target labels")));
        }
        Ok(Self::from_parts(source, target, blocks, matching))
    }

    fn from_parts(source: usize, target: usize, mut blocks: Vec<BasisBlock>, matching: Vec<u32>) -> Self {
        blocks.sort();
        BasisDiagram { source, target, blocks, matching }
    }
}

/// A block whose Specht element is an arbitrary coordinate vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    pub support: Vec<u32>,
    pub kind: usize,
    pub coords: Vec<Rational>,
}

/// A diagram `(i, Γ)` between arbitrary finite label sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    pub source: Vec<u32>,
    pub target: Vec<u32>,
    pub blocks: Vec<Block>,
    pub matching: BTreeMap<u32, u32>,
}

/// An element of Hom_{𝔇(σ)}([source], [target]) in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    sigma: PartitionTuple,
    source: usize,
    target: usize,
    terms: BTreeMap<BasisDiagram, Rational>,
}

fn add_into(terms: &mut BTreeMap<BasisDiagram, Rational>, d: BasisDiagram, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = terms.entry(d.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        terms.remove(&d);
    }
}

impl Morphism {
    pub fn zero(sigma: &PartitionTuple, source: usize, target: usize) -> Result<Self> {
        sigma.require_pure()?;
        Ok(Morphism { sigma: sigma.clone(), source, target, terms: BTreeMap::new() })
    }

    pub fn identity(sigma: &PartitionTuple, n: usize) -> Result<Self> {
        let mut m = Self::zero(sigma, n, n)?;
        let d = BasisDiagram::from_parts(n, n, Vec::new(), (1..=n as u32).collect());
        m.terms.insert(d, Rational::one());
        Ok(m)
    }

    /// The morphism given by a single basis diagram.
    pub fn basis(sigma: &PartitionTuple, d: BasisDiagram) -> Result<Self> {
        let mut m = Self::zero(sigma, d.source, d.target)?;
        m.terms.insert(d, Rational::one());
        Ok(m)
    }

    pub fn sigma(&self) -> &PartitionTuple {
        &self.sigma
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn terms(&self) -> &BTreeMap<BasisDiagram, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_space(&self, other: &Morphism) -> Result<()> {
        if self.sigma != other.sigma || self.source != other.source || self.target != other.target {
            return Err(Error::Precondition(format!(
                "morphisms {}->{} and {}->{} live in different spaces",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            add_into(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Morphism {
        let mut out = Morphism { terms: BTreeMap::new(), ..self.clone() };
        for (d, v) in &self.terms {
            add_into(&mut out.terms, d.clone(), v * c);
        }
        out
    }

    /// Normalizes a diagram on arbitrary label sets: labels are replaced by
    /// their ranks and block coefficients are expanded in the polytabloid basis.
    pub fn from_diagram(sigma: &PartitionTuple, d: &Diagram) -> Result<Morphism> {
        sigma.require_pure()?;
        let rank = |labels: &[u32], x: u32, what: &str| -> Result<u32> {
            labels
                .iter()
                .position(|&l| l == x)
                .map(|r| r as u32 + 1)
                .ok_or_else(|| Error::Precondition(format!("label {x} is not in the {what} {labels:?}")))
        };
        let mut source = d.source.clone();
        source.sort_unstable();
        source.dedup();
        let mut target = d.target.clone();
        target.sort_unstable();
        target.dedup();
        if source.len() != d.source.len() || target.len() != d.target.len() {
            return Err(Error::Precondition("repeated labels in a diagram boundary".into()));
        }
        let n = source.len();
        let mut used = vec![false; n];
        let mut matching = vec![0u32; n];
        let mut hit = vec![false; target.len()];
        for (&s, &t) in &d.matching {
            let (s, t) = (rank(&source, s, "source")?, rank(&target, t, "target")?);
            if std::mem::replace(&mut used[s as usize - 1], true) || std::mem::replace(&mut hit[t as usize - 1], true) {
                return Err(Error::Precondition("matching is not injective".into()));
            }
            matching[s as usize - 1] = t;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::Precondition("matching does not reach every target label".into()));
        }
        // each block: rank-relabel its support (order preserving, so coordinates are kept)
        let mut factors: Vec<Vec<(BasisBlock, Rational)>> = Vec::new();
        for b in &d.blocks {
            let shape = sigma
                .entries()
                .get(b.kind)
                .ok_or_else(|| Error::Precondition(format!("block type {} outside σ = {sigma}", b.kind)))?;
            if b.support.len() != shape.size() {
                return Err(Error::Precondition(format!("block of type {} needs {} labels", b.kind, shape.size())));
            }
            let mut support = Vec::with_capacity(b.support.len());
            for &x in &b.support {
                let r = rank(&source, x, "source")?;
                if std::mem::replace(&mut used[r as usize - 1], true) {
                    return Err(Error::Precondition(format!("label {x} used twice")));
                }
                support.push(r);
            }
            support.sort_unstable();
            let dim = basis_for(shape).dim();
            if b.coords.len() != dim {
                return Err(Error::Precondition(format!("block coefficient has {} coordinates, expected {dim}", b.coords.len())));
            }
            factors.push(
                b.coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (BasisBlock { support: support.clone(), kind: b.kind, index: i }, c.clone()))
                    .collect(),
            );
        }
        if used.iter().any(|u| !u) {
            return Err(Error::Precondition("some source label is neither matched nor in a block".into()));
        }
        let mut out = Morphism::zero(sigma, n, target.len())?;
        for (blocks, c) in expand_product(&factors) {
            add_into(&mut out.terms, BasisDiagram::from_parts(n, target.len(), blocks, matching.clone()), c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(d, c)| TermJson {
                coef: format_rational(c),
                matching: d.pairs().map(|(s, t)| [s, t]).collect(),
                blocks: d
                    .blocks
                    .iter()
                    .map(|b| {
                        let dim = basis_for(&self.sigma.entries()[b.kind]).dim();
                        BlockJson {
                            support: b.support.clone(),
                            kind: b.kind,
                            coords: (0..dim).map(|i| if i == b.index { "1/1".into() } else { "0/1".into() }).collect(),
                        }
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(MorphismJson { source_size: self.source, target_size: self.target, terms })
            .expect("morphism serializes")
    }

    pub fn from_json(sigma: &PartitionTuple, v: &serde_json::Value) -> Result<Morphism> {
        let mj: MorphismJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("morphism JSON: {e}")))?;
        let source: Vec<u32> = (1..=mj.source_size as u32).collect();
        let target: Vec<u32> = (1..=mj.target_size as u32).collect();
        let mut out = Morphism::zero(sigma, mj.source_size, mj.target_size)?;
        for t in mj.terms {
            let coef = parse_rational(&t.coef)?;
            let blocks = t
                .blocks
                .into_iter()
                .map(|b| {
                    let coords = b.coords.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>, _>>()?;
                    Ok(Block { support: b.support, kind: b.kind, coords })
                })
                .collect::<Result<Vec<_>>>()?;
            let mut matching = BTreeMap::new();
            for [s, t] in t.matching {
                if matching.insert(s, t).is_some() {
                    return Err(Error::Precondition(format!("label {s} matched twice")));
                }
            }
            let d = Diagram { source: source.clone(), target: target.clone(), blocks, matching };
            out = out.add(&Morphism::from_diagram(sigma, &d)?.scale(&coef))?;
        }
        Ok(out)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism[{}]({} -> {}) {}", self.sigma, self.source, self.target, self.to_json())
    }
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    source_size: usize,
    target_size: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: String,
    matching: Vec<[u32; 2]>,
    blocks: Vec<BlockJson>,
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    support: Vec<u32>,
    #[serde(rename = "type")]
    kind: usize,
    coords: Vec<String>,
}

/// Multilinear expansion: every choice of one entry per factor, coefficients multiplied.
fn expand_product(factors: &[Vec<(BasisBlock, Rational)>]) -> Vec<(Vec<BasisBlock>, Rational)> {
    let mut acc: Vec<(Vec<BasisBlock>, Rational)> = vec![(Vec::new(), Rational::one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (blocks, c) in &acc {
            for (b, x) in f {
                let mut bs = blocks.clone();
                bs.push(b.clone());
                next.push((bs, c * x));
            }
        }
        acc = next;
    }
    acc
}

/// Transports a basis block along an injective label map, expanding in the polytabloid basis.
fn transport(sigma: &PartitionTuple, b: &BasisBlock, map: impl Fn(u32) -> u32) -> Vec<(BasisBlock, Rational)> {
    let images: Vec<u32> = b.support.iter().map(|&x| map(x)).collect();
    let mut support = images.clone();
    support.sort_unstable();
    let ranks: Vec<usize> = images.iter().map(|y| support.binary_search(y).expect("image present")).collect();
    let basis = basis_for(&sigma.entries()[b.kind]);
    let mut unit = vec![Rational::zero(); basis.dim()];
    unit[b.index] = Rational::one();
    let perm = Perm::new(ranks).expect("transport along a bijection");
    let coords = basis.act_coords(&perm, &unit).expect("degrees agree");
    coords
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (BasisBlock { support: support.clone(), kind: b.kind, index: i }, c))
        .collect()
}

/// `g ∘ f`: apply `f` first.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.sigma != g.sigma {
        return Err(Error::Precondition(format!("composing morphisms over σ = {} and σ = {}", f.sigma, g.sigma)));
    }
    if f.target != g.source {
        return Err(Error::Precondition(format!(
            "cannot compose {}->{} after {}->{}",
            g.source, g.target, f.source, f.target
        )));
    }
    let mut out = Morphism::zero(&f.sigma, f.source, g.target)?;
    for (df, cf) in &f.terms {
        // i^{-1}: T -> S
        let mut inv = vec![0u32; f.target + 1];
        for (s, t) in df.pairs() {
            inv[t as usize] = s;
        }
        for (dg, cg) in &g.terms {
            let matching: Vec<u32> =
                df.matching.iter().map(|&t| if t == 0 { 0 } else { dg.matching[t as usize - 1] }).collect();
            let factors: Vec<Vec<(BasisBlock, Rational)>> =
                dg.blocks.iter().map(|b| transport(&f.sigma, b, |x| inv[x as usize])).collect();
            let c = cf * cg;
            for (mut blocks, x) in expand_product(&factors) {
                blocks.extend(df.blocks.iter().cloned());
                add_into(&mut out.terms, BasisDiagram::from_parts(f.source, g.target, blocks, matching.clone()), &c * x);
            }
        }
    }
    Ok(out)
}

/// `f ⊗ g` on `[n] ⊔ [n'] = [n + n']`, with `g`'s labels shifted past `f`'s.
pub fn tensor(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.sigma != g.sigma {
        return Err(Error::Precondition("tensoring morphisms over different σ".into()));
    }
    let (n, m) = (f.source as u32, f.target as u32);
    let mut out = Morphism::zero(&f.sigma, f.source + g.source, f.target + g.target)?;
    for (df, cf) in &f.terms {
        for (dg, cg) in &g.terms {
            let mut blocks = df.blocks.clone();
            blocks.extend(dg.blocks.iter().map(|b| BasisBlock {
                support: b.support.iter().map(|x| x + n).collect(),
                kind: b.kind,
                index: b.index,
            }));
            let mut matching = df.matching.clone();
            matching.extend(dg.matching.iter().map(|&t| if t == 0 { 0 } else { t + m }));
            add_into(&mut out.terms, BasisDiagram::from_parts(out.source, out.target, blocks, matching), cf * cg);
        }
    }
    Ok(out)
}

/// All basis diagrams `[n] -> [m]`, sorted.
pub fn hom_basis(sigma: &PartitionTuple, n: usize, m: usize) -> Result<Vec<BasisDiagram>> {
    sigma.require_pure()?;
    fn rec(
        sigma: &PartitionTuple,
        dims: &[usize],
        assigned: &mut Vec<bool>,
        blocks: &mut Vec<BasisBlock>,
        free: &mut Vec<u32>,
        m: usize,
        out: &mut Vec<(Vec<BasisBlock>, Vec<u32>)>,
    ) {
        let Some(first) = assigned.iter().position(|a| !a) else {
            if free.len() == m {
                out.push((blocks.clone(), free.clone()));
            }
            return;
        };
        let remaining = assigned.iter().filter(|a| !**a).count();
        if free.len() < m && free.len() + remaining >= m {
            assigned[first] = true;
            free.push(first as u32 + 1);
            rec(sigma, dims, assigned, blocks, free, m, out);
            free.pop();
            assigned[first] = false;
        }
        if remaining + free.len() <= m {
            return;
        }
        assigned[first] = true;
        let rest: Vec<usize> = (first + 1..assigned.len()).filter(|&i| !assigned[i]).collect();
        for (p, shape) in sigma.entries().iter().enumerate() {
            let k = shape.size();
            if k - 1 > rest.len() {
                continue;
            }
            for others in crate::combinat::subsets(&rest, k - 1) {
                for &o in &others {
                    assigned[o] = true;
                }
                let support: Vec<u32> = std::iter::once(first).chain(others.iter().copied()).map(|i| i as u32 + 1).collect();
                for index in 0..dims[p] {
                    blocks.push(BasisBlock { support: support.clone(), kind: p, index });
                    rec(sigma, dims, assigned, blocks, free, m, out);
                    blocks.pop();
                }
                for &o in &others {
                    assigned[o] = false;
                }
            }
        }
        assigned[first] = false;
    }
    if m > n {
        return Ok(Vec::new());
    }
    let dims: Vec<usize> = sigma.entries().iter().map(|s| basis_for(s).dim()).collect();
    let mut partial = Vec::new();
    rec(sigma, &dims, &mut vec![false; n], &mut Vec::new(), &mut Vec::new(), m, &mut partial);
    let perms = permutations(m);
    let mut out = Vec::new();
    for (blocks, free) in partial {
        for p in &perms {
            let mut matching = vec![0u32; n];
            for (j, &s) in free.iter().enumerate() {
                matching[s as usize - 1] = p[j] as u32 + 1;
            }
            out.push(BasisDiagram::from_parts(n, m, blocks.clone(), matching));
        }
    }
    out.sort();
    Ok(out)
}

/// A morphism of 𝔘(σ) = 𝔇(σ)^op, stored as the underlying downwards morphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UpMorphism(Morphism);

// arrows are reversed, so the getters swap on purpose
#[allow(clippy::misnamed_getters)]
impl UpMorphism {
    pub fn source(&self) -> usize {
        self.0.target
    }

    pub fn target(&self) -> usize {
        self.0.source
    }

    pub fn down(&self) -> &Morphism {
        &self.0
    }

    pub fn into_down(self) -> Morphism {
        self.0
    }
}

pub fn upwards_view(f: &Morphism) -> UpMorphism {
    UpMorphism(f.clone())
}

pub fn downwards_view(f: &UpMorphism) -> Morphism {
    f.0.clone()
}

/// `g ∘ f` in 𝔘(σ), i.e. `f ∘ g` downstairs.
pub fn compose_up(g: &UpMorphism, f: &UpMorphism) -> Result<UpMorphism> {
    Ok(UpMorphism(compose(&f.0, &g.0)?))
}

/// Basis of Hom_{𝔘(σ)}([n], [m]); empty unless `n <= m`.
pub fn up_hom_basis(sigma: &PartitionTuple, n: usize, m: usize) -> Result<Vec<BasisDiagram>> {
    hom_basis(sigma, m, n)
}
