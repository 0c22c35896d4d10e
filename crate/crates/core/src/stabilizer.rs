//! Generalized stabilizers Γ_x(n) ⊆ GL_∞ of a point x ∈ A^σ{k^M}, the germinal
//! axioms on samples, and the Γ-linearity of maps reduced at x.
//!
//! `g ∈ Γ_x(n)` iff `ω(g v_1, ..., g v_k) = ω(v_1, ..., v_k)` for all `v_i ∈ k^n`.
//! An element of GL_∞ is a finite invertible block padded by the identity, so
//! this is decidable from the form at level `M >= max(n, size(g))`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brauer::Morphism;
use crate::combinat::{index_of, permutations, word_of, PartitionTuple};
use crate::error::{Error, Result};
use crate::exactla::{rat, ratio, RatMat, Rational};
use crate::modcat::{FormPoint, FormTable};

/// An element of GL_∞ = ⋃ GL_m, stored by its smallest representing block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLElement(RatMat);

impl GLElement {
    pub fn new(m: RatMat) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Precondition(format!("{}x{} matrix is not square", m.rows(), m.cols())));
        }
        if m.rank() != m.rows() {
            return Err(Error::Precondition("matrix is not invertible".into()));
        }
        Ok(Self::trimmed(m))
    }

    pub fn identity() -> Self {
        GLElement(RatMat::zeros(0, 0))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RatMat::from_i64(rows))
    }

    pub fn permutation(images: &[usize]) -> Self {
        // column c carries e_c to e_{images[c]}
        let n = images.len();
        let mut m = RatMat::zeros(n, n);
        for (c, &r) in images.iter().enumerate() {
            m.set(r, c, Rational::one());
        }
        Self::trimmed(m)
    }

    pub fn diagonal(entries: &[Rational]) -> Result<Self> {
        let mut m = RatMat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        Self::new(m)
    }

    /// `diag(1_j, a)`: an element of G(j).
    pub fn block_diag_identity(j: usize, a: &RatMat) -> Result<Self> {
        let n = j + a.rows();
        let mut m = RatMat::identity(n);
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                m.set(j + r, j + c, a.get(r, c).clone());
            }
        }
        Self::new(m)
    }

    fn trimmed(mut m: RatMat) -> Self {
        let mut n = m.rows();
        while n > 0 {
            let last = n - 1;
            let ok = (0..n).all(|i| {
                let want = if i == last { Rational::one() } else { Rational::zero() };
                *m.get(last, i) == want && *m.get(i, last) == want
            });
            if !ok {
                break;
            }
            n -= 1;
        }
        if n < m.rows() {
            let rows = (0..n).map(|r| m.row(r)[..n].to_vec()).collect();
            m = RatMat::from_rows_with_cols(rows, n).expect("square block");
        }
        GLElement(m)
    }

    /// Smallest m with g ∈ GL_m.
    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn block(&self) -> &RatMat {
        &self.0
    }

    /// The representing block padded to `n x n`.
    pub fn padded(&self, n: usize) -> RatMat {
        assert!(n >= self.size(), "cannot pad a {}-block to {n}", self.size());
        let mut m = RatMat::identity(n);
        for r in 0..self.size() {
            for c in 0..self.size() {
                m.set(r, c, self.0.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &GLElement) -> GLElement {
        let n = self.size().max(other.size());
        Self::trimmed(self.padded(n).mul(&other.padded(n)).expect("same size"))
    }

    /// Acts on a vector of `(k^M)^{⊗d}`, slot 0 most significant.
    pub fn act_tensor(&self, rank: usize, degree: usize, v: &[Rational]) -> Vec<Rational> {
        let g = self.padded(rank);
        let mut cur = v.to_vec();
        for slot in 0..degree {
            let mut next = vec![Rational::zero(); cur.len()];
            for (idx, x) in cur.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut w = word_of(idx, rank, degree);
                let c = w[slot];
                for r in 0..rank {
                    let y = g.get(r, c);
                    if !y.is_zero() {
                        w[slot] = r;
                        next[index_of(&w, rank)] += x * y;
                    }
                }
            }
            cur = next;
        }
        cur
    }
}

fn require_level(omega: &FormPoint, required: usize) -> Result<()> {
    if omega.rank() < required {
        return Err(Error::Level { required, have: omega.rank() });
    }
    Ok(())
}

/// Tables of `g⁻¹ω = ω(g ·, ..., g ·)`.
pub fn pulled_back_tables(omega: &FormPoint, g: &GLElement) -> Result<Vec<FormTable>> {
    require_level(omega, g.size())?;
    let m = g.padded(omega.rank());
    Ok(omega.tables().iter().map(|t| t.pulled_back(&m)).collect())
}

/// g ∈ Γ_ω(n).
pub fn in_gamma(omega: &FormPoint, n: usize, g: &GLElement) -> Result<bool> {
    require_level(omega, n.max(g.size()))?;
    let pulled = pulled_back_tables(omega, g)?;
    Ok(omega.tables().iter().zip(&pulled).all(|(a, b)| a.agrees_below(b, n)))
}

/// A level j with Γ(j)·g ⊆ Γ(n) for g ∈ Γ(n): g maps k^n into k^{max(n, size g)}.
pub fn gamma_product_level(g: &GLElement, n: usize) -> usize {
    n.max(g.size())
}

/// Symmetries of `x_1 x_2 x_3` inside GL_3: coordinate permutations and the torus
/// elements `diag(a, b, 1/(ab))`.
pub fn monomial_symmetries() -> Vec<GLElement> {
    let mut out: Vec<GLElement> = permutations(3).iter().map(|p| GLElement::permutation(p)).collect();
    let scalars = [rat(1), rat(-1), rat(2), ratio(1, 2), rat(-3), ratio(-1, 3)];
    for a in &scalars {
        for b in &scalars {
            let c = Rational::one() / (a * b);
            out.push(GLElement::diagonal(&[a.clone(), b.clone(), c]).expect("nonzero"));
        }
    }
    out
}

fn random_invertible(rng: &mut ChaCha8Rng, size: usize) -> RatMat {
    loop {
        let rows = (0..size).map(|_| (0..size).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect();
        let m = RatMat::from_rows_with_cols(rows, size).expect("square");
        if m.rank() == size {
            return m;
        }
    }
}

/// A random element of G(j) of size at most `cap`.
pub fn sample_g(rng: &mut ChaCha8Rng, j: usize, cap: usize) -> GLElement {
    if cap <= j {
        return GLElement::identity();
    }
    let extra = rng.gen_range(1..=cap - j);
    GLElement::block_diag_identity(j, &random_invertible(rng, extra)).expect("invertible block")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub samples: usize,
    pub passes: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    fn new(axiom: &str) -> Self {
        AxiomReport { axiom: axiom.into(), samples: 0, passes: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.samples += 1;
        if ok {
            self.passes += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.samples > 0 && self.failures.is_empty()
    }
}

/// An element known to lie in Γ_ω(j), of size at most the form's level: a G(j)
/// element, a listed symmetry that passes membership, or a product of the two.
fn sample_member(omega: &FormPoint, rng: &mut ChaCha8Rng, j: usize, symmetries: &[GLElement]) -> Result<GLElement> {
    let cap = omega.rank();
    let t = sample_g(rng, j, cap);
    if symmetries.is_empty() || rng.gen_bool(0.4) {
        return Ok(t);
    }
    let s = &symmetries[rng.gen_range(0..symmetries.len())];
    if s.size() > cap || !in_gamma(omega, j, s)? {
        return Ok(t);
    }
    Ok(if rng.gen_bool(0.5) { s.mul(&t) } else { s.clone() })
}

/// Checks the germinal axioms on `samples` draws each:
/// (a) nesting `Γ(j) ⊆ Γ(i)` for `i <= j`, (b) `1 ∈ Γ(i)`,
/// (c) `Γ(j)·g ⊆ Γ(n)` for `g ∈ Γ(n)` and `j = max(n, size g)`.
pub fn germinal_axiom_suite(
    omega: &FormPoint,
    levels: &[usize],
    samples: usize,
    seed: u64,
    symmetries: &[GLElement],
) -> Result<Vec<AxiomReport>> {
    let top = *levels.iter().max().ok_or_else(|| Error::Precondition("no levels given".into()))?;
    require_level(omega, top)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| levels[rng.gen_range(0..levels.len())];

    let mut nesting = AxiomReport::new("a");
    for _ in 0..samples {
        let j = pick(&mut rng);
        let h = sample_member(omega, &mut rng, j, symmetries)?;
        let mut ok = true;
        for &i in levels.iter().filter(|&&i| i <= j) {
            ok &= in_gamma(omega, i, &h)?;
        }
        nesting.record(ok, || format!("element of Γ({j}) of size {} leaves a lower level", h.size()));
    }

    let mut identity = AxiomReport::new("b");
    for _ in 0..samples {
        let i = pick(&mut rng);
        let size = rng.gen_range(0..=omega.rank());
        let one = GLElement::new(RatMat::identity(size))?;
        identity.record(in_gamma(omega, i, &one)?, || format!("identity not in Γ({i})"));
    }

    let mut product = AxiomReport::new("c");
    let mut attempts = 0;
    while product.samples < samples {
        attempts += 1;
        if attempts > 50 * samples.max(1) {
            return Err(Error::Precondition("could not draw enough Γ(n) elements within the form's level".into()));
        }
        let n = pick(&mut rng);
        let g = sample_member(omega, &mut rng, n, symmetries)?;
        let j = gamma_product_level(&g, n);
        if j > omega.rank() || !in_gamma(omega, n, &g)? {
            continue;
        }
        let h = sample_member(omega, &mut rng, j, symmetries)?;
        if !in_gamma(omega, j, &h)? {
            continue;
        }
        let hg = h.mul(&g);
        let ok = hg.size() <= omega.rank() && in_gamma(omega, n, &hg)?;
        product.record(ok, || format!("Γ({j})·g left Γ({n}) for g of size {}", g.size()));
    }
    Ok(vec![nesting, identity, product])
}

/// A variable of the coordinate ring R: the generator `e_word ⊗ x_b` of
/// `S_{σ_p}`, whose value at ω is `Ω_p(x_b)(e_word)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvalVar {
    pub kind: usize,
    pub index: usize,
    pub word: Vec<usize>,
}

/// A polynomial in evaluation variables; monomials are sorted multisets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalPoly {
    terms: BTreeMap<Vec<EvalVar>, Rational>,
}

impl EvalPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = EvalPoly::default();
        p.add_monomial(Vec::new(), c);
        p
    }

    pub fn variable(v: EvalVar) -> Self {
        let mut p = EvalPoly::default();
        p.add_monomial(vec![v], Rational::one());
        p
    }

    pub fn add_monomial(&mut self, mut vars: Vec<EvalVar>, c: Rational) {
        vars.sort();
        let e = self.terms.entry(vars.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&vars);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<EvalVar>, Rational> {
        &self.terms
    }

    /// Largest letter used, plus one: f ∈ R_n iff this is at most n.
    pub fn support_level(&self) -> usize {
        self.terms.keys().flatten().flat_map(|v| v.word.iter().map(|&a| a + 1)).max().unwrap_or(0)
    }

    pub fn evaluate(&self, tables: &[FormTable]) -> Rational {
        self.terms
            .iter()
            .map(|(vars, c)| vars.iter().fold(c.clone(), |acc, v| acc * tables[v.kind].value(v.index, &v.word)))
            .sum()
    }
}

/// `φ(1 ⊗ v) = Σ f_i ⊗ w_i` for a GL-equivariant map `φ : R ⊗ V -> R ⊗ W` with
/// `W = (k^M)^{⊗target_degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapPresentation {
    pub rank: usize,
    pub target_degree: usize,
    pub terms: Vec<(EvalPoly, Vec<Rational>)>,
}

impl MapPresentation {
    pub fn new(rank: usize, target_degree: usize, terms: Vec<(EvalPoly, Vec<Rational>)>) -> Result<Self> {
        let len = rank.pow(target_degree as u32);
        if terms.iter().any(|(_, w)| w.len() != len) {
            return Err(Error::Precondition(format!("target vectors must have length {len}")));
        }
        Ok(MapPresentation { rank, target_degree, terms })
    }

    /// The universal θ over R applied to `v ∈ (k^M)^{⊗source}`: each block
    /// contributes the generator it pairs with instead of a number.
    pub fn from_morphism(f: &Morphism, rank: usize, v: &[Rational]) -> Result<Self> {
        let (s, t) = (f.source(), f.target());
        if v.len() != rank.pow(s as u32) {
            return Err(Error::Precondition(format!("source vector must have length {}", rank.pow(s as u32))));
        }
        let mut by_out: BTreeMap<usize, EvalPoly> = BTreeMap::new();
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let j = word_of(idx, rank, s);
            for (d, c) in f.terms() {
                let vars = d
                    .blocks()
                    .iter()
                    .map(|b| EvalVar { kind: b.kind, index: b.index, word: b.support.iter().map(|&l| j[l as usize - 1]).collect() })
                    .collect();
                let mut out = vec![0usize; t];
                for (a, b) in d.pairs() {
                    out[b as usize - 1] = j[a as usize - 1];
                }
                by_out.entry(index_of(&out, rank)).or_default().add_monomial(vars, c * x);
            }
        }
        let len = rank.pow(t as u32);
        let terms = by_out
            .into_iter()
            .filter(|(_, p)| !p.terms().is_empty())
            .map(|(i, p)| {
                let mut w = vec![Rational::zero(); len];
                w[i] = Rational::one();
                (p, w)
            })
            .collect();
        Self::new(rank, t, terms)
    }

    /// The canonical map `R ⊗ V^{⊗k} -> R`, `v ↦ Ω_p(x_b)(v)` over R.
    pub fn form_evaluation(sigma: &PartitionTuple, p: usize, b: usize, rank: usize, v: &[Rational]) -> Result<Self> {
        let shape = sigma.entries().get(p).ok_or_else(|| Error::Precondition(format!("no block type {p}")))?;
        let k = shape.size();
        let labels: Vec<u32> = (1..=k as u32).collect();
        let block = crate::brauer::BasisBlock { support: labels, kind: p, index: b };
        let d = crate::brauer::BasisDiagram::new(sigma, k, 0, vec![block], vec![0; k])?;
        Self::from_morphism(&Morphism::basis(sigma, d)?, rank, v)
    }

    /// φ_x(v) = Σ f_i(x) w_i, reading polynomial values from `tables`.
    pub fn reduce(&self, tables: &[FormTable]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rank.pow(self.target_degree as u32)];
        for (f, w) in &self.terms {
            let c = f.evaluate(tables);
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o += &c * x;
            }
        }
        out
    }

    fn support_level(&self) -> usize {
        self.terms.iter().map(|(f, _)| f.support_level()).max().unwrap_or(0)
    }
}

/// Whether membership of g in Γ_ω(n) is a checked precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearityMode {
    Strict,
    /// Skips the membership check; used for negative controls.
    Evaluate,
}

/// Whether `φ_x(g v) = g φ_x(v)`, where `φ_x(g v) = Σ f_i(g⁻¹x) g w_i` by GL-equivariance of φ.
#[allow(clippy::too_many_arguments)]
pub fn gamma_linearity_check(
    sigma: &PartitionTuple,
    omega: &FormPoint,
    phi: &MapPresentation,
    n: usize,
    g: &GLElement,
    v: &[Rational],
    source_degree: usize,
    mode: LinearityMode,
) -> Result<bool> {
    if sigma != omega.sigma() {
        return Err(Error::Precondition("form and σ disagree".into()));
    }
    require_level(omega, n.max(g.size()))?;
    if phi.rank != omega.rank() {
        return Err(Error::Precondition(format!("presentation at rank {} for a form at level {}", phi.rank, omega.rank())));
    }
    let rank = omega.rank();
    if v.len() != rank.pow(source_degree as u32) {
        return Err(Error::Precondition("source vector has the wrong length".into()));
    }
    let outside = v.iter().enumerate().any(|(i, x)| !x.is_zero() && word_of(i, rank, source_degree).iter().any(|&a| a >= n));
    if outside {
        return Err(Error::Precondition(format!("v does not lie in V{{k^{n}}}")));
    }
    if phi.support_level() > n {
        return Err(Error::Precondition(format!("a coefficient function is not in R_{n}")));
    }
    if mode == LinearityMode::Strict && !in_gamma(omega, n, g)? {
        return Err(Error::Precondition(format!("g is not in Γ_ω({n})")));
    }
    let pulled = pulled_back_tables(omega, g)?;
    let gw = |w: &[Rational]| g.act_tensor(rank, phi.target_degree, w);
    let lhs = gw(&phi.reduce(&pulled));
    let rhs = gw(&phi.reduce(omega.tables()));
    Ok(lhs == rhs)
}
