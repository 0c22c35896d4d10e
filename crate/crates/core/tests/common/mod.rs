//! Independent oracles. None of these go through the library's symmetric
//! function engine, Specht straightening, or diagram enumeration; they recompute
//! the same quantities by brute force on explicit polynomials and tensors.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use sigma_brauer::brauer::{hom_basis, BasisDiagram, Morphism};
use sigma_brauer::combinat::{Partition, PartitionTuple};
use sigma_brauer::exactla::{rat, ratio, RatMat, Rational};
use sigma_brauer::modcat::FormPoint;

/// Standard Young tableaux of a shape, by removing outer corners.
pub fn syt_count(shape: &[usize]) -> u64 {
    if shape.iter().all(|&p| p == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let below = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] > below {
            let mut s = shape.to_vec();
            s[i] -= 1;
            total += syt_count(&s);
        }
    }
    total
}

/// K_{κμ}: chains of horizontal strips of sizes μ_1, μ_2, ... ending at κ.
pub fn kostka(kappa: &Partition, mu: &Partition) -> u64 {
    fn rec(inner: Vec<usize>, target: &[usize], content: &[usize]) -> u64 {
        let Some((&first, rest)) = content.split_first() else {
            return u64::from(inner.iter().zip(target).all(|(a, b)| a == b));
        };
        let mut total = 0;
        // every horizontal strip of size `first` added to `inner` inside `target`
        fn strips(i: usize, left: usize, cur: &mut Vec<usize>, inner: &[usize], target: &[usize], out: &mut Vec<Vec<usize>>) {
            if i == target.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let cap = if i == 0 { target[0] } else { target[i].min(inner[i - 1]) };
            for add in 0..=left.min(cap.saturating_sub(inner[i])) {
                cur.push(inner[i] + add);
                strips(i + 1, left - add, cur, inner, target, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        strips(0, first, &mut Vec::new(), &inner, target, &mut out);
        for next in out {
            total += rec(next, target, rest);
        }
        total
    }
    if kappa.size() != mu.size() {
        return 0;
    }
    rec(vec![0; kappa.len()], kappa.parts(), mu.parts())
}

/// Exponent vectors of the Schur polynomial s_ν in `vars` variables, with repetition.
fn schur_monomials(nu: &Partition, vars: usize) -> Vec<Vec<u8>> {
    let cells: Vec<(usize, usize)> = nu.cells().collect();
    let mut grid = vec![vec![0usize; nu.part(0)]; nu.len()];
    let mut out = Vec::new();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, vars: usize, out: &mut Vec<Vec<u8>>) {
        if k == cells.len() {
            let mut e = vec![0u8; vars];
            for row in grid.iter() {
                for &v in row.iter().filter(|&&v| v > 0) {
                    e[v - 1] += 1;
                }
            }
            out.push(e);
            return;
        }
        let (r, c) = cells[k];
        let lo = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo = if r > 0 { lo.max(grid[r - 1][c] + 1) } else { lo };
        for v in lo..=vars {
            grid[r][c] = v;
            rec(k + 1, cells, grid, vars, out);
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mut grid, vars, &mut out);
    out
}

/// h_a[s_ν] (`exterior = false`) or e_a[s_ν] by substituting the monomials of
/// s_ν into h_a / e_a, then peeling off Schur functions by leading monomial.
pub fn plethysm_oracle(exterior: bool, a: usize, nu: &Partition) -> BTreeMap<Partition, i64> {
    let deg = a * nu.size();
    let vars = deg.max(1);
    let ys = schur_monomials(nu, vars);
    let mut dominant: HashMap<Vec<u8>, i64> = HashMap::new();
    let mut idx = Vec::with_capacity(a);
    fn rec(
        start: usize,
        a: usize,
        exterior: bool,
        ys: &[Vec<u8>],
        idx: &mut Vec<usize>,
        acc: &mut Vec<u8>,
        out: &mut HashMap<Vec<u8>, i64>,
    ) {
        if idx.len() == a {
            if acc.windows(2).all(|w| w[0] >= w[1]) {
                *out.entry(acc.clone()).or_insert(0) += 1;
            }
            return;
        }
        for i in start..ys.len() {
            for (x, y) in acc.iter_mut().zip(&ys[i]) {
                *x += y;
            }
            idx.push(i);
            rec(if exterior { i + 1 } else { i }, a, exterior, ys, idx, acc, out);
            idx.pop();
            for (x, y) in acc.iter_mut().zip(&ys[i]) {
                *x -= y;
            }
        }
    }
    rec(0, a, exterior, &ys, &mut idx, &mut vec![0u8; vars], &mut dominant);
    let mut shapes: Vec<Partition> = Partition::all_of(deg).into_iter().filter(|p| p.len() <= vars).collect();
    shapes.sort_by(|x, y| y.parts().cmp(x.parts()));
    let mut result: BTreeMap<Partition, i64> = BTreeMap::new();
    for lam in &shapes {
        let mut e = vec![0u8; vars];
        for (i, &p) in lam.parts().iter().enumerate() {
            e[i] = p as u8;
        }
        let mut c = dominant.get(&e).copied().unwrap_or(0);
        for (kappa, ck) in &result {
            c -= ck * kostka(kappa, lam) as i64;
        }
        if c != 0 {
            result.insert(lam.clone(), c);
        }
    }
    result
}

/// |Hom([n],[m])| = C(n,m) m! B(n-m), where B counts set partitions of the
/// consumed labels into decorated blocks: B(r) = Σ_k C(r-1,k-1) a_k B(r-k).
pub fn hom_count_egf(sigma: &PartitionTuple, n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    let mut a = vec![0u128; n + 1];
    for p in sigma.entries() {
        if p.size() <= n && p.size() > 0 {
            a[p.size()] += syt_count(p.parts()) as u128;
        }
    }
    let binom = |n: usize, k: usize| -> u128 { (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) };
    let r = n - m;
    let mut b = vec![0u128; r + 1];
    b[0] = 1;
    for t in 1..=r {
        b[t] = (1..=t).map(|k| binom(t - 1, k - 1) * a[k] * b[t - k]).sum();
    }
    binom(n, m) * (1..=m as u128).product::<u128>() * b[r]
}

/// Permutations of 0..n as image vectors.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// dim of the S^λ-multiplicity space of the traceless tensors of an ordinary
/// bilinear form (σ = (2)): rank(Y) - rank(C·Y), with Y a Young symmetrizer on
/// (k^N)^{⊗n} and C every single contraction by the Gram matrix.
pub fn traceless_oracle(omega: &FormPoint, lambda: &Partition) -> usize {
    let n = lambda.size();
    let big_n = omega.rank();
    // coefficients of a quadratic form come one per pair i <= j, lexicographic
    let mut gram = vec![vec![rat(0); big_n]; big_n];
    let pairs = (0..big_n).flat_map(|i| (i..big_n).map(move |j| (i, j)));
    for ((i, j), c) in pairs.zip(&omega.comps()[0]) {
        gram[i][j] = c.clone();
        gram[j][i] = c.clone();
    }
    // tableau filled in row order
    let mut row_of = vec![0; n];
    let mut col_of = vec![0; n];
    let mut k = 0;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row_of[k] = r;
            col_of[k] = c;
            k += 1;
        }
    }
    let perms = all_perms(n);
    let rows: Vec<&Vec<usize>> = perms.iter().filter(|p| (0..n).all(|t| row_of[p[t]] == row_of[t])).collect();
    let cols: Vec<&Vec<usize>> = perms.iter().filter(|p| (0..n).all(|t| col_of[p[t]] == col_of[t])).collect();
    let dim = big_n.pow(n as u32);
    let word = |mut idx: usize| -> Vec<usize> {
        let mut w = vec![0; n];
        for t in (0..n).rev() {
            w[t] = idx % big_n;
            idx /= big_n;
        }
        w
    };
    let index = |w: &[usize]| w.iter().fold(0, |acc, &x| acc * big_n + x);
    let act = |p: &[usize], w: &[usize]| -> Vec<usize> {
        let mut out = vec![0; n];
        for t in 0..n {
            out[p[t]] = w[t];
        }
        out
    };
    let mut y = RatMat::zeros(dim, dim);
    for col in 0..dim {
        let w = word(col);
        for p in &rows {
            let pw = act(p, &w);
            for q in &cols {
                let qpw = act(q, &pw);
                y.add_at(index(&qpw), col, &rat(perm_sign(q)));
            }
        }
    }
    let rank_y = y.rank();
    if n < 2 {
        return rank_y;
    }
    let small = big_n.pow(n as u32 - 2);
    let mut blocks = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut c = RatMat::zeros(small, dim);
            for col in 0..dim {
                let w = word(col);
                let g = &gram[w[i]][w[j]];
                if *g == rat(0) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&t| t != i && t != j).map(|t| w[t]).collect();
                let r = rest.iter().fold(0, |acc, &x| acc * big_n + x);
                c.add_at(r, col, g);
            }
            blocks.push(c);
        }
    }
    let c = RatMat::vstack(&blocks, dim).unwrap();
    rank_y - c.mul(&y).unwrap().rank()
}

/// Small nonzero coefficients for random linear combinations.
pub fn random_coefficient(rng: &mut impl Rng) -> Rational {
    match rng.gen_range(0..5) {
        0 => rat(1),
        1 => rat(-1),
        2 => rat(2),
        3 => ratio(1, 2),
        _ => ratio(-3, 2),
    }
}

/// Caches hom bases so random sampling stays cheap.
#[derive(Default)]
pub struct BasisCache(HashMap<(String, usize, usize), Vec<BasisDiagram>>);

impl BasisCache {
    pub fn get(&mut self, sigma: &PartitionTuple, n: usize, m: usize) -> &[BasisDiagram] {
        self.0.entry((sigma.to_string(), n, m)).or_insert_with(|| hom_basis(sigma, n, m).unwrap())
    }

    /// A combination of up to three basis diagrams, or None if Hom is zero.
    pub fn random_morphism(&mut self, sigma: &PartitionTuple, n: usize, m: usize, rng: &mut impl Rng) -> Option<Morphism> {
        let basis = self.get(sigma, n, m).to_vec();
        if basis.is_empty() {
            return None;
        }
        let mut f = Morphism::zero(sigma, n, m).unwrap();
        for _ in 0..rng.gen_range(1..=3) {
            let d = basis[rng.gen_range(0..basis.len())].clone();
            f = f.add(&Morphism::basis(sigma, d).unwrap().scale(&random_coefficient(rng))).unwrap();
        }
        Some(f)
    }
}

/// The family of tuples every sweep runs over.
pub fn sigma_family() -> Vec<PartitionTuple> {
    ["2", "1,1", "1", "1|1", "3", "2|1"].iter().map(|s| s.parse().unwrap()).collect()
}
