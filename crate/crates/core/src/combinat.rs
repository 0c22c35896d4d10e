//! Partitions, tuples of partitions, magnitudes and dimension formulas.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part inside partition {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts of {parts:?} are not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Young-diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// All partitions of `n`, in decreasing lexicographic order: (n), (n-1,1), ...
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by increasing size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// Size of the centralizer of a permutation with this cycle type.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.0[i..].iter().take_while(|&&q| q == p).count();
            for k in 1..=m {
                z *= BigUint::from(p) * BigUint::from(k);
            }
            i += m;
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn cycle_sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Union of parts (for power-sum products), re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Ordering used for display: by size, then decreasing lexicographic.
    pub fn display_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `""`, `"0"` and `"∅"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered tuple of partitions, written `"2|1,1"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionTuple(Vec<Partition>);

impl PartitionTuple {
    pub fn new(entries: Vec<Partition>) -> Self {
        PartitionTuple(entries)
    }

    pub fn entries(&self) -> &[Partition] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.0.iter().all(|p| !p.is_empty())
    }

    /// Error unless pure.
    pub fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure(self.to_string()))
        }
    }

    pub fn magnitude(&self) -> Magnitude {
        let max = self.0.iter().map(Partition::size).max().map_or(0, |m| m + 1);
        let mut counts = vec![0u64; max];
        for p in &self.0 {
            counts[p.size()] += 1;
        }
        Magnitude::new(counts)
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.0.iter().map(|p| if p.is_empty() { "0".to_string() } else { p.to_string() }).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl fmt::Debug for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for PartitionTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PartitionTuple::default());
        }
        Ok(PartitionTuple(s.split('|').map(str::parse).collect::<Result<Vec<_>>>()?))
    }
}

/// Counts of tuple entries by size: `counts[i]` = number of entries of size `i`.
///
/// Ordered lexicographically on `(n0, n1, ...)`, with missing entries read as 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Magnitude(Vec<u64>);

impl Magnitude {
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Magnitude(counts)
    }

    pub fn count(&self, size: usize) -> u64 {
        self.0.get(size).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }
}

impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        (0..n).map(|i| self.count(i).cmp(&other.count(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// dim S^λ, the number of standard Young tableaux of shape λ (hook length formula).
pub fn specht_dim(shape: &Partition) -> u64 {
    let hooks: BigUint = shape.cells().map(|(i, j)| BigUint::from(shape.hook(i, j))).product();
    (factorial(shape.size()) / hooks).to_u64().expect("dimension fits in u64")
}

/// dim S_λ(k^n) via the hook-content formula; 0 when λ has more than `n` rows.
pub fn schur_dim(shape: &Partition, n: usize) -> u64 {
    if shape.len() > n {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in shape.cells() {
        num *= BigUint::from(n + j - i);
        den *= BigUint::from(shape.hook(i, j));
    }
    (num / den).to_u64().expect("dimension fits in u64")
}

/// Total dimension of `S_σ(k^n) = ⊕_p S_{σ_p}(k^n)`.
pub fn tuple_schur_dim(t: &PartitionTuple, n: usize) -> u64 {
    t.entries().iter().map(|p| schur_dim(p, n)).sum()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// All `k`-element subsets of `items`, preserving order, in lexicographic order.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i].clone());
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n` as image vectors, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle type of a permutation given by images.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition(lens)
}

/// Digits of `idx` in base `base`, slot 0 most significant.
pub fn word_of(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in (0..len).rev() {
        w[slot] = idx % base;
        idx /= base;
    }
    w
}

/// Inverse of [`word_of`].
pub fn index_of(word: &[usize], base: usize) -> usize {
    word.iter().fold(0, |acc, &d| acc * base + d)
}
