//! Exact linear algebra over the rationals.
//!
//! Everything downstream (Hom-space bases, traceless kernels, isotypic
//! projectors) reduces to rank and kernel computations here. Elimination is
//! fraction-free (Bareiss) on integer-scaled rows; the plain rational
//! Gauss-Jordan routine is kept alongside it as a cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LinAlgError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `"p/q"` with `q >= 1`, always including the slash.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, LinAlgError> {
    let s = s.trim();
    let bad = || LinAlgError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Dense row-major rational matrix.
///
/// Storage is always dense; the multiplication and elimination kernels skip
/// zero entries, which is where sparse inputs (permutation actions, contraction
/// maps) spend almost all of their time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinAlgError::Shape(format!("ragged row of length {} (expected {c})", row.len())));
            }
            data.extend(row);
        }
        Ok(RatMat { rows: r, cols: c, data })
    }

    /// Build from a row list with an explicit column count (needed for 0-row matrices).
    pub fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, LinAlgError> {
        if rows.is_empty() {
            return Ok(Self::zeros(0, cols));
        }
        let m = Self::from_rows(rows)?;
        if m.cols != cols {
            return Err(LinAlgError::Shape(format!("expected {cols} columns, got {}", m.cols)));
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged integer matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, rat(x));
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to `images[j]`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        let e = &mut self.data[i * self.cols + j];
        *e += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn zero_fraction(&self) -> f64 {
        if self.data.is_empty() {
            return 1.0;
        }
        self.data.iter().filter(|x| x.is_zero()).count() as f64 / self.data.len() as f64
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(RatMat { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    /// Kronecker product; row and column indices of `self` are the more significant digits.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stack matrices vertically. All must share `cols`.
    pub fn vstack(ms: &[RatMat], cols: usize) -> Result<Self, LinAlgError> {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in ms {
            if m.cols != cols {
                return Err(LinAlgError::Shape(format!("column mismatch: {} vs {cols}", m.cols)));
            }
            rows += m.rows;
            data.extend(m.data.iter().cloned());
        }
        Ok(RatMat { rows, cols, data })
    }

    /// Rank over the rationals via fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_echelon(self).1.len()
    }

    /// Reduced row echelon form and pivot columns. Forward elimination is
    /// fraction-free; back-substitution is done over the rationals.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let (echelon, pivots) = bareiss_echelon(self);
        let r = pivots.len();
        let mut rows: Vec<Vec<Rational>> = (0..r)
            .map(|i| echelon[i].iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        for i in (0..r).rev() {
            let p = pivots[i];
            let inv = rows[i][p].recip();
            for x in rows[i].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let (upper, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in upper.iter_mut() {
                let f = row[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let m = RatMat::from_rows_with_cols(rows, self.cols).expect("rows have equal length");
        (m, pivots)
    }

    /// Plain rational Gauss-Jordan elimination. Slower on dense integer data
    /// but independent of the fraction-free path.
    pub fn rational_rref(&self) -> (RatMat, Vec<usize>) {
        let mut a = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        a.truncate(r);
        (RatMat::from_rows_with_cols(a, self.cols).expect("rows have equal length"), pivots)
    }

    /// Basis of the right null space, one vector per free column; the vector
    /// for free column `f` has a 1 at `f` and 0 at every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        kernel_from_rref(&rref, &pivots, self.cols)
    }
}

fn kernel_from_rref(rref: &RatMat, pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = rref.get(i, f);
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// Integer row echelon form (only the first `rank` rows returned) with pivot columns.
fn bareiss_echelon(m: &RatMat) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .filter_map(|i| {
            let row = m.row(i);
            if row.iter().all(Zero::is_zero) {
                return None;
            }
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            Some(row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect())
        })
        .collect();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows {
            break;
        }
        // smallest nonzero pivot keeps the numbers tame
        let Some(p) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()))
        else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..m.cols {
                let keep = &row[j] * &piv;
                let val = if f.is_zero() || pivot_row[j].is_zero() { keep } else { keep - &f * &pivot_row[j] };
                row[j] = if prev.is_one() { val } else { val / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of the common kernel of matrices sharing a column count.
pub fn intersect_kernels(ms: &[RatMat], cols: usize) -> Result<Vec<Vec<Rational>>, LinAlgError> {
    if let Some(bad) = ms.iter().find(|m| m.cols() != cols) {
        return Err(LinAlgError::Shape(format!("kernel intersection: {} columns, expected {cols}", bad.cols())));
    }
    let stacked = RatMat::vstack(ms, cols)?;
    Ok(stacked.kernel_basis())
}

/// A linear subspace of `Q^ambient`, stored by its reduced row echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: RatMat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(vectors: &[Vec<Rational>], ambient: usize) -> Result<Self, LinAlgError> {
        let m = RatMat::from_rows_with_cols(vectors.to_vec(), ambient)?;
        let (basis, pivots) = m.rref();
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace { ambient, basis: RatMat::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the subspace.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let c: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Rational::zero(); self.ambient];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (r, b) in recon.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *r += ci * b;
                }
            }
        }
        (recon == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coords(v).is_some()
    }
}
