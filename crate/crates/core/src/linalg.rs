//! Exact linear algebra over the rationals: dense fraction-free rank,
//! a sparse incremental eliminator over arbitrary ordered keys, and
//! small dense rational matrix helpers.

use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;

/// Rank of a dense rational matrix by fraction-free Gaussian elimination:
/// rows are cleared to integers, pivoting divides by the row content to
/// keep growth down. Exact.
pub fn rank_dense(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let ncols = m.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in &mut m {
        r.resize(ncols, BigInt::zero());
    }
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..ncols {
        // Prefer a pivot with small absolute value.
        let pivot = (row..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].magnitude().clone());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for i in row + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let a = m[row][col].clone();
            let b = m[i][col].clone();
            let g = num::Integer::gcd(&a, &b);
            let fa = &a / &g;
            let fb = &b / &g;
            for j in col..ncols {
                let v = &m[i][j] * &fa - &m[row][j] * &fb;
                m[i][j] = v;
            }
            reduce_content(&mut m[i]);
        }
        rank += 1;
        row += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.is_zero() {
            lcm = num::Integer::lcm(&lcm, v.denom());
        }
    }
    row.iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn reduce_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = num::Integer::gcd(&g, v);
        }
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Sparse vector over ordered keys.
pub type SparseVec<K> = BTreeMap<K, BigRational>;

/// Incremental Gaussian eliminator over sparse rational vectors keyed by
/// an arbitrary ordered type. Pivot rows are normalized to leading
/// coefficient 1. Exact.
pub struct SparseEliminator<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseEliminator<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> SparseEliminator<K> {
    pub fn new() -> Self {
        SparseEliminator {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` by the current pivot rows; the result has no support on
    /// pivot keys.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        loop {
            let Some((key, coeff)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            let Some(pivot_row) = self.pivots.get(&key) else {
                // Leading key is not a pivot; reduce deeper keys directly.
                return self.reduce_tail(v);
            };
            v = sub_scaled(v, pivot_row, &coeff);
        }
    }

    fn reduce_tail(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        loop {
            let hit = v
                .iter()
                .find(|(k, _)| self.pivots.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            match hit {
                Some((key, coeff)) => {
                    let pivot_row = self.pivots.get(&key).unwrap().clone();
                    v = sub_scaled(v, &pivot_row, &coeff);
                }
                None => return v,
            }
        }
    }

    /// Inserts a vector; returns true if it was independent of the rows
    /// seen so far (rank grew).
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut v = self.reduce(v);
        let Some((key, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        for coeff in v.values_mut() {
            *coeff = &*coeff / &lead;
        }
        self.pivots.insert(key, v);
        true
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

fn sub_scaled<K: Ord + Clone>(
    mut v: SparseVec<K>,
    row: &SparseVec<K>,
    factor: &BigRational,
) -> SparseVec<K> {
    for (k, c) in row {
        let delta = c * factor;
        match v.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !delta.is_zero() {
                    e.insert(-delta);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let nv = e.get() - delta;
                if nv.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = nv;
                }
            }
        }
    }
    v
}

/// Rank of a family of sparse vectors.
pub fn rank_sparse<K: Ord + Clone>(vecs: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut elim = SparseEliminator::new();
    for v in vecs {
        elim.insert(v);
    }
    elim.rank()
}

/// Dense rational matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let v = &out[(i, j)] + a * b;
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> RatMatrix {
        assert_eq!(self.rows, self.cols);
        let mut out = RatMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            for j in 0..n {
                a.data.swap(col * n + j, pivot * n + j);
                inv.data.swap(col * n + j, pivot * n + j);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let v = &a[(i, j)] - &f * &a[(col, j)];
                    a[(i, j)] = v;
                    let w = &inv[(i, j)] - &f * &inv[(col, j)];
                    inv[(i, j)] = w;
                }
            }
        }
        Some(inv)
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}
