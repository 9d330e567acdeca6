//! Partitions, the dominance order, and `GL_n` weights.

use crate::error::{CoreError, Result};
use crate::skew::Cell;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: a weakly decreasing sequence of nonnegative integers.
/// Trailing zeros are trimmed, so the empty partition is `[]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros. The parts must be
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(t)`; the empty partition when `t = 0`.
    pub fn row(t: usize) -> Self {
        if t == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![t] }
        }
    }

    /// Single column `(1^t)`.
    pub fn column(t: usize) -> Self {
        Partition { parts: vec![1; t] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based); 0 beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 || row > self.parts.len() {
            0
        } else {
            self.parts[row - 1]
        }
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Transpose: `lambda'_j = #{i : lambda_i >= j}`.
    pub fn transpose(&self) -> Partition {
        let cols = self.row_len(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.row_len(i) >= other.row_len(i))
    }

    /// Cells `(i, j)`, 1-based, in scan order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.0 >= 1 && cell.1 >= 1 && cell.1 <= self.row_len(cell.0)
    }

    /// Dominance order: `self <= other` iff all leading partial sums of
    /// `self` are dominated. Both partitions must have the same size.
    pub fn dominance_le(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(CoreError::SizeMismatch(format!(
                "dominance order needs |{self}| = |{other}|"
            )));
        }
        let rows = self.len().max(other.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 1..=rows {
            a += self.row_len(i);
            b += other.row_len(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for part in (1..=max.min(n)).rev() {
                current.push(part);
                rec(n - part, part, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions contained in an `rows x cols` box (including the empty
    /// one), for enumeration grids.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut current: Vec<usize> = Vec::new();
        fn rec(
            rows_left: usize,
            max: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rows_left == 0 {
                return;
            }
            for part in (1..=max).rev() {
                current.push(part);
                out.push(Partition {
                    parts: current.clone(),
                });
                rec(rows_left - 1, part, current, out);
                current.pop();
            }
        }
        rec(rows, cols, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An integer weight of a general linear group torus, of fixed length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GLWeight {
    coords: Vec<i64>,
}

impl GLWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        GLWeight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weight `[lambda, mu] = (lambda_1, ..., 0, ..., 0, ..., -mu_2, -mu_1)`
    /// of length `n`. Requires `l(lambda) + l(mu) <= n` and `|lambda| = |mu|`.
    pub fn bracket(lambda: &Partition, mu: &Partition, n: usize) -> Result<Self> {
        if lambda.size() != mu.size() {
            return Err(CoreError::SizeMismatch(format!(
                "[lambda,mu] needs |lambda| = |mu|, got {lambda} and {mu}"
            )));
        }
        if lambda.len() + mu.len() > n {
            return Err(CoreError::SizeMismatch(format!(
                "[lambda,mu] needs l(lambda) + l(mu) <= n = {n}"
            )));
        }
        let mut coords = vec![0i64; n];
        for (i, &p) in lambda.parts().iter().enumerate() {
            coords[i] = p as i64;
        }
        for (i, &p) in mu.parts().iter().enumerate() {
            coords[n - 1 - i] = -(p as i64);
        }
        Ok(GLWeight { coords })
    }

    /// Splits a dominant sum-zero weight into the pair `(lambda, mu)` with
    /// `self = [lambda, mu]`.
    pub fn split(&self) -> Result<(Partition, Partition)> {
        if !self.is_dominant() {
            return Err(CoreError::Precondition(format!("{self:?} is not dominant")));
        }
        if self.sum() != 0 {
            return Err(CoreError::Precondition(format!(
                "{self:?} has nonzero coordinate sum"
            )));
        }
        let lambda: Vec<usize> = self
            .coords
            .iter()
            .take_while(|&&c| c > 0)
            .map(|&c| c as usize)
            .collect();
        let mu: Vec<usize> = self
            .coords
            .iter()
            .rev()
            .take_while(|&&c| c < 0)
            .map(|&c| (-c) as usize)
            .collect();
        Ok((Partition::new(lambda)?, Partition::new(mu)?))
    }

    /// `(-mu)^rev` padded to length `r`: the GL_r weight of the
    /// highest-weight spaces on the `r`-row side.
    pub fn neg_rev(mu: &Partition, r: usize) -> Result<Self> {
        if mu.len() > r {
            return Err(CoreError::SizeMismatch(format!(
                "l({mu}) > r = {r}"
            )));
        }
        let mut coords = vec![0i64; r];
        for (i, &p) in mu.parts().iter().enumerate() {
            coords[r - 1 - i] = -(p as i64);
        }
        Ok(GLWeight { coords })
    }

    /// Dominant weight padded to length `n` (partition as a weight).
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.len() > n {
            return Err(CoreError::SizeMismatch(format!("l({p}) > {n}")));
        }
        let mut coords = vec![0i64; n];
        for (i, &q) in p.parts().iter().enumerate() {
            coords[i] = q as i64;
        }
        Ok(GLWeight { coords })
    }

    /// Adds `s` to every coordinate; used to shift a sum-zero weight into a
    /// partition.
    pub fn shift(&self, s: i64) -> GLWeight {
        GLWeight {
            coords: self.coords.iter().map(|&c| c + s).collect(),
        }
    }

    /// Interprets a dominant weight with nonnegative entries as a partition.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.coords.iter().any(|&c| c < 0) {
            return Err(CoreError::Precondition(format!(
                "{self:?} has negative entries"
            )));
        }
        Partition::new(self.coords.iter().map(|&c| c as usize).collect())
    }
}

impl fmt::Debug for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
