//! Skew Young diagrams.

use crate::error::{CoreError, Result};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A cell `(row, column)` of a diagram, 1-based, matrix-style coordinates.
pub type Cell = (usize, usize);

/// The skew diagram `outer / inner`. A straight diagram has empty inner.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(CoreError::InvalidPartition(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewDiagram { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewDiagram {
            outer,
            inner: Partition::empty(),
        }
    }

    /// The antidiagonal diagram with `t` boxes: cells `(i, t - i + 1)`.
    pub fn antidiagonal(t: usize) -> Self {
        let outer = Partition::new((1..=t).rev().collect()).unwrap();
        let inner = Partition::new((1..t).rev().collect()).unwrap();
        SkewDiagram { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the ambient outer shape.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Row lengths including empty rows, indexed 1..=num_rows.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.num_rows())
            .map(|i| self.outer.row_len(i) - self.inner.row_len(i))
            .collect()
    }

    /// Cells in scan order: row by row, left to right, top to bottom.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells());
        for i in 1..=self.num_rows() {
            for j in self.inner.row_len(i) + 1..=self.outer.row_len(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Position of `cell` in scan order.
    pub fn scan_index(&self, cell: Cell) -> Option<usize> {
        if !self.contains_cell(cell) {
            return None;
        }
        let mut idx = 0;
        for i in 1..=cell.0 - 1 {
            idx += self.outer.row_len(i) - self.inner.row_len(i);
        }
        Some(idx + cell.1 - self.inner.row_len(cell.0) - 1)
    }

    /// Shifts away empty rows and columns; the result has a cell in row 1
    /// and column 1. Normal form for deduplicating skew shapes.
    pub fn normalized(&self) -> SkewDiagram {
        let cells = self.cells();
        if cells.is_empty() {
            return SkewDiagram::straight(Partition::empty());
        }
        let min_row = cells.iter().map(|c| c.0).min().unwrap();
        let min_col = cells.iter().map(|c| c.1).min().unwrap();
        let rows: Vec<usize> = (min_row..=self.num_rows())
            .filter(|&i| self.outer.row_len(i) > self.inner.row_len(i))
            .collect();
        let outer = Partition::new(
            rows.iter()
                .map(|&i| self.outer.row_len(i) + 1 - min_col)
                .collect(),
        )
        .expect("outer rows stay weakly decreasing");
        let inner = Partition::new(
            rows.iter()
                .map(|&i| self.inner.row_len(i).saturating_sub(min_col - 1))
                .collect(),
        )
        .expect("inner rows stay weakly decreasing");
        SkewDiagram { outer, inner }
    }

    /// All basic (no empty row or column) skew diagrams with `t` cells,
    /// deduplicated, straight shapes included.
    pub fn all_basic(t: usize) -> Vec<SkewDiagram> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for outer_size in t..=t * t {
            for outer in Partition::all(outer_size) {
                if outer.len() > t || outer.row_len(1) > t {
                    continue;
                }
                for inner in Partition::all(outer_size - t) {
                    if !outer.contains(&inner) {
                        continue;
                    }
                    let d = SkewDiagram {
                        outer: outer.clone(),
                        inner,
                    };
                    let n = d.normalized();
                    if n == d && seen.insert(n.clone()) {
                        out.push(n);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Partition> for SkewDiagram {
    fn from(p: Partition) -> Self {
        SkewDiagram::straight(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cells_in_scan_order() {
        let d = SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap();
        assert_eq!(d.cells(), vec![(1, 2), (2, 1), (2, 2)]);
        assert_eq!(d.num_cells(), 3);
        assert_eq!(d.row_lengths(), vec![1, 2]);
    }

    #[test]
    fn antidiagonal_cells() {
        let d = SkewDiagram::antidiagonal(3);
        assert_eq!(d.cells(), vec![(1, 3), (2, 2), (3, 1)]);
    }

    #[test]
    fn scan_index_roundtrip() {
        let d = SkewDiagram::new(p(&[3, 2, 2]), p(&[1, 1])).unwrap();
        for (idx, cell) in d.cells().into_iter().enumerate() {
            assert_eq!(d.scan_index(cell), Some(idx));
        }
        assert_eq!(d.scan_index((1, 1)), None);
    }

    #[test]
    fn containment_enforced() {
        assert!(SkewDiagram::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn normalization() {
        // (3,3)/(2,1) has an empty first column after shifting.
        let d = SkewDiagram::new(p(&[3, 3]), p(&[2, 1])).unwrap();
        let n = d.normalized();
        assert_eq!(n, SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap());
        assert_eq!(n.num_cells(), d.num_cells());
    }

    #[test]
    fn basic_counts_small() {
        assert_eq!(SkewDiagram::all_basic(1).len(), 1);
        assert_eq!(SkewDiagram::all_basic(2).len(), 3);
        // 3 straight + 5 proper skew shapes with 3 cells.
        let basic3 = SkewDiagram::all_basic(3);
        assert!(basic3.iter().filter(|d| d.is_straight()).count() == 3);
        for d in &basic3 {
            assert_eq!(d.normalized(), *d);
        }
    }
}
