//! Skew tableaux: flavors, weights, scans, the row-equivalence preorder,
//! canonical fillings, and enumeration.

use crate::error::{CoreError, Result};
use crate::skew::{Cell, SkewDiagram};
use std::cmp::Ordering;
use std::fmt;

/// A filling of a skew diagram by positive integers. Entries are stored in
/// scan order (row by row, left to right), parallel to `shape.cells()`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: SkewDiagram,
    entries: Vec<u32>,
}

/// Tableau flavors, in the row/column conventions used throughout:
/// `Ordered` is weakly increasing along rows and columns; `Semistandard`
/// weakly along rows, strictly down columns; `RowSemistandard` strictly
/// along rows, weakly down columns; `Standard` has entries `1..=t`,
/// strictly increasing both ways.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Ordered,
    Semistandard,
    RowSemistandard,
    Standard,
}

impl Flavor {
    pub fn parse(name: &str) -> Result<Flavor> {
        match name {
            "ordered" => Ok(Flavor::Ordered),
            "semistandard" => Ok(Flavor::Semistandard),
            "row_semistandard" => Ok(Flavor::RowSemistandard),
            "standard" => Ok(Flavor::Standard),
            other => Err(CoreError::Precondition(format!(
                "unknown tableau flavor {other:?}"
            ))),
        }
    }
}

impl Tableau {
    pub fn new(shape: SkewDiagram, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.num_cells() {
            return Err(CoreError::InvalidTableau(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.num_cells()
            )));
        }
        if entries.iter().any(|&e| e == 0) {
            return Err(CoreError::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { shape, entries })
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let outer = crate::partition::Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let entries = rows.concat();
        Tableau::new(SkewDiagram::straight(outer), entries)
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn num_cells(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        self.shape.scan_index(cell).map(|i| self.entries[i])
    }

    /// Entries read row by row from left to right and top to bottom.
    pub fn standard_scan(&self) -> &[u32] {
        &self.entries
    }

    /// Entry rows, one vector per (possibly empty) ambient row.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut it = self.entries.iter();
        for len in self.shape.row_lengths() {
            out.push(it.by_ref().take(len).copied().collect());
        }
        out
    }

    /// Occurrence counts of `1..=max_entry`; `max_entry` defaults to the
    /// largest entry present.
    pub fn weight(&self) -> Vec<usize> {
        let m = self.entries.iter().copied().max().unwrap_or(0) as usize;
        self.weight_padded(m)
    }

    pub fn weight_padded(&self, m: usize) -> Vec<usize> {
        let mut w = vec![0usize; m];
        for &e in &self.entries {
            let e = e as usize;
            if e <= m {
                w[e - 1] += 1;
            }
        }
        w
    }

    fn pairs_along_rows(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.shape.cells().into_iter().filter_map(move |(i, j)| {
            let right = self.entry((i, j + 1))?;
            Some((self.entry((i, j)).unwrap(), right))
        })
    }

    fn pairs_down_columns(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.shape.cells().into_iter().filter_map(move |(i, j)| {
            let below = self.entry((i + 1, j))?;
            Some((self.entry((i, j)).unwrap(), below))
        })
    }

    pub fn is_row_ordered(&self) -> bool {
        self.pairs_along_rows().all(|(a, b)| a <= b)
    }

    pub fn is_ordered(&self) -> bool {
        self.is_row_ordered() && self.pairs_down_columns().all(|(a, b)| a <= b)
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_row_ordered() && self.pairs_down_columns().all(|(a, b)| a < b)
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.pairs_along_rows().all(|(a, b)| a < b)
            && self.pairs_down_columns().all(|(a, b)| a <= b)
    }

    pub fn has_strictly_increasing_rows(&self) -> bool {
        self.pairs_along_rows().all(|(a, b)| a < b)
    }

    /// Entries are exactly `1..=t`.
    pub fn is_t_tableau(&self) -> bool {
        let t = self.num_cells();
        let mut seen = vec![false; t];
        for &e in &self.entries {
            let e = e as usize;
            if e > t || seen[e - 1] {
                return false;
            }
            seen[e - 1] = true;
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        self.is_t_tableau()
            && self.pairs_along_rows().all(|(a, b)| a < b)
            && self.pairs_down_columns().all(|(a, b)| a < b)
    }

    /// The row-ordered representative of the row-equivalence class: each
    /// row sorted ascending.
    pub fn row_sorted(&self) -> Tableau {
        let mut entries = Vec::with_capacity(self.entries.len());
        let mut it = self.entries.iter();
        for len in self.shape.row_lengths() {
            let mut row: Vec<u32> = it.by_ref().take(len).copied().collect();
            row.sort_unstable();
            entries.extend(row);
        }
        Tableau {
            shape: self.shape.clone(),
            entries,
        }
    }

    pub fn is_row_equivalent(&self, other: &Tableau) -> bool {
        self.shape == other.shape && self.row_sorted().entries == other.row_sorted().entries
    }

    /// Applies an entry relabeling `e -> perm(e)`; entries must be in the
    /// permutation's domain.
    pub fn relabel(&self, perm: &crate::perm::Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&e| perm.apply(e)).collect(),
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.shape, self.rows())
    }
}

impl serde::Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        // Rows over the ambient outer shape, null on inner cells.
        let mut rows: Vec<Vec<Option<u32>>> = Vec::new();
        for i in 1..=self.shape.num_rows() {
            let mut row = Vec::with_capacity(self.shape.outer().row_len(i));
            for j in 1..=self.shape.outer().row_len(i) {
                row.push(self.entry((i, j)));
            }
            rows.push(row);
        }
        let mut map = ser.serialize_map(Some(2))?;
        map.serialize_entry("shape", &self.shape)?;
        map.serialize_entry("rows", &rows)?;
        map.end()
    }
}

/// The canonical tableaux `T_E` (entries `1..=t` in scan order, standard)
/// and `S_E` (each cell labelled by its ambient row index, semi-standard).
pub fn canonical_tableaux(shape: &SkewDiagram) -> (Tableau, Tableau) {
    let cells = shape.cells();
    let t_e = Tableau {
        shape: shape.clone(),
        entries: (1..=cells.len() as u32).collect(),
    };
    let s_e = Tableau {
        shape: shape.clone(),
        entries: cells.iter().map(|&(i, _)| i as u32).collect(),
    };
    (t_e, s_e)
}

/// Compares two tableaux of the same shape in the scan preorder: the
/// row-ordered representatives are compared lexicographically by standard
/// scan. `Equal` means row equivalent.
pub fn preorder_cmp(s: &Tableau, t: &Tableau) -> Result<Ordering> {
    if s.shape() != t.shape() {
        return Err(CoreError::ShapeMismatch(format!(
            "preorder needs equal shapes, got {} and {}",
            s.shape(),
            t.shape()
        )));
    }
    Ok(s.row_sorted().entries.cmp(&t.row_sorted().entries))
}

pub fn preorder_le(s: &Tableau, t: &Tableau) -> Result<bool> {
    Ok(preorder_cmp(s, t)? != Ordering::Greater)
}

/// Enumerates the tableaux of the given shape and flavor with entries
/// `<= max_entry`, optionally filtered to a fixed weight, in
/// scan-lexicographic order. For `Standard` the entries are forced to
/// `1..=t` regardless of `max_entry`.
pub fn enumerate_tableaux(
    shape: &SkewDiagram,
    flavor: Flavor,
    weight: Option<&[usize]>,
    max_entry: usize,
) -> Vec<Tableau> {
    let cells = shape.cells();
    let t = cells.len();
    let max_entry = if flavor == Flavor::Standard { t } else { max_entry };
    if let Some(w) = weight {
        if w.iter().sum::<usize>() != t {
            return Vec::new();
        }
    }
    // Index of the neighbours that constrain each cell, if present.
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|&(i, j)| (j > 1).then(|| shape.scan_index((i, j - 1))).flatten())
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|&(i, j)| (i > 1).then(|| shape.scan_index((i - 1, j))).flatten())
        .collect();
    let (row_weak, col_weak) = match flavor {
        Flavor::Ordered => (true, true),
        Flavor::Semistandard => (true, false),
        Flavor::RowSemistandard => (false, true),
        Flavor::Standard => (false, false),
    };

    let mut out = Vec::new();
    let mut entries: Vec<u32> = Vec::with_capacity(t);
    let mut used = vec![0usize; max_entry + 1];
    let mut remaining_weight: Vec<usize> = match weight {
        Some(w) => {
            let mut w = w.to_vec();
            w.resize(max_entry.max(w.len()), 0);
            w
        }
        None => vec![t; max_entry],
    };

    fn rec(
        idx: usize,
        t: usize,
        max_entry: usize,
        flavor: Flavor,
        row_weak: bool,
        col_weak: bool,
        left: &[Option<usize>],
        up: &[Option<usize>],
        entries: &mut Vec<u32>,
        used: &mut Vec<usize>,
        remaining_weight: &mut Vec<usize>,
        shape: &SkewDiagram,
        out: &mut Vec<Tableau>,
    ) {
        if idx == t {
            out.push(Tableau {
                shape: shape.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let mut lo = 1u32;
        if let Some(k) = left[idx] {
            lo = lo.max(entries[k] + if row_weak { 0 } else { 1 });
        }
        if let Some(k) = up[idx] {
            lo = lo.max(entries[k] + if col_weak { 0 } else { 1 });
        }
        for e in lo..=max_entry as u32 {
            let ei = e as usize;
            if remaining_weight[ei - 1] == 0 {
                continue;
            }
            if flavor == Flavor::Standard && used[ei] > 0 {
                continue;
            }
            entries.push(e);
            used[ei] += 1;
            remaining_weight[ei - 1] -= 1;
            rec(
                idx + 1,
                t,
                max_entry,
                flavor,
                row_weak,
                col_weak,
                left,
                up,
                entries,
                used,
                remaining_weight,
                shape,
                out,
            );
            entries.pop();
            used[ei] -= 1;
            remaining_weight[ei - 1] += 1;
        }
    }

    if max_entry > 0 {
        rec(
            0,
            t,
            max_entry,
            flavor,
            row_weak,
            col_weak,
            &left,
            &up,
            &mut entries,
            &mut used,
            &mut remaining_weight,
            shape,
            &mut out,
        );
    } else if t == 0 {
        out.push(Tableau {
            shape: shape.clone(),
            entries: Vec::new(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn straight(parts: &[usize]) -> SkewDiagram {
        SkewDiagram::straight(p(parts))
    }

    #[test]
    fn canonical_straight() {
        let (t_e, s_e) = canonical_tableaux(&straight(&[2, 1]));
        assert_eq!(t_e.rows(), vec![vec![1, 2], vec![3]]);
        assert_eq!(s_e.rows(), vec![vec![1, 1], vec![2]]);
        assert!(t_e.is_standard());
        assert!(s_e.is_semistandard());
        assert_eq!(s_e.weight(), vec![2, 1]);
    }

    #[test]
    fn canonical_skew() {
        let d = SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap();
        let (t_e, _) = canonical_tableaux(&d);
        assert_eq!(t_e.entry((1, 2)), Some(1));
        assert_eq!(t_e.entry((2, 1)), Some(2));
        assert_eq!(t_e.entry((2, 2)), Some(3));

        let (_, s_d) = canonical_tableaux(&SkewDiagram::antidiagonal(2));
        assert_eq!(s_d.entry((1, 2)), Some(1));
        assert_eq!(s_d.entry((2, 1)), Some(2));
    }

    #[test]
    fn scans() {
        let t = Tableau::from_rows(&[&[1, 2], &[3]]).unwrap();
        assert_eq!(t.standard_scan(), &[1, 2, 3]);
        let t = Tableau::from_rows(&[&[2, 2], &[1]]).unwrap();
        assert_eq!(t.standard_scan(), &[2, 2, 1]);
        let empty = Tableau::from_rows(&[]).unwrap();
        assert_eq!(empty.standard_scan(), &[] as &[u32]);
    }

    #[test]
    fn preorder_row_equivalence() {
        let s = Tableau::from_rows(&[&[2, 1], &[3]]).unwrap();
        let t = Tableau::from_rows(&[&[1, 2], &[3]]).unwrap();
        assert_eq!(preorder_cmp(&s, &t).unwrap(), Ordering::Equal);
        let u = Tableau::from_rows(&[&[1, 3], &[2]]).unwrap();
        assert_eq!(preorder_cmp(&t, &u).unwrap(), Ordering::Less);
        assert!(preorder_le(&t, &u).unwrap());
        assert!(!preorder_le(&u, &t).unwrap());
    }

    #[test]
    fn preorder_shape_mismatch() {
        let s = Tableau::from_rows(&[&[1, 2]]).unwrap();
        let t = Tableau::from_rows(&[&[1], &[2]]).unwrap();
        assert!(preorder_cmp(&s, &t).is_err());
    }

    #[test]
    fn enumerate_semistandard() {
        let ts = enumerate_tableaux(&straight(&[2, 1]), Flavor::Semistandard, None, 2);
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), vec![vec![1, 1], vec![2]]);
        assert_eq!(ts[1].rows(), vec![vec![1, 2], vec![2]]);
    }

    #[test]
    fn enumerate_column_pairs() {
        // Shape (1,1), row semi-standard: columns weakly increasing.
        for m in 1..=5 {
            let ts = enumerate_tableaux(&straight(&[1, 1]), Flavor::RowSemistandard, None, m);
            assert_eq!(ts.len(), m * (m + 1) / 2);
        }
    }

    #[test]
    fn enumerate_standard_counts() {
        // Hook length values f^(2,1) = 2, f^(3,2) = 5, f^(2,2,1) = 5.
        assert_eq!(
            enumerate_tableaux(&straight(&[2, 1]), Flavor::Standard, None, 0).len(),
            2
        );
        assert_eq!(
            enumerate_tableaux(&straight(&[3, 2]), Flavor::Standard, None, 0).len(),
            5
        );
        assert_eq!(
            enumerate_tableaux(&straight(&[2, 2, 1]), Flavor::Standard, None, 0).len(),
            5
        );
    }

    #[test]
    fn enumerate_with_weight() {
        let ts = enumerate_tableaux(&straight(&[2, 1]), Flavor::Semistandard, Some(&[1, 1, 1]), 3);
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert_eq!(t.weight(), vec![1, 1, 1]);
        }
    }

    #[test]
    fn enumerate_is_scan_lexicographic_and_deduplicated() {
        let ts = enumerate_tableaux(&straight(&[2, 2]), Flavor::Ordered, None, 3);
        for w in ts.windows(2) {
            assert!(w[0].standard_scan() < w[1].standard_scan());
        }
    }

    #[test]
    fn skew_flavors() {
        // Antidiagonal: no row or column constraints at all.
        let d = SkewDiagram::antidiagonal(2);
        assert_eq!(
            enumerate_tableaux(&d, Flavor::Semistandard, None, 2).len(),
            4
        );
    }

    #[test]
    fn empty_tableau_everywhere() {
        let d = straight(&[]);
        let ts = enumerate_tableaux(&d, Flavor::Semistandard, None, 3);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].is_standard());
        assert_eq!(ts[0].weight(), Vec::<usize>::new());
    }
}
