//! Diagram mappings between skew diagrams, admissibility (pictures), the
//! (b')-normalization, and enumeration of admissible semi-standard
//! tableaux with their unique pictures.

use crate::error::{CoreError, Result};
use crate::perm::Permutation;
use crate::skew::{Cell, SkewDiagram};
use crate::tableau::{canonical_tableaux, enumerate_tableaux, Flavor, Tableau};
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::cmp::Ordering;

/// A bijection between the cells of two skew diagrams, stored by images
/// in source scan order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DiagramMapping {
    source: SkewDiagram,
    target: SkewDiagram,
    images: Vec<Cell>,
}

impl DiagramMapping {
    pub fn new(source: SkewDiagram, target: SkewDiagram, images: Vec<Cell>) -> Result<Self> {
        if images.len() != source.num_cells() || source.num_cells() != target.num_cells() {
            return Err(CoreError::InvalidMapping(format!(
                "cell counts differ: |{source}| = {}, |{target}| = {}, {} images",
                source.num_cells(),
                target.num_cells(),
                images.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &c in &images {
            if !target.contains_cell(c) {
                return Err(CoreError::InvalidMapping(format!(
                    "image cell {c:?} outside {target}"
                )));
            }
            if !seen.insert(c) {
                return Err(CoreError::InvalidMapping(format!(
                    "image cell {c:?} repeated"
                )));
            }
        }
        Ok(DiagramMapping {
            source,
            target,
            images,
        })
    }

    pub fn identity(shape: &SkewDiagram) -> Self {
        DiagramMapping {
            source: shape.clone(),
            target: shape.clone(),
            images: shape.cells(),
        }
    }

    pub fn source(&self) -> &SkewDiagram {
        &self.source
    }

    pub fn target(&self) -> &SkewDiagram {
        &self.target
    }

    pub fn apply(&self, cell: Cell) -> Option<Cell> {
        self.source.scan_index(cell).map(|i| self.images[i])
    }

    /// Image cells in source scan order.
    pub fn images(&self) -> &[Cell] {
        &self.images
    }

    pub fn inverse(&self) -> DiagramMapping {
        let src_cells = self.source.cells();
        let mut pairs: Vec<(Cell, Cell)> = self
            .images
            .iter()
            .zip(&src_cells)
            .map(|(&img, &src)| (img, src))
            .collect();
        pairs.sort_by_key(|&(img, _)| self.target.scan_index(img).unwrap());
        DiagramMapping {
            source: self.target.clone(),
            target: self.source.clone(),
            images: pairs.into_iter().map(|(_, src)| src).collect(),
        }
    }

    /// The value permutation `g` with `alpha = T_E^-1 . g . T_F`.
    pub fn to_permutation(&self) -> Permutation {
        let (t_e, _) = canonical_tableaux(&self.target);
        let t = self.images.len();
        let mut images = vec![0u32; t];
        for (idx, &img) in self.images.iter().enumerate() {
            // T_F assigns idx+1 to the idx-th source cell.
            images[idx] = t_e.entry(img).unwrap();
        }
        Permutation::from_images(images).expect("bijection gives a permutation")
    }
}

impl Serialize for DiagramMapping {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.images.len()))?;
        for (src, img) in self.source.cells().iter().zip(&self.images) {
            seq.serialize_element(&[[src.0, src.1], [img.0, img.1]])?;
        }
        seq.end()
    }
}

/// `alpha_T = T_E^-1 . T` for a `t`-tableau `T` of shape `F`.
pub fn mapping_from_tableau(t: &Tableau, target: &SkewDiagram) -> Result<DiagramMapping> {
    if !t.is_t_tableau() {
        return Err(CoreError::InvalidTableau(format!(
            "entries of {t:?} are not a permutation of 1..={}",
            t.num_cells()
        )));
    }
    if t.num_cells() != target.num_cells() {
        return Err(CoreError::SizeMismatch(format!(
            "|{}| != |{target}|",
            t.shape()
        )));
    }
    let target_cells = target.cells();
    let images = t
        .standard_scan()
        .iter()
        .map(|&v| target_cells[v as usize - 1])
        .collect();
    DiagramMapping::new(t.shape().clone(), target.clone(), images)
}

/// `T_E . alpha`: the `t`-tableau of shape `F` reading off `T_E` through
/// the mapping. Round-trip inverse of [`mapping_from_tableau`].
pub fn tableau_from_mapping(alpha: &DiagramMapping) -> Tableau {
    let (t_e, _) = canonical_tableaux(&alpha.target);
    let entries = alpha
        .images
        .iter()
        .map(|&img| t_e.entry(img).unwrap())
        .collect();
    Tableau::new(alpha.source.clone(), entries).expect("image entries are a permutation")
}

/// `S_E . alpha`: the tableau of shape `F` whose entry at `x` is the
/// ambient row index of `alpha(x)` in `E`.
pub fn induced_row_tableau(alpha: &DiagramMapping) -> Tableau {
    let entries = alpha.images.iter().map(|&(i, _)| i as u32).collect();
    Tableau::new(alpha.source.clone(), entries).expect("one entry per cell")
}

/// The total order `(p,q) <= (r,s) iff p < r or (p = r and q >= s)`:
/// rows downward, columns right to left within a row.
fn scan_order_cmp(a: Cell, b: Cell) -> Ordering {
    a.0.cmp(&b.0).then(b.1.cmp(&a.1))
}

fn preceq(a: Cell, b: Cell) -> bool {
    scan_order_cmp(a, b) != Ordering::Greater
}

/// Componentwise partial order.
fn componentwise_le(a: Cell, b: Cell) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Admissibility via order preservation: `alpha: (F, <=) -> (E, preceq)`
/// and `alpha^-1: (E, <=) -> (F, preceq)` both order preserving.
pub fn is_admissible_order(alpha: &DiagramMapping) -> bool {
    let forward = |m: &DiagramMapping| {
        let cells = m.source.cells();
        cells.iter().all(|&a| {
            cells
                .iter()
                .filter(|&&b| componentwise_le(a, b))
                .all(|&b| preceq(m.apply(a).unwrap(), m.apply(b).unwrap()))
        })
    };
    forward(alpha) && forward(&alpha.inverse())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Wind {
    E,
    W,
    S,
    N,
    NE,
    NW,
    SE,
    SW,
}

/// Position of `a` relative to `b` for distinct cells.
fn wind(a: Cell, b: Cell) -> Wind {
    match (a.0.cmp(&b.0), a.1.cmp(&b.1)) {
        (Ordering::Equal, Ordering::Greater) => Wind::E,
        (Ordering::Equal, Ordering::Less) => Wind::W,
        (Ordering::Greater, Ordering::Equal) => Wind::S,
        (Ordering::Less, Ordering::Equal) => Wind::N,
        (Ordering::Less, Ordering::Greater) => Wind::NE,
        (Ordering::Less, Ordering::Less) => Wind::NW,
        (Ordering::Greater, Ordering::Greater) => Wind::SE,
        (Ordering::Greater, Ordering::Less) => Wind::SW,
        (Ordering::Equal, Ordering::Equal) => unreachable!("distinct cells"),
    }
}

fn wind_conditions_hold(m: &DiagramMapping) -> bool {
    let cells = m.source.cells();
    for &a in &cells {
        for &b in &cells {
            if a == b {
                continue;
            }
            let ia = m.apply(a).unwrap();
            let ib = m.apply(b).unwrap();
            let ok = match wind(a, b) {
                Wind::E => matches!(wind(ia, ib), Wind::W | Wind::SW),
                Wind::S => matches!(wind(ia, ib), Wind::SW | Wind::S),
                Wind::NE => matches!(
                    wind(ia, ib),
                    Wind::NE | Wind::N | Wind::NW | Wind::W | Wind::SW
                ),
                // (4) a(SE)b => alpha(a)(SW)alpha(b) follows from (1), (2).
                _ => true,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Admissibility via the wind-direction conditions (1)-(3), applied to
/// the mapping and to its inverse.
pub fn is_admissible_wind(alpha: &DiagramMapping) -> bool {
    wind_conditions_hold(alpha) && wind_conditions_hold(&alpha.inverse())
}

/// A diagram mapping is admissible (a picture) when both it and its
/// inverse are order preserving. The two implementations are independent;
/// this entry point uses the order-preservation form.
pub fn is_admissible(alpha: &DiagramMapping) -> bool {
    is_admissible_order(alpha)
}

/// Checks property (a): `S_E . alpha` is semi-standard.
pub fn satisfies_a(alpha: &DiagramMapping) -> bool {
    induced_row_tableau(alpha).is_semistandard()
}

/// Checks property (b): a target-column descent forces a strictly lower
/// source row.
pub fn satisfies_b(alpha: &DiagramMapping) -> bool {
    let cells = alpha.source.cells();
    for &a in &cells {
        for &b in &cells {
            if a == b {
                continue;
            }
            let ia = alpha.apply(a).unwrap();
            let ib = alpha.apply(b).unwrap();
            if ia.1 == ib.1 && ib.0 > ia.0 && b.0 <= a.0 {
                return false;
            }
        }
    }
    true
}

/// Checks property (b'): a target-column descent forces a strictly lower
/// source row in a weakly left column.
pub fn satisfies_bprime(alpha: &DiagramMapping) -> bool {
    let cells = alpha.source.cells();
    for &a in &cells {
        for &b in &cells {
            if a == b {
                continue;
            }
            let ia = alpha.apply(a).unwrap();
            let ib = alpha.apply(b).unwrap();
            if ia.1 == ib.1 && ib.0 > ia.0 && !(b.0 > a.0 && b.1 <= a.1) {
                return false;
            }
        }
    }
    true
}

/// Rewrites a mapping with properties (a), (b) into one with the same
/// induced row tableau satisfying (b'), by the iterative transposition of
/// the first offending cell in scan order.
pub fn normalize_to_bprime(alpha: &DiagramMapping) -> Result<DiagramMapping> {
    if !satisfies_a(alpha) {
        return Err(CoreError::Precondition(format!(
            "S_E . alpha not semi-standard for {alpha:?}"
        )));
    }
    if !satisfies_b(alpha) {
        return Err(CoreError::Precondition(format!(
            "property (b) fails for {alpha:?}"
        )));
    }
    let t = alpha.source.num_cells();
    let mut current = alpha.clone();
    let max_steps = t * t + t + 1;
    for _ in 0..max_steps {
        match first_offender(&current) {
            None => return Ok(current),
            Some((a, b)) => {
                // b = (i+1, j1) with j1 > j; swap its image with b1 = (i+1, j).
                let b1 = (a.0 + 1, a.1);
                let (Some(ib), Some(ib1)) = (current.apply(b), current.apply(b1)) else {
                    return Err(CoreError::Precondition(format!(
                        "cell {b1:?} missing while normalizing {alpha:?}"
                    )));
                };
                let idx_b = current.source.scan_index(b).unwrap();
                let idx_b1 = current.source.scan_index(b1).unwrap();
                let mut images = current.images.clone();
                images[idx_b] = ib1;
                images[idx_b1] = ib;
                current = DiagramMapping::new(
                    current.source.clone(),
                    current.target.clone(),
                    images,
                )?;
            }
        }
    }
    Err(CoreError::Precondition(format!(
        "normalization did not terminate within {max_steps} swaps"
    )))
}

/// First cell `a` in scan order with `alpha(a) = (r, s)`, `(r+1, s)` in
/// the target, and the preimage of `(r+1, s)` strictly right of `a`.
fn first_offender(m: &DiagramMapping) -> Option<(Cell, Cell)> {
    for a in m.source.cells() {
        let (r, s) = m.apply(a).unwrap();
        if !m.target.contains_cell((r + 1, s)) {
            continue;
        }
        let b = m.inverse().apply((r + 1, s)).unwrap();
        if b.1 > a.1 {
            return Some((a, b));
        }
    }
    None
}

/// All bijections between two equal-sized skew diagrams; exhaustive-search
/// helper for small shapes.
pub fn all_bijections(source: &SkewDiagram, target: &SkewDiagram) -> Vec<DiagramMapping> {
    if source.num_cells() != target.num_cells() {
        return Vec::new();
    }
    let target_cells = target.cells();
    crate::perm::symmetric_group(source.num_cells())
        .into_iter()
        .map(|p| {
            let images = (1..=source.num_cells() as u32)
                .map(|k| target_cells[p.apply(k) as usize - 1])
                .collect();
            DiagramMapping::new(source.clone(), target.clone(), images).unwrap()
        })
        .collect()
}

/// All admissible semi-standard tableaux of shape `F` and weight equal to
/// the row-length vector of `E`, each paired with its unique picture
/// `F -> E`. The candidate picture per tableau is forced: the preimage of
/// row `i` of `E` is `S^-1(i)` taken in the total order `preceq`.
pub fn enumerate_admissible(
    source: &SkewDiagram,
    target: &SkewDiagram,
) -> Result<Vec<(Tableau, DiagramMapping)>> {
    if source.num_cells() != target.num_cells() {
        return Err(CoreError::SizeMismatch(format!(
            "|{source}| != |{target}|"
        )));
    }
    let weight = target.row_lengths();
    let max_entry = target.num_rows();
    let mut out = Vec::new();
    if source.num_cells() == 0 {
        let s = Tableau::new(source.clone(), Vec::new())?;
        let alpha = DiagramMapping::new(source.clone(), target.clone(), Vec::new())?;
        out.push((s, alpha));
        return Ok(out);
    }
    for s in enumerate_tableaux(source, Flavor::Semistandard, Some(&weight), max_entry) {
        if let Some(alpha) = candidate_picture(&s, source, target) {
            if is_admissible(&alpha) {
                out.push((s, alpha));
            }
        }
    }
    Ok(out)
}

fn candidate_picture(
    s: &Tableau,
    source: &SkewDiagram,
    target: &SkewDiagram,
) -> Option<DiagramMapping> {
    let mut images = vec![(0usize, 0usize); source.num_cells()];
    let src_cells = source.cells();
    for i in 1..=target.num_rows() {
        let mut fiber: Vec<Cell> = src_cells
            .iter()
            .copied()
            .filter(|&c| s.entry(c) == Some(i as u32))
            .collect();
        fiber.sort_by(|&a, &b| scan_order_cmp(a, b));
        let row_cols = target.inner().row_len(i) + 1..=target.outer().row_len(i);
        if fiber.len() != row_cols.clone().count() {
            return None;
        }
        for (cell, j) in fiber.into_iter().zip(row_cols) {
            images[source.scan_index(cell).unwrap()] = (i, j);
        }
    }
    DiagramMapping::new(source.clone(), target.clone(), images).ok()
}

/// A standard `t`-tableau `T` of shape `F` with `S_E . alpha_T = S`,
/// smallest in scan order. Errors when `S` is not realizable.
pub fn representative_standard_tableau(s: &Tableau, target: &SkewDiagram) -> Result<Tableau> {
    let source = s.shape();
    for t in enumerate_tableaux(source, Flavor::Standard, None, 0) {
        let alpha = mapping_from_tableau(&t, target)?;
        if induced_row_tableau(&alpha) == *s {
            return Ok(t);
        }
    }
    Err(CoreError::InvalidTableau(format!(
        "no standard representative realizes {s:?} against {target}"
    )))
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
    fn mapping_from_canonical_tableau_is_identity() {
        let f = straight(&[2, 1]);
        let (t_f, _) = canonical_tableaux(&f);
        let alpha = mapping_from_tableau(&t_f, &f).unwrap();
        assert_eq!(alpha, DiagramMapping::identity(&f));
    }

    #[test]
    fn mapping_roundtrip() {
        let f = straight(&[2, 1]);
        let e = SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap();
        for t in enumerate_tableaux(&f, Flavor::Standard, None, 0) {
            let alpha = mapping_from_tableau(&t, &e).unwrap();
            assert_eq!(tableau_from_mapping(&alpha), t);
            assert_eq!(
                tableau_from_mapping(&alpha).standard_scan(),
                t.standard_scan()
            );
        }
    }

    #[test]
    fn explicit_two_cell_mapping() {
        let f = straight(&[2]);
        let e = straight(&[1, 1]);
        let t = Tableau::from_rows(&[&[2, 1]]).unwrap();
        let alpha = mapping_from_tableau(&t, &e).unwrap();
        assert_eq!(alpha.apply((1, 1)), Some((2, 1)));
        assert_eq!(alpha.apply((1, 2)), Some((1, 1)));
    }

    #[test]
    fn no_picture_between_column_and_row() {
        let f = straight(&[1, 1]);
        let e = straight(&[2]);
        for alpha in all_bijections(&f, &e) {
            assert!(!is_admissible(&alpha));
            assert!(!is_admissible_wind(&alpha));
        }
    }

    #[test]
    fn unique_picture_on_straight_shape_is_row_reversal() {
        for lam in [p(&[3]), p(&[2, 1]), p(&[3, 2]), p(&[1, 1, 1])] {
            let d = SkewDiagram::straight(lam.clone());
            let admissible: Vec<_> = all_bijections(&d, &d)
                .into_iter()
                .filter(is_admissible)
                .collect();
            assert_eq!(admissible.len(), 1, "{lam}");
            let alpha = &admissible[0];
            for (i, j) in d.cells() {
                assert_eq!(alpha.apply((i, j)), Some((i, lam.row_len(i) + 1 - j)));
            }
            // The identity is a picture exactly for column shapes.
            assert_eq!(
                is_admissible(&DiagramMapping::identity(&d)),
                lam.row_len(1) <= 1
            );
        }
    }

    #[test]
    fn admissibility_implementations_agree() {
        let shapes = [
            straight(&[2, 1]),
            straight(&[3]),
            straight(&[1, 1, 1]),
            SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap(),
            SkewDiagram::antidiagonal(3),
        ];
        for f in &shapes {
            for e in &shapes {
                if f.num_cells() != e.num_cells() {
                    continue;
                }
                for alpha in all_bijections(f, e) {
                    assert_eq!(
                        is_admissible_order(&alpha),
                        is_admissible_wind(&alpha),
                        "{alpha:?}"
                    );
                    // Admissibility is symmetric in the mapping and inverse.
                    assert_eq!(is_admissible(&alpha), is_admissible(&alpha.inverse()));
                }
            }
        }
    }

    #[test]
    fn enumerate_straight_pairs() {
        // Exactly one picture lambda -> lambda, none between distinct
        // straight shapes of the same size.
        for n in 1..=4 {
            for lam in Partition::all(n) {
                for mu in Partition::all(n) {
                    let count = enumerate_admissible(
                        &SkewDiagram::straight(mu.clone()),
                        &SkewDiagram::straight(lam.clone()),
                    )
                    .unwrap()
                    .len();
                    assert_eq!(count, usize::from(lam == mu), "{mu} -> {lam}");
                }
            }
        }
    }

    #[test]
    fn normalization_fixes_admissible_mappings() {
        let f = straight(&[2, 1]);
        let e = SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap();
        for (_, alpha) in enumerate_admissible(&f, &e).unwrap() {
            assert!(satisfies_bprime(&alpha));
            let normalized = normalize_to_bprime(&alpha).unwrap();
            assert_eq!(normalized, alpha);
        }
    }

    #[test]
    fn representative_roundtrip() {
        let lam = straight(&[2, 1]);
        let (_, s_lam) = canonical_tableaux(&lam);
        let (t_lam, _) = canonical_tableaux(&lam);
        let rep = representative_standard_tableau(&s_lam, &lam).unwrap();
        assert_eq!(rep, t_lam);
    }

    #[test]
    fn enumerate_skew_example() {
        let f = straight(&[2, 1]);
        let e = SkewDiagram::new(p(&[2, 2]), p(&[1])).unwrap();
        let found = enumerate_admissible(&f, &e).unwrap();
        for (s, alpha) in &found {
            assert!(s.is_semistandard());
            assert_eq!(&induced_row_tableau(alpha), s);
            assert!(is_admissible(alpha));
        }
        // The skew Specht module of (2,2)/(1) is irreducible of type (2,1),
        // so Hom against the (2,1) Specht module is one-dimensional.
        assert_eq!(found.len(), 1);
    }
}
