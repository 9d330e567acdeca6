//! The rational group algebra of the symmetric group, Young symmetrizers,
//! tabloids and polytabloids, hom-space bases between skew Specht modules,
//! and polytabloid bases of Young-subgroup coinvariants.

use crate::config::MAX_GROUP_T;
use crate::error::{CoreError, Result};
use crate::linalg::{SparseEliminator, SparseVec};
use crate::partition::Partition;
use crate::perm::{block_stabilizer, symmetric_group, Permutation};
use crate::pictures::{
    enumerate_admissible, representative_standard_tableau, DiagramMapping,
};
use crate::skew::SkewDiagram;
use crate::tableau::{canonical_tableaux, enumerate_tableaux, Flavor, Tableau};
use num::{BigRational, One, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::collections::BTreeMap;

/// A sparse rational element of the group algebra of `Sym_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    t: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(t: usize) -> Self {
        GroupAlgebraElement {
            t,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_perm(p: Permutation, coeff: BigRational) -> Self {
        let t = p.degree();
        let mut e = Self::zero(t);
        e.add_term(p, coeff);
        e
    }

    pub fn one(t: usize) -> Self {
        Self::from_perm(Permutation::identity(t), BigRational::one())
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Permutation, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> GroupAlgebraElement {
        if c.is_zero() {
            return Self::zero(self.t);
        }
        GroupAlgebraElement {
            t: self.t,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Convolution product, the bilinear extension of composition.
    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = Self::zero(self.t);
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(p.compose(q), c * d);
            }
        }
        out
    }

    /// The star anti-involution `sum c_g g -> sum c_g g^-1`.
    pub fn star(&self) -> GroupAlgebraElement {
        let mut out = Self::zero(self.t);
        for (p, c) in &self.terms {
            out.add_term(p.inverse(), c.clone());
        }
        out
    }

    pub fn sparse_vec(&self) -> SparseVec<Permutation> {
        self.terms.clone()
    }
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            perm: Vec<u32>,
            coeff: String,
        }
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (p, c) in &self.terms {
            seq.serialize_element(&Term {
                perm: p.images().to_vec(),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

fn check_group_bound(t: usize) -> Result<()> {
    if t > MAX_GROUP_T {
        return Err(CoreError::TooLarge(format!(
            "group algebra rank {t} exceeds the bound {MAX_GROUP_T}"
        )));
    }
    Ok(())
}

/// Value blocks of `T_E` along rows and along columns.
fn row_col_blocks(shape: &SkewDiagram) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let (t_e, _) = canonical_tableaux(shape);
    let mut rows: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for cell in shape.cells() {
        let v = t_e.entry(cell).unwrap();
        rows.entry(cell.0).or_default().push(v);
        cols.entry(cell.1).or_default().push(v);
    }
    (rows.into_values().collect(), cols.into_values().collect())
}

/// Row stabilizer and column stabilizer of `T_E` as value permutations.
pub fn stabilizers(shape: &SkewDiagram) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    let t = shape.num_cells();
    check_group_bound(t)?;
    let (rows, cols) = row_col_blocks(shape);
    Ok((block_stabilizer(t, &rows), block_stabilizer(t, &cols)))
}

/// The column anti-symmetrizer `e_1` and the row symmetrizer `e_2` of the
/// canonical tableau `T_E`. The Young symmetrizer is `e = e_1 e_2`.
pub fn young_symmetrizers(
    shape: &SkewDiagram,
) -> Result<(GroupAlgebraElement, GroupAlgebraElement)> {
    let t = shape.num_cells();
    let (row_stab, col_stab) = stabilizers(shape)?;
    let mut e1 = GroupAlgebraElement::zero(t);
    for g in col_stab {
        let sign = BigRational::from_integer(g.sign().into());
        e1.add_term(g, sign);
    }
    let mut e2 = GroupAlgebraElement::zero(t);
    for g in row_stab {
        e2.add_term(g, BigRational::one());
    }
    Ok((e1, e2))
}

pub fn young_symmetrizer(shape: &SkewDiagram) -> Result<GroupAlgebraElement> {
    let (e1, e2) = young_symmetrizers(shape)?;
    Ok(e1.mul(&e2))
}

/// A sparse rational vector over tabloids of a fixed shape; keys are the
/// row-sorted representatives, compared by standard scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TabloidVector {
    shape: SkewDiagram,
    terms: BTreeMap<Tableau, BigRational>,
}

impl TabloidVector {
    pub fn zero(shape: SkewDiagram) -> Self {
        TabloidVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn terms(&self) -> &BTreeMap<Tableau, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tabloid: Tableau, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let key = tabloid.row_sorted();
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &TabloidVector) -> TabloidVector {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TabloidVector {
        if c.is_zero() {
            return Self::zero(self.shape.clone());
        }
        TabloidVector {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Left action of `Sym_t`: `g . {T} = {g . T}` relabels entries.
    pub fn act(&self, g: &Permutation) -> TabloidVector {
        let mut out = Self::zero(self.shape.clone());
        for (k, c) in &self.terms {
            out.add_term(k.relabel(g), c.clone());
        }
        out
    }

    pub fn sparse_vec(&self) -> SparseVec<Tableau> {
        self.terms.clone()
    }
}

/// Cell permutations within the column blocks of a shape, as scan-index
/// maps with signs.
pub(crate) fn column_cell_permutations(shape: &SkewDiagram) -> Vec<(Vec<usize>, i64)> {
    let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (idx, cell) in shape.cells().into_iter().enumerate() {
        cols.entry(cell.1).or_default().push(idx);
    }
    let t = shape.num_cells();
    let blocks: Vec<Vec<u32>> = cols
        .into_values()
        .map(|b| b.into_iter().map(|i| i as u32 + 1).collect())
        .collect();
    block_stabilizer(t, &blocks)
        .into_iter()
        .map(|p| {
            let map: Vec<usize> = (1..=t as u32).map(|k| p.apply(k) as usize - 1).collect();
            let sign = p.sign();
            (map, sign)
        })
        .collect()
}

/// The polytabloid `[T] = sum over the column stabilizer of the shape of
/// `sgn(pi) {T . pi}`.
pub fn polytabloid(t: &Tableau) -> Result<TabloidVector> {
    if !t.is_t_tableau() {
        return Err(CoreError::InvalidTableau(format!(
            "polytabloid needs entries 1..={}, got {t:?}",
            t.num_cells()
        )));
    }
    check_group_bound(t.num_cells())?;
    let mut out = TabloidVector::zero(t.shape().clone());
    let scan = t.standard_scan();
    for (map, sign) in column_cell_permutations(t.shape()) {
        let entries: Vec<u32> = map.iter().map(|&from| scan[from]).collect();
        let moved = Tableau::new(t.shape().clone(), entries)?;
        out.add_term(moved, BigRational::from_integer(sign.into()));
    }
    Ok(out)
}

/// Standard polytabloids, the basis of the (skew) Specht module.
pub fn specht_basis(shape: &SkewDiagram) -> Result<Vec<TabloidVector>> {
    check_group_bound(shape.num_cells())?;
    enumerate_tableaux(shape, Flavor::Standard, None, 0)
        .iter()
        .map(polytabloid)
        .collect()
}

/// Number of standard tableaux of the shape.
pub fn specht_dim(shape: &SkewDiagram) -> usize {
    enumerate_tableaux(shape, Flavor::Standard, None, 0).len()
}

/// The value permutation `g` with `T = g . T_F`.
pub fn tableau_permutation(t: &Tableau) -> Result<Permutation> {
    if !t.is_t_tableau() {
        return Err(CoreError::InvalidTableau(format!(
            "not a t-tableau: {t:?}"
        )));
    }
    Permutation::from_images(t.standard_scan().to_vec())
}

/// Coordinate data for hom-space computations between the Specht modules
/// of `E` and `F`: vectors `e* g f` expanded in the tabloid basis of
/// `e_2 A f_2`.
pub struct HomSpace {
    source: SkewDiagram,
    /// value -> ambient row of that value in `T_E`
    row_of_value: Vec<u32>,
    col_stab_e: Vec<(Permutation, i64)>,
    col_stab_f: Vec<(Permutation, i64)>,
}

impl HomSpace {
    /// `target = E`, `source = F`; elements of `e* A f` are labelled by
    /// diagram mappings `F -> E`.
    pub fn new(target: &SkewDiagram, source: &SkewDiagram) -> Result<Self> {
        let t = target.num_cells();
        if t != source.num_cells() {
            return Err(CoreError::SizeMismatch(format!(
                "|{target}| != |{source}|"
            )));
        }
        check_group_bound(t)?;
        let (_, col_e) = stabilizers(target)?;
        let (_, col_f) = stabilizers(source)?;
        let (t_e, _) = canonical_tableaux(target);
        let mut row_of_value = vec![0u32; t + 1];
        for cell in target.cells() {
            row_of_value[t_e.entry(cell).unwrap() as usize] = cell.0 as u32;
        }
        Ok(HomSpace {
            source: source.clone(),
            row_of_value,
            col_stab_e: col_e.into_iter().map(|p| (p.clone(), p.sign())).collect(),
            col_stab_f: col_f.into_iter().map(|p| (p.clone(), p.sign())).collect(),
        })
    }

    pub fn t(&self) -> usize {
        self.source.num_cells()
    }

    /// Coordinates of `e* g f` in the tabloid basis of `e_2 A f_2`: keys
    /// are row-sorted weight-tableaux of shape `F`.
    pub fn element_coords(&self, g: &Permutation) -> SparseVec<Tableau> {
        let t = self.t();
        let mut acc: BTreeMap<Tableau, i64> = BTreeMap::new();
        for (pi, sg_pi) in &self.col_stab_e {
            let pig = pi.compose(g);
            for (sigma, sg_sigma) in &self.col_stab_f {
                let h = pig.compose(sigma);
                let entries: Vec<u32> = (1..=t as u32)
                    .map(|k| self.row_of_value[h.apply(k) as usize])
                    .collect();
                let key = Tableau::new(self.source.clone(), entries)
                    .expect("one entry per source cell")
                    .row_sorted();
                let c = acc.entry(key).or_insert(0);
                *c += sg_pi * sg_sigma;
            }
        }
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(k, c)| (k, BigRational::from_integer(c.into())))
            .collect()
    }

    /// Exact rank of `{e* g f : g in Sym_t}`, deduplicating `g` over
    /// double cosets of the column stabilizers (which change the element
    /// only by a sign).
    pub fn full_rank(&self) -> usize {
        let t = self.t();
        let group = symmetric_group(t);
        let index: BTreeMap<&[u32], usize> = group
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images(), i))
            .collect();
        let mut visited = vec![false; group.len()];
        let mut elim: SparseEliminator<Tableau> = SparseEliminator::new();
        for (gi, g) in group.iter().enumerate() {
            if visited[gi] {
                continue;
            }
            for (pi, _) in &self.col_stab_e {
                let pig = pi.compose(g);
                for (sigma, _) in &self.col_stab_f {
                    let h = pig.compose(sigma);
                    visited[index[h.images()]] = true;
                }
            }
            elim.insert(self.element_coords(g));
        }
        elim.rank()
    }
}

/// The hom-space basis elements `e*[T] = e_2 e_1 g_T f_1 f_2`, one per
/// admissible semi-standard tableau of shape `F` and weight the row
/// lengths of `E`, with `T` the standard representative.
pub fn homspace_basis(
    target: &SkewDiagram,
    source: &SkewDiagram,
) -> Result<Vec<GroupAlgebraElement>> {
    let reps = homspace_representatives(target, source)?;
    let (e1, e2) = young_symmetrizers(target)?;
    let (f1, f2) = young_symmetrizers(source)?;
    let e_star_left = e2.mul(&e1);
    reps.into_iter()
        .map(|(_, _, rep)| {
            let g = tableau_permutation(&rep)?;
            Ok(e_star_left
                .mul(&GroupAlgebraElement::from_perm(g, BigRational::one()))
                .mul(&f1)
                .mul(&f2))
        })
        .collect()
}

/// The labelled data behind [`homspace_basis`]: admissible tableau, its
/// picture, and the standard representative tableau.
pub fn homspace_representatives(
    target: &SkewDiagram,
    source: &SkewDiagram,
) -> Result<Vec<(Tableau, DiagramMapping, Tableau)>> {
    enumerate_admissible(source, target)?
        .into_iter()
        .map(|(s, alpha)| {
            let rep = representative_standard_tableau(&s, target)?;
            Ok((s, alpha, rep))
        })
        .collect()
}

/// Exact rank of a family of group algebra elements.
pub fn group_algebra_rank(elements: &[GroupAlgebraElement]) -> usize {
    let mut elim: SparseEliminator<Permutation> = SparseEliminator::new();
    for e in elements {
        elim.insert(e.sparse_vec());
    }
    elim.rank()
}

/// Left ideal rank: dimension of `A a` as a subspace of the group algebra.
pub fn left_ideal_rank(a: &GroupAlgebraElement) -> usize {
    let mut elim: SparseEliminator<Permutation> = SparseEliminator::new();
    for g in symmetric_group(a.t()) {
        elim.insert(
            GroupAlgebraElement::from_perm(g, BigRational::one())
                .mul(a)
                .sparse_vec(),
        );
    }
    elim.rank()
}

/// The consecutive blocks `Lambda_i` of the Young subgroup `Sym_nu`.
pub fn young_subgroup_blocks(nu: &[usize]) -> Vec<Vec<u32>> {
    let mut blocks = Vec::with_capacity(nu.len());
    let mut next = 1u32;
    for &n in nu {
        blocks.push((next..next + n as u32).collect());
        next += n as u32;
    }
    blocks
}

/// Adjacent transpositions generating `Sym_nu`.
pub fn young_subgroup_generators(t: usize, nu: &[usize]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    for block in young_subgroup_blocks(nu) {
        for w in block.windows(2) {
            gens.push(Permutation::transposition(t, w[0], w[1]));
        }
    }
    gens
}

type PairKey = (Tableau, Tableau);

fn pair_vec(a: &TabloidVector, b: &TabloidVector) -> SparseVec<PairKey> {
    let mut out: SparseVec<PairKey> = BTreeMap::new();
    for (k1, c1) in a.terms() {
        for (k2, c2) in b.terms() {
            out.insert((k1.clone(), k2.clone()), c1 * c2);
        }
    }
    out
}

fn sub_vecs<K: Ord + Clone>(a: &SparseVec<K>, b: &SparseVec<K>) -> SparseVec<K> {
    let mut out = a.clone();
    for (k, c) in b {
        match out.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() - c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }
    out
}

/// Eliminator loaded with the augmentation subspace
/// `span{x - g.x : x basis of Ae x Af, g generators of Sym_nu}`.
fn coinvariant_relations(
    e_basis: &[TabloidVector],
    f_basis: &[TabloidVector],
    gens: &[Permutation],
) -> SparseEliminator<PairKey> {
    let mut elim: SparseEliminator<PairKey> = SparseEliminator::new();
    for a in e_basis {
        for b in f_basis {
            let x = pair_vec(a, b);
            for g in gens {
                let gx = pair_vec(&a.act(g), &b.act(g));
                elim.insert(sub_vecs(&x, &gx));
            }
        }
    }
    elim
}

/// Exact dimension of the coinvariant space `(Ae x Af)_{Sym_nu}` for
/// straight shapes, by rank in the quotient.
pub fn coinvariant_quotient_dim(e: &Partition, f: &Partition, nu: &[usize]) -> Result<usize> {
    let t = e.size();
    if f.size() != t || nu.iter().sum::<usize>() != t {
        return Err(CoreError::SizeMismatch(format!(
            "|{e}|, |{f}| and sum(nu) must agree"
        )));
    }
    check_group_bound(t)?;
    let e_basis = specht_basis(&SkewDiagram::straight(e.clone()))?;
    let f_basis = specht_basis(&SkewDiagram::straight(f.clone()))?;
    let gens = young_subgroup_generators(t, nu);
    let relations = coinvariant_relations(&e_basis, &f_basis, &gens);
    Ok(e_basis.len() * f_basis.len() - relations.rank())
}

/// The index pairs `(T_P, T)` of the coinvariant basis: for each pair
/// `(P, Q)` of ordered tableaux of shapes `E`, `F` and weight `nu`, each
/// tuple of admissible semi-standard tableaux with shapes determined by
/// `Q` and weights determined by `P` contributes the tableau `T` glued
/// from the pieces `T_{P^-1(i), Lambda_i} . alpha_i`.
pub fn coinvariants_basis(
    e: &Partition,
    f: &Partition,
    nu: &[usize],
) -> Result<Vec<(Tableau, Tableau)>> {
    let t = e.size();
    if f.size() != t || nu.iter().sum::<usize>() != t {
        return Err(CoreError::SizeMismatch(format!(
            "|{e}|, |{f}| and sum(nu) must agree"
        )));
    }
    check_group_bound(t)?;
    let m = nu.len();
    let blocks = young_subgroup_blocks(nu);
    let e_shape = SkewDiagram::straight(e.clone());
    let f_shape = SkewDiagram::straight(f.clone());
    let omega_e = enumerate_tableaux(&e_shape, Flavor::Ordered, Some(nu), m.max(1));
    let omega_f = enumerate_tableaux(&f_shape, Flavor::Ordered, Some(nu), m.max(1));
    let mut out = Vec::new();
    for p_tab in &omega_e {
        let e_pieces = layer_diagrams(p_tab, m)?;
        let t_p = glued_canonical(&e_shape, &e_pieces, &blocks)?;
        for q_tab in &omega_f {
            let f_pieces = layer_diagrams(q_tab, m)?;
            // Admissible tuples per layer.
            let mut per_layer: Vec<Vec<DiagramMapping>> = Vec::with_capacity(m);
            for i in 0..m {
                let choices = enumerate_admissible(&f_pieces[i], &e_pieces[i])?
                    .into_iter()
                    .map(|(_, alpha)| alpha)
                    .collect::<Vec<_>>();
                per_layer.push(choices);
            }
            if per_layer.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut stack = vec![0usize; m];
            loop {
                let tuple: Vec<&DiagramMapping> =
                    stack.iter().enumerate().map(|(i, &k)| &per_layer[i][k]).collect();
                out.push((t_p.clone(), glue_tableau(&f_shape, &e_pieces, &tuple, &blocks)?));
                // Advance the mixed-radix counter.
                let mut pos = m;
                while pos > 0 {
                    pos -= 1;
                    stack[pos] += 1;
                    if stack[pos] < per_layer[pos].len() {
                        break;
                    }
                    stack[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX || m == 0 {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The layer diagrams `P^-1(i)` of an ordered tableau, as skew diagrams.
pub fn layer_diagrams(p: &Tableau, m: usize) -> Result<Vec<SkewDiagram>> {
    let shape = p.shape();
    let mut prev = shape.inner().clone();
    let mut out = Vec::with_capacity(m);
    for i in 1..=m {
        let rows = shape.num_rows().max(prev.len());
        let mut parts = Vec::with_capacity(rows);
        for row in 1..=rows {
            let mut len = prev.row_len(row);
            // Cells of this row with entry <= i extend the previous layer.
            for j in shape.inner().row_len(row) + 1..=shape.outer().row_len(row) {
                if p.entry((row, j)).map(|v| v as usize <= i).unwrap_or(false) {
                    len = len.max(j);
                }
            }
            parts.push(len);
        }
        let outer = Partition::new(parts).map_err(|_| {
            CoreError::InvalidTableau(format!("{p:?} is not an ordered layer tableau"))
        })?;
        out.push(SkewDiagram::new(outer.clone(), prev)?);
        prev = outer;
    }
    Ok(out)
}

/// `T_P`: fill block `Lambda_i` into the layer `P^-1(i)` in scan order.
fn glued_canonical(
    shape: &SkewDiagram,
    layers: &[SkewDiagram],
    blocks: &[Vec<u32>],
) -> Result<Tableau> {
    let mut entries = vec![0u32; shape.num_cells()];
    for (layer, block) in layers.iter().zip(blocks) {
        for (cell, &value) in layer.cells().into_iter().zip(block) {
            entries[shape.scan_index(cell).unwrap()] = value;
        }
    }
    Tableau::new(shape.clone(), entries)
}

/// Glues `T` from per-layer pictures: on `Q^-1(i)` the entry at `x` is
/// the entry of `T_{P^-1(i), Lambda_i}` at `alpha_i(x)`.
fn glue_tableau(
    f_shape: &SkewDiagram,
    e_layers: &[SkewDiagram],
    tuple: &[&DiagramMapping],
    blocks: &[Vec<u32>],
) -> Result<Tableau> {
    let mut entries = vec![0u32; f_shape.num_cells()];
    for (i, alpha) in tuple.iter().enumerate() {
        let layer_cells = e_layers[i].cells();
        for cell in alpha.source().cells() {
            let image = alpha.apply(cell).unwrap();
            let pos_in_layer = layer_cells.iter().position(|&c| c == image).unwrap();
            entries[f_shape.scan_index(cell).unwrap()] = blocks[i][pos_in_layer];
        }
    }
    Tableau::new(f_shape.clone(), entries)
}

/// Verifies that the canonical images of the `[T_P] x [T]` pairs form a
/// basis of the coinvariant space: the count matches the quotient
/// dimension and the pairs stay independent modulo the relations.
pub fn coinvariants_verify(e: &Partition, f: &Partition, nu: &[usize]) -> Result<bool> {
    let t = e.size();
    let e_basis = specht_basis(&SkewDiagram::straight(e.clone()))?;
    let f_basis = specht_basis(&SkewDiagram::straight(f.clone()))?;
    let gens = young_subgroup_generators(t, nu);
    let mut elim = coinvariant_relations(&e_basis, &f_basis, &gens);
    let quotient_dim = e_basis.len() * f_basis.len() - elim.rank();
    let pairs = coinvariants_basis(e, f, nu)?;
    if pairs.len() != quotient_dim {
        return Ok(false);
    }
    for (t_p, t_tab) in &pairs {
        let v = pair_vec(&polytabloid(t_p)?, &polytabloid(t_tab)?);
        if !elim.insert(v) {
            return Ok(false);
        }
    }
    Ok(true)
}
