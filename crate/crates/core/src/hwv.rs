//! Explicit highest weight vectors on tuples of `r x s` matrices: the
//! special-weight bases `u_T` / `v_T` with their dual evaluation points,
//! the general basis elements `u_{nu,P,Q,alpha}`, the corollary spanning
//! set, and the pullbacks to `n x n` matrices, matrix tuples, and
//! nilpotent sample points.

use crate::config::max_construction_t;
use crate::error::{CoreError, Result};
use crate::linalg::RatMatrix;
use crate::partition::Partition;
use crate::perm::{symmetric_group, Permutation};
use crate::pictures::{enumerate_admissible, DiagramMapping};
use crate::polyring::{MatrixTuple, Monomial, SparsePolynomial, VarSpace, VariableId};
use crate::skew::{Cell, SkewDiagram};
use crate::specht::{column_cell_permutations, layer_diagrams, stabilizers};
use crate::tableau::{canonical_tableaux, enumerate_tableaux, Flavor, Tableau};
use num::{BigRational, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

fn check_t_bound(t: usize) -> Result<()> {
    let bound = max_construction_t();
    if t > bound {
        return Err(CoreError::TooLarge(format!(
            "construction size t = {t} exceeds the bound {bound}"
        )));
    }
    Ok(())
}

fn check_ut_preconditions(
    lambda: &Partition,
    t_tab: &Tableau,
    r: usize,
    s: usize,
    m: usize,
) -> Result<usize> {
    let t = lambda.size();
    check_t_bound(t)?;
    if t > r {
        return Err(CoreError::Precondition(format!("|{lambda}| = {t} > r = {r}")));
    }
    if lambda.len() > s {
        return Err(CoreError::Precondition(format!(
            "l({lambda}) > s = {s}"
        )));
    }
    if t_tab.shape() != &SkewDiagram::straight(lambda.clone()) {
        return Err(CoreError::ShapeMismatch(format!(
            "tableau shape {} differs from {lambda}",
            t_tab.shape()
        )));
    }
    if t_tab.standard_scan().iter().any(|&e| e as usize > m) {
        return Err(CoreError::Precondition(format!(
            "entries of {t_tab:?} exceed m = {m}"
        )));
    }
    Ok(t)
}

/// The single determinant `psi(f_S)`: columns indexed by the cells of
/// `lambda` in scan order, the column of cell `(i, j)` being the vector
/// `A_{S_ij} e_i` restricted to the last `t` rows.
pub fn wedge_determinant(
    lambda: &Partition,
    s_tab: &Tableau,
    r: usize,
    s: usize,
    m: usize,
) -> Result<SparsePolynomial> {
    let t = check_ut_preconditions(lambda, s_tab, r, s, m)?;
    let space = VarSpace::new(m, r, s);
    let mut out = SparsePolynomial::zero(space);
    let cells = s_tab.shape().cells();
    let scan = s_tab.standard_scan();
    for tau in symmetric_group(t) {
        let sign = BigRational::from_integer(tau.sign().into());
        let pairs: Vec<(VariableId, u32)> = (0..t)
            .map(|k| {
                let (i, _) = cells[k];
                let l = scan[k] as usize;
                let row = r - t + tau.apply(k as u32 + 1) as usize;
                (VariableId::new(l, row, i), 1)
            })
            .collect();
        out.add_term(Monomial::from_pairs(pairs), sign);
    }
    Ok(out)
}

/// Orbit of a tableau under the column stabilizer of its shape acting on
/// cells, collapsed to a set.
fn column_orbit(t_tab: &Tableau) -> Vec<Tableau> {
    let scan = t_tab.standard_scan();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (map, _) in column_cell_permutations(t_tab.shape()) {
        let entries: Vec<u32> = map.iter().map(|&from| scan[from]).collect();
        if seen.insert(entries.clone()) {
            out.push(Tableau::new(t_tab.shape().clone(), entries).unwrap());
        }
    }
    out
}

/// The semi-invariant `u_T`: the sum of `psi(f_S)` over the orbit of `T`
/// under the column stabilizer of the shape, taken as a set.
pub fn build_ut(
    lambda: &Partition,
    t_tab: &Tableau,
    r: usize,
    s: usize,
    m: usize,
) -> Result<SparsePolynomial> {
    check_ut_preconditions(lambda, t_tab, r, s, m)?;
    let mut out = SparsePolynomial::zero(VarSpace::new(m, r, s));
    for orbit_tab in column_orbit(t_tab) {
        out = out.add(&wedge_determinant(lambda, &orbit_tab, r, s, m)?);
    }
    Ok(out)
}

/// The semi-invariant `v_T` on `m`-tuples of `s x r` matrices: columns of
/// the transposed components through the reversed basis vectors, first
/// `t` rows kept.
pub fn build_vt(
    lambda: &Partition,
    t_tab: &Tableau,
    r: usize,
    s: usize,
    m: usize,
) -> Result<SparsePolynomial> {
    let t = check_ut_preconditions(lambda, t_tab, r, s, m)?;
    let space = VarSpace::new(m, s, r);
    let mut out = SparsePolynomial::zero(space);
    for orbit_tab in column_orbit(t_tab) {
        let cells = orbit_tab.shape().cells();
        let scan = orbit_tab.standard_scan();
        for tau in symmetric_group(t) {
            let sign = BigRational::from_integer(tau.sign().into());
            let pairs: Vec<(VariableId, u32)> = (0..t)
                .map(|k| {
                    let (i, _) = cells[k];
                    let l = scan[k] as usize;
                    let col = tau.apply(k as u32 + 1) as usize;
                    (VariableId::new(l, s - i + 1, col), 1)
                })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), sign);
        }
    }
    Ok(out)
}

/// The algebra isomorphism induced by the anti-diagonal flip
/// `A -> P_1 A' P_2^-1 : Mat_{s,r} -> Mat_{r,s}` componentwise:
/// `x(l)_{ij} -> y(l)_{s-j+1, r-i+1}`.
pub fn flip_iso(p: &SparsePolynomial) -> SparsePolynomial {
    let src = p.space();
    let target = VarSpace::new(src.m, src.s, src.r);
    p.substitute(target, &|v: VariableId| {
        SparsePolynomial::var(
            target,
            v.l as usize,
            src.s - v.j as usize + 1,
            src.r - v.i as usize + 1,
        )
        .expect("flipped variable stays in range")
    })
}

/// Strictly-row-increasing tableaux of the given shape with entries
/// `<= m`, in scan order.
pub fn strict_row_tableaux(lambda: &Partition, m: usize) -> Vec<Tableau> {
    let shape = SkewDiagram::straight(lambda.clone());
    let t = lambda.size();
    let mut out = Vec::new();
    let mut entries: Vec<u32> = Vec::with_capacity(t);
    fn rec(
        shape: &SkewDiagram,
        cells: &[Cell],
        m: usize,
        entries: &mut Vec<u32>,
        out: &mut Vec<Tableau>,
    ) {
        if entries.len() == cells.len() {
            out.push(Tableau::new(shape.clone(), entries.clone()).unwrap());
            return;
        }
        let idx = entries.len();
        let lo = if cells[idx].1 > 1 { entries[idx - 1] + 1 } else { 1 };
        for e in lo..=m as u32 {
            entries.push(e);
            rec(shape, cells, m, entries, out);
            entries.pop();
        }
    }
    rec(&shape, &shape.cells(), m, &mut entries, &mut out);
    out
}

/// The dual evaluation points `A(T)`: for each strictly-row-increasing
/// `T`, component `h` maps `e_i` to the bottom-aligned basis vector
/// `e_{r-t+(T_lambda)_{ij}}` when `h` is the `j`-th entry of row `i` of
/// `T`, and to zero otherwise. The matrix `[psi(f_S)(A(T))]_{S,T}` is the
/// identity.
pub fn dual_points(
    lambda: &Partition,
    m: usize,
    r: usize,
    s: usize,
) -> Result<Vec<(Tableau, MatrixTuple)>> {
    let t = lambda.size();
    check_t_bound(t)?;
    if t > r || lambda.len() > s {
        return Err(CoreError::Precondition(format!(
            "need |{lambda}| <= r and l({lambda}) <= s"
        )));
    }
    let (t_lambda, _) = canonical_tableaux(&SkewDiagram::straight(lambda.clone()));
    let mut out = Vec::new();
    for tab in strict_row_tableaux(lambda, m) {
        let mut mats = vec![RatMatrix::zero(r, s); m];
        for (i, j) in tab.shape().cells() {
            let h = tab.entry((i, j)).unwrap() as usize;
            let target_row = r - t + t_lambda.entry((i, j)).unwrap() as usize;
            mats[h - 1][(target_row - 1, i - 1)] = BigRational::one();
        }
        out.push((tab, MatrixTuple::new(r, s, mats)?));
    }
    Ok(out)
}

/// Label of a general highest weight vector: a multidegree, a pair of
/// ordered tableaux of shapes `lambda`, `mu` and weight `nu`, and the
/// diagram mapping `mu -> lambda` glued from the unique admissible
/// picture of each layer.
#[derive(Clone, Debug, Serialize)]
pub struct HwvLabel {
    pub nu: Vec<usize>,
    #[serde(rename = "P")]
    pub p: Tableau,
    #[serde(rename = "Q")]
    pub q: Tableau,
    pub alpha: DiagramMapping,
}

/// Compositions of `t` into `m` nonnegative parts, lexicographically
/// decreasing in the first component.
pub fn compositions(t: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; m];
    fn rec(pos: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for v in (0..=left).rev() {
            current[pos] = v;
            rec(pos + 1, left - v, current, out);
        }
    }
    if m == 0 {
        if t == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, t, &mut current, &mut out);
    out
}

/// All labels `(nu, P, Q, alpha)` for the given shapes, each `alpha`
/// the canonical representative whose layer restrictions are admissible
/// pictures.
pub fn enumerate_labels(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    r: usize,
    s: usize,
) -> Result<Vec<HwvLabel>> {
    let t = lambda.size();
    if mu.size() != t {
        return Err(CoreError::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    check_t_bound(t)?;
    if mu.len() > r || lambda.len() > s {
        return Err(CoreError::Precondition(format!(
            "need l({mu}) <= r = {r} and l({lambda}) <= s = {s}"
        )));
    }
    let mut out = Vec::new();
    for nu in compositions(t, m) {
        out.extend(enumerate_labels_for_nu(lambda, mu, &nu, r, s)?);
    }
    Ok(out)
}

/// The labels of a single multidegree.
pub fn enumerate_labels_for_nu(
    lambda: &Partition,
    mu: &Partition,
    nu: &[usize],
    _r: usize,
    _s: usize,
) -> Result<Vec<HwvLabel>> {
    let t = lambda.size();
    let m = nu.len();
    if nu.iter().sum::<usize>() != t || mu.size() != t {
        return Err(CoreError::SizeMismatch(
            "need |lambda| = |mu| = sum(nu)".into(),
        ));
    }
    check_t_bound(t)?;
    let lambda_shape = SkewDiagram::straight(lambda.clone());
    let mu_shape = SkewDiagram::straight(mu.clone());
    let mut out = Vec::new();
    for p_tab in enumerate_tableaux(&lambda_shape, Flavor::Ordered, Some(nu), m.max(1)) {
        let e_layers = layer_diagrams(&p_tab, m)?;
        for q_tab in enumerate_tableaux(&mu_shape, Flavor::Ordered, Some(nu), m.max(1)) {
            let f_layers = layer_diagrams(&q_tab, m)?;
            let mut per_layer: Vec<Vec<DiagramMapping>> = Vec::with_capacity(m);
            for i in 0..m {
                per_layer.push(
                    enumerate_admissible(&f_layers[i], &e_layers[i])?
                        .into_iter()
                        .map(|(_, alpha)| alpha)
                        .collect(),
                );
            }
            if per_layer.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut stack = vec![0usize; m];
            loop {
                let mut images = vec![(0usize, 0usize); mu_shape.num_cells()];
                for (i, &k) in stack.iter().enumerate() {
                    let alpha_i = &per_layer[i][k];
                    for cell in alpha_i.source().cells() {
                        images[mu_shape.scan_index(cell).unwrap()] =
                            alpha_i.apply(cell).unwrap();
                    }
                }
                let alpha =
                    DiagramMapping::new(mu_shape.clone(), lambda_shape.clone(), images)?;
                out.push(HwvLabel {
                    nu: nu.to_vec(),
                    p: p_tab.clone(),
                    q: q_tab.clone(),
                    alpha,
                });
                let mut pos = m;
                let mut done = m == 0;
                while pos > 0 {
                    pos -= 1;
                    stack[pos] += 1;
                    if stack[pos] < per_layer[pos].len() {
                        break;
                    }
                    stack[pos] = 0;
                    if pos == 0 {
                        done = true;
                    }
                }
                if done {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The signed double sum
/// `u_{nu,P,Q,alpha} = sum sgn(pi) sgn(sigma) prod_{a in mu}
/// x(Q(a))_{r - row(pi(a)) + 1, row(sigma(alpha(a)))}`
/// over the column stabilizers of the shapes of `mu` and `lambda` acting
/// on cells.
pub fn build_u(label: &HwvLabel, r: usize, s: usize, m: usize) -> Result<SparsePolynomial> {
    let mu_shape = label.q.shape().clone();
    let lambda_shape = label.p.shape().clone();
    if label.q.standard_scan().iter().any(|&e| e as usize > m) {
        return Err(CoreError::Precondition(format!(
            "label multidegree uses components beyond m = {m}"
        )));
    }
    if mu_shape.num_rows() > r || lambda_shape.num_rows() > s {
        return Err(CoreError::Precondition(format!(
            "need l({}) <= r and l({}) <= s",
            mu_shape, lambda_shape
        )));
    }
    let space = VarSpace::new(m, r, s);
    let mut out = SparsePolynomial::zero(space);
    let mu_cells = mu_shape.cells();
    let alpha_images = label.alpha.images();
    let q_scan = label.q.standard_scan();
    let lambda_cells = lambda_shape.cells();
    let col_mu = column_cell_permutations(&mu_shape);
    let col_lambda = column_cell_permutations(&lambda_shape);
    for (pi_map, pi_sign) in &col_mu {
        for (sigma_map, sigma_sign) in &col_lambda {
            let pairs: Vec<(VariableId, u32)> = mu_cells
                .iter()
                .enumerate()
                .map(|(idx, _)| {
                    let l = q_scan[idx] as usize;
                    // row of pi(a) in mu
                    let pi_row = mu_cells[pi_map[idx]].0;
                    // row of sigma(alpha(a)) in lambda
                    let alpha_idx = lambda_shape.scan_index(alpha_images[idx]).unwrap();
                    let sigma_row = lambda_cells[sigma_map[alpha_idx]].0;
                    (VariableId::new(l, r - pi_row + 1, sigma_row), 1)
                })
                .collect();
            out.add_term(
                Monomial::from_pairs(pairs),
                BigRational::from_integer((pi_sign * sigma_sign).into()),
            );
        }
    }
    Ok(out)
}

/// The corollary spanning elements
/// `sum sgn(pi) sgn(sigma) prod_i x(gamma_i)_{r - a_{pi(i)} + 1,
/// b_{sigma(tau(i))}}` with `a`, `b` the standard scans of `S_mu`,
/// `S_lambda` and the sums over the value column stabilizers of `T_mu`,
/// `T_lambda`.
pub fn spanning_corollary(
    lambda: &Partition,
    mu: &Partition,
    gamma: &[usize],
    tau: &Permutation,
    r: usize,
    s: usize,
    m: usize,
) -> Result<SparsePolynomial> {
    let t = lambda.size();
    if mu.size() != t || gamma.len() != t || tau.degree() != t {
        return Err(CoreError::SizeMismatch(
            "need |lambda| = |mu| = |gamma| = deg(tau)".into(),
        ));
    }
    check_t_bound(t)?;
    if gamma.iter().any(|&g| g == 0 || g > m) {
        return Err(CoreError::Precondition(format!(
            "word {gamma:?} outside 1..={m}"
        )));
    }
    if mu.len() > r || lambda.len() > s {
        return Err(CoreError::Precondition(format!(
            "need l({mu}) <= r and l({lambda}) <= s"
        )));
    }
    let mu_shape = SkewDiagram::straight(mu.clone());
    let lambda_shape = SkewDiagram::straight(lambda.clone());
    // Standard scans of S_mu and S_lambda: row index per scan position.
    let a_scan: Vec<usize> = mu_shape.cells().iter().map(|&(i, _)| i).collect();
    let b_scan: Vec<usize> = lambda_shape.cells().iter().map(|&(i, _)| i).collect();
    let (_, col_mu) = stabilizers(&mu_shape)?;
    let (_, col_lambda) = stabilizers(&lambda_shape)?;
    let space = VarSpace::new(m, r, s);
    let mut out = SparsePolynomial::zero(space);
    for pi in &col_mu {
        let pi_sign = pi.sign();
        for sigma in &col_lambda {
            let sign = BigRational::from_integer((pi_sign * sigma.sign()).into());
            let pairs: Vec<(VariableId, u32)> = (1..=t as u32)
                .map(|i| {
                    let row_a = a_scan[pi.apply(i) as usize - 1];
                    let row_b = b_scan[sigma.apply(tau.apply(i)) as usize - 1];
                    (
                        VariableId::new(gamma[i as usize - 1], r - row_a + 1, row_b),
                        1,
                    )
                })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), sign);
        }
    }
    Ok(out)
}

/// Symbolic powers of the generic `n x n` matrix: entry polynomials of
/// `X^1, ..., X^max_power` over the square variable space.
fn symbolic_powers(n: usize, max_power: usize) -> Vec<Vec<Vec<SparsePolynomial>>> {
    let space = VarSpace::square(n);
    let x: Vec<Vec<SparsePolynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| SparsePolynomial::var(space, 1, i, j).unwrap())
                .collect()
        })
        .collect();
    let mut powers = vec![x.clone()];
    for _ in 1..max_power {
        let prev = powers.last().unwrap();
        let mut next = vec![vec![SparsePolynomial::zero(space); n]; n];
        for i in 0..n {
            for k in 0..n {
                for (j, entry) in next[i].iter_mut().enumerate() {
                    *entry = entry.add(&prev[i][k].mul(&x[k][j]));
                }
            }
        }
        powers.push(next);
    }
    powers
}

/// Pullback along `phi_{r,s,n,m}`: substitutes `x(l)_{ij}` by the entry
/// `(X^l)_{n-r+i, j}` as a polynomial in the `n^2` matrix entries.
pub fn pullback_phi(p: &SparsePolynomial, n: usize) -> Result<SparsePolynomial> {
    let src = p.space();
    if src.r + src.s > n {
        return Err(CoreError::DimensionMismatch(format!(
            "pullback needs r + s <= n, got {} + {} > {n}",
            src.r, src.s
        )));
    }
    let target = VarSpace::square(n);
    let powers = symbolic_powers(n, src.m.max(1));
    Ok(p.substitute(target, &|v: VariableId| {
        powers[v.l as usize - 1][n - src.r + v.i as usize - 1][v.j as usize - 1].clone()
    }))
}

/// Evaluation form of the phi pullback: the tuple of lower-left `r x s`
/// corners of the first `m` powers of `x`.
pub fn phi_point(x: &RatMatrix, r: usize, s: usize, m: usize) -> Result<MatrixTuple> {
    let n = x.rows;
    if x.cols != n || r + s > n {
        return Err(CoreError::DimensionMismatch(format!(
            "need a square matrix with r + s <= n, got {}x{}",
            x.rows, x.cols
        )));
    }
    let mut mats = Vec::with_capacity(m);
    let mut power = x.clone();
    for _ in 0..m {
        let mut corner = RatMatrix::zero(r, s);
        for i in 0..r {
            for j in 0..s {
                corner[(i, j)] = power[(n - r + i, j)].clone();
            }
        }
        mats.push(corner);
        power = power.mul(x);
    }
    MatrixTuple::new(r, s, mats)
}

/// Nonempty words over `{1..l}` of length at most `max_len`, ordered by
/// length then lexicographically.
pub fn psi_words(l: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut word = vec![1usize; len];
        loop {
            out.push(word.clone());
            let mut pos = len;
            let mut done = false;
            while pos > 0 {
                pos -= 1;
                word[pos] += 1;
                if word[pos] <= l {
                    break;
                }
                word[pos] = 1;
                if pos == 0 {
                    done = true;
                }
            }
            if done {
                break;
            }
        }
    }
    out
}

/// Pullback along `psi_{r,s,n,l}`: the component index set of `p` is
/// identified with `words`, and `x(xi)_{ij}` becomes the entry
/// `(X_{xi_1} ... X_{xi_k})_{n-r+i, j}` on the `l`-tuple space.
pub fn pullback_psi(
    p: &SparsePolynomial,
    n: usize,
    l: usize,
    words: &[Vec<usize>],
) -> Result<SparsePolynomial> {
    let src = p.space();
    if src.m > words.len() {
        return Err(CoreError::DimensionMismatch(format!(
            "{} components but only {} words",
            src.m,
            words.len()
        )));
    }
    if src.r + src.s > n {
        return Err(CoreError::DimensionMismatch(format!(
            "pullback needs r + s <= n, got {} + {} > {n}",
            src.r, src.s
        )));
    }
    for w in words {
        if w.is_empty() || w.iter().any(|&a| a == 0 || a > l) {
            return Err(CoreError::Precondition(format!(
                "word {w:?} not over 1..={l}"
            )));
        }
    }
    let target = VarSpace::square_tuple(l, n);
    let gens: Vec<Vec<Vec<SparsePolynomial>>> = (1..=l)
        .map(|comp| {
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| SparsePolynomial::var(target, comp, i, j).unwrap())
                        .collect()
                })
                .collect()
        })
        .collect();
    let word_product = |word: &[usize]| -> Vec<Vec<SparsePolynomial>> {
        let mut acc = gens[word[0] - 1].clone();
        for &a in &word[1..] {
            let rhs = &gens[a - 1];
            let mut next = vec![vec![SparsePolynomial::zero(target); n]; n];
            for i in 0..n {
                for k in 0..n {
                    for (j, entry) in next[i].iter_mut().enumerate() {
                        *entry = entry.add(&acc[i][k].mul(&rhs[k][j]));
                    }
                }
            }
            acc = next;
        }
        acc
    };
    let mut cache: std::collections::BTreeMap<usize, Vec<Vec<SparsePolynomial>>> =
        std::collections::BTreeMap::new();
    let mut result = SparsePolynomial::zero(target);
    // Substitute monomial by monomial, caching word products.
    for (mono, coeff) in p.terms() {
        let mut term = SparsePolynomial::constant(target, coeff.clone());
        for &(v, e) in mono.vars() {
            let prod = cache
                .entry(v.l as usize)
                .or_insert_with(|| word_product(&words[v.l as usize - 1]));
            let entry = prod[n - src.r + v.i as usize - 1][v.j as usize - 1].clone();
            for _ in 0..e {
                term = term.mul(&entry);
            }
        }
        result = result.add(&term);
    }
    Ok(result)
}

/// Evaluation form of the psi pullback at a tuple of `n x n` matrices.
pub fn psi_point(
    xs: &[RatMatrix],
    r: usize,
    s: usize,
    words: &[Vec<usize>],
) -> Result<MatrixTuple> {
    let n = xs.first().map(|x| x.rows).unwrap_or(0);
    if xs.iter().any(|x| x.rows != n || x.cols != n) || r + s > n {
        return Err(CoreError::DimensionMismatch(
            "psi point needs square matrices with r + s <= n".into(),
        ));
    }
    let mut mats = Vec::with_capacity(words.len());
    for word in words {
        let mut prod = xs[word[0] - 1].clone();
        for &a in &word[1..] {
            prod = prod.mul(&xs[a - 1]);
        }
        let mut corner = RatMatrix::zero(r, s);
        for i in 0..r {
            for j in 0..s {
                corner[(i, j)] = prod[(n - r + i, j)].clone();
            }
        }
        mats.push(corner);
    }
    MatrixTuple::new(r, s, mats)
}

/// A seeded pseudorandom nilpotent matrix of the given Jordan type:
/// the block diagonal nilpotent Jordan form conjugated by a random
/// invertible integer matrix with entries in `-2..=2`. Deterministic per
/// seed; `X^{lambda_1} = 0` is verified exactly.
pub fn sample_nilpotent(jordan_type: &Partition, seed: u64) -> Result<RatMatrix> {
    let n = jordan_type.size();
    let mut j = RatMatrix::zero(n, n);
    let mut offset = 0usize;
    for &block in jordan_type.parts() {
        for k in 0..block.saturating_sub(1) {
            j[(offset + k, offset + k + 1)] = BigRational::one();
        }
        offset += block;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let conjugator = loop {
        let candidate = RatMatrix::from_int_rows(
            &(0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
                .collect::<Vec<_>>(),
        );
        if let Some(inv) = candidate.inverse() {
            break (candidate, inv);
        }
    };
    let x = conjugator.0.mul(&j).mul(&conjugator.1);
    let top = jordan_type.row_len(1);
    if top > 0 && !x.pow(top).is_zero() {
        return Err(CoreError::Verification(format!(
            "sampled matrix is not nilpotent of type {jordan_type}"
        )));
    }
    Ok(x)
}

/// Seeded rational evaluation points for rank certificates: entries in
/// `-2..=2` scaled per component by distinct primes so the components
/// stay decorrelated. The certified rank is a lower bound that becomes
/// exact when it reaches the oracle count.
pub fn random_points(space: VarSpace, count: usize, seed: u64) -> Vec<MatrixTuple> {
    const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mats = (0..space.m)
                .map(|l| {
                    let p = PRIMES[l % PRIMES.len()];
                    let mut mat = RatMatrix::zero(space.r, space.s);
                    for i in 0..space.r {
                        for j in 0..space.s {
                            mat[(i, j)] = BigRational::new(
                                (rng.gen_range(-2..=2i64) * p).into(),
                                1.into(),
                            );
                        }
                    }
                    mat
                })
                .collect();
            MatrixTuple::new(space.r, space.s, mats).expect("dims match by construction")
        })
        .collect()
}

/// Exact rank of the evaluation matrix `[p_k(point_j)]`.
pub fn evaluation_rank(polys: &[SparsePolynomial], points: &[MatrixTuple]) -> Result<usize> {
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        let mut row = Vec::with_capacity(points.len());
        for pt in points {
            row.push(p.evaluate(pt)?);
        }
        rows.push(row);
    }
    Ok(crate::linalg::rank_dense(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::unipotent_invariance_proof;
    use num::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ut_single_cell() {
        let lambda = p(&[1]);
        for (r, s, m, l) in [(1, 1, 1, 1), (3, 2, 2, 2)] {
            let t_tab = Tableau::from_rows(&[&[l as u32]]).unwrap();
            let u = build_ut(&lambda, &t_tab, r, s, m).unwrap();
            let expected = SparsePolynomial::var(VarSpace::new(m, r, s), l, r, 1).unwrap();
            assert_eq!(u, expected);
        }
    }

    #[test]
    fn ut_column_is_determinant() {
        // lambda = (1,1), T = [1],[1], r = s = 2, m = 1: u_T = det(A_1).
        let lambda = p(&[1, 1]);
        let t_tab = Tableau::from_rows(&[&[1], &[1]]).unwrap();
        let u = build_ut(&lambda, &t_tab, 2, 2, 1).unwrap();
        let sp = VarSpace::new(1, 2, 2);
        let x = |i, j| SparsePolynomial::var(sp, 1, i, j).unwrap();
        let det = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
        assert_eq!(u, det);
    }

    #[test]
    fn ut_torus_weight() {
        let lambda = p(&[2, 1]);
        let (r, s, m) = (3, 2, 3);
        for t_tab in strict_row_tableaux(&lambda, m) {
            let u = build_ut(&lambda, &t_tab, r, s, m).unwrap();
            if u.is_zero() {
                continue;
            }
            let (wr, ws) = u.torus_weight().unwrap();
            assert_eq!(wr.coords(), &[-1, -1, -1]);
            assert_eq!(ws.coords(), &[2, 1]);
        }
    }

    #[test]
    fn dual_point_identity_matrix() {
        for (lambda, m) in [(p(&[2, 1]), 3), (p(&[2]), 2), (p(&[1, 1]), 2)] {
            let r = lambda.size();
            let s = lambda.len();
            let pts = dual_points(&lambda, m, r, s).unwrap();
            for (stab, a_t) in &pts {
                for (stab2, _) in &pts {
                    let psi = wedge_determinant(&lambda, stab2, r, s, m).unwrap();
                    let val = psi.evaluate(a_t).unwrap();
                    let expected = if stab == stab2 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(val, expected, "{stab2:?} at A({stab:?})");
                }
            }
        }
    }

    #[test]
    fn ut_identity_at_dual_points_row_semistandard() {
        let lambda = p(&[2, 1]);
        let (r, s, m) = (3, 2, 3);
        let pts: Vec<_> = dual_points(&lambda, m, r, s)
            .unwrap()
            .into_iter()
            .filter(|(t, _)| t.is_row_semistandard())
            .collect();
        for (ti, a_ti) in &pts {
            for (tj, _) in &pts {
                let u = build_ut(&lambda, tj, r, s, m).unwrap();
                let val = u.evaluate(a_ti).unwrap();
                let expected = if ti == tj {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(val, expected);
            }
        }
    }

    #[test]
    fn ut_count_matches_weyl_dimension() {
        // |{row semi-standard T}| = dim of the GL_3 Weyl module of
        // highest weight (2,1)' computed by the Weyl dimension formula.
        let lambda = p(&[2, 1]);
        let count = strict_row_tableaux(&lambda, 3)
            .into_iter()
            .filter(|t| t.is_row_semistandard())
            .count();
        assert_eq!(count, 8);
    }

    #[test]
    fn vt_matches_flip_of_ut() {
        for (lambda, r, s, m) in [
            (p(&[1]), 2, 2, 2),
            (p(&[2]), 2, 2, 2),
            (p(&[1, 1]), 2, 2, 2),
            (p(&[2, 1]), 3, 2, 3),
        ] {
            for t_tab in strict_row_tableaux(&lambda, m)
                .into_iter()
                .filter(|t| t.is_row_semistandard())
            {
                let u = build_ut(&lambda, &t_tab, r, s, m).unwrap();
                let v = build_vt(&lambda, &t_tab, r, s, m).unwrap();
                let flipped = flip_iso(&u);
                assert!(
                    flipped == v || flipped == v.neg(),
                    "{lambda} {t_tab:?}"
                );
            }
        }
    }

    #[test]
    fn vt_single_cell() {
        let lambda = p(&[1]);
        let t_tab = Tableau::from_rows(&[&[2]]).unwrap();
        let v = build_vt(&lambda, &t_tab, 3, 2, 2).unwrap();
        // On Mat_{2x3} tuples: single entry x(2)_{s,1} = x(2)_{2,1}.
        let expected = SparsePolynomial::var(VarSpace::new(2, 2, 3), 2, 2, 1).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn labels_single_cell() {
        let lambda = p(&[1]);
        let labels = enumerate_labels(&lambda, &lambda, 2, 1, 1).unwrap();
        assert_eq!(labels.len(), 2);
        for label in &labels {
            let u = build_u(label, 1, 1, 2).unwrap();
            let l = label.nu.iter().position(|&v| v == 1).unwrap() + 1;
            let expected = SparsePolynomial::var(VarSpace::new(2, 1, 1), l, 1, 1).unwrap();
            assert_eq!(u, expected);
        }
    }

    #[test]
    fn labels_two_cells_single_component() {
        // lambda = mu = (2), m = 1: one label, u = x(1)_{r,1}^2.
        let lambda = p(&[2]);
        let labels = enumerate_labels(&lambda, &lambda, 1, 2, 1).unwrap();
        assert_eq!(labels.len(), 1);
        let u = build_u(&labels[0], 2, 1, 1).unwrap();
        let sp = VarSpace::new(1, 2, 1);
        let x = SparsePolynomial::var(sp, 1, 2, 1).unwrap();
        assert_eq!(u, x.mul(&x));
    }

    #[test]
    fn built_u_invariance_weight_and_multidegree() {
        for (lambda, mu) in [
            (p(&[2]), p(&[1, 1])),
            (p(&[2, 1]), p(&[2, 1])),
            (p(&[3]), p(&[2, 1])),
        ] {
            let (r, s, m) = (mu.len().max(2), lambda.len().max(2), 2);
            for label in enumerate_labels(&lambda, &mu, m, r, s).unwrap() {
                let u = build_u(&label, r, s, m).unwrap();
                assert!(!u.is_zero());
                assert_eq!(u.multidegree().unwrap(), label.nu);
                let (wr, ws) = u.torus_weight().unwrap();
                assert_eq!(
                    wr,
                    crate::partition::GLWeight::neg_rev(&mu, r).unwrap()
                );
                assert_eq!(
                    ws,
                    crate::partition::GLWeight::from_partition(&lambda, s).unwrap()
                );
                assert!(unipotent_invariance_proof(&u).unwrap().is_invariant());
            }
        }
    }

    #[test]
    fn corollary_single_cell() {
        let one = p(&[1]);
        let tau = Permutation::identity(1);
        let u = spanning_corollary(&one, &one, &[1], &tau, 2, 2, 2).unwrap();
        let expected = SparsePolynomial::var(VarSpace::new(2, 2, 2), 1, 2, 1).unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn corollary_elements_invariant() {
        let lambda = p(&[2, 1]);
        let mu = p(&[2, 1]);
        let (r, s, m) = (2, 2, 2);
        for tau in symmetric_group(3) {
            let u = spanning_corollary(&lambda, &mu, &[1, 2, 1], &tau, r, s, m).unwrap();
            if !u.is_zero() {
                assert!(unipotent_invariance_proof(&u).unwrap().is_invariant());
            }
        }
    }

    #[test]
    fn phi_pullback_basics() {
        // r = s = 1: x(1)_{1,1} pulls back to X_{n,1}.
        let sp = VarSpace::new(1, 1, 1);
        let x = SparsePolynomial::var(sp, 1, 1, 1).unwrap();
        let pulled = pullback_phi(&x, 3).unwrap();
        let expected = SparsePolynomial::var(VarSpace::square(3), 1, 3, 1).unwrap();
        assert_eq!(pulled, expected);

        // Degree is the multidegree-weighted total degree.
        let sp = VarSpace::new(2, 1, 1);
        let q = SparsePolynomial::var(sp, 2, 1, 1)
            .unwrap()
            .mul(&SparsePolynomial::var(sp, 1, 1, 1).unwrap());
        let pulled = pullback_phi(&q, 3).unwrap();
        assert_eq!(pulled.degree(), q.graded_total_degree().unwrap());
    }

    #[test]
    fn phi_pullback_matches_phi_point() {
        let lambda = p(&[2]);
        let mu = p(&[1, 1]);
        let (r, s, m, n) = (2, 1, 2, 4);
        let x = sample_nilpotent(&p(&[3, 1]), 7).unwrap();
        for label in enumerate_labels(&lambda, &mu, m, r, s).unwrap() {
            let u = build_u(&label, r, s, m).unwrap();
            let pulled = pullback_phi(&u, n).unwrap();
            let direct = u.evaluate(&phi_point(&x, r, s, m).unwrap()).unwrap();
            let via_poly = pulled
                .evaluate(&MatrixTuple::new(n, n, vec![x.clone()]).unwrap())
                .unwrap();
            assert_eq!(direct, via_poly);
        }
    }

    #[test]
    fn phi_pullback_conjugation_weight() {
        let lambda = p(&[2]);
        let mu = p(&[1, 1]);
        let (r, s, m, n) = (2, 1, 2, 4);
        for label in enumerate_labels(&lambda, &mu, m, r, s).unwrap() {
            let u = build_u(&label, r, s, m).unwrap();
            let pulled = pullback_phi(&u, n).unwrap();
            let w = pulled.conjugation_weight().unwrap();
            assert_eq!(
                w,
                crate::partition::GLWeight::bracket(&lambda, &mu, n).unwrap()
            );
        }
    }

    #[test]
    fn psi_words_ordering() {
        let words = psi_words(2, 2);
        assert_eq!(
            words,
            vec![vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn psi_single_letter_matches_phi() {
        // With a one-letter alphabet the words are the powers, so psi and
        // phi pullbacks agree.
        let sp = VarSpace::new(2, 1, 1);
        let q = SparsePolynomial::var(sp, 2, 1, 1)
            .unwrap()
            .mul(&SparsePolynomial::var(sp, 1, 1, 1).unwrap());
        let words = psi_words(1, 2);
        let via_psi = pullback_psi(&q, 3, 1, &words).unwrap();
        let via_phi = pullback_phi(&q, 3).unwrap();
        // Spaces differ (tuple of 1 vs single), but the polynomials match
        // after identifying the variables.
        assert_eq!(via_psi.num_terms(), via_phi.num_terms());
        let x = sample_nilpotent(&p(&[2, 1]), 3).unwrap();
        assert_eq!(
            via_psi
                .evaluate(&MatrixTuple::new(3, 3, vec![x.clone()]).unwrap())
                .unwrap(),
            via_phi
                .evaluate(&MatrixTuple::new(3, 3, vec![x]).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn psi_two_letter_word() {
        // Variable indexed by the word (1,2) maps to (X_1 X_2)_{n-r+i, j}.
        let words = psi_words(2, 2);
        let idx = words.iter().position(|w| w == &[1, 2]).unwrap() + 1;
        let sp = VarSpace::new(words.len(), 1, 1);
        let x = SparsePolynomial::var(sp, idx, 1, 1).unwrap();
        let pulled = pullback_psi(&x, 2, 2, &words).unwrap();
        let target = VarSpace::square_tuple(2, 2);
        let entry = |l, i, j| SparsePolynomial::var(target, l, i, j).unwrap();
        // (X_1 X_2)_{2,1} = x(1)_{2,1} x(2)_{1,1} + x(1)_{2,2} x(2)_{2,1}
        let expected = entry(1, 2, 1)
            .mul(&entry(2, 1, 1))
            .add(&entry(1, 2, 2).mul(&entry(2, 2, 1)));
        assert_eq!(pulled, expected);
    }

    #[test]
    fn nilpotent_samples() {
        let x = sample_nilpotent(&p(&[3]), 0).unwrap();
        assert!(x.pow(3).is_zero());
        assert!(!x.pow(2).is_zero());
        let zero = sample_nilpotent(&p(&[1, 1, 1]), 5).unwrap();
        assert!(zero.is_zero());
        // Deterministic per seed.
        assert_eq!(
            sample_nilpotent(&p(&[2, 2]), 11).unwrap(),
            sample_nilpotent(&p(&[2, 2]), 11).unwrap()
        );
        for seed in 0..4 {
            let x = sample_nilpotent(&p(&[4, 2]), seed).unwrap();
            assert!(x.pow(4).is_zero());
            assert!(!x.pow(3).is_zero());
        }
    }

    #[test]
    fn construction_bound_is_hard() {
        let big = p(&[7]);
        let t_tab = Tableau::from_rows(&[&[1, 2, 3, 4, 5, 6, 7]]).unwrap();
        assert!(build_ut(&big, &t_tab, 7, 1, 7).is_err());
    }
}
