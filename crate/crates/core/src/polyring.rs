//! Sparse multivariate polynomials over exact rationals in the matrix
//! entry functions `x(l)_{ij}` on tuples of `r x s` matrices, with torus
//! weights, multidegrees, unipotent actions, and evaluation.
//!
//! Weight conventions are fixed here once: the group acts on functions by
//! `((R,S).f)(A) = f((R^-1,S^-1).A)` with `(R,S).A_l = R A_l S^-1`, so the
//! variable `x(l)_{ij}` has `GL_r`-weight `-e_i` and `GL_s`-weight `+e_j`,
//! and the lower-left corner variable `x(l)_{r,1}` is the highest-weight
//! variable.

use crate::error::{CoreError, Result};
use crate::linalg::RatMatrix;
use crate::partition::GLWeight;
use num::{BigRational, One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Ambient variable space: `m` matrix components of size `r x s`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VarSpace {
    pub m: usize,
    pub r: usize,
    pub s: usize,
}

impl VarSpace {
    pub fn new(m: usize, r: usize, s: usize) -> Self {
        VarSpace { m, r, s }
    }

    /// Single `n x n` matrix (pullback target).
    pub fn square(n: usize) -> Self {
        VarSpace { m: 1, r: n, s: n }
    }

    /// `l`-tuple of `n x n` matrices.
    pub fn square_tuple(l: usize, n: usize) -> Self {
        VarSpace { m: l, r: n, s: n }
    }
}

/// The variable `x(l)_{ij}`: entry `(i, j)` of the `l`-th matrix
/// component, all indices 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VariableId {
    pub l: u16,
    pub i: u16,
    pub j: u16,
}

impl VariableId {
    pub fn new(l: usize, i: usize, j: usize) -> Self {
        VariableId {
            l: l as u16,
            i: i as u16,
            j: j as u16,
        }
    }
}

/// A monomial: sorted variable/exponent pairs, no zero exponents.
/// Ordered by total degree, then lexicographically on the pair sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new() }
    }

    pub fn var(v: VariableId) -> Self {
        Monomial { vars: vec![(v, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(VariableId, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut vars: Vec<(VariableId, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            if let Some(last) = vars.last_mut() {
                if last.0 == v {
                    last.1 += e;
                    continue;
                }
            }
            vars.push((v, e));
        }
        Monomial { vars }
    }

    pub fn vars(&self) -> &[(VariableId, u32)] {
        &self.vars
    }

    pub fn total_degree(&self) -> usize {
        self.vars.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut pairs = self.vars.clone();
        pairs.extend_from_slice(&other.vars);
        Monomial::from_pairs(pairs)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x({})_{{{},{}}}", v.l, v.i, v.j)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients; no zero
/// coefficients are stored and terms sit in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    space: VarSpace,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePolynomial {
    pub fn zero(space: VarSpace) -> Self {
        SparsePolynomial {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: VarSpace, c: BigRational) -> Self {
        let mut p = Self::zero(space);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, BigRational::one())
    }

    pub fn var(space: VarSpace, l: usize, i: usize, j: usize) -> Result<Self> {
        if l == 0 || l > space.m || i == 0 || i > space.r || j == 0 || j > space.s {
            return Err(CoreError::DimensionMismatch(format!(
                "variable x({l})_{{{i},{j}}} outside {space:?}"
            )));
        }
        let mut p = Self::zero(space);
        p.add_term(Monomial::var(VariableId::new(l, i, j)), BigRational::one());
        Ok(p)
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SparsePolynomial {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        SparsePolynomial {
            space: self.space,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparsePolynomial {
        self.scale(&-BigRational::one())
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = Self::zero(self.space);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Largest monomial total degree (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Substitutes every variable by a polynomial in `target` space.
    pub fn substitute(
        &self,
        target: VarSpace,
        f: &dyn Fn(VariableId) -> SparsePolynomial,
    ) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(target);
        let mut image_cache: BTreeMap<VariableId, SparsePolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = SparsePolynomial::constant(target, c.clone());
            for &(v, e) in m.vars() {
                let image = image_cache.entry(v).or_insert_with(|| f(v)).clone();
                for _ in 0..e {
                    term = term.mul(&image);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact evaluation at a matrix tuple.
    pub fn evaluate(&self, pt: &MatrixTuple) -> Result<BigRational> {
        if pt.mats.len() != self.space.m || pt.rows != self.space.r || pt.cols != self.space.s {
            return Err(CoreError::DimensionMismatch(format!(
                "point ({} mats of {}x{}) vs space {:?}",
                pt.mats.len(),
                pt.rows,
                pt.cols,
                self.space
            )));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.vars() {
                let entry = &pt.mats[var.l as usize - 1][(var.i as usize - 1, var.j as usize - 1)];
                for _ in 0..e {
                    v *= entry;
                }
                if v.is_zero() {
                    break;
                }
            }
            total += v;
        }
        Ok(total)
    }

    fn monomial_weights(&self, m: &Monomial) -> (Vec<i64>, Vec<i64>) {
        let mut wr = vec![0i64; self.space.r];
        let mut ws = vec![0i64; self.space.s];
        for &(v, e) in m.vars() {
            wr[v.i as usize - 1] -= e as i64;
            ws[v.j as usize - 1] += e as i64;
        }
        (wr, ws)
    }

    /// Torus weight `(GL_r side, GL_s side)` of a homogeneous-weight
    /// polynomial; errors with the two conflicting monomials otherwise.
    pub fn torus_weight(&self) -> Result<(GLWeight, GLWeight)> {
        let mut result: Option<((Vec<i64>, Vec<i64>), &Monomial)> = None;
        for m in self.terms.keys() {
            let w = self.monomial_weights(m);
            match &result {
                None => result = Some((w, m)),
                Some((w0, m0)) => {
                    if *w0 != w {
                        return Err(CoreError::Inhomogeneous(
                            format!("{m0:?}"),
                            format!("{m:?}"),
                        ));
                    }
                }
            }
        }
        let (wr, ws) = result
            .map(|(w, _)| w)
            .unwrap_or((vec![0; self.space.r], vec![0; self.space.s]));
        Ok((GLWeight::new(wr), GLWeight::new(ws)))
    }

    /// Weight under conjugation `(S.f)(X) = f(S^-1 X S)` for square
    /// spaces: `x_{ij}` contributes `e_j - e_i`, summed over components.
    /// Only the combined weight needs to be constant across monomials.
    pub fn conjugation_weight(&self) -> Result<GLWeight> {
        if self.space.r != self.space.s {
            return Err(CoreError::DimensionMismatch(
                "conjugation weight needs a square space".into(),
            ));
        }
        let mut result: Option<(Vec<i64>, &Monomial)> = None;
        for m in self.terms.keys() {
            let mut w = vec![0i64; self.space.r];
            for &(v, e) in m.vars() {
                w[v.j as usize - 1] += e as i64;
                w[v.i as usize - 1] -= e as i64;
            }
            match &result {
                None => result = Some((w, m)),
                Some((w0, m0)) => {
                    if *w0 != w {
                        return Err(CoreError::Inhomogeneous(
                            format!("{m0:?}"),
                            format!("{m:?}"),
                        ));
                    }
                }
            }
        }
        let coords = result
            .map(|(w, _)| w)
            .unwrap_or(vec![0; self.space.r]);
        Ok(GLWeight::new(coords))
    }

    /// Occurrence counts of the component indices `1..=m`; requires a
    /// single multidegree across all terms.
    pub fn multidegree(&self) -> Result<Vec<usize>> {
        let mut result: Option<(Vec<usize>, &Monomial)> = None;
        for m in self.terms.keys() {
            let mut nu = vec![0usize; self.space.m];
            for &(v, e) in m.vars() {
                nu[v.l as usize - 1] += e as usize;
            }
            match &result {
                None => result = Some((nu, m)),
                Some((nu0, m0)) => {
                    if *nu0 != nu {
                        return Err(CoreError::Inhomogeneous(
                            format!("{m0:?}"),
                            format!("{m:?}"),
                        ));
                    }
                }
            }
        }
        Ok(result.map(|(nu, _)| nu).unwrap_or(vec![0; self.space.m]))
    }

    /// Total degree `sum_l l * nu_l` of the multidegree grading, under
    /// which component `l` carries degree `l` (matrix powers).
    pub fn graded_total_degree(&self) -> Result<usize> {
        Ok(self
            .multidegree()?
            .iter()
            .enumerate()
            .map(|(i, &n)| (i + 1) * n)
            .sum())
    }

    /// Action of the `GL_r` root generator `u_a(c)` (adds `c` times row
    /// `a+1` to row `a` before evaluating).
    pub fn act_unipotent_row(&self, a: usize, c: &BigRational) -> SparsePolynomial {
        let space = self.space;
        self.substitute(space, &|v: VariableId| {
            let mut p = SparsePolynomial::zero(space);
            p.add_term(Monomial::var(v), BigRational::one());
            if v.i as usize == a {
                p.add_term(
                    Monomial::var(VariableId::new(v.l as usize, a + 1, v.j as usize)),
                    -c.clone(),
                );
            }
            p
        })
    }

    /// Action of the `GL_s` root generator: column `j+1` picks up `c`
    /// times column `j`.
    pub fn act_unipotent_col(&self, a: usize, c: &BigRational) -> SparsePolynomial {
        let space = self.space;
        self.substitute(space, &|v: VariableId| {
            let mut p = SparsePolynomial::zero(space);
            p.add_term(Monomial::var(v), BigRational::one());
            if v.j as usize == a + 1 {
                p.add_term(
                    Monomial::var(VariableId::new(v.l as usize, v.i as usize, a)),
                    c.clone(),
                );
            }
            p
        })
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

/// Outcome of the exact unipotent-invariance check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invariance {
    Invariant,
    /// `(side, generator index, c)` whose action moved the polynomial.
    Fails {
        side: char,
        generator: usize,
        c: i64,
    },
}

impl Invariance {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Invariance::Invariant)
    }
}

/// Proves `U_r x U_s`-invariance of a homogeneous polynomial: for every
/// root generator, `u(c) . p - p` is a polynomial in `c` of degree at most
/// `deg(p)`, so exact vanishing at `c = 1, ..., deg(p) + 1` is an identity
/// proof, not sampling.
pub fn unipotent_invariance_proof(p: &SparsePolynomial) -> Result<Invariance> {
    if !p.is_homogeneous() {
        return Err(CoreError::Precondition(
            "invariance proof needs a homogeneous polynomial".into(),
        ));
    }
    let deg = p.degree();
    let space = p.space();
    for a in 1..space.r {
        for c in 1..=(deg as i64 + 1) {
            let cr = BigRational::from_integer(c.into());
            if !p.act_unipotent_row(a, &cr).sub(p).is_zero() {
                return Ok(Invariance::Fails {
                    side: 'r',
                    generator: a,
                    c,
                });
            }
        }
    }
    for a in 1..space.s {
        for c in 1..=(deg as i64 + 1) {
            let cr = BigRational::from_integer(c.into());
            if !p.act_unipotent_col(a, &cr).sub(p).is_zero() {
                return Ok(Invariance::Fails {
                    side: 's',
                    generator: a,
                    c,
                });
            }
        }
    }
    Ok(Invariance::Invariant)
}

/// A tuple of rational matrices sharing dimensions, the evaluation points
/// of the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple {
    pub rows: usize,
    pub cols: usize,
    pub mats: Vec<RatMatrix>,
}

impl MatrixTuple {
    pub fn new(rows: usize, cols: usize, mats: Vec<RatMatrix>) -> Result<Self> {
        for m in &mats {
            if m.rows != rows || m.cols != cols {
                return Err(CoreError::DimensionMismatch(format!(
                    "component is {}x{}, expected {rows}x{cols}",
                    m.rows, m.cols
                )));
            }
        }
        Ok(MatrixTuple { rows, cols, mats })
    }

    pub fn zero(rows: usize, cols: usize, m: usize) -> Self {
        MatrixTuple {
            rows,
            cols,
            mats: vec![RatMatrix::zero(rows, cols); m],
        }
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(2))?;
        map.serialize_entry("vars", &self.space)?;
        struct Terms<'a>(&'a SparsePolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                ser: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = ser.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in &self.0.terms {
                    let monomial: Vec<[u32; 4]> = m
                        .vars()
                        .iter()
                        .map(|&(v, e)| [v.l as u32, v.i as u32, v.j as u32, e])
                        .collect();
                    #[derive(Serialize)]
                    struct Term {
                        coeff: String,
                        monomial: Vec<[u32; 4]>,
                    }
                    seq.serialize_element(&Term {
                        coeff: c.to_string(),
                        monomial,
                    })?;
                }
                seq.end()
            }
        }
        map.serialize_entry("terms", &Terms(self))?;
        map.end()
    }
}

/// Parses the canonical JSON polynomial format.
pub fn polynomial_from_json(value: &serde_json::Value) -> Result<SparsePolynomial> {
    let bad = |msg: &str| CoreError::Precondition(format!("polynomial JSON: {msg}"));
    let vars = value.get("vars").ok_or_else(|| bad("missing vars"))?;
    let get_dim = |k: &str| -> Result<usize> {
        vars.get(k)
            .and_then(|v| v.as_u64())
            .map(|v| v as usize)
            .ok_or_else(|| bad(&format!("missing vars.{k}")))
    };
    let space = VarSpace::new(get_dim("m")?, get_dim("r")?, get_dim("s")?);
    let mut p = SparsePolynomial::zero(space);
    let terms = value
        .get("terms")
        .and_then(|v| v.as_array())
        .ok_or_else(|| bad("missing terms"))?;
    for term in terms {
        let coeff_str = term
            .get("coeff")
            .and_then(|v| v.as_str())
            .ok_or_else(|| bad("missing coeff"))?;
        let coeff: BigRational = coeff_str
            .parse()
            .map_err(|_| bad(&format!("bad coefficient {coeff_str:?}")))?;
        let vars = term
            .get("monomial")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("missing monomial"))?;
        let mut pairs = Vec::new();
        for v in vars {
            let quad = v.as_array().filter(|a| a.len() == 4).ok_or_else(|| {
                bad("monomial entries must be [l, i, j, exp] quadruples")
            })?;
            let nums: Vec<u64> = quad
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| bad("non-integer index")))
                .collect::<Result<_>>()?;
            if nums[0] == 0 || nums[0] as usize > space.m {
                return Err(bad(&format!("component index {} out of range", nums[0])));
            }
            if nums[1] == 0 || nums[1] as usize > space.r || nums[2] == 0 || nums[2] as usize > space.s {
                return Err(bad(&format!("entry ({},{}) out of range", nums[1], nums[2])));
            }
            pairs.push((
                VariableId::new(nums[0] as usize, nums[1] as usize, nums[2] as usize),
                nums[3] as u32,
            ));
        }
        p.add_term(Monomial::from_pairs(pairs), coeff);
    }
    Ok(p)
}
