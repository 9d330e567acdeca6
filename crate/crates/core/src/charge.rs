//! The charge statistic and Kostka-Foulkes polynomials.
//!
//! Reading convention: the word of a tableau is obtained by reading each
//! row from right to left, rows top to bottom. For a standard word the
//! index of 1 is 0 and the index of `r + 1` is the index of `r` plus one
//! exactly when `r + 1` stands to the left of `r`; charge is the sum of
//! the indices. A word of partition weight is decomposed into standard
//! subwords: starting from the leftmost 1, each next larger letter is
//! found scanning rightward cyclically; the subword is scored in word
//! order and removed, and charge adds up over the rounds. This
//! normalization makes the superstandard tableau (row `i` filled with
//! `i`) have charge 0 and the single-row tableau `1 2 ... n` have charge
//! `n(n-1)/2`.

use crate::error::{CoreError, Result};
use crate::partition::Partition;
use crate::skew::SkewDiagram;
use crate::tableau::{enumerate_tableaux, Flavor, Tableau};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in one variable `q` with integer coefficients, stored
/// sparsely by degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<usize, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(degree: usize, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(degree, coeff);
        }
        QPoly { coeffs }
    }

    pub fn add_term(&mut self, degree: usize, coeff: i64) {
        let entry = self.coeffs.entry(degree).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn highest_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `q^shift * self(1/q)`; errors if a term would get negative degree.
    pub fn reverse(&self, shift: usize) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (&d, &c) in &self.coeffs {
            if d > shift {
                return Err(CoreError::Precondition(format!(
                    "reversal shift {shift} below top degree {d}"
                )));
            }
            out.add_term(shift - d, c);
        }
        Ok(out)
    }

    pub fn nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = ser.serialize_map(Some(1))?;
        let pairs: Vec<(usize, i64)> = self.coeffs.iter().map(|(&d, &c)| (d, c)).collect();
        map.serialize_entry("coeffs", &pairs)?;
        map.end()
    }
}

/// Reading word of a tableau: rows right to left, top to bottom.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    let mut word = Vec::with_capacity(t.num_cells());
    for row in t.rows() {
        word.extend(row.iter().rev());
    }
    word
}

fn weight_of_word(word: &[u32]) -> Vec<usize> {
    let m = word.iter().copied().max().unwrap_or(0) as usize;
    let mut w = vec![0usize; m];
    for &x in word {
        w[x as usize - 1] += 1;
    }
    w
}

/// Charge of a word whose weight is a partition.
pub fn charge_word(word: &[u32]) -> Result<usize> {
    let weight = weight_of_word(word);
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(CoreError::Precondition(format!(
            "word weight {weight:?} is not a partition"
        )));
    }
    let mut remaining: Vec<u32> = word.to_vec();
    let mut total = 0usize;
    while !remaining.is_empty() {
        // Extract one standard subword: start at the leftmost 1, then
        // repeatedly take the next larger letter scanning rightward and
        // wrapping cyclically.
        let n = remaining.len();
        let Some(first) = remaining.iter().position(|&x| x == 1) else {
            return Err(CoreError::Precondition(
                "extraction stalled; weight not a partition".into(),
            ));
        };
        let mut picked: Vec<usize> = vec![first];
        let mut target = 2u32;
        let mut cur = first;
        loop {
            if !remaining.contains(&target) {
                break;
            }
            let mut found = None;
            for step in 1..n {
                let idx = (cur + step) % n;
                if remaining[idx] == target {
                    found = Some(idx);
                    break;
                }
            }
            match found {
                Some(idx) => {
                    picked.push(idx);
                    cur = idx;
                    target += 1;
                }
                None => break,
            }
        }
        let mut subword_positions = picked.clone();
        subword_positions.sort_unstable();
        let subword: Vec<u32> = subword_positions.iter().map(|&i| remaining[i]).collect();
        total += charge_standard(&subword);
        let mut keep = Vec::with_capacity(n - picked.len());
        for (i, &x) in remaining.iter().enumerate() {
            if !subword_positions.contains(&i) {
                keep.push(x);
            }
        }
        remaining = keep;
    }
    Ok(total)
}

/// Charge of a standard word (one occurrence of each of `1..=k`).
fn charge_standard(word: &[u32]) -> usize {
    let k = word.len();
    let mut position = vec![0usize; k + 1];
    for (i, &x) in word.iter().enumerate() {
        position[x as usize] = i;
    }
    let mut index = 0usize;
    let mut total = 0usize;
    for r in 2..=k {
        if position[r] < position[r - 1] {
            index += 1;
        }
        total += index;
    }
    total
}

/// Charge of a tableau with partition weight.
pub fn charge(t: &Tableau) -> Result<usize> {
    charge_word(&reading_word(t))
}

/// The Kostka-Foulkes polynomial `K_{lambda,mu}(q)`: the charge generating
/// function over semi-standard tableaux of shape `lambda` and weight `mu`.
pub fn kostka_polynomial(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(CoreError::SizeMismatch(format!(
            "Kostka polynomial needs |{lambda}| = |{mu}|"
        )));
    }
    let shape = SkewDiagram::straight(lambda.clone());
    let mut weight = mu.parts().to_vec();
    let max_entry = mu.len().max(1);
    weight.resize(max_entry, 0);
    let mut poly = QPoly::zero();
    if lambda.is_empty() {
        return Ok(QPoly::one());
    }
    for t in enumerate_tableaux(&shape, Flavor::Semistandard, Some(&weight), max_entry) {
        poly.add_term(charge(&t)?, 1);
    }
    Ok(poly)
}

/// `~K_{lambda,mu}(q) = q^{n(mu)} K_{lambda,mu}(1/q)`, the cocharge
/// normalization.
pub fn kostka_tilde(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    kostka_polynomial(lambda, mu)?.reverse(mu.n_stat())
}

/// Kostka number `K_{lambda,w}` for an arbitrary nonnegative weight vector
/// `w` (not necessarily a partition): the number of semi-standard tableaux
/// of shape `lambda` and weight `w`.
pub fn kostka_number(lambda: &Partition, weight: &[usize]) -> usize {
    if lambda.size() != weight.iter().sum::<usize>() {
        return 0;
    }
    if lambda.is_empty() {
        return 1;
    }
    let shape = SkewDiagram::straight(lambda.clone());
    enumerate_tableaux(&shape, Flavor::Semistandard, Some(weight), weight.len()).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn charge_superstandard_is_zero() {
        for lambda in [p(&[3, 2]), p(&[4, 2, 1]), p(&[2, 2, 2])] {
            let rows: Vec<Vec<u32>> = lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i as u32 + 1; len])
                .collect();
            let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
            let t = Tableau::from_rows(&refs).unwrap();
            assert_eq!(charge(&t).unwrap(), 0);
            assert_eq!(kostka_polynomial(&lambda, &lambda).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn charge_single_row_word() {
        for n in 1..=6u32 {
            let row: Vec<u32> = (1..=n).collect();
            let t = Tableau::from_rows(&[&row]).unwrap();
            assert_eq!(charge(&t).unwrap(), (n as usize) * (n as usize - 1) / 2);
        }
    }

    #[test]
    fn kostka_21_111() {
        let k = kostka_polynomial(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap();
        let mut expected = QPoly::zero();
        expected.add_term(1, 1);
        expected.add_term(2, 1);
        assert_eq!(k, expected);
        assert_eq!(k.eval_one(), 2);
    }

    #[test]
    fn kostka_values_match_counts() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let kp = kostka_polynomial(&lambda, &mu).unwrap();
                    let count = kostka_number(&lambda, mu.parts());
                    assert_eq!(kp.eval_one() as usize, count, "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn kostka_tilde_nonnegative() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    if kostka_number(&lambda, mu.parts()) > 0 {
                        let kt = kostka_tilde(&lambda, &mu).unwrap();
                        assert!(kt.nonnegative(), "{lambda} {mu} {kt:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_partition_weight_rejected() {
        let t = Tableau::from_rows(&[&[2, 2], &[3]]).unwrap();
        assert!(charge(&t).is_err());
    }

    #[test]
    fn known_kostka_foulkes_values() {
        // K_{(n),(1^n)} = q^{n(n-1)/2}
        for n in 2..=5 {
            let k = kostka_polynomial(&p(&[n]), &Partition::column(n)).unwrap();
            assert_eq!(k, QPoly::monomial(n * (n - 1) / 2, 1));
        }
        // K_{(2,2),(1^4)} = q^2 + q^4
        let k = kostka_polynomial(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap();
        let mut expected = QPoly::zero();
        expected.add_term(2, 1);
        expected.add_term(4, 1);
        assert_eq!(k, expected);
        // K_{(3,1),(1^4)} = q^3 + q^4 + q^5 (cocharge form q + q^2 + q^3)
        let k = kostka_polynomial(&p(&[3, 1]), &p(&[1, 1, 1, 1])).unwrap();
        let mut expected = QPoly::zero();
        expected.add_term(3, 1);
        expected.add_term(4, 1);
        expected.add_term(5, 1);
        assert_eq!(k, expected);
        // K_{(2,2),(2,1,1)} = q: monic of degree n(mu) - n(lambda) = 1
        let k = kostka_polynomial(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap();
        assert_eq!(k, QPoly::monomial(1, 1));
    }

    #[test]
    fn transpose_duality_for_standard_weight() {
        // K_{lambda',1^n}(q) = q^{binom(n,2)} K_{lambda,1^n}(1/q)
        for n in 2..=5 {
            for lambda in Partition::all(n) {
                let k = kostka_polynomial(&lambda, &Partition::column(n)).unwrap();
                let kt = kostka_polynomial(&lambda.transpose(), &Partition::column(n)).unwrap();
                assert_eq!(k.reverse(n * (n - 1) / 2).unwrap(), kt, "{lambda}");
            }
        }
    }
}
