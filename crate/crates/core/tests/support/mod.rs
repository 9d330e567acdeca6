//! Independent oracles used only by the test suite: hook lengths, the
//! Weyl dimension formula, the lattice-word Littlewood-Richardson rule,
//! and Kostka-Foulkes polynomials via the q-analog Kostant partition
//! formula. None of these share code paths with the implementations they
//! check.

use hwv_core::charge::{reading_word, QPoly};
use hwv_core::partition::Partition;
use hwv_core::skew::SkewDiagram;
use hwv_core::tableau::{enumerate_tableaux, Flavor};
use std::collections::HashMap;

/// Number of standard tableaux by the hook length formula.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let t = lambda.size();
    if t == 0 {
        return 1;
    }
    let transpose = lambda.transpose();
    let mut hooks: u128 = 1;
    for (i, j) in lambda.cells() {
        let arm = lambda.row_len(i) - j;
        let leg = transpose.row_len(j) - i;
        hooks *= (arm + leg + 1) as u128;
    }
    let factorial: u128 = (1..=t as u128).product();
    factorial / hooks
}

/// Dimension of the irreducible GL_m module of highest weight `hw`
/// (padded with zeros), by the Weyl dimension formula.
pub fn weyl_dimension(hw: &Partition, m: usize) -> u128 {
    assert!(hw.len() <= m, "highest weight too long for GL_{m}");
    let h: Vec<i128> = (1..=m).map(|i| hw.row_len(i) as i128).collect();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..m {
        for j in i + 1..m {
            num *= h[i] - h[j] + (j - i) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as u128
}

/// Littlewood-Richardson coefficient `c^lambda_{kappa mu}` by the
/// lattice-word rule: semi-standard fillings of `lambda/kappa` of weight
/// `mu` whose right-to-left reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, kappa: &Partition, mu: &Partition) -> usize {
    if !lambda.contains(kappa) || lambda.size() != kappa.size() + mu.size() {
        return 0;
    }
    let shape = match SkewDiagram::new(lambda.clone(), kappa.clone()) {
        Ok(s) => s,
        Err(_) => return 0,
    };
    let mut weight = mu.parts().to_vec();
    let max_entry = mu.len().max(1);
    weight.resize(max_entry, 0);
    enumerate_tableaux(&shape, Flavor::Semistandard, Some(&weight), max_entry)
        .into_iter()
        .filter(|t| {
            let word = reading_word(t);
            let mut counts = vec![0i64; max_entry + 1];
            for &x in &word {
                counts[x as usize] += 1;
                if x > 1 && counts[x as usize] > counts[x as usize - 1] {
                    return false;
                }
            }
            true
        })
        .count()
}

/// `K_{lambda,mu}(q)` by the q-analog Kostant partition formula over the
/// Weyl group of GL_n: `sum_w sgn(w) P_q(w(lambda + delta) - (mu + delta))`.
pub fn q_kostant_kostka(lambda: &Partition, mu: &Partition, n: usize) -> QPoly {
    assert!(lambda.len() <= n && mu.len() <= n);
    assert_eq!(lambda.size(), mu.size());
    let delta: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let lam_rho: Vec<i64> = (0..n)
        .map(|i| lambda.row_len(i + 1) as i64 + delta[i])
        .collect();
    let mu_rho: Vec<i64> = (0..n)
        .map(|i| mu.row_len(i + 1) as i64 + delta[i])
        .collect();
    // Positive roots e_i - e_j for i < j, ordered so that all roots
    // touching coordinate i come before those starting later; once the
    // roots starting at i are exhausted, coordinate i is frozen.
    let roots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut memo: HashMap<(usize, Vec<i64>), QPoly> = HashMap::new();
    let mut total = QPoly::zero();
    for w in hwv_core::perm::symmetric_group(n) {
        let beta: Vec<i64> = (0..n)
            .map(|i| lam_rho[w.apply(i as u32 + 1) as usize - 1] - mu_rho[i])
            .collect();
        let part = q_partition(&beta, 0, &roots, &mut memo);
        let sign = w.sign();
        for (&deg, &c) in part.coeffs() {
            total.add_term(deg, sign * c);
        }
    }
    total
}

fn q_partition(
    beta: &[i64],
    idx: usize,
    roots: &[(usize, usize)],
    memo: &mut HashMap<(usize, Vec<i64>), QPoly>,
) -> QPoly {
    if idx == roots.len() {
        return if beta.iter().all(|&b| b == 0) {
            QPoly::one()
        } else {
            QPoly::zero()
        };
    }
    // Coordinates before the current root's start are frozen.
    let (i, j) = roots[idx];
    if beta[..i].iter().any(|&b| b != 0) {
        return QPoly::zero();
    }
    let key = (idx, beta.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let mut out = QPoly::zero();
    // k copies of e_i - e_j; beta_i must end at zero, so k <= beta_i when
    // this is the last root starting at i is enforced by the freeze check.
    let maxk = beta[i].max(0) + beta.iter().map(|b| b.abs()).sum::<i64>();
    let mut current = beta.to_vec();
    for k in 0..=maxk {
        if k > 0 {
            current[i] -= 1;
            current[j] += 1;
        }
        if current[i] < 0 {
            break;
        }
        let sub = q_partition(&current, idx + 1, roots, memo);
        for (&deg, &c) in sub.coeffs() {
            out.add_term(deg + k as usize, c);
        }
    }
    memo.insert(key, out.clone());
    out
}

/// All dominant sum-zero weights `[lambda, mu]` of length `n` with
/// `|lambda| = |mu| = t`.
pub fn bracket_weights(n: usize, t: usize) -> Vec<hwv_core::partition::GLWeight> {
    let mut out = Vec::new();
    for lambda in Partition::all(t) {
        for mu in Partition::all(t) {
            if lambda.len() + mu.len() <= n {
                out.push(
                    hwv_core::partition::GLWeight::bracket(&lambda, &mu, n).unwrap(),
                );
            }
        }
    }
    out
}
