//! Permutations of `{1, ..., t}`.

use crate::error::{CoreError, Result};
use std::fmt;

/// A permutation stored by its images: `images[i]` is the image of `i + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(t: usize) -> Self {
        Permutation {
            images: (1..=t as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let t = images.len();
        let mut seen = vec![false; t];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > t || seen[v - 1] {
                return Err(CoreError::InvalidMapping(format!(
                    "not a bijection of 1..={t}: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition swapping `a` and `b` inside `Sym_t`.
    pub fn transposition(t: usize, a: u32, b: u32) -> Self {
        let mut images: Vec<u32> = (1..=t as u32).collect();
        images.swap(a as usize - 1, b as usize - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1]
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.images.len()];
        let mut sign = 1i64;
        for start in 0..self.images.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = self.images[cur] as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// Cycle type as a partition of `t`.
    pub fn cycle_type(&self) -> crate::partition::Partition {
        let mut visited = vec![false; self.images.len()];
        let mut lens = Vec::new();
        for start in 0..self.images.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = self.images[cur] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        crate::partition::Partition::new(lens).expect("sorted descending")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{:?}", self.images)
    }
}

/// All of `Sym_t` in lexicographic order of image vectors.
pub fn symmetric_group(t: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u32> = Vec::with_capacity(t);
    let mut used = vec![false; t];
    fn rec(t: usize, images: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if images.len() == t {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for v in 1..=t as u32 {
            if !used[v as usize - 1] {
                used[v as usize - 1] = true;
                images.push(v);
                rec(t, images, used, out);
                images.pop();
                used[v as usize - 1] = false;
            }
        }
    }
    rec(t, &mut images, &mut used, &mut out);
    out
}

/// All permutations of `Sym_t` stabilizing each of the given disjoint
/// blocks of values (the Young-subgroup pattern).
pub fn block_stabilizer(t: usize, blocks: &[Vec<u32>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(t)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let arrangements = permutations_of(block);
        let mut next = Vec::with_capacity(out.len() * arrangements.len());
        for base in &out {
            for arr in &arrangements {
                // Blocks are disjoint, so the base is identity here.
                let mut images = base.images.clone();
                for (k, &pos) in block.iter().enumerate() {
                    images[pos as usize - 1] = arr[k];
                }
                next.push(Permutation { images });
            }
        }
        out = next;
    }
    out
}

fn permutations_of(values: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(values.len());
    let mut used = vec![false; values.len()];
    fn rec(
        values: &[u32],
        current: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == values.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..values.len() {
            if !used[i] {
                used[i] = true;
                current.push(values[i]);
                rec(values, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(values, &mut current, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        for p in symmetric_group(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
    }

    #[test]
    fn sign_multiplicative() {
        let g = symmetric_group(4);
        for p in &g {
            for q in &g {
                assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
            }
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(symmetric_group(0).len(), 1);
        assert_eq!(symmetric_group(4).len(), 24);
    }

    #[test]
    fn block_stabilizer_sizes() {
        let st = block_stabilizer(5, &[vec![1, 2, 3], vec![4, 5]]);
        assert_eq!(st.len(), 12);
        for p in &st {
            for &v in &[1u32, 2, 3] {
                assert!(p.apply(v) <= 3);
            }
            for &v in &[4u32, 5] {
                assert!(p.apply(v) >= 4);
            }
        }
    }

    #[test]
    fn cycle_types() {
        use crate::partition::Partition;
        let p = Permutation::from_images(vec![2, 3, 1, 5, 4]).unwrap();
        assert_eq!(p.cycle_type(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(p.sign(), -1);
    }
}
