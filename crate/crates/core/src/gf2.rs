//! Ranks of matrices over the two-element field.
//!
//! Matrices are given column-wise, each column as the sorted list of row
//! indices holding a one.

/// Rank by Gaussian elimination on packed bit rows.
pub fn rank_dense(rows: usize, columns: &[Vec<usize>]) -> usize {
    let words = rows.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut bits = vec![0u64; words];
        for &r in col {
            bits[r / 64] ^= 1 << (r % 64);
        }
        loop {
            let Some(top) = highest_bit(&bits) else { break };
            match &pivots[top] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[top] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Rank by column reduction on sparse columns, keyed by lowest one.
pub fn rank_sparse(rows: usize, columns: &[Vec<usize>]) -> usize {
    let mut owner: Vec<Option<Vec<usize>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut cur = col.clone();
        while let Some(&low) = cur.last() {
            match &owner[low] {
                Some(p) => cur = symmetric_difference(&cur, p),
                None => {
                    owner[low] = Some(cur);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let cols = vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![]];
        assert_eq!(rank_dense(3, &cols), 2);
        assert_eq!(rank_sparse(3, &cols), 2);
        let id: Vec<Vec<usize>> = (0..130).map(|i| vec![i]).collect();
        assert_eq!(rank_dense(130, &id), 130);
        assert_eq!(rank_sparse(130, &id), 130);
    }

    #[test]
    fn dense_and_sparse_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..90);
            let ncols = rng.gen_range(0..90);
            let cols: Vec<Vec<usize>> = (0..ncols)
                .map(|_| (0..rows).filter(|_| rng.gen_bool(0.1)).collect())
                .collect();
            assert_eq!(rank_dense(rows, &cols), rank_sparse(rows, &cols));
        }
    }
}
