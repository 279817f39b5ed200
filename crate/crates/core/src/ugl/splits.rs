//! Signed splits of words, the components `Δ_{k,m−k}` of the exterior coproduct.

use itertools::Itertools;

use crate::error::{Error, Result};

/// One split `(I_(1), I_(2))` of a word with its signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split<T> {
    pub left: Vec<T>,
    pub right: Vec<T>,
    pub sign: i8,
}

/// All `C(m,k)` splits of step `(k, m−k)`, each subword keeping the original
/// relative order, in lexicographic order of the chosen positions. The sign
/// is that of the shuffle permutation `σ` with `σ(1)<⋯<σ(k)`,
/// `σ(k+1)<⋯<σ(m)`.
pub fn signed_splits<T: Clone + PartialEq>(w: &[T], k: usize) -> Result<Vec<Split<T>>> {
    for (a, x) in w.iter().enumerate() {
        if w[a + 1..].contains(x) {
            return Err(Error::DuplicateEntry);
        }
    }
    Ok(position_splits(w.len(), k)?
        .into_iter()
        .map(|(l, r, sign)| Split {
            left: l.iter().map(|&i| w[i].clone()).collect(),
            right: r.iter().map(|&i| w[i].clone()).collect(),
            sign,
        })
        .collect())
}

/// `(left positions, right positions, sign)`.
pub type PositionSplit = (Vec<usize>, Vec<usize>, i8);

/// Splits of the positions `0..m` into a chosen `k`-subset and its
/// complement, with the shuffle sign.
pub fn position_splits(m: usize, k: usize) -> Result<Vec<PositionSplit>> {
    if k > m {
        return Err(Error::Range(format!("split step {k} exceeds word length {m}")));
    }
    Ok((0..m)
        .combinations(k)
        .map(|left| {
            let right: Vec<usize> = (0..m).filter(|i| !left.contains(i)).collect();
            // inversions: pairs (l in left, r in right) with l > r
            let inv: usize = left.iter().map(|&l| right.iter().filter(|&&r| r < l).count()).sum();
            (left, right, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect())
}
