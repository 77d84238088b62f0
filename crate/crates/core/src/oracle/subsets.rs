//! k-subsets of `0..m` as bitmasks, in colexicographic order.

pub(crate) struct SubsetIndex {
    binom: Vec<Vec<usize>>,
}

impl SubsetIndex {
    pub fn new(m: usize) -> Self {
        let mut binom = vec![vec![0usize; m + 2]; m + 2];
        for a in 0..m + 2 {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = binom[a - 1][b - 1] + if b < a { binom[a - 1][b] } else { 0 };
            }
        }
        SubsetIndex { binom }
    }

    pub fn count(&self, m: usize, k: usize) -> usize {
        if k > m {
            0
        } else {
            self.binom[m][k]
        }
    }

    /// Position of `mask` among subsets of the same size in colex order.
    pub fn rank(&self, mut mask: u32) -> usize {
        let mut r = 0;
        let mut j = 1;
        while mask != 0 {
            let s = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            if s >= j {
                r += self.binom[s][j];
            }
            j += 1;
        }
        r
    }
}

/// All k-subsets of `0..m`, in increasing numeric (= colex) order.
pub(crate) fn subsets(m: usize, k: usize) -> Vec<u32> {
    assert!(m < 32);
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut x: u32 = (1u32 << k) - 1;
    let limit: u64 = 1u64 << m;
    while (x as u64) < limit {
        out.push(x);
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
        if r == 0 {
            break;
        }
    }
    out
}

/// Elements of a mask in increasing order.
pub(crate) fn elements(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let s = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(s)
    })
}
