//! Bitmask helpers for subsets of `[n]`.
//!
//! Vertex `v` (1-based) lives at bit `v - 1`.

/// Mask of the full vertex set `[n]`.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn popcount(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// 1-based vertex list of a mask, ascending.
pub fn to_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(popcount(mask));
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        out.push(bit + 1);
        m &= m - 1;
    }
    out
}

/// 0-based bit positions of a mask, ascending.
pub fn bit_positions(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let bit = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(bit)
        }
    })
}

/// Mask of a list of 1-based vertices. Caller checks the range.
pub fn from_vertices(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |acc, &v| acc | (1u64 << (v - 1)))
}

/// All submasks of `mask`, in ascending numeric order (includes 0 and `mask`).
pub fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1usize << popcount(mask).min(30));
    let mut sub = 0u64;
    loop {
        out.push(sub);
        if sub == mask {
            break;
        }
        // next submask in increasing order
        sub = (sub.wrapping_sub(mask)) & mask;
    }
    out
}

/// All `k`-subsets of `[n]`, ascending numerically (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = full_mask(n);
    let mut out = Vec::new();
    let mut x: u64 = (1u64 << k) - 1;
    loop {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        if r == 0 || r > limit {
            break;
        }
        let next = (((r ^ x) >> 2) / c) | r;
        if next > limit {
            break;
        }
        x = next;
    }
    out
}

/// Number of elements of `mask` strictly smaller than bit `bit`.
#[inline]
pub fn rank_below(mask: u64, bit: usize) -> usize {
    popcount(mask & ((1u64 << bit) - 1))
}

/// Sign `(-1)^k` as an `i64`.
#[inline]
pub fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Lexicographic comparison of two masks viewed as sorted vertex lists.
pub fn lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    let (mut x, mut y) = (a, b);
    loop {
        match (x == 0, y == 0) {
            (true, true) => return std::cmp::Ordering::Equal,
            (true, false) => return std::cmp::Ordering::Less,
            (false, true) => return std::cmp::Ordering::Greater,
            _ => {}
        }
        let (bx, by) = (x.trailing_zeros(), y.trailing_zeros());
        if bx != by {
            return bx.cmp(&by);
        }
        x &= x - 1;
        y &= y - 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_counts_match_binomials() {
        for n in 0..=10 {
            for k in 0..=n {
                let subs = subsets_of_size(n, k);
                let expected = (0..(1u64 << n)).filter(|m| popcount(*m) == k).count();
                assert_eq!(subs.len(), expected, "n={n} k={k}");
                assert!(subs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn submask_enumeration() {
        let m = 0b10110;
        let subs = submasks(m);
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s & !m == 0));
        assert_eq!(submasks(0), vec![0]);
    }

    #[test]
    fn lex_order_on_vertex_lists() {
        // {1,3} < {2} because 1 < 2
        assert_eq!(lex_cmp(0b101, 0b010), std::cmp::Ordering::Less);
        // {1} < {1,2}
        assert_eq!(lex_cmp(0b001, 0b011), std::cmp::Ordering::Less);
        assert_eq!(to_vertices(0b1010), vec![2, 4]);
        assert_eq!(from_vertices(&[2, 4]), 0b1010);
    }
}
