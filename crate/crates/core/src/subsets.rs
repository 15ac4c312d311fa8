//! Lexicographic enumeration of fixed-size index subsets.

use alloc::vec::Vec;

/// Calls `visit` on every `size`-subset of `0..n` (as sorted indices) in
/// lexicographic order until it returns `true`. Returns whether it did.
pub(crate) fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if size > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `sum_{i <= max_size} C(n, i)`, saturating.
pub(crate) fn count_up_to(n: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=max_size.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    total
}
