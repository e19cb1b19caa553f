//! Conventions shared by every Koszul-type complex in the crate.
//!
//! Basis elements of the `p`-th strand are strictly increasing index lists
//! `e_{j1 < ... < jp}`. The differential is
//!
//! ```text
//! d(e_{j1..jp}) = sum_t (-1)^(t+1) g_{jt} e_{j1..^jt..jp}     (t = 1..p)
//! ```
//!
//! The Koszul complex of `A` on the partials of `f` and the De Rham complex of
//! `R_f` both use this, so the theta map compares boundaries on the nose.

/// Sign of the term dropping the index at 0-based `position`.
pub const fn koszul_sign(position: usize) -> i64 {
    if position.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `k`-element subsets of `0..n` as increasing lists, in lexicographic
/// order. This order fixes the component order of every strand.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill(n, k, 0, &mut current, &mut out);
    out
}

fn fill(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in start..n {
        if n - i < k - current.len() {
            break;
        }
        current.push(i);
        fill(n, k, i + 1, current, out);
        current.pop();
    }
}

/// Index of `subset` among `subsets(n, subset.len())`.
pub fn subset_index(n: usize, subset: &[usize]) -> usize {
    subsets(n, subset.len())
        .iter()
        .position(|s| s == subset)
        .expect("subset of 0..n")
}

/// `subset` with the element at `position` removed.
pub fn drop_at(subset: &[usize], position: usize) -> Vec<usize> {
    let mut s = subset.to_vec();
    s.remove(position);
    s
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
