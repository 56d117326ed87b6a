//! Exhaustive enumeration of vote-count vectors and ordered vote sequences.

/// Every vector of `m` non-negative integers summing to `n`, in
/// lexicographically decreasing order of the first entries (i.e. `(n,0,..)`
/// first).
pub fn compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; m];
    fill(n, 0, &mut cur, &mut out);
    out
}

fn fill(rest: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(cur.clone());
        return;
    }
    for v in (0..=rest).rev() {
        cur[pos] = v;
        fill(rest - v, pos + 1, cur, out);
    }
}

/// Number of ordered sequences of length `n` over `m` symbols, or `None` on
/// overflow.
pub fn sequence_count(m: usize, n: usize) -> Option<usize> {
    let mut total: usize = 1;
    for _ in 0..n {
        total = total.checked_mul(m)?;
    }
    Some(total)
}

/// The `index`-th sequence of length `n` over `0..m` in lexicographic order.
pub fn sequence_at(mut index: usize, m: usize, n: usize) -> Vec<usize> {
    let mut seq = vec![0; n];
    for slot in seq.iter_mut().rev() {
        *slot = index % m;
        index /= m;
    }
    seq
}

/// One representative sequence (sorted ascending) for a count vector.
pub fn sequence_from_counts(counts: &[usize]) -> Vec<usize> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat(k).take(c))
        .collect()
}

/// Tally of a sequence over `m` symbols.
pub fn tally(seq: &[usize], m: usize) -> Vec<usize> {
    let mut counts = vec![0; m];
    for &a in seq {
        counts[a] += 1;
    }
    counts
}
