/// All partitions of `k` into positive parts, each non-increasing, in
/// reverse lexicographic order (`[k]` first, all ones last).
pub fn integer_partitions(k: usize) -> Vec<Vec<usize>> {
    partitions_bounded(k, k, 1)
}

/// Partitions of `k` with every part in `min_part..=max_part`.
pub fn partitions_bounded(k: usize, max_part: usize, min_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fill(k, max_part, min_part, &mut Vec::new(), &mut out);
    out
}

fn fill(rest: usize, max_part: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (min_part..=max_part.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, min_part, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `k`, by counting parts up to each size.
pub fn partition_count(k: usize) -> u64 {
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            ways[total] += ways[total - part];
        }
    }
    ways[k]
}
