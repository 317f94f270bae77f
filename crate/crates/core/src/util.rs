//! Small combinatorial helpers.

use crate::graph::VertexSet;

/// All subsets of `0..n` with at most `k` elements, by size then lexicographically.
pub fn subsets_up_to(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    (0..=k.min(n)).flat_map(move |size| subsets_of_size(n, size))
}

/// All `size`-element subsets of `0..n` in lexicographic order of their sorted elements.
pub fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let out: VertexSet = cur.iter().copied().collect();
        // Advance to the next combination.
        let mut i = size;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if cur[i] < n - size + i {
                cur[i] += 1;
                for j in i + 1..size {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Runs `f` on a dedicated rayon pool with `threads` workers (0 picks the rayon default).
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        let all: Vec<Vec<usize>> = subsets_up_to(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all.len(), 1 + 4 + 6);
        assert_eq!(all[0], Vec::<usize>::new());
        assert_eq!(all[5], vec![0, 1]);
        assert_eq!(all[10], vec![2, 3]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(0, 0).count(), 1);
    }
}
