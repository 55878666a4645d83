//! Fork-join over independent chunks. With the `parallel` feature the chunks
//! run on the rayon pool; without it they run in order on the caller's
//! thread. Either way the output vector is in chunk order, so any reduction
//! the caller performs is deterministic.

#[cfg(feature = "parallel")]
pub(crate) fn map_chunks<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_chunks<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

/// Whether this build runs chunks concurrently.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Splits `[lo, hi)` into `parts` contiguous ranges whose lengths differ by
/// at most one. Empty ranges are kept so the result always has `parts`
/// entries.
pub fn split_range(lo: u64, hi: u64, parts: usize) -> Vec<(u64, u64)> {
    assert!(parts >= 1 && lo <= hi);
    let len = (hi - lo) as u128;
    let bound = |k: usize| lo + (len * k as u128 / parts as u128) as u64;
    (0..parts).map(|k| (bound(k), bound(k + 1))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_covers_range() {
        let parts = split_range(1, 1 << 12, 7);
        assert_eq!(parts.len(), 7);
        assert_eq!(parts[0].0, 1);
        assert_eq!(parts[6].1, 1 << 12);
        for w in parts.windows(2) {
            assert_eq!(w[0].1, w[1].0);
        }
        let lens: Vec<u64> = parts.iter().map(|(a, b)| b - a).collect();
        assert!(lens.iter().max().unwrap() - lens.iter().min().unwrap() <= 1);
    }

    #[test]
    fn split_more_parts_than_items() {
        let parts = split_range(1, 2, 4);
        assert_eq!(parts.iter().map(|(a, b)| b - a).sum::<u64>(), 1);
    }

    #[test]
    fn split_full_u64_range() {
        let parts = split_range(1, 1 << 63, 3);
        assert_eq!(parts[2].1, 1 << 63);
    }

    #[test]
    fn map_chunks_keeps_order() {
        assert_eq!(map_chunks(5, |k| k * k), vec![0, 1, 4, 9, 16]);
    }
}
