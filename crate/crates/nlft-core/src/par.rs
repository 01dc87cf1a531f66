//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) these fan out over rayon's thread
//! pool; without it they compile to plain iterator loops with identical
//! results. All call sites map independent indices to values and merge by
//! index, so the two builds are bit-identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..count` and collects the results in index order.
#[cfg(feature = "parallel")]
pub fn map_indices<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..count` and collects the results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indices<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}

/// Maps `f` over `0..count` and collects the results, where each result may
/// fail. The first error (by index) is returned.
pub fn try_map_indices<T, F>(count: usize, f: F) -> crate::Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> crate::Result<T> + Sync + Send,
{
    map_indices(count, f).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_index_order() {
        let squares = map_indices(100, |i| i * i);
        assert_eq!(squares[7], 49);
        assert_eq!(squares.len(), 100);
    }

    #[test]
    fn try_map_returns_first_error_by_index() {
        let r = try_map_indices(10, |i| {
            if i >= 4 {
                Err(crate::Error::EmptySignal)
            } else {
                Ok(i)
            }
        });
        assert_eq!(r, Err(crate::Error::EmptySignal));
        let ok = try_map_indices(5, Ok).unwrap();
        assert_eq!(ok, vec![0, 1, 2, 3, 4]);
    }
}
