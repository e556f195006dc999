//! Index-map helpers: rayon data-parallel when the `parallel` feature is on,
//! plain iteration otherwise. Every map is a pure function of its index, so
//! results are bit-identical for any thread count.

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indices_seq(len, f)
}

pub(crate) fn map_indices_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}
