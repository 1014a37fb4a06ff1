pub mod bracket;
pub mod det;
pub mod diagram;
pub mod fixtures;
pub mod fox;
pub mod laurent;
pub mod surgery;
pub mod twistfam;
pub mod verify;

/// Order-preserving map, run on the thread pool when the `parallel`
/// feature is enabled.
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
