//! Choice between sequential and data-parallel evaluation.
//!
//! Everything that fans out over resolutions or family grid points goes
//! through [`Strategy::map`], so both paths compute identical results in
//! identical order. Without the `parallel` feature the parallel strategy
//! runs sequentially.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Apply `f` to every item, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Like [`Strategy::map`] over `0..n`.
    pub fn map_range<R, F>(self, n: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            _ => (0..n).map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_in_order() {
        let items: Vec<u64> = (0..1000).collect();
        let a = Strategy::Sequential.map(&items, |x| x * x);
        let b = Strategy::Parallel.map(&items, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(Strategy::Parallel.map_range(50, |x| x + 1), (1..=50).collect::<Vec<_>>());
    }
}
