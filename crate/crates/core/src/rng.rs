//! Counter-based random streams.
//!
//! Every replica owns a ChaCha8 stream selected by `(seed, replica)`, so a
//! replica's draws never depend on how many replicas ran before it or on
//! which thread executed it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Independent stream for replica `replica` under master seed `seed`.
pub fn replica_stream(seed: u64, replica: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replica);
    rng
}

/// Maps `f` over `0..n` replica indices and returns results in index order.
///
/// With the `parallel` feature the map runs on the rayon pool; the output
/// order (and so any fold over it) is identical either way.
pub fn map_replicas<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n as u64).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n as u64).map(f).collect()
    }
}
