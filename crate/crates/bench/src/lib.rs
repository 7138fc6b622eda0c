//! Shared instance builders for the criterion benchmarks.

use copwin_core::gen::{twin_augment, TwinMode};
use copwin_core::graph::builders;
use copwin_core::Graph;

/// A twin-heavy instance: a small base blown up by false twins, which the
/// vertex-cover kernel deflates back down.
pub fn twin_heavy(base_n: usize, rounds: usize, seed: u64) -> Graph {
    twin_augment(&builders::cycle(base_n), rounds, seed, TwinMode::FalseOnly)
}

/// A twin-free instance: plain cycle, nothing for the kernel to remove.
pub fn twin_free(n: usize) -> Graph {
    builders::cycle(n)
}
