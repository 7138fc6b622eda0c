//! Twin augmentation: grow a graph by cloning vertices without changing
//! the k-copwin answer (k >= 2), manufacturing large instances with known
//! answers and plenty for the kernelizers to undo.

use crate::graph::Graph;
use crate::params::nd_partition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinMode {
    /// Only false twins (shared open neighborhood, non-adjacent clones).
    /// The vertex-cover kernel removes exactly these, so augmenting this
    /// way and kernelizing recovers the original's kernel.
    FalseOnly,
    /// False twins for vertices in independent type classes; a coin flip
    /// between true and false twins elsewhere, exercising both collapse
    /// cases.
    Mixed,
}

pub fn twin_augment(g: &Graph, rounds: usize, seed: u64, mode: TwinMode) -> Graph {
    assert!(!g.is_directed(), "twin augmentation is defined for undirected graphs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = g.clone();
    for _ in 0..rounds {
        let v = rng.gen_range(0..current.n());
        let true_twin = match mode {
            TwinMode::FalseOnly => false,
            TwinMode::Mixed => {
                let part = nd_partition(&current);
                let class = part.class_of(v);
                part.clique_class[class] && rng.gen_bool(0.5)
            }
        };
        let clone = current.n();
        let mut edges = current.edges().to_vec();
        for &u in current.neighbors(v) {
            edges.push((u, clone));
        }
        if true_twin {
            edges.push((v, clone));
        }
        current = Graph::new(clone + 1, &edges, false).expect("twin insertion stays simple");
    }
    current
}
