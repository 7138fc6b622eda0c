//! Exhaustive and randomized test corpora.
//!
//! Connected graphs are enumerated up to isomorphism by vertex extension:
//! every connected graph on n+1 vertices arises from a connected graph on n
//! vertices by attaching a new vertex with a nonempty neighborhood (remove
//! any non-cutvertex to see this), so extending every n-vertex class by
//! every mask and deduplicating canonical codes reaches every class
//! exactly once. Trees are grown the same way with single-edge attachments.

use crate::graph::iso::canonical_code;
use crate::graph::Graph;
use rand::Rng;

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in a deterministic order. Intended for n <= 9.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut layer = vec![Graph::new(1, &[], false).unwrap()];
    for size in 2..=n {
        layer = extend_layer(&layer, size, false);
    }
    layer
}

/// All connected graphs with between 1 and `n` vertices, one per class.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(connected_graphs).collect()
}

/// All trees on exactly `n` vertices, one per isomorphism class.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut layer = vec![Graph::new(1, &[], false).unwrap()];
    for size in 2..=n {
        layer = extend_layer(&layer, size, true);
    }
    layer
}

pub fn trees_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(trees).collect()
}

fn extend_layer(parents: &[Graph], size: usize, trees_only: bool) -> Vec<Graph> {
    let old = size - 1;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for parent in parents {
        let masks: Vec<u32> = if trees_only {
            (0..old).map(|v| 1u32 << v).collect()
        } else {
            (1u32..1 << old).collect()
        };
        for mask in masks {
            let mut edges = parent.edges().to_vec();
            for v in 0..old {
                if mask >> v & 1 == 1 {
                    edges.push((v, old));
                }
            }
            let g = Graph::new(size, &edges, false).unwrap();
            if seen.insert(canonical_code(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// A connected graph drawn as a uniform random spanning tree plus
/// `extra_edges` additional random non-edges (clamped to the complement's
/// size). Deterministic per RNG state.
pub fn random_connected(n: usize, extra_edges: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Random attachment tree.
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    let mut complement: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) {
                complement.push((u, v));
            }
        }
    }
    let take = extra_edges.min(complement.len());
    for _ in 0..take {
        let i = rng.gen_range(0..complement.len());
        edges.push(complement.swap_remove(i));
    }
    Graph::new(n, &edges, false).unwrap()
}

/// A strongly connected random orientation of `g`, if one is found within
/// `attempts` reorientations. Graphs with bridges never admit one.
pub fn random_strong_orientation(g: &Graph, attempts: usize, rng: &mut impl Rng) -> Option<Graph> {
    assert!(!g.is_directed());
    for _ in 0..attempts {
        let arcs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
            .collect();
        let d = Graph::new(g.n(), &arcs, true).unwrap();
        if d.is_solver_ready() {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_the_literature() {
        // Known counts of connected graphs on 1..=7 vertices.
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn tree_counts_match_the_literature() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(trees(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn enumerated_graphs_are_connected_and_distinct() {
        let all = connected_graphs(6);
        for g in &all {
            assert!(g.is_solver_ready());
        }
        let mut codes: Vec<u128> = all.iter().map(canonical_code).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }

    #[test]
    fn trees_are_acyclic() {
        for t in trees_up_to(8) {
            assert_eq!(t.m(), t.n() - 1);
            assert!(t.is_solver_ready());
            assert_eq!(t.girth(), None);
        }
    }

    #[test]
    fn random_corpus_is_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_connected(10, 5, &mut rng);
            assert!(g.is_solver_ready());
            assert_eq!(g.m(), 14);
        }
        let c4 = crate::graph::builders::cycle(4);
        let d = random_strong_orientation(&c4, 64, &mut rng).unwrap();
        assert!(d.is_solver_ready());
        let bridge = crate::graph::builders::path(3);
        assert!(random_strong_orientation(&bridge, 64, &mut rng).is_none());
    }
}
