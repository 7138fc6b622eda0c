//! Canonical forms and isomorphism testing for small graphs (n <= 16).
//!
//! The canonical code is the lexicographically largest adjacency bit string
//! over all vertex orderings, found by a branch-and-bound search with prefix
//! pruning. Used to deduplicate enumeration corpora and to compare kernels
//! up to relabeling.

use super::Graph;

const MAX_N: usize = 16;

/// Packed canonical form: the vertex count in the high bits, the maximal
/// adjacency bit string in the low bits. Two graphs on at most 16 vertices
/// are isomorphic iff their codes are equal (directedness must match).
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= MAX_N, "canonical form supports n <= {MAX_N}");
    if n <= 1 {
        return (n as u128) << 121;
    }
    let per_level = if g.is_directed() { 2 } else { 1 };
    let total_bits: usize = per_level * n * (n - 1) / 2;
    debug_assert!(total_bits + 7 <= 128);

    let mut adj = [0u16; MAX_N];
    for u in 0..n {
        for &v in g.neighbors(u) {
            adj[u] |= 1 << v;
        }
    }
    let mut radj = [0u16; MAX_N];
    for u in 0..n {
        for &v in g.in_neighbors(u) {
            radj[u] |= 1 << v;
        }
    }

    let mut search = Search {
        n,
        directed: g.is_directed(),
        adj,
        radj,
        total_bits,
        best: 0,
        have_best: false,
        perm: Vec::with_capacity(n),
    };
    search.dfs(0, 0, 0);
    ((n as u128) << 121) | search.best
}

struct Search {
    n: usize,
    directed: bool,
    adj: [u16; MAX_N],
    radj: [u16; MAX_N],
    total_bits: usize,
    best: u128,
    have_best: bool,
    perm: Vec<usize>,
}

impl Search {
    fn segment(&self, v: usize) -> u128 {
        let mut seg: u128 = 0;
        for &p in &self.perm {
            if self.directed {
                seg = (seg << 1) | u128::from(self.adj[v] >> p & 1);
                seg = (seg << 1) | u128::from(self.radj[v] >> p & 1);
            } else {
                seg = (seg << 1) | u128::from(self.adj[v] >> p & 1);
            }
        }
        seg
    }

    fn dfs(&mut self, used: u16, code: u128, bits: usize) {
        let level = self.perm.len();
        if level == self.n {
            if !self.have_best || code > self.best {
                self.best = code;
                self.have_best = true;
            }
            return;
        }
        let seg_bits = if self.directed { 2 * level } else { level };
        let mut cands: Vec<(u128, usize)> = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| (self.segment(v), v))
            .collect();
        // Largest segments first: reaches a strong incumbent quickly, which
        // makes the prefix pruning bite.
        cands.sort_unstable_by(|a, b| b.cmp(a));
        for (seg, v) in cands {
            let new_code = (code << seg_bits) | seg;
            let new_bits = bits + seg_bits;
            if self.have_best {
                let best_prefix = self.best >> (self.total_bits - new_bits);
                if new_code < best_prefix {
                    continue;
                }
            }
            self.perm.push(v);
            self.dfs(used | 1 << v, new_code, new_bits);
            self.perm.pop();
        }
    }
}

/// Exact isomorphism test for graphs on at most 16 vertices.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() || a.is_directed() != b.is_directed() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(g.n(), &edges, g.is_directed()).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for g in [petersen(), cycle(6), complete_bipartite(2, 3), star(4)] {
            let code = canonical_code(&g);
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_code(&relabel(&g, &perm)), code);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!isomorphic(&path(4), &star(3)));
        assert!(!isomorphic(&cycle(6), &complete_bipartite(3, 3)));
        assert!(isomorphic(&cycle(4), &complete_bipartite(2, 2)));
        // Same degree sequence, different graphs.
        let g1 = cycle(6);
        let g2 = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], false).unwrap();
        assert!(!isomorphic(&g1, &g2));
    }

    #[test]
    fn directed_codes() {
        let c3 = directed_cycle(3);
        let rev = Graph::new(3, &[(1, 0), (2, 1), (0, 2)], true).unwrap();
        assert!(isomorphic(&c3, &rev));
        let out_star = Graph::new(3, &[(0, 1), (0, 2)], true).unwrap();
        let in_star = Graph::new(3, &[(1, 0), (2, 0)], true).unwrap();
        assert!(!isomorphic(&out_star, &in_star));
    }

    #[test]
    fn brute_force_agreement_small() {
        // Canonical equality must match permutation search on all graphs
        // with 4 vertices.
        let all: Vec<Graph> = (0u32..64)
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::new(4, &edges, false).unwrap()
            })
            .collect();
        let perms = [
            [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
            [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
            [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
            [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
        ];
        for a in &all {
            for b in &all {
                let brute = perms.iter().any(|p| {
                    a.edges().len() == b.edges().len()
                        && a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
                });
                assert_eq!(isomorphic(a, b), brute);
            }
        }
    }
}
