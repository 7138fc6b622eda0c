//! Constructors for the named graphs the test corpora lean on.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges, false).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges, false).unwrap()
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
pub fn directed_cycle(n: usize) -> Graph {
    assert!(n >= 2);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges, true).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges, false).unwrap()
}

/// Star with the center at vertex 0 and `leaves` leaf vertices.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges, false).unwrap()
}

/// Complete bipartite graph; side A is `0..a`, side B is `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::new(a + b, &edges, false).unwrap()
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges, false).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, &edges, false).unwrap()
}

/// Replaces every undirected edge by a pair of opposite arcs. The result is
/// strongly connected whenever the input is connected.
pub fn doubled_orientation(g: &Graph) -> Graph {
    assert!(!g.is_directed());
    let mut arcs = Vec::with_capacity(2 * g.m());
    for &(u, v) in g.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Graph::new(g.n(), &arcs, true).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(path(4).m(), 3);
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(star(5).degree(0), 5);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        assert_eq!(complete_multipartite(&[2, 2, 2]).m(), 12);
        let p = petersen();
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
        let d = doubled_orientation(&path(3));
        assert!(d.is_solver_ready());
    }
}
