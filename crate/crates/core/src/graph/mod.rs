//! Immutable graph representation with the metric and structural queries the
//! solvers, kernelizers and planners build on.
//!
//! Vertices are dense integers `0..n-1`; optional string labels are carried
//! separately so generators can tag block membership. Graphs are immutable
//! after construction and safe to share across threads.

pub mod builders;
pub mod io;
pub mod iso;

use crate::error::GraphError;

/// Connectivity classification of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    StronglyConnected,
    Neither,
}

/// Which neighborhood a containment query uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodKind {
    Open,
    Closed,
}

/// A finite simple graph, optionally oriented.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj_out: Vec<Vec<usize>>,
    adj_in: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    connectivity: Connectivity,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops and parallel
    /// edges; for undirected graphs `u-v` and `v-u` count as parallel.
    pub fn new(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<Graph, GraphError> {
        let mut adj_out: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut adj_in: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::UnknownVertex(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push(if directed || u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &canon {
            adj_out[u].push(v);
            adj_in[v].push(u);
            if !directed {
                adj_out[v].push(u);
                adj_in[u].push(v);
            }
        }
        for list in adj_out.iter_mut().chain(adj_in.iter_mut()) {
            list.sort_unstable();
        }
        let mut g = Graph {
            n,
            directed,
            adj_out,
            adj_in,
            edges: canon,
            labels: None,
            connectivity: Connectivity::Neither,
        };
        g.connectivity = g.compute_connectivity();
        Ok(g)
    }

    /// Same as [`Graph::new`] but additionally errors unless the graph is
    /// connected (strongly connected when directed). This is the loader the
    /// solver-facing paths use.
    pub fn new_connected(
        n: usize,
        edges: &[(usize, usize)],
        directed: bool,
    ) -> Result<Graph, GraphError> {
        let g = Graph::new(n, edges, directed)?;
        if !g.is_solver_ready() {
            return Err(GraphError::Disconnected { directed });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Canonical edge list: `u < v` for undirected graphs, arc order for
    /// directed ones.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Out-neighbors (all neighbors when undirected), sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj_out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.adj_in[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj_out[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj_out[u].binary_search(&v).is_ok()
    }

    /// `N[v]`: the closed out-neighborhood of `v`, sorted ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::UnknownVertex(v, self.n));
        }
        let mut set = self.adj_out[v].to_vec();
        let pos = set.binary_search(&v).unwrap_err();
        set.insert(pos, v);
        Ok(set)
    }

    /// Closed in-neighborhood; equals [`Graph::closed_neighborhood`] for
    /// undirected graphs.
    pub fn closed_in_neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::UnknownVertex(v, self.n));
        }
        let mut set = self.adj_in[v].to_vec();
        let pos = set.binary_search(&v).unwrap_err();
        set.insert(pos, v);
        Ok(set)
    }

    /// The recorded connectivity classification.
    pub fn connectivity_check(&self) -> Connectivity {
        self.connectivity
    }

    /// True when the graph satisfies the connectivity requirement of the
    /// solvers: connected if undirected, strongly connected if directed.
    pub fn is_solver_ready(&self) -> bool {
        match self.connectivity {
            Connectivity::StronglyConnected => true,
            Connectivity::Connected => !self.directed,
            Connectivity::Neither => false,
        }
    }

    fn compute_connectivity(&self) -> Connectivity {
        if self.n == 0 {
            return Connectivity::Neither;
        }
        if self.n == 1 {
            return if self.directed {
                Connectivity::StronglyConnected
            } else {
                Connectivity::Connected
            };
        }
        let fwd = self.reach_count(0, false);
        if self.directed {
            let bwd = self.reach_count(0, true);
            if fwd == self.n && bwd == self.n {
                Connectivity::StronglyConnected
            } else {
                Connectivity::Neither
            }
        } else if fwd == self.n {
            Connectivity::Connected
        } else {
            Connectivity::Neither
        }
    }

    fn reach_count(&self, start: usize, reverse: bool) -> usize {
        let adj = if reverse { &self.adj_in } else { &self.adj_out };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// Weakly connected components as sorted vertex sets (ignores arc
    /// directions), so callers can solve disconnected inputs per component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.adj_out[v].iter().chain(self.adj_in[v].iter()) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The subgraph induced by `verts` (sorted, deduplicated internally),
    /// with vertices re-numbered by ascending original id. Returns the graph
    /// and the kept original ids, so `kept[i]` is the original id of new
    /// vertex `i`.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut kept: Vec<usize> = verts.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        let mut g = Graph::new(kept.len(), &edges, self.directed).expect("induced subgraph");
        if let Some(labels) = &self.labels {
            g.set_labels(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, kept)
    }

    /// Breadth-first distances from `start` along arcs (`usize::MAX` when
    /// unreachable).
    pub fn bfs_from(&self, start: usize) -> Vec<usize> {
        self.bfs_impl(start, false)
    }

    /// Breadth-first distances to... from `start` along reversed arcs.
    pub fn bfs_reverse_from(&self, start: usize) -> Vec<usize> {
        self.bfs_impl(start, true)
    }

    fn bfs_impl(&self, start: usize, reverse: bool) -> Vec<usize> {
        let adj = if reverse { &self.adj_in } else { &self.adj_out };
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact girth: length of a shortest cycle, `None` for acyclic graphs.
    /// Computed by one breadth-first search per vertex; shortest directed
    /// cycle when the graph is directed.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        if self.directed {
            for s in 0..self.n {
                let dist = self.bfs_from(s);
                for (v, &d) in dist.iter().enumerate() {
                    if d == usize::MAX {
                        continue;
                    }
                    if self.has_edge(v, s) && v != s {
                        let len = d + 1;
                        if len >= 2 && best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
            return best;
        }
        // Undirected: BFS with parent tracking; a non-tree edge between u and
        // w found while scanning u at depth d closes a cycle of length
        // d(u) + d(w) + 1.
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj_out[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// A shortest `u,v`-path, deterministic: from each vertex the walk
    /// extends toward the smallest-id neighbor that decreases the distance
    /// to the target.
    pub fn isometric_path(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        if u >= self.n {
            return Err(GraphError::UnknownVertex(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::UnknownVertex(v, self.n));
        }
        let to_target = self.bfs_reverse_from(v);
        if to_target[u] == usize::MAX {
            return Err(GraphError::DisconnectedPair(u, v));
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let next = self.adj_out[cur]
                .iter()
                .copied()
                .find(|&w| to_target[w] != usize::MAX && to_target[w] + 1 == to_target[cur])
                .expect("distance decreases along some neighbor");
            path.push(next);
            cur = next;
        }
        Ok(path)
    }

    /// Checks that `path` is a shortest path between its endpoints.
    pub fn is_isometric_path(&self, path: &[usize]) -> bool {
        if path.is_empty() {
            return false;
        }
        if path.len() == 1 {
            return path[0] < self.n;
        }
        for w in path.windows(2) {
            if !self.has_edge(w[0], w[1]) {
                return false;
            }
        }
        let mut uniq = path.to_vec();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() != path.len() {
            return false;
        }
        let dist = self.bfs_from(path[0]);
        dist[*path.last().unwrap()] == path.len() - 1
    }

    /// All ordered pairs `(u, v)` within `candidates` with `u != v` whose
    /// neighborhoods satisfy `N(u) ⊆ N(v)` (open) or `N[u] ⊆ N[v]` (closed).
    /// This is the definition-level containment scan the reduction rules use.
    pub fn dominated_pairs(&self, candidates: &[usize], kind: NeighborhoodKind) -> Vec<(usize, usize)> {
        let mut cand: Vec<usize> = candidates.to_vec();
        cand.sort_unstable();
        cand.dedup();
        let mut out = Vec::new();
        for &u in &cand {
            for &v in &cand {
                if u != v && self.neighborhood_contained(u, v, kind) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when the (open or closed) out-neighborhood of `u` is contained
    /// in that of `v`.
    pub fn neighborhood_contained(&self, u: usize, v: usize, kind: NeighborhoodKind) -> bool {
        match kind {
            NeighborhoodKind::Open => is_subset(&self.adj_out[u], &self.adj_out[v]),
            NeighborhoodKind::Closed => {
                let nu = self.closed_neighborhood(u).unwrap();
                let nv = self.closed_neighborhood(v).unwrap();
                is_subset(&nu, &nv)
            }
        }
    }

    /// Replaces every edge by a path with `times` internal vertices. New
    /// vertices are appended after the original ids, in canonical edge
    /// order. `times = 0` returns a copy.
    pub fn subdivide_edges(&self, times: usize) -> Graph {
        if times == 0 {
            return self.clone();
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut next = self.n;
        for &(u, v) in &self.edges {
            let mut prev = u;
            for _ in 0..times {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, v));
        }
        let mut g = Graph::new(next, &edges, self.directed).expect("subdivision is simple");
        if let Some(labels) = &self.labels {
            let mut all = labels.clone();
            all.resize(next, String::new());
            g.set_labels(all);
        }
        g
    }
}

/// Subset test over sorted slices.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            match y.cmp(&x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// All-pairs hop distances, computed by breadth-first traversal from every
/// vertex. Row `u` holds distances from `u` along arcs; `INF` marks
/// unreachable pairs. Immutable after construction.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u16>,
}

impl DistanceTable {
    pub const INF: u16 = u16::MAX;

    pub fn new(g: &Graph) -> DistanceTable {
        assert!(g.n() < u16::MAX as usize, "graph too large for distance table");
        let n = g.n();
        let mut d = vec![Self::INF; n * n];
        for u in 0..n {
            for (v, &dist) in g.bfs_from(u).iter().enumerate() {
                if dist != usize::MAX {
                    d[u * n + v] = dist as u16;
                }
            }
        }
        DistanceTable { n, d }
    }

    /// Distance from `u` to `v` in hops; `INF` when unreachable.
    #[inline]
    pub fn d(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn reachable(&self, u: usize, v: usize) -> bool {
        self.d(u, v) != Self::INF
    }

    pub fn eccentricity(&self, u: usize) -> u16 {
        (0..self.n).map(|v| self.d(u, v)).max().unwrap_or(0)
    }

    /// Largest finite distance in the table.
    pub fn diameter(&self) -> u16 {
        (0..self.n * self.n)
            .map(|i| self.d[i])
            .filter(|&x| x != Self::INF)
            .max()
            .unwrap_or(0)
    }
}
