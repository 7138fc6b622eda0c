//! Random block-structured bipartite graphs with girth at least six and
//! near-regular block-pair degrees.
//!
//! The construction target: sides X and Y of p blocks of q vertices each;
//! within every block pair (U_i, W_j) each vertex has between r-1 and r+1
//! neighbors; the whole graph contains no 4-cycle (bipartite, so girth at
//! least 6). We build each block pair from r rounds of random matchings,
//! rejecting edges that close a 4-cycle, and patch vertices left below
//! degree r-1 with any legal edge. Restarts give up after a budget and the
//! output is always re-certified from scratch.

use crate::error::GenError;
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct HpqrParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl HpqrParams {
    /// The block size the no-instance argument of the reduction demands;
    /// astronomically conservative, recorded so outputs can carry a
    /// below-threshold flag.
    pub fn paper_q_threshold(p: usize, r: usize) -> usize {
        let p = p as u128;
        let r = r as u128;
        let base = p * (r + 1) - 1;
        let num = base.pow(6) - 1;
        let den = base.pow(2) - 1;
        (2 * p * (r + 1) * num).div_ceil(den) as usize
    }

    pub fn meets_paper_threshold(&self) -> bool {
        self.q >= Self::paper_q_threshold(self.p, self.r)
    }
}

#[derive(Debug, Clone)]
pub struct HpqrCertificate {
    /// True girth of the emitted graph is at least six (no 4-cycles in a
    /// simple bipartite graph).
    pub girth_ok: bool,
    /// Every vertex has between r-1 and r+1 neighbors inside every block
    /// pair it belongs to.
    pub degrees_ok: bool,
    pub meets_paper_threshold: bool,
}

/// Block labels: side X blocks are `U1..Up` over vertices `0..pq`, side Y
/// blocks `W1..Wp` over `pq..2pq`.
pub fn gen_hpqr(params: &HpqrParams, seed: u64) -> Result<(Graph, HpqrCertificate), GenError> {
    let HpqrParams { p, q, r } = *params;
    if p == 0 || q == 0 || r == 0 {
        return Err(GenError::BadParams("p, q, r must be positive".into()));
    }
    // Each vertex needs r-1 distinct neighbors per pair; a 4-cycle-free
    // bipartite q x q graph caps the edge count near q^1.5, so refuse
    // obviously impossible demands early.
    if r + 1 > q {
        return Err(GenError::Infeasible(format!(
            "degree demand r+1 = {} exceeds block size q = {q}",
            r + 1
        )));
    }
    // Per-pair and whole-graph 4-cycle-free capacities (Kővári–Sós–Turán
    // shape): a bipartite C4-free graph on s+s vertices has at most
    // s(1+sqrt(4s-3))/2 edges.
    let cap = |s: usize| (s as f64 / 2.0) * (1.0 + ((4 * s - 3) as f64).sqrt());
    if (q * (r - 1)) as f64 > cap(q) {
        return Err(GenError::Infeasible(format!(
            "q(r-1) = {} edges per pair exceed the 4-cycle-free capacity {:.0}",
            q * (r - 1),
            cap(q)
        )));
    }
    if (p * q * p * (r - 1)) as f64 > cap(p * q) {
        return Err(GenError::Infeasible(format!(
            "total degree demand p(r-1) = {} exceeds the graph-wide 4-cycle-free capacity",
            p * (r - 1)
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RESTARTS: usize = 200;
    for _ in 0..RESTARTS {
        if let Some(edges) = try_build(p, q, r, &mut rng) {
            let n = 2 * p * q;
            let mut g = Graph::new(n, &edges, false).expect("simple by construction");
            let mut labels = vec![String::new(); n];
            for i in 0..p {
                for s in 0..q {
                    labels[i * q + s] = format!("U{}", i + 1);
                    labels[p * q + i * q + s] = format!("W{}", i + 1);
                }
            }
            g.set_labels(labels);
            let cert = certify(&g, params);
            if cert.girth_ok && cert.degrees_ok {
                return Ok((g, cert));
            }
        }
    }
    Err(GenError::RetriesExhausted(RESTARTS))
}

/// One attempt. Targets the degree floor r-1 in every pair (the window
/// allows up to r+1, but every extra edge burns 4-cycle-free headroom),
/// interleaving the pairs round-robin and always extending toward the
/// least-loaded legal partner. A final patch pass tops up stragglers on
/// both sides.
fn try_build(p: usize, q: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let n = 2 * p * q;
    let floor = r - 1;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let x_base = |i: usize, s: usize| i * q + s;
    let y_base = |j: usize, s: usize| p * q + j * q + s;
    // Per-pair degrees: du[(i*p+j)*q + s], dw likewise.
    let mut du = vec![0usize; p * p * q];
    let mut dw = vec![0usize; p * p * q];

    let closes_c4 = |adj: &Vec<Vec<usize>>, u: usize, w: usize| -> bool {
        // Adding u-w closes a 4-cycle iff some other neighbor x of w
        // already shares a neighbor with u.
        adj[w]
            .iter()
            .any(|&x| x != u && adj[x].iter().any(|&y| adj[u].contains(&y)))
    };

    let mut pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (0..p).map(move |j| (i, j))).collect();
    for round in 0..floor {
        pairs.shuffle(rng);
        for &(i, j) in &pairs {
            let pair = i * p + j;
            let mut order: Vec<usize> = (0..q).collect();
            order.shuffle(rng);
            for s in order {
                if du[pair * q + s] > round {
                    continue;
                }
                let u = x_base(i, s);
                // Least-loaded legal partner in this pair.
                let mut cands: Vec<usize> = (0..q).collect();
                cands.shuffle(rng);
                cands.sort_by_key(|&tw| dw[pair * q + tw]);
                for tw in cands {
                    if dw[pair * q + tw] >= r + 1 {
                        break;
                    }
                    let w = y_base(j, tw);
                    if adj[u].contains(&w) || closes_c4(&adj, u, w) {
                        continue;
                    }
                    adj[u].push(w);
                    adj[w].push(u);
                    edges.push((u, w));
                    du[pair * q + s] += 1;
                    dw[pair * q + tw] += 1;
                    break;
                }
            }
        }
    }
    // Patch both sides up to the floor.
    for &(i, j) in &pairs {
        let pair = i * p + j;
        for s in 0..q {
            while du[pair * q + s] < floor {
                let u = x_base(i, s);
                let pick = (0..q)
                    .filter(|&tw| dw[pair * q + tw] < r + 1)
                    .find(|&tw| {
                        let w = y_base(j, tw);
                        !adj[u].contains(&w) && !closes_c4(&adj, u, w)
                    });
                let Some(tw) = pick else { return None };
                let w = y_base(j, tw);
                adj[u].push(w);
                adj[w].push(u);
                edges.push((u, w));
                du[pair * q + s] += 1;
                dw[pair * q + tw] += 1;
            }
        }
        for tw in 0..q {
            while dw[pair * q + tw] < floor {
                let w = y_base(j, tw);
                let pick = (0..q)
                    .filter(|&s| du[pair * q + s] < r + 1)
                    .find(|&s| {
                        let u = x_base(i, s);
                        !adj[u].contains(&w) && !closes_c4(&adj, u, w)
                    });
                let Some(s) = pick else { return None };
                let u = x_base(i, s);
                adj[u].push(w);
                adj[w].push(u);
                edges.push((u, w));
                du[pair * q + s] += 1;
                dw[pair * q + tw] += 1;
            }
        }
    }
    Some(edges)
}

/// Post-hoc certification, independently of the incremental checks used
/// during construction.
pub fn certify(g: &Graph, params: &HpqrParams) -> HpqrCertificate {
    let HpqrParams { p, q, r } = *params;
    let girth_ok = match g.girth() {
        None => true,
        Some(girth) => girth >= 6,
    };
    let block_of = |v: usize| -> (bool, usize) {
        // (is_x_side, block index)
        if v < p * q {
            (true, v / q)
        } else {
            (false, (v - p * q) / q)
        }
    };
    let mut degrees_ok = true;
    for v in 0..g.n() {
        let (vx, _) = block_of(v);
        let mut per_block = vec![0usize; p];
        for &u in g.neighbors(v) {
            let (ux, ub) = block_of(u);
            if ux == vx {
                degrees_ok = false;
            } else {
                per_block[ub] += 1;
            }
        }
        for &d in &per_block {
            if d + 1 < r || d > r + 1 {
                degrees_ok = false;
            }
        }
    }
    HpqrCertificate {
        girth_ok,
        degrees_ok,
        meets_paper_threshold: params.meets_paper_threshold(),
    }
}

/// Three-sided variant for the oriented reduction: blocks U, W, X with
/// 4-cycle-free near-regular layers U-W, W-X and X-U. Returns the
/// undirected layer edges; orientation happens downstream. Vertex layout:
/// U blocks at `0..pq`, W at `pq..2pq`, X at `2pq..3pq`.
pub fn gen_tripartite_layers(
    params: &HpqrParams,
    seed: u64,
) -> Result<Vec<(usize, usize)>, GenError> {
    let HpqrParams { p, q, r } = *params;
    if r + 1 > q {
        return Err(GenError::Infeasible(format!(
            "degree demand r+1 = {} exceeds block size q = {q}",
            r + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RESTARTS: usize = 200;
    'outer: for _ in 0..RESTARTS {
        let mut all: Vec<(usize, usize)> = Vec::new();
        // The three layers are built independently; 4-cycles cannot span
        // two layers of a tripartite layout with distinct side pairs
        // because a 4-cycle alternates between exactly two sides.
        for (a, b) in [(0usize, 1usize), (1, 2), (2, 0)] {
            match try_build(p, q, r, &mut rng) {
                Some(edges) => {
                    for (u, w) in edges {
                        // try_build lays out side X at 0..pq, side Y at
                        // pq..2pq; remap onto sides a and b.
                        let (u, w) = (a * p * q + u, b * p * q + (w - p * q));
                        all.push((u, w));
                    }
                }
                None => continue 'outer,
            }
        }
        return Ok(all);
    }
    Err(GenError::RetriesExhausted(RESTARTS))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instance_certifies() {
        let params = HpqrParams { p: 1, q: 9, r: 2 };
        let (g, cert) = gen_hpqr(&params, 7).unwrap();
        assert_eq!(g.n(), 18);
        assert!(cert.girth_ok);
        assert!(cert.degrees_ok);
        assert!(!cert.meets_paper_threshold);
        assert!(g.girth().map_or(true, |c| c >= 6));
    }

    #[test]
    fn two_block_instance() {
        let params = HpqrParams { p: 2, q: 20, r: 2 };
        let (g, cert) = gen_hpqr(&params, 3).unwrap();
        assert!(cert.girth_ok && cert.degrees_ok);
        // Spot-check the per-pair degree window by hand for vertex 0.
        let mut per_block = vec![0usize; 2];
        for &u in g.neighbors(0) {
            assert!(u >= 40, "side X vertex adjacent within its own side");
            per_block[(u - 40) / 20] += 1;
        }
        for d in per_block {
            assert!((1..=3).contains(&d));
        }
    }

    #[test]
    fn infeasible_demand_is_an_error() {
        let params = HpqrParams { p: 1, q: 2, r: 5 };
        assert!(matches!(gen_hpqr(&params, 1), Err(GenError::Infeasible(_))));
        // Tight 4-cycle-free capacity: q = 8 cannot host min degree 3 in a
        // 4-cycle-free bipartite pair... it can in principle (24 <= 25.7),
        // but q=5 with r=4 cannot.
        let params = HpqrParams { p: 1, q: 5, r: 4 };
        assert!(matches!(gen_hpqr(&params, 1), Err(GenError::Infeasible(_))));
    }

    #[test]
    fn determinism_per_seed() {
        let params = HpqrParams { p: 1, q: 12, r: 3 };
        let (g1, _) = gen_hpqr(&params, 11).unwrap();
        let (g2, _) = gen_hpqr(&params, 11).unwrap();
        assert_eq!(g1.edges(), g2.edges());
        let (g3, _) = gen_hpqr(&params, 12).unwrap();
        assert!(g1.edges() != g3.edges());
    }

    #[test]
    fn paper_threshold_is_huge() {
        assert!(HpqrParams::paper_q_threshold(2, 4) > 100_000);
        let p = HpqrParams { p: 2, q: 12, r: 4 };
        assert!(!p.meets_paper_threshold());
    }

    #[test]
    fn tripartite_layers_are_clean() {
        let params = HpqrParams { p: 2, q: 30, r: 3 };
        let edges = gen_tripartite_layers(&params, 5).unwrap();
        let n = 3 * 2 * 30;
        let g = Graph::new(n, &edges, false).unwrap();
        // Certify each layer: no 4-cycle inside any pair of sides.
        let side = |v: usize| v / 60;
        for &(u, w) in g.edges() {
            assert_ne!(side(u), side(w));
        }
        // Per-layer 4-cycle check: two same-side vertices may not share two
        // common neighbors on one other side (cross-layer squares are
        // harmless for the reduction argument).
        for v in 0..n {
            let mut seen = std::collections::HashMap::new();
            for &a in g.neighbors(v) {
                for &b in g.neighbors(a) {
                    if b > v && side(b) == side(v) {
                        *seen.entry((b, side(a))).or_insert(0usize) += 1;
                    }
                }
            }
            for (&(other, mid), &walks) in &seen {
                assert!(walks <= 1, "layer 4-cycle between {v} and {other} via side {mid}");
            }
        }
    }
}
