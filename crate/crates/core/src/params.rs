//! Structural parameters and their certificates: vertex cover, cluster
//! vertex deletion, deletion to stars, and neighborhood diversity.
//!
//! The exact solvers are plain branch-and-bound over bitmask vertex sets
//! with a node budget; the input scales here are small enough that nothing
//! fancier pays off. Every returned certificate is re-verified by an
//! explicit structural checker before it leaves this module.

use crate::error::ParamError;
use crate::graph::Graph;

/// Which residual structure a deletion set certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    /// Residual is edgeless (vertex cover).
    Vc,
    /// Residual is a disjoint union of cliques.
    Cvd,
    /// Residual is a disjoint union of stars.
    Dts,
}

impl CoverKind {
    pub fn name(self) -> &'static str {
        match self {
            CoverKind::Vc => "vc",
            CoverKind::Cvd => "cvd",
            CoverKind::Dts => "dts",
        }
    }
}

/// A verified deletion set `U` together with its kind and provenance.
#[derive(Debug, Clone)]
pub struct CoverCertificate {
    pub kind: CoverKind,
    /// The deletion set, sorted ascending.
    pub set: Vec<usize>,
    /// Whether the set is a certified optimum (false for approximations and
    /// user-supplied sets).
    pub exact: bool,
}

impl CoverCertificate {
    pub fn t(&self) -> usize {
        self.set.len()
    }

    /// Wraps a user-supplied set after verifying the residual structure.
    pub fn from_set(g: &Graph, kind: CoverKind, set: Vec<usize>) -> Result<Self, ParamError> {
        let mut set = set;
        set.sort_unstable();
        set.dedup();
        let cert = CoverCertificate { kind, set, exact: false };
        cert.verify(g)?;
        Ok(cert)
    }

    pub fn verify(&self, g: &Graph) -> Result<(), ParamError> {
        if let Some(&v) = self.set.iter().find(|&&v| v >= g.n()) {
            return Err(ParamError::BadCertificate(
                self.kind.name(),
                format!("vertex {v} out of range"),
            ));
        }
        let mut in_set = vec![false; g.n()];
        for &v in &self.set {
            in_set[v] = true;
        }
        let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_set[v]).collect();
        let (residual, kept) = g.induced(&rest);
        let ok = match self.kind {
            CoverKind::Vc => residual.m() == 0,
            CoverKind::Cvd => is_disjoint_cliques(&residual),
            CoverKind::Dts => residual.components().iter().all(|c| is_star(&residual, c)),
        };
        if ok {
            Ok(())
        } else {
            let _ = kept;
            Err(ParamError::BadCertificate(
                self.kind.name(),
                "residual graph has the wrong structure".into(),
            ))
        }
    }
}

fn is_disjoint_cliques(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        c.iter()
            .all(|&u| c.iter().all(|&v| u == v || g.has_edge(u, v)))
    })
}

/// A star is a tree of diameter at most 2: at most one vertex of degree > 1
/// and no edges among the rest.
fn is_star(g: &Graph, comp: &[usize]) -> bool {
    if comp.len() <= 2 {
        return true;
    }
    let centers: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) > 1).collect();
    if centers.len() > 1 {
        return false;
    }
    let center = centers.first().copied();
    comp.iter().all(|&v| {
        Some(v) == center || (g.degree(v) == 1 && g.neighbors(v).first().copied() == center)
    })
}

/// Canonical center of a star component: the unique vertex of degree > 1,
/// or the lowest id when the component has at most two vertices.
pub fn star_center(g: &Graph, comp: &[usize]) -> usize {
    comp.iter()
        .copied()
        .find(|&v| g.degree(v) > 1)
        .unwrap_or_else(|| *comp.iter().min().unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VcMode {
    Exact,
    Approx2,
}

const DEFAULT_NODE_BUDGET: usize = 20_000_000;
const MAX_EXACT_N: usize = 128;

/// Computes a vertex cover. `Approx2` returns the endpoints of a maximal
/// matching (size at most twice the optimum); `Exact` runs bounded
/// branching, intended for small graphs.
pub fn vertex_cover(g: &Graph, mode: VcMode) -> Result<CoverCertificate, ParamError> {
    vertex_cover_budgeted(g, mode, DEFAULT_NODE_BUDGET)
}

pub fn vertex_cover_budgeted(
    g: &Graph,
    mode: VcMode,
    budget: usize,
) -> Result<CoverCertificate, ParamError> {
    if g.is_directed() {
        return Err(ParamError::Directed);
    }
    match mode {
        VcMode::Approx2 => {
            let mut taken = vec![false; g.n()];
            let mut set = Vec::new();
            for &(u, v) in g.edges() {
                if !taken[u] && !taken[v] {
                    taken[u] = true;
                    taken[v] = true;
                    set.push(u);
                    set.push(v);
                }
            }
            set.sort_unstable();
            let cert = CoverCertificate { kind: CoverKind::Vc, set, exact: false };
            cert.verify(g)?;
            Ok(cert)
        }
        VcMode::Exact => {
            if g.n() > MAX_EXACT_N {
                return Err(ParamError::TooLarge(g.n(), MAX_EXACT_N));
            }
            let mut search = VcSearch {
                best: (0..g.n()).collect(),
                current: Vec::new(),
                nodes: 0,
                budget,
            };
            search.branch(&g.edges().to_vec())?;
            let mut set = search.best;
            set.sort_unstable();
            let cert = CoverCertificate { kind: CoverKind::Vc, set, exact: true };
            cert.verify(g)?;
            Ok(cert)
        }
    }
}

struct VcSearch {
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: usize,
    budget: usize,
}

impl VcSearch {
    fn branch(&mut self, uncovered: &[(usize, usize)]) -> Result<(), ParamError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(ParamError::Budget(self.budget));
        }
        if self.current.len() >= self.best.len() {
            return Ok(());
        }
        let Some(&(u, v)) = uncovered.first() else {
            self.best = self.current.clone();
            return Ok(());
        };
        for pick in [u, v] {
            self.current.push(pick);
            let rest: Vec<(usize, usize)> = uncovered
                .iter()
                .copied()
                .filter(|&(a, b)| a != pick && b != pick)
                .collect();
            self.branch(&rest)?;
            self.current.pop();
        }
        Ok(())
    }
}

/// Exact minimum cluster vertex deletion set: branch on an induced path on
/// three vertices, the obstruction to being a disjoint union of cliques.
pub fn cluster_vertex_deletion(g: &Graph) -> Result<CoverCertificate, ParamError> {
    deletion_search(g, CoverKind::Cvd, DEFAULT_NODE_BUDGET)
}

/// Exact minimum deletion-to-stars set: branch on a triangle or a path on
/// four vertices, the obstructions to being a star forest.
pub fn deletion_to_stars(g: &Graph) -> Result<CoverCertificate, ParamError> {
    deletion_search(g, CoverKind::Dts, DEFAULT_NODE_BUDGET)
}

pub fn deletion_search(
    g: &Graph,
    kind: CoverKind,
    budget: usize,
) -> Result<CoverCertificate, ParamError> {
    if g.is_directed() {
        return Err(ParamError::Directed);
    }
    if g.n() > MAX_EXACT_N {
        return Err(ParamError::TooLarge(g.n(), MAX_EXACT_N));
    }
    let mut nodes = 0usize;
    for depth in 0..=g.n() {
        let mut chosen = Vec::new();
        let mut alive = vec![true; g.n()];
        if branch_obstructions(g, kind, depth, &mut chosen, &mut alive, &mut nodes, budget)? {
            chosen.sort_unstable();
            let cert = CoverCertificate { kind, set: chosen, exact: true };
            cert.verify(g)?;
            return Ok(cert);
        }
    }
    unreachable!("deleting all vertices always succeeds");
}

fn branch_obstructions(
    g: &Graph,
    kind: CoverKind,
    depth: usize,
    chosen: &mut Vec<usize>,
    alive: &mut Vec<bool>,
    nodes: &mut usize,
    budget: usize,
) -> Result<bool, ParamError> {
    *nodes += 1;
    if *nodes > budget {
        return Err(ParamError::Budget(budget));
    }
    let obstruction = match kind {
        CoverKind::Cvd => find_induced_p3(g, alive),
        CoverKind::Dts => find_triangle(g, alive).or_else(|| find_p4(g, alive)),
        CoverKind::Vc => unreachable!(),
    };
    let Some(witness) = obstruction else {
        return Ok(true);
    };
    if depth == 0 {
        return Ok(false);
    }
    for &v in &witness {
        alive[v] = false;
        chosen.push(v);
        if branch_obstructions(g, kind, depth - 1, chosen, alive, nodes, budget)? {
            return Ok(true);
        }
        chosen.pop();
        alive[v] = true;
    }
    Ok(false)
}

fn find_induced_p3(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    for mid in 0..g.n() {
        if !alive[mid] {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(mid).iter().copied().filter(|&v| alive[v]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    return Some(vec![a, mid, b]);
                }
            }
        }
    }
    None
}

fn find_triangle(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    for &(u, v) in g.edges() {
        if !alive[u] || !alive[v] {
            continue;
        }
        for &w in g.neighbors(u) {
            if alive[w] && w != v && g.has_edge(v, w) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

/// A path on four distinct vertices as a subgraph (not necessarily induced).
fn find_p4(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    for &(b, c) in g.edges() {
        if !alive[b] || !alive[c] {
            continue;
        }
        for (x, y) in [(b, c), (c, b)] {
            for &a in g.neighbors(x) {
                if !alive[a] || a == y {
                    continue;
                }
                for &d in g.neighbors(y) {
                    if alive[d] && d != x && d != a {
                        return Some(vec![a, x, y, d]);
                    }
                }
            }
        }
    }
    None
}

/// A minimum partition of the vertices into same-type classes. Two vertices
/// have the same type when their neighborhoods agree outside the pair.
#[derive(Debug, Clone)]
pub struct NdPartition {
    /// Classes as sorted vertex sets, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// For each class, whether it induces a clique (true twins) or an
    /// independent set (false twins; also the convention for singletons).
    pub clique_class: Vec<bool>,
}

impl NdPartition {
    pub fn width(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
            .expect("classes partition the vertex set")
    }
}

/// True when `N(u) \ {v} == N(v) \ {u}`.
pub fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
    let mut nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
    nu.sort_unstable();
    nv.sort_unstable();
    nu == nv
}

pub fn nd_partition(g: &Graph) -> NdPartition {
    let n = g.n();
    let mut class_id = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let mut placed = false;
        for (id, class) in classes.iter_mut().enumerate() {
            if same_type(g, class[0], v) {
                class.push(v);
                class_id[v] = id;
                placed = true;
                break;
            }
        }
        if !placed {
            class_id[v] = classes.len();
            classes.push(vec![v]);
        }
    }
    let clique_class = classes
        .iter()
        .map(|c| c.len() >= 2 && g.has_edge(c[0], c[1]))
        .collect();
    NdPartition { classes, clique_class }
}

/// Groups the independent side `I = V \ U` by exact neighborhood. Returns
/// `(S, C_S)` pairs ordered by the smallest member of each class; `S` is the
/// shared neighborhood (a subset of `U`).
pub fn equivalence_classes_vc(
    g: &Graph,
    cover: &CoverCertificate,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>, ParamError> {
    if cover.kind != CoverKind::Vc {
        return Err(ParamError::BadCertificate(
            cover.kind.name(),
            "equivalence classes need a vertex cover".into(),
        ));
    }
    cover.verify(g)?;
    let mut in_cover = vec![false; g.n()];
    for &v in &cover.set {
        in_cover[v] = true;
    }
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in 0..g.n() {
        if in_cover[v] {
            continue;
        }
        let nbhd = g.neighbors(v).to_vec();
        match classes.iter_mut().find(|(s, _)| *s == nbhd) {
            Some((_, members)) => members.push(v),
            None => classes.push((nbhd, vec![v])),
        }
    }
    Ok(classes)
}
