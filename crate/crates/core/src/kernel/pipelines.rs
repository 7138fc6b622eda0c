//! The six kernelization pipelines.
//!
//! Shared discipline: threshold rules first, then the k = 1 direct solve,
//! then deletion rules scanned to exhaustion. Deletions pick the lowest
//! eligible witness and keep lowest ids on ties, so traces and image maps
//! are reproducible. Deleting an independent-set vertex never changes the
//! neighborhood of another, so one rescan loop per rule reaches the unique
//! fixpoint.

use super::{ceil_div, KernelResult, ParamKind, Reducer, RuleKind};
use crate::error::KernelError;
use crate::game::{solve, VariantSpec};
use crate::graph::{is_subset, Graph};
use crate::params::{equivalence_classes_vc, nd_partition, CoverCertificate, CoverKind};

fn require_undirected(g: &Graph, pipeline: &'static str) -> Result<(), KernelError> {
    if g.is_directed() {
        return Err(KernelError::Unsupported(format!(
            "the {pipeline} pipeline needs an undirected graph"
        )));
    }
    Ok(())
}

fn require_k(k: usize) -> Result<(), KernelError> {
    if k == 0 {
        return Err(KernelError::Unsupported("k must be at least 1".into()));
    }
    Ok(())
}

fn require_kind(
    cover: &CoverCertificate,
    want: CoverKind,
    pipeline: &'static str,
) -> Result<(), KernelError> {
    if cover.kind != want {
        return Err(KernelError::CoverKindMismatch { got: cover.kind.name(), pipeline });
    }
    Ok(())
}

fn cover_mask(n: usize, cover: &CoverCertificate) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in &cover.set {
        mask[v] = true;
    }
    mask
}

fn neighborhood_in(g: &Graph, v: usize, mask: &[bool]) -> Vec<usize> {
    g.neighbors(v).iter().copied().filter(|&u| mask[u]).collect()
}

/// Connected components of the subgraph induced by `keep`, as sorted lists.
fn components_within(g: &Graph, keep: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if !keep[s] || seen[s] {
            continue;
        }
        let mut members = vec![s];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if keep[w] && !seen[w] {
                    seen[w] = true;
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

/// Exhausts a pairwise domination rule over `members`: deletes `u` whenever
/// `key(u) ⊆ key(v)` strictly, or the keys are equal and `v` has the lower
/// id (so the lowest member of an equal group survives).
fn dominated_loop(
    red: &mut Reducer,
    members: &[usize],
    keys: &[Vec<usize>],
    idx_of: impl Fn(usize) -> usize,
    rule: RuleKind,
) {
    loop {
        let mut acted = false;
        'scan: for &u in members {
            if !red.is_alive(u) {
                continue;
            }
            for &v in members {
                if v == u || !red.is_alive(v) {
                    continue;
                }
                let ku = &keys[idx_of(u)];
                let kv = &keys[idx_of(v)];
                if is_subset(ku, kv) && (ku.len() < kv.len() || v < u) {
                    red.delete(rule, u, v);
                    acted = true;
                    break 'scan;
                }
            }
        }
        if !acted {
            return;
        }
    }
}

/// Vertex-cover kernel for the classic game: threshold answer, k = 1 direct
/// solve, then deletion of independent-set vertices with dominated
/// neighborhoods. The surviving independent side is an antichain of
/// neighborhoods.
pub fn kernelize_vcn(
    g: &Graph,
    k: usize,
    cover: &CoverCertificate,
) -> Result<KernelResult, KernelError> {
    require_undirected(g, "vc")?;
    require_k(k)?;
    require_kind(cover, CoverKind::Vc, "vc")?;
    cover.verify(g)?;
    let t = cover.t();
    let mut red = Reducer::new(g, ParamKind::Vc, k);
    if k >= ceil_div(t, 3) + 1 {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, &VariantSpec::classic(1))?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    let mask = cover_mask(g.n(), cover);
    let indep: Vec<usize> = (0..g.n()).filter(|&v| !mask[v]).collect();
    let keys: Vec<Vec<usize>> = indep.iter().map(|&v| g.neighbors(v).to_vec()).collect();
    let pos: std::collections::HashMap<usize, usize> =
        indep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    dominated_loop(&mut red, &indep, &keys, |v| pos[&v], RuleKind::DominatedIndep);
    red.finish()
}

/// Cluster-vertex-deletion kernel: per-clique domination followed by
/// whole-clique subsumption.
pub fn kernelize_cvd(
    g: &Graph,
    k: usize,
    cover: &CoverCertificate,
) -> Result<KernelResult, KernelError> {
    require_undirected(g, "cvd")?;
    require_k(k)?;
    require_kind(cover, CoverKind::Cvd, "cvd")?;
    cover.verify(g)?;
    let t = cover.t();
    let mut red = Reducer::new(g, ParamKind::Cvd, k);
    if k >= ceil_div(t, 2) + 1 {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, &VariantSpec::classic(1))?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    let mask = cover_mask(g.n(), cover);
    let rest: Vec<bool> = (0..g.n()).map(|v| !mask[v]).collect();
    let cliques = components_within(g, &rest);
    let nu: Vec<Vec<usize>> = (0..g.n()).map(|v| neighborhood_in(g, v, &mask)).collect();

    for clique in &cliques {
        dominated_loop(&mut red, clique, &nu, |v| v, RuleKind::CliqueDominated);
    }
    subsume_groups(&mut red, &cliques, &nu, RuleKind::CliqueSubsume, None);
    red.finish()
}

/// Deletion-to-stars kernel: sibling-leaf domination followed by whole-star
/// subsumption (centers map to centers, leaves to leaves).
pub fn kernelize_dts(
    g: &Graph,
    k: usize,
    cover: &CoverCertificate,
) -> Result<KernelResult, KernelError> {
    require_undirected(g, "dts")?;
    require_k(k)?;
    require_kind(cover, CoverKind::Dts, "dts")?;
    cover.verify(g)?;
    let t = cover.t();
    let mut red = Reducer::new(g, ParamKind::Dts, k);
    if k >= ceil_div(t, 2) + 1 {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, &VariantSpec::classic(1))?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    let mask = cover_mask(g.n(), cover);
    let rest: Vec<bool> = (0..g.n()).map(|v| !mask[v]).collect();
    let stars = components_within(g, &rest);
    let nu: Vec<Vec<usize>> = (0..g.n()).map(|v| neighborhood_in(g, v, &mask)).collect();

    // Canonical center: the unique member with two or more neighbors inside
    // the star, else the lowest id.
    let centers: Vec<usize> = stars
        .iter()
        .map(|comp| {
            comp.iter()
                .copied()
                .find(|&v| {
                    g.neighbors(v).iter().filter(|&&u| comp.binary_search(&u).is_ok()).count() >= 2
                })
                .unwrap_or(comp[0])
        })
        .collect();

    for (star, &center) in stars.iter().zip(&centers) {
        let leaves: Vec<usize> = star.iter().copied().filter(|&v| v != center).collect();
        dominated_loop(&mut red, &leaves, &nu, |v| v, RuleKind::StarLeafDominated);
    }
    subsume_groups(&mut red, &stars, &nu, RuleKind::StarSubsume, Some(&centers));
    red.finish()
}

/// Whole-group subsumption shared by the clique and star pipelines: delete
/// group `i` when every live member has a live witness in group `j` with a
/// containing deletion-set neighborhood; star centers must map to centers.
/// On mutual subsumption the group with the lower minimum id survives.
fn subsume_groups(
    red: &mut Reducer,
    groups: &[Vec<usize>],
    nu: &[Vec<usize>],
    rule: RuleKind,
    centers: Option<&[usize]>,
) {
    let live_members = |red: &Reducer, gi: usize| -> Vec<usize> {
        groups[gi].iter().copied().filter(|&v| red.is_alive(v)).collect()
    };
    let witness_pool = |red: &Reducer, gj: usize, want_center: Option<bool>| -> Vec<usize> {
        live_members(red, gj)
            .into_iter()
            .filter(|&v| match (centers, want_center) {
                (Some(cs), Some(true)) => v == cs[gj],
                (Some(cs), Some(false)) => v != cs[gj],
                _ => true,
            })
            .collect()
    };
    let subsumes = |red: &Reducer, gi: usize, gj: usize| -> bool {
        live_members(red, gi).into_iter().all(|u| {
            let want_center = centers.map(|cs| u == cs[gi]);
            witness_pool(red, gj, want_center)
                .into_iter()
                .any(|v| is_subset(&nu[u], &nu[v]))
        })
    };
    loop {
        let mut order: Vec<usize> = (0..groups.len())
            .filter(|&gi| !live_members(red, gi).is_empty())
            .collect();
        order.sort_by_key(|&gi| groups[gi][0]);
        let mut acted = false;
        'scan: for &gi in order.iter().rev() {
            for &gj in &order {
                if gi == gj || live_members(red, gj).is_empty() {
                    continue;
                }
                if !subsumes(red, gi, gj) {
                    continue;
                }
                // Mutual subsumption: keep the group holding the lower id.
                if subsumes(red, gj, gi) && groups[gj][0] > groups[gi][0] {
                    continue;
                }
                for u in live_members(red, gi) {
                    let want_center = centers.map(|cs| u == cs[gi]);
                    let w = witness_pool(red, gj, want_center)
                        .into_iter()
                        .find(|&v| is_subset(&nu[u], &nu[v]))
                        .expect("subsumption witnessed");
                    red.delete(rule, u, w);
                }
                acted = true;
                break 'scan;
            }
        }
        if !acted {
            return;
        }
    }
}

/// Linear kernel by neighborhood diversity: one representative per
/// same-type class.
pub fn kernelize_nd(g: &Graph, k: usize) -> Result<KernelResult, KernelError> {
    require_undirected(g, "nd")?;
    require_k(k)?;
    let part = nd_partition(g);
    let w = part.width();
    let mut red = Reducer::new(g, ParamKind::Nd, k);
    if k >= w {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, &VariantSpec::classic(1))?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    for class in &part.classes {
        let rep = class[0];
        for &v in &class[1..] {
            red.delete(RuleKind::TypeCollapse, v, rep);
        }
    }
    red.finish()
}

/// Kernel for the classic game on strongly connected digraphs: delete
/// independent-side vertices dominated on both in- and out-neighborhoods.
/// The cover certifies the underlying undirected graph.
pub fn kernelize_directed(
    g: &Graph,
    k: usize,
    cover: &CoverCertificate,
) -> Result<KernelResult, KernelError> {
    if !g.is_directed() {
        return Err(KernelError::Unsupported(
            "the directed pipeline needs a directed graph".into(),
        ));
    }
    require_k(k)?;
    require_kind(cover, CoverKind::Vc, "directed")?;
    if !g.is_solver_ready() {
        return Err(KernelError::Game(crate::error::GameError::Disconnected { directed: true }));
    }
    let underlying = underlying_graph(g);
    cover.verify(&underlying)?;
    let t = cover.t();
    let mut red = Reducer::new(g, ParamKind::Directed, k);
    if k >= t {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, &VariantSpec::directed_classic(1))?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    let mask = cover_mask(g.n(), cover);
    let indep: Vec<usize> = (0..g.n()).filter(|&v| !mask[v]).collect();
    loop {
        let mut acted = false;
        'scan: for &u in &indep {
            if !red.is_alive(u) {
                continue;
            }
            for &v in &indep {
                if v == u || !red.is_alive(v) {
                    continue;
                }
                let (ou, iu) = (g.neighbors(u), g.in_neighbors(u));
                let (ov, iv) = (g.neighbors(v), g.in_neighbors(v));
                if is_subset(ou, ov) && is_subset(iu, iv) {
                    let strict = ou.len() < ov.len() || iu.len() < iv.len();
                    if strict || v < u {
                        red.delete(RuleKind::DirectedDominated, u, v);
                        acted = true;
                        break 'scan;
                    }
                }
            }
        }
        if !acted {
            break;
        }
    }
    let result = red.finish()?;
    // Deleting a vertex dominated on both sides keeps strong connectivity:
    // re-check and refuse to emit a broken kernel.
    if !result.reduced.is_solver_ready() {
        return Err(KernelError::Unsupported(
            "reduced digraph lost strong connectivity; this contradicts the deletion rule"
                .into(),
        ));
    }
    Ok(result)
}

pub(crate) fn underlying_graph(g: &Graph) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.n(), &edges, false).expect("underlying graph")
}

/// Rule-set-generic kernel: truncate every exact-neighborhood equivalence
/// class of the independent side to k+1 members (lowest ids kept). Valid
/// for any validated undirected rule set, surround capture included.
pub fn kernelize_generalized(
    g: &Graph,
    spec: &VariantSpec,
    cover: &CoverCertificate,
) -> Result<KernelResult, KernelError> {
    spec.validate()?;
    if spec.directed {
        return Err(KernelError::Unsupported(
            "the generalized pipeline covers undirected rule sets; use the directed pipeline"
                .into(),
        ));
    }
    require_undirected(g, "general")?;
    require_kind(cover, CoverKind::Vc, "general")?;
    cover.verify(g)?;
    let k = spec.k();
    let t = cover.t();
    let mut red = Reducer::new(g, ParamKind::Generalized, k);
    let threshold =
        if spec.robber.attacking || spec.all_lazy() { ceil_div(t, 2) + 1 } else { t };
    if k >= threshold {
        red.record_verdict(RuleKind::ThresholdYes, crate::game::Verdict::CopWin);
        return red.finish();
    }
    if k == 1 {
        let v = solve(g, spec)?.verdict;
        red.record_verdict(RuleKind::DirectSolve, v);
        return red.finish();
    }
    for (_, members) in equivalence_classes_vc(g, cover)? {
        if members.len() > k + 1 {
            let rep = members[0];
            for &v in &members[k + 1..] {
                red.delete(RuleKind::ClassTruncate, v, rep);
            }
        }
    }
    red.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{oracle_solve, solve, Verdict};
    use crate::graph::builders::*;
    use crate::params::{vertex_cover, VcMode};

    fn vc_cover(g: &Graph, set: &[usize]) -> CoverCertificate {
        CoverCertificate::from_set(g, CoverKind::Vc, set.to_vec()).unwrap()
    }

    #[test]
    fn vcn_collapses_false_twins() {
        // All six independent-side vertices of K4,6 share one neighborhood.
        let g = complete_bipartite(4, 6);
        let cover = vc_cover(&g, &[0, 1, 2, 3]);
        let kr = kernelize_vcn(&g, 2, &cover).unwrap();
        assert!(kr.verdict.is_none());
        assert_eq!(kr.reduced.n(), 5);
        assert_eq!(kr.kept, vec![0, 1, 2, 3, 4]);
        assert!(kr.image[5..].iter().all(|&w| w == 4));
        assert_eq!(solve(&kr.reduced, &VariantSpec::classic(2)).unwrap().verdict, Verdict::CopWin);
        assert_eq!(oracle_solve(&g, &VariantSpec::classic(2)).unwrap(), Verdict::CopWin);
    }

    #[test]
    fn vcn_leaves_incomparable_neighborhoods() {
        let g = cycle(7);
        let cover = vc_cover(&g, &[0, 2, 4, 6]);
        let kr = kernelize_vcn(&g, 2, &cover).unwrap();
        assert!(kr.verdict.is_none());
        assert_eq!(kr.reduced.n(), 7);
        assert!(kr.trace.is_empty());
    }

    #[test]
    fn vcn_threshold_and_direct_solve() {
        let g = star(9);
        let cover = vc_cover(&g, &[0]);
        let kr = kernelize_vcn(&g, 2, &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
        assert!(matches!(kr.trace[0], super::super::TraceEntry::Verdict { rule: RuleKind::ThresholdYes, yes: true }));

        // k = 1 goes to the solver, never to a deletion: the 4-cycle keeps
        // all corners and the verdict is honest.
        let c4 = cycle(4);
        let kr = kernelize_vcn(&c4, 1, &vc_cover(&c4, &[0, 2])).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::RobberWin));
        assert_eq!(kr.deleted(), 0);
    }

    #[test]
    fn cvd_collapses_pendant_clique() {
        // K5 with a pendant vertex on 0. A deletion set of size 3 keeps the
        // threshold rule quiet at k = 2 and leaves the K2 {3,4} plus the
        // isolated pendant 5 as cliques.
        let mut edges = vec![(0usize, 5usize)];
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(6, &edges, false).unwrap();
        let cover = CoverCertificate::from_set(&g, CoverKind::Cvd, vec![0, 1, 2]).unwrap();
        let kr = kernelize_cvd(&g, 2, &cover).unwrap();
        // {3,4} collapses to 3 (equal cover neighborhoods), then the
        // pendant's singleton clique is subsumed by {3}.
        assert!(kr.verdict.is_none());
        assert_eq!(kr.kept, vec![0, 1, 2, 3]);
        assert_eq!(
            solve(&kr.reduced, &VariantSpec::classic(2)).unwrap().verdict,
            solve(&g, &VariantSpec::classic(2)).unwrap().verdict
        );
    }

    #[test]
    fn cvd_apexes_over_two_triangles() {
        // Two disjoint triangles plus three pairwise non-adjacent apexes
        // adjacent to all six triangle vertices (t = 3).
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        for a in 6..9 {
            for v in 0..6 {
                edges.push((a, v));
            }
        }
        let g = Graph::new(9, &edges, false).unwrap();
        let cover = CoverCertificate::from_set(&g, CoverKind::Cvd, vec![6, 7, 8]).unwrap();
        let kr = kernelize_cvd(&g, 2, &cover).unwrap();
        assert!(kr.verdict.is_none());
        // Each triangle collapses to one vertex, then the second singleton
        // is subsumed by the first.
        assert_eq!(kr.kept, vec![0, 6, 7, 8]);
        assert_eq!(
            solve(&kr.reduced, &VariantSpec::classic(2)).unwrap().verdict,
            solve(&g, &VariantSpec::classic(2)).unwrap().verdict
        );
    }

    #[test]
    fn cvd_threshold() {
        let g = cycle(5);
        let cover = CoverCertificate::from_set(&g, CoverKind::Cvd, vec![0, 2]).unwrap();
        let kr = kernelize_cvd(&g, 2, &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
    }

    #[test]
    fn dts_deletes_identical_pendant_star() {
        // Deletion set {0,1,2} on a path; two stars with matching cover
        // profiles: centers 3 and 6 on vertex 0, leaf pairs on 1 and 2.
        let edges = vec![
            (0, 1), (1, 2), (3, 0), (6, 0), (4, 1), (7, 1), (5, 2), (8, 2),
            (3, 4), (3, 5), (6, 7), (6, 8),
        ];
        let g = Graph::new(9, &edges, false).unwrap();
        let cover = CoverCertificate::from_set(&g, CoverKind::Dts, vec![0, 1, 2]).unwrap();
        let kr = kernelize_dts(&g, 2, &cover).unwrap();
        assert!(kr.verdict.is_none());
        // The whole second star goes, leaf to leaf and center to center.
        assert_eq!(kr.kept, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(kr.image[6], 3);
        assert_eq!(kr.image[7], 4);
        assert_eq!(kr.image[8], 5);
        assert_eq!(
            solve(&kr.reduced, &VariantSpec::classic(2)).unwrap().verdict,
            solve(&g, &VariantSpec::classic(2)).unwrap().verdict
        );
    }

    #[test]
    fn dts_keeps_incomparable_leaves() {
        // One star (center 3, leaves 4 and 5) whose leaves see different
        // cover vertices: nothing is deletable.
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (3, 0), (4, 1), (5, 2), (3, 4), (3, 5)],
            false,
        )
        .unwrap();
        let cover = CoverCertificate::from_set(&g, CoverKind::Dts, vec![0, 1, 2]).unwrap();
        let kr = kernelize_dts(&g, 2, &cover).unwrap();
        assert_eq!(kr.verdict, None);
        assert_eq!(kr.deleted(), 0);
    }

    #[test]
    fn nd_kernel_examples() {
        let octa = complete_multipartite(&[2, 2, 2]);
        let kr = kernelize_nd(&octa, 2, ).unwrap();
        assert!(kr.verdict.is_none());
        assert_eq!(kr.reduced.n(), 3);
        assert!(crate::graph::iso::isomorphic(&kr.reduced, &complete(3)));
        assert_eq!(solve(&kr.reduced, &VariantSpec::classic(2)).unwrap().verdict, Verdict::CopWin);

        let k23 = complete_bipartite(2, 3);
        let kr = kernelize_nd(&k23, 2).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));

        let c5 = cycle(5);
        let kr = kernelize_nd(&c5, 2).unwrap();
        assert_eq!(kr.verdict, None);
        assert_eq!(kr.reduced.n(), 5);
    }

    #[test]
    fn directed_kernel_deletes_dominated_vertex() {
        // Cover {0,2,4}; vertex 1 is dominated by 3 on both sides once the
        // extra arcs 0->3 and 3->2 exist.
        let arcs = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (3, 2)];
        let g = Graph::new(6, &arcs, true).unwrap();
        assert!(g.is_solver_ready());
        let underlying = underlying_graph(&g);
        let cover = CoverCertificate::from_set(&underlying, CoverKind::Vc, vec![0, 2, 4]).unwrap();
        let kr = kernelize_directed(&g, 2, &cover).unwrap();
        assert!(kr.kept.contains(&3));
        assert!(!kr.kept.contains(&1));
        assert!(kr.reduced.is_solver_ready());
        assert_eq!(
            solve(&kr.reduced, &VariantSpec::directed_classic(2)).unwrap().verdict,
            solve(&g, &VariantSpec::directed_classic(2)).unwrap().verdict
        );
    }

    #[test]
    fn directed_threshold_and_k1() {
        let g = directed_cycle(4);
        let u = underlying_graph(&g);
        let cover = CoverCertificate::from_set(&u, CoverKind::Vc, vec![0, 2]).unwrap();
        let kr = kernelize_directed(&g, 2, &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
        // One cop never corners a robber on a directed 4-cycle; the k = 1
        // route must report that honestly, with no deletions.
        let kr = kernelize_directed(&g, 1, &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::RobberWin));
        assert_eq!(kr.deleted(), 0);
    }

    #[test]
    fn generalized_truncates_classes() {
        // k = 2 below t = 3: the size-5 class keeps k+1 = 3 lowest members.
        let g = complete_bipartite(3, 5);
        let cover = vc_cover(&g, &[0, 1, 2]);
        let spec = VariantSpec::fast_robber(2, 2);
        let kr = kernelize_generalized(&g, &spec, &cover).unwrap();
        assert!(kr.verdict.is_none());
        assert_eq!(kr.kept, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(
            solve(&kr.reduced, &spec).unwrap().verdict,
            solve(&g, &spec).unwrap().verdict
        );

        // Class size 3 with k+1 = 3: truncation does not trigger.
        let k33 = complete_bipartite(3, 3);
        let kr = kernelize_generalized(&k33, &VariantSpec::fast_robber(2, 2), &vc_cover(&k33, &[0, 1, 2]))
            .unwrap();
        assert_eq!(kr.verdict, None);
        assert_eq!(kr.deleted(), 0);

        // k at or above t short-circuits to a yes before any deletion.
        let k23 = complete_bipartite(2, 3);
        let kr = kernelize_generalized(&k23, &VariantSpec::classic(3), &vc_cover(&k23, &[0, 1]))
            .unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
        assert_eq!(kr.deleted(), 0);
    }

    #[test]
    fn generalized_thresholds() {
        let g = complete_bipartite(2, 4);
        let cover = vc_cover(&g, &[0, 1]);
        // Surround with k = t fires the threshold, and the claim is honest.
        let kr = kernelize_generalized(&g, &VariantSpec::surround(2), &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
        assert_eq!(solve(&g, &VariantSpec::surround(2)).unwrap().verdict, Verdict::CopWin);
        // Lazy cops get the sharper ceil(t/2)+1 bound: t = 4 on an 8-cycle
        // fires at k = 3 but not at k = 2.
        let c8 = cycle(8);
        let cover = vertex_cover(&c8, VcMode::Exact).unwrap();
        assert_eq!(cover.t(), 4);
        let kr = kernelize_generalized(&c8, &VariantSpec::lazy(3), &cover).unwrap();
        assert_eq!(kr.verdict, Some(Verdict::CopWin));
        assert_eq!(solve(&c8, &VariantSpec::lazy(3)).unwrap().verdict, Verdict::CopWin);
        let kr = kernelize_generalized(&c8, &VariantSpec::lazy(2), &cover).unwrap();
        assert_eq!(kr.verdict, None);
    }

    #[test]
    fn cover_kind_mismatch_is_rejected() {
        let g = cycle(4);
        let cvd = CoverCertificate::from_set(&g, CoverKind::Cvd, vec![0, 1]).unwrap();
        assert!(matches!(
            kernelize_vcn(&g, 2, &cvd),
            Err(KernelError::CoverKindMismatch { .. })
        ));
        let vc = vc_cover(&g, &[0, 2]);
        assert!(matches!(
            kernelize_cvd(&g, 2, &vc),
            Err(KernelError::CoverKindMismatch { .. })
        ));
    }

    #[test]
    fn idempotence_on_examples() {
        let g = complete_bipartite(4, 6);
        let cover = vc_cover(&g, &[0, 1, 2, 3]);
        let kr = kernelize_vcn(&g, 2, &cover).unwrap();
        let cover2 = CoverCertificate::from_set(&kr.reduced, CoverKind::Vc, vec![0, 1, 2, 3]).unwrap();
        let kr2 = kernelize_vcn(&kr.reduced, 2, &cover2).unwrap();
        assert_eq!(kr2.deleted(), 0);
    }
}
