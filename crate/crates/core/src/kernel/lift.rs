//! Lifting a winning kernel strategy back to the original graph.
//!
//! The cops play the kernel game against the robber's *image*: identity on
//! survivors, the recorded witness chain on deleted vertices. Every robber
//! move maps to a legal kernel move because each deletion guarantees
//! neighborhood containment into its witness. Once the image is captured,
//! either the robber is on a survivor (and is actually caught) or it sits
//! on a deleted vertex `u` while a cop holds its witness `v`; that cop pins
//! `u` (any escape lands next to `v`), a second cop walks a shortest path
//! to `u`, and the capture lands within the kernel rank plus the diameter.

use super::{KernelResult, ParamKind};
use crate::error::{GameError, KernelError};
use crate::game::policy::CopPolicy;
use crate::game::solve::{Solution, Verdict};
use crate::game::{GameState, Turn, VariantSpec};
use crate::graph::Graph;

pub struct LiftedPolicy<'a> {
    g: &'a Graph,
    kres: &'a KernelResult,
    ksol: &'a Solution,
    pin: Option<PinPlan>,
}

struct PinPlan {
    target: usize,
    walker_slot: usize,
    path: Vec<usize>,
    next: usize,
}

/// Builds the lifted cop policy for a classic game with at least two cops.
/// `ksol` must be a cop-win solution of `kres.reduced`.
pub fn lift_strategy<'a>(
    g: &'a Graph,
    kres: &'a KernelResult,
    ksol: &'a Solution,
) -> Result<LiftedPolicy<'a>, KernelError> {
    if !matches!(kres.param, ParamKind::Vc | ParamKind::Nd) {
        return Err(KernelError::Unsupported(format!(
            "strategy lifting is defined for the vc and nd kernels, not {}",
            kres.param
        )));
    }
    if kres.verdict.is_some() {
        return Err(KernelError::Unsupported(
            "kernel carries an early verdict; there is no positional strategy to lift".into(),
        ));
    }
    if !ksol.spec().is_classic() {
        return Err(KernelError::Unsupported(
            "strategy lifting is implemented for the classic rule set only".into(),
        ));
    }
    if ksol.k() < 2 {
        return Err(KernelError::Unsupported("strategy lifting needs at least two cops".into()));
    }
    if ksol.verdict != Verdict::CopWin {
        return Err(KernelError::Game(GameError::NotCopWin(
            "cannot lift a strategy from a robber-won kernel".into(),
        )));
    }
    if g.n() != kres.image.len() {
        return Err(KernelError::Unsupported("graph does not match the kernel result".into()));
    }
    if ksol.graph().n() != kres.reduced.n() || ksol.graph().edges() != kres.reduced.edges() {
        return Err(KernelError::Unsupported("solution does not match the reduced graph".into()));
    }
    Ok(LiftedPolicy { g, kres, ksol, pin: None })
}

impl LiftedPolicy<'_> {
    fn greedy_capture(&self, state: &GameState) -> Option<Vec<Option<usize>>> {
        let r = state.robber.expect("placed robber");
        let slot = state
            .cops
            .iter()
            .position(|c| c.is_some_and(|p| self.g.has_edge(p, r)))?;
        let mut out = state.cops.clone();
        out[slot] = Some(r);
        Some(out)
    }
}

impl CopPolicy for LiftedPolicy<'_> {
    fn place(&mut self, _g: &Graph, _spec: &VariantSpec) -> Result<Vec<usize>, GameError> {
        self.pin = None;
        let red = self.ksol.placement.clone().expect("cop-win kernel has a placement");
        Ok(red.into_iter().map(|i| self.kres.kept[i]).collect())
    }

    fn step(
        &mut self,
        _g: &Graph,
        _spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Vec<Option<usize>>, GameError> {
        if let Some(out) = self.greedy_capture(state) {
            return Ok(out);
        }
        let r = state.robber.ok_or_else(|| GameError::MalformedState("no robber".into()))?;

        if self.pin.is_none() {
            let image = self.kres.image[r];
            if state.cops.contains(&Some(image)) {
                // Image captured while the robber hides on a deleted vertex:
                // the cop on the witness pins it, the nearest other cop
                // fetches.
                debug_assert_ne!(image, r, "a capture would have ended the game");
                let pinner = state
                    .cops
                    .iter()
                    .position(|c| *c == Some(image))
                    .expect("checked above");
                let walker = state
                    .cops
                    .iter()
                    .enumerate()
                    .filter(|&(slot, c)| slot != pinner && c.is_some())
                    .min_by_key(|&(slot, c)| {
                        (self.g.bfs_from(c.unwrap())[r], slot)
                    })
                    .map(|(slot, _)| slot)
                    .expect("lifting requires at least two cops");
                let path = self
                    .g
                    .isometric_path(state.cops[walker].unwrap(), r)
                    .map_err(|e| GameError::MalformedState(e.to_string()))?;
                self.pin = Some(PinPlan { target: r, walker_slot: walker, path, next: 1 });
            }
        }

        if let Some(pin) = &mut self.pin {
            if r != pin.target || pin.next >= pin.path.len() {
                return Err(GameError::MalformedState(
                    "pin invariant broken: the pinned robber escaped uncaptured".into(),
                ));
            }
            let mut out = state.cops.clone();
            out[pin.walker_slot] = Some(pin.path[pin.next]);
            pin.next += 1;
            return Ok(out);
        }

        // Chase: replay the kernel policy against the robber's image.
        let cops_red: Vec<usize> = state
            .cops
            .iter()
            .map(|c| {
                let p = c.ok_or_else(|| {
                    GameError::MalformedState("classic cops cannot be eliminated".into())
                })?;
                self.kres.reduced_index(p).ok_or_else(|| {
                    GameError::MalformedState(format!("cop off the kernel at {p}"))
                })
            })
            .collect::<Result<_, _>>()?;
        let kstate = GameState::new(cops_red, self.kres.image_index(r), Turn::Cop);
        let kpos = self.ksol.to_pos(&kstate)?;
        let succ = self.ksol.policy_successor(&kpos)?;
        let out = crate::game::copset_slots(&succ.cops, self.ksol.k());
        Ok(out
            .into_iter()
            .map(|c| c.map(|i| self.kres.kept[i]))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::policy::OptimalRobberPolicy;
    use crate::game::{simulate, solve};
    use crate::graph::builders::*;
    use crate::kernel::{kernelize_nd, kernelize_vcn};
    use crate::params::{CoverCertificate, CoverKind};

    fn lift_and_chase(g: &Graph, kres: &KernelResult, k: usize) -> usize {
        let spec = VariantSpec::classic(k);
        let ksol = solve(&kres.reduced, &spec).unwrap();
        assert_eq!(ksol.verdict, Verdict::CopWin);
        let mut lifted = lift_strategy(g, kres, &ksol).unwrap();
        let full = solve(g, &spec).unwrap();
        assert_eq!(full.verdict, Verdict::CopWin);
        let mut robber = OptimalRobberPolicy { sol: &full };
        let trace = simulate(g, &spec, &mut lifted, &mut robber).unwrap();
        trace.capture_round().expect("lifted policy must capture")
    }

    #[test]
    fn lifts_on_bipartite_collapse() {
        let g = complete_bipartite(4, 6);
        let cover = CoverCertificate::from_set(&g, CoverKind::Vc, vec![0, 1, 2, 3]).unwrap();
        let kres = kernelize_vcn(&g, 2, &cover).unwrap();
        assert!(kres.deleted() > 0);
        let round = lift_and_chase(&g, &kres, 2);
        assert!(round > 0);
    }

    #[test]
    fn lifts_identity_kernel() {
        let g = cycle(7);
        let cover = CoverCertificate::from_set(&g, CoverKind::Vc, vec![0, 2, 4, 6]).unwrap();
        let kres = kernelize_vcn(&g, 2, &cover).unwrap();
        assert_eq!(kres.deleted(), 0);
        lift_and_chase(&g, &kres, 2);
    }

    #[test]
    fn lifts_duplicated_corner() {
        // An 8-cycle with vertex 1 duplicated as a false twin; the cover
        // size 4 keeps the threshold rule out of the way at k = 2.
        let g = Graph::new(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (8, 0), (8, 2)],
            false,
        )
        .unwrap();
        let cover = CoverCertificate::from_set(&g, CoverKind::Vc, vec![0, 2, 4, 6]).unwrap();
        let kres = kernelize_vcn(&g, 2, &cover).unwrap();
        assert_eq!(kres.deleted(), 1);
        assert_eq!(kres.image[8], 1);
        let dist = crate::graph::DistanceTable::new(&g);
        let round = lift_and_chase(&g, &kres, 2);
        let spec = VariantSpec::classic(2);
        let ksol = solve(&kres.reduced, &spec).unwrap();
        let placement = ksol.placement.clone().unwrap();
        let mapped: Vec<usize> = placement.iter().map(|&i| kres.kept[i]).collect();
        let full = solve(&g, &spec).unwrap();
        let start = full.optimal_robber_placement(&mapped).unwrap().unwrap();
        let state = GameState::new(placement.clone(), kres.image_index(start), Turn::Cop);
        let rank = ksol.rank_of(&state).unwrap().unwrap() as usize;
        assert!(
            round <= rank + dist.diameter() as usize,
            "round {round} rank {rank} diam {}",
            dist.diameter()
        );
    }

    #[test]
    fn lifts_nd_kernel_with_true_twins() {
        // A clique class: K4 with a pendant path, collapsed by type.
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)], false)
            .unwrap();
        let kres = kernelize_nd(&g, 2).unwrap();
        assert!(kres.deleted() > 0);
        lift_and_chase(&g, &kres, 2);
    }

    #[test]
    fn lift_rejections() {
        let g = complete_bipartite(2, 3);
        let cover = CoverCertificate::from_set(&g, CoverKind::Vc, vec![0, 1]).unwrap();
        let kres = kernelize_vcn(&g, 2, &cover).unwrap();
        // Early verdict: nothing to lift.
        assert!(kres.verdict.is_some());
        let ksol = solve(&g, &VariantSpec::classic(2)).unwrap();
        assert!(lift_strategy(&g, &kres, &ksol).is_err());

        // One cop is not enough to pin and fetch.
        let c7 = cycle(7);
        let cover = CoverCertificate::from_set(&c7, CoverKind::Vc, vec![0, 2, 4, 6]).unwrap();
        let kres = kernelize_vcn(&c7, 2, &cover).unwrap();
        let ksol1 = solve(&kres.reduced, &VariantSpec::classic(1)).unwrap();
        assert!(lift_strategy(&c7, &kres, &ksol1).is_err());
    }
}
