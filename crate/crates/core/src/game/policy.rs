//! Playable policies for both sides.
//!
//! A policy produces an opening placement and then one move per turn; the
//! simulator validates every returned move against the rule set, so a buggy
//! policy fails loudly instead of corrupting a playout.

use super::moves::Rules;
use super::solve::{Solution, Verdict};
use super::spec::{CaptureMode, VariantSpec};
use super::{copset_slots, state_positions, GameState, Turn};
use crate::error::GameError;
use crate::graph::{DistanceTable, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub trait CopPolicy {
    fn place(&mut self, g: &Graph, spec: &VariantSpec) -> Result<Vec<usize>, GameError>;
    /// The joint move from a cop-to-move state: one entry per cop slot,
    /// `None` for eliminated cops.
    fn step(&mut self, g: &Graph, spec: &VariantSpec, state: &GameState)
        -> Result<Vec<Option<usize>>, GameError>;
}

pub trait RobberPolicy {
    /// The opening vertex, or `None` when no legal placement exists.
    fn place(
        &mut self,
        g: &Graph,
        spec: &VariantSpec,
        cops: &[Option<usize>],
    ) -> Result<Option<usize>, GameError>;
    /// The end vertex of the robber's move (moving onto a cop is an attack
    /// in attacking games), or `None` when the robber has no legal move.
    fn step(&mut self, g: &Graph, spec: &VariantSpec, state: &GameState)
        -> Result<Option<usize>, GameError>;
}

/// The cop side of the solved fixpoint: opens on the recorded winning
/// placement and then always moves to the winning successor of minimum
/// rank.
pub struct OptimalCopPolicy<'a> {
    sol: &'a Solution,
}

/// Positional policy readout of a cop-won solution.
pub fn extract_strategy(sol: &Solution) -> Result<OptimalCopPolicy<'_>, GameError> {
    if sol.verdict != Verdict::CopWin {
        return Err(GameError::NotCopWin(
            "cannot extract a cop strategy from a robber-won game".into(),
        ));
    }
    Ok(OptimalCopPolicy { sol })
}

impl CopPolicy for OptimalCopPolicy<'_> {
    fn place(&mut self, _g: &Graph, _spec: &VariantSpec) -> Result<Vec<usize>, GameError> {
        Ok(self.sol.placement.clone().expect("cop-win solution has a placement"))
    }

    fn step(
        &mut self,
        _g: &Graph,
        spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Vec<Option<usize>>, GameError> {
        let pos = self.sol.to_pos(state)?;
        let succ = self.sol.policy_successor(&pos)?;
        Ok(copset_slots(&succ.cops, spec.k()))
    }
}

/// The robber side of the solved fixpoint: escapes to a losing-for-cops
/// state when one exists and otherwise maximizes the remaining plies.
pub struct OptimalRobberPolicy<'a> {
    pub sol: &'a Solution,
}

impl RobberPolicy for OptimalRobberPolicy<'_> {
    fn place(
        &mut self,
        _g: &Graph,
        _spec: &VariantSpec,
        cops: &[Option<usize>],
    ) -> Result<Option<usize>, GameError> {
        let placed: Vec<usize> = cops.iter().map(|c| c.expect("opening cops are alive")).collect();
        self.sol.optimal_robber_placement(&placed)
    }

    fn step(
        &mut self,
        _g: &Graph,
        _spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Option<usize>, GameError> {
        let pos = self.sol.to_pos(state)?;
        Ok(self.sol.robber_successor(&pos)?.map(|p| p.robber as usize))
    }
}

/// Flees to the legal move maximizing the distance to the nearest live cop;
/// ties break toward the lowest vertex id.
pub struct GreedyRobber {
    dist: Option<DistanceTable>,
}

impl GreedyRobber {
    pub fn new() -> GreedyRobber {
        GreedyRobber { dist: None }
    }

    fn dist_table(&mut self, g: &Graph) -> &DistanceTable {
        self.dist.get_or_insert_with(|| DistanceTable::new(g))
    }

    fn score(dist: &DistanceTable, cops: &[Option<usize>], v: usize) -> u16 {
        cops.iter()
            .flatten()
            .map(|&c| dist.d(c, v))
            .min()
            .unwrap_or(u16::MAX)
    }
}

impl Default for GreedyRobber {
    fn default() -> Self {
        Self::new()
    }
}

impl RobberPolicy for GreedyRobber {
    fn place(
        &mut self,
        g: &Graph,
        spec: &VariantSpec,
        cops: &[Option<usize>],
    ) -> Result<Option<usize>, GameError> {
        let dist = self.dist_table(g);
        let mut best: Option<(u16, usize)> = None;
        for v in 0..g.n() {
            if spec.capture == CaptureMode::Surround && cops.contains(&Some(v)) {
                continue;
            }
            let s = Self::score(dist, cops, v);
            if best.map_or(true, |(bs, _)| s > bs) {
                best = Some((s, v));
            }
        }
        Ok(best.map(|(_, v)| v))
    }

    fn step(
        &mut self,
        g: &Graph,
        spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Option<usize>, GameError> {
        let (cops, robber) = state_positions(g, spec, state)?;
        let dist = self.dist_table(g);
        let rules = Rules::new(g, spec, dist);
        let mut best: Option<(u16, usize)> = None;
        for (mc, r) in rules.robber_moves(&cops, robber) {
            let slots = copset_slots(&mc, spec.k());
            let s = Self::score(dist, &slots, r as usize);
            if best.map_or(true, |(bs, bv)| (s, std::cmp::Reverse(r as usize)) > (bs, std::cmp::Reverse(bv))) {
                best = Some((s, r as usize));
            }
        }
        Ok(best.map(|(_, v)| v))
    }
}

/// Plays uniformly random legal moves; placement avoids immediately
/// captured vertices when any safe vertex exists.
pub struct RandomRobber {
    rng: ChaCha8Rng,
}

impl RandomRobber {
    pub fn seeded(seed: u64) -> RandomRobber {
        RandomRobber { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl RobberPolicy for RandomRobber {
    fn place(
        &mut self,
        g: &Graph,
        spec: &VariantSpec,
        cops: &[Option<usize>],
    ) -> Result<Option<usize>, GameError> {
        let dist = DistanceTable::new(g);
        let rules = Rules::new(g, spec, &dist);
        let state = GameState { cops: cops.to_vec(), robber: Some(0), turn: Turn::Cop };
        let (set, _) = state_positions(g, spec, &state)?;
        let legal: Vec<usize> = (0..g.n())
            .filter(|&v| {
                !(spec.capture == CaptureMode::Surround && cops.contains(&Some(v)))
            })
            .collect();
        let safe: Vec<usize> = legal
            .iter()
            .copied()
            .filter(|&v| !rules.captured(&set, v as u16))
            .collect();
        let pool = if safe.is_empty() { &legal } else { &safe };
        Ok(pool.choose(&mut self.rng).copied())
    }

    fn step(
        &mut self,
        g: &Graph,
        spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Option<usize>, GameError> {
        let (cops, robber) = state_positions(g, spec, state)?;
        let dist = DistanceTable::new(g);
        let rules = Rules::new(g, spec, &dist);
        let moves = rules.robber_moves(&cops, robber);
        Ok(moves.choose(&mut self.rng).map(|&(_, r)| r as usize))
    }
}
