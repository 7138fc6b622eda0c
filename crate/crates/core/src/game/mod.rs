//! The game engine: rule sets, exact solving, policies and playout.

pub(crate) mod moves;
pub mod oracle;
pub mod policy;
pub mod simulate;
pub mod solve;
pub mod spec;

pub use oracle::{oracle_solve, oracle_solve_budgeted};
pub use policy::{
    extract_strategy, CopPolicy, GreedyRobber, OptimalCopPolicy, OptimalRobberPolicy,
    RandomRobber, RobberPolicy,
};
pub use simulate::{simulate, simulate_with_cap, StrategyTrace, TraceOutcome};
pub use solve::{cop_number, cop_number_with, solve, solve_with, Solution, SolveOptions, Verdict};
pub use spec::{Activity, CaptureMode, CopSpec, RobberActivity, RobberSpec, VariantSpec, MAX_COPS};

use crate::error::GameError;
use crate::graph::{DistanceTable, Graph};
use moves::{CopSet, Rules, DEAD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Cop,
    Robber,
}

/// One position of the game. `None` entries mark eliminated cops (attacking
/// games) or, for the robber, the pre-placement phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    pub cops: Vec<Option<usize>>,
    pub robber: Option<usize>,
    pub turn: Turn,
}

impl GameState {
    pub fn new(cops: Vec<usize>, robber: usize, turn: Turn) -> GameState {
        GameState { cops: cops.into_iter().map(Some).collect(), robber: Some(robber), turn }
    }

    pub fn live_cops(&self) -> impl Iterator<Item = usize> + '_ {
        self.cops.iter().filter_map(|c| *c)
    }
}

pub(crate) fn state_positions(
    g: &Graph,
    spec: &VariantSpec,
    state: &GameState,
) -> Result<(CopSet, u16), GameError> {
    if state.cops.len() != spec.k() {
        return Err(GameError::MalformedState(format!(
            "expected {} cops, got {}",
            spec.k(),
            state.cops.len()
        )));
    }
    let robber = state
        .robber
        .ok_or_else(|| GameError::MalformedState("robber not placed".into()))?;
    if robber >= g.n() {
        return Err(GameError::MalformedState(format!("robber off the graph: {robber}")));
    }
    let mut cops = Vec::with_capacity(spec.k());
    for c in &state.cops {
        match c {
            Some(p) if *p < g.n() => cops.push(*p as u16),
            Some(p) => return Err(GameError::MalformedState(format!("cop off the graph: {p}"))),
            None if spec.robber.attacking => cops.push(DEAD),
            None => {
                return Err(GameError::MalformedState(
                    "eliminated cop in a non-attacking game".into(),
                ))
            }
        }
    }
    let set = if spec.uniform_cops() {
        let alive: Vec<u16> = cops.iter().copied().filter(|&p| p != DEAD).collect();
        CopSet::from_slice(&alive).sorted()
    } else {
        CopSet::from_slice(&cops)
    };
    Ok((set, robber as u16))
}

/// All successor states of a cop-to-move position: every joint cop move
/// permitted by the rule set (eliminated cops stay out of play).
pub fn legal_cop_moves(
    g: &Graph,
    spec: &VariantSpec,
    state: &GameState,
) -> Result<Vec<GameState>, GameError> {
    spec.validate()?;
    if state.turn != Turn::Cop {
        return Err(GameError::MalformedState("not a cop-to-move state".into()));
    }
    let (cops, robber) = state_positions(g, spec, state)?;
    let dist = DistanceTable::new(g);
    let rules = Rules::new(g, spec, &dist);
    Ok(rules
        .cop_moves(&cops)
        .into_iter()
        .map(|m| GameState {
            cops: copset_slots(&m, spec.k()),
            robber: Some(robber as usize),
            turn: Turn::Robber,
        })
        .collect())
}

/// All successor states of a robber-to-move position, including attack
/// moves when the rule set allows them.
pub fn legal_robber_moves(
    g: &Graph,
    spec: &VariantSpec,
    state: &GameState,
) -> Result<Vec<GameState>, GameError> {
    spec.validate()?;
    if state.turn != Turn::Robber {
        return Err(GameError::MalformedState("not a robber-to-move state".into()));
    }
    let (cops, robber) = state_positions(g, spec, state)?;
    let dist = DistanceTable::new(g);
    let rules = Rules::new(g, spec, &dist);
    if spec.capture == CaptureMode::OccupyOrReach && rules.captured(&cops, robber) {
        return Err(GameError::MalformedState(
            "robber asked to move from a captured position".into(),
        ));
    }
    Ok(rules
        .robber_moves(&cops, robber)
        .into_iter()
        .map(|(mc, r)| GameState {
            cops: copset_slots(&mc, spec.k()),
            robber: Some(r as usize),
            turn: Turn::Cop,
        })
        .collect())
}

/// Whether the position is a capture under the rule set.
pub fn is_captured(g: &Graph, spec: &VariantSpec, state: &GameState) -> Result<bool, GameError> {
    spec.validate()?;
    let (cops, robber) = state_positions(g, spec, state)?;
    let dist = DistanceTable::new(g);
    let rules = Rules::new(g, spec, &dist);
    Ok(rules.captured(&cops, robber))
}

pub(crate) fn copset_slots(set: &CopSet, k: usize) -> Vec<Option<usize>> {
    let mut out: Vec<Option<usize>> = set
        .slice()
        .iter()
        .map(|&p| if p == DEAD { None } else { Some(p as usize) })
        .collect();
    while out.len() < k {
        out.push(None);
    }
    out
}
