//! Exact game solving by backward induction over the explicit state graph.
//!
//! Every placement of the agents together with the side to move is one
//! state. Capture states seed the winning set; a cop-move state joins when
//! some successor is winning, a robber-move state joins when all of its
//! successors are (a robber with no legal move loses). The fixpoint is
//! reached by a predecessor-counting backward traversal, which also yields
//! the ply count to capture (`rank`) and, from it, deterministic optimal
//! policies for both sides.
//!
//! Placement is resolved on top of the fixpoint: the cops win iff some cop
//! placement makes every robber placement a cop-won state, matching the
//! gameplay order in which the robber places second with full information.

use super::moves::{CopSet, Rules, DEAD};
use super::spec::VariantSpec;
use super::{GameState, Turn};
use crate::error::GameError;
use crate::graph::{DistanceTable, Graph};
use std::collections::{HashMap, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    CopWin,
    RobberWin,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Hard cap on the number of game states.
    pub state_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { state_budget: 5_000_000 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Pos {
    pub cops: CopSet,
    pub robber: u16,
    pub turn: Turn,
}

pub(crate) struct StateSpace {
    pub states: Vec<Pos>,
    index: HashMap<Pos, u32>,
    /// Cop sets at full roster strength, in enumeration order; the legal
    /// opening placements.
    pub placements: Vec<CopSet>,
}

impl StateSpace {
    fn enumerate(n: usize, spec: &VariantSpec, budget: usize) -> Result<StateSpace, GameError> {
        let k = spec.k();
        let uniform = spec.uniform_cops();
        let attacking = spec.robber.attacking;

        let mut cop_sets: Vec<CopSet> = Vec::new();
        if uniform {
            let sizes: Vec<usize> = if attacking { (0..=k).rev().collect() } else { vec![k] };
            for j in sizes {
                push_multisets(n, j, &mut cop_sets);
            }
        } else if attacking {
            push_tuples(n, k, true, &mut cop_sets);
        } else {
            push_tuples(n, k, false, &mut cop_sets);
        }
        let total = cop_sets
            .len()
            .saturating_mul(n)
            .saturating_mul(2);
        if total > budget {
            return Err(GameError::Budget(budget, total));
        }

        let mut states = Vec::with_capacity(total);
        for &cs in &cop_sets {
            for r in 0..n as u16 {
                states.push(Pos { cops: cs, robber: r, turn: Turn::Cop });
                states.push(Pos { cops: cs, robber: r, turn: Turn::Robber });
            }
        }
        let index: HashMap<Pos, u32> =
            states.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let placements: Vec<CopSet> = cop_sets
            .iter()
            .copied()
            .filter(|cs| cs.len() == k && cs.slice().iter().all(|&p| p != DEAD))
            .collect();
        Ok(StateSpace { states, index, placements })
    }

    #[inline]
    pub fn id(&self, pos: &Pos) -> u32 {
        self.index[pos]
    }

    pub fn lookup(&self, pos: &Pos) -> Option<u32> {
        self.index.get(pos).copied()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }
}

fn push_multisets(n: usize, j: usize, out: &mut Vec<CopSet>) {
    let mut buf = vec![0u16; j];
    fn rec(n: usize, buf: &mut Vec<u16>, depth: usize, from: u16, out: &mut Vec<CopSet>) {
        if depth == buf.len() {
            out.push(CopSet::from_slice(buf));
            return;
        }
        for v in from..n as u16 {
            buf[depth] = v;
            rec(n, buf, depth + 1, v, out);
        }
    }
    if j == 0 {
        out.push(CopSet::from_slice(&[]));
    } else {
        rec(n, &mut buf, 0, 0, out);
    }
}

fn push_tuples(n: usize, k: usize, with_dead: bool, out: &mut Vec<CopSet>) {
    let mut buf = vec![0u16; k];
    fn rec(n: usize, with_dead: bool, buf: &mut Vec<u16>, depth: usize, out: &mut Vec<CopSet>) {
        if depth == buf.len() {
            out.push(CopSet::from_slice(buf));
            return;
        }
        for v in 0..n as u16 {
            buf[depth] = v;
            rec(n, with_dead, buf, depth + 1, out);
        }
        if with_dead {
            buf[depth] = DEAD;
            rec(n, with_dead, buf, depth + 1, out);
        }
    }
    rec(n, with_dead, &mut buf, 0, out);
}

/// The solved game: verdict, a winning opening placement when the cops win,
/// and the full labeled state space for policy extraction and audits.
pub struct Solution {
    pub verdict: Verdict,
    /// A winning cop opening (lowest in enumeration order), when CopWin.
    pub placement: Option<Vec<usize>>,
    pub(crate) graph: Graph,
    pub(crate) spec: VariantSpec,
    pub(crate) dist: DistanceTable,
    pub(crate) space: StateSpace,
    pub(crate) copwin: Vec<bool>,
    pub(crate) rank: Vec<u32>,
}

pub fn solve(g: &Graph, spec: &VariantSpec) -> Result<Solution, GameError> {
    solve_with(g, spec, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, spec: &VariantSpec, opts: &SolveOptions) -> Result<Solution, GameError> {
    spec.validate()?;
    if spec.directed != g.is_directed() {
        return Err(GameError::DirectionMismatch {
            expected: if spec.directed { "directed" } else { "undirected" },
            got: if g.is_directed() { "directed" } else { "undirected" },
        });
    }
    if !g.is_solver_ready() {
        return Err(GameError::Disconnected { directed: g.is_directed() });
    }
    let dist = DistanceTable::new(g);
    let rules = Rules::new(g, spec, &dist);
    let space = StateSpace::enumerate(g.n(), spec, opts.state_budget)?;
    let ns = space.len();

    let mut captured = vec![false; ns];
    let mut pred_count = vec![0u32; ns];
    let mut succ_count = vec![0u32; ns];
    let each_successor = |pos: &Pos, f: &mut dyn FnMut(u32)| match pos.turn {
        Turn::Cop => {
            for m in rules.cop_moves(&pos.cops) {
                f(space.id(&Pos { cops: m, robber: pos.robber, turn: Turn::Robber }));
            }
        }
        Turn::Robber => {
            for (mc, r) in rules.robber_moves(&pos.cops, pos.robber) {
                f(space.id(&Pos { cops: mc, robber: r, turn: Turn::Cop }));
            }
        }
    };

    for s in 0..ns {
        let pos = space.states[s];
        if rules.captured(&pos.cops, pos.robber) {
            captured[s] = true;
            continue;
        }
        each_successor(&pos, &mut |t| {
            pred_count[t as usize] += 1;
            succ_count[s] += 1;
        });
    }

    let mut offsets = vec![0usize; ns + 1];
    for s in 0..ns {
        offsets[s + 1] = offsets[s] + pred_count[s] as usize;
    }
    let total_edges = offsets[ns];
    let mut preds = vec![0u32; total_edges];
    let mut cursor = offsets.clone();
    for s in 0..ns {
        let pos = space.states[s];
        if captured[s] {
            continue;
        }
        each_successor(&pos, &mut |t| {
            preds[cursor[t as usize]] = s as u32;
            cursor[t as usize] += 1;
        });
    }

    let mut copwin = captured.clone();
    let mut rank = vec![0u32; ns];
    let mut remaining = succ_count;
    let mut queue: VecDeque<u32> = VecDeque::new();
    for s in 0..ns {
        if captured[s] {
            queue.push_back(s as u32);
        } else if space.states[s].turn == Turn::Robber && remaining[s] == 0 {
            // A robber forced to move with no legal move is lost.
            copwin[s] = true;
            queue.push_back(s as u32);
        }
    }
    while let Some(t) = queue.pop_front() {
        let t = t as usize;
        for &p in &preds[offsets[t]..offsets[t + 1]] {
            let p = p as usize;
            if copwin[p] {
                continue;
            }
            match space.states[p].turn {
                Turn::Cop => {
                    copwin[p] = true;
                    rank[p] = rank[t] + 1;
                    queue.push_back(p as u32);
                }
                Turn::Robber => {
                    remaining[p] -= 1;
                    if remaining[p] == 0 {
                        copwin[p] = true;
                        rank[p] = rank[t] + 1;
                        queue.push_back(p as u32);
                    }
                }
            }
        }
    }

    // Placement: the cops pick an opening; the robber then picks any vertex
    // it may legally start on. Surround rules forbid starting on a cop.
    let surround = spec.capture == super::spec::CaptureMode::Surround;
    let mut placement = None;
    'outer: for cs in &space.placements {
        for r in 0..g.n() as u16 {
            if surround && cs.occupies(r) {
                continue;
            }
            if !copwin[space.id(&Pos { cops: *cs, robber: r, turn: Turn::Cop }) as usize] {
                continue 'outer;
            }
        }
        placement = Some(cs.slice().iter().map(|&p| p as usize).collect());
        break;
    }

    Ok(Solution {
        verdict: if placement.is_some() { Verdict::CopWin } else { Verdict::RobberWin },
        placement,
        graph: g.clone(),
        spec: spec.clone(),
        dist,
        space,
        copwin,
        rank,
    })
}

impl Solution {
    pub fn k(&self) -> usize {
        self.spec.k()
    }

    pub fn spec(&self) -> &VariantSpec {
        &self.spec
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn state_count(&self) -> usize {
        self.space.len()
    }

    pub(crate) fn rules(&self) -> Rules<'_> {
        Rules::new(&self.graph, &self.spec, &self.dist)
    }

    pub(crate) fn to_pos(&self, state: &GameState) -> Result<Pos, GameError> {
        let k = self.spec.k();
        if state.cops.len() != k {
            return Err(GameError::MalformedState(format!(
                "expected {k} cops, got {}",
                state.cops.len()
            )));
        }
        let robber = state
            .robber
            .ok_or_else(|| GameError::MalformedState("robber not placed".into()))?;
        if robber >= self.graph.n() {
            return Err(GameError::MalformedState(format!("robber off the graph: {robber}")));
        }
        let mut cops = Vec::with_capacity(k);
        for c in &state.cops {
            match c {
                Some(p) if *p < self.graph.n() => cops.push(*p as u16),
                Some(p) => {
                    return Err(GameError::MalformedState(format!("cop off the graph: {p}")))
                }
                None if self.spec.robber.attacking => cops.push(DEAD),
                None => {
                    return Err(GameError::MalformedState(
                        "eliminated cop in a non-attacking game".into(),
                    ))
                }
            }
        }
        let set = CopSet::from_slice(&cops);
        let set = if self.spec.uniform_cops() {
            CopSet::from_slice(
                &set.alive_iter().map(|(_, p)| p).collect::<Vec<_>>(),
            )
            .sorted()
        } else {
            set
        };
        Ok(Pos { cops: set, robber: robber as u16, turn: state.turn })
    }

    pub fn is_copwin_state(&self, state: &GameState) -> Result<bool, GameError> {
        let pos = self.to_pos(state)?;
        let id = self
            .space
            .lookup(&pos)
            .ok_or_else(|| GameError::MalformedState("state outside the space".into()))?;
        Ok(self.copwin[id as usize])
    }

    /// Plies to capture under optimal play from a cop-won state.
    pub fn rank_of(&self, state: &GameState) -> Result<Option<u32>, GameError> {
        let pos = self.to_pos(state)?;
        let id = self
            .space
            .lookup(&pos)
            .ok_or_else(|| GameError::MalformedState("state outside the space".into()))?;
        Ok(self.copwin[id as usize].then(|| self.rank[id as usize]))
    }

    pub(crate) fn pos_captured(&self, pos: &Pos) -> bool {
        self.rules().captured(&pos.cops, pos.robber)
    }

    /// The policy step from a cop-won cop-move state: the winning successor
    /// of minimum rank, ties broken by lowest state id. The chosen
    /// successor's rank strictly decreases.
    pub(crate) fn policy_successor(&self, pos: &Pos) -> Result<Pos, GameError> {
        if pos.turn != Turn::Cop {
            return Err(GameError::MalformedState("policy asked on a robber turn".into()));
        }
        let id = self.space.id(pos) as usize;
        if !self.copwin[id] {
            return Err(GameError::NotCopWin("policy asked outside the winning region".into()));
        }
        if self.pos_captured(pos) {
            return Ok(*pos);
        }
        let rules = self.rules();
        let mut best: Option<(u32, u32, Pos)> = None;
        for m in rules.cop_moves(&pos.cops) {
            let succ = Pos { cops: m, robber: pos.robber, turn: Turn::Robber };
            let sid = self.space.id(&succ);
            if !self.copwin[sid as usize] {
                continue;
            }
            let key = (self.rank[sid as usize], sid);
            if best.map_or(true, |(r, i, _)| key < (r, i)) {
                best = Some((key.0, key.1, succ));
            }
        }
        let (_, _, succ) = best.expect("cop-won non-captured state has a winning successor");
        Ok(succ)
    }

    /// The optimal robber reply: an escaping successor when one exists
    /// (lowest id), otherwise the capture-delaying successor of maximum
    /// rank. `None` when the robber has no legal move.
    pub(crate) fn robber_successor(&self, pos: &Pos) -> Result<Option<Pos>, GameError> {
        if pos.turn != Turn::Robber {
            return Err(GameError::MalformedState("robber reply asked on a cop turn".into()));
        }
        let rules = self.rules();
        let mut escape: Option<(u32, Pos)> = None;
        let mut delay: Option<(u32, std::cmp::Reverse<u32>, Pos)> = None;
        for (mc, r) in rules.robber_moves(&pos.cops, pos.robber) {
            let succ = Pos { cops: mc, robber: r, turn: Turn::Cop };
            let sid = self.space.id(&succ);
            if !self.copwin[sid as usize] {
                if escape.map_or(true, |(i, _)| sid < i) {
                    escape = Some((sid, succ));
                }
            } else {
                let key = (self.rank[sid as usize], std::cmp::Reverse(sid));
                if delay.map_or(true, |(r, i, _)| key > (r, i)) {
                    delay = Some((key.0, key.1, succ));
                }
            }
        }
        Ok(escape.map(|(_, p)| p).or(delay.map(|(_, _, p)| p)))
    }

    /// The robber's best opening against the given cop placement: an
    /// escaping vertex when one exists, otherwise the longest-surviving one.
    /// `None` when no legal placement exists (all vertices occupied under
    /// surround rules).
    pub fn optimal_robber_placement(&self, cops: &[usize]) -> Result<Option<usize>, GameError> {
        let state = GameState {
            cops: cops.iter().map(|&c| Some(c)).collect(),
            robber: Some(0),
            turn: Turn::Cop,
        };
        let base = self.to_pos(&state)?;
        let surround = self.spec.capture == super::spec::CaptureMode::Surround;
        let mut escape: Option<usize> = None;
        let mut delay: Option<(u32, usize)> = None;
        for r in 0..self.graph.n() {
            if surround && base.cops.occupies(r as u16) {
                continue;
            }
            let pos = Pos { cops: base.cops, robber: r as u16, turn: Turn::Cop };
            let id = self.space.id(&pos) as usize;
            if !self.copwin[id] {
                if escape.is_none() {
                    escape = Some(r);
                }
            } else {
                let key = (self.rank[id], r);
                if delay.map_or(true, |(dr, di)| key.0 > dr || (key.0 == dr && key.1 < di)) {
                    delay = Some(key);
                }
            }
        }
        Ok(escape.or(delay.map(|(_, r)| r)))
    }

    /// Audits the fixpoint invariants over the entire space: every winning
    /// cop-move state keeps a winning successor of smaller rank, and every
    /// successor of a winning robber-move state is winning. Used by tests.
    pub fn audit_fixpoint(&self) -> Result<(), String> {
        let rules = self.rules();
        for (id, pos) in self.space.states.iter().enumerate() {
            if !self.copwin[id] || self.pos_captured(pos) {
                continue;
            }
            match pos.turn {
                Turn::Cop => {
                    let succ = self.policy_successor(pos).map_err(|e| e.to_string())?;
                    let sid = self.space.id(&succ) as usize;
                    if !self.copwin[sid] || self.rank[sid] >= self.rank[id] {
                        return Err(format!("policy does not progress at state {id}"));
                    }
                }
                Turn::Robber => {
                    for (mc, r) in rules.robber_moves(&pos.cops, pos.robber) {
                        let sid =
                            self.space.id(&Pos { cops: mc, robber: r, turn: Turn::Cop }) as usize;
                        if !self.copwin[sid] {
                            return Err(format!("winning robber state {id} has an escape"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The minimum cop count winning the game, searching upward from 1 with the
/// given rule template. `upper` caps the search (the vertex count always
/// suffices).
pub fn cop_number(g: &Graph, template: &VariantSpec) -> Result<usize, GameError> {
    cop_number_with(g, template, &SolveOptions::default(), None)
}

pub fn cop_number_with(
    g: &Graph,
    template: &VariantSpec,
    opts: &SolveOptions,
    upper: Option<usize>,
) -> Result<usize, GameError> {
    let cap = upper.unwrap_or(g.n()).min(g.n()).max(1);
    for k in 1..=cap {
        let spec = template.with_k(k);
        if solve_with(g, &spec, opts)?.verdict == Verdict::CopWin {
            return Ok(k);
        }
    }
    Err(GameError::NotCopWin(format!(
        "no cop count up to {cap} wins; the bound is wrong for this rule set"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::oracle::oracle_solve;
    use crate::graph::builders::*;

    #[test]
    fn classic_ground_truth() {
        assert_eq!(solve(&path(4), &VariantSpec::classic(1)).unwrap().verdict, Verdict::CopWin);
        assert_eq!(solve(&cycle(4), &VariantSpec::classic(1)).unwrap().verdict, Verdict::RobberWin);
        assert_eq!(solve(&cycle(4), &VariantSpec::classic(2)).unwrap().verdict, Verdict::CopWin);
        assert_eq!(cop_number(&path(7), &VariantSpec::classic(1)).unwrap(), 1);
        assert_eq!(cop_number(&cycle(4), &VariantSpec::classic(1)).unwrap(), 2);
    }

    #[test]
    fn petersen_needs_three_cops() {
        let g = petersen();
        assert_eq!(solve(&g, &VariantSpec::classic(2)).unwrap().verdict, Verdict::RobberWin);
        assert_eq!(solve(&g, &VariantSpec::classic(3)).unwrap().verdict, Verdict::CopWin);
        assert_eq!(cop_number(&g, &VariantSpec::classic(1)).unwrap(), 3);
    }

    #[test]
    fn surround_examples() {
        assert_eq!(solve(&complete(2), &VariantSpec::surround(1)).unwrap().verdict, Verdict::CopWin);
        // The surround cop number is at least the minimum degree.
        let c4 = cycle(4);
        assert_eq!(solve(&c4, &VariantSpec::surround(1)).unwrap().verdict, Verdict::RobberWin);
        assert_eq!(cop_number(&c4, &VariantSpec::surround(1)).unwrap() >= c4.min_degree(), true);
    }

    #[test]
    fn attacking_doubles_at_most() {
        for g in [path(5), cycle(5), star(4)] {
            let c = cop_number(&g, &VariantSpec::classic(1)).unwrap();
            let ca = cop_number(&g, &VariantSpec::attacking(1)).unwrap();
            assert!(c <= ca && ca <= 2 * c, "c={c} ca={ca}");
        }
    }

    #[test]
    fn budget_and_connectivity_errors() {
        let g = petersen();
        let opts = SolveOptions { state_budget: 100 };
        assert!(matches!(
            solve_with(&g, &VariantSpec::classic(2), &opts),
            Err(GameError::Budget(100, _))
        ));
        let two = crate::graph::Graph::new(4, &[(0, 1), (2, 3)], false).unwrap();
        assert!(matches!(
            solve(&two, &VariantSpec::classic(1)),
            Err(GameError::Disconnected { directed: false })
        ));
        let arc = crate::graph::Graph::new(2, &[(0, 1)], true).unwrap();
        assert!(solve(&arc, &VariantSpec::directed_classic(1)).is_err());
        assert!(solve(&path(3), &VariantSpec::directed_classic(1)).is_err());
    }

    #[test]
    fn single_vertex_graph() {
        let k1 = crate::graph::Graph::new(1, &[], false).unwrap();
        assert_eq!(solve(&k1, &VariantSpec::classic(1)).unwrap().verdict, Verdict::CopWin);
    }

    fn random_connected(n: usize, rng: &mut impl rand::Rng) -> Graph {
        loop {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges, false).unwrap();
            if g.is_solver_ready() {
                return g;
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_graphs_and_variants() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..30 {
            let n = 3 + trial % 4;
            let g = random_connected(n, &mut rng);
            for k in 1..=2 {
                let mut reach = VariantSpec::classic(k);
                for c in &mut reach.cops {
                    c.reach = 1;
                }
                let specs = [
                    VariantSpec::classic(k),
                    VariantSpec::lazy(k),
                    VariantSpec::attacking(k),
                    VariantSpec::fully_active(k),
                    VariantSpec::surround(k),
                    VariantSpec::fast_robber(k, 2),
                    reach,
                ];
                for spec in specs {
                    let fast = solve(&g, &spec).unwrap().verdict;
                    let slow = oracle_solve(&g, &spec).unwrap();
                    assert_eq!(fast, slow, "n={n} k={k} {spec:?} edges={:?}", g.edges());
                }
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_directed_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut done = 0;
        while done < 12 {
            let n = 3 + done % 3;
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        arcs.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &arcs, true).unwrap();
            if !g.is_solver_ready() {
                continue;
            }
            done += 1;
            for k in 1..=2 {
                let spec = VariantSpec::directed_classic(k);
                assert_eq!(
                    solve(&g, &spec).unwrap().verdict,
                    oracle_solve(&g, &spec).unwrap(),
                    "n={n} k={k} arcs={:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn heterogeneous_cops_ordered_states() {
        // One fast cop beats the robber on a long cycle where one slow cop
        // cannot.
        let g = cycle(7);
        let mut spec = VariantSpec::classic(1);
        spec.cops[0].speed = 2;
        assert_eq!(solve(&g, &spec).unwrap().verdict, Verdict::CopWin);
        assert_eq!(solve(&g, &VariantSpec::classic(1)).unwrap().verdict, Verdict::RobberWin);
        // A mixed roster exercises the slot-indexed state space.
        let mut mixed = VariantSpec::classic(2);
        mixed.cops[0].speed = 2;
        let sol = solve(&g, &mixed).unwrap();
        assert_eq!(sol.verdict, Verdict::CopWin);
        sol.audit_fixpoint().unwrap();
    }

    #[test]
    fn reach_shrinks_the_evasion_space() {
        let mut spec = VariantSpec::classic(1);
        spec.cops[0].reach = 1;
        // On a 5-cycle the two safe openings are both one cop move from
        // being within range; on a 6-cycle the robber holds the antipode.
        assert_eq!(solve(&cycle(5), &spec).unwrap().verdict, Verdict::CopWin);
        assert_eq!(solve(&cycle(6), &spec).unwrap().verdict, Verdict::RobberWin);
    }

    #[test]
    fn monotone_in_k() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let g = random_connected(5, &mut rng);
            let mut seen_win = false;
            for k in 1..=3 {
                let win = solve(&g, &VariantSpec::classic(k)).unwrap().verdict == Verdict::CopWin;
                assert!(!seen_win || win, "monotonicity broken on {:?}", g.edges());
                seen_win |= win;
            }
        }
    }

    #[test]
    fn fixpoint_audit_passes() {
        for (g, k) in [(cycle(5), 2), (petersen(), 3), (path(6), 1)] {
            let sol = solve(&g, &VariantSpec::classic(k)).unwrap();
            assert_eq!(sol.verdict, Verdict::CopWin);
            sol.audit_fixpoint().unwrap();
        }
        let sol = solve(&cycle(5), &VariantSpec::attacking(2)).unwrap();
        sol.audit_fixpoint().unwrap();
    }
}
