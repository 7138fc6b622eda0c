//! An independent reference solver used as a cross-check.
//!
//! Everything here is re-derived from the rule definitions on purpose:
//! agents move along explicitly enumerated simple paths, states are plain
//! ordered tuples with no symmetry folding, and the winning set is grown by
//! repeated full sweeps until nothing changes. Slow, small, and sharing no
//! code with the production solver, which is the point: agreement between
//! the two is the correctness evidence for both.

use super::spec::{Activity, CaptureMode, RobberActivity, VariantSpec};
use super::solve::Verdict;
use crate::error::GameError;
use crate::graph::Graph;

pub const DEFAULT_ORACLE_BUDGET: usize = 2_000_000;

struct OracleGame<'a> {
    g: &'a Graph,
    spec: &'a VariantSpec,
    n: usize,
    k: usize,
}

/// One agent roster: cop vertices (dead cops hold `None`) plus the robber.
#[derive(Clone, PartialEq)]
struct Roster {
    cops: Vec<Option<usize>>,
    robber: usize,
}

impl OracleGame<'_> {
    /// Simple paths from `from` of length at most `max_len` whose vertices
    /// (after the start) all satisfy `allowed`; collects the set of
    /// reachable endpoints.
    fn path_endpoints(&self, from: usize, max_len: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<bool> {
        let mut ends = vec![false; self.n];
        ends[from] = true;
        let mut on_path = vec![false; self.n];
        on_path[from] = true;
        self.dfs_paths(from, max_len, allowed, &mut on_path, &mut ends);
        ends
    }

    fn dfs_paths(
        &self,
        at: usize,
        left: usize,
        allowed: &dyn Fn(usize) -> bool,
        on_path: &mut Vec<bool>,
        ends: &mut Vec<bool>,
    ) {
        if left == 0 {
            return;
        }
        for &w in self.g.neighbors(at) {
            if !on_path[w] && allowed(w) {
                ends[w] = true;
                on_path[w] = true;
                self.dfs_paths(w, left - 1, allowed, on_path, ends);
                on_path[w] = false;
            }
        }
    }

    fn hop_distance(&self, from: usize, to: usize) -> Option<usize> {
        let d = self.g.bfs_from(from);
        (d[to] != usize::MAX).then_some(d[to])
    }

    fn within_reach_of_some_cop(&self, roster: &Roster, v: usize) -> bool {
        roster.cops.iter().enumerate().any(|(i, c)| match c {
            Some(p) => self
                .hop_distance(*p, v)
                .is_some_and(|d| d <= self.spec.cops[i].reach),
            None => false,
        })
    }

    fn captured(&self, roster: &Roster) -> bool {
        match self.spec.capture {
            CaptureMode::OccupyOrReach => self.within_reach_of_some_cop(roster, roster.robber),
            CaptureMode::Surround => self
                .g
                .neighbors(roster.robber)
                .iter()
                .all(|&u| roster.cops.iter().any(|c| *c == Some(u))),
        }
    }

    fn cop_joint_moves(&self, roster: &Roster) -> Vec<Vec<Option<usize>>> {
        let lazy_idx: Vec<usize> = (0..self.k)
            .filter(|&i| roster.cops[i].is_some() && self.spec.cops[i].activity == Activity::Lazy)
            .collect();
        let mut movers: Vec<Option<usize>> = vec![None];
        movers.extend(lazy_idx.iter().map(|&i| Some(i)));
        let mut out = Vec::new();
        for mover in movers {
            let mut options: Vec<Vec<Option<usize>>> = Vec::new();
            let mut ok = true;
            for i in 0..self.k {
                let Some(p) = roster.cops[i] else {
                    options.push(vec![None]);
                    continue;
                };
                let cap = &self.spec.cops[i];
                let ends = self.path_endpoints(p, cap.speed, &|_| true);
                let mut choice: Vec<Option<usize>> = Vec::new();
                for v in 0..self.n {
                    if !ends[v] {
                        continue;
                    }
                    let keep = match cap.activity {
                        Activity::Flexible => true,
                        Activity::Active => v != p,
                        Activity::Lazy => {
                            if mover == Some(i) {
                                v != p
                            } else {
                                v == p
                            }
                        }
                    };
                    if keep {
                        choice.push(Some(v));
                    }
                }
                if choice.is_empty() {
                    ok = false;
                    break;
                }
                options.push(choice);
            }
            if !ok {
                continue;
            }
            let mut buf = vec![None; self.k];
            cartesian(&options, 0, &mut buf, &mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    fn robber_moves(&self, roster: &Roster) -> Vec<Roster> {
        let mut out = Vec::new();
        let r = roster.robber;
        match self.spec.capture {
            CaptureMode::OccupyOrReach => {
                let ends = self.path_endpoints(r, self.spec.robber.speed, &|v| {
                    !self.within_reach_of_some_cop(roster, v)
                });
                for v in 0..self.n {
                    if ends[v] && (v != r || self.spec.robber.activity == RobberActivity::Flexible)
                    {
                        out.push(Roster { cops: roster.cops.clone(), robber: v });
                    }
                }
            }
            CaptureMode::Surround => {
                let ends = self.path_endpoints(r, self.spec.robber.speed, &|_| true);
                for v in 0..self.n {
                    if !ends[v] || roster.cops.iter().any(|c| *c == Some(v)) {
                        continue;
                    }
                    if v == r && self.spec.robber.activity != RobberActivity::Flexible {
                        continue;
                    }
                    out.push(Roster { cops: roster.cops.clone(), robber: v });
                }
            }
        }
        if self.spec.robber.attacking {
            for &w in self.g.neighbors(r) {
                let on_w: Vec<usize> =
                    (0..self.k).filter(|&i| roster.cops[i] == Some(w)).collect();
                match on_w.len() {
                    0 => {}
                    1 => {
                        let mut cops = roster.cops.clone();
                        cops[on_w[0]] = None;
                        out.push(Roster { cops, robber: w });
                    }
                    _ => out.push(Roster { cops: roster.cops.clone(), robber: w }),
                }
            }
        }
        out
    }

    // State indexing: cop tuple digits in base n+1 (digit n = eliminated),
    // then robber, then side to move.
    fn roster_code(&self, roster: &Roster) -> usize {
        let mut code = 0usize;
        for c in &roster.cops {
            code = code * (self.n + 1) + c.unwrap_or(self.n);
        }
        code * self.n + roster.robber
    }

    fn state_id(&self, roster: &Roster, robber_to_move: bool) -> usize {
        self.roster_code(roster) * 2 + usize::from(robber_to_move)
    }

    fn decode(&self, id: usize) -> (Roster, bool) {
        let robber_to_move = id % 2 == 1;
        let mut code = id / 2;
        let robber = code % self.n;
        code /= self.n;
        let mut cops = vec![None; self.k];
        for i in (0..self.k).rev() {
            let digit = code % (self.n + 1);
            code /= self.n + 1;
            cops[i] = (digit < self.n).then_some(digit);
        }
        (Roster { cops, robber }, robber_to_move)
    }
}

fn cartesian(
    options: &[Vec<Option<usize>>],
    depth: usize,
    buf: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if depth == options.len() {
        out.push(buf.clone());
        return;
    }
    for &c in &options[depth] {
        buf[depth] = c;
        cartesian(options, depth + 1, buf, out);
    }
}

pub fn oracle_solve(g: &Graph, spec: &VariantSpec) -> Result<Verdict, GameError> {
    oracle_solve_budgeted(g, spec, DEFAULT_ORACLE_BUDGET)
}

pub fn oracle_solve_budgeted(
    g: &Graph,
    spec: &VariantSpec,
    budget: usize,
) -> Result<Verdict, GameError> {
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
    let game = OracleGame { g, spec, n: g.n(), k: spec.k() };
    let n = game.n;
    let mut states = n + 1;
    for _ in 0..game.k {
        states = states.saturating_mul(n + 1);
    }
    let states = states.saturating_mul(n).saturating_mul(2);
    if states > budget {
        return Err(GameError::Budget(budget, states));
    }

    let mut win = vec![false; states];
    // Grow the winning set by full sweeps until stable: captures are
    // winning; a cop-to-move state wins when some move wins; a
    // robber-to-move state wins when every move does.
    loop {
        let mut changed = false;
        for id in 0..states {
            if win[id] {
                continue;
            }
            let (roster, robber_to_move) = game.decode(id);
            if roster.robber >= n {
                continue;
            }
            let now = if game.captured(&roster) {
                true
            } else if robber_to_move {
                game.robber_moves(&roster)
                    .iter()
                    .all(|next| win[game.state_id(next, false)])
            } else {
                game.cop_joint_moves(&roster).iter().any(|cops| {
                    win[game.state_id(&Roster { cops: cops.clone(), robber: roster.robber }, true)]
                })
            };
            if now {
                win[id] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Openings: every cop tuple against the robber's informed reply.
    let mut tuples: Vec<Vec<Option<usize>>> = Vec::new();
    let mut buf = vec![None; game.k];
    let all: Vec<Vec<Option<usize>>> = vec![(0..n).map(Some).collect(); game.k];
    cartesian(&all, 0, &mut buf, &mut tuples);
    for cops in tuples {
        let ok = (0..n).all(|r| {
            if spec.capture == CaptureMode::Surround && cops.contains(&Some(r)) {
                return true;
            }
            win[game.state_id(&Roster { cops: cops.clone(), robber: r }, false)]
        });
        if ok {
            return Ok(Verdict::CopWin);
        }
    }
    Ok(Verdict::RobberWin)
}
