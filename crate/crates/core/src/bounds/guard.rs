//! Single-cop guarding of an isometric path.
//!
//! The cop projects the robber onto the path: the shadow of a robber at
//! `r` is the path vertex indexed by `min(d(P[0], r), len-1)`. One robber
//! move shifts the shadow by at most one index, and because the path is
//! isometric a robber standing on `P[j]` has shadow exactly `j`. The cop
//! first walks to the middle of the path, then chases the shadow along the
//! path; once it stands on the shadow after its own move the guard is
//! established and is maintained forever by mirroring. Any robber step onto
//! the path then puts it adjacent to the cop and it is captured on the next
//! cop move.

use crate::error::{BoundError, GameError};
use crate::game::policy::CopPolicy;
use crate::game::{GameState, VariantSpec};
use crate::graph::Graph;

/// Guarding progress: path geometry plus the cop/shadow indices.
#[derive(Debug, Clone)]
pub struct GuardState {
    pub path: Vec<usize>,
    pub cop_index: Option<usize>,
    pub shadow_index: usize,
    pub stabilized: bool,
}

pub struct PathGuard<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    path_index: Vec<Option<usize>>,
    from_start: Vec<usize>,
    start: Option<usize>,
    stabilized: bool,
}

/// Builds the guard policy for `path`, which must be isometric in `g`. The
/// cop places on the path middle unless `start` pins a different opening
/// vertex (it then walks over).
pub fn guard_path_strategy<'a>(
    g: &'a Graph,
    path: &[usize],
    start: Option<usize>,
) -> Result<PathGuard<'a>, BoundError> {
    if !g.is_isometric_path(path) {
        return Err(BoundError::NotIsometric(format!("{path:?}")));
    }
    let mut path_index = vec![None; g.n()];
    for (i, &v) in path.iter().enumerate() {
        path_index[v] = Some(i);
    }
    Ok(PathGuard {
        g,
        from_start: g.bfs_from(path[0]),
        path: path.to_vec(),
        path_index,
        start,
        stabilized: false,
    })
}

impl PathGuard<'_> {
    pub fn shadow_index(&self, robber: usize) -> usize {
        self.from_start[robber].min(self.path.len() - 1)
    }

    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn on_path(&self, v: usize) -> bool {
        self.path_index[v].is_some()
    }

    pub fn state(&self, cop: usize, robber: usize) -> GuardState {
        GuardState {
            path: self.path.clone(),
            cop_index: self.path_index[cop],
            shadow_index: self.shadow_index(robber),
            stabilized: self.stabilized,
        }
    }

    /// One cop move. Captures the robber whenever it is adjacent (which,
    /// post-stabilization, covers every robber step onto the path).
    pub fn next_move(&mut self, cop: usize, robber: usize) -> usize {
        if self.g.has_edge(cop, robber) {
            return robber;
        }
        let anchor = self.path[self.path.len() / 2];
        match self.path_index[cop] {
            None => {
                // Walk to the anchor; the robber cannot block a cop.
                let step = self.g.isometric_path(cop, anchor).expect("connected")[1];
                step
            }
            Some(idx) => {
                let shadow = self.shadow_index(robber);
                if idx == shadow {
                    self.stabilized = true;
                    cop
                } else {
                    let next = if idx < shadow { idx + 1 } else { idx - 1 };
                    if next == shadow {
                        self.stabilized = true;
                    }
                    self.path[next]
                }
            }
        }
    }
}

impl CopPolicy for PathGuard<'_> {
    fn place(&mut self, _g: &Graph, _spec: &VariantSpec) -> Result<Vec<usize>, GameError> {
        self.stabilized = false;
        Ok(vec![self.start.unwrap_or(self.path[self.path.len() / 2])])
    }

    fn step(
        &mut self,
        _g: &Graph,
        _spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Vec<Option<usize>>, GameError> {
        let cop = state.cops[0]
            .ok_or_else(|| GameError::MalformedState("guard cop eliminated".into()))?;
        let robber = state
            .robber
            .ok_or_else(|| GameError::MalformedState("robber not placed".into()))?;
        Ok(vec![Some(self.next_move(cop, robber))])
    }
}
