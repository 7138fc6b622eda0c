//! The two-cop endgame on a rule-exhausted component.
//!
//! Preconditions (checked): every independent vertex has at most two cover
//! neighbors, every cover vertex at most one other cover vertex in its
//! closed neighborhood, and any two cover vertices are adjacent or share an
//! independent neighbor. Under these, two cops win: a robber on an
//! independent vertex has both of its cover neighbors dominated within one
//! cop move (cover-to-cover distances are at most two), which pins it for
//! the occupy-and-capture finish; a robber on a cover vertex is attacked
//! within a move, and its only cover escape is sealed by stepping onto the
//! vertex it vacates.

use crate::error::{BoundError, GameError};
use crate::game::policy::CopPolicy;
use crate::game::{GameState, VariantSpec};
use crate::graph::{DistanceTable, Graph};

pub struct EndgamePolicy<'a> {
    h: &'a Graph,
    dist: DistanceTable,
    in_u: Vec<bool>,
    cover: Vec<usize>,
    last_robber: Option<usize>,
}

/// Builds the two-cop policy for component graph `h` with cover part
/// `cover_in_h`. Fails when the rule-exhaustion preconditions do not hold.
pub fn two_cop_endgame<'a>(
    h: &'a Graph,
    cover_in_h: &[usize],
) -> Result<EndgamePolicy<'a>, BoundError> {
    if h.is_directed() || !h.is_solver_ready() {
        return Err(BoundError::Precondition("component must be connected and undirected".into()));
    }
    let mut cover: Vec<usize> = cover_in_h.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let mut in_u = vec![false; h.n()];
    for &v in &cover {
        if v >= h.n() {
            return Err(BoundError::Precondition(format!("cover vertex {v} off the component")));
        }
        in_u[v] = true;
    }
    for v in 0..h.n() {
        if !in_u[v] {
            if h.neighbors(v).iter().any(|&u| !in_u[u]) {
                return Err(BoundError::Precondition(format!(
                    "independent side is not independent at {v}"
                )));
            }
            if h.neighbors(v).len() > 2 {
                return Err(BoundError::Precondition(format!(
                    "independent vertex {v} keeps more than two cover neighbors"
                )));
            }
        } else if h.neighbors(v).iter().filter(|&&u| in_u[u]).count() > 1 {
            return Err(BoundError::Precondition(format!(
                "cover vertex {v} keeps a dense cover neighborhood"
            )));
        }
    }
    let comp: Vec<usize> = (0..h.n()).collect();
    super::check_shared_neighbor_property(h, &comp, &in_u)
        .map_err(BoundError::Precondition)?;
    Ok(EndgamePolicy { h, dist: DistanceTable::new(h), in_u, cover, last_robber: None })
}

impl EndgamePolicy<'_> {
    /// One step into the closed neighborhood of `target` (or toward it when
    /// further than two hops away, which the preconditions make rare).
    fn step_to_dominate(&self, from: usize, target: usize) -> usize {
        if from == target || self.h.has_edge(from, target) {
            return from;
        }
        let candidate = self
            .h
            .neighbors(from)
            .iter()
            .copied()
            .filter(|&m| m == target || self.h.has_edge(m, target))
            .min();
        match candidate {
            Some(m) => m,
            None => self.h.isometric_path(from, target).expect("connected")[1],
        }
    }

    fn cover_targets(&self, robber: usize) -> Vec<usize> {
        let mut t: Vec<usize> =
            self.h.neighbors(robber).iter().copied().filter(|&u| self.in_u[u]).collect();
        if t.is_empty() {
            t.push(robber);
        }
        if t.len() == 1 {
            t.push(t[0]);
        }
        t
    }
}

impl CopPolicy for EndgamePolicy<'_> {
    fn place(&mut self, _g: &Graph, _spec: &VariantSpec) -> Result<Vec<usize>, GameError> {
        self.last_robber = None;
        let a = self.cover.first().copied().unwrap_or(0);
        let b = self.cover.get(1).copied().unwrap_or(a);
        Ok(vec![a, b])
    }

    fn step(
        &mut self,
        _g: &Graph,
        _spec: &VariantSpec,
        state: &GameState,
    ) -> Result<Vec<Option<usize>>, GameError> {
        let r = state.robber.ok_or_else(|| GameError::MalformedState("no robber".into()))?;
        let c: Vec<usize> = state
            .cops
            .iter()
            .map(|p| p.ok_or_else(|| GameError::MalformedState("endgame cop eliminated".into())))
            .collect::<Result<_, _>>()?;
        let prev = self.last_robber.replace(r);

        // An adjacent cop just captures.
        if let Some(slot) = c.iter().position(|&p| self.h.has_edge(p, r)) {
            let mut out: Vec<Option<usize>> = c.iter().copied().map(Some).collect();
            out[slot] = Some(r);
            return Ok(out);
        }

        let moves: Vec<usize> = if !self.in_u[r] {
            // Robber on the independent side: dominate both cover
            // neighbors, then walk onto them; the greedy rule above finishes.
            let targets = self.cover_targets(r);
            let (t0, t1) = (targets[0], targets[1]);
            let identity = self.dist.d(c[0], t0) + self.dist.d(c[1], t1);
            let swapped = self.dist.d(c[0], t1) + self.dist.d(c[1], t0);
            let assign = if identity <= swapped { [(c[0], t0), (c[1], t1)] } else { [(c[0], t1), (c[1], t0)] };
            let both_dominating =
                assign.iter().all(|&(p, t)| p == t || self.h.has_edge(p, t));
            assign
                .iter()
                .map(|&(p, t)| {
                    if both_dominating {
                        t
                    } else if p == t || self.h.has_edge(p, t) {
                        p
                    } else {
                        self.step_to_dominate(p, t)
                    }
                })
                .collect()
        } else {
            // Robber on a cover vertex. If it just vacated an adjacent
            // cover vertex we hold, step onto the vacancy to seal its only
            // cover escape; otherwise the nearer cop closes in to attack.
            let vacated = prev.filter(|&z| {
                z != r && self.in_u[z] && self.h.has_edge(z, r) && c.iter().any(|&p| self.h.has_edge(p, z))
            });
            if let Some(z) = vacated {
                let slot = c
                    .iter()
                    .position(|&p| self.h.has_edge(p, z))
                    .expect("filter checked adjacency");
                let mut out = c.clone();
                out[slot] = z;
                out
            } else {
                let chaser = if self.dist.d(c[0], r) <= self.dist.d(c[1], r) { 0 } else { 1 };
                let mut out = c.clone();
                out[chaser] = self.step_to_dominate(c[chaser], r);
                out
            }
        };
        Ok(moves.into_iter().map(Some).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::policy::OptimalRobberPolicy;
    use crate::game::{simulate_with_cap, solve, VariantSpec, Verdict};
    use crate::graph::builders::*;

    fn endgame_captures(h: &Graph, cover: &[usize]) {
        let spec = VariantSpec::classic(2);
        let sol = solve(h, &spec).unwrap();
        assert_eq!(sol.verdict, Verdict::CopWin, "two cops must win the endgame component");
        let mut cop = two_cop_endgame(h, cover).unwrap();
        let mut robber = OptimalRobberPolicy { sol: &sol };
        let cap = 4 * h.n() + 20;
        let trace = simulate_with_cap(h, &spec, &mut cop, &mut robber, cap).unwrap();
        assert!(
            trace.captured(),
            "endgame failed on {:?} with cover {:?}:\n{}",
            h.edges(),
            cover,
            trace.render()
        );
    }

    #[test]
    fn endgame_on_c4() {
        endgame_captures(&cycle(4), &[0, 2]);
    }

    #[test]
    fn endgame_on_p3() {
        endgame_captures(&path(3), &[1]);
    }

    #[test]
    fn endgame_on_c5() {
        endgame_captures(&cycle(5), &[0, 2, 4]);
    }

    #[test]
    fn endgame_on_random_exhausted_components() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut tested = 0;
        'outer: while tested < 25 {
            // Sample a cover side with an independent matching structure
            // plus independent vertices of degree <= 2.
            let tu = rng.gen_range(2..=4usize);
            let ti = rng.gen_range(1..=4usize);
            let n = tu + ti;
            let mut edges: Vec<(usize, usize)> = Vec::new();
            // Optional one matching edge inside the cover.
            if tu >= 2 && rng.gen_bool(0.4) {
                edges.push((0, 1));
            }
            for w in tu..n {
                let a = rng.gen_range(0..tu);
                edges.push((a, w));
                if rng.gen_bool(0.7) {
                    let b = rng.gen_range(0..tu);
                    if b != a {
                        edges.push((b, w));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            let g = match Graph::new(n, &edges, false) {
                Ok(g) => g,
                Err(_) => continue,
            };
            if !g.is_solver_ready() {
                continue;
            }
            let cover: Vec<usize> = (0..tu).collect();
            // Skip instances violating the rule-exhausted shape.
            if two_cop_endgame(&g, &cover).is_err() {
                continue 'outer;
            }
            endgame_captures(&g, &cover);
            tested += 1;
        }
    }

    #[test]
    fn precondition_rejections() {
        // A degree-3 independent hub violates the exhaustion shape.
        let g = star(3);
        assert!(two_cop_endgame(&g, &[1, 2, 3]).is_err());
        // Cover vertices with a shared neighbor requirement broken: a long
        // path has far-apart cover vertices.
        let p6 = path(6);
        assert!(two_cop_endgame(&p6, &[1, 4]).is_err());
        // Dense cover neighborhood.
        let k3 = complete(3);
        assert!(two_cop_endgame(&k3, &[0, 1, 2]).is_err());
    }
}
