//! Move generation and capture predicates for the generalized game.
//!
//! This is the single semantics the solver trusts; the cross-check oracle
//! deliberately re-derives its own moves from the rule definitions instead
//! of calling into here. Cop positions are tracked as a small inline set:
//! a sorted multiset when all cops are interchangeable, slot-indexed when
//! capabilities differ (a `DEAD` sentinel marks eliminated cops).

use super::spec::{Activity, CaptureMode, RobberActivity, VariantSpec, MAX_COPS};
use crate::graph::{DistanceTable, Graph};
use std::collections::VecDeque;

pub(crate) const DEAD: u16 = u16::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct CopSet {
    len: u8,
    arr: [u16; MAX_COPS],
}

impl CopSet {
    pub fn from_slice(s: &[u16]) -> CopSet {
        let mut arr = [0u16; MAX_COPS];
        arr[..s.len()].copy_from_slice(s);
        CopSet { len: s.len() as u8, arr }
    }

    #[inline]
    pub fn slice(&self) -> &[u16] {
        &self.arr[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn sorted(mut self) -> CopSet {
        self.arr[..self.len as usize].sort_unstable();
        self
    }

    pub fn alive_iter(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.slice().iter().copied().enumerate().filter(|&(_, p)| p != DEAD)
    }

    pub fn occupies(&self, v: u16) -> bool {
        self.slice().contains(&v) && v != DEAD
    }

    pub fn count_at(&self, v: u16) -> usize {
        if v == DEAD {
            return 0;
        }
        self.slice().iter().filter(|&&p| p == v).count()
    }

    /// Removes one occurrence of `v` and shrinks: the uniform-cop
    /// elimination.
    pub fn remove_one(&self, v: u16) -> CopSet {
        let mut out = CopSet { len: 0, arr: [0; MAX_COPS] };
        let mut removed = false;
        for &p in self.slice() {
            if !removed && p == v {
                removed = true;
                continue;
            }
            out.arr[out.len as usize] = p;
            out.len += 1;
        }
        debug_assert!(removed);
        out
    }

    /// Marks slot `i` eliminated in place: the slot-indexed elimination.
    pub fn kill_slot(&self, i: usize) -> CopSet {
        let mut out = *self;
        out.arr[i] = DEAD;
        out
    }
}

/// Evaluated game rules bound to one graph: precomputed movement balls plus
/// the capture predicate and move enumerators.
pub(crate) struct Rules<'a> {
    pub g: &'a Graph,
    pub spec: &'a VariantSpec,
    pub dist: &'a DistanceTable,
    pub uniform: bool,
    /// `balls[i][v]`: vertices cop `i` can end a move on from `v`
    /// (within its speed, including `v` itself), ascending.
    balls: Vec<Vec<Vec<u16>>>,
}

impl<'a> Rules<'a> {
    pub fn new(g: &'a Graph, spec: &'a VariantSpec, dist: &'a DistanceTable) -> Rules<'a> {
        let uniform = spec.uniform_cops();
        let mut by_speed: Vec<(usize, Vec<Vec<u16>>)> = Vec::new();
        let mut balls = Vec::with_capacity(spec.cops.len());
        for cop in &spec.cops {
            if let Some((_, table)) = by_speed.iter().find(|(s, _)| *s == cop.speed) {
                balls.push(table.clone());
            } else {
                let table: Vec<Vec<u16>> = (0..g.n())
                    .map(|v| {
                        (0..g.n())
                            .filter(|&u| dist.d(v, u) as usize <= cop.speed)
                            .map(|u| u as u16)
                            .collect()
                    })
                    .collect();
                by_speed.push((cop.speed, table.clone()));
                balls.push(table);
            }
        }
        Rules { g, spec, dist, uniform, balls }
    }

    /// Capability record for the cop stored at entry `i` of a cop set. With
    /// interchangeable cops every entry shares record 0.
    #[inline]
    fn cap_index(&self, i: usize) -> usize {
        if self.uniform {
            0
        } else {
            i
        }
    }

    pub fn captured(&self, cops: &CopSet, robber: u16) -> bool {
        match self.spec.capture {
            CaptureMode::OccupyOrReach => cops.alive_iter().any(|(i, p)| {
                self.dist.d(p as usize, robber as usize) as usize
                    <= self.spec.cops[self.cap_index(i)].reach
            }),
            CaptureMode::Surround => self
                .g
                .neighbors(robber as usize)
                .iter()
                .all(|&u| cops.occupies(u as u16)),
        }
    }

    /// Safe vertices for the robber: outside every live cop's reach.
    fn safe_mask(&self, cops: &CopSet) -> Vec<bool> {
        let n = self.g.n();
        let mut safe = vec![true; n];
        for (i, p) in cops.alive_iter() {
            let reach = self.spec.cops[self.cap_index(i)].reach;
            for v in 0..n {
                if safe[v] && self.dist.d(p as usize, v) as usize <= reach {
                    safe[v] = false;
                }
            }
        }
        safe
    }

    /// All joint cop moves from `cops`, canonicalized and deduplicated,
    /// ascending. Eliminated cops do not move.
    pub fn cop_moves(&self, cops: &CopSet) -> Vec<CopSet> {
        let entries = cops.len();
        let mut lazy_entries: Vec<usize> = Vec::new();
        for (i, p) in cops.alive_iter() {
            if self.spec.cops[self.cap_index(i)].activity == Activity::Lazy && p != DEAD {
                lazy_entries.push(i);
            }
        }
        let mut out = Vec::new();
        let mut movers: Vec<Option<usize>> = vec![None];
        movers.extend(lazy_entries.iter().map(|&i| Some(i)));
        for mover in movers {
            // Candidate end vertices per entry under this lazy choice.
            let mut cand: Vec<Vec<u16>> = Vec::with_capacity(entries);
            let mut feasible = true;
            for (i, &p) in cops.slice().iter().enumerate() {
                if p == DEAD {
                    cand.push(vec![DEAD]);
                    continue;
                }
                let cap = &self.spec.cops[self.cap_index(i)];
                let list: Vec<u16> = match cap.activity {
                    Activity::Flexible => self.balls[self.cap_index(i)][p as usize].clone(),
                    Activity::Active => self
                        .g
                        .neighbors(p as usize)
                        .iter()
                        .map(|&u| u as u16)
                        .collect(),
                    Activity::Lazy => {
                        if mover == Some(i) {
                            self.balls[self.cap_index(i)][p as usize]
                                .iter()
                                .copied()
                                .filter(|&u| u != p)
                                .collect()
                        } else {
                            vec![p]
                        }
                    }
                };
                if list.is_empty() {
                    feasible = false;
                    break;
                }
                cand.push(list);
            }
            if !feasible {
                continue;
            }
            let mut current = [0u16; MAX_COPS];
            self.product(&cand, 0, &mut current, cops.len(), &mut out);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn product(
        &self,
        cand: &[Vec<u16>],
        depth: usize,
        current: &mut [u16; MAX_COPS],
        len: usize,
        out: &mut Vec<CopSet>,
    ) {
        if depth == cand.len() {
            let set = CopSet::from_slice(&current[..len]);
            out.push(if self.uniform { set.sorted() } else { set });
            return;
        }
        for &v in &cand[depth] {
            current[depth] = v;
            self.product(cand, depth + 1, current, len, out);
        }
    }

    /// All robber moves from `(cops, robber)`: `(new cop set, new robber
    /// vertex)` pairs. The cop set only changes on an attack that eliminates
    /// a cop; an attack onto a multiply-occupied vertex leaves the set
    /// unchanged and lands the robber on it (a captured position).
    pub fn robber_moves(&self, cops: &CopSet, robber: u16) -> Vec<(CopSet, u16)> {
        let speed = self.spec.robber.speed;
        let n = self.g.n();
        let mut ends: Vec<u16> = Vec::new();
        match self.spec.capture {
            CaptureMode::OccupyOrReach => {
                let safe = self.safe_mask(cops);
                debug_assert!(safe[robber as usize], "robber asked to move from a captured spot");
                let mut depth = vec![usize::MAX; n];
                depth[robber as usize] = 0;
                let mut queue = VecDeque::from([robber as usize]);
                while let Some(v) = queue.pop_front() {
                    if depth[v] == speed {
                        continue;
                    }
                    for &w in self.g.neighbors(v) {
                        if safe[w] && depth[w] == usize::MAX {
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                for v in 0..n {
                    if depth[v] != usize::MAX {
                        ends.push(v as u16);
                    }
                }
            }
            CaptureMode::Surround => {
                // Transit over cops is allowed; only the end vertex must be
                // free of cops.
                let mut depth = vec![usize::MAX; n];
                depth[robber as usize] = 0;
                let mut queue = VecDeque::from([robber as usize]);
                while let Some(v) = queue.pop_front() {
                    if depth[v] == speed {
                        continue;
                    }
                    for &w in self.g.neighbors(v) {
                        if depth[w] == usize::MAX {
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                for v in 0..n {
                    if depth[v] != usize::MAX && !cops.occupies(v as u16) {
                        ends.push(v as u16);
                    }
                }
            }
        }
        if self.spec.robber.activity == RobberActivity::Active {
            ends.retain(|&v| v != robber);
        }
        let mut out: Vec<(CopSet, u16)> = ends.into_iter().map(|v| (*cops, v)).collect();
        if self.spec.robber.attacking {
            for &w in self.g.neighbors(robber as usize) {
                let w = w as u16;
                match cops.count_at(w) {
                    0 => {}
                    1 => {
                        let slain = if self.uniform {
                            cops.remove_one(w)
                        } else {
                            let (slot, _) =
                                cops.alive_iter().find(|&(_, p)| p == w).expect("occupied");
                            cops.kill_slot(slot)
                        };
                        out.push((slain, w));
                    }
                    _ => out.push((*cops, w)),
                }
            }
        }
        out
    }
}
