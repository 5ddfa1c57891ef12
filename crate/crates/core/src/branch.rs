//! Bounded search tree for the max objective.
//!
//! Take the earliest nonempty layer `i` and its smallest edge `{u, v}`. Some
//! interval of `u` or `v` must cover it, and with every earlier layer already
//! covered that interval can start at `i` and run for the full length bound.
//! So the search branches on `(u, i, i')` then `(v, i, i')` with
//! `i' = min(i + ell, tau)`, deleting the chosen vertex's edges from layers
//! `i..=i'`. Each branch uses up one interval, which bounds the depth by the
//! total budget.

use alloc::vec::Vec;

use crate::graph::{Edge, TemporalGraph};
use crate::timeline::{BudgetSpec, Interval, SolveOutcome};
use crate::Result;

/// Counters from one run of [`solve_max_branching_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Calls that picked an edge and recursed into at least one branch.
    pub expanded: u64,
    /// Calls that returned without recursing.
    pub leaves: u64,
}

pub fn solve_max_branching(g: &TemporalGraph, budget: &BudgetSpec, ell: u32) -> Result<SolveOutcome> {
    solve_max_branching_stats(g, budget, ell).map(|(out, _)| out)
}

pub fn solve_max_branching_stats(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    ell: u32,
) -> Result<(SolveOutcome, BranchStats)> {
    budget.validate(g.n())?;
    let (class_of, caps) = budget.class_view(g.n());
    let mut tree = SearchTree {
        tau: g.tau(),
        ell,
        layers: g.layers().iter().map(|l| l.iter().map(|&e| (e, true)).collect()).collect(),
        alive: g.layers().iter().map(Vec::len).collect(),
        class_of,
        left: caps,
        undo: Vec::new(),
        chosen: Vec::new(),
        stats: BranchStats::default(),
    };
    let found = tree.search(0);
    let out = if found {
        SolveOutcome::Yes(tree.chosen.iter().copied().collect())
    } else {
        SolveOutcome::No
    };
    Ok((out, tree.stats))
}

struct SearchTree {
    tau: u32,
    ell: u32,
    layers: Vec<Vec<(Edge, bool)>>,
    alive: Vec<usize>,
    class_of: Vec<usize>,
    left: Vec<u32>,
    /// (layer index, edge index) of every deleted edge, most recent last.
    undo: Vec<(usize, usize)>,
    chosen: Vec<Interval>,
    stats: BranchStats,
}

impl SearchTree {
    fn search(&mut self, from: usize) -> bool {
        let Some(layer) = (from..self.layers.len()).find(|&i| self.alive[i] > 0) else {
            self.stats.leaves += 1;
            return true;
        };
        let edge = self.layers[layer].iter().find(|(_, a)| *a).expect("alive edge").0;
        let i = layer as u32 + 1;
        let end = i.saturating_add(self.ell).min(self.tau);
        let mut branched = false;
        for w in [edge.u, edge.v] {
            let class = self.class_of[w as usize - 1];
            if self.left[class] == 0 {
                continue;
            }
            if !branched {
                self.stats.expanded += 1;
                branched = true;
            }
            let mark = self.undo.len();
            self.left[class] -= 1;
            self.chosen.push(Interval::new(w, i, end));
            for t in layer..end as usize {
                for (idx, (e, alive)) in self.layers[t].iter_mut().enumerate() {
                    if *alive && e.touches(w) {
                        *alive = false;
                        self.alive[t] -= 1;
                        self.undo.push((t, idx));
                    }
                }
            }
            if self.search(layer) {
                return true;
            }
            while self.undo.len() > mark {
                let (t, idx) = self.undo.pop().expect("undo entry");
                self.layers[t][idx].1 = true;
                self.alive[t] += 1;
            }
            self.chosen.pop();
            self.left[class] += 1;
        }
        if !branched {
            self.stats.leaves += 1;
        }
        false
    }
}
