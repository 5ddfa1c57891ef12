//! Exhaustive reference solver.
//!
//! The search walks the time-edges in (time, edge) order. At the first
//! time-edge not yet covered it tries every interval of either endpoint that
//! contains that time step and fits the remaining budgets and objective,
//! then recurses. There is no memoization; the answer rests on exhaustion
//! alone, which keeps this module independent of the other solvers.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, TemporalGraph};
use crate::timeline::{BudgetSpec, Interval, Objective, ObjectiveKind, SolveOutcome};
use crate::{Error, Result};

/// Default bound on `n * tau` for the oracle.
pub const DEFAULT_CELL_CAP: u64 = 20;

/// Decides the instance with the default size cap.
pub fn oracle_solve(g: &TemporalGraph, budget: &BudgetSpec, obj: Objective) -> Result<SolveOutcome> {
    oracle_solve_capped(g, budget, obj, DEFAULT_CELL_CAP)
}

pub fn oracle_solve_capped(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    obj: Objective,
    cell_cap: u64,
) -> Result<SolveOutcome> {
    let cells = u64::from(g.n()) * u64::from(g.tau());
    if cells > cell_cap {
        return Err(Error::Refused { what: "oracle n*tau", size: cells, cap: cell_cap });
    }
    budget.validate(g.n())?;
    let (class_of, caps) = budget.class_view(g.n());
    let mut search = Search {
        tau: g.tau(),
        obj,
        time_edges: g.time_edges().collect(),
        class_of,
        remaining: caps,
        sum_left: obj.ell,
        active: vec![vec![0u16; g.n() as usize + 1]; g.tau() as usize + 1],
        chosen: Vec::new(),
    };
    Ok(if search.run(0) {
        SolveOutcome::Yes(search.chosen.into_iter().collect())
    } else {
        SolveOutcome::No
    })
}

/// Smallest `ell` with a YES answer, scanning upwards from 0.
///
/// `None` if even `ell = tau * n * k` fails, where `k` is the largest budget.
pub fn oracle_min_ell(g: &TemporalGraph, budget: &BudgetSpec, kind: ObjectiveKind) -> Result<Option<u32>> {
    oracle_min_ell_capped(g, budget, kind, DEFAULT_CELL_CAP)
}

pub fn oracle_min_ell_capped(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    kind: ObjectiveKind,
    cell_cap: u64,
) -> Result<Option<u32>> {
    budget.validate(g.n())?;
    let (_, caps) = budget.class_view(g.n());
    let k_max = caps.iter().copied().max().unwrap_or(0);
    let limit = g.tau().saturating_mul(g.n()).saturating_mul(k_max);
    let solve = |ell| oracle_solve_capped(g, budget, Objective { kind, ell }, cell_cap);
    if !solve(limit)?.is_yes() {
        return Ok(None);
    }
    for ell in 0..limit {
        if solve(ell)?.is_yes() {
            return Ok(Some(ell));
        }
    }
    Ok(Some(limit))
}

struct Search {
    tau: u32,
    obj: Objective,
    time_edges: Vec<(u32, Edge)>,
    class_of: Vec<usize>,
    remaining: Vec<u32>,
    sum_left: u32,
    /// active[t][v]: number of chosen intervals of `v` containing `t`.
    active: Vec<Vec<u16>>,
    chosen: Vec<Interval>,
}

impl Search {
    fn run(&mut self, from: usize) -> bool {
        let next = (from..self.time_edges.len()).find(|&i| {
            let (t, e) = self.time_edges[i];
            let row = &self.active[t as usize];
            row[e.u as usize] == 0 && row[e.v as usize] == 0
        });
        let Some(idx) = next else {
            return true;
        };
        let (t, e) = self.time_edges[idx];
        for w in [e.u, e.v] {
            let class = self.class_of[w as usize - 1];
            if self.remaining[class] == 0 {
                continue;
            }
            let reach = match self.obj.kind {
                ObjectiveKind::MaxLen => self.obj.ell,
                ObjectiveKind::SumLen => self.sum_left,
            };
            let lo = t.saturating_sub(reach).max(1);
            for a in lo..=t {
                let hi = a.saturating_add(reach).min(self.tau);
                for b in t..=hi {
                    let iv = Interval::new(w, a, b);
                    if self.chosen.contains(&iv) {
                        continue;
                    }
                    self.push(iv, class);
                    if self.run(idx + 1) {
                        return true;
                    }
                    self.pop(class);
                }
            }
        }
        false
    }

    fn push(&mut self, iv: Interval, class: usize) {
        self.remaining[class] -= 1;
        if self.obj.kind == ObjectiveKind::SumLen {
            self.sum_left -= iv.len();
        }
        for s in iv.a..=iv.b {
            self.active[s as usize][iv.v as usize] += 1;
        }
        self.chosen.push(iv);
    }

    fn pop(&mut self, class: usize) {
        let iv = self.chosen.pop().expect("pop after push");
        self.remaining[class] += 1;
        if self.obj.kind == ObjectiveKind::SumLen {
            self.sum_left += iv.len();
        }
        for s in iv.a..=iv.b {
            self.active[s as usize][iv.v as usize] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::timeline::{verify_timeline, Timeline};

    fn three_identical() -> TemporalGraph {
        TemporalGraph::new(2, [[(1, 2)], [(1, 2)], [(1, 2)]]).unwrap()
    }

    #[test]
    fn three_layers_single_interval() {
        let g = three_identical();
        let k1 = BudgetSpec::Uniform(1);
        assert_eq!(oracle_solve(&g, &k1, Objective::max(0)).unwrap(), SolveOutcome::No);
        let yes = oracle_solve(&g, &k1, Objective::max(2)).unwrap();
        let w = yes.witness().expect("yes at ell = 2");
        assert!(verify_timeline(&g, w, &k1, Objective::max(2)).unwrap().is_valid());
        let single: Timeline = [Interval::new(1, 1, 3)].into_iter().collect();
        assert!(verify_timeline(&g, &single, &k1, Objective::max(2)).unwrap().is_valid());
        // {(1,1,2), (2,3,3)} already works at ell = 1.
        assert_eq!(oracle_min_ell(&g, &k1, ObjectiveKind::MaxLen).unwrap(), Some(1));
        assert_eq!(oracle_min_ell(&g, &k1, ObjectiveKind::SumLen).unwrap(), Some(1));
    }

    #[test]
    fn empty_layers() {
        let g = TemporalGraph::empty(3, 3).unwrap();
        let out = oracle_solve(&g, &BudgetSpec::Uniform(0), Objective::sum(0)).unwrap();
        assert_eq!(out, SolveOutcome::Yes(Timeline::new()));
        assert_eq!(oracle_min_ell(&g, &BudgetSpec::Uniform(0), ObjectiveKind::SumLen).unwrap(), Some(0));
    }

    #[test]
    fn refuses_large_instances() {
        let g = TemporalGraph::empty(5, 5).unwrap();
        assert!(matches!(
            oracle_solve(&g, &BudgetSpec::Uniform(1), Objective::max(0)),
            Err(Error::Refused { .. })
        ));
        assert!(oracle_solve_capped(&g, &BudgetSpec::Uniform(1), Objective::max(0), 25).is_ok());
    }

    #[test]
    fn unsolvable_at_any_ell() {
        let g = three_identical();
        assert_eq!(oracle_min_ell(&g, &BudgetSpec::Uniform(0), ObjectiveKind::MaxLen).unwrap(), None);
    }

    #[test]
    fn multicolored_witness_verifies() {
        let g = TemporalGraph::new(3, [vec![(1, 2), (2, 3)], vec![(1, 3)]]).unwrap();
        let b = BudgetSpec::Multicolored { classes: vec![vec![1, 3], vec![2]], budgets: vec![1, 1] };
        let out = oracle_solve(&g, &b, Objective::max(0)).unwrap();
        let w = out.witness().expect("yes");
        assert!(verify_timeline(&g, w, &b, Objective::max(0)).unwrap().is_valid());
    }
}
