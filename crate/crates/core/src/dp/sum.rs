//! Table over `(layer, k_1..k_n, S, l)` for the sum objective.
//!
//! `S` is the set of vertices active at the layer, `k_j` bounds the number
//! of intervals of vertex `j` so far and `l` bounds the total length so far.
//! A vertex active at two consecutive layers either continues its interval
//! (one unit of length) or closes it and opens a new one (one interval).

use alloc::vec::Vec;

use super::{CounterRadix, Journal, DEFAULT_CELL_CAP};
use crate::graph::{mask_covers, TemporalGraph};
use crate::timeline::{BudgetSpec, Interval, SolveOutcome, Timeline};
use crate::{Error, Result};

pub fn solve_sum_dp(g: &TemporalGraph, budget: &BudgetSpec, ell: u32) -> Result<SolveOutcome> {
    solve_sum_dp_capped(g, budget, ell, DEFAULT_CELL_CAP)
}

/// Refuses when `tau * (ell + 1) * prod(k_v + 1) * 2^n` exceeds `cell_cap`.
pub fn solve_sum_dp_capped(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    ell: u32,
    cell_cap: u64,
) -> Result<SolveOutcome> {
    let caps = budget.require_vertex_caps(g.n(), "sum-dp takes uniform or per-vertex budgets")?;
    let n = g.n() as usize;
    let tau = g.tau();
    // One vertex's intervals never overlap here, so its lengths add up to at most tau - 1.
    let ell = u64::from(ell).min(n as u64 * u64::from(tau - 1));
    let refuse = |size| Error::Refused { what: "sum-dp table cells", size, cap: cell_cap };
    if n > 63 {
        return Err(refuse(u64::MAX));
    }
    let counters = CounterRadix::new(&caps).ok_or_else(|| refuse(u64::MAX))?;
    let cells = counters
        .size
        .checked_mul(1 << n)
        .and_then(|c| c.checked_mul(ell + 1))
        .and_then(|c| c.checked_mul(u64::from(tau)))
        .ok_or_else(|| refuse(u64::MAX))?;
    if cells > cell_cap {
        return Err(refuse(cells));
    }

    let table = SumTable { n, ell, caps, counters, masks: g.layer_masks() };
    let mut journal = Journal::default();
    let mut reached = journal.push_layer(table.first_layer());
    for i in 2..=tau {
        if reached.is_empty() {
            break;
        }
        let mut stamps = Vec::new();
        for &s in &reached {
            table.successors(i, s, &mut stamps);
        }
        reached = journal.push_layer(stamps);
    }
    if reached.is_empty() || journal.layers.len() != tau as usize {
        return Ok(SolveOutcome::No);
    }
    let full = table.counters.full();
    let end = journal.last().iter().map(|&(s, _)| s).find(|&s| {
        let (k, _, l) = table.unpack(s);
        k == full && l == table.ell
    });
    match end {
        Some(end) => Ok(SolveOutcome::Yes(table.witness(&journal.trace(end)))),
        None => Ok(SolveOutcome::No),
    }
}

struct SumTable {
    n: usize,
    ell: u64,
    caps: Vec<u32>,
    counters: CounterRadix,
    masks: Vec<Vec<(u64, u64)>>,
}

impl SumTable {
    #[inline]
    fn pack(&self, k: u64, set: u64, l: u64) -> u64 {
        ((k << self.n) | set) * (self.ell + 1) + l
    }

    #[inline]
    fn unpack(&self, s: u64) -> (u64, u64, u64) {
        let l = s % (self.ell + 1);
        let rest = s / (self.ell + 1);
        (rest >> self.n, rest & ((1u64 << self.n) - 1), l)
    }

    fn first_layer(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for k in 0..self.counters.size {
            let positive = (0..self.n)
                .filter(|&j| self.counters.digit(k, j) > 0)
                .fold(0u64, |m, j| m | 1 << j);
            for set in 0u64..(1u64 << self.n) {
                if set & !positive != 0 || !mask_covers(&self.masks[0], set) {
                    continue;
                }
                for l in 0..=self.ell {
                    out.push((self.pack(k, set, l), u64::MAX));
                }
            }
        }
        out
    }

    fn successors(&self, i: u32, prev: u64, out: &mut Vec<(u64, u64)>) {
        let (pk, pset, pl) = self.unpack(prev);
        let layer = &self.masks[(i - 1) as usize];
        let digits: Vec<u32> = (0..self.n).map(|j| self.counters.digit(pk, j)).collect();
        for set in 0u64..(1u64 << self.n) {
            if !mask_covers(layer, set) {
                continue;
            }
            // Fresh starts each cost one interval.
            let fresh = set & !pset;
            if (0..self.n).any(|j| fresh >> j & 1 == 1 && digits[j] >= self.caps[j]) {
                continue;
            }
            let base_k = pk + (0..self.n).filter(|&j| fresh >> j & 1 == 1).map(|j| self.counters.mul[j]).sum::<u64>();
            // Vertices active at both layers: continue (length) or reopen (count).
            let both = set & pset;
            let mut reopen = both;
            loop {
                let continuing = both & !reopen;
                let cost = u64::from(continuing.count_ones());
                let fits = pl + cost <= self.ell
                    && (0..self.n).all(|j| reopen >> j & 1 == 0 || digits[j] < self.caps[j]);
                if fits {
                    let k = base_k
                        + (0..self.n).filter(|&j| reopen >> j & 1 == 1).map(|j| self.counters.mul[j]).sum::<u64>();
                    out.push((self.pack(k, set, pl + cost), prev));
                }
                if reopen == 0 {
                    break;
                }
                reopen = (reopen - 1) & both;
            }
        }
    }

    fn witness(&self, path: &[u64]) -> Timeline {
        let states: Vec<(u64, u64, u64)> = path.iter().map(|&s| self.unpack(s)).collect();
        let starts_at = |idx: usize, j: usize| -> bool {
            let (k, set, _) = states[idx];
            if set >> j & 1 == 0 {
                return false;
            }
            if idx == 0 {
                return true;
            }
            let (pk, pset, _) = states[idx - 1];
            pset >> j & 1 == 0 || self.counters.digit(k, j) != self.counters.digit(pk, j)
        };
        let mut t = Timeline::new();
        let mut open = alloc::vec![0u32; self.n];
        for idx in 0..states.len() {
            let (_, set, _) = states[idx];
            for j in 0..self.n {
                if set >> j & 1 == 0 {
                    continue;
                }
                if starts_at(idx, j) {
                    open[j] = idx as u32 + 1;
                }
                let ends = idx + 1 == states.len() || states[idx + 1].1 >> j & 1 == 0 || starts_at(idx + 1, j);
                if ends {
                    t.insert(Interval::new(j as u32 + 1, open[j], idx as u32 + 1));
                }
            }
        }
        t
    }
}
