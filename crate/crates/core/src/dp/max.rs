//! Table over `(layer, k_1..k_n, l_1..l_n)` for the max objective.
//!
//! `k_j` bounds the number of intervals of vertex `j` so far and `l_j` is
//! either `-1` (vertex `j` inactive at this layer) or the distance back to
//! the start of its interval that is open at this layer. A vertex may only
//! close an interval, or stay inactive, when the previous interval already
//! reaches back its full allowed length (or to layer 1); any solution can be
//! stretched into that form without using more intervals.

use alloc::vec::Vec;

use super::{CounterRadix, Journal, DEFAULT_CELL_CAP};
use crate::graph::{mask_covers, TemporalGraph};
use crate::timeline::{BudgetSpec, Interval, SolveOutcome, Timeline};
use crate::{Error, Result};

pub fn solve_max_dp(g: &TemporalGraph, budget: &BudgetSpec, ell: u32) -> Result<SolveOutcome> {
    solve_max_dp_capped(g, budget, ell, DEFAULT_CELL_CAP)
}

/// Refuses when `tau * prod(k_v + 1) * (ell + 2)^n` exceeds `cell_cap`.
pub fn solve_max_dp_capped(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    ell: u32,
    cell_cap: u64,
) -> Result<SolveOutcome> {
    let caps = budget.require_vertex_caps(g.n(), "max-dp takes uniform or per-vertex budgets")?;
    let n = g.n() as usize;
    let tau = g.tau();
    let ell = ell.min(tau - 1);
    let refuse = |size| Error::Refused { what: "max-dp table cells", size, cap: cell_cap };
    if n > 64 {
        return Err(refuse(u64::MAX));
    }
    let counters = CounterRadix::new(&caps).ok_or_else(|| refuse(u64::MAX))?;
    let lbase = u64::from(ell) + 2;
    let lsize = lbase.checked_pow(n as u32).ok_or_else(|| refuse(u64::MAX))?;
    let cells = counters
        .size
        .checked_mul(lsize)
        .and_then(|c| c.checked_mul(u64::from(tau)))
        .ok_or_else(|| refuse(u64::MAX))?;
    if cells > cell_cap {
        return Err(refuse(cells));
    }

    let table = MaxTable { n, ell, caps, counters, lbase, masks: g.layer_masks() };
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
    let Some(&(end, _)) = journal.last().iter().find(|&&(s, _)| s % table.counters.size == full) else {
        return Ok(SolveOutcome::No);
    };
    Ok(SolveOutcome::Yes(table.witness(&journal.trace(end))))
}

struct MaxTable {
    n: usize,
    ell: u32,
    caps: Vec<u32>,
    counters: CounterRadix,
    lbase: u64,
    masks: Vec<Vec<(u64, u64)>>,
}

impl MaxTable {
    fn pack(&self, k: &[u32], l: &[i32]) -> u64 {
        let mut lp = 0u64;
        for &x in l.iter().rev() {
            lp = lp * self.lbase + (x + 1) as u64;
        }
        let kp: u64 = k.iter().zip(&self.counters.mul).map(|(&d, &m)| u64::from(d) * m).sum();
        kp + lp * self.counters.size
    }

    fn unpack(&self, s: u64, k: &mut [u32], l: &mut [i32]) {
        let kp = s % self.counters.size;
        let mut lp = s / self.counters.size;
        for j in 0..self.n {
            k[j] = self.counters.digit(kp, j);
            l[j] = (lp % self.lbase) as i32 - 1;
            lp /= self.lbase;
        }
    }

    fn active_mask(l: &[i32]) -> u64 {
        l.iter().enumerate().filter(|(_, &x)| x >= 0).fold(0, |m, (j, _)| m | 1 << j)
    }

    /// Every entry of layer 1: each vertex is inactive or opens an interval
    /// (needs `k_j > 0`), and the openers cover the first layer.
    fn first_layer(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut k = alloc::vec![0u32; self.n];
        let mut l = alloc::vec![0i32; self.n];
        for kp in 0..self.counters.size {
            for j in 0..self.n {
                k[j] = self.counters.digit(kp, j);
            }
            for mask in 0u64..(1u64 << self.n) {
                if (0..self.n).any(|j| mask >> j & 1 == 1 && k[j] == 0) {
                    continue;
                }
                if !mask_covers(&self.masks[0], mask) {
                    continue;
                }
                for j in 0..self.n {
                    l[j] = if mask >> j & 1 == 1 { 0 } else { -1 };
                }
                out.push((self.pack(&k, &l), u64::MAX));
            }
        }
        out
    }

    /// Stamps every entry at layer `i` whose predecessor is `prev`.
    fn successors(&self, i: u32, prev: u64, out: &mut Vec<(u64, u64)>) {
        let mut pk = alloc::vec![0u32; self.n];
        let mut pl = alloc::vec![0i32; self.n];
        self.unpack(prev, &mut pk, &mut pl);
        // A previous interval may end only once it is as long as allowed.
        let closable = self.ell.min(i - 2) as i32;
        let mut options: Vec<[(u32, i32); 3]> = Vec::with_capacity(self.n);
        let mut counts = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut opts = [(0u32, 0i32); 3];
            let mut c = 0;
            if pl[j] >= 0 && pl[j] < self.ell as i32 {
                opts[c] = (pk[j], pl[j] + 1);
                c += 1;
            }
            if pl[j] == -1 || pl[j] == closable {
                opts[c] = (pk[j], -1);
                c += 1;
                if pk[j] < self.caps[j] {
                    opts[c] = (pk[j] + 1, 0);
                    c += 1;
                }
            }
            if c == 0 {
                return;
            }
            options.push(opts);
            counts.push(c);
        }
        let layer = &self.masks[(i - 1) as usize];
        let mut k = alloc::vec![0u32; self.n];
        let mut l = alloc::vec![0i32; self.n];
        let mut choice = alloc::vec![0usize; self.n];
        loop {
            for j in 0..self.n {
                (k[j], l[j]) = options[j][choice[j]];
            }
            if mask_covers(layer, Self::active_mask(&l)) {
                out.push((self.pack(&k, &l), prev));
            }
            // odometer
            let mut j = 0;
            while j < self.n {
                choice[j] += 1;
                if choice[j] < counts[j] {
                    break;
                }
                choice[j] = 0;
                j += 1;
            }
            if j == self.n {
                return;
            }
        }
    }

    /// Emits `(v_j, i - l_j, i)` wherever the interval open at layer `i` does
    /// not continue into layer `i + 1`.
    fn witness(&self, path: &[u64]) -> Timeline {
        let mut k = alloc::vec![0u32; self.n];
        let mut ls: Vec<Vec<i32>> = Vec::with_capacity(path.len());
        for &s in path {
            let mut l = alloc::vec![0i32; self.n];
            self.unpack(s, &mut k, &mut l);
            ls.push(l);
        }
        let mut t = Timeline::new();
        for (idx, l) in ls.iter().enumerate() {
            let i = idx as u32 + 1;
            for j in 0..self.n {
                if l[j] < 0 {
                    continue;
                }
                let continues = ls.get(idx + 1).is_some_and(|next| next[j] == l[j] + 1);
                if !continues {
                    t.insert(Interval::new(j as u32 + 1, i - l[j] as u32, i));
                }
            }
        }
        t
    }
}
