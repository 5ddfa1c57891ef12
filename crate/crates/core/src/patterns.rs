//! Sum objective through long-interval patterns and a zero-length completion.
//!
//! Split a solution into its positive-length intervals and its zero-length
//! ones. The positive-length intervals have total length at most `ell`, so
//! they fit into at most `ell` disjoint windows of at most `ell + 1` layers
//! each. The solver enumerates every ordered sequence of such windows
//! together with the intervals placed inside them, deletes the edges those
//! intervals cover, and asks [`layerzero`](crate::layerzero) whether the
//! residual graph can be covered with the remaining interval budgets.
//!
//! Windows are enumerated at concrete positions. Each window is exactly the
//! span of its intervals (some interval starts at offset 0, some ends at the
//! last offset), which makes every window/interval-set pair distinct.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::{Edge, TemporalGraph, Vertex};
use crate::layerzero::solve_zero_assignment;
use crate::timeline::{BudgetSpec, Interval, SolveOutcome, Timeline};
use crate::{Error, Result};

/// A window `start..=end` of layers with intervals placed inside it.
///
/// Interval bounds are offsets from `start`, `0 <= a < b <= end - start`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionPattern {
    pub start: u32,
    pub end: u32,
    pub intervals: Vec<Interval>,
}

impl SolutionPattern {
    /// Total length of the pattern's intervals.
    pub fn weight(&self) -> u32 {
        self.intervals.iter().map(Interval::len).sum()
    }

    /// The intervals at absolute time steps.
    pub fn absolute(&self) -> impl Iterator<Item = Interval> + '_ {
        self.intervals.iter().map(|iv| Interval::new(iv.v, self.start + iv.a, self.start + iv.b))
    }
}

/// The graph left after implementing a pattern sequence, with the interval
/// budgets still available to each vertex (index `v - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub graph: TemporalGraph,
    pub budgets: Vec<u32>,
}

/// Interval sets for every span `1..=max_span`, canonical, with tight span
/// and total length at most `ell`.
fn interval_sets_by_span(n: Vertex, max_span: u32, ell: u32, caps: &[u32]) -> Vec<Vec<Vec<Interval>>> {
    let mut by_span = vec![Vec::new(); max_span as usize + 1];
    for span in 1..=max_span {
        let candidates: Vec<Interval> = (1..=n)
            .flat_map(|v| (0..span).flat_map(move |a| (a + 1..=span).map(move |b| Interval::new(v, a, b))))
            .filter(|iv| iv.len() <= ell)
            .collect();
        let mut current = Vec::new();
        collect_sets(&candidates, 0, ell, caps, &mut current, &mut |set| {
            let tight = set.iter().any(|iv| iv.a == 0) && set.iter().any(|iv| iv.b == span);
            if tight {
                by_span[span as usize].push(set.to_vec());
            }
        });
    }
    by_span
}

fn collect_sets(
    candidates: &[Interval],
    from: usize,
    weight_left: u32,
    caps: &[u32],
    current: &mut Vec<Interval>,
    emit: &mut impl FnMut(&[Interval]),
) {
    if !current.is_empty() {
        emit(current);
    }
    for idx in from..candidates.len() {
        let iv = candidates[idx];
        if iv.len() > weight_left {
            continue;
        }
        let used = current.iter().filter(|c| c.v == iv.v).count() as u32;
        if used >= caps[iv.v as usize - 1] {
            continue;
        }
        current.push(iv);
        collect_sets(candidates, idx + 1, weight_left - iv.len(), caps, current, emit);
        current.pop();
    }
}

/// Streams every pattern sequence for `g`: disjoint windows in increasing
/// order, total weight at most `ell`, and at most `caps[v - 1]` intervals of
/// each vertex overall. The empty sequence comes first. The callback may
/// stop the stream early.
pub fn for_each_pattern_sequence<B>(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    ell: u32,
    mut f: impl FnMut(&[SolutionPattern]) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let caps = budget.require_vertex_caps(g.n(), "pattern enumeration takes per-vertex budgets")?;
    let ell = ell.min(g.tau().saturating_sub(1).saturating_mul(g.n()));
    let sets = interval_sets_by_span(g.n(), ell.min(g.tau() - 1), ell, &caps);
    let mut walk = Walk { tau: g.tau(), sets: &sets, used: vec![0; caps.len()], caps, seq: Vec::new() };
    Ok(match walk.run(1, ell, &mut f) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    })
}

/// Collects [`for_each_pattern_sequence`]; for small instances and tests.
pub fn enumerate_pattern_sequences(
    g: &TemporalGraph,
    budget: &BudgetSpec,
    ell: u32,
) -> Result<Vec<Vec<SolutionPattern>>> {
    let mut out = Vec::new();
    for_each_pattern_sequence::<()>(g, budget, ell, |seq| {
        out.push(seq.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct Walk<'a> {
    tau: u32,
    sets: &'a [Vec<Vec<Interval>>],
    caps: Vec<u32>,
    used: Vec<u32>,
    seq: Vec<SolutionPattern>,
}

impl Walk<'_> {
    fn run<B>(
        &mut self,
        earliest: u32,
        weight_left: u32,
        f: &mut impl FnMut(&[SolutionPattern]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        f(&self.seq)?;
        for start in earliest..self.tau {
            for span in 1..=weight_left.min(self.tau - start).min(self.sets.len() as u32 - 1) {
                for set in &self.sets[span as usize] {
                    let weight: u32 = set.iter().map(Interval::len).sum();
                    if weight > weight_left {
                        continue;
                    }
                    if !self.try_take(set) {
                        continue;
                    }
                    self.seq.push(SolutionPattern { start, end: start + span, intervals: set.clone() });
                    let flow = self.run(start + span + 1, weight_left - weight, f);
                    self.seq.pop();
                    self.release(set);
                    flow?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn try_take(&mut self, set: &[Interval]) -> bool {
        for (i, iv) in set.iter().enumerate() {
            let slot = &mut self.used[iv.v as usize - 1];
            if *slot >= self.caps[iv.v as usize - 1] {
                self.release(&set[..i]);
                return false;
            }
            *slot += 1;
        }
        true
    }

    fn release(&mut self, set: &[Interval]) {
        for iv in set {
            self.used[iv.v as usize - 1] -= 1;
        }
    }
}

/// Deletes, at every step of every window, the edges incident to a vertex
/// whose pattern interval covers that step, and charges each pattern
/// interval to its vertex's budget.
pub fn apply_patterns(g: &TemporalGraph, budget: &BudgetSpec, seq: &[SolutionPattern]) -> Result<Residual> {
    let mut budgets = budget.require_vertex_caps(g.n(), "patterns take per-vertex budgets")?;
    let mut last_end = 0;
    for p in seq {
        if p.start <= last_end || p.end <= p.start || p.end > g.tau() {
            return Err(Error::Precondition("pattern windows must be ordered, disjoint, and inside the lifetime"));
        }
        last_end = p.end;
        for iv in &p.intervals {
            if iv.v == 0 || iv.v > g.n() || iv.a >= iv.b || iv.b > p.end - p.start {
                return Err(Error::Precondition("pattern interval outside its window"));
            }
            let k = &mut budgets[iv.v as usize - 1];
            *k = k.checked_sub(1).ok_or(Error::Precondition("pattern sequence exceeds a vertex budget"))?;
        }
    }
    let mut layers: Vec<Vec<Edge>> = g.layers().to_vec();
    for p in seq {
        for iv in p.absolute() {
            for t in iv.a..=iv.b {
                layers[t as usize - 1].retain(|e| !e.touches(iv.v));
            }
        }
    }
    Ok(Residual { graph: TemporalGraph::from_sorted_layers(g.n(), layers), budgets })
}

/// Decides the sum objective by pattern enumeration plus the zero-length
/// solver on each residual. Returns the first success in enumeration order.
pub fn solve_sum_patterns(g: &TemporalGraph, budget: &BudgetSpec, ell: u32) -> Result<SolveOutcome> {
    budget.require_vertex_caps(g.n(), "patterns take per-vertex budgets")?;
    if ell == 0 {
        return crate::layerzero::solve_zero(g, budget);
    }
    let mut failure = None;
    let found = for_each_pattern_sequence(g, budget, ell, |seq| {
        let residual = match apply_patterns(g, budget, seq) {
            Ok(r) => r,
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(None);
            }
        };
        match solve_zero_assignment(&residual.graph, &BudgetSpec::NonUniform(residual.budgets)) {
            Ok(Some((profile, x))) => {
                let mut t: Timeline = x.to_timeline(&profile);
                t.extend(seq.iter().flat_map(SolutionPattern::absolute));
                ControlFlow::Break(Some(t))
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(None)
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(match found.flatten() {
        Some(t) => SolveOutcome::Yes(t),
        None => SolveOutcome::No,
    })
}
