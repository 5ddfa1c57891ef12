//! Activity timelines, budgets, objectives, and the verifier every solver is
//! checked against.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, TemporalGraph, Vertex};
use crate::{Error, Result};

/// Vertex `v` is active during the time steps `a..=b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub v: Vertex,
    pub a: u32,
    pub b: u32,
}

impl Interval {
    pub fn new(v: Vertex, a: u32, b: u32) -> Self {
        debug_assert!(a <= b);
        Interval { v, a, b }
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.b - self.a
    }

    #[inline]
    pub fn contains(&self, t: u32) -> bool {
        self.a <= t && t <= self.b
    }
}

/// A set of intervals; iteration is ordered by `(v, a, b)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Timeline {
    entries: BTreeSet<Interval>,
}

impl Timeline {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if the triple was already present.
    pub fn insert(&mut self, iv: Interval) -> bool {
        self.entries.insert(iv)
    }

    pub fn remove(&mut self, iv: &Interval) -> bool {
        self.entries.remove(iv)
    }

    pub fn contains(&self, iv: &Interval) -> bool {
        self.entries.contains(iv)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> + '_ {
        self.entries.iter()
    }

    /// Number of intervals of `v`.
    pub fn count_for(&self, v: Vertex) -> usize {
        self.entries.range(Interval { v, a: 0, b: 0 }..Interval { v: v + 1, a: 0, b: 0 }).count()
    }

    pub fn intervals_of(&self, v: Vertex) -> impl Iterator<Item = &Interval> + '_ {
        self.entries.range(Interval { v, a: 0, b: 0 }..Interval { v: v + 1, a: 0, b: 0 })
    }

    pub fn is_active(&self, v: Vertex, t: u32) -> bool {
        self.intervals_of(v).any(|iv| iv.contains(t))
    }

    /// Entries with `a == b`.
    pub fn zero_length(&self) -> impl Iterator<Item = &Interval> + '_ {
        self.entries.iter().filter(|iv| iv.a == iv.b)
    }

    /// Entries with `a < b`.
    pub fn positive_length(&self) -> impl Iterator<Item = &Interval> + '_ {
        self.entries.iter().filter(|iv| iv.a < iv.b)
    }
}

impl FromIterator<Interval> for Timeline {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        Timeline { entries: iter.into_iter().collect() }
    }
}

impl Extend<Interval> for Timeline {
    fn extend<I: IntoIterator<Item = Interval>>(&mut self, iter: I) {
        self.entries.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Timeline {
    type Item = &'a Interval;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// How many intervals each vertex may use.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BudgetSpec {
    /// Every vertex gets `k` intervals.
    Uniform(u32),
    /// `k_v` for `v = 1..=n`, stored at index `v - 1`.
    NonUniform(Vec<u32>),
    /// The color classes partition `1..=n`; class `i` (0-based index here)
    /// may use `budgets[i]` intervals in total over all of its vertices.
    Multicolored { classes: Vec<Vec<Vertex>>, budgets: Vec<u32> },
}

impl BudgetSpec {
    pub fn validate(&self, n: Vertex) -> Result<()> {
        match self {
            BudgetSpec::Uniform(_) => Ok(()),
            BudgetSpec::NonUniform(ks) => {
                if ks.len() != n as usize {
                    return Err(Error::InvalidBudget("per-vertex budget count differs from n"));
                }
                Ok(())
            }
            BudgetSpec::Multicolored { classes, budgets } => {
                if classes.len() != budgets.len() {
                    return Err(Error::InvalidBudget("class and budget counts differ"));
                }
                let mut seen = vec![false; n as usize];
                for &v in classes.iter().flatten() {
                    if v == 0 || v > n {
                        return Err(Error::InvalidBudget("class member out of range"));
                    }
                    if core::mem::replace(&mut seen[v as usize - 1], true) {
                        return Err(Error::InvalidBudget("color classes overlap"));
                    }
                }
                if seen.iter().any(|s| !s) {
                    return Err(Error::InvalidBudget("color classes do not cover every vertex"));
                }
                Ok(())
            }
        }
    }

    /// Per-vertex caps, indexed by `v - 1`. `None` for the multicolored variant.
    pub fn vertex_caps(&self, n: Vertex) -> Option<Vec<u32>> {
        match self {
            BudgetSpec::Uniform(k) => Some(vec![*k; n as usize]),
            BudgetSpec::NonUniform(ks) => Some(ks.clone()),
            BudgetSpec::Multicolored { .. } => None,
        }
    }

    /// Like [`vertex_caps`](Self::vertex_caps) but validated and as an error
    /// for solvers that only take per-vertex budgets.
    pub(crate) fn require_vertex_caps(&self, n: Vertex, solver: &'static str) -> Result<Vec<u32>> {
        self.validate(n)?;
        self.vertex_caps(n).ok_or(Error::Unsupported(solver))
    }

    /// Class index per vertex (index `v - 1`) and per-class caps. Every
    /// variant maps onto this form: uniform and nonuniform budgets become
    /// singleton classes.
    pub fn class_view(&self, n: Vertex) -> (Vec<usize>, Vec<u32>) {
        match self {
            BudgetSpec::Multicolored { classes, budgets } => {
                let mut class_of = vec![usize::MAX; n as usize];
                for (i, c) in classes.iter().enumerate() {
                    for &v in c {
                        class_of[v as usize - 1] = i;
                    }
                }
                (class_of, budgets.clone())
            }
            other => ((0..n as usize).collect(), other.vertex_caps(n).unwrap_or_default()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    /// Maximum interval length.
    MaxLen,
    /// Sum of interval lengths.
    SumLen,
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectiveKind::MaxLen => "max",
            ObjectiveKind::SumLen => "sum",
        })
    }
}

/// The objective together with its bound `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Objective {
    pub kind: ObjectiveKind,
    pub ell: u32,
}

impl Objective {
    pub fn max(ell: u32) -> Self {
        Objective { kind: ObjectiveKind::MaxLen, ell }
    }

    pub fn sum(ell: u32) -> Self {
        Objective { kind: ObjectiveKind::SumLen, ell }
    }
}

/// `b - a` aggregated by max or sum; 0 for the empty timeline.
pub fn objective_value(t: &Timeline, kind: ObjectiveKind) -> u64 {
    let lens = t.iter().map(|iv| u64::from(iv.len()));
    match kind {
        ObjectiveKind::MaxLen => lens.max().unwrap_or(0),
        ObjectiveKind::SumLen => lens.sum(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Yes(Timeline),
    No,
}

impl SolveOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveOutcome::Yes(_))
    }

    pub fn witness(&self) -> Option<&Timeline> {
        match self {
            SolveOutcome::Yes(t) => Some(t),
            SolveOutcome::No => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// No endpoint of `edge` is active at time `t`.
    Uncovered { t: u32, edge: Edge },
    VertexBudget { v: Vertex, used: usize, allowed: u32 },
    /// `class` is 1-based.
    ClassBudget { class: usize, used: usize, allowed: u32 },
    Objective { kind: ObjectiveKind, value: u64, ell: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered { t, edge } => {
                write!(f, "UNCOVERED t={t} edge={} {}", edge.u, edge.v)
            }
            Violation::VertexBudget { v, used, allowed } => {
                write!(f, "BUDGET vertex={v} used={used} allowed={allowed}")
            }
            Violation::ClassBudget { class, used, allowed } => {
                write!(f, "BUDGET class={class} used={used} allowed={allowed}")
            }
            Violation::Objective { kind, value, ell } => {
                write!(f, "OBJECTIVE {kind}={value} ell={ell}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks that `t` covers `g`, respects `budget`, and meets `obj`.
///
/// Reports the earliest uncovered time-edge (by time, then edge) first,
/// then the smallest over-budget vertex or class, then the objective.
/// Entries outside `1..=n` x `1..=tau` are an error, not a violation.
pub fn verify_timeline(
    g: &TemporalGraph,
    t: &Timeline,
    budget: &BudgetSpec,
    obj: Objective,
) -> Result<Verdict> {
    let n = g.n();
    let tau = g.tau();
    for iv in t {
        if iv.v == 0 || iv.v > n || iv.a == 0 || iv.a > iv.b || iv.b > tau {
            return Err(Error::MalformedTimeline { v: iv.v, a: iv.a, b: iv.b });
        }
    }
    budget.validate(n)?;

    // active[t-1][v-1]
    let mut active = vec![vec![false; n as usize]; tau as usize];
    for iv in t {
        for s in iv.a..=iv.b {
            active[s as usize - 1][iv.v as usize - 1] = true;
        }
    }
    for (s, e) in g.time_edges() {
        let row = &active[s as usize - 1];
        if !row[e.u as usize - 1] && !row[e.v as usize - 1] {
            return Ok(Verdict::Invalid(Violation::Uncovered { t: s, edge: e }));
        }
    }

    let mut per_vertex = vec![0usize; n as usize];
    for iv in t {
        per_vertex[iv.v as usize - 1] += 1;
    }
    match budget {
        BudgetSpec::Multicolored { classes, budgets } => {
            for (i, (c, &k)) in classes.iter().zip(budgets).enumerate() {
                let used: usize = c.iter().map(|&v| per_vertex[v as usize - 1]).sum();
                if used > k as usize {
                    return Ok(Verdict::Invalid(Violation::ClassBudget { class: i + 1, used, allowed: k }));
                }
            }
        }
        _ => {
            let caps = budget.vertex_caps(n).expect("per-vertex variant");
            for (i, (&used, &k)) in per_vertex.iter().zip(&caps).enumerate() {
                if used > k as usize {
                    return Ok(Verdict::Invalid(Violation::VertexBudget {
                        v: i as Vertex + 1,
                        used,
                        allowed: k,
                    }));
                }
            }
        }
    }

    let value = objective_value(t, obj.kind);
    if value > u64::from(obj.ell) {
        return Ok(Verdict::Invalid(Violation::Objective { kind: obj.kind, value, ell: obj.ell }));
    }
    Ok(Verdict::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tl(entries: &[(u32, u32, u32)]) -> Timeline {
        entries.iter().map(|&(v, a, b)| Interval::new(v, a, b)).collect()
    }

    #[test]
    fn single_edge_covered() {
        let g = TemporalGraph::new(2, [[(1, 2)]]).unwrap();
        let v = verify_timeline(&g, &tl(&[(1, 1, 1)]), &BudgetSpec::Uniform(1), Objective::max(0));
        assert_eq!(v, Ok(Verdict::Valid));
    }

    #[test]
    fn empty_timeline_reports_first_edge() {
        let g = TemporalGraph::new(2, [[(1, 2)]]).unwrap();
        let v = verify_timeline(&g, &Timeline::new(), &BudgetSpec::Uniform(1), Objective::max(0));
        assert_eq!(
            v,
            Ok(Verdict::Invalid(Violation::Uncovered { t: 1, edge: Edge { u: 1, v: 2 } }))
        );
    }

    #[test]
    fn earliest_violation_is_reported() {
        let g = TemporalGraph::new(3, [vec![], vec![(2, 3), (1, 2)], vec![(1, 3)]]).unwrap();
        let v = verify_timeline(&g, &Timeline::new(), &BudgetSpec::Uniform(1), Objective::max(0));
        assert_eq!(
            v,
            Ok(Verdict::Invalid(Violation::Uncovered { t: 2, edge: Edge { u: 1, v: 2 } }))
        );
    }

    #[test]
    fn malformed_entries_are_errors() {
        let g = TemporalGraph::new(2, [[(1, 2)]]).unwrap();
        for bad in [(3, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 2)] {
            assert!(matches!(
                verify_timeline(&g, &tl(&[bad]), &BudgetSpec::Uniform(1), Objective::max(0)),
                Err(Error::MalformedTimeline { .. })
            ));
        }
    }

    #[test]
    fn budget_and_objective_violations() {
        let g = TemporalGraph::new(2, [vec![(1, 2)], vec![(1, 2)]]).unwrap();
        let t = tl(&[(1, 1, 1), (1, 2, 2)]);
        assert_eq!(
            verify_timeline(&g, &t, &BudgetSpec::Uniform(1), Objective::max(0)),
            Ok(Verdict::Invalid(Violation::VertexBudget { v: 1, used: 2, allowed: 1 }))
        );
        let classes = BudgetSpec::Multicolored { classes: vec![vec![1, 2]], budgets: vec![1] };
        assert_eq!(
            verify_timeline(&g, &t, &classes, Objective::max(0)),
            Ok(Verdict::Invalid(Violation::ClassBudget { class: 1, used: 2, allowed: 1 }))
        );
        let t = tl(&[(2, 1, 2)]);
        assert_eq!(
            verify_timeline(&g, &t, &BudgetSpec::Uniform(1), Objective::sum(0)),
            Ok(Verdict::Invalid(Violation::Objective { kind: ObjectiveKind::SumLen, value: 1, ell: 0 }))
        );
    }

    #[test]
    fn objective_values() {
        assert_eq!(objective_value(&tl(&[(1, 1, 1), (2, 3, 3)]), ObjectiveKind::MaxLen), 0);
        assert_eq!(objective_value(&tl(&[(1, 2, 5), (2, 3, 3)]), ObjectiveKind::SumLen), 3);
        assert_eq!(objective_value(&Timeline::new(), ObjectiveKind::MaxLen), 0);
        assert_eq!(objective_value(&Timeline::new(), ObjectiveKind::SumLen), 0);
    }

    #[test]
    fn budget_validation() {
        assert!(BudgetSpec::NonUniform(vec![1, 2]).validate(3).is_err());
        let overlapping = BudgetSpec::Multicolored { classes: vec![vec![1, 2], vec![2]], budgets: vec![1, 1] };
        assert!(overlapping.validate(2).is_err());
        let partial = BudgetSpec::Multicolored { classes: vec![vec![1]], budgets: vec![1] };
        assert!(partial.validate(2).is_err());
    }
}
