//! Zero-length intervals: an exact integer feasibility search, and the
//! bridge between timelines on identical layers and `(a:b)`-colorings.
//!
//! With `ell = 0` every interval covers a single layer, so a solution is one
//! vertex cover per layer and the layer order does not matter. Grouping the
//! layers by edge set `E` with multiplicity `a(E)`, a solution is a choice
//! of counts `X[E][S]` over the vertex covers `S` of `E` with
//! `sum_S X[E][S] = a(E)` for every `E` and, for every vertex `v`,
//! `sum_E sum_{S containing v} X[E][S] <= k_v`.
//!
//! Only minimal covers are used: any cover can be shrunk to a minimal one
//! without increasing any vertex's usage.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, StaticGraph, TemporalGraph, Vertex};
use crate::timeline::{BudgetSpec, Interval, SolveOutcome, Timeline};
use crate::{Error, Result};

/// Largest vertex count for which covers are enumerated.
pub const MAX_VERTICES: u32 = 24;

/// The distinct layer edge sets with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerProfile {
    /// In order of first appearance.
    pub sets: Vec<ProfileEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub edges: Vec<Edge>,
    /// Time steps (1-based, ascending) whose layer equals `edges`.
    pub positions: Vec<u32>,
}

impl ProfileEntry {
    /// The multiplicity `a(E)`.
    pub fn count(&self) -> u32 {
        self.positions.len() as u32
    }
}

impl LayerProfile {
    pub fn of(g: &TemporalGraph) -> Self {
        let mut sets: Vec<ProfileEntry> = Vec::new();
        for (i, layer) in g.layers().iter().enumerate() {
            let t = i as u32 + 1;
            match sets.iter_mut().find(|e| e.edges == *layer) {
                Some(e) => e.positions.push(t),
                None => sets.push(ProfileEntry { edges: layer.clone(), positions: vec![t] }),
            }
        }
        LayerProfile { sets }
    }
}

/// Vertex set as a bitmask, bit `v - 1` for vertex `v`.
pub type VertexMask = u32;

/// Counts per cover for every distinct edge set, aligned with
/// [`LayerProfile::sets`]. Covers with count 0 are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverAssignment {
    pub counts: Vec<Vec<(VertexMask, u32)>>,
}

impl CoverAssignment {
    /// Number of layers assigned to covers containing `v`.
    pub fn usage(&self, v: Vertex) -> u32 {
        self.counts
            .iter()
            .flatten()
            .filter(|(s, _)| s >> (v - 1) & 1 == 1)
            .map(|(_, x)| x)
            .sum()
    }

    /// Covers the first `X[E][S_1]` appearances of `E` with `S_1`, the next
    /// `X[E][S_2]` with `S_2`, and so on, one zero-length interval per vertex
    /// per layer.
    pub fn to_timeline(&self, profile: &LayerProfile) -> Timeline {
        let mut t = Timeline::new();
        for (entry, counts) in profile.sets.iter().zip(&self.counts) {
            let mut positions = entry.positions.iter();
            for &(cover, x) in counts {
                for &pos in positions.by_ref().take(x as usize) {
                    t.extend(mask_vertices(cover).map(|v| Interval::new(v, pos, pos)));
                }
            }
        }
        t
    }
}

fn mask_vertices(mask: VertexMask) -> impl Iterator<Item = Vertex> {
    (0..32u32).filter(move |j| mask >> j & 1 == 1).map(|j| j + 1)
}

/// All inclusion-minimal vertex covers of `(1..=n, edges)`, ordered by
/// cardinality and then by mask.
pub fn minimal_vertex_covers(n: Vertex, edges: &[Edge]) -> Vec<VertexMask> {
    assert!(n <= MAX_VERTICES);
    let pairs: Vec<(VertexMask, VertexMask)> =
        edges.iter().map(|e| (1 << (e.u - 1), 1 << (e.v - 1))).collect();
    let covers = |s: VertexMask| pairs.iter().all(|&(a, b)| s & (a | b) != 0);
    let mut out: Vec<VertexMask> = (0..1u32 << n)
        .filter(|&s| covers(s))
        .filter(|&s| mask_vertices(s).all(|v| !covers(s & !(1 << (v - 1)))))
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Decides the instance with all intervals of length zero.
pub fn solve_zero(g: &TemporalGraph, budget: &BudgetSpec) -> Result<SolveOutcome> {
    Ok(match solve_zero_assignment(g, budget)? {
        Some((profile, assignment)) => SolveOutcome::Yes(assignment.to_timeline(&profile)),
        None => SolveOutcome::No,
    })
}

/// Like [`solve_zero`] but returns the feasible counts themselves.
pub fn solve_zero_assignment(
    g: &TemporalGraph,
    budget: &BudgetSpec,
) -> Result<Option<(LayerProfile, CoverAssignment)>> {
    if g.n() > MAX_VERTICES {
        return Err(Error::Refused {
            what: "zero-length search vertices",
            size: u64::from(g.n()),
            cap: u64::from(MAX_VERTICES),
        });
    }
    budget.validate(g.n())?;
    let (class_of, caps) = budget.class_view(g.n());
    let profile = LayerProfile::of(g);

    // Search order: larger multiplicity first.
    let mut order: Vec<usize> = (0..profile.sets.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(profile.sets[i].count()));

    let groups: Vec<Group> = order
        .iter()
        .map(|&i| {
            let entry = &profile.sets[i];
            let covers = minimal_vertex_covers(g.n(), &entry.edges);
            let usage: Vec<Vec<u32>> = covers
                .iter()
                .map(|&s| {
                    let mut u = vec![0u32; caps.len()];
                    for v in mask_vertices(s) {
                        u[class_of[v as usize - 1]] += 1;
                    }
                    u
                })
                .collect();
            // suffix_min[c][class]: fewest class members in any of covers[c..].
            let mut suffix_min = vec![vec![u32::MAX; caps.len()]; covers.len() + 1];
            for c in (0..covers.len()).rev() {
                for class in 0..caps.len() {
                    suffix_min[c][class] = suffix_min[c + 1][class].min(usage[c][class]);
                }
            }
            Group { count: entry.count(), covers, usage, suffix_min }
        })
        .collect();

    let mut search = Feasibility {
        left: caps,
        groups: &groups,
        counts: vec![vec![0; 0]; groups.len()],
    };
    for (gi, gr) in groups.iter().enumerate() {
        search.counts[gi] = vec![0; gr.covers.len()];
    }
    if !search.run(0, 0, groups.first().map_or(0, |gr| gr.count)) {
        return Ok(None);
    }

    let mut assignment = CoverAssignment { counts: vec![Vec::new(); profile.sets.len()] };
    for (gi, &set_idx) in order.iter().enumerate() {
        assignment.counts[set_idx] = groups[gi]
            .covers
            .iter()
            .zip(&search.counts[gi])
            .filter(|(_, &x)| x > 0)
            .map(|(&s, &x)| (s, x))
            .collect();
    }
    Ok(Some((profile, assignment)))
}

struct Group {
    count: u32,
    covers: Vec<VertexMask>,
    /// usage[c][class]: members of `class` in cover `c`.
    usage: Vec<Vec<u32>>,
    suffix_min: Vec<Vec<u32>>,
}

struct Feasibility<'a> {
    left: Vec<u32>,
    groups: &'a [Group],
    counts: Vec<Vec<u32>>,
}

impl Feasibility<'_> {
    /// Lower bound on what each class still has to spend, given that group
    /// `gi` has `rest` layers left for covers `ci..`.
    fn demand_exceeds_budget(&self, gi: usize, ci: usize, rest: u32) -> bool {
        (0..self.left.len()).any(|class| {
            let mut need = u64::from(rest) * u64::from(self.groups[gi].suffix_min[ci][class]);
            for later in &self.groups[gi + 1..] {
                need += u64::from(later.count) * u64::from(later.suffix_min[0][class]);
            }
            need > u64::from(self.left[class])
        })
    }

    fn run(&mut self, gi: usize, ci: usize, rest: u32) -> bool {
        if gi == self.groups.len() {
            return true;
        }
        let group = &self.groups[gi];
        if rest == 0 {
            let next = self.groups.get(gi + 1).map_or(0, |gr| gr.count);
            return self.run(gi + 1, 0, next);
        }
        if ci == group.covers.len() || self.demand_exceeds_budget(gi, ci, rest) {
            return false;
        }
        let usage = &group.usage[ci];
        let affordable = usage
            .iter()
            .zip(&self.left)
            .filter(|(&u, _)| u > 0)
            .map(|(&u, &l)| l / u)
            .min()
            .unwrap_or(u32::MAX)
            .min(rest);
        let last = ci + 1 == group.covers.len();
        let lowest = if last { rest } else { 0 };
        if affordable < lowest {
            return false;
        }
        for x in (lowest..=affordable).rev() {
            for (l, &u) in self.left.iter_mut().zip(usage) {
                *l -= u * x;
            }
            self.counts[gi][ci] = x;
            if self.run(gi, ci + 1, rest - x) {
                return true;
            }
            for (l, &u) in self.left.iter_mut().zip(usage) {
                *l += u * x;
            }
        }
        self.counts[gi][ci] = 0;
        false
    }
}

/// An `(a:b)`-coloring: `colors[v - 1]` is the sorted color set of `v`.
pub type Coloring = Vec<Vec<u32>>;

/// Reads a zero-length timeline on `tau` identical layers as a
/// `(tau : tau - k)`-coloring: `c(v)` is the set of time steps where `v` is
/// inactive. Vertices with fewer than `k` intervals are first padded with
/// zero-length intervals at their earliest inactive steps.
pub fn timeline_to_coloring(t: &Timeline, n: Vertex, tau: u32, k: u32) -> Result<Coloring> {
    if tau < k {
        return Err(Error::Precondition("tau must be at least k"));
    }
    let mut colors = Vec::with_capacity(n as usize);
    for v in 1..=n {
        let mut used = vec![false; tau as usize];
        let mut count = 0;
        for iv in t.intervals_of(v) {
            if iv.a != iv.b {
                return Err(Error::Precondition("coloring bridge needs zero-length intervals"));
            }
            if iv.b == 0 || iv.b > tau {
                return Err(Error::MalformedTimeline { v: iv.v, a: iv.a, b: iv.b });
            }
            used[iv.a as usize - 1] = true;
            count += 1;
        }
        if count > k {
            return Err(Error::Precondition("vertex has more than k intervals"));
        }
        for slot in used.iter_mut().filter(|u| !**u).take((k - count) as usize) {
            *slot = true;
        }
        colors.push((1..=tau).filter(|&s| !used[s as usize - 1]).collect());
    }
    if t.iter().any(|iv| iv.v == 0 || iv.v > n) {
        let iv = t.iter().find(|iv| iv.v == 0 || iv.v > n).expect("checked");
        return Err(Error::MalformedTimeline { v: iv.v, a: iv.a, b: iv.b });
    }
    Ok(colors)
}

/// The inverse map: `v` is active exactly at the steps outside `c(v)`.
pub fn coloring_to_timeline(colors: &Coloring, tau: u32, k: u32) -> Result<Timeline> {
    if tau < k {
        return Err(Error::Precondition("tau must be at least k"));
    }
    let mut t = Timeline::new();
    for (i, c) in colors.iter().enumerate() {
        if c.len() != (tau - k) as usize
            || c.iter().any(|&s| s == 0 || s > tau)
            || c.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::Precondition("each color set must be a sorted (tau - k)-subset of 1..=tau"));
        }
        let v = i as Vertex + 1;
        t.extend((1..=tau).filter(|s| c.binary_search(s).is_err()).map(|s| Interval::new(v, s, s)));
    }
    Ok(t)
}

/// `true` iff no edge joins two vertices with overlapping color sets.
pub fn is_proper_coloring(g: &StaticGraph, colors: &Coloring) -> bool {
    g.edges.iter().all(|e| {
        let (cu, cv) = (&colors[e.u as usize - 1], &colors[e.v as usize - 1]);
        cu.iter().all(|x| cv.binary_search(x).is_err())
    })
}

/// Decides `(a:b)`-colorability through `a` identical layers with `k = a - b`.
pub fn solve_ab_coloring(g: &StaticGraph, a: u32, b: u32) -> Result<Option<Coloring>> {
    if !(a >= b && b >= 1) {
        return Err(Error::Precondition("need a >= b >= 1"));
    }
    let k = a - b;
    let temporal = TemporalGraph::repeated(g, a)?;
    match solve_zero(&temporal, &BudgetSpec::Uniform(k))? {
        SolveOutcome::Yes(t) => timeline_to_coloring(&t, g.n, a, k).map(Some),
        SolveOutcome::No => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::timeline::{verify_timeline, Objective};

    #[test]
    fn profile_counts_layers() {
        let g = TemporalGraph::new(3, [vec![(1, 2)], vec![], vec![(1, 2)]]).unwrap();
        let p = LayerProfile::of(&g);
        assert_eq!(p.sets.len(), 2);
        assert_eq!(p.sets[0].positions, [1, 3]);
        assert_eq!(p.sets.iter().map(ProfileEntry::count).sum::<u32>(), 3);
    }

    #[test]
    fn minimal_covers_of_small_graphs() {
        assert_eq!(minimal_vertex_covers(3, &[]), [0]);
        let tri = StaticGraph::complete(3);
        assert_eq!(minimal_vertex_covers(3, &tri.edges), [0b011, 0b101, 0b110]);
        assert_eq!(minimal_vertex_covers(5, &StaticGraph::cycle(5).edges).len(), 5);
    }

    #[test]
    fn triangle_and_k4() {
        let tri = TemporalGraph::repeated(&StaticGraph::complete(3), 3).unwrap();
        let out = solve_zero(&tri, &BudgetSpec::Uniform(2)).unwrap();
        let w = out.witness().expect("K3 is 3-colorable");
        assert!(verify_timeline(&tri, w, &BudgetSpec::Uniform(2), Objective::max(0)).unwrap().is_valid());
        let k4 = TemporalGraph::repeated(&StaticGraph::complete(4), 3).unwrap();
        assert_eq!(solve_zero(&k4, &BudgetSpec::Uniform(2)).unwrap(), SolveOutcome::No);
    }

    #[test]
    fn single_edge_three_layers() {
        let g = TemporalGraph::new(2, [[(1, 2)], [(1, 2)], [(1, 2)]]).unwrap();
        assert_eq!(solve_zero(&g, &BudgetSpec::NonUniform(vec![1, 1])).unwrap(), SolveOutcome::No);
        assert!(solve_zero(&g, &BudgetSpec::NonUniform(vec![1, 2])).unwrap().is_yes());
    }

    #[test]
    fn constraints_hold_on_assignment() {
        let g = TemporalGraph::new(3, [vec![(1, 2)], vec![(2, 3)], vec![(1, 2)], vec![(1, 3), (2, 3)]]).unwrap();
        let budget = BudgetSpec::NonUniform(vec![1, 2, 1]);
        let (profile, x) = solve_zero_assignment(&g, &budget).unwrap().expect("feasible");
        for (entry, counts) in profile.sets.iter().zip(&x.counts) {
            assert_eq!(counts.iter().map(|c| c.1).sum::<u32>(), entry.count());
        }
        for (v, k) in [(1, 1), (2, 2), (3, 1)] {
            assert!(x.usage(v) <= k);
        }
    }

    #[test]
    fn ab_coloring_examples() {
        assert!(solve_ab_coloring(&StaticGraph::complete(3), 3, 1).unwrap().is_some());
        assert!(solve_ab_coloring(&StaticGraph::complete(4), 3, 1).unwrap().is_none());
        let c5 = StaticGraph::cycle(5);
        let colors = solve_ab_coloring(&c5, 5, 2).unwrap().expect("C5 is (5:2)-colorable");
        assert!(colors.iter().all(|c| c.len() == 2));
        assert!(is_proper_coloring(&c5, &colors));
        assert!(solve_ab_coloring(&c5, 2, 3).is_err());
    }

    #[test]
    fn triangle_bridge_is_a_three_coloring() {
        // v is inactive exactly at step v.
        let t: Timeline =
            (1..=3).flat_map(|v| (1..=3).filter(move |&s| s != v).map(move |s| Interval::new(v, s, s))).collect();
        let c = timeline_to_coloring(&t, 3, 3, 2).unwrap();
        assert_eq!(c, vec![vec![1], vec![2], vec![3]]);
        // A single interval per vertex gets padded at the earliest free step.
        let sparse: Timeline = [Interval::new(1, 3, 3)].into_iter().collect();
        assert_eq!(timeline_to_coloring(&sparse, 1, 3, 2).unwrap(), vec![vec![2]]);
        assert!(is_proper_coloring(&StaticGraph::complete(3), &c));
        let back = coloring_to_timeline(&c, 3, 2).unwrap();
        assert_eq!(timeline_to_coloring(&back, 3, 3, 2).unwrap(), c);
    }

    #[test]
    fn bridge_preconditions() {
        let long: Timeline = [Interval::new(1, 1, 2)].into_iter().collect();
        assert!(timeline_to_coloring(&long, 2, 3, 2).is_err());
        assert!(timeline_to_coloring(&Timeline::new(), 2, 1, 2).is_err());
        assert!(coloring_to_timeline(&vec![vec![1, 2]], 3, 2).is_err());
    }
}
