use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Instance;
use crate::graph::{StaticGraph, TemporalGraph, Vertex};
use crate::timeline::{BudgetSpec, Interval, Objective, Timeline};
use crate::{Error, Result};

/// Odd cycle transversal `(G, s)` to two copies of `G` with `k = 1` and the
/// sum bound `ell = s`.
pub fn reduce_oct_to_sum(g: &StaticGraph, s: u32) -> Instance {
    Instance {
        graph: TemporalGraph::repeated(g, 2).expect("static graph is valid"),
        budget: BudgetSpec::Uniform(1),
        objective: Objective::sum(s),
    }
}

/// 2-coloring of `g` minus `removed`, as `side[v - 1]`; `None` if not bipartite.
fn two_color(g: &StaticGraph, removed: &[bool]) -> Option<Vec<u8>> {
    let n = g.n as usize;
    let mut adj = vec![Vec::new(); n];
    for e in &g.edges {
        if !removed[e.u as usize - 1] && !removed[e.v as usize - 1] {
            adj[e.u as usize - 1].push(e.v as usize - 1);
            adj[e.v as usize - 1].push(e.u as usize - 1);
        }
    }
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if removed[root] || side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// A transversal `x` becomes `(v, 1, 2)` for `v` in `x`, and each side of
/// the bipartite remainder covers one of the two layers.
pub fn oct_to_timeline(g: &StaticGraph, x: &[Vertex]) -> Result<Timeline> {
    let mut removed = vec![false; g.n as usize];
    for &v in x {
        if v == 0 || v > g.n {
            return Err(Error::Precondition("transversal vertex out of range"));
        }
        removed[v as usize - 1] = true;
    }
    let side = two_color(g, &removed).ok_or(Error::Precondition("graph minus the transversal is not bipartite"))?;
    Ok((1..=g.n)
        .map(|v| match removed[v as usize - 1] {
            true => Interval::new(v, 1, 2),
            false => {
                let t = u32::from(side[v as usize - 1]) + 1;
                Interval::new(v, t, t)
            }
        })
        .collect())
}

/// Vertices holding the interval `(v, 1, 2)`.
pub fn timeline_to_oct(t: &Timeline) -> Vec<Vertex> {
    t.iter().filter(|iv| iv.a == 1 && iv.b == 2).map(|iv| iv.v).collect()
}

/// Smallest odd cycle transversal of size at most `s`, by subset enumeration.
pub fn solve_oct_brute(g: &StaticGraph, s: u32) -> Option<Vec<Vertex>> {
    let n = g.n;
    assert!(n <= 20, "brute-force OCT is for small graphs");
    let mut subsets: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() <= s).collect();
    subsets.sort_by_key(|m| (m.count_ones(), *m));
    subsets.into_iter().find_map(|m| {
        let removed: Vec<bool> = (0..n).map(|j| m >> j & 1 == 1).collect();
        two_color(g, &removed).map(|_| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
    })
}
