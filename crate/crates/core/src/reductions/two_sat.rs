use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{TemporalGraph, Vertex};
use crate::timeline::{Interval, Timeline};
use crate::{Error, Result};

/// Largest deletion budget the brute-force decider accepts.
pub const MAX_DELETIONS: u32 = 3;
/// Largest variable count the brute-force decider accepts.
pub const MAX_VARIABLES: u32 = 12;

/// Variable `x^v_i` for vertex `v` and layer `i` in `{1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub v: Vertex,
    pub layer: u8,
    pub positive: bool,
}

impl Literal {
    fn index(&self) -> usize {
        2 * (self.v as usize - 1) + (self.layer as usize - 1)
    }

    fn holds(&self, assignment: &[bool]) -> bool {
        assignment[self.index()] == self.positive
    }
}

pub type Clause = [Literal; 2];

/// A 2-CNF formula (duplicates allowed) with a clause deletion budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCnfInstance {
    /// Vertices of the source graph; the formula has `2 * n` variables.
    pub n: Vertex,
    pub clauses: Vec<Clause>,
    pub deletions: u32,
}

impl TwoCnfInstance {
    pub fn num_variables(&self) -> u32 {
        2 * self.n
    }

    fn satisfied(&self, clause: &Clause, assignment: &[bool]) -> bool {
        clause.iter().any(|l| l.holds(assignment))
    }
}

/// With two layers, `k = 0` is a yes-instance iff there are no edges and
/// `k >= 2` always is (every vertex takes both single steps). Only `k = 1`
/// needs the formula.
pub fn tau2_trivial_answer(g: &TemporalGraph, k: u32) -> Option<bool> {
    match k {
        0 => Some(g.is_edgeless()),
        1 => None,
        _ => Some(true),
    }
}

/// Two-layer sum instance with `k = 1` to Almost 2-SAT: `ell + 1` copies of
/// `(x^u_i or x^v_i)` per time-edge and one `(not x^v_1 or not x^v_2)` per
/// vertex, with `ell` deletions allowed.
pub fn reduce_sum_tau2_to_almost2sat(g: &TemporalGraph, ell: u32) -> Result<TwoCnfInstance> {
    if g.tau() != 2 {
        return Err(Error::Precondition("Almost 2-SAT reduction needs exactly two layers"));
    }
    let mut clauses = Vec::new();
    for (t, e) in g.time_edges() {
        let lit = |v| Literal { v, layer: t as u8, positive: true };
        for _ in 0..=ell {
            clauses.push([lit(e.u), lit(e.v)]);
        }
    }
    for v in g.vertices() {
        clauses.push([
            Literal { v, layer: 1, positive: false },
            Literal { v, layer: 2, positive: false },
        ]);
    }
    Ok(TwoCnfInstance { n: g.n(), clauses, deletions: ell })
}

/// Finds an assignment violating at most `deletions` clauses; the violated
/// clauses (by index) are the ones deleted.
pub fn solve_almost2sat_brute(inst: &TwoCnfInstance) -> Result<Option<(Vec<usize>, Vec<bool>)>> {
    if inst.deletions > MAX_DELETIONS {
        return Err(Error::Refused {
            what: "Almost 2-SAT deletions",
            size: u64::from(inst.deletions),
            cap: u64::from(MAX_DELETIONS),
        });
    }
    let vars = inst.num_variables();
    if vars > MAX_VARIABLES {
        return Err(Error::Refused { what: "Almost 2-SAT variables", size: u64::from(vars), cap: u64::from(MAX_VARIABLES) });
    }
    for bits in 0u32..1 << vars {
        let assignment: Vec<bool> = (0..vars).map(|j| bits >> j & 1 == 1).collect();
        let violated: Vec<usize> = inst
            .clauses
            .iter()
            .enumerate()
            .filter(|(_, c)| !inst.satisfied(c, &assignment))
            .map(|(i, _)| i)
            .collect();
        if violated.len() <= inst.deletions as usize {
            return Ok(Some((violated, assignment)));
        }
    }
    Ok(None)
}

fn is_vertex_clause(c: &Clause) -> bool {
    !c[0].positive && !c[1].positive && c[0].v == c[1].v
}

/// Vertices whose vertex clause was deleted take `(v, 1, 2)`; every other
/// vertex takes `(v, i, i)` for each true `x^v_i`.
///
/// A deleted edge clause has `ell` more copies that the assignment satisfies,
/// so `deleted` only matters through its vertex clauses.
pub fn almost2sat_to_timeline(inst: &TwoCnfInstance, deleted: &[usize], assignment: &[bool]) -> Timeline {
    let mut long = vec![false; inst.n as usize];
    for &i in deleted {
        let c = &inst.clauses[i];
        if is_vertex_clause(c) {
            long[c[0].v as usize - 1] = true;
        }
    }
    let mut t = Timeline::new();
    for v in 1..=inst.n {
        if long[v as usize - 1] {
            t.insert(Interval::new(v, 1, 2));
            continue;
        }
        for layer in 1..=2u32 {
            if assignment[2 * (v as usize - 1) + (layer as usize - 1)] {
                t.insert(Interval::new(v, layer, layer));
            }
        }
    }
    t
}

/// Deletes the vertex clauses of vertices holding `(v, 1, 2)`; `x^v_i` is
/// true iff `v` is active at layer `i`.
pub fn timeline_to_almost2sat(inst: &TwoCnfInstance, t: &Timeline) -> (Vec<usize>, Vec<bool>) {
    let assignment: Vec<bool> = (0..inst.num_variables())
        .map(|j| t.is_active(j / 2 + 1, j % 2 + 1))
        .collect();
    let deleted = inst
        .clauses
        .iter()
        .enumerate()
        .filter(|(_, c)| is_vertex_clause(c) && t.contains(&Interval::new(c[0].v, 1, 2)))
        .map(|(i, _)| i)
        .collect();
    (deleted, assignment)
}
