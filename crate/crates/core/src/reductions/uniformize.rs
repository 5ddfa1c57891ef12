//! Removing budget structure with `ell = 1`: class budgets become
//! per-vertex budgets, and per-vertex budgets become a uniform one, by
//! appending gadget layers after the original lifetime.

use alloc::vec;
use alloc::vec::Vec;

use super::Instance;
use crate::graph::{TemporalGraph, Vertex};
use crate::timeline::{BudgetSpec, Interval, Objective, Timeline};
use crate::{Error, Result};

fn clip_to(tau: u32, n: Vertex, t: &Timeline) -> Timeline {
    t.iter()
        .filter(|iv| iv.v <= n && iv.a <= tau)
        .map(|iv| Interval::new(iv.v, iv.a, iv.b.min(tau)))
        .collect()
}

fn layers_of(g: &TemporalGraph) -> Vec<Vec<(Vertex, Vertex)>> {
    g.layers().iter().map(|l| l.iter().map(|e| (e.u, e.v)).collect()).collect()
}

fn multicolored_parts(budget: &BudgetSpec, n: Vertex) -> Result<(&[Vec<Vertex>], &[u32])> {
    budget.validate(n)?;
    match budget {
        BudgetSpec::Multicolored { classes, budgets } => Ok((classes, budgets)),
        _ => Err(Error::Precondition("expected multicolored budgets")),
    }
}

/// Appends `2 k_i` layers per class `i`, each holding the clique on that
/// class, and gives every vertex its class budget.
pub fn reduce_multicolored_to_nonuniform(g: &TemporalGraph, budget: &BudgetSpec) -> Result<Instance> {
    let (classes, budgets) = multicolored_parts(budget, g.n())?;
    let mut layers = layers_of(g);
    for (class, &k) in classes.iter().zip(budgets) {
        let clique: Vec<(Vertex, Vertex)> = class
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| class[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        layers.extend((0..2 * k).map(|_| clique.clone()));
    }
    let (class_of, caps) = budget.class_view(g.n());
    Ok(Instance {
        graph: TemporalGraph::new(g.n(), layers)?,
        budget: BudgetSpec::NonUniform(class_of.iter().map(|&c| caps[c]).collect()),
        objective: Objective::max(1),
    })
}

/// Extends a multicolored witness into the clique layers. Slot `a` of class
/// `i` rests one vertex `f_i(a)` during the pair of layers `2a-1, 2a`; each
/// vertex rests at least as often as it already spent intervals.
pub fn multicolored_to_nonuniform_witness(g: &TemporalGraph, budget: &BudgetSpec, t: &Timeline) -> Result<Timeline> {
    let (classes, budgets) = multicolored_parts(budget, g.n())?;
    let mut out = t.clone();
    let mut start = g.tau() + 1;
    for (class, &k) in classes.iter().zip(budgets) {
        let mut rest: Vec<Vertex> = Vec::with_capacity(k as usize);
        for &v in class {
            rest.extend((0..t.count_for(v)).map(|_| v));
        }
        if rest.len() > k as usize {
            return Err(Error::Precondition("witness exceeds a class budget"));
        }
        if let Some(&first) = class.first() {
            rest.resize(k as usize, first);
        }
        for (a, &resting) in rest.iter().enumerate() {
            let from = start + 2 * a as u32;
            for &v in class.iter().filter(|&&v| v != resting) {
                out.insert(Interval::new(v, from, from + 1));
            }
        }
        start += 2 * k;
    }
    Ok(out)
}

/// Restricts a witness of the extended instance to the original lifetime.
pub fn nonuniform_to_multicolored_witness(tau: u32, n: Vertex, t: &Timeline) -> Timeline {
    clip_to(tau, n, t)
}

/// Adds `u1 = n + 1` and `u2 = n + 2` with the uniform budget
/// `k = max k_v`. The first `4k` appended layers hold the edge `{u1, u2}`,
/// which uses up all of `u1`'s budget; then each `v_i` gets a block of `2k`
/// layers whose first `2 (k - k_v)` hold `{v_i, u1}`.
pub fn reduce_nonuniform_to_uniform(g: &TemporalGraph, budget: &BudgetSpec) -> Result<Instance> {
    let caps = budget.require_vertex_caps(g.n(), "nonuniform to uniform reduction")?;
    let n = g.n();
    let (u1, u2) = (n + 1, n + 2);
    let k = caps.iter().copied().max().unwrap_or(0);
    let mut layers = layers_of(g);
    layers.extend((0..4 * k).map(|_| vec![(u1, u2)]));
    for (i, &kv) in caps.iter().enumerate() {
        let v = i as Vertex + 1;
        layers.extend((0..2 * k).map(|j| if j < 2 * (k - kv) { vec![(v, u1)] } else { Vec::new() }));
    }
    Ok(Instance {
        graph: TemporalGraph::new(n + 2, layers)?,
        budget: BudgetSpec::Uniform(k),
        objective: Objective::max(1),
    })
}

/// Adds the gadget intervals: `u1` then `u2` over the `{u1, u2}` layers, and
/// `k - k_v` pairs for `v` in its own block.
pub fn nonuniform_to_uniform_witness(g: &TemporalGraph, budget: &BudgetSpec, t: &Timeline) -> Result<Timeline> {
    let caps = budget.require_vertex_caps(g.n(), "nonuniform to uniform reduction")?;
    let (n, tau) = (g.n(), g.tau());
    let (u1, u2) = (n + 1, n + 2);
    let k = caps.iter().copied().max().unwrap_or(0);
    let mut out = t.clone();
    for a in 1..=k {
        out.insert(Interval::new(u1, tau + 2 * a - 1, tau + 2 * a));
        out.insert(Interval::new(u2, tau + 2 * k + 2 * a - 1, tau + 2 * k + 2 * a));
    }
    for (i, &kv) in caps.iter().enumerate() {
        let base = tau + 2 * k * (i as u32 + 2);
        for a in 1..=k - kv {
            out.insert(Interval::new(i as Vertex + 1, base + 2 * a - 1, base + 2 * a));
        }
    }
    Ok(out)
}

/// Drops `u1`, `u2` and everything after the original lifetime.
pub fn uniform_to_nonuniform_witness(tau: u32, n: Vertex, t: &Timeline) -> Timeline {
    clip_to(tau, n, t)
}
