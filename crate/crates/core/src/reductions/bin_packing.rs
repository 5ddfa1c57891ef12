use alloc::vec;
use alloc::vec::Vec;

use super::Instance;
use crate::graph::{TemporalGraph, Vertex};
use crate::timeline::{BudgetSpec, Interval, Objective, Timeline};
use crate::{Error, Result};

/// Default bound on item sizes; sizes are unary in the construction, so the
/// lifetime grows with their sum.
pub const DEFAULT_SIZE_CAP: u32 = 20;

/// Unary bin packing: can `sizes` be split into `beta` bins of capacity
/// `capacity` each?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinPackingInstance {
    pub sizes: Vec<u32>,
    pub beta: u32,
    pub capacity: u32,
}

impl BinPackingInstance {
    pub fn total(&self) -> u64 {
        self.sizes.iter().map(|&s| u64::from(s)).sum()
    }

    /// Rejects zero sizes, sizes above `size_cap`, and an empty bin set.
    pub fn validate(&self, size_cap: u32) -> Result<()> {
        if self.beta == 0 {
            return Err(Error::Precondition("bin packing needs at least one bin"));
        }
        if self.sizes.is_empty() {
            return Err(Error::Precondition("bin packing needs at least one item"));
        }
        if self.sizes.iter().any(|&s| s == 0) {
            return Err(Error::Precondition("item sizes must be positive"));
        }
        if let Some(&s) = self.sizes.iter().find(|&&s| s > size_cap) {
            return Err(Error::Refused { what: "item size", size: u64::from(s), cap: u64::from(size_cap) });
        }
        Ok(())
    }

    /// Pads with unit items until the total equals `beta * capacity`. `None`
    /// for trivially infeasible input: the items exceed the total room, or
    /// one item exceeds a bin.
    pub fn normalized(&self) -> Option<Self> {
        let room = u64::from(self.beta) * u64::from(self.capacity);
        let total = self.total();
        if total > room || self.sizes.iter().any(|&s| s > self.capacity) {
            return None;
        }
        let mut out = self.clone();
        out.sizes.extend((total..room).map(|_| 1));
        Some(out)
    }

    fn is_tight(&self) -> bool {
        self.total() == u64::from(self.beta) * u64::from(self.capacity)
    }

    /// First layer of each item's block, 1-based.
    fn starts(&self) -> Vec<u32> {
        let mut t = 1;
        self.sizes
            .iter()
            .map(|&s| {
                let start = t;
                t += 2 * s;
                start
            })
            .collect()
    }

    fn u(&self, j: u32) -> Vertex {
        j
    }

    fn v(&self, j: u32) -> Vertex {
        self.beta + j
    }
}

/// Builds the multicolored instance with `ell = 1`. Vertices `1..=beta` are
/// the bin vertices `u_j`, `beta+1..=2*beta` their partners `v_j`. Classes
/// are `{u_1}, ..., {u_beta}` with budget `S - B` each and one class of all
/// `v_j` with budget `S - m`.
///
/// Item `i` owns `2 s_i` consecutive layers: the `u` clique in each, plus
/// the matching `{u_j, v_j}` on all but the first and last.
///
/// The instance must already be [normalized](BinPackingInstance::normalized).
pub fn reduce_binpacking_to_multicolored(bp: &BinPackingInstance) -> Result<Instance> {
    bp.validate(u32::MAX)?;
    if !bp.is_tight() {
        return Err(Error::Precondition("bin packing instance is not normalized"));
    }
    let s = u32::try_from(bp.total()).map_err(|_| Error::Precondition("total size too large"))?;
    let m = bp.sizes.len() as u32;
    let beta = bp.beta;
    let clique: Vec<(Vertex, Vertex)> =
        (1..=beta).flat_map(|a| (a + 1..=beta).map(move |b| (bp.u(a), bp.u(b)))).collect();
    let mut matched = clique.clone();
    matched.extend((1..=beta).map(|j| (bp.u(j), bp.v(j))));
    let mut layers = Vec::with_capacity(2 * s as usize);
    for &size in &bp.sizes {
        for t in 0..2 * size {
            layers.push(if t == 0 || t == 2 * size - 1 { clique.clone() } else { matched.clone() });
        }
    }
    let mut classes: Vec<Vec<Vertex>> = (1..=beta).map(|j| vec![bp.u(j)]).collect();
    classes.push((1..=beta).map(|j| bp.v(j)).collect());
    let mut budgets = vec![s - bp.capacity; beta as usize];
    budgets.push(s - m);
    Ok(Instance {
        graph: TemporalGraph::new(2 * beta, layers)?,
        budget: BudgetSpec::Multicolored { classes, budgets },
        objective: Objective::max(1),
    })
}

/// `bins[i]` is the 1-based bin of item `i`. Inside item `i`'s block the bin
/// vertex `u_b` rests on even offsets while the others cover them, and
/// `v_b` covers odd offsets.
pub fn packing_to_timeline(bp: &BinPackingInstance, bins: &[u32]) -> Result<Timeline> {
    if bins.len() != bp.sizes.len() || bins.iter().any(|&b| b == 0 || b > bp.beta) {
        return Err(Error::Precondition("bin assignment does not match the instance"));
    }
    let mut t = Timeline::new();
    for ((&size, start), &b) in bp.sizes.iter().zip(bp.starts()).zip(bins) {
        for a in 0..size {
            for j in (1..=bp.beta).filter(|&j| j != b) {
                t.insert(Interval::new(bp.u(j), start + 2 * a, start + 2 * a + 1));
            }
        }
        for a in 0..size.saturating_sub(1) {
            t.insert(Interval::new(bp.v(b), start + 2 * a + 1, start + 2 * a + 2));
        }
    }
    Ok(t)
}

/// Each item goes to the one bin vertex inactive at the first layer of its
/// block.
pub fn timeline_to_packing(bp: &BinPackingInstance, t: &Timeline) -> Result<Vec<u32>> {
    bp.starts()
        .into_iter()
        .map(|start| {
            let mut idle = (1..=bp.beta).filter(|&j| !t.is_active(bp.u(j), start));
            match (idle.next(), idle.next()) {
                (Some(j), None) => Ok(j),
                _ => Err(Error::Precondition("timeline leaves no single idle bin vertex at an item start")),
            }
        })
        .collect()
}

/// Exhaustive assignment search, largest items first.
pub fn solve_bin_packing_brute(bp: &BinPackingInstance) -> Option<Vec<u32>> {
    let mut order: Vec<usize> = (0..bp.sizes.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(bp.sizes[i]));
    let mut load = vec![0u64; bp.beta as usize];
    let mut bins = vec![0u32; bp.sizes.len()];
    fn go(bp: &BinPackingInstance, order: &[usize], load: &mut [u64], bins: &mut [u32]) -> bool {
        let Some((&i, rest)) = order.split_first() else { return true };
        let size = u64::from(bp.sizes[i]);
        for j in 0..load.len() {
            // bins with equal load are interchangeable
            if load[j] + size > u64::from(bp.capacity) || load[..j].contains(&load[j]) {
                continue;
            }
            load[j] += size;
            bins[i] = j as u32 + 1;
            if go(bp, rest, load, bins) {
                return true;
            }
            load[j] -= size;
        }
        false
    }
    go(bp, &order, &mut load, &mut bins).then_some(bins)
}
