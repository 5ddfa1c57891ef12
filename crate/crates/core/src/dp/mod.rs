//! Layer-by-layer dynamic programs for both objectives.
//!
//! Both tables are filled forward: every true entry at layer `i - 1` stamps
//! its successors at layer `i`. Only the reached entries of one layer are
//! resident at a time; each reached entry is logged with one predecessor to
//! a per-layer journal, which is what witness reconstruction walks back.

mod max;
mod sum;

use alloc::vec::Vec;

pub use self::max::{solve_max_dp, solve_max_dp_capped};
pub use self::sum::{solve_sum_dp, solve_sum_dp_capped};

/// Default cap on the estimated number of table cells.
pub const DEFAULT_CELL_CAP: u64 = 1 << 32;

/// Mixed-radix digits for the per-vertex interval counters.
#[derive(Debug, Clone)]
struct CounterRadix {
    caps: Vec<u32>,
    mul: Vec<u64>,
    size: u64,
}

impl CounterRadix {
    fn new(caps: &[u32]) -> Option<Self> {
        let mut mul = Vec::with_capacity(caps.len());
        let mut size: u64 = 1;
        for &c in caps {
            mul.push(size);
            size = size.checked_mul(u64::from(c) + 1)?;
        }
        Some(CounterRadix { caps: caps.to_vec(), mul, size })
    }

    #[inline]
    fn digit(&self, packed: u64, j: usize) -> u32 {
        ((packed / self.mul[j]) % (u64::from(self.caps[j]) + 1)) as u32
    }

    fn full(&self) -> u64 {
        self.caps.iter().zip(&self.mul).map(|(&c, &m)| u64::from(c) * m).sum()
    }
}

/// One layer's reached states, each with the predecessor that first reached it.
#[derive(Debug, Default)]
struct Journal {
    layers: Vec<Vec<(u64, u64)>>,
}

impl Journal {
    /// Sorts and deduplicates `stamps`, keeping the smallest predecessor per
    /// state, appends them as the next layer, and returns the reached states.
    fn push_layer(&mut self, mut stamps: Vec<(u64, u64)>) -> Vec<u64> {
        stamps.sort_unstable();
        stamps.dedup_by_key(|s| s.0);
        let states = stamps.iter().map(|s| s.0).collect();
        self.layers.push(stamps);
        states
    }

    fn last(&self) -> &[(u64, u64)] {
        self.layers.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// States from the first layer to the last, ending in `end`.
    fn trace(&self, end: u64) -> Vec<u64> {
        let mut path = Vec::with_capacity(self.layers.len());
        let mut cur = end;
        for layer in self.layers.iter().rev() {
            path.push(cur);
            let pos = layer.binary_search_by_key(&cur, |s| s.0).expect("journaled state");
            cur = layer[pos].1;
        }
        path.reverse();
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix_digits() {
        let r = CounterRadix::new(&[2, 1, 3]).unwrap();
        assert_eq!(r.size, 3 * 2 * 4);
        let packed = 2 + 3 + 6 * 3;
        assert_eq!(r.digit(packed, 0), 2);
        assert_eq!(r.digit(packed, 1), 1);
        assert_eq!(r.digit(packed, 2), 3);
        assert_eq!(r.full(), packed);
    }

    #[test]
    fn journal_keeps_smallest_predecessor() {
        let mut j = Journal::default();
        j.push_layer(alloc::vec![(5, u64::MAX), (7, u64::MAX)]);
        let reached = j.push_layer(alloc::vec![(3, 7), (3, 5), (1, 5)]);
        assert_eq!(reached, [1, 3]);
        assert_eq!(j.trace(3), [5, 3]);
    }
}
