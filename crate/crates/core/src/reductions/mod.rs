//! Instance constructions between untangling and related problems, with
//! witness maps in both directions where they exist.
//!
//! Small brute-force deciders for the source problems live next to each
//! construction so both sides of a reduction can be checked independently.

mod bin_packing;
mod oct;
mod random;
mod two_sat;
mod uniformize;

pub use self::bin_packing::{
    packing_to_timeline, reduce_binpacking_to_multicolored, solve_bin_packing_brute, timeline_to_packing,
    BinPackingInstance, DEFAULT_SIZE_CAP,
};
pub use self::oct::{oct_to_timeline, reduce_oct_to_sum, solve_oct_brute, timeline_to_oct};
pub use self::random::generate_random;
pub use self::two_sat::{
    almost2sat_to_timeline, reduce_sum_tau2_to_almost2sat, solve_almost2sat_brute, tau2_trivial_answer,
    timeline_to_almost2sat, Clause, Literal, TwoCnfInstance, MAX_DELETIONS, MAX_VARIABLES,
};
pub use self::uniformize::{
    multicolored_to_nonuniform_witness, nonuniform_to_multicolored_witness, nonuniform_to_uniform_witness,
    reduce_multicolored_to_nonuniform, reduce_nonuniform_to_uniform, uniform_to_nonuniform_witness,
};

use crate::graph::TemporalGraph;
use crate::timeline::{BudgetSpec, Objective};

/// A complete untangling instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: TemporalGraph,
    pub budget: BudgetSpec,
    pub objective: Objective,
}
