//! File formats and the `untangle` command-line front end for the solvers in
//! [`untangle_core`].

pub mod cli;
pub mod fileio;
