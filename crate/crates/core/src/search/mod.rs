//! Exhaustive search and region enumeration.

pub mod dfs;
pub mod region;

pub use dfs::{dfs_realize, SearchOutcome, SearchTask};
pub use region::{enumerate_region, sweep_support, CoverageReport, Rule, SweepReport};
