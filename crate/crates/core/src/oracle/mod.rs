//! Verification layer that recomputes demand and optima without the
//! solver's algebra.

mod bisect;
mod cells;
mod grid;
mod separation;
mod sim;

pub use bisect::{bisect_threshold, find_threshold, BisectError, DEFAULT_TOL};
pub use cells::{oracle_demand, TIE_TOL};
pub use grid::{grid_argmax, GridOptimum, GridSpec, DEFAULT_GRID_POINTS};
pub use separation::{check_no_separation, check_no_separation_on, SeparationReport, Witness};
pub use sim::{simulate_market, SimReport, BATCH_SIZE};
