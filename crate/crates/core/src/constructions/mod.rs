//! Explicit constructions of linear realizations, the fauxset substitution
//! machinery and a dispatcher that picks whichever construction applies.

mod certificate;
pub mod dispatch;
pub mod grid;
pub mod library;
pub mod multiple_tx;
pub mod near_bound;
pub mod odd_even;
pub mod omega;
pub mod perfect;
pub mod shared;
pub mod stretch;
pub mod substitute;

pub use certificate::{Certificate, Kind, Realization};
pub use dispatch::{construct_any, Verdict};
pub use grid::{guided_sweep, Sweep};
pub use multiple_tx::multiple_tx;
pub use near_bound::near_bound;
pub use odd_even::odd_x_even_y;
pub use omega::{omega_realization, omega_value, OmegaCase, Pattern};
pub use perfect::{perfect_even_x, PerfectVariant};
pub use shared::{odd_x, shared_fauxset, SharedSplit};
pub use stretch::{stretch_y, stretch_with_surplus};
pub use substitute::{substitute_fauxset, SubstitutionKind};
