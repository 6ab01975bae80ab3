//! Braid groups, mixed braids, closed-braid links and their invariants, a
//! bounded census of closed braids, and a numerical check of a Morse-Smale
//! model flow.

pub mod braid;
pub mod census;
pub mod closure;
pub mod dynamics;
pub mod error;
pub mod mixed;
pub mod quandle;

pub use error::{Error, Result};
