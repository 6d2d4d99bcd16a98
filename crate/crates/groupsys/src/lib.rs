//! Group systems on finite time windows: generator bases, generator groups,
//! elementary groups, normal chains and elementary systems.
//!
//! The crate is organised bottom-up. [`group`] provides explicit finite group
//! arithmetic. [`system`] represents a group system on a window and extracts a
//! generator basis. [`generator`] builds the generator group and its
//! elementary groups. [`chain`] computes paired sequences, filling sequences
//! and normal chains. [`elementary`] extracts, verifies, reassembles and
//! constructs elementary systems. [`cli`] implements the `groupsys` binary.

pub mod chain;
pub mod cli;
pub mod elementary;
pub mod error;
pub mod generator;
pub mod group;
pub mod index;
pub mod system;
mod text;

pub use error::{Error, Result};

/// Size limits applied by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest number of members a group system may have.
    pub member_cap: usize,
    /// Largest group order accepted by extension enumeration.
    pub order_cap: usize,
    /// Largest number of fill orderings enumerated for block codes.
    pub ordering_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            member_cap: 1 << 16,
            order_cap: 64,
            ordering_cap: 720,
        }
    }
}
