//! Size guards for the exhaustive enumerators.
//!
//! `KTRI_GUARD=<N>` replaces the cell and tuple limits with `N`;
//! `KTRI_GUARD=none` lifts every limit except the hard 64-cell cap of
//! the bitmask enumerator.

use crate::error::{Error, Result};

/// Hard cap imposed by the `u64` cell masks used in brute-force enumeration.
pub const MAX_BITMASK_CELLS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    /// Maximum number of staircase cells for brute-force enumeration.
    pub max_cells: usize,
    /// Maximum `m * k` for tuple enumeration.
    pub max_tuple_size: usize,
    /// Maximum number of triangulations produced by tree enumeration.
    pub max_tree_count: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_cells: 40,
            max_tuple_size: 40,
            max_tree_count: 1_000_000,
        }
    }
}

impl Guard {
    pub fn unlimited() -> Self {
        Guard {
            max_cells: MAX_BITMASK_CELLS,
            max_tuple_size: usize::MAX,
            max_tree_count: u64::MAX,
        }
    }

    /// Reads `KTRI_GUARD`; malformed values fall back to the defaults.
    pub fn from_env() -> Self {
        match std::env::var("KTRI_GUARD") {
            Ok(v) => Self::from_setting(&v).unwrap_or_default(),
            Err(_) => Guard::default(),
        }
    }

    pub fn from_setting(value: &str) -> Option<Self> {
        let value = value.trim();
        if value.eq_ignore_ascii_case("none") {
            return Some(Guard::unlimited());
        }
        let limit: usize = value.parse().ok()?;
        Some(Guard {
            max_cells: limit.min(MAX_BITMASK_CELLS),
            max_tuple_size: limit,
            ..Guard::default()
        })
    }

    pub(crate) fn check(what: &'static str, size: u64, limit: u64) -> Result<()> {
        if size > limit {
            Err(Error::GuardExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}
