//! Brute-force ground truth over small prime fields.
//!
//! Every function here returns an exact count or a hard error. Enumeration
//! sizes are checked against a budget before any work starts.

mod fibered;
mod orbit;
mod sets;
mod zp;

pub use fibered::count_divisor_intersection;
pub use orbit::{orbit_enumerate, OrbitKind};
pub use sets::{
    composition_set, exhaustive_decomposables, in_sequence_set, intersection_set, oracle_count_d, oracle_count_union,
    union_by_inclusion_exclusion, union_literal, PolySet,
};

use crate::ffpoly::PrimeField;
use crate::{Error, Result};

/// Default cap on enumerated compositions or candidates.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

fn check_tame(n: usize, field: PrimeField) -> Result<()> {
    if n as u64 % field.p() as u64 == 0 {
        return Err(Error::WildCharacteristic {
            p: field.p() as u64,
            n: n as u64,
        });
    }
    Ok(())
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn pow_u128(p: u32, k: usize) -> u128 {
    (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}
