//! Closed-form ceilings for sectional-category-type invariants of spaces whose universal cover
//! is `k`-connected.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{name} needs non-negative arguments, got dim = {dim}, k = {k}")]
    Negative { name: &'static str, dim: i64, k: i64 },
    #[error("tc_ceiling_bound needs k ≥ 1 (every universal cover is 1-connected), got k = {0}")]
    ZeroConnectivity(i64),
}

fn ceil_div_floored(num: i64, den: i64) -> u64 {
    if num <= 0 {
        0
    } else {
        (num as u64).div_ceil(den as u64)
    }
}

/// `⌈(dim − k)/(k+1)⌉`, floored at 0.
pub fn secat_tilde_bound(dim: i64, k: i64) -> Result<u64, FormulaError> {
    if dim < 0 || k < 0 {
        return Err(FormulaError::Negative { name: "secat_tilde_bound", dim, k });
    }
    Ok(ceil_div_floored(dim - k, k + 1))
}

/// `⌈(2·dim − k)/(k+1)⌉`, floored at 0.
pub fn tc_ceiling_bound(dim: i64, k: i64) -> Result<u64, FormulaError> {
    if dim < 0 || k < 0 {
        return Err(FormulaError::Negative { name: "tc_ceiling_bound", dim, k });
    }
    if k == 0 {
        return Err(FormulaError::ZeroConnectivity(k));
    }
    Ok(ceil_div_floored(2 * dim - k, k + 1))
}
