use alloc::format;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::symmetry::{kappa, orbit_count};
use crate::Radix;

/// Sizes of the symmetric function classes for one `(p, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionCounts {
    /// Cyclic orbits of `(Z_p)^n`.
    pub orbits: u64,
    /// Multiset classes, `kappa(p, n)`.
    pub kappa: u64,
    /// Symmetric functions, `p^kappa`.
    pub symmetric: BigUint,
    /// Functions constant on every cyclic orbit, symmetric ones included:
    /// `p^orbits`.
    pub rotation_inclusive: BigUint,
    /// Rotation symmetric functions that are not symmetric.
    pub rotation_strict: BigUint,
}

/// Exact counts; requires `n > 2`.
pub fn function_counts(p: Radix, n: usize) -> Result<FunctionCounts> {
    let orbits = orbit_count(p, n)?;
    let kappa = kappa(p, n)?;
    let base = BigUint::from(p.get());
    let symmetric = pow(&base, kappa, p, n)?;
    let rotation_inclusive = pow(&base, orbits, p, n)?;
    let rotation_strict = &rotation_inclusive - &symmetric;
    Ok(FunctionCounts {
        orbits,
        kappa,
        symmetric,
        rotation_inclusive,
        rotation_strict,
    })
}

fn pow(base: &BigUint, exp: u64, p: Radix, n: usize) -> Result<BigUint> {
    let exp = u32::try_from(exp)
        .map_err(|_| Error::domain(format!("function count for p = {p}, n = {n} is too large")))?;
    Ok(base.pow(exp))
}
