//! Reed-Muller-Fourier spectra of rotation symmetric multiple-valued functions.
//!
//! A p-valued function on n arguments is stored as a [`ValueVector`] of
//! length `p^n` in mixed-radix order, `x1` most significant. Functions that
//! are constant on every cyclic orbit of argument positions can be stored
//! as a [`CompactVector`] with one entry per orbit, and their RMF spectra
//! can be computed without leaving the compact domain through a
//! [`SpectrumBasis`].
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

mod counting;
mod domain;
mod error;
pub mod rmf;
mod spectrum;
pub mod symmetry;

pub use counting::{function_counts, FunctionCounts};
pub use domain::{assignment_of, index_of, parse_value_vector, Assignment, Radix, ValueVector};
pub use error::{Error, Result};
pub use rmf::{
    apply_arg_permutation, basic_matrix, rmf_transform, transform_matrix, ArgPermutation,
    RmfMatrix, DEFAULT_MATRIX_CAP,
};
pub use spectrum::{build_basis, compact_spectrum, sum_and_classify, SpectrumBasis};
pub use symmetry::{
    build_orbit_table, build_symmetric_table, classify, compress, elementary_function, expand,
    kappa, orbit_count, orbit_of, rotate, CompactKind, CompactVector, Orbit, OrbitTable,
    SymmetryClass,
};
