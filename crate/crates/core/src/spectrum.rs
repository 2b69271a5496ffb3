//! RMF spectra computed entirely on compact vectors.
//!
//! Column `k` of a [`SpectrumBasis`] is the compact spectrum of the
//! elementary function of orbit `k`. By linearity the compact spectrum of
//! any rotation symmetric function is the mod-p weighted sum of columns,
//! weighted by its compact entries, and since the transform is an
//! involution the same sum maps a compact spectrum back to the function.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::symmetry::{
    build_orbit_table, compress, CompactKind, CompactVector, OrbitTable, SymmetryClass,
};
use crate::{rmf_transform, Radix};

/// Compact spectra of all elementary rotation symmetric functions for one
/// `(p, n)`, in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumBasis {
    table: OrbitTable,
    columns: Vec<CompactVector>,
}

impl SpectrumBasis {
    /// Computes every column from `table`.
    pub fn from_table(table: OrbitTable) -> Result<Self> {
        let columns = (0..table.len())
            .map(|k| SpectrumBasis::column(&table, k))
            .collect::<Result<_>>()?;
        Ok(SpectrumBasis { table, columns })
    }

    /// Compact spectrum of the elementary function of orbit `k`.
    pub fn column(table: &OrbitTable, k: usize) -> Result<CompactVector> {
        if table.kind() != CompactKind::Rotation {
            return Err(Error::domain("spectrum basis needs a rotation orbit table"));
        }
        compress(&rmf_transform(&table.elementary(k)?), table)
    }

    /// Assembles a basis from precomputed columns (e.g. read from a cache),
    /// checking their shape.
    pub fn from_columns(table: OrbitTable, columns: Vec<Vec<u32>>) -> Result<Self> {
        if table.kind() != CompactKind::Rotation {
            return Err(Error::domain("spectrum basis needs a rotation orbit table"));
        }
        if columns.len() != table.len() {
            return Err(Error::domain(format!(
                "basis needs {} columns, got {}",
                table.len(),
                columns.len()
            )));
        }
        let columns = columns
            .into_iter()
            .map(|c| CompactVector::new(table.p(), table.n(), CompactKind::Rotation, c))
            .collect::<Result<_>>()?;
        Ok(SpectrumBasis { table, columns })
    }

    /// Radix.
    pub fn p(&self) -> Radix {
        self.table.p()
    }

    /// Argument count.
    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Orbit table the columns are indexed by.
    pub fn table(&self) -> &OrbitTable {
        &self.table
    }

    /// Columns in rank order.
    pub fn columns(&self) -> &[CompactVector] {
        &self.columns
    }

    /// Row `r` across all columns.
    pub fn row(&self, r: usize) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().map(move |c| c.entries()[r])
    }
}

/// Builds the basis for `(p, n)`; requires `n > 2`.
pub fn build_basis(p: Radix, n: usize) -> Result<SpectrumBasis> {
    SpectrumBasis::from_table(build_orbit_table(p, n)?)
}

/// `sum_j c_j * basis_j mod p`. Maps a compact function to its compact
/// spectrum and a compact spectrum back to its function.
pub fn compact_spectrum(c: &CompactVector, basis: &SpectrumBasis) -> Result<CompactVector> {
    if c.kind() != CompactKind::Rotation
        || c.p() != basis.p()
        || c.n() != basis.n()
        || c.entries().len() != basis.columns.len()
    {
        return Err(Error::domain(format!(
            "compact vector (p = {}, n = {}, {}) does not match basis (p = {}, n = {})",
            c.p(),
            c.n(),
            c.kind(),
            basis.p(),
            basis.n()
        )));
    }
    let p = basis.p().get() as u64;
    let mut acc = vec![0u64; c.entries().len()];
    for (&weight, column) in c.entries().iter().zip(&basis.columns) {
        if weight == 0 {
            continue;
        }
        for (slot, &v) in acc.iter_mut().zip(column.entries()) {
            *slot = (*slot + weight as u64 * v as u64) % p;
        }
    }
    let entries = acc.into_iter().map(|v| v as u32).collect();
    Ok(CompactVector::from_raw(
        basis.p(),
        basis.n(),
        CompactKind::Rotation,
        entries,
    ))
}

/// Entrywise mod-p sum of two rotation symmetric functions together with
/// the symmetry class of the result.
pub fn sum_and_classify(
    a: &CompactVector,
    b: &CompactVector,
    table: &OrbitTable,
) -> Result<(CompactVector, SymmetryClass)> {
    if a.kind() != CompactKind::Rotation {
        return Err(Error::domain("sum_and_classify expects rotation compact vectors"));
    }
    let sum = a.add(b)?;
    let class = table.classify_compact(&sum)?;
    Ok((sum, class))
}
