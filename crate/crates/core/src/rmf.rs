//! The Reed-Muller-Fourier transform over `Z_p`.
//!
//! The basic `p x p` matrix has entries `(-1)^j C(i, j) mod p`. The n-variable
//! matrix is its n-fold Kronecker power, so the transform can be applied as
//! `n` passes of the basic matrix, one per mixed-radix axis, without ever
//! materializing the `p^n x p^n` matrix.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::domain::digits_of;
use crate::error::{Error, Result};
use crate::{Radix, ValueVector};

/// Default bound on `p^n` for [`transform_matrix`].
pub const DEFAULT_MATRIX_CAP: usize = 4096;

/// Dense transform matrix, entries reduced mod p, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmfMatrix {
    p: Radix,
    n: usize,
    dim: usize,
    entries: Vec<u32>,
}

impl RmfMatrix {
    /// Radix.
    pub fn p(&self) -> Radix {
        self.p
    }

    /// Argument count the matrix acts on.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row (and column) count, `p^n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }

    /// Rows in order.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.entries.chunks(self.dim)
    }

    /// Dense product `self * f mod p`.
    pub fn apply(&self, f: &ValueVector) -> Result<ValueVector> {
        if f.p() != self.p || f.n() != self.n {
            return Err(Error::domain(format!(
                "matrix (p = {}, n = {}) cannot act on function (p = {}, n = {})",
                self.p,
                self.n,
                f.p(),
                f.n()
            )));
        }
        let x = f.values();
        let out = self
            .rows()
            .map(|row| {
                let acc = row
                    .iter()
                    .zip(x)
                    .fold(0u64, |acc, (&r, &v)| (acc + r as u64 * v as u64) % self.p.get() as u64);
                acc as u32
            })
            .collect();
        Ok(ValueVector::from_raw(self.p, self.n, out))
    }
}

/// Pascal's triangle mod `p` up to row `p - 1`, built by addition only so
/// that composite moduli need no inverses.
fn pascal_mod(p: u32) -> Vec<Vec<u32>> {
    let size = p as usize;
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = vec![0u32; size];
        row[0] = 1 % p;
        for j in 1..=i {
            let prev = &rows[i - 1];
            row[j] = (prev[j - 1] + prev[j]) % p;
        }
        rows.push(row);
    }
    rows
}

/// `R1` with `r[i][j] = (-1)^j C(i, j) mod p`.
pub fn basic_matrix(p: Radix) -> RmfMatrix {
    let pu = p.get();
    let dim = pu as usize;
    let pascal = pascal_mod(pu);
    let mut entries = Vec::with_capacity(dim * dim);
    for (i, row) in pascal.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            let v = if j > i || j % 2 == 0 { c } else { (pu - c) % pu };
            entries.push(v);
        }
    }
    RmfMatrix {
        p,
        n: 1,
        dim,
        entries,
    }
}

fn kron(a: &RmfMatrix, b: &RmfMatrix) -> RmfMatrix {
    let dim = a.dim * b.dim;
    let p = a.p.get() as u64;
    let mut entries = vec![0u32; dim * dim];
    for ai in 0..a.dim {
        for aj in 0..a.dim {
            let x = a.get(ai, aj) as u64;
            if x == 0 {
                continue;
            }
            for bi in 0..b.dim {
                let row = (ai * b.dim + bi) * dim + aj * b.dim;
                for bj in 0..b.dim {
                    entries[row + bj] = ((x * b.get(bi, bj) as u64) % p) as u32;
                }
            }
        }
    }
    RmfMatrix {
        p: a.p,
        n: a.n + b.n,
        dim,
        entries,
    }
}

/// Dense `R_n = R1 ⊗ R_{n-1}`. Fails with a resource error when `p^n`
/// exceeds `cap`; use [`rmf_transform`] for large functions.
pub fn transform_matrix(p: Radix, n: usize, cap: usize) -> Result<RmfMatrix> {
    if n == 0 {
        return Err(Error::domain("argument count must be at least 1"));
    }
    let dim = p.pow(n).map_err(|_| too_large(p, n, cap))?;
    if dim > cap {
        return Err(too_large(p, n, cap));
    }
    let r1 = basic_matrix(p);
    let mut m = r1.clone();
    for _ in 1..n {
        m = kron(&r1, &m);
    }
    Ok(m)
}

fn too_large(p: Radix, n: usize, cap: usize) -> Error {
    Error::Resource(format!(
        "dense matrix for p = {p}, n = {n} exceeds the cap of {cap} rows; \
         use the fast transform instead"
    ))
}

/// RMF spectrum `R_n F mod p`, computed one axis at a time with `R1`.
/// The transform is an involution.
pub fn rmf_transform(f: &ValueVector) -> ValueVector {
    let p = f.p();
    let pu = p.get() as usize;
    let pm = p.get() as u64;
    let r1 = basic_matrix(p);
    let mut data = f.values().to_vec();
    let len = data.len();
    let mut line = vec![0u32; pu];
    // axis x1 first; stride p^(n-1) down to 1
    let mut stride = len / pu;
    while stride >= 1 {
        let block = stride * pu;
        for base in (0..len).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (k, slot) in line.iter_mut().enumerate() {
                    *slot = data[start + k * stride];
                }
                for row in 0..pu {
                    // lower triangular: columns beyond the row are zero
                    let mut acc = 0u64;
                    for (col, &x) in line.iter().enumerate().take(row + 1) {
                        acc += r1.get(row, col) as u64 * x as u64;
                    }
                    data[start + row * stride] = (acc % pm) as u32;
                }
            }
        }
        stride /= pu;
    }
    ValueVector::from_raw(p, f.n(), data)
}

/// Permutation of argument positions (zero-based).
///
/// Applying it to `f` yields `g(x1, ..., xn) = f(y1, ..., yn)` with
/// `y_k = x_{mapping[k]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgPermutation {
    mapping: Vec<usize>,
}

impl ArgPermutation {
    /// Fails unless `mapping` is a bijection on `0..mapping.len()`.
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &m in &mapping {
            if m >= mapping.len() || core::mem::replace(&mut seen[m], true) {
                return Err(Error::domain(format!("{mapping:?} is not a permutation")));
            }
        }
        Ok(ArgPermutation { mapping })
    }

    /// Identity on `n` positions.
    pub fn identity(n: usize) -> Self {
        ArgPermutation {
            mapping: (0..n).collect(),
        }
    }

    /// Exchanges positions `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::domain(format!("positions {a}, {b} out of range 0..{n}")));
        }
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.swap(a, b);
        Ok(ArgPermutation { mapping })
    }

    /// `g(x) = f(rotate(x, shift))`, a left cyclic shift of the arguments.
    pub fn cyclic_shift(n: usize, shift: usize) -> Self {
        ArgPermutation {
            mapping: (0..n).map(|k| (k + shift) % n.max(1)).collect(),
        }
    }

    /// Number of positions.
    pub fn n(&self) -> usize {
        self.mapping.len()
    }

    /// The position mapping.
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// Adjacent transpositions `k` (swapping `k` and `k + 1`) whose
    /// successive application equals applying `self`.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        let mut arr = self.mapping.clone();
        let mut swaps = Vec::new();
        for end in (1..arr.len()).rev() {
            for k in 0..end {
                if arr[k] > arr[k + 1] {
                    arr.swap(k, k + 1);
                    swaps.push(k);
                }
            }
        }
        swaps
    }
}

/// `G = P F`: `f` with its arguments permuted by `perm`.
pub fn apply_arg_permutation(f: &ValueVector, perm: &ArgPermutation) -> Result<ValueVector> {
    let n = f.n();
    if perm.n() != n {
        return Err(Error::domain(format!(
            "permutation on {} positions applied to a function of {n} arguments",
            perm.n()
        )));
    }
    let p = f.p().get();
    let pu = p as usize;
    let src = f.values();
    // weight of x_{mapping[k]} when it lands in slot k of f's index
    let mut weights = vec![0usize; n];
    let mut place = 1usize;
    for k in (0..n).rev() {
        weights[perm.mapping[k]] = place;
        place *= pu;
    }
    let values = (0..src.len())
        .map(|i| {
            let x = digits_of(i, p, n);
            let j: usize = x.iter().zip(&weights).map(|(&d, &w)| d as usize * w).sum();
            src[j]
        })
        .collect();
    Ok(ValueVector::from_raw(f.p(), n, values))
}
