//! Cyclic-shift orbits, compact vectors and symmetry classification.
//!
//! Two group actions on argument positions are supported. The cyclic group
//! generated by a left rotation gives the orbits used for rotation symmetric
//! functions; its representatives are the lexicographically smallest member
//! of each orbit and ranks are positions in the sorted representative list.
//! The full symmetric group gives multiset classes represented by sorted
//! (non-decreasing) tuples, of which there are `kappa(p, n)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::domain::{digits_of, format_values, index_of, index_of_digits, parse_digits};
use crate::error::{Error, Result};
use crate::{Assignment, Radix, ValueVector};

/// Left cyclic shift: the digit at position `k` moves to `k - shift (mod n)`.
pub fn rotate(a: &Assignment, shift: usize) -> Assignment {
    let d = a.digits();
    if d.is_empty() {
        return a.clone();
    }
    let s = shift % d.len();
    let mut out = Vec::with_capacity(d.len());
    out.extend_from_slice(&d[s..]);
    out.extend_from_slice(&d[..s]);
    Assignment::new(out)
}

/// Left rotation by one position on a flat index.
#[inline]
fn rotate_index(i: usize, p: usize, top: usize) -> usize {
    (i % top) * p + i / top
}

/// One orbit of value assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    representative: Assignment,
    members: Vec<usize>,
    p: Radix,
}

impl Orbit {
    /// Lexicographically smallest member.
    pub fn representative(&self) -> &Assignment {
        &self.representative
    }

    /// Flat indices of the members. Cyclic orbits list successive left
    /// shifts of the representative; multiset classes list members in
    /// increasing index order.
    pub fn member_indices(&self) -> &[usize] {
        &self.members
    }

    /// Members as assignments, in the order of [`Orbit::member_indices`].
    pub fn members(&self) -> impl Iterator<Item = Assignment> + '_ {
        let n = self.representative.len();
        self.members
            .iter()
            .map(move |&i| Assignment::new(digits_of(i, self.p.get(), n)))
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Orbits are never empty; provided for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for Orbit {
    /// Members joined by `-`, e.g. `023-230-302`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in self.members().enumerate() {
            if k > 0 {
                f.write_str("-")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Closure of `a` under rotation, with members listed as successive left
/// shifts of the representative.
pub fn orbit_of(a: &Assignment, p: Radix) -> Result<Orbit> {
    index_of(a, p)?;
    let n = a.len();
    let representative = (0..n).map(|s| rotate(a, s)).min().expect("n >= 1");
    let mut members = Vec::new();
    for s in 0..n {
        let idx = index_of(&rotate(&representative, s), p)?;
        if s > 0 && idx == members[0] {
            break;
        }
        members.push(idx);
    }
    Ok(Orbit {
        representative,
        members,
        p,
    })
}

/// Which group action a table or compact vector refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompactKind {
    /// Cyclic shifts of argument positions.
    Rotation,
    /// All permutations of argument positions.
    Symmetric,
}

impl fmt::Display for CompactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompactKind::Rotation => "rotation",
            CompactKind::Symmetric => "symmetric",
        })
    }
}

/// Partition of `(Z_p)^n` into orbits ordered by representative, with a
/// dense rank lookup over flat indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    p: Radix,
    n: usize,
    kind: CompactKind,
    orbits: Vec<Orbit>,
    rank_of: Vec<usize>,
    // multiset class of each orbit, dense in sorted-representative order
    class_of: Vec<usize>,
}

/// Cyclic orbit table; requires `n > 2`.
pub fn build_orbit_table(p: Radix, n: usize) -> Result<OrbitTable> {
    if n <= 2 {
        return Err(Error::UnsupportedArity(n));
    }
    let size = p.pow(n)?;
    let pu = p.get() as usize;
    let top = size / pu;
    let mut rank_of = vec![usize::MAX; size];
    let mut orbits = Vec::new();
    for i in 0..size {
        if rank_of[i] != usize::MAX {
            continue;
        }
        // every smaller index is already placed, so i is its orbit's minimum
        let rank = orbits.len();
        let mut members = vec![i];
        rank_of[i] = rank;
        let mut j = rotate_index(i, pu, top);
        while j != i {
            rank_of[j] = rank;
            members.push(j);
            j = rotate_index(j, pu, top);
        }
        orbits.push(Orbit {
            representative: Assignment::new(digits_of(i, p.get(), n)),
            members,
            p,
        });
    }
    Ok(OrbitTable::assemble(p, n, CompactKind::Rotation, orbits, rank_of))
}

/// Multiset-class table for fully symmetric functions; `kappa(p, n)` classes.
pub fn build_symmetric_table(p: Radix, n: usize) -> Result<OrbitTable> {
    if n == 0 {
        return Err(Error::domain("argument count must be at least 1"));
    }
    let size = p.pow(n)?;
    let mut rank_of = vec![usize::MAX; size];
    let mut orbits: Vec<Orbit> = Vec::new();
    for i in 0..size {
        let mut digits = digits_of(i, p.get(), n);
        digits.sort_unstable();
        let sorted = index_of_digits(&digits, p.get());
        let rank = if sorted == i {
            orbits.push(Orbit {
                representative: Assignment::new(digits),
                members: Vec::new(),
                p,
            });
            orbits.len() - 1
        } else {
            rank_of[sorted]
        };
        rank_of[i] = rank;
        orbits[rank].members.push(i);
    }
    Ok(OrbitTable::assemble(p, n, CompactKind::Symmetric, orbits, rank_of))
}

impl OrbitTable {
    fn assemble(
        p: Radix,
        n: usize,
        kind: CompactKind,
        orbits: Vec<Orbit>,
        rank_of: Vec<usize>,
    ) -> Self {
        let mut classes = BTreeMap::new();
        let class_of = orbits
            .iter()
            .map(|o| {
                let mut d = o.representative.digits().to_vec();
                d.sort_unstable();
                let next = classes.len();
                *classes.entry(d).or_insert(next)
            })
            .collect();
        OrbitTable {
            p,
            n,
            kind,
            orbits,
            rank_of,
            class_of,
        }
    }

    /// Radix.
    pub fn p(&self) -> Radix {
        self.p
    }

    /// Argument count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Group action.
    pub fn kind(&self) -> CompactKind {
        self.kind
    }

    /// Orbits in rank order.
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Number of orbits.
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    /// Always false for a built table.
    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Rank of the orbit containing flat index `i`. Panics if `i >= p^n`.
    #[inline]
    pub fn rank_of(&self, i: usize) -> usize {
        self.rank_of[i]
    }

    /// Dense rank lookup over all flat indices.
    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    /// Rank of the orbit containing `a`.
    pub fn rank_of_assignment(&self, a: &Assignment) -> Result<usize> {
        if a.len() != self.n {
            return Err(Error::domain(format!(
                "assignment has {} digits, table has n = {}",
                a.len(),
                self.n
            )));
        }
        Ok(self.rank_of[index_of(a, self.p)?])
    }

    /// Index of the multiset class (sorted-digit class) of orbit `rank`.
    /// Classes are numbered in order of first appearance, which is also the
    /// order of their sorted representatives.
    pub fn multiset_class(&self, rank: usize) -> usize {
        self.class_of[rank]
    }

    /// Number of multiset classes whose orbits do not all carry the same
    /// entry of `c`. Zero means `c` expands to a symmetric function.
    pub fn distinguishing_classes(&self, c: &CompactVector) -> Result<usize> {
        self.check(c)?;
        let mut seen: BTreeMap<usize, (u32, bool)> = BTreeMap::new();
        for (rank, &v) in c.entries.iter().enumerate() {
            seen.entry(self.class_of[rank])
                .and_modify(|(first, differs)| *differs |= *first != v)
                .or_insert((v, false));
        }
        Ok(seen.values().filter(|(_, d)| *d).count())
    }

    /// Symmetry class of the function `c` expands to, decided on compact
    /// entries alone.
    pub fn classify_compact(&self, c: &CompactVector) -> Result<SymmetryClass> {
        Ok(if self.distinguishing_classes(c)? == 0 {
            SymmetryClass::Symmetric
        } else {
            SymmetryClass::StrictlyRotationSymmetric
        })
    }

    /// Indicator of orbit `k`.
    pub fn elementary(&self, k: usize) -> Result<ValueVector> {
        let unit = CompactVector::unit(self.p, self.n, self.kind, self.len(), k)?;
        expand(&unit, self)
    }

    fn check(&self, c: &CompactVector) -> Result<()> {
        if c.p != self.p || c.n != self.n || c.kind != self.kind || c.entries.len() != self.len()
        {
            return Err(Error::domain(format!(
                "compact vector (p = {}, n = {}, {}, {} entries) does not match table \
                 (p = {}, n = {}, {}, {} orbits)",
                c.p,
                c.n,
                c.kind,
                c.entries.len(),
                self.p,
                self.n,
                self.kind,
                self.len()
            )));
        }
        Ok(())
    }
}

/// Number of cyclic orbits of `(Z_p)^n`, by Burnside's lemma over the
/// rotation group. Requires `n > 2`.
pub fn orbit_count(p: Radix, n: usize) -> Result<u64> {
    if n <= 2 {
        return Err(Error::UnsupportedArity(n));
    }
    let overflow = || Error::domain(format!("orbit count for p = {p}, n = {n} overflows"));
    let mut total: u128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let exp = u32::try_from(n / d).map_err(|_| overflow())?;
        let fixed = (p.get() as u128).checked_pow(exp).ok_or_else(overflow)?;
        total = fixed
            .checked_mul(totient(d) as u128)
            .and_then(|t| t.checked_add(total))
            .ok_or_else(overflow)?;
    }
    u64::try_from(total / n as u128).map_err(|_| overflow())
}

fn totient(mut m: usize) -> usize {
    let mut result = m;
    let mut q = 2;
    while q * q <= m {
        if m.is_multiple_of(q) {
            while m.is_multiple_of(q) {
                m /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Length of the compact vector of a symmetric function:
/// `(n + p - 1)! / ((p - 1)! n!)`.
pub fn kappa(p: Radix, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("argument count must be at least 1"));
    }
    let overflow = || Error::domain(format!("kappa for p = {p}, n = {n} overflows"));
    // c = C(p - 1 + i, i) after step i; each division is exact
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = c
            .checked_mul(p.get() as u128 - 1 + i)
            .ok_or_else(overflow)?
            / i;
    }
    u64::try_from(c).map_err(|_| overflow())
}

/// Result of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    /// Invariant under every permutation of argument positions.
    Symmetric,
    /// Invariant under cyclic shifts but not under every permutation.
    StrictlyRotationSymmetric,
    /// Neither.
    None,
}

impl SymmetryClass {
    /// Lower-case name used in text output.
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::StrictlyRotationSymmetric => "rotation-symmetric",
            SymmetryClass::None => "none",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Strongest symmetry class of `f`. For `n <= 2` only `Symmetric` or
/// `None` is reported.
pub fn classify(f: &ValueVector) -> SymmetryClass {
    let n = f.n();
    if n == 1 {
        return SymmetryClass::Symmetric;
    }
    let p = f.p().get() as usize;
    let v = f.values();
    let top = v.len() / p;
    let second = top / p;
    let rot_invariant = (0..v.len()).all(|i| v[i] == v[rotate_index(i, p, top)]);
    // a transposition together with the n-cycle generates every permutation
    let swap_invariant = (0..v.len()).all(|i| {
        let (d1, d2) = (i / top, (i / second) % p);
        let j = i - d1 * top - d2 * second + d2 * top + d1 * second;
        v[i] == v[j]
    });
    if rot_invariant && swap_invariant {
        SymmetryClass::Symmetric
    } else if rot_invariant && n > 2 {
        SymmetryClass::StrictlyRotationSymmetric
    } else {
        SymmetryClass::None
    }
}

/// One value per orbit, indexed by rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactVector {
    p: Radix,
    n: usize,
    kind: CompactKind,
    entries: Vec<u32>,
}

impl CompactVector {
    /// Checks entries are below `p` and the length matches the orbit count
    /// (rotation kind) or `kappa` (symmetric kind).
    pub fn new(p: Radix, n: usize, kind: CompactKind, entries: Vec<u32>) -> Result<Self> {
        let expected = compact_len(p, n, kind)?;
        if entries.len() as u64 != expected {
            return Err(Error::domain(format!(
                "{kind} compact vector for p = {p}, n = {n} needs {expected} entries, got {}",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&v| v >= p.get()) {
            return Err(Error::domain(format!(
                "entry {} at rank {pos} is not below p = {p}",
                entries[pos]
            )));
        }
        Ok(CompactVector {
            p,
            n,
            kind,
            entries,
        })
    }

    /// Parses entries in rank order, same text rules as value vectors.
    pub fn parse(text: &str, p: Radix, n: usize, kind: CompactKind) -> Result<Self> {
        let expected = compact_len(p, n, kind)?;
        let len = usize::try_from(expected).map_err(|_| Error::domain("compact length overflows"))?;
        let entries = parse_digits(text, p, len)?;
        CompactVector::new(p, n, kind, entries)
    }

    fn unit(p: Radix, n: usize, kind: CompactKind, len: usize, k: usize) -> Result<Self> {
        if k >= len {
            return Err(Error::domain(format!("rank {k} out of range 0..{len}")));
        }
        let mut entries = vec![0; len];
        entries[k] = 1;
        Ok(CompactVector {
            p,
            n,
            kind,
            entries,
        })
    }

    pub(crate) fn from_raw(p: Radix, n: usize, kind: CompactKind, entries: Vec<u32>) -> Self {
        CompactVector {
            p,
            n,
            kind,
            entries,
        }
    }

    /// Radix.
    pub fn p(&self) -> Radix {
        self.p
    }

    /// Argument count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Group action the entries are indexed by.
    pub fn kind(&self) -> CompactKind {
        self.kind
    }

    /// Entries in rank order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entrywise sum mod p.
    pub fn add(&self, other: &CompactVector) -> Result<CompactVector> {
        if self.p != other.p || self.n != other.n || self.kind != other.kind {
            return Err(Error::domain(format!(
                "cannot add compact vectors over (p = {}, n = {}, {}) and (p = {}, n = {}, {})",
                self.p, self.n, self.kind, other.p, other.n, other.kind
            )));
        }
        let p = self.p;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| p.reduce(a as u64 + b as u64))
            .collect();
        Ok(CompactVector::from_raw(p, self.n, self.kind, entries))
    }

    /// Same text form as [`ValueVector::to_text`].
    pub fn to_text(&self) -> String {
        format_values(&self.entries, self.p)
    }
}

fn compact_len(p: Radix, n: usize, kind: CompactKind) -> Result<u64> {
    match kind {
        CompactKind::Rotation => orbit_count(p, n),
        CompactKind::Symmetric => kappa(p, n),
    }
}

/// Entry at rank `r` is `f`'s value on orbit `r`.
pub fn compress(f: &ValueVector, table: &OrbitTable) -> Result<CompactVector> {
    if f.p() != table.p || f.n() != table.n {
        return Err(Error::domain(format!(
            "function (p = {}, n = {}) does not match table (p = {}, n = {})",
            f.p(),
            f.n(),
            table.p,
            table.n
        )));
    }
    let v = f.values();
    let mut entries = Vec::with_capacity(table.len());
    for orbit in &table.orbits {
        let first = v[orbit.members[0]];
        if orbit.members.iter().any(|&m| v[m] != first) {
            return Err(Error::NotCompressible(format!("{}", orbit.representative)));
        }
        entries.push(first);
    }
    Ok(CompactVector::from_raw(table.p, table.n, table.kind, entries))
}

/// Inverse of [`compress`]: `f(a) = c[rank_of(a)]`.
pub fn expand(c: &CompactVector, table: &OrbitTable) -> Result<ValueVector> {
    table.check(c)?;
    let values = table.rank_of.iter().map(|&r| c.entries[r]).collect();
    Ok(ValueVector::from_raw(table.p, table.n, values))
}

/// Indicator of cyclic orbit `k`.
pub fn elementary_function(p: Radix, n: usize, k: usize) -> Result<ValueVector> {
    build_orbit_table(p, n)?.elementary(k)
}
