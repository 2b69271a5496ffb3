//! Radix-p arithmetic, mixed-radix indexing and value vectors.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Number of logic values. Any `p >= 2`, prime or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radix(u32);

impl Radix {
    /// Fails with a domain error for `p < 2`.
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::domain(format!("radix must be at least 2, got {p}")));
        }
        Ok(Radix(p))
    }

    /// The radix as an integer.
    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `p^n`, or a domain error when it does not fit in `usize`.
    pub fn pow(self, n: usize) -> Result<usize> {
        let exp = u32::try_from(n).map_err(|_| Error::domain("argument count too large"))?;
        (self.0 as usize)
            .checked_pow(exp)
            .ok_or_else(|| Error::domain(format!("{}^{} overflows the index space", self.0, n)))
    }

    #[inline]
    pub(crate) fn reduce(self, v: u64) -> u32 {
        (v % self.0 as u64) as u32
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A value assignment `(x1, ..., xn)` to the arguments; `x1` comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<u32>);

impl Assignment {
    /// Wraps a digit sequence. Digits are checked against a radix only when
    /// the assignment is indexed.
    pub fn new(digits: impl Into<Vec<u32>>) -> Self {
        Assignment(digits.into())
    }

    /// The digits, `x1` first.
    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    /// Number of arguments.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the zero-length assignment.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for Assignment {
    fn from(v: Vec<u32>) -> Self {
        Assignment(v)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.0, self.0.iter().all(|&d| d < 10))
    }
}

/// Flat truth-table position of `a`: `sum digit_i * p^(n-1-i)`.
pub fn index_of(a: &Assignment, p: Radix) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::domain("assignment must have at least one digit"));
    }
    // checks overflow of p^n
    p.pow(a.len())?;
    let mut idx = 0usize;
    for (pos, &d) in a.digits().iter().enumerate() {
        if d >= p.get() {
            return Err(Error::domain(format!(
                "digit {d} at position {} is not below p = {p}",
                pos + 1
            )));
        }
        idx = idx * p.get() as usize + d as usize;
    }
    Ok(idx)
}

/// Inverse of [`index_of`].
pub fn assignment_of(i: usize, p: Radix, n: usize) -> Result<Assignment> {
    if n == 0 {
        return Err(Error::domain("argument count must be at least 1"));
    }
    let size = p.pow(n)?;
    if i >= size {
        return Err(Error::domain(format!("index {i} out of range 0..{size}")));
    }
    Ok(Assignment(digits_of(i, p.get(), n)))
}

pub(crate) fn digits_of(mut i: usize, p: u32, n: usize) -> Vec<u32> {
    let mut digits = alloc::vec![0u32; n];
    for slot in digits.iter_mut().rev() {
        *slot = (i % p as usize) as u32;
        i /= p as usize;
    }
    digits
}

pub(crate) fn index_of_digits(digits: &[u32], p: u32) -> usize {
    digits
        .iter()
        .fold(0usize, |acc, &d| acc * p as usize + d as usize)
}

/// Full truth table of `f: (Z_p)^n -> Z_p`; position `i` holds
/// `f(assignment_of(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueVector {
    p: Radix,
    n: usize,
    values: Vec<u32>,
}

impl ValueVector {
    /// Checks the length is `p^n` and every value is below `p`.
    pub fn new(p: Radix, n: usize, values: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("argument count must be at least 1"));
        }
        let size = p.pow(n)?;
        if values.len() != size {
            return Err(Error::domain(format!(
                "value vector needs {size} entries, got {}",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|&v| v >= p.get()) {
            return Err(Error::domain(format!(
                "value {} at index {pos} is not below p = {p}",
                values[pos]
            )));
        }
        Ok(ValueVector { p, n, values })
    }

    /// The constant-zero function.
    pub fn zeros(p: Radix, n: usize) -> Result<Self> {
        let size = p.pow(n)?;
        ValueVector::new(p, n, alloc::vec![0; size])
    }

    /// Builds a vector by evaluating `f` on every assignment, reducing mod p.
    pub fn from_fn(p: Radix, n: usize, mut f: impl FnMut(&[u32]) -> u32) -> Result<Self> {
        let size = p.pow(n)?;
        let values = (0..size)
            .map(|i| f(&digits_of(i, p.get(), n)) % p.get())
            .collect();
        ValueVector::new(p, n, values)
    }

    pub(crate) fn from_raw(p: Radix, n: usize, values: Vec<u32>) -> Self {
        debug_assert_eq!(Some(values.len()), p.pow(n).ok());
        ValueVector { p, n, values }
    }

    /// Radix.
    pub fn p(&self) -> Radix {
        self.p
    }

    /// Argument count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Values in flat-index order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Consumes the vector, returning its values.
    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// `f(a)`.
    pub fn get(&self, a: &Assignment) -> Result<u32> {
        if a.len() != self.n {
            return Err(Error::domain(format!(
                "assignment has {} digits, function has {} arguments",
                a.len(),
                self.n
            )));
        }
        Ok(self.values[index_of(a, self.p)?])
    }

    /// `a*self + b*other mod p`.
    pub fn linear_combination(&self, a: u32, other: &ValueVector, b: u32) -> Result<ValueVector> {
        if self.p != other.p || self.n != other.n {
            return Err(Error::domain("value vectors differ in p or n"));
        }
        let p = self.p;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| p.reduce(a as u64 * x as u64 + b as u64 * y as u64))
            .collect();
        Ok(ValueVector::from_raw(p, self.n, values))
    }

    /// Text form accepted by [`parse_value_vector`]: contiguous digits for
    /// `p <= 10`, comma-separated integers otherwise.
    pub fn to_text(&self) -> String {
        format_values(&self.values, self.p)
    }
}

impl fmt::Display for ValueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.values, self.p.get() <= 10)
    }
}

pub(crate) fn format_values(values: &[u32], p: Radix) -> String {
    let mut s = String::new();
    let _ = fmt::write(&mut s, format_args!("{}", DigitsDisplay(values, p.get() <= 10)));
    s
}

struct DigitsDisplay<'a>(&'a [u32], bool);

impl fmt::Display for DigitsDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, self.0, self.1)
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u32], contiguous: bool) -> fmt::Result {
    for (k, d) in digits.iter().enumerate() {
        if k > 0 && !contiguous {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

/// Parses `p^n` values. For `p <= 10` values may be written as contiguous
/// digits (whitespace ignored); comma-separated integers are accepted for
/// any `p`, and whitespace-separated integers for `p > 10`.
pub fn parse_value_vector(text: &str, p: Radix, n: usize) -> Result<ValueVector> {
    if n == 0 {
        return Err(Error::domain("argument count must be at least 1"));
    }
    let size = p.pow(n)?;
    let values = parse_digits(text, p, size)?;
    ValueVector::new(p, n, values)
}

pub(crate) fn parse_digits(text: &str, p: Radix, expected: usize) -> Result<Vec<u32>> {
    let text = text.trim();
    let tokens: Vec<&str> = if text.contains(',') {
        text.split(',').map(str::trim).collect()
    } else if p.get() <= 10 {
        text.char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| &text[i..i + c.len_utf8()])
            .collect()
    } else {
        text.split_whitespace().collect()
    };
    let mut values = Vec::with_capacity(tokens.len());
    for (position, tok) in tokens.iter().enumerate() {
        let v: u32 = tok.parse().map_err(|_| Error::Parse {
            position,
            message: format!("malformed value {tok:?}"),
        })?;
        if v >= p.get() {
            return Err(Error::Parse {
                position,
                message: format!("value {v} is not below p = {p}"),
            });
        }
        values.push(v);
    }
    if values.len() != expected {
        return Err(Error::Parse {
            position: values.len().min(expected),
            message: format!("expected {expected} values, got {}", values.len()),
        });
    }
    Ok(values)
}
