//! Values transcribed from the published tables and worked examples.
//! Flat vectors are in mixed-radix order with x1 most significant, which is
//! the row-major reading of the printed maps (rows x1, columns x2x3).

#![allow(dead_code)]

/// Basic matrices for p = 3..=7, row-major.
pub const BASIC_MATRICES: [(u32, &[&[u32]]); 5] = [
    (3, &[&[1, 0, 0], &[1, 2, 0], &[1, 1, 1]]),
    (4, &[&[1, 0, 0, 0], &[1, 3, 0, 0], &[1, 2, 1, 0], &[1, 1, 3, 3]]),
    (5, &[&[1, 0, 0, 0, 0], &[1, 4, 0, 0, 0], &[1, 3, 1, 0, 0], &[1, 2, 3, 4, 0], &[1, 1, 1, 1, 1]]),
    (6, &[&[1, 0, 0, 0, 0, 0], &[1, 5, 0, 0, 0, 0], &[1, 4, 1, 0, 0, 0], &[1, 3, 3, 5, 0, 0], &[1, 2, 0, 2, 1, 0], &[1, 1, 4, 2, 5, 5]]),
    (7, &[&[1, 0, 0, 0, 0, 0, 0], &[1, 6, 0, 0, 0, 0, 0], &[1, 5, 1, 0, 0, 0, 0], &[1, 4, 3, 6, 0, 0, 0], &[1, 3, 6, 3, 1, 0, 0], &[1, 2, 3, 4, 5, 6, 0], &[1, 1, 1, 1, 1, 1, 1]]),
];

/// Rank of every assignment for p = 3, n = 3, flat-index order.
pub const TERNARY_RANK_MAP: [usize; 27] = [0, 1, 2, 1, 3, 4, 2, 5, 6, 1, 3, 5, 3, 7, 8, 4, 8, 9, 2, 4, 6, 5, 8, 9, 6, 9, 10];

/// Table of elementary indicators for p = 3, n = 3: (assignment, raw row as
/// printed). Rows from the second half may carry one extra trailing cell.
pub const ELEMENTARY_TABLE: [(&str, &[u32]); 27] = [
    ("000", &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("001", &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("002", &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("010", &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("011", &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("012", &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    ("020", &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("021", &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    ("022", &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    ("100", &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("101", &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("102", &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    ("110", &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("111", &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    ("112", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    ("120", &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("121", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    ("122", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    ("200", &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("201", &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("202", &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    ("210", &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    ("211", &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    ("212", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    ("220", &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    ("221", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    ("222", &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

/// Compact spectra of the ternary elementary functions: (representative, row
/// across columns k = 0..=10).
pub const TERNARY_BASIS_ROWS: [(&str, [u32; 11]); 11] = [
    ("000", [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("001", [1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("002", [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("011", [1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    ("012", [1, 0, 1, 2, 2, 0, 0, 0, 0, 0, 0]),
    ("021", [1, 0, 1, 2, 0, 2, 0, 0, 0, 0, 0]),
    ("022", [1, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0]),
    ("111", [1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0]),
    ("112", [1, 2, 1, 2, 2, 2, 0, 1, 1, 0, 0]),
    ("122", [1, 1, 2, 2, 0, 0, 1, 2, 1, 2, 0]),
    ("222", [1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1]),
];

/// Quaternary cycles for n = 3: (representative, rank, cycle).
pub const QUATERNARY_CYCLES: [(&str, usize, &str); 24] = [
    ("000", 0, "000"),
    ("001", 1, "001-010-100"),
    ("002", 2, "002-020-200"),
    ("003", 3, "003-030-300"),
    ("011", 4, "011-110-101"),
    ("012", 5, "012-120-201"),
    ("013", 6, "013-130-301"),
    ("021", 7, "021-210-102"),
    ("022", 8, "022-220-202"),
    ("023", 9, "023-230-302"),
    ("031", 10, "031-310-103"),
    ("032", 11, "032-320-203"),
    ("033", 12, "033-330-303"),
    ("111", 13, "111"),
    ("112", 14, "112-121-211"),
    ("113", 15, "113-131-311"),
    ("122", 16, "122-221-212"),
    ("123", 17, "123-231-312"),
    ("132", 18, "132-321-213"),
    ("133", 19, "133-331-313"),
    ("222", 20, "222"),
    ("223", 21, "223-232-322"),
    ("233", 22, "233-332-323"),
    ("333", 23, "333"),
];

/// Quaternary compact basis columns k = 1..=23 for n = 3, rank order
/// (column 0 is not printed).
pub const QUATERNARY_BASIS_COLUMNS: [[u32; 24]; 23] = [
    [0, 3, 2, 1, 2, 1, 0, 1, 0, 3, 0, 3, 2, 1, 0, 3, 3, 2, 2, 1, 2, 1, 0, 3],
    [0, 0, 1, 3, 0, 1, 3, 1, 2, 0, 3, 0, 2, 0, 1, 3, 2, 0, 0, 2, 3, 1, 3, 1],
    [0, 0, 0, 3, 0, 0, 3, 0, 0, 3, 3, 3, 2, 0, 0, 3, 0, 3, 3, 2, 0, 3, 2, 1],
    [0, 0, 0, 0, 1, 2, 3, 2, 0, 2, 3, 2, 1, 3, 1, 3, 0, 3, 3, 3, 0, 0, 1, 3],
    [0, 0, 0, 0, 0, 3, 1, 0, 2, 2, 0, 1, 3, 0, 3, 1, 1, 1, 2, 0, 2, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 3, 0, 0, 1, 0, 2, 1, 0, 0, 2, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 3, 2, 1, 1, 2, 3, 0, 3, 1, 1, 2, 1, 0, 2, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 3, 1, 0, 0, 0, 1, 3, 3, 1, 3, 3, 3, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 1, 0, 0, 0, 0, 3, 0, 1, 0, 3, 0, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 0, 0, 1, 0, 1, 2, 0, 0, 2, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0, 3, 1, 0, 3, 0, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 2, 1, 0, 2, 2, 3, 0, 0, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 1, 1, 2, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 2, 2, 2, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 1, 1, 3, 2, 1, 0, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 0, 2, 1, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 2, 1, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 2, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 1, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3],
];

pub const TERNARY_WORKED_F: [u32; 27] = [0, 1, 2, 1, 0, 1, 2, 0, 1, 1, 0, 0, 0, 2, 1, 1, 1, 0, 2, 1, 1, 0, 1, 0, 1, 0, 1];
pub const TERNARY_WORKED_S: [u32; 27] = [0, 2, 0, 2, 1, 1, 0, 2, 2, 2, 1, 2, 1, 1, 0, 1, 0, 2, 0, 1, 2, 2, 0, 2, 2, 2, 0];
/// (scale, k) of each printed column; then rows: input, scaled columns..., sum.
pub const TERNARY_WORKED_FORWARD_SCALES: &[(u32, usize)] = &[(1, 1), (2, 2), (1, 4), (1, 6), (2, 7), (1, 8), (1, 10)];
pub const TERNARY_WORKED_FORWARD_ROWS: [&[u32]; 11] = [&[0, 0, 0, 0, 0, 0, 0, 0, 0], &[1, 2, 0, 0, 0, 0, 0, 0, 2], &[2, 1, 2, 0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0, 0, 0, 1], &[1, 0, 2, 2, 0, 0, 0, 0, 1], &[0, 0, 2, 0, 0, 0, 0, 0, 2], &[1, 2, 1, 1, 1, 0, 0, 0, 2], &[2, 0, 0, 0, 0, 1, 0, 0, 1], &[1, 2, 2, 2, 0, 2, 1, 0, 0], &[0, 1, 1, 0, 1, 1, 1, 0, 2], &[1, 0, 0, 0, 0, 2, 0, 1, 0]];
/// (scale, k) of each printed column; then rows: input, scaled columns..., sum.
pub const TERNARY_WORKED_INVERSE_SCALES: &[(u32, usize)] = &[(2, 1), (1, 3), (1, 4), (2, 5), (2, 6), (1, 7), (2, 9)];
pub const TERNARY_WORKED_INVERSE_ROWS: [&[u32]; 11] = [&[0, 0, 0, 0, 0, 0, 0, 0, 0], &[2, 1, 0, 0, 0, 0, 0, 0, 1], &[0, 2, 0, 0, 0, 0, 0, 0, 2], &[1, 2, 1, 0, 0, 0, 0, 0, 0], &[1, 0, 2, 2, 0, 0, 0, 0, 1], &[2, 0, 2, 0, 1, 0, 0, 0, 0], &[2, 1, 1, 1, 2, 2, 0, 0, 1], &[1, 0, 0, 0, 0, 0, 2, 0, 2], &[0, 1, 2, 2, 1, 0, 1, 0, 1], &[2, 2, 2, 0, 0, 2, 2, 1, 0], &[0, 0, 0, 0, 0, 0, 1, 0, 1]];

pub const QUATERNARY_A_F: [u32; 64] = [0, 1, 2, 3, 1, 0, 1, 2, 2, 2, 0, 1, 3, 1, 2, 0, 1, 0, 2, 1, 0, 1, 2, 1, 1, 2, 0, 2, 2, 1, 1, 0, 2, 1, 0, 2, 2, 2, 0, 1, 0, 0, 2, 1, 1, 2, 1, 0, 3, 2, 1, 0, 1, 1, 2, 0, 2, 1, 1, 0, 0, 0, 0, 3];
pub const QUATERNARY_A_S: [u32; 64] = [0, 3, 0, 0, 3, 2, 2, 2, 0, 1, 2, 3, 0, 2, 1, 1, 3, 2, 1, 2, 2, 0, 3, 2, 2, 3, 2, 0, 2, 2, 0, 0, 0, 2, 2, 1, 1, 3, 2, 0, 2, 2, 0, 1, 3, 0, 1, 0, 0, 2, 3, 1, 2, 2, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0];
pub const QUATERNARY_A_COMPACT_F: [u32; 24] = [0, 1, 2, 3, 0, 1, 2, 2, 0, 1, 1, 2, 0, 1, 2, 1, 0, 2, 1, 0, 2, 1, 0, 3];
pub const QUATERNARY_A_COMPACT_S: [u32; 24] = [0, 3, 0, 0, 2, 2, 2, 1, 2, 3, 2, 1, 1, 0, 3, 2, 2, 0, 0, 0, 0, 1, 0, 0];

pub const QUATERNARY_B_F: [u32; 64] = [0, 3, 2, 3, 3, 1, 3, 0, 2, 2, 1, 0, 3, 1, 2, 1, 3, 1, 2, 1, 1, 1, 2, 1, 3, 2, 0, 3, 0, 1, 1, 0, 2, 3, 1, 2, 2, 2, 0, 1, 1, 0, 2, 1, 0, 3, 1, 0, 3, 0, 0, 1, 1, 1, 3, 0, 2, 1, 1, 0, 1, 0, 0, 3];
pub const QUATERNARY_B_S: [u32; 64] = [0, 1, 0, 2, 1, 3, 0, 1, 0, 1, 3, 3, 2, 1, 2, 3, 1, 3, 1, 1, 3, 1, 2, 3, 0, 2, 3, 2, 1, 3, 0, 1, 0, 0, 3, 2, 1, 2, 3, 0, 3, 3, 3, 3, 3, 2, 3, 0, 2, 1, 3, 3, 1, 3, 2, 1, 2, 0, 3, 0, 3, 1, 0, 3];
pub const QUATERNARY_B_COMPACT_F: [u32; 24] = [0, 3, 2, 3, 1, 3, 0, 2, 1, 0, 1, 2, 1, 1, 2, 1, 0, 3, 1, 0, 2, 1, 0, 3];
pub const QUATERNARY_B_COMPACT_S: [u32; 24] = [0, 1, 0, 2, 3, 0, 1, 1, 3, 3, 1, 2, 3, 1, 2, 3, 3, 2, 0, 1, 3, 3, 0, 3];

pub const QUATERNARY_C_F: [u32; 64] = [0, 1, 2, 3, 1, 0, 1, 2, 2, 2, 0, 1, 3, 1, 2, 0, 1, 0, 2, 1, 0, 1, 2, 1, 1, 2, 1, 3, 2, 1, 1, 0, 2, 1, 0, 2, 2, 2, 1, 1, 0, 1, 2, 1, 1, 3, 1, 0, 3, 2, 1, 0, 1, 1, 3, 0, 2, 1, 1, 0, 0, 0, 0, 3];
pub const QUATERNARY_C_S: [u32; 64] = [0, 3, 0, 0, 3, 2, 2, 2, 0, 1, 2, 3, 0, 2, 1, 1, 3, 2, 1, 2, 2, 0, 3, 2, 2, 3, 1, 2, 2, 2, 1, 2, 0, 2, 2, 1, 1, 3, 1, 1, 2, 1, 2, 0, 3, 2, 0, 1, 0, 2, 3, 1, 2, 2, 2, 2, 1, 1, 0, 1, 1, 2, 1, 2];
pub const QUATERNARY_C_COMPACT_F: [u32; 24] = [0, 1, 2, 3, 0, 1, 2, 2, 0, 1, 1, 2, 0, 1, 2, 1, 1, 3, 1, 0, 2, 1, 0, 3];
pub const QUATERNARY_C_COMPACT_S: [u32; 24] = [0, 3, 0, 0, 2, 2, 2, 1, 2, 3, 2, 1, 1, 0, 3, 2, 1, 2, 1, 2, 2, 0, 1, 2];

pub const QUATERNARY_D_F: [u32; 64] = [0, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 1, 2, 1, 2, 2, 2, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2, 2, 2, 2, 1, 2, 2, 1, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 1, 2, 1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 3];
pub const QUATERNARY_D_S: [u32; 64] = [0, 2, 2, 2, 2, 2, 3, 1, 2, 2, 0, 1, 2, 1, 3, 3, 2, 2, 2, 1, 2, 3, 1, 3, 3, 1, 1, 3, 1, 3, 3, 3, 2, 3, 0, 3, 2, 1, 1, 3, 0, 1, 0, 2, 1, 3, 2, 0, 2, 1, 1, 3, 1, 3, 3, 3, 3, 3, 2, 0, 3, 3, 0, 0];
pub const QUATERNARY_D_COMPACT_F: [u32; 24] = [0, 2, 2, 2, 2, 1, 2, 2, 2, 1, 1, 2, 2, 1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 3];
pub const QUATERNARY_D_COMPACT_S: [u32; 24] = [0, 2, 2, 2, 2, 3, 1, 2, 0, 1, 1, 3, 3, 3, 1, 3, 1, 3, 3, 3, 0, 2, 0, 0];

/// Nonzero (weight, k) terms of the first quaternary example forward expansion.
pub const QUATERNARY_A_FORWARD_TERMS: [(u32, usize); 17] = [
    (1, 1), (2, 2), (3, 3), (1, 5), (2, 6), (2, 7), (1, 9), (1, 10), (2, 11),
    (1, 13), (2, 14), (1, 15), (2, 17), (1, 18), (2, 20), (1, 21), (3, 23),
];

/// Nonzero (weight, k) terms of the first quaternary example inverse expansion.
pub const QUATERNARY_A_INVERSE_TERMS: [(u32, usize); 14] = [
    (3, 1), (2, 4), (2, 5), (2, 6), (1, 7), (2, 8), (3, 9), (2, 10),
    (1, 11), (1, 12), (3, 14), (2, 15), (2, 16), (1, 21),
];

/// Representatives of the five cycles in the sum example for p = 3, n = 4:
/// c11, c12, c13 from the multiset {0,0,1,2}; c21, c22 from {0,0,2,2}.
pub const SUM_CYCLES: [&str; 5] = ["0012", "0102", "0021", "0022", "0202"];

/// Members of the same five cycles as printed.
pub const SUM_CYCLE_MEMBERS: [&str; 5] = [
    "0012-0120-1200-2001",
    "0102-1020-0201-2010",
    "1002-0021-0210-2100",
    "0022-0220-2200-2002",
    "0202-2020",
];

/// F1..F6 restricted to the five cycles.
pub const SUM_FUNCTIONS: [[u32; 5]; 6] = [
    [1, 1, 1, 2, 2],
    [0, 0, 0, 1, 1],
    [2, 1, 0, 2, 1],
    [2, 0, 1, 2, 1],
    [1, 2, 0, 2, 1],
    [0, 2, 1, 2, 0],
];

/// Class of a printed sum row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumClass {
    Symmetric,
    Rotation,
    /// Rotation symmetric, distinguishing fewer multiset classes.
    WeakerRotation,
}

/// (a, b) one-based function indices, printed sum, printed class.
pub const SUM_TABLE: [(usize, usize, [u32; 5], SumClass); 5] = [
    (1, 2, [1, 1, 1, 0, 0], SumClass::Symmetric),
    (1, 3, [0, 2, 1, 1, 0], SumClass::Rotation),
    (4, 5, [0, 2, 1, 1, 2], SumClass::Rotation),
    (3, 5, [0, 0, 0, 1, 2], SumClass::WeakerRotation),
    (5, 6, [1, 1, 1, 1, 1], SumClass::Symmetric),
];
