//! Plain-text tables.

use mvf_rmf_core::{CompactVector, OrbitTable, RmfMatrix, SpectrumBasis, ValueVector};

/// Left-aligned columns separated by two spaces, no trailing whitespace.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0usize; cols];
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if k + 1 < cols {
                line.extend(std::iter::repeat_n(' ', width[k] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn matrix(m: &RmfMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// `repr | rank | cycle`, members joined by `-`.
pub fn orbits(t: &OrbitTable) -> String {
    let rows: Vec<Vec<String>> = t
        .orbits()
        .iter()
        .enumerate()
        .map(|(rank, o)| vec![o.representative().to_string(), rank.to_string(), o.to_string()])
        .collect();
    table(&header(&["repr", "rank", "cycle"]), &rows)
}

/// One line per rank: representative, rank, then the given value columns.
pub fn compact_columns(t: &OrbitTable, names: &[&str], columns: &[&CompactVector]) -> String {
    let mut h = header(&["repr", "rank"]);
    h.extend(names.iter().map(|s| s.to_string()));
    let rows: Vec<Vec<String>> = t
        .orbits()
        .iter()
        .enumerate()
        .map(|(rank, o)| {
            let mut row = vec![o.representative().to_string(), rank.to_string()];
            row.extend(columns.iter().map(|c| c.entries()[rank].to_string()));
            row
        })
        .collect();
    table(&h, &rows)
}

pub fn compact(t: &OrbitTable, c: &CompactVector) -> String {
    compact_columns(t, &["value"], &[c])
}

/// Representative, then one column per basis function.
pub fn basis(b: &SpectrumBasis) -> String {
    let mut h = header(&["repr"]);
    h.extend((0..b.columns().len()).map(|k| format!("SB{k}")));
    let rows: Vec<Vec<String>> = b
        .table()
        .orbits()
        .iter()
        .enumerate()
        .map(|(rank, o)| {
            let mut row = vec![o.representative().to_string()];
            row.extend(b.row(rank).map(|v| v.to_string()));
            row
        })
        .collect();
    table(&h, &rows)
}

/// Value map with `x1` down the side and the remaining arguments across.
pub fn value_map(f: &ValueVector) -> String {
    let p = f.p().get() as usize;
    let width = f.values().len() / p;
    let tail = f.n().saturating_sub(1);
    let label = |i: usize| {
        let mut digits = vec![0usize; tail];
        let mut rest = i;
        for d in digits.iter_mut().rev() {
            *d = rest % p;
            rest /= p;
        }
        let sep = if p > 10 { "," } else { "" };
        digits.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
    };
    let mut h = vec![String::from("x1")];
    h.extend((0..width).map(label));
    let rows: Vec<Vec<String>> = f
        .values()
        .chunks(width)
        .enumerate()
        .map(|(x1, chunk)| {
            let mut row = vec![x1.to_string()];
            row.extend(chunk.iter().map(u32::to_string));
            row
        })
        .collect();
    table(&h, &rows)
}
