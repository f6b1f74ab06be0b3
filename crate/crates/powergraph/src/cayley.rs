//! Cayley-table ingestion from CSV text.
//!
//! The file is an `n x n` table of 0-based element indices: entry `(i, j)`
//! is the product `i * j`. Blank lines and `#` comments are skipped. The
//! identity may sit at any index; after validation the elements are
//! relabeled so the identity becomes index 0, with names recording the
//! original file indices (`g0`, `g1`, ...).
//!
//! Validation is exhaustive — Latin square, identity, associativity — and
//! every rejection carries the 1-based line number of the offending row.

use thiserror::Error;

use crate::group::{self, FiniteGroup, TableDefect, MAX_ORDER};

#[derive(Debug, Error)]
pub enum CayleyError {
    #[error("table contains no rows")]
    Empty,
    #[error("table order {order} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: table already has all {expected} rows")]
    TooManyRows { line: usize, expected: usize },
    #[error("table ended after {found} of {expected} rows")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}, column {column}: '{text}' is not a valid element index")]
    BadEntry {
        line: usize,
        column: usize,
        text: String,
    },
    #[error("line {line}, column {column}: entry {value} is outside 0..{order}")]
    EntryOutOfRange {
        line: usize,
        column: usize,
        value: usize,
        order: usize,
    },
    #[error("line {line}: value {value} appears twice in the row (not a Latin square)")]
    RowRepeats { line: usize, value: usize },
    #[error("line {line}: value {value} appears twice in column {column} (not a Latin square)")]
    ColumnRepeats {
        column: usize,
        line: usize,
        value: usize,
    },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("line {line}: associativity fails for the triple ({i},{j},{k})")]
    NotAssociative {
        line: usize,
        i: usize,
        j: usize,
        k: usize,
    },
}

/// Parses and fully validates a Cayley table, returning the group with its
/// identity relocated to index 0.
pub fn parse_cayley_csv(text: &str) -> Result<FiniteGroup, CayleyError> {
    // Data rows paired with their physical 1-based line numbers.
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(n) = width {
            if rows.len() == n {
                return Err(CayleyError::TooManyRows {
                    line: line_no,
                    expected: n,
                });
            }
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let n = *width.get_or_insert(cells.len());
        if n > MAX_ORDER {
            return Err(CayleyError::OrderTooLarge { order: n });
        }
        if cells.len() != n {
            return Err(CayleyError::RaggedRow {
                line: line_no,
                expected: n,
                found: cells.len(),
            });
        }
        let mut row = Vec::with_capacity(n);
        for (c, cell) in cells.iter().enumerate() {
            let value: usize = cell.parse().map_err(|_| CayleyError::BadEntry {
                line: line_no,
                column: c + 1,
                text: (*cell).to_string(),
            })?;
            if value >= n {
                return Err(CayleyError::EntryOutOfRange {
                    line: line_no,
                    column: c + 1,
                    value,
                    order: n,
                });
            }
            row.push(value);
        }
        rows.push((line_no, row));
    }

    let n = width.ok_or(CayleyError::Empty)?;
    if rows.len() < n {
        return Err(CayleyError::MissingRows {
            expected: n,
            found: rows.len(),
        });
    }

    // Latin-square checks in file coordinates, so errors cite real lines.
    let mut seen = vec![false; n];
    for (line, row) in &rows {
        seen.iter_mut().for_each(|s| *s = false);
        for &v in row {
            if seen[v] {
                return Err(CayleyError::RowRepeats {
                    line: *line,
                    value: v,
                });
            }
            seen[v] = true;
        }
    }
    for c in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for (line, row) in &rows {
            let v = row[c];
            if seen[v] {
                return Err(CayleyError::ColumnRepeats {
                    column: c + 1,
                    line: *line,
                    value: v,
                });
            }
            seen[v] = true;
        }
    }

    let flat: Vec<usize> = rows.iter().flat_map(|(_, r)| r.iter().copied()).collect();
    let e = (0..n)
        .find(|&e| (0..n).all(|j| flat[e * n + j] == j && flat[j * n + e] == j))
        .ok_or(CayleyError::NoIdentity)?;

    match group::check_associative(n, &flat) {
        Ok(()) => {}
        Err(TableDefect::NotAssociative { i, j, k }) => {
            return Err(CayleyError::NotAssociative {
                line: rows[i].0,
                i,
                j,
                k,
            });
        }
        Err(defect) => unreachable!("unexpected defect from associativity check: {defect}"),
    }

    // Swap the identity to index 0. The swap is an involution, so it is its
    // own inverse when renaming table entries.
    let sigma = |i: usize| {
        if i == 0 {
            e
        } else if i == e {
            0
        } else {
            i
        }
    };
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = sigma(flat[sigma(i) * n + sigma(j)]);
        }
    }
    let labels = (0..n).map(|i| format!("g{}", sigma(i))).collect();
    Ok(FiniteGroup::from_validated_table(n, table, labels))
}
