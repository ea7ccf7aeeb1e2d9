//! Plain-text matrix format.
//!
//! ```text
//! n k q p m
//! a11 a12 ... a1n
//! ...
//! ak1 ak2 ... akn
//! ```
//!
//! `n` is the number of columns, `k` the number of rows, entries are decimal
//! element encodings. A stream may hold several matrices; blank lines and
//! lines starting with `#` are skipped.

use std::fmt::Write as _;

use crate::gf::Field;

use super::{LinalgError, Matrix, Subspace};

impl Matrix {
    pub fn to_text(&self) -> String {
        let f = self.field();
        let mut s = format!("{} {} {} {} {}\n", self.cols(), self.rows(), f.q(), f.p(), f.m());
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

impl Subspace {
    /// Text form of the canonical basis.
    pub fn to_text(&self) -> String {
        self.basis().to_text()
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> LinalgError {
    LinalgError::Parse { line, msg: msg.into() }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<u64>, LinalgError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_err(line_no, format!("not an integer: {t:?}")))
        })
        .collect()
}

/// Parses every matrix in `input`.
pub fn parse_matrices(input: &str) -> Result<Vec<Matrix>, LinalgError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((no, header)) = lines.next() {
        let h = numbers(no, header)?;
        let [n, k, q, p, m] = h[..] else {
            return Err(parse_err(no, "header must be \"n k q p m\""));
        };
        let field = Field::new(p as u32, m as u32)?;
        if field.q() as u64 != q {
            return Err(parse_err(no, format!("q = {q} but p^m = {}", field.q())));
        }
        let mut rows = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let (rno, line) = lines.next().ok_or_else(|| parse_err(no, "missing matrix rows"))?;
            let row = numbers(rno, line)?;
            if row.len() as u64 != n {
                return Err(parse_err(rno, format!("expected {n} entries, found {}", row.len())));
            }
            rows.push(row.into_iter().map(|v| v as u32).collect::<Vec<_>>());
        }
        out.push(Matrix::from_rows(&field, n as usize, &rows)?);
    }
    Ok(out)
}

/// Parses exactly one matrix.
pub fn parse_matrix(input: &str) -> Result<Matrix, LinalgError> {
    let mut all = parse_matrices(input)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(parse_err(0, format!("expected one matrix, found {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Elem;

    #[test]
    fn exact_layout() {
        let f = Field::new(2, 2).unwrap();
        let m = Matrix::from_rows(&f, 3, &[[1, 0, 3], [0, 1, 2]]).unwrap();
        assert_eq!(m.to_text(), "3 2 4 2 2\n1 0 3\n0 1 2\n");
        assert_eq!(parse_matrix(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn zero_rows_and_comments() {
        let f = Field::new(3, 1).unwrap();
        let z = Matrix::zeros(&f, 0, 4);
        let text = format!(
            "# empty\n{}\n# next\n{}",
            z.to_text(),
            Matrix::identity(&f, 2).to_text()
        );
        let all = parse_matrices(&text).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], z);
        assert_eq!(all[1].get(1, 1), Elem(1));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_matrix("3 1 2 2 1\n1 0\n").is_err());
        assert!(parse_matrix("2 1 4 2 1\n1 0\n").is_err());
        assert!(parse_matrix("2 1 3 3 1\n1 5\n").is_err());
        assert!(parse_matrix("2 1 3\n1 0\n").is_err());
        assert!(parse_matrix("2 2 2 2 1\n1 0\n").is_err());
    }
}
