//! Text format for codes.
//!
//! ```text
//! q m n k c_0 ... c_m
//! g_00 g_01 ... g_0(n-1)
//! ...
//! ```
//!
//! The header names the field by its modulus coefficients (low to high), then
//! k rows of n element integers follow. Lines starting with `#` are comments;
//! a `# codebook` comment marks the rows as an explicit codeword list.

use super::{Codebook, LinearCode};
use crate::error::{Error, Result};
use crate::ffield::Field;

pub const CODEBOOK_MARKER: &str = "# codebook";

/// Either kind of code a file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Linear(LinearCode),
    Book(Codebook),
}

fn nums(line: &str) -> Result<Vec<u32>> {
    line.split_whitespace().map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))).collect()
}

pub fn parse(text: &str) -> Result<CodeFile> {
    let is_book = text.lines().any(|l| l.trim() == CODEBOOK_MARKER);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = nums(lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?)?;
    if header.len() < 4 {
        return Err(Error::Parse("header needs q m n k".into()));
    }
    let (q, m, n, k) = (header[0], header[1], header[2] as usize, header[3] as usize);
    let modulus = if header.len() > 4 { Some(&header[4..]) } else { None };
    let field = Field::new(q, m, modulus)?;
    let rows = lines.map(nums).collect::<Result<Vec<_>>>()?;
    if rows.len() != k {
        return Err(Error::Parse(format!("expected {k} rows, found {}", rows.len())));
    }
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::Parse(format!("row of length {} in a length-{n} code", r.len())));
    }
    if is_book {
        Ok(CodeFile::Book(Codebook::new(&field, n, rows)?))
    } else {
        Ok(CodeFile::Linear(LinearCode::new(&field, n, rows)?))
    }
}

fn header(field: &Field, n: usize, k: usize) -> String {
    let modulus: Vec<String> = field.modulus().iter().map(u32::to_string).collect();
    format!("{} {} {} {} {}\n", field.q(), field.m(), n, k, modulus.join(" "))
}

fn rows(out: &mut String, rows: &[Vec<u32>]) {
    for r in rows {
        let line: Vec<String> = r.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

pub fn format_linear(c: &LinearCode) -> String {
    let mut out = header(c.field(), c.n(), c.k());
    rows(&mut out, c.generator());
    out
}

pub fn format_codebook(b: &Codebook) -> String {
    let mut out = format!("{CODEBOOK_MARKER}\n");
    out.push_str(&header(b.field(), b.n(), b.len()));
    rows(&mut out, b.words());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = Field::gf(2, 2);
        let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
        let text = format_linear(&c);
        assert_eq!(text, "2 2 2 1 1 1 1\n1 2\n");
        assert_eq!(parse(&text).unwrap(), CodeFile::Linear(c));
        let b = Codebook::new(&f, 2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(parse(&format_codebook(&b)).unwrap(), CodeFile::Book(b));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("2 2 2 1\n1 2 3\n").is_err());
        assert!(parse("2 2 2 2\n1 2\n").is_err());
        assert!(parse("2 2 2 1 1 0 1\n1 2\n").is_err());
        assert!(parse("2 2 2 1\n1 x\n").is_err());
    }
}
