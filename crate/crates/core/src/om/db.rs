//! Streaming reader for order-type databases: one chirotope per line.

use std::io::BufRead;

use super::chirotope::{BasisOrder, Chirotope};
use crate::error::{KneserError, Result};

/// One database entry; `index` is its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTypeRecord {
    pub index: usize,
    pub chirotope: Chirotope,
    pub uniform: bool,
}

/// Parses one database line (validation is alphabet and length only).
pub fn parse_record(line: &str, index: usize, n: usize, r: usize, order: BasisOrder) -> Result<OrderTypeRecord> {
    let text = line.trim_end_matches(['\r', '\n']).trim();
    let chirotope = Chirotope::from_sign_string(n, r, text, order)
        .map_err(|e| KneserError::Parse { line: index, message: e.to_string() })?;
    Ok(OrderTypeRecord { index, uniform: chirotope.is_uniform(), chirotope })
}

/// Lazily parses a database stream. Each item is a record or the error for
/// that line; I/O errors end the stream after being reported.
pub fn parse_chirotope_db<R: BufRead>(
    reader: R,
    n: usize,
    r: usize,
    order: BasisOrder,
) -> impl Iterator<Item = Result<OrderTypeRecord>> {
    let mut failed = false;
    reader.lines().enumerate().map_while(move |(i, line)| {
        if failed {
            return None;
        }
        Some(match line {
            Ok(l) => parse_record(&l, i + 1, n, r, order),
            Err(e) => {
                failed = true;
                Err(KneserError::Io(e))
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_stream() {
        assert_eq!(parse_chirotope_db(&b""[..], 7, 4, BasisOrder::Lex).count(), 0);
    }

    #[test]
    fn wrong_length_reports_line() {
        let data = format!("{}\n{}\n", "+".repeat(35), "+".repeat(34));
        let out: Vec<_> = parse_chirotope_db(data.as_bytes(), 7, 4, BasisOrder::Lex).collect();
        assert!(out[0].as_ref().is_ok_and(|r| r.index == 1 && r.uniform));
        assert!(matches!(out[1], Err(KneserError::Parse { line: 2, .. })));
    }

    #[test]
    fn crlf_and_zeros() {
        let line = format!("0{}\r\n", "-".repeat(34));
        let rec = parse_chirotope_db(line.as_bytes(), 7, 4, BasisOrder::Lex).next().unwrap().unwrap();
        assert!(!rec.uniform);
    }
}
