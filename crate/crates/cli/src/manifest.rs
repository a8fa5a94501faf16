//! Tab-separated index of generated files.
//!
//! One header line, then `file format n m provenance` per graph. The
//! provenance column is free text describing how the graph was made.

use std::fmt::Write;

use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub file: String,
    pub format: String,
    pub n: usize,
    pub m: usize,
    pub provenance: String,
}

pub const HEADER: &str = "file\tformat\tn\tm\tprovenance";

pub fn write(entries: &[Entry]) -> String {
    let mut out = format!("{HEADER}\n");
    for e in entries {
        writeln!(out, "{}\t{}\t{}\t{}\t{}", e.file, e.format, e.n, e.m, e.provenance).unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Vec<Entry>, ParseError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == HEADER => {}
        _ => return Err(ParseError::new(1, 1, "missing manifest header")),
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.splitn(5, '\t').collect();
        if cols.len() != 5 {
            return Err(ParseError::new(i + 1, line.len() + 1, "expected five tab-separated columns"));
        }
        let num = |c: usize| {
            cols[c].parse::<usize>().map_err(|_| {
                let col = cols[..c].iter().map(|s| s.len() + 1).sum::<usize>() + 1;
                ParseError::new(i + 1, col, "expected an integer")
            })
        };
        out.push(Entry {
            file: cols[0].to_string(),
            format: cols[1].to_string(),
            n: num(2)?,
            m: num(3)?,
            provenance: cols[4].to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let e = vec![Entry {
            file: "g0.edges".into(),
            format: "edgelist".into(),
            n: 12,
            m: 40,
            provenance: "xw k=5".into(),
        }];
        assert_eq!(parse(&write(&e)).unwrap(), e);
        assert_eq!(parse("file\tformat\tn\tm\tprovenance\na\tb\tx\t1\tp\n").unwrap_err().column, 5);
    }
}
