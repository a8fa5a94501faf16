use optimal1p::{DynamicGraph, Error};

use super::ParseError;

// Splits a line into tokens with their 1-based columns; `#` starts a comment.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

fn number(lineno: usize, col: usize, t: &str) -> Result<u64, ParseError> {
    t.parse()
        .map_err(|_| ParseError::new(lineno, col, format!("expected a non-negative integer, found `{t}`")))
}

pub fn parse(text: &str) -> Result<DynamicGraph, ParseError> {
    let mut header = None;
    let mut g = DynamicGraph::new();
    let mut seen = 0u64;
    let mut last = (1, 1);
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let toks: Vec<_> = tokens(line).collect();
        if toks.is_empty() {
            continue;
        }
        last = (lineno, line.len() + 1);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(line.len() + 1, |t| t.0);
            return Err(ParseError::new(lineno, col, "expected exactly two integers"));
        }
        let a = number(lineno, toks[0].0, toks[0].1)?;
        let b = number(lineno, toks[1].0, toks[1].1)?;
        let Some((n, m)) = header else {
            if a > u32::MAX as u64 {
                return Err(ParseError::new(lineno, toks[0].0, "too many vertices"));
            }
            g = DynamicGraph::with_vertices(a as usize);
            header = Some((a, b));
            continue;
        };
        if seen == m {
            return Err(ParseError::new(lineno, toks[0].0, format!("more than the {m} edges announced")));
        }
        for (v, col) in [(a, toks[0].0), (b, toks[1].0)] {
            if v >= n {
                return Err(ParseError::new(lineno, col, format!("vertex {v} out of range for n = {n}")));
            }
        }
        g.add_edge(a as u32, b as u32).map_err(|e| {
            let msg = match e {
                Error::SelfLoop(v) => format!("self-loop at {v}"),
                Error::DuplicateEdge(u, v) => format!("duplicate edge ({u}, {v})"),
                e => e.to_string(),
            };
            ParseError::new(lineno, toks[0].0, msg)
        })?;
        seen += 1;
    }
    match header {
        None => Err(ParseError::new(last.0, last.1, "missing `n m` header")),
        Some((_, m)) if seen < m => Err(ParseError::new(
            last.0,
            last.1,
            format!("expected {m} edges, found {seen}"),
        )),
        Some(_) => Ok(g),
    }
}

pub fn write(g: &DynamicGraph) -> String {
    let (h, _) = g.compacted();
    let mut out = format!("{} {}\n", h.n(), h.m());
    for e in h.sorted_edges() {
        out += &format!("{} {}\n", e.lo(), e.hi());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_comments_and_blank_lines() {
        let g = parse("# triangle\n3 3\n0 1\n\n1 2 # last two\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn positions_in_errors() {
        let e = parse("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse("3 1\n0 5\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(parse("3 2\n0 1\n").unwrap_err().message.contains("expected 2 edges"));
        assert!(parse("3 1\n0 1\n1 2\n").is_err());
        assert!(parse("3 1\n1 1\n").unwrap_err().message.contains("self-loop"));
        assert!(parse("").is_err());
    }
}
