//! Line-based rotation systems.
//!
//! ```text
//! # comment
//! 0: 1 4 2 5 3 7
//! ...
//! cross: (0,4)x(1,5)
//! ```
//!
//! Each vertex line lists every neighbour once in counter-clockwise order.
//! Edges named in a `cross` line are red, all others black.

use std::collections::HashSet;
use std::fmt::Write;

use optimal1p::embedding::Color;
use optimal1p::{EdgeKey, EmbeddedGraph, VertexId};

use super::ParseError;

pub fn write(emb: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for v in emb.vertices() {
        let rot: Vec<String> = emb.rotation[v as usize].iter().map(|u| u.to_string()).collect();
        writeln!(out, "{v}: {}", rot.join(" ")).unwrap();
    }
    let mut cross: Vec<_> = emb
        .crossings
        .iter()
        .map(|&(e, f)| if e <= f { (e, f) } else { (f, e) })
        .collect();
    cross.sort_unstable();
    for (e, f) in cross {
        writeln!(out, "cross: ({},{})x({},{})", e.lo(), e.hi(), f.lo(), f.hi()).unwrap();
    }
    out
}

// A tiny cursor over one line, for the crossing syntax.
struct Cursor<'a> {
    line: &'a str,
    pos: usize,
    lineno: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.lineno, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.line[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.line[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn vertex(&mut self) -> Result<VertexId, ParseError> {
        self.skip_ws();
        let rest = &self.line[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        let v = rest[..len].parse().map_err(|_| self.err("expected a vertex id"))?;
        self.pos += len;
        Ok(v)
    }

    fn edge(&mut self) -> Result<EdgeKey, ParseError> {
        self.expect('(')?;
        let a = self.vertex()?;
        self.expect(',')?;
        let b = self.vertex()?;
        self.expect(')')?;
        if a == b {
            return Err(self.err("self-loop in crossing"));
        }
        Ok(EdgeKey::new(a, b))
    }
}

pub fn parse(text: &str) -> Result<EmbeddedGraph, ParseError> {
    let mut emb = EmbeddedGraph::default();
    let mut red = HashSet::new();
    let mut listed = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(ParseError::new(lineno, line.len() + 1, "expected `:`"));
        };
        let key = line[..colon].trim();
        if key == "cross" {
            let mut c = Cursor {
                line,
                pos: colon + 1,
                lineno,
            };
            let e = c.edge()?;
            c.expect('x')?;
            let f = c.edge()?;
            c.skip_ws();
            if c.pos != line.len() {
                return Err(c.err("trailing characters"));
            }
            for k in [e, f] {
                if !red.insert(k) {
                    return Err(ParseError::new(lineno, colon + 2, format!("edge ({},{}) crossed twice", k.lo(), k.hi())));
                }
            }
            emb.crossings.push((e, f));
            continue;
        }
        let start = line.len() - line.trim_start().len() + 1;
        let v: VertexId = key
            .parse()
            .map_err(|_| ParseError::new(lineno, start, format!("expected a vertex id or `cross`, found `{key}`")))?;
        if !listed.insert(v) {
            return Err(ParseError::new(lineno, start, format!("vertex {v} listed twice")));
        }
        if emb.rotation.len() <= v as usize {
            emb.rotation.resize(v as usize + 1, Vec::new());
        }
        let rest = &line[colon + 1..];
        for t in rest.split_whitespace() {
            let col = t.as_ptr() as usize - line.as_ptr() as usize + 1;
            let u: VertexId = t
                .parse()
                .map_err(|_| ParseError::new(lineno, col, format!("expected a vertex id, found `{t}`")))?;
            if u == v {
                return Err(ParseError::new(lineno, col, "self-loop"));
            }
            emb.rotation[v as usize].push(u);
        }
    }
    for (v, rot) in emb.rotation.iter().enumerate() {
        for &u in rot {
            emb.color.insert(EdgeKey::new(v as VertexId, u), Color::Black);
        }
    }
    for k in red {
        emb.color.insert(k, Color::Red);
    }
    Ok(emb)
}
