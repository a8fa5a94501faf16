use optimal1p::DynamicGraph;

use super::ParseError;

const HEADER: &str = ">>graph6<<";

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut v = vec![126];
        v.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        v
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
        v
    }
}

/// Bit `(i, j)` for `i < j` sits at position `j * (j - 1) / 2 + i`.
pub fn write(g: &DynamicGraph) -> String {
    let (h, _) = g.compacted();
    let n = h.n();
    let mut bits = vec![0u8; (n * n.saturating_sub(1) / 2).div_ceil(6)];
    for e in h.edges() {
        let (i, j) = (e.lo() as usize, e.hi() as usize);
        let p = j * (j - 1) / 2 + i;
        bits[p / 6] |= 1 << (5 - p % 6);
    }
    let mut out = size_bytes(n);
    out.extend(bits.iter().map(|b| b + 63));
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse(text: &str) -> Result<DynamicGraph, ParseError> {
    let (lineno, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::new(1, 1, "empty graph6 input"))?;
    let lineno = lineno + 1;
    let (offset, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.trim_end()),
        None => (0, line.trim_end()),
    };
    let bytes = body.as_bytes();
    let err = |i: usize, msg: &str| ParseError::new(lineno, offset + i + 1, msg);
    if let Some(i) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(i, "byte outside the graph6 range 63..=126"));
    }
    let take = |from: usize, k: usize| -> Result<usize, ParseError> {
        if bytes.len() < from + k {
            return Err(err(bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[from..from + k].iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, start) = match bytes.first() {
        None => return Err(err(0, "missing vertex count")),
        Some(&126) if bytes.get(1) == Some(&126) => (take(2, 6)?, 8),
        Some(&126) => (take(1, 3)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > u32::MAX as usize {
        return Err(err(0, "too many vertices"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != need {
        return Err(err(
            start + data.len().min(need),
            &format!("expected {need} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    let mut g = DynamicGraph::with_vertices(n);
    let (mut i, mut j) = (0usize, 1usize);
    for p in 0..nbits {
        if (data[p / 6] - 63) >> (5 - p % 6) & 1 == 1 {
            g.add_edge(i as u32, j as u32).expect("distinct pairs");
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    if nbits % 6 != 0 && (data[need - 1] - 63) & ((1 << (6 - nbits % 6)) - 1) != 0 {
        return Err(err(start + need - 1, "nonzero padding bits"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(u32, u32)]) -> DynamicGraph {
        DynamicGraph::from_edges(n, e).unwrap()
    }

    #[test]
    fn published_examples() {
        // The 5-vertex example from the format description.
        let g = graph(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write(&g), "DQc\n");
        assert_eq!(write(&graph(0, &[])), "?\n");
        assert_eq!(write(&graph(2, &[(0, 1)])), "A_\n");
        assert_eq!(parse("DQc").unwrap().sorted_edges(), g.sorted_edges());
    }

    #[test]
    fn long_size_field() {
        let n = 70;
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let g = graph(n as usize, &edges);
        let s = write(&g);
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse(&s).unwrap().sorted_edges(), g.sorted_edges());
    }

    #[test]
    fn header_and_errors() {
        assert_eq!(parse(">>graph6<<A_\n").unwrap().m(), 1);
        assert!(parse("A").is_err());
        assert!(parse("A`").is_err());
        let e = parse("D Qc").unwrap_err();
        assert_eq!(e.column, 2);
    }
}
