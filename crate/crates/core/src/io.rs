//! graph6 and plain edge-list codecs.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! (0-indexed, whitespace separated).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => from_graph6(text),
        Format::EdgeList => from_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => to_graph6(g).into_bytes(),
        Format::EdgeList => to_edge_list(g).into_bytes(),
    }
}

/// Guesses the format from the first non-blank byte: edge lists start with
/// a decimal digit, graph6 never does (its bytes are in `63..=126`).
pub fn detect_format(text: &[u8]) -> Format {
    match text.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b) if b.is_ascii_digit() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn parse_auto(text: &[u8]) -> Result<Graph> {
    parse_graph(text, detect_format(text))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    if text.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6: byte outside 63..=126".into()));
    }
    let (n, body) = match text {
        [] => return Err(Error::Parse("graph6: empty input".into())),
        [126, 126, ..] => return Err(Error::TooManyVertices(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("graph6: truncated size field".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6: expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn from_edge_list(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|_| Error::Parse("edge list is not utf-8".into()))?;
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing header".into()))?;
    let nums = parse_pair(header, "header")?;
    let (n, m) = nums;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for line in lines {
        let (u, v) = parse_pair(line, "edge")?;
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Parse(format!(
            "edge list: header announces {m} edges, found {count}"
        )));
    }
    Ok(g)
}

fn parse_pair(line: &str, what: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("edge list: malformed {what} line {line:?}")));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("edge list: bad integer {s:?} in {what} line")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}
