//! Graph products and the special constructions used by the checked claims.
//!
//! Product vertex `(g, h)` always gets index `g * n(H) + h`.

use crate::error::{Error, Result};
use crate::graph::{complete, Graph};
use crate::vertex_set::{Bits, MAX_VERTICES};

fn product_order(g: &Graph, h: &Graph) -> Result<usize> {
    let order = g.n() * h.n();
    if order > MAX_VERTICES {
        Err(Error::TooManyVertices(order))
    } else {
        Ok(order)
    }
}

/// `G ∘ H`: `(g1,h1) ~ (g2,h2)` iff `g1g2 ∈ E(G)`, or `g1 = g2` and `h1h2 ∈ E(H)`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let order = product_order(g, h)?;
    let k = h.n();
    let block = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut adj = vec![0u64; order];
    for a in 0..g.n() {
        let outer = Bits(g.adj()[a]).fold(0u64, |acc, b| acc | block << (b * k));
        for x in 0..k {
            adj[a * k + x] = outer | h.adj()[x] << (a * k);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `G □ H`: `(g,h) ~ (g',h')` iff `gg' ∈ E(G)` and `h = h'`, or `g = g'` and `hh' ∈ E(H)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let order = product_order(g, h)?;
    let k = h.n();
    let mut adj = vec![0u64; order];
    for a in 0..g.n() {
        for x in 0..k {
            let across = Bits(g.adj()[a]).fold(0u64, |acc, b| acc | 1 << (b * k + x));
            adj[a * k + x] = across | h.adj()[x] << (a * k);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn complement(g: &Graph) -> Graph {
    let full = g.full_bits();
    let adj = (0..g.n()).map(|v| !g.adj()[v] & full & !(1 << v)).collect();
    Graph::from_adjacency_unchecked(adj)
}

/// Number of pendants hung on each support vertex of the hat graph:
/// `⌈log₂(n + 1)⌉ + 1`.
pub fn hat_pendants(n: usize) -> usize {
    ceil_log2(n + 1) + 1
}

/// `⌈log₂ x⌉` for `x ≥ 1`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// The hat graph `Ĝ`: add a universal vertex `w` (index `n(G)`), then hang
/// `⌈log₂(n(G)+1)⌉ + 1` pendants on every vertex of `V(G) ∪ {w}`, in that
/// vertex order.
pub fn hat_construction(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "hat construction needs n(G) >= 3, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = hat_pendants(n);
    let order = (n + 1) * (1 + p);
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices(order));
    }
    let mut out = Graph::from_edges(order, g.edges())?;
    let w = n;
    for v in 0..n {
        out.add_edge(v, w)?;
    }
    let mut next = n + 1;
    for support in 0..=n {
        for _ in 0..p {
            out.add_edge(support, next)?;
            next += 1;
        }
    }
    debug_assert_eq!(next, order);
    Ok(out)
}

/// `G_{m,n}`: disjoint `K_m` on `0..m` (the `u_i`) and `K_n` on `m..m+n`
/// (the `v_i`), joined by `u_1v_1` and `u_2v_2`.
pub fn bridge_graph(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n < 3 {
        return Err(Error::InvalidParameter(format!(
            "bridge graph needs m, n >= 3, got {m}, {n}"
        )));
    }
    if m + n > MAX_VERTICES {
        return Err(Error::TooManyVertices(m + n));
    }
    let km = complete(m)?;
    let kn = complete(n)?;
    let edges = km
        .edges()
        .into_iter()
        .chain(kn.edges().into_iter().map(|(a, b)| (a + m, b + m)))
        .chain([(0, m), (1, m + 1)]);
    Graph::from_edges(m + n, edges)
}
