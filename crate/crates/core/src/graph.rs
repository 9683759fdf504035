//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{full_mask, Bits, VertexSet, MAX_VERTICES};

/// Neighborhood flavour: open `N(v)` or closed `N[v] = N(v) ∪ {v}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nbhd {
    Open,
    Closed,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.check_symmetric());
        g
    }

    fn check_symmetric(&self) -> bool {
        (0..self.n)
            .all(|v| self.adj[v] >> v & 1 == 0 && Bits(self.adj[v]).all(|u| u < self.n && self.adj[u] >> v & 1 == 1))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| Bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adjacency words, `adj()[v]` = bits of `N(v)`.
    #[inline]
    pub fn adj(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub(crate) fn full_bits(&self) -> u64 {
        full_mask(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `δ(G)`; zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(self.n, self.adj[v]))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits_unchecked(self.n, self.adj[v] | 1 << v))
    }

    pub fn neighborhood_of_set(&self, set: &VertexSet, mode: Nbhd) -> Result<VertexSet> {
        if set.universe() != self.n {
            return Err(Error::UniverseMismatch {
                left: set.universe(),
                right: self.n,
            });
        }
        Ok(VertexSet::from_bits_unchecked(self.n, self.nbhd_bits(set.bits(), mode)))
    }

    #[inline]
    pub(crate) fn nbhd_bits(&self, set: u64, mode: Nbhd) -> u64 {
        let open = Bits(set).fold(0, |acc, v| acc | self.adj[v]);
        match mode {
            Nbhd::Open => open,
            Nbhd::Closed => open | set,
        }
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|&a| a != 0)
    }

    pub(crate) fn require_isolate_free(&self) -> Result<()> {
        match self.adj.iter().position(|&a| a == 0) {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = self.nbhd_bits(frontier, Nbhd::Open) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.full_bits()
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// increasing order of the original labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        if keep.universe() != self.n {
            return Err(Error::UniverseMismatch {
                left: keep.universe(),
                right: self.n,
            });
        }
        let old: Vec<usize> = keep.iter().collect();
        let adj = old
            .iter()
            .map(|&u| {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != self.full_bits() {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = Bits(self.adj[u]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Standard graph families accepted by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    CyclePower,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "empty" => Family::Empty,
            "cycle_power" => Family::CyclePower,
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        })
    }
}

/// Builds a member of a standard family.
///
/// `params` is `[n]` for path, cycle, complete and empty; `[k]` for the star
/// `K_{1,k}` (centre 0); `[N, n]` for the cycle power `C_N^n`.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let want = if family == Family::CyclePower { 2 } else { 1 };
    if params.len() != want {
        return Err(Error::InvalidParameter(format!(
            "{family:?} takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    let p = params[0];
    let bad = |msg: &str| Err(Error::InvalidParameter(format!("{family:?}: {msg}")));
    match family {
        Family::Path => {
            if p < 1 {
                return bad("n >= 1 required");
            }
            path(p)
        }
        Family::Cycle => {
            if p < 3 {
                return bad("n >= 3 required");
            }
            cycle(p)
        }
        Family::Complete => {
            if p < 1 {
                return bad("n >= 1 required");
            }
            complete(p)
        }
        Family::Empty => Graph::empty(p),
        Family::Star => {
            if p < 1 {
                return bad("k >= 1 required");
            }
            star(p)
        }
        Family::CyclePower => {
            let k = params[1];
            if p < 3 || k < 1 {
                return bad("N >= 3 and n >= 1 required");
            }
            cycle_power(p, k)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// `C_N^n`: `i ~ j` iff the circular distance between them is at most `n`.
pub fn cycle_power(big_n: usize, n: usize) -> Result<Graph> {
    if big_n < 3 || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "cycle power needs N >= 3, n >= 1, got N={big_n}, n={n}"
        )));
    }
    Graph::from_edges(
        big_n,
        (0..big_n).flat_map(|u| {
            (u + 1..big_n).filter_map(move |v| {
                let d = (v - u).min(big_n - (v - u));
                (d <= n).then_some((u, v))
            })
        }),
    )
}
