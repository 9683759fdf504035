//! Exhaustive generation of small connected graphs up to isomorphism.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! the connected graphs of order `n` are exactly the one-vertex extensions of
//! the connected graphs of order `n - 1`. Extensions are deduplicated by a
//! canonical labelling: vertices are split into classes by an isomorphism
//! invariant and the labelling with the smallest adjacency encoding among
//! all class-respecting orders wins.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::vertex_set::Bits;

/// Largest order accepted by [`canonical_form`]; the search is factorial in
/// the size of the invariant classes.
pub const MAX_CANONICAL_ORDER: usize = 11;

fn vertex_invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = Bits(g.adj()[v]).map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Upper-triangle adjacency bits in graph6 order, first pair most significant.
fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        let row = g.adj()[order[j]];
        for &oi in &order[..j] {
            code = code << 1 | (row >> oi & 1);
        }
    }
    code
}

struct Canon<'a> {
    g: &'a Graph,
    classes: Vec<Vec<usize>>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    fn permute_class(&mut self, class: usize, remaining: &mut Vec<usize>) {
        if remaining.is_empty() {
            self.next_class(class + 1);
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.swap_remove(i);
            self.order.push(v);
            self.permute_class(class, remaining);
            self.order.pop();
            remaining.push(v);
            let last = remaining.len() - 1;
            remaining.swap(i, last);
        }
    }

    fn next_class(&mut self, class: usize) {
        if class == self.classes.len() {
            let code = encode(self.g, &self.order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let mut members = self.classes[class].clone();
        self.permute_class(class, &mut members);
    }
}

/// The canonically relabelled copy of `g`: isomorphic graphs map to
/// identical graphs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical form supports at most {MAX_CANONICAL_ORDER} vertices, got {n}"
        )));
    }
    let mut keyed: Vec<((usize, Vec<usize>), usize)> = (0..n).map(|v| (vertex_invariant(g, v), v)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *key {
            classes.last_mut().expect("non-empty").push(*v);
        } else {
            classes.push(vec![*v]);
        }
    }
    let mut canon = Canon {
        g,
        classes,
        order: Vec::with_capacity(n),
        best: None,
    };
    canon.next_class(0);
    let order = canon.best.map(|(_, o)| o).unwrap_or_default();
    // order[i] is the old label of new vertex i
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permute(&perm)
}

/// All connected graphs of order `n` up to isomorphism, as canonical forms
/// sorted by graph6 string.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "connected graphs need 1 <= n <= {MAX_CANONICAL_ORDER}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen = FxHashSet::default();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 1u64..1 << (k - 1) {
                let mut h = Graph::from_edges(k, g.edges())?;
                for u in Bits(nbrs) {
                    h.add_edge(u, k - 1)?;
                }
                let c = canonical_form(&h)?;
                if seen.insert(to_graph6(&c)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level.sort_by_cached_key(to_graph6);
    Ok(level)
}

/// Connected graphs of every order in `min..=max`, smallest order first.
pub fn connected_graphs_up_to(min: usize, max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in min.max(1)..=max {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn relabelled_copies_share_a_canonical_form() {
        let p = path(6).unwrap();
        let q = p.permute(&[3, 0, 5, 1, 4, 2]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert_ne!(canonical_form(&p).unwrap(), canonical_form(&cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn every_generated_graph_is_connected() {
        for g in connected_graphs(6).unwrap() {
            assert!(g.is_connected() && g.n() == 6);
        }
    }
}
