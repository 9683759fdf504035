//! Exact domination and total domination numbers, support vertices, and the
//! pendant-count hypothesis used by the `γ_g = 2γ − 1` check.
//!
//! Both numbers come from the same branch-and-bound: pick the undominated
//! vertex with the fewest candidate dominators and branch over those
//! candidates. Optimal witnesses are canonicalised to the one with the
//! smallest bit encoding.

use crate::constructions::ceil_log2;
use crate::error::{Error, Result};
use crate::graph::{Graph, Nbhd};
use crate::vertex_set::{Bits, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominationKind {
    Dominating,
    TotalDominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub kind: DominationKind,
    pub set: VertexSet,
    pub size: usize,
}

impl DominationCertificate {
    /// Whether `set` really is a (total) dominating set of `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mode = match self.kind {
            DominationKind::Dominating => Nbhd::Closed,
            DominationKind::TotalDominating => Nbhd::Open,
        };
        self.size == self.set.len()
            && g.neighborhood_of_set(&self.set, mode)
                .map(|s| s.is_full())
                .unwrap_or(false)
    }
}

/// `dominators[u]` = vertices whose neighbourhood (closed or open) contains `u`.
struct Cover<'a> {
    dominators: &'a [u64],
    reach: Vec<u64>,
}

impl Cover<'_> {
    /// Does some set `S ⊆ allowed` with `|S| ≤ budget` cover `need`?
    fn search(&self, need: u64, allowed: u64, budget: usize) -> Option<u64> {
        if need == 0 {
            return Some(0);
        }
        if budget == 0 {
            return None;
        }
        let mut best_u = usize::MAX;
        let mut best_count = u32::MAX;
        let mut max_gain = 0;
        for u in Bits(need) {
            let c = (self.dominators[u] & allowed).count_ones();
            if c < best_count {
                best_count = c;
                best_u = u;
                if c == 0 {
                    return None;
                }
            }
        }
        for v in Bits(allowed) {
            max_gain = max_gain.max((self.reach[v] & need).count_ones());
        }
        if need.count_ones() > max_gain * budget as u32 {
            return None;
        }
        let mut cands: Vec<usize> = Bits(self.dominators[best_u] & allowed).collect();
        cands.sort_by_key(|&v| std::cmp::Reverse((self.reach[v] & need).count_ones()));
        let mut allowed = allowed;
        for v in cands {
            if let Some(s) = self.search(need & !self.reach[v], allowed & !(1 << v), budget - 1) {
                return Some(s | 1 << v);
            }
            // every cover containing v has already been ruled out
            allowed &= !(1 << v);
        }
        None
    }
}

fn minimum_cover(g: &Graph, kind: DominationKind) -> DominationCertificate {
    let mode = match kind {
        DominationKind::Dominating => Nbhd::Closed,
        DominationKind::TotalDominating => Nbhd::Open,
    };
    let reach: Vec<u64> = (0..g.n()).map(|v| g.nbhd_bits(1 << v, mode)).collect();
    // both neighbourhood relations are symmetric
    let cover = Cover {
        dominators: &reach,
        reach: reach.clone(),
    };
    let full = g.full_bits();
    let mut size = 0;
    while cover.search(full, full, size).is_none() {
        size += 1;
    }
    // smallest encoding: settle vertices from the top bit down
    let mut forced = 0u64;
    let mut allowed = full;
    for v in (0..g.n()).rev() {
        let without = allowed & !(1 << v);
        let need = full & !g.nbhd_bits(forced, mode);
        let budget = size - forced.count_ones() as usize;
        if cover.search(need, without & !forced, budget).is_some() {
            allowed = without;
        } else {
            forced |= 1 << v;
        }
    }
    debug_assert_eq!(forced.count_ones() as usize, size);
    DominationCertificate {
        kind,
        set: VertexSet::from_bits_unchecked(g.n(), forced),
        size,
    }
}

/// `γ(G)` with a witness.
pub fn domination_number(g: &Graph) -> Result<(usize, DominationCertificate)> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("domination number of the null graph".into()));
    }
    let cert = minimum_cover(g, DominationKind::Dominating);
    Ok((cert.size, cert))
}

/// `γ_t(G)` with a witness; requires an isolate-free graph.
pub fn total_domination_number(g: &Graph) -> Result<(usize, DominationCertificate)> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "total domination number of the null graph".into(),
        ));
    }
    g.require_isolate_free()?;
    let cert = minimum_cover(g, DominationKind::TotalDominating);
    Ok((cert.size, cert))
}

/// `Supp(G)`: vertices with at least one neighbour of degree 1.
pub fn support_vertices(g: &Graph) -> VertexSet {
    let leaves = (0..g.n())
        .filter(|&v| g.degree(v) == 1)
        .fold(0u64, |acc, v| acc | 1 << v);
    VertexSet::from_bits_unchecked(g.n(), g.nbhd_bits(leaves, Nbhd::Open))
}

pub fn has_supportive_dominating_set(g: &Graph) -> bool {
    let supp = support_vertices(g);
    g.nbhd_bits(supp.bits(), Nbhd::Closed) == g.full_bits()
}

/// Supportive dominating set plus at least `⌈log₂ γ(G)⌉ + 1` pendants on each
/// support vertex. Defined for connected graphs of order at least 3.
pub fn satisfies_pendant_theorem_hypothesis(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!("needs n(G) >= 3, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !has_supportive_dominating_set(g) {
        return Ok(false);
    }
    let (gamma, _) = domination_number(g)?;
    let need = ceil_log2(gamma) + 1;
    Ok(support_vertices(g)
        .iter()
        .all(|s| Bits(g.adj()[s]).filter(|&u| g.degree(u) == 1).count() >= need))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bridge_graph, cartesian_product, hat_construction};
    use crate::graph::{complete, cycle, path, star};
    use proptest::prelude::*;

    /// Exhaustive subset scan, smallest size then smallest encoding.
    fn brute(g: &Graph, mode: Nbhd) -> (usize, u64) {
        let n = g.n();
        let mut best = (usize::MAX, 0);
        for s in 0u64..1 << n {
            if g.nbhd_bits(s, mode) == g.full_bits() {
                let k = s.count_ones() as usize;
                if (k, s) < best {
                    best = (k, s);
                }
            }
        }
        best
    }

    #[test]
    fn known_domination_numbers() {
        assert_eq!(domination_number(&path(4).unwrap()).unwrap().0, 2);
        for n in 1..6 {
            assert_eq!(domination_number(&complete(n).unwrap()).unwrap().0, 1);
        }
        let hat = hat_construction(&path(3).unwrap()).unwrap();
        let (gamma, cert) = domination_number(&hat).unwrap();
        assert_eq!(gamma, 4);
        assert_eq!(cert.set.to_vec(), vec![0, 1, 2, 3]);
        assert!(cert.validate(&hat));
    }

    #[test]
    fn known_total_domination_numbers() {
        assert_eq!(total_domination_number(&path(6).unwrap()).unwrap().0, 4);
        let grid = cartesian_product(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(total_domination_number(&grid).unwrap().0, 2);
        assert_eq!(total_domination_number(&complete(2).unwrap()).unwrap().0, 2);
        let b = bridge_graph(4, 5).unwrap();
        let (gt, cert) = total_domination_number(&b).unwrap();
        assert_eq!(gt, 2);
        assert_eq!(cert.set.to_vec(), vec![0, 4]);
        assert!(matches!(
            total_domination_number(&Graph::from_edges(3, [(0, 1)]).unwrap()),
            Err(Error::IsolatedVertex(2))
        ));
    }

    #[test]
    fn supports() {
        assert_eq!(support_vertices(&path(4).unwrap()).to_vec(), vec![1, 2]);
        assert!(support_vertices(&cycle(5).unwrap()).is_empty());
        assert_eq!(support_vertices(&star(3).unwrap()).to_vec(), vec![0]);
        assert!(has_supportive_dominating_set(&path(4).unwrap()));
        assert!(!has_supportive_dominating_set(&cycle(5).unwrap()));
        assert!(has_supportive_dominating_set(
            &hat_construction(&path(3).unwrap()).unwrap()
        ));
    }

    #[test]
    fn pendant_hypothesis() {
        assert!(satisfies_pendant_theorem_hypothesis(&hat_construction(&path(3).unwrap()).unwrap()).unwrap());
        assert!(!satisfies_pendant_theorem_hypothesis(&path(4).unwrap()).unwrap());
        assert!(satisfies_pendant_theorem_hypothesis(&star(3).unwrap()).unwrap());
        assert!(satisfies_pendant_theorem_hypothesis(&path(2).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn matches_exhaustive_scan(n in 1usize..=9, bits in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits >> (k % 64) & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            let (gamma, cert) = domination_number(&g).unwrap();
            prop_assert_eq!((gamma, cert.set.bits()), brute(&g, Nbhd::Closed));
            prop_assert!(cert.validate(&g));
            if g.is_isolate_free() {
                let (gt, tcert) = total_domination_number(&g).unwrap();
                prop_assert_eq!((gt, tcert.set.bits()), brute(&g, Nbhd::Open));
                prop_assert!(tcert.validate(&g));
                prop_assert!(gamma <= gt && gt <= 2 * gamma);
            }
            if n >= 3 && g.is_connected() && has_supportive_dominating_set(&g) {
                prop_assert_eq!(support_vertices(&g).len(), gamma);
            }
        }
    }
}
