//! Structural predicates: twins, claw centres, weak claw-freeness,
//! Z-configurations and Z-insensitivity.

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Nbhd};
use crate::vertex_set::{Bits, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Equal closed neighbourhoods.
    True,
    /// Equal open neighbourhoods.
    False,
}

/// All pairs `(u, v)`, `u < v`, of the given twin kind, sorted.
pub fn find_twins(g: &Graph, kind: TwinKind) -> Vec<(usize, usize)> {
    let nb = |v: usize| match kind {
        TwinKind::True => g.adj()[v] | 1 << v,
        TwinKind::False => g.adj()[v],
    };
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| nb(u) == nb(v))
        .collect()
}

fn has_independent_triple(g: &Graph, set: u64) -> bool {
    for a in Bits(set) {
        let rest_a = set & !g.adj()[a] & !(1u64 << a) & !((1u64 << a) - 1);
        for b in Bits(rest_a) {
            if rest_a & !g.adj()[b] & !((1u64 << (b + 1)) - 1) != 0 {
                return true;
            }
        }
    }
    false
}

/// Whether `v` is the centre of an induced claw `K_{1,3}`.
pub fn is_claw_center(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(has_independent_triple(g, g.adj()[v]))
}

pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| !has_independent_triple(g, g.adj()[v]))
}

/// Every vertex has a neighbour that is not a claw centre. Graphs with an
/// isolated vertex are never weakly claw-free.
pub fn is_weakly_claw_free(g: &Graph) -> bool {
    let centers = (0..g.n())
        .filter(|&v| has_independent_triple(g, g.adj()[v]))
        .fold(0u64, |a, v| a | 1 << v);
    (0..g.n()).all(|u| g.adj()[u] & !centers != 0)
}

fn z_configuration_bits(g: &Graph, a: u64) -> Option<usize> {
    (0..g.n()).find(|&v| {
        a >> v & 1 == 0 && g.adj()[v] & !a == 0 && Bits(g.adj()[v]).all(|u| (g.adj()[u] & !a).count_ones() >= 2)
    })
}

/// Smallest `v ∉ A` with `N(v) ⊆ A` and `|N(u) \ A| ≥ 2` for all `u ∈ N(v)`.
pub fn has_z_configuration(g: &Graph, a: &VertexSet) -> Result<Option<usize>> {
    if a.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            left: a.universe(),
            right: g.n(),
        });
    }
    Ok(z_configuration_bits(g, a.bits()))
}

/// Default order limit for [`is_z_insensitive`].
pub const Z_INSENSITIVE_CAP: usize = 20;

/// A set `D` whose closed neighbourhood `N[D]` leaves a Z-configuration,
/// together with the configuration's centre.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZWitness {
    pub dominated: VertexSet,
    pub played: VertexSet,
    pub vertex: usize,
}

/// All distinct sets `N[D]`, `D ⊆ V(G)`, each paired with one `D` producing it.
fn closed_neighborhood_images(g: &Graph) -> Vec<(u64, u64)> {
    let closed: Vec<u64> = (0..g.n()).map(|v| g.nbhd_bits(1 << v, Nbhd::Closed)).collect();
    let mut seen = FxHashSet::default();
    seen.insert(0u64);
    let mut out = vec![(0u64, 0u64)];
    let mut i = 0;
    while i < out.len() {
        let (a, d) = out[i];
        for (v, &c) in closed.iter().enumerate() {
            let next = a | c;
            if next != a && seen.insert(next) {
                out.push((next, d | 1 << v));
            }
        }
        i += 1;
    }
    out
}

/// Searches every `G|N[D]` for a Z-configuration; `None` means Z-insensitive.
pub fn z_insensitivity_witness_with_cap(g: &Graph, cap: usize) -> Result<Option<ZWitness>> {
    if g.n() > cap {
        return Err(Error::InvalidParameter(format!(
            "Z-insensitivity check limited to {cap} vertices, got {}",
            g.n()
        )));
    }
    g.require_isolate_free()?;
    let images = closed_neighborhood_images(g);
    let hit = images
        .par_iter()
        .filter_map(|&(a, d)| z_configuration_bits(g, a).map(|v| (a, d, v)))
        .min();
    Ok(hit.map(|(a, d, v)| ZWitness {
        dominated: VertexSet::from_bits_unchecked(g.n(), a),
        played: VertexSet::from_bits_unchecked(g.n(), d),
        vertex: v,
    }))
}

pub fn z_insensitivity_witness(g: &Graph) -> Result<Option<ZWitness>> {
    z_insensitivity_witness_with_cap(g, Z_INSENSITIVE_CAP)
}

/// No partially dominated graph `G|N[D]` has a Z-configuration.
pub fn is_z_insensitive(g: &Graph) -> Result<bool> {
    Ok(z_insensitivity_witness(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    /// `v ~ u_i`, `d ~ u_i`, `u_i ~ w_i` for i = 1..3.
    /// Labels: v=0, d=1, u=2..4, w=5..7.
    pub(crate) fn w8() -> Graph {
        let mut edges = Vec::new();
        for i in 0..3 {
            edges.push((0, 2 + i));
            edges.push((1, 2 + i));
            edges.push((2 + i, 5 + i));
        }
        Graph::from_edges(8, edges).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn twins() {
        assert_eq!(
            find_twins(&complete(3).unwrap(), TwinKind::True),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(
            find_twins(&star(3).unwrap(), TwinKind::False),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        let p4 = path(4).unwrap();
        assert!(find_twins(&p4, TwinKind::True).is_empty());
        assert!(find_twins(&p4, TwinKind::False).is_empty());
    }

    #[test]
    fn claws() {
        let s = star(3).unwrap();
        assert!(is_claw_center(&s, 0).unwrap());
        assert!(!is_claw_center(&s, 1).unwrap());
        let c6 = cycle(6).unwrap();
        assert!((0..6).all(|v| !is_claw_center(&c6, v).unwrap()));
        assert!(is_claw_center(&s, 4).is_err());
        assert!(!is_claw_center(&complete(4).unwrap(), 0).unwrap());
    }

    #[test]
    fn weak_claw_freeness() {
        for n in 2..10 {
            assert!(is_weakly_claw_free(&path(n).unwrap()));
        }
        assert!(!is_weakly_claw_free(&star(3).unwrap()));
        assert!(is_weakly_claw_free(&cycle(7).unwrap()));
        assert!(!is_weakly_claw_free(&Graph::from_edges(3, [(0, 1)]).unwrap()));
    }

    #[test]
    fn z_configurations() {
        let p5 = path(5).unwrap();
        assert_eq!(has_z_configuration(&p5, &set(5, &[1, 2, 3])).unwrap(), None);
        let g = w8();
        assert_eq!(has_z_configuration(&g, &set(8, &[1, 2, 3, 4])).unwrap(), Some(0));
        assert_eq!(has_z_configuration(&g, &VertexSet::full(8)).unwrap(), None);
        assert_eq!(has_z_configuration(&g, &VertexSet::empty(8)).unwrap(), None);
        assert!(has_z_configuration(&g, &VertexSet::empty(7)).is_err());
    }

    #[test]
    fn z_insensitivity() {
        for n in 2..=12 {
            assert!(is_z_insensitive(&path(n).unwrap()).unwrap(), "P_{n}");
        }
        for n in 2..=8 {
            assert!(is_z_insensitive(&complete(n).unwrap()).unwrap());
        }
        let w = z_insensitivity_witness(&w8()).unwrap().expect("W8 is Z-sensitive");
        assert_eq!(has_z_configuration(&w8(), &w.dominated).unwrap(), Some(w.vertex));
        assert_eq!(w8().neighborhood_of_set(&w.played, Nbhd::Closed).unwrap(), w.dominated);
        assert!(is_z_insensitive(&path(21).unwrap()).is_err());
        assert!(is_z_insensitive(&Graph::from_edges(3, [(0, 1)]).unwrap()).is_err());
    }
}
