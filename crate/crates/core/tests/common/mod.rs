//! Test-only oracles, written directly from the game rules and independent
//! of the library's solver and domination code.
#![allow(dead_code)]

use domgame::{Graph, Variant};
use rand::Rng;

fn open(g: &Graph, v: usize) -> u64 {
    (0..g.n()).filter(|&u| g.has_edge(u, v)).fold(0, |acc, u| acc | 1 << u)
}

fn closed(g: &Graph, v: usize) -> u64 {
    open(g, v) | 1 << v
}

/// Minimum total dominating set size by scanning every subset.
pub fn brute_gamma_t(g: &Graph) -> usize {
    let full = (1u64 << g.n()) - 1;
    (0u64..1 << g.n())
        .filter(|&s| {
            (0..g.n())
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |acc, v| acc | open(g, v))
                == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("isolate-free graph has a total dominating set")
}

/// Minimum dominating set size by scanning every subset.
pub fn brute_gamma(g: &Graph) -> usize {
    let full = (1u64 << g.n()) - 1;
    (0u64..1 << g.n())
        .filter(|&s| {
            (0..g.n())
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |acc, v| acc | closed(g, v))
                == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

const OVER: i32 = 1_000;

struct Brute<'a> {
    g: &'a Graph,
    variant: Variant,
    open: Vec<u64>,
    closed: Vec<u64>,
    full: u64,
}

impl Brute<'_> {
    /// Literal rules: the legality test compares the candidate's neighbourhood
    /// against the union over the full list of played vertices.
    fn legal(&self, v: usize, played: &[usize]) -> bool {
        let union_closed = played.iter().fold(0, |acc, &p| acc | self.closed[p]);
        let union_open = played.iter().fold(0, |acc, &p| acc | self.open[p]);
        match self.variant {
            Variant::Dom => self.closed[v] & !union_closed != 0,
            Variant::Total => self.open[v] & !union_open != 0,
            Variant::Z => self.open[v] & !union_closed != 0,
            Variant::L => self.closed[v] & !union_open != 0 && !played.contains(&v),
            Variant::LL => self.closed[v] & !union_open != 0,
        }
    }

    fn finished(&self, played: &[usize]) -> bool {
        let union = match self.variant {
            Variant::Dom | Variant::Z => played.iter().fold(0, |acc, &p| acc | self.closed[p]),
            _ => played.iter().fold(0, |acc, &p| acc | self.open[p]),
        };
        union == self.full
    }

    fn play(&self, played: &mut Vec<usize>, dominator: bool, depth_left: usize) -> i32 {
        if self.finished(played) {
            return 0;
        }
        if depth_left == 0 {
            return OVER;
        }
        let mut best = if dominator { i32::MAX } else { i32::MIN };
        let mut any = false;
        for v in 0..self.g.n() {
            if !self.legal(v, played) {
                continue;
            }
            any = true;
            played.push(v);
            let val = (1 + self.play(played, !dominator, depth_left - 1)).min(OVER);
            played.pop();
            best = if dominator { best.min(val) } else { best.max(val) };
        }
        assert!(any, "unfinished position without legal moves");
        best
    }
}

/// Non-memoised minimax over the literal game rules. The LL-game is cut at
/// `2 γ_t` moves; lines running past the cut count as unbounded.
pub fn brute_value(g: &Graph, variant: Variant, dominator_first: bool) -> u32 {
    let n = g.n();
    let b = Brute {
        g,
        variant,
        open: (0..n).map(|v| open(g, v)).collect(),
        closed: (0..n).map(|v| closed(g, v)).collect(),
        full: (1u64 << n) - 1,
    };
    let depth = if variant == Variant::LL {
        2 * brute_gamma_t(g)
    } else {
        2 * n + 1
    };
    let v = b.play(&mut Vec::new(), dominator_first, depth);
    assert!(v < OVER, "brute force exceeded its depth bound");
    v as u32
}

/// A uniformly random labelled graph on `n` vertices with no isolated vertex
/// (rejection sampling on edge probability `p`).
pub fn random_isolate_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.is_isolate_free() {
            return g;
        }
    }
}
