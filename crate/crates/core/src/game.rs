//! Exact values of the five domination games.
//!
//! A position is the covered set (union of gain neighbourhoods played so
//! far), the stalled set (L-game only: played vertices that are not yet
//! covered) and the player to move. Values are the number of moves still to
//! be played under optimal play; the solver is an alpha-beta search over
//! those positions with a transposition table holding lower/upper bounds.
//!
//! Null moves (legal moves whose gain is already covered) exist only in the
//! L- and LL-games. In the L-game they grow the stalled set, so the position
//! still changes. In the LL-game they change nothing but the turn. Dominator
//! never profits from one (`x = min(a, 2 + x)` forces `x = a`), so Dominator
//! is offered progressing moves only, while Staller additionally gets
//! `1 + value(same cover, Dominator to move)` whenever a null move exists.
//! Every recursive call therefore reaches a strictly larger cover or hands
//! the turn to Dominator on the same cover, and the recursion is finite.

use std::fmt;

use arrayvec::ArrayVec;
use rustc_hash::FxHashMap;
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::classic::{domination_number, total_domination_number};
use crate::error::{Error, Result};
use crate::graph::{Graph, Nbhd};
use crate::vertex_set::{Bits, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Domination game: closed test, closed gain.
    Dom,
    /// Total domination game: open test, open gain.
    Total,
    /// Z-domination game: open test, closed gain.
    Z,
    /// L-domination game: closed test, open gain, no vertex played twice.
    L,
    /// LL-domination game: closed test, open gain, repeats allowed.
    LL,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Dom, Variant::Total, Variant::Z, Variant::L, Variant::LL];

    pub fn test_nbhd(self) -> Nbhd {
        match self {
            Variant::Dom | Variant::L | Variant::LL => Nbhd::Closed,
            Variant::Total | Variant::Z => Nbhd::Open,
        }
    }

    pub fn gain_nbhd(self) -> Nbhd {
        match self {
            Variant::Dom | Variant::Z => Nbhd::Closed,
            Variant::Total | Variant::L | Variant::LL => Nbhd::Open,
        }
    }

    pub fn forbid_repeat(self) -> bool {
        self == Variant::L
    }

    /// Short lowercase name used by the CLI and in report keys.
    pub fn key(self) -> &'static str {
        match self {
            Variant::Dom => "dom",
            Variant::Total => "total",
            Variant::Z => "z",
            Variant::L => "l",
            Variant::LL => "ll",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Dom => "DOM",
            Variant::Total => "TOTAL",
            Variant::Z => "Z",
            Variant::L => "L",
            Variant::LL => "LL",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.key().eq_ignore_ascii_case(s) || v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown game variant {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub covered: VertexSet,
    /// Always empty except in the L-game; disjoint from `covered`.
    pub stalled: VertexSet,
    pub to_move: Player,
}

impl GameState {
    pub fn new(n: usize, first: Player) -> GameState {
        GameState {
            covered: VertexSet::empty(n),
            stalled: VertexSet::empty(n),
            to_move: first,
        }
    }

    /// Start on the partially dominated graph `G|A`.
    pub fn with_covered(covered: VertexSet, first: Player) -> GameState {
        GameState {
            covered,
            stalled: VertexSet::empty(covered.universe()),
            to_move: first,
        }
    }
}

fn check_state(g: &Graph, state: &GameState) -> Result<()> {
    g.require_isolate_free()?;
    for s in [&state.covered, &state.stalled] {
        if s.universe() != g.n() {
            return Err(Error::UniverseMismatch {
                left: s.universe(),
                right: g.n(),
            });
        }
    }
    Ok(())
}

#[inline]
fn legal_bits(test: &[u64], covered: u64, stalled: u64) -> u64 {
    test.iter()
        .enumerate()
        .filter(|&(v, &t)| t & !covered != 0 && stalled >> v & 1 == 0)
        .fold(0u64, |acc, (v, _)| acc | 1 << v)
}

fn effective_stalled(variant: Variant, state: &GameState) -> u64 {
    if variant.forbid_repeat() {
        state.stalled.bits() & !state.covered.bits()
    } else {
        0
    }
}

fn rows(g: &Graph, mode: Nbhd) -> Vec<u64> {
    (0..g.n()).map(|v| g.nbhd_bits(1 << v, mode)).collect()
}

pub fn legal_moves(g: &Graph, variant: Variant, state: &GameState) -> Result<VertexSet> {
    check_state(g, state)?;
    let test = rows(g, variant.test_nbhd());
    let bits = legal_bits(&test, state.covered.bits(), effective_stalled(variant, state));
    Ok(VertexSet::from_bits_unchecked(g.n(), bits))
}

pub fn apply_move(g: &Graph, variant: Variant, state: &GameState, v: usize) -> Result<GameState> {
    if !legal_moves(g, variant, state)?.contains(v) {
        return Err(Error::IllegalMove(v));
    }
    let gain = g.nbhd_bits(1 << v, variant.gain_nbhd());
    let covered = state.covered.bits() | gain;
    let stalled = if variant.forbid_repeat() {
        (effective_stalled(variant, state) | 1 << v) & !covered
    } else {
        0
    };
    Ok(GameState {
        covered: VertexSet::from_bits_unchecked(g.n(), covered),
        stalled: VertexSet::from_bits_unchecked(g.n(), stalled),
        to_move: state.to_move.other(),
    })
}

pub fn is_finished(g: &Graph, _variant: Variant, state: &GameState) -> bool {
    state.covered.bits() == g.full_bits()
}

/// Default bound on transposition-table entries per solver.
pub const DEFAULT_MEMO_CAP: usize = 40_000_000;

const INF: i32 = 1 << 20;

type Bound = (u8, u8);

/// Solver for one graph and one variant. The transposition table persists
/// across queries on the same solver.
pub struct Solver<'g> {
    graph: &'g Graph,
    variant: Variant,
    full: u64,
    test: Vec<u64>,
    gain: Vec<u64>,
    max_gain: u32,
    memo: [FxHashMap<u128, Bound>; 2],
    cap: usize,
    nodes: u64,
}

type Children = ArrayVec<(u32, u64, u64), 64>;

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, variant: Variant) -> Result<Solver<'g>> {
        graph.require_isolate_free()?;
        let test = rows(graph, variant.test_nbhd());
        let gain = rows(graph, variant.gain_nbhd());
        let max_gain = gain.iter().map(|g| g.count_ones()).max().unwrap_or(1);
        Ok(Solver {
            graph,
            variant,
            full: graph.full_bits(),
            test,
            gain,
            max_gain,
            memo: [FxHashMap::default(), FxHashMap::default()],
            cap: DEFAULT_MEMO_CAP,
            nodes: 0,
        })
    }

    pub fn with_memo_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Entries currently held in the transposition table.
    pub fn memo_len(&self) -> usize {
        self.memo[0].len() + self.memo[1].len()
    }

    /// Positions expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Game value from the empty position.
    pub fn value(&mut self, first: Player) -> Result<u32> {
        let state = GameState::new(self.graph.n(), first);
        self.value_from(&state)
    }

    /// Number of moves still to be played from `state` under optimal play.
    pub fn value_from(&mut self, state: &GameState) -> Result<u32> {
        check_state(self.graph, state)?;
        let stalled = effective_stalled(self.variant, state);
        let dom = state.to_move == Player::Dominator;
        let v = self.search(state.covered.bits(), stalled, dom, -1, INF)?;
        Ok(v as u32)
    }

    /// Smallest-index legal move achieving the value of `state`.
    pub fn optimal_move(&mut self, state: &GameState) -> Result<usize> {
        check_state(self.graph, state)?;
        if is_finished(self.graph, self.variant, state) {
            return Err(Error::GameFinished);
        }
        let target = self.value_from(state)?;
        let legal = legal_bits(&self.test, state.covered.bits(), effective_stalled(self.variant, state));
        for v in Bits(legal) {
            let next = apply_move(self.graph, self.variant, state, v)?;
            if 1 + self.value_from(&next)? == target {
                return Ok(v);
            }
        }
        unreachable!("no legal move realises the computed value")
    }

    #[inline]
    fn lower_bound(&self, covered: u64) -> u8 {
        let missing = (self.full & !covered).count_ones();
        missing.div_ceil(self.max_gain).max(1) as u8
    }

    fn children(&self, covered: u64, stalled: u64, out: &mut Children) -> bool {
        let legal = legal_bits(&self.test, covered, stalled);
        let mut has_null = false;
        for v in Bits(legal) {
            let next = covered | self.gain[v];
            if next == covered {
                has_null = true;
                if self.variant != Variant::L {
                    continue;
                }
            }
            let next_stalled = if self.variant == Variant::L {
                (stalled | 1 << v) & !next
            } else {
                0
            };
            out.push(((next & !covered).count_ones(), next, next_stalled));
        }
        debug_assert!(
            covered == self.full || out.iter().any(|c| c.1 != covered),
            "no progressing move from a non-final position"
        );
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        // equal positions have equal gains, so duplicates are adjacent
        let mut kept = 0;
        for i in 0..out.len() {
            if kept == 0 || (out[kept - 1].1, out[kept - 1].2) != (out[i].1, out[i].2) {
                out[kept] = out[i];
                kept += 1;
            }
        }
        out.truncate(kept);
        has_null
    }

    fn search(&mut self, covered: u64, stalled: u64, dom: bool, alpha: i32, beta: i32) -> Result<u8> {
        if covered == self.full {
            return Ok(0);
        }
        self.nodes += 1;
        let key = covered as u128 | (stalled as u128) << 64;
        let side = dom as usize;
        let (lo, hi) = match self.memo[side].get(&key) {
            Some(&b) => b,
            None => (self.lower_bound(covered), u8::MAX),
        };
        if lo == hi || lo as i32 >= beta {
            return Ok(lo);
        }
        if hi as i32 <= alpha {
            return Ok(hi);
        }
        let mut a = alpha.max(lo as i32);
        let mut b = beta.min(hi as i32);
        let (a0, b0) = (a, b);

        let mut kids = Children::new();
        let has_null = self.children(covered, stalled, &mut kids);
        let mut best;
        if dom {
            best = INF;
            for &(_, c, s) in &kids {
                let v = 1 + self.search(c, s, false, a - 1, b - 1)? as i32;
                if v < best {
                    best = v;
                    b = b.min(best);
                }
                if best <= a {
                    break;
                }
            }
        } else {
            best = -INF;
            for &(_, c, s) in &kids {
                let v = 1 + self.search(c, s, true, a - 1, b - 1)? as i32;
                if v > best {
                    best = v;
                    a = a.max(best);
                }
                if best >= b {
                    break;
                }
            }
            if has_null && self.variant == Variant::LL && best < b {
                let v = 1 + self.search(covered, stalled, true, a - 1, b - 1)? as i32;
                best = best.max(v);
            }
        }

        let best8 = best.clamp(0, u8::MAX as i32) as u8;
        let entry = if best <= a0 {
            (lo, hi.min(best8))
        } else if best >= b0 {
            (lo.max(best8), hi)
        } else {
            (best8, best8)
        };
        debug_assert!(entry.0 <= entry.1, "inconsistent bounds {entry:?}");
        let table = &mut self.memo[side];
        if table.len() >= self.cap && !table.contains_key(&key) {
            return Err(Error::MemoCapExceeded(self.cap));
        }
        table.insert(key, entry);
        Ok(best8)
    }
}

/// Optimal game length on `G` (or on `G|A` when `initial_covered` is given).
pub fn game_value(g: &Graph, variant: Variant, first: Player, initial_covered: Option<&VertexSet>) -> Result<u32> {
    let mut solver = Solver::new(g, variant)?;
    let state = match initial_covered {
        Some(a) => GameState::with_covered(*a, first),
        None => GameState::new(g.n(), first),
    };
    solver.value_from(&state)
}

pub fn optimal_move(g: &Graph, variant: Variant, state: &GameState) -> Result<usize> {
    Solver::new(g, variant)?.optimal_move(state)
}

/// `γ`, `γ_t` and all ten game values of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub gamma: u32,
    pub gamma_t: u32,
    values: [[u32; 2]; 5],
}

impl InvariantProfile {
    pub fn value(&self, variant: Variant, first: Player) -> u32 {
        self.values[variant.index()][first.index()]
    }

    /// Flat `(key, value)` pairs in the fixed order
    /// `gamma, gamma_t, dom_d, dom_s, total_d, ..., ll_s`.
    pub fn entries(&self) -> Vec<(String, u32)> {
        let mut out = vec![("gamma".to_string(), self.gamma), ("gamma_t".to_string(), self.gamma_t)];
        for v in Variant::ALL {
            out.push((format!("{}_d", v.key()), self.value(v, Player::Dominator)));
            out.push((format!("{}_s", v.key()), self.value(v, Player::Staller)));
        }
        out
    }

    /// Every relation of the `≤` Hasse diagram on `γ, γ_t` and the five game
    /// numbers that fails, for both first players.
    pub fn hierarchy_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let mut need = |name: &str, a: u32, b: u32| {
            if a > b {
                bad.push(format!("{name}: {a} > {b}"));
            }
        };
        need("gamma <= gamma_t", self.gamma, self.gamma_t);
        for (p, tag) in [(Player::Dominator, "d"), (Player::Staller, "s")] {
            let v = |x| self.value(x, p);
            need(&format!("gamma <= z_{tag}"), self.gamma, v(Variant::Z));
            need(&format!("gamma_t <= total_{tag}"), self.gamma_t, v(Variant::Total));
            need(&format!("z_{tag} <= dom_{tag}"), v(Variant::Z), v(Variant::Dom));
            need(&format!("z_{tag} <= total_{tag}"), v(Variant::Z), v(Variant::Total));
            need(&format!("dom_{tag} <= l_{tag}"), v(Variant::Dom), v(Variant::L));
            need(&format!("total_{tag} <= l_{tag}"), v(Variant::Total), v(Variant::L));
            need(&format!("l_{tag} <= ll_{tag}"), v(Variant::L), v(Variant::LL));
        }
        bad
    }
}

impl Serialize for InvariantProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self.entries();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (k, v) in &entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Computes the full invariant profile with the given memo cap per solver.
pub fn profile_with_cap(g: &Graph, cap: usize) -> Result<InvariantProfile> {
    g.require_isolate_free()?;
    let gamma = domination_number(g)?.0 as u32;
    let gamma_t = total_domination_number(g)?.0 as u32;
    let mut values = [[0u32; 2]; 5];
    for variant in Variant::ALL {
        let mut solver = Solver::new(g, variant)?.with_memo_cap(cap);
        for first in [Player::Dominator, Player::Staller] {
            values[variant.index()][first.index()] = solver.value(first)?;
        }
    }
    Ok(InvariantProfile { gamma, gamma_t, values })
}

pub fn profile(g: &Graph) -> Result<InvariantProfile> {
    profile_with_cap(g, DEFAULT_MEMO_CAP)
}
