//! Free-tree enumeration and the tree census of game domination numbers.
//!
//! Trees are generated with the Wright–Richmond–Odlyzko–McKay successor
//! method on canonical level sequences, which visits every unlabelled tree
//! exactly once in constant amortised time.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::classic::{domination_number, total_domination_number};
use crate::error::{Error, Result};
use crate::game::{Player, Solver, Variant};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::vertex_set::MAX_VERTICES;

/// Bumped whenever a change could alter census numbers; part of the cache key.
pub const SOLVER_VERSION: u32 = 1;

/// Iterator over all free trees of a fixed order.
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    small_done: bool,
}

/// All unlabelled trees on `n` vertices, each once, in a deterministic order.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "tree order must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    let layout = (n > 2).then(|| (0..=n / 2).chain(1..n.div_ceil(2)).collect());
    Ok(FreeTrees {
        n,
        layout,
        small_done: false,
    })
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n <= 2 {
            if self.small_done {
                return None;
            }
            self.small_done = true;
            return Some(Graph::from_edges(self.n, (1..self.n).map(|v| (0, v))).expect("valid tree"));
        }
        let current = self.layout.take()?;
        let tree = next_tree(current)?;
        let graph = layout_to_graph(&tree);
        self.layout = next_rooted_tree(&tree, None);
        Some(graph)
    }
}

/// Successor of a rooted level sequence; `p` overrides the pivot position.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted down by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Advances `candidate` to the next sequence that is the canonical form of
/// a free tree (rooted at its centre, with the centroid conditions).
fn next_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let valid = rest_height > left_height
            || (rest_height == left_height && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
                *slot = k + 1;
            }
        }
        candidate = next;
    }
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::empty(layout.len()).expect("order within cap");
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            g.add_edge(i, j).expect("tree edge");
        }
        stack.push(i);
    }
    g
}

/// One row of the census table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    /// `γ_Zg = γ_g`
    pub eq_dom: u64,
    /// `γ_Zg = γ_tg`
    pub eq_total_game: u64,
    /// `γ_Zg = γ`
    pub eq_gamma: u64,
    /// `γ_Zg > γ_t`
    pub gt_gamma_t: u64,
    /// `γ_Zg < γ_t`
    pub lt_gamma_t: u64,
}

impl CensusRow {
    pub const TSV_HEADER: &'static str = "n\tT\teq_gg\teq_tg\teq_gamma\tgt_gammat\tlt_gammat";

    fn empty(n: usize) -> CensusRow {
        CensusRow {
            n,
            total: 0,
            eq_dom: 0,
            eq_total_game: 0,
            eq_gamma: 0,
            gt_gamma_t: 0,
            lt_gamma_t: 0,
        }
    }

    fn add(mut self, t: &TreeValues) -> CensusRow {
        self.total += 1;
        self.eq_dom += (t.z == t.dom) as u64;
        self.eq_total_game += (t.z == t.total) as u64;
        self.eq_gamma += (t.z == t.gamma) as u64;
        self.gt_gamma_t += (t.z > t.gamma_t) as u64;
        self.lt_gamma_t += (t.z < t.gamma_t) as u64;
        self
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n, self.total, self.eq_dom, self.eq_total_game, self.eq_gamma, self.gt_gamma_t, self.lt_gamma_t
        )
    }

    pub fn from_tsv(line: &str) -> Result<CensusRow> {
        let f: Vec<u64> = line
            .split('\t')
            .map(|s| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad census line {line:?}")))
            })
            .collect::<Result<_>>()?;
        if f.len() != 7 {
            return Err(Error::Parse(format!("census line needs 7 fields: {line:?}")));
        }
        Ok(CensusRow {
            n: f[0] as usize,
            total: f[1],
            eq_dom: f[2],
            eq_total_game: f[3],
            eq_gamma: f[4],
            gt_gamma_t: f[5],
            lt_gamma_t: f[6],
        })
    }
}

/// D-game values of one tree. `l` and `ll` are only filled in when asked for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeValues {
    pub graph6: String,
    pub gamma: u32,
    pub gamma_t: u32,
    pub dom: u32,
    pub total: u32,
    pub z: u32,
    pub l: Option<u32>,
    pub ll: Option<u32>,
}

impl TreeValues {
    pub const TSV_HEADER: &'static str = "graph6\tgamma\tgamma_t\tdom_d\ttotal_d\tz_d\tl_d\tll_d";

    pub fn to_tsv(&self) -> String {
        let opt = |x: Option<u32>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph6,
            self.gamma,
            self.gamma_t,
            self.dom,
            self.total,
            self.z,
            opt(self.l),
            opt(self.ll)
        )
    }

    /// The Hasse relations among the values present.
    pub fn hierarchy_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let mut need = |name: &str, a: u32, b: u32| {
            if a > b {
                bad.push(format!("{name}: {a} > {b}"));
            }
        };
        need("gamma <= gamma_t", self.gamma, self.gamma_t);
        need("gamma <= z_d", self.gamma, self.z);
        need("gamma_t <= total_d", self.gamma_t, self.total);
        need("z_d <= dom_d", self.z, self.dom);
        need("z_d <= total_d", self.z, self.total);
        if let Some(l) = self.l {
            need("dom_d <= l_d", self.dom, l);
            need("total_d <= l_d", self.total, l);
            if let Some(ll) = self.ll {
                need("l_d <= ll_d", l, ll);
            }
        }
        bad
    }
}

/// Computes the census values of one tree.
pub fn tree_values(t: &Graph, with_l: bool) -> Result<TreeValues> {
    let value = |v: Variant| Solver::new(t, v)?.value(Player::Dominator);
    Ok(TreeValues {
        graph6: to_graph6(t),
        gamma: domination_number(t)?.0 as u32,
        gamma_t: total_domination_number(t)?.0 as u32,
        dom: value(Variant::Dom)?,
        total: value(Variant::Total)?,
        z: value(Variant::Z)?,
        l: if with_l { Some(value(Variant::L)?) } else { None },
        ll: if with_l { Some(value(Variant::LL)?) } else { None },
    })
}

/// Census of one order together with the per-tree values (sorted by graph6).
pub fn census_detail(n: usize, with_l: bool) -> Result<(CensusRow, Vec<TreeValues>)> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "census order must be in 2..={MAX_VERTICES}, got {n}"
        )));
    }
    let trees: Vec<Graph> = enumerate_free_trees(n)?.collect();
    let mut values = trees
        .par_iter()
        .map(|t| tree_values(t, with_l))
        .collect::<Result<Vec<_>>>()?;
    values.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    for v in &values {
        let bad = v.hierarchy_violations();
        if !bad.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "hierarchy violated on {}: {}",
                v.graph6,
                bad.join("; ")
            )));
        }
    }
    let row = values.iter().fold(CensusRow::empty(n), |r, t| r.add(t));
    Ok((row, values))
}

/// Census row of order `n` (`4 ≤ n` for the published table).
pub fn census_row(n: usize) -> Result<CensusRow> {
    Ok(census_detail(n, false)?.0)
}

/// Row cache: one TSV file per (order, solver version) inside `dir`.
pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn new(dir: impl AsRef<Path>) -> Result<CensusCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(CensusCache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("census-n{n}-v{SOLVER_VERSION}.tsv"))
    }

    pub fn get(&self, n: usize) -> Option<CensusRow> {
        let text = fs::read_to_string(self.path(n)).ok()?;
        let line = text.lines().nth(1)?;
        CensusRow::from_tsv(line).ok().filter(|r| r.n == n)
    }

    pub fn put(&self, row: &CensusRow) -> Result<()> {
        let tmp = self.path(row.n).with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        writeln!(f, "{}\n{}", CensusRow::TSV_HEADER, row.to_tsv())?;
        fs::rename(tmp, self.path(row.n))?;
        Ok(())
    }
}

/// Result of scanning trees for `γ_Zg(T) < γ_Lg(T)` and `γ_Zg(T) < γ_LLg(T)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub trees_checked: u64,
    /// graph6 of trees with `γ_Zg ≥ γ_Lg`.
    pub counterexamples: Vec<String>,
    /// graph6 of trees with `γ_Zg ≥ γ_LLg`.
    pub weak_counterexamples: Vec<String>,
    /// Trees checked per order.
    pub per_order: BTreeMap<usize, u64>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn conjecture_scan(n_max: usize) -> Result<ConjectureReport> {
    if !(2..=MAX_VERTICES).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "n_max must be in 2..={MAX_VERTICES}, got {n_max}"
        )));
    }
    let mut report = ConjectureReport {
        n_max,
        ..Default::default()
    };
    for n in 2..=n_max {
        let trees: Vec<Graph> = enumerate_free_trees(n)?.collect();
        let results = trees
            .par_iter()
            .map(|t| -> Result<(String, u32, u32, u32)> {
                let z = Solver::new(t, Variant::Z)?.value(Player::Dominator)?;
                let l = Solver::new(t, Variant::L)?.value(Player::Dominator)?;
                let ll = Solver::new(t, Variant::LL)?.value(Player::Dominator)?;
                Ok((to_graph6(t), z, l, ll))
            })
            .collect::<Result<Vec<_>>>()?;
        for (g6, z, l, ll) in results {
            if z >= l {
                report.counterexamples.push(g6.clone());
            }
            if z >= ll {
                report.weak_counterexamples.push(g6);
            }
        }
        report.per_order.insert(n, trees.len() as u64);
        report.trees_checked += trees.len() as u64;
    }
    report.counterexamples.sort();
    report.weak_counterexamples.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_free_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn trees_are_trees() {
        for n in 1..=10 {
            for t in enumerate_free_trees(n).unwrap() {
                assert_eq!(t.n(), n);
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn order_four() {
        let trees: Vec<String> = enumerate_free_trees(4).unwrap().map(|t| to_graph6(&t)).collect();
        let degrees: Vec<usize> = enumerate_free_trees(4).unwrap().map(|t| t.max_degree()).collect();
        assert_eq!(trees.len(), 2);
        let mut d = degrees.clone();
        d.sort();
        assert_eq!(d, vec![2, 3]);
        assert!(enumerate_free_trees(0).is_err());
    }

    #[test]
    fn row_tsv_round_trip() {
        let row = CensusRow {
            n: 10,
            total: 106,
            eq_dom: 84,
            eq_total_game: 11,
            eq_gamma: 29,
            gt_gamma_t: 5,
            lt_gamma_t: 21,
        };
        assert_eq!(row.to_tsv(), "10\t106\t84\t11\t29\t5\t21");
        assert_eq!(CensusRow::from_tsv(&row.to_tsv()).unwrap(), row);
        assert!(CensusRow::from_tsv("1\t2").is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CensusCache::new(dir.path()).unwrap();
        assert!(cache.get(4).is_none());
        let row = census_row(4).unwrap();
        cache.put(&row).unwrap();
        assert_eq!(cache.get(4), Some(row));
    }

    #[test]
    fn small_rows() {
        let row = census_row(4).unwrap();
        assert_eq!(row.to_tsv(), "4\t2\t2\t0\t2\t0\t1");
        let scan = conjecture_scan(2).unwrap();
        assert!(scan.passed());
        assert_eq!(scan.trees_checked, 1);
    }
}
