//! Claim-checking harness.
//!
//! Each check evaluates one claim on one graph (or a fixed instance list)
//! and yields [`Report`]s. Every graph whose game values are computed gets a
//! `hierarchy` report as a side effect, so the `≤` relations between the
//! invariants are asserted on everything a suite touches.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::census::enumerate_free_trees;
use crate::classic::{domination_number, satisfies_pendant_theorem_hypothesis, total_domination_number};
use crate::closed_forms::{game_values_bridge, game_values_hamming, gamma_zg_cycle_power, gamma_zg_path, hat_values};
use crate::constructions::{bridge_graph, cartesian_product, complement, hat_construction, lexicographic_product};
use crate::enumerate::connected_graphs_up_to;
use crate::error::{Error, Result};
use crate::game::{profile_with_cap, InvariantProfile, Player, Solver, Variant, DEFAULT_MEMO_CAP};
use crate::graph::{complete, cycle_power, path, Graph};
use crate::io::to_graph6;
use crate::structure::{find_twins, is_claw_free, is_weakly_claw_free, z_insensitivity_witness, TwinKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Vacuous,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Fail => "fail",
        })
    }
}

/// One flat JSON record: claim, graph, status, computed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claim: String,
    pub graph: String,
    pub status: Status,
    #[serde(flatten)]
    pub values: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    fn new(claim: &str, g: &Graph, status: Status) -> Report {
        Report {
            claim: claim.to_string(),
            graph: to_graph6(g),
            status,
            values: BTreeMap::new(),
            note: None,
        }
    }

    fn with(mut self, key: &str, value: impl Into<i64>) -> Report {
        self.values.insert(key.to_string(), value.into());
        self
    }

    fn note(mut self, note: impl Into<String>) -> Report {
        self.note = Some(note.into());
        self
    }

    fn status_if(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// Per-run state: cached profiles and the hierarchy reports they produced.
pub struct Verifier {
    cap: usize,
    profiles: FxHashMap<String, InvariantProfile>,
    hierarchy: Vec<Report>,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

impl Verifier {
    pub fn new() -> Verifier {
        Verifier::with_memo_cap(DEFAULT_MEMO_CAP)
    }

    pub fn with_memo_cap(cap: usize) -> Verifier {
        Verifier {
            cap,
            profiles: FxHashMap::default(),
            hierarchy: Vec::new(),
        }
    }

    /// Full profile of `g`, computed once; records a `hierarchy` report.
    pub fn profile(&mut self, g: &Graph) -> Result<InvariantProfile> {
        let key = to_graph6(g);
        if let Some(p) = self.profiles.get(&key) {
            return Ok(*p);
        }
        let p = profile_with_cap(g, self.cap)?;
        self.hierarchy.push(hierarchy_report(g, &p));
        self.profiles.insert(key, p);
        Ok(p)
    }

    /// Hierarchy reports of every graph profiled so far, in first-touch order.
    pub fn take_hierarchy_reports(&mut self) -> Vec<Report> {
        std::mem::take(&mut self.hierarchy)
    }

    fn d(&mut self, g: &Graph, v: Variant) -> Result<u32> {
        Ok(self.profile(g)?.value(v, Player::Dominator))
    }

    pub fn check_hierarchy(&mut self, g: &Graph) -> Result<Report> {
        let p = self.profile(g)?;
        Ok(hierarchy_report(g, &p))
    }

    /// `γ_tg(G) = γ_Zg(G ∘ K̄_n)`.
    pub fn check_lexicographic_total(&mut self, g: &Graph, n: usize) -> Result<Report> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("needs n >= 2, got {n}")));
        }
        g.require_isolate_free()?;
        let product = lexicographic_product(g, &Graph::empty(n)?)?;
        let lhs = self.d(g, Variant::Total)?;
        let rhs = self.d(&product, Variant::Z)?;
        Ok(Report::new("lex_empty_total_game", g, Report::status_if(lhs == rhs))
            .with("n", n as i64)
            .with("total_d", lhs)
            .with("product_z_d", rhs))
    }

    /// `γ_g(G) = γ_Zg(G ∘ K_n)`.
    pub fn check_lexicographic_complete(&mut self, g: &Graph, n: usize) -> Result<Report> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("needs n >= 2, got {n}")));
        }
        let product = lexicographic_product(g, &complete(n)?)?;
        let lhs = self.d(g, Variant::Dom)?;
        let rhs = self.d(&product, Variant::Z)?;
        Ok(Report::new("lex_complete_dom_game", g, Report::status_if(lhs == rhs))
            .with("n", n as i64)
            .with("dom_d", lhs)
            .with("product_z_d", rhs))
    }

    /// Even `γ_Zg` forces `γ_Zg + 1 ≤ γ_Lg`.
    pub fn check_even_z_theorem(&mut self, g: &Graph) -> Result<Report> {
        let z = self.d(g, Variant::Z)?;
        let l = self.d(g, Variant::L)?;
        let status = if z % 2 == 1 {
            Status::Vacuous
        } else {
            Report::status_if(z < l)
        };
        Ok(Report::new("even_z_below_l", g, status).with("z_d", z).with("l_d", l))
    }

    /// Z-insensitive graphs have `γ_Zg = γ_g` and `γ'_Zg = γ'_g`.
    pub fn check_z_insensitive_equality(&mut self, g: &Graph) -> Result<Report> {
        if let Some(w) = z_insensitivity_witness(g)? {
            return Ok(Report::new("z_insensitive_equality", g, Status::Vacuous)
                .note(format!("Z-configuration at {} after playing {}", w.vertex, w.played)));
        }
        let p = self.profile(g)?;
        let (zd, gd) = (
            p.value(Variant::Z, Player::Dominator),
            p.value(Variant::Dom, Player::Dominator),
        );
        let (zs, gs) = (
            p.value(Variant::Z, Player::Staller),
            p.value(Variant::Dom, Player::Staller),
        );
        Ok(
            Report::new("z_insensitive_equality", g, Report::status_if(zd == gd && zs == gs))
                .with("z_d", zd)
                .with("dom_d", gd)
                .with("z_s", zs)
                .with("dom_s", gs),
        )
    }

    /// Deleting one vertex of a true-twin pair keeps `γ_g`; of a false-twin
    /// pair keeps `γ_tg`. One report per kind.
    pub fn check_twin_lemmas(&mut self, g: &Graph) -> Result<Vec<Report>> {
        let mut out = Vec::new();
        // the solver needs isolate-free graphs, so only pairs whose deletion
        // keeps every vertex covered by a neighbour are usable
        let usable = |kind| {
            find_twins(g, kind)
                .into_iter()
                .find(|&(_, v)| g.remove_vertex(v).map(|h| h.is_isolate_free()).unwrap_or(false))
        };
        match usable(TwinKind::True) {
            None => out.push(Report::new("true_twin_deletion", g, Status::Vacuous)),
            Some((u, v)) => {
                let smaller = g.remove_vertex(v)?;
                let before = self.d(g, Variant::Dom)?;
                let after = self.d(&smaller, Variant::Dom)?;
                out.push(
                    Report::new("true_twin_deletion", g, Report::status_if(before == after))
                        .with("u", u as i64)
                        .with("v", v as i64)
                        .with("dom_d", before)
                        .with("dom_d_minus_v", after),
                );
            }
        }
        match usable(TwinKind::False) {
            None => out.push(Report::new("false_twin_deletion", g, Status::Vacuous)),
            Some((u, v)) => {
                let smaller = g.remove_vertex(v)?;
                let before = self.d(g, Variant::Total)?;
                let after = self.d(&smaller, Variant::Total)?;
                out.push(
                    Report::new("false_twin_deletion", g, Report::status_if(before == after))
                        .with("u", u as i64)
                        .with("v", v as i64)
                        .with("total_d", before)
                        .with("total_d_minus_v", after),
                );
            }
        }
        Ok(out)
    }

    /// Enough pendants on a supportive dominating set give `γ_g = 2γ − 1`.
    pub fn check_pendant_theorem(&mut self, g: &Graph) -> Result<Report> {
        if !satisfies_pendant_theorem_hypothesis(g)? {
            return Ok(Report::new("pendant_support", g, Status::Vacuous));
        }
        let gamma = domination_number(g)?.0 as u32;
        let gg = self.d(g, Variant::Dom)?;
        Ok(
            Report::new("pendant_support", g, Report::status_if(gg == 2 * gamma - 1))
                .with("gamma", gamma)
                .with("dom_d", gg),
        )
    }

    /// Claw-free ⟹ weakly claw-free ⟹ Z-insensitive.
    pub fn check_claw_chain(&mut self, g: &Graph) -> Result<Report> {
        let claw_free = is_claw_free(g);
        let weak = is_weakly_claw_free(g);
        let witness = if weak { z_insensitivity_witness(g)? } else { None };
        let status = if !weak && !claw_free {
            Status::Vacuous
        } else {
            Report::status_if((!claw_free || weak) && witness.is_none())
        };
        let mut r = Report::new("claw_chain", g, status)
            .with("claw_free", claw_free as i64)
            .with("weakly_claw_free", weak as i64);
        if let Some(w) = witness {
            r = r.note(format!("Z-configuration at {} after playing {}", w.vertex, w.played));
        }
        Ok(r)
    }

    /// Solver against the closed forms on Hamming graphs, bridge graphs and
    /// hat graphs.
    pub fn check_hamming_and_bridge_and_hat(&mut self) -> Result<Vec<Report>> {
        let mut out = Vec::new();
        for (m, n) in [(2, 3), (2, 4), (2, 5), (3, 5), (3, 6)] {
            let g = cartesian_product(&complete(m)?, &complete(n)?)?;
            let want = game_values_hamming(m, n)?;
            out.push(self.triple_report("hamming_values", &g, want, &[("m", m), ("n", n)])?);
        }
        for m in 3..=5 {
            for n in 3..=5 {
                let g = bridge_graph(m, n)?;
                let want = game_values_bridge(m, n)?;
                out.push(self.triple_report("bridge_values", &g, want, &[("m", m), ("n", n)])?);
            }
        }
        for base in [path(3)?, complete(3)?] {
            out.push(self.check_hat(&base)?);
        }
        Ok(out)
    }

    /// Z-, L- and LL-game D-values all equal to `want`.
    fn triple_report(&mut self, claim: &str, g: &Graph, want: u32, params: &[(&str, usize)]) -> Result<Report> {
        let z = self.d(g, Variant::Z)?;
        let l = self.d(g, Variant::L)?;
        let ll = self.d(g, Variant::LL)?;
        let mut r = Report::new(claim, g, Report::status_if(z == want && l == want && ll == want))
            .with("expected", want)
            .with("z_d", z)
            .with("l_d", l)
            .with("ll_d", ll);
        for (k, v) in params {
            r = r.with(k, *v as i64);
        }
        Ok(r)
    }

    /// `γ_Zg(Ĝ) = γ(Ĝ) = n(G) + 1` and `γ_g(Ĝ) = 2n(G) + 1`.
    pub fn check_hat(&mut self, base: &Graph) -> Result<Report> {
        let hat = hat_construction(base)?;
        let want = hat_values(base.n())?;
        let gamma = domination_number(&hat)?.0 as u32;
        // only D-game Z and DOM values are needed here; the full profile of a
        // 16-vertex graph is still cheap, so keep the hierarchy side effect
        let p = self.profile(&hat)?;
        let z = p.value(Variant::Z, Player::Dominator);
        let gg = p.value(Variant::Dom, Player::Dominator);
        let ok = z == want.gamma_zg && gamma == want.gamma && gg == want.gamma_g;
        Ok(Report::new("hat_values", &hat, Report::status_if(ok))
            .with("base_order", base.n() as i64)
            .with("z_d", z)
            .with("gamma", gamma)
            .with("dom_d", gg)
            .with("expected_z_d", want.gamma_zg)
            .with("expected_dom_d", want.gamma_g))
    }

    pub fn check_path_formula(&mut self, n: usize) -> Result<Report> {
        let g = path(n)?;
        let got = Solver::new(&g, Variant::Z)?
            .with_memo_cap(self.cap)
            .value(Player::Dominator)?;
        let want = gamma_zg_path(n)?;
        Ok(Report::new("path_formula", &g, Report::status_if(got == want))
            .with("z_d", got)
            .with("expected", want))
    }

    pub fn check_cycle_power_formula(&mut self, big_n: usize, n: usize) -> Result<Report> {
        let g = cycle_power(big_n, n)?;
        let got = Solver::new(&g, Variant::Z)?
            .with_memo_cap(self.cap)
            .value(Player::Dominator)?;
        let want = gamma_zg_cycle_power(big_n, n)?;
        Ok(Report::new("cycle_power_formula", &g, Report::status_if(got == want))
            .with("big_n", big_n as i64)
            .with("n", n as i64)
            .with("z_d", got)
            .with("expected", want))
    }

    /// The small worked values: `P_6` and the grid `P_2 □ P_3`.
    pub fn check_spot_values(&mut self) -> Result<Vec<Report>> {
        let mut out = Vec::new();
        let grid = cartesian_product(&path(2)?, &path(3)?)?;
        for (g, gt, gg, gz) in [(path(6)?, 4, 3, 3), (grid, 2, 3, 3)] {
            let t = total_domination_number(&g)?.0 as u32;
            let p = self.profile(&g)?;
            let d = p.value(Variant::Dom, Player::Dominator);
            let z = p.value(Variant::Z, Player::Dominator);
            out.push(
                Report::new("spot_values", &g, Report::status_if((t, d, z) == (gt, gg, gz)))
                    .with("gamma_t", t)
                    .with("dom_d", d)
                    .with("z_d", z),
            );
        }
        Ok(out)
    }
}

fn hierarchy_report(g: &Graph, p: &InvariantProfile) -> Report {
    let bad = p.hierarchy_violations();
    let mut r = Report::new("hierarchy", g, Report::status_if(bad.is_empty()));
    for (k, v) in p.entries() {
        r = r.with(&k, v);
    }
    if !bad.is_empty() {
        r = r.note(bad.join("; "));
    }
    r
}

/// Named suite presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Structure,
    Products,
    Theorems,
    SpotValues,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Structure, Suite::Products, Suite::Theorems, Suite::SpotValues];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Products => "products",
            Suite::Theorems => "theorems",
            Suite::SpotValues => "spotvalues",
        }
    }

    /// Largest connected-graph order swept when no override is given.
    pub fn default_max_order(self) -> usize {
        match self {
            Suite::Products => 5,
            _ => 7,
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// One independent unit of a suite.
#[derive(Clone, Debug)]
enum Job {
    Structure(Graph),
    Products(Graph),
    Theorems(Graph),
    EvenZ(Graph),
    Fixed,
    Path(usize),
    CyclePower(usize, usize),
}

impl Job {
    fn run(&self, cap: usize) -> Result<Vec<Report>> {
        let mut v = Verifier::with_memo_cap(cap);
        let mut out = Vec::new();
        match self {
            Job::Structure(g) => {
                out.push(v.check_claw_chain(g)?);
                out.push(v.check_z_insensitive_equality(g)?);
                out.extend(v.check_twin_lemmas(g)?);
            }
            Job::Products(g) => {
                for n in [2, 3] {
                    out.push(v.check_lexicographic_total(g, n)?);
                    out.push(v.check_lexicographic_complete(g, n)?);
                }
            }
            Job::Theorems(g) => {
                out.push(v.check_even_z_theorem(g)?);
                if g.n() >= 3 {
                    out.push(v.check_pendant_theorem(g)?);
                }
            }
            Job::EvenZ(g) => out.push(v.check_even_z_theorem(g)?),
            Job::Fixed => {
                out.extend(v.check_spot_values()?);
                out.extend(v.check_hamming_and_bridge_and_hat()?);
            }
            Job::Path(n) => out.push(v.check_path_formula(*n)?),
            Job::CyclePower(big_n, n) => out.push(v.check_cycle_power_formula(*big_n, *n)?),
        }
        // hierarchy reports go first: they describe graphs the claims used
        let mut all = v.take_hierarchy_reports();
        all.extend(out);
        Ok(all)
    }
}

fn manifest(suite: Suite, max_order: usize) -> Result<Vec<Job>> {
    let graphs = |min: usize| connected_graphs_up_to(min, max_order);
    Ok(match suite {
        Suite::Structure => graphs(2)?.into_iter().map(Job::Structure).collect(),
        Suite::Products => graphs(2)?.into_iter().map(Job::Products).collect(),
        Suite::Theorems => {
            let mut jobs: Vec<Job> = graphs(2)?.into_iter().map(Job::Theorems).collect();
            for n in 2..=max_order.max(12) {
                jobs.extend(enumerate_free_trees(n)?.map(Job::EvenZ));
            }
            jobs.push(Job::Fixed);
            jobs
        }
        Suite::SpotValues => {
            let mut jobs = vec![Job::Fixed];
            jobs.extend((2..=20).map(Job::Path));
            for big_n in 3..=14 {
                jobs.extend((1..=3).map(|n| Job::CyclePower(big_n, n)));
            }
            jobs
        }
    })
}

/// Outcome of a suite run: reports in manifest order, truncated after the
/// first failure.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub reports: Vec<Report>,
    pub first_failure: Option<Report>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.reports.iter().filter(|r| r.status == status).count()
    }

    pub fn write_jsonl(&self, mut w: impl Write) -> Result<()> {
        for r in &self.reports {
            writeln!(w, "{}", r.to_json())?;
        }
        Ok(())
    }

    /// Writes the failing report (with its graph in graph6) to `path`.
    pub fn write_counterexample(&self, path: &Path) -> Result<()> {
        if let Some(r) = &self.first_failure {
            fs::write(path, format!("{}\n", r.to_json()))?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, max_order: Option<usize>, cap: usize) -> Result<SuiteOutcome> {
    let max_order = max_order.unwrap_or_else(|| suite.default_max_order());
    let jobs = manifest(suite, max_order)?;
    let results: Vec<Result<Vec<Report>>> = jobs.par_iter().map(|j| j.run(cap)).collect();
    let mut reports = Vec::new();
    let mut seen_hierarchy = rustc_hash::FxHashSet::default();
    let mut first_failure = None;
    'jobs: for r in results {
        for rep in r? {
            if rep.claim == "hierarchy" && !seen_hierarchy.insert(rep.graph.clone()) {
                continue;
            }
            let failed = rep.status == Status::Fail;
            reports.push(rep);
            if failed {
                first_failure = reports.last().cloned();
                break 'jobs;
            }
        }
    }
    Ok(SuiteOutcome {
        suite,
        reports,
        first_failure,
    })
}

/// `G ∘ K̄_n` convenience used by callers that want the product itself.
pub fn lexicographic_with_empty(g: &Graph, n: usize) -> Result<Graph> {
    lexicographic_product(g, &complement(&complete(n)?))
}
