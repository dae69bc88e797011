//! Seeded property suites over exhaustive grids and random samples of
//! algebras. Each suite reports, per property, how many instances were
//! checked, how many failed, and the first failing instance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AdmissibleSequence, Kind};
use crate::dim::{ExtendedNat, Finite};
use crate::endo::{
    drop_check, end_algebra, lemma_br_check, mueller_domdim, projdim_key_check, xt_dimension_check,
};
use crate::hom_ext::{
    domdim, ext_dim, gldim, gorenstein_dim, hom_basis, hom_dim, id, oracle_ext1_dim, oracle_hom_dim, pd,
    syzygy, pd_sum,
};
use crate::module::{ModuleSum, Uniserial};
use crate::sweep::{grid, random_algebra, random_sequence};
use crate::tilting::{
    build_cc, build_tc, classify, criterion, drop_side_conditions, in_c, in_c_sum, it_phi_psi, q_tilde,
    tilting_candidate, verify_cotilting, verify_tilting, x_set_and_omega,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tilting,
    Oracle,
    Structural,
    Drop,
    Endo,
    It,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Tilting, Suite::Oracle, Suite::Structural, Suite::Drop, Suite::Endo, Suite::It];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tilting => "tilting",
            Suite::Oracle => "oracle",
            Suite::Structural => "structural",
            Suite::Drop => "drop",
            Suite::Endo => "endo",
            Suite::It => "it",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name, or `all`.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(vec![s.parse()?])
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}` (expected one of tilting, oracle, structural, drop, endo, it, all)")))
    }
}

/// Sizes for a suite run. The exhaustive grid covers both kinds with
/// `n <= grid_n` and entries at most `grid_c`; random samples use
/// `n <= n_max` and entries at most `c_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub n_max: usize,
    pub c_max: usize,
    pub grid_n: usize,
    pub grid_c: usize,
    pub cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { samples: 1000, seed: 42, n_max: 8, c_max: 12, grid_n: 4, grid_c: 6, cap: 30 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyOutcome::passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyOutcome> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "suite {} {status}", self.suite)?;
        for p in &self.properties {
            let s = if p.passed() { "ok" } else { "FAILED" };
            write!(f, "  {:<48} {:>8} checked {:>6} failed  {s}", p.name, p.checked, p.failed)?;
            if let Some(c) = &p.first_counterexample {
                write!(f, "\n    first counterexample: {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Per-instance results, merged in input order so the first
/// counterexample does not depend on thread scheduling.
#[derive(Debug, Default)]
struct Tally {
    order: Vec<String>,
    outcomes: BTreeMap<String, PropertyOutcome>,
}

impl Tally {
    fn declare(&mut self, name: &str) {
        if !self.outcomes.contains_key(name) {
            self.order.push(name.to_string());
            self.outcomes.insert(
                name.to_string(),
                PropertyOutcome { name: name.to_string(), checked: 0, failed: 0, first_counterexample: None },
            );
        }
    }

    fn check(&mut self, name: &str, ok: bool, context: impl FnOnce() -> String) {
        self.declare(name);
        let o = self.outcomes.get_mut(name).expect("declared");
        o.checked += 1;
        if !ok {
            o.failed += 1;
            if o.first_counterexample.is_none() {
                o.first_counterexample = Some(context());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        let Tally { order, mut outcomes } = other;
        for name in order {
            let o = outcomes.remove(&name).expect("ordered");
            self.declare(&name);
            let mine = self.outcomes.get_mut(&name).expect("declared");
            mine.checked += o.checked;
            mine.failed += o.failed;
            if mine.first_counterexample.is_none() {
                mine.first_counterexample = o.first_counterexample;
            }
        }
    }

    fn into_report(mut self, suite: Suite) -> SuiteReport {
        let properties = self.order.iter().map(|n| self.outcomes.remove(n).expect("ordered")).collect();
        SuiteReport { suite, properties }
    }
}

fn run_over<T: Sync>(items: &[T], names: &[&str], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for n in names {
        total.declare(n);
    }
    for p in parts {
        total.merge(p);
    }
    total
}

fn rng(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// The exhaustive grid followed by `samples` random algebras.
pub fn grid_and_samples(cfg: &SuiteConfig, salt: u64) -> Vec<AdmissibleSequence> {
    let mut algs = grid(cfg.grid_n, cfg.grid_c);
    let mut r = rng(cfg, salt);
    algs.extend((0..cfg.samples).map(|_| random_algebra(&mut r, cfg.n_max, cfg.c_max)));
    algs
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.cap == 0 {
        return Err(Error::ZeroCap);
    }
    if cfg.n_max == 0 || cfg.c_max < 2 {
        return Err(Error::Precondition("suites need n_max >= 1 and c_max >= 2".into()));
    }
    let tally = match suite {
        Suite::Tilting => tilting_suite(cfg),
        Suite::Oracle => oracle_suite(cfg),
        Suite::Structural => structural_suite(cfg),
        Suite::Drop => drop_suite(cfg),
        Suite::Endo => endo_suite(cfg),
        Suite::It => it_suite(cfg),
    };
    Ok(tally.into_report(suite))
}

const TILTING: [&str; 8] = [
    "criterion <=> domdim >= 2",
    "criterion <=> omega bijection",
    "criterion <=> Q~+X is tilting",
    "T_C tilting with summands in C",
    "T_C = Q~ + X",
    "criterion <=> C_C cotilting in C",
    "T_C non-projectives covered by Q~",
    "|Q~| + |X| <= n",
];

fn tilting_suite(cfg: &SuiteConfig) -> Tally {
    let algs = grid_and_samples(cfg, 1);
    run_over(&algs, &TILTING, |alg, t| {
        let crit = criterion(alg);
        let dd = domdim(alg);
        let om = x_set_and_omega(alg);
        let ctx = || alg.to_string();
        t.check(TILTING[0], crit == (dd >= Finite(2)), || format!("{alg}: criterion {crit}, domdim {dd}"));
        t.check(TILTING[1], crit == om.is_bijection, ctx);
        let cand = tilting_candidate(alg);
        let cand_tilting = verify_tilting(alg, &cand).unwrap_or(false);
        t.check(TILTING[2], crit == cand_tilting, || format!("{alg}: Q~+X = {cand}"));
        let q = q_tilde(alg);
        t.check(TILTING[7], q.len() + om.x.len() <= alg.n(), ctx);
        match build_tc(alg) {
            Some(tc) => {
                let ok = verify_tilting(alg, &tc).unwrap_or(false) && in_c_sum(alg, &tc);
                t.check(TILTING[3], ok, || format!("{alg}: T_C = {tc}"));
                t.check(TILTING[4], tc == cand, || format!("{alg}: T_C = {tc}, Q~+X = {cand}"));
                let covered = tc
                    .iter()
                    .filter(|&&u| !alg.is_projective(u))
                    .all(|&u| alg.is_projective_injective(alg.projective(u.top)));
                t.check(TILTING[6], covered, || format!("{alg}: T_C = {tc}"));
            }
            None => t.check(TILTING[3], !crit, ctx),
        }
        // The cotilting candidate built without consulting the criterion.
        let mut cc = q.clone();
        for j in alg.vertices() {
            let inj = alg.injective(j);
            if !alg.is_projective(inj) {
                cc.push(syzygy(alg, inj).expect("non-projective"));
            }
        }
        let cotilting = cc.is_basic() && in_c_sum(alg, &cc) && verify_cotilting(alg, &cc).unwrap_or(false);
        t.check(TILTING[5], crit == cotilting && build_cc(alg).is_none_or(|b| b == cc), || {
            format!("{alg}: C_C candidate {cc}")
        });
    })
}

const ORACLE: [&str; 2] = ["hom_dim = oracle", "ext_dim(.,.,1) = oracle"];

/// Random module pairs checked per sampled algebra.
const ORACLE_PAIRS: usize = 16;

/// Every pair over the exhaustive grid, plus `ORACLE_PAIRS` random pairs
/// over each random sample.
fn oracle_suite(cfg: &SuiteConfig) -> Tally {
    let check = |alg: &AdmissibleSequence, u: Uniserial, v: Uniserial, t: &mut Tally| {
        let (h, ho) = (hom_dim(alg, u, v), oracle_hom_dim(alg, u, v));
        t.check(ORACLE[0], h == ho, || format!("{alg}: Hom({u},{v}) {h} vs {ho}"));
        let (e, eo) = (ext_dim(alg, u, v, 1), oracle_ext1_dim(alg, u, v));
        t.check(ORACLE[1], e == eo, || format!("{alg}: Ext1({u},{v}) {e} vs {eo}"));
    };
    let mut t = run_over(&grid(cfg.grid_n, cfg.grid_c), &ORACLE, |alg, t| {
        let mods = alg.indecomposables();
        for &u in &mods {
            for &v in &mods {
                check(alg, u, v, t);
            }
        }
    });
    let mut r = rng(cfg, 2);
    let samples: Vec<(AdmissibleSequence, Vec<(Uniserial, Uniserial)>)> = (0..cfg.samples)
        .map(|_| {
            let a = random_algebra(&mut r, cfg.n_max, cfg.c_max);
            let mods = a.indecomposables();
            let pairs = (0..ORACLE_PAIRS)
                .map(|_| (mods[r.gen_range(0..mods.len())], mods[r.gen_range(0..mods.len())]))
                .collect();
            (a, pairs)
        })
        .collect();
    t.merge(run_over(&samples, &[], |(alg, pairs), t| {
        for &(u, v) in pairs {
            check(alg, u, v, t);
        }
    }));
    t
}

const STRUCTURAL: [&str; 9] = [
    "in C => pd, id <= gldim - 1",
    "in C, pd Y = 1 => Ext1(Y, X) = 0",
    "in C <=> Gen(Q~) and Cogen(Q~)",
    "domdim = domdim of opposite",
    "gldim finite => gdim = gldim attained",
    "|Q~| + |X| <= n",
    "tilting-cotilting <=> 1-AG",
    "1-AG and gldim finite <=> Auslander",
    "Ext^k = 0 above pd",
];

/// Criterion-positive algebras from the tilting grid and samples.
fn structural_suite(cfg: &SuiteConfig) -> Tally {
    let algs: Vec<AdmissibleSequence> = grid_and_samples(cfg, 1).into_iter().filter(criterion).collect();
    run_over(&algs, &STRUCTURAL, |alg, t| {
        let mods = alg.indecomposables();
        let gl = gldim(alg);
        let q = q_tilde(alg);
        for &u in &mods {
            let c = in_c(alg, u);
            if let (true, Finite(d)) = (c, gl) {
                if d >= 1 {
                    let ok = pd(alg, u) <= Finite(d - 1) && id(alg, u) <= Finite(d - 1);
                    t.check(STRUCTURAL[0], ok, || format!("{alg}: {u} with gldim {d}"));
                }
            }
            if c {
                for &y in &mods {
                    if pd(alg, y) == Finite(1) {
                        let e = ext_dim(alg, y, u, 1);
                        t.check(STRUCTURAL[1], e == 0, || format!("{alg}: Ext1({y},{u}) = {e}"));
                    }
                }
            }
            let gen = q.iter().any(|&p| hom_basis(alg, p, u).iter().any(|f| f.is_epi()));
            let cogen = q.iter().any(|&p| hom_basis(alg, u, p).iter().any(|f| f.is_mono()));
            t.check(STRUCTURAL[2], c == (gen && cogen), || format!("{alg}: {u}"));
            if let Finite(p) = pd(alg, u) {
                let ok = (p + 1..p + 4).all(|k| mods.iter().all(|&v| ext_dim(alg, u, v, k) == 0));
                t.check(STRUCTURAL[8], ok, || format!("{alg}: {u} with pd {p}"));
            }
        }
        let op = alg.opposite().0;
        t.check(STRUCTURAL[3], domdim(alg) == domdim(&op), || format!("{alg} vs {op}"));
        if let Finite(d) = gl {
            let g = gorenstein_dim(alg);
            let attained = alg.vertices().any(|i| id(alg, alg.projective(i)) == Finite(d));
            t.check(STRUCTURAL[4], g.gdim == Some(d) && attained, || format!("{alg}: {g:?}"));
        }
        let om = x_set_and_omega(alg);
        t.check(STRUCTURAL[5], q.len() + om.x.len() <= alg.n(), || alg.to_string());
        let r = classify(alg);
        let both = match (&r.t_c, &r.c_c) {
            (Some(tc), Some(cc)) => {
                tc == cc && verify_tilting(alg, tc).unwrap_or(false) && verify_cotilting(alg, cc).unwrap_or(false)
            }
            _ => false,
        };
        t.check(STRUCTURAL[6], both == r.one_aus_gorenstein, || format!("{alg}: {r:?}"));
        let lhs = r.one_aus_gorenstein && r.gldim.is_finite();
        t.check(STRUCTURAL[7], lhs == r.auslander, || format!("{alg}: {r:?}"));
    })
}

const DROP: [&str; 4] = [
    "gldim B_C < d <=> pd tau T_C < d",
    "d - 1 <= gldim B_C <= d",
    "drop side conditions agree",
    "side conditions match pd tau T_C < d",
];

/// Random criterion-positive algebras of finite global dimension.
pub fn drop_samples(cfg: &SuiteConfig, salt: u64) -> Vec<AdmissibleSequence> {
    let mut r = rng(cfg, salt);
    let mut out = Vec::with_capacity(cfg.samples);
    let mut attempts = 0;
    while out.len() < cfg.samples && attempts < 200 * cfg.samples.max(1) {
        attempts += 1;
        let a = random_algebra(&mut r, cfg.n_max, cfg.c_max);
        if gldim(&a).is_finite() && criterion(&a) {
            out.push(a);
        }
    }
    out
}

fn drop_suite(cfg: &SuiteConfig) -> Tally {
    let algs = drop_samples(cfg, 3);
    run_over(&algs, &DROP, |alg, t| {
        match drop_check(alg, cfg.cap) {
            Ok(d) => {
                t.check(DROP[0], d.theorem_drop_holds == Some(true), || format!("{alg}: {d:?}"));
                t.check(DROP[1], d.bounds_hold == Some(true), || format!("{alg}: {d:?}"));
            }
            Err(e) => t.check(DROP[0], false, || format!("{alg}: {e}")),
        }
        match drop_side_conditions(alg) {
            Ok(s) => {
                t.check(DROP[2], s.agree(), || format!("{alg}: {s:?}"));
                let d = gldim(alg);
                let below = crate::tilting::pd_tau_tc(alg).map(|p| p < d || d == Finite(0));
                t.check(DROP[3], below == Ok(s.pd_tau_below_gldim), || format!("{alg}: {s:?}"));
            }
            Err(e) => t.check(DROP[2], false, || format!("{alg}: {e}")),
        }
    })
}

const ENDO: [&str; 8] = [
    "dim End(X) = sum of hom dims",
    "mueller domdim >= 2",
    "mueller domdim antitone in X",
    "hereditary => mueller domdim = 2",
    "id <= m non-selfinjective => domdim <= m + 1",
    "dim End Hom(T_C, Q~) = dim End Q~",
    "pd over B_C = pd - 1",
    "XT rows agree <=> Ext1(X, X_j) = 0",
];

fn regular_plus_dual(alg: &AdmissibleSequence) -> ModuleSum {
    let p: ModuleSum = alg.vertices().map(|i| alg.projective(i)).collect();
    p.plus(&alg.vertices().map(|j| alg.injective(j)).collect()).basic_part()
}

/// A generator-cogenerator with a few random extra summands.
fn random_gen_cogen<R: Rng>(rng: &mut R, alg: &AdmissibleSequence, extra: usize) -> ModuleSum {
    let mods = alg.indecomposables();
    let mut x = regular_plus_dual(alg);
    for _ in 0..extra {
        x.push(mods[rng.gen_range(0..mods.len())]);
    }
    x.basic_part()
}

/// Modules generated by the projective-injectives with `1 <= pd < ∞`.
fn key_modules(alg: &AdmissibleSequence) -> Vec<Uniserial> {
    alg.indecomposables()
        .into_iter()
        .filter(|&u| {
            alg.is_injective(alg.projective(u.top)) && matches!(pd(alg, u), Finite(p) if p >= 1)
        })
        .collect()
}

/// Random `(algebra, M)` pairs for the `projdim key` check, at most one
/// module per algebra.
pub fn key_samples(cfg: &SuiteConfig, salt: u64) -> Vec<(AdmissibleSequence, Uniserial)> {
    let mut r = rng(cfg, salt);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < cfg.samples && attempts < 200 * cfg.samples.max(1) {
        attempts += 1;
        let a = random_algebra(&mut r, cfg.n_max, cfg.c_max);
        if !criterion(&a) {
            continue;
        }
        let ms = key_modules(&a);
        if ms.is_empty() {
            continue;
        }
        let m = ms[r.gen_range(0..ms.len())];
        out.push((a, m));
    }
    out
}

fn endo_suite(cfg: &SuiteConfig) -> Tally {
    let mut r = rng(cfg, 5);
    let mut gen_cases = Vec::new();
    for _ in 0..cfg.samples {
        let a = random_algebra(&mut r, cfg.n_max.min(5), cfg.c_max.min(6));
        let x = random_gen_cogen(&mut r, &a, 2);
        let extra = a.indecomposables()[r.gen_range(0..a.indecomposables().len())];
        gen_cases.push((a, x, extra));
    }
    let mut hereditary = Vec::new();
    for n in 2..=cfg.n_max.min(6) {
        let a = AdmissibleSequence::linear(&(1..=n).collect::<Vec<_>>()).expect("hereditary");
        for _ in 0..4 {
            let x = random_gen_cogen(&mut r, &a, 3);
            hereditary.push((a.clone(), x));
        }
    }
    let keys = key_samples(cfg, 6);

    let mut t = run_over(&gen_cases, &ENDO, |(alg, x, extra), t| {
        if let Ok(e) = end_algebra(alg, x) {
            let expect: usize = x.iter().map(|&u| x.iter().map(|&v| hom_dim(alg, u, v)).sum::<usize>()).sum();
            t.check(ENDO[0], e.dim() == expect, || format!("{alg}: X = {x}"));
        }
        let m = mueller_domdim(alg, x).expect("generator-cogenerator");
        t.check(ENDO[1], m >= Finite(2), || format!("{alg}: X = {x}, {m}"));
        let mut y = x.clone();
        if !y.contains(extra) {
            y.push(*extra);
        }
        let my = mueller_domdim(alg, &y).expect("generator-cogenerator");
        t.check(ENDO[2], m >= my, || format!("{alg}: X = {x} gives {m}, X + {extra} gives {my}"));
        let selfinjective = alg.vertices().all(|i| alg.is_injective(alg.projective(i)));
        if let (false, Finite(il)) = (selfinjective, gorenstein_dim(alg).id_left) {
            t.check(ENDO[4], m <= Finite(il + 1), || format!("{alg}: X = {x}, {m}, id {il}"));
        }
        if let Ok(rows) = xt_dimension_check(alg, x) {
            for row in rows {
                t.check(ENDO[7], row.agrees() == (row.ext1_dim == 0), || format!("{alg}: {row:?}"));
            }
        }
        if criterion(alg) {
            match lemma_br_check(alg) {
                Ok(br) => t.check(ENDO[5], br.holds(), || format!("{alg}: {br:?}")),
                Err(e) => t.check(ENDO[5], false, || format!("{alg}: {e}")),
            }
        }
    });
    t.merge(run_over(&hereditary, &[], |(alg, x), t| {
        let m = mueller_domdim(alg, x).expect("generator-cogenerator");
        t.check(ENDO[3], m == Finite(2), || format!("{alg}: X = {x}, {m}"));
    }));
    t.merge(run_over(&keys, &[], |(alg, m), t| {
        let r = projdim_key_check(alg, *m, cfg.cap);
        t.check(ENDO[6], r == Ok(true), || format!("{alg}: M = {m}, {r:?}"));
        if let Ok(br) = lemma_br_check(alg) {
            t.check(ENDO[5], br.holds(), || format!("{alg}: {br:?}"));
        }
    }));
    t
}

const IT: [&str; 3] = ["finite pd => (phi, psi) = (pd, pd)", "phi <= psi", "selfinjective [2,2] S1+S2 => (0, 0)"];

/// A random module sum of finite projective dimension.
fn random_finite_pd_sum<R: Rng>(rng: &mut R, alg: &AdmissibleSequence) -> Option<ModuleSum> {
    let finite: Vec<Uniserial> = alg.indecomposables().into_iter().filter(|&u| pd(alg, u).is_finite()).collect();
    if finite.is_empty() {
        return None;
    }
    let k = rng.gen_range(1..=4);
    Some((0..k).map(|_| finite[rng.gen_range(0..finite.len())]).collect())
}

pub fn it_samples(cfg: &SuiteConfig, salt: u64) -> Vec<(AdmissibleSequence, ModuleSum)> {
    let mut r = rng(cfg, salt);
    let mut out = Vec::with_capacity(cfg.samples);
    while out.len() < cfg.samples {
        let a = random_algebra(&mut r, cfg.n_max, cfg.c_max);
        if let Some(m) = random_finite_pd_sum(&mut r, &a) {
            out.push((a, m));
        }
    }
    out
}

fn it_suite(cfg: &SuiteConfig) -> Tally {
    let cases = it_samples(cfg, 7);
    let mut r = rng(cfg, 8);
    let general: Vec<(AdmissibleSequence, ModuleSum)> = (0..cfg.samples)
        .map(|_| {
            let a = random_sequence(&mut r, Kind::Cyclic, cfg.n_max, cfg.c_max);
            let mods = a.indecomposables();
            let k = r.gen_range(1..=4);
            let m: ModuleSum = (0..k).map(|_| mods[r.gen_range(0..mods.len())]).collect();
            (a, m)
        })
        .collect();
    let mut t = run_over(&cases, &IT, |(alg, m), t| {
        let p = pd_sum(alg, m).and_then(ExtendedNat::finite).expect("finite pd sample");
        let got = it_phi_psi(alg, m);
        t.check(IT[0], got == Ok((p, p)), || format!("{alg}: M = {m}, pd {p}, got {got:?}"));
    });
    t.merge(run_over(&general, &[], |(alg, m), t| {
        if let Ok((phi, psi)) = it_phi_psi(alg, m) {
            t.check(IT[1], phi <= psi, || format!("{alg}: M = {m}"));
        }
    }));
    let a = AdmissibleSequence::cyclic(&[2, 2]).expect("admissible");
    let m = ModuleSum::new([a.simple(1), a.simple(2)]);
    let got = it_phi_psi(&a, &m);
    t.check(IT[2], got == Ok((0, 0)), || format!("got {got:?}"));
    t
}
