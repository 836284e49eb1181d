//! Exhaustive re-verification of the main statements at desk scale.
//!
//! Every suite returns a [`SuiteReport`] made of named cases; a case fails
//! with a counterexample rather than panicking.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{
    beta_number, core_from_y, e_core, e_quotient, e_weight, from_core_and_quotient, is_e_core, partition_from_beta,
    x_vector, y_vector,
};
use crate::blocks::{
    box_window, core_partition_of_block, deparametrise, enumerate_blocks, is_block, is_level_one_block,
    nonnegative_window, parametrise, s_core_of_block, Limits, Multicharge,
};
use crate::bounds::{
    n_bounds, n_closed_form, n_exact, superadditivity_violations, theorem_c_check, tuple_weight, verify_spectrum,
    BoundLimits, Strategy, SubsetTuple,
};
use crate::error::{Error, Result};
use crate::lattice::{BlockVector, Modulus};
use crate::partition::{charge_weight, partitions_up_to, residue_counts, Partition};
use crate::shift::{
    ehat_core_checks, is_stuttering_block, is_stuttering_partition, pi_project, shift_block_membership, sigma_block,
    sigma_core, sigma_partition, stuttering_witness, ShiftClass, ShiftParam,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Roundtrips,
    Weights,
    LevelOne,
    Theorem0,
    TheoremC,
    Spectra,
    BoundsTable,
    Shift,
    Stuttering,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Roundtrips,
        Suite::Weights,
        Suite::LevelOne,
        Suite::Theorem0,
        Suite::TheoremC,
        Suite::Spectra,
        Suite::BoundsTable,
        Suite::Shift,
        Suite::Stuttering,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrips => "roundtrips",
            Suite::Weights => "weights",
            Suite::LevelOne => "level-one",
            Suite::Theorem0 => "theorem0",
            Suite::TheoremC => "theoremC",
            Suite::Spectra => "spectra",
            Suite::BoundsTable => "bounds-table",
            Suite::Shift => "shift",
            Suite::Stuttering => "stuttering",
        }
    }

    /// `"all"` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Scale of the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Partition size bound for the block and shift enumerations.
    pub max_n: usize,
    /// Largest `e` in the `N(r,e)` table and the spectra.
    pub max_e: u32,
    /// Largest `r` in the `N(r,e)` table.
    pub max_r: usize,
    /// Partition size bound for the weight comparison.
    pub weight_n: usize,
    /// Partition size bound for the round trips.
    pub roundtrip_n: usize,
    /// Seed for the sampled properties.
    pub seed: u64,
    pub limits: Limits,
    pub bound_limits: BoundLimits,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 12,
            max_e: 8,
            max_r: 6,
            weight_n: 20,
            roundtrip_n: 15,
            seed: 0x5eed,
            limits: Limits::default(),
            bound_limits: BoundLimits::default(),
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_e == 0 || self.max_r == 0 || self.weight_n == 0 || self.roundtrip_n == 0 {
            return Err(Error::InvalidArgument("limits must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Case {
    fn ok(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Case { id: id.into(), passed: true, detail: detail.into(), counterexample: None }
    }

    fn fail(id: impl Into<String>, detail: impl Into<String>, cx: impl Into<String>) -> Self {
        Case { id: id.into(), passed: false, detail: detail.into(), counterexample: Some(cx.into()) }
    }

    /// Passes iff `failure` is `None`.
    fn from_check(id: impl Into<String>, checked: usize, failure: Option<String>) -> Self {
        match failure {
            None => Case::ok(id, format!("{checked} checked")),
            Some(cx) => Case::fail(id, format!("{checked} checked"), cx),
        }
    }

    fn from_result(id: impl Into<String>, r: Result<Case>) -> Self {
        match r {
            Ok(c) => c,
            Err(e) => Case::fail(id, "error", e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

/// Runs the selected suites concurrently; reports come back in suite order
/// with cases sorted by id.
pub fn run(suites: &[Suite], cfg: &Config) -> Result<Vec<SuiteReport>> {
    cfg.validate()?;
    let mut reports: Vec<SuiteReport> = suites.par_iter().map(|&s| run_suite(s, cfg)).collect::<Result<_>>()?;
    reports.sort_by_key(|r| r.suite);
    Ok(reports)
}

pub fn run_suite(suite: Suite, cfg: &Config) -> Result<SuiteReport> {
    let mut cases = match suite {
        Suite::Roundtrips => roundtrips(cfg),
        Suite::Weights => weights(cfg),
        Suite::LevelOne => level_one(cfg),
        Suite::Theorem0 => theorem0(cfg),
        Suite::TheoremC => theorem_c(cfg),
        Suite::Spectra => spectra(cfg),
        Suite::BoundsTable => bounds_table(cfg),
        Suite::Shift => shift(cfg),
        Suite::Stuttering => stuttering(cfg),
    };
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport { suite, cases })
}

fn m(e: u32) -> Modulus {
    Modulus::new(e).expect("small modulus")
}

type Check = Result<Option<String>>;

/// First failing item of an exhaustive check; errors count as failures.
fn first_failure<T: Sync, F>(items: &[T], check: F) -> Option<String>
where
    F: Fn(&T) -> Check + Sync + Send,
{
    items.par_iter().find_map_first(|x| match check(x) {
        Ok(v) => v,
        Err(e) => Some(format!("error: {e}")),
    })
}

const CHARGES: [i64; 5] = [-2, -1, 0, 1, 2];

/// First charge in [`CHARGES`] at which `f` reports a failure.
fn over_charges(mut f: impl FnMut(i64) -> Check) -> Check {
    for s in CHARGES {
        if let Some(x) = f(s)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn roundtrips(cfg: &Config) -> Vec<Case> {
    let parts = partitions_up_to(cfg.roundtrip_n);
    let mut cases = Vec::new();
    let beta = first_failure(&parts, |l| {
        over_charges(|s| Ok((partition_from_beta(&beta_number(l, s)) != (l.clone(), s)).then(|| format!("λ={l} s={s}"))))
    });
    cases.push(Case::from_check("roundtrip/beta", parts.len() * CHARGES.len(), beta));
    for e in 0..=6u32 {
        let em = m(e);
        if e > 0 {
            let cq = first_failure(&parts, |l| {
                over_charges(|s| {
                    let core = e_core(l, em)?;
                    let q = e_quotient(l, s, em)?;
                    let back = from_core_and_quotient(&core, &q, s, em)?;
                    let sizes = core.size() + e as i64 * q.size() == l.size();
                    Ok((&back != l || !sizes).then(|| format!("λ={l} s={s}")))
                })
            });
            cases.push(Case::from_check(format!("roundtrip/core-quotient/e={e}"), parts.len(), cq));
        }
        // y ↔ core on cores; for e = 0 every partition is a core
        let y = first_failure(&parts, |l| {
            if !is_e_core(l, em) {
                return Ok(None);
            }
            over_charges(|s| {
                let y = y_vector(l, s, em)?;
                Ok((&core_from_y(&y, s)? != l).then(|| format!("λ={l} s={s} y={y}")))
            })
        });
        cases.push(Case::from_check(format!("roundtrip/y-core/e={e}"), parts.len(), y));
        if e > 0 {
            let p = first_failure(&parts, |l| {
                over_charges(|s| {
                    let a = residue_counts(l, s, em);
                    let (y, w) = parametrise(&a, s)?;
                    let back = deparametrise(&y, w, s)?;
                    Ok((back != a || w != e_weight(l, em)).then(|| format!("λ={l} s={s} α={a}")))
                })
            });
            cases.push(Case::from_check(format!("roundtrip/parametrise/e={e}"), parts.len(), p));
        }
    }
    cases.push(Case::from_result("worked-example", worked_example()));
    cases
}

/// `λ = (4,3,3,1)` at charge 1.
fn worked_example() -> Result<Case> {
    let l = Partition::new(vec![4, 3, 3, 1])?;
    let mut bad = Vec::new();
    let beta = beta_number(&l, 1).prefix(6);
    if beta != [4, 2, 1, -2, -4, -5] {
        bad.push(format!("β prefix {beta:?}"));
    }
    let q = e_quotient(&l, 1, m(3))?;
    if q.to_string() != "-|-|1" {
        bad.push(format!("3-quotient {q}"));
    }
    if !is_e_core(&l, m(6)) {
        bad.push("not a 6-core".into());
    }
    let x = x_vector(&l, 1, m(6))?;
    if x != [0, 1, 1, -1, 1, -1] {
        bad.push(format!("x = {x:?}"));
    }
    if charge_weight(&l, 1, m(3)) != 1 || e_weight(&l, m(3)) != 1 {
        bad.push("3-weight ≠ 1".into());
    }
    Ok(if bad.is_empty() {
        Case::ok("worked-example", "β, 3-quotient, 6-core, x at e=6")
    } else {
        Case::fail("worked-example", "mismatch", bad.join("; "))
    })
}

fn weights(cfg: &Config) -> Vec<Case> {
    let parts = partitions_up_to(cfg.weight_n);
    (0..=8u32)
        .map(|e| {
            let em = m(e);
            let cx = first_failure(&parts, |l| {
                let we = e_weight(l, em);
                over_charges(|s| {
                    let ws = charge_weight(l, s, em);
                    let expect = if e == 0 { 0 } else { we };
                    Ok((ws != expect || residue_counts(l, s, em).weight(&[s]) != ws)
                        .then(|| format!("λ={l} s={s}: w_e={we}, w_s={ws}")))
                })
            });
            Case::from_check(format!("weight/e={e}"), parts.len() * CHARGES.len(), cx)
        })
        .collect()
}

fn level_one(cfg: &Config) -> Vec<Case> {
    let mut cases = Vec::new();
    let single = |s| Multicharge::single(s);
    for e in 2..=5u32 {
        for s in [-1i64, 0, 1] {
            let id = format!("level-one/e={e}/s={s}");
            let r = (|| -> Result<Case> {
                let em = m(e);
                let mut checked = 0;
                for n in 0..=cfg.max_n {
                    let blocks = enumerate_blocks(&single(s), em, n, &cfg.limits)?;
                    let implicit: BTreeSet<BlockVector> = nonnegative_window(em, n as i64)?
                        .into_iter()
                        .filter(|a| a.weight(&[s]) >= 0)
                        .collect();
                    checked += implicit.len();
                    if blocks != implicit {
                        let diff = blocks.symmetric_difference(&implicit).next().unwrap();
                        return Ok(Case::fail(&id, format!("n={n}"), diff.to_string()));
                    }
                }
                // w ≥ 0 forces non-negative coefficients
                let lo = box_window(em, -2, 3)?;
                checked += lo.len();
                if let Some(a) = lo.iter().find(|a| a.weight(&[s]) >= 0 && !a.is_nonnegative()) {
                    return Ok(Case::fail(&id, "negative coefficient with w ≥ 0", a.to_string()));
                }
                Ok(Case::ok(&id, format!("{checked} checked")))
            })();
            cases.push(Case::from_result(&id, r));
        }
    }
    // e = 0: weight zero plus the difference conditions
    for s in [-1i64, 0, 1] {
        let id = format!("level-one/e=0/s={s}");
        let em = m(0);
        let parts = partitions_up_to(cfg.max_n);
        let forward = first_failure(&parts, |l| {
            let a = residue_counts(l, s, em);
            Ok((!is_level_one_block(&a, s)).then(|| format!("α({l}) rejected")))
        });
        // every α supported on s−3..=s+3 with coefficients ≤ 3 that passes
        // the test is the content vector of some partition
        let mut cands = Vec::new();
        let mut cur = [0i64; 7];
        loop {
            let a = BlockVector::from_pairs(em, cur.iter().enumerate().map(|(i, &c)| (s - 3 + i as i64, c))).unwrap();
            cands.push(a);
            let mut i = 0;
            while i < 7 && cur[i] == 3 {
                cur[i] = 0;
                i += 1;
            }
            if i == 7 {
                break;
            }
            cur[i] += 1;
        }
        let backward = first_failure(&cands, |a| {
            if !is_level_one_block(a, s) {
                return Ok(None);
            }
            Ok(match core_partition_of_block(a, s) {
                Ok(l) if &residue_counts(&l, s, em) == a => None,
                _ => Some(format!("α={a} accepted but no partition")),
            })
        });
        let accepted = cands.iter().filter(|a| is_level_one_block(a, s)).count();
        cases.push(Case::from_check(&id, parts.len() + cands.len(), forward.or(backward)));
        if accepted == 0 {
            cases.push(Case::fail(format!("{id}/nonempty"), "no candidate accepted", "-"));
        }
    }
    cases
}

fn theorem0_windows() -> Vec<(u32, Vec<Vec<i64>>)> {
    vec![
        (2, vec![vec![0, 0], vec![0, 1]]),
        (3, vec![vec![0, 0], vec![0, 1], vec![0, 2]]),
        (2, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]),
    ]
}

fn theorem0(cfg: &Config) -> Vec<Case> {
    let mut cases = Vec::new();
    for (e, charges) in theorem0_windows() {
        for s in charges {
            let s = Multicharge::new(s).expect("small charges");
            let id = format!("theorem0/r={}/e={e}/S={s}", s.level());
            let r = (|| -> Result<Case> {
                let em = m(e);
                let mut checked = 0;
                for n in 0..=cfg.max_n {
                    let blocks = enumerate_blocks(&s, em, n, &cfg.limits)?;
                    let window = nonnegative_window(em, n as i64)?;
                    for a in &window {
                        checked += 1;
                        let implicit = a.weight(s.charges()) >= 0;
                        if implicit != blocks.contains(a) {
                            return Ok(Case::fail(&id, format!("n={n}"), format!("α={a} w={}", a.weight(s.charges()))));
                        }
                        // the decision procedure agrees with enumeration
                        if n <= 8 && is_block(a, &s, &cfg.limits)? != implicit {
                            return Ok(Case::fail(&id, "is_block disagrees", a.to_string()));
                        }
                    }
                }
                let window = box_window(em, -3, 3)?;
                checked += window.len();
                if let Some(a) = window.iter().find(|a| a.weight(s.charges()) >= 0 && !a.is_nonnegative()) {
                    return Ok(Case::fail(&id, "negative coefficient with w ≥ 0", a.to_string()));
                }
                Ok(Case::ok(&id, format!("{checked} checked")))
            })();
            cases.push(Case::from_result(&id, r));
        }
    }
    cases
}

/// `(e, coefficient bound, multicharges)` for the superlevel scan.
fn theorem_c_windows() -> Vec<(u32, i64, Vec<Vec<i64>>)> {
    vec![
        (2, 6, vec![vec![0, 1], vec![0, 0]]),
        (3, 5, vec![vec![0, 0], vec![0, 1]]),
        (2, 5, vec![vec![0, 0, 1], vec![0, 1, 1]]),
        (4, 3, vec![vec![0, 2], vec![0, 1]]),
    ]
}

fn theorem_c(cfg: &Config) -> Vec<Case> {
    let mut cases = Vec::new();
    for (e, bound, charges) in theorem_c_windows() {
        for s in charges {
            let s = Multicharge::new(s).expect("small charges");
            let id = format!("theoremC/r={}/e={e}/S={s}", s.level());
            let r = theorem_c_check(e, &s, bound, &cfg.limits, &cfg.bound_limits).map(|rep| {
                let detail = format!("N={} scanned={} superlevel={}", rep.n, rep.checked, rep.superlevel);
                match rep.counterexample {
                    None if rep.superlevel > 0 => Case::ok(&id, detail),
                    None => Case::fail(&id, detail, "empty superlevel window"),
                    Some(a) => Case::fail(&id, detail, a.to_string()),
                }
            });
            cases.push(Case::from_result(&id, r));
        }
    }
    for h in 2..=4i64 {
        let id = format!("theoremC/e=0-control/h={h}");
        cases.push(Case::from_result(&id, e0_control(h, &cfg.limits).map(|c| Case { id: id.clone(), ..c })));
    }
    cases
}

/// `α = α^0((h^h)) + α_{h+1}` with `S = (0,0)`, `e = 0`: weight `h − 1`, not a block.
pub fn e0_control(h: i64, limits: &Limits) -> Result<Case> {
    let em = m(0);
    let sq = Partition::new(vec![h; h as usize])?;
    let a = residue_counts(&sq, 0, em).checked_add(&BlockVector::from_pairs(em, [(h + 1, 1)])?)?;
    let s = Multicharge::new(vec![0, 0])?;
    let w = a.weight(s.charges());
    let member = is_block(&a, &s, limits)?;
    let detail = format!("α={a} w={w}");
    Ok(if w == h - 1 && !member {
        Case::ok("", detail)
    } else {
        Case::fail("", detail, format!("weight {w}, block {member}"))
    })
}

fn spectra(cfg: &Config) -> Vec<Case> {
    let pairs: Vec<(u32, u32)> = (2..=cfg.max_e).flat_map(|e| (1..e).map(move |k| (e, k))).collect();
    pairs
        .par_iter()
        .map(|&(e, k)| {
            let id = format!("spectrum/e={e}/k={k}");
            Case::from_result(
                &id,
                verify_spectrum(e, k).map(|c| {
                    if c.passed() {
                        Case::ok(&id, "row sums, trace, A² identity, tr A²")
                    } else {
                        Case::fail(&id, "identity failed", format!("{c:?}"))
                    }
                }),
            )
        })
        .collect()
}

/// The specific values stated for small `r` or `e`.
fn stated_value(r: usize, e: u32) -> Option<i64> {
    let (ri, ei) = (r as i64, e as i64);
    match (r, e) {
        (2, _) => Some(ei / 2),
        (3, _) => Some(ei),
        (4, _) => Some(if e % 2 == 0 { 2 * ei } else { 2 * ei - 1 }),
        (_, 2) => Some(ri * ri / 4),
        (_, 3) => Some(ri * ri / 3),
        (_, 4) => Some(ri * ri / 2),
        (_, 5) => Some(3 * ri * ri / 5),
        (_, 6) => Some(3 * (ri * ri / 4)),
        _ => None,
    }
}

fn bounds_table(cfg: &Config) -> Vec<Case> {
    let mut cases = Vec::new();
    let grid: Vec<(usize, u32)> = (1..=cfg.max_r).flat_map(|r| (1..=cfg.max_e).map(move |e| (r, e))).collect();
    let table: Vec<Result<i64>> = grid
        .par_iter()
        .map(|&(r, e)| n_exact(r, e, Strategy::EqualSize, &cfg.bound_limits).map(|n| n.value))
        .collect();
    let lookup = |r: usize, e: u32| -> Option<i64> {
        let i = grid.iter().position(|&g| g == (r, e))?;
        table[i].as_ref().ok().copied()
    };
    for (&(r, e), v) in grid.iter().zip(&table) {
        let id = format!("table/r={r}/e={e}");
        let v = match v {
            Ok(v) => *v,
            Err(err) => {
                cases.push(Case::fail(id, "not computed", err.to_string()));
                continue;
            }
        };
        let mut bad = Vec::new();
        if r >= 2 && e >= 2 {
            if let Some(p) = stated_value(r, e) {
                if p != v {
                    bad.push(format!("stated value {p}"));
                }
            }
        }
        if let Some(c) = n_closed_form(r, e) {
            if c != v {
                bad.push(format!("closed form {c}"));
            }
        }
        if r <= 5 && e <= 5 {
            match n_exact(r, e, Strategy::Full, &cfg.bound_limits) {
                Ok(f) if f.value == v => {}
                Ok(f) => bad.push(format!("full search {}", f.value)),
                Err(err) => bad.push(err.to_string()),
            }
        }
        cases.push(if bad.is_empty() {
            Case::ok(id, format!("N={v}"))
        } else {
            Case::fail(id, format!("N={v}"), bad.join("; "))
        });
        if r >= 2 && e >= 2 {
            let id = format!("sandwich/r={r}/e={e}");
            let (lo, hi) = n_bounds(r, e).expect("r, e ≥ 2");
            cases.push(if lo <= v && v <= hi {
                Case::ok(id, format!("{lo} ≤ {v} ≤ {hi}"))
            } else {
                Case::fail(id, format!("{lo} ≤ {v} ≤ {hi}"), "bounds violated")
            });
        }
    }
    for r in 1..=cfg.max_r {
        let id = format!("superadditive/r={r}");
        let mut bad = Vec::new();
        for e in 1..cfg.max_e {
            for f in e..=cfg.max_e - e {
                if let (Some(a), Some(b), Some(c)) = (lookup(r, e), lookup(r, f), lookup(r, e + f)) {
                    if c < a + b {
                        bad.push(format!("N({r},{}) < N({r},{e}) + N({r},{f})", e + f));
                    }
                }
            }
        }
        cases.push(if bad.is_empty() { Case::ok(id, "all splits") } else { Case::fail(id, "", bad.join("; ")) });
    }
    // the library routine agrees with the table-based check
    if let Ok(v) = superadditivity_violations(2, cfg.max_e.min(8), &cfg.bound_limits) {
        let id = "superadditive/routine";
        cases.push(if v.is_empty() { Case::ok(id, "r=2") } else { Case::fail(id, "r=2", format!("{v:?}")) });
    }
    for (id, e, sets, want) in [
        ("witness/pentagon", 5, vec![vec![1u32, 2], vec![1, 3], vec![3, 5], vec![4, 5], vec![2, 4]], 15),
        ("witness/four-sets", 5, vec![vec![1, 3], vec![2, 4], vec![1, 5], vec![2, 5]], 9),
    ] {
        let refs: Vec<&[u32]> = sets.iter().map(|s| s.as_slice()).collect();
        let w = SubsetTuple::from_sets(e, &refs).map(|t| tuple_weight(&t));
        cases.push(match w {
            Ok(w) if w == want => Case::ok(id, format!("weight {w}")),
            Ok(w) => Case::fail(id, format!("weight {w}"), format!("expected {want}")),
            Err(err) => Case::fail(id, "error", err.to_string()),
        });
    }
    cases
}

fn shift_params(es: &[u32], dividing: bool) -> Vec<ShiftParam> {
    es.iter()
        .flat_map(|&e| (1..e).map(move |h| ShiftParam::new(m(e), h).expect("valid")))
        .filter(|p| !dividing || p.divides())
        .collect()
}

fn label(p: &ShiftParam) -> String {
    format!("e={}/ehat={}", p.e(), p.ehat())
}

fn shift(cfg: &Config) -> Vec<Case> {
    let parts = partitions_up_to(cfg.max_n);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for p in shift_params(&[2, 3, 4, 6], false) {
        let e = p.modulus();
        let l = label(&p);
        // weight shift and σ^d = id on random elements of Q
        let samples: Vec<BlockVector> = (0..200)
            .map(|_| {
                let c = (0..p.e()).map(|_| rng.random_range(-6i64..=6)).collect();
                BlockVector::from_coeffs(e, c).expect("small")
            })
            .collect();
        let cx = first_failure(&samples, |a| {
            let sa = sigma_block(a, &p)?;
            let mut b = a.clone();
            for _ in 0..p.order() {
                b = sigma_block(&b, &p)?;
            }
            let ws = sa.weight(&[0]) == a.weight(&[0]) + a.coeff(p.ehat() as i64) - a.coeff(0);
            Ok((!ws || &b != a).then(|| a.to_string()))
        });
        cases.push(Case::from_check(format!("shift/sigma-block/{l}"), samples.len(), cx));

        let cx = first_failure(&parts, |lam| {
            let a = residue_counts(lam, 0, e);
            let core = e_core(lam, e)?;
            let ca = residue_counts(&core, 0, e);
            let t = sigma_core(&core, &p)?;
            // σ̃ on cores
            let delta = ca.coeff(0) - ca.coeff(p.ehat() as i64);
            let want = sigma_block(&ca, &p)?.add_ones(delta)?;
            if residue_counts(&t, 0, e) != want {
                return Ok(Some(format!("α(σ̃ {core}) ≠ σα + δ1")));
            }
            // the core of σα(λ) is α(σ̃ λ̄)
            let sa = sigma_block(&a, &p)?;
            let (score, _) = s_core_of_block(&sa, &Multicharge::single(0), &Limits::default())?;
            if score != residue_counts(&t, 0, e) {
                return Ok(Some(format!("core of σα({lam}) ≠ α(σ̃ λ̄)")));
            }
            // σ on partitions
            let s = sigma_partition(lam, &p);
            if e_core(&s, e)? != t || e_weight(&s, e) != e_weight(lam, e) {
                return Ok(Some(format!("σ{lam}={s}: core or weight")));
            }
            let same_size = s.size() == lam.size();
            let good = residue_counts(&s, 0, e) == sa;
            let balanced = a.coeff(0) == a.coeff(p.ehat() as i64);
            if !(same_size == good && good == balanced) {
                return Ok(Some(format!("σ{lam}={s}: size/α/balance disagree")));
            }
            let mut it = lam.clone();
            for _ in 0..p.order() {
                it = sigma_partition(&it, &p);
            }
            Ok((it != *lam).then(|| format!("σ^d {lam} = {it}")))
        });
        cases.push(Case::from_check(format!("shift/partitions/{l}"), parts.len(), cx));

        let blocks: BTreeSet<BlockVector> = parts.iter().map(|lam| residue_counts(lam, 0, e)).collect();
        let blocks: Vec<BlockVector> = blocks.into_iter().collect();
        let cx = first_failure(&blocks, |a| {
            let sa = sigma_block(a, &p)?;
            let s0 = Multicharge::single(0);
            let expect = if !(sa.is_nonnegative() && is_level_one_block(&sa, 0)) {
                ShiftClass::NotBlock
            } else if !is_block(&sa.add_ones(-1)?, &s0, &Limits::default())? {
                ShiftClass::BlockAndCore
            } else {
                ShiftClass::BlockNotCore
            };
            Ok((shift_block_membership(a, &p)? != expect).then(|| a.to_string()))
        });
        cases.push(Case::from_check(format!("shift/membership/{l}"), blocks.len(), cx));
    }
    cases
}

fn stuttering(cfg: &Config) -> Vec<Case> {
    let parts = partitions_up_to(cfg.max_n);
    let mut cases = Vec::new();
    for p in shift_params(&[2, 4, 6], true) {
        let e = p.modulus();
        let eh = m(p.ehat());
        let l = label(&p);
        let d = p.order() as i64;
        // blocks of the enumerated partitions, with whether one is σ-fixed
        let mut fixed: std::collections::BTreeMap<BlockVector, bool> = Default::default();
        let mut broken = None;
        for lam in &parts {
            let a = residue_counts(lam, 0, e);
            let f = is_stuttering_partition(lam, &p);
            if f && broken.is_none() {
                let ok = is_stuttering_block(&a, &p).unwrap_or(false) && e_weight(lam, e) % d == 0;
                if !ok {
                    broken = Some(format!("σ{lam} = {lam} but block/weight condition fails"));
                }
            }
            *fixed.entry(a).or_default() |= f;
        }
        cases.push(Case::from_check(format!("stuttering/fixed-partitions/{l}"), parts.len(), broken));
        let entries: Vec<(BlockVector, bool)> = fixed.into_iter().collect();
        let cx = first_failure(&entries, |(a, has)| {
            let crit = is_stuttering_block(a, &p)? && a.weight(&[0]) % d == 0;
            if crit != *has {
                return Ok(Some(format!("α={a}: criterion {crit}, σ-fixed partition {has}")));
            }
            if crit {
                let w = stuttering_witness(a, &p)?;
                if residue_counts(&w, 0, e) != *a || !is_stuttering_partition(&w, &p) {
                    return Ok(Some(format!("witness {w} for α={a}")));
                }
            } else if stuttering_witness(a, &p).is_ok() {
                return Ok(Some(format!("witness returned for α={a}")));
            }
            Ok(None)
        });
        cases.push(Case::from_check(format!("stuttering/equivalence/{l}"), entries.len(), cx));
        let cx = first_failure(&parts, |lam| {
            let a = residue_counts(lam, 0, e);
            let pa = pi_project(&a, &p)?;
            if pa != residue_counts(lam, 0, eh) || pi_project(&sigma_block(&a, &p)?, &p)? != pa {
                return Ok(Some(format!("π at {lam}")));
            }
            let rep = ehat_core_checks(lam, &p)?;
            Ok((!rep.passed()).then(|| format!("ê-core checks at {lam}: {rep:?}")))
        });
        cases.push(Case::from_check(format!("stuttering/ehat-core/{l}"), parts.len(), cx));
        // stuttering e-cores are ê-cores, on larger cores
        let cores: Vec<Partition> = partitions_up_to(cfg.max_n.max(20)).into_iter().filter(|c| is_e_core(c, e)).collect();
        let cx = first_failure(&cores, |c| {
            let a = residue_counts(c, 0, e);
            Ok((sigma_block(&a, &p)? == a && !is_e_core(c, eh)).then(|| c.to_string()))
        });
        cases.push(Case::from_check(format!("stuttering/stuttering-cores/{l}"), cores.len(), cx));
    }
    // a partition-free block: h·1 with d ∤ h
    let p = ShiftParam::new(m(2), 1).expect("valid");
    let a = BlockVector::const_one(m(2));
    let ok = matches!(stuttering_witness(&a, &p), Err(Error::Hypothesis(_)))
        && partitions_up_to(2).iter().all(|l| residue_counts(l, 0, m(2)) != a || !is_stuttering_partition(l, &p));
    cases.push(if ok {
        Case::ok("stuttering/negative-control", "α_0 + α_1 at e=2 has no σ-fixed partition")
    } else {
        Case::fail("stuttering/negative-control", "", a.to_string())
    });
    cases
}
