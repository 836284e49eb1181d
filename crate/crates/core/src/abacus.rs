//! Charged beta-numbers, e-abaci, e-cores, e-quotients and the x/y
//! coordinates of cores.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{check_charge, BlockVector, Charge, Modulus};
use crate::partition::{residue_counts, Partition};

/// A charged beta-number `β_a = s + λ_a − a`, stored as the minimal window
/// of entries that differ from the standard tail `s − a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaSequence {
    charge: Charge,
    window: Vec<i64>,
}

impl BetaSequence {
    /// `window` followed by `s − len − 1, s − len − 2, …`.
    pub fn new(charge: Charge, window: Vec<i64>) -> Result<Self> {
        check_charge(charge)?;
        if window.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBeta(format!("{window:?} is not strictly decreasing")));
        }
        let len = window.len() as i64;
        if let Some(&last) = window.last() {
            if last <= charge - len - 1 {
                return Err(Error::InvalidBeta(format!(
                    "{window:?} does not stay above the tail {}, {}, …",
                    charge - len - 1,
                    charge - len - 2
                )));
            }
        }
        let mut window = window;
        while let Some(&last) = window.last() {
            if last == charge - window.len() as i64 {
                window.pop();
            } else {
                break;
            }
        }
        Ok(BetaSequence { charge, window })
    }

    /// A finite prefix whose continuation is `last − 1, last − 2, …`; the
    /// charge is inferred from the tail.
    pub fn from_prefix(prefix: &[i64]) -> Result<Self> {
        let last = *prefix
            .last()
            .ok_or_else(|| Error::InvalidBeta("empty prefix does not fix the charge".into()))?;
        let charge = last + prefix.len() as i64;
        Self::new(charge, prefix.to_vec())
    }

    pub fn charge(&self) -> Charge {
        self.charge
    }

    /// The non-standard entries `β_1, …, β_h`.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `β_a`, 1-based.
    pub fn get(&self, a: usize) -> i64 {
        assert!(a >= 1);
        self.window.get(a - 1).copied().unwrap_or(self.charge - a as i64)
    }

    /// The first `n` entries.
    pub fn prefix(&self, n: usize) -> Vec<i64> {
        (1..=n).map(|a| self.get(a)).collect()
    }

    pub fn contains(&self, v: i64) -> bool {
        let h = self.window.len() as i64;
        v < self.charge - h || self.window.contains(&v)
    }
}

impl fmt::Display for BetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (self.window.len() + 2).max(3);
        let s: Vec<String> = self.prefix(n).iter().map(|v| v.to_string()).collect();
        write!(f, "({},…)", s.join(","))
    }
}

pub fn beta_number(lambda: &Partition, s: Charge) -> BetaSequence {
    let window = (1..=lambda.height()).map(|a| s + lambda.part(a) - a as i64).collect();
    BetaSequence::new(s, window).expect("beta-number of a partition is valid")
}

/// Inverse of [`beta_number`].
pub fn partition_from_beta(beta: &BetaSequence) -> (Partition, Charge) {
    let s = beta.charge;
    let parts = beta.window.iter().enumerate().map(|(a, &b)| b - s + a as i64 + 1).collect();
    (Partition::from_parts_trimmed(parts).expect("canonical window gives a partition"), s)
}

/// One runner of an abacus: every position below `floor` holds a bead,
/// `floor` itself is empty, and `beads` lists the occupied positions above
/// it in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Runner {
    pub floor: i64,
    pub beads: Vec<i64>,
}

impl Runner {
    /// Reads a level-one beta-number as a single runner.
    pub fn from_beta(beta: &BetaSequence) -> Self {
        let h = beta.window.len() as i64;
        let mut floor = beta.charge - h;
        while beta.window.contains(&floor) {
            floor += 1;
        }
        let beads = beta.window.iter().copied().filter(|&b| b > floor).collect();
        Runner { floor, beads }
    }

    /// The runner read back as a beta-number.
    pub fn to_beta(&self) -> BetaSequence {
        BetaSequence::new(self.charge(), self.beads.clone()).expect("runner is well formed")
    }

    /// Charge of the runner read as a level-one abacus.
    pub fn charge(&self) -> Charge {
        self.floor + self.beads.len() as i64
    }

    pub fn has_bead(&self, j: i64) -> bool {
        j < self.floor || self.beads.contains(&j)
    }

    pub fn is_gap_free(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn top(&self) -> i64 {
        self.beads.first().copied().unwrap_or(self.floor - 1)
    }

    /// The partition this runner encodes.
    pub fn partition(&self) -> Partition {
        partition_from_beta(&self.to_beta()).0
    }
}

/// The charged e-abacus: bead at `(i, j)` iff `i + je ∈ β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbacusProfile {
    e: u32,
    charge: Charge,
    runners: Vec<Runner>,
}

impl AbacusProfile {
    pub fn from_beta(beta: &BetaSequence, e: Modulus) -> Result<Self> {
        let n = e.require_finite("an abacus needs e ≥ 1")? as i64;
        let runners = (0..n)
            .map(|i| {
                // positions on runner i: v = i + j n; reuse the level-one reader
                // on the subsequence of β in this class
                let cls: Vec<i64> = beta
                    .window
                    .iter()
                    .copied()
                    .filter(|v| v.rem_euclid(n) == i)
                    .map(|v| (v - i) / n)
                    .collect();
                // everything below the window tail is a bead
                let h = beta.window.len() as i64;
                let below = beta.charge - h; // values < below are beads
                let j_full = (below - i).div_euclid(n) + if (below - i).rem_euclid(n) == 0 { 0 } else { 1 };
                // positions j < j_full are beads
                let mut floor = j_full;
                while cls.contains(&floor) {
                    floor += 1;
                }
                let beads = cls.into_iter().filter(|&j| j > floor).collect();
                Runner { floor, beads }
            })
            .collect();
        Ok(AbacusProfile { e: n as u32, charge: beta.charge, runners })
    }

    /// Assembles an abacus from runners; its charge is the sum of the
    /// runner charges.
    pub fn from_runners(runners: Vec<Runner>) -> Result<Self> {
        let n = runners.len() as i64;
        if n == 0 {
            return Err(Error::InvalidArgument("an abacus needs at least one runner".into()));
        }
        let charge = runners.iter().map(|r| r.charge()).sum::<i64>();
        Ok(AbacusProfile { e: n as u32, charge: check_charge(charge)?, runners })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn charge(&self) -> Charge {
        self.charge
    }

    pub fn runners(&self) -> &[Runner] {
        &self.runners
    }

    pub fn has_bead(&self, i: usize, j: i64) -> bool {
        self.runners[i].has_bead(j)
    }

    pub fn is_gap_free(&self) -> bool {
        self.runners.iter().all(Runner::is_gap_free)
    }

    pub fn to_beta(&self) -> BetaSequence {
        let n = self.e as i64;
        let m = (0..n).map(|i| i + self.runners[i as usize].floor * n).min().unwrap();
        let mut window: Vec<i64> = Vec::new();
        for (i, r) in self.runners.iter().enumerate() {
            let i = i as i64;
            // positions j with i + jn ≥ m and j < floor
            let mut j = (m - i).div_euclid(n) + if (m - i).rem_euclid(n) == 0 { 0 } else { 1 };
            while j < r.floor {
                window.push(i + j * n);
                j += 1;
            }
            window.extend(r.beads.iter().map(|&j| i + j * n));
        }
        window.sort_unstable_by(|a, b| b.cmp(a));
        BetaSequence::new(self.charge, window).expect("abacus is consistent")
    }

    pub fn partition(&self) -> Partition {
        partition_from_beta(&self.to_beta()).0
    }

    /// Text rendering: one line per runner, runner 0 at the bottom, `O` for a
    /// bead, `·` for a gap, `|` just before position 0.
    pub fn render(&self) -> String {
        let lo = self.runners.iter().map(|r| r.floor).min().unwrap().min(0) - 1;
        let hi = self.runners.iter().map(|r| r.top()).max().unwrap().max(0) + 1;
        let width = (self.e - 1).to_string().len();
        let mut out = String::new();
        for (i, r) in self.runners.iter().enumerate().rev() {
            out.push_str(&format!("{i:>width$} "));
            for j in lo..=hi {
                if j == 0 {
                    out.push('|');
                }
                out.push(if r.has_bead(j) { 'O' } else { '·' });
            }
            out.push('\n');
        }
        out
    }
}

pub fn abacus_profile(lambda: &Partition, s: Charge, e: Modulus) -> Result<AbacusProfile> {
    AbacusProfile::from_beta(&beta_number(lambda, s), e)
}

/// Per-runner compaction; independent of the charge used to draw the abacus.
pub fn e_core(lambda: &Partition, e: Modulus) -> Result<Partition> {
    e.require_finite("e-cores need e ≥ 1")?;
    let ab = abacus_profile(lambda, 0, e)?;
    let runners =
        ab.runners.iter().map(|r| Runner { floor: r.charge(), beads: Vec::new() }).collect();
    Ok(AbacusProfile::from_runners(runners)?.partition())
}

pub fn is_e_core(lambda: &Partition, e: Modulus) -> bool {
    match abacus_profile(lambda, 0, e) {
        Ok(ab) => ab.is_gap_free(),
        Err(_) => true, // e = 0: no rim hooks of infinite length
    }
}

/// Number of `e`-rim hooks removed to reach the core; zero when `e = 0`.
pub fn e_weight(lambda: &Partition, e: Modulus) -> i64 {
    if e.is_infinite() {
        return 0;
    }
    let core = e_core(lambda, e).expect("finite modulus");
    (lambda.size() - core.size()) / e.get() as i64
}

/// The e-quotient, stored with the charge it was read at.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EQuotient {
    pub charge: Charge,
    pub parts: Vec<Partition>,
}

impl EQuotient {
    pub fn size(&self) -> i64 {
        self.parts.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for EQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

pub fn e_quotient(lambda: &Partition, s: Charge, e: Modulus) -> Result<EQuotient> {
    let ab = abacus_profile(lambda, s, e)?;
    Ok(EQuotient { charge: s, parts: ab.runners.iter().map(Runner::partition).collect() })
}

/// Rebuilds `λ` from its e-core and e-quotient (read at charge `s`).
pub fn from_core_and_quotient(
    core: &Partition,
    q: &EQuotient,
    s: Charge,
    e: Modulus,
) -> Result<Partition> {
    let n = e.require_finite("e-quotients need e ≥ 1")?;
    if q.parts.len() != n {
        return Err(Error::InvalidArgument(format!(
            "quotient has {} components, expected {n}",
            q.parts.len()
        )));
    }
    let ab = abacus_profile(core, s, e)?;
    if !ab.is_gap_free() {
        return Err(Error::NotACore { partition: core.to_string(), e: e.get() });
    }
    let runners = ab
        .runners
        .iter()
        .zip(&q.parts)
        .map(|(r, mu)| Runner::from_beta(&beta_number(mu, r.charge())))
        .collect();
    let out = AbacusProfile::from_runners(runners)?;
    debug_assert_eq!(out.charge, s);
    Ok(out.partition())
}

/// `x_i(∅)`: with `s = qe + s'`, `0 ≤ s' < e`, it is `q + 1` for `i < s'`
/// and `q` otherwise.
pub fn x_empty(s: Charge, e: Modulus) -> Result<Vec<i64>> {
    let n = e.require_finite("x-vectors need e ≥ 1")? as i64;
    let (q, r) = (s.div_euclid(n), s.rem_euclid(n));
    Ok((0..n).map(|i| if i < r { q + 1 } else { q }).collect())
}

/// First-gap positions of the runners of an e-core.
pub fn x_vector(lambda: &Partition, s: Charge, e: Modulus) -> Result<Vec<i64>> {
    let ab = abacus_profile(lambda, s, e)?;
    if !ab.is_gap_free() {
        return Err(Error::NotACore { partition: lambda.to_string(), e: e.get() });
    }
    Ok(ab.runners.iter().map(|r| r.floor).collect())
}

/// The e-core with prescribed first-gap positions; the charge is `Σ x_i`.
pub fn core_from_x(x: &[i64]) -> Result<(Partition, Charge)> {
    let runners = x.iter().map(|&f| Runner { floor: f, beads: Vec::new() }).collect();
    let ab = AbacusProfile::from_runners(runners)?;
    Ok((ab.partition(), ab.charge))
}

/// `y = x − x(∅)`; for `e = 0`, `y_i = c_i − c_{i+1}` with finite support.
///
/// Stored as an element of `ℤ^{ℤ/eℤ}`, which has the same shape as `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YVector(BlockVector);

impl YVector {
    pub fn new(values: BlockVector) -> Self {
        YVector(values)
    }

    pub fn from_values(e: Modulus, values: Vec<i64>) -> Result<Self> {
        Ok(YVector(BlockVector::from_coeffs(e, values)?))
    }

    pub fn modulus(&self) -> Modulus {
        self.0.modulus()
    }

    pub fn get(&self, i: i64) -> i64 {
        self.0.coeff(i)
    }

    pub fn sum(&self) -> i64 {
        self.0.size()
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.entries().iter().map(|&(_, y)| y * y).sum()
    }

    pub fn as_block(&self) -> &BlockVector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for YVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Consecutive differences `c_i − c_{i+1}`.
pub(crate) fn differences(c: &BlockVector) -> BlockVector {
    let e = c.modulus();
    if e.is_infinite() {
        let pairs: Vec<(i64, i64)> = match c.support_range() {
            Some((lo, hi)) => (lo - 1..=hi).map(|i| (i, c.coeff(i) - c.coeff(i + 1))).collect(),
            None => Vec::new(),
        };
        BlockVector::from_pairs(e, pairs).expect("differences of bounded counts")
    } else {
        let n = e.get() as i64;
        BlockVector::from_coeffs(e, (0..n).map(|i| c.coeff(i) - c.coeff(i + 1)).collect())
            .expect("differences of bounded counts")
    }
}

pub fn y_vector(lambda: &Partition, s: Charge, e: Modulus) -> Result<YVector> {
    if e.is_infinite() {
        return Ok(YVector(differences(&residue_counts(lambda, s, e))));
    }
    let x = x_vector(lambda, s, e)?;
    let x0 = x_empty(s, e)?;
    YVector::from_values(e, x.iter().zip(&x0).map(|(a, b)| a - b).collect())
}

fn validate_y(y: &YVector, s: Charge) -> Result<()> {
    if y.sum() != 0 {
        return Err(Error::InvalidY(format!("{y} has sum {} ≠ 0", y.sum())));
    }
    if y.modulus().is_infinite() {
        for (i, v) in y.0.entries() {
            let ok = if i >= s { v == 0 || v == 1 } else { v == 0 || v == -1 };
            if !ok {
                return Err(Error::InvalidY(format!(
                    "y_{i} = {v} outside {} for charge {s}",
                    if i >= s { "{0,1}" } else { "{0,-1}" }
                )));
            }
        }
    }
    Ok(())
}

/// Residue counts of the core with y-vector `y`:
/// `c_s = ½‖y‖²`, `c_{s+i} = c_s − (y_s + … + y_{s+i−1})`, and for `e = 0`
/// also `c_{s−i} = c_s + (y_{s−1} + … + y_{s−i})`.
pub fn ci_from_y(y: &YVector, s: Charge) -> Result<BlockVector> {
    validate_y(y, s)?;
    let e = y.modulus();
    let cs = y.norm_sq() / 2;
    if !e.is_infinite() {
        let n = e.get() as i64;
        let mut pairs = vec![(s, cs)];
        let mut acc = cs;
        for i in 1..n {
            acc -= y.get(s + i - 1);
            pairs.push((s + i, acc));
        }
        return BlockVector::from_pairs(e, pairs);
    }
    let (lo, hi) = y.0.support_range().unwrap_or((s, s));
    let mut pairs = vec![(s, cs)];
    let mut acc = cs;
    for i in s + 1..=hi.max(s) + 1 {
        acc -= y.get(i - 1);
        pairs.push((i, acc));
    }
    acc = cs;
    for i in (lo.min(s) - 1..s).rev() {
        acc += y.get(i);
        pairs.push((i, acc));
    }
    BlockVector::from_pairs(e, pairs)
}

/// The partition whose content `d = b − a` occurs `n(d)` times, built from
/// its Frobenius coordinates. Returns `None` if no partition fits.
fn partition_from_contents(n: impl Fn(i64) -> i64, max_d: i64) -> Option<Partition> {
    let rank = n(0);
    if rank < 0 {
        return None;
    }
    let arms: Vec<i64> = (1..=rank).map(|t| (1..=max_d).filter(|&d| n(d) >= t).count() as i64).collect();
    let legs: Vec<i64> = (1..=rank).map(|t| (1..=max_d).filter(|&d| n(-d) >= t).count() as i64).collect();
    let mut parts: Vec<i64> = arms.iter().enumerate().map(|(t, a)| a + t as i64 + 1).collect();
    let cols: Vec<i64> = legs.iter().enumerate().map(|(t, l)| l + t as i64 + 1).collect();
    let depth = cols.first().copied().unwrap_or(0);
    for a in rank + 1..=depth {
        parts.push(cols.iter().filter(|&&c| c >= a).count() as i64);
    }
    Partition::new(parts).ok()
}

/// The unique core with y-vector `y` at charge `s`.
pub fn core_from_y(y: &YVector, s: Charge) -> Result<Partition> {
    validate_y(y, s)?;
    let e = y.modulus();
    if !e.is_infinite() {
        let x0 = x_empty(s, e)?;
        let x: Vec<i64> = x0.iter().enumerate().map(|(i, v)| v + y.get(i as i64)).collect();
        let (core, charge) = core_from_x(&x)?;
        debug_assert_eq!(charge, s);
        return Ok(core);
    }
    let c = ci_from_y(y, s)?;
    let max_d = match c.support_range() {
        Some((lo, hi)) => (hi - s).abs().max((lo - s).abs()) + 1,
        None => 0,
    };
    let lambda = partition_from_contents(|d| c.coeff(s + d), max_d)
        .filter(|l| residue_counts(l, s, e) == c)
        .ok_or_else(|| Error::InvalidY(format!("no partition has y-vector {y} at charge {s}")))?;
    Ok(lambda)
}

/// Distinct runner positions occupied by beads, used only by tests and
/// rendering helpers.
pub fn bead_positions(ab: &AbacusProfile, i: usize, lo: i64, hi: i64) -> BTreeSet<i64> {
    (lo..=hi).filter(|&j| ab.has_bead(i, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{charge_weight, partitions_of, partitions_up_to, removable_rim_hooks};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn m(e: u32) -> Modulus {
        Modulus::new(e).unwrap()
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_number(&Partition::empty(), 0).prefix(3), vec![-1, -2, -3]);
        let b = beta_number(&p("4,3,3,1"), 1);
        assert_eq!(b.prefix(6), vec![4, 2, 1, -2, -4, -5]);
        assert_eq!(b.to_string(), "(4,2,1,-2,-4,-5,…)");
        assert_eq!(beta_number(&p("1"), 0).to_string(), "(0,-2,-3,…)");
        assert_eq!(beta_number(&Partition::empty(), 0).to_string(), "(-1,-2,-3,…)");
    }

    #[test]
    fn partition_from_beta_examples() {
        let b = BetaSequence::from_prefix(&[-1]).unwrap();
        assert_eq!(partition_from_beta(&b), (Partition::empty(), 0));
        let b = BetaSequence::from_prefix(&[4, 2, 1, -2, -4]).unwrap();
        assert_eq!(partition_from_beta(&b), (p("4,3,3,1"), 1));
        let b = BetaSequence::from_prefix(&[0, -2]).unwrap();
        assert_eq!(partition_from_beta(&b), (p("1"), 0));
        assert!(matches!(BetaSequence::from_prefix(&[0, 0]), Err(Error::InvalidBeta(_))));
        assert!(matches!(BetaSequence::from_prefix(&[1, 3]), Err(Error::InvalidBeta(_))));
        // window-insensitive equality
        assert_eq!(
            BetaSequence::new(1, vec![4, 2, 1, -2, -4, -5]).unwrap(),
            beta_number(&p("4,3,3,1"), 1)
        );
    }

    /// Brute-force inversion: search small partitions whose beta-number matches.
    #[test]
    fn beta_inverse_brute_force() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                for s in -3..=3 {
                    let b = beta_number(&l, s);
                    let hits: Vec<(Partition, i64)> = partitions_up_to(8)
                        .into_iter()
                        .flat_map(|mu| (-3..=3).map(move |t| (mu.clone(), t)))
                        .filter(|(mu, t)| (1..=12).all(|a| t + mu.part(a) - a as i64 == b.get(a)))
                        .collect();
                    assert_eq!(hits, vec![(l.clone(), s)]);
                }
            }
        }
    }

    #[test]
    fn worked_example_abacus() {
        let l = p("4,3,3,1");
        let ab = abacus_profile(&l, 1, m(3)).unwrap();
        let gaps: usize = ab.runners().iter().map(|r| r.beads.len()).sum();
        assert_eq!(gaps, 1);
        assert!(abacus_profile(&l, 1, m(6)).unwrap().is_gap_free());
        assert!(abacus_profile(&Partition::empty(), 0, m(2)).unwrap().is_gap_free());
        assert!(abacus_profile(&l, 1, m(0)).is_err());
        // β ∩ runner classes
        for i in 0..3 {
            for j in -4..3 {
                assert_eq!(ab.has_bead(i, j), beta_number(&l, 1).contains(i as i64 + 3 * j));
            }
        }
        assert_eq!(e_quotient(&l, 1, m(3)).unwrap().to_string(), "-|-|1");
        assert!(e_quotient(&l, 1, m(6)).unwrap().parts.iter().all(Partition::is_empty));
        assert_eq!(x_vector(&l, 1, m(6)).unwrap(), vec![0, 1, 1, -1, 1, -1]);
    }

    #[test]
    fn abacus_golden() {
        let ab = abacus_profile(&p("4,3,3,1"), 1, m(3)).unwrap();
        let expected = "\
2 O·|O··
1 OO|OO·
0 O·|···
";
        assert_eq!(ab.render(), expected);
    }

    #[test]
    fn cores_and_weights() {
        assert_eq!(e_core(&p("4,3,3,1"), m(6)).unwrap(), p("4,3,3,1"));
        assert_eq!(e_core(&p("4,3,3,1"), m(3)).unwrap(), p("4,2,1,1"));
        assert_eq!(e_core(&p("2"), m(1)).unwrap(), Partition::empty());
        assert_eq!(e_weight(&p("4,3,3,1"), m(3)), 1);
        assert_eq!(e_weight(&p("4,3,3,1"), m(0)), 0);
        assert_eq!(e_weight(&p("2,2"), m(2)), 2);
    }

    /// Repeatedly strip any e-rim hook (first found); result must be the core.
    fn core_by_hook_removal(l: &Partition, e: i64) -> (Partition, i64) {
        let mut cur = l.clone();
        let mut w = 0;
        while let Some(h) = removable_rim_hooks(&cur, e).unwrap().into_iter().next() {
            cur = h.result;
            w += 1;
        }
        (cur, w)
    }

    #[test]
    fn core_matches_hook_removal_oracle() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                for e in 1..=5u32 {
                    let (core, w) = core_by_hook_removal(&l, e as i64);
                    assert_eq!(e_core(&l, m(e)).unwrap(), core);
                    assert_eq!(e_weight(&l, m(e)), w);
                    assert_eq!(charge_weight(&l, 0, m(e)), w);
                    assert_eq!(e_quotient(&l, 0, m(e)).unwrap().size(), w);
                    assert_eq!(is_e_core(&l, m(e)), w == 0);
                }
            }
        }
    }

    #[test]
    fn quotient_rotates_with_charge() {
        for n in 0..=9 {
            for l in partitions_of(n) {
                for e in 2..=4u32 {
                    let q0 = e_quotient(&l, 0, m(e)).unwrap().parts;
                    let q1 = e_quotient(&l, 1, m(e)).unwrap().parts;
                    let mut rot = q0.clone();
                    rot.rotate_right(1);
                    assert_eq!(q1, rot);
                }
            }
        }
    }

    #[test]
    fn core_quotient_round_trip() {
        let q = EQuotient { charge: 1, parts: vec![Partition::empty(), Partition::empty(), p("1")] };
        assert_eq!(from_core_and_quotient(&p("4,2,1,1"), &q, 1, m(3)).unwrap(), p("4,3,3,1"));
        assert!(matches!(
            from_core_and_quotient(&p("4,3,3,1"), &q, 1, m(3)),
            Err(Error::NotACore { .. })
        ));
        for n in 0..=10 {
            for l in partitions_of(n) {
                for e in 2..=4u32 {
                    let core = e_core(&l, m(e)).unwrap();
                    let q = e_quotient(&l, -1, m(e)).unwrap();
                    assert_eq!(from_core_and_quotient(&core, &q, -1, m(e)).unwrap(), l);
                }
            }
        }
    }

    #[test]
    fn x_empty_examples() {
        assert_eq!(x_empty(0, m(3)).unwrap(), vec![0, 0, 0]);
        assert_eq!(x_empty(1, m(6)).unwrap(), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(x_empty(-1, m(2)).unwrap(), vec![0, -1]);
        for s in -7..7 {
            assert_eq!(x_empty(s, m(3)).unwrap().iter().sum::<i64>(), s);
        }
    }

    #[test]
    fn y_vector_examples() {
        assert!(y_vector(&Partition::empty(), 2, m(4)).unwrap().is_zero());
        assert!(y_vector(&Partition::empty(), 2, m(0)).unwrap().is_zero());
        let y = y_vector(&p("4,2,1,1"), 1, m(3)).unwrap();
        assert_eq!(y.sum(), 0);
        let c = residue_counts(&p("4,2,1,1"), 1, m(3));
        for i in 0..3 {
            assert_eq!(y.get(i), c.coeff(i) - c.coeff(i + 1));
        }
        assert!(matches!(y_vector(&p("4,3,3,1"), 1, m(3)), Err(Error::NotACore { .. })));
    }

    #[test]
    fn core_from_y_examples() {
        assert_eq!(core_from_y(&YVector::from_values(m(3), vec![0; 3]).unwrap(), 5).unwrap(), Partition::empty());
        let x = [0, 1, 1, -1, 1, -1];
        let x0 = x_empty(1, m(6)).unwrap();
        let y = YVector::from_values(m(6), x.iter().zip(&x0).map(|(a, b)| a - b).collect()).unwrap();
        assert_eq!(core_from_y(&y, 1).unwrap(), p("4,3,3,1"));
        // y = (3, −3) at e = 2: c_0 = 9, c_1 = 6
        let y = YVector::from_values(m(2), vec![3, -3]).unwrap();
        let core = core_from_y(&y, 0).unwrap();
        assert_eq!(residue_counts(&core, 0, m(2)).as_slice(), Some(&[9, 6][..]));
        assert_eq!(ci_from_y(&y, 0).unwrap().as_slice(), Some(&[9, 6][..]));
        let bad = YVector::from_values(m(2), vec![1, 0]).unwrap();
        assert!(matches!(core_from_y(&bad, 0), Err(Error::InvalidY(_))));
        let bad0 = YVector::new(BlockVector::from_pairs(m(0), [(0, 2), (1, -2)]).unwrap());
        assert!(matches!(core_from_y(&bad0, 0), Err(Error::InvalidY(_))));
    }

    #[test]
    fn y_round_trip_on_cores() {
        for n in 0..=15 {
            for l in partitions_of(n) {
                for e in [0u32, 2, 3, 4, 5, 6] {
                    if !is_e_core(&l, m(e)) {
                        continue;
                    }
                    for s in -2..=2 {
                        let y = y_vector(&l, s, m(e)).unwrap();
                        assert_eq!(core_from_y(&y, s).unwrap(), l, "e={e} s={s}");
                        assert_eq!(ci_from_y(&y, s).unwrap(), residue_counts(&l, s, m(e)));
                    }
                }
            }
        }
    }

    #[test]
    fn cores_are_determined_by_residue_counts() {
        for e in 2..=4u32 {
            let mut seen = std::collections::HashMap::new();
            for l in partitions_up_to(20) {
                if is_e_core(&l, m(e)) {
                    let c = residue_counts(&l, 0, m(e));
                    assert!(seen.insert(c, l).is_none());
                }
            }
        }
    }

    #[test]
    fn one_node_moves_match_bead_moves() {
        // adding an i-node moves a bead from runner i−1 to runner i (charge s)
        for n in 0..=10 {
            for l in partitions_of(n) {
                for e in 2..=4u32 {
                    let s = 1;
                    let beta = beta_number(&l, s);
                    for a in 1..=l.height() + 1 {
                        let part = l.part(a);
                        if a > 1 && l.part(a - 1) <= part {
                            continue;
                        }
                        let mut parts = l.parts().to_vec();
                        if a > parts.len() {
                            parts.push(1);
                        } else {
                            parts[a - 1] += 1;
                        }
                        let mu = Partition::new(parts).unwrap();
                        let res = (part + 1 - a as i64 + s).rem_euclid(e as i64);
                        let b = beta.get(a);
                        assert_eq!((b + 1).rem_euclid(e as i64), res);
                        assert!(!beta.contains(b + 1));
                        let mut nb = beta.prefix(l.height() + 2);
                        nb[a - 1] = b + 1;
                        assert_eq!(partition_from_beta(&BetaSequence::from_prefix(&nb).unwrap()).0, mu);
                    }
                }
            }
        }
    }
}
