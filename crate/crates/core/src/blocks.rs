//! Block membership, the parametrisation of level-one blocks, core blocks and
//! the S-core of an element of `Q`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{ci_from_y, core_from_y, differences, YVector};
use crate::error::{Error, Result};
use crate::lattice::{check_charge, BlockVector, Charge, Modulus};
use crate::partition::{partitions_of, residue_counts, Partition};

/// An ordered multicharge `(s_1, …, s_r)`, `r ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Multicharge(Vec<Charge>);

impl Multicharge {
    pub fn new(charges: Vec<Charge>) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::InvalidArgument("a multicharge needs r ≥ 1 charges".into()));
        }
        for &s in &charges {
            check_charge(s)?;
        }
        Ok(Multicharge(charges))
    }

    pub fn single(s: Charge) -> Self {
        Multicharge(vec![s])
    }

    pub fn charges(&self) -> &[Charge] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }
}

impl TryFrom<Vec<i64>> for Multicharge {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Multicharge::new(v)
    }
}

impl From<Multicharge> for Vec<i64> {
    fn from(m: Multicharge) -> Self {
        m.0
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Multicharge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("multicharge {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Multicharge::new(v)
    }
}

/// Desk-scale guards for the enumerative algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest `|α|` accepted by the membership DP.
    pub max_block_size: i64,
    /// Largest number of sub-vectors `∏ (c_i + 1)` the DP may scan per level.
    pub max_box: u64,
    /// Largest `n` for `enumerate_blocks`.
    pub max_enum_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_block_size: 256, max_box: 4_000_000, max_enum_n: 24 }
    }
}

pub fn const_one(e: Modulus) -> BlockVector {
    BlockVector::const_one(e)
}

/// `w^S(α)`.
pub fn block_weight(alpha: &BlockVector, s: &Multicharge) -> i64 {
    alpha.weight(s.charges())
}

/// `α^s(λ)`.
pub fn block_of_partition(lambda: &Partition, s: Charge, e: Modulus) -> BlockVector {
    residue_counts(lambda, s, e)
}

/// For `e = 0`: `c_i − c_{i+1} ∈ {0,1}` for `i ≥ s` and `∈ {0,−1}` for `i < s`.
fn infinite_difference_conditions(alpha: &BlockVector, s: Charge) -> bool {
    differences(alpha)
        .entries()
        .into_iter()
        .all(|(i, d)| if i >= s { d == 0 || d == 1 } else { d == 0 || d == -1 })
}

/// `α ∈ Q^s_+`.
pub fn is_level_one_block(alpha: &BlockVector, s: Charge) -> bool {
    let w = alpha.weight(&[s]);
    if alpha.modulus().is_infinite() {
        w == 0 && infinite_difference_conditions(alpha, s)
    } else {
        w >= 0
    }
}

fn not_a_block(alpha: &BlockVector, s: &str) -> Error {
    Error::NotABlock(format!("{} (charge {s})", alpha.pretty()))
}

/// The e-core shared by all partitions lying in the level-one block `α`.
pub fn core_partition_of_block(alpha: &BlockVector, s: Charge) -> Result<Partition> {
    if !is_level_one_block(alpha, s) {
        return Err(not_a_block(alpha, &s.to_string()));
    }
    let w = alpha.weight(&[s]);
    let core_block = alpha.add_ones(-w)?;
    core_from_y(&YVector::new(differences(&core_block)), s)
}

/// `α ↦ (y(λ_α), w_s(α))` for `e ≥ 1`.
pub fn parametrise(alpha: &BlockVector, s: Charge) -> Result<(YVector, i64)> {
    alpha.modulus().require_finite("the parametrisation needs e ≥ 1")?;
    if !is_level_one_block(alpha, s) {
        return Err(not_a_block(alpha, &s.to_string()));
    }
    let w = alpha.weight(&[s]);
    Ok((YVector::new(differences(alpha)), w))
}

/// `(y, w) ↦ (½‖y‖² + w)·1 − Σ_{i=1}^{e−1} (y_s + … + y_{s+i−1}) α_{s+i}`.
pub fn deparametrise(y: &YVector, w: i64, s: Charge) -> Result<BlockVector> {
    y.modulus().require_finite("the parametrisation needs e ≥ 1")?;
    if w < 0 {
        return Err(Error::InvalidArgument(format!("weight {w} is negative")));
    }
    ci_from_y(y, s)?.add_ones(w)
}

/// Dense view of an element with non-negative coefficients: `e` entries for
/// `e > 0`, the support window `[lo, hi]` for `e = 0`.
#[derive(Clone, Debug)]
struct Dense {
    e: Modulus,
    lo: i64,
    v: Vec<i64>,
}

impl Dense {
    fn of(alpha: &BlockVector) -> Self {
        let e = alpha.modulus();
        if let Some(v) = alpha.as_slice() {
            return Dense { e, lo: 0, v: v.to_vec() };
        }
        match alpha.support_range() {
            Some((lo, hi)) => Dense { e, lo, v: (lo..=hi).map(|i| alpha.coeff(i)).collect() },
            None => Dense { e, lo: 0, v: Vec::new() },
        }
    }

    fn coeff(&self, i: i64) -> i64 {
        if self.e.is_infinite() {
            let k = i - self.lo;
            if k < 0 || k >= self.v.len() as i64 {
                0
            } else {
                self.v[k as usize]
            }
        } else {
            self.v[self.e.reduce(i) as usize]
        }
    }

    fn weight1(&self, s: Charge) -> i64 {
        let n = self.v.len();
        let sq: i64 = if self.e.is_infinite() {
            let mut acc = 0;
            let mut prev = 0;
            for &c in &self.v {
                acc += (c - prev).pow(2);
                prev = c;
            }
            acc + prev * prev
        } else {
            (0..n).map(|i| (self.v[i] - self.v[(i + 1) % n]).pow(2)).sum()
        };
        self.coeff(s) - sq / 2
    }

    fn level_one(&self, s: Charge) -> bool {
        if self.v.iter().any(|&c| c < 0) {
            return false;
        }
        let w = self.weight1(s);
        if self.e.is_infinite() {
            if w != 0 {
                return false;
            }
            let n = self.v.len() as i64;
            (self.lo - 1..self.lo + n).all(|i| {
                let d = self.coeff(i) - self.coeff(i + 1);
                if i >= s {
                    d == 0 || d == 1
                } else {
                    d == 0 || d == -1
                }
            })
        } else {
            w >= 0
        }
    }
}

fn box_size(v: &[i64]) -> u64 {
    v.iter().fold(1u64, |acc, &c| acc.saturating_mul((c.max(0) as u64).saturating_add(1)))
}

/// Decides `α ∈ Σ_j Q^{s_j}_+` by peeling off one level-one block at a time.
struct MembershipDp<'a> {
    e: Modulus,
    lo: i64,
    charges: &'a [Charge],
    memo: HashMap<(usize, Vec<i64>), bool>,
}

impl MembershipDp<'_> {
    fn member(&mut self, depth: usize, rem: &[i64]) -> bool {
        let (e, lo) = (self.e, self.lo);
        let dense = |v: &[i64]| Dense { e, lo, v: v.to_vec() };
        if depth + 1 == self.charges.len() {
            return dense(rem).level_one(self.charges[depth]);
        }
        if rem.iter().any(|&c| c < 0) {
            return false;
        }
        if let Some(&hit) = self.memo.get(&(depth, rem.to_vec())) {
            return hit;
        }
        let s = self.charges[depth];
        let mut sub = vec![0i64; rem.len()];
        let mut found = false;
        loop {
            if dense(&sub).level_one(s) {
                let rest: Vec<i64> = rem.iter().zip(&sub).map(|(a, b)| a - b).collect();
                if self.member(depth + 1, &rest) {
                    found = true;
                    break;
                }
            }
            // odometer over the box [0, rem]
            let mut k = 0;
            while k < sub.len() && sub[k] == rem[k] {
                sub[k] = 0;
                k += 1;
            }
            if k == sub.len() {
                break;
            }
            sub[k] += 1;
        }
        self.memo.insert((depth, rem.to_vec()), found);
        found
    }
}

fn check_limits(alpha: &BlockVector, limits: &Limits) -> Result<()> {
    if alpha.size() > limits.max_block_size {
        return Err(Error::Resource(format!(
            "|α| = {} exceeds the block-size limit {}",
            alpha.size(),
            limits.max_block_size
        )));
    }
    let d = Dense::of(alpha);
    if box_size(&d.v) > limits.max_box {
        return Err(Error::Resource(format!(
            "decomposition box of {} exceeds {}",
            alpha,
            limits.max_box
        )));
    }
    Ok(())
}

/// The plain decomposition search, with no shortcuts. Used as the reference
/// oracle for [`is_block`].
pub fn is_block_dp(alpha: &BlockVector, s: &Multicharge, limits: &Limits) -> Result<bool> {
    if !alpha.is_nonnegative() {
        return Ok(false);
    }
    check_limits(alpha, limits)?;
    let d = Dense::of(alpha);
    let mut dp = MembershipDp { e: d.e, lo: d.lo, charges: s.charges(), memo: HashMap::new() };
    Ok(dp.member(0, &d.v))
}

/// `α ∈ Q^S_+ = Σ_j Q^{s_j}_+`.
///
/// Level one is the closed-form weight test. For `r ≥ 2` the answer is
/// settled early when some `α ∈ Q^{s_j}_+` on its own (accept) or when
/// `w^S(α) < 0` (reject, weights of multipartitions are non-negative);
/// otherwise the decomposition DP decides.
pub fn is_block(alpha: &BlockVector, s: &Multicharge, limits: &Limits) -> Result<bool> {
    if !alpha.is_nonnegative() {
        return Ok(false);
    }
    if s.level() == 1 {
        return Ok(is_level_one_block(alpha, s.charges()[0]));
    }
    if s.charges().iter().any(|&sj| is_level_one_block(alpha, sj)) {
        return Ok(true);
    }
    if alpha.weight(s.charges()) < 0 {
        return Ok(false);
    }
    is_block_dp(alpha, s, limits)
}

/// `(α − h·1, h)` with `h = max{k : α − k·1 ∈ Q^S_+}`.
pub fn s_core_of_block(
    alpha: &BlockVector,
    s: &Multicharge,
    limits: &Limits,
) -> Result<(BlockVector, i64)> {
    alpha.modulus().require_finite("S-cores need e ≥ 1")?;
    let r = s.level() as i64;
    // α − k0·1 lies in Q^{s_j}_+ for the charge achieving the maximum
    let k0 = s.charges().iter().map(|&sj| alpha.weight(&[sj])).max().unwrap();
    let k_max = alpha.weight(s.charges()).div_euclid(r);
    let mut h = k0;
    while h < k_max && is_block(&alpha.add_ones(-(h + 1))?, s, limits)? {
        h += 1;
    }
    Ok((alpha.add_ones(-h)?, h))
}

/// `α ∈ Q^S_+` and `α − 1 ∉ Q^S_+` (every block is a core block when `e = 0`).
pub fn is_core_block(alpha: &BlockVector, s: &Multicharge, limits: &Limits) -> Result<bool> {
    if !is_block(alpha, s, limits)? {
        return Ok(false);
    }
    if alpha.modulus().is_infinite() {
        return Ok(true);
    }
    Ok(!is_block(&alpha.add_ones(-1)?, s, limits)?)
}

/// All level-one blocks `α^s(λ)` with `|λ| = m`.
fn level_one_blocks(s: Charge, e: Modulus, m: usize) -> BTreeSet<BlockVector> {
    partitions_of(m).iter().map(|l| residue_counts(l, s, e)).collect()
}

/// `{α^S(Λ) : Λ an r-partition of n}`.
pub fn enumerate_blocks(
    s: &Multicharge,
    e: Modulus,
    n: usize,
    limits: &Limits,
) -> Result<BTreeSet<BlockVector>> {
    if n > limits.max_enum_n {
        return Err(Error::Resource(format!("n = {n} exceeds the enumeration limit {}", limits.max_enum_n)));
    }
    // layer[m] = blocks of the first j components with total size m
    let first = s.charges()[0];
    let mut layer: Vec<BTreeSet<BlockVector>> =
        (0..=n).into_par_iter().map(|m| level_one_blocks(first, e, m)).collect();
    for &sj in &s.charges()[1..] {
        let ones: Vec<BTreeSet<BlockVector>> =
            (0..=n).into_par_iter().map(|m| level_one_blocks(sj, e, m)).collect();
        layer = (0..=n)
            .into_par_iter()
            .map(|m| {
                let mut out = BTreeSet::new();
                for k in 0..=m {
                    for a in &layer[m - k] {
                        for b in &ones[k] {
                            out.insert(a.checked_add(b).expect("sizes are bounded"));
                        }
                    }
                }
                out
            })
            .collect();
    }
    Ok(layer.swap_remove(n))
}

/// Every `α ≥ 0` with `|α| = n` and coefficients in `[0, n]` (`e ≥ 1`).
pub fn nonnegative_window(e: Modulus, n: i64) -> Result<Vec<BlockVector>> {
    let k = e.require_finite("coefficient windows need e ≥ 1")?;
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    fn go(i: usize, rem: i64, cur: &mut Vec<i64>, e: Modulus, out: &mut Vec<BlockVector>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(BlockVector::from_coeffs(e, cur.clone()).unwrap());
            return;
        }
        for c in 0..=rem {
            cur[i] = c;
            go(i + 1, rem - c, cur, e, out);
        }
    }
    go(0, n, &mut cur, e, &mut out);
    Ok(out)
}

/// Every `α` with all coefficients in `[lo, hi]` (`e ≥ 1`).
pub fn box_window(e: Modulus, lo: i64, hi: i64) -> Result<Vec<BlockVector>> {
    let k = e.require_finite("coefficient windows need e ≥ 1")?;
    let width = (hi - lo + 1).max(0) as u64;
    if width.checked_pow(k as u32).is_none_or(|c| c > 50_000_000) {
        return Err(Error::Resource(format!("window [{lo},{hi}]^{k} is too large")));
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; k];
    loop {
        out.push(BlockVector::from_coeffs(e, cur.clone())?);
        let mut i = 0;
        while i < k && cur[i] == hi {
            cur[i] = lo;
            i += 1;
        }
        if i == k {
            break;
        }
        cur[i] += 1;
    }
    Ok(out)
}
