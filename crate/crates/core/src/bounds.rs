//! Weights of binary matrices and the constant `N(r,e)`: exact maximisation,
//! closed forms, bounds, and the spectrum of the intersection matrices.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{box_window, is_block, Limits, Multicharge};
use crate::error::{Error, Result};
use crate::lattice::{BlockVector, Modulus};

pub use crate::multipartition::matrix_weight;

/// Largest `e` for which subsets are encoded as bitmasks here.
pub const MAX_SUBSET_E: u32 = 20;

/// `r` subsets `E_1, …, E_r ⊆ {1..e}`; element `i` is bit `i − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsetTuple {
    e: u32,
    sets: Vec<u64>,
}

impl SubsetTuple {
    pub fn new(e: u32, sets: Vec<u64>) -> Result<Self> {
        if e == 0 || e > MAX_SUBSET_E {
            return Err(Error::InvalidArgument(format!("subset tuples need 1 ≤ e ≤ {MAX_SUBSET_E}")));
        }
        if let Some(&bad) = sets.iter().find(|&&s| s >> e != 0) {
            return Err(Error::InvalidArgument(format!("mask {bad:#b} does not fit in {e} bits")));
        }
        Ok(SubsetTuple { e, sets })
    }

    /// From 1-based element lists.
    pub fn from_sets(e: u32, sets: &[&[u32]]) -> Result<Self> {
        let mut masks = Vec::new();
        for set in sets {
            let mut m = 0u64;
            for &i in *set {
                if i == 0 || i > e {
                    return Err(Error::InvalidArgument(format!("element {i} is outside 1..={e}")));
                }
                m |= 1 << (i - 1);
            }
            masks.push(m);
        }
        Self::new(e, masks)
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn level(&self) -> usize {
        self.sets.len()
    }
}

impl fmt::Display for SubsetTuple {
    /// `{1,2} {1,3} {}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .sets
            .iter()
            .map(|&m| {
                let elems: Vec<String> =
                    (0..self.e).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", elems.join(","))
            })
            .collect();
        write!(f, "{}", sets.join(" "))
    }
}

/// `w(E, F) = min(|E|, |F|) − |E ∩ F|`.
#[inline]
pub fn pair_weight(a: u64, b: u64) -> i64 {
    (a.count_ones().min(b.count_ones()) - (a & b).count_ones()) as i64
}

/// `w(M) = Σ_{j<k} w(E_j, E_k)`.
pub fn tuple_weight(t: &SubsetTuple) -> i64 {
    let s = &t.sets;
    let mut total = 0;
    for j in 0..s.len() {
        for k in j + 1..s.len() {
            total += pair_weight(s[j], s[k]);
        }
    }
    total
}

/// Multiplicities `x_E` of subsets of `{1..e}`, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountVector {
    pub e: u32,
    pub counts: BTreeMap<u64, u64>,
}

impl CountVector {
    pub fn from_tuple(t: &SubsetTuple) -> Self {
        let mut counts = BTreeMap::new();
        for &m in t.sets() {
            *counts.entry(m).or_default() += 1;
        }
        CountVector { e: t.e, counts }
    }

    pub fn norm1(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The tuple listing each subset `x_E` times, in mask order.
    pub fn expand(&self) -> Result<SubsetTuple> {
        let sets = self.counts.iter().flat_map(|(&m, &c)| std::iter::repeat_n(m, c as usize)).collect();
        SubsetTuple::new(self.e, sets)
    }
}

/// `q_e(x) = ½ ⟨x, A x⟩` with `A_{E,F} = w(E, F)`.
pub fn q_form(x: &CountVector) -> i64 {
    let entries: Vec<(u64, i64)> = x.counts.iter().map(|(&m, &c)| (m, c as i64)).collect();
    let mut total = 0;
    for (i, &(a, xa)) in entries.iter().enumerate() {
        for &(b, xb) in &entries[i + 1..] {
            total += pair_weight(a, b) * xa * xb;
        }
    }
    total
}

/// `q_{e,k}`: `q_e` on the entries indexed by `k`-subsets only.
pub fn q_form_k(x: &CountVector, k: u32) -> i64 {
    let restricted = CountVector {
        e: x.e,
        counts: x.counts.iter().filter(|(m, _)| m.count_ones() == k).map(|(&m, &c)| (m, c)).collect(),
    };
    q_form(&restricted)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// All multisets of `r` subsets of `{1..e}`.
    Full,
    /// Multisets of `k`-subsets, for each `k ≤ ⌊e/2⌋`.
    EqualSize,
}

/// Guards on the exhaustive maximisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundLimits {
    pub full_max_e: u32,
    pub full_max_r: usize,
    pub equal_max_e: u32,
    pub equal_max_r: usize,
    /// Largest number of multisets a single search may visit.
    pub max_multisets: u64,
}

impl Default for BoundLimits {
    fn default() -> Self {
        BoundLimits { full_max_e: 6, full_max_r: 6, equal_max_e: 12, equal_max_r: 8, max_multisets: 1_000_000_000 }
    }
}

/// Result of an exact computation of `N(r,e)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NExact {
    pub r: usize,
    pub e: u32,
    pub value: i64,
    pub witness: SubsetTuple,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn binom(n: u64, k: u64) -> i64 {
    binomial(n, k) as i64
}

/// Maximises `Σ_{pairs} A` over multisets of `r` candidates containing
/// every index in `fixed`. Multisets are visited as non-decreasing index
/// sequences; ties keep the lexicographically first sequence.
struct MultisetSearch {
    m: usize,
    a: Vec<i32>,
}

impl MultisetSearch {
    fn new(cands: &[u64]) -> Self {
        let m = cands.len();
        let mut a = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                a[i * m + j] = pair_weight(cands[i], cands[j]) as i32;
            }
        }
        MultisetSearch { m, a }
    }

    fn row(&self, f: usize) -> &[i32] {
        &self.a[f * self.m..(f + 1) * self.m]
    }

    fn dfs(&self, start: usize, left: usize, acc: &mut [i32], w: i64, chosen: &mut Vec<usize>, best: &mut (i64, Vec<usize>)) {
        if left == 1 {
            let (mut bf, mut bv) = (start, i32::MIN);
            for (f, &v) in acc.iter().enumerate().skip(start) {
                if v > bv {
                    bv = v;
                    bf = f;
                }
            }
            if w + bv as i64 > best.0 {
                best.0 = w + bv as i64;
                best.1 = chosen.clone();
                best.1.push(bf);
            }
            return;
        }
        for f in start..self.m {
            let gain = acc[f] as i64;
            for (x, &y) in acc.iter_mut().zip(self.row(f)) {
                *x += y;
            }
            chosen.push(f);
            self.dfs(f, left - 1, acc, w + gain, chosen, best);
            chosen.pop();
            for (x, &y) in acc.iter_mut().zip(self.row(f)) {
                *x -= y;
            }
        }
    }

    /// `r ≥ 1` picks in total, the first of which is `fixed` if given.
    fn run(&self, r: usize, fixed: Option<usize>) -> (i64, Vec<usize>) {
        let prefix: Vec<usize> = fixed.into_iter().collect();
        let left = r - prefix.len();
        let mut base = vec![0i32; self.m];
        for &f in &prefix {
            for (x, &y) in base.iter_mut().zip(self.row(f)) {
                *x += y;
            }
        }
        if left == 0 {
            return (0, prefix);
        }
        if left == 1 {
            let mut best = (i64::MIN, Vec::new());
            self.dfs(0, 1, &mut base.clone(), 0, &mut prefix.clone(), &mut best);
            return best;
        }
        (0..self.m)
            .into_par_iter()
            .map(|f0| {
                let mut acc = base.clone();
                let gain = acc[f0] as i64;
                for (x, &y) in acc.iter_mut().zip(self.row(f0)) {
                    *x += y;
                }
                let mut chosen = prefix.clone();
                chosen.push(f0);
                let mut best = (i64::MIN, Vec::new());
                self.dfs(f0, left - 1, &mut acc, gain, &mut chosen, &mut best);
                best
            })
            .reduce(|| (i64::MIN, Vec::new()), |x, y| {
                if y.0 > x.0 || (y.0 == x.0 && !y.1.is_empty() && (x.1.is_empty() || y.1 < x.1)) {
                    y
                } else {
                    x
                }
            })
    }
}

fn multiset_count(m: usize, r: usize) -> u128 {
    if r == 0 {
        1
    } else {
        binomial((m + r - 1) as u64, r as u64)
    }
}

fn subsets_of_size(e: u32, k: u32) -> Vec<u64> {
    (0..1u64 << e).filter(|m| m.count_ones() == k).collect()
}

/// Exact `max { w(E_1, …, E_r) : E_j all of size k }`.
fn equal_size_k(r: usize, e: u32, k: u32, limits: &BoundLimits) -> Result<(i64, SubsetTuple)> {
    let cands = subsets_of_size(e, k);
    // relabelling {1..e} preserves the weight, so one set may be {1..k}
    let leaves = multiset_count(cands.len(), r - 1);
    if leaves > limits.max_multisets as u128 {
        return Err(Error::Resource(format!(
            "N({r},{e}) at k={k} needs {leaves} multisets (limit {})",
            limits.max_multisets
        )));
    }
    let (v, idx) = MultisetSearch::new(&cands).run(r, Some(0));
    Ok((v, SubsetTuple::new(e, idx.iter().map(|&i| cands[i]).collect())?))
}

/// `N(r,e)` by exhaustive search.
pub fn n_exact(r: usize, e: u32, strategy: Strategy, limits: &BoundLimits) -> Result<NExact> {
    if r == 0 || e == 0 {
        return Err(Error::InvalidArgument("N(r,e) needs r ≥ 1 and e ≥ 1".into()));
    }
    let trivial = || NExact { r, e, value: 0, witness: SubsetTuple { e, sets: vec![0; r] } };
    match strategy {
        Strategy::Full => {
            if e > limits.full_max_e || r > limits.full_max_r {
                return Err(Error::Resource(format!(
                    "full search for N({r},{e}) exceeds e ≤ {}, r ≤ {}",
                    limits.full_max_e, limits.full_max_r
                )));
            }
            let cands: Vec<u64> = (0..1u64 << e).collect();
            let leaves = multiset_count(cands.len(), r);
            if leaves > limits.max_multisets as u128 {
                return Err(Error::Resource(format!("N({r},{e}) needs {leaves} multisets")));
            }
            let (value, idx) = MultisetSearch::new(&cands).run(r, None);
            let witness = SubsetTuple::new(e, idx.iter().map(|&i| cands[i]).collect())?;
            Ok(NExact { r, e, value, witness })
        }
        Strategy::EqualSize => {
            if e > limits.equal_max_e || r > limits.equal_max_r {
                return Err(Error::Resource(format!(
                    "equal-size search for N({r},{e}) exceeds e ≤ {}, r ≤ {}",
                    limits.equal_max_e, limits.equal_max_r
                )));
            }
            let mut best = trivial();
            for k in 1..=e / 2 {
                let cap = (r * r) as i64 * (k * (e - k)) as i64 / (2 * e as i64);
                if cap <= best.value {
                    continue;
                }
                let (v, w) = equal_size_k(r, e, k, limits)?;
                if v > best.value {
                    best = NExact { r, e, value: v, witness: w };
                }
            }
            Ok(best)
        }
    }
}

/// `Q(r,e)`: the maximum over `k`-subsets with `k = ⌊e/2⌋` only.
pub fn q_bound(r: usize, e: u32, limits: &BoundLimits) -> Result<i64> {
    if e < 2 || r == 0 {
        return Ok(0);
    }
    Ok(equal_size_k(r, e, e / 2, limits)?.0)
}

/// `N′(r,e) = ⌊r²⌊e²/4⌋ / (2e)⌋`.
pub fn ideal_bound(r: usize, e: u32) -> i64 {
    let (r, e) = (r as i64, e as i64);
    r * r * (e * e / 4) / (2 * e)
}

/// The proven closed forms of `N(r,e)`, where available.
pub fn n_closed_form(r: usize, e: u32) -> Option<i64> {
    if r <= 1 || e == 1 {
        return Some(0);
    }
    if e == 0 {
        return None;
    }
    let (ri, ei) = (r as i64, e as i64);
    match (r, e) {
        (3, _) => Some(ei),
        (4, _) if e % 2 == 0 => Some(2 * ei),
        (4, _) => Some(2 * ei - 1),
        (2, _) | (_, 2..=6) => Some(ideal_bound(r, e)),
        _ if r % 2 == 0 && e % 2 == 0 => Some(ei * ri * ri / 8),
        _ => None,
    }
}

/// `(⌊e/2⌋⌊r²/4⌋, min(N′(r,e), ⌊(r−1)re/6⌋ if r ≥ 3))`.
pub fn n_bounds(r: usize, e: u32) -> Result<(i64, i64)> {
    if r < 2 || e < 2 {
        return Err(Error::InvalidArgument("N bounds need r, e ≥ 2".into()));
    }
    let (ri, ei) = (r as i64, e as i64);
    let lower = (ei / 2) * (ri * ri / 4);
    let mut upper = ideal_bound(r, e);
    if r >= 3 {
        upper = upper.min((ri - 1) * ri * ei / 6);
    }
    Ok((lower, upper))
}

/// Closed-form spectrum of `A_{e,k} = (k − |E ∩ F|)_{|E|=|F|=k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub e: u32,
    pub k: u32,
    /// `(eigenvalue, multiplicity)`, zero-multiplicity entries omitted.
    pub eigenvalues: Vec<(i64, u64)>,
}

pub fn spectrum(e: u32, k: u32) -> Result<SpectrumReport> {
    if k == 0 || k >= e {
        return Err(Error::InvalidArgument(format!("spectrum needs 1 ≤ k ≤ e − 1, got k={k}, e={e}")));
    }
    let (e64, k64) = (e as u64, k as u64);
    let top = k as i64 * binom(e64 - 1, k64);
    let low = -binom(e64 - 2, k64 - 1);
    let n = binomial(e64, k64) as u64;
    let eigenvalues = [(top, 1), (0, n - e64), (low, e64 - 1)]
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .collect();
    Ok(SpectrumReport { e, k, eigenvalues })
}

/// Outcome of the exact-arithmetic checks on `A_{e,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumCheck {
    pub e: u32,
    pub k: u32,
    /// `A·1 = kC(e−1,k)·1`.
    pub row_sums: bool,
    /// `tr A = Σ λ·mult = 0`.
    pub trace: bool,
    /// `A² + C(e−2,k−1)·A = γJ` with `γ = λ₁(λ₁ + C(e−2,k−1)) / C(e,k)`.
    pub annihilating: bool,
    /// `tr A² = Σ λ²·mult`.
    pub trace_sq: bool,
}

impl SpectrumCheck {
    pub fn passed(&self) -> bool {
        self.row_sums && self.trace && self.annihilating && self.trace_sq
    }
}

pub fn verify_spectrum(e: u32, k: u32) -> Result<SpectrumCheck> {
    let report = spectrum(e, k)?;
    let cands = subsets_of_size(e, k);
    let n = cands.len();
    let a: Vec<i64> = cands
        .iter()
        .flat_map(|&x| cands.iter().map(move |&y| (k - (x & y).count_ones()) as i64))
        .collect();
    let top = report.eigenvalues[0].0;
    let c = binom(e as u64 - 2, k as u64 - 1);
    let row_sums = (0..n).all(|i| a[i * n..(i + 1) * n].iter().sum::<i64>() == top);
    let tr: i64 = (0..n).map(|i| a[i * n + i]).sum();
    let trace = tr == 0 && report.eigenvalues.iter().map(|&(l, m)| l * m as i64).sum::<i64>() == 0;
    let mut a2 = vec![0i64; n * n];
    for i in 0..n {
        for l in 0..n {
            let ail = a[i * n + l];
            if ail == 0 {
                continue;
            }
            for j in 0..n {
                a2[i * n + j] += ail * a[l * n + j];
            }
        }
    }
    let num = top * (top + c);
    let gamma_ok = num % n as i64 == 0;
    let gamma = num / n as i64;
    let annihilating = gamma_ok && (0..n * n).all(|ij| a2[ij] + c * a[ij] == gamma);
    let tr2: i64 = (0..n).map(|i| a2[i * n + i]).sum();
    let trace_sq = tr2 == report.eigenvalues.iter().map(|&(l, m)| l * l * m as i64).sum::<i64>();
    Ok(SpectrumCheck { e, k, row_sums, trace, annihilating, trace_sq })
}

/// The table `N(r,e)` for `e ∈ 1..=e_max` by the equal-size strategy.
pub fn n_row(r: usize, e_max: u32, limits: &BoundLimits) -> Result<Vec<i64>> {
    (1..=e_max).map(|e| n_exact(r, e, Strategy::EqualSize, limits).map(|n| n.value)).collect()
}

/// Violations of `N(r,e+e′) ≥ N(r,e) + N(r,e′)` with `e + e′ ≤ e_max`.
pub fn superadditivity_violations(r: usize, e_max: u32, limits: &BoundLimits) -> Result<Vec<(u32, u32)>> {
    let row = n_row(r, e_max, limits)?;
    let n = |e: u32| row[e as usize - 1];
    let mut bad = Vec::new();
    for e in 1..e_max {
        for f in e..=e_max - e {
            if n(e + f) < n(e) + n(f) {
                bad.push((e, f));
            }
        }
    }
    Ok(bad)
}

pub fn superadditivity_check(r: usize, e_max: u32, limits: &BoundLimits) -> Result<bool> {
    Ok(superadditivity_violations(r, e_max, limits)?.is_empty())
}

/// Outcome of scanning a coefficient window for superlevel non-blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCReport {
    pub r: usize,
    pub e: u32,
    pub multicharge: Multicharge,
    pub n: i64,
    /// Elements scanned.
    pub checked: usize,
    /// Elements with `w(α) > N(r,e) − r`.
    pub superlevel: usize,
    pub counterexample: Option<BlockVector>,
}

impl TheoremCReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Every `α` with coefficients in `[−bound, bound]` and `w^S(α) > N(r,e) − r`
/// must be a block.
pub fn theorem_c_check(
    e: u32,
    s: &Multicharge,
    coeff_bound: i64,
    limits: &Limits,
    blimits: &BoundLimits,
) -> Result<TheoremCReport> {
    let r = s.level();
    if e == 0 {
        return Err(Error::UnsupportedModulus { e, reason: "the superlevel inclusion needs e ≥ 1" });
    }
    let n = n_exact(r, e, Strategy::EqualSize, blimits)?.value;
    let modulus = Modulus::new(e)?;
    let window = box_window(modulus, -coeff_bound, coeff_bound)?;
    let threshold = n - r as i64;
    let hits: Vec<&BlockVector> = window.iter().filter(|a| a.weight(s.charges()) > threshold).collect();
    let failures = hits
        .par_iter()
        .map(|a| is_block(a, s, limits).map(|ok| (!ok).then(|| (*a).clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremCReport {
        r,
        e,
        multicharge: s.clone(),
        n,
        checked: window.len(),
        superlevel: hits.len(),
        counterexample: failures.into_iter().flatten().min(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BL: BoundLimits =
        BoundLimits { full_max_e: 6, full_max_r: 6, equal_max_e: 12, equal_max_r: 8, max_multisets: 1_000_000_000 };

    fn st(e: u32, sets: &[&[u32]]) -> SubsetTuple {
        SubsetTuple::from_sets(e, sets).unwrap()
    }

    #[test]
    fn pair_weight_examples() {
        for e in 1..=6u32 {
            let full = (1u64 << e) - 1;
            for a in 0..1u64 << e {
                assert_eq!(pair_weight(a, a), 0);
                assert_eq!(pair_weight(a, 0), 0);
                assert_eq!(pair_weight(a, full), 0);
                for b in 0..1u64 << e {
                    assert_eq!(pair_weight(a, b), pair_weight(!a & full, !b & full));
                    assert_eq!(pair_weight(a, b), pair_weight(b, a));
                }
            }
        }
        assert_eq!(pair_weight(0b01, 0b10), 1);
    }

    #[test]
    fn tuple_weight_examples() {
        assert_eq!(tuple_weight(&st(5, &[&[1, 2], &[1, 3], &[3, 5], &[4, 5], &[2, 4]])), 15);
        assert_eq!(tuple_weight(&st(5, &[&[1, 3], &[2, 4], &[1, 5], &[2, 5]])), 9);
        assert_eq!(tuple_weight(&st(3, &[&[1], &[2], &[3]])), 3);
        assert_eq!(st(3, &[&[1, 3], &[]]).to_string(), "{1,3} {}");
        assert!(SubsetTuple::from_sets(3, &[&[4]]).is_err());
    }

    #[test]
    fn q_form_examples() {
        let x = CountVector { e: 4, counts: [(0b0011, 5)].into_iter().collect() };
        assert_eq!(q_form(&x), 0);
        for e in 2..=6u32 {
            for k in 1..e {
                let ones = CountVector { e, counts: subsets_of_size(e, k).into_iter().map(|m| (m, 1)).collect() };
                let top = k as i64 * binom(e as u64 - 1, k as u64);
                let n = binom(e as u64, k as u64);
                assert_eq!(2 * q_form_k(&ones, k), top * n);
            }
        }
    }

    #[test]
    fn q_form_matches_expansion() {
        // deterministic pseudo-random count vectors
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let e = 1 + (next() % 5) as u32;
            let mut counts = BTreeMap::new();
            for _ in 0..1 + next() % 6 {
                *counts.entry(next() % (1 << e)).or_default() += 1;
            }
            let x = CountVector { e, counts };
            let t = x.expand().unwrap();
            assert_eq!(q_form(&x), tuple_weight(&t));
            assert_eq!(CountVector::from_tuple(&t), x);
            // spectral bound on each size class
            for k in 1..e {
                let xk: u64 = x.counts.iter().filter(|(m, _)| m.count_ones() == k).map(|(_, c)| c).sum();
                let cap = (xk * xk) as f64 / (2.0 * e as f64) * (k * (e - k)) as f64;
                assert!(q_form_k(&x, k) as f64 <= cap + 1e-9);
            }
        }
    }

    #[test]
    fn strategies_agree() {
        for e in 1..=5u32 {
            for r in 1..=5usize {
                let full = n_exact(r, e, Strategy::Full, &BL).unwrap();
                let eq = n_exact(r, e, Strategy::EqualSize, &BL).unwrap();
                assert_eq!(full.value, eq.value, "r={r} e={e}");
                assert_eq!(tuple_weight(&full.witness), full.value);
                assert_eq!(tuple_weight(&eq.witness), eq.value);
                assert_eq!(full.witness.level(), r);
            }
        }
    }

    #[test]
    fn small_values() {
        for e in 1..=8u32 {
            assert_eq!(n_exact(2, e, Strategy::EqualSize, &BL).unwrap().value, (e / 2) as i64);
        }
        for r in 2..=7usize {
            assert_eq!(n_exact(r, 2, Strategy::EqualSize, &BL).unwrap().value, (r * r / 4) as i64);
        }
        assert_eq!(n_exact(5, 5, Strategy::EqualSize, &BL).unwrap().value, 15);
        assert!(matches!(n_exact(7, 6, Strategy::Full, &BL), Err(Error::Resource(_))));
        assert!(matches!(n_exact(8, 12, Strategy::EqualSize, &BL), Err(Error::Resource(_))));
    }

    #[test]
    fn witnesses_are_deterministic() {
        let a = n_exact(4, 5, Strategy::Full, &BL).unwrap();
        for _ in 0..3 {
            assert_eq!(n_exact(4, 5, Strategy::Full, &BL).unwrap(), a);
        }
    }

    #[test]
    fn closed_forms() {
        for e in 2..=20u32 {
            assert_eq!(n_closed_form(3, e), Some(e as i64));
        }
        assert_eq!(n_closed_form(4, 5), Some(9));
        assert_eq!(n_closed_form(6, 6), Some(27));
        assert_eq!(n_closed_form(5, 7), None);
        assert_eq!(n_closed_form(8, 8), Some(64));
        for r in 2..=12usize {
            let ri = r as i64;
            assert_eq!(n_closed_form(r, 2), Some(ri * ri / 4));
            assert_eq!(n_closed_form(r, 3), Some(ri * ri / 3));
            assert_eq!(n_closed_form(r, 4), Some(ri * ri / 2));
            assert_eq!(n_closed_form(r, 5), Some(3 * ri * ri / 5));
            assert_eq!(n_closed_form(r, 6), Some(3 * (ri * ri / 4)));
        }
    }

    #[test]
    fn closed_forms_match_exact() {
        for r in 2..=6usize {
            for e in 1..=7u32 {
                if let Some(v) = n_closed_form(r, e) {
                    assert_eq!(n_exact(r, e, Strategy::EqualSize, &BL).unwrap().value, v, "r={r} e={e}");
                }
            }
        }
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(n_bounds(2, 5).unwrap(), (2, 2));
        for e in (2..=20u32).step_by(2) {
            assert_eq!(n_bounds(4, e).unwrap(), (2 * e as i64, 2 * e as i64));
        }
        assert_eq!(ideal_bound(3, 8), 9);
        assert_eq!(n_bounds(3, 8).unwrap(), (8, 8));
        assert!(n_bounds(1, 4).is_err());
        for r in 2..=6usize {
            for e in 2..=7u32 {
                let (lo, hi) = n_bounds(r, e).unwrap();
                let n = n_exact(r, e, Strategy::EqualSize, &BL).unwrap().value;
                assert!(lo <= n && n <= hi, "r={r} e={e}: {lo} ≤ {n} ≤ {hi}");
            }
        }
    }

    #[test]
    fn spectra() {
        let s = spectrum(4, 2).unwrap();
        assert_eq!(s.eigenvalues, vec![(6, 1), (0, 2), (-2, 3)]);
        let s = spectrum(5, 1).unwrap();
        assert_eq!(s.eigenvalues, vec![(4, 1), (-1, 4)]);
        assert!(spectrum(4, 4).is_err());
        assert!(spectrum(4, 0).is_err());
        for e in 2..=8u32 {
            for k in 1..e {
                let c = verify_spectrum(e, k).unwrap();
                assert!(c.passed(), "{c:?}");
                let s = spectrum(e, k).unwrap();
                assert_eq!(s.eigenvalues.iter().map(|x| x.1).sum::<u64>(), binom(e as u64, k as u64) as u64);
            }
        }
    }

    #[test]
    fn superadditivity() {
        assert!(superadditivity_check(2, 6, &BL).unwrap());
        assert!(superadditivity_check(3, 5, &BL).unwrap());
        assert!(superadditivity_check(1, 6, &BL).unwrap());
        assert!(n_row(1, 6, &BL).unwrap().iter().all(|&v| v == 0));
    }

    #[test]
    fn q_equals_n_for_e5() {
        for r in 2..=5usize {
            let n = n_exact(r, 5, Strategy::EqualSize, &BL).unwrap().value;
            assert_eq!(q_bound(r, 5, &BL).unwrap(), n);
        }
    }

    #[test]
    fn shift_instances() {
        // Q(r,5) = N′(r,5) for r ∈ {0,1} lifts to r + C(5,2)
        for r in 0..=1usize {
            assert_eq!(q_bound(r, 5, &BL).unwrap(), ideal_bound(r, 5));
            assert_eq!(q_bound(r + 10, 5, &BL).unwrap(), ideal_bound(r + 10, 5));
        }
        // 0/1 optimisers at r ∈ {2,3} give Q(10 − r, 5) = N′(10 − r, 5)
        let pairs = subsets_of_size(5, 2);
        for r in 2..=3usize {
            let target = ideal_bound(r, 5);
            let exists = (0..1u32 << pairs.len()).filter(|m| m.count_ones() as usize == r).any(|m| {
                let sets = (0..pairs.len()).filter(|i| m >> i & 1 == 1).map(|i| pairs[i]).collect();
                tuple_weight(&SubsetTuple::new(5, sets).unwrap()) == target
            });
            assert!(exists);
            assert_eq!(q_bound(10 - r, 5, &BL).unwrap(), ideal_bound(10 - r, 5));
        }
    }

    #[test]
    fn theorem_c_small() {
        let lim = Limits::default();
        let rep = theorem_c_check(2, &Multicharge::new(vec![0, 1]).unwrap(), 4, &lim, &BL).unwrap();
        assert!(rep.holds() && rep.superlevel > 0);
        let rep = theorem_c_check(3, &Multicharge::new(vec![0, 0]).unwrap(), 3, &lim, &BL).unwrap();
        assert!(rep.holds() && rep.superlevel > 0);
    }
}
