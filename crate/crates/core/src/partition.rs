//! Partitions, Young diagrams, residues and rim hooks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{BlockVector, Charge, Modulus};

/// Largest partition size accepted by the parser and constructors.
pub const MAX_SIZE: i64 = 1 << 20;

/// A partition `λ_1 ≥ … ≥ λ_h > 0`. The empty partition is `∅`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates positivity, monotonicity and the size bound.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        let mut size: i64 = 0;
        for (a, &p) in parts.iter().enumerate() {
            if p <= 0 {
                return Err(Error::InvalidArgument(format!("part {p} is not positive")));
            }
            if a > 0 && parts[a - 1] < p {
                return Err(Error::InvalidArgument(format!("parts {parts:?} are not non-increasing")));
            }
            size = size.saturating_add(p);
            if size > MAX_SIZE {
                return Err(Error::Overflow("partition size"));
            }
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros, then validates.
    pub fn from_parts_trimmed(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    #[inline]
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// `λ_a` with 1-based `a`; zero beyond the height.
    #[inline]
    pub fn part(&self, a: usize) -> i64 {
        if a == 0 {
            return 0;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        let parts = (1..=w).map(|b| self.0.iter().filter(|&&p| p >= b).count() as i64).collect();
        Partition(parts)
    }

    /// All nodes of the Young diagram, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(a, &p)| (1..=p).map(move |b| Node { row: a as i64 + 1, col: b }))
    }

    pub fn contains(&self, node: Node) -> bool {
        self.part(node.row as usize) >= node.col
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// `"4,3,3,1"`, or `"-"` for `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("partition literal {s:?}: bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Parse(format!("partition literal {s:?}: {m}")),
            other => other,
        })
    }
}

/// A node `(a, b)` of a Young diagram, 1-based row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: i64,
    pub col: i64,
}

impl Node {
    pub fn new(row: i64, col: i64) -> Result<Self> {
        if row < 1 || col < 1 {
            return Err(Error::InvalidArgument(format!("node ({row},{col}) must be 1-based")));
        }
        Ok(Node { row, col })
    }
}

/// `b − a + s`, reduced modulo `e`.
pub fn residue(node: Node, s: Charge, e: Modulus) -> i64 {
    e.reduce(node.col - node.row + s)
}

/// The residue counts `c_i^s(λ)`, packaged as the element `α^s(λ) ∈ Q`.
pub fn residue_counts(lambda: &Partition, s: Charge, e: Modulus) -> BlockVector {
    if e.is_infinite() {
        // count nodes per content directly
        let mut counts = std::collections::BTreeMap::<i64, i64>::new();
        for node in lambda.nodes() {
            *counts.entry(node.col - node.row + s).or_default() += 1;
        }
        return BlockVector::from_pairs(e, counts).expect("partition sizes are bounded");
    }
    let n = e.get() as i64;
    let mut c = vec![0i64; n as usize];
    for (a, &p) in lambda.parts().iter().enumerate() {
        let start = s - (a as i64 + 1);
        // contents start+1 ..= start+p
        let full = p / n;
        for x in c.iter_mut() {
            *x += full;
        }
        for b in 1..=(p % n) {
            c[(start + b).rem_euclid(n) as usize] += 1;
        }
    }
    BlockVector::from_coeffs(e, c).expect("partition sizes are bounded")
}

/// The level-one weight `w_s(λ) = c_s − ½ Σ (c_i − c_{i+1})²`.
pub fn charge_weight(lambda: &Partition, s: Charge, e: Modulus) -> i64 {
    residue_counts(lambda, s, e).weight(&[s])
}

/// A rim hook, recorded by its bead move `b → b − l` on the charge-0
/// beta-numbers together with the node `(a, b)` whose hook it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    pub node: Node,
    pub length: i64,
    /// The partition left after unwrapping the hook.
    pub result: Partition,
}

impl RimHook {
    /// The nodes of the hook, recovered from the two diagrams.
    pub fn nodes(&self, lambda: &Partition) -> Vec<Node> {
        lambda.nodes().filter(|&n| !self.result.contains(n)).collect()
    }
}

/// First `len` charge-0 beta-numbers `λ_a − a`.
fn beta_prefix(lambda: &Partition, len: usize) -> Vec<i64> {
    (1..=len).map(|a| lambda.part(a) - a as i64).collect()
}

fn partition_from_beta0(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|x, y| y.cmp(x));
    let parts: Vec<i64> = beta
        .iter()
        .enumerate()
        .map(|(a, &b)| b + a as i64 + 1)
        .take_while(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// All `l`-rim hooks of `λ`: beads `b ∈ β` with `b − l ∉ β`.
pub fn removable_rim_hooks(lambda: &Partition, l: i64) -> Result<Vec<RimHook>> {
    if l < 1 {
        return Err(Error::InvalidArgument(format!("hook length {l} must be positive")));
    }
    let h = lambda.height();
    let len = h + l as usize;
    let beta = beta_prefix(lambda, len);
    let set: BTreeSet<i64> = beta.iter().copied().collect();
    // values ≤ −len are all beads
    let has = |v: i64| v <= -(len as i64) - 1 || set.contains(&v);
    let mut out = Vec::new();
    for a in 1..=h {
        let b = beta[a - 1];
        if has(b - l) {
            continue;
        }
        let leg = set.range(b - l + 1..b).count() as i64;
        let arm = l - 1 - leg;
        let node = Node { row: a as i64, col: lambda.part(a) - arm };
        let mut nb = beta.clone();
        nb[a - 1] = b - l;
        out.push(RimHook { node, length: l, result: partition_from_beta0(nb) });
    }
    Ok(out)
}

/// Every partition obtained from `λ` by wrapping on one `l`-rim hook.
pub fn add_rim_hook_results(lambda: &Partition, l: i64) -> Result<Vec<Partition>> {
    if l < 1 {
        return Err(Error::InvalidArgument(format!("hook length {l} must be positive")));
    }
    let len = lambda.height() + l as usize;
    let beta = beta_prefix(lambda, len);
    let set: BTreeSet<i64> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for a in 0..len {
        let b = beta[a];
        if set.contains(&(b + l)) {
            continue;
        }
        let mut nb = beta.clone();
        nb[a] = b + l;
        out.push(partition_from_beta0(nb));
    }
    Ok(out)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i64, n as i64, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
