//! The shift `σ` of order `d` on `Q` and on partitions, the projection `π`
//! onto `Q′` and stuttering blocks. Everything here uses charge 0.

use serde::{Deserialize, Serialize};

use crate::abacus::{abacus_profile, core_from_x, e_core, is_e_core, x_vector, AbacusProfile, Runner};
use crate::blocks::{core_partition_of_block, is_level_one_block};
use crate::error::{Error, Result};
use crate::lattice::{BlockVector, Charge, Modulus};
use crate::partition::{residue_counts, Partition};

/// `e ≥ 2`, `1 ≤ ê ≤ e − 1`, and the order `d = e / gcd(e, ê)` of `ê` in `ℤ/eℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftParam {
    e: u32,
    ehat: u32,
    d: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl ShiftParam {
    pub fn new(e: Modulus, ehat: u32) -> Result<Self> {
        let e = e.get();
        if e < 2 {
            return Err(Error::UnsupportedModulus { e, reason: "the shift needs e ≥ 2" });
        }
        if ehat == 0 || ehat >= e {
            return Err(Error::InvalidArgument(format!("ê must lie in 1..={}, got {ehat}", e - 1)));
        }
        Ok(ShiftParam { e, ehat, d: e / gcd(e, ehat) })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.e).expect("validated")
    }

    pub fn ehat(&self) -> u32 {
        self.ehat
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn divides(&self) -> bool {
        self.e % self.ehat == 0
    }

    fn require_divides(&self) -> Result<()> {
        if self.divides() {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!("ê = {} does not divide e = {}", self.ehat, self.e)))
        }
    }

    fn check(&self, alpha: &BlockVector) -> Result<()> {
        let found = alpha.modulus().get();
        if found != self.e {
            return Err(Error::ModulusMismatch { expected: self.e, found });
        }
        Ok(())
    }
}

fn require_charge_zero(s: Charge) -> Result<()> {
    if s != 0 {
        return Err(Error::InvalidArgument(format!("the shift is defined at charge 0 only, got {s}")));
    }
    Ok(())
}

/// `σα`, whose coefficient at `i` is `c_{i+ê}(α)`.
pub fn sigma_block(alpha: &BlockVector, p: &ShiftParam) -> Result<BlockVector> {
    p.check(alpha)?;
    let eh = p.ehat as i64;
    Ok(alpha.reindex(|i| i + eh))
}

/// `σ̃λ` for an e-core `λ`: the e-core whose `x`-vector is `x(λ)` rotated by `ê`.
pub fn sigma_core(lambda: &Partition, p: &ShiftParam) -> Result<Partition> {
    let x = x_vector(lambda, 0, p.modulus())?;
    let n = x.len();
    let rotated: Vec<i64> = (0..n).map(|i| x[(i + p.ehat as usize) % n]).collect();
    Ok(core_from_x(&rotated)?.0)
}

/// `σλ`: runner `i` of the charge-0 abacus becomes runner `i + ê`'s content.
pub fn sigma_partition(lambda: &Partition, p: &ShiftParam) -> Partition {
    let ab = abacus_profile(lambda, 0, p.modulus()).expect("e ≥ 2");
    let n = ab.runners().len();
    let runners: Vec<Runner> = (0..n).map(|i| ab.runners()[(i + p.ehat as usize) % n].clone()).collect();
    AbacusProfile::from_runners(runners).expect("rotation keeps the charge").partition()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShiftClass {
    /// `σα` is a core block.
    BlockAndCore,
    BlockNotCore,
    NotBlock,
}

impl std::fmt::Display for ShiftClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ShiftClass::BlockAndCore => "block-and-core",
            ShiftClass::BlockNotCore => "block-not-core",
            ShiftClass::NotBlock => "not-block",
        })
    }
}

/// Where `σα` lands, for `α ∈ Q^0_+`: compares `c_0` with `c_ê + w(α)`.
pub fn shift_block_membership(alpha: &BlockVector, p: &ShiftParam) -> Result<ShiftClass> {
    p.check(alpha)?;
    if !is_level_one_block(alpha, 0) {
        return Err(Error::NotABlock(format!("{} (charge 0)", alpha.pretty())));
    }
    let lhs = alpha.coeff(0);
    let rhs = alpha.coeff(p.ehat as i64) + alpha.weight(&[0]);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => ShiftClass::BlockNotCore,
        std::cmp::Ordering::Equal => ShiftClass::BlockAndCore,
        std::cmp::Ordering::Greater => ShiftClass::NotBlock,
    })
}

/// `π : Q → Q′`, `α_i ↦ α′_{i mod ê}`; needs `ê | e`.
pub fn pi_project(alpha: &BlockVector, p: &ShiftParam) -> Result<BlockVector> {
    p.check(alpha)?;
    p.require_divides()?;
    let eh = p.ehat as i64;
    let coeffs = (0..eh).map(|j| (0..p.d as i64).map(|k| alpha.coeff(j + k * eh)).sum()).collect();
    BlockVector::from_coeffs(Modulus::new(p.ehat)?, coeffs)
}

pub fn is_stuttering_block(alpha: &BlockVector, p: &ShiftParam) -> Result<bool> {
    Ok(&sigma_block(alpha, p)? == alpha)
}

pub fn is_stuttering_partition(lambda: &Partition, p: &ShiftParam) -> bool {
    &sigma_partition(lambda, p) == lambda
}

/// Slides the top bead of a gap-free runner up `k` places.
fn slide_top(r: &Runner, k: i64) -> Runner {
    if k == 0 {
        return r.clone();
    }
    Runner { floor: r.floor - 1, beads: vec![r.floor - 1 + k] }
}

/// Some partition lying in the level-one block `α` (`e ≥ 1`): its core with
/// `w(α)` hooks added on runner 0.
pub fn partition_in_block(alpha: &BlockVector, s: Charge) -> Result<Partition> {
    let e = alpha.modulus();
    e.require_finite("needs e ≥ 1")?;
    let core = core_partition_of_block(alpha, s)?;
    let w = alpha.weight(&[s]);
    let ab = abacus_profile(&core, s, e)?;
    let mut runners = ab.runners().to_vec();
    runners[0] = slide_top(&runners[0], w);
    Ok(AbacusProfile::from_runners(runners)?.partition())
}

/// A `σ`-fixed partition in the stuttering block `α` with `d | w(α)`: the core
/// of `α` with the top bead of each runner `iê` slid `w(α)/d` times.
pub fn stuttering_witness(alpha: &BlockVector, p: &ShiftParam) -> Result<Partition> {
    p.check(alpha)?;
    p.require_divides()?;
    if !is_level_one_block(alpha, 0) {
        return Err(Error::NotABlock(format!("{} (charge 0)", alpha.pretty())));
    }
    if !is_stuttering_block(alpha, p)? {
        return Err(Error::Hypothesis("σα ≠ α".into()));
    }
    let w = alpha.weight(&[0]);
    let d = p.d as i64;
    if w % d != 0 {
        return Err(Error::Hypothesis(format!("d = {d} does not divide w(α) = {w}")));
    }
    let core = core_partition_of_block(alpha, 0)?;
    let ab = abacus_profile(&core, 0, p.modulus())?;
    let mut runners = ab.runners().to_vec();
    for i in 0..p.d as usize {
        let idx = i * p.ehat as usize;
        runners[idx] = slide_top(&runners[idx], w / d);
    }
    Ok(AbacusProfile::from_runners(runners)?.partition())
}

/// Outcome of the ê-core checks on one partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhatCoreReport {
    /// `λ` is an e-core with `σα(λ) = α(λ)`.
    pub stuttering_core: bool,
    /// ...and then `λ` is an ê-core.
    pub ehat_core: bool,
    /// `σα(λ)` is a block.
    pub shifted_is_block: bool,
    /// ...and then a partition in it has the same ê-core as `λ`.
    pub same_ehat_core: bool,
}

impl EhatCoreReport {
    pub fn passed(&self) -> bool {
        (!self.stuttering_core || self.ehat_core) && (!self.shifted_is_block || self.same_ehat_core)
    }
}

pub fn ehat_core_checks(lambda: &Partition, p: &ShiftParam) -> Result<EhatCoreReport> {
    p.require_divides()?;
    let e = p.modulus();
    let eh = Modulus::new(p.ehat)?;
    let alpha = residue_counts(lambda, 0, e);
    let sa = sigma_block(&alpha, p)?;
    let stuttering_core = is_e_core(lambda, e) && sa == alpha;
    let ehat_core = is_e_core(lambda, eh);
    let shifted_is_block = sa.is_nonnegative() && is_level_one_block(&sa, 0);
    let same_ehat_core = shifted_is_block && e_core(&partition_in_block(&sa, 0)?, eh)? == e_core(lambda, eh)?;
    Ok(EhatCoreReport { stuttering_core, ehat_core, shifted_is_block, same_ehat_core })
}

/// `x(λ)` as used by the shift: charge 0, so `x(∅) = 0`.
pub fn x0(lambda: &Partition, e: Modulus) -> Result<Vec<i64>> {
    x_vector(lambda, 0, e)
}

/// Rejects charges other than 0 for callers that take one.
pub fn check_charge(s: Charge) -> Result<()> {
    require_charge_zero(s)
}
