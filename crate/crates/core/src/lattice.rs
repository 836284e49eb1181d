//! The root lattice `Q = ⊕ ℤα_i` and the residue ring it is indexed by.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A charge `s ∈ ℤ`. Bounded by [`MAX_CHARGE`] so that every derived
/// quantity fits comfortably in 64 bits.
pub type Charge = i64;

pub const MAX_CHARGE: i64 = 1 << 40;
/// Largest supported finite modulus.
pub const MAX_MODULUS: u32 = 1 << 12;
/// Bound on the absolute value of any coefficient of a [`BlockVector`].
pub const MAX_COEFF: i64 = 1 << 20;
/// Bound on the width of the support of a `BlockVector` when `e = 0`.
pub const MAX_SUPPORT_WIDTH: i64 = 1 << 16;

pub(crate) fn check_charge(s: Charge) -> Result<Charge> {
    if s.abs() > MAX_CHARGE {
        return Err(Error::Overflow("charge"));
    }
    Ok(s)
}

/// The order `e` of the residue ring; `e = 0` means residues live in `ℤ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(u32);

impl Modulus {
    pub const INFINITE: Modulus = Modulus(0);

    pub fn new(e: u32) -> Result<Self> {
        if e > MAX_MODULUS {
            return Err(Error::InvalidArgument(format!("e={e} exceeds {MAX_MODULUS}")));
        }
        Ok(Modulus(e))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_infinite(self) -> bool {
        self.0 == 0
    }

    /// Canonical representative of `i` in `ℤ/eℤ` (identity when `e = 0`).
    #[inline]
    pub fn reduce(self, i: i64) -> i64 {
        if self.0 == 0 {
            i
        } else {
            i.rem_euclid(self.0 as i64)
        }
    }

    pub(crate) fn require_finite(self, reason: &'static str) -> Result<usize> {
        if self.0 == 0 {
            Err(Error::UnsupportedModulus { e: 0, reason })
        } else {
            Ok(self.0 as usize)
        }
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let e = u32::deserialize(d)?;
        Modulus::new(e).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    /// One coefficient per residue `0..e`.
    Cyclic(Vec<i64>),
    /// Non-zero coefficients only (`e = 0`).
    Support(BTreeMap<i64, i64>),
}

/// An element `α = Σ c_i α_i` of `Q`. Coefficients may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BlockVectorJson", into = "BlockVectorJson")]
pub struct BlockVector {
    e: Modulus,
    repr: Repr,
}

fn check_coeff(c: i64) -> Result<i64> {
    if c.abs() > MAX_COEFF {
        Err(Error::Overflow("block coefficient"))
    } else {
        Ok(c)
    }
}

impl BlockVector {
    pub fn zero(e: Modulus) -> Self {
        let repr = if e.is_infinite() {
            Repr::Support(BTreeMap::new())
        } else {
            Repr::Cyclic(vec![0; e.get() as usize])
        };
        BlockVector { e, repr }
    }

    /// The element `1`: all-ones for `e > 0`, zero for `e = 0`.
    pub fn const_one(e: Modulus) -> Self {
        if e.is_infinite() {
            Self::zero(e)
        } else {
            BlockVector { e, repr: Repr::Cyclic(vec![1; e.get() as usize]) }
        }
    }

    /// Dense constructor for `e ≥ 1`; `coeffs[i]` is the coefficient of `α_i`.
    pub fn from_coeffs(e: Modulus, coeffs: Vec<i64>) -> Result<Self> {
        let n = e.require_finite("dense coefficients need a finite modulus")?;
        if coeffs.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} coefficients, got {}",
                coeffs.len()
            )));
        }
        for &c in &coeffs {
            check_coeff(c)?;
        }
        Ok(BlockVector { e, repr: Repr::Cyclic(coeffs) })
    }

    /// Builds `Σ c α_i` from `(i, c)` pairs; indices are reduced modulo `e`
    /// and repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(e: Modulus, pairs: I) -> Result<Self> {
        let mut v = Self::zero(e);
        for (i, c) in pairs {
            let cur = v.coeff(i);
            v.set(i, cur.checked_add(c).ok_or(Error::Overflow("block coefficient"))?)?;
        }
        Ok(v)
    }

    pub(crate) fn set(&mut self, i: i64, c: i64) -> Result<()> {
        check_coeff(c)?;
        let i = self.e.reduce(i);
        match &mut self.repr {
            Repr::Cyclic(v) => v[i as usize] = c,
            Repr::Support(m) => {
                if c == 0 {
                    m.remove(&i);
                } else {
                    if i.abs() > MAX_CHARGE {
                        return Err(Error::Overflow("block index"));
                    }
                    m.insert(i, c);
                    let lo = *m.keys().next().unwrap();
                    let hi = *m.keys().next_back().unwrap();
                    if hi - lo >= MAX_SUPPORT_WIDTH {
                        m.remove(&i);
                        return Err(Error::Overflow("block support width"));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.e
    }

    /// Coefficient `c_i(α)`; `i` is reduced modulo `e`.
    #[inline]
    pub fn coeff(&self, i: i64) -> i64 {
        match &self.repr {
            Repr::Cyclic(v) => v[self.e.reduce(i) as usize],
            Repr::Support(m) => m.get(&i).copied().unwrap_or(0),
        }
    }

    /// `(i, c_i)` for every residue `i ∈ 0..e` (`e > 0`) or every non-zero
    /// coefficient (`e = 0`), in increasing order of `i`.
    pub fn entries(&self) -> Vec<(i64, i64)> {
        match &self.repr {
            Repr::Cyclic(v) => v.iter().enumerate().map(|(i, &c)| (i as i64, c)).collect(),
            Repr::Support(m) => m.iter().map(|(&i, &c)| (i, c)).collect(),
        }
    }

    /// Dense coefficients for `e > 0`.
    pub fn as_slice(&self) -> Option<&[i64]> {
        match &self.repr {
            Repr::Cyclic(v) => Some(v),
            Repr::Support(_) => None,
        }
    }

    /// Smallest and largest index of the support (`e = 0` only).
    pub fn support_range(&self) -> Option<(i64, i64)> {
        match &self.repr {
            Repr::Cyclic(_) => None,
            Repr::Support(m) => Some((*m.keys().next()?, *m.keys().next_back()?)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|&(_, c)| c == 0)
    }

    /// `|α| = Σ c_i`.
    pub fn size(&self) -> i64 {
        self.entries().iter().map(|&(_, c)| c).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|&(_, c)| c >= 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.e != other.e {
            return Err(Error::ModulusMismatch { expected: self.e.get(), found: other.e.get() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (i, c) in other.entries() {
            let sum = out.coeff(i).checked_add(c).ok_or(Error::Overflow("block addition"))?;
            out.set(i, sum)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (i, c) in other.entries() {
            let d = out.coeff(i).checked_sub(c).ok_or(Error::Overflow("block subtraction"))?;
            out.set(i, d)?;
        }
        Ok(out)
    }

    /// `α + h·1`. For `e = 0` this is `α` itself.
    pub fn add_ones(&self, h: i64) -> Result<Self> {
        match &self.repr {
            Repr::Support(_) => Ok(self.clone()),
            Repr::Cyclic(v) => {
                let mut out = Vec::with_capacity(v.len());
                for &c in v {
                    out.push(check_coeff(c.checked_add(h).ok_or(Error::Overflow("α + h·1"))?)?);
                }
                Ok(BlockVector { e: self.e, repr: Repr::Cyclic(out) })
            }
        }
    }

    /// `½ Σ_i (c_i − c_{i+1})²`, an integer since `Σ_i (c_i − c_{i+1}) = 0`.
    pub fn half_sq_differences(&self) -> i64 {
        let total: i64 = match &self.repr {
            Repr::Cyclic(v) => {
                let n = v.len();
                (0..n).map(|i| (v[i] - v[(i + 1) % n]).pow(2)).sum()
            }
            Repr::Support(m) => match (m.keys().next(), m.keys().next_back()) {
                (Some(&lo), Some(&hi)) => {
                    (lo - 1..=hi).map(|i| (self.coeff(i) - self.coeff(i + 1)).pow(2)).sum()
                }
                _ => 0,
            },
        };
        debug_assert!(total % 2 == 0);
        total / 2
    }

    /// `w^S(α) = Σ_j c_{s_j} − ½ Σ_i (c_i − c_{i+1})²`.
    pub fn weight(&self, charges: &[Charge]) -> i64 {
        let lead: i64 = charges.iter().map(|&s| self.coeff(s)).sum();
        lead - self.half_sq_differences()
    }

    /// Maps every coefficient through `f(i)`: the result has coefficient
    /// `c_{f(i)}` at `i`. Used for index rotations.
    pub(crate) fn reindex(&self, f: impl Fn(i64) -> i64) -> Self {
        match &self.repr {
            Repr::Cyclic(v) => {
                let n = v.len() as i64;
                let out = (0..n).map(|i| self.coeff(f(i))).collect::<Vec<_>>();
                debug_assert_eq!(out.len(), n as usize);
                BlockVector { e: self.e, repr: Repr::Cyclic(out) }
            }
            Repr::Support(_) => unreachable!("reindexing is only used for e > 0"),
        }
    }
}

impl fmt::Display for BlockVector {
    /// Literal form: `"4,4,3"` for `e > 0`, `"-1:2,0:3"` (index:coeff) for
    /// `e = 0`, `"0"` for the zero vector at `e = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Cyclic(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            Repr::Support(m) if m.is_empty() => write!(f, "0"),
            Repr::Support(m) => {
                let parts: Vec<String> = m.iter().map(|(i, c)| format!("{i}:{c}")).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl BlockVector {
    /// Human-readable `4α_0 + 4α_1 + 3α_2` form.
    pub fn pretty(&self) -> String {
        let terms: Vec<String> = self
            .entries()
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(i, c)| match c {
                1 => format!("α_{i}"),
                -1 => format!("-α_{i}"),
                _ => format!("{c}α_{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Parses the literal produced by `Display` for the given modulus.
    pub fn parse(e: Modulus, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse(format!("block literal {s:?}: {msg}"));
        if e.is_infinite() {
            if s == "0" || s.is_empty() {
                return Ok(Self::zero(e));
            }
            let mut pairs = Vec::new();
            for tok in s.split(',') {
                let (i, c) = tok.split_once(':').ok_or_else(|| bad("expected index:coeff"))?;
                let i = i.trim().parse::<i64>().map_err(|_| bad("bad index"))?;
                let c = c.trim().parse::<i64>().map_err(|_| bad("bad coefficient"))?;
                pairs.push((i, c));
            }
            Self::from_pairs(e, pairs)
        } else {
            let coeffs = s
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad("bad coefficient")))
                .collect::<Result<Vec<_>>>()?;
            Self::from_coeffs(e, coeffs)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BlockVectorJson {
    e: u32,
    coeffs: CoeffsJson,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffsJson {
    Dense(Vec<i64>),
    Sparse(BTreeMap<String, i64>),
}

impl From<BlockVector> for BlockVectorJson {
    fn from(v: BlockVector) -> Self {
        let coeffs = match v.repr {
            Repr::Cyclic(c) => CoeffsJson::Dense(c),
            Repr::Support(m) => {
                CoeffsJson::Sparse(m.into_iter().map(|(i, c)| (i.to_string(), c)).collect())
            }
        };
        BlockVectorJson { e: v.e.get(), coeffs }
    }
}

impl TryFrom<BlockVectorJson> for BlockVector {
    type Error = Error;

    fn try_from(j: BlockVectorJson) -> Result<Self> {
        let e = Modulus::new(j.e)?;
        match j.coeffs {
            CoeffsJson::Dense(c) if !e.is_infinite() => BlockVector::from_coeffs(e, c),
            CoeffsJson::Dense(c) if c.is_empty() => Ok(BlockVector::zero(e)),
            CoeffsJson::Sparse(m) if e.is_infinite() => {
                let pairs = m
                    .into_iter()
                    .map(|(i, c)| {
                        i.parse::<i64>()
                            .map(|i| (i, c))
                            .map_err(|_| Error::Parse(format!("bad index {i:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                BlockVector::from_pairs(e, pairs)
            }
            _ => Err(Error::Parse(
                "coeffs must be an array for e > 0 and an object for e = 0".into(),
            )),
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let e = s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad modulus {s:?}")))?;
        Modulus::new(e)
    }
}
