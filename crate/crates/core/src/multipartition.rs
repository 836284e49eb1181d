//! Multipartitions and multicores: the S-weight and its evaluators, the
//! γ statistics, reduced multicores.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abacus::{core_from_x, e_core, is_e_core, x_vector, y_vector};
use crate::blocks::Multicharge;
use crate::bounds::SubsetTuple;
use crate::error::{Error, Result};
use crate::lattice::{BlockVector, Modulus};
use crate::partition::{residue_counts, Partition};

/// An ordered `r`-tuple of partitions, `r ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("a multipartition needs r ≥ 1 components".into()));
        }
        Ok(Multipartition(components))
    }

    pub fn empty(r: usize) -> Self {
        Multipartition(vec![Partition::empty(); r.max(1)])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().map(Partition::size).sum()
    }
}

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        Multipartition::new(v)
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(m: Multipartition) -> Self {
        m.0
    }
}

impl fmt::Display for Multipartition {
    /// Components joined by `|`, e.g. `"4,3,3,1|-|2,1"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Multipartition::new(parts)
    }
}

fn check_arity(l: &Multipartition, s: &Multicharge) -> Result<()> {
    if l.level() != s.level() {
        return Err(Error::Arity { expected: s.level(), found: l.level() });
    }
    Ok(())
}

/// `α^S(Λ) = Σ_j α^{s_j}(λ^{(j)})`.
pub fn multi_block(l: &Multipartition, s: &Multicharge, e: Modulus) -> Result<BlockVector> {
    check_arity(l, s)?;
    let mut acc = BlockVector::zero(e);
    for (lam, &sj) in l.0.iter().zip(s.charges()) {
        acc = acc.checked_add(&residue_counts(lam, sj, e))?;
    }
    Ok(acc)
}

/// The three ways of computing `w^S(Λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMethod {
    /// `w^S(α^S(Λ))` straight from the definition.
    Definition,
    /// Sum over pairs `j < k`; requires a multicore.
    Pairwise,
    /// `min(A, B)` from the γ table; requires a bicore with `γ_{il,12} ≤ 2`.
    MinTwoSets,
}

pub fn is_multicore(l: &Multipartition, e: Modulus) -> bool {
    l.0.iter().all(|p| is_e_core(p, e))
}

pub fn multicore_of(l: &Multipartition, e: Modulus) -> Result<Multipartition> {
    if e.is_infinite() {
        return Ok(l.clone());
    }
    Multipartition::new(l.0.iter().map(|p| e_core(p, e)).collect::<Result<Vec<_>>>()?)
}

fn require_multicore(l: &Multipartition, e: Modulus) -> Result<()> {
    match l.0.iter().find(|p| !is_e_core(p, e)) {
        Some(p) => Err(Error::NotACore { partition: p.to_string(), e: e.get() }),
        None => Ok(()),
    }
}

/// `u_{j,k}(Λ)` (0-based `j`, `k`): minus the partial sum
/// `y_{s_j,j} + … + y_{s_j+i−1,j}` with `i ∈ {1..e}`, `i ≡ s_k − s_j`.
pub fn u_jk(l: &Multipartition, s: &Multicharge, e: Modulus, j: usize, k: usize) -> Result<i64> {
    check_arity(l, s)?;
    let n = e.require_finite("u_{j,k} needs e ≥ 1")? as i64;
    require_multicore(l, e)?;
    let (sj, sk) = (s.charges()[j], s.charges()[k]);
    if sj == sk {
        return Ok(0);
    }
    let i = match (sk - sj).rem_euclid(n) {
        0 => n,
        r => r,
    };
    let y = y_vector(&l.0[j], sj, e)?;
    Ok(-(0..i).map(|t| y.get(sj + t)).sum::<i64>())
}

/// `w^{(s_j,s_k)}(λ^{(j)}, λ^{(k)}) = ½‖y_j − y_k‖² + u_{j,k} + u_{k,j}` for
/// multicores with `e ≥ 1`.
fn pair_weight_closed(l: &Multipartition, s: &Multicharge, e: Modulus, j: usize, k: usize) -> Result<i64> {
    let yj = y_vector(&l.0[j], s.charges()[j], e)?;
    let yk = y_vector(&l.0[k], s.charges()[k], e)?;
    let n = e.get() as i64;
    let d: i64 = (0..n).map(|i| (yj.get(i) - yk.get(i)).pow(2)).sum();
    Ok(d / 2 + u_jk(l, s, e, j, k)? + u_jk(l, s, e, k, j)?)
}

/// The per-component x-vectors of a multicore and the differences
/// `γ_{i,jk} = x_{ij} − x_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTable {
    e: u32,
    /// `x[j][i]`: first gap on runner `i` of component `j`.
    x: Vec<Vec<i64>>,
}

impl GammaTable {
    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self, i: usize, j: usize) -> i64 {
        self.x[j][i]
    }

    /// `γ_{i,jk}`, 0-based `j`, `k`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> i64 {
        self.x[j][i] - self.x[k][i]
    }

    /// `γ_{il,jk} = γ_{i,jk} − γ_{l,jk}`.
    pub fn gamma_pair(&self, i: usize, l: usize, j: usize, k: usize) -> i64 {
        self.gamma(i, j, k) - self.gamma(l, j, k)
    }

    pub fn max_gamma(&self, j: usize, k: usize) -> i64 {
        (0..self.e as usize).map(|i| self.gamma(i, j, k)).max().unwrap()
    }
}

pub fn gamma_table(l: &Multipartition, s: &Multicharge, e: Modulus) -> Result<GammaTable> {
    check_arity(l, s)?;
    e.require_finite("γ needs e ≥ 1")?;
    require_multicore(l, e)?;
    let x = l
        .0
        .iter()
        .zip(s.charges())
        .map(|(p, &sj)| x_vector(p, sj, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaTable { e: e.get(), x })
}

/// `min(A, B)` with `A = #{i : ∃l, γ_{il,12} = 2}`, `B = #{l : ∃i, γ_{il,12} = 2}`.
fn min_two_sets(g: &GammaTable) -> Result<i64> {
    if g.level() != 2 {
        return Err(Error::Hypothesis(format!("min-of-two-sets needs r = 2, got r = {}", g.level())));
    }
    let n = g.e as usize;
    for i in 0..n {
        for l in 0..n {
            if g.gamma_pair(i, l, 0, 1) > 2 {
                return Err(Error::Hypothesis(format!(
                    "min-of-two-sets needs γ_{{il,12}} ≤ 2, but γ_{{{i}{l},12}} = {}",
                    g.gamma_pair(i, l, 0, 1)
                )));
            }
        }
    }
    let a = (0..n).filter(|&i| (0..n).any(|l| g.gamma_pair(i, l, 0, 1) == 2)).count();
    let b = (0..n).filter(|&l| (0..n).any(|i| g.gamma_pair(i, l, 0, 1) == 2)).count();
    Ok(a.min(b) as i64)
}

/// `w^S(Λ)` by the chosen evaluator.
pub fn multi_weight(l: &Multipartition, s: &Multicharge, e: Modulus, method: WeightMethod) -> Result<i64> {
    check_arity(l, s)?;
    match method {
        WeightMethod::Definition => Ok(multi_block(l, s, e)?.weight(s.charges())),
        WeightMethod::Pairwise => {
            require_multicore(l, e)?;
            let r = l.level();
            let mut total = 0;
            for j in 0..r {
                for k in j + 1..r {
                    total += if e.is_infinite() {
                        let pair = Multipartition(vec![l.0[j].clone(), l.0[k].clone()]);
                        let ps = Multicharge::new(vec![s.charges()[j], s.charges()[k]])?;
                        multi_block(&pair, &ps, e)?.weight(ps.charges())
                    } else {
                        pair_weight_closed(l, s, e, j, k)?
                    };
                }
            }
            Ok(total)
        }
        WeightMethod::MinTwoSets => min_two_sets(&gamma_table(l, s, e)?),
    }
}

/// Integers `t` with `max_i γ_{i,jk} + t_j − t_k ≤ 1` for all `j, k`, if any.
/// Shifting `s_j ↦ s_j + e·t_j` then gives `γ ≤ 1` everywhere.
pub fn reducing_shift(l: &Multipartition, s: &Multicharge, e: Modulus) -> Result<Option<Vec<i64>>> {
    let g = gamma_table(l, s, e)?;
    let r = g.level();
    // t_j − t_k ≤ 1 − M_{jk}: edge k → j with that weight
    let mut edges = Vec::new();
    for j in 0..r {
        for k in 0..r {
            if j != k {
                edges.push((k, j, 1 - g.max_gamma(j, k)));
            }
        }
    }
    Ok(difference_constraints(r, &edges))
}

/// Bellman–Ford from a virtual source joined to every node by a 0-edge.
/// Returns a feasible potential or `None` on a negative cycle.
fn difference_constraints(n: usize, edges: &[(usize, usize, i64)]) -> Option<Vec<i64>> {
    let mut dist = vec![0i64; n];
    for _ in 0..n {
        let mut changed = false;
        for &(u, v, w) in edges {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                changed = true;
            }
        }
        if !changed {
            return Some(dist);
        }
    }
    let relaxes = edges.iter().any(|&(u, v, w)| dist[u] + w < dist[v]);
    (!relaxes).then_some(dist)
}

/// Whether the multicore `Λ` is `S`-reduced, i.e. `α^S(Λ)` is a core block.
pub fn is_reduced_multicore(l: &Multipartition, s: &Multicharge, e: Modulus) -> Result<bool> {
    Ok(reducing_shift(l, s, e)?.is_some())
}

/// The reduced multicore of an `e × r` binary matrix: residue `ρ` of
/// component `j` has largest bead `b[ρ] + ε_{ρj}·e`, where `ε_{ρj} = 1` iff
/// `ρ + 1 ∈ E_j`. `b` is indexed by residue with `b[ρ] ≡ ρ (mod e)`.
pub fn build_reduced_multicore(m: &SubsetTuple, b: &[i64]) -> Result<(Multicharge, Multipartition)> {
    let n = m.e() as usize;
    if b.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} integers b, got {}", b.len())));
    }
    for (rho, &v) in b.iter().enumerate() {
        if v.rem_euclid(n as i64) != rho as i64 {
            return Err(Error::Hypothesis(format!("b[{rho}] = {v} is not ≡ {rho} (mod {n})")));
        }
    }
    let mut charges = Vec::new();
    let mut comps = Vec::new();
    for &set in m.sets() {
        let x: Vec<i64> = (0..n)
            .map(|rho| {
                let eps = ((set >> rho) & 1) as i64;
                (b[rho] + eps * n as i64 - rho as i64) / n as i64 + 1
            })
            .collect();
        let (core, charge) = core_from_x(&x)?;
        charges.push(charge);
        comps.push(core);
    }
    Ok((Multicharge::new(charges)?, Multipartition::new(comps)?))
}

/// The default offsets `b[ρ] = ρ − e`, giving the empty multipartition for
/// the zero matrix.
pub fn default_offsets(e: u32) -> Vec<i64> {
    (0..e as i64).map(|rho| rho - e as i64).collect()
}

/// Weight of the reduced multicore built from `M` (independent of `b`).
pub fn matrix_weight(m: &SubsetTuple) -> Result<i64> {
    let (s, l) = build_reduced_multicore(m, &default_offsets(m.e()))?;
    let e = Modulus::new(m.e())?;
    multi_weight(&l, &s, e, WeightMethod::Definition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{box_window, is_core_block, Limits};
    use crate::bounds::tuple_weight;
    use crate::partition::{add_rim_hook_results, partitions_up_to};

    fn m(e: u32) -> Modulus {
        Modulus::new(e).unwrap()
    }
    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }
    fn mc(s: &[i64]) -> Multicharge {
        Multicharge::new(s.to_vec()).unwrap()
    }

    /// All bicores of total size ≤ n.
    fn bicores(e: Modulus, n: i64) -> Vec<Multipartition> {
        let cores: Vec<Partition> =
            partitions_up_to(n as usize).into_iter().filter(|p| is_e_core(p, e)).collect();
        let mut out = Vec::new();
        for a in &cores {
            for b in &cores {
                if a.size() + b.size() <= n {
                    out.push(Multipartition(vec![a.clone(), b.clone()]));
                }
            }
        }
        out
    }

    #[test]
    fn literal_round_trip() {
        let l = mp("4,3,3,1|-|2,1");
        assert_eq!(l.to_string(), "4,3,3,1|-|2,1");
        assert_eq!(l.level(), 3);
        assert_eq!(l.size(), 14);
        assert!("4,3|x".parse::<Multipartition>().is_err());
        let js = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<Multipartition>(&js).unwrap(), l);
    }

    #[test]
    fn block_examples() {
        let ab = BlockVector::from_coeffs(m(2), vec![1, 1]).unwrap();
        assert_eq!(multi_block(&mp("1|1"), &mc(&[0, 1]), m(2)).unwrap(), ab);
        assert_eq!(multi_block(&mp("2|-"), &mc(&[0, 1]), m(2)).unwrap(), ab);
        assert!(multi_block(&mp("-|-|-"), &mc(&[0, 1, 5]), m(3)).unwrap().is_zero());
        assert!(matches!(multi_block(&mp("1|1"), &mc(&[0]), m(2)), Err(Error::Arity { .. })));
    }

    #[test]
    fn multicore_examples() {
        assert!(is_multicore(&mp("1|1"), m(2)));
        assert!(!is_multicore(&mp("2|-"), m(2)));
        let l = mp("4,3,3,1|2,2|5");
        let c = multicore_of(&l, m(3)).unwrap();
        assert_eq!(multicore_of(&c, m(3)).unwrap(), c);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(multi_weight(&mp("-|-"), &mc(&[0, 3]), m(3), WeightMethod::Definition).unwrap(), 0);
        // e = 0, S = (0,0), Λ = ((3,3,3), ∅): weight h = 3
        let l = mp("3,3,3|-");
        assert_eq!(multi_weight(&l, &mc(&[0, 0]), m(0), WeightMethod::Definition).unwrap(), 3);
        assert_eq!(multi_weight(&l, &mc(&[0, 0]), m(0), WeightMethod::Pairwise).unwrap(), 3);
        assert!(matches!(
            multi_weight(&mp("2|-"), &mc(&[0, 1]), m(2), WeightMethod::Pairwise),
            Err(Error::NotACore { .. })
        ));
    }

    #[test]
    fn evaluators_agree_on_multicores() {
        for e in 1..=4u32 {
            for l in bicores(m(e), 10) {
                for s in [[0, 0], [0, 1], [2, -1], [0, 5]] {
                    let s = mc(&s);
                    let a = multi_weight(&l, &s, m(e), WeightMethod::Definition).unwrap();
                    assert!(a >= 0);
                    assert_eq!(multi_weight(&l, &s, m(e), WeightMethod::Pairwise).unwrap(), a);
                    match multi_weight(&l, &s, m(e), WeightMethod::MinTwoSets) {
                        Ok(b) => assert_eq!(a, b, "{l} {s} e={e}"),
                        Err(Error::Hypothesis(_)) => {}
                        Err(other) => panic!("{other}"),
                    }
                }
            }
        }
        // three components
        let cores: Vec<Partition> =
            partitions_up_to(6).into_iter().filter(|p| is_e_core(p, m(3))).collect();
        for a in &cores {
            for b in &cores {
                for c in &cores {
                    let l = Multipartition(vec![a.clone(), b.clone(), c.clone()]);
                    let s = mc(&[0, 1, 1]);
                    assert_eq!(
                        multi_weight(&l, &s, m(3), WeightMethod::Definition).unwrap(),
                        multi_weight(&l, &s, m(3), WeightMethod::Pairwise).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn adding_an_e_hook_adds_r() {
        for e in 2..=3u32 {
            for l in partitions_up_to(6) {
                for mu in partitions_up_to(4) {
                    let lam = Multipartition(vec![l.clone(), mu.clone()]);
                    let s = mc(&[0, 1]);
                    let w = multi_weight(&lam, &s, m(e), WeightMethod::Definition).unwrap();
                    for big in add_rim_hook_results(&l, e as i64).unwrap() {
                        let grown = Multipartition(vec![big, mu.clone()]);
                        assert_eq!(multi_weight(&grown, &s, m(e), WeightMethod::Definition).unwrap(), w + 2);
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_inequality() {
        // ‖z‖² ≥ 2(z_1 + … + z_s) whenever Σ z = 0
        for z in box_window(m(4), -3, 3).unwrap() {
            let z = z.as_slice().unwrap();
            if z.iter().sum::<i64>() != 0 {
                continue;
            }
            let norm: i64 = z.iter().map(|v| v * v).sum();
            for k in 0..=4 {
                assert!(norm >= 2 * z[..k].iter().sum::<i64>());
            }
        }
    }

    #[test]
    fn u_identity() {
        for e in 1..=5u32 {
            for l in bicores(m(e), 8) {
                for s in [[0, 1], [3, -2], [1, 1], [0, 5]] {
                    let s = mc(&s);
                    for j in 0..2 {
                        for k in 0..2 {
                            let y = y_vector(&l.0[j], s.charges()[j], m(e)).unwrap();
                            let lhs = residue_counts(&l.0[j], s.charges()[j], m(e)).coeff(s.charges()[k]);
                            assert_eq!(lhs, y.norm_sq() / 2 + u_jk(&l, &s, m(e), j, k).unwrap());
                        }
                    }
                }
            }
        }
        let z = mp("-|-");
        assert_eq!(u_jk(&z, &mc(&[2, 2]), m(3), 0, 1).unwrap(), 0);
    }

    #[test]
    fn gamma_table_properties() {
        let g = gamma_table(&mp("-|-|-"), &mc(&[1, 1, 1]), m(3)).unwrap();
        for i in 0..3 {
            assert_eq!(g.gamma(i, 0, 2), 0);
        }
        for e in 2..=4u32 {
            for l in bicores(m(e), 8) {
                let s = mc(&[0, 1]);
                let g = gamma_table(&l, &s, m(e)).unwrap();
                // shift s_1 by e: the first component's abacus moves one position
                let shifted = Multipartition(l.0.clone());
                let g2 = gamma_table(&shifted, &mc(&[e as i64, 1]), m(e)).unwrap();
                for i in 0..e as usize {
                    assert_eq!(g.gamma(i, 0, 1), -g.gamma(i, 1, 0));
                    for k in 0..e as usize {
                        assert_eq!(g.gamma_pair(i, k, 0, 1), g2.gamma_pair(i, k, 0, 1));
                    }
                    assert_eq!(g2.gamma(i, 0, 1), g.gamma(i, 0, 1) + 1);
                }
            }
        }
        assert!(gamma_table(&mp("2|-"), &mc(&[0, 1]), m(2)).is_err());
    }

    #[test]
    fn reduced_examples() {
        // ((1),(1)) at S = (0,1), e = 2: γ = (1,−2) forces t_1 ≤ t_2 ≤ t_1 − 1
        assert!(!is_reduced_multicore(&mp("1|1"), &mc(&[0, 1]), m(2)).unwrap());
        assert!(is_reduced_multicore(&mp("-|-"), &mc(&[0, 0]), m(2)).unwrap());
        assert!(is_reduced_multicore(&mp("1|-"), &mc(&[0, 0]), m(2)).is_ok());
        assert!(matches!(is_reduced_multicore(&mp("2|-"), &mc(&[0, 1]), m(2)), Err(Error::NotACore { .. })));
    }

    #[test]
    fn reduced_agrees_with_core_block() {
        let lim = Limits::default();
        for e in 2..=3u32 {
            for l in bicores(m(e), 8) {
                for s in [[0, 0], [0, 1], [1, 0], [0, 2], [-1, 3]] {
                    let s = mc(&s);
                    let a = multi_block(&l, &s, m(e)).unwrap();
                    assert_eq!(
                        is_reduced_multicore(&l, &s, m(e)).unwrap(),
                        is_core_block(&a, &s, &lim).unwrap(),
                        "{l} {s} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_makes_gamma_at_most_one() {
        for e in 2..=3u32 {
            for l in bicores(m(e), 8) {
                let s = mc(&[0, 1]);
                if let Some(t) = reducing_shift(&l, &s, m(e)).unwrap() {
                    let shifted: Vec<i64> =
                        s.charges().iter().zip(&t).map(|(sj, tj)| sj + e as i64 * tj).collect();
                    let g = gamma_table(&l, &mc(&shifted), m(e)).unwrap();
                    assert!((0..e as usize).all(|i| g.gamma(i, 0, 1) <= 1 && g.gamma(i, 1, 0) <= 1));
                }
            }
        }
    }

    #[test]
    fn single_nonempty_component_is_reduced_pairwise() {
        // (λ, ∅, …, ∅) at equal charges: reduced iff each pair (λ, ∅) is
        for e in 2..=3u32 {
            for lam in partitions_up_to(10).into_iter().filter(|p| is_e_core(p, m(e))) {
                let full = Multipartition(vec![lam.clone(), Partition::empty(), Partition::empty()]);
                let pair = Multipartition(vec![lam.clone(), Partition::empty()]);
                assert_eq!(
                    is_reduced_multicore(&full, &mc(&[0, 0, 0]), m(e)).unwrap(),
                    is_reduced_multicore(&pair, &mc(&[0, 0]), m(e)).unwrap()
                );
            }
        }
    }

    #[test]
    fn matrix_construction() {
        let zero = SubsetTuple::new(4, vec![0, 0, 0]).unwrap();
        let (s, l) = build_reduced_multicore(&zero, &default_offsets(4)).unwrap();
        assert!(l.components().iter().all(|p| *p == l.components()[0]));
        assert_eq!(multi_weight(&l, &s, m(4), WeightMethod::Definition).unwrap(), 0);
        let pentagon = SubsetTuple::from_sets(5, &[&[1, 2], &[1, 3], &[3, 5], &[4, 5], &[2, 4]]).unwrap();
        assert_eq!(matrix_weight(&pentagon).unwrap(), 15);
        let four = SubsetTuple::from_sets(5, &[&[1, 3], &[2, 4], &[1, 5], &[2, 5]]).unwrap();
        assert_eq!(matrix_weight(&four).unwrap(), 9);
        assert!(build_reduced_multicore(&four, &[0, 1, 2, 3, 5]).is_err());
    }

    #[test]
    fn construction_is_reduced_and_offset_free() {
        for e in 2..=4u32 {
            let n = 1u64 << e;
            for a in 0..n {
                for b in 0..n {
                    for c in [0, n - 1, a ^ b] {
                        let t = SubsetTuple::new(e, vec![a, b, c]).unwrap();
                        let (s, l) = build_reduced_multicore(&t, &default_offsets(e)).unwrap();
                        assert!(is_reduced_multicore(&l, &s, m(e)).unwrap());
                        let g = gamma_table(&l, &s, m(e)).unwrap();
                        for i in 0..e as usize {
                            let eps = |j: usize| ((t.sets()[j] >> i) & 1) as i64;
                            assert_eq!(g.gamma(i, 0, 1), eps(0) - eps(1));
                        }
                        let w = matrix_weight(&t).unwrap();
                        assert_eq!(w, tuple_weight(&t));
                        let other: Vec<i64> = (0..e as i64).map(|r| r + 3 * e as i64 * (r % 2)).collect();
                        let (s2, l2) = build_reduced_multicore(&t, &other).unwrap();
                        assert_eq!(multi_weight(&l2, &s2, m(e), WeightMethod::Definition).unwrap(), w);
                    }
                }
            }
        }
    }
}
