//! Graded local cohomology of `S/I` through Takayama's formula, the block
//! formulas for sums, products and fiber products, window scans for
//! regularity and depth, and the closed regularity formula for symbolic powers
//! of fiber products.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{HomologyDims, SimplicialComplex};
use crate::degree::{
    alpha_complex, beta_complex, degree_complex, fiber_power, layers, side_power_complexes,
    PowerMode,
};
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::primes::symbolic_power_ideal;
use crate::split::Blocks;
use crate::vertex::VertexSet;

/// Default cap on the number of lattice points in a scan window.
pub const DEFAULT_MAX_LATTICE: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_MAX_LATTICE`].
pub const MAX_LATTICE_ENV: &str = "DEGCX_MAX_LATTICE";

/// Whether `G_γ` is a face of `Δ_0(I)`, i.e. no generator is supported inside
/// `G_γ`.
pub fn negative_gate(ideal: &MonomialIdeal, gamma: &ExponentVector) -> bool {
    let neg = gamma.negative_support();
    !ideal.generators().iter().any(|g| g.support().is_subset(neg))
}

/// `dim H̃_{p-|G|-1}` read off precomputed homology, where `g` is `|G_γ|`.
fn shifted_dim(h: &HomologyDims, g: usize, p: u32) -> u64 {
    h.get(p as i32 - g as i32 - 1)
}

/// `dim_k H^p_𝔪(S/I)_γ`.
pub fn takayama_dim(ideal: &MonomialIdeal, gamma: &ExponentVector, p: u32) -> Result<u64> {
    let c = degree_complex(ideal, gamma)?;
    if !negative_gate(ideal, gamma) {
        return Ok(0);
    }
    Ok(shifted_dim(&c.reduced_homology(), gamma.negative_support().len(), p))
}

/// `u ↦ dim H^u(R/I)_δ` for the ring `R` on `block`, with `δ` the restriction
/// of `γ` and `I` supported inside `block`.
pub fn side_cohomology(ideal: &MonomialIdeal, block: VertexSet, gamma: &ExponentVector) -> Result<Vec<u64>> {
    let c = crate::degree::degree_complex_on(ideal, gamma, block)?;
    Ok(side_from_complex(ideal, block, gamma, &c))
}

fn side_from_complex(ideal: &MonomialIdeal, block: VertexSet, gamma: &ExponentVector, c: &SimplicialComplex) -> Vec<u64> {
    let neg = gamma.negative_support().intersection(block);
    let width = block.len() + 1;
    if ideal.generators().iter().any(|g| g.support().is_subset(neg)) {
        return vec![0; width];
    }
    let h = c.reduced_homology();
    (0..width as u32).map(|u| shifted_dim(&h, neg.len(), u)).collect()
}

/// Index convention for the cohomology convolutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Indices matching Takayama's formula on the direct complex: for sums
    /// `u + v = p`, for products `u + v = p - 1`.
    Derived,
    /// Indices as printed: for sums `u + v = p + 1`, for products `u + v = p`.
    Printed,
}

fn convolve(a: &[u64], b: &[u64], target: i64) -> u64 {
    let mut total = 0;
    for (u, &x) in a.iter().enumerate() {
        let v = target - u as i64;
        if v >= 0 && (v as usize) < b.len() {
            total += x * b[v as usize];
        }
    }
    total
}

/// `dim H^p(S/(I+J))_γ` from the factors `H^u(A/I)_α` and `H^v(B/J)_β`.
pub fn cohomology_sum_dim(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
    p: u32,
) -> Result<u64> {
    cohomology_sum_dim_with(i, j, blocks, gamma, p, Convention::Derived)
}

pub fn cohomology_sum_dim_with(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
    p: u32,
    convention: Convention,
) -> Result<u64> {
    let (a, b) = block_factors(i, j, blocks, gamma)?;
    let target = match convention {
        Convention::Derived => p as i64,
        Convention::Printed => p as i64 + 1,
    };
    Ok(convolve(&a, &b, target))
}

/// `dim H^p(S/IJ)_γ`.
///
/// Away from the degrees where one block of `γ` is entirely negative this is
/// the convolution over `u + v = p - 1`. When `Y ⊆ G_γ` the simplex `Δ_Y` is
/// `{∅}` rather than a cone, `Δ_γ(IJ) = Δ_α(I)` for `J ≠ 0`, and the value is
/// `dim H^{p-|Y|}(A/I)_α`; symmetrically for `X ⊆ G_γ`. A zero factor leaves
/// `S/IJ = S`.
pub fn cohomology_product_dim(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
    p: u32,
) -> Result<u64> {
    blocks.check_pair(i, j)?;
    blocks.check_degree(gamma)?;
    let neg = gamma.negative_support();
    if i.is_zero() || j.is_zero() {
        return Ok((p as usize == blocks.n() && neg == VertexSet::full(blocks.n())) as u64);
    }
    let shifted = |side: Vec<u64>, drop: usize| (p as usize).checked_sub(drop).and_then(|u| side.get(u).copied()).unwrap_or(0);
    if blocks.y().is_subset(neg) {
        return Ok(shifted(side_cohomology(i, blocks.x(), gamma)?, blocks.y().len()));
    }
    if blocks.x().is_subset(neg) {
        return Ok(shifted(side_cohomology(j, blocks.y(), gamma)?, blocks.x().len()));
    }
    cohomology_product_dim_with(i, j, blocks, gamma, p, Convention::Derived)
}

/// Whether `γ` is one of the degrees where the product convolution needs the
/// correction in [`cohomology_product_dim`].
pub fn product_exceptional(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks, gamma: &ExponentVector) -> bool {
    let neg = gamma.negative_support();
    i.is_zero() || j.is_zero() || blocks.x().is_subset(neg) || blocks.y().is_subset(neg)
}

/// The bare convolution for products, without the correction.
pub fn cohomology_product_dim_with(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
    p: u32,
    convention: Convention,
) -> Result<u64> {
    let (a, b) = block_factors(i, j, blocks, gamma)?;
    let target = match convention {
        Convention::Derived => p as i64 - 1,
        Convention::Printed => p as i64,
    };
    Ok(convolve(&a, &b, target))
}

/// `(H^•(A/I)_α, H^•(B/J)_β)`.
pub fn block_factors(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
) -> Result<(Vec<u64>, Vec<u64>)> {
    blocks.check_pair(i, j)?;
    blocks.check_degree(gamma)?;
    let ca = alpha_complex(i, blocks, gamma)?;
    let cb = beta_complex(j, blocks, gamma)?;
    Ok((side_from_complex(i, blocks.x(), gamma, &ca), side_from_complex(j, blocks.y(), gamma, &cb)))
}

/// Which reading of the `+1` correction to use for symbolic powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberVariant {
    /// `+1` under the diamond condition for both ordinary and symbolic powers.
    WithCorrection,
    /// The symbolic case without the `+1`.
    Printed,
}

/// The side terms behind [`cohomology_fiber_dim`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberTerms {
    /// `H^•(A/P_{s-|β|}(I))_α` when the first side is active.
    pub first: Option<Vec<u64>>,
    /// `H^•(B/P_{s-|α|}(J))_β` when the second side is active.
    pub second: Option<Vec<u64>>,
    pub first_nonempty: bool,
    pub second_nonempty: bool,
}

impl FiberTerms {
    /// Both sides active with a nonempty face each.
    pub fn diamond(&self) -> bool {
        self.first_nonempty && self.second_nonempty
    }
}

/// Powers of `I`, `J` and the fiber product, computed once for repeated
/// cohomology queries.
#[derive(Clone, Debug)]
pub struct FiberSetup {
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    powers_i: Vec<MonomialIdeal>,
    powers_j: Vec<MonomialIdeal>,
    fiber: MonomialIdeal,
}

impl FiberSetup {
    pub fn new(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks, s: u32, mode: PowerMode) -> Result<Self> {
        blocks.check_pair(i, j)?;
        if !i.is_squarefree() || !j.is_squarefree() {
            return Err(Error::domain("fiber-product formulas need squarefree ideals"));
        }
        let fiber = fiber_power(i, j, blocks, s, mode)?;
        let powers_i = (0..=s).map(|t| mode.power(i, t)).collect::<Result<_>>()?;
        let powers_j = (0..=s).map(|t| mode.power(j, t)).collect::<Result<_>>()?;
        Ok(FiberSetup { blocks, s, mode, powers_i, powers_j, fiber })
    }

    /// `(I+J+𝔪𝔫)^s` or its symbolic power.
    pub fn fiber(&self) -> &MonomialIdeal {
        &self.fiber
    }

    pub fn terms(&self, gamma: &ExponentVector) -> Result<FiberTerms> {
        let b = self.blocks;
        b.check_degree(gamma)?;
        let neg = gamma.negative_support();
        let side = |powers: &[MonomialIdeal], block: VertexSet, other: VertexSet| -> Result<Option<(Vec<u64>, bool)>> {
            let other_total = gamma.total_on(other);
            if !neg.is_disjoint(other) || other_total >= self.s as i64 {
                return Ok(None);
            }
            let power = &powers[(self.s as i64 - other_total) as usize];
            let c = crate::degree::degree_complex_on(power, gamma, block)?;
            Ok(Some((side_from_complex(power, block, gamma, &c), c.has_nonempty_face())))
        };
        let first = side(&self.powers_i, b.x(), b.y())?;
        let second = side(&self.powers_j, b.y(), b.x())?;
        Ok(FiberTerms {
            first_nonempty: matches!(first, Some((_, true))),
            second_nonempty: matches!(second, Some((_, true))),
            first: first.map(|f| f.0),
            second: second.map(|f| f.0),
        })
    }

    /// `dim H^p(S/K)_γ` from the side terms; `p = 0` is decided by
    /// [`FiberSetup::h0`].
    pub fn dim(&self, gamma: &ExponentVector, p: u32, variant: FiberVariant) -> Result<u64> {
        let t = self.terms(gamma)?;
        if p == 0 {
            return self.h0_from(&t, gamma);
        }
        let at = |v: &Option<Vec<u64>>| v.as_ref().and_then(|v| v.get(p as usize).copied()).unwrap_or(0);
        let bonus = p == 1 && t.diamond() && (self.mode == PowerMode::Ordinary || variant == FiberVariant::WithCorrection);
        Ok(at(&t.first) + at(&t.second) + bonus as u64)
    }

    /// `dim H^0(S/K)_γ`: one exactly when `G_γ = ∅` and `Δ_γ(K)` is
    /// irrelevant, with the nonempty faces from the side complexes and `∅`
    /// from a direct membership test.
    pub fn h0(&self, gamma: &ExponentVector) -> Result<u64> {
        let t = self.terms(gamma)?;
        self.h0_from(&t, gamma)
    }

    fn h0_from(&self, t: &FiberTerms, gamma: &ExponentVector) -> Result<u64> {
        let empty_face = !self.fiber.localized_membership(gamma, VertexSet::EMPTY)?;
        let irrelevant = empty_face && !t.first_nonempty && !t.second_nonempty;
        Ok((gamma.negative_support().is_empty() && irrelevant) as u64)
    }
}

/// `dim H^p(S/K)_γ` for `K = (I+J+𝔪𝔫)^s` or its symbolic power.
pub fn cohomology_fiber_dim(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
    p: u32,
) -> Result<u64> {
    FiberSetup::new(i, j, blocks, s, mode)?.dim(gamma, p, FiberVariant::WithCorrection)
}

/// Per-coordinate window `{-1, .., ρ_i - 1}`.
pub fn scan_window(ideal: &MonomialIdeal) -> Vec<(i32, i32)> {
    ideal.max_exponents().into_iter().map(|r| (-1, r - 1)).collect()
}

pub fn window_size(window: &[(i32, i32)]) -> u128 {
    window.iter().map(|&(lo, hi)| (hi - lo + 1).max(0) as u128).product()
}

/// The lattice cap: [`MAX_LATTICE_ENV`] if set and valid, else the default.
pub fn lattice_limit() -> u128 {
    std::env::var(MAX_LATTICE_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_LATTICE)
}

/// All points of a window, last coordinate varying fastest.
pub fn window_points(window: &[(i32, i32)]) -> Vec<ExponentVector> {
    let mut out = vec![Vec::with_capacity(window.len())];
    for &(lo, hi) in window {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i32>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector::new).collect()
}

fn guarded_points(window: &[(i32, i32)], limit: u128) -> Result<Vec<ExponentVector>> {
    let size = window_size(window);
    if size > limit {
        return Err(Error::WindowTooLarge { size, limit });
    }
    Ok(window_points(window))
}

/// Nonzero `dim H^p(S/I)_γ` over the scan window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: usize,
    pub window: Vec<(i32, i32)>,
    pub entries: BTreeMap<(u32, ExponentVector), u64>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    dim: u64,
    gamma: &'a ExponentVector,
    p: u32,
}

impl CohomologyTable {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: u32, gamma: &ExponentVector) -> u64 {
        self.entries.get(&(p, gamma.clone())).copied().unwrap_or(0)
    }

    /// `[{"dim":1,"gamma":[0,0],"p":1}, ..]`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<EntryJson> = self.entries.iter().map(|((p, g), &d)| EntryJson { dim: d, gamma: g, p: *p }).collect();
        serde_json::to_value(rows).expect("table serializes")
    }

    /// The largest `p + |γ|` with the smallest witnessing `(p, γ)`.
    pub fn reg(&self) -> Option<Witness> {
        let mut best: Option<Witness> = None;
        for (p, g) in self.entries.keys() {
            let value = *p as i64 + g.total();
            if best.as_ref().is_none_or(|b| value > b.value) {
                best = Some(Witness { value, p: *p, gamma: g.clone() });
            }
        }
        best
    }

    /// The smallest `p` with the smallest witnessing `γ`.
    pub fn depth(&self) -> Option<Witness> {
        self.entries.keys().next().map(|(p, g)| Witness { value: *p as i64, p: *p, gamma: g.clone() })
    }
}

/// A regularity or depth value with the graded piece that realizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub value: i64,
    pub p: u32,
    pub gamma: ExponentVector,
}

/// Homology of each distinct complex, computed once.
fn homology_of_all(complexes: &[SimplicialComplex]) -> HashMap<&SimplicialComplex, HomologyDims> {
    let mut seen = HashSet::new();
    let distinct: Vec<&SimplicialComplex> = complexes.iter().filter(|c| seen.insert(*c)).collect();
    distinct.par_iter().map(|c| (*c, c.reduced_homology())).collect()
}

/// The cohomology table of `S/I` over its window, with the default guard.
pub fn scan_cohomology(ideal: &MonomialIdeal) -> Result<CohomologyTable> {
    scan_cohomology_limited(ideal, lattice_limit())
}

pub fn scan_cohomology_limited(ideal: &MonomialIdeal, limit: u128) -> Result<CohomologyTable> {
    let window = scan_window(ideal);
    let points = guarded_points(&window, limit)?;
    let complexes: Vec<Option<SimplicialComplex>> = points
        .par_iter()
        .map(|g| if negative_gate(ideal, g) { Some(degree_complex(ideal, g).expect("window matches n")) } else { None })
        .collect();
    let present: Vec<SimplicialComplex> = complexes.iter().flatten().cloned().collect();
    let homology = homology_of_all(&present);
    let mut entries = BTreeMap::new();
    for (g, c) in points.iter().zip(&complexes) {
        let Some(c) = c else { continue };
        let h = &homology[c];
        let neg = g.negative_support().len() as i32;
        for (k, d) in h.nonzero() {
            let p = k + neg + 1;
            if p >= 0 {
                entries.insert((p as u32, g.clone()), d);
            }
        }
    }
    Ok(CohomologyTable { n: ideal.n(), window, entries })
}

/// `reg(S/I)`, or `None` when `S/I = 0`.
pub fn reg_of_quotient(ideal: &MonomialIdeal) -> Result<Option<Witness>> {
    Ok(scan_cohomology(ideal)?.reg())
}

/// `depth(S/I)`, or `None` when `S/I = 0`.
pub fn depth_of_quotient(ideal: &MonomialIdeal) -> Result<Option<Witness>> {
    Ok(scan_cohomology(ideal)?.depth())
}

/// `max_{1≤t≤s} {reg(A/I^{(t)}) + s - t, reg(B/J^{(t)}) + s - t, 2s - 1}`.
pub fn reg_symbolic_fiber_formula(reg_i: &BTreeMap<u32, i64>, reg_j: &BTreeMap<u32, i64>, s: u32) -> Result<i64> {
    reg_symbolic_fiber_formula_with(reg_i, reg_j, s, true)
}

/// The same maximum, with the `2s - 1` term only when `diamond` holds. That
/// term comes from `H^1` in a degree where both side complexes have a
/// nonempty face, which needs some `x_i ∉ I` and some `x_j ∉ J`.
pub fn reg_symbolic_fiber_formula_with(
    reg_i: &BTreeMap<u32, i64>,
    reg_j: &BTreeMap<u32, i64>,
    s: u32,
    diamond: bool,
) -> Result<i64> {
    if s < 1 {
        return Err(Error::domain("power exponent must be at least 1"));
    }
    let mut best = if diamond { 2 * s as i64 - 1 } else { i64::MIN };
    for t in 1..=s {
        for (name, map) in [("first", reg_i), ("second", reg_j)] {
            let r = map.get(&t).ok_or_else(|| Error::domain(format!("missing regularity of the {name} side at t = {t}")))?;
            best = best.max(r + (s - t) as i64);
        }
    }
    Ok(best)
}

/// Whether a squarefree ideal on `block` misses some variable of the block,
/// i.e. is not the block's maximal ideal.
pub fn misses_a_variable(ideal: &MonomialIdeal, block: VertexSet) -> bool {
    block.iter().any(|v| !ideal.contains_monomial(&ExponentVector::indicator(ideal.n(), VertexSet::singleton(v))))
}

/// `t ↦ reg(R/I^{(t)})` for `t = 1..=s`, computed on the block ring of `block`.
pub fn symbolic_regularities(ideal: &MonomialIdeal, block: VertexSet, s: u32) -> Result<BTreeMap<u32, i64>> {
    let local = ideal.project(block)?;
    let mut out = BTreeMap::new();
    for t in 1..=s {
        let w = reg_of_quotient(&symbolic_power_ideal(&local, t)?)?
            .ok_or_else(|| Error::domain("symbolic power is the unit ideal"))?;
        out.insert(t, w.value);
    }
    Ok(out)
}

/// The closed-form regularity of `S/(I+J+𝔪𝔫)^{(s)}`, with the `2s - 1` term
/// dropped when `I` or `J` is the maximal ideal of its block.
pub fn reg_symbolic_fiber(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks, s: u32) -> Result<i64> {
    reg_symbolic_fiber_terms(i, j, blocks, s).map(|t| t.corrected)
}

/// Both readings of the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityTerms {
    pub reg_first: BTreeMap<u32, i64>,
    pub reg_second: BTreeMap<u32, i64>,
    pub diamond: bool,
    /// The maximum as printed, always including `2s - 1`.
    pub printed: i64,
    pub corrected: i64,
}

pub fn reg_symbolic_fiber_terms(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks, s: u32) -> Result<RegularityTerms> {
    blocks.check_pair(i, j)?;
    let reg_first = symbolic_regularities(i, blocks.x(), s)?;
    let reg_second = symbolic_regularities(j, blocks.y(), s)?;
    let diamond = misses_a_variable(i, blocks.x()) && misses_a_variable(j, blocks.y());
    Ok(RegularityTerms {
        printed: reg_symbolic_fiber_formula(&reg_first, &reg_second, s)?,
        corrected: reg_symbolic_fiber_formula_with(&reg_first, &reg_second, s, diamond)?,
        reg_first,
        reg_second,
        diamond,
    })
}

/// The scanned regularity of `S/(I+J+𝔪𝔫)^{(s)}`.
pub fn reg_symbolic_fiber_scanned(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks, s: u32) -> Result<Option<i64>> {
    Ok(reg_of_quotient(&fiber_power(i, j, blocks, s, PowerMode::Symbolic)?)?.map(|w| w.value))
}

/// One layer of the Euler-characteristic check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerLayer {
    pub i: u32,
    /// `χ̃(Δ_i)`.
    pub lhs: i64,
    /// `χ̃(L_i) + χ̃(Δ_{i+1}) - χ̃(Δ_α(I^i) ∗ Δ_β(J^{s-i}))`.
    pub rhs: i64,
}

/// For `i = 1..s-1`, with `L_j = Δ_α(I^j) ∗ Δ_β(J^{s-j+1})` and
/// `Δ_i = ⋃_{j≥i} L_j`, the two sides of
/// `χ̃(Δ_i) = χ̃(L_i) + χ̃(Δ_{i+1}) - χ̃(Δ_α(I^i) ∗ Δ_β(J^{s-i}))`.
pub fn mayer_vietoris_euler_layers(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    gamma: &ExponentVector,
) -> Result<Vec<EulerLayer>> {
    let ls = layers(i, j, blocks, s, PowerMode::Ordinary, gamma)?;
    let (alpha, beta) = side_power_complexes(i, j, blocks, s, PowerMode::Ordinary, gamma)?;
    let s = s as usize;
    // tails[k] = Δ_{k+1}
    let mut tails = vec![SimplicialComplex::void(blocks.n()); s + 1];
    for k in (0..s).rev() {
        tails[k] = ls[k].union(&tails[k + 1])?;
    }
    let mut out = Vec::new();
    for idx in 1..s {
        let meet = alpha[idx].join(&beta[s - idx])?;
        out.push(EulerLayer {
            i: idx as u32,
            lhs: tails[idx - 1].euler_characteristic(),
            rhs: ls[idx - 1].euler_characteristic() + tails[idx].euler_characteristic() - meet.euler_characteristic(),
        });
    }
    Ok(out)
}

pub fn mayer_vietoris_euler_check(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    gamma: &ExponentVector,
) -> Result<bool> {
    Ok(mayer_vietoris_euler_layers(i, j, blocks, s, gamma)?.iter().all(|l| l.lhs == l.rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[i32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    fn ev(v: &[i32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn takayama_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(takayama_dim(&i, &ev(&[0, 0]), 1).unwrap(), 1);
        assert_eq!(takayama_dim(&i, &ev(&[-1, 0]), 1).unwrap(), 1);
        assert_eq!(takayama_dim(&i, &ev(&[-1, -1]), 1).unwrap(), 0);
        assert_eq!(takayama_dim(&i, &ev(&[0, 0]), 0).unwrap(), 0);
    }

    #[test]
    fn scan_edge_product() {
        let t = scan_cohomology(&ideal(2, &[&[1, 1]])).unwrap();
        let expected: BTreeMap<(u32, ExponentVector), u64> =
            [((1, ev(&[-1, 0])), 1), ((1, ev(&[0, -1])), 1), ((1, ev(&[0, 0])), 1)].into_iter().collect();
        assert_eq!(t.entries, expected);
        assert_eq!(t.reg().unwrap().value, 1);
        assert_eq!(t.depth().unwrap().value, 1);
        assert_eq!(
            t.to_json().to_string(),
            r#"[{"dim":1,"gamma":[-1,0],"p":1},{"dim":1,"gamma":[0,-1],"p":1},{"dim":1,"gamma":[0,0],"p":1}]"#
        );
    }

    #[test]
    fn scan_special_ideals() {
        assert!(scan_cohomology(&MonomialIdeal::unit(3)).unwrap().is_empty());
        let maximal = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(reg_of_quotient(&maximal).unwrap().unwrap().value, 0);
        assert_eq!(depth_of_quotient(&maximal).unwrap().unwrap().value, 0);
        let zero = MonomialIdeal::zero(3);
        assert_eq!(reg_of_quotient(&zero).unwrap().unwrap().value, 0);
        assert_eq!(depth_of_quotient(&zero).unwrap().unwrap().value, 3);
    }

    #[test]
    fn guard_refuses_large_windows() {
        let i = ideal(3, &[&[9, 9, 9]]);
        assert!(matches!(scan_cohomology_limited(&i, 100), Err(Error::WindowTooLarge { size: 1000, limit: 100 })));
    }

    #[test]
    fn symbolic_edge_regularity() {
        let i = ideal(2, &[&[1, 1]]);
        for s in 1..=3 {
            let sym = symbolic_power_ideal(&i, s).unwrap();
            assert_eq!(reg_of_quotient(&sym).unwrap().unwrap().value, 2 * s as i64 - 1);
        }
    }

    #[test]
    fn sum_and_product_indices() {
        let blocks = Blocks::new(4, 2).unwrap();
        let i = ideal(4, &[&[1, 1, 0, 0]]);
        let j = ideal(4, &[&[0, 0, 1, 1]]);
        let g = ev(&[0, 0, 0, 0]);
        let sum = i.sum(&j).unwrap();
        let prod = i.product(&j).unwrap();
        for p in 0..5 {
            assert_eq!(cohomology_sum_dim(&i, &j, blocks, &g, p).unwrap(), takayama_dim(&sum, &g, p).unwrap());
            assert_eq!(cohomology_product_dim(&i, &j, blocks, &g, p).unwrap(), takayama_dim(&prod, &g, p).unwrap());
        }
        assert_eq!(takayama_dim(&sum, &g, 2).unwrap(), 1);
        assert_eq!(takayama_dim(&prod, &g, 3).unwrap(), 1);
        assert_eq!(cohomology_sum_dim_with(&i, &j, blocks, &g, 1, Convention::Printed).unwrap(), 1);
        let unit = MonomialIdeal::unit(4);
        assert_eq!(cohomology_sum_dim(&unit, &j, blocks, &g, 2).unwrap(), 0);
    }

    #[test]
    fn product_with_negative_block() {
        let blocks = Blocks::new(2, 1).unwrap();
        let i = ideal(2, &[&[1, 0]]);
        let j = ideal(2, &[&[0, 1]]);
        let g = ev(&[0, -1]);
        assert_eq!(takayama_dim(&i.product(&j).unwrap(), &g, 1).unwrap(), 1);
        assert_eq!(cohomology_product_dim(&i, &j, blocks, &g, 1).unwrap(), 1);
        assert_eq!(cohomology_product_dim_with(&i, &j, blocks, &g, 1, Convention::Derived).unwrap(), 0);
        assert!(product_exceptional(&i, &j, blocks, &g));
    }

    #[test]
    fn fiber_desk_example() {
        let blocks = Blocks::new(4, 2).unwrap();
        let i = ideal(4, &[&[1, 1, 0, 0]]);
        let j = ideal(4, &[&[0, 0, 1, 1]]);
        let g = ev(&[1, 0, 1, 0]);
        for mode in [PowerMode::Ordinary, PowerMode::Symbolic] {
            let k = fiber_power(&i, &j, blocks, 2, mode).unwrap();
            for p in 0..5 {
                assert_eq!(
                    cohomology_fiber_dim(&i, &j, blocks, 2, mode, &g, p).unwrap(),
                    takayama_dim(&k, &g, p).unwrap(),
                    "mode {mode:?} p {p}"
                );
            }
        }
    }

    #[test]
    fn closed_form_desk_values() {
        let blocks = Blocks::new(4, 2).unwrap();
        let i = ideal(4, &[&[1, 1, 0, 0]]);
        let j = ideal(4, &[&[0, 0, 1, 1]]);
        for s in 1..=3 {
            assert_eq!(reg_symbolic_fiber(&i, &j, blocks, s).unwrap(), 2 * s as i64 - 1);
            assert_eq!(reg_symbolic_fiber_scanned(&i, &j, blocks, s).unwrap(), Some(2 * s as i64 - 1));
        }
        let empty = BTreeMap::new();
        assert!(reg_symbolic_fiber_formula(&empty, &empty, 1).is_err());
        // both ideals maximal: S/(x1, x2)^{(2)} = S/(x1, x2)^2 has regularity 1
        let b2 = Blocks::new(2, 1).unwrap();
        let (x, y) = (ideal(2, &[&[1, 0]]), ideal(2, &[&[0, 1]]));
        let t = reg_symbolic_fiber_terms(&x, &y, b2, 2).unwrap();
        assert_eq!((t.printed, t.corrected), (3, 1));
        assert_eq!(reg_symbolic_fiber_scanned(&x, &y, b2, 2).unwrap(), Some(1));
    }

    #[test]
    fn euler_layers_trivial_for_first_power() {
        let blocks = Blocks::new(4, 2).unwrap();
        let i = ideal(4, &[&[1, 1, 0, 0]]);
        let j = ideal(4, &[&[0, 0, 1, 1]]);
        assert!(mayer_vietoris_euler_layers(&i, &j, blocks, 1, &ev(&[0; 4])).unwrap().is_empty());
        assert!(mayer_vietoris_euler_check(&i, &j, blocks, 3, &ev(&[1, 0, 0, 1])).unwrap());
    }
}
