//! Degree complexes `Δ_γ(I)`, computed directly and through the decomposition
//! formulas for sums, intersections, products, powers, fiber products and
//! mixed products.
//!
//! A face `F ⊆ [n] \ G_γ` belongs to `Δ_γ(I)` when `x^γ ∉ I·S_{F ⊔ G_γ}`.
//! Block formulas use [`Blocks`] to split `γ = (α, β)`; the complexes `Δ_α(·)`
//! and `Δ_β(·)` are kept on their own block's vertex labels so they can be
//! joined directly.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::primes::{symbolic_power_ideal, symbolic_power_or_unit};
use crate::split::Blocks;
use crate::vertex::{canonical_cmp, VertexSet};

/// Ordinary or symbolic powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerMode {
    Ordinary,
    Symbolic,
}

impl PowerMode {
    /// `I^s` or `I^{(s)}`, with `s = 0` giving the unit ideal.
    pub fn power(self, ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
        match self {
            PowerMode::Ordinary => Ok(ideal.power_or_unit(s)),
            PowerMode::Symbolic => symbolic_power_or_unit(ideal, s),
        }
    }
}

/// A multidegree with its derived data: `G_γ`, the truncation `γ'` and `|γ|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDegree {
    pub gamma: ExponentVector,
    pub negative: VertexSet,
    pub truncated: ExponentVector,
    pub total: i64,
}

impl GradedDegree {
    pub fn new(gamma: ExponentVector) -> Self {
        GradedDegree {
            negative: gamma.negative_support(),
            truncated: gamma.truncated(),
            total: gamma.total(),
            gamma,
        }
    }
}

fn check_degree(ideal: &MonomialIdeal, gamma: &ExponentVector) -> Result<()> {
    if gamma.len() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: gamma.len() });
    }
    Ok(())
}

/// Faces of `Δ_γ(I)` contained in `vertices`, built from the generator
/// obstruction sets: `F` is a face iff no obstruction lies inside `F ⊔ G_γ`.
fn faces_within(ideal: &MonomialIdeal, gamma: &ExponentVector, vertices: VertexSet) -> SimplicialComplex {
    let neg = gamma.negative_support();
    let ground = vertices.difference(neg);
    let obstructions: Vec<VertexSet> = ideal.obstructions(gamma).into_iter().map(|o| o.difference(neg)).collect();
    if obstructions.iter().any(|o| o.is_empty()) {
        return SimplicialComplex::void(ideal.n());
    }
    SimplicialComplex::from_faces(
        ideal.n(),
        ground.subsets().filter(|f| !obstructions.iter().any(|o| o.is_subset(*f))),
    )
}

/// `Δ_γ(I)` by testing every `F ⊆ [n] \ G_γ`.
pub fn degree_complex(ideal: &MonomialIdeal, gamma: &ExponentVector) -> Result<SimplicialComplex> {
    check_degree(ideal, gamma)?;
    Ok(faces_within(ideal, gamma, VertexSet::full(ideal.n())))
}

/// `Δ_{γ_T}(I)` on the labels of `T`, for `supp(I) ⊆ T`.
pub fn degree_complex_on(ideal: &MonomialIdeal, gamma: &ExponentVector, t: VertexSet) -> Result<SimplicialComplex> {
    check_degree(ideal, gamma)?;
    if !ideal.support().is_subset(t) {
        return Err(Error::domain(format!("support {} is not inside {}", ideal.support(), t)));
    }
    Ok(faces_within(ideal, gamma, t))
}

/// `Δ_γ(I)` as `Δ_{γ_T}(I) ∗ Δ_{[n] \ T}`, the simplex taken on the vertices
/// outside `T` that are not in `G_γ`.
pub fn support_split(ideal: &MonomialIdeal, gamma: &ExponentVector, t: VertexSet) -> Result<SimplicialComplex> {
    let inner = degree_complex_on(ideal, gamma, t)?;
    let outside = VertexSet::full(ideal.n()).difference(t).difference(gamma.negative_support());
    inner.join(&SimplicialComplex::simplex(ideal.n(), outside))
}

/// `Δ_X`: the simplex on the first block minus `G_γ`.
fn simplex_x(blocks: Blocks, gamma: &ExponentVector) -> SimplicialComplex {
    SimplicialComplex::simplex(blocks.n(), blocks.x().difference(gamma.negative_support()))
}

/// `Δ_Y`: the simplex on the second block minus `G_γ`.
fn simplex_y(blocks: Blocks, gamma: &ExponentVector) -> SimplicialComplex {
    SimplicialComplex::simplex(blocks.n(), blocks.y().difference(gamma.negative_support()))
}

/// `Δ_α(I)` for an ideal of the first block.
pub fn alpha_complex(i: &MonomialIdeal, blocks: Blocks, gamma: &ExponentVector) -> Result<SimplicialComplex> {
    degree_complex_on(i, gamma, blocks.x())
}

/// `Δ_β(J)` for an ideal of the second block.
pub fn beta_complex(j: &MonomialIdeal, blocks: Blocks, gamma: &ExponentVector) -> Result<SimplicialComplex> {
    degree_complex_on(j, gamma, blocks.y())
}

/// `Δ_γ(I) ∩ Δ_γ(J)`, which equals `Δ_γ(I + J)`.
pub fn formula_sum(i: &MonomialIdeal, j: &MonomialIdeal, gamma: &ExponentVector) -> Result<SimplicialComplex> {
    degree_complex(i, gamma)?.intersect(&degree_complex(j, gamma)?)
}

/// `Δ_α(I) ∗ Δ_β(J)` for ideals on disjoint blocks.
pub fn formula_sum_blocks(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    blocks.check_pair(i, j)?;
    blocks.check_degree(gamma)?;
    alpha_complex(i, blocks, gamma)?.join(&beta_complex(j, blocks, gamma)?)
}

/// `Δ_γ(I) ∪ Δ_γ(J)`, which equals `Δ_γ(I ∩ J)`.
pub fn formula_intersection(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    degree_complex(i, gamma)?.union(&degree_complex(j, gamma)?)
}

/// `(Δ_α(I) ∗ Δ_Y) ∪ (Δ_X ∗ Δ_β(J))`, which equals `Δ_γ(IJ)`.
pub fn formula_product(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    blocks.check_pair(i, j)?;
    blocks.check_degree(gamma)?;
    let left = alpha_complex(i, blocks, gamma)?.join(&simplex_y(blocks, gamma))?;
    let right = simplex_x(blocks, gamma).join(&beta_complex(j, blocks, gamma)?)?;
    left.union(&right)
}

/// `⋃_{j=1..s} Δ_α(P_j(I)) ∗ Δ_β(P_{s-j+1}(J))` where `P_t` is the `t`-th
/// ordinary or symbolic power.
fn layered_union(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    if s < 1 {
        return Err(Error::domain("power exponent must be at least 1"));
    }
    blocks.check_pair(i, j)?;
    blocks.check_degree(gamma)?;
    let mut acc = SimplicialComplex::void(blocks.n());
    for layer in layers(i, j, blocks, s, mode, gamma)? {
        acc = acc.union(&layer)?;
    }
    Ok(acc)
}

/// The joins `Δ_α(P_t(I)) ∗ Δ_β(P_{s-t+1}(J))` for `t = 1..s`, in order.
pub fn layers(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<Vec<SimplicialComplex>> {
    let (alpha, beta) = side_power_complexes(i, j, blocks, s, mode, gamma)?;
    (1..=s as usize).map(|t| alpha[t].join(&beta[s as usize - t + 1])).collect()
}

/// `Δ_α(P_t(I))` and `Δ_β(P_t(J))` for `t = 0..=s`, indexed by `t`.
pub(crate) fn side_power_complexes(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<(Vec<SimplicialComplex>, Vec<SimplicialComplex>)> {
    let mut alpha = Vec::with_capacity(s as usize + 1);
    let mut beta = Vec::with_capacity(s as usize + 1);
    for t in 0..=s {
        alpha.push(alpha_complex(&mode.power(i, t)?, blocks, gamma)?);
        beta.push(beta_complex(&mode.power(j, t)?, blocks, gamma)?);
    }
    Ok((alpha, beta))
}

/// `Δ_γ((I + J)^s)` from the degree complexes of the powers of `I` and `J`.
pub fn formula_power_of_sum(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    layered_union(i, j, blocks, s, PowerMode::Ordinary, gamma)
}

/// `Δ_γ((I + J)^{(s)})` from the degree complexes of the symbolic powers of
/// squarefree `I` and `J`.
pub fn formula_symbolic_sum(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    layered_union(i, j, blocks, s, PowerMode::Symbolic, gamma)
}

/// `(I + J)^{(s)}` built from the minimal primes of `I + J` directly.
pub fn symbolic_power_of_sum(i: &MonomialIdeal, j: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    symbolic_power_ideal(&i.sum(j)?, s)
}

/// `(I + J + mn)^s` or its symbolic counterpart.
pub fn fiber_power(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
) -> Result<MonomialIdeal> {
    if s < 1 {
        return Err(Error::domain("power exponent must be at least 1"));
    }
    let k = blocks.fiber_product(i, j)?;
    match mode {
        PowerMode::Ordinary => k.power(s),
        PowerMode::Symbolic => symbolic_power_ideal(&k, s),
    }
}

/// Nonempty faces of a fiber-product power predicted block by block, plus the
/// membership of `∅` decided directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberFaces {
    pub n: usize,
    /// Nonempty faces contributed by the first block.
    pub from_first: Vec<VertexSet>,
    /// Nonempty faces contributed by the second block.
    pub from_second: Vec<VertexSet>,
    /// Whether `∅` is a face, from `x^γ ∉ K·S_{G_γ}` on the fiber power `K`.
    pub empty_face_present: bool,
}

impl FiberFaces {
    /// All predicted nonempty faces, in canonical order.
    pub fn nonempty_faces(&self) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = self.from_first.iter().chain(&self.from_second).copied().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| canonical_cmp(a, b)));
        v
    }

    /// Whether the two contributions share a face (they never should).
    pub fn overlapping(&self) -> bool {
        let a: BTreeSet<u32> = self.from_first.iter().map(|f| f.bits()).collect();
        self.from_second.iter().any(|f| a.contains(&f.bits()))
    }

    /// The complex assembled from the prediction and the `∅` flag.
    pub fn to_complex(&self) -> SimplicialComplex {
        let faces = self.nonempty_faces();
        if faces.is_empty() {
            if self.empty_face_present {
                SimplicialComplex::irrelevant(self.n)
            } else {
                SimplicialComplex::void(self.n)
            }
        } else {
            SimplicialComplex::from_faces(self.n, faces)
        }
    }
}

/// The side complex `Δ_α(P_{s-|β|}(I))` when it contributes, i.e. when
/// `G_β = ∅` and `|β| < s`.
pub fn fiber_side_first(
    i: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<Option<SimplicialComplex>> {
    let neg = gamma.negative_support();
    let b = blocks.beta_total(gamma);
    if !neg.is_disjoint(blocks.y()) || b >= s as i64 {
        return Ok(None);
    }
    Ok(Some(alpha_complex(&mode.power(i, s - b as u32)?, blocks, gamma)?))
}

/// The side complex `Δ_β(P_{s-|α|}(J))` when `G_α = ∅` and `|α| < s`.
pub fn fiber_side_second(
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<Option<SimplicialComplex>> {
    let neg = gamma.negative_support();
    let a = blocks.alpha_total(gamma);
    if !neg.is_disjoint(blocks.x()) || a >= s as i64 {
        return Ok(None);
    }
    Ok(Some(beta_complex(&mode.power(j, s - a as u32)?, blocks, gamma)?))
}

fn require_fiber_input(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks) -> Result<()> {
    blocks.check_pair(i, j)?;
    if !i.is_squarefree() || !j.is_squarefree() {
        return Err(Error::domain("fiber-product formulas need squarefree ideals"));
    }
    Ok(())
}

/// Nonempty faces of `Δ_γ((I + J + mn)^s)` (or the symbolic power) from the
/// side complexes, with the `∅` flag from a direct membership test.
pub fn formula_fiber_product(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    blocks: Blocks,
    s: u32,
    mode: PowerMode,
    gamma: &ExponentVector,
) -> Result<FiberFaces> {
    require_fiber_input(i, j, blocks)?;
    blocks.check_degree(gamma)?;
    if s < 1 {
        return Err(Error::domain("power exponent must be at least 1"));
    }
    let nonempty = |c: Option<SimplicialComplex>| c.map(|c| c.nonempty_faces()).unwrap_or_default();
    let from_first = nonempty(fiber_side_first(i, blocks, s, mode, gamma)?);
    let from_second = nonempty(fiber_side_second(j, blocks, s, mode, gamma)?);
    let k = fiber_power(i, j, blocks, s, mode)?;
    let empty_face_present = !k.localized_membership(gamma, VertexSet::EMPTY)?;
    Ok(FiberFaces { n: blocks.n(), from_first, from_second, empty_face_present })
}

/// `[Δ_X ∗ Δ_β(J2)] ∪ [Δ_α(I1) ∗ Δ_β(J1)] ∪ [Δ_α(I2) ∗ Δ_Y]`, which equals
/// `Δ_γ(I1 J2 + I2 J1)` for `I1 ⊆ I2` and `J1 ⊆ J2`.
pub fn formula_mixed_product(
    i1: &MonomialIdeal,
    i2: &MonomialIdeal,
    j1: &MonomialIdeal,
    j2: &MonomialIdeal,
    blocks: Blocks,
    gamma: &ExponentVector,
) -> Result<SimplicialComplex> {
    blocks.check_pair(i1, j1)?;
    blocks.check_pair(i2, j2)?;
    blocks.check_degree(gamma)?;
    if !i2.contains(i1) || !j2.contains(j1) {
        return Err(Error::domain("mixed product needs I1 ⊆ I2 and J1 ⊆ J2"));
    }
    let a = simplex_x(blocks, gamma).join(&beta_complex(j2, blocks, gamma)?)?;
    let b = alpha_complex(i1, blocks, gamma)?.join(&beta_complex(j1, blocks, gamma)?)?;
    let c = alpha_complex(i2, blocks, gamma)?.join(&simplex_y(blocks, gamma))?;
    a.union(&b)?.union(&c)
}

/// `I1 J2 + I2 J1`.
pub fn mixed_product(
    i1: &MonomialIdeal,
    i2: &MonomialIdeal,
    j1: &MonomialIdeal,
    j2: &MonomialIdeal,
) -> Result<MonomialIdeal> {
    i1.product(j2)?.sum(&i2.product(j1)?)
}
