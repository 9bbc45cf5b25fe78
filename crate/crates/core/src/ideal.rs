//! Monomials, monomial ideals and the localized-membership test.
//!
//! Indices are 0-based internally. Everything that leaves the crate as text
//! (see [`crate::format`]) is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::VertexSet;
use crate::MAX_VARS;

/// A point of `Z^n`. Serves both as the exponent vector of a monomial and as a
/// multidegree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn new(entries: Vec<i32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `x_i^e` in `n` variables (0-based `i`).
    pub fn unit_power(n: usize, i: usize, e: i32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExponentVector(v)
    }

    /// The squarefree monomial on `set`.
    pub fn indicator(n: usize, set: VertexSet) -> Self {
        ExponentVector((0..n).map(|i| set.contains(i) as i32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// `G_γ`: indices carrying a negative entry.
    pub fn negative_support(&self) -> VertexSet {
        VertexSet::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e < 0).map(|(i, _)| i))
    }

    /// Indices carrying a positive entry.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    /// Negative entries replaced by zero.
    pub fn truncated(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| e.max(0)).collect())
    }

    /// Coordinate sum `|γ|`.
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Coordinate sum over the indices of `set`.
    pub fn total_on(&self, set: VertexSet) -> i64 {
        set.iter().map(|i| self.0[i] as i64).sum()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Monomial product, i.e. coordinatewise sum.
    pub fn mul(&self, other: &ExponentVector) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Entries on `block`, in index order.
    pub fn project(&self, block: VertexSet) -> Self {
        ExponentVector(block.iter().map(|i| self.0[i]).collect())
    }

    /// Inverse of [`project`](Self::project): places the entries on `block`
    /// inside `n` coordinates, zero elsewhere.
    pub fn embed(&self, n: usize, block: VertexSet) -> Self {
        let mut v = vec![0; n];
        for (k, i) in block.iter().enumerate() {
            v[i] = self.0[k];
        }
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(v)
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The generator list is a divisibility antichain sorted lexicographically, so
/// derived equality is equality of ideals. The zero ideal has no generators and
/// the unit ideal has the single generator `(0, .., 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::TooManyVariables(n))
    } else {
        Ok(())
    }
}

/// Keeps the divisibility-minimal elements, sorted and deduplicated.
fn minimal_elements(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| g.total());
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        check_vars(n)?;
        for g in &gens {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
            if !g.is_nonnegative() {
                return Err(Error::domain(format!("generator {g:?} has a negative exponent")));
            }
        }
        Ok(MonomialIdeal { n, gens: minimal_elements(gens) })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents(n: usize, rows: &[&[i32]]) -> Result<Self> {
        Self::minimalize(n, rows.iter().map(|r| ExponentVector::new(r.to_vec())).collect())
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![ExponentVector::zeros(n)] }
    }

    /// The prime `(x_i : i in set)`.
    pub fn prime(n: usize, set: VertexSet) -> Self {
        MonomialIdeal { n, gens: minimal_elements(set.iter().map(|i| ExponentVector::unit_power(n, i, 1)).collect()) }
    }

    /// `(x_i : i in set)^s`: all degree-`s` monomials in the variables of `set`.
    pub fn prime_power(n: usize, set: VertexSet, s: u32) -> Self {
        let vars: Vec<usize> = set.iter().collect();
        let mut out = Vec::new();
        let mut cur = vec![0i32; n];
        fn rec(vars: &[usize], left: u32, cur: &mut Vec<i32>, out: &mut Vec<ExponentVector>) {
            match vars.split_first() {
                None => {
                    if left == 0 {
                        out.push(ExponentVector::new(cur.clone()));
                    }
                }
                Some((&v, rest)) => {
                    for e in (0..=left).rev() {
                        cur[v] = e as i32;
                        if rest.is_empty() && e != left {
                            continue;
                        }
                        rec(rest, left - e, cur, out);
                    }
                    cur[v] = 0;
                }
            }
        }
        if s == 0 {
            return Self::unit(n);
        }
        rec(&vars, s, &mut cur, &mut out);
        MonomialIdeal { n, gens: minimal_elements(out) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].entries().iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.entries().iter().all(|&e| e <= 1))
    }

    /// `supp(I)`: variables appearing in some minimal generator.
    pub fn support(&self) -> VertexSet {
        self.gens.iter().fold(VertexSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// `ρ_i`: the largest exponent of `x_i` over the minimal generators.
    pub fn max_exponents(&self) -> Vec<i32> {
        (0..self.n).map(|i| self.gens.iter().map(|g| g.get(i)).max().unwrap_or(0)).collect()
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch { expected: self.n, found: other.n })
        } else {
            Ok(())
        }
    }

    /// Membership of a monomial `x^γ` with `γ >= 0`.
    pub fn contains_monomial(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_elements(gens) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)))
            .collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_elements(gens) })
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)))
            .collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_elements(gens) })
    }

    /// `I^s` for `s >= 1`.
    pub fn power(&self, s: u32) -> Result<Self> {
        if s < 1 {
            return Err(Error::domain("power exponent must be at least 1"));
        }
        Ok(self.power_or_unit(s))
    }

    /// `I^s` with the convention `I^0 = (1)`.
    pub fn power_or_unit(&self, s: u32) -> Self {
        let mut acc = Self::unit(self.n);
        for _ in 0..s {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn radical(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| ExponentVector::new(g.entries().iter().map(|&e| e.min(1)).collect()))
            .collect();
        MonomialIdeal { n: self.n, gens: minimal_elements(gens) }
    }

    /// The ideal of `k[x_i : i in block]` generated by the projections, valid
    /// when `supp(I) ⊆ block`.
    pub fn project(&self, block: VertexSet) -> Result<Self> {
        if !self.support().is_subset(block) {
            return Err(Error::domain(format!("support {} not inside block {}", self.support(), block)));
        }
        let gens = self.gens.iter().map(|g| g.project(block)).collect();
        Self::minimalize(block.len(), gens)
    }

    /// Extends an ideal on `block.len()` variables to `n` variables.
    pub fn embed(&self, n: usize, block: VertexSet) -> Result<Self> {
        if block.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: block.len() });
        }
        let gens = self.gens.iter().map(|g| g.embed(n, block)).collect();
        Self::minimalize(n, gens)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0; self.n];
                for (i, &p) in perm.iter().enumerate() {
                    v[p] = g.get(i);
                }
                ExponentVector::new(v)
            })
            .collect();
        MonomialIdeal { n: self.n, gens: minimal_elements(gens) }
    }

    /// For each minimal generator `m`, the set `{i : m_i > γ'_i}` of coordinates
    /// where `m` fails to divide the truncation `γ'`. A generator witnesses
    /// `x^γ ∈ I S_W` exactly when its set lies inside `W`. Only the
    /// inclusion-minimal sets are returned.
    pub fn obstructions(&self, gamma: &ExponentVector) -> Vec<VertexSet> {
        let mut masks: Vec<VertexSet> = self
            .gens
            .iter()
            .map(|g| {
                VertexSet::from_indices(
                    (0..self.n).filter(|&i| g.get(i) > gamma.get(i).max(0)),
                )
            })
            .collect();
        masks.sort_by_key(|m| m.len());
        let mut kept: Vec<VertexSet> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|k| k.is_subset(m)) {
                kept.push(m);
            }
        }
        kept
    }

    /// Whether `x^γ ∈ I·S_{F ⊔ G_γ}`, where `S_W` inverts the variables of `W`.
    ///
    /// `F` must avoid `G_γ`. No localization is formed: `γ` is truncated to
    /// `γ'` and the test asks for a generator dividing `γ'` off `F ⊔ G_γ`.
    pub fn localized_membership(&self, gamma: &ExponentVector, face: VertexSet) -> Result<bool> {
        if gamma.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: gamma.len() });
        }
        let neg = gamma.negative_support();
        if !face.is_disjoint(neg) {
            return Err(Error::domain(format!("face {face} meets the negative support {neg}")));
        }
        if !face.is_subset(VertexSet::full(self.n)) {
            return Err(Error::domain(format!("face {face} is not inside [{}]", self.n)));
        }
        let local = face.union(neg);
        Ok(self.gens.iter().any(|g| {
            (0..self.n).all(|i| local.contains(i) || g.get(i) <= gamma.get(i))
        }))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::ideal_to_text(self))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::ideal_to_text(self))
    }
}
