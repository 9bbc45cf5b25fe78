//! Simplicial complexes stored as facet antichains, with joins, unions,
//! intersections and exact reduced homology over a field of characteristic
//! zero.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rank::rank;
use crate::vertex::{canonical_cmp, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// No faces at all.
    Void,
    /// The empty face only.
    Irrelevant,
    /// At least one nonempty face.
    Proper,
}

/// A simplicial complex on the vertex set `{0, .., n-1}`.
///
/// Void and irrelevant are distinct kinds and never inferred from an empty facet
/// list alone. Proper complexes hold a nonempty inclusion antichain of nonempty
/// facets in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    kind: Kind,
    facets: Vec<VertexSet>,
}

fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(canonical_cmp);
    kept
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, kind: Kind::Void, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, kind: Kind::Irrelevant, facets: Vec::new() }
    }

    /// The full simplex on `t`; the simplex on the empty set is irrelevant.
    pub fn simplex(n: usize, t: VertexSet) -> Self {
        if t.is_empty() {
            Self::irrelevant(n)
        } else {
            SimplicialComplex { n, kind: Kind::Proper, facets: vec![t] }
        }
    }

    /// The complex generated by `faces`: an empty list gives the void complex,
    /// a list holding only `∅` gives the irrelevant complex.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Self {
        let mut any = false;
        let nonempty: Vec<VertexSet> = faces
            .into_iter()
            .inspect(|_| any = true)
            .filter(|f| !f.is_empty())
            .collect();
        if nonempty.is_empty() {
            return if any { Self::irrelevant(n) } else { Self::void(n) };
        }
        SimplicialComplex { n, kind: Kind::Proper, facets: maximal(nonempty) }
    }

    /// Builds a complex from an explicit kind and facet list, validating both.
    pub fn from_parts(n: usize, kind: Kind, facets: Vec<VertexSet>) -> Result<Self> {
        crate::ideal::check_vars(n)?;
        if facets.iter().any(|f| !f.is_subset(VertexSet::full(n))) {
            return Err(Error::domain(format!("facet outside [{n}]")));
        }
        match kind {
            Kind::Void | Kind::Irrelevant if !facets.iter().all(|f| f.is_empty()) => {
                Err(Error::domain("void and irrelevant complexes have no nonempty facets"))
            }
            Kind::Void => Ok(Self::void(n)),
            Kind::Irrelevant => Ok(Self::irrelevant(n)),
            Kind::Proper => {
                let c = Self::from_faces(n, facets);
                if c.kind != Kind::Proper {
                    return Err(Error::domain("a proper complex needs a nonempty facet"));
                }
                Ok(c)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_void(&self) -> bool {
        self.kind == Kind::Void
    }

    pub fn is_irrelevant(&self) -> bool {
        self.kind == Kind::Irrelevant
    }

    /// Whether the complex has a nonempty face.
    pub fn has_nonempty_face(&self) -> bool {
        self.kind == Kind::Proper
    }

    /// Nonempty facets; empty for void and irrelevant complexes.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Union of all faces.
    pub fn vertex_support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    /// Dimension of the largest face; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        match self.kind {
            Kind::Void => None,
            Kind::Irrelevant => Some(-1),
            Kind::Proper => Some(self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)),
        }
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        match self.kind {
            Kind::Void => false,
            Kind::Irrelevant => face.is_empty(),
            Kind::Proper => self.facets.iter().any(|f| face.is_subset(*f)),
        }
    }

    /// Every face, `∅` included when the complex is not void, in (size, canonical) order.
    pub fn faces(&self) -> Vec<VertexSet> {
        if self.is_void() {
            return Vec::new();
        }
        let mut set = BTreeSet::new();
        set.insert(0u32);
        for f in &self.facets {
            for s in f.subsets() {
                set.insert(s.bits());
            }
        }
        let mut out: Vec<VertexSet> = set.into_iter().map(VertexSet).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| canonical_cmp(a, b)));
        out
    }

    /// Nonempty faces only.
    pub fn nonempty_faces(&self) -> Vec<VertexSet> {
        self.faces().into_iter().filter(|f| !f.is_empty()).collect()
    }

    fn same_ring(&self, other: &SimplicialComplex) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch { expected: self.n, found: other.n })
        } else {
            Ok(())
        }
    }

    /// Simplicial join `{σ ∪ τ}`. The two complexes must have disjoint vertex supports.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        self.same_ring(other)?;
        if !self.vertex_support().is_disjoint(other.vertex_support()) {
            return Err(Error::domain(format!(
                "join of complexes with overlapping supports {} and {}",
                self.vertex_support(),
                other.vertex_support()
            )));
        }
        Ok(match (self.kind, other.kind) {
            (Kind::Void, _) | (_, Kind::Void) => Self::void(self.n),
            (Kind::Irrelevant, _) => other.clone(),
            (_, Kind::Irrelevant) => self.clone(),
            _ => {
                let facets = self
                    .facets
                    .iter()
                    .flat_map(|a| other.facets.iter().map(move |b| a.union(*b)))
                    .collect();
                SimplicialComplex { n: self.n, kind: Kind::Proper, facets: maximal(facets) }
            }
        })
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<Self> {
        self.same_ring(other)?;
        Ok(match (self.kind, other.kind) {
            (Kind::Void, _) => other.clone(),
            (_, Kind::Void) => self.clone(),
            (Kind::Irrelevant, _) => other.clone(),
            (_, Kind::Irrelevant) => self.clone(),
            _ => {
                let facets = self.facets.iter().chain(&other.facets).copied().collect();
                SimplicialComplex { n: self.n, kind: Kind::Proper, facets: maximal(facets) }
            }
        })
    }

    pub fn intersect(&self, other: &SimplicialComplex) -> Result<Self> {
        self.same_ring(other)?;
        Ok(match (self.kind, other.kind) {
            (Kind::Void, _) | (_, Kind::Void) => Self::void(self.n),
            (Kind::Irrelevant, _) | (_, Kind::Irrelevant) => Self::irrelevant(self.n),
            _ => {
                let faces = self
                    .facets
                    .iter()
                    .flat_map(|a| other.facets.iter().map(move |b| a.intersection(*b)))
                    .chain(std::iter::once(VertexSet::EMPTY));
                Self::from_faces(self.n, faces)
            }
        })
    }

    /// Reduced Euler characteristic `Σ_F (-1)^{|F|-1}` over all faces, `∅` included.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces().iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    /// Dimensions of reduced homology over a characteristic-zero field.
    pub fn reduced_homology(&self) -> HomologyDims {
        if self.is_void() {
            return HomologyDims::zero();
        }
        // faces grouped by size: by_size[k] holds faces of dimension k-1
        let faces = self.faces();
        let top = faces.last().map(|f| f.len()).unwrap_or(0);
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        // rank of the boundary C_k -> C_{k-1} where C_k has faces of size k
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|k| {
                if k == 0 || k > top {
                    0
                } else {
                    boundary_rank(&by_size[k - 1], &by_size[k])
                }
            })
            .collect();
        let dims = (0..=top)
            .map(|k| (by_size[k].len() - ranks[k] - ranks[k + 1]) as u64)
            .collect();
        HomologyDims::from_shifted(dims)
    }
}

fn boundary_rank(lower: &[VertexSet], upper: &[VertexSet]) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<u32, usize> = lower.iter().enumerate().map(|(i, f)| (f.bits(), i)).collect();
    // one row per upper face: sparse rows are shorter than columns here
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|f| {
            let mut row = vec![0i64; lower.len()];
            for (pos, v) in f.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let mut g = *f;
                g.0 &= !(1 << v);
                row[index[&g.bits()]] = sign;
            }
            row
        })
        .collect();
    rank(&rows)
}

/// Reduced Betti numbers `p ↦ dim H̃_p` for `p >= -1`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyDims {
    /// `shifted[k]` is the dimension in degree `k - 1`.
    shifted: Vec<u64>,
}

/// Index convention for the join Künneth convolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinIndex {
    /// `H̃_p(Δ ∗ Γ) = ⊕_{u+v=p-1} H̃_u(Δ) ⊗ H̃_v(Γ)`.
    Classical,
    /// The same sum taken over `u + v = p`.
    Unshifted,
}

impl HomologyDims {
    pub fn zero() -> Self {
        HomologyDims { shifted: Vec::new() }
    }

    fn from_shifted(mut shifted: Vec<u64>) -> Self {
        while shifted.last() == Some(&0) {
            shifted.pop();
        }
        HomologyDims { shifted }
    }

    /// From `(p, dim)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (i32, u64)>>(pairs: I) -> Self {
        let mut shifted = Vec::new();
        for (p, d) in pairs {
            assert!(p >= -1, "reduced homology starts in degree -1");
            let k = (p + 1) as usize;
            if shifted.len() <= k {
                shifted.resize(k + 1, 0);
            }
            shifted[k] += d;
        }
        Self::from_shifted(shifted)
    }

    pub fn get(&self, p: i32) -> u64 {
        if p < -1 {
            return 0;
        }
        self.shifted.get((p + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.shifted.is_empty()
    }

    /// Largest degree with nonzero homology.
    pub fn top(&self) -> Option<i32> {
        if self.shifted.is_empty() {
            None
        } else {
            Some(self.shifted.len() as i32 - 2)
        }
    }

    /// `(p, dim)` for every nonzero degree.
    pub fn nonzero(&self) -> Vec<(i32, u64)> {
        self.shifted
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| (k as i32 - 1, d))
            .collect()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.nonzero().iter().map(|&(p, d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// Homology of a join predicted from the homology of the factors.
pub fn kunneth_join_dims(a: &HomologyDims, b: &HomologyDims) -> HomologyDims {
    kunneth_join_dims_with(a, b, JoinIndex::Classical)
}

pub fn kunneth_join_dims_with(a: &HomologyDims, b: &HomologyDims, index: JoinIndex) -> HomologyDims {
    let offset = match index {
        JoinIndex::Classical => 1,
        JoinIndex::Unshifted => 0,
    };
    HomologyDims::from_pairs(a.nonzero().into_iter().flat_map(|(u, du)| {
        b.nonzero().into_iter().filter_map(move |(v, dv)| {
            let p = u + v + offset;
            (p >= -1).then_some((p, du * dv))
        })
    }))
}
