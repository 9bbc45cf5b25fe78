//! Minimal primes of squarefree monomial ideals and their symbolic powers.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::split::Blocks;
use crate::vertex::{canonical_cmp, VertexSet};

/// Minimal primes of a squarefree monomial ideal, each stored as the vertex set
/// of the variables generating it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeList(Vec<VertexSet>);

impl PrimeList {
    fn canonical(mut sets: Vec<VertexSet>) -> Self {
        sets.sort_by(canonical_cmp);
        sets.dedup();
        PrimeList(sets)
    }

    pub fn primes(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|p| p.labels()).collect()
    }
}

fn require_symbolic_input(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_squarefree() {
        return Err(Error::domain("symbolic operations need a squarefree ideal"));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("symbolic operations need a proper nonzero ideal"));
    }
    Ok(())
}

/// The inclusion-minimal vertex sets meeting the support of every generator.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeList> {
    require_symbolic_input(ideal)?;
    let edges: Vec<VertexSet> = ideal.generators().iter().map(|g| g.support()).collect();
    let support = ideal.support();
    let vars: Vec<usize> = support.iter().collect();
    let k = vars.len();
    let mut found: Vec<VertexSet> = Vec::new();
    // Enumerate subsets of the support by size so the first hit on any chain is
    // minimal; supersets of earlier hits are skipped.
    for size in 1..=k {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let cand = VertexSet::from_indices(comb.iter().map(|&c| vars[c]));
            if !found.iter().any(|f| f.is_subset(cand)) && edges.iter().all(|e| !e.is_disjoint(cand)) {
                found.push(cand);
            }
            // next combination
            let mut i = size;
            while i > 0 && comb[i - 1] == k - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    Ok(PrimeList::canonical(found))
}

/// Whether `x^γ` lies in `I^{(s)}`, decided prime by prime.
pub fn symbolic_membership(ideal: &MonomialIdeal, s: u32, gamma: &ExponentVector) -> Result<bool> {
    if s < 1 {
        return Err(Error::domain("symbolic power exponent must be at least 1"));
    }
    if gamma.len() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: gamma.len() });
    }
    if !gamma.is_nonnegative() {
        return Err(Error::domain("symbolic membership takes a nonnegative exponent vector"));
    }
    let primes = minimal_primes(ideal)?;
    Ok(primes.primes().iter().all(|p| gamma.total_on(*p) >= s as i64))
}

/// `I^{(s)}` as the intersection of the powers `P^s` of the minimal primes.
pub fn symbolic_power_ideal(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    if s < 1 {
        return Err(Error::domain("symbolic power exponent must be at least 1"));
    }
    let primes = minimal_primes(ideal)?;
    let n = ideal.n();
    let mut acc = MonomialIdeal::unit(n);
    for p in primes.primes() {
        acc = acc.intersection(&MonomialIdeal::prime_power(n, *p, s))?;
    }
    Ok(acc)
}

/// Symbolic power with `I^{(0)} = (1)`.
pub fn symbolic_power_or_unit(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        Ok(MonomialIdeal::unit(ideal.n()))
    } else {
        symbolic_power_ideal(ideal, s)
    }
}

/// The union `{Q ∪ Y : Q ∈ Ass(I)} ∪ {X ∪ R : R ∈ Ass(J)}` as written,
/// before discarding non-minimal members.
pub fn fiber_prime_union(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks) -> Result<PrimeList> {
    blocks.check_pair(i, j)?;
    let mut out: Vec<VertexSet> = minimal_primes(i)?.0.into_iter().map(|q| q.union(blocks.y())).collect();
    out.extend(minimal_primes(j)?.0.into_iter().map(|r| blocks.x().union(r)));
    Ok(PrimeList::canonical(out))
}

/// Minimal primes of `I + J + mn` read off from those of `I` and `J`: the
/// minimal members of [`fiber_prime_union`]. The union is already minimal
/// unless `X` is a minimal prime of `I` or `Y` one of `J`, in which case
/// `X ∪ Y` appears and contains every other member.
pub fn fiber_product_primes(i: &MonomialIdeal, j: &MonomialIdeal, blocks: Blocks) -> Result<PrimeList> {
    let all = fiber_prime_union(i, j, blocks)?.0;
    let kept = all.iter().copied().filter(|p| !all.iter().any(|q| q != p && q.is_subset(*p))).collect();
    Ok(PrimeList::canonical(kept))
}
