use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::vertex::VertexSet;

/// The variable split `S = A ⊗ B` with `A = k[x_1..x_m]` and `B = k[x_{m+1}..x_n]`.
///
/// Ideals of `A` and `B` live in `S` with zero exponents on the other block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Blocks {
    n: usize,
    m: usize,
}

impl Blocks {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        crate::ideal::check_vars(n)?;
        if m == 0 || m >= n {
            return Err(Error::domain(format!("block split {m} must satisfy 0 < m < n = {n}")));
        }
        Ok(Blocks { n, m })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn x(self) -> VertexSet {
        VertexSet::range(0, self.m)
    }

    pub fn y(self) -> VertexSet {
        VertexSet::range(self.m, self.n)
    }

    /// `|α|`, the degree sum over the first block.
    pub fn alpha_total(self, gamma: &ExponentVector) -> i64 {
        gamma.total_on(self.x())
    }

    /// `|β|`, the degree sum over the second block.
    pub fn beta_total(self, gamma: &ExponentVector) -> i64 {
        gamma.total_on(self.y())
    }

    pub fn check_degree(self, gamma: &ExponentVector) -> Result<()> {
        if gamma.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: gamma.len() });
        }
        Ok(())
    }

    /// Checks that `i` lives in `A` and `j` lives in `B`.
    pub fn check_pair(self, i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
        for ideal in [i, j] {
            if ideal.n() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: ideal.n() });
            }
        }
        if !i.support().is_subset(self.x()) {
            return Err(Error::domain(format!("first ideal has support {} outside {}", i.support(), self.x())));
        }
        if !j.support().is_subset(self.y()) {
            return Err(Error::domain(format!("second ideal has support {} outside {}", j.support(), self.y())));
        }
        Ok(())
    }

    /// The product `mn` of the two block maximal ideals.
    pub fn cross_ideal(self) -> MonomialIdeal {
        let gens = self
            .x()
            .iter()
            .flat_map(|a| self.y().iter().map(move |b| (a, b)))
            .map(|(a, b)| ExponentVector::indicator(self.n, VertexSet::from_indices([a, b])))
            .collect();
        MonomialIdeal::minimalize(self.n, gens).expect("valid generators")
    }

    /// The fiber product `I + J + mn`.
    pub fn fiber_product(self, i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_pair(i, j)?;
        i.sum(j)?.sum(&self.cross_ideal())
    }
}
