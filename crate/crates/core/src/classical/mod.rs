//! Explicit construction of the irreducible modules inside tensor products of
//! exterior powers of the natural representation, the filtration attached to
//! a pluggable degree function, and the monomial-basis / monomial-ideal
//! verification machinery.
//!
//! The root vector `f_{i,j}` acts on the standard basis by `w_i -> w_{j+1}`
//! (all other basis vectors to zero), extended to wedges as a derivation and
//! to tensor factors by the coproduct.

mod analysis;
mod echelon;

pub use analysis::{
    analyze, cartan_component_check, filtration_dimension, fundamental_basis_formula,
    ideal_generators, verify_basis, verify_monomial_ideal, weight_multiplicities, GradedReport,
    ModuleBudget,
};
pub use echelon::{Echelon, SparseRow};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::Rational;
use crate::polytope::ExponentVector;
use crate::quiver::DirectedOrder;
use crate::roots::{PositiveRoot, Rank, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("module dimension {dim} exceeds the budget {limit}")]
    BudgetExceeded { dim: u64, limit: u64 },
    #[error("invalid wedge index: {0}")]
    InvalidIndex(String),
}

/// Basis vector `w_{i_1} ^ ... ^ w_{i_k}` of the k-th exterior power,
/// indices strictly increasing in `1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex(Vec<u8>);

impl WedgeIndex {
    pub fn new(indices: Vec<u8>, n: Rank) -> Result<Self, ModuleError> {
        let ok = !indices.is_empty()
            && indices.windows(2).all(|w| w[0] < w[1])
            && indices.iter().all(|&a| a >= 1 && (a as usize) <= n.get() + 1);
        if !ok {
            return Err(ModuleError::InvalidIndex(format!("{indices:?}")));
        }
        Ok(WedgeIndex(indices))
    }

    /// The highest-weight wedge `w_1 ^ ... ^ w_k`.
    pub fn top(k: usize) -> Self {
        WedgeIndex((1..=k as u8).collect())
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| format!("w{a}")).collect();
        f.write_str(&parts.join("^"))
    }
}

/// Basis vector of a tensor product of wedge powers, one factor per entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorIndex(pub Vec<WedgeIndex>);

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" (x) "))
    }
}

/// Sparse vector with exact rational entries over the tensor basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    entries: BTreeMap<TensorIndex, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: TensorIndex) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(idx, Rational::one());
        ModuleVector { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TensorIndex, &Rational)> {
        self.entries.iter()
    }

    pub fn coeff(&self, idx: &TensorIndex) -> Rational {
        self.entries.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_scaled(&mut self, idx: TensorIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in other.iter() {
            out.add_scaled(idx.clone(), -c.clone());
        }
        out
    }
}

/// A tensor product of exterior powers of the natural representation of
/// `sl(n+1)`, described by the list of wedge degrees. The realisation of
/// `V(lambda)` uses `m_1` factors of degree 1, then `m_2` of degree 2, etc.
#[derive(Debug, Clone)]
pub struct TensorModule {
    n: Rank,
    sizes: Vec<usize>,
    factor_bases: Vec<Vec<WedgeIndex>>,
    factor_ranks: Vec<HashMap<WedgeIndex, usize>>,
}

impl TensorModule {
    pub fn new(n: Rank, sizes: Vec<usize>) -> Self {
        let factor_bases: Vec<Vec<WedgeIndex>> = sizes
            .iter()
            .map(|&k| {
                let mut basis = Vec::new();
                let mut current: Vec<u8> = Vec::with_capacity(k);
                enumerate_wedges(n.get() as u8 + 1, k, 1, &mut current, &mut basis);
                basis.sort();
                basis
            })
            .collect();
        let factor_ranks = factor_bases
            .iter()
            .map(|basis| basis.iter().enumerate().map(|(r, w)| (w.clone(), r)).collect())
            .collect();
        TensorModule { n, sizes, factor_bases, factor_ranks }
    }

    /// Factors for the cyclic realisation of `V(lambda)`.
    pub fn for_weight(lambda: &Weight) -> Self {
        let n = lambda.rank();
        let mut sizes = Vec::new();
        for k in 1..=n.get() {
            for _ in 0..lambda.coord(k) {
                sizes.push(k);
            }
        }
        TensorModule::new(n, sizes)
    }

    /// Concatenation, realising `V(lambda) (x) V(mu)`.
    pub fn tensor(a: &TensorModule, b: &TensorModule) -> Self {
        assert_eq!(a.n, b.n);
        let mut sizes = a.sizes.clone();
        sizes.extend_from_slice(&b.sizes);
        TensorModule::new(a.n, sizes)
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total dimension of the ambient tensor product.
    pub fn dim(&self) -> u64 {
        self.factor_bases.iter().map(|b| b.len() as u64).product()
    }

    /// `v_lambda`: the tensor of the top wedge of each factor. For the empty
    /// factor list (lambda = 0) this is the empty tensor, a single basis
    /// vector.
    pub fn highest_vector(&self) -> ModuleVector {
        ModuleVector::basis(TensorIndex(self.sizes.iter().map(|&k| WedgeIndex::top(k)).collect()))
    }

    /// Lexicographic code of a basis vector, mixed-radix over the factors.
    pub fn encode(&self, idx: &TensorIndex) -> u64 {
        let mut code = 0u64;
        for (f, w) in idx.0.iter().enumerate() {
            code = code * self.factor_bases[f].len() as u64 + self.factor_ranks[f][w] as u64;
        }
        code
    }

    pub fn encode_vector(&self, v: &ModuleVector) -> SparseRow {
        let mut row: SparseRow = v.iter().map(|(idx, c)| (self.encode(idx), c.clone())).collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    /// Action of the root vector `f_{i,j}`: derivation on each wedge factor,
    /// coproduct across factors.
    pub fn apply_root(&self, root: PositiveRoot, v: &ModuleVector) -> ModuleVector {
        let source = root.i as u8;
        let target = (root.j + 1) as u8;
        let mut out = ModuleVector::zero();
        for (idx, c) in v.iter() {
            for f in 0..idx.0.len() {
                let wedge = &idx.0[f];
                let Some(pos) = wedge.indices().iter().position(|&a| a == source) else {
                    continue;
                };
                if wedge.indices().contains(&target) {
                    continue; // repeated index annihilates
                }
                let mut entries = wedge.indices().to_vec();
                let moves = entries[pos + 1..].iter().filter(|&&a| a < target).count();
                entries.remove(pos);
                entries.insert(pos + moves, target);
                let sign = if moves % 2 == 0 { Rational::one() } else { -Rational::one() };
                let mut factors = idx.0.clone();
                factors[f] = WedgeIndex(entries);
                out.add_scaled(TensorIndex(factors), c * &sign);
            }
        }
        out
    }

    /// `f^s v`: powers applied along the directed order, last root first.
    pub fn apply_monomial(
        &self,
        s: &ExponentVector,
        v: &ModuleVector,
        order: &DirectedOrder,
    ) -> ModuleVector {
        let mut out = v.clone();
        for &root in order.roots().iter().rev() {
            for _ in 0..s.get(root) {
                out = self.apply_root(root, &out);
            }
        }
        out
    }

    /// Apply an explicit sequence of root vectors, first entry first.
    pub fn apply_sequence(&self, seq: &[PositiveRoot], v: &ModuleVector) -> ModuleVector {
        let mut out = v.clone();
        for &root in seq {
            out = self.apply_root(root, &out);
        }
        out
    }
}

fn enumerate_wedges(max: u8, k: usize, start: u8, current: &mut Vec<u8>, out: &mut Vec<WedgeIndex>) {
    if current.len() == k {
        out.push(WedgeIndex(current.clone()));
        return;
    }
    for a in start..=max {
        current.push(a);
        enumerate_wedges(max, k, a + 1, current, out);
        current.pop();
    }
}
