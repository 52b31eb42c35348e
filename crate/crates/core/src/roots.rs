//! Type `A_n` root and weight combinatorics for `sl(n+1)`.
//!
//! Weights are always stored in fundamental-weight coordinates and root
//! vectors in simple-root coordinates; conversions are explicit operations.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest rank accepted by default. Everything in scope is desk-scale; the
/// limit exists to catch typos, not capacity.
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("rank must satisfy 1 <= n <= {max}, got {n}")]
    RankOutOfRange { n: usize, max: usize },
    #[error("root indices must satisfy 1 <= i <= j, got i = {i}, j = {j}")]
    InvalidInterval { i: usize, j: usize },
    #[error("root ({i},{j}) does not belong to rank {n}")]
    RankMismatch { i: usize, j: usize, n: usize },
    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },
}

/// Rank of the algebra `sl(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self, RootError> {
        Self::with_limit(n, DEFAULT_MAX_RANK)
    }

    pub fn with_limit(n: usize, max: usize) -> Result<Self, RootError> {
        if n == 0 || n > max {
            return Err(RootError::RankOutOfRange { n, max });
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of positive roots `n(n+1)/2`.
    pub fn num_positive_roots(self) -> usize {
        self.0 * (self.0 + 1) / 2
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Positive root `alpha_{i,j} = alpha_i + ... + alpha_j` with `1 <= i <= j`.
/// Doubles as the interval quiver representation supported on vertices `i..=j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn new(i: usize, j: usize) -> Result<Self, RootError> {
        if i == 0 || i > j {
            return Err(RootError::InvalidInterval { i, j });
        }
        Ok(PositiveRoot { i, j })
    }

    pub fn simple(i: usize) -> Self {
        PositiveRoot { i, j: i }
    }

    pub fn is_simple(&self) -> bool {
        self.i == self.j
    }

    /// Number of simple-root summands `j - i + 1`.
    pub fn height(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn in_rank(&self, n: Rank) -> Result<(), RootError> {
        if self.j > n.get() {
            return Err(RootError::RankMismatch { i: self.i, j: self.j, n: n.get() });
        }
        Ok(())
    }

    /// Key used in JSON maps, e.g. `"1,3"`.
    pub fn key(&self) -> String {
        format!("{},{}", self.i, self.j)
    }

    pub fn parse_key(text: &str) -> Result<Self, RootError> {
        let err = || RootError::Parse { what: "positive root", text: text.to_string() };
        let (i, j) = text.split_once(',').ok_or_else(err)?;
        let i = i.trim().parse::<usize>().map_err(|_| err())?;
        let j = j.trim().parse::<usize>().map_err(|_| err())?;
        PositiveRoot::new(i, j)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All positive roots of rank `n` in the canonical order, lexicographic by
/// `(i, j)`.
pub fn positive_roots(n: Rank) -> Vec<PositiveRoot> {
    let mut out = Vec::with_capacity(n.num_positive_roots());
    for i in 1..=n.get() {
        for j in i..=n.get() {
            out.push(PositiveRoot { i, j });
        }
    }
    out
}

/// Symmetrized Cartan form `(alpha, beta)` extended bilinearly from
/// `(alpha_i, alpha_j) = 2, -1, 0` for `i = j`, `|i - j| = 1`, otherwise.
pub fn root_pairing(n: Rank, a: PositiveRoot, b: PositiveRoot) -> Result<i64, RootError> {
    a.in_rank(n)?;
    b.in_rank(n)?;
    let mut acc = 0i64;
    for u in a.i..=a.j {
        for v in b.i..=b.j {
            acc += match u.abs_diff(v) {
                0 => 2,
                1 => -1,
                _ => 0,
            };
        }
    }
    Ok(acc)
}

/// Dominant integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<u64>,
}

impl Weight {
    pub fn new(coords: Vec<u64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: Rank) -> Self {
        Weight { coords: vec![0; n.get()] }
    }

    /// The fundamental weight `varpi_k` (1-based).
    pub fn fundamental(n: Rank, k: usize) -> Self {
        assert!(k >= 1 && k <= n.get());
        let mut coords = vec![0; n.get()];
        coords[k - 1] = 1;
        Weight { coords }
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coords.len())
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Coefficient of `varpi_k` (1-based).
    pub fn coord(&self, k: usize) -> u64 {
        self.coords[k - 1]
    }

    /// Height `|lambda| = m_1 + ... + m_n`.
    pub fn height(&self) -> u64 {
        self.coords.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.coords.len(), other.coords.len());
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    /// `-w_0(lambda)`: coordinates reversed.
    pub fn dual(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.reverse();
        Weight { coords }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        let err = || RootError::Parse { what: "weight", text: s.to_string() };
        let coords = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.is_empty() {
            return Err(err());
        }
        Ok(Weight { coords })
    }
}

/// Element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

/// Weyl dimension of the irreducible module `V(lambda)`:
/// `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)` as an exact integer.
///
/// In type `A_n` with `(varpi_k, alpha_{i,j})` equal to 1 when `i <= k <= j`,
/// the factor for `alpha_{i,j}` is `(m_i + ... + m_j + j - i + 1)/(j - i + 1)`.
pub fn weyl_dim(lambda: &Weight) -> BigUint {
    let n = lambda.rank().get();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=n {
        let mut interval_sum = 0u64;
        for j in i..=n {
            interval_sum += lambda.coord(j);
            let height = (j - i + 1) as u64;
            num *= BigUint::from(interval_sum + height);
            den *= BigUint::from(height);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "Weyl dimension product is an exact integer");
    q
}

/// Convenience for comparisons against set cardinalities.
pub fn weyl_dim_usize(lambda: &Weight) -> usize {
    weyl_dim(lambda).to_usize().expect("dimension fits in usize")
}

/// `lambda - w_0(lambda)` in simple-root coordinates. This bounds the
/// support of any monomial acting nontrivially on `V(lambda)`.
pub fn weight_minus_roots_bound(lambda: &Weight) -> RootVector {
    let n = lambda.rank().get() as i64;
    // mu = lambda + reverse(lambda) in fundamental coordinates
    let mu: Vec<i64> = (1..=n)
        .map(|k| (lambda.coord(k as usize) + lambda.coord((n - k + 1) as usize)) as i64)
        .collect();
    // x_j = sum_k mu_k (min(j,k) - jk/(n+1)), exact in integers after clearing n+1
    let mut coords = Vec::with_capacity(n as usize);
    for j in 1..=n {
        let mut scaled = BigInt::zero();
        for k in 1..=n {
            let c = BigInt::from(j.min(k) * (n + 1) - j * k);
            scaled += BigInt::from(mu[(k - 1) as usize]) * c;
        }
        let (q, r) = num_integer::Integer::div_rem(&scaled, &BigInt::from(n + 1));
        assert!(r.is_zero(), "lambda - w0(lambda) lies in the root lattice");
        assert!(!q.is_negative());
        coords.push(q.to_i64().expect("bound fits in i64"));
    }
    RootVector::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_roots(rank(1)), vec![PositiveRoot::simple(1)]);
        assert_eq!(positive_roots(rank(3)).len(), 6);
        assert_eq!(positive_roots(rank(4)).len(), 10);
        // the rank-3 list from small to large
        let r3: Vec<(usize, usize)> = positive_roots(rank(3)).iter().map(|r| (r.i, r.j)).collect();
        assert_eq!(r3, vec![(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]);
    }

    #[test]
    fn pairing_examples() {
        let n = rank(3);
        let a11 = PositiveRoot::new(1, 1).unwrap();
        let a22 = PositiveRoot::new(2, 2).unwrap();
        let a12 = PositiveRoot::new(1, 2).unwrap();
        let a23 = PositiveRoot::new(2, 3).unwrap();
        assert_eq!(root_pairing(n, a11, a11).unwrap(), 2);
        assert_eq!(root_pairing(n, a11, a22).unwrap(), -1);
        assert_eq!(root_pairing(n, a12, a23).unwrap(), 0);
        assert!(root_pairing(rank(2), a23, a11).is_err());
    }

    #[test]
    fn weyl_dim_examples() {
        for n in 1..=6 {
            assert_eq!(weyl_dim(&Weight::fundamental(rank(n), 1)), BigUint::from(n as u64 + 1));
        }
        assert_eq!(weyl_dim(&Weight::fundamental(rank(3), 2)), BigUint::from(6u64));
        // adjoint of sl_3
        assert_eq!(weyl_dim(&Weight::new(vec![1, 1])), BigUint::from(8u64));
        assert_eq!(weyl_dim(&Weight::zero(rank(4))), BigUint::one());
    }

    #[test]
    fn weyl_dim_fundamental_is_binomial() {
        for n in 1..=DEFAULT_MAX_RANK {
            for k in 1..=n {
                let expect = num_integer::binomial(BigUint::from(n as u64 + 1), BigUint::from(k as u64));
                assert_eq!(weyl_dim(&Weight::fundamental(rank(n), k)), expect);
            }
        }
    }

    #[test]
    fn weyl_dim_duality() {
        for coords in [vec![1, 0, 2], vec![3, 1, 0], vec![0, 2, 1], vec![2, 0, 0, 1]] {
            let lambda = Weight::new(coords);
            assert_eq!(weyl_dim(&lambda), weyl_dim(&lambda.dual()));
        }
    }

    #[test]
    fn weight_bound_examples() {
        // varpi_1 in sl_3: varpi_1 + varpi_2 = alpha_1 + alpha_2
        let b = weight_minus_roots_bound(&Weight::fundamental(rank(2), 1));
        assert_eq!(b.coords(), &[1, 1]);
        let z = weight_minus_roots_bound(&Weight::zero(rank(3)));
        assert_eq!(z.coords(), &[0, 0, 0]);
        let b2 = weight_minus_roots_bound(&Weight::new(vec![1, 1]));
        assert_eq!(b2.coords(), &[2, 2]);
    }

    #[test]
    fn weight_parsing_round_trip() {
        let w: Weight = "1,0,2".parse().unwrap();
        assert_eq!(w.coords(), &[1, 0, 2]);
        assert_eq!(w.to_string(), "1,0,2");
        assert!("".parse::<Weight>().is_err());
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn rank_limits() {
        assert!(Rank::new(0).is_err());
        assert!(Rank::new(9).is_err());
        assert!(Rank::with_limit(9, 10).is_ok());
    }
}
