//! Dyck paths, the inequality description of the weight polytope, exact
//! lattice-point enumeration, and the degree functions on monomials.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::roots::{positive_roots, PositiveRoot, Rank, RootError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("cannot parse exponent vector: {0}")]
    Parse(String),
}

/// Function `s : Delta_+ -> N` with finite support, stored sparsely.
///
/// The same data serves as a lattice point of the weight polytope, a PBW
/// monomial exponent, and the isomorphism class of a quiver representation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    mults: BTreeMap<PositiveRoot, u32>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(root: PositiveRoot) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(root, 1);
        ExponentVector { mults }
    }

    pub fn from_pairs<I: IntoIterator<Item = (PositiveRoot, u32)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (root, m) in pairs {
            out.set(root, out.get(root) + m);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn get(&self, root: PositiveRoot) -> u32 {
        self.mults.get(&root).copied().unwrap_or(0)
    }

    pub fn set(&mut self, root: PositiveRoot, m: u32) {
        if m == 0 {
            self.mults.remove(&root);
        } else {
            self.mults.insert(root, m);
        }
    }

    /// Support with multiplicities, in canonical root order.
    pub fn iter(&self) -> impl Iterator<Item = (PositiveRoot, u32)> + '_ {
        self.mults.iter().map(|(r, m)| (*r, *m))
    }

    /// Total multiplicity `sum_alpha s(alpha)`.
    pub fn total(&self) -> u64 {
        self.mults.values().map(|m| *m as u64).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (root, m) in other.iter() {
            out.set(root, out.get(root) + m);
        }
        out
    }

    /// Pointwise `self <= other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.iter().all(|(root, m)| m <= other.get(root))
    }

    /// Decrease the multiplicity of `root` by one; `None` if absent.
    pub fn minus_unit(&self, root: PositiveRoot) -> Option<Self> {
        let m = self.get(root);
        if m == 0 {
            return None;
        }
        let mut out = self.clone();
        out.set(root, m - 1);
        Some(out)
    }

    /// `sum_alpha s(alpha) * alpha` in simple-root coordinates; equally the
    /// dimension vector of the corresponding quiver representation class.
    pub fn dimension_vector(&self, n: Rank) -> Vec<u64> {
        let mut d = vec![0u64; n.get()];
        for (root, m) in self.iter() {
            for v in root.i..=root.j {
                d[v - 1] += m as u64;
            }
        }
        d
    }

    pub fn max_vertex(&self) -> usize {
        self.mults.keys().map(|r| r.j).max().unwrap_or(0)
    }

    /// JSON object mapping `"i,j"` keys to multiplicities, zeros omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (root, m) in self.iter() {
            map.insert(root.key(), serde_json::Value::from(m));
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolytopeError> {
        let obj = value
            .as_object()
            .ok_or_else(|| PolytopeError::Parse(value.to_string()))?;
        let mut out = Self::zero();
        for (key, v) in obj {
            let root = PositiveRoot::parse_key(key)?;
            let m = v
                .as_u64()
                .and_then(|m| u32::try_from(m).ok())
                .ok_or_else(|| PolytopeError::Parse(value.to_string()))?;
            out.set(root, out.get(root) + m);
        }
        Ok(out)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("1");
        }
        let mut first = true;
        for (root, m) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "f[{},{}]", root.i, root.j)?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.mults.len()))?;
        for (root, m) in self.iter() {
            map.serialize_entry(&root.key(), &m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, u32>::deserialize(deserializer)?;
        let mut out = ExponentVector::zero();
        for (key, m) in map {
            let root = PositiveRoot::parse_key(&key).map_err(serde::de::Error::custom)?;
            out.set(root, out.get(root) + m);
        }
        Ok(out)
    }
}

/// Monotone lattice path of positive roots from one simple root to another,
/// each step raising the second index or the first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DyckPath {
    pub roots: Vec<PositiveRoot>,
}

impl DyckPath {
    /// Structural validity: simple endpoints, legal steps, `i <= j` throughout.
    pub fn is_valid(&self) -> bool {
        let Some(first) = self.roots.first() else { return false };
        let Some(last) = self.roots.last() else { return false };
        if !first.is_simple() || !last.is_simple() {
            return false;
        }
        self.roots.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            a.i <= a.j && ((b.i == a.i && b.j == a.j + 1) || (b.i == a.i + 1 && b.j == a.j))
        }) && self.roots.iter().all(|r| r.i <= r.j)
    }
}

/// All Dyck paths from `alpha_i` to `alpha_j`, duplicate-free.
pub fn dyck_paths(i: usize, j: usize, n: Rank) -> Result<Vec<DyckPath>, PolytopeError> {
    let start = PositiveRoot::new(i, j).map_err(PolytopeError::Root)?;
    start.in_rank(n)?;
    let mut out = Vec::new();
    let mut prefix = vec![PositiveRoot::simple(i)];
    walk(i, i, i, j, &mut prefix, &mut out);
    Ok(out)
}

fn walk(t: usize, r: usize, _i: usize, j: usize, prefix: &mut Vec<PositiveRoot>, out: &mut Vec<DyckPath>) {
    if t == j && r == j {
        out.push(DyckPath { roots: prefix.clone() });
        return;
    }
    if r + 1 <= j {
        prefix.push(PositiveRoot { i: t, j: r + 1 });
        walk(t, r + 1, _i, j, prefix, out);
        prefix.pop();
    }
    if t + 1 <= r {
        prefix.push(PositiveRoot { i: t + 1, j: r });
        walk(t + 1, r, _i, j, prefix, out);
        prefix.pop();
    }
}

/// One inequality `sum_{alpha in path} s_alpha <= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathInequality {
    pub path: DyckPath,
    pub bound: u64,
}

/// The full inequality description of the weight polytope `P(lambda)`.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub rank: Rank,
    pub inequalities: Vec<PathInequality>,
}

impl Polytope {
    /// Inequalities over all Dyck paths: the bound of a path from `alpha_i`
    /// to `alpha_j` is `m_i + ... + m_j`.
    pub fn new(lambda: &Weight) -> Self {
        let n = lambda.rank();
        let mut inequalities = Vec::new();
        for i in 1..=n.get() {
            for j in i..=n.get() {
                let bound: u64 = (i..=j).map(|k| lambda.coord(k)).sum();
                for path in dyck_paths(i, j, n).expect("valid interval") {
                    inequalities.push(PathInequality { path, bound });
                }
            }
        }
        Polytope { rank: n, inequalities }
    }

    pub fn contains(&self, s: &ExponentVector) -> bool {
        self.inequalities.iter().all(|ineq| {
            let sum: u64 = ineq.path.roots.iter().map(|r| s.get(*r) as u64).sum();
            sum <= ineq.bound
        })
    }

    /// Exact enumeration of the lattice points, in canonical order.
    ///
    /// Depth-first search over root coordinates with per-coordinate caps read
    /// off the path through each root, pruning on every partial sum.
    pub fn lattice_points(&self) -> Vec<ExponentVector> {
        let roots = positive_roots(self.rank);
        let root_pos: BTreeMap<PositiveRoot, usize> =
            roots.iter().enumerate().map(|(idx, r)| (*r, idx)).collect();
        // cap for s_{i,j}: the bound of any path through alpha_{i,j}
        let mut caps = vec![u64::MAX; roots.len()];
        let mut ineqs: Vec<(Vec<usize>, u64)> = Vec::with_capacity(self.inequalities.len());
        for ineq in &self.inequalities {
            let idxs: Vec<usize> = ineq.path.roots.iter().map(|r| root_pos[r]).collect();
            for &idx in &idxs {
                caps[idx] = caps[idx].min(ineq.bound);
            }
            ineqs.push((idxs, ineq.bound));
        }
        // per-root list of inequality memberships for incremental sums
        let mut memberships: Vec<Vec<usize>> = vec![Vec::new(); roots.len()];
        for (k, (idxs, _)) in ineqs.iter().enumerate() {
            for &idx in idxs {
                memberships[idx].push(k);
            }
        }
        let mut partial = vec![0u64; ineqs.len()];
        let mut current = vec![0u32; roots.len()];
        let mut out = Vec::new();
        search(0, &roots, &caps, &ineqs, &memberships, &mut partial, &mut current, &mut out);
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    idx: usize,
    roots: &[PositiveRoot],
    caps: &[u64],
    ineqs: &[(Vec<usize>, u64)],
    memberships: &[Vec<usize>],
    partial: &mut Vec<u64>,
    current: &mut Vec<u32>,
    out: &mut Vec<ExponentVector>,
) {
    if idx == roots.len() {
        out.push(ExponentVector::from_pairs(
            roots.iter().zip(current.iter()).filter(|(_, m)| **m > 0).map(|(r, m)| (*r, *m)),
        ));
        return;
    }
    debug_assert!(caps[idx] < u64::MAX, "every root lies on some path");
    let mut value = 0u64;
    loop {
        if value > caps[idx] {
            break;
        }
        if value > 0 {
            let mut feasible = true;
            for &k in &memberships[idx] {
                partial[k] += 1;
                if partial[k] > ineqs[k].1 {
                    feasible = false;
                }
            }
            if !feasible {
                // rolled past some bound; undo this unit and stop increasing
                for &k in &memberships[idx] {
                    partial[k] -= 1;
                }
                break;
            }
        }
        current[idx] = value as u32;
        search(idx + 1, roots, caps, ineqs, memberships, partial, current, out);
        value += 1;
    }
    // undo the units this coordinate still holds (one per successful value > 0)
    let placed = value.saturating_sub(1);
    if placed > 0 {
        for &k in &memberships[idx] {
            partial[k] -= placed;
        }
    }
    current[idx] = 0;
}

/// Lattice points `S(lambda)` of the weight polytope.
pub fn lattice_points(lambda: &Weight) -> Vec<ExponentVector> {
    Polytope::new(lambda).lattice_points()
}

/// Check the Minkowski-sum property `S(lambda) + S(mu) = S(lambda + mu)`.
pub fn minkowski_check(lambda: &Weight, mu: &Weight) -> bool {
    assert_eq!(lambda.rank(), mu.rank(), "weights must share a rank");
    let s_lambda = lattice_points(lambda);
    let s_mu = lattice_points(mu);
    let s_sum: HashSet<ExponentVector> = lattice_points(&lambda.add(mu)).into_iter().collect();
    let mut sumset = HashSet::new();
    for a in &s_lambda {
        for b in &s_mu {
            sumset.insert(a.add(b));
        }
    }
    sumset == s_sum
}

/// Degree `(j - i + 1)(n - j + 1)` of the root vector `f_{i,j}`, summed over
/// the monomial.
pub fn ff_degree(s: &ExponentVector, n: Rank) -> u64 {
    s.iter()
        .map(|(root, m)| m as u64 * (root.height() as u64) * ((n.get() - root.j + 1) as u64))
        .sum()
}

/// Total length `sum_alpha s(alpha)` (the original PBW grading).
pub fn length_degree(s: &ExponentVector) -> u64 {
    s.total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{weyl_dim_usize, Weight};

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn root(i: usize, j: usize) -> PositiveRoot {
        PositiveRoot::new(i, j).unwrap()
    }

    fn catalan(k: u64) -> u64 {
        // C_k = (2k)! / (k! (k+1)!)
        let mut c: u64 = 1;
        for x in 0..k {
            c = c * 2 * (2 * x + 1) / (x + 2);
        }
        c
    }

    #[test]
    fn singleton_paths() {
        for n in 1..=4 {
            for i in 1..=n {
                let paths = dyck_paths(i, i, rank(n)).unwrap();
                assert_eq!(paths.len(), 1);
                assert_eq!(paths[0].roots, vec![root(i, i)]);
            }
        }
    }

    #[test]
    fn step_path() {
        let paths = dyck_paths(1, 2, rank(2)).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].roots, vec![root(1, 1), root(1, 2), root(2, 2)]);
    }

    #[test]
    fn path_counts_are_catalan() {
        // |D_{i,j}| = Catalan(j - i) for j - i <= 4
        for n in 1..=5usize {
            for i in 1..=n {
                for j in i..=n {
                    let paths = dyck_paths(i, j, rank(n)).unwrap();
                    assert_eq!(paths.len() as u64, catalan((j - i) as u64), "D_{{{i},{j}}}");
                    for p in &paths {
                        assert!(p.is_valid());
                    }
                    let dedup: HashSet<_> = paths.iter().cloned().collect();
                    assert_eq!(dedup.len(), paths.len());
                }
            }
        }
    }

    #[test]
    fn polytope_rank_one() {
        let p = Polytope::new(&Weight::new(vec![5]));
        assert_eq!(p.inequalities.len(), 1);
        assert_eq!(p.inequalities[0].bound, 5);
        assert_eq!(p.lattice_points().len(), 6);
    }

    #[test]
    fn polytope_rank_two_adjoint_weight() {
        // n = 2, lambda = varpi_1 + varpi_2: three inequalities
        let p = Polytope::new(&Weight::new(vec![1, 1]));
        let mut summary: Vec<(Vec<(usize, usize)>, u64)> = p
            .inequalities
            .iter()
            .map(|q| (q.path.roots.iter().map(|r| (r.i, r.j)).collect(), q.bound))
            .collect();
        summary.sort();
        assert_eq!(
            summary,
            vec![
                (vec![(1, 1)], 1),
                (vec![(1, 1), (1, 2), (2, 2)], 2),
                (vec![(2, 2)], 1),
            ]
        );
        assert_eq!(p.lattice_points().len(), 8);
    }

    #[test]
    fn zero_weight_polytope() {
        let p = Polytope::new(&Weight::zero(rank(3)));
        assert!(p.inequalities.iter().all(|q| q.bound == 0));
        let pts = p.lattice_points();
        assert_eq!(pts, vec![ExponentVector::zero()]);
    }

    #[test]
    fn lattice_point_counts_match_weyl_dim() {
        let n = rank(3);
        assert_eq!(lattice_points(&Weight::fundamental(n, 1)).len(), 4);
        assert_eq!(lattice_points(&Weight::fundamental(n, 2)).len(), 6);
        for coords in [vec![1, 0, 1], vec![0, 2, 0], vec![2, 1, 0]] {
            let lambda = Weight::new(coords);
            assert_eq!(lattice_points(&lambda).len(), weyl_dim_usize(&lambda));
        }
    }

    #[test]
    fn known_points_of_second_fundamental() {
        // S(varpi_2) at n = 3: 0, e12, e13, e22, e23, e13+e22
        let pts: HashSet<ExponentVector> =
            lattice_points(&Weight::fundamental(rank(3), 2)).into_iter().collect();
        let expect: HashSet<ExponentVector> = [
            ExponentVector::zero(),
            ExponentVector::unit(root(1, 2)),
            ExponentVector::unit(root(1, 3)),
            ExponentVector::unit(root(2, 2)),
            ExponentVector::unit(root(2, 3)),
            ExponentVector::unit(root(1, 3)).add(&ExponentVector::unit(root(2, 2))),
        ]
        .into_iter()
        .collect();
        assert_eq!(pts, expect);
    }

    #[test]
    fn minkowski_examples() {
        let n3 = rank(3);
        assert!(minkowski_check(&Weight::zero(n3), &Weight::zero(n3)));
        assert!(minkowski_check(&Weight::fundamental(n3, 1), &Weight::fundamental(n3, 2)));
        assert!(minkowski_check(&Weight::new(vec![1, 0, 1]), &Weight::fundamental(n3, 2)));
    }

    #[test]
    fn sumset_contained_in_sum_points() {
        // S(lambda) + S(mu) is always inside S(lambda + mu): bounds add
        let lambda = Weight::new(vec![1, 1, 0]);
        let mu = Weight::new(vec![0, 1, 0]);
        let sum_poly = Polytope::new(&lambda.add(&mu));
        for a in lattice_points(&lambda) {
            for b in lattice_points(&mu) {
                assert!(sum_poly.contains(&a.add(&b)));
            }
        }
        // ... and the path bounds themselves are additive
        let pl = Polytope::new(&lambda);
        let pm = Polytope::new(&mu);
        let ps = Polytope::new(&lambda.add(&mu));
        for ((a, b), c) in pl.inequalities.iter().zip(&pm.inequalities).zip(&ps.inequalities) {
            assert_eq!(a.path, b.path);
            assert_eq!(a.bound + b.bound, c.bound);
        }
    }

    #[test]
    fn degree_table_rank_three() {
        let n = rank(3);
        let degs: Vec<u64> = positive_roots(n)
            .into_iter()
            .map(|r| ff_degree(&ExponentVector::unit(r), n))
            .collect();
        // order (1,1),(1,2),(1,3),(2,2),(2,3),(3,3)
        assert_eq!(degs, vec![3, 4, 3, 2, 2, 1]);
    }

    #[test]
    fn degree_additivity_and_examples() {
        let n = rank(3);
        assert_eq!(ff_degree(&ExponentVector::zero(), n), 0);
        let s = ExponentVector::from_pairs([(root(2, 2), 1), (root(3, 3), 2)]);
        assert_eq!(ff_degree(&s, n), 4);
        let t = ExponentVector::from_pairs([(root(1, 2), 1)]);
        assert_eq!(ff_degree(&s.add(&t), n), ff_degree(&s, n) + ff_degree(&t, n));
        assert_eq!(length_degree(&t), 1);
        assert_eq!(length_degree(&ExponentVector::from_pairs([(root(1, 2), 1), (root(2, 3), 1)])), 2);
        assert_eq!(length_degree(&ExponentVector::from_pairs([(root(1, 1), 3)])), 3);
    }

    #[test]
    fn exponent_vector_json_round_trip() {
        let s = ExponentVector::from_pairs([(root(1, 3), 1), (root(2, 2), 2)]);
        let json = s.to_json();
        assert_eq!(json.to_string(), r#"{"1,3":1,"2,2":2}"#);
        assert_eq!(ExponentVector::from_json(&json).unwrap(), s);
        let via_serde: ExponentVector = serde_json::from_str(r#"{"1,3":1,"2,2":2}"#).unwrap();
        assert_eq!(via_serde, s);
    }
}
