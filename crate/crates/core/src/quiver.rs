//! Representation theory of the equioriented type `A_n` quiver
//! `1 -> 2 -> ... -> n`: Hom/Ext dimensions of interval modules, the Euler
//! form, Auslander-Reiten translates and sequences, the degeneration order,
//! and the classification of additive weight functions.
//!
//! Interval modules are identified with positive roots: `alpha_{i,j}`
//! corresponds to the indecomposable supported on vertices `i..=j`, and an
//! [`ExponentVector`] records the multiplicity of each indecomposable summand.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::polytope::ExponentVector;
use crate::roots::{positive_roots, PositiveRoot, Rank, RootError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("AR translate undefined: ({0}) is projective")]
    ProjectiveInput(PositiveRoot),
    #[error("dimension vectors differ: {0:?} vs {1:?}")]
    DimensionMismatch(Vec<u64>, Vec<u64>),
}

/// Dimension vector in simple-root coordinates.
pub type DimVector = Vec<u64>;

pub fn interval_dim_vector(n: Rank, root: PositiveRoot) -> DimVector {
    ExponentVector::unit(root).dimension_vector(n)
}

/// `dim Hom(M_{r,s}, M_{i,j})`, which is 1 exactly when `i <= r <= j <= s`.
pub fn hom_dim(source: PositiveRoot, target: PositiveRoot) -> u64 {
    u64::from(target.i <= source.i && source.i <= target.j && target.j <= source.j)
}

/// Bilinear extension of [`hom_dim`] over direct summands.
pub fn hom_dim_reps(source: &ExponentVector, target: &ExponentVector) -> u64 {
    let mut acc = 0;
    for (a, ma) in source.iter() {
        for (b, mb) in target.iter() {
            acc += ma as u64 * mb as u64 * hom_dim(a, b);
        }
    }
    acc
}

/// Homological Euler form `<d, e> = sum_v d_v e_v - sum_{v -> v+1} d_v e_{v+1}`.
pub fn euler_form(d: &[u64], e: &[u64]) -> i64 {
    assert_eq!(d.len(), e.len(), "dimension vectors must share a rank");
    let mut acc = 0i64;
    for v in 0..d.len() {
        acc += (d[v] * e[v]) as i64;
        if v + 1 < d.len() {
            acc -= (d[v] * e[v + 1]) as i64;
        }
    }
    acc
}

/// `dim Ext^1(M(m), M(m'))` via `hom - <dim m, dim m'>`. Classifies short
/// exact sequences with submodule `M(m')` and quotient `M(m)`.
pub fn ext_dim_reps(n: Rank, m: &ExponentVector, m2: &ExponentVector) -> u64 {
    let hom = hom_dim_reps(m, m2) as i64;
    let ext = hom - euler_form(&m.dimension_vector(n), &m2.dimension_vector(n));
    debug_assert!(ext >= 0);
    ext as u64
}

/// `mu_0(M) = dim Hom(V_0, M)` where `V_0` is one copy of each indecomposable.
/// On the interval `M_{i,j}` this equals `(j - i + 1)(n - j + 1)`.
pub fn mu0(n: Rank, m: &ExponentVector) -> u64 {
    positive_roots(n)
        .into_iter()
        .map(|v| hom_dim_reps(&ExponentVector::unit(v), m))
        .sum()
}

/// Projectives are the intervals ending at `n`.
pub fn is_projective(n: Rank, u: PositiveRoot) -> bool {
    u.j == n.get()
}

/// Injectives are the intervals starting at `1`.
pub fn is_injective(u: PositiveRoot) -> bool {
    u.i == 1
}

/// AR translate `tau M_{i,j} = M_{i+1,j+1}`, defined for non-projectives.
pub fn ar_translate(n: Rank, u: PositiveRoot) -> Option<PositiveRoot> {
    (!is_projective(n, u)).then(|| PositiveRoot { i: u.i + 1, j: u.j + 1 })
}

/// Inverse translate `tau^{-1} M_{i,j} = M_{i-1,j-1}`, defined for
/// non-injectives.
pub fn ar_cotranslate(u: PositiveRoot) -> Option<PositiveRoot> {
    (!is_injective(u)).then(|| PositiveRoot { i: u.i - 1, j: u.j - 1 })
}

/// Almost-split sequence `0 -> tau U -> C -> U -> 0` ending in a
/// non-projective `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArSequence {
    /// `tau U`.
    pub start: PositiveRoot,
    /// Class of the middle term; at most two interval summands.
    pub middle: ExponentVector,
    /// `U` itself.
    pub end: PositiveRoot,
}

/// The AR sequence ending in `U = M_{i,j}` has middle `M_{i+1,j} + M_{i,j+1}`,
/// an interval with reversed endpoints contributing nothing.
pub fn ar_sequence(n: Rank, u: PositiveRoot) -> Result<ArSequence, QuiverError> {
    let start = ar_translate(n, u).ok_or(QuiverError::ProjectiveInput(u))?;
    let mut middle = ExponentVector::zero();
    if u.i + 1 <= u.j {
        let r = PositiveRoot { i: u.i + 1, j: u.j };
        middle.set(r, middle.get(r) + 1);
    }
    if u.j + 1 <= n.get() {
        let r = PositiveRoot { i: u.i, j: u.j + 1 };
        middle.set(r, middle.get(r) + 1);
    }
    Ok(ArSequence { start, middle, end: u })
}

/// Representation-directed enumeration of the positive roots: Hom only goes
/// forward and Ext^1 only backward. Built as a topological sort of the
/// Hom-nonvanishing relation with lexicographic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedOrder {
    n: Rank,
    roots: Vec<PositiveRoot>,
    positions: BTreeMap<PositiveRoot, usize>,
}

impl DirectedOrder {
    pub fn rank(&self) -> Rank {
        self.n
    }

    /// Roots as `beta_1, ..., beta_N`.
    pub fn roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Zero-based position of a root in the enumeration.
    pub fn position(&self, root: PositiveRoot) -> Option<usize> {
        self.positions.get(&root).copied()
    }

    /// Both defining conditions: `Hom(U_k, U_l) = 0` for `k > l` and
    /// `Ext^1(U_k, U_l) = 0` for `k <= l`.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        for (k, &a) in self.roots.iter().enumerate() {
            for (l, &b) in self.roots.iter().enumerate() {
                if k > l && hom_dim(a, b) != 0 {
                    return false;
                }
                if k <= l
                    && ext_dim_reps(n, &ExponentVector::unit(a), &ExponentVector::unit(b)) != 0
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Construct the directed enumeration for a rank.
pub fn directed_order(n: Rank) -> DirectedOrder {
    let roots = positive_roots(n);
    let idx: BTreeMap<PositiveRoot, usize> = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
    let mut indegree = vec![0usize; roots.len()];
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); roots.len()];
    for &a in &roots {
        for &b in &roots {
            if a != b && hom_dim(a, b) != 0 {
                edges[idx[&a]].push(idx[&b]);
                indegree[idx[&b]] += 1;
            }
        }
    }
    // Kahn's algorithm; the ready set is kept sorted so ties break
    // lexicographically on (i, j).
    let mut ready: std::collections::BTreeSet<PositiveRoot> = roots
        .iter()
        .filter(|r| indegree[idx[r]] == 0)
        .copied()
        .collect();
    let mut order = Vec::with_capacity(roots.len());
    while let Some(&next) = ready.iter().next() {
        ready.remove(&next);
        order.push(next);
        for &succ in &edges[idx[&next]] {
            indegree[succ] -= 1;
            if indegree[succ] == 0 {
                ready.insert(roots[succ]);
            }
        }
    }
    debug_assert_eq!(order.len(), roots.len());
    let positions = order.iter().enumerate().map(|(k, r)| (*r, k)).collect();
    DirectedOrder { n, roots: order, positions }
}

/// Additive function on isomorphism classes, given by its values on the
/// indecomposables. Also serves as the pluggable degree function downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    n: Rank,
    values: BTreeMap<PositiveRoot, i64>,
}

impl WeightFunction {
    pub fn from_fn(n: Rank, f: impl Fn(PositiveRoot) -> i64) -> Self {
        let values = positive_roots(n).into_iter().map(|r| (r, f(r))).collect();
        WeightFunction { n, values }
    }

    /// The canonical degree function `mu_0`: `(j - i + 1)(n - j + 1)`.
    pub fn mu0(n: Rank) -> Self {
        Self::from_fn(n, |r| (r.height() * (n.get() - r.j + 1)) as i64)
    }

    /// The length grading: every root vector has degree 1.
    pub fn length(n: Rank) -> Self {
        Self::from_fn(n, |_| 1)
    }

    /// `dim Hom(V, -)` for a representation class `V`.
    pub fn hom_function(n: Rank, v: &ExponentVector) -> Self {
        Self::from_fn(n, |r| hom_dim_reps(v, &ExponentVector::unit(r)) as i64)
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn value(&self, root: PositiveRoot) -> i64 {
        self.values.get(&root).copied().unwrap_or(0)
    }

    /// Additive extension to a representation class / monomial exponent.
    pub fn degree_of(&self, s: &ExponentVector) -> i64 {
        s.iter().map(|(root, m)| m as i64 * self.value(root)).sum()
    }

    /// Parse from a JSON object `{"i,j": value}`; absent roots default to 0.
    pub fn from_json(n: Rank, value: &serde_json::Value) -> Result<Self, QuiverError> {
        let obj = value.as_object().ok_or(RootError::Parse {
            what: "weight function",
            text: value.to_string(),
        })?;
        let mut values: BTreeMap<PositiveRoot, i64> =
            positive_roots(n).into_iter().map(|r| (r, 0)).collect();
        for (key, v) in obj {
            let root = PositiveRoot::parse_key(key)?;
            root.in_rank(n)?;
            let val = v.as_i64().ok_or(RootError::Parse {
                what: "weight function value",
                text: v.to_string(),
            })?;
            values.insert(root, val);
        }
        Ok(WeightFunction { n, values })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (root, v) in &self.values {
            map.insert(root.key(), serde_json::Value::from(*v));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Coefficients `a_V` with `w(M) = sum_V a_V dim Hom(V, M)`, solved by
/// forward substitution along the directed order, where the Hom matrix is
/// unitriangular. Everything stays in integers.
pub fn decompose_weight_function(w: &WeightFunction) -> BTreeMap<PositiveRoot, i64> {
    let order = directed_order(w.rank());
    let roots = order.roots();
    let mut coeffs: Vec<i64> = Vec::with_capacity(roots.len());
    for (l, &target) in roots.iter().enumerate() {
        let mut val = w.value(target);
        for (k, &source) in roots.iter().enumerate().take(l) {
            val -= coeffs[k] * hom_dim(source, target) as i64;
        }
        coeffs.push(val);
    }
    roots.iter().copied().zip(coeffs).collect()
}

/// Rebuild the additive function `sum_V a_V hom(V, -)` from coefficients.
pub fn compose_weight_function(n: Rank, coeffs: &BTreeMap<PositiveRoot, i64>) -> WeightFunction {
    WeightFunction::from_fn(n, |m| {
        coeffs
            .iter()
            .map(|(v, a)| a * hom_dim(*v, m) as i64)
            .sum()
    })
}

/// Classification of an additive weight function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WeightClass {
    /// `a_V >= 0` everywhere, `a_V >= 1` on each non-projective and on the
    /// simple projective.
    #[serde(rename = "admissible-strong")]
    AdmissibleStrong,
    /// `a_V >= 0` everywhere.
    #[serde(rename = "admissible")]
    Admissible,
    #[serde(rename = "not-admissible")]
    NotAdmissible,
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightClass::AdmissibleStrong => "admissible-strong",
            WeightClass::Admissible => "admissible",
            WeightClass::NotAdmissible => "not-admissible",
        })
    }
}

/// Classify a weight function and return the Hom-decomposition coefficients.
pub fn classify_weight_function(w: &WeightFunction) -> (WeightClass, BTreeMap<PositiveRoot, i64>) {
    let n = w.rank();
    let coeffs = decompose_weight_function(w);
    let admissible = coeffs.values().all(|&a| a >= 0);
    let strong = admissible
        && coeffs.iter().all(|(v, &a)| {
            let required = !is_projective(n, *v) || (v.i == n.get() && v.j == n.get());
            !required || a >= 1
        });
    let class = if strong {
        WeightClass::AdmissibleStrong
    } else if admissible {
        WeightClass::Admissible
    } else {
        WeightClass::NotAdmissible
    };
    (class, coeffs)
}

/// Degeneration order: `M <= N` iff `dim Hom(V, M) <= dim Hom(V, N)` for all
/// indecomposables `V`. Requires equal dimension vectors.
pub fn degeneration_leq(
    n: Rank,
    m: &ExponentVector,
    m2: &ExponentVector,
) -> Result<bool, QuiverError> {
    let (d, e) = (m.dimension_vector(n), m2.dimension_vector(n));
    if d != e {
        return Err(QuiverError::DimensionMismatch(d, e));
    }
    Ok(positive_roots(n).into_iter().all(|v| {
        let test = ExponentVector::unit(v);
        hom_dim_reps(&test, m) <= hom_dim_reps(&test, m2)
    }))
}

/// All representation classes with the given dimension vector.
pub fn classes_with_dimension(n: Rank, d: &[u64]) -> Vec<ExponentVector> {
    let roots = positive_roots(n);
    let mut out = Vec::new();
    let mut current = ExponentVector::zero();
    fn rec(
        roots: &[PositiveRoot],
        idx: usize,
        remaining: &mut Vec<u64>,
        current: &mut ExponentVector,
        out: &mut Vec<ExponentVector>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(current.clone());
            return;
        }
        if idx == roots.len() {
            return;
        }
        let root = roots[idx];
        let max_mult = (root.i..=root.j).map(|v| remaining[v - 1]).min().unwrap_or(0);
        for mult in (0..=max_mult).rev() {
            for v in root.i..=root.j {
                remaining[v - 1] -= mult;
            }
            current.set(root, mult as u32);
            rec(roots, idx + 1, remaining, current, out);
            current.set(root, 0);
            for v in root.i..=root.j {
                remaining[v - 1] += mult;
            }
        }
    }
    let mut remaining = d.to_vec();
    rec(&roots, 0, &mut remaining, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::ff_degree;
    use crate::roots::root_pairing;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn root(i: usize, j: usize) -> PositiveRoot {
        PositiveRoot::new(i, j).unwrap()
    }

    fn ev(pairs: &[(usize, usize, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().map(|&(i, j, m)| (root(i, j), m)))
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim(root(1, 1), root(1, 1)), 1);
        assert_eq!(hom_dim(root(2, 3), root(1, 2)), 1);
        assert_eq!(hom_dim(root(1, 2), root(2, 3)), 0);
    }

    #[test]
    fn hom_reps_diagonal() {
        let m = ev(&[(1, 1, 1), (2, 2, 1)]);
        assert_eq!(hom_dim_reps(&m, &m), 2);
    }

    #[test]
    fn euler_examples() {
        let n = rank(2);
        assert_eq!(euler_form(&[1, 0], &[0, 1]), -1);
        assert_eq!(euler_form(&[0, 1], &[1, 0]), 0);
        for n_val in 1..=8 {
            let nn = rank(n_val);
            for r in positive_roots(nn) {
                let d = interval_dim_vector(nn, r);
                assert_eq!(euler_form(&d, &d), 1, "<d,d> = 1 for intervals");
            }
        }
        let _ = n;
    }

    #[test]
    fn ext_examples() {
        let n = rank(2);
        // extensions of S_1 by S_2 glue to the interval M_{1,2}
        assert_eq!(ext_dim_reps(n, &ev(&[(1, 1, 1)]), &ev(&[(2, 2, 1)])), 1);
        assert_eq!(ext_dim_reps(n, &ev(&[(2, 2, 1)]), &ev(&[(1, 1, 1)])), 0);
        // rigidity of interval modules
        for n_val in 1..=8 {
            let nn = rank(n_val);
            for r in positive_roots(nn) {
                let u = ExponentVector::unit(r);
                assert_eq!(ext_dim_reps(nn, &u, &u), 0);
            }
        }
    }

    #[test]
    fn euler_identity_on_small_classes() {
        let n = rank(3);
        let classes = [
            ev(&[(1, 1, 1)]),
            ev(&[(1, 2, 1), (2, 3, 1)]),
            ev(&[(1, 3, 1), (2, 2, 2)]),
            ev(&[(2, 2, 1), (3, 3, 1)]),
        ];
        for m in &classes {
            for m2 in &classes {
                let hom = hom_dim_reps(m, m2) as i64;
                let ext = ext_dim_reps(n, m, m2) as i64;
                assert_eq!(hom - ext, euler_form(&m.dimension_vector(n), &m2.dimension_vector(n)));
            }
        }
    }

    #[test]
    fn pairing_is_symmetrized_euler_form() {
        for n_val in 1..=8 {
            let n = rank(n_val);
            for a in positive_roots(n) {
                for b in positive_roots(n) {
                    let d = interval_dim_vector(n, a);
                    let e = interval_dim_vector(n, b);
                    assert_eq!(
                        root_pairing(n, a, b).unwrap(),
                        euler_form(&d, &e) + euler_form(&e, &d)
                    );
                }
            }
        }
    }

    #[test]
    fn mu0_matches_degree_formula() {
        for n_val in 1..=8 {
            let n = rank(n_val);
            for r in positive_roots(n) {
                let expect = (r.height() * (n.get() - r.j + 1)) as u64;
                assert_eq!(mu0(n, &ExponentVector::unit(r)), expect);
            }
        }
        let n = rank(3);
        assert_eq!(mu0(n, &ExponentVector::unit(root(1, 2))), 4);
        assert_eq!(mu0(n, &ExponentVector::zero()), 0);
    }

    #[test]
    fn mu0_equals_ff_degree() {
        let n = rank(4);
        let classes = [
            ev(&[(1, 4, 2), (2, 2, 1)]),
            ev(&[(1, 1, 1), (2, 3, 3), (4, 4, 1)]),
            ExponentVector::zero(),
        ];
        for m in &classes {
            assert_eq!(mu0(n, m), ff_degree(m, n));
        }
    }

    #[test]
    fn ar_translates() {
        let n = rank(2);
        assert_eq!(ar_translate(n, root(1, 1)), Some(root(2, 2)));
        assert_eq!(ar_translate(n, root(1, 2)), None);
        assert_eq!(ar_cotranslate(root(1, 2)), None);
        assert_eq!(ar_cotranslate(root(2, 2)), Some(root(1, 1)));
    }

    #[test]
    fn ar_sequence_examples() {
        let n2 = rank(2);
        let seq = ar_sequence(n2, root(1, 1)).unwrap();
        assert_eq!(seq.start, root(2, 2));
        assert_eq!(seq.middle, ev(&[(1, 2, 1)]));
        let n3 = rank(3);
        let seq = ar_sequence(n3, root(1, 2)).unwrap();
        assert_eq!(seq.start, root(2, 3));
        assert_eq!(seq.middle, ev(&[(2, 2, 1), (1, 3, 1)]));
        assert!(ar_sequence(n3, root(1, 3)).is_err());
    }

    #[test]
    fn ar_sequences_are_exact_on_dimensions() {
        for n_val in 1..=8 {
            let n = rank(n_val);
            for u in positive_roots(n) {
                if is_projective(n, u) {
                    continue;
                }
                let seq = ar_sequence(n, u).unwrap();
                let mut outer = interval_dim_vector(n, seq.start);
                for (v, d) in outer.iter_mut().zip(interval_dim_vector(n, seq.end)) {
                    *v += d;
                }
                assert_eq!(outer, seq.middle.dimension_vector(n));
            }
        }
    }

    /// The defining identity of the AR data: for all indecomposables `V` and
    /// non-projective `U`, `hom(V, tau U) + hom(V, U) - hom(V, C) = [U = V]`.
    #[test]
    fn ar_hom_identity() {
        for n_val in 1..=6 {
            let n = rank(n_val);
            for u in positive_roots(n) {
                if is_projective(n, u) {
                    continue;
                }
                let seq = ar_sequence(n, u).unwrap();
                for v in positive_roots(n) {
                    let w_v = ExponentVector::unit(v);
                    let lhs = hom_dim_reps(&w_v, &ExponentVector::unit(seq.start)) as i64
                        + hom_dim_reps(&w_v, &ExponentVector::unit(u)) as i64
                        - hom_dim_reps(&w_v, &seq.middle) as i64;
                    assert_eq!(lhs, i64::from(u == v));
                }
            }
        }
    }

    #[test]
    fn directed_order_examples() {
        let order = directed_order(rank(1));
        assert_eq!(order.roots(), &[root(1, 1)]);
        let order = directed_order(rank(2));
        let pos = |r| order.position(r).unwrap();
        assert!(pos(root(2, 2)) < pos(root(1, 2)));
        assert!(pos(root(1, 2)) < pos(root(1, 1)));
    }

    #[test]
    fn directed_order_valid_up_to_rank_six() {
        for n_val in 1..=6 {
            assert!(directed_order(rank(n_val)).is_valid(), "rank {n_val}");
        }
    }

    #[test]
    fn decompose_mu0_is_all_ones() {
        for n_val in 1..=5 {
            let n = rank(n_val);
            let coeffs = decompose_weight_function(&WeightFunction::mu0(n));
            assert!(coeffs.values().all(|&a| a == 1), "rank {n_val}: {coeffs:?}");
        }
    }

    #[test]
    fn decompose_single_hom_function_is_indicator() {
        let n = rank(3);
        for v in positive_roots(n) {
            let w = WeightFunction::hom_function(n, &ExponentVector::unit(v));
            let coeffs = decompose_weight_function(&w);
            for (u, a) in coeffs {
                assert_eq!(a, i64::from(u == v));
            }
        }
    }

    /// The all-ones function is the Hom-function of the sum of the simples,
    /// so its coefficients are the indicator of the simple roots. (It is in
    /// particular admissible; see the ledgered analysis in the acceptance
    /// suite for the consequences.)
    #[test]
    fn decompose_constant_function() {
        for n_val in 2..=3 {
            let n = rank(n_val);
            let coeffs = decompose_weight_function(&WeightFunction::length(n));
            for (u, a) in coeffs {
                assert_eq!(a, i64::from(u.is_simple()), "rank {n_val}, root {u}");
            }
        }
    }

    #[test]
    fn classify_examples() {
        let n = rank(3);
        let (class, coeffs) = classify_weight_function(&WeightFunction::mu0(n));
        assert_eq!(class, WeightClass::AdmissibleStrong);
        assert!(coeffs.values().all(|&a| a == 1));

        // hom(P, -) for P the sum of all projectives: admissible, not strong
        let projectives = ExponentVector::from_pairs(
            positive_roots(n).into_iter().filter(|r| is_projective(n, *r)).map(|r| (r, 1)),
        );
        let w = WeightFunction::hom_function(n, &projectives);
        let (class, coeffs) = classify_weight_function(&w);
        assert_eq!(class, WeightClass::Admissible);
        for (u, a) in coeffs {
            assert_eq!(a, i64::from(is_projective(n, u)));
        }

        // a genuinely non-admissible function: negative on a simple root
        let w = WeightFunction::from_fn(n, |r| if r == root(3, 3) { -1 } else { 1 });
        assert_eq!(classify_weight_function(&w).0, WeightClass::NotAdmissible);
    }

    #[test]
    fn classify_constant_function() {
        // The all-ones degree is hom(S_1 + ... + S_n, -): admissible at every
        // rank, and strong exactly when every non-projective is simple (n <= 2).
        assert_eq!(
            classify_weight_function(&WeightFunction::length(rank(2))).0,
            WeightClass::AdmissibleStrong
        );
        assert_eq!(
            classify_weight_function(&WeightFunction::length(rank(3))).0,
            WeightClass::Admissible
        );
    }

    #[test]
    fn degeneration_examples() {
        let n = rank(2);
        let generic = ev(&[(1, 2, 1)]);
        let semisimple = ev(&[(1, 1, 1), (2, 2, 1)]);
        assert!(degeneration_leq(n, &generic, &generic).unwrap());
        assert!(degeneration_leq(n, &generic, &semisimple).unwrap());
        assert!(!degeneration_leq(n, &semisimple, &generic).unwrap());
        assert!(degeneration_leq(n, &generic, &ev(&[(1, 1, 2)])).is_err());
    }

    #[test]
    fn degeneration_is_a_partial_order() {
        let n = rank(3);
        let classes = classes_with_dimension(n, &[1, 2, 1]);
        for a in &classes {
            assert!(degeneration_leq(n, a, a).unwrap());
            for b in &classes {
                let ab = degeneration_leq(n, a, b).unwrap();
                let ba = degeneration_leq(n, b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b, "antisymmetry");
                }
                for c in &classes {
                    if ab && degeneration_leq(n, b, c).unwrap() {
                        assert!(degeneration_leq(n, a, c).unwrap(), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn classes_with_dimension_enumerates_all() {
        let n = rank(2);
        let classes = classes_with_dimension(n, &[1, 1]);
        assert_eq!(classes.len(), 2); // M_{1,2} and S_1 + S_2
        for c in &classes {
            assert_eq!(c.dimension_vector(n), vec![1, 1]);
        }
        let n3 = rank(3);
        let classes = classes_with_dimension(n3, &[1, 2, 1]);
        assert_eq!(classes.len(), 5);
    }
}
