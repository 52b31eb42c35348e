//! Finite-field representations of the equioriented quiver, Krull-Schmidt
//! classification by composite ranks, and brute-force subrepresentation
//! counting. This is the oracle behind every Hall polynomial.

use super::gf::{subspaces, GfMatrix, Subspace};
use super::{HallBudget, HallError};
use crate::polytope::ExponentVector;
use crate::roots::{PositiveRoot, Rank};

pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// A representation of the quiver `1 -> 2 -> ... -> n` over GF(p):
/// one matrix per arrow, of shape `dims[v+1] x dims[v]`.
#[derive(Debug, Clone)]
pub struct FiniteFieldRep {
    pub p: u64,
    pub dims: Vec<usize>,
    pub maps: Vec<GfMatrix>,
}

impl FiniteFieldRep {
    pub fn new(p: u64, dims: Vec<usize>, maps: Vec<GfMatrix>) -> Self {
        assert!(PRIMES.contains(&p), "p must be one of the working primes");
        assert_eq!(maps.len() + 1, dims.len().max(1));
        for (v, m) in maps.iter().enumerate() {
            assert_eq!(m.cols, dims[v]);
            assert_eq!(m.rows, dims[v + 1]);
            assert_eq!(m.p, p);
        }
        FiniteFieldRep { p, dims, maps }
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.iter().map(|&d| d as u64).sum()
    }
}

/// The fixed model of a representation class: the direct sum of interval
/// representations with identity arrow maps.
pub fn rep_model(n: Rank, class: &ExponentVector, p: u64) -> FiniteFieldRep {
    let nv = n.get();
    // summands in canonical order, one entry per copy
    let mut summands: Vec<PositiveRoot> = Vec::new();
    for (root, mult) in class.iter() {
        for _ in 0..mult {
            summands.push(root);
        }
    }
    // slot of each summand at each vertex
    let mut slots: Vec<Vec<Option<usize>>> = vec![Vec::new(); summands.len()];
    let mut dims = vec![0usize; nv];
    for (s, root) in summands.iter().enumerate() {
        slots[s] = (1..=nv)
            .map(|v| {
                if v >= root.i && v <= root.j {
                    let slot = dims[v - 1];
                    dims[v - 1] += 1;
                    Some(slot)
                } else {
                    None
                }
            })
            .collect();
    }
    let mut maps = Vec::with_capacity(nv.saturating_sub(1));
    for v in 0..nv.saturating_sub(1) {
        let mut m = GfMatrix::zero(p, dims[v + 1], dims[v]);
        for slot in &slots {
            if let (Some(src), Some(dst)) = (slot[v], slot[v + 1]) {
                m.set(dst, src, 1);
            }
        }
        maps.push(m);
    }
    FiniteFieldRep::new(p, dims, maps)
}

/// Multiplicities of each interval summand, recovered from the ranks
/// `r(i,j)` of the composite maps vertex `i` -> vertex `j` by inclusion-
/// exclusion: `m(i,j) = r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)`.
pub fn classify_rep(rep: &FiniteFieldRep) -> ExponentVector {
    let nv = rep.dims.len();
    let r = |i: usize, j: usize| -> i64 {
        if i == 0 || j > nv {
            return 0;
        }
        // rank of the composite X_i -> X_j
        let mut composite = GfMatrix::identity(rep.p, rep.dims[i - 1]);
        for v in i..j {
            composite = rep.maps[v - 1].mul(&composite);
        }
        composite.rank() as i64
    };
    let mut out = ExponentVector::zero();
    for i in 1..=nv {
        for j in i..=nv {
            let m = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            debug_assert!(m >= 0);
            if m > 0 {
                out.set(PositiveRoot { i, j }, m as u32);
            }
        }
    }
    out
}

/// Number of subrepresentations `U` of the model of `x` over GF(p) with
/// `U` isomorphic to `sub` and `X/U` isomorphic to `quot`.
pub fn subrep_count(
    n: Rank,
    x: &ExponentVector,
    sub: &ExponentVector,
    quot: &ExponentVector,
    p: u64,
    budget: &HallBudget,
) -> Result<u64, HallError> {
    let dx = x.dimension_vector(n);
    let dn = sub.dimension_vector(n);
    let dm = quot.dimension_vector(n);
    if dx.iter().zip(dn.iter().zip(&dm)).any(|(&a, (&b, &c))| a != b + c) {
        return Ok(0);
    }
    let total: u64 = dx.iter().sum();
    if total > budget.max_total_dim {
        return Err(HallError::BudgetExceeded { total, limit: budget.max_total_dim });
    }
    if p > budget.max_prime || !PRIMES.contains(&p) {
        return Err(HallError::PrimeOutOfRange(p));
    }
    let model = rep_model(n, x, p);
    let nv = n.get();
    // subspace candidates per vertex
    let candidates: Vec<Vec<Subspace>> = (0..nv)
        .map(|v| subspaces(p, dx[v] as usize, dn[v] as usize))
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(nv);
    let mut count = 0u64;
    descend(&model, sub, quot, &candidates, &mut chosen, &mut count);
    Ok(count)
}

fn descend(
    model: &FiniteFieldRep,
    sub: &ExponentVector,
    quot: &ExponentVector,
    candidates: &[Vec<Subspace>],
    chosen: &mut Vec<usize>,
    count: &mut u64,
) {
    let v = chosen.len();
    if v == candidates.len() {
        let spaces: Vec<&Subspace> = chosen.iter().zip(candidates).map(|(&c, cs)| &cs[c]).collect();
        if classify_induced_sub(model, &spaces) == *sub && classify_quotient(model, &spaces) == *quot {
            *count += 1;
        }
        return;
    }
    'next: for (c, cand) in candidates[v].iter().enumerate() {
        // arrow-stability against the previously chosen space
        if v > 0 {
            let prev = &candidates[v - 1][chosen[v - 1]];
            let arrow = &model.maps[v - 1];
            for r in 0..prev.dim() {
                let image = arrow.apply(prev.basis.row(r));
                if !cand.contains(&image) {
                    continue 'next;
                }
            }
        }
        chosen.push(c);
        descend(model, sub, quot, candidates, chosen, count);
        chosen.pop();
    }
}

/// Classify the stable tuple of subspaces as a representation.
fn classify_induced_sub(model: &FiniteFieldRep, spaces: &[&Subspace]) -> ExponentVector {
    let nv = model.dims.len();
    let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let mut maps = Vec::with_capacity(nv.saturating_sub(1));
    for v in 0..nv.saturating_sub(1) {
        let mut m = GfMatrix::zero(model.p, dims[v + 1], dims[v]);
        for r in 0..dims[v] {
            let image = model.maps[v].apply(spaces[v].basis.row(r));
            let (rem, coords) = spaces[v + 1].reduce(&image);
            debug_assert!(rem.iter().all(|&x| x == 0), "tuple must be arrow-stable");
            for (dst, &cv) in coords.iter().enumerate() {
                m.set(dst, r, cv);
            }
        }
        maps.push(m);
    }
    classify_rep(&FiniteFieldRep::new(model.p, dims, maps))
}

/// Classify the quotient of the model by the stable tuple of subspaces,
/// using the non-pivot coordinates as a basis of each quotient space.
fn classify_quotient(model: &FiniteFieldRep, spaces: &[&Subspace]) -> ExponentVector {
    let nv = model.dims.len();
    let complements: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement_columns()).collect();
    let dims: Vec<usize> = complements.iter().map(|c| c.len()).collect();
    let mut maps = Vec::with_capacity(nv.saturating_sub(1));
    for v in 0..nv.saturating_sub(1) {
        let mut m = GfMatrix::zero(model.p, dims[v + 1], dims[v]);
        for (src, &col) in complements[v].iter().enumerate() {
            let mut e = vec![0u64; model.dims[v]];
            e[col] = 1;
            let image = model.maps[v].apply(&e);
            let (rem, _) = spaces[v + 1].reduce(&image);
            for (dst, &qcol) in complements[v + 1].iter().enumerate() {
                m.set(dst, src, rem[qcol]);
            }
        }
        maps.push(m);
    }
    classify_rep(&FiniteFieldRep::new(model.p, dims, maps))
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn classify_zero_and_identity_maps() {
        let n = rank(2);
        // zero maps, dims (1,1): semisimple S_1 + S_2
        let rep = FiniteFieldRep::new(2, vec![1, 1], vec![GfMatrix::zero(2, 1, 1)]);
        assert_eq!(classify_rep(&rep), ev(&[(1, 1, 1), (2, 2, 1)]));
        // identity map: the interval M_{1,2}
        let rep = FiniteFieldRep::new(2, vec![1, 1], vec![GfMatrix::identity(2, 1)]);
        assert_eq!(classify_rep(&rep), ev(&[(1, 2, 1)]));
        let _ = n;
    }

    #[test]
    fn classify_round_trips_through_model() {
        let n = rank(3);
        for class in [
            ev(&[(1, 3, 1), (2, 2, 1)]),
            ev(&[(1, 1, 2), (2, 3, 1)]),
            ev(&[(1, 2, 1), (2, 3, 1), (3, 3, 1)]),
        ] {
            for p in [2, 3, 5] {
                assert_eq!(classify_rep(&rep_model(n, &class, p)), class);
            }
        }
    }

    #[test]
    fn classify_random_rep_preserves_dimension_vector() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let n = rank(3);
        for _ in 0..50 {
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            let maps: Vec<GfMatrix> = (0..2)
                .map(|v| {
                    let mut m = GfMatrix::zero(p, dims[v + 1], dims[v]);
                    for r in 0..m.rows {
                        for c in 0..m.cols {
                            m.set(r, c, rng.gen_range(0..p));
                        }
                    }
                    m
                })
                .collect();
            let rep = FiniteFieldRep::new(p, dims.clone(), maps);
            let class = classify_rep(&rep);
            let dv: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
            assert_eq!(class.dimension_vector(n), dv);
        }
    }

    #[test]
    fn subrep_counts_for_the_interval() {
        let n = rank(2);
        let budget = HallBudget::default();
        let x = ev(&[(1, 2, 1)]);
        for p in [2, 3, 5, 7] {
            // unique submodule S_2 with quotient S_1
            assert_eq!(
                subrep_count(n, &x, &ev(&[(2, 2, 1)]), &ev(&[(1, 1, 1)]), p, &budget).unwrap(),
                1
            );
            // no submodule S_1 with quotient S_2
            assert_eq!(
                subrep_count(n, &x, &ev(&[(1, 1, 1)]), &ev(&[(2, 2, 1)]), p, &budget).unwrap(),
                0
            );
        }
    }

    #[test]
    fn subrep_counts_for_the_semisimple() {
        let n = rank(2);
        let budget = HallBudget::default();
        let x = ev(&[(1, 1, 1), (2, 2, 1)]);
        for p in [2, 3] {
            assert_eq!(
                subrep_count(n, &x, &ev(&[(2, 2, 1)]), &ev(&[(1, 1, 1)]), p, &budget).unwrap(),
                1
            );
            // the split sequence exists in both orders here
            assert_eq!(
                subrep_count(n, &x, &ev(&[(1, 1, 1)]), &ev(&[(2, 2, 1)]), p, &budget).unwrap(),
                1
            );
        }
        // incompatible dimension vectors count zero
        assert_eq!(
            subrep_count(n, &x, &ev(&[(1, 1, 1)]), &ev(&[(1, 1, 1)]), 2, &budget).unwrap(),
            0
        );
    }

    #[test]
    fn subspace_count_of_square_simple() {
        // X = S_1^2, sub = quot = S_1: the count is the number of lines p + 1
        let n = rank(2);
        let budget = HallBudget::default();
        let x = ev(&[(1, 1, 2)]);
        let s = ev(&[(1, 1, 1)]);
        for p in [2u64, 3, 5] {
            assert_eq!(subrep_count(n, &x, &s, &s, p, &budget).unwrap(), p + 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let n = rank(2);
        let budget = HallBudget { max_total_dim: 3, max_prime: 13 };
        let x = ev(&[(1, 2, 2)]);
        let s = ev(&[(1, 1, 1), (2, 2, 1)]);
        assert!(matches!(
            subrep_count(n, &x, &s, &s, 2, &budget),
            Err(HallError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn split_case_with_no_homs_or_exts() {
        // X = M_{2,2} + M_{1,3} at n = 3: no Homs or Exts either way, so the
        // split subrepresentation is unique in both orders.
        let n = rank(3);
        let budget = HallBudget::default();
        let x = ev(&[(2, 2, 1), (1, 3, 1)]);
        for (s, q) in [
            (ev(&[(2, 2, 1)]), ev(&[(1, 3, 1)])),
            (ev(&[(1, 3, 1)]), ev(&[(2, 2, 1)])),
        ] {
            for p in [2, 3, 5] {
                assert_eq!(subrep_count(n, &x, &s, &q, p, &budget).unwrap(), 1);
            }
        }
    }
}
