//! Filtration analysis of the cyclic modules: graded dimensions, the
//! monomial-basis property, monomial annihilating ideals and their minimal
//! generators, and the Cartan-component independence check.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use super::echelon::Echelon;
use super::{ModuleError, ModuleVector, TensorModule, WedgeIndex};
use crate::polytope::{lattice_points, ExponentVector, Polytope};
use crate::quiver::{directed_order, DirectedOrder, WeightFunction};
use crate::roots::{positive_roots, weight_minus_roots_bound, weyl_dim, PositiveRoot, Rank, Weight};

/// Size limit for module computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleBudget {
    pub max_module_dim: u64,
}

impl Default for ModuleBudget {
    fn default() -> Self {
        ModuleBudget { max_module_dim: 3000 }
    }
}

/// Outcome of the filtration analysis for one weight and degree function.
#[derive(Debug, Clone, Serialize)]
pub struct GradedReport {
    pub lambda: String,
    /// Dimensions of the graded pieces `F_d / F_{d-1}`.
    pub degree_dims: BTreeMap<i64, u64>,
    /// The lattice points index a filtration-compatible basis.
    pub basis_ok: bool,
    /// Every monomial outside the lattice points lands in lower degree.
    pub monomial_ideal_ok: bool,
    /// Monomials whose image does not drop (empty when the ideal is monomial).
    pub violations: Vec<ExponentVector>,
    /// The directed order the monomial products use, recorded for
    /// reproducibility.
    pub order: Vec<String>,
}

fn bound_coords(lambda: &Weight) -> Vec<u64> {
    weight_minus_roots_bound(lambda)
        .coords()
        .iter()
        .map(|&c| u64::try_from(c).expect("dominant bound is nonnegative"))
        .collect()
}

fn in_box(s: &ExponentVector, bound: &[u64], n: Rank) -> bool {
    s.dimension_vector(n).iter().zip(bound).all(|(a, b)| a <= b)
}

/// Enumerate every monomial with `sum s(alpha) alpha <= bound` together with
/// its image `f^s v0`, sharing partial applications along the way. The
/// application order is the reversed directed order, matching
/// [`TensorModule::apply_monomial`].
fn enumerate_images(
    module: &TensorModule,
    order: &DirectedOrder,
    bound: &[u64],
    v0: &ModuleVector,
) -> Vec<(ExponentVector, ModuleVector)> {
    let roots: Vec<PositiveRoot> = order.roots().iter().rev().copied().collect();
    let mut remaining = bound.to_vec();
    let mut current = ExponentVector::zero();
    let mut out = Vec::new();
    fn rec(
        module: &TensorModule,
        roots: &[PositiveRoot],
        idx: usize,
        remaining: &mut Vec<u64>,
        current: &mut ExponentVector,
        image: &ModuleVector,
        out: &mut Vec<(ExponentVector, ModuleVector)>,
    ) {
        if idx == roots.len() {
            out.push((current.clone(), image.clone()));
            return;
        }
        let root = roots[idx];
        rec(module, roots, idx + 1, remaining, current, image, out);
        let mut img = image.clone();
        let mut mult = 0u32;
        while (root.i..=root.j).all(|v| remaining[v - 1] > 0) {
            for v in root.i..=root.j {
                remaining[v - 1] -= 1;
            }
            img = module.apply_root(root, &img);
            mult += 1;
            current.set(root, mult);
            rec(module, roots, idx + 1, remaining, current, &img, out);
        }
        for v in root.i..=root.j {
            remaining[v - 1] += mult as u64;
        }
        current.set(root, 0);
    }
    rec(module, &roots, 0, &mut remaining, &mut current, v0, &mut out);
    out
}

/// Full sweep: graded dimensions, compatible-basis check, and the monomial
/// ideal check for the degree function `w`.
pub fn analyze(
    lambda: &Weight,
    w: &WeightFunction,
    budget: &ModuleBudget,
) -> Result<GradedReport, ModuleError> {
    let n = lambda.rank();
    assert_eq!(w.rank(), n, "degree function must match the weight's rank");
    let dim = weyl_dim(lambda)
        .to_u64()
        .filter(|d| *d <= budget.max_module_dim)
        .ok_or(ModuleError::BudgetExceeded {
            dim: u64::MAX,
            limit: budget.max_module_dim,
        })?;
    let module = TensorModule::for_weight(lambda);
    let order = directed_order(n);
    let v0 = module.highest_vector();
    let bound = bound_coords(lambda);
    let points: HashSet<ExponentVector> = lattice_points(lambda).into_iter().collect();
    let mut basis_ok = points.iter().all(|s| in_box(s, &bound, n));

    let mut by_degree: BTreeMap<i64, Vec<(ExponentVector, super::echelon::SparseRow)>> =
        BTreeMap::new();
    for (s, img) in enumerate_images(&module, &order, &bound, &v0) {
        let row = module.encode_vector(&img);
        by_degree.entry(w.degree_of(&s)).or_default().push((s, row));
    }
    for bucket in by_degree.values_mut() {
        bucket.sort_by(|a, b| a.0.cmp(&b.0));
    }

    let mut ech_all = Echelon::new();
    let mut ech_points = Echelon::new();
    let mut points_seen = 0usize;
    let mut violations = Vec::new();
    let mut degree_dims = BTreeMap::new();
    let mut prev_rank = 0usize;
    for (deg, bucket) in &by_degree {
        // monomials outside S(lambda) must already lie in F_{d-1}
        for (s, row) in bucket {
            if !points.contains(s) && !ech_all.reduces_to_zero(row) {
                violations.push(s.clone());
            }
        }
        for (s, row) in bucket {
            ech_all.insert(row.clone());
            if points.contains(s) {
                ech_points.insert(row.clone());
                points_seen += 1;
            }
        }
        // compatible-basis condition at this filtration step
        if ech_points.rank() != points_seen || ech_points.rank() != ech_all.rank() {
            basis_ok = false;
        }
        if ech_all.rank() > prev_rank {
            degree_dims.insert(*deg, (ech_all.rank() - prev_rank) as u64);
            prev_rank = ech_all.rank();
        }
    }
    if ech_all.rank() as u64 != dim || points_seen != points.len() {
        basis_ok = false;
    }
    Ok(GradedReport {
        lambda: lambda.to_string(),
        degree_dims,
        basis_ok,
        monomial_ideal_ok: violations.is_empty(),
        violations,
        order: order.roots().iter().map(|r| r.key()).collect(),
    })
}

/// Do the lattice-point monomials give a filtration-compatible basis?
pub fn verify_basis(
    lambda: &Weight,
    w: &WeightFunction,
    budget: &ModuleBudget,
) -> Result<bool, ModuleError> {
    Ok(analyze(lambda, w, budget)?.basis_ok)
}

/// Is the annihilating ideal of the associated graded module monomial?
pub fn verify_monomial_ideal(
    lambda: &Weight,
    w: &WeightFunction,
    budget: &ModuleBudget,
) -> Result<GradedReport, ModuleError> {
    analyze(lambda, w, budget)
}

/// Dimension of `F_d = span{ f^s v : deg(s) <= d }`.
pub fn filtration_dimension(
    lambda: &Weight,
    d: i64,
    w: &WeightFunction,
    budget: &ModuleBudget,
) -> Result<u64, ModuleError> {
    let n = lambda.rank();
    weyl_dim(lambda)
        .to_u64()
        .filter(|dim| *dim <= budget.max_module_dim)
        .ok_or(ModuleError::BudgetExceeded { dim: u64::MAX, limit: budget.max_module_dim })?;
    let module = TensorModule::for_weight(lambda);
    let order = directed_order(n);
    let v0 = module.highest_vector();
    let bound = bound_coords(lambda);
    let mut ech = Echelon::new();
    for (s, img) in enumerate_images(&module, &order, &bound, &v0) {
        if w.degree_of(&s) <= d {
            ech.insert(module.encode_vector(&img));
        }
    }
    Ok(ech.rank() as u64)
}

/// The exponent vector whose monomial sends the highest weight vector of a
/// fundamental module to (a scalar multiple of) the given wedge basis
/// vector, of minimal degree among all such monomials: pair the missing
/// indices `j_1 < j_2 < ...` with the large entries in decreasing order.
pub fn fundamental_basis_formula(
    idx: &WedgeIndex,
    _n: Rank,
) -> Result<ExponentVector, ModuleError> {
    let k = idx.k();
    let entries = idx.indices();
    let missing: Vec<usize> = (1..=k)
        .filter(|t| !entries.contains(&(*t as u8)))
        .collect();
    let mut out = ExponentVector::zero();
    for (t, &j_t) in missing.iter().enumerate() {
        let top = entries[k - 1 - t] as usize;
        debug_assert!(top > k);
        let root = PositiveRoot::new(j_t, top - 1)
            .map_err(|e| ModuleError::InvalidIndex(e.to_string()))?;
        out.set(root, out.get(root) + 1);
    }
    Ok(out)
}

/// Are the images of the summed lattice points independent in
/// `V(lambda) (x) V(mu)`, in number equal to `dim V(lambda + mu)`?
pub fn cartan_component_check(
    lambda: &Weight,
    mu: &Weight,
    budget: &ModuleBudget,
) -> Result<bool, ModuleError> {
    let n = lambda.rank();
    assert_eq!(mu.rank(), n);
    let target_dim = weyl_dim(&lambda.add(mu))
        .to_u64()
        .filter(|d| *d <= budget.max_module_dim)
        .ok_or(ModuleError::BudgetExceeded { dim: u64::MAX, limit: budget.max_module_dim })?;
    let module = TensorModule::tensor(
        &TensorModule::for_weight(lambda),
        &TensorModule::for_weight(mu),
    );
    let order = directed_order(n);
    let v0 = module.highest_vector();
    let mut sumset: BTreeSet<ExponentVector> = BTreeSet::new();
    for a in lattice_points(lambda) {
        for b in lattice_points(mu) {
            sumset.insert(a.add(&b));
        }
    }
    let mut ech = Echelon::new();
    for s in &sumset {
        ech.insert(module.encode_vector(&module.apply_monomial(s, &v0, &order)));
    }
    Ok(ech.rank() == sumset.len() && sumset.len() as u64 == target_dim)
}

/// Minimal monomial generators of the annihilating ideal: the minimal
/// elements, under divisibility, of the complement of the lattice points.
/// Every such generator is a lattice point plus one unit, so the search
/// never needs an enumeration box.
pub fn ideal_generators(lambda: &Weight) -> Vec<ExponentVector> {
    let n = lambda.rank();
    let polytope = Polytope::new(lambda);
    let points = polytope.lattice_points();
    let roots = positive_roots(n);
    let mut gens: BTreeSet<ExponentVector> = BTreeSet::new();
    for t in &points {
        for &root in &roots {
            let candidate = t.add(&ExponentVector::unit(root));
            if polytope.contains(&candidate) {
                continue;
            }
            let minimal = candidate.iter().all(|(b, _)| {
                let down = candidate.minus_unit(b).expect("support");
                polytope.contains(&down)
            });
            if minimal {
                gens.insert(candidate);
            }
        }
    }
    gens.into_iter().collect()
}

/// Brute-force weight multiplicities: the rank of the span of all monomial
/// images with a fixed root-coordinate sum. Independent of any filtration.
pub fn weight_multiplicities(lambda: &Weight) -> BTreeMap<Vec<u64>, u64> {
    let n = lambda.rank();
    let module = TensorModule::for_weight(lambda);
    let order = directed_order(n);
    let v0 = module.highest_vector();
    let bound = bound_coords(lambda);
    let mut groups: BTreeMap<Vec<u64>, Echelon> = BTreeMap::new();
    for (s, img) in enumerate_images(&module, &order, &bound, &v0) {
        groups
            .entry(s.dimension_vector(n))
            .or_default()
            .insert(module.encode_vector(&img));
    }
    groups
        .into_iter()
        .filter(|(_, ech)| ech.rank() > 0)
        .map(|(k, ech)| (k, ech.rank() as u64))
        .collect()
}
