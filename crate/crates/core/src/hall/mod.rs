//! The Hall algebra of the equioriented type-A quiver over `C(q)`, realised
//! by exact subrepresentation counting over small prime fields plus
//! polynomial interpolation.
//!
//! Multiplication follows `u_M u_N = q^{<dim M, dim N>} sum_X F^X_{M,N}(q^2) u_X`,
//! and the PBW basis element of a class `M` is `q^{dim End(M) - dim M} u_M`.
//! The substitution `u -> q^2` is a named step so the convention stays
//! auditable end to end.

mod finite;
mod gf;
mod interp;

pub use finite::{classify_rep, rep_model, subrep_count, FiniteFieldRep, PRIMES};
pub use gf::GfMatrix;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::{q_factorial, ArithError, LaurentPoly};
use crate::polytope::ExponentVector;
use crate::quiver::{
    classes_with_dimension, directed_order, ext_dim_reps, hom_dim_reps, mu0, DirectedOrder,
    WeightFunction,
};
use crate::roots::{root_pairing, PositiveRoot, Rank};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HallError {
    #[error("total dimension {total} exceeds the enumeration budget {limit}")]
    BudgetExceeded { total: u64, limit: u64 },
    #[error("prime {0} is outside the working set")]
    PrimeOutOfRange(u64),
    #[error("no polynomial of degree <= 6 matches the counts (degree bound exhausted)")]
    DegreeBound,
    #[error("verification at the held-out prime failed")]
    Verification,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Enumeration limits for subrepresentation counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallBudget {
    pub max_total_dim: u64,
    pub max_prime: u64,
}

impl Default for HallBudget {
    fn default() -> Self {
        HallBudget { max_total_dim: 6, max_prime: 13 }
    }
}

/// Finitely supported linear combination of representation classes with
/// Laurent-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HallElement {
    terms: BTreeMap<ExponentVector, LaurentPoly>,
}

impl HallElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `u_{[0]}`.
    pub fn one() -> Self {
        Self::from_class(ExponentVector::zero())
    }

    pub fn from_class(class: ExponentVector) -> Self {
        Self::term(class, LaurentPoly::one())
    }

    pub fn term(class: ExponentVector, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(class, &coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, class: &ExponentVector) -> LaurentPoly {
        self.terms.get(class).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, class: ExponentVector, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let updated = e.get() + coeff;
                if updated.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = updated;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (class, coeff) in other.iter() {
            out.add_term(class.clone(), coeff);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (class, coeff) in other.iter() {
            out.add_term(class.clone(), &-coeff);
        }
        out
    }

    pub fn scale(&self, factor: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (class, coeff) in self.iter() {
            out.add_term(class.clone(), &(coeff * factor));
        }
        out
    }

    /// Exact division of every coefficient; `None` if any fails.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<Self> {
        let mut out = Self::zero();
        for (class, coeff) in self.iter() {
            out.add_term(class.clone(), &coeff.div_exact(divisor)?);
        }
        Some(out)
    }

    /// Render each term as `coeff * u[{...}]`, deterministic order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(class, coeff)| {
                let c = coeff.to_string();
                let c = if coeff.terms().count() > 1 || c.starts_with('-') {
                    format!("({c})")
                } else {
                    c
                };
                format!("{c} * u[{}]", class.to_json())
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for HallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

type PairKey = (ExponentVector, ExponentVector);
type Expansion = Arc<Vec<(ExponentVector, LaurentPoly)>>;

/// Shared state for Hall computations at a fixed rank: the directed order,
/// budgets, and memo tables for products and Hall polynomials. Values handed
/// out are immutable; the memo tables take a lock only to insert or read.
pub struct HallContext {
    n: Rank,
    order: DirectedOrder,
    budget: HallBudget,
    product_memo: Mutex<HashMap<PairKey, Expansion>>,
    poly_memo: Mutex<HashMap<(ExponentVector, ExponentVector, ExponentVector), LaurentPoly>>,
}

impl HallContext {
    pub fn new(n: Rank) -> Self {
        Self::with_budget(n, HallBudget::default())
    }

    pub fn with_budget(n: Rank, budget: HallBudget) -> Self {
        HallContext {
            n,
            order: directed_order(n),
            budget,
            product_memo: Mutex::new(HashMap::new()),
            poly_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn order(&self) -> &DirectedOrder {
        &self.order
    }

    pub fn budget(&self) -> HallBudget {
        self.budget
    }

    /// Hall polynomial `F^x_{m,sub}(u)`: the count of subrepresentations of
    /// `x` isomorphic to `sub` with quotient `m`, as a polynomial in the
    /// field size. Interpolated from `D + 1` primes and verified at one more;
    /// the degree bound starts at `ext(sub, m) + 1` and escalates by 2.
    pub fn hall_polynomial(
        &self,
        m: &ExponentVector,
        sub: &ExponentVector,
        x: &ExponentVector,
    ) -> Result<LaurentPoly, HallError> {
        let key = (m.clone(), sub.clone(), x.clone());
        if let Some(poly) = self.poly_memo.lock().unwrap().get(&key) {
            return Ok(poly.clone());
        }
        let mut degree = ext_dim_reps(self.n, sub, m) as usize + 1;
        let mut counts: Vec<(u64, u64)> = Vec::new();
        let poly = loop {
            if degree > 6 || degree + 2 > PRIMES.len() {
                return Err(HallError::DegreeBound);
            }
            while counts.len() < degree + 2 {
                let p = PRIMES[counts.len()];
                counts.push((p, subrep_count(self.n, x, sub, m, p, &self.budget)?));
            }
            let fit = interp::lagrange_integer(&counts[..degree + 1]);
            if let Some(poly) = fit {
                let (held_p, held_count) = counts[degree + 1];
                if poly.eval_integer(&BigInt::from(held_p)) == BigInt::from(held_count) {
                    break poly;
                }
            }
            degree += 2;
        };
        self.poly_memo.lock().unwrap().insert(key, poly.clone());
        Ok(poly)
    }

    /// Expansion of `u_m * u_sub` in the `u` basis.
    fn expand_product(&self, m: &ExponentVector, sub: &ExponentVector) -> Result<Expansion, HallError> {
        let key = (m.clone(), sub.clone());
        if let Some(exp) = self.product_memo.lock().unwrap().get(&key) {
            return Ok(exp.clone());
        }
        let dm = m.dimension_vector(self.n);
        let dn = sub.dimension_vector(self.n);
        let twist = LaurentPoly::q_pow(crate::quiver::euler_form(&dm, &dn));
        let total: Vec<u64> = dm.iter().zip(&dn).map(|(a, b)| a + b).collect();
        let mut expansion = Vec::new();
        for x in classes_with_dimension(self.n, &total) {
            let f = self.hall_polynomial(m, sub, &x)?;
            if f.is_zero() {
                continue;
            }
            // the named u -> q^2 substitution
            let f_q2 = f.substitute_power(2);
            expansion.push((x, &twist * &f_q2));
        }
        let expansion = Arc::new(expansion);
        self.product_memo.lock().unwrap().insert(key, expansion.clone());
        Ok(expansion)
    }

    /// Bilinear Hall multiplication.
    pub fn mult(&self, a: &HallElement, b: &HallElement) -> Result<HallElement, HallError> {
        let mut out = HallElement::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let coeff = ca * cb;
                for (x, cx) in self.expand_product(ma, mb)?.iter() {
                    out.add_term(x.clone(), &(&coeff * cx));
                }
            }
        }
        Ok(out)
    }

    /// `q`-power normalising `u_m` to the PBW basis element `F_m`.
    pub fn pbw_exponent(&self, m: &ExponentVector) -> i64 {
        let total_dim: u64 = m.dimension_vector(self.n).iter().sum();
        hom_dim_reps(m, m) as i64 - total_dim as i64
    }

    /// `F_m = q^{dim End(m) - dim m} u_m`.
    pub fn pbw_element(&self, m: &ExponentVector) -> HallElement {
        HallElement::term(m.clone(), LaurentPoly::q_pow(self.pbw_exponent(m)))
    }

    /// PBW generator of a single positive root.
    pub fn pbw_root(&self, root: PositiveRoot) -> HallElement {
        self.pbw_element(&ExponentVector::unit(root))
    }

    /// Rewrite in the PBW basis: divide each `u` coefficient by the
    /// normalisation power of `q`.
    pub fn to_pbw_coefficients(&self, elt: &HallElement) -> Vec<(ExponentVector, LaurentPoly)> {
        elt.iter()
            .map(|(class, coeff)| {
                let shifted = coeff * &LaurentPoly::q_pow(-self.pbw_exponent(class));
                (class.clone(), shifted)
            })
            .collect()
    }

    /// `F_m` equals the ordered product of divided powers
    /// `F_{beta_1}^{(m_1)} ... F_{beta_N}^{(m_N)}` along the directed order.
    pub fn divided_power_check(&self, m: &ExponentVector) -> Result<bool, HallError> {
        let mut product = HallElement::one();
        for &root in self.order.roots() {
            let mult = m.get(root);
            if mult == 0 {
                continue;
            }
            let f = self.pbw_root(root);
            let mut power = HallElement::one();
            for _ in 0..mult {
                power = self.mult(&power, &f)?;
            }
            let divided = power
                .div_exact(&q_factorial(mult as u64))
                .ok_or(ArithError::InexactDivision)?;
            product = self.mult(&product, &divided)?;
        }
        Ok(product == self.pbw_element(m))
    }

    /// Straightening data for a pair of positions `k < l` in the directed
    /// order: the expansion of `F_l F_k - q^{(beta_k, beta_l)} F_k F_l` in
    /// the PBW basis, plus the checks of the three structural claims.
    pub fn straighten_pair(&self, k: usize, l: usize) -> Result<StraightenReport, HallError> {
        assert!(k < l && l < self.order.len(), "need positions k < l in the order");
        let beta_k = self.order.roots()[k];
        let beta_l = self.order.roots()[l];
        let f_k = self.pbw_root(beta_k);
        let f_l = self.pbw_root(beta_l);
        let lhs = self.mult(&f_l, &f_k)?;
        let pairing = root_pairing(self.n, beta_k, beta_l).expect("roots in rank");
        let leading = self.mult(&f_k, &f_l)?.scale(&LaurentPoly::q_pow(pairing));
        let difference = lhs.sub(&leading);
        let corrections = self.to_pbw_coefficients(&difference);

        let split = ExponentVector::unit(beta_k).add(&ExponentVector::unit(beta_l));
        let split_cancelled = corrections.iter().all(|(class, _)| *class != split);
        let support_ok = corrections.iter().all(|(class, _)| {
            class.iter().all(|(root, _)| {
                let pos = self.order.position(root).expect("root in order");
                pos > k && pos < l
            })
        });
        let target = mu0(self.n, &ExponentVector::unit(beta_k)) + mu0(self.n, &ExponentVector::unit(beta_l));
        let degree_drop_ok = corrections
            .iter()
            .all(|(class, _)| mu0(self.n, class) < target);
        Ok(StraightenReport {
            k,
            l,
            beta_k,
            beta_l,
            pairing,
            corrections,
            split_cancelled,
            support_ok,
            degree_drop_ok,
        })
    }

    /// Straightening reports for every pair `k < l`.
    pub fn straighten_all(&self) -> Result<Vec<StraightenReport>, HallError> {
        let mut out = Vec::new();
        for k in 0..self.order.len() {
            for l in k + 1..self.order.len() {
                out.push(self.straighten_pair(k, l)?);
            }
        }
        Ok(out)
    }

    /// Does the filtration by `w` turn the straightening of the pair
    /// `(k, l)` into an exact `q`-commutation in the associated graded
    /// algebra? True when every correction term drops strictly in `w`-degree.
    pub fn graded_pair_ok(&self, k: usize, l: usize, w: &WeightFunction) -> Result<bool, HallError> {
        let report = self.straighten_pair(k, l)?;
        let target = w.degree_of(&ExponentVector::unit(report.beta_k))
            + w.degree_of(&ExponentVector::unit(report.beta_l));
        Ok(report
            .corrections
            .iter()
            .all(|(class, _)| w.degree_of(class) < target))
    }

    /// Check the graded `q`-commutation relations for every pair. The
    /// conclusion is guaranteed for strongly admissible `w`; the check
    /// accepts any weight function and reports the failing pairs.
    pub fn graded_relation_check(&self, w: &WeightFunction) -> Result<GradedRelationReport, HallError> {
        let mut failing = Vec::new();
        for k in 0..self.order.len() {
            for l in k + 1..self.order.len() {
                if !self.graded_pair_ok(k, l, w)? {
                    failing.push((self.order.roots()[k], self.order.roots()[l]));
                }
            }
        }
        Ok(GradedRelationReport { ok: failing.is_empty(), failing_pairs: failing })
    }

    /// Scan all short exact sequences with total dimension up to
    /// `max_total_dim` (detected by a positive subrepresentation count over
    /// GF(2)) and check subadditivity of `w`, strictness on non-split
    /// extensions, and normalisation.
    pub fn weak_admissibility_scan(
        &self,
        w: &WeightFunction,
        max_total_dim: u64,
    ) -> Result<WeakScanReport, HallError> {
        let scan_budget = HallBudget { max_total_dim, ..self.budget };
        let mut report = WeakScanReport {
            weak_ok: true,
            strict_ok: true,
            normalized: self.order.roots().iter().all(|&r| w.value(r) >= 1),
            weak_witness: None,
            strict_witness: None,
        };
        for total in 1..=max_total_dim {
            for d in dimension_vectors(self.n.get(), total) {
                for x in classes_with_dimension(self.n, &d) {
                    for e in sub_vectors(&d) {
                        let rest: Vec<u64> = d.iter().zip(&e).map(|(a, b)| a - b).collect();
                        for sub in classes_with_dimension(self.n, &e) {
                            for quot in classes_with_dimension(self.n, &rest) {
                                let count =
                                    subrep_count(self.n, &x, &sub, &quot, 2, &scan_budget)?;
                                if count == 0 {
                                    continue;
                                }
                                let wx = w.degree_of(&x);
                                let sum = w.degree_of(&sub) + w.degree_of(&quot);
                                if wx > sum && report.weak_ok {
                                    report.weak_ok = false;
                                    report.weak_witness =
                                        Some((x.clone(), quot.clone(), sub.clone()));
                                }
                                let split = quot.add(&sub);
                                if x != split && wx >= sum && report.strict_ok {
                                    report.strict_ok = false;
                                    report.strict_witness =
                                        Some((x.clone(), quot.clone(), sub.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Outcome of straightening one pair of PBW root vectors.
#[derive(Debug, Clone)]
pub struct StraightenReport {
    pub k: usize,
    pub l: usize,
    pub beta_k: PositiveRoot,
    pub beta_l: PositiveRoot,
    /// Exponent `(beta_k, beta_l)` of the leading term.
    pub pairing: i64,
    /// PBW-basis coefficients of `F_l F_k - q^{(beta_k,beta_l)} F_k F_l`.
    pub corrections: Vec<(ExponentVector, LaurentPoly)>,
    /// The split class cancelled exactly.
    pub split_cancelled: bool,
    /// Corrections are supported strictly between `beta_k` and `beta_l`.
    pub support_ok: bool,
    /// Corrections drop strictly in `mu_0`-degree.
    pub degree_drop_ok: bool,
}

impl StraightenReport {
    pub fn all_ok(&self) -> bool {
        self.split_cancelled && self.support_ok && self.degree_drop_ok
    }

    /// Human-readable rendering of the identity, e.g.
    /// `F[1,2] F[2,3] = F[2,3] F[1,2] + (q - q^-1) F[{...}]`.
    pub fn render_identity(&self) -> String {
        let mut rhs = if self.pairing == 0 {
            format!("F[{},{}] F[{},{}]", self.beta_k.i, self.beta_k.j, self.beta_l.i, self.beta_l.j)
        } else {
            format!(
                "q^{} F[{},{}] F[{},{}]",
                self.pairing, self.beta_k.i, self.beta_k.j, self.beta_l.i, self.beta_l.j
            )
        };
        for (class, coeff) in &self.corrections {
            rhs.push_str(&format!(" + ({}) F[{}]", coeff, class.to_json()));
        }
        format!(
            "F[{},{}] F[{},{}] = {rhs}",
            self.beta_l.i, self.beta_l.j, self.beta_k.i, self.beta_k.j
        )
    }
}

/// Aggregate result of the graded `q`-commutativity check.
#[derive(Debug, Clone)]
pub struct GradedRelationReport {
    pub ok: bool,
    pub failing_pairs: Vec<(PositiveRoot, PositiveRoot)>,
}

/// Result of the weak-admissibility scan. Witnesses are `(X, M, N)` with
/// submodule `N` and quotient `M`.
#[derive(Debug, Clone)]
pub struct WeakScanReport {
    pub weak_ok: bool,
    pub strict_ok: bool,
    pub normalized: bool,
    pub weak_witness: Option<(ExponentVector, ExponentVector, ExponentVector)>,
    pub strict_witness: Option<(ExponentVector, ExponentVector, ExponentVector)>,
}

/// All dimension vectors of length `n` with the given total.
fn dimension_vectors(n: usize, total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    fn rec(idx: usize, left: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx + 1 == current.len() {
            current[idx] = left;
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[idx] = v;
            rec(idx + 1, left - v, current, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(0, total, &mut current, &mut out);
    out
}

/// All componentwise sub-vectors `e <= d`.
fn sub_vectors(d: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &bound in d {
        let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
        for prefix in &out {
            for v in 0..=bound {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::quiver::degeneration_leq;
    use num_traits::Zero;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn root(i: usize, j: usize) -> PositiveRoot {
        PositiveRoot::new(i, j).unwrap()
    }

    fn ev(pairs: &[(usize, usize, u32)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs.iter().map(|&(i, j, m)| (root(i, j), m)))
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn unit_is_neutral() {
        let ctx = HallContext::new(rank(2));
        let a = ctx.pbw_element(&ev(&[(1, 2, 1), (2, 2, 1)]));
        assert_eq!(ctx.mult(&HallElement::one(), &a).unwrap(), a);
        assert_eq!(ctx.mult(&a, &HallElement::one()).unwrap(), a);
    }

    #[test]
    fn product_of_simples_rank_two() {
        // u_{S_1} u_{S_2} = q^-1 (u_{S_1+S_2} + u_{M_{1,2}})
        let ctx = HallContext::new(rank(2));
        let s1 = HallElement::from_class(ev(&[(1, 1, 1)]));
        let s2 = HallElement::from_class(ev(&[(2, 2, 1)]));
        let prod = ctx.mult(&s1, &s2).unwrap();
        assert_eq!(prod.coeff(&ev(&[(1, 1, 1), (2, 2, 1)])), lp(&[(-1, 1)]));
        assert_eq!(prod.coeff(&ev(&[(1, 2, 1)])), lp(&[(-1, 1)]));
        assert_eq!(prod.len(), 2);
        // opposite order: only the split class survives
        let prod = ctx.mult(&s2, &s1).unwrap();
        assert_eq!(prod.coeff(&ev(&[(1, 1, 1), (2, 2, 1)])), lp(&[(0, 1)]));
        assert_eq!(prod.len(), 1);
    }

    #[test]
    fn hall_polynomial_examples() {
        let ctx = HallContext::new(rank(2));
        // split with no homs/exts between the parts
        let f = ctx
            .hall_polynomial(&ev(&[(1, 1, 1)]), &ev(&[(2, 2, 1)]), &ev(&[(1, 1, 1), (2, 2, 1)]))
            .unwrap();
        assert_eq!(f, LaurentPoly::one());
        // the unique AR extension
        let f = ctx
            .hall_polynomial(&ev(&[(1, 1, 1)]), &ev(&[(2, 2, 1)]), &ev(&[(1, 2, 1)]))
            .unwrap();
        assert_eq!(f, LaurentPoly::one());
        // S_i^2 built from two copies of S_i: the line count u + 1
        let f = ctx
            .hall_polynomial(&ev(&[(1, 1, 1)]), &ev(&[(1, 1, 1)]), &ev(&[(1, 1, 2)]))
            .unwrap();
        assert_eq!(f, lp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn hall_polynomial_escalates_past_bad_initial_bound() {
        // F^{3S}_{2S, S} = u^2 + u + 1 has degree 2 but the starting bound is
        // ext(S, 2S) + 1 = 1; the held-out prime forces escalation.
        let ctx = HallContext::new(rank(1));
        let f = ctx
            .hall_polynomial(&ev(&[(1, 1, 2)]), &ev(&[(1, 1, 1)]), &ev(&[(1, 1, 3)]))
            .unwrap();
        assert_eq!(f, lp(&[(2, 1), (1, 1), (0, 1)]));
    }

    #[test]
    fn pbw_elements() {
        let ctx = HallContext::new(rank(2));
        assert_eq!(ctx.pbw_exponent(&ev(&[(1, 1, 1)])), 0);
        assert_eq!(ctx.pbw_exponent(&ev(&[(1, 2, 1)])), -1);
        assert_eq!(ctx.pbw_exponent(&ev(&[(1, 1, 2)])), 2);
    }

    #[test]
    fn divided_power_checks() {
        let ctx = HallContext::new(rank(2));
        for m in [
            ev(&[(1, 2, 1)]),
            ev(&[(2, 2, 1), (1, 2, 1)]),
            ev(&[(1, 1, 2)]),
            ev(&[(1, 1, 1), (2, 2, 2), (1, 2, 1)]),
        ] {
            assert!(ctx.divided_power_check(&m).unwrap(), "class {m}");
        }
    }

    #[test]
    fn straightening_identity_rank_three() {
        // F_23 F_12 = F_12 F_23 - (q - q^-1) F_2 F_123, checked coefficient
        // for coefficient as Hall elements.
        let ctx = HallContext::new(rank(3));
        let f12 = ctx.pbw_root(root(1, 2));
        let f23 = ctx.pbw_root(root(2, 3));
        let f2 = ctx.pbw_root(root(2, 2));
        let f123 = ctx.pbw_root(root(1, 3));
        let lhs = ctx.mult(&f23, &f12).unwrap();
        let correction = ctx.mult(&f2, &f123).unwrap().scale(&lp(&[(1, 1), (-1, -1)]));
        let rhs = ctx.mult(&f12, &f23).unwrap().sub(&correction);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn straighten_report_for_the_counterexample_pair() {
        let ctx = HallContext::new(rank(3));
        let k = ctx.order().position(root(2, 3)).unwrap();
        let l = ctx.order().position(root(1, 2)).unwrap();
        assert!(k < l, "the directed order puts (2,3) before (1,2)");
        let report = ctx.straighten_pair(k, l).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.pairing, 0);
        assert_eq!(report.corrections.len(), 1);
        let (class, coeff) = &report.corrections[0];
        assert_eq!(*class, ev(&[(2, 2, 1), (1, 3, 1)]));
        assert_eq!(*coeff, lp(&[(1, 1), (-1, -1)])); // q - q^-1
        // mu_0 of the correction drops: 2 + 3 = 5 < 4 + 2 = 6
        assert_eq!(mu0(ctx.rank(), class), 5);
    }

    #[test]
    fn straighten_all_rank_three_passes() {
        let ctx = HallContext::new(rank(3));
        for report in ctx.straighten_all().unwrap() {
            assert!(report.all_ok(), "pair ({}, {})", report.beta_k, report.beta_l);
        }
    }

    #[test]
    fn commuting_pair_has_no_corrections() {
        let ctx = HallContext::new(rank(3));
        let k = ctx.order().position(root(1, 3)).unwrap();
        let l = ctx.order().position(root(2, 2)).unwrap();
        let (k, l) = (k.min(l), k.max(l));
        let report = ctx.straighten_pair(k, l).unwrap();
        assert!(report.corrections.is_empty());
        assert!(report.all_ok());
    }

    #[test]
    fn associativity_on_indecomposables() {
        // exhaustive at rank 2, seeded random triples at rank 3
        let ctx = HallContext::with_budget(rank(2), HallBudget { max_total_dim: 9, max_prime: 13 });
        let roots2 = crate::roots::positive_roots(rank(2));
        for a in &roots2 {
            for b in &roots2 {
                for c in &roots2 {
                    let (fa, fb, fc) = (
                        HallElement::from_class(ExponentVector::unit(*a)),
                        HallElement::from_class(ExponentVector::unit(*b)),
                        HallElement::from_class(ExponentVector::unit(*c)),
                    );
                    let left = ctx.mult(&ctx.mult(&fa, &fb).unwrap(), &fc).unwrap();
                    let right = ctx.mult(&fa, &ctx.mult(&fb, &fc).unwrap()).unwrap();
                    assert_eq!(left, right, "({a}, {b}, {c})");
                }
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let ctx = HallContext::with_budget(rank(3), HallBudget { max_total_dim: 9, max_prime: 13 });
        let roots3 = crate::roots::positive_roots(rank(3));
        for _ in 0..50 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                HallElement::from_class(ExponentVector::unit(roots3[rng.gen_range(0..roots3.len())]))
            };
            let (fa, fb, fc) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let left = ctx.mult(&ctx.mult(&fa, &fb).unwrap(), &fc).unwrap();
            let right = ctx.mult(&fa, &ctx.mult(&fb, &fc).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn grading_bound_and_degeneration_compatibility() {
        // in u_M u_N every class X satisfies mu0(X) <= mu0(M) + mu0(N), with
        // equality only at the split class; and X always degenerates to M+N.
        let n = rank(3);
        let ctx = HallContext::new(n);
        let roots = crate::roots::positive_roots(n);
        for a in &roots {
            for b in &roots {
                let (ma, mb) = (ExponentVector::unit(*a), ExponentVector::unit(*b));
                let prod = ctx
                    .mult(&HallElement::from_class(ma.clone()), &HallElement::from_class(mb.clone()))
                    .unwrap();
                let bound = mu0(n, &ma) + mu0(n, &mb);
                let split = ma.add(&mb);
                for (x, _) in prod.iter() {
                    let d = mu0(n, x);
                    assert!(d <= bound);
                    if d == bound {
                        assert_eq!(*x, split);
                    }
                    assert!(degeneration_leq(n, x, &split).unwrap());
                }
            }
        }
    }

    #[test]
    fn specialisation_at_one_has_integer_coefficients() {
        let ctx = HallContext::new(rank(3));
        for report in ctx.straighten_all().unwrap() {
            for (_, coeff) in &report.corrections {
                let v = coeff.eval(&rational(1)).unwrap();
                assert!(v.is_integer());
            }
        }
    }

    #[test]
    fn graded_relation_check_mu0() {
        for n in 1..=3 {
            let ctx = HallContext::new(rank(n));
            let w = WeightFunction::mu0(rank(n));
            assert!(ctx.graded_relation_check(&w).unwrap().ok, "rank {n}");
        }
    }

    #[test]
    fn graded_relation_fails_for_length_at_counterexample_pair() {
        let ctx = HallContext::new(rank(3));
        let w = WeightFunction::length(rank(3));
        let k = ctx.order().position(root(2, 3)).unwrap();
        let l = ctx.order().position(root(1, 2)).unwrap();
        assert!(!ctx.graded_pair_ok(k.min(l), k.max(l), &w).unwrap());
        let report = ctx.graded_relation_check(&w).unwrap();
        assert!(!report.ok);
        assert!(report
            .failing_pairs
            .iter()
            .any(|(a, b)| (*a, *b) == (root(2, 3), root(1, 2)) || (*a, *b) == (root(1, 2), root(2, 3))));
    }

    #[test]
    fn weak_scan_examples() {
        let n = rank(2);
        let ctx = HallContext::new(n);
        let report = ctx.weak_admissibility_scan(&WeightFunction::mu0(n), 4).unwrap();
        assert!(report.weak_ok && report.strict_ok && report.normalized);

        // hom(M_{n,n}, -) alone: weakly admissible but strictness fails
        let w = WeightFunction::hom_function(n, &ExponentVector::unit(root(2, 2)));
        let report = ctx.weak_admissibility_scan(&w, 4).unwrap();
        assert!(report.weak_ok);
        assert!(!report.strict_ok);
        assert!(!report.normalized);

        // the zero function: weakly admissible, not normalized
        let w = WeightFunction::from_fn(n, |_| 0);
        let report = ctx.weak_admissibility_scan(&w, 3).unwrap();
        assert!(report.weak_ok);
        assert!(!report.normalized);
    }

    #[test]
    fn held_out_prime_agrees_for_counterexample_products() {
        // polynomiality spot check at a prime not used for interpolation
        let n = rank(3);
        let ctx = HallContext::new(n);
        let m = ev(&[(1, 2, 1)]);
        let sub = ev(&[(2, 3, 1)]);
        let total: Vec<u64> = m
            .dimension_vector(n)
            .iter()
            .zip(&sub.dimension_vector(n))
            .map(|(a, b)| a + b)
            .collect();
        for x in classes_with_dimension(n, &total) {
            let poly = ctx.hall_polynomial(&m, &sub, &x).unwrap();
            let expect = subrep_count(n, &x, &sub, &m, 13, &ctx.budget()).unwrap();
            assert_eq!(poly.eval_integer(&BigInt::from(13u64)), BigInt::from(expect));
        }
    }

    #[test]
    fn render_is_stable() {
        let ctx = HallContext::new(rank(2));
        let s1 = HallElement::from_class(ev(&[(1, 1, 1)]));
        let s2 = HallElement::from_class(ev(&[(2, 2, 1)]));
        let prod = ctx.mult(&s1, &s2).unwrap();
        assert_eq!(
            prod.render(),
            r#"q^-1 * u[{"1,1":1,"2,2":1}] + q^-1 * u[{"1,2":1}]"#
        );
        assert!(HallElement::zero().render() == "0");
        let neg = s1.scale(&lp(&[(0, -1)]));
        assert_eq!(neg.render(), r#"(-1) * u[{"1,1":1}]"#);
    }

    #[test]
    fn zero_scale_collapses() {
        let s1 = HallElement::from_class(ev(&[(1, 1, 1)]));
        assert!(s1.scale(&LaurentPoly::zero()).is_zero());
        assert!(s1.sub(&s1).is_zero());
        assert!(LaurentPoly::zero().is_zero());
        assert!(rational(0).is_zero());
    }
}
