//! Exact Lagrange interpolation used to lift subrepresentation counts to
//! Hall polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{LaurentPoly, Rational};

/// Interpolate the unique polynomial of degree < `points.len()` through the
/// given `(x, y)` pairs, exactly over the rationals. Returns `None` if the
/// result has a non-integer coefficient; the caller treats that as a failed
/// degree bound.
pub fn lagrange_integer(points: &[(u64, u64)]) -> Option<LaurentPoly> {
    let n = points.len();
    assert!(n > 0);
    let mut acc = vec![Rational::zero(); n];
    for (k, &(xk, yk)) in points.iter().enumerate() {
        // prod_{j != k} (x - x_j), coefficients ascending
        let mut num = vec![Rational::zero(); n];
        num[0] = Rational::one();
        let mut deg = 0usize;
        let mut denom = Rational::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let xj_rat = Rational::from_integer(BigInt::from(xj));
            for t in (0..=deg + 1).rev() {
                let lower = if t >= 1 { num[t - 1].clone() } else { Rational::zero() };
                num[t] = lower - xj_rat.clone() * num[t].clone();
            }
            deg += 1;
            denom *= Rational::from_integer(BigInt::from(xk) - BigInt::from(xj));
        }
        let scale = Rational::from_integer(BigInt::from(yk)) / denom;
        for (a, c) in acc.iter_mut().zip(num.iter()) {
            *a += c.clone() * scale.clone();
        }
    }
    let mut out = LaurentPoly::zero();
    for (exp, c) in acc.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return None;
        }
        out = &out + &LaurentPoly::monomial(c.to_integer(), exp as i64);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_lines_and_quadratics() {
        // y = x + 1 through (2,3),(3,4)
        let p = lagrange_integer(&[(2, 3), (3, 4)]).unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(1i64, 1i64), (0, 1)]));
        // y = x^2 + x + 1 through three points
        let q = lagrange_integer(&[(2, 7), (3, 13), (5, 31)]).unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(2i64, 1i64), (1, 1), (0, 1)]));
        assert_eq!(q.eval_integer(&BigInt::from(7)), BigInt::from(57));
    }

    #[test]
    fn rejects_non_integer_fits() {
        // through (2,0),(3,1): y = x - 2 is integral; but (2,0),(4,1) forces 1/2
        assert!(lagrange_integer(&[(2, 0), (4, 1)]).is_none());
    }
}
