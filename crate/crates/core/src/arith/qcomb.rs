use super::{ArithError, LaurentPoly};

/// Symmetric quantum integer `[m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m}`.
pub fn q_integer(m: u64) -> LaurentPoly {
    let m = m as i64;
    LaurentPoly::from_terms((0..m).map(|t| (m - 1 - 2 * t, 1i64)))
}

/// `[m]_q! = [m]_q [m-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(m: u64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for t in 1..=m {
        acc = &acc * &q_integer(t);
    }
    acc
}

/// Symmetric Gaussian binomial `[m choose k]_q`, computed by the Pascal-type
/// recurrence `[m,k] = q^k [m-1,k] + q^{k-m} [m-1,k-1]` so that everything
/// stays division-free in `Z[q, q^-1]`.
pub fn q_binomial(m: u64, k: u64) -> Result<LaurentPoly, ArithError> {
    if k > m {
        return Err(ArithError::BinomialRange { m, k });
    }
    // row-by-row Pascal triangle
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for mm in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        for kk in 0..=mm.min(k) {
            if kk == 0 || kk == mm {
                next.push(LaurentPoly::one());
                continue;
            }
            let up = &LaurentPoly::q_pow(kk as i64) * &row[kk as usize];
            let diag = &LaurentPoly::q_pow(kk as i64 - mm as i64) * &row[kk as usize - 1];
            next.push(&up + &diag);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}
