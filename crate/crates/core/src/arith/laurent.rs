use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational};

/// Integer Laurent polynomial in the single variable `q`, stored sparsely as a
/// map exponent -> nonzero coefficient. The empty map is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (exp, c) in terms {
            out.add_term(exp, &c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitute `q -> q^k`. With `k = 2` this is the `u -> q^2` step of the
    /// Hall multiplication, kept as a named operation so the convention stays
    /// auditable.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational, ArithError> {
        if x.is_zero() {
            return Err(ArithError::ZeroEvaluationPoint);
        }
        let mut acc = Rational::zero();
        for (exp, c) in &self.coeffs {
            let exp = i32::try_from(*exp).expect("exponent fits in i32");
            let p = num_traits::pow::Pow::pow(x.clone(), exp);
            acc += Rational::from_integer(c.clone()) * p;
        }
        Ok(acc)
    }

    /// Evaluate a polynomial with only nonnegative exponents at an integer.
    /// Panics if a negative exponent is present.
    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (exp, c) in &self.coeffs {
            assert!(*exp >= 0, "eval_integer requires a genuine polynomial");
            acc += c * x.pow(u32::try_from(*exp).unwrap());
        }
        acc
    }

    /// Exact division in `Z[q, q^-1]`; `None` if the divisor does not divide.
    pub fn div_exact(&self, div: &Self) -> Option<Self> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division by the leading term. An exact quotient has no term
        // below min_exp(self) - min_exp(div), which bounds the descent.
        let min_quot_exp = self.min_exp().unwrap() - div.min_exp().unwrap();
        let dlead_exp = div.max_exp().unwrap();
        let dlead_coeff = div.coeff(dlead_exp);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rlead_exp = rem.max_exp().unwrap();
            let term_exp = rlead_exp - dlead_exp;
            if term_exp < min_quot_exp {
                return None;
            }
            let (qc, r) = num_integer::Integer::div_rem(&rem.coeff(rlead_exp), &dlead_coeff);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(qc, term_exp);
            rem = &rem - &(&term * div);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Render with a custom variable name, terms in decreasing exponent.
    pub fn render_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exp, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || *exp == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if *exp != 0 {
                out.push_str(var);
                if *exp != 1 {
                    out.push('^');
                    out.push_str(&exp.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with_var("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, c) in &rhs.coeffs {
            out.add_term(*exp, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, c) in &rhs.coeffs {
            out.add_term(*exp, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
