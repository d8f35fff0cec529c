//! Exact univariate Laurent polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The indeterminate a polynomial is written in. `U` stands for `u = v²`,
/// `Q` for the field size `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    U,
    Q,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::U => "u",
            Var::Q => "q",
        })
    }
}

/// Sparse Laurent polynomial. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyRecord", try_from = "PolyRecord")]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i64, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        Self {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigRational::one())
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn monomial(var: Var, c: BigRational, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c);
        p
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, BigRational::one(), 1)
    }

    /// Build from `(exponent, integer coefficient)` pairs.
    pub fn from_terms(var: Var, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(e, c) in terms {
            p.add_term(e, rat(c));
        }
        p
    }

    /// Dense integer coefficients, lowest degree first, starting at `x^0`.
    pub fn from_coeffs(var: Var, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(var);
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e as i64, rat(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut p = Self::zero(self.var);
        for (&e, a) in &self.coeffs {
            p.add_term(e, a * c);
        }
        p
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Shift so the lowest exponent is 0. The zero polynomial is unchanged.
    pub fn normalize_lowest(&self) -> Self {
        match self.min_exp() {
            Some(m) => self.shift(-m),
            None => self.clone(),
        }
    }

    /// Substitute `x ↦ y^{-1}`, renaming the variable to `var`.
    pub fn invert_variable(&self, var: Var) -> Self {
        Self {
            var,
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn with_var(&self, var: Var) -> Self {
        Self {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a rational point. Panics on `x = 0` with negative
    /// exponents present.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut s = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let xe = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                assert!(!x.is_zero(), "negative power of zero");
                num_traits::pow(x.recip(), (-e) as usize)
            };
            s += c * xe;
        }
        s
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let mut p = Self::zero(self.var);
        for (&e, c) in &self.coeffs {
            if e != 0 {
                p.add_term(e - 1, c * rat(e));
            }
        }
        p
    }

    /// Exact quotient `self / divisor` as Laurent polynomials, or `None` if
    /// the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        let a_shift = self.min_exp().unwrap();
        let b_shift = divisor.min_exp().unwrap();
        let mut rem = self.shift(-a_shift);
        let b = divisor.shift(-b_shift);
        let b_deg = b.max_exp().unwrap();
        let b_lead = b.coeff(b_deg);
        let mut quot = Self::zero(self.var);
        while let Some(r_deg) = rem.max_exp() {
            if r_deg < b_deg {
                return None;
            }
            let c = rem.coeff(r_deg) / &b_lead;
            let term = Self::monomial(self.var, c, r_deg - b_deg);
            rem = &rem - &(&term * &b);
            quot = &quot + &term;
        }
        Some(quot.shift(a_shift - b_shift))
    }

    pub fn div_exact_or(&self, divisor: &Self, what: &str) -> Result<Self> {
        self.div_exact(divisor).ok_or_else(|| {
            Error::Internal(format!("{what}: {self} is not divisible by {divisor}"))
        })
    }

    /// Multiplicity of the root `x = 1`.
    pub fn multiplicity_at_one(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let linear = Self::from_coeffs(self.var, &[-1, 1]);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(next) = p.div_exact(&linear) {
            p = next;
            k += 1;
        }
        Some(k)
    }
}

/// `|GL_m(F_q)| = Π_{k<m} (q^m − q^k)`.
pub fn gl_order(m: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one(Var::Q);
    for k in 0..m {
        let factor = LaurentPoly::from_terms(Var::Q, &[(i64::from(m), 1), (i64::from(k), -1)]);
        acc = &acc * &factor;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut p = self.clone();
        for (&e, c) in &rhs.coeffs {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut p = self.clone();
        for (&e, c) in &rhs.coeffs {
            p.add_term(e, -c.clone());
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, rhs.var);
        let mut p = LaurentPoly::zero(self.var);
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                write!(f, "{}", self.var)?;
            } else {
                write!(f, "{}^{}", self.var, e)?;
            }
        }
        Ok(())
    }
}

/// Wire form: exponent/coefficient pairs, coefficients as `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub var: Var,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: i64,
    pub coeff: String,
}

impl From<LaurentPoly> for PolyRecord {
    fn from(p: LaurentPoly) -> Self {
        PolyRecord {
            var: p.var,
            terms: p
                .coeffs
                .iter()
                .map(|(&exp, c)| TermRecord {
                    exp,
                    coeff: format!("{}/{}", c.numer(), c.denom()),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyRecord> for LaurentPoly {
    type Error = String;

    fn try_from(r: PolyRecord) -> std::result::Result<Self, String> {
        let mut p = LaurentPoly::zero(r.var);
        for t in r.terms {
            let (n, d) = t
                .coeff
                .split_once('/')
                .ok_or_else(|| format!("coefficient {:?} is not num/den", t.coeff))?;
            let n: BigInt = n.parse().map_err(|e| format!("{e}"))?;
            let d: BigInt = d.parse().map_err(|e| format!("{e}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            p.add_term(t.exp, BigRational::new(n, d));
        }
        Ok(p)
    }
}
