//! Exact polynomial interpolation of counting functions of the field size.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::first_primes;
use crate::poly::{LaurentPoly, Var};

pub const DEFAULT_MAX_DEGREE: usize = 24;
const INITIAL_SAMPLES: usize = 4;
const CHECK_POINTS: usize = 2;

/// An interpolated polynomial with the raw data it was fitted and checked on.
#[derive(Clone, Debug, Serialize)]
pub struct Interpolated {
    pub poly: LaurentPoly,
    pub samples: Vec<(u64, u128)>,
    pub checks: Vec<(u64, u128)>,
}

impl Interpolated {
    /// Primes where the polynomial disagrees with the recorded count.
    pub fn mismatches(&self) -> Vec<u64> {
        self.samples
            .iter()
            .chain(&self.checks)
            .filter(|(p, v)| self.poly.eval_int(*p as i64) != big(*v))
            .map(|(p, _)| *p)
            .collect()
    }
}

/// Where sample primes come from: consecutive primes from 2, or a fixed
/// list.
#[derive(Clone, Debug, Default)]
pub struct PrimeSource {
    fixed: Option<Vec<u64>>,
}

impl PrimeSource {
    pub fn consecutive() -> Self {
        Self { fixed: None }
    }

    pub fn fixed(primes: Vec<u64>) -> Self {
        Self {
            fixed: Some(primes),
        }
    }

    /// The first `n` primes of the source.
    pub fn take(&self, n: usize) -> Result<Vec<u64>> {
        match &self.fixed {
            Some(list) if list.len() < n => Err(Error::Interpolation(format!(
                "need {n} primes, the list {list:?} has {}",
                list.len()
            ))),
            Some(list) => Ok(list[..n].to_vec()),
            None => Ok(first_primes(n)),
        }
    }
}

fn big(v: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Fit `counter` by the polynomial through its values at the first `m`
/// primes, confirm it at the next two, and grow `m` until it holds or the
/// degree exceeds `max_degree`.
pub fn interpolate<F>(mut counter: F, primes: &PrimeSource, max_degree: usize) -> Result<Interpolated>
where
    F: FnMut(u64) -> Result<u128>,
{
    let mut values: BTreeMap<u64, u128> = BTreeMap::new();
    let mut m = INITIAL_SAMPLES;
    loop {
        let ps = primes.take(m + CHECK_POINTS)?;
        for &p in &ps {
            if let std::collections::btree_map::Entry::Vacant(slot) = values.entry(p) {
                slot.insert(counter(p)?);
            }
        }
        let samples: Vec<(u64, u128)> = ps[..m].iter().map(|p| (*p, values[p])).collect();
        let checks: Vec<(u64, u128)> = ps[m..].iter().map(|p| (*p, values[p])).collect();
        let poly = fit(&samples);
        let fitted = Interpolated {
            poly,
            samples,
            checks,
        };
        if fitted.mismatches().is_empty() {
            return Ok(fitted);
        }
        if m > max_degree {
            return Err(Error::Interpolation(format!(
                "no polynomial of degree ≤ {max_degree} fits; values {values:?}"
            )));
        }
        m += 1;
    }
}

/// Newton divided differences over `ℚ`.
pub fn fit(points: &[(u64, u128)]) -> LaurentPoly {
    let xs: Vec<BigRational> = points.iter().map(|(p, _)| big(u128::from(*p))).collect();
    let mut coef: Vec<BigRational> = points.iter().map(|(_, v)| big(*v)).collect();
    let n = coef.len();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let q = LaurentPoly::x(Var::Q);
    let mut poly = LaurentPoly::zero(Var::Q);
    for i in (0..n).rev() {
        let shifted = &q - &LaurentPoly::constant(Var::Q, xs[i].clone());
        poly = &(&poly * &shifted) + &LaurentPoly::constant(Var::Q, coef[i].clone());
    }
    poly
}
