//! Counting over finite fields: submodules, filtrations and extensions,
//! turned into polynomials in `q` by interpolation, and the coefficient
//! checks built on them.

mod coeffs;
mod interp;
mod subreps;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::class::IsoClass;
use crate::dynkin::AdaptedWord;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::repkit::{extension_classes, Rep, RepKit, DEFAULT_MAX_EXT_BITS};

pub use coeffs::{
    fill_e_values, hall_associativity, omega, reduced_ext, riedtmann_check, smoothness_sum_check,
    theorem_main_check, MainCheck, OmegaCoeff, RiedtmannReport, SumCheck,
};
pub use interp::{fit, interpolate, Interpolated, PrimeSource, DEFAULT_MAX_DEGREE};
pub use subreps::{for_each_echelon, for_each_subrep, quotient_rep, sub_rep};

pub const DEFAULT_MAX_TOTAL_DIM: usize = 6;

/// Limits that keep every enumeration bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Largest `Σ_i d_i` whose subrepresentations are enumerated.
    pub max_total_dim: usize,
    /// Largest degree tried by interpolation.
    pub max_degree: usize,
    /// Largest `dim Ext¹ · log₂ p` enumerated.
    pub max_ext_bits: u32,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            max_total_dim: DEFAULT_MAX_TOTAL_DIM,
            max_degree: DEFAULT_MAX_DEGREE,
            max_ext_bits: DEFAULT_MAX_EXT_BITS,
        }
    }
}

/// Counting at one prime, with memoised filtration and extension counts.
#[derive(Debug)]
pub struct PrimeCounter {
    kit: RepKit<PrimeField>,
    guards: Guards,
    filtrations: HashMap<(IsoClass, Vec<IsoClass>), u128>,
    extensions: HashMap<(usize, usize), Vec<(IsoClass, u64)>>,
}

impl PrimeCounter {
    pub fn new(word: &AdaptedWord, p: u64, guards: Guards) -> Result<Self> {
        Ok(Self {
            kit: RepKit::new(word, PrimeField::new(p)?)?,
            guards,
            filtrations: HashMap::new(),
            extensions: HashMap::new(),
        })
    }

    pub fn prime(&self) -> u64 {
        self.kit.field().modulus()
    }

    pub fn kit(&self) -> &RepKit<PrimeField> {
        &self.kit
    }

    fn guard(&self, top: &Rep<PrimeField>) -> Result<()> {
        if top.total_dim() > self.guards.max_total_dim {
            return Err(Error::Guard(format!(
                "total dimension {} exceeds {}",
                top.total_dim(),
                self.guards.max_total_dim
            )));
        }
        Ok(())
    }

    fn dims_of(&self, c: &IsoClass) -> Vec<usize> {
        self.kit
            .word()
            .dim_vector(c)
            .into_iter()
            .map(|x| x as usize)
            .collect()
    }

    fn balance(&self, top: &Rep<PrimeField>, parts: &[&IsoClass]) -> Result<()> {
        let mut total = vec![0usize; top.dims().len()];
        for c in parts {
            if c.len() != self.kit.nu() {
                return Err(Error::DimensionMismatch(format!("class {c} has the wrong length")));
            }
            for (t, x) in total.iter_mut().zip(self.dims_of(c)) {
                *t += x;
            }
        }
        if total != top.dims() {
            return Err(Error::DimensionMismatch(format!(
                "pieces add up to {total:?}, top has {:?}",
                top.dims()
            )));
        }
        Ok(())
    }

    /// `F^{top}_{quot, sub}(p)`: submodules of `top` isomorphic to `e(sub)`
    /// with quotient isomorphic to `e(quot)`.
    pub fn count_submodules(&self, top: &Rep<PrimeField>, sub: &IsoClass, quot: &IsoClass) -> Result<u128> {
        self.guard(top)?;
        self.balance(top, &[sub, quot])?;
        let mut n = 0u128;
        for_each_subrep(top, &self.dims_of(sub), &mut |w| {
            if self.kit.identify(&quotient_rep(top, w)?)? == *quot
                && self.kit.identify(&sub_rep(top, w)?)? == *sub
            {
                n += 1;
            }
            Ok(())
        })?;
        Ok(n)
    }

    /// Tally of every submodule with dimension vector `e` by (sub, quotient)
    /// class.
    pub fn submodule_census(&self, top: &Rep<PrimeField>, e: &[usize]) -> Result<BTreeMap<(IsoClass, IsoClass), u128>> {
        self.guard(top)?;
        let mut out = BTreeMap::new();
        for_each_subrep(top, e, &mut |w| {
            let key = (
                self.kit.identify(&sub_rep(top, w)?)?,
                self.kit.identify(&quotient_rep(top, w)?)?,
            );
            *out.entry(key).or_insert(0) += 1;
            Ok(())
        })?;
        Ok(out)
    }

    /// Filtrations `top = W_0 ⊇ W_1 ⊇ ⋯ ⊇ W_k = 0` with `W_{r−1}/W_r ≅
    /// e(quotients[r−1])`; the first quotient is the top one.
    pub fn filtration_count(&mut self, top: &Rep<PrimeField>, quotients: &[IsoClass]) -> Result<u128> {
        self.guard(top)?;
        let parts: Vec<&IsoClass> = quotients.iter().collect();
        self.balance(top, &parts)?;
        match quotients {
            [] => Ok(1),
            [only] => Ok(u128::from(self.kit.identify(top)? == *only)),
            [first, rest @ ..] => {
                let rest_dims: Vec<usize> = top
                    .dims()
                    .iter()
                    .zip(self.dims_of(first))
                    .map(|(a, b)| a - b)
                    .collect();
                let mut subs: BTreeMap<IsoClass, u128> = BTreeMap::new();
                for_each_subrep(top, &rest_dims, &mut |w| {
                    if self.kit.identify(&quotient_rep(top, w)?)? == *first {
                        *subs.entry(self.kit.identify(&sub_rep(top, w)?)?).or_insert(0) += 1;
                    }
                    Ok(())
                })?;
                let mut total = 0u128;
                for (class, mult) in subs {
                    total += mult * self.filtration_count_of_class(&class, rest)?;
                }
                Ok(total)
            }
        }
    }

    /// [`filtration_count`](Self::filtration_count) on `e(top)`, memoised.
    pub fn filtration_count_of_class(&mut self, top: &IsoClass, quotients: &[IsoClass]) -> Result<u128> {
        let key = (top.clone(), quotients.to_vec());
        if let Some(&v) = self.filtrations.get(&key) {
            return Ok(v);
        }
        let rep = self.kit.rep_of_class(top);
        let v = self.filtration_count(&rep, quotients)?;
        self.filtrations.insert(key, v);
        Ok(v)
    }

    /// Middle classes of the nonzero extensions of `e_{α^t}` by `e_{α^s}`.
    pub fn extension_counts(&mut self, s: usize, t: usize) -> Result<&[(IsoClass, u64)]> {
        if !self.extensions.contains_key(&(s, t)) {
            let v = extension_classes(&self.kit, s, t, self.guards.max_ext_bits)?;
            self.extensions.insert((s, t), v);
        }
        Ok(&self.extensions[&(s, t)])
    }
}

/// Counters at every prime an interpolation asks for, created on demand.
#[derive(Debug)]
pub struct HallContext {
    word: AdaptedWord,
    guards: Guards,
    primes: PrimeSource,
    counters: BTreeMap<u64, PrimeCounter>,
    omegas: HashMap<(IsoClass, IsoClass), OmegaCoeff>,
}

impl HallContext {
    pub fn new(word: &AdaptedWord, guards: Guards, primes: PrimeSource) -> Self {
        Self {
            word: word.clone(),
            guards,
            primes,
            counters: BTreeMap::new(),
            omegas: HashMap::new(),
        }
    }

    pub fn word(&self) -> &AdaptedWord {
        &self.word
    }

    pub fn guards(&self) -> Guards {
        self.guards
    }

    pub fn counter(&mut self, p: u64) -> Result<&mut PrimeCounter> {
        if !self.counters.contains_key(&p) {
            let c = PrimeCounter::new(&self.word, p, self.guards)?;
            self.counters.insert(p, c);
        }
        Ok(self.counters.get_mut(&p).expect("just inserted"))
    }

    /// Interpolate a count that is evaluated through the per-prime counters.
    pub fn interpolate<F>(&mut self, mut count: F) -> Result<Interpolated>
    where
        F: FnMut(&mut PrimeCounter) -> Result<u128>,
    {
        let primes = self.primes.clone();
        let max_degree = self.guards.max_degree;
        interpolate(|p| count(self.counter(p)?), &primes, max_degree)
    }

    /// `E^{middle}_{b(t), b(s)}(q)`: nonzero extensions of `e_{α^t}` by
    /// `e_{α^s}` with middle term `e(middle)`.
    pub fn ext_poly(&mut self, s: usize, t: usize, middle: &IsoClass) -> Result<Interpolated> {
        self.interpolate(|c| {
            Ok(c.extension_counts(s, t)?
                .iter()
                .find(|(m, _)| m == middle)
                .map_or(0, |(_, n)| u128::from(*n)))
        })
    }

    /// `Σ_middle E^{middle}`, i.e. all nonzero extension classes.
    pub fn ext_total_poly(&mut self, s: usize, t: usize) -> Result<Interpolated> {
        self.interpolate(|c| {
            Ok(c.extension_counts(s, t)?
                .iter()
                .map(|(_, n)| u128::from(*n))
                .sum())
        })
    }

    /// `F^{top}_{quot, sub}(q)`.
    pub fn hall_poly(&mut self, top: &IsoClass, quot: &IsoClass, sub: &IsoClass) -> Result<Interpolated> {
        self.interpolate(|c| {
            let rep = c.kit().rep_of_class(top);
            c.count_submodules(&rep, sub, quot)
        })
    }

    /// `F^{top}_{c_1, …, c_k}(q)`, first quotient on top.
    pub fn filtration_poly(&mut self, top: &IsoClass, quotients: &[IsoClass]) -> Result<Interpolated> {
        self.interpolate(|c| c.filtration_count_of_class(top, quotients))
    }
}
