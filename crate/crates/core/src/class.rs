use std::fmt;

use serde::{Deserialize, Serialize};

/// An isomorphism class of modules, given by the multiplicity of each
/// indecomposable `e_{α^t}` in the root order of an adapted word.
///
/// The word itself is context carried by whoever owns the class (a
/// catalog, a [`RepKit`](crate::repkit::RepKit)); the class is just the
/// vector `c ∈ ℕ^ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoClass(pub Vec<u32>);

impl IsoClass {
    pub fn zero(nu: usize) -> Self {
        Self(vec![0; nu])
    }

    /// The unit vector `b(t)` (0-based `t`).
    pub fn unit(nu: usize, t: usize) -> Self {
        let mut c = vec![0; nu];
        c[t] = 1;
        Self(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn summands(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Dimension vector `Σ_t c_t α^t`.
    pub fn dim_vector(&self, roots: &[Vec<i64>], rank: usize) -> Vec<i64> {
        let mut d = vec![0i64; rank];
        for (ct, root) in self.0.iter().zip(roots) {
            for (dk, rk) in d.iter_mut().zip(root) {
                *dk += i64::from(*ct) * rk;
            }
        }
        d
    }

    /// `self + v`, or `None` if some coordinate would go negative.
    pub fn offset(&self, v: &[i64]) -> Option<IsoClass> {
        self.0
            .iter()
            .zip(v)
            .map(|(&c, &x)| u32::try_from(i64::from(c) + x).ok())
            .collect::<Option<Vec<_>>>()
            .map(IsoClass)
    }

    /// Componentwise difference `self − other`.
    pub fn diff(&self, other: &IsoClass) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for IsoClass {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}
