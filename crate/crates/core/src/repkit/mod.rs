//! Explicit quiver representations over exact fields.
//!
//! Hom spaces are computed as null spaces of the commutativity constraints,
//! Ext¹ as the cokernel of the same map, and every indecomposable is built
//! from a simple by reflection functors. Isomorphism classes are recognised
//! purely from hom dimensions against the indecomposables.

mod classes;
mod extensions;
mod reflection;

use rand::Rng;

pub use crate::class::IsoClass;
pub use classes::{hom_table, identify, indecomposable, rep_of_class, HomTable, RepKit};
pub use extensions::{extension_classes, ExtensionSpace, DEFAULT_MAX_EXT_BITS};
pub use reflection::{coreflection_functor, reflection_functor};

use crate::dynkin::Quiver;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

/// A representation: one vector space per vertex (by dimension) and one
/// matrix per arrow. `maps[e]` belongs to arrow `e = (i, j)` of the quiver
/// and has shape `d_j × d_i`.
#[derive(Clone, Debug)]
pub struct Rep<K: Field> {
    quiver: Quiver,
    field: K,
    dims: Vec<usize>,
    maps: Vec<Matrix<K::Elem>>,
}

impl<K: Field> Rep<K> {
    pub fn new(quiver: Quiver, field: K, dims: Vec<usize>, maps: Vec<Matrix<K::Elem>>) -> Result<Self> {
        if dims.len() != quiver.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for rank {}",
                dims.len(),
                quiver.rank()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (m, &(t, h)) in maps.iter().zip(quiver.arrows()) {
            if m.rows() != dims[h] || m.cols() != dims[t] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {}>{} carries a {}x{} matrix, expected {}x{}",
                    t + 1,
                    h + 1,
                    m.rows(),
                    m.cols(),
                    dims[h],
                    dims[t]
                )));
            }
        }
        Ok(Self {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: &Quiver, field: &K) -> Self {
        let dims = vec![0; quiver.rank()];
        Self::with_zero_maps(quiver, field, dims)
    }

    /// All arrow maps zero.
    pub fn with_zero_maps(quiver: &Quiver, field: &K, dims: Vec<usize>) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(t, h)| linalg::zeros(field, dims[h], dims[t]))
            .collect();
        Self {
            quiver: quiver.clone(),
            field: field.clone(),
            dims,
            maps,
        }
    }

    /// The simple representation at vertex `i`.
    pub fn simple(quiver: &Quiver, field: &K, i: usize) -> Self {
        let mut dims = vec![0; quiver.rank()];
        dims[i] = 1;
        Self::with_zero_maps(quiver, field, dims)
    }

    /// Uniformly random matrices of the given dimensions.
    pub fn random<R: Rng + ?Sized>(quiver: &Quiver, field: &K, dims: Vec<usize>, rng: &mut R) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(t, h)| Matrix::from_fn(dims[h], dims[t], |_, _| field.random(rng)))
            .collect();
        Self {
            quiver: quiver.clone(),
            field: field.clone(),
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dims_i64(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix<K::Elem>] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix<K::Elem> {
        &self.maps[arrow]
    }

    /// Direct sum with block-diagonal maps.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        check_compatible(self, other)?;
        let k = &self.field;
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                Matrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |r, c| {
                    if r < a.rows() && c < a.cols() {
                        a.get(r, c).clone()
                    } else if r >= a.rows() && c >= a.cols() {
                        b.get(r - a.rows(), c - a.cols()).clone()
                    } else {
                        k.zero()
                    }
                })
            })
            .collect();
        Ok(Self {
            quiver: self.quiver.clone(),
            field: self.field.clone(),
            dims,
            maps,
        })
    }

    /// Arrows whose matrix is nonzero.
    pub fn nonzero_arrows(&self) -> Vec<usize> {
        (0..self.maps.len())
            .filter(|&a| !linalg::is_zero(&self.field, &self.maps[a]))
            .collect()
    }
}

fn check_compatible<K: Field>(a: &Rep<K>, b: &Rep<K>) -> Result<()> {
    if a.quiver.arrows() != b.quiver.arrows()
        || a.quiver.diagram() != b.quiver.diagram()
        || a.field.spec() != b.field.spec()
    {
        return Err(Error::Mismatch);
    }
    Ok(())
}

/// Matrix of `δ: ⊕_i Hom(M_i, N_i) → ⊕_{a: i→j} Hom(M_i, N_j)`,
/// `δ(g)_a = g_j f^M_a − f^N_a g_i`. Rows index the target, columns the
/// source; `g_i` is flattened row-major as an `N_i × M_i` block.
pub(crate) fn hom_constraints<K: Field>(m: &Rep<K>, n: &Rep<K>) -> Matrix<K::Elem> {
    let k = &m.field;
    let rank = m.quiver.rank();
    let mut var_offset = vec![0usize; rank + 1];
    for i in 0..rank {
        var_offset[i + 1] = var_offset[i] + n.dims[i] * m.dims[i];
    }
    let n_vars = var_offset[rank];
    let mut rows: Vec<Vec<K::Elem>> = Vec::new();
    for (a, &(i, j)) in m.quiver.arrows().iter().enumerate() {
        let fm = &m.maps[a]; // M_j × M_i
        let fn_ = &n.maps[a]; // N_j × N_i
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut row = vec![k.zero(); n_vars];
                // (g_j f^M)[r][c] = Σ_l g_j[r][l] fM[l][c]
                for l in 0..m.dims[j] {
                    let idx = var_offset[j] + r * m.dims[j] + l;
                    row[idx] = k.add(&row[idx], fm.get(l, c));
                }
                // (f^N g_i)[r][c] = Σ_l fN[r][l] g_i[l][c]
                for l in 0..n.dims[i] {
                    let idx = var_offset[i] + l * m.dims[i] + c;
                    row[idx] = k.sub(&row[idx], fn_.get(r, l));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows, n_vars)
}

/// `dim Hom(M, N)`.
pub fn hom_dim<K: Field>(m: &Rep<K>, n: &Rep<K>) -> Result<usize> {
    check_compatible(m, n)?;
    let c = hom_constraints(m, n);
    Ok(c.cols() - m.field.rank(&c))
}

/// `⟨d1, d2⟩ = Σ_i d1_i d2_i − Σ_{i→j} d1_i d2_j`.
pub fn euler_form(quiver: &Quiver, d1: &[i64], d2: &[i64]) -> Result<i64> {
    let n = quiver.rank();
    if d1.len() != n || d2.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {} for rank {n}",
            d1.len(),
            d2.len()
        )));
    }
    let diag: i64 = d1.iter().zip(d2).map(|(a, b)| a * b).sum();
    let arrows: i64 = quiver.arrows().iter().map(|&(i, j)| d1[i] * d2[j]).sum();
    Ok(diag - arrows)
}

/// `dim Ext¹(M, N) = dim Hom(M, N) − ⟨dim M, dim N⟩`.
pub fn ext_dim<K: Field>(m: &Rep<K>, n: &Rep<K>) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let euler = euler_form(&m.quiver, &m.dims_i64(), &n.dims_i64())?;
    usize::try_from(hom - euler)
        .map_err(|_| Error::Internal(format!("negative ext dimension {}", hom - euler)))
}

/// `dim Ext¹(M, N)` computed directly as the cokernel dimension of the
/// constraint map, without the Euler form.
pub fn ext_dim_by_cokernel<K: Field>(m: &Rep<K>, n: &Rep<K>) -> Result<usize> {
    check_compatible(m, n)?;
    let c = hom_constraints(m, n);
    Ok(c.rows() - m.field.rank(&c))
}
