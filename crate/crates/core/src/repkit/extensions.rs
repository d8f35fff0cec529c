use std::collections::BTreeMap;

use crate::class::IsoClass;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::{Matrix, Subspace};

use super::{check_compatible, hom_constraints, Rep, RepKit};

/// Enumerations of `Ext¹` above `2^22` elements are refused.
pub const DEFAULT_MAX_EXT_BITS: u32 = 22;

/// `Ext¹(M, N)` as an explicit complement of the image of the constraint map,
/// so that every vector of the span is a distinct extension class.
#[derive(Clone, Debug)]
pub struct ExtensionSpace<K: Field> {
    quotient: Rep<K>,
    sub: Rep<K>,
    /// Unit vectors of the target `⊕_{a: i→j} Hom(M_i, N_j)`, by position.
    basis: Vec<usize>,
    target_dim: usize,
}

impl<K: Field> ExtensionSpace<K> {
    /// Extensions `0 → sub → E → quotient → 0`.
    pub fn new(quotient: &Rep<K>, sub: &Rep<K>) -> Result<Self> {
        check_compatible(quotient, sub)?;
        let c = hom_constraints(quotient, sub);
        let image = Subspace::span(quotient.field(), &c.transpose());
        Ok(Self {
            quotient: quotient.clone(),
            sub: sub.clone(),
            basis: image.free_columns(),
            target_dim: c.rows(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The middle term of the extension with the given coordinates: maps
    /// `[[f^N, ε], [0, f^M]]` on `N_i ⊕ M_i`.
    pub fn middle(&self, coords: &[K::Elem]) -> Rep<K> {
        assert_eq!(coords.len(), self.dim());
        let k = self.quotient.field();
        let mut eps = vec![k.zero(); self.target_dim];
        for (&pos, x) in self.basis.iter().zip(coords) {
            eps[pos] = x.clone();
        }
        let (m, n) = (&self.quotient, &self.sub);
        let dims: Vec<usize> = n.dims().iter().zip(m.dims()).map(|(a, b)| a + b).collect();
        let mut offset = 0;
        let maps = m
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(i, j))| {
                let (fn_, fm) = (n.map(a), m.map(a));
                let (ni, nj) = (n.dims()[i], n.dims()[j]);
                let mi = m.dims()[i];
                let block = offset;
                offset += nj * mi;
                Matrix::from_fn(dims[j], dims[i], |r, c| match (r < nj, c < ni) {
                    (true, true) => fn_.get(r, c).clone(),
                    (true, false) => eps[block + r * mi + (c - ni)].clone(),
                    (false, true) => k.zero(),
                    (false, false) => fm.get(r - nj, c - ni).clone(),
                })
            })
            .collect();
        Rep::new(m.quiver().clone(), k.clone(), dims, maps)
            .expect("block shapes follow the dimension vectors")
    }
}

/// Middle-term classes of all nonzero extensions `0 → e_{α^s} → E → e_{α^t} → 0`
/// over `F_p`, with how many extension vectors give each class.
pub fn extension_classes(
    kit: &RepKit<PrimeField>,
    s: usize,
    t: usize,
    max_bits: u32,
) -> Result<Vec<(IsoClass, u64)>> {
    let nu = kit.nu();
    for idx in [s, t] {
        if idx >= nu {
            return Err(Error::RootIndexOutOfRange { index: idx, nu });
        }
    }
    let space = ExtensionSpace::new(kit.indecomposable(t), kit.indecomposable(s))?;
    let p = kit.field().modulus();
    let e = space.dim() as u32;
    let bits = f64::from(e) * (p as f64).log2();
    if bits > f64::from(max_bits) {
        return Err(Error::Guard(format!(
            "Ext¹ of dimension {e} over F_{p} needs {bits:.1} bits, limit {max_bits}"
        )));
    }
    let total = p.pow(e);
    let mut counts: BTreeMap<IsoClass, u64> = BTreeMap::new();
    let mut coords = vec![0u64; space.dim()];
    for _ in 1..total {
        // base-p counter over the nonzero vectors
        for x in coords.iter_mut() {
            *x += 1;
            if *x < p {
                break;
            }
            *x = 0;
        }
        let class = kit.identify(&space.middle(&coords))?;
        *counts.entry(class).or_default() += 1;
    }
    Ok(counts.into_iter().collect())
}
