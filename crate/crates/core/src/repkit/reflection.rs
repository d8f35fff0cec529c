//! Bernstein–Gelfand–Ponomarev reflection functors.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::Rep;

/// `S⁺_i` at a sink `i`: the new space at `i` is the kernel of
/// `⊕_{a: j→i} V_j → V_i`, mapped back to each `V_j` by projection. Arrows at
/// `i` are reversed.
pub fn reflection_functor<K: Field>(rep: &Rep<K>, i: usize) -> Result<Rep<K>> {
    let quiver = rep.quiver();
    if i >= quiver.rank() {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            rank: quiver.rank(),
        });
    }
    if !quiver.is_sink(i) {
        return Err(Error::NotASink(i));
    }
    let k = rep.field();
    let incident: Vec<usize> = (0..quiver.arrows().len())
        .filter(|&a| quiver.arrows()[a].1 == i)
        .collect();
    let widths: Vec<usize> = incident
        .iter()
        .map(|&a| rep.dims()[quiver.arrows()[a].0])
        .collect();
    let total: usize = widths.iter().sum();
    // [f_a1 | f_a2 | …] : ⊕ V_j → V_i
    let mut combined = linalg::zeros(k, rep.dims()[i], total);
    let mut offset = 0;
    for (&a, &w) in incident.iter().zip(&widths) {
        let f = rep.map(a);
        for r in 0..f.rows() {
            for c in 0..w {
                combined.set(r, offset + c, f.get(r, c).clone());
            }
        }
        offset += w;
    }
    let ker = linalg::kernel(k, &combined);
    let new_dim = ker.cols();
    let mut dims = rep.dims().to_vec();
    dims[i] = new_dim;
    let mut maps = rep.maps().to_vec();
    let mut offset = 0;
    for (&a, &w) in incident.iter().zip(&widths) {
        maps[a] = ker.row_block(offset, w);
        offset += w;
    }
    Rep::new(quiver.reversed_at(i), k.clone(), dims, maps)
}

/// `S⁻_i` at a source `i`: the new space at `i` is the cokernel of
/// `V_i → ⊕_{a: i→j} V_j`, receiving the induced maps. Arrows at `i` are
/// reversed.
pub fn coreflection_functor<K: Field>(rep: &Rep<K>, i: usize) -> Result<Rep<K>> {
    let quiver = rep.quiver();
    if i >= quiver.rank() {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            rank: quiver.rank(),
        });
    }
    if !quiver.is_source(i) {
        return Err(Error::NotASource(i));
    }
    let k = rep.field();
    let incident: Vec<usize> = (0..quiver.arrows().len())
        .filter(|&a| quiver.arrows()[a].0 == i)
        .collect();
    let heights: Vec<usize> = incident
        .iter()
        .map(|&a| rep.dims()[quiver.arrows()[a].1])
        .collect();
    let total: usize = heights.iter().sum();
    let mut stacked: Matrix<K::Elem> = linalg::zeros(k, total, rep.dims()[i]);
    let mut offset = 0;
    for (&a, &h) in incident.iter().zip(&heights) {
        let f = rep.map(a);
        for r in 0..h {
            for c in 0..f.cols() {
                stacked.set(offset + r, c, f.get(r, c).clone());
            }
        }
        offset += h;
    }
    let coker = linalg::left_kernel(k, &stacked);
    let mut dims = rep.dims().to_vec();
    dims[i] = coker.rows();
    let mut maps = rep.maps().to_vec();
    let mut offset = 0;
    for (&a, &h) in incident.iter().zip(&heights) {
        maps[a] = coker.col_block(offset, h);
        offset += h;
    }
    Rep::new(quiver.reversed_at(i), k.clone(), dims, maps)
}
