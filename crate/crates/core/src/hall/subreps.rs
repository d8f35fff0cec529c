//! Subrepresentations over `F_p` by vertex-wise Grassmannian enumeration.
//!
//! Vertices are assigned in index order. At vertex `i` the admissible
//! subspaces `W_i` are exactly those with `B_i ⊆ W_i ⊆ A_i`, where `A_i` is
//! the intersection of the preimages `f_a⁻¹(W_j)` over already assigned
//! heads and `B_i` the sum of the images `f_a(W_k)` over already assigned
//! tails, so every completed tuple is arrow-stable.

use crate::error::Result;
use crate::field::{Field, PrimeField};
use crate::linalg::{self, Matrix, Subspace};
use crate::repkit::Rep;

type Space = Subspace<u64>;

/// Call `visit` on every subrepresentation of `top` with dimension vector
/// `e`, given as one echelon subspace per vertex.
pub fn for_each_subrep<F>(top: &Rep<PrimeField>, e: &[usize], visit: &mut F) -> Result<()>
where
    F: FnMut(&[Space]) -> Result<()>,
{
    if e.len() != top.dims().len() || e.iter().zip(top.dims()).any(|(a, b)| a > b) {
        return Ok(());
    }
    let mut chosen: Vec<Space> = Vec::with_capacity(e.len());
    assign(top, e, &mut chosen, visit)
}

fn assign<F>(top: &Rep<PrimeField>, e: &[usize], chosen: &mut Vec<Space>, visit: &mut F) -> Result<()>
where
    F: FnMut(&[Space]) -> Result<()>,
{
    let i = chosen.len();
    if i == e.len() {
        return visit(chosen);
    }
    let k = top.field();
    let di = top.dims()[i];
    let arrows = top.quiver().arrows();

    // A_i: kernel of V_i → ⊕_j V_j / W_j over assigned heads j
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, &(tail, head)) in arrows.iter().enumerate() {
        if tail != i || head >= i {
            continue;
        }
        let w = &chosen[head];
        let free = w.free_columns();
        let f = top.map(a);
        let images: Vec<Vec<u64>> = (0..di)
            .map(|c| w.reduce(k, &column(f, c)))
            .collect();
        for &r in &free {
            rows.push(images.iter().map(|v| v[r]).collect());
        }
    }
    let upper = if rows.is_empty() {
        Subspace::full(k, di)
    } else {
        let constraints = Matrix::from_rows(rows, di);
        Subspace::span(k, &linalg::kernel(k, &constraints).transpose())
    };

    // B_i: images of assigned tails
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for (a, &(tail, head)) in arrows.iter().enumerate() {
        if head != i || tail >= i {
            continue;
        }
        let f = top.map(a);
        for r in 0..chosen[tail].dim() {
            gens.push(apply(k, f, chosen[tail].basis.row(r)));
        }
    }
    let lower = Subspace::span(k, &Matrix::from_rows(gens, di));

    if lower.dim() > e[i] || upper.dim() < e[i] {
        return Ok(());
    }
    for r in 0..lower.dim() {
        if !upper.contains(k, lower.basis.row(r)) {
            return Ok(());
        }
    }
    // complement of B_i inside A_i
    let reduced: Vec<Vec<u64>> = (0..upper.dim())
        .map(|r| lower.reduce(k, upper.basis.row(r)))
        .collect();
    let complement = Subspace::span(k, &Matrix::from_rows(reduced, di));
    let extra = e[i] - lower.dim();
    let m = complement.dim();
    let mut result = Ok(());
    for_each_echelon(k, extra, m, &mut |r: &Matrix<u64>| {
        if result.is_err() {
            return;
        }
        let lifted = linalg::mul(k, r, &complement.basis);
        let w = Subspace::span(k, &lower.basis.vstack(&lifted));
        chosen.push(w);
        result = assign(top, e, chosen, visit);
        chosen.pop();
    });
    result
}

fn column(f: &Matrix<u64>, c: usize) -> Vec<u64> {
    (0..f.rows()).map(|r| *f.get(r, c)).collect()
}

fn apply(k: &PrimeField, f: &Matrix<u64>, v: &[u64]) -> Vec<u64> {
    (0..f.rows())
        .map(|r| {
            v.iter()
                .enumerate()
                .fold(0, |acc, (c, x)| k.add(&acc, &k.mul(f.get(r, c), x)))
        })
        .collect()
}

/// Every `rows × cols` matrix in reduced row echelon form of full row rank,
/// i.e. one per `rows`-dimensional subspace of `F_p^cols`.
pub fn for_each_echelon<F>(k: &PrimeField, rows: usize, cols: usize, visit: &mut F)
where
    F: FnMut(&Matrix<u64>),
{
    if rows > cols {
        return;
    }
    let mut pivots = Vec::with_capacity(rows);
    choose_pivots(k, rows, cols, 0, &mut pivots, visit);
}

fn choose_pivots<F>(k: &PrimeField, rows: usize, cols: usize, start: usize, pivots: &mut Vec<usize>, visit: &mut F)
where
    F: FnMut(&Matrix<u64>),
{
    if pivots.len() == rows {
        let free: Vec<(usize, usize)> = (0..rows)
            .flat_map(|r| {
                let p = pivots[r];
                let pv = pivots.clone();
                ((p + 1)..cols)
                    .filter(move |c| !pv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut m = linalg::zeros(k, rows, cols);
        for (r, &p) in pivots.iter().enumerate() {
            m.set(r, p, 1);
        }
        fill_free(k.modulus(), &free, 0, &mut m, visit);
        return;
    }
    let need = rows - pivots.len();
    for c in start..=(cols - need) {
        pivots.push(c);
        choose_pivots(k, rows, cols, c + 1, pivots, visit);
        pivots.pop();
    }
}

fn fill_free<F>(p: u64, free: &[(usize, usize)], idx: usize, m: &mut Matrix<u64>, visit: &mut F)
where
    F: FnMut(&Matrix<u64>),
{
    if idx == free.len() {
        visit(m);
        return;
    }
    let (r, c) = free[idx];
    for x in 0..p {
        m.set(r, c, x);
        fill_free(p, free, idx + 1, m, visit);
    }
    m.set(r, c, 0);
}

/// The subrepresentation on `W`, in the echelon bases of the `W_i`.
pub fn sub_rep(top: &Rep<PrimeField>, w: &[Space]) -> Result<Rep<PrimeField>> {
    let k = top.field();
    let dims: Vec<usize> = w.iter().map(|s| s.dim()).collect();
    let maps = top
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let f = top.map(a);
            let cols: Vec<Vec<u64>> = (0..w[i].dim())
                .map(|r| w[j].coordinates(&apply(k, f, w[i].basis.row(r))))
                .collect();
            Matrix::from_fn(dims[j], dims[i], |r, c| cols[c][r])
        })
        .collect();
    Rep::new(top.quiver().clone(), *k, dims, maps)
}

/// The quotient `top / W`, in the bases given by the non-pivot unit vectors.
pub fn quotient_rep(top: &Rep<PrimeField>, w: &[Space]) -> Result<Rep<PrimeField>> {
    let k = top.field();
    let free: Vec<Vec<usize>> = w.iter().map(|s| s.free_columns()).collect();
    let dims: Vec<usize> = free.iter().map(Vec::len).collect();
    let maps = top
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let f = top.map(a);
            let cols: Vec<Vec<u64>> = free[i]
                .iter()
                .map(|&c| {
                    let v = w[j].reduce(k, &column(f, c));
                    free[j].iter().map(|&r| v[r]).collect()
                })
                .collect();
            Matrix::from_fn(dims[j], dims[i], |r, c| cols[c][r])
        })
        .collect();
    Rep::new(top.quiver().clone(), *k, dims, maps)
}
