//! Dense matrices over an exact [`Field`] and the handful of elimination
//! routines the rest of the crate is built on.

use crate::field::Field;

/// Row-major dense matrix. Arithmetic goes through a field context, so the
/// container itself knows nothing about the entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let n = rows.len();
        let data: Vec<E> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), n * cols, "ragged rows");
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: E) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, start: usize, len: usize) -> Self {
        Self::from_fn(len, self.cols, |r, c| self.get(start + r, c).clone())
    }

    /// Columns `start..start+len` as a new matrix.
    pub fn col_block(&self, start: usize, len: usize) -> Self {
        Self::from_fn(self.rows, len, |r, c| self.get(r, start + c).clone())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

pub fn zeros<K: Field>(k: &K, rows: usize, cols: usize) -> Matrix<K::Elem> {
    Matrix::filled(rows, cols, k.zero())
}

pub fn identity<K: Field>(k: &K, n: usize) -> Matrix<K::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { k.one() } else { k.zero() })
}

pub fn is_zero<K: Field>(k: &K, m: &Matrix<K::Elem>) -> bool {
    m.entries().iter().all(|x| k.is_zero(x))
}

pub fn mul<K: Field>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    assert_eq!(a.cols(), b.rows(), "shape mismatch in product");
    let mut out = zeros(k, a.rows(), b.cols());
    for r in 0..a.rows() {
        for i in 0..a.cols() {
            let x = a.get(r, i);
            if k.is_zero(x) {
                continue;
            }
            for c in 0..b.cols() {
                let y = b.get(i, c);
                if k.is_zero(y) {
                    continue;
                }
                let v = k.add(out.get(r, c), &k.mul(x, y));
                out.set(r, c, v);
            }
        }
    }
    out
}

pub fn sub<K: Field>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    Matrix::from_fn(a.rows(), a.cols(), |r, c| k.sub(a.get(r, c), b.get(r, c)))
}

/// Reduced row echelon form and pivot columns.
pub fn rref<K: Field>(k: &K, m: &Matrix<K::Elem>) -> (Matrix<K::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !k.is_zero(a.get(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols() {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = k.inv(a.get(row, col));
        for c in col..a.cols() {
            let v = k.mul(a.get(row, c), &inv);
            a.set(row, c, v);
        }
        for r in 0..a.rows() {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if k.is_zero(&factor) {
                continue;
            }
            for c in col..a.cols() {
                let v = k.sub(a.get(r, c), &k.mul(&factor, a.get(row, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Basis of the right null space, returned as the columns of an
/// `cols × nullity` matrix.
pub fn kernel<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    let (r, pivots) = rref(k, m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut out = zeros(k, m.cols(), free.len());
    for (j, &f) in free.iter().enumerate() {
        out.set(f, j, k.one());
        for (i, &p) in pivots.iter().enumerate() {
            out.set(p, j, k.neg(r.get(i, f)));
        }
    }
    out
}

/// Rows spanning the left null space: `rows(out) · m = 0`.
pub fn left_kernel<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    kernel(k, &m.transpose()).transpose()
}

/// A subspace of `K^n` held as the rows of its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    pub basis: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
}

impl<E: Clone + PartialEq> Subspace<E> {
    /// Span of the rows of `m`.
    pub fn span<K: Field<Elem = E>>(k: &K, m: &Matrix<E>) -> Self {
        let (r, pivots) = rref(k, m);
        let basis = r.row_block(0, pivots.len());
        Self { basis, pivots }
    }

    pub fn zero<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        Self {
            basis: zeros(k, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        Self {
            basis: identity(k, n),
            pivots: (0..n).collect(),
        }
    }

    /// Reduce `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = out[p].clone();
            if k.is_zero(&factor) {
                continue;
            }
            for c in 0..out.len() {
                out[c] = k.sub(&out[c], &k.mul(&factor, self.basis.get(i, c)));
            }
        }
        out
    }

    pub fn contains<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> bool {
        self.reduce(k, v).iter().all(|x| k.is_zero(x))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Columns not carrying a pivot; the unit vectors there span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient())
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}
