use std::sync::Arc;

use crate::class::IsoClass;
use crate::dynkin::AdaptedWord;
use crate::error::{Error, Result};
use crate::field::Field;

use super::reflection::coreflection_functor;
use super::{hom_dim, Rep};

/// `H[s][t] = dim Hom(e_{α^s}, e_{α^t})` in the root order of an adapted word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTable {
    dims: Vec<Vec<i64>>,
}

impl HomTable {
    pub fn from_rows(dims: Vec<Vec<i64>>) -> Self {
        Self { dims }
    }

    pub fn nu(&self) -> usize {
        self.dims.len()
    }

    pub fn get(&self, s: usize, t: usize) -> i64 {
        self.dims[s][t]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.dims
    }

    /// `[e_{α^s}, e(c)]`.
    pub fn hom_from_indecomposable(&self, s: usize, c: &IsoClass) -> i64 {
        c.0.iter()
            .enumerate()
            .map(|(t, &ct)| i64::from(ct) * self.dims[s][t])
            .sum()
    }

    /// `[e(c), e_{α^s}]`.
    pub fn hom_to_indecomposable(&self, c: &IsoClass, s: usize) -> i64 {
        c.0.iter()
            .enumerate()
            .map(|(t, &ct)| i64::from(ct) * self.dims[t][s])
            .sum()
    }

    /// `[e(a), e(b)] = Σ_{s,t} a_s b_t H[s][t]`.
    pub fn hom_between(&self, a: &IsoClass, b: &IsoClass) -> i64 {
        let mut total = 0;
        for (s, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (t, &y) in b.0.iter().enumerate() {
                total += i64::from(x) * i64::from(y) * self.dims[s][t];
            }
        }
        total
    }

    /// Violations of unit diagonal and vanishing strict lower triangle.
    pub fn triangularity_violations(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for s in 0..self.nu() {
            if self.dims[s][s] != 1 {
                out.push((s, s, self.dims[s][s]));
            }
            for t in 0..s {
                if self.dims[s][t] != 0 {
                    out.push((s, t, self.dims[s][t]));
                }
            }
        }
        out
    }

    /// Solve `H c = h` by back substitution; `H` is upper unitriangular.
    pub fn solve(&self, h: &[i64]) -> Result<IsoClass> {
        let nu = self.nu();
        let mut c = vec![0i64; nu];
        for s in (0..nu).rev() {
            let tail: i64 = ((s + 1)..nu).map(|t| self.dims[s][t] * c[t]).sum();
            let diag = self.dims[s][s];
            let rhs = h[s] - tail;
            if diag == 0 || rhs % diag != 0 {
                return Err(Error::Internal(format!(
                    "hom vector {h:?} has no integral class solution"
                )));
            }
            c[s] = rhs / diag;
        }
        c.into_iter()
            .map(|x| {
                u32::try_from(x).map_err(|_| {
                    Error::Internal(format!("hom vector {h:?} yields a negative multiplicity"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(IsoClass)
    }
}

/// The indecomposables of an adapted word over one field, with their hom
/// table. Built once, then shared read-only.
#[derive(Clone, Debug)]
pub struct RepKit<K: Field> {
    word: Arc<AdaptedWord>,
    field: K,
    indecomposables: Vec<Rep<K>>,
    table: HomTable,
}

impl<K: Field> RepKit<K> {
    pub fn new(word: &AdaptedWord, field: K) -> Result<Self> {
        let indecomposables = (0..word.nu())
            .map(|t| indecomposable(word, t, &field))
            .collect::<Result<Vec<_>>>()?;
        let table = build_table(&indecomposables)?;
        Ok(Self {
            word: Arc::new(word.clone()),
            field,
            indecomposables,
            table,
        })
    }

    pub fn word(&self) -> &AdaptedWord {
        &self.word
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn table(&self) -> &HomTable {
        &self.table
    }

    pub fn nu(&self) -> usize {
        self.indecomposables.len()
    }

    /// `e_{α^t}` (0-based `t`).
    pub fn indecomposable(&self, t: usize) -> &Rep<K> {
        &self.indecomposables[t]
    }

    pub fn indecomposables(&self) -> &[Rep<K>] {
        &self.indecomposables
    }

    /// `e(c) = ⊕_t c_t e_{α^t}` with block-diagonal maps.
    pub fn rep_of_class(&self, c: &IsoClass) -> Rep<K> {
        let mut out = Rep::zero(self.word.quiver(), &self.field);
        for (t, &ct) in c.0.iter().enumerate() {
            for _ in 0..ct {
                out = out
                    .direct_sum(&self.indecomposables[t])
                    .expect("indecomposables share the quiver");
            }
        }
        out
    }

    /// `(dim Hom(e_{α^s}, rep))_s`.
    pub fn hom_vector(&self, rep: &Rep<K>) -> Result<Vec<i64>> {
        self.indecomposables
            .iter()
            .map(|e| hom_dim(e, rep).map(|h| h as i64))
            .collect()
    }

    /// The isomorphism class of `rep`, from its hom vector.
    pub fn identify(&self, rep: &Rep<K>) -> Result<IsoClass> {
        if rep.total_dim() == 0 {
            return Ok(IsoClass::zero(self.nu()));
        }
        let h = self.hom_vector(rep)?;
        let c = self.table.solve(&h)?;
        if self.word.dim_vector(&c) != rep.dims_i64() {
            return Err(Error::Internal(format!(
                "identified class {c} has the wrong dimension vector"
            )));
        }
        Ok(c)
    }
}

fn build_table<K: Field>(indecomposables: &[Rep<K>]) -> Result<HomTable> {
    let dims = indecomposables
        .iter()
        .map(|a| {
            indecomposables
                .iter()
                .map(|b| hom_dim(a, b).map(|h| h as i64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomTable { dims })
}

/// Build `e_{α^t}` (0-based `t`): the simple at `i_t` over `Q_t`, pushed back
/// to the original quiver by `S⁻_{i_{t−1}}, …, S⁻_{i_1}`.
pub fn indecomposable<K: Field>(word: &AdaptedWord, t: usize, field: &K) -> Result<Rep<K>> {
    if t >= word.nu() {
        return Err(Error::RootIndexOutOfRange {
            index: t,
            nu: word.nu(),
        });
    }
    let letters = word.word();
    let mut rep = Rep::simple(word.quiver_at(t), field, letters[t]);
    for k in (0..t).rev() {
        rep = coreflection_functor(&rep, letters[k])?;
    }
    debug_assert_eq!(rep.quiver(), word.quiver());
    if rep.dims_i64() != word.root(t) {
        return Err(Error::Internal(format!(
            "indecomposable {t} has dimension vector {:?}, expected {:?}",
            rep.dims(),
            word.root(t)
        )));
    }
    Ok(rep)
}

pub fn rep_of_class<K: Field>(kit: &RepKit<K>, c: &IsoClass) -> Rep<K> {
    kit.rep_of_class(c)
}

pub fn identify<K: Field>(kit: &RepKit<K>, rep: &Rep<K>) -> Result<IsoClass> {
    kit.identify(rep)
}

pub fn hom_table<K: Field>(word: &AdaptedWord, field: K) -> Result<HomTable> {
    Ok(RepKit::new(word, field)?.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{adapted_word, build_diagram, homogeneity_solutions, Quiver, TypeLetter};
    use crate::field::{PrimeField, Rationals};
    use crate::linalg::Matrix;

    fn a2_word() -> AdaptedWord {
        let q = Quiver::new(build_diagram(TypeLetter::A, 2).unwrap(), &[(0, 1)]).unwrap();
        adapted_word(&q)
    }

    fn a3_word() -> AdaptedWord {
        let q = Quiver::new(build_diagram(TypeLetter::A, 3).unwrap(), &[(0, 1), (1, 2)]).unwrap();
        adapted_word(&q)
    }

    #[test]
    fn a2_hom_table() {
        let t = hom_table(&a2_word(), Rationals).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
    }

    #[test]
    fn a2_middle_indecomposable_is_identity_map() {
        let w = a2_word();
        let k = Rationals;
        let p = indecomposable(&w, 1, &k).unwrap();
        assert_eq!(p.dims(), &[1, 1]);
        assert!(p.map(0).get(0, 0) != &k.zero());
        // simple roots give simples: no arrows carry anything
        let s = indecomposable(&w, 0, &k).unwrap();
        assert_eq!(s.dims(), &[0, 1]);
        assert!(indecomposable(&w, 3, &k).is_err());
    }

    #[test]
    fn indecomposables_have_trivial_endomorphisms() {
        for (l, n, arrows) in [
            (TypeLetter::A, 3, vec![(0, 1), (2, 1)]),
            (TypeLetter::D, 4, vec![(0, 2), (2, 1), (3, 2)]),
        ] {
            let q = Quiver::new(build_diagram(l, n).unwrap(), &arrows).unwrap();
            let w = adapted_word(&q);
            let kit = RepKit::new(&w, Rationals).unwrap();
            for (t, e) in kit.indecomposables().iter().enumerate() {
                assert_eq!(e.dims_i64(), w.root(t));
                assert_eq!(hom_dim(e, e).unwrap(), 1);
                assert_eq!(super::super::ext_dim(e, e).unwrap(), 0);
            }
            assert!(kit.table().triangularity_violations().is_empty());
        }
    }

    #[test]
    fn identify_round_trip_a3() {
        let w = a3_word();
        let kit = RepKit::new(&w, PrimeField::new(3).unwrap()).unwrap();
        for c in homogeneity_solutions(&w, &[1, 1, 1]).unwrap() {
            let rep = kit.rep_of_class(&c);
            assert_eq!(rep.dims_i64(), w.dim_vector(&c));
            assert_eq!(kit.identify(&rep).unwrap(), c);
        }
        assert_eq!(
            kit.identify(&Rep::zero(w.quiver(), kit.field())).unwrap(),
            IsoClass::zero(6)
        );
    }

    #[test]
    fn identify_zero_map_as_semisimple() {
        let w = a2_word();
        let k = Rationals;
        let kit = RepKit::new(&w, k).unwrap();
        let rep = Rep::new(
            w.quiver().clone(),
            k,
            vec![1, 1],
            vec![Matrix::from_rows(vec![vec![k.zero()]], 1)],
        )
        .unwrap();
        assert_eq!(kit.hom_vector(&rep).unwrap(), vec![1, 1, 1]);
        assert_eq!(kit.identify(&rep).unwrap(), IsoClass(vec![1, 0, 1]));
    }

    #[test]
    fn unit_class_is_the_indecomposable() {
        let w = a3_word();
        let kit = RepKit::new(&w, Rationals).unwrap();
        for t in 0..w.nu() {
            let r = kit.rep_of_class(&IsoClass::unit(w.nu(), t));
            assert_eq!(r.dims(), kit.indecomposable(t).dims());
            assert_eq!(kit.identify(&r).unwrap(), IsoClass::unit(w.nu(), t));
        }
    }

    #[test]
    fn solve_rejects_negative() {
        let t = HomTable::from_rows(vec![vec![1, 1], vec![0, 1]]);
        assert!(t.solve(&[0, 1]).is_err());
        assert_eq!(t.solve(&[2, 1]).unwrap(), IsoClass(vec![1, 1]));
    }
}
