//! Orbit catalogs of `E_d`, the degeneration order, elementary operations,
//! supports and the smoothness classifier.

mod ops;
mod smooth;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::class::IsoClass;
use crate::dynkin::{homogeneity_solutions, AdaptedWord};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::poly::{gl_order, LaurentPoly, Var};
use crate::repkit::{HomTable, RepKit};

pub use ops::{elementary_ops, elementary_ops_at, ops_at, ElementaryOp, DEFAULT_OPS_PRIME};
pub use smooth::{
    c_ij, generic_class, point_counts, s_set, support, PointCounts, SmoothnessRow,
    GENERIC_SAMPLES, GENERIC_SAMPLE_PRIME,
};

/// All isomorphism classes of representations of dimension vector `d`,
/// together with the data every query needs (hom table, arrow supports).
#[derive(Clone, Debug)]
pub struct OrbitCatalog {
    word: AdaptedWord,
    d: Vec<i64>,
    classes: Vec<IsoClass>,
    table: HomTable,
    /// Arrows on which `e_{α^t}` acts nonzero.
    root_support: Vec<BTreeSet<usize>>,
    dim_ed: i64,
    dim_gd: i64,
}

impl OrbitCatalog {
    /// Build the catalog with indecomposables over `ℚ`.
    pub fn new(word: &AdaptedWord, d: &[i64]) -> Result<Self> {
        Self::with_kit(&RepKit::new(word, Rationals)?, d)
    }

    pub fn with_kit<K: Field>(kit: &RepKit<K>, d: &[i64]) -> Result<Self> {
        let word = kit.word().clone();
        let classes = homogeneity_solutions(&word, d)?;
        let root_support = kit
            .indecomposables()
            .iter()
            .map(|e| e.nonzero_arrows().into_iter().collect())
            .collect();
        let dim_ed = word.quiver().rep_space_dim(d, None);
        let dim_gd = d.iter().map(|x| x * x).sum();
        Ok(Self {
            d: d.to_vec(),
            classes,
            table: kit.table().clone(),
            root_support,
            dim_ed,
            dim_gd,
            word,
        })
    }

    pub fn word(&self) -> &AdaptedWord {
        &self.word
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn nu(&self) -> usize {
        self.word.nu()
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn table(&self) -> &HomTable {
        &self.table
    }

    /// `dim E_d = Σ_{i→j} d_i d_j`.
    pub fn dim_ed(&self) -> i64 {
        self.dim_ed
    }

    /// `dim G_d = Σ_i d_i²`.
    pub fn dim_gd(&self) -> i64 {
        self.dim_gd
    }

    pub fn root_support(&self, t: usize) -> &BTreeSet<usize> {
        &self.root_support[t]
    }

    pub fn index_of(&self, c: &IsoClass) -> Option<usize> {
        self.classes.iter().position(|x| x == c)
    }

    fn check(&self, c: &IsoClass) -> Result<()> {
        if c.len() != self.nu() || self.word.dim_vector(c) != self.d {
            return Err(Error::NotInCatalog(c.0.clone()));
        }
        Ok(())
    }

    /// `d(c) = Σ_i d_i² − [e(c), e(c)]`.
    pub fn orbit_dim(&self, c: &IsoClass) -> Result<i64> {
        self.check(c)?;
        Ok(self.dim_gd - self.table.hom_between(c, c))
    }

    /// `c' ≼ c`: `[e_{α^s}, e(c')] ≥ [e_{α^s}, e(c)]` for every `s`.
    pub fn leq(&self, cprime: &IsoClass, c: &IsoClass) -> Result<bool> {
        self.check(cprime)?;
        self.check(c)?;
        Ok((0..self.nu()).all(|s| {
            self.table.hom_from_indecomposable(s, cprime) >= self.table.hom_from_indecomposable(s, c)
        }))
    }

    /// The same order tested against homs into the indecomposables.
    pub fn leq_dual(&self, cprime: &IsoClass, c: &IsoClass) -> Result<bool> {
        self.check(cprime)?;
        self.check(c)?;
        Ok((0..self.nu()).all(|s| {
            self.table.hom_to_indecomposable(cprime, s) >= self.table.hom_to_indecomposable(c, s)
        }))
    }

    /// The semisimple class: `d_i` copies of each simple.
    pub fn cmin(&self) -> IsoClass {
        let mut c = IsoClass::zero(self.nu());
        for (i, &di) in self.d.iter().enumerate() {
            c.0[self.word.simple_position(i)] = di as u32;
        }
        c
    }

    /// `J(c)`: arrows on which some summand of `e(c)` acts nonzero.
    pub fn support(&self, c: &IsoClass) -> BTreeSet<usize> {
        c.0.iter()
            .enumerate()
            .filter(|(_, &ct)| ct > 0)
            .flat_map(|(t, _)| self.root_support[t].iter().copied())
            .collect()
    }

    /// `dim E_d(J(c))`.
    pub fn dim_ed_support(&self, c: &IsoClass) -> i64 {
        self.word
            .quiver()
            .rep_space_dim(&self.d, Some(&self.support(c)))
    }

    /// Rationally smooth iff `d(c) = dim E_d(J(c))`, i.e. the closure is the
    /// coordinate subspace `E_d(J(c))`.
    pub fn is_rationally_smooth(&self, c: &IsoClass) -> Result<bool> {
        Ok(self.orbit_dim(c)? == self.dim_ed_support(c))
    }

    /// `a_c(q) = q^{Σ_{s<t} c_s c_t H[s][t]} Π_s |GL_{c_s}(F_q)|`.
    pub fn aut_order(&self, c: &IsoClass) -> LaurentPoly {
        aut_order(&self.table, c)
    }

    /// `|G_d(F_q)| = Π_i |GL_{d_i}(F_q)|`.
    pub fn gd_order(&self) -> LaurentPoly {
        self.d
            .iter()
            .fold(LaurentPoly::one(Var::Q), |acc, &di| &acc * &gl_order(di as u32))
    }

    /// The class with `d(c) = dim E_d`.
    pub fn dense_class(&self) -> Option<&IsoClass> {
        self.classes
            .iter()
            .find(|c| self.orbit_dim(c).ok() == Some(self.dim_ed))
    }

    pub fn poset(&self) -> DegenerationPoset {
        DegenerationPoset::new(self)
    }
}

pub fn aut_order(table: &HomTable, c: &IsoClass) -> LaurentPoly {
    let mut exp = 0i64;
    let mut acc = LaurentPoly::one(Var::Q);
    for (s, &cs) in c.0.iter().enumerate() {
        if cs == 0 {
            continue;
        }
        acc = &acc * &gl_order(cs);
        for (t, &ct) in c.0.iter().enumerate().skip(s + 1) {
            exp += i64::from(cs) * i64::from(ct) * table.get(s, t);
        }
    }
    acc.shift(exp)
}

/// The degeneration order on a catalog as a boolean matrix.
#[derive(Clone, Debug)]
pub struct DegenerationPoset {
    classes: Vec<IsoClass>,
    /// `leq[a][b]` iff `classes[a] ≼ classes[b]`.
    leq: Vec<Vec<bool>>,
    orbit_dims: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
}

impl DegenerationPoset {
    pub fn new(catalog: &OrbitCatalog) -> Self {
        let classes = catalog.classes().to_vec();
        let leq = classes
            .iter()
            .map(|a| {
                classes
                    .iter()
                    .map(|b| catalog.leq(a, b).expect("catalog classes"))
                    .collect()
            })
            .collect();
        let orbit_dims = classes
            .iter()
            .map(|c| catalog.orbit_dim(c).expect("catalog classes"))
            .collect();
        Self {
            classes,
            leq,
            orbit_dims,
        }
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn orbit_dims(&self) -> &[i64] {
        &self.orbit_dims
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Transitive reduction, ordered by (lower, upper) index.
    pub fn hasse(&self) -> Vec<HasseEdge> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                let covered = (0..n).any(|m| self.lt(a, m) && self.lt(m, b));
                if !covered {
                    edges.push(HasseEdge { lower: a, upper: b });
                }
            }
        }
        edges
    }

    /// Violations of reflexivity, antisymmetry, transitivity and dimension
    /// strictness; empty for a genuine degeneration order.
    pub fn order_violations(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            if !self.leq[a][a] {
                out.push(format!("{} is not ≼ itself", self.classes[a]));
            }
            for b in 0..n {
                if a != b && self.leq[a][b] && self.leq[b][a] {
                    out.push(format!("{} and {} are mutually ≼", self.classes[a], self.classes[b]));
                }
                if self.lt(a, b) && self.orbit_dims[a] >= self.orbit_dims[b] {
                    out.push(format!(
                        "{} ≺ {} but d = {} ≥ {}",
                        self.classes[a], self.classes[b], self.orbit_dims[a], self.orbit_dims[b]
                    ));
                }
                for m in 0..n {
                    if self.leq[a][m] && self.leq[m][b] && !self.leq[a][b] {
                        out.push(format!(
                            "{} ≼ {} ≼ {} breaks transitivity",
                            self.classes[a], self.classes[m], self.classes[b]
                        ));
                    }
                }
            }
        }
        out
    }
}
