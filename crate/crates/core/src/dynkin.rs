//! Cartan data, positive roots, simple reflections and sink-adapted reduced
//! words for simply-laced Dynkin types.
//!
//! Vertices are 0-based internally; all user-facing text (the CLI, `Display`
//! impls, DOT output) uses the 1-based labels below.
//!
//! Labeling:
//! * `A_n`: the path `1 - 2 - ⋯ - n`.
//! * `D_n`: vertex 3 is the branch point, adjacent to leaves 1 and 2 and to
//!   the chain `3 - 4 - ⋯ - n`.
//! * `E_n` (n = 6, 7, 8): Bourbaki, i.e. the chain `1 - 3 - 4 - ⋯ - n` with
//!   vertex 2 attached to 4.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class::IsoClass;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    D,
    E,
}

impl std::str::FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLetter::A),
            "D" | "d" => Ok(TypeLetter::D),
            "E" | "e" => Ok(TypeLetter::E),
            other => Err(Error::InvalidDiagram(format!(
                "unknown type letter {other:?}; expected A, D or E"
            ))),
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    letter: TypeLetter,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Unordered edges stored as `(i, j)` with `i < j`, sorted.
    edges: Vec<(usize, usize)>,
}

/// Build the diagram of type `letter` and rank `rank`.
pub fn build_diagram(letter: TypeLetter, rank: usize) -> Result<DynkinDiagram> {
    let edges: Vec<(usize, usize)> = match letter {
        TypeLetter::A => {
            if rank < 1 {
                return Err(Error::InvalidDiagram("type A requires rank n >= 1".into()));
            }
            (1..rank).map(|i| (i - 1, i)).collect()
        }
        TypeLetter::D => {
            if rank < 4 {
                return Err(Error::InvalidDiagram("type D requires rank n >= 4".into()));
            }
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e
        }
        TypeLetter::E => {
            if !(6..=8).contains(&rank) {
                return Err(Error::InvalidDiagram(
                    "type E requires rank n in {6, 7, 8}".into(),
                ));
            }
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e
        }
    };
    let mut edges = edges;
    edges.sort_unstable();
    let mut cartan = vec![vec![0i64; rank]; rank];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &edges {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
    }
    Ok(DynkinDiagram {
        letter,
        rank,
        cartan,
        edges,
    })
}

impl DynkinDiagram {
    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Symmetric bilinear form `(x, y)_Q = Σ a_ij x_i y_j`.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += self.cartan[i][j] * x[i] * y[j];
            }
        }
        s
    }

    /// Closed-form number of positive roots.
    pub fn expected_nu(&self) -> usize {
        let n = self.rank;
        match self.letter {
            TypeLetter::A => n * (n + 1) / 2,
            TypeLetter::D => n * (n - 1),
            TypeLetter::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    /// Orientation with every edge `i - j` (`i < j`) pointing `i → j`.
    pub fn default_quiver(&self) -> Quiver {
        Quiver {
            diagram: self.clone(),
            arrows: self.edges.clone(),
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// `s_i(z) = z − (z, α_i)_Q α_i`.
pub fn reflect(root: &[i64], i: usize, diagram: &DynkinDiagram) -> Result<Vec<i64>> {
    let n = diagram.rank;
    if i >= n {
        return Err(Error::VertexOutOfRange { vertex: i, rank: n });
    }
    if root.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "root has length {}, rank is {n}",
            root.len()
        )));
    }
    let pairing: i64 = (0..n).map(|j| diagram.cartan[i][j] * root[j]).sum();
    let mut out = root.to_vec();
    out[i] -= pairing;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn nu(&self) -> usize {
        self.positive_roots.len()
    }
}

/// All positive roots, by closing the simple roots under simple reflections.
/// Sorted by height, then lexicographically descending on coordinates.
pub fn positive_roots(diagram: &DynkinDiagram) -> RootSystem {
    let n = diagram.rank;
    let simple: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier = simple;
    while let Some(r) = frontier.pop() {
        for i in 0..n {
            let s = reflect(&r, i, diagram).expect("vertex in range");
            if s.iter().all(|&x| x >= 0) && seen.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    RootSystem {
        positive_roots: roots,
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A Dynkin diagram with one orientation per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    diagram: DynkinDiagram,
    /// `arrows[e] = (tail, head)` orients edge `e` of the diagram.
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Orient `diagram` by the given `(tail, head)` pairs (0-based). Each
    /// edge must be oriented exactly once.
    pub fn new(diagram: DynkinDiagram, arrows: &[(usize, usize)]) -> Result<Self> {
        let n = diagram.rank;
        let mut oriented = vec![None; diagram.edges.len()];
        for &(t, h) in arrows {
            if t >= n || h >= n {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {}>{} uses a vertex outside 1..={n}",
                    t + 1,
                    h + 1
                )));
            }
            let key = (t.min(h), t.max(h));
            let Some(e) = diagram.edges.iter().position(|&x| x == key) else {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {}>{} is not an edge of {diagram}",
                    t + 1,
                    h + 1
                )));
            };
            if oriented[e].replace((t, h)).is_some() {
                return Err(Error::InvalidQuiver(format!(
                    "edge {}-{} oriented twice",
                    key.0 + 1,
                    key.1 + 1
                )));
            }
        }
        let arrows = oriented
            .into_iter()
            .enumerate()
            .map(|(e, a)| {
                a.ok_or_else(|| {
                    let (i, j) = diagram.edges[e];
                    Error::InvalidQuiver(format!("edge {}-{} has no orientation", i + 1, j + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { diagram, arrows })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank
    }

    /// Arrows in edge order, as `(tail, head)`.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(t, _)| t != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, h)| h != i)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_sink(i)).collect()
    }

    /// Reverse every arrow incident to `i`.
    pub fn reversed_at(&self, i: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(t, h)| if t == i || h == i { (h, t) } else { (t, h) })
            .collect();
        Quiver {
            diagram: self.diagram.clone(),
            arrows,
        }
    }

    /// `dim E_d = Σ_{i→j} d_i d_j`, restricted to the arrows in `subset`
    /// when given.
    pub fn rep_space_dim(&self, d: &[i64], subset: Option<&BTreeSet<usize>>) -> i64 {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(a, _)| subset.is_none_or(|s| s.contains(a)))
            .map(|(_, &(t, h))| d[t] * d[h])
            .sum()
    }

    /// 1-based `i>j` listing, comma separated.
    pub fn arrow_string(&self) -> String {
        self.arrows
            .iter()
            .map(|&(t, h)| format!("{}>{}", t + 1, h + 1))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.diagram, self.arrow_string())
    }
}

/// A reduced word for `w₀` adapted to a quiver, with its root order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedWord {
    quiver: Quiver,
    word: Vec<usize>,
    roots: Vec<Vec<i64>>,
    /// `quivers[k]` is `Q_{k+1}`; `word[k]` is a sink of it.
    quivers: Vec<Quiver>,
}

/// Sink elimination: repeatedly emit the smallest-index sink whose root
/// `s_{i_1}⋯s_{i_{k−1}}(α_i)` is still positive, then reverse the arrows at
/// it, for `ν` steps.
///
/// The positivity filter keeps the word reduced; the bare smallest-sink rule
/// already fails on `A4` with the linear orientation.
pub fn adapted_word(quiver: &Quiver) -> AdaptedWord {
    let diagram = quiver.diagram();
    let n = diagram.rank();
    let nu = positive_roots(diagram).nu();
    let mut word = Vec::with_capacity(nu);
    let mut roots = Vec::with_capacity(nu);
    let mut quivers = Vec::with_capacity(nu);
    let mut current = quiver.clone();
    for _ in 0..nu {
        let (i, root) = current
            .sinks()
            .into_iter()
            .map(|i| {
                let mut root = unit(n, i);
                for &j in word.iter().rev() {
                    root = reflect(&root, j, diagram).expect("vertex in range");
                }
                (i, root)
            })
            .find(|(_, r)| r.iter().all(|&x| x >= 0))
            .expect("an adapted prefix always extends by a sink");
        word.push(i);
        roots.push(root);
        let next = current.reversed_at(i);
        quivers.push(current);
        current = next;
    }
    AdaptedWord {
        quiver: quiver.clone(),
        word,
        roots,
        quivers,
    }
}

impl AdaptedWord {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        self.quiver.diagram()
    }

    pub fn rank(&self) -> usize {
        self.quiver.rank()
    }

    pub fn nu(&self) -> usize {
        self.word.len()
    }

    /// The word `(i_1, …, i_ν)`, 0-based vertices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The induced root order `(α¹, …, α^ν)`.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, t: usize) -> &[i64] {
        &self.roots[t]
    }

    /// The iterated quiver `Q_{k+1}` (0-based `k`).
    pub fn quiver_at(&self, k: usize) -> &Quiver {
        &self.quivers[k]
    }

    /// Position of the root `α`, if it is positive.
    pub fn position(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    /// Position of the simple root `α_i`.
    pub fn simple_position(&self, i: usize) -> usize {
        self.position(&unit(self.rank(), i))
            .expect("every simple root is positive")
    }

    pub fn dim_vector(&self, c: &IsoClass) -> Vec<i64> {
        c.dim_vector(&self.roots, self.rank())
    }

    /// Check every invariant an adapted word must satisfy; returns a list
    /// of violations (empty when valid).
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let diagram = self.diagram();
        let expected = positive_roots(diagram);
        if self.nu() != diagram.expected_nu() || expected.nu() != diagram.expected_nu() {
            problems.push(format!(
                "word length {} / root count {} differ from {}",
                self.nu(),
                expected.nu(),
                diagram.expected_nu()
            ));
        }
        let distinct: HashSet<&Vec<i64>> = self.roots.iter().collect();
        if distinct.len() != self.roots.len() {
            problems.push("root order repeats a root".into());
        }
        for r in &self.roots {
            if !expected.positive_roots.contains(r) {
                problems.push(format!("{r:?} is not a positive root"));
            }
        }
        let mut q = self.quiver.clone();
        for (k, &i) in self.word.iter().enumerate() {
            if q != self.quivers[k] {
                problems.push(format!("stored quiver Q_{} is inconsistent", k + 1));
            }
            if !q.is_sink(i) {
                problems.push(format!("letter {} is not a sink of Q_{}", i + 1, k + 1));
            }
            q = q.reversed_at(i);
        }
        problems
    }
}

/// All `c ∈ ℕ^ν` with `Σ_t c_t α^t = d`, by bounded depth-first search.
pub fn homogeneity_solutions(word: &AdaptedWord, d: &[i64]) -> Result<Vec<IsoClass>> {
    let n = word.rank();
    if d.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "dimension vector has length {}, rank is {n}",
            d.len()
        )));
    }
    if d.iter().any(|&x| x < 0) {
        return Err(Error::DimensionMismatch(
            "dimension vector has a negative entry".into(),
        ));
    }
    let roots = word.roots();
    // covered[t][k]: does some root at position >= t have a positive k-th coordinate.
    let mut covered = vec![vec![false; n]; roots.len() + 1];
    for t in (0..roots.len()).rev() {
        for k in 0..n {
            covered[t][k] = covered[t + 1][k] || roots[t][k] > 0;
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; roots.len()];
    let mut remaining = d.to_vec();
    dfs(roots, &covered, 0, &mut remaining, &mut current, &mut out);
    Ok(out)
}

fn dfs(
    roots: &[Vec<i64>],
    covered: &[Vec<bool>],
    t: usize,
    remaining: &mut Vec<i64>,
    current: &mut Vec<u32>,
    out: &mut Vec<IsoClass>,
) {
    if remaining
        .iter()
        .enumerate()
        .any(|(k, &r)| r > 0 && !covered[t][k])
    {
        return;
    }
    if t == roots.len() {
        out.push(IsoClass(current.clone()));
        return;
    }
    let root = &roots[t];
    let bound = root
        .iter()
        .zip(remaining.iter())
        .filter(|(&a, _)| a > 0)
        .map(|(&a, &r)| r / a)
        .min()
        .unwrap_or(0);
    for m in (0..=bound).rev() {
        for (r, a) in remaining.iter_mut().zip(root) {
            *r -= m * a;
        }
        current[t] = m as u32;
        dfs(roots, covered, t + 1, remaining, current, out);
        for (r, a) in remaining.iter_mut().zip(root) {
            *r += m * a;
        }
    }
    current[t] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> DynkinDiagram {
        build_diagram(TypeLetter::A, n).unwrap()
    }

    #[test]
    fn a2_cartan() {
        let d = a(2);
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.edges(), &[(0, 1)]);
    }

    #[test]
    fn a1_has_no_edges() {
        let d = a(1);
        assert_eq!(d.cartan(), &[vec![2]]);
        assert!(d.edges().is_empty());
    }

    #[test]
    fn d4_branch_vertex() {
        let d = build_diagram(TypeLetter::D, 4).unwrap();
        assert_eq!(d.edges(), &[(0, 2), (1, 2), (2, 3)]);
        let c = d.cartan();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c[i][j], c[j][i]);
            }
        }
        assert_eq!(c[2].iter().filter(|&&x| x == -1).count(), 3);
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(build_diagram(TypeLetter::A, 0).is_err());
        assert!(build_diagram(TypeLetter::D, 3).is_err());
        assert!(build_diagram(TypeLetter::E, 5).is_err());
        assert!(build_diagram(TypeLetter::E, 9).is_err());
        let msg = build_diagram(TypeLetter::D, 2).unwrap_err().to_string();
        assert!(msg.contains("n >= 4"), "{msg}");
    }

    #[test]
    fn a2_roots_in_graded_order() {
        let rs = positive_roots(&a(2));
        assert_eq!(rs.positive_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for (l, n) in [
            (TypeLetter::A, 1),
            (TypeLetter::A, 5),
            (TypeLetter::D, 4),
            (TypeLetter::D, 6),
            (TypeLetter::E, 6),
            (TypeLetter::E, 7),
            (TypeLetter::E, 8),
        ] {
            let d = build_diagram(l, n).unwrap();
            let rs = positive_roots(&d);
            assert_eq!(rs.nu(), d.expected_nu(), "{d}");
            for r in &rs.positive_roots {
                assert_eq!(d.inner(r, r), 2);
            }
        }
        assert_eq!(positive_roots(&build_diagram(TypeLetter::D, 4).unwrap()).nu(), 12);
        assert_eq!(positive_roots(&build_diagram(TypeLetter::E, 6).unwrap()).nu(), 36);
    }

    #[test]
    fn reflect_examples() {
        let d = a(2);
        assert_eq!(reflect(&[1, 0], 1, &d).unwrap(), vec![1, 1]);
        assert_eq!(reflect(&[1, 0], 0, &d).unwrap(), vec![-1, 0]);
        assert!(reflect(&[1, 0], 2, &d).is_err());
    }

    #[test]
    fn a2_adapted_word() {
        let q = Quiver::new(a(2), &[(0, 1)]).unwrap();
        let w = adapted_word(&q);
        assert_eq!(w.word(), &[1, 0, 1]);
        assert_eq!(w.roots(), &[vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert!(w.validate().is_empty());
    }

    #[test]
    fn a1_adapted_word() {
        let q = a(1).default_quiver();
        let w = adapted_word(&q);
        assert_eq!(w.word(), &[0]);
    }

    #[test]
    fn a3_linear_word_starts_at_the_sink() {
        let q = Quiver::new(a(3), &[(0, 1), (1, 2)]).unwrap();
        let w = adapted_word(&q);
        assert_eq!(w.nu(), 6);
        assert_eq!(w.word()[0], 2);
        assert!(w.validate().is_empty());
    }

    /// Brute force over all words of length 3 in A2: the words that are
    /// reduced for w₀ and adapted to 1→2.
    #[test]
    fn a2_adapted_word_agrees_with_enumeration() {
        let d = a(2);
        let q = Quiver::new(d.clone(), &[(0, 1)]).unwrap();
        let mut adapted = Vec::new();
        for w in 0..8usize {
            let word: Vec<usize> = (0..3).map(|k| (w >> k) & 1).collect();
            // reduced iff all partial roots are positive
            let mut ok = true;
            for t in 0..3 {
                let mut r = unit(2, word[t]);
                for &j in word[..t].iter().rev() {
                    r = reflect(&r, j, &d).unwrap();
                }
                ok &= r.iter().all(|&x| x >= 0);
            }
            let mut cur = q.clone();
            for &i in &word {
                ok &= cur.is_sink(i);
                cur = cur.reversed_at(i);
            }
            if ok {
                adapted.push(word);
            }
        }
        assert_eq!(adapted, vec![vec![1, 0, 1]]);
    }

    #[test]
    fn every_orientation_yields_a_valid_word() {
        for (l, n) in [
            (TypeLetter::A, 2),
            (TypeLetter::A, 4),
            (TypeLetter::A, 5),
            (TypeLetter::D, 4),
            (TypeLetter::D, 5),
            (TypeLetter::E, 6),
        ] {
            let d = build_diagram(l, n).unwrap();
            let m = d.edges().len();
            for mask in 0..(1usize << m) {
                let arrows: Vec<_> = d
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(e, &(i, j))| if mask >> e & 1 == 1 { (j, i) } else { (i, j) })
                    .collect();
                let q = Quiver::new(d.clone(), &arrows).unwrap();
                let w = adapted_word(&q);
                assert!(w.validate().is_empty(), "{q}: {:?}", w.validate());
            }
        }
    }

    #[test]
    fn quiver_validation() {
        let d = a(3);
        assert!(Quiver::new(d.clone(), &[(0, 1)]).is_err());
        assert!(Quiver::new(d.clone(), &[(0, 2), (1, 2)]).is_err());
        assert!(Quiver::new(d.clone(), &[(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Quiver::new(d, &[(1, 0), (2, 1)]).is_ok());
    }

    #[test]
    fn homogeneity_examples() {
        let q = Quiver::new(a(2), &[(0, 1)]).unwrap();
        let w = adapted_word(&q);
        let sols = homogeneity_solutions(&w, &[1, 1]).unwrap();
        assert_eq!(sols, vec![IsoClass(vec![1, 0, 1]), IsoClass(vec![0, 1, 0])]);
        assert_eq!(
            homogeneity_solutions(&w, &[0, 0]).unwrap(),
            vec![IsoClass::zero(3)]
        );
        let q3 = Quiver::new(a(3), &[(0, 1), (1, 2)]).unwrap();
        let w3 = adapted_word(&q3);
        assert_eq!(homogeneity_solutions(&w3, &[1, 1, 1]).unwrap().len(), 4);
    }

    #[test]
    fn trace_is_additive() {
        let d = build_diagram(TypeLetter::D, 4).unwrap();
        let w = adapted_word(&d.default_quiver());
        let dim = [1, 1, 2, 1];
        for c in homogeneity_solutions(&w, &dim).unwrap() {
            let tr: i64 = c
                .0
                .iter()
                .zip(w.roots())
                .map(|(&ct, r)| i64::from(ct) * r.iter().sum::<i64>())
                .sum();
            assert_eq!(tr, dim.iter().sum::<i64>());
            assert_eq!(w.dim_vector(&c), dim.to_vec());
        }
    }
}
