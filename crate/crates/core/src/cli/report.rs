//! Report records and their json / dot / table renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::class::IsoClass;
use crate::dynkin::AdaptedWord;
use crate::error::{Error, Result};
use crate::orbits::OrbitCatalog;
use crate::poly::PolyRecord;

use super::{Format, Job, EXIT_FAILED, EXIT_GUARD, EXIT_OK};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub index: usize,
    pub class: IsoClass,
    pub label: String,
    pub orbit_dim: i64,
    /// Arrows of `J(c)` as 1-based `i>j`.
    pub support: Vec<String>,
    pub dim_ed_support: i64,
    pub smooth: bool,
    pub euler_char: i64,
    pub point_count: PolyRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub diagram: String,
    pub quiver: String,
    /// 1-based vertex labels.
    pub word: Vec<usize>,
    pub roots: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub dim_ed: i64,
    pub dim_gd: i64,
    pub orbits: Vec<OrbitRecord>,
    /// Strict relations `lower ≺ upper` by orbit index.
    pub order: Vec<(usize, usize)>,
    pub hasse: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetNode {
    pub index: usize,
    pub class: IsoClass,
    pub orbit_dim: i64,
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetReport {
    pub quiver: String,
    pub d: Vec<i64>,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Guard,
}

/// One checked item. `values` holds the exact quantities compared, so a
/// failing record is a complete counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub item: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
}

impl CheckRecord {
    pub fn new(check: &str, item: impl Into<String>, pass: bool) -> Self {
        Self {
            check: check.into(),
            item: item.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail: String::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.into(), v.to_string());
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Record for an item that could not be computed.
    pub fn from_error(check: &str, item: impl Into<String>, err: &Error) -> Self {
        let status = match err {
            Error::Guard(_) | Error::Interpolation(_) => Status::Guard,
            _ => Status::Fail,
        };
        Self {
            check: check.into(),
            item: item.into(),
            status,
            detail: err.to_string(),
            values: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub guarded: usize,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<CheckRecord>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            suite: suite.into(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            guarded: count(Status::Guard),
            checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub quiver: String,
    pub d: Vec<i64>,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    /// 1 if anything failed, else 3 if anything hit a guard, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.suites.iter().any(|s| s.failed > 0) {
            EXIT_FAILED
        } else if self.suites.iter().any(|s| s.guarded > 0) {
            EXIT_GUARD
        } else {
            EXIT_OK
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code() == EXIT_OK
    }
}

pub(crate) fn quiver_label(word: &AdaptedWord) -> String {
    word.quiver().to_string()
}

/// `c` as a sum of root dimension vectors, e.g. `(1,1,0) + 2(0,0,1)`.
pub fn class_label(word: &AdaptedWord, c: &IsoClass) -> String {
    let parts: Vec<String> = c
        .0
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(t, &m)| {
            let root = word.root(t).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            if m == 1 {
                format!("({root})")
            } else {
                format!("{m}({root})")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn support_strings(catalog: &OrbitCatalog, c: &IsoClass) -> Vec<String> {
    let arrows = catalog.word().quiver().arrows();
    catalog
        .support(c)
        .into_iter()
        .map(|a| format!("{}>{}", arrows[a].0 + 1, arrows[a].1 + 1))
        .collect()
}

fn strict_pairs(catalog: &OrbitCatalog) -> Vec<(usize, usize)> {
    let poset = catalog.poset();
    let n = poset.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| poset.lt(a, b))
        .collect()
}

pub fn cmd_orbits(job: &Job) -> Result<OrbitsReport> {
    let catalog = &job.catalog;
    let word = &job.word;
    let orbits = catalog
        .classes()
        .par_iter()
        .enumerate()
        .map(|(index, c)| {
            let row = catalog.smoothness_row(c)?;
            Ok(OrbitRecord {
                index,
                class: c.clone(),
                label: class_label(word, c),
                orbit_dim: row.orbit_dim,
                support: support_strings(catalog, c),
                dim_ed_support: row.dim_ed_support,
                smooth: row.rationally_smooth,
                euler_char: row.euler_char,
                point_count: row.point_count.into(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let hasse = catalog.poset().hasse().into_iter().map(|e| (e.lower, e.upper)).collect();
    Ok(OrbitsReport {
        diagram: word.diagram().to_string(),
        quiver: word.quiver().arrow_string(),
        word: word.word().iter().map(|i| i + 1).collect(),
        roots: word.roots().to_vec(),
        d: catalog.d().to_vec(),
        dim_ed: catalog.dim_ed(),
        dim_gd: catalog.dim_gd(),
        orbits,
        order: strict_pairs(catalog),
        hasse,
    })
}

pub fn cmd_poset(job: &Job) -> Result<PosetReport> {
    let catalog = &job.catalog;
    let nodes = catalog
        .classes()
        .iter()
        .enumerate()
        .map(|(index, c)| {
            Ok(PosetNode {
                index,
                class: c.clone(),
                orbit_dim: catalog.orbit_dim(c)?,
                smooth: catalog.is_rationally_smooth(c)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = catalog.poset().hasse().into_iter().map(|e| (e.lower, e.upper)).collect();
    Ok(PosetReport {
        quiver: quiver_label(&job.word),
        d: catalog.d().to_vec(),
        nodes,
        edges,
    })
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn dot(quiver: &str, nodes: &[PosetNode], edges: &[(usize, usize)]) -> String {
    let mut s = String::new();
    writeln!(s, "digraph degenerations {{").unwrap();
    writeln!(s, "  label=\"{quiver}\";").unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for n in nodes {
        let smooth = if n.smooth { "smooth" } else { "singular" };
        writeln!(s, "  n{} [label=\"{} | {} | {}\"];", n.index, n.class, n.orbit_dim, smooth).unwrap();
    }
    for (a, b) in edges {
        writeln!(s, "  n{a} -> n{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

fn poly_text(p: &PolyRecord) -> String {
    crate::poly::LaurentPoly::try_from(p.clone())
        .map(|p| p.to_string())
        .unwrap_or_else(|_| "?".into())
}

pub fn render_orbits(report: &OrbitsReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(report),
        Format::Dot => {
            let nodes: Vec<PosetNode> = report
                .orbits
                .iter()
                .map(|o| PosetNode {
                    index: o.index,
                    class: o.class.clone(),
                    orbit_dim: o.orbit_dim,
                    smooth: o.smooth,
                })
                .collect();
            Ok(dot(&format!("{} [{}]", report.diagram, report.quiver), &nodes, &report.hasse))
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "quiver  {} [{}]", report.diagram, report.quiver).unwrap();
            writeln!(s, "word    {:?}", report.word).unwrap();
            writeln!(s, "d       {:?}   dim E_d = {}   dim G_d = {}", report.d, report.dim_ed, report.dim_gd).unwrap();
            writeln!(s, "orbits  {}", report.orbits.len()).unwrap();
            writeln!(s).unwrap();
            writeln!(
                s,
                "{:>3}  {:<14} {:>4}  {:<16} {:>6}  {:<8} {:>3}  P_c(q)",
                "#", "c", "d(c)", "J(c)", "dimE_J", "smooth", "χ"
            )
            .unwrap();
            for o in &report.orbits {
                let class = o.class.to_string();
                writeln!(
                    s,
                    "{:>3}  {:<14} {:>4}  {:<16} {:>6}  {:<8} {:>3}  {}",
                    o.index,
                    class,
                    o.orbit_dim,
                    o.support.join(","),
                    o.dim_ed_support,
                    if o.smooth { "yes" } else { "no" },
                    o.euler_char,
                    poly_text(&o.point_count)
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

pub fn render_poset(report: &PosetReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(report),
        Format::Dot => Ok(dot(&report.quiver, &report.nodes, &report.edges)),
        Format::Table => {
            let mut s = String::new();
            for n in &report.nodes {
                writeln!(s, "n{}  {}  d={}", n.index, n.class, n.orbit_dim).unwrap();
            }
            for (a, b) in &report.edges {
                writeln!(s, "{} < {}", report.nodes[*a].class, report.nodes[*b].class).unwrap();
            }
            Ok(s)
        }
    }
}

pub fn render_verify(report: &VerifyReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(report),
        Format::Dot => Err(Error::Usage("verify has no dot output".into())),
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "quiver {}  d = {:?}", report.quiver, report.d).unwrap();
            for suite in &report.suites {
                writeln!(
                    s,
                    "suite {:<10} pass {:>4}  fail {:>4}  guard {:>4}",
                    suite.suite, suite.passed, suite.failed, suite.guarded
                )
                .unwrap();
                for c in suite.checks.iter().filter(|c| c.status != Status::Pass) {
                    let tag = if c.status == Status::Fail { "FAIL" } else { "GUARD" };
                    write!(s, "  {tag} {} {}", c.check, c.item).unwrap();
                    for (k, v) in &c.values {
                        write!(s, " {k}={v}").unwrap();
                    }
                    if !c.detail.is_empty() {
                        write!(s, " ({})", c.detail).unwrap();
                    }
                    writeln!(s).unwrap();
                }
            }
            let verdict = match report.exit_code() {
                EXIT_OK => "PASS",
                EXIT_GUARD => "GUARD",
                _ => "FAIL",
            };
            writeln!(s, "{verdict}").unwrap();
            Ok(s)
        }
    }
}
