//! The verification suites behind `verify`.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::class::IsoClass;
use crate::error::Result;
use crate::field::PrimeField;
use crate::hall::{fill_e_values, riedtmann_check, smoothness_sum_check, theorem_main_check, HallContext};
use crate::orbits::{
    c_ij, elementary_ops, generic_class, point_counts, s_set, ElementaryOp, DEFAULT_OPS_PRIME, GENERIC_SAMPLES,
    GENERIC_SAMPLE_PRIME,
};
use crate::repkit::RepKit;

use super::report::{quiver_label, CheckRecord, SuiteReport, VerifyReport};
use super::{Job, Suite};

pub fn cmd_verify(job: &Job, suite: Suite) -> VerifyReport {
    let mut runner = Runner {
        job,
        ctx: HallContext::new(&job.word, job.config.guards, job.config.prime_source()),
    };
    let suites = suite
        .expand()
        .into_iter()
        .map(|s| {
            let checks = match s {
                Suite::Main => runner.main(),
                Suite::Geometric => runner.geometric(),
                Suite::Bongartz => runner.bongartz(),
                Suite::Riedtmann => runner.riedtmann(),
                Suite::All => unreachable!("expanded above"),
            };
            SuiteReport::new(s.name(), checks)
        })
        .collect();
    VerifyReport {
        quiver: quiver_label(&job.word),
        d: job.catalog.d().to_vec(),
        suites,
    }
}

struct Runner<'a> {
    job: &'a Job,
    ctx: HallContext,
}

fn op_label(u: &ElementaryOp) -> String {
    format!("Υ(s={}, t={}, {})", u.s + 1, u.t + 1, u.middle)
}

fn pair_label(a: &IsoClass, b: &IsoClass) -> String {
    format!("{a} < {b}")
}

impl Runner<'_> {
    /// Elementary operations that connect two classes of the catalog.
    fn catalog_ops(&self) -> Result<Vec<ElementaryOp>> {
        let catalog = &self.job.catalog;
        let members: BTreeSet<&IsoClass> = catalog.classes().iter().collect();
        let ops = elementary_ops(&self.job.word, DEFAULT_OPS_PRIME)?;
        Ok(ops
            .into_iter()
            .filter(|u| {
                catalog
                    .classes()
                    .iter()
                    .any(|c| u.apply(c).is_some_and(|up| members.contains(&up)))
            })
            .collect())
    }

    fn main(&mut self) -> Vec<CheckRecord> {
        let catalog = &self.job.catalog;
        let mut ops = match self.catalog_ops() {
            Ok(ops) => ops,
            Err(e) => return vec![CheckRecord::from_error("ops", "elementary operations", &e)],
        };
        if let Err(e) = fill_e_values(&mut self.ctx, &mut ops) {
            return vec![CheckRecord::from_error("ops", "e-values", &e)];
        }
        let mut out = Vec::new();
        let poset = catalog.poset();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if !poset.lt(a, b) {
                    continue;
                }
                let (cp, c) = (&poset.classes()[a], &poset.classes()[b]);
                let item = pair_label(cp, c);
                out.push(match theorem_main_check(&mut self.ctx, catalog, &ops, cp, c) {
                    Ok(m) => CheckRecord::new("derivative", item, m.pass)
                        .value("omega_at_1", &m.omega_at_1)
                        .value("derivative", &m.derivative)
                        .value("expected", &m.expected)
                        .value(
                            "connecting",
                            m.connecting.iter().map(op_label).collect::<Vec<_>>().join("; "),
                        )
                        .detail(if m.multiple { "several operations connect this pair" } else { "" }),
                    Err(e) => CheckRecord::from_error("derivative", item, &e),
                });
            }
        }
        for c in catalog.classes() {
            out.push(match smoothness_sum_check(&mut self.ctx, catalog, c) {
                Ok(s) => {
                    let mut rec = CheckRecord::new("sum", c.to_string(), s.pass)
                        .value("sum_from_min", &s.sum_from_min)
                        .value("dim_ed_support", s.dim_ed_support);
                    for (low, got, want) in &s.interval_sums {
                        if *got != crate::poly::rat(*want) {
                            rec = rec.value(&format!("interval {low}"), format!("{got} != {want}"));
                        }
                    }
                    rec
                }
                Err(e) => CheckRecord::from_error("sum", c.to_string(), &e),
            });
        }
        out
    }

    fn geometric(&mut self) -> Vec<CheckRecord> {
        let catalog = &self.job.catalog;
        let mut out = Vec::new();
        let ops = match elementary_ops(&self.job.word, DEFAULT_OPS_PRIME) {
            Ok(ops) => Some(ops),
            Err(e) => {
                out.push(CheckRecord::from_error("s-set", "elementary operations", &e));
                None
            }
        };
        let kit = PrimeField::new(GENERIC_SAMPLE_PRIME).and_then(|k| RepKit::new(&self.job.word, k));
        let mut rng = ChaCha8Rng::seed_from_u64(self.job.config.seed);
        for c in catalog.classes() {
            let item = c.to_string();
            let dim_j = catalog.dim_ed_support(c);
            out.push(match point_counts(catalog, c) {
                Ok(pc) => CheckRecord::new("euler", item.clone(), pc.euler_char == dim_j)
                    .value("chi", pc.euler_char)
                    .value("dim_ed_support", dim_j)
                    .value("point_count", &pc.projective),
                Err(e) => CheckRecord::from_error("euler", item.clone(), &e).detail(format!("P_c not divisible by q-1: {e}")),
            });
            if let Some(ops) = &ops {
                let got = s_set(catalog, ops, c);
                let want: Result<BTreeSet<IsoClass>> = catalog.support(c).into_iter().map(|a| c_ij(catalog, a)).collect();
                out.push(match (got, want) {
                    (Ok(got), Ok(want)) => CheckRecord::new("s-set", item.clone(), got == want)
                        .value("s_set", fmt_set(&got))
                        .value("c_ij", fmt_set(&want)),
                    (Err(e), _) | (_, Err(e)) => CheckRecord::from_error("s-set", item.clone(), &e),
                });
            }
            let generic = match &kit {
                Ok(kit) => generic_class(catalog, kit, c, GENERIC_SAMPLES, &mut rng),
                Err(e) => Err(crate::error::Error::Internal(e.to_string())),
            };
            out.push(match (generic, catalog.is_rationally_smooth(c)) {
                (Ok(g), Ok(smooth)) => CheckRecord::new("generic", item, (&g == c) == smooth)
                    .value("generic_class", &g)
                    .value("smooth", smooth),
                (Err(e), _) | (_, Err(e)) => CheckRecord::from_error("generic", item, &e),
            });
        }
        out
    }

    fn bongartz(&mut self) -> Vec<CheckRecord> {
        let catalog = &self.job.catalog;
        let mut out = Vec::new();
        for a in catalog.classes() {
            for b in catalog.classes() {
                let item = pair_label(a, b);
                out.push(match (catalog.leq(a, b), catalog.leq_dual(a, b)) {
                    (Ok(x), Ok(y)) => CheckRecord::new("hom-vs-dual", item, x == y).value("leq", x).value("leq_dual", y),
                    (Err(e), _) | (_, Err(e)) => CheckRecord::from_error("hom-vs-dual", item, &e),
                });
            }
        }
        let violations = catalog.poset().order_violations();
        out.push(
            CheckRecord::new("partial-order", "catalog", violations.is_empty()).detail(violations.join("; ")),
        );
        out
    }

    fn riedtmann(&mut self) -> Vec<CheckRecord> {
        let ops = match self.catalog_ops() {
            Ok(ops) => ops,
            Err(e) => return vec![CheckRecord::from_error("riedtmann", "elementary operations", &e)],
        };
        ops.iter()
            .map(|u| match riedtmann_check(&mut self.ctx, u.s, u.t, &u.middle) {
                Ok(r) => CheckRecord::new("riedtmann", op_label(u), r.pass)
                    .value("hall", &r.hall)
                    .value("ext", &r.ext)
                    .value("lhs", &r.lhs)
                    .value("rhs", &r.rhs),
                Err(e) => CheckRecord::from_error("riedtmann", op_label(u), &e),
            })
            .collect()
    }
}

fn fmt_set(s: &BTreeSet<IsoClass>) -> String {
    s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}
