//! Acceptance criteria. Each test prints one PASS/FAIL line straight to
//! stdout (bypassing the harness capture) and then asserts.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use dynkin_orbits::dynkin::{adapted_word, build_diagram, homogeneity_solutions, AdaptedWord, Quiver, TypeLetter};
use dynkin_orbits::field::{next_prime, PrimeField, Rationals};
use dynkin_orbits::hall::{
    fill_e_values, hall_associativity, riedtmann_check, smoothness_sum_check, theorem_main_check, Guards,
    HallContext, Interpolated, PrimeCounter, PrimeSource,
};
use dynkin_orbits::orbits::{
    c_ij, elementary_ops, generic_class, point_counts, s_set, ElementaryOp, OrbitCatalog, DEFAULT_OPS_PRIME,
    GENERIC_SAMPLES, GENERIC_SAMPLE_PRIME,
};
use dynkin_orbits::poly::{rat, LaurentPoly, Var};
use dynkin_orbits::repkit::{euler_form, ext_dim_by_cokernel, hom_dim, hom_table, IsoClass, Rep, RepKit};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use TypeLetter::{A, D, E};

fn verdict(n: u32, name: &str, failures: &[String], detail: String) {
    let ok = failures.is_empty();
    let line = format!("{} criterion {n}: {name} [{detail}]", if ok { "PASS" } else { "FAIL" });
    let _ = writeln!(std::io::stdout().lock(), "{line}");
    assert!(ok, "{line}\n{}", failures.join("\n"));
}

fn word(letter: TypeLetter, rank: usize, arrows: &[(usize, usize)]) -> AdaptedWord {
    adapted_word(&Quiver::new(build_diagram(letter, rank).unwrap(), arrows).unwrap())
}

fn default_word(letter: TypeLetter, rank: usize) -> AdaptedWord {
    adapted_word(&build_diagram(letter, rank).unwrap().default_quiver())
}

/// Every orientation of the diagram.
fn all_words(letter: TypeLetter, rank: usize) -> Vec<AdaptedWord> {
    let diagram = build_diagram(letter, rank).unwrap();
    let edges = diagram.edges().to_vec();
    (0u32..1 << edges.len())
        .map(|mask| {
            let arrows: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| if mask >> k & 1 == 0 { (i, j) } else { (j, i) })
                .collect();
            adapted_word(&Quiver::new(diagram.clone(), &arrows).unwrap())
        })
        .collect()
}

/// The four catalogs of the derivative criterion.
fn main_catalogs() -> Vec<OrbitCatalog> {
    vec![
        OrbitCatalog::new(&word(A, 2, &[(0, 1)]), &[1, 1]).unwrap(),
        OrbitCatalog::new(&word(A, 3, &[(0, 1), (1, 2)]), &[1, 1, 1]).unwrap(),
        OrbitCatalog::new(&word(A, 3, &[(0, 1), (1, 2)]), &[1, 2, 1]).unwrap(),
        OrbitCatalog::new(&default_word(D, 4), &[1, 1, 1, 1]).unwrap(),
    ]
}

/// A2 and A3 catalogs in every orientation, d = (1,1) / (1,1,1) / (1,2,1).
fn small_type_a_catalogs() -> Vec<OrbitCatalog> {
    let mut out: Vec<_> = all_words(A, 2)
        .iter()
        .map(|w| OrbitCatalog::new(w, &[1, 1]).unwrap())
        .collect();
    for w in all_words(A, 3) {
        out.push(OrbitCatalog::new(&w, &[1, 1, 1]).unwrap());
        out.push(OrbitCatalog::new(&w, &[1, 2, 1]).unwrap());
    }
    out
}

fn label(c: &OrbitCatalog) -> String {
    format!("{} d={:?}", c.word().quiver(), c.d())
}

fn ops_with_e(ctx: &mut HallContext) -> Vec<ElementaryOp> {
    let mut ops = elementary_ops(ctx.word(), DEFAULT_OPS_PRIME).unwrap();
    fill_e_values(ctx, &mut ops).unwrap();
    ops
}

fn ctx_for(word: &AdaptedWord) -> HallContext {
    HallContext::new(word, Guards::default(), PrimeSource::consecutive())
}

#[test]
fn criterion_1_a2_golden_run() {
    let start = Instant::now();
    let mut fail = Vec::new();
    let w = word(A, 2, &[(0, 1)]);
    let cat = OrbitCatalog::new(&w, &[1, 1]).unwrap();
    let low = IsoClass(vec![1, 0, 1]);
    let high = IsoClass(vec![0, 1, 0]);
    let classes: BTreeSet<_> = cat.classes().iter().cloned().collect();
    if classes != BTreeSet::from([low.clone(), high.clone()]) {
        fail.push(format!("catalog {classes:?}"));
    }
    if !(cat.leq(&low, &high).unwrap() && !cat.leq(&high, &low).unwrap()) {
        fail.push("expected the chain (1,0,1) < (0,1,0)".into());
    }
    for (c, chi) in [(&low, 0), (&high, 1)] {
        if !cat.is_rationally_smooth(c).unwrap() {
            fail.push(format!("{c} not smooth"));
        }
        let got = point_counts(&cat, c).unwrap().euler_char;
        if got != chi {
            fail.push(format!("χ({c}) = {got}, want {chi}"));
        }
    }
    let mut ctx = ctx_for(&w);
    let ops = ops_with_e(&mut ctx);
    if ops.len() != 1 || ops[0].e_value != Some(1) {
        fail.push(format!("operations {ops:?}"));
    }
    let m = theorem_main_check(&mut ctx, &cat, &ops, &low, &high).unwrap();
    let u = &ops[0];
    let formula = rat(-2 * i64::from(low.0[u.s]) * i64::from(low.0[u.t]));
    if !(m.pass && m.derivative == rat(-2) && formula == rat(-2)) {
        fail.push(format!("derivative {} expected {}", m.derivative, m.expected));
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        fail.push(format!("took {elapsed:?}"));
    }
    verdict(1, "A2 golden run", &fail, format!("D = {}, {elapsed:.2?}", m.derivative));
}

#[test]
fn criterion_2_non_smooth_detection() {
    let start = Instant::now();
    let mut fail = Vec::new();
    let w = word(A, 3, &[(0, 1), (1, 2)]);
    let cat = OrbitCatalog::new(&w, &[1, 2, 1]).unwrap();
    let mut c = IsoClass::zero(w.nu());
    c.0[w.position(&[1, 1, 0]).unwrap()] = 1;
    c.0[w.position(&[0, 1, 1]).unwrap()] = 1;
    let d = cat.orbit_dim(&c).unwrap();
    let dj = cat.dim_ed_support(&c);
    if (d, dj) != (3, 4) || cat.is_rationally_smooth(&c).unwrap() {
        fail.push(format!("d(c) = {d}, dim E_d(J(c)) = {dj}"));
    }
    let singular: Vec<_> = cat
        .classes()
        .iter()
        .filter(|x| !cat.is_rationally_smooth(x).unwrap())
        .collect();
    if singular != vec![&c] {
        fail.push(format!("non-smooth classes {singular:?}"));
    }
    let kit = RepKit::new(&w, PrimeField::new(GENERIC_SAMPLE_PRIME).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let generic = generic_class(&cat, &kit, &c, GENERIC_SAMPLES, &mut rng).unwrap();
    if generic == c {
        fail.push("generic point of E_d(J(c)) lies in the orbit of c".into());
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        fail.push(format!("took {elapsed:?}"));
    }
    verdict(
        2,
        "non-smooth detection on A3 d=(1,2,1)",
        &fail,
        format!("c = {c}, d(c) = {d} < {dj}, generic = {generic}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_3_derivative_at_one() {
    let start = Instant::now();
    let mut fail = Vec::new();
    let mut pairs = 0;
    let mut nonzero = 0;
    let mut multiple = 0;
    for cat in main_catalogs() {
        let mut ctx = ctx_for(cat.word());
        let ops = ops_with_e(&mut ctx);
        let poset = cat.poset();
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if !poset.lt(a, b) {
                    continue;
                }
                let (cp, c) = (&poset.classes()[a], &poset.classes()[b]);
                let m = theorem_main_check(&mut ctx, &cat, &ops, cp, c).unwrap();
                pairs += 1;
                let connected = !m.connecting.is_empty();
                if m.derivative != rat(0) {
                    nonzero += 1;
                }
                if m.multiple {
                    multiple += 1;
                    let _ = writeln!(std::io::stdout().lock(), "  note: several operations connect {cp} < {c} in {}", label(&cat));
                }
                if !m.pass || connected != (m.derivative != rat(0)) {
                    fail.push(format!(
                        "{}: {cp} < {c}: Ω(1) = {}, D = {}, expected {}",
                        label(&cat),
                        m.omega_at_1,
                        m.derivative,
                        m.expected
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(600) {
        fail.push(format!("took {elapsed:?}"));
    }
    verdict(
        3,
        "Ω(1) = 0 and dΩ/dv(1) = −2 c'_s c'_t e on every comparable pair",
        &fail,
        format!("{pairs} pairs, {nonzero} nonzero derivatives, {multiple} with several operations, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_4_e_value_sets() {
    let mut fail = Vec::new();
    let mut seen: BTreeMap<String, BTreeMap<i64, usize>> = BTreeMap::new();
    let mut readings_differ = 0;
    let mut cases: Vec<(String, AdaptedWord, Vec<i64>)> = Vec::new();
    for rank in 2..=4 {
        for w in all_words(A, rank) {
            cases.push((format!("A{rank}"), w, vec![1]));
        }
    }
    for w in all_words(D, 4) {
        cases.push(("D4".into(), w, vec![1, -1]));
    }
    cases.push(("E6".into(), default_word(E, 6), vec![1, -1, 0]));
    for (name, w, allowed) in cases {
        let mut ctx = ctx_for(&w);
        for u in ops_with_e(&mut ctx) {
            let e = u.e_value.unwrap();
            if !u.case_formula_agrees {
                readings_differ += 1;
                let _ = writeln!(std::io::stdout().lock(), "  note: op^Υ case formula and componentwise difference differ for {u:?}");
            }
            *seen.entry(name.clone()).or_default().entry(e).or_default() += 1;
            if !allowed.contains(&e) {
                fail.push(format!("{}: Υ({}, {}) → {} has e = {e}", w.quiver(), u.s, u.t, u.middle));
            }
        }
    }
    let mut summary = seen
        .iter()
        .map(|(k, h)| format!("{k} {h:?}"))
        .collect::<Vec<_>>()
        .join("; ");
    summary.push_str(&format!("; op^Υ readings differ on {readings_differ}"));
    verdict(4, "e^Υ value sets", &fail, summary);
}

#[test]
fn criterion_5_euler_characteristic_and_s_sets() {
    let start = Instant::now();
    let mut fail = Vec::new();
    let mut orbits = 0;
    let qm1 = LaurentPoly::from_coeffs(Var::Q, &[-1, 1]);
    for cat in main_catalogs() {
        let ops = elementary_ops(cat.word(), DEFAULT_OPS_PRIME).unwrap();
        for c in cat.classes() {
            orbits += 1;
            let pc = match point_counts(&cat, c) {
                Ok(pc) => pc,
                Err(e) => {
                    fail.push(format!("{}: {c}: {e}", label(&cat)));
                    continue;
                }
            };
            let cmin = cat.cmin();
            let mut sum = LaurentPoly::zero(Var::Q);
            for (cp, q) in &pc.orbit_counts {
                if *cp != cmin {
                    sum = &sum + q;
                }
            }
            if &pc.projective * &qm1 != sum {
                fail.push(format!("{}: {c}: P_c(q)(q − 1) ≠ Σ Q_c'", label(&cat)));
            }
            if pc.euler_char != cat.dim_ed_support(c) {
                fail.push(format!(
                    "{}: {c}: χ = {}, dim E_d(J(c)) = {}",
                    label(&cat),
                    pc.euler_char,
                    cat.dim_ed_support(c)
                ));
            }
            let got = s_set(&cat, &ops, c).unwrap();
            let want: BTreeSet<_> = cat.support(c).into_iter().map(|a| c_ij(&cat, a).unwrap()).collect();
            if got != want {
                fail.push(format!("{}: {c}: S_c = {got:?}, c^ij = {want:?}", label(&cat)));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        fail.push(format!("took {elapsed:?}"));
    }
    verdict(
        5,
        "χ = dim E_d(J(c)), (q − 1) | P_c, S_c = {c^ij}",
        &fail,
        format!("{orbits} orbits, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_6_derivative_sums() {
    let mut fail = Vec::new();
    let mut orbits = 0;
    let mut intervals = 0;
    for cat in small_type_a_catalogs() {
        let mut ctx = ctx_for(cat.word());
        for c in cat.classes() {
            let s = smoothness_sum_check(&mut ctx, &cat, c).unwrap();
            orbits += 1;
            intervals += s.interval_sums.len();
            if !s.pass {
                fail.push(format!(
                    "{}: {c}: from c^min {} vs {}, intervals {:?}",
                    label(&cat),
                    s.sum_from_min,
                    s.dim_ed_support,
                    s.interval_sums
                ));
            }
        }
    }
    verdict(
        6,
        "derivative sums give dim E_d(J(c)) and d(c) − d(c')",
        &fail,
        format!("{orbits} orbits, {intervals} smooth intervals"),
    );
}

fn random_dims(rng: &mut ChaCha8Rng, rank: usize) -> Vec<usize> {
    (0..rank).map(|_| rng.gen_range(0..=2)).collect()
}

#[test]
fn criterion_7_structural_properties() {
    let mut fail = Vec::new();
    let mut notes = Vec::new();

    // Unitriangular hom table, and the same table over every field.
    let mut words: Vec<AdaptedWord> = (2..=4).flat_map(|r| all_words(A, r)).collect();
    words.extend([default_word(D, 4), default_word(D, 5), default_word(E, 6)]);
    for w in &words {
        let hq = hom_table(w, Rationals).unwrap();
        if !hq.triangularity_violations().is_empty() {
            fail.push(format!("{}: hom table not unitriangular", w.quiver()));
        }
        for p in [2, 3, 5] {
            if hom_table(w, PrimeField::new(p).unwrap()).unwrap() != hq {
                fail.push(format!("{}: hom table over F_{p} differs from ℚ", w.quiver()));
            }
        }
    }
    notes.push(format!("{} hom tables", words.len()));

    // hom − ext = Euler form, ext from the cokernel of the constraint map.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let f3 = PrimeField::new(3).unwrap();
    for w in [default_word(A, 3), default_word(A, 4), default_word(D, 4), default_word(E, 6)] {
        let q = w.quiver();
        for _ in 0..200 {
            let m = Rep::random(q, &f3, random_dims(&mut rng, q.rank()), &mut rng);
            let n = Rep::random(q, &f3, random_dims(&mut rng, q.rank()), &mut rng);
            let lhs = hom_dim(&m, &n).unwrap() as i64 - ext_dim_by_cokernel(&m, &n).unwrap() as i64;
            let rhs = euler_form(q, &m.dims_i64(), &n.dims_i64()).unwrap();
            if lhs != rhs {
                fail.push(format!("{q}: hom − ext = {lhs}, Euler form {rhs} on {:?}, {:?}", m.dims(), n.dims()));
            }
        }
    }
    notes.push("800 random pairs".into());

    // The two hom criteria for degeneration agree, and identify inverts rep_of_class.
    let mut catalogs = main_catalogs();
    catalogs.extend(small_type_a_catalogs());
    let mut pairs = 0;
    for cat in &catalogs {
        for a in cat.classes() {
            for b in cat.classes() {
                pairs += 1;
                if cat.leq(a, b).unwrap() != cat.leq_dual(a, b).unwrap() {
                    fail.push(format!("{}: leq and leq_dual differ on {a}, {b}", label(cat)));
                }
            }
        }
        let kq = RepKit::new(cat.word(), Rationals).unwrap();
        let k2 = RepKit::new(cat.word(), PrimeField::new(2).unwrap()).unwrap();
        for c in cat.classes() {
            if kq.identify(&kq.rep_of_class(c)).unwrap() != *c || k2.identify(&k2.rep_of_class(c)).unwrap() != *c {
                fail.push(format!("{}: identify(rep_of_class({c})) ≠ {c}", label(cat)));
            }
        }
    }
    notes.push(format!("{pairs} order pairs"));

    // Σ_middle E(q) = q^e − 1, no middle term splits; Riedtmann on every operation.
    let mut ext_pairs = 0;
    let mut riedtmann = 0;
    let guards = Guards {
        max_total_dim: 8,
        ..Guards::default()
    };
    for w in [default_word(A, 2), default_word(A, 3), default_word(A, 4), default_word(D, 4)] {
        let mut ctx = HallContext::new(&w, guards, PrimeSource::consecutive());
        let kit = RepKit::new(&w, Rationals).unwrap();
        for s in 0..w.nu() {
            for t in 0..w.nu() {
                let e = ext_dim_by_cokernel(kit.indecomposable(t), kit.indecomposable(s)).unwrap();
                if e == 0 {
                    continue;
                }
                ext_pairs += 1;
                let total = ctx.ext_total_poly(s, t).unwrap().poly;
                let want = &LaurentPoly::monomial(Var::Q, rat(1), e as i64) - &LaurentPoly::one(Var::Q);
                if total != want {
                    fail.push(format!("{}: Σ E for ({s}, {t}) = {total}, want {want}", w.quiver()));
                }
                let mut split = IsoClass::zero(w.nu());
                split.0[s] += 1;
                split.0[t] += 1;
                let counts = ctx.counter(2).unwrap().extension_counts(s, t).unwrap();
                if counts.iter().any(|(m, _)| *m == split) {
                    fail.push(format!("{}: a nonzero extension of {t} by {s} splits", w.quiver()));
                }
            }
        }
        for u in elementary_ops(&w, DEFAULT_OPS_PRIME).unwrap() {
            riedtmann += 1;
            let r = riedtmann_check(&mut ctx, u.s, u.t, &u.middle).unwrap();
            if !r.pass {
                fail.push(format!("{}: Riedtmann fails for {u:?}: {} vs {}", w.quiver(), r.lhs, r.rhs));
            }
        }
    }
    notes.push(format!("{ext_pairs} Ext pairs, {riedtmann} Riedtmann identities"));
    verdict(7, "structural properties", &fail, notes.join(", "));
}

fn held_out(interp: &Interpolated) -> u64 {
    let last = interp.samples.iter().chain(&interp.checks).map(|s| s.0).max().unwrap();
    next_prime(last)
}

fn splits(d: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = vec![(vec![], vec![])];
    for &x in d {
        out = out
            .into_iter()
            .flat_map(|(a, b)| {
                (0..=x).map(move |k| {
                    let (mut a, mut b) = (a.clone(), b.clone());
                    a.push(k);
                    b.push(x - k);
                    (a, b)
                })
            })
            .collect();
    }
    out
}

#[test]
fn criterion_8_interpolation_and_associativity() {
    let mut fail = Vec::new();
    let mut polys = 0;
    let guards = Guards::default();
    let mut held: BTreeMap<(usize, u64), PrimeCounter> = BTreeMap::new();

    // Hall polynomials F^top_{quot,sub} for every top and every split.
    let catalogs = small_type_a_catalogs();
    for (ci, cat) in catalogs.iter().enumerate() {
        let w = cat.word();
        let mut ctx = ctx_for(w);
        for top in cat.classes() {
            for (dq, ds) in splits(cat.d()) {
                for quot in homogeneity_solutions(w, &dq).unwrap() {
                    for sub in homogeneity_solutions(w, &ds).unwrap() {
                        let f = ctx.hall_poly(top, &quot, &sub).unwrap();
                        polys += 1;
                        if !f.mismatches().is_empty() {
                            fail.push(format!("{}: F^{top}_{{{quot},{sub}}} misses {:?}", label(cat), f.mismatches()));
                        }
                        let p = held_out(&f);
                        let counter = held
                            .entry((ci, p))
                            .or_insert_with(|| PrimeCounter::new(w, p, guards).unwrap());
                        let raw = counter.count_submodules(&counter.kit().rep_of_class(top), &sub, &quot).unwrap();
                        if f.poly.eval_int(p as i64) != rat(raw as i64) {
                            fail.push(format!("{}: F^{top}_{{{quot},{sub}}}({p}) = {raw}, poly {}", label(cat), f.poly));
                        }
                    }
                }
            }
        }
    }

    // Extension polynomials of every operation.
    for w in [default_word(A, 3), default_word(D, 4)] {
        let mut ctx = ctx_for(&w);
        for u in elementary_ops(&w, DEFAULT_OPS_PRIME).unwrap() {
            let e = ctx.ext_poly(u.s, u.t, &u.middle).unwrap();
            polys += 1;
            let p = held_out(&e);
            let mut counter = PrimeCounter::new(&w, p, guards).unwrap();
            let raw = counter
                .extension_counts(u.s, u.t)
                .unwrap()
                .iter()
                .find(|(m, _)| *m == u.middle)
                .map_or(0, |x| x.1);
            if !e.mismatches().is_empty() || e.poly.eval_int(p as i64) != rat(raw as i64) {
                fail.push(format!("{}: E for {u:?} = {} but {raw} at {p}", w.quiver(), e.poly));
            }
        }
    }

    // Both bracketings of three-step filtrations agree.
    let mut triples = 0;
    let mut tops: Vec<OrbitCatalog> = all_words(A, 2)
        .iter()
        .flat_map(|w| [[1, 1], [2, 1], [1, 2], [2, 2]].map(|d| OrbitCatalog::new(w, &d).unwrap()))
        .collect();
    tops.extend(catalogs);
    for cat in &tops {
        let w = cat.word();
        for p in [2, 3] {
            let counter = PrimeCounter::new(w, p, guards).unwrap();
            for (da, rest) in splits(cat.d()) {
                for (db, dc) in splits(&rest) {
                    if [&da, &db, &dc].iter().any(|v| v.iter().all(|&x| x == 0)) {
                        continue;
                    }
                    for a in homogeneity_solutions(w, &da).unwrap() {
                        for b in homogeneity_solutions(w, &db).unwrap() {
                            for c in homogeneity_solutions(w, &dc).unwrap() {
                                for top in cat.classes() {
                                    triples += 1;
                                    let (l, r) = hall_associativity(&counter, top, &a, &b, &c).unwrap();
                                    if l != r {
                                        fail.push(format!("{}: p={p} top {top}, {a}, {b}, {c}: {l} ≠ {r}", label(cat)));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    verdict(
        8,
        "interpolation integrity and Hall associativity",
        &fail,
        format!("{polys} polynomials with a held-out prime, {triples} associativity instances"),
    );
}
