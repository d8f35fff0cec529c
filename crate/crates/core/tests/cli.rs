use std::process::Command;

use dynkin_orbits::cli::{run, OrbitsReport, PosetReport, Status, VerifyReport, EXIT_FAILED, EXIT_GUARD};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["dynkin-orbits"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn orbits_json(args: &[&str]) -> OrbitsReport {
    let mut full = vec!["orbits", "--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn a2_orbits_are_smooth() {
    let r = orbits_json(&["--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1"]);
    assert_eq!(r.orbits.len(), 2);
    assert!(r.orbits.iter().all(|o| o.smooth));
    assert_eq!(r.order, vec![(0, 1)]);
}

#[test]
fn zero_dimension_vector_has_one_orbit() {
    let r = orbits_json(&["--type", "A", "--rank", "2", "--dim", "0,0"]);
    assert_eq!(r.orbits.len(), 1);
    assert_eq!(r.orbits[0].orbit_dim, 0);
}

#[test]
fn a3_has_exactly_one_singular_orbit() {
    let r = orbits_json(&["--type", "A", "--rank", "3", "--arrows", "1>2,2>3", "--dim", "1,2,1"]);
    let singular: Vec<_> = r.orbits.iter().filter(|o| !o.smooth).collect();
    assert_eq!(singular.len(), 1);
    assert_eq!(singular[0].label, "(0,1,1) + (1,1,0)");
    assert_eq!((singular[0].orbit_dim, singular[0].dim_ed_support), (3, 4));
}

#[test]
fn json_round_trips() {
    let r = orbits_json(&["--type", "D", "--rank", "4", "--dim", "1,1,1,1"]);
    let text = serde_json::to_string(&r).unwrap();
    let back: OrbitsReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let poly = &r.orbits.last().unwrap().point_count;
    assert!(poly.terms.iter().all(|t| t.coeff.contains('/')));
}

fn poset(args: &[&str], format: &str) -> String {
    let mut full = vec!["poset", "--format", format];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "{err}");
    out
}

#[test]
fn poset_node_and_edge_counts() {
    for (args, nodes, edges) in [
        (&["--type", "A", "--rank", "2", "--dim", "1,1"][..], 2, 1),
        (&["--type", "A", "--rank", "2", "--dim", "1,0"][..], 1, 0),
        (&["--type", "A", "--rank", "3", "--arrows", "1>2,2>3", "--dim", "1,1,1"][..], 4, 4),
    ] {
        let r: PosetReport = serde_json::from_str(&poset(args, "json")).unwrap();
        assert_eq!((r.nodes.len(), r.edges.len()), (nodes, edges), "{args:?}");
        let dot = poset(args, "dot");
        assert_eq!(dot.matches(" -> ").count(), edges);
        assert!(dot.contains("| smooth\"]"));
    }
}

#[test]
fn dot_output_is_stable() {
    let args = ["--type", "D", "--rank", "4", "--dim", "1,1,1,1", "--seed", "5"];
    assert_eq!(poset(&args, "dot"), poset(&args, "dot"));
}

fn verify(args: &[&str]) -> (i32, VerifyReport) {
    let mut full = vec!["verify", "--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn verify_examples() {
    let (code, r) = verify(&["--type", "A", "--rank", "3", "--arrows", "1>2,2>3", "--dim", "1,1,1", "--suite", "geometric"]);
    assert_eq!(code, 0);
    assert_eq!(r.suites[0].checks.iter().filter(|c| c.check == "euler").count(), 4);

    let (code, r) = verify(&["--type", "A", "--rank", "1", "--dim", "3", "--suite", "all"]);
    assert_eq!(code, 0);
    assert_eq!(r.suites.len(), 4);

    let (code, r) = verify(&["--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1", "--suite", "main"]);
    assert_eq!(code, 0);
    let d: Vec<_> = r.suites[0].checks.iter().filter(|c| c.check == "derivative").collect();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].values["derivative"], "-2");
}

#[test]
fn guard_exhaustion_exits_3() {
    let (code, r) = verify(&["--type", "A", "--rank", "3", "--dim", "1,1,1", "--suite", "main", "--max-dim", "2"]);
    assert_eq!(code, EXIT_GUARD);
    assert!(r.suites[0].checks.iter().any(|c| c.status == Status::Guard));
    // too few primes to interpolate anything
    let (code, _) = verify(&["--type", "A", "--rank", "2", "--dim", "1,1", "--suite", "riedtmann", "--primes", "2,3"]);
    assert_eq!(code, EXIT_GUARD);
}

#[test]
fn failures_take_precedence_over_guards() {
    let (_, mut r) = verify(&["--type", "A", "--rank", "2", "--dim", "1,1", "--suite", "bongartz"]);
    r.suites[0].checks[0].status = Status::Fail;
    r.suites[0].failed = 1;
    r.suites[0].guarded = 1;
    assert_eq!(r.exit_code(), EXIT_FAILED);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = call(&["orbits", "--type", "A", "--rank", "3", "--arrows", "1>2,2>>3", "--dim", "1,1,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 5"), "{err}");
    let (code, _, _) = call(&["orbits", "--type", "A", "--rank", "3", "--arrows", "1>3", "--dim", "1,1,1"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["orbits", "--type", "E", "--rank", "9", "--dim", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["verify", "--type", "A", "--rank", "2", "--dim", "1,1", "--format", "dot"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["orbits", "--type", "A", "--rank", "2", "--dim", "1,1", "--config", "/nonexistent.toml"]);
    assert_eq!(code, 2);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dynkin-orbits");
    let ok = Command::new(bin)
        .args(["verify", "--type", "A", "--rank", "2", "--dim", "1,1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).ends_with("PASS\n"));
    let bad = Command::new(bin).args(["orbits", "--rank", "2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
