// Driving the command-line front end from code and reading its JSON back.

use dynkin_orbits::cli::{run, OrbitsReport, VerifyReport};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["dynkin-orbits", "orbits", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1", "--format", "json"];
    assert_eq!(run(args, &mut out, &mut err), 0);
    let report: OrbitsReport = serde_json::from_slice(&out)?;
    for o in &report.orbits {
        println!("{} = {}: d(c) = {}, smooth = {}", o.class, o.label, o.orbit_dim, o.smooth);
    }

    out.clear();
    let args = ["dynkin-orbits", "verify", "--type", "A", "--rank", "2", "--dim", "1,1", "--suite", "main", "--format", "json"];
    let code = run(args, &mut out, &mut err);
    let report: VerifyReport = serde_json::from_slice(&out)?;
    println!("verify main: exit {code}, {} checks passed", report.suites[0].passed);

    out.clear();
    let code = run(["dynkin-orbits", "poset", "--type", "A", "--rank", "3", "--dim", "1,1,1"], &mut out, &mut err);
    assert_eq!(code, 0);
    print!("{}", String::from_utf8(out)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
