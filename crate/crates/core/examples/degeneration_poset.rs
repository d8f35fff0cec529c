// The degeneration order: Hasse diagram, and the two hom criteria agreeing.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, TypeLetter};
use dynkin_orbits::orbits::OrbitCatalog;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let word = adapted_word(&build_diagram(TypeLetter::D, 4)?.default_quiver());
    let catalog = OrbitCatalog::new(&word, &[1, 1, 1, 1])?;
    let poset = catalog.poset();
    assert!(poset.order_violations().is_empty());
    for edge in poset.hasse() {
        let (a, b) = (&poset.classes()[edge.lower], &poset.classes()[edge.upper]);
        println!("{a} (d={}) < {b} (d={})", poset.orbit_dims()[edge.lower], poset.orbit_dims()[edge.upper]);
    }
    for a in catalog.classes() {
        for b in catalog.classes() {
            assert_eq!(catalog.leq(a, b)?, catalog.leq_dual(a, b)?);
        }
    }
    if let Some(dense) = catalog.dense_class() {
        println!("dense orbit: {dense}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
