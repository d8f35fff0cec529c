// Orbit catalog of a dimension vector, with the smoothness table.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, Quiver, TypeLetter};
use dynkin_orbits::orbits::OrbitCatalog;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let quiver = Quiver::new(build_diagram(TypeLetter::A, 3)?, &[(0, 1), (1, 2)])?;
    let word = adapted_word(&quiver);
    let catalog = OrbitCatalog::new(&word, &[1, 2, 1])?;
    println!(
        "{quiver} d = {:?}: {} orbits, dim E_d = {}",
        catalog.d(),
        catalog.len(),
        catalog.dim_ed()
    );
    for row in catalog.smoothness_report()? {
        println!(
            "  {}  d(c) = {}  dim E_d(J) = {}  smooth = {}  χ = {}  P = {}",
            row.class, row.orbit_dim, row.dim_ed_support, row.rationally_smooth, row.euler_char, row.point_count
        );
    }
    let singular = catalog
        .classes()
        .iter()
        .filter(|c| !catalog.is_rationally_smooth(c).unwrap())
        .count();
    assert_eq!(singular, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
