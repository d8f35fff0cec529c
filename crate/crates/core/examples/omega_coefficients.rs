// Ω coefficients between comparable orbits and the derivative check at v = 1.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, Quiver, TypeLetter};
use dynkin_orbits::hall::{fill_e_values, theorem_main_check, Guards, HallContext, PrimeSource};
use dynkin_orbits::orbits::{elementary_ops, OrbitCatalog, DEFAULT_OPS_PRIME};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let quiver = Quiver::new(build_diagram(TypeLetter::A, 3)?, &[(0, 1), (1, 2)])?;
    let word = adapted_word(&quiver);
    let catalog = OrbitCatalog::new(&word, &[1, 1, 1])?;
    let mut ctx = HallContext::new(&word, Guards::default(), PrimeSource::consecutive());
    let mut ops = elementary_ops(&word, DEFAULT_OPS_PRIME)?;
    fill_e_values(&mut ctx, &mut ops)?;
    for u in &ops {
        println!("Υ(s={}, t={}) -> {}: op = {:?}, e = {:?}", u.s + 1, u.t + 1, u.middle, u.op, u.e_value);
    }
    let poset = catalog.poset();
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            if !poset.lt(a, b) {
                continue;
            }
            let (cp, c) = (&poset.classes()[a], &poset.classes()[b]);
            let m = theorem_main_check(&mut ctx, &catalog, &ops, cp, c)?;
            assert!(m.pass);
            println!("{cp} < {c}: Ω(1) = {}, dΩ/dv(1) = {}", m.omega_at_1, m.derivative);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
