// Hall polynomials and extension counts, interpolated from finite-field counts.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, TypeLetter};
use dynkin_orbits::hall::{riedtmann_check, Guards, HallContext, PrimeSource};
use dynkin_orbits::orbits::elementary_ops;
use dynkin_orbits::repkit::IsoClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let word = adapted_word(&build_diagram(TypeLetter::A, 3)?.default_quiver());
    let mut ctx = HallContext::new(&word, Guards::default(), PrimeSource::consecutive());

    // Submodules of the projective-injective e_{[1,3]} with simple top.
    let nu = word.nu();
    let top = IsoClass::unit(nu, word.position(&[1, 1, 1]).unwrap());
    let sub = IsoClass::unit(nu, word.position(&[0, 1, 1]).unwrap());
    let quot = IsoClass::unit(nu, word.simple_position(0));
    let f = ctx.hall_poly(&top, &quot, &sub)?;
    println!("F^{top}_{{{quot},{sub}}}(q) = {}  (samples {:?})", f.poly, f.samples);

    for u in elementary_ops(&word, 5)? {
        let ext = ctx.ext_poly(u.s, u.t, &u.middle)?;
        let r = riedtmann_check(&mut ctx, u.s, u.t, &u.middle)?;
        assert!(r.pass);
        println!("Ext(e_{}, e_{}) -> {}: E(q) = {}, F(q) = {}", u.t + 1, u.s + 1, u.middle, ext.poly, r.hall);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
