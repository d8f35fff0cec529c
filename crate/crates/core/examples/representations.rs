// Indecomposables, the hom table, and recognising a representation's class.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, TypeLetter};
use dynkin_orbits::field::{PrimeField, Rationals};
use dynkin_orbits::repkit::{ext_dim, hom_dim, Rep, RepKit};
use rand::SeedableRng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let word = adapted_word(&build_diagram(TypeLetter::D, 4)?.default_quiver());
    let kit = RepKit::new(&word, Rationals)?;
    for t in 0..kit.nu() {
        println!("e_{} has dimension vector {:?}", t + 1, kit.indecomposable(t).dims());
    }
    assert!(kit.table().triangularity_violations().is_empty());
    println!("hom table rows:");
    for row in kit.table().rows() {
        println!("  {row:?}");
    }

    // A random representation over F_5 decomposes into a catalog class.
    let f5 = RepKit::new(&word, PrimeField::new(5)?)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let rep = Rep::random(word.quiver(), f5.field(), vec![1, 1, 2, 1], &mut rng);
    let class = f5.identify(&rep)?;
    println!("random rep of dimension (1,1,2,1) has class {class}");
    assert_eq!(f5.identify(&f5.rep_of_class(&class))?, class);

    let (m, n) = (f5.indecomposable(0), f5.indecomposable(4));
    println!("hom(e_1, e_5) = {}, ext(e_5, e_1) = {}", hom_dim(m, n)?, ext_dim(n, m)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
