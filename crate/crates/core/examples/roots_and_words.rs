// Root systems, quivers and the adapted word that fixes the root order.

use dynkin_orbits::dynkin::{adapted_word, build_diagram, positive_roots, Quiver, TypeLetter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a3 = build_diagram(TypeLetter::A, 3)?;
    println!("{a3}: {} positive roots", positive_roots(&a3).nu());

    // 1 <- 2 -> 3, written 0-based as (tail, head).
    let quiver = Quiver::new(a3, &[(1, 0), (1, 2)])?;
    let word = adapted_word(&quiver);
    assert!(word.validate().is_empty());
    let letters: Vec<usize> = word.word().iter().map(|i| i + 1).collect();
    println!("{quiver}: word {letters:?}");
    for (t, root) in word.roots().iter().enumerate() {
        println!("  α^{} = {root:?}", t + 1);
    }

    for (letter, rank) in [(TypeLetter::D, 4), (TypeLetter::E, 6)] {
        let w = adapted_word(&build_diagram(letter, rank)?.default_quiver());
        println!("{letter}{rank}: ν = {}, arrows {}", w.nu(), w.quiver().arrow_string());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
