//! The free-product quotients G/M = C_m * Z and G/N = Z * C_n.

use gmn::automorphism::AutMap;
use gmn::quotient::{fp_conjugate, induced_map, non_inner_witness, project, Quotient};
use gmn::{embed, parse_word, GroupParams};

fn main() {
    let p = GroupParams::new(2, 3).unwrap();
    let e = |s: &str| embed(&parse_word(s).unwrap(), p);

    for w in ["a^2", "b^2", "a b a b^-1", "[a^2,b^3]", "d a c"] {
        let g = e(w);
        println!(
            "{w:<12} G/M: {:<14} G/N: {}",
            project(&g, Quotient::M).to_string(),
            project(&g, Quotient::N)
        );
    }

    let y = project(&e("b"), Quotient::M);
    println!("\nin G/M, y ~ y^-1: {}", fp_conjugate(&y, &y.inverse()));
    let xy = project(&e("a b"), Quotient::M);
    let yx = project(&e("b a"), Quotient::M);
    println!("in G/M, x y ~ y x: {}", fp_conjugate(&xy, &yx));

    for (name, phi, which) in [
        ("mu", AutMap::mu(p), Quotient::M),
        ("lambda", AutMap::lambda(p), Quotient::N),
    ] {
        let images = induced_map(&phi, which).expect("preserves the subgroup");
        let witness = non_inner_witness(&images, which.spec(p)).unwrap();
        println!(
            "{name} on G/{which}: x -> {}, y -> {}; witness {:?}",
            images.0,
            images.1,
            witness.map(|w| format!("{} -> {}", w.generator, w.image))
        );
    }
}
