//! Every normal automorphism of G_mn is inner: outer automorphisms are
//! rejected with a checkable certificate in G/M or G/N.

use gmn::automorphism::{AutMap, KappaPart};
use gmn::quotient::{is_normal_automorphism, NormalityVerdict};
use gmn::{embed, parse_word, GroupParams};

fn main() {
    for (m, n) in [(2, 3), (3, 3)] {
        let p = GroupParams::new(m, n).unwrap();
        println!("G_{m}{n}:");
        for kappa in KappaPart::all(p) {
            let phi = kappa.to_map(p).unwrap();
            report(&phi);
        }
        let w = embed(&parse_word("a b^-1 a").unwrap(), p);
        report(&AutMap::inner(&w));
    }
}

fn report(phi: &AutMap) {
    match is_normal_automorphism(phi).unwrap() {
        NormalityVerdict::Normal { w } => println!("  {phi}: normal (inner by {w})"),
        NormalityVerdict::NotNormal(c) => {
            println!(
                "  {phi}: not normal, certificate verifies: {}",
                c.verify(phi)
            );
            println!("      {c}");
        }
    }
}
