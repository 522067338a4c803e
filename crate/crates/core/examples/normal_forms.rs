//! Normal forms, length, cyclic reduction, conjugate intersections with H,
//! roots and powers.

use gmn::amalgam::{cyclic_decompose, express_as_power, h_intersection, root_in_factor, Side};
use gmn::{embed, parse_word, GroupParams};

fn main() {
    let p = GroupParams::new(2, 3).unwrap();
    let e = |s: &str| embed(&parse_word(s).unwrap(), p);

    println!("normal forms in G_23 (factors separated by |):");
    for w in ["a b a^-1 b^-1", "a^5 b^7", "d a d^-1", "c b c^-1 a"] {
        let g = e(w);
        println!("  {w:<16} {g:<28} length {}", g.length());
    }

    let g = e("b a b^2 a^-1 b^-1");
    let d = cyclic_decompose(&g);
    println!("\n{g} = u v u^-1 with u = {}, v = {}", d.u, d.v);

    println!("\nintersection of g^-1 H g with H:");
    for w in ["c^2 d^-1", "a", "b d", "a b"] {
        println!("  g = {w:<10} {}", h_intersection(&e(w)));
    }

    // (a^-1 b a)^3 = a^-1 d a lies in A although a^-1 b a does not
    let g = e("a^-1 b a");
    let r = root_in_factor(&g, 3, Side::A).unwrap();
    println!("\n{g} = x^-1 y x with x = {}, y = {}", r.x, r.y);

    let u = e("a b");
    let v = e("a b a b a b");
    let pe = express_as_power(&u, &v).unwrap();
    println!("\n{v} = ({})^{}", pe.generator, pe.exponent);
    assert_eq!(pe.generator.pow(pe.exponent), v);
}
