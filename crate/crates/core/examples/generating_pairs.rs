//! Conjugate-power forms of pairs (u, v) with u in A, v in B, and the
//! criterion for x^-1 a^k x, y^-1 b^l y to generate G.

use gmn::generation::{conjugate_power_forms, in_a_d, in_b_c, is_generating_pair_from_forms};
use gmn::{embed, parse_word, GroupParams};

fn main() {
    let p = GroupParams::new(2, 3).unwrap();
    let e = |s: &str| embed(&parse_word(s).unwrap(), p);
    for (u, v) in [
        ("a", "b"),
        ("d^-1 a d", "c b c^-1"),
        ("d^2 a^-1 d^-2", "c^-1 b^-1 c"),
        ("a^3", "b"),
        ("a^-1 d^-1 a d a", "b"),
    ] {
        let f = conjugate_power_forms(&e(u), &e(v), p.m(), p.n()).unwrap();
        println!(
            "u = {u:<18} v = {v:<14} x = {:<10} k = {:<3} y = {:<8} l = {:<3} x in <a><d>: {:<5} y in <b><c>: {:<5} generates: {}",
            f.x.to_string(),
            f.k,
            f.y.to_string(),
            f.l,
            in_a_d(&f.x).unwrap(),
            in_b_c(&f.y).unwrap(),
            is_generating_pair_from_forms(&f)
        );
    }
}
