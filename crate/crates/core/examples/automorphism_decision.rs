//! Decides whether a -> u, b -> v is an automorphism and factors it as a
//! sign/swap automorphism followed by an inner one.
//!
//! cargo run --example automorphism_decision -- 3 3 "b^-1" "a"

use gmn::automorphism::is_automorphism;
use gmn::{parse_word, GroupParams};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(i64, i64, String, String)> = match args.as_slice() {
        [m, n, u, v] => vec![(m.parse().unwrap(), n.parse().unwrap(), u.clone(), v.clone())],
        _ => [
            (2, 3, "a^-1", "b"),
            (2, 3, "b^-1 a b", "b"),
            (2, 3, "d^-1 a d", "c b c^-1"),
            (3, 3, "b", "a^-1"),
            (2, 3, "a^2", "b"),
            (2, 3, "b", "a"),
            (2, 3, "a^-1 d^-1 a d a", "b"),
        ]
        .iter()
        .map(|&(m, n, u, v)| (m, n, u.to_string(), v.to_string()))
        .collect(),
    };
    for (m, n, u, v) in cases {
        let p = GroupParams::new(m, n).expect("m, n >= 2");
        let verdict = is_automorphism(&parse_word(&u).unwrap(), &parse_word(&v).unwrap(), p);
        match verdict {
            Ok(d) => println!("G_{m}{n}: a -> {u}, b -> {v}: automorphism, {d}"),
            Err(why) => println!("G_{m}{n}: a -> {u}, b -> {v}: rejected ({why})"),
        }
    }
}
