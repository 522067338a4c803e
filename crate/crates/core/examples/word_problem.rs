//! Decides equality of words in G_mn.
//!
//! cargo run --example word_problem -- 2 3 "[a^2,b^3]" "1"

use gmn::{embed, parse_word, GroupParams};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (m, n, w1, w2) = match args.as_slice() {
        [m, n, w1, w2] => (
            m.parse().unwrap(),
            n.parse().unwrap(),
            w1.clone(),
            w2.clone(),
        ),
        _ => (2, 3, "a^2 b^3 a^-2 b^-3".to_string(), "1".to_string()),
    };
    let p = GroupParams::new(m, n).expect("m, n >= 2");
    let g1 = embed(&parse_word(&w1).expect("first word"), p);
    let g2 = embed(&parse_word(&w2).expect("second word"), p);
    println!("G = <a, b | [a^{m}, b^{n}]>");
    println!("{w1}  ->  {g1}");
    println!("{w2}  ->  {g2}");
    println!("equal: {}", g1 == g2);

    // a few classic identities
    for (l, r) in [("a^m", "c"), ("c d", "d c"), ("a c", "c a"), ("a d", "d a")] {
        let l = l.replace('m', &m.to_string());
        let (gl, gr) = (
            embed(&parse_word(&l).unwrap(), p),
            embed(&parse_word(r).unwrap(), p),
        );
        println!("{l} = {r}: {}", gl == gr);
    }
}
