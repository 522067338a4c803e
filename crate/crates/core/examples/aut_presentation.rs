//! Computes in Aut G_mn through its finite presentation on L, M, E, A, B.
//!
//! cargo run --example aut_presentation -- 2 2 "E L E" "M"

use gmn::presentation::{aut_words_equal, canonicalize, evaluate, parse_aut_word};
use gmn::GroupParams;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (m, n, w1, w2) = match args.as_slice() {
        [m, n, w1, w2] => (
            m.parse().unwrap(),
            n.parse().unwrap(),
            w1.clone(),
            w2.clone(),
        ),
        _ => (2, 2, "E L E A".to_string(), "L A^-1 L M".to_string()),
    };
    let p = GroupParams::new(m, n).expect("m, n >= 2");
    let (a1, a2) = (parse_aut_word(&w1).unwrap(), parse_aut_word(&w2).unwrap());
    let (c1, c2) = (canonicalize(&a1, p).unwrap(), canonicalize(&a2, p).unwrap());
    println!("{w1}  ->  {c1}");
    println!("{w2}  ->  {c2}");
    println!(
        "equal by the relations: {}",
        aut_words_equal(&a1, &a2, p).unwrap()
    );

    let phi = evaluate(&a1, p).unwrap();
    println!("as a map: {phi}");
    assert_eq!(phi, c1.to_map());
}
