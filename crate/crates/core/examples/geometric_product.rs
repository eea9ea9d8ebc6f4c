//! The geometric product on faces: an alternative band that need not be associative.

use clband::complex::decompose;
use clband::io::parse_arrangement;
use clband::products::{
    find_l21_embedding_obstruction, geometric_table, verify_alternative_lrb,
    DEFAULT_REFINEMENT_DEPTH,
};

pub fn run_example() -> String {
    let mut out = String::new();
    for (name, text) in [
        ("tangent", include_str!("../fixtures/tangent.json")),
        (
            "non-associative",
            include_str!("../fixtures/non-associative.json"),
        ),
    ] {
        let c = decompose(&parse_arrangement(text).unwrap());
        let t = geometric_table(&c, DEFAULT_REFINEMENT_DEPTH).unwrap();
        out += &format!("{name}: {} faces\n", t.len());
        out += &format!(
            "  alternative band: {:?}\n",
            verify_alternative_lrb(&t).unwrap()
        );
        match t.find_associativity_violation() {
            None => out += "  associative\n",
            Some((x, y, z)) => {
                out += &format!(
                    "  (f{x} f{y}) f{z} = f{} but f{x} (f{y} f{z}) = f{}\n",
                    t.mul(t.mul(x, y), z),
                    t.mul(x, t.mul(y, z))
                )
            }
        }
        out += &format!(
            "  embedding obstruction: {:?}\n",
            find_l21_embedding_obstruction(&t).unwrap()
        );
    }
    out
}

fn main() {
    print!("{}", run_example());
}
