//! The product through a choice of one face per sign vector.

use clband::complex::decompose;
use clband::io::parse_arrangement;
use clband::products::{
    associative_product, associative_table, idempotents_match_l0, verify_aperiodic_semigroup,
    ChoiceFunction,
};
use clband::semigroup::image_i;

pub fn run_example() -> String {
    let c = decompose(&parse_arrangement(include_str!("../fixtures/line-circle.json")).unwrap());
    let j = ChoiceFunction::canonical(&c);
    let t = associative_table(&c, &j).unwrap();
    let mut out = format!("laws: {:?}\n", verify_aperiodic_semigroup(&t).unwrap());
    out += &format!(
        "squares isomorphic to L0: {}\n",
        idempotents_match_l0(&c, &t)
    );
    for x in 0..t.len() {
        if t.mul(x, x) != x {
            out += &format!("f{x} is not idempotent: f{x} f{x} = f{}\n", t.mul(x, x));
        }
    }
    // move the choice inside one fiber
    if let Some(fiber) = image_i(&c).preimage.values().find(|f| f.len() > 1) {
        let j2 = j.clone().with(&c, fiber[1]).unwrap();
        let x = fiber[0];
        out += &format!(
            "choosing f{} instead of f{}: f{x} f{x} becomes f{}\n",
            fiber[1],
            fiber[0],
            associative_product(&c, &j2, x, x).unwrap()
        );
    }
    out
}

fn main() {
    print!("{}", run_example());
}
