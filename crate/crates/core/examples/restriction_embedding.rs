//! Restricting to a curve and the coordinate laws of the embedding map.

use clband::complex::decompose;
use clband::io::parse_arrangement;
use clband::restriction::{
    embedding_for, find_non_homomorphism_on, restrict_in, verify_pointed_oval_independence,
};

pub fn run_example() -> String {
    let mut out = String::new();
    let c = decompose(
        &parse_arrangement(include_str!("../fixtures/tangent-line-restriction.json")).unwrap(),
    );
    let pc = restrict_in(&c, 0).unwrap();
    let r = embedding_for(&c, &pc).unwrap();
    out += &format!("line H1 with {} marked points\n", pc.k());
    for e in &r.phi {
        out += &format!("  {} -> {} (f{})\n", e.domain, e.image, e.face);
    }
    for (j, law) in r.laws.iter().enumerate() {
        out += &format!("  coordinate {}: {law:?}\n", j + 1);
    }
    if let Some(w) = find_non_homomorphism_on(&c, 3).unwrap() {
        out += &format!(
            "  on H4, f{} f{} should be f{} but the signs give {}\n",
            w.a, w.c, w.b, w.product_in_arrangement
        );
    }
    let c =
        decompose(&parse_arrangement(include_str!("../fixtures/oval-restriction.json")).unwrap());
    let pc = restrict_in(&c, 0).unwrap();
    out += &format!(
        "oval H1 with {} marked points, independence {:?}\n",
        pc.k(),
        verify_pointed_oval_independence(&pc)
    );
    for s in 0..pc.k() {
        let r = embedding_for(&c, &pc.rotate_start(s, &c)).unwrap();
        let images: Vec<String> = r.phi.iter().map(|e| e.image.to_string()).collect();
        out += &format!("  start {}: {}\n", s + 1, images.join(" "));
    }
    out
}

fn main() {
    print!("{}", run_example());
}
