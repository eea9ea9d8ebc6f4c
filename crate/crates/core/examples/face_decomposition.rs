//! Faces of the tangent line and circle with exact samples and the closure order.

use clband::complex::decompose;
use clband::io::parse_arrangement;

pub fn run_example() -> String {
    let arr = parse_arrangement(include_str!("../fixtures/tangent.json")).unwrap();
    let c = decompose(&arr);
    let mut out = format!(
        "{} faces: {} vertices, {} edges, {} chambers\n",
        c.len(),
        c.vertices().len(),
        c.edges().len(),
        c.chambers().len()
    );
    for f in c.faces() {
        out += &format!(
            "f{} dim {} signs {} at {}\n",
            f.id,
            f.dim,
            f.signs,
            f.sample.describe()
        );
    }
    for (a, b) in c.hasse_edges() {
        out += &format!("f{a} < f{b}\n");
    }
    out
}

fn main() {
    print!("{}", run_example());
}
