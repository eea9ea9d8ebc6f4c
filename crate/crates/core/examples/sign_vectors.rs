//! The image of the sign map, its fibers and the closure check.

use clband::complex::decompose;
use clband::io::parse_arrangement;
use clband::semigroup::{check_closure, image_i, Closure};

fn report(name: &str, text: &str) -> String {
    let c = decompose(&parse_arrangement(text).unwrap());
    let l0 = image_i(&c);
    let mut out = format!("{name}: {} faces, {} sign vectors\n", c.len(), l0.len());
    for (v, fiber) in &l0.preimage {
        if fiber.len() > 1 {
            out += &format!("  {v} is shared by faces {fiber:?}\n");
        }
    }
    out += &match check_closure(&l0) {
        Closure::Closed => "  closed under the product\n".to_string(),
        Closure::Witness(u, v, w) => format!("  not closed: {u} * {v} = {w}\n"),
    };
    out
}

pub fn run_example() -> String {
    report("tangent", include_str!("../fixtures/tangent.json"))
        + &report(
            "triangle in circle",
            include_str!("../fixtures/triangle-circle.json"),
        )
}

fn main() {
    print!("{}", run_example());
}
