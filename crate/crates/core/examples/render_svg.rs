//! An SVG picture and a DOT Hasse diagram.

use clband::complex::decompose;
use clband::io::parse_arrangement;
use clband::render::{dot, svg};

fn pictures() -> (String, String) {
    let c =
        decompose(&parse_arrangement(include_str!("../fixtures/non-associative.json")).unwrap());
    (svg(&c), dot(&c))
}

pub fn run_example() -> String {
    let (picture, hasse) = pictures();
    format!("svg: {} bytes\n{hasse}", picture.len())
}

/// With a directory argument the files are written there.
fn main() {
    match std::env::args().nth(1) {
        Some(dir) => {
            let (picture, hasse) = pictures();
            std::fs::write(format!("{dir}/arrangement.svg"), picture).unwrap();
            std::fs::write(format!("{dir}/faces.dot"), hasse).unwrap();
        }
        None => print!("{}", run_example()),
    }
}
