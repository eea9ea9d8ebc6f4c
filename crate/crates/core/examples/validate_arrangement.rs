//! Parse and validate arrangements, including rejected inputs.

use clband::arrangement::CurveShape;
use clband::io::{curve_equation, parse_arrangement};

pub fn run_example() -> String {
    let mut out = String::new();
    let arr = parse_arrangement(include_str!("../fixtures/triangle-circle.json")).unwrap();
    for (i, c) in arr.curves().iter().enumerate() {
        let shape = match arr.shape(i) {
            CurveShape::Line => "line".to_string(),
            CurveShape::Conic(k) => format!("{k:?}").to_lowercase(),
        };
        out += &format!("{}: {} ({shape})\n", c.label, curve_equation(c));
    }
    for bad in [
        r#"{"curves":[{"type":"conic","coeffs":[1,0,1,0,0,1]}]}"#,
        r#"{"curves":[{"type":"line","coeffs":[1,1,0]},{"type":"line","coeffs":[2,2,0]}]}"#,
        r#"{"curves":[{"type":"conic","coeffs":[1,0,-1,0,0,0]}]}"#,
    ] {
        out += &format!("rejected: {}\n", parse_arrangement(bad).unwrap_err());
    }
    out
}

fn main() {
    print!("{}", run_example());
}
