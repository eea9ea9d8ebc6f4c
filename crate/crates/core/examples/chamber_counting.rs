//! Deletion and restriction counts, where they hold and where they do not.

use clband::chambers::verify_deletion_restriction;
use clband::io::parse_arrangement;

pub fn run_example() -> String {
    let mut out = String::new();
    for (name, text) in [
        (
            "line and circle",
            include_str!("../fixtures/line-circle.json"),
        ),
        ("lines", include_str!("../fixtures/lines.json")),
        (
            "parabola around a hole",
            include_str!("../fixtures/annulus-counterexample.json"),
        ),
    ] {
        out += &format!("{name}\n");
        for r in verify_deletion_restriction(&parse_arrangement(text).unwrap()).unwrap() {
            let cycles: usize = r.splits.iter().map(|s| s.cycle_rank).sum();
            out += &format!(
                "  {}: {} = {} + {} {} (sections {}, cycle rank {cycles})\n",
                r.label,
                r.chambers,
                r.deleted_chambers,
                r.classes,
                if r.identity_holds { "holds" } else { "fails" },
                r.sections
            );
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
