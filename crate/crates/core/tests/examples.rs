#[allow(dead_code)]
#[path = "../examples/associative_product.rs"]
mod associative_product;
#[allow(dead_code)]
#[path = "../examples/chamber_counting.rs"]
mod chamber_counting;
#[allow(dead_code)]
#[path = "../examples/face_decomposition.rs"]
mod face_decomposition;
#[allow(dead_code)]
#[path = "../examples/geometric_product.rs"]
mod geometric_product;
#[allow(dead_code)]
#[path = "../examples/render_svg.rs"]
mod render_svg;
#[allow(dead_code)]
#[path = "../examples/restriction_embedding.rs"]
mod restriction_embedding;
#[allow(dead_code)]
#[path = "../examples/sign_vectors.rs"]
mod sign_vectors;
#[allow(dead_code)]
#[path = "../examples/validate_arrangement.rs"]
mod validate_arrangement;

#[test]
fn validate_arrangement() {
    let out = validate_arrangement::run_example();
    assert!(out.contains("H4: x^2 + y^2 - 1 = 0 (ellipse)"), "{out}");
    assert_eq!(out.matches("rejected").count(), 3);
}

#[test]
fn face_decomposition() {
    assert!(
        face_decomposition::run_example().starts_with("7 faces: 1 vertices, 3 edges, 3 chambers")
    );
}

#[test]
fn sign_vectors() {
    let out = sign_vectors::run_example();
    assert!(out.contains("closed under the product"));
    assert!(out.contains("not closed: 00-0 * 0+00 = 0+-0"), "{out}");
}

#[test]
fn geometric_product() {
    let out = geometric_product::run_example();
    assert!(
        out.contains("  associative\n") && out.contains("but f"),
        "{out}"
    );
}

#[test]
fn associative_product() {
    let out = associative_product::run_example();
    assert!(
        out.contains("laws: Ok") && out.contains("is not idempotent"),
        "{out}"
    );
}

#[test]
fn restriction_embedding() {
    let out = restriction_embedding::run_example();
    assert!(
        out.contains("independence Ok") && out.contains("start 3"),
        "{out}"
    );
}

#[test]
fn chamber_counting() {
    let out = chamber_counting::run_example();
    assert!(
        out.contains("9 = 3 + 7 fails") && out.contains("4 = 2 + 2 holds"),
        "{out}"
    );
}

#[test]
fn render_svg() {
    assert!(render_svg::run_example().contains("digraph faces"));
}
