//! Exact face decompositions of real arrangements of lines and conics, the sign vectors of
//! their faces, and the band structures built on them.
//!
//! ```
//! use clband::complex::decompose;
//! use clband::io::parse_arrangement;
//! use clband::semigroup::{check_closure, image_i, Closure};
//!
//! let arr = parse_arrangement(
//!     r#"{"curves":[{"type":"line","coeffs":[0,1,0]},{"type":"conic","coeffs":[1,0,1,0,-2,0]}]}"#,
//! )
//! .unwrap();
//! let c = decompose(&arr);
//! assert_eq!(c.len(), 7);
//! assert_eq!(image_i(&c).len(), 6);
//! assert_eq!(check_closure(&image_i(&c)), Closure::Closed);
//! ```
//!
//! Modules, roughly in dependency order:
//!
//! - [`numeric`]: rationals, polynomials, real algebraic numbers and points over quadratic extensions.
//! - [`arrangement`]: curves, validation and exact intersections.
//! - [`complex`]: the face decomposition with samples, supports and the closure order.
//! - [`semigroup`]: the sign-vector image, closure checks and product tables.
//! - [`products`]: the geometric and associative products on faces.
//! - [`restriction`]: pointed curves and the embedding map with its coordinate laws.
//! - [`chambers`]: deletion and restriction chamber counts.
//! - [`io`], [`render`], [`cli`]: JSON, pictures and the command line.
//! - [`corpus`]: seeded random arrangements.
//!
//! Runnable examples live in `examples/`: `validate_arrangement`, `face_decomposition`,
//! `sign_vectors`, `geometric_product`, `associative_product`, `restriction_embedding`,
//! `chamber_counting` and `render_svg`.

pub mod arrangement;
pub mod chambers;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod fiber;
pub mod io;
pub mod numeric;
pub mod products;
pub mod render;
pub mod restriction;
pub mod semigroup;
pub mod sign;

pub use error::Error;
