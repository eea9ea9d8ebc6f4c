//! Exact arithmetic: rationals, polynomials, real algebraic numbers and algebraic points.

pub mod algebraic;
pub mod bipoly;
pub mod point;
pub mod poly;
pub mod rational;
pub mod surd;

pub use algebraic::{compare, isolate_real_roots, RealAlgebraic};
pub use bipoly::BiPoly;
pub use point::{sign_at, AlgebraicPoint};
pub use poly::UPoly;
pub use rational::{parse_rational, rat, ratio, Rational};
