//! Exact arithmetic for reducibility of quadrinomials x^n + x^m + x^k + a
//! over the rationals: quadratic-factor detection through remainder
//! recurrences, curve models whose rational points parametrize reducible
//! specializations, families with closed-form factorizations, and a
//! brute-force factorization oracle for independent verification.

pub mod bipoly;
pub mod elliptic;
pub mod error;
pub mod families;
pub mod models;
pub mod quadrem;
pub mod rational;
pub mod search;
pub mod table;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use elliptic::{CurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use quadrem::QuadrinomialSpec;
pub use rational::Rational;
pub use unipoly::UniPoly;
