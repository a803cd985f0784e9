//! Polynomials over prime fields: composition, shifts, Dickson and
//! exponential components, tame decomposition and two-collision normal forms.

mod collision;
mod decompose;
mod dickson;
mod field;
mod poly;

pub use collision::{classify_two_collision, exp_component, gcd_split, ritt_move, CollisionForm, GcdSplit};
pub use decompose::{h_adic_expand, tame_decompose, tame_root};
pub use dickson::{dickson, dickson_star};
pub use field::PrimeField;
pub use poly::{compose, original_shift, FqPoly};
