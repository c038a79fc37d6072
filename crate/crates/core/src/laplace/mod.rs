//! Rational functions in the transform variable `p` and the Laplace
//! transform over the closed-form basis `{e^{kx}, cos, sin, cosh, sinh}`.
//!
//! Everything is closed form: roots come from the quadratic formula (cubics
//! and quartics are only accepted when they reduce to it), inversion goes
//! through simple-pole partial fractions, and the forward transform is a
//! table lookup followed by recombination over the least common denominator.
//! Repeated roots are rejected instead of extending the basis with
//! `x·e^{kx}` terms.

mod closed_form;
mod polynomial;
mod rational;
pub mod roots;
mod transform;

pub use closed_form::{ClosedForm, Kind, Term};
pub use polynomial::Polynomial;
pub use rational::RationalFunction;
pub use roots::{root_multiset, roots, Root};
pub use transform::{forward_laplace, inverse_laplace, partial_fractions, PoleTerm};
