//! Exact scalar and polynomial arithmetic: the substrate for every other
//! module. All values are immutable after construction and all operations
//! are pure; nothing here rounds.

mod interval;
mod poly;
mod rational;

pub mod bipoly;

pub use bipoly::BiPoly;
pub use interval::RatInterval;
pub use poly::{UniPoly, Var};
pub use rational::{binom, binom_big, factorial, int, rat, Rational};
