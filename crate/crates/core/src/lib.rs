//! Exact wall and chamber computations for rank-two sheaves on ruled
//! threefolds `P(E) → P²`.

pub mod chambers;
pub mod chow;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod moduli;
pub mod report;
pub mod walls;

pub use chow::{CycleClass, DivisorClass, RuledThreefold};
pub use error::{Error, Result};
pub use exact::{QuadraticNumber, Rational};
