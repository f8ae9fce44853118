//! Exact Hochschild cohomology of monoid objects in concrete Ab-enriched
//! monoidal categories.

pub mod cohomology;
pub mod hochschild;
pub mod linalg;
pub mod monoidal;
pub mod objects;
pub mod report;
pub mod ring;
pub mod simplex;

pub use ring::{Integer, Rational, RingSpec, Scalar, Zmod};

pub type IntMatrix = linalg::Matrix<Integer>;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type ModMatrix = linalg::Matrix<Zmod>;
