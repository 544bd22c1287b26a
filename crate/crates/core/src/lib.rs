//! Exact harmonic analysis on the homogeneous nearly Kähler 6-manifolds
//! `S³×S³`, `CP³` and the flag manifold `F₁,₂`.
//!
//! The linear algebra and polynomial layers are generic over any exact
//! [`Field`]; the geometric data is concrete over [`ScalarTower`], the field
//! `ℚ(i, √2, √3)`.

pub mod branching;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod field;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod obstruction;
pub mod poly;
pub mod proto;
pub mod reference;
pub mod report;
pub mod rep;
pub mod scalar;
pub mod stability;

pub use error::{Error, Result};
pub use field::Field;
pub use linalg::Matrix;
pub use scalar::ScalarTower;

pub type Scalar = ScalarTower;
pub type Mat = Matrix<ScalarTower>;
