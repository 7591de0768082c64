//! Exact arithmetic for free finite-dimensional algebras over the rationals.

pub mod additive;
pub mod algebra;
pub mod builtin;
pub mod cli;
pub mod error;
pub mod golden;
pub mod io;
pub mod linmap;
pub mod matrix;
pub mod rational;
pub mod sample;
pub mod tensor;
pub mod verify;

pub use algebra::{AlgElement, AlgebraKind, FreeAlgebra};
pub use builtin::{complex_algebra, hamilton, octonion_algebra, quaternion_algebra, QuaternionParams};
pub use error::{Error, InverseFailure, Result};
pub use matrix::Matrix;
pub use rational::{q, Rational};
pub use tensor::{tensor_product, Tensor2, TensorAlgebra};
pub use linmap::{b_matrix, coords_from_standard, orbit_contains, representation_basis, standard_from_coords, BMatrix, LinearMap, Nesting, StandardSolution};
pub use additive::{quasideterminant, solve_additive, ComplexAdditiveMap, MapMatrix};
