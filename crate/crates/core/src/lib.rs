//! Root-of-unity arithmetic, Rosso Cartan matrices, Weyl groupoids and
//! rank-two root system combinatorics for higher braiding tensors.

pub mod error;
pub mod groupoid;
pub mod lattice;
pub mod laurent;
pub mod rank2;
pub mod rosso;

pub use error::{Error, Result};
pub use lattice::{AbGroup, GammaVector, GroupElement, MuPower, RootDatum, SqrtBraidingTensor, TensorFile};
pub use rosso::{cartan_entry, cartan_matrix, rosso_condition, GeneralizedCartanMatrix, DEFAULT_M_MAX};
