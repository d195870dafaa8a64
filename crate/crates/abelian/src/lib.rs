//! Abelian chain complexes `A^k_*(Pi)` of an abelian group: cells joined at
//! commutativity level `k`, shuffle products, boundaries, symmetrized
//! cycles and exact homology via Smith normal form.

pub mod cell;
pub mod cycles;
pub mod error;
pub mod homology;
pub mod ops;
pub mod snf;
pub mod table;

pub use cell::{parse_cell, parse_chain, parse_element, Cell, Chain};
pub use cycles::{cochain_eval, cocycle_defect, dcharacter_eval, symmetrized_cycle, theta_lambda};
pub use error::{Error, Result};
pub use homology::{
    boundary_membership, check_conjecture_instance, enumerate_cells, homology, Bounds, Complex, HomologyGroup,
    Membership,
};
pub use ops::{boundary, boundary_cell, shuffle, shuffle_cells};
pub use table::{verify_lemma_witnesses, verify_table1};
