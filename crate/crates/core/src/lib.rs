//! Exact induction/restriction calculus for complex representations of
//! dihedral groups, and the operator algebras generated by `res_p`/`ind_p`
//! on families of modules.

pub mod arith;
pub mod branching;
mod cursor;
pub mod diagram;
pub mod element;
pub mod error;
pub mod family;
pub mod groth;
pub mod linalg;
pub mod module;
pub mod normal_form;
pub mod oracle;
pub mod rewrite;
pub mod semantic;
pub mod structure;
pub mod translate;
pub mod verify;
pub mod word;

pub use arith::Q;
pub use element::AlgebraElement;
pub use error::{Error, Result};
pub use groth::{GrothVector, IntGroth};
pub use module::{Sign, SimpleModule};
pub use word::{Kind, Symbol, Word};
