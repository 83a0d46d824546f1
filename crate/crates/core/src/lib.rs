//! Admissible pictures and Littlewood-Richardson tableaux.
//!
//! The crate builds the bijections between admissible pictures and
//! Littlewood-Richardson tableaux for `gl(r)` (including skew `W`) and for the
//! Lie superalgebra `gl(m,n)`, together with brute-force enumerators that
//! check every map and the equality `N_{Y,W}^Z = c_{Y,W}^Z` independently.
//!
//! Module map:
//!
//! * [`diagram`]: cells, partitions, skew shapes, box addition `Y[j_1,...,j_N]`
//! * [`tableau`]: semistandard and `gl(m,n)`-semistandard fillings, `p(T; i,j)`
//! * [`reading`]: admissible orders and reading words
//! * [`picture`]: PA-standard maps, admissible pictures, `Ω`
//! * [`lr`]: both LR families, `Φ`, `Ψ`, `Φ̃`, `Ψ̃`, `Φ̂` and the coefficients
//! * [`crystal`]: signature rule and decomposition checks
//! * [`verify`]: sweeps over families of triples
//! * [`exec`]: parallel / sequential execution

pub mod crystal;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod lr;
pub mod picture;
pub mod reading;
pub mod render;
pub mod tableau;
pub mod verify;

pub use diagram::{Cell, Partition, SkewShape};
pub use error::{BoxFailure, Error, Result};
pub use exec::Execution;
pub use picture::Picture;
pub use reading::{AdmissibleOrder, OrderSpec, Word};
pub use tableau::{Entry, SuperTableau, Tableau};
