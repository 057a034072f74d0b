//! Exact computations with subalgebras of the full matrix algebra `M_n(K)`:
//! closures, ideals, radicals, centralizers, block triangulation, D_q
//! structure (algebras satisfying `[x1,y1]···[xq,yq] = 0`) and the
//! classification of maximum-dimension D_q algebras with canonical blocks.

pub mod algebra;
pub mod classification;
pub mod constructions;
pub mod dq;
pub mod error;
pub mod field;
pub mod matrix;
pub mod subspace;

pub use algebra::{IdealSpace, MatSpace, MatSubalgebra, MatrixSpace};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
