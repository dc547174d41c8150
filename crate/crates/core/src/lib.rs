//! Exact computer-algebra kernel for Hopf algebras.
//!
//! Finite-dimensional algebras are described by structure constants
//! ([`hopf::FinHopfAlgebra`]); the infinite-dimensional co-Frobenius family
//! generated by a grouplike `g` and a skew-primitive `x` lives in
//! [`laurent`]. All arithmetic is exact.

pub mod cofrobenius;
pub mod coquasitriangular;
pub mod error;
pub mod hopf;
pub mod laurent;
pub mod linalg;
pub mod presets;
pub mod quasitriangular;
pub mod report;
pub mod scalar;
pub mod structure;

pub use cofrobenius::{CoFrobeniusData, ModularData};
pub use coquasitriangular::{Braiding, CQTData};
pub use error::{Error, Result};
pub use hopf::{Element, FinHopfAlgebra, Functional, Functional2, StructureConstants, Tensor2};
pub use laurent::{LaurentHopf, Mono};
pub use linalg::Matrix;
pub use quasitriangular::{QTData, RMatrix};
pub use report::{Report, Status};
pub use scalar::{Field, Scalar};
pub use structure::{Bialgebra, Form, Form2, Hopf, Vector};
