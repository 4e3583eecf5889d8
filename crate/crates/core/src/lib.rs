pub mod checks;
pub mod clifford;
pub mod error;
pub mod forms;
pub mod json;
pub mod linalg;
pub mod random;
pub mod repcheck;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use forms::{AlgebraContext, BilinearForm, DualTwoForm, LinearForm, QuadraticForm};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::{TensorElt, Vector};
