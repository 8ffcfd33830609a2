//! Exact arithmetic underlying the whole crate: the quadratic integer ring
//! Z[√3], Laurent polynomials in one and two variables, dense matrices over
//! Z[√3], and Smith normal form.

mod laurent;
mod matrix;
mod quadint;
mod snf;
mod torsion;

pub use laurent::{BiLaurent, LaurentPoly, SubstituteError, VarImage};
pub use matrix::QuadMatrix;
pub use quadint::QuadInt;
pub use snf::{smith_normal_form, Smith};
pub use torsion::TorsionIdeal;
