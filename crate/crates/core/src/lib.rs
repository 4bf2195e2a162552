pub mod acceptance;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod linpoly;
pub mod paperlab;
pub mod rdcode;
pub mod scattered;

pub use error::{Error, Result};
pub use gf::{Fe, FieldCtx, FieldSpec};
pub use linpoly::{BaseMatrix, LinPoly};
pub use rdcode::{RankCode, Side};
pub use scattered::PointedSubspace;
