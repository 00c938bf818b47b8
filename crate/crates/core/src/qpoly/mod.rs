//! Exact polynomial arithmetic over Q and simple algebraic extensions.

pub mod algext;
pub mod bifactor;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod mgcd;
pub mod mpoly;
pub mod resultant;
pub mod upoly;
pub mod zpoly;

pub use algext::{AlgElem, AlgExt};
pub use bifactor::find_bivariate_factor;
pub use factor::{factor_univariate, rational_roots, squarefree_part, Factorization};
pub use field::{rat, rat_sqrt, rint, ExactDiv, Field, Int, Rat, Ring};
pub use mgcd::{mgcd, msquarefree_part};
pub use mpoly::{qconst, qconst_rat, qvar, MPoly};
pub use resultant::resultant;
pub use upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QpolyError {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("polynomial {0} is reducible")]
    Reducible(String),
}
