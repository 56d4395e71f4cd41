//! Exact arithmetic for the family of involutive residuated lattices
//! `A(n,p)` built from the MV-chain `Γ(Z ⊗→ Z, (n,0))` and the Łukasiewicz
//! chain `L(p+1)`, together with a term language, structural analysis
//! (filters, quotients, subalgebras) and window-exhaustive verification
//! suites.
//!
//! Elements are written `((m,r),a)`; `bot` and `top` are accepted aliases.
//!
//! ```
//! use resilat::Algebra;
//!
//! let alg = Algebra::from_indices(2, 3).unwrap();
//! let x = alg.parse_element("((1,0),2)").unwrap();
//! assert_eq!(alg.mul(&x, &x).unwrap().to_string(), "((0,0),1)");
//! ```

pub mod algebra;
pub mod chains;
pub mod element;
pub mod error;
pub mod export;
pub mod harness;
pub mod lex;
pub mod structure;
pub mod term;

pub use algebra::{Algebra, Mutation};
pub use chains::{FinElem, OmegaElem, Params};
pub use element::ApElem;
pub use error::AlgebraError;
pub use lex::{lex_cmp, LexPair};
pub use structure::{FilterId, SubalgebraId, Window};
pub use term::{Equation, Term};
