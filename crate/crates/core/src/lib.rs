//! Systematic encoding of multiplicity codes over GF(p^t).
//!
//! The crate covers the whole chain from field arithmetic to encoding:
//!
//! - [`field`]: GF(p^t) with a fixed enumeration `alpha_0, ..., alpha_{q-1}`.
//! - [`mpoly`]: sparse multivariate polynomials, Hasse derivatives and the
//!   vanishing polynomials `V_j`.
//! - [`reed_muller`]: generalized Reed-Muller codes, their dimension and
//!   information sets, and interpolation from an information set.
//! - [`multiplicity`]: multiplicity codes, the `F = sum F_j V_j`
//!   decomposition and the systematic encoders.
//! - [`derivative`]: the univariate special case (derivative codes).
//! - [`textio`] and [`cli`]: the text file formats and the command-line tool.
//!
//! ```
//! use multcode::{Field, Message, MultCode};
//!
//! let field = Field::new(2, 2).unwrap(); // GF(4)
//! let code = MultCode::new(&field, 2, 2, 5).unwrap();
//! assert_eq!((code.length(), code.sigma(), code.dimension()), (16, 3, 21));
//!
//! let msg = Message::new((0..21).map(|i| field.element(i % 4).unwrap()).collect());
//! let cw = code.systematic_encode(&msg).unwrap();
//! assert_eq!(code.extract_message(&cw).unwrap(), msg);
//! ```

pub mod cli;
pub mod derivative;
pub mod error;
pub mod field;
pub mod linalg;
pub mod mpoly;
pub mod multiplicity;
pub mod reed_muller;
pub mod textio;

pub use derivative::derivative_encode;
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use mpoly::{multi_binomial, vanishing_poly, MVPoly, MultiIndex};
pub use multiplicity::{Codeword, Decomposition, Message, MultCode};
pub use reed_muller::{rm_dimension, rm_dimension_enumerated, RMCode};
