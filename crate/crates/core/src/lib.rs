//! Exact symbolic engine for the graded q-differential algebra of forms on
//! the line generated by `x`, `dx` and `d2x`, with `d^3 = 0` and `q` a
//! primitive cube root of unity.
//!
//! ```
//! use qforms::{parse, render, CalculusConfig, CycQ};
//!
//! let cfg = CalculusConfig::new(CycQ::from_ints(1, 0));
//! let u = parse("d2x*x", &cfg).unwrap();
//! assert_eq!(render(&u), "(1-q)*dx^2 + x*d2x");
//! ```

pub mod calculus;
pub mod cli;
pub mod cyclotomic;
pub mod differential;
pub mod error;
pub mod forms;
pub mod json;
pub mod parser;
pub mod polynomial;
pub mod sample;
pub mod verify;

pub use calculus::{check_homogeneity, CalculusConfig};
pub use cyclotomic::{CycQ, Rational};
pub use differential::{d, d_pow, is_closed};
pub use error::{Error, Result};
pub use forms::{grade, swap_oracle, Form, FormMonomial};
pub use parser::{parse, render};
pub use polynomial::{Mode, Poly};
