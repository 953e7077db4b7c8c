//! Script language and command-line front end for ordinal lengths of
//! monomial subquotients.
//!
//! ```
//! use ordlen_cli::run::{run_to_string, Options};
//!
//! let (out, err) = run_to_string("ring x, y, z\nI = x^2, x*y\nlen I\n", &Options::default());
//! assert!(err.is_none());
//! assert_eq!(out, "len R/I = ω^2 + ω\n");
//! ```

pub mod commands;
pub mod run;
pub mod sample;
pub mod syntax;
