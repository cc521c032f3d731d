//! Finite posets as Kripke frames, their nerves, starlike Jankov-Fine
//! formulas, frame constructions that make nerves validate a starlike logic,
//! and simplicial complexes over exact rationals.
//!
//! ```
//! use polynerve::nerve::nerve;
//! use polynerve::poset::FinitePoset;
//! use polynerve::signature::Signature;
//! use polynerve::starlike::is_alpha_connected;
//!
//! let f = FinitePoset::build(&["r", "a", "b"], &[("r", "a"), ("r", "b")])?;
//! assert_eq!(nerve(&f)?.poset.len(), 5);
//! assert!(!is_alpha_connected(&f, &"1^2".parse::<Signature>()?));
//! # Ok::<(), polynerve::error::Error>(())
//! ```

pub mod cli;
pub mod construct;
pub mod error;
pub mod geometry;
pub mod io;
pub mod logic;
pub mod morphism;
pub mod nerve;
pub mod poset;
pub mod random;
pub mod signature;
pub mod starlike;
