//! Intuitionistic formulas and their validity on finite frames.

pub mod algebra;
pub mod formula;
pub mod frames;
pub mod named;

pub use algebra::{counter_valuation, frame_validates, UpsetAlgebra, Valuation};
pub use formula::{parse_formula, Formula};
pub use frames::{scott_frame_conditions, validates_bd, validates_sfl, validates_starlike_jankov, LogicSpec};
pub use named::named_formula;
