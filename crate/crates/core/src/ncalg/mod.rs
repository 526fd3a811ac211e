//! Free-algebra words, noncommutative polynomials and the quadratic
//! rewriting engine every other module reduces through.

mod manin;
mod poly;
mod presentation;
mod word;

pub use manin::{
    build_manin_presentation, manin_kind, manin_replacement, manin_rules, ManinKind, MatrixShape,
};
pub use poly::NCPoly;
pub use presentation::{ConfluenceReport, Presentation, Rule};
pub use word::{Gen, Word};
