//! Exact intersection theory for the degree of the logarithmic component
//! `L(1,1,1)` of foliations on `P^n`, plus an exact oracle for the local
//! algebra of logarithmic 1-forms.

pub mod charclass;
pub mod cli;
pub mod degree;
pub mod error;
pub mod geometry;
pub mod logforms;
pub mod multinomial;
pub mod oracle;
pub mod pushforward;
pub mod ring;
pub mod selfcheck;

pub use error::{Error, Result};
