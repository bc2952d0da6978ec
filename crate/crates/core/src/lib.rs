pub mod codebook;
pub mod combin;
pub mod construct;
pub mod decoder;
pub mod error;
pub mod field;
pub mod gf2;
pub mod harness;
pub mod bounds;
pub mod stopping;
