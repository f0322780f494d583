//! Exact-arithmetic engine for blocks of low-rank orthosymplectic Lie
//! superalgebras: weight diagrams on the number line, the moves that generate
//! block graphs, bimarked directed graphs with their gradings and path
//! matrices, truncated formal characters, and the closed-form multiplicity
//! rules for defect-one blocks under the Duflo-Serganova functor.
//!
//! All arithmetic is exact: weights live over arbitrary-precision rationals,
//! series and path matrices over integers. There is no floating point
//! anywhere in this crate.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `dsblock-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bigraph;
pub mod charring;
pub mod diagram;
pub mod dsblocks;
pub mod gamma;
pub mod lattice;
pub mod moves;
pub mod rat;
pub mod series;

pub use lattice::{Family, Pari, RootDatum, Weight};
pub use rat::Rat;
