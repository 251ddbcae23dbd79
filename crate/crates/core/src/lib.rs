//! Cliffordinkras: edge-colored, dashed bipartite graphs that encode
//! signed permutation representations of Clifford algebras, together with
//! the doubly even codes that classify them.

pub mod bitword;
pub mod code;
pub mod cohomology;
pub mod construct;
pub mod error;
pub mod f2;
pub mod geometry;
pub mod graph;
pub mod iso;
pub mod matrix;
pub mod monomial;

pub use bitword::BitWord;
pub use code::{LinearCode, StandardCode};
pub use construct::{cube, quotient, QuotientSpec};
pub use geometry::Rainbow;
pub use matrix::SignedPermMatrix;
pub use error::{Error, Result};
pub use graph::{Cliffordinkra, Edge, Parity, ValidationReport, Violation};
pub use monomial::{Sign, SignedMonomial};
