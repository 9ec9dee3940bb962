//! Exact computations around the quantum cohomology of complex
//! Grassmannians `Gr(k,n)` and their Landau–Ginzburg mirrors.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod gelfand_cetlin;
pub mod laurent;
pub mod mirror;
pub mod quantum;
pub mod symmetric;
pub mod young;

pub use cyclotomic::{CycInt, CycPoly, FLOAT_TOLERANCE};
pub use error::{Error, Result};
pub use symmetric::{RootSet, SchurTable};
pub use young::{GridShape, RectangleKind, YoungDiagram};
