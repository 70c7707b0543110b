//! Right bicategories of fractions over finite strict 2-categories.
//!
//! The crate loads explicit cell tables, checks the (BF) conditions for a
//! class of 1-cells, computes right saturations and internal equivalences,
//! builds the localization by spans and classes of 2-cell representatives,
//! and transports strict 2-functors to the localizations. A finite groupoid
//! model checks Morita equivalences against the same machinery.

pub mod doc;
pub mod error;
#[allow(clippy::needless_range_loop)]
pub mod fixtures;
pub mod fractions;
pub mod groupoids;
pub mod report;
pub mod saturation;
pub mod transport;
pub mod twocat;

pub use error::{Error, Result, StructureError};
pub use saturation::MorClass;
pub use twocat::{Cell, Mor, Obj, TwoCat};
