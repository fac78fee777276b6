//! Finite ordered spaces, ordered locales, and the opens/points adjunction
//! between them.
//!
//! Everything here is finite and extensional: subsets are bitsets, relations
//! are adjacency rows, lattices carry full meet and join tables. The aim is
//! to decide properties by exhaustive computation, not to model infinite
//! objects.

pub mod duality;
pub mod error;
pub mod esakia;
pub mod finord;
pub mod fintop;
pub mod frame;
pub mod gen;
pub mod ordloc;
#[cfg(any(test, feature = "oracles"))]
pub mod oracle;
pub mod subset;


pub use duality::Flavour;
pub use error::{Error, Result};
pub use finord::{FnMap, Preorder};
pub use fintop::{FinSpace, OrderedSpace, Side};
pub use frame::{FinFrame, FrameHom, Nucleus, PointFilter};
pub use ordloc::{LocaleMap, OrderedLocale};

pub use subset::Subset;
