//! Library half of the `ordloc` command-line tool: document handling and the
//! four subcommands, kept separate from `main` so tests can drive them.

pub mod doc;
pub mod error;
pub mod check;
pub mod functor;
pub mod roundtrip;
pub mod dot;
pub mod app;
