//! Library half of the `eids` command-line tool: input documents, the
//! bundled example tables, report rendering, and the command drivers.
//!
//! The binary in `main.rs` is a thin argument-parsing shell around
//! [`commands`]; everything testable lives here.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod render;
