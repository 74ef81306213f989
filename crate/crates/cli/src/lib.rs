//! Library side of the `ccol` command-line tool: file formats,
//! certificate verification and the experiment runner. The binary in
//! `main.rs` is a thin wrapper over these.

pub mod experiment;
pub mod io;
pub mod verify;
