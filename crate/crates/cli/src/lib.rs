//! File formats, test generators, and subcommands for the `hyperspan`
//! binary.

pub mod bench;
pub mod commands;
pub mod dot;
pub mod format;
pub mod testkit;
pub mod verify;
