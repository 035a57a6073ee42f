//! File formats and command plumbing for the `henox` binary: binary PGM
//! images, JSON key and report files, optional S-box override tables, and
//! the four subcommands wired to `henox-core`.

pub mod commands;
pub mod keyfile;
pub mod pgm;
pub mod report;
pub mod sboxfile;
