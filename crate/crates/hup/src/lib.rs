//! Command-line companion to `hup-core`: file formats, JSON reports, the
//! verification suites and the `hup` binary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod formats;
pub mod report;
pub mod verify;
