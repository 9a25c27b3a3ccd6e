//! Command-line front end for `edcf-core`: file formats, the built-in
//! corpus, report rendering and the `reproduce` harness.

pub mod app;
pub mod corpus;
pub mod io;
pub mod report;
pub mod reproduce;
pub mod workspace;
