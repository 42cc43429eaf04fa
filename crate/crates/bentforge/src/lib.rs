//! Command-line front end, file formats and self-checks built on
//! `bentforge-core`.

pub mod cli;
pub mod formats;
pub mod selftest;
