//! Command-line front end, record files and thread-pool helpers on top of
//! `regtuple-core`.

pub mod catalog;
pub mod cli;
pub mod parallel;
pub mod records;
