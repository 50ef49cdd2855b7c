//! Command-line front end for `linforest`.

pub mod commands;
pub mod format;
