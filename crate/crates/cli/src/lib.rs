//! The `c123` command line and the game session service behind it.

pub mod commands;
pub mod server;
pub mod session;
