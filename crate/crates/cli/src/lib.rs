//! CLI, wire formats and the batch verification driver for `dsblock-core`.

pub mod commands;
pub mod formats;
pub mod verify;
