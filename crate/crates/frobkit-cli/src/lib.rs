//! Support library for the `frobkit` command-line binary: the algebra
//! definition-file parser/writer and the report rendering. Kept as a library
//! so the integration tests and the `regen_data` example can call them
//! directly.

pub mod parser;
pub mod report;
