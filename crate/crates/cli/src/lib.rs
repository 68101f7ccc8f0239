//! Command-line harness for the good-neighbor connectivity toolkit:
//! corpus generation, the verification suite, result tables, and the
//! certificate cut builders.

pub mod checks;
pub mod corpus;
pub mod cuts;
pub mod report;
pub mod tables;
