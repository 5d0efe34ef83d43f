//! The structure file format, the example catalog and the command line.

pub mod catalog;
pub mod cli;
pub mod convert;
pub mod format;

pub use format::{parse_file, parse_str, serialize, write_file, Document, StructureFile};
