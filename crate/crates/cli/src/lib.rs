//! Library side of the command-line harness: seeded random generation, the
//! brute-force enumeration oracle, and the scenario gallery.

pub mod gallery;
pub mod oracle;
pub mod randgen;
