//! Library half of the CLI crate: the report schema, exposed so integration
//! tests can parse and round-trip the JSON the binary emits.

pub mod report;
