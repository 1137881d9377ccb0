//! Corpus loading and the verification harness behind the `blockscope` binary.

pub mod corpus;
pub mod verify;
