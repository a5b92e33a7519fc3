//! Exact analysis of p-improper interval graphs.
//!
//! An interval representation may be forced to place some intervals inside
//! others; a graph is p-improper when some representation keeps every
//! vertex's interval containing at most p neighbor intervals. This crate
//! computes the impropriety (the least such p) and the weight lower bound
//! exactly, decides balance and p-criticality, builds and recognizes the
//! balanced-critical BAL_k constructions, and enumerates minimal forbidden
//! induced subgraphs for the p-improper interval classes.
//!
//! Everything is exact and deterministic: searches are exhaustive with
//! certified early exits, enumeration is isomorph-free via canonical
//! labels, and every verdict ships with a checkable witness where one
//! exists. Graphs are capped at 64 vertices (bitset adjacency), far above
//! the desk scale the exhaustive searches are meant for.

#![warn(missing_docs)]

pub mod bal;
pub mod balance;
pub mod canon;
pub mod classify;
pub mod codec;
pub mod enumeration;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod impropriety;
pub mod local;
pub mod model;
pub mod recognition;
