//! Exact symbolic computation with Lie algebroids over polynomial charts.

pub mod algebroid;
pub mod constructions;
pub mod corpus;
pub mod derivation;
pub mod exactpoly;
pub mod files;
pub mod morphism;
pub mod report;
pub mod runner;
