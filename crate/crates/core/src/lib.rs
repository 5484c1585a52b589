//! Explicit cycle constructions and independently checkable certificates for
//! Paley graphs, cyclic Cayley graphs and products with paths.

pub mod cli;
pub mod cyclic_cycles;
pub mod ff;
pub mod graph;
pub mod paley_cert;
pub mod product_cycles;
pub mod verify;
