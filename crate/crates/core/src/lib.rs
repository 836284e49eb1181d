//! Combinatorics of partitions, e-cores and blocks of multipartitions.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, residues, rim hooks, the level-one weight;
//! - [`abacus`]: beta-numbers, abaci, e-cores, e-quotients, x/y vectors;
//! - [`blocks`]: the lattice `Q`, block membership, core blocks;
//! - [`multipartition`]: multicores, their weights and reduced multicores;
//! - [`bounds`]: the constant `N(r,e)`, its closed forms and spectral bounds;
//! - [`shift`]: the order-`d` shift `σ` and stuttering blocks;
//! - [`verify`]: the exhaustive checks behind `qblocks verify`.

pub mod abacus;
pub mod blocks;
pub mod bounds;
pub mod error;
pub mod lattice;
pub mod multipartition;
pub mod partition;
pub mod shift;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
pub use lattice::{BlockVector, Charge, Modulus};
pub use partition::{Node, Partition};
