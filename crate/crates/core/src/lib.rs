//! The dominance lattice `L_n` of integer partitions of `n`.
//!
//! Partitions, their cover relation and sand-pile transitions, a recursive
//! construction of the join-irreducible elements, and the standard formal
//! context `K(L_n) = (J(L_n), M(L_n), <=)` together with concept enumeration.
//!
//! ```
//! use partition_lattice::{join_irreducibles, Partition};
//!
//! let j = join_irreducibles(6).unwrap();
//! assert_eq!(j.len(), 8);
//! assert!(j.contains(&"3,3".parse::<Partition>().unwrap()));
//! ```

mod error;
pub mod fca;
mod irreducibles;
mod lattice;
pub mod oracles;
mod par;
mod partition;
mod run_length;
pub mod scaling;
pub mod verify;

pub use error::{Error, Result};
pub use irreducibles::{
    classify_irreducible, count_closed, count_recursive, eta, exceptional_sets, join_irreducibles,
    meet_irreducibles, next_layer, IrreducibleLayer, IrreducibleType,
};
pub use lattice::{
    build_hasse, enumerate_partitions, find_pentagon, is_distributive, is_pentagon_sublattice,
    join, meet, HasseDiagram, DISTRIBUTIVITY_LIMIT,
};
pub use par::{parallel_available, Execution};
pub use partition::{dominance_leq, Branch, ColumnOneShape, Partition, Sons, Transition};
pub use run_length::{Block, RunLengthPartition};
