//! Nilpotent coadjoint orbits of classical groups in characteristic 2 and of
//! G2 / F4 in their bad characteristic.
//!
//! The classical side is purely combinatorial (orbit symbols, the closure
//! order through bipartitions, the Springer maps, and nilpotent pieces); each
//! piece of it is cross-checked against brute force over F2 in [`f2`].
//! The exceptional side lives in [`chevalley`].

pub mod checks;
pub mod chevalley;
pub mod error;
pub mod f2;
pub mod orbits;
pub mod partitions;
pub mod pieces;
pub mod springer;

pub use error::{Error, Result};
pub use orbits::{LieType, OrbitSymbol, SplitLabel};
pub use partitions::{Bipartition, Family, Partition};
pub use pieces::UpsilonSeq;
pub use springer::UnipotentClass;
