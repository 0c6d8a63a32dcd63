//! G2 in characteristic 3 and F4 in characteristic 2.
//!
//! Builds the Chevalley basis with the published structure constants, the
//! coadjoint action of root subgroups over `F_q`, the rational class tables
//! with exact centralizer orders, and orbit enumeration by BFS.

pub mod bfs;
pub mod coadjoint;
pub mod field;
pub mod lie;
pub mod qpoly;
pub mod roots;
pub mod tables;

pub use bfs::{rep_orbits_disjoint, DisjointnessReport, nilpotent_sweep, nilpotent_sweep_g2, orbit_bfs, BfsResult, Census, CoadjointAction};
pub use coadjoint::{coadjoint_generator, materialize_rep};
pub use field::Gf;
pub use lie::ChevalleyAlgebra;
pub use qpoly::QPoly;
pub use roots::{Group, RootSystem};
pub use tables::{mass_check, table, MassReport, RationalClassRow};

/// `build_lie` under its usual name.
pub fn build_lie(group: Group) -> crate::Result<ChevalleyAlgebra> {
    ChevalleyAlgebra::build(group)
}
