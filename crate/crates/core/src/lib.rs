//! Edge-colored graphs encoding PL manifolds.
//!
//! An `(n+1)`-colored graph is a regular, properly edge-colored multigraph
//! without loops. When it encodes a PL manifold it is called a *gem*. This
//! crate computes residues, regular genus, Z₂ Betti numbers and
//! gem-induced trisection invariants of such graphs, and implements the
//! combinatorial moves (ρ-pair switches, dipoles, connected sums) used to
//! derive trisection-genus bounds for closed 4-manifolds.

pub mod color;
pub mod error;
pub mod format;
pub mod generate;
pub mod gems;
pub mod genus;
pub mod gf2;
pub mod graph;
pub mod kirby;
pub mod moves;
pub mod residue;
pub mod trisection;

pub use color::{Color, ColorSet};
pub use error::{Error, GraphError, Result};
pub use format::{parse, serialize, ParseError};
pub use genus::{enumerate_permutations, regular_genus, regular_genus_all, regular_genus_min, CyclicPermutation, HalfInteger};
pub use graph::{is_bipartite, Bipartition, ColoredGraph, Edge};
pub use residue::{euler_characteristic, residue_count, residue_table, residues, Residue, ResidueTable};
pub use gems::{dipole_reduce, certify_sphere, classify, orientability, z2_betti, BettiVector, GemClassification, Orientability, SphereStatus};
pub use kirby::{kirby_bounds, KirbyBoundInput, KirbyBounds};
pub use trisection::{
    betti_lower_bound, condition_star, ggt_upper_bound, rho_hat4_all, rho_hat4_min, trisection_genus_bound_closed, trisection_report, trisection_reports,
    StarOrdering, TrisectionReport,
};
