use thiserror::Error;

use crate::color::{Color, ColorSet};

/// Structural violations of the colored-graph invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("dimension {0} is not supported")]
    UnsupportedDimension(usize),
    #[error("vertex count {0} is odd")]
    OddVertexCount(usize),
    #[error("vertex {vertex} out of range (order {order})")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("color {color} out of range (dimension {dim})")]
    ColorOutOfRange { color: Color, dim: usize },
    #[error("loop at vertex {vertex} with color {color}")]
    Loop { vertex: usize, color: Color },
    #[error("vertex {vertex} has more than one edge of color {color}")]
    DuplicateColor { vertex: usize, color: Color },
    #[error("vertex {vertex} has no edge of color {color}")]
    MissingColor { vertex: usize, color: Color },
}

/// Errors raised by the analyses and moves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation requires dimension {expected}, graph has dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("empty color set")]
    EmptyColorSet,
    #[error("color set {0} is not contained in the color range of the graph")]
    ColorSetOutOfRange(ColorSet),
    #[error("cyclic permutation {0:?} is not a permutation of 0..={1}")]
    BadPermutation(Vec<Color>, usize),
    #[error("negative regular genus (2ρ = {twice}) for permutation {permutation}: not a gem")]
    NegativeGenus { twice: i64, permutation: String },
    #[error("graph is not in class G_s: {0}")]
    NotInClassGs(String),
    #[error("condition (*) fails: no admissible ordering of the 4-colored edges")]
    ConditionStarFails,
    #[error("graph is not certified as a gem of a closed manifold: {0}")]
    NotClosed(String),
    #[error("graph is not a crystallization")]
    NotCrystallization,
    #[error("invalid rho-pair: {0}")]
    InvalidPair(String),
    #[error("no variant of the switch preserves the bipartition: {0}")]
    NoBipartitionPreservingVariant(String),
    #[error("invalid dipole: {0}")]
    InvalidDipole(String),
    #[error("dipole ({u},{v}) is not proper")]
    ImproperDipole { u: usize, v: usize },
    #[error("welding would create a loop at vertex {0}")]
    WeldLoop(usize),
    #[error("malformed dipole attachment: {0}")]
    BadAttachment(String),
    #[error("step {step}: no rho_1-pair of color {color} involving exactly color 4")]
    NoRhoPair { step: usize, color: Color },
    #[error("step {step}: cycle-count law violated: {detail}")]
    DeltaViolation { step: usize, detail: String },
    #[error("no bound: {0}")]
    NoBound(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("replay failed at line {line}: {detail}")]
    Replay { line: usize, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
