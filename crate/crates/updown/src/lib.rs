//! Computations with classical and virtual braid diagram words and their
//! action on integer tuples.
//!
//! A diagram of degree `n` is written as a word over the letters `s<i>`
//! (positive crossing), `S<i>` (negative crossing) and `v<i>` (virtual
//! crossing), each acting on adjacent strand columns `i` and `i + 1`.
//! Sweeping a word top to bottom moves an integer `n`-tuple along the
//! strands, raising a value by one below every over-crossing and lowering
//! it by one below every under-crossing; virtual crossings only exchange
//! columns. The crate provides:
//!
//! - word parsing, the monoid product, strand permutations, and bigon
//!   (reducibility) analysis ([`braid`]);
//! - the tuple action, full per-strand edge labellings, and the over/under
//!   count matrix ([`action`]);
//! - orbit invariants and membership tests for every flavor of diagram
//!   (classical/virtual, pure, irreducible) ([`orbit`]);
//! - explicit witness words realizing any orbit relation, generator
//!   families (torus, weaving, permutation-realizing words), bigon repair,
//!   and the closure labelling criterion ([`witness`]);
//! - exhaustive word enumeration and reachable-set search for brute-force
//!   cross-checks ([`oracle`]);
//! - SVG rendering of diagrams ([`render`]) and a command-line front end
//!   ([`cli`]).
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod action;
pub mod braid;
pub mod cli;
pub mod oracle;
pub mod orbit;
pub mod render;
pub mod witness;

pub use action::{act, act_via_ou, full_coloring, is_isotropy, ou_matrix, strand_counts};
pub use action::{ColorVector, CrossingCounts, EdgeColoring, OUMatrix};
pub use braid::{Bigon, BraidLetter, BraidWord, LetterKind, Permutation};
pub use oracle::{enumerate_words, reachable_set, SearchSpec};
pub use orbit::{
    count_type_one, count_type_two, in_orbit, membership, orbit_invariants, trace, Membership,
    OrbitFlavor, OrbitInvariants, World,
};
pub use witness::{
    closure_admits, default_blocks, make_irreducible, permutation_braid, pure_witness, torus,
    torus_action_formula, type_matching_permutation, weaving, weaving_action_formula,
    witness_classical, witness_classical_pure, witness_virtual, BlockInventory, ClosureVerdict,
    CycleBalance, TorusAction,
};

/// Errors produced by parsing and by operations with violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error in word: unrecognized token `{0}`")]
    Syntax(String),
    #[error("crossing index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("degree must be at least 1")]
    InvalidDegree,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("tuple length {len} does not match degree {degree}")]
    LengthMismatch { len: usize, degree: usize },
    #[error("not a permutation image: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("tuples have different traces")]
    TraceMismatch,
    #[error("tuples have different type-I counts")]
    TypeCountMismatch,
    #[error("tuples are not in the same orbit: {0}")]
    NotInOrbit(&'static str),
    #[error("no irreducible witness of degree 2 reaches the target tuple")]
    UnsupportedDegree,
    #[error("bigon repair did not terminate within {0} insertions")]
    MaxRepairExceeded(usize),
    #[error("{0}")]
    InvalidArgument(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
