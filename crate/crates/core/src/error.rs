use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ind takes between 1 and 3 vectors, got {0}")]
    IndArity(usize),
    #[error("multiplication table check failed: {0}")]
    TableMismatch(String),
    #[error("a a* is not a real scalar: {0}")]
    NormNotScalar(String),
    #[error("outer families are indexed by nonzero elements")]
    ZeroOuterLabel,
    #[error("subset {0:#04x} has size {1}, not 0, 4 or 8")]
    NotInH(u8, u32),
    #[error("coefficient {0} has denominator larger than 2")]
    NotHalfIntegral(String),
    #[error("orbit decomposition is wrong: {0}")]
    OrbitCensus(String),
    #[error("lattice generators do not span a full-rank lattice")]
    RankDeficient,
    #[error("subalgebra generation left 1/2 O(Z) or did not stabilize: {0}")]
    Generation(String),
    #[error("intersection parity {by_sets} disagrees with trace parity {by_trace}")]
    PairingMismatch { by_sets: u8, by_trace: u8 },
    #[error("unknown order {0:?}; valid names: {1}")]
    UnknownOrder(String, String),
    #[error("{0}")]
    Parse(String),
}
