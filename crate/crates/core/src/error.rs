use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Tables of a system have the wrong shape or reference a missing index.
    MalformedSystem(String),
    /// The object set exceeds an enumeration or representation bound.
    SizeBoundExceeded { what: &'static str, size: usize, bound: usize },
    UnknownBuiltin(String),
    InvalidArgument(String),
    /// Random generation found no admissible system within its retry budget.
    GenerationFailed { seed: u64, max_objects: usize, attempts: usize },
    /// Some prime ideal is not completely prime; carries those primes.
    AssumptionViolated { counterexamples: Vec<BitSet> },
    /// Two objects with the same principal radical received different support values.
    WellDefinednessFailure { first: usize, second: usize },
    /// A table claimed to be a frame map breaks one of the frame-map laws.
    NotFrameMap(&'static str),
    NotSpectral,
    TensorProductPropertyViolated { left: usize, right: usize },
    /// `final_map` produced a set of objects that is not a prime thick ideal.
    ImageNotPrime { point: usize },
    InvalidSupport(&'static str),
    InvalidFrame(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedSystem(msg) => write!(f, "malformed tensor system: {msg}"),
            Error::SizeBoundExceeded { what, size, bound } => {
                write!(f, "{what}: size {size} exceeds bound {bound}")
            }
            Error::UnknownBuiltin(name) => write!(f, "unknown builtin system `{name}`"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::GenerationFailed { seed, max_objects, attempts } => write!(
                f,
                "no admissible system with at most {max_objects} objects for seed {seed} after {attempts} attempts"
            ),
            Error::AssumptionViolated { counterexamples } => write!(
                f,
                "{} prime ideal(s) are not completely prime",
                counterexamples.len()
            ),
            Error::WellDefinednessFailure { first, second } => write!(
                f,
                "objects {first} and {second} share a principal radical but have different support values"
            ),
            Error::NotFrameMap(law) => write!(f, "table is not a frame map: {law}"),
            Error::NotSpectral => f.write_str("space is not spectral (not T0)"),
            Error::TensorProductPropertyViolated { left, right } => write!(
                f,
                "support of {left} (x) {right} differs from the intersection of supports"
            ),
            Error::ImageNotPrime { point } => {
                write!(f, "image of point {point} is not a prime thick tensor ideal")
            }
            Error::InvalidSupport(axiom) => write!(f, "invalid support: {axiom}"),
            Error::InvalidFrame(law) => write!(f, "invalid frame: {law}"),
        }
    }
}

impl core::error::Error for Error {}
