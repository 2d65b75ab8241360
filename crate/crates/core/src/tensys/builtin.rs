//! The canonical example systems.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{summand_closure, ObjectId, SystemParts, TensorSystem};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 4] = ["trivial", "two_idem", "chain3", "noncomm4"];

/// Returns one of the canonical systems:
///
/// * `trivial`: `{0, u}`.
/// * `two_idem`: `{0, x, y, u}` with `u = x (+) y`, `x`, `y` idempotent and
///   `x (x) y = y (x) x = 0`; two primes, Boolean Zariski frame.
/// * `chain3`: the chain `0 < x' < x < u` with `x (x) x = x'`; the principal
///   ideal generated by `x'` is not radical.
/// * `noncomm4`: the chain `0 < a < b < u` with `a (x) b = 0` but
///   `b (x) a = a`.
pub fn builtin(name: &str) -> Result<TensorSystem> {
    match name {
        "trivial" => Ok(assemble(&["0", "u"], 1, |a, b| a.max(b), |a, b| a.min(b))),
        "two_idem" => Ok(assemble(&["0", "x", "y", "u"], 3, |a, b| a | b, |a, b| a & b)),
        "chain3" => Ok(assemble(&["0", "x'", "x", "u"], 3, |a, b| a.max(b), |a, b| match (a, b) {
            (0, _) | (_, 0) => 0,
            (3, o) | (o, 3) => o,
            _ => 1,
        })),
        "noncomm4" => Ok(assemble(&["0", "a", "b", "u"], 3, |a, b| a.max(b), |a, b| match (a, b) {
            (0, _) | (_, 0) => 0,
            (3, o) | (o, 3) => o,
            (2, 1) => 1,
            (2, 2) => 2,
            _ => 0,
        })),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// The one-object system where zero and unit coincide.
pub fn degenerate() -> TensorSystem {
    assemble(&["0"], 0, |_, _| 0, |_, _| 0)
}

/// Boolean 2x2 matrices under entrywise or and relational product. Object
/// `m` encodes the matrix whose entry `(i, j)` is bit `2i + j` of `m`, and
/// is labelled by the entries `(0,0) (0,1) (1,0) (1,1)` in that order. The
/// only ideals are zero and everything, so zero is prime, but the matrix
/// unit `m0100` squares to zero, so zero is not completely prime.
pub fn boolean_matrices() -> TensorSystem {
    let labels: Vec<String> = (0..16usize)
        .map(|m| {
            let bit = |i: usize, j: usize| if m >> (2 * i + j) & 1 == 1 { '1' } else { '0' };
            alloc::format!("m{}{}{}{}", bit(0, 0), bit(0, 1), bit(1, 0), bit(1, 1))
        })
        .collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let product = |a: usize, b: usize| {
        let mut out = 0;
        for i in 0..2 {
            for k in 0..2 {
                if (0..2).any(|j| a >> (2 * i + j) & 1 == 1 && b >> (2 * j + k) & 1 == 1) {
                    out |= 1 << (2 * i + k);
                }
            }
        }
        out
    };
    assemble(&labels, 0b1001, |a, b| a | b, product)
}

/// Identity shift, summands from the sum order, completed triangles.
pub(crate) fn assemble(
    labels: &[&str],
    unit: usize,
    sum: impl Fn(usize, usize) -> usize,
    tensor: impl Fn(usize, usize) -> usize,
) -> TensorSystem {
    let n = labels.len();
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<ObjectId> {
        (0..n * n).map(|i| ObjectId::new(f(i / n, i % n))).collect()
    };
    let sum = table(&sum);
    let tensor = table(&tensor);
    let parts = SystemParts {
        labels: labels.iter().map(|l| String::from(*l)).collect(),
        unit: ObjectId::new(unit),
        shift: (0..n).map(ObjectId::new).collect(),
        summands: summand_closure(n, &sum, &[]),
        sum,
        tensor,
        triangles: Vec::new(),
    };
    TensorSystem::from_parts(parts).expect("builtin tables are well-formed").complete_triangles()
}
