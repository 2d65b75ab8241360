//! Exhaustive structural checks for [`TensorSystem`].
//!
//! Each axiom is a predicate on a witness tuple. [`validate`] evaluates the
//! predicate on every tuple of the right arity and records each failure, so
//! a reported witness always replays through [`axiom_holds`].

use alloc::vec;
use alloc::vec::Vec;

use super::{ObjectId, TensorSystem};
use crate::report::ValidationReport;

/// Axiom names with their witness arity.
pub const AXIOMS: &[(&str, usize)] = &[
    ("sum-associativity", 3),
    ("sum-commutativity", 2),
    ("sum-idempotence", 1),
    ("sum-zero-identity", 1),
    ("tensor-associativity", 3),
    ("tensor-unit", 1),
    ("tensor-zero", 1),
    // (a, b, t): (a (+) b) (x) t and t (x) (a (+) b) both split
    ("tensor-sum-distributivity", 3),
    // (a, b) with a < b and shift(a) = shift(b)
    ("shift-bijection", 2),
    ("shift-zero", 1),
    ("shift-sum", 2),
    // shift(a (x) b) = shift(a) (x) b = a (x) shift(b)
    ("shift-tensor", 2),
    ("triangle-rotation", 3),
    ("split-triangle", 2),
    // (a, b, c, t): t (x) - and - (x) t carry triangles to triangles
    ("triangle-tensor-closure", 4),
    ("summand-sum", 2),
    ("summand-reflexive", 1),
    ("summand-transitive", 3),
    // a summand s of t satisfies s (+) t = t
    ("summand-below", 2),
];

/// Evaluates one axiom on one witness. Unknown axiom names and witnesses of
/// the wrong arity evaluate to `true` (nothing to violate).
pub fn axiom_holds(sys: &TensorSystem, axiom: &str, w: &[ObjectId]) -> bool {
    let s = |a, b| sys.sum(a, b);
    let t = |a, b| sys.tensor(a, b);
    let zero = sys.zero();
    match (axiom, w) {
        ("sum-associativity", &[a, b, c]) => s(s(a, b), c) == s(a, s(b, c)),
        ("sum-commutativity", &[a, b]) => s(a, b) == s(b, a),
        ("sum-idempotence", &[a]) => s(a, a) == a,
        ("sum-zero-identity", &[a]) => s(zero, a) == a && s(a, zero) == a,
        ("tensor-associativity", &[a, b, c]) => t(t(a, b), c) == t(a, t(b, c)),
        ("tensor-unit", &[a]) => t(sys.unit(), a) == a && t(a, sys.unit()) == a,
        ("tensor-zero", &[a]) => t(zero, a) == zero && t(a, zero) == zero,
        ("tensor-sum-distributivity", &[a, b, c]) => {
            t(s(a, b), c) == s(t(a, c), t(b, c)) && t(c, s(a, b)) == s(t(c, a), t(c, b))
        }
        ("shift-bijection", &[a, b]) => a == b || sys.shift(a) != sys.shift(b),
        ("shift-zero", &[_]) => sys.shift(zero) == zero,
        ("shift-sum", &[a, b]) => sys.shift(s(a, b)) == s(sys.shift(a), sys.shift(b)),
        ("shift-tensor", &[a, b]) => {
            let lhs = sys.shift(t(a, b));
            lhs == t(sys.shift(a), b) && lhs == t(a, sys.shift(b))
        }
        ("triangle-rotation", &[a, b, c]) => !sys.is_triangle(a, b, c) || sys.is_triangle(b, c, sys.shift(a)),
        ("split-triangle", &[a, b]) => sys.is_triangle(a, s(a, b), b),
        ("triangle-tensor-closure", &[a, b, c, x]) => {
            !sys.is_triangle(a, b, c)
                || (sys.is_triangle(t(x, a), t(x, b), t(x, c)) && sys.is_triangle(t(a, x), t(b, x), t(c, x)))
        }
        ("summand-sum", &[a, b]) => {
            let ab = s(a, b);
            sys.is_summand(zero, ab) && sys.is_summand(a, ab) && sys.is_summand(b, ab) && sys.is_summand(ab, ab)
        }
        ("summand-reflexive", &[a]) => sys.is_summand(a, a),
        ("summand-transitive", &[a, b, c]) => !(sys.is_summand(a, b) && sys.is_summand(b, c)) || sys.is_summand(a, c),
        ("summand-below", &[a, b]) => !sys.is_summand(a, b) || sys.sum_leq(a, b),
        _ => true,
    }
}

/// Checks every structural axiom over all object tuples.
pub fn validate(sys: &TensorSystem) -> ValidationReport<ObjectId> {
    let mut report = ValidationReport::new();
    let objs: Vec<ObjectId> = sys.objects().collect();
    for &(axiom, arity) in AXIOMS {
        match axiom {
            "shift-zero" => {
                let w = [sys.zero()];
                report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
            }
            "shift-bijection" => {
                for (i, &a) in objs.iter().enumerate() {
                    for &b in &objs[i + 1..] {
                        let w = [a, b];
                        report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
                    }
                }
            }
            "triangle-rotation" => {
                for &(a, b, c) in sys.triangles() {
                    let w = [a, b, c];
                    report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
                }
            }
            "triangle-tensor-closure" => {
                for &(a, b, c) in sys.triangles() {
                    for &x in &objs {
                        let w = [a, b, c, x];
                        report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
                    }
                }
            }
            "summand-transitive" | "summand-below" => {
                // Only tuples inside the relation can fail.
                for &(a, b) in &sys.summand_pairs() {
                    if arity == 2 {
                        let w = [a, b];
                        report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
                    } else {
                        for c in sys.objects().filter(|&c| sys.is_summand(b, c)) {
                            let w = [a, b, c];
                            report.require(axiom_holds(sys, axiom, &w), axiom, || w.to_vec());
                        }
                    }
                }
            }
            _ => {
                let mut w = vec![ObjectId::ZERO; arity];
                for_each_tuple(&objs, &mut w, 0, &mut |w| {
                    report.require(axiom_holds(sys, axiom, w), axiom, || w.to_vec());
                });
            }
        }
    }
    report
}

fn for_each_tuple(objs: &[ObjectId], w: &mut [ObjectId], pos: usize, f: &mut impl FnMut(&[ObjectId])) {
    if pos == w.len() {
        f(w);
        return;
    }
    for &o in objs {
        w[pos] = o;
        for_each_tuple(objs, w, pos + 1, f);
    }
}
