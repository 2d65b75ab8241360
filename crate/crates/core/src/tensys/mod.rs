//! Finite tensor systems: desk-scale algebraic models of essentially small
//! noncommutative tensor triangulated categories.
//!
//! Objects stand for isomorphism classes. Direct sum is idempotent (it is a
//! join-semilattice with the zero object as bottom), which loses nothing for
//! thick ideals since they are closed under finite sums and summands.
//! Distinguished triangles are an explicit set of triples `(a, b, c)` read as
//! `a -> b -> c -> shift(a)`.

mod builtin;
mod random;
mod validate;

pub use builtin::{boolean_matrices, builtin, degenerate, BUILTIN_NAMES};
pub use random::{random_system, MAX_RANDOM_OBJECTS};
pub use validate::{axiom_holds, validate, AXIOMS};

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Index of an object (isomorphism class). Index 0 is always the zero object.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ObjectId(u8);

impl ObjectId {
    pub const ZERO: ObjectId = ObjectId(0);

    /// Panics if `index` does not fit the 64-object bound.
    pub fn new(index: usize) -> Self {
        assert!(index < TensorSystem::MAX_OBJECTS, "object index {index} out of range");
        ObjectId(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A distinguished triangle `a -> b -> c -> shift(a)`.
pub type Triangle = (ObjectId, ObjectId, ObjectId);

/// Raw tables from which a [`TensorSystem`] is assembled. Object `0` is the
/// zero object; tables are indexed row-major by object index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemParts {
    pub labels: Vec<String>,
    pub unit: ObjectId,
    pub shift: Vec<ObjectId>,
    /// `sum[a * n + b] = a (+) b`
    pub sum: Vec<ObjectId>,
    /// `tensor[a * n + b] = a (x) b`
    pub tensor: Vec<ObjectId>,
    pub triangles: Vec<Triangle>,
    /// `(s, t)`: `s` is a direct summand of `t`.
    pub summands: Vec<(ObjectId, ObjectId)>,
}

/// An immutable finite tensor system.
///
/// Construction only checks table shapes; the structural axioms are checked
/// by [`validate`], which reports violations as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSystem {
    labels: Vec<String>,
    unit: ObjectId,
    shift: Vec<ObjectId>,
    sum: Vec<ObjectId>,
    tensor: Vec<ObjectId>,
    triangles: Vec<Triangle>,
    /// `summands_of[t]` = every `s` with `s` a summand of `t`.
    summands_of: Vec<BitSet>,
    // derived lookups
    shift_preimage: Vec<BitSet>,
    /// `extensions[a * n + c]` = every `b` with `(a, b, c)` a triangle.
    extensions: Vec<BitSet>,
}

impl TensorSystem {
    pub const MAX_OBJECTS: usize = BitSet::CAPACITY;

    pub fn from_parts(parts: SystemParts) -> Result<Self> {
        let n = parts.labels.len();
        if n == 0 {
            return Err(Error::MalformedSystem("a system needs at least the zero object".into()));
        }
        if n > Self::MAX_OBJECTS {
            return Err(Error::SizeBoundExceeded { what: "objects", size: n, bound: Self::MAX_OBJECTS });
        }
        let in_range = |o: ObjectId| o.index() < n;
        let check_table = |name: &str, table: &[ObjectId], len: usize| -> Result<()> {
            if table.len() != len {
                return Err(Error::MalformedSystem(format!(
                    "{name} table has {} entries, expected {len}",
                    table.len()
                )));
            }
            if let Some(bad) = table.iter().find(|o| !in_range(**o)) {
                return Err(Error::MalformedSystem(format!("{name} table references index {}", bad.index())));
            }
            Ok(())
        };
        check_table("shift", &parts.shift, n)?;
        check_table("sum", &parts.sum, n * n)?;
        check_table("tensor", &parts.tensor, n * n)?;
        if !in_range(parts.unit) {
            return Err(Error::MalformedSystem("unit index out of range".into()));
        }
        for &(a, b, c) in &parts.triangles {
            if !(in_range(a) && in_range(b) && in_range(c)) {
                return Err(Error::MalformedSystem("triangle references an unknown object".into()));
            }
        }
        let mut summands_of = alloc::vec![BitSet::empty(); n];
        for &(s, t) in &parts.summands {
            if !(in_range(s) && in_range(t)) {
                return Err(Error::MalformedSystem("summand pair references an unknown object".into()));
            }
            summands_of[t.index()].insert(s.index());
        }
        let mut labels_seen = BTreeSet::new();
        for l in &parts.labels {
            if !labels_seen.insert(l.as_str()) {
                return Err(Error::MalformedSystem(format!("duplicate label `{l}`")));
            }
        }

        let triangles: Vec<Triangle> = parts.triangles.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut shift_preimage = alloc::vec![BitSet::empty(); n];
        for (a, s) in parts.shift.iter().enumerate() {
            shift_preimage[s.index()].insert(a);
        }
        let mut extensions = alloc::vec![BitSet::empty(); n * n];
        for &(a, b, c) in &triangles {
            extensions[a.index() * n + c.index()].insert(b.index());
        }
        Ok(TensorSystem {
            labels: parts.labels,
            unit: parts.unit,
            shift: parts.shift,
            sum: parts.sum,
            tensor: parts.tensor,
            triangles,
            summands_of,
            shift_preimage,
            extensions,
        })
    }

    pub fn to_parts(&self) -> SystemParts {
        SystemParts {
            labels: self.labels.clone(),
            unit: self.unit,
            shift: self.shift.clone(),
            sum: self.sum.clone(),
            tensor: self.tensor.clone(),
            triangles: self.triangles.clone(),
            summands: self.summand_pairs(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; a system contains at least its zero object.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> + Clone {
        (0..self.len()).map(ObjectId::new)
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    #[inline]
    pub fn zero(&self) -> ObjectId {
        ObjectId::ZERO
    }

    #[inline]
    pub fn unit(&self) -> ObjectId {
        self.unit
    }

    /// `zero == unit`: the one-object system.
    pub fn is_degenerate(&self) -> bool {
        self.unit == ObjectId::ZERO
    }

    pub fn label(&self, o: ObjectId) -> &str {
        &self.labels[o.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find(&self, label: &str) -> Option<ObjectId> {
        self.labels.iter().position(|l| l == label).map(ObjectId::new)
    }

    #[inline]
    pub fn shift(&self, a: ObjectId) -> ObjectId {
        self.shift[a.index()]
    }

    /// Objects whose shift is `a`; a singleton when shift is a bijection.
    pub fn shift_preimage(&self, a: ObjectId) -> BitSet {
        self.shift_preimage[a.index()]
    }

    /// Desuspension as the inverse of the shift bijection.
    pub fn unshift(&self, a: ObjectId) -> Option<ObjectId> {
        let pre = self.shift_preimage(a);
        if pre.len() == 1 {
            pre.first().map(ObjectId::new)
        } else {
            None
        }
    }

    #[inline]
    pub fn sum(&self, a: ObjectId, b: ObjectId) -> ObjectId {
        self.sum[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn tensor(&self, a: ObjectId, b: ObjectId) -> ObjectId {
        self.tensor[a.index() * self.len() + b.index()]
    }

    /// Iterated direct sum; the empty sum is zero.
    pub fn sum_all(&self, objects: impl IntoIterator<Item = ObjectId>) -> ObjectId {
        objects.into_iter().fold(ObjectId::ZERO, |acc, o| self.sum(acc, o))
    }

    /// Distinct tensor powers `k, k^2, k^3, ..` up to the first repetition.
    /// The orbit is eventually periodic, so this lists every power of `k`.
    pub fn tensor_powers(&self, k: ObjectId) -> Vec<ObjectId> {
        let mut seen = BitSet::empty();
        let mut out = Vec::new();
        let mut p = k;
        while seen.insert(p.index()) {
            out.push(p);
            p = self.tensor(p, k);
        }
        out
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn is_triangle(&self, a: ObjectId, b: ObjectId, c: ObjectId) -> bool {
        self.extensions(a, c).contains(b.index())
    }

    /// Every `b` that is an extension `a -> b -> c`.
    #[inline]
    pub fn extensions(&self, a: ObjectId, c: ObjectId) -> BitSet {
        self.extensions[a.index() * self.len() + c.index()]
    }

    pub fn is_summand(&self, s: ObjectId, t: ObjectId) -> bool {
        self.summands_of[t.index()].contains(s.index())
    }

    pub fn summands_of(&self, t: ObjectId) -> BitSet {
        self.summands_of[t.index()]
    }

    pub fn summand_pairs(&self) -> Vec<(ObjectId, ObjectId)> {
        let mut out = Vec::new();
        for t in self.objects() {
            for s in self.summands_of(t) {
                out.push((ObjectId::new(s), t));
            }
        }
        out.sort_unstable();
        out
    }

    /// `a <= b` in the direct-sum semilattice, i.e. `a (+) b = b`.
    pub fn sum_leq(&self, a: ObjectId, b: ObjectId) -> bool {
        self.sum(a, b) == b
    }

    pub fn set_labels(&self, set: BitSet) -> Vec<&str> {
        set.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Returns a copy whose triangle set contains every split triangle
    /// `(a, a (+) b, b)` and is closed under rotation
    /// `(a, b, c) -> (b, c, shift a)` and under tensoring by any object on
    /// either side. Completing twice equals completing once.
    pub fn complete_triangles(&self) -> TensorSystem {
        let mut parts = self.to_parts();
        let mut set: BTreeSet<Triangle> = parts.triangles.iter().copied().collect();
        for a in self.objects() {
            for b in self.objects() {
                set.insert((a, self.sum(a, b), b));
            }
        }
        let mut work: Vec<Triangle> = set.iter().copied().collect();
        while let Some((a, b, c)) = work.pop() {
            let mut derived = Vec::with_capacity(1 + 2 * self.len());
            derived.push((b, c, self.shift(a)));
            for t in self.objects() {
                derived.push((self.tensor(t, a), self.tensor(t, b), self.tensor(t, c)));
                derived.push((self.tensor(a, t), self.tensor(b, t), self.tensor(c, t)));
            }
            for tri in derived {
                if set.insert(tri) {
                    work.push(tri);
                }
            }
        }
        parts.triangles = set.into_iter().collect();
        TensorSystem::from_parts(parts).expect("completion keeps tables well-formed")
    }

    pub fn validate(&self) -> ValidationReport<ObjectId> {
        validate(self)
    }
}

/// Reflexive-transitive closure of the direct-sum order together with any
/// extra `(summand, whole)` pairs; the summand relation every system uses.
pub fn summand_closure(n: usize, sum: &[ObjectId], extra: &[(ObjectId, ObjectId)]) -> Vec<(ObjectId, ObjectId)> {
    let mut below = alloc::vec![BitSet::empty(); n];
    for t in 0..n {
        below[t].insert(t);
        for s in 0..n {
            if sum[s * n + t].index() == t {
                below[t].insert(s);
            }
        }
    }
    for &(s, t) in extra {
        below[t.index()].insert(s.index());
    }
    // Warshall
    for k in 0..n {
        for t in 0..n {
            if below[t].contains(k) {
                below[t] = below[t].union(below[k]);
            }
        }
    }
    let mut out = Vec::new();
    for (t, set) in below.iter().enumerate() {
        for s in set.iter() {
            out.push((ObjectId::new(s), ObjectId::new(t)));
        }
    }
    out.sort_unstable();
    out
}
