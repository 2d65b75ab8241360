//! Thick tensor ideals: generated ideals, enumeration, primality, radicals.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::tensys::{ObjectId, TensorSystem};

/// Largest object count [`enumerate_thick_ideals`] accepts by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// A thick tensor ideal, as the set of its member objects.
///
/// Ordered by the underlying bitset, which is the canonical order for every
/// list of ideals this crate returns.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(BitSet);

impl Ideal {
    /// Wraps a set without checking closure; see [`is_thick_ideal`].
    pub const fn from_members(members: BitSet) -> Self {
        Ideal(members)
    }

    pub fn members(self) -> BitSet {
        self.0
    }

    pub fn contains(self, o: ObjectId) -> bool {
        self.0.contains(o.index())
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn intersection(self, other: Ideal) -> Ideal {
        Ideal(self.0.intersection(other.0))
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn objects(self) -> impl Iterator<Item = ObjectId> {
        self.0.iter().map(ObjectId::new)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.0)
    }
}

/// Smallest thick tensor ideal containing `generators`: the least fixpoint
/// of the generation rules (shifts and desuspensions, finite sums, two-sided
/// tensoring with any object, extensions, summands) above `generators + {0}`.
pub fn close(sys: &TensorSystem, generators: BitSet) -> Ideal {
    let mut members = generators.intersection(sys.all()).with(0);
    let mut queue: Vec<usize> = members.iter().collect();
    let admit = |o: ObjectId, members: &mut BitSet, queue: &mut Vec<usize>| {
        if members.insert(o.index()) {
            queue.push(o.index());
        }
    };
    while let Some(i) = queue.pop() {
        let a = ObjectId::new(i);
        admit(sys.shift(a), &mut members, &mut queue);
        for p in sys.shift_preimage(a) {
            admit(ObjectId::new(p), &mut members, &mut queue);
        }
        for s in sys.summands_of(a) {
            admit(ObjectId::new(s), &mut members, &mut queue);
        }
        for t in sys.objects() {
            admit(sys.tensor(a, t), &mut members, &mut queue);
            admit(sys.tensor(t, a), &mut members, &mut queue);
        }
        for c in members {
            let c = ObjectId::new(c);
            admit(sys.sum(a, c), &mut members, &mut queue);
            for b in sys.extensions(a, c).union(sys.extensions(c, a)) {
                admit(ObjectId::new(b), &mut members, &mut queue);
            }
        }
    }
    Ideal(members)
}

/// Direct check of the thick tensor ideal conditions on a set of objects.
pub fn is_thick_ideal(sys: &TensorSystem, set: BitSet) -> bool {
    let has = |o: ObjectId| set.contains(o.index());
    if !has(sys.zero()) {
        return false;
    }
    for a in set.iter().map(ObjectId::new) {
        if !has(sys.shift(a)) || !sys.shift_preimage(a).is_subset(set) || !sys.summands_of(a).is_subset(set) {
            return false;
        }
        if sys.objects().any(|t| !has(sys.tensor(a, t)) || !has(sys.tensor(t, a))) {
            return false;
        }
        for c in set.iter().map(ObjectId::new) {
            if !has(sys.sum(a, c)) || !sys.extensions(a, c).is_subset(set) {
                return false;
            }
        }
    }
    true
}

/// The ideal generated by all products `i (x) j`.
pub fn ideal_product(sys: &TensorSystem, left: Ideal, right: Ideal) -> Ideal {
    close(sys, raw_product(sys, left, right))
}

fn raw_product(sys: &TensorSystem, left: Ideal, right: Ideal) -> BitSet {
    let mut out = BitSet::empty();
    for i in left.objects() {
        for j in right.objects() {
            out.insert(sys.tensor(i, j).index());
        }
    }
    out
}

/// Every thick tensor ideal, in canonical order. Fails when the system has
/// more than [`DEFAULT_ENUMERATION_BOUND`] objects.
pub fn enumerate_thick_ideals(sys: &TensorSystem) -> Result<Vec<Ideal>> {
    enumerate_thick_ideals_bounded(sys, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_thick_ideals_bounded(sys: &TensorSystem, bound: usize) -> Result<Vec<Ideal>> {
    if sys.len() > bound {
        return Err(Error::SizeBoundExceeded { what: "ideal enumeration", size: sys.len(), bound });
    }
    Ok(frontier_enumeration(sys))
}

/// Every ideal is reached from the zero ideal by adjoining one object at a
/// time and closing, so a search over that graph finds exactly the set of
/// closures of all subsets.
fn frontier_enumeration(sys: &TensorSystem) -> Vec<Ideal> {
    let start = close(sys, BitSet::empty());
    let mut found = BTreeSet::new();
    found.insert(start);
    let mut queue = alloc::vec![start];
    while let Some(ideal) = queue.pop() {
        for a in ideal.members().complement(sys.len()) {
            let next = close(sys, ideal.members().with(a));
            if found.insert(next) {
                queue.push(next);
            }
        }
    }
    found.into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeClassification {
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_completely_prime: bool,
    /// Ideals `I`, `J` with `I (x) J` inside but neither contained.
    pub prime_witness: Option<(Ideal, Ideal)>,
    /// Objects `a`, `b` outside with `a (x) b` inside.
    pub complete_witness: Option<(ObjectId, ObjectId)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalMethod {
    /// Intersection of all primes containing the ideal.
    ViaPrimes,
    /// Ideal generated by every object with some tensor power in the ideal.
    ViaRoots,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionCheck {
    pub holds: bool,
    /// Primes that are not completely prime.
    pub counterexamples: Vec<Ideal>,
}

/// The ideal lattice of a system with its primes, computed once.
#[derive(Clone, Debug)]
pub struct IdealLattice<'a> {
    sys: &'a TensorSystem,
    ideals: Vec<Ideal>,
    primes: Vec<Ideal>,
}

impl<'a> IdealLattice<'a> {
    /// Enumerates without a size bound.
    pub fn new(sys: &'a TensorSystem) -> Self {
        let ideals = frontier_enumeration(sys);
        let primes = ideals
            .iter()
            .copied()
            .filter(|&p| classify_in(sys, &ideals, p).is_prime)
            .collect();
        IdealLattice { sys, ideals, primes }
    }

    pub fn with_bound(sys: &'a TensorSystem, bound: usize) -> Result<Self> {
        enumerate_thick_ideals_bounded(sys, bound)?;
        Ok(Self::new(sys))
    }

    pub fn system(&self) -> &'a TensorSystem {
        self.sys
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn whole(&self) -> Ideal {
        Ideal(self.sys.all())
    }

    pub fn close(&self, generators: BitSet) -> Ideal {
        close(self.sys, generators)
    }

    pub fn principal(&self, k: ObjectId) -> Ideal {
        close(self.sys, BitSet::singleton(k.index()))
    }

    pub fn classify(&self, ideal: Ideal) -> PrimeClassification {
        classify_in(self.sys, &self.ideals, ideal)
    }

    pub fn check_assumption(&self) -> AssumptionCheck {
        let counterexamples: Vec<Ideal> = self
            .primes
            .iter()
            .copied()
            .filter(|&p| !self.classify(p).is_completely_prime)
            .collect();
        AssumptionCheck { holds: counterexamples.is_empty(), counterexamples }
    }

    pub fn radical(&self, ideal: Ideal, method: RadicalMethod) -> Ideal {
        match method {
            RadicalMethod::ViaPrimes => self
                .primes
                .iter()
                .filter(|p| ideal.is_subset(**p))
                .fold(self.whole(), |acc, p| acc.intersection(*p)),
            RadicalMethod::ViaRoots => {
                let roots = self
                    .sys
                    .objects()
                    .filter(|&k| self.sys.tensor_powers(k).iter().any(|&p| ideal.contains(p)))
                    .map(ObjectId::index)
                    .collect();
                close(self.sys, roots)
            }
        }
    }

    /// Radical of the ideal generated by one object.
    pub fn principal_radical(&self, k: ObjectId) -> Ideal {
        self.radical(self.principal(k), RadicalMethod::ViaPrimes)
    }

    pub fn radical_ideals(&self) -> Vec<Ideal> {
        self.ideals
            .iter()
            .copied()
            .filter(|&i| self.radical(i, RadicalMethod::ViaPrimes) == i)
            .collect()
    }
}

fn classify_in(sys: &TensorSystem, ideals: &[Ideal], p: Ideal) -> PrimeClassification {
    let is_proper = !p.contains(sys.unit());
    let mut out = PrimeClassification {
        is_proper,
        is_prime: false,
        is_completely_prime: false,
        prime_witness: None,
        complete_witness: None,
    };
    if !is_proper {
        return out;
    }
    let outside: Vec<Ideal> = ideals.iter().copied().filter(|i| !i.is_subset(p)).collect();
    out.prime_witness = outside.iter().find_map(|&i| {
        outside
            .iter()
            .find(|&&j| ideal_product(sys, i, j).is_subset(p))
            .map(|&j| (i, j))
    });
    out.is_prime = out.prime_witness.is_none();
    let excluded: Vec<ObjectId> = sys.objects().filter(|&o| !p.contains(o)).collect();
    out.complete_witness = excluded.iter().find_map(|&a| {
        excluded.iter().find(|&&b| p.contains(sys.tensor(a, b))).map(|&b| (a, b))
    });
    out.is_completely_prime = out.complete_witness.is_none();
    out
}

/// Classifies `ideal` against the full ideal lattice of `sys`.
pub fn classify(sys: &TensorSystem, ideal: Ideal) -> PrimeClassification {
    classify_in(sys, &frontier_enumeration(sys), ideal)
}

pub fn check_assumption(sys: &TensorSystem) -> AssumptionCheck {
    IdealLattice::new(sys).check_assumption()
}

pub fn radical(sys: &TensorSystem, ideal: Ideal, method: RadicalMethod) -> Ideal {
    IdealLattice::new(sys).radical(ideal, method)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensys::builtin;

    fn set(sys: &TensorSystem, labels: &[&str]) -> BitSet {
        labels.iter().map(|l| sys.find(l).unwrap().index()).collect()
    }

    #[test]
    fn close_examples() {
        let trivial = builtin("trivial").unwrap();
        assert_eq!(close(&trivial, BitSet::empty()).members(), set(&trivial, &["0"]));
        let two = builtin("two_idem").unwrap();
        assert_eq!(close(&two, set(&two, &["x"])).members(), set(&two, &["0", "x"]));
        for name in crate::tensys::BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            assert_eq!(close(&sys, BitSet::singleton(sys.unit().index())).members(), sys.all());
        }
    }

    #[test]
    fn enumeration_examples() {
        let trivial = builtin("trivial").unwrap();
        let ideals: Vec<BitSet> = enumerate_thick_ideals(&trivial).unwrap().into_iter().map(Ideal::members).collect();
        assert_eq!(ideals, [set(&trivial, &["0"]), trivial.all()]);

        let two = builtin("two_idem").unwrap();
        let ideals: Vec<BitSet> = enumerate_thick_ideals(&two).unwrap().into_iter().map(Ideal::members).collect();
        assert_eq!(
            ideals,
            [set(&two, &["0"]), set(&two, &["0", "x"]), set(&two, &["0", "y"]), two.all()]
        );
    }

    #[test]
    fn classification_examples() {
        let two = builtin("two_idem").unwrap();
        let px = Ideal::from_members(set(&two, &["0", "x"]));
        let c = classify(&two, px);
        assert!(c.is_proper && c.is_prime && c.is_completely_prime);

        let whole = classify(&two, Ideal::from_members(two.all()));
        assert!(!whole.is_proper && !whole.is_prime);

        let zero = classify(&two, Ideal::from_members(set(&two, &["0"])));
        assert!(!zero.is_prime);
        let py = Ideal::from_members(set(&two, &["0", "y"]));
        assert_eq!(zero.prime_witness, Some((px, py)));
        let x = two.find("x").unwrap();
        let y = two.find("y").unwrap();
        assert_eq!(zero.complete_witness, Some((x, y)));
    }

    #[test]
    fn products() {
        let two = builtin("two_idem").unwrap();
        let px = close(&two, set(&two, &["x"]));
        let py = close(&two, set(&two, &["y"]));
        let zero = close(&two, BitSet::empty());
        let whole = Ideal::from_members(two.all());
        assert_eq!(ideal_product(&two, px, py), zero);
        assert_eq!(ideal_product(&two, px, whole), px);
        assert_eq!(ideal_product(&two, px, zero), zero);
    }

    #[test]
    fn assumption_and_radicals() {
        let trivial = builtin("trivial").unwrap();
        assert_eq!(check_assumption(&trivial), AssumptionCheck { holds: true, counterexamples: Vec::new() });
        let two = builtin("two_idem").unwrap();
        assert!(check_assumption(&two).holds);
        let zero = close(&two, BitSet::empty());
        assert_eq!(radical(&two, zero, RadicalMethod::ViaPrimes), zero);

        let chain = builtin("chain3").unwrap();
        let lat = IdealLattice::new(&chain);
        let xp = lat.principal(chain.find("x'").unwrap());
        let root = lat.radical(xp, RadicalMethod::ViaRoots);
        assert!(root.contains(chain.find("x").unwrap()));
        assert_ne!(root, xp, "<x'> is not radical");
        for p in lat.primes() {
            assert_eq!(lat.radical(*p, RadicalMethod::ViaPrimes), *p);
            assert_eq!(lat.radical(*p, RadicalMethod::ViaRoots), *p);
        }
    }

    #[test]
    fn degenerate_system_has_one_ideal() {
        let sys = crate::tensys::degenerate();
        assert!(sys.is_degenerate());
        let ideals = enumerate_thick_ideals(&sys).unwrap();
        assert_eq!(ideals, [Ideal::from_members(BitSet::singleton(0))]);
        assert!(IdealLattice::new(&sys).primes().is_empty());
    }

    #[test]
    fn enumeration_bound() {
        let sys = builtin("two_idem").unwrap();
        assert!(matches!(
            enumerate_thick_ideals_bounded(&sys, 3),
            Err(Error::SizeBoundExceeded { .. })
        ));
    }
}
