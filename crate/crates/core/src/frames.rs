//! Finite frames, their points, and the Zariski frame of radical ideals.
//!
//! A finite frame is stored as explicit order, meet and join tables over
//! element ids `0..len`. On a finite carrier the infinite distributive law
//! reduces to binary distributivity, and arbitrary joins are iterated binary
//! joins starting at the bottom.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ideals::{Ideal, IdealLattice};
use crate::report::ValidationReport;
use crate::tensys::{ObjectId, TensorSystem};

/// Law names checked by [`check_frame_laws`] with their witness arity.
pub const FRAME_LAWS: &[(&str, usize)] = &[
    ("leq-reflexive", 1),
    ("leq-antisymmetric", 2),
    ("leq-transitive", 3),
    ("meet-lower-bound", 2),
    ("meet-greatest", 3),
    ("join-upper-bound", 2),
    ("join-least", 3),
    ("bottom-least", 1),
    ("top-greatest", 1),
    // (a, b, c): a meet (b join c) = (a meet b) join (a meet c)
    ("distributivity", 3),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFrame {
    len: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    /// The set each element denotes: for a Zariski frame the members of the
    /// radical ideal, for a frame of sets the point set.
    payload: Option<Vec<BitSet>>,
}

impl FiniteFrame {
    /// Builds a frame from explicit row-major tables. Only shapes and index
    /// ranges are checked here; the lattice laws are checked by
    /// [`check_frame_laws`].
    pub fn from_tables(
        len: usize,
        leq: Vec<bool>,
        meet: Vec<usize>,
        join: Vec<usize>,
        bottom: usize,
        top: usize,
    ) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidFrame("a frame has at least one element"));
        }
        if leq.len() != len * len || meet.len() != len * len || join.len() != len * len {
            return Err(Error::InvalidFrame("table shapes do not match the element count"));
        }
        if bottom >= len || top >= len || meet.iter().chain(&join).any(|&e| e >= len) {
            return Err(Error::InvalidFrame("table entry out of range"));
        }
        Ok(FiniteFrame { len, leq, meet, join, bottom, top, payload: None })
    }

    /// Builds the lattice of a partial order given as a row-major `leq`
    /// matrix, computing greatest lower and least upper bounds.
    pub fn from_order(len: usize, leq: Vec<bool>) -> Result<Self> {
        if len == 0 || leq.len() != len * len {
            return Err(Error::InvalidFrame("order matrix shape does not match the element count"));
        }
        let le = |a: usize, b: usize| leq[a * len + b];
        let extremal = |bounds: &[usize], greatest: bool| -> Option<usize> {
            bounds.iter().copied().find(|&m| {
                bounds.iter().all(|&o| if greatest { le(o, m) } else { le(m, o) })
            })
        };
        let all: Vec<usize> = (0..len).collect();
        let bottom = extremal(&all, false).ok_or(Error::InvalidFrame("no least element"))?;
        let top = extremal(&all, true).ok_or(Error::InvalidFrame("no greatest element"))?;
        let mut meet = vec![0; len * len];
        let mut join = vec![0; len * len];
        for a in 0..len {
            for b in 0..len {
                let lower: Vec<usize> = (0..len).filter(|&c| le(c, a) && le(c, b)).collect();
                let upper: Vec<usize> = (0..len).filter(|&c| le(a, c) && le(b, c)).collect();
                meet[a * len + b] = extremal(&lower, true).ok_or(Error::InvalidFrame("missing meet"))?;
                join[a * len + b] = extremal(&upper, false).ok_or(Error::InvalidFrame("missing join"))?;
            }
        }
        Self::from_tables(len, leq, meet, join, bottom, top)
    }

    /// The frame of a family of sets closed under pairwise union and
    /// intersection, ordered by inclusion. Elements are sorted by bitset and
    /// the payload records each set.
    pub fn from_sets(sets: &[BitSet]) -> Result<Self> {
        let mut sets = sets.to_vec();
        sets.sort_unstable();
        sets.dedup();
        if sets.is_empty() {
            return Err(Error::InvalidFrame("a frame has at least one element"));
        }
        let len = sets.len();
        let index = |s: BitSet| sets.binary_search(&s).ok();
        let mut leq = vec![false; len * len];
        let mut meet = vec![0; len * len];
        let mut join = vec![0; len * len];
        for (a, &sa) in sets.iter().enumerate() {
            for (b, &sb) in sets.iter().enumerate() {
                leq[a * len + b] = sa.is_subset(sb);
                meet[a * len + b] =
                    index(sa.intersection(sb)).ok_or(Error::InvalidFrame("family not closed under intersection"))?;
                join[a * len + b] = index(sa.union(sb)).ok_or(Error::InvalidFrame("family not closed under union"))?;
            }
        }
        let bottom = index(sets.iter().fold(sets[len - 1], |acc, &s| acc.intersection(s))).expect("closed");
        let top = index(sets.iter().fold(BitSet::empty(), |acc, &s| acc.union(s))).expect("closed");
        let mut frame = Self::from_tables(len, leq, meet, join, bottom, top)?;
        frame.payload = Some(sets);
        Ok(frame)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Result<Self> {
        let leq = (0..n * n).map(|i| i / n.max(1) <= i % n.max(1)).collect();
        Self::from_order(n, leq)
    }

    /// The Boolean algebra of subsets of `k` points.
    pub fn boolean(k: usize) -> Result<Self> {
        if k > 6 {
            return Err(Error::SizeBoundExceeded { what: "Boolean frame rank", size: k, bound: 6 });
        }
        let sets: Vec<BitSet> = (0..1u64 << k).map(BitSet::from_bits).collect();
        Self::from_sets(&sets)
    }

    /// The five-element diamond lattice: bottom `0`, atoms `1, 2, 3`, top `4`.
    pub fn diamond() -> Self {
        let leq = (0..25).map(|i| {
            let (a, b) = (i / 5, i % 5);
            a == b || a == 0 || b == 4
        });
        Self::from_order(5, leq.collect()).expect("the diamond is a lattice")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false: a frame has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.len
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of any family; the empty join is the bottom.
    pub fn join_all(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Meet of any family; the empty meet is the top.
    pub fn meet_all(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    pub fn payload(&self) -> Option<&[BitSet]> {
        self.payload.as_deref()
    }

    /// The element whose payload is `set`.
    pub fn find_payload(&self, set: BitSet) -> Option<usize> {
        self.payload.as_ref()?.iter().position(|&s| s == set)
    }

    pub fn set_payload(&mut self, payload: Vec<BitSet>) -> Result<()> {
        if payload.len() != self.len {
            return Err(Error::InvalidFrame("payload length does not match the element count"));
        }
        self.payload = Some(payload);
        Ok(())
    }

    /// Pairs `(a, b)` with `b` covering `a`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self.elements().any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The isomorphic frame whose element `perm[e]` plays the role of `e`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.len;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!("relabeling is not a permutation of 0..{n}")));
        }
        let mut leq = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (pa, pb) = (perm[a], perm[b]);
                leq[pa * n + pb] = self.leq(a, b);
                meet[pa * n + pb] = perm[self.meet(a, b)];
                join[pa * n + pb] = perm[self.join(a, b)];
            }
        }
        let mut out = Self::from_tables(n, leq, meet, join, perm[self.bottom], perm[self.top])?;
        if let Some(payload) = &self.payload {
            let mut moved = vec![BitSet::empty(); n];
            for (e, &s) in payload.iter().enumerate() {
                moved[perm[e]] = s;
            }
            out.payload = Some(moved);
        }
        Ok(out)
    }
}

/// An order isomorphism `f -> g` extending the `forced` pairs, if any.
/// Order isomorphisms of lattices preserve meets, joins and bounds.
pub fn frame_isomorphism(f: &FiniteFrame, g: &FiniteFrame, forced: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = f.len();
    if n != g.len() {
        return None;
    }
    let mut required = vec![usize::MAX; n];
    for &(a, b) in forced {
        if a >= n || b >= n || (required[a] != usize::MAX && required[a] != b) {
            return None;
        }
        required[a] = b;
    }
    let signature = |h: &FiniteFrame, a: usize| {
        let below = h.elements().filter(|&b| h.leq(b, a)).count();
        let above = h.elements().filter(|&b| h.leq(a, b)).count();
        (below, above)
    };
    let sf: Vec<_> = f.elements().map(|a| signature(f, a)).collect();
    let sg: Vec<_> = g.elements().map(|a| signature(g, a)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: usize,
        f: &FiniteFrame,
        g: &FiniteFrame,
        required: &[usize],
        sig: (&[(usize, usize)], &[(usize, usize)]),
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if a == map.len() {
            return true;
        }
        for b in 0..map.len() {
            if used[b] || sig.0[a] != sig.1[b] || (required[a] != usize::MAX && required[a] != b) {
                continue;
            }
            if !(0..a).all(|c| f.leq(a, c) == g.leq(b, map[c]) && f.leq(c, a) == g.leq(map[c], b)) {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if extend(a + 1, f, g, required, sig, map, used) {
                return true;
            }
            used[b] = false;
        }
        map[a] = usize::MAX;
        false
    }
    extend(0, f, g, &required, (&sf, &sg), &mut map, &mut used).then_some(map)
}

/// Checks the lattice laws, the bounds and distributivity on all tuples.
pub fn check_frame_laws(frame: &FiniteFrame) -> ValidationReport<usize> {
    let mut report = ValidationReport::new();
    let f = frame;
    let n = f.len();
    for a in 0..n {
        report.require(f.leq(a, a), "leq-reflexive", || vec![a]);
        report.require(f.leq(f.bottom(), a), "bottom-least", || vec![a]);
        report.require(f.leq(a, f.top()), "top-greatest", || vec![a]);
        for b in 0..n {
            let (m, j) = (f.meet(a, b), f.join(a, b));
            report.require(a == b || !(f.leq(a, b) && f.leq(b, a)), "leq-antisymmetric", || vec![a, b]);
            report.require(f.leq(m, a) && f.leq(m, b), "meet-lower-bound", || vec![a, b]);
            report.require(f.leq(a, j) && f.leq(b, j), "join-upper-bound", || vec![a, b]);
            for c in 0..n {
                report.require(!(f.leq(a, b) && f.leq(b, c)) || f.leq(a, c), "leq-transitive", || vec![a, b, c]);
                report.require(!(f.leq(c, a) && f.leq(c, b)) || f.leq(c, m), "meet-greatest", || vec![a, b, c]);
                report.require(!(f.leq(a, c) && f.leq(b, c)) || f.leq(j, c), "join-least", || vec![a, b, c]);
                let lhs = f.meet(a, f.join(b, c));
                let rhs = f.join(f.meet(a, b), f.meet(a, c));
                report.require(lhs == rhs, "distributivity", || vec![a, b, c]);
            }
        }
    }
    report
}

/// A frame map to `{0, 1}` in its three equivalent presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    /// `assignment[f]` is the value of the point on element `f`.
    pub assignment: Vec<bool>,
    /// The elements sent to 0, in increasing id order.
    pub prime_ideal: Vec<usize>,
    /// The join of `prime_ideal`; the prime ideal is its principal down-set.
    pub prime_element: usize,
}

impl Point {
    pub fn value(&self, f: usize) -> bool {
        self.assignment[f]
    }
}

/// Whether `u` is a prime element: not the top, and `a meet b <= u` forces
/// `a <= u` or `b <= u`.
pub fn is_prime_element(frame: &FiniteFrame, u: usize) -> bool {
    u != frame.top()
        && frame.elements().all(|a| {
            frame.leq(a, u) || frame.elements().all(|b| !frame.leq(frame.meet(a, b), u) || frame.leq(b, u))
        })
}

/// Every point, one per prime element, in increasing prime-element order.
pub fn points(frame: &FiniteFrame) -> Vec<Point> {
    frame.elements().filter(|&u| is_prime_element(frame, u)).map(|u| point_at(frame, u)).collect()
}

/// The point whose prime element is `u`: `f` maps to 0 iff `f <= u`.
pub fn point_at(frame: &FiniteFrame, u: usize) -> Point {
    let assignment: Vec<bool> = frame.elements().map(|f| !frame.leq(f, u)).collect();
    let prime_ideal = frame.elements().filter(|&f| !assignment[f]).collect();
    Point { assignment, prime_ideal, prime_element: u }
}

/// Whether an assignment preserves bottom, top, binary meets and binary
/// joins, which on a finite frame means it is a frame map to `{0, 1}`.
pub fn is_two_valued_frame_map(frame: &FiniteFrame, assignment: &[bool]) -> bool {
    assignment.len() == frame.len()
        && !assignment[frame.bottom()]
        && assignment[frame.top()]
        && frame.elements().all(|a| {
            frame.elements().all(|b| {
                assignment[frame.meet(a, b)] == (assignment[a] && assignment[b])
                    && assignment[frame.join(a, b)] == (assignment[a] || assignment[b])
            })
        })
}

/// The Zariski frame: radical thick tensor ideals under intersection and
/// radical-of-union, ordered by their bitsets. Refuses systems with a prime
/// that is not completely prime.
pub fn zar_frame(sys: &TensorSystem) -> Result<FiniteFrame> {
    zar_frame_of(&IdealLattice::new(sys))
}

pub fn zar_frame_of(lattice: &IdealLattice<'_>) -> Result<FiniteFrame> {
    let check = lattice.check_assumption();
    if !check.holds {
        return Err(Error::AssumptionViolated {
            counterexamples: check.counterexamples.iter().map(|p| p.members()).collect(),
        });
    }
    let radicals: Vec<BitSet> = lattice.radical_ideals().iter().map(|i| i.members()).collect();
    let len = radicals.len();
    let index = |s: BitSet| radicals.binary_search(&s).expect("radical ideals are closed under these operations");
    let mut leq = vec![false; len * len];
    let mut meet = vec![0; len * len];
    let mut join = vec![0; len * len];
    for (a, &ia) in radicals.iter().enumerate() {
        for (b, &ib) in radicals.iter().enumerate() {
            leq[a * len + b] = ia.is_subset(ib);
            meet[a * len + b] = index(ia.intersection(ib));
            let union = lattice.close(ia.union(ib));
            join[a * len + b] = index(lattice.radical(union, crate::ideals::RadicalMethod::ViaPrimes).members());
        }
    }
    let bottom = 0;
    let top = len - 1;
    let mut frame = FiniteFrame::from_tables(len, leq, meet, join, bottom, top)?;
    frame.payload = Some(radicals);
    Ok(frame)
}

/// The radical ideal denoted by a Zariski frame element.
pub fn zar_ideal(frame: &FiniteFrame, e: usize) -> Option<Ideal> {
    frame.payload().map(|p| Ideal::from_members(p[e]))
}

/// For each element `I` of a Zariski frame, the sum of all members of `I`;
/// its principal radical is `I` whenever the system satisfies the frame
/// hypotheses.
pub fn principal_witnesses(sys: &TensorSystem, frame: &FiniteFrame) -> Result<Vec<ObjectId>> {
    let payload = frame.payload().ok_or(Error::InvalidFrame("principal witnesses need ideal payloads"))?;
    Ok(payload.iter().map(|&s| sys.sum_all(s.iter().map(ObjectId::new))).collect())
}
