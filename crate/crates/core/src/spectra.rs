//! Finite topological spaces: the spectrum of prime ideals, the space of
//! points of a frame, Hochster duality, and homeomorphism search.
//!
//! Points are indices `0..len`; an open set is a [`BitSet`] of points. The
//! open family of a [`FiniteSpace`] always contains the empty and the full
//! set, is closed under pairwise union and intersection, and is stored
//! sorted without duplicates.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::frames::{is_two_valued_frame_map, point_at, points, zar_frame_of, FiniteFrame, Point};
use crate::ideals::{Ideal, IdealLattice};
use crate::report::TheoremReport;
use crate::tensys::TensorSystem;

/// Largest point count accepted by [`homeomorphic`].
pub const HOMEOMORPHISM_BOUND: usize = 12;

/// What a point of a space stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointPayload {
    /// A prime thick tensor ideal.
    Prime(Ideal),
    /// A point of a frame.
    FramePoint(Point),
    /// An element of a frame.
    FrameElement(usize),
    /// A set of points of some other space.
    Set(BitSet),
    /// No further meaning.
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    payload: Vec<PointPayload>,
    opens: Vec<BitSet>,
}

impl FiniteSpace {
    /// Accepts an explicit open family, which must already be a topology.
    pub fn new(payload: Vec<PointPayload>, opens: &[BitSet]) -> Result<Self> {
        let n = payload.len();
        if n > BitSet::CAPACITY {
            return Err(Error::SizeBoundExceeded { what: "space points", size: n, bound: BitSet::CAPACITY });
        }
        let mut opens = opens.to_vec();
        opens.sort_unstable();
        opens.dedup();
        let full = BitSet::full(n);
        let ok = opens.iter().all(|o| o.is_subset(full))
            && opens.binary_search(&BitSet::empty()).is_ok()
            && opens.binary_search(&full).is_ok()
            && opens.iter().all(|&a| {
                opens
                    .iter()
                    .all(|&b| opens.binary_search(&a.union(b)).is_ok() && opens.binary_search(&a.intersection(b)).is_ok())
            });
        if !ok {
            return Err(Error::InvalidArgument(format!("open family on {n} points is not a topology")));
        }
        Ok(FiniteSpace { payload, opens })
    }

    /// The topology generated by a subbasis: finite intersections, then
    /// unions, iterated pairwise to a fixpoint.
    pub fn generated(payload: Vec<PointPayload>, subbasis: &[BitSet]) -> Result<Self> {
        let n = payload.len();
        if n > BitSet::CAPACITY {
            return Err(Error::SizeBoundExceeded { what: "space points", size: n, bound: BitSet::CAPACITY });
        }
        let full = BitSet::full(n);
        let mut found: BTreeSet<BitSet> = subbasis.iter().map(|s| s.intersection(full)).collect();
        found.insert(BitSet::empty());
        found.insert(full);
        let mut frontier: Vec<BitSet> = found.iter().copied().collect();
        while !frontier.is_empty() {
            let snapshot: Vec<BitSet> = found.iter().copied().collect();
            let mut next = Vec::new();
            for &a in &frontier {
                for &b in &snapshot {
                    for c in [a.union(b), a.intersection(b)] {
                        if found.insert(c) {
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(FiniteSpace { payload, opens: found.into_iter().collect() })
    }

    pub fn len(&self) -> usize {
        self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payload.is_empty()
    }

    pub fn points(&self) -> BitSet {
        BitSet::full(self.len())
    }

    pub fn payload(&self) -> &[PointPayload] {
        &self.payload
    }

    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn is_open(&self, set: BitSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: BitSet) -> bool {
        set.is_subset(self.points()) && self.is_open(set.complement(self.len()))
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> Vec<BitSet> {
        let mut out: Vec<BitSet> = self.opens.iter().map(|o| o.complement(self.len())).collect();
        out.sort_unstable();
        out
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> BitSet {
        self.opens.iter().filter(|o| o.contains(x)).fold(self.points(), |acc, &o| acc.intersection(o))
    }

    /// `x` specializes to `y`: every open containing `x` contains `y`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.neighbourhood(x).contains(y)
    }

    /// Pairs `(x, y)` with `x != y` and `x` specializing to `y`.
    pub fn specialization(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.neighbourhood(x) {
                if y != x {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The subspace on the points of `keep`, renumbered in increasing order.
    pub fn subspace(&self, keep: BitSet) -> FiniteSpace {
        let kept: Vec<usize> = keep.intersection(self.points()).iter().collect();
        let payload = kept.iter().map(|&x| self.payload[x].clone()).collect();
        let project = |o: BitSet| -> BitSet { kept.iter().enumerate().filter(|(_, &x)| o.contains(x)).map(|(i, _)| i).collect() };
        let mut opens: Vec<BitSet> = self.opens.iter().map(|&o| project(o)).collect();
        opens.sort_unstable();
        opens.dedup();
        FiniteSpace { payload, opens }
    }
}

/// Image of a point set under a point map.
pub fn image(set: BitSet, map: &[usize]) -> BitSet {
    set.iter().map(|x| map[x]).collect()
}

/// Preimage of a point set under a point map.
pub fn preimage(set: BitSet, map: &[usize]) -> BitSet {
    (0..map.len()).filter(|&x| set.contains(map[x])).collect()
}

/// Whether `map: X -> Y` pulls opens back to opens.
pub fn is_continuous(x: &FiniteSpace, y: &FiniteSpace, map: &[usize]) -> bool {
    map.len() == x.len() && map.iter().all(|&p| p < y.len()) && y.opens().iter().all(|&o| x.is_open(preimage(o, map)))
}

/// Whether a bijection `map: X -> Y` carries the opens of `X` exactly onto
/// the opens of `Y`.
pub fn is_homeomorphism(x: &FiniteSpace, y: &FiniteSpace, map: &[usize]) -> bool {
    let bijective = map.len() == y.len() && image(x.points(), map) == y.points() && map.len() == x.len();
    bijective && x.opens().len() == y.opens().len() && x.opens().iter().all(|&o| y.is_open(image(o, map)))
}

/// The spectrum: prime thick tensor ideals in canonical order, with closed
/// sets generated by `V(a) = {P : a not in P}`, so opens are generated by
/// `{P : a in P}`.
pub fn spc(sys: &TensorSystem) -> Result<FiniteSpace> {
    spc_of(&IdealLattice::new(sys))
}

pub fn spc_of(lattice: &IdealLattice<'_>) -> Result<FiniteSpace> {
    let primes = lattice.primes();
    let payload = primes.iter().map(|&p| PointPayload::Prime(p)).collect();
    let subbasis: Vec<BitSet> = lattice
        .system()
        .objects()
        .map(|a| (0..primes.len()).filter(|&i| primes[i].contains(a)).collect())
        .collect();
    FiniteSpace::generated(payload, &subbasis)
}

/// `V(S)`: the primes meeting no element of `S`.
pub fn vanishing(lattice: &IdealLattice<'_>, s: BitSet) -> BitSet {
    let primes = lattice.primes();
    (0..primes.len()).filter(|&i| primes[i].members().intersection(s).is_empty()).collect()
}

/// `U_f = {p : p(f) = 1}` for a list of points.
pub fn open_of_element(pts: &[Point], f: usize) -> BitSet {
    (0..pts.len()).filter(|&i| pts[i].value(f)).collect()
}

/// The space of points of a frame with opens `U_f` for every element `f`.
pub fn space_of_frame(frame: &FiniteFrame) -> FiniteSpace {
    let pts = points(frame);
    let mut opens: Vec<BitSet> = frame.elements().map(|f| open_of_element(&pts, f)).collect();
    opens.sort_unstable();
    opens.dedup();
    FiniteSpace { payload: pts.into_iter().map(PointPayload::FramePoint).collect(), opens }
}

/// Same points; opens are the closed sets of `x`.
pub fn hochster_dual(x: &FiniteSpace) -> FiniteSpace {
    FiniteSpace { payload: x.payload.clone(), opens: x.closed_sets() }
}

/// Finite spaces are spectral exactly when they are T0.
pub fn is_spectral(x: &FiniteSpace) -> bool {
    let nbhds: Vec<BitSet> = (0..x.len()).map(|p| x.neighbourhood(p)).collect();
    let distinct: BTreeSet<BitSet> = nbhds.iter().copied().collect();
    distinct.len() == nbhds.len()
}

/// A homeomorphism `X -> Y` as a point table, if one exists.
pub fn homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> Result<Option<Vec<usize>>> {
    homeomorphic_preserving(x, y, &vec![BitSet::empty(); x.len()], &vec![BitSet::empty(); y.len()])
}

/// A homeomorphism `X -> Y` sending each point to a point of equal colour.
///
/// A finite topology is determined by its neighbourhood relation (`q` lies
/// in the smallest open around `p`), so the search extends partial
/// bijections that preserve that relation among assigned points, after
/// matching colours and per-point degree invariants.
pub fn homeomorphic_preserving(
    x: &FiniteSpace,
    y: &FiniteSpace,
    colour_x: &[BitSet],
    colour_y: &[BitSet],
) -> Result<Option<Vec<usize>>> {
    let n = x.len();
    for size in [n, y.len()] {
        if size > HOMEOMORPHISM_BOUND {
            return Err(Error::SizeBoundExceeded { what: "homeomorphism search", size, bound: HOMEOMORPHISM_BOUND });
        }
    }
    if n != y.len() || x.opens().len() != y.opens().len() || colour_x.len() != n || colour_y.len() != n {
        return Ok(None);
    }
    let nx: Vec<BitSet> = (0..n).map(|p| x.neighbourhood(p)).collect();
    let ny: Vec<BitSet> = (0..n).map(|p| y.neighbourhood(p)).collect();
    let signature = |nb: &[BitSet], colour: &[BitSet], p: usize| {
        let below = nb.iter().filter(|o| o.contains(p)).count();
        (nb[p].len(), below, colour[p])
    };
    let search = Search {
        nx: &nx,
        ny: &ny,
        sx: (0..n).map(|p| signature(&nx, colour_x, p)).collect(),
        sy: (0..n).map(|p| signature(&ny, colour_y, p)).collect(),
    };
    let mut map = vec![usize::MAX; n];
    let mut used = BitSet::empty();
    if search.extend(0, &mut map, &mut used) && is_homeomorphism(x, y, &map) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    nx: &'a [BitSet],
    ny: &'a [BitSet],
    sx: Vec<(usize, usize, BitSet)>,
    sy: Vec<(usize, usize, BitSet)>,
}

impl Search<'_> {
    fn extend(&self, p: usize, map: &mut [usize], used: &mut BitSet) -> bool {
        if p == map.len() {
            return true;
        }
        for q in 0..map.len() {
            if used.contains(q) || self.sx[p] != self.sy[q] {
                continue;
            }
            let consistent = (0..p).all(|r| {
                self.nx[p].contains(r) == self.ny[q].contains(map[r])
                    && self.nx[r].contains(p) == self.ny[map[r]].contains(q)
            });
            if !consistent {
                continue;
            }
            map[p] = q;
            used.insert(q);
            if self.extend(p + 1, map, used) {
                return true;
            }
            used.remove(q);
            map[p] = usize::MAX;
        }
        false
    }
}

/// For each point of the Zariski frame, the index of its prime element's
/// ideal among the primes, or `None` when that ideal is not prime.
fn corres_map(lattice: &IdealLattice<'_>, frame: &FiniteFrame, pts: &[Point]) -> Vec<Option<usize>> {
    let payload = frame.payload().expect("Zariski frames carry payloads");
    pts.iter()
        .map(|x| {
            let ix = payload[frame.join_all(x.prime_ideal.iter().copied())];
            lattice.primes().iter().position(|p| p.members() == ix)
        })
        .collect()
}

fn describe(sys: &TensorSystem, set: BitSet) -> alloc::string::String {
    format!("{{{}}}", sys.set_labels(set).join(","))
}

/// Points of the Zariski frame correspond to primes via `x -> I_x`, the
/// join of the elements sent to 0, and `U_{sqrt k}` corresponds to the
/// primes not containing `k`.
pub fn verify_corres(sys: &TensorSystem) -> Result<TheoremReport> {
    let lattice = IdealLattice::new(sys);
    let frame = zar_frame_of(&lattice)?;
    let payload = frame.payload().expect("Zariski frames carry payloads");
    let pts = points(&frame);
    let primes = lattice.primes();
    let mut report = TheoremReport::new("corres");
    report.check(pts.len() == primes.len(), || format!("{} points but {} primes", pts.len(), primes.len()));
    let map = corres_map(&lattice, &frame, &pts);
    for (i, image) in map.iter().enumerate() {
        let ix = payload[frame.join_all(pts[i].prime_ideal.iter().copied())];
        report.check(image.is_some(), || format!("I_x = {} is not prime", describe(sys, ix)));
        if image.is_some() {
            report.check(lattice.classify(Ideal::from_members(ix)).is_prime, || {
                format!("classification rejects I_x = {}", describe(sys, ix))
            });
        }
    }
    let hit: BTreeSet<usize> = map.iter().flatten().copied().collect();
    report.check(hit.len() == primes.len(), || "x -> I_x is not a bijection".into());
    // inverse: y_P(f) = 1 iff f is not inside P
    for p in primes {
        let element = frame.find_payload(p.members());
        report.check(element.is_some(), || format!("prime {} is not radical", describe(sys, p.members())));
        let Some(u) = element else { continue };
        let y: Vec<bool> = payload.iter().map(|&f| !f.is_subset(p.members())).collect();
        report.check(is_two_valued_frame_map(&frame, &y), || format!("y_P for {} is not a point", describe(sys, p.members())));
        report.check(point_at(&frame, u).assignment == y, || format!("y_P for {} does not round-trip", describe(sys, p.members())));
    }
    // part (2)
    for k in sys.objects() {
        let root = lattice.principal_radical(k).members();
        let Some(f) = frame.find_payload(root) else {
            report.fail(format!("principal radical of {} is not a frame element", sys.label(k)));
            continue;
        };
        let opens: BitSet = open_of_element(&pts, f).iter().filter_map(|i| map[i]).collect();
        let expected = vanishing(&lattice, BitSet::singleton(k.index()));
        report.check(opens == expected, || format!("U_sqrt({}) does not match the primes avoiding it", sys.label(k)));
    }
    Ok(report)
}

/// The Hochster dual of the space of points of the Zariski frame is the
/// spectrum, via the correspondence of [`verify_corres`]; Hochster duality
/// is an involution on each space involved.
pub fn verify_hdual(sys: &TensorSystem) -> Result<TheoremReport> {
    let lattice = IdealLattice::new(sys);
    let frame = zar_frame_of(&lattice)?;
    let pts = points(&frame);
    let mut report = TheoremReport::new("hdual");
    let x = space_of_frame(&frame);
    let dual = hochster_dual(&x);
    let spectrum = spc_of(&lattice)?;
    for space in [&x, &dual, &spectrum] {
        report.check(hochster_dual(&hochster_dual(space)) == *space, || "dual is not an involution".into());
    }
    let map: Option<Vec<usize>> = corres_map(&lattice, &frame, &pts).into_iter().collect();
    match map {
        Some(map) => report.check(is_homeomorphism(&dual, &spectrum, &map), || {
            "the corres bijection is not a homeomorphism onto the spectrum".into()
        }),
        None => report.fail("some point does not correspond to a prime".into()),
    }
    if dual.len() <= HOMEOMORPHISM_BOUND {
        report.check(homeomorphic(&dual, &spectrum)?.is_some(), || "search finds no homeomorphism".into());
    }
    Ok(report)
}

/// The two spaces of the topological Nullstellensatz, with the
/// correspondence `I -> {P : I not inside P}` between their points.
#[derive(Clone, Debug)]
pub struct NullstellensatzSpaces {
    /// Zariski frame elements, topology generated by `{I : k not in I}`.
    pub lower: FiniteSpace,
    /// Opens of the dual spectrum, topology generated by `{V : V not above U}`.
    pub opens: FiniteSpace,
    /// `correspondence[i]` is the point of `opens` matching frame element `i`.
    pub correspondence: Vec<usize>,
}

pub fn nullstellensatz_spaces(lattice: &IdealLattice<'_>) -> Result<NullstellensatzSpaces> {
    let sys = lattice.system();
    let frame = zar_frame_of(lattice)?;
    let payload = frame.payload().expect("Zariski frames carry payloads");
    let lower_subbasis: Vec<BitSet> = sys
        .objects()
        .map(|k| frame.elements().filter(|&i| !payload[i].contains(k.index())).collect())
        .collect();
    let lower = FiniteSpace::generated(frame.elements().map(PointPayload::FrameElement).collect(), &lower_subbasis)?;

    let dual = hochster_dual(&spc_of(lattice)?);
    let dual_opens = dual.opens().to_vec();
    let upper_subbasis: Vec<BitSet> = dual_opens
        .iter()
        .map(|&u| (0..dual_opens.len()).filter(|&v| !dual_opens[v].is_superset(u)).collect())
        .collect();
    let opens = FiniteSpace::generated(dual_opens.iter().map(|&v| PointPayload::Set(v)).collect(), &upper_subbasis)?;

    let correspondence = payload
        .iter()
        .map(|&i| {
            let v = vanishing_of_ideal(lattice, i);
            dual_opens.binary_search(&v).unwrap_or(usize::MAX)
        })
        .collect();
    Ok(NullstellensatzSpaces { lower, opens, correspondence })
}

/// `{P : I not inside P}`.
fn vanishing_of_ideal(lattice: &IdealLattice<'_>, ideal: BitSet) -> BitSet {
    let primes = lattice.primes();
    (0..primes.len()).filter(|&p| !ideal.is_subset(primes[p].members())).collect()
}

/// Both spaces of the topological Nullstellensatz are spectral and the
/// correspondence between them is a homeomorphism.
pub fn verify_noncomtn(sys: &TensorSystem) -> Result<TheoremReport> {
    let lattice = IdealLattice::new(sys);
    let spaces = nullstellensatz_spaces(&lattice)?;
    let mut report = TheoremReport::new("noncomTN");
    report.check(is_spectral(&spaces.lower), || "the frame-element space is not spectral".into());
    report.check(is_spectral(&spaces.opens), || "the dual-open space is not spectral".into());
    let map = &spaces.correspondence;
    let bijective = spaces.lower.len() == spaces.opens.len()
        && map.iter().all(|&v| v < spaces.opens.len())
        && map.iter().copied().collect::<BTreeSet<_>>().len() == map.len();
    report.check(bijective, || "radical ideals and dual opens do not correspond".into());
    if bijective {
        report.check(is_homeomorphism(&spaces.lower, &spaces.opens, map), || {
            "the correspondence is not a homeomorphism".into()
        });
    }
    if spaces.lower.len() <= HOMEOMORPHISM_BOUND {
        report.check(homeomorphic(&spaces.lower, &spaces.opens)?.is_some(), || "search finds no homeomorphism".into());
    }
    Ok(report)
}

/// The point of `space` whose payload is the prime `p`.
pub fn prime_point(space: &FiniteSpace, p: Ideal) -> Option<usize> {
    space.payload().iter().position(|q| *q == PointPayload::Prime(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::zar_frame;
    use crate::tensys::{builtin, degenerate, BUILTIN_NAMES};

    fn sierpinski() -> FiniteSpace {
        let opens = [BitSet::empty(), BitSet::from_bits(0b01), BitSet::from_bits(0b11)];
        FiniteSpace::new(vec![PointPayload::Plain; 2], &opens).unwrap()
    }

    fn discrete(n: usize) -> FiniteSpace {
        let opens: Vec<BitSet> = (0..1u64 << n).map(BitSet::from_bits).collect();
        FiniteSpace::new(vec![PointPayload::Plain; n], &opens).unwrap()
    }

    #[test]
    fn spectra_of_builtins() {
        let s = spc(&builtin("trivial").unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.opens(), &[BitSet::empty(), BitSet::full(1)]);
        let two = builtin("two_idem").unwrap();
        let s = spc(&two).unwrap();
        assert_eq!(s, FiniteSpace { payload: s.payload().to_vec(), opens: discrete(2).opens().to_vec() });
        assert!(is_spectral(&s));
        let empty = spc(&degenerate()).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.opens(), &[BitSet::empty()]);
    }

    #[test]
    fn vanishing_sets_on_two_idem() {
        let two = builtin("two_idem").unwrap();
        let lattice = IdealLattice::new(&two);
        let x = two.find("x").unwrap().index();
        let y = two.find("y").unwrap().index();
        // primes are {0,x} (point 0) and {0,y} (point 1)
        assert_eq!(vanishing(&lattice, BitSet::singleton(x)), BitSet::singleton(1));
        assert_eq!(vanishing(&lattice, BitSet::singleton(y)), BitSet::singleton(0));
        for s in 0..16u64 {
            let s = BitSet::from_bits(s);
            let each = s.iter().fold(BitSet::full(2), |acc, a| acc.intersection(vanishing(&lattice, BitSet::singleton(a))));
            assert_eq!(vanishing(&lattice, s), each);
        }
    }

    #[test]
    fn spaces_of_frames() {
        let s = space_of_frame(&FiniteFrame::chain(2).unwrap());
        assert_eq!((s.len(), s.opens().len()), (1, 2));
        let s = space_of_frame(&FiniteFrame::boolean(3).unwrap());
        assert_eq!((s.len(), s.opens().len()), (3, 8));
        let s = space_of_frame(&zar_frame(&builtin("two_idem").unwrap()).unwrap());
        assert_eq!((s.len(), s.opens().len()), (2, 4));
    }

    #[test]
    fn hochster_duals() {
        let dual = hochster_dual(&sierpinski());
        assert_eq!(dual.opens(), &[BitSet::empty(), BitSet::from_bits(0b10), BitSet::from_bits(0b11)]);
        assert_eq!(hochster_dual(&discrete(2)).opens(), discrete(2).opens());
        let s = spc(&builtin("two_idem").unwrap()).unwrap();
        assert_eq!(hochster_dual(&hochster_dual(&s)), s);
    }

    #[test]
    fn spectrality_is_t0() {
        let indiscrete = FiniteSpace::new(vec![PointPayload::Plain; 2], &[BitSet::empty(), BitSet::full(2)]).unwrap();
        assert!(!is_spectral(&indiscrete));
        assert!(is_spectral(&sierpinski()));
    }

    #[test]
    fn homeomorphism_search() {
        let s = sierpinski();
        assert_eq!(homeomorphic(&s, &s).unwrap(), Some(vec![0, 1]));
        assert_eq!(homeomorphic(&discrete(2), &s).unwrap(), None);
        assert_eq!(homeomorphic(&s, &hochster_dual(&s)).unwrap(), Some(vec![1, 0]));
        let two = builtin("two_idem").unwrap();
        let x = hochster_dual(&space_of_frame(&zar_frame(&two).unwrap()));
        assert_eq!(homeomorphic(&x, &spc(&two).unwrap()).unwrap(), Some(vec![0, 1]));
        let big = FiniteSpace::generated(vec![PointPayload::Plain; 13], &[]).unwrap();
        assert!(matches!(homeomorphic(&big, &big), Err(Error::SizeBoundExceeded { .. })));
    }

    #[test]
    fn generated_topologies_are_topologies() {
        let sub = [BitSet::from_bits(0b0011), BitSet::from_bits(0b0110), BitSet::from_bits(0b1000)];
        let s = FiniteSpace::generated(vec![PointPayload::Plain; 4], &sub).unwrap();
        assert!(FiniteSpace::new(s.payload().to_vec(), s.opens()).is_ok());
        assert!(s.is_open(BitSet::from_bits(0b0010)));
    }

    #[test]
    fn theorem_checks_on_builtins() {
        for name in BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            for report in [verify_corres(&sys).unwrap(), verify_hdual(&sys).unwrap(), verify_noncomtn(&sys).unwrap()] {
                assert!(report.passed, "{name} {}: {:?}", report.name, report.failures);
            }
        }
        let sizes = |name| {
            let lattice_sys = builtin(name).unwrap();
            let lattice = IdealLattice::new(&lattice_sys);
            let s = nullstellensatz_spaces(&lattice).unwrap();
            (s.lower.len(), s.opens.len())
        };
        assert_eq!(sizes("trivial"), (2, 2));
        assert_eq!(sizes("two_idem"), (4, 4));
    }

    #[test]
    fn subspaces() {
        let s = discrete(3).subspace(BitSet::from_bits(0b101));
        assert_eq!(s.len(), 2);
        assert_eq!(s.opens().len(), 4);
    }
}
