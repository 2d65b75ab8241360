//! Supports with values in frames and in spaces, the universal support
//! `k -> sqrt<k>`, the correspondence between the two kinds, and the
//! mediating maps of the universal properties.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::frames::{frame_isomorphism, points, principal_witnesses, zar_frame_of, FiniteFrame};
use crate::ideals::{Ideal, IdealLattice};
use crate::report::ValidationReport;
use crate::spectra::{
    homeomorphic_preserving, hochster_dual, is_continuous, is_spectral, open_of_element, preimage, space_of_frame,
    spc_of, vanishing, FiniteSpace,
};
use crate::tensys::{ObjectId, TensorSystem};

/// Zariski frames up to this size get an exhaustive uniqueness search.
pub const EXHAUSTIVE_UNIQUENESS_BOUND: usize = 8;

/// Axioms checked by [`check_frame_support`] with their witness arity.
pub const FRAME_SUPPORT_AXIOMS: &[(&str, usize)] = &[
    ("support-range", 1),
    // witness 0 for d(0) = bottom, the unit for d(unit) = top
    ("support-zero-unit", 1),
    ("support-shift", 1),
    ("support-sum", 2),
    // d(k (x) t) = d(k) meet d(t) = d(t (x) k)
    ("support-tensor", 2),
    // (k, t, r) a triangle: d(t) <= d(k) join d(r)
    ("support-triangle", 3),
];

/// Axioms checked by [`check_top_support`] with their witness arity.
pub const TOP_SUPPORT_AXIOMS: &[(&str, usize)] = &[
    ("sigma-range", 1),
    ("sigma-closed", 1),
    ("sigma-zero-unit", 1),
    ("sigma-sum", 2),
    ("sigma-shift", 1),
    // (a, b, c) a triangle: sigma(a) inside sigma(b) union sigma(c)
    ("sigma-triangle", 3),
    // union over C of sigma(a (x) C (x) b) = sigma(a) meet sigma(b)
    ("sigma-union-middle", 2),
    // union over C of sigma(a (x) b (x) C) = sigma(a) meet sigma(b)
    ("sigma-union-right", 2),
    ("tensor-product-property", 2),
];

/// A frame `F` with `d : objects -> F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSupport {
    pub frame: FiniteFrame,
    pub d: Vec<usize>,
}

/// A space `X` with `sigma : objects -> subsets of X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSupport {
    pub space: FiniteSpace,
    pub sigma: Vec<BitSet>,
}

/// A table between frames, `table[e]` being the image of `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMap {
    pub source: FiniteFrame,
    pub target: FiniteFrame,
    pub table: Vec<usize>,
}

/// Checks that a table preserves bottom, top, binary meets and binary joins.
pub fn check_frame_map(source: &FiniteFrame, target: &FiniteFrame, table: &[usize]) -> ValidationReport<usize> {
    let mut report = ValidationReport::new();
    if table.len() != source.len() || table.iter().any(|&v| v >= target.len()) {
        report.push("map-range", Vec::new());
        return report;
    }
    report.require(table[source.bottom()] == target.bottom(), "map-bottom", Vec::new);
    report.require(table[source.top()] == target.top(), "map-top", Vec::new);
    for a in source.elements() {
        for b in source.elements() {
            let meet = table[source.meet(a, b)] == target.meet(table[a], table[b]);
            report.require(meet, "map-meet", || vec![a, b]);
            let join = table[source.join(a, b)] == target.join(table[a], table[b]);
            report.require(join, "map-join", || vec![a, b]);
        }
    }
    report
}

/// The universal support: the Zariski frame with `d(k) = sqrt<k>`.
pub fn universal_support(sys: &TensorSystem) -> Result<FrameSupport> {
    universal_support_of(&IdealLattice::new(sys))
}

pub fn universal_support_of(lattice: &IdealLattice<'_>) -> Result<FrameSupport> {
    let frame = zar_frame_of(lattice)?;
    let d = lattice
        .system()
        .objects()
        .map(|k| frame.find_payload(lattice.principal_radical(k).members()).expect("principal radicals are radical"))
        .collect();
    Ok(FrameSupport { frame, d })
}

/// Checks every support axiom on every object, pair and triangle.
pub fn check_frame_support(sys: &TensorSystem, fs: &FrameSupport) -> ValidationReport<ObjectId> {
    let mut report = ValidationReport::new();
    let f = &fs.frame;
    if fs.d.len() != sys.len() || fs.d.iter().any(|&v| v >= f.len()) {
        let bad = sys.objects().filter(|k| fs.d.get(k.index()).is_none_or(|&v| v >= f.len()));
        for k in bad {
            report.push("support-range", vec![k]);
        }
        return report;
    }
    let d = |k: ObjectId| fs.d[k.index()];
    report.require(d(sys.zero()) == f.bottom(), "support-zero-unit", || vec![sys.zero()]);
    report.require(d(sys.unit()) == f.top(), "support-zero-unit", || vec![sys.unit()]);
    for k in sys.objects() {
        report.require(d(sys.shift(k)) == d(k), "support-shift", || vec![k]);
        for t in sys.objects() {
            report.require(d(sys.sum(k, t)) == f.join(d(k), d(t)), "support-sum", || vec![k, t]);
            let meet = f.meet(d(k), d(t));
            let tensor = d(sys.tensor(k, t)) == meet && d(sys.tensor(t, k)) == meet;
            report.require(tensor, "support-tensor", || vec![k, t]);
        }
    }
    for &(k, t, r) in sys.triangles() {
        report.require(f.leq(d(t), f.join(d(k), d(r))), "support-triangle", || vec![k, t, r]);
    }
    report
}

/// Whether a frame support also satisfies the triangle axiom in the
/// orientation used for space-valued supports, `d(k) <= d(t) join d(r)`.
pub fn frame_support_first_vertex_form(sys: &TensorSystem, fs: &FrameSupport) -> bool {
    let f = &fs.frame;
    let d = |k: ObjectId| fs.d[k.index()];
    sys.triangles().iter().all(|&(k, t, r)| f.leq(d(k), f.join(d(t), d(r))))
}

/// Whether objects with equal principal radicals have equal support values.
pub fn is_well_defined(lattice: &IdealLattice<'_>, fs: &FrameSupport) -> bool {
    let sys = lattice.system();
    let roots: Vec<Ideal> = sys.objects().map(|k| lattice.principal_radical(k)).collect();
    sys.objects().all(|k| sys.objects().all(|t| roots[k.index()] != roots[t.index()] || fs.d[k.index()] == fs.d[t.index()]))
}

/// How uniqueness of a mediating map was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    /// Every candidate table was searched; `solutions` compatible frame maps exist.
    Exhaustive { solutions: usize },
    /// Every Zariski element is a principal radical, whose image is forced
    /// by compatibility. `holds` records whether each witness checked out.
    PrincipalDecomposition { holds: bool },
}

impl Uniqueness {
    pub fn is_unique(self) -> bool {
        matches!(self, Uniqueness::Exhaustive { solutions: 1 } | Uniqueness::PrincipalDecomposition { holds: true })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mediation {
    pub map: FrameMap,
    pub uniqueness: Uniqueness,
}

/// The frame map `u : Zar -> F` with `u(sqrt k) = d(k)`.
pub fn mediating_map(sys: &TensorSystem, fs: &FrameSupport) -> Result<Mediation> {
    mediating_map_of(&IdealLattice::new(sys), fs)
}

pub fn mediating_map_of(lattice: &IdealLattice<'_>, fs: &FrameSupport) -> Result<Mediation> {
    let sys = lattice.system();
    let universal = universal_support_of(lattice)?;
    let zar = universal.frame;
    if fs.d.len() != sys.len() || fs.d.iter().any(|&v| v >= fs.frame.len()) {
        return Err(Error::InvalidSupport("support values out of range"));
    }
    let witnesses = principal_witnesses(sys, &zar)?;
    let table: Vec<usize> = witnesses.iter().map(|w| fs.d[w.index()]).collect();
    for k in sys.objects() {
        let e = universal.d[k.index()];
        if table[e] != fs.d[k.index()] {
            return Err(Error::WellDefinednessFailure { first: k.index(), second: witnesses[e].index() });
        }
    }
    if let Some(v) = check_frame_map(&zar, &fs.frame, &table).violations.first() {
        return Err(Error::NotFrameMap(v.axiom));
    }
    let uniqueness = if zar.len() <= EXHAUSTIVE_UNIQUENESS_BOUND {
        Uniqueness::Exhaustive { solutions: count_compatible_maps(&zar, &fs.frame, &universal.d, &fs.d) }
    } else {
        let holds = witnesses.iter().enumerate().all(|(e, &w)| universal.d[w.index()] == e);
        Uniqueness::PrincipalDecomposition { holds }
    };
    Ok(Mediation { map: FrameMap { source: zar, target: fs.frame.clone(), table }, uniqueness })
}

/// Counts tables `u : source -> target` that are frame maps with
/// `u(s(k)) = d(k)` for every object `k`, by backtracking over all values.
fn count_compatible_maps(source: &FiniteFrame, target: &FiniteFrame, s: &[usize], d: &[usize]) -> usize {
    let n = source.len();
    struct Ctx<'a> {
        source: &'a FiniteFrame,
        target: &'a FiniteFrame,
        forced: Vec<Vec<usize>>,
    }
    let mut forced = vec![Vec::new(); n];
    for (k, &e) in s.iter().enumerate() {
        forced[e].push(d[k]);
    }
    let ctx = Ctx { source, target, forced };
    fn go(ctx: &Ctx<'_>, e: usize, table: &mut Vec<usize>) -> usize {
        let (src, tgt) = (ctx.source, ctx.target);
        if e == src.len() {
            return 1;
        }
        let mut count = 0;
        for v in tgt.elements() {
            if ctx.forced[e].iter().any(|&f| f != v) {
                continue;
            }
            if (e == src.bottom() && v != tgt.bottom()) || (e == src.top() && v != tgt.top()) {
                continue;
            }
            table.push(v);
            let consistent = (0..=e).all(|a| {
                (0..=e).all(|b| {
                    let (m, j) = (src.meet(a, b), src.join(a, b));
                    (m > e || table[m] == tgt.meet(table[a], table[b]))
                        && (j > e || table[j] == tgt.join(table[a], table[b]))
                })
            });
            if consistent {
                count += go(ctx, e + 1, table);
            }
            table.pop();
        }
        count
    }
    go(&ctx, 0, &mut Vec::with_capacity(n))
}

/// The support `k -> x(sqrt k)` into the two-element chain, where `x` is the
/// point of the Zariski frame with the given prime element.
pub fn point_support(lattice: &IdealLattice<'_>, prime_element: usize) -> Result<FrameSupport> {
    let universal = universal_support_of(lattice)?;
    let sets = [BitSet::empty(), BitSet::singleton(0)];
    let frame = FiniteFrame::from_sets(&sets)?;
    let d = universal.d.iter().map(|&e| usize::from(!universal.frame.leq(e, prime_element))).collect();
    Ok(FrameSupport { frame, d })
}

/// Supports obtained by composing the universal support with random frame
/// maps out of the Zariski frame: a list of points `p_1 .. p_m` gives
/// `f -> {i : p_i(f) = 1}` into the subsets of `m`, landing either in the
/// whole Boolean frame or in the image, followed by a random relabeling.
pub fn frame_support_corpus(sys: &TensorSystem, seed: u64, count: usize) -> Result<Vec<FrameSupport>> {
    let lattice = IdealLattice::new(sys);
    let universal = universal_support_of(&lattice)?;
    let zar = &universal.frame;
    let pts = points(zar);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let m = if pts.is_empty() { 0 } else { rng.gen_range(0..=4) };
        let chosen: Vec<usize> = (0..m).map(|_| rng.gen_range(0..pts.len())).collect();
        let push = |e: usize| -> BitSet { (0..m).filter(|&j| pts[chosen[j]].value(e)).collect() };
        let images: Vec<BitSet> = zar.elements().map(push).collect();
        let frame = if i % 2 == 0 { FiniteFrame::boolean(m)? } else { FiniteFrame::from_sets(&images)? };
        let mut perm: Vec<usize> = frame.elements().collect();
        perm.shuffle(&mut rng);
        let frame = frame.relabel(&perm)?;
        let d = universal
            .d
            .iter()
            .map(|&e| frame.find_payload(images[e]).expect("images lie in the target"))
            .collect();
        out.push(FrameSupport { frame, d });
    }
    Ok(out)
}

/// Checks every axiom of a space-valued support.
pub fn check_top_support(sys: &TensorSystem, ts: &TopSupport) -> ValidationReport<ObjectId> {
    let mut report = ValidationReport::new();
    let x = &ts.space;
    if ts.sigma.len() != sys.len() {
        report.push("sigma-range", Vec::new());
        return report;
    }
    let s = |k: ObjectId| ts.sigma[k.index()];
    for k in sys.objects() {
        report.require(s(k).is_subset(x.points()), "sigma-range", || vec![k]);
        report.require(x.is_closed(s(k)), "sigma-closed", || vec![k]);
        report.require(s(sys.shift(k)) == s(k), "sigma-shift", || vec![k]);
    }
    report.require(s(sys.zero()).is_empty(), "sigma-zero-unit", || vec![sys.zero()]);
    report.require(s(sys.unit()) == x.points(), "sigma-zero-unit", || vec![sys.unit()]);
    for a in sys.objects() {
        for b in sys.objects() {
            let meet = s(a).intersection(s(b));
            report.require(s(sys.sum(a, b)) == s(a).union(s(b)), "sigma-sum", || vec![a, b]);
            let middle = sys.objects().fold(BitSet::empty(), |acc, c| acc.union(s(sys.tensor(sys.tensor(a, c), b))));
            report.require(middle == meet, "sigma-union-middle", || vec![a, b]);
            let right = sys.objects().fold(BitSet::empty(), |acc, c| acc.union(s(sys.tensor(sys.tensor(a, b), c))));
            report.require(right == meet, "sigma-union-right", || vec![a, b]);
            report.require(s(sys.tensor(a, b)) == meet, "tensor-product-property", || vec![a, b]);
        }
    }
    for &(a, b, c) in sys.triangles() {
        report.require(s(a).is_subset(s(b).union(s(c))), "sigma-triangle", || vec![a, b, c]);
    }
    report
}

/// Whether a space-valued support also satisfies the triangle axiom in the
/// orientation used for frame supports, `sigma(b)` inside `sigma(a) union sigma(c)`.
pub fn top_support_middle_vertex_form(sys: &TensorSystem, ts: &TopSupport) -> bool {
    let s = |k: ObjectId| ts.sigma[k.index()];
    sys.triangles().iter().all(|&(a, b, c)| s(b).is_subset(s(a).union(s(c))))
}

/// The spectrum with `sigma(a) = V(a)`.
pub fn nvy_support(sys: &TensorSystem) -> Result<TopSupport> {
    nvy_support_of(&IdealLattice::new(sys))
}

pub fn nvy_support_of(lattice: &IdealLattice<'_>) -> Result<TopSupport> {
    let space = spc_of(lattice)?;
    let sigma = lattice.system().objects().map(|a| vanishing(lattice, BitSet::singleton(a.index()))).collect();
    Ok(TopSupport { space, sigma })
}

/// The restriction of a support to the subspace on `keep`.
pub fn restrict(ts: &TopSupport, keep: BitSet) -> TopSupport {
    let kept: Vec<usize> = keep.intersection(ts.space.points()).iter().collect();
    let project = |set: BitSet| -> BitSet { (0..kept.len()).filter(|&i| set.contains(kept[i])).collect() };
    TopSupport { space: ts.space.subspace(keep), sigma: ts.sigma.iter().map(|&s| project(s)).collect() }
}

/// The space-valued support of a frame support: the Hochster dual of its
/// space of points, with `sigma(a) = {p : p(d(a)) = 1}`.
pub fn xi(fs: &FrameSupport) -> TopSupport {
    let pts = points(&fs.frame);
    let space = hochster_dual(&space_of_frame(&fs.frame));
    let sigma = fs.d.iter().map(|&e| open_of_element(&pts, e)).collect();
    TopSupport { space, sigma }
}

/// The frame support of a space-valued support: the frame of closed sets
/// (the opens of the Hochster dual) with `d(a) = sigma(a)`.
pub fn gamma(sys: &TensorSystem, ts: &TopSupport) -> Result<FrameSupport> {
    if !is_spectral(&ts.space) {
        return Err(Error::NotSpectral);
    }
    if ts.sigma.len() != sys.len() {
        return Err(Error::InvalidSupport("support has the wrong number of values"));
    }
    let s = |k: ObjectId| ts.sigma[k.index()];
    for a in sys.objects() {
        for b in sys.objects() {
            if s(sys.tensor(a, b)) != s(a).intersection(s(b)) {
                return Err(Error::TensorProductPropertyViolated { left: a.index(), right: b.index() });
            }
        }
    }
    let frame = FiniteFrame::from_sets(hochster_dual(&ts.space).opens())?;
    let d = ts
        .sigma
        .iter()
        .map(|&set| frame.find_payload(set).ok_or(Error::InvalidSupport("support value is not closed")))
        .collect::<Result<Vec<_>>>()?;
    Ok(FrameSupport { frame, d })
}

/// The comparison map into the spectrum, `x -> {A : x not in sigma(A)}`,
/// with the results of its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalMap {
    /// `images[x]` is the index of `f(x)` among the primes.
    pub images: Vec<usize>,
    pub continuous: bool,
    /// Objects `A` with `sigma(A)` different from the preimage of `V(A)`.
    pub pullback_failures: Vec<ObjectId>,
}

impl FinalMap {
    pub fn verified(&self) -> bool {
        self.continuous && self.pullback_failures.is_empty()
    }
}

pub fn final_map(sys: &TensorSystem, ts: &TopSupport) -> Result<FinalMap> {
    final_map_of(&IdealLattice::new(sys), ts)
}

pub fn final_map_of(lattice: &IdealLattice<'_>, ts: &TopSupport) -> Result<FinalMap> {
    let sys = lattice.system();
    if ts.sigma.len() != sys.len() {
        return Err(Error::InvalidSupport("support has the wrong number of values"));
    }
    let primes = lattice.primes();
    let images = (0..ts.space.len())
        .map(|x| {
            let set: BitSet = sys.objects().filter(|a| !ts.sigma[a.index()].contains(x)).map(ObjectId::index).collect();
            primes.iter().position(|p| p.members() == set).ok_or(Error::ImageNotPrime { point: x })
        })
        .collect::<Result<Vec<usize>>>()?;
    let spectrum = spc_of(lattice)?;
    let continuous = is_continuous(&ts.space, &spectrum, &images);
    let pullback_failures = sys
        .objects()
        .filter(|a| ts.sigma[a.index()] != preimage(vanishing(lattice, BitSet::singleton(a.index())), &images))
        .collect();
    Ok(FinalMap { images, continuous, pullback_failures })
}

/// Space-valued supports: the spectrum itself, restrictions of it to random
/// subsets of primes, and images under [`xi`] of [`frame_support_corpus`].
pub fn top_support_corpus(sys: &TensorSystem, seed: u64, count: usize) -> Result<Vec<TopSupport>> {
    let lattice = IdealLattice::new(sys);
    let nvy = nvy_support_of(&lattice)?;
    let frames = frame_support_corpus(sys, seed ^ 0x5eed, count)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = nvy.space.len();
    let mut out = vec![nvy.clone()];
    for (i, fs) in frames.iter().enumerate().take(count.saturating_sub(1)) {
        if i % 2 == 0 {
            let keep: BitSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            out.push(restrict(&nvy, keep));
        } else {
            out.push(xi(fs));
        }
    }
    Ok(out)
}

/// A frame isomorphism carrying `a.d` to `b.d`, if any.
pub fn frame_support_isomorphism(a: &FrameSupport, b: &FrameSupport) -> Option<Vec<usize>> {
    if a.d.len() != b.d.len() {
        return None;
    }
    let forced: Vec<(usize, usize)> = a.d.iter().copied().zip(b.d.iter().copied()).collect();
    frame_isomorphism(&a.frame, &b.frame, &forced)
}

/// A homeomorphism carrying `a.sigma` to `b.sigma`, if any.
pub fn top_support_isomorphism(a: &TopSupport, b: &TopSupport) -> Result<Option<Vec<usize>>> {
    if a.sigma.len() != b.sigma.len() {
        return Ok(None);
    }
    let colours = |ts: &TopSupport| -> Vec<BitSet> {
        (0..ts.space.len()).map(|p| (0..ts.sigma.len()).filter(|&k| ts.sigma[k].contains(p)).collect()).collect()
    };
    homeomorphic_preserving(&a.space, &b.space, &colours(a), &colours(b))
}

/// Whether `gamma(xi(fs))` is isomorphic to `fs`.
pub fn gamma_xi_round_trip(sys: &TensorSystem, fs: &FrameSupport) -> Result<bool> {
    Ok(frame_support_isomorphism(&gamma(sys, &xi(fs))?, fs).is_some())
}

/// Whether `xi(gamma(ts))` is isomorphic to `ts`.
pub fn xi_gamma_round_trip(sys: &TensorSystem, ts: &TopSupport) -> Result<bool> {
    Ok(top_support_isomorphism(&xi(&gamma(sys, ts)?), ts)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::check_frame_laws;
    use crate::tensys::{builtin, BUILTIN_NAMES};

    fn obj(sys: &TensorSystem, label: &str) -> ObjectId {
        sys.find(label).unwrap()
    }

    #[test]
    fn universal_support_examples() {
        let trivial = builtin("trivial").unwrap();
        let u = universal_support(&trivial).unwrap();
        assert_eq!(u.d, vec![u.frame.bottom(), u.frame.top()]);
        let two = builtin("two_idem").unwrap();
        let u = universal_support(&two).unwrap();
        let (x, y) = (obj(&two, "x"), obj(&two, "y"));
        assert_eq!(u.frame.payload().unwrap()[u.d[x.index()]], BitSet::from_bits(0b011));
        assert_eq!(u.d[two.tensor(x, y).index()], u.frame.meet(u.d[x.index()], u.d[y.index()]));
        for name in BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            assert!(check_frame_support(&sys, &universal_support(&sys).unwrap()).ok(), "{name}");
        }
    }

    #[test]
    fn constant_top_is_not_a_support() {
        let trivial = builtin("trivial").unwrap();
        let frame = FiniteFrame::chain(2).unwrap();
        let fs = FrameSupport { d: vec![frame.top(); 2], frame };
        assert!(check_frame_support(&trivial, &fs).contains("support-zero-unit", &[trivial.zero()]));
    }

    #[test]
    fn mediating_maps() {
        let two = builtin("two_idem").unwrap();
        let lattice = IdealLattice::new(&two);
        let u = universal_support(&two).unwrap();
        let m = mediating_map(&two, &u).unwrap();
        assert_eq!(m.map.table, u.frame.elements().collect::<Vec<_>>());
        assert_eq!(m.uniqueness, Uniqueness::Exhaustive { solutions: 1 });

        let px = u.frame.find_payload(BitSet::from_bits(0b011)).unwrap();
        let ps = point_support(&lattice, px).unwrap();
        assert!(check_frame_support(&two, &ps).ok());
        let m = mediating_map(&two, &ps).unwrap();
        let assignment: Vec<usize> = u.frame.elements().map(|e| usize::from(!u.frame.leq(e, px))).collect();
        assert_eq!(m.map.table, assignment);

        let perm = [2, 0, 3, 1];
        let relabeled = FrameSupport { frame: u.frame.relabel(&perm).unwrap(), d: u.d.iter().map(|&e| perm[e]).collect() };
        assert_eq!(mediating_map(&two, &relabeled).unwrap().map.table, perm.to_vec());
    }

    #[test]
    fn broken_supports_are_rejected() {
        // x' and x share the radical {0, x', x} in chain3
        let chain = builtin("chain3").unwrap();
        let u = universal_support(&chain).unwrap();
        let mut d = u.d.clone();
        d[obj(&chain, "x'").index()] = u.frame.top();
        let broken = FrameSupport { frame: u.frame.clone(), d };
        assert!(!check_frame_support(&chain, &broken).ok());
        assert!(!is_well_defined(&IdealLattice::new(&chain), &broken));
        let (xp, x) = (obj(&chain, "x'").index(), obj(&chain, "x").index());
        assert_eq!(mediating_map(&chain, &broken), Err(Error::WellDefinednessFailure { first: xp, second: x }));

        let two = builtin("two_idem").unwrap();
        let u = universal_support(&two).unwrap();
        let mut d = u.d.clone();
        d[obj(&two, "x").index()] = u.frame.top();
        let broken = FrameSupport { frame: u.frame.clone(), d };
        assert!(matches!(mediating_map(&two, &broken), Err(Error::NotFrameMap(_))));
    }

    #[test]
    fn corpus_supports_are_valid_and_initial() {
        for name in BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            let lattice = IdealLattice::new(&sys);
            for fs in frame_support_corpus(&sys, 11, 20).unwrap() {
                assert!(check_frame_laws(&fs.frame).ok());
                assert!(check_frame_support(&sys, &fs).ok(), "{name}");
                assert!(is_well_defined(&lattice, &fs));
                let m = mediating_map_of(&lattice, &fs).unwrap();
                assert!(m.uniqueness.is_unique(), "{name}: {:?}", m.uniqueness);
                assert!(gamma_xi_round_trip(&sys, &fs).unwrap());
            }
        }
    }

    #[test]
    fn nvy_support_examples() {
        let trivial = builtin("trivial").unwrap();
        let v = nvy_support(&trivial).unwrap();
        assert_eq!(v.sigma, vec![BitSet::empty(), BitSet::singleton(0)]);
        let two = builtin("two_idem").unwrap();
        let v = nvy_support(&two).unwrap();
        let (x, y) = (obj(&two, "x"), obj(&two, "y"));
        assert_eq!(v.sigma[x.index()], BitSet::singleton(1));
        assert!(v.sigma[x.index()].intersection(v.sigma[y.index()]).is_empty());
        assert!(check_top_support(&two, &v).ok());
        let middle = two.objects().fold(BitSet::empty(), |acc, c| acc.union(v.sigma[two.tensor(two.tensor(x, c), y).index()]));
        assert!(middle.is_empty());
    }

    #[test]
    fn final_maps() {
        let two = builtin("two_idem").unwrap();
        let v = nvy_support(&two).unwrap();
        let f = final_map(&two, &v).unwrap();
        assert_eq!(f.images, vec![0, 1]);
        assert!(f.verified());
        let through_xi = final_map(&two, &xi(&universal_support(&two).unwrap())).unwrap();
        assert_eq!(through_xi.images, vec![0, 1]);
        assert!(through_xi.verified());
        let one = restrict(&v, BitSet::singleton(1));
        let f = final_map(&two, &one).unwrap();
        assert_eq!(f.images, vec![1]);
        assert!(f.verified());
    }

    #[test]
    fn gamma_examples() {
        let two = builtin("two_idem").unwrap();
        let g = gamma(&two, &nvy_support(&two).unwrap()).unwrap();
        assert!(frame_support_isomorphism(&g, &universal_support(&two).unwrap()).is_some());
        let mut bad = nvy_support(&two).unwrap();
        bad.sigma[0] = BitSet::singleton(0);
        match gamma(&two, &bad) {
            Ok(fs) => assert!(!check_frame_support(&two, &fs).ok()),
            Err(e) => assert!(matches!(e, Error::TensorProductPropertyViolated { .. })),
        }
    }

    #[test]
    fn degenerate_frame_support_gives_empty_space() {
        let trivial = builtin("trivial").unwrap();
        let frame = FiniteFrame::chain(1).unwrap();
        let fs = FrameSupport { frame, d: vec![0, 0] };
        assert!(check_frame_support(&trivial, &fs).ok());
        let ts = xi(&fs);
        assert!(ts.space.is_empty());
        assert!(ts.sigma.iter().all(|s| s.is_empty()));
    }

    #[test]
    fn top_corpus_is_final_and_round_trips() {
        for name in BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            for ts in top_support_corpus(&sys, 5, 20).unwrap() {
                assert!(check_top_support(&sys, &ts).ok(), "{name}");
                assert!(final_map(&sys, &ts).unwrap().verified());
                assert!(xi_gamma_round_trip(&sys, &ts).unwrap(), "{name}");
                assert!(top_support_middle_vertex_form(&sys, &ts));
            }
        }
    }
}
