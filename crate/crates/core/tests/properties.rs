use proptest::prelude::*;

use ttgeom_core::bits::BitSet;
use ttgeom_core::ideals::{close, ideal_product, is_thick_ideal, Ideal, IdealLattice, RadicalMethod};
use ttgeom_core::spectra::{hochster_dual, homeomorphic, is_homeomorphism, FiniteSpace, PointPayload};
use ttgeom_core::tensys::{axiom_holds, random_system, validate, ObjectId, TensorSystem};

fn system() -> impl Strategy<Value = TensorSystem> {
    (any::<u64>(), 2usize..=8).prop_map(|(seed, max)| random_system(seed, max).unwrap())
}

fn subset(sys: &TensorSystem, bits: u64) -> BitSet {
    BitSet::from_bits(bits).intersection(sys.all())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent_sound_and_least(sys in system(), bits in any::<u64>()) {
        let s = subset(&sys, bits);
        let c = close(&sys, s);
        prop_assert!(s.is_subset(c.members()));
        prop_assert!(is_thick_ideal(&sys, c.members()));
        prop_assert_eq!(close(&sys, c.members()), c);
        for &i in IdealLattice::new(&sys).ideals() {
            if s.is_subset(i.members()) {
                prop_assert!(c.is_subset(i));
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(sys in system()) {
        let lattice = IdealLattice::new(&sys);
        let brute: Vec<Ideal> = (0..1u64 << sys.len())
            .map(BitSet::from_bits)
            .filter(|&s| is_thick_ideal(&sys, s))
            .map(Ideal::from_members)
            .collect();
        prop_assert_eq!(lattice.ideals(), &brute[..]);
    }

    #[test]
    fn membership_of_sums(sys in system(), a in 0usize..8, b in 0usize..8) {
        let (a, b) = (ObjectId::new(a % sys.len()), ObjectId::new(b % sys.len()));
        for &i in IdealLattice::new(&sys).ideals() {
            prop_assert_eq!(i.contains(sys.sum(a, b)), i.contains(a) && i.contains(b));
        }
    }

    #[test]
    fn radical_is_a_closure_operator(sys in system()) {
        let lattice = IdealLattice::new(&sys);
        for method in [RadicalMethod::ViaPrimes, RadicalMethod::ViaRoots] {
            for &i in lattice.ideals() {
                let r = lattice.radical(i, method);
                prop_assert!(i.is_subset(r));
                prop_assert_eq!(lattice.radical(r, method), r);
                for &j in lattice.ideals() {
                    if i.is_subset(j) {
                        prop_assert!(r.is_subset(lattice.radical(j, method)));
                    }
                }
            }
        }
    }

    #[test]
    fn radical_methods_agree(sys in system()) {
        let lattice = IdealLattice::new(&sys);
        prop_assume!(lattice.check_assumption().holds);
        for &i in lattice.ideals() {
            prop_assert_eq!(lattice.radical(i, RadicalMethod::ViaPrimes), lattice.radical(i, RadicalMethod::ViaRoots));
        }
    }

    #[test]
    fn product_lemma(sys in system(), picks in proptest::collection::vec((any::<u64>(), any::<u64>(), any::<u64>()), 100)) {
        let lattice = IdealLattice::new(&sys);
        let ideals = lattice.ideals();
        for (pi, bits, pj) in picks {
            let i = ideals[pi as usize % ideals.len()];
            let s = subset(&sys, bits);
            let products: BitSet = i.objects().flat_map(|t| s.iter().map(move |x| (t, x)))
                .map(|(t, x)| sys.tensor(t, ObjectId::new(x)).index())
                .collect();
            // an arbitrary ideal, and the least ideal meeting the hypothesis
            for j in [ideals[pj as usize % ideals.len()], close(&sys, products)] {
                if products.is_subset(j.members()) {
                    prop_assert!(ideal_product(&sys, i, close(&sys, s)).is_subset(j));
                }
            }
        }
    }

    #[test]
    fn complete_primes_are_prime(sys in system()) {
        let lattice = IdealLattice::new(&sys);
        for &i in lattice.ideals() {
            let c = lattice.classify(i);
            prop_assert!(!c.is_completely_prime || c.is_prime);
            if let Some((a, b)) = c.complete_witness {
                prop_assert!(!i.contains(a) && !i.contains(b) && i.contains(sys.tensor(a, b)));
            }
            if let Some((p, q)) = c.prime_witness {
                prop_assert!(!p.is_subset(i) && !q.is_subset(i) && ideal_product(&sys, p, q).is_subset(i));
            }
        }
    }

    #[test]
    fn violations_replay(sys in system(), at in any::<u64>(), value in any::<u64>()) {
        let n = sys.len();
        let mut parts = sys.to_parts();
        let k = at as usize % (n * n);
        parts.tensor[k] = ObjectId::new(value as usize % n);
        let broken = TensorSystem::from_parts(parts).unwrap();
        for v in &validate(&broken).violations {
            prop_assert!(!axiom_holds(&broken, v.axiom, &v.witness), "{:?} does not replay", v);
        }
    }

    #[test]
    fn triangle_completion_is_idempotent(sys in system()) {
        let once = sys.complete_triangles();
        prop_assert_eq!(once.complete_triangles(), once);
    }

    #[test]
    fn dual_is_an_involution(n in 0usize..6, subbasis in proptest::collection::vec(any::<u64>(), 0..5)) {
        let subbasis: Vec<BitSet> = subbasis.into_iter().map(BitSet::from_bits).collect();
        let x = FiniteSpace::generated(vec![PointPayload::Plain; n], &subbasis).unwrap();
        prop_assert_eq!(hochster_dual(&hochster_dual(&x)), x.clone());
        prop_assert!(FiniteSpace::new(x.payload().to_vec(), x.opens()).is_ok());
    }

    #[test]
    fn homeomorphism_search_is_exact(
        n in 0usize..5,
        a in proptest::collection::vec(any::<u64>(), 0..4),
        b in proptest::collection::vec(any::<u64>(), 0..4),
    ) {
        let space = |s: Vec<u64>| {
            let s: Vec<BitSet> = s.into_iter().map(BitSet::from_bits).collect();
            FiniteSpace::generated(vec![PointPayload::Plain; n], &s).unwrap()
        };
        let (x, y) = (space(a), space(b));
        let found = homeomorphic(&x, &y).unwrap();
        let brute = permutations(n).into_iter().any(|p| is_homeomorphism(&x, &y, &p));
        prop_assert_eq!(found.is_some(), brute);
        if let Some(map) = found {
            prop_assert!(is_homeomorphism(&x, &y, &map));
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
