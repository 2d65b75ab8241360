//! Acceptance suite: ten criteria over the builtin systems and the first 100
//! random systems (at most 8 objects) on which every prime is completely
//! prime. Prints one PASS or FAIL line per criterion and exits nonzero if
//! any criterion fails.

use std::time::{Duration, Instant};

use clap::Parser;
use ttgeom::format::{parse_system, write_system};
use ttgeom::json::{load_system, system_value, to_text};
use ttgeom::{run, Cli};
use ttgeom_core::frames::{
    check_frame_laws, frame_isomorphism, points, principal_witnesses, zar_frame_of, FiniteFrame,
};
use ttgeom_core::spectra::{
    homeomorphic, hochster_dual, is_homeomorphism, is_spectral, nullstellensatz_spaces, open_of_element,
    space_of_frame, spc_of, vanishing, verify_corres, FiniteSpace, PointPayload, HOMEOMORPHISM_BOUND,
};
use ttgeom_core::support::{
    check_frame_support, check_top_support, final_map_of, frame_support_corpus, gamma_xi_round_trip,
    mediating_map_of, nvy_support_of, top_support_corpus, universal_support_of, xi_gamma_round_trip, Uniqueness,
    EXHAUSTIVE_UNIQUENESS_BOUND,
};
use ttgeom_core::tensys::{builtin, degenerate, random_system, TensorSystem, BUILTIN_NAMES};
use ttgeom_core::verify::{run_suite, SuiteConfig};
use ttgeom_core::{BitSet, IdealLattice, RadicalMethod};

const RANDOM_SYSTEMS: usize = 100;
const MAX_OBJECTS: usize = 8;
const SUPPORTS_PER_BUILTIN: usize = 20;
const SUPPORTS_PER_RANDOM: usize = 4;
const RADICAL_TIME_LIMIT: Duration = Duration::from_secs(60);
const NULLSTELLENSATZ_ZAR_BOUND: usize = 10;

struct Entry {
    name: String,
    sys: TensorSystem,
    builtin: bool,
}

/// Failures of one criterion, with a count of instances checked.
#[derive(Default)]
struct Tally {
    instances: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !holds {
            self.failures.push(what());
        }
    }
}

fn corpus() -> (Vec<Entry>, Vec<u64>) {
    let mut out: Vec<Entry> =
        BUILTIN_NAMES.iter().map(|n| Entry { name: n.to_string(), sys: builtin(n).unwrap(), builtin: true }).collect();
    let mut rejected = Vec::new();
    let mut seed = 0;
    while out.len() < BUILTIN_NAMES.len() + RANDOM_SYSTEMS {
        let sys = random_system(seed, MAX_OBJECTS).expect("generation succeeds");
        if IdealLattice::new(&sys).check_assumption().holds {
            out.push(Entry { name: format!("seed {seed}"), sys, builtin: false });
        } else {
            rejected.push(seed);
        }
        seed += 1;
    }
    (out, rejected)
}

fn radical_agreement(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        for &ideal in lattice.ideals() {
            let a = lattice.radical(ideal, RadicalMethod::ViaPrimes);
            let b = lattice.radical(ideal, RadicalMethod::ViaRoots);
            t.check(a == b, || format!("{}: radicals of {:?} differ", e.name, e.sys.set_labels(ideal.members())));
        }
    }
    t
}

fn zar(lattice: &IdealLattice<'_>) -> FiniteFrame {
    zar_frame_of(lattice).expect("the assumption holds on the corpus")
}

fn frame_laws(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        let frame = zar(&lattice);
        let laws = check_frame_laws(&frame);
        t.check(laws.ok(), || format!("{}: violated {:?}", e.name, laws.axioms_violated()));
        let payload = frame.payload().unwrap();
        for a in frame.elements() {
            for b in frame.elements() {
                let meet = payload[frame.meet(a, b)];
                t.check(meet == payload[a].intersection(payload[b]), || format!("{}: meet of {a}, {b}", e.name));
                let union = lattice.close(payload[a].union(payload[b]));
                let join = lattice.radical(union, RadicalMethod::ViaRoots).members();
                t.check(payload[frame.join(a, b)] == join, || format!("{}: join of {a}, {b}", e.name));
            }
        }
    }
    t
}

fn coherence(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        let frame = zar(&lattice);
        let payload = frame.payload().unwrap();
        let witnesses = principal_witnesses(&e.sys, &frame).unwrap();
        for el in frame.elements() {
            let root = lattice.principal_radical(witnesses[el]).members();
            t.check(root == payload[el], || format!("{}: element {el} is not the radical of its witness", e.name));
        }
    }
    t
}

/// `map[x]` is the spectrum point holding the prime of frame point `x`.
fn corres_map(frame: &FiniteFrame, spectrum: &FiniteSpace) -> Option<Vec<usize>> {
    let payload = frame.payload().unwrap();
    points(frame)
        .iter()
        .map(|p| {
            spectrum.payload().iter().position(|q| matches!(q, PointPayload::Prime(i) if i.members() == payload[p.prime_element]))
        })
        .collect()
}

fn corres(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        let frame = zar(&lattice);
        let pts = points(&frame);
        let spectrum = spc_of(&lattice).unwrap();
        t.check(pts.len() == lattice.primes().len(), || format!("{}: point and prime counts differ", e.name));
        let payload = frame.payload().unwrap();
        for p in &pts {
            let ix = lattice.primes().iter().find(|q| q.members() == payload[p.prime_element]);
            t.check(ix.is_some_and(|&q| lattice.classify(q).is_prime), || {
                format!("{}: point at element {} is not a prime ideal", e.name, p.prime_element)
            });
        }
        let Some(map) = corres_map(&frame, &spectrum) else {
            t.check(false, || format!("{}: some point has no prime", e.name));
            continue;
        };
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        t.check(sorted.len() == map.len(), || format!("{}: the point map is not injective", e.name));
        let universal = universal_support_of(&lattice).unwrap();
        for k in e.sys.objects() {
            let open = open_of_element(&pts, universal.d[k.index()]);
            let image: BitSet = open.iter().map(|x| map[x]).collect();
            let expected = vanishing(&lattice, BitSet::singleton(k.index()));
            t.check(image == expected, || format!("{}: open of {} does not match", e.name, e.sys.label(k)));
        }
        let report = verify_corres(&e.sys).is_ok_and(|r| r.passed);
        t.check(report, || format!("{}: library corres check failed", e.name));
    }
    t
}

fn hdual(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        let frame = zar(&lattice);
        let x = space_of_frame(&frame);
        let dual = hochster_dual(&x);
        let spectrum = spc_of(&lattice).unwrap();
        for (name, space) in [("frame space", &x), ("its dual", &dual), ("spectrum", &spectrum)] {
            t.check(hochster_dual(&hochster_dual(space)) == *space, || format!("{}: {name} dual twice differs", e.name));
        }
        let map = corres_map(&frame, &spectrum);
        t.check(map.is_some_and(|m| is_homeomorphism(&dual, &spectrum, &m)), || {
            format!("{}: the corres bijection is not a homeomorphism", e.name)
        });
        if dual.len() <= HOMEOMORPHISM_BOUND {
            let found = homeomorphic(&dual, &spectrum).unwrap();
            t.check(found.is_some(), || format!("{}: search finds no homeomorphism", e.name));
        }
    }
    t
}

fn initiality(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus.iter().filter(|e| e.builtin) {
        let lattice = IdealLattice::new(&e.sys);
        let universal = universal_support_of(&lattice).unwrap();
        let supports = frame_support_corpus(&e.sys, 1, SUPPORTS_PER_BUILTIN).unwrap();
        t.check(supports.len() >= SUPPORTS_PER_BUILTIN, || format!("{}: only {} supports", e.name, supports.len()));
        for (i, fs) in supports.iter().enumerate() {
            let axioms = check_frame_support(&e.sys, fs);
            t.check(axioms.ok(), || format!("{} support {i}: violated {:?}", e.name, axioms.axioms_violated()));
            let med = match mediating_map_of(&lattice, fs) {
                Ok(m) => m,
                Err(err) => {
                    t.check(false, || format!("{} support {i}: no mediating map ({err})", e.name));
                    continue;
                }
            };
            let commutes = e.sys.objects().all(|k| med.map.table[universal.d[k.index()]] == fs.d[k.index()]);
            t.check(commutes, || format!("{} support {i}: u . s != d", e.name));
            let exhaustive = universal.frame.len() > EXHAUSTIVE_UNIQUENESS_BOUND
                || matches!(med.uniqueness, Uniqueness::Exhaustive { .. });
            t.check(exhaustive && med.uniqueness.is_unique(), || {
                format!("{} support {i}: uniqueness {:?}", e.name, med.uniqueness)
            });
        }
    }
    t
}

fn finality(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        let nvy = nvy_support_of(&lattice).unwrap();
        let axioms = check_top_support(&e.sys, &nvy);
        t.check(axioms.ok(), || format!("{}: nvy support violates {:?}", e.name, axioms.axioms_violated()));
        if !e.builtin {
            continue;
        }
        let supports = top_support_corpus(&e.sys, 2, SUPPORTS_PER_BUILTIN).unwrap();
        t.check(supports.len() >= SUPPORTS_PER_BUILTIN, || format!("{}: only {} supports", e.name, supports.len()));
        for (i, ts) in supports.iter().enumerate() {
            let fm = match final_map_of(&lattice, ts) {
                Ok(f) => f,
                Err(err) => {
                    t.check(false, || format!("{} support {i}: no final map ({err})", e.name));
                    continue;
                }
            };
            t.check(fm.continuous, || format!("{} support {i}: final map not continuous", e.name));
            for a in e.sys.objects() {
                let pulled: BitSet =
                    (0..ts.space.len()).filter(|&x| nvy.sigma[a.index()].contains(fm.images[x])).collect();
                t.check(pulled == ts.sigma[a.index()], || {
                    format!("{} support {i}: pullback fails at {}", e.name, e.sys.label(a))
                });
            }
        }
    }
    t
}

fn round_trip(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let count = if e.builtin { SUPPORTS_PER_BUILTIN } else { SUPPORTS_PER_RANDOM };
        for (i, fs) in frame_support_corpus(&e.sys, 3, count).unwrap().iter().enumerate() {
            let ok = gamma_xi_round_trip(&e.sys, fs);
            t.check(matches!(ok, Ok(true)), || format!("{} frame support {i}: {ok:?}", e.name));
        }
        for (i, ts) in top_support_corpus(&e.sys, 4, count).unwrap().iter().enumerate() {
            let ok = xi_gamma_round_trip(&e.sys, ts);
            t.check(matches!(ok, Ok(true)), || format!("{} top support {i}: {ok:?}", e.name));
        }
    }
    t
}

fn nullstellensatz(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    for e in corpus {
        let lattice = IdealLattice::new(&e.sys);
        if zar(&lattice).len() > NULLSTELLENSATZ_ZAR_BOUND {
            continue;
        }
        let spaces = nullstellensatz_spaces(&lattice).unwrap();
        t.check(is_spectral(&spaces.lower), || format!("{}: frame-element space not spectral", e.name));
        t.check(is_spectral(&spaces.opens), || format!("{}: dual-open space not spectral", e.name));
        let found = homeomorphic(&spaces.lower, &spaces.opens).unwrap();
        t.check(found.is_some(), || format!("{}: spaces are not homeomorphic", e.name));
        t.check(is_homeomorphism(&spaces.lower, &spaces.opens, &spaces.correspondence), || {
            format!("{}: the correspondence is not a homeomorphism", e.name)
        });
    }
    t
}

fn cli(args: &[&str]) -> ttgeom::Outcome {
    run(&Cli::try_parse_from(std::iter::once("ttgeom").chain(args.iter().copied())).unwrap())
}

fn degenerate_sanity(corpus: &[Entry]) -> Tally {
    let mut t = Tally::default();
    let trivial = builtin("trivial").unwrap();
    let lattice = IdealLattice::new(&trivial);
    let frame = zar(&lattice);
    t.check(lattice.primes().len() == 1, || "trivial: not exactly one prime".into());
    t.check(points(&frame).len() == 1, || "trivial: not exactly one frame point".into());
    let chain = FiniteFrame::chain(2).unwrap();
    t.check(frame_isomorphism(&frame, &chain, &[]).is_some(), || "trivial: Zar is not the 2-chain".into());

    let zero = degenerate();
    let lattice = IdealLattice::new(&zero);
    t.check(spc_of(&lattice).unwrap().is_empty(), || "degenerate: spectrum not empty".into());
    t.check(run_suite(&zero, SuiteConfig::default()).is_ok_and(|r| r.passed()), || "degenerate: suite fails".into());
    let commands = ["validate", "ideals", "primes", "zar", "spc", "dual", "support", "verify", "emit"];
    for cmd in commands {
        let out = cli(&[cmd, "--builtin", "degenerate"]);
        t.check(out.code == 0, || format!("degenerate: `{cmd}` exits {}: {}", out.code, out.stderr));
    }
    let out = cli(&["radical", "--builtin", "degenerate", "--ideal", "0"]);
    t.check(out.code == 0, || "degenerate: radical fails".into());

    let mut sources: Vec<Vec<String>> =
        BUILTIN_NAMES.iter().chain(&["degenerate"]).map(|n| vec!["--builtin".into(), n.to_string()]).collect();
    sources.extend([3u64, 17, 42].map(|s| vec!["--seed".into(), s.to_string()]));
    for source in &sources {
        for cmd in commands {
            for format in ["text", "json", "dot"] {
                let mut args: Vec<&str> = vec![cmd, "--format", format];
                args.extend(source.iter().map(String::as_str));
                let (a, b) = (cli(&args), cli(&args));
                t.check(a == b, || format!("{args:?}: output differs between runs"));
            }
        }
        let mut args: Vec<&str> = vec!["emit", "--format", "json"];
        args.extend(source.iter().map(String::as_str));
        let bundle = cli(&args).stdout;
        let reloaded = load_system(&bundle).map(|s| to_text(&ttgeom::json::system_value(&s)));
        let original = serde_json::from_str::<serde_json::Value>(&bundle).map(|v| to_text(&v["system"]));
        t.check(matches!((&reloaded, &original), (Ok(a), Ok(b)) if a == b), || format!("{source:?}: bundle reload"));
    }
    for e in corpus {
        let text = to_text(&system_value(&e.sys));
        t.check(load_system(&text).is_ok_and(|s| s == e.sys), || format!("{}: JSON round trip", e.name));
        t.check(parse_system(&write_system(&e.sys)).is_ok_and(|s| s == e.sys), || format!("{}: text round trip", e.name));
    }
    t
}

fn main() {
    let start = Instant::now();
    let (corpus, rejected) = corpus();
    println!(
        "corpus: {} builtins and {} random systems (seeds 0..{}; {} rejected by the assumption)",
        BUILTIN_NAMES.len(),
        RANDOM_SYSTEMS,
        rejected.len() + RANDOM_SYSTEMS,
        rejected.len()
    );
    let setup = start.elapsed();
    let criteria: [(&str, fn(&[Entry]) -> Tally); 10] = [
        ("radical agreement", radical_agreement),
        ("frame laws", frame_laws),
        ("coherence", coherence),
        ("points and primes", corres),
        ("Hochster duality", hdual),
        ("initiality", initiality),
        ("finality", finality),
        ("round trip", round_trip),
        ("topological Nullstellensatz", nullstellensatz),
        ("degenerate sanity", degenerate_sanity),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let began = Instant::now();
        let mut tally = criterion(&corpus);
        let mut elapsed = began.elapsed();
        if i == 0 {
            elapsed += setup;
            tally.check(elapsed < RADICAL_TIME_LIMIT, || format!("took {elapsed:?}, limit {RADICAL_TIME_LIMIT:?}"));
        }
        let verdict = if tally.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2} {name}: {} instances, {:.2} s", i + 1, tally.instances, elapsed.as_secs_f64());
        for f in tally.failures.iter().take(10) {
            println!("       {f}");
        }
        if !tally.failures.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
