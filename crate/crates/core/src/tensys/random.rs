//! Seeded generator of valid tensor systems for property campaigns.
//!
//! Arbitrary operation tables almost never satisfy associativity and
//! distributivity, so systems are drawn from a family where both hold by
//! construction: sub-semirings of the contracted Boolean semigroup semiring
//! of a random monoid of partial transformations. Objects are finite sets of
//! nonzero monoid elements, `(+)` is union and `(x)` is elementwise
//! composition with products hitting the empty map discarded. A third of the
//! monoids are graded by the group of order two, which supplies a central
//! invertible object for a nontrivial shift. Each attempt also draws a
//! size floor, so that small systems do not dominate; candidates outside
//! `floor..=max_objects` are rejected and redrawn.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{summand_closure, validate, ObjectId, SystemParts, TensorSystem, Triangle};
use crate::error::{Error, Result};

pub const MAX_RANDOM_OBJECTS: usize = 12;
const ATTEMPTS: usize = 4096;
const UNDEFINED: u8 = u8::MAX;

/// Deterministic in `(seed, max_objects)`; the result passes [`validate`]
/// and has between 2 and `max_objects` objects.
pub fn random_system(seed: u64, max_objects: usize) -> Result<TensorSystem> {
    if !(2..=MAX_RANDOM_OBJECTS).contains(&max_objects) {
        return Err(Error::InvalidArgument(format!(
            "max_objects must lie in 2..={MAX_RANDOM_OBJECTS}, got {max_objects}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        if let Some(sys) = attempt(&mut rng, max_objects) {
            return Ok(sys);
        }
    }
    Err(Error::GenerationFailed { seed, max_objects, attempts: ATTEMPTS })
}

/// Monoid of partial maps on `points` points, with multiplication table.
struct Monoid {
    mul: Vec<Vec<usize>>,
    identity: usize,
    /// Elements discarded in products: the nowhere-defined map, in every grade.
    zero: Vec<bool>,
    /// The identity map in the odd grade, when graded.
    odd_identity: Option<usize>,
}

fn compose(f: &[u8; 3], g: &[u8; 3], points: usize) -> [u8; 3] {
    // first f, then g
    let mut out = [UNDEFINED; 3];
    for (x, slot) in out.iter_mut().enumerate().take(points) {
        let y = f[x];
        if y != UNDEFINED {
            *slot = g[y as usize];
        }
    }
    out
}

fn random_monoid(rng: &mut ChaCha8Rng) -> Monoid {
    let points = *[1usize, 2, 3, 3].choose(rng).unwrap();
    let generators = rng.gen_range(1..=3).max(rng.gen_range(1..=3));
    let mut identity = [UNDEFINED; 3];
    for (x, slot) in identity.iter_mut().enumerate().take(points) {
        *slot = x as u8;
    }
    let gens: Vec<[u8; 3]> = (0..generators)
        .map(|_| {
            let mut g = [UNDEFINED; 3];
            for slot in g.iter_mut().take(points) {
                let target = rng.gen_range(0..=points);
                *slot = if target == points { UNDEFINED } else { target as u8 };
            }
            g
        })
        .collect();
    let mut elems = alloc::vec![identity];
    let mut index: BTreeMap<[u8; 3], usize> = BTreeMap::new();
    index.insert(identity, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let p = compose(&elems[i], g, points);
            if let alloc::collections::btree_map::Entry::Vacant(slot) = index.entry(p) {
                slot.insert(elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    let mul: Vec<Vec<usize>> = elems
        .iter()
        .map(|f| elems.iter().map(|g| index[&compose(f, g, points)]).collect())
        .collect();
    let zero: Vec<bool> = elems.iter().map(|e| *e == [UNDEFINED; 3]).collect();
    if !rng.gen_ratio(1, 3) {
        return Monoid { mul, identity: 0, zero, odd_identity: None };
    }
    // element (m, i) has index 2m + i
    let m = mul.len();
    let graded = (0..2 * m)
        .map(|a| (0..2 * m).map(|b| 2 * mul[a / 2][b / 2] + ((a + b) % 2)).collect())
        .collect();
    let zero = (0..2 * m).map(|a| zero[a / 2]).collect();
    Monoid { mul: graded, identity: 0, zero, odd_identity: Some(1) }
}

impl Monoid {
    fn product(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        for i in bits(a) {
            for j in bits(b) {
                let k = self.mul[i][j];
                if !self.zero[k] {
                    out |= 1 << k;
                }
            }
        }
        out
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Row-major sum and tensor tables with zero at index 0 and unit at index 1.
struct Algebra {
    n: usize,
    sum: Vec<usize>,
    tensor: Vec<usize>,
}

/// A sub-semiring of the semigroup semiring of a random monoid, or a random
/// ordered semiring on a chain, or `None` when the draw is inadmissible.
fn semiring(rng: &mut ChaCha8Rng, max_objects: usize) -> Option<Algebra> {
    if rng.gen_ratio(1, 3) {
        chain_semiring(rng, max_objects)
    } else {
        monoid_semiring(rng, max_objects)
    }
}

/// The chain `0 < 1 < ... < n-1` with `max` as sum, the top as unit, and a
/// random tensor that is monotone in each argument (hence distributive over
/// `max`) and below both arguments; non-associative draws are rejected.
fn chain_semiring(rng: &mut ChaCha8Rng, max_objects: usize) -> Option<Algebra> {
    let n = rng.gen_range(2..=max_objects.min(6));
    let top = n - 1;
    let mut t = alloc::vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            t[a * n + b] = if a == 0 || b == 0 {
                0
            } else if a == top {
                b
            } else if b == top {
                a
            } else {
                let low = t[(a - 1) * n + b].max(t[a * n + b - 1]);
                rng.gen_range(low..=a.min(b))
            };
        }
    }
    let associative =
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])));
    if !associative {
        return None;
    }
    // order position p sits at index 0 for p = 0, 1 for the top, p + 1 otherwise
    let index = |p: usize| if p == 0 { 0 } else if p == top { 1 } else { p + 1 };
    let mut position = alloc::vec![0; n];
    for p in 0..n {
        position[index(p)] = p;
    }
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        (0..n * n).map(|k| index(f(position[k / n], position[k % n]))).collect()
    };
    Some(Algebra { n, sum: table(&|a, b| a.max(b)), tensor: table(&|a, b| t[a * n + b]) })
}

fn monoid_semiring(rng: &mut ChaCha8Rng, max_objects: usize) -> Option<Algebra> {
    let monoid = random_monoid(rng);
    if monoid.mul.len() > 64 {
        return None;
    }
    let nonzero: Vec<usize> = (0..monoid.mul.len()).filter(|&e| !monoid.zero[e]).collect();
    let unit = 1u64 << monoid.identity;
    let mut elems: Vec<u64> = alloc::vec![0, unit];
    if let Some(odd) = monoid.odd_identity {
        elems.push(1 << odd);
    }
    for _ in 0..rng.gen_range(0..=3) {
        let size = rng.gen_range(1..=2);
        let g = nonzero.choose_multiple(rng, size).fold(0u64, |acc, &e| acc | (1 << e));
        if !elems.contains(&g) {
            elems.push(g);
        }
    }
    if elems.len() > max_objects {
        return None;
    }
    // close under union and product
    loop {
        let mut fresh = Vec::new();
        for &a in &elems {
            for &b in &elems {
                for c in [a | b, monoid.product(a, b)] {
                    if !elems.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        elems.extend(fresh);
        if elems.len() > max_objects {
            return None;
        }
    }
    elems[2..].sort_unstable_by_key(|&e| (e.count_ones(), e));
    let n = elems.len();
    let pos = |e: u64| elems.iter().position(|&x| x == e).expect("closed");
    let table = |f: &dyn Fn(u64, u64) -> u64| -> Vec<usize> {
        (0..n * n).map(|i| pos(f(elems[i / n], elems[i % n]))).collect()
    };
    Some(Algebra { n, sum: table(&|a, b| a | b), tensor: table(&|a, b| monoid.product(a, b)) })
}

/// Componentwise operations on pairs; `(0, 0)` and `(1, 1)` come first.
fn product(a: &Algebra, b: &Algebra) -> Algebra {
    let mut pairs = alloc::vec![(0, 0), (1, 1)];
    for i in 0..a.n {
        for j in 0..b.n {
            if (i, j) != (0, 0) && (i, j) != (1, 1) {
                pairs.push((i, j));
            }
        }
    }
    let n = pairs.len();
    let pos = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("all pairs listed");
    let table = |ta: &[usize], tb: &[usize]| -> Vec<usize> {
        (0..n * n)
            .map(|k| {
                let ((i, j), (p, q)) = (pairs[k / n], pairs[k % n]);
                pos((ta[i * a.n + p], tb[j * b.n + q]))
            })
            .collect()
    };
    Algebra { n, sum: table(&a.sum, &b.sum), tensor: table(&a.tensor, &b.tensor) }
}

fn attempt(rng: &mut ChaCha8Rng, max_objects: usize) -> Option<TensorSystem> {
    let floor = rng.gen_range(2..=max_objects);
    let algebra = if max_objects >= 4 && rng.gen_ratio(1, 3) {
        let left = rng.gen_range(2..=max_objects / 2);
        let a = semiring(rng, left)?;
        let b = semiring(rng, max_objects / a.n)?;
        product(&a, &b)
    } else {
        semiring(rng, max_objects)?
    };
    if algebra.n < floor {
        return None;
    }
    let n = algebra.n;
    let sum: Vec<ObjectId> = algebra.sum.iter().map(|&i| ObjectId::new(i)).collect();
    let tensor: Vec<ObjectId> = algebra.tensor.iter().map(|&i| ObjectId::new(i)).collect();

    // shift: tensoring with a central invertible object
    let central_units: Vec<usize> = (0..n)
        .filter(|&s| {
            let mut image = 0u64;
            (0..n).all(|a| {
                let sa = tensor[s * n + a];
                image |= 1 << sa.index();
                sa == tensor[a * n + s]
            }) && image.count_ones() as usize == n
        })
        .collect();
    let shifter = if rng.gen_bool(0.5) { 1 } else { *central_units.choose(rng).unwrap_or(&1) };
    let shift = (0..n).map(|a| tensor[shifter * n + a]).collect();

    let mut labels: Vec<String> = alloc::vec!["0".into(), "u".into()];
    labels.extend((2..n).map(|i| format!("o{i}")));

    let mut triangles: Vec<Triangle> = Vec::new();
    if n > 2 {
        let inner: Vec<ObjectId> = (2..n).map(ObjectId::new).collect();
        let extra = *[0usize, 0, 1, 2].choose(rng).unwrap();
        for _ in 0..extra {
            let pick = |rng: &mut ChaCha8Rng| *inner.choose(rng).unwrap();
            triangles.push((pick(rng), pick(rng), pick(rng)));
        }
    }
    let parts = SystemParts {
        labels,
        unit: ObjectId::new(1),
        shift,
        summands: summand_closure(n, &sum, &[]),
        sum,
        tensor,
        triangles,
    };
    let sys = TensorSystem::from_parts(parts).ok()?.complete_triangles();
    validate(&sys).ok().then_some(sys)
}
