//! Random surface-group representations into SL(2,Z), for property tests and
//! benchmarks. All draws go through a caller-supplied generator so that runs
//! are reproducible from a seed.

use rand::Rng;

use crate::bundle::{TorusBundle, SL2Z};

/// A product of at most `max_len` letters drawn from `U, U^{-1}, L, L^{-1}`.
pub fn random_sl2z_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> SL2Z {
    let len = rng.gen_range(0..=max_len);
    let mut acc = SL2Z::identity();
    for _ in 0..len {
        let letter = match rng.gen_range(0..4) {
            0 => SL2Z::upper_unipotent(),
            1 => SL2Z::upper_unipotent().inverse(),
            2 => SL2Z::lower_unipotent(),
            _ => SL2Z::lower_unipotent().inverse(),
        };
        acc = acc.mul(&letter);
    }
    acc
}

fn power(a: &SL2Z, k: i32) -> SL2Z {
    let base = if k < 0 { a.inverse() } else { a.clone() };
    (0..k.unsigned_abs()).fold(SL2Z::identity(), |acc, _| acc.mul(&base))
}

/// A monodromy tuple satisfying `[A_1,B_1]...[A_g,B_g] = I`.
///
/// Each handle is either a commuting pair `(A, A^k)` or, for the first two
/// handles, a swapped pair `(A, B), (B, A)` whose commutators cancel.
pub fn random_representation<R: Rng + ?Sized>(
    rng: &mut R,
    genus: usize,
    max_word_len: usize,
) -> Vec<SL2Z> {
    let mut mono = Vec::with_capacity(2 * genus);
    let mut handle = 0;
    if genus >= 2 && rng.gen_bool(0.3) {
        let a = random_sl2z_word(rng, max_word_len);
        let b = random_sl2z_word(rng, max_word_len);
        mono.extend([a.clone(), b.clone(), b, a]);
        handle = 2;
    }
    while handle < genus {
        let a = random_sl2z_word(rng, max_word_len);
        let (x, y) = match rng.gen_range(0..4) {
            0 => (a, SL2Z::identity()),
            1 => (SL2Z::identity(), a),
            _ => {
                let k = rng.gen_range(-1..=2);
                let ak = power(&a, k);
                (a, ak)
            }
        };
        mono.push(x);
        mono.push(y);
        handle += 1;
    }
    mono
}

/// A bundle with [`random_representation`] monodromy and Euler entries in
/// `[-euler_bound, euler_bound]`.
pub fn random_bundle<R: Rng + ?Sized>(
    rng: &mut R,
    genus: usize,
    max_word_len: usize,
    euler_bound: i64,
) -> TorusBundle {
    let mono = random_representation(rng, genus, max_word_len);
    let m = rng.gen_range(-euler_bound..=euler_bound);
    let n = rng.gen_range(-euler_bound..=euler_bound);
    TorusBundle::new(genus, mono, [m.into(), n.into()]).expect("genus >= 2 and arity 2g")
}
