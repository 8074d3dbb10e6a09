use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{int, vector, Subspace, Vector};

/// Seed of the pseudo-random probe vectors.
pub const PROBE_SEED: u64 = 0x686f_6d6c_6965;
/// Number of pseudo-random probe vectors per round.
pub const PROBE_BUDGET: usize = 32;

/// Probe vectors outside `j`: standard basis vectors, their pairwise sums,
/// then `PROBE_BUDGET` seeded combinations with entries in `-3..=3`.
fn probes(j: &Subspace) -> Vec<Vector> {
    let n = j.ambient_dim();
    let outside: Vec<usize> = (0..n).filter(|&i| !j.contains(&vector::unit(n, i))).collect();
    let mut out: Vec<Vector> = outside.iter().map(|&i| vector::unit(n, i)).collect();
    for (a, &i) in outside.iter().enumerate() {
        for &k in &outside[a + 1..] {
            out.push(vector::add(&vector::unit(n, i), &vector::unit(n, k)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for _ in 0..PROBE_BUDGET {
        let v: Vector = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
        if !j.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// A proper ideal containing `s` that no probe vector can enlarge.
///
/// Starting from the ideal closure of `s`, the first probe `v` whose
/// closure with the current ideal is still proper replaces it, and probing
/// restarts. The result is maximal among ideals reachable by the probe set;
/// exact maximality is not certified.
pub fn maximal_proper_ideal_containing(a: &HomLieAlgebra, s: &Subspace) -> Result<Subspace> {
    let mut j = a.ideal_closure(s)?;
    if j.is_full() {
        return Err(Error::NoProperIdeal);
    }
    'grow: loop {
        for v in probes(&j) {
            let candidate = a.ideal_closure(&j.sum(&Subspace::span(a.dim(), &[v])))?;
            if !candidate.is_full() {
                j = candidate;
                continue 'grow;
            }
        }
        return Ok(j);
    }
}
