use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::BalancedBipartiteGraph;

use super::{allowed_columns, check_n, chords_per_row, hamilton_rows, CensusError};

/// A random class member: the canonical Hamilton cycle plus a chord matrix
/// with line sums `n/2 - 2`, built row by row with randomized choices.
///
/// Columns whose remaining capacity equals the number of rows that can still
/// reach them are taken first; a dead end restarts the construction.
/// Deterministic for fixed `(n, seed)`.
pub fn random_member(n: usize, seed: u64) -> Result<BalancedBipartiteGraph, CensusError> {
    check_n(n, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = chords_per_row(n);
    let allowed: Vec<u64> = (0..n).map(|i| allowed_columns(n, i)).collect();
    loop {
        if let Some(chords) = try_fill(n, r, &allowed, &mut rng) {
            let rows = hamilton_rows(n)
                .into_iter()
                .zip(chords)
                .map(|(h, c)| h | c)
                .collect();
            return Ok(BalancedBipartiteGraph::from_rows(n, rows));
        }
    }
}

fn try_fill(n: usize, r: usize, allowed: &[u64], rng: &mut impl Rng) -> Option<Vec<u64>> {
    let mut caps = vec![r; n];
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let reach = |c: usize| (i..n).filter(|&k| allowed[k] >> c & 1 == 1).count();
        let open: Vec<usize> = (0..n).filter(|&c| allowed[i] >> c & 1 == 1 && caps[c] > 0).collect();
        let (forced, mut free): (Vec<usize>, Vec<usize>) = open.iter().partition(|&&c| caps[c] == reach(c));
        if forced.len() > r || open.len() < r {
            return None;
        }
        free.shuffle(rng);
        let mut row = 0u64;
        for &c in forced.iter().chain(free.iter().take(r - forced.len())) {
            caps[c] -= 1;
            row |= 1 << c;
        }
        rows.push(row);
    }
    caps.iter().all(|&c| c == 0).then_some(rows)
}

/// A random member with `extra` additional random edges, so that its size
/// exceeds `n^2/2` while the canonical Hamilton cycle survives.
pub fn augmented_member(n: usize, extra: usize, seed: u64) -> Result<BalancedBipartiteGraph, CensusError> {
    let mut g = random_member(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut missing: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !g.has_edge(i, j))
        .collect();
    missing.shuffle(&mut rng);
    for &(i, j) in missing.iter().take(extra) {
        g.add_edge(i, j).expect("edge was missing");
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_determinism() {
        assert_eq!(random_member(8, 42).unwrap(), random_member(8, 42).unwrap());
    }

    #[test]
    fn members_are_in_the_class() {
        for n in [6, 8, 10, 16, 32] {
            for seed in 0..5 {
                let g = random_member(n, seed).unwrap();
                assert!(g.is_half_regular(), "n = {n}, seed = {seed}");
                assert!(g.is_canonically_labeled());
            }
        }
    }

    #[test]
    fn seeds_vary_the_output() {
        let distinct: std::collections::HashSet<_> = (0..20).map(|s| random_member(8, s).unwrap()).collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn odd_n_is_unsupported() {
        assert!(matches!(random_member(7, 1), Err(CensusError::UnsupportedN { .. })));
    }

    #[test]
    fn augmentation_adds_edges() {
        let g = augmented_member(6, 3, 9).unwrap();
        assert_eq!(g.size(), 21);
        assert!(g.is_canonically_labeled());
    }
}
