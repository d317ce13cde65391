//! Counting the class without enumerating it.

use std::collections::HashMap;

use super::{allowed_columns, check_n, chords_per_row, CensusError};

/// 0/1 matrix of the positions a chord may occupy (`1` = allowed).
pub fn chord_allowed_matrix(n: usize) -> Vec<Vec<u8>> {
    (0..n)
        .map(|i| {
            let allowed = allowed_columns(n, i);
            (0..n).map(|c| (allowed >> c & 1) as u8).collect()
        })
        .collect()
}

/// Permanent of a square 0/1 matrix by Ryser's inclusion-exclusion formula.
pub fn permanent(m: &[Vec<u8>]) -> i128 {
    let n = m.len();
    assert!(n < 31, "Ryser expansion over 2^n subsets");
    let mut total: i128 = 0;
    for subset in 1u32..(1 << n) {
        let mut prod: i128 = 1;
        for row in m {
            let s: i128 = (0..n).filter(|&c| subset >> c & 1 == 1).map(|c| row[c] as i128).sum();
            prod *= s;
            if prod == 0 {
                break;
            }
        }
        let sign = if (n - subset.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
        total += sign * prod;
    }
    total
}

/// Counts chord matrices with every line sum `n/2 - 2` on the allowed
/// positions by memoising over the vector of remaining column capacities.
pub fn count_chord_completions(n: usize) -> u128 {
    let r = chords_per_row(n);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&c| allowed_columns(n, i) >> c & 1 == 1).collect())
        .collect();
    let mut memo: HashMap<(usize, Vec<u8>), u128> = HashMap::new();
    count_from(0, vec![r as u8; n], r, &rows, &mut memo)
}

fn count_from(
    row: usize,
    caps: Vec<u8>,
    r: usize,
    rows: &[Vec<usize>],
    memo: &mut HashMap<(usize, Vec<u8>), u128>,
) -> u128 {
    if row == rows.len() {
        return u128::from(caps.iter().all(|&c| c == 0));
    }
    if let Some(&v) = memo.get(&(row, caps.clone())) {
        return v;
    }
    let open: Vec<usize> = rows[row].iter().copied().filter(|&c| caps[c] > 0).collect();
    let mut total = 0;
    let mut pick = Vec::with_capacity(r);
    for_each_subset(&open, r, 0, &mut pick, &mut |cols| {
        let mut next = caps.clone();
        for &c in cols {
            next[c] -= 1;
        }
        total += count_from(row + 1, next, r, rows, memo);
    });
    memo.insert((row, caps), total);
    total
}

fn for_each_subset(items: &[usize], r: usize, start: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == r {
        f(pick);
        return;
    }
    for k in start..items.len() {
        pick.push(items[k]);
        for_each_subset(items, r, k + 1, pick, f);
        pick.pop();
    }
}

/// Class size computed independently of [`super::enumerate_class`]: a
/// permanent when each row holds one chord, the capacity recursion otherwise.
pub fn independent_class_count(n: usize) -> Result<u128, CensusError> {
    check_n(n, None)?;
    if chords_per_row(n) == 1 {
        Ok(permanent(&chord_allowed_matrix(n)) as u128)
    } else {
        Ok(count_chord_completions(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permanent_of_small_matrices() {
        assert_eq!(permanent(&[vec![1, 1], vec![1, 1]]), 2);
        assert_eq!(permanent(&[vec![1, 0], vec![0, 1]]), 1);
        let j4 = vec![vec![1u8; 4]; 4];
        assert_eq!(permanent(&j4), 24);
    }

    #[test]
    fn menage_numbers_via_permanent() {
        // permutations avoiding sigma(i) in {i, i-1}: 1, 2, 13, 80, 579
        let expected = [(3, 1), (4, 2), (5, 13), (6, 80), (7, 579)];
        for (n, count) in expected {
            assert_eq!(permanent(&chord_allowed_matrix(n)), count, "n = {n}");
        }
    }

    #[test]
    fn two_counting_routes_agree_at_n6() {
        assert_eq!(count_chord_completions(6), 80);
        assert_eq!(independent_class_count(6).unwrap(), 80);
    }

    #[test]
    fn n8_count() {
        assert_eq!(independent_class_count(8).unwrap(), 1_867_363);
    }
}
