use crate::graph::BalancedBipartiteGraph;

use super::{allowed_columns, check_n, chords_per_row, hamilton_rows, CensusError, CLASS_CAP};

/// Streams every chord matrix with line sums `n/2 - 2` that avoids the
/// Hamilton positions, as a graph in canonical labeling.
///
/// Rows are filled in order; each row tries its admissible column sets in
/// lexicographic order, so the stream is deterministic and duplicate-free.
/// The members are labeled graphs with a distinguished Hamilton cycle, not
/// isomorphism classes.
#[derive(Debug, Clone)]
pub struct ClassEnumeration {
    n: usize,
    hamilton: Vec<u64>,
    /// Admissible chord sets per row, lexicographic.
    combos: Vec<Vec<u64>>,
    /// `reach[i][c]`: rows `i..n` that may still put a chord in column `c`.
    reach: Vec<Vec<u8>>,
    caps: Vec<u8>,
    chosen: Vec<usize>,
    /// Rows `0..fixed` belong to the prefix and are never backtracked.
    fixed: usize,
    depth: usize,
    target: usize,
    next_choice: usize,
    started: bool,
    done: bool,
    yielded: u64,
}

/// Enumerates the class for even `6 <= n <= CLASS_CAP`.
pub fn enumerate_class(n: usize) -> Result<ClassEnumeration, CensusError> {
    check_n(n, Some(CLASS_CAP))?;
    Ok(ClassEnumeration::new(n, n))
}

/// As [`enumerate_class`] without the size cap. Counts grow very quickly
/// (n = 10 already has about 6.6e12 members).
pub fn enumerate_class_uncapped(n: usize) -> Result<ClassEnumeration, CensusError> {
    check_n(n, None)?;
    Ok(ClassEnumeration::new(n, n))
}

impl ClassEnumeration {
    fn new(n: usize, target: usize) -> Self {
        let r = chords_per_row(n);
        let combos: Vec<Vec<u64>> = (0..n).map(|i| subsets(allowed_columns(n, i), r)).collect();
        let mut reach = vec![vec![0u8; n]; n + 1];
        for i in (0..n).rev() {
            let allowed = allowed_columns(n, i);
            for c in 0..n {
                reach[i][c] = reach[i + 1][c] + (allowed >> c & 1) as u8;
            }
        }
        Self {
            n,
            hamilton: hamilton_rows(n),
            combos,
            reach,
            caps: vec![r as u8; n],
            chosen: vec![0; n],
            fixed: 0,
            depth: 0,
            target,
            next_choice: 0,
            started: false,
            done: false,
            yielded: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Members produced so far.
    pub fn yielded(&self) -> u64 {
        self.yielded
    }

    /// Splits the stream into disjoint subtrees, one per feasible choice of
    /// the first `depth` chord rows. Concatenating the subtrees in order
    /// reproduces the full stream.
    pub fn partitions(&self, depth: usize) -> Vec<ClassEnumeration> {
        let depth = depth.min(self.n);
        let mut prefixes = ClassEnumeration::new(self.n, depth);
        let mut out = Vec::new();
        while prefixes.advance() {
            let mut sub = ClassEnumeration::new(self.n, self.n);
            for row in 0..depth {
                sub.assign(row, prefixes.chosen[row]);
            }
            sub.fixed = depth;
            sub.depth = depth;
            out.push(sub);
        }
        out
    }

    fn assign(&mut self, row: usize, idx: usize) {
        let combo = self.combos[row][idx];
        for c in bits(combo) {
            self.caps[c] -= 1;
        }
        self.chosen[row] = idx;
    }

    fn unassign(&mut self, row: usize) {
        let combo = self.combos[row][self.chosen[row]];
        for c in bits(combo) {
            self.caps[c] += 1;
        }
    }

    fn fits(&self, row: usize, combo: u64) -> bool {
        let n = self.n;
        (0..n).all(|c| {
            let take = (combo >> c & 1) as u8;
            take <= self.caps[c] && self.caps[c] - take <= self.reach[row + 1][c]
        })
    }

    /// Moves to the next complete assignment of rows `0..target`.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            self.depth = self.fixed;
            self.next_choice = 0;
            if self.fixed == self.target {
                return true;
            }
        } else {
            if self.depth == self.fixed {
                self.done = true;
                return false;
            }
            self.depth -= 1;
            self.unassign(self.depth);
            self.next_choice = self.chosen[self.depth] + 1;
        }
        loop {
            let row = self.depth;
            let found = (self.next_choice..self.combos[row].len())
                .find(|&idx| self.fits(row, self.combos[row][idx]));
            match found {
                Some(idx) => {
                    self.assign(row, idx);
                    self.depth += 1;
                    self.next_choice = 0;
                    if self.depth == self.target {
                        return true;
                    }
                }
                None => {
                    if self.depth == self.fixed {
                        self.done = true;
                        return false;
                    }
                    self.depth -= 1;
                    self.unassign(self.depth);
                    self.next_choice = self.chosen[self.depth] + 1;
                }
            }
        }
    }

    fn current_graph(&self) -> BalancedBipartiteGraph {
        let rows = (0..self.n)
            .map(|i| self.hamilton[i] | self.combos[i][self.chosen[i]])
            .collect();
        BalancedBipartiteGraph::from_rows(self.n, rows)
    }
}

impl Iterator for ClassEnumeration {
    type Item = BalancedBipartiteGraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.advance() {
            self.yielded += 1;
            Some(self.current_graph())
        } else {
            None
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// All `r`-element subsets of `mask`, in lexicographic order of their sorted elements.
fn subsets(mask: u64, r: usize) -> Vec<u64> {
    let cols: Vec<usize> = bits(mask).collect();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(r);
    fn go(cols: &[usize], start: usize, r: usize, stack: &mut Vec<usize>, out: &mut Vec<u64>) {
        if stack.len() == r {
            out.push(stack.iter().fold(0u64, |m, &c| m | 1 << c));
            return;
        }
        for k in start..cols.len() {
            stack.push(cols[k]);
            go(cols, k + 1, r, stack, out);
            stack.pop();
        }
    }
    go(&cols, 0, r, &mut stack, &mut out);
    out
}
