//! Todd-Coxeter coset enumeration over the trivial subgroup, HLT strategy
//! with a fixed relator-cycling order so results are deterministic.
//!
//! Exceeding the coset cap is a resource error and nothing more: a failed
//! enumeration never certifies that the presented group is infinite.

use crate::error::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// Columns: 2k is the action of generator k, 2k+1 of its inverse.
struct Table {
    ncols: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    limit: usize,
}

impl Table {
    fn new(ngens: usize, limit: usize) -> Table {
        Table {
            ncols: 2 * ngens,
            rows: vec![UNDEF; 2 * ngens],
            parent: vec![0],
            limit,
        }
    }

    fn ncosets(&self) -> usize {
        self.parent.len()
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let p = self.parent[c as usize];
            self.parent[c as usize] = self.parent[p as usize];
            c = self.parent[c as usize];
        }
        c
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.ncols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, d: u32) {
        self.rows[c as usize * self.ncols + col] = d;
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32> {
        if self.ncosets() >= self.limit {
            return Err(Error::Resource {
                what: "coset table".into(),
                limit: self.limit,
            });
        }
        let d = self.ncosets() as u32;
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(d)
    }

    /// Queue-driven coincidence processing; the smaller index survives.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = std::collections::VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..self.ncols {
                let d = self.get(dead, col);
                if d == UNDEF {
                    continue;
                }
                let keep = self.rep(dead);
                let d = self.rep(d);
                let existing = self.get(keep, col);
                if existing != UNDEF {
                    self.merge(existing, d, &mut queue);
                } else {
                    let back = self.get(d, col ^ 1);
                    if back != UNDEF {
                        self.merge(back, keep, &mut queue);
                        // Re-read after potential merges.
                        let keep = self.rep(keep);
                        let d = self.rep(d);
                        self.set(keep, col, d);
                        self.set(d, col ^ 1, keep);
                    } else {
                        self.set(keep, col, d);
                        self.set(d, col ^ 1, keep);
                    }
                }
            }
        }
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut std::collections::VecDeque<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, die) = if a < b { (a, b) } else { (b, a) };
        self.parent[die as usize] = keep;
        queue.push_back(die);
    }

    fn scan_and_fill(&mut self, start: u32, word: &[usize]) -> Result<()> {
        let mut f = self.rep(start);
        let mut b = f;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j {
                let next = self.get(f, word[i]);
                if next == UNDEF {
                    break;
                }
                f = self.rep(next);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            while j > i {
                let next = self.get(b, word[j - 1] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = self.rep(next);
                j -= 1;
            }
            if j == i {
                // Both scans met across the same position.
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                // Deduction closes the scan.
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            let d = self.define(f, word[i])?;
            f = self.rep(f);
            // The freshly defined coset may already have been merged away.
            let _ = d;
        }
    }
}

/// Enumerate the cosets of the trivial subgroup in the group presented by
/// `relators` (signed tokens, +-(k+1) for generator k).
///
/// Returns one row per group element: row[c][k] is the coset of c * gen_k.
/// Row 0 is the identity and rows are renumbered in breadth-first order
/// over the positive generator columns, so output is canonical.
pub fn enumerate_cosets(
    ngens: usize,
    relators: &[Vec<i32>],
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    let words: Vec<Vec<usize>> = relators
        .iter()
        .map(|rel| {
            rel.iter()
                .map(|&t| {
                    let g = (t.unsigned_abs() as usize - 1) * 2;
                    if t < 0 {
                        g + 1
                    } else {
                        g
                    }
                })
                .collect()
        })
        .collect();
    let mut table = Table::new(ngens, limit);
    let mut alpha: u32 = 0;
    while (alpha as usize) < table.ncosets() {
        if table.rep(alpha) != alpha {
            alpha += 1;
            continue;
        }
        for word in &words {
            table.scan_and_fill(alpha, word)?;
            if table.rep(alpha) != alpha {
                break;
            }
        }
        if table.rep(alpha) == alpha {
            // Fill any remaining columns so the table closes.
            for col in 0..table.ncols {
                if table.rep(alpha) != alpha {
                    break;
                }
                let a = table.rep(alpha);
                if table.get(a, col) == UNDEF {
                    table.define(a, col)?;
                }
            }
        }
        alpha += 1;
    }
    // Collect live cosets and fold dead references through rep().
    let live: Vec<u32> = (0..table.ncosets() as u32)
        .filter(|&c| table.rep(c) == c)
        .collect();
    let mut compact = vec![usize::MAX; table.ncosets()];
    for (i, &c) in live.iter().enumerate() {
        compact[c as usize] = i;
    }
    let n = live.len();
    let mut action = vec![vec![usize::MAX; ngens]; n];
    for (i, &c) in live.iter().enumerate() {
        for k in 0..ngens {
            let d = table.get(c, 2 * k);
            debug_assert_ne!(d, UNDEF, "completed table has no gaps");
            action[i][k] = compact[table.rep(d) as usize];
        }
    }
    // Canonical renumbering: BFS from the identity coset over generator
    // columns in generator order.
    let start = compact[table.rep(0) as usize];
    let mut order = vec![usize::MAX; n];
    let mut bfs = vec![start];
    order[start] = 0;
    let mut head = 0;
    while head < bfs.len() {
        let c = bfs[head];
        for k in 0..ngens {
            let d = action[c][k];
            if order[d] == usize::MAX {
                order[d] = bfs.len();
                bfs.push(d);
            }
        }
        head += 1;
    }
    if bfs.len() != n {
        return Err(Error::invariant(
            "coset table not transitive over generators",
        ));
    }
    let mut out = vec![vec![0usize; ngens]; n];
    for (c, row) in action.iter().enumerate() {
        for k in 0..ngens {
            out[order[c]][k] = order[row[k]];
        }
    }
    Ok(out)
}
