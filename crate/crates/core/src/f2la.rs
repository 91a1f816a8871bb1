//! Bit-packed linear algebra over the two-element field.
//!
//! Cocycle systems at order 64 have rows of ~4000 bits fed by a quarter of
//! a million streamed constraints, so the row basis never materializes the
//! constraint matrix: each incoming row is reduced against the echelon
//! basis and either absorbed or installed at its pivot.

use crate::error::{Error, Result};

/// Fixed-length vector over F2, packed 64 bits per word.
///
/// Trailing bits past `len` are kept zero so that equality and hashing on
/// the word slice are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Build from a set of positions, XOR-ing repeats (mod-2 multiplicity).
    pub fn from_positions(len: usize, positions: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &p in positions {
            v.toggle(p);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit at or after `from`, if any.
    #[inline]
    pub fn leading_bit_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from / 64;
        let mut w = self.words[wi] & (u64::MAX << (from % 64));
        loop {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn leading_bit(&self) -> Option<usize> {
        self.leading_bit_from(0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the AND of two vectors: the F2 dot product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let mut acc = 0u64;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= w & o;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Render as a 0/1 string, low index first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVec[{}]", self.to_bitstring())
    }
}

/// Outcome of feeding a row into a [`RowBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddRow {
    /// The row was already in the span.
    Absorbed,
    /// The row extended the span; its pivot column is given.
    Inserted(usize),
}

/// Row-echelon basis of a subspace of F2^width, rows indexed by pivot column.
///
/// Rows are kept echelon (each row's leading 1 is its pivot and no two rows
/// share a pivot). Full back-reduction to the canonical reduced form is done
/// lazily, so streaming a few hundred thousand rows through `add_row` only
/// pays for forward reduction.
#[derive(Clone)]
pub struct RowBasis {
    width: usize,
    slots: Vec<Option<BitVec>>,
    rank: usize,
    reduced: bool,
}

impl RowBasis {
    pub fn new(width: usize) -> Self {
        RowBasis {
            width,
            slots: vec![None; width],
            rank: 0,
            reduced: true,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce `v` in place against the basis; on return `v` is zero iff it
    /// was in the span, otherwise its leading bit is a fresh pivot column.
    ///
    /// This walk stops at the first non-pivot leading bit, so it decides
    /// membership and insertion points but is NOT the linear projection
    /// modulo the span; use [`RowBasis::reduce_fully`] for that.
    pub fn reduce(&self, v: &mut BitVec) {
        let mut from = 0;
        while let Some(p) = v.leading_bit_from(from) {
            match &self.slots[p] {
                Some(row) => v.xor_assign(row),
                None => return,
            }
            from = p + 1;
        }
    }

    /// Clear every pivot coordinate of `v`: the linear projection onto the
    /// complement of the span whose kernel is exactly the span. Canonical
    /// once the basis is canonicalized.
    pub fn reduce_fully(&self, v: &mut BitVec) {
        for p in 0..self.width {
            if let Some(row) = &self.slots[p] {
                if v.get(p) {
                    v.xor_assign(row);
                }
            }
        }
    }

    pub fn member(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.width, "width mismatch in member");
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn add_row(&mut self, mut v: BitVec) -> Result<AddRow> {
        if v.len() != self.width {
            return Err(Error::invariant(format!(
                "row length {} does not match basis width {}",
                v.len(),
                self.width
            )));
        }
        self.reduce(&mut v);
        match v.leading_bit() {
            None => Ok(AddRow::Absorbed),
            Some(p) => {
                self.slots[p] = Some(v);
                self.rank += 1;
                self.reduced = false;
                Ok(AddRow::Inserted(p))
            }
        }
    }

    /// Streamed sparse insertion: the row is the XOR of unit vectors at
    /// `positions` (repeats cancel). Avoids allocating when the expanded
    /// row is trivially absorbed.
    pub fn add_sparse(&mut self, positions: &[usize]) -> Result<AddRow> {
        self.add_row(BitVec::from_positions(self.width, positions))
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&i| self.slots[i].is_some()).collect()
    }

    /// Back-reduce so every pivot column is cleared in all other rows.
    /// The result depends only on the row span, giving reproducible bases.
    pub fn canonicalize(&mut self) {
        if self.reduced {
            return;
        }
        let pivots = self.pivots();
        for (k, &p) in pivots.iter().enumerate().rev() {
            let row = self.slots[p].take().expect("pivot slot");
            for &q in &pivots[..k] {
                let upper = self.slots[q].as_mut().expect("pivot slot");
                if upper.get(p) {
                    upper.xor_assign(&row);
                }
            }
            self.slots[p] = Some(row);
        }
        self.reduced = true;
    }

    /// Rows in pivot order. Canonicalizes first so the output is the
    /// reduced echelon form of the span.
    pub fn rows(&mut self) -> Vec<BitVec> {
        self.canonicalize();
        (0..self.width)
            .filter_map(|i| self.slots[i].clone())
            .collect()
    }

    /// Rows in pivot order without canonicalizing (echelon, not reduced).
    pub fn raw_rows(&self) -> Vec<&BitVec> {
        (0..self.width)
            .filter_map(|i| self.slots[i].as_ref())
            .collect()
    }

    /// Basis of the right kernel {x : r.x = 0 for every row r}.
    ///
    /// One kernel vector per free column: the vector with 1 at that column,
    /// 0 at every other free column, and pivot coordinates solved by back
    /// substitution. This is canonical for the row span regardless of the
    /// insertion history.
    pub fn kernel_basis(&self) -> RowBasis {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.width];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = RowBasis::new(self.width);
        for j in 0..self.width {
            if is_pivot[j] {
                continue;
            }
            let mut x = BitVec::zeros(self.width);
            x.set(j, true);
            // Solve pivot coordinates from high pivot to low.
            for &p in pivots.iter().rev() {
                if p > j {
                    continue;
                }
                let row = self.slots[p].as_ref().expect("pivot slot");
                if row.dot(&x) {
                    x.set(p, true);
                }
            }
            let added = kernel.add_row(x).expect("kernel width");
            debug_assert!(matches!(added, AddRow::Inserted(_)));
        }
        kernel
    }

    /// Basis of the annihilator {y : r.y = 0 for all r in span}: same as the
    /// right kernel of the row matrix.
    pub fn annihilator(&self) -> RowBasis {
        self.kernel_basis()
    }
}

impl std::fmt::Debug for RowBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RowBasis(width={}, rank={})", self.width, self.rank)
    }
}

/// Intersection of subspaces, via kernels of the stacked annihilators:
/// the intersection is the annihilator of the sum of the annihilators.
pub fn intersect(spans: &[&RowBasis]) -> Result<RowBasis> {
    let width = match spans.first() {
        Some(s) => s.width(),
        None => return Err(Error::invariant("intersect of empty list".to_string())),
    };
    let mut stacked = RowBasis::new(width);
    for s in spans {
        if s.width() != width {
            return Err(Error::invariant(format!(
                "intersect width mismatch: {} vs {}",
                s.width(),
                width
            )));
        }
        for row in s.annihilator().raw_rows() {
            stacked.add_row(row.clone())?;
        }
    }
    Ok(stacked.annihilator())
}

pub fn quotient_dim(ambient_dim: usize, sub: &RowBasis) -> usize {
    ambient_dim - sub.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(width: usize, i: usize) -> BitVec {
        BitVec::from_positions(width, &[i])
    }

    #[test]
    fn add_duplicate_is_absorbed() {
        let mut b = RowBasis::new(8);
        assert_eq!(b.add_row(unit(8, 1)).unwrap(), AddRow::Inserted(1));
        assert_eq!(b.add_row(unit(8, 1)).unwrap(), AddRow::Absorbed);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn dependent_row_is_absorbed() {
        let mut b = RowBasis::new(8);
        b.add_row(unit(8, 1)).unwrap();
        b.add_row(unit(8, 2)).unwrap();
        assert_eq!(
            b.add_row(BitVec::from_positions(8, &[1, 2])).unwrap(),
            AddRow::Absorbed
        );
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn length_mismatch_is_error() {
        let mut b = RowBasis::new(8);
        assert!(b.add_row(unit(9, 1)).is_err());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let b = RowBasis::new(5);
        assert_eq!(b.kernel_basis().rank(), 5);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let mut b = RowBasis::new(4);
        for i in 0..4 {
            b.add_row(unit(4, i)).unwrap();
        }
        assert_eq!(b.kernel_basis().rank(), 0);
    }

    // Small deterministic generator for random-looking test matrices,
    // stable across toolchains.
    fn splitmix(state: &mut u64) -> u64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn random_vec(width: usize, state: &mut u64) -> BitVec {
        let mut v = BitVec::zeros(width);
        for i in 0..width {
            if splitmix(state) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let mut state = 0xc0ffee;
        for trial in 0..20 {
            let width = 30;
            let nrows = 20;
            let mut rows = Vec::new();
            let mut basis = RowBasis::new(width);
            for _ in 0..nrows {
                let v = random_vec(width, &mut state);
                basis.add_row(v.clone()).unwrap();
                rows.push(v);
            }
            let kernel = basis.kernel_basis();
            assert_eq!(
                basis.rank() + kernel.rank(),
                width,
                "rank-nullity failed on trial {trial}"
            );
            // Every kernel vector annihilates every original row.
            for k in kernel.raw_rows() {
                for r in &rows {
                    assert!(!r.dot(k));
                }
            }
        }
    }

    /// Exhaustive membership scan over all of F2^10: the oracle for
    /// intersect. Enumerates all 1024 vectors and checks membership in
    /// every operand directly.
    #[test]
    fn intersect_matches_exhaustive_scan() {
        let width = 10;
        let mut state = 0xfeedbeef;
        for trial in 0..10 {
            let mut spans = Vec::new();
            for _ in 0..3 {
                let mut b = RowBasis::new(width);
                for _ in 0..5 {
                    b.add_row(random_vec(width, &mut state)).unwrap();
                }
                spans.push(b);
            }
            let refs: Vec<&RowBasis> = spans.iter().collect();
            let meet = intersect(&refs).unwrap();

            let mut expected = 0usize;
            for bits in 0..1u32 << width {
                let v = BitVec::from_positions(
                    width,
                    &(0..width).filter(|&i| bits >> i & 1 == 1).collect::<Vec<_>>(),
                );
                if spans.iter().all(|s| s.member(&v)) {
                    expected += 1;
                    assert!(meet.member(&v), "scan vector missing from meet, trial {trial}");
                } else {
                    assert!(!meet.member(&v), "extra vector in meet, trial {trial}");
                }
            }
            assert_eq!(1usize << meet.rank(), expected);
        }
    }

    #[test]
    fn intersect_is_idempotent() {
        let mut state = 0xabcdef;
        let mut b = RowBasis::new(12);
        for _ in 0..6 {
            b.add_row(random_vec(12, &mut state)).unwrap();
        }
        let meet = intersect(&[&b, &b]).unwrap();
        assert_eq!(meet.rank(), b.rank());
        for row in meet.raw_rows() {
            assert!(b.member(row));
        }
    }

    #[test]
    fn intersect_of_coordinate_planes() {
        let mut u = RowBasis::new(4);
        u.add_row(unit(4, 0)).unwrap();
        u.add_row(unit(4, 1)).unwrap();
        let mut v = RowBasis::new(4);
        v.add_row(unit(4, 1)).unwrap();
        v.add_row(unit(4, 2)).unwrap();
        let mut meet = intersect(&[&u, &v]).unwrap();
        assert_eq!(meet.rank(), 1);
        assert_eq!(meet.rows()[0], unit(4, 1));
    }

    #[test]
    fn quotient_dim_is_codimension() {
        let mut b = RowBasis::new(7);
        b.add_row(unit(7, 3)).unwrap();
        b.add_row(unit(7, 5)).unwrap();
        assert_eq!(quotient_dim(7, &b), 5);
    }
}
