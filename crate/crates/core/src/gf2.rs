//! Dense matrices over the two-element field with bitset rows.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> F2Matrix {
        let words = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn from_rows(rows: &[Vec<bool>], cols: usize) -> F2Matrix {
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if b {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            let w = self.words;
            for k in 0..w {
                self.data.swap(a * w + k, b * w + k);
            }
        }
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j) && x[j]).count() % 2 == 1)
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot column of each nonzero row.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(p, r);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column (in increasing order).
    pub fn nullspace(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![false; self.cols];
                x[f] = true;
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        x[p] = true;
                    }
                }
                x
            })
            .collect()
    }

    /// Some solution of `Mx = b` (free variables set to zero), if any exists.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols);
        }
        Some(x)
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols)
            .map(|j| if self.get(i, j) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| self.row_string(i)).collect();
        write!(f, "F2Matrix{rows:?}")
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<String> = (0..self.rows).map(|i| self.row_string(i)).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(bits: &[u8], rows: usize, cols: usize) -> F2Matrix {
        let mut m = F2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, bits[i * cols + j] & 1 == 1);
            }
        }
        m
    }

    #[test]
    fn small_system() {
        let m = F2Matrix::from_rows(&[vec![true, true, false], vec![false, true, true]], 3);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![true, true, true]]);
        let x = m.solve(&[true, false]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![true, false]);
        let inconsistent = F2Matrix::from_rows(&[vec![true], vec![true]], 1);
        assert!(inconsistent.solve(&[true, false]).is_none());
    }

    #[test]
    fn wide_rows() {
        let mut m = F2Matrix::zeros(2, 150);
        m.set(0, 140, true);
        m.set(1, 3, true);
        m.set(1, 140, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullspace().len(), 148);
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_null(bits in prop::collection::vec(0u8..2, 30), rows in 1usize..6) {
            let cols = 30 / rows;
            let m = matrix(&bits, rows, cols);
            let ns = m.nullspace();
            prop_assert_eq!(ns.len() + m.rank(), cols);
            for x in ns {
                prop_assert!(m.mul_vec(&x).iter().all(|&b| !b));
            }
        }

        #[test]
        fn solutions_solve(bits in prop::collection::vec(0u8..2, 24), rhs in prop::collection::vec(any::<bool>(), 4)) {
            let m = matrix(&bits, 4, 6);
            if let Some(x) = m.solve(&rhs) {
                prop_assert_eq!(m.mul_vec(&x), rhs);
            } else {
                // Inconsistent: brute force agrees.
                let any = (0..64u32).any(|c| {
                    let x: Vec<bool> = (0..6).map(|j| c >> j & 1 == 1).collect();
                    m.mul_vec(&x) == rhs
                });
                prop_assert!(!any);
            }
        }
    }
}
