//! Smith and Hermite normal forms over the integers.
//!
//! Pivot selection is fixed (smallest absolute value, ties by lowest
//! `(row, col)`), so identical inputs produce bit-identical outputs.

use crate::matrix::Matrix;
use crate::ring::RingSpec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `u * m * v = d` with `d` diagonal, non-negative, `d1 | d2 | ...`, and
/// `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `d` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

struct Worker {
    a: Matrix,
    u: Matrix,
    v: Matrix,
}

impl Worker {
    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.a.cols() {
            let t = self.a.get(i, j).clone();
            self.a.set(i, j, self.a.get(k, j).clone());
            self.a.set(k, j, t);
        }
        for j in 0..self.u.cols() {
            let t = self.u.get(i, j).clone();
            self.u.set(i, j, self.u.get(k, j).clone());
            self.u.set(k, j, t);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.a.rows() {
            let t = self.a.get(i, j).clone();
            self.a.set(i, j, self.a.get(i, k).clone());
            self.a.set(i, k, t);
        }
        for i in 0..self.v.rows() {
            let t = self.v.get(i, j).clone();
            self.v.set(i, j, self.v.get(i, k).clone());
            self.v.set(i, k, t);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols() {
            let t = -self.a.get(i, j);
            self.a.set(i, j, t);
        }
        for j in 0..self.u.cols() {
            let t = -self.u.get(i, j);
            self.u.set(i, j, t);
        }
    }

    /// row_i += c * row_k
    fn add_row(&mut self, i: usize, k: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.a.cols() {
            let t = self.a.get(i, j) + c * self.a.get(k, j);
            self.a.set(i, j, t);
        }
        for j in 0..self.u.cols() {
            let t = self.u.get(i, j) + c * self.u.get(k, j);
            self.u.set(i, j, t);
        }
    }

    /// col_j += c * col_k
    fn add_col(&mut self, j: usize, k: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.a.rows() {
            let t = self.a.get(i, j) + c * self.a.get(i, k);
            self.a.set(i, j, t);
        }
        for i in 0..self.v.rows() {
            let t = self.v.get(i, j) + c * self.v.get(i, k);
            self.v.set(i, j, t);
        }
    }

    /// Smallest |entry| != 0 in `a[t.., t..]`, ties by lowest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                match &best {
                    Some((b, _, _)) if *b <= abs => {}
                    _ => best = Some((abs, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &Matrix) -> SmithDecomposition {
    assert_eq!(
        *m.ring(),
        RingSpec::Integers,
        "smith_normal_form is defined over the integers"
    );
    let mut w = Worker {
        a: m.clone(),
        u: Matrix::identity(RingSpec::Integers, m.rows()),
        v: Matrix::identity(RingSpec::Integers, m.cols()),
    };
    let steps = m.rows().min(m.cols());
    for t in 0..steps {
        while let Some((pi, pj)) = w.pivot(t) {
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if w.a.get(t, t).is_negative() {
                w.negate_row(t);
            }
            let p = w.a.get(t, t).clone();
            for i in t + 1..w.a.rows() {
                let q = w.a.get(i, t).div_floor(&p);
                w.add_row(i, t, &-q);
            }
            for j in t + 1..w.a.cols() {
                let q = w.a.get(t, j).div_floor(&p);
                w.add_col(j, t, &-q);
            }
            let col_clear = (t + 1..w.a.rows()).all(|i| w.a.get(i, t).is_zero());
            let row_clear = (t + 1..w.a.cols()).all(|j| w.a.get(t, j).is_zero());
            if !col_clear || !row_clear {
                continue;
            }
            // Enforce the divisibility chain: fold a bad row into row t and
            // keep reducing.
            let mut bad = None;
            'scan: for i in t + 1..w.a.rows() {
                for j in t + 1..w.a.cols() {
                    if !w.a.get(i, j).mod_floor(&p).is_zero() {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    w.add_row(t, i, &one);
                }
                None => break,
            }
        }
    }

    SmithDecomposition {
        d: w.a,
        u: w.u,
        v: w.v,
    }
}

/// Canonical basis of the row lattice of `m`: the row Hermite normal form
/// with positive pivots, entries above each pivot reduced into `[0, pivot)`,
/// and zero rows dropped.
pub fn row_hermite_basis(m: &Matrix) -> Matrix {
    assert_eq!(*m.ring(), RingSpec::Integers, "hermite form is over Z");
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row_vec(i)).collect();
    let rows = m.rows();
    let cols = m.cols();
    let mut r = 0usize;
    for j in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // pivot: smallest nonzero |a[i][j]| for i >= r, ties lowest i
            let mut best: Option<(BigInt, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(r) {
                let v = &row[j];
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                match &best {
                    Some((b, _)) if *b <= abs => {}
                    _ => best = Some((abs, i)),
                }
            }
            let Some((_, pi)) = best else {
                break;
            };
            a.swap(r, pi);
            if a[r][j].is_negative() {
                for v in a[r].iter_mut() {
                    *v = -std::mem::take(v);
                }
            }
            let p = a[r][j].clone();
            let pivot_row = a[r].clone();
            let reduce = |row: &mut Vec<BigInt>, q: &BigInt| {
                for (c, cell) in row.iter_mut().enumerate() {
                    *cell = &*cell - q * &pivot_row[c];
                }
            };
            let mut dirty = false;
            for row in a.iter_mut().skip(r + 1) {
                if row[j].is_zero() {
                    continue;
                }
                let q = row[j].div_floor(&p);
                reduce(row, &q);
                if !row[j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // reduce entries above the pivot into [0, p)
                for row in a.iter_mut().take(r) {
                    let q = row[j].div_floor(&p);
                    if !q.is_zero() {
                        reduce(row, &q);
                    }
                }
                r += 1;
                break;
            }
        }
    }
    let kept: Vec<Vec<BigInt>> = a.into_iter().take(r).collect();
    if kept.is_empty() {
        Matrix::zero(RingSpec::Integers, 0, cols)
    } else {
        Matrix::from_rows(RingSpec::Integers, kept)
    }
}

/// Canonical basis of the column lattice of `m` (columns of the result).
pub fn column_hermite_basis(m: &Matrix) -> Matrix {
    row_hermite_basis(&m.transpose()).transpose()
}
