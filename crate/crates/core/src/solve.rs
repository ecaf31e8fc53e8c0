//! Exact linear-system solving over Z and Z/n.
//!
//! Over `IntegersMod(n)` a system `A x = b` is solved by lifting to the
//! integers as `[A | n*I] [x; t] = b`, so one Smith-normal-form engine serves
//! both rings.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::snf::{smith_normal_form, SmithDecomposition};

use num_integer::Integer;
use num_traits::Zero;

/// A factored linear system `A x = ?`, reusable across right-hand sides.
#[derive(Clone)]
pub struct LinearSystem {
    ring: RingSpec,
    rows: usize,
    /// unknowns of the original system
    x_cols: usize,
    /// columns of the lifted system (x unknowns plus lift unknowns)
    lifted_cols: usize,
    snf: SmithDecomposition,
}

impl LinearSystem {
    pub fn new(a: &Matrix) -> Self {
        let ring = a.ring().clone();
        let lifted = match ring.modulus() {
            None => a.lift(),
            Some(n) => a
                .lift()
                .hstack(&Matrix::scalar(RingSpec::Integers, a.rows(), n)),
        };
        LinearSystem {
            ring,
            rows: a.rows(),
            x_cols: a.cols(),
            lifted_cols: lifted.cols(),
            snf: smith_normal_form(&lifted),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// A particular solution of `A x = b`, if any.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.cols(), 1, "right-hand side must be a column");
        assert_eq!(b.rows(), self.rows, "right-hand side height mismatch");
        let c = self.snf.u.mul(&b.lift());
        let k = self.rows.min(self.lifted_cols);
        let mut y = Matrix::zero(RingSpec::Integers, self.lifted_cols, 1);
        for i in 0..k {
            let d = self.snf.d.get(i, i);
            let ci = c.get(i, 0);
            if d.is_zero() {
                if !ci.is_zero() {
                    return None;
                }
            } else {
                let (q, r) = ci.div_mod_floor(d);
                if !r.is_zero() {
                    return None;
                }
                y.set(i, 0, q);
            }
        }
        for i in k..self.rows {
            if !c.get(i, 0).is_zero() {
                return None;
            }
        }
        let full = self.snf.v.mul(&y);
        let x = full.select_rows(&(0..self.x_cols).collect::<Vec<_>>());
        Some(x.with_ring(self.ring.clone()))
    }

    /// Solve `A X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        let mut out = Matrix::zero(self.ring.clone(), self.x_cols, b.cols());
        for j in 0..b.cols() {
            let x = self.solve(&b.column(j))?;
            for i in 0..self.x_cols {
                out.set(i, j, x.get(i, 0).clone());
            }
        }
        Some(out)
    }

    pub fn contains(&self, b: &Matrix) -> bool {
        self.solve(b).is_some()
    }

    /// Generators of the solution set of `A x = 0`, as columns in the
    /// original ring. Zero columns (after reduction) are dropped.
    pub fn null_space(&self) -> Vec<Matrix> {
        let k = self.rows.min(self.lifted_cols);
        let mut gens = Vec::new();
        for j in 0..self.lifted_cols {
            let free = j >= k || self.snf.d.get(j, j).is_zero();
            if !free {
                continue;
            }
            let col = self.snf.v.column(j);
            let x = col
                .select_rows(&(0..self.x_cols).collect::<Vec<_>>())
                .with_ring(self.ring.clone());
            if !x.is_zero() {
                gens.push(x);
            }
        }
        gens
    }

    /// Null-space generators assembled into one `x_cols x k` matrix.
    pub fn null_space_matrix(&self) -> Matrix {
        let gens = self.null_space();
        let mut out = Matrix::zero(self.ring.clone(), self.x_cols, gens.len());
        for (j, g) in gens.iter().enumerate() {
            for i in 0..self.x_cols {
                out.set(i, j, g.get(i, 0).clone());
            }
        }
        out
    }
}

/// Solve `A x = b`; on success returns a particular solution together with
/// generators of the homogeneous solution set.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<(Matrix, Vec<Matrix>)>> {
    a.ring().same_ring(b.ring())?;
    if b.cols() != 1 || b.rows() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "system is {}x{}, right-hand side is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let sys = LinearSystem::new(a);
    Ok(sys.solve(b).map(|x| (x, sys.null_space())))
}

/// True iff `b` lies in the column span of `a`.
pub fn column_span_contains(a: &Matrix, b: &Matrix) -> Result<bool> {
    Ok(solve_linear(a, b)?.is_some())
}

/// One condition `left * H * right ≡ rhs (mod column span of modulus)` on an
/// unknown matrix `H`. All four matrices are over the integers; modular
/// arithmetic is handled by the solver.
#[derive(Clone, Debug)]
pub struct MatrixConstraint {
    pub left: Matrix,
    pub right: Matrix,
    pub rhs: Matrix,
    pub modulus: Matrix,
}

impl MatrixConstraint {
    /// Exact equation `left * H * right = rhs` (no modulus columns).
    pub fn exact(left: Matrix, right: Matrix, rhs: Matrix) -> Self {
        let rows = left.rows();
        MatrixConstraint {
            left,
            right,
            rhs,
            modulus: Matrix::zero(RingSpec::Integers, rows, 0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstraintSolution {
    pub particular: Matrix,
    /// Generators of the homogeneous solution space (same shape as the
    /// unknown), in the target ring, zero generators dropped.
    pub homogeneous: Vec<Matrix>,
}

/// Find all `rows x cols` matrices `H` over `ring` satisfying every
/// constraint simultaneously.
pub fn solve_matrix_constraints(
    ring: &RingSpec,
    rows: usize,
    cols: usize,
    constraints: &[MatrixConstraint],
) -> Option<ConstraintSolution> {
    let z = RingSpec::Integers;
    let dim = rows * cols;
    let mut blocks: Vec<Matrix> = Vec::new(); // one (rows_i x (dim + aux_i)) slice per constraint
    let mut rhs_parts: Vec<Matrix> = Vec::new();
    let mut aux_widths: Vec<usize> = Vec::new();
    for c in constraints {
        assert_eq!(c.left.cols(), rows, "constraint left width");
        assert_eq!(c.right.rows(), cols, "constraint right height");
        assert_eq!(c.rhs.rows(), c.left.rows(), "constraint rhs height");
        assert_eq!(c.rhs.cols(), c.right.cols(), "constraint rhs width");
        assert_eq!(c.modulus.rows(), c.left.rows(), "constraint modulus height");
        let mut modulus = c.modulus.clone();
        if let Some(n) = ring.modulus() {
            modulus = modulus.hstack(&Matrix::scalar(z.clone(), c.left.rows(), n));
        }
        let coeff = c.right.transpose().kronecker(&c.left);
        let aux = Matrix::identity(z.clone(), c.rhs.cols()).kronecker(&modulus);
        blocks.push(coeff.hstack(&aux));
        rhs_parts.push(c.rhs.vectorize());
        aux_widths.push(aux.cols());
    }
    // Assemble the block system: H-columns shared, aux columns per constraint.
    let total_aux: usize = aux_widths.iter().sum();
    let total_rows: usize = blocks.iter().map(Matrix::rows).sum();
    let mut big = Matrix::zero(z.clone(), total_rows, dim + total_aux);
    let mut rhs = Matrix::zero(z.clone(), total_rows, 1);
    let mut row0 = 0usize;
    let mut aux0 = dim;
    for (bi, block) in blocks.iter().enumerate() {
        for i in 0..block.rows() {
            for j in 0..dim {
                big.set(row0 + i, j, block.get(i, j).clone());
            }
            for j in 0..aux_widths[bi] {
                big.set(row0 + i, aux0 + j, block.get(i, dim + j).clone());
            }
            rhs.set(row0 + i, 0, rhs_parts[bi].get(i, 0).clone());
        }
        row0 += block.rows();
        aux0 += aux_widths[bi];
    }
    let sys = LinearSystem::new(&big);
    let sol = sys.solve(&rhs)?;
    let h_rows: Vec<usize> = (0..dim).collect();
    let particular = Matrix::unvectorize(
        ring.clone(),
        rows,
        cols,
        &sol.select_rows(&h_rows).with_ring(ring.clone()),
    );
    let mut homogeneous = Vec::new();
    for g in sys.null_space() {
        let h = Matrix::unvectorize(
            ring.clone(),
            rows,
            cols,
            &g.select_rows(&h_rows).with_ring(ring.clone()),
        );
        if !h.is_zero() {
            homogeneous.push(h);
        }
    }
    Some(ConstraintSolution {
        particular,
        homogeneous,
    })
}
