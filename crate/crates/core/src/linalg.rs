//! Exact linear algebra over finite fields: reduced row-echelon forms,
//! kernels, and subspace lattice operations.
//!
//! Subspaces are always stored with their basis in canonical RREF, so
//! equality of subspaces is plain comparison of basis matrices.

use std::fmt;

use crate::error::Error;
use crate::field::{Field, FieldElement};

/// A dense rows-by-cols matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major elements; all must belong to `field`.
    pub fn from_elements(
        field: &Field,
        rows: usize,
        cols: usize,
        entries: &[FieldElement],
    ) -> Result<Matrix, Error> {
        if entries.len() != rows * cols {
            return Err(Error::AmbientMismatch);
        }
        let mut data = Vec::with_capacity(entries.len());
        for e in entries {
            field.require_same(e.field())?;
            data.push(e.raw());
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub(crate) fn from_raw_rows(field: &Field, cols: usize, rows: Vec<Vec<u64>>) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(&r);
        }
        Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols);
        self.field.elem(self.data[i * self.cols + j])
    }

    #[inline]
    pub(crate) fn raw(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Canonical reduced row-echelon form and rank. Pivots are found in
    /// column order and normalized to 1, so the result is deterministic.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.reduce_in_place();
        m.data.truncate(rank * m.cols);
        m.data.resize(m.rows * m.cols, 0);
        (m, rank)
    }

    fn reduce_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(r) = (pivot_row..rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if r != pivot_row {
                for j in 0..cols {
                    self.data.swap(r * cols + j, pivot_row * cols + j);
                }
            }
            let inv = f.inv_raw(self.data[pivot_row * cols + col]);
            if inv != 1 {
                for j in col..cols {
                    let v = self.data[pivot_row * cols + j];
                    self.data[pivot_row * cols + j] = f.mul_raw(v, inv);
                }
            }
            for r2 in 0..rows {
                if r2 == pivot_row {
                    continue;
                }
                let factor = self.data[r2 * cols + col];
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = f.mul_raw(factor, self.data[pivot_row * cols + j]);
                    let v = self.data[r2 * cols + j];
                    self.data[r2 * cols + j] = f.sub_raw(v, sub);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place()
    }

    /// The right kernel {v : self * v^T = 0} as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let cols = self.cols;
        let mut pivot_cols = Vec::with_capacity(rank);
        for row in 0..rank {
            let pc = (0..cols).find(|&j| r.raw(row, j) != 0).expect("nonzero row");
            pivot_cols.push(pc);
        }
        let is_pivot = {
            let mut v = vec![false; cols];
            for &pc in &pivot_cols {
                v[pc] = true;
            }
            v
        };
        let mut rows = Vec::with_capacity(cols - rank);
        for free in (0..cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = self.field.neg_raw(r.raw(row, free));
            }
            rows.push(v);
        }
        Subspace::from_raw_rows(&self.field, cols, rows)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF({})",
            self.rows,
            self.cols,
            self.field.order()
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.format_raw(self.raw(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A linear subspace of K^n, stored as an RREF basis with no zero rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let (r, rank) = m.rref();
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field: m.field().clone(),
            ambient: m.cols(),
            basis: Matrix::from_raw_rows(m.field(), m.cols(), rows),
        }
    }

    pub(crate) fn from_raw_rows(field: &Field, ambient: usize, rows: Vec<Vec<u64>>) -> Subspace {
        let m = Matrix::from_raw_rows(field, ambient, rows);
        Subspace::from_matrix(&m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn require_compatible(&self, other: &Subspace) -> Result<(), Error> {
        if self.field != other.field || self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.require_compatible(other)?;
        let rows = (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .chain((0..other.dim()).map(|i| other.basis.row(i).to_vec()))
            .collect();
        Ok(Subspace::from_raw_rows(&self.field, self.ambient, rows))
    }

    /// Intersection computed through duality: (U^perp + V^perp)^perp.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.require_compatible(other)?;
        let du = self.dual();
        let dv = other.dual();
        Ok(du.sum(&dv)?.dual())
    }

    /// Annihilator under the standard dot product; also the kernel viewed as
    /// a subspace. dim + dual dim = ambient dim.
    pub fn dual(&self) -> Subspace {
        self.basis.kernel()
    }

    pub(crate) fn contains_raw(&self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut rem = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let pc = row.iter().position(|&x| x != 0).expect("nonzero basis row");
            let factor = rem[pc];
            if factor == 0 {
                continue;
            }
            for (slot, &rv) in rem.iter_mut().zip(row.iter()) {
                if rv != 0 {
                    *slot = f.sub_raw(*slot, f.mul_raw(factor, rv));
                }
            }
        }
        rem.iter().all(|&x| x == 0)
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool, Error> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut raw = Vec::with_capacity(v.len());
        for e in v {
            self.field.require_same(e.field())?;
            raw.push(e.raw());
        }
        Ok(self.contains_raw(&raw))
    }

    pub fn contains_space(&self, other: &Subspace) -> Result<bool, Error> {
        self.require_compatible(other)?;
        Ok((0..other.dim()).all(|i| self.contains_raw(other.basis.row(i))))
    }

    /// Image under a coordinate permutation: coordinate i moves to perm[i].
    pub(crate) fn permute_coords(&self, perm: &[usize]) -> Subspace {
        debug_assert_eq!(perm.len(), self.ambient);
        let rows = (0..self.dim())
            .map(|i| {
                let row = self.basis.row(i);
                let mut out = vec![0u64; self.ambient];
                for (j, &v) in row.iter().enumerate() {
                    out[perm[j]] = v;
                }
                out
            })
            .collect();
        Subspace::from_raw_rows(&self.field, self.ambient, rows)
    }

    /// Image under a coordinatewise map of raw values.
    pub(crate) fn map_coords(&self, f: impl Fn(u64) -> u64) -> Subspace {
        let rows = (0..self.dim())
            .map(|i| self.basis.row(i).iter().map(|&v| f(v)).collect())
            .collect();
        Subspace::from_raw_rows(&self.field, self.ambient, rows)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace dim {} of K^{}: ", self.dim(), self.ambient)?;
        self.basis.fmt(f)
    }
}

/// Solves `target = x + y` with `x` in `u` and `y` in `v` for complementary
/// subspaces. The decomposition is found by solving the stacked-basis linear
/// system; it exists iff `target` lies in `u + v` and is unique iff the
/// intersection is trivial.
pub fn solve_in_sum(
    target: &[FieldElement],
    u: &Subspace,
    v: &Subspace,
) -> Result<(Vec<FieldElement>, Vec<FieldElement>), Error> {
    let field = u.field().clone();
    if u.field() != v.field() || u.ambient_dim() != v.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    if target.len() != u.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    let mut raw_target = Vec::with_capacity(target.len());
    for e in target {
        field.require_same(e.field())?;
        raw_target.push(e.raw());
    }
    let (x, y) = solve_in_sum_raw(&raw_target, u, v)?;
    Ok((
        x.into_iter().map(|r| field.elem(r)).collect(),
        y.into_iter().map(|r| field.elem(r)).collect(),
    ))
}

pub(crate) fn solve_in_sum_raw(
    target: &[u64],
    u: &Subspace,
    v: &Subspace,
) -> Result<(Vec<u64>, Vec<u64>), Error> {
    let field = u.field().clone();
    let n = u.ambient_dim();
    let (du, dv) = (u.dim(), v.dim());
    let unknowns = du + dv;
    // Augmented system: columns are the stacked basis vectors, last column
    // is the target.
    let mut rows = Vec::with_capacity(n);
    for (i, &t) in target.iter().enumerate() {
        let mut row = Vec::with_capacity(unknowns + 1);
        for j in 0..du {
            row.push(u.basis().raw(j, i));
        }
        for j in 0..dv {
            row.push(v.basis().raw(j, i));
        }
        row.push(t);
        rows.push(row);
    }
    let aug = Matrix::from_raw_rows(&field, unknowns + 1, rows);
    let (r, rank) = aug.rref();
    let mut coeff_rank = 0;
    for row in 0..rank {
        let pc = (0..unknowns + 1)
            .find(|&j| r.raw(row, j) != 0)
            .expect("nonzero row");
        if pc == unknowns {
            return Err(Error::NotInSum);
        }
        coeff_rank += 1;
    }
    if coeff_rank < unknowns {
        return Err(Error::NontrivialIntersection);
    }
    // Full column rank: pivot of row j is column j, so the solution reads off
    // the augmented column directly.
    let mut x = vec![0u64; n];
    let mut y = vec![0u64; n];
    for j in 0..du {
        let c = r.raw(j, unknowns);
        if c == 0 {
            continue;
        }
        for (slot, &bv) in x.iter_mut().zip(u.basis().row(j)) {
            *slot = field.add_raw(*slot, field.mul_raw(c, bv));
        }
    }
    for j in 0..dv {
        let c = r.raw(du + j, unknowns);
        if c == 0 {
            continue;
        }
        for (slot, &bv) in y.iter_mut().zip(v.basis().row(j)) {
            *slot = field.add_raw(*slot, field.mul_raw(c, bv));
        }
    }
    Ok((x, y))
}
