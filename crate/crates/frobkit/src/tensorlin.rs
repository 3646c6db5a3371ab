//! Exact dense linear algebra on tensor powers of a `d`-dimensional space.
//!
//! A [`LinMap`] is a linear map `A^{⊗m} → A^{⊗n}` stored as an exact
//! `d^n × d^m` matrix together with its tensor arities. The basis of `A^{⊗k}`
//! is ordered lexicographically with the **leftmost** tensor factor most
//! significant; that convention is global and every operation here respects
//! it bit-exactly.
//!
//! [`Mat`] is the underlying plain matrix type carrying reduced row-echelon
//! form, kernels, ranks, and affine solving; [`Subspace`] is the canonical
//! (echelonized) representation of a linear subspace, so subspace equality is
//! representation equality.

use crate::scalars::{FieldSpec, Scalar};
use std::fmt;

/// Errors from shape- or field-incompatible linear-algebra operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("arity mismatch: {context}")]
    ArityMismatch { context: String },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: base dimension {0} vs {1}")]
    DimMismatch(usize, usize),
}

// ---------------------------------------------------------------------------
// Plain exact matrices
// ---------------------------------------------------------------------------

/// A dense exact matrix over one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Mat {
    /// Zero matrix of the given shape.
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from row-major entries; panics if the length is wrong.
    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Mat {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        Mat {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Mat {
        let cols = columns.len();
        let mut m = Mat::zero(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length must match row count");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Exact matrix product `self · rhs`, skipping zero entries (the chain
    /// complex matrices are mostly zeros, so this matters in practice).
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        assert_eq!(self.field, rhs.field, "fields must agree");
        let mut out = Mat::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).plus(&a.times(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shapes must agree");
        assert_eq!(self.field, rhs.field, "fields must agree");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.plus(b))
            .collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Mat {
        let entries = self.entries.iter().map(Scalar::negate).collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let entries = self.entries.iter().map(|a| a.times(c)).collect();
        Mat::from_entries(self.field, self.rows, self.cols, entries)
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (k, vk) in v.iter().enumerate() {
                let a = self.at(i, k);
                if a.is_zero() || vk.is_zero() {
                    continue;
                }
                *slot = slot.plus(&a.times(vk));
            }
        }
        out
    }

    /// In-place reduced row-echelon form by exact Gaussian elimination with
    /// leading-coefficient normalization. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.entries.swap(pivot_row * self.cols + c, row * self.cols + c);
                }
            }
            let lead = self.at(row, col).invert();
            for c in col..self.cols {
                let v = self.at(row, c).times(&lead);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let p = self.at(row, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = self.at(r, c).minus(&factor.times(p));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Echelonized basis of the null space.
    pub fn kernel(&self) -> Subspace {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = work.at(r, free).negate();
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Exact inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let mut aug = Mat::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one(self.field));
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.at(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Transposed matrix.
    pub fn transposed(&self) -> Mat {
        let mut out = Mat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of `k^n`, stored as an echelonized (reduced row-echelon)
/// basis. The representation is unique, so `==` decides subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Canonicalizes arbitrary spanning vectors into an echelonized basis.
    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        let rows = vectors.len();
        let mut m = Mat::zero(field, rows, ambient_dim);
        for (i, v) in vectors.into_iter().enumerate() {
            assert_eq!(v.len(), ambient_dim, "vector length must match ambient dimension");
            for (j, s) in v.into_iter().enumerate() {
                m.set(i, j, s);
            }
        }
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len())
            .map(|r| (0..ambient_dim).map(|c| m.at(r, c).clone()).collect())
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Membership test by reduction against the echelonized basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dimension");
        let mut work = v.to_vec();
        for row in &self.basis {
            let lead = row
                .iter()
                .position(|s| !s.is_zero())
                .expect("echelonized basis rows are nonzero");
            if !work[lead].is_zero() {
                let factor = work[lead].clone();
                for (w, r) in work.iter_mut().zip(row) {
                    *w = w.minus(&factor.times(r));
                }
            }
        }
        work.iter().all(Scalar::is_zero)
    }
}

/// Outcome of an affine solve: the full solution set or a proof of emptiness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineOutcome {
    Infeasible,
    Solution {
        particular: Vec<Scalar>,
        homogeneous: Subspace,
    },
}

/// Solves the linear system given by `constraints` (coefficient row, right-hand
/// side) over `unknowns` variables. Returns the full solution set as one
/// particular solution plus the homogeneous subspace, or `Infeasible`.
pub fn solve_affine(
    field: FieldSpec,
    constraints: &[(Vec<Scalar>, Scalar)],
    unknowns: usize,
) -> AffineOutcome {
    let rows = constraints.len();
    let mut aug = Mat::zero(field, rows, unknowns + 1);
    let mut coeff = Mat::zero(field, rows, unknowns);
    for (i, (row, rhs)) in constraints.iter().enumerate() {
        assert_eq!(row.len(), unknowns, "constraint row length must match unknown count");
        for (j, v) in row.iter().enumerate() {
            aug.set(i, j, v.clone());
            coeff.set(i, j, v.clone());
        }
        aug.set(i, unknowns, rhs.clone());
    }
    let pivots = aug.rref_in_place();
    if pivots.contains(&unknowns) {
        return AffineOutcome::Infeasible;
    }
    let mut particular = vec![Scalar::zero(field); unknowns];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug.at(r, unknowns).clone();
    }
    AffineOutcome::Solution {
        particular,
        homogeneous: coeff.kernel(),
    }
}

// ---------------------------------------------------------------------------
// Linear maps between tensor powers
// ---------------------------------------------------------------------------

/// A linear map `A^{⊗m} → A^{⊗n}` over a `d`-dimensional base space, stored
/// as an exact `d^n × d^m` matrix. Arity 0 is the ground field (one slot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    dim: usize,
    dom_arity: usize,
    cod_arity: usize,
    mat: Mat,
}

impl LinMap {
    /// Zero map of the given arities.
    pub fn zero(field: FieldSpec, dim: usize, dom_arity: usize, cod_arity: usize) -> LinMap {
        let rows = dim.pow(cod_arity as u32);
        let cols = dim.pow(dom_arity as u32);
        LinMap {
            dim,
            dom_arity,
            cod_arity,
            mat: Mat::zero(field, rows, cols),
        }
    }

    /// Identity on `A^{⊗arity}`.
    pub fn identity(field: FieldSpec, dim: usize, arity: usize) -> LinMap {
        let n = dim.pow(arity as u32);
        LinMap {
            dim,
            dom_arity: arity,
            cod_arity: arity,
            mat: Mat::identity(field, n),
        }
    }

    /// Builds a map from row-major entries (`d^cod_arity × d^dom_arity`).
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        dom_arity: usize,
        cod_arity: usize,
        entries: Vec<Scalar>,
    ) -> LinMap {
        let rows = dim.pow(cod_arity as u32);
        let cols = dim.pow(dom_arity as u32);
        LinMap {
            dim,
            dom_arity,
            cod_arity,
            mat: Mat::from_entries(field, rows, cols, entries),
        }
    }

    /// The matrix unit sending domain basis slot `col` to codomain slot `row`.
    pub fn matrix_unit(
        field: FieldSpec,
        dim: usize,
        dom_arity: usize,
        cod_arity: usize,
        row: usize,
        col: usize,
    ) -> LinMap {
        let mut m = LinMap::zero(field, dim, dom_arity, cod_arity);
        m.mat.set(row, col, Scalar::one(field));
        m
    }

    /// The flip `A⊗A → A⊗A`, `e_a ⊗ e_b ↦ e_b ⊗ e_a`.
    pub fn transposition(field: FieldSpec, dim: usize) -> LinMap {
        let mut m = LinMap::zero(field, dim, 2, 2);
        for a in 0..dim {
            for b in 0..dim {
                m.mat.set(b * dim + a, a * dim + b, Scalar::one(field));
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn dom_arity(&self) -> usize {
        self.dom_arity
    }
    pub fn cod_arity(&self) -> usize {
        self.cod_arity
    }
    pub fn rows(&self) -> usize {
        self.mat.rows()
    }
    pub fn cols(&self) -> usize {
        self.mat.cols()
    }
    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        self.mat.at(r, c)
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Scalar) {
        self.mat.set(r, c, v);
    }

    /// The single entry of an arity `0 → 0` map.
    pub fn scalar_value(&self) -> &Scalar {
        assert_eq!((self.dom_arity, self.cod_arity), (0, 0), "not a scalar map");
        self.mat.at(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    fn compat(&self, other: &LinMap) -> Result<(), LinError> {
        if self.field() != other.field() {
            return Err(LinError::FieldMismatch(self.field(), other.field()));
        }
        if self.dim != other.dim {
            return Err(LinError::DimMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Composition `self ∘ rhs` (apply `rhs` first). Errors when the arities
    /// or fields do not line up.
    pub fn compose(&self, rhs: &LinMap) -> Result<LinMap, LinError> {
        self.compat(rhs)?;
        if self.dom_arity != rhs.cod_arity {
            return Err(LinError::ArityMismatch {
                context: format!(
                    "compose: domain arity {} does not match codomain arity {}",
                    self.dom_arity, rhs.cod_arity
                ),
            });
        }
        Ok(LinMap {
            dim: self.dim,
            dom_arity: rhs.dom_arity,
            cod_arity: self.cod_arity,
            mat: self.mat.mul(&rhs.mat),
        })
    }

    /// Kronecker product `self ⊗ rhs` with the left factor most significant;
    /// arities add. Errors on field or base-dimension mismatch.
    pub fn tensor(&self, rhs: &LinMap) -> Result<LinMap, LinError> {
        self.compat(rhs)?;
        let rows_l = self.rows();
        let cols_l = self.cols();
        let rows_r = rhs.rows();
        let cols_r = rhs.cols();
        let mut out = LinMap::zero(
            self.field(),
            self.dim,
            self.dom_arity + rhs.dom_arity,
            self.cod_arity + rhs.cod_arity,
        );
        for il in 0..rows_l {
            for jl in 0..cols_l {
                let a = self.mat.at(il, jl);
                if a.is_zero() {
                    continue;
                }
                for ir in 0..rows_r {
                    for jr in 0..cols_r {
                        let b = rhs.mat.at(ir, jr);
                        if b.is_zero() {
                            continue;
                        }
                        out.mat.set(il * rows_r + ir, jl * cols_r + jr, a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Panicking composition for pipelines whose arities match by construction.
    pub fn after(&self, rhs: &LinMap) -> LinMap {
        self.compose(rhs).expect("composition arities must match")
    }

    /// Panicking tensor product (see [`LinMap::after`]).
    pub fn tens(&self, rhs: &LinMap) -> LinMap {
        self.tensor(rhs).expect("tensor operands must share field and dimension")
    }

    /// Entrywise sum; panics when shapes differ (internal pipelines only).
    pub fn add(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(
            (self.dom_arity, self.cod_arity),
            (rhs.dom_arity, rhs.cod_arity),
            "sum needs equal arities"
        );
        LinMap {
            dim: self.dim,
            dom_arity: self.dom_arity,
            cod_arity: self.cod_arity,
            mat: self.mat.add(&rhs.mat),
        }
    }

    /// Entrywise difference; panics when shapes differ.
    pub fn sub(&self, rhs: &LinMap) -> LinMap {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LinMap {
        LinMap {
            dim: self.dim,
            dom_arity: self.dom_arity,
            cod_arity: self.cod_arity,
            mat: self.mat.neg(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            dim: self.dim,
            dom_arity: self.dom_arity,
            cod_arity: self.cod_arity,
            mat: self.mat.scale(c),
        }
    }

    /// Matrix–vector application in coordinates.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.mat.apply(v)
    }

    /// Echelonized null-space basis.
    pub fn kernel(&self) -> Subspace {
        self.mat.kernel()
    }

    /// Exact rank by elimination.
    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    /// Row-major entry vector (the global flattening convention).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.mat.entries().to_vec()
    }

    /// Rebuilds a map of the given arities from its row-major flattening.
    pub fn from_flat(
        field: FieldSpec,
        dim: usize,
        dom_arity: usize,
        cod_arity: usize,
        flat: &[Scalar],
    ) -> LinMap {
        LinMap::from_entries(field, dim, dom_arity, cod_arity, flat.to_vec())
    }
}

/// Kronecker product of coordinate vectors: `(a ⊗ b)[i·|b| + j] = a[i]·b[j]`,
/// consistent with the tensor convention for maps.
pub fn vec_tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.times(y));
        }
    }
    out
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "LinMap {}^{} -> {}^{} over {}",
            self.dim, self.dom_arity, self.dim, self.cod_arity, self.field()
        )?;
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|c| self.entry(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testsupport::{random_linmap, rng_from_seed};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn qs(n: i64) -> Scalar {
        Scalar::from_integer(n, Q)
    }

    #[test]
    fn identity_composes_neutrally() {
        let mut rng = rng_from_seed(1);
        let f = random_linmap(&mut rng, Q, 2, 2, 1);
        let id_dom = LinMap::identity(Q, 2, 2);
        let id_cod = LinMap::identity(Q, 2, 1);
        assert_eq!(f.compose(&id_dom).unwrap(), f);
        assert_eq!(id_cod.compose(&f).unwrap(), f);
    }

    #[test]
    fn transposition_is_an_involution() {
        for d in 1..=4 {
            let tau = LinMap::transposition(Q, d);
            assert_eq!(tau.compose(&tau).unwrap(), LinMap::identity(Q, d, 2));
        }
    }

    #[test]
    fn transposition_swaps_basis_factors() {
        let d = 3;
        let tau = LinMap::transposition(Q, d);
        for a in 0..d {
            for b in 0..d {
                let mut v = vec![qs(0); d * d];
                v[a * d + b] = qs(1);
                let w = tau.apply(&v);
                let mut expect = vec![qs(0); d * d];
                expect[b * d + a] = qs(1);
                assert_eq!(w, expect);
            }
        }
    }

    #[test]
    fn transposition_commutes_with_equal_tensor_squares() {
        let mut rng = rng_from_seed(7);
        for _ in 0..50 {
            let f = random_linmap(&mut rng, Q, 2, 1, 1);
            let ff = f.tensor(&f).unwrap();
            let tau = LinMap::transposition(Q, 2);
            assert_eq!(tau.after(&ff), ff.after(&tau));
        }
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let id1 = LinMap::identity(Q, 3, 1);
        assert_eq!(id1.tensor(&id1).unwrap(), LinMap::identity(Q, 3, 2));
    }

    #[test]
    fn interchange_law_on_random_quadruples() {
        let mut rng = rng_from_seed(42);
        for _ in 0..60 {
            // f: A² → A, g: A → A², h: A → A, k: A² → A.
            let f = random_linmap(&mut rng, Q, 2, 2, 1);
            let g = random_linmap(&mut rng, Q, 2, 1, 2);
            let h = random_linmap(&mut rng, Q, 2, 1, 1);
            let k = random_linmap(&mut rng, Q, 2, 2, 1);
            let lhs = f.tens(&h).after(&g.tens(&k));
            let rhs = f.after(&g).tens(&h.after(&k));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn compose_is_associative() {
        let mut rng = rng_from_seed(3);
        for _ in 0..40 {
            let f = random_linmap(&mut rng, Q, 2, 2, 1);
            let g = random_linmap(&mut rng, Q, 2, 3, 2);
            let h = random_linmap(&mut rng, Q, 2, 1, 3);
            let lhs = f.after(&g).after(&h);
            let rhs = f.after(&g.after(&h));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn compose_rejects_arity_mismatch() {
        let f = LinMap::identity(Q, 2, 1);
        let g = LinMap::identity(Q, 2, 2);
        assert!(matches!(
            f.compose(&g),
            Err(LinError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn tensor_rejects_field_mismatch() {
        let f = LinMap::identity(Q, 2, 1);
        let g = LinMap::identity(FieldSpec::GaussianRationals, 2, 1);
        assert!(matches!(f.tensor(&g), Err(LinError::FieldMismatch(_, _))));
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let id = LinMap::identity(Q, 2, 1);
        assert_eq!(id.kernel().dim(), 0);
        // Zero map on a 6-dimensional domain: kernel is everything.
        let z = LinMap::zero(Q, 6, 1, 1);
        assert_eq!(z.kernel().dim(), 6);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(LinMap::identity(Q, 2, 2).rank(), 4);
    }

    #[test]
    fn rank_nullity_on_random_maps() {
        let mut rng = rng_from_seed(99);
        for _ in 0..60 {
            let f = random_linmap(&mut rng, Q, 2, 2, 1);
            assert_eq!(f.rank() + f.kernel().dim(), 4);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let mut rng = rng_from_seed(4);
        for _ in 0..40 {
            let f = random_linmap(&mut rng, Q, 2, 2, 1);
            let ker = f.kernel();
            for v in ker.basis() {
                assert!(f.apply(v).iter().all(Scalar::is_zero));
            }
        }
    }

    #[test]
    fn solve_affine_unique_solution() {
        // x + y = 0, x − y = 0 → (0, 0).
        let rows = vec![
            (vec![qs(1), qs(1)], qs(0)),
            (vec![qs(1), qs(-1)], qs(0)),
        ];
        match solve_affine(Q, &rows, 2) {
            AffineOutcome::Solution {
                particular,
                homogeneous,
            } => {
                assert_eq!(particular, vec![qs(0), qs(0)]);
                assert_eq!(homogeneous.dim(), 0);
            }
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_affine_infeasible() {
        let rows = vec![
            (vec![qs(1), qs(1)], qs(1)),
            (vec![qs(1), qs(1)], qs(2)),
        ];
        assert_eq!(solve_affine(Q, &rows, 2), AffineOutcome::Infeasible);
    }

    #[test]
    fn solve_affine_two_constraints_on_eight_unknowns() {
        // Unknowns ordered (q, r, l, l', l1xx, lxxx, g1xx, gxxx); two relations
        // carve a 6-dimensional solution space out of k^8:
        //   g1xx + l1xx − q − l' = 0  and  gxxx − lxxx − r + l = 0.
        let rows = vec![
            (
                vec![qs(-1), qs(0), qs(0), qs(-1), qs(1), qs(0), qs(1), qs(0)],
                qs(0),
            ),
            (
                vec![qs(0), qs(-1), qs(1), qs(0), qs(0), qs(-1), qs(0), qs(1)],
                qs(0),
            ),
        ];
        match solve_affine(Q, &rows, 8) {
            AffineOutcome::Solution { homogeneous, .. } => assert_eq!(homogeneous.dim(), 6),
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn subspace_membership_and_canonical_equality() {
        let v1 = vec![qs(1), qs(0), qs(1)];
        let v2 = vec![qs(0), qs(1), qs(1)];
        let s = Subspace::from_vectors(Q, 3, vec![v1.clone(), v2.clone()]);
        // A different spanning set of the same plane canonicalizes identically.
        let sum = vec![qs(1), qs(1), qs(2)];
        let t = Subspace::from_vectors(Q, 3, vec![sum.clone(), v1.clone()]);
        assert_eq!(s, t);
        assert!(s.contains(&sum));
        assert!(!s.contains(&[qs(1), qs(0), qs(0)]));
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let mut rng = rng_from_seed(11);
        let mut found = 0;
        while found < 20 {
            let f = random_linmap(&mut rng, Q, 2, 2, 2);
            if let Some(inv) = f.mat().inverse() {
                assert_eq!(inv.mul(f.mat()), Mat::identity(Q, 4));
                assert_eq!(f.mat().mul(&inv), Mat::identity(Q, 4));
                found += 1;
            }
        }
    }
}
