//! Validated Frobenius algebra structures.
//!
//! An [`AlgebraPresentation`] is raw data: a field, named basis, structure
//! constants `λ^c_{ab}` (so `e_a · e_b = Σ_c λ^c_{ab} e_c`), a unit vector,
//! and a counit vector. [`validate`] checks associativity, the unit laws, and
//! nondegeneracy of the induced pairing `β(x⊗y) = ε(xy)`, then derives the
//! copairing `γ`, the comultiplication `Δ`, the handle element `μγ(1)`, and
//! the symmetry/commutativity flags, asserting every defining identity
//! exactly along the way.
//!
//! The module also ships the builtin example algebras: the complex numbers
//! viewed as a 2-dimensional real algebra (over `Q`), truncated polynomial
//! rings `k[x]/(xⁿ)`, group algebras (cyclic and the symmetric group `S₃`,
//! including the alternative Frobenius form on `S₃`), a `q`-commutative
//! 4-dimensional algebra over `Q(i)`, and the trace form construction.

use crate::scalars::{parse_scalar, FieldSpec, Scalar, ScalarError};
use crate::tensorlin::{LinMap, Mat};

/// Errors from presentation construction, validation, and the builders.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FrobeniusError {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("multiplication is not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("unit law fails: {side} multiplication by the unit does not fix {name}")]
    UnitLawFails { side: &'static str, name: String },
    #[error("the pairing induced by the counit is degenerate")]
    DegeneratePairing,
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("the parameter must be a nonzero scalar")]
    ZeroParameter,
    #[error("unknown builtin algebra name: {0}")]
    UnknownBuiltin(String),
    #[error("builtin parameter error for {name}: {detail}")]
    BadBuiltinParameter { name: String, detail: String },
    #[error("the builtin {0} does not accept a field override")]
    FieldOverrideNotSupported(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Raw structure-constant data for a finite-dimensional unital algebra with a
/// chosen linear functional (the counit candidate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: FieldSpec,
    basis_names: Vec<String>,
    /// `λ^c_{ab}` stored at index `(a·d + b)·d + c`.
    mul_constants: Vec<Scalar>,
    unit_vector: Vec<Scalar>,
    counit_vector: Vec<Scalar>,
}

impl AlgebraPresentation {
    /// Builds a presentation, checking shapes and basis-name uniqueness.
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        mul_constants: Vec<Scalar>,
        unit_vector: Vec<Scalar>,
        counit_vector: Vec<Scalar>,
    ) -> Result<AlgebraPresentation, FrobeniusError> {
        let d = basis_names.len();
        if d == 0 {
            return Err(FrobeniusError::InvalidPresentation(
                "basis must be nonempty".to_string(),
            ));
        }
        for (i, a) in basis_names.iter().enumerate() {
            if a.is_empty() {
                return Err(FrobeniusError::InvalidPresentation(
                    "basis names must be nonempty".to_string(),
                ));
            }
            if basis_names[..i].contains(a) {
                return Err(FrobeniusError::InvalidPresentation(format!(
                    "duplicate basis name {a}"
                )));
            }
        }
        if mul_constants.len() != d * d * d {
            return Err(FrobeniusError::InvalidPresentation(format!(
                "expected {} structure constants, got {}",
                d * d * d,
                mul_constants.len()
            )));
        }
        if unit_vector.len() != d || counit_vector.len() != d {
            return Err(FrobeniusError::InvalidPresentation(
                "unit and counit vectors must have one coordinate per basis element".to_string(),
            ));
        }
        for s in mul_constants
            .iter()
            .chain(unit_vector.iter())
            .chain(counit_vector.iter())
        {
            if s.field() != field {
                return Err(FrobeniusError::InvalidPresentation(format!(
                    "scalar {} lives in {}, not {}",
                    s,
                    s.field(),
                    field
                )));
            }
        }
        Ok(AlgebraPresentation {
            field,
            basis_names,
            mul_constants,
            unit_vector,
            counit_vector,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// `λ^c_{ab}`: the coefficient of `e_c` in `e_a · e_b`.
    pub fn mul_constant(&self, a: usize, b: usize, c: usize) -> &Scalar {
        let d = self.dim();
        &self.mul_constants[(a * d + b) * d + c]
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit_vector
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit_vector
    }

    /// Multiplication `μ: A⊗A → A` as a matrix.
    pub fn mu_map(&self) -> LinMap {
        let d = self.dim();
        let mut m = LinMap::zero(self.field, d, 2, 1);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let v = self.mul_constant(a, b, c);
                    if !v.is_zero() {
                        m.set_entry(c, a * d + b, v.clone());
                    }
                }
            }
        }
        m
    }

    /// Unit `η: k → A` as a column.
    pub fn eta_map(&self) -> LinMap {
        let d = self.dim();
        let mut m = LinMap::zero(self.field, d, 0, 1);
        for (a, v) in self.unit_vector.iter().enumerate() {
            m.set_entry(a, 0, v.clone());
        }
        m
    }

    /// Counit `ε: A → k` as a row.
    pub fn epsilon_map(&self) -> LinMap {
        let d = self.dim();
        let mut m = LinMap::zero(self.field, d, 1, 0);
        for (a, v) in self.counit_vector.iter().enumerate() {
            m.set_entry(0, a, v.clone());
        }
        m
    }
}

/// A fully validated Frobenius algebra with all derived structure maps.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    pres: AlgebraPresentation,
    mu: LinMap,
    eta: LinMap,
    epsilon: LinMap,
    beta: LinMap,
    gamma: LinMap,
    delta: LinMap,
    delta0: Scalar,
    handle_element: Vec<Scalar>,
    symmetric: bool,
    commutative: bool,
    scalar_handle: Option<Scalar>,
}

fn internal(cond: bool, what: &str) {
    assert!(cond, "internal consistency check failed: {what}");
}

/// Validates a presentation into a [`FrobeniusAlgebra`].
///
/// Checks, in order: associativity (with a witness triple on failure), the
/// two-sided unit law, nondegeneracy of the Gram matrix `B_{ab} = ε(e_a e_b)`.
/// Then derives `γ` from `B⁻¹` (the index convention is pinned by asserting
/// the cancelation identities), `Δ = (μ⊗|)(|⊗γ) = (|⊗μ)(γ⊗|)`, and the
/// handle element `μγ(1)`, asserting cancelation, both compatibility shapes,
/// coassociativity, the counit law, centrality of the handle element, and
/// that the handle operator `μΔ` is left multiplication by it.
pub fn validate(pres: &AlgebraPresentation) -> Result<FrobeniusAlgebra, FrobeniusError> {
    let d = pres.dim();
    let field = pres.field();
    let mu = pres.mu_map();
    let eta = pres.eta_map();
    let epsilon = pres.epsilon_map();
    let id1 = LinMap::identity(field, d, 1);

    // Associativity: μ(μ⊗|) = μ(|⊗μ), with a witness triple on failure.
    let left = mu.after(&mu.tens(&id1));
    let right = mu.after(&id1.tens(&mu));
    if left != right {
        for col in 0..d * d * d {
            for row in 0..d {
                if left.entry(row, col) != right.entry(row, col) {
                    let a = col / (d * d);
                    let b = (col / d) % d;
                    let c = col % d;
                    return Err(FrobeniusError::NotAssociative {
                        a: pres.basis_names[a].clone(),
                        b: pres.basis_names[b].clone(),
                        c: pres.basis_names[c].clone(),
                    });
                }
            }
        }
        unreachable!("maps differ in some entry");
    }

    // Two-sided unit law.
    if mu.after(&eta.tens(&id1)) != id1 {
        let bad = (0..d)
            .find(|&b| {
                let mut v = vec![Scalar::zero(field); d];
                v[b] = Scalar::one(field);
                let mut in_vec = vec![Scalar::zero(field); d * d];
                for (p, u) in pres.unit_vector.iter().enumerate() {
                    in_vec[p * d + b] = u.clone();
                }
                mu.apply(&in_vec) != v
            })
            .unwrap_or(0);
        return Err(FrobeniusError::UnitLawFails {
            side: "left",
            name: pres.basis_names[bad].clone(),
        });
    }
    if mu.after(&id1.tens(&eta)) != id1 {
        let bad = (0..d)
            .find(|&a| {
                let mut v = vec![Scalar::zero(field); d];
                v[a] = Scalar::one(field);
                let mut in_vec = vec![Scalar::zero(field); d * d];
                for (q, u) in pres.unit_vector.iter().enumerate() {
                    in_vec[a * d + q] = u.clone();
                }
                mu.apply(&in_vec) != v
            })
            .unwrap_or(0);
        return Err(FrobeniusError::UnitLawFails {
            side: "right",
            name: pres.basis_names[bad].clone(),
        });
    }

    // Pairing β = ε∘μ and its Gram matrix B_{ab} = β(e_a ⊗ e_b).
    let beta = epsilon.after(&mu);
    let mut gram = Mat::zero(field, d, d);
    for a in 0..d {
        for b in 0..d {
            gram.set(a, b, beta.entry(0, a * d + b).clone());
        }
    }
    let Some(gram_inv) = gram.inverse() else {
        return Err(FrobeniusError::DegeneratePairing);
    };

    // Copairing γ(1) = Σ_{a,b} (B⁻¹)_{ab} e_a ⊗ e_b. The index order is the
    // one that makes both cancelation identities hold; they are asserted
    // below, which pins the convention even for non-symmetric B.
    let mut gamma = LinMap::zero(field, d, 0, 2);
    for a in 0..d {
        for b in 0..d {
            gamma.set_entry(a * d + b, 0, gram_inv.at(a, b).clone());
        }
    }
    internal(
        beta.tens(&id1).after(&id1.tens(&gamma)) == id1,
        "cancelation (β⊗|)(|⊗γ) = |",
    );
    internal(
        id1.tens(&beta).after(&gamma.tens(&id1)) == id1,
        "cancelation (|⊗β)(γ⊗|) = |",
    );

    // Comultiplication, both derivations agreeing.
    let delta = mu.tens(&id1).after(&id1.tens(&gamma));
    let delta_alt = id1.tens(&mu).after(&gamma.tens(&id1));
    internal(delta == delta_alt, "Δ = (μ⊗|)(|⊗γ) = (|⊗μ)(γ⊗|)");

    // Frobenius compatibility, both shapes.
    let dm = delta.after(&mu);
    internal(
        dm == mu.tens(&id1).after(&id1.tens(&delta)),
        "compatibility Δμ = (μ⊗|)(|⊗Δ)",
    );
    internal(
        dm == id1.tens(&mu).after(&delta.tens(&id1)),
        "compatibility Δμ = (|⊗μ)(Δ⊗|)",
    );

    // Coassociativity and the counit law.
    internal(
        delta.tens(&id1).after(&delta) == id1.tens(&delta).after(&delta),
        "coassociativity",
    );
    internal(
        epsilon.tens(&id1).after(&delta) == id1 && id1.tens(&epsilon).after(&delta) == id1,
        "counit law",
    );

    // Handle element δ_h = μγ(1); δ₀ = βγ(1).
    let handle_map = mu.after(&gamma);
    let handle_element: Vec<Scalar> = (0..d).map(|a| handle_map.entry(a, 0).clone()).collect();
    let delta0 = beta.after(&gamma).scalar_value().clone();

    // Left/right multiplication by the handle element.
    let mut left_mult = LinMap::zero(field, d, 1, 1);
    let mut right_mult = LinMap::zero(field, d, 1, 1);
    for c in 0..d {
        for b in 0..d {
            let mut acc_l = Scalar::zero(field);
            let mut acc_r = Scalar::zero(field);
            for (a, h) in handle_element.iter().enumerate() {
                acc_l = acc_l.plus(&h.times(pres.mul_constant(a, b, c)));
                acc_r = acc_r.plus(&h.times(pres.mul_constant(b, a, c)));
            }
            left_mult.set_entry(c, b, acc_l);
            right_mult.set_entry(c, b, acc_r);
        }
    }
    internal(left_mult == right_mult, "handle element is central");
    internal(
        mu.after(&delta) == left_mult,
        "handle operator μΔ is multiplication by the handle element",
    );

    // Flags.
    let symmetric = gram == gram.transposed();
    let tau = LinMap::transposition(field, d);
    let commutative = mu.after(&tau) == mu;
    internal(
        commutative == (tau.after(&delta) == delta),
        "commutative if and only if cocommutative",
    );

    // Scalar handle δ₁ with δ_h = δ₁·1, when the handle element is a multiple
    // of the unit.
    let scalar_handle = {
        let j = pres
            .unit_vector
            .iter()
            .position(|v| !v.is_zero())
            .expect("unit vector is nonzero by the unit law");
        let candidate = handle_element[j].checked_div(&pres.unit_vector[j]).expect("nonzero divisor");
        let matches = (0..d).all(|a| handle_element[a] == candidate.times(&pres.unit_vector[a]));
        if matches {
            let eps_of_unit = epsilon.apply(&pres.unit_vector)[0].clone();
            internal(
                delta0 == candidate.times(&eps_of_unit),
                "δ₀ = δ₁·ε(1) when the handle is scalar",
            );
            Some(candidate)
        } else {
            None
        }
    };

    Ok(FrobeniusAlgebra {
        pres: pres.clone(),
        mu,
        eta,
        epsilon,
        beta,
        gamma,
        delta,
        delta0,
        handle_element,
        symmetric,
        commutative,
        scalar_handle,
    })
}

impl FrobeniusAlgebra {
    pub fn pres(&self) -> &AlgebraPresentation {
        &self.pres
    }
    pub fn field(&self) -> FieldSpec {
        self.pres.field()
    }
    pub fn dim(&self) -> usize {
        self.pres.dim()
    }
    pub fn basis_names(&self) -> &[String] {
        self.pres.basis_names()
    }
    /// Multiplication `μ: A⊗A → A`.
    pub fn mu(&self) -> &LinMap {
        &self.mu
    }
    /// Unit `η: k → A`.
    pub fn eta(&self) -> &LinMap {
        &self.eta
    }
    /// Counit `ε: A → k`.
    pub fn epsilon(&self) -> &LinMap {
        &self.epsilon
    }
    /// Pairing `β = ε∘μ: A⊗A → k`.
    pub fn beta(&self) -> &LinMap {
        &self.beta
    }
    /// Copairing `γ: k → A⊗A`.
    pub fn gamma(&self) -> &LinMap {
        &self.gamma
    }
    /// Comultiplication `Δ: A → A⊗A`.
    pub fn delta(&self) -> &LinMap {
        &self.delta
    }
    /// `δ₀ = βγ(1)`.
    pub fn delta0(&self) -> &Scalar {
        &self.delta0
    }
    /// Coordinates of the handle element `δ_h = μγ(1)`.
    pub fn handle_element(&self) -> &[Scalar] {
        &self.handle_element
    }
    /// `δ₁` with `δ_h = δ₁·1`, when the handle element is scalar.
    pub fn scalar_handle(&self) -> Option<&Scalar> {
        self.scalar_handle.as_ref()
    }
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }
    /// Identity on `A^{⊗arity}`.
    pub fn id(&self, arity: usize) -> LinMap {
        LinMap::identity(self.field(), self.dim(), arity)
    }
    /// The flip `τ: A⊗A → A⊗A`.
    pub fn tau(&self) -> LinMap {
        LinMap::transposition(self.field(), self.dim())
    }
}

/// `(handle element, δ₀, δ₁ if scalar)` for a validated algebra.
pub fn handle_data(alg: &FrobeniusAlgebra) -> (Vec<Scalar>, Scalar, Option<Scalar>) {
    (
        alg.handle_element.clone(),
        alg.delta0.clone(),
        alg.scalar_handle.clone(),
    )
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

fn zeros(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

/// The complex numbers as a 2-dimensional algebra over `Q` (which faithfully
/// stands in for `R` here: every structure constant is rational and exact
/// ranks over `Q` equal ranks over `R`). Basis `{1, i}` with `i² = −1`,
/// counit `ε(1) = 1`, `ε(i) = 0`.
// Structure constants are written as literal (a·d + b)·d + c indices so each
// line can be read against the product it encodes.
#[allow(clippy::identity_op, clippy::erasing_op)]
pub fn build_complex() -> AlgebraPresentation {
    let f = FieldSpec::Rationals;
    let d = 2;
    let mut mul = zeros(f, d * d * d);
    let one = Scalar::one(f);
    // 1·1 = 1, 1·i = i, i·1 = i, i·i = −1.
    mul[(0 * d + 0) * d + 0] = one.clone();
    mul[(0 * d + 1) * d + 1] = one.clone();
    mul[(1 * d + 0) * d + 1] = one.clone();
    mul[(1 * d + 1) * d + 0] = one.negate();
    let mut unit = zeros(f, d);
    unit[0] = one.clone();
    let mut counit = zeros(f, d);
    counit[0] = one;
    AlgebraPresentation::new(
        f,
        vec!["1".to_string(), "i".to_string()],
        mul,
        unit,
        counit,
    )
    .expect("complex presentation is well-shaped")
}

/// Truncated polynomial ring `k[x]/(xⁿ)` with basis `{1, x, …, x^{n−1}}` and
/// counit picking the top coefficient: `ε(x^{n−1}) = 1`, otherwise 0.
pub fn build_poly(n: usize, field: FieldSpec) -> Result<AlgebraPresentation, FrobeniusError> {
    if n < 2 {
        return Err(FrobeniusError::InvalidPresentation(
            "truncated polynomial algebras need n ≥ 2".to_string(),
        ));
    }
    let d = n;
    let mut mul = zeros(field, d * d * d);
    let one = Scalar::one(field);
    for a in 0..d {
        for b in 0..d {
            if a + b < d {
                mul[(a * d + b) * d + (a + b)] = one.clone();
            }
        }
    }
    let mut unit = zeros(field, d);
    unit[0] = one.clone();
    let mut counit = zeros(field, d);
    counit[d - 1] = one;
    let names = (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    AlgebraPresentation::new(field, names, mul, unit, counit)
}

/// Group algebra `kG` from a multiplication table (`table[a][b]` is the index
/// of the product `g_a g_b`). The table is checked to be a group: closure,
/// an identity, associativity, and inverses. The counit is the indicator of
/// the identity element, so `ε(g) = 1` iff `g` is the group identity.
pub fn build_group(
    names: &[String],
    table: &[Vec<usize>],
    field: FieldSpec,
) -> Result<AlgebraPresentation, FrobeniusError> {
    let d = names.len();
    if d == 0 {
        return Err(FrobeniusError::NotAGroup("empty element list".to_string()));
    }
    if table.len() != d || table.iter().any(|row| row.len() != d) {
        return Err(FrobeniusError::NotAGroup(format!(
            "multiplication table must be {d}×{d}"
        )));
    }
    if table.iter().flatten().any(|&v| v >= d) {
        return Err(FrobeniusError::NotAGroup(
            "table entry out of range (not closed)".to_string(),
        ));
    }
    let identity = (0..d)
        .find(|&e| (0..d).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| FrobeniusError::NotAGroup("no identity element".to_string()))?;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(FrobeniusError::NotAGroup(format!(
                        "associativity fails at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
            }
        }
    }
    for a in 0..d {
        if !(0..d).any(|b| table[a][b] == identity && table[b][a] == identity) {
            return Err(FrobeniusError::NotAGroup(format!(
                "{} has no inverse",
                names[a]
            )));
        }
    }
    let mut mul = zeros(field, d * d * d);
    let one = Scalar::one(field);
    for a in 0..d {
        for b in 0..d {
            mul[(a * d + b) * d + table[a][b]] = one.clone();
        }
    }
    let mut unit = zeros(field, d);
    unit[identity] = one.clone();
    let mut counit = zeros(field, d);
    counit[identity] = one;
    AlgebraPresentation::new(field, names.to_vec(), mul, unit, counit)
}

/// Multiplication table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// The group algebra `kZ₂` with basis names `{1, x}`.
pub fn build_group_z2(field: FieldSpec) -> AlgebraPresentation {
    build_group(
        &["1".to_string(), "x".to_string()],
        &cyclic_table(2),
        field,
    )
    .expect("Z2 table is a group")
}

/// The group algebra of the cyclic group of order `n ≥ 1`, basis `{1, g, g^2, …}`.
pub fn build_group_zn(n: usize, field: FieldSpec) -> Result<AlgebraPresentation, FrobeniusError> {
    if n == 0 {
        return Err(FrobeniusError::NotAGroup("order must be positive".to_string()));
    }
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect::<Vec<_>>();
    build_group(&names, &cyclic_table(n), field)
}

/// Element order of the symmetric group `S₃` used everywhere in this crate:
/// `(e, x, y, xy, yx, xyx)` with `x, y` the two adjacent transpositions. The
/// fixed order keeps every report reproducible bit-for-bit.
pub fn s3_names() -> Vec<String> {
    ["e", "x", "y", "xy", "yx", "xyx"]
        .into_iter()
        .map(str::to_string)
        .collect()
}

/// Multiplication table of `S₃` in the order of [`s3_names`].
pub fn s3_table() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 3, 2, 5, 4],
        vec![2, 4, 0, 5, 1, 3],
        vec![3, 5, 1, 4, 0, 2],
        vec![4, 2, 5, 0, 3, 1],
        vec![5, 3, 4, 1, 2, 0],
    ]
}

/// The group algebra `kS₃` with the standard (identity-indicator) counit.
pub fn build_group_s3(field: FieldSpec) -> AlgebraPresentation {
    build_group(&s3_names(), &s3_table(), field).expect("S3 table is a group")
}

/// `QS₃` with the alternative Frobenius form `ε(xyx) = 1`, otherwise 0.
/// This is the standard noncommutative example whose pairing is nondegenerate
/// but **not** symmetric.
pub fn build_s3_alt() -> AlgebraPresentation {
    let field = FieldSpec::Rationals;
    let base = build_group_s3(field);
    let d = base.dim();
    let mut counit = zeros(field, d);
    counit[5] = Scalar::one(field); // the element xyx
    AlgebraPresentation::new(
        field,
        base.basis_names().to_vec(),
        (0..d * d * d)
            .map(|idx| {
                let a = idx / (d * d);
                let b = (idx / d) % d;
                let c = idx % d;
                base.mul_constant(a, b, c).clone()
            })
            .collect(),
        base.unit_vector().to_vec(),
        counit,
    )
    .expect("s3alt presentation is well-shaped")
}

/// `q`-commutative polynomial algebra over `Q(i)` with basis `{1, x, y, xy}`:
/// `x² = y² = 0`, `yx = q·xy` with `q = −A⁻²`, and counit `ε(xy) = i·A`
/// (zero on the other basis elements). `A` must be a nonzero scalar in `Q(i)`.
// Literal (a·d + b)·d + c indices, as in `build_complex`.
#[allow(clippy::identity_op, clippy::erasing_op)]
pub fn build_qpoly(a_val: &Scalar) -> Result<AlgebraPresentation, FrobeniusError> {
    let field = FieldSpec::GaussianRationals;
    if a_val.field() != field {
        return Err(FrobeniusError::InvalidPresentation(
            "the parameter must lie in Q(i)".to_string(),
        ));
    }
    if a_val.is_zero() {
        return Err(FrobeniusError::ZeroParameter);
    }
    let d = 4;
    let one = Scalar::one(field);
    let a_inv = a_val.invert();
    let q = a_inv.times(&a_inv).negate();
    let mut mul = zeros(field, d * d * d);
    // Indices: 1 = 0, x = 1, y = 2, xy = 3.
    for b in 0..d {
        mul[(0 * d + b) * d + b] = one.clone(); // 1·b = b
    }
    for a in 1..d {
        mul[(a * d + 0) * d + a] = one.clone(); // a·1 = a
    }
    mul[(1 * d + 2) * d + 3] = one.clone(); // x·y = xy
    mul[(2 * d + 1) * d + 3] = q; // y·x = q·xy
                                  // Every other product of {x, y, xy} vanishes (x² = y² = 0).
    let mut unit = zeros(field, d);
    unit[0] = one.clone();
    let mut counit = zeros(field, d);
    counit[3] = Scalar::i().times(a_val);
    AlgebraPresentation::new(
        field,
        vec![
            "1".to_string(),
            "x".to_string(),
            "y".to_string(),
            "xy".to_string(),
        ],
        mul,
        unit,
        counit,
    )
}

/// Replaces the counit by the trace of left multiplication:
/// `ε(a) = trace(L_a)`, so the induced pairing is `β(a⊗b) = trace(L_{ab})`.
/// Requires an associative unital presentation; errors with
/// `DegeneratePairing` when the trace form is degenerate (non-semisimple
/// input, e.g. a group algebra in characteristic dividing the group order).
pub fn trace_form(pres: &AlgebraPresentation) -> Result<AlgebraPresentation, FrobeniusError> {
    let d = pres.dim();
    let field = pres.field();
    // Associativity and unit checks (reuse validation on a copy whose counit
    // is irrelevant to those two checks).
    let mu = pres.mu_map();
    let id1 = LinMap::identity(field, d, 1);
    if mu.after(&mu.tens(&id1)) != mu.after(&id1.tens(&mu)) {
        // Delegate to validate for the witness-carrying error.
        let err = validate(pres).expect_err("associativity failed above");
        return Err(err);
    }
    if mu.after(&pres.eta_map().tens(&id1)) != id1 || mu.after(&id1.tens(&pres.eta_map())) != id1 {
        let err = validate(pres).expect_err("unit law failed above");
        return Err(err);
    }
    let mut counit = zeros(field, d);
    for (a, slot) in counit.iter_mut().enumerate() {
        let mut tr = Scalar::zero(field);
        for b in 0..d {
            tr = tr.plus(pres.mul_constant(a, b, b));
        }
        *slot = tr;
    }
    let candidate = AlgebraPresentation::new(
        field,
        pres.basis_names().to_vec(),
        (0..d * d * d)
            .map(|idx| {
                let a = idx / (d * d);
                let b = (idx / d) % d;
                let c = idx % d;
                pres.mul_constant(a, b, c).clone()
            })
            .collect(),
        pres.unit_vector().to_vec(),
        counit,
    )?;
    // Nondegeneracy of the new pairing.
    let eps = candidate.epsilon_map();
    let beta = eps.after(&mu);
    let mut gram = Mat::zero(field, d, d);
    for a in 0..d {
        for b in 0..d {
            gram.set(a, b, beta.entry(0, a * d + b).clone());
        }
    }
    if gram.inverse().is_none() {
        return Err(FrobeniusError::DegeneratePairing);
    }
    Ok(candidate)
}

// ---------------------------------------------------------------------------
// Builtin registry
// ---------------------------------------------------------------------------

/// Resolves a builtin algebra name to its presentation.
///
/// Recognized names: `complex`, `poly:<n>`, `group:Z2`, `group:Zn:<n>`,
/// `group:S3`, `s3alt`, `qpoly:<scalar over Q(i)>` (with `i`/`-i` accepted as
/// shorthand for `1i`/`-1i`). A field override is accepted only for `poly`
/// and `group` builtins.
pub fn builtin_presentation(
    name: &str,
    field_override: Option<FieldSpec>,
) -> Result<AlgebraPresentation, FrobeniusError> {
    let overridable = name.starts_with("poly:") || name.starts_with("group:");
    if field_override.is_some() && !overridable {
        return Err(FrobeniusError::FieldOverrideNotSupported(name.to_string()));
    }
    let field = field_override.unwrap_or(FieldSpec::Rationals);
    if name == "complex" {
        return Ok(build_complex());
    }
    if name == "s3alt" {
        return Ok(build_s3_alt());
    }
    if let Some(param) = name.strip_prefix("poly:") {
        let n: usize = param.parse().map_err(|_| FrobeniusError::BadBuiltinParameter {
            name: name.to_string(),
            detail: "expected poly:<n> with integer n ≥ 2".to_string(),
        })?;
        return build_poly(n, field);
    }
    if let Some(param) = name.strip_prefix("group:") {
        return match param {
            "Z2" => Ok(build_group_z2(field)),
            "S3" => Ok(build_group_s3(field)),
            _ => {
                if let Some(order) = param.strip_prefix("Zn:") {
                    let n: usize =
                        order.parse().map_err(|_| FrobeniusError::BadBuiltinParameter {
                            name: name.to_string(),
                            detail: "expected group:Zn:<n> with integer n ≥ 1".to_string(),
                        })?;
                    build_group_zn(n, field)
                } else {
                    Err(FrobeniusError::UnknownBuiltin(name.to_string()))
                }
            }
        };
    }
    if let Some(param) = name.strip_prefix("qpoly:") {
        let a_val = match param {
            "i" => Scalar::i(),
            "-i" => Scalar::i().negate(),
            text => parse_scalar(text, FieldSpec::GaussianRationals).map_err(|e| {
                FrobeniusError::BadBuiltinParameter {
                    name: name.to_string(),
                    detail: e.to_string(),
                }
            })?,
        };
        return build_qpoly(&a_val);
    }
    Err(FrobeniusError::UnknownBuiltin(name.to_string()))
}

#[cfg(test)]
// Tests address tensor entries with literal row·dim + col arithmetic so the
// expected positions can be read against the math.
#[allow(clippy::identity_op, clippy::erasing_op)]
mod tests {
    use super::*;
    use crate::scalars::print_scalar;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn qs(n: i64) -> Scalar {
        Scalar::from_integer(n, Q)
    }

    fn validated(pres: &AlgebraPresentation) -> FrobeniusAlgebra {
        validate(pres).expect("builtin must validate")
    }

    #[test]
    fn complex_structure() {
        let alg = validated(&build_complex());
        // Gram matrix diag(1, −1).
        assert_eq!(alg.beta().entry(0, 0), &qs(1));
        assert_eq!(alg.beta().entry(0, 3), &qs(-1));
        assert_eq!(alg.beta().entry(0, 1), &qs(0));
        assert_eq!(alg.beta().entry(0, 2), &qs(0));
        // γ(1) = 1⊗1 − i⊗i.
        assert_eq!(alg.gamma().entry(0, 0), &qs(1));
        assert_eq!(alg.gamma().entry(3, 0), &qs(-1));
        assert_eq!(alg.gamma().entry(1, 0), &qs(0));
        assert_eq!(alg.gamma().entry(2, 0), &qs(0));
        // Δ(i) = i⊗1 + 1⊗i.
        assert_eq!(alg.delta().entry(1, 1), &qs(1));
        assert_eq!(alg.delta().entry(2, 1), &qs(1));
        assert_eq!(alg.delta().entry(0, 1), &qs(0));
        assert_eq!(alg.delta().entry(3, 1), &qs(0));
        // εη(1) = 1; μΔ(i) = 2i.
        assert_eq!(
            alg.epsilon().after(alg.eta()).scalar_value(),
            &qs(1)
        );
        let mu_delta = alg.mu().after(alg.delta());
        assert_eq!(mu_delta.entry(1, 1), &qs(2));
        assert_eq!(mu_delta.entry(0, 1), &qs(0));
        // Handle data: δ_h = 2·1, δ₀ = 2, δ₁ = 2.
        let (handle, d0, d1) = handle_data(&alg);
        assert_eq!(handle, vec![qs(2), qs(0)]);
        assert_eq!(d0, qs(2));
        assert_eq!(d1, Some(qs(2)));
        assert!(alg.is_symmetric() && alg.is_commutative());
    }

    #[test]
    fn poly2_structure() {
        let alg = validated(&build_poly(2, Q).unwrap());
        // γ(1) = 1⊗x + x⊗1.
        assert_eq!(alg.gamma().entry(1, 0), &qs(1));
        assert_eq!(alg.gamma().entry(2, 0), &qs(1));
        assert_eq!(alg.gamma().entry(0, 0), &qs(0));
        assert_eq!(alg.gamma().entry(3, 0), &qs(0));
        // Δ(x) = x⊗x; Δ(1) = 1⊗x + x⊗1.
        assert_eq!(alg.delta().entry(3, 1), &qs(1));
        assert_eq!(alg.delta().entry(1, 0), &qs(1));
        assert_eq!(alg.delta().entry(2, 0), &qs(1));
        // Handle element 2x; no scalar handle.
        let (handle, _d0, d1) = handle_data(&alg);
        assert_eq!(handle, vec![qs(0), qs(2)]);
        assert_eq!(d1, None);
    }

    #[test]
    fn poly_handle_is_n_times_top_power() {
        for n in [3usize, 4] {
            let alg = validated(&build_poly(n, Q).unwrap());
            let (handle, _, d1) = handle_data(&alg);
            let mut expect = vec![qs(0); n];
            expect[n - 1] = qs(n as i64);
            assert_eq!(handle, expect, "handle of k[x]/(x^{n})");
            assert_eq!(d1, None);
        }
        // n = 3: Δ(1) = Σ_{i} x^i ⊗ x^{2−i}.
        let alg = validated(&build_poly(3, Q).unwrap());
        for i in 0..3 {
            assert_eq!(alg.delta().entry(i * 3 + (2 - i), 0), &qs(1));
        }
    }

    #[test]
    fn poly2_over_gf2_validates() {
        let gf2 = FieldSpec::prime_field(2).unwrap();
        let alg = validated(&build_poly(2, gf2).unwrap());
        assert_eq!(alg.delta0(), &Scalar::zero(gf2)); // 2 ≡ 0 mod 2
    }

    #[test]
    fn zero_counit_is_degenerate() {
        let mut pres = build_complex();
        pres.counit_vector = vec![qs(0), qs(0)];
        assert!(matches!(
            validate(&pres),
            Err(FrobeniusError::DegeneratePairing)
        ));
    }

    #[test]
    fn group_z2_constants() {
        let alg = validated(&build_group_z2(Q));
        // μΔ = 2·identity; δ₀ = δ₁ = 2.
        assert_eq!(
            alg.mu().after(alg.delta()),
            alg.id(1).scale(&qs(2))
        );
        let (_, d0, d1) = handle_data(&alg);
        assert_eq!(d0, qs(2));
        assert_eq!(d1, Some(qs(2)));
        // γ(1) = Σ_g g ⊗ g⁻¹ = 1⊗1 + x⊗x.
        assert_eq!(alg.gamma().entry(0, 0), &qs(1));
        assert_eq!(alg.gamma().entry(3, 0), &qs(1));
    }

    #[test]
    fn group_s3_constants() {
        let alg = validated(&build_group_s3(Q));
        let (_, d0, d1) = handle_data(&alg);
        assert_eq!(d0, qs(6));
        assert_eq!(d1, Some(qs(6)));
        assert!(alg.is_symmetric());
        assert!(!alg.is_commutative());
    }

    #[test]
    fn group_algebra_handle_powers() {
        // (μΔ)^n = δ₁^n · identity for group algebras.
        for pres in [build_group_z2(Q), build_group_s3(Q)] {
            let alg = validated(&pres);
            let d1 = alg.scalar_handle().unwrap().clone();
            let op = alg.mu().after(alg.delta());
            let mut power = alg.id(1);
            let mut scalar_power = Scalar::one(Q);
            for _ in 1..=3 {
                power = op.after(&power);
                scalar_power = scalar_power.times(&d1);
                assert_eq!(power, alg.id(1).scale(&scalar_power));
            }
        }
    }

    #[test]
    fn table_without_identity_is_not_a_group() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let table = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            build_group(&names, &table, Q),
            Err(FrobeniusError::NotAGroup(_))
        ));
    }

    #[test]
    fn s3alt_structure() {
        let alg = validated(&build_s3_alt());
        // Handle element 2(xyx + x + y) in the fixed order (e,x,y,xy,yx,xyx).
        assert_eq!(
            alg.handle_element(),
            &[qs(0), qs(2), qs(2), qs(0), qs(0), qs(2)]
        );
        assert!(!alg.is_commutative());
        assert!(!alg.is_symmetric());
        assert_eq!(alg.scalar_handle(), None);
        // β(x⊗yx) = ε(x·yx) = ε(xyx) = 1 but β(yx⊗x) = ε(yx·x) = ε(y) = 0.
        assert_eq!(alg.beta().entry(0, 1 * 6 + 4), &qs(1));
        assert_eq!(alg.beta().entry(0, 4 * 6 + 1), &qs(0));
    }

    #[test]
    fn qpoly_structure_at_i() {
        let alg = validated(&build_qpoly(&Scalar::i()).unwrap());
        let f = FieldSpec::GaussianRationals;
        let one = Scalar::one(f);
        let i = Scalar::i();
        // q = −A⁻² = 1 at A = i: the algebra is commutative and symmetric.
        assert!(alg.is_commutative());
        assert!(alg.is_symmetric());
        // γ(1) = iA(x⊗y) − iA⁻¹(y⊗x) − iA⁻¹(xy⊗1 + 1⊗xy); at A = i this is
        // −(x⊗y) − (y⊗x) − (xy⊗1) − (1⊗xy).
        let m1 = one.negate();
        assert_eq!(alg.gamma().entry(1 * 4 + 2, 0), &m1);
        assert_eq!(alg.gamma().entry(2 * 4 + 1, 0), &m1);
        assert_eq!(alg.gamma().entry(3 * 4 + 0, 0), &m1);
        assert_eq!(alg.gamma().entry(0 * 4 + 3, 0), &m1);
        // Δ(xy) = −iA⁻¹(xy⊗xy) = −(xy⊗xy) at A = i.
        assert_eq!(alg.delta().entry(3 * 4 + 3, 3), &m1);
        // δ_h = −4·xy.
        let zero = Scalar::zero(f);
        assert_eq!(
            alg.handle_element(),
            &[zero.clone(), zero.clone(), zero.clone(), qs_g(-4)]
        );
        // Same via the closed form iA⁻¹(A − A⁻¹)²·xy.
        let a = i.clone();
        let closed = i
            .times(&a.invert())
            .times(&a.minus(&a.invert()).times(&a.minus(&a.invert())));
        assert_eq!(closed, qs_g(-4));
    }

    fn qs_g(n: i64) -> Scalar {
        Scalar::from_integer(n, FieldSpec::GaussianRationals)
    }

    #[test]
    fn qpoly_rejects_zero_parameter() {
        assert_eq!(
            build_qpoly(&Scalar::zero(FieldSpec::GaussianRationals)).unwrap_err(),
            FrobeniusError::ZeroParameter
        );
    }

    #[test]
    fn qpoly_symmetry_depends_on_parameter() {
        // A = 2: q = −1/4 ≠ 1, not symmetric, not commutative.
        let alg = validated(&build_qpoly(&qs_g(2)).unwrap());
        assert!(!alg.is_symmetric());
        assert!(!alg.is_commutative());
    }

    #[test]
    fn trace_form_on_group_algebras() {
        // QZ₂: ε(1) = 2, ε(x) = 0.
        let tf = trace_form(&build_group_z2(Q)).unwrap();
        assert_eq!(tf.counit_vector(), &[qs(2), qs(0)]);
        assert!(validate(&tf).is_ok());
        // GF(2)Z₂: the trace form vanishes identically.
        let gf2 = FieldSpec::prime_field(2).unwrap();
        assert_eq!(
            trace_form(&build_group_z2(gf2)).unwrap_err(),
            FrobeniusError::DegeneratePairing
        );
        // QS₃ is semisimple, so the trace form is nondegenerate.
        let tf = trace_form(&build_group_s3(Q)).unwrap();
        assert!(validate(&tf).is_ok());
    }

    #[test]
    fn validation_reports_associativity_witness() {
        let mut pres = build_complex();
        // Corrupt 1·i to equal 1; then (i·1)·i = −1 but i·(1·i) = i.
        pres.mul_constants[(0 * 2 + 1) * 2 + 1] = qs(0);
        pres.mul_constants[(0 * 2 + 1) * 2 + 0] = qs(1);
        match validate(&pres) {
            Err(FrobeniusError::NotAssociative { a, b, c }) => {
                // First failing triple in scan order: (1·i)·i = 1·i = 1 but
                // 1·(i·i) = −1.
                assert_eq!((a.as_str(), b.as_str(), c.as_str()), ("1", "i", "i"));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn validation_reports_unit_failure() {
        let mut pres = build_complex();
        pres.unit_vector = vec![qs(0), qs(1)]; // "unit" = i
        match validate(&pres) {
            Err(FrobeniusError::UnitLawFails { .. }) => {}
            other => panic!("expected unit-law failure, got {other:?}"),
        }
    }

    #[test]
    fn pairing_is_associative_on_builtins() {
        for pres in [
            build_complex(),
            build_poly(2, Q).unwrap(),
            build_group_z2(Q),
            build_s3_alt(),
        ] {
            let alg = validated(&pres);
            let id1 = alg.id(1);
            assert_eq!(
                alg.beta().after(&alg.mu().tens(&id1)),
                alg.beta().after(&id1.tens(alg.mu()))
            );
        }
    }

    #[test]
    fn builtin_registry_resolves_names() {
        for name in ["complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "qpoly:i"] {
            let pres = builtin_presentation(name, None).expect(name);
            assert!(validate(&pres).is_ok(), "{name} must validate");
        }
        let gf2 = FieldSpec::prime_field(2).unwrap();
        assert!(builtin_presentation("poly:2", Some(gf2)).is_ok());
        assert!(builtin_presentation("group:Zn:4", Some(gf2)).is_ok());
        assert!(matches!(
            builtin_presentation("complex", Some(gf2)),
            Err(FrobeniusError::FieldOverrideNotSupported(_))
        ));
        assert!(matches!(
            builtin_presentation("nonsense", None),
            Err(FrobeniusError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn scalar_handle_prints_exactly() {
        let alg = validated(&build_group_z2(Q));
        assert_eq!(print_scalar(alg.scalar_handle().unwrap()), "2");
    }
}
