//! First-order deformations of a Frobenius structure over the dual numbers
//! `k[t]/(t²)`.
//!
//! A deformation replaces the structure maps by `μₜ = μ + tφ₁` and
//! `Δₜ = Δ + tφ₂` for a degree-2 cochain `(φ₁, φ₂)` and truncates all
//! arithmetic at `t²`. [`primary_obstruction`] measures how far the deformed
//! maps are from being a Frobenius structure: the order-`t` parts of the
//! associator, both compatibility defects, and the coassociator. These four
//! defects coincide exactly with the degree-2 differential applied to
//! `(φ₁, φ₂)` — one middle component per compatibility shape — so a
//! deformation stays Frobenius mod `t²` precisely when the cochain is a joint
//! 2-cocycle ([`check_frobenius_mod_t2`]).
//!
//! On a commutative algebra whose handle is the scalar `δ₁⁰`, the deformed
//! family `R = C·Δₜμₜ + T·τ` stays a Yang–Baxter solution when the cochain
//! additionally satisfies `φ₁τ = φ₁`, `τφ₂ = φ₂`, and `μₜΔₜ = δ₁·|` for a
//! dual scalar `δ₁`. Those conditions are linear;
//! [`deformation_constraint_space`] solves them as one joint system (the
//! order-`t` handle scalar `δ₁¹` rides along as an auxiliary unknown and is
//! projected out of the reported basis). [`deformed_r`] builds
//! `R = C·(Δ+tφ₂)(μ+tφ₁) + T·τ` for any cochain and reports the exact
//! Yang–Baxter verdict mod `t²`, so non-members of the constraint space can
//! be probed honestly.

use crate::cohomology::{pad, Cochain, Variant};
use crate::frobenius::FrobeniusAlgebra;
use crate::scalars::{print_scalar, FieldSpec, Scalar};
use crate::tensorlin::{LinMap, Mat, Subspace};

/// Errors from deformation constructions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DeformationError {
    /// The deformed R-matrix family needs a commutative multiplication.
    #[error("this construction requires a commutative Frobenius algebra")]
    NotCommutative,
    /// The deformed R-matrix family needs `μΔ = δ₁⁰·|` for a scalar `δ₁⁰`.
    #[error("the handle element is not a scalar multiple of the unit")]
    NoScalarHandle,
    /// A coefficient that must be nonzero was zero.
    #[error("coefficient must be nonzero")]
    ZeroParameter,
    /// `(μ+tφ₁)(Δ+tφ₂)` is not a dual-scalar multiple of the identity.
    #[error("the deformed handle map is not proportional to the identity")]
    NotProportionalToIdentity,
}

/// An element `a₀ + a₁t` of the dual numbers `k[t]/(t²)`; products drop the
/// `t²` term structurally, so `t·t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualScalar {
    a0: Scalar,
    a1: Scalar,
}

impl DualScalar {
    pub fn new(a0: Scalar, a1: Scalar) -> DualScalar {
        assert_eq!(a0.field(), a1.field(), "dual-scalar parts must share a field");
        DualScalar { a0, a1 }
    }

    /// The constant `a + 0t`.
    pub fn constant(a: Scalar) -> DualScalar {
        let field = a.field();
        DualScalar::new(a, Scalar::zero(field))
    }

    pub fn zero(field: FieldSpec) -> DualScalar {
        DualScalar::constant(Scalar::zero(field))
    }

    pub fn one(field: FieldSpec) -> DualScalar {
        DualScalar::constant(Scalar::one(field))
    }

    /// The deformation parameter `t = 0 + 1t`.
    pub fn t(field: FieldSpec) -> DualScalar {
        DualScalar::new(Scalar::zero(field), Scalar::one(field))
    }

    pub fn field(&self) -> FieldSpec {
        self.a0.field()
    }

    /// The order-0 part `a₀`.
    pub fn order0(&self) -> &Scalar {
        &self.a0
    }

    /// The order-`t` part `a₁`.
    pub fn order1(&self) -> &Scalar {
        &self.a1
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn plus(&self, rhs: &DualScalar) -> DualScalar {
        DualScalar::new(self.a0.plus(&rhs.a0), self.a1.plus(&rhs.a1))
    }

    pub fn minus(&self, rhs: &DualScalar) -> DualScalar {
        DualScalar::new(self.a0.minus(&rhs.a0), self.a1.minus(&rhs.a1))
    }

    /// `(a₀ + a₁t)(b₀ + b₁t) = a₀b₀ + (a₀b₁ + a₁b₀)t`.
    pub fn times(&self, rhs: &DualScalar) -> DualScalar {
        DualScalar::new(
            self.a0.times(&rhs.a0),
            self.a0.times(&rhs.a1).plus(&self.a1.times(&rhs.a0)),
        )
    }

    pub fn negate(&self) -> DualScalar {
        DualScalar::new(self.a0.negate(), self.a1.negate())
    }
}

impl std::fmt::Display for DualScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.a1.is_zero() {
            return write!(f, "{}", print_scalar(&self.a0));
        }
        let t_term = if self.a1.is_one() {
            "t".to_string()
        } else {
            let text = print_scalar(&self.a1);
            if text.contains(['+', '-', '/']) {
                format!("({text})t")
            } else {
                format!("{text}t")
            }
        };
        if self.a0.is_zero() {
            write!(f, "{t_term}")
        } else {
            write!(f, "{} + {}", print_scalar(&self.a0), t_term)
        }
    }
}

/// A linear map `f₀ + tf₁` between tensor powers, truncated at `t²`. Both
/// parts share arities; composition and tensor products carry the order-`t`
/// part `f₀∘g₁ + f₁∘g₀` (resp. `f₀⊗g₁ + f₁⊗g₀`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualLinMap {
    f0: LinMap,
    f1: LinMap,
}

impl DualLinMap {
    pub fn new(f0: LinMap, f1: LinMap) -> DualLinMap {
        assert_eq!(f0.field(), f1.field(), "dual-map parts must share a field");
        assert_eq!(f0.dim(), f1.dim(), "dual-map parts must share a dimension");
        assert_eq!(
            (f0.dom_arity(), f0.cod_arity()),
            (f1.dom_arity(), f1.cod_arity()),
            "dual-map parts must share arities"
        );
        DualLinMap { f0, f1 }
    }

    /// The undeformed map `f + 0t`.
    pub fn constant(f: LinMap) -> DualLinMap {
        let zero = LinMap::zero(f.field(), f.dim(), f.dom_arity(), f.cod_arity());
        DualLinMap::new(f, zero)
    }

    pub fn identity(field: FieldSpec, dim: usize, arity: usize) -> DualLinMap {
        DualLinMap::constant(LinMap::identity(field, dim, arity))
    }

    pub fn field(&self) -> FieldSpec {
        self.f0.field()
    }

    pub fn dim(&self) -> usize {
        self.f0.dim()
    }

    pub fn dom_arity(&self) -> usize {
        self.f0.dom_arity()
    }

    pub fn cod_arity(&self) -> usize {
        self.f0.cod_arity()
    }

    /// The order-0 part `f₀`.
    pub fn order0(&self) -> &LinMap {
        &self.f0
    }

    /// The order-`t` part `f₁`.
    pub fn order1(&self) -> &LinMap {
        &self.f1
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero()
    }

    /// Composition `self ∘ rhs` with the dual-number product rule.
    pub fn after(&self, rhs: &DualLinMap) -> DualLinMap {
        DualLinMap::new(
            self.f0.after(&rhs.f0),
            self.f0.after(&rhs.f1).add(&self.f1.after(&rhs.f0)),
        )
    }

    /// Tensor product `self ⊗ rhs` with the dual-number product rule.
    pub fn tens(&self, rhs: &DualLinMap) -> DualLinMap {
        DualLinMap::new(
            self.f0.tens(&rhs.f0),
            self.f0.tens(&rhs.f1).add(&self.f1.tens(&rhs.f0)),
        )
    }

    /// `id^{⊗left} ⊗ self ⊗ id^{⊗right}`; identities contribute no order-`t`
    /// part, so both parts are padded independently.
    pub fn pad(&self, left: usize, right: usize) -> DualLinMap {
        DualLinMap::new(pad(&self.f0, left, right), pad(&self.f1, left, right))
    }

    pub fn add(&self, rhs: &DualLinMap) -> DualLinMap {
        DualLinMap::new(self.f0.add(&rhs.f0), self.f1.add(&rhs.f1))
    }

    pub fn sub(&self, rhs: &DualLinMap) -> DualLinMap {
        DualLinMap::new(self.f0.sub(&rhs.f0), self.f1.sub(&rhs.f1))
    }

    pub fn neg(&self) -> DualLinMap {
        DualLinMap::new(self.f0.neg(), self.f1.neg())
    }

    /// Scalar multiple `(c₀ + c₁t)·(f₀ + tf₁) = c₀f₀ + (c₀f₁ + c₁f₀)t`.
    pub fn scale(&self, c: &DualScalar) -> DualLinMap {
        DualLinMap::new(
            self.f0.scale(&c.a0),
            self.f1.scale(&c.a0).add(&self.f0.scale(&c.a1)),
        )
    }
}

/// The deformed structure maps `(μ + tφ₁, Δ + tφ₂)` of an algebra.
fn deformed_structure(
    alg: &FrobeniusAlgebra,
    phi1: &LinMap,
    phi2: &LinMap,
) -> (DualLinMap, DualLinMap) {
    assert_eq!(phi1.field(), alg.field(), "φ₁ must live over the algebra's field");
    assert_eq!(phi2.field(), alg.field(), "φ₂ must live over the algebra's field");
    assert_eq!(phi1.dim(), alg.dim(), "φ₁ must match the algebra's dimension");
    assert_eq!(phi2.dim(), alg.dim(), "φ₂ must match the algebra's dimension");
    assert_eq!(
        (phi1.dom_arity(), phi1.cod_arity()),
        (2, 1),
        "φ₁ must have multiplication arities"
    );
    assert_eq!(
        (phi2.dom_arity(), phi2.cod_arity()),
        (1, 2),
        "φ₂ must have comultiplication arities"
    );
    (
        DualLinMap::new(alg.mu().clone(), phi1.clone()),
        DualLinMap::new(alg.delta().clone(), phi2.clone()),
    )
}

/// The four Frobenius defects of a candidate pair, mod `t²`: associator,
/// first and second compatibility defects, coassociator.
fn frobenius_defects(mu_t: &DualLinMap, delta_t: &DualLinMap) -> [DualLinMap; 4] {
    let assoc = mu_t
        .after(&mu_t.pad(0, 1))
        .sub(&mu_t.after(&mu_t.pad(1, 0)));
    let compat1 = delta_t
        .after(mu_t)
        .sub(&mu_t.pad(0, 1).after(&delta_t.pad(1, 0)));
    let compat2 = delta_t
        .after(mu_t)
        .sub(&mu_t.pad(1, 0).after(&delta_t.pad(0, 1)));
    let coassoc = delta_t
        .pad(0, 1)
        .after(delta_t)
        .sub(&delta_t.pad(1, 0).after(delta_t));
    [assoc, compat1, compat2, coassoc]
}

/// The order-`t` Frobenius defects of `(μ + tφ₁, Δ + tφ₂)`: the obstruction
/// to the deformation being a Frobenius structure mod `t²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryObstruction {
    xi1: LinMap,
    xi2: LinMap,
    xi2_prime: LinMap,
    xi3: LinMap,
}

impl PrimaryObstruction {
    /// The associator defect `ξ₁ : A³ → A`.
    pub fn xi1(&self) -> &LinMap {
        &self.xi1
    }

    /// The first compatibility defect `ξ₂ : A² → A²`
    /// (against `(μ⊗|)(|⊗Δ)`).
    pub fn xi2(&self) -> &LinMap {
        &self.xi2
    }

    /// The second compatibility defect `ξ₂′ : A² → A²`
    /// (against `(|⊗μ)(Δ⊗|)`).
    pub fn xi2_prime(&self) -> &LinMap {
        &self.xi2_prime
    }

    /// The coassociator defect `ξ₃ : A → A³`.
    pub fn xi3(&self) -> &LinMap {
        &self.xi3
    }

    /// The defects assembled as a degree-3 cochain, with the middle component
    /// chosen by the compatibility variant: `(ξ₁, ξ₂, ξ₃)` or `(ξ₁, ξ₂′, ξ₃)`.
    pub fn cochain(&self, variant: Variant) -> Cochain {
        let middle = match variant {
            Variant::One => self.xi2.clone(),
            Variant::Two => self.xi2_prime.clone(),
        };
        Cochain::new(3, vec![self.xi1.clone(), middle, self.xi3.clone()])
            .expect("defect maps have degree-3 cochain arities")
    }

    pub fn is_zero(&self) -> bool {
        self.xi1.is_zero() && self.xi2.is_zero() && self.xi2_prime.is_zero() && self.xi3.is_zero()
    }
}

/// Computes the primary obstruction of `(μ + tφ₁, Δ + tφ₂)` from the
/// order-`t` defects of the deformed maps. The four defects equal the
/// degree-2 differential of `(φ₁, φ₂)` — first variant for `ξ₂`, second for
/// `ξ₂′` — but they are computed here by dual-number composition, not by the
/// differential formulas, so the two code paths cross-check each other.
pub fn primary_obstruction(
    alg: &FrobeniusAlgebra,
    phi1: &LinMap,
    phi2: &LinMap,
) -> PrimaryObstruction {
    let (mu_t, delta_t) = deformed_structure(alg, phi1, phi2);
    let [assoc, compat1, compat2, coassoc] = frobenius_defects(&mu_t, &delta_t);
    for defect in [&assoc, &compat1, &compat2, &coassoc] {
        assert!(
            defect.order0().is_zero(),
            "a validated algebra satisfies the Frobenius identities at order 0"
        );
    }
    PrimaryObstruction {
        xi1: assoc.order1().clone(),
        xi2: compat1.order1().clone(),
        xi2_prime: compat2.order1().clone(),
        xi3: coassoc.order1().clone(),
    }
}

/// True when the pair satisfies associativity, both compatibility shapes, and
/// coassociativity mod `t²`. The inputs need multiplication/comultiplication
/// arities but are otherwise arbitrary; for `(μ + tφ₁, Δ + tφ₂)` over a
/// validated algebra this holds exactly when `(φ₁, φ₂)` is a 2-cocycle for
/// both compatibility variants simultaneously.
pub fn check_frobenius_mod_t2(mu_t: &DualLinMap, delta_t: &DualLinMap) -> bool {
    assert_eq!(
        (mu_t.dom_arity(), mu_t.cod_arity()),
        (2, 1),
        "μₜ must have multiplication arities"
    );
    assert_eq!(
        (delta_t.dom_arity(), delta_t.cod_arity()),
        (1, 2),
        "Δₜ must have comultiplication arities"
    );
    assert_eq!(mu_t.field(), delta_t.field(), "the pair must share a field");
    assert_eq!(mu_t.dim(), delta_t.dim(), "the pair must share a dimension");
    frobenius_defects(mu_t, delta_t)
        .iter()
        .all(DualLinMap::is_zero)
}

/// `Some(c)` when `m = c·id` on `A`, otherwise `None`.
fn proportional_to_identity(m: &LinMap) -> Option<Scalar> {
    assert_eq!(
        (m.dom_arity(), m.cod_arity()),
        (1, 1),
        "proportionality to the identity is a question about maps A → A"
    );
    let d = m.dim();
    let factor = m.entry(0, 0).clone();
    for r in 0..d {
        for c in 0..d {
            if r == c {
                if m.entry(r, c) != &factor {
                    return None;
                }
            } else if !m.entry(r, c).is_zero() {
                return None;
            }
        }
    }
    Some(factor)
}

/// The solution space of the deformed-R-matrix conditions, reported as a
/// basis of degree-2 cochains.
#[derive(Clone, Debug)]
pub struct ConstraintSpace {
    field: FieldSpec,
    dim: usize,
    basis: Vec<Cochain>,
    span: Subspace,
}

impl ConstraintSpace {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The algebra dimension the cochains act on.
    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    /// Number of free variables.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Echelon-normalized basis cochains.
    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    /// The linear combination `Σ coeffs[k]·basis[k]`.
    pub fn element(&self, coeffs: &[Scalar]) -> Cochain {
        assert_eq!(
            coeffs.len(),
            self.basis.len(),
            "one coefficient per basis cochain"
        );
        let mut out = Cochain::zero(self.field, self.dim, 2);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(c));
        }
        out
    }

    /// Exact membership test.
    pub fn contains(&self, c: &Cochain) -> bool {
        c.degree() == 2
            && c.dim() == self.dim
            && c.field() == self.field
            && self.span.contains(&c.flatten())
    }
}

/// Solves the linear system cutting out the deformations `(φ₁, φ₂)` whose
/// deformed R-matrix stays a Yang–Baxter solution mod `t²`:
///
/// - all four 2-cocycle conditions (both compatibility variants),
/// - the commutativity conditions `φ₁τ = φ₁` and `τφ₂ = φ₂`,
/// - the handle condition `μφ₂ + φ₁Δ = δ₁¹·|` for some scalar `δ₁¹`.
///
/// Everything is assembled into one joint system over the `2d³` cochain
/// coordinates plus the auxiliary unknown `δ₁¹`, which is projected out of
/// the reported basis afterwards (the projection is injective: a solution
/// with zero cochain part forces `δ₁¹ = 0`).
pub fn deformation_constraint_space(
    alg: &FrobeniusAlgebra,
) -> Result<ConstraintSpace, DeformationError> {
    if !alg.is_commutative() {
        return Err(DeformationError::NotCommutative);
    }
    if alg.scalar_handle().is_none() {
        return Err(DeformationError::NoScalarHandle);
    }
    let field = alg.field();
    let d = alg.dim();
    let n = Cochain::coordinate_count(d, 2);
    let tau = alg.tau();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut flat = vec![Scalar::zero(field); n];
        flat[j] = Scalar::one(field);
        let c = Cochain::from_flat(field, d, 2, &flat).expect("unit coordinate cochain");
        let phi1 = c.component(1);
        let phi2 = c.component(2);
        let obstruction = primary_obstruction(alg, phi1, phi2);
        let mut col = obstruction.cochain(Variant::One).flatten();
        col.extend(obstruction.xi2_prime().flatten());
        col.extend(phi1.after(&tau).sub(phi1).flatten());
        col.extend(tau.after(phi2).sub(phi2).flatten());
        col.extend(alg.mu().after(phi2).add(&phi1.after(alg.delta())).flatten());
        columns.push(col);
    }
    let handle_rows = d * d;
    let mut aux = vec![Scalar::zero(field); columns[0].len() - handle_rows];
    aux.extend(LinMap::identity(field, d, 1).neg().flatten());
    columns.push(aux);
    let rows = columns[0].len();
    let kernel = Mat::from_columns(field, rows, &columns).kernel();
    let projected: Vec<Vec<Scalar>> = kernel
        .basis()
        .iter()
        .map(|v| v[..n].to_vec())
        .collect();
    let basis = projected
        .iter()
        .map(|v| Cochain::from_flat(field, d, 2, v).expect("projected kernel vector"))
        .collect();
    Ok(ConstraintSpace {
        field,
        dim: d,
        basis,
        span: Subspace::from_vectors(field, n, projected),
    })
}

/// The dual scalar `δ₁` with `(μ + tφ₁)(Δ + tφ₂) = δ₁·|` mod `t²`. The
/// order-0 part is the algebra's scalar handle; the order-`t` part is
/// `μφ₂ + φ₁Δ` read off the diagonal. Fails with
/// [`DeformationError::NotProportionalToIdentity`] when either order of the
/// composite is not a multiple of the identity.
pub fn delta1_of(
    alg: &FrobeniusAlgebra,
    phi1: &LinMap,
    phi2: &LinMap,
) -> Result<DualScalar, DeformationError> {
    let (mu_t, delta_t) = deformed_structure(alg, phi1, phi2);
    let handle = mu_t.after(&delta_t);
    let a0 = proportional_to_identity(handle.order0())
        .ok_or(DeformationError::NotProportionalToIdentity)?;
    let a1 = proportional_to_identity(handle.order1())
        .ok_or(DeformationError::NotProportionalToIdentity)?;
    Ok(DualScalar::new(a0, a1))
}

/// Exact Yang–Baxter check mod `t²`:
/// `(R⊗|)(|⊗R)(R⊗|) = (|⊗R)(R⊗|)(|⊗R)` with dual-number arithmetic.
pub fn check_ybe_mod_t2(map: &DualLinMap) -> bool {
    assert_eq!(
        (map.dom_arity(), map.cod_arity()),
        (2, 2),
        "a Yang–Baxter candidate maps A⊗A to A⊗A"
    );
    let left = map.pad(0, 1);
    let right = map.pad(1, 0);
    left.after(&right).after(&left) == right.after(&left).after(&right)
}

/// A deformed R-matrix together with its Yang–Baxter verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedR {
    map: DualLinMap,
    ybe_ok: bool,
}

impl DeformedR {
    /// The map `C·(Δ+tφ₂)(μ+tφ₁) + T·τ`.
    pub fn map(&self) -> &DualLinMap {
        &self.map
    }

    /// Whether the map satisfies the Yang–Baxter equation mod `t²`.
    pub fn ybe_ok(&self) -> bool {
        self.ybe_ok
    }
}

/// Builds the deformed R-matrix `R = C·(Δ+tφ₂)(μ+tφ₁) + T·τ` and verifies
/// the Yang–Baxter equation mod `t²`. The algebra must be commutative with a
/// scalar handle and both coefficients nonzero — the admissibility of the
/// undeformed `C·Δμ + T·τ` family — but `(φ₁, φ₂)` is *not* required to lie
/// in [`deformation_constraint_space`]: for non-members the function simply
/// reports `ybe_ok = false` when the verification fails.
pub fn deformed_r(
    alg: &FrobeniusAlgebra,
    phi1: &LinMap,
    phi2: &LinMap,
    c: &Scalar,
    t: &Scalar,
) -> Result<DeformedR, DeformationError> {
    if !alg.is_commutative() {
        return Err(DeformationError::NotCommutative);
    }
    if alg.scalar_handle().is_none() {
        return Err(DeformationError::NoScalarHandle);
    }
    if c.is_zero() || t.is_zero() {
        return Err(DeformationError::ZeroParameter);
    }
    let (mu_t, delta_t) = deformed_structure(alg, phi1, phi2);
    let map = delta_t
        .after(&mu_t)
        .scale(&DualScalar::constant(c.clone()))
        .add(&DualLinMap::constant(alg.tau()).scale(&DualScalar::constant(t.clone())));
    let ybe_ok = check_ybe_mod_t2(&map);
    Ok(DeformedR { map, ybe_ok })
}

/// Human-readable names for the `2d³` coordinates of a degree-2 cochain, in
/// flattening order: `λ^a_{b,c}` is the coefficient of basis element `a` in
/// `φ₁(b⊗c)`, and `γ_a^{b,c}` is the coefficient of `b⊗c` in `φ₂(a)`. For
/// the two-dimensional group algebra `{1, x}` (with `x² = 1`) the four
/// traditional shorthands `λ = λ^1_{1,x}`, `λ′ = λ^x_{1,x}`, `q = γ_1^{1,1}`,
/// `r = γ_x^{1,1}` are substituted, and for the complex presentation
/// `{1, i}` the two shorthands `λ = λ^1_{1,i}`, `λ′ = λ^i_{1,i}`.
pub fn coordinate_labels(alg: &FrobeniusAlgebra) -> Vec<String> {
    let d = alg.dim();
    let names = alg.basis_names();
    let mut out = Vec::with_capacity(Cochain::coordinate_count(d, 2));
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                out.push(format!("λ^{}_{{{},{}}}", names[a], names[b], names[c]));
            }
        }
    }
    for b in 0..d {
        for c in 0..d {
            for a in 0..d {
                out.push(format!("γ_{}^{{{},{}}}", names[a], names[b], names[c]));
            }
        }
    }
    if d == 2 && names[0] == "1" {
        let xx = alg.pres().mul_constant(1, 1, 0);
        let group_like = names[1] == "x" && xx.is_one() && alg.pres().mul_constant(1, 1, 1).is_zero();
        let complex_like = names[1] == "i" && xx.negate().is_one();
        if group_like || complex_like {
            out[1] = "λ".to_string();
            out[d * d + 1] = "λ′".to_string();
        }
        if group_like {
            out[d * d * d] = "q".to_string();
            out[d * d * d + 1] = "r".to_string();
        }
    }
    out
}
