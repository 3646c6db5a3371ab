//! Yang–Baxter R-matrices built from Frobenius structure maps.
//!
//! An R-matrix here is a linear map `A⊗A → A⊗A` together with the recipe that
//! produced it. Three closed forms are provided — `Δμ` (every algebra), `τΔμ`
//! and the sandwich `(μ⊗|)(|⊗τ)(Δ⊗|)` (symmetric algebras) — plus the skein
//! family `A·|⊗² + B·γβ + C·Δμ + T·τ`. [`check_ybe`] verifies the braid
//! identity `(R⊗|)(|⊗R)(R⊗|) = (|⊗R)(R⊗|)(|⊗R)` by exact matrix products and
//! reports a witness entry on failure. Construction of the symmetric-only
//! forms re-runs that check and returns a failure as a typed error rather
//! than a panic — and for `τΔμ` the failure is reachable: the symmetric but
//! noncommutative group algebra of S₃ does not satisfy the braid identity
//! with the flip composed on (see [`r_tau_delta_mu`]).
//!
//! The closed forms are Yang–Baxter solutions but never invertible (`Δμ`
//! factors through `A`). Invertible solutions come from the skein solvers:
//! [`solve_skein_case_i`] finds `R = |⊗² + B·γβ` with `1 + B² + δ₀B = 0` and
//! inverse `|⊗² + B⁻¹·γβ`, and [`solve_skein_case_ii`] inverts
//! `R = C·Δμ + T·τ` on commutative algebras with a scalar handle. Both
//! re-check the Yang–Baxter equation and the two-sided inverse identity
//! before returning.

use crate::frobenius::FrobeniusAlgebra;
use crate::scalars::{print_scalar, Scalar};
use crate::tensorlin::LinMap;

/// Errors from R-matrix construction and the skein coefficient solvers.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum YbeError {
    /// `τΔμ` and the sandwich construction need a symmetric pairing.
    #[error("this construction requires a symmetric Frobenius algebra")]
    NotSymmetric,
    /// The skein solvers need `μΔ = δ₁·|` for a scalar `δ₁`.
    #[error("the handle element is not a scalar multiple of the unit")]
    NoScalarHandle,
    /// Case (ii) needs a commutative multiplication.
    #[error("this construction requires a commutative Frobenius algebra")]
    NotCommutative,
    /// The coefficient quadratic has no root in the scalar field.
    #[error("the coefficient equation has no solution in the field")]
    NoSolutionInField,
    /// The linear equation for the inverse coefficient degenerates.
    #[error("singular coefficient: T + δ₁·C = 0")]
    SingularCoefficient,
    /// A coefficient that must be nonzero was zero.
    #[error("coefficient must be nonzero")]
    ZeroParameter,
    /// The construction-time Yang–Baxter verification failed; the first
    /// differing entry of the two sides is carried along.
    #[error("the Yang–Baxter check failed at entry ({row}, {col}): {lhs} ≠ {rhs}")]
    YbeCheckFailed {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },
}

/// The recipe behind an R-matrix. Skein coefficients are stored so the map
/// can always be rebuilt from them.
// One value per R-matrix; boxing the skein coefficients would only add
// indirection.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `R = Δμ`.
    DeltaMu,
    /// `R = τΔμ`.
    TauDeltaMu,
    /// `R = (μ⊗|)(|⊗τ)(Δ⊗|)`.
    Sandwich,
    /// `R = A·|⊗² + B·γβ + C·Δμ + T·τ`.
    Skein {
        a: Scalar,
        b: Scalar,
        c: Scalar,
        t: Scalar,
    },
}

/// An `A⊗A → A⊗A` map tagged with the construction that produced it.
///
/// The stored matrix is re-derived from the provenance and compared on every
/// access, so a value of this type cannot drift away from its defining
/// formula.
#[derive(Clone, Debug)]
pub struct RMatrix {
    algebra: FrobeniusAlgebra,
    map: LinMap,
    provenance: Provenance,
}

impl RMatrix {
    fn new(alg: &FrobeniusAlgebra, provenance: Provenance) -> RMatrix {
        let map = build_map(alg, &provenance);
        RMatrix {
            algebra: alg.clone(),
            map,
            provenance,
        }
    }

    /// The underlying matrix, revalidated against the provenance formula.
    pub fn map(&self) -> &LinMap {
        assert_eq!(
            build_map(&self.algebra, &self.provenance),
            self.map,
            "R-matrix no longer matches its defining formula"
        );
        &self.map
    }

    /// The recipe this R-matrix was built from.
    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The algebra the R-matrix lives on.
    pub fn algebra(&self) -> &FrobeniusAlgebra {
        &self.algebra
    }
}

fn build_map(alg: &FrobeniusAlgebra, provenance: &Provenance) -> LinMap {
    match provenance {
        Provenance::DeltaMu => alg.delta().after(alg.mu()),
        Provenance::TauDeltaMu => alg.tau().after(&alg.delta().after(alg.mu())),
        Provenance::Sandwich => {
            let id = alg.id(1);
            alg.mu()
                .tens(&id)
                .after(&id.tens(&alg.tau()))
                .after(&alg.delta().tens(&id))
        }
        Provenance::Skein { a, b, c, t } => alg
            .id(2)
            .scale(a)
            .add(&alg.gamma().after(alg.beta()).scale(b))
            .add(&alg.delta().after(alg.mu()).scale(c))
            .add(&alg.tau().scale(t)),
    }
}

/// One differing matrix entry between the two sides of the Yang–Baxter
/// equation, with both values printed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeWitness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of a Yang–Baxter check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeCheck {
    pub ok: bool,
    pub witness: Option<YbeWitness>,
}

/// Checks `(R⊗|)(|⊗R)(R⊗|) = (|⊗R)(R⊗|)(|⊗R)` for a bare `A⊗A → A⊗A` map by
/// exact matrix products; on failure the first differing entry is returned.
pub fn check_ybe_map(map: &LinMap) -> YbeCheck {
    assert_eq!(
        (map.dom_arity(), map.cod_arity()),
        (2, 2),
        "an R-matrix must map A⊗A to A⊗A"
    );
    let id = LinMap::identity(map.field(), map.dim(), 1);
    let left = map.tens(&id);
    let right = id.tens(map);
    let lhs = left.after(&right).after(&left);
    let rhs = right.after(&left).after(&right);
    if lhs == rhs {
        return YbeCheck {
            ok: true,
            witness: None,
        };
    }
    for row in 0..lhs.rows() {
        for col in 0..lhs.cols() {
            if lhs.entry(row, col) != rhs.entry(row, col) {
                return YbeCheck {
                    ok: false,
                    witness: Some(YbeWitness {
                        row,
                        col,
                        lhs: print_scalar(lhs.entry(row, col)),
                        rhs: print_scalar(rhs.entry(row, col)),
                    }),
                };
            }
        }
    }
    unreachable!("sides differ as maps but no entry differs");
}

/// Checks the Yang–Baxter equation for a tagged R-matrix.
pub fn check_ybe(r: &RMatrix) -> YbeCheck {
    check_ybe_map(r.map())
}

/// `R = Δμ` — a Yang–Baxter solution on every Frobenius algebra. The check
/// runs at construction time.
pub fn r_delta_mu(alg: &FrobeniusAlgebra) -> RMatrix {
    let r = RMatrix::new(alg, Provenance::DeltaMu);
    assert!(
        check_ybe_map(&r.map).ok,
        "Δμ must satisfy the Yang–Baxter equation"
    );
    r
}

fn checked_construction(
    alg: &FrobeniusAlgebra,
    provenance: Provenance,
) -> Result<RMatrix, YbeError> {
    let r = RMatrix::new(alg, provenance);
    match check_ybe_map(&r.map) {
        YbeCheck { ok: true, .. } => Ok(r),
        YbeCheck { witness, .. } => {
            let w = witness.expect("a failed check carries a witness");
            Err(YbeError::YbeCheckFailed {
                row: w.row,
                col: w.col,
                lhs: w.lhs,
                rhs: w.rhs,
            })
        }
    }
}

/// `R = τΔμ` on a symmetric Frobenius algebra.
///
/// The Yang–Baxter check runs at construction, and it can genuinely fail:
/// flipping a Yang–Baxter solution need not give another one. On commutative
/// algebras cocommutativity collapses `τΔμ` to `Δμ` and the check always
/// passes, but on the symmetric group algebra of S₃ the two sides of the
/// braid identity differ, so the failed check comes back as
/// [`YbeError::YbeCheckFailed`] with a witness entry.
pub fn r_tau_delta_mu(alg: &FrobeniusAlgebra) -> Result<RMatrix, YbeError> {
    if !alg.is_symmetric() {
        return Err(YbeError::NotSymmetric);
    }
    checked_construction(alg, Provenance::TauDeltaMu)
}

/// `R = (μ⊗|)(|⊗τ)(Δ⊗|)` — a Yang–Baxter solution on every symmetric
/// Frobenius algebra. The check still runs at construction and a failure
/// would be returned as [`YbeError::YbeCheckFailed`]; none of the builtin
/// algebras triggers it.
pub fn r_sandwich(alg: &FrobeniusAlgebra) -> Result<RMatrix, YbeError> {
    if !alg.is_symmetric() {
        return Err(YbeError::NotSymmetric);
    }
    checked_construction(alg, Provenance::Sandwich)
}

/// The skein combination `A·|⊗² + B·γβ + C·Δμ + T·τ`. Construction never
/// fails; whether the result solves the Yang–Baxter equation depends on the
/// coefficients (see the solvers).
pub fn r_skein(
    alg: &FrobeniusAlgebra,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    t: &Scalar,
) -> RMatrix {
    RMatrix::new(
        alg,
        Provenance::Skein {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            t: t.clone(),
        },
    )
}

/// A solved case (i) coefficient set: `R = A·|⊗² + B·γβ` with two-sided
/// inverse `R′ = A′·|⊗² + B′·γβ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinPair {
    pub a: Scalar,
    pub b: Scalar,
    pub a_prime: Scalar,
    pub b_prime: Scalar,
}

/// Solves the case (i) skein conditions `C = T = 0`, `A² + B² + δ₀AB = 0`
/// with `A` normalized to `1`, on algebras whose handle operator is a scalar
/// `δ₁` times the identity.
///
/// `B` then satisfies `B² + δ₀B + 1 = 0`; in characteristic ≠ 2 the roots are
/// `(−δ₀ ± √(δ₀²−4))/2`, and over GF(2) the two field elements are tested
/// directly. For each distinct root the inverse pair is `(A′, B′) =
/// (1, B⁻¹)`: the product rule `(γβ)² = δ₀·γβ` gives `R·R′ = |⊗² +
/// (B + B′ + δ₀BB′)·γβ`, and `B + B⁻¹ + δ₀ = B⁻¹(B² + δ₀B + 1) = 0`. Every
/// returned pair is re-checked: the quadratic, the cross relation
/// `AB′ + A′B + δ₀BB′ = 0`, the Yang–Baxter equation, and `R·R′ = R′·R = |⊗²`.
pub fn solve_skein_case_i(alg: &FrobeniusAlgebra) -> Result<Vec<SkeinPair>, YbeError> {
    if alg.scalar_handle().is_none() {
        return Err(YbeError::NoScalarHandle);
    }
    let field = alg.field();
    let delta0 = alg.delta0().clone();
    let one = Scalar::one(field);
    let two = Scalar::from_integer(2, field);
    let quadratic =
        |b: &Scalar| one.plus(&b.times(b)).plus(&delta0.times(b));
    let roots: Vec<Scalar> = if two.is_zero() {
        // Characteristic 2: the field is GF(2), so test both elements.
        [Scalar::zero(field), one.clone()]
            .into_iter()
            .filter(|b| quadratic(b).is_zero())
            .collect()
    } else {
        let four = Scalar::from_integer(4, field);
        let disc = delta0.times(&delta0).minus(&four);
        let sqrt = disc
            .sqrt_in_field()
            .map_err(|_| YbeError::NoSolutionInField)?;
        let minus_d0 = delta0.negate();
        let mut out = vec![minus_d0
            .plus(&sqrt)
            .checked_div(&two)
            .expect("2 is invertible outside characteristic 2")];
        if !sqrt.is_zero() {
            out.push(
                minus_d0
                    .minus(&sqrt)
                    .checked_div(&two)
                    .expect("2 is invertible outside characteristic 2"),
            );
        }
        out
    };
    if roots.is_empty() {
        return Err(YbeError::NoSolutionInField);
    }
    let zero = Scalar::zero(field);
    let identity = alg.id(2);
    let mut pairs = Vec::with_capacity(roots.len());
    for b in roots {
        let b_prime = one
            .checked_div(&b)
            .expect("a root of B² + δ₀B + 1 = 0 is nonzero");
        assert!(quadratic(&b).is_zero(), "root must satisfy the quadratic");
        assert!(
            quadratic(&b_prime).is_zero(),
            "inverse coefficient must satisfy the quadratic"
        );
        let cross = b_prime
            .plus(&b)
            .plus(&delta0.times(&b).times(&b_prime));
        assert!(cross.is_zero(), "cross relation AB′ + A′B + δ₀BB′ must hold");
        let r = r_skein(alg, &one, &b, &zero, &zero);
        let r_prime = r_skein(alg, &one, &b_prime, &zero, &zero);
        assert!(check_ybe(&r).ok, "case (i) output must solve the Yang–Baxter equation");
        assert!(
            check_ybe(&r_prime).ok,
            "case (i) inverse must solve the Yang–Baxter equation"
        );
        assert_eq!(r.map().after(r_prime.map()), identity, "R·R′ = identity");
        assert_eq!(r_prime.map().after(r.map()), identity, "R′·R = identity");
        pairs.push(SkeinPair {
            a: one.clone(),
            b,
            a_prime: one.clone(),
            b_prime,
        });
    }
    Ok(pairs)
}

/// Solves the case (ii) skein conditions `A = B = 0`, `TT′ = 1`,
/// `CT′ + C′T + δ₁CC′ = 0` for `R = C·Δμ + T·τ` on a commutative algebra with
/// scalar handle `δ₁`. Returns `(C′, T′)` with `T′ = T⁻¹` and
/// `C′ = −C·T′/(T + δ₁C)`; the Yang–Baxter equation and the two-sided inverse
/// identity are asserted before returning.
pub fn solve_skein_case_ii(
    alg: &FrobeniusAlgebra,
    c: &Scalar,
    t: &Scalar,
) -> Result<(Scalar, Scalar), YbeError> {
    if !alg.is_commutative() {
        return Err(YbeError::NotCommutative);
    }
    let delta1 = alg.scalar_handle().ok_or(YbeError::NoScalarHandle)?.clone();
    if c.is_zero() || t.is_zero() {
        return Err(YbeError::ZeroParameter);
    }
    let field = alg.field();
    let one = Scalar::one(field);
    let t_prime = one.checked_div(t).expect("T is nonzero");
    let denom = t.plus(&delta1.times(c));
    if denom.is_zero() {
        return Err(YbeError::SingularCoefficient);
    }
    let c_prime = c
        .times(&t_prime)
        .negate()
        .checked_div(&denom)
        .expect("denominator is nonzero");
    // Defining relation: CT′ + C′T + δ₁CC′ = 0.
    let relation = c
        .times(&t_prime)
        .plus(&c_prime.times(t))
        .plus(&delta1.times(c).times(&c_prime));
    assert!(relation.is_zero(), "case (ii) linear relation must hold");
    let zero = Scalar::zero(field);
    let r = r_skein(alg, &zero, &zero, c, t);
    let r_prime = r_skein(alg, &zero, &zero, &c_prime, &t_prime);
    assert!(check_ybe(&r).ok, "case (ii) output must solve the Yang–Baxter equation");
    assert!(
        check_ybe(&r_prime).ok,
        "case (ii) inverse must solve the Yang–Baxter equation"
    );
    let identity = alg.id(2);
    assert_eq!(r.map().after(r_prime.map()), identity, "R·R′ = identity");
    assert_eq!(r_prime.map().after(r.map()), identity, "R′·R = identity");
    Ok((c_prime, t_prime))
}

/// The exact inverse of a bare `A⊗A → A⊗A` map, or `None` when singular.
pub fn invert_map(map: &LinMap) -> Option<LinMap> {
    let inv = map.mat().inverse()?;
    let mut entries = Vec::with_capacity(inv.rows() * inv.cols());
    for r in 0..inv.rows() {
        for c in 0..inv.cols() {
            entries.push(inv.at(r, c).clone());
        }
    }
    Some(LinMap::from_entries(
        map.field(),
        map.dim(),
        map.cod_arity(),
        map.dom_arity(),
        entries,
    ))
}

/// The exact inverse of an R-matrix, or `None` when singular.
pub fn invert(r: &RMatrix) -> Option<LinMap> {
    invert_map(r.map())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{build_group_zn, build_qpoly, builtin_presentation, validate};
    use crate::scalars::FieldSpec;
    use crate::testsupport::{random_linmap, rng_from_seed};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn alg(name: &str, field: Option<FieldSpec>) -> FrobeniusAlgebra {
        validate(&builtin_presentation(name, field).unwrap()).unwrap()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    const ALL_BUILTINS: [&str; 7] = [
        "complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "qpoly:i",
    ];
    const SYMMETRIC_BUILTINS: [&str; 6] =
        ["complex", "poly:2", "poly:3", "group:Z2", "group:S3", "qpoly:i"];

    fn int(n: i64, field: FieldSpec) -> Scalar {
        Scalar::from_integer(n, field)
    }

    #[test]
    fn delta_mu_solves_ybe_on_every_builtin() {
        for name in ALL_BUILTINS {
            let a = alg(name, None);
            let r = r_delta_mu(&a);
            assert_eq!(r.provenance(), &Provenance::DeltaMu, "{name}");
            assert!(check_ybe(&r).ok, "{name}");
        }
    }

    #[test]
    fn symmetric_constructions_solve_ybe() {
        // The sandwich works on every symmetric builtin. τΔμ works on the
        // commutative ones, where cocommutativity collapses it to Δμ.
        for name in SYMMETRIC_BUILTINS {
            let a = alg(name, None);
            let r2 = r_sandwich(&a).unwrap();
            assert!(check_ybe(&r2).ok, "{name} sandwich");
            if name == "group:S3" {
                continue;
            }
            let r1 = r_tau_delta_mu(&a).unwrap();
            assert!(check_ybe(&r1).ok, "{name} τΔμ");
            assert_eq!(*r1.map(), *r_delta_mu(&a).map(), "{name} τΔ = Δ");
        }
    }

    #[test]
    fn tau_delta_mu_fails_on_noncommutative_symmetric_s3() {
        // kS₃ is symmetric but not commutative, and composing the flip onto
        // Δμ breaks the braid identity there: the construction-time check
        // fails and comes back with a witness entry.
        let a = alg("group:S3", None);
        match r_tau_delta_mu(&a).unwrap_err() {
            YbeError::YbeCheckFailed { row, col, lhs, rhs } => {
                assert!(row < 216 && col < 216);
                assert_ne!(lhs, rhs);
            }
            other => panic!("expected a failed check, got {other:?}"),
        }
        // The raw composite confirms: Δμ alone passes, τ∘Δμ does not.
        let dm = a.delta().after(a.mu());
        assert!(check_ybe_map(&dm).ok);
        assert!(!check_ybe_map(&a.tau().after(&dm)).ok);
    }

    #[test]
    fn symmetric_constructions_reject_asymmetric_algebras() {
        let a = alg("s3alt", None);
        assert_eq!(r_tau_delta_mu(&a).unwrap_err(), YbeError::NotSymmetric);
        assert_eq!(r_sandwich(&a).unwrap_err(), YbeError::NotSymmetric);
        let q2 = validate(&build_qpoly(&int(2, FieldSpec::GaussianRationals)).unwrap()).unwrap();
        assert_eq!(r_tau_delta_mu(&q2).unwrap_err(), YbeError::NotSymmetric);
    }

    #[test]
    fn delta_mu_on_z2_sums_over_factorizations() {
        // On kℤ₂, R = Δμ sends x⊗y to the sum of all z⊗w with zw = xy:
        // column (a,b) of the matrix is the vector Δ(e_a e_b).
        let a = alg("group:Z2", None);
        let r = r_delta_mu(&a);
        for col in 0..4 {
            let (ea, eb) = (col / 2, col % 2);
            let product = (ea + eb) % 2; // e_a·e_b in ℤ₂, written additively
            for row in 0..4 {
                let (ez, ew) = (row / 2, row % 2);
                let expected = (ez + ew) % 2 == product;
                assert_eq!(!r.map().entry(row, col).is_zero(), expected);
            }
        }
    }

    #[test]
    fn transposition_solves_ybe_and_random_maps_fail() {
        let a = alg("complex", None);
        assert!(check_ybe_map(&a.tau()).ok);
        let mut rng = rng_from_seed(401);
        for _ in 0..5 {
            let m = random_linmap(&mut rng, Q, 2, 2, 2);
            let check = check_ybe_map(&m);
            assert!(!check.ok);
            let w = check.witness.unwrap();
            assert!(w.row < 8 && w.col < 8);
            assert_ne!(w.lhs, w.rhs);
        }
    }

    #[test]
    fn temperley_lieb_identities_on_all_builtins() {
        // (γβ)² = δ₀·γβ always; (Δμ)² = δ₁·Δμ when the handle is scalar.
        for name in ALL_BUILTINS {
            let a = alg(name, None);
            let e = a.gamma().after(a.beta());
            assert_eq!(e.after(&e), e.scale(a.delta0()), "{name} (γβ)²");
            if let Some(d1) = a.scalar_handle() {
                let dm = a.delta().after(a.mu());
                assert_eq!(dm.after(&dm), dm.scale(d1), "{name} (Δμ)²");
            }
        }
    }

    #[test]
    fn skein_map_special_cases() {
        let a = alg("group:Z2", None);
        let one = int(1, Q);
        let zero = int(0, Q);
        assert_eq!(*r_skein(&a, &one, &zero, &zero, &zero).map(), a.id(2));
        assert_eq!(
            *r_skein(&a, &zero, &zero, &one, &zero).map(),
            *r_delta_mu(&a).map()
        );
        assert_eq!(*r_skein(&a, &zero, &zero, &zero, &one).map(), a.tau());
        // E = γβ with E² = δ₀E = 2E.
        let e = r_skein(&a, &zero, &one, &zero, &zero);
        assert_eq!(
            e.map().after(e.map()),
            e.map().scale(&int(2, Q))
        );
    }

    #[test]
    fn case_i_on_z2_and_complex() {
        // δ₀ = 2 for both, so the quadratic (B+1)² = 0 has the double root
        // B = −1 and the inverse coefficient is also −1.
        for name in ["group:Z2", "complex"] {
            let a = alg(name, None);
            let pairs = solve_skein_case_i(&a).unwrap();
            assert_eq!(pairs.len(), 1, "{name}: double root");
            let p = &pairs[0];
            assert!(p.a.is_one() && p.a_prime.is_one(), "{name}");
            assert_eq!(p.b, int(-1, a.field()), "{name}");
            assert_eq!(p.b_prime, int(-1, a.field()), "{name}");
            // R = |⊗² − γβ squares to the identity.
            let zero = Scalar::zero(a.field());
            let r = r_skein(&a, &p.a, &p.b, &zero, &zero);
            assert_eq!(r.map().after(r.map()), a.id(2), "{name} R² = identity");
        }
    }

    #[test]
    fn case_i_distinct_roots_on_z3_over_gf11() {
        // kℤ₃ over GF(11): δ₀ = 3, discriminant 5 = 4², roots B = 2 and
        // B = 6 with inverse coefficients 6 and 2 respectively.
        let a = validate(&build_group_zn(3, gf(11)).unwrap()).unwrap();
        let pairs = solve_skein_case_i(&a).unwrap();
        assert_eq!(pairs.len(), 2);
        let mut bs: Vec<u32> = pairs
            .iter()
            .map(|p| p.b.as_residue().unwrap())
            .collect();
        bs.sort_unstable();
        assert_eq!(bs, vec![2, 6]);
        for p in &pairs {
            assert_eq!(
                p.b.times(&p.b_prime),
                Scalar::one(a.field()),
                "B′ is the reciprocal root"
            );
        }
    }

    #[test]
    fn case_i_on_z2_over_gf2() {
        // Characteristic 2: δ₀ = 0, and B = 1 is the unique solution of
        // B² + 1 = 0; R = |⊗² + γβ is its own inverse since 2γβ = 0.
        let a = alg("group:Z2", Some(gf(2)));
        let pairs = solve_skein_case_i(&a).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].b.is_one());
        assert!(pairs[0].b_prime.is_one());
    }

    #[test]
    fn case_i_gates_and_no_solution() {
        // δ_h = 2x and 3x² are not scalar multiples of 1.
        for name in ["poly:2", "poly:3", "s3alt", "qpoly:i"] {
            let a = alg(name, None);
            assert_eq!(
                solve_skein_case_i(&a).unwrap_err(),
                YbeError::NoScalarHandle,
                "{name}"
            );
        }
        // kS₃ has δ₀ = 6, and 6² − 4 = 32 is not a rational square.
        let a = alg("group:S3", None);
        assert_eq!(
            solve_skein_case_i(&a).unwrap_err(),
            YbeError::NoSolutionInField
        );
    }

    #[test]
    fn case_ii_on_z2_and_complex() {
        for name in ["group:Z2", "complex"] {
            let a = alg(name, None);
            let field = a.field();
            let (c_prime, t_prime) =
                solve_skein_case_ii(&a, &int(1, field), &int(1, field)).unwrap();
            assert_eq!(
                c_prime,
                Scalar::from_fraction(-1, 3, field).unwrap(),
                "{name}"
            );
            assert!(t_prime.is_one(), "{name}");
        }
    }

    #[test]
    fn case_ii_inverse_closes_over_gf2() {
        // δ₁ = 0 over GF(2), so C′ = −C/T² and R = Δμ + τ is self-inverse.
        let a = alg("group:Z2", Some(gf(2)));
        let one = Scalar::one(a.field());
        let (c_prime, t_prime) = solve_skein_case_ii(&a, &one, &one).unwrap();
        assert!(c_prime.is_one() && t_prime.is_one());
    }

    #[test]
    fn case_ii_gates() {
        let a = alg("group:Z2", None);
        // T + δ₁C = 1 + 2·(−1/2) = 0.
        assert_eq!(
            solve_skein_case_ii(&a, &Scalar::from_fraction(-1, 2, Q).unwrap(), &int(1, Q))
                .unwrap_err(),
            YbeError::SingularCoefficient
        );
        assert_eq!(
            solve_skein_case_ii(&a, &int(0, Q), &int(1, Q)).unwrap_err(),
            YbeError::ZeroParameter
        );
        assert_eq!(
            solve_skein_case_ii(&a, &int(1, Q), &int(0, Q)).unwrap_err(),
            YbeError::ZeroParameter
        );
        let s3 = alg("group:S3", None);
        assert_eq!(
            solve_skein_case_ii(&s3, &int(1, Q), &int(1, Q)).unwrap_err(),
            YbeError::NotCommutative
        );
        let p2 = alg("poly:2", None);
        assert_eq!(
            solve_skein_case_ii(&p2, &int(1, Q), &int(1, Q)).unwrap_err(),
            YbeError::NoScalarHandle
        );
    }

    #[test]
    fn case_ii_r_and_r_prime_multiply_to_identity() {
        let a = alg("group:Z2", None);
        let zero = int(0, Q);
        let c = int(1, Q);
        let t = int(1, Q);
        let (c_prime, t_prime) = solve_skein_case_ii(&a, &c, &t).unwrap();
        let r = r_skein(&a, &zero, &zero, &c, &t);
        let r_prime = r_skein(&a, &zero, &zero, &c_prime, &t_prime);
        assert_eq!(r.map().after(r_prime.map()), a.id(2));
        assert_eq!(r_prime.map().after(r.map()), a.id(2));
        assert_eq!(invert(&r).unwrap(), *r_prime.map());
    }

    #[test]
    fn invert_examples() {
        let a = alg("group:Z2", None);
        // τ is an involution.
        assert_eq!(invert_map(&a.tau()).unwrap(), a.tau());
        // Δμ identifies 1⊗x and x⊗1, so it is singular.
        assert_eq!(invert(&r_delta_mu(&a)), None);
        // The case (i) solution R = |⊗² − γβ is its own inverse.
        let zero = int(0, Q);
        let r = r_skein(&a, &int(1, Q), &int(-1, Q), &zero, &zero);
        assert_eq!(invert(&r).unwrap(), *r.map());
    }

    #[test]
    #[should_panic(expected = "no longer matches its defining formula")]
    fn tampered_r_matrix_is_rejected_on_access() {
        let a = alg("group:Z2", None);
        let mut r = r_delta_mu(&a);
        r.map.set_entry(0, 0, int(7, Q));
        let _ = r.map();
    }
}
