//! Deterministic random generators shared by the unit tests, the property
//! suites, and the acceptance self-test. Everything is seeded explicitly so
//! runs are reproducible bit-for-bit.

use crate::scalars::{FieldSpec, Scalar};
use crate::tensorlin::LinMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A reproducible random generator with a fixed seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random scalar: fraction with numerator in `[-9, 9]` and denominator
/// in `[1, 9]` (or their images in `GF(p)` / `Q(i)`).
pub fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            Scalar::from_fraction(rng.gen_range(-9..=9), rng.gen_range(1..=9), field)
                .expect("denominator is nonzero")
        }
        FieldSpec::GaussianRationals => {
            let part = |rng: &mut ChaCha8Rng| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-9..=9i64)),
                    BigInt::from(rng.gen_range(1..=9i64)),
                )
            };
            Scalar::gaussian(part(rng), part(rng))
        }
        FieldSpec::PrimeField(p) => Scalar::from_integer(rng.gen_range(0..p as i64), field),
    }
}

/// A dense random linear map of the given arities.
pub fn random_linmap(
    rng: &mut ChaCha8Rng,
    field: FieldSpec,
    dim: usize,
    dom_arity: usize,
    cod_arity: usize,
) -> LinMap {
    let rows = dim.pow(cod_arity as u32);
    let cols = dim.pow(dom_arity as u32);
    let entries = (0..rows * cols).map(|_| random_scalar(rng, field)).collect();
    LinMap::from_entries(field, dim, dom_arity, cod_arity, entries)
}

/// A dense random cochain of the given degree.
pub fn random_cochain(
    rng: &mut ChaCha8Rng,
    field: FieldSpec,
    dim: usize,
    degree: usize,
) -> crate::cohomology::Cochain {
    let components = (1..=degree)
        .map(|i| random_linmap(rng, field, dim, degree + 1 - i, i))
        .collect();
    crate::cohomology::Cochain::new(degree, components).expect("arities are consistent")
}

/// A random cochain whose entries are integers in `[-9, 9]` — useful for
/// parity arguments, where fractional entries would obscure evenness.
pub fn random_integer_cochain(
    rng: &mut ChaCha8Rng,
    field: FieldSpec,
    dim: usize,
    degree: usize,
) -> crate::cohomology::Cochain {
    let count = crate::cohomology::Cochain::coordinate_count(dim, degree);
    let flat: Vec<Scalar> = (0..count)
        .map(|_| Scalar::from_integer(rng.gen_range(-9..=9), field))
        .collect();
    crate::cohomology::Cochain::from_flat(field, dim, degree, &flat)
        .expect("flat length matches the degree")
}
