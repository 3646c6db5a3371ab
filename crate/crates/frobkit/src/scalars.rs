//! Exact field arithmetic for the three supported ground fields: the
//! rationals `Q`, the Gaussian rationals `Q(i)`, and prime fields `GF(p)`.
//!
//! Every [`Scalar`] is stored in a unique canonical form (reduced fraction
//! with positive denominator, pair of reduced fractions for `Q(i)`, residue
//! in `[0, p)` for `GF(p)`), so equality of scalars is plain structural
//! equality. All arithmetic is exact; there is no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Errors produced by scalar construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// Multiplicative inverse of zero (or division by zero) was requested.
    #[error("division by zero")]
    DivisionByZero,
    /// Two operands live in different fields.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    /// Text did not match the scalar grammar; `position` is a byte offset.
    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    /// The requested square root does not exist in the field.
    #[error("no square root in the field")]
    NoSquareRoot,
    /// The modulus of a prime field failed the primality check.
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
}

/// A ground field: `Q`, `Q(i)`, or `GF(p)` with `p` prime and `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    GaussianRationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// Builds a prime-field spec, verifying primality by trial division.
    pub fn prime_field(p: u64) -> Result<FieldSpec, ScalarError> {
        if p >= (1u64 << 31) || !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    /// Field characteristic: 0 for `Q` and `Q(i)`, `p` for `GF(p)`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p as u64,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::GaussianRationals => write!(f, "Qi"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Gauss(BigRational, BigRational),
    Mod { value: u32, modulus: u32 },
}

/// An exact element of one of the supported fields, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    repr: Repr,
}

impl Scalar {
    /// The field this scalar lives in.
    pub fn field(&self) -> FieldSpec {
        match &self.repr {
            Repr::Rat(_) => FieldSpec::Rationals,
            Repr::Gauss(_, _) => FieldSpec::GaussianRationals,
            Repr::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    /// Additive identity of `field`.
    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_integer(0, field)
    }

    /// Multiplicative identity of `field`.
    pub fn one(field: FieldSpec) -> Scalar {
        Scalar::from_integer(1, field)
    }

    /// The image of the integer `n` in `field`.
    pub fn from_integer(n: i64, field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar {
                repr: Repr::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            FieldSpec::GaussianRationals => Scalar {
                repr: Repr::Gauss(
                    BigRational::from_integer(BigInt::from(n)),
                    BigRational::zero(),
                ),
            },
            FieldSpec::PrimeField(p) => {
                let m = n.rem_euclid(p as i64) as u32;
                Scalar {
                    repr: Repr::Mod { value: m, modulus: p },
                }
            }
        }
    }

    /// The image of the fraction `num/den` in `field`. `den` must be nonzero
    /// (and invertible mod `p` for prime fields).
    pub fn from_fraction(num: i64, den: i64, field: FieldSpec) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let n = Scalar::from_integer(num, field);
        let d = Scalar::from_integer(den, field);
        n.checked_div(&d)
    }

    /// Gaussian rational `re + im·i`; only valid over `Q(i)`.
    pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
        Scalar {
            repr: Repr::Gauss(re, im),
        }
    }

    /// Rational scalar from a `BigRational`.
    pub fn rational(r: BigRational) -> Scalar {
        Scalar { repr: Repr::Rat(r) }
    }

    /// The imaginary unit of `Q(i)`.
    pub fn i() -> Scalar {
        Scalar::gaussian(BigRational::zero(), BigRational::one())
    }

    /// True iff this is the additive identity.
    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Gauss(re, im) => re.is_zero() && im.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    /// True iff this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Gauss(re, im) => re.is_one() && im.is_zero(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    /// Exact sum. Errors when the operands live in different fields.
    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar::rational(a + b),
            (Repr::Gauss(ar, ai), Repr::Gauss(br, bi)) => Scalar::gaussian(ar + br, ai + bi),
            (Repr::Mod { value: a, modulus }, Repr::Mod { value: b, .. }) => Scalar {
                repr: Repr::Mod {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                },
            },
            _ => unreachable!("same_field already checked"),
        })
    }

    /// Exact difference.
    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.negate())
    }

    /// Exact product.
    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar::rational(a * b),
            (Repr::Gauss(ar, ai), Repr::Gauss(br, bi)) => {
                Scalar::gaussian(ar * br - ai * bi, ar * bi + ai * br)
            }
            (Repr::Mod { value: a, modulus }, Repr::Mod { value: b, .. }) => Scalar {
                repr: Repr::Mod {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                },
            },
            _ => unreachable!("same_field already checked"),
        })
    }

    /// Additive inverse (total).
    pub fn negate(&self) -> Scalar {
        match &self.repr {
            Repr::Rat(a) => Scalar::rational(-a),
            Repr::Gauss(re, im) => Scalar::gaussian(-re, -im),
            Repr::Mod { value, modulus } => Scalar {
                repr: Repr::Mod {
                    value: if *value == 0 { 0 } else { modulus - value },
                    modulus: *modulus,
                },
            },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Rat(a) => Scalar::rational(a.recip()),
            Repr::Gauss(re, im) => {
                let norm = re * re + im * im;
                Scalar::gaussian(re / &norm, -(im / &norm))
            }
            Repr::Mod { value, modulus } => Scalar {
                repr: Repr::Mod {
                    value: mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                    modulus: *modulus,
                },
            },
        })
    }

    /// Exact quotient; errors on zero divisor or field mismatch.
    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    /// Panicking sum for internal pipelines where fields match by construction.
    pub fn plus(&self, other: &Scalar) -> Scalar {
        self.checked_add(other).expect("scalar field mismatch")
    }

    /// Panicking difference (see [`Scalar::plus`]).
    pub fn minus(&self, other: &Scalar) -> Scalar {
        self.checked_sub(other).expect("scalar field mismatch")
    }

    /// Panicking product (see [`Scalar::plus`]).
    pub fn times(&self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("scalar field mismatch")
    }

    /// Panicking inverse; the argument must be nonzero.
    pub fn invert(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero scalar")
    }

    /// Deterministic square root, if one exists in the field.
    ///
    /// The root is chosen canonically: over `Q` the nonnegative root, over
    /// `GF(p)` the smaller of the two residues, over `Q(i)` the root with
    /// positive real part (or zero real part and nonnegative imaginary part).
    pub fn sqrt_in_field(&self) -> Result<Scalar, ScalarError> {
        match &self.repr {
            Repr::Rat(a) => rational_sqrt(a).map(Scalar::rational),
            Repr::Gauss(re, im) => gaussian_sqrt(re, im),
            Repr::Mod { value, modulus } => {
                let r = mod_sqrt(*value as u64, *modulus as u64).ok_or(ScalarError::NoSquareRoot)?;
                let canonical = if r == 0 { 0 } else { r.min(*modulus as u64 - r) };
                Ok(Scalar {
                    repr: Repr::Mod {
                        value: canonical as u32,
                        modulus: *modulus,
                    },
                })
            }
        }
    }

    /// The rational part accessor used by printers; only for `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// `(re, im)` parts; only for `Q(i)`.
    pub fn as_gaussian(&self) -> Option<(&BigRational, &BigRational)> {
        match &self.repr {
            Repr::Gauss(re, im) => Some((re, im)),
            _ => None,
        }
    }

    /// Residue value; only for `GF(p)`.
    pub fn as_residue(&self) -> Option<u32> {
        match &self.repr {
            Repr::Mod { value, .. } => Some(*value),
            _ => None,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Tonelli–Shanks square root mod an odd prime (plus the trivial p = 2 case).
/// Returns any root; the caller canonicalizes.
fn mod_sqrt(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a % 2);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    // Tonelli–Shanks for p ≡ 1 (mod 4).
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = mod_pow(c, 1u64 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

/// Nonnegative exact square root of a rational, if it is a perfect square.
fn rational_sqrt(a: &BigRational) -> Result<BigRational, ScalarError> {
    if a.is_negative() {
        return Err(ScalarError::NoSquareRoot);
    }
    let num = a.numer();
    let den = a.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Ok(BigRational::new(sn, sd))
    } else {
        Err(ScalarError::NoSquareRoot)
    }
}

/// Square root in `Q(i)` of `re + im·i`, canonical choice described on
/// [`Scalar::sqrt_in_field`].
fn gaussian_sqrt(re: &BigRational, im: &BigRational) -> Result<Scalar, ScalarError> {
    if im.is_zero() {
        if !re.is_negative() {
            let x = rational_sqrt(re)?;
            return Ok(Scalar::gaussian(x, BigRational::zero()));
        }
        let y = rational_sqrt(&-re)?;
        return Ok(Scalar::gaussian(BigRational::zero(), y));
    }
    // s = x + y i with x² − y² = re and 2xy = im. The norm forces
    // x² + y² = sqrt(re² + im²), which must be rational.
    let norm_sq = re * re + im * im;
    let n = rational_sqrt(&norm_sq)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let x_sq = (re + &n) / &two;
    let x = rational_sqrt(&x_sq)?;
    if x.is_zero() {
        return Err(ScalarError::NoSquareRoot);
    }
    let y = im / &(&two * &x);
    Ok(Scalar::gaussian(x, y))
}

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{}", rational_string(r)),
            Repr::Gauss(re, im) => {
                if im.is_zero() {
                    write!(f, "{}", rational_string(re))
                } else if re.is_zero() {
                    write!(f, "{}i", rational_string(im))
                } else if im.is_negative() {
                    write!(f, "({}-{}i)", rational_string(re), rational_string(&-im))
                } else {
                    write!(f, "({}+{}i)", rational_string(re), rational_string(im))
                }
            }
            Repr::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Canonical text form of a scalar (inverse of [`parse_scalar`]).
pub fn print_scalar(s: &Scalar) -> String {
    s.to_string()
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }
    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }
    fn err<T>(&self, expected: &str) -> Result<T, ScalarError> {
        Err(ScalarError::Parse {
            position: self.pos,
            expected: expected.to_string(),
        })
    }
}

fn parse_digits(cur: &mut Cursor) -> Result<BigInt, ScalarError> {
    let start = cur.pos;
    while matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        cur.bump();
    }
    if cur.pos == start {
        return cur.err("digits");
    }
    Ok(cur.text[start..cur.pos]
        .parse::<BigInt>()
        .expect("digit run parses as an integer"))
}

/// `rational := ['-'] digits ['/' digits]`; `allow_sign` disables the leading
/// minus (used for the second operand inside a parenthesized Gaussian form).
fn parse_rational(cur: &mut Cursor, allow_sign: bool) -> Result<BigRational, ScalarError> {
    let negative = allow_sign && cur.eat('-');
    let num = parse_digits(cur)?;
    let den = if cur.eat('/') {
        let at = cur.pos;
        let d = parse_digits(cur)?;
        if d.is_zero() {
            return Err(ScalarError::Parse {
                position: at,
                expected: "nonzero denominator".to_string(),
            });
        }
        d
    } else {
        BigInt::one()
    };
    let r = BigRational::new(num, den);
    Ok(if negative { -r } else { r })
}

fn rational_to_prime_field(r: &BigRational, p: u32) -> Result<Scalar, ScalarError> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb);
    let den = r.denom().mod_floor(&pb);
    let num = Scalar {
        repr: Repr::Mod {
            value: num.to_string().parse::<u32>().expect("residue fits"),
            modulus: p,
        },
    };
    let den = Scalar {
        repr: Repr::Mod {
            value: den.to_string().parse::<u32>().expect("residue fits"),
            modulus: p,
        },
    };
    num.checked_div(&den)
}

/// Parses the scalar grammar
/// `scalar := rational | rational 'i' | '(' rational ('+'|'-') rational 'i' ')'`
/// over the given field. The whole input must be consumed.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, ScalarError> {
    let mut cur = Cursor { text, pos: 0 };
    let value = parse_scalar_inner(&mut cur, field)?;
    if cur.pos != text.len() {
        return cur.err("end of scalar");
    }
    Ok(value)
}

fn parse_scalar_inner(cur: &mut Cursor, field: FieldSpec) -> Result<Scalar, ScalarError> {
    if cur.eat('(') {
        if field != FieldSpec::GaussianRationals {
            cur.pos -= 1;
            return cur.err("rational (parenthesized form is only valid over Qi)");
        }
        let re = parse_rational(cur, true)?;
        let sign = match cur.bump() {
            Some('+') => BigRational::one(),
            Some('-') => -BigRational::one(),
            _ => {
                cur.pos = cur.pos.saturating_sub(1);
                return cur.err("'+' or '-'");
            }
        };
        let im = parse_rational(cur, false)?;
        if !cur.eat('i') {
            return cur.err("'i'");
        }
        if !cur.eat(')') {
            return cur.err("')'");
        }
        return Ok(Scalar::gaussian(re, sign * im));
    }
    let r = parse_rational(cur, true)?;
    if cur.eat('i') {
        if field != FieldSpec::GaussianRationals {
            return Err(ScalarError::Parse {
                position: cur.pos - 1,
                expected: "no imaginary part outside Qi".to_string(),
            });
        }
        return Ok(Scalar::gaussian(BigRational::zero(), r));
    }
    match field {
        FieldSpec::Rationals => Ok(Scalar::rational(r)),
        FieldSpec::GaussianRationals => Ok(Scalar::gaussian(r, BigRational::zero())),
        FieldSpec::PrimeField(p) => rational_to_prime_field(&r, p).map_err(|e| match e {
            ScalarError::DivisionByZero => ScalarError::Parse {
                position: 0,
                expected: format!("denominator invertible mod {p}"),
            },
            other => other,
        }),
    }
}
