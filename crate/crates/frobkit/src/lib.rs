//! Exact-arithmetic toolkit for finite-dimensional Frobenius algebras.
//!
//! The crate represents an algebra by its structure constants over an exact
//! field (`Q`, `Q(i)`, or `GF(p)`), validates the full Frobenius structure
//! (pairing, copairing, comultiplication, handle element), computes the
//! associated cochain complex in low degrees, and constructs and verifies
//! Yang-Baxter R-matrices, including skein-relation solutions and their
//! first-order deformations over dual numbers.
//!
//! Modules, bottom-up:
//! - [`scalars`]: canonical exact field elements and scalar parsing/printing.
//! - [`tensorlin`]: dense exact linear algebra on tensor powers — composition,
//!   Kronecker products, transpositions, kernels, ranks, affine solving.
//! - [`frobenius`]: validated algebra structures and the builtin examples.
//! - [`cohomology`]: chain groups, differentials in degrees 1–4 (degree 4
//!   partially), cocycle bases, and Z/B/H dimensions.
//! - [`yangbaxter`]: R-matrix constructions, Yang-Baxter verification, and
//!   skein coefficient solving.
//! - [`deformation`]: dual-number deformations of the multiplication and
//!   comultiplication, primary obstructions, and deformed R-matrices.
//! - [`selftest`]: the full acceptance checklist shared by the test suite and
//!   the command-line `selftest` command.

pub mod cohomology;
pub mod deformation;
pub mod frobenius;
pub mod scalars;
pub mod selftest;
pub mod tensorlin;
pub mod testsupport;
pub mod yangbaxter;
