//! Exact computer algebra for quantum tori, the quantum coordinate ring
//! `O_{q^2}(SL(2))`, its Hopf pairing with the divided-power quantum group,
//! and the Chebyshev-Frobenius homomorphism at roots of unity.
//!
//! Scalars live in `Z[w^{±1}]` with `w = q^{1/2}`, or in the cyclotomic
//! quotient `Z[w]/Phi_n(w)` when `w` is specialized to a primitive `n`-th
//! root of unity. Nothing is floating point.

pub mod bigon;
pub mod braided;
pub mod frobenius;
pub mod poly;
pub mod qcomb;
pub mod report;
pub mod scalar;
pub mod text;
pub mod torus;
pub mod uq;
pub mod verify;

/// Integer coefficient type. Overflow panics in every build profile.
pub type Int = i128;

pub use poly::{IntPoly, RingElement};
pub use report::{Case, Report, Status};
pub use scalar::{Laurent, Ring, RingTag, RootSpec, Scalar, ScalarError};
