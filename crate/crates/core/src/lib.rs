//! Exact construction and verification of the quasi-exactly solvable sector
//! of the sextic anharmonic oscillator
//!
//! ```text
//! H = -d²/dx² + a x⁶ + b x⁴ + c x²,   a > 0.
//! ```
//!
//! For special values of `c` a finite number of eigenfunctions take the form
//! `ψ(x) = χ(x)·exp(-f(x))` with polynomial `χ`, and the solvability conditions
//! are polynomials in the energy `E` that obey three-term recurrences. This
//! crate generates those polynomial families, checks their structural
//! properties (orthogonality under a moment functional, vanishing norms,
//! factorization), extracts the energies as certified real algebraic numbers
//! and cross-checks everything against the asymptotic iteration method and
//! Meixner polynomials of the second kind.
//!
//! Everything in the exact layer is built on [`Rational`] and the recursive
//! dense [`Poly`]. The square root of `a` is carried as a parameter so no
//! radicals ever appear. The only floating point lives in [`numeric`], which
//! evaluates wavefunctions at a configurable binary precision.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod aim;
pub mod error;
pub mod families;
pub mod meixner;
pub mod norms;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod riccati;
pub mod spectra;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilyKind, FamilyParams, Parity};
pub use poly::{Poly, Var};
pub use rational::Rational;
pub use riccati::SexticPotential;
pub use sturm::IsolatingInterval;
