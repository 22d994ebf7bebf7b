//! Exact arithmetic for the lattice theory of Brauer classes on K3 surfaces.
//!
//! The crate has two halves that meet in the Néron–Severi lattice of a K3
//! surface carrying a genus-one fibration:
//!
//! * **Lattice arithmetic** ([`exactnum`], [`lattice`], [`rank2`],
//!   [`brauer`]): integer Gram matrices, discriminant groups and their
//!   ℚ/2ℤ-valued quadratic forms, the rank-two family Λ_{b,c} with its
//!   isometry classification, Kähler cones, automorphisms and Fourier–Mukai
//!   partner counts, and the two-torsion censuses of Brauer groups of both
//!   elliptic and degree-2d polarized K3 surfaces.
//! * **Fibration algebra** ([`hermite`]): the classical invariants g₂, g₃ of
//!   a binary quartic, the Jacobian Weierstrass model, the symmetric conic
//!   matrix whose determinant is the resolvent cubic, the trigonal
//!   (Lagrange-resolvent) correspondence with a numerical oracle, and exact
//!   diagonalization over ℚ(x) ending in a quaternion symbol.
//!
//! Everything except the explicitly labelled numerical oracle is computed in
//! exact arbitrary-precision arithmetic; censuses and searches that are
//! bounded report "inconclusive" rather than guessing.
//!
//! The `k3brauer` binary exposes the same operations as JSON-emitting
//! subcommands; `k3brauer suite full` runs the acceptance checks. A guided
//! tour lives in `book/` and its code snippets run as doctests.

pub mod brauer;
pub mod cli;
pub mod exactnum;
pub mod hermite;
pub mod lattice;
pub mod rank2;
pub mod suite;

#[cfg(doctest)]
mod book;
