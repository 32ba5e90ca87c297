//! Exact computational homological algebra over three families of rings:
//!
//! * the integers with a designated element `s` (|s| >= 2) and their
//!   localisations `Z[1/s]`,
//! * skew polynomial rings `F_{p^m}[x; sigma]` with `s = x` and their
//!   localisations,
//! * finite dimensional algebras over prime fields, given by structure
//!   constants or quivers.
//!
//! On top of the ring layer sit finitely presented modules, bounded cochain
//! complexes, torsion and completion functors, telescope and two-term
//! localisation complexes, Gabriel localisation for idempotent ideals, and a
//! dg endomorphism ring construction. Statements about non-finitely-generated
//! limits and colimits are never materialised; they are reported as finite
//! towers with stabilization certificates.
//!
//! All arithmetic is exact. Every verifier returns an explicit verdict with
//! witnesses so that reports can be audited without rerunning the tool.

pub mod complex;
pub mod cyclic;
pub mod fd;
pub mod field;
pub mod fplin;
pub mod hom;
pub mod mgm;
pub mod module;
pub mod ore;
pub mod tower;

/// Sign and stabilization conventions, printed in every report header.
pub const CONVENTIONS: &str = "shift (M[1])^i = M^{i+1} with d[1]^i = -d^{i+1}; \
cone(f: X->Y)^i = Y^i + X^{i+1} with d(y,x) = (dy + f(x), -dx); \
tower stabilization requires two consecutive compatibly isomorphic levels";
