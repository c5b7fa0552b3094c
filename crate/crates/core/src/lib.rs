//! Exact computational algebra for idempotent splittings of Burnside and
//! representation rings of finite groups.
//!
//! The toolkit builds finite permutation groups, their subgroup lattices and
//! tables of marks, classifies the primitive idempotents of the P-local
//! Burnside ring `A_P(G)` and representation ring `R_P(G)`, and audits which
//! multiplicative norms (coinduction / tensor induction) survive on each
//! idempotent block. All arithmetic is exact: rationals for marks and
//! coefficients, cyclotomic numbers for character values.

pub mod burnside;
pub mod chartab;
pub mod classfun;
pub mod corpus;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod idemclass;
pub mod marks;
pub mod normcompat;
pub mod oracle;
pub mod perm;
pub mod primes;
pub mod rat;
pub mod report;
pub mod subgroup;
pub mod verify;

pub use error::Error;
pub use group::Group;
pub use perm::Permutation;
pub use primes::PrimeSet;
pub use rat::Rat;
