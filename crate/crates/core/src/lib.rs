//! Adleman-Manders-Miller root extraction over `F_p` and `F_{p^m}`.
//!
//! All arithmetic is generic over the unsigned integer type through
//! [`Nat`]; the aliases below fix it to arbitrary precision.
//!
//! ```
//! use amm_core::{extract, Field, Natural};
//! use rand::SeedableRng;
//!
//! let f101 = Field::prime(Natural::from(101u32)).unwrap();
//! let delta = f101.from_nat(&Natural::from(32u32));
//! let mut rng = rand::rngs::StdRng::seed_from_u64(1);
//! let report = extract(&f101, &delta, &Natural::from(5u32), &mut rng, true).unwrap();
//! assert_eq!(report.all_roots.unwrap().len(), 5);
//! ```

pub mod amm;
pub mod counters;
pub mod dlog;
pub mod error;
pub mod field;
pub mod ntcore;
pub mod oracle;
pub mod residue;
pub mod scalar;

pub use amm::{
    cbrt, coprime_root, extract, rth_root, sqrt_ext, sqrt_prime, Decomposition, RootReport,
};
pub use counters::Counters;
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use scalar::Nat;

/// Arbitrary-precision natural number.
pub type Natural = num_bigint::BigUint;
/// A field over arbitrary-precision coefficients.
pub type Field = FieldCtx<Natural>;
pub type Element = FieldElement<Natural>;
pub type Report = RootReport<Natural>;

/// A field whose order fits in 64 bits.
pub type Field64 = FieldCtx<u64>;
pub type Element64 = FieldElement<u64>;
