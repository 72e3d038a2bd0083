//! Exact arithmetic for rank-metric codes over GF(q^m).
//!
//! The crate is organised bottom-up:
//!
//! * [`ffield`]: GF(q) and GF(q^m) arithmetic, trace, dual bases, expansion.
//! * [`rankgeom`]: rank weight, Gaussian binomials, elementary linear subspaces, rank balls.
//! * [`codes`]: linear rank-metric codes, Gabidulin codes, duals, brute-force parameters.
//! * [`bounds`]: packing and covering bounds and the tables built from them.
//! * [`wenum`]: q-products, q-derivatives, Krawtchouk polynomials and the MacWilliams transform.
//! * [`oracle`]: exhaustive and greedy searches that certify small cases.

pub mod bounds;
pub mod codes;
pub mod error;
pub mod ffield;
pub mod linalg;
pub mod oracle;
pub mod rankgeom;
pub mod wenum;

pub use codes::{Codebook, LinearCode, RankDistribution};
pub use error::{Error, Result};
pub use ffield::{element_arith, ArithOp, Basis, Field, FieldElement};
pub use rankgeom::{rank_of, Els, RankVector};
pub use wenum::{macwilliams, ParametricPoly, RankEnumerator};
