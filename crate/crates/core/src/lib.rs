//! Ordinal length of monomial subquotient modules.
//!
//! For monomial ideals `I ⊆ J` of `k[x_1, .., x_n]` the module `J/I` has an
//! ordinal-valued length below ω^ω, computed as the shuffle sum of
//! `lcl_p(J/I)·ω^dim(p)` over its associated primes `p`. The crate computes
//! that length together with the fundamental cycle, the dimension
//! filtration, and the open and `i`-open submodules of the canonical
//! topology.
//!
//! ```
//! use ordlen::{Engine, MonomialIdeal, Subquotient};
//!
//! // R = k[x,y,z], I = (x^2, xy)
//! let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0]]);
//! let m = Subquotient::cyclic(i);
//! assert_eq!(Engine::new().length(&m).to_string(), "ω^2 + ω");
//! ```

pub mod backend;
pub mod chow;
pub mod error;
pub mod invariants;
pub mod monomial;
pub mod oracle;
pub mod ordinal;
pub mod topology;

pub use backend::{BackendRegistry, LocalMultiplicity, Restriction};
pub use chow::{Cycle, PrimeSupport};
pub use error::{Error, Result};
pub use invariants::{BasicInvariants, Engine};
pub use monomial::{Monomial, MonomialIdeal, Subquotient};
pub use ordinal::Ordinal;
pub use topology::{EOpenPower, EssentialityCheck};
