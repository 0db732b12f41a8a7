//! Brute-force reference implementation for cross-checking `avleib-core`.
//!
//! Everything here is written for transparency, not speed: structure constants
//! live in nested `Vec`s, cochains in `BTreeMap`s keyed by index tuples, the
//! differentials are transcribed term by term from their defining expansions,
//! and matrix rank goes through fraction-free integer elimination. No code is
//! shared with the engine crate, so agreement between the two is meaningful.

pub mod alg;
pub mod cochain;
pub mod deform;
pub mod lin;

pub use alg::{NAlg, NOp, NRep};
pub use cochain::{Arg, NMap};
pub use deform::NDef;
pub use lin::{q, qi, Q};
