//! Double-double (about 31 significant digits) reference arithmetic, and
//! reference evaluations of ζ, log-Γ and χ built on it. Shares no numeric
//! code with the library.
#![allow(dead_code)]

pub mod dd;
pub mod reference;

#[allow(unused_imports)]
pub use dd::{Cdd, Dd};
