//! Swarm-intelligence optimizers and the instrumentation needed to compare them.
//!
//! The crate bundles three population-based minimizers — dynamic cat swarm
//! optimization ([`dcso`]), the original cat swarm optimization ([`cso`]) and a
//! differential-evolution baseline ([`de`]) — together with a library of
//! classical and CEC-2019 benchmark functions ([`bench`]), quadratic assignment
//! problem support with random-key decoding ([`qap`]), and diagnostics for
//! exploration/exploitation balance and nonparametric comparison
//! ([`diagnostics`]).
//!
//! Everything is deterministic given a seed: runs draw from a counter-based
//! [`rng::RngStream`], so a fixed `(seed, config, objective)` triple reproduces
//! bit-identical traces. The crate is `no_std` (with `alloc`); IO, file
//! formats and the experiment CLI live in the companion `dcso-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bench;
pub mod cso;
pub mod dcso;
pub mod de;
pub mod diagnostics;
pub mod model;
pub mod qap;
pub mod rng;

pub use model::{run, Algorithm, Bounds, Cat, Mode, ObjectiveSpec, RunConfig, RunResult};
pub use rng::RngStream;
