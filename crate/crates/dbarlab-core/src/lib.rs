// Copyright 2026 the dbarlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Numerical laboratory for the del-bar Neumann problem on product domains
//! `Omega = D x N`, where `D` is a precompact domain in the hyperbolic plane
//! and `N` is a compact normal CR manifold entering through its spectral data.
//!
//! The crate reduces the Kohn Laplacian on `Omega` to families of weighted
//! elliptic operators on `D` indexed by eigendata `sigma = (q, Gamma, lambda)`,
//! solves the reduced transverse (Dirichlet) and tangential (natural boundary)
//! problems with conforming finite elements, and reassembles solutions of
//! `box_b u = f` and `dbar u = f` from the per-sigma pieces.
//!
//! The crate is `no_std` (with `alloc`); all file IO and the command line
//! front end live in the companion `dbarlab-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod fmath;
pub mod hyperbolic;

pub use error::{Error, Result};
pub use hyperbolic::HalfPlanePoint;

/// Deterministic RNG used by generation routines; seeded explicitly so that
/// outputs are reproducible across platforms and thread counts.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand_core::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw in `[0, 1)` from a raw 64-bit sample.
pub fn unit_f64<R: rand_core::RngCore>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal pair via Box-Muller.
pub fn normal_pair<R: rand_core::RngCore>(rng: &mut R) -> (f64, f64) {
    let u1 = unit_f64(rng).max(1e-300);
    let u2 = unit_f64(rng);
    let r = fmath::sqrt(-2.0 * fmath::ln(u1));
    let th = 2.0 * core::f64::consts::PI * u2;
    (r * fmath::cos(th), r * fmath::sin(th))
}

#[cfg(test)]
pub(crate) fn test_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    seeded_rng(seed)
}
