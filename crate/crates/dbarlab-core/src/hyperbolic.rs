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

//! Geometry of the upper half-plane model of the hyperbolic plane:
//! points `w = t + is` with `s > 0`, real Moebius isometries, distance,
//! balls, and smooth distance-based cutoff pairs.

use crate::error::{Error, Result};
use crate::fmath;
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

/// A point `w = t + is` of the upper half-plane, `s > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    t: f64,
    s: f64,
}

impl HalfPlanePoint {
    /// Rejects points on or below the real axis and non-finite coordinates.
    pub fn new(t: f64, s: f64) -> Result<Self> {
        if !(t.is_finite() && s.is_finite()) {
            return Err(Error::Geometry(format!("non-finite coordinates ({t}, {s})")));
        }
        if s <= 0.0 {
            return Err(Error::Geometry(format!(
                "half-plane point requires s > 0, got s = {s}"
            )));
        }
        Ok(Self { t, s })
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.t
    }

    #[inline]
    pub fn s(&self) -> f64 {
        self.s
    }

    #[inline]
    pub fn w(&self) -> Complex64 {
        Complex64::new(self.t, self.s)
    }

    pub fn from_w(w: Complex64) -> Result<Self> {
        Self::new(w.re, w.im)
    }
}

/// Hyperbolic distance between two points of the upper half-plane,
/// `d(p, q) = acosh(1 + |p - q|^2 / (2 s_p s_q))`.
pub fn hyperbolic_distance(p: HalfPlanePoint, q: HalfPlanePoint) -> f64 {
    let dt = p.t - q.t;
    let ds = p.s - q.s;
    let x = (dt * dt + ds * ds) / (2.0 * p.s * q.s);
    fmath::acosh1p(x)
}

/// Area of a hyperbolic disc of radius `r`.
pub fn ball_volume(r: f64) -> f64 {
    2.0 * core::f64::consts::PI * (fmath::cosh(r) - 1.0)
}

/// A real Moebius transformation `w -> (aw + b)/(cw + d)` with `ad - bc = 1`;
/// these are exactly the orientation-preserving isometries of the half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

const DET_TOL: f64 = 1e-12;

impl MobiusMap {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if fmath::abs(det - 1.0) > DET_TOL {
            return Err(Error::Geometry(format!(
                "Moebius coefficients must satisfy ad - bc = 1, got det = {det}"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    /// Normalizes arbitrary real coefficients with positive determinant.
    pub fn normalized(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if det <= 0.0 || !det.is_finite() {
            return Err(Error::Geometry(format!(
                "Moebius coefficients need positive determinant, got {det}"
            )));
        }
        let r = fmath::sqrt(det);
        Self::new(a / r, b / r, c / r, d / r)
    }

    pub fn identity() -> Self {
        Self { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// `w -> w + b`.
    pub fn translation(b: f64) -> Self {
        Self { a: 1.0, b, c: 0.0, d: 1.0 }
    }

    /// `w -> k w` for `k > 0`.
    pub fn scaling(k: f64) -> Result<Self> {
        if k <= 0.0 {
            return Err(Error::Geometry(format!("scaling factor must be positive, got {k}")));
        }
        let r = fmath::sqrt(k);
        Ok(Self { a: r, b: 0.0, c: 0.0, d: 1.0 / r })
    }

    /// The isometry `w -> s0 w + t0` taking `i` to `t0 + i s0`.
    pub fn taking_i_to(p: HalfPlanePoint) -> Self {
        let r = fmath::sqrt(p.s);
        Self { a: r, b: p.t / r, c: 0.0, d: 1.0 / r }
    }

    pub fn coefficients(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn apply(&self, p: HalfPlanePoint) -> HalfPlanePoint {
        let w = p.w();
        let den = self.c * w + self.d;
        let im = p.s / den.norm_sqr();
        let wm = (self.a * w + self.b) / den;
        // Im of the image is s/|cw+d|^2 > 0, so construction cannot fail.
        HalfPlanePoint { t: wm.re, s: im }
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// Unit-modulus factor `a` with `m_* W = a W` at `m(p)`, where `W` is the
/// horizontal field `2is d/dw`.  For `m(w) = (aw+b)/(cw+d)` the factor is
/// `conj(cw+d)/(cw+d)` evaluated at `p`.
pub fn mobius_pushforward_factor(m: &MobiusMap, p: HalfPlanePoint) -> Complex64 {
    let den = m.c * p.w() + m.d;
    den.conj() / den
}

/// Smooth transition `0 -> 1` on `[0, 1]` with all derivatives vanishing at
/// the endpoints: `B(y) / (B(y) + B(1-y))` with `B(y) = exp(-1/y)`.
fn smooth_step(y: f64) -> f64 {
    if y <= 0.0 {
        0.0
    } else if y >= 1.0 {
        1.0
    } else {
        let b = fmath::exp(-1.0 / y);
        let c = fmath::exp(-1.0 / (1.0 - y));
        b / (b + c)
    }
}

/// A cutoff built from a fixed even profile composed with the squared
/// hyperbolic distance to a center.  Equals 1 inside `r_inner`, vanishes
/// outside `r_outer`; because the profile is fixed and the distance is
/// Moebius invariant, sup norms of its horizontal derivatives do not depend
/// on the center.
#[derive(Debug, Clone, Copy)]
pub struct Cutoff {
    center: HalfPlanePoint,
    r_inner_sq: f64,
    r_outer_sq: f64,
}

impl Cutoff {
    pub fn new(center: HalfPlanePoint, r_inner: f64, r_outer: f64) -> Result<Self> {
        if !(0.0 < r_inner && r_inner < r_outer) {
            return Err(Error::Usage(format!(
                "cutoff radii must satisfy 0 < r_inner < r_outer, got ({r_inner}, {r_outer})"
            )));
        }
        Ok(Self {
            center,
            r_inner_sq: r_inner * r_inner,
            r_outer_sq: r_outer * r_outer,
        })
    }

    pub fn center(&self) -> HalfPlanePoint {
        self.center
    }

    pub fn eval(&self, p: HalfPlanePoint) -> f64 {
        let d = hyperbolic_distance(self.center, p);
        self.eval_at_distance(d)
    }

    /// Profile value as a function of the hyperbolic distance alone.
    pub fn eval_at_distance(&self, d: f64) -> f64 {
        let x = d * d;
        smooth_step((self.r_outer_sq - x) / (self.r_outer_sq - self.r_inner_sq))
    }

    /// `|W xi| = |Wbar xi| = s |grad_E xi| = |grad_hyp xi|` for the real
    /// cutoff; computed from the profile derivative and `|grad d| = 1`.
    /// Evaluated by central differences on the radial profile.
    pub fn horizontal_gradient_magnitude(&self, p: HalfPlanePoint) -> f64 {
        let d = hyperbolic_distance(self.center, p);
        let h = 1e-5;
        let dplus = self.eval_at_distance(d + h);
        let dminus = self.eval_at_distance((d - h).max(0.0));
        fmath::abs((dplus - dminus) / (2.0 * h))
    }
}

/// Builds the pair `(xi, zeta)`: `xi = 1` on `B(center, r_inner)` and is
/// supported in `B(center, r_outer)`; `zeta = 1` on the support of `xi`
/// (and is supported in the ball of radius `2 r_outer - r_inner`).
pub fn cutoff_pair(
    center: HalfPlanePoint,
    r_inner: f64,
    r_outer: f64,
) -> Result<(Cutoff, Cutoff)> {
    let xi = Cutoff::new(center, r_inner, r_outer)?;
    let zeta = Cutoff::new(center, r_outer, 2.0 * r_outer - r_inner)?;
    Ok((xi, zeta))
}

/// Greedy maximal packing: returns centers such that the balls of radius
/// `eps/2` about them are pairwise disjoint while the `eps`-balls cover every
/// candidate point.  Candidates are scanned in the given order, so the result
/// is deterministic.
pub fn ball_cover_greedy(candidates: &[HalfPlanePoint], eps: f64) -> Vec<HalfPlanePoint> {
    let mut centers: Vec<HalfPlanePoint> = Vec::new();
    for &p in candidates {
        if centers.iter().all(|&c| hyperbolic_distance(c, p) >= eps) {
            centers.push(p);
        }
    }
    centers
}

/// Largest number of `delta`-balls about the centers containing any single
/// candidate point.
pub fn cover_multiplicity(
    centers: &[HalfPlanePoint],
    sample: &[HalfPlanePoint],
    delta: f64,
) -> usize {
    let mut worst = 0usize;
    for &x in sample {
        let m = centers
            .iter()
            .filter(|&&c| hyperbolic_distance(c, x) < delta)
            .count();
        worst = worst.max(m);
    }
    worst
}

/// Volume-ratio bound on the multiplicity of the `delta`-balls of a packing
/// whose `eps/2`-balls are disjoint: `vol(B(2 delta + eps)) / vol(B(eps/2))`.
pub fn multiplicity_bound(eps: f64, delta: f64) -> f64 {
    ball_volume(2.0 * delta + eps) / ball_volume(eps / 2.0)
}
