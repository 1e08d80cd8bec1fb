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

//! Second-order Wirtinger jets: value and derivatives with respect to `w`
//! and `wbar` through order two.  The horizontal fields of the half-plane
//! are first order in these derivatives (`W = 2is d/dw`,
//! `Wbar = -2is d/dwbar`), so a second-order jet supports one composition
//! of two horizontal operators evaluated exactly, with no finite
//! differencing.

use num_complex::Complex64;

/// Value and Wirtinger derivatives `(f, f_w, f_wb, f_ww, f_wwb, f_wbwb)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CJet2 {
    pub v: Complex64,
    pub dw: Complex64,
    pub dwb: Complex64,
    pub dww: Complex64,
    pub dwwb: Complex64,
    pub dwbwb: Complex64,
}

/// First-order jet, enough to apply one more horizontal operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CJet1 {
    pub v: Complex64,
    pub dw: Complex64,
    pub dwb: Complex64,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

impl CJet2 {
    pub fn constant(c: Complex64) -> Self {
        Self { v: c, dw: ZERO, dwb: ZERO, dww: ZERO, dwwb: ZERO, dwbwb: ZERO }
    }

    /// The coordinate `w` at the value `w0`.
    pub fn coordinate(w0: Complex64) -> Self {
        Self { v: w0, dw: ONE, dwb: ZERO, dww: ZERO, dwwb: ZERO, dwbwb: ZERO }
    }

    /// The conjugate coordinate at the value `conj(w0)`.
    pub fn coordinate_bar(w0: Complex64) -> Self {
        Self { v: w0.conj(), dw: ZERO, dwb: ONE, dww: ZERO, dwwb: ZERO, dwbwb: ZERO }
    }

    /// `s = Im w = (w - wbar)/(2i)`.
    pub fn vertical(w0: Complex64) -> Self {
        Self {
            v: Complex64::new(w0.im, 0.0),
            dw: -I * 0.5,
            dwb: I * 0.5,
            dww: ZERO,
            dwwb: ZERO,
            dwbwb: ZERO,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            v: self.v + o.v,
            dw: self.dw + o.dw,
            dwb: self.dwb + o.dwb,
            dww: self.dww + o.dww,
            dwwb: self.dwwb + o.dwwb,
            dwbwb: self.dwbwb + o.dwbwb,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            v: c * self.v,
            dw: c * self.dw,
            dwb: c * self.dwb,
            dww: c * self.dww,
            dwwb: c * self.dwwb,
            dwbwb: c * self.dwbwb,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            v: self.v * o.v,
            dw: self.dw * o.v + self.v * o.dw,
            dwb: self.dwb * o.v + self.v * o.dwb,
            dww: self.dww * o.v + 2.0 * self.dw * o.dw + self.v * o.dww,
            dwwb: self.dwwb * o.v + self.dw * o.dwb + self.dwb * o.dw + self.v * o.dwwb,
            dwbwb: self.dwbwb * o.v + 2.0 * self.dwb * o.dwb + self.v * o.dwbwb,
        }
    }

    /// Composition with a univariate analytic function given by its value and
    /// first two derivatives at `self.v`.
    pub fn compose(&self, g: Complex64, g1: Complex64, g2: Complex64) -> Self {
        Self {
            v: g,
            dw: g1 * self.dw,
            dwb: g1 * self.dwb,
            dww: g2 * self.dw * self.dw + g1 * self.dww,
            dwwb: g2 * self.dw * self.dwb + g1 * self.dwwb,
            dwbwb: g2 * self.dwb * self.dwb + g1 * self.dwbwb,
        }
    }

    pub fn exp(&self) -> Self {
        let e = self.v.exp();
        self.compose(e, e, e)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let inv = ONE / self.v;
        self.compose(self.v.ln(), inv, -inv * inv)
    }

    /// Real power via the principal branch.
    pub fn powf(&self, a: f64) -> Self {
        let va = self.v.powf(a);
        let g1 = a * self.v.powf(a - 1.0);
        let g2 = a * (a - 1.0) * self.v.powf(a - 2.0);
        self.compose(va, g1, g2)
    }

    pub fn recip(&self) -> Self {
        let inv = ONE / self.v;
        self.compose(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    pub fn truncate(&self) -> CJet1 {
        CJet1 { v: self.v, dw: self.dw, dwb: self.dwb }
    }

    /// `W u = 2is du/dw` as a first-order jet (one further horizontal
    /// derivative remains available).
    pub fn w_apply(&self, s: f64) -> CJet1 {
        let two_is = 2.0 * I * s;
        CJet1 {
            v: two_is * self.dw,
            // d/dw (2is u_w) = 2i (ds/dw) u_w + 2is u_ww, ds/dw = -i/2
            dw: self.dw + two_is * self.dww,
            dwb: -self.dw + two_is * self.dwwb,
        }
    }

    /// `Wbar u = -2is du/dwbar` as a first-order jet.
    pub fn wbar_apply(&self, s: f64) -> CJet1 {
        let two_is = 2.0 * I * s;
        CJet1 {
            v: -two_is * self.dwb,
            dw: -self.dwb - two_is * self.dwwb,
            dwb: self.dwb - two_is * self.dwbwb,
        }
    }
}

impl CJet1 {
    pub fn constant(c: Complex64) -> Self {
        Self { v: c, dw: ZERO, dwb: ZERO }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { v: self.v + o.v, dw: self.dw + o.dw, dwb: self.dwb + o.dwb }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { v: c * self.v, dw: c * self.dw, dwb: c * self.dwb }
    }

    /// Value of `W` applied to this jet.
    pub fn w_value(&self, s: f64) -> Complex64 {
        2.0 * I * s * self.dw
    }

    /// Value of `Wbar` applied to this jet.
    pub fn wbar_value(&self, s: f64) -> Complex64 {
        -2.0 * I * s * self.dwb
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd_check<F: Fn(Complex64) -> Complex64>(f: F, jet: &CJet2, w0: Complex64) {
        // central differences in t and s directions to recover Wirtinger firsts
        let h = 1e-5;
        let ft = (f(w0 + Complex64::new(h, 0.0)) - f(w0 - Complex64::new(h, 0.0))) / (2.0 * h);
        let fs = (f(w0 + Complex64::new(0.0, h)) - f(w0 - Complex64::new(0.0, h))) / (2.0 * h);
        let dw = 0.5 * (ft - Complex64::new(0.0, 1.0) * fs);
        let dwb = 0.5 * (ft + Complex64::new(0.0, 1.0) * fs);
        assert!((jet.dw - dw).norm() < 1e-8, "dw: {} vs {}", jet.dw, dw);
        assert!((jet.dwb - dwb).norm() < 1e-8, "dwb: {} vs {}", jet.dwb, dwb);
    }

    fn jets_at(w0: Complex64) -> (CJet2, CJet2, CJet2) {
        (CJet2::coordinate(w0), CJet2::coordinate_bar(w0), CJet2::vertical(w0))
    }

    #[test]
    fn product_rule_against_finite_differences() {
        let w0 = Complex64::new(0.3, 1.2);
        let (w, wb, s) = jets_at(w0);
        // f = w^2 * wbar + exp(s)
        let jet = w.mul(&w).mul(&wb).add(&s.exp());
        let f = |z: Complex64| {
            z * z * z.conj() + Complex64::new(z.im, 0.0).exp()
        };
        assert!((jet.v - f(w0)).norm() < 1e-14);
        fd_check(f, &jet, w0);
    }

    #[test]
    fn second_derivatives_against_finite_differences() {
        let w0 = Complex64::new(-0.4, 0.9);
        let (w, _, s) = jets_at(w0);
        // f = s^a * (w - z0)^3
        let z0 = Complex64::new(2.0, 0.0);
        let a = 1.7;
        let jet = s.powf(a).mul(&w.add(&CJet2::constant(-z0)).powf(3.0));
        let f = |z: Complex64| {
            Complex64::new(z.im, 0.0).powf(a) * (z - z0).powf(3.0)
        };
        // mixed second derivative by nested differences
        let h = 1e-4;
        let dwb_of = |z: Complex64| {
            let ft = (f(z + Complex64::new(h, 0.0)) - f(z - Complex64::new(h, 0.0))) / (2.0 * h);
            let fs = (f(z + Complex64::new(0.0, h)) - f(z - Complex64::new(0.0, h))) / (2.0 * h);
            0.5 * (ft + Complex64::new(0.0, 1.0) * fs)
        };
        let g = dwb_of(w0);
        let gt = (dwb_of(w0 + Complex64::new(h, 0.0)) - dwb_of(w0 - Complex64::new(h, 0.0)))
            / (2.0 * h);
        let gs = (dwb_of(w0 + Complex64::new(0.0, h)) - dwb_of(w0 - Complex64::new(0.0, h)))
            / (2.0 * h);
        let dwwb = 0.5 * (gt - Complex64::new(0.0, 1.0) * gs);
        assert!((jet.dwb - g).norm() < 1e-7);
        assert!((jet.dwwb - dwwb).norm() < 1e-5, "{} vs {}", jet.dwwb, dwwb);
    }

    #[test]
    fn commutator_of_horizontal_fields_is_first_order() {
        // [W, Wbar] u = (Wbar - W) u pointwise for smooth u, via exact jets.
        let w0 = Complex64::new(0.2, 0.7);
        let s0 = w0.im;
        let (w, wb, s) = jets_at(w0);
        let u = s.powf(1.3).mul(&w.mul(&wb).exp());
        let w_wbar = u.wbar_apply(s0).w_value(s0);
        let wbar_w = u.w_apply(s0).wbar_value(s0);
        let comm = w_wbar - wbar_w;
        let rhs = u.wbar_apply(s0).v - u.w_apply(s0).v;
        assert!((comm - rhs).norm() < 1e-12 * (1.0 + rhs.norm()), "{comm} vs {rhs}");
    }

    #[test]
    fn vertical_power_is_w_eigenfunction() {
        // W(s^a) = a s^a and Wbar(s^a) = a s^a
        let w0 = Complex64::new(-1.0, 2.5);
        let s = CJet2::vertical(w0);
        let a = 0.85;
        let u = s.powf(a);
        let wu = u.w_apply(w0.im).v;
        let wbu = u.wbar_apply(w0.im).v;
        let expect = a * w0.im.powf(a);
        assert!((wu - expect).norm() < 1e-13);
        assert!((wbu - expect).norm() < 1e-13);
    }
}
