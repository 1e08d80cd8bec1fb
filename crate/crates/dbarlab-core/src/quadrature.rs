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

//! Quadrature: self-generated Gauss-Legendre rules on intervals and a
//! collapsed (Duffy) tensor rule on the reference triangle.  The triangle
//! rule is exact for bivariate polynomials up to its stated total degree,
//! which a self-test verifies against closed-form monomial integrals.

use crate::fmath;
use alloc::vec;
use alloc::vec::Vec;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, computed by Newton
/// iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-style initial guess.
        let mut x = fmath::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n, p0 = P_{n-1}
            dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if fmath::abs(dx) < 1e-15 {
                break;
            }
        }
        xs[i] = -x;
        xs[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        ws[i] = w;
        ws[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        xs[n / 2] = 0.0;
    }
    (xs, ws)
}

/// Quadrature on the reference triangle `{x, y >= 0, x + y <= 1}`:
/// points with their weights; the rule integrates bivariate polynomials of
/// total degree `<= order` exactly.
#[derive(Debug, Clone)]
pub struct TriangleRule {
    pub points: Vec<(f64, f64)>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl TriangleRule {
    /// Collapsed tensor Gauss rule; `n` one-dimensional points per direction
    /// give exactness through total degree `2n - 2`.
    pub fn with_order(order: usize) -> Self {
        let n = (order + 2).div_ceil(2);
        let (xs, ws) = gauss_legendre(n);
        // shift to [0, 1]
        let u: Vec<f64> = xs.iter().map(|x| 0.5 * (x + 1.0)).collect();
        let wu: Vec<f64> = ws.iter().map(|w| 0.5 * w).collect();
        let mut points = Vec::with_capacity(n * n);
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = u[i];
                let y = u[j] * (1.0 - u[i]);
                points.push((x, y));
                weights.push(wu[i] * wu[j] * (1.0 - u[i]));
            }
        }
        Self { points, weights, order: 2 * n - 2 }
    }

    /// Exact integral of `x^a y^b` over the reference triangle.
    pub fn monomial_exact(a: usize, b: usize) -> f64 {
        // a! b! / (a + b + 2)!
        let mut v = 1.0;
        for k in 1..=a {
            v *= k as f64;
        }
        for k in 1..=b {
            v *= k as f64;
        }
        let mut d = 1.0;
        for k in 1..=(a + b + 2) {
            d *= k as f64;
        }
        v / d
    }

    /// Verifies exactness up to the stated order; returns the worst relative
    /// error observed.
    pub fn self_test(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..=self.order {
            for b in 0..=(self.order - a) {
                let mut acc = 0.0;
                for ((x, y), w) in self.points.iter().zip(self.weights.iter()) {
                    acc += w * fmath::powi(*x, a as i32) * fmath::powi(*y, b as i32);
                }
                let exact = Self::monomial_exact(a, b);
                worst = worst.max(fmath::abs(acc - exact) / exact);
            }
        }
        worst
    }
}

/// Gauss rule on the interval `[a, b]`.
pub fn gauss_on_interval(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(n);
    let nodes = xs.iter().map(|x| 0.5 * (b - a) * x + 0.5 * (a + b)).collect();
    let weights = ws.iter().map(|w| 0.5 * (b - a) * w).collect();
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in 1..=20 {
            let (_, ws) = gauss_legendre(n);
            let sum: f64 = ws.iter().sum();
            assert!((sum - 2.0).abs() < 1e-13, "n = {n}: {sum}");
        }
    }

    #[test]
    fn gauss_legendre_integrates_high_degree_polynomials() {
        // integral of x^k over [-1,1]
        let (xs, ws) = gauss_legendre(7); // exact through degree 13
        for k in 0..=13usize {
            let acc: f64 = xs
                .iter()
                .zip(ws.iter())
                .map(|(x, w)| w * fmath::powi(*x, k as i32))
                .sum();
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((acc - exact).abs() < 1e-13, "k = {k}: {acc} vs {exact}");
        }
    }

    #[test]
    fn triangle_rule_self_test_passes() {
        for order in [2usize, 4, 6, 8, 10] {
            let rule = TriangleRule::with_order(order);
            assert!(rule.order >= order);
            let worst = rule.self_test();
            assert!(worst < 1e-12, "order {order}: worst relative error {worst}");
        }
    }

    #[test]
    fn triangle_rule_weights_sum_to_area() {
        let rule = TriangleRule::with_order(8);
        let sum: f64 = rule.weights.iter().sum();
        assert!((sum - 0.5).abs() < 1e-14);
    }
}
