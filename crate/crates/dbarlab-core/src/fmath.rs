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

//! Scalar math routed through `libm` so the crate builds without `std`.
//!
//! Using one backend everywhere also keeps results bit-identical between the
//! library build and the test build.

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn log1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn log10(x: f64) -> f64 {
    libm::log10(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    let mut r = 1.0;
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            r *= base;
        }
        base *= base;
        k >>= 1;
    }
    r
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `acosh(1 + x)` for `x >= 0`, stable near `x = 0`.
#[inline]
pub fn acosh1p(x: f64) -> f64 {
    log1p(x + sqrt(x * (2.0 + x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acosh1p_matches_naive_away_from_zero() {
        for &x in &[0.5, 1.0, 3.0, 10.0] {
            let naive = libm::acosh(1.0 + x);
            assert!((acosh1p(x) - naive).abs() < 1e-14);
        }
    }

    #[test]
    fn acosh1p_small_argument() {
        // acosh(1+x) ~ sqrt(2x) for small x
        let x = 1e-14;
        let d = acosh1p(x);
        assert!((d - sqrt(2.0 * x)).abs() < 1e-18);
    }

    #[test]
    fn powi_matches_pow() {
        assert!((powi(1.7, 9) - libm::pow(1.7, 9.0)).abs() < 1e-12);
        assert!((powi(2.0, -3) - 0.125).abs() < 1e-15);
        assert_eq!(powi(5.0, 0), 1.0);
    }
}
