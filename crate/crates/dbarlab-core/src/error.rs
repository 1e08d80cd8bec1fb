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

//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Construction of a geometric object failed (bad point, bad boundary, ...).
    Geometry(String),
    /// A caller violated an operation precondition.
    Usage(String),
    /// The requested quantity is not representable at the current
    /// discretization (e.g. a Sobolev order beyond the element degree).
    Capability(String),
    /// Mesh generation failed.
    Meshing(String),
    /// An iterative or direct solve failed; the message carries diagnostics.
    Numerical(String),
    /// Random generation could not satisfy the requested constraints.
    Generation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Geometry(m) => write!(f, "geometry error: {m}"),
            Error::Usage(m) => write!(f, "usage error: {m}"),
            Error::Capability(m) => write!(f, "capability error: {m}"),
            Error::Meshing(m) => write!(f, "meshing error: {m}"),
            Error::Numerical(m) => write!(f, "numerical error: {m}"),
            Error::Generation(m) => write!(f, "generation error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
