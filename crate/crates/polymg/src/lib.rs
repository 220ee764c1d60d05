//! Multigrid-inspired residual networks with polynomial smoothing blocks.
//!
//! The library is organized around the data-feature view of a residual
//! network: on every resolution level a shared convolution `A` maps
//! features to data, blocks iterate `u <- u + B(f - A(u))`, and the
//! feature extractor `B` is replaced by a low-degree polynomial in `A`
//! whose roots are read off the spectrum of `A`.
//!
//! Modules:
//! - [`spectral`]: symbol-based spectrum estimation for periodic
//!   convolutions, root selection and the higher-degree root recursion,
//!   polynomial evaluation and coefficient expansion.
//! - [`blocks`]: the residual building blocks (classic, linear,
//!   conjugate-pair quadratic, squared-real) with configurable
//!   batch-norm/ReLU placement.
//! - [`network`]: whole-model assembly (stem, levels, restriction and
//!   projection between levels, classifier head), channel scaling,
//!   coefficient initialization and weight accounting.
//! - [`oracle`]: brute-force dense ground truth used to verify the
//!   spectral and block algebra, plus finite-difference gradient checks.
//! - [`data`] / [`train`]: CIFAR-10 ingestion, a synthetic stand-in
//!   dataset, the SGD/cosine training loop, evaluation and experiment
//!   records.
//! - [`config`] / [`cli`]: the run configuration file and the command
//!   line entry points.

pub mod autograd;
pub mod blocks;
pub mod checkpoint;
pub mod cli;
pub mod config;
pub mod data;
pub mod error;
pub mod network;
pub mod oracle;
pub mod report;
pub mod spectral;
pub mod train;

pub use error::{Error, Result};

use ndarray::NdFloat;
use rand::distributions::uniform::SampleUniform;

/// Element type of network tensors. Training runs in `f32`; the algebra
/// and gradient checks instantiate the same code with `f64`.
pub trait Scalar: NdFloat + SampleUniform + Send + Sync + 'static {
    const DTYPE: Dtype;
}

impl Scalar for f32 {
    const DTYPE: Dtype = Dtype::F32;
}

impl Scalar for f64 {
    const DTYPE: Dtype = Dtype::F64;
}

/// Tensor element type tag used by the checkpoint format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dtype {
    F32,
    F64,
}

impl Dtype {
    pub fn tag(self) -> u8 {
        match self {
            Dtype::F32 => 0,
            Dtype::F64 => 1,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            0 => Some(Dtype::F32),
            1 => Some(Dtype::F64),
            _ => None,
        }
    }
}

/// Shorthand for converting literals into the active scalar type.
#[inline]
pub fn cast<F: Scalar>(v: f64) -> F {
    F::from(v).expect("literal representable in scalar type")
}
