//! Symmetry-constrained latent interpolation.
//!
//! The crate blends a pair of images in a latent space and steers the
//! denoising trajectory toward an n-fold rotationally symmetric result.
//! Everything is deterministic and seed-parameterized:
//!
//! - [`imaging`] — image container, rotation resampling, sector masks, and
//!   the two symmetrizers (rotate-and-average, sector-stitch).
//! - [`latent`] — image/latent codecs, spherical interpolation, shared-noise
//!   forward noising, and normalized cosine similarity.
//! - [`diffusion`] — noise schedule, empirical posterior denoiser, DDIM
//!   stepping, and the guided sampler that pools each state with its
//!   symmetrized projection.
//! - [`metrics`] — symmetry score and Fréchet distance between Gaussian
//!   feature statistics.
//! - [`wheel`] — procedural wheel renderer with controllable asymmetry,
//!   used as dataset, denoiser support set, and metric ground truth.
//!
//! The crate is `no_std`-compatible (with `alloc`); float math goes through
//! `libm` so results are bit-identical across platforms.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod diffusion;
mod error;
pub mod imaging;
pub mod latent;
pub mod linalg;
mod math;
pub mod metrics;
pub mod rng;
pub mod wheel;

pub use error::{Error, Result};
