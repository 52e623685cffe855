//! Core model library: a dense-tensor reverse-mode autodiff tape, the
//! differentiable layers built on it, the joint bidirectional-attention
//! comprehension model, the permutation-emitting pointer network trained by
//! policy gradient, and the training-step / evaluation logic.
//!
//! The crate is `no_std` + `alloc`: it performs no IO and owns no file
//! formats. Corpus parsing, checkpoint files, and the command-line driver
//! live in the companion `biatt-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod data;
pub mod error;
pub mod math;
pub mod model;
pub mod nn;
pub mod optim;
pub mod params;
pub mod pointer;
pub mod rng;
pub mod tape;
pub mod tensor;
pub mod train;

pub use error::Error;
pub use params::{ParamId, ParamStore};
pub use rng::ModelRng;
pub use tape::{NodeId, Tape};
pub use tensor::Tensor;
