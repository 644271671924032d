//! Finite-dimensional noncommutative L^p spaces, finite quantum groups and
//! quantum channels.
//!
//! The crate models a finite-dimensional von Neumann algebra as a direct sum
//! of complex matrix blocks `M_{n_1} ⊕ … ⊕ M_{n_K}` carrying a weighted trace
//! `τ = Σ_k λ_k Tr_k`. On top of that it provides
//!
//! * noncommutative L^p norms, functional calculus and Segal entropy
//!   ([`algebra`]),
//! * finite classical groups, their unitary (projective) representations and
//!   positive definite functions ([`groups`]),
//! * finite quantum groups given by verified structure data — coproduct,
//!   Haar trace and antipode — together with convolution and the three
//!   builders `C(G)`, `VN(G)` and Kac-Paljutkin ([`qgroup`]),
//! * quantum channels as superoperators with Choi analysis, embeddings into
//!   a single matrix algebra, multiplicative domains and PPT/entanglement
//!   breaking classification ([`channel`]),
//! * minimum output entropy by several independent routes, completely
//!   bounded minimal entropy, 1→p norms over the positive cone, Holevo
//!   capacity estimation and classical capacity oracles ([`entropy`]),
//! * strict serialization of every object and deterministic reports
//!   ([`io`], [`report`]).
//!
//! All quantities are computed in nats; the CLI converts to bits on request.

pub mod algebra;
pub mod channel;
pub mod entropy;
pub mod error;
pub mod groups;
pub mod io;
pub mod linalg;
pub mod optimize;
pub mod qgroup;
pub mod report;

pub use algebra::{AlgebraElement, BlockAlgebra, DensityState, LpExponent};
pub use channel::{Channel, ChoiMatrix, EntanglementClass};
pub use entropy::{EntropyReport, OptimizerConfig};
pub use error::{Error, Result};
pub use groups::{FiniteGroup, GroupFunction, UnitaryRep};
pub use qgroup::QuantumGroup;
