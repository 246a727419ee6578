//! # relkit — a finite relation-algebra toolkit
//!
//! Typed binary relations over named finite carriers, represented as
//! bit-packed boolean matrices, together with the calculus built on them:
//! residuals (factors), domain and per-domain operators, difunctionality,
//! diagonals, indexes and cores, block-ordered and staircase relations,
//! graph condensation, Galois adjoints between finite lattices, and a law
//! harness that machine-checks the whole equational theory on enumerated
//! and randomized instances.
//!
//! ## Where to start
//!
//! The `examples/` directory is the primary tour; each example is a small
//! runnable program over one capability:
//!
//! | example | shows |
//! |---|---|
//! | `basics` | carriers, relations, lattice ops, composition, closure |
//! | `residuals` | under/over/sandwich factors and their Galois laws |
//! | `domains_and_pers` | domains, per domains, functionality, the difunctionality battery |
//! | `diagonals` | the diagonal operator on chains, preorders and membership relations |
//! | `indexes_and_cores` | per indexes, splittings, relation indexes, cores, isomorphism |
//! | `block_orders` | the block-order decision and constructive decomposition |
//! | `staircases` | staircase tests and how staircases relate to block orderings |
//! | `condensation` | strongly-connected-component condensation as relation algebra |
//! | `pair_algebras` | lower/upper Galois adjoints between finite lattices |
//! | `law_sweep` | running the registered law suite |
//!
//! Run one with `cargo run --example basics`.
//!
//! A thin CLI (`relkit`) fronts the same operations on relation files; see
//! the crate README for the file format and verbs.

pub mod carrier;
pub mod condense;
pub mod diagonal;
pub mod domain;
pub mod dot;
pub mod error;
pub mod generate;
pub mod index;
pub mod laws;
pub mod order;
pub mod pair;
pub mod rel;
pub mod residual;
pub mod textfmt;
pub mod report;

pub use carrier::Carrier;
pub use error::RelError;
pub use rel::Rel;
pub use textfmt::RelFile;
