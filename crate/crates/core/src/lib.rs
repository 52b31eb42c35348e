//! Exact-arithmetic machinery for PBW-type filtrations of the negative part of
//! `sl(n+1)`, built on the representation theory of the equioriented type-A quiver.
//!
//! The crate is organised in layers:
//!
//! * [`arith`] — arbitrary-precision rationals and Laurent polynomials in `q`,
//!   together with quantum integers, factorials and binomials.
//! * [`roots`] — type `A_n` root/weight combinatorics and the Weyl dimension
//!   formula used as a cardinality oracle.
//! * [`polytope`] — Dyck paths, the inequality description of the weight
//!   polytope, exact lattice-point enumeration and the degree functions.
//! * [`quiver`] — Hom/Ext dimensions of interval modules, the Euler form,
//!   Auslander-Reiten translates and sequences, the degeneration order and the
//!   classification of additive weight functions.
//! * [`hall`] — the Hall algebra realised by subrepresentation counting over
//!   small prime fields plus exact interpolation; PBW basis elements,
//!   straightening relations and graded-commutativity checks.
//! * [`classical`] — explicit modules inside tensor products of exterior
//!   powers, filtrations for a pluggable degree function, monomial bases and
//!   monomial annihilating ideals.
//! * [`verify`] — the batch verification suite run by the CLI and the
//!   acceptance tests.
//!
//! All computations are exact; there is no floating point anywhere.

pub mod arith;
pub mod classical;
pub mod hall;
pub mod polytope;
pub mod quiver;
pub mod roots;
pub mod verify;

pub use arith::{q_binomial, q_factorial, q_integer, ArithError, LaurentPoly, Rational};
pub use classical::{GradedReport, ModuleVector, TensorIndex, TensorModule, WedgeIndex};
pub use hall::{HallBudget, HallContext, HallElement, HallError};
pub use polytope::{dyck_paths, ff_degree, length_degree, minkowski_check, DyckPath, ExponentVector, Polytope};
pub use quiver::{
    classify_weight_function, decompose_weight_function, degeneration_leq, directed_order,
    euler_form, hom_dim, mu0, DirectedOrder, WeightClass, WeightFunction,
};
pub use roots::{positive_roots, root_pairing, weyl_dim, PositiveRoot, Rank, RootVector, Weight};
