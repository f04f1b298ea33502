//! Finite groups whose integral group rings have only trivial central units.
//!
//! The crate decides the *cut-property* (every central unit of `Z[G]` is of
//! the form `±g` with `g` central) in two independent ways:
//!
//! * [`cut::is_cut_ritter_sehgal`]: for every `x` and every `j` coprime to
//!   `|G|`, `x^j` is conjugate to `x` or `x^{-1}`;
//! * [`cyclo::is_cut_wedderburn`]: every simple component of `Q[G]`, found
//!   through strong Shoda pairs, has centre `Q` or an imaginary quadratic field.
//!
//! On top of these sit the classification of cut metacyclic groups and the
//! central-height trichotomy for `V(Z[G])` in [`classify`].

pub mod classify;
pub mod corpus;
pub mod cut;
pub mod cyclo;
pub mod group;
pub mod numbers;
pub mod shoda;
pub mod verify;
