//! Partitions, standard Young tableaux, the Robinson-Schensted
//! correspondence, and Knuth equivalence.

mod knuth;
mod partition;
mod rs;
mod syt;

pub use knuth::{knuth_class, knuth_class_shape, knuth_component, knuth_equivalent, knuth_neighbors};
pub use partition::{partitions, rearrangement_count, Partition};
pub use rs::{p_tableau, rs, rs_inverse, rs_shape, TableauPair};
pub use syt::{
    av_tableaux, f_lambda, involution_identity, superstandard, syt_all, syt_enumerate,
    Orientation, StandardTableau,
};

pub(crate) use syt::transpose_tableau;

impl StandardTableau {
    /// The reflected tableau; descents complement under reflection.
    pub fn transpose(&self) -> StandardTableau {
        transpose_tableau(self)
    }
}
