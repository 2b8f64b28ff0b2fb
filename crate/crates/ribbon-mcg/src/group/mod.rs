//! The group case: Hopf algebras that are group algebras. Edge labels are
//! group elements; slides and twists act by substitution.

mod finite;
mod moduli;
mod relabel;
mod word;

pub use finite::{FiniteGroup, GroupJson};
pub use moduli::{
    all_labelings, coinvariants, face_holonomy, path_holonomy, path_word, ribbon_relabeling, show_labeling, vertex_act, Biinvariants,
    DEFAULT_MAX_STATES,
};
pub use relabel::{eval_word, Relabeling};
pub use word::PivotWord;

use std::collections::BTreeMap;

use crate::graph::EdgeId;

/// A group element on every edge.
pub type Labeling = BTreeMap<EdgeId, usize>;
