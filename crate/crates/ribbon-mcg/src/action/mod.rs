//! Compiling slides, edge insertions and Dehn twists into operators.

mod builder;
mod operator;
mod program;
mod script;
mod twists;

pub use builder::{loop_path, slide_prims, Builder};
pub use operator::{
    add_edge_op, face_slide_op, generating_twists_op, generator_op, insert_loop_op, mcg_word_op, remove_edge_op,
    slide_op, twist_facepath_op, twist_gamma_op, twist_loop_op, Backend, BackendKind, Operator, Payload,
};
pub use program::{Prim, Program};
pub use script::{recognize_standard, run_script};
pub use twists::{gamma_twist, generating_twists, generator_twist, mcg_word, named_twist, Route};
