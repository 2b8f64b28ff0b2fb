//! Executable relation suites with JSON reports.

mod axioms;
mod bene;
mod lemmas;
mod check;
mod closed;
mod equivariance;
mod gervais;
mod report;
mod torus;

pub use axioms::{default_instances, hopf_suite};
pub use bene::{bene_suite, chord_diagram, perturbed, slide_from_adjacency};
pub use lemmas::{end_after_start, face_paths, lemma_suite};
pub use gervais::{gervais_cases, gervais_control, gervais_suite, intersection, run_relations, RelationCase};
pub use closed::{closed_relations, closed_surface_suite, commutator_oracle, ClosedRelation};
pub use equivariance::equivariance_suite;
pub use check::{group_eq, linear_eq, programs_eq_all, symbolic_eq, Evaluator};
pub use torus::torus_suite;
pub use report::{run_cases, Case, CaseReport, Outcome, SuiteReport, Verdict};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{FinHopf, DEFAULT_MAX_DIM, Q};

    #[test]
    fn bene_suite_passes() {
        let h = FinHopf::<Q>::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let evals = [Evaluator::Symbolic, Evaluator::Linear { hopf: &h, max_dim: DEFAULT_MAX_DIM }];
        let r = bene_suite(&evals).unwrap();
        for c in r.failures().iter().chain(r.silent_controls().iter()) {
            eprintln!("{} {:?} {:?}", c.case, c.verdict, c.witness);
        }
        eprintln!("{}", r.summary());
        assert!(r.self_test_ok());
    }
}
