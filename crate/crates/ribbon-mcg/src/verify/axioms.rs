//! Hopf and pivotal axioms of the shipped instances.

use super::{run_cases, Case, Outcome, SuiteReport};
use crate::hopf::{AxiomCheck, FinHopf, Q};

fn first_failure(checks: Vec<AxiomCheck>) -> Outcome {
    match checks.into_iter().find(|c| !c.ok) {
        None => Outcome::pass(),
        Some(c) => Outcome::fail(format!("{}: {}", c.axiom, c.detail.unwrap_or_default())),
    }
}

/// Axioms, pivots and the identities of T for each instance. Instances
/// without a pivot among the basis vectors and the unit fail.
pub fn hopf_suite(instances: &[FinHopf<Q>]) -> SuiteReport {
    let mut cases = Vec::new();
    for h in instances {
        let h = h.clone();
        cases.push(Case::new(format!("Hopf axioms {}", h.name), move || Ok(first_failure(h.check_axioms()))));
    }
    for h in instances {
        let pivots = h.find_pivots();
        if pivots.is_empty() {
            let name = h.name.clone();
            cases.push(Case::new(format!("pivots {name}"), move || Ok(Outcome::fail(format!("{name} has no pivot")))));
        }
        for p in pivots {
            let h = h.clone();
            cases.push(Case::new(format!("pivotal identities and T {} p={}", h.name, h.show(&p)), move || {
                let out = first_failure(h.pivot_conditions(&p));
                out.and(|| {
                    let h = h.clone().with_pivot(p.clone())?;
                    Ok(first_failure(h.check_t_identities()?))
                })
            }));
        }
    }
    cases.push(Case::control("control: Sweedler with x·x = g", || {
        let mut h = FinHopf::<Q>::sweedler4()?;
        h.set_product(2, 2, vec![(1, <Q as crate::hopf::Scalar>::from_i64(1))]);
        Ok(first_failure(h.check_axioms()))
    }));
    run_cases("hopf", cases)
}

/// Group algebras of Z2, Z3, S3 and Sweedler's algebra over the rationals.
pub fn default_instances() -> crate::Result<Vec<FinHopf<Q>>> {
    ["Z2", "Z3", "S3", "sweedler4"].iter().map(|n| FinHopf::by_name(n)).collect()
}
