//! Classification of finite semigroups by the direct-power quasi-identities,
//! plus exhaustive enumeration of small semigroups and survey runs that
//! re-check the structural claims over every table.

pub mod enumerate;
pub mod qi;
pub mod survey;

pub use enumerate::{enumerate_semigroups, EnumerationMode};
pub use qi::{check_left_qi, check_right_qi, QiResult, QiSide, QiWitness};
pub use survey::{survey, SurveyOutcome};

use crate::algebra::{is_rectangular_band_of_groups, Semigroup};
use serde::{Deserialize, Serialize};

/// Whether every direct power of the semigroup keeps finite equational
/// behavior (`Simple`) or admits an infinite strictly-descending system
/// chain (`Hard`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Simple,
    Hard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub qi_left: QiResult,
    pub qi_right: QiResult,
    pub kernel: Vec<usize>,
    pub reducible: Vec<usize>,
    pub is_homogroup: bool,
    pub kernel_identity: Option<usize>,
    pub is_rect_band_kernel: bool,
    pub verdict: Verdict,
}

/// Runs both quasi-identity checks and assembles the structural context
/// (kernel, reducible set, homogroup and kernel-shape flags). The verdict
/// depends on the two checks alone.
pub fn classify(s: &Semigroup) -> ClassificationReport {
    let qi_left = check_left_qi(s);
    let qi_right = check_right_qi(s);
    let kernel = s.kernel();
    let reducible = s.reducible();
    let homogroup = s.homogroup_check();
    let (kernel_sub, _) = s
        .subsemigroup(&kernel.members)
        .expect("kernel is an ideal, hence closed");
    let verdict = if qi_left.holds && qi_right.holds {
        Verdict::Simple
    } else {
        Verdict::Hard
    };
    ClassificationReport {
        qi_left,
        qi_right,
        kernel: kernel.members,
        reducible: reducible.members,
        is_homogroup: homogroup.is_homogroup,
        kernel_identity: homogroup.kernel_identity,
        is_rect_band_kernel: is_rectangular_band_of_groups(&kernel_sub),
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn groups_classify_simple() {
        let report = classify(&samples::cyclic(2));
        assert_eq!(report.verdict, Verdict::Simple);
        assert!(report.qi_left.holds && report.qi_right.holds);
        assert_eq!(report.kernel, vec![0, 1]);
        assert_eq!(report.reducible, vec![0, 1]);
        assert!(report.is_homogroup);
        assert_eq!(report.kernel_identity, Some(0));
        assert!(report.is_rect_band_kernel);
    }

    #[test]
    fn min2_classifies_hard_with_witness() {
        let report = classify(&samples::min2());
        assert_eq!(report.verdict, Verdict::Hard);
        let w = report.qi_left.witness.unwrap();
        assert_eq!((w.a, w.b, w.alpha, w.beta), (0, 1, 0, 1));
        // Kernel is the absorbing bottom {0}; every element is reducible
        // (idempotents reproduce themselves).
        assert_eq!(report.kernel, vec![0]);
        assert_eq!(report.reducible, vec![0, 1]);
        assert!(report.is_homogroup, "one-element kernel is a group");
        assert_eq!(report.kernel_identity, Some(0));
        assert!(report.is_rect_band_kernel);
    }

    #[test]
    fn rectangular_band_is_simple_verdict_and_kernel() {
        let rb = samples::rectangular_band(2, 2);
        let report = classify(&rb);
        assert_eq!(report.verdict, Verdict::Simple);
        assert_eq!(report.kernel, vec![0, 1, 2, 3]);
        assert!(report.is_rect_band_kernel);
        assert!(!report.is_homogroup, "four-idempotent kernel is not a group");
        assert_eq!(report.kernel_identity, None);
    }

    #[test]
    fn homogroup3_is_simple_homogroup_with_full_reducible_set() {
        let s = samples::homogroup3();
        let report = classify(&s);
        assert_eq!(report.verdict, Verdict::Simple);
        assert!(report.is_homogroup);
        assert_eq!(report.kernel, vec![0, 1]);
        assert_eq!(report.kernel_identity, Some(0));
        assert_eq!(report.reducible, vec![0, 1]);
        assert!(report.is_rect_band_kernel, "kernel Z2 is a 1x1 band of Z2");
    }
}
