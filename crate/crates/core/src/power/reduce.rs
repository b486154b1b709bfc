//! The finite-subsystem reducer. Over the power of a predicatized semigroup
//! that passes both quasi-identities, a consistent system collapses to one
//! atom per constant-bearing bucket plus the deduplicated residual; the
//! result is a subsystem equivalent to the input.

use crate::algebra::Semigroup;
use crate::classify::{check_left_qi, check_right_qi};
use crate::error::{Error, Result};
use crate::power::bucket::{decompose, BucketTag};
use crate::power::consistency::{check_consistency, Consistency};
use crate::power::PowerStructure;
use crate::relational::{predicatize_group, predicatize_semigroup, Atom, Budget, EquationSystem};

/// Requires `p` to be a power of Pr(s) (group form when the base carries I/E
/// relations), both quasi-identities to hold, and `sys` to be consistent over
/// `p`; the three gates fail with NotPredicatization, QiViolated, and
/// Inconsistent respectively. Returns the reduced subsystem, atoms in their
/// original order, variable list unchanged.
pub fn reduce_to_finite(
    s: &Semigroup,
    p: &PowerStructure,
    sys: &EquationSystem,
    budget: &Budget,
) -> Result<EquationSystem> {
    let group_base = p.base().relation("I").is_some() || p.base().relation("E").is_some();
    let expected = if group_base {
        match s.as_group() {
            Ok(g) => predicatize_group(&g),
            Err(_) => return Err(Error::NotPredicatization),
        }
    } else {
        predicatize_semigroup(s)
    };
    if *p.base() != expected {
        return Err(Error::NotPredicatization);
    }
    for result in [check_left_qi(s), check_right_qi(s)] {
        if let Some(w) = result.witness {
            return Err(Error::QiViolated {
                a: w.a,
                b: w.b,
                alpha: w.alpha,
                beta: w.beta,
            });
        }
    }
    if let Consistency::Inconsistent { coordinate, witness } =
        check_consistency(p, sys, budget)?
    {
        return Err(Error::Inconsistent {
            coordinate,
            witness: Box::new(witness),
        });
    }
    let mut kept: Vec<usize> = Vec::new();
    for bucket in decompose(sys)? {
        if bucket.tag == BucketTag::Residual {
            let mut seen: Vec<&Atom> = Vec::new();
            for (pos, atom) in &bucket.atoms {
                if !seen.contains(&atom) {
                    seen.push(atom);
                    kept.push(*pos);
                }
            }
        } else {
            kept.push(bucket.atoms[0].0);
        }
    }
    kept.sort_unstable();
    Ok(sys.subsystem(&kept))
}
