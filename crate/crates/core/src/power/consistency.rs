//! Consistency over a power reduces to consistency of every coordinate
//! projection. When a projection is inconsistent, a finite subsystem of the
//! original system already witnesses it; the scan returns a 1-minimal one.

use crate::error::{BudgetKind, Result};
use crate::power::PowerStructure;
use crate::relational::{solve, Atom, Budget, EquationSystem};

/// Outcome of the consistency check. The witness is a subsystem of the input
/// (original power-level atoms, original order) whose projection at the
/// reported coordinate is already inconsistent over the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    Inconsistent {
        coordinate: usize,
        witness: EquationSystem,
    },
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Consistent)
    }
}

/// Scans coordinates in ascending order; on the first inconsistent
/// projection, shrinks the system to a witness subsystem: shortest
/// inconsistent prefix first, then one backward removal pass, which leaves a
/// subsystem no single atom can be dropped from.
pub fn check_consistency(
    p: &PowerStructure,
    sys: &EquationSystem,
    budget: &Budget,
) -> Result<Consistency> {
    budget.check(BudgetKind::Exponent, p.exponent())?;
    for i in 0..p.exponent() {
        let proj = p.project_system(sys, i)?;
        if !solve(p.base(), &proj, budget)?.is_empty() {
            continue;
        }
        let witness = shrink(p, proj.atoms(), sys, budget)?;
        return Ok(Consistency::Inconsistent {
            coordinate: i,
            witness,
        });
    }
    Ok(Consistency::Consistent)
}

/// `projected` is the full projection at the failing coordinate, known to be
/// inconsistent; positions align with `sys` atoms.
fn shrink(
    p: &PowerStructure,
    projected: &[Atom],
    sys: &EquationSystem,
    budget: &Budget,
) -> Result<EquationSystem> {
    let inconsistent = |positions: &[usize]| -> Result<bool> {
        let atoms: Vec<Atom> = positions.iter().map(|&k| projected[k].clone()).collect();
        let candidate = EquationSystem::with_variables(atoms, sys.variables().to_vec())?;
        Ok(solve(p.base(), &candidate, budget)?.is_empty())
    };
    let mut kept: Vec<usize> = Vec::new();
    for k in 0..projected.len() {
        kept.push(k);
        if inconsistent(&kept)? {
            break;
        }
    }
    // The last prefix atom is essential by prefix minimality; retest the rest.
    for slot in (0..kept.len().saturating_sub(1)).rev() {
        let mut without = kept.clone();
        without.remove(slot);
        if inconsistent(&without)? {
            kept = without;
        }
    }
    Ok(sys.subsystem(&kept))
}
