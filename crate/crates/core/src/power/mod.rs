//! Finite direct powers of a relational structure: componentwise relation
//! semantics, coordinate projections, product-form solving, the bucket
//! decomposition of constant-bearing systems, the finite-subsystem reducer,
//! and the strictly decreasing counterexample chain for semigroups that fail
//! a quasi-identity.

mod bucket;
mod chain;
mod consistency;
mod reduce;
mod solve;

pub use bucket::{decompose, Bucket, BucketTag};
pub use chain::{counterexample_chain, ChainReport, ChainViolation, ChainWitness};
pub use consistency::{check_consistency, Consistency};
pub use reduce::reduce_to_finite;
pub use solve::{solve_power, PowerSolutionSet};

use crate::error::{Error, Result};
use crate::relational::{Atom, ElementRef, EquationSystem, RelationalStructure, Term};

/// A finite direct power base^N. Relation membership is componentwise and
/// evaluated lazily against the base; the power's tuples are never
/// materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerStructure {
    base: RelationalStructure,
    exponent: usize,
}

impl PowerStructure {
    pub fn new(base: RelationalStructure, exponent: usize) -> Self {
        assert!(exponent >= 1, "power exponent must be positive");
        PowerStructure { base, exponent }
    }

    pub fn base(&self) -> &RelationalStructure {
        &self.base
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Componentwise membership: R(t₁,…,t_k) holds iff the base relation
    /// holds on the i-th entries for every coordinate i. Arguments whose
    /// length differs from the exponent never belong.
    pub fn holds(&self, name: &str, args: &[Vec<usize>]) -> bool {
        let Some(rel) = self.base.relation(name) else {
            return false;
        };
        if args.len() != rel.arity() || args.iter().any(|t| t.len() != self.exponent) {
            return false;
        }
        let mut point = vec![0; args.len()];
        (0..self.exponent).all(|i| {
            for (k, t) in args.iter().enumerate() {
                point[k] = t[i];
            }
            rel.contains(&point)
        })
    }

    /// Replaces every tuple constant by its i-th entry, leaving variables
    /// alone. Constants in a power-level atom must be tuples of the power's
    /// exponent; a base constant here is a context error.
    pub fn project_atom(&self, atom: &Atom, i: usize) -> Result<Atom> {
        assert!(i < self.exponent, "coordinate out of range");
        let project = |t: &Term| -> Result<Term> {
            match t {
                Term::Var(v) => Ok(Term::var(v.clone())),
                Term::Const(ElementRef::Base(id)) => {
                    Err(Error::BaseConstantInPowerContext { found: *id })
                }
                Term::Const(ElementRef::Tuple(tuple)) => {
                    if tuple.len() != self.exponent {
                        return Err(Error::RaggedConstant {
                            expected: self.exponent,
                            found: tuple.clone(),
                        });
                    }
                    Ok(Term::base(tuple[i]))
                }
            }
        };
        match atom {
            Atom::Rel { name, args } => {
                let args: Result<Vec<Term>> = args.iter().map(project).collect();
                Ok(Atom::rel(name.clone(), args?))
            }
            Atom::Eq(l, r) => Ok(Atom::Eq(project(l)?, project(r)?)),
        }
    }

    /// Atom-wise projection preserving atom order and the full variable list,
    /// so per-coordinate solution sets stay column-aligned.
    pub fn project_system(&self, sys: &EquationSystem, i: usize) -> Result<EquationSystem> {
        let atoms: Result<Vec<Atom>> = sys.atoms().iter().map(|a| self.project_atom(a, i)).collect();
        EquationSystem::with_variables(atoms?, sys.variables().to_vec())
    }
}
