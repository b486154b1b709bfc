//! Product-form solving over a power: solve each coordinate projection over
//! the base and represent the power's solution set as the product of the
//! per-coordinate sets, without materializing it.

use crate::error::{BudgetKind, Result};
use crate::power::PowerStructure;
use crate::relational::{project_solutions, solve, Budget, EquationSystem, SolutionSet};
use itertools::Itertools;
use rayon::prelude::*;

/// Solution set of a system over a power, held in product form: one explicit
/// factor per coordinate, all column-aligned to `variables`. A power point
/// assigns each variable a tuple; its i-th projection must lie in factor i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSolutionSet {
    variables: Vec<String>,
    factors: Vec<SolutionSet>,
}

impl PowerSolutionSet {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn factors(&self) -> &[SolutionSet] {
        &self.factors
    }

    pub fn exponent(&self) -> usize {
        self.factors.len()
    }

    /// Total count, the product of the factor counts. Wide type: the factors
    /// multiply up fast.
    pub fn count(&self) -> u128 {
        self.factors.iter().map(|f| f.count() as u128).product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.iter().any(|f| f.is_empty())
    }

    /// Membership check for one power point, given as one tuple per variable
    /// in column order.
    pub fn contains(&self, point: &[Vec<usize>]) -> bool {
        if point.len() != self.variables.len()
            || point.iter().any(|t| t.len() != self.factors.len())
        {
            return false;
        }
        self.factors.iter().enumerate().all(|(i, factor)| {
            let row: Vec<usize> = point.iter().map(|t| t[i]).collect();
            factor.contains(&row)
        })
    }

    /// Pointwise restriction to `vars`, factor by factor. Projection
    /// commutes with the product form: rows of distinct factors lift
    /// independently, so projecting each factor projects the whole set.
    pub fn project(&self, vars: &[String]) -> Result<PowerSolutionSet> {
        let factors = self
            .factors
            .iter()
            .map(|f| project_solutions(f, vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSolutionSet {
            variables: vars.to_vec(),
            factors,
        })
    }

    /// On-demand enumeration of the product, one point per combination of
    /// factor rows. Each yielded point is one tuple per variable, aligned
    /// with `variables`.
    pub fn points(&self) -> impl Iterator<Item = Vec<Vec<usize>>> + '_ {
        self.factors
            .iter()
            .map(|f| f.points().collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(move |rows| {
                (0..self.variables.len())
                    .map(|col| rows.iter().map(|row| row[col]).collect())
                    .collect()
            })
    }
}

/// Solves each of the N coordinate projections over the base, concurrently,
/// and returns the product representation. Any inconsistent projection makes
/// the whole set empty.
pub fn solve_power(
    p: &PowerStructure,
    sys: &EquationSystem,
    budget: &Budget,
) -> Result<PowerSolutionSet> {
    budget.check(BudgetKind::Exponent, p.exponent())?;
    let projections: Result<Vec<EquationSystem>> =
        (0..p.exponent()).map(|i| p.project_system(sys, i)).collect();
    let projections = projections?;
    let solved: Vec<Result<SolutionSet>> = projections
        .par_iter()
        .map(|proj| solve(p.base(), proj, budget))
        .collect();
    let mut factors = Vec::with_capacity(solved.len());
    for r in solved {
        factors.push(r?);
    }
    Ok(PowerSolutionSet {
        variables: sys.variables().to_vec(),
        factors,
    })
}
