use crate::error::{BudgetKind, Error, Result};
use crate::relational::{Atom, ElementRef, EquationSystem, RelationalStructure, Term};
use std::collections::BTreeSet;

/// Resource bounds for solving. Defaults match the CLI: at most 6 variables,
/// universes up to 8 elements, power exponents up to 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_variables: usize,
    pub max_universe: usize,
    pub max_exponent: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_variables: 6,
            max_universe: 8,
            max_exponent: 4,
        }
    }
}

impl Budget {
    pub fn check(&self, kind: BudgetKind, value: usize) -> Result<()> {
        let max = match kind {
            BudgetKind::Variables => self.max_variables,
            BudgetKind::Universe => self.max_universe,
            BudgetKind::Exponent => self.max_exponent,
            BudgetKind::Order => self.max_universe,
        };
        if value > max {
            Err(Error::BudgetExceeded { kind, value, max })
        } else {
            Ok(())
        }
    }
}

/// Search knobs. Both settings are answer-preserving (tested); they exist so
/// the invariance can be exercised, not to trade precision for speed.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Restrict future variable domains through atoms with one free variable.
    pub propagate: bool,
    /// Assign variables in reverse order instead of first-occurrence order.
    pub reverse_order: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            propagate: true,
            reverse_order: false,
        }
    }
}

/// An explicit solution set over a base structure: one row per solution,
/// columns aligned with `variables`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    variables: Vec<String>,
    points: BTreeSet<Vec<usize>>,
}

impl SolutionSet {
    pub fn new(variables: Vec<String>, points: BTreeSet<Vec<usize>>) -> Self {
        SolutionSet { variables, points }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn points(&self) -> impl Iterator<Item = &[usize]> {
        self.points.iter().map(|p| p.as_slice())
    }

    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[usize]) -> bool {
        self.points.contains(point)
    }

    /// Value of `var` in each point, as a column index lookup.
    pub fn var_position(&self, var: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == var)
    }
}

/// Exact solution set of `sys` over `a`, by backtracking in variable order
/// with pruning of every atom as soon as its variables are assigned.
/// Inconsistent systems yield an empty set, not an error.
pub fn solve(
    a: &RelationalStructure,
    sys: &EquationSystem,
    budget: &Budget,
) -> Result<SolutionSet> {
    solve_with(a, sys, budget, SolveOptions::default())
}

pub fn solve_with(
    a: &RelationalStructure,
    sys: &EquationSystem,
    budget: &Budget,
    options: SolveOptions,
) -> Result<SolutionSet> {
    // Compiler-generated partial products are each pinned by their defining
    // atom as soon as they are assigned, so only user variables drive the
    // search width.
    let user_vars = sys
        .variables()
        .iter()
        .filter(|v| !crate::relational::words::is_generated_variable(v))
        .count();
    budget.check(BudgetKind::Variables, user_vars)?;
    budget.check(BudgetKind::Universe, a.universe_size())?;
    validate(a, sys)?;

    let vars = sys.variables();
    // Search order: positions into `vars`.
    let order: Vec<usize> = if options.reverse_order {
        (0..vars.len()).rev().collect()
    } else {
        (0..vars.len()).collect()
    };
    let depth_of_var: Vec<usize> = {
        let mut d = vec![0; vars.len()];
        for (depth, &v) in order.iter().enumerate() {
            d[v] = depth;
        }
        d
    };

    // For each atom: variable positions it mentions and the search depth at
    // which it becomes fully assigned.
    let atom_vars: Vec<Vec<usize>> = sys
        .atoms()
        .iter()
        .map(|atom| {
            let mut vs: Vec<usize> = atom
                .variables()
                .map(|v| sys.var_position(v).expect("constructor enforced coverage"))
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut atoms_ready_at: Vec<Vec<usize>> = vec![Vec::new(); vars.len() + 1];
    for (k, vs) in atom_vars.iter().enumerate() {
        let ready = vs.iter().map(|&v| depth_of_var[v] + 1).max().unwrap_or(0);
        atoms_ready_at[ready].push(k);
    }

    let mut points = BTreeSet::new();
    // Closed atoms (no variables) decide consistency up front.
    let closed_ok = atoms_ready_at[0]
        .iter()
        .all(|&k| eval_atom(a, &sys.atoms()[k], &|_| None).unwrap_or(false));
    if closed_ok {
        let mut assignment: Vec<Option<usize>> = vec![None; vars.len()];
        search(
            a,
            sys,
            &order,
            &atoms_ready_at,
            &atom_vars,
            options.propagate,
            0,
            &mut assignment,
            &mut points,
        );
    }
    Ok(SolutionSet::new(vars.to_vec(), points))
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &RelationalStructure,
    sys: &EquationSystem,
    order: &[usize],
    atoms_ready_at: &[Vec<usize>],
    atom_vars: &[Vec<usize>],
    propagate: bool,
    depth: usize,
    assignment: &mut Vec<Option<usize>>,
    points: &mut BTreeSet<Vec<usize>>,
) {
    if depth == order.len() {
        points.insert(assignment.iter().map(|v| v.unwrap()).collect());
        return;
    }
    let var = order[depth];
    let mut domain: Vec<usize> = (0..a.universe_size()).collect();
    if propagate {
        // Any atom whose only unassigned variable is `var` filters its domain.
        for (k, vs) in atom_vars.iter().enumerate() {
            if !vs.contains(&var) || vs.iter().any(|&v| v != var && assignment[v].is_none()) {
                continue;
            }
            let atom = &sys.atoms()[k];
            domain.retain(|&value| {
                assignment[var] = Some(value);
                let ok = eval_assigned(a, atom, assignment, sys);
                assignment[var] = None;
                ok
            });
            if domain.is_empty() {
                return;
            }
        }
    }
    'values: for value in domain {
        assignment[var] = Some(value);
        for &k in &atoms_ready_at[depth + 1] {
            if !eval_assigned(a, &sys.atoms()[k], assignment, sys) {
                assignment[var] = None;
                continue 'values;
            }
        }
        search(
            a,
            sys,
            order,
            atoms_ready_at,
            atom_vars,
            propagate,
            depth + 1,
            assignment,
            points,
        );
        assignment[var] = None;
    }
}

fn eval_assigned(
    a: &RelationalStructure,
    atom: &Atom,
    assignment: &[Option<usize>],
    sys: &EquationSystem,
) -> bool {
    let lookup = |name: &str| {
        sys.var_position(name)
            .and_then(|p| assignment[p])
    };
    eval_atom(a, atom, &lookup).unwrap_or(false)
}

/// Evaluates an atom under a (total-on-its-variables) assignment. Returns
/// None if some variable is unassigned.
fn eval_atom(
    a: &RelationalStructure,
    atom: &Atom,
    lookup: &dyn Fn(&str) -> Option<usize>,
) -> Option<bool> {
    let value_of = |t: &Term| -> Option<usize> {
        match t {
            Term::Var(v) => lookup(v),
            Term::Const(ElementRef::Base(id)) => Some(*id),
            Term::Const(ElementRef::Tuple(_)) => None,
        }
    };
    match atom {
        Atom::Rel { name, args } => {
            let mut vals = Vec::with_capacity(args.len());
            for t in args {
                vals.push(value_of(t)?);
            }
            Some(a.holds(name, &vals))
        }
        Atom::Eq(l, r) => Some(value_of(l)? == value_of(r)?),
    }
}

/// Validation shared by all solve paths: relations exist with matching
/// arity, constants are base ids inside the universe.
fn validate(a: &RelationalStructure, sys: &EquationSystem) -> Result<()> {
    for atom in sys.atoms() {
        if let Atom::Rel { name, args } = atom {
            let rel = a
                .relation(name)
                .ok_or_else(|| Error::UnknownRelation(name.clone()))?;
            if rel.arity() != args.len() {
                return Err(Error::ArityMismatch {
                    name: name.clone(),
                    expected: rel.arity(),
                    found: args.len(),
                });
            }
        }
        for term in atom.terms() {
            match term {
                Term::Const(ElementRef::Base(id)) => {
                    if *id >= a.universe_size() {
                        return Err(Error::ConstantOutOfRange {
                            value: *id,
                            size: a.universe_size(),
                        });
                    }
                }
                Term::Const(ElementRef::Tuple(t)) => {
                    return Err(Error::TupleInBaseContext { found: t.clone() });
                }
                Term::Var(_) => {}
            }
        }
    }
    Ok(())
}

/// Pointwise restriction of a solution set to `vars` (in the given order),
/// collapsing duplicates.
pub fn project_solutions(sol: &SolutionSet, vars: &[String]) -> Result<SolutionSet> {
    let positions: Vec<usize> = vars
        .iter()
        .map(|v| {
            sol.var_position(v)
                .ok_or_else(|| Error::UnknownVariable(v.clone()))
        })
        .collect::<Result<_>>()?;
    let points = sol
        .points()
        .map(|p| positions.iter().map(|&k| p[k]).collect())
        .collect();
    Ok(SolutionSet::new(vars.to_vec(), points))
}

/// Exact equivalence over `a`: both systems are re-read over the union of
/// their variable lists (extra variables range freely) and their solution
/// sets compared.
pub fn systems_equivalent(
    a: &RelationalStructure,
    s1: &EquationSystem,
    s2: &EquationSystem,
    budget: &Budget,
) -> Result<bool> {
    let mut union: Vec<String> = s1.variables().to_vec();
    for v in s2.variables() {
        if !union.iter().any(|w| w == v) {
            union.push(v.clone());
        }
    }
    let e1 = EquationSystem::with_variables(s1.atoms().to_vec(), union.clone())?;
    let e2 = EquationSystem::with_variables(s2.atoms().to_vec(), union)?;
    Ok(solve(a, &e1, budget)? == solve(a, &e2, budget)?)
}
