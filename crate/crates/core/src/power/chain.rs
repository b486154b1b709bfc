//! The counterexample chain. For a semigroup failing a quasi-identity, one
//! variable and N single-atom equations over the N-th power produce prefix
//! systems whose solution counts strictly decrease N times: the finite
//! shadow of "no finite subsystem is equivalent".
//!
//! From a left witness (a, b, α, β) with aα = aβ = c and bα ≠ bβ, equation
//! k (1-based) is M(a′_k, x, c′_k) with a′_k = [b×k, a×(N−k)] and
//! c′_k = [bα×k, c×(N−k)]; the right form mirrors every product. The point
//! [α×n, β×(N−n)] satisfies the first n equations and fails equation n+1 at
//! coordinate n, so each added equation strictly cuts the solution set.

use crate::algebra::Semigroup;
use crate::classify::{check_left_qi, check_right_qi, QiSide, QiWitness};
use crate::error::{BudgetKind, Error, Result};
use crate::power::{solve_power, PowerStructure};
use crate::relational::{predicatize_semigroup, Atom, Budget, EquationSystem, Term};

/// The quasi-identity witness the chain is built from, together with the
/// shared product c (aα for the left side, αa for the right).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainWitness {
    pub side: QiSide,
    pub a: usize,
    pub b: usize,
    pub alpha: usize,
    pub beta: usize,
    pub c: usize,
}

/// A point separating one prefix from the next: it solves the first
/// `prefix` equations and fails equation `equation` (1-based) at the 0-based
/// `coordinate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainViolation {
    pub prefix: usize,
    pub point: Vec<usize>,
    pub equation: usize,
    pub coordinate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub witness: ChainWitness,
    pub exponent: usize,
    /// eq_1 .. eq_N in order, each a single M atom over the variable x.
    pub equations: Vec<Atom>,
    /// Solution counts of the prefix systems S_1 .. S_N; strictly
    /// decreasing and positive.
    pub prefix_counts: Vec<u128>,
    /// One separating point per proper prefix (empty when N = 1).
    pub violations: Vec<ChainViolation>,
}

impl ChainReport {
    /// The prefix system S_k = {eq_1, …, eq_k}, 1 ≤ k ≤ N.
    pub fn prefix_system(&self, k: usize) -> EquationSystem {
        assert!(k >= 1 && k <= self.equations.len(), "prefix out of range");
        EquationSystem::new(self.equations[..k].to_vec())
    }
}

/// Builds the chain over Pr(s)^N. Fails with QiHolds when both
/// quasi-identities hold (groups in particular); respects the exponent
/// budget.
pub fn counterexample_chain(s: &Semigroup, n: usize, budget: &Budget) -> Result<ChainReport> {
    assert!(n >= 1, "chain exponent must be positive");
    budget.check(BudgetKind::Exponent, n)?;
    let (side, w) = pick_witness(s)?;
    build(s, side, w, n, budget)
}

/// The construction proper, from an already chosen witness. Split out so the
/// right-hand arm stays testable on commutative failures, where the public
/// entry always picks the left witness.
fn build(
    s: &Semigroup,
    side: QiSide,
    w: QiWitness,
    n: usize,
    budget: &Budget,
) -> Result<ChainReport> {
    let c = match side {
        QiSide::Left => s.multiply(w.a, w.alpha),
        QiSide::Right => s.multiply(w.alpha, w.a),
    };
    let witness = ChainWitness {
        side,
        a: w.a,
        b: w.b,
        alpha: w.alpha,
        beta: w.beta,
        c,
    };
    let cut = match side {
        QiSide::Left => s.multiply(w.b, w.alpha),
        QiSide::Right => s.multiply(w.alpha, w.b),
    };
    let equations: Vec<Atom> = (1..=n)
        .map(|k| {
            let a_k = block(w.b, k, w.a, n - k);
            let c_k = block(cut, k, c, n - k);
            match side {
                QiSide::Left => Atom::rel(
                    "M",
                    vec![Term::tuple(a_k), Term::var("x"), Term::tuple(c_k)],
                ),
                QiSide::Right => Atom::rel(
                    "M",
                    vec![Term::var("x"), Term::tuple(a_k), Term::tuple(c_k)],
                ),
            }
        })
        .collect();
    let report = ChainReport {
        witness,
        exponent: n,
        equations,
        prefix_counts: Vec::new(),
        violations: Vec::new(),
    };
    let p = PowerStructure::new(predicatize_semigroup(s), n);
    let mut prefix_counts = Vec::with_capacity(n);
    for k in 1..=n {
        let sol = solve_power(&p, &report.prefix_system(k), budget)?;
        prefix_counts.push(sol.count());
    }
    let mut violations = Vec::with_capacity(n - 1);
    for prefix in 1..n {
        let point = block(w.alpha, prefix, w.beta, n - prefix);
        debug_assert!(
            (1..=prefix).all(|k| atom_holds(&p, &report.equations[k - 1], &point)),
            "separating point must satisfy its prefix"
        );
        debug_assert!(
            !atom_holds(&p, &report.equations[prefix], &point),
            "separating point must fail the next equation"
        );
        violations.push(ChainViolation {
            prefix,
            point,
            equation: prefix + 1,
            coordinate: prefix,
        });
    }
    Ok(ChainReport {
        prefix_counts,
        violations,
        ..report
    })
}

fn pick_witness(s: &Semigroup) -> Result<(QiSide, QiWitness)> {
    if let Some(w) = check_left_qi(s).witness {
        return Ok((QiSide::Left, w));
    }
    if let Some(w) = check_right_qi(s).witness {
        return Ok((QiSide::Right, w));
    }
    Err(Error::QiHolds)
}

/// [head × reps, tail × rest]
fn block(head: usize, reps: usize, tail: usize, rest: usize) -> Vec<usize> {
    let mut out = vec![head; reps];
    out.extend(std::iter::repeat(tail).take(rest));
    out
}

/// Evaluates one chain equation at x = point.
fn atom_holds(p: &PowerStructure, atom: &Atom, point: &[usize]) -> bool {
    let Atom::Rel { name, args } = atom else {
        unreachable!("chain equations are relation atoms");
    };
    let resolved: Vec<Vec<usize>> = args
        .iter()
        .map(|t| match t {
            Term::Var(_) => point.to_vec(),
            Term::Const(crate::relational::ElementRef::Tuple(tuple)) => tuple.clone(),
            Term::Const(crate::relational::ElementRef::Base(_)) => {
                unreachable!("chain equations use tuple constants")
            }
        })
        .collect();
    p.holds(name, &resolved)
}
