//! Word equations (products of variables, inverses, and constants) and their
//! compilation into relational equation systems.
//!
//! Products associate left-to-right; each partial product gets a fresh
//! variable `_t1, _t2, …` in order of introduction. Names matching that
//! pattern are reserved for the compiler and rejected in input.

use crate::error::{Error, Result};
use crate::relational::{Atom, EquationSystem, Term};
use std::fmt;

/// Which relation vocabulary a word may use. Inverses and the identity
/// token need the group language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Language {
    Semigroup,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordToken {
    Var(String),
    /// `x^-1`; inverse applies to variables only.
    InvVar(String),
    /// `#k`: base element id k.
    Const(usize),
    /// `1`: the group identity.
    One,
}

impl fmt::Display for WordToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordToken::Var(v) => write!(f, "{v}"),
            WordToken::InvVar(v) => write!(f, "{v}^-1"),
            WordToken::Const(k) => write!(f, "#{k}"),
            WordToken::One => write!(f, "1"),
        }
    }
}

/// One equation `lhs = rhs`, each side a nonempty product of tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEquation {
    pub lhs: Vec<WordToken>,
    pub rhs: Vec<WordToken>,
}

impl fmt::Display for WordEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[WordToken]| {
            s.iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" * ")
        };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// True for compiler-generated partial-product names (`_t<digits>`).
pub fn is_generated_variable(name: &str) -> bool {
    name.strip_prefix("_t")
        .is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
}

/// The non-generated variables of a compiled system, in system order.
pub fn original_variables(sys: &EquationSystem) -> Vec<String> {
    sys.variables()
        .iter()
        .filter(|v| !is_generated_variable(v))
        .cloned()
        .collect()
}

struct Compiler {
    language: Language,
    atoms: Vec<Atom>,
    counter: usize,
}

impl Compiler {
    fn fresh(&mut self) -> String {
        self.counter += 1;
        format!("_t{}", self.counter)
    }

    fn require_group(&self, token: &WordToken) -> Result<()> {
        if self.language == Language::Group {
            Ok(())
        } else {
            Err(Error::GroupTokenInSemigroupWord(token.to_string()))
        }
    }

    /// Term standing for one token; inverse tokens emit their defining
    /// I-atom here.
    fn token_term(&mut self, token: &WordToken) -> Result<Term> {
        match token {
            WordToken::Var(v) => Ok(Term::var(v.clone())),
            WordToken::Const(k) => Ok(Term::base(*k)),
            WordToken::InvVar(v) => {
                self.require_group(token)?;
                let t = self.fresh();
                self.atoms.push(Atom::rel(
                    "I",
                    vec![Term::var(v.clone()), Term::var(t.clone())],
                ));
                Ok(Term::var(t))
            }
            WordToken::One => unreachable!("identity tokens are stripped before folding"),
        }
    }

    /// Folds a whole side; the result term is the side's value.
    fn fold_full(&mut self, tokens: &[WordToken]) -> Result<Term> {
        let mut acc = self.token_term(&tokens[0])?;
        for token in &tokens[1..] {
            let rhs = self.token_term(token)?;
            let out = self.fresh();
            self.atoms
                .push(Atom::rel("M", vec![acc, rhs, Term::var(out.clone())]));
            acc = Term::var(out);
        }
        Ok(acc)
    }

    /// Folds a side of ≥ 2 tokens with the final product targeting `target`.
    fn fold_into(&mut self, tokens: &[WordToken], target: Term) -> Result<()> {
        let mut acc = self.token_term(&tokens[0])?;
        for token in &tokens[1..tokens.len() - 1] {
            let rhs = self.token_term(token)?;
            let out = self.fresh();
            self.atoms
                .push(Atom::rel("M", vec![acc, rhs, Term::var(out.clone())]));
            acc = Term::var(out);
        }
        let last = self.token_term(&tokens[tokens.len() - 1])?;
        self.atoms.push(Atom::rel("M", vec![acc, last, target]));
        Ok(())
    }

    fn equation(&mut self, eq: &WordEquation) -> Result<()> {
        for side in [&eq.lhs, &eq.rhs] {
            if side.is_empty() {
                return Err(Error::EmptyWord);
            }
            for token in side {
                match token {
                    WordToken::Var(v) | WordToken::InvVar(v) => {
                        if is_generated_variable(v) {
                            return Err(Error::ReservedVariable(v.clone()));
                        }
                    }
                    WordToken::One => self.require_group(token)?,
                    WordToken::Const(_) => {}
                }
            }
        }
        // The identity token is the group identity, so it is dropped from
        // products; a side of nothing but identity tokens is the identity.
        let lhs: Vec<WordToken> = eq
            .lhs
            .iter()
            .filter(|t| **t != WordToken::One)
            .cloned()
            .collect();
        let rhs: Vec<WordToken> = eq
            .rhs
            .iter()
            .filter(|t| **t != WordToken::One)
            .cloned()
            .collect();
        match (lhs.len(), rhs.len()) {
            (0, 0) => {}
            (_, 0) | (0, _) => {
                let side = if rhs.is_empty() { &lhs } else { &rhs };
                let value = self.fold_full(side)?;
                self.atoms.push(Atom::rel("E", vec![value]));
            }
            (1, 1) => {
                let l = self.token_term(&lhs[0])?;
                let r = self.token_term(&rhs[0])?;
                self.atoms.push(Atom::Eq(l, r));
            }
            (1, _) => {
                let target = self.token_term(&lhs[0])?;
                self.fold_into(&rhs, target)?;
            }
            (_, 1) => {
                let target = self.token_term(&rhs[0])?;
                self.fold_into(&lhs, target)?;
            }
            (_, _) => {
                let l = self.fold_full(&lhs)?;
                self.fold_into(&rhs, l)?;
            }
        }
        Ok(())
    }
}

/// Compiles word equations into one relational system. The fresh-variable
/// counter runs across the whole batch, so generated names never collide.
pub fn compile_words(equations: &[WordEquation], language: Language) -> Result<EquationSystem> {
    let mut compiler = Compiler {
        language,
        atoms: Vec::new(),
        counter: 0,
    };
    for eq in equations {
        compiler.equation(eq)?;
    }
    Ok(EquationSystem::new(compiler.atoms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;
    use crate::relational::{predicatize_group, predicatize_semigroup};
    use crate::relational::solve::{project_solutions, solve, Budget};

    fn var(v: &str) -> WordToken {
        WordToken::Var(v.into())
    }

    fn inv(v: &str) -> WordToken {
        WordToken::InvVar(v.into())
    }

    fn eq(lhs: Vec<WordToken>, rhs: Vec<WordToken>) -> WordEquation {
        WordEquation { lhs, rhs }
    }

    fn atom_lines(sys: &EquationSystem) -> Vec<String> {
        sys.atoms().iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn generated_name_detection() {
        assert!(is_generated_variable("_t1"));
        assert!(is_generated_variable("_t42"));
        assert!(!is_generated_variable("_t"));
        assert!(!is_generated_variable("_tx"));
        assert!(!is_generated_variable("t1"));
        assert!(!is_generated_variable("x"));
        assert!(!is_generated_variable("_t1x"));
    }

    #[test]
    fn commutator_compiles_to_the_documented_shape() {
        let commutator = eq(
            vec![inv("x"), inv("y"), var("x"), var("y")],
            vec![WordToken::One],
        );
        let sys = compile_words(&[commutator], Language::Group).unwrap();
        assert_eq!(
            atom_lines(&sys),
            vec![
                "I(x, _t1)",
                "I(y, _t2)",
                "M(_t1, _t2, _t3)",
                "M(_t3, x, _t4)",
                "M(_t4, y, _t5)",
                "E(_t5)",
            ]
        );
        assert_eq!(original_variables(&sys), vec!["x".to_string(), "y".into()]);
    }

    #[test]
    fn product_equals_variable_targets_directly() {
        let sys = compile_words(
            &[eq(vec![var("x"), var("y")], vec![var("z")])],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, z)"]);
    }

    #[test]
    fn variable_equals_product_targets_directly() {
        let sys = compile_words(
            &[eq(vec![var("z")], vec![var("x"), var("y")])],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, z)"]);
    }

    #[test]
    fn longer_fold_introduces_temps_in_order() {
        let sys = compile_words(
            &[eq(vec![var("x"), var("y"), var("z")], vec![var("w")])],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, _t1)", "M(_t1, z, w)"]);
    }

    #[test]
    fn two_sided_products_share_the_final_temp() {
        let sys = compile_words(
            &[eq(vec![var("x"), var("y")], vec![var("y"), var("x")])],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, _t1)", "M(y, x, _t1)"]);
    }

    #[test]
    fn single_tokens_compile_to_equality() {
        let sys = compile_words(
            &[eq(vec![var("x")], vec![WordToken::Const(0)])],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["x = #0"]);
    }

    #[test]
    fn identity_side_compiles_to_e_atom() {
        let sys = compile_words(
            &[eq(vec![var("x")], vec![WordToken::One])],
            Language::Group,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["E(x)"]);
        let sys = compile_words(
            &[eq(vec![WordToken::One], vec![var("x"), var("y")])],
            Language::Group,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, _t1)", "E(_t1)"]);
        let sys = compile_words(
            &[eq(vec![WordToken::One], vec![WordToken::One])],
            Language::Group,
        )
        .unwrap();
        assert!(sys.is_empty());
    }

    #[test]
    fn identity_tokens_inside_products_are_dropped() {
        let sys = compile_words(
            &[eq(
                vec![var("x"), WordToken::One, var("y")],
                vec![var("z")],
            )],
            Language::Group,
        )
        .unwrap();
        assert_eq!(atom_lines(&sys), vec!["M(x, y, z)"]);
    }

    #[test]
    fn counter_runs_across_equations() {
        let sys = compile_words(
            &[
                eq(vec![var("x"), var("y"), var("z")], vec![var("w")]),
                eq(vec![var("p"), var("q"), var("r")], vec![var("s")]),
            ],
            Language::Semigroup,
        )
        .unwrap();
        assert_eq!(
            atom_lines(&sys),
            vec![
                "M(x, y, _t1)",
                "M(_t1, z, w)",
                "M(p, q, _t2)",
                "M(_t2, r, s)",
            ]
        );
    }

    #[test]
    fn group_tokens_rejected_in_semigroup_language() {
        let err = compile_words(
            &[eq(vec![inv("x")], vec![var("y")])],
            Language::Semigroup,
        )
        .unwrap_err();
        assert_eq!(err, Error::GroupTokenInSemigroupWord("x^-1".into()));
        let err = compile_words(
            &[eq(vec![var("x")], vec![WordToken::One])],
            Language::Semigroup,
        )
        .unwrap_err();
        assert_eq!(err, Error::GroupTokenInSemigroupWord("1".into()));
    }

    #[test]
    fn empty_sides_and_reserved_names_are_rejected() {
        let err = compile_words(&[eq(vec![], vec![var("x")])], Language::Semigroup).unwrap_err();
        assert_eq!(err, Error::EmptyWord);
        let err = compile_words(
            &[eq(vec![var("_t3"), var("x")], vec![var("y")])],
            Language::Semigroup,
        )
        .unwrap_err();
        assert_eq!(err, Error::ReservedVariable("_t3".into()));
    }

    #[test]
    fn commuting_pairs_in_s3_via_compiled_words() {
        let s3 = samples::symmetric3();
        let p = predicatize_semigroup(&s3);
        let sys = compile_words(
            &[eq(vec![var("x"), var("y")], vec![var("y"), var("x")])],
            Language::Semigroup,
        )
        .unwrap();
        let sol = solve(&p, &sys, &Budget::default()).unwrap();
        let proj = project_solutions(&sol, &original_variables(&sys)).unwrap();
        assert_eq!(proj.count(), 18);
    }

    #[test]
    fn commutator_over_abelian_group_is_unrestricted() {
        let z2 = samples::cyclic(2).as_group().unwrap();
        let p = predicatize_group(&z2);
        let commutator = eq(
            vec![inv("x"), inv("y"), var("x"), var("y")],
            vec![WordToken::One],
        );
        let sys = compile_words(&[commutator], Language::Group).unwrap();
        // 7 variables total, 2 of them original: generated temps must not
        // count against the default variable budget.
        let sol = solve(&p, &sys, &Budget::default()).unwrap();
        let proj = project_solutions(&sol, &original_variables(&sys)).unwrap();
        assert_eq!(proj.count(), 4);
    }
}
