//! Relational structures over finite universes, equation systems in at most
//! atomic form, and an exact finite-domain solver.
//!
//! A semigroup or group enters this layer through predicatization: the
//! operation graphs become relations (ternary M for the product, binary I
//! for inversion, unary E for the identity) and equations become atoms over
//! those relations.

pub mod parse;
pub mod solve;
pub mod structure;
pub mod syntax;
pub mod words;

pub use parse::{parse_equations, parse_words};
pub use solve::{project_solutions, solve, solve_with, systems_equivalent, Budget, SolutionSet, SolveOptions};
pub use structure::{predicatize_group, predicatize_semigroup, Relation, RelationalStructure};
pub use syntax::{Atom, ElementRef, EquationSystem, Term};
pub use words::{
    compile_words, is_generated_variable, original_variables, Language, WordEquation, WordToken,
};
