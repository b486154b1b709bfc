use crate::error::{Error, Result};
use std::fmt;

/// A concrete element mentioned in an equation: either a base-universe id or,
/// when the system is addressed to a direct power, a coordinate tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementRef {
    Base(usize),
    Tuple(Vec<usize>),
}

impl fmt::Display for ElementRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementRef::Base(id) => write!(f, "#{id}"),
            ElementRef::Tuple(t) => {
                write!(f, "[")?;
                for (k, v) in t.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(ElementRef),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn base(id: usize) -> Term {
        Term::Const(ElementRef::Base(id))
    }

    pub fn tuple(t: Vec<usize>) -> Term {
        Term::Const(ElementRef::Tuple(t))
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            Term::Const(_) => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

/// One equation: either a relation atom R(t₁,…,t_k) or an equality t₁ = t₂.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Rel { name: String, args: Vec<Term> },
    Eq(Term, Term),
}

impl Atom {
    pub fn rel(name: impl Into<String>, args: Vec<Term>) -> Atom {
        Atom::Rel {
            name: name.into(),
            args,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        match self {
            Atom::Rel { args, .. } => args.iter().collect::<Vec<_>>().into_iter(),
            Atom::Eq(l, r) => vec![l, r].into_iter(),
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.terms().filter_map(|t| t.as_var())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Rel { name, args } => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Atom::Eq(l, r) => write!(f, "{l} = {r}"),
        }
    }
}

/// A finite conjunction of atoms over an ordered, finite variable set.
/// Construction guarantees that every variable occurring in the atoms is
/// listed; the list may carry extra (unconstrained) variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    atoms: Vec<Atom>,
    variables: Vec<String>,
}

impl EquationSystem {
    /// Variables are collected from the atoms in order of first occurrence.
    pub fn new(atoms: Vec<Atom>) -> EquationSystem {
        let mut variables: Vec<String> = Vec::new();
        for atom in &atoms {
            for v in atom.variables() {
                if !variables.iter().any(|w| w == v) {
                    variables.push(v.to_string());
                }
            }
        }
        EquationSystem { atoms, variables }
    }

    /// Explicit variable list; must cover every variable occurring in atoms.
    pub fn with_variables(atoms: Vec<Atom>, variables: Vec<String>) -> Result<EquationSystem> {
        for atom in &atoms {
            for v in atom.variables() {
                if !variables.iter().any(|w| w == v) {
                    return Err(Error::UnknownVariable(v.to_string()));
                }
            }
        }
        Ok(EquationSystem { atoms, variables })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn var_position(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The subsystem keeping atoms at the given positions (ascending),
    /// preserving order and the full variable list.
    pub fn subsystem(&self, positions: &[usize]) -> EquationSystem {
        EquationSystem {
            atoms: positions.iter().map(|&p| self.atoms[p].clone()).collect(),
            variables: self.variables.clone(),
        }
    }
}

impl fmt::Display for EquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for atom in &self.atoms {
            writeln!(f, "{atom}")?;
        }
        Ok(())
    }
}
