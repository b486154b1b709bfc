//! Decomposition of a system into buckets keyed by constant/variable shape
//! and the variables involved. Constants are deliberately not part of the
//! key: a bucket collects all the constraints that pin the same variables
//! through the same atom shape, which is what the reducer collapses.

use crate::error::{Error, Result};
use crate::relational::{Atom, EquationSystem, Term};

/// Bucket key. The six mixed M shapes and the constant-bearing I/E shapes
/// get dedicated buckets; everything else (equalities, fully-variable atoms,
/// all-constant M/I atoms) shares the residual bucket.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BucketTag {
    /// M(c, x, y)
    ConstVarVar { x: String, y: String },
    /// M(x, c, y)
    VarConstVar { x: String, y: String },
    /// M(x, y, c)
    VarVarConst { x: String, y: String },
    /// M(c, d, x)
    ConstConstVar { x: String },
    /// M(c, x, d)
    ConstVarConst { x: String },
    /// M(x, c, d)
    VarConstConst { x: String },
    /// I(x, c)
    InvVarConst { x: String },
    /// I(c, x)
    InvConstVar { x: String },
    /// E(c)
    IdentityConst,
    Residual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bucket {
    pub tag: BucketTag,
    /// Member atoms with their positions in the input system, ascending.
    pub atoms: Vec<(usize, Atom)>,
}

fn classify(atom: &Atom) -> Result<BucketTag> {
    let unsupported = || Error::UnsupportedAtom(atom.to_string());
    let Atom::Rel { name, args } = atom else {
        return Ok(BucketTag::Residual);
    };
    let var = |k: usize| args[k].as_var().map(str::to_string);
    match (name.as_str(), args.len()) {
        ("M", 3) => Ok(match (var(0), var(1), var(2)) {
            (None, Some(x), Some(y)) => BucketTag::ConstVarVar { x, y },
            (Some(x), None, Some(y)) => BucketTag::VarConstVar { x, y },
            (Some(x), Some(y), None) => BucketTag::VarVarConst { x, y },
            (None, None, Some(x)) => BucketTag::ConstConstVar { x },
            (None, Some(x), None) => BucketTag::ConstVarConst { x },
            (Some(x), None, None) => BucketTag::VarConstConst { x },
            _ => BucketTag::Residual,
        }),
        ("I", 2) => Ok(match (var(0), var(1)) {
            (Some(x), None) => BucketTag::InvVarConst { x },
            (None, Some(x)) => BucketTag::InvConstVar { x },
            _ => BucketTag::Residual,
        }),
        ("E", 1) => Ok(match args[0] {
            Term::Const(_) => BucketTag::IdentityConst,
            Term::Var(_) => BucketTag::Residual,
        }),
        _ => Err(unsupported()),
    }
}

/// Partitions the atoms into buckets ordered by first member position. Every
/// atom lands in exactly one bucket; non-M/I/E relations are rejected.
pub fn decompose(sys: &EquationSystem) -> Result<Vec<Bucket>> {
    let mut out: Vec<Bucket> = Vec::new();
    for (pos, atom) in sys.atoms().iter().enumerate() {
        let tag = classify(atom)?;
        match out.iter_mut().find(|b| b.tag == tag) {
            Some(bucket) => bucket.atoms.push((pos, atom.clone())),
            None => out.push(Bucket {
                tag,
                atoms: vec![(pos, atom.clone())],
            }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: Term, b: Term, c: Term) -> Atom {
        Atom::rel("M", vec![a, b, c])
    }

    #[test]
    fn the_six_mixed_shapes() {
        let cases = [
            (
                m(Term::base(1), Term::var("x"), Term::var("y")),
                BucketTag::ConstVarVar { x: "x".into(), y: "y".into() },
            ),
            (
                m(Term::var("x"), Term::tuple(vec![0, 1]), Term::var("y")),
                BucketTag::VarConstVar { x: "x".into(), y: "y".into() },
            ),
            (
                m(Term::var("x"), Term::var("y"), Term::base(0)),
                BucketTag::VarVarConst { x: "x".into(), y: "y".into() },
            ),
            (
                m(Term::base(0), Term::base(1), Term::var("x")),
                BucketTag::ConstConstVar { x: "x".into() },
            ),
            (
                m(Term::base(0), Term::var("x"), Term::base(1)),
                BucketTag::ConstVarConst { x: "x".into() },
            ),
            (
                m(Term::var("x"), Term::base(0), Term::base(1)),
                BucketTag::VarConstConst { x: "x".into() },
            ),
        ];
        for (atom, want) in cases {
            assert_eq!(classify(&atom).unwrap(), want, "atom {atom}");
        }
    }

    #[test]
    fn residual_membership() {
        let residuals = [
            Atom::Eq(Term::var("x"), Term::var("y")),
            Atom::Eq(Term::var("x"), Term::base(1)),
            Atom::Eq(Term::base(0), Term::base(0)),
            m(Term::var("x"), Term::var("y"), Term::var("z")),
            m(Term::base(0), Term::base(0), Term::base(0)),
            Atom::rel("I", vec![Term::var("x"), Term::var("y")]),
            Atom::rel("I", vec![Term::base(0), Term::base(1)]),
            Atom::rel("E", vec![Term::var("x")]),
        ];
        for atom in residuals {
            assert_eq!(classify(&atom).unwrap(), BucketTag::Residual, "atom {atom}");
        }
    }

    #[test]
    fn group_shapes_with_constants() {
        assert_eq!(
            classify(&Atom::rel("I", vec![Term::var("x"), Term::base(1)])).unwrap(),
            BucketTag::InvVarConst { x: "x".into() }
        );
        assert_eq!(
            classify(&Atom::rel("I", vec![Term::tuple(vec![1, 0]), Term::var("x")])).unwrap(),
            BucketTag::InvConstVar { x: "x".into() }
        );
        assert_eq!(
            classify(&Atom::rel("E", vec![Term::base(0)])).unwrap(),
            BucketTag::IdentityConst
        );
    }

    #[test]
    fn unknown_relations_and_bad_arity_are_rejected() {
        for atom in [
            Atom::rel("Q", vec![Term::var("x")]),
            Atom::rel("M", vec![Term::var("x"), Term::var("y")]),
            Atom::rel("I", vec![Term::var("x")]),
            Atom::rel("E", vec![Term::var("x"), Term::var("y")]),
        ] {
            assert!(matches!(
                classify(&atom).unwrap_err(),
                Error::UnsupportedAtom(_)
            ));
        }
    }

    #[test]
    fn constants_do_not_split_buckets_but_variables_do() {
        let sys = EquationSystem::new(vec![
            m(Term::var("x"), Term::base(0), Term::var("y")),
            m(Term::var("x"), Term::base(1), Term::var("y")),
            m(Term::var("x"), Term::base(1), Term::var("z")),
            m(Term::base(0), Term::var("x"), Term::var("y")),
        ]);
        let buckets = decompose(&sys).unwrap();
        assert_eq!(buckets.len(), 3);
        assert_eq!(buckets[0].atoms.len(), 2);
        assert_eq!(
            buckets[0].tag,
            BucketTag::VarConstVar { x: "x".into(), y: "y".into() }
        );
        assert_eq!(buckets[0].atoms[0].0, 0);
        assert_eq!(buckets[0].atoms[1].0, 1);
        assert_eq!(
            buckets[1].tag,
            BucketTag::VarConstVar { x: "x".into(), y: "z".into() }
        );
        assert_eq!(
            buckets[2].tag,
            BucketTag::ConstVarVar { x: "x".into(), y: "y".into() }
        );
    }

    #[test]
    fn buckets_follow_first_occurrence_order() {
        let sys = EquationSystem::new(vec![
            Atom::Eq(Term::var("x"), Term::var("y")),
            m(Term::var("x"), Term::base(0), Term::base(0)),
            Atom::Eq(Term::var("y"), Term::var("x")),
        ]);
        let buckets = decompose(&sys).unwrap();
        assert_eq!(buckets.len(), 2);
        assert_eq!(buckets[0].tag, BucketTag::Residual);
        assert_eq!(buckets[0].atoms.iter().map(|(p, _)| *p).collect::<Vec<_>>(), [0, 2]);
        assert_eq!(
            buckets[1].tag,
            BucketTag::VarConstConst { x: "x".into() }
        );
    }
}
