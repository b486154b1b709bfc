use crate::algebra::{GroupView, Semigroup};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// A finite relational structure: a universe 0..n and named relations of
/// fixed arity given by explicit tuple sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalStructure {
    universe_size: usize,
    relations: BTreeMap<String, Relation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    arity: usize,
    tuples: BTreeSet<Vec<usize>>,
}

impl Relation {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> impl Iterator<Item = &[usize]> {
        self.tuples.iter().map(|t| t.as_slice())
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        // BTreeSet<Vec<usize>> lookups borrow as [usize].
        self.tuples.contains(tuple)
    }
}

impl RelationalStructure {
    pub fn new(universe_size: usize) -> Self {
        RelationalStructure {
            universe_size,
            relations: BTreeMap::new(),
        }
    }

    pub fn add_relation(
        &mut self,
        name: impl Into<String>,
        arity: usize,
        tuples: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<()> {
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != arity {
                return Err(Error::RaggedConstant {
                    expected: arity,
                    found: t,
                });
            }
            if let Some(&v) = t.iter().find(|&&v| v >= self.universe_size) {
                return Err(Error::ConstantOutOfRange {
                    value: v,
                    size: self.universe_size,
                });
            }
            set.insert(t);
        }
        self.relations.insert(name.into(), Relation { arity, tuples: set });
        Ok(())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Relation)> {
        self.relations.iter().map(|(n, r)| (n.as_str(), r))
    }

    pub fn holds(&self, name: &str, args: &[usize]) -> bool {
        self.relation(name).is_some_and(|r| r.contains(args))
    }
}

/// Pr of a semigroup: one ternary relation M = the graph of multiplication,
/// M(a, b, c) iff a·b = c.
pub fn predicatize_semigroup(s: &Semigroup) -> RelationalStructure {
    let n = s.order();
    let mut out = RelationalStructure::new(n);
    out.add_relation(
        "M",
        3,
        (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b, s.multiply(a, b)])),
    )
    .expect("table entries are in range");
    out
}

/// Pr of a group: M as above, plus I = the graph of inversion
/// (I(x, y) iff x = y⁻¹) and the singleton E marking the identity.
pub fn predicatize_group(g: &GroupView) -> RelationalStructure {
    let n = g.order();
    let mut out = predicatize_semigroup(g.base());
    out.add_relation("I", 2, (0..n).map(|y| vec![g.inverse(y), y]))
        .expect("inverses are in range");
    out.add_relation("E", 1, [vec![g.identity()]])
        .expect("identity is in range");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn min2_graph() {
        let p = predicatize_semigroup(&samples::min2());
        let m = p.relation("M").unwrap();
        assert_eq!(m.arity(), 3);
        let tuples: Vec<Vec<usize>> = m.tuples().map(|t| t.to_vec()).collect();
        assert_eq!(
            tuples,
            vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 1]]
        );
    }

    #[test]
    fn graph_sizes_are_functional() {
        for s in [samples::min2(), samples::symmetric3(), samples::null(4)] {
            let n = s.order();
            let p = predicatize_semigroup(&s);
            assert_eq!(p.relation("M").unwrap().len(), n * n);
        }
    }

    #[test]
    fn group_relations() {
        let z2 = samples::cyclic(2).as_group().unwrap();
        let p = predicatize_group(&z2);
        let i_tuples: Vec<Vec<usize>> =
            p.relation("I").unwrap().tuples().map(|t| t.to_vec()).collect();
        assert_eq!(i_tuples, vec![vec![0, 0], vec![1, 1]]);
        assert!(p.holds("E", &[0]));
        assert!(!p.holds("E", &[1]));

        let s3 = samples::symmetric3().as_group().unwrap();
        let p3 = predicatize_group(&s3);
        assert_eq!(p3.relation("I").unwrap().len(), 6);
        assert_eq!(p3.relation("E").unwrap().len(), 1);
    }

    #[test]
    fn trivial_group_relations() {
        let g = samples::trivial().as_group().unwrap();
        let p = predicatize_group(&g);
        assert!(p.holds("M", &[0, 0, 0]));
        assert!(p.holds("I", &[0, 0]));
        assert!(p.holds("E", &[0]));
    }
}
