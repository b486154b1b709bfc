use crate::algebra::Semigroup;
use crate::error::{Error, GroupDefect, Result};

/// A semigroup together with the identity and inverse map that make it a
/// group. Built by `Semigroup::as_group`, which verifies all three group-view
/// invariants: two-sided identity, two-sided inverses, Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupView {
    base: Semigroup,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupView {
    pub fn from_semigroup(s: &Semigroup) -> Result<Self> {
        let n = s.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| s.multiply(e, a) == a && s.multiply(a, e) == a))
            .ok_or(Error::NotAGroup(GroupDefect::NoIdentity))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| s.multiply(a, b) == identity && s.multiply(b, a) == identity)
                .ok_or(Error::NotAGroup(GroupDefect::MissingInverse(a)))?;
            inverse.push(inv);
        }
        // Implied by identity + inverses over an associative table, but the
        // view's invariant states it outright, so it is verified outright.
        if let Some(bad) = latin_square_defect(s) {
            return Err(Error::NotAGroup(GroupDefect::NotLatinSquare(bad)));
        }
        Ok(GroupView {
            base: s.clone(),
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.base.multiply(a, b)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn latin_square_defect(s: &Semigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&i| {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for b in 0..n {
            row[s.multiply(i, b)] = true;
            col[s.multiply(b, i)] = true;
        }
        row.iter().any(|&x| !x) || col.iter().any(|&x| !x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn z2_group_view() {
        let g = samples::cyclic(2).as_group().unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(0), 0);
        assert_eq!(g.inverse(1), 1);
    }

    #[test]
    fn min2_is_not_a_group() {
        // min on {0,1} has identity 1 (the top), but 0 is absorbing.
        let err = samples::min2().as_group().unwrap_err();
        assert_eq!(err, Error::NotAGroup(GroupDefect::MissingInverse(0)));
    }

    #[test]
    fn no_identity_is_reported() {
        let err = samples::left_zero(2).as_group().unwrap_err();
        assert_eq!(err, Error::NotAGroup(GroupDefect::NoIdentity));
    }

    #[test]
    fn missing_inverse_is_reported() {
        // Chain {0,1} under max has identity 0 but 1 is absorbing.
        let s = Semigroup::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
        let err = s.as_group().unwrap_err();
        assert_eq!(err, Error::NotAGroup(GroupDefect::MissingInverse(1)));
    }

    #[test]
    fn s3_has_three_self_inverse_transpositions() {
        let g = samples::symmetric3().as_group().unwrap();
        let self_inverse: Vec<usize> = (0..6)
            .filter(|&a| a != g.identity() && g.inverse(a) == a)
            .collect();
        assert_eq!(self_inverse.len(), 3);
    }

    #[test]
    fn group_views_are_latin_squares() {
        for s in [samples::cyclic(5), samples::klein4(), samples::symmetric3()] {
            assert!(s.is_quasigroup());
            assert!(s.as_group().is_ok());
        }
    }
}
