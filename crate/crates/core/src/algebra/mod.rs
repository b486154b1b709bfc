//! Finite semigroups and groups as concrete multiplication tables, plus the
//! structural computations the rest of the crate is built on: idempotents,
//! principal ideals and the kernel, reducible elements, subsemigroup
//! extraction, homogroup checks, and Rees matrix construction /
//! coordinatization of simple semigroups.

mod group;
mod iso;
mod rees;
pub mod samples;

pub use group::GroupView;
pub use iso::{are_isomorphic, canonical_table, find_isomorphism};
pub use rees::{
    coordinatize_simple, idempotents_closed, is_rectangular_band_of_groups, LabeledSemigroup,
    ReesSpec, ReesTriple,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A square multiplication table over element ids `0..n`.
///
/// Entries are bounds-checked at construction; associativity is NOT required
/// here, so non-associative tables (quasigroup candidates) are representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::WrongTableShape {
                size: n,
                expected: n * n,
                found: entries.len(),
            });
        }
        for (pos, &v) in entries.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange {
                    row: pos / n,
                    col: pos % n,
                    value: v,
                    size: n,
                });
            }
        }
        Ok(CayleyTable { n, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::WrongTableShape {
                    size: n,
                    expected: n * n,
                    found: row.len() * n,
                });
            }
        }
        CayleyTable::new(n, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Latin-square test: every row and every column is a permutation.
    /// Associativity plays no role, so this is exactly the quasigroup test.
    pub fn is_quasigroup(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = self.get(a, b);
                let c = self.get(b, a);
                if row_seen[r] || col_seen[c] {
                    return false;
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        true
    }

    /// First associativity violation in lexicographic (a, b, c) order, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

/// A finite semigroup: a `CayleyTable` whose operation is associative.
/// Associativity is verified over all n³ triples at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    table: CayleyTable,
}

/// Which structural subset a `SubsetReport` describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Kernel,
    Reducible,
    Idempotents,
}

/// A named subset of a semigroup's elements, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetReport {
    pub kind: SubsetKind,
    pub members: Vec<usize>,
}

/// Result of the homogroup test: is the kernel a group, and if so which
/// element is its identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogroupCheck {
    pub is_homogroup: bool,
    pub kernel_identity: Option<usize>,
}

/// Result of the kernel-identity centrality check on a homogroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterCheck {
    pub holds: bool,
    /// Element that fails to commute with the kernel identity, when any.
    pub witness: Option<usize>,
}

impl Semigroup {
    /// Builds a semigroup from row vectors, verifying closure and
    /// associativity.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Semigroup::from_table(CayleyTable::from_rows(rows)?)
    }

    pub fn from_table(table: CayleyTable) -> Result<Self> {
        if let Some((a, b, c)) = table.associativity_violation() {
            let left = table.get(table.get(a, b), c);
            let right = table.get(a, table.get(b, c));
            return Err(Error::NotAssociative {
                a,
                b,
                c,
                left,
                right,
            });
        }
        Ok(Semigroup { table })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn cayley(&self) -> &CayleyTable {
        &self.table
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_quasigroup(&self) -> bool {
        self.table.is_quasigroup()
    }

    pub fn idempotents(&self) -> SubsetReport {
        SubsetReport {
            kind: SubsetKind::Idempotents,
            members: self.elements().filter(|&a| self.multiply(a, a) == a).collect(),
        }
    }

    /// The principal two-sided ideal {a} ∪ aS ∪ Sa ∪ SaS.
    pub fn principal_ideal(&self, a: usize) -> BTreeSet<usize> {
        let n = self.order();
        let mut out = BTreeSet::new();
        out.insert(a);
        for s in 0..n {
            out.insert(self.multiply(a, s));
            out.insert(self.multiply(s, a));
            let sa = self.multiply(s, a);
            for t in 0..n {
                out.insert(self.multiply(sa, t));
            }
        }
        out
    }

    /// The kernel: the unique minimal two-sided ideal. Computed as the
    /// smallest principal ideal, then verified to be contained in every other
    /// principal ideal (which characterizes the kernel in a finite semigroup).
    pub fn kernel(&self) -> SubsetReport {
        let ideals: Vec<BTreeSet<usize>> =
            self.elements().map(|a| self.principal_ideal(a)).collect();
        let min = ideals
            .iter()
            .min_by_key(|i| i.len())
            .expect("nonempty semigroup");
        for ideal in &ideals {
            assert!(
                min.is_subset(ideal),
                "minimal principal ideal is not contained in J({:?})",
                ideal
            );
        }
        SubsetReport {
            kind: SubsetKind::Kernel,
            members: min.iter().copied().collect(),
        }
    }

    /// Red(S): the image of the multiplication table.
    pub fn reducible(&self) -> SubsetReport {
        let mut members = BTreeSet::new();
        for a in self.elements() {
            for b in self.elements() {
                members.insert(self.multiply(a, b));
            }
        }
        SubsetReport {
            kind: SubsetKind::Reducible,
            members: members.into_iter().collect(),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.kernel().members.len() == self.order()
    }

    /// Restriction of the operation to `members` (order preserved), which
    /// must be closed under multiplication. Returns the restricted semigroup
    /// together with the local-id → global-id map.
    pub fn subsemigroup(&self, members: &[usize]) -> Result<(Semigroup, Vec<usize>)> {
        let n = self.order();
        let mut local = vec![None; n];
        for (idx, &m) in members.iter().enumerate() {
            if m >= n || local[m].is_some() {
                return Err(Error::BadSubsetMember(m));
            }
            local[m] = Some(idx);
        }
        let k = members.len();
        let mut entries = Vec::with_capacity(k * k);
        for &a in members {
            for &b in members {
                let p = self.multiply(a, b);
                match local[p] {
                    Some(lp) => entries.push(lp),
                    None => return Err(Error::NotClosed { a, b, product: p }),
                }
            }
        }
        let sub = Semigroup::from_table(CayleyTable::new(k, entries)?)
            .expect("restriction of an associative operation is associative");
        Ok((sub, members.to_vec()))
    }

    pub fn as_group(&self) -> Result<GroupView> {
        GroupView::from_semigroup(self)
    }

    /// Homogroup test: the kernel, as a subsemigroup, is a group.
    pub fn homogroup_check(&self) -> HomogroupCheck {
        let kernel = self.kernel().members;
        let (sub, to_global) = self
            .subsemigroup(&kernel)
            .expect("kernel is an ideal, hence closed");
        match sub.as_group() {
            Ok(view) => HomogroupCheck {
                is_homogroup: true,
                kernel_identity: Some(to_global[view.identity()]),
            },
            Err(_) => HomogroupCheck {
                is_homogroup: false,
                kernel_identity: None,
            },
        }
    }

    pub fn is_homogroup(&self) -> bool {
        self.homogroup_check().is_homogroup
    }

    /// For a homogroup, checks that the kernel identity e is idempotent and
    /// central (e·s = s·e for every s). Always true by theory; the witness
    /// field exists to falsify the implementation, not the claim.
    pub fn verify_homogroup_center(&self) -> Result<CenterCheck> {
        let check = self.homogroup_check();
        let e = match check.kernel_identity {
            Some(e) if check.is_homogroup => e,
            _ => return Err(Error::NotHomogroup),
        };
        if self.multiply(e, e) != e {
            return Ok(CenterCheck {
                holds: false,
                witness: Some(e),
            });
        }
        for s in self.elements() {
            if self.multiply(e, s) != self.multiply(s, e) {
                return Ok(CenterCheck {
                    holds: false,
                    witness: Some(s),
                });
            }
        }
        Ok(CenterCheck {
            holds: true,
            witness: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn trivial_semigroup_constructs() {
        let s = Semigroup::from_rows(&[vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.multiply(0, 0), 0);
    }

    #[test]
    fn min2_constructs_and_multiplies() {
        let s = samples::min2();
        assert_eq!(s.multiply(0, 1), 0);
        assert_eq!(s.multiply(1, 1), 1);
    }

    #[test]
    fn max2_constructs() {
        // (0·1)·0 = 1·0 = 1 and 0·(1·0) = 0·1 = 1; the constructor verifies
        // the rest of the triples.
        let s = Semigroup::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(s.multiply(0, 1), 1);
    }

    #[test]
    fn out_of_range_entry_names_cell() {
        let err = Semigroup::from_rows(&[vec![0, 2], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                size: 2
            }
        );
    }

    #[test]
    fn associativity_violation_names_first_triple() {
        // x·y = y except 1·1 = 0; first offending triple in scan order is
        // (1,0,1): (1·0)·1 = 0·1 = 1 but 1·(0·1) = 1·1 = 0.
        let err = Semigroup::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap_err();
        match err {
            Error::NotAssociative { a, b, c, left, right } => {
                assert_eq!((a, b, c), (1, 0, 1));
                assert_eq!((left, right), (1, 0));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn idempotents_of_samples() {
        assert_eq!(samples::min2().idempotents().members, vec![0, 1]);
        assert_eq!(samples::cyclic(2).idempotents().members, vec![0]);
        assert_eq!(
            samples::rectangular_band(2, 2).idempotents().members,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn left_zero_multiplication() {
        let s = samples::left_zero(2);
        assert_eq!(s.multiply(0, 1), 0);
    }

    #[test]
    fn kernel_of_samples() {
        assert_eq!(samples::min2().kernel().members, vec![0]);
        assert_eq!(samples::cyclic(3).kernel().members, vec![0, 1, 2]);
        assert_eq!(samples::left_zero(2).kernel().members, vec![0, 1]);
    }

    #[test]
    fn kernel_has_no_proper_subideal() {
        // Direct restatement of the SubsetReport invariant, checked by
        // enumerating every subset of the kernel.
        for s in [
            samples::min2(),
            samples::null(3),
            samples::homogroup3(),
            samples::rectangular_band(2, 2),
            samples::min_chain(4),
        ] {
            let kernel = s.kernel().members;
            assert!(is_ideal(&s, &kernel));
            for mask in 1..(1u32 << kernel.len()) - 1 {
                let subset: Vec<usize> = kernel
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &m)| m)
                    .collect();
                assert!(!is_ideal(&s, &subset), "proper subideal {subset:?}");
            }
        }
    }

    fn is_ideal(s: &Semigroup, members: &[usize]) -> bool {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        members.iter().all(|&m| {
            s.elements()
                .all(|x| set.contains(&s.multiply(m, x)) && set.contains(&s.multiply(x, m)))
        })
    }

    #[test]
    fn kernel_matches_full_ideal_enumeration() {
        // Oracle: the kernel is the smallest ideal over all subsets.
        for s in [
            samples::min2(),
            samples::left_zero(2),
            samples::null(3),
            samples::homogroup3(),
            samples::cyclic(4),
        ] {
            let n = s.order();
            let mut best: Option<Vec<usize>> = None;
            for mask in 1..(1u32 << n) {
                let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if is_ideal(&s, &subset)
                    && best.as_ref().map_or(true, |b| subset.len() < b.len())
                {
                    best = Some(subset);
                }
            }
            assert_eq!(s.kernel().members, best.unwrap());
        }
    }

    #[test]
    fn reducible_of_samples() {
        assert_eq!(samples::null(3).reducible().members, vec![0]);
        assert_eq!(samples::cyclic(3).reducible().members, vec![0, 1, 2]);
        assert_eq!(samples::min2().reducible().members, vec![0, 1]);
    }

    #[test]
    fn simplicity_of_samples() {
        assert!(samples::left_zero(2).is_simple());
        assert!(!samples::min2().is_simple());
        assert!(samples::cyclic(5).is_simple());
    }

    #[test]
    fn quasigroup_check() {
        assert!(samples::cyclic(2).is_quasigroup());
        assert!(!samples::min2().is_quasigroup());
        // Non-associative Latin square; only the raw table is constructible.
        let t =
            CayleyTable::from_rows(&[vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]]).unwrap();
        assert!(t.is_quasigroup());
        assert!(t.associativity_violation().is_some());
    }

    #[test]
    fn homogroup_samples() {
        let min2 = samples::min2().homogroup_check();
        assert_eq!(
            min2,
            HomogroupCheck {
                is_homogroup: true,
                kernel_identity: Some(0)
            }
        );
        assert!(!samples::rectangular_band(2, 2).is_homogroup());
        let hg3 = samples::homogroup3().homogroup_check();
        assert_eq!(hg3.kernel_identity, Some(0));
    }

    #[test]
    fn homogroup_center_verifies() {
        for s in [samples::min2(), samples::homogroup3(), samples::cyclic(4)] {
            let check = s.verify_homogroup_center().unwrap();
            assert!(check.holds);
            assert_eq!(check.witness, None);
        }
        assert_eq!(
            samples::rectangular_band(2, 2).verify_homogroup_center(),
            Err(Error::NotHomogroup)
        );
    }

    #[test]
    fn subsemigroup_rejects_unclosed_subsets() {
        let z4 = samples::cyclic(4);
        let err = z4.subsemigroup(&[1, 2]).unwrap_err();
        assert_eq!(
            err,
            Error::NotClosed {
                a: 1,
                b: 2,
                product: 3
            }
        );
        let (sub, map) = z4.subsemigroup(&[0, 2]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(map, vec![0, 2]);
    }
}
