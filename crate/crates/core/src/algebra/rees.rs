//! Rees matrix semigroups over groups: construction from a (group, Λ, I,
//! sandwich matrix) spec, and the converse coordinatization of an arbitrary
//! finite simple semigroup back into such a spec.
//!
//! Triples are ordered (λ, g, i) and multiply as
//! (λ,g,i)(μ,h,j) = (λ, g·p[i][μ]·h, j), with the sandwich matrix stored as
//! |I| rows by |Λ| columns. The first row and first column of the sandwich
//! matrix must be the group identity (normalized form); non-normalized input
//! is rejected, never silently fixed up.

use crate::algebra::{CayleyTable, GroupView, Semigroup};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Coordinates of one element of a Rees matrix semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReesTriple {
    pub lambda: usize,
    pub g: usize,
    pub i: usize,
}

/// A normalized Rees matrix spec: group G, index sizes |Λ| and |I|, and the
/// sandwich matrix P with i_size rows and lambda_size columns of group
/// element ids.
#[derive(Debug, Clone)]
pub struct ReesSpec {
    group: GroupView,
    lambda_size: usize,
    i_size: usize,
    sandwich: Vec<Vec<usize>>,
}

impl ReesSpec {
    pub fn new(
        group: GroupView,
        lambda_size: usize,
        i_size: usize,
        sandwich: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if lambda_size == 0 || i_size == 0 {
            return Err(Error::EmptyReesIndex {
                lambda_size,
                i_size,
            });
        }
        if sandwich.len() != i_size || sandwich.iter().any(|row| row.len() != lambda_size) {
            return Err(Error::BadSandwichShape {
                i_size,
                lambda_size,
            });
        }
        for (row, entries) in sandwich.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= group.order() {
                    return Err(Error::BadSandwichEntry { row, col, value });
                }
                if (row == 0 || col == 0) && value != group.identity() {
                    return Err(Error::NotNormalized { row, col });
                }
            }
        }
        Ok(ReesSpec {
            group,
            lambda_size,
            i_size,
            sandwich,
        })
    }

    pub fn group(&self) -> &GroupView {
        &self.group
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda_size
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn sandwich(&self) -> &[Vec<usize>] {
        &self.sandwich
    }

    pub fn order(&self) -> usize {
        self.lambda_size * self.group.order() * self.i_size
    }

    /// Element id of the triple (λ, g, i) in the constructed semigroup:
    /// triples enumerate lexicographically.
    pub fn encode(&self, t: ReesTriple) -> usize {
        (t.lambda * self.group.order() + t.g) * self.i_size + t.i
    }

    pub fn decode(&self, id: usize) -> ReesTriple {
        let i = id % self.i_size;
        let rest = id / self.i_size;
        ReesTriple {
            lambda: rest / self.group.order(),
            g: rest % self.group.order(),
            i,
        }
    }

    /// Builds the Rees matrix semigroup on |Λ|·|G|·|I| elements. The product
    /// table is re-verified for associativity by the `Semigroup` constructor.
    pub fn construct(&self) -> LabeledSemigroup {
        let n = self.order();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            let x = self.decode(a);
            for b in 0..n {
                let y = self.decode(b);
                let mid = self
                    .group
                    .multiply(self.group.multiply(x.g, self.sandwich[x.i][y.lambda]), y.g);
                entries.push(self.encode(ReesTriple {
                    lambda: x.lambda,
                    g: mid,
                    i: y.i,
                }));
            }
        }
        let semigroup = Semigroup::from_table(
            CayleyTable::new(n, entries).expect("encoded ids are in range"),
        )
        .expect("Rees products are associative");
        let labels = (0..n).map(|id| self.decode(id)).collect();
        LabeledSemigroup::new(semigroup, labels).expect("decode enumerates all triples once")
    }
}

/// A semigroup whose elements carry Rees coordinates. `labels[id]` is the
/// triple of element `id`; the labeling is a verified bijection.
#[derive(Debug, Clone)]
pub struct LabeledSemigroup {
    semigroup: Semigroup,
    labels: Vec<ReesTriple>,
}

impl LabeledSemigroup {
    pub fn new(semigroup: Semigroup, labels: Vec<ReesTriple>) -> Result<Self> {
        if labels.len() != semigroup.order() {
            return Err(Error::WrongTableShape {
                size: semigroup.order(),
                expected: semigroup.order(),
                found: labels.len(),
            });
        }
        let distinct: BTreeSet<ReesTriple> = labels.iter().copied().collect();
        if distinct.len() != labels.len() {
            return Err(Error::BadSubsetMember(labels.len()));
        }
        Ok(LabeledSemigroup { semigroup, labels })
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn labels(&self) -> &[ReesTriple] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> ReesTriple {
        self.labels[id]
    }

    pub fn id_of(&self, t: ReesTriple) -> Option<usize> {
        self.labels.iter().position(|&l| l == t)
    }
}

/// Coordinatization of a finite simple semigroup as a Rees matrix semigroup.
///
/// Basepoint: the smallest-id idempotent e. The λ index enumerates the
/// classes of common behavior as a left multiplier ({a} ∪ aS), the i index
/// the classes of common behavior as a right multiplier ({a} ∪ Sa); e's
/// classes come first, the rest are ordered by smallest member. G is the
/// group on the intersection cell of e's two classes, numbered with e
/// first so the recovered identity is id 0. The sandwich matrix is built
/// from smallest-id cell representatives and then normalized by the usual
/// change of representatives so that row 0 and column 0 become identity.
pub fn coordinatize_simple(s: &Semigroup) -> Result<(ReesSpec, LabeledSemigroup)> {
    let kernel = s.kernel().members;
    if kernel.len() != s.order() {
        return Err(Error::NotSimple { witness: kernel[0] });
    }
    let n = s.order();
    let e = s
        .idempotents()
        .members
        .first()
        .copied()
        .expect("finite semigroups contain an idempotent");

    let right_key = |a: usize| -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = (0..n).map(|x| s.multiply(a, x)).collect();
        set.insert(a);
        set
    };
    let left_key = |a: usize| -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = (0..n).map(|x| s.multiply(x, a)).collect();
        set.insert(a);
        set
    };
    let lambda_classes = partition_with_first(n, e, right_key);
    let i_classes = partition_with_first(n, e, left_key);
    let lambda_of: Vec<usize> = class_index(n, &lambda_classes);
    let i_of: Vec<usize> = class_index(n, &i_classes);

    // The group cell: members sharing both of e's classes, with e first.
    let mut h_members: Vec<usize> = (0..n)
        .filter(|&a| lambda_of[a] == 0 && i_of[a] == 0 && a != e)
        .collect();
    h_members.insert(0, e);
    let (h_sub, h_global) = s
        .subsemigroup(&h_members)
        .expect("a group cell is closed under multiplication");
    let group = h_sub
        .as_group()
        .expect("the basepoint cell of a simple semigroup is a group");
    assert_eq!(group.identity(), 0, "basepoint is the cell identity");
    let h_local = |global: usize| -> usize {
        h_global
            .iter()
            .position(|&m| m == global)
            .expect("product stays inside the group cell")
    };

    // Cell representatives: r[λ] in (λ-class, i-class 0), q[i] in
    // (λ-class 0, i-class). Representatives of the basepoint cell are e
    // itself; others take the smallest member.
    let cell_min = |lam: usize, i: usize| -> usize {
        (0..n)
            .filter(|&a| lambda_of[a] == lam && i_of[a] == i)
            .min()
            .expect("every cell of a simple semigroup is nonempty")
    };
    let r: Vec<usize> = (0..lambda_classes.len())
        .map(|lam| if lam == 0 { e } else { cell_min(lam, 0) })
        .collect();
    let q: Vec<usize> = (0..i_classes.len())
        .map(|i| if i == 0 { e } else { cell_min(0, i) })
        .collect();

    // Raw sandwich p'[i][λ] = q_i · r_λ lands in the group cell; normalize
    // as p[i][λ] = (p'[i][0])⁻¹ · p'[i][λ] · (p'[0][λ])⁻¹.
    let raw = |i: usize, lam: usize| s.multiply(q[i], r[lam]);
    let inv_global = |x: usize| h_global[group.inverse(h_local(x))];
    let mut sandwich = Vec::with_capacity(i_classes.len());
    for i in 0..i_classes.len() {
        let mut row = Vec::with_capacity(lambda_classes.len());
        let left_fix = inv_global(raw(i, 0));
        for lam in 0..lambda_classes.len() {
            let right_fix = inv_global(raw(0, lam));
            let value = s.multiply(s.multiply(left_fix, raw(i, lam)), right_fix);
            row.push(h_local(value));
        }
        sandwich.push(row);
    }

    // Adjusted representatives realize the isomorphism directly:
    // element(λ, g, i) = r̂_λ · g · q̂_i.
    let r_hat: Vec<usize> = (0..lambda_classes.len())
        .map(|lam| s.multiply(r[lam], inv_global(raw(0, lam))))
        .collect();
    let q_hat: Vec<usize> = (0..i_classes.len())
        .map(|i| s.multiply(inv_global(raw(i, 0)), q[i]))
        .collect();

    let spec = ReesSpec::new(
        group.clone(),
        lambda_classes.len(),
        i_classes.len(),
        sandwich,
    )?;

    let mut labels = vec![None; n];
    for lam in 0..spec.lambda_size() {
        for g in 0..group.order() {
            for i in 0..spec.i_size() {
                let elem = s.multiply(s.multiply(r_hat[lam], h_global[g]), q_hat[i]);
                assert!(
                    labels[elem].is_none(),
                    "coordinate map must be injective"
                );
                labels[elem] = Some(ReesTriple { lambda: lam, g, i });
            }
        }
    }
    let labels: Vec<ReesTriple> = labels
        .into_iter()
        .map(|l| l.expect("coordinate map must be surjective"))
        .collect();

    // Verify the isomorphism pointwise against the Rees product formula.
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (labels[a], labels[b]);
            let mid = group.multiply(
                group.multiply(x.g, spec.sandwich()[x.i][y.lambda]),
                y.g,
            );
            let expected = ReesTriple {
                lambda: x.lambda,
                g: mid,
                i: y.i,
            };
            assert_eq!(
                labels[s.multiply(a, b)],
                expected,
                "labels must transport multiplication to the Rees formula"
            );
        }
    }

    let labeled = LabeledSemigroup::new(s.clone(), labels).expect("bijection verified above");
    Ok((spec, labeled))
}

fn partition_with_first(
    n: usize,
    first_member: usize,
    key: impl Fn(usize) -> BTreeSet<usize>,
) -> Vec<Vec<usize>> {
    let keys: Vec<BTreeSet<usize>> = (0..n).map(&key).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<&BTreeSet<usize>> = Vec::new();
    for a in 0..n {
        match seen.iter().position(|k| **k == keys[a]) {
            Some(c) => classes[c].push(a),
            None => {
                seen.push(&keys[a]);
                classes.push(vec![a]);
            }
        }
    }
    // e's class first, remaining classes by smallest member (construction
    // order already sorts members ascending within a class).
    let first_class = classes
        .iter()
        .position(|c| c.contains(&first_member))
        .expect("every element lies in a class");
    classes.swap(0, first_class);
    classes[1..].sort_by_key(|c| c[0]);
    classes
}

fn class_index(n: usize, classes: &[Vec<usize>]) -> Vec<usize> {
    let mut index = vec![usize::MAX; n];
    for (c, members) in classes.iter().enumerate() {
        for &m in members {
            index[m] = c;
        }
    }
    index
}

/// Independent rectangular-band criterion: the idempotents form a
/// subsemigroup (every product of idempotents is idempotent).
pub fn idempotents_closed(s: &Semigroup) -> bool {
    let idem = s.idempotents().members;
    idem.iter().all(|&a| {
        idem.iter().all(|&b| {
            let p = s.multiply(a, b);
            s.multiply(p, p) == p
        })
    })
}

/// True iff `s` is simple and its coordinatization has an all-identity
/// normalized sandwich matrix. Cross-checked on every call against the
/// independent idempotent-closure criterion; disagreement would be an
/// implementation bug, not a property of the input.
pub fn is_rectangular_band_of_groups(s: &Semigroup) -> bool {
    if !s.is_simple() {
        return false;
    }
    let (spec, _) = coordinatize_simple(s).expect("simplicity checked above");
    let identity = spec.group().identity();
    let by_sandwich = spec
        .sandwich()
        .iter()
        .all(|row| row.iter().all(|&p| p == identity));
    let by_closure = idempotents_closed(s);
    assert_eq!(
        by_sandwich, by_closure,
        "sandwich and idempotent-closure criteria must agree on simple semigroups"
    );
    by_sandwich
}
