//! Exhaustive generation of all associative multiplication tables of a
//! given small order.

use crate::algebra::{canonical_table, CayleyTable, Semigroup};
use crate::error::{BudgetKind, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every associative table exactly once (distinct labelings counted
    /// separately). Orders 1..4 give 1, 8, 113, 3492 tables.
    Labeled,
    /// Only canonical representatives: tables equal to the minimum of their
    /// relabeling orbit. Orders 1..4 give 1, 5, 24, 188 tables.
    UpToIsomorphism,
}

const UNSET: usize = usize::MAX;

/// Emits every associative table of order `n` in lexicographic order of the
/// flattened table, by filling cells row-major and pruning each partial
/// table against every fully determined associativity triple.
pub fn enumerate_semigroups(
    n: usize,
    mode: EnumerationMode,
    max_order: usize,
) -> Result<Vec<Semigroup>> {
    if n > max_order {
        return Err(Error::BudgetExceeded {
            kind: BudgetKind::Order,
            value: n,
            max: max_order,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut cells = vec![UNSET; n * n];
    fill(n, &mut cells, 0, &mut out);
    if mode == EnumerationMode::UpToIsomorphism {
        out.retain(|s| canonical_table(s.cayley()) == s.cayley().entries());
    }
    Ok(out)
}

/// Labeled enumeration restricted to tables whose first row is `first_row`;
/// the partition over all n^n first rows is disjoint and covers everything,
/// which is what the survey parallelizes over.
pub fn enumerate_with_first_row(
    n: usize,
    first_row: &[usize],
    max_order: usize,
) -> Result<Vec<Semigroup>> {
    if n > max_order {
        return Err(Error::BudgetExceeded {
            kind: BudgetKind::Order,
            value: n,
            max: max_order,
        });
    }
    assert_eq!(first_row.len(), n, "first row must have n entries");
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut cells = vec![UNSET; n * n];
    for (col, &v) in first_row.iter().enumerate() {
        assert!(v < n, "first row entry out of range");
        cells[col] = v;
    }
    if consistent(n, &cells) {
        fill(n, &mut cells, n, &mut out);
    }
    Ok(out)
}

fn fill(n: usize, cells: &mut Vec<usize>, pos: usize, out: &mut Vec<Semigroup>) {
    if pos == n * n {
        let table = CayleyTable::new(n, cells.clone()).expect("entries are in range");
        let s = Semigroup::from_table(table).expect("all triples were checked");
        out.push(s);
        return;
    }
    for v in 0..n {
        cells[pos] = v;
        if consistent(n, cells) {
            fill(n, cells, pos + 1, out);
        }
    }
    cells[pos] = UNSET;
}

/// True when no fully determined triple violates associativity. Scanning
/// all n³ triples at every node is crude but plenty for orders ≤ 5.
fn consistent(n: usize, cells: &[usize]) -> bool {
    let at = |x: usize, y: usize| cells[x * n + y];
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if ab != UNSET {
                    let left = at(ab, c);
                    let bc = at(b, c);
                    if left != UNSET && bc != UNSET {
                        let right = at(a, bc);
                        if right != UNSET && left != right {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
