use crate::algebra::{CayleyTable, Semigroup};
use itertools::Itertools;

/// Searches for an isomorphism `s → t`, returned as the image vector
/// (element a of `s` maps to `map[a]` in `t`). Backtracking over images with
/// partial product checks; fine for the small orders this crate targets.
pub fn find_isomorphism(s: &Semigroup, t: &Semigroup) -> Option<Vec<usize>> {
    if s.order() != t.order() {
        return None;
    }
    let n = s.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(s, t, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

fn extend(s: &Semigroup, t: &Semigroup, map: &mut [usize], used: &mut [bool], next: usize) -> bool {
    let n = s.order();
    if next == n {
        return true;
    }
    'candidate: for image in 0..n {
        if used[image] {
            continue;
        }
        map[next] = image;
        used[image] = true;
        // Check every product whose factors and result are all mapped; a
        // product not yet mapped is deferred to the depth that assigns it.
        for a in 0..=next {
            for b in 0..=next {
                let p = s.multiply(a, b);
                if p <= next && t.multiply(map[a], map[b]) != map[p] {
                    used[image] = false;
                    map[next] = usize::MAX;
                    continue 'candidate;
                }
            }
        }
        if extend(s, t, map, used, next + 1) {
            return true;
        }
        used[image] = false;
        map[next] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(s: &Semigroup, t: &Semigroup) -> bool {
    find_isomorphism(s, t).is_some()
}

/// The lexicographically least flattened table among all relabelings of `t`.
/// Two tables are isomorphic iff their canonical tables coincide.
pub fn canonical_table(t: &CayleyTable) -> Vec<usize> {
    let n = t.order();
    let mut best: Option<Vec<usize>> = None;
    for perm in (0..n).permutations(n) {
        // perm maps old id -> new id; relabeled(x,y) = perm[t(old x, old y)]
        // where old = perm⁻¹(new).
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut flat = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                flat.push(perm[t.get(inv[x], inv[y])]);
            }
        }
        if best.as_ref().map_or(true, |b| flat < *b) {
            best = Some(flat);
        }
    }
    best.expect("order is positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn isomorphism_ignores_labeling() {
        let z4 = samples::cyclic(4);
        // Z4 with elements relabeled by the permutation 0→0,1→2,2→1,3→3.
        let relabel = [0usize, 2, 1, 3];
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|a| {
                (0..4)
                    .map(|b| {
                        let (oa, ob) = (relabel.iter().position(|&x| x == a).unwrap(),
                                        relabel.iter().position(|&x| x == b).unwrap());
                        relabel[z4.multiply(oa, ob)]
                    })
                    .collect()
            })
            .collect();
        let shuffled = Semigroup::from_rows(&rows).unwrap();
        assert!(are_isomorphic(&z4, &shuffled));
        assert!(!are_isomorphic(&z4, &samples::klein4()));
    }

    #[test]
    fn canonical_table_separates_iso_classes() {
        let lz = samples::left_zero(2);
        let rz = samples::right_zero(2);
        assert_ne!(canonical_table(lz.cayley()), canonical_table(rz.cayley()));
        assert_eq!(
            canonical_table(samples::cyclic(2).cayley()),
            canonical_table(samples::cyclic(2).cayley())
        );
    }

    #[test]
    fn isomorphism_maps_products() {
        let s3 = samples::symmetric3();
        let map = find_isomorphism(&s3, &s3).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(map[s3.multiply(a, b)], s3.multiply(map[a], map[b]));
            }
        }
    }
}
