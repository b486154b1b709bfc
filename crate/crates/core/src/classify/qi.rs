//! The two quasi-identity checks that decide whether direct powers of a
//! finite semigroup stay equationally well-behaved.
//!
//! Left form: for all a, b, α, β: aα = aβ implies bα = bβ.
//! Right form: for all a, b, α, β: αa = βa implies αb = βb.

use crate::algebra::Semigroup;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QiSide {
    Left,
    Right,
}

/// A failing quadruple. `products` holds the four products in check order:
/// left side (aα, aβ, bα, bβ), right side (αa, βa, αb, βb). The first two
/// are equal, the last two differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QiWitness {
    pub a: usize,
    pub b: usize,
    pub alpha: usize,
    pub beta: usize,
    pub products: [usize; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QiResult {
    pub side: QiSide,
    pub holds: bool,
    pub witness: Option<QiWitness>,
}

impl QiResult {
    fn holding(side: QiSide) -> Self {
        QiResult {
            side,
            holds: true,
            witness: None,
        }
    }
}

/// Scan order, shared by both sides so witnesses are canonical: pairs
/// (α, β) ascending lexicographically with α ≠ β, then the first a making
/// the premise true, then the first b breaking the conclusion.
fn scan(s: &Semigroup, side: QiSide) -> QiResult {
    let n = s.order();
    let prod = |x: usize, y: usize| match side {
        QiSide::Left => s.multiply(x, y),
        QiSide::Right => s.multiply(y, x),
    };
    // prod(m, x) is "multiplier m applied to x": a·x for the left form,
    // x·a for the right form.
    for alpha in 0..n {
        for beta in 0..n {
            if alpha == beta {
                continue;
            }
            for a in 0..n {
                if prod(a, alpha) != prod(a, beta) {
                    continue;
                }
                for b in 0..n {
                    if prod(b, alpha) != prod(b, beta) {
                        return QiResult {
                            side,
                            holds: false,
                            witness: Some(QiWitness {
                                a,
                                b,
                                alpha,
                                beta,
                                products: [
                                    prod(a, alpha),
                                    prod(a, beta),
                                    prod(b, alpha),
                                    prod(b, beta),
                                ],
                            }),
                        };
                    }
                }
                // Premise held and every b passed; the b-check does not
                // depend on a, so no other a can fail this pair either.
                break;
            }
        }
    }
    QiResult::holding(side)
}

pub fn check_left_qi(s: &Semigroup) -> QiResult {
    scan(s, QiSide::Left)
}

pub fn check_right_qi(s: &Semigroup) -> QiResult {
    scan(s, QiSide::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;
    use crate::algebra::Semigroup;

    #[test]
    fn groups_pass_both_sides() {
        for s in [
            samples::trivial(),
            samples::cyclic(2),
            samples::cyclic(3),
            samples::cyclic(4),
            samples::cyclic(5),
            samples::cyclic(6),
            samples::klein4(),
            samples::symmetric3(),
        ] {
            assert!(check_left_qi(&s).holds);
            assert!(check_right_qi(&s).holds);
        }
    }

    #[test]
    fn min2_fails_with_the_canonical_witness() {
        let r = check_left_qi(&samples::min2());
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((w.a, w.b, w.alpha, w.beta), (0, 1, 0, 1));
        assert_eq!(w.products, [0, 0, 0, 1]);
        // Commutative, so the right side fails with the mirrored (equal)
        // witness in the same slot order.
        let r = check_right_qi(&samples::min2());
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((w.a, w.b, w.alpha, w.beta), (0, 1, 0, 1));
        assert_eq!(w.products, [0, 0, 0, 1]);
    }

    #[test]
    fn one_sided_collapse_semigroups_pass() {
        // LZ2 (xy = x): left premise always true and conclusion always
        // true; right premise αa = βa forces α = β. RZ2 mirrors.
        let lz = samples::left_zero(2);
        assert!(check_left_qi(&lz).holds);
        assert!(check_right_qi(&lz).holds);
        let rz = samples::right_zero(2);
        assert!(check_left_qi(&rz).holds);
        assert!(check_right_qi(&rz).holds);
    }

    #[test]
    fn rectangular_bands_pass() {
        for (rows, cols) in [(1, 1), (1, 3), (2, 2), (2, 3)] {
            let rb = samples::rectangular_band(rows, cols);
            assert!(check_left_qi(&rb).holds, "RB({rows},{cols}) left");
            assert!(check_right_qi(&rb).holds, "RB({rows},{cols}) right");
        }
    }

    #[test]
    fn witness_invariants_hold_on_every_failing_order_two_table() {
        // Brute-force oracle: for each of the 8 order-2 semigroups, compare
        // the scan verdict against direct quantifier evaluation.
        for bits in 0..16u32 {
            let rows = vec![
                vec![(bits & 1) as usize, ((bits >> 1) & 1) as usize],
                vec![((bits >> 2) & 1) as usize, ((bits >> 3) & 1) as usize],
            ];
            let Ok(s) = Semigroup::from_rows(&rows) else {
                continue;
            };
            let oracle_left = (0..2).all(|alpha| {
                (0..2).all(|beta| {
                    (0..2).all(|a| {
                        s.multiply(a, alpha) != s.multiply(a, beta)
                            || (0..2).all(|b| s.multiply(b, alpha) == s.multiply(b, beta))
                    })
                })
            });
            let r = check_left_qi(&s);
            assert_eq!(r.holds, oracle_left);
            if let Some(w) = r.witness {
                assert_eq!(s.multiply(w.a, w.alpha), s.multiply(w.a, w.beta));
                assert_ne!(s.multiply(w.b, w.alpha), s.multiply(w.b, w.beta));
            }
        }
    }
}
