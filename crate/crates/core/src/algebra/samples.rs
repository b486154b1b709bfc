//! Ready-made small semigroups used across the test suites and handy as CLI
//! fixtures. All constructors panic-free: every table here is associative.

use crate::algebra::Semigroup;

/// The one-element semigroup.
pub fn trivial() -> Semigroup {
    Semigroup::from_rows(&[vec![0]]).unwrap()
}

/// Two-element meet semilattice: x·y = min(x, y).
pub fn min2() -> Semigroup {
    min_chain(2)
}

/// n-element chain under min.
pub fn min_chain(n: usize) -> Semigroup {
    table(n, |a, b| a.min(b))
}

/// Left-zero semigroup: x·y = x.
pub fn left_zero(n: usize) -> Semigroup {
    table(n, |a, _| a)
}

/// Right-zero semigroup: x·y = y.
pub fn right_zero(n: usize) -> Semigroup {
    table(n, |_, b| b)
}

/// Null semigroup: every product is 0.
pub fn null(n: usize) -> Semigroup {
    table(n, |_, _| 0)
}

/// Cyclic group Z_n under addition, identity 0.
pub fn cyclic(n: usize) -> Semigroup {
    table(n, |a, b| (a + b) % n)
}

/// Klein four-group: xor on two bits, identity 0.
pub fn klein4() -> Semigroup {
    table(4, |a, b| a ^ b)
}

/// Symmetric group on three points. Element ids enumerate the permutations
/// of [0,1,2] in lexicographic order; multiplication is composition,
/// (f·g)(x) = f(g(x)). Identity is id 0.
pub fn symmetric3() -> Semigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    table(6, |a, b| {
        let (f, g) = (perms[a], perms[b]);
        index([f[g[0]], f[g[1]], f[g[2]]])
    })
}

/// Rectangular band on rows × cols: (r,c)·(r',c') = (r,c'). Element id of
/// (r,c) is r·cols + c.
pub fn rectangular_band(rows: usize, cols: usize) -> Semigroup {
    table(rows * cols, |a, b| (a / cols) * cols + (b % cols))
}

/// Three-element homogroup: Z2 = {0,1} as kernel plus an element t=2 with
/// t·t = 0 and t acting as identity on the kernel. Kernel identity 0 is
/// central, and Ker = Red = {0,1}.
pub fn homogroup3() -> Semigroup {
    Semigroup::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap()
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Semigroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
    Semigroup::from_rows(&rows).unwrap()
}
