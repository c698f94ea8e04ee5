//! Small loops and designs used by the tests, the CLI demo and the Python
//! bindings.

use crate::magma::{CayleyTable, LoopStructure};

/// Non-associative C-loop of order 12 with identity 0.
pub const TABLE1: [[usize; 12]; 12] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    [1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9],
    [2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10],
    [3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8],
    [4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6],
    [5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7],
    [6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4],
    [7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5],
    [8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3],
    [9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1],
    [10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2],
    [11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0],
];

/// A non-associative loop of order 5 that is neither alternative nor central.
pub const ORDER5_NONASSOCIATIVE: [[usize; 5]; 5] = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
];

/// The Fano plane on points `0..7`.
pub const FANO: [[usize; 3]; 7] = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2]];

pub fn table1() -> CayleyTable {
    CayleyTable::from_rows(&TABLE1).expect("fixture is Latin")
}

pub fn table1_loop() -> LoopStructure {
    LoopStructure::new(table1()).expect("fixture has identity 0")
}

pub fn order5_nonassociative() -> CayleyTable {
    CayleyTable::from_rows(&ORDER5_NONASSOCIATIVE).expect("fixture is Latin")
}

/// `Z_n` under addition.
pub fn cyclic(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |x, y| (x + y) % n).expect("cyclic group")
}

/// Direct product; the pair `(a, b)` is encoded as `a * |B| + b`.
pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
    let m = b.order();
    CayleyTable::from_fn(a.order() * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).expect("product of Latin squares")
}

/// `(Z_2)^k`, i.e. bitwise xor on `0..2^k`.
pub fn elementary_abelian(k: u32) -> CayleyTable {
    CayleyTable::from_fn(1 << k, |x, y| x ^ y).expect("xor table")
}

/// The symmetric group S_3 as a Cayley table, elements in lexicographic order
/// of their image sequences, composition acting on the right.
pub fn symmetric3() -> CayleyTable {
    use itertools::Itertools;
    let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    CayleyTable::from_fn(6, |x, y| {
        let c: Vec<usize> = perms[x].iter().map(|&i| perms[y][i]).collect();
        index(&c)
    })
    .expect("group table")
}

/// Groups of order at most 8 used as fixtures: every abelian group of those
/// orders plus S_3.
pub fn small_groups() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("Z1", cyclic(1)),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", elementary_abelian(2)),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
        ("Z7", cyclic(7)),
        ("Z8", cyclic(8)),
        ("Z2xZ4", direct_product(&cyclic(2), &cyclic(4))),
        ("Z2xZ2xZ2", elementary_abelian(3)),
    ]
}

/// Lines of the affine plane AG(2,3): points `3a + b` for `(a, b)` in `Z_3²`,
/// three points collinear iff they sum to zero componentwise.
pub fn affine_plane_3() -> Vec<[usize; 3]> {
    let mut lines = Vec::new();
    for p in 0..9 {
        for q in p + 1..9 {
            let r = 3 * ((6 - p / 3 - q / 3) % 3) + (6 - p % 3 - q % 3) % 3;
            if r > q {
                lines.push([p, q, r]);
            }
        }
    }
    lines
}

/// The Steiner loop of a Steiner triple system on `points` points: identity
/// `0`, point `i` becomes element `i + 1`, `x·x = e`, and `x·y` is the third
/// point of the triple through `x` and `y`.
pub fn steiner_loop(points: usize, triples: &[[usize; 3]]) -> CayleyTable {
    let n = points + 1;
    let mut third = vec![vec![0; n]; n];
    for &[a, b, c] in triples {
        for (p, q, r) in [(a, b, c), (b, a, c), (a, c, b), (c, a, b), (b, c, a), (c, b, a)] {
            third[p + 1][q + 1] = r + 1;
        }
    }
    CayleyTable::from_fn(n, |x, y| match (x, y) {
        (0, y) => y,
        (x, 0) => x,
        (x, y) if x == y => 0,
        (x, y) => third[x][y],
    })
    .expect("triple system gives a Latin square")
}

/// The non-associative Steiner loop of order 10 built on AG(2,3).
pub fn steiner10() -> CayleyTable {
    steiner_loop(9, &affine_plane_3())
}
