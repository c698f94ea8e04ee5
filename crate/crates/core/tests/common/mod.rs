#![allow(dead_code)]

use cloops::fixtures;
use cloops::magma::{as_loop, CayleyTable, LoopStructure};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every `(U, V, W)` in `S_n³` satisfying `xU·yV = (xy)W`, found by checking
/// all triples. Independent of the pinned-value search in the library.
pub fn naive_autotopisms(l: &LoopStructure) -> Vec<[Vec<usize>; 3]> {
    let n = l.order();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut out = Vec::new();
    for u in &perms {
        for v in &perms {
            for w in &perms {
                let ok = (0..n).all(|x| (0..n).all(|y| l.mul(u[x], v[y]) == w[l.mul(x, y)]));
                if ok {
                    out.push([u.clone(), v.clone(), w.clone()]);
                }
            }
        }
    }
    out.sort();
    out
}

/// Random Latin square of order `n` by randomized backtracking over cells.
pub fn random_latin_square<R: Rng>(n: usize, rng: &mut R) -> CayleyTable {
    fn fill<R: Rng>(cells: &mut Vec<usize>, n: usize, k: usize, rng: &mut R) -> bool {
        if k == n * n {
            return true;
        }
        let (r, c) = (k / n, k % n);
        let mut candidates: Vec<usize> = (0..n)
            .filter(|&v| (0..c).all(|j| cells[r * n + j] != v) && (0..r).all(|i| cells[i * n + c] != v))
            .collect();
        candidates.shuffle(rng);
        for v in candidates {
            cells[k] = v;
            if fill(cells, n, k + 1, rng) {
                return true;
            }
        }
        false
    }
    let mut cells = vec![0; n * n];
    assert!(fill(&mut cells, n, 0, rng));
    let rows: Vec<Vec<usize>> = cells.chunks(n).map(|c| c.to_vec()).collect();
    CayleyTable::from_rows(&rows).expect("backtracking yields a Latin square")
}

/// Named C-loops: the order-12 fixture and the group fixtures.
pub fn c_loop_fixtures() -> Vec<(String, LoopStructure)> {
    let mut v = vec![("table1".to_string(), fixtures::table1_loop())];
    for (name, t) in fixtures::small_groups() {
        v.push((name.to_string(), as_loop(t).unwrap()));
    }
    v
}

pub fn named(name: &str) -> LoopStructure {
    let t = match name {
        "table1" => fixtures::table1(),
        "Z2xZ2" => fixtures::elementary_abelian(2),
        "Z2xZ2xZ2" => fixtures::elementary_abelian(3),
        "S3" => fixtures::symmetric3(),
        z => fixtures::cyclic(z[1..].parse().unwrap()),
    };
    as_loop(t).unwrap()
}
