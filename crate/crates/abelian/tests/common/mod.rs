#![allow(dead_code)]

use abelian_complex::Cell;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weyl_core::{AbGroup, GroupElement};

pub fn random_element(rng: &mut ChaCha8Rng, group: &AbGroup) -> GroupElement {
    let mut coords = Vec::with_capacity(group.ngens());
    for _ in 0..group.free_rank() {
        coords.push(rng.gen_range(-2..=2));
    }
    for &m in group.torsion() {
        coords.push(rng.gen_range(0..m as i64));
    }
    group.element(coords).unwrap()
}

/// Uniformly chosen feasible shape, then random elements.
pub fn random_cell(rng: &mut ChaCha8Rng, group: &AbGroup, k: usize, n: usize) -> Cell {
    let mut options: Vec<(usize, usize)> = vec![(0, 1)];
    for j in 1..=k {
        for p in 2..=n {
            if n >= (p - 1) * j + p {
                options.push((j, p));
            }
        }
    }
    let (j, p) = options[rng.gen_range(0..options.len())];
    if j == 0 {
        return Cell::bar((0..n).map(|_| random_element(rng, group)).collect());
    }
    let budget = n - (p - 1) * j;
    // random composition of budget into p positive parts
    let mut cuts: Vec<usize> = Vec::new();
    while cuts.len() < p - 1 {
        let c = rng.gen_range(1..budget);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(p);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(budget)) {
        sizes.push(c - prev);
        prev = c;
    }
    let parts = sizes.into_iter().map(|s| random_cell(rng, group, j - 1, s)).collect();
    Cell::join(j, parts).unwrap()
}

pub fn groups() -> Vec<AbGroup> {
    ["Z/2", "Z/3", "Z/2xZ/2", "Z^4"].iter().map(|g| AbGroup::parse(g).unwrap()).collect()
}

/// All compositions of `d`.
pub fn compositions(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=d {
        for mut rest in compositions(d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
