//! Exhaustive enumeration of small bounded equipped posets.
//!
//! Interior posets are generated naturally labelled (every relation goes
//! from a lower to a higher index), which reaches every isomorphism class,
//! possibly several times.

use crate::poset::{augment, compose, EquippedPoset, Point, Strength};

/// Transitively closed relation sets on `k` naturally labelled points, as
/// adjacency matrices `rel[i][j]` for `i < j`.
pub fn natural_orders(k: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rel = vec![vec![false; k]; k];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = mask >> bit & 1 == 1;
        }
        let closed = (0..k)
            .all(|i| (i + 1..k).all(|j| !rel[i][j] || (j + 1..k).all(|l| !rel[j][l] || rel[i][l])));
        if closed {
            out.push(rel);
        }
    }
    out
}

/// Every valid bounded equipped poset whose interior has exactly `k` points.
pub fn bounded_posets(p: u32, k: usize) -> Vec<EquippedPoset> {
    let mut out = Vec::new();
    for rel in natural_orders(k) {
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| rel[i][j])
            .collect();
        for smask in 0u32..(1 << k) {
            let strengths: Vec<Strength> = (0..k)
                .map(|i| {
                    if smask >> i & 1 == 1 {
                        Strength::Strong
                    } else {
                        Strength::Weak
                    }
                })
                .collect();
            let free: Vec<usize> = (0..pairs.len())
                .filter(|&e| {
                    let (i, j) = pairs[e];
                    strengths[i] == Strength::Weak && strengths[j] == Strength::Weak
                })
                .collect();
            let mut ell = vec![p; pairs.len()];
            let mut counter = vec![1u32; free.len()];
            loop {
                for (slot, &e) in free.iter().enumerate() {
                    ell[e] = counter[slot];
                }
                if satisfies_axiom(p, k, &pairs, &ell) {
                    let points = (0..k)
                        .map(|i| Point::new(interior_name(i), strengths[i]))
                        .collect();
                    let rels: Vec<_> = pairs
                        .iter()
                        .zip(&ell)
                        .map(|(&(i, j), &l)| (i, j, l))
                        .collect();
                    let interior = EquippedPoset::new(p, points, &rels);
                    out.push(augment(&interior).expect("interior names avoid the bounds"));
                }
                if !advance(&mut counter, p) {
                    break;
                }
            }
        }
    }
    out
}

/// All bounded posets with at most `max_interior` interior points.
pub fn bounded_posets_up_to(p: u32, max_interior: usize) -> Vec<EquippedPoset> {
    (0..=max_interior)
        .flat_map(|k| bounded_posets(p, k))
        .collect()
}

fn interior_name(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

fn advance(counter: &mut [u32], p: u32) -> bool {
    for c in counter.iter_mut() {
        if *c < p {
            *c += 1;
            return true;
        }
        *c = 1;
    }
    false
}

fn satisfies_axiom(p: u32, k: usize, pairs: &[(usize, usize)], ell: &[u32]) -> bool {
    let mut table = vec![vec![0u32; k]; k];
    for (&(i, j), &l) in pairs.iter().zip(ell) {
        table[i][j] = l;
    }
    // Chains through the strong bounds never violate the axiom.
    for x in 0..k {
        for y in x + 1..k {
            if table[x][y] == 0 {
                continue;
            }
            for z in y + 1..k {
                if table[y][z] != 0 && table[x][z] < compose(p, table[x][y], table[y][z]) {
                    return false;
                }
            }
        }
    }
    true
}
