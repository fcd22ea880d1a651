//! Benchmark inputs shared by the criterion targets.

use eqposet_core::{EquippedPoset, Point};

/// Chain `0 < a1 <^1 a2 <^1 ... < m` of `k` weak points.
pub fn weak_chain(p: u32, k: usize) -> EquippedPoset {
    let mut points = vec![Point::strong("0")];
    points.extend((1..=k).map(|i| Point::weak(format!("a{i}"))));
    points.push(Point::strong("m"));
    let n = points.len();
    let mut rels = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let l = if x == 0 || y == n - 1 { p } else { 1 };
            rels.push((x, y, l));
        }
    }
    EquippedPoset::new(p, points, &rels)
}
