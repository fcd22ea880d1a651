//! Equipped posets.
//!
//! Every comparable pair `x <= y` carries an equipment value `ell` in `1..=p`.
//! A valid poset satisfies the composition axiom
//! `ell(x, z) >= min(ell(x, y) + ell(y, z) - 1, p)` for every chain
//! `x <= y <= z`, every relation touching a strong point has `ell = p`, and
//! the first and last points are a strong minimum and a strong maximum.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type PointId = usize;

/// Name given to the minimum adjoined by [`augment`].
pub const ZERO_NAME: &str = "0";
/// Name given to the maximum adjoined by [`augment`].
pub const TOP_NAME: &str = "m";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Weak,
    Strong,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::Weak => f.write_str("weak"),
            Strength::Strong => f.write_str("strong"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub name: String,
    pub strength: Strength,
}

impl Point {
    pub fn new(name: impl Into<String>, strength: Strength) -> Self {
        Point {
            name: name.into(),
            strength,
        }
    }

    pub fn weak(name: impl Into<String>) -> Self {
        Point::new(name, Strength::Weak)
    }

    pub fn strong(name: impl Into<String>) -> Self {
        Point::new(name, Strength::Strong)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquippedPoset {
    p: u32,
    points: Vec<Point>,
    /// `ell[x][y]` is the equipment of `x <= y`, 0 when `x` is not below `y`.
    ell: Vec<Vec<u32>>,
}

impl EquippedPoset {
    /// Builds a poset from an explicit relation list. Reflexive values are
    /// filled in from the strengths unless listed. Nothing is validated.
    pub fn new(p: u32, points: Vec<Point>, relations: &[(PointId, PointId, u32)]) -> Self {
        let n = points.len();
        let mut ell = vec![vec![0; n]; n];
        for (x, point) in points.iter().enumerate() {
            ell[x][x] = match point.strength {
                Strength::Weak => 1,
                Strength::Strong => p,
            };
        }
        for &(x, y, l) in relations {
            ell[x][y] = l;
        }
        EquippedPoset { p, points, ell }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn name(&self, x: PointId) -> &str {
        &self.points[x].name
    }

    pub fn strength(&self, x: PointId) -> Strength {
        self.points[x].strength
    }

    pub fn strengths(&self) -> Vec<Strength> {
        self.points.iter().map(|pt| pt.strength).collect()
    }

    pub fn is_weak(&self, x: PointId) -> bool {
        self.strength(x) == Strength::Weak
    }

    pub fn is_strong(&self, x: PointId) -> bool {
        self.strength(x) == Strength::Strong
    }

    pub fn index_of(&self, name: &str) -> Option<PointId> {
        self.points.iter().position(|pt| pt.name == name)
    }

    /// The equipment of `x <= y`, if the points are comparable that way.
    pub fn ell(&self, x: PointId, y: PointId) -> Option<u32> {
        match self.ell[x][y] {
            0 => None,
            l => Some(l),
        }
    }

    pub fn raw_ell(&self, x: PointId, y: PointId) -> u32 {
        self.ell[x][y]
    }

    pub fn leq(&self, x: PointId, y: PointId) -> bool {
        self.ell[x][y] != 0
    }

    pub fn lt(&self, x: PointId, y: PointId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn zero(&self) -> PointId {
        0
    }

    pub fn top(&self) -> PointId {
        self.len() - 1
    }

    /// Non-reflexive relations `(x, y, ell)` in index order.
    pub fn relations(&self) -> Vec<(PointId, PointId, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.ell[x][y] != 0 {
                    out.push((x, y, self.ell[x][y]));
                }
            }
        }
        out
    }

    /// Overwrites one equipment value; 0 removes the relation.
    pub fn set_ell(&mut self, x: PointId, y: PointId, l: u32) {
        self.ell[x][y] = l;
    }

    /// Covering pairs `x < y` with nothing strictly between them.
    pub fn covers(&self) -> Vec<(PointId, PointId)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Points above `x` including `x`, in index order.
    pub fn up_set(&self, x: PointId) -> Vec<PointId> {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// Same poset with points permuted so that `order[k]` becomes point `k`.
    pub fn reordered(&self, order: &[PointId]) -> EquippedPoset {
        let points = order.iter().map(|&x| self.points[x].clone()).collect();
        let n = order.len();
        let mut ell = vec![vec![0; n]; n];
        for (a, &x) in order.iter().enumerate() {
            for (b, &y) in order.iter().enumerate() {
                ell[a][b] = self.ell[x][y];
            }
        }
        EquippedPoset {
            p: self.p,
            points,
            ell,
        }
    }

    /// Moves points named [`ZERO_NAME`] and [`TOP_NAME`] to the ends.
    pub fn with_named_bounds_at_ends(&self) -> EquippedPoset {
        let zero = self.index_of(ZERO_NAME);
        let top = self.index_of(TOP_NAME);
        let mut order = Vec::with_capacity(self.len());
        order.extend(zero);
        order.extend((0..self.len()).filter(|&x| Some(x) != zero && Some(x) != top));
        order.extend(top);
        self.reordered(&order)
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Combined equipment of a two-step chain.
pub fn compose(p: u32, l: u32, m: u32) -> u32 {
    (l + m - 1).min(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotPrime {
        p: u32,
    },
    TooFewPoints {
        len: usize,
    },
    EllOutOfRange {
        x: PointId,
        y: PointId,
        ell: u32,
    },
    Reflexive {
        x: PointId,
        ell: u32,
    },
    Antisymmetry {
        x: PointId,
        y: PointId,
    },
    Transitivity {
        x: PointId,
        y: PointId,
        z: PointId,
    },
    StrongRelation {
        x: PointId,
        y: PointId,
        ell: u32,
    },
    Axiom {
        x: PointId,
        y: PointId,
        z: PointId,
        l: u32,
        m: u32,
        n: u32,
    },
    BoundNotStrong {
        x: PointId,
    },
    NotMinimum {
        x: PointId,
        witness: PointId,
    },
    NotMaximum {
        x: PointId,
        witness: PointId,
    },
}

impl Violation {
    pub fn describe(&self, poset: &EquippedPoset) -> String {
        let nm = |x: PointId| poset.name(x).to_string();
        let p = poset.p();
        match *self {
            Violation::NotPrime { p } => format!("p = {p} is not prime"),
            Violation::TooFewPoints { len } => {
                format!("a bounded poset needs distinct 0 and m, found {len} point(s)")
            }
            Violation::EllOutOfRange { x, y, ell } => {
                format!("{} <= {}: ell = {ell} outside 1..={p}", nm(x), nm(y))
            }
            Violation::Reflexive { x, ell } => format!(
                "{} <= {}: reflexive ell = {ell} does not match its strength",
                nm(x),
                nm(x)
            ),
            Violation::Antisymmetry { x, y } => {
                format!("{} <= {} and {} <= {}", nm(x), nm(y), nm(y), nm(x))
            }
            Violation::Transitivity { x, y, z } => format!(
                "{} <= {} <= {} but not {} <= {}",
                nm(x),
                nm(y),
                nm(z),
                nm(x),
                nm(z)
            ),
            Violation::StrongRelation { x, y, ell } => format!(
                "{} <= {}: relation touching a strong point must have ell = {p}, found {ell}",
                nm(x),
                nm(y)
            ),
            Violation::Axiom { x, y, z, l, m, n } => format!(
                "{} <=^{l} {} <=^{m} {} with {} <=^{n} {}: need ell >= {}",
                nm(x),
                nm(y),
                nm(z),
                nm(x),
                nm(z),
                compose(p, l, m)
            ),
            Violation::BoundNotStrong { x } => format!("bound {} must be strong", nm(x)),
            Violation::NotMinimum { x, witness } => {
                format!("first point {} is not below {}", nm(x), nm(witness))
            }
            Violation::NotMaximum { x, witness } => {
                format!("last point {} is not above {}", nm(x), nm(witness))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn lines(&self, poset: &EquippedPoset) -> Vec<String> {
        self.violations.iter().map(|v| v.describe(poset)).collect()
    }
}

pub fn validate(poset: &EquippedPoset) -> ValidationReport {
    let mut out = Vec::new();
    let p = poset.p;
    let n = poset.len();
    if !is_prime(p) {
        out.push(Violation::NotPrime { p });
    }
    for x in 0..n {
        let want = if poset.is_strong(x) { p } else { 1 };
        if poset.ell[x][x] != want {
            out.push(Violation::Reflexive {
                x,
                ell: poset.ell[x][x],
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x == y || !poset.leq(x, y) {
                continue;
            }
            let l = poset.ell[x][y];
            if l > p {
                out.push(Violation::EllOutOfRange { x, y, ell: l });
            }
            if x < y && poset.leq(y, x) {
                out.push(Violation::Antisymmetry { x, y });
            }
            if (poset.is_strong(x) || poset.is_strong(y)) && l != p {
                out.push(Violation::StrongRelation { x, y, ell: l });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x == y || !poset.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if z == y || z == x || !poset.leq(y, z) {
                    continue;
                }
                match poset.ell(x, z) {
                    None => out.push(Violation::Transitivity { x, y, z }),
                    Some(nz) => {
                        let (l, m) = (poset.ell[x][y], poset.ell[y][z]);
                        if l <= p && m <= p && nz < compose(p, l, m) {
                            out.push(Violation::Axiom {
                                x,
                                y,
                                z,
                                l,
                                m,
                                n: nz,
                            });
                        }
                    }
                }
            }
        }
    }
    if n < 2 {
        out.push(Violation::TooFewPoints { len: n });
    } else {
        let (zero, top) = (0, n - 1);
        for b in [zero, top] {
            if !poset.is_strong(b) {
                out.push(Violation::BoundNotStrong { x: b });
            }
        }
        if let Some(w) = (0..n).find(|&y| !poset.leq(zero, y)) {
            out.push(Violation::NotMinimum {
                x: zero,
                witness: w,
            });
        }
        if let Some(w) = (0..n).find(|&y| !poset.leq(y, top)) {
            out.push(Violation::NotMaximum { x: top, witness: w });
        }
    }
    ValidationReport { violations: out }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("relation {x} <= {y}: ell = {ell} outside 1..={p}")]
    EllOutOfRange {
        x: String,
        y: String,
        ell: u32,
        p: u32,
    },
    #[error("relation {x} <= {x} listed in the skeleton")]
    SelfLoop { x: String },
    #[error("the declared relations contain a cycle through {x}")]
    Cycle { x: String },
    #[error("closure gives {x} <= {y} with ell = {ell}, but a strong endpoint forces {p}")]
    StrongConflict {
        x: String,
        y: String,
        ell: u32,
        p: u32,
    },
}

/// Smallest equipment extending a skeleton of relations: for each
/// comparable pair the maximum over declared chains `x = a0 < ... < ak = z`
/// of `min(sum(ell_i - 1) + 1, p)`.
pub fn min_equipment_closure(
    p: u32,
    points: Vec<Point>,
    skeleton: &[(PointId, PointId, u32)],
) -> Result<EquippedPoset, ClosureError> {
    let n = points.len();
    let nm = |x: PointId| points[x].name.clone();
    let mut weight = vec![vec![None::<u32>; n]; n];
    for &(x, y, l) in skeleton {
        if l == 0 || l > p {
            return Err(ClosureError::EllOutOfRange {
                x: nm(x),
                y: nm(y),
                ell: l,
                p,
            });
        }
        if x == y {
            return Err(ClosureError::SelfLoop { x: nm(x) });
        }
        let w = weight[x][y].get_or_insert(l);
        *w = (*w).max(l);
    }

    // Kahn's algorithm; anything left over sits on a cycle.
    let mut indeg = vec![0usize; n];
    for row in &weight {
        for (y, w) in row.iter().enumerate() {
            if w.is_some() {
                indeg[y] += 1;
            }
        }
    }
    let mut queue: VecDeque<PointId> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(x) = queue.pop_front() {
        topo.push(x);
        for y in 0..n {
            if weight[x][y].is_some() {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
    }
    if topo.len() < n {
        let x = (0..n).find(|&x| indeg[x] > 0).unwrap();
        return Err(ClosureError::Cycle { x: nm(x) });
    }

    let mut relations = Vec::new();
    for &x in &topo {
        // best[z] = largest sum of (ell - 1) along a declared path x -> z.
        let mut best: Vec<Option<u32>> = vec![None; n];
        best[x] = Some(0);
        for &y in &topo {
            let Some(by) = best[y] else { continue };
            for z in 0..n {
                if let Some(l) = weight[y][z] {
                    let cand = (by + l - 1).min(p);
                    if best[z].is_none_or(|bz| cand > bz) {
                        best[z] = Some(cand);
                    }
                }
            }
        }
        for z in 0..n {
            if z == x {
                continue;
            }
            if let Some(b) = best[z] {
                let l = (b + 1).min(p);
                let strong = points[x].strength == Strength::Strong
                    || points[z].strength == Strength::Strong;
                if strong && l != p {
                    return Err(ClosureError::StrongConflict {
                        x: nm(x),
                        y: nm(z),
                        ell: l,
                        p,
                    });
                }
                relations.push((x, z, l));
            }
        }
    }
    Ok(EquippedPoset::new(p, points, &relations))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AugmentError {
    #[error("existing bound {name} is weak")]
    WeakBound { name: String },
    #[error("existing minimum {name} lies above {other}")]
    NotMinimal { name: String, other: String },
    #[error("existing maximum {name} lies below {other}")]
    NotMaximal { name: String, other: String },
    #[error("existing bound relation {x} <= {y} has ell = {ell}, a strong point forces {p}")]
    StrongConflict {
        x: String,
        y: String,
        ell: u32,
        p: u32,
    },
}

/// Adjoins a strong minimum named [`ZERO_NAME`] and a strong maximum named
/// [`TOP_NAME`], reusing points already carrying those names. The result
/// lists the minimum first and the maximum last. Idempotent.
pub fn augment(poset: &EquippedPoset) -> Result<EquippedPoset, AugmentError> {
    let p = poset.p;
    let mut points = poset.points.clone();
    let mut relations = poset.relations();
    let check_existing = |name: &str, lower: bool| -> Result<Option<PointId>, AugmentError> {
        let Some(b) = poset.index_of(name) else {
            return Ok(None);
        };
        if poset.is_weak(b) {
            return Err(AugmentError::WeakBound { name: name.into() });
        }
        for y in 0..poset.len() {
            if y == b {
                continue;
            }
            let wrong_side = if lower {
                poset.leq(y, b)
            } else {
                poset.leq(b, y)
            };
            if wrong_side {
                let other = poset.name(y).to_string();
                return Err(if lower {
                    AugmentError::NotMinimal {
                        name: name.into(),
                        other,
                    }
                } else {
                    AugmentError::NotMaximal {
                        name: name.into(),
                        other,
                    }
                });
            }
            let (x, z) = if lower { (b, y) } else { (y, b) };
            if let Some(l) = poset.ell(x, z) {
                if l != p {
                    return Err(AugmentError::StrongConflict {
                        x: poset.name(x).into(),
                        y: poset.name(z).into(),
                        ell: l,
                        p,
                    });
                }
            }
        }
        Ok(Some(b))
    };
    let zero = check_existing(ZERO_NAME, true)?;
    let top = check_existing(TOP_NAME, false)?;
    let zero = zero.unwrap_or_else(|| {
        points.push(Point::strong(ZERO_NAME));
        points.len() - 1
    });
    let top = top.unwrap_or_else(|| {
        points.push(Point::strong(TOP_NAME));
        points.len() - 1
    });
    for x in 0..points.len() {
        if x != zero {
            relations.push((zero, x, p));
        }
        if x != top {
            relations.push((x, top, p));
        }
    }
    let widened = EquippedPoset::new(p, points, &relations);
    Ok(widened.with_named_bounds_at_ends())
}

/// Whether the sub-poset on `subset` is a chain `i1 < ... < is < j1 < ... < jt`
/// with weak `i`s pairwise related by `ell = 1` and strong `j`s.
pub fn is_slender(poset: &EquippedPoset, subset: &[PointId]) -> bool {
    let mut chain = subset.to_vec();
    // In a chain each point is determined by how many points lie below it.
    chain.sort_by_key(|&x| subset.iter().filter(|&&y| poset.lt(y, x)).count());
    let total = chain.windows(2).all(|w| poset.lt(w[0], w[1]));
    if !total {
        return false;
    }
    let weak_len = chain.iter().take_while(|&&x| poset.is_weak(x)).count();
    let (weak, strong) = chain.split_at(weak_len);
    strong.iter().all(|&x| poset.is_strong(x))
        && weak
            .iter()
            .enumerate()
            .all(|(a, &x)| weak[a + 1..].iter().all(|&y| poset.ell(x, y) == Some(1)))
}
