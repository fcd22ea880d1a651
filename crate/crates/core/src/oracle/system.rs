//! The admissible systems `R^(r)` and `R^(c)` as concrete subspaces of `A`,
//! and the axiom checks A.1 to A.3.
//!
//! Both flavors live inside `A`: the flavor-C pieces `F<1, ξ, ..., ξ^(ℓ-1)>`
//! of `G` are embedded through `g -> μ_g`, which is multiplicative.

use super::field::Field;
use super::linalg::{contains, span, RowReducer, Subspace};
use super::tower::{Mat, Tower};
use crate::algebra::{AlgebraModel, Flavor};
use crate::poset::{EquippedPoset, PointId};

#[derive(Clone, Debug)]
pub struct AdmissibleSystem<E> {
    pub flavor: Flavor,
    pub n: usize,
    /// `pieces[x][y]` is `R_{x,y}` for `x <= y`.
    pub pieces: Vec<Vec<Option<Subspace<E>>>>,
    /// The unit `1_x` of `R_x`.
    pub units: Vec<Mat<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> AdmissibleSystem<E> {
    pub fn piece(&self, x: PointId, y: PointId) -> Option<&Subspace<E>> {
        self.pieces[x][y].as_ref()
    }

    /// Replaces `R_{x,y}` by the span of all but its `k`-th basis vector.
    pub fn drop_basis_vector(&mut self, x: PointId, y: PointId, k: usize) {
        if let Some(s) = self.pieces[x][y].as_mut() {
            if k < s.rows.len() {
                s.rows.remove(k);
                s.pivots.remove(k);
            }
        }
    }
}

pub fn build_system<F: Field>(
    tower: &Tower<F>,
    poset: &EquippedPoset,
    flavor: Flavor,
) -> AdmissibleSystem<F::Elem> {
    let n = poset.len();
    let dim_a = tower.dim_a();
    let eps = |x: PointId| match flavor {
        Flavor::R if poset.is_strong(x) => tower.epsilon(),
        _ => tower.identity(),
    };
    let units: Vec<_> = (0..n).map(eps).collect();
    let mut pieces = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            let Some(l) = poset.ell(x, y) else { continue };
            let l = l as usize;
            let space = match flavor {
                Flavor::C => tower.b_ell(l),
                Flavor::R => {
                    // ε_x T ε_y in A is ε_y ∘ T ∘ ε_x as endomorphisms.
                    let basis: Vec<_> = tower
                        .a_ell_basis(l)
                        .iter()
                        .map(|t| tower.compose(&units[y], &tower.compose(t, &units[x])))
                        .collect();
                    span(&tower.field, dim_a, &basis)
                }
            };
            pieces[x][y] = Some(space);
        }
    }
    AdmissibleSystem {
        flavor,
        n,
        pieces,
        units,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl AxiomCheck {
    fn new(name: &str, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            "ok".to_string()
        } else {
            failures.join("; ")
        };
        AxiomCheck {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

pub fn verify_admissible<F: Field>(
    tower: &Tower<F>,
    poset: &EquippedPoset,
    sys: &AdmissibleSystem<F::Elem>,
) -> Vec<AxiomCheck> {
    let n = sys.n;
    let f = &tower.field;
    let name = |x: PointId| poset.name(x).to_string();
    let empty = Subspace {
        ambient: tower.dim_a(),
        rows: Vec::new(),
        pivots: Vec::new(),
    };
    let piece = |x, y| sys.piece(x, y).unwrap_or(&empty);
    let leq = |x, y| sys.piece(x, y).is_some();

    let mut a1 = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| leq(i, j)) {
            for l in (0..n).filter(|&l| leq(j, l)) {
                if !leq(i, l) {
                    a1.push(format!(
                        "{} <= {} <= {} but not {} <= {}",
                        name(i),
                        name(j),
                        name(l),
                        name(i),
                        name(l)
                    ));
                    continue;
                }
                let target = piece(i, l);
                let closed = piece(i, j).rows.iter().all(|a| {
                    piece(j, l)
                        .rows
                        .iter()
                        .all(|b| contains(f, target, &tower.star(a, b)))
                });
                if !closed {
                    a1.push(format!(
                        "R({},{}) R({},{}) not in R({},{})",
                        name(i),
                        name(j),
                        name(j),
                        name(l),
                        name(i),
                        name(l)
                    ));
                }
            }
        }
    }

    let mut a2 = Vec::new();
    for x in 0..n {
        let one = &sys.units[x];
        let rx = piece(x, x);
        if !contains(f, rx, one) {
            a2.push(format!(
                "1_{} is not in R({},{})",
                name(x),
                name(x),
                name(x)
            ));
            continue;
        }
        if !is_division_ring(tower, rx, one) {
            a2.push(format!("R({},{}) is not a division ring", name(x), name(x)));
        }
        for y in (0..n).filter(|&y| leq(x, y)) {
            let unital = piece(x, y)
                .rows
                .iter()
                .all(|r| tower.star(one, r) == *r && tower.star(r, &sys.units[y]) == *r);
            if !unital {
                a2.push(format!(
                    "units do not act trivially on R({},{})",
                    name(x),
                    name(y)
                ));
            }
        }
    }

    let mut a3 = Vec::new();
    let top = n - 1;
    for i in 0..n {
        for j in (0..n).filter(|&j| j != top && leq(i, j)) {
            let source = piece(i, j);
            if source.is_zero() {
                continue;
            }
            // x -> (x y)_y over a basis of every R_{j,l}, l != j, must be injective.
            let partners: Vec<&Mat<F::Elem>> = (0..n)
                .filter(|&l| l != j && leq(j, l))
                .flat_map(|l| piece(j, l).rows.iter())
                .collect();
            let images: Vec<Vec<F::Elem>> = source
                .rows
                .iter()
                .map(|x| partners.iter().flat_map(|y| tower.star(x, y)).collect())
                .collect();
            let width = partners.len() * tower.dim_a();
            let mut reducer = RowReducer::new(f.clone(), width);
            let rank = if width == 0 {
                0
            } else {
                images
                    .into_iter()
                    .filter(|v| reducer.insert(v.clone()))
                    .count()
            };
            if rank < source.dim() {
                a3.push(format!(
                    "some nonzero x in R({},{}) is annihilated by everything above {}",
                    name(i),
                    name(j),
                    name(j)
                ));
            }
        }
    }

    vec![
        AxiomCheck::new("A.1", a1),
        AxiomCheck::new("A.2", a2),
        AxiomCheck::new("A.3", a3),
    ]
}

/// Whether the unital subalgebra `space` with unit `one` is a division ring.
fn is_division_ring<F: Field>(
    tower: &Tower<F>,
    space: &Subspace<F::Elem>,
    one: &Mat<F::Elem>,
) -> bool {
    let f = &tower.field;
    let closed = space.rows.iter().all(|a| {
        space
            .rows
            .iter()
            .all(|b| contains(f, space, &tower.star(a, b)))
    });
    if !closed {
        return false;
    }
    if space.dim() == 1 {
        return true;
    }
    // A finite-dimensional subalgebra of the field μ(G) is a field.
    let mu_g = tower.b_ell(tower.p);
    if *one == tower.identity() && space.rows.iter().all(|r| contains(f, &mu_g, r)) {
        return true;
    }
    let Some(elements) = f.elements() else {
        return false;
    };
    // Otherwise look for inverses by enumeration.
    let d = space.dim();
    let q = elements.len();
    let total = (q as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if total > 1 << 20 {
        return false;
    }
    let combine = |mut k: u64| {
        let mut v = tower.zero_mat();
        for row in &space.rows {
            let c = &elements[(k % q as u64) as usize];
            k /= q as u64;
            for (x, r) in v.iter_mut().zip(row) {
                *x = f.add(x, &f.mul(c, r));
            }
        }
        v
    };
    let all: Vec<_> = (0..total).map(combine).collect();
    all.iter()
        .filter(|a| a.iter().any(|x| !f.is_zero(x)))
        .all(|a| all.iter().any(|b| tower.star(a, b) == *one))
}

/// Pairs `(x, y)` where `dim R_{x,y}` differs from the model's `hom_dim`.
pub fn verify_dims<E: Clone + PartialEq + std::fmt::Debug>(
    model: &AlgebraModel,
    sys: &AdmissibleSystem<E>,
) -> Vec<String> {
    let poset = model.poset();
    let mut out = Vec::new();
    for x in 0..sys.n {
        for y in 0..sys.n {
            let got = sys.piece(x, y).map_or(0, |s| s.dim() as u64);
            let want = model.hom_dim(x, y);
            if got != want {
                out.push(format!(
                    "dim R({},{}) = {} but hom_dim = {}",
                    poset.name(x),
                    poset.name(y),
                    got,
                    want
                ));
            }
        }
    }
    out
}
