//! Right `Λ`-modules given as subspaces of `A` per point, and the solver for
//! `Hom_Λ` by linear equations.

use super::field::Field;
use super::linalg::{coords, span, RowReducer, Subspace};
use super::system::AdmissibleSystem;
use super::tower::{Mat, Tower};
use crate::poset::PointId;

/// A module whose `x`-component is a subspace of `A`, with `Λ` acting by the
/// product of `A`. Only submodules of projectives are represented.
#[derive(Clone, Debug)]
pub struct ModuleRep<E> {
    pub comps: Vec<Option<Subspace<E>>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> ModuleRep<E> {
    /// `e_i Λ`.
    pub fn projective(sys: &AdmissibleSystem<E>, i: PointId) -> Self {
        let comps = (0..sys.n).map(|x| sys.piece(i, x).cloned()).collect();
        ModuleRep { comps }
    }

    /// `rad e_i Λ`: everything strictly above `i`.
    pub fn radical(sys: &AdmissibleSystem<E>, i: PointId) -> Self {
        let comps = (0..sys.n)
            .map(|x| {
                if x == i {
                    None
                } else {
                    sys.piece(i, x).cloned()
                }
            })
            .collect();
        ModuleRep { comps }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.comps
            .iter()
            .map(|c| c.as_ref().map_or(0, |s| s.dim()))
            .collect()
    }
}

/// Algebra generators of `Λ` beyond the idempotents: a basis of every `R_x`
/// and, for `x < y`, a complement in `R_{x,y}` of the products through
/// points strictly between.
pub struct Generators<E> {
    pub gens: Vec<(PointId, PointId, Vec<Mat<E>>)>,
}

pub fn generators<F: Field>(
    tower: &Tower<F>,
    sys: &AdmissibleSystem<F::Elem>,
) -> Generators<F::Elem> {
    let f = &tower.field;
    let n = sys.n;
    let mut gens = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let Some(rxy) = sys.piece(x, y) else { continue };
            if x == y {
                gens.push((x, y, rxy.rows.clone()));
                continue;
            }
            let mut products = Vec::new();
            for z in (0..n).filter(|&z| z != x && z != y) {
                if let (Some(a), Some(b)) = (sys.piece(x, z), sys.piece(z, y)) {
                    for u in &a.rows {
                        for v in &b.rows {
                            products.push(tower.star(u, v));
                        }
                    }
                }
            }
            let mut reducer = RowReducer::new(f.clone(), tower.dim_a());
            for v in span(f, tower.dim_a(), &products).rows {
                reducer.insert(v);
            }
            let chosen: Vec<_> = rxy
                .rows
                .iter()
                .filter(|r| reducer.insert((*r).clone()))
                .cloned()
                .collect();
            if !chosen.is_empty() {
                gens.push((x, y, chosen));
            }
        }
    }
    Generators { gens }
}

/// `dim_F Hom_Λ(m, n)` by solving for one linear map per point that commutes
/// with every generator.
pub fn hom_dim<F: Field>(
    tower: &Tower<F>,
    gens: &Generators<F::Elem>,
    m: &ModuleRep<F::Elem>,
    n: &ModuleRep<F::Elem>,
) -> usize {
    let f = &tower.field;
    let points = m.comps.len();
    let dm = m.dims();
    let dn = n.dims();
    let mut offset = vec![0; points];
    let mut unknowns = 0;
    for x in 0..points {
        offset[x] = unknowns;
        unknowns += dm[x] * dn[x];
    }
    if unknowns == 0 {
        return 0;
    }
    // Variable for the coefficient of basis vector k of N_x in U_x(basis a of M_x).
    let var = |x: usize, k: usize, a: usize| offset[x] + k * dm[x] + a;
    let mut reducer = RowReducer::new(f.clone(), unknowns);
    for (x, y, elems) in &gens.gens {
        let (x, y) = (*x, *y);
        let (Some(mx), Some(ny)) = (&m.comps[x], &n.comps[y]) else {
            continue;
        };
        for b in elems {
            // n_k b in coordinates of N_y, for each basis vector n_k of N_x.
            let nb: Vec<Vec<F::Elem>> = match &n.comps[x] {
                Some(nx) => nx
                    .rows
                    .iter()
                    .map(|v| coords(f, ny, &tower.star(v, b)).expect("N is a module"))
                    .collect(),
                None => Vec::new(),
            };
            for (a, ma) in mx.rows.iter().enumerate() {
                let mab = match &m.comps[y] {
                    Some(my) => coords(f, my, &tower.star(ma, b)).expect("M is a module"),
                    None => Vec::new(),
                };
                // U_y(m_a b) = U_x(m_a) b, one equation per coordinate of N_y.
                for l in 0..dn[y] {
                    let mut row = vec![f.zero(); unknowns];
                    for (k, coeffs) in nb.iter().enumerate() {
                        row[var(x, k, a)] = f.add(&row[var(x, k, a)], &coeffs[l]);
                    }
                    for (kp, c) in mab.iter().enumerate() {
                        row[var(y, l, kp)] = f.sub(&row[var(y, l, kp)], c);
                    }
                    if row.iter().any(|v| !f.is_zero(v)) {
                        reducer.insert(row);
                        if reducer.is_full() {
                            return 0;
                        }
                    }
                }
            }
        }
    }
    unknowns - reducer.rank()
}
