//! Spans, coordinates and ranks over an oracle field.

use super::field::Field;

/// A subspace of `K^ambient` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<E> {
    pub ambient: usize,
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Subspace<E> {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn span<F: Field>(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Subspace<F::Elem> {
    let mut rows: Vec<Vec<F::Elem>> = vectors.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ambient {
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !field.is_zero(&rows[i][col]) {
                let factor = rows[i][col].clone();
                for c in col..ambient {
                    let t = field.mul(&factor, &rows[r][c]);
                    rows[i][c] = field.sub(&rows[i][c], &t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Subspace {
        ambient,
        rows,
        pivots,
    }
}

/// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
pub fn coords<F: Field>(
    field: &F,
    space: &Subspace<F::Elem>,
    v: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let c: Vec<F::Elem> = space.pivots.iter().map(|&p| v[p].clone()).collect();
    let mut rest = v.to_vec();
    for (k, row) in space.rows.iter().enumerate() {
        if field.is_zero(&c[k]) {
            continue;
        }
        for (x, r) in rest.iter_mut().zip(row) {
            let t = field.mul(&c[k], r);
            *x = field.sub(x, &t);
        }
    }
    rest.iter().all(|x| field.is_zero(x)).then_some(c)
}

pub fn contains<F: Field>(field: &F, space: &Subspace<F::Elem>, v: &[F::Elem]) -> bool {
    coords(field, space, v).is_some()
}

pub fn rank<F: Field>(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> usize {
    span(field, ambient, vectors).dim()
}

/// Incremental echelon form for equation systems that arrive row by row.
pub struct RowReducer<F: Field> {
    field: F,
    width: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(field: F, width: usize) -> Self {
        RowReducer {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        let f = &self.field;
        for (pivot, row) in &self.rows {
            if f.is_zero(&v[*pivot]) {
                continue;
            }
            let factor = v[*pivot].clone();
            for c in *pivot..self.width {
                if !f.is_zero(&row[c]) {
                    let t = f.mul(&factor, &row[c]);
                    v[c] = f.sub(&v[c], &t);
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]);
        for x in v.iter_mut().skip(pivot) {
            *x = f.mul(x, &inv);
        }
        self.rows.push((pivot, v));
        true
    }
}
