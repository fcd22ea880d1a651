//! Hom-dimension tables of the two incidence algebras attached to an
//! equipped poset, and the radical and injective data derived from them.
//!
//! All vectors are indexed by poset points. `hom_dim(i, j)` is the base-field
//! dimension of `e_i Λ e_j`, so the dimension vector of the right projective
//! `e_i Λ` is `j -> hom_dim(i, j)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{compose, EquippedPoset, PointId, Strength};
use crate::vector::{rat, DimVec, Rat, RatVec};

/// Which of the two algebras is modelled. Flavor `R` has local rings `G` at
/// weak points and `F` at strong points; flavor `C` the other way round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    R,
    C,
}

impl Flavor {
    pub fn other(self) -> Flavor {
        match self {
            Flavor::R => Flavor::C,
            Flavor::C => Flavor::R,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::R => f.write_str("R"),
            Flavor::C => f.write_str("C"),
        }
    }
}

/// Endomorphism-ring type of an indecomposable. In flavor `R` a strong module
/// has endomorphism ring `F`; in flavor `C` a strong module has `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Weak,
    Strong,
}

impl Label {
    pub fn of(strength: Strength) -> Label {
        match strength {
            Strength::Weak => Label::Weak,
            Strength::Strong => Label::Strong,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Label::Weak => "W",
            Label::Strong => "S",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Weak => f.write_str("Weak"),
            Label::Strong => f.write_str("Strong"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("poset is not a valid bounded equipped poset: {0}")]
    InvalidPoset(String),
    #[error("the maximum has zero radical")]
    RadicalOfTop,
    #[error("point index {0} out of range")]
    NoSuchPoint(PointId),
    #[error("non-integral value {0} in radical coordinates of {1}")]
    NonIntegral(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModel {
    poset: EquippedPoset,
    flavor: Flavor,
    hom: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalInfo {
    pub point: PointId,
    /// `rad(e_i Λ)` is this many copies of one indecomposable summand.
    pub multiplicity: u32,
    pub summand_udim_f: DimVec,
    pub summand_label: Label,
    /// Coordinate vector of the summand's minimal projective presentation.
    pub cd: RatVec,
    /// Point `j` with `rad(e_i Λ) = (e_j Λ)^multiplicity`, if any.
    pub is_projective: Option<PointId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveProfile {
    pub point: PointId,
    pub udim_f: DimVec,
    pub label: Label,
}

pub fn build_model(poset: &EquippedPoset, flavor: Flavor) -> Result<AlgebraModel, ModelError> {
    let report = poset.validate();
    if !report.is_valid() {
        return Err(ModelError::InvalidPoset(report.lines(poset).join("; ")));
    }
    let n = poset.len();
    let p = poset.p() as u64;
    let local_r = |x: PointId| if poset.is_weak(x) { p } else { 1 };
    let mut hom = vec![vec![0u64; n]; n];
    for (i, row) in hom.iter_mut().enumerate() {
        for (j, h) in row.iter_mut().enumerate() {
            if let Some(l) = poset.ell(i, j) {
                *h = match flavor {
                    Flavor::R => l as u64 * local_r(i) * local_r(j) / p,
                    Flavor::C => l as u64,
                };
            }
        }
    }
    Ok(AlgebraModel {
        poset: poset.clone(),
        flavor,
        hom,
    })
}

impl AlgebraModel {
    pub fn poset(&self) -> &EquippedPoset {
        &self.poset
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn p(&self) -> u32 {
        self.poset.p()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn zero(&self) -> PointId {
        self.poset.zero()
    }

    pub fn top(&self) -> PointId {
        self.poset.top()
    }

    pub fn hom_dim(&self, i: PointId, j: PointId) -> u64 {
        self.hom[i][j]
    }

    pub fn hom_table(&self) -> &[Vec<u64>] {
        &self.hom
    }

    pub fn local_dim(&self, i: PointId) -> u64 {
        self.hom[i][i]
    }

    /// Base-field dimension of the endomorphism ring carried by `label`.
    pub fn kdim(&self, label: Label) -> u64 {
        let p = self.p() as u64;
        match (self.flavor, label) {
            (Flavor::R, Label::Strong) | (Flavor::C, Label::Weak) => 1,
            (Flavor::R, Label::Weak) | (Flavor::C, Label::Strong) => p,
        }
    }

    /// Number of copies of the simple at the maximum in the socle of `e_0 Λ`.
    pub fn t_socle(&self) -> Rat {
        let (z, m) = (self.zero(), self.top());
        Rat::new(self.hom[z][m].into(), self.hom[m][m].into())
    }

    pub fn projective_udim_f(&self, i: PointId) -> DimVec {
        self.hom[i].iter().map(|&h| BigInt::from(h)).collect()
    }

    pub fn projective_label(&self, i: PointId) -> Label {
        Label::of(self.poset.strength(i))
    }

    /// Presentation coordinates of `e_i Λ`: one copy of `e_i Λ` mapping to
    /// as many copies of `e_0 Λ` as its socle needs.
    pub fn projective_cd(&self, i: PointId) -> RatVec {
        let n = self.len();
        let m = self.top();
        let mut cd = vec![Rat::zero(); n];
        cd[i] = rat(1);
        cd[self.zero()] = Rat::new(self.hom[i][m].into(), self.hom[m][m].into());
        cd
    }

    /// `udim` from `udim_f`: divide each coordinate by the local dimension.
    pub fn udim_of(&self, udim_f: &[BigInt]) -> RatVec {
        udim_f
            .iter()
            .enumerate()
            .map(|(x, d)| Rat::new(d.clone(), self.local_dim(x).into()))
            .collect()
    }

    /// True when every relation above a weak `i` has `ell = p`.
    fn all_p_above(&self, i: PointId) -> bool {
        let p = self.p();
        (0..self.len()).all(|x| !self.poset.lt(i, x) || self.poset.ell(i, x) == Some(p))
    }

    /// Base-field dimension of the part of the `z`-component of `e_i Λ` that
    /// factors through some point strictly between `i` and `z`.
    fn rad_square_dim(&self, i: PointId, z: PointId) -> u64 {
        let p = self.p();
        let poset = &self.poset;
        let forced = (0..self.len())
            .filter(|&y| poset.lt(i, y) && poset.lt(y, z))
            .map(|y| compose(p, poset.raw_ell(i, y), poset.raw_ell(y, z)))
            .max();
        match forced {
            None => 0,
            Some(l) => match self.flavor {
                Flavor::C => l as u64,
                Flavor::R => {
                    let p64 = p as u64;
                    let loc = |x: PointId| if poset.is_weak(x) { p64 } else { 1 };
                    l as u64 * loc(i) * loc(z) / p64
                }
            },
        }
    }

    pub fn radical_info(&self, i: PointId) -> Result<RadicalInfo, ModelError> {
        let n = self.len();
        if i >= n {
            return Err(ModelError::NoSuchPoint(i));
        }
        if i == self.top() {
            return Err(ModelError::RadicalOfTop);
        }
        let weak = self.poset.is_weak(i);
        let split = weak && self.all_p_above(i);
        let multiplicity = if split && self.flavor == Flavor::R {
            self.p()
        } else {
            1
        };
        let summand_label = if weak && !split {
            Label::Weak
        } else {
            Label::Strong
        };

        let above: Vec<PointId> = (0..n).filter(|&x| self.poset.lt(i, x)).collect();
        let mut summand_udim_f = vec![BigInt::zero(); n];
        let mut cd_rad = vec![Rat::zero(); n];
        for &z in &above {
            summand_udim_f[z] = BigInt::from(self.hom[i][z] / multiplicity as u64);
            let top_dim = self.hom[i][z] - self.rad_square_dim(i, z);
            cd_rad[z] = Rat::new(top_dim.into(), self.local_dim(z).into());
        }
        let m = self.top();
        cd_rad[self.zero()] = Rat::new(self.hom[i][m].into(), self.hom[m][m].into());
        let mult = rat(multiplicity as i64);
        let cd: RatVec = cd_rad.into_iter().map(|c| c / &mult).collect();
        if let Some(bad) = cd.iter().find(|c| !c.is_integer()) {
            return Err(ModelError::NonIntegral(
                bad.to_string(),
                self.poset.name(i).into(),
            ));
        }
        let is_projective = above.iter().copied().find(|&j| {
            self.projective_label(j) == summand_label && self.projective_udim_f(j) == summand_udim_f
        });
        Ok(RadicalInfo {
            point: i,
            multiplicity,
            summand_udim_f,
            summand_label,
            cd,
            is_projective,
        })
    }

    /// Dimension vectors of the modules corresponding to the injectives
    /// `D(Λ e_i)`, `i` not the maximum, on the socle-projective side.
    pub fn injective_profiles(&self) -> Vec<InjectiveProfile> {
        let n = self.len();
        let z = self.zero();
        (0..n)
            .filter(|&i| i != self.top())
            .map(|i| {
                let c = self.hom[z][i] / self.hom[z][z];
                let udim_f = (0..n)
                    .map(|j| BigInt::from(c * self.hom[z][j]) - BigInt::from(self.hom[j][i]))
                    .collect();
                InjectiveProfile {
                    point: i,
                    udim_f,
                    label: self.projective_label(i),
                }
            })
            .collect()
    }

    /// Whether every submodule of `e_i Λ` is projective, decided by walking
    /// down the chain of radicals.
    pub fn is_hereditary(&self, i: PointId) -> bool {
        let mut x = i;
        loop {
            if x == self.top() {
                return true;
            }
            match self.radical_info(x) {
                Ok(RadicalInfo {
                    is_projective: Some(j),
                    ..
                }) => x = j,
                _ => return false,
            }
        }
    }
}
