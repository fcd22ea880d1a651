//! Brute-force ground truth: explicit field towers, the admissible systems
//! inside `A = (End_F G)^op`, and module computations over `Λ` by linear
//! algebra. Used to cross-check the combinatorial model on small posets.

pub mod field;
pub mod linalg;
pub mod module;
pub mod system;
pub mod tower;

use thiserror::Error;

use crate::algebra::{build_model, AlgebraModel, Flavor, ModelError};
use crate::forms::euler_pairing;
use crate::poset::{EquippedPoset, PointId};
use crate::vector::rat;
use field::{Field, PrimeField};
use module::{generators, hom_dim, Generators, ModuleRep};
use system::{build_system, verify_admissible, verify_dims, AdmissibleSystem, AxiomCheck};
use tower::{build_cyclic, Tower};
pub use tower::{FieldSpec, Mode, TowerError};

/// Largest poset the oracle accepts in cyclic mode.
pub const MAX_POINTS: usize = 6;
/// Largest poset the oracle accepts in inseparable mode.
pub const MAX_POINTS_INSEPARABLE: usize = 4;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("the poset has {points} points; the oracle handles at most {limit}")]
    TooLarge { points: usize, limit: usize },
    #[error("poset is over p = {poset} but the tower has degree {tower}")]
    DegreeMismatch { poset: u32, tower: u32 },
}

/// Ground-truth computations for one poset, one flavor and one tower.
pub struct Oracle<F: Field> {
    pub tower: Tower<F>,
    pub model: AlgebraModel,
    pub system: AdmissibleSystem<F::Elem>,
    gens: Generators<F::Elem>,
}

impl<F: Field> Oracle<F> {
    pub fn new(
        tower: Tower<F>,
        poset: &EquippedPoset,
        flavor: Flavor,
    ) -> Result<Self, OracleError> {
        let model = build_model(poset, flavor)?;
        Ok(Self::from_system(tower, model.clone(), |t| {
            build_system(t, poset, flavor)
        }))
    }

    /// Builds from a possibly modified system, for negative controls.
    pub fn from_system(
        tower: Tower<F>,
        model: AlgebraModel,
        system: impl FnOnce(&Tower<F>) -> AdmissibleSystem<F::Elem>,
    ) -> Self {
        let system = system(&tower);
        let gens = generators(&tower, &system);
        Oracle {
            tower,
            model,
            system,
            gens,
        }
    }

    pub fn admissible(&self) -> Vec<AxiomCheck> {
        verify_admissible(&self.tower, self.model.poset(), &self.system)
    }

    pub fn dim_mismatches(&self) -> Vec<String> {
        verify_dims(&self.model, &self.system)
    }

    /// `dim_F Hom_Λ(e_i Λ, e_j Λ)`.
    pub fn hom_dim(&self, i: PointId, j: PointId) -> usize {
        let m = ModuleRep::projective(&self.system, i);
        let n = ModuleRep::projective(&self.system, j);
        hom_dim(&self.tower, &self.gens, &m, &n)
    }

    /// `dim_F End_Λ(rad e_i Λ)`.
    pub fn radical_end_dim(&self, i: PointId) -> usize {
        let r = ModuleRep::radical(&self.system, i);
        hom_dim(&self.tower, &self.gens, &r, &r)
    }

    /// Multiplicity and summand label read off `dim End(rad e_i Λ)`, or `None`
    /// when the dimension is not one of `1`, `p`, `p^2`.
    pub fn radical(&self, i: PointId) -> (usize, Option<(u32, crate::algebra::Label)>) {
        use crate::algebra::Label;
        let d = self.radical_end_dim(i);
        let p = self.tower.p;
        let kdim_one = if self.model.kdim(Label::Strong) == 1 {
            Label::Strong
        } else {
            Label::Weak
        };
        let kdim_p = match kdim_one {
            Label::Strong => Label::Weak,
            Label::Weak => Label::Strong,
        };
        let read = if d == 1 {
            Some((1, kdim_one))
        } else if d == p {
            Some((1, kdim_p))
        } else if d == p * p {
            Some((p as u32, kdim_one))
        } else {
            None
        };
        (d, read)
    }

    pub fn report(&self) -> OracleReport {
        let model = &self.model;
        let poset = model.poset();
        let n = model.len();
        let name = |x: PointId| poset.name(x).to_string();
        let mut checks: Vec<OracleCheck> = self
            .admissible()
            .into_iter()
            .map(OracleCheck::from)
            .collect();
        checks.push(OracleCheck::new("dimensions", self.dim_mismatches()));

        let mut radical = Vec::new();
        for i in (0..n).filter(|&i| i != model.top()) {
            let info = match model.radical_info(i) {
                Ok(info) => info,
                Err(e) => {
                    radical.push(format!("{}: {e}", name(i)));
                    continue;
                }
            };
            let (d, read) = self.radical(i);
            let want = (info.multiplicity, info.summand_label);
            if read != Some(want) {
                radical.push(format!(
                    "rad {}: dim End = {d}, model says multiplicity {} label {}",
                    name(i),
                    info.multiplicity,
                    info.summand_label
                ));
            }
        }
        checks.push(OracleCheck::new("radicals", radical));

        let mut homs = Vec::new();
        let mut euler = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let got = self.hom_dim(i, j);
                let want = model.hom_dim(j, i) as usize;
                if got != want {
                    homs.push(format!(
                        "Hom(P_{}, P_{}) = {got}, model says {want}",
                        name(i),
                        name(j)
                    ));
                }
                if i != model.zero() && j != model.zero() {
                    let pairing =
                        euler_pairing(model, &model.projective_cd(i), &model.projective_cd(j));
                    if pairing != rat(got as i64) {
                        euler.push(format!(
                            "<P_{}, P_{}> = {pairing}, Hom has dimension {got}",
                            name(i),
                            name(j)
                        ));
                    }
                }
            }
        }
        checks.push(OracleCheck::new("hom dimensions", homs));
        checks.push(OracleCheck::new("euler pairing", euler));
        OracleReport {
            flavor: model.flavor(),
            tower: self.tower.description.clone(),
            checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl OracleCheck {
    fn new(name: &str, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            "ok".to_string()
        } else {
            failures.join("; ")
        };
        OracleCheck {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

impl From<AxiomCheck> for OracleCheck {
    fn from(a: AxiomCheck) -> Self {
        OracleCheck {
            name: a.name,
            passed: a.passed,
            detail: a.detail,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub flavor: Flavor,
    pub tower: String,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check_size(poset: &EquippedPoset, spec: &FieldSpec) -> Result<(), OracleError> {
    let limit = match spec.mode {
        Mode::Cyclic => MAX_POINTS,
        Mode::Inseparable => MAX_POINTS_INSEPARABLE,
    };
    if poset.len() > limit {
        return Err(OracleError::TooLarge {
            points: poset.len(),
            limit,
        });
    }
    if poset.p() != spec.p {
        return Err(OracleError::DegreeMismatch {
            poset: poset.p(),
            tower: spec.p,
        });
    }
    Ok(())
}

pub fn cyclic_oracle(
    poset: &EquippedPoset,
    flavor: Flavor,
    spec: &FieldSpec,
) -> Result<Oracle<PrimeField>, OracleError> {
    check_size(poset, spec)?;
    Oracle::new(build_cyclic(spec)?, poset, flavor)
}

/// Builds the tower named by `spec` and runs every check.
pub fn verify(
    poset: &EquippedPoset,
    flavor: Flavor,
    spec: &FieldSpec,
) -> Result<OracleReport, OracleError> {
    check_size(poset, spec)?;
    match spec.mode {
        Mode::Cyclic => Ok(Oracle::new(build_cyclic(spec)?, poset, flavor)?.report()),
        #[cfg(feature = "inseparable")]
        Mode::Inseparable => {
            Ok(Oracle::new(tower::build_inseparable(spec.p)?, poset, flavor)?.report())
        }
        #[cfg(not(feature = "inseparable"))]
        Mode::Inseparable => Err(TowerError::InseparableDisabled.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Label;
    use crate::poset::{augment, Point};

    fn star(p: u32) -> EquippedPoset {
        augment(&EquippedPoset::new(p, vec![Point::weak("w")], &[])).unwrap()
    }

    fn weak_chain(l: u32) -> EquippedPoset {
        let interior =
            EquippedPoset::new(3, vec![Point::weak("a"), Point::weak("b")], &[(0, 1, l)]);
        augment(&interior).unwrap()
    }

    fn f9() -> FieldSpec {
        FieldSpec::cyclic(2, 3, -1)
    }

    fn f343() -> FieldSpec {
        let mut s = FieldSpec::cyclic(3, 7, 3);
        s.omega = Some(2);
        s
    }

    #[test]
    fn star_radical_splits() {
        let o = cyclic_oracle(&star(2), Flavor::R, &f9()).unwrap();
        let w = o.model.poset().index_of("w").unwrap();
        assert_eq!(o.radical(w), (4, Some((2, Label::Strong))));
        let m = o.model.top();
        assert_eq!(o.hom_dim(m, w), 2);
    }

    #[test]
    fn weak_chain_radical_is_indecomposable() {
        let o = cyclic_oracle(&weak_chain(1), Flavor::R, &f343()).unwrap();
        let a = o.model.poset().index_of("a").unwrap();
        assert_eq!(o.radical(a), (3, Some((1, Label::Weak))));
    }

    #[test]
    fn reports_pass_on_small_posets() {
        for flavor in [Flavor::R, Flavor::C] {
            let r = verify(&star(2), flavor, &f9()).unwrap();
            assert!(r.passed(), "{r:?}");
            for l in 1..=3 {
                let r = verify(&weak_chain(l), flavor, &f343()).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn dropping_a_basis_vector_breaks_a3() {
        let trivial = augment(&EquippedPoset::new(2, vec![], &[])).unwrap();
        let model = build_model(&trivial, Flavor::R).unwrap();
        let o = Oracle::from_system(build_cyclic(&f9()).unwrap(), model, |t| {
            let mut s = build_system(t, &trivial, Flavor::R);
            s.drop_basis_vector(0, 1, 0);
            s
        });
        let checks = o.admissible();
        assert!(!checks.iter().find(|c| c.name == "A.3").unwrap().passed);
    }

    #[test]
    fn dropping_a_basis_vector_breaks_a1_on_the_star() {
        let s = star(2);
        let model = build_model(&s, Flavor::R).unwrap();
        let w = s.index_of("w").unwrap();
        let o = Oracle::from_system(build_cyclic(&f9()).unwrap(), model, |t| {
            let mut sys = build_system(t, &s, Flavor::R);
            sys.drop_basis_vector(w, s.top(), 0);
            sys
        });
        let checks = o.admissible();
        assert!(!checks.iter().find(|c| c.name == "A.1").unwrap().passed);
        assert!(!o.dim_mismatches().is_empty());
    }

    #[test]
    fn size_guard() {
        let big = crate::enumerate::bounded_posets(2, 5)
            .into_iter()
            .next()
            .unwrap();
        assert!(matches!(
            verify(&big, Flavor::R, &f9()),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[cfg(feature = "inseparable")]
    #[test]
    fn inseparable_star() {
        for flavor in [Flavor::R, Flavor::C] {
            let r = verify(&star(2), flavor, &FieldSpec::inseparable(2)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
