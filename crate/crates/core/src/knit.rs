//! Knitting the Auslander-Reiten component of the simple projective at the
//! maximum, inside the category of socle-projective modules.
//!
//! Vertices are identified by their base-field dimension vector together
//! with their endomorphism label. The component is built section by
//! section: each section is the inverse translate of the previous one plus
//! every projective whose radical summand has just appeared.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraModel, Flavor, InjectiveProfile, Label, ModelError, RadicalInfo};
use crate::forms::quadratic;
use crate::poset::PointId;
use crate::vector::{format_vec, rat, DimVec, Rat, RatVec};

pub const DEFAULT_MAX_SECTIONS: usize = 12;
pub const MAX_SECTIONS_ENV: &str = "EQPOSET_MAX_SECTIONS";

/// Section limit from `EQPOSET_MAX_SECTIONS`, falling back to the default.
pub fn max_sections_from_env() -> usize {
    std::env::var(MAX_SECTIONS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(DEFAULT_MAX_SECTIONS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Projective(PointId),
    /// Corresponds to the injective `D(Λ e_i)`.
    Injective(PointId),
    ProjectiveInjective(PointId, PointId),
    Regular,
}

impl VertexKind {
    pub fn projective_point(self) -> Option<PointId> {
        match self {
            VertexKind::Projective(i) | VertexKind::ProjectiveInjective(i, _) => Some(i),
            _ => None,
        }
    }

    pub fn injective_point(self) -> Option<PointId> {
        match self {
            VertexKind::Injective(i) | VertexKind::ProjectiveInjective(_, i) => Some(i),
            _ => None,
        }
    }

    pub fn is_injective(self) -> bool {
        self.injective_point().is_some()
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Projective(_) => "Projective",
            VertexKind::Injective(_) => "Injective",
            VertexKind::ProjectiveInjective(..) => "ProjectiveInjective",
            VertexKind::Regular => "Regular",
        }
    }

    fn from_parts(projective: Option<PointId>, injective: Option<PointId>) -> VertexKind {
        match (projective, injective) {
            (Some(i), Some(j)) => VertexKind::ProjectiveInjective(i, j),
            (Some(i), None) => VertexKind::Projective(i),
            (None, Some(j)) => VertexKind::Injective(j),
            (None, None) => VertexKind::Regular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArVertex {
    pub id: usize,
    /// 1-based section index.
    pub section: usize,
    pub kind: VertexKind,
    pub label: Label,
    pub udim_f: DimVec,
    pub udim: RatVec,
    pub cd: Option<RatVec>,
    pub vdim: Option<DimVec>,
    /// The translate of this vertex, when it is not projective.
    pub tau: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArArrow {
    pub src: usize,
    pub dst: usize,
    /// Multiplicity of `src` in the sink map of `dst`.
    pub a: u32,
    /// Multiplicity of `dst` in the source map of `src`.
    pub b: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnitStatus {
    Finite,
    TruncatedAtMaxSections,
}

impl fmt::Display for KnitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnitStatus::Finite => f.write_str("Finite"),
            KnitStatus::TruncatedAtMaxSections => f.write_str("TruncatedAtMaxSections"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGraph {
    pub flavor: Flavor,
    pub p: u32,
    pub point_names: Vec<String>,
    pub max_sections: usize,
    pub sections: Vec<Vec<usize>>,
    pub vertices: Vec<ArVertex>,
    pub arrows: Vec<ArArrow>,
    pub status: KnitStatus,
}

impl ComponentGraph {
    pub fn successors(&self, id: usize) -> impl Iterator<Item = &ArArrow> {
        self.arrows.iter().filter(move |a| a.src == id)
    }

    pub fn predecessors(&self, id: usize) -> impl Iterator<Item = &ArArrow> {
        self.arrows.iter().filter(move |a| a.dst == id)
    }

    pub fn tau_inverse(&self, id: usize) -> Option<usize> {
        self.vertices
            .iter()
            .find(|v| v.tau == Some(id))
            .map(|v| v.id)
    }

    pub fn find(&self, udim_f: &[BigInt], label: Label) -> Option<usize> {
        self.vertices
            .iter()
            .find(|v| v.label == label && v.udim_f == udim_f)
            .map(|v| v.id)
    }

    pub fn projective_vertex(&self, point: PointId) -> Option<usize> {
        self.vertices
            .iter()
            .find(|v| v.kind.projective_point() == Some(point))
            .map(|v| v.id)
    }

    pub fn arrow(&self, src: usize, dst: usize) -> Option<&ArArrow> {
        self.arrows.iter().find(|a| a.src == src && a.dst == dst)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnitError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("max_sections must be at least 1")]
    ZeroSections,
    #[error("internal consistency error: inverse translate of vertex {source_id} has negative entries {vector}")]
    NegativeEntry { source_id: usize, vector: String },
    #[error("internal consistency error: inverse translate of non-injective vertex {source_id} has zero socle {vector}")]
    ZeroSocle { source_id: usize, vector: String },
    #[error("internal consistency error: vertex {existing} reappears as {vector} {label}")]
    Duplicate {
        existing: usize,
        vector: String,
        label: Label,
    },
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
    #[error("non-integral socle multiplicity at vertex {0}")]
    NonIntegralSocle(usize),
}

/// Valuation `(a, b)` of an arrow between modules with the given labels.
pub fn valuation(model: &AlgebraModel, src: Label, dst: Label) -> (u32, u32) {
    let p = model.p();
    let (ks, kd) = (model.kdim(src), model.kdim(dst));
    let a = if kd == p as u64 && ks == 1 { p } else { 1 };
    let b = if ks == p as u64 && kd == 1 { p } else { 1 };
    (a, b)
}

struct Knitter<'a> {
    model: &'a AlgebraModel,
    radicals: Vec<Option<RadicalInfo>>,
    injectives: Vec<InjectiveProfile>,
    vertices: Vec<ArVertex>,
    arrows: Vec<ArArrow>,
    sections: Vec<Vec<usize>>,
    placed: Vec<bool>,
    index: HashMap<(DimVec, Label), usize>,
}

impl<'a> Knitter<'a> {
    fn push_vertex(
        &mut self,
        udim_f: DimVec,
        label: Label,
        projective: Option<PointId>,
        tau: Option<usize>,
    ) -> Result<usize, KnitError> {
        let key = (udim_f.clone(), label);
        if let Some(&existing) = self.index.get(&key) {
            return Err(KnitError::Duplicate {
                existing,
                vector: format_vec(&udim_f),
                label,
            });
        }
        let injective = self
            .injectives
            .iter()
            .find(|pr| pr.label == label && pr.udim_f == udim_f)
            .map(|pr| pr.point);
        let id = self.vertices.len();
        let section = self.sections.len();
        self.vertices.push(ArVertex {
            id,
            section,
            kind: VertexKind::from_parts(projective, injective),
            label,
            udim: self.model.udim_of(&udim_f),
            udim_f,
            cd: None,
            vdim: None,
            tau,
        });
        self.sections.last_mut().unwrap().push(id);
        self.index.insert(key, id);
        Ok(id)
    }

    fn push_arrow(&mut self, src: usize, dst: usize) {
        let (a, b) = valuation(
            self.model,
            self.vertices[src].label,
            self.vertices[dst].label,
        );
        self.arrows.push(ArArrow { src, dst, a, b });
    }

    fn attach_projectives(&mut self) -> Result<(), KnitError> {
        let first = self.sections.len() == 1;
        loop {
            let mut attached = false;
            for j in 0..self.model.len() {
                if j == self.model.zero() || self.placed[j] {
                    continue;
                }
                let Some(rad) = &self.radicals[j] else {
                    continue;
                };
                let section = self.sections.last().unwrap();
                let Some(&src) = section.iter().find(|&&v| {
                    let v = &self.vertices[v];
                    v.label == rad.summand_label && v.udim_f == rad.summand_udim_f
                }) else {
                    continue;
                };
                if first && !self.model.is_hereditary(j) {
                    return Err(KnitError::Inconsistent(format!(
                        "projective at {} joins the first section but is not hereditary",
                        self.model.poset().name(j)
                    )));
                }
                let udim_f = self.model.projective_udim_f(j);
                let dst =
                    self.push_vertex(udim_f, self.model.projective_label(j), Some(j), None)?;
                self.placed[j] = true;
                self.push_arrow(src, dst);
                attached = true;
            }
            if !attached {
                return Ok(());
            }
        }
    }

    fn tau_inverse(&mut self, x: usize) -> Result<(), KnitError> {
        let n = self.model.len();
        let outgoing: Vec<ArArrow> = self.arrows.iter().filter(|a| a.src == x).copied().collect();
        let mut sum = vec![BigInt::zero(); n];
        for arrow in &outgoing {
            let b = BigInt::from(arrow.b);
            for (s, d) in sum.iter_mut().zip(&self.vertices[arrow.dst].udim_f) {
                *s += &b * d;
            }
        }
        for (s, d) in sum.iter_mut().zip(&self.vertices[x].udim_f) {
            *s -= d;
        }
        if sum.iter().any(|s| s.is_negative()) {
            return Err(KnitError::NegativeEntry {
                source_id: x,
                vector: format_vec(&sum),
            });
        }
        if sum[self.model.top()].is_zero() {
            return Err(KnitError::ZeroSocle {
                source_id: x,
                vector: format_vec(&sum),
            });
        }
        let label = self.vertices[x].label;
        let id = self.push_vertex(sum, label, None, Some(x))?;
        for arrow in outgoing {
            self.push_arrow(arrow.dst, id);
        }
        Ok(())
    }

    fn assign_cd(&mut self) -> Result<(), KnitError> {
        for v in &mut self.vertices {
            if let Some(j) = v.kind.projective_point() {
                v.cd = Some(self.model.projective_cd(j));
            }
        }
        for rad in self.radicals.iter().flatten() {
            let key = (rad.summand_udim_f.clone(), rad.summand_label);
            let Some(&id) = self.index.get(&key) else {
                continue;
            };
            let v = &mut self.vertices[id];
            match &v.cd {
                Some(cd) if *cd != rad.cd => {
                    return Err(KnitError::Inconsistent(format!(
                        "vertex {id} has coordinates {} and {}",
                        format_vec(cd),
                        format_vec(&rad.cd)
                    )))
                }
                _ => v.cd = Some(rad.cd.clone()),
            }
        }
        Ok(())
    }
}

pub fn knit_component(
    model: &AlgebraModel,
    max_sections: usize,
) -> Result<ComponentGraph, KnitError> {
    if max_sections == 0 {
        return Err(KnitError::ZeroSections);
    }
    let n = model.len();
    let top = model.top();
    let radicals = (0..n)
        .map(|j| {
            if j == top {
                Ok(None)
            } else {
                model.radical_info(j).map(Some)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut k = Knitter {
        model,
        radicals,
        injectives: model.injective_profiles(),
        vertices: Vec::new(),
        arrows: Vec::new(),
        sections: vec![Vec::new()],
        placed: vec![false; n],
        index: HashMap::new(),
    };
    k.push_vertex(
        model.projective_udim_f(top),
        model.projective_label(top),
        Some(top),
        None,
    )?;
    k.placed[top] = true;
    k.attach_projectives()?;

    let status = loop {
        let current = k.sections.last().unwrap().clone();
        if current.iter().all(|&v| k.vertices[v].kind.is_injective()) {
            break KnitStatus::Finite;
        }
        if k.sections.len() >= max_sections {
            break KnitStatus::TruncatedAtMaxSections;
        }
        k.sections.push(Vec::new());
        for x in current {
            if !k.vertices[x].kind.is_injective() {
                k.tau_inverse(x)?;
            }
        }
        k.attach_projectives()?;
    };
    k.assign_cd()?;

    Ok(ComponentGraph {
        flavor: model.flavor(),
        p: model.p(),
        point_names: model
            .poset()
            .points()
            .iter()
            .map(|pt| pt.name.clone())
            .collect(),
        max_sections,
        sections: k.sections,
        vertices: k.vertices,
        arrows: k.arrows,
        status,
    })
}

/// Fills in `vdim`, the dimension vector of the top-injective module
/// matched with each vertex: `c * udim_f(e_0 Λ) - udim_f` with `c` the
/// number of simple summands in the socle.
pub fn derive_v_level(
    model: &AlgebraModel,
    graph: &ComponentGraph,
) -> Result<ComponentGraph, KnitError> {
    let top = model.top();
    let hull = model.projective_udim_f(model.zero());
    let mut out = graph.clone();
    for v in &mut out.vertices {
        let c = Rat::new(v.udim_f[top].clone(), BigInt::from(model.hom_dim(top, top)));
        if !c.is_integer() {
            return Err(KnitError::NonIntegralSocle(v.id));
        }
        let c = c.to_integer();
        v.vdim = Some(
            hull.iter()
                .zip(&v.udim_f)
                .map(|(h, d)| &c * h - d)
                .collect(),
        );
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>) -> InvariantCheck {
    InvariantCheck {
        name,
        passed: failures.is_empty(),
        detail: failures.into_iter().next().unwrap_or_default(),
    }
}

/// Structural checks on a knitted component, independent of how it was
/// produced.
pub fn check_invariants(model: &AlgebraModel, graph: &ComponentGraph) -> Vec<InvariantCheck> {
    let n = model.len();
    let top = model.top();
    let mut out = Vec::new();
    let verts = &graph.vertices;

    let mut fails = Vec::new();
    for y in verts {
        let Some(x) = y.tau else { continue };
        let mut succ: Vec<usize> = graph.successors(x).map(|a| a.dst).collect();
        let mut pred: Vec<usize> = graph.predecessors(y.id).map(|a| a.src).collect();
        succ.sort_unstable();
        pred.sort_unstable();
        if succ != pred {
            fails.push(format!(
                "mesh at {}: successors {succ:?} vs predecessors {pred:?}",
                y.id
            ));
        }
        let mut lhs = vec![BigInt::zero(); n];
        for a in graph.successors(x) {
            for (s, d) in lhs.iter_mut().zip(&verts[a.dst].udim_f) {
                *s += BigInt::from(a.b) * d;
            }
        }
        let rhs: DimVec = verts[x]
            .udim_f
            .iter()
            .zip(&y.udim_f)
            .map(|(a, b)| a + b)
            .collect();
        if lhs != rhs {
            fails.push(format!(
                "mesh at {}: middle {} vs ends {}",
                y.id,
                format_vec(&lhs),
                format_vec(&rhs)
            ));
        }
    }
    out.push(check("mesh conservation", fails));

    let fails = graph
        .arrows
        .iter()
        .filter(|a| (a.a, a.b) != valuation(model, verts[a.src].label, verts[a.dst].label))
        .map(|a| format!("arrow {} -> {} has ({}, {})", a.src, a.dst, a.a, a.b))
        .collect();
    out.push(check("valuation rule", fails));

    let fails = verts
        .iter()
        .filter(|y| y.tau.is_some_and(|x| verts[x].label != y.label))
        .map(|y| format!("label changes along translate at {}", y.id))
        .collect();
    out.push(check("labels constant on orbits", fails));

    let mut fails = Vec::new();
    let mut seen = vec![false; n];
    for v in verts {
        let Some(j) = v.kind.projective_point() else {
            continue;
        };
        if seen[j] {
            fails.push(format!("projective at point {j} appears twice"));
        }
        seen[j] = true;
        if v.udim_f != model.projective_udim_f(j) || v.label != model.projective_label(j) {
            fails.push(format!("vertex {} is not the projective at {j}", v.id));
        }
        if v.tau.is_some() {
            fails.push(format!("projective vertex {} has a translate", v.id));
        }
    }
    for j in 0..n {
        if j != model.zero() && model.is_hereditary(j) {
            let placed = graph.projective_vertex(j).map(|v| verts[v].section);
            if placed != Some(1) {
                fails.push(format!(
                    "hereditary projective at {j} is not in the first section"
                ));
            }
        }
    }
    out.push(check("projectives", fails));

    let mut fails = Vec::new();
    for j in 0..n {
        if j == top {
            continue;
        }
        let Ok(rad) = model.radical_info(j) else {
            fails.push(format!("no radical data at {j}"));
            continue;
        };
        let k = model.kdim(rad.summand_label);
        if rad
            .summand_udim_f
            .iter()
            .any(|d| d % BigInt::from(k) != BigInt::zero())
        {
            fails.push(format!("radical summand at {j} not divisible by {k}"));
        }
        let mut expect = model.projective_udim_f(j);
        expect[j] -= BigInt::from(model.local_dim(j));
        let got: DimVec = rad
            .summand_udim_f
            .iter()
            .map(|d| d * BigInt::from(rad.multiplicity))
            .collect();
        if got != expect {
            fails.push(format!("radical multiplicity law fails at {j}"));
        }
        if let Some(pv) = graph.projective_vertex(j) {
            let preds: Vec<&ArArrow> = graph.predecessors(pv).collect();
            let ok = preds.len() == 1 && {
                let s = &verts[preds[0].src];
                s.udim_f == rad.summand_udim_f
                    && s.label == rad.summand_label
                    && preds[0].a == rad.multiplicity
            };
            if !ok {
                fails.push(format!(
                    "sink map of projective vertex {pv} is not its radical"
                ));
            }
        }
    }
    out.push(check("radical law", fails));

    let fails = verts
        .iter()
        .filter(|v| {
            let k = BigInt::from(model.kdim(v.label));
            v.udim_f.iter().any(|d| d % &k != BigInt::zero())
        })
        .map(|v| {
            format!(
                "vertex {} dimension not divisible by its endomorphism ring",
                v.id
            )
        })
        .collect();
    out.push(check("kdim divisibility", fails));

    let fails = verts
        .iter()
        .filter_map(|v| {
            let cd = v.cd.as_ref()?;
            let q = quadratic(model, cd);
            let want = rat(model.kdim(v.label) as i64);
            (q != want).then(|| {
                format!(
                    "vertex {}: q({}) = {q}, expected {want}",
                    v.id,
                    format_vec(cd)
                )
            })
        })
        .collect();
    out.push(check("quadratic form on coordinates", fails));

    let fails = verts
        .iter()
        .filter(|v| v.udim != model.udim_of(&v.udim_f))
        .map(|v| format!("vertex {} udim mismatch", v.id))
        .collect();
    out.push(check("udim from udimF", fails));

    let mut keys: Vec<(&DimVec, Label)> = verts.iter().map(|v| (&v.udim_f, v.label)).collect();
    keys.sort_by(|a, b| a.0.cmp(b.0).then((a.1 as u8).cmp(&(b.1 as u8))));
    let fails = keys
        .windows(2)
        .filter(|w| w[0] == w[1])
        .map(|w| format!("repeated vertex {} {}", format_vec(w[0].0), w[0].1))
        .collect();
    out.push(check("unique (udimF, label)", fails));

    let profiles = model.injective_profiles();
    let last = graph.sections.len();
    let mut fails = Vec::new();
    for v in verts {
        let marked = v.kind.injective_point();
        let matched = profiles
            .iter()
            .find(|pr| pr.udim_f == v.udim_f && pr.label == v.label)
            .map(|pr| pr.point);
        if marked != matched {
            fails.push(format!(
                "vertex {} injective marking disagrees with profiles",
                v.id
            ));
        }
        let has_next = graph.tau_inverse(v.id).is_some();
        let inj = v.kind.is_injective();
        if (inj && has_next) || (!inj && !has_next && v.section < last) {
            fails.push(format!(
                "vertex {} translate presence inconsistent with kind",
                v.id
            ));
        }
    }
    if graph.status == KnitStatus::Finite
        && !graph.sections[last - 1]
            .iter()
            .all(|&v| verts[v].kind.is_injective())
    {
        fails.push("finite status but the last section is not injective".into());
    }
    out.push(check("injectives and termination", fails));

    let mut fails = Vec::new();
    for (s, ids) in graph.sections.iter().enumerate() {
        for &id in ids {
            if verts[id].section != s + 1 {
                fails.push(format!("vertex {id} listed in section {}", s + 1));
            }
        }
    }
    for a in &graph.arrows {
        let (sa, sb) = (verts[a.src].section, verts[a.dst].section);
        if sb != sa && sb != sa + 1 {
            fails.push(format!("arrow {} -> {} skips sections", a.src, a.dst));
        }
    }
    if verts.windows(2).any(|w| w[0].section > w[1].section) {
        fails.push("vertex ids are not ordered by section".into());
    }
    out.push(check("section structure", fails));

    let fails = match derive_v_level(model, graph) {
        Err(e) => vec![e.to_string()],
        Ok(g) => g
            .vertices
            .iter()
            .filter(|v| {
                let vd = v.vdim.as_ref().unwrap();
                vd.iter().any(|x| x.is_negative()) || !vd[top].is_zero()
            })
            .map(|v| format!("vertex {} has an impossible top-injective partner", v.id))
            .collect(),
    };
    out.push(check("top-injective partners", fails));

    let fails = match knit_component(model, graph.max_sections) {
        Ok(again) if again == *graph => vec![],
        Ok(_) => vec!["second knit differs".into()],
        Err(e) => vec![e.to_string()],
    };
    out.push(check("deterministic ids", fails));

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_model;
    use crate::poset::{EquippedPoset, Point};
    use crate::vector::dim_vec;

    fn star(p: u32) -> EquippedPoset {
        EquippedPoset::new(
            p,
            vec![Point::strong("0"), Point::weak("w"), Point::strong("m")],
            &[(0, 1, p), (1, 2, p), (0, 2, p)],
        )
    }

    #[test]
    fn star_flavor_r() {
        let model = build_model(&star(2), Flavor::R).unwrap();
        let g = knit_component(&model, DEFAULT_MAX_SECTIONS).unwrap();
        assert_eq!(g.status, KnitStatus::Finite);
        assert_eq!(g.sections, vec![vec![0, 1], vec![2]]);
        let dims: Vec<DimVec> = g.vertices.iter().map(|v| v.udim_f.clone()).collect();
        assert_eq!(
            dims,
            vec![
                dim_vec(&[0, 0, 1]),
                dim_vec(&[0, 2, 2]),
                dim_vec(&[0, 2, 1])
            ]
        );
        assert_eq!(g.vertices[1].kind, VertexKind::ProjectiveInjective(1, 1));
        assert_eq!(g.vertices[2].kind, VertexKind::Injective(0));
        assert_eq!(g.arrow(0, 1).map(|a| (a.a, a.b)), Some((2, 1)));
        assert_eq!(g.arrow(1, 2).map(|a| (a.a, a.b)), Some((1, 2)));
        assert!(check_invariants(&model, &g).iter().all(|c| c.passed));
    }

    #[test]
    fn star_flavor_c() {
        let model = build_model(&star(2), Flavor::C).unwrap();
        let g = knit_component(&model, DEFAULT_MAX_SECTIONS).unwrap();
        let dims: Vec<DimVec> = g.vertices.iter().map(|v| v.udim_f.clone()).collect();
        assert_eq!(
            dims,
            vec![
                dim_vec(&[0, 0, 2]),
                dim_vec(&[0, 1, 2]),
                dim_vec(&[0, 2, 2])
            ]
        );
        assert_eq!(g.arrow(0, 1).map(|a| (a.a, a.b)), Some((1, 2)));
        assert_eq!(g.arrow(1, 2).map(|a| (a.a, a.b)), Some((2, 1)));
    }

    #[test]
    fn star_v_level() {
        let model = build_model(&star(2), Flavor::R).unwrap();
        let g = derive_v_level(&model, &knit_component(&model, 12).unwrap()).unwrap();
        let v: Vec<DimVec> = g.vertices.iter().map(|v| v.vdim.clone().unwrap()).collect();
        assert_eq!(
            v,
            vec![
                dim_vec(&[1, 2, 0]),
                dim_vec(&[2, 2, 0]),
                dim_vec(&[1, 0, 0])
            ]
        );
    }

    #[test]
    fn trivial_poset_is_one_vertex() {
        let pos = EquippedPoset::new(
            3,
            vec![Point::strong("0"), Point::strong("m")],
            &[(0, 1, 3)],
        );
        for flavor in [Flavor::R, Flavor::C] {
            let g = knit_component(&build_model(&pos, flavor).unwrap(), 12).unwrap();
            assert_eq!(g.vertices.len(), 1);
            assert_eq!(g.vertices[0].kind, VertexKind::ProjectiveInjective(1, 0));
            assert_eq!(g.status, KnitStatus::Finite);
        }
    }

    #[test]
    fn zero_sections_rejected() {
        let model = build_model(&star(2), Flavor::R).unwrap();
        assert_eq!(knit_component(&model, 0), Err(KnitError::ZeroSections));
    }
}
