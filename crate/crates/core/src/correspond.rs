//! The correspondence between the two flavors: the coordinate maps `s` and
//! `w`, the pairing of knitted components, and the table fixtures.

use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{Flavor, Label};
use crate::knit::{valuation, ComponentGraph};
use crate::poset::Strength;
use crate::vector::{format_vec, rat, to_rat_vec, Rat, RatVec};
use crate::AlgebraModel;

/// Multiplies weak coordinates by `p`.
pub fn map_s(p: u32, strengths: &[Strength], v: &[Rat]) -> RatVec {
    scale(strengths, v, Strength::Weak, rat(p as i64))
}

/// Divides strong coordinates by `p`.
pub fn map_w(p: u32, strengths: &[Strength], v: &[Rat]) -> RatVec {
    scale(
        strengths,
        v,
        Strength::Strong,
        Rat::new(1.into(), BigInt::from(p)),
    )
}

pub fn map_s_inv(p: u32, strengths: &[Strength], v: &[Rat]) -> RatVec {
    scale(
        strengths,
        v,
        Strength::Weak,
        Rat::new(1.into(), BigInt::from(p)),
    )
}

pub fn map_w_inv(p: u32, strengths: &[Strength], v: &[Rat]) -> RatVec {
    scale(strengths, v, Strength::Strong, rat(p as i64))
}

fn scale(strengths: &[Strength], v: &[Rat], which: Strength, by: Rat) -> RatVec {
    v.iter()
        .zip(strengths)
        .map(|(x, &s)| if s == which { x * &by } else { x.clone() })
        .collect()
}

/// Flavor-C base-field dimension vector predicted from flavor R.
pub fn dim_f_r_to_c(p: u32, strengths: &[Strength], label: Label, v: &[Rat]) -> RatVec {
    match label {
        Label::Strong => map_w_inv(p, strengths, v),
        Label::Weak => map_s_inv(p, strengths, v),
    }
}

/// Flavor-C `udim` predicted from flavor R.
pub fn udim_r_to_c(p: u32, strengths: &[Strength], label: Label, v: &[Rat]) -> RatVec {
    match label {
        Label::Strong => map_s(p, strengths, v),
        Label::Weak => map_w(p, strengths, v),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    /// `(flavor R vertex, flavor C vertex)` in R id order.
    pub pairs: Vec<(usize, usize)>,
    pub checks: Vec<CheckOutcome>,
    pub verdict: bool,
}

impl PairingReport {
    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

struct Checks(Vec<CheckOutcome>);

impl Checks {
    fn record(&mut self, name: &'static str, witness: Option<String>) {
        self.0.push(CheckOutcome {
            name,
            passed: witness.is_none(),
            witness,
        });
    }
}

/// Matches the flavor-R component with the flavor-C one, anchoring at
/// projectives and following inverse translates, then checks that the
/// matching preserves everything it should.
pub fn pair_components(
    gr: &ComponentGraph,
    gc: &ComponentGraph,
    mr: &AlgebraModel,
    mc: &AlgebraModel,
) -> PairingReport {
    let mut checks = Checks(Vec::new());
    let p = mr.p();
    let strengths = mr.poset().strengths();

    let flavors_ok = gr.flavor == Flavor::R && gc.flavor == Flavor::C && mr.poset() == mc.poset();
    checks.record(
        "flavors",
        (!flavors_ok).then(|| "expected an R component and a C component of one poset".into()),
    );

    let shape_r: Vec<usize> = gr.sections.iter().map(Vec::len).collect();
    let shape_c: Vec<usize> = gc.sections.iter().map(Vec::len).collect();
    let shape_witness = if gr.status != gc.status {
        Some(format!("status {} vs {}", gr.status, gc.status))
    } else if shape_r != shape_c {
        Some(format!("section sizes {shape_r:?} vs {shape_c:?}"))
    } else {
        None
    };
    checks.record("section structure", shape_witness);

    let mut partner: Vec<Option<usize>> = vec![None; gr.vertices.len()];
    let mut anchor_fail = None;
    let mut tau_fail = None;
    for v in &gr.vertices {
        let found = if let Some(j) = v.kind.projective_point() {
            let c = gc.projective_vertex(j);
            if c.is_none() && anchor_fail.is_none() {
                anchor_fail = Some(format!(
                    "projective at {} has no flavor-C partner",
                    mr.poset().name(j)
                ));
            }
            c
        } else if let Some(x) = v.tau {
            let c = partner[x].and_then(|cx| gc.tau_inverse(cx));
            if c.is_none() && tau_fail.is_none() {
                tau_fail = Some(format!(
                    "vertex {} is an inverse translate with no partner",
                    v.id
                ));
            }
            c
        } else {
            None
        };
        partner[v.id] = found;
    }
    let mut used = vec![false; gc.vertices.len()];
    let mut bijection_fail = None;
    for (r, c) in partner.iter().enumerate() {
        match c {
            Some(c) if used[*c] => {
                bijection_fail.get_or_insert(format!("C vertex {c} matched twice"));
            }
            Some(c) => used[*c] = true,
            None => {
                bijection_fail.get_or_insert(format!("R vertex {r} unmatched"));
            }
        }
    }
    if let Some(c) = used.iter().position(|u| !u) {
        bijection_fail.get_or_insert(format!("C vertex {c} unmatched"));
    }
    checks.record("projective anchors", anchor_fail);
    checks.record("bijection", bijection_fail);

    let pairs: Vec<(usize, usize)> = partner
        .iter()
        .enumerate()
        .filter_map(|(r, c)| c.map(|c| (r, c)))
        .collect();

    let mut kind_fail = None;
    let mut label_fail = None;
    let mut dim_fail = None;
    let mut udim_fail = None;
    let mut tau_comm_fail = tau_fail;
    for &(r, c) in &pairs {
        let (vr, vc) = (&gr.vertices[r], &gc.vertices[c]);
        if vr.kind != vc.kind || vr.section != vc.section {
            kind_fail.get_or_insert(format!(
                "R vertex {r} is {:?} in section {}, C vertex {c} is {:?} in section {}",
                vr.kind, vr.section, vc.kind, vc.section
            ));
        }
        if vr.label != vc.label {
            label_fail.get_or_insert(format!(
                "R vertex {r} is {}, C vertex {c} is {}",
                vr.label, vc.label
            ));
        }
        let want = dim_f_r_to_c(p, &strengths, vr.label, &to_rat_vec(&vr.udim_f));
        if want != to_rat_vec(&vc.udim_f) {
            dim_fail.get_or_insert(format!(
                "R vertex {r} {} predicts {}, C vertex {c} has {}",
                format_vec(&vr.udim_f),
                format_vec(&want),
                format_vec(&vc.udim_f)
            ));
        }
        let want = udim_r_to_c(p, &strengths, vr.label, &vr.udim);
        if want != vc.udim {
            udim_fail.get_or_insert(format!(
                "R vertex {r} udim {} predicts {}, C vertex {c} has {}",
                format_vec(&vr.udim),
                format_vec(&want),
                format_vec(&vc.udim)
            ));
        }
        let tr = vr.tau.and_then(|x| partner[x]);
        if tr != vc.tau {
            tau_comm_fail.get_or_insert(format!(
                "translate of R vertex {r} pairs to {tr:?}, C vertex {c} has translate {:?}",
                vc.tau
            ));
        }
    }
    checks.record("kinds", kind_fail);
    checks.record("labels", label_fail);
    checks.record("dimF law", dim_fail);
    checks.record("udim law", udim_fail);
    checks.record("translation commutes", tau_comm_fail);

    let mut arrow_fail = None;
    let mut swap_fail = None;
    if gr.arrows.len() != gc.arrows.len() {
        arrow_fail = Some(format!(
            "{} R arrows vs {} C arrows",
            gr.arrows.len(),
            gc.arrows.len()
        ));
    }
    for a in &gr.arrows {
        let (Some(cs), Some(cd)) = (partner[a.src], partner[a.dst]) else {
            continue;
        };
        let Some(ac) = gc.arrow(cs, cd) else {
            arrow_fail.get_or_insert(format!("R arrow {} -> {} has no C image", a.src, a.dst));
            continue;
        };
        let c_rule = valuation(mc, gc.vertices[cs].label, gc.vertices[cd].label);
        if (ac.a, ac.b) != (a.b, a.a) || (ac.a, ac.b) != c_rule {
            swap_fail.get_or_insert(format!(
                "R arrow {} -> {} has ({}, {}), C arrow {cs} -> {cd} has ({}, {})",
                a.src, a.dst, a.a, a.b, ac.a, ac.b
            ));
        }
    }
    checks.record("arrows preserved", arrow_fail);
    checks.record("valuation swap", swap_fail);

    let verdict = checks.0.iter().all(|c| c.passed);
    PairingReport {
        pairs,
        checks: checks.0,
        verdict,
    }
}

/// Flips the label of one vertex. A hook for negative controls.
pub fn corrupt_label(graph: &mut ComponentGraph, id: usize) {
    if let Some(v) = graph.vertices.get_mut(id) {
        v.label = match v.label {
            Label::Weak => Label::Strong,
            Label::Strong => Label::Weak,
        };
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct TableOrbit {
    pub label: Label,
    /// Base-field dimension vectors on the first side, in orbit order.
    pub c: Vec<Vec<i64>>,
    /// Their counterparts on the second side, position by position.
    pub d: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct TableFixture {
    pub name: String,
    pub p: u32,
    pub strengths: Vec<Strength>,
    pub orbit: Vec<TableOrbit>,
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("malformed fixture {0}: {1}")]
    Toml(String, toml::de::Error),
}

impl TableFixture {
    pub fn parse(name: &str, text: &str) -> Result<Self, FixtureError> {
        toml::from_str(text).map_err(|e| FixtureError::Toml(name.into(), e))
    }

    pub fn load(path: &Path) -> Result<Self, FixtureError> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io(shown.clone(), e))?;
        Self::parse(&shown, &text)
    }

    pub fn vector_count(&self) -> usize {
        self.orbit.iter().map(|o| o.c.len()).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub name: String,
    pub total: usize,
    pub matched: usize,
    pub failures: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.matched == self.total
    }
}

/// Applies the dimension-vector law to every first-side vector and compares
/// with the vector recorded at the same position on the second side.
pub fn check_table_correspondence(fixture: &TableFixture) -> TableReport {
    let p = fixture.p;
    let s = &fixture.strengths;
    let mut failures = Vec::new();
    let mut total = 0;
    let mut matched = 0;
    for (k, orbit) in fixture.orbit.iter().enumerate() {
        if orbit.c.len() != orbit.d.len() {
            failures.push(format!(
                "orbit {k}: {} vs {} entries",
                orbit.c.len(),
                orbit.d.len()
            ));
        }
        for (pos, (c, d)) in orbit.c.iter().zip(&orbit.d).enumerate() {
            total += 1;
            let cv: RatVec = c.iter().map(|&x| rat(x)).collect();
            let dv: RatVec = d.iter().map(|&x| rat(x)).collect();
            if cv.len() != s.len() || dv.len() != s.len() {
                failures.push(format!("orbit {k} position {pos}: wrong length"));
                continue;
            }
            let got = dim_f_r_to_c(p, s, orbit.label, &cv);
            if got == dv {
                matched += 1;
            } else {
                failures.push(format!(
                    "orbit {k} position {pos}: {} maps to {}, table has {}",
                    format_vec(&cv),
                    format_vec(&got),
                    format_vec(&dv)
                ));
            }
        }
    }
    TableReport {
        name: fixture.name.clone(),
        total,
        matched,
        failures,
    }
}
