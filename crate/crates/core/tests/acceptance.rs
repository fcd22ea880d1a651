//! Acceptance run: one line per criterion, non-zero exit on any failure.

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use eqposet_core::correspond::{
    check_table_correspondence, dim_f_r_to_c, pair_components, TableFixture,
};
use eqposet_core::enumerate::bounded_posets_up_to;
use eqposet_core::forms::quadratic;
use eqposet_core::io::read_poset;
use eqposet_core::knit::{check_invariants, knit_component, DEFAULT_MAX_SECTIONS};
use eqposet_core::oracle::module::ModuleRep;
use eqposet_core::oracle::{cyclic_oracle, verify, FieldSpec};
use eqposet_core::poset::is_slender;
use eqposet_core::vector::{dim_vec, rat_vec};
use eqposet_core::{
    build_model, AlgebraModel, ComponentGraph, EquippedPoset, Flavor, KnitStatus, Label, Point,
    Strength,
};

type Outcome = Result<String, String>;

fn fixtures_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(sub)
}

fn fixture_posets() -> Vec<(String, EquippedPoset)> {
    let mut paths: Vec<_> = std::fs::read_dir(fixtures_dir("posets"))
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "poset"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let poset = read_poset(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, poset)
        })
        .collect()
}

fn tower(p: u32) -> FieldSpec {
    match p {
        2 => FieldSpec::cyclic(2, 3, -1),
        _ => FieldSpec {
            omega: Some(2),
            ..FieldSpec::cyclic(3, 7, 3)
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn criterion_tables() -> Outcome {
    let start = Instant::now();
    let mut paths: Vec<_> = std::fs::read_dir(fixtures_dir("tables"))
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    let mut total = 0;
    for path in &paths {
        let fixture = TableFixture::load(path).map_err(|e| e.to_string())?;
        let report = check_table_correspondence(&fixture);
        ensure(report.passed(), || {
            format!("{}: {:?}", report.name, report.failures)
        })?;
        total += report.total;

        let mut broken = fixture.clone();
        broken.orbit[0].d[0][0] += 1;
        ensure(!check_table_correspondence(&broken).passed(), || {
            format!("{}: a perturbed vector still matches", fixture.name)
        })?;
    }
    ensure(paths.len() == 5, || {
        format!("expected 5 table fixtures, found {}", paths.len())
    })?;
    let chain = [Strength::Weak, Strength::Weak, Strength::Strong];
    ensure(
        dim_f_r_to_c(3, &chain, Label::Weak, &rat_vec(&[9, 21, 12])) == rat_vec(&[3, 7, 12])
            && dim_f_r_to_c(3, &chain, Label::Weak, &rat_vec(&[6, 15, 9])) == rat_vec(&[2, 5, 9]),
        || "spot values do not map".into(),
    )?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "5 fixtures, {total} vectors in {:?}",
        start.elapsed()
    ))
}

fn criterion_heredity() -> Outcome {
    let mut posets = 0;
    let mut points = 0;
    for p in [2, 3] {
        // Up to four interior points, so every poset with at most six points.
        for poset in bounded_posets_up_to(p, 4) {
            let mr = build_model(&poset, Flavor::R).map_err(|e| e.to_string())?;
            let mc = build_model(&poset, Flavor::C).map_err(|e| e.to_string())?;
            for i in 0..poset.len() {
                let (hr, hc) = (mr.is_hereditary(i), mc.is_hereditary(i));
                let slender = is_slender(&poset, &poset.up_set(i));
                ensure(hr == hc && hr == slender, || {
                    format!(
                        "{poset:?} point {}: R {hr} C {hc} slender {slender}",
                        poset.name(i)
                    )
                })?;
                points += 1;
            }
            posets += 1;
        }
    }
    Ok(format!("{posets} posets, {points} points"))
}

fn criterion_oracle() -> Outcome {
    let start = Instant::now();
    let posets = fixture_posets();
    let mut runs = 0;
    for (name, poset) in &posets {
        ensure(poset.len() <= 5, || {
            format!("{name} has more than 5 points")
        })?;
        for flavor in [Flavor::R, Flavor::C] {
            let report =
                verify(poset, flavor, &tower(poset.p())).map_err(|e| format!("{name}: {e}"))?;
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
            ensure(failed.is_empty(), || format!("{name} {flavor}: {failed:?}"))?;
            runs += 1;
        }
    }
    ensure(posets.len() >= 10, || {
        format!("only {} fixtures", posets.len())
    })?;
    ensure(
        posets.iter().any(|(_, p)| p.p() == 2) && posets.iter().any(|(_, p)| p.p() == 3),
        || "both p = 2 and p = 3 are needed".into(),
    )?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!(
        "{} posets, {runs} flavor runs in {:?}",
        posets.len(),
        start.elapsed()
    ))
}

/// Expected star component: (udimF, label, kind) per vertex and (src, dst, a, b) per arrow.
struct StarExpectation {
    vertices: Vec<(Vec<i64>, Label, &'static str)>,
    arrows: Vec<(usize, usize, u32, u32)>,
}

fn star_expectation(flavor: Flavor) -> StarExpectation {
    match flavor {
        Flavor::R => StarExpectation {
            vertices: vec![
                (vec![0, 0, 1], Label::Strong, "Projective"),
                (vec![0, 2, 2], Label::Weak, "ProjectiveInjective"),
                (vec![0, 2, 1], Label::Strong, "Injective"),
            ],
            arrows: vec![(0, 1, 2, 1), (1, 2, 1, 2)],
        },
        Flavor::C => StarExpectation {
            vertices: vec![
                (vec![0, 0, 2], Label::Strong, "Projective"),
                (vec![0, 1, 2], Label::Weak, "ProjectiveInjective"),
                (vec![0, 2, 2], Label::Strong, "Injective"),
            ],
            arrows: vec![(0, 1, 1, 2), (1, 2, 2, 1)],
        },
    }
}

fn criterion_star() -> Outcome {
    let poset =
        read_poset(fixtures_dir("posets").join("star_p2.poset")).map_err(|e| e.to_string())?;
    let (w, m) = (poset.index_of("w").unwrap(), poset.top());
    for flavor in [Flavor::R, Flavor::C] {
        let model = build_model(&poset, flavor).map_err(|e| e.to_string())?;
        let graph = knit_component(&model, DEFAULT_MAX_SECTIONS).map_err(|e| e.to_string())?;
        let want = star_expectation(flavor);
        ensure(graph.status == KnitStatus::Finite, || {
            format!("{flavor}: status {}", graph.status)
        })?;
        let got: Vec<_> = graph
            .vertices
            .iter()
            .map(|v| (v.udim_f.clone(), v.label, v.kind.name()))
            .collect();
        let expect: Vec<_> = want
            .vertices
            .iter()
            .map(|(d, l, k)| (dim_vec(d), *l, *k))
            .collect();
        ensure(got == expect, || format!("{flavor}: vertices {got:?}"))?;
        let arrows: Vec<_> = graph
            .arrows
            .iter()
            .map(|a| (a.src, a.dst, a.a, a.b))
            .collect();
        ensure(arrows == want.arrows, || {
            format!("{flavor}: arrows {arrows:?}")
        })?;

        // The same data from explicit modules over F_3 < F_9.
        let oracle = cyclic_oracle(&poset, flavor, &tower(2)).map_err(|e| e.to_string())?;
        let dims = |i| -> Vec<i64> {
            ModuleRep::projective(&oracle.system, i)
                .dims()
                .into_iter()
                .map(|d| d as i64)
                .collect()
        };
        let end = |i| oracle.hom_dim(i, i) as u32;
        let irr = oracle.hom_dim(m, w) as u32;
        let first = (irr / end(m), irr / end(w));
        let piece = |x: usize, y: usize| oracle.system.piece(x, y).map_or(0, |s| s.dim() as i64);
        let zero = poset.zero();
        // Top-injective module at 0: hom(0, j) copies of e_0 Λ minus the column Λ e_0.
        let injective: Vec<i64> = (0..poset.len())
            .map(|j| piece(zero, j) - piece(j, zero))
            .collect();
        let oracle_label = |i| {
            if end(i) as u64 == model.kdim(Label::Strong) {
                Label::Strong
            } else {
                Label::Weak
            }
        };
        let oracle_vertices = vec![
            (dims(m), oracle_label(m)),
            (dims(w), oracle_label(w)),
            (injective.clone(), oracle_label(m)),
        ];
        let knitted: Vec<_> = want
            .vertices
            .iter()
            .map(|(d, l, _)| (d.clone(), *l))
            .collect();
        ensure(oracle_vertices == knitted, || {
            format!("{flavor}: oracle vertices {oracle_vertices:?}")
        })?;
        let oracle_arrows = vec![(0, 1, first.0, first.1), (1, 2, first.1, first.0)];
        ensure(oracle_arrows == want.arrows, || {
            format!("{flavor}: oracle valuations {oracle_arrows:?}")
        })?;
        // The middle projective is also injective: its dimensions match the profile at w.
        let profile: Vec<i64> = (0..poset.len())
            .map(|j| piece(zero, w) / piece(zero, zero) * piece(zero, j) - piece(j, w))
            .collect();
        ensure(profile == dims(w), || {
            format!("{flavor}: P_w is not the injective at w")
        })?;
        // Mesh through the explicit dimensions.
        let mesh: Vec<i64> = dims(w)
            .iter()
            .zip(dims(m))
            .map(|(y, x)| first.1 as i64 * y - x)
            .collect();
        ensure(mesh == injective, || {
            format!("{flavor}: mesh gives {mesh:?}")
        })?;
    }
    Ok("both flavors: 3 vertices, valuations and dimensions confirmed over F_3 < F_9".into())
}

fn criterion_compare() -> Outcome {
    let (mut finite, mut truncated, mut pairs) = (0, 0, 0);
    for (name, poset) in fixture_posets() {
        let mr = build_model(&poset, Flavor::R).map_err(|e| e.to_string())?;
        let mc = build_model(&poset, Flavor::C).map_err(|e| e.to_string())?;
        let gr = knit_component(&mr, 12).map_err(|e| format!("{name}: {e}"))?;
        let gc = knit_component(&mc, 12).map_err(|e| format!("{name}: {e}"))?;
        let report = pair_components(&gr, &gc, &mr, &mc);
        ensure(report.verdict, || {
            format!("{name}: {:?}", report.first_failure())
        })?;
        for must in [
            "translation commutes",
            "valuation swap",
            "arrows preserved",
            "labels",
            "dimF law",
        ] {
            ensure(
                report.checks.iter().any(|c| c.name == must && c.passed),
                || format!("{name}: {must} missing"),
            )?;
        }
        // Paired sequences have different shapes across label changes.
        for a in &gr.arrows {
            let (sl, dl) = (gr.vertices[a.src].label, gr.vertices[a.dst].label);
            if sl != dl {
                let (rc_src, rc_dst) = (report.pairs[a.src].1, report.pairs[a.dst].1);
                let c = gc
                    .arrow(rc_src, rc_dst)
                    .ok_or_else(|| format!("{name}: arrow lost"))?;
                ensure((c.a, c.b) == (a.b, a.a) && a.a != a.b, || {
                    format!("{name}: same shape across labels")
                })?;
            }
        }
        pairs += report.pairs.len();
        match gr.status {
            KnitStatus::Finite => finite += 1,
            KnitStatus::TruncatedAtMaxSections => truncated += 1,
        }
    }
    Ok(format!(
        "{finite} finite, {truncated} truncated at 12 sections, {pairs} pairs"
    ))
}

/// Invariants re-derived here without the knitter's own checker.
fn independent_checks(model: &AlgebraModel, g: &ComponentGraph) -> Result<(), String> {
    let n = g.vertices.len();
    // Acyclic: Kahn's algorithm consumes every vertex.
    let mut indeg = vec![0; n];
    for a in &g.arrows {
        indeg[a.dst] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for a in g.arrows.iter().filter(|a| a.src == v) {
            indeg[a.dst] -= 1;
            if indeg[a.dst] == 0 {
                queue.push_back(a.dst);
            }
        }
    }
    ensure(seen == n, || "arrows contain a cycle".into())?;
    // Sections are disjoint and cover the vertices.
    let mut covered = HashSet::new();
    for (s, ids) in g.sections.iter().enumerate() {
        for &id in ids {
            ensure(covered.insert(id), || {
                format!("vertex {id} in two sections")
            })?;
            ensure(g.vertices[id].section == s + 1, || {
                format!("vertex {id} section mismatch")
            })?;
        }
    }
    ensure(covered.len() == n, || "sections miss a vertex".into())?;
    // Labels constant along translation orbits.
    for v in &g.vertices {
        if let Some(t) = v.tau {
            ensure(g.vertices[t].label == v.label, || {
                format!("label changes along tau at {}", v.id)
            })?;
        }
    }
    // Mesh from the sink side: X + tau^-1 X = sum over arrows into tau^-1 X.
    for z in g.vertices.iter() {
        let Some(x) = z.tau else { continue };
        let mut sum = vec![BigInt::zero(); z.udim_f.len()];
        for a in g.arrows.iter().filter(|a| a.dst == z.id) {
            for (s, d) in sum.iter_mut().zip(&g.vertices[a.src].udim_f) {
                *s += BigInt::from(a.a) * d;
            }
        }
        let lhs: Vec<BigInt> = z
            .udim_f
            .iter()
            .zip(&g.vertices[x].udim_f)
            .map(|(a, b)| a + b)
            .collect();
        ensure(lhs == sum, || format!("mesh fails at vertex {}", z.id))?;
    }
    // q-label law, divisibility and uniqueness.
    let mut keys = HashMap::new();
    for v in &g.vertices {
        let k = model.kdim(v.label);
        if let Some(cd) = &v.cd {
            let q = quadratic(model, cd);
            ensure(
                q == num_rational::BigRational::from_integer(k.into()),
                || format!("q = {q} at vertex {}", v.id),
            )?;
        }
        ensure(
            v.udim_f.iter().all(|d| (d % BigInt::from(k)).is_zero()),
            || format!("divisibility at {}", v.id),
        )?;
        ensure(
            keys.insert((v.udim_f.clone(), v.label), v.id).is_none(),
            || format!("duplicate at {}", v.id),
        )?;
    }
    Ok(())
}

fn criterion_invariants() -> Outcome {
    let mut components = 0;
    let mut vertices = 0;
    let mut posets: Vec<(String, EquippedPoset)> = fixture_posets();
    for p in [2, 3] {
        for (k, poset) in bounded_posets_up_to(p, 3).into_iter().enumerate() {
            posets.push((format!("enumerated p={p} #{k}"), poset));
        }
    }
    for (name, poset) in &posets {
        for flavor in [Flavor::R, Flavor::C] {
            let model = build_model(poset, flavor).map_err(|e| e.to_string())?;
            let g = knit_component(&model, 12).map_err(|e| format!("{name}: {e}"))?;
            for c in check_invariants(&model, &g) {
                ensure(c.passed, || {
                    format!("{name} {flavor}: {} {}", c.name, c.detail)
                })?;
            }
            independent_checks(&model, &g).map_err(|e| format!("{name} {flavor}: {e}"))?;
            components += 1;
            vertices += g.vertices.len();
        }
    }
    Ok(format!("{components} components, {vertices} vertices"))
}

fn triple_poset(p: u32, l: u32, m: u32, n: u32) -> EquippedPoset {
    let points = vec![
        Point::strong("0"),
        Point::weak("x"),
        Point::weak("y"),
        Point::weak("z"),
        Point::strong("m"),
    ];
    let mut rels = vec![(1, 2, l), (2, 3, m), (1, 3, n)];
    for x in 1..5 {
        rels.push((0, x, p));
    }
    for x in 1..4 {
        rels.push((x, 4, p));
    }
    EquippedPoset::new(p, points, &rels)
}

fn criterion_fuzz() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut accepted = 0;
    for p in [2u32, 3, 5] {
        for _ in 0..10_000 {
            let (l, m, n) = (
                rng.gen_range(1..=p),
                rng.gen_range(1..=p),
                rng.gen_range(1..=p),
            );
            let expect = n >= (l + m - 1).min(p);
            let got = triple_poset(p, l, m, n).validate().is_valid();
            ensure(got == expect, || {
                format!("p={p} ({l},{m},{n}): validate says {got}")
            })?;
            accepted += got as usize;
        }
    }
    Ok(format!("30000 triples, {accepted} accepted"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("table correspondence", criterion_tables),
        ("heredity equivalence", criterion_heredity),
        ("oracle equivalence", criterion_oracle),
        ("star knitting", criterion_star),
        ("flavor bijection", criterion_compare),
        ("structural invariants", criterion_invariants),
        ("axiom fuzzing", criterion_fuzz),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name}: {detail} [{took:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}. {name}: {detail} [{took:.2?}]", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
