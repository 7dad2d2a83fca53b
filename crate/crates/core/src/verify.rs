//! The property suite: re-runs every module-level invariant for a scenario
//! and reports each one, including the negative controls (a trivial action,
//! a triangle-violating table, tampered bridge weights).

use crate::action::{ActionKind, Point, ProperVerdict};
use crate::bridge::BridgeAtlas;
use crate::error::Result;
use crate::extreal::ExtReal;
use crate::group::{coset_enumeration, subgroup_membership, GroupDescriptor, GroupElement};
use crate::koszul::{koszul_truncate, averaged_pseudometric, orbitwise_augment, verify_fundamental_set};
use crate::metric::{
    check_axioms, check_invariance, combine, enumerate_ball, Combine, Pseudometric,
};
use crate::pipeline::{run_pipeline, PipelineOutput};
use crate::report::{Detail, PropertyReport, StepStatus, VerifySuiteReport};
use crate::scenario::{Scenario, ScenarioConfig};
use num::{BigRational, One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

struct Suite {
    properties: Vec<PropertyReport>,
}

impl Suite {
    fn record(&mut self, module: &str, property: &str, outcome: Result<Option<String>>) {
        let (status, witness) = match outcome {
            Ok(None) => (StepStatus::Pass, None),
            Ok(Some(w)) => (StepStatus::Fail, Some(w)),
            Err(e) => (StepStatus::Fail, Some(e.to_string())),
        };
        self.properties.push(PropertyReport {
            module: module.into(),
            property: property.into(),
            status,
            details: Vec::new(),
            witness,
        });
    }

    fn skip(&mut self, module: &str, property: &str, reason: &str) {
        self.properties.push(PropertyReport {
            module: module.into(),
            property: property.into(),
            status: StepStatus::Skipped,
            details: vec![Detail {
                name: "reason".into(),
                value: reason.into(),
            }],
            witness: None,
        });
    }
}

pub fn verify_suite(config: &ScenarioConfig) -> Result<VerifySuiteReport> {
    let mut suite = Suite { properties: Vec::new() };
    let out = run_pipeline(config)?;
    let failed_pipeline = out.final_metric.is_none();

    group_properties(&mut suite, config, &out);
    action_properties(&mut suite, config, &out.scenario);
    negative_controls(&mut suite);

    if failed_pipeline {
        suite.record(
            "pipeline",
            "construction",
            Ok(Some(format!(
                "pipeline did not produce a witness (verdict {:?})",
                out.report.verdict
            ))),
        );
    } else {
        koszul_properties(&mut suite, config, &out);
        stick_properties(&mut suite, config, &out)?;
        bridge_properties(&mut suite, config, &out)?;
        metric_properties(&mut suite, config, &out)?;
        isogroup_properties(&mut suite, &out);
        determinism_property(&mut suite, config);
    }

    let passed = suite
        .properties
        .iter()
        .all(|p| p.status != StepStatus::Fail);
    Ok(VerifySuiteReport {
        schema: 1,
        scenario: config.scenario.clone(),
        seed: config.seed,
        properties: suite.properties,
        passed,
    })
}

fn group_properties(suite: &mut Suite, config: &ScenarioConfig, out: &PipelineOutput) {
    let group = &out.scenario.action.group;
    suite.record("group", "element-algebra", (|| {
        let ball = group.word_ball(3, config.budget)?;
        let id = group.identity();
        for g in ball.iter().take(32) {
            if g.mul(&g.inv()) != id {
                return Ok(Some(format!("{g} * {g}^-1 != e")));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..64 {
            let a = ball.choose(&mut rng).unwrap();
            let b = ball.choose(&mut rng).unwrap();
            let c = ball.choose(&mut rng).unwrap();
            if a.mul(b).mul(c) != a.mul(&b.mul(c)) {
                return Ok(Some(format!("associativity fails on ({a},{b},{c})")));
            }
        }
        Ok(None)
    })());

    match group.family {
        crate::group::GroupFamily::Lattice { rank } if rank <= 2 => {
            suite.record("group", "lattice-ball-count", (|| {
                let std = GroupDescriptor::standard_lattice(rank);
                for l in 0..=4i64 {
                    let ball = std.word_ball(l as u32, config.budget)?;
                    let mut count = 0u64;
                    match rank {
                        1 => {
                            for x in -l..=l {
                                if x.abs() <= l {
                                    count += 1;
                                }
                            }
                        }
                        _ => {
                            for x in -l..=l {
                                for y in -l..=l {
                                    if x.abs() + y.abs() <= l {
                                        count += 1;
                                    }
                                }
                            }
                        }
                    }
                    if ball.len() as u64 != count {
                        return Ok(Some(format!(
                            "|ball({l})| = {} but grid count {count}",
                            ball.len()
                        )));
                    }
                }
                Ok(None)
            })());
        }
        _ => suite.skip("group", "lattice-ball-count", "non-lattice scenario"),
    }

    if let Some(atlas) = &out.atlas {
        let subgroup = atlas.subgroup.clone();
        let group = group.clone();
        let budget = config.budget;
        suite.record("group", "coset-reps-distinct-covering", (|| {
            let reps = coset_enumeration(&group, &subgroup, 5, budget)?;
            for (i, a) in reps.reps.iter().enumerate() {
                for b in reps.reps.iter().skip(i + 1) {
                    if subgroup_membership(&subgroup, &a.inv().mul(b), budget)? {
                        return Ok(Some(format!("representatives {a} and {b} share a coset")));
                    }
                }
            }
            if reps.exhausted {
                for e in group.word_ball(3, budget)? {
                    let covered = reps
                        .reps
                        .iter()
                        .map(|r| subgroup_membership(&subgroup, &r.inv().mul(&e), budget))
                        .collect::<Result<Vec<_>>>()?
                        .into_iter()
                        .any(|b| b);
                    if !covered {
                        return Ok(Some(format!("{e} not covered by the representatives")));
                    }
                }
            }
            Ok(None)
        })());
    }
}

fn action_properties(suite: &mut Suite, config: &ScenarioConfig, scenario: &Scenario) {
    let action = &scenario.action;
    let window = &scenario.window;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xac710);

    suite.record("action", "transporter-inverse-symmetry", (|| {
        for _ in 0..16 {
            let a: Vec<Point> = (0..2)
                .map(|_| window.choose(&mut rng).unwrap().clone())
                .collect();
            let b: Vec<Point> = (0..2)
                .map(|_| window.choose(&mut rng).unwrap().clone())
                .collect();
            let t_ab = action.transporter(&a, &b)?;
            let t_ba = action.transporter(&b, &a)?;
            let (Ok(s_ab), Ok(s_ba)) = (t_ab.exact_set(), t_ba.exact_set()) else {
                return Ok(Some("transporter not exact".into()));
            };
            let mut inv: Vec<GroupElement> = s_ba.elements.iter().map(|g| g.inv()).collect();
            inv.sort_by_cached_key(|e| e.norm_key());
            if s_ab.elements != inv {
                return Ok(Some(format!("asymmetry on A={a:?} B={b:?}")));
            }
        }
        Ok(None)
    })());

    let fset = &scenario.fset_points;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0xf0f0);
    suite.record("action", "transporter-triangle-containment", (|| {
        for _ in 0..8 {
            let a: Vec<Point> = (0..2)
                .map(|_| window.choose(&mut rng).unwrap().clone())
                .collect();
            let b: Vec<Point> = (0..2)
                .map(|_| window.choose(&mut rng).unwrap().clone())
                .collect();
            let g_ab = action.transporter(&a, &b)?.exact_set()?.elements.clone();
            let g_af = action.transporter(&a, fset)?.exact_set()?.elements.clone();
            let g_bf = action.transporter(&b, fset)?.exact_set()?.elements.clone();
            for g in &g_ab {
                let found = g_bf
                    .iter()
                    .any(|p| g_af.iter().any(|q| p.inv().mul(q) == *g));
                if !found {
                    return Ok(Some(format!("{g} outside the product bound")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("action", "stabilizer-closure", (|| {
        let x = window.first().cloned().expect("nonempty window");
        let t = action.transporter(std::slice::from_ref(&x), std::slice::from_ref(&x))?;
        let stab = t.exact_set()?.elements.clone();
        for g in &stab {
            if !stab.contains(&g.inv()) {
                return Ok(Some(format!("stabilizer missing inverse of {g}")));
            }
            for h in &stab {
                if !stab.contains(&g.mul(h)) {
                    return Ok(Some(format!("stabilizer missing {g}*{h}")));
                }
            }
        }
        Ok(None)
    })());
}

fn negative_controls(suite: &mut Suite) {
    suite.record("action", "trivial-action-rejected", (|| {
        let action = crate::action::ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::TrivialOnLabels { count: 1 },
        );
        let report = action.check_proper(&[Point::Labeled(0)])?;
        if report.verdict == ProperVerdict::NotProper && report.witness.is_some() {
            Ok(None)
        } else {
            Ok(Some("trivial action was not flagged".into()))
        }
    })());

    suite.record("metric", "triangle-violation-detected", (|| {
        let q = |n: i64| BigRational::from_integer(n.into());
        let bad = Pseudometric::from_table(vec![
            vec![q(0), q(1), q(3)],
            vec![q(1), q(0), q(1)],
            vec![q(3), q(1), q(0)],
        ]);
        let w = vec![Point::Labeled(0), Point::Labeled(1), Point::Labeled(2)];
        let rep = check_axioms(&bad, &w, None);
        if !rep.passed && rep.counterexample.is_some() {
            Ok(None)
        } else {
            Ok(Some("triangle violation went undetected".into()))
        }
    })());
}

fn koszul_properties(suite: &mut Suite, config: &ScenarioConfig, out: &PipelineOutput) {
    let scenario = &out.scenario;
    let action = &scenario.action;
    let window = &scenario.window;
    let gens = action.group.generators.clone();

    suite.record("koszul", "average-invariance", (|| {
        let fset = verify_fundamental_set(action, &scenario.fset_points, window)?;
        let ki = koszul_truncate(&scenario.base, &fset, window, scenario.window_is_whole_space)?;
        let d2 = averaged_pseudometric(&ki, action)?.cached_on_window(window, config.budget)?;
        let inv = check_invariance(&d2, action, window, &gens)?;
        if !inv.passed {
            return Ok(inv.witness);
        }
        let ax = check_axioms(&d2, window, Some((config.seed, config.sample_pairs)));
        if !ax.passed {
            return Ok(ax.counterexample);
        }
        // The average of a metric stays a metric.
        if scenario.base.flags.claims_compatible {
            for (i, x) in window.iter().enumerate() {
                for y in window.iter().skip(i + 1) {
                    if d2.eval(x, y).is_zero() {
                        return Ok(Some(format!("averaged metric vanishes on ({x},{y})")));
                    }
                }
            }
        }
        Ok(None)
    })());

    suite.record("koszul", "truncation-bounds", (|| {
        let fset = verify_fundamental_set(action, &scenario.fset_points, window)?;
        let ki = koszul_truncate(&scenario.base, &fset, window, scenario.window_is_whole_space)?;
        for x in window {
            for y in window {
                let t = ki.truncated.eval(x, y);
                if t > scenario.base.eval(x, y) {
                    return Ok(Some(format!("d'({x},{y}) exceeds the base")));
                }
                let off_f =
                    !fset.points.contains(x) && !fset.points.contains(y);
                if off_f && !t.is_zero() {
                    return Ok(Some(format!("d'({x},{y}) nonzero off F")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("koszul", "augment-dominates", (|| {
        let aug = orbitwise_augment(&out
            .scenario
            .base
            .clone(), action);
        for x in window.iter().take(12) {
            for y in window.iter().take(12) {
                if aug.eval(x, y) < scenario.base.eval(x, y) {
                    return Ok(Some(format!("augmented value below base at ({x},{y})")));
                }
            }
        }
        Ok(None)
    })());
}

fn stick_properties(
    suite: &mut Suite,
    config: &ScenarioConfig,
    out: &PipelineOutput,
) -> Result<()> {
    let Some(stick) = &out.stick else { return Ok(()) };
    let scenario = &out.scenario;
    let window = &scenario.window;
    let gens = scenario.action.group.generators.clone();
    let d_stick = match &out.d_stick {
        Some(d) => d.clone(),
        None => stick
            .pseudometric(1 << 24)?
            .cached_on_window(window, config.budget)?,
    };
    let base = &stick.base;
    let partition = stick.islands(window)?;

    suite.record("stick", "dominates-base", (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x571c);
        for _ in 0..config.sample_pairs.min(1000) {
            let x = window.choose(&mut rng).unwrap();
            let y = window.choose(&mut rng).unwrap();
            if d_stick.eval(x, y) < base.eval(x, y) {
                return Ok(Some(format!("d'({x},{y}) below base")));
            }
        }
        Ok(None)
    })());

    suite.record("stick", "restricts-on-translates", (|| {
        let mut pairs = 0u64;
        for (i, x) in window.iter().enumerate() {
            let tx = stick.translates_through(x)?;
            for y in window.iter().skip(i + 1) {
                let ty = stick.translates_through(y)?;
                if tx.iter().any(|g| ty.contains(g)) {
                    pairs += 1;
                    if d_stick.eval(x, y) != base.eval(x, y) {
                        return Ok(Some(format!("in-translate pair ({x},{y}) disagrees")));
                    }
                }
            }
        }
        if pairs == 0 {
            return Ok(None);
        }
        Ok(None)
    })());

    suite.record("stick", "finite-iff-same-island", (|| {
        for (i, x) in window.iter().enumerate() {
            for y in window.iter().skip(i) {
                let finite = d_stick.eval(x, y).is_finite();
                let same = partition.id_of(x) == partition.id_of(y);
                if finite != same {
                    return Ok(Some(format!("({x},{y}): finite={finite} same-island={same}")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("stick", "invariance", (|| {
        let rep = check_invariance(&d_stick, &scenario.action, window, &gens)?;
        Ok(rep.witness)
    })());

    suite.record("stick", "path-length-bound", (|| {
        let eps = stick.epsilon.clone().unwrap_or_else(BigRational::one);
        let center = stick.fset.points[0].clone();
        let d_plain = stick.pseudometric(1 << 24)?;
        for r in &config.ball_radii {
            let radius = ExtReal::from_int(u64::from(*r));
            let ball = enumerate_ball(&d_plain, &center, &radius, config.budget)?;
            for (p, _, hops) in &ball.points {
                let bound = BigRational::from_integer((2 * i64::from(*r)).into()) / &eps
                    + BigRational::one();
                if BigRational::from_integer((*hops).into()) >= bound {
                    return Ok(Some(format!(
                        "path to {p} uses {hops} hops at radius {r} (bound {bound})"
                    )));
                }
            }
        }
        Ok(None)
    })());

    suite.record("stick", "island-invariance", (|| {
        for g in &gens {
            for (i, x) in window.iter().enumerate() {
                let gx = scenario.action.apply(g, x)?;
                if partition.id_of(&gx).is_none() {
                    continue;
                }
                for y in window.iter().skip(i + 1) {
                    let gy = scenario.action.apply(g, y)?;
                    if partition.id_of(&gy).is_none() {
                        continue;
                    }
                    let before = partition.id_of(x) == partition.id_of(y);
                    let after = partition.id_of(&gx) == partition.id_of(&gy);
                    if before != after {
                        return Ok(Some(format!(
                            "island relation not preserved by {g} on ({x},{y})"
                        )));
                    }
                }
            }
        }
        Ok(None)
    })());

    Ok(())
}

/// The bridge contract alone, for callers that time it: invariance,
/// universal finiteness, ball coincidence below radius 1, finite balls with
/// the bridge-count bound, path optimality, and tamper detection.
pub fn bridge_contract_report(
    config: &ScenarioConfig,
    out: &PipelineOutput,
) -> Result<Vec<PropertyReport>> {
    let mut suite = Suite { properties: Vec::new() };
    bridge_properties(&mut suite, config, out)?;
    Ok(suite.properties)
}

fn bridge_properties(
    suite: &mut Suite,
    config: &ScenarioConfig,
    out: &PipelineOutput,
) -> Result<()> {
    let Some(atlas) = &out.atlas else { return Ok(()) };
    let scenario = &out.scenario;
    let window = &scenario.window;
    let gens = scenario.action.group.generators.clone();
    let stick = &atlas.stick;
    let d_stick = match &out.d_stick {
        Some(d) => d.clone(),
        None => stick
            .pseudometric(1 << 24)?
            .cached_on_window(window, config.budget)?,
    };
    let d_bridge = match &out.d_bridge {
        Some(d) => d.clone(),
        None => atlas
            .pseudometric(1 << 24)?
            .cached_on_window(window, config.budget)?,
    };
    let partition = stick.islands(window)?;

    suite.record("bridge", "invariance", (|| {
        let rep = check_invariance(&d_bridge, &scenario.action, window, &gens)?;
        Ok(rep.witness)
    })());

    suite.record("bridge", "finiteness", (|| {
        for (i, x) in window.iter().enumerate() {
            for y in window.iter().skip(i) {
                if !d_bridge.eval(x, y).is_finite() {
                    return Ok(Some(format!("d_B({x},{y}) infinite")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("bridge", "ball-coincidence-below-one", (|| {
        let half = ExtReal::from_ratio(1, 2);
        for x in window {
            for y in window {
                let in_bridge_ball = d_bridge.eval(x, y) < half;
                let in_stick_ball = d_stick.eval(x, y) < half
                    && partition.id_of(x) == partition.id_of(y);
                if in_bridge_ball != in_stick_ball {
                    return Ok(Some(format!("balls of radius 1/2 disagree at ({x},{y})")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("bridge", "balls-finite-with-bound", (|| {
        let center = stick.fset.points[0].clone();
        let mut last = 0usize;
        for r in &config.ball_radii {
            let settled = atlas.ball(&center, &ExtReal::from_int(u64::from(*r)))?;
            if settled.len() < last {
                return Ok(Some(format!("|B({center},{r})| shrank")));
            }
            last = settled.len();
        }
        Ok(None)
    })());

    suite.record("bridge", "path-optimality", (|| {
        let center = stick.fset.points[0].clone();
        let radius = ExtReal::from_ratio(3, 2);
        let settled = atlas.ball(&center, &radius)?;
        let brute = brute_force_bridge_distances(atlas, &center, &radius, 4)?;
        for s in &settled {
            match brute.get(&s.point) {
                Some(v) if *v == s.dist => {}
                Some(v) => {
                    return Ok(Some(format!(
                        "d_B({center},{}) = {} but brute-force path search finds {v}",
                        s.point, s.dist
                    )))
                }
                None => {
                    return Ok(Some(format!(
                        "{} settled at {} but unreachable by brute-force search",
                        s.point, s.dist
                    )))
                }
            }
        }
        for (p, v) in &brute {
            if *v < radius && !settled.iter().any(|s| s.point == *p) {
                return Ok(Some(format!("brute-force reaches {p} at {v} but the ball misses it")));
            }
        }
        Ok(None)
    })());

    if atlas.max_weight() == 0 {
        suite.skip("bridge", "tamper-detection", "single island, no bridges to tamper with");
    } else {
        suite.record("bridge", "tamper-detection", (|| {
            let tampered = atlas
                .clone()
                .with_weight_scale(BigRational::new(1.into(), 4.into()));
            let d_t = tampered.pseudometric(1 << 24)?;
            let half = ExtReal::from_ratio(1, 2);
            for x in window {
                for y in window {
                    let in_bridge_ball = d_t.eval(x, y) < half;
                    let in_stick_ball = d_stick.eval(x, y) < half
                        && partition.id_of(x) == partition.id_of(y);
                    if in_bridge_ball != in_stick_ball {
                        return Ok(None); // the check caught the tampering
                    }
                }
            }
            Ok(Some("tampered weights were not detected".into()))
        })());
    }

    Ok(())
}

/// Brute-force minimum d-length over explicit mixed paths of at most
/// `max_edges` edges, pruned at the radius.
fn brute_force_bridge_distances(
    atlas: &BridgeAtlas,
    start: &Point,
    radius: &ExtReal,
    max_edges: u32,
) -> Result<BTreeMap<Point, ExtReal>> {
    let ExtReal::Finite(rq) = radius else {
        return Err(crate::error::Error::usage("finite radius required"));
    };
    let weight_cap = rq.floor().to_integer().to_usize().unwrap_or(0).max(1);
    let mut best: BTreeMap<Point, ExtReal> = BTreeMap::new();
    best.insert(start.clone(), ExtReal::zero());
    let mut frontier: Vec<(Point, ExtReal)> = vec![(start.clone(), ExtReal::zero())];
    for _ in 0..max_edges {
        let mut next: Vec<(Point, ExtReal)> = Vec::new();
        for (p, dist) in &frontier {
            let mut edges = atlas.stick.stick_neighbors(p)?;
            edges.extend(atlas.bridge_neighbors(p, weight_cap)?);
            for (q, w) in edges {
                let nd = dist + &w;
                if nd >= *radius {
                    continue;
                }
                let improved = best.get(&q).map(|b| nd < *b).unwrap_or(true);
                if improved {
                    best.insert(q.clone(), nd.clone());
                    next.push((q, nd));
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(best)
}

fn metric_properties(
    suite: &mut Suite,
    config: &ScenarioConfig,
    out: &PipelineOutput,
) -> Result<()> {
    let Some(final_metric) = &out.final_metric else { return Ok(()) };
    let scenario = &out.scenario;
    let window = &scenario.window;
    let action = &scenario.action;
    let letters = action.group.letters();

    suite.record("metric", "word-invariance", (|| {
        if letters.is_empty() {
            return Ok(None);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x30d5);
        for _ in 0..5 {
            let len = rng.gen_range(1..=6);
            let mut w = action.group.identity();
            for _ in 0..len {
                w = w.mul(letters.choose(&mut rng).unwrap());
            }
            for _ in 0..8 {
                let x = window.choose(&mut rng).unwrap();
                let y = window.choose(&mut rng).unwrap();
                let wx = action.apply(&w, x)?;
                let wy = action.apply(&w, y)?;
                if final_metric.eval(&wx, &wy) != final_metric.eval(x, y) {
                    return Ok(Some(format!("word {w} moves d({x},{y})")));
                }
            }
        }
        Ok(None)
    })());

    suite.record("metric", "sup-preserves-axioms", (|| {
        let s = combine(
            Combine::Sup,
            &[scenario.base.clone(), final_metric.clone()],
        )?;
        let samples = if window.len() <= 24 {
            None
        } else {
            Some((config.seed, config.sample_pairs))
        };
        let rep = check_axioms(&s, window, samples);
        Ok(rep.counterexample)
    })());

    suite.record("metric", "ball-monotonicity", (|| {
        let probe = out.d_bridge.as_ref().unwrap_or(final_metric);
        let center = scenario.fset_points[0].clone();
        let mut previous: Option<Vec<Point>> = None;
        for r in &config.ball_radii {
            let ball = enumerate_ball(probe, &center, &ExtReal::from_int(u64::from(*r)), config.budget)?;
            let points: Vec<Point> = ball.points.iter().map(|(p, _, _)| p.clone()).collect();
            if let Some(prev) = &previous {
                if !prev.iter().all(|p| points.contains(p)) {
                    return Ok(Some(format!("ball at radius {r} lost points")));
                }
            }
            previous = Some(points);
        }
        Ok(None)
    })());

    suite.record("metric", "cap-small-balls", (|| {
        let capped = combine(Combine::CapOne, &[final_metric.clone()])?;
        let half = ExtReal::from_ratio(1, 2);
        for x in window {
            for y in window {
                if (final_metric.eval(x, y) < half) != (capped.eval(x, y) < half) {
                    return Ok(Some(format!("capped balls differ at ({x},{y})")));
                }
            }
        }
        Ok(None)
    })());

    Ok(())
}

fn isogroup_properties(suite: &mut Suite, out: &PipelineOutput) {
    let Some(final_metric) = &out.final_metric else { return };
    let scenario = &out.scenario;
    if scenario.space.is_none() {
        suite.skip("isogroup", "scenario-group-acts-by-isometries", "no finite table scenario");
        return;
    }
    suite.record("isogroup", "scenario-group-acts-by-isometries", (|| {
        let all = scenario.action.group.enumerate_all(1_000_000)?;
        let rep = check_invariance(final_metric, &scenario.action, &scenario.window, &all)?;
        Ok(rep.witness)
    })());
}

fn determinism_property(suite: &mut Suite, config: &ScenarioConfig) {
    suite.record("report", "byte-identical-reruns", (|| {
        let a = run_pipeline(config)?.report.to_json();
        let b = run_pipeline(config)?.report.to_json();
        if a == b {
            Ok(None)
        } else {
            Ok(Some("two runs with identical config and seed differ".into()))
        }
    })());
}
