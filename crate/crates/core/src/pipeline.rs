//! The end-to-end construction run: properness check, fundamental set,
//! invariance (averaging when the base needs it), orbitwise properness,
//! stick graph with its Lebesgue number, islands, bridges, and the final
//! supremum assembly with every claim discharged on the window.

use crate::action::{Point, ProperVerdict};
use crate::bridge::{assemble_proper_metric, BridgeAtlas};
use crate::error::Result;
use crate::extreal::ExtReal;
use crate::koszul::{
    averaged_pseudometric, koszul_truncate, orbitwise_augment, verify_fundamental_set,
};
use crate::metric::{check_axioms, check_invariance, distance_row, Pseudometric};
use crate::report::{CertificationReport, StepReport, StepStatus, Verdict};
use crate::scenario::{Scenario, ScenarioConfig};
use crate::stick::StickGraph;
use num::{BigRational, ToPrimitive};

/// Everything the pipeline constructed, for callers that want the values
/// and not just the report.
pub struct PipelineOutput {
    pub report: CertificationReport,
    pub scenario: Scenario,
    pub final_metric: Option<Pseudometric>,
    pub stick: Option<StickGraph>,
    pub atlas: Option<BridgeAtlas>,
    /// Stick and bridge pseudometrics with their window value caches, for
    /// callers that keep verifying.
    pub d_stick: Option<Pseudometric>,
    pub d_bridge: Option<Pseudometric>,
}

/// Exhaustive axiom scans are fine up to this many window points; larger
/// windows fall back to seeded sampling.
const EXHAUSTIVE_WINDOW: usize = 24;

pub fn run_pipeline(config: &ScenarioConfig) -> Result<PipelineOutput> {
    let scenario = Scenario::from_config(config)?;
    let mut steps: Vec<StepReport> = Vec::new();
    let window = scenario.window.clone();
    let action = scenario.action.clone();
    let budget = config.budget;

    let fail = |steps: Vec<StepReport>, scenario: Scenario| PipelineOutput {
        report: CertificationReport {
            schema: 1,
            scenario: config.scenario.clone(),
            seed: config.seed,
            window_size: scenario.window.len(),
            steps,
            discharged: Default::default(),
            verdict: Verdict::Failed,
            value_table: None,
        },
        scenario,
        final_metric: None,
        stick: None,
        atlas: None,
        d_stick: None,
        d_bridge: None,
    };

    // Properness of the action over the window.
    let proper = action.check_proper(&window).map_err(|e| e.in_step("action-properness"))?;
    let step = StepReport {
        step: "action-properness".into(),
        status: match proper.verdict {
            ProperVerdict::ProperCertified => StepStatus::Pass,
            ProperVerdict::ProperOnWindow => StepStatus::Inconclusive,
            _ => StepStatus::Fail,
        },
        details: vec![],
        witness: proper.witness.clone(),
    }
    .with("pairs-checked", proper.pairs_checked)
    .with("max-singleton-transporter", proper.max_singleton_transporter)
    .with(
        "window-transporter",
        proper
            .window_transporter
            .map(|w| w.to_string())
            .unwrap_or_else(|| "-".into()),
    );
    let proper_ok = step.status == StepStatus::Pass;
    steps.push(step);
    if !proper_ok {
        return Ok(fail(steps, scenario));
    }

    // Fundamental set.
    let fset = match verify_fundamental_set(&action, &scenario.fset_points, &window) {
        Ok(f) => {
            steps.push(
                StepReport::pass("fundamental-set")
                    .with("size", f.points.len())
                    .with("window-transporter-size", f.verification.transporter_size),
            );
            f
        }
        Err(e) => {
            steps.push(StepReport::fail("fundamental-set", e.to_string()));
            return Ok(fail(steps, scenario));
        }
    };

    // Base metric axioms.
    let samples = if window.len() <= EXHAUSTIVE_WINDOW {
        None
    } else {
        Some((config.seed, config.sample_pairs))
    };
    let base_axioms = check_axioms(&scenario.base, &window, samples);
    steps.push(StepReport {
        step: "base-axioms".into(),
        status: if base_axioms.passed { StepStatus::Pass } else { StepStatus::Fail },
        details: vec![],
        witness: base_axioms.counterexample.clone(),
    });
    if !base_axioms.passed {
        return Ok(fail(steps, scenario));
    }

    // Invariance: keep an already invariant base, otherwise average it.
    let gens = action.group.generators.clone();
    let base_inv = check_invariance(&scenario.base, &action, &window, &gens)
        .map_err(|e| e.in_step("invariance"))?;
    let d_inv: Pseudometric = if base_inv.passed {
        let mut d = scenario.base.clone();
        d.flags.claims_invariant = true;
        steps.push(
            StepReport::pass("invariance")
                .with("base-already-invariant", true)
                .with("pairs-checked", base_inv.pairs_checked),
        );
        d
    } else {
        let ki = match koszul_truncate(&scenario.base, &fset, &window, scenario.window_is_whole_space)
        {
            Ok(ki) => ki,
            Err(e) => {
                steps.push(StepReport::fail("invariance", e.to_string()));
                return Ok(fail(steps, scenario));
            }
        };
        let averaged = averaged_pseudometric(&ki, &action).map_err(|e| e.in_step("invariance"))?;
        let cached = averaged.cached_on_window(&window, budget)?;
        let inv = check_invariance(&cached, &action, &window, &gens)?;
        let ax = check_axioms(&cached, &window, samples);
        let positive = window.iter().enumerate().all(|(i, x)| {
            window[i + 1..]
                .iter()
                .all(|y| !cached.eval(x, y).is_zero())
        });
        let ok = inv.passed && ax.passed && positive;
        steps.push(StepReport {
            step: "invariance".into(),
            status: if ok { StepStatus::Pass } else { StepStatus::Fail },
            details: vec![],
            witness: inv.witness.clone().or_else(|| ax.counterexample.clone()),
        }
        .with("base-already-invariant", false)
        .with("radii-exact", ki.radii_exact)
        .with("averaged-positive-definite", positive));
        if !ok {
            return Ok(fail(steps, scenario));
        }
        cached
    };

    // Orbitwise properness: a finite orbit space is compact, nothing to do;
    // an infinite one gets the orbit-separating augmentation.
    let (reps, orbit_space_finite) = action.orbit_reps(64).map_err(|e| e.in_step("orbitwise"))?;
    let d_orb = if orbit_space_finite {
        steps.push(
            StepReport::pass("orbitwise-properness")
                .with("orbit-count", reps.len())
                .with("augmented", false),
        );
        d_inv.clone()
    } else {
        let aug = orbitwise_augment(&d_inv, &action);
        steps.push(
            StepReport::pass("orbitwise-properness")
                .with("orbit-count", format!(">{}", reps.len()))
                .with("augmented", true),
        );
        aug
    };

    // Stick graph, edge-weight bound and Lebesgue number.
    let stick = match StickGraph::new(&action, &fset, &d_orb, budget) {
        Ok(s) => s,
        Err(e) => {
            steps.push(StepReport::fail("stick-graph", e.to_string()));
            return Ok(fail(steps, scenario));
        }
    };
    let lebesgue = stick.lebesgue_number(&window, 8).map_err(|e| e.in_step("lebesgue"))?;
    let stick = match &lebesgue.epsilon {
        Some(eps) => {
            steps.push(
                StepReport::pass("lebesgue-number")
                    .with("epsilon", crate::extreal::ratio_string(eps))
                    .with(
                        "delta",
                        stick
                            .delta
                            .positive()
                            .map(|d| crate::extreal::ratio_string(&d))
                            .unwrap_or_else(|| "-".into()),
                    ),
            );
            stick.clone().with_epsilon(eps.clone())
        }
        None => {
            steps.push(StepReport::fail(
                "lebesgue-number",
                lebesgue.witness.clone().unwrap_or_default(),
            ));
            return Ok(fail(steps, scenario));
        }
    };

    // Islands and the coset bijection.
    let partition = stick.islands(&window).map_err(|e| e.in_step("islands"))?;
    let coset_report = stick
        .coset_bijection_check(&window)
        .map_err(|e| e.in_step("islands"))?;
    steps.push(StepReport {
        step: "islands".into(),
        status: if coset_report.consistent { StepStatus::Pass } else { StepStatus::Fail },
        details: vec![],
        witness: coset_report.witness.clone(),
    }
    .with("islands", coset_report.islands)
    .with("cosets", coset_report.cosets)
    .with("pairs-checked", coset_report.pairs_checked));
    if !coset_report.consistent {
        return Ok(fail(steps, scenario));
    }

    // Invariance checks evaluate at generator translates of window points,
    // so the value caches cover the expanded window.
    let cache_set = expand_by_generators(&action, &window)?;

    // Stick metric over the window: dominates the base, restricts to it on
    // translates, finite exactly within islands.
    let eval_cap = stick_eval_cap(&cache_set, &stick);
    let d_stick = stick
        .pseudometric(eval_cap)
        .map_err(|e| e.in_step("stick-metric"))?
        .cached_on_window(&cache_set, budget)?;
    let translates: Vec<Vec<crate::group::GroupElement>> = window
        .iter()
        .map(|x| stick.translates_through(x))
        .collect::<Result<_>>()?;
    let mut stick_witness: Option<String> = None;
    let mut in_translate_pairs = 0u64;
    'stick_scan: for (i, x) in window.iter().enumerate() {
        for (j, y) in window.iter().enumerate().skip(i) {
            let dv = d_stick.eval(x, y);
            let bv = d_orb.eval(x, y);
            if dv < bv {
                stick_witness = Some(format!("d'({x},{y}) = {dv} below base {bv}"));
                break 'stick_scan;
            }
            let same_island = partition.ids[i] == partition.ids[j];
            if dv.is_finite() != same_island {
                stick_witness = Some(format!(
                    "d'({x},{y}) = {dv} but same-island = {same_island}"
                ));
                break 'stick_scan;
            }
            let share_translate =
                i != j && translates[i].iter().any(|g| translates[j].contains(g));
            if share_translate {
                in_translate_pairs += 1;
                if dv != bv {
                    stick_witness = Some(format!(
                        "in-translate pair ({x},{y}): d' = {dv} vs base {bv}"
                    ));
                    break 'stick_scan;
                }
            }
        }
    }
    steps.push(StepReport {
        step: "stick-metric".into(),
        status: if stick_witness.is_none() { StepStatus::Pass } else { StepStatus::Fail },
        details: vec![],
        witness: stick_witness.clone(),
    }
    .with("in-translate-pairs", in_translate_pairs)
    .with("eval-cap", eval_cap));
    if stick_witness.is_some() {
        return Ok(fail(steps, scenario));
    }

    // Bridge atlas and metric.
    let cap = bridge_cap(config, &window, &d_stick, coset_report.islands);
    let atlas = match BridgeAtlas::new(stick.clone(), cap, budget) {
        Ok(a) => a,
        Err(e) => {
            steps.push(StepReport::fail("bridge-atlas", e.to_string()));
            return Ok(fail(steps, scenario));
        }
    };
    let d_bridge = atlas
        .pseudometric(4 * (cap as u64 + 2))
        .map_err(|e| e.in_step("bridge-metric"))?
        .cached_on_window(&cache_set, budget)?;

    let bridge_inv = check_invariance(&d_bridge, &action, &window, &gens)?;
    let mut bridge_witness = bridge_inv.witness.clone();
    let mut finite_ok = true;
    if bridge_inv.passed {
        'finite_scan: for (i, x) in window.iter().enumerate() {
            for y in window.iter().skip(i) {
                if !d_bridge.eval(x, y).is_finite() {
                    finite_ok = false;
                    bridge_witness = Some(format!("d_B({x},{y}) is infinite"));
                    break 'finite_scan;
                }
            }
        }
    }
    // Negative controls: probes outside the group must break invariance.
    let mut negative_ok = true;
    let mut negative_witness = None;
    for probe in &scenario.negative_probes {
        let r = check_invariance(&d_bridge, &action, &window, std::slice::from_ref(probe))?;
        if r.passed {
            negative_ok = false;
            bridge_witness = Some(format!("probe {probe} unexpectedly preserves d_B"));
        } else {
            negative_witness = r.witness;
        }
    }
    let bridge_ok = bridge_inv.passed && finite_ok && negative_ok;
    let mut step = StepReport {
        step: "bridge-metric".into(),
        status: if bridge_ok { StepStatus::Pass } else { StepStatus::Fail },
        details: vec![],
        witness: if bridge_ok { None } else { bridge_witness.clone() },
    }
    .with("atlas-cap", cap)
    .with("representatives", atlas.reps.len())
    .with("coset-space-exhausted", atlas.exhausted)
    .with("invariance-pairs", bridge_inv.pairs_checked);
    if let Some(w) = &negative_witness {
        step = step.with("negative-control-witness", w);
    }
    steps.push(step);
    if !bridge_ok {
        return Ok(fail(steps, scenario));
    }

    // Final assembly.
    let center = fset.points[0].clone();
    let assembled = match assemble_proper_metric(
        &d_inv,
        &d_bridge,
        &action,
        &window,
        &center,
        &config.ball_radii,
        budget,
    ) {
        Ok(a) => a,
        Err(e) => {
            steps.push(StepReport::fail("assembly", e.to_string()));
            return Ok(fail(steps, scenario));
        }
    };
    let mut step = StepReport::pass("assembly").with("pairs-checked", assembled.discharge.pairs_checked);
    for (name, size) in &assembled.discharge.ball_sizes {
        step = step.with(name, size);
    }
    steps.push(step);

    let value_table = if config.emit_value_table {
        let mut rows = Vec::new();
        for (i, x) in window.iter().enumerate() {
            let values = distance_row(&assembled.metric, x, &window[i..], budget)?;
            for (y, v) in window[i..].iter().zip(values) {
                rows.push([
                    action.point_label(x),
                    action.point_label(y),
                    assembled.metric.eval(x, y).max(v).to_string(),
                ]);
            }
        }
        Some(rows)
    } else {
        None
    };

    let report = CertificationReport {
        schema: 1,
        scenario: config.scenario.clone(),
        seed: config.seed,
        window_size: window.len(),
        steps,
        discharged: assembled.metric.flags,
        verdict: Verdict::CertifiedWitness,
        value_table,
    };
    Ok(PipelineOutput {
        report,
        scenario,
        final_metric: Some(assembled.metric),
        stick: Some(stick),
        atlas: Some(atlas),
        d_stick: Some(d_stick),
        d_bridge: Some(d_bridge),
    })
}

/// The window together with every generator letter applied to it.
fn expand_by_generators(
    action: &crate::action::ActionDescriptor,
    window: &[Point],
) -> Result<Vec<Point>> {
    let mut out: std::collections::BTreeSet<Point> = window.iter().cloned().collect();
    for l in action.group.letters() {
        for x in window {
            out.insert(action.apply(&l, x)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// A stick evaluation cap that covers every finite window distance: the
/// window can be traversed with at most |window| edges of at most the
/// largest F-pair weight.
fn stick_eval_cap(window: &[Point], stick: &StickGraph) -> u64 {
    let mut max_w = BigRational::from_integer(1.into());
    for (i, u) in stick.fset.points.iter().enumerate() {
        for v in stick.fset.points.iter().skip(i + 1) {
            if let ExtReal::Finite(q) = stick.base.eval(u, v) {
                if q > max_w {
                    max_w = q;
                }
            }
        }
    }
    let bound = max_w * BigRational::from_integer((window.len() as i64 + 2).into());
    bound.ceil().to_integer().to_u64().unwrap_or(u64::MAX).max(4)
}

/// Bridge atlas cap: enough representatives for the requested ball radii
/// plus a crossing of every window island.
fn bridge_cap(
    config: &ScenarioConfig,
    window: &[Point],
    d_stick: &Pseudometric,
    islands: usize,
) -> usize {
    let max_radius = config.ball_radii.iter().copied().max().unwrap_or(1) as usize;
    let mut diam = BigRational::from_integer(0.into());
    for (i, x) in window.iter().enumerate() {
        for y in window.iter().skip(i + 1) {
            if let ExtReal::Finite(q) = d_stick.eval(x, y) {
                if q > diam {
                    diam = q;
                }
            }
        }
    }
    let diam = diam.ceil().to_integer().to_usize().unwrap_or(0);
    max_radius + 2 * islands + diam + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::Point;

    #[test]
    fn line_pipeline_produces_witness() {
        let cfg = ScenarioConfig::for_scenario("z-line");
        let out = run_pipeline(&cfg).unwrap();
        assert_eq!(out.report.verdict, Verdict::CertifiedWitness);
        let d = out.final_metric.unwrap();
        assert_eq!(
            d.eval(&Point::lattice(&[0]), &Point::lattice(&[5])),
            ExtReal::from_int(3)
        );
    }

    #[test]
    fn trivial_action_fails_at_properness() {
        let cfg = ScenarioConfig::for_scenario("trivial-z");
        let out = run_pipeline(&cfg).unwrap();
        assert_eq!(out.report.verdict, Verdict::Failed);
        let first = &out.report.steps[0];
        assert_eq!(first.step, "action-properness");
        assert_eq!(first.status, StepStatus::Fail);
        assert!(first.witness.as_ref().unwrap().contains("infinite"));
    }

    #[test]
    fn parity_pipeline_values() {
        let cfg = ScenarioConfig::for_scenario("2z-on-z");
        let out = run_pipeline(&cfg).unwrap();
        assert_eq!(out.report.verdict, Verdict::CertifiedWitness);
        let d = out.final_metric.unwrap();
        assert_eq!(
            d.eval(&Point::lattice(&[0]), &Point::lattice(&[4])),
            ExtReal::from_int(2)
        );
        let islands_step = out
            .report
            .steps
            .iter()
            .find(|s| s.step == "islands")
            .unwrap();
        assert!(islands_step
            .details
            .iter()
            .any(|d| d.name == "islands" && d.value == "5"));
    }
}
