//! Fundamental sets and the averaging construction that turns any
//! finite-valued pseudometric into a group-invariant one, plus the
//! orbitwise-proper augmentation.
//!
//! The averaging step is exact: in the discrete category the invariant
//! integral over the group is a counting-measure sum, and the summand
//! vanishes outside the transporter of {x, y} into the fundamental set,
//! so the finite sum over that exact transporter equals the full sum.

use crate::action::{ActionDescriptor, Point, TransporterOutcome};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::metric::{check_axioms, AxiomReport, Pseudometric};
use num::BigRational;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A finite set F with G·F = X and finite transporters from finite sets.
#[derive(Clone, Debug)]
pub struct FundamentalSet {
    pub points: Vec<Point>,
    pub verification: FsVerification,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FsVerification {
    /// Every window point lies in some translate gF.
    pub window_covered: bool,
    /// The transporter from the window into F is finite and exact.
    pub transporter_finite: bool,
    pub window_size: usize,
    pub transporter_size: u64,
}

/// Accept `points` as a fundamental set after verifying both defining
/// conditions on the window.
pub fn verify_fundamental_set(
    action: &ActionDescriptor,
    points: &[Point],
    window: &[Point],
) -> Result<FundamentalSet> {
    if points.is_empty() {
        return Err(Error::usage("fundamental set must be nonempty"));
    }
    for x in window {
        let t = action.transporter(points, std::slice::from_ref(x))?;
        let set = t.exact_set()?;
        if set.elements.is_empty() {
            return Err(Error::verification(
                "fundamental-set covering",
                format!("window point {x} lies in no translate of F"),
            ));
        }
    }
    let transporter_size = match action.transporter(window, points)? {
        TransporterOutcome::Set(s) => s.elements.len() as u64,
        TransporterOutcome::Infinite { description } => {
            return Err(Error::verification(
                "fundamental-set transporter",
                format!("transporter(window, F) is infinite: {description}"),
            ));
        }
    };
    Ok(FundamentalSet {
        points: points.to_vec(),
        verification: FsVerification {
            window_covered: true,
            transporter_finite: true,
            window_size: window.len(),
            transporter_size,
        },
    })
}

/// The canonical fundamental set: the first `n` orbit representatives.
/// Requires the orbit enumeration to exhaust within `n`.
pub fn canonical_fundamental_set(
    action: &ActionDescriptor,
    n: usize,
    window: &[Point],
) -> Result<FundamentalSet> {
    let (reps, exhausted) = action.orbit_reps(n)?;
    if !exhausted {
        return Err(Error::usage(format!(
            "scenario has more than {n} orbits; supply an explicit fundamental set"
        )));
    }
    verify_fundamental_set(action, &reps, window)
}

/// The truncation of a base pseudometric against a fundamental set:
/// radii r(x) = d(x, X \ F) for x in F (zero outside F), and
/// d'(x,y) = min{ d(x,y), r(x) + r(y) }.
#[derive(Clone)]
pub struct KoszulIntermediate {
    pub base: Pseudometric,
    pub fset: FundamentalSet,
    radii: Arc<BTreeMap<Point, ExtReal>>,
    /// True when every radius is certified exact (full complement scanned,
    /// or the observed minimum attains the base metric's certified lower
    /// bound on distinct pairs). Otherwise the radii are upper bounds only,
    /// which shrinks d' and preserves every pseudometric property.
    pub radii_exact: bool,
    pub truncated: Pseudometric,
    pub axioms: AxiomReport,
}

impl KoszulIntermediate {
    pub fn radius(&self, x: &Point) -> ExtReal {
        self.radii.get(x).cloned().unwrap_or_else(ExtReal::zero)
    }
}

/// `window_is_whole_space` certifies that the window lists every point of
/// the scenario, which makes the complement scan exhaustive.
pub fn koszul_truncate(
    base: &Pseudometric,
    fset: &FundamentalSet,
    window: &[Point],
    window_is_whole_space: bool,
) -> Result<KoszulIntermediate> {
    let complement: Vec<&Point> = window.iter().filter(|p| !fset.points.contains(p)).collect();
    let mut radii: BTreeMap<Point, ExtReal> = BTreeMap::new();
    let mut all_exact = true;
    for x in &fset.points {
        if complement.is_empty() {
            // Convention: distance to the empty set is infinite, so the
            // truncation changes nothing.
            radii.insert(x.clone(), ExtReal::Infinite);
            continue;
        }
        let r = complement
            .iter()
            .map(|y| base.eval(x, y))
            .min()
            .expect("nonempty complement");
        let exact = window_is_whole_space
            || base
                .distinct_lower_bound()
                .map(|b| r == ExtReal::Finite(b.clone()))
                .unwrap_or(false);
        all_exact &= exact;
        radii.insert(x.clone(), r);
    }
    let radii = Arc::new(radii);
    let base_for_eval = base.clone();
    let radii_for_eval = radii.clone();
    let truncated = Pseudometric::from_fn(
        format!("truncate({}, |F|={})", base.provenance, fset.points.len()),
        move |x, y| {
            let rx = radii_for_eval.get(x).cloned().unwrap_or_else(ExtReal::zero);
            let ry = radii_for_eval.get(y).cloned().unwrap_or_else(ExtReal::zero);
            if x == y {
                return ExtReal::zero();
            }
            base_for_eval.eval(x, y).min(rx + ry)
        },
    );
    let axioms = check_axioms(&truncated, window, None);
    if !axioms.passed {
        return Err(Error::verification(
            "truncated pseudometric axioms",
            axioms.counterexample.clone().unwrap_or_default(),
        ));
    }
    Ok(KoszulIntermediate {
        base: base.clone(),
        fset: fset.clone(),
        radii,
        radii_exact: all_exact,
        truncated,
        axioms,
    })
}

/// One value of the invariant average: the counting-measure sum of
/// d'(gx, gy) over the exact transporter of {x, y} into F.
pub fn koszul_average(
    intermediate: &KoszulIntermediate,
    action: &ActionDescriptor,
    x: &Point,
    y: &Point,
) -> Result<ExtReal> {
    let pair = [x.clone(), y.clone()];
    let t = action.transporter(&pair, &intermediate.fset.points)?;
    let support = t.exact_set()?; // refuses bounded or infinite transporters
    let mut total = ExtReal::zero();
    for g in &support.elements {
        let gx = action.apply(g, x)?;
        let gy = action.apply(g, y)?;
        total = total + intermediate.truncated.eval(&gx, &gy);
    }
    Ok(total)
}

/// The averaged pseudometric as a value. The scenario's transporters must be
/// exact, which is probed once at construction.
pub fn averaged_pseudometric(
    intermediate: &KoszulIntermediate,
    action: &ActionDescriptor,
) -> Result<Pseudometric> {
    let probe = &intermediate.fset.points[0];
    let t = action.transporter(std::slice::from_ref(probe), &intermediate.fset.points)?;
    t.exact_set()?;
    let inter = intermediate.clone();
    let act = action.clone();
    let mut d = Pseudometric::from_fn(
        format!("average({})", intermediate.truncated.provenance),
        move |x, y| {
            koszul_average(&inter, &act, x, y)
                .expect("scenario transporter verified exact at construction")
        },
    );
    d.flags.claims_invariant = true;
    d.flags.claims_finite = true;
    Ok(d)
}

/// Add the orbit-separating pseudometric |f(pi(x)) - f(pi(y))| where f is
/// the index of the orbit in the deterministic enumeration. The result is
/// orbitwise proper: a ball of radius r meets at most the orbits with index
/// within r of the center's.
pub fn orbitwise_augment(d: &Pseudometric, action: &ActionDescriptor) -> Pseudometric {
    let act = action.clone();
    let inner = d.clone();
    let mut out = Pseudometric::from_fn(format!("orbit-augment({})", d.provenance), move |x, y| {
        let fx = act.orbit_index(x).expect("orbit index total on scenario points");
        let fy = act.orbit_index(y).expect("orbit index total on scenario points");
        let orbital = ExtReal::abs_diff(
            &BigRational::from_integer(fx.into()),
            &BigRational::from_integer(fy.into()),
        );
        inner.eval(x, y) + orbital
    });
    out.flags.claims_invariant = d.flags.claims_invariant;
    out.flags.claims_finite = d.flags.claims_finite;
    out.flags.claims_compatible = d.flags.claims_compatible;
    if let Some(b) = d.distinct_lower_bound() {
        out = out.with_distinct_lower_bound(b.clone());
    }
    out
}
