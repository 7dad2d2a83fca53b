//! Pseudometrics as first-class values: evaluation contracts with optional
//! neighbor oracles, combinators, and the axiom / invariance / ball
//! verifiers.
//!
//! A neighbor oracle is a locally finite weighted graph whose shortest-path
//! metric never exceeds the pseudometric it is attached to. Ball enumeration
//! grows the oracle graph and filters by exact evaluation, so any correct
//! lower-bounding oracle yields exact balls.

use crate::action::{ActionDescriptor, Point};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::group::GroupElement;
use crate::shortest_path::{dijkstra, EdgeKind, SearchParams};
use num::{BigRational, One, Signed};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type EvalFn = Arc<dyn Fn(&Point, &Point) -> ExtReal + Send + Sync>;
pub type NeighborFn = Arc<dyn Fn(&Point) -> Result<Vec<(Point, ExtReal)>> + Send + Sync>;

/// Claims attached to a pseudometric by its construction; every claim is
/// discharged by the verifier operations before a report relies on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct MetricFlags {
    pub claims_invariant: bool,
    pub claims_proper: bool,
    pub claims_finite: bool,
    pub claims_compatible: bool,
}

#[derive(Clone)]
pub struct Pseudometric {
    eval: EvalFn,
    neighbors: Option<NeighborFn>,
    /// Certified positive lower bound on oracle edge weights.
    min_edge_weight: Option<BigRational>,
    /// True when the oracle's shortest-path metric coincides with this
    /// metric (stick and bridge pseudometrics); combinators that only keep
    /// a lower-bounding oracle clear it.
    oracle_exact: bool,
    /// Certified lower bound on values over distinct pairs, when one exists
    /// (the discrete metric has 1). Used to certify truncation radii.
    distinct_lower_bound: Option<BigRational>,
    pub flags: MetricFlags,
    pub provenance: String,
}

impl std::fmt::Debug for Pseudometric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pseudometric")
            .field("provenance", &self.provenance)
            .field("flags", &self.flags)
            .field("has_oracle", &self.neighbors.is_some())
            .finish()
    }
}

impl Pseudometric {
    pub fn from_fn(
        provenance: impl Into<String>,
        eval: impl Fn(&Point, &Point) -> ExtReal + Send + Sync + 'static,
    ) -> Pseudometric {
        Pseudometric {
            eval: Arc::new(eval),
            neighbors: None,
            min_edge_weight: None,
            oracle_exact: false,
            distinct_lower_bound: None,
            flags: MetricFlags::default(),
            provenance: provenance.into(),
        }
    }

    /// The discrete metric: 1 on distinct pairs, 0 on the diagonal.
    pub fn discrete() -> Pseudometric {
        let mut d = Pseudometric::from_fn("discrete", |x, y| {
            if x == y {
                ExtReal::zero()
            } else {
                ExtReal::from_int(1)
            }
        });
        d.distinct_lower_bound = Some(BigRational::one());
        d.flags.claims_invariant = true;
        d.flags.claims_finite = true;
        d.flags.claims_compatible = true;
        d
    }

    /// |f(x) - f(y)| for a total rational-valued function.
    pub fn d_f(
        name: &str,
        f: impl Fn(&Point) -> BigRational + Send + Sync + 'static,
    ) -> Pseudometric {
        let mut d = Pseudometric::from_fn(format!("d_f({name})"), move |x, y| {
            ExtReal::abs_diff(&f(x), &f(y))
        });
        d.flags.claims_finite = true;
        d
    }

    /// Table-backed metric over labeled points.
    pub fn from_table(table: Vec<Vec<BigRational>>) -> Pseudometric {
        let n = table.len();
        let mut d = Pseudometric::from_fn("table", move |x, y| {
            let (Point::Labeled(i), Point::Labeled(j)) = (x, y) else {
                panic!("table metric evaluated on non-labeled points");
            };
            assert!(*i < n && *j < n, "point outside table");
            ExtReal::finite(table[*i][*j].clone())
        });
        d.flags.claims_finite = true;
        d
    }

    /// The word metric d(x, y) = |x^-1 y| on a group acting on itself.
    pub fn word_metric() -> Pseudometric {
        let mut d = Pseudometric::from_fn("word-length", |x, y| {
            let (Point::Word(a), Point::Word(b)) = (x, y) else {
                panic!("word metric evaluated on non-word points");
            };
            let GroupElement::Word(w) = a.inv().mul(b) else { unreachable!() };
            ExtReal::from_int(w.len() as u64)
        });
        d.distinct_lower_bound = Some(BigRational::one());
        d.flags.claims_invariant = true;
        d.flags.claims_finite = true;
        d.flags.claims_compatible = true;
        d
    }

    pub fn eval(&self, x: &Point, y: &Point) -> ExtReal {
        (self.eval)(x, y)
    }

    /// Attach a locally finite neighbor oracle. `exact` asserts that the
    /// oracle's shortest-path metric equals this metric; pass false for a
    /// lower-bounding oracle (ball enumeration stays exact either way, the
    /// window cache only trusts exact oracles).
    pub fn with_neighbor_oracle(
        mut self,
        oracle: NeighborFn,
        min_edge_weight: BigRational,
        exact: bool,
    ) -> Pseudometric {
        assert!(min_edge_weight.is_positive(), "edge-weight bound must be positive");
        self.neighbors = Some(oracle);
        self.min_edge_weight = Some(min_edge_weight);
        self.oracle_exact = exact;
        self
    }

    pub fn with_distinct_lower_bound(mut self, bound: BigRational) -> Pseudometric {
        assert!(bound.is_positive());
        self.distinct_lower_bound = Some(bound);
        self
    }

    pub fn has_oracle(&self) -> bool {
        self.neighbors.is_some()
    }

    pub fn distinct_lower_bound(&self) -> Option<&BigRational> {
        self.distinct_lower_bound.as_ref()
    }

    pub fn min_edge_weight(&self) -> Option<&BigRational> {
        self.min_edge_weight.as_ref()
    }

    pub(crate) fn neighbor_fn(&self) -> Option<NeighborFn> {
        self.neighbors.clone()
    }

    /// Precompute values from every window point and overlay them on the
    /// evaluation contract. Exactness is preserved: single-source searches
    /// are used only when the oracle is exact, direct evaluation otherwise.
    pub fn cached_on_window(&self, window: &[Point], budget: u64) -> Result<Pseudometric> {
        let mut cache: BTreeMap<(Point, Point), ExtReal> = BTreeMap::new();
        match self.neighbor_fn() {
            Some(oracle) if self.oracle_exact => {
                let oracle = memoized_oracle(oracle);
                for x in window {
                    let table = oracle_distances(&oracle, x, window, budget)?;
                    for (y, v) in table {
                        cache.insert((x.clone(), y.clone()), v.clone());
                        cache.insert((y, x.clone()), v);
                    }
                }
            }
            _ => {
                for x in window {
                    for y in window {
                        cache.insert((x.clone(), y.clone()), self.eval(x, y));
                    }
                }
            }
        }
        let inner = self.eval.clone();
        let cache = Arc::new(cache);
        let mut out = self.clone();
        out.eval = Arc::new(move |x: &Point, y: &Point| {
            if let Some(v) = cache.get(&(x.clone(), y.clone())) {
                v.clone()
            } else {
                inner(x, y)
            }
        });
        out.provenance = format!("{} [window-cached]", self.provenance);
        Ok(out)
    }
}

/// Repeated neighbor expansions dominate window sweeps; share them across
/// single-source searches.
fn memoized_oracle(oracle: NeighborFn) -> NeighborFn {
    let memo: std::sync::Mutex<std::collections::HashMap<Point, Vec<(Point, ExtReal)>>> =
        std::sync::Mutex::new(std::collections::HashMap::new());
    Arc::new(move |p: &Point| {
        if let Some(v) = memo.lock().unwrap().get(p) {
            return Ok(v.clone());
        }
        let v = oracle(p)?;
        memo.lock().unwrap().insert(p.clone(), v.clone());
        Ok(v)
    })
}

/// Exact distances from `x` to each target along the neighbor oracle,
/// escalating the search radius until every target is settled or certified
/// unreachable.
fn oracle_distances(
    oracle: &NeighborFn,
    x: &Point,
    targets: &[Point],
    budget: u64,
) -> Result<Vec<(Point, ExtReal)>> {
    let target_set: std::collections::BTreeSet<Point> = targets.iter().cloned().collect();
    let mut cutoff = ExtReal::from_int(2);
    loop {
        let r = dijkstra(
            x,
            |p| Ok(oracle(p)?.into_iter().map(|(q, w)| (q, w, EdgeKind::Plain)).collect()),
            SearchParams {
                cutoff: Some(&cutoff),
                targets: Some(&target_set),
                budget,
                what: "window distance table",
            },
        )?;
        let settled: BTreeMap<&Point, &ExtReal> =
            r.settled.iter().map(|s| (&s.point, &s.dist)).collect();
        let missing: Vec<&Point> = targets.iter().filter(|t| !settled.contains_key(t)).collect();
        if missing.is_empty() {
            return Ok(targets
                .iter()
                .map(|t| (t.clone(), (*settled.get(t).unwrap()).clone()))
                .collect());
        }
        if !r.pruned {
            // Component fully settled: missing targets are at distance inf.
            let mut out = Vec::new();
            for t in targets {
                out.push((
                    t.clone(),
                    settled.get(t).map(|v| (*v).clone()).unwrap_or(ExtReal::Infinite),
                ));
            }
            return Ok(out);
        }
        cutoff = cutoff.scale(&BigRational::from_integer(4.into()));
        if let ExtReal::Finite(q) = &cutoff {
            if *q > BigRational::from_integer(1_000_000_000.into()) {
                return Err(Error::budget("distance-table cutoff escalation", budget));
            }
        }
    }
}

/// Exact metric values from `center` to every target: single-source search
/// when the oracle is exact, direct evaluation otherwise.
pub fn distance_row(
    d: &Pseudometric,
    center: &Point,
    targets: &[Point],
    budget: u64,
) -> Result<Vec<ExtReal>> {
    match d.neighbor_fn() {
        Some(oracle) if d.oracle_exact => Ok(oracle_distances(&oracle, center, targets, budget)?
            .into_iter()
            .map(|(_, v)| v)
            .collect()),
        _ => Ok(targets.iter().map(|t| d.eval(center, t)).collect()),
    }
}

/// Pointwise combinations that preserve the pseudometric axioms.
pub enum Combine {
    Sup,
    Sum,
    Scale(BigRational),
    CapOne,
}

pub fn combine(op: Combine, ds: &[Pseudometric]) -> Result<Pseudometric> {
    if ds.is_empty() {
        return Err(Error::usage("combine needs at least one pseudometric"));
    }
    let parts: Vec<Pseudometric> = ds.to_vec();
    let names: Vec<&str> = ds.iter().map(|d| d.provenance.as_str()).collect();
    Ok(match op {
        Combine::Sup => {
            let mut out = Pseudometric::from_fn(
                format!("sup({})", names.join(", ")),
                move |x, y| {
                    parts
                        .iter()
                        .map(|d| d.eval(x, y))
                        .max()
                        .expect("nonempty list")
                },
            );
            // Any component's oracle is a lower bound for the supremum.
            if let Some(i) = ds.iter().position(|d| d.has_oracle()) {
                out.neighbors = ds[i].neighbor_fn();
                out.min_edge_weight = ds[i].min_edge_weight.clone();
            }
            if let Some(b) = ds
                .iter()
                .filter_map(|d| d.distinct_lower_bound.clone())
                .max()
            {
                out.distinct_lower_bound = Some(b);
            }
            out
        }
        Combine::Sum => {
            let mut out = Pseudometric::from_fn(
                format!("sum({})", names.join(", ")),
                move |x, y| parts.iter().map(|d| d.eval(x, y)).sum(),
            );
            if let Some(i) = ds.iter().position(|d| d.has_oracle()) {
                out.neighbors = ds[i].neighbor_fn();
                out.min_edge_weight = ds[i].min_edge_weight.clone();
            }
            if let Some(b) = ds
                .iter()
                .filter_map(|d| d.distinct_lower_bound.clone())
                .max()
            {
                out.distinct_lower_bound = Some(b);
            }
            out
        }
        Combine::Scale(c) => {
            if !c.is_positive() {
                return Err(Error::usage("scale factor must be positive"));
            }
            if ds.len() != 1 {
                return Err(Error::usage("scale takes exactly one pseudometric"));
            }
            let cc = c.clone();
            let inner = ds[0].clone();
            let mut out = Pseudometric::from_fn(
                format!("scale({}, {})", crate::extreal::ratio_string(&c), names[0]),
                move |x, y| inner.eval(x, y).scale(&cc),
            );
            if let Some(oracle) = ds[0].neighbor_fn() {
                let c2 = c.clone();
                out.neighbors = Some(Arc::new(move |p: &Point| {
                    Ok(oracle(p)?
                        .into_iter()
                        .map(|(q, w)| (q, w.scale(&c2)))
                        .collect())
                }));
                out.min_edge_weight = ds[0].min_edge_weight.as_ref().map(|w| w * &c);
                out.oracle_exact = ds[0].oracle_exact;
            }
            out.distinct_lower_bound = ds[0].distinct_lower_bound.as_ref().map(|b| b * &c);
            out
        }
        Combine::CapOne => {
            if ds.len() != 1 {
                return Err(Error::usage("cap takes exactly one pseudometric"));
            }
            let inner = ds[0].clone();
            // Capping keeps no oracle: multi-edge oracle paths are not
            // bounded by the capped values.
            Pseudometric::from_fn(format!("cap1({})", names[0]), move |x, y| {
                inner.eval(x, y).min(ExtReal::from_int(1))
            })
        }
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub enum CheckMode {
    Exhaustive { triples: u64 },
    Sampled { seed: u64, triples: u64 },
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub mode: CheckMode,
    pub counterexample: Option<String>,
}

/// Verify d(x,x)=0, symmetry and the triangle inequality on a window, with
/// exact comparisons. `samples=None` scans all triples.
pub fn check_axioms(
    d: &Pseudometric,
    window: &[Point],
    samples: Option<(u64, u64)>,
) -> AxiomReport {
    for x in window {
        if !d.eval(x, x).is_zero() {
            return AxiomReport {
                passed: false,
                mode: CheckMode::Exhaustive { triples: 0 },
                counterexample: Some(format!("d({x},{x}) = {} != 0", d.eval(x, x))),
            };
        }
    }
    for x in window {
        for y in window {
            let (a, b) = (d.eval(x, y), d.eval(y, x));
            if a != b {
                return AxiomReport {
                    passed: false,
                    mode: CheckMode::Exhaustive { triples: 0 },
                    counterexample: Some(format!("d({x},{y}) = {a} but d({y},{x}) = {b}")),
                };
            }
        }
    }
    let check_triple = |x: &Point, y: &Point, z: &Point| -> Option<String> {
        let (xy, yz, xz) = (d.eval(x, y), d.eval(y, z), d.eval(x, z));
        if xy.clone() + yz.clone() < xz.clone() {
            Some(format!("d({x},{y}) + d({y},{z}) = {xy} + {yz} < d({x},{z}) = {xz}"))
        } else {
            None
        }
    };
    match samples {
        None => {
            let mut triples = 0u64;
            for x in window {
                for y in window {
                    for z in window {
                        triples += 1;
                        if let Some(w) = check_triple(x, y, z) {
                            return AxiomReport {
                                passed: false,
                                mode: CheckMode::Exhaustive { triples },
                                counterexample: Some(w),
                            };
                        }
                    }
                }
            }
            AxiomReport {
                passed: true,
                mode: CheckMode::Exhaustive { triples },
                counterexample: None,
            }
        }
        Some((seed, count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..count {
                let x = window.choose(&mut rng).unwrap();
                let y = window.choose(&mut rng).unwrap();
                let z = window.choose(&mut rng).unwrap();
                if let Some(w) = check_triple(x, y, z) {
                    return AxiomReport {
                        passed: false,
                        mode: CheckMode::Sampled { seed, triples: i + 1 },
                        counterexample: Some(w),
                    };
                }
            }
            AxiomReport {
                passed: true,
                mode: CheckMode::Sampled { seed, triples: count },
                counterexample: None,
            }
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct InvarianceReport {
    pub passed: bool,
    pub pairs_checked: u64,
    pub witness: Option<String>,
}

/// Verify d(gx, gy) = d(x, y) for every probe element over all window
/// pairs. Checking the generators suffices for invariance under the whole
/// group; probes outside the group are the negative controls.
pub fn check_invariance(
    d: &Pseudometric,
    action: &ActionDescriptor,
    window: &[Point],
    probes: &[GroupElement],
) -> Result<InvarianceReport> {
    let mut pairs = 0u64;
    for g in probes {
        for (i, x) in window.iter().enumerate() {
            for y in &window[i..] {
                pairs += 1;
                let gx = action.apply(g, x)?;
                let gy = action.apply(g, y)?;
                let lhs = d.eval(&gx, &gy);
                let rhs = d.eval(x, y);
                if lhs != rhs {
                    return Ok(InvarianceReport {
                        passed: false,
                        pairs_checked: pairs,
                        witness: Some(format!(
                            "g = {g}: d({gx},{gy}) = {lhs} but d({x},{y}) = {rhs}"
                        )),
                    });
                }
            }
        }
    }
    Ok(InvarianceReport {
        passed: true,
        pairs_checked: pairs,
        witness: None,
    })
}

/// An exactly enumerated ball {y : d(x,y) < r}.
#[derive(Clone, Debug)]
pub struct BallEnumeration {
    pub center: Point,
    pub radius: ExtReal,
    /// (point, distance, oracle hops), sorted by point order.
    pub points: Vec<(Point, ExtReal, u32)>,
    /// True when the search terminated with the frontier at or beyond the
    /// radius, certifying properness of this ball.
    pub certified: bool,
}

/// Enumerate the ball of radius `r` around `x` by shortest-path region
/// growth over the neighbor oracle, then filter by exact evaluation.
pub fn enumerate_ball(
    d: &Pseudometric,
    x: &Point,
    r: &ExtReal,
    budget: u64,
) -> Result<BallEnumeration> {
    if !r.is_finite() {
        return Err(Error::usage("ball radius must be finite"));
    }
    if r.is_zero() {
        return Ok(BallEnumeration {
            center: x.clone(),
            radius: r.clone(),
            points: Vec::new(),
            certified: true,
        });
    }
    let Some(oracle) = d.neighbor_fn() else {
        return Err(Error::capability(format!(
            "{} carries no neighbor oracle; ball enumeration needs one",
            d.provenance
        )));
    };
    if d.min_edge_weight.is_none() {
        return Err(Error::capability(
            "neighbor oracle lacks a certified positive edge-weight bound",
        ));
    }
    let result = dijkstra(
        x,
        |p| Ok(oracle(p)?.into_iter().map(|(q, w)| (q, w, EdgeKind::Plain)).collect()),
        SearchParams {
            cutoff: Some(r),
            targets: None,
            budget,
            what: "ball enumeration",
        },
    )?;
    // With an exact oracle the settled distances are the metric, so the
    // region is the ball; a lower-bounding oracle yields a superset that
    // the exact evaluation filters.
    let mut points: Vec<(Point, ExtReal, u32)> = result
        .settled
        .into_iter()
        .filter(|s| d.oracle_exact || d.eval(x, &s.point) < *r)
        .map(|s| (s.point, s.dist, s.hops))
        .collect();
    points.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(BallEnumeration {
        center: x.clone(),
        radius: r.clone(),
        points,
        certified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionKind;
    use crate::group::GroupDescriptor;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn window_z(lo: i64, hi: i64) -> Vec<Point> {
        (lo..=hi).map(|x| Point::lattice(&[x])).collect()
    }

    fn coord(p: &Point) -> BigRational {
        let Point::Lattice(v) = p else { panic!() };
        BigRational::from_integer(v[0].clone())
    }

    #[test]
    fn d_f_identity_is_absolute_difference() {
        let d = Pseudometric::d_f("identity", coord);
        assert_eq!(
            d.eval(&Point::lattice(&[3]), &Point::lattice(&[-2])),
            ExtReal::from_int(5)
        );
    }

    #[test]
    fn d_f_constant_is_zero() {
        let d = Pseudometric::d_f("const", |_| num::Zero::zero());
        assert!(d.eval(&Point::lattice(&[1]), &Point::lattice(&[9])).is_zero());
    }

    #[test]
    fn d_f_square_triangle() {
        let d = Pseudometric::d_f("square", |p| {
            let c = coord(p);
            &c * &c
        });
        assert_eq!(d.eval(&Point::lattice(&[1]), &Point::lattice(&[2])), ExtReal::from_int(3));
        let a = d.eval(&Point::lattice(&[1]), &Point::lattice(&[2]));
        let b = d.eval(&Point::lattice(&[2]), &Point::lattice(&[3]));
        let c = d.eval(&Point::lattice(&[1]), &Point::lattice(&[3]));
        assert!(a + b >= c);
    }

    #[test]
    fn sup_is_idempotent_on_samples() {
        let d = Pseudometric::discrete();
        let s = combine(Combine::Sup, &[d.clone(), d.clone()]).unwrap();
        for x in window_z(-3, 3) {
            for y in window_z(-3, 3) {
                assert_eq!(s.eval(&x, &y), d.eval(&x, &y));
            }
        }
    }

    #[test]
    fn sum_of_discrete_and_identity() {
        let s = combine(
            Combine::Sum,
            &[Pseudometric::discrete(), Pseudometric::d_f("identity", coord)],
        )
        .unwrap();
        assert_eq!(s.eval(&Point::lattice(&[0]), &Point::lattice(&[4])), ExtReal::from_int(5));
    }

    #[test]
    fn cap_clamps_at_one() {
        let c = combine(Combine::CapOne, &[Pseudometric::d_f("identity", coord)]).unwrap();
        assert_eq!(c.eval(&Point::lattice(&[0]), &Point::lattice(&[7])), ExtReal::from_int(1));
    }

    #[test]
    fn cap_preserves_small_balls() {
        // B_cap(x, r) = B_d(x, r) for r < 1, by window scan.
        let d = Pseudometric::d_f("identity", coord);
        let c = combine(Combine::CapOne, &[d.clone()]).unwrap();
        let w = window_z(-4, 4);
        let r = ExtReal::from_ratio(1, 2);
        for x in &w {
            for y in &w {
                assert_eq!(d.eval(x, y) < r, c.eval(x, y) < r);
            }
        }
    }

    #[test]
    fn axioms_pass_for_discrete() {
        let rep = check_axioms(&Pseudometric::discrete(), &window_z(-2, 2), None);
        assert!(rep.passed);
    }

    #[test]
    fn axioms_fail_with_triangle_witness() {
        let table = vec![
            vec![q(0), q(1), q(3)],
            vec![q(1), q(0), q(1)],
            vec![q(3), q(1), q(0)],
        ];
        let d = Pseudometric::from_table(table);
        let w = vec![Point::Labeled(0), Point::Labeled(1), Point::Labeled(2)];
        let rep = check_axioms(&d, &w, None);
        assert!(!rep.passed);
        assert!(rep.counterexample.unwrap().contains("<"));
    }

    #[test]
    fn invariance_of_differences_under_translation() {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::LatticeTranslation,
        );
        let d = Pseudometric::d_f("identity", coord);
        let rep = check_invariance(&d, &action, &window_z(-3, 3), &action.group.generators.clone())
            .unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn discrete_metric_without_oracle_cannot_enumerate() {
        let d = Pseudometric::discrete();
        match enumerate_ball(&d, &Point::lattice(&[0]), &ExtReal::from_int(2), 1000) {
            Err(Error::Capability(_)) => {}
            other => panic!("expected capability error, got {other:?}"),
        }
    }

    #[test]
    fn zero_radius_ball_is_empty() {
        let d = Pseudometric::discrete();
        let b = enumerate_ball(&d, &Point::lattice(&[0]), &ExtReal::zero(), 10).unwrap();
        assert!(b.points.is_empty());
        assert!(b.certified);
    }
}
