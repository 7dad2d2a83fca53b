//! The bridge construction: weighted two-point links between islands,
//! indexed by coset representatives of the island subgroup, and the final
//! assembly of a proper invariant metric as the pointwise supremum of a
//! compatible base with the bridge-path metric.

use crate::action::{ActionDescriptor, Point};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::group::{coset_enumeration, GroupElement, SubgroupDescriptor};
use crate::metric::{check_invariance, combine, Combine, enumerate_ball, Pseudometric};
use crate::shortest_path::{dijkstra, EdgeKind, SearchParams};
use crate::stick::{CutoffValue, StickGraph};
use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Coset representatives `g_n` of the island subgroup, with the weight of a
/// bridge through `g_n` equal to its enumeration index `n`.
#[derive(Clone, Debug)]
pub struct BridgeAtlas {
    pub stick: StickGraph,
    pub subgroup: SubgroupDescriptor,
    /// reps[0] is the identity; reps[n] carries weight n.
    pub reps: Vec<GroupElement>,
    pub exhausted: bool,
    /// Fault-injection hook for negative-control tests: scales every bridge
    /// weight. The constructions keep it at 1.
    weight_scale: BigRational,
    budget: u64,
}

impl BridgeAtlas {
    /// Enumerate coset representatives up to weight `cap` (so cap + 1
    /// representatives including the identity, fewer when the coset space
    /// is exhausted).
    pub fn new(stick: StickGraph, cap: usize, budget: u64) -> Result<BridgeAtlas> {
        let subgroup = stick.island_subgroup()?;
        let reps = coset_enumeration(&stick.action.group, &subgroup, cap + 1, budget)?;
        Ok(BridgeAtlas {
            stick,
            subgroup,
            reps: reps.reps,
            exhausted: reps.exhausted,
            weight_scale: BigRational::one(),
            budget,
        })
    }

    /// See `weight_scale`; returns a tampered copy for negative controls.
    pub fn with_weight_scale(mut self, scale: BigRational) -> BridgeAtlas {
        assert!(scale.is_positive());
        self.weight_scale = scale;
        self
    }

    pub fn max_weight(&self) -> usize {
        self.reps.len().saturating_sub(1)
    }

    fn action(&self) -> &ActionDescriptor {
        &self.stick.action
    }

    /// Bridge partners of `y` with weight at most `weight_cap`: for every
    /// translate coordinate h with y in hF and every representative index
    /// 1 <= n <= cap, the points h g_n h^-1 y and h g_n^-1 h^-1 y at weight
    /// n. Duplicates keep the minimum weight.
    pub fn bridge_neighbors(&self, y: &Point, weight_cap: usize) -> Result<Vec<(Point, ExtReal)>> {
        if weight_cap > self.max_weight() && !self.exhausted {
            return Err(Error::usage(format!(
                "bridge atlas enumerated to weight {} but cap {weight_cap} was requested; \
                 rebuild the atlas",
                self.max_weight()
            )));
        }
        let mut best: BTreeMap<Point, ExtReal> = BTreeMap::new();
        for h in self.stick.translates_through(y)? {
            let f = self.action().apply(&h.inv(), y)?;
            debug_assert!(self.stick.fset.points.contains(&f));
            for n in 1..=weight_cap.min(self.max_weight()) {
                let weight = ExtReal::finite(
                    BigRational::from_integer(BigInt::from(n)) * &self.weight_scale,
                );
                for g in [h.mul(&self.reps[n]), h.mul(&self.reps[n].inv())] {
                    let partner = self.action().apply(&g, &f)?;
                    if partner == *y {
                        continue;
                    }
                    let slot = best.entry(partner).or_insert_with(|| weight.clone());
                    if weight < *slot {
                        *slot = weight.clone();
                    }
                }
            }
        }
        Ok(best.into_iter().collect())
    }

    fn mixed_edges(
        &self,
        p: &Point,
        weight_cap: usize,
    ) -> Result<Vec<(Point, ExtReal, EdgeKind)>> {
        let mut out: Vec<(Point, ExtReal, EdgeKind)> = self
            .stick
            .stick_neighbors(p)?
            .into_iter()
            .map(|(q, w)| (q, w, EdgeKind::Plain))
            .collect();
        out.extend(
            self.bridge_neighbors(p, weight_cap)?
                .into_iter()
                .map(|(q, w)| (q, w, EdgeKind::Bridge)),
        );
        Ok(out)
    }

    /// The bridge-path distance from x to y with search radius `r`: Dijkstra
    /// over stick edges plus bridge edges of weight at most floor(r).
    pub fn bridge_metric(&self, x: &Point, y: &Point, r: &ExtReal) -> Result<CutoffValue> {
        let ExtReal::Finite(rq) = r else {
            return Err(Error::usage("bridge metric needs a finite search radius"));
        };
        if x == y {
            return Ok(CutoffValue::Finite {
                value: ExtReal::zero(),
                hops: 0,
            });
        }
        let weight_cap = required_weight_cap(rq, &self.weight_scale);
        if weight_cap > self.max_weight() && !self.exhausted {
            return Err(Error::usage(format!(
                "bridge atlas enumerated to weight {} cannot answer radius {r}; rebuild",
                self.max_weight()
            )));
        }
        let target: std::collections::BTreeSet<Point> = std::iter::once(y.clone()).collect();
        let result = dijkstra(
            x,
            |p| self.mixed_edges(p, weight_cap),
            SearchParams {
                cutoff: Some(r),
                targets: Some(&target),
                budget: self.budget,
                what: "bridge metric query",
            },
        )?;
        if result.target_settled {
            let s = result.settled.last().expect("target settled");
            return Ok(CutoffValue::Finite {
                value: s.dist.clone(),
                hops: s.hops,
            });
        }
        if !result.pruned {
            Ok(CutoffValue::InfiniteCertified)
        } else {
            Ok(CutoffValue::AtLeast(r.clone()))
        }
    }

    /// Enumerate the ball {y : d_B(x, y) < r} with per-point path data
    /// (hops and bridge-edge counts along the settled hop-minimal optimal
    /// route), checking the bridge-count bound: a path of weight < r uses
    /// fewer than r bridges, so its implied length stays at most 2r + 1.
    pub fn ball(&self, x: &Point, r: &ExtReal) -> Result<Vec<crate::shortest_path::Settled>> {
        let ExtReal::Finite(rq) = r else {
            return Err(Error::usage("bridge ball needs a finite radius"));
        };
        let weight_cap = required_weight_cap(rq, &self.weight_scale);
        if weight_cap > self.max_weight() && !self.exhausted {
            return Err(Error::usage(format!(
                "bridge atlas enumerated to weight {} cannot answer radius {r}; rebuild",
                self.max_weight()
            )));
        }
        let result = dijkstra(
            x,
            |p| self.mixed_edges(p, weight_cap),
            SearchParams {
                cutoff: Some(r),
                targets: None,
                budget: self.budget,
                what: "bridge ball enumeration",
            },
        )?;
        for s in &result.settled {
            let b = BigRational::from_integer(BigInt::from(s.bridge_edges)) * &self.weight_scale;
            if ExtReal::Finite(b) >= *r {
                return Err(Error::verification(
                    "bridge-count bound",
                    format!(
                        "path to {} of weight {} uses {} bridges at radius {r}",
                        s.point, s.dist, s.bridge_edges
                    ),
                ));
            }
        }
        Ok(result.settled)
    }

    /// The bridge metric as a pseudometric value with the mixed stick-and-
    /// bridge neighbor oracle. Evaluations escalate the search radius up to
    /// `eval_cap`.
    pub fn pseudometric(&self, eval_cap: u64) -> Result<Pseudometric> {
        let Some(stick_delta) = self.stick.delta.positive() else {
            return Err(Error::usage("bridge pseudometric needs positive stick weights"));
        };
        let atlas = self.clone();
        let atlas_for_oracle = self.clone();
        let full_cap = self.max_weight();
        let min_w = stick_delta.min(self.weight_scale.clone());
        // An unexhausted atlas can only answer searches whose radius stays
        // within the enumerated representative weights.
        let max_radius = if self.exhausted {
            ExtReal::from_int(eval_cap)
        } else {
            ExtReal::from_int(full_cap as u64 + 1).min(ExtReal::from_int(eval_cap))
        };
        let mut d = Pseudometric::from_fn(
            format!("bridge({}, reps={})", self.stick.base.provenance, self.reps.len()),
            move |x, y| {
                let mut r = ExtReal::from_int(2).min(max_radius.clone());
                loop {
                    match atlas
                        .bridge_metric(x, y, &r)
                        .expect("bridge metric query within budget")
                    {
                        CutoffValue::Finite { value, .. } => return value,
                        CutoffValue::InfiniteCertified => return ExtReal::Infinite,
                        CutoffValue::AtLeast(_) => {
                            assert!(
                                r < max_radius,
                                "bridge evaluation needs radius beyond {max_radius}; \
                                 rebuild with a larger atlas"
                            );
                            r = r
                                .scale(&BigRational::from_integer(4.into()))
                                .min(max_radius.clone());
                        }
                    }
                }
            },
        );
        let oracle = Arc::new(move |p: &Point| {
            let mut out = atlas_for_oracle.stick.stick_neighbors(p)?;
            out.extend(atlas_for_oracle.bridge_neighbors(p, full_cap)?);
            Ok(out)
        });
        d = d.with_neighbor_oracle(oracle, min_w, true);
        d.flags.claims_invariant = true;
        d.flags.claims_proper = true;
        d.flags.claims_finite = true;
        Ok(d)
    }
}

/// Bridges usable inside a path of total weight < r: scaled weight strictly
/// below r, so index at most ceil(r / scale) - 1.
fn required_weight_cap(r: &BigRational, scale: &BigRational) -> usize {
    let q = (r / scale).ceil().to_integer();
    (q - BigInt::from(1)).to_usize().unwrap_or(0)
}

/// Every verifier result the assembly must discharge before the supremum
/// metric counts as a certified witness.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AssemblyDischarge {
    pub invariant: bool,
    pub finite: bool,
    pub compatible: bool,
    pub proper: bool,
    pub ball_sizes: Vec<(String, u64)>,
    pub pairs_checked: u64,
}

#[derive(Clone)]
pub struct AssembledMetric {
    pub metric: Pseudometric,
    pub discharge: AssemblyDischarge,
}

/// sup(base, d_B), with all four claims discharged on the window: group
/// invariance, finiteness, positivity on distinct pairs, and properness via
/// exact ball enumeration at the given radii around `center`. Any failure
/// rejects the assembly with its witness.
pub fn assemble_proper_metric(
    base: &Pseudometric,
    bridge: &Pseudometric,
    action: &ActionDescriptor,
    window: &[Point],
    center: &Point,
    radii: &[u32],
    budget: u64,
) -> Result<AssembledMetric> {
    let mut metric = combine(Combine::Sup, &[base.clone(), bridge.clone()])?;
    metric.flags.claims_invariant = true;
    metric.flags.claims_proper = true;
    metric.flags.claims_finite = true;
    metric.flags.claims_compatible = true;

    let gens = action.group.generators.clone();
    let inv = check_invariance(&metric, action, window, &gens)?;
    if !inv.passed {
        return Err(Error::verification(
            "assembled metric invariance",
            inv.witness.unwrap_or_default(),
        ));
    }
    let mut pairs = inv.pairs_checked;
    for (i, x) in window.iter().enumerate() {
        for y in window.iter().skip(i + 1) {
            pairs += 1;
            let v = metric.eval(x, y);
            if !v.is_finite() {
                return Err(Error::verification(
                    "assembled metric finiteness",
                    format!("d({x},{y}) is infinite"),
                ));
            }
            if v.is_zero() {
                return Err(Error::verification(
                    "assembled metric compatibility",
                    format!("d({x},{y}) = 0 on distinct points"),
                ));
            }
        }
    }
    // A supremum ball is the bridge-metric ball filtered by the base:
    // sup < r exactly when both components are.
    let mut ball_sizes = Vec::new();
    for r in radii {
        let radius = ExtReal::from_int(u64::from(*r));
        let ball = enumerate_ball(bridge, center, &radius, budget)?;
        if !ball.certified {
            return Err(Error::verification(
                "assembled metric properness",
                format!("ball of radius {r} not certified finite"),
            ));
        }
        let size = ball
            .points
            .iter()
            .filter(|(p, _, _)| base.eval(center, p) < radius)
            .count() as u64;
        ball_sizes.push((format!("|B({},{r})|", center), size));
    }
    Ok(AssembledMetric {
        discharge: AssemblyDischarge {
            invariant: true,
            finite: true,
            compatible: true,
            proper: true,
            ball_sizes,
            pairs_checked: pairs,
        },
        metric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionKind;
    use crate::group::{GroupDescriptor, GroupFamily};
    use crate::koszul::verify_fundamental_set;

    fn two_z_atlas(cap: usize) -> BridgeAtlas {
        let g = GroupDescriptor::new(
            GroupFamily::Lattice { rank: 1 },
            vec![GroupElement::lattice(&[2])],
        )
        .unwrap();
        let action = ActionDescriptor::new(g, ActionKind::LatticeTranslation);
        let window: Vec<Point> = (-8..=9).map(|x| Point::lattice(&[x])).collect();
        let f = verify_fundamental_set(
            &action,
            &[Point::lattice(&[0]), Point::lattice(&[1])],
            &window,
        )
        .unwrap();
        let stick = StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap();
        BridgeAtlas::new(stick, cap, 1_000_000).unwrap()
    }

    #[test]
    fn reps_start_with_identity_in_ball_order() {
        let atlas = two_z_atlas(4);
        let want: Vec<GroupElement> = [0i64, 2, -2, 4, -4]
            .iter()
            .map(|&x| GroupElement::lattice(&[x]))
            .collect();
        assert_eq!(atlas.reps, want);
        assert!(!atlas.exhausted);
    }

    #[test]
    fn parity_bridge_neighbors_cap_two() {
        // Index weights: g_1 = +2 and g_1^-1 = -2 at weight 1; the weight-2
        // representative -2 and its inverse duplicate those partners and are
        // dropped by the keep-minimum rule.
        let atlas = two_z_atlas(4);
        let n = atlas.bridge_neighbors(&Point::lattice(&[0]), 2).unwrap();
        let want = vec![
            (Point::lattice(&[-2]), ExtReal::from_int(1)),
            (Point::lattice(&[2]), ExtReal::from_int(1)),
        ];
        assert_eq!(n, want);
        // Cap 3 brings in the weight-3 representative +4 and its inverse.
        let n3 = atlas.bridge_neighbors(&Point::lattice(&[0]), 3).unwrap();
        assert!(n3.contains(&(Point::lattice(&[4]), ExtReal::from_int(3))));
        assert!(n3.contains(&(Point::lattice(&[-4]), ExtReal::from_int(3))));
    }

    #[test]
    fn single_island_scenario_has_no_bridges() {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::LatticeTranslation,
        );
        let window: Vec<Point> = (-6..=6).map(|x| Point::lattice(&[x])).collect();
        let f = verify_fundamental_set(
            &action,
            &[Point::lattice(&[-1]), Point::lattice(&[0]), Point::lattice(&[1])],
            &window,
        )
        .unwrap();
        let stick = StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap();
        let atlas = BridgeAtlas::new(stick, 4, 1_000_000).unwrap();
        assert_eq!(atlas.reps.len(), 1);
        assert!(atlas.exhausted);
        assert!(atlas.bridge_neighbors(&Point::lattice(&[0]), 4).unwrap().is_empty());
    }

    #[test]
    fn two_line_bridges_stay_on_their_copy() {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::ProductLine { copies: Some(2) },
        );
        let mut window = Vec::new();
        for n in -4i64..=4 {
            window.push(Point::composite(0, n));
            window.push(Point::composite(1, n));
        }
        window.sort();
        let f = verify_fundamental_set(
            &action,
            &[Point::composite(0, 0), Point::composite(1, 0)],
            &window,
        )
        .unwrap();
        let stick = StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap();
        let atlas = BridgeAtlas::new(stick, 2, 1_000_000).unwrap();
        let n = atlas.bridge_neighbors(&Point::composite(0, 0), 2).unwrap();
        // Partners are g_n and g_n^-1 applied to 0_a: nonzero coordinates on
        // copy a, and the -1 partner already appears at weight 1 through the
        // inverse of g_1 (bridge length is the smallest valid index).
        assert!(n.iter().all(|(p, _)| matches!(p, Point::Composite { copy: 0, .. })));
        assert!(n.contains(&(Point::composite(0, 1), ExtReal::from_int(1))));
        assert!(n.contains(&(Point::composite(0, -1), ExtReal::from_int(1))));
    }

    #[test]
    fn bridge_metric_values_on_parity_scenario() {
        // Mixed-graph Dijkstra oracle values frozen from the window [-8,8]:
        // d_B(0,2) = 1 (one bridge), d_B(0,4) = 2 (two unit bridges),
        // d_B(0,1) = 1 (same island, stick weight 1).
        let atlas = two_z_atlas(8);
        let r = ExtReal::from_int(8);
        let d02 = atlas.bridge_metric(&Point::lattice(&[0]), &Point::lattice(&[2]), &r).unwrap();
        assert_eq!(d02.value(), ExtReal::from_int(1));
        let d04 = atlas.bridge_metric(&Point::lattice(&[0]), &Point::lattice(&[4]), &r).unwrap();
        assert_eq!(d04.value(), ExtReal::from_int(2));
        let d01 = atlas.bridge_metric(&Point::lattice(&[0]), &Point::lattice(&[1]), &r).unwrap();
        assert_eq!(d01.value(), ExtReal::from_int(1));
        let dxx = atlas.bridge_metric(&Point::lattice(&[3]), &Point::lattice(&[3]), &r).unwrap();
        assert!(dxx.value().is_zero());
    }

    #[test]
    fn assembly_discharges_all_flags_on_parity_scenario() {
        let atlas = two_z_atlas(24);
        let window: Vec<Point> = (-4..=5).map(|x| Point::lattice(&[x])).collect();
        let d_b = atlas.pseudometric(1 << 20).unwrap();
        let cached = d_b.cached_on_window(&window, 1_000_000).unwrap();
        let assembled = assemble_proper_metric(
            &Pseudometric::discrete(),
            &cached,
            &atlas.stick.action,
            &window,
            &Point::lattice(&[0]),
            &[1, 2, 4, 8],
            1_000_000,
        )
        .unwrap();
        assert!(assembled.discharge.invariant);
        assert!(assembled.discharge.proper);
        // max(discrete, d_B)(0, 2) = max(1, 1) = 1
        assert_eq!(
            assembled.metric.eval(&Point::lattice(&[0]), &Point::lattice(&[2])),
            ExtReal::from_int(1)
        );
        assert!(assembled
            .metric
            .eval(&Point::lattice(&[2]), &Point::lattice(&[2]))
            .is_zero());
    }
}
