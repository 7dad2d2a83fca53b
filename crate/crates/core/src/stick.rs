//! The measuring-stick construction: a weighted graph whose vertices are
//! the points of X and whose edges are pairs of points lying in a common
//! translate gF, weighted by the base pseudometric. Its shortest-path
//! pseudometric, the stick metric, dominates the base, agrees with it
//! inside every translate, and is finite exactly on stick-connected
//! components (the islands).

use crate::action::{ActionDescriptor, Point};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::group::{
    coset_key, subgroup_membership, GroupElement, GroupFamily, SubgroupDescriptor,
};
use crate::koszul::FundamentalSet;
use crate::metric::Pseudometric;
use crate::shortest_path::{dijkstra, EdgeKind, SearchParams};
use num::{BigRational, One, Signed};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Certified lower bound on stick-edge weights. Invariance of the base
/// makes the minimum over distinct pairs of F a global bound.
#[derive(Clone, Debug)]
pub enum DeltaBound {
    /// F is a singleton: there are no sticks between distinct points.
    NoEdges,
    Positive(BigRational),
    NotPositive { witness: String },
}

impl DeltaBound {
    pub fn positive(&self) -> Option<BigRational> {
        match self {
            DeltaBound::Positive(d) => Some(d.clone()),
            DeltaBound::NoEdges => Some(BigRational::one()),
            DeltaBound::NotPositive { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StickGraph {
    pub action: ActionDescriptor,
    pub fset: FundamentalSet,
    pub base: Pseudometric,
    pub delta: DeltaBound,
    /// A verified Lebesgue number, once one is known; lets shortest-path
    /// queries check the path-length bound.
    pub epsilon: Option<BigRational>,
    budget: u64,
}

/// Value of a cutoff shortest-path query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutoffValue {
    Finite { value: ExtReal, hops: u32 },
    /// The search hit the cutoff; the true value is at least this.
    AtLeast(ExtReal),
    /// The whole component was settled without reaching the target.
    InfiniteCertified,
}

impl CutoffValue {
    pub fn value(&self) -> ExtReal {
        match self {
            CutoffValue::Finite { value, .. } => value.clone(),
            CutoffValue::AtLeast(v) => v.clone(),
            CutoffValue::InfiniteCertified => ExtReal::Infinite,
        }
    }
}

impl StickGraph {
    /// Build the graph for an action, fundamental set and G-invariant,
    /// finite-valued base pseudometric.
    pub fn new(
        action: &ActionDescriptor,
        fset: &FundamentalSet,
        base: &Pseudometric,
        budget: u64,
    ) -> Result<StickGraph> {
        if !base.flags.claims_invariant {
            return Err(Error::usage(
                "stick graphs need a G-invariant base pseudometric (claim the flag \
                 after an invariance check)",
            ));
        }
        let mut delta = DeltaBound::NoEdges;
        for (i, u) in fset.points.iter().enumerate() {
            for v in fset.points.iter().skip(i + 1) {
                let w = base.eval(u, v);
                match (&delta, &w) {
                    (_, ExtReal::Infinite) => {
                        return Err(Error::usage(format!(
                            "base pseudometric is infinite on the F-pair ({u},{v})"
                        )))
                    }
                    (DeltaBound::NotPositive { .. }, _) => {}
                    (_, ExtReal::Finite(q)) if !q.is_positive() => {
                        delta = DeltaBound::NotPositive {
                            witness: format!("stick ({u},{v}) has weight 0"),
                        };
                    }
                    (DeltaBound::NoEdges, ExtReal::Finite(q)) => {
                        delta = DeltaBound::Positive(q.clone());
                    }
                    (DeltaBound::Positive(cur), ExtReal::Finite(q)) => {
                        if q < cur {
                            delta = DeltaBound::Positive(q.clone());
                        }
                    }
                }
            }
        }
        Ok(StickGraph {
            action: action.clone(),
            fset: fset.clone(),
            base: base.clone(),
            delta,
            epsilon: None,
            budget,
        })
    }

    pub fn with_epsilon(mut self, epsilon: BigRational) -> StickGraph {
        self.epsilon = Some(epsilon);
        self
    }

    /// Translates of F containing `x`, i.e. the exact transporter of F to x.
    pub fn translates_through(&self, x: &Point) -> Result<Vec<GroupElement>> {
        let t = self
            .action
            .transporter(&self.fset.points, std::slice::from_ref(x))?;
        Ok(t.exact_set()?.elements.clone())
    }

    /// The stick neighbors of `x`: the union of gF \ {x} over translates
    /// containing x, weighted by the base pseudometric. Deterministic order,
    /// deduplicated.
    pub fn stick_neighbors(&self, x: &Point) -> Result<Vec<(Point, ExtReal)>> {
        let mut seen: BTreeSet<Point> = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.translates_through(x)? {
            for f in &self.fset.points {
                let y = self.action.apply(&g, f)?;
                if y != *x && seen.insert(y.clone()) {
                    let w = self.base.eval(x, &y);
                    out.push((y, w));
                }
            }
        }
        Ok(out)
    }

    fn neighbor_edges(&self, x: &Point) -> Result<Vec<(Point, ExtReal, EdgeKind)>> {
        Ok(self
            .stick_neighbors(x)?
            .into_iter()
            .map(|(p, w)| (p, w, EdgeKind::Plain))
            .collect())
    }

    /// The stick-path distance from x to y, cut off at `cap`.
    pub fn stick_metric(&self, x: &Point, y: &Point, cap: &ExtReal) -> Result<CutoffValue> {
        if self.delta.positive().is_none() {
            return Err(Error::usage(
                "stick metric undefined: some stick has weight 0 (no positive bound)",
            ));
        }
        if x == y {
            return Ok(CutoffValue::Finite {
                value: ExtReal::zero(),
                hops: 0,
            });
        }
        let target: std::collections::BTreeSet<Point> = std::iter::once(y.clone()).collect();
        let r = dijkstra(
            x,
            |p| self.neighbor_edges(p),
            SearchParams {
                cutoff: if cap.is_finite() { Some(cap) } else { None },
                targets: Some(&target),
                budget: self.budget,
                what: "stick metric query",
            },
        )?;
        if r.target_settled {
            let s = r.settled.last().expect("target settled");
            if let (Some(eps), ExtReal::Finite(len)) = (&self.epsilon, &s.dist) {
                // Path-length bound: a hop-minimal optimal path of d-length L
                // has fewer than 2L/eps + 1 edges.
                let bound = BigRational::from_integer(2.into()) * len / eps
                    + BigRational::one();
                if BigRational::from_integer(s.hops.into()) >= bound {
                    return Err(Error::verification(
                        "stick path-length bound",
                        format!(
                            "path {x} -> {y} of length {} uses {} hops, bound {}",
                            s.dist, s.hops, bound
                        ),
                    ));
                }
            }
            return Ok(CutoffValue::Finite {
                value: s.dist.clone(),
                hops: s.hops,
            });
        }
        if !r.pruned {
            Ok(CutoffValue::InfiniteCertified)
        } else {
            Ok(CutoffValue::AtLeast(cap.clone()))
        }
    }

    /// The stick metric as a pseudometric value with a neighbor oracle.
    /// Evaluations escalate their cutoff up to `eval_cap` and panic beyond
    /// it; size the cap to the window being studied.
    pub fn pseudometric(&self, eval_cap: u64) -> Result<Pseudometric> {
        let Some(min_w) = self.delta.positive() else {
            return Err(Error::usage(
                "stick pseudometric needs a positive edge-weight bound",
            ));
        };
        let graph = self.clone();
        let graph_for_oracle = self.clone();
        let mut d = Pseudometric::from_fn(
            format!(
                "stick({}, |F|={})",
                self.base.provenance,
                self.fset.points.len()
            ),
            move |x, y| {
                let mut cap = ExtReal::from_int(2);
                loop {
                    match graph
                        .stick_metric(x, y, &cap)
                        .expect("stick metric query within budget")
                    {
                        CutoffValue::Finite { value, .. } => return value,
                        CutoffValue::InfiniteCertified => return ExtReal::Infinite,
                        CutoffValue::AtLeast(_) => {
                            cap = cap.scale(&BigRational::from_integer(4.into()));
                            assert!(
                                cap <= ExtReal::from_int(eval_cap),
                                "stick evaluation exceeded cap {eval_cap}; \
                                 rebuild with a larger cap"
                            );
                        }
                    }
                }
            },
        );
        let oracle = Arc::new(move |p: &Point| graph_for_oracle.stick_neighbors(p));
        d = d.with_neighbor_oracle(oracle, min_w, true);
        d.flags.claims_invariant = true;
        Ok(d)
    }

    /// The largest dyadic candidate from the grid delta * 2^-k,
    /// k = 0..=precision, such that every base-metric ball of that radius
    /// around a window point stays inside a single translate of F.
    pub fn lebesgue_number(&self, window: &[Point], precision: u32) -> Result<LebesgueResult> {
        let grid_base = self.delta.positive().unwrap_or_else(BigRational::one);
        let mut last_witness = None;
        let two = BigRational::from_integer(2.into());
        let mut candidate = grid_base;
        for _ in 0..=precision {
            let eps = ExtReal::Finite(candidate.clone());
            let mut ok = true;
            'points: for x in window {
                let ball: Vec<&Point> = window
                    .iter()
                    .filter(|y| self.base.eval(x, y) < eps)
                    .collect();
                for g in self.translates_through(x)? {
                    let mut translate: BTreeSet<Point> = BTreeSet::new();
                    for f in &self.fset.points {
                        translate.insert(self.action.apply(&g, f)?);
                    }
                    if ball.iter().all(|y| translate.contains(y)) {
                        continue 'points;
                    }
                }
                ok = false;
                last_witness = Some(format!(
                    "ball of radius {} around {x} fits in no translate",
                    ExtReal::Finite(candidate.clone())
                ));
                break;
            }
            if ok {
                return Ok(LebesgueResult {
                    epsilon: Some(candidate),
                    witness: None,
                });
            }
            candidate /= &two;
        }
        Ok(LebesgueResult {
            epsilon: None,
            witness: last_witness,
        })
    }

    /// The subgroup generated by the transporter of F to itself; islands
    /// biject with its cosets.
    pub fn island_subgroup(&self) -> Result<SubgroupDescriptor> {
        let t = self.action.transporter(&self.fset.points, &self.fset.points)?;
        let gff = t.exact_set()?.elements.clone();
        match self.action.group.family {
            GroupFamily::Lattice { .. } => {
                let basis = gff
                    .iter()
                    .map(|g| match g {
                        GroupElement::Lattice(v) => v.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Ok(SubgroupDescriptor::Lattice { basis })
            }
            GroupFamily::Permutation { .. } => {
                Ok(SubgroupDescriptor::FiniteGenerated { generators: gff })
            }
            GroupFamily::Free { .. } => {
                // Decidable special case: if the closure of G_FF under short
                // products reaches every generator, the subgroup is the
                // whole group (single island).
                let mut pool: BTreeSet<GroupElement> = gff.iter().cloned().collect();
                for g in &gff {
                    pool.insert(g.inv());
                }
                for _ in 0..2 {
                    let snapshot: Vec<GroupElement> = pool.iter().cloned().collect();
                    for a in &snapshot {
                        for b in &snapshot {
                            pool.insert(a.mul(b));
                            if pool.len() as u64 > self.budget {
                                return Err(Error::budget("free island subgroup closure", self.budget));
                            }
                        }
                    }
                    if self.action.group.generators.iter().all(|g| pool.contains(g)) {
                        return Ok(SubgroupDescriptor::Whole);
                    }
                }
                Err(Error::capability(
                    "free-group island subgroup is not decidable here; \
                     falling back to connectivity-only islands",
                ))
            }
        }
    }

    /// Partition the window into islands by union-find over the stick
    /// edges between window points.
    pub fn islands(&self, window: &[Point]) -> Result<IslandPartition> {
        let transporters: Vec<BTreeSet<GroupElement>> = window
            .iter()
            .map(|x| {
                self.translates_through(x)
                    .map(|v| v.into_iter().collect::<BTreeSet<_>>())
            })
            .collect::<Result<_>>()?;
        let mut uf = UnionFind::new(window.len());
        for i in 0..window.len() {
            for j in i + 1..window.len() {
                if !transporters[i].is_disjoint(&transporters[j]) {
                    uf.union(i, j);
                }
            }
        }
        let mut ids = vec![usize::MAX; window.len()];
        let mut roots: Vec<usize> = Vec::new();
        for i in 0..window.len() {
            let r = uf.find(i);
            let id = match roots.iter().position(|&x| x == r) {
                Some(p) => p,
                None => {
                    roots.push(r);
                    roots.len() - 1
                }
            };
            ids[i] = id;
        }
        Ok(IslandPartition {
            window: window.to_vec(),
            ids,
            count: roots.len(),
            partial: false,
        })
    }

    /// Check that the connectivity islands on the window coincide with the
    /// cosets of the island subgroup, pairing each point with its first
    /// translate coordinate in enumeration order.
    pub fn coset_bijection_check(&self, window: &[Point]) -> Result<IslandCosetReport> {
        let partition = self.islands(window)?;
        let subgroup = match self.island_subgroup() {
            Ok(s) => s,
            Err(Error::Capability(msg)) => {
                return Ok(IslandCosetReport {
                    consistent: false,
                    partial: true,
                    islands: partition.count,
                    cosets: 0,
                    pairs_checked: 0,
                    witness: Some(msg),
                })
            }
            Err(e) => return Err(e),
        };
        let coords: Vec<GroupElement> = window
            .iter()
            .map(|x| {
                self.translates_through(x).map(|v| {
                    v.into_iter()
                        .next()
                        .expect("fundamental set covers the window")
                })
            })
            .collect::<Result<_>>()?;
        let mut keys: Vec<GroupElement> = Vec::new();
        let mut pairs = 0u64;
        for (i, gi) in coords.iter().enumerate() {
            let key = coset_key(gi, &subgroup, self.budget)?;
            if !keys.contains(&key) {
                keys.push(key);
            }
            for (j, gj) in coords.iter().enumerate().skip(i + 1) {
                pairs += 1;
                let same_island = partition.ids[i] == partition.ids[j];
                let quotient = gi.inv().mul(gj);
                let same_coset = subgroup_membership(&subgroup, &quotient, self.budget)?;
                if same_island != same_coset {
                    return Ok(IslandCosetReport {
                        consistent: false,
                        partial: false,
                        islands: partition.count,
                        cosets: keys.len(),
                        pairs_checked: pairs,
                        witness: Some(format!(
                            "points {} and {}: same island = {same_island}, \
                             same coset = {same_coset}",
                            window[i], window[j]
                        )),
                    });
                }
            }
        }
        let consistent = keys.len() == partition.count;
        Ok(IslandCosetReport {
            consistent,
            partial: false,
            islands: partition.count,
            cosets: keys.len(),
            pairs_checked: pairs,
            witness: if consistent {
                None
            } else {
                Some(format!(
                    "{} islands vs {} cosets on the window",
                    partition.count,
                    keys.len()
                ))
            },
        })
    }
}

#[derive(Clone, Debug)]
pub struct LebesgueResult {
    pub epsilon: Option<BigRational>,
    pub witness: Option<String>,
}

/// Map from window points to island identifiers, in discovery order of the
/// smallest member point.
#[derive(Clone, Debug)]
pub struct IslandPartition {
    pub window: Vec<Point>,
    pub ids: Vec<usize>,
    pub count: usize,
    pub partial: bool,
}

impl IslandPartition {
    pub fn id_of(&self, p: &Point) -> Option<usize> {
        self.window.iter().position(|x| x == p).map(|i| self.ids[i])
    }

    pub fn members(&self, id: usize) -> Vec<&Point> {
        self.window
            .iter()
            .zip(&self.ids)
            .filter(|&(_, &i)| i == id)
            .map(|(p, _)| p)
            .collect()
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IslandCosetReport {
    pub consistent: bool,
    pub partial: bool,
    pub islands: usize,
    pub cosets: usize,
    pub pairs_checked: u64,
    pub witness: Option<String>,
}

/// Path-compressed union-find over indices.
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.rank[ra] < self.rank[rb] {
            self.parent[ra] = rb;
        } else if self.rank[ra] > self.rank[rb] {
            self.parent[rb] = ra;
        } else {
            self.parent[rb] = ra;
            self.rank[ra] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::ActionKind;
    use crate::group::GroupDescriptor;
    use crate::koszul::verify_fundamental_set;

    fn z_line_graph() -> StickGraph {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::LatticeTranslation,
        );
        let window: Vec<Point> = (-10..=10).map(|x| Point::lattice(&[x])).collect();
        let f = verify_fundamental_set(
            &action,
            &[Point::lattice(&[-1]), Point::lattice(&[0]), Point::lattice(&[1])],
            &window,
        )
        .unwrap();
        StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap()
    }

    fn two_z_graph() -> StickGraph {
        let g = GroupDescriptor::new(
            GroupFamily::Lattice { rank: 1 },
            vec![GroupElement::lattice(&[2])],
        )
        .unwrap();
        let action = ActionDescriptor::new(g, ActionKind::LatticeTranslation);
        let window: Vec<Point> = (-4..=5).map(|x| Point::lattice(&[x])).collect();
        let f = verify_fundamental_set(
            &action,
            &[Point::lattice(&[0]), Point::lattice(&[1])],
            &window,
        )
        .unwrap();
        StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap()
    }

    #[test]
    fn line_neighbors_are_within_two_steps() {
        // Co-residence in a translate of {-1,0,1} means |x-y| <= 2.
        let g = z_line_graph();
        let n = g.stick_neighbors(&Point::lattice(&[0])).unwrap();
        let pts: Vec<Point> = n.iter().map(|(p, _)| p.clone()).collect();
        for d in [-2i64, -1, 1, 2] {
            assert!(pts.contains(&Point::lattice(&[d])));
        }
        assert_eq!(pts.len(), 4);
        assert!(n.iter().all(|(_, w)| *w == ExtReal::from_int(1)));
    }

    #[test]
    fn parity_neighbors_are_blocked() {
        let g = two_z_graph();
        let n = g.stick_neighbors(&Point::lattice(&[0])).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].0, Point::lattice(&[1]));
        assert_eq!(n[0].1, ExtReal::from_int(1));
    }

    #[test]
    fn plane_neighbors_difference_set() {
        // Oracle: the difference set of the l1 unit ball has 12 nonzero
        // vectors, all of l1 norm <= 2.
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(2),
            ActionKind::LatticeTranslation,
        );
        let mut fpts = vec![Point::lattice(&[0, 0])];
        for (dx, dy) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
            fpts.push(Point::lattice(&[dx, dy]));
        }
        let mut window = Vec::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                if x.abs() + y.abs() <= 3 {
                    window.push(Point::lattice(&[x, y]));
                }
            }
        }
        let f = verify_fundamental_set(&action, &fpts, &window).unwrap();
        let g = StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap();
        let n = g.stick_neighbors(&Point::lattice(&[0, 0])).unwrap();
        let mut oracle: BTreeSet<Point> = BTreeSet::new();
        for a in &fpts {
            for b in &fpts {
                let (Point::Lattice(pa), Point::Lattice(pb)) = (a, b) else { panic!() };
                let diff = vec![&pb[0] - &pa[0], &pb[1] - &pa[1]];
                if diff.iter().any(|c| !num::Zero::is_zero(c)) {
                    oracle.insert(Point::Lattice(diff));
                }
            }
        }
        let got: BTreeSet<Point> = n.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(got, oracle);
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn stick_metric_halves_distances() {
        // Bellman-Ford oracle on the explicit window [-10,10] freezes
        // d'(0,5) = 3 for steps of size <= 2 and unit weights.
        let g = z_line_graph();
        let v = g
            .stick_metric(&Point::lattice(&[0]), &Point::lattice(&[5]), &ExtReal::from_int(100))
            .unwrap();
        assert_eq!(
            v,
            CutoffValue::Finite {
                value: ExtReal::from_int(3),
                hops: 3
            }
        );
        let zero = g
            .stick_metric(&Point::lattice(&[0]), &Point::lattice(&[0]), &ExtReal::from_int(100))
            .unwrap();
        assert_eq!(zero.value(), ExtReal::zero());
    }

    #[test]
    fn different_parity_blocks_are_infinitely_far() {
        let g = two_z_graph();
        let v = g
            .stick_metric(&Point::lattice(&[0]), &Point::lattice(&[2]), &ExtReal::from_int(50))
            .unwrap();
        assert_eq!(v, CutoffValue::InfiniteCertified);
    }

    #[test]
    fn lebesgue_number_for_discrete_base_is_one() {
        let g = z_line_graph();
        let window: Vec<Point> = (-5..=5).map(|x| Point::lattice(&[x])).collect();
        let r = g.lebesgue_number(&window, 8).unwrap();
        assert_eq!(r.epsilon, Some(BigRational::one()));
    }

    #[test]
    fn degenerate_base_has_no_lebesgue_number() {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::LatticeTranslation,
        );
        let window: Vec<Point> = (-5..=5).map(|x| Point::lattice(&[x])).collect();
        let f = verify_fundamental_set(
            &action,
            &[Point::lattice(&[-1]), Point::lattice(&[0]), Point::lattice(&[1])],
            &window,
        )
        .unwrap();
        let mut zero = Pseudometric::from_fn("zero", |_, _| ExtReal::zero());
        zero.flags.claims_invariant = true;
        let g = StickGraph::new(&action, &f, &zero, 1_000_000).unwrap();
        let r = g.lebesgue_number(&window, 6).unwrap();
        assert!(r.epsilon.is_none());
        assert!(r.witness.is_some());
    }

    #[test]
    fn line_has_one_island() {
        let g = z_line_graph();
        let window: Vec<Point> = (-6..=6).map(|x| Point::lattice(&[x])).collect();
        let p = g.islands(&window).unwrap();
        assert_eq!(p.count, 1);
        let report = g.coset_bijection_check(&window).unwrap();
        assert!(report.consistent);
        assert_eq!(report.cosets, 1);
    }

    #[test]
    fn parity_blocks_are_islands() {
        // Union-find oracle: blocks {2k, 2k+1} on the window [-4,5].
        let g = two_z_graph();
        let window: Vec<Point> = (-4..=5).map(|x| Point::lattice(&[x])).collect();
        let p = g.islands(&window).unwrap();
        assert_eq!(p.count, 5);
        for k in [-2i64, -1, 0, 1, 2] {
            let a = p.id_of(&Point::lattice(&[2 * k])).unwrap();
            let b = p.id_of(&Point::lattice(&[2 * k + 1])).unwrap();
            assert_eq!(a, b, "block of {k}");
        }
        let report = g.coset_bijection_check(&window).unwrap();
        assert!(report.consistent);
        assert_eq!(report.islands, 5);
        assert_eq!(report.cosets, 5);
    }

    #[test]
    fn two_line_islands_pair_copies() {
        let action = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::ProductLine { copies: Some(2) },
        );
        let mut window = Vec::new();
        for n in -3i64..=3 {
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
        let g = StickGraph::new(&action, &f, &Pseudometric::discrete(), 1_000_000).unwrap();
        let p = g.islands(&window).unwrap();
        assert_eq!(p.count, 7);
        for n in -3i64..=3 {
            assert_eq!(
                p.id_of(&Point::composite(0, n)),
                p.id_of(&Point::composite(1, n))
            );
        }
        let report = g.coset_bijection_check(&window).unwrap();
        assert!(report.consistent);
    }

    #[test]
    fn island_subgroup_of_line_is_everything() {
        let g = z_line_graph();
        match g.island_subgroup().unwrap() {
            SubgroupDescriptor::Lattice { basis } => {
                let h = crate::lattice::Hnf::from_columns(1, &basis);
                assert_eq!(h.index_in_ambient(), Some(1.into()));
            }
            other => panic!("unexpected subgroup {other:?}"),
        }
    }

    #[test]
    fn free_island_subgroup_is_whole_group() {
        let group = GroupDescriptor::free(2);
        let action = ActionDescriptor::new(group.clone(), ActionKind::FreeOnItself);
        let fpts: Vec<Point> = group
            .word_ball(1, 100)
            .unwrap()
            .into_iter()
            .map(Point::Word)
            .collect();
        let window: Vec<Point> = group
            .word_ball(2, 1000)
            .unwrap()
            .into_iter()
            .map(Point::Word)
            .collect();
        let f = verify_fundamental_set(&action, &fpts, &window).unwrap();
        let g = StickGraph::new(&action, &f, &Pseudometric::word_metric(), 1_000_000).unwrap();
        assert!(matches!(g.island_subgroup().unwrap(), SubgroupDescriptor::Whole));
        let p = g.islands(&window).unwrap();
        assert_eq!(p.count, 1);
    }

    #[test]
    fn finite_closure_helper_used_for_perm_subgroups() {
        let sigma = GroupElement::Perm(vec![1, 2, 0]);
        let all = crate::group::finite_closure(&[sigma], 100).unwrap();
        assert_eq!(all.len(), 3);
    }
}
