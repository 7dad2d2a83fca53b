//! Group actions on countable discrete spaces, with exact transporter
//! oracles and the transporter-based properness check.
//!
//! Every built-in action family ships a closed-form transporter rule, so
//! the set `{g : gA meets B}` is computed exactly for finite `A`, `B`, or
//! reported as provably infinite. That is the whole properness story in the
//! discrete category: an action is proper iff those sets are finite.

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement, GroupFamily};
use num::{BigInt, Zero};
use std::fmt;

/// A point of one of the built-in countable discrete spaces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Point {
    /// Integer vector (lattice scenarios).
    Lattice(Vec<BigInt>),
    /// Index into a finite labeled space.
    Labeled(usize),
    /// A point on copy `copy` of a line, at integer coordinate `coord`.
    Composite { copy: u64, coord: BigInt },
    /// A reduced word (group acting on itself).
    Word(GroupElement),
}

impl Point {
    pub fn lattice(coords: &[i64]) -> Point {
        Point::Lattice(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn composite(copy: u64, coord: i64) -> Point {
        Point::Composite {
            copy,
            coord: BigInt::from(coord),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Lattice(v) => {
                if v.len() == 1 {
                    return write!(f, "{}", v[0]);
                }
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Point::Labeled(i) => write!(f, "#{i}"),
            Point::Composite { copy, coord } => {
                let c = (b'a' + (copy % 26) as u8) as char;
                write!(f, "{coord}_{c}")
            }
            Point::Word(w) => write!(f, "{w}"),
        }
    }
}

/// How the group acts on which space.
#[derive(Clone, Debug)]
pub enum ActionKind {
    /// A lattice subgroup of Z^k translating Z^k.
    LatticeTranslation,
    /// A permutation group acting on its points 0..degree.
    PermutationNatural,
    /// Z translating the integer coordinate of finitely or countably many
    /// copies of a line. `copies: None` means one copy per natural number.
    ProductLine { copies: Option<u64> },
    /// A free group acting on itself by left multiplication.
    FreeOnItself,
    /// Every group element fixes every point (the canonical non-proper
    /// example when the group is infinite).
    TrivialOnLabels { count: usize },
}

/// A group action: group descriptor, action family, and display labels for
/// finite scenarios. Lattice actions precompute the Hermite form of the
/// acting lattice once; transporter queries run in the hot loops.
#[derive(Clone, Debug)]
pub struct ActionDescriptor {
    pub group: GroupDescriptor,
    pub kind: ActionKind,
    pub labels: Vec<String>,
    lattice_form: Option<std::sync::Arc<crate::lattice::Hnf>>,
}

/// Completeness certificate of a transporter listing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Exact,
    BoundedSearch { radius: u32 },
}

/// A finite transporter listing with its completeness certificate.
#[derive(Clone, Debug)]
pub struct TransporterSet {
    pub elements: Vec<GroupElement>,
    pub certificate: Certificate,
}

/// Result of a transporter computation: a finite listing, or a proof that
/// the set is infinite.
#[derive(Clone, Debug)]
pub enum TransporterOutcome {
    Set(TransporterSet),
    Infinite { description: String },
}

impl TransporterOutcome {
    pub fn exact_set(&self) -> Result<&TransporterSet> {
        match self {
            TransporterOutcome::Set(s) if s.certificate == Certificate::Exact => Ok(s),
            TransporterOutcome::Set(_) => Err(Error::capability(
                "transporter is only bounded-search complete",
            )),
            TransporterOutcome::Infinite { description } => Err(Error::capability(format!(
                "transporter is infinite: {description}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ProperVerdict {
    ProperCertified,
    ProperOnWindow,
    NotProper,
    Inconclusive,
}

/// Properness report over a window: transporter sizes for every singleton
/// pair and for the whole window against itself.
#[derive(Clone, Debug)]
pub struct ProperReport {
    pub verdict: ProperVerdict,
    pub pairs_checked: u64,
    pub max_singleton_transporter: u64,
    pub window_transporter: Option<u64>,
    pub all_exact: bool,
    pub witness: Option<String>,
}

impl ActionDescriptor {
    pub fn new(group: GroupDescriptor, kind: ActionKind) -> ActionDescriptor {
        let lattice_form = match group.family {
            GroupFamily::Lattice { .. } => {
                group.lattice_hnf().ok().map(std::sync::Arc::new)
            }
            _ => None,
        };
        ActionDescriptor {
            group,
            kind,
            labels: Vec::new(),
            lattice_form,
        }
    }

    fn hnf(&self) -> Result<&crate::lattice::Hnf> {
        self.lattice_form
            .as_deref()
            .ok_or_else(|| Error::usage("lattice form requested for non-lattice group"))
    }

    pub fn with_labels(mut self, labels: &[&str]) -> ActionDescriptor {
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn point_label(&self, p: &Point) -> String {
        match p {
            Point::Labeled(i) if *i < self.labels.len() => self.labels[*i].clone(),
            other => other.to_string(),
        }
    }

    /// The action value g·x. Accepts any element of the ambient family (for
    /// lattice scenarios that includes translations outside the acting
    /// subgroup, which is what the invariance negative controls probe).
    pub fn apply(&self, g: &GroupElement, x: &Point) -> Result<Point> {
        match (&self.kind, g, x) {
            (ActionKind::LatticeTranslation, GroupElement::Lattice(v), Point::Lattice(p)) => {
                if v.len() != p.len() {
                    return Err(Error::usage("translation rank mismatch"));
                }
                Ok(Point::Lattice(p.iter().zip(v).map(|(a, b)| a + b).collect()))
            }
            (ActionKind::PermutationNatural, GroupElement::Perm(perm), Point::Labeled(i)) => {
                if *i >= perm.len() {
                    return Err(Error::usage("point outside permutation degree"));
                }
                Ok(Point::Labeled(perm[*i]))
            }
            (
                ActionKind::ProductLine { copies },
                GroupElement::Lattice(v),
                Point::Composite { copy, coord },
            ) => {
                if v.len() != 1 {
                    return Err(Error::usage("product-line actions use rank-1 translations"));
                }
                if let Some(n) = copies {
                    if copy >= n {
                        return Err(Error::usage("copy label out of range"));
                    }
                }
                Ok(Point::Composite {
                    copy: *copy,
                    coord: coord + &v[0],
                })
            }
            (ActionKind::FreeOnItself, GroupElement::Word(_), Point::Word(w)) => {
                Ok(Point::Word(g.mul(w)))
            }
            (ActionKind::TrivialOnLabels { count }, _, Point::Labeled(i)) => {
                if *i >= *count {
                    return Err(Error::usage("point outside labeled space"));
                }
                Ok(x.clone())
            }
            _ => Err(Error::usage("scenario mismatch between element and point")),
        }
    }

    /// The transporter {g in G : gA meets B}, exact for every built-in
    /// action family.
    pub fn transporter(&self, a: &[Point], b: &[Point]) -> Result<TransporterOutcome> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::usage("transporter of an empty set"));
        }
        let mut elements: Vec<GroupElement> = Vec::new();
        match &self.kind {
            ActionKind::LatticeTranslation => {
                let hnf = self.hnf()?;
                for xa in a {
                    for xb in b {
                        let (Point::Lattice(pa), Point::Lattice(pb)) = (xa, xb) else {
                            return Err(Error::usage("lattice action on non-lattice point"));
                        };
                        let diff: Vec<BigInt> = pb.iter().zip(pa).map(|(y, x)| y - x).collect();
                        if hnf.contains(&diff) {
                            elements.push(GroupElement::Lattice(diff));
                        }
                    }
                }
            }
            ActionKind::ProductLine { .. } => {
                let hnf = self.hnf()?;
                for xa in a {
                    for xb in b {
                        let (
            Point::Composite { copy: ca, coord: xa },
                            Point::Composite { copy: cb, coord: xb },
                        ) = (xa, xb)
                        else {
                            return Err(Error::usage("product-line action on other point kind"));
                        };
                        if ca != cb {
                            continue;
                        }
                        let diff = vec![xb - xa];
                        if hnf.contains(&diff) {
                            elements.push(GroupElement::Lattice(diff));
                        }
                    }
                }
            }
            ActionKind::PermutationNatural => {
                for g in self.group.enumerate_all(1_000_000)? {
                    let moves = a.iter().any(|xa| {
                        self.apply(&g, xa)
                            .map(|gx| b.contains(&gx))
                            .unwrap_or(false)
                    });
                    if moves {
                        elements.push(g);
                    }
                }
            }
            ActionKind::FreeOnItself => {
                for xa in a {
                    for xb in b {
                        let (Point::Word(wa), Point::Word(wb)) = (xa, xb) else {
                            return Err(Error::usage("free action on non-word point"));
                        };
                        elements.push(wb.mul(&wa.inv()));
                    }
                }
            }
            ActionKind::TrivialOnLabels { .. } => {
                if a.iter().any(|x| b.contains(x)) {
                    if self.group.is_finite() {
                        elements = self.group.enumerate_all(1_000_000)?;
                    } else {
                        return Ok(TransporterOutcome::Infinite {
                            description: format!(
                                "every element of the infinite group fixes the common point \
                                 of A and B (|A|={}, |B|={})",
                                a.len(),
                                b.len()
                            ),
                        });
                    }
                }
            }
        }
        elements.sort_by_cached_key(|e| e.norm_key());
        elements.dedup();
        Ok(TransporterOutcome::Set(TransporterSet {
            elements,
            certificate: Certificate::Exact,
        }))
    }

    /// Transporter-based properness over a window: every singleton pair and
    /// the full (window, window) transporter must be exact and finite.
    pub fn check_proper(&self, window: &[Point]) -> Result<ProperReport> {
        if window.is_empty() {
            return Err(Error::usage("properness check needs a nonempty window"));
        }
        let mut pairs = 0u64;
        let mut max_singleton = 0u64;
        let mut all_exact = true;
        for x in window {
            for y in window {
                pairs += 1;
                match self.transporter(std::slice::from_ref(x), std::slice::from_ref(y))? {
                    TransporterOutcome::Set(s) => {
                        max_singleton = max_singleton.max(s.elements.len() as u64);
                        if s.certificate != Certificate::Exact {
                            all_exact = false;
                        }
                    }
                    TransporterOutcome::Infinite { description } => {
                        return Ok(ProperReport {
                            verdict: ProperVerdict::NotProper,
                            pairs_checked: pairs,
                            max_singleton_transporter: max_singleton,
                            window_transporter: None,
                            all_exact,
                            witness: Some(format!(
                                "transporter({x},{y}) is infinite: {description}"
                            )),
                        });
                    }
                }
            }
        }
        let window_size = match self.transporter(window, window)? {
            TransporterOutcome::Set(s) => {
                if s.certificate != Certificate::Exact {
                    all_exact = false;
                }
                Some(s.elements.len() as u64)
            }
            TransporterOutcome::Infinite { description } => {
                return Ok(ProperReport {
                    verdict: ProperVerdict::NotProper,
                    pairs_checked: pairs,
                    max_singleton_transporter: max_singleton,
                    window_transporter: None,
                    all_exact,
                    witness: Some(format!("transporter(window,window) is infinite: {description}")),
                });
            }
        };
        Ok(ProperReport {
            verdict: if all_exact {
                ProperVerdict::ProperCertified
            } else {
                ProperVerdict::ProperOnWindow
            },
            pairs_checked: pairs,
            max_singleton_transporter: max_singleton,
            window_transporter: window_size,
            all_exact,
            witness: None,
        })
    }

    /// Index of the orbit of `x` in the deterministic orbit enumeration.
    pub fn orbit_index(&self, x: &Point) -> Result<u64> {
        match (&self.kind, x) {
            (ActionKind::LatticeTranslation, Point::Lattice(v)) => {
                let hnf = self.hnf()?;
                let res = hnf.reduce(v);
                // Position of the residue in ambient word-ball discovery order.
                let ambient = GroupDescriptor::standard_lattice(v.len());
                let mut seen: Vec<Vec<BigInt>> = Vec::new();
                let mut l = 0u32;
                loop {
                    for e in ambient.word_ball(l, 10_000_000)? {
                        let GroupElement::Lattice(p) = e else { unreachable!() };
                        let r = hnf.reduce(&p);
                        if !seen.contains(&r) {
                            if r == res {
                                return Ok(seen.len() as u64);
                            }
                            seen.push(r);
                        }
                    }
                    l += 1;
                    if l > 10_000 {
                        return Err(Error::budget("orbit index search radius", 10_000));
                    }
                }
            }
            (ActionKind::PermutationNatural, Point::Labeled(i)) => {
                let orbits = self.permutation_orbits()?;
                orbits
                    .iter()
                    .position(|o| o.contains(i))
                    .map(|p| p as u64)
                    .ok_or_else(|| Error::usage("point outside permutation degree"))
            }
            (ActionKind::ProductLine { copies }, Point::Composite { copy, .. }) => {
                if let Some(n) = copies {
                    if copy >= n {
                        return Err(Error::usage("copy label out of range"));
                    }
                }
                Ok(*copy)
            }
            (ActionKind::FreeOnItself, Point::Word(_)) => Ok(0),
            (ActionKind::TrivialOnLabels { count }, Point::Labeled(i)) => {
                if i >= count {
                    return Err(Error::usage("point outside labeled space"));
                }
                Ok(*i as u64)
            }
            _ => Err(Error::usage("scenario mismatch in orbit map")),
        }
    }

    fn permutation_orbits(&self) -> Result<Vec<Vec<usize>>> {
        let GroupFamily::Permutation { degree } = self.group.family else {
            return Err(Error::usage("permutation orbits of non-permutation group"));
        };
        let all = self.group.enumerate_all(1_000_000)?;
        let mut assigned = vec![usize::MAX; degree];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for i in 0..degree {
            if assigned[i] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = Vec::new();
            for g in &all {
                let GroupElement::Perm(p) = g else { unreachable!() };
                if assigned[p[i]] == usize::MAX {
                    assigned[p[i]] = id;
                    orbit.push(p[i]);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// The first `n` orbit representatives, with an exhausted flag when the
    /// orbit space has fewer than `n` orbits.
    pub fn orbit_reps(&self, n: usize) -> Result<(Vec<Point>, bool)> {
        if n == 0 {
            return Err(Error::usage("orbit enumeration needs a positive count"));
        }
        match &self.kind {
            ActionKind::LatticeTranslation => {
                let hnf = self.hnf()?;
                let dim = match self.group.family {
                    GroupFamily::Lattice { rank } => rank,
                    _ => unreachable!(),
                };
                let total = hnf.index_in_ambient();
                let ambient = GroupDescriptor::standard_lattice(dim);
                let mut reps: Vec<Point> = Vec::new();
                let mut seen: Vec<Vec<BigInt>> = Vec::new();
                let mut l = 0u32;
                loop {
                    for e in ambient.word_ball(l, 10_000_000)? {
                        let GroupElement::Lattice(p) = e else { unreachable!() };
                        let r = hnf.reduce(&p);
                        if !seen.contains(&r) {
                            seen.push(r.clone());
                            reps.push(Point::Lattice(r));
                            let exhausted = total
                                .as_ref()
                                .map(|t| BigInt::from(reps.len()) == *t)
                                .unwrap_or(false);
                            if reps.len() == n || exhausted {
                                return Ok((reps, exhausted));
                            }
                        }
                    }
                    l += 1;
                    if l > 10_000 {
                        return Err(Error::budget("orbit enumeration radius", 10_000));
                    }
                }
            }
            ActionKind::PermutationNatural => {
                let orbits = self.permutation_orbits()?;
                let reps: Vec<Point> = orbits
                    .iter()
                    .take(n)
                    .map(|o| Point::Labeled(o[0]))
                    .collect();
                let exhausted = orbits.len() <= n;
                Ok((reps, exhausted))
            }
            ActionKind::ProductLine { copies } => {
                let limit = copies.map(|c| c.min(n as u64)).unwrap_or(n as u64);
                let reps: Vec<Point> = (0..limit)
                    .map(|c| Point::Composite {
                        copy: c,
                        coord: BigInt::zero(),
                    })
                    .collect();
                let exhausted = copies.map(|c| c <= n as u64).unwrap_or(false);
                Ok((reps, exhausted))
            }
            ActionKind::FreeOnItself => {
                Ok((vec![Point::Word(self.group.identity())], true))
            }
            ActionKind::TrivialOnLabels { count } => {
                let reps: Vec<Point> = (0..*count.min(&n)).map(Point::Labeled).collect();
                Ok((reps, *count <= n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupDescriptor;

    fn z_on_z() -> ActionDescriptor {
        ActionDescriptor::new(GroupDescriptor::standard_lattice(1), ActionKind::LatticeTranslation)
    }

    fn two_z_on_z() -> ActionDescriptor {
        let g = GroupDescriptor::new(
            GroupFamily::Lattice { rank: 1 },
            vec![GroupElement::lattice(&[2])],
        )
        .unwrap();
        ActionDescriptor::new(g, ActionKind::LatticeTranslation)
    }

    fn c3() -> ActionDescriptor {
        let g = GroupDescriptor::new(
            GroupFamily::Permutation { degree: 3 },
            vec![GroupElement::Perm(vec![1, 2, 0])],
        )
        .unwrap();
        ActionDescriptor::new(g, ActionKind::PermutationNatural).with_labels(&["a", "b", "c"])
    }

    fn window_z(lo: i64, hi: i64) -> Vec<Point> {
        (lo..=hi).map(|x| Point::lattice(&[x])).collect()
    }

    #[test]
    fn translations_apply() {
        let a = z_on_z();
        assert_eq!(
            a.apply(&GroupElement::lattice(&[3]), &Point::lattice(&[5])).unwrap(),
            Point::lattice(&[8])
        );
        let b = two_z_on_z();
        assert_eq!(
            b.apply(&GroupElement::lattice(&[-4]), &Point::lattice(&[1])).unwrap(),
            Point::lattice(&[-3])
        );
    }

    #[test]
    fn cycle_applies() {
        let a = c3();
        let sigma = GroupElement::Perm(vec![1, 2, 0]);
        assert_eq!(a.apply(&sigma, &Point::Labeled(0)).unwrap(), Point::Labeled(1));
    }

    #[test]
    fn scenario_mismatch_is_usage_error() {
        let a = z_on_z();
        match a.apply(&GroupElement::Perm(vec![0]), &Point::lattice(&[0])) {
            Err(Error::Usage(_)) => {}
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn transporter_unique_translation() {
        let a = z_on_z();
        let t = a
            .transporter(&[Point::lattice(&[0])], &[Point::lattice(&[7])])
            .unwrap();
        let s = t.exact_set().unwrap();
        assert_eq!(s.elements, vec![GroupElement::lattice(&[7])]);
    }

    #[test]
    fn transporter_even_translations() {
        // Oracle: solve g + a = b over g in 2Z, a, b in {0,1}.
        let a = two_z_on_z();
        let f = [Point::lattice(&[0]), Point::lattice(&[1])];
        let t = a.transporter(&f, &f).unwrap();
        let s = t.exact_set().unwrap();
        assert_eq!(s.elements, vec![GroupElement::lattice(&[0])]);
    }

    #[test]
    fn transporter_transitive_cycle() {
        let a = c3();
        let all = [Point::Labeled(0), Point::Labeled(1), Point::Labeled(2)];
        let t = a.transporter(&[Point::Labeled(0)], &all).unwrap();
        assert_eq!(t.exact_set().unwrap().elements.len(), 3);
    }

    #[test]
    fn transporter_symmetry_inverse_sets() {
        // transporter(A,B) elementwise inverted equals transporter(B,A).
        let a = two_z_on_z();
        let set_a = [Point::lattice(&[0]), Point::lattice(&[3])];
        let set_b = [Point::lattice(&[2]), Point::lattice(&[5])];
        let t_ab = a.transporter(&set_a, &set_b).unwrap();
        let t_ba = a.transporter(&set_b, &set_a).unwrap();
        let mut inv: Vec<GroupElement> = t_ba
            .exact_set()
            .unwrap()
            .elements
            .iter()
            .map(|g| g.inv())
            .collect();
        inv.sort_by_cached_key(|e| e.norm_key());
        assert_eq!(t_ab.exact_set().unwrap().elements, inv);
    }

    #[test]
    fn proper_translation_action() {
        // Oracle: difference sets are singletons for the full line.
        let a = z_on_z();
        let report = a.check_proper(&window_z(-2, 2)).unwrap();
        assert_eq!(report.verdict, ProperVerdict::ProperCertified);
        assert!(report.max_singleton_transporter <= 1);
    }

    #[test]
    fn trivial_action_is_not_proper() {
        let g = GroupDescriptor::standard_lattice(1);
        let a = ActionDescriptor::new(g, ActionKind::TrivialOnLabels { count: 1 });
        let report = a.check_proper(&[Point::Labeled(0)]).unwrap();
        assert_eq!(report.verdict, ProperVerdict::NotProper);
        assert!(report.witness.unwrap().contains("infinite"));
    }

    #[test]
    fn finite_group_always_proper() {
        let a = c3();
        let all = [Point::Labeled(0), Point::Labeled(1), Point::Labeled(2)];
        let report = a.check_proper(&all).unwrap();
        assert_eq!(report.verdict, ProperVerdict::ProperCertified);
    }

    #[test]
    fn stabilizer_is_a_finite_subgroup() {
        let a = c3();
        let t = a
            .transporter(&[Point::Labeled(0)], &[Point::Labeled(0)])
            .unwrap();
        let stab = t.exact_set().unwrap().elements.clone();
        for g in &stab {
            assert!(stab.contains(&g.inv()));
            for h in &stab {
                assert!(stab.contains(&g.mul(h)));
            }
        }
    }

    #[test]
    fn parity_orbits() {
        let a = two_z_on_z();
        assert_eq!(
            a.orbit_index(&Point::lattice(&[5])).unwrap(),
            a.orbit_index(&Point::lattice(&[-3])).unwrap()
        );
        assert_ne!(
            a.orbit_index(&Point::lattice(&[5])).unwrap(),
            a.orbit_index(&Point::lattice(&[0])).unwrap()
        );
        let (reps, exhausted) = a.orbit_reps(5).unwrap();
        assert_eq!(reps, vec![Point::lattice(&[0]), Point::lattice(&[1])]);
        assert!(exhausted);
    }

    #[test]
    fn two_line_orbits() {
        let a = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(1),
            ActionKind::ProductLine { copies: Some(2) },
        );
        let (reps, exhausted) = a.orbit_reps(2).unwrap();
        assert_eq!(reps, vec![Point::composite(0, 0), Point::composite(1, 0)]);
        assert!(exhausted);
    }

    #[test]
    fn transitive_lattice_single_orbit() {
        let a = ActionDescriptor::new(
            GroupDescriptor::standard_lattice(2),
            ActionKind::LatticeTranslation,
        );
        let (reps, exhausted) = a.orbit_reps(1).unwrap();
        assert_eq!(reps, vec![Point::lattice(&[0, 0])]);
        assert!(exhausted);
    }

    #[test]
    fn transporter_triangle_containment() {
        // G_{AB} is contained in G_{BF}^{-1} G_{AF} when GF covers the space.
        let act = two_z_on_z();
        let f = [Point::lattice(&[0]), Point::lattice(&[1])];
        let a = [Point::lattice(&[2]), Point::lattice(&[3])];
        let b = [Point::lattice(&[-2])];
        let g_ab = act.transporter(&a, &b).unwrap().exact_set().unwrap().elements.clone();
        let g_af = act.transporter(&a, &f).unwrap().exact_set().unwrap().elements.clone();
        let g_bf = act.transporter(&b, &f).unwrap().exact_set().unwrap().elements.clone();
        for g in &g_ab {
            let mut found = false;
            for p in &g_bf {
                for q in &g_af {
                    if p.inv().mul(q) == *g {
                        found = true;
                    }
                }
            }
            assert!(found, "{g} not in the product set");
        }
        // Also sanity-check parity membership of the transporter elements.
        let h = SubgroupDescriptor::lattice(&[&[2]]);
        for g in &g_ab {
            assert!(crate::group::subgroup_membership(&h, g, 100).unwrap());
        }
    }
}
