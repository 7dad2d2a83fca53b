//! Finitely generated groups with exact canonical-form elements: integer
//! lattices, finite permutation groups, and free groups.
//!
//! Elements carry their canonical form, so structural equality is group
//! equality. Enumeration is always in word-ball order: by word length, then
//! lexicographically over generator indices with a positive generator before
//! its inverse. That order is fixed once here and reused everywhere a
//! deterministic sequence of group elements is needed.

use crate::error::{Error, Result};
use crate::lattice::Hnf;
use num::{BigInt, Signed, Zero};
use std::collections::HashSet;
use std::fmt;

/// One letter of a reduced free-group word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn flipped(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = (b'a' + (self.gen % 26) as u8) as char;
        if self.inverse {
            write!(f, "{}", c.to_ascii_uppercase())
        } else {
            write!(f, "{c}")
        }
    }
}

/// Canonical-form group element. Lattice elements are integer vectors,
/// permutations are image arrays on 0..degree, free-group elements are
/// reduced words (no adjacent inverse pairs).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupElement {
    Lattice(Vec<BigInt>),
    Perm(Vec<usize>),
    Word(Vec<Letter>),
}

impl GroupElement {
    pub fn lattice(coords: &[i64]) -> GroupElement {
        GroupElement::Lattice(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn word(letters: &[Letter]) -> GroupElement {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &l in letters {
            if out.last() == Some(&l.flipped()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupElement::Word(out)
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Lattice(a), GroupElement::Lattice(b)) => {
                assert_eq!(a.len(), b.len(), "lattice rank mismatch");
                GroupElement::Lattice(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupElement::Perm(p), GroupElement::Perm(q)) => {
                assert_eq!(p.len(), q.len(), "permutation degree mismatch");
                // apply q first, then p, so apply(mul(p,q), x) = apply(p, apply(q, x))
                GroupElement::Perm(q.iter().map(|&i| p[i]).collect())
            }
            (GroupElement::Word(u), GroupElement::Word(v)) => {
                let mut out = u.clone();
                for &l in v {
                    if out.last() == Some(&l.flipped()) {
                        out.pop();
                    } else {
                        out.push(l);
                    }
                }
                GroupElement::Word(out)
            }
            _ => panic!("group family mismatch in mul"),
        }
    }

    pub fn inv(&self) -> GroupElement {
        match self {
            GroupElement::Lattice(a) => GroupElement::Lattice(a.iter().map(|x| -x).collect()),
            GroupElement::Perm(p) => {
                let mut q = vec![0usize; p.len()];
                for (i, &pi) in p.iter().enumerate() {
                    q[pi] = i;
                }
                GroupElement::Perm(q)
            }
            GroupElement::Word(w) => {
                GroupElement::Word(w.iter().rev().map(|l| l.flipped()).collect())
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Lattice(a) => a.iter().all(|x| x.is_zero()),
            GroupElement::Perm(p) => p.iter().enumerate().all(|(i, &pi)| i == pi),
            GroupElement::Word(w) => w.is_empty(),
        }
    }

    /// Sort key used when a transporter or coset listing needs a canonical
    /// order: a cheap size measure first, then the structural order.
    pub fn norm_key(&self) -> (BigInt, GroupElement) {
        let n = match self {
            GroupElement::Lattice(a) => a.iter().map(|x| x.abs()).sum(),
            GroupElement::Perm(_) => BigInt::zero(),
            GroupElement::Word(w) => BigInt::from(w.len()),
        };
        (n, self.clone())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Lattice(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            GroupElement::Perm(p) => {
                write!(f, "[")?;
                for (i, x) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            GroupElement::Word(w) => {
                if w.is_empty() {
                    return write!(f, "e");
                }
                for l in w {
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupFamily {
    Lattice { rank: usize },
    Permutation { degree: usize },
    Free { rank: usize },
}

/// A finitely generated group: family tag plus an ordered generating set.
#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    pub family: GroupFamily,
    pub generators: Vec<GroupElement>,
}

impl GroupDescriptor {
    pub fn new(family: GroupFamily, generators: Vec<GroupElement>) -> Result<GroupDescriptor> {
        for g in &generators {
            match (&family, g) {
                (GroupFamily::Lattice { rank }, GroupElement::Lattice(v)) if v.len() == *rank => {}
                (GroupFamily::Permutation { degree }, GroupElement::Perm(p)) if p.len() == *degree => {
                    let mut seen = vec![false; *degree];
                    for &i in p {
                        if i >= *degree || seen[i] {
                            return Err(Error::usage("generator is not a bijection"));
                        }
                        seen[i] = true;
                    }
                }
                (GroupFamily::Free { rank }, GroupElement::Word(w)) => {
                    if w.iter().any(|l| l.gen >= *rank) {
                        return Err(Error::usage("word letter outside declared rank"));
                    }
                }
                _ => return Err(Error::usage("generator does not match group family")),
            }
        }
        Ok(GroupDescriptor { family, generators })
    }

    /// Z^rank with standard basis generators.
    pub fn standard_lattice(rank: usize) -> GroupDescriptor {
        let gens = (0..rank)
            .map(|i| {
                let mut v = vec![BigInt::zero(); rank];
                v[i] = BigInt::from(1);
                GroupElement::Lattice(v)
            })
            .collect();
        GroupDescriptor {
            family: GroupFamily::Lattice { rank },
            generators: gens,
        }
    }

    pub fn free(rank: usize) -> GroupDescriptor {
        let gens = (0..rank)
            .map(|g| GroupElement::Word(vec![Letter { gen: g, inverse: false }]))
            .collect();
        GroupDescriptor {
            family: GroupFamily::Free { rank },
            generators: gens,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self.family {
            GroupFamily::Lattice { rank } => GroupElement::Lattice(vec![BigInt::zero(); rank]),
            GroupFamily::Permutation { degree } => GroupElement::Perm((0..degree).collect()),
            GroupFamily::Free { .. } => GroupElement::Word(Vec::new()),
        }
    }

    /// The alphabet used for word-ball enumeration: each generator followed
    /// by its inverse, involutions listed once.
    pub fn letters(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for g in &self.generators {
            out.push(g.clone());
            let gi = g.inv();
            if gi != *g {
                out.push(gi);
            }
        }
        out
    }

    /// Elements of word length at most `l`, deduplicated by canonical form,
    /// in word-ball order. Errors with a budget error when the ball exceeds
    /// `cap` elements.
    pub fn word_ball(&self, l: u32, cap: u64) -> Result<Vec<GroupElement>> {
        let letters = self.letters();
        let mut out = vec![self.identity()];
        let mut seen: HashSet<GroupElement> = out.iter().cloned().collect();
        let mut level_start = 0usize;
        for _ in 0..l {
            let level_end = out.len();
            if level_start == level_end {
                break; // previous level empty: group exhausted
            }
            for i in level_start..level_end {
                let base = out[i].clone();
                for s in &letters {
                    let next = base.mul(s);
                    if seen.insert(next.clone()) {
                        if out.len() as u64 + 1 > cap {
                            return Err(Error::budget("enumerating word ball", cap));
                        }
                        out.push(next);
                    }
                }
            }
            level_start = level_end;
        }
        Ok(out)
    }

    /// All elements of a group known to be finite (permutation family, the
    /// trivial lattice, or the trivial free group).
    pub fn enumerate_all(&self, cap: u64) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(Error::capability("cannot enumerate an infinite group"));
        }
        let mut l = 1u32;
        loop {
            let ball = self.word_ball(l, cap)?;
            let bigger = self.word_ball(l + 1, cap)?;
            if ball.len() == bigger.len() {
                return Ok(ball);
            }
            l += 1;
        }
    }

    pub fn is_finite(&self) -> bool {
        match self.family {
            GroupFamily::Permutation { .. } => true,
            GroupFamily::Lattice { .. } => self.generators.iter().all(|g| g.is_identity()),
            GroupFamily::Free { .. } => self.generators.iter().all(|g| g.is_identity()),
        }
    }

    /// Hermite form of the generated lattice (lattice family only).
    pub fn lattice_hnf(&self) -> Result<Hnf> {
        let GroupFamily::Lattice { rank } = self.family else {
            return Err(Error::usage("lattice form requested for non-lattice group"));
        };
        let cols: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .map(|g| match g {
                GroupElement::Lattice(v) => v.clone(),
                _ => unreachable!(),
            })
            .collect();
        Ok(Hnf::from_columns(rank, &cols))
    }

    /// Does this element belong to the group itself (as a subgroup of its
    /// ambient family)?
    pub fn contains(&self, g: &GroupElement, budget: u64) -> Result<bool> {
        match self.family {
            GroupFamily::Lattice { .. } => match g {
                GroupElement::Lattice(v) => Ok(self.lattice_hnf()?.contains(v)),
                _ => Err(Error::usage("element family mismatch")),
            },
            GroupFamily::Permutation { .. } => {
                Ok(self.enumerate_all(budget)?.contains(g))
            }
            GroupFamily::Free { .. } => match g {
                GroupElement::Word(w) => {
                    // Generators are the standard free basis; membership is
                    // just letter range.
                    let GroupFamily::Free { rank } = self.family else { unreachable!() };
                    Ok(w.iter().all(|l| l.gen < rank))
                }
                _ => Err(Error::usage("element family mismatch")),
            },
        }
    }
}

/// A subgroup in one of the supported decidable shapes.
#[derive(Clone, Debug)]
pub enum SubgroupDescriptor {
    /// Integer span of the basis columns.
    Lattice { basis: Vec<Vec<BigInt>> },
    /// Closure of a finite generator list (finite families).
    FiniteGenerated { generators: Vec<GroupElement> },
    /// The whole group.
    Whole,
}

impl SubgroupDescriptor {
    pub fn trivial_lattice(rank: usize) -> SubgroupDescriptor {
        let _ = rank;
        SubgroupDescriptor::Lattice { basis: Vec::new() }
    }

    pub fn lattice(cols: &[&[i64]]) -> SubgroupDescriptor {
        SubgroupDescriptor::Lattice {
            basis: cols
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }
}

/// Exact membership test for a supported subgroup. Free-group subgroups are
/// not supported; islands in free-group scenarios fall back to stick-graph
/// connectivity instead.
pub fn subgroup_membership(h: &SubgroupDescriptor, g: &GroupElement, budget: u64) -> Result<bool> {
    match h {
        SubgroupDescriptor::Whole => Ok(true),
        SubgroupDescriptor::Lattice { basis } => match g {
            GroupElement::Lattice(v) => Ok(Hnf::from_columns(v.len(), basis).contains(v)),
            _ => Err(Error::capability(
                "lattice subgroup membership asked for a non-lattice element; \
                 use the stick-graph connectivity island test instead",
            )),
        },
        SubgroupDescriptor::FiniteGenerated { generators } => match g {
            GroupElement::Perm(_) => Ok(finite_closure(generators, budget)?.contains(g)),
            GroupElement::Word(_) => Err(Error::capability(
                "free-group subgroup membership is unsupported; \
                 use the stick-graph connectivity island test instead",
            )),
            GroupElement::Lattice(_) => Ok(finite_closure(generators, budget)?.contains(g)),
        },
    }
}

/// Closure of a finite element set under multiplication and inverse.
pub fn finite_closure(generators: &[GroupElement], budget: u64) -> Result<Vec<GroupElement>> {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut out: Vec<GroupElement> = Vec::new();
    let mut queue: Vec<GroupElement> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            out.push(g.clone());
            queue.push(g.clone());
        }
        let gi = g.inv();
        if seen.insert(gi.clone()) {
            out.push(gi.clone());
            queue.push(gi);
        }
    }
    while let Some(g) = queue.pop() {
        for h in out.clone() {
            for prod in [g.mul(&h), h.mul(&g)] {
                if seen.insert(prod.clone()) {
                    if out.len() as u64 + 1 > budget {
                        return Err(Error::budget("closing finite subgroup", budget));
                    }
                    out.push(prod.clone());
                    queue.push(prod);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Left-coset representatives of `h` in `g`, in word-ball order.
#[derive(Clone, Debug)]
pub struct CosetReps {
    pub reps: Vec<GroupElement>,
    pub exhausted: bool,
}

/// Number of left cosets of `h` in `g`, or None when infinite.
pub fn coset_count(g: &GroupDescriptor, h: &SubgroupDescriptor, budget: u64) -> Result<Option<BigInt>> {
    match h {
        SubgroupDescriptor::Whole => Ok(Some(BigInt::from(1))),
        SubgroupDescriptor::Lattice { basis } => {
            let gh = g.lattice_hnf()?;
            let hh = Hnf::from_columns(gh.dim(), basis);
            for c in hh.basis_columns() {
                if !gh.contains(c) {
                    return Err(Error::usage("subgroup basis not contained in the group"));
                }
            }
            Ok(gh.index_of_sublattice(&hh))
        }
        SubgroupDescriptor::FiniteGenerated { generators } => {
            let all = g.enumerate_all(budget)?;
            let sub = finite_closure(generators, budget)?;
            for s in &sub {
                if !all.contains(s) {
                    return Err(Error::usage("subgroup element not contained in the group"));
                }
            }
            Ok(Some(BigInt::from(all.len() / sub.len())))
        }
    }
}

/// Canonical key identifying the left coset g·H.
pub fn coset_key(g: &GroupElement, h: &SubgroupDescriptor, budget: u64) -> Result<GroupElement> {
    match h {
        SubgroupDescriptor::Whole => Ok(match g {
            GroupElement::Lattice(v) => GroupElement::Lattice(vec![BigInt::zero(); v.len()]),
            GroupElement::Perm(p) => GroupElement::Perm((0..p.len()).collect()),
            GroupElement::Word(_) => GroupElement::Word(Vec::new()),
        }),
        SubgroupDescriptor::Lattice { basis } => match g {
            GroupElement::Lattice(v) => {
                Ok(GroupElement::Lattice(Hnf::from_columns(v.len(), basis).reduce(v)))
            }
            _ => Err(Error::usage("element family mismatch")),
        },
        SubgroupDescriptor::FiniteGenerated { generators } => {
            let sub = finite_closure(generators, budget)?;
            let mut best: Option<GroupElement> = None;
            for s in &sub {
                let cand = g.mul(s);
                if best.as_ref().map(|b| cand < *b).unwrap_or(true) {
                    best = Some(cand);
                }
            }
            best.ok_or_else(|| Error::usage("empty subgroup closure"))
        }
    }
}

/// The first `n` distinct left-coset representatives of G/H in word-ball
/// order; the identity always represents its own coset first. When fewer
/// than `n` cosets exist all of them are returned with `exhausted` set.
pub fn coset_enumeration(
    g: &GroupDescriptor,
    h: &SubgroupDescriptor,
    n: usize,
    budget: u64,
) -> Result<CosetReps> {
    if n == 0 {
        return Err(Error::usage("coset enumeration needs a positive count"));
    }
    let total = coset_count(g, h, budget)?;
    let mut reps: Vec<GroupElement> = Vec::new();
    let mut seen_keys: HashSet<GroupElement> = HashSet::new();
    let mut l = 0u32;
    loop {
        let ball = g.word_ball(l, budget)?;
        for e in &ball {
            let key = coset_key(e, h, budget)?;
            if seen_keys.contains(&key) {
                continue;
            }
            seen_keys.insert(key);
            reps.push(e.clone());
            let done_by_count = total
                .as_ref()
                .map(|t| BigInt::from(reps.len()) == *t)
                .unwrap_or(false);
            if reps.len() == n || done_by_count {
                let exhausted = total
                    .as_ref()
                    .map(|t| BigInt::from(reps.len()) == *t)
                    .unwrap_or(false);
                return Ok(CosetReps { reps, exhausted });
            }
        }
        // Group exhausted without reaching n cosets.
        if g.word_ball(l + 1, budget)?.len() == ball.len() {
            return Ok(CosetReps { reps, exhausted: true });
        }
        if u64::from(l) > budget {
            return Err(Error::budget("coset enumeration radius", budget));
        }
        l += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z1() -> GroupDescriptor {
        GroupDescriptor::standard_lattice(1)
    }

    #[test]
    fn word_ball_identity_only_at_zero() {
        let ball = z1().word_ball(0, 100).unwrap();
        assert_eq!(ball, vec![GroupElement::lattice(&[0])]);
    }

    #[test]
    fn word_ball_order_on_the_line() {
        // Oracle: BFS closure over {+1,-1} gives 0,1,-1,2,-2.
        let ball = z1().word_ball(2, 100).unwrap();
        let want: Vec<GroupElement> = [0i64, 1, -1, 2, -2]
            .iter()
            .map(|&x| GroupElement::lattice(&[x]))
            .collect();
        assert_eq!(ball, want);
    }

    #[test]
    fn free_group_ball_count() {
        // |B(1)| = 1 + 2k for the free group of rank k.
        let f2 = GroupDescriptor::free(2);
        let ball = f2.word_ball(1, 100).unwrap();
        assert_eq!(ball.len(), 5);
        assert!(ball.contains(&GroupElement::word(&[])));
        // And the reduced-word invariant holds at radius 3.
        for w in f2.word_ball(3, 10_000).unwrap() {
            if let GroupElement::Word(ls) = &w {
                for pair in ls.windows(2) {
                    assert_ne!(pair[0], pair[1].flipped(), "unreduced word {w}");
                }
            }
        }
    }

    #[test]
    fn lattice_ball_matches_grid_count_oracle() {
        // Oracle: count integer points with l1 norm <= L directly.
        for rank in 1..=2usize {
            let g = GroupDescriptor::standard_lattice(rank);
            for l in 0..=4i64 {
                let ball = g.word_ball(l as u32, 100_000).unwrap();
                let mut count = 0u64;
                let range: Vec<i64> = (-l..=l).collect();
                if rank == 1 {
                    for x in &range {
                        if x.abs() <= l {
                            count += 1;
                        }
                    }
                } else {
                    for x in &range {
                        for y in &range {
                            if x.abs() + y.abs() <= l {
                                count += 1;
                            }
                        }
                    }
                }
                assert_eq!(ball.len() as u64, count, "rank {rank} L {l}");
            }
        }
    }

    #[test]
    fn word_ball_budget_error() {
        match z1().word_ball(10, 5) {
            Err(Error::Budget { limit, .. }) => assert_eq!(limit, 5),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn group_ops_identities_sampled() {
        let f2 = GroupDescriptor::free(2);
        let ball = f2.word_ball(3, 10_000).unwrap();
        let id = f2.identity();
        for g in ball.iter().take(20) {
            assert_eq!(g.mul(&g.inv()), id);
        }
        for a in ball.iter().take(8) {
            for b in ball.iter().take(8) {
                for c in ball.iter().take(8) {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn even_subgroup_membership() {
        let h = SubgroupDescriptor::lattice(&[&[2]]);
        assert!(subgroup_membership(&h, &GroupElement::lattice(&[4]), 100).unwrap());
        assert!(!subgroup_membership(&h, &GroupElement::lattice(&[3]), 100).unwrap());
    }

    #[test]
    fn rectangular_subgroup_membership() {
        let h = SubgroupDescriptor::lattice(&[&[2, 0], &[0, 3]]);
        assert!(subgroup_membership(&h, &GroupElement::lattice(&[4, 3]), 100).unwrap());
        assert!(!subgroup_membership(&h, &GroupElement::lattice(&[1, 3]), 100).unwrap());
    }

    #[test]
    fn free_subgroup_membership_unsupported() {
        let h = SubgroupDescriptor::FiniteGenerated {
            generators: vec![GroupElement::word(&[Letter { gen: 0, inverse: false }])],
        };
        let g = GroupElement::word(&[Letter { gen: 1, inverse: false }]);
        match subgroup_membership(&h, &g, 100) {
            Err(Error::Capability(msg)) => assert!(msg.contains("connectivity")),
            other => panic!("expected capability error, got {other:?}"),
        }
    }

    #[test]
    fn coset_enumeration_single_coset() {
        let reps = coset_enumeration(&z1(), &SubgroupDescriptor::lattice(&[&[1]]), 1, 1000).unwrap();
        assert_eq!(reps.reps, vec![GroupElement::lattice(&[0])]);
        assert!(reps.exhausted);
    }

    #[test]
    fn coset_enumeration_parity() {
        let reps = coset_enumeration(&z1(), &SubgroupDescriptor::lattice(&[&[2]]), 2, 1000).unwrap();
        assert_eq!(
            reps.reps,
            vec![GroupElement::lattice(&[0]), GroupElement::lattice(&[1])]
        );
        assert!(reps.exhausted);
    }

    #[test]
    fn coset_enumeration_trivial_subgroup() {
        let reps =
            coset_enumeration(&z1(), &SubgroupDescriptor::trivial_lattice(1), 5, 1000).unwrap();
        let want: Vec<GroupElement> = [0i64, 1, -1, 2, -2]
            .iter()
            .map(|&x| GroupElement::lattice(&[x]))
            .collect();
        assert_eq!(reps.reps, want);
        assert!(!reps.exhausted);
    }

    #[test]
    fn coset_reps_pairwise_distinct_and_covering() {
        // Representatives are in pairwise distinct cosets and cover every
        // coset met by a word ball, checked through membership of quotients.
        let g = z1();
        let h = SubgroupDescriptor::lattice(&[&[3]]);
        let reps = coset_enumeration(&g, &h, 3, 1000).unwrap();
        assert!(reps.exhausted);
        for (i, a) in reps.reps.iter().enumerate() {
            for b in reps.reps.iter().skip(i + 1) {
                let q = a.inv().mul(b);
                assert!(!subgroup_membership(&h, &q, 100).unwrap());
            }
        }
        for e in g.word_ball(4, 1000).unwrap() {
            let covered = reps
                .reps
                .iter()
                .any(|r| subgroup_membership(&h, &r.inv().mul(&e), 100).unwrap());
            assert!(covered, "element {e} not covered");
        }
    }

    #[test]
    fn permutation_closure_is_a_group() {
        // C3 from a single 3-cycle.
        let sigma = GroupElement::Perm(vec![1, 2, 0]);
        let all = finite_closure(&[sigma.clone()], 100).unwrap();
        assert_eq!(all.len(), 3);
        for a in &all {
            assert!(all.contains(&a.inv()));
            for b in &all {
                assert!(all.contains(&a.mul(b)));
            }
        }
    }
}
