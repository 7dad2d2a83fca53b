//! Isometry groups of finite metric spaces by backtracking search, and the
//! check that they act properly and isometrically.

use crate::action::{ActionDescriptor, ActionKind, ProperVerdict};
use crate::error::{Error, Result};
use crate::extreal::ratio_string;
use crate::group::{GroupDescriptor, GroupElement, GroupFamily};
use crate::metric::{check_invariance, Pseudometric};
use crate::action::Point;
use num::{BigRational, Zero};

/// A finite metric space: labels and a symmetric rational distance table
/// that is positive off the diagonal and satisfies the triangle inequality.
#[derive(Clone, Debug)]
pub struct FiniteMetricSpace {
    pub labels: Vec<String>,
    pub table: Vec<Vec<BigRational>>,
}

impl FiniteMetricSpace {
    pub fn new(labels: Vec<String>, table: Vec<Vec<BigRational>>) -> Result<FiniteMetricSpace> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::usage("distance table must be square over the labels"));
        }
        for i in 0..n {
            if !table[i][i].is_zero() {
                return Err(Error::verification(
                    "metric-space axioms",
                    format!("d({0},{0}) != 0", labels[i]),
                ));
            }
            for j in 0..n {
                if table[i][j] != table[j][i] {
                    return Err(Error::verification(
                        "metric-space axioms",
                        format!("asymmetric at ({},{})", labels[i], labels[j]),
                    ));
                }
                if i != j && table[i][j] <= BigRational::zero() {
                    return Err(Error::verification(
                        "metric-space axioms",
                        format!("nonpositive distance at ({},{})", labels[i], labels[j]),
                    ));
                }
                for k in 0..n {
                    if &table[i][j] + &table[j][k] < table[i][k] {
                        return Err(Error::verification(
                            "metric-space axioms",
                            format!(
                                "triangle violated at ({},{},{})",
                                labels[i], labels[j], labels[k]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(FiniteMetricSpace { labels, table })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn metric(&self) -> Pseudometric {
        let mut d = Pseudometric::from_table(self.table.clone());
        d.flags.claims_compatible = true;
        d.flags.claims_proper = true;
        d
    }

    pub fn points(&self) -> Vec<Point> {
        (0..self.size()).map(Point::Labeled).collect()
    }

    /// Sorted multiset of distances from point `i`; a candidate image must
    /// share it, which prunes the search hard.
    fn distance_profile(&self, i: usize) -> Vec<BigRational> {
        let mut row = self.table[i].clone();
        row.sort();
        row
    }
}

/// All distance-preserving permutations of the space, found by backtracking
/// with distance-profile pruning and returned as a verified permutation
/// group descriptor.
pub fn isometry_group(space: &FiniteMetricSpace, cap: usize) -> Result<GroupDescriptor> {
    let n = space.size();
    if n > cap {
        return Err(Error::budget("isometry search space size", cap as u64));
    }
    let profiles: Vec<Vec<BigRational>> = (0..n).map(|i| space.distance_profile(i)).collect();
    let mut found: Vec<GroupElement> = Vec::new();
    let mut assignment: Vec<usize> = Vec::new();
    let mut used = vec![false; n];

    fn backtrack(
        space: &FiniteMetricSpace,
        profiles: &[Vec<BigRational>],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<GroupElement>,
    ) {
        let i = assignment.len();
        if i == space.size() {
            found.push(GroupElement::Perm(assignment.clone()));
            return;
        }
        for img in 0..space.size() {
            if used[img] || profiles[i] != profiles[img] {
                continue;
            }
            let consistent = assignment
                .iter()
                .enumerate()
                .all(|(j, &img_j)| space.table[i][j] == space.table[img][img_j]);
            if consistent {
                assignment.push(img);
                used[img] = true;
                backtrack(space, profiles, assignment, used, found);
                assignment.pop();
                used[img] = false;
            }
        }
    }

    backtrack(space, &profiles, &mut assignment, &mut used, &mut found);

    // Closure sanity: composition and inverse stay inside the found set.
    for a in &found {
        if !found.contains(&a.inv()) {
            return Err(Error::verification(
                "isometry-group closure",
                format!("inverse of {a} missing"),
            ));
        }
        for b in &found {
            if !found.contains(&a.mul(b)) {
                return Err(Error::verification(
                    "isometry-group closure",
                    format!("product {a}*{b} missing"),
                ));
            }
        }
    }
    let generators: Vec<GroupElement> = found.into_iter().filter(|g| !g.is_identity()).collect();
    GroupDescriptor::new(GroupFamily::Permutation { degree: n }, generators)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct IsometryActionReport {
    pub group_order: u64,
    pub proper: ProperVerdict,
    pub invariance_passed: bool,
    pub witness: Option<String>,
}

/// Check that a (sub)group of isometries acts properly on the space and
/// leaves the table metric invariant.
pub fn verify_proper_isometry_action(
    space: &FiniteMetricSpace,
    group: &GroupDescriptor,
) -> Result<IsometryActionReport> {
    let action = ActionDescriptor::new(group.clone(), ActionKind::PermutationNatural)
        .with_labels(&space.labels.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let window = space.points();
    let proper = action.check_proper(&window)?;
    let all = group.enumerate_all(1_000_000)?;
    let inv = check_invariance(&space.metric(), &action, &window, &all)?;
    Ok(IsometryActionReport {
        group_order: all.len() as u64,
        proper: proper.verdict,
        invariance_passed: inv.passed,
        witness: proper.witness.or(inv.witness),
    })
}

/// The 4-point cycle: adjacent points at distance 1, opposite at 2.
pub fn square_table() -> FiniteMetricSpace {
    let q = |n: i64| BigRational::from_integer(n.into());
    FiniteMetricSpace::new(
        vec!["p0".into(), "p1".into(), "p2".into(), "p3".into()],
        vec![
            vec![q(0), q(1), q(2), q(1)],
            vec![q(1), q(0), q(1), q(2)],
            vec![q(2), q(1), q(0), q(1)],
            vec![q(1), q(2), q(1), q(0)],
        ],
    )
    .expect("square table is a metric")
}

pub fn equilateral_table(n: usize) -> FiniteMetricSpace {
    let q = |x: i64| BigRational::from_integer(x.into());
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(0) } else { q(1) }).collect())
        .collect();
    FiniteMetricSpace::new(labels, table).expect("equilateral table is a metric")
}

pub fn table_display(space: &FiniteMetricSpace) -> Vec<String> {
    space
        .table
        .iter()
        .map(|row| {
            row.iter()
                .map(ratio_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Brute-force oracle: filter all n! permutations.
    fn isometries_by_filter(space: &FiniteMetricSpace) -> Vec<Vec<usize>> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(space.size())
            .into_iter()
            .filter(|p| {
                (0..space.size()).all(|i| {
                    (0..space.size()).all(|j| space.table[i][j] == space.table[p[i]][p[j]])
                })
            })
            .collect()
    }

    #[test]
    fn square_has_dihedral_symmetry() {
        let space = square_table();
        let g = isometry_group(&space, 9).unwrap();
        let all = g.enumerate_all(1000).unwrap();
        let oracle = isometries_by_filter(&space);
        assert_eq!(all.len(), 8);
        assert_eq!(all.len(), oracle.len());
        for p in oracle {
            assert!(all.contains(&GroupElement::Perm(p)));
        }
    }

    #[test]
    fn equilateral_triangle_has_full_symmetry() {
        let space = equilateral_table(3);
        let g = isometry_group(&space, 9).unwrap();
        assert_eq!(g.enumerate_all(1000).unwrap().len(), 6);
        assert_eq!(isometries_by_filter(&space).len(), 6);
    }

    #[test]
    fn distinct_distances_leave_only_identity() {
        let space = FiniteMetricSpace::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![q(0), q(3), q(4)],
                vec![q(3), q(0), q(5)],
                vec![q(4), q(5), q(0)],
            ],
        )
        .unwrap();
        let g = isometry_group(&space, 9).unwrap();
        assert_eq!(g.enumerate_all(100).unwrap().len(), 1);
    }

    #[test]
    fn action_report_passes_for_square() {
        let space = square_table();
        let g = isometry_group(&space, 9).unwrap();
        let report = verify_proper_isometry_action(&space, &g).unwrap();
        assert_eq!(report.group_order, 8);
        assert_eq!(report.proper, ProperVerdict::ProperCertified);
        assert!(report.invariance_passed);
    }

    #[test]
    fn trivial_group_report_is_vacuously_proper() {
        let space = square_table();
        let trivial =
            GroupDescriptor::new(GroupFamily::Permutation { degree: 4 }, vec![]).unwrap();
        let report = verify_proper_isometry_action(&space, &trivial).unwrap();
        assert_eq!(report.group_order, 1);
        assert_eq!(report.proper, ProperVerdict::ProperCertified);
    }

    #[test]
    fn injected_non_isometry_fails_invariance() {
        // Stretch one side of the square: the 4-cycle is no longer an
        // isometry of the perturbed table.
        let mut space = square_table();
        space.table[0][1] = q(7);
        space.table[1][0] = q(7);
        let cycle = GroupDescriptor::new(
            GroupFamily::Permutation { degree: 4 },
            vec![GroupElement::Perm(vec![1, 2, 3, 0])],
        )
        .unwrap();
        let report = verify_proper_isometry_action(
            &FiniteMetricSpace {
                labels: space.labels.clone(),
                table: space.table.clone(),
            },
            &cycle,
        )
        .unwrap();
        assert!(!report.invariance_passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn cap_is_a_budget_error() {
        let space = equilateral_table(5);
        match isometry_group(&space, 4) {
            Err(Error::Budget { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn triangle_violation_rejected() {
        let r = FiniteMetricSpace::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                vec![q(0), q(1), q(3)],
                vec![q(1), q(0), q(1)],
                vec![q(3), q(1), q(0)],
            ],
        );
        match r {
            Err(Error::Verification { witness, .. }) => {
                assert!(witness.contains("triangle"));
            }
            other => panic!("expected verification error, got {other:?}"),
        }
    }
}
