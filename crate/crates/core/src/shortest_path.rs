//! Lazy Dijkstra over implicitly defined weighted graphs on points.
//!
//! Priorities are (distance, hop count) compared lexicographically, so among
//! minimum-weight routes a settled point always records a hop-minimal one.
//! That tie-break is what makes the path-length bounds checkable: a
//! hop-minimal optimal stick path never keeps three consecutive points
//! inside one translate, and a hop-minimal optimal bridge path never keeps
//! three consecutive points on one island.

use crate::action::Point;
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    Plain,
    Bridge,
}

#[derive(Clone, Debug)]
pub struct Settled {
    pub point: Point,
    pub dist: ExtReal,
    pub hops: u32,
    pub bridge_edges: u32,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Settled points in settlement order (start first).
    pub settled: Vec<Settled>,
    /// True when some edge or node at or beyond the cutoff was discarded;
    /// if false and the frontier emptied, the whole component was settled.
    pub pruned: bool,
    /// All requested targets were settled (always false without targets).
    pub target_settled: bool,
    pub visited: u64,
}

pub struct SearchParams<'a> {
    pub cutoff: Option<&'a ExtReal>,
    /// Stop as soon as every one of these points is settled.
    pub targets: Option<&'a std::collections::BTreeSet<Point>>,
    pub budget: u64,
    pub what: &'a str,
}

pub fn dijkstra<F>(start: &Point, neighbors: F, params: SearchParams<'_>) -> Result<SearchResult>
where
    F: Fn(&Point) -> Result<Vec<(Point, ExtReal, EdgeKind)>>,
{
    let mut heap: BinaryHeap<Reverse<(ExtReal, u32, u64)>> = BinaryHeap::new();
    let mut queued: Vec<(Point, u32)> = Vec::new(); // seq -> (point, bridge_edges)
    let mut best: HashMap<Point, (ExtReal, u32)> = HashMap::new();
    let mut done: HashMap<Point, ()> = HashMap::new();
    let mut result = SearchResult {
        settled: Vec::new(),
        pruned: false,
        target_settled: false,
        visited: 0,
    };

    let mut remaining_targets = params
        .targets
        .map(|t| t.iter().cloned().collect::<std::collections::BTreeSet<Point>>());

    best.insert(start.clone(), (ExtReal::zero(), 0));
    queued.push((start.clone(), 0));
    heap.push(Reverse((ExtReal::zero(), 0, 0)));

    while let Some(Reverse((dist, hops, seq))) = heap.pop() {
        result.visited += 1;
        if result.visited > params.budget {
            return Err(Error::Inconclusive {
                what: params.what.to_string(),
                visited: result.visited,
            });
        }
        let (point, bridges) = queued[seq as usize].clone();
        if done.contains_key(&point) {
            continue;
        }
        match best.get(&point) {
            Some((d, h)) if *d == dist && *h == hops => {}
            _ => continue, // stale heap entry
        }
        if let Some(cut) = params.cutoff {
            if dist >= *cut {
                result.pruned = true;
                continue;
            }
        }
        done.insert(point.clone(), ());
        result.settled.push(Settled {
            point: point.clone(),
            dist: dist.clone(),
            hops,
            bridge_edges: bridges,
        });
        if let Some(remaining) = &mut remaining_targets {
            remaining.remove(&point);
            if remaining.is_empty() {
                result.target_settled = true;
                return Ok(result);
            }
        }
        for (next, w, kind) in neighbors(&point)? {
            if done.contains_key(&next) {
                continue;
            }
            let nd = &dist + &w;
            if let Some(cut) = params.cutoff {
                if nd >= *cut {
                    result.pruned = true;
                    continue;
                }
            }
            let nh = hops + 1;
            let improves = match best.get(&next) {
                Some((d, h)) => nd < *d || (nd == *d && nh < *h),
                None => true,
            };
            if improves {
                best.insert(next.clone(), (nd.clone(), nh));
                let nb = bridges + u32::from(kind == EdgeKind::Bridge);
                let seq = queued.len() as u64;
                queued.push((next, nb));
                heap.push(Reverse((nd, nh, seq)));
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64) -> Point {
        Point::lattice(&[x])
    }

    // Line graph with unit steps of size 1 and 2.
    fn line_neighbors(x: &Point) -> Result<Vec<(Point, ExtReal, EdgeKind)>> {
        let Point::Lattice(v) = x else { unreachable!() };
        let c: i64 = v[0].to_string().parse().unwrap();
        Ok([-2i64, -1, 1, 2]
            .iter()
            .map(|d| (p(c + d), ExtReal::from_int(1), EdgeKind::Plain))
            .collect())
    }

    #[test]
    fn settles_in_distance_order_with_cutoff() {
        let r = dijkstra(
            &p(0),
            line_neighbors,
            SearchParams {
                cutoff: Some(&ExtReal::from_int(3)),
                targets: None,
                budget: 10_000,
                what: "test",
            },
        )
        .unwrap();
        // d(0,y) = ceil(|y|/2) < 3 means |y| <= 4.
        assert_eq!(r.settled.len(), 9);
        assert!(r.pruned);
        let hops_of_4 = r
            .settled
            .iter()
            .find(|s| s.point == p(4))
            .map(|s| s.hops)
            .unwrap();
        assert_eq!(hops_of_4, 2, "hop-minimal tie break");
    }

    #[test]
    fn target_stops_search() {
        let target: std::collections::BTreeSet<Point> = std::iter::once(p(5)).collect();
        let r = dijkstra(
            &p(0),
            line_neighbors,
            SearchParams {
                cutoff: Some(&ExtReal::from_int(100)),
                targets: Some(&target),
                budget: 10_000,
                what: "test",
            },
        )
        .unwrap();
        assert!(r.target_settled);
        let d = &r.settled.last().unwrap().dist;
        assert_eq!(*d, ExtReal::from_int(3));
    }

    #[test]
    fn exhaustion_without_pruning_is_component_complete() {
        // Two disconnected points.
        let only_self = |_: &Point| Ok(Vec::new());
        let target: std::collections::BTreeSet<Point> = std::iter::once(p(1)).collect();
        let r = dijkstra(
            &p(0),
            only_self,
            SearchParams {
                cutoff: Some(&ExtReal::from_int(10)),
                targets: Some(&target),
                budget: 100,
                what: "test",
            },
        )
        .unwrap();
        assert!(!r.target_settled);
        assert!(!r.pruned);
        assert_eq!(r.settled.len(), 1);
    }

    #[test]
    fn budget_is_inconclusive() {
        let r = dijkstra(
            &p(0),
            line_neighbors,
            SearchParams {
                cutoff: None,
                targets: None,
                budget: 10,
                what: "unbounded line sweep",
            },
        );
        match r {
            Err(Error::Inconclusive { .. }) => {}
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }
}
