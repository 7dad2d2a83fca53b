//! DOT exports: the window-restricted stick graph with island labels, and
//! the island quotient graph with bridge edges.

use crate::action::Point;
use crate::bridge::BridgeAtlas;
use crate::error::Result;
use crate::extreal::ExtReal;
use crate::stick::{IslandPartition, StickGraph};
use std::collections::BTreeMap;
use std::fmt::Write;

fn quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "'"))
}

/// Undirected weighted stick graph over the window, vertices labeled with
/// their island id, edge weights as exact rational strings.
pub fn stick_graph_dot(
    stick: &StickGraph,
    window: &[Point],
    partition: &IslandPartition,
) -> Result<String> {
    let mut out = String::from("graph sticks {\n");
    for (i, p) in window.iter().enumerate() {
        let island = partition.ids[i];
        writeln!(
            out,
            "  {} [label={}, island={}];",
            quoted(&stick.action.point_label(p)),
            quoted(&format!("{} [{}]", stick.action.point_label(p), island)),
            island
        )
        .unwrap();
    }
    for (i, x) in window.iter().enumerate() {
        for (y, w) in stick.stick_neighbors(x)? {
            if let Some(j) = window.iter().position(|p| *p == y) {
                if j > i {
                    writeln!(
                        out,
                        "  {} -- {} [weight={}];",
                        quoted(&stick.action.point_label(x)),
                        quoted(&stick.action.point_label(&y)),
                        quoted(&w.to_string())
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Islands as supernodes, bridges between them as weighted edges (minimum
/// observed weight per island pair on the window).
pub fn island_quotient_dot(
    atlas: &BridgeAtlas,
    window: &[Point],
    partition: &IslandPartition,
) -> Result<String> {
    let mut out = String::from("graph islands {\n");
    for id in 0..partition.count {
        let members = partition.members(id);
        let label = members
            .iter()
            .take(4)
            .map(|p| atlas.stick.action.point_label(p))
            .collect::<Vec<_>>()
            .join(",");
        let suffix = if members.len() > 4 { ",..." } else { "" };
        writeln!(
            out,
            "  island{} [label={}];",
            id,
            quoted(&format!("island {id}: {label}{suffix}"))
        )
        .unwrap();
    }
    let mut edges: BTreeMap<(usize, usize), ExtReal> = BTreeMap::new();
    let cap = atlas.max_weight();
    for (i, x) in window.iter().enumerate() {
        for (y, w) in atlas.bridge_neighbors(x, cap)? {
            let Some(j) = window.iter().position(|p| *p == y) else { continue };
            let (a, b) = (partition.ids[i], partition.ids[j]);
            let key = (a.min(b), a.max(b));
            let slot = edges.entry(key).or_insert_with(|| w.clone());
            if w < *slot {
                *slot = w;
            }
        }
    }
    for ((a, b), w) in edges {
        writeln!(
            out,
            "  island{a} -- island{b} [weight={}];",
            quoted(&w.to_string())
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::run_pipeline;
    use crate::scenario::ScenarioConfig;

    #[test]
    fn dot_outputs_are_wellformed() {
        let cfg = ScenarioConfig::for_scenario("2z-on-z");
        let out = run_pipeline(&cfg).unwrap();
        let stick = out.stick.as_ref().unwrap();
        let atlas = out.atlas.as_ref().unwrap();
        let partition = stick.islands(&out.scenario.window).unwrap();
        let dot = stick_graph_dot(stick, &out.scenario.window, &partition).unwrap();
        assert!(dot.starts_with("graph sticks {"));
        assert!(dot.contains("--"));
        assert!(dot.contains("weight=\"1\""));
        let q = island_quotient_dot(atlas, &out.scenario.window, &partition).unwrap();
        assert!(q.contains("island0"));
        assert!(q.contains("island4"));
        assert!(q.trim_end().ends_with('}'));
    }
}
