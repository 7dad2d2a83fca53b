//! Built-in scenarios: which group acts on which space, the default base
//! pseudometric, fundamental set, and verification window for each, plus
//! the JSON configuration schema the CLI consumes.

use crate::action::{ActionDescriptor, ActionKind, Point};
use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement, GroupFamily, Letter};
use crate::isogroup::{square_table, FiniteMetricSpace};
use crate::metric::Pseudometric;
use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ScenarioId {
    #[serde(rename = "z-line")]
    ZLine,
    #[serde(rename = "2z-on-z")]
    TwoZOnZ,
    #[serde(rename = "two-lines")]
    TwoLines,
    #[serde(rename = "z2-on-itself")]
    Z2OnItself,
    #[serde(rename = "c3-finite")]
    C3Finite,
    #[serde(rename = "free-group-cayley")]
    FreeGroupCayley,
    #[serde(rename = "finite-metric-table")]
    FiniteMetricTable,
    #[serde(rename = "trivial-z")]
    TrivialZ,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 8] = [
        ScenarioId::ZLine,
        ScenarioId::TwoZOnZ,
        ScenarioId::TwoLines,
        ScenarioId::Z2OnItself,
        ScenarioId::C3Finite,
        ScenarioId::FreeGroupCayley,
        ScenarioId::FiniteMetricTable,
        ScenarioId::TrivialZ,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ScenarioId::ZLine => "z-line",
            ScenarioId::TwoZOnZ => "2z-on-z",
            ScenarioId::TwoLines => "two-lines",
            ScenarioId::Z2OnItself => "z2-on-itself",
            ScenarioId::C3Finite => "c3-finite",
            ScenarioId::FreeGroupCayley => "free-group-cayley",
            ScenarioId::FiniteMetricTable => "finite-metric-table",
            ScenarioId::TrivialZ => "trivial-z",
        }
    }

    pub fn default_window_radius(&self) -> u32 {
        match self {
            ScenarioId::FreeGroupCayley => 1,
            ScenarioId::C3Finite
            | ScenarioId::FiniteMetricTable
            | ScenarioId::TrivialZ => 1,
            _ => 4,
        }
    }
}

impl FromStr for ScenarioId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ScenarioId> {
        ScenarioId::ALL
            .iter()
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = ScenarioId::ALL.iter().map(|i| i.name()).collect();
                Error::usage(format!("unknown scenario {s}; built-ins: {}", names.join(", ")))
            })
    }
}

/// A point in configuration syntax, resolved against the scenario's space.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Coords(Vec<i64>),
    Composite { copy: u64, coord: i64 },
    Name(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseMetricSpec {
    Named(String),
    DF { d_f: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub labels: Vec<String>,
    /// Rows of exact rationals as strings, e.g. "3/2".
    pub rows: Vec<Vec<String>>,
}

fn default_schema() -> u32 {
    1
}
fn default_ball_radii() -> Vec<u32> {
    vec![1, 2, 4, 8]
}
fn default_sample_pairs() -> u64 {
    1000
}
fn default_budget() -> u64 {
    2_000_000
}
fn default_seed() -> u64 {
    42
}

/// The run configuration. Unknown fields are rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub scenario: String,
    #[serde(default)]
    pub fundamental_set: Option<Vec<PointSpec>>,
    #[serde(default)]
    pub base_metric: Option<BaseMetricSpec>,
    #[serde(default)]
    pub window_radius: Option<u32>,
    #[serde(default = "default_ball_radii")]
    pub ball_radii: Vec<u32>,
    #[serde(default = "default_sample_pairs")]
    pub sample_pairs: u64,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub emit_value_table: bool,
    #[serde(default)]
    pub table: Option<TableSpec>,
}

impl ScenarioConfig {
    pub fn for_scenario(name: &str) -> ScenarioConfig {
        ScenarioConfig {
            schema: 1,
            scenario: name.to_string(),
            fundamental_set: None,
            base_metric: None,
            window_radius: None,
            ball_radii: default_ball_radii(),
            sample_pairs: default_sample_pairs(),
            budget: default_budget(),
            seed: default_seed(),
            emit_value_table: false,
            table: None,
        }
    }

    pub fn from_json(text: &str) -> Result<ScenarioConfig> {
        let cfg: ScenarioConfig = serde_json::from_str(text)
            .map_err(|e| Error::usage(format!("config parse error: {e}")))?;
        if cfg.schema != 1 {
            return Err(Error::usage(format!("unsupported config schema {}", cfg.schema)));
        }
        Ok(cfg)
    }
}

/// A fully resolved scenario, ready to feed the pipeline.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub id: ScenarioId,
    pub action: ActionDescriptor,
    pub base: Pseudometric,
    pub fset_points: Vec<Point>,
    pub window: Vec<Point>,
    /// True when the window lists every point of the space.
    pub window_is_whole_space: bool,
    /// Elements outside the acting group whose invariance failure the
    /// reports record as a negative control.
    pub negative_probes: Vec<GroupElement>,
    pub space: Option<FiniteMetricSpace>,
}

pub fn c3_table_space() -> FiniteMetricSpace {
    let q = |n: i64| BigRational::from_integer(n.into());
    FiniteMetricSpace::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            vec![q(0), q(1), q(3)],
            vec![q(1), q(0), q(2)],
            vec![q(3), q(2), q(0)],
        ],
    )
    .expect("c3 table is a metric")
}

fn parse_table(spec: &TableSpec) -> Result<FiniteMetricSpace> {
    let mut rows = Vec::new();
    for row in &spec.rows {
        let mut out = Vec::new();
        for cell in row {
            let q = BigRational::from_str(cell)
                .map_err(|e| Error::usage(format!("bad rational {cell:?}: {e}")))?;
            out.push(q);
        }
        rows.push(out);
    }
    FiniteMetricSpace::new(spec.labels.clone(), rows)
}

impl Scenario {
    pub fn from_config(config: &ScenarioConfig) -> Result<Scenario> {
        let id: ScenarioId = config.scenario.parse()?;
        let radius = config
            .window_radius
            .unwrap_or_else(|| id.default_window_radius());

        let (action, space): (ActionDescriptor, Option<FiniteMetricSpace>) = match id {
            ScenarioId::ZLine => (
                ActionDescriptor::new(
                    GroupDescriptor::standard_lattice(1),
                    ActionKind::LatticeTranslation,
                ),
                None,
            ),
            ScenarioId::TwoZOnZ => (
                ActionDescriptor::new(
                    GroupDescriptor::new(
                        GroupFamily::Lattice { rank: 1 },
                        vec![GroupElement::lattice(&[2])],
                    )?,
                    ActionKind::LatticeTranslation,
                ),
                None,
            ),
            ScenarioId::TwoLines => (
                ActionDescriptor::new(
                    GroupDescriptor::standard_lattice(1),
                    ActionKind::ProductLine { copies: Some(2) },
                ),
                None,
            ),
            ScenarioId::Z2OnItself => (
                ActionDescriptor::new(
                    GroupDescriptor::standard_lattice(2),
                    ActionKind::LatticeTranslation,
                ),
                None,
            ),
            ScenarioId::C3Finite => {
                let space = match &config.table {
                    Some(t) => parse_table(t)?,
                    None => c3_table_space(),
                };
                if space.size() != 3 {
                    return Err(Error::usage("c3-finite needs exactly 3 points"));
                }
                let g = GroupDescriptor::new(
                    GroupFamily::Permutation { degree: 3 },
                    vec![GroupElement::Perm(vec![1, 2, 0])],
                )?;
                let labels: Vec<&str> = space.labels.iter().map(|s| s.as_str()).collect();
                (
                    ActionDescriptor::new(g, ActionKind::PermutationNatural).with_labels(&labels),
                    Some(space),
                )
            }
            ScenarioId::FreeGroupCayley => (
                ActionDescriptor::new(GroupDescriptor::free(2), ActionKind::FreeOnItself),
                None,
            ),
            ScenarioId::FiniteMetricTable => {
                let space = match &config.table {
                    Some(t) => parse_table(t)?,
                    None => square_table(),
                };
                let group = crate::isogroup::isometry_group(&space, 9)?;
                let labels: Vec<&str> = space.labels.iter().map(|s| s.as_str()).collect();
                (
                    ActionDescriptor::new(group, ActionKind::PermutationNatural)
                        .with_labels(&labels),
                    Some(space),
                )
            }
            ScenarioId::TrivialZ => (
                ActionDescriptor::new(
                    GroupDescriptor::standard_lattice(1),
                    ActionKind::TrivialOnLabels { count: 1 },
                )
                .with_labels(&["p"]),
                None,
            ),
        };

        let fset_points = match &config.fundamental_set {
            Some(specs) => specs
                .iter()
                .map(|s| resolve_point(id, &action, s))
                .collect::<Result<Vec<_>>>()?,
            None => default_fset(id, &action)?,
        };

        let (window, whole) = build_window(id, &action, &fset_points, radius)?;

        let base = match &config.base_metric {
            Some(BaseMetricSpec::Named(name)) => match name.as_str() {
                "discrete" => Pseudometric::discrete(),
                "word-length" => {
                    if !matches!(action.kind, ActionKind::FreeOnItself) {
                        return Err(Error::usage(
                            "word-length base is only defined for group-on-itself scenarios",
                        ));
                    }
                    Pseudometric::word_metric()
                }
                "table" => match &space {
                    Some(s) => s.metric(),
                    None => return Err(Error::usage("table base needs a table scenario")),
                },
                other => {
                    return Err(Error::usage(format!(
                        "unknown base metric {other}; use discrete, word-length, table, or d_f"
                    )))
                }
            },
            Some(BaseMetricSpec::DF { d_f }) => match d_f.as_str() {
                "identity" => Pseudometric::d_f("identity", point_value),
                "square" => Pseudometric::d_f("square", |p| {
                    let v = point_value(p);
                    &v * &v
                }),
                other => {
                    return Err(Error::usage(format!(
                        "unknown d_f spec {other}; use identity or square"
                    )))
                }
            },
            None => match id {
                ScenarioId::C3Finite | ScenarioId::FiniteMetricTable => {
                    space.as_ref().expect("table scenario").metric()
                }
                ScenarioId::FreeGroupCayley => Pseudometric::word_metric(),
                _ => Pseudometric::discrete(),
            },
        };

        let negative_probes = match id {
            ScenarioId::TwoZOnZ => vec![GroupElement::lattice(&[1])],
            _ => Vec::new(),
        };

        Ok(Scenario {
            id,
            action,
            base,
            fset_points,
            window,
            window_is_whole_space: whole,
            negative_probes,
            space,
        })
    }
}

/// The default coordinate functional behind the d_f base choices.
fn point_value(p: &Point) -> BigRational {
    let int = |b: BigInt| BigRational::from_integer(b);
    match p {
        Point::Lattice(v) => int(v.iter().sum()),
        Point::Labeled(i) => int(BigInt::from(*i)),
        Point::Composite { coord, .. } => int(coord.clone()),
        Point::Word(w) => match w {
            GroupElement::Word(ls) => int(BigInt::from(ls.len())),
            _ => unreachable!(),
        },
    }
}

fn default_fset(id: ScenarioId, action: &ActionDescriptor) -> Result<Vec<Point>> {
    Ok(match id {
        ScenarioId::ZLine => vec![
            Point::lattice(&[-1]),
            Point::lattice(&[0]),
            Point::lattice(&[1]),
        ],
        ScenarioId::TwoZOnZ => vec![Point::lattice(&[0]), Point::lattice(&[1])],
        ScenarioId::TwoLines => vec![Point::composite(0, 0), Point::composite(1, 0)],
        ScenarioId::Z2OnItself => vec![
            Point::lattice(&[0, 0]),
            Point::lattice(&[1, 0]),
            Point::lattice(&[-1, 0]),
            Point::lattice(&[0, 1]),
            Point::lattice(&[0, -1]),
        ],
        ScenarioId::FreeGroupCayley => action
            .group
            .word_ball(1, 100)?
            .into_iter()
            .map(Point::Word)
            .collect(),
        ScenarioId::C3Finite => vec![Point::Labeled(0)],
        ScenarioId::FiniteMetricTable => {
            let (reps, _) = action.orbit_reps(64)?;
            reps
        }
        ScenarioId::TrivialZ => vec![Point::Labeled(0)],
    })
}

fn resolve_point(id: ScenarioId, action: &ActionDescriptor, spec: &PointSpec) -> Result<Point> {
    match (spec, &action.kind) {
        (PointSpec::Coords(c), ActionKind::LatticeTranslation) => Ok(Point::lattice(c)),
        (PointSpec::Composite { copy, coord }, ActionKind::ProductLine { .. }) => {
            Ok(Point::composite(*copy, *coord))
        }
        (PointSpec::Name(name), ActionKind::PermutationNatural | ActionKind::TrivialOnLabels { .. }) => {
            action
                .labels
                .iter()
                .position(|l| l == name)
                .map(Point::Labeled)
                .ok_or_else(|| Error::usage(format!("unknown label {name}")))
        }
        (PointSpec::Name(word), ActionKind::FreeOnItself) => {
            let mut letters = Vec::new();
            for ch in word.chars() {
                if ch == 'e' && word.len() == 1 {
                    break;
                }
                let lower = ch.to_ascii_lowercase();
                if !lower.is_ascii_lowercase() {
                    return Err(Error::usage(format!("bad word character {ch}")));
                }
                letters.push(Letter {
                    gen: (lower as u8 - b'a') as usize,
                    inverse: ch.is_ascii_uppercase(),
                });
            }
            Ok(Point::Word(GroupElement::word(&letters)))
        }
        _ => Err(Error::usage(format!(
            "point spec {spec:?} does not fit scenario {}",
            id.name()
        ))),
    }
}

/// The verification window: a deterministic base region saturated by the
/// translates of F that meet it, sorted canonically.
fn build_window(
    id: ScenarioId,
    action: &ActionDescriptor,
    fset: &[Point],
    radius: u32,
) -> Result<(Vec<Point>, bool)> {
    let r = i64::from(radius);
    let mut region: Vec<Point> = Vec::new();
    let mut whole = false;
    match id {
        ScenarioId::ZLine | ScenarioId::TwoZOnZ => {
            for x in -r..=r {
                region.push(Point::lattice(&[x]));
            }
        }
        ScenarioId::Z2OnItself => {
            for x in -r..=r {
                for y in -r..=r {
                    if x.abs() + y.abs() <= r {
                        region.push(Point::lattice(&[x, y]));
                    }
                }
            }
        }
        ScenarioId::TwoLines => {
            for copy in 0..2u64 {
                for n in -r..=r {
                    region.push(Point::composite(copy, n));
                }
            }
        }
        ScenarioId::FreeGroupCayley => {
            // Word balls grow exponentially; the ball of radius + 1 is the
            // window itself, without translate saturation on top.
            let mut pts: Vec<Point> = action
                .group
                .word_ball(radius + 1, 1_000_000)?
                .into_iter()
                .map(Point::Word)
                .collect();
            pts.sort();
            return Ok((pts, false));
        }
        ScenarioId::C3Finite => {
            region = (0..3).map(Point::Labeled).collect();
            whole = true;
        }
        ScenarioId::FiniteMetricTable => {
            region = (0..action.labels.len()).map(Point::Labeled).collect();
            whole = true;
        }
        ScenarioId::TrivialZ => {
            region = vec![Point::Labeled(0)];
            whole = true;
        }
    }
    if whole {
        return Ok((region, true));
    }
    let mut out: BTreeSet<Point> = region.iter().cloned().collect();
    for x in &region {
        let t = action.transporter(fset, std::slice::from_ref(x))?;
        for g in &t.exact_set()?.elements {
            for f in fset {
                out.insert(action.apply(g, f)?);
            }
        }
    }
    Ok((out.into_iter().collect(), false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_window_is_saturated_to_block_boundaries() {
        let cfg = ScenarioConfig::for_scenario("2z-on-z");
        let s = Scenario::from_config(&cfg).unwrap();
        let want: Vec<Point> = (-4..=5).map(|x| Point::lattice(&[x])).collect();
        assert_eq!(s.window, want);
    }

    #[test]
    fn line_window_is_saturated_symmetrically() {
        let cfg = ScenarioConfig::for_scenario("z-line");
        let s = Scenario::from_config(&cfg).unwrap();
        let want: Vec<Point> = (-6..=6).map(|x| Point::lattice(&[x])).collect();
        assert_eq!(s.window, want);
    }

    #[test]
    fn unknown_scenario_is_usage_error() {
        let cfg = ScenarioConfig::for_scenario("mystery");
        match Scenario::from_config(&cfg) {
            Err(Error::Usage(msg)) => assert!(msg.contains("built-ins")),
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_config_fields_rejected() {
        let r = ScenarioConfig::from_json(r#"{"scenario": "z-line", "surprise": 1}"#);
        assert!(r.is_err());
    }

    #[test]
    fn fundamental_set_override_parses() {
        let cfg = ScenarioConfig::from_json(
            r#"{"scenario": "c3-finite", "fundamental_set": ["a", "b", "c"]}"#,
        )
        .unwrap();
        let s = Scenario::from_config(&cfg).unwrap();
        assert_eq!(
            s.fset_points,
            vec![Point::Labeled(0), Point::Labeled(1), Point::Labeled(2)]
        );
    }

    #[test]
    fn word_base_rejected_off_free_scenarios() {
        let mut cfg = ScenarioConfig::for_scenario("z-line");
        cfg.base_metric = Some(BaseMetricSpec::Named("word-length".into()));
        assert!(Scenario::from_config(&cfg).is_err());
    }

    #[test]
    fn free_scenario_parses_word_points() {
        let cfg = ScenarioConfig::from_json(
            r#"{"scenario": "free-group-cayley", "fundamental_set": ["e", "a", "A", "b", "B"]}"#,
        )
        .unwrap();
        let s = Scenario::from_config(&cfg).unwrap();
        assert_eq!(s.fset_points.len(), 5);
        assert_eq!(s.fset_points[0], Point::Word(GroupElement::word(&[])));
    }
}
