use invmetric_core::bridge::BridgeAtlas;
use invmetric_core::koszul::verify_fundamental_set;
use invmetric_core::scenario::{Scenario, ScenarioConfig};
use invmetric_core::stick::StickGraph;
use std::time::Instant;

fn main() {
    eprintln!("start");
    let cfg = ScenarioConfig::for_scenario("free-group-cayley");
    let s = Scenario::from_config(&cfg).unwrap();
    eprintln!("scenario");
    let f = verify_fundamental_set(&s.action, &s.fset_points, &s.window).unwrap();
    eprintln!("fset");
    let stick = StickGraph::new(&s.action, &f, &s.base, cfg.budget)
        .unwrap()
        .with_epsilon(num::BigRational::from_integer(1.into()));
    eprintln!("stick");
    let t = Instant::now();
    let d_stick = stick
        .pseudometric(1 << 20)
        .unwrap()
        .cached_on_window(&s.window, cfg.budget)
        .unwrap();
    eprintln!("stick cache: {:?}", t.elapsed());
    // mimic pipeline bridge_cap
    let mut diam = num::BigRational::from_integer(0.into());
    for (i, x) in s.window.iter().enumerate() {
        for y in s.window.iter().skip(i + 1) {
            if let invmetric_core::ExtReal::Finite(q) = d_stick.eval(x, y) {
                if q > diam { diam = q; }
            }
        }
    }
    eprintln!("diam = {diam}");
    let cap = 8 + 2 * 1 + 6 + 2;
    let t = Instant::now();
    let atlas = BridgeAtlas::new(stick, cap, cfg.budget).unwrap();
    eprintln!("atlas: {:?} reps={} exhausted={}", t.elapsed(), atlas.reps.len(), atlas.exhausted);
    let t = Instant::now();
    let d_b = atlas.pseudometric(4 * (cap as u64 + 2)).unwrap();
    let cached = d_b.cached_on_window(&s.window, cfg.budget).unwrap();
    eprintln!("bridge cache: {:?}", t.elapsed());
    let t = Instant::now();
    let assembled = invmetric_core::bridge::assemble_proper_metric(
        &{
            let mut b = s.base.clone();
            b.flags.claims_invariant = true;
            b
        },
        &cached,
        &s.action,
        &s.window,
        &s.fset_points[0],
        &cfg.ball_radii,
        cfg.budget,
    )
    .unwrap();
    eprintln!("assemble: {:?} balls={:?}", t.elapsed(), assembled.discharge.ball_sizes);
}
