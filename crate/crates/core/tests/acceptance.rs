//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use linforest::bench;
use linforest::bounded::{choose_k, solve_bounded};
use linforest::config::Configuration;
use linforest::extend::extend;
use linforest::gen::{gen_planar, gen_planar_dense};
use linforest::highdeg::solve_highdegree;
use linforest::oracle::brute_force_la;
use linforest::verify::verify;
use linforest::{solve, solve_with, Color, Edge, EngineChoice, Graph, LinearColoring, SolveError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "bounded engine on degree 9 and 10",
            bounded_degree_nine_and_ten,
        ),
        ("high-degree engine on degree 11 and up", high_degree_graphs),
        ("agreement with the exact oracle", oracle_equivalence),
        ("n log n scaling", scaling),
        ("no stuck reductions on planar inputs", never_stuck),
        ("extension fixtures", extension_fixtures),
        (
            "path structure against breadth-first search",
            path_structure_audit,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!(
            "{what} took {:.1}s, limit {:.0}s",
            t.as_secs_f64(),
            limit.as_secs_f64()
        ));
    }
    Ok(())
}

fn bounded_degree_nine_and_ten() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut max_used = 0;
    let mut total_edges = 0;
    let mut seed = 0;
    for i in 0..200 {
        let delta = 9 + i % 2;
        let n = if i % 20 == 0 {
            10_000
        } else {
            rng.gen_range(30..=10_000)
        };
        let g = loop {
            seed += 1;
            let g = gen_planar(n, delta, seed).map_err(|e| e.to_string())?;
            if g.max_degree() == delta {
                break g;
            }
        };
        let s = solve_bounded(&g, choose_k(delta)).map_err(|e| format!("graph {i}: {e}"))?;
        let r = verify(&g, &s.coloring);
        if !r.valid || r.colors_used > 5 {
            return Err(format!(
                "graph {i}: valid={} colors={}",
                r.valid, r.colors_used
            ));
        }
        max_used = max_used.max(r.colors_used);
        total_edges += g.edge_count();
    }
    within(start, Duration::from_secs(30), "200 graphs")?;
    Ok(format!(
        "200 graphs, {total_edges} edges, at most {max_used} colors"
    ))
}

fn high_degree_graphs() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut total_edges = 0;
    let mut deltas = BTreeSet::new();
    for i in 0..200u64 {
        let target = rng.gen_range(11..=40);
        let n = if i % 25 == 0 {
            100_000
        } else {
            rng.gen_range(100..=20_000)
        };
        let g = if i % 2 == 0 {
            gen_planar(n, target, 1000 + i)
        } else {
            gen_planar_dense(n, target, 1000 + i)
        }
        .map_err(|e| e.to_string())?;
        let delta = g.max_degree();
        if delta < 11 {
            return Err(format!(
                "graph {i}: generator produced maximum degree {delta}"
            ));
        }
        deltas.insert(delta);
        let k = delta.div_ceil(2) as u32;
        let s = solve_highdegree(&g, k).map_err(|e| format!("graph {i}: {e}"))?;
        let r = verify(&g, &s.coloring);
        if !r.valid || r.colors_used > k as usize {
            return Err(format!(
                "graph {i}: valid={} colors={} k={k}",
                r.valid, r.colors_used
            ));
        }
        total_edges += g.edge_count();
    }
    within(start, Duration::from_secs(120), "200 graphs")?;
    Ok(format!(
        "200 graphs, {total_edges} edges, maximum degree {}..={}",
        deltas.first().unwrap(),
        deltas.last().unwrap()
    ))
}

fn connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0u32]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if !std::mem::replace(&mut seen[y as usize], true) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn small_graph(pairs: &[(u32, u32)]) -> Graph {
    let n = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap() as usize + 1;
    Graph::from_edges(n, pairs.iter().copied()).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let check = |g: &Graph, what: &str| -> Result<u32, String> {
        let la = brute_force_la(g).map_err(|e| e.to_string())?;
        let s = solve(g).map_err(|e| format!("{what}: {e}"))?;
        let r = verify(g, &s.coloring);
        let used = r.colors_used as u32;
        if !r.valid || used < la || used > la.max(5) {
            return Err(format!("{what}: la={la} used={used} valid={}", r.valid));
        }
        Ok(la)
    };
    let c3 = small_graph(&[(0, 1), (1, 2), (0, 2)]);
    let k4 = small_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let mut oct = Vec::new();
    for a in 0..6u32 {
        for b in a + 1..6 {
            if b != a + 3 {
                oct.push((a, b));
            }
        }
    }
    let oct = small_graph(&oct);
    for (g, want, name) in [(&c3, 2, "C3"), (&k4, 2, "K4"), (&oct, 3, "octahedron")] {
        let la = check(g, name)?;
        if la != want {
            return Err(format!("{name}: exact value {la}, expected {want}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = BTreeSet::new();
    let mut by_la: BTreeMap<u32, usize> = BTreeMap::new();
    for i in 0..4000u64 {
        let n = rng.gen_range(3..=9);
        let mut g = gen_planar(n, rng.gen_range(2..=8), i).map_err(|e| e.to_string())?;
        let limit = rng.gen_range(n - 1..=14);
        let mut edges: Vec<Edge> = g.edges().collect();
        while g.edge_count() > limit && !edges.is_empty() {
            let e = edges.swap_remove(rng.gen_range(0..edges.len()));
            g.remove_edge(e.u(), e.v()).unwrap();
            if !connected(&g) {
                g.add_edge(e.u(), e.v()).unwrap();
            }
        }
        if !connected(&g) || g.edge_count() > 14 {
            continue;
        }
        if !seen.insert(format!("{g:?}")) {
            continue;
        }
        let la = check(&g, &format!("sample {i}"))?;
        *by_la.entry(la).or_default() += 1;
    }
    Ok(format!(
        "anchors C3=2 K4=2 octahedron=3; {} distinct connected planar graphs, exact values {by_la:?}",
        seen.len()
    ))
}

fn scaling() -> Outcome {
    let mut rows = Vec::new();
    for p in 14..=20 {
        let n = 1usize << p;
        let repeats = if p <= 18 { 3 } else { 2 };
        let mut best: Option<bench::BenchRow> = None;
        for _ in 0..repeats {
            let row = bench::run(&[n], 7, 10)
                .map_err(|e| e.to_string())?
                .remove(0);
            if !row.verified {
                return Err(format!("n={n}: coloring did not verify"));
            }
            if best.as_ref().is_none_or(|b| row.seconds < b.seconds) {
                best = Some(row);
            }
        }
        rows.push(best.unwrap());
    }
    let ratios: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0, f64::max);
    let last = rows.last().unwrap();
    let table: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "2^{}:{:.2}s/{:.0}",
                r.n.trailing_zeros(),
                r.seconds,
                r.ratio
            )
        })
        .collect();
    let detail = format!("spread {:.2}x, {}", hi / lo, table.join(" "));
    if hi / lo > 2.5 {
        return Err(format!("ratio {detail}"));
    }
    if last.seconds > 60.0 {
        return Err(format!("n={} took {:.1}s; {detail}", last.n, last.seconds));
    }
    Ok(detail)
}

fn stuck(e: &SolveError) -> bool {
    matches!(
        e,
        SolveError::NoConfigurationFound { .. } | SolveError::QueueExhausted { .. }
    )
}

fn never_stuck() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut runs = BTreeMap::from([("bounded", 0usize), ("high-degree", 0usize)]);
    let mut stuck_count = 0;
    let mut other = Vec::new();
    let instances = 10_000u64;
    for i in 0..instances {
        let n = rng.gen_range(5..=160);
        let target = rng.gen_range(3..=24);
        let g = match i % 3 {
            0 => gen_planar(n, target, i),
            _ => gen_planar_dense(n, target.max(2), i),
        }
        .map_err(|e| e.to_string())?;
        let delta = g.max_degree();
        let mut record = |res: Result<linforest::Solution, SolveError>, engine: &'static str| {
            *runs.get_mut(engine).unwrap() += 1;
            match res {
                Ok(s) if verify(&g, &s.coloring).valid => {}
                Ok(_) => other.push(format!("instance {i} ({engine}): invalid coloring")),
                Err(e) if stuck(&e) => stuck_count += 1,
                Err(e) => other.push(format!("instance {i} ({engine}): {e}")),
            }
        };
        if delta <= 10 {
            record(solve_bounded(&g, choose_k(delta)), "bounded");
        }
        let k = (delta.div_ceil(2) as u32).max(6);
        record(solve_highdegree(&g, k), "high-degree");
    }
    if stuck_count > 0 || !other.is_empty() {
        return Err(format!(
            "{stuck_count} stuck runs; other failures: {:?}",
            &other[..other.len().min(5)]
        ));
    }
    let mut k7 = Graph::new(7);
    for a in 0..7 {
        for b in a + 1..7 {
            k7.add_edge(a, b).unwrap();
        }
    }
    match solve_with(&k7, EngineChoice::Bounded, Some(3)) {
        Err(e @ SolveError::NoConfigurationFound { .. }) => {
            let text = e.to_string();
            if !text.contains("degree histogram") {
                return Err(format!("K7 diagnostic lacks a dump: {text}"));
            }
        }
        other => {
            return Err(format!(
                "K7 with k=3 did not get stuck: {:?}",
                other.map(|s| s.engine)
            ))
        }
    }
    Ok(format!(
        "{instances} instances, runs {runs:?}, 0 stuck; K7 with k=3 reports the stuck graph"
    ))
}

/// A configuration with a coloring of its reduced graph, the branch the
/// extension should take, and the colors it should leave on the drawn edges.
///
/// Vertices are named by single characters; `edges` lists the reduced graph
/// as `xy:c` items where `c` is a color letter (`a` = 1, `b` = 2, ...).
struct Fixture {
    name: &'static str,
    names: &'static str,
    k: u32,
    cfg: fn(&dyn Fn(char) -> u32) -> Configuration,
    before: &'static str,
    label: &'static str,
    after: &'static str,
}

fn letter(c: char) -> Color {
    Color::new(c as u32 - 'a' as u32 + 1)
}

fn parse_items(names: &str, items: &str) -> Vec<(u32, u32, Color)> {
    let id = |c: char| {
        names
            .find(c)
            .unwrap_or_else(|| panic!("unknown vertex {c}")) as u32
    };
    items
        .split_whitespace()
        .map(|item| {
            let ch: Vec<char> = item.chars().collect();
            assert!(ch.len() == 4 && ch[2] == ':', "bad item {item}");
            (id(ch[0]), id(ch[1]), letter(ch[3]))
        })
        .collect()
}

fn run_fixture(f: &Fixture) -> Result<(), String> {
    let names = f.names;
    let id = |c: char| names.find(c).unwrap() as u32;
    let cfg = (f.cfg)(&id);
    let n = names.len();
    let before = parse_items(names, f.before);
    let mut reduced = Graph::new(n);
    let mut col = LinearColoring::new(n, f.k);
    for &(a, b, c) in &before {
        reduced.add_edge(a, b).map_err(|e| e.to_string())?;
        col.assign(Edge::new(a, b), c)
            .map_err(|e| format!("before-state is not linear: {e}"))?;
    }
    let mut g = reduced.clone();
    for e in cfg.added_edges() {
        g.remove_edge(e.u(), e.v()).map_err(|e| e.to_string())?;
    }
    for e in cfg.removed_edges() {
        g.add_edge(e.u(), e.v()).map_err(|e| e.to_string())?;
    }
    if !cfg.holds_in(&g, f.k) || g.max_degree() > 2 * f.k as usize {
        return Err(format!("{cfg} is not a configuration of the fixture graph"));
    }
    let label = extend(&mut col, &cfg).map_err(|e| e.to_string())?;
    if label != f.label {
        return Err(format!("took branch {label}, expected {}", f.label));
    }
    let report = verify(&g, &col);
    if !report.valid {
        return Err(format!("result does not verify: {:?}", report.violations));
    }
    for (a, b, want) in parse_items(names, f.after) {
        let got = col.color_of(a, b);
        if got != Some(want) {
            let (na, nb) = (
                names.as_bytes()[a as usize] as char,
                names.as_bytes()[b as usize] as char,
            );
            return Err(format!("edge {na}{nb} has {got:?}, expected {want:?}"));
        }
    }
    Ok(())
}

macro_rules! cfg {
    ($kind:ident { $($field:ident : $c:literal),* }) => {
        |id: &dyn Fn(char) -> u32| Configuration::$kind { $($field: id($c)),* }
    };
}

fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "light edge takes the smallest shared color",
            names: "uvpqrsto",
            k: 5,
            cfg: cfg!(LightEdge { u: 'u', v: 'v' }),
            before: "up:a uq:b vr:a vs:b vt:c vo:c",
            label: "light-edge",
            after: "uv:d",
        },
        Fixture {
            name: "two-vertex subdivides the shortcut",
            names: "vuz",
            k: 5,
            cfg: cfg!(TwoVertexNonadjacent {
                v: 'v',
                u: 'u',
                z: 'z'
            }),
            before: "uz:a",
            label: "two-vertex",
            after: "uv:a vz:a",
        },
        Fixture {
            name: "shared pair, no path: direct",
            names: "vwuz",
            k: 5,
            cfg: cfg!(ConfigA {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z'
            }),
            before: "vw:b wu:c uv:d vz:a",
            label: "config-a/direct",
            after: "uz:a vz:a vw:b wu:c",
        },
        Fixture {
            name: "shared pair, shift along the a-path",
            names: "vwuzp",
            k: 5,
            cfg: cfg!(ConfigA {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z'
            }),
            before: "vw:b wu:c uv:d vz:a up:a pv:a",
            label: "config-a/shift",
            after: "vz:a uz:c vw:b uw:a",
        },
        Fixture {
            name: "shared pair, a-colored triangle side",
            names: "vwuz",
            k: 5,
            cfg: cfg!(ConfigA {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z'
            }),
            before: "vw:a wu:a uv:b vz:a",
            label: "config-a/turn-triangle",
            after: "vw:b uw:a uv:a uz:b vz:a",
        },
        Fixture {
            name: "one shared neighbor, no path: direct",
            names: "vutwzpq",
            k: 3,
            cfg: cfg!(ConfigB {
                u: 'u',
                v: 'v',
                t: 't',
                w: 'w',
                z: 'z'
            }),
            before: "uv:b ut:b uw:c up:a uq:c tz:a wv:a",
            label: "config-b/direct",
            after: "uz:a",
        },
        Fixture {
            name: "one shared neighbor, uw on the path",
            names: "vutwzpqr",
            k: 3,
            cfg: cfg!(ConfigB {
                u: 'u',
                v: 'v',
                t: 't',
                w: 'w',
                z: 'z'
            }),
            before: "vw:a wu:a vu:b zt:a vp:a pt:a ut:c uq:b ur:c",
            label: "config-b/through-w",
            after: "vw:b wu:a vu:a uz:b zt:a",
        },
        Fixture {
            name: "one shared neighbor, uw off the path",
            names: "vutwzqr",
            k: 3,
            cfg: cfg!(ConfigB {
                u: 'u',
                v: 'v',
                t: 't',
                w: 'w',
                z: 'z'
            }),
            before: "ut:a zt:a uw:b uv:c uq:b ur:c vw:c",
            label: "config-b/shift",
            after: "wu:a uz:b zt:a",
        },
        Fixture {
            name: "two pairs with a spare color at z",
            names: "vuwzpq",
            k: 4,
            cfg: cfg!(TwoPairs {
                v: 'v',
                u: 'u',
                w: 'w',
                z: 'z'
            }),
            before: "uz:a zw:b uw:c zp:a zq:b",
            label: "two-pairs/spare-color",
            after: "vz:d vu:c vw:c uz:a zw:b",
        },
        Fixture {
            name: "two pairs without a uz path",
            names: "vuwzpq",
            k: 3,
            cfg: cfg!(TwoPairs {
                v: 'v',
                u: 'u',
                w: 'w',
                z: 'z'
            }),
            before: "uz:a zw:b uw:c zp:a zq:b",
            label: "two-pairs/via-u",
            after: "uz:c uv:a vz:a vw:c zw:b",
        },
        Fixture {
            name: "two pairs mirrored through w",
            names: "vuwzpqr",
            k: 3,
            cfg: cfg!(TwoPairs {
                v: 'v',
                u: 'u',
                w: 'w',
                z: 'z'
            }),
            before: "uz:a zw:b uw:c zp:a zq:b zr:c ur:c",
            label: "two-pairs/via-w",
            after: "wz:c wv:b vz:b vu:c uz:a",
        },
        Fixture {
            name: "chorded four-cycle, direct",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "vz:b vw:c vo:d wu:b wz:c",
            label: "chorded-c4/direct",
            after: "uz:a",
        },
        Fixture {
            name: "chorded four-cycle, a-colored chord",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:a zv:b vw:c vo:d",
            label: "chorded-c4/chord-a",
            after: "uz:b wu:a wz:a zv:a vw:c",
        },
        Fixture {
            name: "chorded four-cycle, four distinct colors",
            names: "vzuwop",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:b zv:c vw:d wp:a pz:a vo:b",
            label: "chorded-c4/pass-vz",
            after: "uz:c wu:a wz:b zv:a vw:d",
        },
        Fixture {
            name: "chorded four-cycle, a-colored vw",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:b zv:c vw:a vo:a oz:a",
            label: "chorded-c4/vw-a",
            after: "uz:b wu:a wz:a zv:c vw:b vo:a",
        },
        Fixture {
            name: "chorded four-cycle, a-colored vz by renaming",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:b zv:a vw:c vo:a ow:a",
            label: "chorded-c4/vz-a",
            after: "uz:a wz:a vz:b uw:b",
        },
        Fixture {
            name: "chorded four-cycle, both v-edges a",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:b zv:a vw:a vo:c",
            label: "chorded-c4/both-a-w",
            after: "uz:b wu:a wz:a zv:a vw:b",
        },
        Fixture {
            name: "chorded four-cycle, both v-edges a, mirrored",
            names: "vzuwo",
            k: 5,
            cfg: cfg!(ChordedC4 {
                v: 'v',
                z: 'z',
                u: 'u',
                w: 'w'
            }),
            before: "wu:a wz:b zv:a vw:a vo:b ow:b",
            label: "chorded-c4/both-a-z",
            after: "uz:a wz:a vz:b uw:b vw:a",
        },
        Fixture {
            name: "2-vertex with a 3-neighbor, direct",
            names: "uvwzxy",
            k: 5,
            cfg: cfg!(TwoWithThree {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:b vw:c vz:d vx:e vy:b zx:a zy:c xy:d",
            label: "two-with-three/direct",
            after: "uv:a",
        },
        Fixture {
            name: "2-vertex with a 3-neighbor, vz not a",
            names: "uvwzxyp",
            k: 3,
            cfg: cfg!(TwoWithThree {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a vw:a vz:b vx:c vy:b vp:c zx:c zy:a xy:a",
            label: "two-with-three/pass-vz",
            after: "uv:b vz:a",
        },
        Fixture {
            name: "2-vertex with a 3-neighbor, rotate the far triangle",
            names: "uvwzxyp",
            k: 3,
            cfg: cfg!(TwoWithThree {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a vw:a vz:b vx:c vy:b vp:c zx:a zy:a xy:c",
            label: "two-with-three/pass-vz-rotated",
            after: "uv:b vz:a zx:c zy:c xy:a",
        },
        Fixture {
            name: "2-vertex with a 3-neighbor, vw differs from zy",
            names: "uvwzxypq",
            k: 3,
            cfg: cfg!(TwoWithThree {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a vz:a vx:b vw:c vy:c vp:b zx:a zy:b xq:a qw:a xy:c",
            label: "two-with-three/swap-vw",
            after: "uw:c vz:c vw:a uv:a",
        },
        Fixture {
            name: "2-vertex with a 3-neighbor, final fan",
            names: "uvwzxypqrs",
            k: 4,
            cfg: cfg!(TwoWithThree {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a vz:a vx:b vw:b vy:d vp:d vr:c vs:c zx:a zy:b xq:a qw:a xy:b",
            label: "two-with-three/fan",
            after: "vx:a vy:b xz:b uv:d yz:d",
        },
        Fixture {
            name: "small vertex with 3-neighbors, unused color",
            names: "vx12yqr",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "x1:b x2:a 12:c vy:b yq:a yr:c",
            label: "cubic-small/unused",
            after: "vx:a",
        },
        Fixture {
            name: "small vertex with 3-neighbors, chord x1x2",
            names: "vx12yqr",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "x1:a x2:a 12:b vy:c yq:a yr:b",
            label: "cubic-small/via-chord",
            after: "x1:b x2:b vx:a 12:a",
        },
        Fixture {
            name: "small vertex with 3-neighbors, x1 next to v",
            names: "vx12yqr",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "x1:a x2:a 1v:b vy:c yq:a yr:b",
            label: "cubic-small/via-x1",
            after: "x1:b vx:b 1v:a",
        },
        Fixture {
            name: "small vertex with 3-neighbors, x2 next to v",
            names: "vx12yqr",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "x1:a x2:a 2v:b vy:c yq:a yr:b",
            label: "cubic-small/via-x2",
            after: "x2:b vx:b 2v:a",
        },
        Fixture {
            name: "small vertex with 3-neighbors, no free path",
            names: "vx12yprst",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "vy:c vp:c vs:a vr:b x1:a x2:b 2r:b 12:c ys:a yt:b",
            label: "cubic-small/no-path",
            after: "vx:a",
        },
        Fixture {
            name: "small vertex with 3-neighbors, borrow vy",
            names: "vx12ypqrst",
            k: 3,
            cfg: cfg!(CubicSmall {
                v: 'v',
                x: 'x',
                x1: '1',
                x2: '2',
                y: 'y'
            }),
            before: "vy:c vp:c vq:a vr:b x1:a x2:b 1q:a 2r:b 12:c ys:a yt:b",
            label: "cubic-small/borrow-vy",
            after: "vx:c vy:a",
        },
        Fixture {
            name: "two 3-vertices, direct",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:c uz:d wz:b vz:b vw:c xz:a xw:d xy:b yw:a yz:c",
            label: "two-cubic/direct",
            after: "uv:a",
        },
        Fixture {
            name: "two 3-vertices, both v-edges a",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:c uz:d wz:b vz:a vw:a xz:c xw:d yw:b yz:a xy:c",
            label: "two-cubic/both-a",
            after: "vz:b vw:b zw:a uv:a",
        },
        Fixture {
            name: "two 3-vertices, no a-path from u",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:c uz:d wz:d vz:b vw:a xz:a xw:c xy:b yw:b yz:c",
            label: "two-cubic/no-path",
            after: "uv:a",
        },
        Fixture {
            name: "two 3-vertices, swap at w",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a uz:d wz:d vz:b vw:a wx:c xz:a xy:b yw:b yz:c",
            label: "two-cubic/swap-at-w",
            after: "uv:a vw:c vz:b wx:a",
        },
        Fixture {
            name: "two 3-vertices, swap two pairs",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a uz:c wz:b vz:b vw:a wx:b xz:c xy:d yw:c yz:d",
            label: "two-cubic/double-swap",
            after: "uv:a vw:b vz:c wx:a xz:b",
        },
        Fixture {
            name: "two 3-vertices, rotate around x",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a uz:d wz:d vz:b vw:a wx:c xz:a xy:a yz:c yw:b",
            label: "two-cubic/rotate-at-x",
            after: "uv:a vw:c vz:b wx:a xy:c xz:c yz:a",
        },
        Fixture {
            name: "two 3-vertices, a-path avoids x",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "uw:a uz:d wz:c vz:b vw:a wx:b xz:a xy:a yz:b yw:b",
            label: "two-cubic/double-swap-off-x",
            after: "uv:a vw:b vz:a wx:a xy:a xz:b yz:b",
        },
        Fixture {
            name: "two 3-vertices, a-path reaches z first",
            names: "uvwzxyp",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wz:a xz:a xy:a yp:a pu:a vz:b yz:b yw:b wx:b uz:c uw:d",
            label: "two-cubic/via-uz",
            after: "uv:c vw:a vz:b wx:b xy:a xz:c yz:b uz:a",
        },
        Fixture {
            name: "two 3-vertices, a-path reaches y first",
            names: "uvwzxyq",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wy:a xy:a xz:a uz:a uw:c vz:b zy:b wx:b wq:b qy:b wz:d",
            label: "two-cubic/via-uw",
            after: "uv:c vw:b vz:a wx:c xy:a xz:b yz:b uw:a",
        },
        Fixture {
            name: "two 3-vertices, uw shares the b color",
            names: "uvwzxyq",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wy:a xy:a xz:a uz:a uw:b uq:b qy:b vz:b zy:b wx:b wz:c",
            label: "two-cubic/via-uw-wz",
            after: "uv:b vw:c vz:a wx:b xy:a xz:c yz:b uw:a wz:b",
        },
        Fixture {
            name: "two 3-vertices, trade through uw",
            names: "uvwzxyp",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wx:a xy:a yp:a pu:a vz:b xz:b uw:c uz:c wz:d yw:b yz:c",
            label: "two-cubic/trade-uw",
            after: "uv:c vw:a vz:b xz:b wx:c xy:a uw:a",
        },
        Fixture {
            name: "two 3-vertices, trade uw and wx",
            names: "uvwzxy",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wx:a xz:a uz:a vz:b wz:b xy:b yw:b uw:d yz:c",
            label: "two-cubic/trade-uw-wx",
            after: "uv:d vw:a vz:b wz:b xz:a wx:d xy:b uw:a",
        },
        Fixture {
            name: "two 3-vertices, eight recolored edges",
            names: "uvwzxyq",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wx:a xz:a uz:a vz:b wz:b xy:b uw:b uq:b qy:b wy:c yz:d",
            label: "two-cubic/eight-edge",
            after: "uv:a vw:c vz:b wz:a xz:a wx:b xy:c uw:a uz:b wy:b",
        },
        Fixture {
            name: "two 3-vertices, five recolored edges",
            names: "uvwzxypq",
            k: 4,
            cfg: cfg!(TwoCubic {
                u: 'u',
                v: 'v',
                w: 'w',
                z: 'z',
                x: 'x',
                y: 'y'
            }),
            before: "vw:a wx:a xz:a zp:a pu:a vz:b wz:b xy:b uw:b uq:b qy:b uz:c wy:c yz:d",
            label: "two-cubic/five-edge",
            after: "uv:c vw:b vz:a wz:b xz:c wx:a xy:b uw:a uz:b",
        },
    ]
}

fn extension_fixtures() -> Outcome {
    let all = fixtures();
    let mut failures = Vec::new();
    let mut kinds = BTreeSet::new();
    for f in &all {
        let id = |c: char| f.names.find(c).unwrap_or(0) as u32;
        kinds.insert((f.cfg)(&id).kind());
        if let Err(e) = run_fixture(f) {
            failures.push(format!("{}: {e}", f.name));
        }
    }
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    if kinds.len() != 9 {
        return Err(format!("only {} of 9 extensions covered", kinds.len()));
    }
    Ok(format!("{} fixtures over all 9 extensions", all.len()))
}

/// Same-path answers by breadth-first search over one color class.
fn bfs_same_path(colors: &BTreeMap<Edge, Color>, c: Color, x: u32, y: u32) -> bool {
    if x == y {
        return true;
    }
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (e, &col) in colors {
        if col == c {
            adj.entry(e.u()).or_default().push(e.v());
            adj.entry(e.v()).or_default().push(e.u());
        }
    }
    let mut seen = BTreeSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        for &b in adj.get(&a).map(|v| v.as_slice()).unwrap_or(&[]) {
            if b == y {
                return true;
            }
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    false
}

fn path_structure_audit() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let total = 1_000_000usize;
    let mut ops = 0;
    let mut counts = [0usize; 3];
    let mut round = 0u64;
    while ops < total {
        round += 1;
        let n = rng.gen_range(4..=24);
        let k = rng.gen_range(1..=3);
        let g = gen_planar(n, rng.gen_range(3..=8), round).map_err(|e| e.to_string())?;
        let edges: Vec<Edge> = g.edges().collect();
        let mut col = LinearColoring::new(n, k);
        let mut mirror: BTreeMap<Edge, Color> = BTreeMap::new();
        for _ in 0..2_000 {
            if ops == total {
                break;
            }
            ops += 1;
            let c = Color::new(rng.gen_range(1..=k));
            match rng.gen_range(0..3) {
                0 => {
                    counts[0] += 1;
                    let e = edges[rng.gen_range(0..edges.len())];
                    let degree_ok = [e.u(), e.v()].iter().all(|&x| {
                        mirror
                            .iter()
                            .filter(|(f, &fc)| fc == c && (f.u() == x || f.v() == x))
                            .count()
                            < 2
                    });
                    let expect = !mirror.contains_key(&e)
                        && degree_ok
                        && !bfs_same_path(&mirror, c, e.u(), e.v());
                    let got = col.assign(e, c).is_ok();
                    if got != expect {
                        return Err(format!(
                            "round {round}: assign {e} color {c} gave {got}, oracle {expect}"
                        ));
                    }
                    if got {
                        mirror.insert(e, c);
                    }
                }
                1 => {
                    counts[1] += 1;
                    let e = edges[rng.gen_range(0..edges.len())];
                    let got = col.unassign(e).ok();
                    let expect = mirror.remove(&e);
                    if got != expect {
                        return Err(format!(
                            "round {round}: unassign {e} gave {got:?}, oracle {expect:?}"
                        ));
                    }
                }
                _ => {
                    counts[2] += 1;
                    let x = rng.gen_range(0..n as u32);
                    let y = rng.gen_range(0..n as u32);
                    let got = col.same_path(c, x, y);
                    let expect = bfs_same_path(&mirror, c, x, y);
                    if got != expect {
                        return Err(format!(
                            "round {round}: same_path({c}, {x}, {y}) gave {got}, oracle {expect}"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{ops} operations (assign {}, unassign {}, same_path {}), 0 disagreements",
        counts[0], counts[1], counts[2]
    ))
}
