//! Acceptance suite. Runs every criterion in order, prints one line each,
//! and exits non-zero if any fails or overruns its time budget.

use std::collections::HashMap;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dimdraw::context::{
    order_closure, parse_csv, parse_cxt, parse_poset_edges, poset_to_context, write_cxt,
    FormalContext,
};
use dimdraw::dimension::{
    brute_force_dimension, brute_force_order_dimension, complement, ferrers_cover_with, is_ferrers,
    order_dimension, realizer_from_cover, verify_realizer, CellRelation, CoverOutcome,
    LinearExtension, Realizer,
};
use dimdraw::embedding::embed;
use dimdraw::lattice::{concepts, ConceptLattice};
use dimdraw::projection::{
    best_assignment, default_frame, diagonal, find_incidences, repair_incidences, DEFAULT_EPS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIFE: &str = include_str!("../../core/fixtures/life_in_water.cxt");
const LIFE_REALIZER: &str = include_str!("../../core/fixtures/life_in_water_realizer.txt");
const CONTRANOMINAL_4: &str = include_str!("../../core/fixtures/contranominal4.cxt");
const STANDARD_3: &str = include_str!("../../core/fixtures/standard_example_3.poset");

/// Expected coordinates per concept letter.
///
/// D is listed with the value recomputed from the three extensions; the
/// published list repeats E's triple (15,16,7) for D, which no concept other
/// than E can have in a realizer embedding since coordinates are injective.
const COORDINATES: [(char, [usize; 3]); 19] = [
    ('A', [18, 18, 18]),
    ('B', [16, 7, 17]),
    ('C', [9, 17, 16]),
    ('D', [17, 11, 12]),
    ('E', [15, 16, 7]),
    ('F', [13, 6, 15]),
    ('G', [12, 13, 6]),
    ('H', [6, 5, 14]),
    ('I', [11, 10, 4]),
    ('J', [14, 4, 11]),
    ('K', [8, 9, 10]),
    ('L', [7, 15, 5]),
    ('M', [10, 3, 9]),
    ('N', [5, 12, 3]),
    ('O', [2, 2, 13]),
    ('P', [4, 1, 8]),
    ('Q', [1, 14, 2]),
    ('R', [3, 8, 1]),
    ('S', [0, 0, 0]),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn life() -> FormalContext {
    parse_cxt(LIFE).expect("fixture parses")
}

fn context_from_bits(g: usize, m: usize, bits: u64) -> FormalContext {
    FormalContext::new(
        (0..g).map(|i| format!("g{i}")).collect(),
        (0..m).map(|i| format!("m{i}")).collect(),
        (0..g * m)
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| (i / m, i % m)),
    )
    .unwrap()
}

fn life_concept_count() -> Outcome {
    let n = concepts(&life()).map_err(|e| e.to_string())?.len();
    check(n == 19, || format!("{n} concepts, expected 19"))?;
    Ok("19 concepts".into())
}

fn life_dimension() -> Outcome {
    let ctx = life();
    let dim = order_dimension(&ctx).map_err(|e| e.to_string())?;
    check(dim.d == 3, || format!("d = {}, expected 3", dim.d))?;
    dim.cover.validate(&ctx).map_err(|e| e.to_string())?;
    check(
        matches!(ferrers_cover_with(&ctx, 2, None), CoverOutcome::NoneExists),
        || "a 2-part cover was not refuted".into(),
    )?;
    Ok("d = 3, cover verified, no 2-part cover".into())
}

fn published_realizer(
    ctx: &FormalContext,
    lat: &ConceptLattice,
) -> (HashMap<char, usize>, Realizer) {
    let mut letters = HashMap::new();
    let mut extensions = Vec::new();
    for line in LIFE_REALIZER.lines() {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("concept") => {
                let letter = parts.next().unwrap().chars().next().unwrap();
                let intent: Vec<String> = parts.next().unwrap().chars().map(String::from).collect();
                let idx = (0..lat.len())
                    .find(|&c| {
                        lat.concept(c)
                            .intent
                            .iter()
                            .map(|m| &ctx.attributes()[m])
                            .eq(intent.iter())
                    })
                    .expect("intent is a concept");
                letters.insert(letter, idx);
            }
            Some("extension") => {
                let order = parts.map(|s| letters[&s.chars().next().unwrap()]).collect();
                extensions.push(LinearExtension::from_order(order).unwrap());
            }
            _ => {}
        }
    }
    (letters, Realizer { extensions })
}

fn coordinate_fixture() -> Outcome {
    let ctx = life();
    let lat = concepts(&ctx).map_err(|e| e.to_string())?;
    let (letters, r) = published_realizer(&ctx, &lat);
    check(verify_realizer(&lat, &r), || {
        "fixture is not a realizer".into()
    })?;
    let e = embed(&lat, &r).map_err(|e| e.to_string())?;
    for (letter, want) in COORDINATES {
        let got = e.coords(letters[&letter]);
        check(got == want, || {
            format!("{letter}: got {got:?}, expected {want:?}")
        })?;
    }
    Ok("19 coordinates exact (D = (17,11,12), published duplicate of E treated as erratum)".into())
}

fn contranominal() -> Outcome {
    let fixture = parse_cxt(CONTRANOMINAL_4).map_err(|e| e.to_string())?;
    check(fixture == FormalContext::contranominal(4), || {
        "fixture differs from generator".into()
    })?;
    let mut out = Vec::new();
    for n in 2..=4 {
        let ctx = FormalContext::contranominal(n);
        let start = Instant::now();
        let c = concepts(&ctx).map_err(|e| e.to_string())?.len();
        check(c == 1 << n, || format!("n={n}: {c} concepts"))?;
        let d = order_dimension(&ctx).map_err(|e| e.to_string())?.d;
        check(d == n, || format!("n={n}: d = {d}"))?;
        out.push(format!("n={n} in {:.2?}", start.elapsed()));
    }
    Ok(out.join(", "))
}

fn standard_example() -> Outcome {
    let p = parse_poset_edges(STANDARD_3).map_err(|e| e.to_string())?;
    check(p.elements.len() == 6, || "expected 6 elements".into())?;
    let up = order_closure(p.elements.len(), &p.relation).map_err(|c| format!("cycle {c:?}"))?;
    let d = brute_force_order_dimension(&up, 10).map_err(|e| e.to_string())?;
    check(d == 3, || format!("brute force gives {d}"))?;
    Ok("brute-force dimension 3".into())
}

fn oracle_equivalence() -> Outcome {
    for bits in 0u64..512 {
        let ctx = context_from_bits(3, 3, bits);
        let lat = concepts(&ctx).map_err(|e| e.to_string())?;
        let d = order_dimension(&ctx).map_err(|e| e.to_string())?.d;
        let oracle = brute_force_dimension(&lat).map_err(|e| e.to_string())?;
        check(d == oracle, || {
            format!("incidence {bits:09b}: search {d}, oracle {oracle}")
        })?;
    }
    Ok("512/512 agree".into())
}

fn properties_on(ctx: &FormalContext) -> Result<(), String> {
    let lat = concepts(ctx).map_err(|e| e.to_string())?;
    let dim = order_dimension(ctx).map_err(|e| e.to_string())?;
    let r = realizer_from_cover(ctx, &lat, &dim.cover).map_err(|e| e.to_string())?;
    let e = embed(&lat, &r).map_err(|e| e.to_string())?;
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            let all = r.extensions.iter().all(|l| l.position(x) <= l.position(y));
            check(all == lat.leq(x, y), || {
                format!("realizer intersection differs at ({x},{y})")
            })?;
            check(e.dominated(x, y) == lat.leq(x, y), || {
                format!("dominance differs at ({x},{y})")
            })?;
        }
    }
    let frame = default_frame(e.dim(), 45.0).map_err(|e| e.to_string())?;
    let layout = best_assignment(&e, lat.covers(), &frame, 8).map_err(|e| e.to_string())?;
    check(layout.is_upward(), || "projected layout not upward".into())?;
    let repaired =
        repair_incidences(&layout.normalized(), DEFAULT_EPS).map_err(|e| e.to_string())?;
    check(repaired.is_upward(), || "repaired layout not upward".into())?;
    let tol = DEFAULT_EPS * diagonal(&repaired.points);
    let left = find_incidences(&repaired.points, &repaired.edges, tol);
    check(left.is_empty(), || {
        format!("incidences after repair: {left:?}")
    })?;
    let round = parse_cxt(&write_cxt(ctx)).map_err(|e| e.to_string())?;
    check(&round == ctx, || {
        "cxt round trip changed the context".into()
    })?;
    let csv = parse_csv(&to_csv(ctx)).map_err(|e| e.to_string())?;
    check(&csv == ctx, || "csv round trip changed the context".into())?;
    Ok(())
}

fn to_csv(ctx: &FormalContext) -> String {
    let mut s = String::from("object");
    for a in ctx.attributes() {
        s.push(',');
        s.push_str(a);
    }
    s.push('\n');
    for (g, name) in ctx.objects().iter().enumerate() {
        s.push_str(name);
        for m in 0..ctx.num_attributes() {
            s.push_str(if ctx.incident(g, m) { ",X" } else { "," });
        }
        s.push('\n');
    }
    s
}

fn property_suites() -> Outcome {
    let poset =
        poset_to_context(&parse_poset_edges(STANDARD_3).unwrap()).map_err(|e| e.to_string())?;
    let mut contexts = vec![life(), parse_cxt(CONTRANOMINAL_4).unwrap(), poset];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let g = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=5);
        contexts.push(context_from_bits(g, m, rng.gen()));
    }
    for (i, ctx) in contexts.iter().enumerate() {
        properties_on(ctx).map_err(|e| format!("context #{i}: {e}"))?;
        let cells = CellRelation::incidence(ctx);
        check(
            is_ferrers(&cells) == is_ferrers(&complement(&cells)),
            || format!("context #{i}: Ferrers complement closure fails"),
        )?;
    }
    Ok(format!("{} contexts, 0 violations", contexts.len()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("life.cxt");
    std::fs::write(&input, LIFE).map_err(|e| e.to_string())?;
    for format in ["svg", "tikz", "json"] {
        let a = run_draw(&input, format)?;
        let b = run_draw(&input, format)?;
        check(!a.is_empty() && a == b, || {
            format!("{format} output differs between runs")
        })?;
    }
    Ok("svg, tikz and json byte-identical".into())
}

fn run_draw(input: &Path, format: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dimdraw"))
        .arg("draw")
        .arg(input)
        .args(["--format", format])
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || {
        format!(
            "draw exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "life-in-water concept count",
            Duration::from_secs(1),
            life_concept_count,
        ),
        (
            "life-in-water dimension",
            Duration::from_secs(30),
            life_dimension,
        ),
        (
            "coordinate fixture",
            Duration::from_secs(1),
            coordinate_fixture,
        ),
        (
            "contra-nominal scales",
            Duration::from_secs(300),
            contranominal,
        ),
        (
            "standard example S3",
            Duration::from_secs(1),
            standard_example,
        ),
        (
            "oracle equivalence 3x3",
            Duration::from_secs(600),
            oracle_equivalence,
        ),
        ("property suites", Duration::from_secs(600), property_suites),
        ("determinism", Duration::from_secs(120), determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > *budget => Err(format!("{msg}; took {took:.2?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS {}. {name} ({took:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {}. {name} ({took:.2?}): {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
