//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::VecDeque;
use std::process::ExitCode;
use std::time::Instant;

use optimal1p::embedding::ArcId;
use optimal1p::{
    canonical_form, enumerate, expand_cr, expand_sr, make_xw, mutate_2switch, random_optimal,
    random_optimal_with, recognize_5connected, recognize_with, reconstruct, reduce_step,
    verify_embedding, Algorithm, DynamicGraph, Error, Mix, Options, RecognitionResult,
    WorkOrder,
};
use optimal1p_io::bench;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Tally {
    failed: Vec<u32>,
}

impl Tally {
    fn report(&mut self, id: u32, name: &str, pass: bool, detail: String) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {verdict}  {name}: {detail}");
        if !pass {
            self.failed.push(id);
        }
    }
}

/// Counters shared by criteria 5 and 6, filled by every run below.
#[derive(Default)]
struct RunLog {
    accepting_runs: usize,
    worst_ratio: f64,
    over_bound: usize,
    conservation: u64,
    bank: u64,
    runs: usize,
}

impl RunLog {
    fn note(&mut self, n: usize, r: &RecognitionResult) {
        self.runs += 1;
        self.conservation += r.stats.conservation_violations;
        self.bank += r.stats.bank_violations;
        if r.accepted {
            self.accepting_runs += 1;
            let ratio = r.stats.unsuccessful as f64 / n as f64;
            self.worst_ratio = self.worst_ratio.max(ratio);
            self.over_bound += usize::from(r.stats.unsuccessful > 4 * n as u64);
        }
    }
}

fn run(g: &DynamicGraph, algorithm: Algorithm, log: &mut RunLog) -> RecognitionResult {
    let r = recognize_with(
        g,
        &Options {
            algorithm,
            ..Options::default()
        },
    );
    log.note(g.n(), &r);
    r
}

fn criterion_1(t: &mut Tally) {
    let expected = [(7, 0), (8, 1), (9, 0), (10, 1), (11, 1), (12, 3), (13, 3), (14, 12)];
    let start = Instant::now();
    let mut got = Vec::new();
    let mut ok = true;
    for (n, want) in expected {
        let c = enumerate(n).unwrap();
        ok &= c == want;
        got.push(if c == want {
            format!("n={n}:{c}")
        } else {
            format!("n={n}:{c} (expected {want})")
        });
    }
    t.report(
        1,
        "enumeration counts",
        ok,
        format!("{} in {:.1}s", got.join(" "), start.elapsed().as_secs_f64()),
    );
}

fn criterion_2(t: &mut Tally, log: &mut RunLog) {
    let mut bad = Vec::new();
    for k in 3..=200 {
        let (g, _) = make_xw(k).unwrap();
        let r = run(&g, Algorithm::Linear, log);
        if !r.accepted || r.stats.applied() != 0 || r.final_k() != Some(k) {
            bad.push(k);
        }
    }
    t.report(
        2,
        "extended wheels are irreducible",
        bad.is_empty(),
        format!("k=3..200, {} wheels with reductions or rejected {bad:?}", bad.len()),
    );
}

/// Criterion 3; returns the generated graphs for later criteria.
fn criterion_3(t: &mut Tally, log: &mut RunLog) -> Vec<DynamicGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut corpus = Vec::new();
    let (mut instances, mut disagree, mut accepted, mut mutants_rejected) = (0, 0, 0, 0);
    let start = Instant::now();
    while instances < 10_000 {
        let n = loop {
            let n = rng.gen_range(8..=500);
            if n != 9 {
                break n;
            }
        };
        let g = random_optimal(n, rng.gen()).unwrap().graph;
        let h = mutate_2switch(&g, rng.gen()).unwrap();
        for (x, mutant) in [(&g, false), (&h, true)] {
            let lin = run(x, Algorithm::Linear, log);
            let quad = run(x, Algorithm::Quadratic, log);
            instances += 1;
            disagree += usize::from(lin.accepted != quad.accepted);
            accepted += usize::from(lin.accepted);
            mutants_rejected += usize::from(mutant && !lin.accepted);
        }
        corpus.push(g);
    }
    t.report(
        3,
        "linear and quadratic engines agree",
        disagree == 0,
        format!(
            "{instances} instances (n <= 500, half 2-switch mutants), {disagree} disagreements, \
             {accepted} accepted, {mutants_rejected}/{} mutants rejected, {:.0}s",
            instances / 2,
            start.elapsed().as_secs_f64()
        ),
    );
    corpus
}

fn criterion_4(t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut splits, mut cubes, mut bad) = (0, 0, 0);
    // Canonical forms for n <= 14.
    while splits < 1000 || cubes < 1000 {
        let cube = cubes < 1000 && (splits >= 1000 || rng.gen_bool(0.5));
        let n = if cube { [8, 10][rng.gen_range(0..2)] } else { rng.gen_range(10..=13) };
        let gen = random_optimal(n, rng.gen()).unwrap();
        let (mut g, mut s) = (gen.graph.clone(), gen.skeleton.clone());
        let a = rng.gen_range(0..s.arc_count()) as ArcId;
        let step = if cube {
            expand_cr(&mut g, &mut s, a).unwrap()
        } else {
            match expand_sr(&mut g, &mut s, a) {
                Ok(step) => step,
                Err(Error::InvalidSite(_)) => continue,
                Err(e) => panic!("{e}"),
            }
        };
        let ok = reduce_step(&mut g, &step).is_ok() && canonical_form(&g) == canonical_form(&gen.graph);
        bad += usize::from(!ok);
        if cube {
            cubes += 1;
        } else {
            splits += 1;
        }
    }
    // Larger graphs: same labelled edge set and degree sequence.
    let mut spot = 0;
    while spot < 200 {
        let n = rng.gen_range(15..=2000);
        let gen = random_optimal(n, rng.gen()).unwrap();
        let (mut g, mut s) = (gen.graph.clone(), gen.skeleton.clone());
        let a = rng.gen_range(0..s.arc_count()) as ArcId;
        let step = if spot % 2 == 0 {
            expand_cr(&mut g, &mut s, a).unwrap()
        } else {
            match expand_sr(&mut g, &mut s, a) {
                Ok(step) => step,
                Err(_) => continue,
            }
        };
        let ok = reduce_step(&mut g, &step).is_ok()
            && g.degree_sequence() == gen.graph.degree_sequence()
            && g.sorted_edges() == gen.graph.sorted_edges();
        bad += usize::from(!ok);
        spot += 1;
    }
    t.report(
        4,
        "reduce(expand(G)) is G",
        bad == 0,
        format!("{splits} splits and {cubes} cubes checked by canonical form (n <= 14), {spot} larger spot checks, {bad} mismatches"),
    );
}

fn criterion_7(t: &mut Tally, log: &mut RunLog, corpus: &[DynamicGraph]) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<DynamicGraph> = corpus.iter().step_by(10).cloned().collect();
    for i in 0..120 {
        let n = if i < 10 { 10_000 } else { (10f64.powf(rng.gen_range(1.0..4.0)) as usize).max(10) };
        graphs.push(random_optimal(n, rng.gen()).unwrap().graph);
    }
    let (mut checked, mut bad) = (0, Vec::new());
    for g in &graphs {
        let r = run(g, Algorithm::Linear, log);
        if !r.accepted {
            bad.push(format!("rejected n={}", g.n()));
            continue;
        }
        let xw = r.final_xw.as_ref().unwrap();
        match reconstruct(&r.trace, xw, g.id_bound()) {
            Ok(s) => {
                let emb = s.to_embedded();
                if let Err(v) = verify_embedding(g, &emb) {
                    bad.push(format!("n={}: {v}", g.n()));
                } else if emb.crossings.len() != g.n() - 2 {
                    bad.push(format!("n={}: {} crossings", g.n(), emb.crossings.len()));
                }
            }
            Err(e) => bad.push(format!("n={}: {e}", g.n())),
        }
        checked += 1;
    }
    t.report(
        7,
        "reconstructed embeddings verify",
        bad.is_empty(),
        format!(
            "{checked} accepted graphs up to n=10000 pass all five clauses with n-2 crossings; failures {bad:?}"
        ),
    );
}

fn criterion_8(t: &mut Tally) {
    let sizes = [10_000, 100_000, 1_000_000];
    let start = Instant::now();
    let lin: Vec<f64> = sizes
        .iter()
        .map(|&n| bench::measure(n, Algorithm::Linear, 3, 8).unwrap().median.as_secs_f64())
        .collect();
    let ratios = [lin[1] / lin[0], lin[2] / lin[1]];
    let linear_ok = ratios.iter().all(|r| (8.0..=13.0).contains(r));
    // The quadratic engine at 10^6 would take hours; two decades below show
    // the trend.
    let quad: Vec<f64> = [1_000, 10_000, 100_000]
        .iter()
        .zip([3, 3, 1])
        .map(|(&n, reps)| bench::measure(n, Algorithm::Quadratic, reps, 8).unwrap().median.as_secs_f64())
        .collect();
    let qratios = [quad[1] / quad[0], quad[2] / quad[1]];
    let quad_ok = qratios[1] > ratios[0].max(13.0);
    t.report(
        8,
        "scaling",
        linear_ok && quad_ok,
        format!(
            "linear {:.3}s/{:.3}s/{:.3}s at 1e4/1e5/1e6, ratios {:.1} {:.1}; \
             quadratic {:.3}s/{:.3}s/{:.3}s at 1e3/1e4/1e5, ratios {:.1} {:.1}; {:.0}s",
            lin[0],
            lin[1],
            lin[2],
            ratios[0],
            ratios[1],
            quad[0],
            quad[1],
            quad[2],
            qratios[0],
            qratios[1],
            start.elapsed().as_secs_f64()
        ),
    );
}

fn criterion_9(t: &mut Tally, corpus: &[DynamicGraph]) {
    let order = |g: &DynamicGraph, order| {
        recognize_with(
            g,
            &Options {
                order,
                ..Options::default()
            },
        )
    };
    let mut witness = None;
    let mut tried = 0;
    for g in corpus {
        tried += 1;
        let (s, q) = (order(g, WorkOrder::Stack), order(g, WorkOrder::Queue));
        if s.accepted && q.accepted && s.final_k() != q.final_k() {
            witness = Some((g.n(), s.final_k().unwrap(), q.final_k().unwrap()));
            break;
        }
    }
    t.report(
        9,
        "non-confluence witness",
        witness.is_some(),
        match witness {
            Some((n, a, b)) => format!("n={n} ends in XW_{} with a stack and XW_{} with a queue ({tried} tried)", 2 * a, 2 * b),
            None => format!("none among {tried} graphs"),
        },
    )
}

/// Whether removing any four vertices leaves the graph connected.
fn brute_5connected(g: &DynamicGraph) -> bool {
    let vs: Vec<u32> = g.vertices().collect();
    let n = vs.len();
    let mut seen = vec![0u32; g.id_bound()];
    let mut stamp = 0;
    let mut queue = VecDeque::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let cut = [vs[a], vs[b], vs[c], vs[d]];
                    stamp += 1;
                    for &v in &cut {
                        seen[v as usize] = stamp;
                    }
                    let s = *vs.iter().find(|v| !cut.contains(v)).unwrap();
                    seen[s as usize] = stamp;
                    queue.push_back(s);
                    let mut reached = 1;
                    while let Some(v) = queue.pop_front() {
                        for &u in g.neighbors(v) {
                            if seen[u as usize] != stamp {
                                seen[u as usize] = stamp;
                                reached += 1;
                                queue.push_back(u);
                            }
                        }
                    }
                    if reached != n - 4 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_10(t: &mut Tally, log: &mut RunLog) {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut pure, mut pure_bad, mut tagged, mut tagged_bad) = (0, 0, 0, 0);
    let mut tagged_5conn = 0;
    let (mut truth_checked, mut truth_bad) = (0, 0);
    let mut last_cube = (0, 0);
    while pure + tagged < 1200 {
        let n = rng.gen_range(20..=200);
        let seed = rng.gen();
        let mix = match (pure + tagged) % 3 {
            0 => Mix::Cubes(0),
            1 => Mix::Cubes(rng.gen_range(1..=(n - 8) / 8)),
            _ => Mix::CubesLast(rng.gen_range(1..=(n - 8) / 8)),
        };
        let Ok(gen) = random_optimal_with(n, seed, mix) else {
            continue;
        };
        let lin = run(&gen.graph, Algorithm::Linear, log);
        let five = recognize_5connected(&gen.graph);
        log.note(n, &five);
        if gen.uses_cr() {
            tagged += 1;
            let ok = lin.accepted && !five.accepted;
            tagged_bad += usize::from(!ok);
            tagged_5conn += usize::from(five.accepted);
            if let Mix::CubesLast(_) = mix {
                last_cube.0 += 1;
                last_cube.1 += usize::from(ok);
            }
        } else {
            pure += 1;
            pure_bad += usize::from(!(lin.accepted && five.accepted));
        }
        if n <= 30 {
            truth_checked += 1;
            truth_bad += usize::from(brute_5connected(&gen.graph) != five.accepted);
        }
    }
    // Small graphs against brute force, mixed histories.
    while truth_checked < 300 {
        let n = rng.gen_range(12..=26);
        let Ok(gen) = random_optimal(n, rng.gen()) else {
            continue;
        };
        truth_checked += 1;
        truth_bad += usize::from(brute_5connected(&gen.graph) != recognize_5connected(&gen.graph).accepted);
    }
    t.report(
        10,
        "5-connected mode on a tagged corpus",
        pure_bad == 0 && tagged_bad == 0,
        format!(
            "{pure} split-only graphs, {pure_bad} not accepted by both; {tagged} graphs with cube insertions, \
             {tagged_bad} not (accepted by linear and rejected by 5-connected), of which {tagged_5conn} are \
             5-connected; cube inserted last: {}/{} as stated; 5-connected mode vs brute force on \
             {truth_checked} graphs with n <= 30: {truth_bad} disagreements",
            last_cube.1, last_cube.0
        ),
    );
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut t = Tally { failed: Vec::new() };
    let mut log = RunLog::default();
    criterion_1(&mut t);
    criterion_2(&mut t, &mut log);
    let corpus = criterion_3(&mut t, &mut log);
    criterion_4(&mut t);
    criterion_7(&mut t, &mut log, &corpus);
    criterion_9(&mut t, &corpus);
    criterion_10(&mut t, &mut log);

    // Full invariant sweeps after every step on part of the corpus.
    let mut swept = 0;
    for g in corpus.iter().step_by(20) {
        for algorithm in [Algorithm::Linear, Algorithm::Quadratic] {
            let r = recognize_with(
                g,
                &Options {
                    algorithm,
                    check_invariants: true,
                    ..Options::default()
                },
            );
            log.note(g.n(), &r);
            swept += 1;
        }
    }
    t.report(
        5,
        "unsuccessful accesses at most 4n",
        log.over_bound == 0,
        format!(
            "{} accepting runs, {} over the bound, worst unsuccessful/n = {:.3}",
            log.accepting_runs, log.over_bound, log.worst_ratio
        ),
    );
    t.report(
        6,
        "conservation invariants",
        log.conservation == 0 && log.bank == 0,
        format!(
            "{} runs checked after every reduction ({swept} with full sweeps): {} edge/degree and {} list violations",
            log.runs, log.conservation, log.bank
        ),
    );
    criterion_8(&mut t);

    println!(
        "acceptance: {} of 10 criteria passed in {:.0}s{}",
        10 - t.failed.len(),
        start.elapsed().as_secs_f64(),
        if t.failed.is_empty() {
            String::new()
        } else {
            format!(", failed {:?}", t.failed)
        }
    );
    if t.failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
