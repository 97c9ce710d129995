//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always show; exits nonzero on any FAIL.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use polytower::homology::{cubical_homology, real_moment_angle_complex, SplittingCheck, Summand};
use polytower::io::write_complex;
use polytower::lie::{
    for_each_lyndon, lyndon_words, multigraded_witt, witt_count, Alphabet, Unbounded,
};
use polytower::simplicial::for_each_complex;
use polytower::tower::*;
use polytower::{classify, Classification, GradedAbelianGroup, Simplex, SimplicialComplex};
use polytower_cli::run_with_threads;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SPLITTING_BUDGET: Duration = Duration::from_secs(300);
const NAMED_BUDGET: Duration = Duration::from_secs(1);
const WITT_BUDGET: Duration = Duration::from_secs(10);
const BATCH_BUDGET: Duration = Duration::from_secs(120);
const CENSUS_BUDGET: Duration = Duration::from_secs(60);

const CORPUS_SEED: u64 = 1;
const RANDOM_M5: usize = 200;
const BATCH_SEED: u64 = 4;
const BATCH_SIZE: usize = 50;
const BATCH_CAP: u64 = 50_000_000;
const CENSUS_CUTOFF: u32 = 8;
const WITNESS_COUNT: usize = 25;
const THREAD_COUNTS: [usize; 3] = [1, 2, 8];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

/// Every complex on at most 4 vertices and 200 sampled ones on 5.
fn corpus() -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for_each_complex(m, |faces| {
            out.push(SimplicialComplex::from_simplices(m, faces.iter().copied()).unwrap())
        })
        .unwrap();
    }
    let mut five = Vec::new();
    for_each_complex(5, |faces| five.push(faces.to_vec())).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut picked = BTreeSet::new();
    while picked.len() < RANDOM_M5 {
        picked.insert(rng.gen_range(0..five.len()));
    }
    out.extend(
        picked
            .into_iter()
            .map(|i| SimplicialComplex::from_simplices(5, five[i].iter().copied()).unwrap()),
    );
    out
}

struct Instance {
    k: SimplicialComplex,
    n: Vec<u32>,
    spec: SpaceSpec,
}

/// Random complexes on at most 4 vertices with `Σn_i ≤ 10` and `d_i ≤ 3`.
fn batch() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(BATCH_SEED);
    (0..BATCH_SIZE)
        .map(|_| {
            let m: u32 = rng.gen_range(1..=4);
            let gens: Vec<Simplex> = Simplex::full(m)
                .subsets()
                .filter(|s| s.len() >= 2 && rng.gen_bool(0.3))
                .collect();
            let k = SimplicialComplex::from_simplices(m, gens).unwrap();
            let sum: u32 = rng.gen_range(0..=10);
            let mut n = vec![0u32; m as usize];
            for _ in 0..sum {
                n[rng.gen_range(0..m as usize)] += 1;
            }
            let dims: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=3)).collect();
            Instance {
                k,
                n,
                spec: SpaceSpec::new(dims, false).unwrap(),
            }
        })
        .collect()
}

fn opts() -> EnumerationOptions {
    EnumerationOptions {
        assume_trivial_fwf: true,
        cap: BATCH_CAP,
        ..Default::default()
    }
}

fn words(l: &FactorList) -> Vec<(String, u32)> {
    l.factors
        .iter()
        .map(|f| (f.labelled_word(), f.kappa()))
        .collect()
}

fn criterion_1(corpus: &[SimplicialComplex]) -> Verdict {
    let start = Instant::now();
    let failures: Vec<String> = corpus
        .iter()
        .filter(|k| !SplittingCheck::run(k).passed())
        .map(|k| format!("{:?}", k.facets()))
        .collect();
    let t = start.elapsed();
    verdict(
        failures.is_empty() && t < SPLITTING_BUDGET,
        format!(
            "{} complexes, {} mismatches, {:.1?}",
            corpus.len(),
            failures.len(),
            t
        ),
    )
}

fn criterion_2() -> Verdict {
    let torus = GradedAbelianGroup::from_summands([(1, Summand::free(2)), (2, Summand::free(1))]);
    let cases = [
        (
            "two points",
            SimplicialComplex::from_facets(2, Vec::<Vec<u32>>::new()).unwrap(),
            GradedAbelianGroup::sphere(1),
        ),
        (
            "boundary triangle",
            SimplicialComplex::skeleton(3, 1).unwrap(),
            GradedAbelianGroup::sphere(2),
        ),
        (
            "4-cycle",
            SimplicialComplex::from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]]).unwrap(),
            torus,
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, k, expected) in cases {
        let start = Instant::now();
        let h = cubical_homology(&real_moment_angle_complex(&k));
        let t = start.elapsed();
        ok &= h == expected && t < NAMED_BUDGET;
        parts.push(format!("{name}: {h} ({t:.1?})"));
    }
    verdict(ok, parts.join("; "))
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut checked = 0;
    for q in 1..=4usize {
        let alphabet = Alphabet::standard(q);
        let all = lyndon_words(&alphabet, 8);
        let mut by_degree: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for w in &all {
            *by_degree
                .entry(alphabet.multidegree(w.letters()))
                .or_default() += 1;
        }
        for n in 1..=8u32 {
            let count = all.iter().filter(|w| w.len() == n as usize).count() as u64;
            ok &= witt_count(q as u64, n) == count.into();
            checked += 1;
        }
        // Every multidegree of total at most 8, including those with no words.
        let mut degrees: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..q {
            degrees = degrees
                .into_iter()
                .flat_map(|p| {
                    let used: u32 = p.iter().sum();
                    (0..=8 - used).map(move |x| {
                        let mut r = p.clone();
                        r.push(x);
                        r
                    })
                })
                .collect();
        }
        for c in degrees.into_iter().filter(|c| c.iter().sum::<u32>() >= 1) {
            ok &= multigraded_witt(&c) == by_degree.get(&c).copied().unwrap_or(0).into();
            checked += 1;
        }
    }
    let twos: Vec<String> = (1..=8).map(|n| witt_count(2, n).to_string()).collect();
    let t = start.elapsed();
    verdict(
        ok && t < WITT_BUDGET,
        format!("{checked} counts, q=2: {}, {t:.1?}", twos.join(",")),
    )
}

fn criterion_4(batch: &[Instance]) -> Verdict {
    let start = Instant::now();
    let doubled = EnumerationOptions {
        bound_scale: 2,
        ..opts()
    };
    let mut new_factors = 0;
    let mut changed = 0;
    let mut factors = 0;
    let mut errors = Vec::new();
    for inst in batch {
        let n = MultiIndex::new(inst.n.clone());
        let runs = [
            (
                enumerate_factors_multi(&inst.k, &n, &inst.spec, &opts()),
                enumerate_factors_multi(&inst.k, &n, &inst.spec, &doubled),
            ),
            (
                cone_factors(&inst.k, &n, &inst.spec, &opts()),
                cone_factors(&inst.k, &n, &inst.spec, &doubled),
            ),
        ];
        for (a, b) in runs {
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    let known: BTreeSet<_> = words(&a).into_iter().collect();
                    new_factors += words(&b).into_iter().filter(|w| !known.contains(w)).count();
                    changed += usize::from(a.factors != b.factors);
                    factors += a.factors.len();
                }
                (a, b) => errors.push(format!("{:?} {:?}", a.err(), b.err())),
            }
        }
    }
    let t = start.elapsed();
    verdict(
        new_factors == 0 && changed == 0 && errors.is_empty() && t < BATCH_BUDGET,
        format!(
            "{} instances, {factors} factors, {new_factors} new and {changed} changed lists at doubled bound, {} errors, {t:.1?}",
            batch.len(),
            errors.len()
        ),
    )
}

fn criterion_5(batch: &[Instance]) -> Verdict {
    let full = EnumerationOptions {
        indexing: Indexing::Full,
        ..opts()
    };
    let mut differing = 0;
    let mut nulls = 0;
    for inst in batch {
        let n = MultiIndex::new(inst.n.clone());
        let a = enumerate_factors_multi(&inst.k, &n, &inst.spec, &opts()).unwrap();
        let b = enumerate_factors_multi(&inst.k, &n, &inst.spec, &full).unwrap();
        differing += usize::from(a.factors != b.factors);
        nulls += b.census.null_dropped;
        let a = cone_factors(&inst.k, &n, &inst.spec, &opts()).unwrap();
        let b = cone_factors(&inst.k, &n, &inst.spec, &full).unwrap();
        differing += usize::from(a.factors != b.factors);
    }
    verdict(
        differing == 0,
        format!(
            "{} instances, {differing} differing lists, {nulls} null words dropped",
            batch.len()
        ),
    )
}

fn criterion_6() -> Verdict {
    let two = SimplicialComplex::from_facets(2, Vec::<Vec<u32>>::new()).unwrap();
    let tri = SimplicialComplex::skeleton(3, 1).unwrap();
    let s2 = SpaceSpec::uniform(2, 1).unwrap();
    let s3 = SpaceSpec::uniform(3, 1).unwrap();
    let d = EnumerationOptions::default();
    let owned = |v: &[(&str, u32)]| {
        v.iter()
            .map(|(w, k)| (w.to_string(), *k))
            .collect::<Vec<_>>()
    };
    // Frozen from the brute-force oracle (sequences plus rotation test).
    let cases = [
        (
            "two points n=(2,2)",
            words(&enumerate_factors_multi(&two, &MultiIndex::new(vec![2, 2]), &s2, &d).unwrap()),
            owned(&[
                ("α{12;1,1}", 2),
                ("α{12;1,2}", 1),
                ("α{12;2,1}", 1),
                ("α{12;2,2}", 1),
            ]),
        ),
        (
            "boundary triangle n=(2,2,2)",
            words(
                &enumerate_factors_multi(&tri, &MultiIndex::new(vec![2, 2, 2]), &s3, &d).unwrap(),
            ),
            owned(&[
                ("α{123;1,1,1}", 2),
                ("α{123;1,1,2}", 1),
                ("α{123;1,2,1}", 1),
                ("α{123;2,1,1}", 1),
                ("α{123;1,2,2}", 1),
                ("α{123;2,1,2}", 1),
                ("α{123;2,2,1}", 1),
                ("α{123;2,2,2}", 1),
            ]),
        ),
        (
            "two points single n=3",
            words(&enumerate_factors_single(&two, 3, &s2, &d).unwrap()),
            owned(&[("α{12;1,1}", 1), ("α{12;1,2}", 1), ("α{12;2,1}", 1)]),
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, got, expected) in cases {
        ok &= got == expected;
        parts.push(format!("{name}: {} factors", got.len()));
    }
    verdict(ok, parts.join("; "))
}

fn criterion_7(batch: &[Instance]) -> Verdict {
    let mut rows = 0;
    let mut violations = 0;
    for inst in batch {
        let n: u32 = inst.n.iter().sum();
        for r in degree_comparison(&inst.k, n, &inst.spec, &opts()).unwrap() {
            rows += 1;
            violations += usize::from(r.kappa_cone > r.kappa_bh);
        }
    }
    verdict(
        violations == 0,
        format!("{rows} words, {violations} with κ_cone > κ_bh"),
    )
}

fn census_via_decomposition(m: u32) -> BTreeMap<u32, u64> {
    let k = SimplicialComplex::from_facets(m, Vec::<Vec<u32>>::new()).unwrap();
    let spec = SpaceSpec::uniform(m, 1).unwrap();
    let opts = EnumerationOptions {
        max_total_power: Some(CENSUS_CUTOFF - 1),
        ..Default::default()
    };
    let d = full_decomposition(
        &k,
        &vec![CENSUS_CUTOFF; m as usize],
        &spec,
        Variant::Multi,
        &opts,
    )
    .unwrap();
    let mut out = BTreeMap::new();
    for f in &d.lie_factors {
        let (dim, r) = f
            .wedge_of_spheres()
            .expect("discrete complexes give wedges of spheres");
        for (e, c) in hilton_milnor_spheres(dim, r, CENSUS_CUTOFF) {
            *out.entry(e).or_default() += c;
        }
    }
    for p in &d.product_factors {
        *out.entry(p.sphere_dim).or_default() += 1;
    }
    out
}

fn census_via_wedge_formula(m: u32) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    let _ = for_each_lyndon(
        m as usize,
        CENSUS_CUTOFF as usize - 1,
        &mut Unbounded,
        |w| {
            *out.entry(1 + w.len() as u32).or_default() += 1;
            ControlFlow::Continue(())
        },
    );
    out
}

fn criterion_8() -> Verdict {
    let start = Instant::now();
    // Sphere counts in dimensions 2..=8, frozen from a necklace oracle.
    let frozen: [(u32, [u64; 7]); 2] = [
        (2, [2, 1, 2, 3, 6, 9, 18]),
        (3, [3, 3, 8, 18, 48, 116, 312]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, counts) in frozen {
        let expected: BTreeMap<u32, u64> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u32 + 2, c))
            .collect();
        let a = census_via_decomposition(m);
        let b = census_via_wedge_formula(m);
        ok &= a == expected && b == expected;
        parts.push(format!("m={m}: {:?}", a.values().collect::<Vec<_>>()));
    }
    let t = start.elapsed();
    verdict(
        ok && t < CENSUS_BUDGET,
        format!("{}, {t:.1?}", parts.join("; ")),
    )
}

fn criterion_9(corpus: &[SimplicialComplex]) -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut complexes = 0;
    let mut bad = Vec::new();
    for (i, k) in corpus.iter().enumerate() {
        if classify(k, false).classification != Classification::IntegralConvergesVhDiverges {
            continue;
        }
        complexes += 1;
        let path = dir.path().join(format!("k{i}.cplx"));
        std::fs::write(&path, write_complex(k)).unwrap();
        let dims: Vec<u32> = (1..=k.m()).map(|i| 1 + i % 2).collect();
        let dims_arg: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
        let count = WITNESS_COUNT.to_string();
        let out = run_with_threads(
            [
                "polytower",
                "--format",
                "json",
                "witness",
                path.to_str().unwrap(),
                "--dims",
                &dims_arg.join(","),
                "--count",
                &count,
            ],
            None,
        );
        if out.code != 0 {
            bad.push(format!("{:?}: exit {}", k.facets(), out.code));
            continue;
        }
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let ws = v["witnesses"].as_array().unwrap();
        let spec = SpaceSpec::new(dims, false).unwrap();
        let mut seen = BTreeSet::new();
        let mut problems = 0;
        for w in ws {
            let dim = w["sphere_dim"].as_u64().unwrap() as u32;
            let letters: Vec<Generator> = word_letters(w);
            seen.insert(w["word"].to_string() + &w["generators"].to_string());
            let smash = SmashWord::from_generators(k.m(), letters.iter(), 1);
            let cache = SubcomplexHomology::for_supports(k, letters.iter().map(Generator::support));
            let independent = smash.homology(&cache, &spec).sphere_dimension();
            problems += usize::from(dim < 2 || independent != Some(dim));
        }
        if ws.len() != WITNESS_COUNT || seen.len() != WITNESS_COUNT || problems > 0 {
            bad.push(format!(
                "{:?}: {} words, {} distinct, {problems} bad",
                k.facets(),
                ws.len(),
                seen.len()
            ));
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{complexes} complexes x {WITNESS_COUNT} witnesses, {} failing",
            bad.len()
        ),
    )
}

/// Letters of a JSON witness, with multiplicity, read back from its bracket.
fn word_letters(w: &serde_json::Value) -> Vec<Generator> {
    let gens: Vec<GeneratorIndex> = w["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            let support = Simplex::new(
                g["I"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_u64().unwrap() as u32),
            );
            let k = g["k"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as u32)
                .collect();
            GeneratorIndex::new(support, k).unwrap()
        })
        .collect();
    let word = w["word"].as_str().unwrap();
    word.split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(|t| Generator::Alpha(gens[t[1..].parse::<usize>().unwrap() - 1].clone()))
        .collect()
}

fn criterion_10(batch: &[Instance]) -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = 0;
    let mut mismatches = 0;
    let chosen: Vec<&Instance> = batch
        .iter()
        .filter(|i| i.n.iter().sum::<u32>() >= 4)
        .take(8)
        .collect();
    for (idx, inst) in chosen.iter().enumerate() {
        let path = dir.path().join(format!("k{idx}.cplx"));
        std::fs::write(&path, write_complex(&inst.k)).unwrap();
        let n: Vec<String> = inst.n.iter().map(|x| x.to_string()).collect();
        let dims: Vec<String> = inst
            .spec
            .input_dims()
            .iter()
            .map(|x| x.to_string())
            .collect();
        let (n, dims) = (n.join(","), dims.join(","));
        let args = [
            "polytower",
            "--format",
            "json",
            "factors",
            path.to_str().unwrap(),
            "--n",
            &n,
            "--dims",
            &dims,
            "--assume-trivial-fwf",
        ];
        let mut outputs = BTreeSet::new();
        for t in THREAD_COUNTS {
            for _ in 0..2 {
                let out = run_with_threads(args, Some(t));
                assert_eq!(out.code, 0, "{}", out.stderr);
                outputs.insert(out.stdout);
                runs += 1;
            }
        }
        mismatches += outputs.len() - 1;
    }
    verdict(mismatches == 0, format!("{} instances, {runs} runs over {THREAD_COUNTS:?} workers, {mismatches} differing outputs", chosen.len()))
}

fn main() {
    // Tolerate libtest flags passed through by `cargo test`.
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let corpus = corpus();
    let batch = batch();
    type Check<'a> = Box<dyn Fn() -> Verdict + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        (
            "wedge-splitting homology",
            Box::new(|| criterion_1(&corpus)),
        ),
        ("named homotopy types", Box::new(criterion_2)),
        ("Hall basis counts", Box::new(criterion_3)),
        (
            "finiteness at doubled bound",
            Box::new(|| criterion_4(&batch)),
        ),
        ("restricted indexing", Box::new(|| criterion_5(&batch))),
        ("frozen factor vectors", Box::new(criterion_6)),
        ("degree comparison", Box::new(|| criterion_7(&batch))),
        ("wedge census", Box::new(criterion_8)),
        ("divergence witnesses", Box::new(|| criterion_9(&corpus))),
        ("determinism", Box::new(|| criterion_10(&batch))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let label = format!("criterion {}", i + 1);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| label.contains(f.as_str()) || name.contains(f.as_str()))
        {
            continue;
        }
        let v = check();
        failed += usize::from(!v.ok);
        println!(
            "{label:>12} {:<30} {}  {}",
            name,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
