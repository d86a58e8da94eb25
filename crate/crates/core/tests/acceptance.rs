//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Integer quantities must match exactly. The random-model frequency must
//! lie within 3 standard errors of the analytic value, and bound evaluations
//! within 1e-9 of their closed forms.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subcube::constructions::{
    full_codim_family, large_n_family, mixed_partite_family, partite_family, partition_family, turan_number,
};
use subcube::groundset::{mols_family, pair_cover_family, pair_packing_family};
use subcube::ramsey::{lower_bound_blowup, ramsey_exact, upper_bound_eval, verify_witness, RamseyConfig};
use subcube::random::{edge_probability, sample_family, RandomModelParams};
use subcube::{binomial, choose2, represent_graph, CubeFamily, Graph, IntersectionGraph, Subcube};

const BOUND_TOLERANCE: f64 = 1e-9;
const SIGMAS: f64 = 3.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn edges(f: &CubeFamily) -> u128 {
    IntersectionGraph::build(f).edge_count() as u128
}

fn random_cube(rng: &mut ChaCha8Rng, d: usize, p: f64) -> Subcube {
    let text: String = (0..d)
        .map(|_| {
            let u: f64 = rng.random();
            if u < p {
                '0'
            } else if u < 2.0 * p {
                '1'
            } else {
                '*'
            }
        })
        .collect();
    text.parse().unwrap()
}

fn exact_table() -> Vec<((usize, usize), usize)> {
    vec![((3, 3), 6), ((4, 3), 8), ((5, 3), 11), ((6, 3), 13), ((3, 4), 8), ((4, 4), 11)]
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let mut parts = Vec::new();
    for ((k, l), expected) in exact_table() {
        let r = ramsey_exact(3, k, l, &RamseyConfig::default()).map_err(|e| e.to_string())?;
        check(r.value == expected, format!("R_3({k},{l}) = {}, expected {expected}", r.value))?;
        check(r.witness.len() == expected - 1, format!("({k},{l}) witness size {}", r.witness.len()))?;
        check(verify_witness(&r.witness, k, l).unwrap(), format!("({k},{l}) witness fails"))?;
        parts.push(format!("({k},{l})={}", r.value));
    }
    let secs = started.elapsed().as_secs_f64();
    check(secs <= 3600.0, format!("took {secs:.1}s"))?;
    Ok(format!("{} with verified witnesses in {secs:.2}s", parts.join(" ")))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for k in 2..=6 {
        for l in 2..=4 {
            let r = ramsey_exact(2, k, l, &RamseyConfig::default()).map_err(|e| e.to_string())?;
            let expected = (k - 1) * (l - 1) + 1;
            check(r.value == expected, format!("R_2({k},{l}) = {} != {expected}", r.value))?;
            check(verify_witness(&r.witness, k, l).unwrap(), format!("({k},{l}) witness fails"))?;
            count += 1;
        }
    }
    Ok(format!("R_2(k,l) = (k-1)(l-1)+1 on all {count} pairs k in 2..6, l in 2..4"))
}

fn criterion_3() -> Outcome {
    let e = edges(&partite_family(8, 4, 2).unwrap());
    check(e == 16 && e == turan_number(8, 2), format!("partite(8,4,2) has {e} edges"))?;
    let e = edges(&partite_family(6, 6, 3).unwrap());
    check(e == 12 && e == turan_number(6, 3), format!("partite(6,6,3) has {e} edges"))?;
    for (d, r) in [(2, 2), (4, 2), (6, 3)] {
        let e = edges(&full_codim_family(d, r).unwrap());
        check(e == choose2(r as u64) << d, format!("full_codim({d},{r}) has {e} edges"))?;
    }
    let e = edges(&large_n_family(8, 4, 2).unwrap());
    check(e == 16, format!("large_n(8,4,2) has {e} edges"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pairs_checked = 0;
    for _ in 0..100 {
        let d = rng.random_range(1..=12);
        let classes = rng.random_range(2..=4);
        let sets: Vec<Vec<usize>> = (0..classes)
            .map(|_| {
                let size = rng.random_range(0..=d.min(8));
                rand::seq::index::sample(&mut rng, d, size).into_vec()
            })
            .collect();
        let f = mixed_partite_family(d, &sets).unwrap();
        let g = IntersectionGraph::build(&f);
        let mut class_of = Vec::new();
        for (c, s) in sets.iter().enumerate() {
            class_of.extend(std::iter::repeat_n(c, 1 << s.len()));
        }
        let mut cross = vec![vec![0u128; classes]; classes];
        for (a, b) in g.graph().edges() {
            cross[class_of[a]][class_of[b]] += 1;
        }
        for i in 0..classes {
            check(cross[i][i] == 0, "edge inside a class")?;
            for j in i + 1..classes {
                let mut union: Vec<usize> = sets[i].iter().chain(&sets[j]).copied().collect();
                union.sort_unstable();
                union.dedup();
                check(
                    cross[i][j] == 1u128 << union.len(),
                    format!("classes {:?} and {:?} in d={d}: {} edges", sets[i], sets[j], cross[i][j]),
                )?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!(
        "partite 16, 12; full-codim 4, 16, 192; large-n 16; {pairs_checked} class pairs match 2^|Ri u Rj|"
    ))
}

fn criterion_4() -> Outcome {
    let f = partition_family(6, &[2, 2, 2]).unwrap();
    let triangles = IntersectionGraph::build(&f).count_cliques(3);
    check(triangles == 64, format!("{triangles} triangles"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..1000 {
        let d = rng.random_range(1..=10);
        let r = rng.random_range(1..=4);
        let target = rng.random_range(0..=30);
        let p = rng.random_range(0.0..=0.5);
        let mut f = CubeFamily::new(d);
        for _ in 0..4 * target {
            if f.len() == target {
                break;
            }
            let mut g = f.clone();
            g.push(random_cube(&mut rng, d, p)).unwrap();
            if g.max_point_multiplicity().map_or(0, |m| m.0) <= r {
                f = g;
            }
        }
        let g = IntersectionGraph::build(&f);
        for k in 1..=r + 1 {
            let count = g.count_cliques(k + 1) as u128;
            let bound = binomial(r as u64, k as u64 + 1) << d;
            check(count <= bound, format!("trial {trial}: {count} K_{} > {bound}", k + 1))?;
        }
    }
    Ok("64 triangles; K_{k+1} counts <= C(r,k+1) 2^d on 1000 random families".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut total = 0;
    for trial in 0..1000u64 {
        let d = rng.random_range(1..=10);
        let n = rng.random_range(0..=40);
        let p = rng.random_range(0.0..=0.5);
        let f = sample_family(&RandomModelParams::new(n, d, p, trial)).unwrap();
        let g = IntersectionGraph::build(&f);
        let by_points = g.clique_number_by_points().0;
        let by_search = g.graph().clique_number();
        check(by_points == by_search, format!("seed {trial}: {by_points} vs {by_search}"))?;
        total += by_points;
    }
    Ok(format!("point multiplicity equals branch and bound on 1000 families (sum of omega {total})"))
}

fn criterion_6() -> Outcome {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    for mask in 0u32..1 << pairs.len() {
        let list: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(5, &list).unwrap();
        let back = IntersectionGraph::build(&represent_graph(&g).unwrap());
        check(back.graph() == &g, format!("graph {mask:#012b} differs"))?;
    }
    Ok("all 1024 labeled graphs on 5 vertices round-trip".into())
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for q in [2usize, 3, 5] {
        for r in 2..=q + 1 {
            let f = mols_family(q, r).map_err(|e| e.to_string())?;
            let g = f.intersection_graph();
            let expected = choose2(r as u64) * (q * q) as u128;
            check(g.edge_count() as u128 == expected, format!("mols({q},{r}) has {} edges", g.edge_count()))?;
            check(expected == turan_number((r * q) as u64, r as u64), "not Turan")?;
            // T_r(rq): r classes of q pairwise disjoint sets, all else adjacent.
            for a in 0..r * q {
                for b in a + 1..r * q {
                    check(g.has_edge(a, b) == (a / q != b / q), format!("mols({q},{r}) pair {a},{b}"))?;
                }
            }
            cases += 1;
        }
    }
    for (name, f) in [("cover", pair_cover_family(7, 3).unwrap()), ("packing", pair_packing_family(7, 3).unwrap())] {
        let e = f.intersection_graph().edge_count();
        check(e == 21, format!("Fano {name} has {e} edges"))?;
        check(choose2(7) == 21 && choose2(3) * f.ground_size as u128 == 21, "bounds differ")?;
    }
    Ok(format!("{cases} MOLS cases give T_r(rq) with C(r,2)q^2 edges; Fano cover and packing give 21"))
}

fn criterion_8() -> Outcome {
    let (bound, f) = lower_bound_blowup(5, 6, 3, &Graph::cycle(5), 3).map_err(|e| e.to_string())?;
    let g = IntersectionGraph::build(&f);
    check(bound == 10 && f.len() == 10, format!("bound {bound}, {} vertices", f.len()))?;
    check(g.clique_number().0 < 6, "contains K_6")?;
    check(g.independence_number() < 3, "contains 3 disjoint members")?;
    Ok(format!(
        "10 subcubes of Q_5, omega {}, alpha {}: R_5(6,3) > 10",
        g.clique_number().0,
        g.independence_number()
    ))
}

fn criterion_9() -> Outcome {
    let (d, p, samples) = (8, 0.25, 100_000u64);
    let mut hits = 0u64;
    for seed in 0..samples {
        let f = sample_family(&RandomModelParams::new(2, d, p, seed)).unwrap();
        if f.get(0).intersects(f.get(1)).unwrap() {
            hits += 1;
        }
    }
    let expected = edge_probability(d, p);
    let freq = hits as f64 / samples as f64;
    let se = (expected * (1.0 - expected) / samples as f64).sqrt();
    let z = (freq - expected) / se;
    check(z.abs() <= SIGMAS, format!("frequency {freq:.5} vs {expected:.5}, z = {z:.2}"))?;
    Ok(format!("frequency {freq:.5} vs (1-2p^2)^d = {expected:.5}, z = {z:.2}"))
}

fn criterion_10() -> Outcome {
    for (d, k, l, expected) in [(16, 10, 3, 160.0), (3, 5, 4, 90.0), (2, 3, 4, 18.0)] {
        let v = upper_bound_eval(d, k, l, None).unwrap().value;
        check((v - expected).abs() <= BOUND_TOLERANCE, format!("({d},{k},{l}) gives {v}"))?;
    }
    let mut checked = 0;
    let mut exact: Vec<(usize, usize, usize, usize)> =
        exact_table().into_iter().map(|((k, l), v)| (3, k, l, v)).collect();
    for k in 2..=6 {
        for l in 2..=4 {
            exact.push((2, k, l, (k - 1) * (l - 1) + 1));
        }
    }
    for (d, k, l, value) in exact {
        let bound = upper_bound_eval(d, k, l, None).unwrap().value;
        check(value as f64 <= bound, format!("R_{d}({k},{l}) = {value} > {bound}"))?;
        checked += 1;
    }
    Ok(format!("bounds 160, 90, 18; all {checked} exact values lie below their bounds"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("d=3 table", criterion_1),
        ("d=2 closed form", criterion_2),
        ("construction edge counts", criterion_3),
        ("clique-count identity", criterion_4),
        ("Helly oracle equivalence", criterion_5),
        ("representation round trip", criterion_6),
        ("ground-set constructions", criterion_7),
        ("blow-up lower bound", criterion_8),
        ("random model edge frequency", criterion_9),
        ("upper-bound evaluators", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
