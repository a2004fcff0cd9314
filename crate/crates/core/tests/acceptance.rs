//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use idom::classifier::ExtremalClass;
use idom::enumerator::{
    campaign_characterization, campaign_conjecture, campaign_fcubic, campaign_fcubic_members,
    campaign_half_bound, enumerate_connected_cubic, enumerate_connected_subcubic, CampaignConfig,
    Status,
};
use idom::generators::{fcubic_specs, generate, FamilySpec, LabeledGraph};
use idom::halver::{half_bound_id_set, Case, HalverConfig};
use idom::random::random_subcubic;
use idom::solver::{
    all_min_id_sets, id_number, min_id_set, oracle_min_id_set, per_copy_intersection,
    IdCertificate, Provenance,
};
use idom::{canonical_form, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(s: &str) -> LabeledGraph {
    generate(&s.parse::<FamilySpec>().expect("valid spec")).expect("generates")
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(
        took <= limit,
        format!(
            "took {:.1}s, target {}s",
            took.as_secs_f64(),
            limit.as_secs()
        ),
    )
}

fn err(e: idom::Error) -> String {
    e.to_string()
}

fn family_optima() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (s, want) in [
        ("gcubic:k=1", 3),
        ("gcubic:k=2", 6),
        ("hcubic:l=1", 3),
        ("hcubic:l=2", 6),
    ] {
        let g = spec(s).graph;
        let i = id_number(&g).map_err(err)?;
        check(i == want, format!("{s}: i={i}, expected {want}"))?;
        check(
            8 * i == 3 * g.n(),
            format!("{s}: i={i} is not 3n/8 for n={}", g.n()),
        )?;
        seen.push(format!("{s} i={i}"));
    }
    within(start, Duration::from_secs(10))?;
    Ok(seen.join(", "))
}

fn per_copy_all_three(lg: &LabeledGraph) -> Result<usize, String> {
    let sets = all_min_id_sets(&lg.graph).map_err(err)?;
    for set in &sets {
        let cert = IdCertificate::new(set.clone(), Provenance::Exact);
        let counts = per_copy_intersection(lg, &cert).map_err(err)?;
        check(
            counts.iter().all(|&c| c == 3),
            format!(
                "{}: minimum set {} has per-copy counts {counts:?}",
                lg.spec, set
            ),
        )?;
    }
    Ok(sets.len())
}

fn new_family() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (s, want) in [
        ("fcubic:k=2,color=BB", 6),
        ("fcubic:k=3,color=BBB", 9),
        ("fcubic:k=3,color=RRB,pair=(0-1)", 9),
    ] {
        let lg = spec(s);
        let i = id_number(&lg.graph).map_err(err)?;
        check(i == want, format!("{s}: i={i}, expected {want}"))?;
        let sets = per_copy_all_three(&lg)?;
        notes.push(format!("{s} i={i} ({sets} minimum sets)"));
    }
    let mut members = 0;
    for k in 2..=3 {
        for spec in fcubic_specs(k) {
            let g = generate(&spec).map_err(err)?.graph;
            let profile = g.degree_profile();
            check(
                profile.is_cubic && g.is_connected() && g.n() == 8 * k,
                format!("{spec}: not a connected cubic graph of order {}", 8 * k),
            )?;
            members += 1;
        }
    }
    let report = campaign_fcubic(3).map_err(err)?;
    check(
        report.passed(),
        format!(
            "fcubic campaign: {} violations",
            report.violations().count()
        ),
    )?;
    within(start, Duration::from_secs(60))?;
    notes.push(format!(
        "{members} members with k<=3 cubic, connected, n=8k"
    ));
    Ok(notes.join(", "))
}

fn benchmarks() -> Outcome {
    let k33 = id_number(&spec("kbip:r=3,s=3").graph).map_err(err)?;
    check(k33 == 3, format!("i(K_3,3)={k33}"))?;
    let prism = id_number(&spec("prism5").graph).map_err(err)?;
    check(prism == 4, format!("i(C5 x K2)={prism}"))?;
    let report = campaign_conjecture(&CampaignConfig::up_to(12)).map_err(err)?;
    check(
        report.passed(),
        format!(
            "conjecture campaign: {} violations",
            report.violations().count()
        ),
    )?;
    let exceptions = report.with_status(Status::Exception).count();
    check(
        exceptions == 3,
        format!("expected 3 exception records, got {exceptions}"),
    )?;
    Ok(format!(
        "i(K_3,3)=3, i(C5 x K2)=4, {} cubic graphs n<=12 (search restricted to n<=12)",
        report.examined
    ))
}

fn half_bound() -> Outcome {
    let start = Instant::now();
    let report = campaign_half_bound(&CampaignConfig::up_to(10)).map_err(err)?;
    check(
        report.passed(),
        format!(
            "half-bound campaign: {} violations",
            report.violations().count()
        ),
    )?;
    let mut rng = StdRng::seed_from_u64(0x1d0);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=40);
        let g = random_subcubic(n, &mut rng);
        let cert = half_bound_id_set(&g).map_err(|e| format!("random #{trial}: {e}"))?;
        check(
            g.is_id_set(&cert.set).is_id_set() && cert.size <= n / 2,
            format!(
                "random #{trial}: halver set {} invalid or too large",
                cert.set
            ),
        )?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} graphs n<=10, 1000 random n<=40",
        report.examined
    ))
}

fn extremal_classes(n: usize) -> Result<BTreeSet<ExtremalClass>, String> {
    let mut out = BTreeSet::new();
    for g in enumerate_connected_subcubic(n).map_err(err)? {
        if 2 * oracle_min_id_set(&g).map_err(err)?.size == n {
            out.insert(idom::classify(&g).map_err(err)?);
        }
    }
    Ok(out)
}

fn characterization() -> Outcome {
    let report = campaign_characterization(&CampaignConfig::up_to(10)).map_err(err)?;
    check(
        report.passed(),
        format!(
            "characterization campaign: {} violations",
            report.violations().count()
        ),
    )?;
    use ExtremalClass::*;
    let four = extremal_classes(4)?;
    check(
        four == BTreeSet::from([Sporadic(1), CoronaPath(2)]),
        format!("n=4 extremal list {four:?}"),
    )?;
    let six = extremal_classes(6)?;
    let want = BTreeSet::from([
        Sporadic(2),
        Sporadic(3),
        Sporadic(4),
        Sporadic(5),
        CoronaPath(3),
        CoronaCycle(3),
    ]);
    check(six == want, format!("n=6 extremal list {six:?}"))?;
    Ok(format!(
        "{} graphs n<=10, {} extremal, n=4 and n=6 lists exact",
        report.examined,
        report.with_status(Status::Extremal).count()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    let mut compare = |g: &Graph| -> Result<(), String> {
        let a = min_id_set(g).map_err(err)?.size;
        let b = oracle_min_id_set(g).map_err(err)?.size;
        count += 1;
        check(
            a == b,
            format!("{}: solver {a}, oracle {b}", idom::io::to_graph6(g)),
        )
    };
    for n in 2..=10 {
        for g in enumerate_connected_subcubic(n).map_err(err)? {
            compare(&g)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x0dd);
    for _ in 0..500 {
        let n = rng.gen_range(2..=16);
        compare(&random_subcubic(n, &mut rng))?;
    }
    Ok(format!("{count} graphs agree"))
}

fn enumeration() -> Outcome {
    for n in 2..=10 {
        let graphs = enumerate_connected_subcubic(n).map_err(err)?;
        let forms: BTreeSet<_> = graphs
            .iter()
            .map(canonical_form)
            .collect::<idom::Result<_>>()
            .map_err(err)?;
        check(forms.len() == graphs.len(), format!("duplicates at n={n}"))?;
    }
    let fixture = include_str!("fixtures/cubic_counts.txt");
    let mut counts = Vec::new();
    for line in fixture
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
        let (Some(Ok(n)), Some(Ok(want))) = (it.next(), it.next()) else {
            return Err(format!("bad fixture line {line:?}"));
        };
        let got = enumerate_connected_cubic(n).map_err(err)?.len();
        check(got == want, format!("cubic n={n}: {got}, fixture {want}"))?;
        counts.push(format!("{n}:{got}"));
    }
    check(counts.len() == 4, "fixture must cover n = 4, 6, 8, 10")?;
    Ok(format!(
        "duplicate-free n<=10, cubic counts {} (completeness n<=7 in tests/enumeration.rs)",
        counts.join(" ")
    ))
}

/// BBB member with two chain edges swapped, so copies 0 and 1 meet at their
/// outputs and copies 1 and 2 at their inputs. Still cubic.
fn corrupted_fcubic() -> Result<LabeledGraph, String> {
    let lg = spec("fcubic:k=3,color=BBB");
    let v = |s: &str| lg.vertex(s).ok_or_else(|| format!("no vertex {s}"));
    let (o0, i1) = (v("copy0:Y:c-port2")?, v("copy1:Y:c-port1")?);
    let (o1, i2) = (v("copy1:Y:c-port2")?, v("copy2:Y:c-port1")?);
    check(
        lg.graph.has_edge(o0, i1) && lg.graph.has_edge(o1, i2),
        "chain edges not found",
    )?;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges: Vec<_> = lg
        .graph
        .edges()
        .filter(|&e| e != key(o0, i1) && e != key(o1, i2))
        .collect();
    edges.push(key(o0, o1));
    edges.push(key(i1, i2));
    let graph = Graph::from_edge_list(lg.graph.n(), &edges).map_err(err)?;
    check(graph.degree_profile().is_cubic, "corruption broke cubicity")?;
    Ok(LabeledGraph { graph, ..lg })
}

fn negative_controls() -> Outcome {
    let mut cfg = CampaignConfig::up_to(10);
    cfg.halver = HalverConfig {
        skip: Some(Case::LeafOnCycle),
        exact_base: None,
    };
    let faulty = campaign_half_bound(&cfg).map_err(err)?;
    let halver_violations = faulty.violations().count();
    check(
        halver_violations > 0,
        "halver without the leaf case still passes",
    )?;
    let wiring = campaign_fcubic_members(&[corrupted_fcubic()?]).map_err(err)?;
    let wiring_violations = wiring.violations().count();
    check(wiring_violations > 0, "corrupted wiring still passes")?;
    Ok(format!(
        "faulty halver: {halver_violations} violations; corrupted wiring: {wiring_violations} violation(s)"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("family optima", family_optima),
        ("new cubic family", new_family),
        ("known benchmarks", benchmarks),
        ("half bound", half_bound),
        ("characterization", characterization),
        ("oracle equivalence", oracle_equivalence),
        ("enumeration soundness", enumeration),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.2}s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.2}s) {detail}", i + 1);
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
