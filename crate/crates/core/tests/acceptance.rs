//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every threshold and tolerance is a constant below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zcyclic::graphs::{connected_components, cyclic_graph, diameter, dominating_vertices, enhanced_power_graph};
use zcyclic::structure::{frobenius_bruteforce_oracle, is_frobenius};
use zcyclic::verifier::{default_corpus, suite::z_group_corpus, CorpusEntry, GroupContext, VerifyConfig};
use zcyclic::zgen::{enumerate_z_params, isomorphism_oracle, raw_z_params, realize, realize_unchecked, z_groups_of_order};
use zcyclic::{DiameterResult, FiniteGroup, PairMode, TheoremId, IDENTITY};

const LIMIT_ORDER_60: Duration = Duration::from_secs(10);
const LIMIT_ORDER_210: Duration = Duration::from_secs(60);
const LIMIT_EXHAUSTIVE_ABC: Duration = Duration::from_secs(300);
const Z_MAX: usize = 300;
const MIXED_Z_MAX: usize = 200;
const FROBENIUS_ORACLE_MAX: usize = 60;
const ISO_COUNT_MAX: u64 = 120;
const RANDOM_PAIRS: usize = 10_000;
const PAIR_CORPUS_MAX: usize = 60;
const SEED: u64 = 0x5eed_0007;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.1?}, limit {limit:?}"))?;
    Ok(took)
}

fn build(corpus: &[CorpusEntry]) -> Vec<FiniteGroup> {
    corpus.iter().map(|e| e.spec.build().expect("corpus group")).collect()
}

fn z_groups_upto(max: usize) -> Vec<FiniteGroup> {
    build(&z_group_corpus(2, max))
}

fn context(g: &FiniteGroup) -> GroupContext<'_> {
    GroupContext::new(g, VerifyConfig::default()).expect("analysis")
}

/// Checks `ids` on each group; returns (applicable count, passed count).
fn check_ids(groups: &[FiniteGroup], ids: &[TheoremId]) -> Result<(usize, usize), String> {
    let (mut applicable, mut passed) = (0, 0);
    for g in groups {
        let ctx = context(g);
        for &id in ids {
            let t = ctx.check(id);
            if t.applicable {
                applicable += 1;
            }
            match t.passed {
                Some(true) => passed += 1,
                Some(false) => {
                    return Err(format!("{} {id}: {}", g.name(), t.witness.unwrap_or_default()))
                }
                None => {}
            }
        }
    }
    Ok((applicable, passed))
}

fn order_60() -> Outcome {
    let start = Instant::now();
    let groups = z_groups_of_order(60).map_err(|e| e.to_string())?;
    let mut diams = Vec::new();
    let mut nonabelian_two = false;
    for (p, g) in &groups {
        let d = diameter(&cyclic_graph(g).map_err(|e| e.to_string())?);
        let DiameterResult::Finite(d) = d else {
            return Err(format!("Δ of {p} is {d}"));
        };
        nonabelian_two |= d == 2 && !g.is_abelian();
        diams.push(d);
    }
    let max = diams.iter().copied().max().unwrap_or(0);
    ensure(max == 4, || format!("max diameter {max}, want 4"))?;
    ensure(nonabelian_two, || "no nonabelian member with diameter 2".into())?;
    let took = within(LIMIT_ORDER_60, start)?;
    Ok(format!("{} groups, all connected, diameters {diams:?} ({took:.2?})", groups.len()))
}

fn order_210() -> Outcome {
    let start = Instant::now();
    let groups = z_groups_of_order(210).map_err(|e| e.to_string())?;
    let hits: Vec<String> = groups
        .iter()
        .filter(|(_, g)| diameter(&cyclic_graph(g).unwrap()) == DiameterResult::Finite(3))
        .map(|(p, _)| p.to_string())
        .collect();
    ensure(!hits.is_empty(), || "no order-210 Z-group with diameter 3".into())?;
    let took = within(LIMIT_ORDER_210, start)?;
    Ok(format!("{} groups, diameter 3 at {hits:?} ({took:.2?})", groups.len()))
}

fn exhaustive_abc() -> Outcome {
    let start = Instant::now();
    let groups = z_groups_upto(Z_MAX);
    let (applicable, passed) = check_ids(&groups, &[TheoremId::A, TheoremId::B, TheoremId::C])?;
    let took = within(LIMIT_EXHAUSTIVE_ABC, start)?;
    Ok(format!(
        "{} Z-groups of order 2..={Z_MAX}, {passed}/{applicable} checks passed, single thread ({took:.2?})",
        groups.len()
    ))
}

fn dominating_vertices_mixed() -> Outcome {
    let groups = build(&default_corpus(MIXED_Z_MAX));
    let (applicable, passed) = check_ids(&groups, &[TheoremId::Dom, TheoremId::D, TheoremId::Nilp])?;
    for g in &groups {
        let ctx = context(g);
        let any_criterion = (1..g.order()).any(|x| ctx.dominating_criterion(x));
        ensure(any_criterion == !ctx.dominating().is_empty(), || {
            format!("{}: DOM and D disagree", g.name())
        })?;
    }
    Ok(format!("{} groups, {passed}/{applicable} checks passed, DOM and D agree", groups.len()))
}

fn centerless_z_groups() -> Outcome {
    let groups: Vec<FiniteGroup> = z_groups_upto(Z_MAX)
        .into_iter()
        .filter(|g| zcyclic::structure::center(g).len() == 1 && !g.is_abelian())
        .collect();
    let (mut non_frobenius, mut gd, mut comm) = (0, 0, 0);
    for g in &groups {
        let ctx = context(g);
        let gamma = ctx.commuting.as_ref().expect("nonabelian");
        ensure(gamma.vertices() == ctx.cyclic.vertices() && gamma.edges() == ctx.cyclic.edges(), || {
            format!("{}: Δ ≠ Γ", g.name())
        })?;
        let t = ctx.check(TheoremId::Gd);
        ensure(t.passed == Some(true), || format!("{} GD: {:?}", g.name(), t.witness))?;
        gd += 1;
        if !ctx.frobenius.is_frobenius {
            non_frobenius += 1;
            let d = ctx.commuting_diameter().and_then(|d| d.finite());
            ensure(matches!(d, Some(3 | 4)), || format!("{}: diam(Γ) = {d:?}", g.name()))?;
            let t = ctx.check(TheoremId::Comm);
            ensure(t.passed == Some(true), || format!("{} COMM: {:?}", g.name(), t.witness))?;
            comm += 1;
        }
    }
    ensure(gd > 0 && comm > 0, || "no applicable groups".into())?;
    Ok(format!(
        "{} centerless Z-groups with Δ = Γ, {non_frobenius} non-Frobenius with diam(Γ) ∈ {{3,4}} ({gd} GD, {comm} COMM)",
        groups.len()
    ))
}

fn structure_facts() -> Outcome {
    let groups = z_groups_upto(Z_MAX);
    let (applicable, passed) = check_ids(&groups, &[TheoremId::Rose, TheoremId::Basic])?;
    Ok(format!("{} Z-groups, {passed}/{applicable} checks passed", groups.len()))
}

fn oracle_equivalences() -> Outcome {
    // Frobenius detection against the literal definition.
    let small: Vec<FiniteGroup> = build(&default_corpus(FROBENIUS_ORACLE_MAX))
        .into_iter()
        .filter(|g| g.order() <= FROBENIUS_ORACLE_MAX)
        .collect();
    let mut frobenius = 0;
    for g in &small {
        let fast = is_frobenius(g).map_err(|e| e.to_string())?.is_frobenius;
        let slow = frobenius_bruteforce_oracle(g).map_err(|e| e.to_string())?.is_frobenius;
        ensure(fast == slow, || format!("{}: is_frobenius {fast}, oracle {slow}", g.name()))?;
        frobenius += fast as usize;
    }

    // Canonical parameters are pairwise nonisomorphic, and every raw
    // parameter set lands on exactly one of them.
    let mut classes = 0;
    for n in 2..=ISO_COUNT_MAX {
        let canon: Vec<FiniteGroup> =
            enumerate_z_params(n).into_iter().map(|p| realize(p).unwrap()).collect();
        for i in 0..canon.len() {
            for j in i + 1..canon.len() {
                ensure(!isomorphism_oracle(&canon[i], &canon[j]).unwrap(), || {
                    format!("{} ≅ {}", canon[i].name(), canon[j].name())
                })?;
            }
        }
        for p in raw_z_params(n) {
            let g = realize_unchecked(p);
            let hits = canon.iter().filter(|c| isomorphism_oracle(&g, c).unwrap()).count();
            ensure(hits == 1, || format!("{p} matches {hits} canonical groups"))?;
        }
        classes += canon.len();
    }

    // Fast cyclic-pair test against closure.
    let pair_groups = build(&default_corpus(PAIR_CORPUS_MAX));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for g in &pair_groups {
        for _ in 0..RANDOM_PAIRS {
            let (x, y) = (rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
            let (fast, naive) =
                (g.cyclic_pair_with(x, y, PairMode::Fast), g.cyclic_pair_with(x, y, PairMode::Naive));
            ensure(fast == naive, || format!("{}: ({x}, {y}) fast {fast}, naive {naive}", g.name()))?;
        }
    }
    Ok(format!(
        "frobenius {}/{} agree ({frobenius} Frobenius); {classes} classes over orders ≤ {ISO_COUNT_MAX}; {} pairs",
        small.len(),
        small.len(),
        pair_groups.len() * RANDOM_PAIRS
    ))
}

fn enhanced_power_graphs() -> Outcome {
    let groups = build(&default_corpus(Z_MAX));
    for g in &groups {
        let epg = enhanced_power_graph(g);
        ensure(connected_components(&epg).len() == 1, || format!("{}: disconnected", g.name()))?;
        ensure(dominating_vertices(&epg).contains(&IDENTITY), || {
            format!("{}: identity not dominating", g.name())
        })?;
    }
    Ok(format!("{} groups connected with a dominating identity", groups.len()))
}

fn negative_control() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_zcyclic"))
        .args(["verify", "--max-order", "12", "--negative-control", "--no-timing"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(1), || format!("exit status {:?}", out.status.code()))?;
    let text = String::from_utf8_lossy(&out.stdout);
    let summary: serde_json::Value =
        serde_json::from_str(text.lines().last().unwrap_or("")).map_err(|e| e.to_string())?;
    let failures = summary["failures"].as_array().cloned().unwrap_or_default();
    let first = failures.first().ok_or("no failures reported")?;
    let witness = first["witness"].as_str().unwrap_or("");
    ensure(!witness.is_empty(), || "failure without witness".into())?;
    Ok(format!(
        "exit 1, {} failures, e.g. {} {}: {witness}",
        failures.len(),
        first["group"].as_str().unwrap_or(""),
        first["theorem"].as_str().unwrap_or("")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("order-60 diameters", order_60),
        ("order-210 diameter 3", order_210),
        ("A/B/C over Z-groups ≤ 300", exhaustive_abc),
        ("DOM/D/NILP over mixed corpus", dominating_vertices_mixed),
        ("GD/COMM over centerless Z-groups", centerless_z_groups),
        ("ROSE/BASIC over Z-groups ≤ 300", structure_facts),
        ("oracle equivalences", oracle_equivalences),
        ("enhanced power graphs", enhanced_power_graphs),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
