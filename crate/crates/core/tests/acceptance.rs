//! One PASS/FAIL line per acceptance criterion. Time limits are part of each
//! criterion and pinned below. Set `HNT_SKIP_STRETCH=1` to skip the clique
//! search in criterion 10.

use std::time::{Duration, Instant};

use hnt_core::analysis::{
    classify_diagonal_2nt, desk_search, is_completely_transitive, is_equivalent,
    is_s_neighbour_transitive, projection_case, verify_table1_row, ProjectionKind, Strategy,
    Table1Row,
};
use hnt_core::constructions::{
    all_code, block_diagonal_group, diag_full_group, full_aut_group, inj, k2_group, prod_code, rep,
    rep_l_code, section4_group, singleton, w_code,
};
use hnt_core::groups::{compose_aut, AutElem, EntryPartition, GroupGens};
use hnt_core::hamming::{
    covering_radius, distance_partition, hamming_distance, num_profile, Code, GraphParams, Vertex,
};
use hnt_core::random::{random_aut, random_diagonal, random_vertex};
use hnt_core::{Budgets, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LIMIT_1: Duration = Duration::from_secs(5);
const LIMIT_2: Duration = Duration::from_secs(60);
const LIMIT_3: Duration = Duration::from_secs(30);
const LIMIT_4: Duration = Duration::from_secs(60);
const LIMIT_5: Duration = Duration::from_secs(600);
const LIMIT_6: Duration = Duration::from_secs(60);
const LIMIT_7: Duration = Duration::from_secs(120);
const LIMIT_8: Duration = Duration::from_secs(60);
const LIMIT_9: Duration = Duration::from_secs(30);
const LIMIT_10: Duration = Duration::from_secs(1800);

const SEED: u64 = 0;

enum Verdict {
    Pass,
    Fail,
    Skipped,
}

struct Outcome {
    id: usize,
    verdict: Verdict,
    detail: String,
}

fn run(
    id: usize,
    title: &str,
    limit: Duration,
    check: impl FnOnce() -> Result<(bool, String)>,
) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = match check() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let verdict = if ok && in_time {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let tag = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "{tag} [{id:>2}] {title}: {detail} ({:.2}s, limit {}s)",
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    Outcome {
        id,
        verdict,
        detail,
    }
}

/// `G_C`, the stabiliser of `C` in `Diag_m(S_q) ⋊ S_m`.
fn diag_stabiliser(c: &Code) -> Result<GroupGens> {
    let p = c.params();
    let g = diag_full_group(p.m(), p.q())?.enumerate(1_000_000)?;
    Ok(g.setwise_stabilizer(c)?.gens().clone())
}

fn criterion_1() -> Result<(bool, String)> {
    let b = Budgets::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for q in [5, 6, 7] {
        let c = rep(3, q)?;
        let rho = covering_radius(&c, b.vertices)?;
        let ct = is_completely_transitive(&diag_full_group(3, q)?, &c, &b)?;
        ok &= rho == 2 && ct;
        parts.push(format!("q={q}: rho={rho} ct={ct}"));
    }
    Ok((ok, parts.join(", ")))
}

fn criterion_2() -> Result<(bool, String)> {
    let b = Budgets::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (l, q) in [(2, 5), (3, 5)] {
        let c = prod_code(&rep(2, q)?, l)?;
        let rho = covering_radius(&c, b.vertices)?;
        // orbit-wise; the group is never listed
        let ct = is_completely_transitive(&k2_group(l, q)?, &c, &b)?;
        ok &= rho == l && ct;
        parts.push(format!("(l,q)=({l},{q}): rho={rho} ct={ct}"));
    }
    Ok((ok, parts.join(", ")))
}

fn criterion_3() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for row in Table1Row::ALL {
        let (m, q) = row.smallest_params();
        let r = verify_table1_row(row, m, q)?;
        ok &= r.pass;
        parts.push(format!("{row}({m},{q}) {} vs {}", r.num_mu, r.num_nu));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_4() -> Result<(bool, String)> {
    let b = Budgets::default();
    let mut ok = true;
    let mut parts = Vec::new();
    let mut check = |name: String, c: Code, complete: bool| -> Result<()> {
        let x = diag_stabiliser(&c)?;
        let r = is_s_neighbour_transitive(&x, &c, 2, &b)?;
        let good = r.verdict && (!complete || is_completely_transitive(&x, &c, &b)?);
        ok &= good;
        parts.push(format!("{name}{}", if good { "" } else { " FAILED" }));
        Ok(())
    };
    check("{0000} in H(4,2)".into(), singleton(4, 2, 0)?, false)?;
    for m in [4, 5] {
        check(format!("Rep({m},2)"), rep(m, 2)?, false)?;
    }
    check("Rep(3,5)".into(), rep(3, 5)?, false)?;
    for q in [4, 5] {
        check(format!("Inj(3,{q})"), inj(3, q)?, false)?;
    }
    check("W([5/2],2) (completely)".into(), w_code(5)?, true)?;
    for p in [2, 3] {
        check(format!("All({},2)", 2 * p), all_code(p, 2)?, false)?;
    }
    let all33 = all_code(1, 3)?;
    check("All(3,3)".into(), all33.clone(), false)?;
    let c2 = distance_partition(&all33, b.vertices)?.cell_code(2);
    let c2_is_rep = c2.as_ref() == Some(&rep(3, 3)?);
    ok &= c2_is_rep;
    parts.push(format!("C_2(All(3,3)) = Rep(3,3): {c2_is_rep}"));
    Ok((ok, parts.join(", ")))
}

/// Codes named by the classification at `(m,q)` that have `rho >= 2`; an
/// empty `C_2` disqualifies a code.
fn expected_classification(m: usize, q: usize) -> Result<Vec<Code>> {
    let b = Budgets::default();
    let mut named = Vec::new();
    if q == 2 {
        named.push(singleton(m, q, 0)?);
    }
    if m == 3 || q == 2 {
        named.push(rep(m, q)?);
    }
    if m == 3 && q > 3 {
        named.push(inj(3, q)?);
    }
    if q == 2 && m % 2 == 1 {
        named.push(w_code(m)?);
    }
    if m % q == 0 && (q == 2 || (q == 3 && m == 3)) {
        named.push(all_code(m / q, q)?);
    }
    let mut out = Vec::new();
    for c in named {
        if covering_radius(&c, b.vertices)? >= 2 {
            out.push(c);
        }
    }
    Ok(out)
}

/// Some image of `c` under `Aut(H(m,q))` lies inside `All(pq,q)`.
fn inside_all_up_to_equivalence(c: &Code) -> Result<bool> {
    let p = c.params();
    if p.m() % p.q() != 0 {
        return Ok(false);
    }
    let all = all_code(p.m() / p.q(), p.q())?;
    let g = full_aut_group(p.m(), p.q())?.enumerate(1_000_000)?;
    Ok(g.elements().iter().any(|x| {
        c.indices()
            .iter()
            .all(|&w| all.contains_index(x.apply_index(w)))
    }))
}

fn criterion_5() -> Result<(bool, String)> {
    let b = Budgets::default();
    let mut ok = true;
    let mut parts = Vec::new();
    let runs = [
        (2, 2, Strategy::AllSubsets),
        (3, 2, Strategy::AllSubsets),
        (2, 3, Strategy::AllSubsets),
        (3, 3, Strategy::SubgroupOrbits),
    ];
    for (m, q, strategy) in runs {
        let got = classify_diagonal_2nt(m, q, strategy, &b)?;
        let want = expected_classification(m, q)?;
        let mut matched = vec![false; want.len()];
        let mut stray = 0;
        for c in &got.codes {
            let mut hit = false;
            for (i, w) in want.iter().enumerate() {
                if is_equivalent(c, w, &b)?.is_some() {
                    matched[i] = true;
                    hit = true;
                }
            }
            // subsets of All are a family of their own
            let allowed_subset = (q == 2 || (m == 3 && q == 3)) && inside_all_up_to_equivalence(c)?;
            if !hit && !allowed_subset {
                stray += 1;
            }
        }
        let exact = stray == 0 && matched.iter().all(|&x| x) && got.codes.len() == want.len();
        ok &= exact && got.generation_stable != Some(false);
        let sizes: Vec<usize> = got.codes.iter().map(|c| c.len()).collect();
        parts.push(format!(
            "({m},{q}) {strategy}: sizes {sizes:?}, expected {}",
            want.len()
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_6() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0usize;
    let mut trials = 0usize;
    for (m, q) in [(3, 5), (4, 3), (6, 3)] {
        let p = GraphParams::new(m, q)?;
        for _ in 0..1000 {
            let x = random_diagonal(p, &mut rng);
            let v = random_vertex(p, &mut rng);
            trials += 1;
            if num_profile(&x.apply(&v)?) != num_profile(&v) {
                failures += 1;
            }
        }
    }
    let g = diag_full_group(3, 3)?.enumerate(1000)?;
    let p = GraphParams::new(3, 3)?;
    for x in g.elements() {
        for i in 0..p.vertex_count() {
            let v = Vertex::from_index(p, i)?;
            trials += 1;
            if num_profile(&x.apply(&v)?) != num_profile(&v) {
                failures += 1;
            }
        }
    }
    Ok((
        failures == 0,
        format!("{trials} trials, {failures} failures"),
    ))
}

fn criterion_7() -> Result<(bool, String)> {
    let budgets = Budgets::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let groups: Vec<(&str, GroupGens)> = vec![
        ("Diag_3(S_5)xS_3", diag_full_group(3, 5)?),
        ("Diag_4(S_3)xS_4", diag_full_group(4, 3)?),
        ("Aut(H(2,3))", full_aut_group(2, 3)?),
        ("K2(2,5)", k2_group(2, 5)?),
        (
            "section4(Rep(3,5),2)",
            section4_group(&diag_full_group(3, 5)?, None, 2, budgets.elements)?,
        ),
    ];
    let mut failures = 0usize;
    let mut checked = Vec::new();
    for (name, x) in &groups {
        let g = match x.enumerate(budgets.elements) {
            Ok(g) => g,
            Err(e) if e.is_budget() => continue,
            Err(e) => return Err(e),
        };
        for _ in 0..50 {
            let v = random_vertex(x.params(), &mut rng);
            let orbit = x.vertex_orbit(&v)?;
            if orbit != g.orbit_by_filter(&v)? {
                failures += 1;
            }
            let fixers = g
                .elements()
                .iter()
                .filter(|y| y.apply_index(v.index()) == v.index())
                .count();
            if orbit.len() * fixers != g.order() {
                failures += 1;
            }
        }
        checked.push(format!("{name} |G|={}", g.order()));
    }
    let mut axiom_failures = 0usize;
    for i in 0..10_000 {
        let p = GraphParams::new(2 + i % 5, 2 + i % 4)?;
        let (x, y) = (random_aut(p, &mut rng), random_aut(p, &mut rng));
        let (v, w) = (random_vertex(p, &mut rng), random_vertex(p, &mut rng));
        let id_ok = AutElem::identity(p).apply(&v)? == v;
        let comp_ok = compose_aut(&x, &y)?.apply(&v)? == y.apply(&x.apply(&v)?)?;
        let dist_ok = hamming_distance(&x.apply(&v)?, &x.apply(&w)?)? == hamming_distance(&v, &w)?;
        if !(id_ok && comp_ok && dist_ok) {
            axiom_failures += 1;
        }
    }
    Ok((
        failures + axiom_failures == 0 && checked.len() == groups.len(),
        format!(
            "{}; orbit failures {failures}; 10^4 action triples, {axiom_failures} failures",
            checked.join(", ")
        ),
    ))
}

fn criterion_8() -> Result<(bool, String)> {
    let b = Budgets::default();
    let x = diag_full_group(3, 5)?;
    let bar_x = section4_group(&x, None, 2, b.elements)?;
    let bar_c = prod_code(&rep(3, 5)?, 2)?;
    let r = is_s_neighbour_transitive(&bar_x, &bar_c, 1, &b)?;
    let j = EntryPartition::contiguous(6, 3)?;
    let j_prime = EntryPartition::strided(6, 3)?;
    let perms = bar_x.entry_perms();
    let inv = j.is_invariant_under(&perms) && j_prime.is_invariant_under(&perms);
    let cases = projection_case(&bar_c, &bar_x, &j_prime, &b)?;
    let complete = cases
        .iter()
        .all(|c| c.kind == ProjectionKind::CompleteCode && c.clause_holds);
    Ok((
        r.verdict && inv && complete,
        format!(
            "transitive on C and C_1: {}, J and J' invariant: {inv}, {} blocks of J' complete: {complete}",
            r.verdict,
            cases.len()
        ),
    ))
}

fn criterion_9() -> Result<(bool, String)> {
    let b = Budgets::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, l, q) in [(3usize, 2usize, 5usize), (2, 2, 5)] {
        let m = k * l;
        let p = GraphParams::new(m, q)?;
        // the k = 2 case of the argument needs delta >= 3, so use the
        // diagonal copy rather than the full product there
        let c = if k >= 3 {
            prod_code(&rep(k, q)?, l)?
        } else {
            rep_l_code(&rep(k, q)?, l)?
        };
        let mut mu = vec![0u32; m];
        mu[0] = 1;
        mu[1] = 2;
        let mut nu = vec![0u32; m];
        nu[0] = 1;
        nu[k] = 1;
        let (mu, nu) = (Vertex::new(p, mu)?, Vertex::new(p, nu)?);
        let part = distance_partition(&c, b.vertices)?;
        let in_c2 = part.level_of(&mu) == Some(2) && part.level_of(&nu) == Some(2);
        let orbit = block_diagonal_group(k, l, q)?.vertex_orbit(&mu)?;
        let separated = !orbit.contains(&nu);
        ok &= in_c2 && separated;
        parts.push(format!(
            "(k,l,q)=({k},{l},{q}): mu={mu} nu={nu} in C_2: {in_c2}, separated: {separated}"
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_10() -> Result<(bool, String)> {
    let r = desk_search(3, 5, &Budgets::default())?;
    let only_size_five = r.qualifying_sizes.iter().all(|&s| s == 5);
    Ok((
        r.all_equivalent_to_rep && r.qualifying > 0 && only_size_five,
        format!(
            "{} codes (by size {:?}), {} qualifying, all equivalent to Rep(3,5): {}",
            r.codes, r.codes_by_size, r.qualifying, r.all_equivalent_to_rep
        ),
    ))
}

#[test]
fn acceptance() {
    let mut outcomes = vec![
        run(
            1,
            "Rep(3,q) completely transitive, rho=2",
            LIMIT_1,
            criterion_1,
        ),
        run(
            2,
            "Prod(Rep(2,q),l) rho=l and completely transitive",
            LIMIT_2,
            criterion_2,
        ),
        run(3, "Num witnesses for each family", LIMIT_3, criterion_3),
        run(
            4,
            "positive cases of the diagonal classification",
            LIMIT_4,
            criterion_4,
        ),
        run(5, "classification oracle", LIMIT_5, criterion_5),
        run(
            6,
            "Num preserved by Diag_m(S_q) x S_m",
            LIMIT_6,
            criterion_6,
        ),
        run(7, "group machinery oracles", LIMIT_7, criterion_7),
        run(
            8,
            "product of Rep(3,5) with two partitions",
            LIMIT_8,
            criterion_8,
        ),
        run(9, "repetition-projection witnesses", LIMIT_9, criterion_9),
    ];
    if std::env::var("HNT_SKIP_STRETCH").is_ok_and(|v| v == "1") {
        println!("SKIPPED [10] desk search in H(3,5)");
        outcomes.push(Outcome {
            id: 10,
            verdict: Verdict::Skipped,
            detail: "HNT_SKIP_STRETCH=1".into(),
        });
    } else {
        outcomes.push(run(10, "desk search in H(3,5)", LIMIT_10, criterion_10));
    }
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| matches!(o.verdict, Verdict::Fail))
        .map(|o| format!("[{}] {}", o.id, o.detail))
        .collect();
    let skipped = outcomes
        .iter()
        .filter(|o| matches!(o.verdict, Verdict::Skipped))
        .count();
    let passed = outcomes
        .iter()
        .filter(|o| matches!(o.verdict, Verdict::Pass))
        .count();
    println!(
        "acceptance: {passed} passed, {} failed, {skipped} skipped",
        failed.len()
    );
    assert!(failed.is_empty(), "failed criteria: {failed:#?}");
}
