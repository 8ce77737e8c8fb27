//! The regression driver: each claim is a concrete, checkable statement
//! with a fixed id and a short anchor describing what it pins down.

use std::time::Instant;

use hnt_core::analysis::{
    classify_diagonal_2nt, desk_search, is_completely_transitive, is_equivalent,
    is_s_neighbour_transitive, projection_case, verify_table1_row, ProjectionKind, Strategy,
    Table1Row,
};
use hnt_core::constructions::{
    all_code, block_diagonal_group, diag_full_group, inj, k2_group, prod_code, rep, rep_l_code,
    section4_group, singleton, w_code,
};
use hnt_core::groups::{compose_aut, EntryPartition, GroupGens};
use hnt_core::hamming::{
    covering_radius, distance_partition, hamming_distance, num_profile, Code, GraphParams, Vertex,
};
use hnt_core::random::{random_aut, random_diagonal, random_vertex};
use hnt_core::{Budgets, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wildmatch::WildMatch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub elapsed_ms: u128,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClaimSuiteResult {
    pub claims: Vec<ClaimOutcome>,
}

impl ClaimSuiteResult {
    pub fn failed(&self) -> usize {
        self.claims
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    /// 0 iff nothing failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed() > 0)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClaimOptions {
    pub seed: u64,
    pub budgets: Budgets,
    /// Skip the clique search.
    pub skip_stretch: bool,
}

type Check = fn(&ClaimOptions) -> Result<(bool, String)>;

struct Claim {
    id: &'static str,
    anchor: &'static str,
    stretch: bool,
    check: Check,
}

fn registry() -> Vec<Claim> {
    let mut claims = vec![
        Claim {
            id: "rep3-completely-transitive",
            anchor: "Rep(3,q), q=5,6,7: rho=2 and completely transitive under Diag_3(S_q) x S_3",
            stretch: false,
            check: rep3_completely_transitive,
        },
        Claim {
            id: "prod-rep2-completely-transitive",
            anchor: "Prod(Rep(2,5),l), l=2,3: rho=l and completely transitive under the K2 group",
            stretch: false,
            check: prod_rep2,
        },
        Claim {
            id: "diagonal-positive-cases",
            anchor: "the listed diagonal codes are 2-neighbour transitive under their diagonal stabiliser",
            stretch: false,
            check: positive_cases,
        },
        Claim {
            id: "classification-oracle",
            anchor: "brute-force diagonal 2-NT classification at (2,2), (3,2), (2,3), (3,3)",
            stretch: false,
            check: classification,
        },
        Claim {
            id: "num-preserved",
            anchor: "Num is invariant under Diag_m(S_q) x S_m",
            stretch: false,
            check: num_preserved,
        },
        Claim {
            id: "action-axioms",
            anchor: "the wreath product acts on H(m,q) by isometries, composing left to right",
            stretch: false,
            check: action_axioms,
        },
        Claim {
            id: "product-two-partitions",
            anchor: "Prod(Rep(3,5),2): transitive on C and C_1, two invariant partitions, complete projections",
            stretch: false,
            check: product_two_partitions,
        },
        Claim {
            id: "repetition-projection-witnesses",
            anchor: "mu and nu lie in C_2 but in different orbits of the block-diagonal group",
            stretch: false,
            check: repetition_witnesses,
        },
        Claim {
            id: "desk-search-h35",
            anchor: "every qualifying code with delta >= 3 through 000 and 111 in H(3,5) is Rep(3,5)",
            stretch: true,
            check: desk_search_h35,
        },
    ];
    for row in Table1Row::ALL {
        claims.push(Claim {
            id: table1_id(row),
            anchor: "mu, nu in C_2 with different Num profiles",
            stretch: false,
            check: table1_check(row),
        });
    }
    claims.sort_by_key(|c| c.id);
    claims
}

fn table1_id(row: Table1Row) -> &'static str {
    match row {
        Table1Row::Singleton => "table1-singleton",
        Table1Row::Rep => "table1-rep",
        Table1Row::Inj => "table1-inj",
        Table1Row::AllQ => "table1-allq",
        Table1Row::AllPq => "table1-allpq",
    }
}

fn table1_check(row: Table1Row) -> Check {
    fn run(row: Table1Row) -> Result<(bool, String)> {
        let (m, q) = row.smallest_params();
        let r = verify_table1_row(row, m, q)?;
        Ok((
            r.pass,
            format!("(m,q)=({m},{q}) Num {} vs {}", r.num_mu, r.num_nu),
        ))
    }
    match row {
        Table1Row::Singleton => |_| run(Table1Row::Singleton),
        Table1Row::Rep => |_| run(Table1Row::Rep),
        Table1Row::Inj => |_| run(Table1Row::Inj),
        Table1Row::AllQ => |_| run(Table1Row::AllQ),
        Table1Row::AllPq => |_| run(Table1Row::AllPq),
    }
}

/// Runs every claim whose id matches `filter` (shell-style wildcards).
pub fn run_claims(filter: Option<&str>, opts: &ClaimOptions) -> ClaimSuiteResult {
    let pattern = filter.map(WildMatch::new);
    let mut out = ClaimSuiteResult::default();
    for claim in registry() {
        if pattern.as_ref().is_some_and(|p| !p.matches(claim.id)) {
            continue;
        }
        let start = Instant::now();
        let (status, detail) = if claim.stretch && opts.skip_stretch {
            (Status::Skipped, "skipped by request".to_string())
        } else {
            match (claim.check)(opts) {
                Ok((true, d)) => (Status::Pass, d),
                Ok((false, d)) => (Status::Fail, d),
                Err(e) => (Status::Fail, format!("error: {e}")),
            }
        };
        out.claims.push(ClaimOutcome {
            id: claim.id.to_string(),
            anchor: claim.anchor.to_string(),
            status,
            elapsed_ms: start.elapsed().as_millis(),
            detail,
        });
    }
    out
}

fn diag_stabiliser(c: &Code, budgets: &Budgets) -> Result<GroupGens> {
    let p = c.params();
    let g = diag_full_group(p.m(), p.q())?.enumerate(budgets.elements)?;
    Ok(g.setwise_stabilizer(c)?.gens().clone())
}

fn rep3_completely_transitive(o: &ClaimOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [5, 6, 7] {
        let c = rep(3, q)?;
        let rho = covering_radius(&c, o.budgets.vertices)?;
        let ct = is_completely_transitive(&diag_full_group(3, q)?, &c, &o.budgets)?;
        ok &= rho == 2 && ct;
        parts.push(format!("q={q} rho={rho} ct={ct}"));
    }
    Ok((ok, parts.join(", ")))
}

fn prod_rep2(o: &ClaimOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for l in [2, 3] {
        let c = prod_code(&rep(2, 5)?, l)?;
        let rho = covering_radius(&c, o.budgets.vertices)?;
        let ct = is_completely_transitive(&k2_group(l, 5)?, &c, &o.budgets)?;
        ok &= rho == l && ct;
        parts.push(format!("l={l} rho={rho} ct={ct}"));
    }
    Ok((ok, parts.join(", ")))
}

fn positive_cases(o: &ClaimOptions) -> Result<(bool, String)> {
    let cases: Vec<(String, Code, bool)> = vec![
        ("{0000}".into(), singleton(4, 2, 0)?, false),
        ("Rep(4,2)".into(), rep(4, 2)?, false),
        ("Rep(5,2)".into(), rep(5, 2)?, false),
        ("Rep(3,5)".into(), rep(3, 5)?, false),
        ("Inj(3,4)".into(), inj(3, 4)?, false),
        ("Inj(3,5)".into(), inj(3, 5)?, false),
        ("W([5/2],2)".into(), w_code(5)?, true),
        ("All(4,2)".into(), all_code(2, 2)?, false),
        ("All(6,2)".into(), all_code(3, 2)?, false),
        ("All(3,3)".into(), all_code(1, 3)?, false),
    ];
    let mut bad = Vec::new();
    for (name, c, complete) in &cases {
        let x = diag_stabiliser(c, &o.budgets)?;
        let two = is_s_neighbour_transitive(&x, c, 2, &o.budgets)?.verdict;
        if !two || (*complete && !is_completely_transitive(&x, c, &o.budgets)?) {
            bad.push(name.clone());
        }
    }
    let c2 = distance_partition(&all_code(1, 3)?, o.budgets.vertices)?.cell_code(2);
    if c2 != Some(rep(3, 3)?) {
        bad.push("C_2(All(3,3)) != Rep(3,3)".into());
    }
    Ok((
        bad.is_empty(),
        format!("{} codes, failing: {bad:?}", cases.len()),
    ))
}

fn classification(o: &ClaimOptions) -> Result<(bool, String)> {
    let expected: [(usize, usize, Strategy, Vec<Code>); 4] = [
        (2, 2, Strategy::AllSubsets, vec![singleton(2, 2, 0)?]),
        (3, 2, Strategy::AllSubsets, vec![singleton(3, 2, 0)?]),
        (2, 3, Strategy::AllSubsets, vec![]),
        (
            3,
            3,
            Strategy::SubgroupOrbits,
            vec![rep(3, 3)?, all_code(1, 3)?],
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, q, strategy, want) in &expected {
        let got = classify_diagonal_2nt(*m, *q, *strategy, &o.budgets)?;
        let mut all_found = got.codes.len() == want.len();
        for w in want {
            let mut found = false;
            for c in &got.codes {
                found |= is_equivalent(c, w, &o.budgets)?.is_some();
            }
            all_found &= found;
        }
        ok &= all_found && got.generation_stable != Some(false);
        parts.push(format!("({m},{q}): {} classes", got.codes.len()));
    }
    Ok((ok, parts.join(", ")))
}

fn num_preserved(o: &ClaimOptions) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut failures = 0;
    for (m, q) in [(3, 5), (4, 3), (6, 3)] {
        let p = GraphParams::new(m, q)?;
        for _ in 0..1000 {
            let x = random_diagonal(p, &mut rng);
            let v = random_vertex(p, &mut rng);
            failures += usize::from(num_profile(&x.apply(&v)?) != num_profile(&v));
        }
    }
    Ok((failures == 0, format!("3000 draws, {failures} failures")))
}

fn action_axioms(o: &ClaimOptions) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut failures = 0;
    for i in 0..10_000 {
        let p = GraphParams::new(2 + i % 5, 2 + i % 4)?;
        let (x, y) = (random_aut(p, &mut rng), random_aut(p, &mut rng));
        let (v, w) = (random_vertex(p, &mut rng), random_vertex(p, &mut rng));
        let comp = compose_aut(&x, &y)?.apply(&v)? == y.apply(&x.apply(&v)?)?;
        let iso = hamming_distance(&x.apply(&v)?, &x.apply(&w)?)? == hamming_distance(&v, &w)?;
        failures += usize::from(!(comp && iso));
    }
    Ok((failures == 0, format!("10000 triples, {failures} failures")))
}

fn product_two_partitions(o: &ClaimOptions) -> Result<(bool, String)> {
    let x = section4_group(&diag_full_group(3, 5)?, None, 2, o.budgets.elements)?;
    let c = prod_code(&rep(3, 5)?, 2)?;
    let nt = is_s_neighbour_transitive(&x, &c, 1, &o.budgets)?.verdict;
    let (j, j2) = (
        EntryPartition::contiguous(6, 3)?,
        EntryPartition::strided(6, 3)?,
    );
    let perms = x.entry_perms();
    let inv = j.is_invariant_under(&perms) && j2.is_invariant_under(&perms);
    let cases = projection_case(&c, &x, &j2, &o.budgets)?;
    let complete = cases
        .iter()
        .all(|c| c.kind == ProjectionKind::CompleteCode && c.clause_holds);
    Ok((
        nt && inv && complete,
        format!("transitive {nt}, invariant {inv}, complete {complete}"),
    ))
}

fn repetition_witnesses(o: &ClaimOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, l, q) in [(3usize, 2usize, 5usize), (2, 2, 5)] {
        let p = GraphParams::new(k * l, q)?;
        let c = if k >= 3 {
            prod_code(&rep(k, q)?, l)?
        } else {
            rep_l_code(&rep(k, q)?, l)?
        };
        let mut mu = vec![0; k * l];
        mu[0] = 1;
        mu[1] = 2;
        let mut nu = vec![0; k * l];
        nu[0] = 1;
        nu[k] = 1;
        let (mu, nu) = (Vertex::new(p, mu)?, Vertex::new(p, nu)?);
        let part = distance_partition(&c, o.budgets.vertices)?;
        let in_c2 = part.level_of(&mu) == Some(2) && part.level_of(&nu) == Some(2);
        let apart = !block_diagonal_group(k, l, q)?
            .vertex_orbit(&mu)?
            .contains(&nu);
        ok &= in_c2 && apart;
        parts.push(format!(
            "(k,l,q)=({k},{l},{q}) in C_2 {in_c2}, separated {apart}"
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn desk_search_h35(o: &ClaimOptions) -> Result<(bool, String)> {
    let r = desk_search(3, 5, &o.budgets)?;
    Ok((
        r.qualifying > 0 && r.all_equivalent_to_rep,
        format!("{} codes, {} qualifying", r.codes, r.qualifying),
    ))
}
