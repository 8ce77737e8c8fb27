use hnt_core::analysis::{chi, project_vertex};
use hnt_core::constructions::{diag_full_group, full_aut_group, k2_group, rep};
use hnt_core::groups::{compose_aut, inverse_aut, mu, phi, AutElem};
use hnt_core::hamming::{hamming_distance, num_profile, Code, GraphParams};
use hnt_core::io::{read_code, read_group, write_code, write_group};
use hnt_core::random::{random_aut, random_diagonal, random_set_stabilizer_elem, random_vertex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = GraphParams> {
    (1usize..=6, 2usize..=6).prop_map(|(m, q)| GraphParams::new(m, q).unwrap())
}

proptest! {
    #[test]
    fn metric_axioms(p in params(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_vertex(p, &mut rng), random_vertex(p, &mut rng), random_vertex(p, &mut rng));
        let d = |x, y| hamming_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert_eq!(d(&a, &a), 0);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert!(d(&a, &b) <= p.m());
    }

    #[test]
    fn action_axioms(p in params(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_aut(p, &mut rng), random_aut(p, &mut rng));
        let (v, w) = (random_vertex(p, &mut rng), random_vertex(p, &mut rng));
        prop_assert_eq!(AutElem::identity(p).apply(&v).unwrap(), v.clone());
        let xy = compose_aut(&x, &y).unwrap();
        prop_assert_eq!(xy.apply(&v).unwrap(), y.apply(&x.apply(&v).unwrap()).unwrap());
        prop_assert_eq!(inverse_aut(&x).apply(&x.apply(&v).unwrap()).unwrap(), v.clone());
        prop_assert_eq!(
            hamming_distance(&x.apply(&v).unwrap(), &x.apply(&w).unwrap()).unwrap(),
            hamming_distance(&v, &w).unwrap()
        );
        prop_assert_eq!(mu(&xy), mu(&x).then(&mu(&y)));
    }

    #[test]
    fn phi_is_a_homomorphism_on_entry_stabilisers(p in params(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = seed as usize % p.m();
        let x = random_set_stabilizer_elem(p, &[i], &mut rng);
        let y = random_set_stabilizer_elem(p, &[i], &mut rng);
        let xy = compose_aut(&x, &y).unwrap();
        prop_assert_eq!(phi(&xy, i).unwrap(), phi(&x, i).unwrap().then(&phi(&y, i).unwrap()));
    }

    #[test]
    fn num_is_preserved_by_the_diagonal_group(p in params(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_diagonal(p, &mut rng);
        let v = random_vertex(p, &mut rng);
        prop_assert_eq!(num_profile(&x.apply(&v).unwrap()), num_profile(&v));
    }

    #[test]
    fn chi_homomorphism_and_defining_identity(p in params(), seed: u64, mask in 1u64..64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut j: Vec<usize> = (0..p.m()).filter(|e| mask >> e & 1 == 1).collect();
        if j.is_empty() {
            j.push(0);
        }
        let x = random_set_stabilizer_elem(p, &j, &mut rng);
        let y = random_set_stabilizer_elem(p, &j, &mut rng);
        let v = random_vertex(p, &mut rng);
        let (cx, cy) = (chi(&x, &j).unwrap(), chi(&y, &j).unwrap());
        prop_assert_eq!(chi(&compose_aut(&x, &y).unwrap(), &j).unwrap(), compose_aut(&cx, &cy).unwrap());
        prop_assert_eq!(
            project_vertex(&x.apply(&v).unwrap(), &j).unwrap(),
            cx.apply(&project_vertex(&v, &j).unwrap()).unwrap()
        );
    }

    #[test]
    fn code_files_round_trip(p in params(), seed: u64, n in 1usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words: Vec<u64> = (0..n).map(|_| random_vertex(p, &mut rng).index()).collect();
        let mut words = words;
        words.sort_unstable();
        words.dedup();
        let code = Code::from_indices(p, words).unwrap();
        prop_assert_eq!(read_code(&write_code(&code)).unwrap(), code);
    }

    #[test]
    fn group_files_round_trip(p in params(), seed: u64, n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<AutElem> = (0..n).map(|_| random_aut(p, &mut rng)).collect();
        let x = hnt_core::groups::GroupGens::new(p, gens).unwrap();
        prop_assert_eq!(read_group(&write_group(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_equals_filter_and_orbit_stabiliser(which in 0usize..4, seed: u64) {
        let x = match which {
            0 => diag_full_group(3, 4).unwrap(),
            1 => full_aut_group(2, 3).unwrap(),
            2 => k2_group(2, 3).unwrap(),
            _ => diag_full_group(4, 3).unwrap(),
        };
        let g = x.enumerate(1_000_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vertex(x.params(), &mut rng);
        let orbit = x.vertex_orbit(&v).unwrap();
        prop_assert_eq!(&orbit, &g.orbit_by_filter(&v).unwrap());
        let fixers = g.elements().iter().filter(|y| y.apply_index(v.index()) == v.index()).count();
        prop_assert_eq!(orbit.len() * fixers, g.order());
    }
}

#[test]
fn rep_code_file_has_one_line_per_word() {
    assert_eq!(write_code(&rep(3, 5).unwrap()).lines().count(), 6);
}
