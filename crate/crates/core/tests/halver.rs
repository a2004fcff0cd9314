use idom::enumerator::{campaign_half_bound, enumerate_connected_subcubic, CampaignConfig};
use idom::halver::{half_bound_id_set, half_bound_id_set_with, Case, HalverConfig};
use idom::random::random_subcubic;
use idom::solver::id_number;
use idom::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn random_graphs_up_to_forty() {
    let mut rng = StdRng::seed_from_u64(40);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=40);
        let g = random_subcubic(n, &mut rng);
        let cert = half_bound_id_set(&g).unwrap();
        assert!(g.is_id_set(&cert.set).is_id_set());
        assert!(cert.size <= n / 2, "{}", idom::io::to_graph6(&g));
    }
}

#[test]
fn reductions_alone_suffice_without_exact_base() {
    let mut cfg = CampaignConfig::up_to(10);
    cfg.halver = HalverConfig {
        skip: None,
        exact_base: Some(1),
    };
    assert!(campaign_half_bound(&cfg).unwrap().passed());
}

#[test]
fn never_below_optimum() {
    for n in 2..=9 {
        for g in enumerate_connected_subcubic(n).unwrap() {
            let cert = half_bound_id_set(&g).unwrap();
            assert!(cert.size >= id_number(&g).unwrap());
        }
    }
}

#[test]
fn skipping_the_leaf_case_breaks_the_budget() {
    let cfg = HalverConfig {
        skip: Some(Case::LeafOnCycle),
        exact_base: None,
    };
    let broken = (7..=10)
        .flat_map(|n| enumerate_connected_subcubic(n).unwrap())
        .filter(|g| {
            matches!(
                half_bound_id_set_with(g, &cfg),
                Err(Error::BudgetExceeded { .. })
            )
        })
        .count();
    assert!(broken > 0);
}
