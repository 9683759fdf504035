mod common;

use common::{brute_gamma, brute_gamma_t, brute_value, random_isolate_free};
use domgame::classic::{domination_number, total_domination_number};
use domgame::enumerate::connected_graphs;
use domgame::io::to_graph6;
use domgame::{game_value, Graph, Player, Variant};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn assert_matches_brute(g: &Graph) {
    for v in Variant::ALL {
        for (first, dominator_first) in [(Player::Dominator, true), (Player::Staller, false)] {
            let fast = game_value(g, v, first, None).unwrap();
            let slow = brute_value(g, v, dominator_first);
            assert_eq!(fast, slow, "{v} {first:?} on {}", to_graph6(g));
        }
    }
}

#[test]
fn solver_matches_brute_force_on_connected_graphs() {
    for n in 2..=5 {
        for g in connected_graphs(n).unwrap() {
            assert_matches_brute(&g);
        }
    }
}

#[test]
fn solver_matches_brute_force_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let p = rng.gen_range(0.25..0.75);
        assert_matches_brute(&random_isolate_free(&mut rng, n, p));
    }
}

#[test]
fn classic_numbers_match_subset_scan() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..300 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.6);
        let g = random_isolate_free(&mut rng, n, p);
        assert_eq!(domination_number(&g).unwrap().0, brute_gamma(&g));
        assert_eq!(total_domination_number(&g).unwrap().0, brute_gamma_t(&g));
    }
}
