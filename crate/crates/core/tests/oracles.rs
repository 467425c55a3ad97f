mod oracle;

use gemkit::generate::{cube_gem, projective_gem, random_connected_graph, random_graph};
use gemkit::moves::{find_rho_pairs, iso_check};
use gemkit::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample(rng: &mut ChaCha8Rng) -> ColoredGraph {
    let dim = rng.gen_range(2..=4);
    let p = rng.gen_range(1..=6);
    let bipartite = rng.gen_bool(0.5);
    random_connected_graph(rng, dim, p, bipartite)
}

#[test]
fn residue_counts_match_union_find() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let (p, bipartite) = (rng.gen_range(1..=7), rng.gen_bool(0.5));
        let g = random_graph(&mut rng, 4, p, bipartite);
        for bits in 1..(1u32 << 5) {
            let cs = ColorSet::from_bits(bits);
            let colors: Vec<Color> = cs.iter().collect();
            assert_eq!(residue_count(&g, cs).unwrap(), oracle::residue_count(&g, &colors));
        }
    }
}

#[test]
fn regular_genus_matches_face_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let g = sample(&mut rng);
        for (eps, rho) in regular_genus_all(&g).unwrap() {
            assert_eq!(rho.twice(), oracle::twice_face_genus(&g, eps.as_slice()), "{eps}");
        }
    }
}

#[test]
fn every_cyclic_order_reduces_to_a_listed_form() {
    for n in 2..=4 {
        let listed = enumerate_permutations(n);
        assert_eq!(listed.len(), (1..=n).product::<usize>() / 2);
        for e in oracle::all_cyclic_orders(n + 1) {
            let c = CyclicPermutation::new(&e).unwrap();
            assert_eq!(listed.iter().filter(|l| **l == c).count(), 1);
        }
    }
}

#[test]
fn bipartiteness_matches_bfs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let g = sample(&mut rng);
        let mine = g.two_coloring();
        let theirs = oracle::bfs_bipartition(&g);
        assert_eq!(mine.is_some(), theirs.is_some());
        if let Some(side) = mine {
            for e in g.edges() {
                assert_ne!(side[e.u], side[e.v]);
            }
        }
    }
}

#[test]
fn rho_pairs_match_cycle_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let g = sample(&mut rng);
        for i in 0..g.num_colors() {
            let pairs = find_rho_pairs(&g, i, ColorSet::EMPTY).unwrap();
            let edges = g.edges_of_color(i);
            assert_eq!(pairs.len(), edges.len() * (edges.len() - 1) / 2);
            for p in pairs {
                let walked: ColorSet = oracle::involved(&g, i, p.e.0, p.f.0).into_iter().collect();
                assert_eq!(p.involved, walked);
            }
        }
    }
}

#[test]
fn condition_star_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..300 {
        let (p, bipartite) = (rng.gen_range(1..=6), rng.gen_bool(0.5));
        let g = random_connected_graph(&mut rng, 4, p, bipartite);
        let greedy = condition_star(&g).unwrap();
        if let Some(ord) = &greedy {
            assert!(ord.is_valid_for(&g));
        }
        assert_eq!(greedy.is_some(), oracle::brute_force_star(&g), "{}", serialize(&g));
        if greedy.is_some() {
            yes += 1
        } else {
            no += 1
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn isomorphism_of_shuffled_copies() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let g = sample(&mut rng);
        let h = gemkit::generate::relabel_random(&mut rng, &g);
        let iso = iso_check(&g, &h, false).expect("relabeled copy is isomorphic");
        for e in g.edges() {
            assert!(h.has_edge(iso.vertex_map[e.u], iso.vertex_map[e.v], e.color));
        }
    }
    // Different graphs are told apart.
    assert!(iso_check(&cube_gem(4), &ColoredGraph::order_two(4), true).is_none());
}

#[test]
fn known_homology() {
    assert_eq!(z2_betti(&projective_gem(3)).unwrap().0, vec![1, 1, 1, 1]);
    assert_eq!(z2_betti(&cube_gem(3)).unwrap().0, vec![1, 0, 0, 1]);
    assert_eq!(euler_characteristic(&projective_gem(4)).unwrap(), 1);
}
