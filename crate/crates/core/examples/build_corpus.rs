//! Regenerates the gem corpus used by the CLI tests and acceptance suite.
//!
//!     cargo run --release -p gemkit --example build_corpus -- crates/cli/corpus
//!
//! Small crystallizations are found by seeded random search, so the output
//! is identical on every run.

use std::fs;
use std::path::{Path, PathBuf};

use gemkit::generate::{cube_gem, projective_gem, random_connected_graph};
use gemkit::moves::{connected_sum, rho1_pipeline};
use gemkit::{classify, condition_star, serialize, z2_betti, ColoredGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pipeline_colors(g: &ColoredGraph) -> Vec<usize> {
    (0..4).filter(|&i| rho1_pipeline(g, i, 1).map(|o| o.bound.is_some()).unwrap_or(false)).collect()
}

/// First order-10 crystallization from the seeded stream with the given
/// bipartiteness and Betti vector that passes `accept`.
fn search(seed: u64, bipartite: bool, betti: &[usize], accept: impl Fn(&ColoredGraph) -> bool) -> ColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50_000_000u64 {
        let g = random_connected_graph(&mut rng, 4, 5, bipartite);
        let cls = classify(&g).unwrap();
        if cls.crystallization && cls.is_closed_certified() && z2_betti(&g).unwrap().0 == betti && accept(&g) {
            return g;
        }
    }
    panic!("search exhausted");
}

fn write(dir: &Path, name: &str, g: &ColoredGraph) {
    let path: PathBuf = dir.join(format!("{name}.gem"));
    fs::write(&path, serialize(g)).unwrap();
    eprintln!("wrote {} (order {})", path.display(), g.order());
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/cli/corpus".into()));
    fs::create_dir_all(&dir).unwrap();

    write(&dir, "s4_order2", &ColoredGraph::order_two(4));
    write(&dir, "s4_cube", &cube_gem(4));
    let rp4 = projective_gem(4);
    write(&dir, "rp4_order16", &rp4);
    write(&dir, "rp4_switched", &rho1_pipeline(&rp4, 1, 1).unwrap().graph);

    let has_pipeline = |g: &ColoredGraph| pipeline_colors(g).contains(&0);
    let s3s1 = search(11, true, &[1, 1, 0, 1, 1], has_pipeline);
    write(&dir, "s3xs1_order10", &s3s1);
    write(&dir, "s3xs1_switched", &rho1_pipeline(&s3s1, 0, 1).unwrap().graph);
    let twisted = search(11, false, &[1, 1, 0, 1, 1], has_pipeline);
    write(&dir, "s3xs1_twisted_order10", &twisted);
    write(&dir, "s3xs1_twisted_switched", &rho1_pipeline(&twisted, 0, 1).unwrap().graph);
    write(&dir, "s3xs1_sum2", &connected_sum(&s3s1, 0, &s3s1, 0).unwrap());
    let cp2 = search(11, true, &[1, 0, 1, 0, 1], |g| condition_star(g).unwrap().is_some());
    write(&dir, "cp2_order10", &cp2);

    // A sphere crystallization whose 4-colored edges admit no ordering.
    let no_star = search(11, true, &[1, 0, 0, 0, 1], |g| condition_star(g).unwrap().is_none());
    write(&dir, "s4_no_star_order10", &no_star);
}
