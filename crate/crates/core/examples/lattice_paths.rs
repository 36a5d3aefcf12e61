//! Non-intersecting path families X_d(m, m'), their labels and statistics.
//!
//! `cargo run --example lattice_paths -- 2 3 2 4`

use crystal_minors::crystal::{tau_render, tau_render_poly, CrystalConfig};
use crystal_minors::paths::{closed_form_sum, enumerate, label, path_sum, stats, PathSpec};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let [d, m, mprime, r] = args[..] else {
        return run(2, 3, 2, 4);
    };
    run(d, m, mprime, r)
}

fn run(d: u32, m: u32, mprime: u32, r: u32) {
    let spec = PathSpec::new(d, m, mprime).expect("valid family");
    let cfg = CrystalConfig::new(r).expect("rank");
    println!("{spec} at rank {r}:");
    for p in enumerate(&spec) {
        let q = label(&spec, &p, r).expect("rank large enough");
        println!("  {p}   {}   k = {:?}", tau_render(&cfg, &q).unwrap(), stats(&p).k);
    }
    let sum = path_sum(&spec, r).unwrap();
    assert_eq!(sum, closed_form_sum(&spec, r).unwrap());
    println!("sum: {}", tau_render_poly(&cfg, &sum).unwrap());
}
