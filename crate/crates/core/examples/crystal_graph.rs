//! The crystal graph through a monomial, printed in τ notation and as DOT.
//!
//! `cargo run --example crystal_graph -- 4 "Y[-1,3]" > b.dot`

use crystal_minors::crystal::{component, tau_render, CrystalConfig, DEFAULT_CAP};
use crystal_minors::Monomial;

fn main() {
    let mut args = std::env::args().skip(1);
    let r: u32 = args.next().map_or(4, |a| a.parse().expect("rank"));
    let seed: Monomial = args.next().unwrap_or_else(|| "Y[-1,3]".into()).parse().expect("monomial");

    let cfg = CrystalConfig::new(r).expect("rank");
    let g = component(&cfg, &seed, DEFAULT_CAP).expect("finite component");
    eprintln!("{} nodes, {} edges", g.len(), g.edges.len());
    for node in &g.nodes {
        let name = tau_render(&cfg, &node.monomial).unwrap_or_else(|_| node.monomial.to_string());
        eprintln!("  {name:<20} wt {}  phi {:?}  eps {:?}", node.wt, node.phi, node.eps);
    }
    print!("{}", g.to_dot_tau(&cfg));
}
