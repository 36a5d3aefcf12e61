//! Minor, Demazure polynomial and path sum agree for every reduced word of
//! small rank. Prints one line per instance.

use crystal_minors::bruhat::{delta_l, MinorSpec, WordSpec};
use crystal_minors::crystal::{demazure_polynomial, tau_render_poly, CrystalConfig, DEFAULT_CAP};
use crystal_minors::paths::{path_sum, PathSpec};
use crystal_minors::verify::minor_demazure_spec;

fn main() {
    let max_r: u32 = std::env::args().nth(1).map_or(4, |a| a.parse().expect("rank"));
    for r in 2..=max_r {
        let cfg = CrystalConfig::new(r).unwrap();
        for w in WordSpec::all(r) {
            for spec in MinorSpec::with_last_color(w) {
                let minor = delta_l(&spec);
                let crystal = demazure_polynomial(&cfg, &minor_demazure_spec(&spec).unwrap(), DEFAULT_CAP).unwrap();
                let paths = path_sum(&PathSpec::from_minor(&spec), r).unwrap();
                let same = minor == crystal && minor == paths;
                println!("{} r={r} {spec}: {}", if same { "ok " } else { "BAD" }, tau_render_poly(&cfg, &minor).unwrap());
            }
        }
    }
}
