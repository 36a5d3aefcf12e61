//! The matrix x^L(t) of a reduced word, its minors, and the same minor of
//! a · x^L(t) at a rational point.

use crystal_minors::bruhat::{delta_g, delta_l_of, random_point, xl_matrix, MinorSpec, Torus, WordSpec};
use crystal_minors::crystal::{tau_render_poly, CrystalConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let w = WordSpec::from_word(4, &[1, 2, 3, 4, 1, 2, 3, 1, 2, 1]).unwrap();
    let cfg = CrystalConfig::new(4).unwrap();
    let xl = xl_matrix(&w);
    println!("x^L for {w}:");
    for i in 0..xl.size() {
        let row: Vec<String> = (0..xl.size()).map(|j| xl.get(i, j).to_string()).collect();
        println!("  [{}]", row.join(" | "));
    }
    for k in 1..=w.len() {
        let spec = MinorSpec::new(w, k).unwrap();
        let minor = delta_l_of(&xl, &spec);
        println!("k={k:<2} rows {:?}: {}", spec.row_labels(), tau_render_poly(&cfg, &minor).unwrap());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = Torus::random(4, &mut rng);
    let t = random_point(&w, &mut rng);
    let spec = MinorSpec::new(w, 6).unwrap();
    let numeric = delta_g(&spec, &a, &t).unwrap();
    let factor = &(a.get(3) * a.get(4)) * &delta_l_of(&xl, &spec).eval(&t).unwrap();
    println!("at a = {a}: minor {numeric}, a_3 a_4 times the symbolic minor {factor}");
}
