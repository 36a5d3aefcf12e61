//! The coordinate change φ that turns a · x^L(t) into x^G(a'; τ).

use crystal_minors::bruhat::{phi_map, random_point, x_g, xbar_g, Torus, WordSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let w = WordSpec::from_word(3, &[1, 2, 3, 1, 2]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = Torus::random(3, &mut rng);
    let t = random_point(&w, &mut rng);
    let (a2, tau) = phi_map(&w, &a, &t).unwrap();
    println!("word {w}");
    println!("a = {a}");
    for (v, x) in &t {
        println!("  t at {v} = {x:<8} tau = {}", tau[v]);
    }
    println!("a(t) = {a2}");
    let lhs = xbar_g(&w, &a, &t).unwrap();
    let rhs = x_g(&w, &a2, &tau).unwrap();
    println!("a x^L(t) == x^G(a(t); tau): {}", lhs == rhs);
    println!("{}", lhs.to_json());
}
