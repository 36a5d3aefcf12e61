//! Demazure crystals grown from a lowest monomial along a word, and their
//! polynomials.

use crystal_minors::crystal::{demazure, tau_render, tau_render_poly, CrystalConfig, DemazureSpec, Sign, DEFAULT_CAP};
use crystal_minors::{LaurentPoly, Monomial, VarId};

fn main() {
    let cfg = CrystalConfig::new(4).unwrap();
    let seed = Monomial::var_pow(VarId::new(2, 2), -1);
    let word = [1, 2, 3, 4, 1, 2];
    for len in 0..=word.len() {
        let spec = DemazureSpec::new(&cfg, word[word.len() - len..].to_vec(), Sign::Minus, seed.clone()).unwrap();
        let nodes = demazure(&cfg, &spec, DEFAULT_CAP).unwrap();
        let names: Vec<String> = nodes.iter().map(|m| tau_render(&cfg, m).unwrap()).collect();
        println!("{:?}: {}", spec.word(), names.join(", "));
    }
    let spec = DemazureSpec::new(&cfg, word.to_vec(), Sign::Minus, seed).unwrap();
    let poly: LaurentPoly = demazure(&cfg, &spec, DEFAULT_CAP).unwrap().into_iter().sum();
    println!("polynomial: {}", tau_render_poly(&cfg, &poly).unwrap());
}
