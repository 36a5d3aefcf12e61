//! The exchange matrix attached to a reduced word and a few mutations.

use crystal_minors::bruhat::WordSpec;
use crystal_minors::cluster::{exchange, seed_matrix, skew_symmetrizer, ExchangeSeed};

fn main() {
    let w = WordSpec::from_word(3, &[1, 2, 3, 1, 2, 1]).unwrap();
    let b = seed_matrix(&w);
    println!("seed matrix of {w}:\n{b}");
    let d = skew_symmetrizer(&b.principal()).expect("skew-symmetrizable");
    let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    println!("symmetrizer: ({})", d.join(", "));

    let mut seed = ExchangeSeed::from_seed_matrix(&b);
    for k in [0, 2, 0] {
        let (relation, next) = exchange(&seed, k).unwrap();
        println!("{} {}' = {relation}", seed.cluster[k], seed.cluster[k]);
        seed = next;
    }
    println!("cluster now: {}", seed.cluster.join(", "));
}
