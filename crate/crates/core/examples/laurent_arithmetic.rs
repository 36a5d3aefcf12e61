//! Building, multiplying, evaluating and serializing Laurent polynomials.

use crystal_minors::laurent::Assignment;
use crystal_minors::{LaurentPoly, Monomial, Rational, VarId};

fn main() {
    let y = |s, i| LaurentPoly::var(VarId::new(s, i));
    let p = &y(0, 1) + &LaurentPoly::from_monomial("Y[1,1]^-1*Y[0,2]".parse::<Monomial>().unwrap());
    let q = &y(0, 1) - &LaurentPoly::one();
    let prod = &p * &q;
    println!("p       = {p}");
    println!("q       = {q}");
    println!("p * q   = {prod}");

    let t: Assignment = [
        (VarId::new(0, 1), Rational::new(3, 2)),
        (VarId::new(1, 1), Rational::new(-2, 1)),
        (VarId::new(0, 2), Rational::new(5, 7)),
    ]
    .into_iter()
    .collect();
    let at = |x: &LaurentPoly| x.eval(&t).unwrap();
    println!("p(t) q(t) = {} = (p q)(t) = {}", &at(&p) * &at(&q), at(&prod));

    let json = prod.to_json();
    println!("json    = {json}");
    assert_eq!(LaurentPoly::from_json(&json).unwrap(), prod);
    assert_eq!(prod.to_string().parse::<LaurentPoly>().unwrap(), prod);
}
