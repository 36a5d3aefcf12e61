//! The `τ_k` naming of variables.
//!
//! With `l_s = r + (r-1) + ... + (r-s+1)`, the variable `Y[s,j]` is `τ_{l_s+j}`
//! for `s >= 0, 1 <= j <= r-s`, and `Y[-1,j]` is `τ_{-(r+1-j)}`. Anything else
//! has no name.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{CrystalConfig, CrystalError};
use crate::laurent::{write_terms, LaurentPoly, Monomial, VarId};

/// `l_s`, the number of letters in the first `s` cycles of the standard word.
pub fn cycle_offset(r: u32, s: i32) -> i64 {
    debug_assert!(s >= 0);
    let (r, s) = (r as i64, s as i64);
    s * r - s * (s - 1) / 2
}

/// The `k` with `v = τ_k`, if any.
pub fn tau_index(r: u32, v: VarId) -> Option<i64> {
    if v.s == -1 && v.i <= r {
        return Some(-((r + 1 - v.i) as i64));
    }
    if v.s >= 0 && (v.s as i64) < r as i64 && v.i as i64 <= r as i64 - v.s as i64 {
        return Some(cycle_offset(r, v.s) + v.i as i64);
    }
    None
}

/// Inverse of [`tau_index`].
pub fn var_of_tau(r: u32, k: i64) -> Option<VarId> {
    if k < 0 {
        let j = r as i64 + 1 + k;
        return (j >= 1).then(|| VarId::new(-1, j as u32));
    }
    let mut s = 0;
    while (s as u32) < r {
        let next = cycle_offset(r, s + 1);
        if k <= next {
            let j = k - cycle_offset(r, s);
            return (j >= 1).then(|| VarId::new(s, j as u32));
        }
        s += 1;
    }
    None
}

fn tau_name(k: i64) -> String {
    let digits = k.to_string();
    if digits.chars().count() == 1 {
        format!("τ_{digits}")
    } else {
        format!("τ_{{{digits}}}")
    }
}

fn write_factor(out: &mut String, k: i64, e: i32) {
    out.push_str(&tau_name(k));
    if e != 1 {
        let _ = write!(out, "^{e}");
    }
}

/// Renders `m` as `numerator/denominator` in `τ` names, factors ordered by
/// index. The denominator is parenthesized when it has several factors.
pub fn tau_render(cfg: &CrystalConfig, m: &Monomial) -> Result<String, CrystalError> {
    let r = cfg.rank();
    let mut factors = Vec::with_capacity(m.factors().len());
    for &(v, e) in m.factors() {
        let k = tau_index(r, v).ok_or(CrystalError::NotTauRenderable(v))?;
        factors.push((k, e));
    }
    factors.sort_unstable();
    let mut num = String::new();
    let mut den = String::new();
    let mut den_count = 0;
    for &(k, e) in &factors {
        if e > 0 {
            write_factor(&mut num, k, e);
        } else {
            write_factor(&mut den, k, -e);
            den_count += 1;
        }
    }
    if num.is_empty() {
        num.push('1');
    }
    Ok(match den_count {
        0 => num,
        1 => format!("{num}/{den}"),
        _ => format!("{num}/({den})"),
    })
}

/// Renders a polynomial term by term with [`tau_render`], in canonical order.
pub fn tau_render_poly(cfg: &CrystalConfig, p: &LaurentPoly) -> Result<String, CrystalError> {
    for m in p.monomials() {
        tau_render(cfg, m)?;
    }
    let mut out = String::new();
    write_terms(&mut out, p.terms(), |m| tau_render(cfg, m).unwrap())
        .expect("writing to a String");
    Ok(out)
}

fn parse_factors(r: u32, text: &str, sign: i32, out: &mut Vec<(VarId, i32)>) -> Result<(), CrystalError> {
    let err = || CrystalError::Parse(text.to_string());
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.strip_prefix("τ_").ok_or_else(err)?;
        let k: i64 = if let Some(inner) = rest.strip_prefix('{') {
            let close = inner.find('}').ok_or_else(err)?;
            let k = inner[..close].parse().map_err(|_| err())?;
            rest = &inner[close + 1..];
            k
        } else {
            let c = rest.chars().next().ok_or_else(err)?;
            let k = c.to_digit(10).ok_or_else(err)? as i64;
            rest = &rest[c.len_utf8()..];
            k
        };
        let mut e = 1;
        if let Some(tail) = rest.strip_prefix('^') {
            let end = tail
                .char_indices()
                .find(|&(idx, c)| !(c.is_ascii_digit() || (idx == 0 && c == '-')))
                .map_or(tail.len(), |(idx, _)| idx);
            e = tail[..end].parse().map_err(|_| err())?;
            rest = &tail[end..];
        }
        let v = var_of_tau(r, k).ok_or_else(err)?;
        out.push((v, sign * e));
    }
    Ok(())
}

fn parse_tau_monomial(r: u32, text: &str) -> Result<Monomial, CrystalError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let mut factors = Vec::new();
    if num != "1" {
        parse_factors(r, num, 1, &mut factors)?;
    }
    if let Some(d) = den {
        let d = d.strip_prefix('(').and_then(|d| d.strip_suffix(')')).unwrap_or(d);
        parse_factors(r, d, -1, &mut factors)?;
    }
    Ok(Monomial::from_factors(factors))
}

/// Parses the text produced by [`tau_render_poly`] back into `Y` variables.
pub fn parse_tau_poly(r: u32, text: &str) -> Result<LaurentPoly, CrystalError> {
    let err = || CrystalError::Parse(text.to_string());
    let t = text.trim();
    if t == "0" {
        return Ok(LaurentPoly::zero());
    }
    let mut out = LaurentPoly::zero();
    for term in t.split(" + ") {
        let term = term.trim();
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term),
        };
        let (coeff, mono) = if let Ok(c) = body.parse::<BigInt>() {
            (c, Monomial::one())
        } else {
            match body.split_once('*') {
                Some((c, rest)) => (c.parse().map_err(|_| err())?, parse_tau_monomial(r, rest)?),
                None => (BigInt::from(1), parse_tau_monomial(r, body)?),
            }
        };
        let coeff = if neg { -coeff } else { coeff };
        out = out + LaurentPoly::from_term(coeff, mono);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(r: u32) -> CrystalConfig {
        CrystalConfig::new(r).unwrap()
    }

    #[test]
    fn offsets() {
        assert_eq!(cycle_offset(4, 0), 0);
        assert_eq!(cycle_offset(4, 1), 4);
        assert_eq!(cycle_offset(4, 2), 7);
        assert_eq!(cycle_offset(4, 3), 9);
        assert_eq!(cycle_offset(4, 4), 10);
    }

    #[test]
    fn index_round_trip() {
        for r in 1..=6 {
            let top = cycle_offset(r, r as i32);
            for k in (-(r as i64)..=top).filter(|&k| k != 0) {
                let v = var_of_tau(r, k).unwrap();
                assert_eq!(tau_index(r, v), Some(k));
            }
            assert_eq!(var_of_tau(r, top + 1), None);
            assert_eq!(var_of_tau(r, -(r as i64) - 1), None);
        }
    }

    #[test]
    fn renders() {
        let c = cfg(4);
        assert_eq!(tau_render(&c, &"Y[-1,3]".parse().unwrap()).unwrap(), "τ_{-2}");
        assert_eq!(tau_render(&c, &"Y[2,2]^-1".parse().unwrap()).unwrap(), "1/τ_9");
        assert_eq!(tau_render(&c, &Monomial::one()).unwrap(), "1");
        assert_eq!(
            tau_render(&c, &"Y[0,3]*Y[1,1]*Y[1,2]^-1*Y[0,4]^-1".parse().unwrap()).unwrap(),
            "τ_3τ_5/(τ_4τ_6)"
        );
        assert_eq!(tau_render(&c, &"Y[3,1]^2".parse().unwrap()).unwrap(), "τ_{10}^2");
    }

    #[test]
    fn rejects_unnamed_variables() {
        let c = cfg(4);
        let bad = VarId::new(-2, 1);
        assert_eq!(
            tau_render(&c, &Monomial::var(bad)),
            Err(CrystalError::NotTauRenderable(bad))
        );
        let wide = VarId::new(2, 3);
        assert_eq!(
            tau_render(&c, &Monomial::var(wide)),
            Err(CrystalError::NotTauRenderable(wide))
        );
    }

    #[test]
    fn poly_text_round_trip() {
        let text = "τ_2/τ_4 + τ_3τ_5/(τ_4τ_6) + τ_5/τ_7 + τ_3/(τ_4τ_8) + τ_6/(τ_7τ_8) + 1/τ_9";
        let p = parse_tau_poly(4, text).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(tau_render_poly(&cfg(4), &p).unwrap(), text);
        let q = parse_tau_poly(4, "3 + -2*τ_{10}^2/τ_{-4}").unwrap();
        assert_eq!(tau_render_poly(&cfg(4), &q).unwrap(), "3 + -2*τ_{10}^2/τ_{-4}");
    }
}
