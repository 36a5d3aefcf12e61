//! Demazure crystals generated from an extremal monomial along a word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{e_string, f_string, node_stats, CrystalConfig, CrystalError};
use crate::laurent::{LaurentPoly, Monomial};

/// `Minus` grows a lower Demazure crystal from a lowest monomial with `e~`,
/// `Plus` an upper one from a highest monomial with `f~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = CrystalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(CrystalError::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureSpec {
    word: Vec<u32>,
    sign: Sign,
    seed: Monomial,
}

impl DemazureSpec {
    /// Checks the colors and that the seed is killed by every `f~_i`
    /// (`Minus`) or every `e~_i` (`Plus`).
    pub fn new(cfg: &CrystalConfig, word: Vec<u32>, sign: Sign, seed: Monomial) -> Result<Self, CrystalError> {
        for &i in &word {
            cfg.check_color(i)?;
        }
        cfg.check_monomial(&seed)?;
        let node = node_stats(cfg, &seed);
        let (name, values) = match sign {
            Sign::Minus => ("phi", &node.phi),
            Sign::Plus => ("eps", &node.eps),
        };
        if let Some(pos) = values.iter().position(|&v| v != 0) {
            return Err(CrystalError::InvalidSeed(format!(
                "{name}_{} = {} for {seed}",
                pos + 1,
                values[pos]
            )));
        }
        Ok(DemazureSpec { word, sign, seed })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn seed(&self) -> &Monomial {
        &self.seed
    }
}

/// Starting from the seed, applies full strings of the word's operators from
/// the last letter to the first. Returned in canonical monomial order.
pub fn demazure(cfg: &CrystalConfig, spec: &DemazureSpec, cap: usize) -> Result<Vec<Monomial>, CrystalError> {
    let mut set: BTreeSet<Monomial> = BTreeSet::from([spec.seed.clone()]);
    for &i in spec.word.iter().rev() {
        let mut grown = set.clone();
        for b in &set {
            let string = match spec.sign {
                Sign::Minus => e_string(cfg, b, i)?,
                Sign::Plus => f_string(cfg, b, i)?,
            };
            grown.extend(string);
            if grown.len() > cap {
                return Err(CrystalError::CapExceeded(cap));
            }
        }
        set = grown;
    }
    Ok(set.into_iter().collect())
}

/// Sum of the Demazure crystal's monomials, each with coefficient 1.
pub fn demazure_polynomial(cfg: &CrystalConfig, spec: &DemazureSpec, cap: usize) -> Result<LaurentPoly, CrystalError> {
    Ok(demazure(cfg, spec, cap)?.into_iter().sum())
}
