//! Monomial realization of type-A crystals.
//!
//! Monomials in the variables `Y[s,i]` carry a crystal structure once a sign
//! set `p` is fixed. Only `p[j][i] = 1 if j < i, 0 if i < j` is supported;
//! with it the multiplier of color `i` is
//!
//! ```text
//! A[s,i] = Y[s,i] Y[s+1,i] / (Y[s,i+1] Y[s+1,i-1])
//! ```
//!
//! with the `i-1` factor dropped at `i = 1` and the `i+1` factor dropped at
//! `i = r`.

mod demazure;
mod graph;
mod tau;

pub use demazure::{demazure, demazure_polynomial, DemazureSpec, Sign};
pub use graph::{component, CrystalGraph, Edge};
pub use tau::{
    cycle_offset, parse_tau_poly, tau_index, tau_render, tau_render_poly, var_of_tau,
};

use std::fmt;
use std::ops::{Add, Sub};

use thiserror::Error;

use crate::laurent::{Monomial, VarId};

/// Safety bound on the number of nodes visited by an exploration.
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u32),
    #[error("color {color} outside [1, {rank}]")]
    ColorOutOfRange { color: u32, rank: u32 },
    #[error("only the sign set p[j][i] = (j < i) is supported")]
    UnsupportedSigns,
    #[error("exploration exceeded the cap of {0} nodes")]
    CapExceeded(usize),
    #[error("{0} has no tau name")]
    NotTauRenderable(VarId),
    #[error("invalid Demazure seed: {0}")]
    InvalidSeed(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Rank and sign set of the realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrystalConfig {
    rank: u32,
}

impl CrystalConfig {
    pub fn new(rank: u32) -> Result<Self, CrystalError> {
        if rank == 0 {
            return Err(CrystalError::InvalidRank(rank));
        }
        Ok(CrystalConfig { rank })
    }

    /// Accepts an explicit `r x r` sign table (diagonal ignored) and rejects
    /// anything but the supported one.
    pub fn with_signs(rank: u32, signs: &[Vec<i32>]) -> Result<Self, CrystalError> {
        let cfg = Self::new(rank)?;
        if signs.len() != rank as usize || signs.iter().any(|row| row.len() != rank as usize) {
            return Err(CrystalError::UnsupportedSigns);
        }
        for j in 1..=rank {
            for i in 1..=rank {
                if i != j && signs[j as usize - 1][i as usize - 1] != cfg.sign(j, i) {
                    return Err(CrystalError::UnsupportedSigns);
                }
            }
        }
        Ok(cfg)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `p[j][i]`.
    pub fn sign(&self, j: u32, i: u32) -> i32 {
        i32::from(j < i)
    }

    /// Cartan matrix of type A.
    pub fn cartan(&self, i: u32, j: u32) -> i32 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }

    pub(crate) fn check_color(&self, i: u32) -> Result<(), CrystalError> {
        if i == 0 || i > self.rank {
            return Err(CrystalError::ColorOutOfRange { color: i, rank: self.rank });
        }
        Ok(())
    }

    pub(crate) fn check_monomial(&self, m: &Monomial) -> Result<(), CrystalError> {
        m.vars().try_for_each(|v| self.check_color(v.i))
    }
}

/// A weight in the basis of fundamental weights; `coeffs[i-1]` is the
/// pairing with `h_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: u32) -> Self {
        Weight(vec![0; rank as usize])
    }

    pub fn fundamental(rank: u32, d: u32) -> Self {
        let mut w = Self::zero(rank);
        w.0[d as usize - 1] = 1;
        w
    }

    pub fn simple_root(cfg: &CrystalConfig, i: u32) -> Self {
        Weight((1..=cfg.rank()).map(|j| cfg.cartan(j, i) as i64).collect())
    }

    pub fn pairing(&self, i: u32) -> i64 {
        self.0[i as usize - 1]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("L{}", i + 1),
                -1 => format!("-L{}", i + 1),
                c => format!("{c}L{}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A monomial together with its weight and string lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrystalNode {
    pub monomial: Monomial,
    pub wt: Weight,
    pub phi: Vec<i64>,
    pub eps: Vec<i64>,
}

impl CrystalNode {
    pub fn phi(&self, i: u32) -> i64 {
        self.phi[i as usize - 1]
    }

    pub fn eps(&self, i: u32) -> i64 {
        self.eps[i as usize - 1]
    }
}

// (s, exponent) pairs of color i, increasing in s
fn color_profile(m: &Monomial, i: u32) -> Vec<(i32, i64)> {
    m.factors()
        .iter()
        .filter(|(v, _)| v.i == i)
        .map(|&(v, e)| (v.s, e as i64))
        .collect()
}

// Partial sums S_0 = 0 (before the support), S_k after the k-th support point.
fn partial_sums(profile: &[(i32, i64)]) -> Vec<i64> {
    let mut sums = Vec::with_capacity(profile.len() + 1);
    sums.push(0);
    let mut acc = 0;
    for &(_, e) in profile {
        acc += e;
        sums.push(acc);
    }
    sums
}

/// Weight, `phi_i` and `eps_i` of a monomial. The max defining `phi_i`
/// includes the empty partial sum, so `phi_i >= 0`.
pub fn node_stats(cfg: &CrystalConfig, m: &Monomial) -> CrystalNode {
    let r = cfg.rank();
    let mut wt = Vec::with_capacity(r as usize);
    let mut phi = Vec::with_capacity(r as usize);
    let mut eps = Vec::with_capacity(r as usize);
    for i in 1..=r {
        let sums = partial_sums(&color_profile(m, i));
        let total = *sums.last().unwrap();
        let max = *sums.iter().max().unwrap();
        wt.push(total);
        phi.push(max);
        eps.push(max - total);
    }
    CrystalNode { monomial: m.clone(), wt: Weight(wt), phi, eps }
}

/// The multiplier `A[s,i]`.
pub fn a_monomial(cfg: &CrystalConfig, s: i32, i: u32) -> Result<Monomial, CrystalError> {
    cfg.check_color(i)?;
    let mut factors = vec![(VarId::new(s, i), 1), (VarId::new(s + 1, i), 1)];
    for j in 1..=cfg.rank() {
        let a = cfg.cartan(j, i);
        if j != i && a != 0 {
            factors.push((VarId::new(s + cfg.sign(j, i), j), a));
        }
    }
    Ok(Monomial::from_factors(factors))
}

/// `e~_i m`, or `None` when `eps_i(m) = 0`.
pub fn apply_e(cfg: &CrystalConfig, m: &Monomial, i: u32) -> Result<Option<Monomial>, CrystalError> {
    cfg.check_color(i)?;
    let profile = color_profile(m, i);
    let sums = partial_sums(&profile);
    let total = *sums.last().unwrap();
    let phi = *sums.iter().max().unwrap();
    if phi == total {
        return Ok(None);
    }
    // largest n with sum_{k<=n} = phi: the sum stays at S_k until the next
    // support point, and S_last = total < phi so k is not the last one
    let k = sums.iter().rposition(|&x| x == phi).unwrap();
    let n = profile[k].0 - 1;
    Ok(Some(m * &a_monomial(cfg, n, i)?))
}

/// `f~_i m`, or `None` when `phi_i(m) = 0`.
pub fn apply_f(cfg: &CrystalConfig, m: &Monomial, i: u32) -> Result<Option<Monomial>, CrystalError> {
    cfg.check_color(i)?;
    let profile = color_profile(m, i);
    let sums = partial_sums(&profile);
    let phi = *sums.iter().max().unwrap();
    if phi == 0 {
        return Ok(None);
    }
    // smallest n with sum_{k<=n} = phi; phi > 0 so it sits at a support point
    let k = sums.iter().position(|&x| x == phi).unwrap();
    let n = profile[k - 1].0;
    Ok(Some(m * &a_monomial(cfg, n, i)?.inv()))
}

/// `m, e~_i m, e~_i^2 m, ...` until the string ends.
pub fn e_string(cfg: &CrystalConfig, m: &Monomial, i: u32) -> Result<Vec<Monomial>, CrystalError> {
    let mut out = vec![m.clone()];
    while let Some(next) = apply_e(cfg, out.last().unwrap(), i)? {
        out.push(next);
    }
    Ok(out)
}

/// `m, f~_i m, f~_i^2 m, ...` until the string ends.
pub fn f_string(cfg: &CrystalConfig, m: &Monomial, i: u32) -> Result<Vec<Monomial>, CrystalError> {
    let mut out = vec![m.clone()];
    while let Some(next) = apply_f(cfg, out.last().unwrap(), i)? {
        out.push(next);
    }
    Ok(out)
}
