//! Named cross-checks between the modules, run over every small instance.
//!
//! Each check returns a [`Report`] listing the instances it covered and any
//! failures. Instances are processed in parallel and reported in a fixed
//! order; random points come from a generator seeded by the instance, so
//! the output does not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bruhat::{
    self, delta_g, delta_l_of, phi_map, random_point, x_g, xbar_g, xl_matrix, MinorSpec, Torus, WordSpec,
};
use crate::cluster::{is_sign_skew_symmetric, mutate, seed_matrix, skew_symmetrizer};
use crate::crystal::{
    self, apply_e, apply_f, component, demazure_polynomial, CrystalConfig, CrystalGraph, DemazureSpec, Sign,
    Weight, DEFAULT_CAP,
};
use crate::laurent::{Monomial, Rational, VarId};
use crate::paths::{self, closed_form_sum, d1_closed_form, enumerate, label, path_sum, PathSpec};

/// The checks [`run`] knows about.
pub const CHECKS: &[&str] = &[
    "thm5-5", "prop6-1", "prop6-10", "thm5-6", "prop5-1", "prop2-4", "extension", "axioms", "cluster",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub details: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report { name: name.to_string(), cases: 0, details: Vec::new(), failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    fn absorb(&mut self, outcome: Outcome) {
        self.cases += outcome.cases;
        self.details.extend(outcome.details);
        self.failures.extend(outcome.failures);
    }

    /// First line of the report: `PASS name: n cases` or `FAIL ...`.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {}: {} cases, {} failures", self.name, self.cases, self.failures.len())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        for e in &self.failures {
            writeln!(f, "  failed: {e}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Outcome {
    cases: usize,
    details: Vec<String>,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn collect(name: &str, outcomes: Vec<Outcome>) -> Report {
    let mut report = Report::new(name);
    for o in outcomes {
        report.absorb(o);
    }
    report
}

fn instance_rng(seed: u64, tag: &[u64]) -> ChaCha8Rng {
    let mixed = tag.iter().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |acc, &x| {
        (acc ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(17)
    });
    ChaCha8Rng::seed_from_u64(mixed)
}

fn words(min_r: u32, max_r: u32) -> Vec<WordSpec> {
    (min_r.max(1)..=max_r).flat_map(WordSpec::all).collect()
}

/// The word truncated after the last occurrence of color `d`; minors of
/// color `d` do not see the letters after it.
pub fn truncate_to_color(w: &WordSpec, d: u32) -> Option<WordSpec> {
    let m = (1..=w.cycles()).rev().find(|&c| w.position(c - 1, d).is_some())?;
    WordSpec::new(w.rank(), m, d).ok()
}

/// Lowest monomial `Π_{s=m'}^{m-1} Y[s,d]^{-1}` and Demazure word `i_1..i_k`
/// whose Demazure polynomial is `Δ^L(k)`, for a `k` with `i_k = i_n`.
pub fn minor_demazure_spec(spec: &MinorSpec) -> Result<DemazureSpec, crystal::CrystalError> {
    let w = spec.word();
    let cfg = CrystalConfig::new(w.rank())?;
    let d = spec.d();
    let seed = Monomial::from_factors((spec.m_prime()..w.cycles()).map(|s| (VarId::new(s as i32, d), -1)));
    DemazureSpec::new(&cfg, w.letters()[..spec.k()].to_vec(), Sign::Minus, seed)
}

/// Every `(word, k)` with `i_k = i_n`, over ranks `min_r..=max_r`.
pub fn main_instances(min_r: u32, max_r: u32) -> Vec<MinorSpec> {
    words(min_r, max_r).into_iter().flat_map(MinorSpec::with_last_color).collect()
}

/// Demazure polynomial = `Δ^L` = path sum = closed form, for every word of
/// rank `2..=max_r` and every `k` with `i_k = i_n`.
pub fn three_way_sweep(max_r: u32) -> Report {
    let outcomes: Vec<Outcome> = words(2, max_r)
        .par_iter()
        .map(|w| {
            let mut out = Outcome::default();
            let xl = xl_matrix(w);
            let cfg = CrystalConfig::new(w.rank()).unwrap();
            for spec in MinorSpec::with_last_color(*w) {
                let dl = delta_l_of(&xl, &spec);
                let family = PathSpec::from_minor(&spec);
                let dem = minor_demazure_spec(&spec)
                    .map_err(|e| e.to_string())
                    .and_then(|ds| demazure_polynomial(&cfg, &ds, DEFAULT_CAP).map_err(|e| e.to_string()));
                let ps = path_sum(&family, w.rank()).map_err(|e| e.to_string());
                let cf = closed_form_sum(&family, w.rank()).map_err(|e| e.to_string());
                let ok = matches!((&dem, &ps, &cf), (Ok(a), Ok(b), Ok(c)) if *a == dl && *b == dl && *c == dl);
                out.check(ok, || format!("{spec}: demazure {dem:?}, delta {dl}, paths {ps:?}, closed {cf:?}"));
                out.details.push(format!("r={} {spec}: {} terms", w.rank(), dl.len()));
            }
            out
        })
        .collect();
    collect("thm5-5", outcomes)
}

/// `Δ^L(k)` = path sum over `X_d(m, m')` for every position `k` of every word
/// of rank `1..=max_r`, with `m` counted after truncating the word to color
/// `d`.
pub fn minor_path_sweep(max_r: u32) -> Report {
    let outcomes: Vec<Outcome> = words(1, max_r)
        .par_iter()
        .map(|w| {
            let mut out = Outcome::default();
            let xl = xl_matrix(w);
            for k in 1..=w.len() {
                let spec = MinorSpec::new(*w, k).unwrap();
                let dl = delta_l_of(&xl, &spec);
                let trunc = truncate_to_color(w, spec.d()).unwrap();
                let family = PathSpec::new(spec.d(), trunc.cycles(), spec.m_prime()).unwrap();
                let ps = path_sum(&family, w.rank());
                let count = enumerate(&family).len();
                out.check(ps.as_ref() == Ok(&dl) && dl.len() == count, || {
                    format!("{spec}: delta {dl} vs paths {ps:?}")
                });
            }
            out.details.push(format!("r={} {w}: {} positions", w.rank(), w.len()));
            out
        })
        .collect();
    collect("prop6-1", outcomes)
}

/// Closed form = path sum, labels pairwise distinct, and statistics/rebuild
/// inverse to each other, for every path family met at rank `<= max_r`.
pub fn closed_form_sweep(max_r: u32) -> Report {
    let families: BTreeSet<(u32, PathSpec)> = main_instances(1, max_r)
        .iter()
        .map(|s| (s.word().rank(), PathSpec::from_minor(s)))
        .collect();
    let families: Vec<_> = families.into_iter().collect();
    let outcomes: Vec<Outcome> = families
        .par_iter()
        .map(|&(r, family)| {
            let mut out = Outcome::default();
            let ps = path_sum(&family, r);
            let cf = closed_form_sum(&family, r);
            out.check(ps.is_ok() && ps == cf, || format!("r={r} {family}: {ps:?} vs {cf:?}"));
            let paths = enumerate(&family);
            let labels: BTreeSet<Monomial> = paths.iter().filter_map(|p| label(&family, p, r).ok()).collect();
            out.check(labels.len() == paths.len(), || format!("r={r} {family}: repeated labels"));
            let round_trip = paths
                .iter()
                .all(|p| paths::rebuild(&family, &paths::stats(p).k).as_ref() == Ok(p));
            out.check(round_trip, || format!("r={r} {family}: stats do not rebuild the path"));
            out.details.push(format!("r={r} {family}: {} paths", paths.len()));
            out
        })
        .collect();
    collect("prop6-10", outcomes)
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

/// The `d = 1` formula equals `Δ^L(k)` with `binomial(m, m')` terms.
pub fn single_row_sweep(max_r: u32) -> Report {
    let specs: Vec<MinorSpec> = main_instances(1, max_r).into_iter().filter(|s| s.d() == 1).collect();
    let outcomes: Vec<Outcome> = specs
        .par_iter()
        .map(|spec| {
            let mut out = Outcome::default();
            let w = spec.word();
            let (m, mp) = (w.cycles(), spec.m_prime());
            let dl = bruhat::delta_l(spec);
            let f = d1_closed_form(m, mp, w.rank());
            let ok = f.as_ref() == Ok(&dl) && dl.len() as u64 == binomial(m as u64, mp as u64);
            out.check(ok, || format!("{spec}: {f:?} vs {dl}"));
            out.details.push(format!("r={} {spec}: {} terms", w.rank(), dl.len()));
            out
        })
        .collect();
    collect("thm5-6", outcomes)
}

/// `Δ^G(k)(a, t) = a_{m'+1} ... a_{m'+d} Δ^L(k)(t)` at `points` random
/// rational points per position, ranks `1..=max_r`.
pub fn torus_factor_sweep(max_r: u32, points: usize, seed: u64) -> Report {
    let outcomes: Vec<Outcome> = words(1, max_r)
        .par_iter()
        .map(|w| {
            let mut out = Outcome::default();
            let xl = xl_matrix(w);
            for k in 1..=w.len() {
                let spec = MinorSpec::new(*w, k).unwrap();
                let dl = delta_l_of(&xl, &spec);
                let mut rng = instance_rng(seed, &[w.rank() as u64, w.len() as u64, k as u64]);
                for _ in 0..points {
                    let a = Torus::random(w.rank(), &mut rng);
                    let t = random_point(w, &mut rng);
                    let factor: Rational = spec.row_labels().iter().map(|&i| a.get(i).clone()).product();
                    let lhs = delta_g(&spec, &a, &t);
                    let rhs = dl.eval(&t).map(|v| &factor * &v);
                    out.check(matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y), || {
                        format!("{spec} at {a}: {lhs:?} vs {rhs:?}")
                    });
                }
            }
            out.details.push(format!("r={} {w}: {} positions x {points} points", w.rank(), w.len()));
            out
        })
        .collect();
    collect("prop5-1", outcomes)
}

/// `a · x^L(t) = x^G(φ(a, t))` at `points` random rational points per word.
pub fn phi_sweep(max_r: u32, points: usize, seed: u64) -> Report {
    let outcomes: Vec<Outcome> = words(1, max_r)
        .par_iter()
        .map(|w| {
            let mut out = Outcome::default();
            let mut rng = instance_rng(seed, &[w.rank() as u64, w.len() as u64]);
            for _ in 0..points {
                let a = Torus::random(w.rank(), &mut rng);
                let t = random_point(w, &mut rng);
                let ok = match phi_map(w, &a, &t) {
                    Ok((a2, tau)) => xbar_g(w, &a, &t).ok() == x_g(w, &a2, &tau).ok() && xbar_g(w, &a, &t).is_ok(),
                    Err(_) => false,
                };
                out.check(ok, || format!("{w} at {a}"));
            }
            out.details.push(format!("r={} {w}: {points} points", w.rank()));
            out
        })
        .collect();
    collect("prop2-4", outcomes)
}

/// Extending a word by its next standard letter leaves every `Δ^L(k)` with
/// `i_k` different from the new letter unchanged.
pub fn extension_sweep(max_r: u32) -> Report {
    let outcomes: Vec<Outcome> = words(1, max_r)
        .par_iter()
        .filter(|w| w.extension().is_some())
        .map(|w| {
            let mut out = Outcome::default();
            let ext = w.extension().unwrap();
            let new_letter = ext.letter(ext.len());
            let new_var = ext.position_var(ext.len());
            let (xl, xl_ext) = (xl_matrix(w), xl_matrix(&ext));
            for k in (1..=w.len()).filter(|&k| w.letter(k) != new_letter) {
                let before = delta_l_of(&xl, &MinorSpec::new(*w, k).unwrap());
                let after = delta_l_of(&xl_ext, &MinorSpec::new(ext, k).unwrap());
                out.check(before == after && !after.contains_var(new_var), || {
                    format!("k={k} of {w} extended by {new_letter}")
                });
            }
            out.details.push(format!("r={} {w} + {new_letter}", w.rank()));
            out
        })
        .collect();
    collect("extension", outcomes)
}

/// Checks the crystal axioms on every node and color of `g`, that the
/// edges are exactly the `f~` arrows, and that string lengths match
/// `phi` and `eps`.
pub fn check_axioms(cfg: &CrystalConfig, g: &CrystalGraph) -> Vec<String> {
    let mut errors = Vec::new();
    let r = cfg.rank();
    let index = |m: &Monomial| g.index_of(m);
    let mut expected_edges = BTreeSet::new();
    for (x, node) in g.nodes.iter().enumerate() {
        let b = &node.monomial;
        for i in 1..=r {
            let (phi, eps) = (node.phi(i), node.eps(i));
            if phi < 0 || eps < 0 || phi - eps != node.wt.pairing(i) {
                errors.push(format!("{b}: phi/eps/wt mismatch at color {i}"));
            }
            let alpha = Weight::simple_root(cfg, i);
            match apply_e(cfg, b, i).unwrap() {
                Some(up) => {
                    let un = crystal::node_stats(cfg, &up);
                    if un.wt != &node.wt + &alpha || un.eps(i) != eps - 1 || un.phi(i) != phi + 1 {
                        errors.push(format!("{b}: e_{i} breaks wt/eps/phi"));
                    }
                    if apply_f(cfg, &up, i).unwrap().as_ref() != Some(b) {
                        errors.push(format!("{b}: f_{i} e_{i} is not the identity"));
                    }
                    if index(&up).is_none() {
                        errors.push(format!("{b}: e_{i} leaves the component"));
                    }
                }
                None if eps != 0 => errors.push(format!("{b}: e_{i} vanishes with eps = {eps}")),
                None => {}
            }
            match apply_f(cfg, b, i).unwrap() {
                Some(down) => {
                    let dn = crystal::node_stats(cfg, &down);
                    if dn.wt != &node.wt - &alpha || dn.eps(i) != eps + 1 || dn.phi(i) != phi - 1 {
                        errors.push(format!("{b}: f_{i} breaks wt/eps/phi"));
                    }
                    if apply_e(cfg, &down, i).unwrap().as_ref() != Some(b) {
                        errors.push(format!("{b}: e_{i} f_{i} is not the identity"));
                    }
                    match index(&down) {
                        Some(y) => {
                            expected_edges.insert(crystal::Edge { from: x, color: i, to: y });
                        }
                        None => errors.push(format!("{b}: f_{i} leaves the component")),
                    }
                }
                None if phi != 0 => errors.push(format!("{b}: f_{i} vanishes with phi = {phi}")),
                None => {}
            }
            let e_len = crystal::e_string(cfg, b, i).unwrap().len() as i64 - 1;
            let f_len = crystal::f_string(cfg, b, i).unwrap().len() as i64 - 1;
            if e_len != eps || f_len != phi {
                errors.push(format!("{b}: string lengths ({e_len}, {f_len}) vs (eps, phi) = ({eps}, {phi})"));
            }
        }
    }
    let actual: BTreeSet<_> = g.edges.iter().copied().collect();
    if actual != expected_edges {
        errors.push("edge set differs from the f~ arrows".to_string());
    }
    errors
}

/// Crystal axioms on the components of the `B(Λ_3)` example and of every
/// Demazure seed in the main sweep up to `max_r`, plus the dimensions of the
/// fundamental crystals.
pub fn axioms(max_r: u32) -> Report {
    let mut seeds: BTreeSet<(u32, Monomial)> = BTreeSet::new();
    seeds.insert((4, Monomial::var(VarId::new(-1, 3))));
    for spec in main_instances(2, max_r) {
        if let Ok(ds) = minor_demazure_spec(&spec) {
            seeds.insert((spec.word().rank(), ds.seed().clone()));
        }
    }
    let seeds: Vec<_> = seeds.into_iter().collect();
    let mut outcomes: Vec<Outcome> = seeds
        .par_iter()
        .map(|(r, seed)| {
            let mut out = Outcome::default();
            let cfg = CrystalConfig::new(*r).unwrap();
            match component(&cfg, seed, DEFAULT_CAP) {
                Ok(g) => {
                    let errors = check_axioms(&cfg, &g);
                    out.check(errors.is_empty(), || format!("r={r} {seed}: {}", errors.join("; ")));
                    let node = crystal::node_stats(&cfg, seed);
                    if node.phi.iter().all(|&x| x == 0) {
                        out.check(g.sinks() == vec![0], || format!("r={r} {seed}: seed is not the unique sink"));
                    }
                    out.details.push(format!("r={r} {seed}: {} nodes, {} edges", g.len(), g.edges.len()));
                }
                Err(e) => out.check(false, || format!("r={r} {seed}: {e}")),
            }
            out
        })
        .collect();
    let mut sizes = Outcome::default();
    for r in 1..=max_r {
        let cfg = CrystalConfig::new(r).unwrap();
        for d in 1..=r {
            let seed = Monomial::var(VarId::new(1, d));
            let g = component(&cfg, &seed, DEFAULT_CAP);
            let expect = binomial(r as u64 + 1, d as u64) as usize;
            let ok = matches!(&g, Ok(g) if g.len() == expect && g.sources() == vec![0] && check_axioms(&cfg, g).is_empty());
            sizes.check(ok, || format!("r={r} d={d}: expected {expect} nodes"));
        }
    }
    sizes.details.push(format!("fundamental crystals for r <= {max_r}"));
    outcomes.push(sizes);
    collect("axioms", outcomes)
}

/// A random sign-skew-symmetric matrix of the given size: skew-symmetric
/// up to positive column scalings.
pub fn random_sign_skew<R: Rng>(size: usize, rng: &mut R) -> Vec<Vec<i64>> {
    let scale: Vec<i64> = (0..size).map(|_| rng.gen_range(1..=3)).collect();
    let mut a = vec![vec![0i64; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let x = rng.gen_range(-2..=2i64);
            a[i][j] = x * scale[j];
            a[j][i] = -x * scale[i];
        }
    }
    a
}

/// Mutation is an involution on `samples` random matrices up to size
/// `max_size`; seed matrices up to rank `max_r` are skew-symmetrizable and
/// stay sign-skew-symmetric along random mutation sequences of length
/// `steps`.
pub fn cluster_checks(max_r: u32, samples: usize, max_size: usize, steps: usize, seed: u64) -> Report {
    let mut out = Outcome::default();
    let mut rng = instance_rng(seed, &[samples as u64]);
    for _ in 0..samples {
        let size = rng.gen_range(1..=max_size);
        let a = random_sign_skew(size, &mut rng);
        let k = rng.gen_range(0..size);
        let back = mutate(&a, k).and_then(|b| mutate(&b, k));
        out.check(back.as_ref() == Ok(&a), || format!("mutate twice at {k} of {a:?}"));
    }
    out.details.push(format!("{samples} random involution checks up to size {max_size}"));
    for w in words(1, max_r) {
        let b = seed_matrix(&w);
        let principal = b.principal();
        out.check(skew_symmetrizer(&principal).is_some(), || format!("{w}: no skew-symmetrizer"));
        let mut cur = b.clone();
        let mut ok = true;
        for _ in 0..steps {
            let k = cur.cols()[rng.gen_range(0..cur.cols().len())];
            cur = cur.mutate(k).expect("column labels are mutable");
            ok &= is_sign_skew_symmetric(&cur.principal());
        }
        out.check(ok, || format!("{w}: lost sign-skew-symmetry"));
        out.details.push(format!("r={} {w}: {}x{} seed matrix", w.rank(), b.rows().len(), b.cols().len()));
    }
    collect("cluster", vec![out])
}

/// Runs a check by name with its standard parameters.
pub fn run(name: &str, max_r: u32, seed: u64) -> Option<Report> {
    Some(match name {
        "thm5-5" => three_way_sweep(max_r),
        "prop6-1" => minor_path_sweep(max_r),
        "prop6-10" => closed_form_sweep(max_r),
        "thm5-6" => single_row_sweep(max_r),
        "prop5-1" => torus_factor_sweep(max_r, 50, seed),
        "prop2-4" => phi_sweep(max_r, 20, seed),
        "extension" => extension_sweep(max_r),
        "axioms" => axioms(max_r),
        "cluster" => cluster_checks(max_r, 1000, 12, 20, seed),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        let w = WordSpec::longest(4).unwrap();
        assert_eq!(truncate_to_color(&w, 2).unwrap().letters(), vec![1, 2, 3, 4, 1, 2, 3, 1, 2]);
        assert_eq!(truncate_to_color(&w, 4).unwrap().letters(), vec![1, 2, 3, 4]);
        assert_eq!(truncate_to_color(&w, 1).unwrap(), w);
    }

    #[test]
    fn demazure_data_for_six_term_minor() {
        let w = WordSpec::from_word(4, &[1, 2, 3, 4, 1, 2, 3, 1, 2]).unwrap();
        let ds = minor_demazure_spec(&MinorSpec::new(w, 6).unwrap()).unwrap();
        assert_eq!(ds.word(), &[1, 2, 3, 4, 1, 2]);
        assert_eq!(*ds.seed(), Monomial::var_pow(VarId::new(2, 2), -1));
    }

    #[test]
    fn small_sweeps_pass() {
        for name in CHECKS {
            let report = run(name, 3, 1).unwrap();
            assert!(report.passed(), "{report}");
        }
        assert!(run("nope", 3, 1).is_none());
    }

    #[test]
    fn random_matrices_are_sign_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for size in 1..=8 {
            assert!(is_sign_skew_symmetric(&random_sign_skew(size, &mut rng)));
        }
    }
}
