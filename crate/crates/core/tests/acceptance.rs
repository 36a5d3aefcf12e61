//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use crystal_minors::bruhat::WordSpec;
use crystal_minors::cli;
use crystal_minors::crystal::{component, parse_tau_poly, tau_render, var_of_tau, CrystalConfig, DEFAULT_CAP};
use crystal_minors::paths::{enumerate, label, PathSpec};
use crystal_minors::verify::{self, Report};
use crystal_minors::{Monomial, VarId};

const SIX_TERMS: &str = "τ_2/τ_4 + τ_3τ_5/(τ_4τ_6) + τ_5/τ_7 + τ_3/(τ_4τ_8) + τ_6/(τ_7τ_8) + 1/τ_9";

const SEED: u64 = 20_240_607;

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn from_report(report: Report, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut note = format!("{} cases in {:.1?}", report.cases, elapsed);
    if let Some(first) = report.failures.first() {
        note += &format!("; first failure: {first}");
    }
    if !in_time {
        note += " (too slow)";
    }
    outcome(report.passed() && in_time, note)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn six_term_minor() -> Outcome {
    let (result, elapsed) = timed(|| {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = ["crystal-minors", "minor", "--r", "4", "--word", "1,2,3,4,1,2,3,1,2,1", "--k", "6"];
        let code = cli::run(args, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    });
    let (code, text) = result;
    let ok = code == 0 && text.trim_end() == SIX_TERMS && elapsed < Duration::from_secs(1);
    outcome(ok, format!("exit {code}, {:?} in {elapsed:.1?}", text.trim_end()))
}

// The ten nodes and twelve arrows of the rank-4 component through Y[-1,3].
const NODES: [&str; 10] = [
    "τ_{-2}",
    "τ_{-1}τ_2/τ_3",
    "τ_2/τ_4",
    "τ_{-1}τ_5/τ_6",
    "τ_3τ_5/(τ_4τ_6)",
    "τ_5/τ_7",
    "τ_{-1}/τ_8",
    "τ_3/(τ_4τ_8)",
    "τ_6/(τ_7τ_8)",
    "1/τ_9",
];

const ARROWS: [(usize, u32, usize); 12] = [
    (0, 3, 1),
    (1, 4, 2),
    (1, 2, 3),
    (3, 4, 4),
    (3, 1, 6),
    (6, 4, 7),
    (2, 2, 4),
    (4, 3, 5),
    (4, 1, 7),
    (5, 1, 8),
    (7, 3, 8),
    (8, 2, 9),
];

fn fundamental_example() -> Outcome {
    let (result, elapsed) = timed(|| {
        let cfg = CrystalConfig::new(4).unwrap();
        let g = component(&cfg, &Monomial::var(VarId::new(-1, 3)), DEFAULT_CAP).unwrap();
        let rendered: BTreeSet<String> = g.monomials().map(|m| tau_render(&cfg, m).unwrap()).collect();
        let expected: BTreeSet<String> = NODES.iter().map(|s| s.to_string()).collect();
        let parsed: Vec<Monomial> = NODES
            .iter()
            .map(|s| parse_tau_poly(4, s).unwrap().monomials().next().unwrap().clone())
            .collect();
        let arrows: BTreeSet<(Monomial, u32, Monomial)> =
            ARROWS.iter().map(|&(a, i, b)| (parsed[a].clone(), i, parsed[b].clone())).collect();
        let edges: BTreeSet<(Monomial, u32, Monomial)> = g
            .edges
            .iter()
            .map(|e| (g.nodes[e.from].monomial.clone(), e.color, g.nodes[e.to].monomial.clone()))
            .collect();
        (g.len(), g.edges.len(), rendered == expected, edges == arrows)
    });
    let (nodes, edges, same_nodes, same_edges) = result;
    let ok = nodes == 10 && edges == 12 && same_nodes && same_edges && elapsed < Duration::from_secs(1);
    outcome(ok, format!("{nodes} nodes, {edges} edges, nodes match: {same_nodes}, arrows match: {same_edges}"))
}

// Path p_j of X_2(3,2) and its label with l_s left symbolic: numerator and
// denominator as (s, j) pairs meaning τ_{l_s + j}.
type Symbolic = (&'static str, &'static [(i32, i64)], &'static [(i32, i64)]);

const EXAMPLE_PATHS: [Symbolic; 6] = [
    ("(3;1,2) -> (2;1,2) -> (1;2,3) -> (0;3,4)", &[], &[(2, 2)]),
    ("(3;1,2) -> (2;1,3) -> (1;2,3) -> (0;3,4)", &[(1, 2)], &[(2, 1), (1, 3)]),
    ("(3;1,2) -> (2;1,3) -> (1;2,4) -> (0;3,4)", &[(0, 3)], &[(2, 1), (0, 4)]),
    ("(3;1,2) -> (2;2,3) -> (1;2,3) -> (0;3,4)", &[(1, 1)], &[(1, 3)]),
    ("(3;1,2) -> (2;2,3) -> (1;2,4) -> (0;3,4)", &[(1, 1), (0, 3)], &[(1, 2), (0, 4)]),
    ("(3;1,2) -> (2;2,3) -> (1;3,4) -> (0;3,4)", &[(0, 2)], &[(0, 4)]),
];

fn symbolic_label(r: u32, num: &[(i32, i64)], den: &[(i32, i64)]) -> Monomial {
    let l = |s: i32| (s as i64) * r as i64 - (s as i64) * (s as i64 - 1) / 2;
    let factor = |&(s, j): &(i32, i64), e: i32| (var_of_tau(r, l(s) + j).unwrap(), e);
    Monomial::from_factors(num.iter().map(|x| factor(x, 1)).chain(den.iter().map(|x| factor(x, -1))))
}

fn example_paths() -> Outcome {
    let spec = PathSpec::new(2, 3, 2).unwrap();
    let (result, elapsed) = timed(|| {
        let paths = enumerate(&spec);
        let shapes: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
        let expected_shapes: Vec<&str> = EXAMPLE_PATHS.iter().map(|e| e.0).collect();
        let mut labels_ok = true;
        for r in 4..=6 {
            for (p, (_, num, den)) in paths.iter().zip(EXAMPLE_PATHS.iter()) {
                labels_ok &= label(&spec, p, r).ok() == Some(symbolic_label(r, num, den));
            }
        }
        (paths.len(), shapes == expected_shapes, labels_ok)
    });
    let (count, shapes_ok, labels_ok) = result;
    let ok = count == 6 && shapes_ok && labels_ok && elapsed < Duration::from_secs(1);
    outcome(ok, format!("{count} paths, paths match: {shapes_ok}, labels match for r = 4..6: {labels_ok}"))
}

fn binomial_sizes_note() -> String {
    let words: usize = (2..=5).map(|r| WordSpec::all(r).count()).sum();
    format!("{words} words")
}

type Criterion = Box<dyn Fn() -> Outcome>;

fn main() -> ExitCode {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("six-term minor from the command line", Box::new(six_term_minor)),
        ("rank-4 fundamental crystal graph", Box::new(fundamental_example)),
        ("paths of X_2(3,2) and their labels", Box::new(example_paths)),
        (
            "Demazure polynomial = minor = path sum = closed form, r <= 5",
            Box::new(|| {
                let (rep, t) = timed(|| verify::three_way_sweep(5));
                let mut o = from_report(rep, t, Some(Duration::from_secs(300)));
                o.note = format!("{} over {}", o.note, binomial_sizes_note());
                o
            }),
        ),
        (
            "d = 1 closed form and binomial term count, r <= 5",
            Box::new(|| {
                let (rep, t) = timed(|| verify::single_row_sweep(5));
                from_report(rep, t, None)
            }),
        ),
        (
            "minor of a x^L(t) = a-factor times the minor of x^L, r <= 4",
            Box::new(|| {
                let (rep, t) = timed(|| verify::torus_factor_sweep(4, 50, SEED));
                from_report(rep, t, None)
            }),
        ),
        (
            "a x^L(t) = x^G(phi(a, t)), r <= 4",
            Box::new(|| {
                let (rep, t) = timed(|| verify::phi_sweep(4, 20, SEED));
                from_report(rep, t, None)
            }),
        ),
        (
            "one-letter extensions leave minors unchanged, r <= 4",
            Box::new(|| {
                let (rep, t) = timed(|| verify::extension_sweep(4));
                from_report(rep, t, None)
            }),
        ),
        (
            "crystal axioms and fundamental crystal sizes, r <= 5",
            Box::new(|| {
                let (rep, t) = timed(|| verify::axioms(5));
                from_report(rep, t, None)
            }),
        ),
        (
            "mutation involution, skew-symmetrizers, sign-skew-symmetry",
            Box::new(|| {
                let (rep, t) = timed(|| verify::cluster_checks(4, 1000, 12, 20, SEED));
                from_report(rep, t, None)
            }),
        ),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("{status} {}: {name} ({})", idx + 1, o.note);
        failed += usize::from(!o.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
