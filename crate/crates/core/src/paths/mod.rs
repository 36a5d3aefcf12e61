//! Lattice paths whose labels are the terms of the minors `Δ^L(k)`.
//!
//! A path in `X_d(m, m')` is a sequence of rows `a^(0), ..., a^(m)` of `d`
//! strictly increasing positive integers, starting at `(1, ..., d)`, ending at
//! `(m'+1, ..., m'+d)`, where each entry either stays or grows by one per
//! step. Step `s` carries the label
//! `Π_i τ_{l_c + a^(s+1)_i - 1} / τ_{l_c + a^(s)_i}` with `c = m - s - 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde_json::{json, Value};
use thiserror::Error;

use crate::bruhat::MinorSpec;
use crate::crystal::{tau_render, CrystalConfig};
use crate::laurent::{LaurentPoly, Monomial, VarId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid path family: {0}")]
    InvalidSpec(String),
    #[error("label needs color {color} in cycle {cycle}, beyond rank {rank}")]
    RankTooSmall { cycle: u32, color: u32, rank: u32 },
    #[error("not a path of the family: {0}")]
    InvalidPath(String),
}

/// The family `X_d(m, m')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSpec {
    d: u32,
    m: u32,
    mprime: u32,
}

impl PathSpec {
    pub fn new(d: u32, m: u32, mprime: u32) -> Result<Self, PathError> {
        if d == 0 || mprime == 0 || mprime > m {
            return Err(PathError::InvalidSpec(format!("d={d} m={m} m'={mprime}")));
        }
        Ok(PathSpec { d, m, mprime })
    }

    /// The family whose label sum is `Δ^L` of `spec`.
    pub fn from_minor(spec: &MinorSpec) -> Self {
        PathSpec { d: spec.d(), m: spec.word().cycles(), mprime: spec.m_prime() }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn mprime(&self) -> u32 {
        self.mprime
    }

    /// Number of stationary steps in every `i`-sequence.
    pub fn stationary(&self) -> u32 {
        self.m - self.mprime
    }
}

impl fmt::Display for PathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}({},{})", self.d, self.m, self.mprime)
    }
}

/// Rows `a^(0), ..., a^(m)`, each of length `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    rows: Vec<Vec<u32>>,
}

impl Path {
    /// Checks the defining conditions against `spec`.
    pub fn new(spec: &PathSpec, rows: Vec<Vec<u32>>) -> Result<Self, PathError> {
        let bad = |why: &str| PathError::InvalidPath(format!("{rows:?}: {why}"));
        let (d, m, mp) = (spec.d as usize, spec.m as usize, spec.mprime);
        if rows.len() != m + 1 || rows.iter().any(|r| r.len() != d) {
            return Err(bad("wrong shape"));
        }
        if rows.iter().any(|r| r[0] == 0 || r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(bad("row not strictly increasing and positive"));
        }
        for pair in rows.windows(2) {
            if pair[0].iter().zip(&pair[1]).any(|(a, b)| *b != *a && *b != *a + 1) {
                return Err(bad("illegal step"));
            }
        }
        if rows[0].iter().enumerate().any(|(i, &a)| a != i as u32 + 1)
            || rows[m].iter().enumerate().any(|(i, &a)| a != mp + i as u32 + 1)
        {
            return Err(bad("wrong endpoints"));
        }
        Ok(Path { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `a^(s)_i`, with `i` 1-based.
    pub fn a(&self, s: usize, i: usize) -> u32 {
        self.rows[s][i - 1]
    }

    /// The `i`-sequence `a^(0)_i, ..., a^(m)_i`.
    pub fn sequence(&self, i: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[i - 1]).collect()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.rows.len() - 1;
        for (s, row) in self.rows.iter().enumerate() {
            if s > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{}", vertex_name(m - s, row))?;
        }
        Ok(())
    }
}

fn vertex_name(level: usize, row: &[u32]) -> String {
    let parts: Vec<String> = row.iter().map(|a| a.to_string()).collect();
    format!("({level};{})", parts.join(","))
}

/// All of `X_d(m, m')`, in lexicographic order of the flattened rows.
pub fn enumerate(spec: &PathSpec) -> Vec<Path> {
    let (d, m) = (spec.d as usize, spec.m as usize);
    let mut rows: Vec<Vec<u32>> = vec![(1..=spec.d).collect()];
    let mut out = Vec::new();
    extend_rows(spec, &mut rows, &mut vec![0; d], 0, &mut out);
    debug_assert!(out.iter().all(|p: &Path| p.rows.len() == m + 1));
    out
}

fn extend_rows(spec: &PathSpec, rows: &mut Vec<Vec<u32>>, next: &mut Vec<u32>, i: usize, out: &mut Vec<Path>) {
    let s = rows.len() - 1;
    if s == spec.m as usize {
        out.push(Path { rows: rows.clone() });
        return;
    }
    if i == spec.d as usize {
        rows.push(next.clone());
        extend_rows(spec, rows, &mut vec![0; next.len()], 0, out);
        rows.pop();
        return;
    }
    let prev = rows[s][i];
    let target = spec.mprime + i as u32 + 1;
    let remaining = spec.m - s as u32 - 1;
    for a in [prev, prev + 1] {
        if a > target || a + remaining < target || (i > 0 && a <= next[i - 1]) {
            continue;
        }
        next[i] = a;
        extend_rows(spec, rows, next, i + 1, out);
    }
}

/// `τ_{l_c + j}` as a variable, `None` for the unit boundary values `j = 0`
/// and `j = r + 1`.
fn tau_var(r: u32, c: u32, j: u32) -> Result<Option<VarId>, PathError> {
    if j == 0 || j == r + 1 {
        return Ok(None);
    }
    if c >= r || j > r - c {
        return Err(PathError::RankTooSmall { cycle: c, color: j, rank: r });
    }
    Ok(Some(VarId::new(c as i32, j)))
}

/// `C̄(c, j) = τ_{l_c + j - 1} / τ_{l_c + j}`.
pub fn c_bar(r: u32, c: u32, j: u32) -> Result<Monomial, PathError> {
    let mut factors = Vec::with_capacity(2);
    if let Some(v) = tau_var(r, c, j - 1)? {
        factors.push((v, 1));
    }
    if let Some(v) = tau_var(r, c, j)? {
        factors.push((v, -1));
    }
    Ok(Monomial::from_factors(factors))
}

/// Label of the step from row `s` to row `s + 1`.
pub fn step_label(spec: &PathSpec, r: u32, from: &[u32], to: &[u32], s: u32) -> Result<Monomial, PathError> {
    let c = spec.m - s - 1;
    let mut factors = Vec::new();
    for (&a, &b) in from.iter().zip(to) {
        if let Some(v) = tau_var(r, c, b - 1)? {
            factors.push((v, 1));
        }
        if let Some(v) = tau_var(r, c, a)? {
            factors.push((v, -1));
        }
    }
    Ok(Monomial::from_factors(factors))
}

/// `Q(p)`, the product of the step labels.
pub fn label(spec: &PathSpec, p: &Path, r: u32) -> Result<Monomial, PathError> {
    let mut q = Monomial::one();
    for (s, pair) in p.rows.windows(2).enumerate() {
        q = &q * &step_label(spec, r, &pair[0], &pair[1], s as u32)?;
    }
    Ok(q)
}

/// `Σ_{p} Q(p)` over `X_d(m, m')`.
pub fn path_sum(spec: &PathSpec, r: u32) -> Result<LaurentPoly, PathError> {
    enumerate(spec).iter().map(|p| label(spec, p, r).map(LaurentPoly::from)).sum()
}

/// Stationary steps and the values where they happen. Indexed `[j-1][i-1]`
/// with `j` the stationary step count and `i` the sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathStats {
    pub q: Vec<Vec<u32>>,
    pub k: Vec<Vec<u32>>,
}

/// `q^(j)_i`: the `j`-th `s` with `a^(s)_i = a^(s+1)_i`; `k^(j)_i = a^(q)_i`.
pub fn stats(p: &Path) -> PathStats {
    let d = p.rows[0].len();
    let mut per_seq_q: Vec<Vec<u32>> = Vec::with_capacity(d);
    let mut per_seq_k: Vec<Vec<u32>> = Vec::with_capacity(d);
    for i in 1..=d {
        let seq = p.sequence(i);
        let qs: Vec<u32> = (0..seq.len() - 1).filter(|&s| seq[s] == seq[s + 1]).map(|s| s as u32).collect();
        per_seq_k.push(qs.iter().map(|&s| seq[s as usize]).collect());
        per_seq_q.push(qs);
    }
    let steps = per_seq_q.first().map_or(0, Vec::len);
    let transpose = |v: &Vec<Vec<u32>>| (0..steps).map(|j| v.iter().map(|row| row[j]).collect()).collect();
    PathStats { q: transpose(&per_seq_q), k: transpose(&per_seq_k) }
}

/// The path whose `k` statistics are `k` (indexed `[j-1][i-1]`).
pub fn rebuild(spec: &PathSpec, k: &[Vec<u32>]) -> Result<Path, PathError> {
    let (d, m) = (spec.d as usize, spec.m as usize);
    if k.len() != spec.stationary() as usize || k.iter().any(|row| row.len() != d) {
        return Err(PathError::InvalidPath(format!("k array {k:?} has the wrong shape")));
    }
    let mut rows = vec![vec![0u32; d]; m + 1];
    for i in 0..d {
        // stationary steps at Q = K + j - i - 1 (1-based i, j)
        let mut stay = BTreeSet::new();
        for (j, row) in k.iter().enumerate() {
            let q = row[i] as i64 + j as i64 - i as i64 - 1;
            if q < 0 || q >= m as i64 || !stay.insert(q as usize) {
                return Err(PathError::InvalidPath(format!("k array {k:?} is not admissible")));
            }
        }
        rows[0][i] = i as u32 + 1;
        for s in 0..m {
            rows[s + 1][i] = rows[s][i] + u32::from(!stay.contains(&s));
        }
    }
    Path::new(spec, rows)
}

/// Every `K` array (indexed `[j-1][i-1]`) with rows strictly increasing and
/// bounded by `m' + d`, and columns weakly increasing within `[i, m' + i]`.
pub fn k_arrays(spec: &PathSpec) -> Vec<Vec<Vec<u32>>> {
    let (d, rows) = (spec.d as usize, spec.stationary() as usize);
    let mut out = Vec::new();
    let mut cur = vec![vec![0u32; d]; rows];
    fill_k(spec, &mut cur, 0, 0, &mut out);
    out
}

fn fill_k(spec: &PathSpec, cur: &mut Vec<Vec<u32>>, j: usize, i: usize, out: &mut Vec<Vec<Vec<u32>>>) {
    let d = spec.d as usize;
    if j == cur.len() {
        out.push(cur.clone());
        return;
    }
    if i == d {
        fill_k(spec, cur, j + 1, 0, out);
        return;
    }
    let col = i as u32 + 1;
    let mut lo = if j == 0 { col } else { cur[j - 1][i] };
    if i > 0 {
        lo = lo.max(cur[j][i - 1] + 1);
    }
    let hi = (spec.mprime + col).min(spec.mprime + spec.d);
    for v in lo..=hi {
        cur[j][i] = v;
        fill_k(spec, cur, j, i + 1, out);
    }
}

/// `Σ_K Π_{i,j} C̄(m - K^(j)_i - j + i, K^(j)_i)` over [`k_arrays`].
pub fn closed_form_sum(spec: &PathSpec, r: u32) -> Result<LaurentPoly, PathError> {
    let m = spec.m as i64;
    let mut total = LaurentPoly::zero();
    for k in k_arrays(spec) {
        let mut term = Monomial::one();
        for (j, row) in k.iter().enumerate() {
            for (i, &kk) in row.iter().enumerate() {
                let c = m - kk as i64 - (j as i64 + 1) + (i as i64 + 1);
                term = &term * &c_bar(r, c as u32, kk)?;
            }
        }
        total = total + LaurentPoly::from(term);
    }
    Ok(total)
}

fn combinations(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The `d = 1` formula: a sum over the `m'`-subsets `J` of `[0, m-1]`; each
/// step `i` outside `J` contributes `τ_{l_c + ν} / τ_{l_c + ν + 1}` with
/// `c = m - 1 - i` and `ν = #{j in J : j < i}`.
pub fn d1_closed_form(m: u32, mprime: u32, r: u32) -> Result<LaurentPoly, PathError> {
    PathSpec::new(1, m, mprime)?;
    let mut total = LaurentPoly::zero();
    for js in combinations(m, mprime) {
        let mut term = Monomial::one();
        for i in (0..m).filter(|i| !js.contains(i)) {
            let nu = js.iter().filter(|&&j| j < i).count() as u32;
            term = &term * &c_bar(r, m - 1 - i, nu + 1)?;
        }
        total = total + LaurentPoly::from(term);
    }
    Ok(total)
}

/// Graphviz text for the union of all paths, steps labeled in `τ` names.
pub fn to_dot(spec: &PathSpec, r: u32) -> Result<String, PathError> {
    let cfg = CrystalConfig::new(r).map_err(|e| PathError::InvalidSpec(e.to_string()))?;
    let m = spec.m as usize;
    let mut vertices: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    type Vertex = (usize, Vec<u32>);
    let mut edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for p in enumerate(spec) {
        for s in 0..m {
            edges.insert(((s, p.rows[s].clone()), (s + 1, p.rows[s + 1].clone())));
        }
        for s in 0..=m {
            let next = vertices.len();
            vertices.entry((s, p.rows[s].clone())).or_insert(next);
        }
    }
    let mut out = String::from("digraph paths {\n");
    let ordered: BTreeMap<usize, &(usize, Vec<u32>)> = vertices.iter().map(|(k, &v)| (v, k)).collect();
    for (idx, (s, row)) in ordered {
        let _ = writeln!(out, "  v{idx} [label=\"{}\"];", vertex_name(m - s, row));
    }
    for (from, to) in &edges {
        let lab = step_label(spec, r, &from.1, &to.1, from.0 as u32)?;
        let text = tau_render(&cfg, &lab).map_err(|e| PathError::InvalidSpec(e.to_string()))?;
        let _ = writeln!(out, "  v{} -> v{} [label=\"{text}\"];", vertices[from], vertices[to]);
    }
    out.push_str("}\n");
    Ok(out)
}

/// `[{"rows": [[...]], "label": "τ text", "monomial": <poly json>}, ...]`.
pub fn to_json(spec: &PathSpec, r: u32) -> Result<Value, PathError> {
    let cfg = CrystalConfig::new(r).map_err(|e| PathError::InvalidSpec(e.to_string()))?;
    let mut out = Vec::new();
    for p in enumerate(spec) {
        let q = label(spec, &p, r)?;
        let text = tau_render(&cfg, &q).map_err(|e| PathError::InvalidSpec(e.to_string()))?;
        out.push(json!({
            "rows": p.rows,
            "label": text,
            "monomial": LaurentPoly::from(q).to_json(),
        }));
    }
    Ok(Value::Array(out))
}
