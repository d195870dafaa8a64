//! Real roots and root system axioms of a Cartan graph, and the rank-two
//! combinatorics: quiddity cycles, frieze patterns and polygon triangulations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{generate_cartan_graph, CartanGraph};
use crate::lattice::{RootDatum, SqrtBraidingTensor};
use crate::rosso::GeneralizedCartanMatrix;

pub const DEFAULT_DEPTH_MAX: usize = 64;

pub type Root = Vec<i64>;

/// `sigma_i(x) = x - <x, c_i> alpha_i` with the Cartan row `c_i` of the given object.
pub fn sigma(cartan: &GeneralizedCartanMatrix, i: usize, x: &[i64]) -> Root {
    checked_sigma(cartan, i, x).expect("root coordinates overflow")
}

fn checked_sigma(cartan: &GeneralizedCartanMatrix, i: usize, x: &[i64]) -> Option<Root> {
    let pairing = x.iter().zip(cartan.row(i)).try_fold(0i64, |acc, (a, c)| acc.checked_add(a.checked_mul(*c)?))?;
    let mut out = x.to_vec();
    out[i] = out[i].checked_sub(pairing)?;
    Some(out)
}

/// Real roots `R^a` of every object of a Cartan graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    roots: Vec<BTreeSet<Root>>,
    depth: usize,
}

impl RootSystem {
    pub fn roots(&self, a: usize) -> &BTreeSet<Root> {
        &self.roots[a]
    }

    pub fn positive(&self, a: usize) -> Vec<Root> {
        self.roots[a].iter().filter(|r| r.iter().all(|&x| x >= 0)).cloned().collect()
    }

    pub fn objects(&self) -> usize {
        self.roots.len()
    }

    /// Number of closure rounds needed before the sets stabilized.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Replaces the root set of one object (used to build negative controls).
    pub fn with_roots(mut self, a: usize, roots: BTreeSet<Root>) -> Self {
        self.roots[a] = roots;
        self
    }
}

/// Closure of the simple roots under `R^a <- sigma_i^a(R^{rho_i(a)})`, one
/// reflection per round.
pub fn real_roots(g: &CartanGraph, depth_max: usize) -> Result<RootSystem> {
    let n = g.rank();
    let simple: BTreeSet<Root> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut roots = vec![simple; g.len()];
    for round in 0..=depth_max {
        let mut changed = false;
        let mut next = roots.clone();
        for (a, set) in next.iter_mut().enumerate() {
            for i in 0..n {
                let b = g.rho(a, i);
                for r in &roots[b] {
                    let image = checked_sigma(g.cartan(a), i, r).ok_or(Error::DepthExceeded(depth_max))?;
                    changed |= set.insert(image);
                }
            }
        }
        roots = next;
        if !changed {
            return Ok(RootSystem { roots, depth: round });
        }
    }
    Err(Error::DepthExceeded(depth_max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootAxiom {
    R1,
    R2,
    R3,
    R4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCheck {
    pub axiom: RootAxiom,
    pub object: usize,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for RootCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{:?} object {}: {verdict}", self.axiom, self.object)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootReport {
    pub checks: Vec<RootCheck>,
}

impl RootReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, axiom: RootAxiom) -> bool {
        self.checks.iter().filter(|c| c.axiom == axiom).all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RootCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// `m_{ij}^a = |R^a cap (N_0 alpha_i + N_0 alpha_j)|`.
pub fn m_ij(roots: &BTreeSet<Root>, i: usize, j: usize) -> usize {
    roots.iter().filter(|r| r.iter().enumerate().all(|(k, &x)| if k == i || k == j { x >= 0 } else { x == 0 })).count()
}

pub fn validate_root_axioms(g: &CartanGraph, rs: &RootSystem) -> RootReport {
    let n = g.rank();
    let mut report = RootReport::default();
    let mut push = |axiom, object, problems: Vec<String>| {
        report.checks.push(RootCheck { axiom, object, passed: problems.is_empty(), detail: problems.join("; ") });
    };
    for a in 0..g.len() {
        let set = rs.roots(a);

        let mut problems = Vec::new();
        for r in set {
            let pos = r.iter().all(|&x| x >= 0);
            let neg = r.iter().all(|&x| x <= 0);
            if pos == neg {
                problems.push(format!("{r:?} is neither positive nor negative"));
            }
            let minus: Root = r.iter().map(|x| -x).collect();
            if !set.contains(&minus) {
                problems.push(format!("{r:?} present without its negative"));
            }
        }
        push(RootAxiom::R1, a, problems);

        let mut problems = Vec::new();
        for i in 0..n {
            let on_line: BTreeSet<i64> =
                set.iter().filter(|r| r.iter().enumerate().all(|(k, &x)| k == i || x == 0)).map(|r| r[i]).collect();
            if on_line != BTreeSet::from([-1, 1]) {
                problems.push(format!("multiples of alpha_{}: {on_line:?}", i + 1));
            }
        }
        push(RootAxiom::R2, a, problems);

        let mut problems = Vec::new();
        for i in 0..n {
            let b = g.rho(a, i);
            let image: BTreeSet<Root> = set.iter().map(|r| sigma(g.cartan(a), i, r)).collect();
            if &image != rs.roots(b) {
                problems.push(format!("sigma_{}(R^{a}) != R^{b}", i + 1));
            }
        }
        push(RootAxiom::R3, a, problems);

        let mut problems = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = m_ij(set, i, j);
                let mut b = a;
                for _ in 0..m {
                    b = g.rho(g.rho(b, j), i);
                }
                if b != a {
                    problems.push(format!("(rho_{} rho_{})^{m} moves object {a} to {b}", i + 1, j + 1));
                }
            }
        }
        push(RootAxiom::R4, a, problems);
    }
    report
}

/// Cyclic sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuiddityCycle(Vec<u64>);

impl QuiddityCycle {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotAQuiddityCycle("empty sequence".into()));
        }
        if entries.contains(&0) {
            return Err(Error::NotAQuiddityCycle("entries must be positive".into()));
        }
        Ok(Self(entries))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|e| Error::NotAQuiddityCycle(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `sum c = 3N - 6`.
    pub fn has_triangulation_sum(&self) -> bool {
        self.len() >= 3 && self.sum() == 3 * self.len() as u64 - 6
    }

    /// Lexicographically smallest rotation of the sequence or its reverse.
    pub fn canonical(&self) -> Self {
        let n = self.len();
        let mut reversed = self.0.clone();
        reversed.reverse();
        let mut best = self.0.clone();
        for base in [&self.0, &reversed] {
            for r in 0..n {
                let rot: Vec<u64> = (0..n).map(|t| base[(r + t) % n]).collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        Self(best)
    }

    /// `prod_t [[c_t, -1], [1, 0]]` over one period.
    pub fn continuant_product(&self) -> [[i128; 2]; 2] {
        self.0.iter().fold([[1, 0], [0, 1]], |acc, &c| eta_mul(acc, c))
    }
}

impl fmt::Display for QuiddityCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn eta_mul(acc: [[i128; 2]; 2], c: u64) -> [[i128; 2]; 2] {
    let c = c as i128;
    [[acc[0][0] * c + acc[0][1], -acc[0][0]], [acc[1][0] * c + acc[1][1], -acc[1][0]]]
}

/// Negated Cartan entries along the alternating walk `1, 2, 1, ...` from
/// `start`: the `t`-th entry is `-c_{i, other}` at the current object, which
/// is then replaced by its reflection in `i`. The walk is periodic; the cycle
/// is its shortest prefix whose continuant product is `-I`, whose length is
/// the number of positive roots.
pub fn quiddity_cycle(g: &CartanGraph, start: usize, cap: usize) -> Result<QuiddityCycle> {
    if g.rank() != 2 {
        return Err(Error::InvalidArguments(format!("quiddity cycles need rank 2, got {}", g.rank())));
    }
    if start >= g.len() {
        return Err(Error::InvalidArguments(format!("object {start} out of range")));
    }
    let mut walk = Vec::new();
    let (mut a, mut i) = (start, 0usize);
    loop {
        walk.push((-g.cartan(a).get(i, 1 - i)) as u64);
        a = g.rho(a, i);
        i = 1 - i;
        if (a, i) == (start, 0) {
            break;
        }
    }
    let mut acc = [[1i128, 0], [0, 1]];
    let mut seq = Vec::new();
    for t in 0..cap {
        let c = walk[t % walk.len()];
        seq.push(c);
        acc = eta_mul(acc, c);
        if acc == [[-1, 0], [0, -1]] {
            return QuiddityCycle::new(seq);
        }
        if acc.iter().flatten().any(|x| x.unsigned_abs() > 1 << 100) {
            break;
        }
    }
    Err(Error::NonPeriodic(cap))
}

/// Frieze rows `F(i, i), ..., F(i, i + N)` with `F(i, i) = 0`, `F(i, i+1) = 1`
/// and `F(i, j+1) = c_j F(i, j) - F(i, j-1)`, `c` indexed from 1 cyclically.
pub fn frieze_rows(c: &QuiddityCycle) -> Result<Vec<Vec<i64>>> {
    let n = c.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![0i64, 1];
        for j in i + 1..i + n {
            let cj = c.entries()[(j + n - 1) % n] as i64;
            let len = row.len();
            row.push(cj * row[len - 1] - row[len - 2]);
        }
        let interior_ok = row[1..n].iter().all(|&x| x > 0);
        if !interior_ok || row[n] != 0 {
            return Err(Error::NotAQuiddityCycle(format!("frieze row {i} is {row:?}")));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Staggered layout: row `r` starts `r` cells to the right, so that column
/// `j` holds every `F(i, j)`.
pub fn render_frieze(rows: &[Vec<i64>]) -> String {
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        let mut line = " ".repeat(r * (width + 1));
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        line.push_str(&cells.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

/// Triangulated convex `n`-gon; vertices `0..n` in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub vertices: usize,
    pub diagonals: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Number of triangles at each vertex.
    pub fn vertex_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.vertices];
        for t in &self.triangles {
            for &v in t {
                counts[v] += 1;
            }
        }
        counts
    }

    pub fn is_non_crossing(&self) -> bool {
        let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| {
            let inside = |x: usize| a < x && x < b;
            let shared = a == c || a == d || b == c || b == d;
            !shared && inside(c) != inside(d)
        };
        self.diagonals.iter().enumerate().all(|(k, &p)| self.diagonals[k + 1..].iter().all(|&q| !crosses(p, q)))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph triangulation {\n");
        for v in 0..self.vertices {
            let _ = writeln!(out, "  {v} -- {};", (v + 1) % self.vertices);
        }
        for (a, b) in &self.diagonals {
            let _ = writeln!(out, "  {a} -- {b} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

/// Ear cutting: repeatedly remove the lowest-index remaining vertex with
/// count 1, joining its neighbours by a diagonal.
pub fn triangulate(c: &QuiddityCycle) -> Result<Triangulation> {
    let n = c.len();
    if n < 3 {
        return Err(Error::NotAQuiddityCycle(format!("need at least 3 vertices, got {n}")));
    }
    let mut counts: Vec<u64> = c.entries().to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut diagonals = Vec::new();
    let mut triangles = Vec::new();
    while active.len() > 3 {
        let pos = active
            .iter()
            .position(|&v| counts[v] == 1)
            .ok_or_else(|| Error::NotAQuiddityCycle(format!("no ear among {} remaining vertices", active.len())))?;
        let len = active.len();
        let (prev, ear, next) = (active[(pos + len - 1) % len], active[pos], active[(pos + 1) % len]);
        for v in [prev, next] {
            if counts[v] < 2 {
                return Err(Error::NotAQuiddityCycle(format!("vertex {v} runs out of triangles")));
            }
            counts[v] -= 1;
        }
        diagonals.push((prev.min(next), prev.max(next)));
        triangles.push(sorted3(prev, ear, next));
        active.remove(pos);
    }
    if active.iter().any(|&v| counts[v] != 1) {
        let left: Vec<u64> = active.iter().map(|&v| counts[v]).collect();
        return Err(Error::NotAQuiddityCycle(format!("final triangle has counts {left:?}")));
    }
    triangles.push(sorted3(active[0], active[1], active[2]));
    diagonals.sort_unstable();
    let t = Triangulation { vertices: n, diagonals, triangles };
    debug_assert_eq!(t.vertex_counts(), c.entries());
    Ok(t)
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Parameters of the randomized rank-2 search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub seed: u64,
    pub samples: usize,
    pub degree: usize,
    pub moduli: RangeInclusive<u32>,
    pub m_max: u32,
    pub max_objects: usize,
    pub depth_max: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 200,
            degree: 4,
            moduli: 2..=24,
            m_max: 64,
            max_objects: 5000,
            depth_max: DEFAULT_DEPTH_MAX,
        }
    }
}

/// Which quiddity cycles were realized by random rank-2 tensors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub samples: usize,
    pub undefined_cartan: usize,
    pub object_limit: usize,
    pub infinite_roots: usize,
    /// Orbits whose closure is not a Cartan graph: `modulus: profile: first failure`.
    pub axiom_violations: Vec<String>,
    pub finite: usize,
    /// Finite examples of type `A_1 x A_1`, which have no quiddity cycle.
    pub reducible: usize,
    /// Canonical cycle (up to rotation and reversal) and how often it appeared.
    pub cycles: BTreeMap<String, usize>,
    /// Cycles whose sum or ear cutting contradicted the triangulation picture.
    pub non_triangulable: Vec<String>,
    /// Finite examples where `|R^a_+|` differed from the cycle length.
    pub root_count_mismatches: Vec<String>,
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "undefined Cartan entry: {}", self.undefined_cartan)?;
        writeln!(f, "object limit hit: {}", self.object_limit)?;
        writeln!(f, "infinite root sets: {}", self.infinite_roots)?;
        writeln!(f, "not a Cartan graph: {}", self.axiom_violations.len())?;
        for v in &self.axiom_violations {
            writeln!(f, "  {v}")?;
        }
        writeln!(f, "finite Weyl groupoids: {} ({} of type A1xA1)", self.finite, self.reducible)?;
        writeln!(f, "distinct quiddity cycles: {}", self.cycles.len())?;
        for (c, count) in &self.cycles {
            writeln!(f, "  {c}  x{count}")?;
        }
        writeln!(f, "non-triangulable: {}", self.non_triangulable.len())?;
        for c in &self.non_triangulable {
            writeln!(f, "  {c}")?;
        }
        writeln!(f, "root count mismatches: {}", self.root_count_mismatches.len())?;
        Ok(())
    }
}

/// Random aggregate profile lifted to a rank-2 tensor.
pub fn random_rank2_tensor(rng: &mut impl Rng, degree: usize, moduli: &RangeInclusive<u32>) -> SqrtBraidingTensor {
    let modulus = rng.gen_range(moduli.clone());
    let profile: Vec<i64> = (0..=degree).map(|_| rng.gen_range(0..modulus as i64)).collect();
    SqrtBraidingTensor::from_rank2_profile(RootDatum::new(modulus).expect("modulus >= 1"), &profile)
        .expect("valid profile")
}

pub fn search_rank2(cfg: &SearchConfig) -> SearchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = SearchReport { samples: cfg.samples, ..Default::default() };
    for _ in 0..cfg.samples {
        let t = random_rank2_tensor(&mut rng, cfg.degree, &cfg.moduli);
        let g = match generate_cartan_graph(&t, cfg.m_max, cfg.max_objects) {
            Ok(g) => g,
            Err(Error::UndefinedCartanEntry { .. }) => {
                report.undefined_cartan += 1;
                continue;
            }
            Err(Error::ObjectLimitExceeded(_)) => {
                report.object_limit += 1;
                continue;
            }
            Err(Error::AxiomViolation(why)) => {
                let profile: Vec<u32> = t.gamma_profile(0, 1).expect("rank 2").iter().map(|p| p.exponent()).collect();
                report.axiom_violations.push(format!("M={} profile {profile:?}: {why}", t.modulus()));
                continue;
            }
            Err(e) => panic!("unexpected closure failure: {e}"),
        };
        let roots = match real_roots(&g, cfg.depth_max) {
            Ok(r) => r,
            Err(_) => {
                report.infinite_roots += 1;
                continue;
            }
        };
        report.finite += 1;
        if g.cartan(0).get(0, 1) == 0 {
            report.reducible += 1;
            continue;
        }
        let Ok(c) = quiddity_cycle(&g, 0, 8 * g.len() + 16) else {
            report.non_triangulable.push(format!("no cycle found on {} objects", g.len()));
            continue;
        };
        let key = c.canonical().to_string();
        if !c.has_triangulation_sum() || triangulate(&c).is_err() {
            report.non_triangulable.push(key.clone());
        }
        if roots.positive(0).len() != c.len() {
            report.root_count_mismatches.push(format!("{key}: {} positive roots", roots.positive(0).len()));
        }
        *report.cycles.entry(key).or_insert(0) += 1;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::DEFAULT_MAX_OBJECTS;
    use crate::rosso::DEFAULT_M_MAX;

    fn graph(modulus: u32, profile: &[i64]) -> CartanGraph {
        let t = SqrtBraidingTensor::from_rank2_profile(RootDatum::new(modulus).unwrap(), profile).unwrap();
        generate_cartan_graph(&t, DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap()
    }

    fn a2() -> CartanGraph {
        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(6).unwrap(), &[1, 2, 0, 1]).unwrap();
        generate_cartan_graph(&t, DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap()
    }

    fn cycle(v: &[u64]) -> QuiddityCycle {
        QuiddityCycle::new(v.to_vec()).unwrap()
    }

    #[test]
    fn a2_roots_and_cycle() {
        let g = a2();
        assert!(g.objects().iter().all(|o| o.cartan.rows() == vec![vec![2, -1], vec![-1, 2]]));
        let rs = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
        assert_eq!(rs.positive(0), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(m_ij(rs.roots(0), 0, 1), 3);
        assert!(validate_root_axioms(&g, &rs).all_pass());
        assert_eq!(quiddity_cycle(&g, 0, 100).unwrap(), cycle(&[1, 1, 1]));
    }

    #[test]
    fn diagonal_cartan_gives_simple_roots_only() {
        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(6).unwrap(), &[3, 0, 0, 3]).unwrap();
        let g = generate_cartan_graph(&t, DEFAULT_M_MAX, 10).unwrap();
        let rs = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
        assert_eq!(rs.positive(0), vec![vec![0, 1], vec![1, 0]]);
        // A_1 x A_1 has no polygon
        assert!(matches!(quiddity_cycle(&g, 0, 100), Err(Error::NotAQuiddityCycle(_))));
    }

    #[test]
    fn zeta11_cycle() {
        let g = graph(22, &[1, 1, 1, 1, 1]);
        let c = quiddity_cycle(&g, 0, 1000).unwrap();
        assert_eq!(c, cycle(&[3, 1, 2, 3, 2, 1, 3]));
        assert!(c.has_triangulation_sum());
        let rs = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
        assert!(validate_root_axioms(&g, &rs).all_pass());
    }

    #[test]
    fn zeta7_cycle() {
        let g = graph(14, &[4, 1, 4, 1, 1]);
        let c = quiddity_cycle(&g, 0, 1000).unwrap();
        assert_eq!(c, cycle(&[2, 1, 5, 1, 3, 1, 5, 1, 2, 3]));
        assert_eq!(c.sum(), 24);
        let rs = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
        assert!(validate_root_axioms(&g, &rs).all_pass());
        for a in 0..g.len() {
            assert_eq!(rs.positive(a).len(), c.len());
        }
    }

    #[test]
    fn corrupted_roots_fail_r3() {
        let g = a2();
        let rs = real_roots(&g, DEFAULT_DEPTH_MAX).unwrap();
        let mut bad = rs.roots(0).clone();
        bad.remove(&vec![1, 1]);
        bad.remove(&vec![-1, -1]);
        let report = validate_root_axioms(&g, &rs.with_roots(0, bad));
        assert!(!report.passed(RootAxiom::R3));
        assert!(report.passed(RootAxiom::R1));
    }

    #[test]
    fn frieze_of_hexagon() {
        let rows = frieze_rows(&cycle(&[1, 4, 1, 2, 2, 2])).unwrap();
        assert_eq!(rows[0], vec![0, 1, 1, 3, 2, 1, 0]);
        assert_eq!(rows[1], vec![0, 1, 4, 3, 2, 1, 0]);
        assert_eq!(rows[2], vec![0, 1, 1, 1, 1, 1, 0]);
        assert_eq!(rows[5], vec![0, 1, 2, 1, 2, 1, 0]);
        let text = render_frieze(&rows);
        assert!(text.starts_with("0 1 1 3 2 1 0\n  0 1 4 3 2 1 0\n"));
        assert_eq!(frieze_rows(&cycle(&[1, 1, 1])).unwrap(), vec![vec![0, 1, 1, 0]; 3]);
        assert!(frieze_rows(&cycle(&[2, 2, 2])).is_err());
    }

    #[test]
    fn ear_cutting() {
        let t = triangulate(&cycle(&[1, 1, 1])).unwrap();
        assert!(t.diagonals.is_empty());
        let t = triangulate(&cycle(&[1, 2, 1, 2])).unwrap();
        assert_eq!(t.diagonals, vec![(1, 3)]);
        let t = triangulate(&cycle(&[3, 1, 2, 3, 2, 1, 3])).unwrap();
        assert_eq!(t.diagonals.len(), 4);
        assert!(t.is_non_crossing());
        assert_eq!(t.vertex_counts(), vec![3, 1, 2, 3, 2, 1, 3]);
        assert!(triangulate(&cycle(&[2, 2, 2, 2])).is_err());
        assert!(triangulate(&cycle(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn continuant_of_valid_cycles_is_minus_identity() {
        for c in [&[1u64, 1, 1][..], &[1, 2, 1, 2], &[1, 4, 1, 2, 2, 2], &[3, 1, 2, 3, 2, 1, 3]] {
            assert_eq!(cycle(c).continuant_product(), [[-1, 0], [0, -1]]);
        }
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(cycle(&[3, 1, 2, 3, 2, 1, 3]).canonical(), cycle(&[1, 2, 3, 2, 1, 3, 3]));
        assert_eq!(cycle(&[2, 1, 2, 1]).canonical(), cycle(&[1, 2, 1, 2]));
    }
}
