//! Tensor reflections, breadth-first Cartan graph closure and the axioms of a
//! Cartan graph.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::lattice::{GammaVector, SqrtBraidingTensor};
use crate::rosso::{cartan_matrix, rosso_vectors, GeneralizedCartanMatrix};

pub const DEFAULT_MAX_OBJECTS: usize = 100_000;

fn check_row(n: usize, l: usize, c_row: &[i64]) -> Result<()> {
    if l >= n || c_row.len() != n {
        return Err(Error::InvalidCartanRow(format!("row {l} of length {} for rank {n}", c_row.len())));
    }
    if c_row[l] != 2 {
        return Err(Error::InvalidCartanRow(format!("diagonal entry is {}, expected 2", c_row[l])));
    }
    if let Some((j, c)) = c_row.iter().enumerate().find(|&(j, &c)| j != l && c > 0) {
        return Err(Error::InvalidCartanRow(format!("entry {j} is {c} > 0")));
    }
    Ok(())
}

/// Matrix of `sigma_l` on `Z^n`: column `i` holds the coordinates of
/// `sigma_l(alpha_i) = alpha_i - c_{l i} alpha_l`.
fn sigma_matrix(n: usize, l: usize, c_row: &[i64]) -> Vec<Vec<i64>> {
    let mut s = vec![vec![0i64; n]; n];
    for i in 0..n {
        s[i][i] = 1;
        s[l][i] -= c_row[i];
    }
    s
}

/// Applies `S` along every mode of a dense `n^d` array: the result at `i`
/// is `sum_k x_k prod_t S[k_t][i_t]` (`transpose = false`) or
/// `sum_k x_k prod_t S[i_t][k_t]` (`transpose = true`).
fn mode_products(n: usize, d: usize, s: &[Vec<i64>], x: &[i128], transpose: bool, modulus: Option<i128>) -> Vec<i128> {
    let mut cur = x.to_vec();
    let inner_sizes: Vec<usize> = (0..d).map(|t| n.pow((d - 1 - t) as u32)).collect();
    for &stride in &inner_sizes {
        let mut next = vec![0i128; cur.len()];
        for (flat, slot) in next.iter_mut().enumerate() {
            let i = flat / stride % n;
            let base = flat - i * stride;
            let mut acc = 0i128;
            for k in 0..n {
                let coeff = if transpose { s[i][k] } else { s[k][i] };
                if coeff != 0 {
                    acc += coeff as i128 * cur[base + k * stride];
                }
            }
            *slot = match modulus {
                Some(m) => acc.rem_euclid(m),
                None => acc,
            };
        }
        cur = next;
    }
    cur
}

/// `sigma_l(q)` on square-root exponents, using row `l` of the Cartan matrix of `t`.
pub fn reflect(t: &SqrtBraidingTensor, l: usize, c_row: &[i64]) -> Result<SqrtBraidingTensor> {
    let n = t.rank();
    check_row(n, l, c_row)?;
    let s = sigma_matrix(n, l, c_row);
    let m = t.modulus() as i128;
    let old: Vec<i128> = t.entries().iter().map(|&e| e as i128).collect();
    let new = mode_products(n, t.degree(), &s, &old, false, Some(m));
    let new: Vec<i64> = new.into_iter().map(|e| e as i64).collect();
    SqrtBraidingTensor::from_entries(n, t.degree(), t.datum(), &new)
}

/// Expands a vector in the `gamma` basis of the pair `(l, j)` into the full
/// `n^d` tensor basis (doubled coordinates).
pub fn gamma_to_full(n: usize, l: usize, j: usize, v: &GammaVector) -> Vec<i128> {
    let d = v.degree();
    let mut out = vec![0i128; n.pow(d as u32)];
    for mask in 0u64..(1u64 << d) {
        let k = mask.count_ones() as usize;
        let mut flat = 0usize;
        for t in (0..d).rev() {
            flat = flat * n + if mask >> t & 1 == 1 { j } else { l };
        }
        out[flat] = v.doubled()[k];
    }
    out
}

/// `sigma_l^{(x) d}` applied to a full-basis vector.
pub fn apply_tensor_power(n: usize, d: usize, l: usize, c_row: &[i64], x: &[i128]) -> Result<Vec<i128>> {
    check_row(n, l, c_row)?;
    let s = sigma_matrix(n, l, c_row);
    Ok(mode_products(n, d, &s, x, true, None))
}

/// Results of the eigenvector identities for `v_m`, `w_m`, `s_m` at `m = -c_{lj}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenCheck {
    pub m: u64,
    pub v_fixed: bool,
    pub w_negated: bool,
    pub s_fixed: bool,
}

impl EigenCheck {
    pub fn holds(&self) -> bool {
        self.v_fixed && self.w_negated && self.s_fixed
    }
}

pub fn eigen_check(n: usize, d: usize, l: usize, j: usize, c_row: &[i64]) -> Result<EigenCheck> {
    check_row(n, l, c_row)?;
    if j == l || j >= n {
        return Err(Error::InvalidArguments(format!("bad pair ({l}, {j})")));
    }
    let m = (-c_row[j]) as u64;
    let vecs = rosso_vectors(d, m);
    let image = |v: &GammaVector| -> Result<(Vec<i128>, Vec<i128>)> {
        let full = gamma_to_full(n, l, j, v);
        Ok((apply_tensor_power(n, d, l, c_row, &full)?, full))
    };
    let (v_img, v) = image(&vecs.v)?;
    let (w_img, w) = image(&vecs.w)?;
    let (s_img, s) = image(&vecs.s)?;
    let neg_w: Vec<i128> = w.iter().map(|x| -x).collect();
    Ok(EigenCheck { m, v_fixed: v_img == v, w_negated: w_img == neg_w, s_fixed: s_img == s })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanGraphObject {
    pub tensor: SqrtBraidingTensor,
    pub cartan: GeneralizedCartanMatrix,
}

impl CartanGraphObject {
    /// Canonical key: the flattened square-root exponents.
    pub fn key(&self) -> &[u32] {
        self.tensor.entries()
    }
}

/// Objects in BFS discovery order; `edges[a][i]` is the index of `rho_i(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanGraph {
    rank: usize,
    objects: Vec<CartanGraphObject>,
    edges: Vec<Vec<usize>>,
}

impl CartanGraph {
    /// Builds a graph from explicit data without checking the axioms.
    pub fn from_parts(rank: usize, objects: Vec<CartanGraphObject>, edges: Vec<Vec<usize>>) -> Self {
        Self { rank, objects, edges }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[CartanGraphObject] {
        &self.objects
    }

    pub fn object(&self, a: usize) -> &CartanGraphObject {
        &self.objects[a]
    }

    pub fn cartan(&self, a: usize) -> &GeneralizedCartanMatrix {
        &self.objects[a].cartan
    }

    pub fn rho(&self, a: usize, i: usize) -> usize {
        self.edges[a][i]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edges_mut(&mut self) -> &mut [Vec<usize>] {
        &mut self.edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cartan {\n");
        for (a, obj) in self.objects.iter().enumerate() {
            let rows: Vec<String> = obj.cartan.rows().iter().map(|r| format!("{r:?}")).collect();
            let _ = writeln!(out, "  {a} [label=\"{a}: {}\"];", rows.join(" "));
        }
        for (a, targets) in self.edges.iter().enumerate() {
            for (i, &b) in targets.iter().enumerate() {
                if a <= b {
                    let _ = writeln!(out, "  {a} -- {b} [label=\"rho_{}\"];", i + 1);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Closure of `{t0}` under all reflections `rho_l(q) = sigma_l^q(q)`; fails
/// with [`Error::AxiomViolation`] if the result is not a Cartan graph.
pub fn generate_cartan_graph(t0: &SqrtBraidingTensor, m_max: u32, max_objects: usize) -> Result<CartanGraph> {
    let graph = close_orbit(t0, m_max, max_objects)?;
    let report = validate_axioms(&graph);
    if let Some(fail) = report.failures().next() {
        return Err(Error::AxiomViolation(fail.to_string()));
    }
    Ok(graph)
}

/// The breadth-first closure without the final axiom check.
pub fn close_orbit(t0: &SqrtBraidingTensor, m_max: u32, max_objects: usize) -> Result<CartanGraph> {
    if t0.degree() % 2 == 1 {
        return Err(Error::OddDegree(t0.degree()));
    }
    let n = t0.rank();
    let mut objects: Vec<CartanGraphObject> = Vec::new();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();

    let mut insert = |t: SqrtBraidingTensor,
                      objects: &mut Vec<CartanGraphObject>,
                      edges: &mut Vec<Vec<usize>>,
                      queue: &mut VecDeque<usize>|
     -> Result<usize> {
        if let Some(&a) = index.get(t.entries()) {
            return Ok(a);
        }
        if objects.len() >= max_objects {
            return Err(Error::ObjectLimitExceeded(max_objects));
        }
        let cartan = cartan_matrix(&t, m_max)?;
        let a = objects.len();
        index.insert(t.entries().to_vec(), a);
        objects.push(CartanGraphObject { tensor: t, cartan });
        edges.push(vec![usize::MAX; n]);
        queue.push_back(a);
        Ok(a)
    };

    insert(t0.clone(), &mut objects, &mut edges, &mut queue)?;
    while let Some(a) = queue.pop_front() {
        for l in 0..n {
            let image = reflect(&objects[a].tensor, l, objects[a].cartan.row(l))?;
            let b = insert(image, &mut objects, &mut edges, &mut queue)?;
            edges[a][l] = b;
        }
    }
    Ok(CartanGraph { rank: n, objects, edges })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    M1,
    M2,
    C1,
    C2,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub object: usize,
    pub index: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{} object {}", self.axiom, self.object)?;
        if let Some(i) = self.index {
            write!(f, " index {}", i + 1)?;
        }
        write!(f, ": {verdict}")?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.checks.iter().filter(|c| c.axiom == axiom).all(|c| c.passed)
    }
}

pub fn validate_axioms(g: &CartanGraph) -> AxiomReport {
    let mut report = AxiomReport::default();
    for (a, obj) in g.objects.iter().enumerate() {
        let failures = obj.cartan.axiom_failures();
        for axiom in [Axiom::M1, Axiom::M2] {
            let tag = format!("{axiom}:");
            let mine: Vec<&String> = failures.iter().filter(|f| f.starts_with(&tag)).collect();
            report.checks.push(AxiomCheck {
                axiom,
                object: a,
                index: None,
                passed: mine.is_empty(),
                detail: mine.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; "),
            });
        }
        for i in 0..g.rank {
            let b = g.edges[a][i];
            if b >= g.objects.len() {
                report.checks.push(AxiomCheck {
                    axiom: Axiom::C1,
                    object: a,
                    index: Some(i),
                    passed: false,
                    detail: "missing edge".into(),
                });
                continue;
            }
            let back = g.edges[b][i];
            report.checks.push(AxiomCheck {
                axiom: Axiom::C1,
                object: a,
                index: Some(i),
                passed: back == a,
                detail: if back == a { String::new() } else { format!("rho twice leads to {back}") },
            });
            let same = obj.cartan.row(i) == g.objects[b].cartan.row(i);
            report.checks.push(AxiomCheck {
                axiom: Axiom::C2,
                object: a,
                index: Some(i),
                passed: same,
                detail: if same {
                    String::new()
                } else {
                    format!("row {:?} vs {:?} at object {b}", obj.cartan.row(i), g.objects[b].cartan.row(i))
                },
            });
        }
    }
    report
}

/// Labeled graph of a degree-2 tensor: vertex `i` carries the exponent of
/// `q_ii`, edge `(i, j)` the exponent of `q_ij q_ji` when it is not 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub modulus: u32,
    pub vertices: Vec<u32>,
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn dynkin_diagram(t: &SqrtBraidingTensor) -> Result<DynkinDiagram> {
    if t.degree() != 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: t.degree() });
    }
    let n = t.rank();
    let m = t.modulus() as u64;
    let vertices = (0..n).map(|i| t.get(&[i, i]).map(|e| (2 * e as u64 % m) as u32)).collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let label = (2 * (t.get(&[i, j])? as u64 + t.get(&[j, i])? as u64) % m) as u32;
            if label != 0 {
                edges.push((i, j, label));
            }
        }
    }
    Ok(DynkinDiagram { modulus: t.modulus(), vertices, edges })
}

impl DynkinDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dynkin {\n");
        for (i, e) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {} [label=\"mu^{e}\"];", i + 1);
        }
        for (i, j, e) in &self.edges {
            let _ = writeln!(out, "  {} -- {} [label=\"mu^{e}\"];", i + 1, j + 1);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RootDatum;
    use crate::rosso::{binomial, DEFAULT_M_MAX};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zeta11() -> SqrtBraidingTensor {
        SqrtBraidingTensor::from_rank2_profile(RootDatum::new(22).unwrap(), &[1, 1, 1, 1, 1]).unwrap()
    }

    fn exps(profile: &[crate::lattice::MuPower]) -> Vec<u32> {
        profile.iter().map(|p| p.exponent()).collect()
    }

    #[test]
    fn reflected_aggregates_match_expansion_oracle() {
        let t = zeta11();
        let r = reflect(&t, 0, &[2, -3]).unwrap();
        assert_eq!(exps(&r.gamma_profile(0, 1).unwrap()), vec![1, 9, 20, 12, 11]);
        // A_{kj} = (-1)^{d-k} 3^{k-j} C(4-j, k-j) acting on profile (1,1,1,1,1)
        let oracle: Vec<u32> = (0..=4u32)
            .map(|k| {
                let total: i128 =
                    (0..=k).map(|j| (-1i128).pow(4 - k) * 3i128.pow(k - j) * binomial(4 - j, k - j)).sum();
                total.rem_euclid(22) as u32
            })
            .collect();
        assert_eq!(oracle, vec![1, 9, 20, 12, 11]);
    }

    #[test]
    fn pure_l_entry_is_fixed_for_even_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(2..4usize);
            let d = [2usize, 4][rng.gen_range(0..2)];
            let entries: Vec<i64> = (0..n.pow(d as u32)).map(|_| rng.gen_range(0..30)).collect();
            let t = SqrtBraidingTensor::from_entries(n, d, RootDatum::new(30).unwrap(), &entries).unwrap();
            let l = rng.gen_range(0..n);
            let mut row: Vec<i64> = (0..n).map(|_| -rng.gen_range(0..4)).collect();
            row[l] = 2;
            let r = reflect(&t, l, &row).unwrap();
            assert_eq!(r.get(&vec![l; d]).unwrap(), t.get(&vec![l; d]).unwrap());
        }
    }

    #[test]
    fn trivial_row_leaves_aggregates_unchanged() {
        let t = SqrtBraidingTensor::from_rank2_profile(RootDatum::new(10).unwrap(), &[3, 4, 5, 6, 7]).unwrap();
        let r = reflect(&t, 0, &[2, 0]).unwrap();
        // sigma = diag(-1, 1): q_k picks up the sign (-1)^(d-k)
        assert_eq!(exps(&r.gamma_profile(0, 1).unwrap()), vec![3, 6, 5, 4, 7]);
    }

    #[test]
    fn bad_rows_are_rejected() {
        let t = zeta11();
        assert!(matches!(reflect(&t, 0, &[1, -3]), Err(Error::InvalidCartanRow(_))));
        assert!(matches!(reflect(&t, 0, &[2, 1]), Err(Error::InvalidCartanRow(_))));
        assert!(matches!(reflect(&t, 0, &[2]), Err(Error::InvalidCartanRow(_))));
    }

    #[test]
    fn double_reflection_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let n = rng.gen_range(2..4usize);
            let d = [2usize, 4][rng.gen_range(0..2)];
            let entries: Vec<i64> = (0..n.pow(d as u32)).map(|_| rng.gen_range(0..24)).collect();
            let t = SqrtBraidingTensor::from_entries(n, d, RootDatum::new(24).unwrap(), &entries).unwrap();
            let l = rng.gen_range(0..n);
            let mut row: Vec<i64> = (0..n).map(|_| -rng.gen_range(0..5)).collect();
            row[l] = 2;
            assert_eq!(reflect(&reflect(&t, l, &row).unwrap(), l, &row).unwrap(), t);
        }
    }

    #[test]
    fn eigenvectors_for_all_small_m() {
        for d in 2..=6 {
            for m in 0..6i64 {
                let check = eigen_check(3, d, 1, 2, &[0, 2, -m]).unwrap();
                assert!(check.holds(), "d={d} m={m}: {check:?}");
                let check = eigen_check(2, d, 1, 0, &[-m, 2]).unwrap();
                assert!(check.holds(), "d={d} m={m}: {check:?}");
            }
        }
    }

    #[test]
    fn zeta11_orbit_is_a_cartan_graph() {
        let g = generate_cartan_graph(&zeta11(), DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap();
        assert!(validate_axioms(&g).all_pass());
        assert_eq!(g.cartan(0).get(0, 1), -3);
    }

    #[test]
    fn corrupted_edge_fails_c1() {
        let mut g = generate_cartan_graph(&zeta11(), DEFAULT_M_MAX, DEFAULT_MAX_OBJECTS).unwrap();
        assert!(g.len() > 2);
        let b = g.rho(0, 0);
        g.edges_mut()[b][0] = if b == 1 { 2 } else { 1 };
        let report = validate_axioms(&g);
        assert!(!report.passed(Axiom::C1));
        assert!(report.passed(Axiom::M1));
    }

    #[test]
    fn trivial_mixed_part_gives_single_object() {
        // q_12 q_21 = 1 but the square roots differ from 1: two objects
        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(6).unwrap(), &[3, 1, 5, 3]).unwrap();
        let g = generate_cartan_graph(&t, DEFAULT_M_MAX, 10).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.objects().iter().all(|o| o.cartan.get(0, 1) == 0));

        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(6).unwrap(), &[3, 0, 0, 3]).unwrap();
        let g = generate_cartan_graph(&t, DEFAULT_M_MAX, 10).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.cartan(0).rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(g.rho(0, 0), 0);
    }

    #[test]
    fn object_limit_is_typed() {
        assert_eq!(generate_cartan_graph(&zeta11(), DEFAULT_M_MAX, 1).unwrap_err(), Error::ObjectLimitExceeded(1));
        let odd = SqrtBraidingTensor::from_rank2_profile(RootDatum::new(22).unwrap(), &[1, 1, 1, 1]).unwrap();
        assert_eq!(generate_cartan_graph(&odd, DEFAULT_M_MAX, 10).unwrap_err(), Error::OddDegree(3));
    }

    #[test]
    fn dynkin_of_zeta3_triangle() {
        let t =
            SqrtBraidingTensor::from_entries(3, 2, RootDatum::new(12).unwrap(), &[3, 2, 2, 0, 3, 2, 0, 0, 3]).unwrap();
        let dd = dynkin_diagram(&t).unwrap();
        assert_eq!(dd.vertices, vec![6, 6, 6]);
        assert_eq!(dd.edges, vec![(0, 1, 4), (0, 2, 4), (1, 2, 4)]);
        assert!(dd.to_dot().contains("1 -- 2 [label=\"mu^4\"]"));
        let diag = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(12).unwrap(), &[3, 1, 11, 3]).unwrap();
        assert!(dynkin_diagram(&diag).unwrap().edges.is_empty());
        assert!(dynkin_diagram(&zeta11()).is_err());
    }
}
