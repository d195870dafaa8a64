//! Serializable results of each subcommand. The JSON output of a command is
//! exactly its report type; the text output is its `Display`.

use std::fmt;

use serde::{Deserialize, Serialize};
use weyl_core::lattice::TensorFile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanReport {
    pub modulus: u32,
    pub rank: usize,
    pub degree: usize,
    pub matrix: Vec<Vec<i64>>,
}

impl fmt::Display for CartanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(f, &self.matrix)
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, rows: &[Vec<i64>]) -> fmt::Result {
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        writeln!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticLine {
    pub m: u64,
    pub chi_v: String,
    pub chi_w: String,
    pub chi_s: String,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsReport {
    pub modulus: u32,
    pub l: usize,
    pub j: usize,
    pub rows: Vec<DiagnosticLine>,
    /// `None` when no m up to the bound satisfies the Rosso condition.
    pub cartan_entry: Option<i64>,
}

impl fmt::Display for DiagnosticsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.rows.iter().map(|r| r.chi_v.len().max(r.chi_w.len()).max(r.chi_s.len())).max().unwrap_or(8);
        writeln!(f, "{:>3}  {:<w$}  {:<w$}  {:<w$}  R_m = 0", "m", "chi(v_m)", "chi(w_m)", "chi(s_m)")?;
        for r in &self.rows {
            let mark = if r.vanishes { "yes" } else { "no" };
            writeln!(f, "{:>3}  {:<w$}  {:<w$}  {:<w$}  {mark}", r.m, r.chi_v, r.chi_w, r.chi_s)?;
        }
        match self.cartan_entry {
            Some(c) => writeln!(f, "c_{}{} = {c}", self.l, self.j),
            None => writeln!(f, "c_{}{} undefined", self.l, self.j),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectReport {
    pub l: usize,
    pub cartan_row: Vec<i64>,
    /// Aggregates `gamma_k` in direction (1, 2), for rank 2.
    pub profile: Option<Vec<String>>,
    pub tensor: TensorFile,
}

impl fmt::Display for ReflectReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rho_{} with Cartan row {:?}", self.l, self.cartan_row)?;
        if let Some(p) = &self.profile {
            for (k, g) in p.iter().enumerate() {
                writeln!(f, "gamma_{k} = {g}")?;
            }
        }
        let json = serde_json::to_string(&self.tensor).map_err(|_| fmt::Error)?;
        writeln!(f, "{json}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLine {
    pub axiom: String,
    pub object: usize,
    pub index: Option<usize>,
    pub passed: bool,
    pub detail: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitObject {
    pub index: usize,
    pub cartan: Vec<Vec<i64>>,
    pub rho: Vec<usize>,
    pub entries: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub modulus: u32,
    pub rank: usize,
    pub objects: Vec<OrbitObject>,
    pub checks: Vec<AxiomLine>,
    pub all_pass: bool,
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objects: {}", self.objects.len())?;
        for o in &self.objects {
            let rows: Vec<String> = o.cartan.iter().map(|r| format!("{r:?}")).collect();
            writeln!(f, "{:>4}: C = {}  rho -> {:?}", o.index, rows.join(" "), o.rho)?;
        }
        write_axiom_summary(f, &self.checks, &["M1", "M2", "C1", "C2"])
    }
}

fn write_axiom_summary(f: &mut fmt::Formatter<'_>, checks: &[AxiomLine], names: &[&str]) -> fmt::Result {
    for name in names {
        let of: Vec<&AxiomLine> = checks.iter().filter(|c| c.axiom == *name).collect();
        let failed = of.iter().filter(|c| !c.passed).count();
        let verdict = if failed == 0 { "pass".to_string() } else { format!("FAIL ({failed} of {})", of.len()) };
        writeln!(f, "{name}: {verdict}")?;
    }
    for c in checks.iter().filter(|c| !c.passed) {
        writeln!(f, "  {}", c.text)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinReport {
    pub modulus: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<DynkinEdge>,
}

impl fmt::Display for DynkinReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(f, "vertex {}: {v}", i + 1)?;
        }
        for e in &self.edges {
            writeln!(f, "edge {} - {}: {}", e.i, e.j, e.label)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiddityReport {
    pub cycle: Vec<u64>,
    pub sum: u64,
    pub triangulation_sum: bool,
}

impl fmt::Display for QuiddityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", join(&self.cycle))
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeReport {
    pub cycle: Vec<u64>,
    pub rows: Vec<Vec<i64>>,
    pub rendered: String,
}

impl fmt::Display for FriezeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rendered)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationReport {
    pub cycle: Vec<u64>,
    pub vertices: usize,
    pub diagonals: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
}

impl fmt::Display for TriangulationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}-gon, quiddity {}", self.vertices, join(&self.cycle))?;
        let diagonals: Vec<String> = self.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(f, "diagonals: {}", diagonals.join(" "))?;
        let triangles: Vec<String> = self.triangles.iter().map(|t| format!("({},{},{})", t[0], t[1], t[2])).collect();
        writeln!(f, "triangles: {}", triangles.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsObject {
    pub index: usize,
    pub positive: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub depth: usize,
    pub objects: Vec<RootsObject>,
    pub checks: Vec<AxiomLine>,
    pub all_pass: bool,
}

impl fmt::Display for RootsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objects: {}, closure depth {}", self.objects.len(), self.depth)?;
        for o in &self.objects {
            let roots: Vec<String> = o
                .positive
                .iter()
                .map(|r| format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            writeln!(f, "{:>4}: {} positive: {}", o.index, o.positive.len(), roots.join(" "))?;
        }
        write_axiom_summary(f, &self.checks, &["R1", "R2", "R3", "R4"])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityLine {
    pub label: String,
    pub holds: bool,
    pub difference: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub identity: String,
    pub degree: usize,
    pub upto: u64,
    pub checks: Vec<IdentityLine>,
    pub all_hold: bool,
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            write!(f, "[{mark}] {}", c.label)?;
            if let Some(d) = &c.difference {
                write!(f, "    lhs - rhs = {d}")?;
            }
            writeln!(f)?;
        }
        let held = self.checks.iter().filter(|c| c.holds).count();
        writeln!(
            f,
            "{} d={} m<={}: {held}/{} identities hold",
            self.identity,
            self.degree,
            self.upto,
            self.checks.len()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub group: String,
    pub input: String,
    pub boundary: String,
}

impl fmt::Display for BoundaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.boundary)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableLine {
    pub generator: String,
    pub degree: usize,
    pub level: usize,
    pub printed: String,
    pub computed: String,
    pub status: String,
    pub note: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<TableLine>,
    pub all_ok: bool,
    pub text: String,
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        let ok = self.rows.iter().filter(|r| r.ok).count();
        let flagged = self.rows.iter().filter(|r| r.note.is_some()).count();
        writeln!(f, "{ok}/{} rows agree ({flagged} printed rows corrected)", self.rows.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLine {
    pub label: String,
    pub holds: bool,
    /// Sign relating boundary and claim once cells containing 1 are dropped.
    pub normalized_sign: Option<i64>,
    pub difference: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessesReport {
    pub checks: Vec<WitnessLine>,
    pub all_hold: bool,
    pub text: String,
}

impl fmt::Display for WitnessesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        let ok = self.checks.iter().filter(|c| c.holds).count();
        writeln!(f, "{ok}/{} witnesses verify exactly", self.checks.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymcycleReport {
    pub group: String,
    pub lambda: Vec<usize>,
    pub args: Vec<String>,
    pub chain: String,
    pub is_cycle: bool,
}

impl fmt::Display for SymcycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.chain)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub group: String,
    pub level: usize,
    pub chain: String,
    pub is_boundary: bool,
    pub witness: Option<String>,
}

impl fmt::Display for MembershipReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => writeln!(f, "boundary of {w}"),
            None => writeln!(f, "not a boundary"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub group: String,
    pub level: usize,
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<u128>,
    pub value: String,
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "H^{}_{}({}) = {}", self.level, self.degree, self.group, self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub group: String,
    pub lambda: Vec<usize>,
    pub index: usize,
    pub args: Vec<String>,
    pub betas: Vec<String>,
    pub form_holds: bool,
    pub inverse_holds: bool,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |b: bool| if b { "boundary" } else { "NOT a boundary" };
        writeln!(f, "form identity: {}", verdict(self.form_holds))?;
        writeln!(f, "inverse identity: {}", verdict(self.inverse_holds))
    }
}
