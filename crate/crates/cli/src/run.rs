use std::fs;
use std::path::PathBuf;

use abelian_complex::table::RowStatus;
use abelian_complex::{
    boundary, check_conjecture_instance, parse_chain, parse_element, symmetrized_cycle, verify_lemma_witnesses,
    verify_table1, Bounds, Complex, Membership,
};
use serde::Serialize;
use weyl_core::groupoid::{close_orbit, dynkin_diagram, generate_cartan_graph, reflect, validate_axioms, CartanGraph};
use weyl_core::lattice::TensorFile;
use weyl_core::laurent::{verify_divisibility, verify_recursion, Certificate};
use weyl_core::rank2::{
    frieze_rows, quiddity_cycle, real_roots, render_frieze, search_rank2, triangulate, validate_root_axioms,
    QuiddityCycle, SearchConfig,
};
use weyl_core::rosso::rosso_diagnostics;
use weyl_core::{cartan_entry, cartan_matrix, AbGroup, GroupElement, SqrtBraidingTensor, DEFAULT_M_MAX};

use crate::args::{Command, ComplexCommand, CycleSource, Format, Identity, RunConfig, TensorSource};
use crate::error::{CliError, Result};
use crate::report::*;

const SEARCH_M_MAX: u32 = 64;
const SEARCH_MAX_OBJECTS: usize = 5000;
const QUIDDITY_CAP: usize = 10_000;

/// Rendered output and whether the run validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub valid: bool,
}

impl Outcome {
    /// 0 on success, 1 when a report contains failures.
    pub fn exit_code(&self) -> u8 {
        if self.valid {
            0
        } else {
            1
        }
    }
}

fn emit<R: Serialize + std::fmt::Display>(
    format: Format,
    report: &R,
    dot: Option<String>,
    valid: bool,
) -> Result<Outcome> {
    let output = match format {
        Format::Text => report.to_string(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| CliError::Usage(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Dot => dot.ok_or_else(|| CliError::Usage("this subcommand has no DOT output".into()))?,
    };
    Ok(Outcome { output, valid })
}

fn read_json(path: Option<&PathBuf>, inline: Option<&String>) -> Result<(String, String)> {
    match (path, inline) {
        (Some(p), _) => {
            let text = fs::read_to_string(p).map_err(|source| CliError::Io { path: p.clone(), source })?;
            Ok((text, p.display().to_string()))
        }
        (None, Some(s)) => Ok((s.clone(), "inline tensor".into())),
        (None, None) => Err(CliError::Usage("a tensor source is required".into())),
    }
}

fn parse_tensor(text: &str, origin: String) -> Result<SqrtBraidingTensor> {
    let mut de = serde_json::Deserializer::from_str(text);
    let file: TensorFile = serde_path_to_error::deserialize(&mut de).map_err(|e| CliError::Schema {
        origin: origin.clone(),
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    de.end().map_err(|e| CliError::Schema { origin, path: ".".into(), message: e.to_string() })?;
    Ok(file.to_tensor()?)
}

fn load_tensor(src: &TensorSource) -> Result<SqrtBraidingTensor> {
    let (text, origin) = read_json(src.tensor.as_ref(), src.inline.as_ref())?;
    parse_tensor(&text, origin)
}

fn residue(t: &SqrtBraidingTensor, e: u32) -> String {
    t.datum().power(e as i128).to_string()
}

fn axiom_lines<I, T>(checks: I) -> Vec<AxiomLine>
where
    I: IntoIterator<Item = (String, usize, Option<usize>, bool, String, T)>,
    T: std::fmt::Display,
{
    checks
        .into_iter()
        .map(|(axiom, object, index, passed, detail, shown)| AxiomLine {
            axiom,
            object,
            index,
            passed,
            detail,
            text: shown.to_string(),
        })
        .collect()
}

impl RunConfig {
    fn m_max(&self) -> u32 {
        self.m_max.unwrap_or(DEFAULT_M_MAX)
    }

    fn max_objects(&self) -> usize {
        self.max_objects.unwrap_or(weyl_core::groupoid::DEFAULT_MAX_OBJECTS)
    }

    fn graph(&self, src: &TensorSource) -> Result<CartanGraph> {
        Ok(generate_cartan_graph(&load_tensor(src)?, self.m_max(), self.max_objects())?)
    }

    fn cycle(&self, src: &CycleSource) -> Result<QuiddityCycle> {
        if let Some(c) = &src.cycle {
            return Ok(QuiddityCycle::parse(c)?);
        }
        let (text, origin) = read_json(src.tensor.as_ref(), src.inline.as_ref())?;
        let t = parse_tensor(&text, origin)?;
        let g = generate_cartan_graph(&t, self.m_max(), self.max_objects())?;
        Ok(quiddity_cycle(&g, 0, QUIDDITY_CAP)?)
    }
}

/// Executes one configuration.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let format = config.format;
    match &config.command {
        Command::Cartan(src) => {
            let t = load_tensor(src)?;
            let c = cartan_matrix(&t, config.m_max())?;
            let report = CartanReport { modulus: t.modulus(), rank: t.rank(), degree: t.degree(), matrix: c.rows() };
            emit(format, &report, None, true)
        }
        Command::Diagnostics { source, l, j, from, to } => {
            let t = load_tensor(source)?;
            let (l0, j0) = (direction(*l, t.rank())?, direction(*j, t.rank())?);
            let rows = rosso_diagnostics(&t, l0, j0, *from..=*to)?
                .into_iter()
                .map(|r| DiagnosticLine {
                    m: r.m,
                    chi_v: r.chi_v.to_string(),
                    chi_w: r.chi_w.to_string(),
                    chi_s: r.chi_s.to_string(),
                    vanishes: r.vanishes,
                })
                .collect();
            let entry = match cartan_entry(&t, l0, j0, config.m_max()) {
                Ok(c) => Some(c),
                Err(weyl_core::Error::UndefinedCartanEntry { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let report = DiagnosticsReport { modulus: t.modulus(), l: *l, j: *j, rows, cartan_entry: entry };
            emit(format, &report, None, true)
        }
        Command::Reflect { source, l } => {
            let t = load_tensor(source)?;
            let l0 = direction(*l, t.rank())?;
            let row = cartan_matrix(&t, config.m_max())?.row(l0).to_vec();
            let r = reflect(&t, l0, &row)?;
            let profile = (r.rank() == 2)
                .then(|| r.gamma_profile(0, 1).map(|p| p.iter().map(|x| x.to_string()).collect()))
                .transpose()?;
            let report = ReflectReport { l: *l, cartan_row: row, profile, tensor: TensorFile::from_tensor(&r) };
            emit(format, &report, None, true)
        }
        Command::Orbit(src) => {
            let t = load_tensor(src)?;
            let g = close_orbit(&t, config.m_max(), config.max_objects())?;
            let axioms = validate_axioms(&g);
            let objects = g
                .objects()
                .iter()
                .enumerate()
                .map(|(a, o)| OrbitObject {
                    index: a,
                    cartan: o.cartan.rows(),
                    rho: g.edges()[a].clone(),
                    entries: o.tensor.entries().to_vec(),
                })
                .collect();
            let checks = axiom_lines(
                axioms.checks.iter().map(|c| (c.axiom.to_string(), c.object, c.index, c.passed, c.detail.clone(), c)),
            );
            let all_pass = axioms.all_pass();
            let report = OrbitReport { modulus: t.modulus(), rank: t.rank(), objects, checks, all_pass };
            emit(format, &report, Some(g.to_dot()), all_pass)
        }
        Command::Dynkin(src) => {
            let t = load_tensor(src)?;
            let d = dynkin_diagram(&t)?;
            let report = DynkinReport {
                modulus: d.modulus,
                vertices: d.vertices.iter().map(|&e| residue(&t, e)).collect(),
                edges: d
                    .edges
                    .iter()
                    .map(|&(i, j, e)| DynkinEdge { i: i + 1, j: j + 1, label: residue(&t, e) })
                    .collect(),
            };
            emit(format, &report, Some(d.to_dot()), true)
        }
        Command::Quiddity { source, object } => {
            let g = config.graph(source)?;
            let c = quiddity_cycle(&g, *object, QUIDDITY_CAP)?;
            let report = QuiddityReport {
                cycle: c.entries().to_vec(),
                sum: c.sum(),
                triangulation_sum: c.has_triangulation_sum(),
            };
            emit(format, &report, None, true)
        }
        Command::Frieze(src) => {
            let c = config.cycle(src)?;
            let rows = frieze_rows(&c)?;
            let rendered = render_frieze(&rows);
            emit(format, &FriezeReport { cycle: c.entries().to_vec(), rows, rendered }, None, true)
        }
        Command::Triangulate(src) => {
            let c = config.cycle(src)?;
            let tri = triangulate(&c)?;
            let dot = tri.to_dot();
            let report = TriangulationReport {
                cycle: c.entries().to_vec(),
                vertices: tri.vertices,
                diagonals: tri.diagonals,
                triangles: tri.triangles,
            };
            emit(format, &report, Some(dot), true)
        }
        Command::Roots(src) => {
            let g = config.graph(src)?;
            let rs = real_roots(&g, config.depth_max)?;
            let checks = validate_root_axioms(&g, &rs);
            let objects = (0..g.len()).map(|a| RootsObject { index: a, positive: rs.positive(a) }).collect();
            let lines = axiom_lines(
                checks.checks.iter().map(|c| (format!("{:?}", c.axiom), c.object, None, c.passed, c.detail.clone(), c)),
            );
            let all_pass = checks.all_pass();
            emit(format, &RootsReport { depth: rs.depth(), objects, checks: lines, all_pass }, None, all_pass)
        }
        Command::Verify { identity, degree, upto } => {
            if *degree < 2 {
                return Err(CliError::Usage("degree must be at least 2".into()));
            }
            let (name, cert) = match identity {
                Identity::Recursion => ("recursion", verify_recursion(*degree, *upto)),
                Identity::Divisibility => ("divisibility", verify_divisibility(*degree, *upto)),
            };
            let report = certificate_report(name, *degree, *upto, &cert);
            let ok = report.all_hold;
            emit(format, &report, None, ok)
        }
        Command::Search { samples, degree, modulus_min, modulus_max } => {
            if modulus_min > modulus_max || *modulus_min == 0 {
                return Err(CliError::Usage("need 1 <= modulus-min <= modulus-max".into()));
            }
            let cfg = SearchConfig {
                seed: config.seed,
                samples: *samples,
                degree: *degree,
                moduli: *modulus_min..=*modulus_max,
                m_max: config.m_max.unwrap_or(SEARCH_M_MAX),
                max_objects: config.max_objects.unwrap_or(SEARCH_MAX_OBJECTS),
                depth_max: config.depth_max,
            };
            emit(format, &search_rank2(&cfg), None, true)
        }
        Command::Complex(cmd) => run_complex(format, cmd),
    }
}

fn direction(i: usize, rank: usize) -> Result<usize> {
    if i == 0 || i > rank {
        return Err(CliError::Usage(format!("direction {i} is not in 1..={rank}")));
    }
    Ok(i - 1)
}

fn certificate_report(name: &str, degree: usize, upto: u64, cert: &Certificate) -> CertificateReport {
    CertificateReport {
        identity: name.to_string(),
        degree,
        upto,
        checks: cert
            .checks
            .iter()
            .map(|c| IdentityLine { label: c.label.clone(), holds: c.holds, difference: c.difference.clone() })
            .collect(),
        all_hold: cert.all_hold(),
    }
}

/// Splits on commas that are not inside parentheses.
fn split_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_lambda(s: &str) -> Result<Vec<usize>> {
    let parts: Vec<usize> = split_list(s)
        .iter()
        .map(|p| p.parse::<usize>().ok().filter(|&x| x > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::Usage(format!("composition {s:?} must be a list of positive integers")))?;
    if parts.is_empty() {
        return Err(CliError::Usage("empty composition".into()));
    }
    Ok(parts)
}

fn parse_elements(group: &AbGroup, s: &str) -> Result<Vec<GroupElement>> {
    split_list(s).iter().map(|x| Ok(parse_element(group, x)?)).collect()
}

fn run_complex(format: Format, cmd: &ComplexCommand) -> Result<Outcome> {
    let bounds = Bounds::from_env();
    match cmd {
        ComplexCommand::Boundary { expr, group } => {
            let g = AbGroup::parse(group)?;
            let x = parse_chain(&g, expr)?;
            let report =
                BoundaryReport { group: g.to_string(), input: x.to_string(), boundary: boundary(&g, &x).to_string() };
            emit(format, &report, None, true)
        }
        ComplexCommand::VerifyTable => {
            let t = verify_table1()?;
            let rows = t
                .rows
                .iter()
                .map(|r| {
                    let (status, note) = match &r.status {
                        RowStatus::Match => ("match", None),
                        RowStatus::Mismatch => ("mismatch", None),
                        RowStatus::Discrepancy { note, .. } => ("misprint", Some(note.to_string())),
                    };
                    TableLine {
                        generator: r.generator.to_string(),
                        degree: r.degree,
                        level: r.level,
                        printed: r.printed.to_string(),
                        computed: r.computed.to_string(),
                        status: status.to_string(),
                        note,
                        ok: r.ok(),
                    }
                })
                .collect();
            let all_ok = t.all_ok();
            emit(format, &TableReport { rows, all_ok, text: t.to_string() }, None, all_ok)
        }
        ComplexCommand::Witnesses => {
            let w = verify_lemma_witnesses()?;
            let checks = w
                .checks
                .iter()
                .map(|c| WitnessLine {
                    label: c.label.to_string(),
                    holds: c.holds(),
                    normalized_sign: c.normalized_sign(),
                    difference: (!c.holds()).then(|| (&c.boundary - &c.claimed).to_string()),
                })
                .collect();
            let all_hold = w.all_hold();
            emit(format, &WitnessesReport { checks, all_hold, text: w.to_string() }, None, all_hold)
        }
        ComplexCommand::Symcycle { lambda, args, group } => {
            let g = AbGroup::parse(group)?;
            let lambda = parse_lambda(lambda)?;
            let xs = parse_elements(&g, args)?;
            let c = symmetrized_cycle(&xs, &lambda)?;
            let report = SymcycleReport {
                group: g.to_string(),
                lambda,
                args: xs.iter().map(GroupElement::to_string).collect(),
                chain: c.to_string(),
                is_cycle: boundary(&g, &c).is_zero(),
            };
            let ok = report.is_cycle;
            emit(format, &report, None, ok)
        }
        ComplexCommand::Membership { group, level, expr } => {
            let g = AbGroup::parse(group)?;
            let x = parse_chain(&g, expr)?;
            let mut cx = Complex::new(g.clone(), *level, bounds)?;
            let witness = match cx.membership(&x)? {
                Membership::Boundary(w) => Some(w.to_string()),
                Membership::NotBoundary => None,
            };
            let report = MembershipReport {
                group: g.to_string(),
                level: *level,
                chain: x.to_string(),
                is_boundary: witness.is_some(),
                witness,
            };
            emit(format, &report, None, true)
        }
        ComplexCommand::Homology { group, level, degree } => {
            let g = AbGroup::parse(group)?;
            let h = abelian_complex::homology(&g, *level, *degree, &bounds)?;
            let report = HomologyReport {
                group: g.to_string(),
                level: *level,
                degree: *degree,
                free_rank: h.free_rank,
                torsion: h.torsion.clone(),
                value: h.to_string(),
            };
            emit(format, &report, None, true)
        }
        ComplexCommand::Conjecture { group, lambda, index, args, betas } => {
            let g = AbGroup::parse(group)?;
            let lambda = parse_lambda(lambda)?;
            let i = direction(*index, lambda.len())?;
            let xs = parse_elements(&g, args)?;
            let bs = parse_elements(&g, betas)?;
            if bs.is_empty() {
                return Err(CliError::Usage("at least one beta is required".into()));
            }
            let mut cx = Complex::new(g.clone(), 1, bounds)?;
            let r = check_conjecture_instance(&mut cx, &lambda, i, &xs, &bs)?;
            let show = |v: &[GroupElement]| v.iter().map(GroupElement::to_string).collect();
            let report = ConjectureReport {
                group: g.to_string(),
                lambda,
                index: *index,
                args: show(&xs),
                betas: show(&bs),
                form_holds: r.form_holds,
                inverse_holds: r.inverse_holds,
            };
            emit(format, &report, None, r.holds())
        }
    }
}
