use std::collections::HashMap;
use std::fmt;

use weyl_core::{AbGroup, GroupElement};

use crate::cell::{Cell, Chain};
use crate::cycles::symmetrized_cycle;
use crate::error::{Error, Result};
use crate::ops::{boundary, boundary_cell};
use crate::snf::{IntMatrix, Smith};

pub const DEFAULT_MAX_DEGREE: usize = 7;
pub const DEFAULT_MAX_LEVEL: usize = 4;
pub const DEFAULT_MAX_CELLS: usize = 2048;

/// Limits on cell enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_degree: usize,
    pub max_level: usize,
    pub max_cells: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_degree: DEFAULT_MAX_DEGREE, max_level: DEFAULT_MAX_LEVEL, max_cells: DEFAULT_MAX_CELLS }
    }
}

impl Bounds {
    /// Defaults, with the cell limit taken from `WEYL_MAX_CELLS` when set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(n) = std::env::var("WEYL_MAX_CELLS").ok().and_then(|v| v.trim().parse().ok()) {
            b.max_cells = n;
        }
        b
    }
}

/// Number of canonical cells of degree `n` and level at most `k` over a group of order `order`.
pub fn count_cells(order: u128, k: usize, n: usize) -> u128 {
    let mut memo = HashMap::new();
    count_rec(order, k, n, &mut memo)
}

fn count_rec(order: u128, k: usize, n: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
    if let Some(&v) = memo.get(&(k, n)) {
        return v;
    }
    let mut total = order.saturating_pow(n as u32);
    for j in 1..=k {
        for p in 2..=n {
            let budget = match n.checked_sub((p - 1) * j) {
                Some(b) if b >= p => b,
                _ => continue,
            };
            for shape in compositions(budget, p) {
                let mut product = 1u128;
                for size in shape {
                    product = product.saturating_mul(count_rec(order, j - 1, size, memo));
                }
                total = total.saturating_add(product);
            }
        }
    }
    memo.insert((k, n), total);
    total
}

fn check_bounds(group: &AbGroup, k: usize, n: usize, bounds: &Bounds) -> Result<u128> {
    let order = group
        .order()
        .ok_or_else(|| Error::InvalidArguments(format!("cell enumeration needs a finite group, got {group}")))?;
    if n > bounds.max_degree {
        return Err(Error::BoundExceeded(format!("degree {n} exceeds the limit {}", bounds.max_degree)));
    }
    if k > bounds.max_level {
        return Err(Error::BoundExceeded(format!("level {k} exceeds the limit {}", bounds.max_level)));
    }
    let count = count_cells(order as u128, k, n);
    if count > bounds.max_cells as u128 {
        return Err(Error::BoundExceeded(format!(
            "{count} cells of degree {n} at level {k} over {group} exceed the limit {} (set WEYL_MAX_CELLS)",
            bounds.max_cells
        )));
    }
    Ok(count)
}

/// All canonical cells of degree `n` and level at most `k`: bar tuples first,
/// then joins by level, number of components and component shapes.
pub fn enumerate_cells(group: &AbGroup, k: usize, n: usize, bounds: &Bounds) -> Result<Vec<Cell>> {
    check_bounds(group, k, n, bounds)?;
    let elements = group.elements().expect("finite group");
    let mut memo = HashMap::new();
    Ok(enumerate_rec(&elements, k, n, &mut memo))
}

fn enumerate_rec(
    elements: &[GroupElement],
    k: usize,
    n: usize,
    memo: &mut HashMap<(usize, usize), Vec<Cell>>,
) -> Vec<Cell> {
    if let Some(v) = memo.get(&(k, n)) {
        return v.clone();
    }
    let mut tuples: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for _ in 0..n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                elements.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    let mut out: Vec<Cell> = tuples.into_iter().map(Cell::Bar).collect();
    for j in 1..=k {
        for p in 2..=n {
            let budget = match n.checked_sub((p - 1) * j) {
                Some(b) if b >= p => b,
                _ => continue,
            };
            for shape in compositions(budget, p) {
                let mut partial: Vec<Vec<Cell>> = vec![Vec::new()];
                for &size in &shape {
                    let options = enumerate_rec(elements, j - 1, size, memo);
                    partial = partial
                        .into_iter()
                        .flat_map(|prefix| {
                            options.iter().map(move |c| {
                                let mut v = prefix.clone();
                                v.push(c.clone());
                                v
                            })
                        })
                        .collect();
                }
                out.extend(partial.into_iter().map(|parts| Cell::Join { level: j, parts }));
            }
        }
    }
    memo.insert((k, n), out.clone());
    out
}

/// Compositions of `total` into `parts` positive summands, lexicographically descending.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (1..=total - (parts - 1)).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Integer matrix of `boundary: A^k_n -> A^k_(n-1)` in enumeration order.
pub struct BoundaryMatrix {
    pub domain: Vec<Cell>,
    pub codomain: Vec<Cell>,
    pub matrix: IntMatrix,
}

impl BoundaryMatrix {
    pub fn new(group: &AbGroup, k: usize, n: usize, bounds: &Bounds) -> Result<Self> {
        let domain = enumerate_cells(group, k, n, bounds)?;
        let codomain = if n == 0 { Vec::new() } else { enumerate_cells(group, k, n - 1, bounds)? };
        let index: HashMap<&Cell, usize> = codomain.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut matrix = IntMatrix::zeros(codomain.len(), domain.len());
        for (col, cell) in domain.iter().enumerate() {
            for (c, coeff) in boundary_cell(group, cell).terms() {
                let row = index[c];
                matrix.set(row, col, matrix.get(row, col) + coeff as i128);
            }
        }
        Ok(Self { domain, codomain, matrix })
    }
}

/// Chain complex `A^k_*` of a finite group with cached factorizations.
pub struct Complex {
    group: AbGroup,
    level: usize,
    bounds: Bounds,
    factored: HashMap<usize, (BoundaryMatrix, Smith)>,
}

/// Outcome of a boundary-membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// `x` is the boundary of the witness chain.
    Boundary(Chain),
    NotBoundary,
}

impl Membership {
    pub fn is_boundary(&self) -> bool {
        matches!(self, Membership::Boundary(_))
    }
}

impl Complex {
    pub fn new(group: AbGroup, level: usize, bounds: Bounds) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::InvalidArguments(format!("homology needs a finite group, got {group}")));
        }
        Ok(Self { group, level, bounds, factored: HashMap::new() })
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn level(&self) -> usize {
        self.level
    }

    fn factored(&mut self, n: usize) -> Result<&(BoundaryMatrix, Smith)> {
        if !self.factored.contains_key(&n) {
            let bm = BoundaryMatrix::new(&self.group, self.level, n, &self.bounds)?;
            let smith = Smith::new(bm.matrix.clone())?;
            self.factored.insert(n, (bm, smith));
        }
        Ok(&self.factored[&n])
    }

    /// Decides whether `x` (homogeneous of degree `n`) is a boundary of a
    /// degree `n + 1` chain. A witness is returned and re-checked.
    pub fn membership(&mut self, x: &Chain) -> Result<Membership> {
        if x.is_zero() {
            return Ok(Membership::Boundary(Chain::zero()));
        }
        let n = x.degree().ok_or_else(|| Error::InvalidArguments("chain is not homogeneous".into()))?;
        if x.level() > self.level {
            return Err(Error::LevelMismatch { level: self.level, found: x.level() });
        }
        let group = self.group.clone();
        let (bm, smith) = self.factored(n + 1)?;
        let index: HashMap<&Cell, usize> = bm.codomain.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut b = vec![0i128; bm.codomain.len()];
        for (cell, coeff) in x.terms() {
            let i =
                index.get(cell).ok_or_else(|| Error::InvalidArguments(format!("{cell} is not a cell over {group}")))?;
            b[*i] = coeff as i128;
        }
        let Some(y) = smith.solve(&b)? else {
            return Ok(Membership::NotBoundary);
        };
        let mut witness = Chain::zero();
        for (cell, &c) in bm.domain.iter().zip(&y) {
            let c = i64::try_from(c).map_err(|_| Error::Overflow("witness coefficient"))?;
            witness.add_term(cell.clone(), c);
        }
        if &boundary(&group, &witness) != x {
            return Err(Error::InvalidArguments("witness failed verification".into()));
        }
        Ok(Membership::Boundary(witness))
    }

    /// `H^k_n` from the ranks and elementary divisors of the adjacent boundaries.
    pub fn homology(&mut self, n: usize) -> Result<HomologyGroup> {
        let dim = check_bounds(&self.group, self.level, n, &self.bounds)? as usize;
        let rank_out = if n == 0 { 0 } else { self.factored(n)?.1.rank() };
        let incoming = &self.factored(n + 1)?.1;
        let rank_in = incoming.rank();
        Ok(HomologyGroup { free_rank: dim - rank_out - rank_in, torsion: incoming.torsion() })
    }
}

/// Finitely generated abelian group `Z^r + Z/t_1 + ... + Z/t_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<u128>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order for finite groups.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Convenience wrapper for a single homology group.
pub fn homology(group: &AbGroup, k: usize, n: usize, bounds: &Bounds) -> Result<HomologyGroup> {
    Complex::new(group.clone(), k, *bounds)?.homology(n)
}

/// Boundary membership of `x` in `A^k_*(group)`.
pub fn boundary_membership(group: &AbGroup, k: usize, x: &Chain, bounds: &Bounds) -> Result<Membership> {
    Complex::new(group.clone(), k, *bounds)?.membership(x)
}

/// Alternating inclusion-exclusion chain over the `lambda_i + 1` factors
/// `betas` in slot `i`: the sum over nonempty subsets `S` of
/// `(-1)^(lambda_i + 1 - |S|) {..; prod S; ..}_lambda`.
pub fn form_chain(
    group: &AbGroup,
    lambda: &[usize],
    i: usize,
    args: &[GroupElement],
    betas: &[GroupElement],
) -> Result<Chain> {
    if i >= lambda.len() || args.len() != lambda.len() {
        return Err(Error::InvalidArguments("slot or argument count does not match the composition".into()));
    }
    if betas.len() != lambda[i] + 1 {
        return Err(Error::InvalidArguments(format!(
            "slot {} of weight {} needs {} factors, got {}",
            i + 1,
            lambda[i],
            lambda[i] + 1,
            betas.len()
        )));
    }
    let mut out = Chain::zero();
    let full = betas.len();
    for mask in 1u32..(1 << full) {
        let size = mask.count_ones() as usize;
        let mut product = group.identity();
        for (b, beta) in betas.iter().enumerate() {
            if mask >> b & 1 == 1 {
                product = group.add(&product, beta);
            }
        }
        let mut slot_args = args.to_vec();
        slot_args[i] = product;
        let sign = if (full - size).is_multiple_of(2) { 1 } else { -1 };
        out.add_scaled(&symmetrized_cycle(&slot_args, lambda)?, sign);
    }
    Ok(out)
}

/// `{..; beta; ..}_lambda - (-1)^lambda_i {..; beta^-1; ..}_lambda`.
pub fn inverse_chain(group: &AbGroup, lambda: &[usize], i: usize, args: &[GroupElement]) -> Result<Chain> {
    if i >= lambda.len() {
        return Err(Error::InvalidArguments("slot out of range".into()));
    }
    let mut inv = args.to_vec();
    inv[i] = group.neg(&args[i]);
    let sign = if lambda[i].is_multiple_of(2) { -1 } else { 1 };
    let mut out = symmetrized_cycle(args, lambda)?;
    out.add_scaled(&symmetrized_cycle(&inv, lambda)?, sign);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureInstance {
    pub form_holds: bool,
    pub inverse_holds: bool,
}

impl ConjectureInstance {
    pub fn holds(&self) -> bool {
        self.form_holds && self.inverse_holds
    }
}

/// Decides both identities of one conjecture instance in `H^1_(2d-1)`.
/// Out-of-bounds instances surface as [`Error::BoundExceeded`].
pub fn check_conjecture_instance(
    complex: &mut Complex,
    lambda: &[usize],
    i: usize,
    args: &[GroupElement],
    betas: &[GroupElement],
) -> Result<ConjectureInstance> {
    let group = complex.group().clone();
    let form = form_chain(&group, lambda, i, args, betas)?;
    let mut inv_args = args.to_vec();
    inv_args[i] = betas[0].clone();
    let inverse = inverse_chain(&group, lambda, i, &inv_args)?;
    Ok(ConjectureInstance {
        form_holds: complex.membership(&form)?.is_boundary(),
        inverse_holds: complex.membership(&inverse)?.is_boundary(),
    })
}
