//! Smith normal form over the integers with logged elementary operations,
//! so that linear systems `A y = b` can be solved exactly afterwards.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArguments("ragged matrix".into()));
        }
        Ok(Self { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, y: &[i128]) -> Result<Vec<i128>> {
        let mut out = vec![0i128; self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            for (c, &yc) in y.iter().enumerate() {
                let a = self.get(r, c);
                if a != 0 && yc != 0 {
                    *o = a.checked_mul(yc).and_then(|p| o.checked_add(p)).ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Swap(usize, usize),
    /// `dst += factor * src`
    AddMul {
        src: usize,
        dst: usize,
        factor: i128,
    },
    Negate(usize),
}

/// `U A V = D` with `D` diagonal. `U` and `V` are stored as operation logs.
#[derive(Debug, Clone)]
pub struct Smith {
    rows: usize,
    cols: usize,
    diagonal: Vec<i128>,
    row_ops: Vec<Op>,
    col_ops: Vec<Op>,
}

fn checked_axpy(dst: i128, factor: i128, src: i128) -> Result<i128> {
    factor.checked_mul(src).and_then(|p| dst.checked_add(p)).ok_or(Error::Overflow("Smith normal form"))
}

struct Work {
    m: IntMatrix,
    row_ops: Vec<Op>,
    col_ops: Vec<Op>,
}

impl Work {
    fn row_op(&mut self, op: Op, from_col: usize) -> Result<()> {
        let cols = self.m.cols;
        match op {
            Op::Swap(i, j) => {
                for c in from_col..cols {
                    self.m.data.swap(i * cols + c, j * cols + c);
                }
            }
            Op::AddMul { src, dst, factor } => {
                for c in from_col..cols {
                    let s = self.m.data[src * cols + c];
                    if s != 0 {
                        let d = &mut self.m.data[dst * cols + c];
                        *d = checked_axpy(*d, factor, s)?;
                    }
                }
            }
            Op::Negate(i) => {
                for c in from_col..cols {
                    self.m.data[i * cols + c] = -self.m.data[i * cols + c];
                }
            }
        }
        self.row_ops.push(op);
        Ok(())
    }

    fn col_op(&mut self, op: Op, from_row: usize) -> Result<()> {
        let cols = self.m.cols;
        let rows = self.m.rows;
        match op {
            Op::Swap(i, j) => {
                for r in from_row..rows {
                    self.m.data.swap(r * cols + i, r * cols + j);
                }
            }
            Op::AddMul { src, dst, factor } => {
                for r in from_row..rows {
                    let s = self.m.data[r * cols + src];
                    if s != 0 {
                        let d = &mut self.m.data[r * cols + dst];
                        *d = checked_axpy(*d, factor, s)?;
                    }
                }
            }
            Op::Negate(i) => {
                for r in from_row..rows {
                    self.m.data[r * cols + i] = -self.m.data[r * cols + i];
                }
            }
        }
        self.col_ops.push(op);
        Ok(())
    }

    /// Position of a smallest nonzero entry in the lower-right block.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for r in t..self.m.rows {
            for c in t..self.m.cols {
                let v = self.m.get(r, c).abs();
                if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, r, c));
                    if v == 1 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }
}

impl Smith {
    pub fn new(a: IntMatrix) -> Result<Self> {
        let (rows, cols) = (a.rows, a.cols);
        let mut w = Work { m: a, row_ops: Vec::new(), col_ops: Vec::new() };
        let mut diagonal = Vec::new();
        for t in 0..rows.min(cols) {
            let Some((r, c)) = w.pivot(t) else { break };
            if r != t {
                w.row_op(Op::Swap(t, r), t)?;
            }
            if c != t {
                w.col_op(Op::Swap(t, c), t)?;
            }
            loop {
                let mut dirty = false;
                for r in t + 1..rows {
                    let v = w.m.get(r, t);
                    if v != 0 {
                        let q = v / w.m.get(t, t);
                        if q != 0 {
                            w.row_op(Op::AddMul { src: t, dst: r, factor: -q }, t)?;
                        }
                        if w.m.get(r, t) != 0 {
                            dirty = true;
                        }
                    }
                }
                for c in t + 1..cols {
                    let v = w.m.get(t, c);
                    if v != 0 {
                        let q = v / w.m.get(t, t);
                        if q != 0 {
                            w.col_op(Op::AddMul { src: t, dst: c, factor: -q }, t)?;
                        }
                        if w.m.get(t, c) != 0 {
                            dirty = true;
                        }
                    }
                }
                if !dirty {
                    break;
                }
                // a remainder smaller than the pivot is left; move it into place
                let mut best = (w.m.get(t, t).abs(), t, t);
                for r in t + 1..rows {
                    let v = w.m.get(r, t).abs();
                    if v != 0 && v < best.0 {
                        best = (v, r, t);
                    }
                }
                for c in t + 1..cols {
                    let v = w.m.get(t, c).abs();
                    if v != 0 && v < best.0 {
                        best = (v, t, c);
                    }
                }
                if best.1 != t {
                    w.row_op(Op::Swap(t, best.1), t)?;
                }
                if best.2 != t {
                    w.col_op(Op::Swap(t, best.2), t)?;
                }
            }
            if w.m.get(t, t) < 0 {
                w.row_op(Op::Negate(t), t)?;
            }
            diagonal.push(w.m.get(t, t));
        }
        Ok(Self { rows, cols, diagonal, row_ops: w.row_ops, col_ops: w.col_ops })
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Nonzero diagonal entries (not normalized to divisibility order).
    pub fn diagonal(&self) -> &[i128] {
        &self.diagonal
    }

    /// Invariant factors `d_1 | d_2 | ...` greater than one.
    pub fn torsion(&self) -> Vec<u128> {
        invariant_factors(&self.diagonal)
    }

    /// An integer solution of `A y = b`, or `None` if there is none.
    pub fn solve(&self, b: &[i128]) -> Result<Option<Vec<i128>>> {
        if b.len() != self.rows {
            return Err(Error::InvalidArguments(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut c = b.to_vec();
        for op in &self.row_ops {
            apply(&mut c, *op)?;
        }
        let mut z = vec![0i128; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            if i < self.rank() {
                let d = self.diagonal[i];
                if ci % d != 0 {
                    return Ok(None);
                }
                z[i] = ci / d;
            } else if ci != 0 {
                return Ok(None);
            }
        }
        // V = E_1 E_2 ... E_t, so V z applies the logged column operations
        // in reverse, each acting on coordinates as its transpose
        for op in self.col_ops.iter().rev() {
            match *op {
                Op::AddMul { src, dst, factor } => {
                    z[src] = checked_axpy(z[src], factor, z[dst])?;
                }
                other => apply(&mut z, other)?,
            }
        }
        Ok(Some(z))
    }
}

fn apply(v: &mut [i128], op: Op) -> Result<()> {
    match op {
        Op::Swap(i, j) => v.swap(i, j),
        Op::AddMul { src, dst, factor } => v[dst] = checked_axpy(v[dst], factor, v[src])?,
        Op::Negate(i) => v[i] = -v[i],
    }
    Ok(())
}

fn prime_powers(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of `Z/d_1 + ... + Z/d_r`, ascending, units dropped.
pub fn invariant_factors(diagonal: &[i128]) -> Vec<u128> {
    let mut by_prime: std::collections::BTreeMap<u128, Vec<u32>> = Default::default();
    for &d in diagonal {
        for (p, e) in prime_powers(d.unsigned_abs()) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u128; len];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            factors[len - 1 - i] *= p.pow(e);
        }
    }
    factors
}
