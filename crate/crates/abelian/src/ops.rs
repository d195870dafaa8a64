use weyl_core::AbGroup;

use crate::cell::{Cell, Chain};
use crate::error::{Error, Result};

/// Components of `cell` viewed as a generator of level `k`, with degrees.
/// At level 0 the components are the single elements of the bar tuple.
fn components(cell: &Cell, k: usize) -> Result<Vec<Cell>> {
    match cell {
        Cell::Bar(xs) if k == 0 => Ok(xs.iter().map(|x| Cell::Bar(vec![x.clone()])).collect()),
        Cell::Join { level, parts } if *level == k => Ok(parts.clone()),
        c if c.level() < k => Ok(vec![c.clone()]),
        c => Err(Error::LevelMismatch { level: k, found: c.level() }),
    }
}

fn assemble(k: usize, pieces: Vec<Cell>) -> Cell {
    if k == 0 {
        let elements = pieces
            .into_iter()
            .flat_map(|p| match p {
                Cell::Bar(xs) => xs,
                Cell::Join { .. } => unreachable!("level-0 pieces are elements"),
            })
            .collect();
        Cell::Bar(elements)
    } else {
        Cell::join_unchecked(k, pieces)
    }
}

/// Order-preserving interleavings of `p` and `q` items, as the set of
/// positions taken by the first sequence.
fn interleavings(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, left: usize, total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for pos in start..=total - left {
            cur.push(pos);
            rec(pos + 1, left - 1, total, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p, p + q, &mut Vec::new(), &mut out);
    out
}

/// `x *_k y` on generators.
pub fn shuffle_cells(x: &Cell, y: &Cell, k: usize) -> Result<Chain> {
    let xs = components(x, k)?;
    let ys = components(y, k)?;
    let (p, q) = (xs.len(), ys.len());
    let xd: Vec<usize> = xs.iter().map(|c| c.degree() + k).collect();
    let yd: Vec<usize> = ys.iter().map(|c| c.degree() + k).collect();
    let mut out = Chain::zero();
    for positions in interleavings(p, q) {
        let mut pieces = Vec::with_capacity(p + q);
        let mut sign = 0usize;
        let (mut i, mut j) = (0, 0);
        for slot in 0..p + q {
            if i < p && positions[i] == slot {
                // every y-component already placed precedes this x-component
                sign += xd[i] * yd[..j].iter().sum::<usize>();
                pieces.push(xs[i].clone());
                i += 1;
            } else {
                pieces.push(ys[j].clone());
                j += 1;
            }
        }
        let coeff = if sign.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(assemble(k, pieces), coeff);
    }
    Ok(out)
}

/// Bilinear extension of [`shuffle_cells`].
pub fn shuffle(x: &Chain, y: &Chain, k: usize) -> Result<Chain> {
    let mut out = Chain::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&shuffle_cells(a, b, k)?, ca * cb);
        }
    }
    Ok(out)
}

/// Boundary of one generator.
pub fn boundary_cell(group: &AbGroup, cell: &Cell) -> Chain {
    match cell {
        Cell::Bar(xs) => bar_boundary(group, xs),
        Cell::Join { level, parts } => join_boundary(group, *level, parts),
    }
}

fn bar_boundary(group: &AbGroup, xs: &[weyl_core::GroupElement]) -> Chain {
    let n = xs.len();
    let mut out = Chain::zero();
    if n == 0 {
        return out;
    }
    out.add_term(Cell::Bar(xs[1..].to_vec()), 1);
    for i in 0..n - 1 {
        let mut ys = Vec::with_capacity(n - 1);
        ys.extend_from_slice(&xs[..i]);
        ys.push(group.add(&xs[i], &xs[i + 1]));
        ys.extend_from_slice(&xs[i + 2..]);
        out.add_term(Cell::Bar(ys), if i % 2 == 0 { -1 } else { 1 });
    }
    out.add_term(Cell::Bar(xs[..n - 1].to_vec()), if n.is_multiple_of(2) { 1 } else { -1 });
    out
}

fn join_boundary(group: &AbGroup, k: usize, parts: &[Cell]) -> Chain {
    let p = parts.len();
    let mut out = Chain::zero();
    // a[i] = n_1 + ... + n_i + i k
    let mut a = vec![0usize; p + 1];
    for i in 0..p {
        a[i + 1] = a[i] + parts[i].degree() + k;
    }
    let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
    for i in 0..p {
        for (c, coeff) in boundary_cell(group, &parts[i]).terms() {
            let mut new_parts = parts.to_vec();
            new_parts[i] = c.clone();
            out.add_term(Cell::join_unchecked(k, new_parts), sign(a[i]) * coeff);
        }
    }
    for i in 0..p - 1 {
        let product = shuffle_cells(&parts[i], &parts[i + 1], k - 1).expect("components have lower level");
        for (c, coeff) in product.terms() {
            let mut new_parts = Vec::with_capacity(p - 1);
            new_parts.extend_from_slice(&parts[..i]);
            new_parts.push(c.clone());
            new_parts.extend_from_slice(&parts[i + 2..]);
            out.add_term(Cell::join_unchecked(k, new_parts), sign(a[i + 1]) * coeff);
        }
    }
    out
}

/// Linear extension of [`boundary_cell`].
pub fn boundary(group: &AbGroup, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (c, coeff) in x.terms() {
        out.add_scaled(&boundary_cell(group, c), coeff);
    }
    out
}
