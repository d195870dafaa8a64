use weyl_core::{GroupElement, SqrtBraidingTensor};

use crate::cell::{Cell, Chain};
use crate::error::{Error, Result};

/// Words with `lambda[i]` copies of the letter `i`, in lexicographic order.
pub fn multiset_permutations(lambda: &[usize]) -> Vec<Vec<usize>> {
    fn rec(counts: &mut [usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i);
                rec(counts, left - 1, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let mut counts = lambda.to_vec();
    let total = lambda.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts, total, &mut Vec::new(), &mut out);
    out
}

/// `{a_1; ...; a_p}_lambda`: one pure cell `[b_1|...|b_d]` per arrangement
/// of the index word. Equal arguments give repeated cells, so coefficients
/// can exceed one.
pub fn symmetrized_cycle(args: &[GroupElement], lambda: &[usize]) -> Result<Chain> {
    if args.len() != lambda.len() {
        return Err(Error::InvalidArguments(format!(
            "composition has {} parts but {} arguments were given",
            lambda.len(),
            args.len()
        )));
    }
    if lambda.is_empty() || lambda.contains(&0) {
        return Err(Error::InvalidArguments("composition parts must be positive".into()));
    }
    let mut out = Chain::zero();
    for word in multiset_permutations(lambda) {
        let elements: Vec<GroupElement> = word.iter().map(|&i| args[i].clone()).collect();
        out.add_term(Cell::pure(&elements), 1);
    }
    Ok(out)
}

/// `mu`-exponent of `theta([x_1|...|x_d])` for the cochain defined by a
/// square-root tensor over `Z^n`: the multilinear extension of
/// `q_{i_1..i_d}` on the standard basis, at the `q` level (doubled entries).
pub fn dcharacter_eval(t: &SqrtBraidingTensor, cell: &Cell) -> Result<u32> {
    let xs =
        cell.pure_elements().ok_or_else(|| Error::InvalidCell(format!("{cell} is not of the form [x_1|...|x_d]")))?;
    if xs.len() != t.degree() {
        return Err(weyl_core::Error::DegreeMismatch { expected: t.degree(), found: xs.len() }.into());
    }
    if let Some(x) = xs.iter().find(|x| x.coords().len() != t.rank()) {
        return Err(Error::InvalidArguments(format!("{x} is not an element of Z^{}", t.rank())));
    }
    let m = t.modulus() as i128;
    let mut total: i128 = 0;
    for (flat, &e) in t.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let index = t.unflatten(flat);
        let mut weight: i128 = 1;
        for (pos, &i) in index.iter().enumerate() {
            weight = weight * xs[pos].coords()[i] as i128 % m;
            if weight == 0 {
                break;
            }
        }
        total = (total + 2 * e as i128 * weight).rem_euclid(m);
    }
    Ok(total as u32)
}

/// Additive extension of [`dcharacter_eval`] to chains.
pub fn cochain_eval(t: &SqrtBraidingTensor, x: &Chain) -> Result<u32> {
    let m = t.modulus() as i128;
    let mut total: i128 = 0;
    for (cell, coeff) in x.terms() {
        total = (total + coeff as i128 * dcharacter_eval(t, cell)? as i128).rem_euclid(m);
    }
    Ok(total as u32)
}

/// `theta_lambda(a_1; ...; a_p)`: the cochain evaluated on the symmetrized cycle.
pub fn theta_lambda(t: &SqrtBraidingTensor, lambda: &[usize], args: &[GroupElement]) -> Result<u32> {
    let d: usize = lambda.iter().sum();
    if d != t.degree() {
        return Err(weyl_core::Error::DegreeMismatch { expected: t.degree(), found: d }.into());
    }
    cochain_eval(t, &symmetrized_cycle(args, lambda)?)
}

/// Value of `theta o boundary` on a level-1 cell, where `theta` is the tensor
/// cochain extended by zero on cells that are not pure. A cocycle gives 0.
pub fn cocycle_defect(t: &SqrtBraidingTensor, cell: &Cell) -> Result<u32> {
    let group = weyl_core::AbGroup::free(t.rank());
    let m = t.modulus() as i128;
    let mut total: i128 = 0;
    for (c, coeff) in crate::ops::boundary_cell(&group, cell).terms() {
        if c.pure_elements().is_some_and(|xs| xs.len() == t.degree()) {
            total = (total + coeff as i128 * dcharacter_eval(t, c)? as i128).rem_euclid(m);
        }
    }
    Ok(total as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use weyl_core::{AbGroup, RootDatum};

    #[test]
    fn permutation_counts_are_multinomial() {
        assert_eq!(multiset_permutations(&[2, 2]).len(), 6);
        assert_eq!(multiset_permutations(&[3, 1]).len(), 4);
        assert_eq!(multiset_permutations(&[1, 1, 1]).len(), 6);
        assert_eq!(multiset_permutations(&[4]).len(), 1);
    }

    #[test]
    fn lambda_d_is_single_cell() {
        let g = AbGroup::free(2);
        let a = g.generator(0).unwrap();
        let c = symmetrized_cycle(std::slice::from_ref(&a), &[3]).unwrap();
        assert_eq!(c.to_string(), "[a|a|a]");
    }

    #[test]
    fn equal_arguments_accumulate() {
        let g = AbGroup::free(1);
        let a = g.generator(0).unwrap();
        let c = symmetrized_cycle(&[a.clone(), a], &[1, 1]).unwrap();
        assert_eq!(c.to_string(), "2*[a|a]");
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let g = AbGroup::free(2);
        assert!(symmetrized_cycle(&[g.generator(0).unwrap()], &[1, 1]).is_err());
    }

    #[test]
    fn degree_two_theta_matches_entries() {
        let datum = RootDatum::new(30).unwrap();
        let t = SqrtBraidingTensor::from_entries(2, 2, datum, &[3, 5, 7, 11]).unwrap();
        let g = AbGroup::free(2);
        let (a, b) = (g.generator(0).unwrap(), g.generator(1).unwrap());
        assert_eq!(theta_lambda(&t, &[2], std::slice::from_ref(&a)).unwrap(), 6);
        assert_eq!(theta_lambda(&t, &[1, 1], &[a.clone(), b.clone()]).unwrap(), (2 * (5 + 7)));
        assert_eq!(theta_lambda(&t, &[1, 1], &[a, g.identity()]).unwrap(), 0);
    }

    #[test]
    fn non_pure_cells_are_rejected() {
        let datum = RootDatum::new(6).unwrap();
        let t = SqrtBraidingTensor::zeros(2, 2, datum).unwrap();
        let g = AbGroup::free(2);
        let cell = crate::cell::parse_cell(&g, "[a,b]").unwrap();
        assert!(matches!(dcharacter_eval(&t, &cell), Err(Error::InvalidCell(_))));
    }
}
