//! The generalized Rosso condition and Cartan matrices of braiding tensors.
//!
//! For a pair `(l, j)` and `m >= 0`, the difference of tensor powers
//! `u_m = ((m+1) a_l + a_j)^d - (m a_l + a_j)^d` splits into an eigenvector
//! `v_m` fixed by the reflection and an eigenvector `w_m` negated by it;
//! `s_m = v_m / (m+1)`. The Cartan entry `c_{l,j}` is minus the smallest `m`
//! with `R_m = 0`, where `R_m = 0` holds iff
//! `(chi(v_m) = 1 and chi(s_m) != 1) or chi(w_m) = 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{chi_from_profile, GammaVector, MuPower, SqrtBraidingTensor};

pub const DEFAULT_M_MAX: u32 = 1000;

pub fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn ipow(base: i128, exp: u32) -> i128 {
    base.checked_pow(exp).expect("exponent overflow in Rosso coefficients")
}

/// `(e_{m,k}, f_{m,k})`: binomial sums over `nu <= k-2` with `nu = k (mod 2)`
/// and over `nu <= k-1` with `nu != k (mod 2)` of `C(k, nu) m^nu`.
pub fn ef_coeffs(m: u64, k: u32) -> (i128, i128) {
    let m = m as i128;
    let mut e = 0i128;
    let mut f = 0i128;
    for nu in 0..k {
        let term = binomial(k, nu) * ipow(m, nu);
        if (k - nu).is_multiple_of(2) {
            if nu + 2 <= k {
                e += term;
            }
        } else {
            f += term;
        }
    }
    (e, f)
}

/// Doubled gamma coordinates of `u_m`, `v_m`, `w_m` and `s_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RossoVectors {
    pub m: u64,
    pub degree: usize,
    pub u: GammaVector,
    pub v: GammaVector,
    pub w: GammaVector,
    pub s: GammaVector,
}

/// Exact eigenvector decomposition at degree `d >= 2`.
pub fn rosso_vectors(degree: usize, m: u64) -> RossoVectors {
    assert!(degree >= 2, "degree must be at least 2");
    let d = degree;
    let mi = m as i128;
    let mut u = vec![0i128; d + 1];
    let mut s = vec![0i128; d + 1];
    for nu in 1..=d as u32 {
        let slot = d - nu as usize;
        u[slot] = 2 * (ipow(mi + 1, nu) - ipow(mi, nu));
        let alternating: i128 = (0..nu).map(|k| if (nu - k) % 2 == 0 { ipow(mi, k) } else { -ipow(mi, k) }).sum();
        s[slot] = ipow(mi + 1, nu - 1) + alternating;
    }
    let s = GammaVector::from_doubled(s);
    let u = GammaVector::from_doubled(u);
    let v = s.scale(mi + 1);
    let w = &u - &v;
    RossoVectors { m, degree, u, v, w, s }
}

/// `mu`-exponents of `chi(v_m)`, `chi(w_m)`, `chi(s_m)` for one `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagnosticRow {
    pub m: u64,
    pub chi_v: MuPower,
    pub chi_w: MuPower,
    pub chi_s: MuPower,
    /// Whether `R_m = 0`.
    pub vanishes: bool,
}

fn condition_from(chi_v: MuPower, chi_w: MuPower, chi_s: MuPower) -> bool {
    (chi_v.is_one() && !chi_s.is_one()) || chi_w.is_one()
}

fn diagnostic_row(t: &SqrtBraidingTensor, profile: &[MuPower], m: u64) -> DiagnosticRow {
    let vecs = rosso_vectors(t.degree(), m);
    let chi_v = chi_from_profile(t.datum(), profile, &vecs.v);
    let chi_w = chi_from_profile(t.datum(), profile, &vecs.w);
    let chi_s = chi_from_profile(t.datum(), profile, &vecs.s);
    DiagnosticRow { m, chi_v, chi_w, chi_s, vanishes: condition_from(chi_v, chi_w, chi_s) }
}

fn check_bound(degree: usize, m_max: u64) -> Result<()> {
    let fits = (m_max as i128 + 2).checked_pow(degree as u32 + 1).is_some_and(|p| p < 1i128 << 120);
    if fits {
        Ok(())
    } else {
        Err(Error::InvalidArguments(format!("m bound {m_max} too large for degree {degree}")))
    }
}

/// True iff `R_m = 0` for the pair `(l, j)`.
pub fn rosso_condition(t: &SqrtBraidingTensor, l: usize, j: usize, m: u64) -> Result<bool> {
    check_bound(t.degree(), m)?;
    let profile = t.gamma_profile(l, j)?;
    Ok(diagnostic_row(t, &profile, m).vanishes)
}

/// `-min { m <= m_max : R_m = 0 }`.
pub fn cartan_entry(t: &SqrtBraidingTensor, l: usize, j: usize, m_max: u32) -> Result<i64> {
    check_bound(t.degree(), m_max as u64)?;
    let profile = t.gamma_profile(l, j)?;
    (0..=m_max as u64)
        .find(|&m| diagnostic_row(t, &profile, m).vanishes)
        .map(|m| -(m as i64))
        .ok_or(Error::UndefinedCartanEntry { row: l, col: j, m_max })
}

/// Table of `chi(v_m)`, `chi(w_m)`, `chi(s_m)` over a range of `m`.
pub fn rosso_diagnostics(
    t: &SqrtBraidingTensor,
    l: usize,
    j: usize,
    ms: std::ops::RangeInclusive<u64>,
) -> Result<Vec<DiagnosticRow>> {
    check_bound(t.degree(), *ms.end())?;
    let profile = t.gamma_profile(l, j)?;
    Ok(ms.map(|m| diagnostic_row(t, &profile, m)).collect())
}

/// Square integer matrix satisfying (M1) `c_ii = 2`, `c_jk <= 0` off the
/// diagonal, and (M2) `c_ij = 0 <=> c_ji = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl GeneralizedCartanMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotGeneralizedCartan("matrix must be square and non-empty".into()));
        }
        let m = Self { n, entries: rows.into_iter().flatten().collect() };
        m.axiom_failures().first().cloned().map_or(Ok(m), |why| Err(Error::NotGeneralizedCartan(why)))
    }

    /// Human-readable list of (M1)/(M2) violations; empty when valid.
    pub fn axiom_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let c = self.get(i, j);
                if i == j && c != 2 {
                    out.push(format!("M1: c[{i},{i}] = {c} != 2"));
                }
                if i != j && c > 0 {
                    out.push(format!("M1: c[{i},{j}] = {c} > 0"));
                }
                if i != j && (c == 0) != (self.get(j, i) == 0) {
                    out.push(format!("M2: c[{i},{j}] = {c} but c[{j},{i}] = {}", self.get(j, i)));
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|c| c.to_string().len()).max().unwrap_or(1);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Full Cartan matrix of an even-degree tensor.
pub fn cartan_matrix(t: &SqrtBraidingTensor, m_max: u32) -> Result<GeneralizedCartanMatrix> {
    if t.degree() % 2 == 1 {
        return Err(Error::OddDegree(t.degree()));
    }
    let n = t.rank();
    let mut rows = vec![vec![2i64; n]; n];
    for (l, row) in rows.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if l != j {
                *slot = cartan_entry(t, l, j, m_max)?;
            }
        }
    }
    GeneralizedCartanMatrix::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RootDatum;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zeta11() -> SqrtBraidingTensor {
        SqrtBraidingTensor::from_rank2_profile(RootDatum::new(22).unwrap(), &[1, 1, 1, 1, 1]).unwrap()
    }

    /// Rank-3 degree-2 tensor with q_ii = -1 and q_ij = zeta_3 for i < j, mu of order 12.
    fn zeta3_rank3() -> SqrtBraidingTensor {
        let entries = [3, 2, 2, 0, 3, 2, 0, 0, 3];
        SqrtBraidingTensor::from_entries(3, 2, RootDatum::new(12).unwrap(), &entries).unwrap()
    }

    /// Expands `(x a_l + a_j)^d` into gamma coordinates by counting tuples.
    fn power_in_gamma_basis(x: i128, d: usize) -> Vec<i128> {
        let mut coords = vec![0i128; d + 1];
        for mask in 0u32..(1 << d) {
            let k = mask.count_ones() as usize;
            coords[k] += x.pow((d - k) as u32);
        }
        // each gamma_k collects C(d,k) tuples, each contributing x^(d-k); divide back to a coefficient
        (0..=d).map(|k| coords[k] / binomial(d as u32, k as u32)).collect()
    }

    #[test]
    fn ef_coefficients() {
        assert_eq!(ef_coeffs(0, 4).0, 1);
        assert_eq!(ef_coeffs(0, 3).0, 0);
        for m in 0..12u64 {
            for k in 0..9u32 {
                let (e, f) = ef_coeffs(m, k);
                let mi = m as i128;
                assert_eq!(e + f, (mi + 1).pow(k) - mi.pow(k), "m={m} k={k}");
            }
            assert_eq!(ef_coeffs(m, 2).1, 2 * m as i128);
        }
    }

    #[test]
    fn decomposition_matches_direct_expansion() {
        for d in 2..=7 {
            for m in 0..10u64 {
                let r = rosso_vectors(d, m);
                let hi = power_in_gamma_basis(m as i128 + 1, d);
                let lo = power_in_gamma_basis(m as i128, d);
                let u: Vec<i128> = hi.iter().zip(&lo).map(|(a, b)| 2 * (a - b)).collect();
                assert_eq!(r.u.doubled(), &u[..]);
                assert_eq!(&(&r.v + &r.w), &r.u);
                assert_eq!(r.s.scale(m as i128 + 1), r.v);
                assert!(r.v.is_integral() && r.w.is_integral() && r.u.is_integral());
                // v from the closed form (1/2)((m+1)^nu - m^nu + (-1)^nu) on gamma_{d-nu}
                for nu in 1..=d {
                    let mi = m as i128;
                    let sign = if nu % 2 == 0 { 1 } else { -1 };
                    let expected = (mi + 1).pow(nu as u32) - mi.pow(nu as u32) + sign;
                    assert_eq!(r.v.doubled()[d - nu], expected);
                }
                assert_eq!(r.v.doubled()[d], 0);
            }
        }
    }

    #[test]
    fn degree_four_closed_forms() {
        for m in 0..20i128 {
            let r = rosso_vectors(4, m as u64);
            let v = [2 * (2 * m.pow(3) + 3 * m * m + 2 * m + 1), 3 * m * m + 3 * m, 2 * (m + 1), 0, 0];
            let w = [2 * (2 * m.pow(3) + 3 * m * m + 2 * m), 3 * m * m + 3 * m + 2, 2 * m, 2, 0];
            assert_eq!(r.v.doubled(), &v);
            assert_eq!(r.w.doubled(), &w);
        }
        assert_eq!(rosso_vectors(4, 1).s.doubled(), &[8, 3, 2, 0, 0]);
        assert_eq!(rosso_vectors(4, 3).s.doubled(), &[44, 9, 2, 0, 0]);
    }

    #[test]
    fn low_degree_patterns() {
        for m in 0..15i128 {
            let r2 = rosso_vectors(2, m as u64);
            assert_eq!(r2.v.doubled(), &[2 * (m + 1), 0, 0]);
            assert_eq!(r2.w.doubled(), &[2 * m, 2, 0]);
            let r3 = rosso_vectors(3, m as u64);
            // chi(v_m) = q_0^{3m(m+1)/2} q_1^{m+1}
            assert_eq!(r3.v.doubled(), &[3 * m * (m + 1), 2 * (m + 1), 0, 0]);
            assert_eq!(r3.w.doubled(), &[3 * m * (m + 1) + 2, 2 * m, 2, 0]);
        }
    }

    #[test]
    fn zeta11_diagnostics_and_entry() {
        let t = zeta11();
        let rows = rosso_diagnostics(&t, 0, 1, 0..=3).unwrap();
        let exps: Vec<(u32, u32, u32)> =
            rows.iter().map(|r| (r.chi_v.exponent(), r.chi_w.exponent(), r.chi_s.exponent())).collect();
        assert_eq!(exps, vec![(4, 4, 4), (4, 4, 13), (2, 2, 8), (0, 0, 11)]);
        assert_eq!(rows.iter().map(|r| r.vanishes).collect::<Vec<_>>(), vec![false, false, false, true]);
        assert_eq!(cartan_entry(&t, 0, 1, 100).unwrap(), -3);
        assert_eq!(cartan_entry(&t, 1, 0, 100).unwrap(), -3);
        let c = cartan_matrix(&t, 100).unwrap();
        assert_eq!(c.rows(), vec![vec![2, -3], vec![-3, 2]]);
    }

    #[test]
    fn trivial_mixed_part_gives_zero_entry() {
        // q_{lj} q_{jl} = 1 at degree 2: R_0 = 1 - z_0 = 0
        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(10).unwrap(), &[3, 4, 6, 7]).unwrap();
        assert!(rosso_condition(&t, 0, 1, 0).unwrap());
        assert_eq!(cartan_matrix(&t, 10).unwrap().rows(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn zeta3_rank3_matrix() {
        let c = cartan_matrix(&zeta3_rank3(), 50).unwrap();
        assert_eq!(c.rows(), vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    }

    #[test]
    fn undefined_entry_and_odd_degree_errors() {
        // q_ll = 1 and q_lj q_jl = mu^2 of order 5: no m ever works
        let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(5).unwrap(), &[0, 1, 0, 0]).unwrap();
        assert_eq!(cartan_entry(&t, 0, 1, 40), Err(Error::UndefinedCartanEntry { row: 0, col: 1, m_max: 40 }));
        let odd = SqrtBraidingTensor::zeros(2, 3, RootDatum::new(5).unwrap()).unwrap();
        assert_eq!(cartan_matrix(&odd, 10), Err(Error::OddDegree(3)));
        assert!(cartan_entry(&odd, 0, 1, 10).is_ok());
        assert!(GeneralizedCartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn degree_two_matches_classical_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let m_mod: u32 = rng.gen_range(2..40);
            let entries: Vec<i64> = (0..4).map(|_| rng.gen_range(0..m_mod as i64)).collect();
            let t = SqrtBraidingTensor::from_entries(2, 2, RootDatum::new(m_mod).unwrap(), &entries).unwrap();
            let m_mod = m_mod as i64;
            let q_ll = 2 * entries[0];
            let q_mixed = 2 * (entries[1] + entries[2]);
            for m in 0..30i64 {
                let first = ((m + 1) * q_ll) % m_mod == 0 && q_ll % m_mod != 0;
                let second = (m * q_ll + q_mixed) % m_mod == 0;
                assert_eq!(rosso_condition(&t, 0, 1, m as u64).unwrap(), first || second);
            }
        }
    }

    #[test]
    fn zero_entries_are_symmetric_for_even_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let m_mod: u32 = rng.gen_range(2..30);
            let d = [2usize, 4, 6][rng.gen_range(0..3)];
            let n = 3usize;
            let entries: Vec<i64> = (0..n.pow(d as u32)).map(|_| rng.gen_range(0..m_mod as i64)).collect();
            let t = SqrtBraidingTensor::from_entries(n, d, RootDatum::new(m_mod).unwrap(), &entries).unwrap();
            for (l, j) in [(0, 1), (0, 2), (1, 2)] {
                assert_eq!(rosso_condition(&t, l, j, 0).unwrap(), rosso_condition(&t, j, l, 0).unwrap());
            }
        }
    }

    #[test]
    fn entries_depend_only_on_rank2_aggregates() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let m_mod: u32 = rng.gen_range(2..25);
            let d = rng.gen_range(2..6usize);
            let a: Vec<i64> = (0..1 << d).map(|_| rng.gen_range(0..m_mod as i64)).collect();
            let t = SqrtBraidingTensor::from_entries(2, d, RootDatum::new(m_mod).unwrap(), &a).unwrap();
            let profile: Vec<i64> = (0..=d).map(|k| t.gamma_aggregate(0, 1, k).unwrap().exponent() as i64).collect();
            let lifted = SqrtBraidingTensor::from_rank2_profile(t.datum(), &profile).unwrap();
            for (l, j) in [(0, 1), (1, 0)] {
                assert_eq!(cartan_entry(&t, l, j, 60).ok(), cartan_entry(&lifted, l, j, 60).ok());
            }
        }
    }
}
