//! Sparse Laurent polynomials over `Z` in the square roots of `q_0..q_d`, and
//! exact checks of the Rosso recursions as polynomial identities.
//!
//! Exponent vectors are stored doubled: the atomic variables are `sqrt(q_i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::lattice::GammaVector;
use crate::rosso::{ef_coeffs, rosso_vectors};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, i128>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    /// `coeff * prod sqrt(q_i)^doubled[i]`.
    pub fn monomial(doubled: Vec<i64>, coeff: i128) -> Self {
        let nvars = doubled.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(doubled, coeff);
        }
        Self { nvars, terms }
    }

    /// The formal monomial `chi_q(v)`.
    pub fn from_gamma(v: &GammaVector) -> Self {
        Self::monomial(v.doubled().iter().map(|&t| i64::try_from(t).expect("exponent overflow")).collect(), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i128)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Exponent vector of a single monomial with coefficient 1.
    pub fn as_monic_monomial(&self) -> Option<&[i64]> {
        match self.terms.iter().next() {
            Some((e, 1)) if self.terms.len() == 1 => Some(e),
            _ => None,
        }
    }

    fn add_term(&mut self, exps: Vec<i64>, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            let zero: Vec<Vec<i64>> = self.terms.iter().filter(|(_, &c)| c == 0).map(|(e, _)| e.clone()).collect();
            for e in zero {
                self.terms.remove(&e);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// `1 + x + ... + x^m`.
    pub fn geometric_sum(x: &Self, m: u64) -> Self {
        let mut acc = Self::zero(x.nvars);
        let mut power = Self::one(x.nvars);
        for _ in 0..=m {
            acc = &acc + &power;
            power = &power * x;
        }
        acc
    }

    /// Substitutes `sqrt(q_i) = mu^exps[i]` for a primitive `modulus`-th root `mu`.
    pub fn specialize(&self, exps: &[u32], modulus: u32) -> CyclotomicInt {
        assert_eq!(exps.len(), self.nvars, "specialization needs one exponent per variable");
        let m = modulus as i128;
        let mut coeffs = vec![0i128; modulus as usize];
        for (e, &c) in &self.terms {
            let k = e.iter().zip(exps).map(|(&a, &x)| a as i128 * x as i128).sum::<i128>().rem_euclid(m);
            coeffs[k as usize] += c;
        }
        CyclotomicInt::reduce(coeffs, modulus)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (e, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if pos == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x % 2 == 0 { format!("q{i}^{}", x / 2) } else { format!("q{i}^({x}/2)") })
                .collect();
            match (c.abs(), vars.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                (a, false) => write!(f, "{a}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Element of `Z[x]/(Phi_M(x))`, i.e. an exact algebraic integer in `Q(mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    modulus: u32,
    coeffs: Vec<i128>,
}

impl CyclotomicInt {
    fn reduce(mut coeffs: Vec<i128>, modulus: u32) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        let deg = phi.len() - 1;
        // phi is monic; long division from the top
        for top in (deg..coeffs.len()).rev() {
            let c = coeffs[top];
            if c != 0 {
                for (i, &p) in phi.iter().enumerate() {
                    coeffs[top - deg + i] -= c * p;
                }
            }
        }
        coeffs.truncate(deg);
        Self { modulus, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for all proper divisors d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i128; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quot[top - dd] = c;
        for (i, &p) in den.iter().enumerate() {
            rem[top - dd + i] -= c * p;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Outcome of checking one polynomial identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub holds: bool,
    /// Nonzero difference `lhs - rhs` when the identity fails.
    pub difference: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<IdentityCheck>,
}

impl Certificate {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.holds)
    }

    fn check(&mut self, label: String, lhs: &LaurentPoly, rhs: &LaurentPoly) {
        let diff = lhs - rhs;
        let holds = diff.is_zero();
        self.checks.push(IdentityCheck { label, holds, difference: (!holds).then(|| diff.to_string()) });
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            write!(f, "[{mark}] {}", c.label)?;
            if let Some(diff) = &c.difference {
                write!(f, "    lhs - rhs = {diff}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn one(d: usize) -> LaurentPoly {
    LaurentPoly::one(d + 1)
}

/// `r_m = prod_{i <= d-2} q_i^{e_{m,d-i}}`.
pub fn r_monomial(d: usize, m: u64) -> LaurentPoly {
    let mut exps = vec![0i64; d + 1];
    for (i, slot) in exps.iter_mut().enumerate().take(d - 1) {
        *slot = 2 * ef_coeffs(m, (d - i) as u32).0 as i64;
    }
    LaurentPoly::monomial(exps, 1)
}

/// `z_m = prod_{i <= d-1} q_i^{f_{m,d-i}}`.
pub fn z_monomial(d: usize, m: u64) -> LaurentPoly {
    let mut exps = vec![0i64; d + 1];
    for (i, slot) in exps.iter_mut().enumerate().take(d) {
        *slot = 2 * ef_coeffs(m, (d - i) as u32).1 as i64;
    }
    LaurentPoly::monomial(exps, 1)
}

/// `(1 - chi(v_m)) (1 - chi(w_m))`.
pub fn r_tilde(d: usize, m: u64) -> LaurentPoly {
    let vecs = rosso_vectors(d, m);
    let v = LaurentPoly::from_gamma(&vecs.v);
    let w = LaurentPoly::from_gamma(&vecs.w);
    &(&one(d) - &v) * &(&one(d) - &w)
}

/// `g_m = chi(s_m)`.
pub fn g_monomial(d: usize, m: u64) -> LaurentPoly {
    LaurentPoly::from_gamma(&rosso_vectors(d, m).s)
}

/// The reduced condition `R_m = (1 - chi(w_m)) (1 + g_m + ... + g_m^m)`.
pub fn rosso_polynomial(d: usize, m: u64) -> LaurentPoly {
    let w = LaurentPoly::from_gamma(&rosso_vectors(d, m).w);
    &(&one(d) - &w) * &LaurentPoly::geometric_sum(&g_monomial(d, m), m)
}

/// Checks `R~_0 = (1 - r_0)(1 - z_0)` and `R~_m = r_m R~_{m-1} + (1 - r_m)(1 - z_m)`
/// for `m <= m_max`, plus the classical closed form and recursion when `d = 2`.
pub fn verify_recursion(d: usize, m_max: u64) -> Certificate {
    verify_recursion_using(d, m_max, r_monomial)
}

/// Same as [`verify_recursion`] with a caller-supplied `r_m`.
pub fn verify_recursion_using(d: usize, m_max: u64, r: impl Fn(usize, u64) -> LaurentPoly) -> Certificate {
    assert!(d >= 2, "degree must be at least 2");
    let mut cert = Certificate::default();
    let o = one(d);
    let r0 = r(d, 0);
    let z0 = z_monomial(d, 0);
    cert.check(format!("d={d} m=0: R~_0 = (1 - r_0)(1 - z_0)"), &r_tilde(d, 0), &(&(&o - &r0) * &(&o - &z0)));
    for m in 1..=m_max {
        let rm = r(d, m);
        let zm = z_monomial(d, m);
        let rhs = &(&rm * &r_tilde(d, m - 1)) + &(&(&o - &rm) * &(&o - &zm));
        cert.check(format!("d={d} m={m}: R~_m = r_m R~_(m-1) + (1 - r_m)(1 - z_m)"), &r_tilde(d, m), &rhs);
    }
    if d == 2 {
        let q0 = LaurentPoly::monomial(vec![2, 0, 0], 1);
        let q1 = LaurentPoly::monomial(vec![0, 2, 0], 1);
        let closed = |k: u64| &(&o - &(&q0.pow(k as u32) * &q1)) * &LaurentPoly::geometric_sum(&q0, k);
        let mut classical = &o - &q1;
        cert.check("d=2 k=0: classical R_0 = 1 - q1".to_string(), &closed(0), &classical);
        for k in 1..=m_max {
            classical = &(&o - &(&q0.pow(2 * k as u32) * &q1)) + &(&q0 * &classical);
            cert.check(
                format!("d=2 k={k}: R_k = 1 - q0^(2k) q1 + q0 R_(k-1) equals (1 - q0^k q1) sum q0^nu"),
                &closed(k),
                &classical,
            );
            cert.check(format!("d=2 m={k}: R~_m = (1 - q0) R_m"), &r_tilde(2, k), &(&(&o - &q0) * &closed(k)));
        }
    }
    cert
}

/// Checks `chi(v_m) = g_m^{m+1}`, `1 - chi(v_m) = (1 - g_m) sum g_m^mu`,
/// `g_0 = r_0`, `R_0 = 1 - z_0` and the reduced recursion for `R_m`.
pub fn verify_divisibility(d: usize, m_max: u64) -> Certificate {
    assert!(d >= 2, "degree must be at least 2");
    let mut cert = Certificate::default();
    let o = one(d);
    for m in 0..=m_max {
        let vecs = rosso_vectors(d, m);
        let v = LaurentPoly::from_gamma(&vecs.v);
        let g = LaurentPoly::from_gamma(&vecs.s);
        cert.check(format!("d={d} m={m}: chi(v_m) = g_m^(m+1)"), &v, &g.pow(m as u32 + 1));
        cert.check(
            format!("d={d} m={m}: 1 - chi(v_m) = (1 - g_m)(1 + g_m + ... + g_m^m)"),
            &(&o - &v),
            &(&(&o - &g) * &LaurentPoly::geometric_sum(&g, m)),
        );
        cert.check(
            format!("d={d} m={m}: R~_m = (1 - g_m) R_m"),
            &r_tilde(d, m),
            &(&(&o - &g) * &rosso_polynomial(d, m)),
        );
        if m > 0 {
            let rm = r_monomial(d, m);
            let zm = z_monomial(d, m);
            let g_prev = g_monomial(d, m - 1);
            let lhs = &rosso_polynomial(d, m) * &(&o - &g);
            let rhs = &(&(&rm * &(&o - &g_prev)) * &rosso_polynomial(d, m - 1)) + &(&(&o - &rm) * &(&o - &zm));
            cert.check(
                format!("d={d} m={m}: (1 - g_m) R_m = r_m (1 - g_(m-1)) R_(m-1) + (1 - r_m)(1 - z_m)"),
                &lhs,
                &rhs,
            );
        }
    }
    let g0 = g_monomial(d, 0);
    cert.check(format!("d={d}: g_0 = r_0"), &g0, &r_monomial(d, 0));
    // product form prod_{nu=1..d} q_{d-nu}^{(1 + (-1)^nu)/2}
    let mut exps = vec![0i64; d + 1];
    for nu in 1..=d {
        exps[d - nu] = if nu % 2 == 0 { 2 } else { 0 };
    }
    cert.check(format!("d={d}: g_0 = prod q_(d-nu)^((1+(-1)^nu)/2)"), &g0, &LaurentPoly::monomial(exps, 1));
    cert.check(format!("d={d}: R_0 = 1 - z_0"), &rosso_polynomial(d, 0), &(&o - &z_monomial(d, 0)));
    cert
}
