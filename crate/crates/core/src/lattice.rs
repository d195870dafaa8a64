//! Exact arithmetic in the cyclic group generated by a fixed primitive root
//! of unity `mu`, braiding tensors of square-root exponents, gamma-basis
//! vectors and finitely generated abelian groups.
//!
//! Every value of a braiding is written `mu^e` with `e` in `Z/M`, so all
//! computations are integer computations modulo `M`. Tensor entries are the
//! exponents of the fixed square roots: an entry `e` means `sqrt(q) = mu^e`
//! and `q = mu^(2e)`.
//!
//! Indices are 0-based throughout the library; the JSON format is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of tensor entries we are willing to store densely.
pub const MAX_TENSOR_ENTRIES: usize = 1 << 22;

/// Order `M` of the fixed primitive root of unity `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootDatum {
    modulus: u32,
}

impl RootDatum {
    pub fn new(modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArguments("modulus must be positive".into()));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn reduce(self, e: i128) -> u32 {
        e.rem_euclid(self.modulus as i128) as u32
    }

    pub fn power(self, e: i128) -> MuPower {
        MuPower { exp: self.reduce(e), modulus: self.modulus }
    }
}

/// A power `mu^exp` of the fixed primitive `M`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuPower {
    exp: u32,
    modulus: u32,
}

impl MuPower {
    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    /// Multiplicative order of this root of unity.
    pub fn order(self) -> u32 {
        self.modulus / gcd(self.exp as u64, self.modulus as u64) as u32
    }
}

impl fmt::Display for MuPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu^{} (mod {})", self.exp, self.modulus)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rank-`n`, degree-`d` tensor of square-root exponents, stored densely in
/// lexicographic index order (first index most significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtBraidingTensor {
    rank: usize,
    degree: usize,
    datum: RootDatum,
    entries: Vec<u32>,
}

impl SqrtBraidingTensor {
    pub fn zeros(rank: usize, degree: usize, datum: RootDatum) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArguments("rank must be positive".into()));
        }
        if degree < 2 {
            return Err(Error::InvalidArguments(format!("degree must be at least 2, got {degree}")));
        }
        let len = checked_len(rank, degree)?;
        Ok(Self { rank, degree, datum, entries: vec![0; len] })
    }

    /// Builds a tensor from exponents in lexicographic index order.
    pub fn from_entries(rank: usize, degree: usize, datum: RootDatum, entries: &[i64]) -> Result<Self> {
        let mut t = Self::zeros(rank, degree, datum)?;
        if entries.len() != t.entries.len() {
            return Err(Error::InvalidArguments(format!(
                "expected {} entries, got {}",
                t.entries.len(),
                entries.len()
            )));
        }
        for (slot, &e) in t.entries.iter_mut().zip(entries) {
            *slot = datum.reduce(e as i128);
        }
        Ok(t)
    }

    /// Lifts a rank-2 aggregate profile `(e_0, ..., e_d)` to a full tensor:
    /// each aggregate sits on the lexicographically smallest index of its
    /// orbit (the tuple `1..1 2..2` with `k` trailing 2s), zero elsewhere.
    pub fn from_rank2_profile(datum: RootDatum, profile: &[i64]) -> Result<Self> {
        if profile.len() < 3 {
            return Err(Error::InvalidArguments(format!(
                "a rank-2 profile needs degree + 1 >= 3 entries, got {}",
                profile.len()
            )));
        }
        let degree = profile.len() - 1;
        let mut t = Self::zeros(2, degree, datum)?;
        for (k, &e) in profile.iter().enumerate() {
            let mut index = vec![0usize; degree];
            for slot in index.iter_mut().skip(degree - k) {
                *slot = 1;
            }
            t.set(&index, e)?;
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn datum(&self) -> RootDatum {
        self.datum
    }

    pub fn modulus(&self) -> u32 {
        self.datum.modulus
    }

    /// Flattened exponents in lexicographic index order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn flat_index(&self, index: &[usize]) -> Result<usize> {
        if index.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: index.len() });
        }
        let mut flat = 0usize;
        for &i in index {
            if i >= self.rank {
                return Err(Error::InvalidArguments(format!("index {i} out of range for rank {}", self.rank)));
            }
            flat = flat * self.rank + i;
        }
        Ok(flat)
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut index = vec![0; self.degree];
        for slot in index.iter_mut().rev() {
            *slot = flat % self.rank;
            flat /= self.rank;
        }
        index
    }

    pub fn get(&self, index: &[usize]) -> Result<u32> {
        Ok(self.entries[self.flat_index(index)?])
    }

    pub fn set(&mut self, index: &[usize], exp: i64) -> Result<()> {
        let flat = self.flat_index(index)?;
        self.entries[flat] = self.datum.reduce(exp as i128);
        Ok(())
    }

    fn check_pair(&self, l: usize, j: usize) -> Result<()> {
        if l == j {
            return Err(Error::InvalidArguments(format!("indices must differ, got ({l}, {j})")));
        }
        if l >= self.rank || j >= self.rank {
            return Err(Error::InvalidArguments(format!("pair ({l}, {j}) out of range for rank {}", self.rank)));
        }
        Ok(())
    }

    /// Square-root exponent of `q_k`: the sum of entries over all index
    /// tuples in `{l, j}^d` with exactly `k` coordinates equal to `j`.
    pub fn gamma_aggregate(&self, l: usize, j: usize, k: usize) -> Result<MuPower> {
        self.check_pair(l, j)?;
        if k > self.degree {
            return Err(Error::InvalidArguments(format!("k = {k} exceeds degree {}", self.degree)));
        }
        Ok(self.datum.power(self.raw_aggregate(l, j, k) as i128))
    }

    /// All `d + 1` aggregates for the pair `(l, j)`.
    pub fn gamma_profile(&self, l: usize, j: usize) -> Result<Vec<MuPower>> {
        self.check_pair(l, j)?;
        Ok((0..=self.degree).map(|k| self.datum.power(self.raw_aggregate(l, j, k) as i128)).collect())
    }

    fn raw_aggregate(&self, l: usize, j: usize, k: usize) -> u64 {
        let d = self.degree;
        let mut total = 0u64;
        for mask in 0u64..(1u64 << d) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut flat = 0usize;
            for t in (0..d).rev() {
                let i = if mask >> t & 1 == 1 { j } else { l };
                flat = flat * self.rank + i;
            }
            total += self.entries[flat] as u64;
        }
        total % self.datum.modulus as u64
    }

    /// `mu`-exponent of `chi_q(v)`: doubled coordinates pair with square-root
    /// exponents, so `chi_q(sum t_k/2 gamma_k) = mu^(sum t_k e_k)`.
    pub fn chi_eval(&self, l: usize, j: usize, v: &GammaVector) -> Result<MuPower> {
        if v.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: v.degree() });
        }
        let profile = self.gamma_profile(l, j)?;
        Ok(chi_from_profile(self.datum, &profile, v))
    }
}

/// Pairs a doubled gamma vector with an aggregate profile.
pub fn chi_from_profile(datum: RootDatum, profile: &[MuPower], v: &GammaVector) -> MuPower {
    let m = datum.modulus as i128;
    let total =
        v.doubled().iter().zip(profile).fold(0i128, |acc, (&t, e)| (acc + t.rem_euclid(m) * e.exponent() as i128) % m);
    datum.power(total)
}

fn checked_len(rank: usize, degree: usize) -> Result<usize> {
    let mut len = 1usize;
    for _ in 0..degree {
        len =
            len.checked_mul(rank).filter(|&l| l <= MAX_TENSOR_ENTRIES).ok_or(Error::TensorTooLarge { rank, degree })?;
    }
    Ok(len)
}

/// Integer vector in the basis `gamma_0..gamma_d`, stored doubled so that
/// half-integer coordinates stay exact: `t` represents `sum (t_k / 2) gamma_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaVector {
    doubled: Vec<i128>,
}

impl GammaVector {
    pub fn zero(degree: usize) -> Self {
        Self { doubled: vec![0; degree + 1] }
    }

    pub fn from_doubled(doubled: Vec<i128>) -> Self {
        assert!(!doubled.is_empty(), "gamma vector needs at least one coordinate");
        Self { doubled }
    }

    /// The basis vector `gamma_k` (doubled coordinate 2).
    pub fn basis(degree: usize, k: usize) -> Self {
        let mut v = Self::zero(degree);
        v.doubled[k] = 2;
        v
    }

    pub fn degree(&self) -> usize {
        self.doubled.len() - 1
    }

    pub fn doubled(&self) -> &[i128] {
        &self.doubled
    }

    /// True when every represented coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|t| t % 2 == 0)
    }

    pub fn scale(&self, c: i128) -> Self {
        Self { doubled: self.doubled.iter().map(|t| t * c).collect() }
    }

    /// Exact division of every coordinate, `None` if some coordinate is not divisible.
    pub fn div_exact(&self, c: i128) -> Option<Self> {
        if c == 0 {
            return None;
        }
        self.doubled
            .iter()
            .map(|t| (t % c == 0).then(|| t / c))
            .collect::<Option<Vec<_>>>()
            .map(|doubled| Self { doubled })
    }
}

impl std::ops::Add for &GammaVector {
    type Output = GammaVector;
    fn add(self, rhs: &GammaVector) -> GammaVector {
        assert_eq!(self.degree(), rhs.degree(), "gamma vector degree mismatch");
        GammaVector { doubled: self.doubled.iter().zip(&rhs.doubled).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &GammaVector {
    type Output = GammaVector;
    fn sub(self, rhs: &GammaVector) -> GammaVector {
        assert_eq!(self.degree(), rhs.degree(), "gamma vector degree mismatch");
        GammaVector { doubled: self.doubled.iter().zip(&rhs.doubled).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &GammaVector {
    type Output = GammaVector;
    fn neg(self) -> GammaVector {
        self.scale(-1)
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.doubled.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if t % 2 == 0 {
                write!(f, "{}", t / 2)?;
            } else {
                write!(f, "{t}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Finitely generated abelian group `Z^r x Z/m_1 x ... x Z/m_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// Element of an [`AbGroup`]: free coordinates first, then torsion
/// coordinates reduced into `0..m_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    /// Multiplicative word in the generators `a, b, c, ...`, `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        if self.0.len() > 26 {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            return write!(f, "({})", parts.join(","));
        }
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let letter = (b'a' + i as u8) as char;
            if c == 1 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{c}")?;
            }
        }
        Ok(())
    }
}

impl AbGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if torsion.contains(&0) {
            return Err(Error::InvalidArguments("torsion orders must be positive".into()));
        }
        Ok(Self { free_rank, torsion })
    }

    /// Free abelian group on `rank` generic symbols.
    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(0, vec![m])
    }

    pub fn trivial() -> Self {
        Self { free_rank: 0, torsion: Vec::new() }
    }

    /// Parses `Z/2xZ/3`, `Z^2`, `Z^2xZ/4`, `Z`, or `1` for the trivial group.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s == "0" || s.is_empty() {
            return Ok(Self::trivial());
        }
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for factor in s.split(['x', '*']) {
            let factor = factor.trim();
            let bad = || Error::InvalidArguments(format!("cannot parse group factor `{factor}`"));
            if factor == "Z" {
                free_rank += 1;
            } else if let Some(r) = factor.strip_prefix("Z^") {
                free_rank += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(m) = factor.strip_prefix("Z/") {
                let m = m.parse::<u64>().map_err(|_| bad())?;
                if m == 0 {
                    return Err(bad());
                }
                torsion.push(m);
            } else {
                return Err(bad());
            }
        }
        Self::new(free_rank, torsion)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of coordinates of an element.
    pub fn ngens(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.ngens()])
    }

    /// The `i`-th generator (symbol `a` is generator 0).
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        if i >= self.ngens() {
            return Err(Error::InvalidArguments(format!("group has only {} generators", self.ngens())));
        }
        let mut coords = vec![0; self.ngens()];
        coords[i] = 1;
        Ok(self.reduce(coords))
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement> {
        if coords.len() != self.ngens() {
            return Err(Error::InvalidArguments(format!(
                "element needs {} coordinates, got {}",
                self.ngens(),
                coords.len()
            )));
        }
        Ok(self.reduce(coords))
    }

    fn reduce(&self, mut coords: Vec<i64>) -> GroupElement {
        for (c, &m) in coords[self.free_rank..].iter_mut().zip(&self.torsion) {
            *c = c.rem_euclid(m as i64);
        }
        GroupElement(coords)
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.reduce(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        self.reduce(x.0.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &GroupElement, c: i64) -> GroupElement {
        self.reduce(x.0.iter().map(|a| a * c).collect())
    }

    /// All elements of a finite group in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &m in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..m as i64).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElement).collect())
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.free_rank {
            0 => {}
            1 => factors.push("Z".to_string()),
            r => factors.push(format!("Z^{r}")),
        }
        factors.extend(self.torsion.iter().map(|m| format!("Z/{m}")));
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("x"))
        }
    }
}

/// JSON description of a tensor. Either a full 1-based entry list or a
/// rank-2 aggregate profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub modulus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sqrt_entries: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank2_profile: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub index: Vec<usize>,
    pub exp: i64,
}

impl TensorFile {
    pub fn to_tensor(&self) -> Result<SqrtBraidingTensor> {
        let datum = RootDatum::new(self.modulus).map_err(|_| Error::Schema("modulus must be positive".into()))?;
        match (&self.sqrt_entries, &self.rank2_profile) {
            (Some(_), Some(_)) => Err(Error::Schema("give either sqrt_entries or rank2_profile, not both".into())),
            (None, None) => Err(Error::Schema("missing sqrt_entries or rank2_profile".into())),
            (None, Some(profile)) => {
                if profile.len() != self.degree + 1 {
                    return Err(Error::Schema(format!(
                        "rank2_profile needs degree + 1 = {} entries, got {}",
                        self.degree + 1,
                        profile.len()
                    )));
                }
                if self.rank.is_some_and(|r| r != 2) {
                    return Err(Error::Schema("rank2_profile requires rank 2".into()));
                }
                SqrtBraidingTensor::from_rank2_profile(datum, profile)
            }
            (Some(entries), None) => {
                let rank = self.rank.ok_or_else(|| Error::Schema("sqrt_entries requires rank".into()))?;
                let mut t = SqrtBraidingTensor::zeros(rank, self.degree, datum)?;
                let mut seen = std::collections::HashSet::new();
                for (pos, entry) in entries.iter().enumerate() {
                    if entry.index.iter().any(|&i| i == 0 || i > rank) || entry.index.len() != self.degree {
                        return Err(Error::Schema(format!(
                            "sqrt_entries[{pos}].index {:?} is not a 1-based index of length {} with entries <= {rank}",
                            entry.index, self.degree
                        )));
                    }
                    let zero_based: Vec<usize> = entry.index.iter().map(|i| i - 1).collect();
                    if !seen.insert(zero_based.clone()) {
                        return Err(Error::Schema(format!("sqrt_entries[{pos}] repeats index {:?}", entry.index)));
                    }
                    t.set(&zero_based, entry.exp)?;
                }
                Ok(t)
            }
        }
    }

    /// Full entry list of a tensor, omitting zero exponents.
    pub fn from_tensor(t: &SqrtBraidingTensor) -> Self {
        let sqrt_entries = t
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(flat, &e)| TensorEntry {
                index: t.unflatten(flat).into_iter().map(|i| i + 1).collect(),
                exp: e as i64,
            })
            .collect();
        Self {
            modulus: t.modulus(),
            rank: Some(t.rank()),
            degree: t.degree(),
            sqrt_entries: Some(sqrt_entries),
            rank2_profile: None,
        }
    }

    pub fn parse_json(s: &str) -> Result<SqrtBraidingTensor> {
        let file: TensorFile = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        file.to_tensor()
    }
}
