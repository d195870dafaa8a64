use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use weyl_core::{AbGroup, GroupElement};

use crate::error::{Error, Result};

/// Generator of `A^k_n`. Level-0 cells are bar tuples; higher cells join
/// components with `k` bars. Singleton joins never occur: a one-component
/// join is the component itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Bar(Vec<GroupElement>),
    Join { level: usize, parts: Vec<Cell> },
}

impl Cell {
    pub fn bar(elements: Vec<GroupElement>) -> Self {
        Cell::Bar(elements)
    }

    /// The empty bar tuple, generator of degree 0.
    pub fn empty() -> Self {
        Cell::Bar(Vec::new())
    }

    /// `[parts_1 |_level ... |_level parts_p]` in canonical form.
    pub fn join(level: usize, mut parts: Vec<Cell>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidCell("a join needs at least one component".into()));
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        if level == 0 {
            return Err(Error::InvalidCell("level-0 cells are bar tuples".into()));
        }
        if let Some(p) = parts.iter().find(|p| p.level() >= level) {
            return Err(Error::LevelMismatch { level: level - 1, found: p.level() });
        }
        Ok(Cell::Join { level, parts })
    }

    pub(crate) fn join_unchecked(level: usize, mut parts: Vec<Cell>) -> Self {
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Cell::Join { level, parts }
        }
    }

    /// Pure cell `[x_1 | ... | x_d]` of single-element components.
    pub fn pure(elements: &[GroupElement]) -> Self {
        let parts = elements.iter().map(|x| Cell::Bar(vec![x.clone()])).collect();
        Self::join_unchecked(1, parts)
    }

    pub fn level(&self) -> usize {
        match self {
            Cell::Bar(_) => 0,
            Cell::Join { level, .. } => *level,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Cell::Bar(xs) => xs.len(),
            Cell::Join { level, parts } => parts.iter().map(Cell::degree).sum::<usize>() + (parts.len() - 1) * level,
        }
    }

    /// Whether some component element is the identity.
    pub fn is_degenerate(&self) -> bool {
        match self {
            Cell::Bar(xs) => xs.iter().any(GroupElement::is_identity),
            Cell::Join { parts, .. } => parts.iter().any(Cell::is_degenerate),
        }
    }

    /// Elements of a pure cell, `None` for any other shape.
    pub fn pure_elements(&self) -> Option<Vec<&GroupElement>> {
        match self {
            Cell::Bar(xs) if xs.len() == 1 => Some(vec![&xs[0]]),
            Cell::Join { level: 1, parts } => parts
                .iter()
                .map(|p| match p {
                    Cell::Bar(xs) if xs.len() == 1 => Some(&xs[0]),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }

    fn write_body(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Bar(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Cell::Join { level, parts } => {
                let sep = "|".repeat(*level);
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(&sep)?;
                    }
                    p.write_body(f)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        self.write_body(f)?;
        f.write_str("]")
    }
}

/// Finite integer combination of cells with no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    terms: BTreeMap<Cell, i64>,
}

impl Chain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_cell(cell: Cell) -> Self {
        Self::from_term(cell, 1)
    }

    pub fn from_term(cell: Cell, coeff: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(cell, coeff);
        c
    }

    pub fn add_term(&mut self, cell: Cell, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(cell) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &Chain, coeff: i64) {
        for (cell, &c) in &other.terms {
            self.add_term(cell.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: i64) -> Chain {
        let mut out = Chain::zero();
        out.add_scaled(self, coeff);
        out
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

    pub fn coeff(&self, cell: &Cell) -> i64 {
        self.terms.get(cell).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Cell, i64)> {
        self.terms.iter().map(|(c, &v)| (c, v))
    }

    /// Common degree of all cells, `None` for the zero chain or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Cell::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Highest level among the cells (0 for the zero chain).
    pub fn level(&self) -> usize {
        self.terms.keys().map(Cell::level).max().unwrap_or(0)
    }

    /// The chain with every degenerate cell dropped, i.e. its image in the
    /// normalized complex.
    pub fn normalized(&self) -> Chain {
        self.terms.iter().filter(|(c, _)| !c.is_degenerate()).map(|(c, &v)| (c.clone(), v)).collect()
    }

    /// Terms ordered by their printed cell, the order used for display.
    pub fn sorted_terms(&self) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = self.terms.iter().map(|(c, &v)| (c.to_string(), v)).collect();
        out.sort();
        out
    }
}

impl FromIterator<(Cell, i64)> for Chain {
    fn from_iter<I: IntoIterator<Item = (Cell, i64)>>(iter: I) -> Self {
        let mut c = Chain::zero();
        for (cell, coeff) in iter {
            c.add_term(cell, coeff);
        }
        c
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scale(-1)
    }
}

impl fmt::Display for Chain {
    /// `[a,b] - [b,a]`, `2*[a|b]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (cell, c)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            f.write_str(cell)?;
        }
        Ok(())
    }
}

/// Parses one group element: `1`, a word such as `ab^2c^-1` in the
/// generator letters `a, b, c, ...`, or an explicit vector `(1,0,2)`.
pub fn parse_element(group: &AbGroup, s: &str) -> Result<GroupElement> {
    let text = s.trim();
    let err = |reason: &str| Error::parse(s, reason);
    if text.is_empty() {
        return Err(err("empty element"));
    }
    if text == "1" {
        return Ok(group.identity());
    }
    if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err("vector coordinates must be integers"))?;
        return Ok(group.element(coords)?);
    }
    let chars: Vec<char> = text.chars().collect();
    let mut acc = group.identity();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if !ch.is_ascii_lowercase() {
            return Err(err("expected a generator letter"));
        }
        let gen = group
            .generator((ch as u8 - b'a') as usize)
            .map_err(|_| err(&format!("symbol `{ch}` exceeds the {} generators", group.ngens())))?;
        i += 1;
        let mut exp = 1i64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            exp = digits.parse().map_err(|_| err("bad exponent"))?;
        }
        acc = group.add(&acc, &group.scale(&gen, exp));
    }
    Ok(acc)
}

#[derive(Debug)]
enum Token {
    Element(String),
    Comma,
    Bars(usize),
}

fn tokenize_body(body: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '|' => {
                let start = i;
                while i < chars.len() && chars[i] == '|' {
                    i += 1;
                }
                tokens.push(Token::Bars(i - start));
            }
            ',' => {
                tokens.push(Token::Comma);
                i += 1;
            }
            _ => {
                let start = i;
                let mut depth = 0;
                while i < chars.len() {
                    match chars[i] {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        ',' | '|' if depth == 0 => break,
                        _ => {}
                    }
                    i += 1;
                }
                tokens.push(Token::Element(chars[start..i].iter().collect()));
            }
        }
    }
    Ok(tokens)
}

fn build_cell(group: &AbGroup, src: &str, tokens: &[Token]) -> Result<Cell> {
    let bars = tokens
        .iter()
        .filter_map(|t| match t {
            Token::Bars(n) => Some(*n),
            _ => None,
        })
        .max();
    match bars {
        None => {
            let mut elements = Vec::new();
            let mut expect_element = true;
            for t in tokens {
                match (t, expect_element) {
                    (Token::Element(e), true) => {
                        elements.push(parse_element(group, e)?);
                        expect_element = false;
                    }
                    (Token::Comma, false) => expect_element = true,
                    _ => return Err(Error::parse(src, "misplaced comma")),
                }
            }
            if expect_element && !tokens.is_empty() {
                return Err(Error::parse(src, "trailing comma"));
            }
            Ok(Cell::Bar(elements))
        }
        Some(k) => {
            let mut parts = Vec::new();
            for segment in tokens.split(|t| matches!(t, Token::Bars(n) if *n == k)) {
                if segment.is_empty() {
                    return Err(Error::parse(src, "empty component"));
                }
                parts.push(build_cell(group, src, segment)?);
            }
            Cell::join(k, parts)
        }
    }
}

/// Parses a bracketed cell such as `[a,b|c]`, `[a||b]` or `[(1,0)|b^-1]`.
pub fn parse_cell(group: &AbGroup, s: &str) -> Result<Cell> {
    let t = s.trim();
    let body = t
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::parse(s, "a cell is written `[...]`"))?;
    if body.contains(['[', ']']) {
        return Err(Error::parse(s, "nested brackets"));
    }
    build_cell(group, s, &tokenize_body(body)?)
}

/// Parses a chain such as `[a,b] - [b,a]`, `-2*[a|b] + [c]` or `0`.
pub fn parse_chain(group: &AbGroup, s: &str) -> Result<Chain> {
    let text: String = s.replace('\u{2212}', "-");
    let chars: Vec<char> = text.chars().collect();
    let mut chain = Chain::zero();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if chars[i..].iter().collect::<String>().trim() == "0" {
        return Ok(chain);
    }
    let mut first = true;
    while i < chars.len() {
        let mut sign = 1i64;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(Error::parse(s, format!("missing sign before term at offset {i}")));
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start {
            chars[start..i].iter().collect::<String>().parse().map_err(|_| Error::parse(s, "bad coefficient"))?
        } else {
            1
        };
        skip_ws(&mut i);
        if i < chars.len() && chars[i] == '*' {
            i += 1;
            skip_ws(&mut i);
        }
        if i >= chars.len() || chars[i] != '[' {
            return Err(Error::parse(s, format!("expected `[` at offset {i}")));
        }
        let open = i;
        while i < chars.len() && chars[i] != ']' {
            i += 1;
        }
        if i >= chars.len() {
            return Err(Error::parse(s, "unclosed `[`"));
        }
        i += 1;
        let cell_text: String = chars[open..i].iter().collect();
        chain.add_term(parse_cell(group, &cell_text)?, sign * coeff);
        skip_ws(&mut i);
        first = false;
    }
    if first {
        return Err(Error::parse(s, "empty chain"));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> AbGroup {
        AbGroup::free(4)
    }

    #[test]
    fn degrees() {
        let g = g();
        assert_eq!(parse_cell(&g, "[a,b,c]").unwrap().degree(), 3);
        assert_eq!(parse_cell(&g, "[a,b|c]").unwrap().degree(), 4);
        assert_eq!(parse_cell(&g, "[a||b]").unwrap().degree(), 4);
        assert_eq!(parse_cell(&g, "[a|b||c]").unwrap().degree(), 3 + 1 + 2);
        assert_eq!(parse_cell(&g, "[]").unwrap().degree(), 0);
    }

    #[test]
    fn bars_nest_by_count() {
        let g = g();
        let c = parse_cell(&g, "[a,b|c||d]").unwrap();
        match &c {
            Cell::Join { level: 2, parts } => {
                assert_eq!(parts.len(), 2);
                assert_eq!(parts[0].level(), 1);
                assert_eq!(parts[1], Cell::Bar(vec![g.generator(3).unwrap()]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn display_round_trip() {
        let g = g();
        for s in ["[a,b|c]", "[a||b,c]", "[ab|c^-1||d]", "[1,a^2]", "[]", "[a|b|c]"] {
            let c = parse_cell(&g, s).unwrap();
            assert_eq!(c.to_string(), s);
            assert_eq!(parse_cell(&g, &c.to_string()).unwrap(), c);
        }
    }

    #[test]
    fn vectors_and_words_agree() {
        let g = g();
        assert_eq!(parse_element(&g, "(1,2,0,-1)").unwrap(), parse_element(&g, "ab^2d^-1").unwrap());
        assert_eq!(parse_element(&g, "aa^-1").unwrap(), g.identity());
        assert!(parse_element(&g, "e").is_err());
    }

    #[test]
    fn chain_parsing() {
        let g = g();
        let c = parse_chain(&g, "[a,b] - [b,a] + 2*[a,b] - 3[c]").unwrap();
        assert_eq!(c.coeff(&parse_cell(&g, "[a,b]").unwrap()), 3);
        assert_eq!(c.coeff(&parse_cell(&g, "[c]").unwrap()), -3);
        assert_eq!(c.to_string(), "3*[a,b] - [b,a] - 3*[c]");
        assert!(parse_chain(&g, "0").unwrap().is_zero());
        assert!(parse_chain(&g, "[a] [b]").is_err());
        assert!(parse_chain(&g, "\u{2212}[a|b] \u{2212} [b|a]").is_ok());
    }

    #[test]
    fn cancellation_removes_terms() {
        let g = g();
        let c = parse_chain(&g, "[a|b] - [a|b]").unwrap();
        assert!(c.is_zero());
        assert_eq!(c.to_string(), "0");
    }

    #[test]
    fn singleton_wrappers_collapse() {
        let g = g();
        let a = parse_cell(&g, "[a,b]").unwrap();
        assert_eq!(Cell::join(3, vec![a.clone()]).unwrap(), a);
        assert!(Cell::join(1, vec![parse_cell(&g, "[a|b]").unwrap(), a]).is_err());
    }
}
