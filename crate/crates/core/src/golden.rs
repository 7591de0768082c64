//! Published conversion tables between coordinates and standard components,
//! transcribed as plain text so they can be diffed against recomputation.
//!
//! Notation: `f_m^k` is the coordinate with source index `m` and target index
//! `k`; `f^ij` is the standard component. A row `12f^01 = 5f_1^0 - f_0^1` reads
//! `12 f^{01} = 5 f^0_1 - f^1_0`. Rows are tagged with their block `s`, where a
//! coordinate `f_m^k` belongs to block `k ^ m` and a component `f^ij` to `i ^ j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// One side of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `f_m^k`.
    Coord { k: usize, m: usize },
    /// `f^ij`.
    Comp { i: usize, j: usize },
}

impl Symbol {
    /// `k ^ m` or `i ^ j`.
    pub fn block(&self) -> usize {
        match *self {
            Symbol::Coord { k, m } => k ^ m,
            Symbol::Comp { i, j } => i ^ j,
        }
    }

    /// Row-major position in a vectorized map or tensor of dimension `n`.
    pub fn flat(&self, n: usize) -> usize {
        match *self {
            Symbol::Coord { k, m } => k * n + m,
            Symbol::Comp { i, j } => i * n + j,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Coord { k, m } => write!(f, "f_{m}^{k}"),
            Symbol::Comp { i, j } => write!(f, "f^{i}{j}"),
        }
    }
}

/// `scale * lhs = sum coeff * symbol`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub scale: Rational,
    pub lhs: Symbol,
    pub terms: Vec<(Rational, Symbol)>,
}

impl Relation {
    /// Right-hand side divided by the left-hand scale, sorted by symbol.
    pub fn normalized(&self) -> Vec<(Symbol, Rational)> {
        let inv = self.scale.recip().expect("nonzero scale");
        let mut out: Vec<(Symbol, Rational)> = self.terms.iter().map(|(c, s)| (*s, c * &inv)).collect();
        out.sort_by_key(|(s, _)| *s);
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, &self.scale, &self.lhs, true)?;
        write!(f, " =")?;
        for (idx, (c, s)) in self.terms.iter().enumerate() {
            write!(f, " ")?;
            write_term(f, c, s, idx == 0)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, s: &Symbol, first: bool) -> fmt::Result {
    let sign = match (first, c.is_negative()) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => "- ",
        (false, false) => "+ ",
    };
    let mag = c.abs();
    if mag.is_one() {
        write!(f, "{sign}{s}")
    } else {
        write!(f, "{sign}{mag}{s}")
    }
}

fn parse_symbol(t: &str) -> Result<Symbol> {
    let bad = || Error::Parse(format!("invalid symbol `{t}`"));
    let digit = |c: u8| if c.is_ascii_digit() { Ok((c - b'0') as usize) } else { Err(bad()) };
    let b = t.as_bytes();
    match b {
        [b'f', b'_', m, b'^', k] => Ok(Symbol::Coord { k: digit(*k)?, m: digit(*m)? }),
        [b'f', b'^', i, j] => Ok(Symbol::Comp { i: digit(*i)?, j: digit(*j)? }),
        _ => Err(bad()),
    }
}

/// `[-]` `[integer]` symbol, e.g. `-12f^01`, `5f_1^0`, `f^00`.
pub fn parse_signed_symbol(t: &str) -> Result<(Rational, Symbol)> {
    let t = t.trim();
    let (neg, rest) = match t.strip_prefix('-') {
        Some(r) => (true, r.trim_start()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim_start()),
    };
    let split = rest.find('f').ok_or_else(|| Error::Parse(format!("missing symbol in `{t}`")))?;
    let coeff = if split == 0 { Rational::one() } else { rest[..split].parse()? };
    let sym = parse_symbol(&rest[split..])?;
    Ok((if neg { -coeff } else { coeff }, sym))
}

pub fn parse_relation(line: &str) -> Result<Relation> {
    let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::Parse(format!("no `=` in `{line}`")))?;
    let (scale, lhs) = parse_signed_symbol(lhs)?;
    let mut terms = Vec::new();
    let mut current = String::new();
    for ch in rhs.chars() {
        if (ch == '+' || ch == '-') && !current.trim().is_empty() {
            terms.push(parse_signed_symbol(&current)?);
            current.clear();
        }
        current.push(ch);
    }
    if current.trim().is_empty() {
        return Err(Error::Parse(format!("empty right-hand side in `{line}`")));
    }
    terms.push(parse_signed_symbol(&current)?);
    Ok(Relation { scale, lhs, terms })
}

/// Parses every row of a table.
pub fn parse_table(rows: &[(usize, &str)]) -> Result<Vec<(usize, Relation)>> {
    rows.iter().map(|(b, r)| Ok((*b, parse_relation(r)?))).collect()
}

/// Parses a whitespace-separated integer matrix.
pub fn parse_int_matrix(rows: &[&str]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<Rational>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(parsed))
}

/// Parses a matrix of signed symbols such as `-f_0^1`.
pub fn parse_symbol_matrix(rows: &[&str]) -> Result<Vec<Vec<(Rational, Symbol)>>> {
    rows.iter().map(|r| r.split_whitespace().map(parse_signed_symbol).collect()).collect()
}

/// Rows of the printed octonion inverse table known to disagree with
/// recomputation, identified by the component on their left-hand side.
/// Every row of blocks 1 and 2 carries index slips or swapped terms; the
/// row for `f^72` has the wrong sign on its left-hand side.
pub const OCTONION_INVERSE_MISPRINTS: &[(usize, usize)] = &[
    (0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4), (6, 7), (7, 6),
    (0, 2), (1, 3), (2, 0), (3, 1), (4, 6), (5, 7), (6, 4), (7, 5),
    (7, 2),
];

/// Coordinates of a map of the complex field in terms of its standard components.
pub const COMPLEX_FORWARD: &[(usize, &str)] = &[
    (0, "f_0^0 = f^00 - f^11"),
    (1, "f_0^1 = f^01 + f^10"),
    (1, "f_1^0 = -f^01 - f^10"),
    (0, "f_1^1 = f^00 - f^11"),
];

/// Coordinates of a map of H in terms of its standard components, grouped by block.
pub const QUATERNION_FORWARD: &[(usize, &str)] = &[
    (0, "f_0^0 = f^00 - f^11 - f^22 - f^33"),
    (0, "f_1^1 = f^00 - f^11 + f^22 + f^33"),
    (0, "f_2^2 = f^00 + f^11 - f^22 + f^33"),
    (0, "f_3^3 = f^00 + f^11 + f^22 - f^33"),
    (1, "f_0^1 = f^01 + f^10 + f^23 - f^32"),
    (1, "f_1^0 = -f^01 - f^10 + f^23 - f^32"),
    (1, "f_2^3 = -f^01 + f^10 - f^23 - f^32"),
    (1, "f_3^2 = f^01 - f^10 - f^23 - f^32"),
    (2, "f_0^2 = f^02 - f^13 + f^20 + f^31"),
    (2, "f_1^3 = f^02 - f^13 - f^20 - f^31"),
    (2, "f_2^0 = -f^02 - f^13 - f^20 + f^31"),
    (2, "f_3^1 = -f^02 - f^13 + f^20 - f^31"),
    (3, "f_0^3 = f^03 + f^12 - f^21 + f^30"),
    (3, "f_1^2 = -f^03 - f^12 - f^21 + f^30"),
    (3, "f_2^1 = f^03 - f^12 - f^21 - f^30"),
    (3, "f_3^0 = -f^03 + f^12 - f^21 - f^30"),
];

/// Standard components of a map of H in terms of its coordinates, grouped by block.
pub const QUATERNION_INVERSE: &[(usize, &str)] = &[
    (0, "4f^00 = f_0^0 + f_1^1 + f_2^2 + f_3^3"),
    (0, "4f^11 = -f_0^0 - f_1^1 + f_2^2 + f_3^3"),
    (0, "4f^22 = -f_0^0 + f_1^1 - f_2^2 + f_3^3"),
    (0, "4f^33 = -f_0^0 + f_1^1 + f_2^2 - f_3^3"),
    (1, "4f^10 = -f_1^0 + f_0^1 - f_3^2 + f_2^3"),
    (1, "4f^01 = -f_1^0 + f_0^1 + f_3^2 - f_2^3"),
    (1, "4f^32 = -f_1^0 - f_0^1 - f_3^2 - f_2^3"),
    (1, "4f^23 = f_1^0 + f_0^1 - f_3^2 - f_2^3"),
    (2, "4f^20 = -f_2^0 + f_3^1 + f_0^2 - f_1^3"),
    (2, "4f^31 = f_2^0 - f_3^1 + f_0^2 - f_1^3"),
    (2, "4f^02 = -f_2^0 - f_3^1 + f_0^2 + f_1^3"),
    (2, "4f^13 = -f_2^0 - f_3^1 - f_0^2 - f_1^3"),
    (3, "4f^30 = -f_3^0 - f_2^1 + f_1^2 + f_0^3"),
    (3, "4f^21 = -f_3^0 - f_2^1 - f_1^2 - f_0^3"),
    (3, "4f^12 = f_3^0 - f_2^1 - f_1^2 + f_0^3"),
    (3, "4f^03 = -f_3^0 + f_2^1 - f_1^2 + f_0^3"),
];

/// Coordinates of a map of O in terms of its standard components, grouped by block.
pub const OCTONION_FORWARD: &[(usize, &str)] = &[
    (0, "f_0^0 = f^00 - f^11 - f^22 - f^33 - f^44 - f^55 - f^66 - f^77"),
    (0, "f_1^1 = f^00 - f^11 + f^22 + f^33 + f^44 + f^55 + f^66 + f^77"),
    (0, "f_2^2 = f^00 + f^11 - f^22 + f^33 + f^44 + f^55 + f^66 + f^77"),
    (0, "f_3^3 = f^00 + f^11 + f^22 - f^33 + f^44 + f^55 + f^66 + f^77"),
    (0, "f_4^4 = f^00 + f^11 + f^22 + f^33 - f^44 + f^55 + f^66 + f^77"),
    (0, "f_5^5 = f^00 + f^11 + f^22 + f^33 + f^44 - f^55 + f^66 + f^77"),
    (0, "f_6^6 = f^00 + f^11 + f^22 + f^33 + f^44 + f^55 - f^66 + f^77"),
    (0, "f_7^7 = f^00 + f^11 + f^22 + f^33 + f^44 + f^55 + f^66 - f^77"),
    (1, "f_0^1 = f^01 + f^10 + f^23 - f^32 + f^45 - f^54 - f^67 + f^76"),
    (1, "f_1^0 = -f^01 - f^10 + f^23 - f^32 + f^45 - f^54 - f^67 + f^76"),
    (1, "f_2^3 = -f^01 + f^10 - f^23 - f^32 - f^45 + f^54 + f^67 - f^76"),
    (1, "f_3^2 = f^01 - f^10 - f^23 - f^32 + f^45 - f^54 - f^67 + f^76"),
    (1, "f_4^5 = -f^01 + f^10 - f^23 + f^32 - f^45 - f^54 + f^67 - f^76"),
    (1, "f_5^4 = f^01 - f^10 + f^23 - f^32 - f^45 - f^54 - f^67 + f^76"),
    (1, "f_6^7 = f^01 - f^10 + f^23 - f^32 + f^45 - f^54 - f^67 - f^76"),
    (1, "f_7^6 = -f^01 + f^10 - f^23 + f^32 - f^45 + f^54 - f^67 - f^76"),
    (2, "f_0^2 = f^02 - f^13 + f^20 + f^31 + f^46 + f^57 - f^64 - f^75"),
    (2, "f_1^3 = f^02 - f^13 - f^20 - f^31 + f^46 + f^57 - f^64 - f^75"),
    (2, "f_2^0 = -f^02 - f^13 - f^20 + f^31 + f^46 + f^57 - f^64 - f^75"),
    (2, "f_3^1 = -f^02 - f^13 + f^20 - f^31 - f^46 - f^57 + f^64 + f^75"),
    (2, "f_4^6 = -f^02 + f^13 + f^20 - f^31 - f^46 - f^57 - f^64 + f^75"),
    (2, "f_5^7 = -f^02 + f^13 + f^20 - f^31 - f^46 - f^57 + f^64 - f^75"),
    (2, "f_6^4 = f^02 - f^13 - f^20 + f^31 - f^46 + f^57 - f^64 - f^75"),
    (2, "f_7^5 = f^02 - f^13 - f^20 + f^31 + f^46 - f^57 - f^64 - f^75"),
    (3, "f_0^3 = f^03 + f^12 - f^21 + f^30 + f^47 - f^56 + f^65 - f^74"),
    (3, "f_1^2 = -f^03 - f^12 - f^21 + f^30 - f^47 + f^56 - f^65 + f^74"),
    (3, "f_2^1 = f^03 - f^12 - f^21 - f^30 + f^47 - f^56 + f^65 - f^74"),
    (3, "f_3^0 = -f^03 + f^12 - f^21 - f^30 + f^47 - f^56 + f^65 - f^74"),
    (3, "f_4^7 = -f^03 - f^12 + f^21 + f^30 - f^47 + f^56 - f^65 - f^74"),
    (3, "f_5^6 = f^03 + f^12 - f^21 - f^30 + f^47 - f^56 - f^65 - f^74"),
    (3, "f_6^5 = -f^03 - f^12 + f^21 + f^30 - f^47 - f^56 - f^65 + f^74"),
    (3, "f_7^4 = f^03 + f^12 - f^21 - f^30 - f^47 - f^56 + f^65 - f^74"),
    (4, "f_0^4 = f^04 - f^15 - f^26 - f^37 + f^40 + f^51 + f^62 + f^73"),
    (4, "f_1^5 = f^04 - f^15 - f^26 - f^37 - f^40 - f^51 + f^62 + f^73"),
    (4, "f_2^6 = f^04 - f^15 - f^26 - f^37 - f^40 + f^51 - f^62 + f^73"),
    (4, "f_3^7 = f^04 - f^15 - f^26 - f^37 - f^40 + f^51 + f^62 - f^73"),
    (4, "f_4^0 = -f^04 - f^15 - f^26 - f^37 - f^40 + f^51 + f^62 + f^73"),
    (4, "f_5^1 = -f^04 - f^15 + f^26 + f^37 + f^40 - f^51 - f^62 - f^73"),
    (4, "f_6^2 = -f^04 + f^15 - f^26 + f^37 + f^40 - f^51 - f^62 - f^73"),
    (4, "f_7^3 = -f^04 + f^15 + f^26 - f^37 + f^40 - f^51 - f^62 - f^73"),
    (5, "f_0^5 = f^05 + f^14 - f^27 + f^36 - f^41 + f^50 - f^63 + f^72"),
    (5, "f_1^4 = -f^05 - f^14 + f^27 - f^36 - f^41 + f^50 + f^63 - f^72"),
    (5, "f_2^7 = f^05 + f^14 - f^27 + f^36 - f^41 - f^50 - f^63 - f^72"),
    (5, "f_3^6 = -f^05 - f^14 + f^27 - f^36 + f^41 + f^50 - f^63 - f^72"),
    (5, "f_4^1 = f^05 - f^14 - f^27 + f^36 - f^41 - f^50 - f^63 + f^72"),
    (5, "f_5^0 = -f^05 + f^14 - f^27 + f^36 - f^41 - f^50 - f^63 + f^72"),
    (5, "f_6^3 = f^05 + f^14 - f^27 - f^36 - f^41 - f^50 - f^63 + f^72"),
    (5, "f_7^2 = -f^05 - f^14 - f^27 - f^36 + f^41 + f^50 + f^63 - f^72"),
    (6, "f_0^6 = f^06 + f^17 + f^24 - f^35 - f^42 + f^53 + f^60 - f^71"),
    (6, "f_1^7 = -f^06 - f^17 - f^24 + f^35 + f^42 - f^53 + f^60 - f^71"),
    (6, "f_2^4 = -f^06 - f^17 - f^24 + f^35 - f^42 - f^53 + f^60 + f^71"),
    (6, "f_3^5 = f^06 + f^17 + f^24 - f^35 - f^42 - f^53 - f^60 - f^71"),
    (6, "f_4^2 = f^06 + f^17 - f^24 - f^35 - f^42 + f^53 - f^60 - f^71"),
    (6, "f_5^3 = -f^06 - f^17 - f^24 - f^35 + f^42 - f^53 + f^60 + f^71"),
    (6, "f_6^0 = -f^06 + f^17 + f^24 - f^35 - f^42 + f^53 - f^60 - f^71"),
    (6, "f_7^1 = f^06 - f^17 + f^24 - f^35 - f^42 + f^53 - f^60 - f^71"),
    (7, "f_0^7 = f^07 - f^16 + f^25 + f^34 - f^43 - f^52 + f^61 + f^70"),
    (7, "f_1^6 = f^07 - f^16 + f^25 + f^34 - f^43 - f^52 - f^61 - f^70"),
    (7, "f_2^5 = -f^07 + f^16 - f^25 - f^34 + f^43 - f^52 - f^61 + f^70"),
    (7, "f_3^4 = -f^07 + f^16 - f^25 - f^34 - f^43 + f^52 - f^61 + f^70"),
    (7, "f_4^3 = f^07 - f^16 + f^25 - f^34 - f^43 - f^52 + f^61 - f^70"),
    (7, "f_5^2 = f^07 - f^16 - f^25 + f^34 - f^43 - f^52 + f^61 - f^70"),
    (7, "f_6^1 = -f^07 - f^16 - f^25 - f^34 + f^43 + f^52 - f^61 + f^70"),
    (7, "f_7^0 = -f^07 - f^16 + f^25 + f^34 - f^43 - f^52 + f^61 - f^70"),
];

/// Standard components of a map of O in terms of its coordinates, grouped by block, as printed.
pub const OCTONION_INVERSE: &[(usize, &str)] = &[
    (0, "12f^00 = 5f_0^0 + f_1^1 + f_2^2 + f_3^3 + f_4^4 + f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^11 = -f_0^0 - 5f_1^1 + f_2^2 + f_3^3 + f_4^4 + f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^22 = -f_0^0 + f_1^1 - 5f_2^2 + f_3^3 + f_4^4 + f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^33 = -f_0^0 + f_1^1 + f_2^2 - 5f_3^3 + f_4^4 + f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^44 = -f_0^0 + f_1^1 + f_2^2 + f_3^3 - 5f_4^4 + f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^55 = -f_0^0 + f_1^1 + f_2^2 + f_3^3 + f_4^4 - 5f_5^5 + f_6^6 + f_7^7"),
    (0, "12f^66 = -f_0^0 + f_1^1 + f_2^2 + f_3^3 + f_4^4 + f_5^5 - 5f_6^6 + f_7^7"),
    (0, "12f^77 = -f_0^0 + f_1^1 + f_2^2 + f_3^3 + f_4^4 + f_5^5 + f_6^6 - 5f_7^7"),
    (1, "-12f^01 = 5f_1^0 - f_0^1 - f_2^2 + f_3^3 - f_4^4 + f_5^5 + f_6^6 - f_7^7"),
    (1, "12f^10 = -f_1^0 + 5f_0^1 - f_2^2 + f_3^3 - f_4^4 + f_5^5 + f_6^6 - f_7^7"),
    (1, "-12f^23 = -f_1^0 - f_0^1 + 5f_2^3 + f_3^2 - f_4^4 + f_5^5 + f_6^6 - f_7^7"),
    (1, "12f^32 = -f_1^0 - f_0^1 - f_2^3 - 5f_3^2 - f_4^4 + f_5^5 + f_6^6 - f_7^7"),
    (1, "-12f^45 = -f_1^0 - f_0^1 - f_2^3 + f_3^2 + 5f_4^5 + f_5^4 + f_6^6 - f_7^7"),
    (1, "12f^54 = -f_1^0 - f_0^1 - f_2^3 + f_3^2 - f_4^5 - 5f_5^4 + f_6^6 - f_7^7"),
    (1, "12f^67 = -f_1^0 - f_0^1 - f_2^3 + f_3^2 - f_4^5 + f_5^4 - 5f_6^7 - f_7^6"),
    (1, "-12f^76 = -f_1^0 - f_0^1 - f_2^3 + f_3^2 - f_4^5 + f_5^4 + f_6^7 + 5f_7^6"),
    (2, "-12f^02 = 5f_2^0 + f_3^1 - f_0^2 - f_1^3 - f_4^4 - f_5^5 + f_6^6 + f_7^7"),
    (2, "12f^13 = -f_2^0 - 5f_3^1 - f_0^2 - f_1^3 - f_4^4 - f_5^5 + f_6^6 + f_7^7"),
    (2, "12f^20 = -f_2^0 + f_3^1 + 5f_0^2 - f_1^3 - f_4^4 - f_5^5 + f_6^6 + f_7^7"),
    (2, "-12f^31 = -f_2^0 + f_3^1 - f_0^2 + 5f_1^3 - f_4^4 - f_5^5 + f_6^6 + f_7^7"),
    (2, "-12f^46 = -f_2^0 + f_3^1 - f_0^2 - f_1^3 + 5f_4^6 - f_5^7 + f_6^6 + f_7^5"),
    (2, "-12f^57 = -f_2^0 + f_3^1 - f_0^2 - f_1^3 - f_4^6 + 5f_5^7 + f_6^6 + f_7^5"),
    (2, "12f^64 = -f_2^0 + f_3^1 - f_0^2 - f_1^3 - f_4^6 - f_5^7 - 5f_6^4 + f_7^5"),
    (2, "12f^75 = -f_2^0 + f_3^1 - f_0^2 - f_1^3 - f_4^6 - f_5^7 + f_6^4 - 5f_7^5"),
    (3, "-12f^03 = 5f_3^0 - f_2^1 + f_1^2 - f_0^3 - f_7^4 + f_6^5 - f_5^6 + f_4^7"),
    (3, "-12f^12 = -f_3^0 + 5f_2^1 + f_1^2 - f_0^3 - f_7^4 + f_6^5 - f_5^6 + f_4^7"),
    (3, "12f^21 = -f_3^0 - f_2^1 - 5f_1^2 - f_0^3 - f_7^4 + f_6^5 - f_5^6 + f_4^7"),
    (3, "12f^30 = -f_3^0 - f_2^1 + f_1^2 + 5f_0^3 - f_7^4 + f_6^5 - f_5^6 + f_4^7"),
    (3, "-12f^47 = -f_3^0 - f_2^1 + f_1^2 - f_0^3 + 5f_7^4 + f_6^5 - f_5^6 + f_4^7"),
    (3, "12f^56 = -f_3^0 - f_2^1 + f_1^2 - f_0^3 - f_7^4 - 5f_6^5 - f_5^6 + f_4^7"),
    (3, "-12f^65 = -f_3^0 - f_2^1 + f_1^2 - f_0^3 - f_7^4 + f_6^5 + 5f_5^6 + f_4^7"),
    (3, "12f^74 = -f_3^0 - f_2^1 + f_1^2 - f_0^3 - f_7^4 + f_6^5 - f_5^6 - 5f_4^7"),
    (4, "-12f^04 = 5f_4^0 + f_5^1 + f_6^2 + f_7^3 - f_0^4 - f_1^5 - f_2^6 - f_3^7"),
    (4, "12f^15 = -f_4^0 - 5f_5^1 + f_6^2 + f_7^3 - f_0^4 - f_1^5 - f_2^6 - f_3^7"),
    (4, "12f^26 = -f_4^0 + f_5^1 - 5f_6^2 + f_7^3 - f_0^4 - f_1^5 - f_2^6 - f_3^7"),
    (4, "12f^37 = -f_4^0 + f_5^1 + f_6^2 - 5f_7^3 - f_0^4 - f_1^5 - f_2^6 - f_3^7"),
    (4, "12f^40 = -f_4^0 + f_5^1 + f_6^2 + f_7^3 + 5f_0^4 - f_1^5 - f_2^6 - f_3^7"),
    (4, "-12f^51 = -f_4^0 + f_5^1 + f_6^2 + f_7^3 - f_0^4 + 5f_1^5 - f_2^6 - f_3^7"),
    (4, "-12f^62 = -f_4^0 + f_5^1 + f_6^2 + f_7^3 - f_0^4 - f_1^5 + 5f_2^6 - f_3^7"),
    (4, "-12f^73 = -f_4^0 + f_5^1 + f_6^2 + f_7^3 - f_0^4 - f_1^5 - f_2^6 + 5f_3^7"),
    (5, "-12f^05 = 5f_5^0 - f_4^1 + f_7^2 - f_6^3 + f_1^4 - f_0^5 + f_3^6 - f_2^7"),
    (5, "-12f^14 = -f_5^0 + 5f_4^1 + f_7^2 - f_6^3 + f_1^4 - f_0^5 + f_3^6 - f_2^7"),
    (5, "12f^27 = -f_5^0 - f_4^1 - 5f_7^2 - f_6^3 + f_1^4 - f_0^5 + f_3^6 - f_2^7"),
    (5, "-12f^36 = -f_5^0 - f_4^1 + f_7^2 + 5f_6^3 + f_1^4 - f_0^5 + f_3^6 - f_2^7"),
    (5, "12f^41 = -f_5^0 - f_4^1 + f_7^2 - f_6^3 - 5f_1^4 - f_0^5 + f_3^6 - f_2^7"),
    (5, "12f^50 = -f_5^0 - f_4^1 + f_7^2 - f_6^3 + f_1^4 + 5f_0^5 + f_3^6 - f_2^7"),
    (5, "12f^63 = -f_5^0 - f_4^1 + f_7^2 - f_6^3 + f_1^4 - f_0^5 - 5f_3^6 - f_2^7"),
    (5, "12f^72 = -f_5^0 - f_4^1 + f_7^2 - f_6^3 + f_1^4 - f_0^5 + f_3^6 + 5f_2^7"),
    (6, "-12f^06 = 5f_6^0 - f_7^1 - f_4^2 + f_5^3 + f_2^4 - f_3^5 - f_0^6 + f_1^7"),
    (6, "-12f^17 = -f_6^0 + 5f_7^1 - f_4^2 + f_5^3 + f_2^4 - f_3^5 - f_0^6 + f_1^7"),
    (6, "-12f^24 = -f_6^0 - f_7^1 + 5f_4^2 + f_5^3 + f_2^4 - f_3^5 - f_0^6 + f_1^7"),
    (6, "12f^35 = -f_6^0 - f_7^1 - f_4^2 - 5f_5^3 + f_2^4 - f_3^5 - f_0^6 + f_1^7"),
    (6, "12f^42 = -f_6^0 - f_7^1 - f_4^2 + f_5^3 - 5f_2^4 - f_3^5 - f_0^6 + f_1^7"),
    (6, "-12f^53 = -f_6^0 - f_7^1 - f_4^2 + f_5^3 + f_2^4 + 5f_3^5 - f_0^6 + f_1^7"),
    (6, "12f^60 = -f_6^0 - f_7^1 - f_4^2 + f_5^3 + f_2^4 - f_3^5 + 5f_0^6 + f_1^7"),
    (6, "12f^71 = -f_6^0 - f_7^1 - f_4^2 + f_5^3 + f_2^4 - f_3^5 - f_0^6 - 5f_1^7"),
    (7, "-12f^07 = 5f_7^0 + f_6^1 - f_5^2 - f_4^3 + f_3^4 + f_2^5 - f_1^6 - f_0^7"),
    (7, "12f^16 = -f_7^0 - 5f_6^1 - f_5^2 - f_4^3 + f_3^4 + f_2^5 - f_1^6 - f_0^7"),
    (7, "-12f^25 = -f_7^0 + f_6^1 + 5f_5^2 - f_4^3 + f_3^4 + f_2^5 - f_1^6 - f_0^7"),
    (7, "-12f^34 = -f_7^0 + f_6^1 - f_5^2 + 5f_4^3 + f_3^4 + f_2^5 - f_1^6 - f_0^7"),
    (7, "12f^43 = -f_7^0 + f_6^1 - f_5^2 - f_4^3 - 5f_3^4 + f_2^5 - f_1^6 - f_0^7"),
    (7, "12f^52 = -f_7^0 + f_6^1 - f_5^2 - f_4^3 + f_3^4 - 5f_2^5 - f_1^6 - f_0^7"),
    (7, "-12f^61 = -f_7^0 + f_6^1 - f_5^2 - f_4^3 + f_3^4 + f_2^5 + 5f_1^6 - f_0^7"),
    (7, "12f^70 = -f_7^0 + f_6^1 - f_5^2 - f_4^3 + f_3^4 + f_2^5 - f_1^6 + 5f_0^7"),
];

/// Signed coordinates; column `s` lists block `s`.
pub const QUATERNION_COORD_BLOCKS: &[&str] = &[
    " f_0^0  f_1^0  f_2^0  f_3^0",
    " f_1^1 -f_0^1  f_3^1 -f_2^1",
    " f_2^2 -f_3^2 -f_0^2  f_1^2",
    " f_3^3  f_2^3 -f_1^3 -f_0^3",
];

/// Sign matrix `F` with `coordinates = F * components`.
pub const QUATERNION_SIGN: &[&str] = &[
    " 1 -1 -1 -1",
    " 1 -1  1  1",
    " 1  1 -1  1",
    " 1  1  1 -1",
];

/// Signed standard components; column `s` lists block `s`.
pub const QUATERNION_COMPONENT_BLOCKS: &[&str] = &[
    " f^00 -f^01 -f^02 -f^03",
    " f^11  f^10  f^13 -f^12",
    " f^22 -f^23  f^20  f^21",
    " f^33  f^32 -f^31  f^30",
];

/// `4 F^{-1}`.
pub const QUATERNION_SIGN_INV_TIMES_4: &[&str] = &[
    " 1  1  1  1",
    "-1 -1  1  1",
    "-1  1 -1  1",
    "-1  1  1 -1",
];

/// Signed coordinates; column `s` lists block `s`.
pub const OCTONION_COORD_BLOCKS: &[&str] = &[
    " f_0^0  f_1^0  f_2^0  f_3^0  f_4^0  f_5^0  f_6^0  f_7^0",
    " f_1^1 -f_0^1  f_3^1 -f_2^1  f_5^1 -f_4^1 -f_7^1  f_6^1",
    " f_2^2 -f_3^2 -f_0^2  f_1^2  f_6^2  f_7^2 -f_4^2 -f_5^2",
    " f_3^3  f_2^3 -f_1^3 -f_0^3  f_7^3 -f_6^3  f_5^3 -f_4^3",
    " f_4^4 -f_5^4 -f_6^4 -f_7^4 -f_0^4  f_1^4  f_2^4  f_3^4",
    " f_5^5  f_4^5 -f_7^5  f_6^5 -f_1^5 -f_0^5 -f_3^5  f_2^5",
    " f_6^6  f_7^6  f_4^6 -f_5^6 -f_2^6  f_3^6 -f_0^6 -f_1^6",
    " f_7^7 -f_6^7  f_5^7  f_4^7 -f_3^7 -f_2^7  f_1^7 -f_0^7",
];

/// Sign matrix `F` with `coordinates = F * components`.
pub const OCTONION_SIGN: &[&str] = &[
    " 1 -1 -1 -1 -1 -1 -1 -1",
    " 1 -1  1  1  1  1  1  1",
    " 1  1 -1  1  1  1  1  1",
    " 1  1  1 -1  1  1  1  1",
    " 1  1  1  1 -1  1  1  1",
    " 1  1  1  1  1 -1  1  1",
    " 1  1  1  1  1  1 -1  1",
    " 1  1  1  1  1  1  1 -1",
];

/// Signed standard components; column `s` lists block `s`.
pub const OCTONION_COMPONENT_BLOCKS: &[&str] = &[
    " f^00 -f^01 -f^02 -f^03 -f^04 -f^05 -f^06 -f^07",
    " f^11  f^10  f^13 -f^12  f^15 -f^14 -f^17  f^16",
    " f^22 -f^23  f^20  f^21  f^26  f^27 -f^24 -f^25",
    " f^33  f^32 -f^31  f^30  f^37 -f^36  f^35 -f^34",
    " f^44 -f^45 -f^46 -f^47  f^40  f^41  f^42  f^43",
    " f^55  f^54 -f^57  f^56 -f^51  f^50 -f^53  f^52",
    " f^66  f^67  f^64 -f^65 -f^62  f^63  f^60 -f^61",
    " f^77 -f^76  f^75  f^74 -f^73 -f^72  f^71  f^70",
];

/// `12 F^{-1}`.
pub const OCTONION_SIGN_INV_TIMES_12: &[&str] = &[
    " 5  1  1  1  1  1  1  1",
    "-1 -5  1  1  1  1  1  1",
    "-1  1 -5  1  1  1  1  1",
    "-1  1  1 -5  1  1  1  1",
    "-1  1  1  1 -5  1  1  1",
    "-1  1  1  1  1 -5  1  1",
    "-1  1  1  1  1  1 -5  1",
    "-1  1  1  1  1  1  1 -5",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn parses_rows() {
        let r = parse_relation("-12f^01 = 5f_1^0 - f_0^1 - f_2^2").unwrap();
        assert_eq!(r.scale, q(-12, 1));
        assert_eq!(r.lhs, Symbol::Comp { i: 0, j: 1 });
        assert_eq!(r.terms[0], (q(5, 1), Symbol::Coord { k: 0, m: 1 }));
        assert_eq!(r.terms[1], (q(-1, 1), Symbol::Coord { k: 1, m: 0 }));
        assert_eq!(r.to_string(), "-12f^01 = 5f_1^0 - f_0^1 - f_2^2");
        assert!(parse_relation("f_0^0 f^00").is_err());
        assert!(parse_relation("f_0^0 = ").is_err());
        assert!(parse_relation("f_0^0 = g^00").is_err());
    }

    #[test]
    fn tables_have_expected_sizes_and_blocks() {
        for (table, n) in [(COMPLEX_FORWARD, 2), (QUATERNION_FORWARD, 4), (QUATERNION_INVERSE, 4), (OCTONION_FORWARD, 8), (OCTONION_INVERSE, 8)] {
            let rows = parse_table(table).unwrap();
            assert_eq!(rows.len(), n * n);
            for (b, r) in &rows {
                assert_eq!(r.lhs.block(), *b, "{r}");
            }
        }
    }

    #[test]
    fn printed_sign_matrices_are_inverse() {
        let f = parse_int_matrix(QUATERNION_SIGN).unwrap();
        let fi = parse_int_matrix(QUATERNION_SIGN_INV_TIMES_4).unwrap().scale(&q(1, 4));
        assert_eq!(f.mul(&fi), Matrix::identity(4));
        let f = parse_int_matrix(OCTONION_SIGN).unwrap();
        let fi = parse_int_matrix(OCTONION_SIGN_INV_TIMES_12).unwrap().scale(&q(1, 12));
        assert_eq!(f.mul(&fi), Matrix::identity(8));
        assert_eq!(parse_symbol_matrix(OCTONION_COORD_BLOCKS).unwrap().len(), 8);
    }
}
