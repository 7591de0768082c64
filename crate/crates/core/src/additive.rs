//! Matrices whose entries are linear maps, their two products, inverses,
//! quasideterminants, and systems of additive equations.
//!
//! Also the two-parameter description `z ↦ a z + b conj(z)` of additive maps
//! of the complex field.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgElement, AlgebraKind, FreeAlgebra};
use crate::builtin::complex_algebra;
use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::matrix::Matrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapMatrix {
    algebra: FreeAlgebra,
    rows: usize,
    cols: usize,
    entries: Vec<LinearMap>,
}

impl MapMatrix {
    /// Entries in row-major order; all must be endomorphisms of `algebra`.
    pub fn new(algebra: &FreeAlgebra, rows: usize, cols: usize, entries: Vec<LinearMap>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.source() != algebra || e.target() != algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(MapMatrix { algebra: algebra.clone(), rows, cols, entries })
    }

    pub fn from_rows(algebra: &FreeAlgebra, rows: Vec<Vec<LinearMap>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(algebra, r, c, rows.into_iter().flatten().collect())
    }

    /// `δ` on the diagonal, zero elsewhere.
    pub fn identity(algebra: &FreeAlgebra, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|p| if p / n == p % n { LinearMap::identity(algebra) } else { LinearMap::zero(algebra, algebra) })
            .collect();
        MapMatrix { algebra: algebra.clone(), rows: n, cols: n, entries }
    }

    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LinearMap {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[LinearMap] {
        &self.entries
    }

    pub fn transpose(&self) -> MapMatrix {
        let entries = (0..self.rows * self.cols)
            .map(|p| self.get(p % self.rows, p / self.rows).clone())
            .collect();
        MapMatrix { algebra: self.algebra.clone(), rows: self.cols, cols: self.rows, entries }
    }

    /// Rows `row_sel`, columns `col_sel`, in the given order.
    pub fn select(&self, row_sel: &[usize], col_sel: &[usize]) -> MapMatrix {
        let entries = row_sel.iter().flat_map(|&r| col_sel.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        MapMatrix { algebra: self.algebra.clone(), rows: row_sel.len(), cols: col_sel.len(), entries }
    }

    fn check_algebra(&self, other: &MapMatrix) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.check_algebra(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("summands differ in shape".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_add(b)).collect::<Result<_>>()?;
        Ok(MapMatrix { entries, ..self.clone() })
    }

    pub fn checked_sub(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.check_algebra(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("operands differ in shape".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_sub(b)).collect::<Result<_>>()?;
        Ok(MapMatrix { entries, ..self.clone() })
    }

    /// Row by column: entry `(a, b)` is `sum_c self[a][c] ∘ other[c][b]`.
    pub fn rc_product(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.check_algebra(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for a in 0..self.rows {
            for b in 0..other.cols {
                let mut acc = LinearMap::zero(&self.algebra, &self.algebra);
                for c in 0..self.cols {
                    acc = acc.checked_add(&self.get(a, c).compose(other.get(c, b))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(MapMatrix { algebra: self.algebra.clone(), rows: self.rows, cols: other.cols, entries })
    }

    /// Column by row: entry `(a, b)` is `sum_c self[c][b] ∘ other[a][c]`.
    pub fn cr_product(&self, other: &MapMatrix) -> Result<MapMatrix> {
        self.check_algebra(other)?;
        if self.rows != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} column-by-row {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(other.rows * self.cols);
        for a in 0..other.rows {
            for b in 0..self.cols {
                let mut acc = LinearMap::zero(&self.algebra, &self.algebra);
                for c in 0..self.rows {
                    acc = acc.checked_add(&self.get(c, b).compose(other.get(a, c))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(MapMatrix { algebra: self.algebra.clone(), rows: other.rows, cols: self.cols, entries })
    }

    /// Block matrix over the rationals with each entry's coordinate matrix substituted.
    pub fn flatten(&self) -> Matrix {
        let n = self.algebra.dim();
        Matrix::from_fn(self.rows * n, self.cols * n, |r, c| self.get(r / n, c / n).coords()[(r % n, c % n)].clone())
    }

    pub fn from_flat(algebra: &FreeAlgebra, rows: usize, cols: usize, m: &Matrix) -> Result<Self> {
        let n = algebra.dim();
        if m.rows() != rows * n || m.cols() != cols * n {
            return Err(Error::ShapeMismatch(format!("{}x{} is not {rows}x{cols} blocks of size {n}", m.rows(), m.cols())));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                let block = Matrix::from_fn(n, n, |r, c| m[(a * n + r, b * n + c)].clone());
                entries.push(LinearMap::endo(algebra, block)?);
            }
        }
        Self::new(algebra, rows, cols, entries)
    }

    /// Inverse under the row-by-column product, through the flattening.
    pub fn inverse(&self) -> Result<MapMatrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let flat = self.flatten();
        let inv = flat.inverse().ok_or_else(|| Error::SingularSystem { rank: flat.rank(), size: flat.rows() })?;
        Self::from_flat(&self.algebra, self.rows, self.cols, &inv)
    }
}

impl fmt::Display for MapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.flatten())
    }
}

pub fn rc_product(b: &MapMatrix, c: &MapMatrix) -> Result<MapMatrix> {
    b.rc_product(c)
}

pub fn cr_product(b: &MapMatrix, c: &MapMatrix) -> Result<MapMatrix> {
    b.cr_product(c)
}

pub fn inverse_map_matrix(m: &MapMatrix) -> Result<MapMatrix> {
    m.inverse()
}

fn without(idx: &[usize], drop: usize) -> Vec<usize> {
    idx.iter().copied().filter(|&x| x != drop).collect()
}

/// Inverse of the submatrix on `rows x cols` built entrywise from quasideterminants:
/// entry `(c, r)` is the inverse of `|N|_{rc}`.
fn recursive_inverse(m: &MapMatrix, rows: &[usize], cols: &[usize]) -> Result<Vec<Vec<LinearMap>>> {
    let k = rows.len();
    let mut out = vec![vec![LinearMap::zero(m.algebra(), m.algebra()); k]; k];
    for (ri, &r) in rows.iter().enumerate() {
        for (ci, &c) in cols.iter().enumerate() {
            let q = recursive_quasideterminant(m, rows, cols, r, c)?;
            out[ci][ri] = q.inverse().ok_or_else(|| Error::MinorSingular { rows: rows.to_vec(), cols: cols.to_vec() })?;
        }
    }
    Ok(out)
}

fn recursive_quasideterminant(m: &MapMatrix, rows: &[usize], cols: &[usize], i: usize, j: usize) -> Result<LinearMap> {
    if rows.len() == 1 {
        return Ok(m.get(i, j).clone());
    }
    let rest_rows = without(rows, i);
    let rest_cols = without(cols, j);
    let inv = recursive_inverse(m, &rest_rows, &rest_cols)?;
    let mut acc = m.get(i, j).clone();
    for (ci, &c) in rest_cols.iter().enumerate() {
        for (ri, &r) in rest_rows.iter().enumerate() {
            let term = m.get(i, c).compose(&inv[ci][ri])?.compose(m.get(r, j))?;
            acc = acc.checked_sub(&term)?;
        }
    }
    Ok(acc)
}

/// `|M|_{ij} = M[i][j] - M[i][J'] ∘∘ (M[I'][J'])^{-1} ∘∘ M[I'][j]`, where `I'`, `J'`
/// drop row `i` and column `j`, with the minor inverse built recursively.
pub fn quasideterminant(m: &MapMatrix, i: usize, j: usize) -> Result<LinearMap> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch("quasideterminant of a non-square matrix".into()));
    }
    if i >= m.rows() || j >= m.cols() {
        return Err(Error::ShapeMismatch(format!("index ({i}, {j}) out of range")));
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    recursive_quasideterminant(m, &idx, &idx, i, j)
}

/// `|M|_{ij}` as the inverse of entry `(j, i)` of `M^{-1}`.
pub fn quasideterminant_via_inverse(m: &MapMatrix, i: usize, j: usize) -> Result<LinearMap> {
    let inv = m.inverse()?;
    inv.get(j, i).inverse().ok_or(Error::NonInvertibleEntry { row: j, col: i })
}

/// `M[I][J] - M[I][J'] ∘∘ (M[I'][J'])^{-1} ∘∘ M[I'][J]` with `I'`, `J'` the complements.
/// For invertible `M` this is the inverse of the `J x I` block of `M^{-1}`.
pub fn schur_complement(m: &MapMatrix, row_set: &[usize], col_set: &[usize]) -> Result<MapMatrix> {
    let rest_rows: Vec<usize> = (0..m.rows()).filter(|r| !row_set.contains(r)).collect();
    let rest_cols: Vec<usize> = (0..m.cols()).filter(|c| !col_set.contains(c)).collect();
    let head = m.select(row_set, col_set);
    if rest_rows.is_empty() {
        return Ok(head);
    }
    let inner = m.select(&rest_rows, &rest_cols).inverse()?;
    let correction = m.select(row_set, &rest_cols).rc_product(&inner)?.rc_product(&m.select(&rest_rows, col_set))?;
    head.checked_sub(&correction)
}

/// Solves `sum_j M[i][j](x_j) = rhs_i` and checks the answer by substitution.
pub fn solve_additive(m: &MapMatrix, rhs: &[AlgElement]) -> Result<Vec<AlgElement>> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch("system matrix is not square".into()));
    }
    if rhs.len() != m.rows() {
        return Err(Error::ShapeMismatch(format!("{} right-hand sides for {} equations", rhs.len(), m.rows())));
    }
    if rhs.iter().any(|r| r.algebra() != m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let inv = m.inverse()?;
    let n = m.rows();
    let mut x = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = AlgElement::zero(m.algebra());
        for (j, r) in rhs.iter().enumerate() {
            acc = acc.checked_add(&inv.get(i, j).apply(r)?)?;
        }
        x.push(acc);
    }
    for (i, r) in rhs.iter().enumerate() {
        let mut lhs = AlgElement::zero(m.algebra());
        for (j, xj) in x.iter().enumerate() {
            lhs = lhs.checked_add(&m.get(i, j).apply(xj)?)?;
        }
        if &lhs != r {
            return Err(Error::SubstitutionCheckFailed { equation: i });
        }
    }
    Ok(x)
}

/// `z ↦ a z + b conj(z)` on the complex field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexAdditiveMap {
    a: AlgElement,
    b: AlgElement,
}

fn conj(z: &AlgElement) -> AlgElement {
    crate::builtin::conjugate(z).expect("complex element")
}

impl ComplexAdditiveMap {
    pub fn new(a: AlgElement, b: AlgElement) -> Result<Self> {
        let complex = |x: &AlgElement| matches!(x.algebra().kind(), AlgebraKind::Complex);
        if !complex(&a) || !complex(&b) {
            return Err(Error::UnsupportedAlgebra);
        }
        Ok(ComplexAdditiveMap { a, b })
    }

    /// `(a0 + a1 i) z + (b0 + b1 i) conj(z)`.
    pub fn from_parts(a0: Rational, a1: Rational, b0: Rational, b1: Rational) -> Self {
        let c = complex_algebra();
        ComplexAdditiveMap {
            a: AlgElement::new(&c, vec![a0, a1]).expect("two coordinates"),
            b: AlgElement::new(&c, vec![b0, b1]).expect("two coordinates"),
        }
    }

    pub fn identity() -> Self {
        Self::from_parts(Rational::one(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// `z ↦ conj(z)`.
    pub fn conjugation() -> Self {
        Self::from_parts(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn a(&self) -> &AlgElement {
        &self.a
    }

    pub fn b(&self) -> &AlgElement {
        &self.b
    }

    pub fn apply(&self, z: &AlgElement) -> Result<AlgElement> {
        self.a.multiply(z)?.checked_add(&self.b.multiply(&conj(z))?)
    }

    /// `[[a0 + b0, b1 - a1], [a1 + b1, a0 - b0]]`.
    pub fn to_matrix(&self) -> Matrix {
        let (a0, a1) = (self.a.coord(0), self.a.coord(1));
        let (b0, b1) = (self.b.coord(0), self.b.coord(1));
        Matrix::from_rows(vec![vec![a0 + b0, b1 - a1], vec![a1 + b1, a0 - b0]])
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::ShapeMismatch("complex additive maps are 2x2".into()));
        }
        let half = Rational::new(1, 2);
        let (f00, f01, f10, f11) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
        Ok(Self::from_parts((f00 + f11) * &half, (f10 - f01) * &half, (f00 - f11) * &half, (f10 + f01) * &half))
    }

    pub fn to_linear_map(&self) -> LinearMap {
        LinearMap::endo(self.a.algebra(), self.to_matrix()).expect("2x2 on a 2-dimensional algebra")
    }

    pub fn from_linear_map(f: &LinearMap) -> Result<Self> {
        if !matches!(f.source().kind(), AlgebraKind::Complex) || f.source() != f.target() {
            return Err(Error::UnsupportedAlgebra);
        }
        Self::from_matrix(f.coords())
    }

    /// `|a|^2 - |b|^2`, the determinant of the coordinate matrix.
    pub fn determinant(&self) -> Rational {
        let n = |x: &AlgElement| x.coord(0).square() + x.coord(1).square();
        n(&self.a) - n(&self.b)
    }

    /// `self ∘ g`: `h0 = f0 g0 + f1 conj(g1)`, `h1 = f0 g1 + f1 conj(g0)`.
    pub fn compose(&self, g: &ComplexAdditiveMap) -> ComplexAdditiveMap {
        let (f0, f1) = (&self.a, &self.b);
        let h0 = &(f0 * &g.a) + &(f1 * &conj(&g.b));
        let h1 = &(f0 * &g.b) + &(f1 * &conj(&g.a));
        ComplexAdditiveMap { a: h0, b: h1 }
    }

    /// `g0 = -conj(f0) / D`, `g1 = f1 / D` with `D = |f1|^2 - |f0|^2`; the
    /// coordinate matrix is inverted directly when `f1 = 0`.
    pub fn inverse(&self) -> Result<ComplexAdditiveMap> {
        let d = -self.determinant();
        let inv_d = d.recip().ok_or(Error::SingularMap)?;
        if self.b.is_zero() {
            let m = self.to_matrix().inverse().ok_or(Error::SingularMap)?;
            return Self::from_matrix(&m);
        }
        Ok(ComplexAdditiveMap { a: (-&conj(&self.a)).scale(&inv_d), b: self.b.scale(&inv_d) })
    }
}

pub fn cadd_product(f: &ComplexAdditiveMap, g: &ComplexAdditiveMap) -> ComplexAdditiveMap {
    f.compose(g)
}

pub fn cadd_inverse(f: &ComplexAdditiveMap) -> Result<ComplexAdditiveMap> {
    f.inverse()
}

fn fmt_complex_coeff(z: &AlgElement) -> String {
    let (re, im) = (z.coord(0), z.coord(1));
    if im.is_zero() {
        re.to_string()
    } else if re.is_zero() && !im.is_negative() {
        z.to_string()
    } else {
        format!("({z})")
    }
}

/// Writes `9/5 - 6/5*I`, `1 + 2i*I`, `(1 + i)*I`; parses back with [`FromStr`].
impl fmt::Display for ComplexAdditiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a_part = (!self.a.is_zero()).then(|| self.a.to_string());
        if self.b.is_zero() {
            return write!(f, "{}", a_part.unwrap_or_else(|| "0".into()));
        }
        let (re, im) = (self.b.coord(0), self.b.coord(1));
        let negative_real = im.is_zero() && re.is_negative();
        let b_text = if negative_real { (-re).to_string() } else { fmt_complex_coeff(&self.b) };
        match (a_part, negative_real) {
            (None, false) => write!(f, "{b_text}*I"),
            (None, true) => write!(f, "-{b_text}*I"),
            (Some(a), false) => write!(f, "{a} + {b_text}*I"),
            (Some(a), true) => write!(f, "{a} - {b_text}*I"),
        }
    }
}

struct EntryParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

type Complex = (Rational, Rational);

impl<'a> EntryParser<'a> {
    fn new(src: &'a str) -> Self {
        EntryParser { src, chars: src.chars().collect(), pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '/') {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().ok()
    }

    /// `[number] ['*'] ['i']` or `(complex)`.
    fn factor(&mut self) -> Result<Complex> {
        if self.eat('(') {
            let z = self.sum(false)?.0;
            if !self.eat(')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(z);
        }
        let start = self.pos;
        let coeff = self.number();
        if coeff.is_none() && self.chars.get(start..self.pos).is_some_and(|s| !s.is_empty()) {
            return Err(self.err("invalid number"));
        }
        let save = self.pos;
        let starred = coeff.is_some() && self.eat('*');
        if self.eat('i') {
            let c = coeff.unwrap_or_else(Rational::one);
            return Ok((Rational::zero(), c));
        }
        if starred {
            self.pos = save;
        }
        coeff.map(|c| (c, Rational::zero())).ok_or_else(|| self.err("expected a number or `i`"))
    }

    /// Sum of signed terms; with `allow_conj`, a term may end in `*I` or `∘I`.
    fn sum(&mut self, allow_conj: bool) -> Result<(Complex, Complex)> {
        let zero = || (Rational::zero(), Rational::zero());
        let (mut a, mut b) = (zero(), zero());
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let bare_conj = allow_conj && self.eat('I');
            let (mut re, mut im) = if bare_conj { (Rational::one(), Rational::zero()) } else { self.factor()? };
            let save = self.pos;
            let conj_term = bare_conj || if self.eat('*') || self.eat('∘') {
                if self.eat('I') {
                    true
                } else {
                    self.pos = save;
                    false
                }
            } else {
                false
            };
            if conj_term && !allow_conj {
                return Err(self.err("`I` is not allowed here"));
            }
            if negative {
                re = -re;
                im = -im;
            }
            let slot = if conj_term { &mut b } else { &mut a };
            slot.0 += &re;
            slot.1 += &im;
        }
        Ok((a, b))
    }
}

/// Parses `p/q`, `i`, `2i`, `1 + 2/3*I`, `2∘I`, `(1 + i)*I`, `-3 - 2i*I`.
impl FromStr for ComplexAdditiveMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = EntryParser::new(s);
        if p.peek().is_none() {
            return Err(Error::Parse("empty entry".into()));
        }
        let (a, b) = p.sum(true)?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(ComplexAdditiveMap::from_parts(a.0, a.1, b.0, b.1))
    }
}

/// Parses a complex number such as `3/5 - 2i`.
pub fn parse_complex(s: &str) -> Result<AlgElement> {
    let mut p = EntryParser::new(s);
    if p.peek().is_none() {
        return Err(Error::Parse("empty complex number".into()));
    }
    let ((re, im), _) = p.sum(false)?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    AlgElement::new(&complex_algebra(), vec![re, im])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmap::left_shift;
    use crate::rational::q;

    fn cam(s: &str) -> ComplexAdditiveMap {
        s.parse().unwrap()
    }

    fn example_matrix() -> MapMatrix {
        let c = complex_algebra();
        let e = ["1", "2*I", "1", "-3"].map(|s| cam(s).to_linear_map());
        MapMatrix::new(&c, 2, 2, e.to_vec()).unwrap()
    }

    #[test]
    fn entry_grammar() {
        assert_eq!(cam("1 + 2/3*I"), ComplexAdditiveMap::from_parts(q(1, 1), q(0, 1), q(2, 3), q(0, 1)));
        assert_eq!(cam("2∘I"), cam("2*I"));
        assert_eq!(cam("2i*I"), ComplexAdditiveMap::from_parts(q(0, 1), q(0, 1), q(0, 1), q(2, 1)));
        assert_eq!(cam("(1 + i)*I").b().coords(), &[q(1, 1), q(1, 1)]);
        assert_eq!(cam("-i"), ComplexAdditiveMap::from_parts(q(0, 1), q(-1, 1), q(0, 1), q(0, 1)));
        assert_eq!(cam("I"), ComplexAdditiveMap::conjugation());
        for bad in ["", "1 +", "1.5", "1 2", "(1", "x"] {
            assert!(bad.parse::<ComplexAdditiveMap>().is_err(), "{bad:?}");
        }
        assert!(parse_complex("1 + I").is_err());
        assert_eq!(parse_complex("3/5 - 2i").unwrap().to_string(), "3/5 - 2i");
    }

    #[test]
    fn display_round_trips() {
        for s in ["9/5 - 6/5*I", "1 + 2/3*I", "-3 - 2*I", "I", "-I", "2i*I", "1 + (1 + i)*I", "0", "i", "(-1/2*i)*I"] {
            let m = cam(s);
            assert_eq!(m.to_string().parse::<ComplexAdditiveMap>().unwrap(), m, "{s}");
        }
        assert_eq!(cam("9/5 - 6/5*I").to_string(), "9/5 - 6/5*I");
    }

    #[test]
    fn flattening_of_the_worked_system() {
        assert_eq!(
            example_matrix().flatten(),
            Matrix::from_ints(&[[1, 0, 2, 0], [0, 1, 0, -2], [1, 0, -3, 0], [0, 1, 0, -3]])
        );
    }

    #[test]
    fn worked_system() {
        let m = example_matrix();
        let c = complex_algebra();
        let rhs = [parse_complex("1").unwrap(), parse_complex("i").unwrap()];
        let x = solve_additive(&m, &rhs).unwrap();
        assert_eq!(x[0].to_string(), "3/5 - 2i");
        assert_eq!(x[1].to_string(), "1/5 - i");
        let inv = m.inverse().unwrap();
        let shown: Vec<String> =
            inv.entries().iter().map(|e| ComplexAdditiveMap::from_linear_map(e).unwrap().to_string()).collect();
        assert_eq!(shown, ["9/5 - 6/5*I", "-4/5 + 6/5*I", "3/5 - 2/5*I", "-3/5 + 2/5*I"]);
        let expected = [((0, 0), "1 + 2/3*I"), ((1, 0), "1 + 3/2*I"), ((0, 1), "3 + 2*I"), ((1, 1), "-3 - 2*I")];
        for ((i, j), s) in expected {
            let qd = quasideterminant(&m, i, j).unwrap();
            assert_eq!(qd, cam(s).to_linear_map(), "({i}, {j})");
            assert_eq!(quasideterminant_via_inverse(&m, i, j).unwrap(), qd);
        }
        assert_eq!(m.rc_product(&inv).unwrap(), MapMatrix::identity(&c, 2));
    }

    #[test]
    fn scalar_quasideterminant_and_singular_cases() {
        let c = complex_algebra();
        let l = |k: i64| left_shift(&AlgElement::from_ints(&c, &[k, 0]).unwrap());
        let m = MapMatrix::from_rows(&c, vec![vec![l(2), l(1)], vec![l(1), l(1)]]).unwrap();
        assert_eq!(quasideterminant(&m, 0, 0).unwrap(), l(1));
        let sing = MapMatrix::from_rows(&c, vec![vec![l(1), l(2)], vec![l(1), l(2)]]).unwrap();
        assert!(matches!(sing.inverse().unwrap_err(), Error::SingularSystem { .. }));
        let zero_corner = MapMatrix::from_rows(&c, vec![vec![l(0), l(1)], vec![l(1), l(0)]]).unwrap();
        assert!(matches!(quasideterminant(&zero_corner, 0, 0).unwrap_err(), Error::MinorSingular { .. }));
        assert_eq!(quasideterminant_via_inverse(&zero_corner, 0, 1).unwrap(), l(1));
        let d = MapMatrix::from_rows(&c, vec![vec![l(2), l(0)], vec![l(0), l(3)]]).unwrap();
        let rhs = [AlgElement::from_ints(&c, &[4, 0]).unwrap(), AlgElement::from_ints(&c, &[9, 0]).unwrap()];
        let x = solve_additive(&d, &rhs).unwrap();
        assert_eq!(x[0], AlgElement::from_ints(&c, &[2, 0]).unwrap());
        assert_eq!(x[1], AlgElement::from_ints(&c, &[3, 0]).unwrap());
    }

    #[test]
    fn complex_additive_algebra() {
        let i_map = ComplexAdditiveMap::conjugation();
        assert_eq!(i_map.compose(&i_map), ComplexAdditiveMap::identity());
        assert_eq!(i_map.inverse().unwrap(), i_map);
        let f = cam("1 + I");
        let g = cam("i");
        assert_eq!(f.compose(&g), cam("i - i*I"));
        assert_eq!(f.inverse().unwrap_err(), Error::SingularMap);
        assert_eq!(cam("2").inverse().unwrap(), cam("1/2"));
        let h = cam("1 + i + (2 - 3i)*I");
        let hi = h.inverse().unwrap();
        assert_eq!(h.compose(&hi), ComplexAdditiveMap::identity());
        assert_eq!(hi.compose(&h), ComplexAdditiveMap::identity());
        assert_eq!(hi.to_matrix(), h.to_matrix().inverse().unwrap());
        assert_eq!(ComplexAdditiveMap::from_matrix(&h.to_matrix()).unwrap(), h);
    }
}
