//! Linear maps between algebras, the `𝓑` matrix linking a map's coordinates
//! to its standard components, and generator discovery for `L(A; A)`.
//!
//! Coordinates are `f^k_m` with `k` indexing the target basis, so a map is a
//! `target.dim x source.dim` matrix. Vectorizing a map stacks rows (`k * n + m`);
//! vectorizing a tensor stacks `a^{ij}` as `i * n + j`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgElement, FreeAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{primitive_integer_vector, Matrix, Subspace};
use crate::rational::Rational;
use crate::tensor::Tensor2;

/// How `a ⊗ b` acts on a map in a possibly nonassociative algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Nesting {
    /// `x ↦ (a f(x)) b`.
    #[default]
    Left,
    /// `x ↦ a (f(x) b)`.
    Right,
}

impl FromStr for Nesting {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Nesting::Left),
            "right" => Ok(Nesting::Right),
            _ => Err(Error::Parse(format!("unknown nesting `{s}`, expected left or right"))),
        }
    }
}

impl fmt::Display for Nesting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Nesting::Left => "left",
            Nesting::Right => "right",
        })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    source: FreeAlgebra,
    target: FreeAlgebra,
    coords: Matrix,
}

impl LinearMap {
    pub fn new(source: &FreeAlgebra, target: &FreeAlgebra, coords: Matrix) -> Result<Self> {
        if coords.rows() != target.dim() || coords.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "coordinates are {}x{}, expected {}x{}",
                coords.rows(),
                coords.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(LinearMap { source: source.clone(), target: target.clone(), coords })
    }

    /// Endomorphism of `alg`.
    pub fn endo(alg: &FreeAlgebra, coords: Matrix) -> Result<Self> {
        Self::new(alg, alg, coords)
    }

    /// The identity map `δ`.
    pub fn identity(alg: &FreeAlgebra) -> Self {
        LinearMap { source: alg.clone(), target: alg.clone(), coords: Matrix::identity(alg.dim()) }
    }

    pub fn zero(source: &FreeAlgebra, target: &FreeAlgebra) -> Self {
        LinearMap { source: source.clone(), target: target.clone(), coords: Matrix::zeros(target.dim(), source.dim()) }
    }

    /// Endomorphism from a row-major vector of coordinates.
    pub fn from_vec(alg: &FreeAlgebra, v: Vec<Rational>) -> Result<Self> {
        let n = alg.dim();
        if v.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, actual: v.len() });
        }
        Self::endo(alg, Matrix::from_vec(n, n, v))
    }

    /// Map whose value on each source basis vector is `f(e_m)`.
    pub fn from_fn(
        source: &FreeAlgebra,
        target: &FreeAlgebra,
        mut f: impl FnMut(&AlgElement) -> Result<AlgElement>,
    ) -> Result<Self> {
        let mut coords = Matrix::zeros(target.dim(), source.dim());
        for m in 0..source.dim() {
            let y = f(&AlgElement::basis(source, m))?;
            if y.algebra() != target {
                return Err(Error::AlgebraMismatch);
            }
            for (k, v) in y.coords().iter().enumerate() {
                coords[(k, m)] = v.clone();
            }
        }
        Ok(LinearMap { source: source.clone(), target: target.clone(), coords })
    }

    pub fn source(&self) -> &FreeAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FreeAlgebra {
        &self.target
    }

    pub fn coords(&self) -> &Matrix {
        &self.coords
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.coords.data().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn apply(&self, x: &AlgElement) -> Result<AlgElement> {
        if x.algebra() != &self.source {
            return Err(Error::AlgebraMismatch);
        }
        AlgElement::new(&self.target, self.coords.mul_vec(x.coords()))
    }

    /// `self ∘ f`, i.e. apply `f` first.
    pub fn compose(&self, f: &LinearMap) -> Result<LinearMap> {
        if f.target != self.source {
            return Err(Error::AlgebraMismatch);
        }
        Ok(LinearMap { source: f.source.clone(), target: self.target.clone(), coords: self.coords.mul(&f.coords) })
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        Ok(LinearMap { coords: self.coords.add(&other.coords), ..self.clone() })
    }

    pub fn checked_sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        Ok(LinearMap { coords: self.coords.sub(&other.coords), ..self.clone() })
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap { coords: self.coords.scale(c), ..self.clone() }
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap { coords: self.coords.neg(), ..self.clone() }
    }

    /// Inverse map, `None` when the coordinate matrix is singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.coords.is_square() {
            return None;
        }
        let inv = self.coords.inverse()?;
        Some(LinearMap { source: self.target.clone(), target: self.source.clone(), coords: inv })
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords)
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({:?})", self.coords)
    }
}

pub fn apply(f: &LinearMap, x: &AlgElement) -> Result<AlgElement> {
    f.apply(x)
}

/// `g ∘ f`.
pub fn compose(g: &LinearMap, f: &LinearMap) -> Result<LinearMap> {
    g.compose(f)
}

/// `x ↦ (a f(x)) b` or `x ↦ a (f(x) b)`.
pub fn sandwich(a: &AlgElement, f: &LinearMap, b: &AlgElement, order: Nesting) -> Result<LinearMap> {
    if a.algebra() != f.target() || b.algebra() != f.target() {
        return Err(Error::AlgebraMismatch);
    }
    LinearMap::from_fn(f.source(), f.target(), |x| {
        let y = f.apply(x)?;
        match order {
            Nesting::Left => a.multiply(&y)?.multiply(b),
            Nesting::Right => a.multiply(&y.multiply(b)?),
        }
    })
}

/// `l(a): x ↦ ax`.
pub fn left_shift(a: &AlgElement) -> LinearMap {
    LinearMap::from_fn(a.algebra(), a.algebra(), |x| a.multiply(x)).expect("same algebra")
}

/// `r(a): x ↦ xa`.
pub fn right_shift(a: &AlgElement) -> LinearMap {
    LinearMap::from_fn(a.algebra(), a.algebra(), |x| x.multiply(a)).expect("same algebra")
}

/// `x ↦ (a, b, x)`.
pub fn associator_map_left(a: &AlgElement, b: &AlgElement) -> Result<LinearMap> {
    LinearMap::from_fn(a.algebra(), a.algebra(), |x| a.associator(b, x))
}

/// `x ↦ (x, b, a)`.
pub fn associator_map_right(b: &AlgElement, a: &AlgElement) -> Result<LinearMap> {
    LinearMap::from_fn(a.algebra(), a.algebra(), |x| x.associator(b, a))
}

/// The `n^2 x n^2` matrix taking standard components to coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMatrix {
    algebra: FreeAlgebra,
    order: Nesting,
    entries: Matrix,
}

impl BMatrix {
    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn order(&self) -> Nesting {
        self.order
    }

    /// Row `k * n + m`, column `i * n + j`.
    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn entry(&self, k: usize, m: usize, i: usize, j: usize) -> &Rational {
        let n = self.algebra.dim();
        &self.entries[(k * n + m, i * n + j)]
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }
}

fn build_b_matrix(alg: &FreeAlgebra, order: Nesting) -> Matrix {
    let n = alg.dim();
    let mut out = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            for m in 0..n {
                match order {
                    Nesting::Left => {
                        for (p, b1) in alg.basis_product(i, m) {
                            for (k, b2) in alg.basis_product(*p, j) {
                                out[(k * n + m, col)] += &(b1 * b2);
                            }
                        }
                    }
                    Nesting::Right => {
                        for (p, b1) in alg.basis_product(m, j) {
                            for (k, b2) in alg.basis_product(i, *p) {
                                out[(k * n + m, col)] += &(b1 * b2);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Left-nested entries `sum_p B^p_{im} B^k_{pj}`, right-nested `sum_p B^k_{ip} B^p_{mj}`.
/// Built once per algebra and order.
pub fn b_matrix(alg: &FreeAlgebra, order: Nesting) -> BMatrix {
    let entries = alg.b_cache(order == Nesting::Right).get_or_init(|| build_b_matrix(alg, order)).clone();
    BMatrix { algebra: alg.clone(), order, entries }
}

fn b_entries(alg: &FreeAlgebra, order: Nesting) -> &Matrix {
    alg.b_cache(order == Nesting::Right).get_or_init(|| build_b_matrix(alg, order))
}

/// Coordinates of `t ∘ f`, the map `x ↦ sum t^{ij} e_i f(x) e_j`.
pub fn coords_from_standard(t: &Tensor2, f: &LinearMap, order: Nesting) -> Result<LinearMap> {
    let alg = f.target();
    if t.algebra() != alg {
        return Err(Error::AlgebraMismatch);
    }
    let n = alg.dim();
    let m_t = Matrix::from_vec(n, n, b_entries(alg, order).mul_vec(&t.to_vec()));
    LinearMap::new(f.source(), alg, m_t.mul(f.coords()))
}

/// Solutions `t` of `t ∘ δ = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSolution {
    pub particular: Tensor2,
    pub nullspace: Vec<Tensor2>,
    pub rank: usize,
}

impl StandardSolution {
    pub fn is_unique(&self) -> bool {
        self.nullspace.is_empty()
    }
}

/// Standard components of an endomorphism `g`.
pub fn standard_from_coords(g: &LinearMap, order: Nesting) -> Result<StandardSolution> {
    let alg = g.source();
    if g.target() != alg {
        return Err(Error::AlgebraMismatch);
    }
    let b = b_entries(alg, order);
    let sol = b.solve(&g.to_vec());
    let Some(particular) = sol.particular else {
        let aug = b.hconcat(&Matrix::from_vec(b.rows(), 1, g.to_vec()));
        return Err(Error::NotRepresentable { rank_b: sol.rank, rank_augmented: aug.rank() });
    };
    Ok(StandardSolution {
        particular: Tensor2::from_vec(alg, particular)?,
        nullspace: sol.nullspace.into_iter().map(|v| Tensor2::from_vec(alg, v)).collect::<Result<_>>()?,
        rank: sol.rank,
    })
}

/// Matrix `K` with `vec(t ∘ f) = K vec(t)`; its column space is the orbit of `f`.
pub fn orbit_matrix(f: &LinearMap, order: Nesting) -> Matrix {
    let alg = f.target();
    let n = alg.dim();
    let s = f.source().dim();
    let b = b_entries(alg, order);
    let fc = f.coords();
    Matrix::from_fn(n * s, n * n, |row, col| {
        let (k, l) = (row / s, row % s);
        (0..n)
            .filter(|&m| !fc[(m, l)].is_zero())
            .map(|m| &b[(k * n + m, col)] * &fc[(m, l)])
            .sum()
    })
}

/// Some `t` with `t ∘ f = g`, if one exists.
pub fn orbit_contains(g: &LinearMap, f: &LinearMap, order: Nesting) -> Option<Tensor2> {
    if g.source() != f.source() || g.target() != f.target() {
        return None;
    }
    let k = orbit_matrix(f, order);
    let sol = k.solve(&g.to_vec()).particular?;
    Tensor2::from_vec(f.target(), sol).ok()
}

/// Generators whose orbits together span `L(A; A)`, starting with `δ`.
///
/// While the orbits do not cover everything, the first standard coordinate
/// matrix outside their span is projected onto the orthogonal complement of
/// the span and scaled to a primitive integer matrix, which becomes the next
/// generator.
pub fn representation_basis(alg: &FreeAlgebra, order: Nesting) -> Result<Vec<LinearMap>> {
    if alg.unit_index().is_none() {
        return Err(Error::NoUnit);
    }
    let n = alg.dim();
    let mut span = Subspace::new(n * n);
    let mut gens = Vec::new();
    let mut next = LinearMap::identity(alg);
    loop {
        let k = orbit_matrix(&next, order);
        for c in 0..k.cols() {
            span.insert(&k.column(c));
        }
        gens.push(next);
        if span.is_full() {
            return Ok(gens);
        }
        let p = (0..n * n)
            .find(|&p| {
                let mut e = vec![Rational::zero(); n * n];
                e[p] = Rational::one();
                !span.contains(&e)
            })
            .expect("span is not full");
        let mut e = vec![Rational::zero(); n * n];
        e[p] = Rational::one();
        let h = primitive_integer_vector(&span.orthogonal_residual(&e));
        next = LinearMap::from_vec(alg, h)?;
    }
}

/// True when no generator lies in the orbit of another.
pub fn generators_pairwise_independent(gens: &[LinearMap], order: Nesting) -> bool {
    gens.iter().enumerate().all(|(a, g)| {
        gens.iter().enumerate().all(|(b, f)| a == b || orbit_contains(g, f, order).is_none())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{complex_algebra, hamilton, octonion_algebra};
    use crate::rational::q;

    fn conj_map(alg: &FreeAlgebra) -> LinearMap {
        let n = alg.dim();
        LinearMap::endo(alg, Matrix::from_fn(n, n, |r, c| {
            if r != c {
                Rational::zero()
            } else if r == 0 {
                Rational::one()
            } else {
                Rational::from(-1)
            }
        }))
        .unwrap()
    }

    #[test]
    fn complex_b_matrix_first_row() {
        let c = complex_algebra();
        let b = b_matrix(&c, Nesting::Left);
        let row: Vec<Rational> = b.entries().row(0).to_vec();
        assert_eq!(row, vec![q(1, 1), q(0, 1), q(0, 1), q(-1, 1)]);
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn complex_conjugation_is_not_representable() {
        let c = complex_algebra();
        let err = standard_from_coords(&conj_map(&c), Nesting::Left).unwrap_err();
        assert_eq!(err, Error::NotRepresentable { rank_b: 2, rank_augmented: 3 });
        let id = LinearMap::identity(&c);
        assert!(orbit_contains(&id, &conj_map(&c), Nesting::Left).is_none());
        assert!(orbit_contains(&conj_map(&c), &id, Nesting::Left).is_none());
    }

    #[test]
    fn quaternion_conjugation_components() {
        let h = hamilton();
        let sol = standard_from_coords(&conj_map(&h), Nesting::Left).unwrap();
        assert!(sol.is_unique());
        assert_eq!(sol.rank, 16);
        let expected = Tensor2::new(&h, Matrix::identity(4).scale(&q(-1, 2))).unwrap();
        assert_eq!(sol.particular, expected);
    }

    #[test]
    fn shifts_and_sandwich() {
        let h = hamilton();
        let e = |i| AlgElement::basis(&h, i);
        assert_eq!(left_shift(&e(1)).apply(&e(2)).unwrap(), e(3));
        assert_eq!(left_shift(&e(0)), LinearMap::identity(&h));
        assert_eq!(left_shift(&e(1)).compose(&left_shift(&e(2))).unwrap(), left_shift(&e(3)));
        let s = sandwich(&e(1), &LinearMap::identity(&h), &e(2), Nesting::Left).unwrap();
        for m in 0..4 {
            assert_eq!(s.apply(&e(m)).unwrap(), &(&e(1) * &e(m)) * &e(2));
        }
        let o = octonion_algebra();
        let f = |i| AlgElement::basis(&o, i);
        let id = LinearMap::identity(&o);
        assert_ne!(
            sandwich(&f(1), &id, &f(2), Nesting::Left).unwrap(),
            sandwich(&f(1), &id, &f(2), Nesting::Right).unwrap()
        );
        assert_ne!(left_shift(&f(1)).compose(&left_shift(&f(2))).unwrap(), left_shift(&(&f(1) * &f(2))));
    }

    #[test]
    fn bases_of_builtins() {
        let c = complex_algebra();
        let gens = representation_basis(&c, Nesting::Left).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1], conj_map(&c));
        assert!(generators_pairwise_independent(&gens, Nesting::Left));
        assert_eq!(representation_basis(&hamilton(), Nesting::Left).unwrap().len(), 1);
        let unitless = FreeAlgebra::new(1, vec![], vec![], None).unwrap();
        assert_eq!(representation_basis(&unitless, Nesting::Left).unwrap_err(), Error::NoUnit);
    }
}
