//! Seeded random instances for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::additive::{ComplexAdditiveMap, MapMatrix};
use crate::algebra::{AlgElement, FreeAlgebra};
use crate::linmap::LinearMap;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::tensor::Tensor2;

/// Small rationals `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        Rational::new(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=5))
    }

    pub fn usize_below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn element(&mut self, alg: &FreeAlgebra) -> AlgElement {
        let coords = (0..alg.dim()).map(|_| self.rational()).collect();
        AlgElement::new(alg, coords).expect("dimension matches")
    }

    pub fn nonzero_element(&mut self, alg: &FreeAlgebra) -> AlgElement {
        loop {
            let x = self.element(alg);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.rational())
    }

    pub fn endomorphism(&mut self, alg: &FreeAlgebra) -> LinearMap {
        let n = alg.dim();
        LinearMap::endo(alg, self.matrix(n, n)).expect("square")
    }

    pub fn tensor(&mut self, alg: &FreeAlgebra) -> Tensor2 {
        let n = alg.dim();
        Tensor2::new(alg, self.matrix(n, n)).expect("square")
    }

    /// A sum of two decomposable tensors, which keeps the twisted-product
    /// inverse well conditioned for exact arithmetic.
    pub fn sparse_tensor(&mut self, alg: &FreeAlgebra) -> Tensor2 {
        let a = Tensor2::decomposable(&self.element(alg), &self.element(alg)).expect("same algebra");
        let b = Tensor2::decomposable(&self.element(alg), &self.element(alg)).expect("same algebra");
        a.checked_add(&b).expect("same algebra")
    }

    /// `a z + b conj(z)` with random complex `a`, `b`.
    pub fn complex_additive(&mut self) -> ComplexAdditiveMap {
        ComplexAdditiveMap::from_parts(self.rational(), self.rational(), self.rational(), self.rational())
    }

    /// Square matrix of random complex additive maps with an invertible flattening.
    pub fn invertible_complex_map_matrix(&mut self, alg: &FreeAlgebra, n: usize) -> MapMatrix {
        loop {
            let entries = (0..n * n).map(|_| self.complex_additive().to_linear_map()).collect();
            let m = MapMatrix::new(alg, n, n, entries).expect("shape");
            if m.flatten().rank() == 2 * n {
                return m;
            }
        }
    }
}
