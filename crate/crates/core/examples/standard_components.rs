//! Converting between the coordinate matrix of a linear map and its
//! standard components, and the generators of all linear maps.

use fdalgebra::linmap::generators_pairwise_independent;
use fdalgebra::{
    b_matrix, complex_algebra, hamilton, octonion_algebra, representation_basis, standard_from_coords, Error,
    LinearMap, Matrix, Nesting, Result,
};

fn conjugation(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |r, c| match (r == c, r) {
        (false, _) => 0.into(),
        (true, 0) => 1.into(),
        (true, _) => (-1).into(),
    })
}

fn main() -> Result<()> {
    for alg in [complex_algebra(), hamilton(), octonion_algebra()] {
        let n = alg.dim();
        let label = alg.labels().join(",");
        println!("[{label}] rank B: left {}, right {}", b_matrix(&alg, Nesting::Left).rank(), b_matrix(&alg, Nesting::Right).rank());
        let conj = LinearMap::endo(&alg, conjugation(n))?;
        match standard_from_coords(&conj, Nesting::Left) {
            Ok(sol) => println!("conjugation has standard components f^kk = {}", sol.particular.component(0, 0)),
            Err(Error::NotRepresentable { rank_b, rank_augmented }) => {
                println!("conjugation is not representable (rank {rank_b}, augmented {rank_augmented})")
            }
            Err(e) => return Err(e),
        }
        let gens = representation_basis(&alg, Nesting::Left)?;
        println!("{} generator(s), pairwise independent: {}", gens.len(), generators_pairwise_independent(&gens, Nesting::Left));
        for g in gens.iter().skip(1) {
            println!("extra generator:\n{}", g.coords());
        }
    }
    Ok(())
}
