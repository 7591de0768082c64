//! A system of additive equations over C: z + 2 conj(w) = 1, z - 3w = i.

use fdalgebra::additive::{inverse_map_matrix, quasideterminant_via_inverse};
use fdalgebra::{complex_algebra, quasideterminant, solve_additive, AlgElement, ComplexAdditiveMap, MapMatrix, Result};

fn entry(s: &str) -> Result<fdalgebra::LinearMap> {
    Ok(s.parse::<ComplexAdditiveMap>()?.to_linear_map())
}

fn show(f: &fdalgebra::LinearMap) -> String {
    ComplexAdditiveMap::from_linear_map(f).map(|c| c.to_string()).unwrap_or_default()
}

fn main() -> Result<()> {
    let c = complex_algebra();
    let m = MapMatrix::from_rows(&c, vec![vec![entry("1")?, entry("2*I")?], vec![entry("1")?, entry("-3")?]])?;
    let rhs = vec![AlgElement::from_ints(&c, &[1, 0])?, AlgElement::from_ints(&c, &[0, 1])?];
    let x = solve_additive(&m, &rhs)?;
    println!("z = {}, w = {}", x[0], x[1]);

    println!("flattened:\n{}", m.flatten());
    let inv = inverse_map_matrix(&m)?;
    for i in 0..2 {
        println!("inverse row {i}: {} | {}", show(inv.get(i, 0)), show(inv.get(i, 1)));
    }
    for i in 0..2 {
        for j in 0..2 {
            let q = quasideterminant(&m, i, j)?;
            assert_eq!(q, quasideterminant_via_inverse(&m, i, j)?);
            println!("|M|_({i},{j}) = {}", show(&q));
        }
    }

    let f: ComplexAdditiveMap = "(1 + i) + 2*I".parse()?;
    let g = f.inverse()?;
    println!("f = {f}, f^-1 = {g}, f f^-1 = {}", f.compose(&g));
    Ok(())
}
