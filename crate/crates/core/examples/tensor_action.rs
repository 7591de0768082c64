//! Tensor products of algebras and the action of A ⊗ A on linear maps.

use fdalgebra::linmap::sandwich;
use fdalgebra::{
    coords_from_standard, hamilton, orbit_contains, q, tensor_product, AlgElement, LinearMap, Nesting, Result, Tensor2,
};

fn main() -> Result<()> {
    let h = hamilton();
    let hh = tensor_product(&[h.clone(), h.clone()])?;
    println!("H ⊗ H has dimension {}, basis starts {:?}", hh.dim(), &hh.algebra().labels()[..5]);
    println!("H ⊗ H associative: {}, commutative: {}", hh.algebra().is_associative(), hh.algebra().is_commutative());

    let i = AlgElement::basis(&h, 1);
    let j = AlgElement::basis(&h, 2);
    let x = hh.decomposable(&[i.clone(), j.clone()])?;
    println!("(i⊗j)(i⊗j) = {}", hh.tensor_mul(&x, &x)?);

    // the tensor a⊗b sends f to x ↦ a f(x) b
    let f = LinearMap::identity(&h);
    let t = Tensor2::decomposable(&i, &j)?;
    let g = coords_from_standard(&t, &f, Nesting::Left)?;
    println!("(i⊗j) acting on the identity:\n{}", g.coords());
    assert_eq!(g, sandwich(&i, &f, &j, Nesting::Left)?);

    let s = Tensor2::decomposable(&AlgElement::unit(&h)?, &AlgElement::unit(&h)?)?
        .checked_add(&Tensor2::decomposable(&i, &i)?.scale(&q(1, 2)))?;
    let s_inv = s.inverse()?;
    println!("s =\n{s}\ns^-1 =\n{s_inv}");
    println!("s ∘ s^-1 = 1⊗1: {}", s.twisted_mul(&s_inv)? == Tensor2::unit(&h)?);

    let g = coords_from_standard(&s, &f, Nesting::Left)?;
    let back = orbit_contains(&f, &g, Nesting::Left).expect("s is invertible");
    println!("f recovered from s·f by {}", if coords_from_standard(&back, &g, Nesting::Left)? == f { "a tensor" } else { "nothing" });
    Ok(())
}
