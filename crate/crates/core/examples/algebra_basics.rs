//! Octonion arithmetic and a hand-written algebra: products, associators,
//! nucleus and center membership.

use fdalgebra::builtin::{conjugate, inverse_element, norm_sq};
use fdalgebra::{octonion_algebra, q, AlgElement, FreeAlgebra, Result};

fn main() -> Result<()> {
    let o = octonion_algebra();
    let e = |i| AlgElement::basis(&o, i);
    println!("e1 e2 = {}, e2 e1 = {}", &e(1) * &e(2), &e(2) * &e(1));
    println!("(e1 e2) e4 = {}, e1 (e2 e4) = {}", &(&e(1) * &e(2)) * &e(4), &e(1) * &(&e(2) * &e(4)));
    println!("associator (e1, e2, e4) = {}", e(1).associator(&e(2), &e(4))?);

    let x = AlgElement::new(&o, vec![q(1, 2), q(1, 1), q(0, 1), q(-2, 3), q(0, 1), q(0, 1), q(3, 1), q(0, 1)])?;
    println!("x = {x}");
    println!("conj(x) = {}", conjugate(&x)?);
    println!("|x|^2 = {}", norm_sq(&x)?);
    println!("x^-1 = {}", inverse_element(&x)?);
    println!("x x^-1 = {}", &x * &inverse_element(&x)?);
    println!("commutative: {}, associative: {}", o.is_commutative(), o.is_associative());
    println!("e1 in nucleus: {}, 1 in center: {}", e(1).in_nucleus(), e(0).in_center());

    // dual numbers: eps^2 = 0
    let dual = FreeAlgebra::new(
        2,
        vec!["1".into(), "eps".into()],
        vec![(0, 0, 0, q(1, 1)), (0, 1, 1, q(1, 1)), (1, 0, 1, q(1, 1))],
        Some(0),
    )?;
    let a = AlgElement::new(&dual, vec![q(3, 1), q(2, 1)])?;
    println!("in the dual numbers, (3 + 2eps)^2 = {}", &a * &a);
    println!("dual numbers commutative: {}, associative: {}", dual.is_commutative(), dual.is_associative());
    println!("opposite of the octonions equals them: {}", o.opposite() == o);
    Ok(())
}
