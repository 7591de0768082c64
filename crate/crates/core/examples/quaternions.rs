//! Quaternion algebras E(a, b): norms, inverses and rotations.

use fdalgebra::builtin::{inverse_element, norm_sq, rotate};
use fdalgebra::{hamilton, q, quaternion_algebra, AlgElement, QuaternionParams, Result};

fn main() -> Result<()> {
    let h = hamilton();
    let axis = AlgElement::new(&h, vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)])?;
    let v = AlgElement::new(&h, vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)])?;
    println!("rotating {v} by {axis}: {}", rotate(&axis, &v)?);

    let split = quaternion_algebra(&QuaternionParams::new(q(1, 1), q(1, 1))?);
    let i = AlgElement::basis(&split, 1);
    println!("in E(1, 1): i^2 = {}", &i * &i);
    let zero_divisor = AlgElement::new(&split, vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)])?;
    println!("|1 + i|^2 = {}", norm_sq(&zero_divisor)?);
    match inverse_element(&zero_divisor) {
        Ok(x) => println!("inverse {x}"),
        Err(e) => println!("1 + i has no inverse: {e}"),
    }

    let e = quaternion_algebra(&QuaternionParams::new(q(2, 1), q(-3, 1))?);
    let x = AlgElement::new(&e, vec![q(1, 1), q(1, 2), q(1, 3), q(1, 1)])?;
    println!("in E(2, -3): x = {x}, |x|^2 = {}, x x^-1 = {}", norm_sq(&x)?, &x * &inverse_element(&x)?);
    Ok(())
}
